#![no_main]

use libfuzzer_sys::fuzz_target;

use asm_core::VerificationReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // The structured report format must parse back into the report
    // types; accepted reports must survive a serialize/parse cycle.
    if let Ok(report) = serde_json::from_str::<VerificationReport>(text) {
        let json = serde_json::to_string(&report).expect("report serializes");
        let back: VerificationReport = serde_json::from_str(&json).expect("round-trip parses");
        assert_eq!(back, report);
    }
});
