#![no_main]

use libfuzzer_sys::fuzz_target;

use asm_core::MultiPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Parsing must never panic, and anything accepted must round-trip
    // through the canonical rendering unchanged.
    if let Ok(poly) = MultiPoly::parse(text) {
        let canonical = poly.to_string();
        let back = MultiPoly::parse_with_arity(&canonical, poly.arity())
            .expect("canonical form must re-parse");
        assert_eq!(back, poly);
    }
});
