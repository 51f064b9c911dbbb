#![no_main]

use libfuzzer_sys::fuzz_target;

use asm_core::parse_row;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_row(text) {
        let joined = values
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        assert_eq!(parse_row(&joined).expect("rendering must re-parse"), values);
    }
});
