#![no_main]

use libfuzzer_sys::fuzz_target;

use asm_core::SignMatrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = SignMatrix::parse(text) {
        // validity predicates must not panic on arbitrary sign matrices
        let _ = m.is_asm();
        let _ = m.is_side_valid();
        let back = SignMatrix::parse(&m.to_string()).expect("rendering must re-parse");
        assert_eq!(back, m);
    }
});
