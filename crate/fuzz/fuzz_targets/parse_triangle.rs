#![no_main]

use libfuzzer_sys::fuzz_target;

use asm_core::MonotoneTriangle;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = MonotoneTriangle::parse(text) {
        let back = MonotoneTriangle::parse(&t.to_string()).expect("rendering must re-parse");
        assert_eq!(back, t);
    }
});
