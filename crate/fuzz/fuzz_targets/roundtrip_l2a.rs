#![no_main]

use libfuzzer_sys::fuzz_target;

// Documents that parse must re-emit to a canonical fixed point:
// parse(emit(doc)) == doc and emit is idempotent.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = lie2::fmt::parse(text, true) {
        let emitted = lie2::fmt::emit(&doc);
        let doc2 = lie2::fmt::parse(&emitted, true).expect("canonical emission must parse");
        assert_eq!(doc, doc2, "roundtrip changed the document");
        assert_eq!(lie2::fmt::emit(&doc2), emitted, "emission is not idempotent");
    }
});
