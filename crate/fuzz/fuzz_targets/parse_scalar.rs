#![no_main]

use libfuzzer_sys::fuzz_target;

// Rational literals: parsing never panics, and accepted values display back
// to a string that parses to the same value.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = text.parse::<lie2::scalar::Scalar>() {
        let shown = s.to_string();
        let back: lie2::scalar::Scalar = shown.parse().expect("display must parse");
        assert_eq!(s, back);
    }
});
