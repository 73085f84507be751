#![no_main]

use libfuzzer_sys::fuzz_target;

// The parser must never panic on arbitrary input, in strict or lax mode.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = lie2::fmt::parse(text, true);
    let _ = lie2::fmt::parse(text, false);
});
