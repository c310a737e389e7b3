#![no_main]

use libfuzzer_sys::fuzz_target;
use skewpbw::render::session_text;
use skewpbw::session::parse_session;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_session(text) {
        let again = parse_session(&session_text(&s)).expect("rendered session parses");
        assert_eq!(again, s);
    }
});
