#![no_main]

use libfuzzer_sys::fuzz_target;
use skewpbw::algebra::presets::anticommuting_plane;
use skewpbw::render::matrix_text;
use skewpbw::session::parse_matrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 1024 {
        return;
    }
    let alg = anticommuting_plane();
    if let Ok(m) = parse_matrix(&alg, text) {
        assert_eq!(parse_matrix(&alg, &matrix_text(&alg, &m)).unwrap(), m);
    }
});
