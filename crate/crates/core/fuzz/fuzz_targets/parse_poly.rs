#![no_main]

use libfuzzer_sys::fuzz_target;
use skewpbw::algebra::presets::{anticommuting_plane, weyl};
use skewpbw::render::poly_text;
use skewpbw::session::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Bound exponents so that normalizing products stays cheap.
    if text.len() > 256 {
        return;
    }
    for alg in [anticommuting_plane(), weyl()] {
        if let Ok(p) = parse_poly(&alg, text) {
            assert_eq!(parse_poly(&alg, &poly_text(&alg, &p)).unwrap(), p);
        }
    }
});
