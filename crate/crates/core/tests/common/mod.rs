#![allow(dead_code)]

pub mod criteria;
pub mod gen;
pub mod koszul;
pub mod oracle;
pub mod props;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewpbw::session::{parse_session, Session};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn plane_session() -> Session {
    parse_session(include_str!("../../fixtures/plane.session")).unwrap()
}
