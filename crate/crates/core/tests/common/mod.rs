#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unalg::{GroupAction, UnaryAlgebra};

pub const S3_GENS: &str = "(0,4)(1,3)(2,5);(0,1,2)(3,4,5)";
pub const C2_A4_GENS: &str =
    "(8,9)(10,11)(4,5)(6,7);(2,6,11)(8,0,5)(10,3,7)(4,9,1);(2,1)(8,10)(4,6)(0,3)(9,11)(5,7)";

/// Seed from `UNALG_SEED`, or a fixed default.
pub fn seed() -> u64 {
    std::env::var("UNALG_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_240_611)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn s3() -> UnaryAlgebra {
    GroupAction::parse(S3_GENS, 6)
        .unwrap()
        .regular_action()
        .unwrap()
}

pub fn c2_a4() -> UnaryAlgebra {
    GroupAction::parse(C2_A4_GENS, 12).unwrap().to_algebra()
}

/// An algebra on `n` points with `ops` uniformly random maps.
pub fn random_algebra(rng: &mut impl Rng, n: usize, ops: usize) -> UnaryAlgebra {
    let mut alg = UnaryAlgebra::new("random", n);
    for i in 0..ops {
        let map = (0..n).map(|_| rng.random_range(0..n)).collect();
        alg.add_op(format!("f{i}"), map).unwrap();
    }
    alg
}

/// A uniformly random permutation of `0..n` as a map.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}
