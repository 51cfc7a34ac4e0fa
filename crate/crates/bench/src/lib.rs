//! Benchmark fixtures.

use unalg::closure::SubEq;
use unalg::partition::Partition;
use unalg::{GroupAction, UnaryAlgebra};

pub const S3_GENS: &str = "(0,4)(1,3)(2,5);(0,1,2)(3,4,5)";
pub const C2_A4_GENS: &str =
    "(8,9)(10,11)(4,5)(6,7);(2,6,11)(8,0,5)(10,3,7)(4,9,1);(2,1)(8,10)(4,6)(0,3)(9,11)(5,7)";

/// The regular action of S3 on six points.
pub fn s3() -> UnaryAlgebra {
    GroupAction::parse(S3_GENS, 6)
        .and_then(|g| g.regular_action())
        .expect("valid generators")
}

/// The twelve-point action of C2 x A4.
pub fn c2_a4() -> UnaryAlgebra {
    GroupAction::parse(C2_A4_GENS, 12)
        .expect("valid generators")
        .to_algebra()
}

/// The sublattice of Eq(5) generated by three partitions whose closure is everything.
pub fn snow() -> SubEq {
    let gens: Vec<Partition> = ["|0,1|2,3|4|", "|0|1,2|3,4|", "|0,2,4|1,3|"]
        .iter()
        .map(|p| Partition::parse_sized(p, 5).expect("valid partition"))
        .collect();
    SubEq::generated(5, &gens).expect("valid generators")
}
