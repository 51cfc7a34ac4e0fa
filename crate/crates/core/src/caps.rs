/// Resource caps shared by the capped operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest n for exhaustive partition enumeration.
    pub partition_n: usize,
    /// Largest n for the lambda/rho brute-force searches.
    pub lambda_n: usize,
    /// Largest enumerated group order.
    pub group_order: usize,
    /// Largest carrier for generated algebras (cosets, duals, overalgebras).
    pub point_count: usize,
    /// Largest congruence lattice built by join closure.
    pub con_size: usize,
    /// Largest unary-polynomial monoid built by composition closure.
    pub monoid: usize,
    /// Largest lattice handed to the isomorphism search.
    pub iso: usize,
    /// Largest number of maps returned by lambda.
    pub lambda_maps: usize,
    /// Largest carrier built by the coset-dual construction.
    pub dual_points: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            partition_n: 10,
            lambda_n: 8,
            group_order: 20_000,
            point_count: 5_000,
            con_size: 200_000,
            monoid: 100_000,
            iso: 200,
            lambda_maps: 1_000_000,
            dual_points: 1_000,
        }
    }
}
