//! Property tests over random partitions, algebras and lattices.

mod common;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use unalg::closure::{closure, lambda, respects, rho, MapSet, SubEq};
use unalg::io;
use unalg::overalgebra::build_i;
use unalg::partition::{enumerate_all, Partition};
use unalg::{Caps, UnaryAlgebra};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(common::seed()),
        failure_persistence: None,
        ..Config::default()
    }
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels))
}

fn partitions(
    n: usize,
    k: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Partition>> {
    prop::collection::vec(partition(n), k)
}

fn maps(n: usize, k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0..n, n), k)
}

fn algebra(
    n: std::ops::RangeInclusive<usize>,
    ops: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = UnaryAlgebra> {
    n.prop_flat_map(move |n| {
        maps(n, ops.clone()).prop_map(move |ms| {
            let mut alg = UnaryAlgebra::new("random", n);
            for (i, m) in ms.into_iter().enumerate() {
                alg.add_op(format!("f{i}"), m).unwrap();
            }
            alg
        })
    })
}

fn sized_pair(max: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
}

/// All maps `n -> n` respecting every member, by enumeration.
fn brute_lambda(l: &SubEq) -> Vec<Vec<usize>> {
    let n = l.points();
    let total = n.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let f: Vec<usize> = (0..n)
            .map(|_| {
                let v = c % n;
                c /= n;
                v
            })
            .collect();
        if l.members().iter().all(|p| respects(&f, p)) {
            out.push(f);
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn partition_lattice_laws((a, b, c) in sized_pair(7)) {
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert_eq!(a.leq(&b), a.meet(&b) == a);
        prop_assert_eq!(a.leq(&b), a.join(&b) == b);
        let n = a.len();
        prop_assert_eq!(a.meet(&Partition::top(n)), a.clone());
        prop_assert_eq!(a.join(&Partition::bottom(n)), a.clone());
        prop_assert_eq!(Partition::parse_sized(&a.to_string(), n).unwrap(), a);
    }

    #[test]
    fn cg_is_least_congruence(alg in algebra(1..=6, 0..=2), seed in any::<u64>()) {
        let n = alg.size();
        let pairs = vec![((seed % n as u64) as usize, ((seed >> 8) % n as u64) as usize)];
        let cg = alg.cg(&pairs).unwrap();
        prop_assert!(alg.is_congruence(&cg).unwrap());
        for theta in alg.con_lattice().unwrap().elements() {
            if pairs.iter().all(|&(x, y)| theta.same(x, y)) {
                prop_assert!(cg.leq(theta));
            }
        }
    }

    #[test]
    fn con_lattice_matches_exhaustive_filter(alg in algebra(1..=6, 0..=3)) {
        let expected: Vec<Partition> = enumerate_all(alg.size())
            .unwrap()
            .into_iter()
            .filter(|p| alg.is_congruence(p).unwrap())
            .collect();
        let mut got = alg.con_lattice().unwrap().elements().to_vec();
        got.sort();
        let mut expected = expected;
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn algebra_io_round_trip(alg in algebra(1..=8, 0..=4)) {
        let text = io::write_algebra(&alg);
        prop_assert_eq!(io::parse_algebra(&text).unwrap(), alg);
    }

    #[test]
    fn lattice_io_round_trip_and_dual(alg in algebra(1..=5, 0..=2)) {
        let l = alg.con_lattice().unwrap().to_lattice();
        let (_, back) = io::parse_lattice(&io::write_lattice("L", &l)).unwrap();
        prop_assert_eq!(&back, &l);
        prop_assert_eq!(l.dual().dual(), l.clone());
        prop_assert_eq!(l.dual().covers().len(), l.covers().len());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn pruned_lambda_matches_enumeration(n in 1usize..=4, gens in partitions(4, 1..=3)) {
        let gens: Vec<Partition> = gens.iter().map(|p| p.restrict(&(0..n).collect::<Vec<_>>()).unwrap()).collect();
        let l = SubEq::generated(n, &gens).unwrap();
        let fast = lambda(&l, &Caps::default()).unwrap();
        prop_assert_eq!(fast.maps().to_vec(), brute_lambda(&l));
    }

    #[test]
    fn galois_laws(gens in partitions(5, 1..=3)) {
        let caps = Caps::default();
        let l = SubEq::generated(5, &gens).unwrap();
        let lam = lambda(&l, &caps).unwrap();
        let closed = rho(&lam, &caps).unwrap();
        prop_assert!(l.is_subset(&closed));
        prop_assert_eq!(lambda(&closed, &caps).unwrap(), lam);
        prop_assert_eq!(closure(&closed, &caps).unwrap(), closed.clone());
        prop_assert!(closed.is_sublattice());
    }

    #[test]
    fn rho_lambda_on_maps(ms in maps(5, 1..=3)) {
        let caps = Caps::default();
        let h = MapSet::new(5, ms).unwrap();
        let relations = rho(&h, &caps).unwrap();
        let back = lambda(&relations, &caps).unwrap();
        prop_assert!(h.maps().iter().all(|f| back.contains(f)));
        prop_assert_eq!(rho(&back, &caps).unwrap(), relations);
    }

    #[test]
    fn residuation_on_construction_i(alg in algebra(2..=4, 1..=2), ties_seed in any::<u64>()) {
        let n = alg.size();
        let k = 1 + (ties_seed % 2) as usize;
        let mut ties: Vec<usize> = (0..n).collect();
        ties.rotate_left((ties_seed >> 4) as usize % n);
        ties.truncate(k);
        let r = build_i(&alg, &ties, &Caps::default()).unwrap();
        let res = r.residuation().unwrap();
        let con_a = r.algebra.con_lattice().unwrap();
        for beta in alg.con_lattice().unwrap().elements() {
            let star = res.star(beta).unwrap();
            let hat = res.hat(beta).unwrap();
            for a in con_a.elements() {
                let restricted = res.restrict_con(a).unwrap();
                prop_assert_eq!(&restricted == beta, star.leq(a) && a.leq(&hat));
            }
        }
    }
}
