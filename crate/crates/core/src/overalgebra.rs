//! Overalgebras: copies of a base algebra glued at tie-points, with operations
//! chosen so the restriction map on congruences has prescribed fibers.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::error::{check_cap, input, Result};
use crate::gset::GroupAction;
use crate::lattice::FiniteLattice;
use crate::partition::{bell, Partition};
use crate::unary_algebra::{Residuation, UnaryAlgebra};
use crate::Caps;

/// Which construction produced an overalgebra, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// One copy per tie-point, each meeting the base in that point.
    I { ties: Vec<usize> },
    /// Construction I over the concatenated groups, plus one collapsing op per group.
    Xo { groups: Vec<Vec<usize>> },
    /// A chain of `K+2` copies driven by `K` generating pairs.
    II { pairs: Vec<(usize, usize)> },
    /// A chain of `(2Q+1)K+1` copies driven by `K-1` generating pairs.
    III {
        pairs: Vec<(usize, usize)>,
        q: usize,
    },
}

/// A built overalgebra with its copy layout.
#[derive(Debug, Clone)]
pub struct OveralgebraResult {
    pub algebra: UnaryAlgebra,
    pub base: UnaryAlgebra,
    pub construction: Construction,
    labels: Vec<Vec<usize>>,
    retraction: String,
}

impl OveralgebraResult {
    pub fn base_size(&self) -> usize {
        self.base.size()
    }

    pub fn copy_count(&self) -> usize {
        self.labels.len()
    }

    /// Global label of base position `pos` in copy `copy`.
    pub fn label(&self, copy: usize, pos: usize) -> usize {
        self.labels[copy][pos]
    }

    /// Labels of one copy in base-position order.
    pub fn copy_labels(&self, copy: usize) -> &[usize] {
        &self.labels[copy]
    }

    /// The `(copy, position)` of a label, taking the least copy for shared points.
    pub fn locate(&self, label: usize) -> Option<(usize, usize)> {
        self.labels
            .iter()
            .enumerate()
            .find_map(|(c, row)| row.iter().position(|&l| l == label).map(|p| (c, p)))
    }

    /// Name of the idempotent operation whose image is the base.
    pub fn retraction(&self) -> &str {
        &self.retraction
    }

    pub fn residuation(&self) -> Result<Residuation<'_>> {
        Residuation::new(&self.algebra, &self.retraction)
    }

    /// The base congruence the construction is built around, where there is one.
    pub fn beta(&self) -> Result<Option<Partition>> {
        let pairs: Vec<(usize, usize)> = match &self.construction {
            Construction::I { .. } => return Ok(None),
            Construction::Xo { groups } => groups
                .iter()
                .flat_map(|g| g.windows(2).map(|w| (w[0], w[1])))
                .collect(),
            Construction::II { pairs } | Construction::III { pairs, .. } => pairs.clone(),
        };
        Ok(Some(self.base.cg(&pairs)?))
    }
}

type Pos = (usize, usize);

struct Layout {
    labels: Vec<Vec<usize>>,
    reps: Vec<Vec<Pos>>,
}

/// Copy 0 takes labels `0..n`; copy `j` shares its position `own` with
/// `(parent, parent_pos)` and takes fresh labels elsewhere in position order.
fn layout(n: usize, links: &[(usize, usize, usize)], caps: &Caps) -> Result<Layout> {
    let size = n + links.len() * n.saturating_sub(1);
    check_cap("overalgebra size", size, caps.point_count)?;
    let mut labels = vec![(0..n).collect::<Vec<_>>()];
    let mut next = n;
    for &(own, parent, parent_pos) in links {
        let shared = labels[parent][parent_pos];
        let row = (0..n)
            .map(|p| {
                if p == own {
                    shared
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        labels.push(row);
    }
    let mut reps = vec![Vec::new(); next];
    for (c, row) in labels.iter().enumerate() {
        for (p, &l) in row.iter().enumerate() {
            reps[l].push((c, p));
        }
    }
    Ok(Layout { labels, reps })
}

impl Layout {
    fn size(&self) -> usize {
        self.reps.len()
    }

    /// Tabulates an op given on `(copy, position)`, checking every representation agrees.
    fn op(&self, name: &str, f: impl Fn(Pos) -> Pos) -> Result<Vec<usize>> {
        self.reps
            .iter()
            .enumerate()
            .map(|(label, reps)| {
                let mut vals = reps.iter().map(|&r| {
                    let (c, p) = f(r);
                    self.labels[c][p]
                });
                let first = vals.next().expect("every label has a position");
                if vals.any(|v| v != first) {
                    return input(format!("op {name} is not well defined at label {label}"));
                }
                Ok(first)
            })
            .collect()
    }

    fn push(&self, alg: &mut UnaryAlgebra, name: String, f: impl Fn(Pos) -> Pos) -> Result<()> {
        let map = self.op(&name, f)?;
        alg.add_op(name, map)
    }
}

fn check_points(base: &UnaryAlgebra, pts: &[usize]) -> Result<()> {
    if let Some(&x) = pts.iter().find(|&&x| x >= base.size()) {
        return input(format!("point {x} outside the base"));
    }
    Ok(())
}

fn build_tied(
    base: &UnaryAlgebra,
    ties: &[usize],
    groups: Option<&[Vec<usize>]>,
    caps: &Caps,
) -> Result<(UnaryAlgebra, Layout)> {
    check_points(base, ties)?;
    let links: Vec<_> = ties.iter().map(|&t| (t, 0, t)).collect();
    let lay = layout(base.size(), &links, caps)?;
    let mut alg = UnaryAlgebra::new(format!("{}+", base.name()), lay.size());
    for k in 0..=ties.len() {
        lay.push(&mut alg, format!("e{k}"), |(_, p)| (k, p))?;
    }
    let tie_of = |c: usize, p: usize| if c == 0 { p } else { ties[c - 1] };
    lay.push(&mut alg, "s".into(), |(c, p)| (0, tie_of(c, p)))?;
    if let Some(groups) = groups {
        let mut start = 1;
        for (r, g) in groups.iter().enumerate() {
            let range = start..start + g.len();
            lay.push(&mut alg, format!("s{}", r + 1), |(c, p)| {
                if range.contains(&c) {
                    (0, tie_of(c, p))
                } else {
                    (c, p)
                }
            })?;
            start += g.len();
        }
    }
    for op in base.ops() {
        lay.push(&mut alg, format!("{}e0", op.name), |(_, p)| (0, op.map[p]))?;
    }
    Ok((alg, lay))
}

/// Construction I: one copy of the base per tie-point.
pub fn build_i(base: &UnaryAlgebra, ties: &[usize], caps: &Caps) -> Result<OveralgebraResult> {
    let mut sorted = ties.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return input("tie-points must be distinct");
    }
    if ties.len() > base.size() {
        return input("more tie-points than base points");
    }
    let (algebra, lay) = build_tied(base, ties, None, caps)?;
    Ok(OveralgebraResult {
        algebra,
        base: base.clone(),
        construction: Construction::I {
            ties: ties.to_vec(),
        },
        labels: lay.labels,
        retraction: "e0".into(),
    })
}

/// Construction I over every occurrence in `groups`, with one collapsing op `s<r>` per group.
pub fn build_xo(
    base: &UnaryAlgebra,
    groups: &[Vec<usize>],
    caps: &Caps,
) -> Result<OveralgebraResult> {
    if groups.is_empty() || groups.iter().any(|g| g.is_empty()) {
        return input("tie groups must be nonempty");
    }
    let ties: Vec<usize> = groups.concat();
    let (algebra, lay) = build_tied(base, &ties, Some(groups), caps)?;
    Ok(OveralgebraResult {
        algebra,
        base: base.clone(),
        construction: Construction::Xo {
            groups: groups.to_vec(),
        },
        labels: lay.labels,
        retraction: "e0".into(),
    })
}

#[derive(Debug, Clone, Copy)]
enum Role {
    /// Maps copies of the same group onto itself and everything else to `tie`.
    Hub { group: usize, tie: usize },
    /// Maps earlier copies to `left`, later copies to `right`.
    Link { left: usize, right: usize },
}

impl Role {
    fn left(self) -> usize {
        match self {
            Role::Hub { tie, .. } => tie,
            Role::Link { left, .. } => left,
        }
    }

    fn right(self) -> usize {
        match self {
            Role::Hub { tie, .. } => tie,
            Role::Link { right, .. } => right,
        }
    }
}

fn build_chain(
    base: &UnaryAlgebra,
    roles: &[Role],
    construction: Construction,
    caps: &Caps,
) -> Result<OveralgebraResult> {
    let links: Vec<_> = (1..roles.len())
        .map(|j| (roles[j].left(), j - 1, roles[j - 1].right()))
        .collect();
    let lay = layout(base.size(), &links, caps)?;
    let e = |i: usize, (c, p): Pos| -> usize {
        match roles[i] {
            Role::Hub { group, tie } => match roles[c] {
                Role::Hub { group: g, .. } if g == group => p,
                _ => tie,
            },
            Role::Link { left, right } => match c.cmp(&i) {
                std::cmp::Ordering::Less => left,
                std::cmp::Ordering::Equal => p,
                std::cmp::Ordering::Greater => right,
            },
        }
    };
    let mut alg = UnaryAlgebra::new(format!("{}+", base.name()), lay.size());
    for op in base.ops() {
        lay.push(&mut alg, format!("{}e0", op.name), |x| (0, op.map[e(0, x)]))?;
    }
    for i in 0..roles.len() {
        lay.push(&mut alg, format!("q{i}_0"), |x| (0, e(i, x)))?;
    }
    for j in 1..roles.len() {
        lay.push(&mut alg, format!("q0_{j}"), |x| (j, e(0, x)))?;
    }
    Ok(OveralgebraResult {
        algebra: alg,
        base: base.clone(),
        construction,
        labels: lay.labels,
        retraction: "q0_0".into(),
    })
}

fn check_pairs(base: &UnaryAlgebra, pairs: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in pairs {
        check_points(base, &[a, b])?;
        if a == b {
            return input(format!("degenerate pair ({a},{b})"));
        }
    }
    Ok(())
}

/// Construction II: copies `B_0..B_{K+1}` chained through the `K` pairs.
pub fn build_ii(
    base: &UnaryAlgebra,
    pairs: &[(usize, usize)],
    caps: &Caps,
) -> Result<OveralgebraResult> {
    if pairs.is_empty() {
        return input("at least one pair is required");
    }
    check_pairs(base, pairs)?;
    let k = pairs.len();
    let a1 = pairs[0].0;
    let mut roles = vec![Role::Hub { group: 0, tie: a1 }];
    roles.extend(pairs.iter().map(|&(a, b)| Role::Link { left: a, right: b }));
    roles.push(Role::Hub { group: 0, tie: a1 });
    debug_assert_eq!(roles.len(), k + 2);
    build_chain(
        base,
        &roles,
        Construction::II {
            pairs: pairs.to_vec(),
        },
        caps,
    )
}

/// Construction III: `2q+1` alternating runs of `K` copies driven by `K-1` pairs.
pub fn build_iii(
    base: &UnaryAlgebra,
    pairs: &[(usize, usize)],
    q: usize,
    caps: &Caps,
) -> Result<OveralgebraResult> {
    if pairs.is_empty() {
        return input("at least one pair is required");
    }
    check_pairs(base, pairs)?;
    let k = pairs.len() + 1;
    let a = |i: usize| pairs[i - 1].0;
    let b = |i: usize| pairs[i - 1].1;
    let last = (2 * q + 1) * k;
    let roles: Vec<Role> = (0..=last)
        .map(|j| {
            let (run, i) = (j / k, j % k);
            match (run % 2 == 0, i) {
                (true, 0) => Role::Hub {
                    group: 0,
                    tie: a(1),
                },
                (false, 0) => Role::Hub {
                    group: 1,
                    tie: b(k - 1),
                },
                (true, i) => Role::Link {
                    left: a(i),
                    right: b(i),
                },
                (false, i) => Role::Link {
                    left: b(k - i),
                    right: a(k - i),
                },
            }
        })
        .collect();
    build_chain(
        base,
        &roles,
        Construction::III {
            pairs: pairs.to_vec(),
            q,
        },
        caps,
    )
}

/// The maps `ĝ`, acting as `g` within every copy, for each non-identity `g` fixing every tie.
pub fn ghat_ops(
    result: &OveralgebraResult,
    action: &GroupAction,
) -> Result<Vec<(String, Vec<usize>)>> {
    let ties = match &result.construction {
        Construction::I { ties } => ties.clone(),
        Construction::Xo { groups } => groups.concat(),
        _ => return input("ghat maps are defined for Construction I overalgebras"),
    };
    if action.degree() != result.base_size() {
        return input("group action degree differs from the base size");
    }
    let mut out = Vec::new();
    for g in action.elements()? {
        if g.is_identity() || ties.iter().any(|&t| g.apply(t) != t) {
            continue;
        }
        let mut map = vec![0; result.algebra.size()];
        for (c, row) in result.labels.iter().enumerate() {
            for (p, &l) in row.iter().enumerate() {
                map[l] = result.labels[c][g.apply(p)];
            }
        }
        out.push((format!("ghat{}", out.len()), map));
    }
    Ok(out)
}

fn eq_lattice(k: usize) -> Result<FiniteLattice> {
    if k <= 1 {
        Ok(FiniteLattice::chain(1))
    } else {
        FiniteLattice::eq(k)
    }
}

fn power(l: &FiniteLattice, e: usize, factors: &mut Vec<FiniteLattice>) {
    factors.extend(std::iter::repeat_n(l.clone(), e));
}

/// Number of ties of `ties` in each block of `theta`, in block order.
fn ties_per_block(theta: &Partition, ties: &[usize]) -> Vec<usize> {
    theta
        .blocks()
        .iter()
        .map(|b| ties.iter().filter(|t| b.contains(t)).count())
        .collect()
}

/// The fiber over `theta` predicted by the construction, when there is a prediction.
pub fn predicted_fiber(
    result: &OveralgebraResult,
    theta: &Partition,
) -> Result<Option<FiniteLattice>> {
    if !result.base.is_congruence(theta)? {
        return input(format!("{theta} is not a congruence of the base"));
    }
    let m = theta.block_count();
    let mut factors = Vec::new();
    match &result.construction {
        Construction::I { ties } => {
            for c in ties_per_block(theta, ties) {
                power(&eq_lattice(c)?, m - 1, &mut factors);
            }
        }
        Construction::Xo { groups } => {
            let beta = result.beta()?.expect("XO has a base congruence");
            if theta.meet(&beta).is_bottom() {
            } else if beta.leq(theta) {
                for g in groups {
                    for c in ties_per_block(theta, g) {
                        power(&eq_lattice(c)?, m - 1, &mut factors);
                    }
                }
            } else {
                return Ok(None);
            }
        }
        Construction::II { .. } => {
            let beta = result.beta()?.expect("II has a base congruence");
            if beta.leq(theta) && !theta.is_top() {
                return Ok(Some(FiniteLattice::boolean(m - 1)));
            }
        }
        Construction::III { q, .. } => {
            let beta = result.beta()?.expect("III has a base congruence");
            if *theta != beta {
                return Ok(None);
            }
            power(&eq_lattice(q + 1)?, 2 * (m - 1), &mut factors);
        }
    }
    Ok(Some(if factors.is_empty() {
        FiniteLattice::chain(1)
    } else {
        FiniteLattice::product_of(&factors)
    }))
}

/// Union-find on the overalgebra seeded with `theta` inside every copy.
fn copywise(result: &OveralgebraResult, theta: &Partition) -> UnionFind<usize> {
    let mut uf = UnionFind::new(result.algebra.size());
    for row in &result.labels {
        for (x, &r) in theta.block_id().iter().enumerate() {
            uf.union(row[x], row[r]);
        }
    }
    uf
}

/// The closed form for `Cg(theta)`: `theta` copied into every copy, linked through shared points.
pub fn closed_form_star(result: &OveralgebraResult, theta: &Partition) -> Partition {
    Partition::from_union_find(&mut copywise(result, theta), result.algebra.size())
}

/// Which variant of the Construction III top formula to use for the odd-run copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HatVariant {
    /// Odd-run copies are glued in every block except the one holding their own tie.
    OwnTie,
    /// Odd-run copies are glued in every block except the one holding `a_1`.
    /// Wrong when `a_1` and `b_{K-1}` lie in different blocks.
    FirstTie,
}

/// The closed form for the top of the fiber over `theta`, where one is known.
pub fn closed_form_hat(
    result: &OveralgebraResult,
    theta: &Partition,
    variant: HatVariant,
) -> Result<Option<Partition>> {
    let n = result.algebra.size();
    let mut uf = copywise(result, theta);
    let blocks = theta.blocks();
    let labels = &result.labels;
    match &result.construction {
        Construction::I { ties } => {
            for r in &blocks {
                let copies: Vec<usize> = (1..labels.len())
                    .filter(|&j| r.contains(&ties[j - 1]))
                    .collect();
                for l in blocks.iter().filter(|l| l[0] != r[0]) {
                    for w in copies.windows(2) {
                        uf.union(labels[w[0]][l[0]], labels[w[1]][l[0]]);
                    }
                }
            }
        }
        Construction::Xo { .. } => return Ok(None),
        Construction::II { pairs } => {
            let beta = result.beta()?.expect("II has a base congruence");
            if beta.leq(theta) {
                let last = labels.len() - 1;
                for c in blocks.iter().filter(|c| !c.contains(&pairs[0].0)) {
                    uf.union(labels[0][c[0]], labels[last][c[0]]);
                }
            }
        }
        Construction::III { pairs, .. } => {
            let beta = result.beta()?.expect("III has a base congruence");
            if *theta != beta {
                return Ok(None);
            }
            let k = pairs.len() + 1;
            let (a1, bk) = (pairs[0].0, pairs[k - 2].1);
            for parity in [0, 1] {
                let hubs: Vec<usize> = (0..labels.len())
                    .filter(|j| j % k == 0 && (j / k) % 2 == parity)
                    .collect();
                let skip = if parity == 1 && variant == HatVariant::OwnTie {
                    bk
                } else {
                    a1
                };
                for c in blocks.iter().filter(|c| !c.contains(&skip)) {
                    for w in hubs.windows(2) {
                        uf.union(labels[w[0]][c[0]], labels[w[1]][c[0]]);
                    }
                }
            }
        }
    }
    Ok(Some(Partition::from_union_find(&mut uf, n)))
}

/// Number of equivalence relations between `lo` and `hi`; `None` on overflow.
pub fn equivalences_between(lo: &Partition, hi: &Partition) -> Option<u128> {
    let mut counts = vec![0usize; hi.len()];
    for x in lo.transversal() {
        counts[hi.block_id()[x]] += 1;
    }
    counts
        .into_iter()
        .filter(|&c| c > 0)
        .try_fold(1u128, |acc, c| acc.checked_mul(bell(c)?))
}

/// Facts about the fiber of the restriction map over one base congruence.
#[derive(Debug, Clone)]
pub struct FiberReport {
    pub theta: Partition,
    pub star: Partition,
    pub hat: Partition,
    pub fiber_size: usize,
    /// Equivalence relations between `star` and `hat`.
    pub interval_size: Option<u128>,
    pub predicted_size: Option<usize>,
    /// Fiber isomorphic to the predicted lattice.
    pub matches_prediction: Option<bool>,
    pub star_formula_holds: bool,
    pub hat_formula_holds: Option<bool>,
    /// Construction III only: the [`HatVariant::FirstTie`] top formula.
    pub hat_first_tie_formula_holds: Option<bool>,
}

impl FiberReport {
    /// Fiber equals every equivalence relation between its endpoints.
    pub fn is_full_interval(&self) -> bool {
        self.interval_size == Some(self.fiber_size as u128)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub con_size: usize,
    pub fibers: Vec<FiberReport>,
}

impl VerifyReport {
    /// Every prediction and closed form that applies holds.
    pub fn all_hold(&self) -> bool {
        self.fibers.iter().all(|f| {
            f.star_formula_holds
                && f.matches_prediction != Some(false)
                && f.hat_formula_holds != Some(false)
        })
    }
}

/// Computes every fiber of the restriction map and checks it against the predictions and closed forms.
pub fn verify_fibers(result: &OveralgebraResult, caps: &Caps) -> Result<VerifyReport> {
    let con = result.algebra.con_lattice_with(caps)?;
    let base_con = result.base.con_lattice_with(caps)?;
    let res = result.residuation()?;
    let restricted: Vec<Partition> = con
        .elements()
        .iter()
        .map(|a| res.restrict_con(a))
        .collect::<Result<_>>()?;
    let fibers = base_con
        .elements()
        .par_iter()
        .map(|theta| -> Result<FiberReport> {
            let star = res.star(theta)?;
            let hat = res.hat(theta)?;
            let members: Vec<&Partition> = con
                .elements()
                .iter()
                .zip(&restricted)
                .filter(|(_, r)| *r == theta)
                .map(|(a, _)| a)
                .collect();
            let predicted = predicted_fiber(result, theta)?;
            let matches_prediction = match &predicted {
                Some(p) if p.size() == members.len() => {
                    let fiber =
                        FiniteLattice::from_leq(members.len(), |i, j| members[i].leq(members[j]))?;
                    let cap = caps.iso.max(p.size());
                    Some(fiber.isomorphism_capped(p, cap)?.is_some())
                }
                Some(_) => Some(false),
                None => None,
            };
            let hat_formula = closed_form_hat(result, theta, HatVariant::OwnTie)?;
            let hat_first_tie = match result.construction {
                Construction::III { .. } => closed_form_hat(result, theta, HatVariant::FirstTie)?,
                _ => None,
            };
            Ok(FiberReport {
                interval_size: equivalences_between(&star, &hat),
                predicted_size: predicted.as_ref().map(|p| p.size()),
                matches_prediction,
                star_formula_holds: closed_form_star(result, theta) == star,
                hat_formula_holds: hat_formula.map(|h| h == hat),
                hat_first_tie_formula_holds: hat_first_tie.map(|h| h == hat),
                fiber_size: members.len(),
                theta: theta.clone(),
                star,
                hat,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        con_size: con.len(),
        fibers,
    })
}

/// Construction I over the second half of a `2N`-point base whose congruences are
/// exactly `0`, the pairing `i ~ N+i`, the halves, and `1`, with each op of `lc`
/// added as `x -> f0(s(x))` where `f0` applies the op to both halves.
pub fn parallel_sum_embed(
    base: &UnaryAlgebra,
    lc: &UnaryAlgebra,
    caps: &Caps,
) -> Result<OveralgebraResult> {
    let n = lc.size();
    if n == 0 || base.size() != 2 * n {
        return input("base must have twice as many points as the inner algebra");
    }
    let pairing = Partition::from_pairs(2 * n, &(0..n).map(|i| (i, n + i)).collect::<Vec<_>>())?;
    let halves = Partition::from_labels(&(0..2 * n).map(|x| x < n).collect::<Vec<_>>());
    let mut expected = vec![
        Partition::bottom(2 * n),
        pairing,
        halves,
        Partition::top(2 * n),
    ];
    expected.sort();
    expected.dedup();
    if base.con_lattice_with(caps)?.elements() != expected.as_slice() {
        return input("base congruences are not the required 2x2 shape");
    }
    let ties: Vec<usize> = (n..2 * n).collect();
    let mut result = build_i(base, &ties, caps)?;
    let s = result
        .algebra
        .op("s")
        .expect("construction I has s")
        .map
        .clone();
    for op in lc.ops() {
        let f0 = |x: usize| if x < n { op.map[x] } else { n + op.map[x - n] };
        let map = s.iter().map(|&y| f0(y)).collect();
        result.algebra.add_op(format!("{}hat", op.name), map)?;
    }
    Ok(result)
}
