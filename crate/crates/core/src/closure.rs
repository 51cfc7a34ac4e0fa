//! The lambda/rho correspondence between partitions and maps, and the
//! representation builders that rest on it.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{check_cap, input, Error, Result};
use crate::gset::GroupAction;
use crate::lattice::{generate_sublattice, FiniteLattice};
use crate::partition::{bell, enumerate_all_capped, Partition};
use crate::unary_algebra::UnaryAlgebra;
use crate::Caps;

/// A total self-map of `{0..n-1}` given by its image list.
pub type Map = Vec<usize>;

/// A set of partitions of `{0..n-1}`, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubEq {
    n: usize,
    members: Vec<Partition>,
}

impl SubEq {
    pub fn new(n: usize, members: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let mut members: Vec<Partition> = members.into_iter().collect();
        if let Some(p) = members.iter().find(|p| p.len() != n) {
            return input(format!("partition {p} is not on {n} points"));
        }
        members.sort();
        members.dedup();
        Ok(SubEq { n, members })
    }

    /// Like [`SubEq::new`] but rejects sets not closed under meet and join.
    pub fn sublattice(n: usize, members: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let s = SubEq::new(n, members)?;
        if !s.is_sublattice() {
            return input("partitions are not closed under meet and join");
        }
        Ok(s)
    }

    /// The sublattice generated by the given partitions.
    pub fn generated(n: usize, gens: &[Partition]) -> Result<Self> {
        let s = SubEq::new(n, gens.iter().cloned())?;
        if s.members.is_empty() {
            return Ok(s);
        }
        let (members, _) = generate_sublattice(&s.members);
        Ok(SubEq { n, members })
    }

    /// All of `Eq(n)`.
    pub fn full(n: usize, caps: &Caps) -> Result<Self> {
        SubEq::new(n, enumerate_all_capped(n, caps.partition_n)?)
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.members.binary_search(p).ok()
    }

    pub fn is_subset(&self, other: &SubEq) -> bool {
        self.members.iter().all(|p| other.contains(p))
    }

    pub fn is_sublattice(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members[..i]
                .iter()
                .all(|b| self.contains(&a.meet(b)) && self.contains(&a.join(b)))
        })
    }

    /// Contains the least and greatest partitions.
    pub fn is_spanning(&self) -> bool {
        self.contains(&Partition::bottom(self.n)) && self.contains(&Partition::top(self.n))
    }

    /// The abstract lattice, element `i` being `members()[i]`.
    pub fn to_lattice(&self) -> Result<FiniteLattice> {
        if self.members.is_empty() {
            return input("empty set of partitions");
        }
        FiniteLattice::from_leq(self.members.len(), |i, j| {
            self.members[i].leq(&self.members[j])
        })
    }
}

/// A set of total self-maps of `{0..n-1}`, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSet {
    n: usize,
    maps: Vec<Map>,
}

impl MapSet {
    pub fn new(n: usize, maps: impl IntoIterator<Item = Map>) -> Result<Self> {
        let mut maps: Vec<Map> = maps.into_iter().collect();
        for f in &maps {
            if f.len() != n || f.iter().any(|&v| v >= n) {
                return input(format!("{f:?} is not a total map on {n} points"));
            }
        }
        maps.sort();
        maps.dedup();
        Ok(MapSet { n, maps })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn maps(&self) -> &[Map] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, f: &[usize]) -> bool {
        self.maps.binary_search_by(|m| m.as_slice().cmp(f)).is_ok()
    }

    pub fn union(&self, other: &MapSet) -> Result<MapSet> {
        if self.n != other.n {
            return input("map sets on different point counts");
        }
        MapSet::new(self.n, self.maps.iter().chain(&other.maps).cloned())
    }

    /// Only constants and the identity.
    pub fn is_trivial(&self) -> bool {
        self.maps
            .iter()
            .all(|f| f.iter().enumerate().all(|(x, &y)| x == y) || f.iter().all(|&y| y == f[0]))
    }

    /// The algebra with these maps as operations `h0, h1, ...`.
    pub fn to_algebra(&self, name: &str) -> UnaryAlgebra {
        let mut alg = UnaryAlgebra::new(name, self.n);
        for (i, f) in self.maps.iter().enumerate() {
            alg.add_op(format!("h{i}"), f.clone())
                .expect("maps validated on construction");
        }
        alg
    }
}

/// True when `f` maps related points to related points.
pub fn respects(f: &[usize], p: &Partition) -> bool {
    assert_eq!(f.len(), p.len(), "map and partition sizes differ");
    let lead = p.block_id();
    (0..f.len()).all(|x| p.same(f[x], f[lead[x]]))
}

/// All maps respecting every member of `l`.
pub fn lambda(l: &SubEq, caps: &Caps) -> Result<MapSet> {
    let n = l.n;
    check_cap("lambda point count", n, caps.lambda_n)?;
    if n == 0 {
        return MapSet::new(0, [Vec::new()]);
    }
    let active: Vec<&Partition> = l
        .members
        .iter()
        .filter(|p| !p.is_bottom() && !p.is_top())
        .collect();
    // checks[x] lists (member, leader of x) with leader < x
    let checks: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|x| {
            active
                .iter()
                .enumerate()
                .filter(|(_, p)| p.block_id()[x] < x)
                .map(|(i, p)| (i, p.block_id()[x]))
                .collect()
        })
        .collect();
    let branches: Vec<Result<Vec<Map>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut f = vec![0; n];
            f[0] = first;
            lambda_dfs(&active, &checks, &mut f, 1, &mut out, caps.lambda_maps)?;
            Ok(out)
        })
        .collect();
    let mut maps = Vec::new();
    for b in branches {
        maps.extend(b?);
        check_cap("lambda map count", maps.len(), caps.lambda_maps)?;
    }
    Ok(MapSet { n, maps })
}

fn lambda_dfs(
    active: &[&Partition],
    checks: &[Vec<(usize, usize)>],
    f: &mut Map,
    x: usize,
    out: &mut Vec<Map>,
    cap: usize,
) -> Result<()> {
    let n = f.len();
    if x == n {
        out.push(f.clone());
        return check_cap("lambda map count", out.len(), cap);
    }
    for v in 0..n {
        if checks[x].iter().all(|&(i, r)| active[i].same(v, f[r])) {
            f[x] = v;
            lambda_dfs(active, checks, f, x + 1, out, cap)?;
        }
    }
    Ok(())
}

/// All partitions respected by every map of `h`.
pub fn rho(h: &MapSet, caps: &Caps) -> Result<SubEq> {
    check_cap("rho point count", h.n, caps.lambda_n)?;
    let con = h.to_algebra("rho").con_lattice_with(caps)?;
    SubEq::new(h.n, con.elements().iter().cloned())
}

/// The closure `rho(lambda(l))`.
pub fn closure(l: &SubEq, caps: &Caps) -> Result<SubEq> {
    rho(&lambda(l, caps)?, caps)
}

pub fn is_closed(l: &SubEq, caps: &Caps) -> Result<bool> {
    Ok(closure(l, caps)? == *l)
}

/// True when the closure is all of `Eq(n)`.
pub fn is_dense(l: &SubEq, caps: &Caps) -> Result<bool> {
    if l.n == 0 {
        return input("density needs at least one point");
    }
    let c = closure(l, caps)?;
    Ok(bell(l.n).is_some_and(|b| c.len() as u128 == b))
}

/// The generating partitions of a dense `M_{n+2}` on `2n+1` points, for `n` in 1..=3.
pub fn dense_mn_generators(n: usize) -> Result<Vec<Partition>> {
    let text: &[&str] = match n {
        1 => &["|0,1|2|", "|0|1,2|", "|0,2|1|"],
        2 => &["|0,1|2,3|4|", "|0|1,2|3,4|", "|0,2,4|1,3|", "|0,3|1,4|2|"],
        // The 7-point M3 of pair partitions plus evens/odds has no M4 extension,
        // so this is the first pairwise-complementary 5-set in canonical order.
        3 => &[
            "|0|1|2,3|4,5,6|",
            "|0,1,2|3,4|5|6|",
            "|0,3|1,5|2,6|4|",
            "|0,4|1,3,6|2,5|",
            "|0,6|1,4|2|3,5|",
        ],
        0 => return input("dense_mn needs n >= 1"),
        _ => {
            return Err(Error::Cap {
                what: "dense_mn parameter",
                value: n,
                limit: 3,
            })
        }
    };
    text.iter().map(|t| Partition::parse(t)).collect()
}

/// The dense `M_{n+2}` sublattice of `Eq(2n+1)`, with its M-shape checked.
pub fn dense_mn(n: usize, caps: &Caps) -> Result<SubEq> {
    let gens = dense_mn_generators(n)?;
    let size = 2 * n + 1;
    check_cap("dense_mn point count", size, caps.lambda_n)?;
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[..i] {
            if !a.meet(b).is_bottom() || !a.join(b).is_top() {
                return input(format!("{a} and {b} do not form an M-shape"));
            }
        }
    }
    let members = gens
        .into_iter()
        .chain([Partition::bottom(size), Partition::top(size)]);
    SubEq::sublattice(size, members)
}

/// Which sufficient conditions for non-density hold in a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondensityVerdict {
    /// First `alpha > 0` (by index) with the join of elements not above it below top, and that join.
    pub ideal_filter_witness: Option<(usize, usize)>,
    pub meet_primes: Vec<usize>,
    pub meet_semidistributive: bool,
    pub two_element: bool,
}

impl NondensityVerdict {
    /// True when some condition holds and the lattice is not the two-element chain.
    pub fn not_densely_embeddable(&self) -> bool {
        !self.two_element
            && (self.ideal_filter_witness.is_some()
                || !self.meet_primes.is_empty()
                || self.meet_semidistributive)
    }
}

pub fn nondensity_certificate(l: &FiniteLattice) -> NondensityVerdict {
    let witness = (0..l.size()).filter(|&a| a != l.bottom()).find_map(|a| {
        let j = (0..l.size())
            .filter(|&g| !l.leq(a, g))
            .fold(l.bottom(), |acc, g| l.join(acc, g));
        (j != l.top()).then_some((a, j))
    });
    NondensityVerdict {
        ideal_filter_witness: witness,
        meet_primes: l.meet_primes(),
        meet_semidistributive: l.is_meet_semidistributive(),
        two_element: l.size() == 2,
    }
}

/// The map sending `block` to `u` and everything else to `v`.
pub fn witness_map(n: usize, (u, v): (usize, usize), block: &[usize]) -> Result<Map> {
    if u == v {
        return input("witness pair must be distinct");
    }
    if u >= n || v >= n {
        return input("witness pair out of range");
    }
    let mut inside = vec![false; n];
    for &x in block {
        if x >= n {
            return input(format!("block point {x} out of range"));
        }
        inside[x] = true;
    }
    let count = inside.iter().filter(|&&b| b).count();
    if count == 0 || count == n {
        return input("witness block must be a nonempty proper subset");
    }
    Ok(inside.iter().map(|&b| if b { u } else { v }).collect())
}

/// For `theta` outside `alpha` above and `beta` below, a map respecting both and violating `theta`.
fn filter_ideal_witness(alpha: &Partition, beta: &Partition, theta: &Partition) -> Result<Map> {
    let (a, b) = alpha
        .pairs()
        .into_iter()
        .find(|&(a, b)| !theta.same(a, b))
        .ok_or_else(|| Error::Input(format!("{alpha} lies below {theta}")))?;
    let (u, _) = theta
        .pairs()
        .into_iter()
        .find(|&(u, v)| !beta.same(u, v))
        .ok_or_else(|| Error::Input(format!("{theta} lies below {beta}")))?;
    witness_map(alpha.len(), (a, b), &beta.block_of(u))
}

fn outside_filter_ideal<'a>(
    members: &'a [Partition],
    alpha: &'a Partition,
    beta: &'a Partition,
) -> impl Iterator<Item = &'a Partition> {
    members
        .iter()
        .filter(move |t| !alpha.leq(t) && !t.leq(beta))
}

/// `lambda(l)` plus one witness per member outside `alpha` above and `beta` below.
pub fn filter_ideal_representation(
    l: &SubEq,
    alpha: &Partition,
    beta: &Partition,
    caps: &Caps,
) -> Result<MapSet> {
    if !l.contains(alpha) || !l.contains(beta) {
        return input("alpha and beta must be members");
    }
    let base = lambda(l, caps)?;
    if rho(&base, caps)? != *l {
        return input("lattice is not closed");
    }
    let witnesses = outside_filter_ideal(&l.members, alpha, beta)
        .map(|t| filter_ideal_witness(alpha, beta, t))
        .collect::<Result<Vec<_>>>()?;
    base.union(&MapSet::new(l.n, witnesses)?)
}

/// The same construction over an algebra, adding the witnesses as new operations `w0, w1, ...`.
pub fn filter_ideal_algebra(
    alg: &UnaryAlgebra,
    alpha: &Partition,
    beta: &Partition,
    caps: &Caps,
) -> Result<UnaryAlgebra> {
    let con = alg.con_lattice_with(caps)?;
    if !con.contains(alpha) || !con.contains(beta) {
        return input("alpha and beta must be congruences");
    }
    let mut out = alg.clone();
    for (i, t) in outside_filter_ideal(con.elements(), alpha, beta).enumerate() {
        out.add_op(format!("w{i}"), filter_ideal_witness(alpha, beta, t)?)?;
    }
    Ok(out)
}

/// Witness maps whose generated algebra has congruence lattice exactly `l`,
/// for a spanning distributive sublattice `l`.
pub fn distributive_representation(l: &SubEq, caps: &Caps) -> Result<MapSet> {
    if !l.is_spanning() {
        return input("lattice must contain bottom and top");
    }
    if !l.is_sublattice() {
        return input("partitions are not a sublattice");
    }
    let lat = l.to_lattice()?;
    if !lat.is_distributive() {
        return input("lattice is not distributive");
    }
    let jis = lat.join_irreducibles();
    let mem = &l.members;
    let mut maps = Vec::new();
    for theta in enumerate_all_capped(l.n, caps.partition_n)? {
        if l.contains(&theta) {
            continue;
        }
        let upper = (0..mem.len())
            .filter(|&i| theta.leq(&mem[i]))
            .fold(lat.top(), |acc, i| lat.meet(acc, i));
        let lower = (0..mem.len())
            .filter(|&i| mem[i].leq(&theta))
            .fold(lat.bottom(), |acc, i| lat.join(acc, i));
        let alpha = *jis
            .iter()
            .find(|&&a| lat.leq(a, upper) && !lat.leq(a, lower))
            .expect("distributive lattice separates theta bounds");
        let beta = (0..mem.len())
            .filter(|&g| !lat.leq(alpha, g))
            .fold(lat.bottom(), |acc, g| lat.join(acc, g));
        let (u, v) = mem[alpha]
            .pairs()
            .into_iter()
            .find(|&(u, v)| !theta.same(u, v))
            .expect("alpha is not below theta");
        let (_, y) = theta
            .pairs()
            .into_iter()
            .find(|&(x, y)| !mem[beta].same(x, y))
            .expect("theta is not below beta");
        maps.push(witness_map(l.n, (u, v), &mem[beta].block_of(y))?);
    }
    MapSet::new(l.n, maps)
}

/// An idempotent map with `f(x) <= x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdDecreasingMap {
    map: Map,
}

impl IdDecreasingMap {
    pub fn new(map: Map) -> Result<Self> {
        for (x, &y) in map.iter().enumerate() {
            if y > x {
                return input(format!("{map:?} is not decreasing at {x}"));
            }
            if map[y] != y {
                return input(format!("{map:?} is not idempotent at {x}"));
            }
        }
        Ok(IdDecreasingMap { map })
    }

    /// The map sending each point to the least element of its block.
    pub fn from_partition(p: &Partition) -> Self {
        IdDecreasingMap {
            map: p.block_id().to_vec(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn kernel(&self) -> Partition {
        Partition::kernel_of_map(&self.map)
    }

    /// `self` below `other`, tested as `other` after `self` equals `other`.
    pub fn below(&self, other: &IdDecreasingMap) -> bool {
        self.map.len() == other.map.len()
            && (0..self.map.len()).all(|x| other.map[self.map[x]] == other.map[x])
    }
}

/// Every idempotent decreasing map on `n` points, lexicographically.
pub fn id_decreasing_maps(n: usize) -> Result<Vec<IdDecreasingMap>> {
    check_cap("ID point count", n, 7)?;
    let mut out = Vec::new();
    let mut f = vec![0; n];
    fn go(f: &mut Map, x: usize, out: &mut Vec<IdDecreasingMap>) {
        if x == f.len() {
            out.push(IdDecreasingMap { map: f.clone() });
            return;
        }
        for y in 0..=x {
            if y == x || f[y] == y {
                f[x] = y;
                go(f, x + 1, out);
            }
        }
    }
    go(&mut f, 0, &mut out);
    Ok(out)
}

/// The lattice of idempotent decreasing maps under `below`, element `i` being `maps[i]`.
pub fn id_decreasing_lattice(n: usize) -> Result<(Vec<IdDecreasingMap>, FiniteLattice)> {
    let maps = id_decreasing_maps(n)?;
    let lat = FiniteLattice::from_leq(maps.len(), |i, j| maps[i].below(&maps[j]))?;
    Ok((maps, lat))
}

/// Left multiplication by each generator in each coordinate (`s<k>@<i>`) and the
/// coordinate substitution `hat_<op>` for each base op, acting on tuples over the
/// group modulo the diagonal. Tuples are normalized to end in the identity.
pub fn kurzweil_dual(
    base: &UnaryAlgebra,
    group: &GroupAction,
    caps: &Caps,
) -> Result<UnaryAlgebra> {
    let n = base.size();
    if n == 0 {
        return input("base algebra must be nonempty");
    }
    let elems = group.elements()?;
    let order = elems.len();
    let points = (0..n - 1).try_fold(1usize, |acc, _| acc.checked_mul(order));
    let points = points.unwrap_or(usize::MAX);
    check_cap(
        "dual point count",
        points,
        caps.dual_points.min(caps.point_count),
    )?;
    let index: HashMap<&crate::gset::Perm, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mul: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&a.then(b)]).collect())
        .collect();
    let inv: Vec<usize> = elems.iter().map(|a| index[&a.inverse()]).collect();
    let id = index[&crate::gset::Perm::identity(group.degree())];
    let decode = |mut code: usize| -> Vec<usize> {
        let mut t = Vec::with_capacity(n);
        for _ in 0..n - 1 {
            t.push(code % order);
            code /= order;
        }
        t.push(id);
        t
    };
    let encode = |t: &[usize]| -> usize {
        let r = inv[t[n - 1]];
        t[..n - 1]
            .iter()
            .rev()
            .fold(0, |acc, &s| acc * order + mul[s][r])
    };
    let tuples: Vec<Vec<usize>> = (0..points).map(decode).collect();
    let mut alg = UnaryAlgebra::new("dual", points);
    for (k, g) in group.generators().iter().enumerate() {
        let g = index[g];
        for i in 0..n {
            let map = tuples
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    t[i] = mul[g][t[i]];
                    encode(&t)
                })
                .collect();
            alg.add_op(format!("s{k}@{i}"), map)?;
        }
    }
    for op in base.ops() {
        let map = tuples
            .iter()
            .map(|t| {
                let t: Vec<usize> = (0..n).map(|i| t[op.map[i]]).collect();
                encode(&t)
            })
            .collect();
        alg.add_op(format!("hat_{}", op.name), map)?;
    }
    Ok(alg)
}

/// Counts of M3 sublattices by closure status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub total: usize,
    pub closed: usize,
    pub dense: usize,
    pub neither: usize,
}

/// Census of M3 sublattices of `Eq(n)`: those containing bottom and top, and all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct M3Census {
    pub spanning: CensusCounts,
    pub all: CensusCounts,
}

/// Every M3 sublattice of `Eq(n)`, each given as its five members.
pub fn m3_sublattices(n: usize, caps: &Caps) -> Result<Vec<SubEq>> {
    let all = enumerate_all_capped(n, caps.partition_n)?;
    let mut out = BTreeSet::new();
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate().skip(i + 1) {
            if a.leq(b) || b.leq(a) {
                continue;
            }
            let (m, t) = (a.meet(b), a.join(b));
            for c in &all[j + 1..] {
                if c.leq(a) || a.leq(c) || c.leq(b) || b.leq(c) {
                    continue;
                }
                if a.meet(c) == m && b.meet(c) == m && a.join(c) == t && b.join(c) == t {
                    out.insert(vec![m.clone(), a.clone(), b.clone(), c.clone(), t.clone()]);
                }
            }
        }
    }
    out.into_iter().map(|ms| SubEq::new(n, ms)).collect()
}

pub fn m3_census(n: usize, caps: &Caps) -> Result<M3Census> {
    let mut census = M3Census {
        spanning: CensusCounts::default(),
        all: CensusCounts::default(),
    };
    for l in m3_sublattices(n, caps)? {
        let c = closure(&l, caps)?;
        let closed = c == l;
        let dense = bell(n).is_some_and(|b| c.len() as u128 == b);
        let mut buckets = vec![&mut census.all];
        if l.is_spanning() {
            buckets.push(&mut census.spanning);
        }
        for k in buckets {
            k.total += 1;
            if closed {
                k.closed += 1;
            }
            if dense {
                k.dense += 1;
            }
            if !closed && !dense {
                k.neither += 1;
            }
        }
    }
    Ok(census)
}

/// The 7-point hexagon representation: one partition and a three-element chain.
pub fn hexagon_generators() -> Vec<Partition> {
    [
        "|0,3,4|1,6|2,5|",
        "|0,6|1,5|2|3|4|",
        "|0,6|1,4,5|2|3|",
        "|0,6|1,4,5|2,3|",
    ]
    .iter()
    .map(|t| Partition::parse(t).expect("fixture parses"))
    .collect()
}
