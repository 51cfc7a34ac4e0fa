//! Permutation groups, group actions as unary algebras, and intransitive G-set structure.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use petgraph::unionfind::UnionFind;

use crate::error::{check_cap, input, Error, Result};
use crate::lattice::FiniteLattice;
use crate::partition::Partition;
use crate::unary_algebra::UnaryAlgebra;
use crate::Caps;

/// A permutation of `{0..degree-1}` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            image: (0..degree).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &y in &image {
            if y >= image.len() || std::mem::replace(&mut seen[y], true) {
                return input(format!("{image:?} is not a permutation"));
            }
        }
        Ok(Perm { image })
    }

    /// Parses 0-offset cycle notation such as `(0,4)(1,3)(2,5)`; empty text or `()` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut image: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
            };
            let cycle: Vec<usize> = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle entry {s:?}")))
                })
                .collect::<Result<_>>()?;
            for &x in &cycle {
                if x >= degree {
                    return Err(Error::Parse(format!("{x} exceeds degree {degree}")));
                }
                if std::mem::replace(&mut moved[x], true) {
                    return Err(Error::Parse(format!("{x} appears twice in {text:?}")));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                image[x] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(Perm { image })
    }

    /// Parses a semicolon-separated list of cycle strings.
    pub fn parse_list(text: &str, degree: usize) -> Result<Vec<Perm>> {
        text.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Perm::parse(s, degree))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Product `self·other`: apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Perm { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All products of the generators: breadth-first by word length, each layer sorted by image.
pub fn generate(generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let degree = common_degree(generators)?;
    let id = Perm::identity(degree);
    let mut index: HashMap<Perm, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut layer_start = 0;
    while layer_start < elements.len() {
        let layer_end = elements.len();
        let mut next = Vec::new();
        for x in &elements[layer_start..layer_end] {
            for g in generators {
                let y = x.then(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), usize::MAX);
                    next.push(y);
                }
            }
        }
        next.sort();
        for y in next {
            index.insert(y.clone(), elements.len());
            elements.push(y);
            check_cap("group order", elements.len(), cap)?;
        }
        layer_start = layer_end;
    }
    Ok(elements)
}

fn common_degree(generators: &[Perm]) -> Result<usize> {
    let Some(first) = generators.first() else {
        return input("at least one generator is required");
    };
    if generators.iter().any(|g| g.degree() != first.degree()) {
        return input("generators have different degrees");
    }
    Ok(first.degree())
}

/// A permutation group given by generators, acting on `{0..degree-1}`.
#[derive(Debug)]
pub struct GroupAction {
    generators: Vec<Perm>,
    degree: usize,
    cap: usize,
    elements: OnceLock<Result<Vec<Perm>>>,
}

impl Clone for GroupAction {
    fn clone(&self) -> Self {
        GroupAction {
            generators: self.generators.clone(),
            degree: self.degree,
            cap: self.cap,
            elements: self.elements.clone(),
        }
    }
}

impl GroupAction {
    pub fn new(generators: Vec<Perm>) -> Result<Self> {
        Self::with_cap(generators, Caps::default().group_order)
    }

    pub fn with_cap(generators: Vec<Perm>, cap: usize) -> Result<Self> {
        let degree = common_degree(&generators)?;
        Ok(GroupAction {
            generators,
            degree,
            cap,
            elements: OnceLock::new(),
        })
    }

    /// Parses semicolon-separated cycle strings of the given degree.
    pub fn parse(gens: &str, degree: usize) -> Result<Self> {
        Self::new(Perm::parse_list(gens, degree)?)
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group elements in [`generate`] order, computed once.
    pub fn elements(&self) -> Result<&[Perm]> {
        match self
            .elements
            .get_or_init(|| generate(&self.generators, self.cap))
        {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    /// The action on points, one operation `g<i>` per generator.
    pub fn to_algebra(&self) -> UnaryAlgebra {
        let mut alg = UnaryAlgebra::new("G-set", self.degree);
        for (i, g) in self.generators.iter().enumerate() {
            alg.add_op(format!("g{i}"), g.images().to_vec())
                .expect("generators are valid permutations");
        }
        alg
    }

    /// Elements mapping `block` onto itself.
    pub fn setwise_stabilizer(&self, block: &[usize]) -> Result<Vec<Perm>> {
        if block.is_empty() {
            return input("block must be nonempty");
        }
        if let Some(&x) = block.iter().find(|&&x| x >= self.degree) {
            return input(format!("point {x} out of range"));
        }
        let mut inside = vec![false; self.degree];
        for &x in block {
            inside[x] = true;
        }
        Ok(self
            .elements()?
            .iter()
            .filter(|g| block.iter().all(|&x| inside[g.apply(x)]))
            .cloned()
            .collect())
    }

    /// The right regular action; elements are ordered by image so a regular group acts as itself.
    pub fn regular_action(&self) -> Result<UnaryAlgebra> {
        let mut elements = self.elements()?.to_vec();
        elements.sort();
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut alg = UnaryAlgebra::new("regular", elements.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let map = elements.iter().map(|e| index[&e.then(g)]).collect();
            alg.add_op(format!("g{gi}"), map)?;
        }
        Ok(alg)
    }

    /// Action on the left cosets `xH` by left multiplication, cosets ordered by least element index.
    pub fn coset_action(&self, subgroup_gens: &[Perm], caps: &Caps) -> Result<UnaryAlgebra> {
        let elements = self.elements()?;
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let sub: Vec<Perm> = if subgroup_gens.is_empty() {
            vec![Perm::identity(self.degree)]
        } else {
            if subgroup_gens.iter().any(|h| h.degree() != self.degree) {
                return input("subgroup generators have the wrong degree");
            }
            generate(subgroup_gens, self.cap)?
        };
        if let Some(h) = sub.iter().find(|h| !index.contains_key(h)) {
            return input(format!("{h} is not in the group"));
        }
        check_cap("coset count", elements.len() / sub.len(), caps.point_count)?;
        // Functional composition x∘h means: apply h, then x.
        let coset_of = |x: &Perm| -> Vec<usize> {
            let mut c: Vec<usize> = sub.iter().map(|h| index[&h.then(x)]).collect();
            c.sort_unstable();
            c
        };
        let mut coset_id = vec![usize::MAX; elements.len()];
        let mut leaders = Vec::new();
        for (i, x) in elements.iter().enumerate() {
            if coset_id[i] == usize::MAX {
                for j in coset_of(x) {
                    coset_id[j] = leaders.len();
                }
                leaders.push(i);
            }
        }
        let mut alg = UnaryAlgebra::new("cosets", leaders.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let map = leaders
                .iter()
                .map(|&l| coset_id[index[&elements[l].then(g)]])
                .collect();
            alg.add_op(format!("g{gi}"), map)?;
        }
        Ok(alg)
    }

    /// Point stabilizer `G_x`.
    pub fn stabilizer(&self, x: usize) -> Result<Vec<Perm>> {
        self.setwise_stabilizer(&[x])
    }

    /// Index of `p` in [`GroupAction::elements`].
    pub fn index_of(&self, p: &Perm) -> Result<Option<usize>> {
        Ok(self.elements()?.iter().position(|q| q == p))
    }
}

/// The orbit partition of an algebra whose operations are all permutations.
pub fn orbits(alg: &UnaryAlgebra) -> Result<Partition> {
    if !alg.is_permutational() {
        return input("every operation must be a permutation");
    }
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    for op in alg.ops() {
        for (x, &y) in op.map.iter().enumerate() {
            uf.union(x, y);
        }
    }
    Ok(Partition::from_union_find(&mut uf, n))
}

/// Outcome of trying to glue τ₀-blocks across orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Merge {
    /// The congruence gluing the translated blocks.
    Merged(Partition),
    /// The designated blocks of two orbits have different setwise stabilizers.
    Refused {
        orbits: (usize, usize),
        stabilizer_orders: (usize, usize),
    },
}

/// Glues the τ₀-blocks of the orbit representatives, and all their translates, when their stabilizers agree.
///
/// Orbits are indexed by least element; the representative of an orbit is its least point.
pub fn merged_congruence(
    action: &GroupAction,
    tau0: &Partition,
    orbit_indices: &[usize],
) -> Result<Merge> {
    let alg = action.to_algebra();
    if tau0.len() != alg.size() || !alg.is_congruence(tau0)? {
        return input(format!("{tau0} is not a congruence of the action"));
    }
    let tau = orbits(&alg)?;
    if !tau0.leq(&tau) {
        return input(format!("{tau0} is not below the orbit partition"));
    }
    let reps = tau.transversal();
    if let Some(&i) = orbit_indices.iter().find(|&&i| i >= reps.len()) {
        return input(format!("orbit index {i} out of range"));
    }
    let blocks: Vec<Vec<usize>> = orbit_indices
        .iter()
        .map(|&i| tau0.block_of(reps[i]))
        .collect();
    let stabs: Vec<Vec<Perm>> = blocks
        .iter()
        .map(|b| action.setwise_stabilizer(b))
        .collect::<Result<_>>()?;
    for k in 1..stabs.len() {
        if stabs[k] != stabs[0] {
            return Ok(Merge::Refused {
                orbits: (orbit_indices[0], orbit_indices[k]),
                stabilizer_orders: (stabs[0].len(), stabs[k].len()),
            });
        }
    }
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    for (a, b) in tau0.pairs() {
        uf.union(a, b);
    }
    if blocks.len() > 1 {
        for g in action.elements()? {
            let first = g.apply(blocks[0][0]);
            for b in &blocks[1..] {
                uf.union(first, g.apply(b[0]));
            }
        }
    }
    Ok(Merge::Merged(Partition::from_union_find(&mut uf, n)))
}

/// Whether `⟨M/ker φ_x, M⟩` built from the operation monoid is isomorphic to the algebra via `[m] ↦ m(x)`.
pub fn mset_quotient_check(alg: &UnaryAlgebra, x: usize, caps: &Caps) -> Result<bool> {
    if x >= alg.size() {
        return input(format!("point {x} out of range"));
    }
    let monoid = alg.unary_monoid(caps.monoid)?;
    let index: HashMap<&Vec<usize>, usize> =
        monoid.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // Classes of ker φ_x, numbered by first occurrence.
    let mut class_of_value: HashMap<usize, usize> = HashMap::new();
    let mut class = Vec::with_capacity(monoid.len());
    let mut rep = Vec::new();
    for (i, m) in monoid.iter().enumerate() {
        let next = class_of_value.len();
        let c = *class_of_value.entry(m[x]).or_insert(next);
        if c == rep.len() {
            rep.push(i);
        }
        class.push(c);
    }
    let k = rep.len();
    let phi: Vec<usize> = rep.iter().map(|&i| monoid[i][x]).collect();
    if k != alg.size() {
        return Ok(false);
    }
    for op in alg.ops() {
        for c in 0..k {
            let m = &monoid[rep[c]];
            let fm: Vec<usize> = m.iter().map(|&y| op.map[y]).collect();
            let Some(&j) = index.get(&fm) else {
                return Err(Error::Input("operation monoid is not closed".into()));
            };
            if phi[class[j]] != op.map[phi[c]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lattice of submonoids `S` with `M_x ⊆ S ⊆ M`, where `M_x` fixes `x`.
pub fn stabilizer_submonoid_interval(
    alg: &UnaryAlgebra,
    x: usize,
    caps: &Caps,
) -> Result<FiniteLattice> {
    let monoid = alg.unary_monoid(caps.monoid)?;
    let index: HashMap<&Vec<usize>, usize> =
        monoid.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let compose = |a: usize, b: usize| -> usize {
        let m: Vec<usize> = monoid[a].iter().map(|&y| monoid[b][y]).collect();
        index[&m]
    };
    let base: Vec<usize> = (0..monoid.len()).filter(|&i| monoid[i][x] == x).collect();
    let free: Vec<usize> = (0..monoid.len()).filter(|&i| monoid[i][x] != x).collect();
    check_cap("submonoid search width", free.len(), 20)?;
    let mut members: Vec<Vec<bool>> = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut set = vec![false; monoid.len()];
        for &b in &base {
            set[b] = true;
        }
        for (k, &f) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                set[f] = true;
            }
        }
        let chosen: Vec<usize> = (0..monoid.len()).filter(|&i| set[i]).collect();
        if chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| set[compose(a, b)]))
        {
            members.push(set);
        }
    }
    FiniteLattice::from_leq(members.len(), |i, j| {
        members[i].iter().zip(&members[j]).all(|(a, b)| !a || *b)
    })
}

/// Disjoint union of algebras with matching operation names.
pub fn disjoint_union(parts: &[&UnaryAlgebra]) -> Result<UnaryAlgebra> {
    let Some(first) = parts.first() else {
        return input("nothing to join");
    };
    let names: Vec<&str> = first.ops().iter().map(|o| o.name.as_str()).collect();
    let total: usize = parts.iter().map(|a| a.size()).sum();
    let mut alg = UnaryAlgebra::new("union", total);
    for name in names {
        let mut map = Vec::with_capacity(total);
        let mut offset = 0;
        for a in parts {
            let Some(op) = a.op(name) else {
                return input(format!("operation {name} missing from {}", a.name()));
            };
            map.extend(op.map.iter().map(|&y| y + offset));
            offset += a.size();
        }
        alg.add_op(name, map)?;
    }
    Ok(alg)
}
