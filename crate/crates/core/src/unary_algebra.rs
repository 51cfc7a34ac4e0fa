//! Finite unary algebras and their congruences.

use std::collections::{HashSet, VecDeque};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::error::{check_cap, input, Result};
use crate::partition::Partition;
use crate::Caps;

/// A named total map on the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Op {
    pub name: String,
    pub map: Vec<usize>,
}

/// A finite carrier `{0..n-1}` with named unary operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryAlgebra {
    name: String,
    n: usize,
    ops: Vec<Op>,
}

impl UnaryAlgebra {
    pub fn new(name: impl Into<String>, n: usize) -> Self {
        UnaryAlgebra {
            name: name.into(),
            n,
            ops: Vec::new(),
        }
    }

    /// Builds an algebra from `(name, map)` pairs.
    pub fn with_ops<S: Into<String>>(
        name: impl Into<String>,
        n: usize,
        ops: impl IntoIterator<Item = (S, Vec<usize>)>,
    ) -> Result<Self> {
        let mut a = UnaryAlgebra::new(name, n);
        for (op_name, map) in ops {
            a.add_op(op_name, map)?;
        }
        Ok(a)
    }

    pub fn add_op(&mut self, name: impl Into<String>, map: Vec<usize>) -> Result<()> {
        let name = name.into();
        if map.len() != self.n {
            return input(format!(
                "op {name} has {} values, expected {}",
                map.len(),
                self.n
            ));
        }
        if let Some(v) = map.iter().find(|&&v| v >= self.n) {
            return input(format!("op {name} value {v} out of range"));
        }
        if self.ops.iter().any(|o| o.name == name) {
            return input(format!("duplicate op name {name}"));
        }
        self.ops.push(Op { name, map });
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&Op> {
        self.ops.iter().find(|o| o.name == name)
    }

    fn check_size(&self, p: &Partition) -> Result<()> {
        if p.len() != self.n {
            return input(format!(
                "partition on {} points, algebra has {}",
                p.len(),
                self.n
            ));
        }
        Ok(())
    }

    /// Whether every operation maps each block into a block.
    pub fn is_congruence(&self, p: &Partition) -> Result<bool> {
        self.check_size(p)?;
        Ok(self.respects_unchecked(p))
    }

    fn respects_unchecked(&self, p: &Partition) -> bool {
        let ids = p.block_id();
        self.ops.iter().all(|op| {
            ids.iter()
                .enumerate()
                .all(|(x, &b)| ids[op.map[x]] == ids[op.map[b]])
        })
    }

    /// Least congruence containing `pairs`.
    pub fn cg(&self, pairs: &[(usize, usize)]) -> Result<Partition> {
        if let Some(&(x, y)) = pairs.iter().find(|(x, y)| *x >= self.n || *y >= self.n) {
            return input(format!("pair ({x},{y}) out of range"));
        }
        Ok(self.cg_unchecked(pairs))
    }

    pub(crate) fn cg_unchecked(&self, pairs: &[(usize, usize)]) -> Partition {
        let mut uf = UnionFind::new(self.n);
        let mut work: Vec<(usize, usize)> = Vec::new();
        for &(x, y) in pairs {
            if uf.union(x, y) {
                work.push((x, y));
            }
        }
        while let Some((x, y)) = work.pop() {
            for op in &self.ops {
                let (fx, fy) = (op.map[x], op.map[y]);
                if uf.union(fx, fy) {
                    work.push((fx, fy));
                }
            }
        }
        Partition::from_union_find(&mut uf, self.n)
    }

    /// Least congruence containing a given equivalence.
    pub fn cg_of(&self, p: &Partition) -> Result<Partition> {
        self.check_size(p)?;
        Ok(self.cg_unchecked(&p.generating_pairs()))
    }

    /// Whether all operations are bijections.
    pub fn is_permutational(&self) -> bool {
        self.ops.iter().all(|op| {
            let mut seen = vec![false; self.n];
            op.map
                .iter()
                .all(|&v| !std::mem::replace(&mut seen[v], true))
        })
    }

    /// Whether every point is reachable from 0 under the operations.
    pub fn is_transitive(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for op in &self.ops {
                let y = op.map[x];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }

    /// Distinct principal congruences `Cg(x,y)`, sorted.
    pub fn principal_congruences(&self) -> Vec<Partition> {
        let pairs: Vec<(usize, usize)> = if self.is_permutational() && self.is_transitive() {
            (1..self.n).map(|y| (0, y)).collect()
        } else {
            (0..self.n)
                .flat_map(|x| (x + 1..self.n).map(move |y| (x, y)))
                .collect()
        };
        let mut out: Vec<Partition> = pairs
            .par_iter()
            .map(|&(x, y)| self.cg_unchecked(&[(x, y)]))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The congruence lattice, with default caps.
    pub fn con_lattice(&self) -> Result<ConLattice> {
        self.con_lattice_with(&Caps::default())
    }

    pub fn con_lattice_with(&self, caps: &Caps) -> Result<ConLattice> {
        check_cap("algebra size", self.n, caps.point_count)?;
        let principal = self.principal_congruences();
        let bottom = Partition::bottom(self.n);
        let mut elements = vec![bottom.clone()];
        let mut seen: HashSet<Partition> = HashSet::from([bottom]);
        let mut i = 0;
        while i < elements.len() {
            let fresh: Vec<Partition> = principal.par_iter().map(|p| elements[i].join(p)).collect();
            for p in fresh {
                if seen.insert(p.clone()) {
                    elements.push(p);
                    check_cap("congruence lattice size", elements.len(), caps.con_size)?;
                }
            }
            i += 1;
        }
        elements.sort();
        Ok(ConLattice {
            n: self.n,
            elements,
        })
    }

    /// Quotient by a congruence, blocks indexed in transversal order.
    pub fn quotient(&self, theta: &Partition) -> Result<UnaryAlgebra> {
        if !self.is_congruence(theta)? {
            return input(format!("{theta} is not a congruence"));
        }
        let leaders = theta.transversal();
        let mut index = vec![0; self.n];
        for (i, &l) in leaders.iter().enumerate() {
            index[l] = i;
        }
        let block_index = |x: usize| index[theta.block_id()[x]];
        let mut q = UnaryAlgebra::new(format!("{}/theta", self.name), leaders.len());
        for op in &self.ops {
            let map = leaders.iter().map(|&l| block_index(op.map[l])).collect();
            q.add_op(op.name.clone(), map)?;
        }
        Ok(q)
    }

    /// Composition closure of the operations plus the identity.
    pub fn unary_monoid(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let id: Vec<usize> = (0..self.n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for op in &self.ops {
                let m: Vec<usize> = out[i].iter().map(|&x| op.map[x]).collect();
                if seen.insert(m.clone()) {
                    out.push(m);
                    check_cap("unary monoid size", out.len(), cap)?;
                }
            }
            i += 1;
        }
        Ok(out)
    }

    /// The induced algebra on `B = e(A)` with operations `e∘f|_B` for `f` in the unary monoid.
    /// Returns the algebra and the embedding of its points into `A`.
    pub fn restriction_algebra(&self, e: &str, caps: &Caps) -> Result<(UnaryAlgebra, Vec<usize>)> {
        let emap = self.idempotent(e)?;
        let subset = image(&emap);
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let monoid = self.unary_monoid(caps.monoid)?;
        let mut maps: Vec<Vec<usize>> = monoid
            .iter()
            .map(|m| subset.iter().map(|&x| index[emap[m[x]]]).collect())
            .collect();
        maps.sort();
        maps.dedup();
        let mut b = UnaryAlgebra::new(format!("{}|{e}", self.name), subset.len());
        for (i, m) in maps.into_iter().enumerate() {
            b.add_op(format!("p{i}"), m)?;
        }
        Ok((b, subset))
    }

    pub(crate) fn idempotent(&self, e: &str) -> Result<Vec<usize>> {
        let Some(op) = self.op(e) else {
            return input(format!("no operation named {e}"));
        };
        if op.map.iter().any(|&x| op.map[x] != x) {
            return input(format!("operation {e} is not idempotent"));
        }
        Ok(op.map.clone())
    }
}

pub(crate) fn image(map: &[usize]) -> Vec<usize> {
    let mut img: Vec<usize> = map.to_vec();
    img.sort_unstable();
    img.dedup();
    img
}

/// All congruences of an algebra, sorted by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConLattice {
    n: usize,
    elements: Vec<Partition>,
}

impl ConLattice {
    /// Wraps a list of congruences; sorts and deduplicates.
    pub fn from_elements(n: usize, mut elements: Vec<Partition>) -> Self {
        elements.sort();
        elements.dedup();
        ConLattice { n, elements }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// Abstract lattice on the same elements, indexed as in [`ConLattice::elements`].
    pub fn to_lattice(&self) -> crate::lattice::FiniteLattice {
        crate::lattice::FiniteLattice::from_leq(self.elements.len(), |i, j| {
            self.elements[i].leq(&self.elements[j])
        })
        .expect("congruences form a lattice")
    }

    /// Elements `θ` with `lo ≤ θ ≤ hi`.
    pub fn interval(&self, lo: &Partition, hi: &Partition) -> Vec<Partition> {
        self.elements
            .iter()
            .filter(|p| lo.leq(p) && p.leq(hi))
            .cloned()
            .collect()
    }
}

/// Restriction, star and hat maps for an idempotent operation `e` with image `B`.
pub struct Residuation<'a> {
    algebra: &'a UnaryAlgebra,
    subset: Vec<usize>,
    principal: Vec<(usize, usize, Partition)>,
}

impl<'a> Residuation<'a> {
    pub fn new(algebra: &'a UnaryAlgebra, e: &str) -> Result<Self> {
        let emap = algebra.idempotent(e)?;
        let subset = image(&emap);
        let n = algebra.size();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .collect();
        let principal = pairs
            .par_iter()
            .map(|&(x, y)| (x, y, algebra.cg_unchecked(&[(x, y)])))
            .collect();
        Ok(Residuation {
            algebra,
            subset,
            principal,
        })
    }

    /// Points of `B`, ascending; position `i` is point `i` of the restriction algebra.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// `α ∩ B²` on the index set of `B`.
    pub fn restrict_con(&self, alpha: &Partition) -> Result<Partition> {
        alpha.restrict(&self.subset)
    }

    fn embed_pairs(&self, beta: &Partition) -> Result<Vec<(usize, usize)>> {
        if beta.len() != self.subset.len() {
            return input(format!(
                "partition on {} points, subalgebra has {}",
                beta.len(),
                self.subset.len()
            ));
        }
        Ok(beta
            .generating_pairs()
            .into_iter()
            .map(|(x, y)| (self.subset[x], self.subset[y]))
            .collect())
    }

    /// `Cg^A(β)`; errors when `β` is not a congruence of the restriction algebra.
    pub fn star(&self, beta: &Partition) -> Result<Partition> {
        let s = self.algebra.cg_unchecked(&self.embed_pairs(beta)?);
        if &s.restrict(&self.subset)? != beta {
            return input(format!(
                "{beta} is not a congruence of the restriction algebra"
            ));
        }
        Ok(s)
    }

    /// Largest congruence of `A` whose restriction to `B` is below `β`.
    pub fn hat(&self, beta: &Partition) -> Result<Partition> {
        self.star(beta)?;
        let n = self.algebra.size();
        let mut uf = UnionFind::new(n);
        for (x, y, p) in &self.principal {
            if p.restrict(&self.subset)?.leq(beta) {
                uf.union(*x, *y);
            }
        }
        let candidate = Partition::from_union_find(&mut uf, n);
        Ok(self.algebra.cg_unchecked(&candidate.generating_pairs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> UnaryAlgebra {
        UnaryAlgebra::with_ops(
            "S3",
            6,
            [
                ("g0", vec![4, 3, 5, 1, 0, 2]),
                ("g1", vec![1, 2, 0, 4, 5, 3]),
            ],
        )
        .unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn add_op_validation() {
        let mut a = UnaryAlgebra::new("a", 3);
        assert!(a.add_op("f", vec![0, 1]).is_err());
        assert!(a.add_op("f", vec![0, 1, 3]).is_err());
        a.add_op("f", vec![0, 0, 0]).unwrap();
        assert!(a.add_op("f", vec![0, 1, 2]).is_err());
    }

    #[test]
    fn congruence_checks() {
        let a = s3();
        assert!(a.is_congruence(&p("|0,1,2|3,4,5|")).unwrap());
        assert!(a.is_congruence(&Partition::bottom(6)).unwrap());
        assert!(!a.is_congruence(&p("|0,1|2,3,4,5|")).unwrap());
        assert!(a.is_congruence(&Partition::bottom(5)).is_err());
    }

    #[test]
    fn cg_examples() {
        let a = s3();
        assert_eq!(a.cg(&[(0, 2)]).unwrap(), p("|0,1,2|3,4,5|"));
        assert!(a.cg(&[]).unwrap().is_bottom());
        assert!(a.cg(&[(0, 9)]).is_err());
    }

    #[test]
    fn con_of_s3_and_free_set() {
        let con = s3().con_lattice().unwrap();
        assert_eq!(con.len(), 6);
        assert!(con.contains(&p("|0,3|2,5|1,4|")));
        let free = UnaryAlgebra::new("free", 3);
        assert_eq!(free.con_lattice().unwrap().len(), 5);
        let one = UnaryAlgebra::new("one", 1);
        assert_eq!(one.con_lattice().unwrap().len(), 1);
    }

    #[test]
    fn quotients() {
        let a = s3();
        let q = a.quotient(&p("|0,1,2|3,4,5|")).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.con_lattice().unwrap().len(), 2);
        assert_eq!(a.quotient(&Partition::top(6)).unwrap().size(), 1);
        assert_eq!(a.quotient(&Partition::bottom(6)).unwrap(), {
            let mut b = a.clone();
            b.set_name("S3/theta");
            b
        });
        assert!(a.quotient(&p("|0,1|2,3,4,5|")).is_err());
    }

    #[test]
    fn restriction_by_identity_keeps_con() {
        let mut a = s3();
        a.add_op("id", (0..6).collect()).unwrap();
        let (b, emb) = a.restriction_algebra("id", &Caps::default()).unwrap();
        assert_eq!(emb, (0..6).collect::<Vec<_>>());
        assert_eq!(b.con_lattice().unwrap(), a.con_lattice().unwrap());
        assert!(a.restriction_algebra("g0", &Caps::default()).is_err());
    }

    #[test]
    fn monoid_cap() {
        let a = s3();
        assert_eq!(a.unary_monoid(100).unwrap().len(), 6);
        assert!(a.unary_monoid(3).is_err());
    }
}
