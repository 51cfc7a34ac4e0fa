//! Abstract finite lattices.

use std::collections::{HashMap, HashSet};

use crate::error::{check_cap, Error, Result};
use crate::partition::Partition;
use crate::Caps;

type Bits = Vec<u64>;

fn bits_new(m: usize) -> Bits {
    vec![0; m.div_ceil(64)]
}

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn highest(b: &Bits) -> Option<usize> {
    b.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn lowest(b: &Bits) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// A finite lattice on elements `0..m` with precomputed order, meet and join tables.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    m: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Vec<String>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.leq == other.leq
    }
}

impl Eq for FiniteLattice {}

impl FiniteLattice {
    /// Builds a lattice from an order predicate, validating the order and the lattice property.
    pub fn from_leq(m: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotLattice("empty order".into()));
        }
        let mut table = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = leq(i, j);
            }
        }
        for i in 0..m {
            if !table[i * m + i] {
                return Err(Error::NotLattice(format!("{i} ≤ {i} fails")));
            }
            for j in 0..m {
                if i != j && table[i * m + j] && table[j * m + i] {
                    return Err(Error::NotLattice(format!("{i} and {j} are mutually below")));
                }
                if table[i * m + j] {
                    for k in 0..m {
                        if table[j * m + k] && !table[i * m + k] {
                            return Err(Error::NotLattice(format!(
                                "order not transitive at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Self::from_table(m, table)
    }

    fn from_table(m: usize, table: Vec<bool>) -> Result<Self> {
        let down_size: Vec<usize> = (0..m)
            .map(|j| (0..m).filter(|&i| table[i * m + j]).count())
            .collect();
        let mut lin: Vec<usize> = (0..m).collect();
        lin.sort_by_key(|&i| (down_size[i], i));
        let mut pos = vec![0; m];
        for (p, &i) in lin.iter().enumerate() {
            pos[i] = p;
        }
        let mut down = vec![bits_new(m); m];
        let mut up = vec![bits_new(m); m];
        for i in 0..m {
            for j in 0..m {
                if table[i * m + j] {
                    bit_set(&mut down[j], pos[i]);
                    bit_set(&mut up[i], pos[j]);
                }
            }
        }
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for a in 0..m {
            for b in a..m {
                let lower = bits_and(&down[a], &down[b]);
                let c = highest(&lower)
                    .map(|p| lin[p])
                    .filter(|&c| down[c] == lower)
                    .ok_or_else(|| Error::NotLattice(format!("{a} and {b} have no meet")))?;
                let upper = bits_and(&up[a], &up[b]);
                let d = lowest(&upper)
                    .map(|p| lin[p])
                    .filter(|&d| up[d] == upper)
                    .ok_or_else(|| Error::NotLattice(format!("{a} and {b} have no join")))?;
                meet[a * m + b] = c;
                meet[b * m + a] = c;
                join[a * m + b] = d;
                join[b * m + a] = d;
            }
        }
        let bottom = lin[0];
        let top = lin[m - 1];
        if (0..m).any(|i| !table[bottom * m + i] || !table[i * m + top]) {
            return Err(Error::NotLattice("no bottom or no top".into()));
        }
        Ok(FiniteLattice {
            m,
            leq: table,
            meet,
            join,
            bottom,
            top,
            labels: (0..m).map(|i| i.to_string()).collect(),
        })
    }

    /// Builds a lattice from cover pairs `(a, b)` meaning `a ≺ b`.
    pub fn from_covers(m: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut table = vec![false; m * m];
        for i in 0..m {
            table[i * m + i] = true;
        }
        for &(a, b) in covers {
            if a >= m || b >= m {
                return Err(Error::Input(format!("cover ({a},{b}) out of range")));
            }
            table[a * m + b] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if table[i * m + k] {
                    for j in 0..m {
                        if table[k * m + j] {
                            table[i * m + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if table[i * m + j] && table[j * m + i] {
                    return Err(Error::NotLattice(format!("cycle through {i} and {j}")));
                }
            }
        }
        if m == 0 {
            return Err(Error::NotLattice("empty order".into()));
        }
        Self::from_table(m, table)
    }

    /// Same lattice with element names attached.
    pub fn with_labels<S: ToString>(mut self, labels: &[S]) -> Self {
        assert_eq!(labels.len(), self.m);
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.m + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.m + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.m + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.m).any(|c| self.lt(a, c) && self.lt(c, b))
    }

    /// All cover pairs `(a, b)` with `a ≺ b`, lexicographic.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in 0..self.m {
                if self.is_cover(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn cover_lists(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut up = vec![Vec::new(); self.m];
        let mut down = vec![Vec::new(); self.m];
        for (a, b) in self.covers() {
            up[a].push(b);
            down[b].push(a);
        }
        (up, down)
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&i| (0..self.m).filter(|&j| self.leq(j, i)).count());
        let (_, down) = self.cover_lists();
        let mut h = vec![0; self.m];
        for &x in &order {
            h[x] = down[x].iter().map(|&d| h[d] + 1).max().unwrap_or(0);
        }
        h
    }

    pub fn dual(&self) -> FiniteLattice {
        let m = self.m;
        let mut l = FiniteLattice::from_leq(m, |i, j| self.leq(j, i)).expect("dual of a lattice");
        l.labels = self.labels.clone();
        l
    }

    /// The interval `[lo, hi]` and the indices of its elements in `self`.
    pub fn interval(&self, lo: usize, hi: usize) -> (FiniteLattice, Vec<usize>) {
        let idx: Vec<usize> = (0..self.m)
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect();
        let l = FiniteLattice::from_leq(idx.len(), |i, j| self.leq(idx[i], idx[j]))
            .expect("interval of a lattice");
        (l, idx)
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        let (_, down) = self.cover_lists();
        (0..self.m).filter(|&x| down[x].len() == 1).collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        let (up, _) = self.cover_lists();
        (0..self.m).filter(|&x| up[x].len() == 1).collect()
    }

    pub fn is_distributive(&self) -> bool {
        let m = self.m;
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    pub fn is_modular(&self) -> bool {
        let m = self.m;
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    !self.leq(a, c)
                        || self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), c)
                })
            })
        })
    }

    /// `a∧b = a∧c` implies `a∧(b∨c) = a∧b`.
    pub fn is_meet_semidistributive(&self) -> bool {
        let m = self.m;
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    self.meet(a, b) != self.meet(a, c)
                        || self.meet(a, self.join(b, c)) == self.meet(a, b)
                })
            })
        })
    }

    /// Elements `a ≠ 1` with `b∧c ≤ a` implying `b ≤ a` or `c ≤ a`.
    pub fn meet_primes(&self) -> Vec<usize> {
        let m = self.m;
        (0..m)
            .filter(|&a| a != self.top)
            .filter(|&a| {
                (0..m).all(|b| {
                    (0..m)
                        .all(|c| !self.leq(self.meet(b, c), a) || self.leq(b, a) || self.leq(c, a))
                })
            })
            .collect()
    }

    /// Order isomorphism onto `other`, if one exists, with the default cap.
    pub fn isomorphism(&self, other: &FiniteLattice) -> Result<Option<Vec<usize>>> {
        self.isomorphism_capped(other, Caps::default().iso)
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    pub fn isomorphism_capped(
        &self,
        other: &FiniteLattice,
        cap: usize,
    ) -> Result<Option<Vec<usize>>> {
        if self.m != other.m {
            return Ok(None);
        }
        check_cap("isomorphism search size", self.m, cap)?;
        let m = self.m;
        let (up1, down1) = self.cover_lists();
        let (up2, down2) = other.cover_lists();
        let (c1, c2) = refine_colors(self, other, (&up1, &down1), (&up2, &down2));
        let mut h1 = c1.clone();
        let mut h2 = c2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return Ok(None);
        }
        let heights = self.heights();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&x| (heights[x], x));
        let mut f = vec![usize::MAX; m];
        let mut used = vec![false; m];
        let down2_sets: Vec<HashSet<usize>> =
            down2.iter().map(|d| d.iter().copied().collect()).collect();
        let found = backtrack(0, &order, &c1, &c2, &down1, &down2_sets, &mut f, &mut used);
        Ok(found.then_some(f))
    }
}

fn refine_colors(
    l1: &FiniteLattice,
    l2: &FiniteLattice,
    covers1: (&[Vec<usize>], &[Vec<usize>]),
    covers2: (&[Vec<usize>], &[Vec<usize>]),
) -> (Vec<usize>, Vec<usize>) {
    let base = |l: &FiniteLattice, up: &[Vec<usize>], down: &[Vec<usize>]| -> Vec<Vec<usize>> {
        let h = l.heights();
        let d = l.dual().heights();
        (0..l.m)
            .map(|x| {
                let downs = (0..l.m).filter(|&y| l.leq(y, x)).count();
                let ups = (0..l.m).filter(|&y| l.leq(x, y)).count();
                vec![h[x], d[x], downs, ups, up[x].len(), down[x].len()]
            })
            .collect()
    };
    let k1 = base(l1, covers1.0, covers1.1);
    let k2 = base(l2, covers2.0, covers2.1);
    let (mut c1, mut c2) = intern(&k1, &k2);
    let mut classes = count_classes(&c1, &c2);
    loop {
        let step = |c: &[usize], up: &[Vec<usize>], down: &[Vec<usize>]| -> Vec<Vec<usize>> {
            (0..c.len())
                .map(|x| {
                    let mut u: Vec<usize> = up[x].iter().map(|&y| c[y]).collect();
                    let mut d: Vec<usize> = down[x].iter().map(|&y| c[y]).collect();
                    u.sort_unstable();
                    d.sort_unstable();
                    let mut key = vec![c[x], u.len()];
                    key.extend(u);
                    key.push(usize::MAX);
                    key.extend(d);
                    key
                })
                .collect()
        };
        let k1 = step(&c1, covers1.0, covers1.1);
        let k2 = step(&c2, covers2.0, covers2.1);
        let (n1, n2) = intern(&k1, &k2);
        let next = count_classes(&n1, &n2);
        c1 = n1;
        c2 = n2;
        if next == classes {
            return (c1, c2);
        }
        classes = next;
    }
}

fn intern(k1: &[Vec<usize>], k2: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut keys: Vec<&Vec<usize>> = k1.iter().chain(k2).collect();
    keys.sort();
    keys.dedup();
    let ids: HashMap<&Vec<usize>, usize> =
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    (
        k1.iter().map(|k| ids[k]).collect(),
        k2.iter().map(|k| ids[k]).collect(),
    )
}

fn count_classes(c1: &[usize], c2: &[usize]) -> usize {
    c1.iter().chain(c2).collect::<HashSet<_>>().len()
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    depth: usize,
    order: &[usize],
    c1: &[usize],
    c2: &[usize],
    down1: &[Vec<usize>],
    down2: &[HashSet<usize>],
    f: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..c2.len() {
        if used[y] || c2[y] != c1[x] || down1[x].len() != down2[y].len() {
            continue;
        }
        if !down1[x].iter().all(|&d| down2[y].contains(&f[d])) {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if backtrack(depth + 1, order, c1, c2, down1, down2, f, used) {
            return true;
        }
        used[y] = false;
        f[x] = usize::MAX;
    }
    false
}

/// Lattice operations that build new lattices.
impl FiniteLattice {
    /// The `k`-element chain.
    pub fn chain(k: usize) -> FiniteLattice {
        FiniteLattice::from_leq(k.max(1), |i, j| i <= j).expect("chain")
    }

    /// Height-two lattice with `k` atoms.
    pub fn m_n(k: usize) -> FiniteLattice {
        let covers: Vec<(usize, usize)> = (1..=k).flat_map(|a| [(0, a), (a, k + 1)]).collect();
        let covers = if k == 0 { vec![(0, 1)] } else { covers };
        FiniteLattice::from_covers(k + 2, &covers).expect("M_n")
    }

    /// The partition lattice on `k` points, elements in enumeration order.
    pub fn eq(k: usize) -> Result<FiniteLattice> {
        let parts = crate::partition::enumerate_all(k)?;
        FiniteLattice::from_leq(parts.len(), |i, j| parts[i].leq(&parts[j]))
    }

    /// The Boolean lattice with `k` atoms.
    pub fn boolean(k: usize) -> FiniteLattice {
        FiniteLattice::from_leq(1 << k, |i, j| i & j == i).expect("boolean")
    }

    pub fn direct_product(&self, other: &FiniteLattice) -> FiniteLattice {
        let n = other.m;
        FiniteLattice::from_leq(self.m * n, |i, j| {
            self.leq(i / n, j / n) && other.leq(i % n, j % n)
        })
        .expect("product of lattices")
    }

    /// Product of a list of lattices; the one-element lattice for an empty list.
    pub fn product_of(ls: &[FiniteLattice]) -> FiniteLattice {
        ls.iter()
            .fold(FiniteLattice::chain(1), |acc, l| acc.direct_product(l))
    }

    /// Stacks the lattices, each top covered by the next bottom.
    pub fn ordinal_sum(ls: &[&FiniteLattice]) -> FiniteLattice {
        let mut owner = Vec::new();
        for (c, l) in ls.iter().enumerate() {
            owner.extend((0..l.m).map(|x| (c, x)));
        }
        FiniteLattice::from_leq(owner.len(), |i, j| {
            let ((ci, xi), (cj, xj)) = (owner[i], owner[j]);
            ci < cj || (ci == cj && ls[ci].leq(xi, xj))
        })
        .expect("ordinal sum")
    }

    /// Stacks the lattices, identifying each top with the next bottom.
    pub fn adjoined_ordinal_sum(ls: &[&FiniteLattice]) -> FiniteLattice {
        let mut owner = Vec::new();
        for (c, l) in ls.iter().enumerate() {
            owner.extend(
                (0..l.m)
                    .filter(|&x| c == 0 || x != l.bottom)
                    .map(|x| (c, x)),
            );
        }
        FiniteLattice::from_leq(owner.len(), |i, j| {
            let ((ci, xi), (cj, xj)) = (owner[i], owner[j]);
            ci < cj || (ci == cj && ls[ci].leq(xi, xj))
        })
        .expect("adjoined ordinal sum")
    }

    /// `l1` and `l2` side by side between a new bottom and a new top.
    pub fn parallel_sum(l1: &FiniteLattice, l2: &FiniteLattice) -> FiniteLattice {
        let m = l1.m + l2.m + 2;
        let top = m - 1;
        let side = |i: usize| -> (usize, usize) {
            if i <= l1.m {
                (1, i - 1)
            } else {
                (2, i - 1 - l1.m)
            }
        };
        FiniteLattice::from_leq(m, |i, j| {
            if i == 0 || j == top {
                return true;
            }
            if j == 0 || i == top {
                return false;
            }
            let ((si, xi), (sj, xj)) = (side(i), side(j));
            si == sj
                && if si == 1 {
                    l1.leq(xi, xj)
                } else {
                    l2.leq(xi, xj)
                }
        })
        .expect("parallel sum")
    }

    /// New bottom below the bottoms of the panels, panel tops identified.
    pub fn parachute(ls: &[&FiniteLattice]) -> FiniteLattice {
        let mut owner = vec![(usize::MAX, 0)];
        for (c, l) in ls.iter().enumerate() {
            owner.extend((0..l.m).filter(|&x| x != l.top).map(|x| (c, x)));
        }
        owner.push((usize::MAX, 1));
        let top = owner.len() - 1;
        FiniteLattice::from_leq(owner.len(), |i, j| {
            if i == 0 || j == top {
                return true;
            }
            if j == 0 || i == top {
                return false;
            }
            let ((ci, xi), (cj, xj)) = (owner[i], owner[j]);
            ci == cj && ls[ci].leq(xi, xj)
        })
        .expect("parachute")
    }
}

/// A sublattice of a partition lattice together with its abstract lattice.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    /// Members, sorted by canonical form; lattice element `i` is `elements[i]`.
    pub elements: Vec<Partition>,
    pub lattice: FiniteLattice,
    /// True when the input was not closed and the generated sublattice was taken.
    pub generated: bool,
}

/// Abstract lattice of a set of partitions, taking the generated sublattice if needed.
pub fn from_partitions(parts: &[Partition]) -> Result<PartitionLattice> {
    let Some(first) = parts.first() else {
        return Err(Error::Input("no partitions given".into()));
    };
    if parts.iter().any(|p| p.len() != first.len()) {
        return Err(Error::Input("partitions of different sizes".into()));
    }
    let (elements, generated) = generate_sublattice(parts);
    let lattice = FiniteLattice::from_leq(elements.len(), |i, j| elements[i].leq(&elements[j]))?;
    Ok(PartitionLattice {
        elements,
        lattice,
        generated,
    })
}

/// Closure of a set of partitions under meet and join, sorted; flag says whether it grew.
pub fn generate_sublattice(parts: &[Partition]) -> (Vec<Partition>, bool) {
    let mut elements: Vec<Partition> = parts.to_vec();
    elements.sort();
    elements.dedup();
    let original = elements.len();
    let mut seen: HashSet<Partition> = elements.iter().cloned().collect();
    let mut i = 0;
    while i < elements.len() {
        for j in 0..i {
            for p in [
                elements[i].meet(&elements[j]),
                elements[i].join(&elements[j]),
            ] {
                if seen.insert(p.clone()) {
                    elements.push(p);
                }
            }
        }
        i += 1;
    }
    let generated = elements.len() != original;
    elements.sort();
    (elements, generated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m3_from_covers() {
        let m3 = FiniteLattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .unwrap();
        assert_eq!(m3.size(), 5);
        assert_eq!(m3.heights()[4], 2);
        assert_eq!(m3.join(1, 2), 4);
        assert_eq!(m3.meet(1, 2), 0);
        assert!(!m3.is_distributive());
        assert!(!m3.is_meet_semidistributive());
        assert!(m3.is_modular());
    }

    #[test]
    fn missing_join_reported() {
        let err = FiniteLattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]);
        assert!(err.is_ok());
        let bowtie = FiniteLattice::from_covers(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        );
        assert!(matches!(bowtie, Err(Error::NotLattice(_))));
    }

    #[test]
    fn iso_basics() {
        let m3 = FiniteLattice::m_n(3);
        let n5 = FiniteLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(!m3.is_isomorphic(&n5).unwrap());
        assert!(m3.is_isomorphic(&m3.dual().dual()).unwrap());
        assert!(FiniteLattice::eq(3)
            .unwrap()
            .dual()
            .is_isomorphic(&m3)
            .unwrap());
        assert!(FiniteLattice::chain(4)
            .dual()
            .is_isomorphic(&FiniteLattice::chain(4))
            .unwrap());
    }

    #[test]
    fn sum_sizes() {
        let b2 = FiniteLattice::boolean(2);
        assert_eq!(FiniteLattice::adjoined_ordinal_sum(&[&b2, &b2]).size(), 7);
        assert_eq!(FiniteLattice::ordinal_sum(&[&b2, &b2]).size(), 8);
        let p = FiniteLattice::parallel_sum(&FiniteLattice::chain(2), &FiniteLattice::chain(3));
        assert_eq!(p.size(), 7);
        assert_eq!(b2.direct_product(&FiniteLattice::chain(3)).size(), 12);
        let c2 = FiniteLattice::chain(2);
        assert!(FiniteLattice::parachute(&[&c2])
            .is_isomorphic(&FiniteLattice::chain(3))
            .unwrap());
        let m3 = FiniteLattice::m_n(3);
        assert_eq!(
            FiniteLattice::parachute(&[&m3, &c2, &b2]).size(),
            4 + 1 + 3 + 2
        );
    }

    #[test]
    fn generated_sublattice_flag() {
        let a = Partition::parse("|0,1|2|3|").unwrap();
        let b = Partition::parse("|0|1|2,3|").unwrap();
        let pl = from_partitions(&[a.clone(), b.clone()]).unwrap();
        assert!(pl.generated);
        assert_eq!(pl.elements.len(), 4);
        let closed = from_partitions(&pl.elements).unwrap();
        assert!(!closed.generated);
    }
}
