//! Canonical set partitions of `{0..n-1}`.

use std::collections::HashMap;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{check_cap, input, Error, Result};

/// A partition of `{0..n-1}` stored as `block_id[x]` = least element of the block of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_id: Vec<usize>,
}

impl Partition {
    /// All singletons.
    pub fn bottom(n: usize) -> Self {
        Partition {
            block_id: (0..n).collect(),
        }
    }

    /// One block.
    pub fn top(n: usize) -> Self {
        Partition {
            block_id: vec![0; n],
        }
    }

    /// Partition whose blocks are the fibers of an arbitrary labeling.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut first: HashMap<&T, usize> = HashMap::with_capacity(labels.len());
        let block_id = labels
            .iter()
            .enumerate()
            .map(|(x, l)| *first.entry(l).or_insert(x))
            .collect();
        Partition { block_id }
    }

    /// Kernel of a total map on `{0..n-1}`.
    pub fn kernel_of_map(f: &[usize]) -> Self {
        let mut first = vec![usize::MAX; f.iter().max().map_or(0, |m| m + 1)];
        let block_id = f
            .iter()
            .enumerate()
            .map(|(x, &v)| {
                if first[v] == usize::MAX {
                    first[v] = x;
                }
                first[v]
            })
            .collect();
        Partition { block_id }
    }

    /// Accepts a block-id vector that is already canonical.
    pub fn from_block_ids(block_id: Vec<usize>) -> Result<Self> {
        for (x, &b) in block_id.iter().enumerate() {
            if b > x || block_id[b] != b {
                return input(format!("block id vector is not canonical at {x}"));
            }
        }
        Ok(Partition { block_id })
    }

    /// Builds a partition from disjoint blocks covering `{0..n-1}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x >= n {
                    return input(format!("element {x} out of range for n={n}"));
                }
                if label[x] != usize::MAX {
                    return input(format!("element {x} appears twice"));
                }
                label[x] = i;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return input(format!("element {x} is not covered"));
        }
        Ok(Partition::from_labels(&label))
    }

    /// Least equivalence containing the given pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return input(format!("pair ({x},{y}) out of range for n={n}"));
            }
            uf.union(x, y);
        }
        Ok(Partition::from_union_find(&mut uf, n))
    }

    pub(crate) fn from_union_find(uf: &mut UnionFind<usize>, n: usize) -> Self {
        let mut least = vec![usize::MAX; n];
        let block_id = (0..n)
            .map(|x| {
                let r = uf.find_mut(x);
                if least[r] == usize::MAX {
                    least[r] = x;
                }
                least[r]
            })
            .collect();
        Partition { block_id }
    }

    /// Parses bar notation; `n` is one more than the largest element.
    pub fn parse(text: &str) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        let n = blocks.iter().flatten().max().map_or(0, |m| m + 1);
        Partition::from_blocks(n, &blocks).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses bar notation for a known carrier size.
    pub fn parse_sized(text: &str, n: usize) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        Partition::from_blocks(n, &blocks).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.block_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_id.is_empty()
    }

    pub fn block_id(&self) -> &[usize] {
        &self.block_id
    }

    /// Whether `x` and `y` share a block.
    pub fn same(&self, x: usize, y: usize) -> bool {
        self.block_id[x] == self.block_id[y]
    }

    pub fn is_bottom(&self) -> bool {
        self.block_id.iter().enumerate().all(|(x, &b)| x == b)
    }

    pub fn is_top(&self) -> bool {
        self.block_id.iter().all(|&b| b == 0)
    }

    fn check_size(&self, other: &Partition) -> Result<()> {
        if self.len() != other.len() {
            return input(format!("size mismatch: {} vs {}", self.len(), other.len()));
        }
        Ok(())
    }

    /// Common refinement. Panics on a size mismatch; see [`Partition::checked_meet`].
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "partition size mismatch");
        let keys: Vec<(usize, usize)> = self
            .block_id
            .iter()
            .zip(&other.block_id)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_labels(&keys)
    }

    /// Transitive closure of the union. Panics on a size mismatch; see [`Partition::checked_join`].
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "partition size mismatch");
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            uf.union(x, self.block_id[x]);
            uf.union(x, other.block_id[x]);
        }
        Partition::from_union_find(&mut uf, n)
    }

    /// Refinement order. Panics on a size mismatch; see [`Partition::checked_leq`].
    pub fn leq(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len(), "partition size mismatch");
        self.block_id
            .iter()
            .enumerate()
            .all(|(x, &b)| other.block_id[x] == other.block_id[b])
    }

    pub fn checked_meet(&self, other: &Partition) -> Result<Partition> {
        self.check_size(other)?;
        Ok(self.meet(other))
    }

    pub fn checked_join(&self, other: &Partition) -> Result<Partition> {
        self.check_size(other)?;
        Ok(self.join(other))
    }

    pub fn checked_leq(&self, other: &Partition) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.leq(other))
    }

    /// Blocks ordered by least element, elements ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.len()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (x, &b) in self.block_id.iter().enumerate() {
            if b == x {
                index[x] = out.len();
                out.push(Vec::new());
            }
            out[index[b]].push(x);
        }
        out
    }

    /// Least element of each block, ascending.
    pub fn transversal(&self) -> Vec<usize> {
        self.block_id
            .iter()
            .enumerate()
            .filter(|(x, &b)| *x == b)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn block_count(&self) -> usize {
        self.block_id
            .iter()
            .enumerate()
            .filter(|(x, &b)| *x == b)
            .count()
    }

    /// Elements of the block containing `x`.
    pub fn block_of(&self, x: usize) -> Vec<usize> {
        let b = self.block_id[x];
        (b..self.len()).filter(|&y| self.block_id[y] == b).collect()
    }

    /// Intersection with `subset²`, relabeled by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Partition> {
        let mut seen = vec![false; self.len()];
        for &x in subset {
            if x >= self.len() {
                return input(format!("element {x} out of range for n={}", self.len()));
            }
            if seen[x] {
                return input(format!("element {x} repeated in subset"));
            }
            seen[x] = true;
        }
        let labels: Vec<usize> = subset.iter().map(|&x| self.block_id[x]).collect();
        Ok(Partition::from_labels(&labels))
    }

    /// Pairs `(x, leader)` that generate this partition.
    pub fn generating_pairs(&self) -> Vec<(usize, usize)> {
        self.block_id
            .iter()
            .enumerate()
            .filter(|(x, &b)| *x != b)
            .map(|(x, &b)| (b, x))
            .collect()
    }

    /// All pairs `x < y` in a common block.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in self.blocks() {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for b in self.blocks() {
            let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{}|", items.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>> {
    let t = text.trim();
    if !t.starts_with('|') || !t.ends_with('|') {
        return Err(Error::Parse(format!(
            "partition must be delimited by '|': {t:?}"
        )));
    }
    let mut blocks = Vec::new();
    for chunk in t.split('|').filter(|c| !c.trim().is_empty()) {
        let mut block = Vec::new();
        for item in chunk.split(',') {
            let item = item.trim();
            let x = item
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad element {item:?}")))?;
            block.push(x);
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Number of partitions of an `n`-element set; `None` on overflow.
pub fn bell(n: usize) -> Option<u128> {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last()?);
        for v in &row {
            let s = next.last()?.checked_add(*v)?;
            next.push(s);
        }
        row = next;
    }
    row.first().copied()
}

/// Every partition of `{0..n-1}` in restricted-growth-string lexicographic order.
pub fn enumerate_all(n: usize) -> Result<Vec<Partition>> {
    enumerate_all_capped(n, crate::Caps::default().partition_n)
}

pub fn enumerate_all_capped(n: usize, cap: usize) -> Result<Vec<Partition>> {
    check_cap("partition enumeration size", n, cap)?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::bottom(0));
        return Ok(out);
    }
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        out.push(rgs_to_partition(&rgs));
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

fn rgs_to_partition(rgs: &[usize]) -> Partition {
    let mut first = vec![usize::MAX; rgs.len()];
    let block_id = rgs
        .iter()
        .enumerate()
        .map(|(x, &v)| {
            if first[v] == usize::MAX {
                first[v] = x;
            }
            first[v]
        })
        .collect();
    Partition { block_id }
}
