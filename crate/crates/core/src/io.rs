//! Text formats for algebras and lattices, DOT export, and argument lists.
//!
//! Algebra files:
//! ```text
//! # comment
//! algebra S3
//! size 6
//! op g0 4 3 5 1 0 2
//! op g1 1 2 0 4 5 3
//! ```
//! Lattice files:
//! ```text
//! lattice N5
//! size 5
//! label 0 bottom
//! cover 0 1
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::partition::Partition;
use crate::unary_algebra::{ConLattice, UnaryAlgebra};

fn parse_err<T>(line: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("line {line}: {msg}")))
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .or_else(|_| parse_err(line, format!("expected a number, found {tok:?}")))
}

/// Meaningful lines with their 1-based numbers, comments and blanks removed.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

pub fn parse_algebra(text: &str) -> Result<UnaryAlgebra> {
    let mut name = String::from("algebra");
    let mut size = None;
    let mut ops: Vec<(usize, String, Vec<usize>)> = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "algebra" if toks.len() == 2 => name = toks[1].to_string(),
            "size" if toks.len() == 2 => size = Some(num(ln, toks[1])?),
            "op" if toks.len() >= 2 => {
                let map = toks[2..]
                    .iter()
                    .map(|t| num(ln, t))
                    .collect::<Result<_>>()?;
                ops.push((ln, toks[1].to_string(), map));
            }
            _ => return parse_err(ln, format!("unrecognized line {:?}", toks.join(" "))),
        }
    }
    let Some(n) = size else {
        return parse_err(0, "missing size line");
    };
    let mut alg = UnaryAlgebra::new(name, n);
    for (ln, op_name, map) in ops {
        if alg.op(&op_name).is_some() {
            return parse_err(ln, format!("duplicate op {op_name}"));
        }
        alg.add_op(op_name, map).or_else(|e| parse_err(ln, e))?;
    }
    Ok(alg)
}

pub fn write_algebra(alg: &UnaryAlgebra) -> String {
    let mut out = format!("algebra {}\nsize {}\n", alg.name(), alg.size());
    for op in alg.ops() {
        out.push_str("op ");
        out.push_str(&op.name);
        for v in &op.map {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Parses a lattice file into its name and lattice.
pub fn parse_lattice(text: &str) -> Result<(String, FiniteLattice)> {
    let mut name = String::from("lattice");
    let mut size = None;
    let mut covers = Vec::new();
    let mut labels = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "lattice" if toks.len() == 2 => name = toks[1].to_string(),
            "size" if toks.len() == 2 => size = Some(num(ln, toks[1])?),
            "cover" if toks.len() == 3 => covers.push((num(ln, toks[1])?, num(ln, toks[2])?)),
            "label" if toks.len() == 3 => labels.push((ln, num(ln, toks[1])?, toks[2].to_string())),
            _ => return parse_err(ln, format!("unrecognized line {:?}", toks.join(" "))),
        }
    }
    let Some(m) = size else {
        return parse_err(0, "missing size line");
    };
    let lattice = FiniteLattice::from_covers(m, &covers)?;
    let mut names: Vec<String> = lattice.labels().to_vec();
    for (ln, i, l) in labels {
        if i >= m {
            return parse_err(ln, format!("label index {i} out of range"));
        }
        names[i] = l;
    }
    Ok((name, lattice.with_labels(&names)))
}

pub fn write_lattice(name: &str, l: &FiniteLattice) -> String {
    let mut out = format!("lattice {name}\nsize {}\n", l.size());
    for (i, label) in l.labels().iter().enumerate() {
        if *label != i.to_string() {
            let _ = writeln!(out, "label {i} {label}");
        }
    }
    for (a, b) in l.covers() {
        let _ = writeln!(out, "cover {a} {b}");
    }
    out
}

/// Hasse diagram with the bottom drawn lowest, nodes named by element labels.
pub fn lattice_dot(name: &str, l: &FiniteLattice) -> String {
    let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n  node [shape=box];\n");
    let label = |i: usize| format!("\"{}\"", l.labels()[i].replace('"', "\\\""));
    for i in 0..l.size() {
        let _ = writeln!(out, "  {};", label(i));
    }
    for (a, b) in l.covers() {
        let _ = writeln!(out, "  {} -> {};", label(a), label(b));
    }
    out.push_str("}\n");
    out
}

/// Congruences from the bottom up: more blocks first, ties broken by canonical form.
pub fn sorted_congruences(con: &ConLattice) -> Vec<&Partition> {
    let mut v: Vec<&Partition> = con.elements().iter().collect();
    v.sort_by(|a, b| {
        b.block_count()
            .cmp(&a.block_count())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    v
}

/// One congruence per line, as ordered by [`sorted_congruences`].
pub fn con_listing(con: &ConLattice) -> String {
    let mut out = String::new();
    for p in sorted_congruences(con) {
        let _ = writeln!(out, "{p}");
    }
    out
}

/// Hasse diagram of a congruence lattice with partitions as node names.
pub fn con_dot(name: &str, con: &ConLattice) -> String {
    let labels: Vec<String> = con.elements().iter().map(|p| p.to_string()).collect();
    lattice_dot(name, &con.to_lattice().with_labels(&labels))
}

/// `"0,2,5"` to a list of points.
pub fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad number {t:?}")))
        })
        .collect()
}

/// `"0,3|2,5"` to groups of points.
pub fn parse_groups(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split('|').map(parse_usize_list).collect()
}

/// `"0:3,8:11"` to pairs of points.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("pair {t:?} needs a:b")))?;
            let a = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair {t:?}")))?;
            let b = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair {t:?}")))?;
            Ok((a, b))
        })
        .collect()
}
