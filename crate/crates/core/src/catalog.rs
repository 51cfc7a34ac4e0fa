//! Named small lattices, stored as cover lists.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Names accepted by [`catalog`]; `k` is a positive integer.
pub const NAMES: &[&str] = &[
    "chain(k)",
    "M_n(k)",
    "boolean(k)",
    "Eq(k)",
    "N5",
    "M3_3",
    "L7",
    "L9",
    "L11",
    "L13",
    "L17",
    "L19",
    "L20",
    "Sub_A4",
    "hexagon",
];

type Entry = (usize, &'static [(usize, usize)], &'static [&'static str]);

fn fixed(name: &str) -> Option<Entry> {
    Some(match name {
        "N5" => (5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], &[]),
        "M3_3" => (
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 7),
                (5, 7),
                (6, 7),
            ],
            &[],
        ),
        "L7" => (
            7,
            &[
                (0, 1),
                (1, 6),
                (0, 2),
                (2, 5),
                (0, 3),
                (3, 5),
                (5, 6),
                (3, 4),
                (4, 6),
            ],
            &["0", "K", "J1", "J2", "M1", "M2", "1"],
        ),
        "L9" => (
            7,
            &[
                (0, 1),
                (1, 6),
                (0, 2),
                (2, 6),
                (0, 3),
                (3, 6),
                (0, 4),
                (4, 5),
                (5, 6),
            ],
            &[],
        ),
        "L11" => (
            7,
            &[
                (0, 2),
                (2, 5),
                (5, 6),
                (2, 3),
                (3, 4),
                (4, 6),
                (0, 1),
                (1, 4),
            ],
            &[],
        ),
        "L13" => (
            7,
            &[
                (0, 1),
                (1, 4),
                (4, 5),
                (5, 6),
                (0, 2),
                (2, 6),
                (0, 3),
                (3, 6),
            ],
            &[],
        ),
        "L17" => (
            7,
            &[
                (0, 4),
                (4, 6),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (2, 5),
                (3, 5),
                (5, 6),
            ],
            &[],
        ),
        "L19" => (
            7,
            &[
                (0, 1),
                (1, 3),
                (3, 6),
                (0, 2),
                (2, 4),
                (4, 6),
                (0, 5),
                (5, 3),
            ],
            &[],
        ),
        "L20" => (
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 6),
                (6, 4),
                (0, 5),
                (5, 4),
            ],
            &[],
        ),
        "Sub_A4" => (
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (4, 9),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (5, 9),
                (6, 9),
                (7, 9),
                (8, 9),
            ],
            &[
                "1", "C2a", "C2b", "C2c", "V4", "C3a", "C3b", "C3c", "C3d", "A4",
            ],
        ),
        "hexagon" => (6, &[(0, 1), (1, 2), (2, 3), (3, 5), (0, 4), (4, 5)], &[]),
        _ => return None,
    })
}

fn parameter(name: &str, prefix: &str) -> Option<Result<usize>> {
    let inner = name.strip_prefix(prefix)?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad parameter in {name:?}"))),
    )
}

/// The lattice with the given catalog name.
pub fn catalog(name: &str) -> Result<FiniteLattice> {
    let name = name.trim();
    if let Some((m, covers, labels)) = fixed(name) {
        let l = FiniteLattice::from_covers(m, covers)?;
        return Ok(if labels.is_empty() {
            l
        } else {
            l.with_labels(labels)
        });
    }
    if let Some(k) = parameter(name, "chain(") {
        let k = k?;
        if k == 0 {
            return Err(Error::Input("chain needs at least one element".into()));
        }
        return Ok(FiniteLattice::chain(k));
    }
    if let Some(k) = parameter(name, "M_n(") {
        return Ok(FiniteLattice::m_n(k?));
    }
    if let Some(k) = parameter(name, "boolean(") {
        return Ok(FiniteLattice::boolean(k?));
    }
    if let Some(k) = parameter(name, "Eq(") {
        let k = k?;
        if k == 0 {
            return Err(Error::Input("Eq needs at least one point".into()));
        }
        return FiniteLattice::eq(k);
    }
    Err(Error::Input(format!(
        "unknown lattice {name:?}; known: {}",
        NAMES.join(", ")
    )))
}

/// Catalog names of lattices isomorphic to `l`, fixed entries first.
///
/// Lattices larger than `iso_cap` are not searched and yield no names.
pub fn identify(l: &FiniteLattice, iso_cap: usize) -> Result<Vec<String>> {
    let m = l.size();
    if m > iso_cap {
        return Ok(Vec::new());
    }
    let mut names: Vec<String> = NAMES
        .iter()
        .filter(|n| !n.contains('('))
        .map(|n| n.to_string())
        .collect();
    names.push(format!("chain({m})"));
    if m >= 2 {
        names.push(format!("M_n({})", m - 2));
    }
    if m.is_power_of_two() {
        names.push(format!("boolean({})", m.trailing_zeros()));
    }
    if let Some(k) = (1..=12).find(|&k| crate::partition::bell(k) == Some(m as u128)) {
        names.push(format!("Eq({k})"));
    }
    let mut found = Vec::new();
    for name in names {
        let candidate = catalog(&name)?;
        if candidate.size() != m {
            continue;
        }
        if candidate.isomorphism_capped(l, iso_cap)?.is_some() {
            found.push(name);
        }
    }
    Ok(found)
}
