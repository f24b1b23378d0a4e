//! Finite groups given by a full multiplication table.
//!
//! File format:
//!
//! ```text
//! order 4
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! gens 1 2
//! ```
//!
//! Row `i`, column `j` holds the index of the product `i·j`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Associativity is checked on every triple up to this order.
pub const ASSOCIATIVITY_CHECK_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTable {
    order: usize,
    products: Vec<u32>,
    inverses: Vec<u32>,
    identity: u32,
    generators: Vec<u32>,
    label: String,
}

impl FiniteTable {
    /// Validates `rows` as a group table and records the generator elements.
    pub fn new(
        rows: Vec<Vec<u32>>,
        generators: Vec<u32>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut products = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= order {
                    return Err(Error::InvalidTable(format!(
                        "closure fails: {i}·{j} = {v} is not an element"
                    )));
                }
            }
            products.extend_from_slice(row);
        }
        let at = |i: usize, j: usize| products[i * order + j] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;

        let mut inverses = Vec::with_capacity(order);
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("no inverse for element {x}")))?;
            inverses.push(inv as u32);
        }

        if order <= ASSOCIATIVITY_CHECK_CAP {
            for x in 0..order {
                for y in 0..order {
                    let xy = at(x, y);
                    for z in 0..order {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails on triple ({x}, {y}, {z})"
                            )));
                        }
                    }
                }
            }
        }

        if generators.is_empty() {
            return Err(Error::InvalidTable(
                "at least one generator required".into(),
            ));
        }
        if let Some(&g) = generators.iter().find(|&&g| g as usize >= order) {
            return Err(Error::InvalidTable(format!(
                "generator {g} is not an element"
            )));
        }

        Ok(FiniteTable {
            order,
            products,
            inverses,
            identity: identity as u32,
            generators,
            label: label.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn multiply(&self, a: u32, b: u32) -> u32 {
        self.products[a as usize * self.order + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// Parses the table file format; `label` becomes the engine's rendered path.
    pub fn parse(text: &str, label: impl Into<String>) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let order: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected `order <k>`, found `{header}`"),
            })?;

        let mut rows = Vec::with_capacity(order);
        for r in 0..order {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: line_no + r + 1,
                message: format!("expected {order} table rows, found {r}"),
            })?;
            rows.push(parse_indices(line, line_no)?);
        }

        let (line_no, gens) = lines.next().ok_or(Error::Parse {
            line: line_no + order + 1,
            message: "missing `gens` line".into(),
        })?;
        let gens = gens.strip_prefix("gens").ok_or_else(|| Error::Parse {
            line: line_no,
            message: "expected `gens i1 i2 ...`".into(),
        })?;
        let generators = parse_indices(gens, line_no)?;
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "trailing content after `gens` line".into(),
            });
        }
        FiniteTable::new(rows, generators, label)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        FiniteTable::parse(&text, path.display().to_string())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order {}", self.order);
        for row in self.products.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        let gens: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "gens {}", gens.join(" "));
        out
    }
}

fn parse_indices(line: &str, line_no: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{t}` is not an element index"),
            })
        })
        .collect()
}

/// Klein four-group `ℤ/2 × ℤ/2` with elements `0 = e`, `1 = a`, `2 = b`,
/// `3 = ab`, generated by `a` and `b`.
pub fn klein_four() -> FiniteTable {
    let rows = (0..4u32)
        .map(|i| (0..4u32).map(|j| i ^ j).collect())
        .collect();
    FiniteTable::new(rows, vec![1, 2], "klein").expect("klein table is a group")
}

/// Symmetric group on three letters, generated by the transposition (12) and
/// the 3-cycle (123).
pub fn symmetric_three() -> FiniteTable {
    // permutations of {0,1,2} as images [p(0), p(1), p(2)]
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2], // (12)
        [1, 2, 0], // (123)
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([q[p[0]], q[p[1]], q[p[2]]]))
                .collect()
        })
        .collect();
    FiniteTable::new(rows, vec![1, 2], "s3").expect("s3 table is a group")
}
