//! Lattice JSON (`{"n": 4, "covers": [[0, 1], ...]}`) and Hasse-diagram DOT.

use serde::{Deserialize, Serialize};

use super::Lattice;
use crate::error::{Error, Result};

/// Wire form of a poset: element count and 0-based covering pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            n: l.size(),
            covers: l.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<LatticeJson> for Lattice {
    type Error = Error;

    fn try_from(value: LatticeJson) -> Result<Self> {
        let covers: Vec<_> = value.covers.iter().map(|&[a, b]| (a, b)).collect();
        Lattice::from_covers(value.n, &covers)
    }
}

impl Lattice {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LatticeJson::from(self)).expect("lattice JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: LatticeJson = serde_json::from_str(text)?;
        wire.try_into()
    }
}

/// Hasse diagram with edges drawn bottom to top.
pub fn to_dot(l: &Lattice, name: &str) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..l.size() {
        out.push_str(&format!("  {x};\n"));
    }
    for &(a, b) in l.covers() {
        out.push_str(&format!("  {a} -> {b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset produced by [`to_dot`]: numeric node ids, node
/// statements, `a -> b` edge statements (chains allowed), and attribute
/// statements, which are ignored. The element count is one more than the
/// largest id mentioned.
pub fn parse_dot(text: &str) -> Result<Lattice> {
    let (open, close) = text
        .find('{')
        .zip(text.rfind('}'))
        .filter(|(open, close)| open < close)
        .ok_or_else(|| Error::Parse("expected `digraph name { ... }`".into()))?;
    let body = &text[open + 1..close];
    let first_line = text[..open].matches('\n').count() + 1;

    let mut size = 0usize;
    let mut covers = Vec::new();
    for (line_no, line) in body.lines().enumerate() {
        let line = line.split("//").next().unwrap_or("");
        for stmt in line.split(';') {
            let stmt = strip_attributes(stmt).trim();
            if stmt.is_empty() || stmt.contains('=') && !stmt.contains("->") {
                continue;
            }
            if matches!(stmt, "node" | "edge" | "graph") {
                continue;
            }
            let ids = stmt
                .split("->")
                .map(|tok| {
                    let tok = tok.trim().trim_matches('"');
                    tok.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("line {}: node id `{tok}` is not a number", line_no + first_line))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            for &id in &ids {
                size = size.max(id + 1);
            }
            covers.extend(ids.windows(2).map(|w| (w[0], w[1])));
        }
    }
    Lattice::from_covers(size, &covers)
}

fn strip_attributes(stmt: &str) -> &str {
    match stmt.find('[') {
        Some(i) => &stmt[..i],
        None => stmt,
    }
}
