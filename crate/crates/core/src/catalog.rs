//! The thirty basic blocks with five comparable reducible elements and
//! nullity three.
//!
//! Odd-numbered blocks (plus B6) are stored as base-chain adjunct
//! representations; every listed even partner is the mirrored rep of its dual.
//! Self-duality and the dual pairing are computed from canonical keys.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::adjunct::{basic_block_of, AdjunctRep};
use crate::error::{domain, Error, Result};
use crate::order::{CanonicalKey, Lattice};

/// Index of a block in the catalog, `B1` through `B30`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct BasicBlockId(u8);

impl BasicBlockId {
    pub const COUNT: u8 = 30;

    pub fn new(index: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&index) {
            Ok(BasicBlockId(index))
        } else {
            Err(domain(format!("basic block index {index} outside 1..=30")))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = BasicBlockId> {
        (1..=Self::COUNT).map(BasicBlockId)
    }

    /// Height of the block, fixed by its position in the list.
    pub fn height(self) -> usize {
        match self.0 {
            1..=7 => 4,
            8..=19 => 5,
            20..=28 => 6,
            _ => 7,
        }
    }

    /// Number of elements of the block itself: the smallest lattice in its class.
    pub fn min_size(self) -> usize {
        self.height() + 4
    }
}

impl TryFrom<u8> for BasicBlockId {
    type Error = Error;
    fn try_from(value: u8) -> Result<Self> {
        BasicBlockId::new(value)
    }
}

impl From<BasicBlockId> for u8 {
    fn from(id: BasicBlockId) -> u8 {
        id.0
    }
}

impl fmt::Display for BasicBlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.0)
    }
}

impl FromStr for BasicBlockId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix(['B', 'b']).unwrap_or(s);
        let index = digits.parse::<u8>().map_err(|_| Error::Parse(format!("not a block id: `{s}`")))?;
        BasicBlockId::new(index)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: BasicBlockId,
    pub rep: AdjunctRep,
    pub dual_of: BasicBlockId,
    pub height: usize,
    pub min_size: usize,
    #[serde(skip)]
    pub lattice: Lattice,
    #[serde(skip)]
    pub key: CanonicalKey,
}

type Row = (u8, usize, [(usize, usize); 3]);

/// Base length and the three pairs on the base chain; all attached chains are
/// single elements.
const PRIMARY: [Row; 16] = [
    (1, 5, [(0, 2), (1, 3), (1, 4)]),
    (3, 5, [(0, 2), (1, 3), (0, 4)]),
    (5, 5, [(0, 2), (1, 3), (2, 4)]),
    (6, 5, [(0, 3), (1, 4), (2, 4)]),
    (8, 6, [(0, 2), (1, 3), (3, 5)]),
    (10, 6, [(0, 2), (1, 5), (3, 5)]),
    (12, 6, [(0, 4), (1, 3), (1, 5)]),
    (14, 6, [(0, 4), (1, 3), (3, 5)]),
    (16, 6, [(0, 4), (1, 3), (0, 5)]),
    (18, 6, [(1, 4), (2, 4), (0, 5)]),
    (20, 7, [(0, 2), (3, 5), (3, 6)]),
    (22, 7, [(0, 2), (3, 6), (4, 6)]),
    (24, 7, [(0, 4), (1, 3), (4, 6)]),
    (26, 7, [(0, 2), (3, 5), (0, 6)]),
    (28, 7, [(1, 3), (3, 5), (0, 6)]),
    (29, 8, [(0, 2), (3, 5), (5, 7)]),
];

/// Blocks listed as the dual of their predecessor.
const DUAL_PARTNERS: [(u8, u8); 14] = [
    (2, 1),
    (4, 3),
    (7, 6),
    (9, 8),
    (11, 10),
    (13, 12),
    (15, 14),
    (17, 16),
    (19, 18),
    (21, 20),
    (23, 22),
    (25, 24),
    (27, 26),
    (30, 29),
];

fn rep_of(base: usize, pairs: &[(usize, usize)]) -> AdjunctRep {
    pairs.iter().fold(AdjunctRep::chain(base), |rep, &(a, b)| rep.attach(a, b, 1))
}

fn build_catalog() -> Vec<CatalogEntry> {
    let mut reps: Vec<Option<AdjunctRep>> = vec![None; BasicBlockId::COUNT as usize + 1];
    for (id, base, pairs) in PRIMARY {
        reps[id as usize] = Some(rep_of(base, &pairs));
    }
    for (id, partner) in DUAL_PARTNERS {
        let dual = reps[partner as usize].as_ref().and_then(AdjunctRep::dual);
        reps[id as usize] = dual;
    }

    let built: Vec<(BasicBlockId, AdjunctRep, Lattice, CanonicalKey)> = BasicBlockId::all()
        .map(|id| {
            let rep = reps[id.index() as usize].clone().expect("every block has a rep");
            let lattice = rep.build().expect("catalog reps are valid");
            let key = lattice.canonical_key();
            (id, rep, lattice, key)
        })
        .collect();

    built
        .iter()
        .map(|(id, rep, lattice, key)| {
            let dual_key = lattice.dual().canonical_key();
            let dual_of = built
                .iter()
                .find(|(_, _, _, k)| *k == dual_key)
                .map(|(other, ..)| *other)
                .expect("catalog is closed under duality");
            CatalogEntry {
                id: *id,
                rep: rep.clone(),
                dual_of,
                height: id.height(),
                min_size: id.min_size(),
                lattice: lattice.clone(),
                key: key.clone(),
            }
        })
        .collect()
}

/// All thirty entries, in id order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn entry(id: BasicBlockId) -> &'static CatalogEntry {
    &catalog()[id.index() as usize - 1]
}

/// All blocks in one DOT graph, clustered by height.
pub fn catalog_dot() -> String {
    let mut out = String::from("digraph catalog {\n  rankdir=BT;\n  node [shape=circle, label=\"\"];\n");
    for height in 4..=7 {
        out.push_str(&format!("  subgraph cluster_h{height} {{\n    label=\"height {height}\";\n"));
        for e in catalog().iter().filter(|e| e.height == height) {
            out.push_str(&format!("    subgraph cluster_{} {{\n      label=\"{}\";\n", e.id, e.id));
            for x in 0..e.lattice.size() {
                out.push_str(&format!("      {}_{x};\n", e.id));
            }
            for &(a, b) in e.lattice.covers() {
                out.push_str(&format!("      {id}_{a} -> {id}_{b};\n", id = e.id));
            }
            out.push_str("    }\n");
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Identifies the catalog block a lattice reduces to.
///
/// The input must be an RC-lattice with five reducible elements and nullity
/// three. Returns `None` only if its basic block is not in the catalog.
pub fn identify(l: &Lattice) -> Result<Option<BasicBlockId>> {
    if !l.is_rc()? {
        return Err(domain("lattice is not an RC-lattice"));
    }
    let r = l.reducible_elements()?.len();
    let k = l.nullity()?;
    if (r, k) != (5, 3) {
        return Err(domain(format!("expected 5 reducible elements and nullity 3, found r={r}, k={k}")));
    }
    Ok(identify_block(&basic_block_of(l)?.block))
}

/// Looks up an already-reduced block by canonical key.
pub(crate) fn identify_block(block: &Lattice) -> Option<BasicBlockId> {
    if !(8..=11).contains(&block.size()) {
        return None;
    }
    let key = block.canonical_key();
    catalog().iter().find(|e| e.key == key).map(|e| e.id)
}
