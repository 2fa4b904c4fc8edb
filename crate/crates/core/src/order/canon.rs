//! Exact canonical labeling of finite posets.
//!
//! Individualization-refinement over the cover digraph: an equitable ordered
//! partition is refined from the level/degree invariants, then every
//! non-singleton cell is individualized in turn. The canonical form is the
//! lexicographically least relabeled cover matrix over all leaves of the
//! search tree. Automorphisms discovered at leaves prune sibling subtrees.

use super::{bits, Lattice};

/// Order-isomorphism invariant fingerprint of a poset.
///
/// Two posets have equal keys iff they are order-isomorphic. The byte layout
/// is stable across runs: the element count followed by the rows of the
/// canonically relabeled cover matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

const MAX_STORED_AUTOMORPHISMS: usize = 128;

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    n: usize,
    up: &'a [u64],
    down: &'a [u64],
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

pub(crate) fn canonical_key(p: &Lattice) -> CanonicalKey {
    let n = p.size();
    let up: Vec<u64> = (0..n).map(|x| p.upper_mask(x)).collect();
    let down: Vec<u64> = (0..n).map(|x| p.lower_mask(x)).collect();
    let labeling = canonical_labeling(p, &up, &down);

    let row_bytes = n.div_ceil(8);
    let mut out = Vec::with_capacity(1 + n * row_bytes);
    out.push(n as u8);
    for row in code(&up, &labeling) {
        out.extend_from_slice(&row.to_le_bytes()[..row_bytes]);
    }
    CanonicalKey(out)
}

fn initial_cells(p: &Lattice) -> Cells {
    let n = p.size();
    let mut depth = vec![0u32; n];
    for &x in p.topological() {
        for y in p.upper_covers(x) {
            depth[y] = depth[y].max(depth[x] + 1);
        }
    }
    let mut rise = vec![0u32; n];
    for &x in p.topological().iter().rev() {
        for y in p.upper_covers(x) {
            rise[x] = rise[x].max(rise[y] + 1);
        }
    }
    let invariant =
        |x: usize| (depth[x], rise[x], p.lower_degree(x), p.upper_degree(x));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| invariant(x));
    let mut cells: Cells = Vec::new();
    for x in order {
        match cells.last_mut() {
            Some(cell) if invariant(cell[0]) == invariant(x) => cell.push(x),
            _ => cells.push(vec![x]),
        }
    }
    cells
}

fn canonical_labeling(p: &Lattice, up: &[u64], down: &[u64]) -> Vec<usize> {
    let mut search = Search {
        n: p.size(),
        up,
        down,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.descend(initial_cells(p), &mut prefix);
    search.best.expect("search tree has at least one leaf").1
}

/// Relabeled cover matrix: row `perm[x]` lists `perm[y]` for each `x ⋖ y`.
fn code(up: &[u64], perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; up.len()];
    for (x, &mask) in up.iter().enumerate() {
        let mut row = 0;
        for y in bits(mask) {
            row |= 1 << perm[y];
        }
        rows[perm[x]] = row;
    }
    rows
}

impl Search<'_> {
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let signature = |v: usize| -> Vec<(u32, u32)> {
                    masks
                        .iter()
                        .map(|&m| ((self.up[v] & m).count_ones(), (self.down[v] & m).count_ones()))
                        .collect()
                };
                let mut keyed: Vec<(Vec<(u32, u32)>, usize)> =
                    cell.into_iter().map(|v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let changed = next.len() != masks.len();
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, cells: &Cells) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let rows = code(self.up, &perm);

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                let mut inverse = vec![0usize; self.n];
                for (x, &p) in reference.1.iter().enumerate() {
                    inverse[p] = x;
                }
                let gamma: Vec<usize> = (0..self.n).map(|x| inverse[perm[x]]).collect();
                if gamma.iter().enumerate().any(|(x, &g)| g != x)
                    && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS
                {
                    self.automorphisms.push(gamma);
                }
                break;
            }
        }

        if self.first.is_none() {
            self.first = Some((rows.clone(), perm.clone()));
        }
        match &self.best {
            Some((best, _)) if *best <= rows => {}
            _ => self.best = Some((rows, perm)),
        }
    }
}
