//! Exhaustive enumeration of RC-lattices up to isomorphism.
//!
//! An RC-lattice of nullity `k` is a maximal chain through its reducible
//! elements with `k` chains attached between pairs of that chain. The
//! enumerator walks every base length, every multiset of `k`
//! (pair, chain length) attachments and keeps one lattice per canonical key.
//! Work is split into shards by base length and first attachment; shards
//! are merged by key, always keeping the least representation, so output is
//! independent of scheduling.

pub mod levelwise;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::adjunct::{basic_block_of, AdjunctRep, Attachment};
use crate::catalog::{identify_block, BasicBlockId};
use crate::error::{Error, Result};
use crate::order::{CanonicalKey, Lattice};

pub const DEFAULT_CEILING: usize = 13;
pub const CEILING_ENV: &str = "CENSUS_CEILING";

/// What to enumerate: lattices on `n` elements of nullity `k`, optionally
/// filtered by reducible count, basic-block height and catalog block.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub h: Option<usize>,
    pub block: Option<BasicBlockId>,
    /// Keep only maximal blocks (least and greatest element reducible).
    pub blocks_only: bool,
    /// Enumerate even above the size ceiling.
    pub force: bool,
}

impl EnumerationTask {
    pub fn new(n: usize, k: usize) -> Self {
        EnumerationTask { n, k, ..Default::default() }
    }

    pub fn reducibles(self, r: usize) -> Self {
        EnumerationTask { r: Some(r), ..self }
    }

    pub fn height(self, h: usize) -> Self {
        EnumerationTask { h: Some(h), ..self }
    }

    pub fn block(self, id: BasicBlockId) -> Self {
        EnumerationTask { block: Some(id), ..self }
    }

    pub fn blocks_only(self) -> Self {
        EnumerationTask { blocks_only: true, ..self }
    }

    pub fn forced(self) -> Self {
        EnumerationTask { force: true, ..self }
    }
}

/// One isomorphism class with its invariants.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedLattice {
    #[serde(skip)]
    pub lattice: Lattice,
    #[serde(skip)]
    pub key: CanonicalKey,
    pub r: usize,
    pub k: usize,
    /// Height of the associated basic block.
    pub h: usize,
    pub block_id: Option<BasicBlockId>,
    /// Least base-chain representation that builds this class.
    pub rep: AdjunctRep,
}

/// Grouping key of a census row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassKey {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub h: Option<usize>,
    pub block: Option<BasicBlockId>,
}

/// How a census groups enumerated classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grouping {
    /// By `(n, r, k)`.
    Reducibles,
    /// By `(n, r, k, h)`.
    Height,
    /// By `(n, r, k, h, block)`.
    Block,
}

#[derive(Clone, Debug)]
pub struct Oracle {
    pub ceiling: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { ceiling: DEFAULT_CEILING, jobs: None }
    }
}

#[derive(Clone, Debug)]
struct Shard {
    base: usize,
    first: Option<usize>,
}

struct Space<'t> {
    task: &'t EnumerationTask,
    base: usize,
    items: Vec<Attachment>,
    budget: usize,
}

impl Oracle {
    /// Default settings, with the ceiling taken from `CENSUS_CEILING` if set.
    pub fn from_env() -> Result<Self> {
        let mut oracle = Oracle::default();
        if let Ok(value) = std::env::var(CEILING_ENV) {
            oracle.ceiling = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{CEILING_ENV}={value} is not a size")))?;
        }
        Ok(oracle)
    }

    pub fn with_jobs(self, jobs: usize) -> Self {
        Oracle { jobs: Some(jobs.max(1)), ..self }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(f()),
            Some(jobs) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }

    /// All classes matching the task, ordered by canonical key.
    pub fn enumerate(&self, task: &EnumerationTask) -> Result<Vec<ClassifiedLattice>> {
        if task.n > self.ceiling && !task.force {
            return Err(Error::CeilingExceeded { n: task.n, ceiling: self.ceiling });
        }
        if task.n == 0 || (task.k >= 1 && task.n < task.k + 3) {
            return Ok(Vec::new());
        }
        self.run(|| {
            let shards = shards(task);
            let merged = shards
                .par_iter()
                .map(|shard| explore(task, shard))
                .reduce(BTreeMap::new, merge);
            let classified: Result<Vec<Option<ClassifiedLattice>>> = merged
                .into_par_iter()
                .map(|(key, rep)| classify_rep(task, key, rep))
                .collect();
            Ok(classified?.into_iter().flatten().collect())
        })?
    }

    /// Maximal blocks on `j` elements with `r` reducibles and nullity `k`.
    pub fn enumerate_blocks(&self, j: usize, r: usize, k: usize) -> Result<Vec<ClassifiedLattice>> {
        self.enumerate(&EnumerationTask::new(j, k).reducibles(r).blocks_only())
    }

    /// Number of classes per group, in key order.
    pub fn census(&self, task: &EnumerationTask, grouping: Grouping) -> Result<BTreeMap<ClassKey, u64>> {
        let mut rows = BTreeMap::new();
        for c in self.enumerate(task)? {
            let key = ClassKey {
                n: task.n,
                r: c.r,
                k: c.k,
                h: (grouping != Grouping::Reducibles).then_some(c.h),
                block: if grouping == Grouping::Block { c.block_id } else { None },
            };
            *rows.entry(key).or_insert(0) += 1;
        }
        Ok(rows)
    }

    pub fn count(&self, task: &EnumerationTask) -> Result<u64> {
        Ok(self.enumerate(task)?.len() as u64)
    }
}

fn shards(task: &EnumerationTask) -> Vec<Shard> {
    if task.k == 0 {
        return vec![Shard { base: task.n, first: None }];
    }
    let mut out = Vec::new();
    for base in 3..=task.n - task.k {
        let count = attachment_space(task, base).items.len();
        out.extend((0..count).map(|i| Shard { base, first: Some(i) }));
    }
    out
}

fn attachment_space(task: &EnumerationTask, base: usize) -> Space<'_> {
    let budget = task.n - base;
    let max_len = budget + 1 - task.k;
    let mut items = Vec::new();
    for a in 0..base {
        for b in a + 2..base {
            for len in 1..=max_len {
                items.push(Attachment { a, b, len });
            }
        }
    }
    Space { task, base, items, budget }
}

fn explore(task: &EnumerationTask, shard: &Shard) -> BTreeMap<CanonicalKey, AdjunctRep> {
    let mut found = BTreeMap::new();
    let Some(first) = shard.first else {
        let rep = AdjunctRep::chain(shard.base);
        if accepts_endpoints(task, shard.base, 0) {
            let l = rep.build().expect("chains build");
            found.insert(l.canonical_key(), rep);
        }
        return found;
    };
    let space = attachment_space(task, shard.base);
    let item = space.items[first];
    if task.blocks_only && item.a != 0 {
        // Attachments are sorted, so the least one must start at the bottom.
        return found;
    }
    let mut chosen = vec![item];
    space.extend(&mut chosen, first, item.len, endpoint_mask(&[item]), &mut found);
    found
}

fn endpoint_mask(items: &[Attachment]) -> u64 {
    items.iter().fold(0, |m, t| m | (1 << t.a) | (1 << t.b))
}

fn accepts_endpoints(task: &EnumerationTask, base: usize, mask: u64) -> bool {
    let r = mask.count_ones() as usize;
    task.r.is_none_or(|want| want == r)
        && (!task.blocks_only || (mask & 1 != 0 && mask & (1 << (base - 1)) != 0))
}

impl Space<'_> {
    fn extend(
        &self,
        chosen: &mut Vec<Attachment>,
        from: usize,
        used: usize,
        mask: u64,
        found: &mut BTreeMap<CanonicalKey, AdjunctRep>,
    ) {
        let remaining = self.task.k - chosen.len();
        if let Some(r) = self.task.r {
            let have = mask.count_ones() as usize;
            if have > r || have + 2 * remaining < r {
                return;
            }
        }
        if remaining == 0 {
            if used == self.budget && accepts_endpoints(self.task, self.base, mask) {
                let rep = AdjunctRep { base: self.base, attachments: chosen.clone() };
                let l = rep.build().expect("base-form reps with non-covering pairs build");
                match found.entry(l.canonical_key()) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(rep);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        if rep < *o.get() {
                            o.insert(rep);
                        }
                    }
                }
            }
            return;
        }
        for i in from..self.items.len() {
            let item = self.items[i];
            // Each later attachment needs at least one element.
            if used + item.len + (remaining - 1) > self.budget {
                continue;
            }
            chosen.push(item);
            self.extend(chosen, i, used + item.len, mask | (1 << item.a) | (1 << item.b), found);
            chosen.pop();
        }
    }
}

fn merge(
    mut a: BTreeMap<CanonicalKey, AdjunctRep>,
    b: BTreeMap<CanonicalKey, AdjunctRep>,
) -> BTreeMap<CanonicalKey, AdjunctRep> {
    for (key, rep) in b {
        match a.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(rep);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if rep < *o.get() {
                    o.insert(rep);
                }
            }
        }
    }
    a
}

fn classify_rep(task: &EnumerationTask, key: CanonicalKey, rep: AdjunctRep) -> Result<Option<ClassifiedLattice>> {
    let lattice = rep.build()?;
    let classified = classify(lattice, key, rep)?;
    if task.h.is_some_and(|h| h != classified.h) || task.block.is_some_and(|b| Some(b) != classified.block_id) {
        return Ok(None);
    }
    Ok(Some(classified))
}

/// Recomputes every invariant of an enumerated lattice.
pub fn classify(lattice: Lattice, key: CanonicalKey, rep: AdjunctRep) -> Result<ClassifiedLattice> {
    if !lattice.is_lattice() || !lattice.is_rc()? {
        return Err(Error::Invariant(format!("enumerated a non-RC lattice from {}", rep.to_json())));
    }
    let r = lattice.reducible_elements()?.len();
    let k = lattice.nullity()?;
    let block = basic_block_of(&lattice)?.block;
    let block_id = if (r, k) == (5, 3) {
        let id = identify_block(&block);
        if id.is_none() {
            return Err(Error::Invariant(format!("no catalog block for {}", rep.to_json())));
        }
        id
    } else {
        None
    };
    Ok(ClassifiedLattice { h: block.height(), lattice, key, r, k, block_id, rep })
}
