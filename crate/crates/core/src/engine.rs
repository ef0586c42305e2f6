//! Anchor-based alignment over a pairwise element score grid.
//!
//! Every matcher in the crate works the same way: find the aligned run of
//! matching elements with the highest total score (for letters, the longest
//! common substring), record it, and continue on what is left. The three
//! modes differ only in what "what is left" means:
//!
//! * ordered: recurse on the two sides of the anchor, keeping order;
//! * block-out: mark matched elements as used, keep original adjacency;
//! * erase: delete matched elements so their neighbours become adjacent.
//!
//! When several anchors tie on total score, each is followed to the end and
//! the one leading to the best final score wins; remaining ties go to the
//! preferred size metric and then to the smallest `(pos1, pos2)`.

use std::collections::HashMap;
use std::rc::Rc;

use crate::scoring::Weights;

const TIE_EPS: f64 = 1e-9;

/// Pairwise element scores; `0.0` means "no match".
pub(crate) struct Grid {
    len1: usize,
    len2: usize,
    cells: Vec<f64>,
    /// Letter count of every element, for the letters tie-break.
    size1: Vec<usize>,
    size2: Vec<usize>,
    /// Scores are all 0 or 1 and "match" is an equivalence (letters).
    binary: bool,
}

impl Grid {
    pub fn letters<T: PartialEq>(a: &[T], b: &[T]) -> Self {
        let cells = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| if x == y { 1.0 } else { 0.0 }))
            .collect();
        Self {
            len1: a.len(),
            len2: b.len(),
            cells,
            size1: vec![1; a.len()],
            size2: vec![1; b.len()],
            binary: true,
        }
    }

    pub fn scored(
        len1: usize,
        len2: usize,
        cells: Vec<f64>,
        size1: Vec<usize>,
        size2: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(cells.len(), len1 * len2);
        Self {
            len1,
            len2,
            cells,
            size1,
            size2,
            binary: false,
        }
    }

    #[inline]
    fn score(&self, i: usize, j: usize) -> f64 {
        self.cells[i * self.len2 + j]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Block {
    pub idx1: Vec<usize>,
    pub idx2: Vec<usize>,
    pub scores: Vec<f64>,
}

impl Block {
    fn len(&self) -> usize {
        self.idx1.len()
    }
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Plan {
    pub blocks: Vec<Block>,
    value: f64,
    elements: usize,
    letters: usize,
}

impl Plan {
    fn single(block: Block, grid: &Grid, w: Weights) -> Self {
        let total: f64 = block.scores.iter().sum();
        let value = total * w.element + (block.len() - 1) as f64 * w.glue;
        let letters = block.idx1.iter().map(|&i| grid.size1[i]).sum::<usize>()
            + block.idx2.iter().map(|&j| grid.size2[j]).sum::<usize>();
        Self {
            elements: block.len(),
            letters,
            value,
            blocks: vec![block],
        }
    }

    fn join(parts: &[&Plan]) -> Self {
        let mut out = Plan::default();
        for p in parts {
            out.blocks.extend(p.blocks.iter().cloned());
            out.value += p.value;
            out.elements += p.elements;
            out.letters += p.letters;
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchParams {
    pub min_len: usize,
    pub weights: Weights,
    /// Break score ties by matched letters before matched elements.
    pub prefer_letters: bool,
}

impl SearchParams {
    fn better(&self, a: &Plan, b: &Plan) -> bool {
        if a.value > b.value + TIE_EPS {
            return true;
        }
        if a.value < b.value - TIE_EPS {
            return false;
        }
        let key = |p: &Plan| {
            if self.prefer_letters {
                (p.letters, p.elements)
            } else {
                (p.elements, 0)
            }
        };
        key(a) > key(b)
    }
}

/// A maximal aligned run, positions given in the searched sequences.
#[derive(Debug, Clone, Copy)]
struct Run {
    a: usize,
    b: usize,
    len: usize,
    total: f64,
}

/// Maximal runs of positive cells along each diagonal, restricted to runs of
/// at least `min_len` elements, keeping only those with the best total.
fn best_runs(
    seq1: &[Option<usize>],
    seq2: &[Option<usize>],
    grid: &Grid,
    min_len: usize,
) -> Vec<Run> {
    let cell = |a: usize, b: usize| match (seq1[a], seq2[b]) {
        (Some(i), Some(j)) => grid.score(i, j),
        _ => 0.0,
    };
    let mut best: Vec<Run> = Vec::new();
    let mut best_total = 0.0;
    for a in 0..seq1.len() {
        for b in 0..seq2.len() {
            if cell(a, b) <= 0.0 || (a > 0 && b > 0 && cell(a - 1, b - 1) > 0.0) {
                continue;
            }
            let mut len = 0;
            let mut total = 0.0;
            while a + len < seq1.len() && b + len < seq2.len() {
                let s = cell(a + len, b + len);
                if s <= 0.0 {
                    break;
                }
                total += s;
                len += 1;
            }
            if len < min_len {
                continue;
            }
            if total > best_total + TIE_EPS {
                best.clear();
                best_total = total;
            }
            if total >= best_total - TIE_EPS {
                best.push(Run { a, b, len, total });
            }
        }
    }
    best.sort_by_key(|r| (seq1[r.a], seq2[r.b]));
    best
}

fn block_from(run: Run, seq1: &[Option<usize>], seq2: &[Option<usize>], grid: &Grid) -> Block {
    let idx1: Vec<usize> = (0..run.len).map(|k| seq1[run.a + k].unwrap()).collect();
    let idx2: Vec<usize> = (0..run.len).map(|k| seq2[run.b + k].unwrap()).collect();
    let scores = idx1
        .iter()
        .zip(&idx2)
        .map(|(&i, &j)| grid.score(i, j))
        .collect();
    debug_assert!(run.total > 0.0);
    Block { idx1, idx2, scores }
}

/// Order-preserving matching: anchor, then recurse left and right.
pub(crate) fn ordered(grid: &Grid, params: SearchParams) -> Plan {
    let mut search = Ordered {
        grid,
        params,
        memo: HashMap::new(),
    };
    let plan = search.solve(0, grid.len1, 0, grid.len2);
    Plan::clone(&plan)
}

struct Ordered<'g> {
    grid: &'g Grid,
    params: SearchParams,
    memo: HashMap<(usize, usize, usize, usize), Rc<Plan>>,
}

impl Ordered<'_> {
    fn solve(&mut self, lo1: usize, hi1: usize, lo2: usize, hi2: usize) -> Rc<Plan> {
        if lo1 >= hi1 || lo2 >= hi2 {
            return Rc::new(Plan::default());
        }
        let key = (lo1, hi1, lo2, hi2);
        if let Some(p) = self.memo.get(&key) {
            return Rc::clone(p);
        }
        let seq1: Vec<Option<usize>> = (lo1..hi1).map(Some).collect();
        let seq2: Vec<Option<usize>> = (lo2..hi2).map(Some).collect();
        let mut best: Option<Plan> = None;
        for run in best_runs(&seq1, &seq2, self.grid, self.params.min_len) {
            let (i, j) = (lo1 + run.a, lo2 + run.b);
            let left = self.solve(lo1, i, lo2, j);
            let right = self.solve(i + run.len, hi1, j + run.len, hi2);
            let anchor = Plan::single(
                block_from(run, &seq1, &seq2, self.grid),
                self.grid,
                self.params.weights,
            );
            let plan = Plan::join(&[&left, &anchor, &right]);
            if best.as_ref().is_none_or(|b| self.params.better(&plan, b)) {
                best = Some(plan);
            }
        }
        let plan = Rc::new(best.unwrap_or_default());
        self.memo.insert(key, Rc::clone(&plan));
        plan
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Leftovers {
    /// Matched elements are blocked out; original adjacency is kept.
    BlockOut,
    /// Matched elements are deleted; their neighbours become adjacent.
    Erase,
}

/// Cross-matching: repeatedly take the best run anywhere in what is left.
pub(crate) fn unordered(grid: &Grid, params: SearchParams, mode: Leftovers) -> Plan {
    let mut search = Unordered {
        grid,
        params,
        mode,
        memo: HashMap::new(),
    };
    let used1 = vec![false; grid.len1];
    let used2 = vec![false; grid.len2];
    let plan = search.solve(&used1, &used2);
    Plan::clone(&plan)
}

struct Unordered<'g> {
    grid: &'g Grid,
    params: SearchParams,
    mode: Leftovers,
    memo: HashMap<Vec<u64>, Rc<Plan>>,
}

fn pack(used1: &[bool], used2: &[bool]) -> Vec<u64> {
    let mut key = vec![0u64; (used1.len() + used2.len()).div_ceil(64)];
    for (k, &u) in used1.iter().chain(used2).enumerate() {
        if u {
            key[k / 64] |= 1 << (k % 64);
        }
    }
    key
}

impl Unordered<'_> {
    fn sequence(&self, used: &[bool]) -> Vec<Option<usize>> {
        match self.mode {
            Leftovers::BlockOut => used
                .iter()
                .enumerate()
                .map(|(i, &u)| (!u).then_some(i))
                .collect(),
            Leftovers::Erase => used
                .iter()
                .enumerate()
                .filter(|(_, &u)| !u)
                .map(|(i, _)| Some(i))
                .collect(),
        }
    }

    fn solve(&mut self, used1: &[bool], used2: &[bool]) -> Rc<Plan> {
        let key = pack(used1, used2);
        if let Some(p) = self.memo.get(&key) {
            return Rc::clone(p);
        }
        let seq1 = self.sequence(used1);
        let seq2 = self.sequence(used2);
        let runs = best_runs(&seq1, &seq2, self.grid, self.params.min_len);
        let plan = if runs.is_empty() {
            Plan::default()
        } else if self.grid.binary && self.mode == Leftovers::BlockOut && runs[0].len == 1 {
            // only single letters are left: any greedy pairing reaches the
            // same number of matches, and blocking out cannot create new runs
            self.singles(used1, used2)
        } else {
            let mut best: Option<Plan> = None;
            for run in runs {
                let block = block_from(run, &seq1, &seq2, self.grid);
                let (mut next1, mut next2) = (used1.to_vec(), used2.to_vec());
                block.idx1.iter().for_each(|&i| next1[i] = true);
                block.idx2.iter().for_each(|&j| next2[j] = true);
                let rest = self.solve(&next1, &next2);
                let plan =
                    Plan::join(&[&Plan::single(block, self.grid, self.params.weights), &rest]);
                if best.as_ref().is_none_or(|b| self.params.better(&plan, b)) {
                    best = Some(plan);
                }
            }
            best.unwrap_or_default()
        };
        let plan = Rc::new(plan);
        self.memo.insert(key, Rc::clone(&plan));
        plan
    }

    fn singles(&self, used1: &[bool], used2: &[bool]) -> Plan {
        let mut taken2 = used2.to_vec();
        let mut parts = Vec::new();
        for i in (0..self.grid.len1).filter(|&i| !used1[i]) {
            if let Some(j) =
                (0..self.grid.len2).find(|&j| !taken2[j] && self.grid.score(i, j) > 0.0)
            {
                taken2[j] = true;
                let block = Block {
                    idx1: vec![i],
                    idx2: vec![j],
                    scores: vec![self.grid.score(i, j)],
                };
                parts.push(Plan::single(block, self.grid, self.params.weights));
            }
        }
        Plan::join(&parts.iter().collect::<Vec<_>>())
    }
}
