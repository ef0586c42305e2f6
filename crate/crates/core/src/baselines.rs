//! Classic string similarity measures, kept for comparison.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcs {
    pub length: usize,
    /// One longest common subsequence.
    pub witness: String,
}

/// Longest common subsequence by dynamic programming.
pub fn lcs(a: &str, b: &str) -> Lcs {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (m, n) = (a.len(), b.len());
    // table[i][j] = LCS length of a[i..] and b[j..]
    let mut table = vec![vec![0usize; n + 1]; m + 1];
    for i in (0..m).rev() {
        for j in (0..n).rev() {
            table[i][j] = if a[i] == b[j] {
                table[i + 1][j + 1] + 1
            } else {
                table[i + 1][j].max(table[i][j + 1])
            };
        }
    }
    let mut witness = String::new();
    let (mut i, mut j) = (0, 0);
    while i < m && j < n {
        if a[i] == b[j] {
            witness.push(a[i]);
            i += 1;
            j += 1;
        } else if table[i + 1][j] >= table[i][j + 1] {
            i += 1;
        } else {
            j += 1;
        }
    }
    Lcs {
        length: table[0][0],
        witness,
    }
}

/// LCS length relative to the shorter and to the longer input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcsSimilarity {
    pub by_shorter: f64,
    pub by_longer: f64,
}

pub fn lcs_similarity(a: &str, b: &str) -> Result<LcsSimilarity> {
    let (la, lb) = (a.chars().count(), b.chars().count());
    if la == 0 || lb == 0 {
        return Err(Error::invalid("LCS similarity needs two non-empty strings"));
    }
    let len = lcs(a, b).length as f64;
    Ok(LcsSimilarity {
        by_shorter: len / la.min(lb) as f64,
        by_longer: len / la.max(lb) as f64,
    })
}

/// Minimum number of single-character insertions, deletions and
/// substitutions, plus adjacent transpositions when enabled (unrestricted
/// Damerau-Levenshtein).
pub fn edit_distance(a: &str, b: &str, enable_transposition: bool) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if enable_transposition {
        damerau(&a, &b)
    } else {
        levenshtein(&a, &b)
    }
}

fn levenshtein(a: &[char], b: &[char]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

// Lowrance-Wagner
fn damerau(a: &[char], b: &[char]) -> usize {
    let (m, n) = (a.len(), b.len());
    let inf = m + n;
    let mut d = vec![vec![0usize; n + 2]; m + 2];
    d[0][0] = inf;
    for i in 0..=m {
        d[i + 1][0] = inf;
        d[i + 1][1] = i;
    }
    for j in 0..=n {
        d[0][j + 1] = inf;
        d[1][j + 1] = j;
    }
    let mut last_row: HashMap<char, usize> = HashMap::new();
    for i in 1..=m {
        let mut last_match_col = 0;
        for j in 1..=n {
            let i1 = last_row.get(&b[j - 1]).copied().unwrap_or(0);
            let j1 = last_match_col;
            let cost = if a[i - 1] == b[j - 1] {
                last_match_col = j;
                0
            } else {
                1
            };
            d[i + 1][j + 1] = (d[i][j] + cost)
                .min(d[i + 1][j] + 1)
                .min(d[i][j + 1] + 1)
                .min(d[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1));
        }
        last_row.insert(a[i - 1], i);
    }
    d[m + 1][n + 1]
}

/// Edit distance divided by the length of the longer input.
pub fn normalized_edit_distance(a: &str, b: &str, enable_transposition: bool) -> Result<f64> {
    let longer = a.chars().count().max(b.chars().count());
    if longer == 0 {
        return Err(Error::invalid(
            "normalized edit distance of two empty strings",
        ));
    }
    Ok(edit_distance(a, b, enable_transposition) as f64 / longer as f64)
}

/// Matching blocks `(i, j, len)` of the classic gestalt (Ratcliff-Obershelp)
/// algorithm: take the longest common substring, earliest in `a` and then
/// earliest in `b`, and recurse on both sides. The first-found rule makes the
/// result depend on argument order.
pub fn gestalt_blocks(a: &str, b: &str) -> Vec<(usize, usize, usize)> {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut blocks = Vec::new();
    let mut stack = vec![(0, a.len(), 0, b.len())];
    while let Some((alo, ahi, blo, bhi)) = stack.pop() {
        let (i, j, k) = longest_match(&a, &b, alo, ahi, blo, bhi);
        if k == 0 {
            continue;
        }
        blocks.push((i, j, k));
        stack.push((alo, i, blo, j));
        stack.push((i + k, ahi, j + k, bhi));
    }
    blocks.sort_unstable();
    blocks
}

fn longest_match(
    a: &[char],
    b: &[char],
    alo: usize,
    ahi: usize,
    blo: usize,
    bhi: usize,
) -> (usize, usize, usize) {
    let (mut best_i, mut best_j, mut best_k) = (alo, blo, 0);
    // run[j] = length of the common suffix ending at a[i-1], b[j-1]
    let mut prev = vec![0usize; bhi - blo + 1];
    for (i, ca) in a.iter().enumerate().take(ahi).skip(alo) {
        let mut cur = vec![0usize; bhi - blo + 1];
        for j in blo..bhi {
            if *ca == b[j] {
                let k = prev[j - blo] + 1;
                cur[j - blo + 1] = k;
                let (si, sj) = (i + 1 - k, j + 1 - k);
                if k > best_k || (k == best_k && (si, sj) < (best_i, best_j)) {
                    (best_i, best_j, best_k) = (si, sj, k);
                }
            }
        }
        prev = cur;
    }
    (best_i, best_j, best_k)
}

/// `2 * matched / (|a| + |b|)` over the gestalt matching blocks.
pub fn gestalt_ratio(a: &str, b: &str) -> f64 {
    let total = a.chars().count() + b.chars().count();
    if total == 0 {
        return 1.0;
    }
    let matched: usize = gestalt_blocks(a, b).iter().map(|&(_, _, k)| k).sum();
    2.0 * matched as f64 / total as f64
}
