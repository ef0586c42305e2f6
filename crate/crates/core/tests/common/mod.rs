#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_string(
    rng: &mut StdRng,
    alphabet: &[char],
    min_len: usize,
    max_len: usize,
) -> String {
    let len = rng.random_range(min_len..=max_len);
    (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect()
}

/// Every string over `alphabet` of length at most `max_len`.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s| alphabet.iter().map(move |c| format!("{s}{c}")))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn neighbours(s: &[char], alphabet: &[char], max_len: usize, transpose: bool) -> Vec<Vec<char>> {
    let mut out = Vec::new();
    for i in 0..s.len() {
        let mut d = s.to_vec();
        d.remove(i);
        out.push(d);
        for &c in alphabet {
            if c != s[i] {
                let mut t = s.to_vec();
                t[i] = c;
                out.push(t);
            }
        }
    }
    if s.len() < max_len {
        for i in 0..=s.len() {
            for &c in alphabet {
                let mut t = s.to_vec();
                t.insert(i, c);
                out.push(t);
            }
        }
    }
    if transpose {
        for i in 0..s.len().saturating_sub(1) {
            let mut t = s.to_vec();
            t.swap(i, i + 1);
            out.push(t);
        }
    }
    out
}

/// Distances from `source` to every string reachable through single edits,
/// by breadth-first search over strings no longer than `max_len`.
pub fn bfs_distances(
    source: &str,
    alphabet: &[char],
    max_len: usize,
    transpose: bool,
) -> HashMap<Vec<char>, usize> {
    let start: Vec<char> = source.chars().collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for n in neighbours(&s, alphabet, max_len, transpose) {
            if !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}

pub fn bfs_edit_distance(a: &str, b: &str, transpose: bool) -> usize {
    let mut alphabet: Vec<char> = a.chars().chain(b.chars()).collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    let max_len = a.chars().count().max(b.chars().count()) + 1;
    let start: Vec<char> = a.chars().collect();
    let target: Vec<char> = b.chars().collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        if s == target {
            return d;
        }
        for n in neighbours(&s, &alphabet, max_len, transpose) {
            if !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                queue.push_back(n);
            }
        }
    }
    unreachable!("every string is reachable by edits")
}

fn is_subsequence(needle: &[char], hay: &[char]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|c| it.any(|h| h == c))
}

/// Longest common subsequence length by enumerating every subsequence of `a`.
pub fn brute_lcs(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut best = 0;
    for mask in 0u32..(1 << a.len()) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let sub: Vec<char> = (0..a.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| a[i])
            .collect();
        if is_subsequence(&sub, &b) {
            best = k;
        }
    }
    best
}

pub fn is_subsequence_str(needle: &str, hay: &str) -> bool {
    let n: Vec<char> = needle.chars().collect();
    let h: Vec<char> = hay.chars().collect();
    is_subsequence(&n, &h)
}
