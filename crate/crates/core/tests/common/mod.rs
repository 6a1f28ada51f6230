//! Brute-force references that share no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use symchar::{Cell, Partition};

pub fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

pub fn cell_set(lam: &Partition) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for (i, &len) in lam.parts().iter().enumerate() {
        for j in 1..=len {
            out.insert(Cell::new(i + 1, j));
        }
    }
    out
}

/// Reads a cell set back as row lengths if it is a Young diagram.
pub fn as_young(cells: &BTreeSet<Cell>) -> Option<Partition> {
    let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut parts = Vec::new();
    for i in 1..=rows {
        let len = cells.iter().filter(|c| c.row == i).count();
        if (1..=len).any(|j| !cells.contains(&Cell::new(i, j))) {
            return None;
        }
        parts.push(len);
    }
    Partition::new(parts).ok().filter(|q| cell_set(q) == *cells)
}

/// Rim cells by definition, sorted by content.
pub fn rim_cells(lam: &Partition) -> Vec<Cell> {
    let cells = cell_set(lam);
    let mut rim: Vec<Cell> = cells
        .iter()
        .copied()
        .filter(|c| !cells.contains(&Cell::new(c.row + 1, c.col + 1)))
        .collect();
    rim.sort_by_key(|c| c.row as isize - c.col as isize);
    rim
}

fn connected(set: &BTreeSet<Cell>) -> bool {
    let Some(&start) = set.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        for d in set {
            let dist = c.row.abs_diff(d.row) + c.col.abs_diff(d.col);
            if dist == 1 && seen.insert(*d) {
                stack.push(*d);
            }
        }
    }
    seen.len() == set.len()
}

/// Every connected subset of the rim whose complement is a Young diagram.
pub fn brute_rim_hooks(lam: &Partition) -> Vec<(BTreeSet<Cell>, Partition)> {
    let rim = rim_cells(lam);
    let all = cell_set(lam);
    let mut out = Vec::new();
    for mask in 1u64..(1 << rim.len()) {
        let h: BTreeSet<Cell> = (0..rim.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| rim[b])
            .collect();
        if !connected(&h) {
            continue;
        }
        let rest: BTreeSet<Cell> = all.difference(&h).copied().collect();
        if let Some(mu) = as_young(&rest) {
            out.push((h, mu));
        }
    }
    out
}

/// Number of cells with hook length exactly `r`.
pub fn cells_with_hook_length(lam: &Partition, r: usize) -> usize {
    let cells = cell_set(lam);
    cells
        .iter()
        .filter(|c| {
            let arm = cells.iter().filter(|d| d.row == c.row && d.col > c.col).count();
            let leg = cells.iter().filter(|d| d.col == c.col && d.row > c.row).count();
            arm + leg + 1 == r
        })
        .count()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ways to drop each cycle into one of the bins so bin sums equal `target`.
fn assignments(cycles: &[usize], target: &mut [i64]) -> i64 {
    let Some((&c, rest)) = cycles.split_first() else {
        return i64::from(target.iter().all(|&t| t == 0));
    };
    let mut total = 0;
    for b in 0..target.len() {
        if target[b] >= c as i64 {
            target[b] -= c as i64;
            total += assignments(rest, target);
            target[b] += c as i64;
        }
    }
    total
}

/// Frobenius' formula: `χ_λ(μ)` is the coefficient of `x^{λ+δ}` in
/// `a_δ · p_μ`, with `ℓ = len(λ)` variables.
pub fn frobenius_character(lam: &Partition, cycles: &[usize]) -> i64 {
    let l = lam.len();
    let shifted: Vec<i64> = (0..l).map(|i| (lam.parts()[i] + l - 1 - i) as i64).collect();
    let mut total = 0;
    for perm in permutations(l) {
        // a_δ contributes sgn(σ) x_i^{ℓ-1-σ(i)}
        let mut target: Vec<i64> = (0..l).map(|i| shifted[i] - (l - 1 - perm[i]) as i64).collect();
        if target.iter().any(|&t| t < 0) {
            continue;
        }
        total += perm_sign(&perm) * assignments(cycles, &mut target);
    }
    total
}
