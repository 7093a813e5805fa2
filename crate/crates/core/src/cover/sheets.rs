use serde::Serialize;

use super::CoverError;
use crate::C64;

/// Greedy ties closer than this (relative) trigger the exhaustive search.
pub const AMBIGUITY_TOL: f64 = 1e-9;
/// Largest sheet count for which the exhaustive search runs.
pub const EXHAUSTIVE_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SheetMatching {
    /// `perm[i]` is the index in the second set matched to sheet `i` of the first.
    pub perm: Vec<usize>,
    pub max_distance: f64,
    pub exhaustive: bool,
}

fn dist(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Pairs the sheets of two fibers by greedy minimal distance, falling back
/// to an exhaustive bottleneck-optimal search when greedy meets a near tie
/// and the sheet count is at most [`EXHAUSTIVE_MAX`].
pub fn match_sheets(a: &[Vec<C64>], b: &[Vec<C64>]) -> Result<SheetMatching, CoverError> {
    let n = a.len();
    if b.len() != n {
        return Err(CoverError::SheetCount {
            left: n,
            right: b.len(),
        });
    }
    let d: Vec<Vec<f64>> = a.iter().map(|x| b.iter().map(|y| dist(x, y)).collect()).collect();

    let mut pairs: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (d[i][j], i, j))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0).then((p.1, p.2).cmp(&(q.1, q.2))));
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut ambiguous = false;
    for (k, &(dk, i, j)) in pairs.iter().enumerate() {
        if perm[i] != usize::MAX || used[j] {
            continue;
        }
        let tie = pairs[k + 1..]
            .iter()
            .take_while(|p| p.0 - dk <= AMBIGUITY_TOL * (1.0 + dk))
            .any(|&(_, i2, j2)| perm[i2] == usize::MAX && !used[j2] && (i2 == i) != (j2 == j));
        ambiguous |= tie;
        perm[i] = j;
        used[j] = true;
    }
    let greedy_max = (0..n).map(|i| d[i][perm[i]]).fold(0.0, f64::max);

    if ambiguous && n <= EXHAUSTIVE_MAX {
        let mut best = (greedy_max, (0..n).map(|i| d[i][perm[i]]).sum::<f64>(), perm.clone());
        let mut cur = Vec::with_capacity(n);
        let mut taken = vec![false; n];
        search(&d, &mut cur, &mut taken, 0.0, 0.0, &mut best);
        return Ok(SheetMatching {
            perm: best.2,
            max_distance: best.0,
            exhaustive: true,
        });
    }
    Ok(SheetMatching {
        perm,
        max_distance: greedy_max,
        exhaustive: false,
    })
}

fn search(
    d: &[Vec<f64>],
    cur: &mut Vec<usize>,
    taken: &mut [bool],
    max: f64,
    sum: f64,
    best: &mut (f64, f64, Vec<usize>),
) {
    let i = cur.len();
    if i == d.len() {
        if (max, sum) < (best.0, best.1) {
            *best = (max, sum, cur.clone());
        }
        return;
    }
    for j in 0..d.len() {
        if taken[j] {
            continue;
        }
        let m = max.max(d[i][j]);
        if m > best.0 {
            continue;
        }
        taken[j] = true;
        cur.push(j);
        search(d, cur, taken, m, sum + d[i][j], best);
        cur.pop();
        taken[j] = false;
    }
}
