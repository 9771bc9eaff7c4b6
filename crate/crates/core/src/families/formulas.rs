//! Closed forms and explicit optimal sequences for graph paths and tight
//! 3-uniform paths. All roots use exact integer arithmetic.

use crate::error::{Error, Result};

fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Burning number of the tight 3-uniform path of order `n`: `⌈√(2n − 1)⌉`.
pub fn tight3_burning_number(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("tight 3-path needs n >= 3 (n = {n})")));
    }
    Ok(ceil_sqrt(2 * n as u64 - 1) as usize)
}

/// Most vertices of a long tight 3-uniform path burnable by the end of
/// round `r`: `⌊(r² + 1) / 2⌋`.
pub fn tight3_max_spread(r: usize) -> Result<usize> {
    if r < 1 {
        return Err(Error::InvalidParameter("round count must be at least 1".into()));
    }
    Ok((r * r).div_ceil(2))
}

/// Burning number of the graph path on `n` vertices: `⌈√n⌉`.
pub fn path_burning_number(n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Ok(ceil_sqrt(n as u64) as usize)
}

/// An optimal burning sequence for the tight 3-uniform path on vertices
/// `0..n`.
///
/// With `k = ⌈√(2n − 1)⌉` the sequence is first built on `N = ⌊(k² + 1)/2⌋`
/// vertices: sources come in pairs forming seeds, the pair for `s` sitting
/// at 1-based positions `a` and `a − 1` with
/// `a = k − 2s + 2 + 2·Σ_{i<s}(k − 2i + 1)`. Each seed burns outwards, and
/// seed `s` has room for `k − 2s + 1` vertices on each side. When `n < N`
/// the lowest `N − n` vertices are dropped; if that swallows the second
/// source, the first seed moves to the two lowest surviving vertices.
pub fn tight3_optimal_sequence(n: usize) -> Result<Vec<usize>> {
    let k = tight3_burning_number(n)?;
    let big_n = (k * k).div_ceil(2);
    let drop = big_n - n;

    let mut one_based = Vec::with_capacity(k);
    let mut offset = 0;
    for s in 1..=k.div_ceil(2) {
        let a = k + 2 - 2 * s + offset;
        one_based.push(a);
        if one_based.len() < k {
            one_based.push(a - 1);
        }
        offset += 2 * (k + 1 - 2 * s);
    }

    let mut seq: Vec<usize> = one_based
        .iter()
        .map(|&p| p.saturating_sub(drop + 1))
        .collect();
    if one_based.len() >= 2 && one_based[1] <= drop {
        seq[0] = 0;
        seq[1] = 1;
    }
    Ok(seq)
}

/// An optimal burning sequence for the graph path on vertices `0..n`.
///
/// With `k = ⌈√n⌉` it is built on `k²` vertices, the `(k − i)`-th source at
/// 1-based position `k² − i² − i`; for `n < k²` the lowest `k² − n` vertices
/// are dropped and a swallowed first source moves to the lowest survivor.
pub fn path_optimal_sequence(n: usize) -> Result<Vec<usize>> {
    let k = path_burning_number(n)?;
    let drop = k * k - n;
    Ok((0..k)
        .rev()
        .map(|i| {
            let p = k * k - i * i - i;
            p.saturating_sub(drop + 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(tight3_burning_number(13).unwrap(), 5);
        assert_eq!(tight3_burning_number(3).unwrap(), 3);
        assert_eq!(tight3_burning_number(5).unwrap(), 3);
        assert!(tight3_burning_number(2).is_err());
        let spread: Vec<usize> = (1..=10).map(|r| tight3_max_spread(r).unwrap()).collect();
        assert_eq!(spread, vec![1, 2, 5, 8, 13, 18, 25, 32, 41, 50]);
        assert_eq!(path_burning_number(10).unwrap(), 4);
        assert_eq!(path_burning_number(1).unwrap(), 1);
    }

    #[test]
    fn word_scale_roots_are_exact() {
        let n = 1usize << 40;
        let k = tight3_burning_number(n).unwrap() as u64;
        let m = 2 * n as u64 - 1;
        assert!(k * k >= m && (k - 1) * (k - 1) < m);
    }

    #[test]
    fn listed_sequences() {
        assert_eq!(tight3_optimal_sequence(5).unwrap(), vec![2, 1, 4]);
        assert_eq!(tight3_optimal_sequence(8).unwrap(), vec![3, 2, 7, 6]);
        assert_eq!(tight3_optimal_sequence(3).unwrap().len(), 3);
        assert_eq!(path_optimal_sequence(9).unwrap(), vec![2, 6, 8]);
        assert_eq!(path_optimal_sequence(1).unwrap(), vec![0]);
        assert_eq!(path_optimal_sequence(10).unwrap().len(), 4);
    }
}
