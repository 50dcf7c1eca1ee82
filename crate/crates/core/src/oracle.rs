//! Brute-force cross-checks that share no code path with the Smith normal
//! form or the F₂ solver: modular Gaussian elimination on machine words and
//! exhaustive enumeration of cochains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::matrix::IntMatrix;
use crate::nerve::SimplicialComplex;
use crate::twist::Cocycle2;

/// Largest number of 1-cochains [`is_coboundary_exhaustive`] will enumerate.
pub const EXHAUSTIVE_LIMIT_BITS: usize = 16;

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p−2) mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank of `m` over F_p, `p` a prime below 2³².
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let modulus = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.mod_floor(&modulus).to_u64().expect("reduced"))
                .collect()
        })
        .collect();
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim H_k(nerve; F_p) = n_k − rank ∂_k − rank ∂_{k+1}`.
pub fn betti_mod_p(nerve: &SimplicialComplex, k: usize, p: u64) -> usize {
    let top = nerve.dimension().unwrap_or(0);
    let rank_of = |d: usize| {
        if d == 0 || d > top {
            0
        } else {
            rank_mod_p(&nerve.boundary_matrix(d).expect("in range"), p)
        }
    };
    nerve.count(k) - rank_of(k) - rank_of(k + 1)
}

/// Whether `c` is the coboundary of some 1-cochain, by trying all of them.
/// `None` when the nerve has more than [`EXHAUSTIVE_LIMIT_BITS`] edges.
pub fn is_coboundary_exhaustive(nerve: &SimplicialComplex, c: &Cocycle2) -> Option<bool> {
    let edges = nerve.simplices(1);
    if edges.len() > EXHAUSTIVE_LIMIT_BITS {
        return None;
    }
    let triangles = nerve.simplices(2);
    let words = triangles.len().div_ceil(64).max(1);
    let pack = |bits: &mut dyn Iterator<Item = bool>| {
        let mut v = vec![0u64; words];
        for (i, b) in bits.enumerate() {
            if b {
                v[i / 64] |= 1 << (i % 64);
            }
        }
        v
    };
    // Coboundary of each elementary 1-cochain: the triangles containing the edge.
    let edge_images: Vec<Vec<u64>> = edges
        .iter()
        .map(|e| pack(&mut triangles.iter().map(|t| t.contains(&e[0]) && t.contains(&e[1]))))
        .collect();
    let goal = pack(&mut c.values().iter().copied());
    // Gray-code walk: consecutive cochains differ in one edge.
    let mut current = vec![0u64; words];
    if current == goal {
        return Some(true);
    }
    for step in 1u64..(1u64 << edges.len()) {
        let flip = step.trailing_zeros() as usize;
        for (w, x) in current.iter_mut().zip(&edge_images[flip]) {
            *w ^= x;
        }
        if current == goal {
            return Some(true);
        }
    }
    Some(false)
}
