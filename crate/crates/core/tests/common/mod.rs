#![allow(dead_code)]

use mvkt_core::SimplicialComplex;
use proptest::prelude::*;

/// Determinant by cofactor expansion in i128; independent of the crate's
/// Bareiss routine and of any Smith reduction.
pub fn det_laplace(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_laplace(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors (the k-th determinantal divisor), by enumeration.
pub fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0i128;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let minor: Vec<Vec<i128>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect())
                .collect();
            g = gcd(g, det_laplace(&minor));
        }
    }
    g
}

pub fn octahedron() -> SimplicialComplex {
    SimplicialComplex::from_maximal_simplices(
        6,
        [
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [0, 3, 5],
            [1, 2, 4],
            [1, 2, 5],
            [1, 3, 4],
            [1, 3, 5],
        ],
    )
    .unwrap()
}

pub fn tetrahedron_boundary() -> SimplicialComplex {
    SimplicialComplex::from_maximal_simplices(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
}

pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::from_maximal_simplices(3, [[0, 1], [0, 2], [1, 2]]).unwrap()
}

pub fn total_simplices(c: &SimplicialComplex) -> usize {
    c.f_vector().iter().sum()
}

/// Random complexes with at most `max_simplices` simplices and dimension ≤ 2.
pub fn small_complex(max_simplices: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 0..5),
            )
        })
        .prop_map(|(n, maxima)| {
            let maxima: Vec<Vec<usize>> = maxima.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_maximal_simplices(n, maxima).unwrap()
        })
        .prop_filter("too many simplices", move |c| total_simplices(c) <= max_simplices)
}
