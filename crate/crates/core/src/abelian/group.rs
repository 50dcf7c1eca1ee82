use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::snf::smith_normal_form;
use super::AbelianError;
use crate::matrix::IntMatrix;

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` in invariant
/// factor form: every `dᵢ ≥ 2` and `d₁ | d₂ | … | d_k`.
///
/// Canonical generators are ordered free first, then torsion in
/// invariant-factor order. Two values are isomorphic iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Validates an already-canonical pair.
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self, AbelianError> {
        for (i, d) in invariant_factors.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(AbelianError::NotCanonical(format!(
                    "invariant factor {d} at position {i} is below 2"
                )));
            }
            if i > 0 && !d.is_multiple_of(&invariant_factors[i - 1]) {
                return Err(AbelianError::NotCanonical(format!(
                    "invariant factor {} does not divide {d}",
                    invariant_factors[i - 1]
                )));
            }
        }
        Ok(FgAbelianGroup {
            free_rank,
            invariant_factors,
        })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `ℤ/n`, with `ℤ/0 = ℤ` and `ℤ/1 = 0`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders([n.into()])
    }

    /// Canonical form of `⊕ ℤ/nᵢ`; an order of zero stands for a free summand.
    /// Orders may come in any sequence and need not be coprime or sorted.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free_rank += 1;
            } else if !n.is_one() {
                torsion.push(n);
            }
        }
        let k = torsion.len();
        let snf = smith_normal_form(&IntMatrix::diagonal(k, k, torsion));
        let invariant_factors = snf.nonzero_diagonal().into_iter().filter(|d| !d.is_one()).collect();
        FgAbelianGroup {
            free_rank,
            invariant_factors,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn num_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Order of each canonical generator, zero for free generators.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        std::iter::repeat(BigInt::zero())
            .take(self.free_rank)
            .chain(self.invariant_factors.iter().cloned())
            .collect()
    }

    /// Diagonal relation matrix: one column per torsion generator, with the
    /// generator's order in that generator's row.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.num_generators();
        let mut m = IntMatrix::zeros(n, self.invariant_factors.len());
        for (k, d) in self.invariant_factors.iter().enumerate() {
            m[(self.free_rank + k, k)] = d.clone();
        }
        m
    }

    pub fn is_trivial(&self) -> bool {
        self.num_generators() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Product of the invariant factors (1 for torsion-free groups).
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// `(free rank, torsion order)`.
    pub fn order_and_rank(&self) -> (usize, BigInt) {
        (self.free_rank, self.torsion_order())
    }

    /// Cardinality for finite groups, `None` otherwise.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// The group is `ℤ/p` for a prime `p`.
    pub fn as_prime_cyclic(&self) -> Option<u64> {
        if self.free_rank != 0 || self.invariant_factors.len() != 1 {
            return None;
        }
        let p: u64 = (&self.invariant_factors[0]).try_into().ok()?;
        (2..).take_while(|d| d * d <= p).all(|d| p % d != 0).then_some(p)
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        Self::from_cyclic_orders(self.generator_orders().into_iter().chain(other.generator_orders()))
    }

    /// `n` copies of `self`.
    pub fn power(&self, n: usize) -> FgAbelianGroup {
        FgAbelianGroup {
            free_rank: self.free_rank * n,
            invariant_factors: self
                .invariant_factors
                .iter()
                .flat_map(|d| std::iter::repeat(d.clone()).take(n))
                .collect(),
        }
    }
}

/// `ℤ^rows / image(m)` in canonical form.
pub fn cokernel(m: &IntMatrix) -> FgAbelianGroup {
    let snf = smith_normal_form(m);
    let free_rank = m.rows() - snf.rank();
    let invariant_factors = snf.nonzero_diagonal().into_iter().filter(|d| !d.is_one()).collect();
    FgAbelianGroup {
        free_rank,
        invariant_factors,
    }
}

/// `im(gens) / im(rels)` inside `ℤ^n`, where every column of `rels` lies in
/// the span of the columns of `gens`.
pub(crate) fn subquotient(gens: &IntMatrix, rels: &IntMatrix) -> FgAbelianGroup {
    debug_assert_eq!(gens.rows(), rels.rows());
    let snf = smith_normal_form(gens);
    let rank = snf.rank();
    let diag = snf.nonzero_diagonal();
    // Basis of im(gens) is dᵢ · (column i of left⁻¹); coordinates of a vector w
    // in that basis are (left · w)ᵢ / dᵢ.
    let moved = &snf.left * rels;
    let mut coords = IntMatrix::zeros(rank, rels.cols());
    for i in 0..rank {
        for j in 0..rels.cols() {
            let (q, r) = moved[(i, j)].div_rem(&diag[i]);
            debug_assert!(r.is_zero(), "relation outside the generated sublattice");
            coords[(i, j)] = q;
        }
    }
    debug_assert!((rank..moved.rows()).all(|i| moved.row(i).iter().all(Zero::is_zero)));
    cokernel(&coords)
}

/// `A ⊗ B`, summand-wise: `ℤ/a ⊗ ℤ/b = ℤ/gcd(a, b)` with `ℤ = ℤ/0`.
pub fn tensor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let bo = b.generator_orders();
    FgAbelianGroup::from_cyclic_orders(
        a.generator_orders()
            .iter()
            .flat_map(|x| bo.iter().map(move |y| x.gcd(y)))
            .collect::<Vec<_>>(),
    )
}

/// `Tor(A, B)`, summand-wise: `Tor(ℤ/a, ℤ/b) = ℤ/gcd(a, b)`, zero when either
/// side is free.
pub fn tor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    FgAbelianGroup::from_cyclic_orders(
        a.invariant_factors()
            .iter()
            .flat_map(|x| b.invariant_factors().iter().map(move |y| x.gcd(y)))
            .collect::<Vec<_>>(),
    )
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("ℤ/{d}"));
            } else {
                parts.push(format!("(ℤ/{d})^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn group(rank: usize, tors: &[i64]) -> FgAbelianGroup {
        FgAbelianGroup::new(rank, tors.iter().map(|&t| z(t)).collect()).unwrap()
    }

    #[test]
    fn canonicalizes_unsorted_torsion() {
        let g = FgAbelianGroup::from_cyclic_orders([z(6), z(1), z(4), z(0)]);
        assert_eq!(g, group(1, &[2, 12]));
        assert_eq!(FgAbelianGroup::cyclic(1), FgAbelianGroup::trivial());
        assert_eq!(FgAbelianGroup::cyclic(0), FgAbelianGroup::free(1));
    }

    #[test]
    fn rejects_non_canonical() {
        assert!(FgAbelianGroup::new(0, vec![z(2), z(3)]).is_err());
        assert!(FgAbelianGroup::new(0, vec![z(1)]).is_err());
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&IntMatrix::from_i64(&[&[3]])), group(0, &[3]));
        assert_eq!(cokernel(&IntMatrix::zeros(1, 0)), FgAbelianGroup::free(1));
        assert_eq!(cokernel(&IntMatrix::from_i64(&[&[2, 0], &[0, 0]])), group(1, &[2]));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor(&group(0, &[3]), &group(0, &[3])), group(0, &[3]));
        assert_eq!(tensor(&group(1, &[]), &group(1, &[4])), group(1, &[4]));
        assert_eq!(tensor(&group(1, &[4]), &group(0, &[6])), group(0, &[2, 6]));
    }

    #[test]
    fn tor_examples() {
        assert_eq!(tor(&group(1, &[]), &group(0, &[5])), FgAbelianGroup::trivial());
        assert_eq!(tor(&group(0, &[3]), &group(0, &[3])), group(0, &[3]));
        assert_eq!(tor(&group(1, &[4]), &group(0, &[6])), group(0, &[2]));
    }

    #[test]
    fn order_rank_and_display() {
        let g = group(2, &[3, 3, 6]);
        assert_eq!(g.order_and_rank(), (2, z(54)));
        assert_eq!(g.to_string(), "ℤ^2 ⊕ (ℤ/3)^2 ⊕ ℤ/6");
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(group(0, &[3]).power(2), group(0, &[3, 3]));
        assert_eq!(group(0, &[7]).as_prime_cyclic(), Some(7));
        assert_eq!(group(0, &[9]).as_prime_cyclic(), None);
    }

    #[test]
    fn subquotient_of_sublattice() {
        // 2ℤ ⊕ ℤ modulo the span of (4, 3): generators e₁' = (2,0), e₂ = (0,1);
        // relation 2e₁' + 3e₂ generates a primitive vector, quotient ℤ.
        let gens = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        let rels = IntMatrix::from_i64(&[&[4], &[3]]);
        assert_eq!(subquotient(&gens, &rels), FgAbelianGroup::free(1));
        let rels = IntMatrix::from_i64(&[&[4], &[0]]);
        assert_eq!(subquotient(&gens, &rels), group(1, &[2]));
    }
}
