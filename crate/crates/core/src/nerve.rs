//! Finite abstract simplicial complexes and the nerve of a finite cover.
//!
//! Simplices are strictly increasing vertex tuples, stored per dimension in
//! lexicographic order. Every matrix produced here indexes rows and columns
//! in that order.

use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::abelian::{smith_normal_form, IntegerChainComplex};
use crate::f2::F2Matrix;
use crate::matrix::IntMatrix;

pub type Simplex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("vertex {vertex} out of range for a complex on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("empty simplex")]
    EmptySimplex,
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("dimension {p} outside 1..={top}")]
    DimensionOutOfRange { p: usize, top: usize },
    #[error("cover set {index} is empty")]
    EmptyCoverSet { index: usize },
    #[error("cover set {index} contains {element}, outside a ground set of size {ground_set_size}")]
    ElementOutOfRange {
        index: usize,
        element: usize,
        ground_set_size: usize,
    },
    #[error("ground set must be nonempty")]
    EmptyGroundSet,
    #[error("sets do not cover the ground set; uncovered points {0:?}")]
    CoverViolated(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `simplices[p]` holds the p-simplices; no trailing empty levels.
    simplices: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// Downward closure of `maximal` on the vertex set `0..vertex_count`.
    ///
    /// Every declared vertex is a 0-simplex, including vertices that no
    /// maximal simplex mentions.
    pub fn from_maximal_simplices<I, S>(vertex_count: usize, maximal: I) -> Result<Self, NerveError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut levels: Vec<BTreeSet<Simplex>> = Vec::new();
        if vertex_count > 0 {
            levels.push((0..vertex_count).map(|v| vec![v]).collect());
        }
        for s in maximal {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(NerveError::EmptySimplex);
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(NerveError::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != s.len() {
                return Err(NerveError::RepeatedVertex(s.to_vec()));
            }
            if levels.len() < sorted.len() {
                levels.resize_with(sorted.len(), BTreeSet::new);
            }
            for mask in 1u64..(1 << sorted.len()) {
                let face: Simplex = sorted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                levels[face.len() - 1].insert(face);
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            simplices: levels.into_iter().map(|l| l.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, p: usize) -> &[Simplex] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices(p).len()
    }

    /// Simplex counts `n_0, …, n_top`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let p = simplex.len().checked_sub(1)?;
        self.simplices(p).binary_search_by(|s| s.as_slice().cmp(simplex)).ok()
    }

    /// Simplicial boundary `∂_p`: the column of σ is `Σᵢ (−1)^i (σ without its i-th vertex)`.
    pub fn boundary_matrix(&self, p: usize) -> Result<IntMatrix, NerveError> {
        let top = self.dimension().unwrap_or(0);
        if p == 0 || p > top {
            return Err(NerveError::DimensionOutOfRange { p, top });
        }
        let faces = self.simplices(p - 1);
        let cells = self.simplices(p);
        let mut m = IntMatrix::zeros(faces.len(), cells.len());
        for (j, sigma) in cells.iter().enumerate() {
            for i in 0..sigma.len() {
                let mut face = sigma.clone();
                face.remove(i);
                let row = self.index_of(&face).expect("complex is downward closed");
                m[(row, j)] = if i % 2 == 0 { 1.into() } else { (-1).into() };
            }
        }
        Ok(m)
    }

    /// The simplicial chain complex `C_top → … → C_0` over ℤ.
    pub fn chain_complex(&self) -> IntegerChainComplex {
        let ranks = if self.is_empty() { vec![0] } else { self.f_vector() };
        let boundaries = (1..ranks.len())
            .map(|p| self.boundary_matrix(p).expect("p in range"))
            .collect();
        IntegerChainComplex::new(ranks, boundaries).expect("∂∂ = 0 for simplicial boundaries")
    }

    /// `δ^p : C^p → C^{p+1}` over F₂, shape `n_{p+1} × n_p`. Above the top
    /// dimension it has zero rows.
    pub fn coboundary_matrix_mod2(&self, p: usize) -> Result<F2Matrix, NerveError> {
        let top = self.dimension().unwrap_or(0);
        if p > top {
            return Err(NerveError::DimensionOutOfRange { p, top });
        }
        if p + 1 > top {
            return Ok(F2Matrix::zeros(0, self.count(p)));
        }
        Ok(F2Matrix::from_int(&self.boundary_matrix(p + 1)?).transpose())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.count(0);
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// Pure 2-dimensional, connected, and every edge lies in exactly two triangles.
    pub fn is_closed_surface(&self) -> bool {
        if self.dimension() != Some(2) || !self.is_connected() {
            return false;
        }
        let mut edge_degree = vec![0usize; self.count(1)];
        let mut vertex_used = vec![false; self.count(0)];
        for t in self.simplices(2) {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                edge_degree[self.index_of(&[t[a], t[b]]).expect("closed")] += 1;
            }
            for &v in t {
                vertex_used[v] = true;
            }
        }
        edge_degree.iter().all(|&d| d == 2) && vertex_used.iter().all(|&u| u)
    }

    /// Generator of `ker ∂₂` when it has rank one with all entries `±1`,
    /// normalized so the first entry is `+1`.
    pub fn fundamental_cycle(&self) -> Option<Vec<i64>> {
        if self.dimension() != Some(2) {
            return None;
        }
        let kernel = smith_normal_form(&self.boundary_matrix(2).ok()?).kernel_basis();
        if kernel.cols() != 1 {
            return None;
        }
        let column = kernel.column(0);
        if !column.iter().all(|x| x.abs().is_one()) {
            return None;
        }
        let flip = column[0].is_negative();
        Some(
            column
                .iter()
                .map(|x| {
                    let v = x.to_i64().expect("unit entry");
                    if flip {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(p, s)| if p % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }
}

/// A finite cover of `{0, …, ground_set_size − 1}` by nonempty subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDescription {
    ground_set_size: usize,
    sets: Vec<BTreeSet<usize>>,
}

impl CoverDescription {
    pub fn new<I, S>(ground_set_size: usize, sets: I) -> Result<Self, NerveError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        if ground_set_size == 0 {
            return Err(NerveError::EmptyGroundSet);
        }
        let mut out = Vec::new();
        for (index, s) in sets.into_iter().enumerate() {
            let set: BTreeSet<usize> = s.into_iter().collect();
            if set.is_empty() {
                return Err(NerveError::EmptyCoverSet { index });
            }
            if let Some(&element) = set.iter().find(|&&x| x >= ground_set_size) {
                return Err(NerveError::ElementOutOfRange {
                    index,
                    element,
                    ground_set_size,
                });
            }
            out.push(set);
        }
        Ok(CoverDescription {
            ground_set_size,
            sets: out,
        })
    }

    pub fn ground_set_size(&self) -> usize {
        self.ground_set_size
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    /// Ground points in no set.
    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.ground_set_size)
            .filter(|x| !self.sets.iter().any(|s| s.contains(x)))
            .collect()
    }
}

/// Nerve of a cover: `(i₀ < … < i_p)` is a simplex iff the sets meet.
pub fn nerve_of_cover(cover: &CoverDescription) -> Result<SimplicialComplex, NerveError> {
    let uncovered = cover.uncovered();
    if !uncovered.is_empty() {
        return Err(NerveError::CoverViolated(uncovered));
    }
    let sets = cover.sets();
    let mut levels: Vec<Vec<Simplex>> = Vec::new();
    // Depth-first extension in increasing index order emits every level in
    // lexicographic order.
    fn extend(
        sets: &[BTreeSet<usize>],
        simplex: &mut Simplex,
        common: &BTreeSet<usize>,
        levels: &mut Vec<Vec<Simplex>>,
    ) {
        let p = simplex.len() - 1;
        if levels.len() <= p {
            levels.push(Vec::new());
        }
        levels[p].push(simplex.clone());
        let next = simplex.last().map_or(0, |&v| v + 1);
        for j in next..sets.len() {
            let meet: BTreeSet<usize> = common.intersection(&sets[j]).copied().collect();
            if !meet.is_empty() {
                simplex.push(j);
                extend(sets, simplex, &meet, levels);
                simplex.pop();
            }
        }
    }
    for (i, s) in sets.iter().enumerate() {
        extend(sets, &mut vec![i], s, &mut levels);
    }
    for level in &mut levels {
        level.sort();
    }
    Ok(SimplicialComplex {
        vertex_count: sets.len(),
        simplices: levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> SimplicialComplex {
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

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_maximal_simplices(3, [[0, 1], [0, 2], [1, 2]]).unwrap()
    }

    #[test]
    fn closure_counts() {
        let edge = SimplicialComplex::from_maximal_simplices(2, [[0, 1]]).unwrap();
        assert_eq!(edge.f_vector(), vec![2, 1]);
        assert_eq!(octahedron().f_vector(), vec![6, 12, 8]);
        let tet = SimplicialComplex::from_maximal_simplices(4, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(tet.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            SimplicialComplex::from_maximal_simplices(2, [[0, 2]]),
            Err(NerveError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        let empty: [&[usize]; 1] = [&[]];
        assert_eq!(
            SimplicialComplex::from_maximal_simplices(2, empty),
            Err(NerveError::EmptySimplex)
        );
        assert!(matches!(
            SimplicialComplex::from_maximal_simplices(3, [[1, 1]]),
            Err(NerveError::RepeatedVertex(_))
        ));
    }

    #[test]
    fn nerve_examples() {
        let path = nerve_of_cover(&CoverDescription::new(3, [vec![0, 1], vec![1, 2]]).unwrap()).unwrap();
        assert_eq!(path.f_vector(), vec![2, 1]);
        let disjoint = nerve_of_cover(&CoverDescription::new(3, [vec![0], vec![1], vec![2]]).unwrap()).unwrap();
        assert_eq!(disjoint.f_vector(), vec![3]);
        let circle =
            nerve_of_cover(&CoverDescription::new(6, [vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap()).unwrap();
        assert_eq!(circle, hollow_triangle());
    }

    #[test]
    fn nerve_rejects_non_cover() {
        let cover = CoverDescription::new(4, [vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(nerve_of_cover(&cover), Err(NerveError::CoverViolated(vec![3])));
        assert!(CoverDescription::new(3, [Vec::<usize>::new()]).is_err());
        assert!(CoverDescription::new(3, [vec![5]]).is_err());
    }

    #[test]
    fn boundary_examples() {
        let edge = SimplicialComplex::from_maximal_simplices(2, [[0, 1]]).unwrap();
        assert_eq!(edge.boundary_matrix(1).unwrap(), IntMatrix::from_i64(&[&[-1], &[1]]));
        assert_eq!(
            hollow_triangle().boundary_matrix(1).unwrap(),
            IntMatrix::from_i64(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]])
        );
        let tri = SimplicialComplex::from_maximal_simplices(3, [[0, 1, 2]]).unwrap();
        let d1 = tri.boundary_matrix(1).unwrap();
        let d2 = tri.boundary_matrix(2).unwrap();
        assert!((&d1 * &d2).is_zero());
        assert!(tri.boundary_matrix(3).is_err());
        assert!(tri.boundary_matrix(0).is_err());
    }

    #[test]
    fn coboundary_mod2_examples() {
        let oct = octahedron().coboundary_matrix_mod2(2).unwrap();
        assert_eq!((oct.rows(), oct.cols()), (0, 8));
        let tet = SimplicialComplex::from_maximal_simplices(4, [[0, 1, 2, 3]]).unwrap();
        let d = tet.coboundary_matrix_mod2(2).unwrap();
        assert_eq!((d.rows(), d.cols()), (1, 4));
        assert!((0..4).all(|j| d.get(0, j)));
        let d0 = hollow_triangle().coboundary_matrix_mod2(0).unwrap();
        let expected = F2Matrix::from_int(&IntMatrix::from_i64(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(d0, expected);
    }

    #[test]
    fn structural_checks() {
        let oct = octahedron();
        assert!(oct.is_closed_surface());
        let z = oct.fundamental_cycle().unwrap();
        assert_eq!(z.len(), 8);
        assert_eq!(z[0], 1);
        assert!(z.iter().all(|x| x.abs() == 1));
        let d2 = oct.boundary_matrix(2).unwrap();
        let zb: Vec<_> = z.iter().map(|&x| num_bigint::BigInt::from(x)).collect();
        assert!(d2.mul_vec(&zb).iter().all(|x| x == &0.into()));

        assert!(!hollow_triangle().is_closed_surface());
        assert!(hollow_triangle().fundamental_cycle().is_none());
        let two_points = SimplicialComplex::from_maximal_simplices(2, [[0], [1]]).unwrap();
        assert!(!two_points.is_connected());
        // A disc is not closed.
        let tri = SimplicialComplex::from_maximal_simplices(3, [[0, 1, 2]]).unwrap();
        assert!(!tri.is_closed_surface());
        assert!(tri.fundamental_cycle().is_none());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(octahedron().euler_characteristic(), 2);
        assert_eq!(hollow_triangle().euler_characteristic(), 0);
        let point = SimplicialComplex::from_maximal_simplices(1, [[0]]).unwrap();
        assert_eq!(point.euler_characteristic(), 1);
    }

    #[test]
    fn interval_cover_reproduces_mayer_vietoris_map() {
        let nerve = nerve_of_cover(&CoverDescription::new(3, [vec![0, 1], vec![1, 2]]).unwrap()).unwrap();
        assert_eq!(nerve.dimension(), Some(1));
        // Δ(a) = (a, −a) up to the global sign of the convention.
        assert_eq!(nerve.boundary_matrix(1).unwrap(), IntMatrix::from_i64(&[&[-1], &[1]]));
    }
}
