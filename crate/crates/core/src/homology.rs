//! Simplicial homology with field coefficients.
//!
//! Simplices are oriented by increasing vertex label and
//! `∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk]`. In the reduced complex the empty
//! simplex sits in degree -1 and `∂[v] = [∅]`.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{sparse_rank, Matrix, SparseVec};
use crate::with_field;

/// Simplicial chain complex over a field with explicit face bases.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    field: F,
    reduced: bool,
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl<F: Field> ChainComplex<F> {
    /// `faces[k]` lists the `k`-simplices; the family must be closed under
    /// taking faces. Panics if `∂∂ ≠ 0`, which would mean the family is not a
    /// complex.
    pub fn from_faces(field: &F, faces: Vec<Vec<Face>>, reduced: bool) -> Self {
        let index = faces
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        let cc = ChainComplex {
            field: field.clone(),
            reduced,
            faces,
            index,
        };
        cc.assert_boundary_squares_to_zero();
        cc
    }

    pub fn of(complex: &SimplicialComplex, field: &F, reduced: bool) -> Self {
        Self::from_faces(field, complex.all_faces(), reduced)
    }

    /// Chain complex of the full subcomplex on `subset`, given the faces of
    /// the ambient complex.
    pub fn restricted(all_faces: &[Vec<Face>], subset: Face, field: &F, reduced: bool) -> Self {
        let mut faces: Vec<Vec<Face>> = all_faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .copied()
                    .filter(|f| f.is_subset(subset))
                    .collect()
            })
            .collect();
        while faces.last().is_some_and(|l: &Vec<Face>| l.is_empty()) {
            faces.pop();
        }
        Self::from_faces(field, faces, reduced)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Top degree plus one (0 for a complex without vertices).
    pub fn num_degrees(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn rank_of_chain_group(&self, k: usize) -> usize {
        self.faces(k).len()
    }

    pub fn index_of(&self, face: Face) -> Option<usize> {
        if face.is_empty() {
            return None;
        }
        self.index.get(face.len() - 1)?.get(&face).copied()
    }

    fn augmentation_rows(&self) -> usize {
        usize::from(self.reduced && !self.faces(0).is_empty())
    }

    /// Signed boundary of a single face, as `(face, ±1)` pairs.
    pub fn face_boundary(face: Face) -> impl Iterator<Item = (Face, i64)> {
        face.vertices()
            .enumerate()
            .map(move |(i, v)| (face.without(v), if i % 2 == 0 { 1 } else { -1 }))
    }

    /// Sparse column of `∂_k` for the face with index `j` in degree `k`.
    fn boundary_column(&self, k: usize, j: usize) -> SparseVec<F::Elem> {
        let face = self.faces[k][j];
        if k == 0 {
            return if self.reduced {
                vec![(0, self.field.one())]
            } else {
                Vec::new()
            };
        }
        let mut col: SparseVec<F::Elem> = Self::face_boundary(face)
            .map(|(b, s)| (self.index[k - 1][&b], self.field.from_i64(s)))
            .filter(|(_, v)| !self.field.is_zero(v))
            .collect();
        col.sort_by_key(|(i, _)| *i);
        col
    }

    /// Rows of `∂_k` (the rank of `C_{k-1}`, or 1/0 for the augmentation).
    pub fn boundary_rows(&self, k: usize) -> usize {
        if k == 0 {
            self.augmentation_rows()
        } else {
            self.rank_of_chain_group(k - 1)
        }
    }

    /// Dense `∂_k : C_k → C_{k-1}`.
    pub fn boundary_matrix(&self, k: usize) -> Matrix<F> {
        let rows = self.boundary_rows(k);
        let cols = self.rank_of_chain_group(k);
        let mut m = Matrix::zeros(&self.field, rows, cols);
        for j in 0..cols {
            for (i, v) in self.boundary_column(k, j) {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn boundary_sparse(&self, k: usize) -> Vec<SparseVec<F::Elem>> {
        (0..self.rank_of_chain_group(k))
            .map(|j| self.boundary_column(k, j))
            .collect()
    }

    fn assert_boundary_squares_to_zero(&self) {
        let f = &self.field;
        for k in 1..self.faces.len() {
            for j in 0..self.faces[k].len() {
                let mut acc: HashMap<usize, F::Elem> = HashMap::new();
                for (i, v) in self.boundary_column(k, j) {
                    for (r, w) in self.boundary_column(k - 1, i) {
                        let e = acc.entry(r).or_insert_with(|| f.zero());
                        *e = f.add(e, &f.mul(&v, &w));
                    }
                }
                assert!(
                    acc.values().all(|v| f.is_zero(v)),
                    "∂∂ ≠ 0 at {}: input is not closed under faces",
                    self.faces[k][j]
                );
            }
        }
    }

    /// Rank of `∂_k`, through the sparse reduction.
    pub fn boundary_rank(&self, k: usize) -> usize {
        if k >= self.faces.len() {
            return 0;
        }
        sparse_rank(&self.field, self.boundary_sparse(k))
    }

    /// Betti numbers in degrees `0..num_degrees()`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.faces.len())
            .map(|k| self.boundary_rank(k))
            .collect();
        (0..self.faces.len())
            .map(|k| self.rank_of_chain_group(k) - ranks[k] - ranks[k + 1])
            .collect()
    }

    /// Same numbers from transposed (coboundary) matrices.
    pub fn cohomology_betti(&self) -> Vec<usize> {
        let rank_t = |k: usize| {
            if k >= self.faces.len() {
                0
            } else {
                self.boundary_matrix(k).transpose().rank()
            }
        };
        (0..self.faces.len())
            .map(|k| self.rank_of_chain_group(k) - rank_t(k) - rank_t(k + 1))
            .collect()
    }

    /// Representative basis of homology in every degree.
    pub fn homology(&self) -> HomologySpace<F> {
        let degrees = (0..self.faces.len())
            .map(|k| self.homology_degree(k, None))
            .collect();
        HomologySpace { degrees }
    }

    /// Homology in degree `k` with prescribed representatives, which must be
    /// cycles whose classes form a basis. Returns `None` if they do not.
    pub fn homology_degree_with(&self, k: usize, reps: &Matrix<F>) -> Option<HomologyDegree<F>> {
        let deg = self.homology_degree(k, Some(reps));
        let expected = self.betti().get(k).copied().unwrap_or(0);
        (deg.dim() == expected && deg.dim() == reps.cols()).then_some(deg)
    }

    fn boundary_basis(&self, k: usize) -> Matrix<F> {
        let n = self.rank_of_chain_group(k);
        if k + 1 >= self.faces.len() {
            return Matrix::zeros(&self.field, n, 0);
        }
        let d = self.boundary_matrix(k + 1);
        let (_, pivots) = d.rref();
        d.select_columns(&pivots)
    }

    fn homology_degree(&self, k: usize, given: Option<&Matrix<F>>) -> HomologyDegree<F> {
        let n = self.rank_of_chain_group(k);
        let b = self.boundary_basis(k);
        let candidates = match given {
            Some(reps) => reps.clone(),
            None => self.boundary_matrix(k).kernel_basis(),
        };
        if let Some(reps) = given {
            assert!(
                self.boundary_matrix(k).mul(reps).is_zero(),
                "prescribed representatives are not cycles"
            );
        }
        let stacked = b.hstack(&candidates);
        let (_, pivots) = stacked.rref();
        let chosen: Vec<usize> = pivots
            .iter()
            .filter(|&&p| p >= b.cols())
            .map(|&p| p - b.cols())
            .collect();
        let reps = candidates.select_columns(&chosen);
        let basis = b.hstack(&reps);
        let (_, rows) = basis.transpose().rref();
        let solve = basis
            .select_rows(&rows)
            .inverse()
            .expect("independent columns have an invertible row minor");
        HomologyDegree {
            chain_rank: n,
            boundary_rank: b.cols(),
            reps,
            rows,
            solve,
        }
    }
}

/// Homology in one degree: representative cycles plus the data needed to
/// express any cycle in terms of them.
#[derive(Clone, Debug)]
pub struct HomologyDegree<F: Field> {
    chain_rank: usize,
    boundary_rank: usize,
    reps: Matrix<F>,
    rows: Vec<usize>,
    solve: Matrix<F>,
}

impl<F: Field> HomologyDegree<F> {
    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Columns are cycle representatives.
    pub fn representatives(&self) -> &Matrix<F> {
        &self.reps
    }

    /// Coordinates of the class of the cycle `z` in the representative basis.
    pub fn coordinates(&self, z: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(z.len(), self.chain_rank);
        let picked: Vec<F::Elem> = self.rows.iter().map(|&r| z[r].clone()).collect();
        let x = self.solve.mul_vec(&picked);
        x[self.boundary_rank..].to_vec()
    }
}

#[derive(Clone, Debug)]
pub struct HomologySpace<F: Field> {
    degrees: Vec<HomologyDegree<F>>,
}

impl<F: Field> HomologySpace<F> {
    pub fn degree(&self, k: usize) -> Option<&HomologyDegree<F>> {
        self.degrees.get(k)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(HomologyDegree::dim).collect()
    }

    pub fn num_degrees(&self) -> usize {
        self.degrees.len()
    }
}

/// Matrix of a homology map per degree; column `j` of `matrices[k]` is the
/// image of the `j`-th source representative in target coordinates.
#[derive(Clone, Debug)]
pub struct InducedMap<F: Field> {
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> InducedMap<F> {
    pub fn ranks(&self) -> Vec<usize> {
        self.matrices.iter().map(Matrix::rank).collect()
    }

    /// Full column rank in every degree.
    pub fn is_injective(&self) -> bool {
        self.first_non_injective_degree().is_none()
    }

    pub fn first_non_injective_degree(&self) -> Option<usize> {
        self.matrices.iter().position(|m| m.rank() < m.cols())
    }
}

/// A chain map given simplex by simplex as integer-coefficient chains.
/// The empty simplex maps to the empty simplex.
#[derive(Clone, Debug, Default)]
pub struct ChainMap {
    images: HashMap<Face, Vec<(Face, i64)>>,
}

impl ChainMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, source: Face, image: Vec<(Face, i64)>) {
        self.images.insert(source, image);
    }

    pub fn image(&self, source: Face) -> &[(Face, i64)] {
        self.images.get(&source).map_or(&[], Vec::as_slice)
    }

    /// Identity on every face of `complex`.
    pub fn identity(complex: &SimplicialComplex) -> Self {
        let mut map = Self::new();
        for level in complex.all_faces() {
            for f in level {
                map.insert(f, vec![(f, 1)]);
            }
        }
        map
    }

    /// Checks `∂f = f∂` simplex by simplex over `field`.
    pub fn check<F: Field>(
        &self,
        field: &F,
        source: &ChainComplex<F>,
        target: &ChainComplex<F>,
    ) -> Result<()> {
        let push = |acc: &mut HashMap<Face, F::Elem>, face: Face, c: F::Elem| {
            let e = acc.entry(face).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        };
        let image_of = |face: Face| -> Vec<(Face, i64)> {
            if face.is_empty() {
                vec![(Face::EMPTY, 1)]
            } else {
                self.image(face).to_vec()
            }
        };
        for k in 0..source.num_degrees() {
            for &sigma in source.faces(k) {
                let mut lhs = HashMap::new();
                for (tau, c) in image_of(sigma) {
                    if tau.is_empty() {
                        continue;
                    }
                    for (b, s) in ChainComplex::<F>::face_boundary(tau) {
                        if b.is_empty() && !target.is_reduced() {
                            continue;
                        }
                        push(&mut lhs, b, field.from_i64(c * s));
                    }
                }
                let mut rhs = HashMap::new();
                for (b, s) in ChainComplex::<F>::face_boundary(sigma) {
                    if b.is_empty() && !source.is_reduced() {
                        continue;
                    }
                    for (tau, c) in image_of(b) {
                        push(&mut rhs, tau, field.from_i64(c * s));
                    }
                }
                let keys: Vec<Face> = lhs.keys().chain(rhs.keys()).copied().collect();
                for key in keys {
                    let a = lhs.get(&key).cloned().unwrap_or_else(|| field.zero());
                    let b = rhs.get(&key).cloned().unwrap_or_else(|| field.zero());
                    if !field.is_zero(&field.sub(&a, &b)) {
                        return Err(Error::NotAChainMap(sigma));
                    }
                }
            }
        }
        Ok(())
    }

    /// Image of a chain (given in the source basis of degree `k`) in the
    /// target basis.
    pub fn push_forward<F: Field>(
        &self,
        field: &F,
        source: &ChainComplex<F>,
        target: &ChainComplex<F>,
        k: usize,
        chain: &[F::Elem],
    ) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); target.rank_of_chain_group(k)];
        for (i, c) in chain.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for &(tau, s) in self.image(source.faces(k)[i]) {
                if tau.len() != k + 1 {
                    continue;
                }
                let j = target
                    .index_of(tau)
                    .expect("chain map image outside target");
                out[j] = field.add(&out[j], &field.mul(c, &field.from_i64(s)));
            }
        }
        out
    }

    /// The induced map on homology, after checking the chain-map identity.
    pub fn induced<F: Field>(
        &self,
        field: &F,
        source: &ChainComplex<F>,
        source_h: &HomologySpace<F>,
        target: &ChainComplex<F>,
        target_h: &HomologySpace<F>,
    ) -> Result<InducedMap<F>> {
        self.check(field, source, target)?;
        Ok(self.induced_unchecked(field, source, source_h, target, target_h))
    }

    pub(crate) fn induced_unchecked<F: Field>(
        &self,
        field: &F,
        source: &ChainComplex<F>,
        source_h: &HomologySpace<F>,
        target: &ChainComplex<F>,
        target_h: &HomologySpace<F>,
    ) -> InducedMap<F> {
        let matrices = (0..source_h.num_degrees())
            .map(|k| {
                let src = source_h.degree(k).unwrap();
                let tgt_dim = target_h.degree(k).map_or(0, HomologyDegree::dim);
                let columns: Vec<Vec<F::Elem>> = (0..src.dim())
                    .map(|j| match target_h.degree(k) {
                        Some(tgt) if tgt.dim() > 0 => {
                            let z = src.representatives().column(j);
                            tgt.coordinates(&self.push_forward(field, source, target, k, &z))
                        }
                        _ => Vec::new(),
                    })
                    .collect();
                Matrix::from_columns(field, tgt_dim, &columns)
            })
            .collect();
        InducedMap { matrices }
    }
}

/// Betti numbers of `complex` in degrees `0..=dim`.
pub fn betti(complex: &SimplicialComplex, field: FieldSpec, reduced: bool) -> Vec<usize> {
    with_field!(field, |f| ChainComplex::of(complex, &f, reduced).betti())
}

/// Reduced Betti numbers of the full subcomplex on `subset`, computed from
/// the ambient face lists.
pub fn reduced_betti_of_subset<F: Field>(
    all_faces: &[Vec<Face>],
    subset: Face,
    field: &F,
) -> Vec<usize> {
    ChainComplex::restricted(all_faces, subset, field, true).betti()
}

pub fn homology_basis<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
    reduced: bool,
) -> HomologySpace<F> {
    ChainComplex::of(complex, field, reduced).homology()
}

/// Precomputed homology of `K`, for testing many inclusions `K_I → K`.
pub struct InclusionTester<F: Field> {
    field: F,
    all_faces: Vec<Vec<Face>>,
    chains: ChainComplex<F>,
    homology: HomologySpace<F>,
}

impl<F: Field> InclusionTester<F> {
    pub fn new(complex: &SimplicialComplex, field: &F) -> Self {
        let all_faces = complex.all_faces();
        let chains = ChainComplex::from_faces(field, all_faces.clone(), false);
        let homology = chains.homology();
        InclusionTester {
            field: field.clone(),
            all_faces,
            chains,
            homology,
        }
    }

    /// Induced map on unreduced homology of `K_I → K`.
    pub fn induced(&self, subset: Face) -> InducedMap<F> {
        let sub = ChainComplex::restricted(&self.all_faces, subset, &self.field, false);
        let sub_h = sub.homology();
        let mut inclusion = ChainMap::new();
        for k in 0..sub.num_degrees() {
            for &f in sub.faces(k) {
                inclusion.insert(f, vec![(f, 1)]);
            }
        }
        inclusion.induced_unchecked(&self.field, &sub, &sub_h, &self.chains, &self.homology)
    }

    pub fn all_faces(&self) -> &[Vec<Face>] {
        &self.all_faces
    }

    pub fn field(&self) -> &F {
        &self.field
    }
}

/// Induced map of `K_I ↪ K` on unreduced homology.
pub fn induced_inclusion_map<F: Field>(
    complex: &SimplicialComplex,
    subset: Face,
    field: &F,
) -> Result<InducedMap<F>> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    complex.full_subcomplex(subset)?;
    Ok(InclusionTester::new(complex, field).induced(subset))
}

pub fn is_injective_inclusion(
    complex: &SimplicialComplex,
    subset: Face,
    field: FieldSpec,
) -> Result<bool> {
    with_field!(field, |f| induced_inclusion_map(complex, subset, &f)
        .map(|m| m.is_injective()))
}

pub type Chain<F> = Vec<(Face, <F as Field>::Elem)>;

/// Top-dimensional cycle generating `H_d(M)` when `β_d = 1`, as
/// `(facet, coefficient)` pairs with the first coefficient normalized to 1.
pub fn fundamental_class<F: Field>(
    manifold: &SimplicialComplex,
    field: &F,
) -> Result<Option<Chain<F>>> {
    let d = manifold.dim();
    if d < 0 {
        return Ok(None);
    }
    let d = d as usize;
    let chains = ChainComplex::of(manifold, field, false);
    let cycles = chains.boundary_matrix(d).kernel_basis();
    match cycles.cols() {
        0 => Ok(None),
        1 => {
            let col = cycles.column(0);
            let lead = col
                .iter()
                .find(|c| !field.is_zero(c))
                .cloned()
                .expect("nonzero cycle");
            let inv = field.inv(&lead);
            Ok(Some(
                chains
                    .faces(d)
                    .iter()
                    .zip(col)
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(f, c)| (*f, field.mul(&c, &inv)))
                    .collect(),
            ))
        }
        n => Err(Error::NotPseudomanifold(format!(
            "top homology has rank {n}"
        ))),
    }
}

pub fn is_orientable_over(manifold: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    with_field!(field, |f| fundamental_class(manifold, &f)
        .map(|c| c.is_some()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::generators::{boundary_simplex, cycle};

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn sphere_and_circle_betti() {
        assert_eq!(
            betti(&boundary_simplex(3), FieldSpec::Rational, true),
            vec![0, 0, 1]
        );
        assert_eq!(
            betti(&boundary_simplex(3), FieldSpec::Rational, false),
            vec![1, 0, 1]
        );
        assert_eq!(betti(&cycle(4), FieldSpec::Prime(2), true), vec![0, 1]);
        let two = SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(betti(&two, FieldSpec::Rational, true), vec![1]);
        assert_eq!(betti(&two, FieldSpec::Rational, false), vec![2]);
    }

    #[test]
    fn sphere_fundamental_cycle_is_signed_facet_sum() {
        let s = boundary_simplex(3);
        let class = fundamental_class(&s, &Rationals).unwrap().unwrap();
        assert_eq!(class.len(), 4);
        let signs: Vec<String> = class.iter().map(|(_, c)| c.to_string()).collect();
        // facets 123, 124, 134, 234 appear with alternating signs
        assert_eq!(signs, vec!["1", "-1", "1", "-1"]);
        assert!(is_orientable_over(&s, FieldSpec::Rational).unwrap());
    }

    #[test]
    fn homology_bases() {
        let h = homology_basis(&boundary_simplex(3), &Rationals, true);
        assert_eq!(h.betti(), vec![0, 0, 1]);
        let two = SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(homology_basis(&two, &Rationals, true).betti(), vec![1]);
        let h = homology_basis(&cycle(4), &Rationals, true);
        let rep = h.degree(1).unwrap().representatives().column(0);
        assert_eq!(rep.iter().filter(|c| **c != Rationals.zero()).count(), 4);
    }

    #[test]
    fn projection_inverts_inclusion_of_representatives() {
        let c = ChainComplex::of(&boundary_simplex(4), &Rationals, false);
        let h = c.homology();
        for k in 0..h.num_degrees() {
            let deg = h.degree(k).unwrap();
            for j in 0..deg.dim() {
                let coords = deg.coordinates(&deg.representatives().column(j));
                for (i, x) in coords.iter().enumerate() {
                    let expect = if i == j {
                        Rationals.one()
                    } else {
                        Rationals.zero()
                    };
                    assert_eq!(*x, expect);
                }
            }
        }
    }

    #[test]
    fn inclusion_injectivity() {
        assert!(!is_injective_inclusion(&cycle(4), face(&[1, 3]), FieldSpec::Rational).unwrap());
        let m = induced_inclusion_map(&cycle(4), face(&[1, 3]), &Rationals).unwrap();
        assert_eq!(m.ranks()[0], 1);
        assert_eq!(m.matrices[0].cols(), 2);
        assert!(is_injective_inclusion(
            &boundary_simplex(3),
            face(&[1, 2, 3]),
            FieldSpec::Rational
        )
        .unwrap());
        assert_eq!(
            is_injective_inclusion(&cycle(4), Face::EMPTY, FieldSpec::Rational),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn chain_maps() {
        let c4 = cycle(4);
        let f = Rationals;
        let cc = ChainComplex::of(&c4, &f, true);
        let h = cc.homology();
        let id = ChainMap::identity(&c4)
            .induced(&f, &cc, &h, &cc, &h)
            .unwrap();
        assert_eq!(id.matrices[1], Matrix::identity(&f, 1));
        let zero = ChainMap::new();
        // the zero assignment is not a chain map in the reduced complex
        // (vertices must hit the augmentation), so test it unreduced
        let cu = ChainComplex::of(&c4, &f, false);
        let hu = cu.homology();
        let z = zero.induced(&f, &cu, &hu, &cu, &hu).unwrap();
        assert!(z.matrices.iter().all(Matrix::is_zero));
        let mut bad = ChainMap::identity(&c4);
        bad.insert(face(&[1, 2]), vec![(face(&[2, 3]), 1)]);
        assert_eq!(
            bad.check(&f, &cc, &cc),
            Err(Error::NotAChainMap(face(&[1, 2])))
        );
    }

    #[test]
    fn cohomology_matches_homology() {
        let f = PrimeField::new(3).unwrap();
        let c = ChainComplex::of(&cycle(5), &f, true);
        assert_eq!(c.betti(), c.cohomology_betti());
    }
}
