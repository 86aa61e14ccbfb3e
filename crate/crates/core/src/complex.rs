//! Finite simplicial complexes on the vertex set `[m] = {1, ..., m}`.
//!
//! Simplices are bit sets: label `i` lives at bit `i - 1`, which caps `m` at 63.
//! A complex is stored by its inclusion-maximal facets in lexicographic order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 63;

/// A simplex (or any vertex subset) as a bit set over `[m]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn vertex(label: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&label));
        Face(1 << (label - 1))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            Face::EMPTY
        } else {
            Face(u64::MAX >> (64 - n))
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        labels.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }

    pub fn try_from_vertices(labels: &[usize], m: usize) -> Result<Self> {
        let mut face = Face::EMPTY;
        for &v in labels {
            if v == 0 || v > m {
                return Err(Error::LabelOutOfRange { label: v, m });
            }
            face = face.with(v);
        }
        Ok(face)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `len - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_VERTICES).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn with(self, label: usize) -> Self {
        Face(self.0 | (1 << (label - 1)))
    }

    pub fn without(self, label: usize) -> Self {
        Face(self.0 & !(1 << (label - 1)))
    }

    pub fn union(self, other: Face) -> Self {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Self {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Self {
        Face(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertex labels in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Position of `label` among the vertices of `self` (0-based).
    pub fn position(self, label: usize) -> usize {
        (self.0 & ((1u64 << (label - 1)) - 1)).count_ones() as usize
    }

    /// Faces of codimension one, in the order `[v0..v̂i..vk]` for `i = 0..=k`.
    pub fn boundary_faces(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            current: 0,
            done: false,
        }
    }

    /// Lexicographic comparison of the increasing vertex sequences.
    pub fn cmp_lex(self, other: Face) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
            if x != y {
                return x.cmp(&y);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }

    /// Size first, then lexicographic.
    pub fn cmp_graded(self, other: Face) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(*other)
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Face> for Vec<usize> {
    fn from(face: Face) -> Self {
        face.to_vec()
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;

    fn try_from(labels: Vec<usize>) -> Result<Self> {
        Face::try_from_vertices(&labels, MAX_VERTICES)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

pub struct Subsets {
    mask: u64,
    current: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let out = Face(self.current);
        // standard submask enumeration in increasing numeric order
        self.current = (self.current.wrapping_sub(self.mask)) & self.mask;
        if self.current == 0 {
            self.done = true;
        }
        Some(out)
    }
}

/// All `k`-element subsets of `within`, in lexicographic order.
pub fn k_subsets(within: Face, k: usize) -> Vec<Face> {
    let verts = within.to_vec();
    let n = verts.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Face::from_vertices(idx.iter().map(|&i| verts[i])));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    /// Accept labels in `[m]` that occur in no facet.
    pub allow_isolated: bool,
}

/// A finite simplicial complex with vertex labels drawn from `[m]`.
///
/// Complexes returned by [`SimplicialComplex::build`] use every label in `[m]`.
/// Derived complexes (full subcomplexes, links) keep the original labels and
/// record the labels they actually use in [`SimplicialComplex::vertex_set`].
#[derive(Clone)]
pub struct SimplicialComplex {
    m: usize,
    vertices: Face,
    facets: Vec<Face>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("facets", &self.facet_lists())?;
        st.end()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("facets", &self.facets)
            .finish()
    }
}

fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp_lex(*b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    pub fn build(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        Self::build_with(m, facets, BuildOptions::default())
    }

    pub fn build_with(m: usize, facets: &[Vec<usize>], opts: BuildOptions) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyLabels(m));
        }
        if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyInput);
        }
        let faces = facets
            .iter()
            .map(|f| Face::try_from_vertices(f, m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(m, faces, opts)
    }

    pub fn from_faces(m: usize, faces: Vec<Face>, opts: BuildOptions) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyLabels(m));
        }
        if faces.is_empty() {
            return Err(Error::EmptyInput);
        }
        let universe = Face::full(m);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(universe)) {
            let label = bad.difference(universe).min_vertex().unwrap_or(0);
            return Err(Error::LabelOutOfRange { label, m });
        }
        let complex = Self::from_faces_unchecked(m, faces);
        if !opts.allow_isolated {
            if let Some(v) = universe.difference(complex.vertices).min_vertex() {
                return Err(Error::MissingVertex(v));
            }
        }
        Ok(complex)
    }

    /// Builds from any generating family of faces; the vertex set is whatever
    /// the faces cover.
    pub(crate) fn from_faces_unchecked(m: usize, faces: Vec<Face>) -> Self {
        let facets = maximalize(faces);
        let vertices = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex {
            m,
            vertices,
            facets,
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(m: usize, vertices: Face) -> Self {
        Self::from_faces_unchecked(m, vec![vertices])
    }

    /// Size of the label universe `[m]`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_set(&self) -> Face {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    /// Dimension; a complex without vertices reports -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All `k`-dimensional faces in lexicographic order.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            if f.len() > k {
                set.extend(k_subsets(*f, k + 1));
            }
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort();
        out
    }

    /// Faces grouped by dimension `0..=dim`, each group lexicographic.
    pub fn all_faces(&self) -> Vec<Vec<Face>> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut levels: Vec<HashSet<Face>> = vec![HashSet::new(); top as usize + 1];
        for f in &self.facets {
            for s in f.subsets() {
                if !s.is_empty() {
                    levels[s.len() - 1].insert(s);
                }
            }
        }
        levels
            .into_iter()
            .map(|set| {
                let mut v: Vec<Face> = set.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    pub fn face_set(&self) -> HashSet<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            set.extend(f.subsets());
        }
        set
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.all_faces().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `K_I`, keeping the original labels.
    pub fn full_subcomplex(&self, subset: Face) -> Result<SimplicialComplex> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.check_subset(subset)?;
        Ok(self.restrict(subset))
    }

    pub(crate) fn restrict(&self, subset: Face) -> SimplicialComplex {
        let faces: Vec<Face> = self
            .facets
            .iter()
            .map(|f| f.intersection(subset))
            .filter(|f| !f.is_empty())
            .collect();
        if faces.is_empty() {
            return SimplicialComplex {
                m: self.m,
                vertices: Face::EMPTY,
                facets: Vec::new(),
            };
        }
        Self::from_faces_unchecked(self.m, faces)
    }

    fn check_subset(&self, subset: Face) -> Result<()> {
        let universe = Face::full(self.m);
        if let Some(label) = subset.difference(universe).min_vertex() {
            return Err(Error::LabelOutOfRange { label, m: self.m });
        }
        Ok(())
    }

    /// Relabels the used vertices to `1..=n` in increasing order. Returns the
    /// relabeled complex and the original label of each new vertex.
    pub fn relabeled(&self) -> (SimplicialComplex, Vec<usize>) {
        let labels = self.vertices.to_vec();
        let mut map = [0usize; MAX_VERTICES + 1];
        for (i, &v) in labels.iter().enumerate() {
            map[v] = i + 1;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| Face::from_vertices(f.vertices().map(|v| map[v])))
            .collect();
        (Self::from_faces_unchecked(labels.len(), facets), labels)
    }

    /// `lk_K(v) = {σ ∈ K : v ∉ σ, σ ∪ v ∈ K}`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        if v == 0 || v > self.m {
            return Err(Error::LabelOutOfRange {
                label: v,
                m: self.m,
            });
        }
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        if faces.is_empty() {
            return Ok(SimplicialComplex {
                m: self.m,
                vertices: Face::EMPTY,
                facets: Vec::new(),
            });
        }
        Ok(Self::from_faces_unchecked(self.m, faces))
    }

    pub fn vertex_deletion(&self, v: usize) -> Result<SimplicialComplex> {
        if v == 0 || v > self.m {
            return Err(Error::LabelOutOfRange {
                label: v,
                m: self.m,
            });
        }
        Ok(self.restrict(self.vertices.without(v)))
    }

    /// Minimal non-faces, lexicographically sorted.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let faces = self.face_set();
        let mut out: Vec<Face> = Face::full(self.m)
            .difference(self.vertices)
            .vertices()
            .map(Face::vertex)
            .collect();
        let verts = self.vertices;
        // every minimal non-face of size s+1 is some s-face plus a larger vertex
        for sigma in faces.iter().copied().filter(|f| !f.is_empty()) {
            let top = sigma.max_vertex().unwrap();
            for w in verts.vertices().filter(|&w| w > top) {
                let cand = sigma.with(w);
                if !faces.contains(&cand) && cand.boundary_faces().all(|b| faces.contains(&b)) {
                    out.push(cand);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Minimal non-faces of the given cardinality.
    pub fn minimal_non_faces_of_size(&self, size: usize) -> Vec<Face> {
        self.minimal_non_faces()
            .into_iter()
            .filter(|f| f.len() == size)
            .collect()
    }

    /// `K * L` on `m_K + m_L` labels; `L` is shifted by `m_K`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyLabels(m));
        }
        let shift = |f: Face| Face::from_bits(f.bits() << self.m);
        let mut faces = Vec::new();
        for a in self.facets_or_empty() {
            for b in other.facets_or_empty() {
                faces.push(a.union(shift(b)));
            }
        }
        Ok(Self::from_faces_unchecked(m, faces))
    }

    fn facets_or_empty(&self) -> Vec<Face> {
        if self.facets.is_empty() {
            vec![Face::EMPTY]
        } else {
            self.facets.clone()
        }
    }

    /// Least vertex contained in every facet, if any.
    pub fn is_cone(&self) -> Option<usize> {
        let common = self
            .facets
            .iter()
            .fold(self.vertices, |acc, f| acc.intersection(*f));
        common.min_vertex()
    }

    pub fn components(&self) -> Vec<Face> {
        let mut comps: Vec<Face> = Vec::new();
        for &f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let mut merged = f;
            comps.retain(|c| {
                if c.is_disjoint(f) {
                    true
                } else {
                    merged = merged.union(*c);
                    false
                }
            });
            comps.push(merged);
        }
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Is every `(k+1)`-subset of the vertex set a face?
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        let faces = self.face_set();
        k_subsets(self.vertices, k + 1)
            .into_iter()
            .all(|s| faces.contains(&s))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary_simplex, cycle};

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn build_boundary_of_tetrahedron() {
        let k = SimplicialComplex::build(
            4,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
        )
        .unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(k.facets().len(), 4);
        assert_eq!(k, boundary_simplex(3));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            SimplicialComplex::build(3, &[vec![1, 2], vec![1, 2], vec![1]]),
            Err(Error::MissingVertex(3))
        );
        assert_eq!(SimplicialComplex::build(3, &[]), Err(Error::EmptyInput));
        assert_eq!(
            SimplicialComplex::build(3, &[vec![1, 4]]),
            Err(Error::LabelOutOfRange { label: 4, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::build(64, &[vec![1]]),
            Err(Error::TooManyLabels(64))
        );
        let k = SimplicialComplex::build_with(
            3,
            &[vec![1, 2], vec![1, 2], vec![1]],
            BuildOptions {
                allow_isolated: true,
            },
        )
        .unwrap();
        assert_eq!(k.facets(), &[face(&[1, 2])]);
    }

    #[test]
    fn facets_are_maximal_and_sorted() {
        let k = SimplicialComplex::build(4, &[vec![3, 4], vec![2, 1], vec![1, 2, 3], vec![2, 3]])
            .unwrap();
        assert_eq!(k.facets(), &[face(&[1, 2, 3]), face(&[3, 4])]);
    }

    #[test]
    fn full_subcomplexes() {
        let s = boundary_simplex(3);
        assert_eq!(
            s.full_subcomplex(face(&[1, 2, 3])).unwrap(),
            SimplicialComplex::simplex(4, face(&[1, 2, 3]))
        );
        let c4 = cycle(4);
        let two = c4.full_subcomplex(face(&[1, 3])).unwrap();
        assert_eq!(two.facets(), &[face(&[1]), face(&[3])]);
        let path = c4.full_subcomplex(face(&[1, 2, 3])).unwrap();
        assert_eq!(path.facets(), &[face(&[1, 2]), face(&[2, 3])]);
        assert_eq!(c4.full_subcomplex(Face::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn links_and_deletion() {
        let s = boundary_simplex(3);
        assert_eq!(
            s.link(1).unwrap().facets(),
            &[face(&[2, 3]), face(&[2, 4]), face(&[3, 4])]
        );
        assert_eq!(
            cycle(4).link(1).unwrap().facets(),
            &[face(&[2]), face(&[4])]
        );
        let edge = SimplicialComplex::build(2, &[vec![1, 2]]).unwrap();
        assert_eq!(edge.link(1).unwrap().facets(), &[face(&[2])]);
        assert!(s.link(5).is_err());
        assert_eq!(
            cycle(4).vertex_deletion(1).unwrap().facets(),
            &[face(&[2, 3]), face(&[3, 4])]
        );
    }

    #[test]
    fn minimal_non_faces_examples() {
        assert_eq!(
            boundary_simplex(3).minimal_non_faces(),
            vec![face(&[1, 2, 3, 4])]
        );
        assert_eq!(
            cycle(4).minimal_non_faces(),
            vec![face(&[1, 3]), face(&[2, 4])]
        );
        assert!(SimplicialComplex::simplex(3, Face::full(3))
            .minimal_non_faces()
            .is_empty());
    }

    #[test]
    fn joins() {
        let pt = SimplicialComplex::build(1, &[vec![1]]).unwrap();
        assert_eq!(pt.join(&pt).unwrap().facets(), &[face(&[1, 2])]);
        let s0 = SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap();
        let j = s0.join(&s0).unwrap();
        assert_eq!(j.f_vector(), vec![4, 4]);
        assert_eq!(j.minimal_non_faces(), vec![face(&[1, 2]), face(&[3, 4])]);
        let cone = boundary_simplex(2).join(&pt).unwrap();
        assert_eq!(cone.is_cone(), Some(4));
    }

    #[test]
    fn f_vectors_and_cones() {
        assert_eq!(boundary_simplex(3).f_vector(), vec![4, 6, 4]);
        assert_eq!(boundary_simplex(3).euler_characteristic(), 2);
        assert_eq!(cycle(4).f_vector(), vec![4, 4]);
        assert_eq!(cycle(4).euler_characteristic(), 0);
        assert_eq!(
            SimplicialComplex::simplex(3, Face::full(3)).is_cone(),
            Some(1)
        );
        assert_eq!(cycle(4).is_cone(), None);
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![face(&[1, 3]), face(&[1, 2, 3]), face(&[2]), face(&[1])];
        v.sort();
        assert_eq!(
            v,
            vec![face(&[1]), face(&[1, 2, 3]), face(&[1, 3]), face(&[2])]
        );
        assert_eq!(
            k_subsets(face(&[1, 2, 4]), 2),
            vec![face(&[1, 2]), face(&[1, 4]), face(&[2, 4])]
        );
        assert_eq!(Face::full(4).subsets().count(), 16);
        assert_eq!(face(&[2, 5, 7]).position(5), 1);
    }

    #[test]
    fn neighborliness() {
        let s = boundary_simplex(3);
        assert!(s.is_k_neighborly(1));
        assert!(s.is_k_neighborly(2));
        assert!(!s.is_k_neighborly(3));
        assert!(!cycle(4).is_k_neighborly(1));
    }
}
