//! Pseudomanifold and manifold validation, and recognition of stacked
//! spheres by reverse bistellar 0-moves.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::betti;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkVerdict {
    SphereCertified,
    HomologySphereOnly,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldReport {
    pub dim: isize,
    pub is_pure: bool,
    /// First facet of smaller dimension.
    pub impure_witness: Option<Face>,
    pub is_closed_pseudomanifold: bool,
    /// A ridge with the number of facets containing it (not 2).
    pub ridge_witness: Option<(Face, usize)>,
    pub is_strongly_connected: bool,
    /// `(vertex, verdict)` for every vertex.
    pub links: Vec<(usize, LinkVerdict)>,
    /// `(field, orientable)`; top Betti number equal to one.
    pub orientable: Vec<(FieldSpec, bool)>,
}

impl ManifoldReport {
    /// Closed connected manifold triangulation, at whatever certification
    /// level the links allow.
    pub fn passed(&self) -> bool {
        self.is_pure
            && self.is_closed_pseudomanifold
            && self.is_strongly_connected
            && self.links.iter().all(|(_, v)| *v != LinkVerdict::Failed)
    }

    /// True when every link was certified combinatorially as a sphere.
    pub fn sphere_certified(&self) -> bool {
        self.passed()
            && self
                .links
                .iter()
                .all(|(_, v)| *v == LinkVerdict::SphereCertified)
    }

    pub fn orientable_over(&self, field: FieldSpec) -> Option<bool> {
        self.orientable
            .iter()
            .find(|(f, _)| *f == field)
            .map(|(_, o)| *o)
    }

    pub fn failed_links(&self) -> Vec<usize> {
        self.links
            .iter()
            .filter(|(_, v)| *v == LinkVerdict::Failed)
            .map(|(v, _)| *v)
            .collect()
    }
}

/// Ridges (codimension-one faces) with the facets containing them.
fn ridge_counts(complex: &SimplicialComplex) -> HashMap<Face, usize> {
    let mut counts = HashMap::new();
    for f in complex.facets() {
        for r in f.boundary_faces() {
            *counts.entry(r).or_insert(0) += 1;
        }
    }
    counts
}

/// Pure, every ridge in exactly two facets. Returns the lex-first bad ridge.
fn pseudomanifold_witness(complex: &SimplicialComplex) -> Option<(Face, usize)> {
    let counts = ridge_counts(complex);
    let mut bad: Vec<(Face, usize)> = counts.into_iter().filter(|(_, c)| *c != 2).collect();
    bad.sort();
    bad.first().copied()
}

fn is_closed_pseudomanifold(complex: &SimplicialComplex) -> bool {
    complex.dim() >= 0 && complex.is_pure() && pseudomanifold_witness(complex).is_none()
}

/// Facets connected through shared ridges.
pub fn is_strongly_connected(complex: &SimplicialComplex) -> bool {
    let facets = complex.facets();
    if facets.is_empty() {
        return false;
    }
    let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            by_ridge.entry(r).or_default().push(i);
        }
    }
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for r in facets[i].boundary_faces() {
            for &j in &by_ridge[&r] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn is_single_cycle(c: &SimplicialComplex) -> bool {
    c.dim() == 1 && c.is_connected() && is_closed_pseudomanifold(c)
}

fn is_two_sphere(c: &SimplicialComplex) -> bool {
    c.dim() == 2
        && c.is_connected()
        && is_closed_pseudomanifold(c)
        && c.vertex_set()
            .vertices()
            .all(|v| is_single_cycle(&c.link(v).unwrap()))
        && c.euler_characteristic() == 2
}

fn is_homology_sphere(c: &SimplicialComplex, fields: &[FieldSpec]) -> bool {
    let d = c.dim();
    if d < 0 || !is_closed_pseudomanifold(c) {
        return false;
    }
    let d = d as usize;
    fields.iter().all(|&f| {
        let b = betti(c, f, true);
        b.iter().enumerate().all(|(i, &r)| r == usize::from(i == d))
    })
}

/// Classifies a vertex link of a `d`-dimensional complex.
fn link_verdict(link: &SimplicialComplex, d: usize, fields: &[FieldSpec]) -> LinkVerdict {
    if link.dim() != d as isize - 1 {
        return LinkVerdict::Failed;
    }
    let certified = match d {
        0 => return LinkVerdict::Failed,
        1 => link.num_vertices() == 2 && link.facets().len() == 2,
        2 => is_single_cycle(link),
        3 => is_two_sphere(link),
        _ => {
            return if is_homology_sphere(link, fields) {
                LinkVerdict::HomologySphereOnly
            } else {
                LinkVerdict::Failed
            }
        }
    };
    if certified {
        LinkVerdict::SphereCertified
    } else {
        LinkVerdict::Failed
    }
}

pub fn validate_manifold(complex: &SimplicialComplex, fields: &[FieldSpec]) -> ManifoldReport {
    let dim = complex.dim();
    let impure_witness = complex.facets().iter().copied().find(|f| f.dim() != dim);
    let ridge_witness = if dim >= 1 {
        pseudomanifold_witness(complex)
    } else {
        None
    };
    let is_pure = impure_witness.is_none() && dim >= 0;
    let is_closed = is_pure && dim >= 1 && ridge_witness.is_none();
    let d = dim.max(0) as usize;
    let links = complex
        .vertex_set()
        .vertices()
        .map(|v| (v, link_verdict(&complex.link(v).unwrap(), d, fields)))
        .collect();
    let orientable = fields
        .iter()
        .map(|&f| {
            (
                f,
                is_closed && betti(complex, f, false).get(d).copied() == Some(1),
            )
        })
        .collect();
    ManifoldReport {
        dim,
        is_pure,
        impure_witness,
        is_closed_pseudomanifold: is_closed,
        ridge_witness,
        is_strongly_connected: is_strongly_connected(complex),
        links,
        orientable,
    }
}

/// `S = ∂Δ(V_1) # ... # ∂Δ(V_k)`; blocks in removal order, each of size
/// `dim S + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StackedDecomposition {
    pub blocks: Vec<Face>,
}

impl StackedDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Rebuilds the sphere: start from the last block and undo each removal.
    /// The removed vertex of block `i` is the one not yet present.
    pub fn replay(&self, m: usize) -> Result<SimplicialComplex> {
        let last = *self.blocks.last().ok_or(Error::EmptyInput)?;
        let mut facets: BTreeSet<Face> = last.boundary_faces().collect();
        let mut present = last;
        for &block in self.blocks.iter().rev().skip(1) {
            let fresh = block.difference(present);
            if fresh.len() != 1 {
                return Err(Error::NotAFacet(block));
            }
            let w = block.difference(fresh);
            if !facets.remove(&w) {
                return Err(Error::NotAFacet(w));
            }
            let v = fresh.min_vertex().unwrap();
            facets.extend(w.boundary_faces().map(|r| r.with(v)));
            present = present.union(block);
        }
        Ok(SimplicialComplex::from_faces_unchecked(
            m,
            facets.into_iter().collect(),
        ))
    }
}

fn boundary_of_simplex_on(c: &BTreeSet<Face>, verts: Face) -> bool {
    c.len() == verts.len()
        && verts.len() >= 2
        && c.iter()
            .all(|f| f.len() + 1 == verts.len() && f.is_subset(verts))
}

fn vertex_union(c: &BTreeSet<Face>) -> Face {
    c.iter().fold(Face::EMPTY, |a, f| a.union(*f))
}

/// Vertices whose link is `∂Δ(W)` with `W` not a face, with `W`.
fn removable(c: &BTreeSet<Face>, size: usize) -> Vec<(usize, Face)> {
    let verts = vertex_union(c);
    let mut out = Vec::new();
    for v in verts.vertices() {
        let star: Vec<Face> = c.iter().copied().filter(|f| f.contains(v)).collect();
        if star.len() != size - 1 {
            continue;
        }
        let w = star.iter().fold(Face::EMPTY, |a, f| a.union(*f)).without(v);
        if w.len() != size - 1 {
            continue;
        }
        if c.iter().any(|f| w.is_subset(*f)) {
            continue;
        }
        out.push((v, w));
    }
    out
}

fn remove_vertex(c: &BTreeSet<Face>, v: usize, w: Face) -> BTreeSet<Face> {
    let mut next: BTreeSet<Face> = c.iter().copied().filter(|f| !f.contains(v)).collect();
    next.insert(w);
    next
}

fn greedy(mut c: BTreeSet<Face>, size: usize, mut blocks: Vec<Face>) -> Option<Vec<Face>> {
    loop {
        let verts = vertex_union(&c);
        if boundary_of_simplex_on(&c, verts) {
            blocks.push(verts);
            return Some(blocks);
        }
        let (v, w) = *removable(&c, size).first()?;
        blocks.push(w.with(v));
        c = remove_vertex(&c, v, w);
    }
}

/// Recognizes stacked spheres greedily, with one round of backtracking over
/// the first frontier. Every polygon is stacked; in dimension 0 only a pair
/// of points is.
pub fn is_stacked_sphere(sphere: &SimplicialComplex) -> Result<Option<StackedDecomposition>> {
    if !is_closed_pseudomanifold(sphere) {
        let witness = pseudomanifold_witness(sphere)
            .map(|(r, c)| format!("ridge {r} lies in {c} facets"))
            .unwrap_or_else(|| "not pure".into());
        return Err(Error::NotPseudomanifold(witness));
    }
    let d = sphere.dim() as usize;
    let c: BTreeSet<Face> = sphere.facets().iter().copied().collect();
    let verts = sphere.vertex_set();
    if boundary_of_simplex_on(&c, verts) {
        return Ok(Some(StackedDecomposition {
            blocks: vec![verts],
        }));
    }
    if d == 0 {
        return Ok(None);
    }
    let b = betti(sphere, FieldSpec::Prime(2), true);
    if b.iter().enumerate().any(|(i, &r)| r != usize::from(i == d)) {
        return Ok(None);
    }
    let size = d + 2;
    if let Some(blocks) = greedy(c.clone(), size, Vec::new()) {
        return Ok(Some(StackedDecomposition { blocks }));
    }
    for (v, w) in removable(&c, size).into_iter().skip(1) {
        if let Some(blocks) = greedy(remove_vertex(&c, v, w), size, vec![w.with(v)]) {
            return Ok(Some(StackedDecomposition { blocks }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "blocks")]
pub enum LocalStackedness {
    Stacked(Vec<Face>),
    NotStacked,
    /// Links of a graph are 0-spheres; nothing to decide.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalStackedReport {
    pub links: Vec<(usize, LocalStackedness)>,
    pub neighborly: bool,
}

impl LocalStackedReport {
    pub fn applicable(&self) -> bool {
        self.links
            .iter()
            .all(|(_, l)| *l != LocalStackedness::NotApplicable)
    }

    pub fn all_stacked(&self) -> bool {
        self.applicable()
            && self
                .links
                .iter()
                .all(|(_, l)| matches!(l, LocalStackedness::Stacked(_)))
    }

    /// Neighborly and every vertex link stacked.
    pub fn stacked_manifold_evidence(&self) -> bool {
        self.neighborly && self.all_stacked()
    }
}

pub fn is_locally_stacked(
    manifold: &SimplicialComplex,
    report: &ManifoldReport,
) -> Result<LocalStackedReport> {
    if !report.passed() {
        return Err(Error::PrerequisiteFailed(
            "manifold validation failed".into(),
        ));
    }
    let d = manifold.dim() as usize;
    let links = manifold
        .vertex_set()
        .vertices()
        .map(|v| {
            if d < 2 {
                return Ok((v, LocalStackedness::NotApplicable));
            }
            let decomposition = is_stacked_sphere(&manifold.link(v)?)?;
            Ok((
                v,
                decomposition.map_or(LocalStackedness::NotStacked, |s| {
                    LocalStackedness::Stacked(s.blocks)
                }),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalStackedReport {
        links,
        neighborly: manifold.is_k_neighborly(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary_simplex, cycle, rp2_6, stacked_sphere, torus_7};

    const FIELDS: [FieldSpec; 2] = [FieldSpec::Rational, FieldSpec::Prime(2)];

    #[test]
    fn boundary_of_four_simplex_validates() {
        let r = validate_manifold(&boundary_simplex(4), &FIELDS);
        assert!(r.passed() && r.sphere_certified());
        assert_eq!(r.orientable_over(FieldSpec::Rational), Some(true));
        assert_eq!(r.orientable_over(FieldSpec::Prime(2)), Some(true));
    }

    #[test]
    fn rp2_orientability() {
        let r = validate_manifold(&rp2_6(), &FIELDS);
        assert!(r.passed());
        assert_eq!(r.orientable_over(FieldSpec::Rational), Some(false));
        assert_eq!(r.orientable_over(FieldSpec::Prime(2)), Some(true));
    }

    #[test]
    fn dangling_edge_is_impure() {
        let c = SimplicialComplex::build(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4], vec![4, 5]],
        )
        .unwrap();
        let r = validate_manifold(&c, &FIELDS);
        assert!(!r.passed());
        assert!(!r.is_closed_pseudomanifold);
        let c = SimplicialComplex::build(4, &[vec![1, 2, 3], vec![3, 4]]).unwrap();
        let r = validate_manifold(&c, &FIELDS);
        assert!(!r.is_pure);
        assert_eq!(r.impure_witness, Some(Face::from_vertices([3, 4])));
    }

    #[test]
    fn stacked_recognition() {
        let s = is_stacked_sphere(&boundary_simplex(4)).unwrap().unwrap();
        assert_eq!(s.blocks, vec![Face::full(5)]);
        for d in 2..=4 {
            for k in 1..=5 {
                let sphere = stacked_sphere(d, k);
                let s = is_stacked_sphere(&sphere).unwrap().expect("stacked");
                assert_eq!(s.len(), k, "d={d} k={k}");
                assert!(s.blocks.iter().all(|b| b.len() == d + 2));
                assert_eq!(s.replay(sphere.m()).unwrap(), sphere);
            }
        }
        assert_eq!(is_stacked_sphere(&torus_7()).unwrap(), None);
        let pentagon = is_stacked_sphere(&cycle(5)).unwrap().unwrap();
        assert_eq!(pentagon.len(), 3);
        assert_eq!(pentagon.replay(5).unwrap(), cycle(5));
        assert!(is_stacked_sphere(&cycle(3)).unwrap().is_some());
        assert!(matches!(
            is_stacked_sphere(&SimplicialComplex::build(3, &[vec![1, 2], vec![2, 3]]).unwrap()),
            Err(Error::NotPseudomanifold(_))
        ));
    }

    #[test]
    fn octahedron_is_not_stacked() {
        let oct = crate::generators::join(
            &cycle(4),
            &SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap(),
        )
        .unwrap();
        assert_eq!(is_stacked_sphere(&oct).unwrap(), None);
    }

    #[test]
    fn local_stackedness() {
        let m = boundary_simplex(4);
        let r = is_locally_stacked(&m, &validate_manifold(&m, &FIELDS)).unwrap();
        assert!(r.stacked_manifold_evidence());
        let m = stacked_sphere(3, 3);
        let r = is_locally_stacked(&m, &validate_manifold(&m, &FIELDS)).unwrap();
        assert!(r.all_stacked());
        let m = torus_7();
        let r = is_locally_stacked(&m, &validate_manifold(&m, &FIELDS)).unwrap();
        assert!(r.stacked_manifold_evidence());
        let m = cycle(4);
        let r = is_locally_stacked(&m, &validate_manifold(&m, &FIELDS)).unwrap();
        assert!(!r.applicable());
    }
}
