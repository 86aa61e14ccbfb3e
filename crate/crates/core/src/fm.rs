//! `F(M)`: a manifold with every minimal non-face of cardinality `d+1`
//! filled in, the family `S(M)` of `(d+2)`-sets, and checks of the local and
//! homological structure of `F(M)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{k_subsets, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::betti;
use crate::manifold::{is_stacked_sphere, ManifoldReport};
use crate::parallel;

fn check_prerequisites(manifold: &SimplicialComplex, report: &ManifoldReport) -> Result<usize> {
    if !report.passed() {
        return Err(Error::PrerequisiteFailed(
            "manifold validation failed".into(),
        ));
    }
    let d = manifold.dim().max(0) as usize;
    if d < 3 {
        return Err(Error::PrerequisiteFailed(format!(
            "dimension {d} is below 3"
        )));
    }
    Ok(d)
}

pub fn build_fm(
    manifold: &SimplicialComplex,
    report: &ManifoldReport,
) -> Result<SimplicialComplex> {
    let d = check_prerequisites(manifold, report)?;
    Ok(fill(manifold, d))
}

fn fill(manifold: &SimplicialComplex, d: usize) -> SimplicialComplex {
    let mut faces = manifold.facets().to_vec();
    faces.extend(manifold.minimal_non_faces_of_size(d + 1));
    SimplicialComplex::from_faces_unchecked(manifold.m(), faces)
}

/// Blocks `V(v,1), ..., V(v,n_v)` of the stacked link of `v`.
pub fn link_decomposition(manifold: &SimplicialComplex, v: usize) -> Result<Vec<Face>> {
    let link = manifold.link(v)?;
    match is_stacked_sphere(&link) {
        Ok(Some(s)) if link.dim() >= 1 => Ok(s.blocks),
        _ => Err(Error::LinkNotStacked(v)),
    }
}

/// `{V(v,k) ⊔ v}`, sorted.
pub fn sm_from_links(manifold: &SimplicialComplex) -> Result<Vec<Face>> {
    let verts: Vec<usize> = manifold.vertex_set().vertices().collect();
    let per_vertex = parallel::map(&verts, |&v| {
        link_decomposition(manifold, v)
            .map(|blocks| blocks.into_iter().map(|b| b.with(v)).collect::<Vec<_>>())
    });
    let mut out = BTreeSet::new();
    for r in per_vertex {
        out.extend(r?);
    }
    Ok(out.into_iter().collect())
}

/// `(d+2)`-sets `I` with `lk_{M_I}(v)` `(d-2)`-neighborly on `I - v` for some
/// `v ∈ I`.
pub fn sm_direct(manifold: &SimplicialComplex) -> Vec<Face> {
    let d = manifold.dim().max(0) as usize;
    let faces = manifold.face_set();
    let candidates = k_subsets(manifold.vertex_set(), d + 2);
    let keep = parallel::map(&candidates, |&i| {
        i.vertices().any(|v| {
            let rest = i.without(v);
            k_subsets(rest, d - 1)
                .into_iter()
                .all(|s| faces.contains(&s.with(v)))
        })
    });
    candidates
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(i, _)| i)
        .collect()
}

/// Both characterizations of `S(M)`; they must agree.
pub fn compute_sm(manifold: &SimplicialComplex, report: &ManifoldReport) -> Result<Vec<Face>> {
    check_prerequisites(manifold, report)?;
    let a = sm_from_links(manifold)?;
    let b = sm_direct(manifold);
    if a != b {
        let sa: BTreeSet<Face> = a.into_iter().collect();
        let sb: BTreeSet<Face> = b.into_iter().collect();
        let witness = *sa.symmetric_difference(&sb).next().unwrap();
        return Err(Error::CharacterizationMismatch(witness));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FmCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl FmCheck {
    fn new(name: &'static str, witness: Option<String>) -> Self {
        FmCheck {
            name,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FmResult {
    pub d: usize,
    pub fm: SimplicialComplex,
    pub added_facets: Vec<Face>,
    pub sm: Vec<Face>,
    pub link_decompositions: Vec<(usize, Vec<Face>)>,
    /// `(field, reduced Betti of F(M), reduced Betti of M)`.
    pub betti: Vec<(FieldSpec, Vec<usize>, Vec<usize>)>,
    pub checks: Vec<FmCheck>,
}

impl FmResult {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&FmCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn union_of_boundaries(m: usize, blocks: impl IntoIterator<Item = Face>) -> SimplicialComplex {
    let faces: Vec<Face> = blocks
        .into_iter()
        .flat_map(|b| b.boundary_faces().collect::<Vec<_>>())
        .collect();
    SimplicialComplex::from_faces_unchecked(m, faces)
}

/// Builds `F(M)` and `S(M)` and runs the structural and homological checks.
/// Violated hypotheses show up as failed checks, not errors.
pub fn verify_fm(
    manifold: &SimplicialComplex,
    report: &ManifoldReport,
    fields: &[FieldSpec],
) -> Result<FmResult> {
    let d = check_prerequisites(manifold, report)?;
    let m = manifold.m();
    let fm = fill(manifold, d);
    let added_facets: Vec<Face> = fm
        .facets()
        .iter()
        .copied()
        .filter(|f| !manifold.contains(*f))
        .collect();
    let mut checks = Vec::new();

    let verts: Vec<usize> = manifold.vertex_set().vertices().collect();
    let decomps = parallel::map(&verts, |&v| (v, link_decomposition(manifold, v)));
    let not_stacked = decomps
        .iter()
        .find(|(_, r)| r.is_err())
        .map(|(v, _)| format!("vertex {v}"));
    checks.push(FmCheck::new("links-stacked", not_stacked));
    let link_decompositions: Vec<(usize, Vec<Face>)> = decomps
        .into_iter()
        .filter_map(|(v, r)| r.ok().map(|b| (v, b)))
        .collect();

    let from_links: BTreeSet<Face> = link_decompositions
        .iter()
        .flat_map(|(v, bs)| bs.iter().map(move |b| b.with(*v)))
        .collect();
    let direct: BTreeSet<Face> = sm_direct(manifold).into_iter().collect();
    let mismatch = from_links
        .symmetric_difference(&direct)
        .next()
        .map(|f| f.to_string());
    checks.push(FmCheck::new("sm-characterizations-agree", mismatch));
    let sm: Vec<Face> = from_links.into_iter().collect();

    let fm_faces = fm.face_set();
    let witness = sm
        .iter()
        .find(|i| fm_faces.contains(i) || !i.boundary_faces().all(|b| fm_faces.contains(&b)));
    checks.push(FmCheck::new(
        "minimal-non-faces",
        witness.map(|f| f.to_string()),
    ));

    let witness = link_decompositions.iter().find_map(|(v, blocks)| {
        let expected = union_of_boundaries(m, blocks.iter().copied());
        (fm.link(*v).ok()? != expected).then(|| format!("vertex {v}"))
    });
    checks.push(FmCheck::new("link-circ-union", witness));

    let covered = union_of_boundaries(m, sm.iter().copied());
    let witness = (covered != fm).then(|| {
        let a: BTreeSet<Face> = covered.facets().iter().copied().collect();
        let b: BTreeSet<Face> = fm.facets().iter().copied().collect();
        a.symmetric_difference(&b)
            .next()
            .map_or_else(String::new, |f| f.to_string())
    });
    checks.push(FmCheck::new("union-of-boundaries", witness));

    let mut betti_rows = Vec::new();
    let mut witness = None;
    for &field in fields {
        let bf = betti(&fm, field, true);
        let bm = betti(manifold, field, true);
        let at = |b: &[usize], i: usize| b.get(i).copied().unwrap_or(0);
        let bad = (0..bf.len().max(d + 1)).find(|&i| {
            let expected = if i == d {
                sm.len()
            } else if i == 1 {
                at(&bm, 1)
            } else {
                0
            };
            at(&bf, i) != expected
        });
        if witness.is_none() {
            witness = bad.map(|i| format!("{field} degree {i}"));
        }
        betti_rows.push((field, bf, bm));
    }
    checks.push(FmCheck::new("homology", witness));
    let disagree = betti_rows
        .windows(2)
        .find(|w| w[0].1 != w[1].1)
        .map(|w| format!("{} vs {}", w[0].0, w[1].0));
    checks.push(FmCheck::new("cross-field-agreement", disagree));

    let witness = sm
        .iter()
        .find(|i| !manifold.restrict(**i).is_k_neighborly(d - 1));
    checks.push(FmCheck::new(
        "blocks-neighborly",
        witness.map(|f| f.to_string()),
    ));

    Ok(FmResult {
        d,
        fm,
        added_facets,
        sm,
        link_decompositions,
        betti: betti_rows,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::boundary_simplex;
    use crate::manifold::validate_manifold;

    const FIELDS: [FieldSpec; 2] = [FieldSpec::Rational, FieldSpec::Prime(2)];

    #[test]
    fn boundary_of_four_simplex() {
        let m = boundary_simplex(4);
        let report = validate_manifold(&m, &FIELDS);
        assert_eq!(build_fm(&m, &report).unwrap(), m);
        assert_eq!(
            link_decomposition(&m, 1).unwrap(),
            vec![Face::from_vertices([2, 3, 4, 5])]
        );
        assert_eq!(compute_sm(&m, &report).unwrap(), vec![Face::full(5)]);
        let r = verify_fm(&m, &report, &FIELDS).unwrap();
        assert!(r.all_passed(), "{:?}", r.checks);
        assert_eq!(r.betti[0].1, vec![0, 0, 0, 1]);
    }

    #[test]
    fn low_dimension_is_rejected() {
        let m = boundary_simplex(3);
        let report = validate_manifold(&m, &FIELDS);
        assert!(matches!(
            build_fm(&m, &report),
            Err(Error::PrerequisiteFailed(_))
        ));
    }
}
