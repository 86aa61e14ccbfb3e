//! Tightness: injectivity of `H_*(K_I) → H_*(K)` for every full subcomplex,
//! and the binomial identity characterizing tight-neighborly manifolds.

use serde::Serialize;

use crate::complex::{k_subsets, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::hochster::{graded_subsets, DEFAULT_MAX_VERTICES};
use crate::homology::{betti, reduced_betti_of_subset, InclusionTester};
use crate::manifold::ManifoldReport;
use crate::parallel;
use crate::with_field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TightOptions {
    pub prune: bool,
    pub max_vertices: usize,
}

impl Default for TightOptions {
    fn default() -> Self {
        TightOptions {
            prune: true,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TightStats {
    pub subsets_total: usize,
    pub checked: usize,
    pub pruned_cone: usize,
    pub pruned_acyclic: usize,
    /// Decided by the missing edge before any subset scan.
    pub neighborly_shortcut: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub field: FieldSpec,
    pub tight: bool,
    /// First failing subset in graded order, with the lowest failing degree.
    pub witness: Option<(Face, usize)>,
    pub stats: TightStats,
}

pub fn is_tight(
    complex: &SimplicialComplex,
    field: FieldSpec,
    opts: TightOptions,
) -> Result<TightnessReport> {
    with_field!(field, |f| is_tight_with(complex, &f, opts))
}

pub fn is_tight_with<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
    opts: TightOptions,
) -> Result<TightnessReport> {
    let m = complex.m();
    if m > opts.max_vertices {
        return Err(Error::TooManyVertices {
            m,
            cap: opts.max_vertices,
        });
    }
    if !complex.is_connected() || complex.vertex_set() != Face::full(m) {
        return Err(Error::NotConnected);
    }
    let subsets = graded_subsets(m);
    let mut stats = TightStats {
        subsets_total: subsets.len(),
        ..TightStats::default()
    };
    let spec = field.spec();

    if opts.prune {
        if let Some(pair) = first_non_edge(complex) {
            stats.neighborly_shortcut = true;
            return Ok(TightnessReport {
                field: spec,
                tight: false,
                witness: Some((pair, 0)),
                stats,
            });
        }
    }

    let tester = InclusionTester::new(complex, field);
    // 0: checked, 1: cone, 2: acyclic
    let outcome = parallel::map(&subsets, |&i| {
        if opts.prune {
            if complex.restrict(i).is_cone().is_some() {
                return (1, None);
            }
            if reduced_betti_of_subset(tester.all_faces(), i, field)
                .iter()
                .all(|b| *b == 0)
            {
                return (2, None);
            }
        }
        (0, tester.induced(i).first_non_injective_degree())
    });
    let mut witness = None;
    for (i, (kind, fail)) in subsets.iter().zip(outcome) {
        match kind {
            1 => stats.pruned_cone += 1,
            2 => stats.pruned_acyclic += 1,
            _ => stats.checked += 1,
        }
        if witness.is_none() {
            witness = fail.map(|k| (*i, k));
        }
    }
    Ok(TightnessReport {
        field: spec,
        tight: witness.is_none(),
        witness,
        stats,
    })
}

/// Lexicographically first pair of vertices that is not an edge.
pub fn first_non_edge(complex: &SimplicialComplex) -> Option<Face> {
    let faces = complex.face_set();
    k_subsets(complex.vertex_set(), 2)
        .into_iter()
        .find(|p| !faces.contains(p))
}

pub fn is_k_neighborly(complex: &SimplicialComplex, k: usize) -> bool {
    complex.is_k_neighborly(k)
}

fn binom2(n: usize) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// Arithmetic of `C(m-d-1, 2) = C(d+2, 2) β_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightNeighborlyTrace {
    pub field: FieldSpec,
    pub m: usize,
    pub d: usize,
    pub beta1: usize,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

pub fn tight_neighborly_identity(
    field: FieldSpec,
    m: usize,
    d: usize,
    beta1: usize,
) -> TightNeighborlyTrace {
    let lhs = binom2(m.saturating_sub(d + 1));
    let rhs = binom2(d + 2) * beta1 as u128;
    TightNeighborlyTrace {
        field,
        m,
        d,
        beta1,
        lhs,
        rhs,
        holds: lhs == rhs,
    }
}

pub fn is_tight_neighborly(
    manifold: &SimplicialComplex,
    report: &ManifoldReport,
    field: FieldSpec,
) -> Result<TightNeighborlyTrace> {
    if !report.passed() {
        return Err(Error::PrerequisiteFailed(
            "manifold validation failed".into(),
        ));
    }
    let d = manifold.dim().max(0) as usize;
    if d < 3 {
        return Err(Error::DimensionTooLow(d));
    }
    if !manifold.is_connected() {
        return Err(Error::NotConnected);
    }
    let beta1 = betti(manifold, field, false).get(1).copied().unwrap_or(0);
    Ok(tight_neighborly_identity(field, manifold.m(), d, beta1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary_simplex, cycle, rp2_6, torus_7};
    use crate::manifold::validate_manifold;

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn small_tightness() {
        for prune in [true, false] {
            let opts = TightOptions {
                prune,
                ..TightOptions::default()
            };
            let r = is_tight(&cycle(4), FieldSpec::Rational, opts).unwrap();
            assert!(!r.tight);
            assert_eq!(r.witness, Some((face(&[1, 3]), 0)));
            assert!(
                is_tight(&boundary_simplex(3), FieldSpec::Rational, opts)
                    .unwrap()
                    .tight
            );
        }
        let two = SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(
            is_tight(&two, FieldSpec::Rational, TightOptions::default()).unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn rp2_depends_on_field() {
        let k = rp2_6();
        assert!(
            is_tight(&k, FieldSpec::Prime(2), TightOptions::default())
                .unwrap()
                .tight
        );
        let r = is_tight(&k, FieldSpec::Rational, TightOptions::default()).unwrap();
        assert!(!r.tight);
        assert_eq!(r.witness.unwrap().1, 1);
    }

    #[test]
    fn torus_is_tight() {
        for f in [
            FieldSpec::Rational,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            assert!(
                is_tight(&torus_7(), f, TightOptions::default())
                    .unwrap()
                    .tight
            );
        }
    }

    #[test]
    fn neighborliness() {
        assert!(is_k_neighborly(&boundary_simplex(3), 1));
        assert!(is_k_neighborly(&boundary_simplex(3), 2));
        assert!(!is_k_neighborly(&boundary_simplex(3), 3));
        assert!(!is_k_neighborly(&cycle(4), 1));
        assert!(is_k_neighborly(&torus_7(), 1));
    }

    #[test]
    fn binomial_identity() {
        let q = FieldSpec::Rational;
        let t = tight_neighborly_identity(q, 5, 3, 0);
        assert!(t.holds && t.lhs == 0);
        let t = tight_neighborly_identity(q, 9, 3, 1);
        assert!(t.holds && t.lhs == 10 && t.rhs == 10);
        let t = tight_neighborly_identity(q, 8, 3, 1);
        assert!(!t.holds && t.lhs == 6);
        let m = boundary_simplex(4);
        let report = validate_manifold(&m, &[q]);
        assert!(is_tight_neighborly(&m, &report, q).unwrap().holds);
        let t = torus_7();
        let report = validate_manifold(&t, &[q]);
        assert_eq!(
            is_tight_neighborly(&t, &report, q).unwrap_err(),
            Error::DimensionTooLow(2)
        );
    }
}
