use std::path::PathBuf;

use golodtight_core::fm::{compute_sm, verify_fm};
use golodtight_core::generators::{cycle, join, rp2_6, sphere_bundle, torus_7};
use golodtight_core::hochster::is_weakly_golod;
use golodtight_core::homology::{betti, is_injective_inclusion};
use golodtight_core::io::{parse_text, to_text};
use golodtight_core::manifold::{is_locally_stacked, validate_manifold};
use golodtight_core::report::{analyze, AnalyzeOptions};
use golodtight_core::tightness::{is_tight, TightOptions};
use golodtight_core::{BuildOptions, Error, Face, FieldSpec, SimplicialComplex};

const Q: FieldSpec = FieldSpec::Rational;
const F2: FieldSpec = FieldSpec::Prime(2);

fn load(name: &str) -> SimplicialComplex {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", "zoo", name]
        .iter()
        .collect();
    parse_text(
        &std::fs::read_to_string(p).unwrap(),
        BuildOptions::default(),
    )
    .unwrap()
}

fn face(v: &[usize]) -> Face {
    Face::from_vertices(v.iter().copied())
}

#[test]
fn files_match_generators() {
    assert_eq!(load("rp2_6.cplx"), rp2_6());
    assert_eq!(load("torus7.cplx"), torus_7());
    let w = load("walkup9.cplx");
    assert_eq!(w, sphere_bundle(3));
    assert_eq!(w.f_vector(), vec![9, 36, 54, 27]);
    assert_eq!(
        to_text(&w),
        std::fs::read_to_string(
            [
                env!("CARGO_MANIFEST_DIR"),
                "..",
                "..",
                "data",
                "zoo",
                "walkup9.cplx"
            ]
            .iter()
            .collect::<PathBuf>()
        )
        .unwrap()
    );
}

#[test]
fn hollow_triangles() {
    // {1,2,3} spans three edges of T7 but no triangle.
    let t7 = torus_7();
    let i = face(&[1, 2, 3]);
    assert!(!t7.contains(i));
    assert_eq!(betti(&t7.full_subcomplex(i).unwrap(), Q, true), vec![0, 1]);
    assert!(is_injective_inclusion(&t7, i, Q).unwrap());
    // The same shape in RP2 dies rationally.
    let rp2 = rp2_6();
    let j = face(&[1, 2, 4]);
    assert!(!rp2.contains(j));
    assert!(!is_injective_inclusion(&rp2, j, Q).unwrap());
    assert!(is_injective_inclusion(&rp2, j, F2).unwrap());
    // Not tight over Q, yet every product vanishes: full subcomplexes are connected.
    assert!(!is_tight(&rp2, Q, TightOptions::default()).unwrap().tight);
    assert!(is_weakly_golod(&rp2, Q, 20, true).unwrap().is_vanishing());
}

#[test]
fn bundle_over_both_fields() {
    let w = load("walkup9.cplx");
    assert_eq!(betti(&w, Q, false), vec![1, 1, 0, 0]);
    assert_eq!(betti(&w, F2, false), vec![1, 1, 1, 1]);
    let r = is_tight(&w, Q, TightOptions::default()).unwrap();
    assert_eq!(r.witness, Some((face(&[1, 2, 3, 4]), 2)));
    assert!(is_tight(&w, F2, TightOptions::default()).unwrap().tight);
    let report = validate_manifold(&w, &[Q, F2]);
    assert_eq!(report.orientable_over(Q), Some(false));
    let fm = verify_fm(
        &w,
        &report,
        &[Q, F2, FieldSpec::Prime(3), FieldSpec::Prime(5)],
    )
    .unwrap();
    assert!(fm.all_passed(), "{:?}", fm.checks);
    assert_eq!(fm.sm.len(), 9);
    assert!(fm.betti.iter().all(|(_, b, _)| b == &vec![0, 1, 0, 9]));
}

#[test]
fn fm_on_subdivided_bundle() {
    // Subdividing a facet adds one block; the structure survives without neighborliness.
    let w = load("walkup9.cplx");
    let sigma = w.facets()[0];
    let mut facets: Vec<Vec<usize>> = w
        .facets()
        .iter()
        .filter(|f| **f != sigma)
        .map(|f| f.to_vec())
        .collect();
    for t in sigma.boundary_faces() {
        facets.push(t.with(10).to_vec());
    }
    let subdivided = SimplicialComplex::build(10, &facets).unwrap();
    let report = validate_manifold(&subdivided, &[F2]);
    assert!(report.passed());
    let t = is_tight(&subdivided, F2, TightOptions::default()).unwrap();
    assert!(!t.tight && t.stats.neighborly_shortcut);
    let fm = verify_fm(&subdivided, &report, &[F2]).unwrap();
    assert!(fm.all_passed(), "{:?}", fm.checks);
    assert_eq!(fm.sm.len(), 10);
    assert_eq!(fm.betti[0].1, vec![0, 1, 0, 10]);
}

#[test]
fn fm_negative_control() {
    // Boundary of the 4-dimensional cross-polytope; every link is an octahedron.
    let c4 = cycle(4);
    let sphere = join(&c4, &c4).unwrap();
    let report = validate_manifold(&sphere, &[F2]);
    assert!(report.passed() && sphere.dim() == 3);
    assert!(!is_locally_stacked(&sphere, &report).unwrap().all_stacked());
    let fm = verify_fm(&sphere, &report, &[F2]).unwrap();
    let links = fm.check("links-stacked").unwrap();
    assert!(!links.passed);
    assert_eq!(links.witness.as_deref(), Some("vertex 1"));
    assert!(matches!(
        compute_sm(&sphere, &report),
        Err(Error::LinkNotStacked(1))
    ));
}

#[test]
fn sm_needs_validated_input() {
    let c = SimplicialComplex::build(4, &[vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
    let report = validate_manifold(&c, &[F2]);
    assert!(matches!(
        compute_sm(&c, &report),
        Err(Error::PrerequisiteFailed(_))
    ));
}

#[test]
fn zoo_audits_are_clean() {
    for name in [
        "c4.cplx",
        "boundary3.cplx",
        "boundary4.cplx",
        "rp2_6.cplx",
        "torus7.cplx",
        "stacked3_2.cplx",
        "walkup9.cplx",
    ] {
        let r = analyze(&load(name), &AnalyzeOptions::default());
        assert!(r.audit_clean(), "{name}");
        assert!(!r.any_errors(), "{name}");
    }
}
