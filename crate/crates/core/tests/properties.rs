use std::collections::HashSet;

use golodtight_core::complex::k_subsets;
use golodtight_core::generators::{boundary_simplex, random_neighborly_complex, stacked_sphere};
use golodtight_core::hochster::{hochster_table, is_weakly_golod, zk_betti, ProductEngine};
use golodtight_core::homology::{betti, ChainComplex};
use golodtight_core::linalg::Matrix;
use golodtight_core::manifold::{is_stacked_sphere, validate_manifold};
use golodtight_core::oracle::{rzk_betti_oracle, zk_betti_oracle};
use golodtight_core::tightness::{is_tight, TightOptions};
use golodtight_core::{
    BuildOptions, Face, Field, FieldSpec, PrimeField, Rationals, SimplicialComplex,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rational;
const F2: FieldSpec = FieldSpec::Prime(2);

/// Random facets on `[m]`, every vertex covered.
fn complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_m).prop_flat_map(|m| {
        prop::collection::vec(1u64..(1u64 << m), 1..8).prop_map(move |masks| {
            let mut faces: Vec<Face> = masks.into_iter().map(Face::from_bits).collect();
            let covered = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
            faces.extend(
                Face::full(m)
                    .difference(covered)
                    .vertices()
                    .map(Face::vertex),
            );
            SimplicialComplex::from_faces(m, faces, BuildOptions::default()).unwrap()
        })
    })
}

/// Same, with components chained by edges between their least vertices.
fn connected(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    complex(max_m).prop_map(|k| {
        let comps = k.components();
        let mut faces = k.facets().to_vec();
        for w in comps.windows(2) {
            faces.push(Face::vertex(w[0].min_vertex().unwrap()).with(w[1].min_vertex().unwrap()));
        }
        SimplicialComplex::from_faces(k.m(), faces, BuildOptions::default()).unwrap()
    })
}

fn euler(b: &[usize]) -> i64 {
    b.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn full_subcomplex_composes(k in complex(7), a in any::<u64>(), b in any::<u64>()) {
        let all = Face::full(k.m()).bits();
        let i = Face::from_bits(a & all | 1);
        let j = Face::from_bits(b & i.bits() | 1);
        let ki = k.full_subcomplex(i).unwrap();
        prop_assert_eq!(ki.full_subcomplex(j).unwrap(), k.full_subcomplex(j).unwrap());
    }

    #[test]
    fn minimal_non_faces_are_boundaries(k in complex(7)) {
        let mnf: HashSet<Face> = k.minimal_non_faces().into_iter().collect();
        let top = (k.dim() + 2) as usize;
        for size in 2..=top.min(k.m()) {
            for i in k_subsets(Face::full(k.m()), size) {
                let (sub, _) = k.full_subcomplex(i).unwrap().relabeled();
                prop_assert_eq!(mnf.contains(&i), sub == boundary_simplex(size - 1), "{}", i);
            }
        }
    }

    #[test]
    fn euler_characteristic(k in complex(7)) {
        let f = k.f_vector();
        prop_assert_eq!(euler(&f), k.euler_characteristic());
        for field in [Q, F2, FieldSpec::Prime(3)] {
            prop_assert_eq!(euler(&betti(&k, field, false)), k.euler_characteristic());
        }
    }

    #[test]
    fn join_face_counts(a in complex(4), b in complex(4)) {
        let j = a.join(&b).unwrap();
        let fa: Vec<usize> = std::iter::once(1).chain(a.f_vector()).collect();
        let fb: Vec<usize> = std::iter::once(1).chain(b.f_vector()).collect();
        let mut conv = vec![0; fa.len() + fb.len() - 1];
        for (x, p) in fa.iter().enumerate() {
            for (y, q) in fb.iter().enumerate() {
                conv[x + y] += p * q;
            }
        }
        prop_assert_eq!(j.f_vector(), conv[1..].to_vec());
    }

    #[test]
    fn components_and_cohomology(k in complex(7)) {
        let comps = k.components().len();
        prop_assert_eq!(betti(&k, Q, false)[0], comps);
        prop_assert_eq!(betti(&k, Q, true).first().copied().unwrap_or(0), comps - 1);
        let cx = ChainComplex::of(&k, &PrimeField::new(3).unwrap(), false);
        prop_assert_eq!(cx.betti(), cx.cohomology_betti());
    }

    #[test]
    fn rank_identities(rows in prop::collection::vec(prop::collection::vec(-1i64..=1, 5), 1..6)) {
        let q = Matrix::from_rows_i64(&Rationals, &rows);
        let r = q.rank();
        prop_assert_eq!(r, q.transpose().rank());
        prop_assert_eq!(r + q.kernel_basis().cols(), q.cols());
        let (e, _) = q.rref();
        prop_assert_eq!(&e.rref().0, &e);
        // Entries in {-1,0,1} and at most 6 rows keep every minor below 10007.
        prop_assert_eq!(Matrix::from_rows_i64(&PrimeField::new(10007).unwrap(), &rows).rank(), r);
        for p in [2, 3] {
            prop_assert!(Matrix::from_rows_i64(&PrimeField::new(p).unwrap(), &rows).rank() <= r);
        }
    }

    #[test]
    fn tight_implies_neighborly_and_golod(k in connected(6)) {
        for field in [Q, F2] {
            let t = is_tight(&k, field, TightOptions::default()).unwrap();
            let exhaustive = is_tight(&k, field, TightOptions { prune: false, ..TightOptions::default() }).unwrap();
            prop_assert_eq!(t.tight, exhaustive.tight);
            if t.tight {
                prop_assert!(k.is_k_neighborly(1));
                prop_assert!(is_weakly_golod(&k, field, 20, true).unwrap().is_vanishing());
            }
        }
    }

    #[test]
    fn products_are_symmetric_and_prefilter_sound(k in complex(6)) {
        let f = Rationals;
        let engine = ProductEngine::new(&k, &f, 20).unwrap();
        let kept: HashSet<(Face, Face)> = engine.candidate_pairs(true).into_iter().collect();
        for (i, j) in engine.candidate_pairs(false) {
            let full = engine.product_rank(i, j, false).unwrap();
            let swapped = engine.product_rank(j, i, false).unwrap();
            for d in &full.degrees {
                prop_assert_eq!(d.total, swapped.rank_in_degree(d.degree));
            }
            if !kept.contains(&(i, j)) {
                prop_assert!(full.is_zero(), "prefilter dropped a nonzero pair {} {}", i, j);
            }
        }
    }

    #[test]
    fn oracles_match_predictions(k in complex(6)) {
        for field in [Q, F2] {
            let table = hochster_table(&k, field, 20).unwrap();
            let mut predicted = golodtight_core::hochster::rzk_betti_predicted(&table);
            while predicted.len() > 1 && predicted.last() == Some(&0) {
                predicted.pop();
            }
            prop_assert_eq!(rzk_betti_oracle(&k, field).unwrap(), predicted);
            let mut z = zk_betti(&table);
            while z.len() > 1 && z.last() == Some(&0) {
                z.pop();
            }
            prop_assert_eq!(zk_betti_oracle(&k, field).unwrap(), z);
        }
    }

    #[test]
    fn neighborly_complexes_have_connected_rzk(seed in any::<u64>(), m in 3usize..=7, k in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_neighborly_complex(&mut rng, m, k, 4, 3);
        let b = rzk_betti_oracle(&c, Q).unwrap();
        for d in 1..=k {
            prop_assert_eq!(b.get(d).copied().unwrap_or(0), 0);
        }
    }
}

#[test]
fn stacked_round_trip() {
    for d in 2..=4 {
        for k in 1..=5 {
            let s = stacked_sphere(d, k);
            assert_eq!(s.num_vertices(), d + k + 1);
            let dec = is_stacked_sphere(&s).unwrap().expect("stacked");
            assert_eq!(dec.len(), k);
            assert_eq!(dec.replay(s.m()).unwrap(), s);
            for v in 1..=s.m() {
                assert!(
                    is_stacked_sphere(&s.link(v).unwrap()).unwrap().is_some()
                        || d == 2 && s.link(v).unwrap().dim() == 1
                );
            }
        }
    }
}

#[test]
fn top_betti_of_pseudomanifolds() {
    for k in [
        boundary_simplex(3),
        stacked_sphere(3, 3),
        golodtight_core::generators::rp2_6(),
    ] {
        let report = validate_manifold(&k, &[F2]);
        assert!(report.passed());
        let d = k.dim() as usize;
        assert_eq!(betti(&k, F2, false)[d], 1);
        assert!(betti(&k, Q, false).get(d).copied().unwrap_or(0) <= 1);
    }
}

#[test]
fn field_elements_round_trip() {
    let f = PrimeField::new(7).unwrap();
    assert_eq!(f.from_i64(-1), f.from_i64(6));
    assert!(f.is_zero(&f.from_i64(14)));
}
