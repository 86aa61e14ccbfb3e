//! Standard complexes and gluing constructions.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{k_subsets, Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// `∂Δ^n` on the vertices `1..=n+1`.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    assert!(
        (1..MAX_VERTICES).contains(&n),
        "boundary_simplex({n}) out of range"
    );
    let verts = Face::full(n + 1);
    SimplicialComplex::from_faces_unchecked(n + 1, k_subsets(verts, n))
}

/// The `n`-cycle `1-2-...-n-1`.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!((3..=MAX_VERTICES).contains(&n), "cycle({n}) out of range");
    let faces = (1..=n).map(|i| Face::vertex(i).with(i % n + 1)).collect();
    SimplicialComplex::from_faces_unchecked(n, faces)
}

/// `∂Δ^{d+1} # ... # ∂Δ^{d+1}` with `blocks` summands glued in a chain: block
/// `j` has vertices `j..=j+d+1`, so the result has `d + blocks + 1` vertices.
pub fn stacked_sphere(d: usize, blocks: usize) -> SimplicialComplex {
    assert!(d >= 1 && blocks >= 1 && d + blocks < MAX_VERTICES);
    let mut current = block_boundary(d + blocks + 1, Face::full(d + 2));
    for j in 2..=blocks {
        let block = Face::full(j + d + 1).difference(Face::full(j - 1));
        let other = block_boundary(d + blocks + 1, block);
        current = glue(&current, &other, false).expect("chain gluing shares one facet");
    }
    current
}

fn block_boundary(m: usize, block: Face) -> SimplicialComplex {
    SimplicialComplex::from_faces_unchecked(m, k_subsets(block, block.len() - 1))
}

/// The single facet shared by `a` and `b`, checking that the two complexes
/// meet in exactly that simplex.
fn shared_facet(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Face> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(
            a.dim().max(0) as usize,
            b.dim().max(0) as usize,
        ));
    }
    let fb: HashSet<Face> = b.facets().iter().copied().collect();
    let common: Vec<Face> = a
        .facets()
        .iter()
        .copied()
        .filter(|f| fb.contains(f))
        .collect();
    let sigma = match common.as_slice() {
        [s] => *s,
        [] => return Err(Error::InvalidMatching("complexes share no facet".into())),
        [_, extra, ..] => return Err(Error::OverlapTooLarge(*extra)),
    };
    let faces_b = b.face_set();
    let mut extra: Vec<Face> = a
        .face_set()
        .into_iter()
        .filter(|f| faces_b.contains(f) && !f.is_subset(sigma))
        .collect();
    extra.sort();
    if let Some(f) = extra.first() {
        return Err(Error::OverlapTooLarge(*f));
    }
    Ok(sigma)
}

/// `K1 # K2` (drop the shared facet) or `K1 ∘ K2` (keep it), for complexes on a
/// common label universe meeting in a single facet.
pub fn glue(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    keep_shared: bool,
) -> Result<SimplicialComplex> {
    let sigma = shared_facet(a, b)?;
    let m = a.m().max(b.m());
    let mut faces: Vec<Face> = a.facets().iter().chain(b.facets()).copied().collect();
    if !keep_shared {
        faces.retain(|f| *f != sigma);
    }
    Ok(SimplicialComplex::from_faces_unchecked(m, faces))
}

/// `K1 ∘ K2 = K1 ∪ K2` for complexes sharing exactly one facet.
pub fn circ_union(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    glue(a, b, true)
}

/// Connected sum of two complexes given on separate label sets. `matching`
/// pairs each vertex of `facet_b` with the vertex of `facet_a` it is glued to.
/// The other vertices of `b` are relabeled `a.m()+1, ...` in increasing order.
pub fn connected_sum(
    a: &SimplicialComplex,
    facet_a: Face,
    b: &SimplicialComplex,
    facet_b: Face,
    matching: &[(usize, usize)],
) -> Result<SimplicialComplex> {
    if facet_a.len() != facet_b.len() {
        return Err(Error::DimensionMismatch(
            facet_a.len().saturating_sub(1),
            facet_b.len().saturating_sub(1),
        ));
    }
    if !a.facets().contains(&facet_a) {
        return Err(Error::NotAFacet(facet_a));
    }
    if !b.facets().contains(&facet_b) {
        return Err(Error::NotAFacet(facet_b));
    }
    if a.dim() != b.dim() || facet_a.dim() != a.dim() {
        return Err(Error::DimensionMismatch(
            a.dim().max(0) as usize,
            b.dim().max(0) as usize,
        ));
    }
    let mut map = vec![0usize; MAX_VERTICES + 1];
    let mut hit_a = Face::EMPTY;
    let mut hit_b = Face::EMPTY;
    for &(vb, va) in matching {
        if !facet_b.contains(vb)
            || !facet_a.contains(va)
            || hit_a.contains(va)
            || hit_b.contains(vb)
        {
            return Err(Error::InvalidMatching(format!("pair ({vb}, {va})")));
        }
        map[vb] = va;
        hit_a = hit_a.with(va);
        hit_b = hit_b.with(vb);
    }
    if hit_a != facet_a || hit_b != facet_b {
        return Err(Error::InvalidMatching(
            "matching is not a bijection of the facets".into(),
        ));
    }
    let mut next = a.m();
    for v in b.vertex_set().difference(facet_b).vertices() {
        next += 1;
        map[v] = next;
    }
    if next > MAX_VERTICES {
        return Err(Error::TooManyLabels(next));
    }
    let relabel = |f: Face| Face::from_vertices(f.vertices().map(|v| map[v]));
    let b2 = SimplicialComplex::from_faces_unchecked(
        next,
        b.facets().iter().map(|f| relabel(*f)).collect(),
    );
    let a2 = SimplicialComplex::from_faces_unchecked(next, a.facets().to_vec());
    glue(&a2, &b2, false)
}

/// The join on separate label sets (see [`SimplicialComplex::join`]).
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    a.join(b)
}

/// Boundary of the cyclic `dim`-polytope with `n` vertices (Gale evenness).
/// It is a `(dim-1)`-sphere in which every `⌊dim/2⌋` vertices span a face.
pub fn cyclic_polytope_boundary(n: usize, dim: usize) -> SimplicialComplex {
    assert!(dim >= 2 && n > dim && n <= MAX_VERTICES);
    let facets: Vec<Face> = k_subsets(Face::full(n), dim)
        .into_iter()
        .filter(|s| {
            let outside: Vec<usize> = Face::full(n).difference(*s).to_vec();
            outside.windows(2).all(|w| {
                let between = s.vertices().filter(|&v| v > w[0] && v < w[1]).count();
                between % 2 == 0
            })
        })
        .collect();
    SimplicialComplex::from_faces_unchecked(n, facets)
}

/// Boundary of the cyclic chain of `(d+1)`-simplices `{i, ..., i+d+1}` on
/// `2d+3` cyclically ordered vertices: a neighborly, stacked `d`-manifold
/// with the topology of an `S^{d-1}`-bundle over the circle (twisted for odd `d`).
/// `d = 2` gives the 7-vertex torus, `d = 3` the 9-vertex twisted bundle.
pub fn sphere_bundle(d: usize) -> SimplicialComplex {
    assert!(d >= 2 && 2 * d + 3 <= MAX_VERTICES);
    let n = 2 * d + 3;
    let block = |i: usize| Face::from_vertices((0..d + 2).map(|j| (i + j) % n + 1));
    let mut count: std::collections::HashMap<Face, usize> = std::collections::HashMap::new();
    for i in 0..n {
        for f in k_subsets(block(i), d + 1) {
            *count.entry(f).or_default() += 1;
        }
    }
    let boundary: Vec<Face> = count
        .into_iter()
        .filter(|(_, c)| *c == 1)
        .map(|(f, _)| f)
        .collect();
    SimplicialComplex::from_faces_unchecked(n, boundary)
}

/// The 6-vertex real projective plane (half of the icosahedron).
pub fn rp2_6() -> SimplicialComplex {
    let facets = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::build(6, &lists).expect("valid RP2 facets")
}

/// The 7-vertex Möbius torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_7() -> SimplicialComplex {
    let v = |i: usize| i % 7 + 1;
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(Face::from_vertices([v(i), v(i + 1), v(i + 3)]));
        faces.push(Face::from_vertices([v(i), v(i + 2), v(i + 3)]));
    }
    SimplicialComplex::from_faces_unchecked(7, faces)
}

/// Random complex on `[m]`: `facets` random faces of size `1..=max_size`,
/// then every vertex covered. Not necessarily connected.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    m: usize,
    max_size: usize,
    facets: usize,
) -> SimplicialComplex {
    let mut faces: Vec<Face> = Vec::new();
    let verts: Vec<usize> = (1..=m).collect();
    for _ in 0..facets {
        let size = rng.gen_range(1..=max_size.min(m));
        let pick: Vec<usize> = verts.choose_multiple(rng, size).copied().collect();
        faces.push(Face::from_vertices(pick));
    }
    let covered = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    for v in Face::full(m).difference(covered).vertices() {
        faces.push(Face::vertex(v));
    }
    SimplicialComplex::from_faces_unchecked(m, faces)
}

/// Random connected complex: a random complex plus edges joining its
/// components in a chain.
pub fn random_connected_complex<R: Rng>(
    rng: &mut R,
    m: usize,
    max_size: usize,
    facets: usize,
) -> SimplicialComplex {
    let base = random_complex(rng, m, max_size, facets);
    let comps = base.components();
    let mut faces = base.facets().to_vec();
    for w in comps.windows(2) {
        let a = w[0].to_vec();
        let b = w[1].to_vec();
        let u = *a.choose(rng).unwrap();
        let v = *b.choose(rng).unwrap();
        faces.push(Face::vertex(u).with(v));
    }
    SimplicialComplex::from_faces_unchecked(m, faces)
}

/// Random `k`-neighborly complex: the full `k`-skeleton of the simplex on
/// `[m]` plus random faces of size `k+2..=max_size`.
pub fn random_neighborly_complex<R: Rng>(
    rng: &mut R,
    m: usize,
    k: usize,
    max_size: usize,
    extra: usize,
) -> SimplicialComplex {
    let mut faces = k_subsets(Face::full(m), (k + 1).min(m));
    let verts: Vec<usize> = (1..=m).collect();
    let lo = (k + 2).min(m);
    let hi = max_size.clamp(lo, m);
    for _ in 0..extra {
        let size = rng.gen_range(lo..=hi);
        faces.push(Face::from_vertices(
            verts.choose_multiple(rng, size).copied(),
        ));
    }
    SimplicialComplex::from_faces_unchecked(m, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn boundary_and_cycle_shapes() {
        assert_eq!(boundary_simplex(3).f_vector(), vec![4, 6, 4]);
        assert_eq!(boundary_simplex(2), cycle(3));
        assert_eq!(cycle(5).f_vector(), vec![5, 5]);
    }

    #[test]
    fn stacked_sphere_counts() {
        let s = stacked_sphere(3, 1);
        assert_eq!(s, boundary_simplex(4));
        let s = stacked_sphere(3, 2);
        assert_eq!(s.m(), 6);
        assert_eq!(s.f_vector(), vec![6, 14, 16, 8]);
        for d in 1..=4 {
            for k in 1..=5 {
                assert_eq!(stacked_sphere(d, k).num_vertices(), d + k + 1);
            }
        }
    }

    #[test]
    fn connected_sum_of_two_tetrahedra_boundaries() {
        let s = boundary_simplex(3);
        let t = connected_sum(
            &s,
            face(&[2, 3, 4]),
            &s,
            face(&[1, 2, 3]),
            &[(1, 2), (2, 3), (3, 4)],
        )
        .unwrap();
        assert_eq!(t.f_vector(), vec![5, 9, 6]);
        assert_eq!(t.euler_characteristic(), 2);
    }

    #[test]
    fn connected_sum_errors() {
        let s = boundary_simplex(3);
        let c = cycle(4);
        assert!(matches!(
            connected_sum(&s, face(&[2, 3, 4]), &c, face(&[1, 2]), &[(1, 2), (2, 3)]),
            Err(Error::DimensionMismatch(..))
        ));
        assert_eq!(
            connected_sum(
                &s,
                face(&[2, 3, 4]),
                &s,
                face(&[1, 2, 3]),
                &[(1, 2), (2, 3), (3, 3)]
            ),
            Err(Error::InvalidMatching("pair (3, 3)".into()))
        );
        assert_eq!(
            connected_sum(&s, face(&[1, 2]), &s, face(&[1, 2, 3]), &[]),
            Err(Error::DimensionMismatch(1, 2))
        );
    }

    #[test]
    fn circ_union_and_overlap() {
        let a = block_boundary(5, face(&[1, 2, 3, 4]));
        let b = block_boundary(5, face(&[2, 3, 4, 5]));
        assert_eq!(circ_union(&a, &b).unwrap().facets().len(), 7);
        assert_eq!(glue(&a, &b, false).unwrap(), stacked_sphere(2, 2));
        let a =
            SimplicialComplex::from_faces_unchecked(4, vec![face(&[1, 2, 3]), face(&[1, 3, 4])]);
        let b =
            SimplicialComplex::from_faces_unchecked(4, vec![face(&[1, 2, 3]), face(&[2, 3, 4])]);
        assert_eq!(
            circ_union(&a, &b),
            Err(Error::OverlapTooLarge(face(&[3, 4])))
        );
    }

    #[test]
    fn cyclic_polytopes_are_neighborly() {
        let c = cyclic_polytope_boundary(7, 5);
        assert_eq!(c.dim(), 4);
        assert!(c.is_k_neighborly(1));
        assert!(!c.is_k_neighborly(2));
        let c = cyclic_polytope_boundary(9, 7);
        assert!(c.is_k_neighborly(2));
        assert!(!c.is_k_neighborly(3));
    }

    #[test]
    fn bundle_series() {
        let t = sphere_bundle(2);
        assert_eq!(t.f_vector(), vec![7, 21, 14]);
        let w = sphere_bundle(3);
        assert_eq!(w.m(), 9);
        assert!(w.is_k_neighborly(1));
        assert_eq!(w.euler_characteristic(), 0);
    }

    #[test]
    fn zoo_surfaces() {
        assert_eq!(rp2_6().f_vector(), vec![6, 15, 10]);
        assert_eq!(rp2_6().euler_characteristic(), 1);
        assert_eq!(torus_7().f_vector(), vec![7, 21, 14]);
        assert_eq!(torus_7().euler_characteristic(), 0);
    }
}
