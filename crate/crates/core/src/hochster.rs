//! Bigraded Betti numbers of the Stanley–Reisner ring through full
//! subcomplexes, the join maps `ι_{I,J}` that carry the Koszul product, the
//! weak Golod test, and the Poincaré series built from the table.
//!
//! Products are evaluated on reduced homology. Over a field the ranks agree
//! with the cohomological statement since the coboundary matrices are
//! transposes of the boundary matrices.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::homology::{ChainComplex, ChainMap, HomologyDegree};
use crate::linalg::Matrix;
use crate::parallel;
use crate::with_field;

pub const DEFAULT_MAX_VERTICES: usize = 20;

/// Nonempty subsets of `[m]` ordered by size, then lexicographically.
pub fn graded_subsets(m: usize) -> Vec<Face> {
    let mut out: Vec<Face> = (1..=m)
        .flat_map(|k| crate::complex::k_subsets(Face::full(m), k))
        .collect();
    out.sort_by(|a, b| a.cmp_graded(*b));
    out
}

/// Reduced Betti numbers of every full subcomplex. Only nonzero rows are
/// stored; all other subsets are acyclic.
#[derive(Clone, Debug, Serialize)]
pub struct HochsterTable {
    pub field: FieldSpec,
    pub m: usize,
    /// `(I, β̃_*(K_I))` for every `I` with nonzero reduced homology, in graded
    /// order.
    pub rows: Vec<(Face, Vec<usize>)>,
    /// Subsets whose full subcomplex is a cone and was skipped.
    pub cones_skipped: usize,
    #[serde(skip)]
    lookup: HashMap<Face, usize>,
}

impl HochsterTable {
    pub fn reduced_betti(&self, subset: Face) -> &[usize] {
        self.lookup.get(&subset).map_or(&[], |&i| &self.rows[i].1)
    }

    pub fn betti_at(&self, subset: Face, p: usize) -> usize {
        self.reduced_betti(subset).get(p).copied().unwrap_or(0)
    }

    /// Nonzero entries `(I, p, rank)` in graded order of `I`, then `p`.
    pub fn entries(&self) -> Vec<(Face, usize, usize)> {
        self.rows
            .iter()
            .flat_map(|(i, b)| {
                b.iter()
                    .enumerate()
                    .filter(|(_, r)| **r > 0)
                    .map(move |(p, r)| (*i, p, *r))
            })
            .collect()
    }

    /// Totals indexed by `(|I|, p)`.
    pub fn bigraded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (i, p, r) in self.entries() {
            *out.entry((i.len(), p)).or_insert(0) += r;
        }
        out
    }

    /// Koszul homology ranks `dim H_i = Σ_I β̃^{i-|I|-1}(K_I)` for `i ≥ 1`
    /// (index 0 holds the unit).
    pub fn koszul_ranks(&self) -> Vec<usize> {
        let mut out = vec![1];
        for (i, p, r) in self.entries() {
            add_at(&mut out, p + i.len() + 1, r);
        }
        out
    }
}

fn add_at(v: &mut Vec<usize>, idx: usize, r: usize) {
    if v.len() <= idx {
        v.resize(idx + 1, 0);
    }
    v[idx] += r;
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap {
        return Err(Error::TooManyVertices { m, cap });
    }
    Ok(())
}

pub fn hochster_table(
    complex: &SimplicialComplex,
    field: FieldSpec,
    cap: usize,
) -> Result<HochsterTable> {
    with_field!(field, |f| hochster_table_with(complex, &f, cap))
}

pub fn hochster_table_with<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
    cap: usize,
) -> Result<HochsterTable> {
    let m = complex.m();
    check_cap(m, cap)?;
    let all_faces = complex.all_faces();
    let subsets = graded_subsets(m);
    let results = parallel::map(&subsets, |&i| {
        if complex.restrict(i).is_cone().is_some() {
            return None;
        }
        Some(ChainComplex::restricted(&all_faces, i, field, true).betti())
    });
    let mut rows = Vec::new();
    let mut cones_skipped = 0;
    for (i, r) in subsets.iter().zip(results) {
        match r {
            None => cones_skipped += 1,
            Some(mut b) => {
                if b.iter().any(|x| *x > 0) {
                    while b.last() == Some(&0) {
                        b.pop();
                    }
                    rows.push((*i, b));
                }
            }
        }
    }
    let lookup = rows.iter().enumerate().map(|(k, (i, _))| (*i, k)).collect();
    Ok(HochsterTable {
        field: field.spec(),
        m,
        rows,
        cones_skipped,
        lookup,
    })
}

/// `ι_{I,J} : K_{I⊔J} → K_I * K_J`, with the join on labels
/// `1..=|I|` (the vertices of `I` in order) followed by `|I|+1..` (those of `J`).
#[derive(Clone, Debug)]
pub struct IotaMap {
    pub first: Face,
    pub second: Face,
    pub join: SimplicialComplex,
    pub map: ChainMap,
}

/// Sign of the shuffle taking `σ` in increasing order to (`σ ∩ I` increasing,
/// then `σ ∩ J` increasing).
pub fn shuffle_sign(sigma: Face, first: Face) -> i64 {
    let mut inversions = 0usize;
    let mut second_seen = 0usize;
    for v in sigma.vertices() {
        if first.contains(v) {
            inversions += second_seen;
        } else {
            second_seen += 1;
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

struct Relabel {
    map: [usize; 64],
}

impl Relabel {
    fn new(first: Face, second: Face) -> Self {
        let mut map = [0usize; 64];
        for (k, v) in first.vertices().chain(second.vertices()).enumerate() {
            map[v] = k + 1;
        }
        Relabel { map }
    }

    fn apply(&self, f: Face) -> Face {
        Face::from_vertices(f.vertices().map(|v| self.map[v]))
    }
}

pub fn iota_chain_map(complex: &SimplicialComplex, first: Face, second: Face) -> Result<IotaMap> {
    check_pair(first, second)?;
    let (a, _) = complex.full_subcomplex(first)?.relabeled();
    let (b, _) = complex.full_subcomplex(second)?.relabeled();
    let join = a.join(&b)?;
    let relabel = Relabel::new(first, second);
    let mut map = ChainMap::new();
    for level in complex.full_subcomplex(first.union(second))?.all_faces() {
        for sigma in level {
            map.insert(
                sigma,
                vec![(relabel.apply(sigma), shuffle_sign(sigma, first))],
            );
        }
    }
    Ok(IotaMap {
        first,
        second,
        join,
        map,
    })
}

fn check_pair(first: Face, second: Face) -> Result<()> {
    if first.is_empty() || second.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !first.is_disjoint(second) {
        return Err(Error::NotDisjoint(first, second));
    }
    Ok(())
}

/// Rank of `(ι_{I,J})_*` in one source degree `n`, split over the Künneth
/// summands `H̃_p(K_I) ⊗ H̃_q(K_J)` with `p + q + 1 = n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub degree: usize,
    pub total: usize,
    /// `(p, q, rank of the component)` for summands with nonzero rank.
    pub components: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRank {
    pub first: Face,
    pub second: Face,
    /// Degrees where the map was computed; empty when prefiltered.
    pub degrees: Vec<DegreeRank>,
    pub prefiltered: bool,
}

impl ProductRank {
    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(|d| d.total == 0)
    }

    pub fn rank_in_degree(&self, n: usize) -> usize {
        self.degrees
            .iter()
            .find(|d| d.degree == n)
            .map_or(0, |d| d.total)
    }
}

/// Shared per-complex data for product computations.
pub struct ProductEngine<'a, F: Field> {
    complex: &'a SimplicialComplex,
    field: F,
    all_faces: Vec<Vec<Face>>,
    table: HochsterTable,
}

impl<'a, F: Field> ProductEngine<'a, F> {
    pub fn new(complex: &'a SimplicialComplex, field: &F, cap: usize) -> Result<Self> {
        let table = hochster_table_with(complex, field, cap)?;
        Ok(ProductEngine {
            complex,
            field: field.clone(),
            all_faces: complex.all_faces(),
            table,
        })
    }

    pub fn table(&self) -> &HochsterTable {
        &self.table
    }

    /// Degrees `n` in which `(p, q)` with `p + q + 1 = n` have nonzero
    /// `β̃_p(K_I)`, `β̃_q(K_J)` and `β̃_n(K_{I⊔J})`.
    pub fn aligned_degrees(&self, first: Face, second: Face) -> Vec<usize> {
        let bi = self.table.reduced_betti(first);
        let bj = self.table.reduced_betti(second);
        let mut out = Vec::new();
        for (p, &x) in bi.iter().enumerate() {
            for (q, &y) in bj.iter().enumerate() {
                let n = p + q + 1;
                if x > 0
                    && y > 0
                    && self.table.betti_at(first.union(second), n) > 0
                    && !out.contains(&n)
                {
                    out.push(n);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn product_rank(&self, first: Face, second: Face, prefilter: bool) -> Result<ProductRank> {
        check_pair(first, second)?;
        let universe = Face::full(self.complex.m());
        if !first.union(second).is_subset(universe) {
            return Err(Error::LabelOutOfRange {
                label: first.union(second).max_vertex().unwrap_or(0),
                m: self.complex.m(),
            });
        }
        let degrees: Vec<usize> = if prefilter {
            self.aligned_degrees(first, second)
        } else {
            let top = self.table.reduced_betti(first.union(second)).len();
            let top = top.max(self.complex.dim().max(0) as usize + 1);
            (0..top).collect()
        };
        if degrees.is_empty() {
            return Ok(ProductRank {
                first,
                second,
                degrees: Vec::new(),
                prefiltered: true,
            });
        }
        let computed = degrees
            .into_iter()
            .map(|n| self.rank_in_degree(first, second, n))
            .collect();
        Ok(ProductRank {
            first,
            second,
            degrees: computed,
            prefiltered: false,
        })
    }

    fn rank_in_degree(&self, first: Face, second: Face, n: usize) -> DegreeRank {
        let f = &self.field;
        let source = ChainComplex::restricted(&self.all_faces, first.union(second), f, true);
        if n >= source.num_degrees() {
            return DegreeRank {
                degree: n,
                total: 0,
                components: Vec::new(),
            };
        }
        let source_h = source.homology();
        let src = source_h.degree(n).expect("degree in range");
        if src.dim() == 0 {
            return DegreeRank {
                degree: n,
                total: 0,
                components: Vec::new(),
            };
        }

        let relabel = Relabel::new(first, second);
        let cx_i = ChainComplex::restricted(&self.all_faces, first, f, true);
        let cx_j = ChainComplex::restricted(&self.all_faces, second, f, true);
        let h_i = cx_i.homology();
        let h_j = cx_j.homology();

        let mut join_faces: Vec<Face> = Vec::new();
        for level_a in std::iter::once(&vec![Face::EMPTY]).chain(self.all_faces_in(first).iter()) {
            for &a in level_a {
                for level_b in
                    std::iter::once(&vec![Face::EMPTY]).chain(self.all_faces_in(second).iter())
                {
                    for &b in level_b {
                        let u = a.union(b);
                        if !u.is_empty() {
                            join_faces.push(relabel.apply(u));
                        }
                    }
                }
            }
        }
        let top = join_faces.iter().map(|x| x.len()).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top];
        for x in join_faces {
            levels[x.len() - 1].push(x);
        }
        for level in &mut levels {
            level.sort();
        }
        let target = ChainComplex::from_faces(f, levels, true);
        let target_n = target.rank_of_chain_group(n);

        // product representatives a * b, grouped by (p, q)
        let mut blocks: Vec<(usize, usize, usize)> = Vec::new();
        let mut columns: Vec<Vec<F::Elem>> = Vec::new();
        for p in 0..n {
            let q = n - 1 - p;
            let (Some(hp), Some(hq)) = (h_i.degree(p), h_j.degree(q)) else {
                continue;
            };
            if hp.dim() == 0 || hq.dim() == 0 {
                continue;
            }
            blocks.push((p, q, hp.dim() * hq.dim()));
            for x in 0..hp.dim() {
                let za = hp.representatives().column(x);
                for y in 0..hq.dim() {
                    let zb = hq.representatives().column(y);
                    let mut col = vec![f.zero(); target_n];
                    for (ia, ca) in za.iter().enumerate() {
                        if f.is_zero(ca) {
                            continue;
                        }
                        let fa = cx_i.faces(p)[ia];
                        for (ib, cb) in zb.iter().enumerate() {
                            if f.is_zero(cb) {
                                continue;
                            }
                            let fb = cx_j.faces(q)[ib];
                            let t = target
                                .index_of(relabel.apply(fa.union(fb)))
                                .expect("join face");
                            col[t] = f.add(&col[t], &f.mul(ca, cb));
                        }
                    }
                    columns.push(col);
                }
            }
        }
        let reps = Matrix::from_columns(f, target_n, &columns);
        let tgt: HomologyDegree<F> = target
            .homology_degree_with(n, &reps)
            .expect("join homology is spanned by products of cycles");

        let mut iota = ChainMap::new();
        for k in 0..source.num_degrees() {
            for &sigma in source.faces(k) {
                iota.insert(
                    sigma,
                    vec![(relabel.apply(sigma), shuffle_sign(sigma, first))],
                );
            }
        }
        iota.check(f, &source, &target).expect("ι is a chain map");

        let images: Vec<Vec<F::Elem>> = (0..src.dim())
            .map(|j| {
                let z = src.representatives().column(j);
                tgt.coordinates(&iota.push_forward(f, &source, &target, n, &z))
            })
            .collect();
        let image = Matrix::from_columns(f, tgt.dim(), &images);
        let total = image.rank();
        let mut components = Vec::new();
        let mut offset = 0;
        for (p, q, size) in blocks {
            let rows: Vec<usize> = (offset..offset + size).collect();
            let r = image.select_rows(&rows).rank();
            if r > 0 {
                components.push((p, q, r));
            }
            offset += size;
        }
        DegreeRank {
            degree: n,
            total,
            components,
        }
    }

    fn all_faces_in(&self, subset: Face) -> Vec<Vec<Face>> {
        self.all_faces
            .iter()
            .map(|l| {
                l.iter()
                    .copied()
                    .filter(|x| x.is_subset(subset))
                    .collect::<Vec<_>>()
            })
            .filter(|l| !l.is_empty())
            .collect()
    }

    /// Unordered disjoint pairs `I < J` (graded order), in pair order.
    pub fn candidate_pairs(&self, prefilter: bool) -> Vec<(Face, Face)> {
        let pool: Vec<Face> = if prefilter {
            self.table.rows.iter().map(|(i, _)| *i).collect()
        } else {
            graded_subsets(self.complex.m())
        };
        let mut pairs = Vec::new();
        for (x, &i) in pool.iter().enumerate() {
            for &j in &pool[x + 1..] {
                if i.is_disjoint(j) && (!prefilter || !self.aligned_degrees(i, j).is_empty()) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodWitness {
    pub first: Face,
    pub second: Face,
    pub degree: usize,
    pub p: usize,
    pub q: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodCertificate {
    pub field: FieldSpec,
    pub witness: Option<GolodWitness>,
    pub pairs_computed: usize,
    pub pairs_total: usize,
}

impl GolodCertificate {
    pub fn is_vanishing(&self) -> bool {
        self.witness.is_none()
    }
}

/// Are all products of the Koszul homology zero? Overlapping pairs multiply
/// trivially and are never computed.
pub fn is_weakly_golod(
    complex: &SimplicialComplex,
    field: FieldSpec,
    cap: usize,
    prefilter: bool,
) -> Result<GolodCertificate> {
    with_field!(field, |f| {
        let engine = ProductEngine::new(complex, &f, cap)?;
        weak_golod_with(&engine, prefilter)
    })
}

pub fn weak_golod_with<F: Field>(
    engine: &ProductEngine<'_, F>,
    prefilter: bool,
) -> Result<GolodCertificate> {
    let m = engine.complex.m();
    let pairs_total = 3usize.pow(m as u32).div_ceil(2) - 2usize.pow(m as u32);
    let pairs = engine.candidate_pairs(prefilter);
    let witness = parallel::find_first(&pairs, |&(i, j)| {
        let r = engine.product_rank(i, j, prefilter).expect("valid pair");
        r.degrees.iter().find(|d| d.total > 0).map(|d| {
            let (p, q, _) = d.components[0];
            GolodWitness {
                first: i,
                second: j,
                degree: d.degree,
                p,
                q,
                rank: d.total,
            }
        })
    });
    let pairs_computed = match &witness {
        Some(w) => {
            pairs
                .iter()
                .position(|&(i, j)| i == w.first && j == w.second)
                .unwrap()
                + 1
        }
        None => pairs.len(),
    };
    Ok(GolodCertificate {
        field: engine.field.spec(),
        witness,
        pairs_computed,
        pairs_total,
    })
}

pub fn product_rank(
    complex: &SimplicialComplex,
    first: Face,
    second: Face,
    field: FieldSpec,
) -> Result<ProductRank> {
    with_field!(field, |f| ProductEngine::new(
        complex,
        &f,
        DEFAULT_MAX_VERTICES.max(complex.m())
    )?
    .product_rank(first, second, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesRole {
    TorSeries,
    GolodBound,
    ZkCohomology,
}

/// Truncated power series with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    pub role: SeriesRole,
    pub coefficients: Vec<u128>,
}

impl PoincareSeries {
    pub fn coefficient(&self, i: usize) -> u128 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// `1 + 2t^3 + t^6`-style rendering.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(|(i, c)| match (i, *c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// `P(Tor^S(F[K], F); t) = 1 + Σ β̃^p(K_I) t^{p+|I|+1}`, truncated at `t^N`.
pub fn tor_poincare_series(table: &HochsterTable, n: usize) -> PoincareSeries {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for (i, p, r) in table.entries() {
        let deg = p + i.len() + 1;
        if deg <= n {
            c[deg] += r as u128;
        }
    }
    PoincareSeries {
        role: SeriesRole::TorSeries,
        coefficients: c,
    }
}

/// `(1+t^2)^m / (1 - t (P(Tor) - 1))`, truncated at `t^N`.
pub fn golod_bound_series(table: &HochsterTable, n: usize) -> Result<PoincareSeries> {
    let overflow =
        || Error::BudgetExceeded(format!("Golod bound coefficient overflow below t^{n}"));
    let tor = tor_poincare_series(table, n);
    // x = t (P - 1)
    let mut x = vec![0u128; n + 1];
    for (i, xi) in x.iter_mut().enumerate().skip(2) {
        *xi = tor.coefficient(i - 1);
    }
    // g = 1 / (1 - x), g_k = Σ_{j≥1} x_j g_{k-j}
    let mut g = vec![0u128; n + 1];
    g[0] = 1;
    for k in 1..=n {
        let mut acc = 0u128;
        for j in 1..=k {
            if x[j] > 0 {
                acc = acc
                    .checked_add(x[j].checked_mul(g[k - j]).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
        g[k] = acc;
    }
    // (1 + t^2)^m
    let m = table.m;
    let mut binom = vec![0u128; n + 1];
    let mut c = 1u128;
    for k in 0..=m {
        if 2 * k <= n {
            binom[2 * k] = c;
        }
        c = c * (m - k) as u128 / (k + 1) as u128;
    }
    let mut out = vec![0u128; n + 1];
    for i in 0..=n {
        if binom[i] == 0 {
            continue;
        }
        for j in 0..=n - i {
            out[i + j] = out[i + j]
                .checked_add(binom[i].checked_mul(g[j]).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
    }
    Ok(PoincareSeries {
        role: SeriesRole::GolodBound,
        coefficients: out,
    })
}

/// Betti numbers of the moment-angle complex `Z_K`:
/// `β_i = Σ_I β̃^{i-|I|-1}(K_I)`, `β_0 = 1`.
pub fn zk_betti(table: &HochsterTable) -> Vec<usize> {
    table.koszul_ranks()
}

/// Betti numbers of the real moment-angle complex predicted by the
/// decomposition into `|ΣK_I|`: `β_i = Σ_I β̃^{i-1}(K_I)`, `β_0 = 1`.
pub fn rzk_betti_predicted(table: &HochsterTable) -> Vec<usize> {
    let mut out = vec![1];
    for (_, p, r) in table.entries() {
        add_at(&mut out, p + 1, r);
    }
    out
}
