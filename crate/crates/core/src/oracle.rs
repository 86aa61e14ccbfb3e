//! Brute-force cellular chain complexes for the real moment-angle complex
//! (cubical cells of `[-1,1]^m`) and the moment-angle complex (products of
//! the minimal cells `v, a, b` of `D^2`). Both compute Betti numbers only.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{sparse_rank, SparseVec};
use crate::parallel;
use crate::with_field;

pub const RZK_MAX_VERTICES: usize = 14;
pub const ZK_MAX_VERTICES: usize = 9;

/// A cell as two disjoint masks; its meaning depends on the model.
type Cell = (u64, u64);

/// Integer chain complex given by cells per degree and a boundary rule.
struct CellComplex {
    cells: Vec<Vec<Cell>>,
    index: Vec<HashMap<Cell, usize>>,
    boundary: fn(Cell) -> Vec<(Cell, i64)>,
}

impl CellComplex {
    fn new(mut cells: Vec<Vec<Cell>>, boundary: fn(Cell) -> Vec<(Cell, i64)>) -> Self {
        for level in &mut cells {
            level.sort_unstable();
        }
        while cells.last().is_some_and(Vec::is_empty) {
            cells.pop();
        }
        let index = cells
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, c)| (*c, i)).collect())
            .collect();
        let cx = CellComplex {
            cells,
            index,
            boundary,
        };
        cx.assert_boundary_squares_to_zero();
        cx
    }

    fn assert_boundary_squares_to_zero(&self) {
        for level in self.cells.iter().skip(2) {
            for &c in level {
                let mut acc: HashMap<Cell, i64> = HashMap::new();
                for (b, s) in (self.boundary)(c) {
                    for (bb, t) in (self.boundary)(b) {
                        *acc.entry(bb).or_insert(0) += s * t;
                    }
                }
                assert!(
                    acc.values().all(|v| *v == 0),
                    "boundary of boundary is nonzero at {c:?}"
                );
            }
        }
    }

    fn euler_from_cells(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, l)| {
                if k % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    fn column<F: Field>(&self, field: &F, k: usize, c: Cell) -> SparseVec<F::Elem> {
        let mut col: SparseVec<F::Elem> = (self.boundary)(c)
            .into_iter()
            .map(|(b, s)| (self.index[k - 1][&b], field.from_i64(s)))
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        col.sort_by_key(|(i, _)| *i);
        col
    }

    fn rank<F: Field>(&self, field: &F, k: usize) -> usize {
        if k == 0 || k >= self.cells.len() {
            return 0;
        }
        let cols = self.cells[k]
            .iter()
            .map(|&c| self.column(field, k, c))
            .collect();
        sparse_rank(field, cols)
    }

    fn betti<F: Field>(&self, field: &F) -> Vec<usize> {
        let n = self.cells.len();
        let degrees: Vec<usize> = (0..=n).collect();
        let ranks = parallel::map(&degrees, |&k| self.rank(field, k));
        let mut betti: Vec<usize> = (0..n)
            .map(|k| self.cells[k].len() - ranks[k] - ranks[k + 1])
            .collect();
        let euler: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(
            euler,
            self.euler_from_cells(),
            "Euler characteristic bookkeeping"
        );
        trim(&mut betti);
        betti
    }
}

pub(crate) fn trim(v: &mut Vec<usize>) {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
}

fn faces_with_empty(complex: &SimplicialComplex) -> Vec<Face> {
    let mut out = vec![Face::EMPTY];
    out.extend(complex.all_faces().into_iter().flatten());
    out
}

/// `(J, ε)` with `ε` the set of `+1` coordinates outside `J`.
fn cube_boundary(cell: Cell) -> Vec<(Cell, i64)> {
    let (j, plus) = cell;
    let free = Face::from_bits(j);
    let mut out = Vec::with_capacity(2 * free.len());
    for (pos, v) in free.vertices().enumerate() {
        let bit = 1u64 << (v - 1);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        out.push(((j & !bit, plus | bit), sign));
        out.push(((j & !bit, plus), -sign));
    }
    out
}

/// `(b-set, a-set)`; the boundary sends one `b` to `a` with the sign of the
/// number of `a` coordinates before it.
fn zk_boundary(cell: Cell) -> Vec<(Cell, i64)> {
    let (b, a) = cell;
    Face::from_bits(b)
        .vertices()
        .map(|v| {
            let bit = 1u64 << (v - 1);
            let before = (a & (bit - 1)).count_ones();
            (
                (b & !bit, a | bit),
                if before.is_multiple_of(2) { 1 } else { -1 },
            )
        })
        .collect()
}

fn cubical_model(complex: &SimplicialComplex) -> CellComplex {
    let m = complex.m();
    let all = Face::full(m).bits();
    let top = complex.dim().max(0) as usize + 1;
    let mut cells = vec![Vec::new(); top + 1];
    for sigma in faces_with_empty(complex) {
        let rest = all & !sigma.bits();
        for eps in Face::from_bits(rest).subsets() {
            cells[sigma.len()].push((sigma.bits(), eps.bits()));
        }
    }
    CellComplex::new(cells, cube_boundary)
}

fn zk_model(complex: &SimplicialComplex) -> CellComplex {
    let m = complex.m();
    let all = Face::full(m).bits();
    let top = 2 * m;
    let mut cells = vec![Vec::new(); top + 1];
    for sigma in faces_with_empty(complex) {
        let rest = all & !sigma.bits();
        for a in Face::from_bits(rest).subsets() {
            cells[2 * sigma.len() + a.len()].push((sigma.bits(), a.bits()));
        }
    }
    CellComplex::new(cells, zk_boundary)
}

/// Number of cells of the cubical model: `Σ_{σ ∈ K ∪ {∅}} 2^{m-|σ|}`.
pub fn rzk_cell_count(complex: &SimplicialComplex) -> u64 {
    faces_with_empty(complex)
        .iter()
        .map(|s| 1u64 << (complex.m() - s.len()))
        .sum()
}

/// Unreduced Betti numbers of the real moment-angle complex, trailing zeros
/// removed.
pub fn rzk_betti_oracle(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    if complex.m() > RZK_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            m: complex.m(),
            cap: RZK_MAX_VERTICES,
        });
    }
    let model = cubical_model(complex);
    Ok(with_field!(field, |f| model.betti(&f)))
}

/// Unreduced Betti numbers of the moment-angle complex, trailing zeros
/// removed.
pub fn zk_betti_oracle(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    if complex.m() > ZK_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            m: complex.m(),
            cap: ZK_MAX_VERTICES,
        });
    }
    let model = zk_model(complex);
    Ok(with_field!(field, |f| model.betti(&f)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    Rzk,
    Zk,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub kind: OracleKind,
    pub field: FieldSpec,
    pub predicted: Vec<usize>,
    pub computed: Vec<usize>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.predicted == self.computed
    }
}

/// Oracle against the prediction from the full-subcomplex table.
pub fn compare(
    complex: &SimplicialComplex,
    kind: OracleKind,
    field: FieldSpec,
    cap: usize,
) -> Result<OracleComparison> {
    let table = crate::hochster::hochster_table(complex, field, cap)?;
    let (mut predicted, computed) = match kind {
        OracleKind::Rzk => (
            crate::hochster::rzk_betti_predicted(&table),
            rzk_betti_oracle(complex, field)?,
        ),
        OracleKind::Zk => (
            crate::hochster::zk_betti(&table),
            zk_betti_oracle(complex, field)?,
        ),
    };
    trim(&mut predicted);
    Ok(OracleComparison {
        kind,
        field,
        predicted,
        computed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary_simplex, cycle};

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::build(2, &[vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn real_moment_angle_examples() {
        let q = FieldSpec::Rational;
        assert_eq!(rzk_betti_oracle(&two_points(), q).unwrap(), vec![1, 1]);
        assert_eq!(rzk_betti_oracle(&cycle(4), q).unwrap(), vec![1, 2, 1]);
        assert_eq!(rzk_cell_count(&cycle(4)), 16 + 4 * 8 + 4 * 4);
        let c = compare(&boundary_simplex(2), OracleKind::Rzk, q, 20).unwrap();
        assert!(c.agrees(), "{c:?}");
        assert_eq!(c.computed, vec![1, 0, 1]);
    }

    #[test]
    fn moment_angle_examples() {
        let q = FieldSpec::Rational;
        assert_eq!(zk_betti_oracle(&two_points(), q).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(
            zk_betti_oracle(&cycle(4), FieldSpec::Prime(2)).unwrap(),
            vec![1, 0, 0, 2, 0, 0, 1]
        );
        let c = compare(&boundary_simplex(3), OracleKind::Zk, q, 20).unwrap();
        assert!(c.agrees(), "{c:?}");
        assert_eq!(c.computed.len(), 8);
    }

    #[test]
    fn budgets() {
        assert_eq!(
            zk_betti_oracle(&cycle(10), FieldSpec::Rational).unwrap_err(),
            Error::TooManyVertices { m: 10, cap: 9 }
        );
    }
}
