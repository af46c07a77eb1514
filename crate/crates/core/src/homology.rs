//! Reduced simplicial homology over a field.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, FieldSpec, SparseMatrix};

/// Signed incidence matrix from `k`-faces to `(k-1)`-faces.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub k: usize,
    pub row_faces: Vec<Face>,
    pub col_faces: Vec<Face>,
    pub matrix: SparseMatrix,
}

impl BoundaryMatrix {
    pub fn rank(&self, field: FieldSpec) -> usize {
        linalg::rank(&self.matrix, field)
    }
}

/// `∂_k : C_k → C_{k-1}`, where `C_k` is spanned by the `k`-faces and
/// `C_{-1}` by the empty face. Removing the vertex in position `t` carries
/// sign `(-1)^t`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> Result<BoundaryMatrix> {
    let table = complex.faces()?;
    let rows = table.of_dim(k as isize - 1).to_vec();
    let cols = table.of_dim(k as isize).to_vec();
    let matrix = SparseMatrix::new(
        rows.len(),
        cols.iter()
            .map(|f| {
                let mut col: Vec<(usize, i64)> = f
                    .vertices()
                    .iter()
                    .enumerate()
                    .map(|(t, &v)| {
                        let idx = table.index_of(&f.without(v)).expect("complex is downward closed");
                        (idx, if t % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect(),
    );
    Ok(BoundaryMatrix {
        k,
        row_faces: rows,
        col_faces: cols,
        matrix,
    })
}

/// Reduced Betti numbers `(b̃_{-1}, …, b̃_{dim})`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    let table = complex.faces()?;
    let top = complex.dim();
    // ranks[k] = rank ∂_k for k = 0..=top+1; ∂_{top+1} is empty
    let ranks: Vec<usize> = (0..=(top + 1) as usize)
        .map(|k| boundary_matrix(complex, k).map(|b| b.rank(field)))
        .collect::<Result<_>>()?;
    Ok((-1..=top)
        .map(|k| {
            let dim_ck = table.of_dim(k).len();
            let rank_out = if k >= 0 { ranks[k as usize] } else { 0 };
            let rank_in = ranks.get((k + 1) as usize).copied().unwrap_or(0);
            dim_ck - rank_out - rank_in
        })
        .collect())
}

/// `b̃_k` looked up in the vector from [`reduced_betti`]; zero out of range.
pub fn betti_at(b: &[usize], k: isize) -> usize {
    if k < -1 {
        return 0;
    }
    b.get((k + 1) as usize).copied().unwrap_or(0)
}

/// Reduced homology from face masks grouped by size; `by_size[s]` lists the
/// faces with `s` vertices in increasing order.
pub(crate) fn reduced_betti_masks(by_size: &[Vec<u64>], field: FieldSpec) -> Vec<usize> {
    let top = by_size.iter().rposition(|v| !v.is_empty()).unwrap_or(0);
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows = &by_size[s - 1];
        let cols = by_size[s]
            .iter()
            .map(|&m| {
                let mut col = Vec::with_capacity(s);
                let mut rest = m;
                let mut t = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let idx = rows.binary_search(&(m ^ bit)).expect("downward closed");
                    col.push((idx, if t % 2 == 0 { 1 } else { -1 }));
                    t += 1;
                }
                col.sort_unstable_by_key(|e: &(usize, i64)| e.0);
                col
            })
            .collect();
        ranks[s] = linalg::rank(&SparseMatrix::new(rows.len(), cols), field);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// A top-dimensional cycle. Over a prime field the coefficients lie in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleVector {
    pub field: FieldSpec,
    /// Faces with nonzero coefficient, ascending.
    pub support: Vec<Face>,
    pub coefficients: Vec<BigInt>,
}

impl CycleVector {
    /// Downward closure of the support on the ambient ground set.
    pub fn support_complex(&self, n: usize) -> SimplicialComplex {
        SimplicialComplex::from_faces_unchecked(self.support.clone(), n)
    }
}

/// Basis of `ker ∂_{d-1}`. There are no `d`-faces, so this is `H̃_{d-1}`.
pub fn top_cycle_space(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CycleVector>> {
    let top = complex.dim();
    if top < 0 {
        return Err(Error::OutOfRange("complex has no vertices".into()));
    }
    let b = boundary_matrix(complex, top as usize)?;
    Ok(linalg::kernel_basis(&b.matrix, field)
        .into_iter()
        .map(|v| {
            let (support, coefficients) = v
                .into_iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (b.col_faces[c].clone(), x))
                .unzip();
            CycleVector {
                field,
                support,
                coefficients,
            }
        })
        .collect())
}
