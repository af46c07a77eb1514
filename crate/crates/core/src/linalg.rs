//! Exact rank and kernel computations on sparse integer matrices.
//!
//! Columns are reduced against earlier columns sharing their lowest nonzero
//! row. Over the rationals the elimination is fraction-free: `i64` with
//! overflow checks first, arbitrary precision when that overflows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    /// Builds `GF(p)`, rejecting non-primes.
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::UnsupportedField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rationals" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|x| x.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::UnsupportedField(s.to_string()))?;
        let p: u32 = digits.parse().map_err(|_| Error::UnsupportedField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while (k as u64) * (k as u64) <= p as u64 {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Sparse integer column: `(row, value)` pairs, rows strictly increasing,
/// values nonzero.
pub type SparseColumn = Vec<(usize, i64)>;

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<SparseColumn>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: Vec<SparseColumn>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| e.0 < rows)));
        SparseMatrix { rows, cols }
    }

    pub fn identity(k: usize) -> Self {
        SparseMatrix::new(k, (0..k).map(|i| vec![(i, 1)]).collect())
    }

    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMatrix::new(rows, vec![Vec::new(); ncols])
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols.len()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// `self · other` over the integers.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.rows);
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut acc = vec![0i64; self.rows];
                for &(k, v) in oc {
                    for &(r, w) in &self.cols[k] {
                        acc[r] += v * w;
                    }
                }
                acc.into_iter().enumerate().filter(|(_, x)| *x != 0).collect()
            })
            .collect();
        SparseMatrix::new(self.rows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// Exact rank of `m` over `field`.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => {
            let cols = m.cols.iter().map(|c| to_mod(c, p as u64)).collect();
            reduce_mod(cols, p as u64, 0).0
        }
        FieldSpec::Rationals => {
            let cols: Vec<Vec<(usize, i64)>> = m.cols.clone();
            match reduce_ff(cols, 0) {
                Some((r, _)) => r,
                None => {
                    let big = m.cols.iter().map(to_big).collect();
                    reduce_ff(big, 0).expect("big integers do not overflow").0
                }
            }
        }
    }
}

/// A kernel vector over the field: `(column index, value)` pairs. Over a prime
/// field values lie in `0..p`; over the rationals the vector is primitive.
pub type KernelVector = Vec<(usize, BigInt)>;

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel_basis(m: &SparseMatrix, field: FieldSpec) -> Vec<KernelVector> {
    let k = m.ncols();
    // real rows shift past k identity rows so pivots never land on the identity part
    let augmented = |c: &SparseColumn, j: usize| -> SparseColumn {
        let mut out = vec![(j, 1i64)];
        out.extend(c.iter().map(|&(r, v)| (r + k, v)));
        out
    };
    let cols: Vec<SparseColumn> = m.cols.iter().enumerate().map(|(j, c)| augmented(c, j)).collect();
    let finish = |zero: Vec<Vec<(usize, BigInt)>>| -> Vec<KernelVector> {
        zero.into_iter()
            .map(|c| c.into_iter().filter(|(r, _)| *r < k).collect())
            .collect()
    };
    match field {
        FieldSpec::Prime(p) => {
            let cols = cols.iter().map(|c| to_mod(c, p as u64)).collect();
            let (_, zero) = reduce_mod(cols, p as u64, k);
            finish(
                zero.into_iter()
                    .map(|c| c.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
                    .collect(),
            )
        }
        FieldSpec::Rationals => {
            let zero = match reduce_ff(cols.clone(), k) {
                Some((_, z)) => z
                    .into_iter()
                    .map(|c| c.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
                    .collect(),
                None => {
                    let big = cols.iter().map(to_big).collect();
                    reduce_ff(big, k).expect("big integers do not overflow").1
                }
            };
            finish(zero).into_iter().map(normalize_primitive).collect()
        }
    }
}

fn normalize_primitive(mut v: KernelVector) -> KernelVector {
    let g = v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if v.first().is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}

fn to_mod(c: &SparseColumn, p: u64) -> Vec<(usize, u64)> {
    c.iter()
        .filter_map(|&(r, v)| {
            let x = v.rem_euclid(p as i64) as u64;
            (x != 0).then_some((r, x))
        })
        .collect()
}

fn to_big(c: &SparseColumn) -> Vec<(usize, BigInt)> {
    c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0 mod p
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Column reduction over `GF(p)`. Rows below `threshold` never become
/// pivots; columns whose entries all lie below it are returned as reduced.
fn reduce_mod(mut cols: Vec<Vec<(usize, u64)>>, p: u64, threshold: usize) -> (usize, Vec<Vec<(usize, u64)>>) {
    use std::collections::HashMap;
    let mut pivots: HashMap<usize, usize> = HashMap::new();
    let mut rank = 0;
    let mut zero = Vec::new();
    for j in 0..cols.len() {
        let mut col = std::mem::take(&mut cols[j]);
        while let Some(&(low, a)) = col.last() {
            if low < threshold {
                break;
            }
            match pivots.get(&low) {
                Some(&q) => {
                    let piv = &cols[q];
                    let b = piv.last().expect("pivot column is nonzero").1;
                    // col -= (a / b) * piv
                    let factor = a * inv_mod(b, p) % p;
                    col = axpy_mod(&col, piv, p - factor, p);
                }
                None => break,
            }
        }
        match col.last() {
            Some(&(low, _)) if low >= threshold => {
                pivots.insert(low, j);
                rank += 1;
            }
            _ => zero.push(col.clone()),
        }
        cols[j] = col;
    }
    (rank, zero)
}

fn axpy_mod(x: &[(usize, u64)], y: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        let take_x = k >= y.len() || (i < x.len() && x[i].0 < y[k].0);
        let take_y = i >= x.len() || (k < y.len() && y[k].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[k].0, y[k].1 * f % p));
            k += 1;
        } else {
            let v = (x[i].1 + y[k].1 * f) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

/// Integer entries that may or may not overflow.
trait FfScalar: Clone + Integer + Signed {
    fn mul_checked(&self, o: &Self) -> Option<Self>;
    fn sub_checked(&self, o: &Self) -> Option<Self>;
}

impl FfScalar for i64 {
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
}

impl FfScalar for BigInt {
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

type SparseCols<T> = Vec<Vec<(usize, T)>>;

/// Fraction-free column reduction over the integers; `None` on overflow.
fn reduce_ff<T: FfScalar>(mut cols: SparseCols<T>, threshold: usize) -> Option<(usize, SparseCols<T>)> {
    use std::collections::HashMap;
    let mut pivots: HashMap<usize, usize> = HashMap::new();
    let mut rank = 0;
    let mut zero = Vec::new();
    for j in 0..cols.len() {
        let mut col = std::mem::take(&mut cols[j]);
        loop {
            let Some((low, a)) = col.last().cloned() else { break };
            if low < threshold {
                break;
            }
            let Some(&q) = pivots.get(&low) else { break };
            let piv = &cols[q];
            let b = piv.last().expect("pivot column is nonzero").1.clone();
            // col <- (b/g) col - (a/g) piv, clearing the entry at `low`
            let g = a.gcd(&b);
            let (sa, sb) = (a.div_floor(&g), b.div_floor(&g));
            col = combine(&col, &sb, piv, &sa)?;
            primitive(&mut col);
        }
        match col.last() {
            Some((low, _)) if *low >= threshold => {
                pivots.insert(*low, j);
                rank += 1;
            }
            _ => zero.push(col.clone()),
        }
        cols[j] = col;
    }
    Some((rank, zero))
}

/// `s·x − t·y`, dropping zeros.
fn combine<T: FfScalar>(x: &[(usize, T)], s: &T, y: &[(usize, T)], t: &T) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        if k >= y.len() || (i < x.len() && x[i].0 < y[k].0) {
            out.push((x[i].0, x[i].1.mul_checked(s)?));
            i += 1;
        } else if i >= x.len() || y[k].0 < x[i].0 {
            out.push((y[k].0, T::zero().sub_checked(&y[k].1.mul_checked(t)?)?));
            k += 1;
        } else {
            let v = x[i].1.mul_checked(s)?.sub_checked(&y[k].1.mul_checked(t)?)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    Some(out)
}

fn primitive<T: FfScalar>(col: &mut [(usize, T)]) {
    let g = col.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in col.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

/// Rank over GF(2) with bit-packed columns.
fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.rows.div_ceil(64).max(1);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x.rem_euclid(2) == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = highest_bit(&v) {
            match &basis[low] {
                Some(b) => {
                    for (a, b) in v.iter_mut().zip(b) {
                        *a ^= b;
                    }
                }
                None => {
                    basis[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}
