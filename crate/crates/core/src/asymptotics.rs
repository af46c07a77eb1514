//! Face-count growth under iterated subdivision and limits of the last strand.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::complex::{FVector, Face, SimplicialComplex, VertexId, VertexLabel};
use crate::error::{Error, Result};
use crate::formulas::{bar_simplex_pdim, m_closed, SubdivisionMode};
use crate::hochster::{betti_witness, graded_betti_table};
use crate::homology::{top_cycle_space, CycleVector};
use crate::linalg::FieldSpec;
use crate::report::{Report, Status};
use crate::subdivision::{barycentric, barycentric_iter, edgewise, interior_vertices};

pub type RationalMatrix = Vec<Vec<BigRational>>;

/// `λ_{i,j}` for `−1 ≤ i, j ≤ d−1`, stored at `[i+1][j+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMatrix {
    pub d: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl LambdaMatrix {
    pub fn get(&self, i: isize, j: isize) -> &BigInt {
        &self.entries[(i + 1) as usize][(j + 1) as usize]
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect()
    }
}

/// Largest `d` accepted by [`lambda_matrix`].
pub const LAMBDA_GATE: usize = 8;

/// Counts interior faces of `sd(Δ_i)` for each `i < d`.
pub fn lambda_matrix(d: usize) -> Result<LambdaMatrix> {
    if d == 0 || d > LAMBDA_GATE {
        return Err(Error::OutOfRange(format!(
            "lambda matrix needs 1 <= d <= {LAMBDA_GATE}"
        )));
    }
    let mut entries = vec![vec![BigInt::zero(); d + 1]; d + 1];
    entries[0][0] = BigInt::one();
    for i in 0..d {
        let simplex = SimplicialComplex::from_facets(&[(0..=i as u32).collect::<Vec<_>>()], i + 1)?;
        let sd = barycentric(&simplex)?;
        let bd = sd.boundary_complex()?;
        let table = sd.faces()?;
        for j in -1..=i as isize {
            let interior = table.of_dim(j).iter().filter(|f| !bd.contains_face(f)).count();
            entries[i + 1][(j + 1) as usize] = BigInt::from(interior);
        }
    }
    Ok(LambdaMatrix { d, entries })
}

/// `f^{sd^r Δ} = f^Δ · Λ_d^r`.
pub fn f_iterate_sd(f: &FVector, r: usize) -> Result<FVector> {
    let d = f.d();
    if r == 0 || d == 0 {
        return Ok(f.clone());
    }
    let lam = lambda_matrix(d)?;
    let mut row: Vec<BigInt> = f.entries().iter().map(|x| BigInt::from(x.clone())).collect();
    for _ in 0..r {
        row = (0..=d)
            .map(|j| (0..=d).map(|i| &row[i] * &lam.entries[i][j]).sum())
            .collect();
    }
    Ok(FVector::new(
        row.into_iter()
            .map(|x| x.to_biguint().expect("face counts are nonnegative"))
            .collect(),
    ))
}

/// `Λ_d = P D P^{-1}` with exact rational `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub d: usize,
    pub p: RationalMatrix,
    pub diag: Vec<BigInt>,
    pub p_inv: RationalMatrix,
}

impl EigenData {
    pub fn p_inv_last_row(&self) -> &[BigRational] {
        &self.p_inv[self.d]
    }

    /// `P · D · P^{-1}`.
    pub fn reconstruct(&self) -> RationalMatrix {
        let pd: RationalMatrix = self
            .p
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.diag)
                    .map(|(x, l)| x * BigRational::from_integer(l.clone()))
                    .collect()
            })
            .collect();
        mat_mul(&pd, &self.p_inv)
    }
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

/// Inverse by Gauss–Jordan elimination; `None` when singular.
pub fn mat_inverse(a: &RationalMatrix) -> Option<RationalMatrix> {
    let n = a.len();
    let mut m: RationalMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|k| {
                if k == i {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot_row = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Kernel basis from the reduced row echelon form: one vector per free
/// column, with a 1 in that column.
pub fn kernel_rref(a: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[k].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// Right eigenvectors grouped by eigenvalue in diagonal order
/// (`0!, 1!, …, d!`); the repeated eigenvalue 1 gets its full kernel basis.
pub fn eigendecompose(lam: &LambdaMatrix) -> Result<EigenData> {
    let n = lam.d + 1;
    let a = lam.to_rational();
    let mut distinct: Vec<BigInt> = Vec::new();
    for k in 0..n {
        if !distinct.contains(&lam.entries[k][k]) {
            distinct.push(lam.entries[k][k].clone());
        }
    }
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for ev in &distinct {
        let shifted: RationalMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            &a[i][j] - BigRational::from_integer(ev.clone())
                        } else {
                            a[i][j].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        for v in kernel_rref(&shifted) {
            columns.push(v);
            diag.push(ev.clone());
        }
    }
    if columns.len() != n {
        return Err(Error::Diagonalization(format!(
            "found {} eigenvectors for a {n}x{n} matrix",
            columns.len()
        )));
    }
    let p: RationalMatrix = (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let p_inv = mat_inverse(&p).ok_or_else(|| Error::Diagonalization("eigenvectors are dependent".into()))?;
    Ok(EigenData {
        d: lam.d,
        p,
        diag,
        p_inv,
    })
}

/// Coefficients of `p_∞^Δ(t) = (f P) M P^{-1} t`, from `t^d` down to `t^0`.
pub fn limit_polynomial_with(f: &FVector, eig: &EigenData) -> Result<Vec<BigRational>> {
    let d = f.d();
    if d != eig.d || d < 2 {
        return Err(Error::OutOfRange(format!(
            "limit polynomial needs 2 <= d matching the eigen data (d={d})"
        )));
    }
    let fr: Vec<BigRational> = f
        .entries()
        .iter()
        .map(|x| BigRational::from_integer(BigInt::from(x.clone())))
        .collect();
    // M keeps only the last coordinate of f P
    let last = fr
        .iter()
        .zip(&eig.p)
        .fold(BigRational::zero(), |acc, (x, row)| acc + x * &row[d]);
    Ok(eig.p_inv[d].iter().map(|y| &last * y).collect())
}

pub fn limit_polynomial(complex: &SimplicialComplex) -> Result<Vec<BigRational>> {
    let f = complex.f_vector()?;
    let eig = eigendecompose(&lambda_matrix(f.d())?)?;
    limit_polynomial_with(&f, &eig)
}

/// `p^{-1}_{d−1,2}`: last row, second column of `P_d^{-1}`.
pub fn limit_vertex_constant(d: usize) -> Result<BigRational> {
    let eig = eigendecompose(&lambda_matrix(d)?)?;
    Ok(eig.p_inv[d][1].clone())
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// `f_0(Δ^{⟨r⟩}) = Σ_{i ≥ 1} f_{i−1} · C(r−1, i−1)`.
pub fn f0_edgewise(f: &FVector, r: u64) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::OutOfRange("edgewise needs r >= 1".into()));
    }
    Ok((1..=f.d())
        .map(|i| f.get(i as isize - 1) * binomial(r - 1, i as u64 - 1))
        .sum())
}

/// Enumeration bound `p^k` for [`minimal_top_cycle`].
pub const CYCLE_GATE: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalCycle {
    pub cycle: CycleVector,
    pub induced: SimplicialComplex,
    pub f: FVector,
}

/// Reverse-indexed f-vector key: `(f_{d−1}, f_{d−2}, …, f_{−1})`.
fn reverse_key(f: &FVector) -> Vec<BigUint> {
    f.entries().iter().rev().cloned().collect()
}

/// Enumerates the nonzero cycles up to scalars and keeps one whose support
/// complex has the smallest f-vector compared from `f_{d−1}` downward;
/// ties go to the lexicographically smallest support.
pub fn minimal_top_cycle(complex: &SimplicialComplex, field: FieldSpec) -> Result<MinimalCycle> {
    let all = enumerate_top_cycles(complex, field)?;
    all.into_iter()
        .min_by(|a, b| {
            reverse_key(&a.f)
                .cmp(&reverse_key(&b.f))
                .then_with(|| a.cycle.support.cmp(&b.cycle.support))
        })
        .ok_or_else(|| Error::NoTopHomology(field.to_string()))
}

/// Every nonzero top cycle with first nonzero basis coefficient 1.
pub fn enumerate_top_cycles(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<MinimalCycle>> {
    let p = match field {
        FieldSpec::Prime(p) => p as u64,
        FieldSpec::Rationals => return Err(Error::UnsupportedField("cycle enumeration needs a prime field".into())),
    };
    let basis = top_cycle_space(complex, field)?;
    let k = basis.len();
    if k == 0 {
        return Err(Error::NoTopHomology(field.to_string()));
    }
    let size = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > CYCLE_GATE {
        return Err(Error::GateExceeded {
            what: "cycle enumeration",
            size,
            gate: CYCLE_GATE,
        });
    }
    let top = complex.faces()?.of_dim(complex.dim()).to_vec();
    let index = |f: &Face| top.binary_search(f).expect("top face");
    let dense: Vec<Vec<u64>> = basis
        .iter()
        .map(|c| {
            let mut v = vec![0u64; top.len()];
            for (f, x) in c.support.iter().zip(&c.coefficients) {
                let m = BigInt::from(p);
                v[index(f)] = ((x % &m + &m) % &m).to_u64().expect("reduced mod p");
            }
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; k];
    for lead in 0..k {
        // coefficients before `lead` are zero, at `lead` one, after it free
        let free = k - lead - 1;
        let count = (p as u128).pow(free as u32);
        for code in 0..count {
            coeffs.iter_mut().for_each(|c| *c = 0);
            coeffs[lead] = 1;
            let mut rest = code;
            for c in coeffs[lead + 1..].iter_mut() {
                *c = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            let mut v = vec![0u64; top.len()];
            for (c, b) in coeffs.iter().zip(&dense) {
                if *c != 0 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + c * y) % p;
                    }
                }
            }
            let (support, coefficients): (Vec<Face>, Vec<BigInt>) = v
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| (top[i].clone(), BigInt::from(*x)))
                .unzip();
            let cycle = CycleVector {
                field,
                support,
                coefficients,
            };
            let induced = cycle.support_complex(complex.n());
            let f = induced.f_vector()?;
            out.push(MinimalCycle { cycle, induced, f });
        }
    }
    Ok(out)
}

/// `1 − f_{d−1}(σ̃) / f_{d−1}(Δ)` for a minimal top cycle `σ`.
pub fn last_strand_limit(complex: &SimplicialComplex, field: FieldSpec) -> Result<BigRational> {
    let m = minimal_top_cycle(complex, field)?;
    let top = complex.dim();
    let num = BigInt::from(m.f.get(top));
    let den = BigInt::from(complex.f_vector()?.get(top));
    Ok(BigRational::one() - BigRational::new(num, den))
}

/// A sphere with `c(q−p)` facets plus `c·p` facets stacked over one ridge.
pub fn build_limit_example(d: usize, p: usize, q: usize, c: usize) -> Result<SimplicialComplex> {
    if p >= q {
        return Err(Error::Unrealizable(format!("need 0 <= p < q (p={p}, q={q})")));
    }
    let sphere_facets = c * (q - p);
    let sphere = match d {
        2 if sphere_facets >= 3 => {
            crate::fixtures::standard_complex(&crate::fixtures::StandardSpec::Cycle(sphere_facets))?
        }
        3 if sphere_facets >= 4 && sphere_facets.is_multiple_of(2) => {
            crate::fixtures::standard_complex(&crate::fixtures::StandardSpec::StackedSphere {
                dim: 2,
                facets: sphere_facets,
            })?
        }
        2 | 3 => {
            return Err(Error::Unrealizable(format!(
                "a {}-sphere with {sphere_facets} facets",
                d - 1
            )))
        }
        _ => {
            return Err(Error::Unrealizable(format!(
                "limit examples exist here for d in {{2,3}}, got {d}"
            )))
        }
    };
    let first = &sphere.facets()[0];
    let ridge = &first.vertices()[..d - 1];
    crate::fixtures::stacked_attach(&sphere, c * p, ridge)
}

/// Smallest scale making [`build_limit_example`] realizable.
pub fn default_scale(d: usize, p: usize, q: usize) -> usize {
    let gap = q.saturating_sub(p).max(1);
    (1..)
        .find(|&c| match d {
            2 => c * gap >= 3,
            _ => c * gap >= 4 && (c * gap).is_multiple_of(2),
        })
        .expect("some scale works")
}

/// The subdivision of `Δ` together with the vertices of the subdivided
/// support complex `σ̃`.
pub fn subdivided_support(
    complex: &SimplicialComplex,
    support: &SimplicialComplex,
    mode: SubdivisionMode,
) -> Result<(SimplicialComplex, Vec<VertexId>)> {
    match mode {
        SubdivisionMode::Barycentric(r) => {
            let mut cur = complex.clone();
            // members[v]: vertex v of the current subdivision lies in the subdivided support
            let mut members: Vec<bool> = (0..cur.n())
                .map(|v| support.contains_face(&Face::from_sorted(vec![v as VertexId])))
                .collect();
            let base_table = support.faces()?;
            for round in 0..r {
                let next = barycentric(&cur)?;
                members = (0..next.n() as VertexId)
                    .map(|v| match next.label(v) {
                        Some(VertexLabel::Set(s)) if round == 0 => base_table.contains(&Face::from_sorted(s.clone())),
                        Some(VertexLabel::Set(s)) => s.iter().all(|&u| members[u as usize]),
                        _ => false,
                    })
                    .collect();
                cur = next;
            }
            let v = (0..cur.n() as VertexId).filter(|&v| members[v as usize]).collect();
            Ok((cur, v))
        }
        SubdivisionMode::Edgewise(r) => {
            let sub = edgewise(complex, r)?;
            let table = support.faces()?;
            let v = (0..sub.n() as VertexId)
                .filter(|&v| match sub.label(v) {
                    Some(VertexLabel::Lattice(a)) => table.contains(&Face::from_sorted(
                        a.iter()
                            .enumerate()
                            .filter(|(_, &x)| x > 0)
                            .map(|(i, _)| i as VertexId)
                            .collect(),
                    )),
                    _ => false,
                })
                .collect();
            Ok((sub, v))
        }
    }
}

/// Checks `β_{i,i+d} ≠ 0` for `#V_r^σ − d ≤ i ≤ pdim` on the subdivision,
/// with a full table inside the gate and a growing chain of witnesses
/// `V_r^σ ⊆ W` otherwise. Zeros below the window are only recorded.
pub fn verify_last_strand_small_r(
    complex: &SimplicialComplex,
    mode: SubdivisionMode,
    field: FieldSpec,
    vertex_gate: usize,
) -> Result<Report> {
    let d = complex.d();
    let sigma = minimal_top_cycle_any(complex, field)?;
    let (sub, v) = subdivided_support(complex, &sigma, mode)?;
    let name = format!("last strand {mode:?}");
    let mut report = Report::new(name.clone());
    let lo = v.len() - d;
    if sub.n() <= vertex_gate {
        let table = graded_betti_table(&sub, field, vertex_gate)?;
        let pdim = table.pdim()?;
        let missing: Vec<usize> = (lo..=pdim).filter(|&i| table.get(i, d) == 0).collect();
        report.check(
            format!("{name}: window {lo}..={pdim}"),
            missing.is_empty(),
            if missing.is_empty() {
                "all nonzero".to_string()
            } else {
                format!("zero at {missing:?}")
            },
        );
        let below: Vec<String> = (0..lo).map(|i| format!("{i}:{}", table.get(i, d))).collect();
        if !below.is_empty() {
            report.push(format!("{name}: below window"), Status::Observed, below.join(" "));
        }
    } else {
        let mut w = v.clone();
        let rest: Vec<VertexId> = (0..sub.n() as VertexId).filter(|u| !v.contains(u)).collect();
        let mut missing = Vec::new();
        for step in 0..=rest.len() {
            if step > 0 {
                w.push(rest[step - 1]);
            }
            let hit = betti_witness(&sub, field, &w)?
                .iter()
                .any(|&(i, j, _)| j == d && i == w.len() - d);
            if !hit {
                missing.push(w.len() - d);
            }
        }
        report.check(
            format!("{name}: witness chain {lo}..={}", sub.n() - d),
            missing.is_empty(),
            if missing.is_empty() {
                "all certified".to_string()
            } else {
                format!("uncertified {missing:?}")
            },
        );
    }
    Ok(report)
}

/// Support complex of a minimal top cycle; over the rationals the unique
/// cycle of a one-dimensional cycle space is used.
fn minimal_top_cycle_any(complex: &SimplicialComplex, field: FieldSpec) -> Result<SimplicialComplex> {
    match field {
        FieldSpec::Prime(_) => Ok(minimal_top_cycle(complex, field)?.induced),
        FieldSpec::Rationals => {
            let basis = top_cycle_space(complex, field)?;
            match basis.len() {
                0 => Err(Error::NoTopHomology(field.to_string())),
                1 => Ok(basis[0].support_complex(complex.n())),
                _ => Err(Error::UnsupportedField(
                    "minimal cycles over the rationals are not searched".into(),
                )),
            }
        }
    }
}

/// Interior vertices of `sd^3(Δ_{d−1})`.
pub fn n_of_d(d: usize) -> Result<u64> {
    if d == 0 {
        return Err(Error::OutOfRange("d >= 1".into()));
    }
    let simplex = SimplicialComplex::from_facets(&[(0..d as u32).collect::<Vec<_>>()], d)?;
    let sd3 = barycentric_iter(&simplex, 3)?;
    Ok(interior_vertices(&sd3)?.len() as u64)
}

/// `n_of_d` through f-vector transfer: vertices of `sd^3` of the simplex minus those of its boundary.
pub fn n_of_d_from_f(d: usize) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::OutOfRange("d >= 2".into()));
    }
    let simplex: Vec<u64> = (0..=d)
        .map(|k| binomial(d as u64, k as u64).to_u64().expect("small"))
        .collect();
    let boundary: Vec<u64> = simplex[..d].to_vec();
    let a = f_iterate_sd(&FVector::from(simplex), 3)?.get(0);
    let b = f_iterate_sd(&FVector::from(boundary), 3)?.get(0);
    Ok(BigInt::from(a) - BigInt::from(b))
}

/// Predicted window `lo ≤ i ≤ hi` of nonvanishing `β_{i,i+j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub j: usize,
    pub lo: i128,
    pub hi: i128,
}

/// Windows for `sd^r Δ` (`r ≥ 3`) or `Δ^{⟨r⟩}` (`r ≥ 2d`), strands `1..d`.
/// The upper ends use `pdim + depth = #vertices` of the subdivision.
pub fn asymptotic_window(complex: &SimplicialComplex, mode: SubdivisionMode) -> Result<Vec<Window>> {
    let d = complex.d();
    if d < 2 {
        return Err(Error::OutOfRange("windows need dim >= 1".into()));
    }
    let f = complex.f_vector()?;
    let pow = (1i128 << d) - d as i128 - 1;
    let (n_r, offset) = match mode {
        SubdivisionMode::Barycentric(r) => {
            if r < 3 {
                return Err(Error::OutOfRange("barycentric windows need r >= 3".into()));
            }
            let n_r = f_iterate_sd(&f, r as usize)?.get(0);
            let nd = if d <= 4 {
                BigInt::from(n_of_d(d)?)
            } else {
                n_of_d_from_f(d)?
            };
            (BigInt::from(n_r), -nd)
        }
        SubdivisionMode::Edgewise(r) => {
            if (r as usize) < 2 * d {
                return Err(Error::OutOfRange("edgewise windows need r >= 2d".into()));
            }
            let n_r = f0_edgewise(&f, r as u64)?;
            let c = BigInt::from(binomial(2 * d as u64 - 1, d as u64 - 1))
                - BigInt::from(d)
                - BigInt::from(binomial(3 * d as u64 - 1, d as u64 - 1));
            (BigInt::from(n_r), c)
        }
    };
    let base = (n_r + offset)
        .to_i128()
        .ok_or_else(|| Error::OutOfRange("window end overflows".into()))?;
    let bar = matches!(mode, SubdivisionMode::Barycentric(_));
    (1..d)
        .map(|j| {
            let (lo, extra) = if j == d - 1 {
                (pow, pow)
            } else if 2 * j <= d {
                let extra = if bar { pow - m_closed(d, d - j - 1)? as i128 } else { 0 };
                (j as i128, extra)
            } else {
                let extra = if bar {
                    (1i128 << d) - 2 * d as i128 + j as i128
                } else {
                    0
                };
                (m_closed(d, j)? as i128, extra)
            };
            let hi = if bar { base + extra } else { base };
            Ok(Window { j, lo, hi })
        })
        .collect()
}

/// `2^d − d − 1`, re-exported for window consumers.
pub fn last_strand_start(d: usize) -> usize {
    bar_simplex_pdim(d)
}
