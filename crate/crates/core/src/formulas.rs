//! Closed forms for strand endpoints and predicted Betti strand shapes.

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, VertexId, VertexLabel};
use crate::error::{Error, Result};
use crate::hochster::{graded_betti_table, regularity, BettiTable};
use crate::homology::{betti_at, reduced_betti};
use crate::linalg::FieldSpec;
use crate::report::{Report, Status};
use crate::subdivision::{barycentric, edgewise};

fn check_dj(d: usize, j: usize) -> Result<()> {
    if j == 0 || j >= d || d > 60 {
        return Err(Error::OutOfRange(format!("need 1 <= j <= d-1 (d={d}, j={j})")));
    }
    Ok(())
}

/// `m_j(d)`: `j` when `2j ≤ d`, otherwise `2^{a+2}(c+d−j) − 2d + j` with
/// `2j − d = a(d−j) + c`, `0 ≤ c < d−j`.
pub fn m_closed(d: usize, j: usize) -> Result<u64> {
    check_dj(d, j)?;
    if 2 * j <= d {
        return Ok(j as u64);
    }
    let q = d - j;
    let (a, c) = ((2 * j - d) / q, (2 * j - d) % q);
    let m = (1u128 << (a + 2)) * (c + q) as u128 + j as u128 - 2 * d as u128;
    u64::try_from(m).map_err(|_| Error::OutOfRange(format!("m_{j}({d}) overflows")))
}

/// Minimum of `Σ (2^{i_ℓ+2} − 2) − j` over all tuples `(i_1, …, i_r)` of
/// nonnegative integers with `Σ i_ℓ + r − 1 = j − 1` and `Σ i_ℓ + 2r ≤ d`.
pub fn m_bruteforce(d: usize, j: usize) -> Result<u64> {
    check_dj(d, j)?;
    let mut best: Option<u64> = None;
    for r in 1..=j {
        let total = j - r;
        if total + 2 * r > d {
            continue;
        }
        let mut tuple = vec![0usize; r];
        ordered_tuples(total, 0, &mut tuple, &mut |t| {
            let s: u64 = t.iter().map(|&i| (1u64 << (i + 2)) - 2).sum();
            best = Some(best.map_or(s, |b| b.min(s)));
        });
    }
    let best = best.ok_or_else(|| Error::Hypotheses(format!("no admissible tuple for d={d}, j={j}")))?;
    Ok(best - j as u64)
}

fn ordered_tuples(remaining: usize, pos: usize, tuple: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if pos + 1 == tuple.len() {
        tuple[pos] = remaining;
        f(tuple);
        return;
    }
    for x in 0..=remaining {
        tuple[pos] = x;
        ordered_tuples(remaining - x, pos + 1, tuple, f);
    }
}

/// `2^d − d − 1`, the projective dimension of `K[sd(Δ_{d−1})]`.
pub fn bar_simplex_pdim(d: usize) -> usize {
    (1usize << d) - d - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Zero,
    Nonzero,
    Unknown,
}

/// Predicted shape of strand `j` for `i = 0..=pdim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandPrediction {
    pub j: usize,
    pub claims: Vec<Claim>,
    pub source: &'static str,
}

impl StrandPrediction {
    fn new(j: usize, pdim: usize, source: &'static str, default: Claim) -> Self {
        StrandPrediction {
            j,
            claims: vec![default; pdim + 1],
            source,
        }
    }

    fn set(&mut self, lo: usize, hi: usize, c: Claim) {
        for i in lo..=hi.min(self.claims.len().saturating_sub(1)) {
            self.claims[i] = c;
        }
    }

    pub fn claim(&self, i: usize) -> Claim {
        self.claims.get(i).copied().unwrap_or(Claim::Zero)
    }

    /// Indices carrying the given claim.
    pub fn indices(&self, c: Claim) -> Vec<usize> {
        (0..self.claims.len()).filter(|&i| self.claims[i] == c).collect()
    }
}

/// Strand `j` of `K[sd(Δ_{d−1})]`.
pub fn predict_strand_bar(d: usize, j: usize) -> Result<StrandPrediction> {
    check_dj(d, j)?;
    let p = bar_simplex_pdim(d);
    let mut pred = StrandPrediction::new(j, p, "barycentric simplex", Claim::Zero);
    if j == d - 1 {
        pred.set(p, p, Claim::Nonzero);
        return Ok(pred);
    }
    let top = (1usize << d) + j - 2 * d;
    if 2 * j <= d {
        let hi = p - m_closed(d, d - j - 1)? as usize;
        pred.set(j, hi, Claim::Nonzero);
        if hi < top {
            pred.set(hi + 1, top, Claim::Unknown);
        }
    } else {
        let m = m_closed(d, j)? as usize;
        if m > j {
            pred.set(j, m - 1, Claim::Unknown);
        }
        pred.set(m, top, Claim::Nonzero);
    }
    Ok(pred)
}

/// Strand `j` of `K[Δ_{d−1}^{⟨r⟩}]` for `r ≥ d`; `n_vertices` is the
/// number of vertices of the subdivision.
pub fn predict_strand_edgewise(d: usize, j: usize, r: usize, n_vertices: usize) -> Result<StrandPrediction> {
    check_dj(d, j)?;
    if r < d {
        return Err(Error::OutOfRange(format!("no prediction for r={r} < d={d}")));
    }
    if n_vertices < d {
        return Err(Error::OutOfRange("fewer vertices than d".into()));
    }
    let pdim = n_vertices - d;
    if 2 * j <= d {
        let mut pred = StrandPrediction::new(j, pdim, "edgewise simplex", Claim::Nonzero);
        pred.set(0, j - 1, Claim::Zero);
        Ok(pred)
    } else if j <= d - 2 {
        let mut pred = StrandPrediction::new(j, pdim, "edgewise simplex", Claim::Nonzero);
        pred.set(0, j - 1, Claim::Zero);
        let m = m_closed(d, j)? as usize;
        if m > j {
            pred.set(j, m - 1, Claim::Unknown);
        }
        Ok(pred)
    } else {
        let lo = bar_simplex_pdim(d);
        let mut pred = StrandPrediction::new(j, pdim, "edgewise simplex", Claim::Nonzero);
        if lo > 0 {
            pred.set(0, lo - 1, Claim::Unknown);
        }
        Ok(pred)
    }
}

/// Largest degree of a minimal non-face of `Δ^{⟨r⟩}`, `r ≥ 2`.
pub fn predict_t1_edgewise(complex: &SimplicialComplex, r: u32) -> Result<usize> {
    if r < 2 {
        return Err(Error::OutOfRange("prediction needs r >= 2".into()));
    }
    if complex.is_full_simplex() || complex.is_flag()? {
        return Ok(2);
    }
    let mnf = complex.minimal_non_faces()?;
    let t = mnf.iter().map(Face::len).max().unwrap_or(0);
    let verts = complex.vertices();
    let cone_exists = mnf.iter().filter(|f| f.len() == t).any(|f| {
        verts.iter().filter(|v| !f.contains(**v)).any(|&v| {
            f.vertices()
                .iter()
                .all(|&u| complex.contains_face(&f.without(u).with(v)))
        })
    });
    Ok(if cone_exists { t } else { t - 1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubdivisionMode {
    /// Iterated barycentric subdivision, `r ≥ 1` times.
    Barycentric(u32),
    Edgewise(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegPrediction {
    pub value: usize,
    /// `false` when only `reg ≥ value` is claimed.
    pub exact: bool,
}

/// `w(Δ, K)`: `d` when `H̃_{d−1}(Δ; K) ≠ 0`, else `d − 1`.
pub fn w_invariant(complex: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    let d = complex.d();
    let b = reduced_betti(complex, field)?;
    Ok(if betti_at(&b, d as isize - 1) > 0 {
        d
    } else {
        d.saturating_sub(1)
    })
}

pub fn predict_reg(
    complex: &SimplicialComplex,
    field: FieldSpec,
    mode: SubdivisionMode,
    vertex_gate: usize,
) -> Result<RegPrediction> {
    let d = complex.d();
    let w = w_invariant(complex, field)?;
    match mode {
        SubdivisionMode::Barycentric(r) if r >= 1 => Ok(RegPrediction { value: w, exact: true }),
        SubdivisionMode::Barycentric(_) => Err(Error::OutOfRange("barycentric prediction needs r >= 1".into())),
        SubdivisionMode::Edgewise(0) => Err(Error::OutOfRange("edgewise needs r >= 1".into())),
        SubdivisionMode::Edgewise(r) => {
            if w == d || r as usize >= d {
                Ok(RegPrediction { value: w, exact: true })
            } else {
                let (base, _, _) = regularity(complex, field, vertex_gate)?;
                Ok(RegPrediction {
                    value: base.max(r as usize - 1),
                    exact: false,
                })
            }
        }
    }
}

/// Vertex sets of `sd(Δ_{d−1})` built from `(i_1, …, i_r)`: the sets
/// `W_{i_ℓ}` whose union induces a `(j−1)`-sphere and the set `C` that may
/// be added without changing its homology. Subsets are of `{0, …, d−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereFamily {
    pub d: usize,
    pub seq: Vec<usize>,
    pub j: usize,
    pub w: Vec<Vec<Vec<u32>>>,
    pub c: Vec<Vec<u32>>,
}

impl SphereFamily {
    pub fn union_w(&self) -> Vec<Vec<u32>> {
        self.w.iter().flatten().cloned().collect()
    }

    /// Vertex ids in a barycentric subdivision labeled by subsets.
    pub fn ids(sd: &SimplicialComplex, sets: &[Vec<u32>]) -> Result<Vec<VertexId>> {
        sets.iter()
            .map(|s| {
                sd.vertex_by_label(&VertexLabel::Set(s.clone()))
                    .ok_or_else(|| Error::InvalidLabels(format!("no vertex labeled {s:?}")))
            })
            .collect()
    }
}

fn range(lo: usize, hi: usize) -> Vec<u32> {
    (lo as u32..hi as u32).collect()
}

/// Nonempty proper subsets of `ground`, in mask order.
fn proper_subsets(ground: &[u32]) -> Vec<Vec<u32>> {
    let k = ground.len();
    (1u64..(1u64 << k) - 1)
        .map(|m| (0..k).filter(|i| m >> i & 1 == 1).map(|i| ground[i]).collect())
        .collect()
}

fn all_subsets(ground: &[u32]) -> Vec<Vec<u32>> {
    let k = ground.len();
    (0u64..(1u64 << k))
        .map(|m| (0..k).filter(|i| m >> i & 1 == 1).map(|i| ground[i]).collect())
        .collect()
}

pub fn sphere_family(d: usize, seq: &[usize]) -> Result<SphereFamily> {
    let r = seq.len();
    let total: usize = seq.iter().sum();
    if r == 0 || total + 2 * r > d || d > 20 {
        return Err(Error::Hypotheses(format!("sequence {seq:?} needs Σi + 2r <= d = {d}")));
    }
    let j = total + r;
    // s[ℓ] = i_1 + … + i_ℓ + 2ℓ
    let s: Vec<usize> = std::iter::once(0)
        .chain(seq.iter().scan(0, |acc, &i| {
            *acc += i + 2;
            Some(*acc)
        }))
        .collect();
    let w = (1..=r)
        .map(|l| {
            let prefix = range(0, s[l - 1]);
            proper_subsets(&range(s[l - 1], s[l]))
                .into_iter()
                .map(|a| {
                    let mut v = prefix.clone();
                    v.extend(a);
                    v.sort_unstable();
                    v
                })
                .collect()
        })
        .collect();
    let c = if r == 1 {
        Vec::new()
    } else {
        let tops = proper_subsets(&range(s[r - 1], s[r]));
        let bottoms = all_subsets(&range(seq[0] + 2, s[r - 1]));
        let mut out = Vec::with_capacity(tops.len() * bottoms.len());
        for b in &bottoms {
            for a in &tops {
                let mut v = b.clone();
                v.extend(a.iter().copied());
                v.sort_unstable();
                out.push(v);
            }
        }
        out
    };
    Ok(SphereFamily {
        d,
        seq: seq.to_vec(),
        j,
        w,
        c,
    })
}

/// `(2^{i_r+2} − 2) · 2^{i_2+⋯+i_{r−1}+2r−4}`.
pub fn c_size(seq: &[usize]) -> u128 {
    let r = seq.len();
    if r < 2 {
        return 0;
    }
    let mid: usize = seq[1..r - 1].iter().sum();
    ((1u128 << (seq[r - 1] + 2)) - 2) << (mid + 2 * r - 4)
}

fn block(i: usize) -> u128 {
    (1u128 << (i + 2)) - 2
}

/// Evaluates the perturbation inequality for `(d, j, seq)`. Hypotheses:
/// `d ≥ 3`, `d/2 < j ≤ d−1`, `seq` nondecreasing with `Σ i + r − 1 = j − 1`
/// and `Σ i + 2r ≤ d`; when `i_1 ≥ 1` also `r ≥ 2`.
pub fn appendix_inequalities(d: usize, j: usize, seq: &[usize]) -> Result<bool> {
    let r = seq.len();
    let total: usize = seq.iter().sum();
    let fail = |why: &str| Err(Error::Hypotheses(format!("d={d}, j={j}, {seq:?}: {why}")));
    if !(3..=60).contains(&d) {
        return fail("d out of range");
    }
    if !(2 * j > d && j < d) {
        return fail("need d/2 < j <= d-1");
    }
    if r == 0 || seq.windows(2).any(|w| w[0] > w[1]) {
        return fail("sequence must be nonempty and nondecreasing");
    }
    if total + r != j {
        return fail("Σi + r - 1 must equal j - 1");
    }
    if total + 2 * r > d {
        return fail("Σi + 2r must be at most d");
    }
    let lhs = c_size(seq) + seq.iter().map(|&i| block(i)).sum::<u128>();
    if seq[0] == 0 {
        Ok(lhs >= (1u128 << (j + 1)) - 2)
    } else {
        if r < 2 {
            return fail("i_1 >= 1 needs r >= 2");
        }
        let mut shifted = seq.to_vec();
        shifted[0] -= 1;
        shifted[1] += 1;
        Ok(lhs >= shifted.iter().map(|&i| block(i)).sum::<u128>())
    }
}

/// All nondecreasing sequences admissible for [`appendix_inequalities`].
pub fn admissible_sequences(d: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 1..=j {
        let total = j - r;
        if total + 2 * r > d {
            continue;
        }
        let mut cur = Vec::with_capacity(r);
        nondecreasing(total, r, 0, &mut cur, &mut out);
    }
    out.retain(|s| s[0] == 0 || s.len() >= 2);
    out
}

/// Nondecreasing sequences of length `len` summing to `total`, entries `≥ min`.
pub fn nondecreasing(total: usize, len: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if len == 0 {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut x = min;
    while x * len <= total {
        cur.push(x);
        nondecreasing(total - x, len - 1, x, cur, out);
        cur.pop();
        x += 1;
    }
}

/// Which simplex subdivision [`verify_predictions`] examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplexTarget {
    Barycentric { d: usize },
    Edgewise { d: usize, r: u32 },
}

/// Compares predictions with a full Hochster table. Zero/Nonzero claims
/// produce `Pass`/`Fail`; the unknown zone is recorded as `Observed`.
pub fn verify_predictions(target: SimplexTarget, field: FieldSpec, vertex_gate: usize) -> Result<(Report, BettiTable)> {
    let d = match target {
        SimplexTarget::Barycentric { d } | SimplexTarget::Edgewise { d, .. } => d,
    };
    if d < 2 {
        return Err(Error::OutOfRange("need d >= 2".into()));
    }
    let simplex = SimplicialComplex::from_facets(&[(0..d as u32).collect::<Vec<_>>()], d)?;
    let (complex, label) = match target {
        SimplexTarget::Barycentric { .. } => (barycentric(&simplex)?, format!("sd(simplex {d})")),
        SimplexTarget::Edgewise { r, .. } => (edgewise(&simplex, r)?, format!("edgewise(simplex {d}, r={r})")),
    };
    let table = graded_betti_table(&complex, field, vertex_gate)?;
    let mut report = Report::new(label.clone());
    for j in 1..d {
        let pred = match target {
            SimplexTarget::Barycentric { .. } => predict_strand_bar(d, j)?,
            SimplexTarget::Edgewise { r, .. } => predict_strand_edgewise(d, j, r as usize, complex.n())?,
        };
        let pdim = table.pdim()?;
        let mut bad = Vec::new();
        let mut observed = Vec::new();
        for i in 0..=pdim.max(pred.claims.len() - 1) {
            let nz = table.get(i, j) > 0;
            match pred.claim(i) {
                Claim::Zero if nz => bad.push(format!("i={i} predicted zero, got {}", table.get(i, j))),
                Claim::Nonzero if !nz => bad.push(format!("i={i} predicted nonzero, got 0")),
                Claim::Unknown => observed.push(format!("{i}:{}", table.get(i, j))),
                _ => {}
            }
        }
        let nonzero = pred.indices(Claim::Nonzero);
        let span = match (nonzero.first(), nonzero.last()) {
            (Some(a), Some(b)) => format!("nonzero claimed on {a}..={b}"),
            _ => "no nonzero claim".into(),
        };
        report.check(
            format!("{label} strand {j}"),
            bad.is_empty(),
            if bad.is_empty() { span } else { bad.join("; ") },
        );
        if !observed.is_empty() {
            report.push(
                format!("{label} strand {j} unknown zone"),
                Status::Observed,
                observed.join(" "),
            );
        }
    }
    Ok((report, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::standard_complex;
    use crate::hochster::DEFAULT_VERTEX_GATE;
    use crate::homology::reduced_betti;

    #[test]
    fn m_values() {
        assert_eq!(m_closed(4, 2).unwrap(), 2);
        assert_eq!(m_closed(5, 3).unwrap(), 5);
        assert_eq!(m_closed(4, 3).unwrap(), 11);
        assert_eq!(m_bruteforce(3, 2).unwrap(), 4);
        assert_eq!(m_bruteforce(5, 3).unwrap(), 5);
        for d in 2..12 {
            assert_eq!(m_bruteforce(d, 1).unwrap(), 1);
        }
        assert!(m_closed(4, 4).is_err());
        assert!(m_closed(4, 0).is_err());
    }

    #[test]
    fn closed_form_matches_search() {
        for d in 2..=16 {
            for j in 1..d {
                assert_eq!(m_closed(d, j).unwrap(), m_bruteforce(d, j).unwrap(), "d={d} j={j}");
            }
            assert_eq!(m_closed(d, d - 1).unwrap() as usize, bar_simplex_pdim(d));
        }
    }

    #[test]
    fn bar_predictions() {
        let p = predict_strand_bar(3, 1).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), vec![1, 2, 3]);
        assert_eq!(p.indices(Claim::Zero), vec![0, 4]);
        let p = predict_strand_bar(4, 2).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), (2..=10).collect::<Vec<_>>());
        assert_eq!(p.indices(Claim::Zero), vec![0, 1, 11]);
        assert!(p.indices(Claim::Unknown).is_empty());
        let p = predict_strand_bar(5, 3).unwrap();
        assert_eq!(p.indices(Claim::Zero), vec![0, 1, 2, 26]);
        assert_eq!(p.indices(Claim::Unknown), vec![3, 4]);
        assert_eq!(p.indices(Claim::Nonzero), (5..=25).collect::<Vec<_>>());
        let p = predict_strand_bar(4, 3).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), vec![11]);
    }

    #[test]
    fn edgewise_predictions() {
        let p = predict_strand_edgewise(3, 1, 3, 10).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), (1..=7).collect::<Vec<_>>());
        assert_eq!(p.indices(Claim::Zero), vec![0]);
        let p = predict_strand_edgewise(3, 2, 3, 10).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), (4..=7).collect::<Vec<_>>());
        let p = predict_strand_edgewise(4, 3, 4, 35).unwrap();
        assert_eq!(p.indices(Claim::Nonzero), (11..=31).collect::<Vec<_>>());
        assert!(predict_strand_edgewise(4, 3, 3, 20).is_err());
    }

    #[test]
    fn t1_trichotomy() {
        let c = |s: &str| standard_complex(&s.parse().unwrap()).unwrap();
        assert_eq!(predict_t1_edgewise(&c("simplex_boundary(2)"), 2).unwrap(), 2);
        assert_eq!(predict_t1_edgewise(&c("cone(simplex_boundary(2))"), 2).unwrap(), 3);
        assert_eq!(predict_t1_edgewise(&c("cycle(6)"), 2).unwrap(), 2);
        assert_eq!(predict_t1_edgewise(&c("simplex(3)"), 3).unwrap(), 2);
    }

    #[test]
    fn reg_predictions() {
        let c = |s: &str| standard_complex(&s.parse().unwrap()).unwrap();
        let q = FieldSpec::Rationals;
        for r in 1..5 {
            let p = predict_reg(&c("simplex_boundary(2)"), q, SubdivisionMode::Edgewise(r), 22).unwrap();
            assert_eq!(p, RegPrediction { value: 2, exact: true });
        }
        let p = predict_reg(&c("simplex(1)"), q, SubdivisionMode::Edgewise(3), 22).unwrap();
        assert_eq!(p, RegPrediction { value: 1, exact: true });
        let rp2 = c("rp2_six");
        assert_eq!(
            predict_reg(&rp2, FieldSpec::GF2, SubdivisionMode::Barycentric(1), 22)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            predict_reg(&rp2, q, SubdivisionMode::Barycentric(1), 22).unwrap().value,
            2
        );
        let low = predict_reg(&c("simplex(3)"), q, SubdivisionMode::Edgewise(2), 22).unwrap();
        assert_eq!(low, RegPrediction { value: 1, exact: false });
    }

    #[test]
    fn sphere_family_examples() {
        let f = sphere_family(5, &[0, 1]).unwrap();
        assert_eq!(f.w.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 6]);
        assert_eq!(f.c.len(), 6);
        assert_eq!(f.c.len() as u128, c_size(&[0, 1]));
        assert_eq!(f.j, 3);
        let f = sphere_family(4, &[0, 0]).unwrap();
        assert_eq!(f.w.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2]);
        let f = sphere_family(3, &[1]).unwrap();
        assert_eq!(f.union_w().len(), 6);
        assert!(f.c.is_empty());
        assert!(sphere_family(4, &[1, 1]).is_err());
    }

    #[test]
    fn sphere_family_homology_small() {
        let sd = barycentric(&standard_complex(&"simplex(4)".parse().unwrap()).unwrap()).unwrap();
        let f = sphere_family(5, &[0, 1]).unwrap();
        let ids = SphereFamily::ids(&sd, &f.union_w()).unwrap();
        let b = reduced_betti(&sd.induced(&ids).unwrap().complex, FieldSpec::Rationals).unwrap();
        assert_eq!(betti_at(&b, 2), 1);
        assert_eq!(b.iter().sum::<usize>(), 1);
    }

    #[test]
    fn inequality_examples() {
        assert!(appendix_inequalities(5, 3, &[0, 1]).unwrap());
        assert!(appendix_inequalities(6, 4, &[0, 2]).unwrap());
        assert!(appendix_inequalities(6, 4, &[1, 1]).unwrap());
        assert!(matches!(
            appendix_inequalities(6, 4, &[0, 1, 1]),
            Err(Error::Hypotheses(_))
        ));
        assert!(matches!(
            appendix_inequalities(6, 4, &[1, 2]),
            Err(Error::Hypotheses(_))
        ));
        assert!(matches!(
            appendix_inequalities(6, 3, &[0, 2]),
            Err(Error::Hypotheses(_))
        ));
    }

    #[test]
    fn inequalities_exhaustive_small() {
        for d in 3..=8 {
            for j in d / 2 + 1..d {
                for s in admissible_sequences(d, j) {
                    assert!(appendix_inequalities(d, j, &s).unwrap(), "d={d} j={j} {s:?}");
                }
            }
        }
    }

    #[test]
    fn triangle_predictions_hold() {
        let (report, _) = verify_predictions(
            SimplexTarget::Barycentric { d: 3 },
            FieldSpec::Rationals,
            DEFAULT_VERTEX_GATE,
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
        let (report, _) = verify_predictions(
            SimplexTarget::Edgewise { d: 3, r: 3 },
            FieldSpec::Rationals,
            DEFAULT_VERTEX_GATE,
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
