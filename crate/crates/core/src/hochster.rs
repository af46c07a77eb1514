//! Graded Betti numbers of Stanley–Reisner rings through Hochster's formula
//! `β_{i,i+j} = Σ_{|W| = i+j} dim H̃_{j-1}(Δ_W)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::{betti_at, reduced_betti, reduced_betti_masks};
use crate::linalg::FieldSpec;

/// Default bound on the number of variables for full enumeration.
pub const DEFAULT_VERTEX_GATE: usize = 22;

/// Betti numbers indexed by homological position `i` and strand `j`:
/// `get(i, j) = β_{i,i+j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    pub field: FieldSpec,
    /// Every `W` was enumerated; otherwise only certified nonzero entries are stored.
    pub complete: bool,
    #[serde(serialize_with = "entry_list")]
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct Entry {
    i: usize,
    j: usize,
    value: u64,
}

fn entry_list<S: serde::Serializer>(
    entries: &BTreeMap<(usize, usize), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(entries.iter().map(|(&(i, j), &value)| Entry { i, j, value }))
}

impl BettiTable {
    pub fn partial(n: usize, field: FieldSpec) -> Self {
        BettiTable {
            n,
            field,
            complete: false,
            entries: BTreeMap::new(),
        }
    }

    /// `β_{i,i+j}`; zero when absent.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `Some(true)` when known nonzero, `Some(false)` when known zero, `None`
    /// when a partial table has no information.
    pub fn is_nonzero(&self, i: usize, j: usize) -> Option<bool> {
        match (self.get(i, j) > 0, self.complete) {
            (true, _) => Some(true),
            (false, true) => Some(false),
            (false, false) => None,
        }
    }

    /// Nonzero entries `((i, j), β_{i,i+j})` in order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Records a lower bound for a partial table.
    pub fn record(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            let e = self.entries.entry((i, j)).or_insert(0);
            *e = (*e).max(value);
        }
    }

    /// Largest homological index with a nonzero entry.
    pub fn pdim(&self) -> Result<usize> {
        self.require_complete()?;
        Ok(self.entries.keys().map(|k| k.0).max().unwrap_or(0))
    }

    /// Largest strand with a nonzero entry.
    pub fn reg(&self) -> Result<usize> {
        self.require_complete()?;
        Ok(self.entries.keys().map(|k| k.1).max().unwrap_or(0))
    }

    pub fn max_strand(&self) -> usize {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::PartialTable)
        }
    }

    /// Rows `i = 0..=pdim`, columns `j = 0..=reg`, as CSV.
    pub fn to_csv(&self) -> String {
        let rows = self.entries.keys().map(|k| k.0).max().unwrap_or(0);
        let cols = self.max_strand();
        let mut out = String::from("i");
        for j in 0..=cols {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for i in 0..=rows {
            out.push_str(&i.to_string());
            for j in 0..=cols {
                match self.is_nonzero(i, j) {
                    None => out.push(','),
                    Some(_) => out.push_str(&format!(",{}", self.get(i, j))),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Faces of `Δ` as bitmasks grouped by size, each group ascending.
pub(crate) fn face_masks(complex: &SimplicialComplex) -> Result<Vec<Vec<u64>>> {
    let table = complex.faces()?;
    Ok((0..table.levels())
        .map(|s| {
            let mut v: Vec<u64> = table.of_dim(s as isize - 1).iter().map(Face::mask).collect();
            v.sort_unstable();
            v
        })
        .collect())
}

fn restrict(by_size: &[Vec<u64>], w: u64) -> Vec<Vec<u64>> {
    by_size
        .iter()
        .map(|v| v.iter().copied().filter(|&f| f & !w == 0).collect())
        .collect()
}

fn check_gate(n: usize, gate: usize) -> Result<()> {
    if n > gate || n > 40 {
        return Err(Error::GateExceeded {
            what: "Hochster enumeration (variables)",
            size: n as u128,
            gate: gate.min(40) as u128,
        });
    }
    Ok(())
}

/// Full table by enumerating every `W ⊆ {0, …, n-1}`. Ground-set elements
/// that are not vertices act as variables lying in the ideal.
pub fn graded_betti_table(complex: &SimplicialComplex, field: FieldSpec, vertex_gate: usize) -> Result<BettiTable> {
    graded_betti_table_chunked(complex, field, vertex_gate, 1 << 12)
}

/// As [`graded_betti_table`] with an explicit chunk size for the parallel
/// split; the result does not depend on it.
pub fn graded_betti_table_chunked(
    complex: &SimplicialComplex,
    field: FieldSpec,
    vertex_gate: usize,
    chunk: u64,
) -> Result<BettiTable> {
    let n = complex.n();
    check_gate(n, vertex_gate)?;
    let by_size = face_masks(complex)?;
    let strands = by_size.len(); // j ranges over 0..=d
    let total = 1u64 << n;
    let chunk = chunk.max(1);
    let nchunks = total.div_ceil(chunk);
    let zero = || vec![vec![0u64; strands + 1]; n + 1];
    // acc[s][j] sums b̃_{j-1}(Δ_W) over |W| = s
    let acc = (0..nchunks)
        .into_par_iter()
        .map(|c| {
            let mut local = zero();
            for w in c * chunk..((c + 1) * chunk).min(total) {
                let s = w.count_ones() as usize;
                let b = reduced_betti_masks(&restrict(&by_size, w), field);
                for (k, &x) in b.iter().enumerate() {
                    local[s][k] += x as u64;
                }
            }
            local
        })
        .reduce(zero, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        });
    let mut entries = BTreeMap::new();
    for (s, row) in acc.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x > 0 {
                entries.insert((s - j, j), x);
            }
        }
    }
    Ok(BettiTable {
        n,
        field,
        complete: true,
        entries,
    })
}

/// Contributions certified by a single `W`: `(i, j, dim H̃_{j-1}(Δ_W))`.
pub fn betti_witness(
    complex: &SimplicialComplex,
    field: FieldSpec,
    w: &[VertexId],
) -> Result<Vec<(usize, usize, u64)>> {
    let sub = complex.induced(w)?;
    let size = sub.vertices.len();
    let b = reduced_betti(&sub.complex, field)?;
    Ok(b.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .filter(|(k, _)| *k <= size)
        .map(|(k, &x)| (size - k, k, x as u64))
        .collect())
}

/// Partial table from a list of witness sets.
pub fn witness_table(complex: &SimplicialComplex, field: FieldSpec, sets: &[Vec<VertexId>]) -> Result<BettiTable> {
    let found: Vec<Vec<(usize, usize, u64)>> = sets
        .par_iter()
        .map(|w| betti_witness(complex, field, w))
        .collect::<Result<_>>()?;
    let mut t = BettiTable::partial(complex.n(), field);
    for (i, j, x) in found.into_iter().flatten() {
        t.record(i, j, x);
    }
    Ok(t)
}

/// Endpoints and internal gaps of a strand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandProfile {
    pub j: usize,
    pub l: Option<usize>,
    pub u: Option<usize>,
    pub zero_set: Vec<usize>,
}

pub fn strand_profile(table: &BettiTable, j: usize) -> Result<StrandProfile> {
    table.require_complete()?;
    let nonzero: Vec<usize> = table.entries.keys().filter(|k| k.1 == j).map(|k| k.0).collect();
    let (l, u) = (nonzero.first().copied(), nonzero.last().copied());
    let zero_set = match (l, u) {
        (Some(l), Some(u)) => (l..=u).filter(|i| table.get(*i, j) == 0).collect(),
        _ => Vec::new(),
    };
    Ok(StrandProfile { j, l, u, zero_set })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    pub reg: usize,
    pub pdim: usize,
    pub depth: usize,
    pub t1: usize,
    /// Krull dimension `dim Δ + 1`.
    pub dim: usize,
}

pub fn ring_invariants(table: &BettiTable, complex: &SimplicialComplex) -> Result<RingInvariants> {
    let pdim = table.pdim()?;
    Ok(RingInvariants {
        reg: table.reg()?,
        pdim,
        depth: table.n - pdim,
        t1: complex.t1()?,
        dim: complex.d(),
    })
}

/// Checks `β_{i,i+j} = β_{P−i, P−i+s−j}`, i.e. strands pair as `(i, j) ↔ (P − i, s − j)`.
pub fn symmetric_under(table: &BettiTable, pdim: usize, socle_strand: usize) -> Result<bool> {
    table.require_complete()?;
    for (&(i, j), &x) in &table.entries {
        if i > pdim || j > socle_strand {
            return Ok(false);
        }
        if table.get(pdim - i, socle_strand - j) != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `β_{i,i+j} = β_{2^d−d−1−i, 2^d−2−i−j}` over the whole table.
pub fn gorenstein_symmetry_check(table: &BettiTable, d: usize) -> Result<bool> {
    if d == 0 || d >= 63 {
        return Err(Error::OutOfRange(format!("d = {d}")));
    }
    let p = (1usize << d) - d - 1;
    symmetric_under(table, p, d - 1)
}

/// How a regularity value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegSource {
    FullTable,
    /// Top homology of `Δ` itself.
    TopHomology,
    /// An induced subcomplex certified strand `d−1` and top homology vanishes.
    Witness,
}

/// `reg K[Δ]`, by full enumeration within the gate and otherwise from
/// witnesses. Returns the certifying `W` when one was used.
pub fn regularity(
    complex: &SimplicialComplex,
    field: FieldSpec,
    vertex_gate: usize,
) -> Result<(usize, RegSource, Option<Vec<VertexId>>)> {
    if complex.n() <= vertex_gate && complex.n() <= 40 {
        let t = graded_betti_table(complex, field, vertex_gate)?;
        return Ok((t.reg()?, RegSource::FullTable, None));
    }
    let d = complex.d();
    let top = reduced_betti(complex, field)?;
    if betti_at(&top, d as isize - 1) > 0 {
        // H̃_{d-1}(Δ_W) ⊆ H̃_{d-1}(Δ), so no strand above d and this one is hit by W = V
        return Ok((d, RegSource::TopHomology, Some(complex.vertices())));
    }
    if d == 0 {
        return Ok((0, RegSource::TopHomology, None));
    }
    // strand d-1 needs H̃_{d-2}(Δ_W) ≠ 0
    let mut candidates: Vec<Vec<VertexId>> = vec![complex.vertices()];
    for v in complex.vertices() {
        let lk = complex.link(&Face::from_sorted(vec![v]))?;
        candidates.push(lk.vertices);
        candidates.push(complex.vertices().into_iter().filter(|&u| u != v).collect());
    }
    for w in candidates {
        let sub = complex.induced(&w)?;
        if betti_at(&reduced_betti(&sub.complex, field)?, d as isize - 2) > 0 {
            return Ok((d - 1, RegSource::Witness, Some(w)));
        }
    }
    Err(Error::GateExceeded {
        what: "regularity without a witness (variables)",
        size: complex.n() as u128,
        gate: vertex_gate as u128,
    })
}
