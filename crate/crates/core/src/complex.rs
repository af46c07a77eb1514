//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] lives on the ground set `0..n`. Its facets form an
//! antichain in canonical (lexicographic) order and the full face set is
//! materialized lazily, gated at [`FACE_GATE`] faces.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// Upper bound on the number of faces the lazy face table may hold.
pub const FACE_GATE: usize = 1 << 24;

/// Structured vertex label kept through subdivisions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexLabel {
    /// A face of the subdivided complex (barycentric vertices).
    Set(Vec<u32>),
    /// A composition of `r` (edgewise vertices).
    Lattice(Vec<u32>),
    Plain(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            VertexLabel::Set(s) => write!(f, "{{{}}}", join(s)),
            VertexLabel::Lattice(a) => write!(f, "({})", join(a)),
            VertexLabel::Plain(s) => f.write_str(s),
        }
    }
}

/// A face: a strictly increasing vertex sequence. The empty face is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<VertexId>);

impl Face {
    /// Sorts the vertices; rejects repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Face(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<_> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The face with vertex `v` removed.
    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// The face with vertex `v` added.
    pub fn with(&self, v: VertexId) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    /// Bitmask of the vertex set; vertices must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| {
            debug_assert!(v < 64);
            m | (1u64 << v)
        })
    }

    pub fn from_mask(mask: u64) -> Face {
        Face((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        debug_assert!(k < 64);
        (0u64..(1u64 << k)).map(move |bits| Face((0..k).filter(|i| bits >> i & 1 == 1).map(|i| self.0[i]).collect()))
    }
}

impl From<Face> for Vec<VertexId> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(f_{-1}, f_0, …, f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    entries: Vec<BigUint>,
}

impl FVector {
    pub fn new(entries: Vec<BigUint>) -> Self {
        FVector { entries }
    }

    /// `d = dim + 1`, the number of entries after `f_{-1}`.
    pub fn d(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `f_i` for `-1 <= i`; zero past the dimension.
    pub fn get(&self, i: isize) -> BigUint {
        let idx = i + 1;
        if idx < 0 {
            return BigUint::zero();
        }
        self.entries.get(idx as usize).cloned().unwrap_or_else(BigUint::zero)
    }

    /// `f_i` as `u64`; panics when the count does not fit.
    pub fn get_u64(&self, i: isize) -> u64 {
        self.get(i).to_u64().expect("face count fits in u64")
    }

    pub fn to_u64_vec(&self) -> Vec<u64> {
        self.entries
            .iter()
            .map(|x| x.to_u64().expect("face count fits in u64"))
            .collect()
    }

    /// `Σ_{i ≥ -1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> BigInt {
        self.entries.iter().enumerate().fold(BigInt::zero(), |acc, (idx, f)| {
            let term = BigInt::from(f.clone());
            // idx = i + 1, so (-1)^i = -(-1)^idx
            if idx % 2 == 0 {
                acc - term
            } else {
                acc + term
            }
        })
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.reduced_euler_characteristic() + BigInt::one()
    }

    /// Coefficients of `f(t) = Σ_{j=0}^{d} f_{j-1} t^{d-j}`, from `t^d` down to `t^0`.
    pub fn polynomial(&self) -> Vec<BigUint> {
        self.entries.clone()
    }
}

impl From<Vec<u64>> for FVector {
    fn from(v: Vec<u64>) -> Self {
        FVector::new(v.into_iter().map(BigUint::from).collect())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All faces grouped by dimension; entry `k` holds the `(k-1)`-faces, sorted.
#[derive(Debug)]
pub struct FaceTable {
    by_dim: Vec<Vec<Face>>,
}

impl FaceTable {
    /// Faces of dimension `dim` (`dim >= -1`).
    pub fn of_dim(&self, dim: isize) -> &[Face] {
        let idx = dim + 1;
        if idx < 0 {
            return &[];
        }
        self.by_dim.get(idx as usize).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.of_dim(face.dim()).binary_search(face).ok()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index_of(face).is_some()
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.by_dim.iter().flatten()
    }

    /// Top dimension plus one.
    pub fn levels(&self) -> usize {
        self.by_dim.len()
    }
}

/// A simplicial complex on the ground set `0..n`.
///
/// An empty facet list yields the complex `{∅}`, whose reduced homology is
/// one-dimensional in degree `-1`.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    labels: Option<Vec<VertexLabel>>,
    faces: OnceLock<Arc<FaceTable>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets && self.labels == other.labels
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("facets", &self.facets)
            .finish()
    }
}

/// An induced subcomplex relabeled onto `0..|W|`, with the original ids.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub complex: SimplicialComplex,
    /// `vertices[k]` is the id in the parent complex of new vertex `k`.
    pub vertices: Vec<VertexId>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on the ground set `0..n`.
    pub fn from_facets<F: AsRef<[u32]>>(facets: &[F], n: usize) -> Result<Self> {
        let mut faces = Vec::with_capacity(facets.len());
        for f in facets {
            let verts = f.as_ref().to_vec();
            if let Some(&v) = verts.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            faces.push(Face::new(verts)?);
        }
        Ok(Self::from_faces_unchecked(faces, n))
    }

    /// Builds from candidate faces already known to be valid; dominated
    /// faces are dropped.
    pub(crate) fn from_faces_unchecked(faces: Vec<Face>, n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: reduce_to_antichain(faces),
            labels: None,
            faces: OnceLock::new(),
        }
    }

    /// Attaches labels, one per ground-set element; labels must be distinct.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let distinct: HashSet<&VertexLabel> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidLabels("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&VertexLabel> {
        self.labels.as_ref().and_then(|l| l.get(v as usize))
    }

    pub fn vertex_by_label(&self, label: &VertexLabel) -> Option<VertexId> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(|p| p as VertexId)
    }

    /// `dim Δ`; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    /// `d = dim Δ + 1`.
    pub fn d(&self) -> usize {
        (self.dim() + 1) as usize
    }

    /// Ground-set elements that are vertices, ascending.
    pub fn vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.n
    }

    /// The full face table, built on first use.
    pub fn faces(&self) -> Result<Arc<FaceTable>> {
        if let Some(t) = self.faces.get() {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(build_face_table(&self.facets)?);
        // a concurrent fill computes the same table
        let _ = self.faces.set(Arc::clone(&table));
        Ok(table)
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        if let Some(t) = self.faces.get() {
            return t.contains(face);
        }
        self.facets.iter().any(|g| face.is_subset_of(g))
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let table = self.faces()?;
        Ok(FVector::new(
            table.by_dim.iter().map(|v| BigUint::from(v.len())).collect(),
        ))
    }

    /// `Δ_W`, relabeled onto `0..|W|` in ascending order of `W`.
    pub fn induced(&self, w: &[VertexId]) -> Result<Restriction> {
        let mut verts: Vec<VertexId> = w.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v as usize >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let pos: HashMap<VertexId, VertexId> = verts.iter().enumerate().map(|(i, &v)| (v, i as VertexId)).collect();
        let faces = self
            .facets
            .iter()
            .map(|f| Face::from_sorted(f.vertices().iter().filter_map(|v| pos.get(v).copied()).collect()))
            .collect();
        let mut complex = Self::from_faces_unchecked(faces, verts.len());
        if let Some(labels) = &self.labels {
            complex.labels = Some(verts.iter().map(|&v| labels[v as usize].clone()).collect());
        }
        Ok(Restriction {
            complex,
            vertices: verts,
        })
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, relabeled onto its own vertex set.
    pub fn link(&self, face: &Face) -> Result<Restriction> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.vertices().to_vec()));
        }
        let parts: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(g))
            .map(|g| g.difference(face))
            .collect();
        let ambient = Self::from_faces_unchecked(parts, self.n);
        let verts = ambient.vertices();
        let mut out = ambient.induced(&verts)?;
        if let Some(labels) = &self.labels {
            out.complex.labels = Some(verts.iter().map(|&v| labels[v as usize].clone()).collect());
        }
        Ok(out)
    }

    /// Closed star of `F`: all faces `G` with `G ∪ F ∈ Δ`, on the same ground set.
    pub fn star(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.vertices().to_vec()));
        }
        let facets: Vec<Face> = self.facets.iter().filter(|g| face.is_subset_of(g)).cloned().collect();
        let mut s = Self::from_faces_unchecked(facets, self.n);
        s.labels = self.labels.clone();
        Ok(s)
    }

    /// Inclusion-minimal subsets of `0..n` that are not faces.
    pub fn minimal_non_faces(&self) -> Result<Vec<Face>> {
        let table = self.faces()?;
        let mut out = Vec::new();
        for face in table.iter() {
            let start = face.vertices().last().map_or(0, |&m| m + 1);
            for v in start..self.n as VertexId {
                let cand = face.with(v);
                if table.contains(&cand) {
                    continue;
                }
                let minimal = cand
                    .vertices()
                    .iter()
                    .all(|&u| u == v || table.contains(&cand.without(u)));
                if minimal {
                    out.push(cand);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Largest cardinality of a minimal non-face (0 for a full simplex).
    pub fn t1(&self) -> Result<usize> {
        Ok(self.minimal_non_faces()?.iter().map(Face::len).max().unwrap_or(0))
    }

    /// Every minimal non-face has two elements, or there are none.
    pub fn is_flag(&self) -> Result<bool> {
        Ok(self.minimal_non_faces()?.iter().all(|f| f.len() == 2))
    }

    /// Closure of the codimension-one faces lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut count: HashMap<Face, usize> = HashMap::new();
        for g in &self.facets {
            for &v in g.vertices() {
                *count.entry(g.without(v)).or_insert(0) += 1;
            }
        }
        let ridges: Vec<Face> = count.into_iter().filter(|(_, c)| *c == 1).map(|(f, _)| f).collect();
        let mut b = Self::from_faces_unchecked(ridges, self.n);
        b.labels = self.labels.clone();
        Ok(b)
    }

    /// Join on the disjoint union of the ground sets; vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.n as VertexId;
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut v = f.vertices().to_vec();
                v.extend(g.vertices().iter().map(|x| x + shift));
                faces.push(Face::from_sorted(v));
            }
        }
        Self::from_faces_unchecked(faces, self.n + other.n)
    }

    /// Relabels onto the vertex set, dropping ground-set elements that are not vertices.
    pub fn compact(&self) -> Restriction {
        self.induced(&self.vertices()).expect("vertices lie in the ground set")
    }
}

fn reduce_to_antichain(mut faces: Vec<Face>) -> Vec<Face> {
    // larger faces first so every dominated face meets its dominator earlier
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|g| f.is_subset_of(g)) {
            kept.push(f);
        }
    }
    if kept.is_empty() {
        kept.push(Face::empty());
    }
    kept.sort();
    kept
}

fn build_face_table(facets: &[Face]) -> Result<FaceTable> {
    let top = facets.iter().map(Face::len).max().unwrap_or(0);
    if top >= 25 {
        return Err(Error::GateExceeded {
            what: "face enumeration",
            size: 1u128 << top,
            gate: FACE_GATE as u128,
        });
    }
    let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
    let mut total = 0usize;
    for f in facets {
        for s in f.subsets() {
            let k = s.len();
            if sets[k].insert(s) {
                total += 1;
                if total > FACE_GATE {
                    return Err(Error::GateExceeded {
                        what: "face enumeration",
                        size: total as u128,
                        gate: FACE_GATE as u128,
                    });
                }
            }
        }
    }
    let by_dim = sets
        .into_iter()
        .map(|s| {
            let mut v: Vec<Face> = s.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect();
    Ok(FaceTable { by_dim })
}
