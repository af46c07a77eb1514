//! Barycentric and edgewise subdivisions.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex, VertexId, VertexLabel, FACE_GATE};
use crate::error::{Error, Result};

/// Order complex of the nonempty faces. New vertices are the faces of `Δ`
/// ordered by size, then lexicographically, labeled by their vertex sets.
pub fn barycentric(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let table = complex.faces()?;
    let chains: u128 = complex
        .facets()
        .iter()
        .map(|f| (1..=f.len() as u128).product::<u128>())
        .sum();
    if chains > FACE_GATE as u128 {
        return Err(Error::GateExceeded {
            what: "barycentric facets",
            size: chains,
            gate: FACE_GATE as u128,
        });
    }
    let nodes: Vec<&Face> = (0..=complex.dim()).flat_map(|k| table.of_dim(k)).collect();
    let id: HashMap<&Face, VertexId> = nodes.iter().enumerate().map(|(i, f)| (*f, i as VertexId)).collect();
    let facets: Vec<Face> = complex
        .facets()
        .par_iter()
        .flat_map_iter(|g| {
            let mut out = Vec::new();
            let mut chain = Vec::with_capacity(g.len());
            maximal_chains(g, &id, &mut chain, &mut out);
            out
        })
        .collect();
    let labels = nodes.iter().map(|f| VertexLabel::Set(f.vertices().to_vec())).collect();
    SimplicialComplex::from_faces_unchecked(facets, nodes.len()).with_labels(labels)
}

/// Chains `∅ ⊊ … ⊊ top` obtained by removing one vertex at a time from `top`.
fn maximal_chains(top: &Face, id: &HashMap<&Face, VertexId>, chain: &mut Vec<VertexId>, out: &mut Vec<Face>) {
    if top.is_empty() {
        let mut v = chain.clone();
        v.sort_unstable();
        out.push(Face::from_sorted(v));
        return;
    }
    chain.push(id[top]);
    for &v in top.vertices() {
        maximal_chains(&top.without(v), id, chain, out);
    }
    chain.pop();
}

/// `r`-fold barycentric subdivision; each round labels vertices by sets of
/// the previous round's ids.
pub fn barycentric_iter(complex: &SimplicialComplex, r: usize) -> Result<SimplicialComplex> {
    let mut c = complex.clone();
    for _ in 0..r {
        c = barycentric(&c)?;
    }
    Ok(c)
}

/// A point of `Ω_{r,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgewiseVertex {
    pub composition: Vec<u32>,
}

impl EdgewiseVertex {
    pub fn new(composition: Vec<u32>) -> Self {
        EdgewiseVertex { composition }
    }

    /// `𝔦(a)_k = a_1 + ⋯ + a_k`.
    pub fn partial_sums(&self) -> Vec<i64> {
        self.composition
            .iter()
            .scan(0i64, |s, &a| {
                *s += a as i64;
                Some(*s)
            })
            .collect()
    }

    pub fn support(&self) -> Face {
        Face::from_sorted(
            self.composition
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, _)| i as VertexId)
                .collect(),
        )
    }

    /// `𝔦(a − b)` or `𝔦(b − a)` lies in `{0,1}^n`.
    pub fn compatible(&self, other: &EdgewiseVertex) -> bool {
        let (p, q) = (self.partial_sums(), other.partial_sums());
        compatible_sums(&p, &q)
    }
}

fn compatible_sums(p: &[i64], q: &[i64]) -> bool {
    let diff = p.iter().zip(q).map(|(a, b)| a - b);
    diff.clone().all(|x| x == 0 || x == 1) || diff.into_iter().all(|x| x == 0 || x == -1)
}

/// Compositions of `r` into `parts` positive parts, lexicographically descending.
pub fn positive_compositions(r: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(r: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if r == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if (r as usize) < parts {
            return;
        }
        let max = r - (parts as u32 - 1);
        for first in (1..=max).rev() {
            prefix.push(first);
            rec(r - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// The `r`-th edgewise subdivision, on the compositions of `r` whose support
/// is a face, ordered lexicographically descending. Vertex `i` of `Δ` is `r·𝔢_i`.
pub fn edgewise(complex: &SimplicialComplex, r: u32) -> Result<SimplicialComplex> {
    if r == 0 {
        return Err(Error::OutOfRange("edgewise subdivision needs r >= 1".into()));
    }
    let n = complex.n();
    let table = complex.faces()?;
    let mut points: Vec<EdgewiseVertex> = Vec::new();
    for f in table.iter().filter(|f| !f.is_empty() && f.len() <= r as usize) {
        for comp in positive_compositions(r, f.len()) {
            let mut a = vec![0u32; n];
            for (&v, &x) in f.vertices().iter().zip(&comp) {
                a[v as usize] = x;
            }
            points.push(EdgewiseVertex::new(a));
        }
    }
    points.sort_unstable_by(|a, b| b.cmp(a));
    let sums: Vec<Vec<i64>> = points.iter().map(EdgewiseVertex::partial_sums).collect();
    let supports: Vec<Face> = points.iter().map(EdgewiseVertex::support).collect();

    let facets: Vec<Face> = complex
        .facets()
        .par_iter()
        .flat_map_iter(|g| {
            let local: Vec<usize> = (0..points.len()).filter(|&i| supports[i].is_subset_of(g)).collect();
            let m = local.len();
            let adj: Vec<Vec<bool>> = (0..m)
                .map(|a| {
                    (0..m)
                        .map(|b| a != b && compatible_sums(&sums[local[a]], &sums[local[b]]))
                        .collect()
                })
                .collect();
            let mut cliques = Vec::new();
            bron_kerbosch(&adj, Vec::new(), (0..m).collect(), Vec::new(), &mut cliques);
            cliques
                .into_iter()
                .map(|c| {
                    let mut v: Vec<VertexId> = c.into_iter().map(|k| local[k] as VertexId).collect();
                    v.sort_unstable();
                    Face::from_sorted(v)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let labels = points
        .into_iter()
        .map(|p| VertexLabel::Lattice(p.composition))
        .collect();
    SimplicialComplex::from_faces_unchecked(facets, sums.len()).with_labels(labels)
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("p is nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// `F` is not on the boundary but each proper nonempty subset is.
pub fn interior_face_check(sub: &SimplicialComplex, face: &Face) -> Result<bool> {
    if !sub.contains_face(face) {
        return Err(Error::NotAFace(face.vertices().to_vec()));
    }
    let bd = sub.boundary_complex()?;
    if face.is_empty() || bd.contains_face(face) {
        return Ok(false);
    }
    Ok(face.vertices().iter().all(|&v| bd.contains_face(&face.without(v))))
}

/// An `s`-vertex face of `Δ_{d-1}^{⟨r⟩}` passing [`interior_face_check`],
/// together with the subdivided simplex it lives in.
pub fn interior_face_witness(d: usize, r: u32, s: usize) -> Result<(SimplicialComplex, Face)> {
    if d < 2 || (r as usize) < d || s == 0 || s >= d {
        return Err(Error::OutOfRange(format!(
            "interior face needs r >= d and 1 <= s <= d-1 (d={d}, r={r}, s={s})"
        )));
    }
    let simplex = SimplicialComplex::from_facets(&[(0..d as u32).collect::<Vec<_>>()], d)?;
    let sub = edgewise(&simplex, r)?;
    let lookup = |a: &[u32]| sub.vertex_by_label(&VertexLabel::Lattice(a.to_vec()));
    // candidates {𝔢_k + v : k < s} with v positive on the remaining coordinates
    for v in positive_compositions(r - 1, d - s) {
        let ids: Option<Vec<VertexId>> = (0..s)
            .map(|k| {
                let mut a = vec![0u32; d];
                a[k] = 1;
                for (slot, &x) in a[s..].iter_mut().zip(&v) {
                    *slot = x;
                }
                lookup(&a)
            })
            .collect();
        let Some(ids) = ids else { continue };
        let face = Face::new(ids)?;
        if sub.contains_face(&face) && interior_face_check(&sub, &face)? {
            return Ok((sub, face));
        }
    }
    let table = sub.faces()?;
    for face in table.of_dim(s as isize - 1) {
        if interior_face_check(&sub, face)? {
            return Ok((sub.clone(), face.clone()));
        }
    }
    Err(Error::Unrealizable(format!(
        "no interior {s}-face in the subdivided {}-simplex",
        d - 1
    )))
}

/// Vertices of `Δ^{⟨r⟩}` not on its boundary.
pub fn interior_vertices(sub: &SimplicialComplex) -> Result<Vec<VertexId>> {
    let bd = sub.boundary_complex()?;
    let on_bd: std::collections::HashSet<VertexId> = bd.vertices().into_iter().collect();
    Ok(sub.vertices().into_iter().filter(|v| !on_bd.contains(v)).collect())
}
