//! Abstract isomorphism of simplicial complexes by backtracking.

use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`is_isomorphic`].
pub const ISO_GATE: usize = 64;

/// A vertex bijection `vertices(a)[k] ↦ image[k]` carrying faces onto faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub domain: Vec<VertexId>,
    pub image: Vec<VertexId>,
}

impl Isomorphism {
    pub fn apply(&self, v: VertexId) -> Option<VertexId> {
        self.domain.iter().position(|&u| u == v).map(|k| self.image[k])
    }
}

struct Shape {
    verts: Vec<VertexId>,
    /// `adj[k]`: bitmask of neighbours of `verts[k]` in local indices.
    adj: Vec<u64>,
    /// Per vertex, the number of faces of each dimension containing it.
    profile: Vec<Vec<usize>>,
    facets: HashSet<u64>,
}

fn shape(c: &SimplicialComplex) -> Result<Shape> {
    let verts = c.vertices();
    if verts.len() > ISO_GATE {
        return Err(Error::GateExceeded {
            what: "isomorphism search",
            size: verts.len() as u128,
            gate: ISO_GATE as u128,
        });
    }
    let local = |v: VertexId| verts.binary_search(&v).expect("vertex of the complex");
    let table = c.faces()?;
    let mut adj = vec![0u64; verts.len()];
    let mut profile = vec![vec![0usize; table.levels()]; verts.len()];
    for f in table.iter() {
        for &v in f.vertices() {
            profile[local(v)][f.len()] += 1;
        }
        if f.len() == 2 {
            let (a, b) = (local(f.vertices()[0]), local(f.vertices()[1]));
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    let facets = c
        .facets()
        .iter()
        .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | 1 << local(v)))
        .collect();
    Ok(Shape {
        verts,
        adj,
        profile,
        facets,
    })
}

/// Searches for an isomorphism between the complexes on their vertex sets.
pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Option<Isomorphism>> {
    let (sa, sb) = (shape(a)?, shape(b)?);
    if sa.verts.len() != sb.verts.len() || sa.facets.len() != sb.facets.len() || a.f_vector()? != b.f_vector()? {
        return Ok(None);
    }
    let n = sa.verts.len();
    // visit vertices so that each new one is adjacent to an earlier one when possible
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    while order.len() < n {
        let start = (0..n).find(|&k| seen >> k & 1 == 0).expect("unvisited vertex");
        let mut queue = std::collections::VecDeque::from([start]);
        seen |= 1 << start;
        while let Some(k) = queue.pop_front() {
            order.push(k);
            for m in 0..n {
                if sa.adj[k] >> m & 1 == 1 && seen >> m & 1 == 0 {
                    seen |= 1 << m;
                    queue.push_back(m);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if search(&sa, &sb, &order, 0, &mut map, &mut used) {
        Ok(Some(Isomorphism {
            domain: sa.verts.clone(),
            image: map.iter().map(|&k| sb.verts[k]).collect(),
        }))
    } else {
        Ok(None)
    }
}

fn search(sa: &Shape, sb: &Shape, order: &[usize], depth: usize, map: &mut [usize], used: &mut u64) -> bool {
    if depth == order.len() {
        return sa.facets.iter().all(|&f| {
            let img = (0..map.len())
                .filter(|k| f >> k & 1 == 1)
                .fold(0u64, |m, k| m | 1 << map[k]);
            sb.facets.contains(&img)
        });
    }
    let v = order[depth];
    for w in 0..sb.verts.len() {
        if *used >> w & 1 == 1 || sa.profile[v] != sb.profile[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| (sa.adj[v] >> u & 1) == (sb.adj[w] >> map[u] & 1));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if search(sa, sb, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

/// Checks that `iso` carries every facet of `a` onto a facet of `b`.
pub fn verify_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, iso: &Isomorphism) -> bool {
    let image: HashSet<u32> = iso.image.iter().copied().collect();
    if image.len() != iso.image.len() || a.facets().len() != b.facets().len() {
        return false;
    }
    let facets: HashSet<&Face> = b.facets().iter().collect();
    a.facets().iter().all(|f| {
        let img: Option<Vec<u32>> = f.vertices().iter().map(|&v| iso.apply(v)).collect();
        img.and_then(|v| Face::new(v).ok()).is_some_and(|g| facets.contains(&g))
    })
}
