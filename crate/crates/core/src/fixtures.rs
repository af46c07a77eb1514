//! Named complexes used as fixtures.

use std::fmt;
use std::str::FromStr;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A named complex.
///
/// The textual form is what [`fmt::Display`] prints, e.g.
/// `stacked_attach(cycle(3),2,[0])` or `cone(simplex_boundary(2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardSpec {
    /// The full simplex of the given dimension.
    Simplex(usize),
    /// Boundary of the simplex of the given dimension.
    SimplexBoundary(usize),
    Cycle(usize),
    /// Path on `m` vertices.
    Path(usize),
    /// `∂Δ_{dim+1}` stacked until it has `facets` facets.
    StackedSphere {
        dim: usize,
        facets: usize,
    },
    /// Six-vertex real projective plane.
    Rp2Six,
    Cone(Box<StandardSpec>),
    /// `k` new facets glued over `ridge`, each with a fresh apex.
    StackedAttach {
        base: Box<StandardSpec>,
        k: usize,
        ridge: Vec<u32>,
    },
}

const RP2_SIX: [[u32; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [1, 3, 4],
    [1, 3, 5],
    [2, 3, 5],
    [2, 4, 5],
];

pub fn standard_complex(spec: &StandardSpec) -> Result<SimplicialComplex> {
    match spec {
        StandardSpec::Simplex(dim) => {
            let f: Vec<u32> = (0..=*dim as u32).collect();
            SimplicialComplex::from_facets(&[f], dim + 1)
        }
        StandardSpec::SimplexBoundary(dim) => {
            if *dim == 0 {
                return Err(Error::Unrealizable("boundary of a point".into()));
            }
            let n = dim + 1;
            let facets: Vec<Vec<u32>> = (0..n as u32)
                .map(|skip| (0..n as u32).filter(|&v| v != skip).collect())
                .collect();
            SimplicialComplex::from_facets(&facets, n)
        }
        StandardSpec::Cycle(m) => {
            if *m < 3 {
                return Err(Error::Unrealizable(format!("cycle of length {m}")));
            }
            let m32 = *m as u32;
            let facets: Vec<Vec<u32>> = (0..m32).map(|i| vec![i, (i + 1) % m32]).collect();
            SimplicialComplex::from_facets(&facets, *m)
        }
        StandardSpec::Path(m) => {
            if *m == 0 {
                return Err(Error::Unrealizable("path without vertices".into()));
            }
            if *m == 1 {
                return SimplicialComplex::from_facets(&[[0]], 1);
            }
            let facets: Vec<Vec<u32>> = (0..*m as u32 - 1).map(|i| vec![i, i + 1]).collect();
            SimplicialComplex::from_facets(&facets, *m)
        }
        StandardSpec::StackedSphere { dim, facets } => stacked_sphere(*dim, *facets),
        StandardSpec::Rp2Six => SimplicialComplex::from_facets(&RP2_SIX, 6),
        StandardSpec::Cone(base) => {
            let b = standard_complex(base)?;
            let apex = b.n() as u32;
            let facets: Vec<Vec<u32>> = b
                .facets()
                .iter()
                .map(|f| {
                    let mut v = f.vertices().to_vec();
                    v.push(apex);
                    v
                })
                .collect();
            SimplicialComplex::from_facets(&facets, b.n() + 1)
        }
        StandardSpec::StackedAttach { base, k, ridge } => {
            let b = standard_complex(base)?;
            stacked_attach(&b, *k, ridge)
        }
    }
}

/// Glues `k` facets `ridge ∪ {apex}` onto `base`, one fresh apex each.
pub fn stacked_attach(base: &SimplicialComplex, k: usize, ridge: &[u32]) -> Result<SimplicialComplex> {
    let r = Face::new(ridge.to_vec())?;
    if !base.is_pure() || r.len() + 1 != base.d() || !base.contains_face(&r) {
        return Err(Error::Unrealizable(format!(
            "{r} is not a codimension-one face of a pure complex"
        )));
    }
    let mut facets: Vec<Vec<u32>> = base.facets().iter().map(|f| f.vertices().to_vec()).collect();
    for i in 0..k {
        let mut f = r.vertices().to_vec();
        f.push((base.n() + i) as u32);
        facets.push(f);
    }
    SimplicialComplex::from_facets(&facets, base.n() + k)
}

fn stacked_sphere(dim: usize, target: usize) -> Result<SimplicialComplex> {
    if dim == 0 {
        return Err(Error::Unrealizable("stacked 0-sphere".into()));
    }
    let base = dim + 2;
    if target < base || !(target - base).is_multiple_of(dim) {
        return Err(Error::Unrealizable(format!(
            "a stacked {dim}-sphere cannot have {target} facets"
        )));
    }
    let mut facets: Vec<Vec<u32>> = (0..base as u32)
        .map(|skip| (0..base as u32).filter(|&v| v != skip).collect())
        .collect();
    let mut n = base;
    while facets.len() < target {
        facets.sort();
        let last = facets.pop().expect("sphere has facets");
        let apex = n as u32;
        n += 1;
        for &v in &last {
            let mut f: Vec<u32> = last.iter().copied().filter(|&w| w != v).collect();
            f.push(apex);
            facets.push(f);
        }
    }
    SimplicialComplex::from_facets(&facets, n)
}

impl fmt::Display for StandardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardSpec::Simplex(d) => write!(f, "simplex({d})"),
            StandardSpec::SimplexBoundary(d) => write!(f, "simplex_boundary({d})"),
            StandardSpec::Cycle(m) => write!(f, "cycle({m})"),
            StandardSpec::Path(m) => write!(f, "path({m})"),
            StandardSpec::StackedSphere { dim, facets } => {
                write!(f, "stacked_sphere({dim},{facets})")
            }
            StandardSpec::Rp2Six => f.write_str("rp2_six"),
            StandardSpec::Cone(b) => write!(f, "cone({b})"),
            StandardSpec::StackedAttach { base, k, ridge } => {
                let r: Vec<String> = ridge.iter().map(u32::to_string).collect();
                write!(f, "stacked_attach({base},{k},[{}])", r.join(","))
            }
        }
    }
}

impl FromStr for StandardSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown complex spec `{s}`"));
        if s == "rp2_six" {
            return Ok(StandardSpec::Rp2Six);
        }
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args = split_top_level(inner);
        let num = |i: usize| -> Result<usize> { args.get(i).and_then(|a| a.trim().parse().ok()).ok_or_else(bad) };
        let spec = match (&s[..open], args.len()) {
            ("simplex", 1) => StandardSpec::Simplex(num(0)?),
            ("simplex_boundary", 1) => StandardSpec::SimplexBoundary(num(0)?),
            ("cycle", 1) => StandardSpec::Cycle(num(0)?),
            ("path", 1) => StandardSpec::Path(num(0)?),
            ("stacked_sphere", 2) => StandardSpec::StackedSphere {
                dim: num(0)?,
                facets: num(1)?,
            },
            ("cone", 1) => StandardSpec::Cone(Box::new(args[0].parse()?)),
            ("stacked_attach", 3) => {
                let list = args[2]
                    .trim()
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(']'))
                    .ok_or_else(bad)?;
                let ridge = list
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                StandardSpec::StackedAttach {
                    base: Box::new(args[0].parse()?),
                    k: num(1)?,
                    ridge,
                }
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;

    fn f(spec: &str) -> FVector {
        standard_complex(&spec.parse().unwrap()).unwrap().f_vector().unwrap()
    }

    #[test]
    fn fixture_f_vectors() {
        assert_eq!(f("cycle(6)"), FVector::from(vec![1, 6, 6]));
        assert_eq!(f("stacked_sphere(2,6)"), FVector::from(vec![1, 5, 9, 6]));
        assert_eq!(f("stacked_attach(cycle(3),2,[0])"), FVector::from(vec![1, 5, 5]));
        assert_eq!(f("rp2_six"), FVector::from(vec![1, 6, 15, 10]));
        assert_eq!(f("path(3)"), FVector::from(vec![1, 3, 2]));
        assert_eq!(f("cone(simplex_boundary(2))"), FVector::from(vec![1, 4, 6, 3]));
    }

    #[test]
    fn stacked_sphere_sizes() {
        assert!(standard_complex(&"stacked_sphere(2,7)".parse().unwrap()).is_err());
        assert!(standard_complex(&"stacked_sphere(2,2)".parse().unwrap()).is_err());
        let s = standard_complex(&"stacked_sphere(2,12)".parse().unwrap()).unwrap();
        assert_eq!(s.facets().len(), 12);
        assert_eq!(s.f_vector().unwrap().euler_characteristic(), 2.into());
        let c = standard_complex(&"stacked_sphere(1,7)".parse().unwrap()).unwrap();
        assert_eq!(c.f_vector().unwrap(), FVector::from(vec![1, 7, 7]));
    }

    #[test]
    fn euler_characteristics() {
        for d in 1..6 {
            let s = standard_complex(&StandardSpec::Simplex(d)).unwrap();
            assert_eq!(s.f_vector().unwrap().euler_characteristic(), 1.into());
            let b = standard_complex(&StandardSpec::SimplexBoundary(d)).unwrap();
            let expect = 1 + if d % 2 == 1 { 1 } else { -1 };
            assert_eq!(b.f_vector().unwrap().euler_characteristic(), expect.into());
        }
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "simplex(3)",
            "simplex_boundary(2)",
            "cycle(5)",
            "path(4)",
            "stacked_sphere(2,8)",
            "rp2_six",
            "cone(simplex_boundary(2))",
            "stacked_attach(stacked_sphere(2,6),3,[0,1])",
        ] {
            let spec: StandardSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("torus".parse::<StandardSpec>().is_err());
        assert!("cycle(x)".parse::<StandardSpec>().is_err());
    }

    #[test]
    fn attach_needs_a_ridge() {
        let c = standard_complex(&StandardSpec::Cycle(3)).unwrap();
        assert!(stacked_attach(&c, 1, &[0, 1]).is_err());
        assert!(stacked_attach(&c, 1, &[7]).is_err());
    }
}
