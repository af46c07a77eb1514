//! Graded Betti numbers from the multigraded Koszul complex of `K[Δ]`,
//! compared with the subset-enumeration tables.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use sdbetti::hochster::{graded_betti_table, graded_betti_table_chunked, DEFAULT_VERTEX_GATE};
use sdbetti::{standard_complex, FieldSpec, SimplicialComplex};

fn rank_q(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_gf2(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<u128> = m
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .fold(0u128, |acc, (k, &x)| acc | (((x & 1) as u128) << k))
        })
        .collect();
    let mut rank = 0;
    for bit in 0..128 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

fn rank(m: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Rationals => rank_q(
            m.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        ),
        other => panic!("oracle has no {other}"),
    }
}

fn is_face(c: &SimplicialComplex, support: &[u32]) -> bool {
    c.contains_face(&sdbetti::Face::new(support.to_vec()).unwrap())
}

/// Koszul basis in multidegree `b`, homological degree `i`: the sets `S`
/// with `|S| = i`, `S ⊆ supp b` and `x^{b − 1_S} ≠ 0` in `K[Δ]`.
fn basis(c: &SimplicialComplex, b: &[u32], i: usize) -> Vec<u64> {
    let n = b.len();
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == i)
        .filter(|s| (0..n).all(|k| s >> k & 1 == 0 || b[k] >= 1))
        .filter(|s| {
            let support: Vec<u32> = (0..n as u32)
                .filter(|&k| b[k as usize] - (s >> k & 1) as u32 > 0)
                .collect();
            is_face(c, &support)
        })
        .collect()
}

/// Matrix of `∂(m e_S) = Σ_{k ∈ S} ± x_k m e_{S∖k}` from degree `i` to `i − 1`.
fn koszul_map(src: &[u64], dst: &[u64]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; src.len()]; dst.len()];
    for (col, &s) in src.iter().enumerate() {
        let mut pos = 0;
        for k in 0..64 {
            if s >> k & 1 == 1 {
                if let Ok(row) = dst.binary_search(&(s & !(1 << k))) {
                    m[row][col] = if pos % 2 == 0 { 1 } else { -1 };
                }
                pos += 1;
            }
        }
    }
    m
}

/// `β_{i,b}` for every `b ∈ {0,1,2}^n`, keyed by `(i, |b|, squarefree)`.
fn koszul_betti(c: &SimplicialComplex, field: FieldSpec) -> Vec<(usize, usize, bool, usize)> {
    let n = c.n();
    let mut out = Vec::new();
    for code in 0..3u64.pow(n as u32) {
        let b: Vec<u32> = (0..n).map(|k| (code / 3u64.pow(k as u32) % 3) as u32).collect();
        let total: usize = b.iter().map(|&x| x as usize).sum();
        let squarefree = b.iter().all(|&x| x <= 1);
        let bases: Vec<Vec<u64>> = (0..=n + 1).map(|i| basis(c, &b, i)).collect();
        let ranks: Vec<usize> = (0..=n + 1)
            .map(|i| {
                if i == 0 || bases[i].is_empty() || bases[i - 1].is_empty() {
                    0
                } else {
                    rank(&koszul_map(&bases[i], &bases[i - 1]), field)
                }
            })
            .collect();
        for i in 0..=n {
            let beta = bases[i].len() - ranks[i] - ranks[i + 1];
            if beta > 0 {
                out.push((i, total, squarefree, beta));
            }
        }
    }
    out
}

fn compare(c: &SimplicialComplex, field: FieldSpec) {
    let table = graded_betti_table(c, field, DEFAULT_VERTEX_GATE).unwrap();
    let mut expect = std::collections::BTreeMap::new();
    for (i, total, squarefree, beta) in koszul_betti(c, field) {
        assert!(squarefree, "non-squarefree Betti number at i={i}, degree {total}");
        *expect.entry((i, total - i)).or_insert(0u64) += beta as u64;
    }
    let got: std::collections::BTreeMap<(usize, usize), u64> = table.entries().collect();
    assert_eq!(got, expect, "facets {:?} over {field}", c.facets());
}

fn fixture(s: &str) -> SimplicialComplex {
    standard_complex(&s.parse().unwrap()).unwrap()
}

#[test]
fn named_complexes() {
    for name in [
        "simplex(2)",
        "simplex_boundary(2)",
        "simplex_boundary(3)",
        "cycle(5)",
        "path(4)",
        "cone(simplex_boundary(2))",
        "stacked_attach(cycle(3),2,[0])",
        "stacked_sphere(2,6)",
    ] {
        let c = fixture(name);
        compare(&c, FieldSpec::Rationals);
        compare(&c, FieldSpec::GF2);
    }
}

#[test]
fn projective_plane_depends_on_field() {
    let rp2 = fixture("rp2_six");
    compare(&rp2, FieldSpec::Rationals);
    compare(&rp2, FieldSpec::GF2);
    let q = graded_betti_table(&rp2, FieldSpec::Rationals, DEFAULT_VERTEX_GATE).unwrap();
    let two = graded_betti_table(&rp2, FieldSpec::GF2, DEFAULT_VERTEX_GATE).unwrap();
    assert_ne!(q, two);
    assert_eq!(two.reg().unwrap(), 3);
    assert_eq!(q.reg().unwrap(), 2);
}

#[test]
fn unused_ground_vertices_are_free_variables() {
    let c = SimplicialComplex::from_facets(&[[0u32, 1]], 4).unwrap();
    compare(&c, FieldSpec::Rationals);
    let t = graded_betti_table(&c, FieldSpec::Rationals, DEFAULT_VERTEX_GATE).unwrap();
    assert_eq!(t.get(1, 0), 2);
}

#[test]
fn empty_and_irrelevant() {
    let empty = SimplicialComplex::from_facets::<Vec<u32>>(&[], 3).unwrap();
    compare(&empty, FieldSpec::Rationals);
    let t = graded_betti_table(&empty, FieldSpec::Rationals, DEFAULT_VERTEX_GATE).unwrap();
    assert_eq!(t.get(3, 0), 1);
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1u64 << n), 1..6).prop_map(move |masks| {
            let facets: Vec<Vec<u32>> = masks
                .iter()
                .map(|m| (0..n as u32).filter(|k| m >> k & 1 == 1).collect())
                .collect();
            SimplicialComplex::from_facets(&facets, n).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_complexes_match(c in arb_complex(), two in any::<bool>()) {
        let field = if two { FieldSpec::GF2 } else { FieldSpec::Rationals };
        compare(&c, field);
    }

    #[test]
    fn chunking_is_invisible(c in arb_complex(), chunk in 1u64..40) {
        let a = graded_betti_table(&c, FieldSpec::Rationals, DEFAULT_VERTEX_GATE).unwrap();
        let b = graded_betti_table_chunked(&c, FieldSpec::Rationals, DEFAULT_VERTEX_GATE, chunk).unwrap();
        prop_assert_eq!(a, b);
    }
}
