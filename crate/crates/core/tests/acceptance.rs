//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero when any criterion fails.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sdbetti::asymptotics::{
    build_limit_example, default_scale, eigendecompose, f0_edgewise, f_iterate_sd, lambda_matrix, last_strand_limit,
    limit_vertex_constant, verify_last_strand_small_r,
};
use sdbetti::formulas::{
    admissible_sequences, appendix_inequalities, bar_simplex_pdim, m_bruteforce, m_closed, predict_reg,
    predict_strand_bar, predict_t1_edgewise, sphere_family, verify_predictions, w_invariant, Claim, SimplexTarget,
    SphereFamily, SubdivisionMode,
};
use sdbetti::hochster::{gorenstein_symmetry_check, graded_betti_table, regularity, BettiTable, DEFAULT_VERTEX_GATE};
use sdbetti::homology::{betti_at, reduced_betti};
use sdbetti::iso::{is_isomorphic, verify_isomorphism};
use sdbetti::subdivision::{barycentric, barycentric_iter, edgewise, interior_face_witness};
use sdbetti::{standard_complex, FVector, Face, FieldSpec, SimplicialComplex, VertexLabel};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(s: &str) -> SimplicialComplex {
    standard_complex(&s.parse().expect("fixture spec")).expect("fixture")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn nonzero_on(table: &BettiTable, j: usize) -> Vec<usize> {
    let mut v: Vec<usize> = table
        .entries()
        .filter(|((_, jj), _)| *jj == j)
        .map(|((i, _), _)| i)
        .collect();
    v.sort_unstable();
    v
}

fn c1_mj() -> Outcome {
    let mut cells = 0;
    for d in 2..=16 {
        for j in 1..d {
            let (a, b) = (e(m_closed(d, j))?, e(m_bruteforce(d, j))?);
            ensure(a == b, || format!("m_{j}({d}): closed {a}, search {b}"))?;
            cells += 1;
        }
        let top = e(m_closed(d, d - 1))?;
        ensure(top == (1u64 << d) - d as u64 - 1, || {
            format!("m_{}({d}) = {top}", d - 1)
        })?;
    }
    Ok(format!("{cells} cells"))
}

fn c2_bar_d3() -> Outcome {
    let sd = e(barycentric(&fixture("simplex(2)")))?;
    ensure(sd.n() == 7, || format!("{} vertices", sd.n()))?;
    let t = e(graded_betti_table(&sd, FieldSpec::Rationals, DEFAULT_VERTEX_GATE))?;
    let (s1, s2) = (nonzero_on(&t, 1), nonzero_on(&t, 2));
    ensure(s1 == vec![1, 2, 3] && s2 == vec![4], || {
        format!("strand 1 {s1:?}, strand 2 {s2:?}")
    })?;
    Ok("strand 1 on {1,2,3}, strand 2 on {4}".into())
}

fn c3_bar_d4() -> Outcome {
    let (report, table) = e(verify_predictions(
        SimplexTarget::Barycentric { d: 4 },
        FieldSpec::GF2,
        DEFAULT_VERTEX_GATE,
    ))?;
    ensure(report.passed(), || {
        format!("{:?}", report.failures().collect::<Vec<_>>())
    })?;
    let expect = [(1, (1..=9).collect::<Vec<_>>()), (2, (2..=10).collect()), (3, vec![11])];
    for (j, want) in expect {
        let got = nonzero_on(&table, j);
        ensure(got == want, || format!("strand {j}: {got:?}"))?;
        let pred = e(predict_strand_bar(4, j))?;
        ensure(pred.indices(Claim::Nonzero) == want, || {
            format!("prediction strand {j}")
        })?;
    }
    Ok("15 vertices; strands {1..9}, {2..10}, {11}".into())
}

fn c4_gorenstein() -> Outcome {
    for d in [3usize, 4] {
        let sd = e(barycentric(&fixture(&format!("simplex({})", d - 1))))?;
        let t = e(graded_betti_table(&sd, FieldSpec::Rationals, DEFAULT_VERTEX_GATE))?;
        ensure(e(gorenstein_symmetry_check(&t, d))?, || {
            format!("asymmetric table for d={d}")
        })?;
        ensure(e(t.pdim())? == bar_simplex_pdim(d), || format!("pdim for d={d}"))?;
    }
    Ok("sd of the 2- and 3-simplex".into())
}

fn c5_edgewise_d3() -> Outcome {
    let (report, table) = e(verify_predictions(
        SimplexTarget::Edgewise { d: 3, r: 3 },
        FieldSpec::Rationals,
        DEFAULT_VERTEX_GATE,
    ))?;
    ensure(report.passed(), || {
        format!("{:?}", report.failures().collect::<Vec<_>>())
    })?;
    ensure(table.n == 10, || format!("{} vertices", table.n))?;
    let (s1, s2) = (nonzero_on(&table, 1), nonzero_on(&table, 2));
    ensure(s1 == (1..=7).collect::<Vec<_>>(), || format!("strand 1 {s1:?}"))?;
    ensure(s2 == (4..=7).collect::<Vec<_>>(), || format!("strand 2 {s2:?}"))?;
    ensure(e(table.reg())? == 2, || "reg".into())?;
    Ok("strand 1 on 1..=7, strand 2 on 4..=7, reg 2".into())
}

fn link_iso(sub: &SimplicialComplex, face: &Face, target: &SimplicialComplex) -> Result<(), String> {
    let lk = e(sub.link(face))?;
    let iso = e(is_isomorphic(&lk.complex, target))?
        .ok_or_else(|| format!("link of {:?} is not isomorphic to the target", face.vertices()))?;
    ensure(verify_isomorphism(&lk.complex, target, &iso), || {
        "isomorphism fails verification".into()
    })
}

fn c6_links() -> Outcome {
    let tri = e(edgewise(&fixture("simplex(2)"), 3))?;
    let v = tri
        .vertex_by_label(&VertexLabel::Lattice(vec![1, 1, 1]))
        .ok_or("no vertex (1,1,1)")?;
    let hexagon = e(barycentric(&fixture("simplex_boundary(2)")))?;
    link_iso(&tri, &Face::new(vec![v]).map_err(|x| x.to_string())?, &hexagon)?;

    let (sub, face) = e(interior_face_witness(4, 4, 1))?;
    let target = e(barycentric(&fixture("simplex_boundary(3)")))?;
    ensure(e(target.f_vector())? == FVector::from(vec![1, 14, 36, 24]), || {
        "target f-vector".into()
    })?;
    link_iso(&sub, &face, &target)?;

    let mut checked = 2;
    for d in [3usize, 4] {
        for s in 2..d {
            let (sub, face) = e(interior_face_witness(d, d as u32, s))?;
            let target = e(barycentric(&fixture(&format!("simplex_boundary({})", d - s))))?;
            link_iso(&sub, &face, &target).map_err(|m| format!("d={d} s={s}: {m}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} links"))
}

fn c7_regularity() -> Outcome {
    let fixtures = [
        ("simplex(1)", 2u32),
        ("simplex_boundary(2)", 2),
        ("cycle(6)", 2),
        ("rp2_six", 3),
    ];
    let mut rows = Vec::new();
    for field in [FieldSpec::Rationals, FieldSpec::GF2] {
        for (name, r) in fixtures {
            let c = fixture(name);
            let w = e(w_invariant(&c, field))?;
            for mode in [SubdivisionMode::Barycentric(1), SubdivisionMode::Edgewise(r)] {
                let sub = match mode {
                    SubdivisionMode::Barycentric(_) => e(barycentric(&c))?,
                    SubdivisionMode::Edgewise(r) => e(edgewise(&c, r))?,
                };
                let pred = e(predict_reg(&c, field, mode, DEFAULT_VERTEX_GATE))?;
                let (actual, _, _) = e(regularity(&sub, field, DEFAULT_VERTEX_GATE))?;
                let ok = if pred.exact {
                    actual == pred.value
                } else {
                    actual >= pred.value
                };
                ensure(ok, || {
                    format!("{name} {mode:?} over {field}: predicted {pred:?}, got {actual}")
                })?;
                if matches!(mode, SubdivisionMode::Barycentric(_)) {
                    ensure(actual == w, || format!("{name} over {field}: reg {actual} vs w {w}"))?;
                }
            }
            rows.push(format!("{name}/{field}:{w}"));
        }
    }
    let q = e(w_invariant(&fixture("rp2_six"), FieldSpec::Rationals))?;
    let two = e(w_invariant(&fixture("rp2_six"), FieldSpec::GF2))?;
    ensure((q, two) == (2, 3), || format!("rp2 w = {q}, {two}"))?;
    Ok(rows.join(" "))
}

fn c8_t1() -> Outcome {
    for (name, want) in [
        ("cycle(6)", 2),
        ("simplex_boundary(2)", 2),
        ("cone(simplex_boundary(2))", 3),
    ] {
        let c = fixture(name);
        let pred = e(predict_t1_edgewise(&c, 2))?;
        let direct = e(e(edgewise(&c, 2))?.t1())?;
        ensure(pred == want && direct == want, || {
            format!("{name}: predicted {pred}, direct {direct}")
        })?;
    }
    Ok("2, 2, 3".into())
}

fn depth(c: &SimplicialComplex) -> Result<usize, String> {
    let t = e(graded_betti_table(c, FieldSpec::Rationals, DEFAULT_VERTEX_GATE))?;
    Ok(c.n() - e(t.pdim())?)
}

fn c9_depth() -> Outcome {
    let mut out = Vec::new();
    for name in ["path(4)", "cycle(6)", "stacked_attach(cycle(3),2,[0])"] {
        let c = fixture(name);
        let base = depth(&c)?;
        let bar = depth(&e(barycentric(&c))?)?;
        let edge = depth(&e(edgewise(&c, 2))?)?;
        ensure(base == bar && base == edge, || format!("{name}: {base} {bar} {edge}"))?;
        out.push(format!("{name}:{base}"));
    }
    Ok(out.join(" "))
}

fn c10_lambda() -> Outcome {
    for d in 1..=6 {
        let l = e(lambda_matrix(d))?;
        let eig = e(eigendecompose(&l))?;
        let fact: Vec<BigInt> = (0..=d).map(|k| (1..=k).map(BigInt::from).product()).collect();
        ensure(eig.diag == fact, || format!("diagonal for d={d}"))?;
        ensure(eig.reconstruct() == l.to_rational(), || format!("P D P^-1 for d={d}"))?;
    }
    for name in [
        "simplex(2)",
        "simplex_boundary(3)",
        "cycle(5)",
        "stacked_attach(cycle(3),2,[0])",
        "simplex(3)",
    ] {
        let c = fixture(name);
        let f = e(c.f_vector())?;
        for r in 1..=3 {
            let built = e(e(barycentric_iter(&c, r))?.f_vector())?;
            ensure(e(f_iterate_sd(&f, r))? == built, || format!("{name} r={r}"))?;
        }
    }
    ensure(e(limit_vertex_constant(2))? == BigRational::one(), || {
        "d=2 constant".into()
    })?;
    let c3 = e(fixture("cycle(3)").f_vector())?;
    for r in 0..=20 {
        ensure(e(f_iterate_sd(&c3, r))?.get(0) == BigUint::from(3u64) << r, || {
            format!("C_3 at r={r}")
        })?;
    }
    let k3 = e(limit_vertex_constant(3))?;
    let f = e(fixture("simplex_boundary(3)").f_vector())?;
    let f0 = e(f_iterate_sd(&f, 20))?.get(0);
    let ratio = BigRational::new(BigInt::from(f0), BigInt::from(6).pow(20));
    let limit = &k3 * BigRational::from_integer(4.into());
    let rel = ((&ratio - &limit) / &limit).abs();
    ensure(rel < BigRational::new(1.into(), 1_000_000.into()), || {
        format!("relative error {rel}")
    })?;
    Ok(format!("d=3 vertex constant {k3}"))
}

fn c11_edgewise_growth() -> Outcome {
    let names = [
        "simplex(1)",
        "cycle(5)",
        "simplex(2)",
        "simplex_boundary(3)",
        "simplex(3)",
        "stacked_attach(cycle(3),2,[0])",
    ];
    for name in names {
        let c = fixture(name);
        let f = e(c.f_vector())?;
        for r in 1..=6u32 {
            let built = e(edgewise(&c, r))?.n();
            ensure(e(f0_edgewise(&f, r as u64))? == BigUint::from(built), || {
                format!("{name} r={r}")
            })?;
        }
        let d = c.d();
        let r: u64 = 100_000;
        let lead = BigRational::new(
            BigInt::from(f.get(d as isize - 1)),
            (1..d).map(BigInt::from).product::<BigInt>(),
        );
        let ratio = BigRational::new(BigInt::from(e(f0_edgewise(&f, r))?), BigInt::from(r).pow(d as u32 - 1));
        let rel = ((&ratio - &lead) / &lead).abs();
        ensure(rel < BigRational::new(1.into(), 1000.into()), || {
            format!("{name}: relative error {rel}")
        })?;
    }
    Ok(format!("{} fixtures", names.len()))
}

fn c12_limits() -> Outcome {
    let gf2 = FieldSpec::GF2;
    for d in 2..=4 {
        let v = e(last_strand_limit(&fixture(&format!("simplex_boundary({d})")), gf2))?;
        ensure(v.is_zero(), || format!("sphere d={d}: {v}"))?;
    }
    let mut cells = 0;
    for d in [2usize, 3] {
        for q in 1..=8 {
            for p in 0..q {
                let c = default_scale(d, p, q);
                let ex = e(build_limit_example(d, p, q, c))?;
                let v = e(last_strand_limit(&ex, gf2))?;
                ensure(v == BigRational::new(BigInt::from(p), BigInt::from(q)), || {
                    format!("d={d} p={p} q={q}: {v}")
                })?;
                cells += 1;
            }
        }
    }
    let pend = fixture("stacked_attach(cycle(3),2,[0])");
    let report = e(verify_last_strand_small_r(
        &pend,
        SubdivisionMode::Barycentric(1),
        FieldSpec::Rationals,
        DEFAULT_VERTEX_GATE,
    ))?;
    ensure(report.passed(), || {
        format!("{:?}", report.failures().collect::<Vec<_>>())
    })?;
    let sd = e(barycentric(&pend))?;
    let t = e(graded_betti_table(&sd, FieldSpec::Rationals, DEFAULT_VERTEX_GATE))?;
    ensure((4..=8).all(|i| t.get(i, 2) > 0), || "window 4..=8".into())?;
    Ok(format!("{cells} limit examples; window 4..=8"))
}

fn concentrated(c: &SimplicialComplex, deg: usize) -> Result<bool, String> {
    for field in [FieldSpec::Rationals, FieldSpec::GF2] {
        let b = e(reduced_betti(c, field))?;
        if betti_at(&b, deg as isize) != 1 || b.iter().sum::<usize>() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c13_sphere_family() -> Outcome {
    let mut jobs = Vec::new();
    for d in 2..=6usize {
        for len in 1..=d / 2 {
            for total in 0..=d - 2 * len {
                let mut out = Vec::new();
                sdbetti::formulas::nondecreasing(total, len, 0, &mut Vec::new(), &mut out);
                jobs.extend(out.into_iter().map(|s| (d, s)));
            }
        }
    }
    let sds: Vec<SimplicialComplex> = (0..=6)
        .map(|d| {
            if d < 2 {
                Ok(fixture("simplex(0)"))
            } else {
                e(barycentric(&fixture(&format!("simplex({})", d - 1))))
            }
        })
        .collect::<Result<_, _>>()?;
    let results: Vec<Result<usize, String>> = jobs
        .par_iter()
        .map(|(d, seq)| {
            let sd = &sds[*d];
            let fam = e(sphere_family(*d, seq))?;
            let base = e(SphereFamily::ids(sd, &fam.union_w()))?;
            let c_ids = e(SphereFamily::ids(sd, &fam.c))?;
            let check = |extra: &[u32]| -> Result<(), String> {
                let mut w = base.clone();
                w.extend_from_slice(extra);
                w.sort_unstable();
                let sub = e(sd.induced(&w))?;
                ensure(concentrated(&sub.complex, fam.j - 1)?, || {
                    format!("d={d} seq={seq:?} with {} extra vertices", extra.len())
                })
            };
            check(&[])?;
            if c_ids.is_empty() {
                return Ok(1);
            }
            let seed = (*d as u64) << 32 | seq.iter().fold(0u64, |a, &x| a * 31 + x as u64 + 1);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..25 {
                let k = rng.gen_range(0..=c_ids.len());
                let mut pick = c_ids.clone();
                pick.shuffle(&mut rng);
                pick.truncate(k);
                check(&pick)?;
            }
            Ok(26)
        })
        .collect();
    let mut checks = 0;
    for r in results {
        checks += r?;
    }
    Ok(format!("{} sequences, {checks} subcomplexes", jobs.len()))
}

fn c14_inequalities() -> Outcome {
    let mut count = 0;
    for d in 3..=10 {
        for j in d / 2 + 1..d {
            for s in admissible_sequences(d, j) {
                ensure(e(appendix_inequalities(d, j, &s))?, || format!("d={d} j={j} {s:?}"))?;
                count += 1;
            }
        }
    }
    ensure(count > 0, || "no sequences".into())?;
    Ok(format!("{count} sequences"))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("m_j closed form vs search", c1_mj),
        ("barycentric simplex strands, d=3", c2_bar_d3),
        ("barycentric simplex strands, d=4", c3_bar_d4),
        ("Gorenstein symmetry", c4_gorenstein),
        ("edgewise simplex strands, d=3", c5_edgewise_d3),
        ("interior links", c6_links),
        ("regularity table", c7_regularity),
        ("t_1 trichotomy", c8_t1),
        ("depth invariance", c9_depth),
        ("Lambda and limits", c10_lambda),
        ("edgewise vertex growth", c11_edgewise_growth),
        ("last-strand limits", c12_limits),
        ("sphere-family homology", c13_sphere_family),
        ("block-size inequalities", c14_inequalities),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
