//! Verification suites behind `verify` and `selftest`.

use std::path::Path;

use rayon::prelude::*;

use sdbetti::asymptotics::{
    build_limit_example, default_scale, eigendecompose, f_iterate_sd, lambda_matrix, last_strand_limit,
    verify_last_strand_small_r,
};
use sdbetti::formulas::{
    admissible_sequences, appendix_inequalities, m_bruteforce, m_closed, predict_reg, verify_predictions, w_invariant,
    SimplexTarget, SubdivisionMode,
};
use sdbetti::hochster::{gorenstein_symmetry_check, graded_betti_table, regularity};
use sdbetti::iso::{is_isomorphic, verify_isomorphism};
use sdbetti::report::Report;
use sdbetti::subdivision::{barycentric, barycentric_iter, edgewise, interior_face_witness};
use sdbetti::{standard_complex, FieldSpec, SimplicialComplex};

use crate::commands::read_complex;
use crate::{CliError, CliResult, Fault, Global, Suite, VerifyArgs};

fn fixture(spec: &str) -> CliResult<SimplicialComplex> {
    let spec = spec
        .parse()
        .map_err(|e: sdbetti::Error| CliError::Config(e.to_string()))?;
    Ok(standard_complex(&spec)?)
}

fn simplex(d: usize) -> CliResult<SimplicialComplex> {
    Ok(SimplicialComplex::from_facets(&[(0..d as u32).collect::<Vec<_>>()], d)?)
}

fn dims(args: &VerifyArgs, default: &[usize]) -> CliResult<Vec<usize>> {
    let d = if args.d.is_empty() {
        default.to_vec()
    } else {
        args.d.clone()
    };
    if let Some(bad) = d.iter().find(|&&x| x < 2) {
        return Err(CliError::Config(format!("d = {bad} is below 2")));
    }
    Ok(d)
}

type MjFn = fn(usize, usize) -> sdbetti::Result<u64>;

fn wrong_m(d: usize, j: usize) -> sdbetti::Result<u64> {
    m_closed(d, j).map(|m| m + 1)
}

fn mj(dmax: usize, closed: MjFn) -> CliResult<Report> {
    if dmax < 2 {
        return Err(CliError::Config("dmax must be at least 2".into()));
    }
    let mut report = Report::new("mj");
    let rows: Vec<CliResult<(usize, Vec<String>)>> = (2..=dmax)
        .into_par_iter()
        .map(|d| {
            let mut bad = Vec::new();
            for j in 1..d {
                let (a, b) = (closed(d, j)?, m_bruteforce(d, j)?);
                if a != b {
                    bad.push(format!("m_{j}: closed {a}, search {b}"));
                }
            }
            let top = closed(d, d - 1)?;
            if top != (1u64 << d) - d as u64 - 1 {
                bad.push(format!("m_{} = {top}", d - 1));
            }
            Ok((d, bad))
        })
        .collect();
    for row in rows {
        let (d, bad) = row?;
        report.check(
            format!("m_j at d={d}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} cells", d - 1)
            } else {
                bad.join("; ")
            },
        );
    }
    Ok(report)
}

fn thm_bar(global: &Global, ds: &[usize]) -> CliResult<Report> {
    let mut report = Report::new("thm-bar");
    for &d in ds {
        let (r, table) = verify_predictions(SimplexTarget::Barycentric { d }, global.field, global.gate)?;
        report.extend(r);
        report.check(
            format!("sd(simplex {d}) Gorenstein symmetry"),
            gorenstein_symmetry_check(&table, d)?,
            "",
        );
    }
    Ok(report)
}

fn edgewise_suite(global: &Global, ds: &[usize], r: Option<u32>) -> CliResult<Report> {
    let mut report = Report::new("edgewise");
    for &d in ds {
        let r = r.unwrap_or(d as u32);
        if (r as usize) < d {
            return Err(CliError::Config(format!(
                "edgewise predictions need r >= d ({r} < {d})"
            )));
        }
        let (rep, table) = verify_predictions(SimplexTarget::Edgewise { d, r }, global.field, global.gate)?;
        report.extend(rep);
        let reg = table.reg()?;
        report.check(
            format!("edgewise(simplex {d}, r={r}) regularity"),
            reg == d - 1,
            format!("reg {reg}"),
        );
    }
    Ok(report)
}

fn gorenstein(global: &Global, ds: &[usize]) -> CliResult<Report> {
    let mut report = Report::new("gorenstein");
    for &d in ds {
        let sd = barycentric(&simplex(d)?)?;
        let table = graded_betti_table(&sd, global.field, global.gate)?;
        report.check(
            format!("sd(simplex {d})"),
            gorenstein_symmetry_check(&table, d)?,
            format!("pdim {}", table.pdim()?),
        );
    }
    Ok(report)
}

fn link(ds: &[usize], r: Option<u32>) -> CliResult<Report> {
    let mut report = Report::new("link");
    for &d in ds {
        let r = r.unwrap_or(d as u32);
        for s in 1..d {
            let (sub, face) = interior_face_witness(d, r, s)?;
            let lk = sub.link(&face)?;
            let target = barycentric(&fixture(&format!("simplex_boundary({})", d - s))?)?;
            let iso = is_isomorphic(&lk.complex, &target)?;
            let ok = iso
                .as_ref()
                .is_some_and(|i| verify_isomorphism(&lk.complex, &target, i));
            report.check(
                format!("d={d} r={r} interior {s}-face {:?}", face.vertices()),
                ok,
                format!("link f-vector {}", fmt_f(&lk.complex)?),
            );
        }
    }
    Ok(report)
}

fn fmt_f(c: &SimplicialComplex) -> CliResult<String> {
    let f = c.f_vector()?;
    Ok(format!(
        "({})",
        f.entries()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ))
}

fn reg(global: &Global) -> CliResult<Report> {
    let mut report = Report::new("reg");
    let fixtures = [
        ("simplex(1)", 2u32),
        ("simplex_boundary(2)", 2),
        ("cycle(6)", 2),
        ("rp2_six", 3),
    ];
    for field in [FieldSpec::Rationals, FieldSpec::GF2] {
        for (name, r) in fixtures {
            let c = fixture(name)?;
            let w = w_invariant(&c, field)?;
            for mode in [SubdivisionMode::Barycentric(1), SubdivisionMode::Edgewise(r)] {
                let sub = match mode {
                    SubdivisionMode::Barycentric(_) => barycentric(&c)?,
                    SubdivisionMode::Edgewise(r) => edgewise(&c, r)?,
                };
                let pred = predict_reg(&c, field, mode, global.gate)?;
                let (actual, source, _) = regularity(&sub, field, global.gate)?;
                let ok = if pred.exact {
                    actual == pred.value
                } else {
                    actual >= pred.value
                };
                report.check(
                    format!("{name} {mode:?} over {field}"),
                    ok,
                    format!(
                        "w {w}, predicted {}{}, got {actual} ({source:?})",
                        if pred.exact { "" } else { ">= " },
                        pred.value
                    ),
                );
            }
        }
    }
    Ok(report)
}

fn depth_invariance(global: &Global) -> CliResult<Report> {
    let mut report = Report::new("depth-invariance");
    let depth = |c: &SimplicialComplex| -> CliResult<usize> {
        let t = graded_betti_table(c, global.field, global.gate)?;
        Ok(c.n() - t.pdim()?)
    };
    for name in ["path(4)", "cycle(6)", "stacked_attach(cycle(3),2,[0])"] {
        let c = fixture(name)?;
        let (a, b, e) = (depth(&c)?, depth(&barycentric(&c)?)?, depth(&edgewise(&c, 2)?)?);
        report.check(name, a == b && a == e, format!("depth {a}, sd {b}, edgewise(2) {e}"));
    }
    Ok(report)
}

fn appendix(dmax: usize) -> CliResult<Report> {
    let mut report = Report::new("appendix");
    for d in 3..=dmax {
        let mut bad = Vec::new();
        let mut count = 0;
        for j in d / 2 + 1..d {
            for s in admissible_sequences(d, j) {
                count += 1;
                if !appendix_inequalities(d, j, &s)? {
                    bad.push(format!("j={j} {s:?}"));
                }
            }
        }
        report.check(
            format!("d={d}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{count} sequences")
            } else {
                bad.join("; ")
            },
        );
    }
    Ok(report)
}

fn last_strand(global: &Global) -> CliResult<Report> {
    let mut report = Report::new("last-strand");
    let cases = [
        ("stacked_attach(cycle(3),2,[0])", SubdivisionMode::Barycentric(1)),
        ("simplex_boundary(2)", SubdivisionMode::Barycentric(1)),
        ("stacked_attach(cycle(3),2,[0])", SubdivisionMode::Edgewise(2)),
        ("simplex_boundary(3)", SubdivisionMode::Edgewise(2)),
    ];
    for (name, mode) in cases {
        let c = fixture(name)?;
        let mut r = verify_last_strand_small_r(&c, mode, global.field, global.gate)?;
        for check in &mut r.checks {
            check.name = format!("{name} {}", check.name);
        }
        report.extend(r);
    }
    Ok(report)
}

fn limits(global: &Global) -> CliResult<Report> {
    let mut report = Report::new("limits");
    for d in 1..=6 {
        let lam = lambda_matrix(d)?;
        let eig = eigendecompose(&lam)?;
        report.check(
            format!("P D P^-1 = Lambda_{d}"),
            eig.reconstruct() == lam.to_rational(),
            format!(
                "diag {:?}",
                eig.diag.iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
        );
    }
    for name in ["simplex(2)", "simplex_boundary(3)", "cycle(5)"] {
        let c = fixture(name)?;
        let f = c.f_vector()?;
        let ok = (1..=3).try_fold(true, |acc, r| -> CliResult<bool> {
            Ok(acc && f_iterate_sd(&f, r)? == barycentric_iter(&c, r)?.f_vector()?)
        })?;
        report.check(format!("f-vector transfer on {name}"), ok, "r = 1, 2, 3");
    }
    let field = match global.field {
        FieldSpec::Rationals => FieldSpec::GF2,
        f => f,
    };
    let mut bad = Vec::new();
    let mut cells = 0;
    for d in [2usize, 3] {
        for q in 1..=8 {
            for p in 0..q {
                let ex = build_limit_example(d, p, q, default_scale(d, p, q))?;
                let v = last_strand_limit(&ex, field)?;
                if v != ratio(p, q) {
                    bad.push(format!("d={d} {p}/{q}: {v}"));
                }
                cells += 1;
            }
        }
    }
    report.check(
        "last-strand limit p/q",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{cells} examples over {field}")
        } else {
            bad.join("; ")
        },
    );
    Ok(report)
}

fn ratio(p: usize, q: usize) -> num_rational::BigRational {
    num_rational::BigRational::new(p.into(), q.into())
}

pub fn run(global: &Global, args: &VerifyArgs) -> CliResult<Report> {
    match args.suite {
        Suite::Mj => mj(args.dmax.unwrap_or(16), m_closed),
        Suite::ThmBar => thm_bar(global, &dims(args, &[3, 4])?),
        Suite::Edgewise => edgewise_suite(global, &dims(args, &[3])?, args.r),
        Suite::Gorenstein => gorenstein(global, &dims(args, &[3, 4])?),
        Suite::Link => link(&dims(args, &[3, 4])?, args.r),
        Suite::Reg => reg(global),
        Suite::DepthInvariance => depth_invariance(global),
        Suite::Appendix => appendix(args.dmax.unwrap_or(10)),
        Suite::LastStrand => last_strand(global),
        Suite::Limits => limits(global),
    }
}

const C6: &str = include_str!("../fixtures/c6.json");
const TRI: &str = include_str!("../fixtures/tri.json");

fn fixture_files(dir: Option<&Path>) -> CliResult<(SimplicialComplex, SimplicialComplex)> {
    match dir {
        None => Ok((sdbetti::io::from_json(C6)?, sdbetti::io::from_json(TRI)?)),
        Some(dir) => {
            if !dir.is_dir() {
                return Err(CliError::Config(format!("{} is not a directory", dir.display())));
            }
            Ok((
                read_complex(&dir.join("c6.json"))?,
                read_complex(&dir.join("tri.json"))?,
            ))
        }
    }
}

pub fn selftest(global: &Global, fixtures: Option<&Path>, fault: Option<Fault>) -> CliResult<Report> {
    let (c6, tri) = fixture_files(fixtures)?;
    let mut report = Report::new("selftest");
    let t = graded_betti_table(&c6, FieldSpec::Rationals, global.gate)?;
    report.check(
        "c6 Betti table",
        t.get(1, 1) == 9 && t.get(4, 2) == 1,
        t.to_csv().replace('\n', " "),
    );
    let json = sdbetti::io::to_json(&c6);
    report.check("c6 JSON round trip", sdbetti::io::from_json(&json)? == c6, "");
    let sub = edgewise(&tri, 2)?;
    report.check("tri edgewise r=2", sub.n() == 6, format!("{} vertices", sub.n()));
    let closed: MjFn = match fault {
        Some(Fault::WrongMj) => wrong_m,
        None => m_closed,
    };
    report.extend(mj(10, closed)?);
    let fast = Global {
        field: FieldSpec::Rationals,
        ..global.clone()
    };
    report.extend(thm_bar(&fast, &[3])?);
    report.extend(edgewise_suite(&fast, &[3], Some(3))?);
    report.extend(link(&[3], Some(3))?);
    report.extend(appendix(8)?);
    report.extend(depth_invariance(&fast)?);
    Ok(report)
}
