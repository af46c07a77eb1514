use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use sdbetti::asymptotics::{
    build_limit_example, default_scale, eigendecompose, lambda_matrix, last_strand_limit, limit_polynomial,
    limit_vertex_constant,
};
use sdbetti::hochster::{graded_betti_table, ring_invariants, strand_profile};
use sdbetti::homology::reduced_betti;
use sdbetti::io::{from_json, to_json};
use sdbetti::subdivision::{barycentric_iter, edgewise};
use sdbetti::{standard_complex, SimplicialComplex};

use crate::{suites, CliError, CliResult, Command, Format, GenerateCommand, Global, LimitsCommand, Mode};

pub fn read_complex(path: &Path) -> CliResult<SimplicialComplex> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(from_json(&text)?)
}

pub fn emit(global: &Global, text: &str) -> CliResult<()> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &global.output {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn emit_json<T: Serialize>(global: &Global, value: &T) -> CliResult<()> {
    emit(global, &serde_json::to_string_pretty(value).expect("serializable"))
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn grid<T: ToString>(m: &[Vec<T>]) -> Vec<Vec<String>> {
    m.iter().map(|r| strings(r)).collect()
}

pub fn dispatch(global: &Global, command: Command) -> CliResult<()> {
    match command {
        Command::Info { file } => {
            let c = read_complex(&file)?;
            let f = c.f_vector()?;
            let betti = reduced_betti(&c, global.field)?;
            emit_json(
                global,
                &json!({
                    "n": c.n(),
                    "vertices": c.vertices().len(),
                    "dim": c.dim(),
                    "facets": c.facets().len(),
                    "f_vector": strings(f.entries()),
                    "pure": c.is_pure(),
                    "flag": c.is_flag()?,
                    "t1": c.t1()?,
                    "field": global.field.to_string(),
                    "reduced_betti": betti,
                }),
            )
        }
        Command::Subdivide { file, mode, r } => {
            let c = read_complex(&file)?;
            let sub = match mode {
                Mode::Bary => barycentric_iter(&c, r as usize)?,
                Mode::Edgewise => edgewise(&c, r)?,
            };
            emit(global, &to_json(&sub))
        }
        Command::Betti { file, format } => {
            let c = read_complex(&file)?;
            let table = graded_betti_table(&c, global.field, global.gate)?;
            match format {
                Format::Csv => emit(global, &table.to_csv()),
                Format::Json => emit_json(global, &table),
            }
        }
        Command::Strands { file } => {
            let c = read_complex(&file)?;
            let table = graded_betti_table(&c, global.field, global.gate)?;
            let strands = (0..=table.max_strand())
                .map(|j| strand_profile(&table, j))
                .collect::<Result<Vec<_>, _>>()?;
            emit_json(
                global,
                &json!({ "invariants": ring_invariants(&table, &c)?, "strands": strands }),
            )
        }
        Command::Limits(cmd) => limits(global, cmd),
        Command::Generate(cmd) => generate(global, cmd),
        Command::Verify(args) => {
            let report = suites::run(global, &args)?;
            emit_json(global, &json!({ "passed": report.passed(), "report": report }))?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
        Command::Selftest { fixtures, inject_fault } => {
            let report = suites::selftest(global, fixtures.as_deref(), inject_fault)?;
            emit_json(global, &json!({ "passed": report.passed(), "report": report }))?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
    }
}

fn limits(global: &Global, cmd: LimitsCommand) -> CliResult<()> {
    match cmd {
        LimitsCommand::Lambda { d } => {
            let lam = lambda_matrix(d)?;
            let eig = eigendecompose(&lam)?;
            emit_json(
                global,
                &json!({
                    "d": d,
                    "lambda": grid(&lam.entries),
                    "diag": strings(&eig.diag),
                    "p": grid(&eig.p),
                    "p_inv": grid(&eig.p_inv),
                    "vertex_constant": limit_vertex_constant(d)?.to_string(),
                    "reconstructs": eig.reconstruct() == lam.to_rational(),
                }),
            )
        }
        LimitsCommand::Polynomial { file } => {
            let c = read_complex(&file)?;
            let coeffs = limit_polynomial(&c)?;
            emit_json(
                global,
                &json!({ "d": c.d(), "coefficients_high_to_low": strings(&coeffs) }),
            )
        }
        LimitsCommand::Ratio { file } => {
            let c = read_complex(&file)?;
            let v = last_strand_limit(&c, global.field)?;
            emit_json(
                global,
                &json!({ "field": global.field.to_string(), "limit": v.to_string() }),
            )
        }
    }
}

fn generate(global: &Global, cmd: GenerateCommand) -> CliResult<()> {
    match cmd {
        GenerateCommand::LimitExample { d, p, q, scale } => {
            let c = scale.unwrap_or_else(|| default_scale(d, p, q));
            emit(global, &to_json(&build_limit_example(d, p, q, c)?))
        }
        GenerateCommand::Fixture { spec } => {
            let spec = spec
                .parse()
                .map_err(|e: sdbetti::Error| CliError::Config(e.to_string()))?;
            emit(global, &to_json(&standard_complex(&spec)?))
        }
    }
}
