use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordeform::fock::{fock_matrix_named, FockMatrix};
use jordeform::hopf::{build_hopf, HopfStructure, TensorElement};
use jordeform::ncalg::{Element, Generator, PresentationName};
use jordeform::report::Report;
use jordeform::scalars::{Radical, Rational, ZSeries};
use jordeform::verify::{self, parse_algebras, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "jordeform",
    version,
    about = "Exact checks for the Jordanian two-photon and Schrodinger quantum algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Export the Fock matrix of one h6 generator.
    Matrices(MatricesArgs),
    /// Dump commutator, coproduct, counit and antipode tables.
    Tables(TablesArgs),
}

#[derive(Args)]
struct Common {
    /// Truncation order in z.
    #[arg(long, env = "JORDEFORM_DEFAULT_ORDER", default_value_t = 4)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Fock truncation dimension.
    #[arg(long, default_value_t = 16, value_parser = at_least_one)]
    dim: usize,
    /// Degree bound for the Fock-Bargmann polynomials.
    #[arg(long, default_value_t = 12, value_parser = at_least_one)]
    fb_degree: usize,
    /// h6, h6-dual, schrodinger or all.
    #[arg(long, default_value = "all", value_parser = algebras)]
    algebra: Algebras,
    /// Comma-separated subset of classical, bialgebra, hopf, rmatrix, fock, fb, iso, or all.
    #[arg(long, default_value = "all", value_parser = suites)]
    suites: Suites,
    /// Report every wall time as zero.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct MatricesArgs {
    #[command(flatten)]
    common: Common,
    /// Generator name: A+, A-, B+, B-, N or M.
    #[arg(long = "gen")]
    generator: String,
    #[arg(long, default_value_t = 16, value_parser = at_least_one)]
    dim: usize,
    #[arg(long, value_enum, default_value_t = Basis::Normalized)]
    basis: Basis,
    /// Only h6 has a Fock representation here.
    #[arg(long, default_value = "h6", value_parser = algebras)]
    algebra: Algebras,
}

#[derive(Args)]
struct TablesArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "all", value_parser = algebras)]
    algebra: Algebras,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Normalized,
    Unnormalized,
}

fn at_least_one(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        Ok(_) => Err("must be at least 1".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone)]
struct Algebras(Vec<PresentationName>);

#[derive(Clone)]
struct Suites(Vec<Suite>);

fn algebras(s: &str) -> Result<Algebras, String> {
    parse_algebras(s).map(Algebras).map_err(|e| e.to_string())
}

fn suites(s: &str) -> Result<Suites, String> {
    if s == "all" {
        return Ok(Suites(Suite::ALL.to_vec()));
    }
    let mut out: Vec<Suite> = Vec::new();
    for x in s.split(',') {
        let suite = x.trim().parse::<Suite>().map_err(|e| e.to_string())?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    Ok(Suites(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Matrices(a) => cmd_matrices(a),
        Command::Tables(a) => cmd_tables(a),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn emit(common: &Common, body: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => fs::write(path, body)?,
        None => io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, CliError> {
    let config = RunConfig {
        order: a.common.order,
        fock_dim: a.dim,
        fb_degree: a.fb_degree,
        algebras: a.algebra.0,
        suites: a.suites.0,
    };
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = verify::run(&config);
    if a.no_timing {
        report = report.without_timing();
    }
    let body = match a.common.format {
        Format::Json => {
            let v = json!({
                "order": config.order,
                "fock_dim": config.fock_dim,
                "fb_degree": config.fb_degree,
                "algebras": config.algebras,
                "suites": config.suites,
                "all_passed": report.all_passed(),
                "records": report.records,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("serializable")
            )
        }
        Format::Text => format!("{report}{}\n", summary(&report)),
    };
    emit(&a.common, &body)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn summary(report: &Report) -> String {
    let failed = report.failures().count();
    format!(
        "{} checks, {} passed, {} failed",
        report.len(),
        report.len() - failed,
        failed
    )
}

// Integers that overflow i64 are written as strings.
fn n(s: String) -> Value {
    s.parse::<i64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn rational_json(q: &Rational) -> Value {
    json!({ "num": n(q.numer().to_string()), "den": n(q.denom().to_string()) })
}

fn radical_json(r: &Radical) -> Value {
    json!({
        "q_num": n(r.q().numer().to_string()),
        "q_den": n(r.q().denom().to_string()),
        "radicand": r.radicand(),
    })
}

fn cmd_matrices(a: MatricesArgs) -> Result<ExitCode, CliError> {
    if a.algebra.0 != [PresentationName::H6Jordanian] {
        return Err(CliError::Usage(
            "Fock matrices are available for h6 only".into(),
        ));
    }
    let (dim, order) = (a.dim, a.common.order);
    let m: FockMatrix =
        fock_matrix_named(&a.generator, dim, order).map_err(|e| CliError::Usage(e.to_string()))?;
    let body = match (a.basis, a.common.format) {
        (Basis::Normalized, Format::Json) => {
            let n = m.normalized();
            let rows: Vec<Value> = (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| n.get(i, j).iter().map(radical_json).collect::<Vec<_>>())
                        .collect()
                })
                .collect();
            matrix_json(&a.generator, dim, order, "normalized", rows)
        }
        (Basis::Unnormalized, Format::Json) => {
            let rows: Vec<Value> = (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            m.get(i, j)
                                .coeffs()
                                .iter()
                                .map(rational_json)
                                .collect::<Vec<_>>()
                        })
                        .collect()
                })
                .collect();
            matrix_json(&a.generator, dim, order, "unnormalized", rows)
        }
        (Basis::Normalized, Format::Text) => {
            let n = m.normalized();
            aligned(dim, |i, j| n.render_entry(i, j))
        }
        (Basis::Unnormalized, Format::Text) => aligned(dim, |i, j| m.get(i, j).to_string()),
    };
    emit(&a.common, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn matrix_json(generator: &str, dim: usize, order: usize, basis: &str, rows: Vec<Value>) -> String {
    let v = json!({
        "generator": generator,
        "dim": dim,
        "order": order,
        "basis": basis,
        "entries": rows,
    });
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("serializable")
    )
}

fn aligned(dim: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let cells: Vec<Vec<String>> = (0..dim)
        .map(|i| (0..dim).map(|j| cell(i, j)).collect())
        .collect();
    let widths: Vec<usize> = (0..dim)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn element_terms(h: &HopfStructure, e: &Element) -> Value {
    let p = h.presentation();
    let terms: Vec<Value> = e
        .terms()
        .map(|(m, c)| {
            json!({
                "monomial": p.render_monomial(m),
                "coeffs": c.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn tensor_terms(h: &HopfStructure, t: &TensorElement) -> Value {
    let p = h.presentation();
    let terms: Vec<Value> = t
        .terms()
        .map(|(key, c)| {
            json!({
                "monomials": key.iter().map(|m| p.render_monomial(m)).collect::<Vec<_>>(),
                "coeffs": c.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn series_string(s: &ZSeries) -> String {
    s.to_string()
}

fn cmd_tables(a: TablesArgs) -> Result<ExitCode, CliError> {
    let order = a.common.order;
    let hopfs: Vec<HopfStructure> = a
        .algebra
        .0
        .into_iter()
        .map(|name| build_hopf(name, order))
        .collect();
    let body = match a.common.format {
        Format::Json => {
            let docs: Vec<Value> = hopfs.iter().map(table_json).collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&docs).expect("serializable")
            )
        }
        Format::Text => hopfs.iter().map(table_text).collect::<Vec<_>>().join("\n"),
    };
    emit(&a.common, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn table_json(h: &HopfStructure) -> Value {
    let p = h.presentation();
    let commutators: Vec<Value> = p
        .table_entries()
        .map(|(x, y, e)| {
            json!({
                "left": p.name_of(x),
                "right": p.name_of(y),
                "value": p.render(e),
                "terms": element_terms(h, e),
            })
        })
        .collect();
    let per_generator =
        |f: &dyn Fn(Generator) -> Value| -> Vec<Value> { Generator::all().map(f).collect() };
    json!({
        "algebra": h.name(),
        "order": h.order(),
        "generators": p.generator_names(),
        "commutators": commutators,
        "coproducts": per_generator(&|g| json!({
            "generator": p.name_of(g),
            "value": h.render_tensor(h.coproduct_of(g)),
            "terms": tensor_terms(h, h.coproduct_of(g)),
        })),
        "counits": per_generator(&|g| json!({
            "generator": p.name_of(g),
            "value": series_string(h.counit_of(g)),
        })),
        "antipodes": per_generator(&|g| json!({
            "generator": p.name_of(g),
            "value": p.render(h.antipode_of(g)),
            "terms": element_terms(h, h.antipode_of(g)),
        })),
    })
}

fn table_text(h: &HopfStructure) -> String {
    let p = h.presentation();
    let mut out = format!("# {} (order {})\n\n## commutators\n", h.name(), h.order());
    let brackets: Vec<(String, String)> = p
        .table_entries()
        .map(|(x, y, e)| (format!("[{},{}]", p.name_of(x), p.name_of(y)), p.render(e)))
        .collect();
    push_rows(&mut out, &brackets);
    out.push_str("\n## coproducts\n");
    let rows: Vec<(String, String)> = Generator::all()
        .map(|g| {
            (
                format!("Delta({})", p.name_of(g)),
                h.render_tensor(h.coproduct_of(g)),
            )
        })
        .collect();
    push_rows(&mut out, &rows);
    out.push_str("\n## counits\n");
    let rows: Vec<(String, String)> = Generator::all()
        .map(|g| {
            (
                format!("epsilon({})", p.name_of(g)),
                series_string(h.counit_of(g)),
            )
        })
        .collect();
    push_rows(&mut out, &rows);
    out.push_str("\n## antipodes\n");
    let rows: Vec<(String, String)> = Generator::all()
        .map(|g| (format!("S({})", p.name_of(g)), p.render(h.antipode_of(g))))
        .collect();
    push_rows(&mut out, &rows);
    out
}

fn push_rows(out: &mut String, rows: &[(String, String)]) {
    for (l, r) in rows {
        out.push_str(&format!("{l} = {r}\n"));
    }
}
