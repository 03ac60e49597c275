use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reflgreen::arith::{Mat, TRat};
use reflgreen::combinatorics::{make_symbol, similarity_order, GroupParams};
use reflgreen::gepn::{
    coset_char_table, green_suite_from, kostka_gepn, transition, verify_suite, CosetTable, GepnSystem,
    BRUTE_FORCE_LIMIT,
};
use reflgreen::labeled::{Format, LabeledMatrix};
use reflgreen::symfunc::Sign;

/// Largest n*e accepted for symbolic computations.
const SYMBOLIC_LIMIT: u32 = 24;

#[derive(Parser)]
#[command(name = "reflgreen", version, about = "Character tables, Hall-Littlewood functions and Green functions for G(e,p,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symbols, similarity classes and a-values of the character parameters.
    Symbols(Job),
    /// Character table of G(e,p,n).
    Chartable(Job),
    /// Character table of the coset sigma^q W.
    CosetChartable(Job),
    /// Hall-Littlewood functions BP in Schur coordinates.
    HallLittlewood(Job),
    /// Kostka matrix K with Bs = K BP.
    Kostka(Job),
    /// Green functions K~, Lambda~, Omega' and the residual of the matrix equation.
    Green(Job),
    /// Fake degrees R_q of the characters.
    FakeDegrees(Job),
    /// Runs the invariant suite; exits nonzero on failure.
    Verify(Job),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SignArg {
    #[value(alias = "+")]
    Plus,
    #[value(alias = "-")]
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Pretty,
    Csv,
    Json,
}

#[derive(Args, Clone, Debug)]
struct Job {
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 1)]
    p: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    q: u32,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    sign: SignArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Job {
    fn params(&self) -> Result<GroupParams> {
        if self.r == 0 {
            bail!("invalid parameter: r must be at least 1");
        }
        Ok(GroupParams::new(self.e, self.p, self.n, self.q)?)
    }

    fn sign(&self) -> Sign {
        match self.sign {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }

    fn format(&self) -> Format {
        match self.format {
            FormatArg::Pretty => Format::Pretty,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn symbolic_guard(params: &GroupParams) -> Result<()> {
    if params.n * params.e > SYMBOLIC_LIMIT {
        bail!(
            "size limit exceeded: n*e = {} exceeds {} for symbolic computations",
            params.n * params.e,
            SYMBOLIC_LIMIT
        );
    }
    Ok(())
}

fn render_all(mats: &[&LabeledMatrix], format: Format) -> Result<String> {
    match format {
        Format::Json => unreachable!("JSON is rendered from whole structures"),
        Format::Pretty => Ok(mats.iter().map(|m| m.render_pretty()).collect::<Vec<_>>().join("\n")),
        Format::Csv => {
            let mut out = String::new();
            for (i, m) in mats.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "# {}", m.title)?;
                out.push_str(&m.render_csv()?);
            }
            Ok(out)
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn table_matrix(table: &CosetTable, title: &str) -> LabeledMatrix {
    let k = table.rows.len();
    LabeledMatrix {
        title: title.to_string(),
        row_labels: table.rows.iter().map(|z| z.label(&table.params)).collect(),
        col_labels: table.cols.iter().map(|xi| xi.label()).collect(),
        row_blocks: vec![(0, k)],
        col_blocks: vec![(0, table.cols.len())],
        entries: Mat::from_rows(
            (0..k)
                .map(|i| (0..table.cols.len()).map(|j| TRat::constant(table.entries.get(i, j).clone())).collect())
                .collect(),
        ),
    }
}

fn single(m: &LabeledMatrix, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(m),
        f => render_all(&[m], f),
    }
}

fn symbols(job: &Job, params: &GroupParams) -> Result<String> {
    let order = similarity_order(params, job.r);
    let mut classes = Vec::new();
    for (b, &(s, e)) in order.classes.iter().enumerate() {
        let mut members = Vec::new();
        for z in &order.items[s..e] {
            let m0 = z.alpha.parts().iter().map(|p| p.len() as u32).max().unwrap_or(0).max(1);
            let sym = make_symbol(&z.alpha, &vec![m0; params.e as usize], job.r)?;
            members.push(json!({
                "label": z.label(params),
                "alpha": z.alpha,
                "phi": z.phi,
                "symbol": sym.rows,
                "symbol_label": sym.to_string(),
            }));
        }
        classes.push(json!({ "class": b + 1, "a": order.a_values[b], "members": members }));
    }
    let doc = json!({ "params": params, "r": job.r, "classes": classes });
    Ok(match job.format() {
        Format::Json => to_json(&doc)?,
        Format::Pretty => {
            let mut out = format!("Symbols for {} (r = {})\n", params, job.r);
            for c in &classes {
                let names: Vec<String> = c["members"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|m| format!("{} {}", m["label"].as_str().unwrap(), m["symbol_label"].as_str().unwrap()))
                    .collect();
                writeln!(out, "F{} (a = {}): {}", c["class"], c["a"], names.join(", "))?;
            }
            out
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["class", "a", "label", "symbol"])?;
            for c in &classes {
                for m in c["members"].as_array().unwrap() {
                    w.write_record([
                        c["class"].to_string(),
                        c["a"].to_string(),
                        m["label"].as_str().unwrap().to_string(),
                        m["symbol_label"].as_str().unwrap().to_string(),
                    ])?;
                }
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn run(cmd: &Command) -> Result<(String, bool)> {
    let job = match cmd {
        Command::Symbols(j)
        | Command::Chartable(j)
        | Command::CosetChartable(j)
        | Command::HallLittlewood(j)
        | Command::Kostka(j)
        | Command::Green(j)
        | Command::FakeDegrees(j)
        | Command::Verify(j) => j,
    };
    let params = job.params()?;
    let format = job.format();
    let out = match cmd {
        Command::Symbols(_) => symbols(job, &params)?,
        Command::Chartable(_) => {
            let params = params.untwisted();
            symbolic_guard(&params)?;
            let t = coset_char_table(&params)?;
            single(&table_matrix(&t, &format!("Character table of {}", params)), format)?
        }
        Command::CosetChartable(_) => {
            symbolic_guard(&params)?;
            let t = coset_char_table(&params)?;
            single(&table_matrix(&t, &format!("Character table of {}", params)), format)?
        }
        Command::HallLittlewood(_) => {
            symbolic_guard(&params)?;
            let sys = GepnSystem::new(&params, job.r)?;
            let sign = job.sign();
            let u = transition(sys.hl(sign), &sys.schur)?;
            let m = LabeledMatrix::square(
                &format!("P{} in Schur coordinates for {} (r = {})", sign.symbol(), params, job.r),
                sys.labels(),
                sys.order.classes.clone(),
                u,
            );
            single(&m, format)?
        }
        Command::Kostka(_) => {
            symbolic_guard(&params)?;
            single(&kostka_gepn(&params, job.r, job.sign())?, format)?
        }
        Command::Green(_) => {
            symbolic_guard(&params)?;
            let sys = GepnSystem::new(&params, job.r)?;
            let suite = green_suite_from(&sys)?;
            match format {
                Format::Json => to_json(&suite)?,
                f => {
                    let mut s = render_all(
                        &[
                            &suite.ktilde_minus,
                            &suite.ktilde_plus,
                            &suite.lambda_tilde,
                            &suite.lambda_omega,
                            &suite.omega_prime,
                            &suite.residual,
                        ],
                        f,
                    )?;
                    if f == Format::Pretty {
                        writeln!(s, "\nresidual is zero: {}", if suite.residual_is_zero() { "yes" } else { "no" })?;
                    }
                    s
                }
            }
        }
        Command::FakeDegrees(_) => {
            symbolic_guard(&params)?;
            let sys = GepnSystem::new(&params, job.r)?;
            let vals = sys.fake_degrees()?;
            let rows: Vec<(String, TRat)> = sys.labels().into_iter().zip(vals).collect();
            match format {
                Format::Json => {
                    let list: Vec<Value> = rows.iter().map(|(l, v)| json!({ "label": l, "value": v })).collect();
                    to_json(&json!({ "params": params, "fake_degrees": list }))?
                }
                Format::Pretty => {
                    let w = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
                    let mut s = format!("Fake degrees for {}\n", params);
                    for (l, v) in &rows {
                        writeln!(s, "{:<w$}  {}", l, v.render(), w = w)?;
                    }
                    s
                }
                Format::Csv => {
                    let mut wr = csv_writer();
                    wr.write_record(["label", "fake_degree"])?;
                    for (l, v) in &rows {
                        wr.write_record([l.clone(), v.render()])?;
                    }
                    String::from_utf8(wr.into_inner()?)?
                }
            }
        }
        Command::Verify(_) => {
            if params.group_order() > BRUTE_FORCE_LIMIT {
                bail!(
                    "size limit exceeded: |W| = {} exceeds {} for brute-force verification",
                    params.group_order(),
                    BRUTE_FORCE_LIMIT
                );
            }
            symbolic_guard(&params)?;
            let checks = verify_suite(&params, job.r)?;
            let ok = checks.iter().all(|c| c.passed);
            let s = match format {
                Format::Json => to_json(&json!({ "params": params, "r": job.r, "passed": ok, "checks": checks }))?,
                Format::Pretty => {
                    let mut s = format!("Verification for {} (r = {})\n", params, job.r);
                    for c in &checks {
                        writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
                    }
                    s
                }
                Format::Csv => {
                    let mut wr = csv_writer();
                    wr.write_record(["check", "passed", "detail"])?;
                    for c in &checks {
                        wr.write_record([c.name.clone(), c.passed.to_string(), c.detail.clone()])?;
                    }
                    String::from_utf8(wr.into_inner()?)?
                }
            };
            return Ok((s, ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job_out = match &cli.command {
        Command::Symbols(j)
        | Command::Chartable(j)
        | Command::CosetChartable(j)
        | Command::HallLittlewood(j)
        | Command::Kostka(j)
        | Command::Green(j)
        | Command::FakeDegrees(j)
        | Command::Verify(j) => j.out.clone(),
    };
    let (text, ok) = match run(&cli.command) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {:#}", e);
            return ExitCode::from(2);
        }
    };
    let written = match job_out {
        Some(path) => std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {:#}", e);
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
