//! Batch front-end: enumeration, computation and verification commands
//! with machine-readable output.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use qqschur::coeff::{GenericRing, PrimeFieldSpec, RationalSpec};
use qqschur::hecke::Algebra;
use qqschur::linalg::LinAlg;
use qqschur::par::Exec;
use qqschur::shapes::{bipartitions, shapes, Bicomposition};
use qqschur::tableaux::{bitabloids, standard_bitableaux, typed_tableaux, TypedKind};
use qqschur::verify::{run_all, run_suite, SuiteReport, VerifyOpts, SUITE_NAMES};
use qqschur::CoeffRing;

#[derive(Parser)]
#[command(
    name = "qqschur",
    version,
    about = "Exact computations in the two-parameter Schur algebra of type B"
)]
struct Cli {
    #[command(flatten)]
    opts: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Rank of the group (window length)
    #[arg(long, global = true, default_value_t = 2)]
    r: usize,
    /// Number of parts of the type shapes (defaults to r)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Value of q (rational like `3` or `-2/5`); generic when absent
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Value of Q; generic when absent
    #[arg(long = "Q", visible_alias = "big-q", global = true, allow_hyphen_values = true)]
    big_q: Option<String>,
    /// Prime characteristic; q and Q are then read as integers mod p
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (1 = sequential; default uses all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Permit ranks above 5
    #[arg(long, global = true, default_value_t = false)]
    allow_large: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the type shapes for the chosen (n, r)
    Shapes {
        /// Restrict to canonical bipartitions
        #[arg(long, default_value_t = false)]
        bipartitions: bool,
    },
    /// Enumerate tableaux attached to a shape (or a shape pair)
    Tableaux {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value = "bitabloids")]
        kind: String,
    },
    /// Module, Specht, Weyl and irreducible dimensions per bipartition
    Dims {
        #[arg(long)]
        shape: Option<String>,
    },
    /// Standard basis of a homomorphism space plus the commutant check
    Hom {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Gram matrix and rank of the contracted form for a bipartition
    Gram {
        #[arg(long)]
        shape: String,
    },
    /// Run a named invariant suite (or `all`)
    Verify {
        /// Suite name; `all` runs everything
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|e| e.to_string())?;
        let d = BigInt::from_str(den.trim()).map_err(|e| e.to_string())?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|e| e.to_string())?,
        ))
    }
}

/// Parse `((2,1),(1))`, `((-),(1^3))`, `((),(3))`.
fn parse_shape(s: &str) -> Result<Bicomposition, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or("shape must be wrapped in parentheses")?;
    let mut depth = 0usize;
    let mut split = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                split = Some(i);
                break;
            }
            _ => {}
        }
    }
    let split = split.ok_or("shape needs two components")?;
    let parse_comp = |c: &str| -> Result<Vec<usize>, String> {
        let body = c
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or("component must be parenthesized")?;
        if body.is_empty() || body == "-" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for tok in body.split(',') {
            if let Some((base, exp)) = tok.split_once('^') {
                let b: usize = base.parse().map_err(|_| format!("bad part '{}'", tok))?;
                let e: usize = exp.parse().map_err(|_| format!("bad power '{}'", tok))?;
                out.extend(std::iter::repeat_n(b, e));
            } else {
                out.push(tok.parse().map_err(|_| format!("bad part '{}'", tok))?);
            }
        }
        Ok(out)
    };
    Ok(Bicomposition::new(
        parse_comp(&inner[..split])?,
        parse_comp(&inner[split + 1..])?,
    ))
}

#[allow(clippy::large_enum_variant)]
enum Params {
    Generic,
    Rational(RationalSpec),
    Prime(PrimeFieldSpec),
}

impl Params {
    fn describe(&self) -> String {
        match self {
            Params::Generic => "generic".into(),
            Params::Rational(s) => format!("q={} Q={}", s.q_value(), s.big_q_value()),
            Params::Prime(p) => format!("char {}", p.p()),
        }
    }
}

fn build_params(g: &Global) -> Result<Params, String> {
    match (&g.characteristic, &g.q, &g.big_q) {
        (None, None, None) => Ok(Params::Generic),
        (None, q, bq) => {
            let q = parse_rational(q.as_deref().unwrap_or("1"))?;
            let bq = parse_rational(bq.as_deref().unwrap_or("1"))?;
            RationalSpec::new(q, bq)
                .map(Params::Rational)
                .map_err(|e| e.to_string())
        }
        (Some(p), q, bq) => {
            let q: i64 = q
                .as_deref()
                .unwrap_or("1")
                .parse()
                .map_err(|_| "q must be an integer mod p")?;
            let bq: i64 = bq
                .as_deref()
                .unwrap_or("1")
                .parse()
                .map_err(|_| "Q must be an integer mod p")?;
            PrimeFieldSpec::new(*p, q, bq)
                .map(Params::Prime)
                .map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. piping into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let g = &cli.opts;
    if g.r > 5 && !g.allow_large {
        return Err(format!(
            "r = {} enumerates {} group elements and large exact eliminations; pass --allow-large to proceed",
            g.r,
            (1u64 << g.r) * (1..=g.r as u64).product::<u64>()
        ));
    }
    if g.r >= 5 {
        let order = (1u64 << g.r) * (1..=g.r as u64).product::<u64>();
        eprintln!(
            "note: rank {} builds {} group elements; generic eliminations may need several GB",
            g.r, order
        );
    }
    qqschur::par::configure_pool(g.jobs);
    let n = g.n.unwrap_or(g.r.max(1));
    if n < 1 {
        return Err("n must be at least 1".into());
    }
    let params = build_params(g)?;
    match &cli.command {
        Command::Shapes { bipartitions: bp } => {
            let list = if *bp { bipartitions(g.r) } else { shapes(n, g.r) };
            emit_shapes(g.format, &list);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tableaux {
            shape,
            lambda,
            mu,
            kind,
        } => cmd_tableaux(g, shape.as_deref(), lambda.as_deref(), mu.as_deref(), kind),
        Command::Dims { shape } => cmd_dims(g, n, &params, shape.as_deref()),
        Command::Hom { lambda, mu } => cmd_hom(g, &params, lambda, mu),
        Command::Gram { shape } => cmd_gram(g, n, &params, shape),
        Command::Verify { name, suite, seed } => {
            let chosen = suite
                .clone()
                .or_else(|| name.clone())
                .unwrap_or_else(|| "all".to_string());
            let opts = VerifyOpts {
                r: g.r,
                n: g.n,
                exec: Exec::from_jobs(g.jobs),
                seed: seed.unwrap_or(0x5eed),
            };
            let reports = if chosen == "all" {
                run_all(&opts)
            } else {
                vec![run_suite(&chosen, &opts).map_err(|_| {
                    format!(
                        "unknown suite '{}'; available: all, {}",
                        chosen,
                        SUITE_NAMES.join(", ")
                    )
                })?]
            };
            let ok = emit_reports(g.format, &reports);
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn emit_shapes(format: Format, list: &[Bicomposition]) {
    match format {
        Format::Json => {
            let v: Vec<_> = list.iter().map(shape_json).collect();
            println!("{}", serde_json::Value::Array(v));
        }
        Format::Csv => {
            println!("first,second,a,r,bipartition");
            for s in list {
                println!(
                    "{:?},{:?},{},{},{}",
                    s.first,
                    s.second,
                    s.a(),
                    s.r(),
                    s.is_bipartition()
                );
            }
        }
        Format::Text => {
            for s in list {
                println!("{}", s);
            }
        }
    }
}

fn shape_json(s: &Bicomposition) -> serde_json::Value {
    serde_json::json!({ "first": s.first, "second": s.second })
}

fn cmd_tableaux(
    g: &Global,
    shape: Option<&str>,
    lambda: Option<&str>,
    mu: Option<&str>,
    kind: &str,
) -> Result<ExitCode, String> {
    match (shape, lambda, mu) {
        (Some(s), None, None) => {
            let shape = parse_shape(s)?;
            if shape.r() != g.r {
                return Err(format!(
                    "shape {} has size {}, but r = {}",
                    shape,
                    shape.r(),
                    g.r
                ));
            }
            let items: Vec<serde_json::Value> = match kind {
                "bitabloids" | "row-standard" => {
                    bitabloids(&shape).iter().map(|b| b.to_json()).collect()
                }
                "standard" => standard_bitableaux(&shape)
                    .iter()
                    .map(|t| t.to_json())
                    .collect(),
                other => {
                    return Err(format!(
                        "kind '{}' needs --lambda/--mu or is unknown (bitabloids, standard, typed, positive, semistandard)",
                        other
                    ))
                }
            };
            emit_values(g.format, &items);
            Ok(ExitCode::SUCCESS)
        }
        (None, Some(l), Some(m)) => {
            let lambda = parse_shape(l)?;
            let mu = parse_shape(m)?;
            if lambda.r() != g.r || mu.r() != g.r {
                return Err("lambda and mu must have the configured size".into());
            }
            let k = match kind {
                "typed" | "all" => TypedKind::All,
                "positive" => TypedKind::Positive,
                "semistandard" => TypedKind::Semistandard,
                other => return Err(format!("unknown typed kind '{}'", other)),
            };
            let items: Vec<serde_json::Value> = typed_tableaux(&lambda, &mu, k)
                .iter()
                .map(|t| t.to_json())
                .collect();
            emit_values(g.format, &items);
            Ok(ExitCode::SUCCESS)
        }
        _ => Err("pass either --shape, or --lambda with --mu".into()),
    }
}

fn emit_values(format: Format, items: &[serde_json::Value]) {
    match format {
        Format::Json => println!("{}", serde_json::Value::Array(items.to_vec())),
        _ => {
            for v in items {
                println!("{}", v);
            }
        }
    }
}

fn cmd_dims(
    g: &Global,
    n: usize,
    params: &Params,
    shape: Option<&str>,
) -> Result<ExitCode, String> {
    let list = match shape {
        Some(s) => vec![parse_shape(s)?],
        None => bipartitions(g.r),
    };
    for s in &list {
        if s.r() != g.r {
            return Err(format!("shape {} has size {}, but r = {}", s, s.r(), g.r));
        }
        if !s.is_bipartition() {
            return Err(format!("dims needs bipartitions; {} is not one", s));
        }
    }
    let mut rows = Vec::new();
    match params {
        Params::Generic => {
            let a = Algebra::new(g.r, GenericRing);
            for s in &list {
                rows.push(dims_row(&a, s, n).map_err(|e| e.to_string())?);
            }
        }
        Params::Rational(spec) => {
            let a = Algebra::new(g.r, spec.clone());
            for s in &list {
                rows.push(dims_row(&a, s, n).map_err(|e| e.to_string())?);
            }
        }
        Params::Prime(spec) => {
            let a = Algebra::new(g.r, *spec);
            for s in &list {
                rows.push(dims_row(&a, s, n).map_err(|e| e.to_string())?);
            }
        }
    }
    match g.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(s, m, sp, w, f)| {
                    serde_json::json!({
                        "shape": shape_json(s),
                        "spec": params.describe(),
                        "dim_M": m,
                        "dim_S": sp,
                        "dim_W": w,
                        "dim_F": f,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(v));
        }
        Format::Csv => {
            println!("shape,spec,dim_M,dim_S,dim_W,dim_F");
            for (s, m, sp, w, f) in &rows {
                println!("{},{},{},{},{},{}", s, params.describe(), m, sp, w, f);
            }
        }
        Format::Text => {
            for (s, m, sp, w, f) in &rows {
                println!("{}  M={} S={} W={} F={}", s, m, sp, w, f);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

type DimsRow = (Bicomposition, usize, usize, usize, usize);

fn dims_row<R: CoeffRing + LinAlg>(
    a: &Algebra<R>,
    s: &Bicomposition,
    n: usize,
) -> Result<DimsRow, qqschur::Error> {
    let m = a.shape_data(s).basis.len();
    let sp = a.specht_rank(s)?;
    let w = a.weyl_dim(s, n);
    let f = a.gram_rank(s, n)?;
    Ok((s.clone(), m, sp, w, f))
}

fn cmd_hom(g: &Global, params: &Params, lambda: &str, mu: &str) -> Result<ExitCode, String> {
    let l = parse_shape(lambda)?;
    let m = parse_shape(mu)?;
    if l.r() != g.r || m.r() != g.r {
        return Err("lambda and mu must have the configured size".into());
    }
    let out = match params {
        Params::Generic => hom_report(&Algebra::new(g.r, GenericRing), &l, &m)?,
        Params::Rational(spec) => hom_report(&Algebra::new(g.r, spec.clone()), &l, &m)?,
        Params::Prime(spec) => hom_report(&Algebra::new(g.r, *spec), &l, &m)?,
    };
    match g.format {
        Format::Json => println!("{}", out.0),
        Format::Csv => {
            println!("d,v,u,c,in_delta");
            for line in out.1 {
                println!("{}", line);
            }
            println!("# basis_size={} oracle={}", out.2, out.3);
        }
        Format::Text => {
            for line in out.1 {
                println!("triple {}", line);
            }
            println!("basis size {} | commutant dimension {}", out.2, out.3);
        }
    }
    if out.2 != out.3 {
        return Err(format!(
            "standard basis size {} disagrees with commutant dimension {}",
            out.2, out.3
        ));
    }
    Ok(ExitCode::SUCCESS)
}

type HomReport = (serde_json::Value, Vec<String>, usize, usize);

fn hom_report<R: CoeffRing + LinAlg>(
    a: &Algebra<R>,
    l: &Bicomposition,
    m: &Bicomposition,
) -> Result<HomReport, String> {
    let triples = a.admissibles(l, m);
    let phis = a
        .phi_standard_batch(l, m, &triples)
        .map_err(|e| e.to_string())?;
    for phi in &phis {
        if !a.hom_well_defined(phi) {
            return Err("constructed map failed the intertwining check".into());
        }
    }
    let (dim, _) = a.hom_oracle(l, m);
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for (t, phi) in triples.iter().zip(&phis) {
        let dw = a.group.perm(t.d);
        let vw = a.group.perm(t.v);
        let uw = a.group.perm(t.u);
        let cw = a.group.perm(t.c);
        lines.push(format!(
            "d={} v={} u={} c={} delta={}",
            dw, vw, uw, cw, t.in_delta
        ));
        let image: Vec<serde_json::Value> = {
            let data = a.shape_data(m);
            phi.gen_image
                .coeffs
                .iter()
                .map(|(&b, c)| serde_json::json!([data.basis[b].to_json(), a.ring.fmt_elem(c)]))
                .collect()
        };
        entries.push(serde_json::json!({
            "d": dw.window(),
            "v": vw.window(),
            "u": uw.window(),
            "c": cw.window(),
            "in_delta": t.in_delta,
            "gen_image": image,
        }));
    }
    let json = serde_json::json!({
        "lambda": shape_json(l),
        "mu": shape_json(m),
        "basis_size": triples.len(),
        "oracle_dimension": dim,
        "basis": entries,
    });
    Ok((json, lines, triples.len(), dim))
}

fn cmd_gram(g: &Global, n: usize, params: &Params, shape: &str) -> Result<ExitCode, String> {
    let s = parse_shape(shape)?;
    if s.r() != g.r {
        return Err(format!("shape {} has size {}, but r = {}", s, s.r(), g.r));
    }
    if !s.is_bipartition() {
        return Err(format!("gram needs a bipartition; {} is not one", s));
    }
    let (labels, matrix, rank, dim_w) = match params {
        Params::Generic => gram_report(&Algebra::new(g.r, GenericRing), &s, n)?,
        Params::Rational(spec) => gram_report(&Algebra::new(g.r, spec.clone()), &s, n)?,
        Params::Prime(spec) => gram_report(&Algebra::new(g.r, *spec), &s, n)?,
    };
    match g.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "shape": shape_json(&s),
                    "spec": params.describe(),
                    "labels": labels,
                    "matrix": matrix,
                    "dim_W": dim_w,
                    "dim_F": rank,
                })
            );
        }
        Format::Csv => {
            for row in &matrix {
                println!("{}", row.join(","));
            }
            println!("# dim_W={} dim_F={}", dim_w, rank);
        }
        Format::Text => {
            for (l, row) in labels.iter().zip(&matrix) {
                println!("{} : {}", l, row.join(", "));
            }
            println!("dim_W {} | dim_F {}", dim_w, rank);
        }
    }
    Ok(ExitCode::SUCCESS)
}

type GramReport = (Vec<String>, Vec<Vec<String>>, usize, usize);

fn gram_report<R: CoeffRing + LinAlg>(
    a: &Algebra<R>,
    s: &Bicomposition,
    n: usize,
) -> Result<GramReport, String> {
    let g = a.gram_matrix(s, n).map_err(|e| e.to_string())?;
    let labels: Vec<String> = g
        .labels
        .iter()
        .map(|(mu, t)| format!("{} {}", mu, t.to_json()))
        .collect();
    let full = g.full_matrix(a.ring.zero());
    let matrix: Vec<Vec<String>> = full
        .iter()
        .map(|row| row.iter().map(|e| a.ring.fmt_elem(e)).collect())
        .collect();
    let rank = a.gram_rank(s, n).map_err(|e| e.to_string())?;
    Ok((labels, matrix, rank, g.labels.len()))
}

fn emit_reports(format: Format, reports: &[SuiteReport]) -> bool {
    let mut ok = true;
    match format {
        Format::Json => {
            let v: Vec<_> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "suite": r.suite,
                        "cases": r.cases(),
                        "millis": r.millis,
                        "ok": r.ok(),
                        "failure": r.failure,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(v));
            ok = reports.iter().all(|r| r.ok());
        }
        _ => {
            for r in reports {
                let status = if r.ok() { "pass" } else { "FAIL" };
                println!(
                    "{:<22} {:>7} cases {:>9} ms  {}",
                    r.suite,
                    r.cases(),
                    r.millis,
                    status
                );
                if let Some(f) = &r.failure {
                    println!("  first counterexample: {}", f);
                    ok = false;
                }
            }
        }
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_parsing() {
        assert_eq!(
            parse_shape("((2,1),(1))").unwrap(),
            Bicomposition::new(vec![2, 1], vec![1])
        );
        assert_eq!(
            parse_shape("((-),(1^3))").unwrap(),
            Bicomposition::new(vec![], vec![1, 1, 1])
        );
        assert_eq!(
            parse_shape("((),(3))").unwrap(),
            Bicomposition::new(vec![], vec![3])
        );
        assert_eq!(
            parse_shape(" ( (1, 0), (2) ) ").unwrap(),
            Bicomposition::new(vec![1, 0], vec![2])
        );
        assert!(parse_shape("(1,2)").is_err());
        assert!(parse_shape("((x),(1))").is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-2/5").unwrap(),
            BigRational::new((-2).into(), 5.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
