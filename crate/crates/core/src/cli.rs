//! The `rif` command line.
//!
//! [`run`] takes the arguments and the three standard streams, so it can be
//! driven from tests. Exit codes: 0 on success, 1 on a domain error (the
//! message starts with the error case), 2 on a usage error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::bounds::bound_report;
use crate::construct::{
    brace_daykin, complete_uniform, disjoint_sum, extend_family, neq2k_construction,
    product_family, projective_plane, prop3_construction, SizeCap,
};
use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::io::{format_family, parse_family, read_family, write_family};
use crate::kset::KSet;
use crate::scheme::{
    gamma_coefficients, lp_max_regular_intersecting, macwilliams_transform, scheme_tables, LpStatus,
};
use crate::search::{cyclic_orbit_search, dfs_search, SearchOptions, SearchResult, Target};

#[derive(Parser, Debug)]
#[command(
    name = "rif",
    version,
    about = "Regular intersecting families of k-sets"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Upper and lower bounds on regular intersecting families.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also report the Hoffman bound for this odd s.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Build a family and write it in rif-family/1 format.
    Construct {
        #[command(subcommand)]
        recipe: Recipe,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a family file (standard input when no file is given).
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also test s-subset regularity.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Look for a large regular intersecting family.
    Search(SearchArgs),
    /// Eigenvalue tables of the Johnson scheme.
    Scheme {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        matrix: Option<Matrix>,
        /// Print the coefficients gamma_0 .. gamma_{k-1}.
        #[arg(long)]
        gamma: bool,
    },
    /// The exact Delsarte linear program.
    Lp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Add the regularity constraint.
        #[arg(long)]
        regular: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Recipe {
    /// The projective plane PG(2, q).
    Pp {
        #[arg(long)]
        q: u64,
    },
    /// All (k+l)-supersets of the members of a family.
    Extend {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Disjoint sum of two families with equal k/n.
    Sum {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Product of two families on the grid.
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Every m-subset of [z].
    Complete {
        #[arg(long)]
        z: usize,
        #[arg(long)]
        m: usize,
    },
    /// PG(2, q) plus a complete family on l(q^2+q+1) points.
    Prop3 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: usize,
    },
    /// Largest family on [2k], k not a power of two.
    BraceDaykin {
        #[arg(long)]
        k: usize,
    },
    /// Family of size C(2k-1,k) - 3 on [2k], k a power of two.
    Neq2k {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub strategy: StrategyArg,
    /// Size to look for (dfs); tries sizes downward from the bound if absent.
    #[arg(long)]
    pub target: Option<u64>,
    /// Seconds before giving up with the best family so far.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyArg {
    Cyclic,
    Dfs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Matrix {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdin, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn load(path: Option<&Path>, stdin: &mut dyn Read) -> Result<KSetFamily> {
    match path {
        Some(p) => read_family(p),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(io_err)?;
            parse_family(&text)
        }
    }
}

fn emit_family(fam: &KSetFamily, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => write_family(p, fam),
        None => out.write_all(format_family(fam).as_bytes()).map_err(io_err),
    }
}

fn emit_json(value: &Value, out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Bounds { n, k, s } => bounds(*n, *k, *s, cli.json, out),
        Command::Construct { recipe, out: path } => {
            let fam = construct(recipe, stdin)?;
            emit_family(&fam, path.as_deref(), out)
        }
        Command::Verify { input, s } => {
            let fam = load(input.as_deref(), stdin)?;
            verify(&fam, *s, cli.json, out)
        }
        Command::Search(args) => search(args, cli.json, out),
        Command::Scheme {
            n,
            k,
            matrix,
            gamma,
        } => scheme(*n, *k, *matrix, *gamma, cli.json, out),
        Command::Lp { n, k, regular } => lp(*n, *k, *regular, cli.json, out),
    }
}

fn bounds(n: usize, k: usize, s: Option<usize>, json: bool, out: &mut dyn Write) -> Result<()> {
    let report = bound_report(n, k, s)?;
    if json {
        let value = serde_json::to_value(&report).map_err(|e| Error::Io(e.to_string()))?;
        return emit_json(&value, out);
    }
    let mut text = String::new();
    for e in &report.entries {
        let value = e
            .value
            .as_ref()
            .map_or("-".to_string(), ToString::to_string);
        text += &format!("{}\t{}\t{}\t{}\n", e.name, value, e.applicable, e.note);
    }
    text += &format!("verdict\t{}\n", report.verdict);
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn construct(recipe: &Recipe, stdin: &mut dyn Read) -> Result<KSetFamily> {
    match recipe {
        Recipe::Pp { q } => projective_plane(*q),
        Recipe::Extend { l, input } => extend_family(&load(input.as_deref(), stdin)?, *l),
        Recipe::Sum { a, b } => disjoint_sum(&read_family(a)?, &read_family(b)?),
        Recipe::Product { a, b } => product_family(&read_family(a)?, &read_family(b)?),
        Recipe::Complete { z, m } => complete_uniform(*z, *m),
        Recipe::Prop3 { q, l } => prop3_construction(*q, *l, SizeCap::current()),
        Recipe::BraceDaykin { k } => brace_daykin(*k),
        Recipe::Neq2k { k } => neq2k_construction(*k),
    }
}

fn verify(fam: &KSetFamily, s: Option<usize>, json: bool, out: &mut dyn Write) -> Result<()> {
    let (n, k) = (fam.n(), fam.k());
    let regular = fam.is_regular().ok().flatten();
    let intersecting = fam.is_intersecting();
    let dist = if fam.is_empty() {
        None
    } else {
        Some(fam.inner_distribution()?)
    };
    let in_domain = n >= 2 * k;

    if json {
        let bounds = if in_domain {
            let report = bound_report(n, k, None)?;
            serde_json::to_value(&report.entries).map_err(|e| Error::Io(e.to_string()))?
        } else {
            json!([])
        };
        let value = json!({
            "n": n,
            "k": k,
            "size": fam.len(),
            "delta": regular,
            "regular": regular.is_some(),
            "intersecting": intersecting,
            "bounds": bounds,
            "inner_distribution": dist.as_ref().map_or(vec![], |d| strings(d.a())),
        });
        return emit_json(&value, out);
    }

    let mut text = String::new();
    let reg_text = match regular {
        Some(d) => format!("true (δ={d})"),
        None => "false".to_string(),
    };
    text += &format!(
        "regular: {reg_text}, intersecting: {intersecting}, size {}\n",
        fam.len()
    );
    text += &format!("n: {n}\nk: {k}\nsize: {}\n", fam.len());
    text += &format!("intersecting: {intersecting}\n");
    if !fam.is_empty() {
        let profile = fam.degree_profile();
        text += &format!("degree: min {} max {}\n", profile.min(), profile.max());
    }
    text += &format!("regular: {reg_text}\n");
    if let Ok(d) = fam.diversity() {
        text += &format!("diversity: {d}\n");
    }
    match fam.irregularity_ratio() {
        Ok(r) => text += &format!("irregularity ratio: {r}\n"),
        Err(e) => text += &format!("irregularity ratio: undefined ({})\n", e.case()),
    }
    text += &format!("ratio: {}\n", fam.ratio());
    if let Some(dist) = &dist {
        text += &format!("inner distribution: {}\n", joined(dist.a()));
        if in_domain {
            let mw = macwilliams_transform(&scheme_tables(n, k)?, dist)?;
            let ok = mw.iter().all(|x| *x >= BigRational::from_integer(0.into()));
            text += &format!("macwilliams: {} (nonnegative: {ok})\n", joined(&mw));
        }
    }
    if let Some(s) = s {
        match fam.is_subset_regular(s)? {
            Some(d) => text += &format!("{s}-subset regular: true (δ{s}={d})\n"),
            None => text += &format!("{s}-subset regular: false\n"),
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn search(args: &SearchArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let time_limit = match args.time_limit {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            return Err(Error::InvalidParameters(format!("bad time limit {t}")));
        }
        t => t.map(Duration::from_secs_f64),
    };
    if args.threads == Some(0) {
        return Err(Error::InvalidParameters(
            "threads must be at least 1".into(),
        ));
    }
    let options = SearchOptions {
        time_limit,
        seed: args.seed,
        threads: args.threads,
        ..SearchOptions::default()
    };
    let result = match args.strategy {
        StrategyArg::Cyclic => {
            if args.target.is_some() {
                return Err(Error::InvalidParameters(
                    "--target applies to dfs only".into(),
                ));
            }
            cyclic_orbit_search(args.n, args.k, &options)?
        }
        StrategyArg::Dfs => {
            let target = args.target.map_or(Target::Auto, Target::Size);
            dfs_search(args.n, args.k, target, &options)?
        }
    };
    if let (Some(path), Some(fam)) = (&args.out, &result.family) {
        write_family(path, fam)?;
    }
    if json {
        return emit_json(&search_json(&result), out);
    }
    let delta = result.delta.map_or("-".to_string(), |d| d.to_string());
    let text = format!(
        "strategy: {}\nsize: {}\nδ: {delta}\nexhaustive: {} (scope: {})\ntimed out: {}\nnodes: {}\nseed: {}\nelapsed: {:.3}s\n",
        result.strategy,
        result.size,
        result.exhaustive,
        result.scope,
        result.timed_out,
        result.explored_nodes,
        result.seed,
        result.elapsed.as_secs_f64(),
    );
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn search_json(r: &SearchResult) -> Value {
    json!({
        "strategy": r.strategy.to_string(),
        "size": r.size,
        "delta": r.delta,
        "exhaustive": r.exhaustive,
        "scope": r.scope.to_string(),
        "timed_out": r.timed_out,
        "nodes": r.explored_nodes,
        "seed": r.seed,
        "elapsed_seconds": r.elapsed.as_secs_f64(),
        "targets_tried": r.targets_tried,
        "sets": r.family.as_ref().map(|f| f.iter().map(KSet::to_vec).collect::<Vec<_>>()),
    })
}

fn scheme(
    n: usize,
    k: usize,
    matrix: Option<Matrix>,
    gamma: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let t = scheme_tables(n, k)?;
    let p_rows: Vec<Vec<String>> = t.p.iter().map(|row| strings(row)).collect();
    let q_rows: Vec<Vec<String>> = (0..=k)
        .map(|j| (0..=k).map(|i| t.q[i][j].to_string()).collect())
        .collect();
    let gammas = if gamma {
        Some(gamma_coefficients(n, k)?)
    } else {
        None
    };
    if json {
        let mut value = json!({ "n": n, "k": k });
        if matrix != Some(Matrix::Q) {
            value["p"] = json!(p_rows);
        }
        if matrix != Some(Matrix::P) {
            value["q"] = json!(q_rows);
        }
        if let Some(g) = &gammas {
            value["gamma"] = json!(strings(g));
        }
        return emit_json(&value, out);
    }
    let mut text = String::new();
    let section = |title: &str, rows: &[Vec<String>], text: &mut String| {
        if matrix.is_none() {
            *text += &format!("{title}\n");
        }
        for row in rows {
            *text += &format!("{}\n", row.join(" "));
        }
    };
    if matrix != Some(Matrix::Q) {
        section("P", &p_rows, &mut text);
    }
    if matrix != Some(Matrix::P) {
        section("Q", &q_rows, &mut text);
    }
    if let Some(g) = &gammas {
        text += &format!("gamma\n{}\n", joined(g));
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn lp(n: usize, k: usize, regular: bool, json: bool, out: &mut dyn Write) -> Result<()> {
    let outcome = lp_max_regular_intersecting(n, k, regular)?;
    let status = match outcome.status {
        LpStatus::Optimal => "optimal",
        LpStatus::Infeasible => "infeasible",
    };
    let witness = if outcome.status == LpStatus::Optimal {
        outcome.distribution()
    } else {
        Vec::new()
    };
    if json {
        let value = json!({
            "n": n,
            "k": k,
            "regular": regular,
            "status": status,
            "optimum": outcome.optimum.to_string(),
            "witness": strings(&witness),
        });
        return emit_json(&value, out);
    }
    let text = format!(
        "status: {status}\noptimum: {}\nwitness: {}\n",
        outcome.optimum,
        joined(&witness)
    );
    out.write_all(text.as_bytes()).map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("rif").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bounds_table() {
        let (code, out, _) = call(&["bounds", "--n", "9", "--k", "4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("hoffman(s=1)\t36\t"));
        assert!(out.contains("general\t36\t"));
        assert!(out.ends_with("verdict\tOpen\n"));
        let (code, out, _) = call(&["bounds", "--n", "8", "--k", "3"], "");
        assert_eq!(code, 0);
        assert!(out.contains("verdict\tNonexistent"));
    }

    #[test]
    fn pipe_plane_into_verify() {
        let (code, fam, _) = call(&["construct", "pp", "--q", "2"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["verify"], &fam);
        assert_eq!(code, 0);
        assert!(out.starts_with("regular: true (δ=3), intersecting: true, size 7\n"));
        assert!(out.contains("inner distribution: 1 0 6 0\n"));
        let (_, out, _) = call(&["verify", "--s", "2"], &fam);
        assert!(out.contains("2-subset regular: true (δ2=1)"));
    }

    #[test]
    fn verify_json_keys() {
        let (_, fam, _) = call(&["construct", "pp", "--q", "2"], "");
        let (code, out, _) = call(&["--json", "verify"], &fam);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(
            keys,
            [
                "bounds",
                "delta",
                "inner_distribution",
                "intersecting",
                "k",
                "n",
                "regular",
                "size"
            ]
        );
        assert_eq!(v["delta"], 3);
        assert_eq!(v["inner_distribution"], json!(["1", "0", "6", "0"]));
    }

    #[test]
    fn errors_and_usage() {
        let (code, _, err) = call(&["verify"], "{ not json");
        assert_eq!(code, 1);
        assert!(err.starts_with("error: ParseError"));
        let (code, _, err) = call(&["construct", "neq2k", "--k", "6"], "");
        assert_eq!(code, 1);
        assert!(err.contains("KNotPowerOfTwo"));
        assert_eq!(call(&["bounds", "--n", "9"], "").0, 2);
        assert_eq!(
            call(&["bounds", "--n", "9", "--k", "4", "--bogus"], "").0,
            2
        );
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn scheme_rows() {
        let (code, out, _) = call(&["scheme", "--n", "7", "--k", "3", "--matrix", "P"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("1 12 18 4"));
        assert_eq!(out.lines().count(), 4);
        let (_, out, _) = call(&["scheme", "--n", "7", "--k", "3", "--gamma"], "");
        assert!(out.contains("gamma\n"));
    }

    #[test]
    fn lp_output() {
        let (code, out, _) = call(&["lp", "--n", "7", "--k", "3", "--regular"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "status: optimal\noptimum: 7\nwitness: 1 0 6 0\n");
    }

    #[test]
    fn search_writes_witness() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w.json");
        let p = path.to_str().unwrap();
        let (code, out, _) = call(
            &[
                "search",
                "--n",
                "7",
                "--k",
                "3",
                "--strategy",
                "cyclic",
                "--out",
                p,
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.contains("size: 7\n"));
        assert!(out.contains("exhaustive: true (scope: cyclic families)"));
        assert_eq!(read_family(&path).unwrap().len(), 7);
        let (code, out, _) = call(&["search", "--n", "8", "--k", "3", "--strategy", "dfs"], "");
        assert_eq!(code, 0);
        assert!(
            out.contains("size: 0\n") && out.contains("exhaustive: true (scope: all families)")
        );
    }

    #[test]
    fn construct_round_trips_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        let out_path = dir.path().join("sum.json");
        call(
            &["construct", "pp", "--q", "2", "--out", a.to_str().unwrap()],
            "",
        );
        call(
            &[
                "construct",
                "complete",
                "--z",
                "7",
                "--m",
                "3",
                "--out",
                b.to_str().unwrap(),
            ],
            "",
        );
        let (code, _, _) = call(
            &[
                "construct",
                "sum",
                "--a",
                a.to_str().unwrap(),
                "--b",
                b.to_str().unwrap(),
                "--out",
                out_path.to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(code, 0);
        let text = std::fs::read_to_string(&out_path).unwrap();
        let fam = parse_family(&text).unwrap();
        assert_eq!(fam.len(), 245);
        assert_eq!(format_family(&fam), text);
        let (_, out, _) = call(&["verify", "--input", out_path.to_str().unwrap()], "");
        assert!(out.contains("ratio: 3/7"));
    }
}
