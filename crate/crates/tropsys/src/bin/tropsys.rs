use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropsys::analysis::{classify_bounded, from_fuzzy, property_p, run_theorems_bounded, to_fuzzy, Verdict};
use tropsys::core::DEFAULT_HEIGHT_BOUND;
use tropsys::hypersystems::{krasner, powerset_system, sign_hyperfield, tropical_chain, FiniteHypergroup};
use tropsys::instances::finite_table;
use tropsys::io::{load_system_ref, parse_hypergroup, read_matrix, render_table};
use tropsys::matrices::{column_rank, det, det_parts, row_rank, singularity_class, submatrix_rank, Pool};
use tropsys::transfer::{
    parse_sym_polys, render_certificate, symbolic_det_identity, transfer_check, Certificate, DetIdentity, Refusal,
    SymPoly,
};
use tropsys::tropicalization::{check_morphism, tropicalize, PuiseuxSeries, TropTarget};
use tropsys::{Error, Result, SystemHandle};

#[derive(Parser)]
#[command(name = "tropsys", version, about = "Explore systems with a negation map and a surpassing relation")]
struct Cli {
    /// Height bound for tangible-sum searches.
    #[arg(long, global = true, default_value_t = DEFAULT_HEIGHT_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    bound: u32,
    /// Cap on generated coefficient pools in dependence searches.
    #[arg(long, global = true, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
    pool_cap: u64,
    /// Samples per target for `trop --check`.
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `key: value`
    Text,
    /// `key=value`, stable order
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a system (file path or built-in id).
    Classify { system: String },
    /// Determinant and singularity class of a square matrix file.
    Det { matrix: PathBuf },
    /// Row, column and submatrix ranks of a matrix file.
    Rank { matrix: PathBuf },
    /// Tropicalize a Puiseux series, or sample-check a target with --check.
    Trop {
        series: Option<String>,
        target: Option<String>,
        /// Target id, or `all`.
        #[arg(long, conflicts_with_all = ["series", "target"])]
        check: Option<String>,
    },
    /// Certify a determinant identity, or Q ⪯ P for polynomials in files.
    Transfer {
        identity: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, requires = "q", conflicts_with = "identity")]
        p: Option<PathBuf>,
        #[arg(long, requires = "p")]
        q: Option<PathBuf>,
    },
    /// Run theorem checks; all of them when no ids are given.
    Theorems { system: String, ids: Vec<String> },
    /// Power-set system of a hypergroup (.hyp file, `krasner`, `signs` or `tropical-chain-K`).
    Hyper { hypergroup: String },
    /// Fuzzy-ring data of a system and the round trip back.
    Fuzzy { system: String },
}

/// Collected output: ordered key/value pairs, then free-form blocks.
#[derive(Default)]
struct Out {
    pairs: Vec<(String, String)>,
    blocks: Vec<String>,
}

impl Out {
    fn kv(&mut self, k: impl Into<String>, v: impl ToString) {
        self.pairs.push((k.into(), v.to_string()));
    }

    fn print(&self, fmt: Format) {
        let sep = if fmt == Format::Text { ": " } else { "=" };
        for (k, v) in &self.pairs {
            println!("{k}{sep}{v}");
        }
        for b in &self.blocks {
            print!("{b}");
            if !b.ends_with('\n') {
                println!();
            }
        }
    }
}

fn system(arg: &str) -> Result<SystemHandle> {
    load_system_ref(arg, Path::new("."))
}

fn classify(cli: &Cli, arg: &str) -> Result<Out> {
    let s = system(arg)?;
    let r = classify_bounded(&s, cli.bound)?;
    Ok(Out { pairs: r.pairs(&s), blocks: vec![] })
}

fn theorems(cli: &Cli, arg: &str, ids: &[String]) -> Result<Out> {
    let s = system(arg)?;
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let results = run_theorems_bounded(&s, &ids, cli.bound)?;
    let mut out = Out::default();
    out.kv("system", s.name());
    let mut tally = [0usize; 3];
    for r in &results {
        match &r.verdict {
            Verdict::Pass => {
                tally[0] += 1;
                out.kv(r.id, "PASS");
            }
            Verdict::Fail { witness, detail } => {
                tally[1] += 1;
                out.kv(r.id, "FAIL");
                out.kv(format!("{}.witness", r.id), witness.render(&s));
                if !detail.is_empty() {
                    out.kv(format!("{}.detail", r.id), detail);
                }
            }
            Verdict::HypothesesNotMet(why) => {
                tally[2] += 1;
                out.kv(r.id, "NOT_MET");
                out.kv(format!("{}.reason", r.id), why);
            }
        }
        if !r.assumed.is_empty() && !matches!(r.verdict, Verdict::HypothesesNotMet(_)) {
            out.kv(format!("{}.assumed", r.id), r.assumed.join("; "));
        }
    }
    out.kv("passed", tally[0]);
    out.kv("failed", tally[1]);
    out.kv("not_met", tally[2]);
    Ok(out)
}

fn det_cmd(path: &Path) -> Result<Out> {
    let m = read_matrix(path)?;
    let s = &m.sys;
    let parts = det_parts(&m)?;
    let fmt = |e: &Option<tropsys::Element>| e.as_ref().map_or("none".to_string(), |x| s.format(x));
    let mut out = Out::default();
    out.kv("system", s.name());
    out.kv("size", m.rows);
    out.kv("det", s.format(&det(&m)?));
    out.kv("det_even", fmt(&parts.even));
    out.kv("det_odd", fmt(&parts.odd));
    out.kv("class", singularity_class(&m)?.label());
    Ok(out)
}

fn rank_cmd(cli: &Cli, path: &Path) -> Result<Out> {
    let m = read_matrix(path)?;
    let pool = Pool::Differences { cap: cli.pool_cap as usize };
    let (r, c) = (row_rank(&m, &pool)?, column_rank(&m, &pool)?);
    let mut out = Out::default();
    out.kv("system", m.sys.name());
    out.kv("shape", format!("{}x{}", m.rows, m.cols));
    out.kv("row_rank", r.rank);
    out.kv("column_rank", c.rank);
    out.kv("submatrix_rank", submatrix_rank(&m)?);
    out.kv("exact", r.exact && c.exact);
    Ok(out)
}

fn trop_cmd(cli: &Cli, series: Option<&str>, target: Option<&str>, check: Option<&str>) -> Result<Out> {
    let mut out = Out::default();
    if let Some(which) = check {
        let targets = if which == "all" { TropTarget::ALL.to_vec() } else { vec![TropTarget::parse(which)?] };
        for t in targets {
            let report = check_morphism(t, cli.samples as usize, cli.seed)?;
            let prefix = if which == "all" { format!("{}.", t.id()) } else { String::new() };
            for line in report.render().lines() {
                let (k, v) = line.split_once('=').unwrap_or((line, ""));
                out.kv(format!("{prefix}{k}"), v);
            }
        }
        return Ok(out);
    }
    let (Some(series), Some(target)) = (series, target) else {
        return Err(Error::Precondition("trop needs SERIES TARGET, or --check TARGET".into()));
    };
    let f = PuiseuxSeries::parse(series)?;
    let t = TropTarget::parse(target)?;
    let sys = t.system();
    out.kv("series", &f);
    out.kv("target", t.id());
    out.kv("value", sys.format(&tropicalize(&sys, &f, t)));
    Ok(out)
}

fn certificate_out(
    out: &mut Out,
    label: &str,
    p: &SymPoly,
    outcome: &std::result::Result<Certificate, Refusal>,
) -> bool {
    match outcome {
        Ok(cert) => {
            out.blocks.push(format!("{label}\n{}", render_certificate(p, cert)));
            true
        }
        Err(r) => {
            out.kv(format!("{label}.refused_at"), p.render_monomial(&r.monomial));
            out.kv(format!("{label}.p"), format!("({},{})", r.p.0, r.p.1));
            out.kv(format!("{label}.q"), format!("({},{})", r.q.0, r.q.1));
            out.kv(format!("{label}.reason"), format!("{:?}", r.reason));
            false
        }
    }
}

fn read_text(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Io { path: p.display().to_string(), msg: e.to_string() })
}

fn transfer_cmd(identity: Option<&str>, n: usize, p: Option<&Path>, q: Option<&Path>) -> Result<Out> {
    let mut out = Out::default();
    let mut ok = true;
    if let (Some(pp), Some(qp)) = (p, q) {
        let texts = [read_text(pp)?, read_text(qp)?];
        let polys = parse_sym_polys(&[&texts[0], &texts[1]]).map_err(|e| match e {
            Error::Parse { line, col, msg } => {
                Error::Parse { line, col, msg: format!("{} / {}: {msg}", pp.display(), qp.display()) }
            }
            other => other,
        })?;
        out.kv("p", polys[0].render());
        out.kv("q", polys[1].render());
        ok &= certificate_out(&mut out, "certificate", &polys[0], &transfer_check(&polys[0], &polys[1])?);
    } else {
        let name = identity.ok_or_else(|| Error::Precondition("transfer needs an identity or --p/--q files".into()))?;
        let id = DetIdentity::parse(name)
            .ok_or_else(|| Error::Unsupported(format!("identity `{name}` (known: det_mult, adj_mult, laplace_adj)")))?;
        out.kv("identity", name);
        out.kv("n", n);
        for e in symbolic_det_identity(n, id)? {
            let label = e.entry.map_or("scalar".to_string(), |(i, j)| format!("entry({},{})", i + 1, j + 1));
            ok &= certificate_out(&mut out, &label, &e.p, &e.outcome);
        }
    }
    out.pairs.insert(0, ("result".into(), if ok { "CERTIFIED" } else { "REFUSED" }.into()));
    Ok(out)
}

fn hypergroup(arg: &str) -> Result<FiniteHypergroup> {
    if arg.ends_with(".hyp") {
        return parse_hypergroup(&read_text(Path::new(arg))?);
    }
    match arg {
        "krasner" => Ok(krasner()),
        "signs" => Ok(sign_hyperfield()),
        _ => arg
            .strip_prefix("tropical-chain-")
            .and_then(|k| k.parse().ok())
            .filter(|&k: &usize| (1..127).contains(&k))
            .map(tropical_chain)
            .ok_or_else(|| {
                Error::Unsupported(format!("hypergroup `{arg}`: give a .hyp file, krasner, signs or tropical-chain-K"))
            }),
    }
}

fn hyper_cmd(arg: &str) -> Result<Out> {
    let h = hypergroup(arg)?;
    let s = powerset_system(&h)?;
    let t = finite_table(&s).ok_or_else(|| Error::Unsupported("power-set system is not tabulated".into()))?;
    let mut out = Out::default();
    out.kv("hypergroup", &h.name);
    out.kv("hypergroup_size", h.size());
    out.kv("system", s.name());
    out.kv("elements", t.carrier.len());
    out.kv("carrier", t.carrier.join(" "));
    out.kv("tangibles", t.tangibles.iter().map(|&i| t.carrier[i].as_str()).collect::<Vec<_>>().join(" "));
    out.kv("property_p", h.property_p().is_ok());
    let cells =
        |m: &Vec<Vec<usize>>| m.iter().map(|r| r.iter().map(|&i| t.carrier[i].clone()).collect()).collect::<Vec<_>>();
    out.blocks.push(render_table("add", &t.carrier, &cells(&t.add)));
    if let Some(m) = &t.mul {
        out.blocks.push(render_table("mul", &t.carrier, &cells(m)));
    }
    if let Some(w) = property_p(&s)? {
        out.kv("property_p.witness", w.render(&s));
    }
    Ok(out)
}

fn fuzzy_cmd(arg: &str) -> Result<Out> {
    let s = system(arg)?;
    let d = to_fuzzy(&s)?;
    let back = from_fuzzy(&d, &s)?;
    let mut same = true;
    for t in s.tangibles().unwrap_or_default() {
        same &= back.negate(&back.elem(t.val.clone()))?.val == s.negate(&t)?.val;
    }
    let mut out = Out::default();
    out.kv("system", s.name());
    out.kv("epsilon", s.format(&d.epsilon));
    out.kv("ideal", d.ideal.iter().map(|x| s.format(x)).collect::<Vec<_>>().join(" "));
    out.kv("round_trip_negation", same);
    Ok(out)
}

fn run(cli: &Cli) -> Result<Out> {
    match &cli.cmd {
        Cmd::Classify { system } => classify(cli, system),
        Cmd::Det { matrix } => det_cmd(matrix),
        Cmd::Rank { matrix } => rank_cmd(cli, matrix),
        Cmd::Trop { series, target, check } => trop_cmd(cli, series.as_deref(), target.as_deref(), check.as_deref()),
        Cmd::Transfer { identity, n, p, q } => transfer_cmd(identity.as_deref(), *n, p.as_deref(), q.as_deref()),
        Cmd::Theorems { system, ids } => theorems(cli, system, ids),
        Cmd::Hyper { hypergroup } => hyper_cmd(hypergroup),
        Cmd::Fuzzy { system } => fuzzy_cmd(system),
    }
}

fn main() -> ExitCode {
    // usage errors exit 1 so that 2 always means an axiom violation
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    match run(&cli) {
        Ok(out) => {
            out.print(cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_axiom() { 2 } else { 1 })
        }
    }
}
