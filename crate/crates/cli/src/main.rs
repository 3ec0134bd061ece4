//! `ysym`: products of Young symmetrizers, certificates and sweeps.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ysym::certificate::membership_certificate;
use ysym::graph::{graph_tabloid, subgraph_membership, MultiGraph};
use ysym::symmetric::dn_membership_certificate;
use ysym::symmetrizer::{brute_force_check, expand_product};
use ysym::tensor::{straighten, Filling};
use ysym::verify::{run_sweep, Suite, SweepConfig};
use ysym::{Execution, Partition, YoungTableau};

#[derive(Parser)]
#[command(name = "ysym", version, about = "Exact Young symmetrizer products and tabloid certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplier E with c(T)·c(S) = c(T)·E for S = T restricted to a subshape.
    Product {
        /// Shape of T, e.g. "4,3,1,1". Defaults to the shape of --tableau.
        #[arg(long)]
        shape: Option<Partition>,
        /// Rows separated by '/', e.g. "1,2,3,4/5,6,7/8/9". Defaults to the canonical tableau.
        #[arg(long)]
        tableau: Option<YoungTableau>,
        #[arg(long)]
        subshape: Partition,
        /// Also multiply the symmetrizers directly and compare.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exhaustive verification suites.
    Verify {
        /// Comma-separated subset of: idempotence, garnir, thm12, thm11, section4, shuffling, certificates, dn.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<Suite>,
        /// Bound on n for every selected suite (default: per suite).
        #[arg(long, env = "YSYM_MAX_N")]
        max_n: Option<usize>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Membership certificate for a filling that splits at k.
    Certificate {
        #[arg(long, visible_alias = "tableau")]
        filling: Filling,
        #[arg(long)]
        k: usize,
        /// Work in S^(d) with each label repeated d times.
        #[arg(long)]
        d: Option<usize>,
        /// Re-evaluate the certificate and exit nonzero if it fails.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite a tabloid so that 1..=k occupy a Young diagram.
    Straighten {
        #[arg(long, visible_alias = "tableau")]
        filling: Filling,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabloid of a multigraph read from a file ("n=4 d=3; 1-2 1-2 ...").
    Graph {
        file: PathBuf,
        /// Override the degree bound given in the file.
        #[arg(long)]
        d: Option<usize>,
        /// Check membership in the ideal of graphs on 1..=k containing --sub.
        #[arg(long, requires = "sub")]
        k: Option<usize>,
        /// Edges of the subgraph, e.g. "1-2,2-3".
        #[arg(long, value_delimiter = ',', value_parser = parse_edge, requires = "k")]
        sub: Vec<(usize, usize)>,
        /// Skip the realization in the output.
        #[arg(long)]
        no_realization: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once('-').ok_or_else(|| format!("expected a-b, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex {t:?}"));
    Ok((num(a)?, num(b)?))
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
    }
    Ok(())
}

fn product(
    shape: Option<Partition>,
    tableau: Option<YoungTableau>,
    subshape: Partition,
    brute: bool,
    out: Option<PathBuf>,
) -> Result<bool> {
    let t = match (shape, tableau) {
        (Some(shape), Some(t)) => {
            if t.shape() != &shape {
                bail!("tableau {t} does not have shape {shape}");
            }
            t
        }
        (None, Some(t)) => t,
        (Some(shape), None) => YoungTableau::canonical(&shape),
        (None, None) => bail!("give --shape or --tableau"),
    };
    if !t.shape().contains(&subshape) {
        bail!("subshape {subshape} is not contained in {}", t.shape());
    }
    let s = t.restrict(&subshape)?;
    let e = expand_product(&t, &s)?;
    let mut report = json!({
        "tableau": t,
        "subtableau": s,
        "source": e.source,
        "alpha_mu": e.alpha_mu.to_string(),
        "multiplier": e.element,
        "integral": e.is_integral(),
        "checks": e.check(&t, &s)?,
    });
    let mut ok = true;
    if brute {
        let check = brute_force_check(&t, &s, &e.element)?;
        ok = check.agrees();
        report["brute"] = json!({ "agrees": ok, "product": check.product });
    }
    emit(&report, out.as_ref())?;
    Ok(ok)
}

fn verify(suites: Vec<Suite>, max_n: Option<usize>, jobs: Option<usize>, out: Option<PathBuf>) -> Result<bool> {
    let execution = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Execution::Sequential,
        Some(_j) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new().num_threads(_j).build_global().context("starting worker pool")?;
            Execution::default()
        }
        None => Execution::default(),
    };
    let config = SweepConfig {
        max_n,
        suites: if suites.is_empty() { Suite::ALL.to_vec() } else { suites },
        execution,
    };
    let report = run_sweep(&config)?;
    for s in &report.suites {
        let status = if s.pass() { "PASS" } else { "FAIL" };
        let integral = s.integral_cases.map(|i| format!(", {i} integral")).unwrap_or_default();
        eprintln!(
            "{status} {:<12} max_n={} {}/{} cases{integral} ({} ms)",
            s.suite.name(),
            s.max_n,
            s.passed,
            s.cases,
            s.elapsed_ms
        );
        for f in s.failures.iter().take(5) {
            eprintln!("    {}: {}", f.case, f.detail);
        }
    }
    emit(&serde_json::to_value(&report)?, out.as_ref())?;
    Ok(report.pass)
}

fn certificate(filling: Filling, k: usize, d: Option<usize>, check: bool, out: Option<PathBuf>) -> Result<bool> {
    let (value, verified) = match d {
        None => {
            let c = membership_certificate(&filling, k)?;
            let verified = if check { Some(c.verify()? && c.verify_dominance()?) } else { None };
            (serde_json::to_value(&c)?, verified)
        }
        Some(d) => {
            let c = dn_membership_certificate(&filling, d, k)?;
            let verified = if check { Some(c.verify()?) } else { None };
            (serde_json::to_value(&c)?, verified)
        }
    };
    emit(&value, out.as_ref())?;
    match verified {
        Some(true) => eprintln!("certificate verifies"),
        Some(false) => eprintln!("certificate does NOT verify"),
        None => {}
    }
    Ok(verified.unwrap_or(true))
}

fn straighten_cmd(filling: Filling, k: usize, out: Option<PathBuf>) -> Result<bool> {
    let terms: Vec<Value> = straighten(&filling, k)?
        .into_iter()
        .map(|(c, f)| json!({ "coeff": c, "filling": f }))
        .collect();
    emit(&json!({ "filling": filling, "k": k, "terms": terms }), out.as_ref())?;
    Ok(true)
}

fn graph(
    file: PathBuf,
    d: Option<usize>,
    k: Option<usize>,
    sub: Vec<(usize, usize)>,
    no_realization: bool,
    out: Option<PathBuf>,
) -> Result<bool> {
    let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
    let mut q: MultiGraph = text.parse()?;
    if let Some(d) = d {
        q = q.with_d(d)?;
    }
    if let Some(k) = k {
        let m = subgraph_membership(&q, k, &sub)?;
        emit(&serde_json::to_value(&m)?, out.as_ref())?;
        return Ok(m.holds());
    }
    let tabloid = graph_tabloid(&q)?;
    let (sign, canonical) = tabloid.filling.canonical();
    let mut value = json!({
        "graph": q.to_string(),
        "d": q.d(),
        "shape": tabloid.filling.shape(),
        "filling": tabloid.filling,
        "canonical": { "sign": sign, "filling": canonical },
        "is_zero": tabloid.realization.is_zero(),
        "terms": tabloid.realization.len(),
    });
    if !no_realization {
        value["realization"] = serde_json::to_value(&tabloid.realization)?;
    }
    emit(&value, out.as_ref())?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Product { shape, tableau, subshape, brute, out } => product(shape, tableau, subshape, brute, out),
        Command::Verify { suites, max_n, jobs, out } => verify(suites, max_n, jobs, out),
        Command::Certificate { filling, k, d, check, out } => certificate(filling, k, d, check, out),
        Command::Straighten { filling, k, out } => straighten_cmd(filling, k, out),
        Command::Graph { file, d, k, sub, no_realization, out } => graph(file, d, k, sub, no_realization, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
