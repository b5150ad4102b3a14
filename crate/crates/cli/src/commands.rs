use std::io::{BufRead, Write};

use opturan::constructions::{
    construct_Gn, construct_H, construct_Hprime, construct_On, construct_Tn, construct_two_m5, fan_mop,
};
use opturan::search::report::{probe_conjecture, verify_theorems, ReportRow, Table, Tabular, PROBE_CAP, VERIFY_CAP};
use opturan::search::{Engine, ResultCache, SearchConfig, DEFAULT_MOP_CAP};
use opturan::{graph6, is_double_star_free, is_outerplanar, DoubleStarSpec, Error, Graph, Mode};
use serde::Serialize;

use crate::{Cli, Command, Family, Format, EXIT_MISMATCH, EXIT_OK, EXIT_REFUSED, EXIT_USAGE};

/// Specs checked by `verify` when none are given.
const DEFAULT_VERIFY_SPECS: [(usize, usize); 6] = [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5)];

pub fn parse_spec(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
    DoubleStarSpec::new(p, q).map_err(|e| e.to_string())?;
    Ok((p, q))
}

enum Failure {
    Usage(String),
    Refused(String),
    /// The reader of our output went away.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { n, cap, what } => {
                Failure::Refused(format!("n = {n} exceeds the cap of {cap} for {what}; rerun with --override-cap"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(format!("i/o: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Construct { family, n, t, i, p, q } => construct(*family, *n, *t, *i, *p, *q, out),
        Command::Check { p, q } => check(*p, *q, input, out),
        Command::Ex { n, p, q, mode } => ex(cli, *n, *p, *q, (*mode).into(), out),
        Command::Verify { n_max, specs } => verify(cli, *n_max, specs, out),
        Command::Probe { from, to } => probe(cli, *from, *to, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            EXIT_REFUSED
        }
        Err(Failure::Closed) => EXIT_OK,
    }
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{family:?} needs --{flag}")))
}

fn construct(
    family: Family,
    n: Option<usize>,
    t: Option<usize>,
    i: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let (graph, default_spec) = match family {
        Family::Mk => (fan_mop(need(n, "n", family)?)?, (2, 2)),
        Family::Gn => (construct_Gn(need(n, "n", family)?)?, (2, 2)),
        Family::TwoM5 => (construct_two_m5(), (2, 2)),
        Family::Tn => (construct_Tn(need(n, "n", family)?)?, (3, 3)),
        Family::On => (construct_On(need(n, "n", family)?)?, (2, 4)),
        Family::H => (construct_H(), (2, 3)),
        Family::Hprime => (construct_Hprime(need(t, "t", family)?, need(i, "i", family)?)?, (2, 3)),
    };
    let spec = DoubleStarSpec::new(p.unwrap_or(default_spec.0), q.unwrap_or(default_spec.1))?;
    writeln!(out, "{}", graph6::encode(&graph))?;
    writeln!(
        out,
        "n={} edges={} maxdeg={} connected={} outerplanar={} free[{spec}]={}",
        graph.order(),
        graph.size(),
        graph.max_degree(),
        graph.is_connected(),
        is_outerplanar(&graph),
        is_double_star_free(&graph, spec)
    )?;
    Ok(EXIT_OK)
}

/// One verdict line per graph6 input line; malformed lines are reported and
/// skipped.
fn check(p: usize, q: usize, input: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let spec = DoubleStarSpec::new(p, q)?;
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut code = EXIT_OK;
    for record in graph6::decode_stream(&text) {
        match record.graph {
            Ok(g) => writeln!(out, "line={} {}", record.line, verdict(&g, spec))?,
            Err(e) => {
                code = EXIT_USAGE;
                writeln!(out, "line={} error=\"{e}\"", record.line)?;
            }
        }
    }
    Ok(code)
}

fn verdict(g: &Graph, spec: DoubleStarSpec) -> String {
    format!(
        "n={} outerplanar={} connected={} free={} edges={}",
        g.order(),
        is_outerplanar(g),
        g.is_connected(),
        is_double_star_free(g, spec),
        g.size()
    )
}

fn engine(cli: &Cli, largest: usize, default_cap: usize) -> Result<Engine, Failure> {
    let cap = if largest > default_cap && cli.override_cap {
        eprintln!("warning: n = {largest} is above the default cap {default_cap}; this may take very long");
        largest
    } else {
        default_cap
    };
    if largest > cap {
        return Err(Error::ResourceCap { n: largest, cap, what: "exact search" }.into());
    }
    let mut engine = Engine::new(SearchConfig { workers: cli.workers as usize, cap })?;
    if let Some(path) = &cli.cache {
        let cache = ResultCache::open(path)?;
        if cache.discarded() > 0 {
            eprintln!("warning: ignored {} stale or malformed cache lines in {}", cache.discarded(), path.display());
        }
        engine = engine.with_cache(cache);
    }
    Ok(engine)
}

fn emit<R: Tabular + Serialize>(
    table: &Table<R>,
    format: Format,
    witnesses: impl Fn(&R) -> Vec<String>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        Format::Table => write!(out, "{}", table.to_table())?,
        Format::Csv => write!(out, "{}", table.to_csv()?)?,
        Format::Json => writeln!(out, "{}", table.to_json()?)?,
        Format::Graph6 => {
            for w in table.rows.iter().flat_map(witnesses) {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(())
}

fn status(failed: bool) -> u8 {
    if failed {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn ex(cli: &Cli, n: usize, p: usize, q: usize, mode: Mode, out: &mut dyn Write) -> Outcome {
    let spec = DoubleStarSpec::new(p, q)?;
    let engine = engine(cli, n, DEFAULT_MOP_CAP)?;
    let result = engine.ex(n, spec, mode)?;
    let table = Table::new("ex", vec![ReportRow::from_result(&result)]);
    if cli.format == Format::Graph6 {
        for w in &result.witnesses {
            writeln!(out, "{w}")?;
        }
    } else {
        emit(&table, cli.format, |r| vec![r.witness.clone()], out)?;
    }
    Ok(status(table.has_failure()))
}

fn verify(cli: &Cli, n_max: usize, specs: &[(usize, usize)], out: &mut dyn Write) -> Outcome {
    let chosen = if specs.is_empty() { &DEFAULT_VERIFY_SPECS[..] } else { specs };
    let specs: Vec<DoubleStarSpec> = chosen.iter().map(|&(p, q)| DoubleStarSpec::new(p, q)).collect::<Result<_, _>>()?;
    let engine = engine(cli, n_max, VERIFY_CAP)?;
    let report = verify_theorems(&engine, &specs, n_max)?;
    emit(&report, cli.format, |r| vec![r.witness.clone()], out)?;
    Ok(status(report.has_failure()))
}

fn probe(cli: &Cli, from: usize, to: usize, out: &mut dyn Write) -> Outcome {
    if from > to || from == 0 {
        return Err(Failure::Usage(format!("empty range {from}..={to}")));
    }
    let engine = engine(cli, to, PROBE_CAP)?;
    let report = probe_conjecture(&engine, from, to)?;
    emit(&report, cli.format, |r| vec![r.witness_connected.clone(), r.witness_general.clone()], out)?;
    Ok(status(report.has_failure()))
}
