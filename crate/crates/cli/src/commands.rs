use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ArgMatches;
use raag_core::classify::{classify as classify_complex, report, EmbeddingWitness, Outcome};
use raag_core::complex::{is_flag, SimplicialComplex};
use raag_core::homology::{homology as compute_homology, simplicial_chain_complex};
use raag_core::models::{finite_cover, growth_experiment, FiniteQuotientSpec};
use raag_core::Error;

use crate::pipeline::{load, Source};

pub const EXIT_OK: u8 = 0;
pub const EXIT_UNDETERMINED: u8 = 3;
pub const EXIT_USAGE: u8 = 10;
const EXIT_NOT_FLAG: u8 = 11;
const EXIT_WITNESS: u8 = 12;
const EXIT_PRECONDITION: u8 = 13;
const EXIT_INTERNAL: u8 = 14;

pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::NotFlag { .. }) => EXIT_NOT_FLAG,
        Some(Error::WitnessRejected(_)) => EXIT_WITNESS,
        Some(
            Error::Precondition(_)
            | Error::DegenerateQuotient { .. }
            | Error::NotPrime(_)
            | Error::InvalidQuotient(_)
            | Error::NotInComplex(_),
        ) => EXIT_PRECONDITION,
        Some(Error::Internal(_) | Error::CorruptComplex { .. } | Error::FixtureSelfCheck { .. }) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Writes via a sibling temporary file and renames, so readers never see partial output.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Sends `body` to the file if given, else stdout. Returns whether stdout was used.
fn emit(output: Option<&Path>, body: &str) -> Result<bool> {
    match output {
        Some(p) => {
            write_atomic(p, body.as_bytes())?;
            Ok(false)
        }
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(true)
        }
    }
}

fn describe(c: &SimplicialComplex) -> String {
    let flag = is_flag(c);
    let status = match &flag.witness {
        None => "flag".to_string(),
        Some(w) => format!("not flag (missing simplex {w})"),
    };
    format!(
        "complex   {}\nvertices  {}\ndim       {}\nf-vector  {:?}\nχ         {}\nstatus    {status}\n",
        c.name().unwrap_or("<unnamed>"),
        c.vertex_count(),
        c.dim(),
        c.f_vector(),
        c.euler_characteristic()
    )
}

fn completion_notice(completed: bool) {
    if completed {
        eprintln!(
            "NOTICE: --flag-complete replaced the input by the clique complex of its 1-skeleton.\n\
             NOTICE: the input was not flag; the result presents a DIFFERENT right-angled Artin group."
        );
    }
}

pub fn build(source: &Source, m: &ArgMatches, output: Option<&Path>) -> Result<u8> {
    let (c, completed) = load(source, m)?;
    completion_notice(completed);
    let json = serde_json::to_string_pretty(&c.to_json())? + "\n";
    if emit(output, &json)? {
        eprint!("{}", describe(&c));
    } else {
        print!("{}", describe(&c));
    }
    Ok(EXIT_OK)
}

pub fn homology(
    source: &Source,
    m: &ArgMatches,
    primes: &[u64],
    reduced: bool,
    output: Option<&Path>,
    dump: Option<&Path>,
) -> Result<u8> {
    let (c, completed) = load(source, m)?;
    completion_notice(completed);
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let cc = simplicial_chain_complex(&c, reduced);
    if let Some(path) = dump {
        let mut buf = Vec::new();
        cc.dump(&mut buf)?;
        write_atomic(path, &buf)?;
    }
    let h = compute_homology(&cc, &primes)?;

    let mut out = String::new();
    let h_label = if reduced { "H̃_i(Z)" } else { "H_i(Z)" };
    writeln!(out, "complex {}  f-vector {:?}  χ = {}", c.name().unwrap_or("<unnamed>"), c.f_vector(), c.euler_characteristic())?;
    write!(out, "{:<4} {:<16} {:>7}", "i", h_label, "b_i(Q)")?;
    for p in &primes {
        write!(out, " {:>9}", format!("b_i(F_{p})"))?;
    }
    writeln!(out)?;
    for d in &h.degrees {
        write!(out, "{:<4} {:<16} {:>7}", d.degree, h.group_string(d.degree), d.betti)?;
        for p in &primes {
            write!(out, " {:>9}", h.betti_fp[p][d.degree])?;
        }
        writeln!(out)?;
    }
    for p in &primes {
        let b: Vec<String> = h.betti_fp[p].iter().map(usize::to_string).collect();
        writeln!(out, "b(F_{p}) = ({})", b.join(","))?;
    }
    let uct = if h.uct_consistent() {
        "ok (mod-p ranks agree with the universal coefficient formula)"
    } else {
        "FAILED"
    };
    writeln!(out, "UCT check: {uct}")?;
    print!("{out}");
    if let Some(path) = output {
        write_atomic(path, (serde_json::to_string_pretty(&h)? + "\n").as_bytes())?;
    }
    if !h.uct_consistent() {
        return Err(Error::Internal("universal coefficient check failed".into()).into());
    }
    Ok(EXIT_OK)
}

pub fn classify(
    source: &Source,
    m: &ArgMatches,
    witness: Option<&Path>,
    budget: u64,
    output: Option<&Path>,
) -> Result<u8> {
    let (c, completed) = load(source, m)?;
    completion_notice(completed);
    let witness = match witness {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let w = EmbeddingWitness::from_json_str(&text)
                .map_err(|e| Error::WitnessRejected(format!("malformed witness file {}: {e}", p.display())))?;
            Some(w)
        }
        None => None,
    };
    let verdict = classify_complex(&c, witness.as_ref(), budget)?;
    let rep = report(&c, &verdict);
    eprint!("{rep}");
    emit(output, &(serde_json::to_string_pretty(&verdict)? + "\n"))?;
    Ok(match verdict.outcome {
        Outcome::PositiveEntropy | Outcome::ZeroEntropy => EXIT_OK,
        Outcome::Undetermined => EXIT_UNDETERMINED,
    })
}

pub fn growth(
    source: &Source,
    m: &ArgMatches,
    prime: u64,
    moduli: &[u64],
    specs_file: Option<&Path>,
    output: Option<&Path>,
    cells_json: Option<&Path>,
) -> Result<u8> {
    let (c, completed) = load(source, m)?;
    completion_notice(completed);
    if moduli.contains(&0) {
        bail!("moduli must be at least 1");
    }
    let n = c.vertex_count();
    let mut specs: Vec<FiniteQuotientSpec> = moduli.iter().map(|&k| FiniteQuotientSpec::uniform(n, k)).collect();
    if let Some(p) = specs_file {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let extra: Vec<FiniteQuotientSpec> =
            serde_json::from_str(&text).with_context(|| format!("parsing quotient specs {}", p.display()))?;
        specs.extend(extra);
    }
    if specs.is_empty() {
        bail!("no covers requested: give --moduli or --specs");
    }
    let series = growth_experiment(&c, prime, &specs)?;

    let mut csv = Vec::new();
    series.write_csv(&mut csv)?;
    let report = series.render_report();
    if emit(output, std::str::from_utf8(&csv)?)? {
        eprint!("{report}");
    } else {
        print!("{report}");
    }
    if let Some(path) = cells_json {
        let summaries = specs.iter().map(|s| finite_cover(&c, s).map(|x| x.summary())).collect::<Result<Vec<_>, _>>()?;
        write_atomic(path, (serde_json::to_string_pretty(&summaries)? + "\n").as_bytes())?;
    }
    if series.rows.iter().any(|r| r.exact_match() == Some(false)) {
        return Err(Error::Internal("computed Betti numbers differ from the exact prediction".into()).into());
    }
    Ok(EXIT_OK)
}
