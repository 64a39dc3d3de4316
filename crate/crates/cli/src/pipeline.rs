//! Input sources and the left-to-right transform pipeline shared by all commands.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::parser::ValueSource;
use clap::{ArgMatches, Args};
use raag_core::complex::{
    barycentric_subdivision, cone, fixture, flag_completion, is_flag, join, simplicial_quotient, FixtureParams,
    SimplicialComplex, VertexMap,
};

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Facet-list JSON file ({"vertices": n, "facets": [[...], ...]}).
    pub input: Option<PathBuf>,
    /// Built-in fixture, e.g. `rp2_6`, `cycle`, `moore(3)`.
    #[arg(long, short = 'f', value_name = "NAME")]
    pub fixture: Option<String>,
    /// Size parameter for the fixture (cycle length, simplex dimension, ...).
    #[arg(long, requires = "fixture")]
    pub n: Option<usize>,
    /// Torsion order for Moore-space fixtures.
    #[arg(long, requires = "fixture")]
    pub q: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Transforms {
    /// Barycentric subdivision.
    #[arg(long, action = clap::ArgAction::Count)]
    pub sd: u8,
    /// Cone with a new apex vertex.
    #[arg(long, action = clap::ArgAction::Count)]
    pub cone: u8,
    /// Join with a complex from FILE (or a fixture name). With no other
    /// input, `--join A B` starts the pipeline from A ∗ B.
    #[arg(long, value_name = "FILE", num_args = 1..=2, action = clap::ArgAction::Append)]
    pub join: Vec<String>,
    /// Simplicial quotient by a vertex map, a JSON array with map[v] the image of v.
    #[arg(long, value_name = "MAPFILE", action = clap::ArgAction::Append)]
    pub quotient: Vec<PathBuf>,
    /// Replace the complex by the clique complex of its 1-skeleton. This
    /// changes the group being studied.
    #[arg(long, action = clap::ArgAction::Count)]
    pub flag_complete: u8,
}

#[derive(Debug, Clone)]
enum Op {
    Sd,
    Cone,
    Join(Vec<String>),
    Quotient(PathBuf),
    FlagComplete,
}

/// Transforms in command-line order.
fn ordered_ops(m: &ArgMatches) -> Vec<(usize, Op)> {
    let given = |id: &str| m.value_source(id) == Some(ValueSource::CommandLine);
    let mut ops = Vec::new();
    let mut flag = |id: &str, op: Op| {
        if !given(id) {
            return;
        }
        if let Some(ix) = m.indices_of(id) {
            ops.extend(ix.map(|i| (i, op.clone())));
        }
    };
    flag("sd", Op::Sd);
    flag("cone", Op::Cone);
    flag("flag_complete", Op::FlagComplete);
    if let (Some(occ), Some(ix)) = (m.get_occurrences::<String>("join"), m.indices_of("join")) {
        let ix: Vec<usize> = ix.collect();
        let mut at = 0;
        for group in occ {
            let group: Vec<String> = group.cloned().collect();
            ops.push((ix[at], Op::Join(group.clone())));
            at += group.len();
        }
    }
    if let (Some(vals), Some(ix)) = (m.get_many::<PathBuf>("quotient"), m.indices_of("quotient")) {
        ops.extend(ix.zip(vals).map(|(i, p)| (i, Op::Quotient(p.clone()))));
    }
    ops.sort_by_key(|(i, _)| *i);
    ops
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = SimplicialComplex::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(match c.name() {
        Some(_) => c,
        None => c.named(path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned())),
    })
}

/// A join operand: an existing file, else a fixture name.
fn operand(arg: &str) -> Result<SimplicialComplex> {
    let path = Path::new(arg);
    if path.exists() {
        return read_complex(path);
    }
    fixture(arg, FixtureParams::default()).with_context(|| format!("`{arg}` is neither a file nor a fixture"))
}

fn label(c: &SimplicialComplex) -> String {
    c.name().unwrap_or("L").to_string()
}

/// Resolves the input and applies transforms. Returns the complex and
/// whether flag completion changed it.
pub fn load(source: &Source, matches: &ArgMatches) -> Result<(SimplicialComplex, bool)> {
    let mut current = match (&source.input, &source.fixture) {
        (Some(_), Some(_)) => bail!("give either an input file or --fixture, not both"),
        (Some(path), None) => Some(read_complex(path)?),
        (None, Some(name)) => Some(fixture(name, FixtureParams { n: source.n, q: source.q })?),
        (None, None) => None,
    };
    let mut completed = false;
    for (_, op) in ordered_ops(matches) {
        let c = match (op, current.take()) {
            (Op::Join(args), None) => {
                let mut it = args.iter();
                let mut acc = operand(it.next().expect("clap enforces one value"))?;
                for a in it {
                    let b = operand(a)?;
                    acc = join(&acc, &b).named(format!("{} * {}", label(&acc), label(&b)));
                }
                acc
            }
            (_, None) => bail!("no input: give a facet file, --fixture NAME, or start with --join A B"),
            (Op::Sd, Some(c)) => barycentric_subdivision(&c).complex.named(format!("sd {}", label(&c))),
            (Op::Cone, Some(c)) => cone(&c).named(format!("cone {}", label(&c))),
            (Op::Join(args), Some(c)) => {
                let mut acc = c;
                for a in &args {
                    let b = operand(a)?;
                    acc = join(&acc, &b).named(format!("{} * {}", label(&acc), label(&b)));
                }
                acc
            }
            (Op::Quotient(path), Some(c)) => {
                let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                let map: VertexMap =
                    serde_json::from_str(&text).with_context(|| format!("parsing vertex map {}", path.display()))?;
                simplicial_quotient(&c, &map)?.named(format!("{} / ~", label(&c)))
            }
            (Op::FlagComplete, Some(c)) => {
                let before = is_flag(&c);
                let done = flag_completion(&c.skeleton(1))?.named(format!("flag({})", label(&c)));
                if !before.is_flag {
                    completed = true;
                }
                done
            }
        };
        current = Some(c);
    }
    current.map(|c| (c, completed)).ok_or_else(|| anyhow::anyhow!("no input: give a facet file or --fixture NAME"))
}
