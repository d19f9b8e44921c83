//! Command-line frontend. Every subcommand prints deterministic JSON by
//! default, or a short text summary with `--format text`.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::families::{build_family, Convention, FamilyKind, PolytopeFamily};
use crate::mitosis::{PipeDream, SkewPipeDream};
use crate::polyhedron::{io, FacetSet};
use crate::scalar::{fmt_rational, q};
use crate::schubert::ring::ring_ranks_report;
use crate::schubert::{
    conjecture_report, default_grid, degree_check_with, family_volume_polynomial, mitosis_faces,
    structure_constants, volume_polynomial, FaceRecord,
};
use crate::weyl::WeylElement;

#[derive(Parser, Debug)]
#[command(name = "mitosis-kit", version, about = "Exact GZ, string and DDO polytopes with mitosis and Schubert checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// gz-a, sgz, ogz, ddo-c2, ddo-c3, string-c or trapezoid.
    #[arg(long)]
    family: String,
    /// Rank parameter for gz-a, sgz, ogz and string-c.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inequalities of a family, or of one polytope with --lambda.
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Faces produced from the apex by mitosis operations.
    Mitosis {
        #[command(flatten)]
        common: Common,
        /// Operations `o1,...,ok`, meaning `M_o1 ⋯ M_ok` (rightmost first).
        #[arg(long, conflicts_with = "word")]
        ops: Option<String>,
        /// A Weyl word, translated to operations by the family convention.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        convention: Option<String>,
        /// `text` prints the +-tables.
        #[arg(long, value_enum)]
        render: Option<Format>,
    },
    /// Compare ℓ!·Σ face volumes with the Chevalley degree.
    DegreeCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
        /// Weight to test; repeat for several. Defaults to five grid weights.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<String>,
        #[arg(long)]
        convention: Option<String>,
    },
    /// Interpolated volume polynomial of the polytope or of a face.
    Volpoly {
        #[command(flatten)]
        common: Common,
        /// Facet indices cutting out a face.
        #[arg(long)]
        facets: Option<String>,
    },
    /// Structure constants of the product of two Schubert classes.
    Structconst {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Graded ranks of the polytope ring.
    RingRanks {
        #[command(flatten)]
        common: Common,
    },
    /// Degree checks for every Weyl element under one or all conventions.
    ConjectureReport {
        #[command(flatten)]
        common: Common,
        /// A single convention label; all four by default.
        #[arg(long)]
        convention: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnsupportedKind(_)
            | Error::InvalidReflection(_)
            | Error::NotDominant(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidFacetIndex(_)
            | Error::InvalidCell { .. }
            | Error::RankTooLarge(_)
            | Error::NoConeStructure => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(Value, String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_ints<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| usage(format!("bad {what}: {s}"))))
        .collect()
}

fn parse_convention(s: Option<&str>) -> Result<Convention, Failure> {
    match s {
        None => Ok(Convention::STATEMENT),
        Some(label) => Convention::all()
            .into_iter()
            .find(|c| c.to_string() == label)
            .ok_or_else(|| usage(format!("unknown convention {label}"))),
    }
}

fn family_of(c: &Common) -> Result<PolytopeFamily, Failure> {
    Ok(build_family(FamilyKind::parse(&c.family, c.n)?)?)
}

fn element(family: &PolytopeFamily, word: &str) -> Result<WeylElement, Failure> {
    let rs = family.roots()?;
    Ok(rs.from_word(&parse_ints::<usize>(word, "word")?)?)
}

fn facet_list(s: FacetSet) -> Vec<usize> {
    s.iter().collect()
}

fn render_face(kind: FamilyKind, f: &FaceRecord) -> Result<String, Failure> {
    Ok(match kind {
        FamilyKind::GzA(n) => PipeDream::new(n, f.cells.iter().copied())?.render(),
        FamilyKind::DdoC2 => SkewPipeDream::new(2, f.cells.iter().copied())?.render(),
        FamilyKind::Sgz(n) | FamilyKind::Ogz(n) | FamilyKind::StringC(n) => {
            SkewPipeDream::new(n, f.cells.iter().copied())?.render()
        }
        other => return Err(usage(format!("no tables for {other}"))),
    })
}

fn build(family: &PolytopeFamily, lambda: Option<&str>) -> Outcome {
    let Some(lambda) = lambda else {
        let text = format!("{} dim {} facets {}\n", family.kind(), family.dim(), family.num_facets());
        return Ok((family.to_json(), text, true));
    };
    let lam: Vec<i64> = parse_ints(lambda, "lambda")?;
    let spec = if family.roots().is_ok() {
        family.specialize(&lam)?
    } else {
        family.specialize_params(&lam.iter().map(|&x| q(x)).collect::<Vec<_>>())?
    };
    let vertex: Vec<String> = spec.vertex.iter().map(fmt_rational).collect();
    let value = json!({
        "family": family.kind().to_string(),
        "lambda": lam,
        "polytope": io::to_json(&spec.polytope),
        "vertex": vertex,
        "degenerate": spec.degenerate,
    });
    let text = format!(
        "{} at {:?}: dim {} facets {} vertex ({})\n",
        family.kind(),
        lam,
        family.dim(),
        family.num_facets(),
        vertex.join(", ")
    );
    Ok((value, text, true))
}

fn mitosis(
    family: &PolytopeFamily,
    ops: Option<&str>,
    word: Option<&str>,
    conv: Option<&str>,
    render: Option<Format>,
    format: Format,
) -> Outcome {
    let conv = parse_convention(conv)?;
    let ops: Vec<usize> = match (ops, word) {
        (Some(o), _) => parse_ints(o, "ops")?,
        (None, Some(w)) => family.mitosis_ops(&parse_ints::<usize>(w, "word")?, conv)?,
        (None, None) => return Err(usage("mitosis needs --ops or --word")),
    };
    let faces = mitosis_faces(family, &ops)?;
    let records: Vec<Value> = faces
        .iter()
        .map(|f| json!({"cells": f.cells, "facets": facet_list(f.facets)}))
        .collect();
    let value = json!({"family": family.kind().to_string(), "ops": ops, "faces": records});
    let text = if render == Some(Format::Text) || format == Format::Text {
        let mut t = String::new();
        for f in &faces {
            t.push_str(&render_face(family.kind(), f)?);
            t.push('\n');
        }
        t
    } else {
        String::new()
    };
    Ok((value, text, true))
}

fn degree(family: &PolytopeFamily, word: &str, lambdas: &[String], conv: Option<&str>) -> Outcome {
    let w = element(family, word)?;
    let grid: Vec<Vec<i64>> = if lambdas.is_empty() {
        default_grid(family, 5)?
    } else {
        lambdas.iter().map(|l| parse_ints(l, "lambda")).collect::<Result<_, _>>()?
    };
    let rep = degree_check_with(family, &w, parse_convention(conv)?, &grid)?;
    let mut text = format!("{} w={} match={}\n", rep.family, rep.element, rep.matches);
    for s in &rep.samples {
        text.push_str(&format!("  {:?}: {} vs {}\n", s.lambda, s.polytope, s.oracle));
    }
    let ok = rep.matches;
    Ok((serde_json::to_value(&rep).map_err(|e| Failure::Math(e.to_string()))?, text, ok))
}

fn volpoly(family: &PolytopeFamily, facets: Option<&str>) -> Outcome {
    let face: Option<Vec<usize>> = facets.map(|f| parse_ints(f, "facets")).transpose()?;
    let p = match &face {
        Some(f) => volume_polynomial(family, Some(FacetSet::from_indices(f.iter().copied())?))?,
        None => family_volume_polynomial(family)?,
    };
    let text = format!("{p}\n");
    let value = json!({"family": family.kind().to_string(), "facets": face, "polynomial": p});
    Ok((value, text, true))
}

fn structconst(family: &PolytopeFamily, u: &str, v: &str) -> Outcome {
    let (u, v) = (element(family, u)?, element(family, v)?);
    let sc = structure_constants(family, &u, &v)?;
    let mut text = String::new();
    for (w, c) in &sc.terms {
        text.push_str(&format!("{w}: {}\n", c.0));
    }
    if text.is_empty() {
        text.push_str("0\n");
    }
    Ok((serde_json::to_value(&sc).map_err(|e| Failure::Math(e.to_string()))?, text, true))
}

fn ring_ranks(family: &PolytopeFamily) -> Outcome {
    let r = ring_ranks_report(family)?;
    let text = format!(
        "{}: {}\n",
        r.family,
        r.ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    Ok((serde_json::to_value(&r).map_err(|e| Failure::Math(e.to_string()))?, text, true))
}

fn conjecture(family: &PolytopeFamily, conv: Option<&str>) -> Outcome {
    let convs = match conv {
        None => Convention::all().to_vec(),
        Some(_) => vec![parse_convention(conv)?],
    };
    let rep = conjecture_report(family, &convs)?;
    let mut text = String::new();
    for c in &rep.conventions {
        text.push_str(&format!(
            "{}: {} matched, {} mismatched, {} skipped\n",
            c.label,
            c.matched,
            c.mismatched,
            c.skipped.len()
        ));
    }
    Ok((serde_json::to_value(&rep).map_err(|e| Failure::Math(e.to_string()))?, text, true))
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Build { common, lambda } => build(&family_of(common)?, lambda.as_deref()),
        Command::Mitosis {
            common,
            ops,
            word,
            convention,
            render,
        } => mitosis(
            &family_of(common)?,
            ops.as_deref(),
            word.as_deref(),
            convention.as_deref(),
            *render,
            common.format,
        ),
        Command::DegreeCheck {
            common,
            word,
            lambda,
            convention,
        } => degree(&family_of(common)?, word, lambda, convention.as_deref()),
        Command::Volpoly { common, facets } => volpoly(&family_of(common)?, facets.as_deref()),
        Command::Structconst { common, u, v } => structconst(&family_of(common)?, u, v),
        Command::RingRanks { common } => ring_ranks(&family_of(common)?),
        Command::ConjectureReport { common, convention } => conjecture(&family_of(common)?, convention.as_deref()),
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Build { common, .. }
        | Command::Mitosis { common, .. }
        | Command::DegreeCheck { common, .. }
        | Command::Volpoly { common, .. }
        | Command::Structconst { common, .. }
        | Command::RingRanks { common }
        | Command::ConjectureReport { common, .. } => common,
    }
}

/// Run with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let c = common(&cli.command);
    let (value, text, ok) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
        Err(Failure::Math(m)) => {
            let _ = writeln!(err, "failure: {m}");
            return 2;
        }
    };
    let rendered_tables = matches!(&cli.command, Command::Mitosis { render: Some(Format::Text), .. });
    let body = if c.format == Format::Text || rendered_tables {
        text
    } else {
        let mut s = serde_json::to_string_pretty(&value).expect("json values always serialize");
        s.push('\n');
        s
    };
    let written = match &c.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => out.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    if ok {
        0
    } else {
        2
    }
}

/// Run against the process's standard streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
