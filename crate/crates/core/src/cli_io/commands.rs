//! The command-line interface. `run` returns the text for standard output;
//! the binary only parses arguments, sets up logging and maps errors to exit
//! codes.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::cli_io::archive::{self, Archive};
use crate::cli_io::macaulay2::export_macaulay2;
use crate::covers::DEFAULT_LOOP_CAP;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::IntMatrix;
use crate::monoid::AffineMonoid;
use crate::polyhedral::FaceIndex;

#[derive(Debug, Parser)]
#[command(
    name = "stdpairs",
    version,
    about = "Standard pairs and decompositions of monomial ideals in affine semigroups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Write the resulting archive (or script) to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum number of cover refinement rounds.
    #[arg(long, global = true, default_value_t = DEFAULT_LOOP_CAP)]
    pub loop_cap: usize,
    /// Recompute cached results of loaded archives and compare.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Suppress progress messages.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect an affine semigroup.
    Monoid {
        /// Archive containing a MONOID section.
        file: Option<PathBuf>,
        /// Generators inline as "rows cols; row; row; ...".
        #[arg(long)]
        matrix: Option<String>,
        #[command(subcommand)]
        action: MonoidAction,
    },
    /// Compute with a monomial ideal stored in an archive.
    Ideal {
        file: PathBuf,
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Operations on pairs stored as one-pair covers.
    Pair {
        #[command(subcommand)]
        action: PairAction,
    },
    /// Print a Macaulay2 script for an ideal and its standard cover.
    #[command(name = "export-m2")]
    ExportM2 { file: PathBuf },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum MonoidAction {
    Info,
    Faces,
    Supports,
}

#[derive(Debug, Clone, Subcommand)]
pub enum IdealAction {
    Cover,
    Radical,
    Assoc,
    Mult {
        #[arg(long)]
        face: String,
    },
    Decompose,
}

#[derive(Debug, Clone, Subcommand)]
pub enum PairAction {
    Divides { first: PathBuf, second: PathBuf },
}

/// Process exit code for an error: 2 for bad input, 3 for the loop cap,
/// 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::LoopCap(_) => 3,
        Error::Io(_) => 1,
        _ => 2,
    }
}

/// Parses `"2 2; 1 2; 0 2"`: a shape followed by the rows.
pub fn parse_inline_matrix(text: &str) -> Result<IntMatrix> {
    let bad = |msg: String| Error::Parse { line: 1, msg };
    let mut parts = text.split(';').map(str::trim);
    let shape: Vec<usize> = parts
        .next()
        .unwrap_or_default()
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(format!("bad shape token {t:?}"))))
        .collect::<Result<_>>()?;
    let [r, c] = shape[..] else { return Err(bad("expected \"rows cols\" before the first ';'".into())) };
    let rows: Vec<&str> = parts.filter(|p| !p.is_empty()).collect();
    if c == 0 {
        return Ok(IntMatrix::zeros(r, 0));
    }
    if rows.len() != r {
        return Err(bad(format!("expected {r} rows, found {}", rows.len())));
    }
    let mut data = Vec::with_capacity(r * c);
    for row in rows {
        let entries: Vec<BigInt> = row
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad integer {t:?}"))))
            .collect::<Result<_>>()?;
        if entries.len() != c {
            return Err(bad(format!("expected {c} entries in row {row:?}")));
        }
        data.extend(entries);
    }
    IntMatrix::from_data(r, c, data)
}

fn load(path: &PathBuf, opts: &GlobalOpts) -> Result<Archive> {
    let archive = archive::load(path)?;
    if opts.verify {
        archive::verify(&archive)?;
    }
    Ok(archive)
}

fn load_ideal(path: &PathBuf, opts: &GlobalOpts) -> Result<MonomialIdeal> {
    match load(path, opts)? {
        Archive::Ideal(i) => Ok(i),
        other => Err(Error::domain(format!("{} holds a {}, not an ideal", path.display(), other.kind()))),
    }
}

fn monoid_command(
    file: Option<&PathBuf>,
    matrix: Option<&str>,
    action: MonoidAction,
    opts: &GlobalOpts,
) -> Result<String> {
    let monoid = match (file, matrix) {
        (Some(_), Some(_)) => return Err(Error::domain("give either a file or --matrix, not both")),
        (None, Some(m)) => Arc::new(AffineMonoid::new(parse_inline_matrix(m)?)?),
        (Some(f), None) => load(f, opts)?.monoid().clone(),
        (None, None) => return Err(Error::domain("a monoid file or --matrix is required")),
    };
    let mut out = String::new();
    match action {
        MonoidAction::Info => {
            let _ = writeln!(out, "{monoid}");
            let _ = writeln!(out, "minimal generators:\n{}", monoid.minimal_generators());
            let _ = writeln!(out, "faces: {}", monoid.lattice().len());
            let _ = writeln!(out, "hash: {}", monoid.hash());
        }
        MonoidAction::Faces => {
            for f in monoid.lattice().iter() {
                let _ = writeln!(out, "{f}");
            }
        }
        MonoidAction::Supports => {
            for f in monoid.lattice().proper_faces() {
                let rows: Vec<String> = monoid.supports(f)?.rows().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{f}:{}", rows.iter().map(|r| format!(" {r}")).collect::<String>());
            }
        }
    }
    if let Some(path) = &opts.out {
        archive::save(&Archive::Monoid(monoid), path)?;
    }
    Ok(out)
}

fn ideal_command(file: &PathBuf, action: &IdealAction, opts: &GlobalOpts) -> Result<String> {
    let ideal = load_ideal(file, opts)?;
    if !ideal.is_empty() {
        ideal.standard_cover_with_cap(opts.loop_cap)?;
    }
    let mut out = String::new();
    match action {
        IdealAction::Cover => {
            let _ = writeln!(out, "{}", ideal.standard_cover()?);
        }
        IdealAction::Radical => {
            let _ = writeln!(out, "{}", ideal.radical()?);
        }
        IdealAction::Assoc => {
            for (f, p) in ideal.associated_primes()? {
                let gens: Vec<String> = p.generators().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{f}: <{}>", gens.join(", "));
            }
        }
        IdealAction::Mult { face } => {
            let f: FaceIndex = face.parse()?;
            let _ = writeln!(out, "{}", ideal.multiplicity(&f)?);
        }
        IdealAction::Decompose => {
            for w in ideal.irreducible_decomposition()? {
                let gens: Vec<String> = w.generators().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "<{}>", gens.join(", "));
            }
        }
    }
    if let Some(path) = &opts.out {
        archive::save(&Archive::Ideal(ideal), path)?;
    }
    Ok(out)
}

fn single_pair(path: &PathBuf, opts: &GlobalOpts) -> Result<crate::pairs::ProperPair> {
    let pairs = match load(path, opts)? {
        Archive::Cover(c) => c.pairs(),
        Archive::Ideal(i) if i.has_cached_cover() => i.standard_cover()?.pairs(),
        other => return Err(Error::domain(format!("{} holds a {} without a cover", path.display(), other.kind()))),
    };
    match <[_; 1]>::try_from(pairs) {
        Ok([p]) => Ok(p),
        Err(v) => Err(Error::domain(format!("{} holds {} pairs, expected exactly one", path.display(), v.len()))),
    }
}

fn pair_command(action: &PairAction, opts: &GlobalOpts) -> Result<String> {
    let PairAction::Divides { first, second } = action;
    let (p, q) = (single_pair(first, opts)?, single_pair(second, opts)?);
    let rows = p.divides(&q)?;
    let out = if rows.rows() == 0 { format!("{p} does not divide {q}\n") } else { format!("{rows}\n") };
    if let Some(path) = &opts.out {
        std::fs::write(path, &out)?;
    }
    Ok(out)
}

fn export_command(file: &PathBuf, opts: &GlobalOpts) -> Result<String> {
    let ideal = load_ideal(file, opts)?;
    let script = if ideal.is_empty() {
        export_macaulay2(&ideal, &crate::covers::Cover::new(ideal.monoid().clone()))?
    } else {
        export_macaulay2(&ideal, ideal.standard_cover_with_cap(opts.loop_cap)?)?
    };
    if let Some(path) = &opts.out {
        std::fs::write(path, &script)?;
    }
    Ok(script)
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<String> {
    let opts = &cli.global;
    match &cli.command {
        Command::Monoid { file, matrix, action } => monoid_command(file.as_ref(), matrix.as_deref(), *action, opts),
        Command::Ideal { file, action } => ideal_command(file, action, opts),
        Command::Pair { action } => pair_command(action, opts),
        Command::ExportM2 { file } => export_command(file, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_matrices() {
        assert_eq!(parse_inline_matrix("2 2; 1 2; 0 2").unwrap(), IntMatrix::from_rows(&[[1, 2], [0, 2]]));
        assert_eq!(parse_inline_matrix("2 0").unwrap().rows(), 2);
        assert!(parse_inline_matrix("2 2; 1 2").is_err());
        assert!(parse_inline_matrix("1 2; 1 x").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["stdpairs", "monoid", "--matrix", "2 2; 1 2; 0 2", "faces"]).unwrap();
        assert_eq!(run(&cli).unwrap(), "(-1,)\n()\n(0,)\n(1,)\n(0, 1)\n");
        let cli = Cli::try_parse_from(["stdpairs", "ideal", "x.txt", "mult", "--face", "(0,)"]).unwrap();
        assert!(matches!(cli.command, Command::Ideal { action: IdealAction::Mult { .. }, .. }));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::LoopCap(3)), 3);
        assert_eq!(exit_code(&Error::Parse { line: 1, msg: String::new() }), 2);
        assert_eq!(exit_code(&Error::Io(std::io::Error::other("x"))), 1);
    }
}
