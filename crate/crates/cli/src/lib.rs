//! Command-line front end. [`run`] is the whole program; `main` only wires it
//! to the process streams.
//!
//! Output is line records, `key value`, one per line. `--pretty` aligns the
//! values into a column. Factorizations are printed as BMF text and group
//! presentations as `gens`/`rel` lines.

use std::fs;
use std::io::{self, Read, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use luttinger_core::braid::{BraidError, BraidWord};
use luttinger_core::factorization::{Direction, FactorizationError};
use luttinger_core::groups::{
    abelianization, enumerate_covers, tietze_simplify, CoverError, CoverLimits, MeridianSet, TietzeLimits,
};
use luttinger_core::moishezon::{
    distinguish, holonomy_two_ways, invariants, plucker_genus, ramification_consistency, FamilyError, FamilyParams,
};
use luttinger_core::rational::{format_rational, parse_rational};
use luttinger_core::surgery::{
    canonical_defect, family_torus_complement, holonomy_relative, meridian_after_surgery, torus_primitivity,
    AbelianPresentation, HolonomyValue, SurgeryError, SurgerySpec,
};
use luttinger_core::vankampen::{presentation, PresentationError};
use luttinger_core::{Factorization, GroupPresentation};
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Input(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "luttinger",
    version,
    about = "Braid monodromy and surgery invariant calculator"
)]
struct Cli {
    /// Align record values into a column.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Braid words: normal form, equality, permutation.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Braid monodromy factorizations in BMF text.
    #[command(subcommand)]
    Fact(FactCmd),
    /// Curve-complement presentation of a BMF file.
    Pi1 {
        file: String,
        /// Omit the relator at infinity (affine complement).
        #[arg(long)]
        affine: bool,
        /// Run Tietze simplification on the result.
        #[arg(long)]
        simplify: bool,
    },
    /// Abelianization of a presentation or BMF file.
    Abelianize {
        file: String,
        #[arg(long)]
        affine: bool,
    },
    /// Tietze simplification of a presentation or BMF file.
    Simplify {
        file: String,
        #[arg(long)]
        affine: bool,
        #[arg(long, default_value_t = TietzeLimits::default().max_eliminator_length)]
        max_eliminator: usize,
    },
    /// Count transitive permutation representations up to conjugacy.
    Covers(CoversArgs),
    /// Homology bookkeeping for surgery along a torus.
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Closed-form invariants of the family X_{p,k}.
    #[command(subcommand)]
    Moishezon(FamilyCmd),
}

#[derive(Debug, Args)]
struct WordArgs {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Letters such as "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

#[derive(Debug, Subcommand)]
enum BraidCmd {
    /// Garside left normal form.
    Nf(WordArgs),
    /// Decide equality of two words.
    Eq {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Induced permutation.
    Perm(WordArgs),
}

#[derive(Debug, Subcommand)]
enum FactCmd {
    /// Check that the factors multiply to the full twist.
    Validate {
        file: String,
        /// Accept powers above 3.
        #[arg(long)]
        allow_tangency: bool,
    },
    /// Count branch points, nodes and cusps.
    Census { file: String },
    /// Apply a Hurwitz move to the pair (i, i+1), 1-based.
    Hurwitz {
        file: String,
        #[arg(long)]
        index: usize,
        /// +1 forward, -1 backward.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true, value_parser = parse_direction)]
        dir: i32,
    },
    /// Conjugate factors from..=to (1-based) by b^k.
    Twist {
        file: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Factorization of a smooth curve of degree m.
    Smooth {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Args)]
struct CoversArgs {
    file: String,
    /// Degree of the cover.
    #[arg(long)]
    n: usize,
    /// "all" or a comma-separated list of 1-based generator indices.
    #[arg(long, default_value = "all", value_parser = parse_meridians)]
    meridians: MeridianSet,
    /// Also allow meridians to map to the identity.
    #[arg(long)]
    lax: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = CoverLimits::default().max_nodes)]
    max_nodes: u64,
    /// Give up after this many seconds.
    #[arg(long)]
    timeout: Option<u64>,
    /// Print the representatives as well as the count.
    #[arg(long)]
    list: bool,
    /// Use the affine presentation when the input is a BMF file.
    #[arg(long)]
    affine: bool,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum SurgeryCmd {
    /// Class of the new meridian, reduced in an abelian quotient.
    Meridian {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Use the torus-complement relations of X_{p,0}.
        #[arg(long, conflicts_with_all = ["gens", "rel"])]
        p: Option<i64>,
        /// Generator names; must include the meridian and twist loop.
        #[arg(long, num_args = 1.., default_values_t = ["mu".to_string(), "gamma".to_string()])]
        gens: Vec<String>,
        /// One relation row, e.g. "0 3". Repeatable.
        #[arg(long, allow_hyphen_values = true)]
        rel: Vec<String>,
        #[arg(long, default_value = "mu")]
        mu: String,
        #[arg(long, default_value = "gamma")]
        gamma: String,
        /// Use the opposite coorientation of the twist loop.
        #[arg(long)]
        reverse: bool,
    },
    /// Canonical-symplectic defect k·H·PD[T].
    Defect {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        h: BigRational,
    },
    /// H(γ, τ) from a relative surface bounded by m copies of γ.
    Holonomy {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        lambda: BigRational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        omega: BigRational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        canonical: BigRational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        intersection: BigRational,
        /// Integer change of trivialization.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        /// Symplectic area swept by moving the loop.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        swept_area: Option<BigRational>,
    },
    /// Is the torus class primitive after k twists in X_{p,k}?
    Primitive {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: i64,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    Invariants {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 0)]
        k: i64,
    },
    /// Decide whether X_{p,k1} and X_{p,k2} differ by their periods.
    Distinguish {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k1: i64,
        #[arg(long)]
        k2: i64,
    },
    /// Internal consistency checks of the closed forms.
    Check {
        #[arg(long)]
        p: i64,
    },
}

fn parse_q(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_direction(s: &str) -> Result<i32, String> {
    match s {
        "1" | "+1" | "forward" => Ok(1),
        "-1" | "backward" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn parse_meridians(s: &str) -> Result<MeridianSet, String> {
    if s == "all" {
        return Ok(MeridianSet::All);
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(MeridianSet::Subset)
}

/// Collected `key value` lines.
#[derive(Default)]
struct Records {
    rows: Vec<(String, String)>,
}

impl Records {
    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    fn extend<K: Into<String>>(&mut self, rows: Vec<(K, String)>) {
        for (k, v) in rows {
            self.push(k, v);
        }
    }

    fn render(&self, pretty: bool) -> String {
        let width = if pretty {
            self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0)
        } else {
            0
        };
        self.rows
            .iter()
            .map(|(k, v)| {
                if v.is_empty() {
                    format!("{k}\n")
                } else {
                    format!("{k:width$} {v}\n")
                }
            })
            .collect()
    }
}

enum Output {
    Records(Records),
    Text(String),
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// code: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(Output::Records(r)) => write_or_fail(out, err, &r.render(cli.pretty)),
        Ok(Output::Text(t)) => write_or_fail(out, err, &t),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn write_or_fail(out: &mut dyn Write, err: &mut dyn Write, text: &str) -> i32 {
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: writing output: {e}");
            1
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn is_bmf(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("bmf"))
}

/// Reads a presentation, or derives one when the file holds a factorization.
fn read_presentation(path: &str, affine: bool) -> Result<GroupPresentation, CliError> {
    let text = read_input(path)?;
    if is_bmf(&text) {
        let f = Factorization::parse_bmf_with(&text, true)?;
        Ok(presentation(&f, !affine)?)
    } else {
        Ok(GroupPresentation::parse(&text)?)
    }
}

fn read_factorization(path: &str, allow_higher: bool) -> Result<Factorization, CliError> {
    Ok(Factorization::parse_bmf_with(&read_input(path)?, allow_higher)?)
}

fn execute(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Braid(c) => braid(c),
        Command::Fact(c) => fact(c),
        Command::Pi1 { file, affine, simplify } => {
            let mut p = read_presentation(&file, affine)?;
            if simplify {
                p = tietze_simplify(&p, TietzeLimits::default());
            }
            Ok(Output::Text(p.to_text()))
        }
        Command::Abelianize { file, affine } => {
            let a = abelianization(&read_presentation(&file, affine)?);
            let mut r = Records::default();
            r.push("group", &a);
            r.push("free_rank", a.free_rank);
            let torsion: Vec<String> = a.torsion.iter().map(|t| t.to_string()).collect();
            r.push(
                "torsion",
                if torsion.is_empty() {
                    "-".to_string()
                } else {
                    torsion.join(" ")
                },
            );
            Ok(Output::Records(r))
        }
        Command::Simplify {
            file,
            affine,
            max_eliminator,
        } => {
            let limits = TietzeLimits {
                max_eliminator_length: max_eliminator,
                ..TietzeLimits::default()
            };
            Ok(Output::Text(
                tietze_simplify(&read_presentation(&file, affine)?, limits).to_text(),
            ))
        }
        Command::Covers(a) => covers(a),
        Command::Surgery(c) => surgery(c),
        Command::Moishezon(c) => family(c),
    }
}

fn braid(cmd: BraidCmd) -> Result<Output, CliError> {
    let mut r = Records::default();
    match cmd {
        BraidCmd::Nf(a) => {
            let w = BraidWord::parse(a.n, &a.w)?;
            let nf = w.normal_form();
            r.push("nf", &nf);
            r.push("infimum", nf.infimum());
            r.push("canonical_length", nf.canonical_length());
            r.push("word", nf.to_word());
        }
        BraidCmd::Eq { n, u, v } => {
            let (u, v) = (BraidWord::parse(n, &u)?, BraidWord::parse(n, &v)?);
            r.push(if u.equal(&v)? { "equal" } else { "not-equal" }, "");
        }
        BraidCmd::Perm(a) => {
            let p = BraidWord::parse(a.n, &a.w)?.perm();
            r.push("perm", &p);
            let ct: Vec<String> = p.cycle_type().iter().map(|c| c.to_string()).collect();
            r.push("cycle_type", ct.join(" "));
            let images: Vec<String> = p.images().iter().map(|i| (i + 1).to_string()).collect();
            r.push("images", images.join(" "));
        }
    }
    Ok(Output::Records(r))
}

fn fact(cmd: FactCmd) -> Result<Output, CliError> {
    match cmd {
        FactCmd::Validate { file, allow_tangency } => {
            let f = read_factorization(&file, true)?;
            let v = f.validate_with(allow_tangency);
            let mut r = Records::default();
            r.push("valid", v.is_valid());
            r.push("reason", v.reason());
            r.push("factors", f.len());
            Ok(Output::Records(r))
        }
        FactCmd::Census { file } => {
            let c = read_factorization(&file, false)?.census()?;
            let mut r = Records::default();
            r.push("branch_points", c.branch_points);
            r.push("nodes", c.nodes);
            r.push("cusps", c.cusps);
            r.push("total", c.total());
            Ok(Output::Records(r))
        }
        FactCmd::Hurwitz { file, index, dir } => {
            let f = read_factorization(&file, true)?;
            if index == 0 {
                return Err(CliError::Input("--index is 1-based".into()));
            }
            let d = Direction::from_sign(dir).expect("parser admits only +1 and -1");
            Ok(Output::Text(f.hurwitz_move(index - 1, d)?.to_bmf()))
        }
        FactCmd::Twist { file, from, to, b, k } => {
            let f = read_factorization(&file, true)?;
            if from == 0 {
                return Err(CliError::Input("--from is 1-based".into()));
            }
            let b = BraidWord::parse(f.strands(), &b)?;
            Ok(Output::Text(f.partial_conjugate(from - 1..to, &b, k)?.to_bmf()))
        }
        FactCmd::Smooth { m } => Ok(Output::Text(Factorization::smooth_curve(m)?.to_bmf())),
    }
}

fn covers(a: CoversArgs) -> Result<Output, CliError> {
    let p = read_presentation(&a.file, a.affine)?;
    let limits = CoverLimits {
        max_nodes: a.max_nodes,
        time_limit: a.timeout.map(Duration::from_secs),
        workers: a.workers.max(1),
        strict_meridians: !a.lax,
    };
    let sols = enumerate_covers(&p, a.n, &a.meridians, limits)?;
    if !a.list {
        let mut r = Records::default();
        r.push("count", sols.len());
        return Ok(Output::Records(r));
    }
    let mut text = format!("count {}\n", sols.len());
    for (i, s) in sols.iter().enumerate() {
        text.push_str(&format!("solution {}\n", i + 1));
        text.push_str(&s.to_text(&p));
    }
    Ok(Output::Text(text))
}

fn parse_row(s: &str) -> Result<Vec<i64>, CliError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| CliError::Input(format!("relation {s:?}: {e}")))
        })
        .collect()
}

fn surgery(cmd: SurgeryCmd) -> Result<Output, CliError> {
    let mut r = Records::default();
    match cmd {
        SurgeryCmd::Meridian {
            k,
            p,
            gens,
            rel,
            mu,
            gamma,
            reverse,
        } => {
            let ambient = match p {
                Some(p) => family_torus_complement(p),
                None => {
                    let rows = rel.iter().map(|s| parse_row(s)).collect::<Result<Vec<_>, _>>()?;
                    let names: Vec<&str> = gens.iter().map(String::as_str).collect();
                    AbelianPresentation::from_i64(&names, &rows)?
                }
            };
            let mut spec = SurgerySpec::new(k, &gamma, &mu);
            if reverse {
                spec = spec.reverse_coorientation();
            }
            let red = meridian_after_surgery(&spec, &ambient)?;
            for (s, c) in red.class.terms() {
                r.push(format!("sym {s}"), luttinger_core::rational::format_rational_full(c));
            }
            let coords: Vec<String> = red.coordinates.iter().map(|c| c.to_string()).collect();
            let moduli: Vec<String> = red.moduli.iter().map(|c| c.to_string()).collect();
            r.push("coordinates", coords.join(" "));
            r.push("moduli", moduli.join(" "));
            r.push("zero", red.is_zero());
            r.push("order", red.order().map_or("infinite".to_string(), |o| o.to_string()));
        }
        SurgeryCmd::Defect { k, h } => {
            let d = canonical_defect(k, &HolonomyValue::new(h));
            if d.is_zero() {
                r.push("zero", true);
            }
            for (s, c) in d.terms() {
                r.push(format!("sym {s}"), luttinger_core::rational::format_rational_full(c));
            }
            r.push("trivialization_dependent", true);
        }
        SurgeryCmd::Holonomy {
            m,
            lambda,
            omega,
            canonical,
            intersection,
            shift,
            swept_area,
        } => {
            let mut h = holonomy_relative(m, &lambda, &omega, &canonical, &intersection)?;
            if let Some(s) = shift {
                h = h.trivialization_shift(s);
            }
            if let Some(a) = swept_area {
                h = h.deformation_shift(&lambda, &a);
            }
            r.push("H", format_rational(&h.value));
            r.push("trivialization_dependent", h.trivialization_dependent);
        }
        SurgeryCmd::Primitive { p, k } => {
            r.push("primitive", torus_primitivity(p, k)?);
        }
    }
    Ok(Output::Records(r))
}

fn family(cmd: FamilyCmd) -> Result<Output, CliError> {
    let mut r = Records::default();
    match cmd {
        FamilyCmd::Invariants { p, k } => {
            r.extend(invariants(FamilyParams::new(p, k)?)?.records());
        }
        FamilyCmd::Distinguish { p, k1, k2 } => {
            r.extend(distinguish(p, k1, k2)?.records());
        }
        FamilyCmd::Check { p } => {
            let inv = invariants(FamilyParams::new(p, 0)?)?;
            let (ok, cert) = ramification_consistency(p)?;
            r.push("ramification", cert);
            r.push("ramification_ok", ok);
            let (h1, h2) = holonomy_two_ways(p)?;
            r.push("holonomy_ramification", format_rational(&h1));
            r.push("holonomy_surface", format_rational(&h2));
            r.push("holonomy_agree", h1 == h2);
            let m: i64 = inv
                .m
                .clone()
                .try_into()
                .map_err(|_| CliError::Input("degree too large".into()))?;
            r.push("genus", plucker_genus(m, &inv.nodes, &inv.cusps)?);
        }
    }
    Ok(Output::Records(r))
}
