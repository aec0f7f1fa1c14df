//! Command-line front end. The `bsposet` binary parses [`Cli`] and hands it
//! to [`run`]; tests drive [`run`] directly with in-memory sinks.

mod check;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{self, PosetIso};
use crate::complex::{self, SimplicialComplex};
use crate::decomp::{self, Decomposer};
use crate::error::{invalid, Error, Result};
use crate::hasse::{HasseDiagram, HasseJson};
use crate::poset;
use crate::rao;
use crate::sequence::{BSBounds, DegreeSequence, Limits};

pub use check::{run_suite, CheckOutcome, Suite};

#[derive(Parser, Debug, Clone)]
#[command(name = "bsposet", version, about = "Boij-Soderberg posets and their order complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest poset that will be enumerated.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_elements: usize,
    /// Largest number of maximal chains that will be listed.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_chains: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Bounds as comma-separated literals, e.g. `--lower 1,3 --upper 3,4`.
#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lower: DegreeSequence,
    #[arg(long, allow_hyphen_values = true)]
    pub upper: DegreeSequence,
}

impl BoundsArgs {
    fn bounds(&self) -> Result<BSBounds> {
        BSBounds::new(self.lower.clone(), self.upper.clone())
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the elements in lexicographic order.
    Enumerate(BoundsArgs),
    /// Cover relations; `--format dot` renders the Hasse diagram.
    Hasse(BoundsArgs),
    /// Facets, f-vector and h-vector of the order complex.
    Complex(BoundsArgs),
    /// Maximal chains in lexicographic order.
    Chains(BoundsArgs),
    /// Vertex and facet counts next to their closed forms and bounds.
    Count(BoundsArgs),
    /// Verify structural properties; exits 1 if one fails.
    Check {
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Shedding vertices of the order complex and a decomposition certificate.
    Shedding(BoundsArgs),
    /// The lexicographic atom ordering and whether it is recursive.
    AtomOrder(BoundsArgs),
    /// The order-reversing isomorphism onto the dual poset.
    Dual(BoundsArgs),
    /// The isomorphism `((0..p),(k..p+k)) -> ((0..k-1),(p+1..p+k))`.
    Shear {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: i64,
    },
    /// Search for bounds whose poset is isomorphic to a given one.
    FindBs(FindBsArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FindBsArgs {
    /// Hasse diagram as `{"elements": [[..], ..], "edges": [[i, j], ..]}`.
    #[arg(long, conflicts_with_all = ["lower", "upper", "delete"])]
    pub poset: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true, requires = "upper")]
    pub lower: Option<DegreeSequence>,
    #[arg(long, allow_hyphen_values = true, requires = "lower")]
    pub upper: Option<DegreeSequence>,
    /// Remove this element from the bounds' poset before searching.
    #[arg(long, allow_hyphen_values = true, requires = "lower")]
    pub delete: Option<DegreeSequence>,
    #[arg(long, default_value_t = 8)]
    pub window: i64,
}

/// Runs one command. Returns the process exit code: 0 on success, 1 when a
/// check fails, 2 on invalid input, 3 when a resource guard is hit.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = String::new();
    let status = match dispatch(cli, &mut buf) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Invalid(_) => 2,
                Error::Resource(_) => 3,
            };
        }
    };
    if out.write_all(buf.as_bytes()).and_then(|_| out.flush()).is_err() {
        let _ = writeln!(err, "error: cannot write output");
        return 2;
    }
    status
}

fn limits(cli: &Cli) -> Limits {
    Limits {
        max_elements: cli.max_elements,
        max_chains: cli.max_chains,
        ..Limits::default()
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn formats(cli: &Cli, allowed: &[Format]) -> Result<Format> {
    if allowed.contains(&cli.format) {
        Ok(cli.format)
    } else {
        invalid(format!("format {:?} is not available for this command", cli.format))
    }
}

const TEXT_JSON: &[Format] = &[Format::Text, Format::Json];

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    let lim = limits(cli);
    match &cli.command {
        Command::Enumerate(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let els = poset::enumerate_with(&b.bounds()?, &lim)?;
            match fmt {
                Format::Json => out.push_str(&json(&els)),
                _ => els.iter().for_each(|d| push_line(out, d.label())),
            }
        }
        Command::Hasse(b) => {
            let h = HasseDiagram::from_bounds_with(&b.bounds()?, &lim)?;
            match cli.format {
                Format::Dot => out.push_str(&emit_dot(&h)),
                Format::Json => out.push_str(&json(&h.to_json())),
                Format::Text => {
                    for &(a, c) in sorted_edges(&h).iter() {
                        push_line(out, format!("{} -> {}", h.elements()[a], h.elements()[c]));
                    }
                }
            }
        }
        Command::Complex(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let c = bounds_complex(&b.bounds()?, &lim)?;
            match fmt {
                Format::Json => out.push_str(&json(&c)),
                _ => write_complex(out, &c)?,
            }
        }
        Command::Chains(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let chains = poset::maximal_chains_with(&b.bounds()?, &lim)?;
            match fmt {
                Format::Json => out.push_str(&json(&chains)),
                _ => {
                    for ch in &chains {
                        let labels: Vec<String> = ch.elements().iter().map(|d| d.label()).collect();
                        push_line(out, labels.join(" < "));
                    }
                }
            }
        }
        Command::Count(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let r = analysis::count_report_with(&b.bounds()?, &lim)?;
            match fmt {
                Format::Json => out.push_str(&json(&r)),
                _ => write_counts(out, &r),
            }
        }
        Command::Check { bounds, suite } => {
            let fmt = formats(cli, TEXT_JSON)?;
            let outcomes = run_suite(&bounds.bounds()?, *suite, &lim)?;
            match fmt {
                Format::Json => out.push_str(&json(&outcomes)),
                _ => {
                    for o in &outcomes {
                        let verdict = if o.pass { "PASS" } else { "FAIL" };
                        push_line(out, format!("{:<8} {verdict}  {}", o.name, o.detail));
                    }
                }
            }
            if outcomes.iter().any(|o| !o.pass) {
                return Ok(1);
            }
        }
        Command::Shedding(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let c = bounds_complex(&b.bounds()?, &lim)?;
            let mut dec = Decomposer::new();
            let vertices = dec.shedding_vertices(&c)?;
            let tree = dec.decompose(&c)?;
            match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Shedding<'a> {
                        shedding_vertices: &'a [String],
                        certificate: &'a Option<decomp::SheddingTree>,
                    }
                    out.push_str(&json(&Shedding { shedding_vertices: &vertices, certificate: &tree }));
                }
                _ => {
                    vertices.iter().for_each(|v| push_line(out, v.clone()));
                    match &tree {
                        Some(t) => push_line(out, format!("vertex-decomposable ({} tree nodes)", t.node_count())),
                        None => push_line(out, "not vertex-decomposable"),
                    }
                }
            }
        }
        Command::AtomOrder(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let bounds = b.bounds()?;
            let h = HasseDiagram::from_bounds_with(&bounds, &lim)?;
            let ordering = rao::lex_atom_ordering(&bounds);
            let recursive = rao::verify_rao(&h, &ordering)?;
            match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Atoms<'a> {
                        ordering: &'a rao::AtomOrdering,
                        recursive: bool,
                    }
                    out.push_str(&json(&Atoms { ordering: &ordering, recursive }));
                }
                _ => {
                    ordering.atoms().iter().for_each(|a| push_line(out, a.label()));
                    push_line(out, format!("recursive: {recursive}"));
                }
            }
        }
        Command::Dual(b) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let bounds = b.bounds()?;
            guard_size(&bounds, &lim)?;
            write_iso(out, fmt, &analysis::dual_bounds(&bounds)?);
        }
        Command::Shear { p, k } => {
            let fmt = formats(cli, TEXT_JSON)?;
            if let Ok(source) = BSBounds::from_vecs((0..=*p).collect(), (*k..=*p + *k).collect()) {
                guard_size(&source, &lim)?;
            }
            write_iso(out, fmt, &analysis::shear(*p, *k)?);
        }
        Command::FindBs(args) => {
            let fmt = formats(cli, TEXT_JSON)?;
            let p = find_bs_input(args, &lim)?;
            let found = analysis::bs_membership_search(&p, args.window)?;
            match fmt {
                Format::Json => out.push_str(&json(&found)),
                _ => match &found {
                    Some(w) => {
                        push_line(out, format!("found {}", w.bounds));
                        for (s, t) in &w.map {
                            push_line(out, format!("{s} -> {t}"));
                        }
                    }
                    None => push_line(out, format!("absent within window {}", args.window)),
                },
            }
        }
    }
    Ok(0)
}

fn push_line(out: &mut String, line: impl AsRef<str>) {
    out.push_str(line.as_ref());
    out.push('\n');
}

fn bounds_complex(bounds: &BSBounds, lim: &Limits) -> Result<SimplicialComplex> {
    let h = HasseDiagram::from_bounds_with(bounds, lim)?;
    complex::order_complex_with(&h, lim)
}

/// Rejects bounds whose poset exceeds the element guard before an
/// isomorphism over it is built.
fn guard_size(bounds: &BSBounds, lim: &Limits) -> Result<()> {
    poset::enumerate_with(bounds, lim).map(|_| ())
}

fn sorted_edges(h: &HasseDiagram) -> Vec<(usize, usize)> {
    let mut edges = h.edges().to_vec();
    edges.sort_unstable();
    edges
}

fn write_complex(out: &mut String, c: &SimplicialComplex) -> Result<()> {
    for f in c.facets() {
        push_line(out, format!("{{{}}}", f.join(" ")));
    }
    let fh = c.f_vector()?;
    push_line(out, format!("f = {:?}", fh.f));
    match &fh.h {
        Some(h) => push_line(out, format!("h = {h:?}")),
        None => push_line(out, "h undefined (impure)"),
    }
    Ok(())
}

fn write_counts(out: &mut String, r: &analysis::CountReport) {
    push_line(out, format!("vertices {}", r.vertex_count));
    push_line(out, format!("facets {}", r.facet_count));
    if let (Some(v), Some(n)) = (&r.formula_vertices, &r.formula_facets) {
        push_line(out, format!("closed form: vertices {v}, facets {n}"));
    }
    push_line(out, format!("vertex bounds {} <= v <= {}", r.vertex_lower, r.vertex_upper));
    push_line(out, format!("facet bounds {} <= n <= {}", r.facet_lower, r.facet_upper));
    let holds = if r.printed_vertex_upper_holds { "holds" } else { "fails" };
    push_line(
        out,
        format!("vertex bound with exponent p: {} ({holds})", r.printed_vertex_upper),
    );
}

fn write_iso(out: &mut String, fmt: Format, iso: &PosetIso) {
    match fmt {
        Format::Json => out.push_str(&json(iso)),
        _ => {
            push_line(out, format!("source {}", iso.source));
            push_line(out, format!("target {}", iso.target));
            for (s, t) in &iso.map {
                push_line(out, format!("{s} -> {t}"));
            }
        }
    }
}

fn find_bs_input(args: &FindBsArgs, lim: &Limits) -> Result<HasseDiagram> {
    if let Some(path) = &args.poset {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        let parsed: HasseJson = serde_json::from_str(&text)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        return HasseDiagram::from_json(&parsed);
    }
    let (Some(lower), Some(upper)) = (&args.lower, &args.upper) else {
        return invalid("find-bs needs --poset or --lower/--upper");
    };
    let h = HasseDiagram::from_bounds_with(&BSBounds::new(lower.clone(), upper.clone())?, lim)?;
    match &args.delete {
        Some(d) => h.without(d),
        None => Ok(h),
    }
}

/// DOT rendering: nodes in lexicographic order, then cover edges from the
/// lower element to its cover.
pub fn emit_dot(h: &HasseDiagram) -> String {
    let mut s = String::from("digraph poset {\n");
    let mut order: Vec<usize> = (0..h.len()).collect();
    order.sort_by(|&a, &b| h.elements()[a].cmp(&h.elements()[b]));
    for &i in &order {
        s.push_str(&format!("  \"{}\";\n", h.elements()[i]));
    }
    let mut edges = h.edges().to_vec();
    edges.sort_by(|x, y| {
        let key = |e: &(usize, usize)| (h.elements()[e.0].clone(), h.elements()[e.1].clone());
        key(x).cmp(&key(y))
    });
    for (a, b) in edges {
        s.push_str(&format!("  \"{}\" -> \"{}\";\n", h.elements()[a], h.elements()[b]));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("bsposet").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dot_for_a_two_chain() {
        let h = HasseDiagram::from_bounds(&BSBounds::parse("0", "1").unwrap()).unwrap();
        assert_eq!(emit_dot(&h), "digraph poset {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n");
    }

    #[test]
    fn dot_for_diamond_with_tail() {
        let (code, out, _) = run_args(&["hasse", "--lower", "1,3", "--upper", "3,4", "--format", "dot"]);
        assert_eq!(code, 0);
        let edges: Vec<&str> = out.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(
            edges,
            [
                "  \"1,3\" -> \"1,4\";",
                "  \"1,3\" -> \"2,3\";",
                "  \"1,4\" -> \"2,4\";",
                "  \"2,3\" -> \"2,4\";",
                "  \"2,4\" -> \"3,4\";",
            ]
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["check", "--lower", "1,3", "--upper", "3,4"]).0, 0);
        assert_eq!(run_args(&["enumerate", "--lower", "3,4", "--upper", "1,3"]).0, 2);
        assert_eq!(run_args(&["chains", "--lower", "1,3", "--upper", "3,4", "--format", "dot"]).0, 2);
        assert_eq!(run_args(&["enumerate", "--lower", "0,1,2", "--upper", "7,8,9", "--max-elements", "10"]).0, 3);
        assert_eq!(run_args(&["shear", "--p", "1", "--k", "2"]).0, 2);
    }

    #[test]
    fn negative_entries_parse() {
        let (code, out, _) = run_args(&["enumerate", "--lower", "-2,-1", "--upper", "-1,0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-2,-1\n-2,0\n-1,0\n");
    }
}
