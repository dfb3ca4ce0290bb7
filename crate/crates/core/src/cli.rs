//! The `nsgps` command line.
//!
//! Plain output follows GAP's list notation (`[ 1, 2 ]`); `--json` prints one
//! JSON object per semigroup with sorted keys.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{
    self, arrangement_report, decompose_into_irreducibles, decompose_minimum_cardinality,
    free_arrangement, free_arrangements, irreducibility, is_med, is_telescopic, med_closure,
    oversemigroups,
};
use crate::curves::{self, Place};
use crate::enumerate::{Enumerator, Limits};
use crate::error::{Error, Result};
use crate::invariants::{self, invariant_report};
use crate::presentations::{betti_elements, binomial_text, factorizations, minimal_presentation};
use crate::semigroup::NumericalSemigroup;

#[derive(Parser, Debug)]
#[command(
    name = "nsgps",
    version,
    about = "Computations with numerical semigroups"
)]
struct Cli {
    /// Print JSON instead of GAP-style text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on generated results and on search sizes.
    #[arg(long, global = true)]
    limit: Option<usize>,
    /// Worker threads for the parallel parts.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Generators as a comma separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    gens: Vec<u64>,
    /// File with one generator list per line; the command runs on each.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Gens {
    /// Generators.
    generators: Vec<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Notable elements: Frobenius number, genus, gaps, Apéry set, PF, type.
    Info(Gens),
    /// Apéry set with respect to n.
    Apery { n: u64, generators: Vec<u64> },
    /// Symmetric, pseudo-symmetric, MED, free and telescopic tests.
    Classify(Gens),
    /// Decomposition into irreducible semigroups.
    Decompose {
        /// Search for a decomposition with the fewest components.
        #[arg(long)]
        exhaustive: bool,
        generators: Vec<u64>,
    },
    /// All oversemigroups.
    Over {
        #[arg(long)]
        count: bool,
        generators: Vec<u64>,
    },
    /// MED test and MED closure.
    Med(Gens),
    /// Free arrangements, gcd and e sequences.
    Free {
        /// List every free arrangement.
        #[arg(long)]
        all: bool,
        generators: Vec<u64>,
    },
    /// Minimal presentation, as pairs of factorizations and as binomials.
    Presentation(Gens),
    /// Betti elements.
    Betti(Gens),
    /// Factorizations of an element.
    Factorize {
        #[arg(allow_negative_numbers = true)]
        s: i64,
        generators: Vec<u64>,
    },
    /// Elasticity, Delta set, catenary degree and ω-primality.
    Invariants {
        /// Restrict to one element.
        #[arg(long)]
        element: Option<u64>,
        generators: Vec<u64>,
    },
    /// Enumerate semigroups by genus or Frobenius number.
    #[command(group(ArgGroup::new("family").required(true)))]
    Enumerate {
        #[arg(long, group = "family")]
        genus: Option<u64>,
        #[arg(long, group = "family", allow_negative_numbers = true)]
        frobenius: Option<i64>,
        #[arg(long, group = "family", allow_negative_numbers = true)]
        irreducible: Option<i64>,
        #[arg(long, group = "family", allow_negative_numbers = true)]
        free: Option<i64>,
        #[arg(long, group = "family", allow_negative_numbers = true)]
        delta: Option<i64>,
        /// Print only the number of results.
        #[arg(long)]
        count: bool,
    },
    /// Characteristic sequences from an r-sequence.
    #[command(group(ArgGroup::new("seq").required(true)))]
    Curve {
        /// r_0,r_1,...,r_h
        #[arg(long, group = "seq", value_delimiter = ',')]
        from_r: Option<Vec<u64>>,
        /// δ-sequence whose local dual at infinity is printed.
        #[arg(long, group = "seq", value_delimiter = ',')]
        dual: Option<Vec<u64>>,
        /// Read the sequence as a local branch instead of at infinity.
        #[arg(long)]
        local: bool,
    },
}

/// `[ 1, 2, 3 ]`, with GAP's `[  ]` for the empty list.
pub fn gap_list<T: Display>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "[  ]".to_string();
    }
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[ {} ]", items.join(", "))
}

/// `[ [ 1 ], [ 2, 3 ] ]`.
pub fn gap_nested<T: Display>(xss: &[Vec<T>]) -> String {
    let inner: Vec<String> = xss.iter().map(|xs| gap_list(xs)).collect();
    if inner.is_empty() {
        return "[  ]".to_string();
    }
    format!("[ {} ]", inner.join(", "))
}

fn gens_of(list: &[NumericalSemigroup]) -> Vec<Vec<u64>> {
    list.iter().map(|s| s.generators().to_vec()).collect()
}

/// Text and JSON renderings of one result.
struct Report {
    lines: Vec<String>,
    json: Value,
}

impl Report {
    fn new(json: Value) -> Self {
        Report {
            lines: Vec::new(),
            json,
        }
    }

    fn line(mut self, key: &str, value: impl Display) -> Self {
        self.lines.push(format!("{key}: {value}"));
        self
    }

    fn raw(mut self, text: impl Display) -> Self {
        self.lines.push(text.to_string());
        self
    }
}

fn classification_name(s: &NumericalSemigroup) -> String {
    serde_json::to_value(irreducibility(s))
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn info(s: &NumericalSemigroup) -> Report {
    let ap = s.apery_of_multiplicity();
    let j = json!({
        "generators": s.generators(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "conductor": s.conductor(),
        "genus": s.genus(),
        "gaps": s.gaps(),
        "small_elements": s.small_elements(),
        "apery": ap.residues,
        "pf": s.pseudo_frobenius(),
        "type": s.type_(),
        "special_gaps": s.special_gaps(),
        "classification": classification_name(s),
        "wilf": s.wilf_check(),
    });
    Report::new(j)
        .line("generators", gap_list(s.generators()))
        .line("multiplicity", s.multiplicity())
        .line("embedding dimension", s.embedding_dimension())
        .line("frobenius", s.frobenius())
        .line("conductor", s.conductor())
        .line("genus", s.genus())
        .line("gaps", gap_list(s.gaps()))
        .line("small elements", gap_list(&s.small_elements()))
        .line("apery", gap_list(&ap.residues))
        .line("pf", gap_list(s.pseudo_frobenius()))
        .line("type", s.type_())
        .line("special gaps", gap_list(s.special_gaps()))
        .line("classification", classification_name(s))
        .line("wilf", s.wilf_check())
}

fn classify_report(s: &NumericalSemigroup) -> Result<Report> {
    let arrangement = free_arrangement(s)?;
    let class = json!({
        "irreducibility": classification_name(s),
        "symmetric": classify::is_symmetric(s),
        "pseudo_symmetric": classify::is_pseudo_symmetric(s),
        "irreducible": classify::is_irreducible(s),
        "med": is_med(s),
        "free": arrangement.is_some(),
        "free_arrangement": arrangement,
        "telescopic": is_telescopic(s),
    });
    let mut r = Report::new(json!({ "generators": s.generators(), "classification": class }))
        .line("generators", gap_list(s.generators()))
        .line("classification", classification_name(s))
        .line("symmetric", classify::is_symmetric(s))
        .line("pseudo-symmetric", classify::is_pseudo_symmetric(s))
        .line("med", is_med(s))
        .line("free", arrangement.is_some());
    if let Some(a) = &arrangement {
        r = r.line("free arrangement", gap_list(a));
    }
    Ok(r.line("telescopic", is_telescopic(s)))
}

fn presentation_report(s: &NumericalSemigroup) -> Report {
    let rel = minimal_presentation(s);
    let pairs: Vec<String> = rel
        .iter()
        .map(|r| format!("[ {}, {} ]", r.lhs, r.rhs))
        .collect();
    let binomials: Vec<String> = rel.iter().map(binomial_text).collect();
    let plain = if pairs.is_empty() {
        "[  ]".to_string()
    } else {
        format!("[ {} ]", pairs.join(", "))
    };
    Report::new(json!({
        "generators": s.generators(),
        "presentation": rel,
        "binomials": binomials,
    }))
    .line("presentation", plain)
    .line("binomials", gap_list(&binomials))
}

fn factorize_report(s: &NumericalSemigroup, x: i64) -> Result<Report> {
    if x < 0 || !s.contains(x) {
        return Err(Error::NotMember(x));
    }
    let x = x as u64;
    let z = factorizations(s, x);
    let l = invariants::lengths(s, x)?;
    let zs: Vec<Vec<u64>> = z.iter().map(|f| f.0.clone()).collect();
    Ok(Report::new(json!({
        "generators": s.generators(),
        "element": x,
        "factorizations": zs,
        "lengths": l.lengths,
    }))
    .line("factorizations", gap_nested(&zs))
    .line("lengths", gap_list(&l.lengths)))
}

fn invariants_report(s: &NumericalSemigroup, element: Option<u64>, cap: usize) -> Result<Report> {
    match element {
        Some(x) => {
            let l = invariants::lengths(s, x)?;
            let delta: Vec<u64> = l.delta().into_iter().collect();
            let rho = invariants::elasticity_of(s, x)?;
            let c = invariants::catenary_of(s, x)?;
            let w = invariants::omega_of_capped(s, x, cap)?;
            Ok(Report::new(json!({
                "generators": s.generators(),
                "invariants": {
                    "element": x,
                    "lengths": l.lengths,
                    "elasticity": rho.to_string(),
                    "delta": delta,
                    "catenary": c,
                    "omega": w,
                },
            }))
            .line("element", x)
            .line("lengths", gap_list(&l.lengths))
            .line("elasticity", rho)
            .line("delta", gap_list(&delta))
            .line("catenary", c)
            .line("omega", w))
        }
        None => {
            let r = invariant_report(s)?;
            let opt = |v: Option<u64>| v.map_or("none".to_string(), |x| x.to_string());
            Ok(
                Report::new(json!({ "generators": s.generators(), "invariants": r }))
                    .line("elasticity", r.elasticity)
                    .line("delta min", opt(r.delta_min))
                    .line("delta max", opt(r.delta_max))
                    .line("catenary", r.catenary)
                    .line("omega", r.omega),
            )
        }
    }
}

fn curve_report(c: &curves::CharSequences) -> Result<Report> {
    let s = curves::semigroup_of(c)?;
    let place = serde_json::to_value(c.place)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    Ok(Report::new(json!({
        "curve": {
            "sequences": c,
            "generators": s.generators(),
            "conductor": curves::conductor_of(c),
            "delta_sequence": curves::is_delta_sequence(c),
            "local_branch": curves::is_local_branch(c),
        },
    }))
    .line("place", place)
    .line("n", c.n)
    .line("r", gap_list(&c.r_seq))
    .line("d", gap_list(&c.d_seq))
    .line("e", gap_list(&c.e_seq))
    .line("m", gap_list(&c.m_seq))
    .line("semigroup", gap_list(s.generators()))
    .line("conductor", curves::conductor_of(c))
    .line("delta sequence", curves::is_delta_sequence(c))
    .line("local branch", curves::is_local_branch(c)))
}

fn semigroup_from(gens: &[u64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(gens)
}

fn command_generators(cmd: &Command) -> Option<&[u64]> {
    match cmd {
        Command::Info(g) | Command::Classify(g) | Command::Med(g) => Some(&g.generators),
        Command::Presentation(g) | Command::Betti(g) => Some(&g.generators),
        Command::Apery { generators, .. }
        | Command::Decompose { generators, .. }
        | Command::Over { generators, .. }
        | Command::Free { generators, .. }
        | Command::Factorize { generators, .. }
        | Command::Invariants { generators, .. } => Some(generators),
        Command::Enumerate { .. } | Command::Curve { .. } => None,
    }
}

fn run_on(cmd: &Command, s: &NumericalSemigroup, cap: usize) -> Result<Report> {
    Ok(match cmd {
        Command::Info(_) => info(s),
        Command::Apery { n, .. } => {
            let ap = s.apery(*n)?;
            Report::new(json!({ "generators": s.generators(), "n": n, "apery": ap.residues }))
                .raw(gap_list(&ap.residues))
        }
        Command::Classify(_) => classify_report(s)?,
        Command::Decompose { exhaustive, .. } => {
            let parts = if *exhaustive {
                decompose_minimum_cardinality(s)?
            } else {
                decompose_into_irreducibles(s)
            };
            let g = gens_of(&parts);
            Report::new(json!({ "generators": s.generators(), "decomposition": g }))
                .raw(gap_nested(&g))
        }
        Command::Over { count, .. } => {
            let over = oversemigroups(s);
            let g = gens_of(&over);
            let r = Report::new(json!({ "generators": s.generators(), "oversemigroups": g }));
            if *count {
                r.raw(over.len())
            } else {
                r.raw(gap_nested(&g))
            }
        }
        Command::Med(_) => {
            let closure = med_closure(s, s.multiplicity())?;
            Report::new(json!({
                "generators": s.generators(),
                "med": is_med(s),
                "med_closure": closure.generators(),
            }))
            .line("med", is_med(s))
            .line("closure", gap_list(closure.generators()))
        }
        Command::Free { all, .. } => {
            let arrangements = if *all {
                free_arrangements(s)?
            } else {
                free_arrangement(s)?.into_iter().collect()
            };
            let mut r = Report::new(json!({
                "generators": s.generators(),
                "free": !arrangements.is_empty(),
                "arrangements": arrangements,
                "telescopic": is_telescopic(s),
            }))
            .line("free", !arrangements.is_empty())
            .line("telescopic", is_telescopic(s));
            for a in &arrangements {
                let rep = arrangement_report(s, a)?;
                r = r
                    .line("arrangement", gap_list(&rep.arrangement))
                    .line("d", gap_list(&rep.d_seq))
                    .line("e", gap_list(&rep.e_seq));
            }
            r
        }
        Command::Presentation(_) => presentation_report(s),
        Command::Betti(_) => {
            let b = betti_elements(s);
            Report::new(json!({ "generators": s.generators(), "betti": b })).raw(gap_list(&b))
        }
        Command::Factorize { s: x, .. } => factorize_report(s, *x)?,
        Command::Invariants { element, .. } => invariants_report(s, *element, cap)?,
        Command::Enumerate { .. } | Command::Curve { .. } => {
            unreachable!("not a per-semigroup command")
        }
    })
}

fn enumerate(cmd: &Command, limits: Limits) -> Result<Report> {
    let Command::Enumerate {
        genus,
        frobenius,
        irreducible,
        free,
        delta,
        count,
    } = cmd
    else {
        unreachable!()
    };
    let e = Enumerator::with_limits(limits);
    if let Some(f) = delta {
        let seqs = curves::delta_sequences_with(&limits, *f)?;
        let r =
            Report::new(json!({ "frobenius": f, "delta_sequences": seqs, "count": seqs.len() }));
        return Ok(if *count {
            r.raw(seqs.len())
        } else {
            r.raw(gap_nested(&seqs))
        });
    }
    if let (Some(g), true) = (genus, *count) {
        let n = e.count_by_genus(*g)?[*g as usize];
        return Ok(Report::new(json!({ "genus": g, "count": n })).raw(n));
    }
    let (key, value, list) = if let Some(g) = genus {
        ("genus", json!(g), e.with_genus(*g)?)
    } else if let Some(f) = frobenius {
        ("frobenius", json!(f), e.with_frobenius(*f)?)
    } else if let Some(f) = irreducible {
        ("frobenius", json!(f), e.irreducible_with_frobenius(*f)?)
    } else if let Some(f) = free {
        ("frobenius", json!(f), e.free_with_frobenius(*f)?)
    } else {
        unreachable!("clap requires one family")
    };
    let g = gens_of(&list);
    let r = Report::new(json!({ key: value, "semigroups": g, "count": g.len() }));
    Ok(if *count {
        r.raw(g.len())
    } else {
        r.raw(gap_nested(&g))
    })
}

fn curve(cmd: &Command) -> Result<Report> {
    let Command::Curve {
        from_r,
        dual,
        local,
    } = cmd
    else {
        unreachable!()
    };
    let place = if *local {
        Place::Local
    } else {
        Place::AtInfinity
    };
    match (from_r, dual) {
        (Some(r), _) => curve_report(&curves::char_from_r(r, place)?),
        (None, Some(r)) => {
            let c = curves::char_from_r(r, Place::AtInfinity)?;
            curve_report(&curves::infinity_dual(&c)?)
        }
        (None, None) => unreachable!("clap requires a sequence"),
    }
}

fn parse_line(line: &str) -> std::result::Result<Vec<u64>, String> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| format!("bad generator {t:?}: {e}"))
        })
        .collect()
}

fn emit(report: &Report, as_json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{}", report.json)
    } else {
        for l in &report.lines {
            writeln!(out, "{l}")?;
        }
        Ok(())
    }
}

/// Results for each input semigroup, or a message when the input itself
/// cannot be read.
fn compute(cli: &Cli) -> std::result::Result<Vec<Result<Report>>, String> {
    let mut limits = Limits::default();
    let mut cap = crate::invariants::DEFAULT_OMEGA_CAP;
    if let Some(l) = cli.limit {
        limits.max_results = l;
        cap = l;
    }
    let Some(positional) = command_generators(&cli.command) else {
        return Ok(vec![match cli.command {
            Command::Enumerate { .. } => enumerate(&cli.command, limits),
            _ => curve(&cli.command),
        }]);
    };
    let mut lists: Vec<Vec<u64>> = Vec::new();
    if let Some(path) = &cli.input {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for line in text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        {
            lists.push(parse_line(line)?);
        }
    } else {
        let mut g = cli.gens.clone();
        g.extend_from_slice(positional);
        lists.push(g);
    }
    Ok(lists
        .iter()
        .map(|g| semigroup_from(g).and_then(|s| run_on(&cli.command, &s, cap)))
        .collect())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let computed = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| compute(cli)),
            Err(e) => Err(e.to_string()),
        },
        None => compute(cli),
    };
    let reports = match computed {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let batch = reports.len() > 1;
    let mut code = 0;
    for (i, r) in reports.into_iter().enumerate() {
        match r {
            Ok(rep) => {
                if batch && !cli.json && i > 0 {
                    let _ = writeln!(out);
                }
                if emit(&rep, cli.json, out).is_err() {
                    return 1;
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                code = 1;
            }
        }
    }
    code
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    execute(&cli, out, err)
}
