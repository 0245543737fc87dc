//! `morphic`: analyze pure morphic words and their iterative algebras.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morphic_core::deciders::{analyze_properties, Truth};
use morphic_core::word::{factor_closure, parse_morphism};
use morphic_core::{gallery, Morphism};

use report::{AuditDoc, Config, Report, VerdictDoc};

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "morphic", version, about = "Analyze pure morphic words and their iterative monomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print a report.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Decide a single property: exit 0 Yes, 1 No, 3 Unknown.
    Decide {
        path: PathBuf,
        property: Property,
        #[command(flatten)]
        opts: Opts,
    },
    /// Graded audit: chains, rotations, Lie brackets, window and prefix checks.
    Audit {
        path: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// The built-in example gallery.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    /// List the gallery entries.
    List,
    /// Print a gallery entry.
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Prime,
    Periodic,
    Ur,
    Primitive,
    Pi,
    Noetherian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Opts {
    /// Letters of the fixed point that may be generated.
    #[arg(long, default_value_t = 65536, value_parser = clap::value_parser!(u64).range(1..))]
    prefix_letters: u64,
    /// Factor length bound L.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_len: u64,
    /// Largest n tested against p(n) ≤ n.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    mh_bound: u64,
    /// Largest power tried by the block-cover test.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    k_max: u64,
    /// Largest degree in the chain scan.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    d_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit 3 when any verdict is Unknown.
    #[arg(long)]
    strict: bool,
}

impl Opts {
    fn config(&self) -> Config {
        let us = |x: u64| usize::try_from(x).unwrap_or(usize::MAX);
        Config {
            prefix_letters: us(self.prefix_letters),
            max_len: us(self.max_len),
            mh_bound: us(self.mh_bound),
            k_max: us(self.k_max),
            d_max: self.d_max,
        }
    }
}

fn fail(path: &Path, e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}: {e}", path.display());
    ExitCode::from(EXIT_ERROR)
}

fn load(path: &Path) -> Result<Morphism, ExitCode> {
    let src = std::fs::read_to_string(path).map_err(|e| fail(path, e))?;
    parse_morphism(&src).map_err(|e| fail(path, e))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { path, opts } => analyze(&path, &opts),
        Command::Decide { path, property, opts } => decide(&path, property, &opts),
        Command::Audit { path, opts } => audit(&path, &opts),
        Command::Gallery { action: GalleryAction::List } => {
            for name in gallery::names() {
                println!("{name}");
            }
            ExitCode::from(EXIT_OK)
        }
        Command::Gallery { action: GalleryAction::Show { name } } => match gallery::source(&name) {
            Some(src) => {
                print!("{src}");
                ExitCode::from(EXIT_OK)
            }
            None => {
                eprintln!("error: no gallery entry `{name}`");
                ExitCode::from(EXIT_ERROR)
            }
        },
    }
}

fn analyze(path: &Path, opts: &Opts) -> ExitCode {
    let m = match load(path) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let analysis = match report::analyze(&m, &opts.config()) {
        Ok(a) => a,
        Err(e) => return fail(path, e),
    };
    match opts.format {
        Format::Json => print_json(&analysis.report),
        Format::Text => print_report(&analysis.report),
    }
    if opts.strict && analysis.any_unknown {
        ExitCode::from(EXIT_UNKNOWN)
    } else {
        ExitCode::from(EXIT_OK)
    }
}

fn decide(path: &Path, property: Property, opts: &Opts) -> ExitCode {
    let m = match load(path) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let cfg = opts.config();
    let budgets = cfg.budgets();
    let result = factor_closure(&m, budgets.max_len, budgets.memory_budget)
        .and_then(|f| analyze_properties(&m, &f, &budgets));
    let (outputs, props) = match result {
        Ok(r) => r,
        Err(e) => return fail(path, e),
    };
    let (name, verdict) = match property {
        Property::Prime => ("prime", &props.prime),
        Property::Periodic => ("periodic", &outputs.periodicity),
        Property::Ur => ("ur", &outputs.uniform_recurrence),
        Property::Primitive => ("primitive", &outputs.primitive),
        Property::Pi => ("pi", &props.pi),
        Property::Noetherian => ("noetherian", &props.noetherian),
    };
    let doc = VerdictDoc::new(&m, verdict);
    match opts.format {
        Format::Json => print_json(&doc),
        Format::Text => println!("{name}: {} — {}", doc.label(), doc.certificate.text),
    }
    ExitCode::from(match verdict.value {
        Truth::Yes => EXIT_OK,
        Truth::No => EXIT_NO,
        Truth::Unknown => EXIT_UNKNOWN,
    })
}

fn audit(path: &Path, opts: &Opts) -> ExitCode {
    let m = match load(path) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let doc = match report::audit(&m, &opts.config()) {
        Ok(d) => d,
        Err(e) => return fail(path, e),
    };
    match opts.format {
        Format::Json => print_json(&doc),
        Format::Text => print_audit(&doc),
    }
    ExitCode::from(if doc.pass { EXIT_OK } else { EXIT_NO })
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn print_report(r: &Report) {
    let m = &r.morphism;
    println!("morphism");
    println!("  letters: {}", m.letters.join(" "));
    println!("  start:   {}", m.start);
    for img in &m.images {
        match img.degree {
            Some(d) => println!("  {} -> {}   (degree {d})", img.letter, img.image),
            None => println!("  {} -> {}", img.letter, img.image),
        }
    }
    let s = &r.shape;
    println!("shape");
    match s.d_uniform {
        Some(d) => println!("  {d}-uniform"),
        None => println!("  not uniform"),
    }
    println!("  erasing: {}", s.erasing);
    println!("  mortal:  [{}]", s.mortal.join(" "));
    println!("  growing: [{}]", s.growing.join(" "));
    let x = &r.matrix;
    println!("matrix");
    for row in &x.incidence {
        println!("  {}", row.join(" "));
    }
    println!("  trace: {}", x.trace);
    println!("  column sums: {}", x.column_sums.join(" "));
    println!("  char poly: {}", x.char_poly);
    let w = &r.word;
    println!("word");
    println!("  prefix: {}", w.prefix);
    println!(
        "  start letter: {} (level {}, count {})",
        w.start_occurrence.value, w.start_occurrence.level, w.start_occurrence.count
    );
    for (name, v) in [
        ("primitive", &w.primitive),
        ("eventually periodic", &w.eventually_periodic),
        ("uniformly recurrent", &w.uniformly_recurrent),
    ] {
        println!("  {name}: {} — {}", v.label(), v.certificate.text);
    }
    let c = &r.complexity;
    println!("complexity");
    println!("  p(0..{}): {}{}", c.max_len, join(&c.profile), if c.exact { "" } else { " (lower bounds)" });
    println!("  class: {} ({}{})", c.class, c.basis, if c.conditional { ", conditional" } else { "" });
    if !c.hilbert.is_empty() {
        println!("  hilbert: {}", join(&c.hilbert));
    }
    let p = &r.properties;
    println!("properties");
    for (name, v) in [
        ("prime", &p.prime),
        ("semiprime", &p.semiprime),
        ("just infinite", &p.just_infinite),
        ("PI", &p.pi),
        ("noetherian", &p.noetherian),
        ("Jacobson radical trivial", &p.jacobson_trivial),
        ("primitive", &p.primitive_algebra),
    ] {
        println!("  {name}: {} — {}", v.label(), v.certificate.text);
    }
    match p.gk_dimension {
        Some(d) => println!("  GK dimension: {d}"),
        None => println!("  GK dimension: Unknown"),
    }
    if let Some(g) = &r.graded {
        println!("graded");
        println!("  S: {}, …", join(&g.s_prefix));
        for ch in &g.chains {
            let levels: Vec<String> = ch.by_level.iter().map(|(k, n)| format!("φ^{k}: {n}")).collect();
            println!("  d={}: max r {} [{}] {} — {}", ch.d, ch.max_r, levels.join(", "), ch.status, ch.witness.join(" | "));
        }
        let ra = &g.rotation_audit;
        println!("  rotation audit to {}: {}", ra.max_len, pass(ra.pass));
        if let Some(cx) = &ra.counterexample {
            println!("    counterexample: {cx}");
        }
        println!("  Lie decomposition to {}: {} ({} factors)", g.lie.max_len, pass(g.lie.pass), g.lie.checked);
        println!("  graded dimensions: {}", join(&g.graded_dims));
    }
    if let Some(d) = &r.diagnostics {
        println!("diagnostics");
        println!("  W (direct):     {}", d.weights_direct.join(", "));
        println!("  W (transposed): {}", d.weights_transposed.join(", "));
        if d.convention_mismatch {
            println!("  convention mismatch: uᵀMⁿθ(b) and uᵀ(Mᵀ)ⁿθ(b) differ");
        }
        let opt = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        println!(
            "  gcd(W4, W5): direct {}, transposed {}",
            opt(&d.gcd_w4_w5.direct),
            opt(&d.gcd_w4_w5.transposed)
        );
        println!(
            "  order-{} recurrence through n = {}: direct {}, transposed {}",
            d.recurrence.order,
            d.recurrence.checked_through,
            pass(d.recurrence.holds_direct),
            pass(d.recurrence.holds_transposed)
        );
        println!("  coefficients mod 2: {}", join(&d.mod2.coefficients));
    }
}

fn print_audit(a: &AuditDoc) {
    println!("S: {}, …", join(&a.s_prefix));
    for ch in &a.chains {
        let levels: Vec<String> = ch.by_level.iter().map(|(k, n)| format!("φ^{k}: {n}")).collect();
        println!("chain d={}: max r {} [{}] {}", ch.d, ch.max_r, levels.join(", "), ch.status);
    }
    let ra = &a.rotation_audit;
    println!("rotation audit to {}: {}", ra.max_len, pass(ra.pass));
    if let Some(cx) = &ra.counterexample {
        println!("  counterexample: {cx}");
    }
    println!("Lie decomposition to {}: {} ({} factors)", a.lie.max_len, pass(a.lie.pass), a.lie.checked);
    if let Some(f) = &a.lie.failure {
        println!("  no split: {f}");
    }
    match &a.window {
        Some(w) => {
            println!(
                "every {}-letter window of a {}-letter prefix contains {}: {}",
                w.window,
                w.prefix_len,
                w.letter,
                pass(w.pass)
            );
            if let Some(i) = w.failure_at {
                println!("  window at {i} misses {}", w.letter);
            }
        }
        None => println!("window check: skipped (no block cover)"),
    }
    if let Some(l) = &a.leading_letter {
        println!("φ^{}(a) begins with {} for every letter: {}", l.k, l.letter, pass(l.failures.is_empty()));
        if !l.failures.is_empty() {
            println!("  fails for: {}", l.failures.join(" "));
        }
    }
    for (n, holds) in &a.prefix_identity {
        println!("φ^{}({s})·φ^{n}({s}) is a prefix of w: {}", n + 1, pass(*holds), s = a.start);
    }
    println!("audit: {}", pass(a.pass));
}
