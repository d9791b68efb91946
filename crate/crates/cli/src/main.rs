//! `nvtool`: batch computations in the groups nV.
//!
//! Exit status: 0 success, 1 semantic failure (unequal, verification failed),
//! 2 usage or parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thompson_nv::checks::run_all;
use thompson_nv::factor::factor_element;
use thompson_nv::group::{word_evaluate, GroupWord};
use thompson_nv::monoid::{normalize_word, MonoidWord};
use thompson_nv::parse::{parse_group_word, parse_monoid_word};
use thompson_nv::presentation::{
    abelianize, free_abelian_control, present_monoid_group, present_nV, present_omegaV, verify_families,
    verify_presentation, Presentation,
};
use thompson_nv::{Address, Element};

#[derive(Parser)]
#[command(name = "nvtool", version, about = "Elements, normal forms and presentations of the Thompson groups nV")]
struct Cli {
    /// Dimension; by default the largest dimension in the input, at least 1.
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest relation index checked by `verify --families`.
    #[arg(long, global = true, default_value_t = 6)]
    bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = GroupArg::NV)]
    group: GroupArg,
    /// Dimension bound for `--group omegaV`.
    #[arg(long, global = true)]
    dmax: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "monoid")]
    Monoid,
    #[value(name = "nV")]
    NV,
    #[value(name = "omegaV")]
    OmegaV,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a group word to an element.
    Eval { word: String },
    /// Exit 0 if two group words are equal in nV, 1 if not.
    Equal { left: String, right: String },
    /// Normalize a monoid word (`s<i>.<d>`, `sig<i>`).
    Normalize { word: String },
    /// Write an element, given as a word or as element JSON, as `L · M · R`.
    Factor { input: String },
    /// Image of an address (comma-separated bitstrings, one per dimension).
    Apply { input: String, address: String },
    /// Emit a finite presentation.
    Present {
        /// GAP input instead of text.
        #[arg(long)]
        gap: bool,
    },
    /// Check a presentation's relators, or with `--families` every relation
    /// family up to `--bound`.
    Verify {
        #[arg(long)]
        families: bool,
    },
    /// Elementary divisors of the abelianized presentation.
    Abelianize {
        /// Use the free abelian control group instead.
        #[arg(long)]
        control: bool,
    },
    /// Run every acceptance check.
    Selftest,
}

enum Failure {
    Usage(String),
    Semantic(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn dimension(cli: &Cli, inferred: usize) -> usize {
    cli.n.unwrap_or(inferred.max(1))
}

fn group_word(s: &str) -> Result<GroupWord, Failure> {
    parse_group_word(s).map_err(|e| usage(format!("bad word: {e}")))
}

fn eval_word(cli: &Cli, s: &str) -> Result<Element, Failure> {
    let w = group_word(s)?;
    word_evaluate(&w, dimension(cli, w.max_dimension())).map_err(usage)
}

/// A word, or element JSON when the input starts with `{`.
fn element_input(cli: &Cli, s: &str) -> Result<Element, Failure> {
    if s.trim_start().starts_with('{') {
        serde_json::from_str(s).map_err(|e| usage(format!("bad element JSON: {e}")))
    } else {
        eval_word(cli, s)
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn presentation(cli: &Cli) -> Result<Presentation, Failure> {
    let n = cli.n.unwrap_or(2);
    match cli.group {
        GroupArg::Monoid => present_monoid_group(n),
        GroupArg::NV => present_nV(n),
        GroupArg::OmegaV => present_omegaV(cli.dmax.unwrap_or(n)),
    }
    .map_err(usage)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval { word } => {
            let g = eval_word(cli, word)?.reduced();
            if cli.json {
                print_json(&g);
            } else {
                println!("{g}");
            }
        }
        Command::Equal { left, right } => {
            let (l, r) = (group_word(left)?, group_word(right)?);
            let n = dimension(cli, l.max_dimension().max(r.max_dimension()));
            let (a, b) = (word_evaluate(&l, n).map_err(usage)?, word_evaluate(&r, n).map_err(usage)?);
            let equal = a == b;
            if cli.json {
                print_json(&json!({ "equal": equal, "n": n }));
            } else {
                println!("{}", if equal { "equal" } else { "not equal" });
            }
            if !equal {
                return Err(Failure::Semantic(String::new()));
            }
        }
        Command::Normalize { word } => {
            let letters = parse_monoid_word(word).map_err(|e| usage(format!("bad word: {e}")))?;
            let inferred = letters.iter().filter_map(|l| match *l {
                thompson_nv::monoid::Cut { d, .. } => Some(d),
                _ => None,
            });
            let w = MonoidWord::new(dimension(cli, inferred.max().unwrap_or(1)), letters);
            let nw = normalize_word(&w).map_err(usage)?;
            if cli.json {
                let forest = nw.forest().map_err(usage)?;
                print_json(&json!({ "word": nw.to_string(), "length": nw.length(), "forest": forest }));
            } else {
                println!("{nw}");
            }
        }
        Command::Factor { input } => {
            let g = element_input(cli, input)?;
            let f = factor_element(&g);
            if cli.json {
                print_json(
                    &json!({ "l": f.l.to_string(), "m": f.m.to_string(), "r": f.r.to_string(), "word": f.word().to_string() }),
                );
            } else {
                println!("{}", f.word());
            }
        }
        Command::Apply { input, address } => {
            let g = element_input(cli, input)?;
            let coords: Vec<&str> = address.split(',').map(str::trim).collect();
            let a = Address::parse(&coords).ok_or_else(|| usage("address must be comma-separated bitstrings"))?;
            let image = g.apply(&a).map_err(usage)?;
            if cli.json {
                print_json(&image);
            } else {
                println!("{image}");
            }
        }
        Command::Present { gap } => {
            let p = presentation(cli)?;
            for w in &p.warnings {
                eprintln!("warning: {w}");
            }
            if cli.json {
                print_json(&p.to_json());
            } else if *gap {
                print!("{}", p.to_gap());
            } else {
                print!("{}", p.to_text());
            }
        }
        Command::Verify { families } => {
            if *families {
                let report = verify_families(cli.n.unwrap_or(2), cli.bound);
                if cli.json {
                    print_json(&report);
                } else {
                    for f in &report.families {
                        println!("({:>3}) {:>6} instances {:>4} failures", f.family, f.instances, f.failures);
                    }
                    for e in &report.examples {
                        println!("failed: {e}");
                    }
                }
                if !report.passed() {
                    return Err(Failure::Semantic("some relation instances fail".into()));
                }
            } else {
                let p = presentation(cli)?;
                let report = verify_presentation(&p);
                if cli.json {
                    print_json(&report);
                } else {
                    println!("{} relators checked, {} failed", report.checked, report.failures.len());
                    for f in &report.failures {
                        println!("relator {} ({}): {}", f.index, f.family, f.reason);
                    }
                }
                if !report.passed() {
                    return Err(Failure::Semantic(String::new()));
                }
            }
        }
        Command::Abelianize { control } => {
            let p = if *control { free_abelian_control() } else { presentation(cli)? };
            let report = abelianize(&p);
            if cli.json {
                print_json(&report);
            } else {
                let divisors: Vec<String> = report.divisors.iter().map(|d| d.to_string()).collect();
                println!("{}x{} relation matrix, divisors ({})", report.rows, report.cols, divisors.join(", "));
                println!("{}", if report.trivial { "trivial" } else { "nontrivial" });
            }
        }
        Command::Selftest => {
            let checks = run_all(cli.seed);
            if cli.json {
                print_json(&checks);
            } else {
                for c in &checks {
                    println!("{c}");
                }
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Semantic(String::new()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
