//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the process exit code: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::insertion::{classify_partition, classify_shape, sch_insert, Permutation};
use crate::interval_orders::{intervals_of_tableau, preimage_tableau, IntervalSet};
use crate::lattice::{checked_join, checked_meet, count_chains, covers};
use crate::partitions::{enumerate_partitions, enumerate_schroeder_partitions, gf_coefficients, IntegerPartition, SchroderShape};
use crate::posets::{build_weak_pattern_poset, enumerate_posets, sav_count, FinitePoset, Mode};
use crate::tableaux::{count_tableaux, enumerate_tableaux, render, SchroderTableau};
use crate::verify::{run_suite, Suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "schroeder", version, about = "Schröder partitions, tableaux, insertion, poset patterns and interval orders")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "ascii")]
    format: Format,
    /// Worker threads for verification sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized trials
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate or count partitions of an order
    Partitions {
        #[arg(long)]
        order: u32,
        /// Only Schröder partitions (odd parts distinct)
        #[arg(long)]
        schroeder: bool,
        #[arg(long)]
        count: bool,
        /// Print the product-formula coefficients for orders 0..=order
        #[arg(long, conflicts_with_all = ["schroeder", "count"])]
        gf: bool,
    },
    /// Standard fillings of a Schröder shape
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Schröder insertion of a permutation
    Insert {
        #[arg(long)]
        perm: String,
    },
    /// Shape class predicted by the pattern characterizations
    Classify {
        #[arg(long)]
        perm: String,
    },
    /// The lattice of Schröder shapes
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Finite posets and strong avoidance
    #[command(subcommand)]
    Posets(PosetCommand),
    /// Interval orders and Schröder tableaux
    #[command(subcommand)]
    Intervals(IntervalCommand),
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        /// Size knob of the suite
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Upper and lower covers
    Covers {
        #[arg(long)]
        shape: String,
    },
    /// Number of saturated chains from the empty shape
    Chains {
        #[arg(long)]
        shape: String,
    },
    Join {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Meet {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Args, Debug)]
struct ModeFlags {
    #[arg(long, conflicts_with = "unlabeled")]
    labeled: bool,
    #[arg(long)]
    unlabeled: bool,
}

impl ModeFlags {
    fn mode(&self) -> Mode {
        if self.labeled {
            Mode::Labeled
        } else {
            Mode::Unlabeled
        }
    }
}

#[derive(Subcommand, Debug)]
enum PosetCommand {
    /// All posets of a size (unlabeled unless --labeled)
    Enumerate {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        mode: ModeFlags,
        #[arg(long)]
        count: bool,
    },
    /// Number of posets of a size strongly avoiding a pattern
    Sav {
        #[arg(long)]
        size: usize,
        /// Poset JSON file
        #[arg(long)]
        pattern: PathBuf,
        #[command(flatten)]
        mode: ModeFlags,
    },
    /// Unlabeled posets of a size under weak containment
    Xn {
        #[arg(long)]
        size: usize,
        /// Emit a Graphviz description of the Hasse diagram
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand, Debug)]
enum IntervalCommand {
    /// Intervals of a tableau given as JSON
    FromTableau { file: PathBuf },
    /// A no-lonely-cell tableau realizing an interval set, or "none"
    Preimage { file: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("i/o: {e}"))
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn shape_arg(text: &str) -> Result<SchroderShape> {
    text.parse()
}

fn partition_arg(text: &str) -> Result<IntegerPartition> {
    text.parse()
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Partitions { order, schroeder, count, gf } => {
            if *gf {
                for (k, c) in gf_coefficients(*order as usize).iter().enumerate() {
                    if json {
                        writeln!(out, "{{\"order\":{k},\"count\":{c}}}").map_err(io)?;
                    } else {
                        writeln!(out, "{k} {c}").map_err(io)?;
                    }
                }
                return Ok(EXIT_OK);
            }
            let list = if *schroeder { enumerate_schroeder_partitions(*order) } else { enumerate_partitions(*order) };
            if *count {
                if json {
                    writeln!(out, "{}", json!({ "order": order, "count": list.len() })).map_err(io)?;
                } else {
                    writeln!(out, "{}", list.len()).map_err(io)?;
                }
            } else {
                for p in &list {
                    if json {
                        writeln!(out, "{}", json!({ "parts": p.parts() })).map_err(io)?;
                    } else {
                        writeln!(out, "{p}").map_err(io)?;
                    }
                }
            }
        }
        Command::Tableaux { shape, count, list } => {
            let shape = shape_arg(shape)?;
            if *count || !*list {
                let n = count_tableaux(&shape)?;
                if json {
                    writeln!(out, "{}", json!({ "shape": shape.parts(), "count": n })).map_err(io)?;
                } else {
                    writeln!(out, "{n}").map_err(io)?;
                }
            } else {
                for (i, t) in enumerate_tableaux(&shape)?.iter().enumerate() {
                    if json {
                        writeln!(out, "{}", t.to_json()).map_err(io)?;
                    } else {
                        if i > 0 {
                            writeln!(out).map_err(io)?;
                        }
                        write!(out, "{}", render(t)).map_err(io)?;
                    }
                }
            }
        }
        Command::Insert { perm } => {
            let p: Permutation = perm.parse()?;
            let (tp, tq) = sch_insert(&p)?;
            if json {
                writeln!(out, "{}", json!({ "permutation": p.to_string(), "P": tp, "Q": tq })).map_err(io)?;
            } else {
                write!(out, "P\n{}Q\n{}", render(&tp), render(&tq)).map_err(io)?;
            }
        }
        Command::Classify { perm } => {
            let p: Permutation = perm.parse()?;
            let predicted = classify_shape(&p);
            let (tp, _) = sch_insert(&p)?;
            let observed = classify_partition(tp.shape().partition());
            if json {
                let v = json!({
                    "permutation": p.to_string(),
                    "class": predicted,
                    "insertion_shape": tp.shape().parts(),
                    "insertion_class": observed,
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{predicted}").map_err(io)?;
                writeln!(out, "insertion shape ({}) is {observed}", tp.shape()).map_err(io)?;
            }
        }
        Command::Lattice(cmd) => lattice(cmd, json, out)?,
        Command::Posets(cmd) => posets(cmd, json, out)?,
        Command::Intervals(cmd) => intervals(cmd, json, out)?,
        Command::Verify { suite, max } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, *max, cli.seed, cli.jobs)?;
            let _ = writeln!(err, "wall time {} ms", report.wall_time_ms);
            if json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes")).map_err(io)?;
            } else {
                write!(out, "{}", report.render_ascii()).map_err(io)?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn lattice(cmd: &LatticeCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    match cmd {
        LatticeCommand::Covers { shape } => {
            let s = shape_arg(shape)?;
            let c = covers(&s);
            if json {
                let up: Vec<&[u32]> = c.up_covers.iter().map(|x| x.parts()).collect();
                let down: Vec<&[u32]> = c.down_covers.iter().map(|x| x.parts()).collect();
                writeln!(out, "{}", json!({ "shape": s.parts(), "up": up, "down": down })).map_err(io)?;
            } else {
                for u in &c.up_covers {
                    writeln!(out, "up {u}").map_err(io)?;
                }
                for d in &c.down_covers {
                    writeln!(out, "down {d}").map_err(io)?;
                }
            }
        }
        LatticeCommand::Chains { shape } => {
            let s = shape_arg(shape)?;
            let n = count_chains(&s);
            if json {
                writeln!(out, "{{\"shape\":{},\"chains\":{n}}}", json!(s.parts())).map_err(io)?;
            } else {
                writeln!(out, "{n}").map_err(io)?;
            }
        }
        LatticeCommand::Join { a, b } | LatticeCommand::Meet { a, b } => {
            let (a, b) = (partition_arg(a)?, partition_arg(b)?);
            let r = if matches!(cmd, LatticeCommand::Join { .. }) { checked_join(&a, &b)? } else { checked_meet(&a, &b)? };
            if json {
                writeln!(out, "{}", json!({ "parts": r.parts() })).map_err(io)?;
            } else {
                writeln!(out, "{r}").map_err(io)?;
            }
        }
    }
    Ok(())
}

fn poset_ascii(p: &FinitePoset) -> String {
    let rel: Vec<String> = p.cover_relations().iter().map(|(a, b)| format!("{}<{}", a + 1, b + 1)).collect();
    format!("{} [{}]", p.size(), rel.join(" "))
}

fn posets(cmd: &PosetCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    match cmd {
        PosetCommand::Enumerate { size, mode, count } => {
            let list = enumerate_posets(*size, mode.mode())?;
            if *count {
                if json {
                    writeln!(out, "{}", json!({ "size": size, "mode": mode.mode(), "count": list.len() })).map_err(io)?;
                } else {
                    writeln!(out, "{}", list.len()).map_err(io)?;
                }
            } else {
                for p in &list {
                    let line = if json { p.to_json() } else { poset_ascii(p) };
                    writeln!(out, "{line}").map_err(io)?;
                }
            }
        }
        PosetCommand::Sav { size, pattern, mode } => {
            let p = FinitePoset::from_json(&read_file(pattern)?)?;
            let n = sav_count(*size, &p, mode.mode())?;
            if json {
                writeln!(out, "{}", json!({ "size": size, "mode": mode.mode(), "count": n })).map_err(io)?;
            } else {
                writeln!(out, "{n}").map_err(io)?;
            }
        }
        PosetCommand::Xn { size, dot } => {
            let x = build_weak_pattern_poset(*size)?;
            if *dot {
                write!(out, "{}", x.to_dot()).map_err(io)?;
            } else if json {
                let elements: Vec<serde_json::Value> = x
                    .elements
                    .iter()
                    .map(|e| serde_json::from_str(&e.to_json()).expect("poset json"))
                    .collect();
                writeln!(out, "{}", json!({ "n": x.n, "elements": elements, "hasse_edges": x.hasse_edges })).map_err(io)?;
            } else {
                for (i, e) in x.elements.iter().enumerate() {
                    writeln!(out, "{i}: {}", poset_ascii(e)).map_err(io)?;
                }
                for (i, j) in &x.hasse_edges {
                    writeln!(out, "{i} -> {j}").map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

fn intervals(cmd: &IntervalCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    match cmd {
        IntervalCommand::FromTableau { file } => {
            let t = SchroderTableau::from_json(&read_file(file)?)?;
            let s = intervals_of_tableau(&t);
            let line = if json { s.to_json() } else { s.to_string() };
            writeln!(out, "{line}").map_err(io)?;
        }
        IntervalCommand::Preimage { file } => {
            let s = IntervalSet::from_json(&read_file(file)?)?;
            match preimage_tableau(&s)? {
                None => {
                    let line = if json { "{\"witness\":null}" } else { "none" };
                    writeln!(out, "{line}").map_err(io)?;
                }
                Some((w, t)) => {
                    if json {
                        writeln!(out, "{}", json!({ "witness": w, "tableau": t })).map_err(io)?;
                    } else {
                        let rows: Vec<String> = w.downset.row_lengths().iter().map(|r| r.to_string()).collect();
                        writeln!(out, "down-set rows {}", rows.join(",")).map_err(io)?;
                        write!(out, "{}", render(&t)).map_err(io)?;
                    }
                }
            }
        }
    }
    Ok(())
}
