//! The `embedrank` command line.
//!
//! Usage errors exit with status 2. Failed computations exit with status 1
//! and print `{"error": kind, "message": text}` on stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codes::{inner_product_bent, rm_code, sdp_code, LinearCode};
use crate::designs::IncidenceStructure;
use crate::embedding::{embeddability, embedding_search, sym_embedding_search, thm5_necessary};
use crate::error::{Error, Result};
use crate::geometry::{ag_design, pg_design};
use crate::iso::{analyze, canonical_cert};
use crate::reproduce::{reproduce, Target};

#[derive(Parser, Debug)]
#[command(
    name = "embedrank",
    version,
    about = "Designs, p-ranks and linear embeddings of residual designs"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a design and write it in .des format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file instead of stdout.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// p-rank of the incidence matrix.
    Rank {
        design: PathBuf,
        #[arg(short)]
        p: u32,
    },
    /// Weight distribution of the row or column code, as CSV.
    Wdist {
        design: PathBuf,
        #[command(flatten)]
        side: CodeSide,
        #[arg(short)]
        p: u32,
    },
    /// Residual design with respect to a block.
    Residual { design: PathBuf, block: usize },
    /// Derived design with respect to a block.
    Derived { design: PathBuf, block: usize },
    /// All resolutions into parallel classes.
    Resolutions {
        design: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Blocks whose derived design splits into q copies of a 2-design.
    Goodblocks { design: PathBuf },
    /// Rank test for the residual at a block.
    Embeddable {
        design: PathBuf,
        block: usize,
        #[arg(short)]
        p: u32,
    },
    /// Codeword-count condition for a good block.
    Thm5 { design: PathBuf, block: usize },
    /// Search for all completions of the residual at a good block.
    EmbedSearch {
        design: PathBuf,
        block: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Directory receiving report.json and one .des per design.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for symmetric designs having this design as residual.
    SymEmbed {
        design: PathBuf,
        #[arg(short)]
        p: u32,
    },
    /// Isomorphism test.
    Iso { first: PathBuf, second: PathBuf },
    /// Automorphism group order, optionally with orbits.
    Aut {
        design: PathBuf,
        #[arg(long, value_enum)]
        orbits: Option<OrbitDomain>,
    },
    /// Recompute a stored result and compare with the expected values.
    Reproduce {
        #[arg(value_enum)]
        target: ReproduceTarget,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Points and d-flats of AG(n, q).
    Ag { n: usize, q: u64, d: usize },
    /// Points and d-subspaces of PG(n, q).
    Pg { n: usize, q: u64, d: usize },
    /// Minimum-weight design of the code of x0x1 + ... + x_{2m-2}x_{2m-1} and RM(1, 2m).
    Sdp { m: usize },
    /// Minimum-weight design of RM(r, m).
    Rm { r: usize, m: usize },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CodeSide {
    #[arg(long)]
    rows: bool,
    #[arg(long)]
    cols: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrbitDomain {
    Points,
    Blocks,
    Resolutions,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReproduceTarget {
    Table1,
    Table2,
    Section5,
    Section6,
}

impl From<ReproduceTarget> for Target {
    fn from(t: ReproduceTarget) -> Self {
        match t {
            ReproduceTarget::Table1 => Target::Table1,
            ReproduceTarget::Table2 => Target::Table2,
            ReproduceTarget::Section5 => Target::Section5,
            ReproduceTarget::Section6 => Target::Section6,
        }
    }
}

fn read_design(path: &Path) -> Result<IncidenceStructure> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    IncidenceStructure::parse_any(&text)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Text and JSON forms of a command's output.
struct Output {
    text: String,
    json: Value,
    /// Exit status 1 without an error, for failed comparisons.
    failed: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

fn ordered_sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    orbits.iter().map(Vec::len).collect()
}

fn execute(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Gen { kind, out } => {
            let d = match kind {
                GenKind::Ag { n, q, d } => ag_design(n, q, d)?.0,
                GenKind::Pg { n, q, d } => pg_design(n, q, d)?,
                GenKind::Sdp { m } => {
                    if m == 0 || m > 5 {
                        return Err(Error::WrongParameters(format!("m = {m} is outside 1..=5")));
                    }
                    sdp_code(&inner_product_bent(m))?
                        .min_weight_design()?
                        .with_name(format!("SDP({m})"))
                }
                GenKind::Rm { r, m } => rm_code(r, m)?
                    .min_weight_design()?
                    .with_name(format!("RM({r},{m})")),
            };
            let des = d.to_des();
            match out {
                Some(path) => {
                    write_file(&path, &des)?;
                    Output::new("", json!({ "path": path, "v": d.v(), "b": d.b() }))
                }
                None => Output::new(des, json!({ "v": d.v(), "b": d.b(), "des": d.to_des() })),
            }
        }
        Command::Rank { design, p } => {
            let rank = read_design(&design)?.incidence_matrix(p)?.rank();
            Output::new(format!("{rank}\n"), json!({ "rank": rank, "p": p }))
        }
        Command::Wdist { design, side, p } => {
            let d = read_design(&design)?;
            let m = d.incidence_matrix(p)?;
            let code = if side.rows {
                LinearCode::from_rows(&m)
            } else {
                LinearCode::from_cols(&m)
            };
            let wd = code.weight_distribution()?;
            let counts: Vec<Value> = wd
                .nonzero()
                .map(|(w, c)| json!({ "weight": w, "count": c }))
                .collect();
            Output::new(
                wd.to_csv(),
                json!({ "length": code.length(), "dim": code.dim(), "distribution": counts }),
            )
        }
        Command::Residual { design, block } => {
            let r = read_design(&design)?.residual(block, false)?;
            Output::new(
                r.to_des(),
                json!({ "v": r.v(), "b": r.b(), "des": r.to_des() }),
            )
        }
        Command::Derived { design, block } => {
            let r = read_design(&design)?.derived(block, false)?;
            Output::new(
                r.to_des(),
                json!({ "v": r.v(), "b": r.b(), "des": r.to_des() }),
            )
        }
        Command::Resolutions { design, limit } => {
            let d = read_design(&design)?;
            let rs = d.resolutions(limit)?;
            let mut text = format!("{} resolutions\n", rs.len());
            for (i, r) in rs.iter().enumerate() {
                text.push_str(&format!("{i}: {:?}\n", r.classes()));
            }
            let classes: Vec<_> = rs.iter().map(|r| r.classes().to_vec()).collect();
            Output::new(text, json!({ "count": rs.len(), "resolutions": classes }))
        }
        Command::Goodblocks { design } => {
            let d = read_design(&design)?;
            let mut good = Vec::new();
            for j in 0..d.b() {
                if d.good_block(j)?.is_some() {
                    good.push(j);
                }
            }
            let text: String = good.iter().map(|j| format!("{j}\n")).collect();
            Output::new(text, json!({ "good_blocks": good }))
        }
        Command::Embeddable { design, block, p } => {
            let r = embeddability(&read_design(&design)?, block, p)?;
            Output::new(
                format!(
                    "rank_full {} rank_residual {} embeddable {}\n",
                    r.rank_full, r.rank_residual, r.embeddable
                ),
                serde_json::to_value(r).expect("plain struct"),
            )
        }
        Command::Thm5 { design, block } => {
            let c = thm5_necessary(&read_design(&design)?, block)?;
            Output::new(
                format!(
                    "required {} found {} passes {}\n",
                    c.required, c.found, c.passes
                ),
                serde_json::to_value(c).expect("plain struct"),
            )
        }
        Command::EmbedSearch {
            design,
            block,
            workers,
            out,
        } => {
            let d = read_design(&design)?;
            let res = match workers {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::Io(e.to_string()))?
                    .install(|| embedding_search(&d, block, None))?,
                None => embedding_search(&d, block, None)?,
            };
            let report = res.to_json();
            if let Some(dir) = out {
                fs::create_dir_all(&dir)
                    .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                write_file(&dir.join("report.json"), &format!("{:#}\n", report))?;
                for o in &res.outcomes {
                    for (k, (e, _)) in o.designs.iter().enumerate() {
                        write_file(
                            &dir.join(format!("candidate{}_{k}.des", o.index)),
                            &e.to_des(),
                        )?;
                    }
                }
                for (k, c) in res.iso_classes.iter().enumerate() {
                    write_file(
                        &dir.join(format!("class{k}.des")),
                        &c.representative.to_des(),
                    )?;
                }
            }
            let mut text = format!(
                "candidates {}\nviable codes {}\n",
                res.candidates_examined, res.viable_codes
            );
            for c in &res.iso_classes {
                text.push_str(&format!(
                    "class {} multiplicity {} aut order {}\n",
                    c.digest, c.multiplicity, c.aut_order
                ));
            }
            Output::new(text, report)
        }
        Command::SymEmbed { design, p } => {
            let res = sym_embedding_search(&read_design(&design)?, p)?;
            let mut text = format!(
                "weight {} codewords {} (need {})\ndesigns {}\n",
                res.k,
                res.weight_k_codewords,
                res.required,
                res.designs.len()
            );
            let digests: Vec<String> = res
                .designs
                .iter()
                .map(|d| canonical_cert(d).digest)
                .collect();
            for (d, h) in res.designs.iter().zip(&digests) {
                text.push_str(&format!("{h}\n{}", d.to_des()));
            }
            Output::new(
                text,
                json!({
                    "k": res.k, "codewords": res.weight_k_codewords, "required": res.required,
                    "ruled_out": res.ruled_out(), "designs": digests,
                }),
            )
        }
        Command::Iso { first, second } => {
            let (a, b) = (
                canonical_cert(&read_design(&first)?),
                canonical_cert(&read_design(&second)?),
            );
            let same = a == b;
            Output::new(
                format!("{}\n", if same { "isomorphic" } else { "not isomorphic" }),
                json!({ "isomorphic": same, "first": a.digest, "second": b.digest }),
            )
        }
        Command::Aut { design, orbits } => {
            let d = read_design(&design)?;
            let (cert, g) = analyze(&d);
            let mut text = format!("order {}\n", g.order());
            let mut j = json!({ "order": g.order().to_string(), "digest": cert.digest });
            if let Some(domain) = orbits {
                let orb = match domain {
                    OrbitDomain::Points => g.point_orbits(),
                    OrbitDomain::Blocks => g.block_orbits(),
                    OrbitDomain::Resolutions => g.resolution_orbits(&d.resolutions(None)?),
                };
                text.push_str(&format!("orbit sizes {:?}\n", ordered_sizes(&orb)));
                j["orbits"] = json!(orb);
            }
            Output::new(text, j)
        }
        Command::Reproduce { target } => {
            let report = reproduce(target.into())?;
            Output {
                text: report.to_text(),
                json: report.to_json(),
                failed: !report.ok(),
            }
        }
    })
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let json_mode = cli.json;
    match execute(cli.cmd) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = if json_mode {
                writeln!(stdout, "{}", out.json)
            } else {
                write!(stdout, "{}", out.text)
            };
            i32::from(out.failed)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            1
        }
    }
}
