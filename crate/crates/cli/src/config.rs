//! Command-line arguments and the serializable run configuration.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use treegroups::suites::{Suite, SuiteOptions};
use treegroups::trees::{Alphabet, DEFAULT_TREE_CAP};

use crate::error::{CliError, CliResult};

/// Highest Magnus degree computed by default.
pub const DEFAULT_MAGNUS_CAP: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "treegroups", version, about = "Tree groups, quasi-Lie algebras and Milnor invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Directory for cached results.
    #[arg(long, global = true, env = "TREEGROUPS_CACHE_DIR", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Reuse cached verdicts for `verify` and `artin` as well.
    #[arg(long, global = true)]
    pub trust_cache: bool,

    /// Refuse to enumerate more trees than this.
    #[arg(long, global = true, default_value_t = DEFAULT_TREE_CAP)]
    pub tree_cap: usize,

    /// Highest Magnus degree to expand.
    #[arg(long, global = true, default_value_t = DEFAULT_MAGNUS_CAP)]
    pub magnus_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetArgs {
    /// Number of strand labels 1..m.
    #[arg(long, short = 'm', conflicts_with = "genus")]
    pub labels: Option<u32>,
    /// Symplectic labels x1, y1, ..., xg, yg.
    #[arg(long)]
    pub genus: Option<u32>,
}

impl AlphabetArgs {
    fn alphabet(&self) -> CliResult<Alphabet> {
        match (self.labels, self.genus) {
            (Some(0), _) | (_, Some(0)) => Err(CliError::Usage("the alphabet must be nonempty".into())),
            (Some(m), None) => Ok(Alphabet::Strands(m)),
            (None, Some(g)) => Ok(Alphabet::Symplectic(g)),
            _ => Err(CliError::Usage("pass --labels or --genus".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum GroupKind {
    /// Tree group T_n.
    #[value(name = "T")]
    T,
    /// Framed tree group as the quotient of T_n by the image of Delta.
    #[value(name = "Tquot")]
    Tquot,
    /// Framed tree group from inf-trees and boundary twists.
    #[value(name = "Tinf")]
    Tinf,
    /// Free Lie algebra L_n.
    #[value(name = "L")]
    L,
    /// Free quasi-Lie algebra L'_n.
    #[value(name = "Lq")]
    Lq,
    /// Kernel D_n of the bracket L_1 (x) L_{n+1} -> L_{n+2}.
    #[value(name = "D")]
    D,
    /// Kernel D'_n of the quasi-Lie bracket.
    #[value(name = "Dq")]
    Dq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Eta,
    Delta,
    Sq,
    Sl,
    Bracket,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Compute the structure of a graded group.
    Group {
        #[arg(long, value_enum)]
        kind: GroupKind,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Add 2 J^inf relators to the inf-tree presentation.
        #[arg(long)]
        include_2jinf: bool,
    },
    /// Apply a map to an element given as text.
    Map {
        #[arg(long, value_enum)]
        map: MapKind,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Tree sum (eta, delta), rooted sum (sq) or tensor sum (sl, bracket).
        element: String,
    },
    /// Run verification suites.
    Verify {
        /// Suites to run; all of them when omitted.
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        /// Restrict the strand counts the suites use.
        #[arg(long = "strands")]
        strands: Vec<u32>,
        #[arg(long)]
        include_2jinf: bool,
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SuiteOptions::default().magnus_pairs)]
        magnus_pairs: usize,
    },
    /// Artin data of a string link from a JSON file of longitudes.
    Artin {
        /// {"strands": m, "class": c, "longitudes": ["x2 x3 x2^-1 x3^-1", ...]}
        file: PathBuf,
    },
    /// Leading class of the commutator realized by a tree clasper.
    Clasper {
        /// Rooted tree whose leaf `i` grabs the `i`-th word; `inf` marks a twisted leaf.
        tree: String,
        /// Leaf words in order.
        #[arg(long = "word", required = true)]
        words: Vec<String>,
        /// Word substituted at the inf leaf.
        #[arg(long)]
        omega: Option<String>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Rerun the configuration stored in a JSON report and compare results.
    Replay { report: PathBuf },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: treegroups::Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinInput {
    pub strands: u32,
    pub class: usize,
    pub longitudes: Vec<String>,
}

/// Everything that determines a run's results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    Group {
        kind: GroupKind,
        order: usize,
        alphabet: Alphabet,
        include_2jinf: bool,
    },
    Map {
        map: MapKind,
        alphabet: Alphabet,
        element: String,
    },
    Verify {
        suites: Vec<Suite>,
        options: SuiteOptions,
    },
    Artin(ArtinInput),
    Clasper {
        tree: String,
        words: Vec<String>,
        omega: Option<String>,
        alphabet: Alphabet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub tree_cap: usize,
    pub magnus_cap: usize,
}

/// Where results go; never affects them.
#[derive(Debug, Clone, Default)]
pub struct IoOptions {
    pub json: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub trust_cache: bool,
}

pub enum Invocation {
    Run(RunConfig),
    Replay(PathBuf),
}

impl Cli {
    pub fn resolve(self) -> CliResult<(Invocation, IoOptions)> {
        let io = IoOptions {
            json: self.json,
            cache_dir: self.cache_dir,
            trust_cache: self.trust_cache,
        };
        let command = match self.command {
            CliCommand::Replay { report } => return Ok((Invocation::Replay(report), io)),
            CliCommand::Group {
                kind,
                order,
                alphabet,
                include_2jinf,
            } => Command::Group {
                kind,
                order,
                alphabet: alphabet.alphabet()?,
                include_2jinf,
            },
            CliCommand::Map { map, alphabet, element } => Command::Map {
                map,
                alphabet: alphabet.alphabet()?,
                element,
            },
            CliCommand::Verify {
                suites,
                strands,
                include_2jinf,
                seed,
                magnus_pairs,
            } => Command::Verify {
                suites: if suites.is_empty() { Suite::ALL.to_vec() } else { suites },
                options: SuiteOptions {
                    strands,
                    include_2jinf,
                    tree_cap: self.tree_cap,
                    seed,
                    magnus_pairs,
                },
            },
            CliCommand::Artin { file } => {
                let text = fs::read_to_string(&file).map_err(|source| CliError::Io {
                    path: file.clone(),
                    source,
                })?;
                let input = serde_json::from_str(&text).map_err(|source| CliError::Json { path: file, source })?;
                Command::Artin(input)
            }
            CliCommand::Clasper {
                tree,
                words,
                omega,
                alphabet,
            } => Command::Clasper {
                tree,
                words,
                omega,
                alphabet: alphabet.alphabet()?,
            },
        };
        let config = RunConfig {
            command,
            tree_cap: self.tree_cap,
            magnus_cap: self.magnus_cap,
        };
        config.validate()?;
        Ok((Invocation::Run(config), io))
    }
}

impl RunConfig {
    pub fn validate(&self) -> CliResult<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        match &self.command {
            Command::Group { kind, order, .. } => match kind {
                GroupKind::Tquot | GroupKind::Tinf if order % 2 == 0 => {
                    usage(format!("framed tree groups live in odd orders, got {order}"))
                }
                GroupKind::L | GroupKind::Lq if *order == 0 => usage("Lie degrees start at 1".into()),
                _ => Ok(()),
            },
            Command::Artin(input) => {
                if input.strands == 0 || input.longitudes.len() != input.strands as usize {
                    return usage(format!(
                        "{} longitudes for {} strands",
                        input.longitudes.len(),
                        input.strands
                    ));
                }
                if input.class < 2 {
                    return usage("the nilpotent class must be at least 2".into());
                }
                Ok(())
            }
            Command::Clasper { alphabet: Alphabet::Symplectic(_), .. } => {
                usage("clasper leaf words use strand letters".into())
            }
            Command::Verify { .. } | Command::Map { .. } | Command::Clasper { .. } => Ok(()),
        }
    }

    /// Whether cached results may stand in for a fresh run without `--trust-cache`.
    pub fn is_verdict(&self) -> bool {
        matches!(self.command, Command::Verify { .. } | Command::Artin(_))
    }
}
