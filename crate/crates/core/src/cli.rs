//! The `shortwords` command-line front end.
//!
//! Every command reads a generator file, runs one operation and prints a
//! [`Report`] either as text or as JSON. [`Report::decode_text`] reads the
//! text form back, so both encodings carry the same data.
//!
//! Exit codes: 0 success, 1 malformed input or usage, 2 violated
//! precondition, 3 resource limit (including an unfinished search).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ErrorClass};
use crate::perm::{coset_action, parse_generator_file, GeneratorSet, PermGroup, Permutation};
use crate::shortwords::{
    get_short_gens, lookup_word, reduce_gens_for_elt, reduce_gens_for_group, two_step_get_short_gens,
    two_step_lookup_word, LookupOptions, SearchStatus, ShortGensOptions,
};
use crate::structure::{
    center, centralizer, conjugacy_classes, is_maximal_el_ab_normal, maximal_elementary_abelian_normals,
    normalizer, sylow2, two_central_class_indices, ClassTableReport,
};
use crate::DEFAULT_ELEMENT_LIMIT;

#[derive(Parser, Debug)]
#[command(name = "shortwords", version, about = "Short words and small structure queries for permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized internals (all current algorithms are deterministic).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Log search progress to stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
    /// Largest group order that brute-force operations will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_LIMIT as u64)]
    pub element_limit: u64,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    /// Generator file of the group.
    pub group: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct ShortgensArgs {
    pub group: PathBuf,
    /// Generator file of the target subgroup.
    #[arg(long)]
    pub target: PathBuf,
    /// Generator file of a subgroup whose elements count as already found.
    #[arg(long)]
    pub exclude: Option<PathBuf>,
    /// Only keep powers of these element orders, e.g. `2,3,6`.
    #[arg(long, value_delimiter = ',')]
    pub order_restriction: Option<Vec<u64>>,
    /// Maximum number of word-tree levels.
    #[arg(long)]
    pub limit: Option<usize>,
    /// Skip the generator reductions before and after the search.
    #[arg(long)]
    pub no_reduce: bool,
    /// Generator file of an intermediate subgroup for the two-step strategy.
    #[arg(long)]
    pub two_step: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct LookupArgs {
    pub group: PathBuf,
    /// Element in cycle notation, e.g. `(1,2,3)(4,5)`.
    #[arg(long, allow_hyphen_values = true)]
    pub element: String,
    /// Accept a word whose value is conjugate to the element.
    #[arg(long)]
    pub conjugate: bool,
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long)]
    pub no_reduce: bool,
    #[arg(long)]
    pub two_step: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ReduceArgs {
    pub group: PathBuf,
    /// Reduce with respect to generating this subgroup.
    #[arg(long, conflicts_with = "element", required_unless_present = "element")]
    pub target: Option<PathBuf>,
    /// Reduce with respect to reaching this element.
    #[arg(long)]
    pub element: Option<String>,
    #[arg(long, conflicts_with = "element")]
    pub exclude: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SubgroupArgs {
    pub group: PathBuf,
    #[arg(long)]
    pub subgroup: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct ElementArgs {
    pub group: PathBuf,
    #[arg(long)]
    pub element: String,
}

#[derive(Args, Debug, Clone)]
pub struct MaxelabArgs {
    pub group: PathBuf,
    /// Check whether this subgroup is maximal instead of listing them all.
    #[arg(long)]
    pub subgroup: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Order of the group.
    Order(GroupArg),
    /// Short words generating a subgroup.
    Shortgens(ShortgensArgs),
    /// A short word for an element.
    Lookup(LookupArgs),
    /// Drop redundant generators.
    Reduce(ReduceArgs),
    /// Conjugacy classes with power maps.
    Classes(GroupArg),
    /// Action on the right cosets of a subgroup.
    Cosetaction(SubgroupArgs),
    /// A Sylow 2-subgroup.
    Sylow2(GroupArg),
    Center(GroupArg),
    Centralizer(ElementArgs),
    Normalizer(SubgroupArgs),
    /// Classes of 2-central involutions.
    Twocentral(GroupArg),
    /// Maximal elementary abelian normal subgroups of a 2-group.
    Maxelab(MaxelabArgs),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPerm {
    pub name: String,
    pub cycles: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: u128,
    pub degree: usize,
    pub generators: Vec<NamedPerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordEntry {
    pub word: String,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeptGenerator {
    pub index: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionClass {
    pub class: String,
    pub centralizer_order: u128,
    pub size: u128,
    pub representative: String,
}

/// The result of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "result", rename_all = "snake_case")]
pub enum Report {
    Order {
        order: u128,
    },
    ShortGens {
        status: SearchStatus,
        /// Words for the intermediate generators `t1, t2, ...` (two-step only).
        intermediate: Option<Vec<WordEntry>>,
        words: Vec<WordEntry>,
    },
    Lookup {
        word: String,
        element: String,
        /// Set when the word's value is only conjugate to the element.
        witness: Option<String>,
    },
    Reduce {
        kept: Vec<KeptGenerator>,
    },
    Classes(ClassTableReport),
    CosetAction {
        kernel_order: u128,
        image: GroupReport,
    },
    Group(GroupReport),
    TwoCentral {
        classes: Vec<InvolutionClass>,
    },
    MaxElab {
        subgroups: Vec<GroupReport>,
    },
    Maximal {
        maximal: bool,
    },
}

fn group_report(group: &PermGroup) -> GroupReport {
    let gens = group.generators();
    GroupReport {
        order: group.order(),
        degree: group.degree(),
        generators: gens
            .names()
            .iter()
            .zip(gens.gens())
            .map(|(name, g)| NamedPerm {
                name: name.clone(),
                cycles: g.to_string(),
            })
            .collect(),
    }
}

fn render_group(out: &mut String, g: &GroupReport) {
    let _ = writeln!(out, "# order {}", g.order);
    let _ = writeln!(out, "degree {}", g.degree);
    for p in &g.generators {
        let _ = writeln!(out, "{} = {}", p.name, p.cycles);
    }
}

fn render_columns(out: &mut String, rows: &[Vec<String>]) {
    let mut widths = vec![0; rows.first().map_or(0, |r| r.len())];
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    for row in rows {
        let mut line = String::new();
        for (i, c) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(c);
            } else {
                let _ = write!(line, "{:<width$}  ", c, width = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn decode_error(message: impl Into<String>) -> Error {
    Error::GeneratorFile {
        line: 1,
        column: 1,
        message: message.into(),
    }
}

/// Splits `# key value` lines from the body lines.
fn split_headers(text: &str) -> (Vec<(&str, &str)>, Vec<&str>) {
    let mut headers = Vec::new();
    let mut body = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            let (k, v) = rest.split_once(' ').unwrap_or((rest, ""));
            headers.push((k, v));
        } else if !line.trim().is_empty() {
            body.push(line);
        }
    }
    (headers, body)
}

fn header<'a>(headers: &[(&str, &'a str)], key: &str) -> Option<&'a str> {
    headers.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn parse_num<T: std::str::FromStr>(s: &str) -> crate::Result<T> {
    s.trim().parse().map_err(|_| decode_error(format!("bad number {s:?}")))
}

fn decode_group(text: &str) -> crate::Result<GroupReport> {
    let (headers, _) = split_headers(text);
    let order = parse_num(header(&headers, "order").ok_or_else(|| decode_error("missing order"))?)?;
    let gens = parse_generator_file(text)?;
    Ok(GroupReport {
        order,
        degree: gens.degree(),
        generators: gens
            .names()
            .iter()
            .zip(gens.gens())
            .map(|(name, g)| NamedPerm {
                name: name.clone(),
                cycles: g.to_string(),
            })
            .collect(),
    })
}

fn word_entry(line: &str) -> crate::Result<WordEntry> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(word), Some(element), None) => Ok(WordEntry {
            word: word.into(),
            element: element.into(),
        }),
        _ => Err(decode_error(format!("bad word line {line:?}"))),
    }
}

impl Report {
    /// The `kind` tag used in JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Report::Order { .. } => "order",
            Report::ShortGens { .. } => "short_gens",
            Report::Lookup { .. } => "lookup",
            Report::Reduce { .. } => "reduce",
            Report::Classes(_) => "classes",
            Report::CosetAction { .. } => "coset_action",
            Report::Group(_) => "group",
            Report::TwoCentral { .. } => "two_central",
            Report::MaxElab { .. } => "max_elab",
            Report::Maximal { .. } => "maximal",
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Order { order } => {
                let _ = writeln!(out, "{order}");
            }
            Report::ShortGens {
                status,
                intermediate,
                words,
            } => {
                let status = match status {
                    SearchStatus::Complete => "complete",
                    SearchStatus::Unfinished => "unfinished",
                };
                let _ = writeln!(out, "# status {status}");
                for e in intermediate.iter().flatten() {
                    let _ = writeln!(out, "# intermediate {}  {}", e.word, e.element);
                }
                let rows: Vec<Vec<String>> = words.iter().map(|e| vec![e.word.clone(), e.element.clone()]).collect();
                render_columns(&mut out, &rows);
            }
            Report::Lookup { word, element, witness } => {
                let _ = writeln!(out, "# element {element}");
                if let Some(w) = witness {
                    let _ = writeln!(out, "# witness {w}");
                }
                let _ = writeln!(out, "{word}");
            }
            Report::Reduce { kept } => {
                for k in kept {
                    let _ = writeln!(out, "{} {}", k.index, k.name);
                }
            }
            Report::Classes(table) => out.push_str(&table.render_text()),
            Report::CosetAction { kernel_order, image } => {
                let _ = writeln!(out, "# kernel {kernel_order}");
                render_group(&mut out, image);
            }
            Report::Group(g) => render_group(&mut out, g),
            Report::TwoCentral { classes } => {
                let mut rows = vec![vec![
                    "Class".to_string(),
                    "|Centralizer|".to_string(),
                    "Size".to_string(),
                    "Representative".to_string(),
                ]];
                rows.extend(classes.iter().map(|c| {
                    vec![
                        c.class.clone(),
                        c.centralizer_order.to_string(),
                        c.size.to_string(),
                        c.representative.clone(),
                    ]
                }));
                render_columns(&mut out, &rows);
            }
            Report::MaxElab { subgroups } => {
                for (i, g) in subgroups.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    let _ = writeln!(out, "# subgroup {}", i + 1);
                    render_group(&mut out, g);
                }
            }
            Report::Maximal { maximal } => {
                let _ = writeln!(out, "{maximal}");
            }
        }
        out
    }

    /// Reads back the text form of a report of the given `kind`.
    pub fn decode_text(kind: &str, text: &str) -> crate::Result<Report> {
        let (headers, body) = split_headers(text);
        let single = || match body.as_slice() {
            [line] => Ok(line.trim()),
            _ => Err(decode_error("expected a single line")),
        };
        Ok(match kind {
            "order" => Report::Order {
                order: parse_num(single()?)?,
            },
            "short_gens" => {
                let status = match header(&headers, "status") {
                    Some("complete") => SearchStatus::Complete,
                    Some("unfinished") => SearchStatus::Unfinished,
                    _ => return Err(decode_error("missing status")),
                };
                let inter: Vec<WordEntry> = headers
                    .iter()
                    .filter(|(k, _)| *k == "intermediate")
                    .map(|(_, v)| word_entry(v))
                    .collect::<crate::Result<_>>()?;
                Report::ShortGens {
                    status,
                    intermediate: (!inter.is_empty()).then_some(inter),
                    words: body.iter().map(|l| word_entry(l)).collect::<crate::Result<_>>()?,
                }
            }
            "lookup" => Report::Lookup {
                word: single()?.to_string(),
                element: header(&headers, "element")
                    .ok_or_else(|| decode_error("missing element"))?
                    .to_string(),
                witness: header(&headers, "witness").map(str::to_string),
            },
            "reduce" => Report::Reduce {
                kept: body
                    .iter()
                    .map(|l| {
                        let (i, name) = l.split_once(' ').ok_or_else(|| decode_error("bad reduce line"))?;
                        Ok(KeptGenerator {
                            index: parse_num(i)?,
                            name: name.to_string(),
                        })
                    })
                    .collect::<crate::Result<_>>()?,
            },
            "classes" => Report::Classes(ClassTableReport::parse_text(text)?),
            "coset_action" => Report::CosetAction {
                kernel_order: parse_num(header(&headers, "kernel").ok_or_else(|| decode_error("missing kernel"))?)?,
                image: decode_group(text)?,
            },
            "group" => Report::Group(decode_group(text)?),
            "two_central" => Report::TwoCentral {
                classes: body
                    .iter()
                    .skip(1)
                    .map(|l| {
                        let cells: Vec<&str> = l.split_whitespace().collect();
                        if cells.len() != 4 {
                            return Err(decode_error("bad class line"));
                        }
                        Ok(InvolutionClass {
                            class: cells[0].into(),
                            centralizer_order: parse_num(cells[1])?,
                            size: parse_num(cells[2])?,
                            representative: cells[3].into(),
                        })
                    })
                    .collect::<crate::Result<_>>()?,
            },
            "max_elab" => {
                let mut blocks: Vec<String> = Vec::new();
                for line in text.lines() {
                    if line.starts_with("# subgroup ") {
                        blocks.push(String::new());
                    } else if let Some(b) = blocks.last_mut() {
                        b.push_str(line);
                        b.push('\n');
                    }
                }
                Report::MaxElab {
                    subgroups: blocks.iter().map(|b| decode_group(b)).collect::<crate::Result<_>>()?,
                }
            }
            "maximal" => Report::Maximal {
                maximal: match single()? {
                    "true" => true,
                    "false" => false,
                    _ => return Err(decode_error("expected true or false")),
                },
            },
            other => return Err(decode_error(format!("unknown report kind {other:?}"))),
        })
    }
}

/// A failure of one invocation, with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: PathBuf, message: String },
    Input { path: Option<PathBuf>, error: Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Input { error, .. } => match error.class() {
                ErrorClass::Malformed => 1,
                ErrorClass::Precondition => 2,
                ErrorClass::Resource => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Input { path: Some(p), error } => write!(f, "{}: {error}", p.display()),
            CliError::Input { path: None, error } => write!(f, "{error}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Input { path: None, error }
    }
}

fn load(path: &Path) -> Result<GeneratorSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_generator_file(&text).map_err(|error| CliError::Input {
        path: Some(path.to_path_buf()),
        error,
    })
}

/// Loads a subgroup file over the same points as `gens`.
fn load_subgroup(path: &Path, gens: &GeneratorSet) -> Result<PermGroup, CliError> {
    let sub = load(path)?;
    if sub.degree() != gens.degree() {
        return Err(CliError::Input {
            path: Some(path.to_path_buf()),
            error: Error::DegreeMismatch(gens.degree(), sub.degree()),
        });
    }
    Ok(PermGroup::from_generators(sub))
}

/// Parses an element; parentheses are mandatory, `()` is the identity.
fn parse_element(text: &str, degree: usize) -> Result<Permutation, CliError> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('(') {
        return Err(Error::Syntax {
            column: text.len() - trimmed.len() + 1,
            message: "expected `(`".into(),
        }
        .into());
    }
    Ok(Permutation::parse(text, degree)?)
}

fn entries(words: &[String], elements: &[Permutation]) -> Vec<WordEntry> {
    words
        .iter()
        .zip(elements)
        .map(|(w, e)| WordEntry {
            word: w.clone(),
            element: e.to_string(),
        })
        .collect()
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let limit = cli.global.element_limit as u128;
    match &cli.command {
        Command::Order(a) => {
            let g = PermGroup::from_generators(load(&a.group)?);
            Ok(Report::Order { order: g.order() })
        }
        Command::Shortgens(a) => {
            let gens = load(&a.group)?;
            let target = load_subgroup(&a.target, &gens)?;
            let opts = ShortGensOptions {
                exclude: a.exclude.as_deref().map(|p| load_subgroup(p, &gens)).transpose()?,
                reduce_first: !a.no_reduce,
                reduce_more: !a.no_reduce,
                order_restriction: a.order_restriction.clone(),
                iteration_limit: a.limit,
                element_limit: limit,
                ..Default::default()
            };
            match &a.two_step {
                None => {
                    let res = get_short_gens(&gens, &target, &opts)?;
                    Ok(Report::ShortGens {
                        status: res.status,
                        intermediate: None,
                        words: entries(&res.rendered, &res.elements),
                    })
                }
                Some(t) => {
                    let t = load_subgroup(t, &gens)?;
                    let res = two_step_get_short_gens(&gens, &t, &target, &opts)?;
                    let inter = &res.intermediate;
                    Ok(Report::ShortGens {
                        status: res.status,
                        intermediate: Some(entries(&inter.rendered, &inter.elements)),
                        words: entries(&res.flattened_rendered, &res.nested.elements),
                    })
                }
            }
        }
        Command::Lookup(a) => {
            let gens = load(&a.group)?;
            let x = parse_element(&a.element, gens.degree())?;
            let opts = LookupOptions {
                conjugate_check: a.conjugate,
                reduce_first: !a.no_reduce,
                iteration_limit: a.limit,
                element_limit: limit,
                ..Default::default()
            };
            match &a.two_step {
                None => {
                    let res = lookup_word(&gens, &x, &opts)?;
                    Ok(Report::Lookup {
                        word: res.rendered,
                        element: res.element.to_string(),
                        witness: res.witness.map(|w| w.to_string()),
                    })
                }
                Some(t) => {
                    let t = load_subgroup(t, &gens)?;
                    let short = ShortGensOptions {
                        reduce_first: !a.no_reduce,
                        reduce_more: !a.no_reduce,
                        iteration_limit: a.limit,
                        element_limit: limit,
                        ..Default::default()
                    };
                    let res = two_step_lookup_word(&gens, &t, &x, &short, &opts)?;
                    Ok(Report::Lookup {
                        word: res.rendered,
                        element: res.element.to_string(),
                        witness: res.nested.and_then(|n| n.witness).map(|w| w.to_string()),
                    })
                }
            }
        }
        Command::Reduce(a) => {
            let gens = load(&a.group)?;
            let (kept, _) = match (&a.target, &a.element) {
                (Some(t), _) => {
                    let target = load_subgroup(t, &gens)?;
                    let exclude = a.exclude.as_deref().map(|p| load_subgroup(p, &gens)).transpose()?;
                    reduce_gens_for_group(&gens, &target, exclude.as_ref())?
                }
                (None, Some(e)) => reduce_gens_for_elt(&gens, &parse_element(e, gens.degree())?)?,
                (None, None) => return Err(CliError::Usage("reduce needs --target or --element".into())),
            };
            Ok(Report::Reduce {
                kept: kept
                    .into_iter()
                    .map(|i| KeptGenerator {
                        index: i,
                        name: gens.names()[i - 1].clone(),
                    })
                    .collect(),
            })
        }
        Command::Classes(a) => {
            let gens = load(&a.group)?;
            let g = PermGroup::from_generators(gens.clone());
            let table = conjugacy_classes(&g, limit)?;
            let opts = LookupOptions {
                element_limit: limit,
                ..Default::default()
            };
            let words = table
                .classes
                .iter()
                .map(|c| lookup_word(&gens, &c.representative, &opts).map(|r| r.rendered))
                .collect::<crate::Result<Vec<_>>>()?;
            Ok(Report::Classes(ClassTableReport::new(&table, Some(&words))))
        }
        Command::Cosetaction(a) => {
            let gens = load(&a.group)?;
            let sub = load_subgroup(&a.subgroup, &gens)?;
            let res = coset_action(&PermGroup::from_generators(gens), &sub, limit)?;
            Ok(Report::CosetAction {
                kernel_order: res.kernel_order,
                image: group_report(&res.image),
            })
        }
        Command::Sylow2(a) => {
            let g = PermGroup::from_generators(load(&a.group)?);
            Ok(Report::Group(group_report(&sylow2(&g, limit)?)))
        }
        Command::Center(a) => {
            let g = PermGroup::from_generators(load(&a.group)?);
            Ok(Report::Group(group_report(&center(&g, limit)?)))
        }
        Command::Centralizer(a) => {
            let gens = load(&a.group)?;
            let x = parse_element(&a.element, gens.degree())?;
            let g = PermGroup::from_generators(gens);
            Ok(Report::Group(group_report(&centralizer(&g, &x, limit)?)))
        }
        Command::Normalizer(a) => {
            let gens = load(&a.group)?;
            let sub = load_subgroup(&a.subgroup, &gens)?;
            let g = PermGroup::from_generators(gens);
            Ok(Report::Group(group_report(&normalizer(&g, &sub, limit)?)))
        }
        Command::Twocentral(a) => {
            let g = PermGroup::from_generators(load(&a.group)?);
            let table = conjugacy_classes(&g, limit)?;
            let names = table.class_names();
            Ok(Report::TwoCentral {
                classes: two_central_class_indices(&table)
                    .into_iter()
                    .map(|i| {
                        let c = &table.classes[i];
                        InvolutionClass {
                            class: names[i].clone(),
                            centralizer_order: c.centralizer_order,
                            size: c.size,
                            representative: c.representative.to_string(),
                        }
                    })
                    .collect(),
            })
        }
        Command::Maxelab(a) => {
            let gens = load(&a.group)?;
            let g = PermGroup::from_generators(gens.clone());
            match &a.subgroup {
                Some(v) => {
                    let v = load_subgroup(v, &gens)?;
                    Ok(Report::Maximal {
                        maximal: is_maximal_el_ab_normal(&g, &v, limit)?,
                    })
                }
                None => Ok(Report::MaxElab {
                    subgroups: maximal_elementary_abelian_normals(&g, limit)?
                        .iter()
                        .map(group_report)
                        .collect(),
                }),
            }
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 1;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    if cli.global.verbose {
        let _ = env_logger::Builder::new()
            .filter_level(log::LevelFilter::Info)
            .target(env_logger::Target::Stderr)
            .try_init();
    }
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.global.json {
                report.to_json()
            } else {
                report.to_text()
            };
            let _ = stdout.write_all(text.as_bytes());
            match report {
                Report::ShortGens {
                    status: SearchStatus::Unfinished,
                    ..
                } => {
                    let _ = writeln!(stderr, "error: couldn't generate the subgroup within the level limit");
                    3
                }
                _ => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
