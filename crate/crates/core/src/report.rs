//! Commands over a parsed document, rendered as text or JSON.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when an engine disagrees
//! with the oracle.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::center::{central_monomials_upto, CenterBasis, CenterError, Hypotheses};
use crate::dsl::{parse_spec, print_spec, SpecDocument};
use crate::fingen::{center_finitely_generated, FinGenStatus, InfiniteWitness, MissingDirection, SCondition};
use crate::graph::{generator_graph, is_admissible, relation_graph, Admissibility};
use crate::ideal::{AlgebraPresentation, Flavor, IdealSpec, KoszulBasis};
use crate::koszul::{hochschild_fg, koszul_dual, HochschildStatus, UndecidedReason};
use crate::notice::Notice;
use crate::oracle::check::{cross_check, CheckReport, Outcome};
use crate::oracle::{guard_degree, oracle_center_upto, oracle_fg_evidence, FgEvidence, DEFAULT_MAX_DEGREE};
use crate::quiver::{ArrowId, Quiver};

pub const TOOL_NAME: &str = "pacq";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Validate,
    Admissible,
    Orthogonal,
    Center,
    Fingen,
    Dual,
    Hochschild,
    OracleCheck,
    Dot,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Validate,
        Command::Admissible,
        Command::Orthogonal,
        Command::Center,
        Command::Fingen,
        Command::Dual,
        Command::Hochschild,
        Command::OracleCheck,
        Command::Dot,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Admissible => "admissible",
            Command::Orthogonal => "orthogonal",
            Command::Center => "center",
            Command::Fingen => "fingen",
            Command::Dual => "dual",
            Command::Hochschild => "hochschild",
            Command::OracleCheck => "oracle-check",
            Command::Dot => "dot",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown command `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphChoice {
    /// Generator graph of the ideal.
    #[default]
    Gen,
    /// Generator graph of the orthogonal ideal.
    GenPerp,
    /// Relation graph of the ideal.
    Rel,
}

impl GraphChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphChoice::Gen => "gen",
            GraphChoice::GenPerp => "gen-perp",
            GraphChoice::Rel => "rel",
        }
    }
}

impl FromStr for GraphChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gen" => Ok(GraphChoice::Gen),
            "gen-perp" => Ok(GraphChoice::GenPerp),
            "rel" => Ok(GraphChoice::Rel),
            _ => Err(format!("unknown graph `{s}` (expected gen, gen-perp or rel)")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub json: bool,
    /// Overrides the document's `max_degree`.
    pub max_degree: Option<usize>,
    /// Used when neither the flag nor the document sets a bound.
    pub default_max_degree: Option<usize>,
    pub graph: GraphChoice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArrowReport {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowReport>,
    pub flavor: Flavor,
    pub field_char: u64,
    pub generators: Vec<String>,
    pub koszul: KoszulBasis,
}

impl InputSummary {
    fn of(pres: &AlgebraPresentation) -> Self {
        let q = pres.quiver();
        InputSummary {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowReport {
                    name: a.name.clone(),
                    source: q.vertex_name(a.source).to_string(),
                    target: q.vertex_name(a.target).to_string(),
                })
                .collect(),
            flavor: pres.spec().flavor(),
            field_char: pres.spec().field_char(),
            generators: pres.spec().generator_strings(),
            koszul: pres.koszul(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub square_free: bool,
    pub orthogonal_admissible: bool,
    pub koszul: KoszulBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Answered by the clique description, checked against the oracle.
    Theorem,
    /// Outside the hypotheses: only the oracle answers, up to the bound.
    OracleOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermReport {
    pub coefficient: String,
    pub word: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementReport {
    pub basepoint: Option<String>,
    pub terms: Vec<TermReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub dimension: usize,
    pub elements: Vec<ElementReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CenterReport {
    pub max_degree: usize,
    pub unit_dimension: usize,
    pub degrees: Vec<DegreeReport>,
}

impl CenterReport {
    fn of(q: &Quiver, basis: &CenterBasis) -> Self {
        CenterReport {
            max_degree: basis.max_degree,
            unit_dimension: basis.unit_dimension,
            degrees: (1..=basis.max_degree)
                .map(|d| DegreeReport {
                    degree: d,
                    dimension: basis.dimension(d),
                    elements: basis
                        .at(d)
                        .iter()
                        .map(|e| ElementReport {
                            basepoint: e.basepoint.map(|x| q.vertex_name(x).to_string()),
                            terms: e
                                .terms
                                .iter()
                                .map(|(c, w)| TermReport {
                                    coefficient: c.clone(),
                                    word: q.render_word(w),
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    fn render_degree(&self, d: &DegreeReport) -> String {
        let elems: Vec<String> = d
            .elements
            .iter()
            .map(|e| {
                let mut s = String::new();
                for (i, t) in e.terms.iter().enumerate() {
                    let (neg, c) = match t.coefficient.strip_prefix('-') {
                        Some(c) => (true, c),
                        None => (false, t.coefficient.as_str()),
                    };
                    if i > 0 {
                        s.push_str(if neg { " - " } else { " + " });
                    } else if neg {
                        s.push('-');
                    }
                    if c != "1" {
                        write!(s, "{c}·").unwrap();
                    }
                    s.push_str(&t.word);
                }
                s
            })
            .collect();
        format!("degree {}: {{{}}}", d.degree, elems.join(", "))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub clique: Vec<String>,
    pub failing_member: String,
    pub blocking_outsider: String,
    pub missing: MissingDirection,
}

impl WitnessReport {
    fn of(q: &Quiver, w: &InfiniteWitness) -> Self {
        WitnessReport {
            clique: names(q, &w.clique),
            failing_member: q.arrow_name(w.failing_member).to_string(),
            blocking_outsider: q.arrow_name(w.blocking_outsider).to_string(),
            missing: w.missing,
        }
    }

    fn render(&self) -> String {
        let edge = match self.missing {
            MissingDirection::FromClique => format!("no edge {} -> {}", self.failing_member, self.blocking_outsider),
            MissingDirection::IntoClique => format!("no edge {} -> {}", self.blocking_outsider, self.failing_member),
        };
        format!(
            "clique {{{}}}, member {} blocked by {} ({edge})",
            self.clique.join(", "),
            self.failing_member,
            self.blocking_outsider
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SReport {
    pub vertex: String,
    pub condition: &'static str,
    pub loops: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CommandResult {
    Validate {
        vertices: usize,
        arrows: usize,
        monomial_ideal: bool,
        generators: Vec<String>,
    },
    Admissible {
        admissible: bool,
        nilpotency_bound: Option<usize>,
        cycle: Option<Vec<String>>,
    },
    Orthogonal {
        flavor: Flavor,
        generators: Vec<String>,
    },
    Center {
        mode: Mode,
        theorem: Option<CenterReport>,
        oracle: CenterReport,
        agree: Option<bool>,
    },
    Fingen {
        mode: Mode,
        status: Option<FinGenStatus>,
        generators: Vec<String>,
        witness: Option<WitnessReport>,
        s_sets: Vec<SReport>,
        oracle: FgEvidence,
    },
    Dual {
        admissible: bool,
        cycle: Option<Vec<String>>,
        dual: Option<InputSummary>,
    },
    Hochschild {
        #[serde(flatten)]
        status: HochschildStatus,
        trivial: bool,
        dual: Option<InputSummary>,
        dual_center_generators: Vec<String>,
        witness: Option<WitnessReport>,
        /// Hypotheses of the center description, checked on the dual.
        dual_hypotheses: Option<Hypotheses>,
    },
    OracleCheck(CheckReport),
    Dot {
        graph: GraphChoice,
        dot: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: Tool,
    pub command: Command,
    pub input: InputSummary,
    pub hypotheses: HypothesisReport,
    pub max_degree: usize,
    pub result: CommandResult,
    pub notices: Vec<Notice>,
}

fn names(q: &Quiver, xs: &[ArrowId]) -> Vec<String> {
    xs.iter().map(|&a| q.arrow_name(a).to_string()).collect()
}

fn admissibility(spec: &IdealSpec) -> (bool, Option<usize>, Option<Vec<String>>) {
    match is_admissible(spec) {
        Admissibility::Admissible { nilpotency_bound } => (true, Some(nilpotency_bound), None),
        Admissibility::NotAdmissible { cycle } => (false, None, Some(names(spec.quiver(), &cycle))),
    }
}

fn oracle_only_banner(h: &Hypotheses) -> Notice {
    Notice::new(
        "oracle-only",
        format!(
            "outside the hypotheses ({}); answered by exact computation up to the degree bound only",
            h.describe_failures().join("; ")
        ),
    )
}

/// Oriented cycles through more than one vertex: sums of their rotations
/// can be central without being products of loops.
fn long_cycle_notice(q: &Quiver) -> Option<Notice> {
    let n = q.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for a in q.arrows().iter().filter(|a| !a.is_loop()) {
        reach[a.source.0][a.target.0] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    (0..n).any(|v| reach[v][v]).then(|| {
        Notice::new(
            "long-cycles",
            "the quiver has oriented cycles through several vertices; central sums of their rotations are outside the clique description and only the oracle sees them",
        )
    })
}

struct Ctx<'a> {
    doc: &'a SpecDocument,
    pres: AlgebraPresentation,
    max_degree: usize,
    notices: Vec<Notice>,
}

impl Ctx<'_> {
    fn spec(&self) -> &IdealSpec {
        self.pres.spec()
    }

    fn q(&self) -> &Quiver {
        self.pres.quiver()
    }

    /// The degree bound after the path budget, keeping `headroom` extra
    /// degrees for the oracle.
    fn guarded(&mut self, headroom: usize) -> usize {
        let (d, notice) = guard_degree(self.q(), self.max_degree, headroom);
        self.notices.extend(notice);
        d
    }
}

/// Result, text lines, and whether an engine disagreed with the oracle.
fn execute(cmd: Command, ctx: &mut Ctx, graph: GraphChoice) -> (CommandResult, Vec<String>, bool) {
    let spec = ctx.spec().clone();
    let q = spec.quiver();
    let mut text = Vec::new();
    let mut disagreement = false;
    let result = match cmd {
        Command::Validate => {
            let generators = spec.generator_strings();
            text.push(format!(
                "valid: {} vertices, {} arrows, {} ideal with {} generators",
                q.vertex_count(),
                q.arrow_count(),
                spec.flavor(),
                generators.len()
            ));
            text.push(print_spec(ctx.doc).trim_end().to_string());
            CommandResult::Validate {
                vertices: q.vertex_count(),
                arrows: q.arrow_count(),
                monomial_ideal: spec.is_monomial_ideal(),
                generators,
            }
        }
        Command::Admissible => {
            let (admissible, nilpotency_bound, cycle) = admissibility(&spec);
            match (&cycle, nilpotency_bound) {
                (Some(c), _) => text.push(format!("NOT ADMISSIBLE, cycle: {}", c.join(" -> "))),
                (None, Some(n)) => text.push(format!("ADMISSIBLE, every path of length {n} vanishes")),
                _ => unreachable!(),
            }
            CommandResult::Admissible {
                admissible,
                nilpotency_bound,
                cycle,
            }
        }
        Command::Orthogonal => {
            let perp = spec.orthogonal();
            ctx.notices.extend(spec.square_convention_notice());
            let generators = perp.generator_strings();
            text.push(format!("{} ideal, {} generators", perp.flavor(), generators.len()));
            text.extend(generators.iter().cloned());
            CommandResult::Orthogonal {
                flavor: perp.flavor(),
                generators,
            }
        }
        Command::Center => {
            let d = ctx.guarded(1);
            let oracle_basis = oracle_center_upto(&spec, d);
            let oracle = CenterReport::of(q, &oracle_basis);
            let (mode, theorem, agree) = match central_monomials_upto(&spec, d) {
                Ok(basis) => {
                    ctx.notices.extend(basis.notices.iter().cloned());
                    ctx.notices.extend(long_cycle_notice(q));
                    let agree = (1..=d).all(|k| {
                        oracle_basis.at(k).iter().all(|e| e.monomial().is_some())
                            && oracle_basis.monomials(k) == basis.monomials(k)
                    });
                    disagreement |= !agree;
                    (Mode::Theorem, Some(CenterReport::of(q, &basis)), Some(agree))
                }
                Err(CenterError::Hypotheses(h)) => {
                    ctx.notices.push(oracle_only_banner(&h));
                    (Mode::OracleOnly, None, None)
                }
                Err(e) => unreachable!("{e}"),
            };
            text.push(match mode {
                Mode::Theorem => format!("center through degree {d} (clique description, checked by the oracle)"),
                Mode::OracleOnly => format!("center through degree {d} (oracle only)"),
            });
            text.push(format!("degree 0: dimension {}", oracle.unit_dimension));
            let shown = theorem.as_ref().unwrap_or(&oracle);
            text.extend(shown.degrees.iter().map(|g| shown.render_degree(g)));
            if agree == Some(false) {
                text.push("DISAGREEMENT with the oracle:".into());
                text.extend(oracle.degrees.iter().map(|g| oracle.render_degree(g)));
            }
            CommandResult::Center {
                mode,
                theorem,
                oracle,
                agree,
            }
        }
        Command::Fingen => {
            let d = ctx.guarded(1);
            let evidence = oracle_fg_evidence(&spec, d);
            let new = evidence.new_generator_degrees();
            let render_new = format!(
                "oracle: new generators in degrees [{}] through degree {d}",
                new.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(", ")
            );
            let result = match center_finitely_generated(&spec) {
                Ok(v) => {
                    ctx.notices.extend(long_cycle_notice(q));
                    let generators: Vec<String> = v.generators.iter().map(|w| q.render_word(w)).collect();
                    let witness = v.witness.as_ref().map(|w| WitnessReport::of(q, w));
                    match v.status {
                        FinGenStatus::Trivial => text.push("trivial: no central element of positive degree".into()),
                        FinGenStatus::FinitelyGenerated => {
                            text.push(format!("finitely generated by {}", generators.join(", ")))
                        }
                        FinGenStatus::InfinitelyGenerated => text.push(format!(
                            "infinitely generated; witness: {}",
                            witness.as_ref().unwrap().render()
                        )),
                    }
                    let s_sets: Vec<SReport> = v
                        .s_sets
                        .iter()
                        .map(|(x, s)| {
                            let (condition, loops) = match s {
                                SCondition::Set(xs) => ("set", names(q, xs)),
                                SCondition::Trivial => ("trivial", Vec::new()),
                                SCondition::Fail => ("fail", Vec::new()),
                            };
                            SReport {
                                vertex: q.vertex_name(*x).to_string(),
                                condition,
                                loops,
                            }
                        })
                        .collect();
                    for s in &s_sets {
                        text.push(match s.condition {
                            "set" => format!("S({}) = {{{}}}", s.vertex, s.loops.join(", ")),
                            c => format!("S({}): {c}", s.vertex),
                        });
                    }
                    CommandResult::Fingen {
                        mode: Mode::Theorem,
                        status: Some(v.status),
                        generators,
                        witness,
                        s_sets,
                        oracle: evidence,
                    }
                }
                Err(CenterError::Hypotheses(h)) => {
                    ctx.notices.push(oracle_only_banner(&h));
                    text.push("undecided: outside the hypotheses".into());
                    CommandResult::Fingen {
                        mode: Mode::OracleOnly,
                        status: None,
                        generators: Vec::new(),
                        witness: None,
                        s_sets: Vec::new(),
                        oracle: evidence,
                    }
                }
                Err(e) => unreachable!("{e}"),
            };
            text.push(render_new);
            result
        }
        Command::Dual => match koszul_dual(&ctx.pres) {
            Ok(dual) => {
                text.push(format!("Koszul dual ({})", koszul_label(dual.koszul())));
                let doc = SpecDocument {
                    spec: dual.spec().clone(),
                    koszul_asserted: dual.koszul() != KoszulBasis::Unknown,
                    max_degree: None,
                    notices: Vec::new(),
                };
                text.push(print_spec(&doc).trim_end().to_string());
                CommandResult::Dual {
                    admissible: true,
                    cycle: None,
                    dual: Some(InputSummary::of(&dual)),
                }
            }
            Err(_) => {
                let (_, _, cycle) = admissibility(&spec);
                text.push(format!("NOT ADMISSIBLE, cycle: {}; no Koszul dual", cycle.as_ref().unwrap().join(" -> ")));
                CommandResult::Dual {
                    admissible: false,
                    cycle,
                    dual: None,
                }
            }
        },
        Command::Hochschild => {
            let v = hochschild_fg(&ctx.pres);
            let dq = v.dual.as_ref().map(|d| d.quiver().clone());
            let dual_center_generators: Vec<String> = match (&v.dual_center, &dq) {
                (Some(fg), Some(dq)) => fg.generators.iter().map(|w| dq.render_word(w)).collect(),
                _ => Vec::new(),
            };
            let witness = match (&v.dual_center, &dq) {
                (Some(fg), Some(dq)) => fg.witness.as_ref().map(|w| WitnessReport::of(dq, w)),
                _ => None,
            };
            text.push(match v.status {
                HochschildStatus::FinitelyGenerated if v.trivial => "finitely generated; HH*/N is trivial".into(),
                HochschildStatus::FinitelyGenerated => format!(
                    "finitely generated; dual center generated by {}",
                    dual_center_generators.join(", ")
                ),
                HochschildStatus::InfinitelyGenerated => format!(
                    "infinitely generated; dual witness: {}",
                    witness.as_ref().unwrap().render()
                ),
                HochschildStatus::Undecided(r) => format!(
                    "undecided: {}",
                    match r {
                        UndecidedReason::KoszulUnknown => "Koszulity not asserted",
                        UndecidedReason::NotAdmissible => "the ideal is not admissible",
                        UndecidedReason::CharacteristicTwo => "characteristic 2",
                    }
                ),
            });
            let dual_hypotheses = v.dual.as_ref().map(|d| Hypotheses::of(d.spec()));
            if let Some(h) = dual_hypotheses {
                text.push(format!(
                    "dual hypotheses: square-free {}, orthogonal admissible {}",
                    yes_no(h.square_free),
                    yes_no(h.orthogonal_admissible)
                ));
            }
            text.push(format!("koszul: {}", koszul_label(v.koszul)));
            CommandResult::Hochschild {
                dual_hypotheses,
                status: v.status,
                trivial: v.trivial,
                dual: v.dual.as_ref().map(InputSummary::of),
                dual_center_generators,
                witness,
            }
        }
        Command::OracleCheck => {
            let report = cross_check(&spec, ctx.max_degree);
            ctx.notices.extend(report.notices.iter().cloned());
            for c in &report.checks {
                let outcome = match c.outcome {
                    Outcome::Agree => "agree",
                    Outcome::Disagree => "DISAGREE",
                    Outcome::Skipped => "skipped",
                };
                let mut line = format!("{}: {outcome}", c.name);
                if !c.details.is_empty() {
                    write!(line, " ({})", c.details.join("; ")).unwrap();
                }
                text.push(line);
            }
            disagreement = !report.all_agree();
            text.push(if disagreement {
                "ENGINES DISAGREE".into()
            } else {
                "all engines agree".into()
            });
            CommandResult::OracleCheck(report)
        }
        Command::Dot => {
            let (g, name) = match graph {
                GraphChoice::Gen => (generator_graph(&spec), "gen"),
                GraphChoice::GenPerp => (generator_graph(&spec.orthogonal()), "gen_perp"),
                GraphChoice::Rel => (relation_graph(&spec), "rel"),
            };
            let dot = g.to_dot(name);
            text.push(dot.trim_end().to_string());
            CommandResult::Dot { graph, dot }
        }
    };
    (result, text, disagreement)
}

fn koszul_label(k: KoszulBasis) -> &'static str {
    match k {
        KoszulBasis::Asserted => "Koszul by assertion",
        KoszulBasis::AutoCertifiedMonomial => "quadratic monomial, Koszul",
        KoszulBasis::Unknown => "Koszulity unknown",
    }
}

/// Runs a command on a parsed document.
pub fn run(cmd: Command, doc: &SpecDocument, opts: &RunOptions) -> RunOutput {
    let max_degree = opts
        .max_degree
        .or(doc.max_degree)
        .or(opts.default_max_degree)
        .unwrap_or(DEFAULT_MAX_DEGREE)
        .max(1);
    let mut ctx = Ctx {
        doc,
        pres: AlgebraPresentation::new(doc.spec.clone(), doc.koszul_asserted),
        max_degree,
        notices: doc.notices.clone(),
    };
    let (result, text, disagreement) = execute(cmd, &mut ctx, opts.graph);
    let h = Hypotheses::of(ctx.spec());
    let exit_code = if disagreement { 2 } else { 0 };
    let stdout = if opts.json {
        let report = Report {
            tool: Tool {
                name: TOOL_NAME,
                version: TOOL_VERSION,
            },
            command: cmd,
            input: InputSummary::of(&ctx.pres),
            hypotheses: HypothesisReport {
                square_free: h.square_free,
                orthogonal_admissible: h.orthogonal_admissible,
                koszul: ctx.pres.koszul(),
            },
            max_degree: ctx.max_degree,
            result,
            notices: ctx.notices,
        };
        let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut lines = text;
        if matches!(cmd, Command::Center | Command::Fingen) {
            lines.push(format!(
                "hypotheses: square-free {}, orthogonal admissible {}; {}",
                yes_no(h.square_free),
                yes_no(h.orthogonal_admissible),
                koszul_label(ctx.pres.koszul())
            ));
        }
        lines.extend(ctx.notices.iter().map(|n| format!("note: {n}")));
        let mut s = lines.join("\n");
        s.push('\n');
        s
    };
    RunOutput {
        stdout,
        stderr: String::new(),
        exit_code,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Parses `text` and runs a command; parse errors exit with code 1.
pub fn run_text(cmd: Command, source_name: &str, text: &str, opts: &RunOptions) -> RunOutput {
    match parse_spec(text) {
        Ok(doc) => run(cmd, &doc, opts),
        Err(e) => RunOutput {
            stdout: String::new(),
            stderr: format!("{source_name}:{e}\n"),
            exit_code: 1,
        },
    }
}
