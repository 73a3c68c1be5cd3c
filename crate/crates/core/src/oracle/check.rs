//! Holding the rewriting and theorem engines against the oracle.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{guard_degree, Oracle, Word};
use crate::center::{central_monomials_upto, Hypotheses};
use crate::fingen::{center_finitely_generated, FinGenStatus};
use crate::graph::{generator_graph, is_admissible};
use crate::ideal::{AlgebraPresentation, Flavor, IdealSpec};
use crate::koszul::dual_presentation;
use crate::normal_form::{canonical_form, Canonical, Sign};
use crate::notice::Notice;
use crate::quiver::{ArrowId, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Agree,
    Disagree,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Outcome,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub max_degree: usize,
    pub checks: Vec<CheckResult>,
    pub notices: Vec<Notice>,
}

impl CheckReport {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Disagree)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn result(name: &'static str, details: Vec<String>) -> CheckResult {
    CheckResult {
        name,
        outcome: if details.is_empty() {
            Outcome::Agree
        } else {
            Outcome::Disagree
        },
        details,
    }
}

fn skipped(name: &'static str, why: impl Into<String>) -> CheckResult {
    CheckResult {
        name,
        outcome: Outcome::Skipped,
        details: vec![why.into()],
    }
}

/// All paths of length `1..=n`, shortest first, each length sorted.
pub fn paths_upto(q: &Quiver, n: usize) -> Vec<Vec<Word>> {
    let mut out: Vec<Vec<Word>> = vec![Vec::new(), q.arrow_ids().map(|a| vec![a]).collect()];
    for d in 2..=n {
        let mut next = Vec::new();
        for w in &out[d - 1] {
            for a in q.arrow_ids().filter(|&a| q.composable(*w.last().unwrap(), a)) {
                let mut x = w.clone();
                x.push(a);
                next.push(x);
            }
        }
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

fn term(coefficient: &str, word: &str) -> String {
    match coefficient {
        "1" => word.to_string(),
        "-1" => format!("-{word}"),
        c => format!("{c}·{word}"),
    }
}

fn is_central_word(oracle: &Oracle, w: &[ArrowId]) -> bool {
    let q = oracle.spec().quiver().clone();
    q.arrow_ids().all(|b| {
        let mut left = vec![b];
        left.extend_from_slice(w);
        let mut right = w.to_vec();
        right.push(b);
        let l = if q.is_path(&left) { oracle.normal_form(&left) } else { Vec::new() };
        let r = if q.is_path(&right) { oracle.normal_form(&right) } else { Vec::new() };
        l == r
    })
}

/// Every engine against the oracle up to degree `max_degree`.
pub fn cross_check(spec: &IdealSpec, max_degree: usize) -> CheckReport {
    let q = spec.quiver();
    let mut notices = Vec::new();
    let (d, lowered) = guard_degree(q, max_degree, 1);
    notices.extend(lowered);
    let admissibility_degree = q.arrow_count() + 1;
    let (top, _) = guard_degree(q, d.max(admissibility_degree), 1);
    let oracle = Oracle::new(spec, top.max(d + 1));
    let render = |w: &[ArrowId]| q.render_word(w);
    let mut checks = Vec::new();

    // Bases, membership and signs.
    let mut details = Vec::new();
    let mut memo: HashMap<Word, Canonical> = HashMap::new();
    for (n, paths) in paths_upto(q, d).iter().enumerate().skip(1) {
        let mut rewritten = BTreeSet::new();
        for w in paths {
            let canon = match memo.get(w) {
                Some(c) => c.clone(),
                None => match canonical_form(spec, w) {
                    Ok(c) => c,
                    Err(e) => {
                        details.push(format!("{}: {e}", render(w)));
                        continue;
                    }
                },
            };
            memo.insert(w.clone(), canon.clone());
            let expected: Vec<(String, Word)> = match &canon {
                Canonical::Zero => Vec::new(),
                Canonical::Term { sign, word } => {
                    rewritten.insert(word.clone());
                    let c = if *sign == Sign::Plus { "1" } else { "-1" };
                    vec![(c.to_string(), word.clone())]
                }
            };
            if oracle.normal_form(w) != expected {
                details.push(format!("{} rewrites differently", render(w)));
            }
        }
        let elim: BTreeSet<Word> = oracle.basis(n).into_iter().collect();
        if elim != rewritten {
            details.push(format!("degree {n} bases differ"));
        }
    }
    checks.push(result("basis", details));

    // Admissibility against the dimension in degree |Q1| + 1.
    let verdict = is_admissible(spec).is_admissible();
    checks.push(if oracle.max_degree() >= admissibility_degree {
        let dies = oracle.dim(admissibility_degree) == 0;
        let details = if verdict == dies {
            Vec::new()
        } else {
            vec![format!(
                "graph says admissible = {verdict}, dimension in degree {admissibility_degree} is {}",
                oracle.dim(admissibility_degree)
            )]
        };
        result("admissibility", details)
    } else {
        skipped("admissibility", format!("degree {admissibility_degree} is over the path budget"))
    });

    let back = spec.orthogonal().orthogonal();
    checks.push(result(
        "orthogonal-involution",
        if back == *spec { Vec::new() } else { vec!["the orthogonal of the orthogonal differs".into()] },
    ));

    let round = dual_presentation(&dual_presentation(&AlgebraPresentation::new(spec.clone(), false)));
    checks.push(result(
        "koszul-round-trip",
        if round.spec() == spec { Vec::new() } else { vec!["dual of the dual differs".into()] },
    ));

    // Centers.
    let oracle_center = {
        let mut c = oracle.center();
        c.max_degree = d;
        c
    };
    let hyp = Hypotheses::of(spec);
    if spec.is_square_free() {
        let mut details = Vec::new();
        for k in 1..=d {
            if oracle_center.at(k).iter().any(|e| e.monomial().is_none()) {
                details.push(format!("degree {k} center has no monomial basis"));
            }
        }
        checks.push(result("center-monomial", details));
    } else {
        checks.push(skipped("center-monomial", "the ideal contains a square"));
    }
    if hyp.hold() {
        let theorem = central_monomials_upto(spec, d).expect("hypotheses hold");
        let mut details = Vec::new();
        for k in 1..=d {
            let words: Vec<String> = theorem.monomials(k).iter().map(|w| render(w)).collect();
            let monomial = oracle_center.at(k).iter().all(|e| e.monomial().is_some());
            if !monomial || oracle_center.monomials(k) != theorem.monomials(k) {
                let found: Vec<String> = oracle_center
                    .at(k)
                    .iter()
                    .map(|e| {
                        let terms: Vec<String> = e.terms.iter().map(|(c, w)| term(c, &render(w))).collect();
                        terms.join(" + ").replace("+ -", "- ")
                    })
                    .collect();
                details.push(format!(
                    "degree {k}: clique description [{}], elimination [{}]",
                    words.join(", "),
                    found.join(", ")
                ));
            }
        }
        checks.push(result("center", details));
    } else {
        checks.push(skipped("center", hyp.describe_failures().join("; ")));
    }

    // Nonzero powers of central monomials.
    if spec.is_square_free() {
        let words: Vec<Word> = oracle_center
            .elements()
            .filter_map(|(_, e)| e.monomial().cloned())
            .collect();
        let details = oracle
            .nilpotence(&words)
            .into_iter()
            .filter(|r| !r.nonzero)
            .map(|r| format!("({})^{} vanishes", render(&r.word), r.power))
            .collect();
        checks.push(result("nilpotence", details));
    } else {
        checks.push(skipped("nilpotence", "the ideal contains a square"));
    }

    // Powers of single loops.
    if spec.is_square_free() {
        let step = if spec.flavor() == Flavor::Commutative { 1 } else { 2 };
        let mut details = Vec::new();
        for a in q.arrow_ids().filter(|&a| q.is_loop(a)) {
            let base = vec![a; step];
            if base.len() >= oracle.max_degree() {
                continue;
            }
            let base_central = is_central_word(&oracle, &base);
            for k in (step..oracle.max_degree()).step_by(step) {
                let power = vec![a; k];
                if !oracle.is_zero(&power) && is_central_word(&oracle, &power) && !base_central {
                    details.push(format!("{} is central but {} is not", render(&power), render(&base)));
                }
            }
        }
        checks.push(result("power-centrality", details));
    } else {
        checks.push(skipped("power-centrality", "the ideal contains a square"));
    }

    // Finite generation against the degreewise saturation.
    if hyp.orthogonal_admissible {
        let verdict = center_finitely_generated(spec).expect("hypothesis holds");
        let evidence = oracle.fg_evidence();
        let new: Vec<usize> = evidence
            .new_generator_degrees()
            .into_iter()
            .filter(|&k| k <= d)
            .collect();
        let step = if spec.flavor() == Flavor::Commutative { 1 } else { 2 };
        let mut details = Vec::new();
        match verdict.status {
            FinGenStatus::Trivial => {
                if (1..=d).any(|k| oracle_center.dimension(k) > 0) {
                    details.push("trivial verdict but the center is not".into());
                }
            }
            FinGenStatus::FinitelyGenerated => {
                let anti = spec.flavor() == Flavor::Anticommutative;
                for k in oracle.uncovered_center_degrees(&verdict.generators, anti) {
                    if k <= d {
                        details.push(format!("generators do not span the center in degree {k}"));
                    }
                }
                for g in &verdict.generators {
                    if g.len() <= d && !oracle_center.monomials(g.len()).contains(g) {
                        details.push(format!("generator {} is not central", render(g)));
                    }
                }
            }
            FinGenStatus::InfinitelyGenerated => {
                let w = verdict.witness.as_ref().unwrap();
                let top = step * w.clique.len();
                if top <= d && !new.iter().any(|&k| k > step && k <= top) {
                    details.push(format!(
                        "infinitely generated verdict but no new generator in degrees {}..={top}",
                        step + 1
                    ));
                }
            }
        }
        checks.push(result("finite-generation", details));
    } else {
        checks.push(skipped("finite-generation", "the orthogonal ideal is not admissible"));
    }

    CheckReport {
        max_degree: d,
        checks,
        notices,
    }
}

/// Deleting `a_i` from a surviving path whose letters `a_i`, `a_{i+1}` are
/// joined by an undirected edge of the orthogonal generator graph. Returns
/// the violations among the given words: (word, position, shortened word).
pub fn shorter_path_violations(spec: &IdealSpec, words: &[Word]) -> Vec<(Word, usize, Word)> {
    let perp = generator_graph(&spec.orthogonal());
    let max = words.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let oracle = Oracle::new(spec, max);
    let mut out = Vec::new();
    for w in words {
        if oracle.is_zero(w) {
            continue;
        }
        for i in 0..w.len().saturating_sub(1) {
            if !perp.has_undirected(w[i], w[i + 1]) {
                continue;
            }
            let mut short = w.clone();
            short.remove(i);
            if !spec.quiver().is_path(&short) || oracle.is_zero(&short) {
                out.push((w.clone(), i, short));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_agree() {
        for spec in [
            fixtures::pair_with_exit(),
            fixtures::monomial_cycle(),
            fixtures::four_loops_open(),
            fixtures::four_loops_closed(),
            fixtures::square_central(),
            fixtures::infinite_center(),
        ] {
            let report = cross_check(&spec, 5);
            assert!(report.all_agree(), "{:#?}", report.checks);
        }
    }

    #[test]
    fn theorem_checks_run_when_hypotheses_hold() {
        let report = cross_check(&fixtures::infinite_center(), 4);
        assert_eq!(report.get("center").unwrap().outcome, Outcome::Agree);
        assert_eq!(report.get("finite-generation").unwrap().outcome, Outcome::Agree);
        let report = cross_check(&fixtures::pair_with_exit(), 4);
        assert_eq!(report.get("center").unwrap().outcome, Outcome::Skipped);
    }

    #[test]
    fn deleting_a_letter_can_kill_a_surviving_path() {
        let spec = fixtures::build(
            fixtures::four_loops(),
            Flavor::Commutative,
            &["c*d"],
            &["a*b", "b*d"],
        );
        let w = spec.quiver().parse_word("c*a*b*d").unwrap();
        let v = shorter_path_violations(&spec, &[w]);
        assert_eq!(v.len(), 1);
        assert_eq!(spec.quiver().render_word(&v[0].2), "c*b*d");
    }
}
