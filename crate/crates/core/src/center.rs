//! Centers by the clique characterization.
//!
//! Let `S` be the support of a monomial `m` made of loops at one vertex. In
//! the commutative flavor, `m` is central exactly when `S` is a clique of
//! loops in the relation graph and every other arrow `b` either has a
//! directed edge from `S` and one into `S`, or extends `S` to a larger
//! clique. In the anticommutative flavor the same holds for monomials with
//! all multiplicities even; monomials with all multiplicities odd and odd
//! degree are central when every outsider is killed on both sides; nothing
//! else is. These descriptions need `I` square-free and `I⊥` admissible.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{is_admissible, relation_graph, MixedGraph};
use crate::ideal::{Flavor, IdealSpec};
use crate::normal_form::{canonical_form, Canonical, NormalFormError};
use crate::notice::Notice;
use crate::quiver::{ArrowId, VertexId};

pub type Word = Vec<ArrowId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub square_free: bool,
    pub orthogonal_admissible: bool,
}

impl Hypotheses {
    pub fn of(spec: &IdealSpec) -> Self {
        Hypotheses {
            square_free: spec.is_square_free(),
            orthogonal_admissible: is_admissible(&spec.orthogonal()).is_admissible(),
        }
    }

    pub fn hold(&self) -> bool {
        self.square_free && self.orthogonal_admissible
    }

    pub fn describe_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.square_free {
            out.push("the ideal contains a square");
        }
        if !self.orthogonal_admissible {
            out.push("the orthogonal ideal is not admissible");
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("outside the hypotheses of the clique description ({})", .0.describe_failures().join("; "))]
    Hypotheses(Hypotheses),
    #[error("the monomial `{0}` is zero in the quotient")]
    ZeroMonomial(String),
    #[error("graded centers are not computed in characteristic 2")]
    CharacteristicTwo,
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralityReason {
    /// Not a product of loops at one vertex.
    NotLoops,
    /// Two letters of the support carry no relation.
    SupportNotClique { a: ArrowId, b: ArrowId },
    /// Anticommutative flavor: multiplicities are neither all even nor all
    /// odd with odd degree.
    Parity,
    /// The outsider neither is killed on both sides nor extends the clique.
    Blocked { outsider: ArrowId },
    /// Odd case of the anticommutative flavor: an outsider is not killed on
    /// both sides.
    OddBlocked { outsider: ArrowId },
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityVerdict {
    pub central: bool,
    pub reason: CentralityReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterSource {
    Theorem,
    Oracle,
}

/// A central element as a combination of quotient basis words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralElement {
    pub terms: Vec<(String, Word)>,
    /// The vertex all its words are loops at, if there is one.
    pub basepoint: Option<VertexId>,
}

impl CentralElement {
    pub fn monomial(&self) -> Option<&Word> {
        match self.terms.as_slice() {
            [(c, w)] if c == "1" => Some(w),
            _ => None,
        }
    }
}

/// Central elements by degree, `1..=max_degree`. Degree zero is recorded
/// only by its dimension: one idempotent per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterBasis {
    pub source: CenterSource,
    pub flavor: Flavor,
    pub max_degree: usize,
    pub unit_dimension: usize,
    degrees: BTreeMap<usize, Vec<CentralElement>>,
    pub notices: Vec<Notice>,
}

impl CenterBasis {
    pub fn new(source: CenterSource, flavor: Flavor, max_degree: usize, unit_dimension: usize) -> Self {
        CenterBasis {
            source,
            flavor,
            max_degree,
            unit_dimension,
            degrees: (1..=max_degree).map(|d| (d, Vec::new())).collect(),
            notices: Vec::new(),
        }
    }

    pub fn push(&mut self, degree: usize, element: CentralElement) {
        self.degrees.entry(degree).or_default().push(element);
    }

    pub fn at(&self, degree: usize) -> &[CentralElement] {
        self.degrees.get(&degree).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dimension(&self, degree: usize) -> usize {
        self.at(degree).len()
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, &CentralElement)> {
        self.degrees
            .iter()
            .flat_map(|(&d, es)| es.iter().map(move |e| (d, e)))
    }

    pub fn is_empty(&self) -> bool {
        self.elements().next().is_none()
    }

    /// All elements are single words.
    pub fn is_monomial(&self) -> bool {
        self.elements().all(|(_, e)| e.monomial().is_some())
    }

    pub fn monomials(&self, degree: usize) -> BTreeSet<Word> {
        self.at(degree)
            .iter()
            .filter_map(|e| e.monomial().cloned())
            .collect()
    }

    /// The even-degree part.
    pub fn even_part(&self) -> CenterBasis {
        let mut out = self.clone();
        for (d, es) in out.degrees.iter_mut() {
            if d % 2 == 1 {
                es.clear();
            }
        }
        out
    }
}

fn require_hypotheses(spec: &IdealSpec) -> Result<(), CenterError> {
    let h = Hypotheses::of(spec);
    if h.hold() {
        Ok(())
    } else {
        Err(CenterError::Hypotheses(h))
    }
}

/// The clique conditions on a support set, shared with finite generation.
pub(crate) struct CliqueTest {
    pub graph: MixedGraph,
}

impl CliqueTest {
    pub fn new(spec: &IdealSpec) -> Self {
        CliqueTest {
            graph: relation_graph(spec),
        }
    }

    fn killed_both_ways(&self, support: &[ArrowId], b: ArrowId) -> bool {
        support.iter().any(|&s| self.graph.has_directed(s, b))
            && support.iter().any(|&s| self.graph.has_directed(b, s))
    }

    fn extends(&self, support: &[ArrowId], b: ArrowId) -> bool {
        self.graph.is_loop(b) && support.iter().all(|&s| self.graph.has_undirected(s, b))
    }

    /// First outsider violating the commutative (or even) condition, with
    /// the direction that is missing.
    pub fn blocking_outsider(&self, support: &[ArrowId]) -> Option<ArrowId> {
        self.graph
            .vertices()
            .filter(|b| !support.contains(b))
            .find(|&b| !self.killed_both_ways(support, b) && !self.extends(support, b))
    }

    pub fn odd_blocking_outsider(&self, support: &[ArrowId]) -> Option<ArrowId> {
        self.graph
            .vertices()
            .filter(|b| !support.contains(b))
            .find(|&b| !self.killed_both_ways(support, b))
    }

    pub fn missing_pair(&self, support: &[ArrowId]) -> Option<(ArrowId, ArrowId)> {
        for (i, &a) in support.iter().enumerate() {
            for &b in &support[i + 1..] {
                if !self.graph.has_undirected(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Even-type condition: the clique and every outsider behave.
    pub fn qualifies(&self, support: &[ArrowId]) -> bool {
        self.missing_pair(support).is_none() && self.blocking_outsider(support).is_none()
    }

    pub fn qualifies_odd(&self, support: &[ArrowId]) -> bool {
        self.missing_pair(support).is_none() && self.odd_blocking_outsider(support).is_none()
    }

    /// Loop cliques at `x`, in size-then-lexicographic order.
    pub fn loop_cliques_at(&self, x: VertexId) -> Vec<Vec<ArrowId>> {
        self.graph
            .enumerate_cliques(true)
            .into_iter()
            .filter(|c| self.graph.loop_base(c.members[0]) == Some(x))
            .map(|c| c.members)
            .collect()
    }
}

pub fn is_central_monomial(spec: &IdealSpec, word: &[ArrowId]) -> Result<CentralityVerdict, CenterError> {
    require_hypotheses(spec)?;
    let q = spec.quiver();
    if canonical_form(spec, word)? == Canonical::Zero {
        return Err(CenterError::ZeroMonomial(q.render_word(word)));
    }
    let verdict = |central, reason| Ok(CentralityVerdict { central, reason });
    let x = q.source(word[0]);
    if !word.iter().all(|&a| q.is_loop(a) && q.source(a) == x) {
        return verdict(false, CentralityReason::NotLoops);
    }
    let mut mult: BTreeMap<ArrowId, usize> = BTreeMap::new();
    for &a in word {
        *mult.entry(a).or_default() += 1;
    }
    let support: Vec<ArrowId> = mult.keys().copied().collect();
    let test = CliqueTest::new(spec);
    if let Some((a, b)) = test.missing_pair(&support) {
        return verdict(false, CentralityReason::SupportNotClique { a, b });
    }
    let odd_case = match spec.flavor() {
        Flavor::Commutative => false,
        Flavor::Anticommutative => {
            if mult.values().all(|m| m % 2 == 0) {
                false
            } else if mult.values().all(|m| m % 2 == 1) && word.len() % 2 == 1 {
                true
            } else {
                return verdict(false, CentralityReason::Parity);
            }
        }
    };
    if odd_case {
        if let Some(outsider) = test.odd_blocking_outsider(&support) {
            return verdict(false, CentralityReason::OddBlocked { outsider });
        }
    } else if let Some(outsider) = test.blocking_outsider(&support) {
        return verdict(false, CentralityReason::Blocked { outsider });
    }
    verdict(true, CentralityReason::Central)
}

/// Ways to write `total` as an ordered sum of `parts` positive integers
/// drawn from `allowed`.
fn compositions(total: usize, parts: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        if !allowed(first) {
            continue;
        }
        for mut rest in compositions(total - first, parts - 1, allowed) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn sorted_word(support: &[ArrowId], mult: &[usize]) -> Word {
    support
        .iter()
        .zip(mult)
        .flat_map(|(&a, &m)| std::iter::repeat_n(a, m))
        .collect()
}

/// Central monomials of degree `1..=max_degree`, as lexicographically least
/// words, grouped by vertex.
pub fn central_monomials_upto(spec: &IdealSpec, max_degree: usize) -> Result<CenterBasis, CenterError> {
    require_hypotheses(spec)?;
    let q = spec.quiver();
    let test = CliqueTest::new(spec);
    let anti = spec.flavor() == Flavor::Anticommutative;
    let mut basis = CenterBasis::new(CenterSource::Theorem, spec.flavor(), max_degree, q.components().len());
    let mut found: BTreeMap<usize, BTreeSet<(VertexId, Word)>> = BTreeMap::new();
    for x in q.vertex_ids() {
        for clique in test.loop_cliques_at(x) {
            let even_ok = test.qualifies(&clique);
            let odd_ok = anti && test.qualifies_odd(&clique);
            for d in 1..=max_degree {
                let mut parts = Vec::new();
                if even_ok {
                    let even = |m: usize| !anti || m.is_multiple_of(2);
                    parts.extend(compositions(d, clique.len(), &even));
                }
                if odd_ok && d % 2 == 1 {
                    parts.extend(compositions(d, clique.len(), &|m| m % 2 == 1));
                }
                for mult in parts {
                    found.entry(d).or_default().insert((x, sorted_word(&clique, &mult)));
                }
            }
        }
    }
    for (d, words) in found {
        for (x, w) in words {
            basis.push(
                d,
                CentralElement {
                    terms: vec![("1".to_string(), w)],
                    basepoint: Some(x),
                },
            );
        }
    }
    if anti {
        for a in q.arrow_ids().filter(|&a| q.is_loop(a)) {
            if test.qualifies(&[a]) && !test.qualifies_odd(&[a]) {
                let b = test.odd_blocking_outsider(&[a]).unwrap();
                basis.notices.push(Notice::new(
                    "anti-odd-power",
                    format!(
                        "{0}*{0} is central but no odd power of {0} is: {1} anticommutes with {0} instead of annihilating it",
                        q.arrow_name(a),
                        q.arrow_name(b)
                    ),
                ));
            }
        }
    }
    Ok(basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub trivial: bool,
    /// A clique of loops at the vertex whose even powers are central.
    pub block: Option<Vec<ArrowId>>,
}

/// Whether `Z(KQ_x/I_x)` has nothing in positive degree. Needs `I`
/// square-free.
pub fn center_is_trivial_at(spec: &IdealSpec, x: VertexId) -> Result<TrivialityVerdict, CenterError> {
    if !spec.is_square_free() {
        return Err(CenterError::Hypotheses(Hypotheses::of(spec)));
    }
    let local = spec.restrict(x).map_err(|_| {
        CenterError::NormalForm(NormalFormError::NotAPath(format!("vertex {}", x.0)))
    })?;
    let lx = local.quiver().vertex_id(spec.quiver().vertex_name(x)).unwrap();
    let test = CliqueTest::new(&local);
    let block = test
        .loop_cliques_at(lx)
        .into_iter()
        .find(|c| test.qualifies(c))
        .map(|c| {
            c.iter()
                .map(|&a| spec.quiver().arrow_id(local.quiver().arrow_name(a)).unwrap())
                .collect()
        });
    Ok(TrivialityVerdict {
        trivial: block.is_none(),
        block,
    })
}

pub fn even_center_upto(spec: &IdealSpec, max_degree: usize) -> Result<CenterBasis, CenterError> {
    Ok(central_monomials_upto(spec, max_degree)?.even_part())
}

/// The graded center, which coincides with the even center.
pub fn graded_center_upto(spec: &IdealSpec, max_degree: usize) -> Result<CenterBasis, CenterError> {
    if spec.field_char() == 2 {
        return Err(CenterError::CharacteristicTwo);
    }
    even_center_upto(spec, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::Quiver;

    fn central(spec: &IdealSpec, w: &str) -> bool {
        is_central_monomial(spec, &spec.quiver().parse_word(w).unwrap())
            .unwrap()
            .central
    }

    fn listing(spec: &IdealSpec, c: &CenterBasis, d: usize) -> Vec<String> {
        c.monomials(d)
            .iter()
            .map(|w| spec.quiver().render_word(w))
            .collect()
    }

    fn polynomial_ring() -> IdealSpec {
        let q = Quiver::new(["x"], [("a", "x", "x"), ("b", "x", "x")]).unwrap();
        fixtures::build(q, Flavor::Commutative, &[], &["a*b"])
    }

    #[test]
    fn central_monomials_of_the_infinite_center_algebra() {
        let spec = fixtures::infinite_center();
        assert!(central(&spec, "c*d"));
        assert!(central(&spec, "a"));
        assert!(!central(&spec, "c"));
        assert!(!central(&spec, "d*d"));
        let v = is_central_monomial(&spec, &spec.quiver().parse_word("c").unwrap()).unwrap();
        assert_eq!(v.reason, CentralityReason::Blocked { outsider: ArrowId(1) });
        let c = central_monomials_upto(&spec, 2).unwrap();
        assert_eq!(listing(&spec, &c, 1), ["a"]);
        assert_eq!(listing(&spec, &c, 2), ["a*a", "c*d"]);
    }

    #[test]
    fn anticommutative_parities() {
        let spec = fixtures::square_central();
        let v = is_central_monomial(&spec, &spec.quiver().parse_word("a*b").unwrap()).unwrap();
        assert_eq!(v.reason, CentralityReason::Parity);
        assert!(!central(&spec, "b"));
        assert!(central(&spec, "b*b"));
        let c = central_monomials_upto(&spec, 4).unwrap();
        assert!(c.at(1).is_empty() && c.at(3).is_empty());
        assert_eq!(listing(&spec, &c, 2), ["b*b"]);
        assert_eq!(listing(&spec, &c, 4), ["a*a*b*b", "b*b*b*b"]);
        assert!(c.notices.iter().any(|n| n.code == "anti-odd-power"));
    }

    #[test]
    fn polynomial_ring_center_is_everything() {
        let spec = polynomial_ring();
        let c = central_monomials_upto(&spec, 3).unwrap();
        assert_eq!(listing(&spec, &c, 1), ["a", "b"]);
        assert_eq!(listing(&spec, &c, 2), ["a*a", "a*b", "b*b"]);
        let graded = graded_center_upto(&spec, 3).unwrap();
        assert!(graded.at(1).is_empty() && graded.at(3).is_empty());
        assert_eq!(graded.dimension(2), 3);
    }

    #[test]
    fn refuses_outside_hypotheses() {
        let spec = fixtures::pair_with_exit();
        assert!(matches!(
            central_monomials_upto(&spec, 2),
            Err(CenterError::Hypotheses(Hypotheses { square_free: false, .. }))
        ));
        let two_char = fixtures::square_central().with_field_char(2).unwrap().0;
        assert_eq!(graded_center_upto(&two_char, 2), Err(CenterError::CharacteristicTwo));
    }

    #[test]
    fn triviality_per_vertex() {
        let spec = fixtures::infinite_center();
        let x = spec.quiver().vertex_id("x").unwrap();
        let y = spec.quiver().vertex_id("y").unwrap();
        let v = center_is_trivial_at(&spec, x).unwrap();
        assert!(!v.trivial);
        assert_eq!(v.block, Some(vec![spec.quiver().arrow_id("a").unwrap()]));
        assert!(center_is_trivial_at(&spec, y).unwrap().trivial);
    }

    #[test]
    fn triviality_lets_loops_extend_a_block() {
        // b is central although no block avoids its related neighbours.
        let q = Quiver::new(["x"], [("a", "x", "x"), ("b", "x", "x"), ("c", "x", "x")]).unwrap();
        let spec = fixtures::build(q, Flavor::Commutative, &["a*c"], &["a*b", "b*c"]);
        let v = center_is_trivial_at(&spec, VertexId(0)).unwrap();
        assert_eq!(v.block, Some(vec![ArrowId(1)]));
        assert!(central(&spec, "b"));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2, &|_| true).len(), 3);
        assert_eq!(compositions(4, 2, &|m| m % 2 == 0), vec![vec![2, 2]]);
        assert!(compositions(3, 2, &|m| m % 2 == 0).is_empty());
    }

    #[test]
    fn rotations_of_a_two_cycle_escape_the_clique_description() {
        // e0*e1 + e1*e0 commutes with every arrow, yet only loop powers are
        // predicted. The square-free hypothesis holds.
        let q = Quiver::new(["x", "y"], [("l", "y", "y"), ("e0", "x", "y"), ("e1", "y", "x")]).unwrap();
        let spec = fixtures::build(q, Flavor::Commutative, &["l*e1", "e0*l"], &[]);
        assert!(Hypotheses::of(&spec).hold());
        let theorem = central_monomials_upto(&spec, 2).unwrap();
        let words: Vec<String> = theorem.at(2).iter().map(|e| spec.quiver().render_word(e.monomial().unwrap())).collect();
        assert_eq!(words, ["l*l"]);
        let oracle = crate::oracle::oracle_center_upto(&spec, 2);
        let sums: Vec<Vec<String>> = oracle
            .at(2)
            .iter()
            .filter(|e| e.monomial().is_none())
            .map(|e| e.terms.iter().map(|(c, w)| format!("{c}{}", spec.quiver().render_word(w))).collect())
            .collect();
        assert_eq!(sums, [["1e0*e1", "1e1*e0"]]);
    }
}
