//! Mixed graphs on the arrows of a quiver.
//!
//! The generator graph of an ideal has a directed edge `a -> b` for every
//! monomial generator `ab` and an undirected edge for every relation pair.
//! The relation graph of `KQ/I` has a directed edge for every product
//! `ab = 0`, composable or not.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::ideal::IdealSpec;
use crate::quiver::{ArrowId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Generator,
    Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    kind: GraphKind,
    names: Vec<String>,
    loop_base: Vec<Option<VertexId>>,
    directed: BTreeSet<(ArrowId, ArrowId)>,
    undirected: BTreeSet<(ArrowId, ArrowId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clique {
    pub members: Vec<ArrowId>,
    pub loops_only: bool,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Admissibility {
    /// Every path of length `nilpotency_bound` lies in the ideal.
    Admissible { nilpotency_bound: usize },
    /// A directed cycle in the generator graph of the orthogonal ideal;
    /// first and last entries coincide.
    NotAdmissible { cycle: Vec<ArrowId> },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible { .. })
    }
}

fn skeleton(spec: &IdealSpec, kind: GraphKind) -> MixedGraph {
    let q = spec.quiver();
    MixedGraph {
        kind,
        names: q.arrow_ids().map(|a| q.arrow_name(a).to_string()).collect(),
        loop_base: q
            .arrow_ids()
            .map(|a| q.is_loop(a).then(|| q.source(a)))
            .collect(),
        directed: BTreeSet::new(),
        undirected: spec.relations().clone(),
    }
}

pub fn generator_graph(spec: &IdealSpec) -> MixedGraph {
    let mut g = skeleton(spec, GraphKind::Generator);
    g.directed = spec.monomials().clone();
    g
}

pub fn relation_graph(spec: &IdealSpec) -> MixedGraph {
    let q = spec.quiver();
    let mut g = skeleton(spec, GraphKind::Relation);
    for a in q.arrow_ids() {
        for b in q.arrow_ids() {
            if spec.product_vanishes(a, b) {
                g.directed.insert((a, b));
            }
        }
    }
    g
}

pub fn is_admissible(spec: &IdealSpec) -> Admissibility {
    match generator_graph(&spec.orthogonal()).directed_cycle() {
        Some(cycle) => Admissibility::NotAdmissible { cycle },
        None => Admissibility::Admissible {
            nilpotency_bound: spec.quiver().arrow_count() + 1,
        },
    }
}

impl MixedGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.names.len()).map(ArrowId)
    }

    pub fn name(&self, a: ArrowId) -> &str {
        &self.names[a.0]
    }

    pub fn is_loop(&self, a: ArrowId) -> bool {
        self.loop_base[a.0].is_some()
    }

    pub fn loop_base(&self, a: ArrowId) -> Option<VertexId> {
        self.loop_base[a.0]
    }

    pub fn directed_edges(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.directed
    }

    /// Stored with the smaller endpoint first.
    pub fn undirected_edges(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.undirected
    }

    pub fn has_directed(&self, a: ArrowId, b: ArrowId) -> bool {
        self.directed.contains(&(a, b))
    }

    pub fn has_undirected(&self, a: ArrowId, b: ArrowId) -> bool {
        self.undirected.contains(&(a.min(b), a.max(b)))
    }

    fn successors(&self, a: ArrowId) -> impl Iterator<Item = ArrowId> + '_ {
        self.directed
            .range((a, ArrowId(0))..=(a, ArrowId(usize::MAX)))
            .map(|&(_, b)| b)
    }

    /// The first directed cycle met by a depth-first search that visits
    /// vertices and successors in increasing order. Undirected edges are
    /// ignored.
    pub fn directed_cycle(&self) -> Option<Vec<ArrowId>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        fn visit(
            g: &MixedGraph,
            v: ArrowId,
            marks: &mut [Mark],
            stack: &mut Vec<ArrowId>,
        ) -> Option<Vec<ArrowId>> {
            marks[v.0] = Mark::Open;
            stack.push(v);
            for w in g.successors(v) {
                match marks[w.0] {
                    Mark::Open => {
                        let start = stack.iter().position(|&u| u == w).unwrap();
                        let mut cycle = stack[start..].to_vec();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    Mark::New => {
                        if let Some(c) = visit(g, w, marks, stack) {
                            return Some(c);
                        }
                    }
                    Mark::Done => {}
                }
            }
            stack.pop();
            marks[v.0] = Mark::Done;
            None
        }
        let mut marks = vec![Mark::New; self.names.len()];
        for v in self.vertices() {
            if marks[v.0] == Mark::New {
                if let Some(c) = visit(self, v, &mut marks, &mut Vec::new()) {
                    return Some(c);
                }
            }
        }
        None
    }

    pub fn has_directed_cycle(&self) -> bool {
        self.directed_cycle().is_some()
    }

    pub fn is_clique(&self, members: &[ArrowId]) -> bool {
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..]
                .iter()
                .all(|&b| a != b && self.has_undirected(a, b))
        })
    }

    /// Every clique of the undirected part, sorted by size and then by
    /// member list. With `loops_only` only loop vertices take part.
    pub fn enumerate_cliques(&self, loops_only: bool) -> Vec<Clique> {
        let pool: BTreeSet<ArrowId> = self
            .vertices()
            .filter(|&a| !loops_only || self.is_loop(a))
            .collect();
        let mut maximal = Vec::new();
        self.bron_kerbosch(BTreeSet::new(), pool, BTreeSet::new(), &mut maximal);
        let maximal: BTreeSet<Vec<ArrowId>> = maximal.into_iter().collect();
        let mut all = BTreeSet::new();
        for m in &maximal {
            for mask in 1u64..(1 << m.len()) {
                let subset: Vec<ArrowId> = m
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &a)| a)
                    .collect();
                all.insert(subset);
            }
        }
        let mut out: Vec<Clique> = all
            .into_iter()
            .map(|members| Clique {
                maximal: maximal.contains(&members),
                members,
                loops_only,
            })
            .collect();
        out.sort_by(|x, y| (x.members.len(), &x.members).cmp(&(y.members.len(), &y.members)));
        out
    }

    fn neighbours(&self, a: ArrowId) -> BTreeSet<ArrowId> {
        self.undirected
            .iter()
            .filter_map(|&(x, y)| {
                if x == a {
                    Some(y)
                } else if y == a {
                    Some(x)
                } else {
                    None
                }
            })
            .collect()
    }

    fn bron_kerbosch(
        &self,
        r: BTreeSet<ArrowId>,
        mut p: BTreeSet<ArrowId>,
        mut x: BTreeSet<ArrowId>,
        out: &mut Vec<Vec<ArrowId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.into_iter().collect());
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| self.neighbours(u).intersection(&p).count())
            .unwrap();
        let pivot_nbrs = self.neighbours(pivot);
        let candidates: Vec<ArrowId> = p.difference(&pivot_nbrs).copied().collect();
        for v in candidates {
            let nbrs = self.neighbours(v);
            let mut r2 = r.clone();
            r2.insert(v);
            self.bron_kerbosch(
                r2,
                p.intersection(&nbrs).copied().collect(),
                x.intersection(&nbrs).copied().collect(),
                out,
            );
            p.remove(&v);
            x.insert(v);
        }
    }

    /// Graphviz text. Output depends only on the graph.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        writeln!(s, "  node [shape=circle];").unwrap();
        for n in &self.names {
            writeln!(s, "  \"{n}\";").unwrap();
        }
        for &(a, b) in &self.directed {
            writeln!(s, "  \"{}\" -> \"{}\";", self.name(a), self.name(b)).unwrap();
        }
        for &(a, b) in &self.undirected {
            writeln!(s, "  \"{}\" -> \"{}\" [dir=none];", self.name(a), self.name(b)).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ideal::Flavor;
    use crate::quiver::Quiver;

    fn id(g: &MixedGraph, n: &str) -> ArrowId {
        g.vertices().find(|&a| g.name(a) == n).unwrap()
    }

    fn names(g: &MixedGraph, xs: &[ArrowId]) -> Vec<String> {
        xs.iter().map(|&a| g.name(a).to_string()).collect()
    }

    #[test]
    fn generator_graph_of_example_one() {
        let g = generator_graph(&fixtures::pair_with_exit());
        let (a, b, c) = (id(&g, "a"), id(&g, "b"), id(&g, "c"));
        assert!(g.has_undirected(b, a));
        assert!(g.has_directed(a, c) && g.has_directed(a, a) && g.has_directed(b, b));
        assert_eq!(g.directed_edges().len(), 3);
        assert_eq!(g.undirected_edges().len(), 1);

        let zero = fixtures::build(fixtures::two_loops_and_exit(), Flavor::Commutative, &[], &[]);
        let g = generator_graph(&zero);
        assert!(g.directed_edges().is_empty() && g.undirected_edges().is_empty());
    }

    #[test]
    fn orthogonal_graph_of_the_third_example() {
        let g = generator_graph(&fixtures::four_loops_open().orthogonal());
        let (c, d) = (id(&g, "c"), id(&g, "d"));
        assert!(g.has_directed(c, d) && g.has_directed(d, c));
        assert_eq!(g.directed_edges().len(), 2);
        assert_eq!(g.undirected_edges().len(), 5);
        assert_eq!(names(&g, &g.directed_cycle().unwrap()), ["c", "d", "c"]);
    }

    #[test]
    fn admissibility_verdicts() {
        assert_eq!(
            is_admissible(&fixtures::pair_with_exit()),
            Admissibility::Admissible { nilpotency_bound: 4 }
        );
        assert!(!is_admissible(&fixtures::four_loops_open()).is_admissible());
        assert!(is_admissible(&fixtures::monomial_cycle()).is_admissible());
        let one = Quiver::new(["x"], [("a", "x", "x")]).unwrap();
        let free = fixtures::build(one, Flavor::Commutative, &[], &[]);
        match is_admissible(&free) {
            Admissibility::NotAdmissible { cycle } => assert_eq!(cycle, [ArrowId(0), ArrowId(0)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn relation_graph_includes_trivial_zeros() {
        let g = relation_graph(&fixtures::infinite_center());
        let e = id(&g, "e");
        for x in ["a", "b", "c", "d", "e"] {
            assert!(g.has_directed(e, id(&g, x)), "e -> {x}");
        }
        assert!(g.has_directed(id(&g, "a"), e) && g.has_directed(id(&g, "c"), e));
        assert!(!g.has_directed(id(&g, "b"), e) && !g.has_directed(id(&g, "d"), e));
        assert!(g.has_directed(id(&g, "b"), id(&g, "c")));
        assert!(g.has_directed(id(&g, "d"), id(&g, "b")));
        assert_eq!(g.directed_edges().len(), 5 + 2 + 2);

        let one = Quiver::new(["x"], [("a", "x", "x")]).unwrap();
        let g = relation_graph(&fixtures::build(one, Flavor::Commutative, &[], &[]));
        assert!(g.directed_edges().is_empty());
    }

    #[test]
    fn cliques_of_the_infinite_center_algebra() {
        let g = relation_graph(&fixtures::infinite_center());
        let cliques = g.enumerate_cliques(true);
        let listed: Vec<String> = cliques.iter().map(|c| names(&g, &c.members).concat()).collect();
        assert_eq!(listed, ["a", "b", "c", "d", "ab", "ac", "ad", "cd", "acd"]);
        let maximal: Vec<String> = cliques
            .iter()
            .filter(|c| c.maximal)
            .map(|c| names(&g, &c.members).concat())
            .collect();
        assert_eq!(maximal, ["ab", "acd"]);
        assert_eq!(g.enumerate_cliques(false).len(), 10);
    }

    #[test]
    fn cliques_without_undirected_edges_are_singletons() {
        let g = relation_graph(&fixtures::monomial_cycle());
        let cliques = g.enumerate_cliques(false);
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().all(|c| c.members.len() == 1 && c.maximal));
        assert_eq!(g.enumerate_cliques(true).len(), 2);
    }

    #[test]
    fn dot_output() {
        let g = generator_graph(&fixtures::pair_with_exit());
        let dot = g.to_dot("gen");
        assert_eq!(
            dot,
            "digraph gen {\n  node [shape=circle];\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"a\";\n  \"a\" -> \"c\";\n  \"b\" -> \"b\";\n  \"a\" -> \"b\" [dir=none];\n}\n"
        );
        assert_eq!(dot, generator_graph(&fixtures::pair_with_exit()).to_dot("gen"));
        let one = Quiver::new(["x"], [("a", "x", "x")]).unwrap();
        let g = generator_graph(&fixtures::build(one, Flavor::Commutative, &[], &[]));
        assert_eq!(g.to_dot("g").lines().count(), 4);
    }

    #[test]
    fn every_quadratic_path_is_represented_exactly_once() {
        for spec in [
            fixtures::pair_with_exit(),
            fixtures::monomial_cycle(),
            fixtures::four_loops_open(),
            fixtures::infinite_center(),
            fixtures::square_central(),
        ] {
            let g = generator_graph(&spec);
            let gp = generator_graph(&spec.orthogonal());
            let q = spec.quiver();
            for a in q.arrow_ids() {
                for b in q.arrow_ids().filter(|&b| q.composable(a, b)) {
                    let both_undirected = g.has_undirected(a, b) && gp.has_undirected(a, b);
                    let cases = [both_undirected, g.has_directed(a, b), gp.has_directed(a, b)];
                    assert_eq!(cases.iter().filter(|&&x| x).count(), 1);
                }
            }
            for &(a, b) in g.undirected_edges() {
                assert!(g.is_loop(a) && g.loop_base(a) == g.loop_base(b));
            }
        }
    }
}
