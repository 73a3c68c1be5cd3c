//! Finite generation of the center.
//!
//! A loop clique qualifies when every outsider is killed on both sides or
//! extends it. The center is finitely generated exactly when every member of
//! every qualifying clique qualifies on its own; it is then generated by
//! central arrows (commutative flavor) or their squares (anticommutative
//! flavor).

use serde::Serialize;
use thiserror::Error;

use crate::center::{center_is_trivial_at, CenterError, CliqueTest, Hypotheses};
use crate::ideal::{Flavor, IdealSpec};
use crate::quiver::{ArrowId, VertexId};

pub type Word = Vec<ArrowId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FinGenStatus {
    FinitelyGenerated,
    InfinitelyGenerated,
    Trivial,
}

/// Which edge between the failing member and the outsider is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MissingDirection {
    /// No edge from the member to the outsider.
    FromClique,
    /// No edge from the outsider to the member.
    IntoClique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteWitness {
    pub clique: Vec<ArrowId>,
    pub failing_member: ArrowId,
    pub blocking_outsider: ArrowId,
    pub missing: MissingDirection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SCondition {
    Set(Vec<ArrowId>),
    /// No central element of positive degree at the vertex.
    Trivial,
    /// The center at the vertex is nontrivial but the set is empty.
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGenVerdict {
    pub status: FinGenStatus,
    pub flavor: Flavor,
    pub generators: Vec<Word>,
    pub witness: Option<InfiniteWitness>,
    pub s_sets: Vec<(VertexId, SCondition)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinGenError {
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error("the center is infinitely generated")]
    InfinitelyGenerated,
}

fn require_orthogonal_admissible(spec: &IdealSpec) -> Result<(), CenterError> {
    let h = Hypotheses::of(spec);
    if h.orthogonal_admissible {
        Ok(())
    } else {
        Err(CenterError::Hypotheses(h))
    }
}

fn generator_for(flavor: Flavor, a: ArrowId) -> Word {
    match flavor {
        Flavor::Commutative => vec![a],
        Flavor::Anticommutative => vec![a, a],
    }
}

pub fn center_finitely_generated(spec: &IdealSpec) -> Result<FinGenVerdict, CenterError> {
    require_orthogonal_admissible(spec)?;
    let q = spec.quiver();
    let test = CliqueTest::new(spec);
    let mut qualifying = Vec::new();
    for x in q.vertex_ids() {
        qualifying.extend(test.loop_cliques_at(x).into_iter().filter(|c| test.qualifies(c)));
    }
    let witness = qualifying.iter().find_map(|clique| {
        clique.iter().find_map(|&m| {
            let b = test.blocking_outsider(&[m])?;
            let missing = if test.graph.has_directed(m, b) {
                MissingDirection::IntoClique
            } else {
                MissingDirection::FromClique
            };
            Some(InfiniteWitness {
                clique: clique.clone(),
                failing_member: m,
                blocking_outsider: b,
                missing,
            })
        })
    });
    let status = if qualifying.is_empty() {
        FinGenStatus::Trivial
    } else if witness.is_some() {
        FinGenStatus::InfinitelyGenerated
    } else {
        FinGenStatus::FinitelyGenerated
    };
    let generators = if status == FinGenStatus::FinitelyGenerated {
        qualifying
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| generator_for(spec.flavor(), c[0]))
            .collect()
    } else {
        Vec::new()
    };
    let s_sets = q
        .vertex_ids()
        .map(|x| Ok((x, necessary_condition_s(spec, x)?)))
        .collect::<Result<_, CenterError>>()?;
    Ok(FinGenVerdict {
        status,
        flavor: spec.flavor(),
        generators,
        witness,
        s_sets,
    })
}

/// Loops at `x` related to every other loop there and killing every
/// non-loop arrow into and out of `x`.
pub fn necessary_condition_s(spec: &IdealSpec, x: VertexId) -> Result<SCondition, CenterError> {
    require_orthogonal_admissible(spec)?;
    let q = spec.quiver();
    let loops = q.loops_at(x);
    let s: Vec<ArrowId> = loops
        .iter()
        .copied()
        .filter(|&a| {
            loops.iter().all(|&b| b == a || spec.related(a, b))
                && q.arrow_ids().filter(|&c| !q.is_loop(c)).all(|c| {
                    (q.target(c) != x || spec.is_monomial(c, a))
                        && (q.source(c) != x || spec.is_monomial(a, c))
                })
        })
        .collect();
    if !s.is_empty() {
        return Ok(SCondition::Set(s));
    }
    Ok(if center_is_trivial_at(spec, x)?.trivial {
        SCondition::Trivial
    } else {
        SCondition::Fail
    })
}

/// Generators of a finitely generated center: central arrows, or their
/// squares in the anticommutative flavor. Empty for a trivial center.
pub fn degree_generators(spec: &IdealSpec) -> Result<Vec<Word>, FinGenError> {
    let v = center_finitely_generated(spec)?;
    match v.status {
        FinGenStatus::InfinitelyGenerated => Err(FinGenError::InfinitelyGenerated),
        _ => Ok(v.generators),
    }
}
