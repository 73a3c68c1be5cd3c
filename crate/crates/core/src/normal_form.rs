//! Rewriting monomials by allowed transpositions.
//!
//! Two adjacent distinct loops `a`, `b` with a relation pair `{a, b}` may be
//! swapped; in the anticommutative flavor each swap flips the sign. Equal
//! arrows are never swapped, so the relative order of equal letters is an
//! invariant of a class and each member carries exactly one sign.

use std::collections::{BTreeMap, VecDeque};
use std::ops::Mul;

use serde::Serialize;
use thiserror::Error;

use crate::ideal::{Flavor, IdealSpec};
use crate::quiver::ArrowId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalFormError {
    #[error("the empty word has no transposition class")]
    EmptyWord,
    #[error("`{0}` is not a path")]
    NotAPath(String),
    #[error("internal inconsistency: `{0}` reached with both signs")]
    SignConflict(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedClass {
    pub representative: Vec<ArrowId>,
    /// Every word reachable from the representative, with its sign relative
    /// to the representative.
    pub members: BTreeMap<Vec<ArrowId>, Sign>,
    /// Some member has a monomial generator as a factor.
    pub zero_flag: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Canonical {
    Zero,
    Term {
        sign: Sign,
        word: Vec<ArrowId>,
    },
}

fn has_generator_factor(spec: &IdealSpec, word: &[ArrowId]) -> bool {
    word.windows(2).any(|w| spec.is_monomial(w[0], w[1]))
}

pub fn equivalence_class(
    spec: &IdealSpec,
    word: &[ArrowId],
) -> Result<SignedClass, NormalFormError> {
    let q = spec.quiver();
    if word.is_empty() {
        return Err(NormalFormError::EmptyWord);
    }
    if !q.is_path(word) {
        return Err(NormalFormError::NotAPath(q.render_word(word)));
    }
    let anti = spec.flavor() == Flavor::Anticommutative;
    let mut members = BTreeMap::new();
    members.insert(word.to_vec(), Sign::Plus);
    let mut queue = VecDeque::from([word.to_vec()]);
    let mut zero_flag = false;
    while let Some(w) = queue.pop_front() {
        let sign = members[&w];
        zero_flag |= has_generator_factor(spec, &w);
        for i in 0..w.len() - 1 {
            if w[i] == w[i + 1] || !spec.related(w[i], w[i + 1]) {
                continue;
            }
            let mut next = w.clone();
            next.swap(i, i + 1);
            let next_sign = if anti { sign.flip() } else { sign };
            match members.get(&next) {
                Some(&s) if s != next_sign => {
                    return Err(NormalFormError::SignConflict(q.render_word(&next)))
                }
                Some(_) => {}
                None => {
                    members.insert(next.clone(), next_sign);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(SignedClass {
        representative: word.to_vec(),
        members,
        zero_flag,
    })
}

/// Membership of a monomial in `I`. Words that are not paths are zero in
/// `KQ` and count as members.
pub fn monomial_in_ideal(spec: &IdealSpec, word: &[ArrowId]) -> Result<bool, NormalFormError> {
    if !word.is_empty() && !spec.quiver().is_path(word) {
        return Ok(true);
    }
    if word.len() < 2 {
        return Ok(false);
    }
    Ok(equivalence_class(spec, word)?.zero_flag)
}

/// Zero, or the lexicographically least member with its sign relative to
/// the input.
pub fn canonical_form(spec: &IdealSpec, word: &[ArrowId]) -> Result<Canonical, NormalFormError> {
    if !word.is_empty() && !spec.quiver().is_path(word) {
        return Ok(Canonical::Zero);
    }
    let class = equivalence_class(spec, word)?;
    if class.zero_flag {
        return Ok(Canonical::Zero);
    }
    let (word, &sign) = class.members.iter().next().unwrap();
    Ok(Canonical::Term {
        sign,
        word: word.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn class(spec: &IdealSpec, w: &str) -> BTreeMap<String, Sign> {
        let q = spec.quiver();
        equivalence_class(spec, &q.parse_word(w).unwrap())
            .unwrap()
            .members
            .into_iter()
            .map(|(w, s)| (q.render_word(&w), s))
            .collect()
    }

    fn canon(spec: &IdealSpec, w: &str) -> Option<(Sign, String)> {
        let q = spec.quiver();
        match canonical_form(spec, &q.parse_word(w).unwrap()).unwrap() {
            Canonical::Zero => None,
            Canonical::Term { sign, word } => Some((sign, q.render_word(&word))),
        }
    }

    fn in_ideal(spec: &IdealSpec, w: &str) -> bool {
        monomial_in_ideal(spec, &spec.quiver().parse_word(w).unwrap()).unwrap()
    }

    #[test]
    fn classes_and_signs() {
        use Sign::*;
        let c = class(&fixtures::pair_with_exit(), "a*b");
        assert_eq!(c, BTreeMap::from([("a*b".into(), Plus), ("b*a".into(), Plus)]));
        let c = class(&fixtures::square_central(), "a*b");
        assert_eq!(c, BTreeMap::from([("a*b".into(), Plus), ("b*a".into(), Minus)]));
        let c = class(&fixtures::monomial_cycle(), "a*b");
        assert_eq!(c, BTreeMap::from([("a*b".into(), Plus)]));
        let c = class(&fixtures::square_central(), "a*a*b");
        assert_eq!(c.len(), 3);
        assert_eq!(c["a*b*a"], Minus);
        assert_eq!(c["b*a*a"], Plus);
    }

    #[test]
    fn rejects_empty_and_non_paths() {
        let spec = fixtures::pair_with_exit();
        assert_eq!(equivalence_class(&spec, &[]), Err(NormalFormError::EmptyWord));
        let ca = spec.quiver().parse_word("c*a").unwrap();
        assert!(matches!(
            equivalence_class(&spec, &ca),
            Err(NormalFormError::NotAPath(_))
        ));
        assert!(monomial_in_ideal(&spec, &ca).unwrap());
        assert_eq!(canonical_form(&spec, &ca).unwrap(), Canonical::Zero);
    }

    #[test]
    fn membership() {
        let spec = fixtures::pair_with_exit();
        assert!(in_ideal(&spec, "b*a*b"));
        assert!(in_ideal(&spec, "b*a*c"));
        assert!(!in_ideal(&spec, "a*b"));
        assert!(!in_ideal(&spec, "b*c"));
        assert!(!in_ideal(&spec, "a"));
        assert!(!in_ideal(&fixtures::square_central(), "a*a*b"));
        assert!(in_ideal(&fixtures::square_central(), "a*b*c"));
    }

    #[test]
    fn canonical_forms() {
        use Sign::*;
        assert_eq!(canon(&fixtures::pair_with_exit(), "b*a"), Some((Plus, "a*b".into())));
        assert_eq!(canon(&fixtures::square_central(), "b*a"), Some((Minus, "a*b".into())));
        assert_eq!(canon(&fixtures::square_central(), "a*b*a*b"), Some((Minus, "a*a*b*b".into())));
        assert_eq!(canon(&fixtures::pair_with_exit(), "a*a"), None);
        assert_eq!(canon(&fixtures::pair_with_exit(), "c"), Some((Plus, "c".into())));
    }

    #[test]
    fn members_are_permutations_with_consistent_signs() {
        let spec = fixtures::infinite_center();
        let q = spec.quiver();
        let w = q.parse_word("a*c*d*a*c*d").unwrap();
        let c = equivalence_class(&spec, &w).unwrap();
        let mut sorted = w.clone();
        sorted.sort();
        for m in c.members.keys() {
            let mut s = m.clone();
            s.sort();
            assert_eq!(s, sorted);
        }
        assert!(c.members.values().all(|&s| s == Sign::Plus));
    }
}
