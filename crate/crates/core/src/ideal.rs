//! Quadratic (anti-)commutativity ideals.
//!
//! An ideal is stored as a minimal generating set: monomial generators `ab`
//! (ordered, composable pairs) and relation pairs `{a, b}` of distinct loops
//! at one vertex, standing for `ab - ba` (commutative flavor) or `ab + ba`
//! (anticommutative flavor). Minimality means a relation pair never coexists
//! with either of its monomials.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::notice::Notice;
use crate::quiver::{ArrowId, Quiver, QuiverError, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Commutative,
    Anticommutative,
}

impl Flavor {
    pub fn flipped(self) -> Flavor {
        match self {
            Flavor::Commutative => Flavor::Anticommutative,
            Flavor::Anticommutative => Flavor::Commutative,
        }
    }

    /// The `s` in the relation `ab + s·ba`.
    pub fn relation_sign(self) -> i64 {
        match self {
            Flavor::Commutative => -1,
            Flavor::Anticommutative => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Commutative => "commutative",
            Flavor::Anticommutative => "anticommutative",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("generator `{0}` is not quadratic")]
    NotQuadratic(String),
    #[error("monomial generator `{0}` is zero in the path algebra (arrows do not compose)")]
    TrivialMonomial(String),
    #[error("relation `{a}`/`{b}` must join two loops at one vertex")]
    RelationNotLoops { a: String, b: String },
    #[error("relation `{0}`/`{0}` relates an arrow with itself; write the square as a monomial")]
    SelfRelation(String),
    #[error("relations of both flavors in one ideal (declared {declared}, found {found})")]
    MixedFlavors { declared: Flavor, found: Flavor },
    #[error("field characteristic {0} is neither 0 nor prime")]
    BadCharacteristic(u64),
}

/// Generators as written by a user, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawIdeal {
    /// Declared flavor; inferred from the relations (default commutative)
    /// when absent.
    pub flavor: Option<Flavor>,
    pub monomials: Vec<Vec<String>>,
    pub relations: Vec<RawRelation>,
    pub field_char: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRelation {
    pub flavor: Flavor,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    quiver: Arc<Quiver>,
    flavor: Flavor,
    monomials: BTreeSet<(ArrowId, ArrowId)>,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    field_char: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Resolves names, checks every generator and normalizes to a minimal
/// generating set.
pub fn validate_ideal(
    quiver: Arc<Quiver>,
    raw: &RawIdeal,
) -> Result<(IdealSpec, Vec<Notice>), IdealError> {
    let mut flavor = raw.flavor;
    for rel in &raw.relations {
        match flavor {
            None => flavor = Some(rel.flavor),
            Some(declared) if declared != rel.flavor => {
                return Err(IdealError::MixedFlavors {
                    declared,
                    found: rel.flavor,
                })
            }
            Some(_) => {}
        }
    }
    let pair = |word: &[String]| -> Result<(ArrowId, ArrowId), IdealError> {
        if word.len() != 2 {
            return Err(IdealError::NotQuadratic(word.join("*")));
        }
        Ok((quiver.arrow_id(&word[0])?, quiver.arrow_id(&word[1])?))
    };
    let monomials = raw
        .monomials
        .iter()
        .map(|w| pair(w))
        .collect::<Result<Vec<_>, _>>()?;
    let relations = raw
        .relations
        .iter()
        .map(|r| pair(&r.word))
        .collect::<Result<Vec<_>, _>>()?;
    IdealSpec::new(
        quiver.clone(),
        flavor.unwrap_or(Flavor::Commutative),
        monomials,
        relations,
        raw.field_char,
    )
}

impl IdealSpec {
    /// Builds a validated ideal from arrow ids. Relation pairs may be given
    /// in either order.
    pub fn new(
        quiver: Arc<Quiver>,
        flavor: Flavor,
        monomials: impl IntoIterator<Item = (ArrowId, ArrowId)>,
        relations: impl IntoIterator<Item = (ArrowId, ArrowId)>,
        field_char: u64,
    ) -> Result<(IdealSpec, Vec<Notice>), IdealError> {
        if field_char != 0 && !is_prime(field_char) {
            return Err(IdealError::BadCharacteristic(field_char));
        }
        let mut notices = Vec::new();
        let mut mono = BTreeSet::new();
        for (a, b) in monomials {
            if !quiver.composable(a, b) {
                return Err(IdealError::TrivialMonomial(quiver.render_word(&[a, b])));
            }
            mono.insert((a, b));
        }
        let mut rels = BTreeSet::new();
        for (a, b) in relations {
            if a == b {
                return Err(IdealError::SelfRelation(quiver.arrow_name(a).to_string()));
            }
            if !quiver.is_loop(a) || !quiver.is_loop(b) || quiver.source(a) != quiver.source(b) {
                return Err(IdealError::RelationNotLoops {
                    a: quiver.arrow_name(a).to_string(),
                    b: quiver.arrow_name(b).to_string(),
                });
            }
            rels.insert((a.min(b), a.max(b)));
        }
        // ab in I together with ab -/+ ba in I forces ba in I.
        let mut dropped = Vec::new();
        for &(a, b) in &rels {
            if mono.contains(&(a, b)) || mono.contains(&(b, a)) {
                mono.insert((a, b));
                mono.insert((b, a));
                dropped.push((a, b));
            }
        }
        for (a, b) in dropped {
            rels.remove(&(a, b));
            notices.push(Notice::new(
                "redundant-relation",
                format!(
                    "relation between {0} and {1} is redundant next to a monomial generator; replaced by monomials {0}*{1} and {1}*{0}",
                    quiver.arrow_name(a),
                    quiver.arrow_name(b)
                ),
            ));
        }
        let mut flavor = flavor;
        if field_char == 2 && flavor == Flavor::Anticommutative {
            flavor = Flavor::Commutative;
            notices.push(Notice::new(
                "char-2-fold",
                "in characteristic 2 anticommutativity relations coincide with commutativity relations; treating the ideal as commutative",
            ));
        }
        Ok((
            IdealSpec {
                quiver,
                flavor,
                monomials: mono,
                relations: rels,
                field_char,
            },
            notices,
        ))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn field_char(&self) -> u64 {
        self.field_char
    }

    pub fn monomials(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.monomials
    }

    /// Relation pairs, each stored with the smaller arrow first.
    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    pub fn is_monomial(&self, a: ArrowId, b: ArrowId) -> bool {
        self.monomials.contains(&(a, b))
    }

    pub fn related(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a.min(b), a.max(b)))
    }

    /// `ab = 0` in `KQ/I`: either not a path or a monomial generator.
    pub fn product_vanishes(&self, a: ArrowId, b: ArrowId) -> bool {
        !self.quiver.composable(a, b) || self.is_monomial(a, b)
    }

    /// No relations at all: a quadratic monomial ideal.
    pub fn is_monomial_ideal(&self) -> bool {
        self.relations.is_empty()
    }

    /// No square `a²` among the generators.
    pub fn is_square_free(&self) -> bool {
        !self.monomials.iter().any(|&(a, b)| a == b)
    }

    /// Every loop `a` has `a²` among the generators (vacuous without loops).
    pub fn contains_all_nonzero_squares(&self) -> bool {
        self.quiver
            .arrow_ids()
            .filter(|&a| self.quiver.is_loop(a))
            .all(|a| self.is_monomial(a, a))
    }

    /// Loops whose square survives in `KQ/I`; these become square generators
    /// of the orthogonal ideal.
    pub fn surviving_squares(&self) -> Vec<ArrowId> {
        self.quiver
            .arrow_ids()
            .filter(|&a| self.quiver.is_loop(a) && !self.is_monomial(a, a))
            .collect()
    }

    /// The orthogonal ideal: relation signs flipped, and every nonzero
    /// quadratic path outside `I` without a relation becomes a monomial
    /// generator. This includes surviving squares `a²`.
    pub fn orthogonal(&self) -> IdealSpec {
        let q = &self.quiver;
        let mut monomials = BTreeSet::new();
        for a in q.arrow_ids() {
            for b in q.arrow_ids() {
                if q.composable(a, b) && !self.is_monomial(a, b) && !self.related(a, b) {
                    monomials.insert((a, b));
                }
            }
        }
        let flavor = if self.field_char == 2 {
            Flavor::Commutative
        } else {
            self.flavor.flipped()
        };
        IdealSpec {
            quiver: self.quiver.clone(),
            flavor,
            monomials,
            relations: self.relations.clone(),
            field_char: self.field_char,
        }
    }

    /// Notice for reports that build the orthogonal ideal: which squares the
    /// square convention added, if any.
    pub fn square_convention_notice(&self) -> Option<Notice> {
        let squares = self.surviving_squares();
        if squares.is_empty() {
            return None;
        }
        let listing: Vec<String> = squares
            .iter()
            .map(|&a| self.quiver.render_word(&[a, a]))
            .collect();
        Some(Notice::new(
            "square-convention",
            format!(
                "squares outside the ideal ({}) are taken as monomial generators of the orthogonal ideal",
                listing.join(", ")
            ),
        ))
    }

    /// `I_x` over the subquiver `Q_x`: the generators whose arrows all lie
    /// in `Q_x`.
    pub fn restrict(&self, x: VertexId) -> Result<IdealSpec, IdealError> {
        let sub = Arc::new(self.quiver.vertex_subquiver(x)?);
        let map = |a: ArrowId| sub.arrow_id(self.quiver.arrow_name(a)).ok();
        let monomials = self
            .monomials
            .iter()
            .filter_map(|&(a, b)| Some((map(a)?, map(b)?)))
            .collect();
        let relations = self
            .relations
            .iter()
            .filter_map(|&(a, b)| {
                let (a, b) = (map(a)?, map(b)?);
                Some((a.min(b), a.max(b)))
            })
            .collect();
        Ok(IdealSpec {
            quiver: sub,
            flavor: self.flavor,
            monomials,
            relations,
            field_char: self.field_char,
        })
    }

    /// `I_o` over the opposite quiver: every generator word reversed.
    pub fn opposite(&self) -> IdealSpec {
        IdealSpec {
            quiver: Arc::new(self.quiver.opposite()),
            flavor: self.flavor,
            monomials: self.monomials.iter().map(|&(a, b)| (b, a)).collect(),
            relations: self.relations.clone(),
            field_char: self.field_char,
        }
    }

    /// Same ideal with a different characteristic (re-validated).
    pub fn with_field_char(&self, field_char: u64) -> Result<(IdealSpec, Vec<Notice>), IdealError> {
        IdealSpec::new(
            self.quiver.clone(),
            self.flavor,
            self.monomials.iter().copied(),
            self.relations.iter().copied(),
            field_char,
        )
    }

    /// Generators rendered as text: monomials first, then relations.
    pub fn generator_strings(&self) -> Vec<String> {
        let q = &self.quiver;
        let sign = match self.flavor {
            Flavor::Commutative => '-',
            Flavor::Anticommutative => '+',
        };
        self.monomials
            .iter()
            .map(|&(a, b)| q.render_word(&[a, b]))
            .chain(self.relations.iter().map(|&(a, b)| {
                format!("{}{sign}{}", q.render_word(&[a, b]), q.render_word(&[b, a]))
            }))
            .collect()
    }
}

/// How Koszulity of a presentation is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KoszulBasis {
    /// The user asserts the algebra is Koszul.
    Asserted,
    /// Quadratic monomial algebras are Koszul.
    AutoCertifiedMonomial,
    Unknown,
}

/// A quiver algebra `KQ/I` together with what is known about Koszulity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    spec: IdealSpec,
    koszul: KoszulBasis,
}

impl AlgebraPresentation {
    /// Monomial ideals are certified regardless of the assertion.
    pub fn new(spec: IdealSpec, koszul_asserted: bool) -> Self {
        let koszul = if spec.is_monomial_ideal() {
            KoszulBasis::AutoCertifiedMonomial
        } else if koszul_asserted {
            KoszulBasis::Asserted
        } else {
            KoszulBasis::Unknown
        };
        AlgebraPresentation { spec, koszul }
    }

    pub(crate) fn with_basis(spec: IdealSpec, koszul: KoszulBasis) -> Self {
        AlgebraPresentation { spec, koszul }
    }

    pub fn spec(&self) -> &IdealSpec {
        &self.spec
    }

    pub fn quiver(&self) -> &Quiver {
        self.spec.quiver()
    }

    pub fn koszul(&self) -> KoszulBasis {
        self.koszul
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(spec: &IdealSpec) -> BTreeSet<String> {
        spec.generator_strings().into_iter().collect()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn example_one_validates() {
        let spec = fixtures::pair_with_exit();
        assert_eq!(spec.flavor(), Flavor::Commutative);
        assert_eq!(names(&spec), set(&["a*a", "b*b", "a*c", "a*b-b*a"]));
    }

    #[test]
    fn redundant_relation_becomes_monomials() {
        let q = Arc::new(fixtures::two_loops_and_exit());
        let raw = RawIdeal {
            flavor: None,
            monomials: vec![vec!["a".into(), "b".into()]],
            relations: vec![RawRelation {
                flavor: Flavor::Commutative,
                word: vec!["a".into(), "b".into()],
            }],
            field_char: 0,
        };
        let (spec, notices) = validate_ideal(q, &raw).unwrap();
        assert_eq!(names(&spec), set(&["a*b", "b*a"]));
        assert!(spec.relations().is_empty());
        assert_eq!(notices[0].code, "redundant-relation");
    }

    #[test]
    fn rejects_bad_generators() {
        let q = Arc::new(fixtures::two_loops_and_exit());
        let rel = |a: &str, b: &str| RawIdeal {
            relations: vec![RawRelation {
                flavor: Flavor::Commutative,
                word: vec![a.into(), b.into()],
            }],
            ..RawIdeal::default()
        };
        assert!(matches!(
            validate_ideal(q.clone(), &rel("a", "c")),
            Err(IdealError::RelationNotLoops { .. })
        ));
        assert!(matches!(
            validate_ideal(q.clone(), &rel("a", "a")),
            Err(IdealError::SelfRelation(_))
        ));
        let mono = |w: &[&str]| RawIdeal {
            monomials: vec![w.iter().map(|s| s.to_string()).collect()],
            ..RawIdeal::default()
        };
        assert!(matches!(
            validate_ideal(q.clone(), &mono(&["c", "a"])),
            Err(IdealError::TrivialMonomial(_))
        ));
        assert!(matches!(
            validate_ideal(q.clone(), &mono(&["a", "a", "c"])),
            Err(IdealError::NotQuadratic(_))
        ));
        assert!(matches!(
            validate_ideal(q.clone(), &mono(&["a", "z"])),
            Err(IdealError::Quiver(QuiverError::UnknownArrow(_)))
        ));
        let mixed = RawIdeal {
            flavor: Some(Flavor::Commutative),
            relations: vec![RawRelation {
                flavor: Flavor::Anticommutative,
                word: vec!["a".into(), "b".into()],
            }],
            ..RawIdeal::default()
        };
        assert!(matches!(
            validate_ideal(q.clone(), &mixed),
            Err(IdealError::MixedFlavors { .. })
        ));
        let bad_char = RawIdeal {
            field_char: 6,
            ..RawIdeal::default()
        };
        assert_eq!(
            validate_ideal(q, &bad_char),
            Err(IdealError::BadCharacteristic(6))
        );
    }

    #[test]
    fn char_two_folds_anti_into_commutative() {
        let q = Arc::new(fixtures::two_loops_and_exit());
        let raw = RawIdeal {
            relations: vec![RawRelation {
                flavor: Flavor::Anticommutative,
                word: vec!["a".into(), "b".into()],
            }],
            field_char: 2,
            ..RawIdeal::default()
        };
        let (spec, notices) = validate_ideal(q, &raw).unwrap();
        assert_eq!(spec.flavor(), Flavor::Commutative);
        assert!(notices.iter().any(|n| n.code == "char-2-fold"));
    }

    #[test]
    fn orthogonal_ideals_of_the_first_examples() {
        let perp = fixtures::pair_with_exit().orthogonal();
        assert_eq!(perp.flavor(), Flavor::Anticommutative);
        assert_eq!(names(&perp), set(&["a*b+b*a", "b*c"]));

        let perp = fixtures::monomial_cycle().orthogonal();
        assert_eq!(names(&perp), set(&["a*c", "d*b", "d*c"]));

        let perp = fixtures::four_loops_open().orthogonal();
        assert_eq!(perp.flavor(), Flavor::Commutative);
        assert_eq!(
            names(&perp),
            set(&["c*d", "d*c", "a*b-b*a", "a*c-c*a", "a*d-d*a", "b*c-c*b", "b*d-d*b"])
        );
    }

    #[test]
    fn orthogonal_of_the_anti_example_restores_example_one() {
        let cen = fixtures::square_central();
        let back = cen.orthogonal();
        assert_eq!(back, fixtures::pair_with_exit());
        assert_eq!(back.orthogonal(), cen);
    }

    #[test]
    fn restriction_to_vertices() {
        let spec = fixtures::pair_with_exit();
        let x = spec.quiver().vertex_id("x").unwrap();
        let y = spec.quiver().vertex_id("y").unwrap();
        assert_eq!(names(&spec.restrict(x).unwrap()), names(&spec));
        let iy = spec.restrict(y).unwrap();
        assert!(iy.monomials().is_empty() && iy.relations().is_empty());
        assert_eq!(iy.quiver().arrow_count(), 1);

        let ce = fixtures::infinite_center();
        let iy = ce.restrict(ce.quiver().vertex_id("y").unwrap()).unwrap();
        assert!(iy.monomials().is_empty() && iy.relations().is_empty());
        assert!(ce.restrict(VertexId(9)).is_err());
    }

    #[test]
    fn opposite_reverses_generator_words() {
        let op = fixtures::pair_with_exit().opposite();
        assert_eq!(
            names(&op),
            set(&["a°*a°", "b°*b°", "c°*a°", "a°*b°-b°*a°"])
        );
        let op = fixtures::monomial_cycle().opposite();
        assert_eq!(
            names(&op),
            set(&["a°*a°", "b°*b°", "b°*a°", "a°*b°", "d°*c°", "a°*d°", "c°*b°"])
        );
        assert_eq!(op.opposite(), fixtures::monomial_cycle());
    }

    #[test]
    fn square_predicates() {
        assert!(!fixtures::pair_with_exit().is_square_free());
        assert!(fixtures::square_central().is_square_free());
        assert!(fixtures::infinite_center().is_square_free());
        assert!(fixtures::four_loops_open().contains_all_nonzero_squares());
        assert!(!fixtures::infinite_center().contains_all_nonzero_squares());
        let no_loops = Arc::new(Quiver::new(["x", "y"], [("c", "x", "y")]).unwrap());
        let (zero, _) = IdealSpec::new(no_loops, Flavor::Commutative, [], [], 0).unwrap();
        assert!(zero.contains_all_nonzero_squares());
    }

    #[test]
    fn presentations_certify_monomial_ideals() {
        let p = AlgebraPresentation::new(fixtures::monomial_cycle(), false);
        assert_eq!(p.koszul(), KoszulBasis::AutoCertifiedMonomial);
        let p = AlgebraPresentation::new(fixtures::pair_with_exit(), false);
        assert_eq!(p.koszul(), KoszulBasis::Unknown);
        let p = AlgebraPresentation::new(fixtures::pair_with_exit(), true);
        assert_eq!(p.koszul(), KoszulBasis::Asserted);
    }
}
