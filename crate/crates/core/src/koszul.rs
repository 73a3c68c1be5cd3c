//! Koszul duals and finite generation of Hochschild cohomology modulo
//! nilpotence.
//!
//! The dual of `KQ/I` is `KQ^op/(I_o)⊥` with `I_o` the reversed ideal. For a
//! Koszul algebra, `HH*/N` is finitely generated exactly when the center of
//! the dual is, so the verdict is the finite generation verdict on the dual.

use serde::Serialize;
use thiserror::Error;

use crate::center::center_is_trivial_at;
use crate::fingen::{center_finitely_generated, FinGenStatus, FinGenVerdict};
use crate::graph::{is_admissible, Admissibility};
use crate::ideal::{AlgebraPresentation, KoszulBasis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("the ideal is not admissible (cycle {0})")]
    NotAdmissible(String),
}

/// The dual presentation with no admissibility check. A known Koszul
/// algebra has a Koszul dual; quadratic monomial duals certify themselves.
pub fn dual_presentation(pres: &AlgebraPresentation) -> AlgebraPresentation {
    let spec = pres.spec().opposite().orthogonal();
    let basis = if spec.is_monomial_ideal() {
        KoszulBasis::AutoCertifiedMonomial
    } else {
        match pres.koszul() {
            KoszulBasis::Unknown => KoszulBasis::Unknown,
            _ => KoszulBasis::Asserted,
        }
    };
    AlgebraPresentation::with_basis(spec, basis)
}

pub fn koszul_dual(pres: &AlgebraPresentation) -> Result<AlgebraPresentation, KoszulError> {
    match is_admissible(pres.spec()) {
        Admissibility::NotAdmissible { cycle } => Err(KoszulError::NotAdmissible(
            cycle
                .iter()
                .map(|&a| pres.quiver().arrow_name(a))
                .collect::<Vec<_>>()
                .join(" -> "),
        )),
        Admissibility::Admissible { .. } => Ok(dual_presentation(pres)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UndecidedReason {
    KoszulUnknown,
    NotAdmissible,
    CharacteristicTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "kebab-case")]
pub enum HochschildStatus {
    FinitelyGenerated,
    InfinitelyGenerated,
    Undecided(UndecidedReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochschildVerdict {
    pub koszul: KoszulBasis,
    pub dual: Option<AlgebraPresentation>,
    pub status: HochschildStatus,
    /// `HH*/N` is the ground field: the dual has no central elements of
    /// positive degree at any vertex.
    pub trivial: bool,
    /// The finite generation verdict on the dual, with generators as words
    /// in the dual quiver.
    pub dual_center: Option<FinGenVerdict>,
}

pub fn hochschild_fg(pres: &AlgebraPresentation) -> HochschildVerdict {
    let undecided = |reason, dual| HochschildVerdict {
        koszul: pres.koszul(),
        dual,
        status: HochschildStatus::Undecided(reason),
        trivial: false,
        dual_center: None,
    };
    let Ok(dual) = koszul_dual(pres) else {
        return undecided(UndecidedReason::NotAdmissible, None);
    };
    if pres.koszul() == KoszulBasis::Unknown {
        return undecided(UndecidedReason::KoszulUnknown, Some(dual));
    }
    if pres.spec().field_char() == 2 {
        return undecided(UndecidedReason::CharacteristicTwo, Some(dual));
    }
    // The orthogonal of the dual is the reversed ideal, admissible with I.
    let fg = center_finitely_generated(dual.spec()).expect("dual of an admissible ideal");
    let trivial = dual
        .quiver()
        .vertex_ids()
        .all(|x| center_is_trivial_at(dual.spec(), x).expect("dual is square-free").trivial);
    let status = match fg.status {
        FinGenStatus::InfinitelyGenerated => HochschildStatus::InfinitelyGenerated,
        FinGenStatus::FinitelyGenerated | FinGenStatus::Trivial => HochschildStatus::FinitelyGenerated,
    };
    HochschildVerdict {
        koszul: pres.koszul(),
        dual: Some(dual),
        status,
        trivial,
        dual_center: Some(fg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingen::MissingDirection;
    use crate::fixtures;
    use crate::ideal::{Flavor, IdealSpec};
    use std::collections::BTreeSet;

    fn gens(spec: &IdealSpec) -> BTreeSet<String> {
        spec.generator_strings().into_iter().collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn duals_of_the_examples() {
        let d = koszul_dual(&AlgebraPresentation::new(fixtures::pair_with_exit(), true)).unwrap();
        assert_eq!(d.spec().flavor(), Flavor::Anticommutative);
        assert_eq!(gens(d.spec()), set(&["a°*b°+b°*a°", "c°*b°"]));

        let d = koszul_dual(&AlgebraPresentation::new(fixtures::monomial_cycle(), false)).unwrap();
        assert_eq!(gens(d.spec()), set(&["b°*d°", "c°*a°", "c°*d°"]));
        assert_eq!(d.koszul(), KoszulBasis::AutoCertifiedMonomial);

        let d = koszul_dual(&AlgebraPresentation::new(fixtures::four_loops_closed(), true)).unwrap();
        assert_eq!(d.spec().flavor(), Flavor::Commutative);
        assert_eq!(
            gens(d.spec()),
            set(&["a°*b°-b°*a°", "a°*c°-c°*a°", "a°*d°-d°*a°", "b°*c°-c°*b°", "b°*d°-d°*b°"])
        );

        let err = koszul_dual(&AlgebraPresentation::new(fixtures::four_loops_open(), true));
        assert_eq!(err, Err(KoszulError::NotAdmissible("c -> d -> c".into())));
    }

    #[test]
    fn round_trip() {
        for (spec, asserted) in [
            (fixtures::pair_with_exit(), true),
            (fixtures::monomial_cycle(), false),
            (fixtures::four_loops_closed(), true),
            (fixtures::four_loops_open(), false),
        ] {
            let pres = AlgebraPresentation::new(spec, asserted);
            let back = dual_presentation(&dual_presentation(&pres));
            assert_eq!(back.spec(), pres.spec());
        }
    }

    #[test]
    fn hochschild_verdicts() {
        let v = hochschild_fg(&AlgebraPresentation::new(fixtures::pair_with_exit(), true));
        assert_eq!(v.status, HochschildStatus::InfinitelyGenerated);
        let w = v.dual_center.unwrap().witness.unwrap();
        assert_eq!(w.failing_member.0, 0);
        assert_eq!(w.blocking_outsider.0, 2);
        assert_eq!(w.missing, MissingDirection::IntoClique);

        let v = hochschild_fg(&AlgebraPresentation::new(fixtures::monomial_cycle(), false));
        assert_eq!(v.status, HochschildStatus::FinitelyGenerated);
        assert!(v.trivial);
        assert_eq!(v.koszul, KoszulBasis::AutoCertifiedMonomial);

        let v = hochschild_fg(&AlgebraPresentation::new(fixtures::four_loops_closed(), true));
        assert_eq!(v.status, HochschildStatus::FinitelyGenerated);
        assert!(!v.trivial);
        let dual = v.dual.unwrap();
        let names: Vec<String> = v
            .dual_center
            .unwrap()
            .generators
            .iter()
            .map(|w| dual.quiver().render_word(w))
            .collect();
        assert_eq!(names, ["a°", "b°"]);
    }

    #[test]
    fn undecided_cases() {
        let v = hochschild_fg(&AlgebraPresentation::new(fixtures::pair_with_exit(), false));
        assert_eq!(v.status, HochschildStatus::Undecided(UndecidedReason::KoszulUnknown));
        assert!(v.dual.is_some());
        let v = hochschild_fg(&AlgebraPresentation::new(fixtures::four_loops_open(), true));
        assert_eq!(v.status, HochschildStatus::Undecided(UndecidedReason::NotAdmissible));
        let two = fixtures::pair_with_exit().with_field_char(2).unwrap().0;
        let v = hochschild_fg(&AlgebraPresentation::new(two, true));
        assert_eq!(v.status, HochschildStatus::Undecided(UndecidedReason::CharacteristicTwo));
    }
}
