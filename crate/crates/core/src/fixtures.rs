//! Small algebras shared by the unit tests, built directly from ids so that
//! they do not depend on the text format.

use std::sync::Arc;

use crate::ideal::{Flavor, IdealSpec};
use crate::quiver::Quiver;

pub fn build(quiver: Quiver, flavor: Flavor, monomials: &[&str], relations: &[&str]) -> IdealSpec {
    let q = Arc::new(quiver);
    let pair = |w: &str| {
        let word = q.parse_word(w).unwrap();
        (word[0], word[1])
    };
    let mono: Vec<_> = monomials.iter().map(|w| pair(w)).collect();
    let rels: Vec<_> = relations.iter().map(|w| pair(w)).collect();
    IdealSpec::new(q.clone(), flavor, mono, rels, 0).unwrap().0
}

/// Loops `a`, `b` at `x` and an arrow `c: x -> y`.
pub fn two_loops_and_exit() -> Quiver {
    Quiver::new(
        ["x", "y"],
        [("a", "x", "x"), ("b", "x", "x"), ("c", "x", "y")],
    )
    .unwrap()
}

pub fn two_loops_and_cycle() -> Quiver {
    Quiver::new(
        ["x", "y"],
        [("a", "x", "x"), ("b", "x", "x"), ("c", "x", "y"), ("d", "y", "x")],
    )
    .unwrap()
}

pub fn four_loops() -> Quiver {
    Quiver::new(
        ["x"],
        [("a", "x", "x"), ("b", "x", "x"), ("c", "x", "x"), ("d", "x", "x")],
    )
    .unwrap()
}

pub fn pair_with_exit() -> IdealSpec {
    build(two_loops_and_exit(), Flavor::Commutative, &["a*a", "b*b", "a*c"], &["a*b"])
}

pub fn monomial_cycle() -> IdealSpec {
    build(
        two_loops_and_cycle(),
        Flavor::Commutative,
        &["a*a", "b*b", "a*b", "b*a", "c*d", "d*a", "b*c"],
        &[],
    )
}

pub fn four_loops_open() -> IdealSpec {
    build(
        four_loops(),
        Flavor::Anticommutative,
        &["a*a", "b*b", "c*c", "d*d"],
        &["a*b", "a*c", "a*d", "b*c", "b*d"],
    )
}

pub fn four_loops_closed() -> IdealSpec {
    build(
        four_loops(),
        Flavor::Anticommutative,
        &["a*a", "b*b", "c*c", "d*d", "c*d", "d*c"],
        &["a*b", "a*c", "a*d", "b*c", "b*d"],
    )
}

pub fn square_central() -> IdealSpec {
    build(two_loops_and_exit(), Flavor::Anticommutative, &["b*c"], &["a*b"])
}

pub fn infinite_center() -> IdealSpec {
    let q = Quiver::new(
        ["x", "y"],
        [
            ("a", "x", "x"),
            ("b", "x", "x"),
            ("c", "x", "x"),
            ("d", "x", "x"),
            ("e", "x", "y"),
        ],
    )
    .unwrap();
    build(
        q,
        Flavor::Commutative,
        &["b*c", "d*b", "a*e", "c*e"],
        &["a*b", "a*c", "a*d", "c*d"],
    )
}
