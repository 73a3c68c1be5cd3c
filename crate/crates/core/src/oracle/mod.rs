//! Ground truth by exact linear algebra over the truncated quotient.
//!
//! Nothing here uses transposition classes: bases, membership and centers
//! come from elimination alone, so they can be held against the rewriting
//! and theorem engines.

pub mod algebra;
pub mod check;
pub mod linalg;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::center::{CenterBasis, CenterSource, CentralElement};
use crate::ideal::IdealSpec;
use crate::notice::Notice;
use crate::quiver::{ArrowId, Quiver, VertexId};
use algebra::{full_path_elimination, Truncated, Word};
use linalg::{Field, PrimeField, Rationals, Vector};

pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Largest number of paths of a single length the oracle will take on.
pub const PATH_BUDGET: u128 = 250_000;

/// Number of paths of each length `0..=n`.
pub fn path_counts(q: &Quiver, n: usize) -> Vec<u128> {
    let mut per_vertex = vec![1u128; q.vertex_count()];
    let mut out = vec![q.vertex_count() as u128];
    for _ in 0..n {
        let mut next = vec![0u128; q.vertex_count()];
        for a in q.arrows() {
            next[a.target.0] = next[a.target.0].saturating_add(per_vertex[a.source.0]);
        }
        out.push(next.iter().fold(0u128, |s, &x| s.saturating_add(x)));
        per_vertex = next;
    }
    out
}

/// The largest `D' ≤ requested` such that paths of length `D' + headroom`
/// stay within budget, with a notice when it had to be lowered.
pub fn guard_degree(q: &Quiver, requested: usize, headroom: usize) -> (usize, Option<Notice>) {
    let counts = path_counts(q, requested + headroom);
    let mut d = requested;
    while d > 1 && counts[d + headroom] > PATH_BUDGET {
        d -= 1;
    }
    let notice = (d < requested).then(|| {
        Notice::new(
            "degree-lowered",
            format!(
                "degree bound lowered from {requested} to {d}: {} paths of length {} exceed the budget of {PATH_BUDGET}",
                counts[requested + headroom],
                requested + headroom
            ),
        )
    });
    (d, notice)
}

#[derive(Debug, Clone)]
enum Inner {
    Rational(Truncated<Rationals>),
    Prime(Truncated<PrimeField>),
}

macro_rules! dispatch {
    ($self:expr, $alg:ident => $body:expr) => {
        match &$self.inner {
            Inner::Rational($alg) => $body,
            Inner::Prime($alg) => $body,
        }
    };
}

/// The algebra truncated at a degree bound, over `Q` or `Z/p` according to
/// the ideal's characteristic.
#[derive(Debug, Clone)]
pub struct Oracle {
    inner: Inner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FgDegree {
    pub degree: usize,
    pub center_dimension: usize,
    /// Rank of the span of products of central elements of lower positive
    /// degree.
    pub decomposable_rank: usize,
    pub new_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FgEvidence {
    pub max_degree: usize,
    pub degrees: Vec<FgDegree>,
}

impl FgEvidence {
    pub fn new_generator_degrees(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .filter(|d| d.new_generators > 0)
            .map(|d| d.degree)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotenceRecord {
    pub word: Word,
    pub power: usize,
    pub nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub max_degree: usize,
    /// `bases[n]` for `n ≥ 1`; `bases[0]` is empty and `dims[0]` counts
    /// vertices.
    pub bases: Vec<Vec<Word>>,
    pub dims: Vec<usize>,
    /// Every degree agrees with elimination over the full path list.
    pub self_check: bool,
}

fn terms<F: Field>(alg: &Truncated<F>, n: usize, v: &Vector<F::Elem>) -> Vec<(String, Word)> {
    v.iter()
        .map(|(&i, x)| (alg.field().render(x), alg.basis(n)[i].clone()))
        .collect()
}

fn basepoint(q: &Quiver, words: &[&Word]) -> Option<VertexId> {
    let x = q.source(*words.first()?.first()?);
    words
        .iter()
        .all(|w| w.iter().all(|&a| q.is_loop(a) && q.source(a) == x))
        .then_some(x)
}

fn center_generic<F: Field>(alg: &Truncated<F>, upto: usize) -> CenterBasis {
    let spec = alg.spec();
    let q = spec.quiver();
    let mut basis = CenterBasis::new(CenterSource::Oracle, spec.flavor(), upto, q.components().len());
    for d in 1..=upto {
        for v in alg.center_slice(d) {
            let terms = terms(alg, d, &v);
            let words: Vec<&Word> = terms.iter().map(|(_, w)| w).collect();
            let basepoint = basepoint(q, &words);
            basis.push(d, CentralElement { terms, basepoint });
        }
    }
    basis
}

fn fg_generic<F: Field>(alg: &Truncated<F>, upto: usize) -> FgEvidence {
    let slices: Vec<Vec<Vector<F::Elem>>> = (0..=upto)
        .map(|d| if d == 0 { Vec::new() } else { alg.center_slice(d) })
        .collect();
    let degrees = (1..=upto)
        .map(|d| {
            let mut products = Vec::new();
            for i in 1..d {
                for u in &slices[i] {
                    for v in &slices[d - i] {
                        products.push(alg.multiply(u, i, v, d - i));
                    }
                }
            }
            let decomposable_rank = alg.rank(products);
            let center_dimension = slices[d].len();
            FgDegree {
                degree: d,
                center_dimension,
                decomposable_rank,
                new_generators: center_dimension - decomposable_rank,
            }
        })
        .collect();
    FgEvidence {
        max_degree: upto,
        degrees,
    }
}

fn multisets(gens: &[Word], from: usize, degree: usize, prefix: &mut Word, out: &mut Vec<Word>) {
    if degree == 0 {
        out.push(prefix.clone());
        return;
    }
    for (i, g) in gens.iter().enumerate().skip(from) {
        if g.len() <= degree {
            let len = prefix.len();
            prefix.extend_from_slice(g);
            multisets(gens, i, degree - g.len(), prefix, out);
            prefix.truncate(len);
        }
    }
}

fn uncovered_generic<F: Field>(alg: &Truncated<F>, gens: &[Word], upto: usize, even_only: bool) -> Vec<usize> {
    let q = alg.spec().quiver();
    let mut out = Vec::new();
    for k in 1..=upto {
        if even_only && k % 2 == 1 {
            continue;
        }
        let slice = alg.center_slice(k);
        if slice.is_empty() {
            continue;
        }
        let mut words = Vec::new();
        multisets(gens, 0, k, &mut Vec::new(), &mut words);
        let products: Vec<Vector<F::Elem>> = words
            .iter()
            .filter(|w| q.is_path(w))
            .map(|w| alg.nf(w))
            .collect();
        let base = alg.rank(products.clone());
        if alg.rank(products.into_iter().chain(slice)) > base {
            out.push(k);
        }
    }
    out
}

impl Oracle {
    /// Builds degrees `1..=max_degree` with no budget check.
    pub fn new(spec: &IdealSpec, max_degree: usize) -> Self {
        assert!(max_degree >= 1);
        let inner = match spec.field_char() {
            0 => Inner::Rational(Truncated::new(Rationals, spec, max_degree)),
            p => Inner::Prime(Truncated::new(PrimeField::new(p), spec, max_degree)),
        };
        Oracle { inner }
    }

    pub fn max_degree(&self) -> usize {
        dispatch!(self, alg => alg.max_degree())
    }

    pub fn spec(&self) -> &IdealSpec {
        dispatch!(self, alg => alg.spec())
    }

    pub fn dim(&self, n: usize) -> usize {
        dispatch!(self, alg => alg.dim(n))
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|n| self.dim(n)).collect()
    }

    pub fn basis(&self, n: usize) -> Vec<Word> {
        dispatch!(self, alg => alg.basis(n).to_vec())
    }

    /// Coordinates of a word in the quotient basis, as rendered scalars.
    pub fn normal_form(&self, word: &[ArrowId]) -> Vec<(String, Word)> {
        dispatch!(self, alg => terms(alg, word.len(), &alg.nf(word)))
    }

    /// Whether a monomial vanishes in `KQ/I`.
    pub fn is_zero(&self, word: &[ArrowId]) -> bool {
        dispatch!(self, alg => alg.nf(word).is_empty())
    }

    /// Whether `u - s·v` lies in `I` for monomials of equal length.
    pub fn binomial_in_ideal(&self, u: &[ArrowId], v: &[ArrowId], s: i64) -> bool {
        dispatch!(self, alg => {
            let f = alg.field();
            let mut x = alg.nf(u);
            linalg::axpy(f, &mut x, &f.embed(-s), &alg.nf(v));
            x.is_empty()
        })
    }

    /// Center in degrees `1..max_degree` (one degree of headroom is needed
    /// for the commutator equations).
    pub fn center(&self) -> CenterBasis {
        dispatch!(self, alg => center_generic(alg, self.max_degree() - 1))
    }

    pub fn fg_evidence(&self) -> FgEvidence {
        dispatch!(self, alg => fg_generic(alg, self.max_degree() - 1))
    }

    /// Degrees up to `max_degree - 1` (even ones only, if asked) where the
    /// center is not spanned by products of the given central words.
    pub fn uncovered_center_degrees(&self, gens: &[Word], even_only: bool) -> Vec<usize> {
        dispatch!(self, alg => uncovered_generic(alg, gens, self.max_degree() - 1, even_only))
    }

    /// `w^k ≠ 0` for `k = ⌊D / deg w⌋`, `D` the truncation degree.
    pub fn nilpotence(&self, words: &[Word]) -> Vec<NilpotenceRecord> {
        let d = self.max_degree();
        words
            .iter()
            .map(|w| {
                let power = d / w.len();
                let big: Word = w.iter().copied().cycle().take(power * w.len()).collect();
                NilpotenceRecord {
                    word: w.clone(),
                    power,
                    nonzero: power == 0 || !self.is_zero(&big),
                }
            })
            .collect()
    }
}

pub fn quotient_basis_upto(spec: &IdealSpec, max_degree: usize) -> QuotientBasis {
    let oracle = Oracle::new(spec, max_degree);
    let bases: Vec<Vec<Word>> = (0..=max_degree)
        .map(|n| if n == 0 { Vec::new() } else { oracle.basis(n) })
        .collect();
    let self_check = (1..=max_degree).all(|n| {
        let raw = match spec.field_char() {
            0 => full_path_elimination(Rationals, spec, n),
            p => full_path_elimination(PrimeField::new(p), spec, n),
        };
        raw == bases[n]
    });
    QuotientBasis {
        max_degree,
        dims: oracle.dims(),
        bases,
        self_check,
    }
}

/// Center in degrees `1..=max_degree`.
pub fn oracle_center_upto(spec: &IdealSpec, max_degree: usize) -> CenterBasis {
    Oracle::new(spec, max_degree + 1).center()
}

/// Every monomial element of `basis` checked for nonzero powers up to
/// degree `max_degree`.
pub fn oracle_nilpotence_check(
    spec: &IdealSpec,
    basis: &CenterBasis,
    max_degree: usize,
) -> Vec<NilpotenceRecord> {
    let words: BTreeSet<Word> = basis
        .elements()
        .filter_map(|(_, e)| e.monomial().cloned())
        .collect();
    let words: Vec<Word> = words.into_iter().collect();
    Oracle::new(spec, max_degree).nilpotence(&words)
}

pub fn oracle_fg_evidence(spec: &IdealSpec, max_degree: usize) -> FgEvidence {
    Oracle::new(spec, max_degree + 1).fg_evidence()
}
