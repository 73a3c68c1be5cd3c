//! Exact sparse linear algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn embed(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn render(&self, x: &Self::Elem) -> String;

    fn one(&self) -> Self::Elem {
        self.embed(1)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn embed(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn inv(&self, x: &BigRational) -> BigRational {
        assert!(!x.is_zero(), "division by zero");
        x.recip()
    }
    fn render(&self, x: &BigRational) -> String {
        if x.is_integer() {
            x.to_integer().to_string()
        } else if x.is_negative() {
            format!("-{}", -x)
        } else {
            x.to_string()
        }
    }
}

/// `Z/p` for a prime `p`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2);
        PrimeField { p }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn embed(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.p as u128) as u64
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.p as u128) as u64
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.p - x) % self.p
    }
    fn inv(&self, x: &u64) -> u64 {
        assert!(*x != 0, "division by zero");
        let (mut base, mut exp, mut acc) = (*x as u128, self.p - 2, 1u128);
        let m = self.p as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u64
    }
    fn render(&self, x: &u64) -> String {
        if *x > self.p / 2 {
            format!("-{}", self.p - x)
        } else {
            x.to_string()
        }
    }
}

pub type Vector<E> = BTreeMap<usize, E>;

/// `v += c * w`, dropping entries that cancel.
pub fn axpy<F: Field>(field: &F, v: &mut Vector<F::Elem>, c: &F::Elem, w: &Vector<F::Elem>) {
    for (&k, x) in w {
        let term = field.mul(c, x);
        match v.get_mut(&k) {
            Some(y) => {
                *y = field.add(y, &term);
                if field.is_zero(y) {
                    v.remove(&k);
                }
            }
            None => {
                if !field.is_zero(&term) {
                    v.insert(k, term);
                }
            }
        }
    }
}

pub fn scale<F: Field>(field: &F, v: &Vector<F::Elem>, c: &F::Elem) -> Vector<F::Elem> {
    let mut out = Vector::new();
    axpy(field, &mut out, c, v);
    out
}

/// Row echelon form where each row is keyed by its largest column and
/// normalized to 1 there.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, Vector<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, mut v: Vector<F::Elem>) -> Vector<F::Elem> {
        let mut bound = usize::MAX;
        loop {
            let next = v
                .range(..bound)
                .rev()
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(&c, x)| (c, x.clone()));
            let Some((c, coef)) = next else { break };
            axpy(&self.field, &mut v, &self.field.neg(&coef), &self.rows[&c]);
            bound = c;
        }
        v
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector<F::Elem>) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next_back() else {
            return false;
        };
        let inv = self.field.inv(lead);
        let row = scale(&self.field, &v, &inv);
        self.rows.insert(pivot, row);
        true
    }

    /// Fully reduced rows: apart from its own pivot, each row is supported
    /// on non-pivot columns only.
    pub fn reduced_rows(&self) -> BTreeMap<usize, Vector<F::Elem>> {
        let mut done = Echelon::new(self.field.clone());
        for (&p, row) in &self.rows {
            let mut tail = row.clone();
            let lead = tail.remove(&p).unwrap();
            let mut tail = done.reduce(tail);
            tail.insert(p, lead);
            done.rows.insert(p, tail);
        }
        done.rows
    }

    /// Basis of `{x : row · x = 0 for every row}` over `ncols` unknowns, one
    /// vector per free column with a 1 there.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vector<F::Elem>> {
        let rows = self.reduced_rows();
        (0..ncols)
            .filter(|c| !rows.contains_key(c))
            .map(|f| {
                let mut x = Vector::new();
                x.insert(f, self.field.one());
                for (&p, row) in &rows {
                    if let Some(r) = row.get(&f) {
                        x.insert(p, self.field.neg(r));
                    }
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_q(entries: &[(usize, i64)]) -> Vector<BigRational> {
        entries.iter().map(|&(k, x)| (k, Rationals.embed(x))).collect()
    }

    #[test]
    fn rank_and_nullspace_over_rationals() {
        let mut e = Echelon::new(Rationals);
        assert!(e.insert(vec_q(&[(0, 1), (1, 1)])));
        assert!(e.insert(vec_q(&[(1, 1), (2, 1)])));
        assert!(!e.insert(vec_q(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace(3);
        assert_eq!(ns, vec![vec_q(&[(0, 1), (1, -1), (2, 1)])]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7);
        assert_eq!(f.mul(&3, &f.inv(&3)), 1);
        assert_eq!(f.embed(-1), 6);
        assert_eq!(f.render(&6), "-1");
        let two = PrimeField::new(2);
        let mut e = Echelon::new(two);
        let row = |xs: &[(usize, i64)]| -> Vector<u64> {
            xs.iter().map(|&(k, x)| (k, two.embed(x))).collect()
        };
        assert!(e.insert(row(&[(0, 1), (1, 1)])));
        assert!(!e.insert(row(&[(0, 1), (1, -1)])));
    }

    #[test]
    fn rational_rendering() {
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(Rationals.render(&half), "-1/2");
        assert_eq!(Rationals.render(&Rationals.embed(-3)), "-3");
    }
}
