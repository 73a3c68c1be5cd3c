//! The truncated algebra `(KQ/I)_{≤D}` built degree by degree.
//!
//! For a quadratic algebra `A = T(V)/(R)` one has
//! `A_{n+1} = (A_n ⊗ V) / (A_{n-1} ⊗ R)`. Columns of the degree `n+1`
//! system are pairs (basis word of degree `n`, arrow), ordered by the
//! concatenated word; the pivot of a row is its largest column, so the
//! surviving columns are the lexicographically least words.

use std::collections::{BTreeMap, HashMap};

use super::linalg::{axpy, Echelon, Field, Vector};
use crate::ideal::IdealSpec;
use crate::quiver::ArrowId;

pub type Word = Vec<ArrowId>;

#[derive(Debug, Clone)]
pub struct Truncated<F: Field> {
    field: F,
    spec: IdealSpec,
    max_degree: usize,
    /// `basis[n]` for `n ≥ 1`, sorted; `basis[0]` is unused.
    basis: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
    /// `ext[n + 1][(f, b)]` is the image of `f·b` in degree `n + 1`, for
    /// `f` a degree-`n` basis index.
    ext: Vec<Products<F::Elem>>,
}

/// Images of `f·b` keyed by basis index and arrow.
type Products<E> = HashMap<(usize, ArrowId), Vector<E>>;

fn index_of(words: &[Word]) -> HashMap<Word, usize> {
    words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect()
}

impl<F: Field> Truncated<F> {
    pub fn new(field: F, spec: &IdealSpec, max_degree: usize) -> Self {
        let q = spec.quiver();
        let degree_one: Vec<Word> = q.arrow_ids().map(|a| vec![a]).collect();
        let mut alg = Truncated {
            field,
            spec: spec.clone(),
            max_degree,
            basis: vec![Vec::new(), degree_one.clone()],
            index: vec![HashMap::new(), index_of(&degree_one)],
            ext: vec![HashMap::new(), HashMap::new()],
        };
        for n in 1..max_degree {
            alg.extend(n);
        }
        alg.basis.truncate(max_degree + 1);
        alg.index.truncate(max_degree + 1);
        alg
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn spec(&self) -> &IdealSpec {
        &self.spec
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self, n: usize) -> usize {
        if n == 0 {
            self.spec.quiver().vertex_count()
        } else {
            self.basis[n].len()
        }
    }

    pub fn basis(&self, n: usize) -> &[Word] {
        &self.basis[n]
    }

    fn word_end(&self, w: &[ArrowId]) -> crate::quiver::VertexId {
        self.spec.quiver().target(*w.last().unwrap())
    }

    fn extend(&mut self, n: usize) {
        let q = self.spec.quiver().clone();
        let f = self.field.clone();
        let mut cols: Vec<(Word, usize, ArrowId)> = Vec::new();
        for (i, w) in self.basis[n].iter().enumerate() {
            let end = self.word_end(w);
            for b in q.arrow_ids().filter(|&b| q.source(b) == end) {
                let mut word = w.clone();
                word.push(b);
                cols.push((word, i, b));
            }
        }
        cols.sort();
        let col_of: HashMap<(usize, ArrowId), usize> = cols
            .iter()
            .enumerate()
            .map(|(c, (_, i, b))| ((*i, *b), c))
            .collect();

        // `u ⊗ b` as a row over the columns.
        let tensor = |u: &Vector<F::Elem>, b: ArrowId, sign: &F::Elem, row: &mut Vector<F::Elem>| {
            let mut t = Vector::new();
            for (&g, x) in u {
                if let Some(&c) = col_of.get(&(g, b)) {
                    t.insert(c, x.clone());
                }
            }
            axpy(&f, row, sign, &t);
        };
        let eps = f.embed(self.spec.flavor().relation_sign());
        let one = f.one();
        let mut ech = Echelon::new(f.clone());
        let unit = |i: usize| Vector::from([(i, f.one())]);
        let prefixes: Vec<Option<usize>> = if n == 1 {
            vec![None]
        } else {
            (0..self.basis[n - 1].len()).map(Some).collect()
        };
        for prefix in prefixes {
            // Image of `prefix · a` in degree n.
            let head = |a: ArrowId| -> Option<Vector<F::Elem>> {
                match prefix {
                    None => Some(unit(self.index[1][&vec![a]])),
                    Some(p) => self.ext[n].get(&(p, a)).cloned(),
                }
            };
            for &(a, b) in self.spec.monomials() {
                if let Some(u) = head(a) {
                    let mut row = Vector::new();
                    tensor(&u, b, &one, &mut row);
                    ech.insert(row);
                }
            }
            for &(a, b) in self.spec.relations() {
                if let (Some(ua), Some(ub)) = (head(a), head(b)) {
                    let mut row = Vector::new();
                    tensor(&ua, b, &one, &mut row);
                    tensor(&ub, a, &eps, &mut row);
                    ech.insert(row);
                }
            }
        }

        let rows = ech.reduced_rows();
        let free: Vec<usize> = (0..cols.len()).filter(|c| !rows.contains_key(c)).collect();
        let new_index: HashMap<usize, usize> =
            free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut ext = HashMap::new();
        for (c, (_, i, b)) in cols.iter().enumerate() {
            let image = match rows.get(&c) {
                None => unit(new_index[&c]),
                Some(row) => row
                    .iter()
                    .filter(|(&k, _)| k != c)
                    .map(|(k, x)| (new_index[k], f.neg(x)))
                    .collect(),
            };
            ext.insert((*i, *b), image);
        }
        let words: Vec<Word> = free.iter().map(|&c| cols[c].0.clone()).collect();
        self.index.push(index_of(&words));
        self.basis.push(words);
        self.ext.push(ext);
    }

    /// Coordinates of a word of degree `1..=D`; zero if it is not a path or
    /// lies in `I`.
    pub fn nf(&self, word: &[ArrowId]) -> Vector<F::Elem> {
        assert!(!word.is_empty() && word.len() <= self.max_degree);
        let mut v: Vector<F::Elem> = Vector::from([(self.index[1][&vec![word[0]]], self.field.one())]);
        for (k, &b) in word.iter().enumerate().skip(1) {
            v = self.times_arrow(&v, k, b);
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// `v · b` for `v` of degree `n`.
    pub fn times_arrow(&self, v: &Vector<F::Elem>, n: usize, b: ArrowId) -> Vector<F::Elem> {
        let mut out = Vector::new();
        for (&g, x) in v {
            if let Some(img) = self.ext[n + 1].get(&(g, b)) {
                axpy(&self.field, &mut out, x, img);
            }
        }
        out
    }

    /// `a · v` for `v` of degree `n`.
    pub fn arrow_times(&self, a: ArrowId, v: &Vector<F::Elem>, n: usize) -> Vector<F::Elem> {
        let mut out = Vector::new();
        for (&g, x) in v {
            let mut word = vec![a];
            word.extend_from_slice(&self.basis[n][g]);
            axpy(&self.field, &mut out, x, &self.nf(&word));
        }
        out
    }

    /// Product of homogeneous elements of degrees `i` and `j`, `i + j ≤ D`.
    pub fn multiply(
        &self,
        u: &Vector<F::Elem>,
        i: usize,
        v: &Vector<F::Elem>,
        j: usize,
    ) -> Vector<F::Elem> {
        let mut out = Vector::new();
        for (&g, x) in u {
            for (&h, y) in v {
                let mut word = self.basis[i][g].clone();
                word.extend_from_slice(&self.basis[j][h]);
                let coef = self.field.mul(x, y);
                axpy(&self.field, &mut out, &coef, &self.nf(&word));
            }
        }
        out
    }

    /// Solution space of `az = za`, `ez = ze` in degree `d < D`, as vectors
    /// over the degree-`d` basis.
    pub fn center_slice(&self, d: usize) -> Vec<Vector<F::Elem>> {
        assert!(d >= 1 && d < self.max_degree);
        let q = self.spec.quiver();
        let mut blocks: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.basis[d].iter().enumerate() {
            if q.source(w[0]) == self.word_end(w) {
                let mut key = w.clone();
                key.sort();
                blocks.entry(key).or_default().push(i);
            }
        }
        let mut out = Vec::new();
        for members in blocks.values() {
            let mut equations: BTreeMap<(ArrowId, usize), Vector<F::Elem>> = BTreeMap::new();
            for (local, &g) in members.iter().enumerate() {
                let unit = Vector::from([(g, self.field.one())]);
                for a in q.arrow_ids() {
                    let mut diff = self.arrow_times(a, &unit, d);
                    let right = self.times_arrow(&unit, d, a);
                    axpy(&self.field, &mut diff, &self.field.embed(-1), &right);
                    for (j, x) in diff {
                        equations.entry((a, j)).or_default().insert(local, x);
                    }
                }
            }
            let mut ech = Echelon::new(self.field.clone());
            for row in equations.into_values() {
                ech.insert(row);
            }
            for x in ech.nullspace(members.len()) {
                out.push(x.into_iter().map(|(l, c)| (members[l], c)).collect());
            }
        }
        out
    }

    /// Rank of a family of degree-`n` vectors.
    pub fn rank(&self, vectors: impl IntoIterator<Item = Vector<F::Elem>>) -> usize {
        let mut ech = Echelon::new(self.field.clone());
        for v in vectors {
            ech.insert(v);
        }
        ech.rank()
    }
}

/// Degree-`d` basis by elimination over every path of length `d` against
/// every `p·g·q` with `g` a generator.
pub fn full_path_elimination<F: Field>(field: F, spec: &IdealSpec, d: usize) -> Vec<Word> {
    let q = spec.quiver();
    let mut paths: Vec<Vec<Word>> = vec![vec![Vec::new()]];
    for n in 1..=d {
        let mut next = Vec::new();
        for w in &paths[n - 1] {
            for a in q.arrow_ids() {
                if w.last().is_none_or(|&l| q.composable(l, a)) {
                    let mut x = w.clone();
                    x.push(a);
                    next.push(x);
                }
            }
        }
        next.sort();
        paths.push(next);
    }
    let index = index_of(&paths[d]);
    let eps = field.embed(spec.flavor().relation_sign());
    let mut ech = Echelon::new(field.clone());
    for left in 0..=d.saturating_sub(2) {
        if d < 2 {
            break;
        }
        let right = d - 2 - left;
        for p in &paths[left] {
            for r in &paths[right] {
                let col = |a: ArrowId, b: ArrowId| {
                    let mut w = p.clone();
                    w.extend([a, b]);
                    w.extend_from_slice(r);
                    index.get(&w).copied()
                };
                for &(a, b) in spec.monomials() {
                    if let Some(c) = col(a, b) {
                        ech.insert(Vector::from([(c, field.one())]));
                    }
                }
                for &(a, b) in spec.relations() {
                    if let (Some(c1), Some(c2)) = (col(a, b), col(b, a)) {
                        ech.insert(Vector::from([(c1, field.one()), (c2, eps.clone())]));
                    }
                }
            }
        }
    }
    paths[d]
        .iter()
        .enumerate()
        .filter(|(c, _)| !ech.is_pivot(*c))
        .map(|(_, w)| w.clone())
        .collect()
}
