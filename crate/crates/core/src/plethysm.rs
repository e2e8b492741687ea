//! The explicit equivariant tableau construction.
//!
//! Fix a rank r >= 2 and a >= 1, and let V have basis e_1..e_r. A tableau
//! here is an r x 2a array whose every column is a permutation of {1..r},
//! with the first column constrained to be even; its sign is the product of
//! the column signs. Row j of a tableau multiplies out to the degree-2a
//! monomial `prod_i e_{T(j,i)}`, and the tableau contributes its sign times
//! the multiset of its r row monomials, an element of Sym^r(Sym^2a V). The
//! sum over all tableaux is the distinguished vector W.
//!
//! W spans the image of a map of GL(V)-modules from the 2a-th power of the
//! determinant character, so `g . W = det(g)^{2a} W` for every integer
//! matrix g; composing with the symmetric multiplication to Sym^{2ar} V
//! kills it. Both facts are verified here by direct computation, along with
//! the sign structure of the construction itself.
//!
//! Enumeration size is (r!)^{2a}/2, so every entry point takes a cap and
//! refuses infeasible parameters with the exact count.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default feasibility cap on the number of tableaux.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Exponent vector of a degree-2a monomial in e_1..e_r.
pub type ExpVec = Vec<u8>;

/// Canonical basis element of Sym^r(Sym^2a V): the multiset of r row
/// monomials, stored as lexicographically sorted exponent vectors.
pub type MultisetKey = Vec<ExpVec>;

/// One enumerated tableau: the column permutations (0-based images indexed
/// by row) and the product of the column signs.
pub struct Tableau<'a> {
    pub columns: &'a [Vec<usize>],
    pub sign: i64,
}

impl Tableau<'_> {
    /// The value in row `j`, column `i` (0-based).
    pub fn entry(&self, j: usize, i: usize) -> usize {
        self.columns[i][j]
    }
}

/// Which parity the first column is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstColumn {
    Even,
    Odd,
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of 0..r in lexicographic order, with signs.
fn signed_permutations(r: usize) -> Vec<(Vec<usize>, i64)> {
    use itertools::Itertools;
    (0..r)
        .permutations(r)
        .map(|p| {
            let s = perm_sign(&p);
            (p, s)
        })
        .collect()
}

/// `(r!)^{2a} / 2`, the number of tableaux.
pub fn tableau_count(r: usize, a: usize) -> BigInt {
    let mut fact = BigInt::one();
    for i in 2..=r {
        fact *= i;
    }
    let mut count = BigInt::one();
    for _ in 0..2 * a {
        count *= &fact;
    }
    count / 2
}

fn check_params(r: usize, a: usize, cap: u64) -> Result<()> {
    if r < 2 || a < 1 {
        return Err(Error::PreconditionFailed(
            "tableau parameters need r >= 2 and a >= 1".into(),
        ));
    }
    let count = tableau_count(r, a);
    if count > BigInt::from(cap) {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    Ok(())
}

/// Stream every tableau exactly once, in deterministic order: columns run
/// through permutations lexicographically, the first column through the
/// selected parity class only.
pub fn for_each_tableau(
    r: usize,
    a: usize,
    first: FirstColumn,
    cap: u64,
    f: &mut dyn FnMut(Tableau<'_>),
) -> Result<()> {
    check_params(r, a, cap)?;
    let perms = signed_permutations(r);
    let first_perms: Vec<usize> = perms
        .iter()
        .enumerate()
        .filter(|(_, (_, s))| match first {
            FirstColumn::Even => *s == 1,
            FirstColumn::Odd => *s == -1,
        })
        .map(|(i, _)| i)
        .collect();
    let cols = 2 * a;
    // Odometer over column choices; index 0 runs over first_perms.
    let mut choice = vec![0usize; cols];
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(cols);
    loop {
        columns.clear();
        let mut sign = 1i64;
        for (i, &c) in choice.iter().enumerate() {
            let idx = if i == 0 { first_perms[c] } else { c };
            let (p, s) = &perms[idx];
            columns.push(p.clone());
            sign *= s;
        }
        f(Tableau {
            columns: &columns,
            sign,
        });
        // Advance, least-significant column last (so the order is
        // lexicographic in the column tuple).
        let mut i = cols;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            let limit = if i == 0 { first_perms.len() } else { perms.len() };
            choice[i] += 1;
            if choice[i] < limit {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// A sparse integer vector in Sym^r(Sym^2a V), keyed by canonical multisets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauSum {
    pub r: usize,
    pub a: usize,
    terms: BTreeMap<MultisetKey, BigInt>,
}

impl TableauSum {
    fn empty(r: usize, a: usize) -> TableauSum {
        TableauSum {
            r,
            a,
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, key: MultisetKey, val: BigInt) {
        if val.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += val;
        if entry.is_zero() {
            // Re-borrow to remove; BTreeMap has no entry-remove.
            let dead: Vec<MultisetKey> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultisetKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &MultisetKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> TableauSum {
        TableauSum {
            r: self.r,
            a: self.a,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> TableauSum {
        if k.is_zero() {
            return TableauSum::empty(self.r, self.a);
        }
        TableauSum {
            r: self.r,
            a: self.a,
            terms: self.terms.iter().map(|(key, v)| (key.clone(), v * k)).collect(),
        }
    }

    /// The multiset `{e_1^{2a}, ..., e_r^{2a}}`.
    pub fn distinguished_key(r: usize, a: usize) -> MultisetKey {
        let mut key: MultisetKey = (0..r)
            .map(|j| {
                let mut v = vec![0u8; r];
                v[j] = 2 * a as u8;
                v
            })
            .collect();
        key.sort();
        key
    }

    pub fn distinguished_coefficient(&self) -> BigInt {
        self.coefficient(&TableauSum::distinguished_key(self.r, self.a))
    }

    /// Gcd of all coefficients (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in self.terms.values() {
            g = g.gcd(v);
        }
        g
    }

    pub fn has_unit_coefficient(&self) -> bool {
        self.terms.values().any(|v| v.abs().is_one())
    }
}

fn image_with(r: usize, a: usize, first: FirstColumn, cap: u64, twist_column: Option<usize>) -> Result<TableauSum> {
    let mut w = TableauSum::empty(r, a);
    for_each_tableau(r, a, first, cap, &mut |t| {
        let mut key: MultisetKey = Vec::with_capacity(r);
        for j in 0..r {
            let mut row = vec![0u8; r];
            for (i, col) in t.columns.iter().enumerate() {
                let mut v = col[j];
                if twist_column == Some(i) {
                    // Transpose the values 0 and 1 in this column.
                    v = match v {
                        0 => 1,
                        1 => 0,
                        other => other,
                    };
                }
                row[v] += 1;
            }
            key.push(row);
        }
        key.sort();
        w.insert(key, BigInt::from(t.sign));
    })?;
    Ok(w)
}

/// The tableau sum W.
pub fn phi_image(r: usize, a: usize, cap: u64) -> Result<TableauSum> {
    image_with(r, a, FirstColumn::Even, cap, None)
}

/// The same sum built over tableaux whose first column is odd. Relabeling
/// rows by a transposition gives a sign-preserving bijection between the two
/// tableau classes, so this equals W itself.
pub fn phi_image_odd_first_column(r: usize, a: usize, cap: u64) -> Result<TableauSum> {
    image_with(r, a, FirstColumn::Odd, cap, None)
}

/// Rebuild W but transpose two values in the chosen column throughout,
/// keeping every tableau's native sign. The twist inverts each column
/// permutation's sign, so the result is exactly -W: the construction is
/// alternating in each column's set of variables.
pub fn column_twisted_image(r: usize, a: usize, column: usize, cap: u64) -> Result<TableauSum> {
    if column >= 2 * a {
        return Err(Error::PreconditionFailed(format!(
            "column {column} out of range for 2a = {}",
            2 * a
        )));
    }
    image_with(r, a, FirstColumn::Even, cap, Some(column))
}

/// An elementary integer matrix, the building block of the random
/// equivariance tests. `to_matrix` uses the substitution convention: column
/// j of the matrix holds the image of e_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// `e_j -> e_j + c e_k` (j != k); determinant 1.
    RowAdd { j: usize, k: usize, c: i64 },
    /// `e_j <-> e_k`; determinant -1.
    Swap(usize, usize),
    /// `e_j -> -e_j`; determinant -1.
    Negate(usize),
}

impl Elementary {
    pub fn det(&self) -> i64 {
        match self {
            Elementary::RowAdd { .. } => 1,
            _ => -1,
        }
    }

    pub fn to_matrix(&self, r: usize) -> Vec<Vec<i64>> {
        let mut g = vec![vec![0i64; r]; r];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 1;
        }
        match *self {
            Elementary::RowAdd { j, k, c } => g[k][j] = c,
            Elementary::Swap(j, k) => {
                g[j][j] = 0;
                g[k][k] = 0;
                g[j][k] = 1;
                g[k][j] = 1;
            }
            Elementary::Negate(j) => g[j][j] = -1,
        }
        g
    }

    fn describe(&self) -> String {
        match *self {
            Elementary::RowAdd { j, k, c } => format!("e{} -> e{} + ({c})e{}", j + 1, j + 1, k + 1),
            Elementary::Swap(j, k) => format!("e{} <-> e{}", j + 1, k + 1),
            Elementary::Negate(j) => format!("e{0} -> -e{0}", j + 1),
        }
    }
}

/// Apply one elementary substitution, exploiting its sparsity.
pub fn apply_elementary(w: &TableauSum, f: &Elementary) -> TableauSum {
    let mut out = TableauSum::empty(w.r, w.a);
    match *f {
        Elementary::Negate(j) => {
            for (key, coeff) in &w.terms {
                let total: u32 = key.iter().map(|row| row[j] as u32).sum();
                let val = if total % 2 == 1 { -coeff } else { coeff.clone() };
                out.insert(key.clone(), val);
            }
        }
        Elementary::Swap(j, k) => {
            for (key, coeff) in &w.terms {
                let mut new_key: MultisetKey = key
                    .iter()
                    .map(|row| {
                        let mut row = row.clone();
                        row.swap(j, k);
                        row
                    })
                    .collect();
                new_key.sort();
                out.insert(new_key, coeff.clone());
            }
        }
        Elementary::RowAdd { j, k, c } => {
            // (e_j + c e_k)^{n_j} expands binomially; all other variables
            // pass through. Expansions are memoized per distinct row.
            let mut memo: HashMap<ExpVec, Vec<(ExpVec, BigInt)>> = HashMap::new();
            for (key, coeff) in &w.terms {
                let mut acc: Vec<(MultisetKey, BigInt)> = vec![(Vec::new(), coeff.clone())];
                for row in key {
                    let expansion = memo.entry(row.clone()).or_insert_with(|| {
                        let n = row[j];
                        let mut terms = Vec::with_capacity(n as usize + 1);
                        let mut binom = BigInt::one();
                        let mut cpow = BigInt::one();
                        for t in 0..=n {
                            let mut new_row = row.clone();
                            new_row[j] = n - t;
                            new_row[k] += t;
                            terms.push((new_row, &binom * &cpow));
                            binom = binom * (n - t) as i64 / (t as i64 + 1);
                            cpow *= c;
                        }
                        terms
                    });
                    let mut next: BTreeMap<MultisetKey, BigInt> = BTreeMap::new();
                    for (partial, pc) in &acc {
                        for (mono, mc) in expansion.iter() {
                            let mut grown = partial.clone();
                            let pos = grown.binary_search(mono).unwrap_or_else(|e| e);
                            grown.insert(pos, mono.clone());
                            *next.entry(grown).or_insert_with(BigInt::zero) += pc * mc;
                        }
                    }
                    acc = next.into_iter().collect();
                }
                for (key, val) in acc {
                    out.insert(key, val);
                }
            }
        }
    }
    out
}

/// Dense homogeneous polynomial in e_1..e_r, used for one row's expansion.
type Poly = BTreeMap<ExpVec, BigInt>;

fn poly_mul(a: &Poly, b: &Poly, r: usize) -> Poly {
    let mut out = Poly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k = vec![0u8; r];
            for i in 0..r {
                k[i] = ka[i] + kb[i];
            }
            *out.entry(k).or_insert_with(BigInt::zero) += va * vb;
        }
    }
    out
}

/// `(sum_k g[k][j] e_k)^n`.
fn linear_pow(g: &[Vec<i64>], j: usize, n: u8, r: usize) -> Poly {
    let mut linear = Poly::new();
    for k in 0..r {
        if g[k][j] != 0 {
            let mut key = vec![0u8; r];
            key[k] = 1;
            linear.insert(key, BigInt::from(g[k][j]));
        }
    }
    let mut acc = Poly::new();
    acc.insert(vec![0u8; r], BigInt::one());
    for _ in 0..n {
        acc = poly_mul(&acc, &linear, r);
    }
    acc
}

/// Substitute `e_j -> sum_k g[k][j] e_k` throughout and re-canonicalize.
/// `g` is an arbitrary square integer matrix of size r.
pub fn apply_gl(w: &TableauSum, g: &[Vec<i64>]) -> Result<TableauSum> {
    let r = w.r;
    if g.len() != r || g.iter().any(|row| row.len() != r) {
        return Err(Error::PreconditionFailed(format!(
            "matrix must be {r} x {r}"
        )));
    }
    let mut memo: HashMap<ExpVec, Poly> = HashMap::new();
    let mut out = TableauSum::empty(w.r, w.a);
    for (key, coeff) in &w.terms {
        let mut acc: BTreeMap<MultisetKey, BigInt> = BTreeMap::new();
        acc.insert(Vec::new(), coeff.clone());
        for row in key {
            let expansion = memo.entry(row.clone()).or_insert_with(|| {
                let mut p = Poly::new();
                p.insert(vec![0u8; r], BigInt::one());
                for (j, &n) in row.iter().enumerate() {
                    if n > 0 {
                        p = poly_mul(&p, &linear_pow(g, j, n, r), r);
                    }
                }
                p
            });
            let mut next: BTreeMap<MultisetKey, BigInt> = BTreeMap::new();
            for (partial, pc) in &acc {
                for (mono, mc) in expansion.iter() {
                    let mut grown = partial.clone();
                    let pos = grown.binary_search(mono).unwrap_or_else(|e| e);
                    grown.insert(pos, mono.clone());
                    *next.entry(grown).or_insert_with(BigInt::zero) += pc * mc;
                }
            }
            acc = next;
        }
        for (key, val) in acc {
            out.insert(key, val);
        }
    }
    Ok(out)
}

/// Integer matrix product (substitution convention).
pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i64;
            for (k, bk) in b.iter().enumerate() {
                s += a[i][k] * bk[j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Outcome of the randomized equivariance suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub trials: usize,
    pub passed: bool,
    /// Human-readable factorizations of any failing group elements.
    pub failures: Vec<String>,
}

/// For each trial, draw a product of at most 8 elementary matrices (row
/// additions with |c| <= 3, swaps, negations), apply it factor by factor,
/// and compare with `det(g)^{2a} W`. The factor-by-factor application is
/// the action axiom, itself tested directly elsewhere.
pub fn check_equivariance(
    r: usize,
    a: usize,
    trials: usize,
    seed: u64,
    cap: u64,
) -> Result<EquivarianceReport> {
    let w = phi_image(r, a, cap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let nf = rng.gen_range(1..=8usize);
        let mut det = 1i64;
        let mut factors = Vec::with_capacity(nf);
        for _ in 0..nf {
            let f = loop {
                match rng.gen_range(0..10u8) {
                    0..=5 => {
                        let j = rng.gen_range(0..r);
                        let k = rng.gen_range(0..r);
                        if j == k {
                            continue;
                        }
                        let mut c = rng.gen_range(-3i64..=3);
                        if c == 0 {
                            c = 1;
                        }
                        break Elementary::RowAdd { j, k, c };
                    }
                    6..=8 => {
                        let j = rng.gen_range(0..r);
                        let k = rng.gen_range(0..r);
                        if j == k {
                            continue;
                        }
                        break Elementary::Swap(j, k);
                    }
                    _ => break Elementary::Negate(rng.gen_range(0..r)),
                }
            };
            det *= f.det();
            factors.push(f);
        }
        // g = f_1 f_2 ... f_n acts by applying the last factor first.
        let mut acted = w.clone();
        for f in factors.iter().rev() {
            acted = apply_elementary(&acted, f);
        }
        // det(g)^{2a} with det = +-1 and 2a even is always 1.
        let expected = w.scale(&BigInt::from(det).pow(2 * a as u32));
        if acted != expected {
            failures.push(
                factors
                    .iter()
                    .map(Elementary::describe)
                    .collect::<Vec<_>>()
                    .join(", "),
            );
        }
    }
    Ok(EquivarianceReport {
        trials,
        passed: failures.is_empty(),
        failures,
    })
}

/// Symmetric multiplication Sym^r(Sym^2a V) -> Sym^{2ar} V: multiply the
/// monomials of each multiset together (add the exponent vectors), extended
/// linearly.
pub fn sym_multiplication(w: &TableauSum) -> BTreeMap<ExpVec, BigInt> {
    let mut out: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
    for (key, coeff) in &w.terms {
        let mut total = vec![0u8; w.r];
        for row in key {
            for (t, v) in total.iter_mut().zip(row) {
                *t += v;
            }
        }
        let entry = out.entry(total).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            out.retain(|_, v| !v.is_zero());
        }
    }
    out
}

/// The composition applied to W. Every value appears once per column, so
/// every multiset multiplies to `(e_1 ... e_r)^{2a}` and the coefficient is
/// the plain sign sum over all tableaux, which vanishes for r >= 2: any
/// unconstrained column sums signs to zero.
pub fn compose_phi_then_multiply(r: usize, a: usize, cap: u64) -> Result<BTreeMap<ExpVec, BigInt>> {
    Ok(sym_multiplication(&phi_image(r, a, cap)?))
}

/// The data the inclusion claim rests on: the enumeration size, the
/// coefficient at the distinguished multiset `{e_1^{2a},...,e_r^{2a}}`, the
/// gcd of all coefficients, and whether any coefficient is a unit. A content
/// of 1 certifies that W spans a split direct summand over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub count: BigInt,
    pub distinguished_coefficient: BigInt,
    pub content: BigInt,
    pub has_unit_coefficient: bool,
}

pub fn report_injectivity(r: usize, a: usize, cap: u64) -> Result<InjectivityReport> {
    let w = phi_image(r, a, cap)?;
    Ok(InjectivityReport {
        count: tableau_count(r, a),
        distinguished_coefficient: w.distinguished_coefficient(),
        content: w.content(),
        has_unit_coefficient: w.has_unit_coefficient(),
    })
}
