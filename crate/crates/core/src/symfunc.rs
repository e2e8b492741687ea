//! Symmetric-function templates for the splitting principle.
//!
//! Chern classes of `Sym^m E` and `Wedge^k E` are universal polynomials in
//! the Chern classes of `E`. This module computes those polynomials once,
//! as elements of `Q[e_1, ..., e_r]` with `e_i` of weight `i`, by expanding
//! over formal Chern roots and converting back to the elementary basis with
//! leading-term subtraction. Substituting actual classes for the `e_i` is
//! then a ring computation.
//!
//! The conversion walks lex-leading monomials, which for a symmetric input
//! are weakly decreasing exponent vectors; meeting an increasing one means
//! the input was not symmetric, which is a bug in this module, never in the
//! caller's data.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::traits::Zero;

use crate::chow::{Class, ChowRing};
use crate::error::{Error, Result};
use crate::rat::{binomial, factorial, int, Rat};

use std::sync::Arc;

/// Polynomial in the formal Chern roots `x_1..x_r`. Internal representation
/// for template construction.
#[derive(Clone, Debug, PartialEq)]
struct RootPoly {
    r: usize,
    terms: BTreeMap<Vec<u16>, Rat>,
}

impl RootPoly {
    fn zero(r: usize) -> Self {
        RootPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    fn one(r: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; r], int(1));
        RootPoly { r, terms }
    }

    fn add_term(&mut self, mono: Vec<u16>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rat::zero);
        *entry += coeff;
        // cheap cleanup happens in normalize passes below
    }

    fn cleanup(&mut self) {
        self.terms.retain(|_, v| !v.is_zero());
    }

    #[cfg(test)]
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply by `1 + sum_{i in support} x_i`, truncating above degree `d`.
    fn mul_one_plus_linear(&self, support: &[usize], d: u32) -> RootPoly {
        let mut out = self.clone();
        for (mono, coeff) in &self.terms {
            let deg: u32 = mono.iter().map(|e| *e as u32).sum();
            if deg + 1 > d {
                continue;
            }
            for &i in support {
                let mut m = mono.clone();
                m[i] += 1;
                out.add_term(m, coeff.clone());
            }
        }
        out.cleanup();
        out
    }

    fn mul(&self, other: &RootPoly, d: u32) -> RootPoly {
        let mut out = RootPoly::zero(self.r);
        for (ma, ca) in &self.terms {
            let da: u32 = ma.iter().map(|e| *e as u32).sum();
            for (mb, cb) in &other.terms {
                let db: u32 = mb.iter().map(|e| *e as u32).sum();
                if da + db > d {
                    continue;
                }
                let mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(mono, ca * cb);
            }
        }
        out.cleanup();
        out
    }

    fn component(&self, k: u32) -> RootPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.iter().map(|e| *e as u32).sum::<u32>() == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        RootPoly { r: self.r, terms }
    }

    /// Lex-largest monomial; `Vec<u16>` ordering is lexicographic with the
    /// first root most significant.
    fn leading(&self) -> Option<(&Vec<u16>, &Rat)> {
        self.terms.iter().next_back()
    }
}

/// Expansion of `e_k` in the roots: the sum of all k-subsets.
fn elementary(r: usize, k: usize) -> RootPoly {
    let mut out = RootPoly::zero(r);
    for subset in (0..r).combinations(k) {
        let mut mono = vec![0u16; r];
        for i in subset {
            mono[i] = 1;
        }
        out.add_term(mono, int(1));
    }
    out
}

/// A polynomial in the elementary symmetric generators `e_1..e_r`, with
/// `e_i` of weight `i`. These are the universal templates; substituting
/// Chern classes for the `e_i` specializes them to a bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    pub r: usize,
    /// exponent vector of (e_1, ..., e_r) -> coefficient
    pub terms: BTreeMap<Vec<u16>, Rat>,
}

impl SymPoly {
    pub fn zero(r: usize) -> Self {
        SymPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree of a term: `sum (i+1) * exps[i]`.
    pub fn weighted_degree(exps: &[u16]) -> u32 {
        exps.iter()
            .enumerate()
            .map(|(i, e)| (i as u32 + 1) * *e as u32)
            .sum()
    }

    /// Evaluate at rational values for the `e_i`.
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        assert!(vals.len() >= self.r, "need a value for every e_i");
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    term *= &vals[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute classes for the `e_i`. `cs[i]` stands for `e_{i+1}` and
    /// must all live in `ring`.
    pub fn substitute(&self, ring: &Arc<ChowRing>, cs: &[Class]) -> Result<Class> {
        if cs.len() < self.r {
            return Err(Error::PreconditionFailed(format!(
                "substitution needs {} classes, got {}",
                self.r,
                cs.len()
            )));
        }
        let mut acc = Class::zero(ring);
        for (exps, coeff) in &self.terms {
            let mut term = Class::constant(ring, coeff.clone());
            for (i, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    term = term.try_mul(&cs[i])?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

/// Convert a homogeneous symmetric polynomial in the roots to the elementary
/// basis by subtracting the e-product matching the lex-leading term.
fn symmetric_to_elementary(mut p: RootPoly) -> Result<SymPoly> {
    let r = p.r;
    let mut out = SymPoly::zero(r);
    while let Some((lead, coeff)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for w in lead.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InternalSymmetryError(format!(
                    "leading monomial {lead:?} is not dominant; input was not symmetric"
                )));
            }
        }
        // e-exponents from successive differences of the partition
        let mut exps = vec![0u16; r];
        for i in 0..r {
            let next = if i + 1 < r { lead[i + 1] } else { 0 };
            exps[i] = lead[i] - next;
        }
        let mut prod = RootPoly::one(r);
        let dtotal: u32 = lead.iter().map(|e| *e as u32).sum();
        for (i, e) in exps.iter().enumerate() {
            let ei = elementary(r, i + 1);
            for _ in 0..*e {
                prod = prod.mul(&ei, dtotal);
            }
        }
        for (m, c) in &prod.terms {
            p.add_term(m.clone(), -(coeff.clone() * c));
        }
        p.cleanup();
        let entry = out.terms.entry(exps).or_insert_with(Rat::zero);
        *entry += coeff;
    }
    out.terms.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Split a truncated total class in the roots into elementary-basis
/// components `c_1..c_d`.
fn total_to_templates(total: RootPoly, d: u32) -> Result<Vec<SymPoly>> {
    (1..=d)
        .map(|k| symmetric_to_elementary(total.component(k)))
        .collect()
}

/// Rank of `Sym^m` of a rank-`r` bundle.
pub fn sym_rank(m: usize, r: usize) -> Rat {
    binomial((m + r - 1) as u64, (r - 1) as u64)
}

/// Rank of `Wedge^k` of a rank-`r` bundle.
pub fn wedge_rank(k: usize, r: usize) -> Rat {
    binomial(r as u64, k as u64)
}

/// Chern classes `c_1..c_d` of the m-th symmetric power of a rank-`r` bundle
/// as polynomials in `e_i = c_i` of the input. The roots of `Sym^m` are the
/// size-m multiset sums of the input roots.
pub fn chern_of_sym(m: usize, r: usize, d: u32) -> Result<Vec<SymPoly>> {
    let mut total = RootPoly::one(r);
    for multiset in (0..r).combinations_with_replacement(m) {
        total = total.mul_one_plus_linear(&multiset, d);
    }
    total_to_templates(total, d)
}

/// Chern classes `c_1..c_d` of the k-th exterior power of a rank-`r` bundle.
/// The roots are the k-subset sums; `k > r` has no roots at all and is
/// rejected.
pub fn chern_of_wedge(k: usize, r: usize, d: u32) -> Result<Vec<SymPoly>> {
    if k > r {
        return Err(Error::EmptyWedge);
    }
    let mut total = RootPoly::one(r);
    for subset in (0..r).combinations(k) {
        total = total.mul_one_plus_linear(&subset, d);
    }
    total_to_templates(total, d)
}

/// Chern character components `ch_1..ch_d` from Chern classes `c_1..c_d`
/// (classes of one ring, `c[i]` of degree `i+1`). Newton's identities give
/// the power sums `p_k`; `ch_k = p_k / k!`.
pub fn chern_to_character(c: &[Class]) -> Result<Vec<Class>> {
    let d = c.len();
    let mut p: Vec<Class> = Vec::with_capacity(d);
    for k in 1..=d {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
        let ring = c[k - 1].ring().clone();
        let mut acc = Class::zero(&ring);
        for i in 1..k {
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            acc = acc.try_add(&c[i - 1].try_mul(&p[k - 1 - i])?.scale(&sign))?;
        }
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        acc = acc.try_add(&c[k - 1].scale(&(sign * int(k as i64))))?;
        p.push(acc);
    }
    Ok(p
        .into_iter()
        .enumerate()
        .map(|(i, pk)| pk.scale(&(int(1) / factorial(i as u64 + 1))))
        .collect())
}

/// Chern classes `c_1..c_d` from Chern character components `ch_1..ch_d`,
/// inverting Newton's identities.
pub fn character_to_chern(ch: &[Class]) -> Result<Vec<Class>> {
    let d = ch.len();
    let p: Vec<Class> = ch
        .iter()
        .enumerate()
        .map(|(i, chk)| chk.scale(&factorial(i as u64 + 1)))
        .collect();
    let mut c: Vec<Class> = Vec::with_capacity(d);
    for k in 1..=d {
        // k c_k = (-1)^{k-1} (p_k - sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i})
        let mut acc = p[k - 1].clone();
        for i in 1..k {
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            acc = acc.try_sub(&c[i - 1].try_mul(&p[k - 1 - i])?.scale(&sign))?;
        }
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        c.push(acc.scale(&(sign / int(k as i64))));
    }
    Ok(c)
}
