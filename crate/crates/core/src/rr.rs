//! Riemann-Roch machinery: Todd classes, Euler characteristics, Hilbert
//! polynomials, and the asymptotic coefficient computation on projective
//! bundles.
//!
//! A [`Space`] pairs a ring with the Todd class of its tangent bundle, so
//! `euler_char` is just `integral(ch(E) . todd)`. The Todd class of a bundle
//! is assembled from the power sums of its Chern roots: with
//! `Q(x) = x/(1 - exp(-x))` and `log Q = sum L_j x^j`, multiplicativity gives
//! `td(E) = exp(sum_j L_j p_j(E))` where `p_j = j! ch_j`. The projective
//! bundle of `E` gets its Todd class from the relative Euler sequence:
//! `td(P(E)) = pullback(td(base)) . td(dual(E) pulled back, twisted by xi)`,
//! the trivial sub contributing the factor 1.

use std::sync::Arc;

use num::traits::{One, Zero};

use crate::bundle::Bundle;
use crate::chow::{ChowRing, Class, RingKind};
use crate::error::{Error, Result};
use crate::rat::{display, factorial, int, Rat};

/// Coefficients `1/(k+1)!` with alternating signs: the series
/// `(1 - exp(-x))/x`, whose inverse is `Q`.
fn q_denominator(len: usize) -> Vec<Rat> {
    (0..len)
        .map(|k| {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            sign / factorial(k as u64 + 1)
        })
        .collect()
}

/// Multiplicative inverse of a power series with constant term 1.
fn series_inv(a: &[Rat]) -> Vec<Rat> {
    debug_assert!(a[0].is_one());
    let mut v = vec![Rat::zero(); a.len()];
    v[0] = Rat::one();
    for j in 1..a.len() {
        let mut acc = Rat::zero();
        for i in 1..=j {
            acc -= &a[i] * &v[j - i];
        }
        v[j] = acc;
    }
    v
}

/// Logarithm of a power series with constant term 1.
fn series_log(a: &[Rat]) -> Vec<Rat> {
    debug_assert!(a[0].is_one());
    let len = a.len();
    let mut x = a.to_vec();
    x[0] = Rat::zero();
    let mut acc = vec![Rat::zero(); len];
    let mut xp = x.clone();
    for j in 1..len {
        let sign = if j % 2 == 1 { int(1) } else { int(-1) };
        let c = sign / int(j as i64);
        for (a, b) in acc.iter_mut().zip(&xp) {
            *a += &c * b;
        }
        // xp <- xp * x, truncated.
        let mut next = vec![Rat::zero(); len];
        for i in 0..len {
            if xp[i].is_zero() {
                continue;
            }
            for k in 0..len - i {
                if !x[k].is_zero() {
                    next[i + k] += &xp[i] * &x[k];
                }
            }
        }
        xp = next;
    }
    acc
}

/// The coefficients of `Q(x) = x/(1 - exp(-x))` up to (excluding) `len`.
fn q_series(len: usize) -> Vec<Rat> {
    series_inv(&q_denominator(len))
}

/// Todd class of projective n-space: `Q(h)^(n+1)` truncated at degree n.
pub fn todd_pn(ring: &Arc<ChowRing>) -> Result<Class> {
    let RingKind::Projective { n } = ring.kind() else {
        return Err(Error::PreconditionFailed(
            "todd_pn needs a projective-space ring".into(),
        ));
    };
    let h = Class::generator(ring, "h")?;
    let q = q_series(n + 1);
    let mut qh = Class::zero(ring);
    let mut hp = Class::one(ring);
    for (k, c) in q.iter().enumerate() {
        if k > 0 {
            hp = hp.try_mul(&h)?;
        }
        qh = qh.try_add(&hp.scale(c))?;
    }
    Ok(qh.pow(*n as u32 + 1))
}

/// Todd class of a bundle from its Chern character:
/// `exp(sum_j L_j . j! . ch_j)` with `L_j` the coefficients of `log Q`.
pub fn todd_of_bundle(e: &Bundle) -> Result<Class> {
    e.rank_int()?;
    let ring = e.ring();
    let d = ring.dimension() as usize;
    let lq = series_log(&q_series(d + 1));
    let ch = e.ch()?;
    let mut arg = Class::zero(ring);
    for j in 1..=d {
        if lq[j].is_zero() {
            continue;
        }
        arg = arg.try_add(&ch[j].scale(&(&lq[j] * factorial(j as u64))))?;
    }
    arg.exp()
}

/// A ring together with the Todd class of its tangent bundle.
#[derive(Clone, Debug)]
pub struct Space {
    ring: Arc<ChowRing>,
    todd: Class,
}

impl Space {
    /// Projective n-space.
    pub fn projective(n: usize) -> Space {
        let ring = ChowRing::projective_space(n);
        let todd = todd_pn(&ring).expect("projective ring");
        Space { ring, todd }
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn todd(&self) -> &Class {
        &self.todd
    }

    /// The projectivization of a bundle over this space, with its Todd class
    /// from the relative Euler sequence.
    pub fn projective_bundle(&self, e: &Bundle) -> Result<Space> {
        if !Arc::ptr_eq(e.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let pring = e.projectivize()?;
        let xi = xi_class(&pring)?;
        let rel = e
            .dual()
            .pullback_to(&pring)?
            .tensor(&Bundle::line(&xi)?)?;
        let todd = self
            .todd
            .pullback_to(&pring)?
            .try_mul(&todd_of_bundle(&rel)?)?;
        Ok(Space { ring: pring, todd })
    }
}

/// The relative hyperplane class of a projective-bundle ring.
pub fn xi_class(ring: &Arc<ChowRing>) -> Result<Class> {
    let RingKind::Bundle { xi, .. } = ring.kind() else {
        return Err(Error::PreconditionFailed(
            "expected a projective-bundle ring".into(),
        ));
    };
    let name = ring.generators()[*xi].name.clone();
    Class::generator(ring, &name)
}

/// Euler characteristic by Riemann-Roch: `integral(ch(E) . todd)`.
pub fn euler_char(e: &Bundle, space: &Space) -> Result<Rat> {
    if !Arc::ptr_eq(e.ring(), &space.ring) {
        return Err(Error::RingMismatch);
    }
    e.ch_total()?.try_mul(&space.todd)?.integrate()
}

/// A polynomial in the twisting parameter, exact rational coefficients,
/// constant term first. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rat>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> HilbertPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `m^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, m: i64) -> Rat {
        let m = int(m);
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &m + c;
        }
        acc
    }

    pub fn scale(&self, q: &Rat) -> HilbertPolynomial {
        HilbertPolynomial::new(self.coeffs.iter().map(|c| c * q).collect())
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", display(c))?,
                1 => write!(f, "{}*m", display(c))?,
                _ => write!(f, "{}*m^{}", display(c), k)?,
            }
        }
        Ok(())
    }
}

/// `chi(E(mH))` as a polynomial in m: the coefficient of `m^k` is
/// `integral(ch(E) . H^k . todd) / k!`.
pub fn hilbert_polynomial(e: &Bundle, h: &Class, space: &Space) -> Result<HilbertPolynomial> {
    if !Arc::ptr_eq(e.ring(), &space.ring) {
        return Err(Error::RingMismatch);
    }
    if *h != h.component(1) {
        return Err(Error::PreconditionFailed(
            "polarization must be homogeneous of degree 1".into(),
        ));
    }
    let n = space.ring.dimension() as usize;
    let base = e.ch_total()?.try_mul(&space.todd)?;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut hk = Class::one(&space.ring);
    for k in 0..=n {
        if k > 0 {
            hk = hk.try_mul(h)?;
        }
        coeffs.push(base.try_mul(&hk)?.integrate()? / factorial(k as u64));
    }
    Ok(HilbertPolynomial::new(coeffs))
}

/// Whether `(1/rank) chi(E(mH))` equals `chi(O(mH))` as polynomials.
pub fn normalized_hilbert_equal(e: &Bundle, h: &Class, space: &Space) -> Result<bool> {
    let he = hilbert_polynomial(e, h, space)?;
    let ho = hilbert_polynomial(&Bundle::trivial(&space.ring, 1)?, h, space)?;
    Ok(he.scale(&(int(1) / e.rank())) == ho)
}

/// `chi` of `O(m)` on the projectivization of `E` over a polarized surface,
/// twisted by the pullback of `L`: coefficients of
/// `integral over P(E) of exp(m xi + pullback c1(L)) . td(P(E))` in m.
pub fn projective_bundle_chi(e: &Bundle, l: &Class, space: &Space) -> Result<HilbertPolynomial> {
    if space.ring.dimension() != 2 {
        return Err(Error::PreconditionFailed(
            "asymptotic computation runs over a surface base".into(),
        ));
    }
    if *l != l.component(1) {
        return Err(Error::PreconditionFailed(
            "twisting class must be homogeneous of degree 1".into(),
        ));
    }
    let pspace = space.projective_bundle(e)?;
    let xi = xi_class(&pspace.ring)?;
    let fixed = l
        .pullback_to(&pspace.ring)?
        .exp()?
        .try_mul(&pspace.todd)?;
    let top = pspace.ring.dimension() as usize;
    let mut coeffs = Vec::with_capacity(top + 1);
    let mut xik = Class::one(&pspace.ring);
    for k in 0..=top {
        if k > 0 {
            xik = xik.try_mul(&xi)?;
        }
        coeffs.push(fixed.try_mul(&xik)?.integrate()? / factorial(k as u64));
    }
    Ok(HilbertPolynomial::new(coeffs))
}

/// For `E` of rank r with `c_1 = c_2 = 0` over a polarized surface, the
/// coefficients of `m^(r+1)` and `m^r` in the projective-bundle
/// characteristic must vanish; returns that verdict.
pub fn check_asymptotic_vanishing(e: &Bundle, l: &Class, space: &Space) -> Result<bool> {
    require_chern_trivial_surface(e)?;
    let r = e.rank_int()?;
    let hp = projective_bundle_chi(e, l, space)?;
    Ok(hp.coeff(r + 1).is_zero() && hp.coeff(r).is_zero())
}

/// The same vanishing over a base without a degree functional: the
/// coefficient of `m^k` is the ring element `xi^k/k! . exp(pullback l) .
/// td(relative tangent)`, and for `k = r, r+1` it must vanish identically
/// as a class. The base Todd factor is omitted: over a formal base it is
/// not defined, and it multiplies classes that are already zero.
pub fn check_asymptotic_vanishing_symbolic(e: &Bundle, l: &Class) -> Result<bool> {
    require_chern_trivial_surface(e)?;
    let r = e.rank_int()?;
    let pring = e.projectivize()?;
    let xi = xi_class(&pring)?;
    let rel = e
        .dual()
        .pullback_to(&pring)?
        .tensor(&Bundle::line(&xi)?)?;
    let fixed = l
        .pullback_to(&pring)?
        .exp()?
        .try_mul(&todd_of_bundle(&rel)?)?;
    let mut ok = true;
    for k in [r, r + 1] {
        let coeff = fixed.try_mul(&xi.pow(k as u32))?;
        ok &= coeff.is_zero();
    }
    Ok(ok)
}

fn require_chern_trivial_surface(e: &Bundle) -> Result<()> {
    if e.ring().dimension() != 2 {
        return Err(Error::PreconditionFailed(
            "asymptotic computation runs over a surface base".into(),
        ));
    }
    if !e.chern(1).is_zero() || !e.chern(2).is_zero() {
        return Err(Error::PreconditionFailed(
            "asymptotic vanishing requires c1 = c2 = 0".into(),
        ));
    }
    Ok(())
}
