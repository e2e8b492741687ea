//! Formal bundles: a rank and a total Chern class over a chosen ring.
//!
//! A bundle here is Chern data, not a sheaf. Honest bundles have a positive
//! integer rank; twisting by a rational degree-1 class produces a *formal
//! twist*, flagged on the value, whose Chern calculus stays exact while
//! operations that need actual fibers (sym, wedge, end) refuse to run.
//!
//! Tensor products are computed in Chern-character coordinates and converted
//! back through Newton's identities; symmetric and exterior powers substitute
//! ring classes into the universal templates of [`crate::symfunc`]; direct
//! sums multiply total Chern classes. All arithmetic is exact.

use std::sync::Arc;

use crate::chow::{ChowRing, Class, RingKind};
use crate::error::{Error, Result};
use crate::rat::{binomial, int, Rat};
use crate::symfunc::{
    character_to_chern, chern_of_sym, chern_of_wedge, chern_to_character, sym_rank, wedge_rank,
};
use num::traits::{One, Signed};

#[derive(Clone, Debug)]
pub struct Bundle {
    ring: Arc<ChowRing>,
    rank: Rat,
    /// Total Chern class; constant term is exactly 1.
    chern: Class,
    formal_twist: bool,
}

impl PartialEq for Bundle {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
            && self.rank == other.rank
            && self.chern == other.chern
            && self.formal_twist == other.formal_twist
    }
}

/// Degree pairings against a polarization, all exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityInvariants {
    /// `c1 . H^{n-1}`.
    pub c1_pairing: Rat,
    /// `c2 . H^{n-2}`.
    pub c2_pairing: Rat,
    /// `(c1^2 - c2) . H^{n-2}`.
    pub c1sq_minus_c2_pairing: Rat,
    /// `(2 r c2 - (r-1) c1^2) . H^{n-2}`.
    pub delta_pairing: Rat,
}

impl Bundle {
    fn mk(ring: Arc<ChowRing>, rank: Rat, chern: Class, formal_twist: bool) -> Bundle {
        debug_assert!(chern.constant_term().is_one());
        Bundle {
            ring,
            rank,
            chern,
            formal_twist,
        }
    }

    /// The trivial bundle of rank `r >= 1`.
    pub fn trivial(ring: &Arc<ChowRing>, r: usize) -> Result<Bundle> {
        if r == 0 {
            return Err(Error::PreconditionFailed("rank must be positive".into()));
        }
        Ok(Bundle::mk(
            Arc::clone(ring),
            int(r as i64),
            Class::one(ring),
            false,
        ))
    }

    /// A line bundle with first Chern class `delta` (homogeneous of degree 1,
    /// zero allowed). Non-integral `delta` marks the result a formal twist.
    pub fn line(delta: &Class) -> Result<Bundle> {
        if *delta != delta.component(1) {
            return Err(Error::PreconditionFailed(
                "a line bundle's class must be homogeneous of degree 1".into(),
            ));
        }
        let total = Class::one(delta.ring()).try_add(delta)?;
        Ok(Bundle::mk(
            delta.ring().clone(),
            int(1),
            total,
            !delta.is_integral(),
        ))
    }

    /// `O(d)` on a projective-space ring.
    pub fn o(ring: &Arc<ChowRing>, d: i64) -> Result<Bundle> {
        let h = hyperplane(ring)?;
        Bundle::line(&h.scale(&int(d)))
    }

    /// A bundle from explicit Chern classes `cs = [c_1, c_2, ...]`, each
    /// homogeneous of its degree. Integral ranks are checked against the
    /// classes (nothing may live above the rank); rational ranks flag the
    /// result as a formal twist.
    pub fn from_chern(ring: &Arc<ChowRing>, rank: Rat, cs: &[Class]) -> Result<Bundle> {
        if !rank.is_positive() {
            return Err(Error::PreconditionFailed("rank must be positive".into()));
        }
        let mut total = Class::one(ring);
        for (i, c) in cs.iter().enumerate() {
            if *c != c.component(i as u32 + 1) {
                return Err(Error::PreconditionFailed(format!(
                    "c_{} must be homogeneous of degree {}",
                    i + 1,
                    i + 1
                )));
            }
            total = total.try_add(c)?;
        }
        if rank.is_integer() {
            let r = rank.to_integer();
            let mut d = &r + 1;
            while d <= num::BigInt::from(ring.dimension()) {
                let du = u32::try_from(&d % num::BigInt::from(u32::MAX)).unwrap_or(u32::MAX);
                if !total.component(du).is_zero() {
                    return Err(Error::PreconditionFailed(format!(
                        "c_{du} is nonzero above the rank {rank}"
                    )));
                }
                d += 1;
            }
        }
        Ok(Bundle::mk(
            Arc::clone(ring),
            rank.clone(),
            total,
            !rank.is_integer(),
        ))
    }

    /// The tangent bundle of projective n-space: rank n, total Chern class
    /// `(1+h)^{n+1}` from the Euler sequence.
    pub fn tangent(ring: &Arc<ChowRing>) -> Result<Bundle> {
        let RingKind::Projective { n } = ring.kind() else {
            return Err(Error::PreconditionFailed(
                "tangent bundle needs a projective-space ring".into(),
            ));
        };
        let n = *n;
        if n == 0 {
            return Err(Error::PreconditionFailed(
                "tangent bundle needs dimension >= 1".into(),
            ));
        }
        let one_plus_h = Class::one(ring).try_add(&Class::generator(ring, "h")?)?;
        Ok(Bundle::mk(
            Arc::clone(ring),
            int(n as i64),
            one_plus_h.pow(n as u32 + 1),
            false,
        ))
    }

    /// The dual of the kernel of the evaluation of generic forms of degrees
    /// `ds` on projective n-space: sections of each `O(d_i)` evaluate onto the
    /// summand, and the bundle is the dual of the kernel's direct sum. Rank
    /// is `sum binom(n + d_i, n) - #summands`; the total Chern class is the
    /// dual of the inverse of `prod (1 + d_i h)`.
    pub fn syzygy(ring: &Arc<ChowRing>, ds: &[i64]) -> Result<Bundle> {
        let RingKind::Projective { n } = ring.kind() else {
            return Err(Error::PreconditionFailed(
                "syzygy bundle needs a projective-space ring".into(),
            ));
        };
        let n = *n;
        if ds.is_empty() {
            return Err(Error::EmptyInput);
        }
        if ds.iter().any(|d| *d < 0) || ds.iter().all(|d| *d == 0) {
            return Err(Error::PreconditionFailed(
                "syzygy degrees must be nonnegative with at least one positive".into(),
            ));
        }
        let mut rank = -int(ds.len() as i64);
        let h = Class::generator(ring, "h")?;
        let mut prod = Class::one(ring);
        for d in ds {
            rank += binomial((n as i64 + d) as u64, n as u64);
            prod = prod.try_mul(&Class::one(ring).try_add(&h.scale(&int(*d)))?)?;
        }
        // Kernel classes: invert the product, degree by degree.
        let inv = invert_total(&prod)?;
        // Dual: flip the sign of each odd-degree component.
        let total = alternate_signs(&inv);
        if !rank.is_positive() {
            return Err(Error::PreconditionFailed("syzygy bundle has rank 0".into()));
        }
        Ok(Bundle::mk(Arc::clone(ring), rank, total, false))
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn rank(&self) -> &Rat {
        &self.rank
    }

    /// The rank as a usize, refusing formal twists and non-integer ranks.
    pub fn rank_int(&self) -> Result<usize> {
        if self.formal_twist || !self.rank.is_integer() {
            return Err(Error::RankNotIntegral(format!(
                "rank {} (formal twist: {})",
                crate::rat::display(&self.rank),
                self.formal_twist
            )));
        }
        usize::try_from(self.rank.to_integer())
            .map_err(|_| Error::RankNotIntegral(crate::rat::display(&self.rank)))
    }

    /// Total Chern class `1 + c_1 + c_2 + ...`.
    pub fn total_chern(&self) -> &Class {
        &self.chern
    }

    /// The degree-`i` Chern class.
    pub fn chern(&self, i: u32) -> Class {
        self.chern.component(i)
    }

    pub fn is_formal_twist(&self) -> bool {
        self.formal_twist
    }

    /// Dual bundle: `c_i` picks up the sign `(-1)^i`.
    pub fn dual(&self) -> Bundle {
        Bundle::mk(
            Arc::clone(&self.ring),
            self.rank.clone(),
            alternate_signs(&self.chern),
            self.formal_twist,
        )
    }

    /// Direct sum: ranks add, total Chern classes multiply (Whitney).
    pub fn dsum(&self, other: &Bundle) -> Result<Bundle> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            &self.rank + &other.rank,
            self.chern.try_mul(&other.chern)?,
            self.formal_twist || other.formal_twist,
        ))
    }

    /// Tensor product, computed by multiplying Chern characters and
    /// converting back.
    pub fn tensor(&self, other: &Bundle) -> Result<Bundle> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let prod = self.ch_total()?.try_mul(&other.ch_total()?)?;
        let rank = &self.rank * &other.rank;
        let total = total_from_character(&prod)?;
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            rank,
            total,
            self.formal_twist || other.formal_twist,
        ))
    }

    /// Symmetric power via the universal root templates.
    pub fn sym(&self, m: usize) -> Result<Bundle> {
        let r = self.rank_int()?;
        let total = self.substitute_templates(chern_of_sym(m, r, self.ring.dimension())?)?;
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            sym_rank(m, r),
            total,
            false,
        ))
    }

    /// Exterior power via the universal root templates.
    pub fn wedge(&self, k: usize) -> Result<Bundle> {
        let r = self.rank_int()?;
        let total = self.substitute_templates(chern_of_wedge(k, r, self.ring.dimension())?)?;
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            wedge_rank(k, r),
            total,
            false,
        ))
    }

    fn substitute_templates(&self, templates: Vec<crate::symfunc::SymPoly>) -> Result<Class> {
        let r = self.rank_int()?;
        let cs: Vec<Class> = (1..=r as u32).map(|i| self.chern.component(i)).collect();
        let mut total = Class::one(&self.ring);
        for t in templates {
            total = total.try_add(&t.substitute(&self.ring, &cs)?)?;
        }
        Ok(total)
    }

    /// Determinant line bundle: rank 1 with `c_1 = c_1(E)`.
    pub fn det(&self) -> Bundle {
        let total = Class::one(&self.ring)
            .try_add(&self.chern.component(1))
            .expect("same ring");
        Bundle::mk(Arc::clone(&self.ring), int(1), total, self.formal_twist)
    }

    /// Endomorphism bundle `dual(E) ⊗ E`; `c_1 = 0`. Refuses formal twists.
    pub fn end(&self) -> Result<Bundle> {
        self.rank_int()?;
        self.dual().tensor(self)
    }

    /// Chern character as one inhomogeneous class, `rank + ch_1 + ch_2 + ...`.
    pub fn ch_total(&self) -> Result<Class> {
        let mut acc = Class::constant(&self.ring, self.rank.clone());
        for chk in self.ch_higher()? {
            acc = acc.try_add(&chk)?;
        }
        Ok(acc)
    }

    /// Chern character components `[ch_0, ch_1, ..., ch_dim]`, `ch_0` being
    /// the rank as a constant class.
    pub fn ch(&self) -> Result<Vec<Class>> {
        let mut v = vec![Class::constant(&self.ring, self.rank.clone())];
        v.extend(self.ch_higher()?);
        Ok(v)
    }

    fn ch_higher(&self) -> Result<Vec<Class>> {
        let d = self.ring.dimension();
        let cs: Vec<Class> = (1..=d).map(|i| self.chern.component(i)).collect();
        chern_to_character(&cs)
    }

    /// The degree >= 1 terms of the formal logarithm of `ch(E) / rank`:
    /// `c_1/r` in degree 1, `-discriminant/(2 r^2)` in degree 2, and so on.
    /// The scalar term `log rank` is not a ring element and is left to the
    /// caller (the rank is available separately).
    pub fn log_ch(&self) -> Result<Class> {
        let inv_r = int(1) / &self.rank;
        let x = self
            .ch_total()?
            .scale(&inv_r)
            .try_sub(&Class::one(&self.ring))?;
        // log(1 + x) = x - x^2/2 + x^3/3 - ...
        let mut acc = Class::zero(&self.ring);
        let mut xp = Class::one(&self.ring);
        for j in 1..=self.ring.dimension().max(1) {
            xp = xp.try_mul(&x)?;
            if xp.is_zero() {
                break;
            }
            let sign = if j % 2 == 1 { int(1) } else { int(-1) };
            acc = acc.try_add(&xp.scale(&(sign / int(j as i64))))?;
        }
        Ok(acc)
    }

    /// Discriminant `2 r c_2 - (r - 1) c_1^2`; zero on curves.
    pub fn discriminant(&self) -> Class {
        if self.ring.dimension() < 2 {
            return Class::zero(&self.ring);
        }
        let c1 = self.chern.component(1);
        let c2 = self.chern.component(2);
        let two_r_c2 = c2.scale(&(int(2) * &self.rank));
        let c1sq = c1.try_mul(&c1).expect("same ring");
        two_r_c2
            .try_sub(&c1sq.scale(&(&self.rank - int(1))))
            .expect("same ring")
    }

    /// Twist by a degree-1 class: `ch` picks up the factor `exp(delta)`.
    /// A non-integral `delta` flags the result as a formal twist.
    pub fn twist(&self, delta: &Class) -> Result<Bundle> {
        if *delta != delta.component(1) {
            return Err(Error::PreconditionFailed(
                "twist class must be homogeneous of degree 1".into(),
            ));
        }
        let ch = self.ch_total()?.try_mul(&delta.exp()?)?;
        let total = total_from_character(&ch)?;
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            self.rank.clone(),
            total,
            self.formal_twist || !delta.is_integral(),
        ))
    }

    /// Frobenius pullback: `c_i` scales by `p^(i m)`.
    pub fn frobenius_pullback(&self, p: u64, m: u32) -> Result<Bundle> {
        if p < 2 {
            return Err(Error::PreconditionFailed(
                "frobenius needs p >= 2".into(),
            ));
        }
        let f = crate::rat::int_pow(p, m as u64);
        let mut total = Class::one(&self.ring);
        let mut fp = Rat::one();
        for i in 1..=self.ring.dimension() {
            fp *= &f;
            total = total.try_add(&self.chern.component(i).scale(&fp))?;
        }
        Ok(Bundle::mk(
            Arc::clone(&self.ring),
            self.rank.clone(),
            total,
            self.formal_twist,
        ))
    }

    /// Segre classes `[s_0, s_1, ..., s_j]`: the inverse of the total Chern
    /// class, degree by degree.
    pub fn segre(&self, up_to: u32) -> Result<Vec<Class>> {
        let inv = invert_total(&self.chern)?;
        Ok((0..=up_to).map(|j| inv.component(j)).collect())
    }

    /// `s_j` of the dual bundle by the recursion
    /// `s_j = (-1)^(j+1) c_j - sum_{i=1}^{j-1} (-1)^i c_i s_{j-i}`,
    /// which must agree with `segre` of [`Bundle::dual`].
    pub fn segre_dual_recursion(&self, j: u32) -> Result<Class> {
        let mut s: Vec<Class> = vec![Class::one(&self.ring)];
        for jj in 1..=j {
            let sign = if jj % 2 == 0 { int(-1) } else { int(1) };
            let mut acc = self.chern.component(jj).scale(&sign);
            for i in 1..jj {
                let sign = if i % 2 == 1 { int(1) } else { int(-1) };
                acc = acc.try_add(
                    &self
                        .chern
                        .component(i)
                        .try_mul(&s[(jj - i) as usize])?
                        .scale(&sign),
                )?;
            }
            s.push(acc);
        }
        Ok(s.swap_remove(j as usize))
    }

    /// Slope `(c_1 . H^{n-1}) / rank` against a degree-1 polarization.
    pub fn slope(&self, h: &Class) -> Result<Rat> {
        let n = self.ring.dimension();
        if n < 1 {
            return Err(Error::PreconditionFailed(
                "slope needs dimension >= 1".into(),
            ));
        }
        let pairing = self
            .chern
            .component(1)
            .try_mul(&h.pow(n - 1))?
            .integrate()?;
        Ok(pairing / &self.rank)
    }

    /// `discriminant . H^{n-2}` as a rational number.
    pub fn delta_pairing(&self, h: &Class) -> Result<Rat> {
        let n = self.ring.dimension();
        if n < 2 {
            return Err(Error::PreconditionFailed(
                "discriminant pairing needs dimension >= 2".into(),
            ));
        }
        self.discriminant().try_mul(&h.pow(n - 2))?.integrate()
    }

    /// The degree-2 positivity data paired against `H`.
    pub fn positivity_invariants(&self, h: &Class) -> Result<PositivityInvariants> {
        let n = self.ring.dimension();
        if n < 2 {
            return Err(Error::PreconditionFailed(
                "positivity invariants need dimension >= 2".into(),
            ));
        }
        let c1 = self.chern.component(1);
        let c2 = self.chern.component(2);
        let hn1 = h.pow(n - 1);
        let hn2 = h.pow(n - 2);
        let c1sq = c1.try_mul(&c1)?;
        Ok(PositivityInvariants {
            c1_pairing: c1.try_mul(&hn1)?.integrate()?,
            c2_pairing: c2.try_mul(&hn2)?.integrate()?,
            c1sq_minus_c2_pairing: c1sq.try_sub(&c2)?.try_mul(&hn2)?.integrate()?,
            delta_pairing: self.delta_pairing(h)?,
        })
    }

    /// Pull the bundle back along a projection whose target ring contains
    /// this one (a product having it as a factor, or a projective bundle
    /// over it).
    pub fn pullback_to(&self, target: &Arc<ChowRing>) -> Result<Bundle> {
        Ok(Bundle::mk(
            Arc::clone(target),
            self.rank.clone(),
            self.chern.pullback_to(target)?,
            self.formal_twist,
        ))
    }

    /// The ring of the projectivization of this bundle.
    pub fn projectivize(&self) -> Result<Arc<ChowRing>> {
        let r = self.rank_int()?;
        ChowRing::projective_bundle(&self.ring, r, &self.chern)
    }

    /// For `E` with trivial Chern classes, Riemann-Roch forces
    /// `chi(E tensor F) = rank(E) . chi(F)`; this computes both sides and
    /// compares. Rejects `E` with any nonzero Chern class.
    pub fn check_chi_multiplicative(
        &self,
        f: &Bundle,
        space: &crate::rr::Space,
    ) -> Result<bool> {
        if self.chern != Class::one(&self.ring) {
            return Err(Error::PreconditionFailed(
                "chi multiplicativity requires trivial Chern classes".into(),
            ));
        }
        let lhs = crate::rr::euler_char(&self.tensor(f)?, space)?;
        let rhs = crate::rr::euler_char(f, space)? * &self.rank;
        Ok(lhs == rhs)
    }
}

/// The hyperplane class of a projective-space ring.
pub fn hyperplane(ring: &Arc<ChowRing>) -> Result<Class> {
    match ring.kind() {
        RingKind::Projective { .. } => Class::generator(ring, "h"),
        _ => Err(Error::PreconditionFailed(
            "expected a projective-space ring".into(),
        )),
    }
}

/// Inverse of a total class with constant term 1, degree by degree:
/// `v_0 = 1`, `v_j = -sum_{i=1}^{j} u_i v_{j-i}`.
fn invert_total(u: &Class) -> Result<Class> {
    if !u.constant_term().is_one() {
        return Err(Error::PreconditionFailed(
            "inversion needs constant term 1".into(),
        ));
    }
    let ring = u.ring();
    let mut v: Vec<Class> = vec![Class::one(ring)];
    for j in 1..=ring.dimension() {
        let mut acc = Class::zero(ring);
        for i in 1..=j {
            acc = acc.try_sub(&u.component(i).try_mul(&v[(j - i) as usize])?)?;
        }
        v.push(acc);
    }
    let mut total = Class::zero(ring);
    for c in v {
        total = total.try_add(&c)?;
    }
    Ok(total)
}

/// Flip the sign of every odd-degree component.
fn alternate_signs(c: &Class) -> Class {
    let ring = c.ring();
    let mut total = Class::zero(ring);
    for i in 0..=ring.dimension() {
        let comp = c.component(i);
        total = if i % 2 == 1 {
            total.try_sub(&comp).expect("same ring")
        } else {
            total.try_add(&comp).expect("same ring")
        };
    }
    total
}

/// Rebuild a total Chern class from an inhomogeneous Chern character
/// (constant term = rank).
fn total_from_character(ch: &Class) -> Result<Class> {
    let ring = ch.ring();
    let d = ring.dimension();
    let comps: Vec<Class> = (1..=d).map(|k| ch.component(k)).collect();
    let cs = character_to_chern(&comps)?;
    let mut total = Class::one(ring);
    for c in cs {
        total = total.try_add(&c)?;
    }
    Ok(total)
}
