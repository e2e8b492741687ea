//! Splitting types of bundles on the projective line.
//!
//! Every bundle on the line is a direct sum of line bundles, so a bundle is
//! just a multiset of integer degrees. The module implements the bundle
//! operations on such multisets, the positivity dictionary (semistable, nef,
//! ample, numerically flat), section counts with the semistable section
//! bound, and the splitting types of the standard restrictions to a line.
//!
//! Strong semistability coincides with semistability here: Frobenius
//! pullback scales every degree by the same factor, so it preserves the
//! all-degrees-equal predicate exactly.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rat::{int, Rat};

/// A multiset of line-bundle degrees, stored sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    pub fn new(degrees: &[i64]) -> Result<SplittingType> {
        if degrees.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut v = degrees.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittingType(v))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Total degree (the degree of the determinant).
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn slope(&self) -> Rat {
        int(self.degree()) / int(self.rank() as i64)
    }

    pub fn dsum(&self, other: &SplittingType) -> SplittingType {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(v)
    }

    pub fn tensor(&self, other: &SplittingType) -> SplittingType {
        let mut v = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.0 {
            for b in &other.0 {
                v.push(a + b);
            }
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(v)
    }

    /// Symmetric power: size-m multiset sums. `sym(0)` is the trivial line.
    pub fn sym(&self, m: usize) -> SplittingType {
        let mut v: Vec<i64> = (0..self.rank())
            .combinations_with_replacement(m)
            .map(|ms| ms.iter().map(|&i| self.0[i]).sum())
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(v)
    }

    /// Exterior power: k-subset sums. Empty beyond the rank.
    pub fn wedge(&self, k: usize) -> Result<SplittingType> {
        if k > self.rank() {
            return Err(Error::EmptyWedge);
        }
        let mut v: Vec<i64> = (0..self.rank())
            .combinations(k)
            .map(|s| s.iter().map(|&i| self.0[i]).sum())
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittingType(v))
    }

    pub fn dual(&self) -> SplittingType {
        let mut v: Vec<i64> = self.0.iter().map(|d| -d).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(v)
    }

    pub fn twist(&self, d: i64) -> SplittingType {
        SplittingType(self.0.iter().map(|x| x + d).collect())
    }

    /// Frobenius pullback: every degree scales by `p^m`.
    pub fn frobenius_pullback(&self, p: u64, m: u32) -> SplittingType {
        let factor = (p as i64).pow(m);
        SplittingType(self.0.iter().map(|x| x * factor).collect())
    }

    /// Semistable iff every summand has the same degree.
    pub fn is_semistable(&self) -> bool {
        self.0.iter().all(|d| *d == self.0[0])
    }

    /// Nef iff the minimal degree is nonnegative.
    pub fn is_nef(&self) -> bool {
        *self.0.last().unwrap() >= 0
    }

    /// Ample iff the minimal degree is positive.
    pub fn is_ample(&self) -> bool {
        *self.0.last().unwrap() > 0
    }

    /// Numerically flat iff every degree is zero: nef with nef dual,
    /// equivalently semistable of degree zero.
    pub fn is_numerically_flat(&self) -> bool {
        self.0.iter().all(|d| *d == 0)
    }

    /// Slopes of the Harder-Narasimhan factors: the distinct degrees in
    /// strictly decreasing order.
    pub fn hn_slopes(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }

    /// Number of independent sections: `sum over d >= 0 of (d + 1)`.
    pub fn h0(&self) -> i64 {
        self.0.iter().filter(|d| **d >= 0).map(|d| d + 1).sum()
    }

    /// The section bound for semistable bundles: `h0 <= rank + degree`.
    /// Rejects non-semistable input; reports the bound vacuous when the
    /// right-hand side is negative (common degree at most -2), and otherwise
    /// returns the two sides, which are equal for every semistable type of
    /// common degree at least -1.
    pub fn check_section_bound(&self) -> Result<SectionBound> {
        if !self.is_semistable() {
            return Err(Error::PreconditionFailed(
                "section bound applies to semistable types".into(),
            ));
        }
        let bound = self.rank() as i64 + self.degree();
        if bound < 0 {
            return Ok(SectionBound::Vacuous);
        }
        Ok(SectionBound::Holds {
            h0: self.h0(),
            bound,
        })
    }
}

/// Outcome of the semistable section bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionBound {
    /// `h0 <= bound` with both sides reported.
    Holds { h0: i64, bound: i64 },
    /// The bound's right-hand side is negative, so it says nothing.
    Vacuous,
}

/// Restriction of the Euler sequence quotient: the tangent bundle of
/// projective n-space on a line splits as `(2, 1, ..., 1)`.
pub fn euler_restriction(n: usize) -> Result<SplittingType> {
    if n == 0 {
        return Err(Error::PreconditionFailed(
            "tangent restriction needs n >= 1".into(),
        ));
    }
    let mut v = vec![1i64; n];
    v[0] = 2;
    SplittingType::new(&v)
}

/// Splitting type on a line of a named bundle expression over projective
/// n-space. Expressions combine `O(d)`, the tangent bundle and the trivial
/// bundle with the multiset operations above; see [`crate::expr`].
pub fn restriction_of(expr: &crate::expr::BundleExpr, n: usize) -> Result<SplittingType> {
    expr.splitting(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(d: &[i64]) -> SplittingType {
        SplittingType::new(d).unwrap()
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(SplittingType::new(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn tensor_of_two_free_pairs() {
        assert_eq!(st(&[1, 0]).tensor(&st(&[1, 0])), st(&[2, 1, 1, 0]));
    }

    #[test]
    fn sym_four_and_normalizing_twist() {
        let s = st(&[1, 0]).sym(4);
        assert_eq!(s, st(&[4, 3, 2, 1, 0]));
        assert_eq!(s.twist(-2), st(&[2, 1, 0, -1, -2]));
        assert!(!s.twist(-2).is_nef());
    }

    #[test]
    fn triple_tensor_twisted_contains_negative_part() {
        let t = st(&[1, 0]);
        let cube = t.tensor(&t).tensor(&t).twist(-1);
        assert_eq!(cube, st(&[2, 1, 1, 1, 0, 0, 0, -1]));
        assert!(!cube.is_nef());
        assert_eq!(cube.degree(), 4);
    }

    #[test]
    fn tangent_restriction_dictionary() {
        let t = euler_restriction(3).unwrap();
        assert_eq!(t, st(&[2, 1, 1]));
        assert_eq!(t.slope(), crate::rat::rat(4, 3));
        assert!(!t.is_semistable());
        assert!(t.is_nef());
        assert!(t.is_ample());
        assert_eq!(t.hn_slopes(), vec![2, 1]);
        assert!(!t.twist(-1).is_ample());
        assert!(t.twist(-1).is_nef());
    }

    #[test]
    fn dual_and_twist_commute_as_expected() {
        let s = st(&[3, 1, -2]);
        assert_eq!(s.dual().twist(-2), s.twist(2).dual());
        assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn wedge_edges() {
        let s = st(&[2, 1, 0]);
        assert_eq!(s.wedge(0).unwrap(), st(&[0]));
        assert_eq!(s.wedge(3).unwrap(), st(&[3]));
        assert_eq!(s.wedge(4), Err(Error::EmptyWedge));
        assert_eq!(s.wedge(2).unwrap(), st(&[3, 2, 1]));
    }

    #[test]
    fn sections_and_bound() {
        assert_eq!(st(&[2, 1, 0, -1, -2]).h0(), 6);
        assert_eq!(st(&[0, 0]).h0(), 2);
        match st(&[1, 1]).check_section_bound().unwrap() {
            SectionBound::Holds { h0, bound } => {
                assert_eq!(h0, 4);
                assert_eq!(bound, 4);
            }
            SectionBound::Vacuous => panic!("bound is not vacuous here"),
        }
        assert_eq!(
            st(&[-3, -3]).check_section_bound().unwrap(),
            SectionBound::Vacuous
        );
        assert!(st(&[1, 0]).check_section_bound().is_err());
    }

    #[test]
    fn frobenius_scales_degrees() {
        assert_eq!(st(&[2, 1, 1]).frobenius_pullback(2, 1), st(&[4, 2, 2]));
        assert!(st(&[0, 0]).frobenius_pullback(5, 3).is_numerically_flat());
    }

    /// Splitting-principle consistency: the elementary symmetric functions of
    /// the symmetric-power degrees agree with the universal templates from
    /// [`crate::symfunc`] evaluated at the elementary symmetric functions of
    /// the original degrees.
    #[test]
    fn sym_agrees_with_templates() {
        use crate::rat::Rat;
        use num::traits::Zero;
        let sigma = |vals: &[i64], k: usize| -> Rat {
            let mut acc = Rat::zero();
            for subset in (0..vals.len()).combinations(k) {
                let mut term = int(1);
                for i in subset {
                    term *= int(vals[i]);
                }
                acc += term;
            }
            acc
        };
        for degrees in [-2i64..=2, -2..=2, -2..=2]
            .into_iter()
            .multi_cartesian_product()
        {
            let s = st(&degrees);
            for m in 1..=4usize {
                let templates = crate::symfunc::chern_of_sym(m, 3, 3).unwrap();
                let evals: Vec<Rat> = (1..=3).map(|k| sigma(&degrees, k)).collect();
                let symmed = s.sym(m);
                for k in 1..=3usize {
                    assert_eq!(
                        templates[k - 1].eval(&evals),
                        sigma(symmed.degrees(), k),
                        "degrees {degrees:?}, Sym^{m}, c_{k}"
                    );
                }
            }
        }
    }
}
