//! Property tests for the library's structural invariants: ring axioms, normal-form
//! stability, the Newton round-trip between Chern classes and characters,
//! Whitney additivity, discriminant twist-invariance, splitting-type
//! arithmetic laws, and the tableau action axiom.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use cherncalc::bundle::{hyperplane, Bundle};
use cherncalc::chow::{ChowRing, Class};
use cherncalc::plethysm::{apply_gl, matmul, phi_image, DEFAULT_CAP};
use cherncalc::rat::{int, rat, Rat};
use cherncalc::split::SplittingType;
use cherncalc::symfunc::{character_to_chern, chern_to_character};

/// Ring identity is by instance, so every generated value must live in the
/// same shared ring.
fn formal_ring() -> &'static Arc<ChowRing> {
    static RING: OnceLock<Arc<ChowRing>> = OnceLock::new();
    RING.get_or_init(|| ChowRing::formal(3, &[("x", 1), ("y", 1), ("z", 2)]))
}

fn plane() -> &'static Arc<ChowRing> {
    static RING: OnceLock<Arc<ChowRing>> = OnceLock::new();
    RING.get_or_init(|| ChowRing::projective_space(2))
}

/// A random class in the fixed formal ring Q[x, y, z]/(deg > 3) with
/// deg x = deg y = 1, deg z = 2.
fn arb_class() -> impl Strategy<Value = Class> {
    let coeff = (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d));
    proptest::collection::vec(coeff, 8).prop_map(|cs| {
        let ring = formal_ring().clone();
        let x = Class::generator(&ring, "x").unwrap();
        let y = Class::generator(&ring, "y").unwrap();
        let z = Class::generator(&ring, "z").unwrap();
        let monos = [
            Class::one(&ring),
            x.clone(),
            y.clone(),
            z.clone(),
            x.try_mul(&y).unwrap(),
            x.try_mul(&x).unwrap(),
            x.try_mul(&z).unwrap(),
            y.try_mul(&y).unwrap().try_mul(&x).unwrap(),
        ];
        let mut acc = Class::zero(&ring);
        for (c, m) in cs.iter().zip(&monos) {
            acc = acc.try_add(&m.scale(c)).unwrap();
        }
        acc
    })
}

/// A random splitting type of rank 1..=5 over degrees in [-4, 4].
fn arb_split() -> impl Strategy<Value = SplittingType> {
    proptest::collection::vec(-4i64..=4, 1..=5)
        .prop_map(|ds| SplittingType::new(&ds).unwrap())
}

/// A random direct sum of line bundles on the plane.
fn arb_split_bundle() -> impl Strategy<Value = Bundle> {
    proptest::collection::vec(-3i64..=3, 1..=4).prop_map(|ds| {
        let ring = plane();
        let mut b = Bundle::o(ring, ds[0]).unwrap();
        for &d in &ds[1..] {
            b = b.dsum(&Bundle::o(ring, d).unwrap()).unwrap();
        }
        b
    })
}

proptest! {
    /// Addition and multiplication are commutative, associative, and
    /// distributive; one and zero behave.
    #[test]
    fn ring_axioms(f in arb_class(), g in arb_class(), k in arb_class()) {
        prop_assert_eq!(f.try_add(&g).unwrap(), g.try_add(&f).unwrap());
        prop_assert_eq!(f.try_mul(&g).unwrap(), g.try_mul(&f).unwrap());
        prop_assert_eq!(
            f.try_add(&g).unwrap().try_add(&k).unwrap(),
            f.try_add(&g.try_add(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.try_mul(&g).unwrap().try_mul(&k).unwrap(),
            f.try_mul(&g.try_mul(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.try_mul(&g.try_add(&k).unwrap()).unwrap(),
            f.try_mul(&g).unwrap().try_add(&f.try_mul(&k).unwrap()).unwrap()
        );
        let ring = f.ring();
        prop_assert_eq!(f.try_mul(&Class::one(ring)).unwrap(), f.clone());
        prop_assert!(f.try_mul(&Class::zero(ring)).unwrap().is_zero());
        prop_assert!(f.try_sub(&f).unwrap().is_zero());
    }

    /// The Grothendieck relation rewrites to a unique normal form: a power
    /// computed in any association order lands on the same class, and each
    /// term's xi-exponent stays below the rank.
    #[test]
    fn normal_form_is_stable(a in -3i64..=3, b in -3i64..=3, e1 in 1u32..=3, e2 in 1u32..=3) {
        let base = ChowRing::projective_space(2);
        let h = hyperplane(&base).unwrap();
        let bundle = Bundle::from_chern(
            &base,
            int(2),
            &[h.scale(&int(a)), h.try_mul(&h).unwrap().scale(&int(b))],
        ).unwrap();
        let pring = bundle.projectivize().unwrap();
        let xi = Class::generator(&pring, "xi").unwrap();
        let left = xi.pow(e1).try_mul(&xi.pow(e2)).unwrap();
        let right = xi.pow(e1 + e2);
        prop_assert_eq!(left, right);
    }

    /// chern -> character -> chern is the identity on generic rational
    /// Chern data of length 4.
    #[test]
    fn newton_round_trip(qs in proptest::collection::vec((-5i64..=5, 1i64..=3), 4)) {
        let ring = ChowRing::formal(4, &[("c1", 1), ("c2", 2), ("c3", 3), ("c4", 4)]);
        let cs: Vec<Class> = qs
            .iter()
            .enumerate()
            .map(|(i, (n, d))| {
                Class::generator(&ring, &format!("c{}", i + 1))
                    .unwrap()
                    .scale(&rat(*n, *d))
            })
            .collect();
        let ch = chern_to_character(&cs).unwrap();
        let back = character_to_chern(&ch).unwrap();
        prop_assert_eq!(back, cs);
    }

    /// Whitney at character level: ch is additive on direct sums and
    /// multiplicative on tensor products, for random split bundles.
    #[test]
    fn whitney_and_tensor_characters(e in arb_split_bundle(), f in arb_split_bundle()) {
        let sum_ch = e.dsum(&f).unwrap().ch_total().unwrap();
        prop_assert_eq!(
            sum_ch,
            e.ch_total().unwrap().try_add(&f.ch_total().unwrap()).unwrap()
        );
        let tensor_ch = e.tensor(&f).unwrap().ch_total().unwrap();
        prop_assert_eq!(
            tensor_ch,
            e.ch_total().unwrap().try_mul(&f.ch_total().unwrap()).unwrap()
        );
    }

    /// The discriminant never moves under twisting by a line class.
    #[test]
    fn discriminant_twist_invariance(e in arb_split_bundle(), d in -4i64..=4) {
        let ring = e.ring().clone();
        let delta = hyperplane(&ring).unwrap().scale(&int(d));
        prop_assert_eq!(e.twist(&delta).unwrap().discriminant(), e.discriminant());
    }

    /// Splitting-type arithmetic: tensor slopes add, duals negate, symmetric
    /// powers scale by m, and Frobenius pullbacks scale by p^m.
    #[test]
    fn splitting_type_slope_laws(s in arb_split(), t in arb_split(), m in 1usize..=3) {
        let sum = s.slope() + t.slope();
        prop_assert_eq!(s.tensor(&t).slope(), sum);
        prop_assert_eq!(s.dual().slope(), -s.slope());
        prop_assert_eq!(s.sym(m).slope(), s.slope() * int(m as i64));
        prop_assert_eq!(
            s.frobenius_pullback(2, 2).slope(),
            s.slope() * int(4)
        );
        // Semistability is invariant under twist and dual.
        prop_assert_eq!(s.twist(3).is_semistable(), s.is_semistable());
        prop_assert_eq!(s.dual().is_semistable(), s.is_semistable());
        // h0 only counts nonnegative summands.
        let h0 = s
            .degrees()
            .iter()
            .filter(|&&d| d >= 0)
            .map(|&d| d + 1)
            .sum::<i64>();
        prop_assert_eq!(s.h0(), h0);
    }

    /// The tableau vector transforms by det^2 under any integer matrix in
    /// the (2,1) case: the action axiom and the determinant twist together.
    #[test]
    fn tableau_action_axiom_rank_two(
        m1 in proptest::collection::vec(-2i64..=2, 4),
        m2 in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let g1 = vec![vec![m1[0], m1[1]], vec![m1[2], m1[3]]];
        let g2 = vec![vec![m2[0], m2[1]], vec![m2[2], m2[3]]];
        let w = phi_image(2, 1, DEFAULT_CAP).unwrap();
        let lhs = apply_gl(&w, &matmul(&g1, &g2)).unwrap();
        let rhs = apply_gl(&apply_gl(&w, &g2).unwrap(), &g1).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        // det(g)^{2a} scaling, checked against the raw determinant.
        let det1 = m1[0] * m1[3] - m1[1] * m1[2];
        let scaled = w.scale(&num::BigInt::from(det1 * det1));
        prop_assert_eq!(apply_gl(&w, &g1).unwrap(), scaled);
    }

    /// Integration against the fundamental class of the plane is linear and
    /// respects the grading: only top-degree terms contribute.
    #[test]
    fn integration_is_linear(
        fc in proptest::collection::vec((-6i64..=6, 1i64..=4), 3),
        gc in proptest::collection::vec((-6i64..=6, 1i64..=4), 3),
        n in -6i64..=6,
    ) {
        let ring = plane();
        let h = hyperplane(ring).unwrap();
        let build = |cs: &[(i64, i64)]| {
            let mut acc = Class::zero(ring);
            for (k, (num, den)) in cs.iter().enumerate() {
                acc = acc.try_add(&h.pow(k as u32).scale(&rat(*num, *den))).unwrap();
            }
            acc
        };
        let f = build(&fc);
        let g = build(&gc);
        let lhs = f.try_add(&g.scale(&int(n))).unwrap().integrate().unwrap();
        let rhs = f.integrate().unwrap() + g.integrate().unwrap() * int(n);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.integrate().unwrap(), f.component(2).integrate().unwrap());
    }
}

/// Rational helpers round-trip through display.
#[test]
fn rational_display_round_trip() {
    let cases: [(Rat, &str); 4] = [
        (int(0), "0"),
        (int(-7), "-7"),
        (rat(1, 2), "1/2"),
        (rat(-22, 8), "-11/4"),
    ];
    for (q, s) in cases {
        assert_eq!(cherncalc::rat::display(&q), s);
    }
}
