//! The six named example reports. Each rebuilds its computation from
//! scratch through the library and compares against the expected values,
//! tagged by provenance.

use cherncalc::bundle::{hyperplane, Bundle};
use cherncalc::chow::{ChowRing, Class};
use cherncalc::expr;
use cherncalc::rat::{binomial, display, int, rat};
use cherncalc::Result;

use crate::report::Report;

pub fn run(name: &str) -> Result<Report> {
    match name {
        "notnef" => notnef(),
        "tangent-pn" => tangent_pn(),
        "syzygy" => syzygy(),
        "hilb2p2" => hilb2p2(),
        "product-slope" => product_slope(),
        "hodge-identity" => hodge_identity(),
        other => Err(cherncalc::Error::UnknownBundle(other.to_string())),
    }
}

pub const NAMES: [&str; 6] = [
    "notnef",
    "tangent-pn",
    "syzygy",
    "hilb2p2",
    "product-slope",
    "hodge-identity",
];

/// Rank-8 bundle on the plane with c1^2 = c2, positive degree, and a line
/// restriction containing a negative summand.
fn notnef() -> Result<Report> {
    let mut rep = Report::new("notnef", "bundlecalc", "cmd_example(notnef)");
    let ring = ChowRing::projective_space(2);
    let h = hyperplane(&ring)?;
    let (e, dim) = expr::named("notnef")?;
    let b = e.bundle(&ring)?;
    rep.push("rank", 8, b.rank_int()?, "reference");
    rep.push("c1", 4, display(&b.chern(1).coeff(&[("h", 1)])), "reference");
    rep.push("c2", 16, display(&b.chern(2).coeff(&[("h", 2)])), "reference");
    let inv = b.positivity_invariants(&h)?;
    rep.push(
        "c1sq_minus_c2",
        0,
        display(&inv.c1sq_minus_c2_pairing),
        "reference",
    );
    let st = e.splitting(dim)?;
    rep.push(
        "restriction_min",
        -1,
        st.degrees().last().copied().unwrap_or(0),
        "reference",
    );
    rep.push("nef", false, st.is_nef(), "reference");
    Ok(rep)
}

/// Discriminant of the tangent bundle and its twist on P^n, n = 2..6.
fn tangent_pn() -> Result<Report> {
    let mut rep = Report::new("tangent-pn", "bundlecalc", "cmd_example(tangent-pn)");
    for n in 2..=6usize {
        let ring = ChowRing::projective_space(n);
        let h = hyperplane(&ring)?;
        let t = Bundle::tangent(&ring)?;
        rep.push(
            &format!("delta_p{n}"),
            n + 1,
            display(&t.delta_pairing(&h)?),
            "reference",
        );
        let twisted = t.twist(&h.neg())?;
        rep.push(
            &format!("delta_twist_p{n}"),
            n + 1,
            display(&twisted.delta_pairing(&h)?),
            "reference",
        );
    }
    Ok(rep)
}

/// The rank-12 syzygy bundle of degrees (1,2) on P^3 and the slopes of its
/// two summand syzygy bundles. The printed Chern values follow the
/// positively-signed normalization; the slopes are those of the kernel
/// bundles themselves, hence negative.
fn syzygy() -> Result<Report> {
    let mut rep = Report::new("syzygy", "bundlecalc", "cmd_example(syzygy)");
    let ring = ChowRing::projective_space(3);
    let h = hyperplane(&ring)?;
    let b = Bundle::syzygy(&ring, &[1, 2])?;
    rep.push("rank", 12, b.rank_int()?, "reference");
    rep.push("c1", 3, display(&b.chern(1).coeff(&[("h", 1)])), "reference");
    rep.push("c2", 7, display(&b.chern(2).coeff(&[("h", 2)])), "reference");
    rep.push("delta_pairing", 69, display(&b.delta_pairing(&h)?), "derived");
    let m1 = Bundle::syzygy(&ring, &[1])?.dual();
    let m2 = Bundle::syzygy(&ring, &[2])?.dual();
    let s1 = m1.slope(&h)?;
    let s2 = m2.slope(&h)?;
    rep.push("slope_m_o1", display(&rat(-1, 3)), display(&s1), "reference");
    rep.push("slope_m_o2", display(&rat(-2, 9)), display(&s2), "reference");
    rep.push("unstable", true, s1 != s2, "derived");
    Ok(rep)
}

/// Chern-class exactness of the tautological sequence on the second
/// symmetric power model: c(O) c(Sym^4 T(-1)(-2)) = c(Sym^2 Sym^2 T(-1)(-2))
/// on the plane, with ranks 1 + 5 = 6; the quotient restricts to a
/// non-nef splitting type on a line.
fn hilb2p2() -> Result<Report> {
    let mut rep = Report::new("hilb2p2", "bundlecalc", "cmd_example(hilb2p2)");
    let ring = ChowRing::projective_space(2);
    let h = hyperplane(&ring)?;
    let minus_h = h.neg();
    let minus_2h = h.scale(&int(-2));
    let t1 = Bundle::tangent(&ring)?.twist(&minus_h)?;
    let sub = Bundle::trivial(&ring, 1)?;
    let quot = t1.sym(4)?.twist(&minus_2h)?;
    let middle = t1.sym(2)?.sym(2)?.twist(&minus_2h)?;
    rep.push(
        "rank_sub_plus_quot",
        middle.rank_int()?,
        sub.rank_int()? + quot.rank_int()?,
        "derived",
    );
    let product = sub.total_chern().try_mul(quot.total_chern())?;
    for k in 1..=2u16 {
        rep.push(
            &format!("c{k}"),
            display(&middle.chern(k as u32).coeff(&[("h", k)])),
            display(&product.component(k as u32).coeff(&[("h", k)])),
            "derived",
        );
    }
    let (e, dim) = expr::named("hilb2p2")?;
    let st = e.splitting(dim)?;
    rep.push(
        "restriction",
        "(2,1,0,-1,-2)",
        format!(
            "({})",
            st.degrees()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        "reference",
    );
    rep.push("nef", false, st.is_nef(), "reference");
    Ok(rep)
}

/// Slope of a pullback to a product of projective spaces against the sum
/// polarization: mu_L(pr* E) = binom(n+m-1, n-1) mu_h(E).
fn product_slope() -> Result<Report> {
    let mut rep = Report::new(
        "product-slope",
        "bundlecalc",
        "cmd_example(product-slope)",
    );
    for (n, m) in [(2usize, 1usize), (2, 2), (3, 1)] {
        let pn = ChowRing::projective_space(n);
        let pm = ChowRing::projective_space(m);
        let prod = ChowRing::product(&pn, &pm);
        let h = hyperplane(&pn)?;
        let e = Bundle::from_chern(
            &pn,
            int(2),
            &[h.scale(&int(5)), h.try_mul(&h)?.scale(&int(2))],
        )?;
        let pe = e.pullback_to(&prod)?;
        let l = Class::generator(&prod, "h1")?.try_add(&Class::generator(&prod, "h2")?)?;
        let mu_l = pe
            .total_chern()
            .component(1)
            .try_mul(&l.pow((n + m - 1) as u32))?
            .integrate()?
            / pe.rank();
        let expected = binomial((n + m - 1) as u64, (n - 1) as u64) * e.slope(&h)?;
        rep.push(
            &format!("mu_p{n}xp{m}"),
            display(&expected),
            display(&mu_l),
            "derived",
        );
    }
    Ok(rep)
}

/// The discriminant of a direct sum decomposes Hodge-index style:
/// Delta(E)/r = Delta(E1)/r1 + Delta(E2)/r2 - (r1 r2/r)(c1(E1)/r1 - c1(E2)/r2)^2.
fn hodge_identity() -> Result<Report> {
    let mut rep = Report::new(
        "hodge-identity",
        "bundlecalc",
        "cmd_example(hodge-identity)",
    );
    let ring = ChowRing::formal(2, &[("a1", 1), ("a2", 2), ("b1", 1), ("b2", 2)]);
    let a1 = Class::generator(&ring, "a1")?;
    let a2 = Class::generator(&ring, "a2")?;
    let b1 = Class::generator(&ring, "b1")?;
    let b2 = Class::generator(&ring, "b2")?;
    for (r1, r2) in [(1i64, 1i64), (1, 2), (2, 2), (2, 3)] {
        let e1 = if r1 == 1 {
            Bundle::from_chern(&ring, int(1), &[a1.clone()])?
        } else {
            Bundle::from_chern(&ring, int(r1), &[a1.clone(), a2.clone()])?
        };
        let e2 = if r2 == 1 {
            Bundle::from_chern(&ring, int(1), &[b1.clone()])?
        } else {
            Bundle::from_chern(&ring, int(r2), &[b1.clone(), b2.clone()])?
        };
        let e = e1.dsum(&e2)?;
        let r = int(r1 + r2);
        let lhs = e.discriminant().scale(&(int(1) / &r));
        let diff = e1
            .chern(1)
            .scale(&(int(1) / int(r1)))
            .try_sub(&e2.chern(1).scale(&(int(1) / int(r2))))?;
        let rhs = e1
            .discriminant()
            .scale(&(int(1) / int(r1)))
            .try_add(&e2.discriminant().scale(&(int(1) / int(r2))))?
            .try_sub(&diff.try_mul(&diff)?.scale(&(int(r1 * r2) / &r)))?;
        rep.push(
            &format!("decomposition_{r1}_{r2}"),
            true,
            lhs == rhs,
            "derived",
        );
    }
    Ok(rep)
}
