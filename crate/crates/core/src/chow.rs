//! Truncated graded rings presented by monomial rewrite rules, and their
//! elements.
//!
//! A ring here is a commutative graded Q-algebra on finitely many generators,
//! truncated above a fixed dimension, with relations of exactly two shapes:
//! a generator power vanishing (`h^{n+1} = 0` on projective n-space) and the
//! Grothendieck relation of a projective bundle,
//!
//! ```text
//! xi^r = c_1 xi^{r-1} - c_2 xi^{r-2} + ... + (-1)^{r-1} c_r
//! ```
//!
//! where the `c_i` involve only generators introduced before `xi`. Both rule
//! shapes strictly reduce the exponent of their lead generator, so rewriting
//! terminates and normal forms are unique; two classes are equal iff their
//! normal forms agree term by term. Geometric models enforce their own
//! grading through their power rules; free rings are truncated only by the
//! ring dimension, which is the right universal semantics for verifying
//! polynomial identities in Chern classes.
//!
//! Classes are sparse maps from normal-form monomials to rationals. All
//! arithmetic is exact; truncation above the ring dimension is applied
//! eagerly so intermediate objects stay small.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{int, Rat};

/// Exponent vector over a ring's generators. Ordered degree-reverse-
/// lexicographically; the weighted degree is cached because generators can
/// have degree greater than one.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    deg: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match self.deg.cmp(&other.deg) {
            std::cmp::Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse lexicographic tie-break: the rightmost differing exponent
        // decides, and the smaller exponent there wins (is the larger
        // monomial), which is the degrevlex convention.
        for i in (0..self.exps.len()).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A rewrite rule. Invariant: every Grothendieck replacement monomial has a
/// strictly smaller exponent in the rule's generator than `rank`, and the
/// coefficient classes use only generators declared before it.
#[derive(Clone, Debug)]
enum Rule {
    /// `gen^power = 0`.
    PowerZero { gen: usize, power: u16 },
    /// `gen^rank = sum of replacement terms` (each with `gen` exponent < rank).
    Grothendieck {
        gen: usize,
        rank: u16,
        replacement: Vec<(Monomial, Rat)>,
    },
}

/// How a ring was built. Pullback and pushforward dispatch on this.
#[derive(Clone, Debug)]
pub enum RingKind {
    /// Free truncated ring on named generators.
    Free,
    /// Projective n-space with hyperplane generator.
    Projective { n: usize },
    /// Product of two rings.
    Product {
        left: Arc<ChowRing>,
        right: Arc<ChowRing>,
    },
    /// Projective bundle of the given rank over a base; `xi` is the index of
    /// the relative hyperplane generator (always the last one).
    Bundle {
        base: Arc<ChowRing>,
        xi: usize,
        rank: u16,
    },
}

#[derive(Debug)]
pub struct ChowRing {
    gens: Vec<Generator>,
    rules: Vec<Rule>,
    dim: u32,
    /// Values of the degree functional on degree-`dim` normal monomials.
    /// Entries absent from the map integrate to zero; `None` means the ring
    /// has no functional at all (free rings and bundles over them).
    functional: Option<BTreeMap<Monomial, Rat>>,
    kind: RingKind,
}

impl ChowRing {
    /// The ring of projective n-space: one degree-1 generator `h` with
    /// `h^{n+1} = 0`, dimension `n`, and functional `h^n -> 1`.
    pub fn projective_space(n: usize) -> Arc<ChowRing> {
        let gens = vec![Generator {
            name: "h".to_string(),
            degree: 1,
        }];
        let rules = vec![Rule::PowerZero {
            gen: 0,
            power: n as u16 + 1,
        }];
        let mut functional = BTreeMap::new();
        functional.insert(
            Monomial {
                exps: vec![n as u16],
                deg: n as u32,
            },
            int(1),
        );
        Arc::new(ChowRing {
            gens,
            rules,
            dim: n as u32,
            functional: Some(functional),
            kind: RingKind::Projective { n },
        })
    }

    /// Free truncated ring: named generators with given positive degrees, no
    /// relations except vanishing above `dim`, no degree functional.
    pub fn formal(dim: usize, gens: &[(&str, u32)]) -> Arc<ChowRing> {
        assert!(
            gens.iter().all(|(_, d)| *d >= 1),
            "generators must have positive degree"
        );
        let gens = gens
            .iter()
            .map(|(name, degree)| Generator {
                name: (*name).to_string(),
                degree: *degree,
            })
            .collect();
        Arc::new(ChowRing {
            gens,
            rules: Vec::new(),
            dim: dim as u32,
            functional: None,
            kind: RingKind::Free,
        })
    }

    /// Product ring. Generators of both factors are kept (renamed with a
    /// factor suffix when the names collide), rules carry over, each factor's
    /// generators truncate at that factor's dimension, and the functional is
    /// the product functional when both factors have one.
    pub fn product(left: &Arc<ChowRing>, right: &Arc<ChowRing>) -> Arc<ChowRing> {
        let nl = left.gens.len();
        let mut gens = Vec::with_capacity(nl + right.gens.len());
        for g in &left.gens {
            let collides = right.gens.iter().any(|h| h.name == g.name);
            gens.push(Generator {
                name: if collides {
                    format!("{}1", g.name)
                } else {
                    g.name.clone()
                },
                degree: g.degree,
            });
        }
        for g in &right.gens {
            let collides = left.gens.iter().any(|h| h.name == g.name);
            gens.push(Generator {
                name: if collides {
                    format!("{}2", g.name)
                } else {
                    g.name.clone()
                },
                degree: g.degree,
            });
        }
        let total = gens.len();
        let remap_left = |m: &Monomial| -> Monomial {
            let mut exps = vec![0u16; total];
            exps[..nl].copy_from_slice(&m.exps);
            Monomial { exps, deg: m.deg }
        };
        let remap_right = |m: &Monomial| -> Monomial {
            let mut exps = vec![0u16; total];
            exps[nl..].copy_from_slice(&m.exps);
            Monomial { exps, deg: m.deg }
        };
        let mut rules = Vec::new();
        for r in &left.rules {
            rules.push(shift_rule(r, 0, &remap_left));
        }
        for r in &right.rules {
            rules.push(shift_rule(r, nl, &remap_right));
        }
        let functional = match (&left.functional, &right.functional) {
            (Some(fl), Some(fr)) => {
                let mut map = BTreeMap::new();
                for (ml, vl) in fl {
                    for (mr, vr) in fr {
                        map.insert(remap_left(ml).mul(&remap_right(mr)), vl * vr);
                    }
                }
                Some(map)
            }
            _ => None,
        };
        Arc::new(ChowRing {
            gens,
            rules,
            dim: left.dim + right.dim,
            functional,
            kind: RingKind::Product {
                left: Arc::clone(left),
                right: Arc::clone(right),
            },
        })
    }

    /// The ring of the projective bundle of a rank-`rank` bundle with total
    /// Chern class `chern` (a class of the base ring). Appends a degree-1
    /// generator `xi` with the Grothendieck relation
    /// `xi^r = c_1 xi^{r-1} - c_2 xi^{r-2} + ...`, sets the dimension to
    /// `base.dim + rank - 1`, and extends the functional by
    /// `integral(b * xi^{r-1}) = integral_base(b)`.
    pub fn projective_bundle(
        base: &Arc<ChowRing>,
        rank: usize,
        chern: &Class,
    ) -> Result<Arc<ChowRing>> {
        if !Arc::ptr_eq(&chern.ring, base) {
            return Err(Error::RingMismatch);
        }
        if rank < 1 {
            return Err(Error::PreconditionFailed(
                "projective bundle needs rank >= 1".into(),
            ));
        }
        let nb = base.gens.len();
        let mut gens = base.gens.clone();
        let mut xi_name = "xi".to_string();
        while gens.iter().any(|g| g.name == xi_name) {
            xi_name.push('\'');
        }
        gens.push(Generator {
            name: xi_name,
            degree: 1,
        });
        let xi = nb;
        let extend = |m: &Monomial, xi_exp: u16| -> Monomial {
            let mut exps = Vec::with_capacity(nb + 1);
            exps.extend_from_slice(&m.exps);
            exps.push(xi_exp);
            Monomial {
                exps,
                deg: m.deg + xi_exp as u32,
            }
        };
        let mut rules = Vec::new();
        for r in &base.rules {
            rules.push(shift_rule(r, 0, &|m| extend(m, 0)));
        }
        // xi^r -> sum_{i=1..r} (-1)^{i-1} c_i xi^{r-i}
        let mut replacement = Vec::new();
        for i in 1..=rank {
            let ci = chern.component(i as u32);
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            for (m, c) in &ci.terms {
                replacement.push((extend(m, (rank - i) as u16), &sign * c));
            }
        }
        rules.push(Rule::Grothendieck {
            gen: xi,
            rank: rank as u16,
            replacement,
        });
        let functional = base.functional.as_ref().map(|f| {
            f.iter()
                .map(|(m, v)| (extend(m, rank as u16 - 1), v.clone()))
                .collect()
        });
        Ok(Arc::new(ChowRing {
            gens,
            rules,
            dim: base.dim + rank as u32 - 1,
            functional,
            kind: RingKind::Bundle {
                base: Arc::clone(base),
                xi,
                rank: rank as u16,
            },
        }))
    }

    pub fn dimension(&self) -> u32 {
        self.dim
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn has_functional(&self) -> bool {
        self.functional.is_some()
    }

    fn gen_index(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownBundle(format!("no generator named {name}")))
    }

    fn monomial(&self, exps: Vec<u16>) -> Monomial {
        debug_assert_eq!(exps.len(), self.gens.len());
        let deg = exps
            .iter()
            .zip(&self.gens)
            .map(|(e, g)| *e as u32 * g.degree)
            .sum();
        Monomial { exps, deg }
    }

    fn one_monomial(&self) -> Monomial {
        Monomial {
            exps: vec![0; self.gens.len()],
            deg: 0,
        }
    }

    /// True when the monomial needs no rewriting.
    fn is_normal(&self, m: &Monomial) -> bool {
        if m.deg > self.dim {
            return false;
        }
        for rule in &self.rules {
            match rule {
                Rule::PowerZero { gen, power } => {
                    if m.exps[*gen] >= *power {
                        return false;
                    }
                }
                Rule::Grothendieck { gen, rank, .. } => {
                    if m.exps[*gen] >= *rank {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rewrite raw terms to normal form. Terms killed by truncation or power
    /// rules are dropped; Grothendieck violations are expanded and requeued.
    fn normalize(&self, raw: Vec<(Monomial, Rat)>) -> BTreeMap<Monomial, Rat> {
        let mut out: BTreeMap<Monomial, Rat> = BTreeMap::new();
        let mut stack = raw;
        'term: while let Some((m, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            if m.deg > self.dim {
                continue;
            }
            for rule in &self.rules {
                match rule {
                    Rule::PowerZero { gen, power } => {
                        if m.exps[*gen] >= *power {
                            continue 'term;
                        }
                    }
                    Rule::Grothendieck {
                        gen,
                        rank,
                        replacement,
                    } => {
                        if m.exps[*gen] >= *rank {
                            // Split off one factor of gen^rank and expand it.
                            let mut rest = m.clone();
                            rest.exps[*gen] -= rank;
                            rest.deg -= *rank as u32 * self.gens[*gen].degree;
                            for (rm, rc) in replacement {
                                stack.push((rest.mul(rm), &c * rc));
                            }
                            continue 'term;
                        }
                    }
                }
            }
            debug_assert!(self.is_normal(&m));
            let entry = out.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

fn shift_rule(rule: &Rule, offset: usize, remap: &dyn Fn(&Monomial) -> Monomial) -> Rule {
    match rule {
        Rule::PowerZero { gen, power } => Rule::PowerZero {
            gen: gen + offset,
            power: *power,
        },
        Rule::Grothendieck {
            gen,
            rank,
            replacement,
        } => Rule::Grothendieck {
            gen: gen + offset,
            rank: *rank,
            replacement: replacement
                .iter()
                .map(|(m, c)| (remap(m), c.clone()))
                .collect(),
        },
    }
}

/// An element of a [`ChowRing`]: a sparse rational combination of normal-form
/// monomials of degree at most the ring dimension. The ring is carried along
/// so that cross-ring arithmetic is rejected instead of silently misread.
#[derive(Clone)]
pub struct Class {
    ring: Arc<ChowRing>,
    terms: BTreeMap<Monomial, Rat>,
}

impl Class {
    pub fn zero(ring: &Arc<ChowRing>) -> Class {
        Class {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<ChowRing>) -> Class {
        Class::constant(ring, int(1))
    }

    pub fn constant(ring: &Arc<ChowRing>, q: Rat) -> Class {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(ring.one_monomial(), q);
        }
        Class {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// The generator with the given name, as a class.
    pub fn generator(ring: &Arc<ChowRing>, name: &str) -> Result<Class> {
        let idx = ring.gen_index(name)?;
        let mut exps = vec![0u16; ring.gens.len()];
        exps[idx] = 1;
        let m = ring.monomial(exps);
        let terms = ring.normalize(vec![(m, int(1))]);
        Ok(Class {
            ring: Arc::clone(ring),
            terms,
        })
    }

    /// A single monomial, given as `(generator name, exponent)` pairs.
    pub fn monomial(ring: &Arc<ChowRing>, powers: &[(&str, u16)]) -> Result<Class> {
        let mut exps = vec![0u16; ring.gens.len()];
        for (name, e) in powers {
            exps[ring.gen_index(name)?] += e;
        }
        let m = ring.monomial(exps);
        let terms = ring.normalize(vec![(m, int(1))]);
        Ok(Class {
            ring: Arc::clone(ring),
            terms,
        })
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (by generator names).
    pub fn coeff(&self, powers: &[(&str, u16)]) -> Rat {
        let mut exps = vec![0u16; self.ring.gens.len()];
        for (name, e) in powers {
            match self.ring.gen_index(name) {
                Ok(i) => exps[i] += e,
                Err(_) => return Rat::zero(),
            }
        }
        let m = self.ring.monomial(exps);
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The degree-0 coefficient.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&self.ring.one_monomial())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The homogeneous part of the given degree.
    pub fn component(&self, degree: u32) -> Class {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.deg == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Class {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    /// Largest degree with a nonzero term (0 for the zero class).
    pub fn top_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg).max().unwrap_or(0)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn try_add(&self, other: &Class) -> Result<Class> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Class {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Class) -> Result<Class> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Class {
        self.scale(&int(-1))
    }

    pub fn scale(&self, q: &Rat) -> Class {
        if q.is_zero() {
            return Class::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * q))
            .collect();
        Class {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    pub fn try_mul(&self, other: &Class) -> Result<Class> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let dim = self.ring.dim;
        let mut raw = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.deg + mb.deg > dim {
                    continue;
                }
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        let terms = self.ring.normalize(raw);
        Ok(Class {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Class {
        let mut acc = Class::one(&self.ring);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// `exp(self) = 1 + self + self^2/2! + ...`, defined for classes with no
    /// degree-0 part (they are nilpotent, so the sum is finite).
    pub fn exp(&self) -> Result<Class> {
        if !self.constant_term().is_zero() {
            return Err(Error::PreconditionFailed(
                "exponential needs a class with zero constant term".into(),
            ));
        }
        let mut acc = Class::one(&self.ring);
        let mut power = Class::one(&self.ring);
        let mut kfact = int(1);
        for k in 1..=self.ring.dim {
            power = power.try_mul(self)?;
            if power.is_zero() {
                break;
            }
            kfact *= int(k as i64);
            acc = acc.try_add(&power.scale(&(int(1) / &kfact)))?;
        }
        Ok(acc)
    }

    /// Apply the ring's degree functional to the top-dimensional part.
    pub fn integrate(&self) -> Result<Rat> {
        let functional = self
            .ring
            .functional
            .as_ref()
            .ok_or(Error::DegreeUndefined)?;
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            if m.deg == self.ring.dim {
                if let Some(v) = functional.get(m) {
                    acc += c * v;
                }
            }
        }
        Ok(acc)
    }

    /// Pushforward along a projective bundle's structure map: the coefficient
    /// of `xi^{rank-1}` in the normal form, read as a class of the base.
    pub fn pushforward_xi(&self) -> Result<Class> {
        let RingKind::Bundle { base, xi, rank } = &self.ring.kind else {
            return Err(Error::PreconditionFailed(
                "pushforward needs a projective-bundle ring".into(),
            ));
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exps[*xi] == rank - 1 {
                let exps = m.exps[..*xi].to_vec();
                let bm = base.monomial(exps);
                terms.insert(bm, c.clone());
            }
        }
        Ok(Class {
            ring: Arc::clone(base),
            terms,
        })
    }

    /// Pull this class back to a ring built from its ring: the bundle ring
    /// over it, or a product having it as a factor.
    pub fn pullback_to(&self, target: &Arc<ChowRing>) -> Result<Class> {
        match &target.kind {
            RingKind::Bundle { base, .. } if Arc::ptr_eq(base, &self.ring) => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let mut exps = Vec::with_capacity(m.exps.len() + 1);
                        exps.extend_from_slice(&m.exps);
                        exps.push(0);
                        (
                            Monomial {
                                exps,
                                deg: m.deg,
                            },
                            c.clone(),
                        )
                    })
                    .collect();
                Ok(Class {
                    ring: Arc::clone(target),
                    terms,
                })
            }
            RingKind::Product { left, right } => {
                let nl = left.gens.len();
                let total = target.gens.len();
                if Arc::ptr_eq(left, &self.ring) {
                    let terms = self
                        .terms
                        .iter()
                        .map(|(m, c)| {
                            let mut exps = vec![0u16; total];
                            exps[..nl].copy_from_slice(&m.exps);
                            (Monomial { exps, deg: m.deg }, c.clone())
                        })
                        .collect();
                    Ok(Class {
                        ring: Arc::clone(target),
                        terms,
                    })
                } else if Arc::ptr_eq(right, &self.ring) {
                    let terms = self
                        .terms
                        .iter()
                        .map(|(m, c)| {
                            let mut exps = vec![0u16; total];
                            exps[nl..].copy_from_slice(&m.exps);
                            (Monomial { exps, deg: m.deg }, c.clone())
                        })
                        .collect();
                    Ok(Class {
                        ring: Arc::clone(target),
                        terms,
                    })
                } else {
                    Err(Error::RingMismatch)
                }
            }
            _ => Err(Error::RingMismatch),
        }
    }
}

impl PartialEq for Class {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Class {}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = display_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{}", crate::rat::display(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", crate::rat::display(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Class({self})")
    }
}

fn display_monomial(ring: &ChowRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.gens[i].name.clone()),
            _ => parts.push(format!("{}^{}", ring.gens[i].name, e)),
        }
    }
    parts.join("*")
}

impl std::ops::Add for &Class {
    type Output = Class;
    fn add(self, rhs: &Class) -> Class {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Sub for &Class {
    type Output = Class;
    fn sub(self, rhs: &Class) -> Class {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl std::ops::Mul for &Class {
    type Output = Class;
    fn mul(self, rhs: &Class) -> Class {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}
