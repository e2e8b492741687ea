//! A small expression language for bundles built from standard pieces.
//!
//! Expressions name a bundle over projective n-space without fixing n:
//! `O(d)` line bundles, the tangent bundle `T`, trivial bundles `triv(r)`,
//! and syzygy bundles `syz(d1,...,dk)`, combined by `dual`, `det`, `end`,
//! `sym(m, e)`, `wedge(k, e)`, `twist(e, d)`, `tensor(e1, e2)`,
//! `dsum(e1, e2)` and `frob(e, p, m)`.
//!
//! Evaluation comes in two flavors: [`BundleExpr::splitting`] restricts to a
//! line (the tangent bundle restricting via the Euler sequence), and a
//! Chern-class evaluation lives on [`crate::bundle::Bundle`]. Syzygy bundles
//! only evaluate to Chern data; their restriction to a line is not determined
//! by the degrees alone.

use std::fmt;
use std::sync::Arc;

use crate::bundle::{hyperplane, Bundle};
use crate::chow::ChowRing;
use crate::error::{Error, Result};
use crate::rat::int;
use crate::split::{euler_restriction, SplittingType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleExpr {
    /// `O(d)`.
    Line(i64),
    /// `T`, the tangent bundle of the ambient projective space.
    Tangent,
    /// `triv(r)`, the trivial bundle of rank `r >= 1`.
    Trivial(usize),
    /// `syz(d1,...,dk)`: the kernel of the evaluation of generic forms of
    /// the given positive degrees.
    Syzygy(Vec<i64>),
    Dual(Box<BundleExpr>),
    Det(Box<BundleExpr>),
    /// Endomorphism bundle, `dual(e) ⊗ e`.
    End(Box<BundleExpr>),
    Sym(usize, Box<BundleExpr>),
    Wedge(usize, Box<BundleExpr>),
    Twist(Box<BundleExpr>, i64),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Dsum(Box<BundleExpr>, Box<BundleExpr>),
    Frobenius(Box<BundleExpr>, u64, u32),
}

impl BundleExpr {
    pub fn parse(src: &str) -> Result<BundleExpr> {
        let toks = lex(src)?;
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input at token {}",
                p.pos + 1
            )));
        }
        Ok(e)
    }

    /// Chern-data evaluation over a projective-space ring.
    pub fn bundle(&self, ring: &Arc<ChowRing>) -> Result<Bundle> {
        use BundleExpr::*;
        match self {
            Line(d) => Bundle::o(ring, *d),
            Tangent => Bundle::tangent(ring),
            Trivial(r) => Bundle::trivial(ring, *r),
            Syzygy(ds) => Bundle::syzygy(ring, ds),
            Dual(e) => Ok(e.bundle(ring)?.dual()),
            Det(e) => Ok(e.bundle(ring)?.det()),
            End(e) => e.bundle(ring)?.end(),
            Sym(m, e) => e.bundle(ring)?.sym(*m),
            Wedge(k, e) => e.bundle(ring)?.wedge(*k),
            Twist(e, d) => {
                let h = hyperplane(ring)?;
                e.bundle(ring)?.twist(&h.scale(&int(*d)))
            }
            Tensor(a, b) => a.bundle(ring)?.tensor(&b.bundle(ring)?),
            Dsum(a, b) => a.bundle(ring)?.dsum(&b.bundle(ring)?),
            Frobenius(e, p, m) => e.bundle(ring)?.frobenius_pullback(*p, *m),
        }
    }

    /// Splitting type of the restriction to a line inside projective
    /// `n`-space. Syzygy bundles are rejected: their splitting on a line
    /// depends on the chosen forms, not only on the degrees.
    pub fn splitting(&self, n: usize) -> Result<SplittingType> {
        use BundleExpr::*;
        match self {
            Line(d) => SplittingType::new(&[*d]),
            Tangent => euler_restriction(n),
            Trivial(r) => {
                if *r == 0 {
                    return Err(Error::EmptyInput);
                }
                SplittingType::new(&vec![0; *r])
            }
            Syzygy(_) => Err(Error::UnknownBundle(
                "syz(...) has no splitting-type evaluation: the restriction \
                 to a line is not determined by the degrees"
                    .into(),
            )),
            Dual(e) => Ok(e.splitting(n)?.dual()),
            Det(e) => {
                let s = e.splitting(n)?;
                s.wedge(s.rank())
            }
            End(e) => {
                let s = e.splitting(n)?;
                Ok(s.dual().tensor(&s))
            }
            Sym(m, e) => Ok(e.splitting(n)?.sym(*m)),
            Wedge(k, e) => e.splitting(n)?.wedge(*k),
            Twist(e, d) => Ok(e.splitting(n)?.twist(*d)),
            Tensor(a, b) => Ok(a.splitting(n)?.tensor(&b.splitting(n)?)),
            Dsum(a, b) => Ok(a.splitting(n)?.dsum(&b.splitting(n)?)),
            Frobenius(e, p, m) => Ok(e.splitting(n)?.frobenius_pullback(*p, *m)),
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BundleExpr::*;
        match self {
            Line(d) => write!(f, "O({d})"),
            Tangent => write!(f, "T"),
            Trivial(r) => write!(f, "triv({r})"),
            Syzygy(ds) => {
                write!(f, "syz(")?;
                for (i, d) in ds.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            Dual(e) => write!(f, "dual({e})"),
            Det(e) => write!(f, "det({e})"),
            End(e) => write!(f, "end({e})"),
            Sym(m, e) => write!(f, "sym({m},{e})"),
            Wedge(k, e) => write!(f, "wedge({k},{e})"),
            Twist(e, d) => write!(f, "twist({e},{d})"),
            Tensor(a, b) => write!(f, "tensor({a},{b})"),
            Dsum(a, b) => write!(f, "dsum({a},{b})"),
            Frobenius(e, p, m) => write!(f, "frob({e},{p},{m})"),
        }
    }
}

/// Named example bundles, returned with the dimension of their ambient
/// projective space.
pub fn named(name: &str) -> Result<(BundleExpr, usize)> {
    use BundleExpr::*;
    let t1 = || Box::new(Twist(Box::new(Tangent), -1));
    match name {
        // O(-1) ⊗ (T(-1))^⊗3 on the plane: nonnegative characteristic
        // numbers but a degree -1 line summand on every line.
        "notnef" => Ok((
            Twist(
                Box::new(Tensor(Box::new(Tensor(t1(), t1())), t1())),
                -1,
            ),
            2,
        )),
        // The rank-5 quotient in the length-2 punctual Hilbert scheme
        // sequence on the plane.
        "hilb2p2" => Ok((Twist(Box::new(Sym(4, t1())), -2), 2)),
        _ => Err(Error::UnknownBundle(name.into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            toks.push(Tok::LParen);
            i += 1;
        } else if c == ')' {
            toks.push(Tok::RParen);
            i += 1;
        } else if c == ',' {
            toks.push(Tok::Comma);
            i += 1;
        } else if c == '-' || c.is_ascii_digit() {
            let start = i;
            i += 1;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let s = &src[start..i];
            let v: i64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
            toks.push(Tok::Int(v));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            toks.push(Tok::Ident(src[start..i].to_string()));
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let got = self.next()?;
        if got != want {
            return Err(Error::Parse(format!("expected {what}, got {got:?}")));
        }
        Ok(())
    }

    fn int(&mut self) -> Result<i64> {
        match self.next()? {
            Tok::Int(v) => Ok(v),
            other => Err(Error::Parse(format!("expected integer, got {other:?}"))),
        }
    }

    fn count(&mut self, what: &str) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Parse(format!("{what} must be nonnegative, got {v}")))
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        use BundleExpr::*;
        let name = match self.next()? {
            Tok::Ident(s) => s,
            other => {
                return Err(Error::Parse(format!(
                    "expected a bundle expression, got {other:?}"
                )))
            }
        };
        if name == "T" {
            return Ok(Tangent);
        }
        self.expect(Tok::LParen, "`(`")?;
        let e = match name.as_str() {
            "O" => Line(self.int()?),
            "triv" => {
                let r = self.count("rank")?;
                if r == 0 {
                    return Err(Error::Parse("triv(0) has no fibers".into()));
                }
                Trivial(r)
            }
            "syz" => {
                let mut ds = vec![self.int()?];
                while self.toks.get(self.pos) == Some(&Tok::Comma) {
                    self.pos += 1;
                    ds.push(self.int()?);
                }
                if ds.iter().any(|d| *d < 1) {
                    return Err(Error::Parse("syz degrees must be positive".into()));
                }
                Syzygy(ds)
            }
            "dual" => Dual(Box::new(self.expr()?)),
            "det" => Det(Box::new(self.expr()?)),
            "end" => End(Box::new(self.expr()?)),
            "sym" => {
                let m = self.count("symmetric power")?;
                self.expect(Tok::Comma, "`,`")?;
                Sym(m, Box::new(self.expr()?))
            }
            "wedge" => {
                let k = self.count("exterior power")?;
                self.expect(Tok::Comma, "`,`")?;
                Wedge(k, Box::new(self.expr()?))
            }
            "twist" => {
                let e = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                Twist(Box::new(e), self.int()?)
            }
            "tensor" | "dsum" => {
                let a = Box::new(self.expr()?);
                self.expect(Tok::Comma, "`,`")?;
                let b = Box::new(self.expr()?);
                if name == "tensor" {
                    Tensor(a, b)
                } else {
                    Dsum(a, b)
                }
            }
            "frob" => {
                let e = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let p = self.int()?;
                if p < 2 {
                    return Err(Error::Parse(format!(
                        "frobenius needs a prime p >= 2, got {p}"
                    )));
                }
                self.expect(Tok::Comma, "`,`")?;
                let m = self.count("frobenius iterate")?;
                let m = u32::try_from(m)
                    .map_err(|_| Error::Parse("frobenius iterate too large".into()))?;
                Frobenius(Box::new(e), p as u64, m)
            }
            _ => return Err(Error::Parse(format!("unknown operator `{name}`"))),
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(e)
    }
}
