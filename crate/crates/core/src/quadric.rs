//! Desk-scale oracle for the quadric hypersurface `OG(1,N)` of an
//! orthogonal space: Schubert classes, their pushforwards to
//! `Z[h]/(h^N)`, and the products that are forced by the pushforward
//! lattice and the middle-degree parity rules.
//!
//! The module exists to validate the Pieri pipeline on `m = 1` spaces and
//! deliberately imports nothing but the ring arithmetic, so the code
//! paths stay independent.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, LieType, SchubertSymbol};
use crate::ktheory::{HClass, SpecialSchubert};

/// The quadric `OG(1,N)` for an orthogonal Lie type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadric {
    lie_type: LieType,
    n: usize,
}

/// A Schubert basis element of the quadric: one class per codimension,
/// except that the even quadric has two middle classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuadricSchubert {
    Plain(usize),
    Tilde,
}

impl Quadric {
    pub fn new(lie_type: LieType, n: usize) -> Result<Self> {
        if lie_type == LieType::C {
            return Err(Error::WrongLieType {
                expected: "B or D",
                found: lie_type,
            });
        }
        if n < 1 {
            return Err(Error::InvalidParameters("n must be positive"));
        }
        Ok(Quadric { lie_type, n })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient dimension `N` of the underlying vector space.
    pub fn ambient(&self) -> usize {
        match self.lie_type {
            LieType::B => 2 * self.n + 1,
            LieType::D => 2 * self.n + 2,
            LieType::C => unreachable!(),
        }
    }

    /// Dimension of the quadric: `2n-1` (odd), `2n` (even).
    pub fn dim(&self) -> usize {
        self.ambient() - 2
    }

    fn check(&self, cls: QuadricSchubert) -> Result<()> {
        match cls {
            QuadricSchubert::Plain(j) if j <= self.dim() => Ok(()),
            QuadricSchubert::Plain(_) => Err(Error::InvalidSymbol("codimension exceeds dim Q")),
            QuadricSchubert::Tilde if self.lie_type == LieType::D => Ok(()),
            QuadricSchubert::Tilde => Err(Error::WrongLieType {
                expected: "D",
                found: self.lie_type,
            }),
        }
    }

    pub fn codim(&self, cls: QuadricSchubert) -> usize {
        match cls {
            QuadricSchubert::Plain(j) => j,
            QuadricSchubert::Tilde => self.n,
        }
    }

    /// All basis classes, by codimension (tilde right after the middle).
    pub fn basis(&self) -> Vec<QuadricSchubert> {
        let mut out = Vec::new();
        for j in 0..=self.dim() {
            out.push(QuadricSchubert::Plain(j));
            if self.lie_type == LieType::D && j == self.n {
                out.push(QuadricSchubert::Tilde);
            }
        }
        out
    }

    /// Pushforward of a basis class to `Z[h]/(h^N)`:
    /// `h^j (2h - h^2)` below the middle degree and `h^{j+1}` from it on;
    /// both middle classes of the even quadric push to `h^{n+1}`.
    pub fn pushforward_basis(&self, cls: QuadricSchubert) -> Result<HClass> {
        self.check(cls)?;
        let ambient = self.ambient();
        match cls {
            QuadricSchubert::Plain(j) if j < self.n => {
                HClass::h_power(ambient, j).mul(&HClass::quadric(ambient))
            }
            QuadricSchubert::Plain(j) => Ok(HClass::h_power(ambient, j + 1)),
            QuadricSchubert::Tilde => Ok(HClass::h_power(ambient, self.n + 1)),
        }
    }

    /// The type in {0,1} of a middle-degree class of the even quadric.
    fn middle_type(&self, cls: QuadricSchubert) -> i64 {
        match cls {
            QuadricSchubert::Plain(_) => 0,
            QuadricSchubert::Tilde => 1,
        }
    }
}

/// An integer combination of quadric Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricClass {
    quadric: Quadric,
    coeffs: BTreeMap<QuadricSchubert, i64>,
}

impl QuadricClass {
    pub fn zero(quadric: Quadric) -> Self {
        QuadricClass {
            quadric,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(quadric: Quadric, cls: QuadricSchubert) -> Result<Self> {
        quadric.check(cls)?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(cls, 1);
        Ok(QuadricClass { quadric, coeffs })
    }

    pub fn coeff(&self, cls: QuadricSchubert) -> i64 {
        self.coeffs.get(&cls).copied().unwrap_or(0)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (QuadricSchubert, i64)> + '_ {
        self.coeffs.iter().map(|(&c, &v)| (c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|&v| v == 0)
    }

    fn add_term(&mut self, cls: QuadricSchubert, v: i64) -> Result<()> {
        let slot = self.coeffs.entry(cls).or_insert(0);
        *slot = slot.checked_add(v).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.coeffs.remove(&cls);
        }
        Ok(())
    }

    /// Linear extension of the basis pushforwards.
    pub fn pushforward(&self) -> Result<HClass> {
        let mut acc = HClass::zero(self.quadric.ambient());
        for (&cls, &v) in &self.coeffs {
            acc = acc.add(&self.quadric.pushforward_basis(cls)?.scale(v)?)?;
        }
        Ok(acc)
    }
}

/// Result of a quadric product: a full basis expansion where it is
/// determined, otherwise the pushforward alone (the even quadric's
/// middle degree cannot be split from pushforward data).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadricProduct {
    Expanded(QuadricClass),
    PushforwardOnly(HClass),
}

impl QuadricProduct {
    /// The product's pushforward, whichever form it came in.
    pub fn pushforward(&self) -> Result<HClass> {
        match self {
            QuadricProduct::Expanded(c) => c.pushforward(),
            QuadricProduct::PushforwardOnly(h) => Ok(h.clone()),
        }
    }
}

/// Expands a class of the odd quadric from its pushforward.
///
/// The pushforwards are triangular with leading coefficients 2 (below the
/// middle) and 1, so integral expansions are unique; inputs outside the
/// pushforward lattice are rejected.
pub fn expand(quadric: &Quadric, x: &HClass) -> Result<QuadricClass> {
    if quadric.lie_type != LieType::B {
        return Err(Error::WrongLieType {
            expected: "B",
            found: quadric.lie_type,
        });
    }
    if x.modulus() != quadric.ambient() {
        return Err(Error::ModulusMismatch);
    }
    if x.coeff(0) != 0 {
        return Err(Error::PreconditionViolated(
            "pushforwards have no constant term",
        ));
    }
    let n = quadric.n;
    let mut out = QuadricClass::zero(*quadric);
    let mut coeffs = alloc::vec![0i64; quadric.dim() + 1];
    for d in 1..=quadric.ambient() - 1 {
        let mut value = x.coeff(d);
        // contribution of the previous class's -h^{j+2} tail
        if d >= 2 && d - 2 < n {
            value = value.checked_add(coeffs[d - 2]).ok_or(Error::Overflow)?;
        }
        let j = d - 1;
        let lead = if j < n { 2 } else { 1 };
        if value % lead != 0 {
            return Err(Error::PreconditionViolated(
                "class is not an integral combination of basis pushforwards",
            ));
        }
        coeffs[j] = value / lead;
        if coeffs[j] != 0 {
            out.add_term(QuadricSchubert::Plain(j), coeffs[j])?;
        }
    }
    // residual check: the degree-N-1 tail of the last below-middle class
    // was consumed above, so reconstruction must match exactly
    if out.pushforward()? != *x {
        return Err(Error::PreconditionViolated(
            "class is not in the pushforward lattice",
        ));
    }
    Ok(out)
}

/// Product of two quadric Schubert classes.
///
/// When either factor lies below the middle degree it is a pullback from
/// projective space and the projection formula gives the pushforward of
/// the product; the odd quadric re-expands it uniquely. Middle-times-
/// middle products on the even quadric follow the parity rules, and
/// anything of total codimension beyond `dim Q` is zero.
pub fn product(
    quadric: &Quadric,
    a: QuadricSchubert,
    b: QuadricSchubert,
) -> Result<QuadricProduct> {
    quadric.check(a)?;
    quadric.check(b)?;
    let n = quadric.n;
    let (lo, hi) = if quadric.codim(a) <= quadric.codim(b) {
        (a, b)
    } else {
        (b, a)
    };
    if quadric.codim(lo) < n {
        let pf = HClass::h_power(quadric.ambient(), quadric.codim(lo))
            .mul(&quadric.pushforward_basis(hi)?)?;
        return match quadric.lie_type {
            LieType::B => Ok(QuadricProduct::Expanded(expand(quadric, &pf)?)),
            _ => Ok(QuadricProduct::PushforwardOnly(pf)),
        };
    }
    // both factors at or past the middle degree
    if quadric.lie_type == LieType::D && quadric.codim(lo) == n && quadric.codim(hi) == n {
        let parity =
            (quadric.middle_type(lo) + quadric.middle_type(hi) + n as i64 + 1).rem_euclid(2);
        let mut out = QuadricClass::zero(*quadric);
        if parity != 0 {
            out.add_term(QuadricSchubert::Plain(2 * n), parity)?;
        }
        return Ok(QuadricProduct::Expanded(out));
    }
    // codimension sum exceeds dim Q
    Ok(QuadricProduct::Expanded(QuadricClass::zero(*quadric)))
}

/// The quadric Schubert class of a rank-one Schubert symbol `{c}`.
pub fn symbol_class(quadric: &Quadric, sym: &SchubertSymbol) -> Result<QuadricSchubert> {
    if sym.len() != 1 {
        return Err(Error::InvalidSymbol("rank-one symbols have one element"));
    }
    let c = sym.elems()[0];
    let n = quadric.n;
    let cls = match quadric.lie_type {
        LieType::B => {
            if c <= n {
                QuadricSchubert::Plain(2 * n - c)
            } else {
                QuadricSchubert::Plain(2 * n + 1 - c)
            }
        }
        LieType::D => {
            if c <= n {
                QuadricSchubert::Plain(2 * n + 1 - c)
            } else if c == n + 1 {
                QuadricSchubert::Plain(n)
            } else if c == n + 2 {
                QuadricSchubert::Tilde
            } else {
                QuadricSchubert::Plain(2 * n + 2 - c)
            }
        }
        LieType::C => unreachable!(),
    };
    quadric.check(cls)?;
    Ok(cls)
}

/// The quadric-side class of a special Schubert class on an `m = 1`
/// orthogonal space.
pub fn special_class(spec: &Grassmannian, special: &SpecialSchubert) -> Result<QuadricSchubert> {
    if spec.m() != 1 || !spec.is_orthogonal() {
        return Err(Error::PreconditionViolated(
            "oracle comparison applies to m = 1 orthogonal spaces",
        ));
    }
    special.validate(spec)?;
    if special.tilde() {
        Ok(QuadricSchubert::Tilde)
    } else {
        Ok(QuadricSchubert::Plain(special.r()))
    }
}
