//! Exact arithmetic in `Z[h]/(h^N)`, sheaf Euler characteristics, special
//! Schubert classes, and the triple intersection number formulas.
//!
//! Everything is exact integer arithmetic; overflow is detected and
//! reported, never wrapped. Desk-scale inputs stay far below the i64
//! range, but the checks cost nothing.

use alloc::vec;
use alloc::vec::Vec;

use crate::bruhat::preceq;
use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, LieType, SchubertSymbol};
use crate::projection::{s_sets, z_data, ZData};

/// An element of `Z[h]/(h^N)`: integer coefficients for `h^0 .. h^{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HClass {
    coeffs: Vec<i64>,
}

impl HClass {
    /// The zero class with modulus exponent `n`.
    pub fn zero(n: usize) -> Self {
        HClass { coeffs: vec![0; n] }
    }

    /// The unit class `1`.
    pub fn one(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = 1;
        c
    }

    /// The monomial `h^j`; zero when `j >= n` by truncation.
    pub fn h_power(n: usize, j: usize) -> Self {
        let mut c = Self::zero(n);
        if j < n {
            c.coeffs[j] = 1;
        }
        c
    }

    /// The class `2h - h^2` of a quadric hypersurface.
    pub fn quadric(n: usize) -> Self {
        let mut c = Self::zero(n);
        if n > 1 {
            c.coeffs[1] = 2;
        }
        if n > 2 {
            c.coeffs[2] = -1;
        }
        c
    }

    /// Modulus exponent `N`.
    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `h^j` (zero beyond the modulus).
    pub fn coeff(&self, j: usize) -> i64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &HClass) -> Result<HClass> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(HClass { coeffs })
    }

    pub fn scale(&self, factor: i64) -> Result<HClass> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(HClass { coeffs })
    }

    /// Truncated product.
    pub fn mul(&self, other: &HClass) -> Result<HClass> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch);
        }
        let n = self.modulus();
        let mut coeffs = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(HClass { coeffs })
    }

    pub fn pow(&self, e: usize) -> Result<HClass> {
        let mut acc = HClass::one(self.modulus());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Sheaf Euler characteristic: `h^j -> 1` for every `j`, including the
    /// structure sheaf `h^0`.
    pub fn chi(&self) -> Result<i64> {
        self.coeffs
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }
}

/// A special Schubert class: codimension `r`, with the extra class of
/// codimension `k` in type D flagged by `tilde`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpecialSchubert {
    r: usize,
    tilde: bool,
}

impl SpecialSchubert {
    /// Validates `1 <= r <= n+k` and `tilde => (type D and r = k)`.
    pub fn new(spec: &Grassmannian, r: usize, tilde: bool) -> Result<Self> {
        let s = SpecialSchubert { r, tilde };
        s.validate(spec)?;
        Ok(s)
    }

    pub fn validate(&self, spec: &Grassmannian) -> Result<()> {
        if self.r < 1 || self.r > spec.n() + spec.k() {
            return Err(Error::InvalidSpecial("codimension out of range"));
        }
        if self.tilde {
            if spec.lie_type() != LieType::D {
                return Err(Error::InvalidSpecial("tilde classes exist only in type D"));
            }
            if self.r != spec.k() {
                return Err(Error::InvalidSpecial("tilde class has codimension k"));
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn tilde(&self) -> bool {
        self.tilde
    }

    /// Codimension of the corresponding class on the rank-one space.
    pub fn quadric_codim(&self, spec: &Grassmannian) -> usize {
        spec.m() - 1 + self.r
    }

    /// The type in {0,1} of the quadric-side class, defined only at the
    /// middle codimension `m-1+r = n` in type D.
    fn quadric_type(&self, spec: &Grassmannian) -> Result<i64> {
        if spec.lie_type() != LieType::D || self.quadric_codim(spec) != spec.n() {
            return Err(Error::PreconditionViolated(
                "quadric-side type is defined only at middle codimension in type D",
            ));
        }
        Ok(if self.tilde { 1 } else { 0 })
    }
}

/// The class of `Z_{P,T}` in `K(P^{N-1})`: `h^l (2h - h^2)^q`.
pub fn z_class(spec: &Grassmannian, z: &ZData) -> Result<HClass> {
    let n = spec.ambient();
    HClass::h_power(n, z.l()).mul(&HClass::quadric(n).pow(z.q())?)
}

fn binomial(n: usize, k: usize) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let mut acc: i64 = 1;
    for j in 0..k.min(n - k) {
        acc = acc.checked_mul((n - j) as i64).ok_or(Error::Overflow)? / (j as i64 + 1);
    }
    Ok(acc)
}

/// `Σ_{j=0}^{upper} binom(q,j) (-1)^j 2^{q-j}`, with the empty sum zero.
fn alternating_sum(q: usize, upper: i64) -> Result<i64> {
    if upper < 0 {
        return Ok(0);
    }
    let top = (upper as usize).min(q);
    let mut acc: i64 = 0;
    for j in 0..=top {
        let pow = 1i64.checked_shl((q - j) as u32).ok_or(Error::Overflow)?;
        let term = binomial(q, j)?.checked_mul(pow).ok_or(Error::Overflow)?;
        acc = if j % 2 == 0 {
            acc.checked_add(term).ok_or(Error::Overflow)?
        } else {
            acc.checked_sub(term).ok_or(Error::Overflow)?
        };
    }
    Ok(acc)
}

/// `χ(h^a (2-h)^b)` over `P^{N-1}`, computed through the ring.
fn chi_h_pow_two_minus_h(ambient: usize, a: usize, b: usize) -> Result<i64> {
    let mut two_minus_h = HClass::zero(ambient);
    if ambient > 0 {
        two_minus_h = two_minus_h.add(&HClass::one(ambient).scale(2)?)?;
    }
    if ambient > 1 {
        let mut h = HClass::h_power(ambient, 1);
        h = h.scale(-1)?;
        two_minus_h = two_minus_h.add(&h)?;
    }
    HClass::h_power(ambient, a).mul(&two_minus_h.pow(b)?)?.chi()
}

/// The parity factor `δ` of the middle-codimension type D case.
fn delta_factor(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
    special: &SpecialSchubert,
    l: usize,
    q: usize,
) -> Result<i64> {
    if spec.lie_type() == LieType::D && special.r() == spec.k() && q == 0 && l == spec.n() + 1 {
        let ss = s_sets(spec, p, t)?;
        let eta = special.quadric_type(spec)? + (ss.s().len() + ss.s_prime().len()) as i64;
        Ok(eta.rem_euclid(2))
    } else {
        Ok(1)
    }
}

/// Triple intersection number by the per-type formulas.
///
/// Type C is the closed alternating sum. Types B and D run through the
/// quadric: the pullback regime applies while the quadric-side class has
/// codimension below the middle degree; past it, one quadratic factor
/// drops when `q > 0`, and the linear-times-linear case carries the
/// parity factor `δ` (only nontrivial in type D at `r = k`, `l = n+1`).
pub fn triple_intersection(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
    special: &SpecialSchubert,
) -> Result<i64> {
    special.validate(spec)?;
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let z = z_data(spec, p, t)?;
    let (l, q) = (z.l(), z.q());
    let (m, n, ambient, r) = (spec.m(), spec.n(), spec.ambient(), special.r());
    match spec.lie_type() {
        LieType::C => alternating_sum(q, 2 * n as i64 - (m + r + l + q) as i64),
        LieType::B | LieType::D => {
            let quadric_codim = m - 1 + r;
            if quadric_codim < n {
                chi_h_pow_two_minus_h(ambient, m + r + l + q - 1, q)
            } else if q > 0 {
                chi_h_pow_two_minus_h(ambient, m + r + l + q - 1, q - 1)
            } else {
                let delta = delta_factor(spec, p, t, special, l, q)?;
                let chi = chi_h_pow_two_minus_h(ambient, m + r + l - 1, 0)?;
                delta.checked_mul(chi).ok_or(Error::Overflow)
            }
        }
    }
}

/// Triple intersection number by the unified formula, as a single
/// alternating sum over adjusted counts `l'` and `q'`.
///
/// The reduced branch (`q' = q-1`, `l' = l+m+r`) applies exactly when the
/// space is orthogonal, `q > 0`, and the quadric-side codimension
/// `m-1+r` has reached the middle degree `n`. Must agree with
/// [`triple_intersection`] everywhere.
pub fn triple_intersection_unified(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
    special: &SpecialSchubert,
) -> Result<i64> {
    special.validate(spec)?;
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let z = z_data(spec, p, t)?;
    let (l, q) = (z.l(), z.q());
    let (m, n, ambient, r) = (spec.m(), spec.n(), spec.ambient(), special.r());
    let reduced = spec.is_orthogonal() && q > 0 && m + r > n;
    let (qp, lp) = if reduced {
        (q - 1, l + m + r)
    } else {
        (q, l + m + r - 1)
    };
    let delta = delta_factor(spec, p, t, special, l, q)?;
    let sum = alternating_sum(qp, ambient as i64 - 1 - (lp + qp) as i64)?;
    delta.checked_mul(sum).ok_or(Error::Overflow)
}

/// Variant of the unified formula that reduces the quadratic count for
/// every orthogonal product with `q > 0`, regardless of the special
/// class's codimension (the reduced `l'` still requires `r >= k`).
///
/// Kept for comparison only: it disagrees with the per-type formulas in
/// the orthogonal pullback regime once truncation matters, and
/// `selfcheck` reports those divergences.
pub fn triple_intersection_alt(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
    special: &SpecialSchubert,
) -> Result<i64> {
    special.validate(spec)?;
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let z = z_data(spec, p, t)?;
    let (l, q) = (z.l(), z.q());
    let (m, ambient, r, k) = (spec.m(), spec.ambient(), special.r(), spec.k());
    let orth = spec.is_orthogonal();
    let qp = if orth && q > 0 { q - 1 } else { q };
    let lp = if orth && q > 0 && r >= k {
        l + m + r
    } else {
        l + m + r - 1
    };
    let delta = delta_factor(spec, p, t, special, l, q)?;
    let sum = alternating_sum(qp, ambient as i64 - 1 - (lp + qp) as i64)?;
    delta.checked_mul(sum).ok_or(Error::Overflow)
}
