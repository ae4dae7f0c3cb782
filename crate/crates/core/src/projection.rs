//! Complete-intersection data of the projected Richardson variety and the
//! shrinking construction.
//!
//! For `T ⪯ P` the projected Richardson variety `Z_{P,T}` is a complete
//! intersection in projective space, cut out by one linear equation `x_c`
//! per `c` in `L_{P,T}` and one quadratic equation per gap in `Q_{P,T}`.
//! Only the index data is stored; every downstream formula consumes the
//! counts `l` and `q` plus, in type D, the sets `S` and `S'`.
//!
//! [`shrink`] produces the symbol with `T ⪯ P̃ ⪯ P`, identical Z-data,
//! and `P̃ → T`; it is how one sees that the projection is surjective
//! onto the complete intersection.

use alloc::vec::Vec;

use crate::bruhat::preceq;
use crate::diagram::analyze;
use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, LieType, SchubertSymbol};

/// Generators of `Z_{P,T}` as index data: linear variable indices and
/// quadratic gap pairs `(c,d)` over consecutive elements of `Q` with
/// `d - c >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZData {
    p: SchubertSymbol,
    t: SchubertSymbol,
    linear_vars: Vec<usize>,
    quad_gaps: Vec<(usize, usize)>,
}

impl ZData {
    pub fn p(&self) -> &SchubertSymbol {
        &self.p
    }

    pub fn t(&self) -> &SchubertSymbol {
        &self.t
    }

    /// Indices `c` with generator `x_c`, i.e. the set `L_{P,T}`.
    pub fn linear_vars(&self) -> &[usize] {
        &self.linear_vars
    }

    /// Gap pairs `(c,d)`; the generator is the partial sum `f_d - f_c`.
    pub fn quad_gaps(&self) -> &[(usize, usize)] {
        &self.quad_gaps
    }

    /// Number of linear equations.
    pub fn l(&self) -> usize {
        self.linear_vars.len()
    }

    /// Number of quadratic equations.
    pub fn q(&self) -> usize {
        self.quad_gaps.len()
    }
}

/// Complete-intersection presentation of `Z_{P,T}`. Requires `T ⪯ P`.
pub fn z_data(spec: &Grassmannian, p: &SchubertSymbol, t: &SchubertSymbol) -> Result<ZData> {
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let report = analyze(spec, p, t)?;
    let quad_gaps = gaps(report.q_set());
    Ok(ZData {
        p: p.clone(),
        t: t.clone(),
        linear_vars: report.l_set().to_vec(),
        quad_gaps,
    })
}

/// Consecutive pairs of `q_set` at distance at least two.
///
/// The trivial generator at the left endpoint 0 is never emitted; 0 only
/// serves as the left end of the first gap.
fn gaps(q_set: &[usize]) -> Vec<(usize, usize)> {
    q_set
        .windows(2)
        .filter(|w| w[1] - w[0] >= 2)
        .map(|w| (w[0], w[1]))
        .collect()
}

/// The sets `S` and `S'` governing the type of a middle-dimensional
/// linear `Z_{P,T}` inside the even quadric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSets {
    s: Vec<usize>,
    s_prime: Vec<usize>,
}

impl SSets {
    /// `S = { i in [1,n+1] : t_j <= i <= p_j for some j }`.
    pub fn s(&self) -> &[usize] {
        &self.s
    }

    /// `S' = { p in P : p >= n+2 and N+1-p in S }`.
    pub fn s_prime(&self) -> &[usize] {
        &self.s_prime
    }
}

/// Computes `S` and `S'` for a type D pair `T ⪯ P`.
pub fn s_sets(spec: &Grassmannian, p: &SchubertSymbol, t: &SchubertSymbol) -> Result<SSets> {
    if spec.lie_type() != LieType::D {
        return Err(Error::WrongLieType {
            expected: "D",
            found: spec.lie_type(),
        });
    }
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let n = spec.n();
    let ambient = spec.ambient();
    let s: Vec<usize> = (1..=n + 1)
        .filter(|&i| {
            t.elems()
                .iter()
                .zip(p.elems())
                .any(|(&lo, &hi)| lo <= i && i <= hi)
        })
        .collect();
    let s_prime: Vec<usize> = p
        .elems()
        .iter()
        .copied()
        .filter(|&c| c >= n + 2 && s.binary_search(&(ambient + 1 - c)).is_ok())
        .collect();
    Ok(SSets { s, s_prime })
}

/// The type in {0,1} of a linear `Z_{P,T}` of codimension `n` in the even
/// quadric: `(|S| + |S'| + n + 1) mod 2`.
///
/// Requires `q = 0` and `l = n+1`, i.e. that `Z` really is linear of the
/// middle codimension.
pub fn z_type(spec: &Grassmannian, p: &SchubertSymbol, t: &SchubertSymbol) -> Result<u8> {
    if spec.lie_type() != LieType::D {
        return Err(Error::WrongLieType {
            expected: "D",
            found: spec.lie_type(),
        });
    }
    let z = z_data(spec, p, t)?;
    if z.q() != 0 || z.l() != spec.n() + 1 {
        return Err(Error::PreconditionViolated(
            "Z is not linear of codimension n in the quadric",
        ));
    }
    let ss = s_sets(spec, p, t)?;
    Ok(((ss.s.len() + ss.s_prime.len() + spec.n() + 1) % 2) as u8)
}

/// The shrinking construction: the symbol `P'` (types B/C) or `P̃`
/// (type D) with `T ⪯ shrink ⪯ P`, identical Z-data, and `shrink → T`.
///
/// Rows are rewritten case by case against the sentinel `t_{m+1} = N+1`:
/// a row with `p_i < t_{i+1}` is kept; a row with `p_i >= t_{i+1}` drops
/// to `t_{i+1}` (reflected through the center in type D when `t_{i+1}` is
/// a central column) when `t_{i+1}-1` is not a cut, and otherwise to the
/// largest column of `[t_i, t_{i+1}-1]` outside `L_{P,T}`.
///
/// The construction is guaranteed for the standard range (`m <= n` in
/// type D, always in types B and C). On the disconnected maximal space
/// `OG(n+1, 2n+2)` the underlying diagram facts fail and an error is
/// returned rather than a malformed symbol.
pub fn shrink(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
) -> Result<SchubertSymbol> {
    if !preceq(spec, t, p) {
        return Err(Error::NotPreceq);
    }
    let report = analyze(spec, p, t)?;
    let n = spec.n();
    let ambient = spec.ambient();
    let m = spec.m();
    let te = t.elems();
    let pe = p.elems();
    let in_l = |c: usize| report.l_set().binary_search(&c).is_ok();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let t_next = if i + 1 < m { te[i + 1] } else { ambient + 1 };
        let value = if pe[i] < t_next {
            pe[i]
        } else if !report.is_cut(t_next - 1) {
            if spec.lie_type() == LieType::D && (t_next == n + 1 || t_next == n + 2) {
                ambient + 1 - t_next
            } else {
                t_next
            }
        } else {
            (te[i]..t_next)
                .rev()
                .find(|&c| !in_l(c))
                .ok_or(Error::PreconditionViolated(
                    "no admissible shrink column; the construction needs m <= n in type D",
                ))?
        };
        out.push(value);
    }
    spec.symbol(&out).map_err(|_| {
        Error::PreconditionViolated(
            "shrinking left the symbol lattice; the construction needs m <= n in type D",
        )
    })
}
