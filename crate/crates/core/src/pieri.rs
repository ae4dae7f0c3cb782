//! K-theoretic Pieri coefficients, by two independent routes.
//!
//! A Pieri coefficient is the coefficient of one Schubert class in the
//! product of another with a special class. It equals the Möbius-weighted
//! sum of triple intersection numbers over a Bruhat interval, and also
//! the corresponding entry of the global matrix product `T_(r) · D`,
//! where `D` is the exact inverse of the 0/1 incidence matrix of `⪯`.
//! [`pieri_coefficient`] implements the first route on interval-local
//! data only; [`build_matrices`] implements the second and certifies
//! `M · D = I` by exact multiplication. Tests require the routes to agree
//! entry by entry.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bruhat::{preceq, BruhatPoset};
use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, SchubertSymbol};
use crate::ktheory::{triple_intersection, SpecialSchubert};

/// Dense integer matrix with checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch);
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    let slot = out.get(i, j).checked_add(term).ok_or(Error::Overflow)?;
                    out.set(i, j, slot);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntMatrix::identity(self.rows)
    }
}

/// All symbols `S` with `lo_i <= s_i <= hi_i` componentwise, in lex order.
fn symbols_in_box(
    spec: &Grassmannian,
    lo: &SchubertSymbol,
    hi: &SchubertSymbol,
) -> Vec<SchubertSymbol> {
    let m = spec.m();
    let ambient = spec.ambient();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(m);
    let mut blocked = vec![false; ambient + 2];
    fn step(
        spec: &Grassmannian,
        lo: &[usize],
        hi: &[usize],
        cur: &mut Vec<usize>,
        blocked: &mut [bool],
        out: &mut Vec<SchubertSymbol>,
    ) {
        let i = cur.len();
        if i == lo.len() {
            out.push(spec.symbol(cur).expect("box elements are valid symbols"));
            return;
        }
        let ambient = spec.ambient();
        let floor = lo[i].max(cur.last().map_or(0, |&c| c + 1));
        for c in floor..=hi[i] {
            if blocked[c] || 2 * c == ambient + 1 {
                continue;
            }
            cur.push(c);
            blocked[ambient + 1 - c] = true;
            step(spec, lo, hi, cur, blocked, out);
            blocked[ambient + 1 - c] = false;
            cur.pop();
        }
    }
    step(
        spec,
        lo.elems(),
        hi.elems(),
        &mut cur,
        &mut blocked,
        &mut out,
    );
    out
}

/// Möbius values `μ(interval[0], ·)` over a lex-sorted interval of the
/// Bruhat order. The interval must be downward-closed enough to contain
/// every `S` with `q ⪯ S ⪯ t` for each of its elements `t`.
fn interval_mobius(spec: &Grassmannian, interval: &[SchubertSymbol]) -> Vec<i64> {
    let mut mu = vec![0i64; interval.len()];
    mu[0] = 1;
    for t in 1..interval.len() {
        if !preceq(spec, &interval[0], &interval[t]) {
            continue;
        }
        let mut acc = 0i64;
        for s in 0..t {
            if preceq(spec, &interval[0], &interval[s]) && preceq(spec, &interval[s], &interval[t])
            {
                acc += mu[s];
            }
        }
        mu[t] = -acc;
    }
    mu
}

/// The Pieri coefficient of `Q` in the product of `P` with the special
/// class: `Σ_{Q ⪯ T ⪯ P} μ(Q,T) · χ(triple intersection)`. Zero when
/// `Q ⋠ P`. Works interval-locally, without building the global poset.
pub fn pieri_coefficient(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    q: &SchubertSymbol,
    special: &SpecialSchubert,
) -> Result<i64> {
    special.validate(spec)?;
    if !preceq(spec, q, p) {
        return Ok(0);
    }
    let interval: Vec<SchubertSymbol> = symbols_in_box(spec, q, p)
        .into_iter()
        .filter(|s| preceq(spec, q, s) && preceq(spec, s, p))
        .collect();
    debug_assert_eq!(interval.first(), Some(q));
    let mu = interval_mobius(spec, &interval);
    let mut acc = 0i64;
    for (t, &weight) in interval.iter().zip(&mu) {
        if weight == 0 {
            continue;
        }
        let triple = triple_intersection(spec, p, t, special)?;
        let term = weight.checked_mul(triple).ok_or(Error::Overflow)?;
        acc = acc.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// One Pieri row: all nonzero coefficients of the product of `P` with a
/// special class, keyed by symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriRow {
    p: SchubertSymbol,
    special: SpecialSchubert,
    coefficients: BTreeMap<SchubertSymbol, i64>,
}

impl PieriRow {
    pub fn p(&self) -> &SchubertSymbol {
        &self.p
    }

    pub fn special(&self) -> &SpecialSchubert {
        &self.special
    }

    pub fn coefficients(&self) -> &BTreeMap<SchubertSymbol, i64> {
        &self.coefficients
    }

    pub fn coefficient(&self, q: &SchubertSymbol) -> i64 {
        self.coefficients.get(q).copied().unwrap_or(0)
    }
}

/// Assembles the row of all nonzero Pieri coefficients under `P`.
pub fn pieri_row(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    special: &SpecialSchubert,
) -> Result<PieriRow> {
    special.validate(spec)?;
    let min: Vec<usize> = (1..=spec.m()).collect();
    let min = spec.symbol(&min).expect("the minimum symbol is valid");
    let mut coefficients = BTreeMap::new();
    for q in symbols_in_box(spec, &min, p) {
        if !preceq(spec, &q, p) {
            continue;
        }
        let c = pieri_coefficient(spec, p, &q, special)?;
        if c != 0 {
            coefficients.insert(q, c);
        }
    }
    Ok(PieriRow {
        p: p.clone(),
        special: *special,
        coefficients,
    })
}

/// The global matrices of the matrix method, all indexed by the canonical
/// symbol order.
pub struct PosetMatrices {
    poset: BruhatPoset,
    special: SpecialSchubert,
    incidence: IntMatrix,
    duals: IntMatrix,
    triples: IntMatrix,
    coefficients: IntMatrix,
}

impl PosetMatrices {
    pub fn poset(&self) -> &BruhatPoset {
        &self.poset
    }

    pub fn special(&self) -> &SpecialSchubert {
        &self.special
    }

    /// The 0/1 matrix `M` with `m_ij = 1` iff `P_j ⪯ P_i`.
    pub fn incidence(&self) -> &IntMatrix {
        &self.incidence
    }

    /// The matrix of duals `D = M^{-1}`; column `j` carries the dual-class
    /// coefficients of `P_j`, i.e. `d_kj = μ(P_j, P_k)`.
    pub fn duals(&self) -> &IntMatrix {
        &self.duals
    }

    /// Triple intersection matrix `T_(r)`; zero where `P_j ⋠ P_i`.
    pub fn triples(&self) -> &IntMatrix {
        &self.triples
    }

    /// Pieri coefficient matrix `C_(r) = T_(r) · D`.
    pub fn coefficients(&self) -> &IntMatrix {
        &self.coefficients
    }

    /// The row of `C_(r)` for `P` as a symbol-keyed map.
    pub fn row(&self, p: &SchubertSymbol) -> Result<BTreeMap<SchubertSymbol, i64>> {
        let i = self.poset.index_of(p)?;
        let mut out = BTreeMap::new();
        for j in 0..self.poset.len() {
            let v = self.coefficients.get(i, j);
            if v != 0 {
                out.insert(self.poset.symbol(j).clone(), v);
            }
        }
        Ok(out)
    }
}

/// Builds `M`, `D`, `T_(r)`, and `C_(r)` over the whole symbol poset.
///
/// `D` comes from the Möbius recursion, then is certified against `M` by
/// exact multiplication on both sides; no rational arithmetic is used.
pub fn build_matrices(
    spec: &Grassmannian,
    special: &SpecialSchubert,
    cap: u128,
) -> Result<PosetMatrices> {
    special.validate(spec)?;
    let poset = BruhatPoset::build(spec, cap)?;
    build_matrices_with(poset, special)
}

/// As [`build_matrices`], over an already constructed poset.
pub fn build_matrices_with(poset: BruhatPoset, special: &SpecialSchubert) -> Result<PosetMatrices> {
    let spec = *poset.spec();
    let spec = &spec;
    special.validate(spec)?;
    let len = poset.len();
    let mut incidence = IntMatrix::zero(len, len);
    for i in 0..len {
        for j in 0..len {
            if poset.le_idx(j, i) {
                incidence.set(i, j, 1);
            }
        }
    }
    let mut duals = IntMatrix::zero(len, len);
    for j in 0..len {
        let mu = poset.mobius_row(j);
        for (k, &v) in mu.iter().enumerate() {
            duals.set(k, j, v);
        }
    }
    if !incidence.mul(&duals)?.is_identity() || !duals.mul(&incidence)?.is_identity() {
        return Err(Error::PreconditionViolated(
            "Möbius matrix failed the inverse certification",
        ));
    }
    let mut triples = IntMatrix::zero(len, len);
    for i in 0..len {
        for j in 0..len {
            if poset.le_idx(j, i) {
                let v = triple_intersection(spec, poset.symbol(i), poset.symbol(j), special)?;
                triples.set(i, j, v);
            }
        }
    }
    let coefficients = triples.mul(&duals)?;
    Ok(PosetMatrices {
        poset,
        special: *special,
        incidence,
        duals,
        triples,
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::DEFAULT_SYMBOL_CAP;
    use crate::grassmannian::LieType;

    fn spec(t: LieType, m: usize, n: usize) -> Grassmannian {
        Grassmannian::new(t, m, n).unwrap()
    }

    fn sym(g: &Grassmannian, e: &[usize]) -> SchubertSymbol {
        g.symbol(e).unwrap()
    }

    #[test]
    fn matrix_mul() {
        let mut a = IntMatrix::zero(2, 2);
        a.set(0, 0, 1);
        a.set(0, 1, 2);
        a.set(1, 1, 3);
        let id = IntMatrix::identity(2);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert!(id.is_identity());
        assert!(!a.is_identity());
    }

    #[test]
    fn projective_space_pieri() {
        // SG(1,4) = P^3: structure sheaves of generic linear subspaces
        let g = spec(LieType::C, 1, 2);
        let s = SpecialSchubert::new(&g, 1, false).unwrap();
        let p = sym(&g, &[2]);
        assert_eq!(pieri_coefficient(&g, &p, &sym(&g, &[1]), &s).unwrap(), 1);
        let row = pieri_row(&g, &p, &s).unwrap();
        assert_eq!(row.coefficients().len(), 1);
        assert_eq!(row.coefficient(&sym(&g, &[1])), 1);
    }

    #[test]
    fn incomparable_gives_zero() {
        let g = spec(LieType::D, 2, 2);
        let s = SpecialSchubert::new(&g, 1, false).unwrap();
        assert_eq!(
            pieri_coefficient(&g, &sym(&g, &[1, 4]), &sym(&g, &[1, 3]), &s).unwrap(),
            0
        );
    }

    #[test]
    fn maximum_row_is_special_class() {
        // O_X · O_(r) = O_{X_(r)}: a single coefficient 1
        let g = spec(LieType::D, 2, 2);
        let top = sym(&g, &[5, 6]);
        for r in 1..=g.n() + g.k() {
            let s = SpecialSchubert::new(&g, r, false).unwrap();
            let row = pieri_row(&g, &top, &s).unwrap();
            assert_eq!(row.coefficients().len(), 1, "r = {r}");
            assert_eq!(row.coefficients().values().copied().sum::<i64>(), 1);
        }
    }

    #[test]
    fn matrices_inverse_and_agree() {
        let g = spec(LieType::C, 2, 2);
        let s = SpecialSchubert::new(&g, 1, false).unwrap();
        let mats = build_matrices(&g, &s, DEFAULT_SYMBOL_CAP).unwrap();
        assert!(mats.incidence().mul(mats.duals()).unwrap().is_identity());
        for (i, p) in mats.poset().symbols().iter().enumerate() {
            let row = pieri_row(&g, p, &s).unwrap();
            for (j, q) in mats.poset().symbols().iter().enumerate() {
                assert_eq!(
                    mats.coefficients().get(i, j),
                    row.coefficient(q),
                    "mismatch at P={p} Q={q}"
                );
            }
        }
    }

    #[test]
    fn mobius_row_matches_interval_mobius() {
        let g = spec(LieType::D, 2, 2);
        let poset = BruhatPoset::build(&g, DEFAULT_SYMBOL_CAP).unwrap();
        for qi in 0..poset.len() {
            let global = poset.mobius_row(qi);
            for (pi, &value) in global.iter().enumerate() {
                if !poset.le_idx(qi, pi) {
                    continue;
                }
                let q = poset.symbol(qi);
                let p = poset.symbol(pi);
                let interval: Vec<SchubertSymbol> = symbols_in_box(&g, q, p)
                    .into_iter()
                    .filter(|s| preceq(&g, q, s) && preceq(&g, s, p))
                    .collect();
                let mu = interval_mobius(&g, &interval);
                let pos = interval.iter().position(|s| s == p).unwrap();
                assert_eq!(value, mu[pos]);
            }
        }
    }
}
