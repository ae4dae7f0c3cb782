//! The Bruhat order on Schubert symbols, its Hasse diagram, graded
//! codimension ranks, and the Möbius function.
//!
//! In types B and C the order `T ⪯ P` coincides with the componentwise
//! order `t_i <= p_i`. In type D it is the componentwise order refined by
//! a type condition, so some componentwise-comparable pairs are
//! incomparable. [`preceq`] answers queries by the direct combinatorial
//! criterion; [`BruhatPoset`] materializes the order, its transitive
//! reduction, and ranks for matrix work.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, LieType, SchubertSymbol};

/// Default cap on the number of symbols a poset build will accept.
pub const DEFAULT_SYMBOL_CAP: u128 = 100_000;

/// Componentwise order: `t_i <= p_i` for all `i`.
pub fn leq(t: &SchubertSymbol, p: &SchubertSymbol) -> Result<bool> {
    if t.len() != p.len() {
        return Err(Error::LengthMismatch);
    }
    Ok(t.elems().iter().zip(p.elems()).all(|(a, b)| a <= b))
}

/// The Bruhat order `T ⪯ P` (containment of Schubert varieties).
///
/// Types B and C: equal to [`leq`]. Type D: `leq` plus the requirement
/// that whenever some `c` in `[1,n]` has `[c+1,n+1] ⊆ [P] ∩ [T]` and
/// `#(P ∩ [1,c]) = #(T ∩ [1,c])`, the types `t(P)` and `t(T)` agree.
pub fn preceq(spec: &Grassmannian, t: &SchubertSymbol, p: &SchubertSymbol) -> bool {
    debug_assert_eq!(t.len(), p.len());
    if !t.elems().iter().zip(p.elems()).all(|(a, b)| a <= b) {
        return false;
    }
    if spec.lie_type() != LieType::D {
        return true;
    }
    if spec.type_d(p) == spec.type_d(t) {
        return true;
    }
    let n = spec.n();
    !(1..=n).any(|c| type_condition_triggers(spec, p, t, c))
}

/// Whether column `c` forces the type comparison in the type D order.
fn type_condition_triggers(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
    c: usize,
) -> bool {
    (c + 1..=spec.n() + 1).all(|x| spec.contains_mirrored(p, x) && spec.contains_mirrored(t, x))
        && p.count_leq(c) == t.count_leq(c)
}

/// Square bit matrix used for order closures.
#[derive(Clone)]
struct BitMatrix {
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitMatrix {
            stride,
            bits: vec![0; n * stride],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] & (1 << (j % 64)) != 0
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }
}

/// Transitive reduction of a reflexive partial order given by `le` on
/// `0..len`. Returns the cover pairs `(lower, upper)` sorted ascending.
pub fn transitive_reduction(len: usize, le: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut up = BitMatrix::new(len);
    let mut down = BitMatrix::new(len);
    for i in 0..len {
        for j in 0..len {
            if le(i, j) {
                up.set(i, j);
                down.set(j, i);
            }
        }
    }
    reduce(len, &up, &down)
}

/// Covers from up/down closures: `(i,j)` is a cover when the interval
/// `[i,j]` contains exactly the two endpoints.
fn reduce(len: usize, up: &BitMatrix, down: &BitMatrix) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if i == j || !up.get(i, j) {
                continue;
            }
            let between: u32 = up
                .row(i)
                .iter()
                .zip(down.row(j))
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if between == 2 {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// The materialized Bruhat poset over the canonical (lexicographic)
/// symbol list, with cover edges and graded codimension ranks.
///
/// Immutable after construction; all queries are reads.
pub struct BruhatPoset {
    spec: Grassmannian,
    symbols: Vec<SchubertSymbol>,
    up: BitMatrix,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
}

impl BruhatPoset {
    /// Builds the poset, rejecting enumerations larger than `cap` symbols.
    ///
    /// Ranks are measured downward from the maximum element (codimension);
    /// the build asserts gradedness, which makes them well defined.
    pub fn build(spec: &Grassmannian, cap: u128) -> Result<Self> {
        let count = spec.symbol_count().ok_or(Error::Overflow)?;
        if count > cap {
            return Err(Error::SizeLimitExceeded {
                symbols: count,
                cap,
            });
        }
        let symbols = spec.symbols();
        let len = symbols.len();
        let mut up = BitMatrix::new(len);
        let mut down = BitMatrix::new(len);
        for i in 0..len {
            for j in 0..len {
                if preceq(spec, &symbols[i], &symbols[j]) {
                    up.set(i, j);
                    down.set(j, i);
                }
            }
        }
        let covers = reduce(len, &up, &down);
        // Lex order is a linear extension of ⪯, so a reverse sweep sees
        // every upper cover before its lower end.
        let mut rank = vec![0usize; len];
        for i in (0..len).rev() {
            for &(lo, hi) in &covers {
                if lo == i {
                    rank[i] = rank[i].max(rank[hi] + 1);
                }
            }
        }
        for &(lo, hi) in &covers {
            assert_eq!(
                rank[lo],
                rank[hi] + 1,
                "Bruhat poset of {spec} is not graded"
            );
        }
        Ok(BruhatPoset {
            spec: *spec,
            symbols,
            up,
            covers,
            rank,
        })
    }

    /// Rebuilds a poset from previously computed parts, validating them.
    ///
    /// The symbol list must be the canonical enumeration, covers must
    /// reproduce the order (the closure is rebuilt from them and
    /// spot-checked against the direct criterion), and ranks must be the
    /// graded ranks. Intended for cache loads; any inconsistency is an
    /// error, never trusted.
    pub fn from_parts(
        spec: &Grassmannian,
        symbols: Vec<SchubertSymbol>,
        covers: Vec<(usize, usize)>,
        rank: Vec<usize>,
    ) -> Result<Self> {
        if symbols != spec.symbols() {
            return Err(Error::PreconditionViolated("cached symbol list mismatch"));
        }
        let len = symbols.len();
        if rank.len() != len {
            return Err(Error::PreconditionViolated("cached rank table mismatch"));
        }
        let mut sorted = covers.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != covers.len() {
            return Err(Error::PreconditionViolated(
                "cached covers contain duplicates",
            ));
        }
        for &(lo, hi) in &sorted {
            if lo >= len || hi >= len || lo == hi {
                return Err(Error::PreconditionViolated("cached cover out of range"));
            }
            if rank[lo] != rank[hi] + 1 {
                return Err(Error::PreconditionViolated(
                    "cached covers violate gradedness",
                ));
            }
        }
        // closure from covers: lex order extends the order, so a reverse
        // sweep can accumulate the up-sets
        let mut up = BitMatrix::new(len);
        for i in (0..len).rev() {
            up.set(i, i);
            let uppers: Vec<usize> = sorted
                .iter()
                .filter(|&&(lo, _)| lo == i)
                .map(|&(_, hi)| hi)
                .collect();
            for j in uppers {
                for w in 0..up.stride {
                    let v = up.bits[j * up.stride + w];
                    up.bits[i * up.stride + w] |= v;
                }
            }
        }
        // spot-check the closure against the direct criterion on a
        // sample of rows; a full recomputation would defeat the cache
        let stride = (len / 16).max(1);
        for i in (0..len).step_by(stride) {
            for j in 0..len {
                if up.get(i, j) != preceq(spec, &symbols[i], &symbols[j]) {
                    return Err(Error::PreconditionViolated(
                        "cached covers disagree with the order",
                    ));
                }
            }
        }
        Ok(BruhatPoset {
            spec: *spec,
            symbols,
            up,
            covers: sorted,
            rank,
        })
    }

    pub fn spec(&self) -> &Grassmannian {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbols in canonical order.
    pub fn symbols(&self) -> &[SchubertSymbol] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> &SchubertSymbol {
        &self.symbols[i]
    }

    /// Canonical index of a symbol.
    pub fn index_of(&self, s: &SchubertSymbol) -> Result<usize> {
        self.symbols
            .binary_search(s)
            .map_err(|_| Error::UnknownSymbol)
    }

    /// `symbols[i] ⪯ symbols[j]`.
    pub fn le_idx(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    /// Cover pairs `(lower, upper)` of the transitive reduction, ascending.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Codimension of the Schubert variety: graded rank measured downward
    /// from the maximum element.
    pub fn codim(&self, s: &SchubertSymbol) -> Result<usize> {
        Ok(self.rank[self.index_of(s)?])
    }

    pub fn rank_of_idx(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Möbius function `μ(Q, P)` of the order.
    pub fn mobius(&self, q: &SchubertSymbol, p: &SchubertSymbol) -> Result<i64> {
        let qi = self.index_of(q)?;
        let pi = self.index_of(p)?;
        if !self.up.get(qi, pi) {
            return Ok(0);
        }
        Ok(self.mobius_row(qi)[pi])
    }

    /// All values `μ(symbols[qi], ·)` in one upward sweep.
    ///
    /// Entries at symbols not above `qi` are zero. The sweep runs in lex
    /// order, which extends the order, so each value is final when set.
    pub fn mobius_row(&self, qi: usize) -> Vec<i64> {
        let len = self.symbols.len();
        let mut mu = vec![0i64; len];
        mu[qi] = 1;
        for t in qi + 1..len {
            if !self.up.get(qi, t) {
                continue;
            }
            let mut acc = 0i64;
            for (s, &mu_s) in mu.iter().enumerate().take(t).skip(qi) {
                if self.up.get(qi, s) && self.up.get(s, t) {
                    acc += mu_s;
                }
            }
            mu[t] = -acc;
        }
        mu
    }
}
