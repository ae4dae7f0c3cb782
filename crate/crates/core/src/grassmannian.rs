//! Ambient-space parameters and Schubert symbols.
//!
//! A Schubert symbol is a strictly increasing `m`-subset of `[1,N]` in
//! which no two elements (a repeat counts) sum to `N+1`. Symbols index the
//! Schubert varieties of the isotropic Grassmannian and are the ground set
//! of everything downstream. Elements are 1-based; the boundary values
//! `p_0 = 0` and `p_{m+1} = N+1` are conventions of the diagram code and
//! are never stored.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Lie type of the ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    /// Odd orthogonal, `N = 2n+1`.
    B,
    /// Symplectic, `N = 2n`.
    C,
    /// Even orthogonal, `N = 2n+2`.
    D,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::B => write!(f, "B"),
            LieType::C => write!(f, "C"),
            LieType::D => write!(f, "D"),
        }
    }
}

impl core::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            _ => Err(Error::InvalidParameters("Lie type must be B, C, or D")),
        }
    }
}

/// The ambient isotropic Grassmannian of `m`-planes, with rank parameter
/// `n`. All index conventions (`N`, `k`, mirror pairs) derive from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grassmannian {
    lie_type: LieType,
    m: usize,
    n: usize,
}

impl Grassmannian {
    /// Validates `m` against the type's bound and derives `N` and `k`.
    ///
    /// Bounds: `1 <= m <= n` in types B and C, `1 <= m <= n+1` in type D.
    pub fn new(lie_type: LieType, m: usize, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameters("n must be positive"));
        }
        if m < 1 {
            return Err(Error::InvalidParameters("m must be positive"));
        }
        let bound = match lie_type {
            LieType::B | LieType::C => n,
            LieType::D => n + 1,
        };
        if m > bound {
            return Err(Error::InvalidParameters(
                "m exceeds the bound for this Lie type",
            ));
        }
        Ok(Grassmannian { lie_type, m, n })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Plane dimension `m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Rank parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient dimension `N`: `2n` (C), `2n+1` (B), `2n+2` (D).
    pub fn ambient(&self) -> usize {
        match self.lie_type {
            LieType::C => 2 * self.n,
            LieType::B => 2 * self.n + 1,
            LieType::D => 2 * self.n + 2,
        }
    }

    /// Special-class threshold `k`: `n-m` in types B/C, `n-m+1` in type D.
    ///
    /// The special class of codimension `k` is the first one whose
    /// quadric-side codimension reaches the middle degree `n`.
    pub fn k(&self) -> usize {
        match self.lie_type {
            LieType::B | LieType::C => self.n - self.m,
            LieType::D => self.n - self.m + 1,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.lie_type != LieType::C
    }

    /// Validates and sorts a symbol for this space.
    pub fn symbol(&self, elems: &[usize]) -> Result<SchubertSymbol> {
        if elems.len() != self.m {
            return Err(Error::InvalidSymbol("wrong cardinality"));
        }
        let mut v = elems.to_vec();
        v.sort_unstable();
        let ambient = self.ambient();
        for (i, &c) in v.iter().enumerate() {
            if c < 1 || c > ambient {
                return Err(Error::InvalidSymbol("element out of range"));
            }
            if i > 0 && v[i - 1] == c {
                return Err(Error::InvalidSymbol("repeated element"));
            }
        }
        for &c in &v {
            if v.binary_search(&(ambient + 1 - c)).is_ok() {
                return Err(Error::InvalidSymbol("two elements sum to N+1"));
            }
        }
        Ok(SchubertSymbol { elems: v })
    }

    /// Number of valid symbols, without enumerating them.
    ///
    /// Symbols pick `m` of the mirror pairs `{c, N+1-c}` and one element
    /// from each, so the count is `binom(pairs, m) * 2^m`.
    pub fn symbol_count(&self) -> Option<u128> {
        let pairs = match self.lie_type {
            LieType::B | LieType::C => self.n,
            LieType::D => self.n + 1,
        } as u128;
        let m = self.m as u128;
        let mut acc: u128 = 1;
        for j in 0..m {
            acc = acc.checked_mul(pairs - j)?;
            acc /= j + 1;
        }
        acc.checked_mul(1u128.checked_shl(self.m as u32)?)
    }

    /// Every valid symbol exactly once, in lexicographic order.
    ///
    /// This order is the canonical index used by all matrix operations.
    pub fn symbols(&self) -> Vec<SchubertSymbol> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.m);
        let ambient = self.ambient();
        let mut blocked = alloc::vec![false; ambient + 2];
        self.extend_symbols(1, &mut cur, &mut blocked, &mut out);
        out
    }

    fn extend_symbols(
        &self,
        start: usize,
        cur: &mut Vec<usize>,
        blocked: &mut [bool],
        out: &mut Vec<SchubertSymbol>,
    ) {
        if cur.len() == self.m {
            out.push(SchubertSymbol { elems: cur.clone() });
            return;
        }
        let ambient = self.ambient();
        let needed = self.m - cur.len();
        for c in start..=ambient.saturating_sub(needed - 1) {
            if blocked[c] || 2 * c == ambient + 1 {
                continue;
            }
            cur.push(c);
            blocked[ambient + 1 - c] = true;
            self.extend_symbols(c + 1, cur, blocked, out);
            blocked[ambient + 1 - c] = false;
            cur.pop();
        }
    }

    /// The reflection `bar P = {N+1-p : p in P}`.
    pub fn reflect(&self, p: &SchubertSymbol) -> SchubertSymbol {
        let ambient = self.ambient();
        let mut elems: Vec<usize> = p.elems.iter().rev().map(|&c| ambient + 1 - c).collect();
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        elems.shrink_to_fit();
        SchubertSymbol { elems }
    }

    /// Type D central involution: swaps `n+1` and `n+2` wherever present.
    pub fn iota(&self, p: &SchubertSymbol) -> Result<SchubertSymbol> {
        if self.lie_type != LieType::D {
            return Err(Error::WrongLieType {
                expected: "D",
                found: self.lie_type,
            });
        }
        let mut elems = p.elems.clone();
        for c in elems.iter_mut() {
            if *c == self.n + 1 {
                *c = self.n + 2;
            } else if *c == self.n + 2 {
                *c = self.n + 1;
            }
        }
        elems.sort_unstable();
        Ok(SchubertSymbol { elems })
    }

    /// The dual symbol: `bar P` in types B and C; in type D, `bar P` when
    /// `n` is odd and `iota(bar P)` when `n` is even.
    ///
    /// The opposite Schubert variety indexed by the dual meets the one
    /// indexed by `P` in a single point.
    pub fn dual(&self, p: &SchubertSymbol) -> SchubertSymbol {
        let reflected = self.reflect(p);
        match self.lie_type {
            LieType::B | LieType::C => reflected,
            LieType::D => {
                if self.n % 2 == 1 {
                    reflected
                } else {
                    self.iota(&reflected).expect("lie type checked")
                }
            }
        }
    }

    /// The type invariant `t(P)` of a type D symbol.
    ///
    /// Returns 2 when `P` misses both central columns, and otherwise the
    /// parity of `#([1,n+1] \ P)`.
    pub fn type_of(&self, p: &SchubertSymbol) -> Result<u8> {
        if self.lie_type != LieType::D {
            return Err(Error::WrongLieType {
                expected: "D",
                found: self.lie_type,
            });
        }
        Ok(self.type_d(p))
    }

    pub(crate) fn type_d(&self, p: &SchubertSymbol) -> u8 {
        debug_assert_eq!(self.lie_type, LieType::D);
        if !p.contains(self.n + 1) && !p.contains(self.n + 2) {
            return 2;
        }
        let absent = (1..=self.n + 1).filter(|&c| !p.contains(c)).count();
        (absent % 2) as u8
    }

    /// Membership in `[P] = P ∪ bar P`.
    pub fn contains_mirrored(&self, p: &SchubertSymbol, c: usize) -> bool {
        p.contains(c) || p.contains(self.ambient() + 1 - c)
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lie_type {
            LieType::C => write!(f, "SG({},{})", self.m, self.ambient()),
            LieType::B | LieType::D => write!(f, "OG({},{})", self.m, self.ambient()),
        }
    }
}

/// A strictly increasing `m`-subset of `[1,N]` satisfying the isotropy
/// condition. Immutable; equality and ordering are structural, and the
/// derived `Ord` is the canonical lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertSymbol {
    elems: Vec<usize>,
}

impl SchubertSymbol {
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.elems.binary_search(&c).is_ok()
    }

    /// Number of elements `<= c`.
    pub fn count_leq(&self, c: usize) -> usize {
        self.elems.partition_point(|&x| x <= c)
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(t: LieType, m: usize, n: usize) -> Grassmannian {
        Grassmannian::new(t, m, n).unwrap()
    }

    #[test]
    fn derived_parameters() {
        let sg = spec(LieType::C, 4, 5);
        assert_eq!(sg.ambient(), 10);
        assert_eq!(sg.k(), 1);
        let og = spec(LieType::D, 2, 2);
        assert_eq!(og.ambient(), 6);
        assert_eq!(og.k(), 1);
        assert!(matches!(
            Grassmannian::new(LieType::B, 3, 2),
            Err(Error::InvalidParameters(_))
        ));
        assert!(Grassmannian::new(LieType::D, 3, 2).is_ok());
        assert!(Grassmannian::new(LieType::D, 4, 2).is_err());
        assert!(Grassmannian::new(LieType::C, 0, 2).is_err());
    }

    #[test]
    fn symbol_validation() {
        let sg = spec(LieType::C, 2, 2);
        assert!(sg.symbol(&[1, 2]).is_ok());
        // sorted on construction
        assert_eq!(sg.symbol(&[4, 2]).unwrap().elems(), &[2, 4]);
        assert!(matches!(sg.symbol(&[1, 4]), Err(Error::InvalidSymbol(_))));
        assert!(matches!(sg.symbol(&[2, 2]), Err(Error::InvalidSymbol(_))));
        assert!(matches!(sg.symbol(&[0, 3]), Err(Error::InvalidSymbol(_))));
        assert!(matches!(sg.symbol(&[1]), Err(Error::InvalidSymbol(_))));
        // type B: the self-mirrored center column is excluded
        let ob = spec(LieType::B, 1, 3);
        assert!(matches!(ob.symbol(&[4]), Err(Error::InvalidSymbol(_))));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (t, m, n) in [
            (LieType::B, 1, 3),
            (LieType::B, 2, 3),
            (LieType::C, 2, 2),
            (LieType::C, 3, 4),
            (LieType::D, 2, 2),
            (LieType::D, 3, 4),
            (LieType::D, 3, 2),
        ] {
            let g = spec(t, m, n);
            let listed = g.symbols();
            // brute force over all m-subsets of [1,N]
            let mut brute = Vec::new();
            let ambient = g.ambient();
            let mut idx: Vec<usize> = (1..=m).collect();
            loop {
                if g.symbol(&idx).is_ok() {
                    brute.push(g.symbol(&idx).unwrap());
                }
                // next combination
                let mut i = m;
                loop {
                    if i == 0 {
                        break;
                    }
                    if idx[i - 1] < ambient - (m - i) {
                        idx[i - 1] += 1;
                        for j in i..m {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
            }
            assert_eq!(listed, brute, "enumeration mismatch for {g}");
            assert!(listed.windows(2).all(|w| w[0] < w[1]), "not lex sorted");
            assert_eq!(listed.len() as u128, g.symbol_count().unwrap());
        }
    }

    #[test]
    fn known_symbol_sets() {
        let og = spec(LieType::D, 2, 2);
        let nodes: Vec<SchubertSymbol> = [
            [1, 2],
            [1, 3],
            [1, 4],
            [2, 3],
            [2, 4],
            [1, 5],
            [2, 6],
            [3, 5],
            [4, 5],
            [3, 6],
            [4, 6],
            [5, 6],
        ]
        .iter()
        .map(|e| og.symbol(e).unwrap())
        .collect();
        let mut listed = og.symbols();
        assert_eq!(listed.len(), 12);
        let mut nodes = nodes;
        nodes.sort();
        listed.sort();
        assert_eq!(listed, nodes);

        let sg = spec(LieType::C, 2, 2);
        let expect: Vec<SchubertSymbol> = [[1, 2], [1, 3], [2, 4], [3, 4]]
            .iter()
            .map(|e| sg.symbol(e).unwrap())
            .collect();
        assert_eq!(sg.symbols(), expect);

        let ob = spec(LieType::B, 1, 3);
        let expect: Vec<SchubertSymbol> = [1, 2, 3, 5, 6, 7]
            .iter()
            .map(|&c| ob.symbol(&[c]).unwrap())
            .collect();
        assert_eq!(ob.symbols(), expect);
    }

    #[test]
    fn reflect_and_iota() {
        let sg = spec(LieType::C, 4, 5);
        let p = sg.symbol(&[2, 3, 4, 10]).unwrap();
        assert_eq!(sg.reflect(&p).elems(), &[1, 7, 8, 9]);
        assert_eq!(sg.reflect(&sg.reflect(&p)), p);

        let og = spec(LieType::D, 3, 4);
        let p = og.symbol(&[1, 4, 5]).unwrap();
        assert_eq!(og.reflect(&p).elems(), &[6, 7, 10]);
        let q = og.symbol(&[6, 7, 10]).unwrap();
        assert_eq!(og.iota(&q).unwrap().elems(), &[5, 7, 10]);
        assert_eq!(og.iota(&og.iota(&q).unwrap()).unwrap(), q);
        let small = spec(LieType::D, 2, 2);
        let r = small.symbol(&[1, 2]).unwrap();
        assert_eq!(small.iota(&r).unwrap(), r);
        assert!(matches!(sg.iota(&p), Err(Error::WrongLieType { .. })));
    }

    #[test]
    fn duals() {
        let og16 = spec(LieType::D, 1, 2);
        let p = og16.symbol(&[4]).unwrap();
        assert_eq!(og16.dual(&p), p);

        let og310 = spec(LieType::D, 3, 4);
        let p = og310.symbol(&[1, 4, 5]).unwrap();
        assert_eq!(og310.dual(&p).elems(), &[5, 7, 10]);

        let sg = spec(LieType::C, 2, 2);
        let p = sg.symbol(&[1, 3]).unwrap();
        assert_eq!(sg.dual(&p).elems(), &[2, 4]);
    }

    #[test]
    fn dual_is_involution_everywhere() {
        for (t, m, n) in [
            (LieType::B, 2, 3),
            (LieType::C, 2, 3),
            (LieType::D, 2, 2),
            (LieType::D, 2, 3),
            (LieType::D, 3, 3),
        ] {
            let g = spec(t, m, n);
            for p in g.symbols() {
                assert_eq!(g.dual(&g.dual(&p)), p, "dual not involutive on {p} in {g}");
            }
        }
    }

    #[test]
    fn type_function() {
        let og = spec(LieType::D, 2, 2);
        assert_eq!(og.type_of(&og.symbol(&[1, 2]).unwrap()).unwrap(), 2);
        assert_eq!(og.type_of(&og.symbol(&[1, 3]).unwrap()).unwrap(), 1);
        let og23 = spec(LieType::D, 2, 3);
        assert_eq!(og23.type_of(&og23.symbol(&[1, 4]).unwrap()).unwrap(), 0);
        let sg = spec(LieType::C, 2, 2);
        assert!(matches!(
            sg.type_of(&sg.symbol(&[1, 2]).unwrap()),
            Err(Error::WrongLieType { .. })
        ));
    }

    #[test]
    fn type_two_characterization() {
        // t(P) = 2 exactly when n+1 is missing from P ∪ bar P
        for n in 1..=4 {
            for m in 1..=n {
                let g = spec(LieType::D, m, n);
                for p in g.symbols() {
                    let t2 = g.type_of(&p).unwrap() == 2;
                    let missing = !g.contains_mirrored(&p, n + 1);
                    assert_eq!(t2, missing);
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        let og = spec(LieType::D, 2, 2);
        let p = og.symbol(&[4, 1]).unwrap();
        assert_eq!(alloc::format!("{p}"), "[1,4]");
        assert_eq!(alloc::format!("{og}"), "OG(2,6)");
        assert_eq!(alloc::format!("{}", spec(LieType::C, 4, 5)), "SG(4,10)");
        let _ = vec![p];
    }
}
