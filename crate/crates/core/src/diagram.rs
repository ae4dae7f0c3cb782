//! Richardson diagrams `D(P,T)` and their combinatorial features.
//!
//! The diagram of a componentwise-comparable pair `T <= P` is the star
//! pattern with stars at `(j,c)` for `t_j <= c <= p_j`. From it we read
//! off cut positions, zero columns, and lone stars, and derive the index
//! sets `L` (linear generators) and `Q` (quadratic partial sums) that
//! present the projected Richardson variety as a complete intersection.
//!
//! Cut positions are integers `c` in `[0,N]` meaning "between column `c`
//! and column `c+1`"; `0` and `N` always count as visible cuts. A cut is
//! *visible* when no row crosses it, *apparent* when `c` or `N-c` is
//! visible, and in type D additional *exceptional* cuts arise from the
//! center condition and from cut candidates when `t(P) != t(T)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bruhat::{leq, preceq};
use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, LieType, SchubertSymbol};

/// Full combinatorial analysis of a Richardson diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    spec: Grassmannian,
    p: SchubertSymbol,
    t: SchubertSymbol,
    rows: Vec<(usize, usize)>,
    visible: Vec<usize>,
    exceptional: Vec<usize>,
    cuts: Vec<usize>,
    cut_flags: Vec<bool>,
    zero_columns: Vec<usize>,
    lone_stars: Vec<(usize, usize)>,
    l_set: Vec<usize>,
    q_set: Vec<usize>,
}

/// Builds the diagram report for `T <= P`.
///
/// The diagram is defined whenever the componentwise bound holds, even if
/// `T ⪯ P` fails; downstream complete-intersection data additionally
/// requires the Bruhat relation.
pub fn analyze(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
) -> Result<DiagramReport> {
    if !leq(t, p)? {
        return Err(Error::NotLeq);
    }
    let n = spec.n();
    let ambient = spec.ambient();
    let m = spec.m();
    let rows: Vec<(usize, usize)> = t
        .elems()
        .iter()
        .zip(p.elems())
        .map(|(&a, &b)| (a, b))
        .collect();

    // visible cuts: no row crosses from column c to column c+1
    let mut crossing = vec![false; ambient + 1];
    for &(lo, hi) in &rows {
        crossing[lo..hi].fill(true);
    }
    let visible_flags: Vec<bool> = (0..=ambient).map(|c| !crossing[c]).collect();

    // apparent cuts: c or N-c is visible
    let mut cut_flags: Vec<bool> = (0..=ambient)
        .map(|c| visible_flags[c] || visible_flags[ambient - c])
        .collect();

    let mut exceptional = Vec::new();
    if spec.lie_type() == LieType::D {
        // center cut: p_i = n+2 <= t_{i+1} or t_i = n+1 >= p_{i-1},
        // with sentinels t_{m+1} = N+1 and p_0 = 0
        let mut center = false;
        for i in 0..m {
            let t_next = if i + 1 < m {
                rows[i + 1].0
            } else {
                ambient + 1
            };
            let p_prev = if i > 0 { rows[i - 1].1 } else { 0 };
            if (rows[i].1 == n + 2 && n + 2 <= t_next) || (rows[i].0 == n + 1 && n + 1 >= p_prev) {
                center = true;
            }
        }
        if center && !cut_flags[n + 1] {
            exceptional.push(n + 1);
        }
        if center {
            cut_flags[n + 1] = true;
        }
        // cut candidates force cuts at c and N-c when the types differ
        if spec.type_d(p) != spec.type_d(t) {
            for c in 1..=n {
                if is_cut_candidate(spec, p, t, c) {
                    for pos in [c, ambient - c] {
                        if !cut_flags[pos] {
                            exceptional.push(pos);
                            cut_flags[pos] = true;
                        }
                    }
                }
            }
        }
        exceptional.sort_unstable();
    }

    let cuts: Vec<usize> = (0..=ambient).filter(|&c| cut_flags[c]).collect();
    let visible: Vec<usize> = (0..=ambient).filter(|&c| visible_flags[c]).collect();

    // zero columns: no star anywhere in the column
    let mut covered = vec![false; ambient + 1];
    for &(lo, hi) in &rows {
        covered[lo..=hi].fill(true);
    }
    let zero_columns: Vec<usize> = (1..=ambient).filter(|&c| !covered[c]).collect();

    // lone stars: (j,c) with c in T and c a cut, or c in P and c-1 a cut
    let mut lone_stars = Vec::new();
    for (j, &(lo, hi)) in rows.iter().enumerate() {
        for c in lo..=hi {
            if (t.contains(c) && cut_flags[c]) || (p.contains(c) && cut_flags[c - 1]) {
                lone_stars.push((j + 1, c));
            }
        }
    }

    // L: zero columns plus mirrors of lone-star columns
    let mut l_flags = vec![false; ambient + 1];
    for &c in &zero_columns {
        l_flags[c] = true;
    }
    for &(_, c) in &lone_stars {
        l_flags[ambient + 1 - c] = true;
    }
    let l_set: Vec<usize> = (1..=ambient).filter(|&c| l_flags[c]).collect();

    // Q: low cuts, plus the ambient quadric position in orthogonal types
    let mut q_set: Vec<usize> = (0..=n).filter(|&c| cut_flags[c]).collect();
    if spec.is_orthogonal() {
        q_set.push(n + 1);
    }

    Ok(DiagramReport {
        spec: *spec,
        p: p.clone(),
        t: t.clone(),
        rows,
        visible,
        exceptional,
        cuts,
        cut_flags,
        zero_columns,
        lone_stars,
        l_set,
        q_set,
    })
}

/// Cut candidate: `[c+1,n+1] ⊆ [P] ∩ [T]` and `#(T∩[1,c]) = #(P∩[1,c])+1`.
fn is_cut_candidate(spec: &Grassmannian, p: &SchubertSymbol, t: &SchubertSymbol, c: usize) -> bool {
    (c + 1..=spec.n() + 1).all(|x| spec.contains_mirrored(p, x) && spec.contains_mirrored(t, x))
        && t.count_leq(c) == p.count_leq(c) + 1
}

impl DiagramReport {
    pub fn spec(&self) -> &Grassmannian {
        &self.spec
    }

    pub fn p(&self) -> &SchubertSymbol {
        &self.p
    }

    pub fn t(&self) -> &SchubertSymbol {
        &self.t
    }

    /// Row intervals `[t_i, p_i]`, one per row.
    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn visible_cuts(&self) -> &[usize] {
        &self.visible
    }

    /// All cuts `C_{P,T}`, sorted.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// Type D exceptional cuts (center and candidate-induced), sorted.
    pub fn exceptional_cuts(&self) -> &[usize] {
        &self.exceptional
    }

    pub fn is_cut(&self, c: usize) -> bool {
        c <= self.spec.ambient() && self.cut_flags[c]
    }

    pub fn zero_columns(&self) -> &[usize] {
        &self.zero_columns
    }

    /// Lone stars as 1-based `(row, column)` pairs.
    pub fn lone_stars(&self) -> &[(usize, usize)] {
        &self.lone_stars
    }

    /// The set `L_{P,T}` of linear generator indices.
    pub fn l_set(&self) -> &[usize] {
        &self.l_set
    }

    /// The set `Q_{P,T}` of quadratic partial-sum indices.
    pub fn q_set(&self) -> &[usize] {
        &self.q_set
    }

    /// ASCII rendering: one line per row, `*` for stars (`@` for lone
    /// stars), `0` elsewhere, `|` at cut positions. Stable layout.
    pub fn render(&self) -> String {
        let ambient = self.spec.ambient();
        let mut out = String::new();
        for (j, &(lo, hi)) in self.rows.iter().enumerate() {
            if self.cut_flags[0] {
                out.push('|');
            } else {
                out.push(' ');
            }
            for c in 1..=ambient {
                let ch = if c >= lo && c <= hi {
                    if self.lone_stars.contains(&(j + 1, c)) {
                        '@'
                    } else {
                        '*'
                    }
                } else {
                    '0'
                };
                out.push(ch);
                out.push(if self.cut_flags[c] { '|' } else { ' ' });
            }
            out.push('\n');
        }
        out
    }
}

/// The relation `P → T`: the projection of the Richardson variety is a
/// birational isomorphism onto its image exactly for such pairs.
///
/// Holds when `T ⪯ P`, no row interval overhangs the next (`p_i <=
/// t_{i+1}`, with the single permitted central square `p_i = n+2`,
/// `t_{i+1} = n+1` in type D), and whenever `p_i = t_{i+1}` that value is
/// not a cut of `D(P,T)`.
pub fn arrow(spec: &Grassmannian, p: &SchubertSymbol, t: &SchubertSymbol) -> bool {
    if !preceq(spec, t, p) {
        return false;
    }
    let n = spec.n();
    let m = spec.m();
    let pe = p.elems();
    let te = t.elems();
    for i in 0..m - 1 {
        if pe[i] > te[i + 1]
            && !(spec.lie_type() == LieType::D && pe[i] == n + 2 && te[i + 1] == n + 1)
        {
            return false;
        }
    }
    let report = analyze(spec, p, t).expect("preceq implies leq");
    for i in 0..m - 1 {
        if pe[i] == te[i + 1] && report.is_cut(pe[i]) {
            return false;
        }
    }
    true
}

/// Whether `D(P,T)` contains a critical window `[c+1, N-c]`: both `c` and
/// `N-c` visible cuts and `[c+1,n+1] ⊆ [P] ∩ [T]`.
///
/// Only meaningful under the standing hypothesis `t(P) != t(T)`, which is
/// demanded as a precondition.
pub fn has_critical_window(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
) -> Result<bool> {
    if spec.lie_type() != LieType::D {
        return Err(Error::WrongLieType {
            expected: "D",
            found: spec.lie_type(),
        });
    }
    if !leq(t, p)? {
        return Err(Error::NotLeq);
    }
    if spec.type_d(p) == spec.type_d(t) {
        return Err(Error::PreconditionViolated(
            "critical windows are defined only for symbols of different type",
        ));
    }
    let n = spec.n();
    let ambient = spec.ambient();
    let report = analyze(spec, p, t)?;
    let visible = |c: usize| report.visible_cuts().binary_search(&c).is_ok();
    Ok((1..=n).any(|c| {
        visible(c)
            && visible(ambient - c)
            && (c + 1..=n + 1).all(|x| spec.contains_mirrored(p, x) && spec.contains_mirrored(t, x))
    }))
}

/// Whether some `d` has lone stars in both columns `d` and `N+1-d`.
pub fn conflicting_lone_stars(
    spec: &Grassmannian,
    p: &SchubertSymbol,
    t: &SchubertSymbol,
) -> Result<bool> {
    if spec.lie_type() != LieType::D {
        return Err(Error::WrongLieType {
            expected: "D",
            found: spec.lie_type(),
        });
    }
    if p == t {
        return Err(Error::PreconditionViolated(
            "conflicting lone stars are considered only for T != P",
        ));
    }
    let report = analyze(spec, p, t)?;
    let ambient = spec.ambient();
    let mut star_col = vec![false; ambient + 2];
    for &(_, c) in report.lone_stars() {
        star_col[c] = true;
    }
    Ok((1..=ambient).any(|d| star_col[d] && star_col[ambient + 1 - d]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: LieType, m: usize, n: usize) -> Grassmannian {
        Grassmannian::new(t, m, n).unwrap()
    }

    fn sym(g: &Grassmannian, e: &[usize]) -> SchubertSymbol {
        g.symbol(e).unwrap()
    }

    #[test]
    fn sg410_worked_example() {
        let g = spec(LieType::C, 4, 5);
        let p = sym(&g, &[2, 3, 4, 10]);
        let t = sym(&g, &[1, 2, 4, 6]);
        let r = analyze(&g, &p, &t).unwrap();
        assert_eq!(r.cuts(), &[0, 3, 4, 5, 6, 7, 10]);
        assert_eq!(r.visible_cuts(), &[0, 3, 4, 5, 10]);
        assert_eq!(r.zero_columns(), &[5]);
        assert!(r.lone_stars().contains(&(3, 4)));
        assert_eq!(r.l_set(), &[5, 7]);
        assert_eq!(r.q_set(), &[0, 3, 4, 5]);
        assert!(r.exceptional_cuts().is_empty());
    }

    #[test]
    fn type_d_cut_examples() {
        // OG(2,6), P={3,6}, T={2,3}: cuts 0..6 with 2, 3 (center), 4 exceptional
        let g = spec(LieType::D, 2, 2);
        let r = analyze(&g, &sym(&g, &[3, 6]), &sym(&g, &[2, 3])).unwrap();
        assert_eq!(r.cuts(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(r.exceptional_cuts(), &[2, 3, 4]);
        assert_eq!(r.l_set(), &[1, 4, 5]);

        // OG(3,8), P={4,6,8}, T={1,3,5}: cuts {0,2,6,8}, L empty
        let g = spec(LieType::D, 3, 3);
        let r = analyze(&g, &sym(&g, &[4, 6, 8]), &sym(&g, &[1, 3, 5])).unwrap();
        assert_eq!(r.cuts(), &[0, 2, 6, 8]);
        assert_eq!(r.exceptional_cuts(), &[2, 6]);
        assert!(r.l_set().is_empty());

        // OG(4,10), P={4,5,8,9}, T={1,3,4,6}: cuts {0,1,2,8,9,10}, L={2,10}
        let g = spec(LieType::D, 4, 4);
        let r = analyze(&g, &sym(&g, &[4, 5, 8, 9]), &sym(&g, &[1, 3, 4, 6])).unwrap();
        assert_eq!(r.cuts(), &[0, 1, 2, 8, 9, 10]);
        assert_eq!(r.exceptional_cuts(), &[2, 8]);
        assert_eq!(r.l_set(), &[2, 10]);

        // OG(3,8), P={3,4,7}, T={1,3,4}: cuts 0..8 with 2,3,4,5,6 exceptional
        let g = spec(LieType::D, 3, 3);
        let r = analyze(&g, &sym(&g, &[3, 4, 7]), &sym(&g, &[1, 3, 4])).unwrap();
        assert_eq!(r.cuts(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(r.exceptional_cuts(), &[2, 3, 4, 5, 6]);
        assert_eq!(r.l_set(), &[2, 5, 6, 8]);
    }

    #[test]
    fn center_cut_example() {
        // OG(2,6), P={2,4}, T={1,2}: exceptional center cut, (2,4) lone star
        let g = spec(LieType::D, 2, 2);
        let r = analyze(&g, &sym(&g, &[2, 4]), &sym(&g, &[1, 2])).unwrap();
        assert!(r.is_cut(3));
        assert_eq!(r.exceptional_cuts(), &[3]);
        assert!(r.lone_stars().contains(&(2, 4)));
        assert!(r.l_set().contains(&3));
    }

    #[test]
    fn analyze_requires_leq() {
        let g = spec(LieType::C, 2, 2);
        assert!(matches!(
            analyze(&g, &sym(&g, &[1, 3]), &sym(&g, &[2, 4])),
            Err(Error::NotLeq)
        ));
    }

    #[test]
    fn arrow_examples() {
        let g = spec(LieType::D, 2, 2);
        // p_1 = t_2 = 3 is the exceptional center cut, so no arrow
        assert!(!arrow(&g, &sym(&g, &[3, 6]), &sym(&g, &[1, 3])));
        // the corrected shrink output does arrow
        assert!(arrow(&g, &sym(&g, &[4, 6]), &sym(&g, &[1, 3])));
        // strictly interleaving rows always arrow when comparable
        let g2 = spec(LieType::C, 2, 3);
        assert!(arrow(&g2, &sym(&g2, &[2, 6]), &sym(&g2, &[1, 3])));
    }

    #[test]
    fn critical_window_examples() {
        let g = spec(LieType::D, 2, 2);
        assert!(has_critical_window(&g, &sym(&g, &[1, 4]), &sym(&g, &[1, 3])).unwrap());
        let g44 = spec(LieType::D, 4, 4);
        assert!(
            has_critical_window(&g44, &sym(&g44, &[2, 5, 7, 8]), &sym(&g44, &[1, 3, 4, 6]))
                .unwrap()
        );
        // equal types violate the standing hypothesis
        assert!(matches!(
            has_critical_window(&g, &sym(&g, &[2, 4]), &sym(&g, &[1, 4])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            has_critical_window(
                &spec(LieType::B, 2, 2),
                &sym(&g, &[2, 4]),
                &sym(&g, &[1, 2])
            ),
            Err(Error::WrongLieType { .. })
        ));
    }

    #[test]
    fn conflicting_lone_star_examples() {
        let g = spec(LieType::D, 2, 2);
        assert!(!conflicting_lone_stars(&g, &sym(&g, &[2, 4]), &sym(&g, &[1, 2])).unwrap());
        assert!(conflicting_lone_stars(&g, &sym(&g, &[1, 4]), &sym(&g, &[1, 3])).unwrap());
        let g44 = spec(LieType::D, 4, 4);
        assert!(
            conflicting_lone_stars(&g44, &sym(&g44, &[2, 5, 7, 8]), &sym(&g44, &[1, 3, 4, 6]))
                .unwrap()
        );
    }

    #[test]
    fn render_snapshot() {
        let g = spec(LieType::D, 2, 2);
        let r = analyze(&g, &sym(&g, &[3, 6]), &sym(&g, &[2, 3])).unwrap();
        // (2,6) is a lone star too: 6 is in P and 5 is a cut
        let expected = "\
|0|@|@|0|0|0|
|0|0|@|*|*|@|
";
        assert_eq!(r.render(), expected);
    }
}
