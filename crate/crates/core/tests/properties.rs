//! Randomized properties over specs beyond the fixed desk-scale list.

use proptest::prelude::*;

use isogr_core::bruhat::preceq;
use isogr_core::diagram::{analyze, arrow, conflicting_lone_stars, has_critical_window};
use isogr_core::grassmannian::{Grassmannian, LieType, SchubertSymbol};
use isogr_core::projection::{shrink, z_data};

/// Any valid space, including the disconnected type D case m = n+1.
fn arb_spec(max_n: usize) -> impl Strategy<Value = Grassmannian> {
    (0..3usize, 1..=max_n).prop_flat_map(|(t, n)| {
        let t = [LieType::B, LieType::C, LieType::D][t];
        let bound = match t {
            LieType::D => n + 1,
            _ => n,
        };
        (Just(t), Just(n), 1..=bound).prop_map(|(t, n, m)| Grassmannian::new(t, m, n).unwrap())
    })
}

/// Spaces in the range where the projected-Richardson machinery applies:
/// m <= n in type D (the maximal even orthogonal space is disconnected
/// and outside the theory).
fn arb_spec_standard(max_n: usize) -> impl Strategy<Value = Grassmannian> {
    (0..3usize, 1..=max_n).prop_flat_map(|(t, n)| {
        let t = [LieType::B, LieType::C, LieType::D][t];
        (Just(t), Just(n), 1..=n).prop_map(|(t, n, m)| Grassmannian::new(t, m, n).unwrap())
    })
}

fn pair_from(
    strategy: impl Strategy<Value = Grassmannian>,
) -> impl Strategy<Value = (Grassmannian, SchubertSymbol, SchubertSymbol)> {
    strategy.prop_flat_map(|g| {
        let symbols = g.symbols();
        let len = symbols.len();
        (Just(g), Just(symbols), 0..len, 0..len)
            .prop_map(|(g, symbols, i, j)| (g, symbols[i].clone(), symbols[j].clone()))
    })
}

fn arb_pair(max_n: usize) -> impl Strategy<Value = (Grassmannian, SchubertSymbol, SchubertSymbol)> {
    pair_from(arb_spec(max_n))
}

fn arb_pair_standard(
    max_n: usize,
) -> impl Strategy<Value = (Grassmannian, SchubertSymbol, SchubertSymbol)> {
    pair_from(arb_spec_standard(max_n))
}

proptest! {
    #[test]
    fn dual_is_involutive((g, p, _) in arb_pair(6)) {
        prop_assert_eq!(g.dual(&g.dual(&p)), p);
    }

    #[test]
    fn reflection_reverses_the_order((g, p, q) in arb_pair(6)) {
        prop_assert_eq!(
            preceq(&g, &q, &p),
            preceq(&g, &g.reflect(&p), &g.reflect(&q))
        );
    }

    #[test]
    fn rotation_preserves_diagram_data((g, p, q) in arb_pair_standard(6)) {
        let (p, t) = if isogr_core::bruhat::leq(&q, &p).unwrap() {
            (p, q)
        } else if isogr_core::bruhat::leq(&p, &q).unwrap() {
            (q, p)
        } else {
            return Ok(());
        };
        let report = analyze(&g, &p, &t).unwrap();
        let rotated = analyze(&g, &g.reflect(&t), &g.reflect(&p)).unwrap();
        prop_assert_eq!(report.cuts(), rotated.cuts());
        prop_assert_eq!(report.q_set(), rotated.q_set());
        prop_assert_eq!(report.l_set().len(), rotated.l_set().len());
    }

    #[test]
    fn shrink_is_sound((g, p, q) in arb_pair_standard(6)) {
        let (p, t) = if preceq(&g, &q, &p) {
            (p, q)
        } else if preceq(&g, &p, &q) {
            (q, p)
        } else {
            return Ok(());
        };
        let small = shrink(&g, &p, &t).unwrap();
        prop_assert!(preceq(&g, &t, &small));
        prop_assert!(preceq(&g, &small, &p));
        let z = z_data(&g, &p, &t).unwrap();
        let zs = z_data(&g, &small, &t).unwrap();
        prop_assert_eq!(z.linear_vars(), zs.linear_vars());
        prop_assert_eq!(z.quad_gaps(), zs.quad_gaps());
        prop_assert!(arrow(&g, &small, &t));
    }

    #[test]
    fn type_d_order_criteria_agree((g, p, q) in pair_from(
        (1..=5usize).prop_flat_map(|n| {
            (Just(n), 1..=n).prop_map(|(n, m)| {
                Grassmannian::new(LieType::D, m, n).unwrap()
            })
        })
    )) {
        if p == q || !isogr_core::bruhat::leq(&q, &p).unwrap() {
            return Ok(());
        }
        let by_types = preceq(&g, &q, &p);
        let by_stars = !conflicting_lone_stars(&g, &p, &q).unwrap();
        prop_assert_eq!(by_types, by_stars);
        if g.type_of(&p).unwrap() != g.type_of(&q).unwrap() {
            prop_assert_eq!(by_types, !has_critical_window(&g, &p, &q).unwrap());
        }
    }
}
