use proptest::prelude::*;

use fusion_weights::catalog::GoldenCell;
use fusion_weights::fusion::GroupSystem;
use fusion_weights::group::named::*;
use fusion_weights::group::{Group, Idx};
use fusion_weights::modular::{ell_count, z_all_rules, z_count, CocycleData};
use fusion_weights::weights::{appendix_identity_check, chain_reduction_crosscheck, group_report};

fn ambient(which: u8) -> (Group, u64) {
    match which % 4 {
        0 => (symmetric(4), 2),
        1 => (gl2(3), 3),
        2 => (gl2(3), 2),
        _ => (symmetric(4), 3),
    }
}

/// The group generated by the chosen elements, as a group in its own right.
fn generated(g: &Group, picks: &[u32]) -> Group {
    let gens: Vec<_> = picks.iter().map(|&i| g.elem(i % g.order() as u32).clone()).collect();
    Group::generate(&gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn m_star_equals_k_on_generated_groups(which in 0u8..4, picks in prop::collection::vec(0u32..48, 1..3)) {
        let (g, p) = ambient(which);
        let h = generated(&g, &picks);
        let f = GroupSystem::from_group("sub", h, p).unwrap();
        let r = group_report(&f).unwrap();
        prop_assert_eq!(r.m_star, r.k);
        prop_assert!(r.checks_pass(), "{:?}", r.checks);
        if let (Some(m), Some(by_d)) = (r.m, &r.m_by_defect) {
            prop_assert_eq!(m, by_d.values().sum::<i64>());
            prop_assert!(by_d.keys().all(|&d| d as u64 <= r.s_order.ilog(p) as u64));
        }
    }

    #[test]
    fn z_rules_agree_on_subgroups(which in 0u8..4, picks in prop::collection::vec(0u32..48, 1..3)) {
        let (g, p) = ambient(which);
        let idx: Vec<Idx> = picks.iter().map(|&i| i % g.order() as u32).collect();
        let h = g.closure(&idx);
        let tagged = which % 4 == 1;
        let all = z_all_rules(&g, &h, p, tagged, 10_000).unwrap();
        let first = z_count(&g, &h, p, &CocycleData::Trivial, tagged).unwrap();
        prop_assert!(!all.is_empty());
        prop_assert!(all.iter().all(|(_, v)| *v == first.value), "{:?}", all);
    }

    #[test]
    fn chain_sums_agree_on_subgroups(which in 0u8..4, picks in prop::collection::vec(0u32..48, 1..3)) {
        let (g, p) = ambient(which);
        let idx: Vec<Idx> = picks.iter().map(|&i| i % g.order() as u32).collect();
        let h = g.closure(&idx);
        let r = chain_reduction_crosscheck(&g, &h, p, |g, k| ell_count(g, k, p) as i64).unwrap();
        prop_assert!(r.pass, "{:?}", r);
    }

    #[test]
    fn class_character_identity_over_v4(picks in prop::collection::vec(0u32..24, 0..3)) {
        // every subgroup of S₄ containing V₄ normalizes it
        let g = symmetric(4);
        let v4 = g.p_core(&g.whole(), 2);
        let mut idx: Vec<Idx> = v4.gens().to_vec();
        idx.extend(picks);
        let h = g.closure(&idx);
        let r = appendix_identity_check(&g, &h, &v4, 2).unwrap();
        prop_assert!(r.pass, "{:?}", r);
    }

    #[test]
    fn golden_formula_matches_polynomial(a in -3i64..4, b in -20i64..21, c in -50i64..51, den in 1i64..7, p in 2u32..40) {
        let cell = GoldenCell::Formula { text: "f".into(), coeffs: [a, b, c], den };
        let pi = p as i64;
        let num = a * pi * pi + b * pi + c;
        match cell.eval(p) {
            Ok(v) => prop_assert_eq!(v * den, num),
            Err(_) => prop_assert!(num % den != 0),
        }
        prop_assert_eq!(GoldenCell::Value(c).eval(p).unwrap(), c);
    }
}

#[test]
fn extraspecial_group_is_its_own_system() {
    // F_S(S) for S = 3^{1+2}: k is the class number of S
    let f = GroupSystem::from_group("3^(1+2)", extraspecial(3), 3).unwrap();
    let r = group_report(&f).unwrap();
    assert_eq!(r.k, 11);
    assert_eq!(r.m_star, 11);
    assert_eq!(r.w, 1);
    assert_eq!(r.m_by_defect.as_ref().unwrap()[&3], 9);
    assert_eq!(r.m_by_defect.as_ref().unwrap()[&2], 2);
}
