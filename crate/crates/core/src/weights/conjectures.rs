//! Inequalities and nonvanishing statements predicted for k, w and m(d).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::group::{vp, Group, Subgroup};
use crate::modular::{character_degrees, irr_with_defects};

/// Structural data of S used by the conjecture checks.
#[derive(Clone, Debug, Serialize)]
pub struct SInvariants {
    pub order: u64,
    /// |S| = p^d
    pub d: u32,
    pub abelian: bool,
    pub sectional_rank: Option<u32>,
    pub class_count: u64,
    /// number of conjugacy classes of [S,S]
    pub derived_class_count: u64,
    /// least r > 0 with a character of degree p^r (None for abelian S or when
    /// the degrees are unavailable)
    pub min_degree_exponent: Option<u32>,
}

/// Default bound on |S| for the brute-force sectional rank.
pub const DEFAULT_SECTIONAL_RANK_CAP: usize = 1024;

impl SInvariants {
    /// Computes everything from S itself; the sectional rank is left out when
    /// |S| exceeds `rank_cap`.
    pub fn compute(group: &Group, s: &Subgroup, p: u64, rank_cap: usize) -> Result<Self> {
        let abelian = group.is_abelian(s);
        let sectional_rank = if s.order() <= rank_cap {
            Some(sectional_rank(group, s, p)?)
        } else {
            None
        };
        let min_degree_exponent = if abelian {
            None
        } else {
            let degrees: Vec<u64> = match irr_with_defects(group, s, p) {
                Ok(irr) => irr.chars.iter().map(|c| c.degree).collect(),
                Err(_) => match character_degrees(group, s) {
                    Ok(m) => m.as_sorted_vec(),
                    Err(_) => Vec::new(),
                },
            };
            degrees.into_iter().filter(|&n| n > 1).map(|n| vp(n, p)).min()
        };
        let derived = group.derived(s);
        Ok(SInvariants {
            order: s.order() as u64,
            d: vp(s.order() as u64, p),
            abelian,
            sectional_rank,
            class_count: group.class_count(s) as u64,
            derived_class_count: group.class_count(&derived) as u64,
            min_degree_exponent,
        })
    }
}

/// Maximal rank of an elementary abelian section of S. Every such section of
/// Q is a quotient of Q/Φ(Q), so this is the maximum of log_p |Q : Φ(Q)|.
pub fn sectional_rank(group: &Group, s: &Subgroup, p: u64) -> Result<u32> {
    let mut best = 0;
    for q in group.subgroups_of_p_group(s, p)? {
        let phi = group.frattini(&q, p)?;
        best = best.max(vp((q.order() / phi.order()) as u64, p));
    }
    Ok(best)
}

/// One conjecture verdict with the two numbers compared. `pass` is `None`
/// when the check was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub pass: Option<bool>,
    pub detail: String,
}

impl Verdict {
    fn compare(lhs: i64, rhs: i64, pass: bool, detail: impl Into<String>) -> Self {
        Verdict { lhs: Some(lhs), rhs: Some(rhs), pass: Some(pass), detail: detail.into() }
    }

    fn skipped(detail: impl Into<String>) -> Self {
        Verdict { lhs: None, rhs: None, pass: None, detail: detail.into() }
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }
}

/// Inputs of the suite.
#[derive(Clone, Debug)]
pub struct ConjectureInput<'a> {
    pub p: u64,
    pub k: i64,
    pub w: i64,
    pub m_by_defect: Option<&'a BTreeMap<u32, i64>>,
    pub s: &'a SInvariants,
}

/// Runs every check. Keys are stable and sorted.
pub fn conjecture_suite(input: &ConjectureInput) -> BTreeMap<String, Verdict> {
    let s = input.s;
    let mut out = BTreeMap::new();
    out.insert(
        "k_le_S".to_string(),
        Verdict::compare(input.k, s.order as i64, input.k <= s.order as i64, "k(F) <= |S|"),
    );
    out.insert(
        "w_le_p_pow_sectional_rank".to_string(),
        match s.sectional_rank {
            Some(r) => {
                let bound = input.p.pow(r) as i64;
                Verdict::compare(input.w, bound, input.w <= bound, format!("w(F) <= p^s with s = {r}"))
            }
            None => Verdict::skipped("sectional rank not computed (|S| above cap)"),
        },
    );

    let Some(m) = input.m_by_defect else {
        let why = "m(F,d) unavailable (Irr of some centric subgroup unsupported)";
        for key in ["m_d_nonnegative", "height_zero", "eaton_moreto", "k_le_derived_classes_times_m_d"] {
            out.insert(key.to_string(), Verdict::skipped(why));
        }
        out.insert("k_le_classes_times_w".to_string(), classes_times_w(input));
        return out;
    };
    let md = |d: u32| m.get(&d).copied().unwrap_or(0);

    let min = (1..=s.d).map(md).min().unwrap_or(0);
    out.insert(
        "m_d_nonnegative".to_string(),
        Verdict::compare(min, 0, min >= 0, "min over d >= 1 of m(F,d) >= 0"),
    );

    let off_top = (0..s.d).filter(|&d| md(d) != 0).count() as i64;
    out.insert(
        "height_zero".to_string(),
        if s.abelian {
            Verdict::compare(off_top, 0, off_top == 0, "S abelian: m(F,d') = 0 for all d' < d")
        } else {
            Verdict::compare(off_top, 1, off_top >= 1, "S nonabelian: m(F,d') != 0 for some d' < d")
        },
    );

    out.insert(
        "eaton_moreto".to_string(),
        match (s.abelian, s.min_degree_exponent) {
            (true, _) => Verdict::skipped("S abelian: not applicable"),
            (false, None) => Verdict::skipped("character degrees of S unavailable"),
            (false, Some(r)) => {
                let first = (1..=s.d).find(|&j| md(s.d - j) != 0);
                match first {
                    Some(j) => Verdict::compare(
                        r as i64,
                        j as i64,
                        r == j,
                        "least r with a degree p^r equals least r > 0 with m(F,d-r) != 0",
                    ),
                    None => Verdict {
                        lhs: Some(r as i64),
                        rhs: None,
                        pass: Some(false),
                        detail: "m(F,d-r) = 0 for every r > 0".to_string(),
                    },
                }
            }
        },
    );

    let rhs = s.derived_class_count as i64 * md(s.d);
    out.insert(
        "k_le_derived_classes_times_m_d".to_string(),
        Verdict::compare(input.k, rhs, input.k <= rhs, "k(F) <= cl([S,S]) * m(F,d)"),
    );
    out.insert("k_le_classes_times_w".to_string(), classes_times_w(input));
    out
}

fn classes_times_w(input: &ConjectureInput) -> Verdict {
    let rhs = input.s.class_count as i64 * input.w;
    Verdict::compare(input.k, rhs, input.k <= rhs, "k(F) <= cl(S) * w(F)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    #[test]
    fn sectional_ranks() {
        let d8 = dihedral8();
        assert_eq!(sectional_rank(&d8, &d8.whole(), 2).unwrap(), 2);
        let e = extraspecial(3);
        assert_eq!(sectional_rank(&e, &e.whole(), 3).unwrap(), 2);
        let v = perm_group(4, &[&[2, 1, 4, 3], &[3, 4, 1, 2]]);
        assert_eq!(sectional_rank(&v, &v.whole(), 2).unwrap(), 2);
    }

    #[test]
    fn invariants_of_extraspecial() {
        let e = extraspecial(5);
        let inv = SInvariants::compute(&e, &e.whole(), 5, DEFAULT_SECTIONAL_RANK_CAP).unwrap();
        assert_eq!(inv.d, 3);
        assert_eq!(inv.class_count, 5 * 5 + 4);
        assert_eq!(inv.derived_class_count, 5);
        assert_eq!(inv.min_degree_exponent, Some(1));
    }

    #[test]
    fn abelian_height_zero_and_skips() {
        let s = SInvariants {
            order: 9,
            d: 2,
            abelian: true,
            sectional_rank: Some(2),
            class_count: 9,
            derived_class_count: 1,
            min_degree_exponent: None,
        };
        let m: BTreeMap<u32, i64> = [(0, 0), (1, 0), (2, 5)].into();
        let v = conjecture_suite(&ConjectureInput { p: 3, k: 5, w: 5, m_by_defect: Some(&m), s: &s });
        assert_eq!(v["height_zero"].pass, Some(true));
        assert_eq!(v["eaton_moreto"].pass, None);
        assert_eq!(v["k_le_S"].pass, Some(true));
        let v = conjecture_suite(&ConjectureInput { p: 3, k: 5, w: 5, m_by_defect: None, s: &s });
        assert_eq!(v["m_d_nonnegative"].pass, None);
        assert_eq!(v["k_le_classes_times_w"].pass, Some(true));
    }
}
