//! Assembly of w, k, m, m*, m(d) and the derived checks into one report.

use std::collections::BTreeMap;

use serde::Serialize;

use super::conjectures::{conjecture_suite, ConjectureInput, SInvariants, Verdict, DEFAULT_SECTIONAL_RANK_CAP};
use super::local::{local_weights, LocalWeights, ZOracle, ZRecord};
use crate::catalog::{CatalogCheck, CatalogSystem};
use crate::error::Result;
use crate::fusion::{CentricReport, GroupSystem};
use crate::group::vp;

/// An asserted equality between two independently computed integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl Check {
    pub fn eq(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Check { name: name.into(), lhs, rhs, pass: lhs == rhs }
    }
}

/// An equality that is expected but not a theorem; a mismatch is reported,
/// not treated as a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KMethod {
    /// Σ over F-classes of fully centralized x of w(C_F(x))
    CentralizerSum,
    /// w + (p−1)/l·cl(Out*) + Σ z over noncentral classes outside radicals
    ClosedForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub system: String,
    pub p: u64,
    pub s_order: u64,
    pub w: i64,
    pub k: i64,
    pub k_method: KMethod,
    pub m: Option<i64>,
    pub m_star: i64,
    pub m_by_defect: Option<BTreeMap<u32, i64>>,
    #[serde(rename = "per_Q")]
    pub per_q: Vec<LocalWeights>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub catalog_checks: Vec<CatalogCheck>,
    pub findings: Vec<Finding>,
    pub conjectures: BTreeMap<String, Verdict>,
    pub s_invariants: SInvariants,
    pub z_provenance: Vec<ZRecord>,
}

impl WeightReport {
    /// Every asserted check passed (findings and conjectures excluded).
    pub fn checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.catalog_checks.iter().all(|c| c.pass)
    }

    pub fn conjectures_pass(&self) -> bool {
        self.conjectures.values().all(|v| !v.failed())
    }

    pub fn m_d(&self, d: u32) -> Option<i64> {
        self.m_by_defect.as_ref().map(|m| m.get(&d).copied().unwrap_or(0))
    }
}

/// Per-Q sums and the totals built from them.
struct LocalTotals {
    per_q: Vec<LocalWeights>,
    w: i64,
    m_star: i64,
    m_by_defect: Option<BTreeMap<u32, i64>>,
    records: Vec<ZRecord>,
}

fn local_totals(reports: &[CentricReport], s_order: u64, p: u64) -> Result<LocalTotals> {
    let mut per_q = Vec::new();
    let mut records = Vec::new();
    for r in reports {
        let (lw, recs) = local_weights(&r.local)?;
        per_q.push(lw);
        records.extend(recs);
    }
    let w = per_q.iter().map(|q| q.z_out as i64).sum();
    let m_star = per_q.iter().map(|q| q.w_star).sum();
    let m_by_defect = if per_q.iter().all(|q| q.w_by_defect.is_some()) {
        let mut m: BTreeMap<u32, i64> = (0..=vp(s_order, p)).map(|d| (d, 0)).collect();
        for q in &per_q {
            for (d, v) in q.w_by_defect.as_ref().unwrap() {
                *m.entry(*d).or_insert(0) += v;
            }
        }
        Some(m)
    } else {
        None
    };
    Ok(LocalTotals { per_q, w, m_star, m_by_defect, records })
}

fn local_checks(per_q: &[LocalWeights]) -> Vec<Check> {
    let total = per_q.len() as i64;
    let count = |f: &dyn Fn(&LocalWeights) -> bool| per_q.iter().filter(|q| f(q)).count() as i64;
    let nonradical = per_q.iter().filter(|q| !q.is_radical).count() as i64;
    vec![
        Check::eq("reindex_orders_agree", count(&|q| q.reindex_agree), total),
        Check::eq(
            "elementary_abelian_chains_suffice",
            count(&|q| q.w_star == q.w_star_elementary),
            total,
        ),
        Check::eq(
            "nonradical_terms_vanish",
            count(&|q| !q.is_radical && q.w_star == 0 && q.z_out == 0 && q.w.unwrap_or(0) == 0),
            nonradical,
        ),
    ]
}

fn findings(t: &LocalTotals) -> Vec<Finding> {
    let mut out = Vec::new();
    for q in &t.per_q {
        if let Some(w) = q.w {
            if w != q.w_star {
                out.push(Finding { name: format!("w_Q != w*_Q at {}", q.label), lhs: w, rhs: q.w_star });
            }
        }
    }
    if let Some(m) = t.m_by_defect.as_ref().map(|m| m.values().sum::<i64>()) {
        if m != t.m_star {
            out.push(Finding { name: "m != m*".to_string(), lhs: m, rhs: t.m_star });
        }
    }
    out
}

fn provenance(mut records: Vec<ZRecord>) -> Vec<ZRecord> {
    records.sort();
    records.dedup();
    records
}

/// w(F) = Σ z(k Out_F(Q)) over F-classes of centric subgroups.
pub fn w_of_group_system(f: &GroupSystem) -> Result<(i64, Vec<ZRecord>)> {
    let mut w = 0;
    let mut records = Vec::new();
    for r in f.centric_reports()? {
        let oracle = ZOracle::new(&r.local);
        w += oracle.z(&r.local.out.whole())? as i64;
        records.extend(oracle.into_records());
    }
    Ok((w, records))
}

/// k(F) = Σ w(C_F(x)) over fully centralized representatives x of the F-classes of S.
pub fn k_of_group_system(f: &GroupSystem) -> Result<(i64, Vec<ZRecord>)> {
    let mut k = 0;
    let mut records = Vec::new();
    for (x, _) in f.fully_centralized_element_reps() {
        let (w, recs) = w_of_group_system(&f.centralizer_system(x)?)?;
        k += w;
        records.extend(recs.into_iter().map(|mut r| {
            r.context = format!("C({x})/{}", r.context);
            r
        }));
    }
    Ok((k, records))
}

/// Full report for a fusion system realized by a finite group.
pub fn group_report(f: &GroupSystem) -> Result<WeightReport> {
    let s_order = f.s.order() as u64;
    let t = local_totals(&f.centric_reports()?, s_order, f.p)?;
    let (k, k_records) = k_of_group_system(f)?;
    let s_invariants = SInvariants::compute(&f.g, &f.s, f.p, DEFAULT_SECTIONAL_RANK_CAP)?;
    let mut checks = vec![Check::eq("m_star_eq_k", t.m_star, k)];
    checks.extend(local_checks(&t.per_q));
    let conjectures = conjecture_suite(&ConjectureInput {
        p: f.p,
        k,
        w: t.w,
        m_by_defect: t.m_by_defect.as_ref(),
        s: &s_invariants,
    });
    let findings = findings(&t);
    let mut records = t.records;
    records.extend(k_records);
    Ok(WeightReport {
        system: f.label.clone(),
        p: f.p,
        s_order,
        w: t.w,
        k,
        k_method: KMethod::CentralizerSum,
        m: t.m_by_defect.as_ref().map(|m| m.values().sum()),
        m_star: t.m_star,
        m_by_defect: t.m_by_defect,
        per_q: t.per_q,
        checks,
        catalog_checks: Vec::new(),
        findings,
        conjectures,
        s_invariants,
        z_provenance: provenance(records),
    })
}

/// Full report for a catalog system on p^{1+2}_+. Chain sums run over S and
/// every line orbit; k comes from the closed form.
pub fn catalog_report(f: &CatalogSystem) -> Result<WeightReport> {
    let p = f.p as u64;
    let s_order = p * p * p;
    let t = local_totals(&f.centric_reports()?, s_order, p)?;
    let k = f.k_closed_form()?;
    let whole = f.s.whole();
    // sectional rank of p^{1+2}_+ is 2: its maximal elementary abelian sections are the
    // quotient S/Z and the subgroups of order p²
    let mut s_invariants = SInvariants::compute(&f.s, &whole, p, 0)?;
    s_invariants.sectional_rank = Some(2);

    let mut checks = vec![
        Check::eq("m_star_eq_k", t.m_star, k),
        Check::eq("w_closed_form", t.w, f.w_from_automizers()?),
    ];
    if let Some(m) = &t.m_by_defect {
        for (&d, &v) in m {
            checks.push(Check::eq(format!("m_d{d}_closed_form"), v, f.m_d_closed_form(d)?));
        }
        checks.push(Check::eq("m_eq_k", m.values().sum(), k));
    }
    for q in t.per_q.iter().filter(|q| q.q_order as u64 == p * p) {
        let v = q.w_by_defect.as_ref().and_then(|m| m.get(&2).copied()).unwrap_or(0);
        checks.push(Check::eq(format!("w_d2_vanishes_at_{}", q.label), v, 0));
    }
    checks.extend(local_checks(&t.per_q));

    let conjectures = conjecture_suite(&ConjectureInput {
        p,
        k,
        w: t.w,
        m_by_defect: t.m_by_defect.as_ref(),
        s: &s_invariants,
    });
    let findings = findings(&t);
    Ok(WeightReport {
        system: f.label(),
        p,
        s_order,
        w: t.w,
        k,
        k_method: KMethod::ClosedForm,
        m: t.m_by_defect.as_ref().map(|m| m.values().sum()),
        m_star: t.m_star,
        m_by_defect: t.m_by_defect,
        per_q: t.per_q,
        checks,
        catalog_checks: f.validate(),
        findings,
        conjectures,
        s_invariants,
        z_provenance: provenance(t.records),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    #[test]
    fn s4_report() {
        let f = GroupSystem::from_group("S4", symmetric(4), 2).unwrap();
        let r = group_report(&f).unwrap();
        assert_eq!((r.w, r.k, r.m_star), (2, 5, 5));
        assert!(r.checks_pass(), "{:?}", r.checks);
        assert_eq!(r.s_invariants.sectional_rank, Some(2));
    }

    #[test]
    fn he_report() {
        let f = CatalogSystem::lookup("He", 7).unwrap();
        let r = catalog_report(&f).unwrap();
        assert_eq!(r.w, 10);
        assert_eq!(r.m_d(2), Some(3));
        assert_eq!(r.m_d(3), Some(20));
        let s = r.per_q.iter().find(|q| q.q_order == 343).unwrap();
        assert_eq!(s.w_by_defect.as_ref().unwrap()[&3], 20);
        assert!(r.checks_pass(), "{:?}", r.checks);
        assert!(r.conjectures_pass(), "{:?}", r.conjectures);
        assert!(r.findings.is_empty());
    }

    #[test]
    fn rv1_report() {
        let r = catalog_report(&CatalogSystem::lookup("RV1", 7).unwrap()).unwrap();
        assert_eq!((r.m, r.w, r.k, r.m_star), (Some(41), 35, 41, 41));
        assert!(r.checks_pass(), "{:?}", r.checks);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["m_by_defect"]["3"], 35);
        assert!(json["per_Q"].is_array());
        assert_eq!(json["conjectures"]["k_le_S"]["rhs"], 343);
    }
}

#[cfg(test)]
mod sweep {
    use super::*;
    use crate::catalog::SYSTEM_NAMES;

    #[test]
    fn every_catalog_system_is_consistent() {
        for name in SYSTEM_NAMES {
            for p in [3, 5, 7, 11, 13] {
                let Ok(f) = CatalogSystem::lookup(name, p) else { continue };
                let r = catalog_report(&f).unwrap();
                assert!(r.checks_pass(), "{name}@{p}: {:?} {:?}", r.checks, r.catalog_checks);
                assert!(r.conjectures_pass(), "{name}@{p}: {:?}", r.conjectures);
                eprintln!("{name}@{p}: w={} k={} m={:?} findings={}", r.w, r.k, r.m, r.findings.len());
            }
        }
    }
}
