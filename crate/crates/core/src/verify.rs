//! Named verification runs over a group-realized fusion system, as driven by
//! the command line.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::GroupSystem;
use crate::weights::{
    appendix_identity_check, chain_model_check, group_report, AppendixIdentity, Check, ChainModelReport, Finding,
    Verdict, WeightReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckName {
    #[serde(rename = "main2")]
    Main2,
    #[serde(rename = "section5")]
    Section5,
    #[serde(rename = "appendix")]
    Appendix,
    #[serde(rename = "reindex")]
    Reindex,
    #[serde(rename = "conjectures")]
    Conjectures,
    #[serde(rename = "m-vs-mstar")]
    MVsMStar,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Main2,
        CheckName::Section5,
        CheckName::Appendix,
        CheckName::Reindex,
        CheckName::Conjectures,
        CheckName::MVsMStar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Main2 => "main2",
            CheckName::Section5 => "section5",
            CheckName::Appendix => "appendix",
            CheckName::Reindex => "reindex",
            CheckName::Conjectures => "conjectures",
            CheckName::MVsMStar => "m-vs-mstar",
        }
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown check {s:?}")))
    }
}

/// Parses a comma-separated check list.
pub fn parse_checks(list: &str) -> Result<Vec<CheckName>> {
    let mut out: Vec<CheckName> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(CheckName::from_str)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::Input("empty check list".into()));
    }
    Ok(out)
}

/// Appendix identity for one normal subgroup of S, or the reason it was skipped.
#[derive(Clone, Debug, Serialize)]
pub struct AppendixCase {
    pub q_order: usize,
    pub result: Option<AppendixIdentity>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum CheckOutcome {
    Equality(Check),
    ChainModel(ChainModelReport),
    Appendix(Vec<AppendixCase>),
    Checks(Vec<Check>),
    Conjectures(BTreeMap<String, Verdict>),
    Findings(Vec<Finding>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// `None` for informational checks that cannot fail
    pub pass: Option<bool>,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupVerification {
    pub system: String,
    pub p: u64,
    pub group_order: usize,
    pub s_order: usize,
    pub checks: BTreeMap<&'static str, CheckResult>,
    pub findings: Vec<Finding>,
    pub pass: bool,
    pub report: WeightReport,
}

/// Runs the selected checks. `s_cap` bounds |S| for the chain-model sums.
pub fn verify_group(f: &GroupSystem, checks: &[CheckName], s_cap: usize) -> Result<GroupVerification> {
    let report = group_report(f)?;
    let mut out = BTreeMap::new();
    for &c in checks {
        let result = match c {
            CheckName::Main2 => {
                let check = report.checks.iter().find(|x| x.name == "m_star_eq_k").cloned().unwrap();
                CheckResult { pass: Some(check.pass), outcome: CheckOutcome::Equality(check) }
            }
            CheckName::Section5 => {
                let r = chain_model_check(f, s_cap)?;
                CheckResult { pass: Some(r.pass), outcome: CheckOutcome::ChainModel(r) }
            }
            CheckName::Appendix => {
                let cases = appendix_cases(f)?;
                let pass = cases.iter().all(|c| c.result.as_ref().map_or(true, |r| r.pass));
                CheckResult { pass: Some(pass), outcome: CheckOutcome::Appendix(cases) }
            }
            CheckName::Reindex => {
                let list: Vec<Check> = report
                    .checks
                    .iter()
                    .filter(|x| x.name != "m_star_eq_k")
                    .cloned()
                    .collect();
                CheckResult { pass: Some(list.iter().all(|x| x.pass)), outcome: CheckOutcome::Checks(list) }
            }
            CheckName::Conjectures => CheckResult {
                pass: Some(report.conjectures_pass()),
                outcome: CheckOutcome::Conjectures(report.conjectures.clone()),
            },
            CheckName::MVsMStar => CheckResult { pass: None, outcome: CheckOutcome::Findings(report.findings.clone()) },
        };
        out.insert(c.as_str(), result);
    }
    let pass = out.values().all(|r| r.pass != Some(false));
    Ok(GroupVerification {
        system: f.label.clone(),
        p: f.p,
        group_order: f.h.order(),
        s_order: f.s.order(),
        checks: out,
        findings: report.findings.clone(),
        pass,
        report,
    })
}

/// The identity for every subgroup of S that is normal in H.
fn appendix_cases(f: &GroupSystem) -> Result<Vec<AppendixCase>> {
    let mut out = Vec::new();
    for q in f.g.subgroups_of_p_group(&f.s, f.p)? {
        if !f.g.is_normal(&f.h, &q) {
            continue;
        }
        let case = match appendix_identity_check(&f.g, &f.h, &q, f.p) {
            Ok(r) => AppendixCase { q_order: q.order(), result: Some(r), skipped: None },
            Err(Error::UnsupportedIrr(why)) => AppendixCase { q_order: q.order(), result: None, skipped: Some(why) },
            Err(e) => return Err(e),
        };
        out.push(case);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::DEFAULT_CHAIN_S_CAP;
    use crate::group::named::*;

    #[test]
    fn parse_lists() {
        assert_eq!(parse_checks("main2, section5,main2").unwrap(), [CheckName::Main2, CheckName::Section5]);
        assert!(parse_checks("main3").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn s4_all_checks() {
        let f = GroupSystem::from_group("S4", symmetric(4), 2).unwrap();
        let v = verify_group(&f, &CheckName::ALL, DEFAULT_CHAIN_S_CAP).unwrap();
        assert!(v.pass, "{v:?}");
        assert_eq!(v.checks.len(), 6);
        match &v.checks["appendix"].outcome {
            CheckOutcome::Appendix(cases) => assert!(cases.iter().any(|c| c.q_order == 4 && c.result.is_some())),
            other => panic!("{other:?}"),
        }
    }
}
