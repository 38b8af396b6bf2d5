//! Machine-readable reports. Invariants are plain lists of cyclic orders.

use serde::{Deserialize, Serialize};

use schur_core::bounds::{AttainmentConditions, DivisibilityCheck, GroupReport, QuotientScan};

use crate::campaign::{CheckRecord, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSection {
    pub spec: String,
    pub p: u32,
    pub n: u32,
    pub k: u32,
    pub class: u32,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSection {
    pub gab: Vec<u64>,
    pub center: Vec<u64>,
    pub multiplier: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSection {
    pub green_exp: u64,
    /// `null` for abelian groups.
    pub niroomand_exp: Option<u64>,
    pub t: i64,
    pub attains: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub group: GroupSection,
    pub invariants: InvariantSection,
    pub bounds: BoundSection,
    /// `null` for abelian groups.
    pub conditions: Option<AttainmentConditions>,
    pub checks: Vec<CheckRecord>,
}

impl GroupJson {
    pub fn new(spec: &str, r: &GroupReport) -> Self {
        GroupJson {
            group: GroupSection {
                spec: spec.to_string(),
                p: r.p,
                n: r.n,
                k: r.k,
                class: r.c,
                d: r.d,
            },
            invariants: InvariantSection {
                gab: r.gab.torsion.clone(),
                center: r.center.torsion.clone(),
                multiplier: r.multiplier.torsion.clone(),
            },
            bounds: BoundSection {
                green_exp: r.green_exp,
                niroomand_exp: r.niroomand_exp,
                t: r.t,
                attains: r.attains_niroomand,
            },
            conditions: r.conditions,
            checks: group_checks(spec, r),
        }
    }
}

/// The group-level checks of a report: bounds that must hold, and sizes
/// that should never occur.
pub fn group_checks(spec: &str, r: &GroupReport) -> Vec<CheckRecord> {
    let alarms = r.alarms();
    let mut out = vec![CheckRecord {
        id: format!("green/{spec}"),
        anchor: "general bound n(n-1)/2".into(),
        inputs: spec.into(),
        expected: format!("log|M| <= {}", r.green_exp),
        computed: r.m.to_string(),
        verdict: Verdict::pass_if(r.t >= 0),
    }];
    if let Some(b) = r.niroomand_exp {
        out.push(CheckRecord {
            id: format!("niroomand/{spec}"),
            anchor: "bound (n+k-2)(n-k-1)/2+1".into(),
            inputs: format!("{spec} n={} k={}", r.n, r.k),
            expected: format!("log|M| <= {b}"),
            computed: r.m.to_string(),
            verdict: Verdict::pass_if(r.m as u64 <= b),
        });
    }
    if r.c >= 3 && r.p != 3 {
        if let Some(b) = r.improved_exp() {
            out.push(CheckRecord {
                id: format!("improved/{spec}"),
                anchor: "class >= 3, p != 3 bound (n+k-2)(n-k-1)/2".into(),
                inputs: format!("{spec} n={} k={}", r.n, r.k),
                expected: format!("log|M| <= {b}"),
                computed: r.m.to_string(),
                verdict: if r.m as u64 <= b { Verdict::Pass } else { Verdict::Alarm },
            });
        }
    }
    for a in alarms {
        use schur_core::bounds::Alarm::*;
        // the bound alarms above already carry their own records
        if matches!(a, GreenExceeded | NiroomandExceeded | ImprovedBoundExceeded) {
            continue;
        }
        out.push(CheckRecord {
            id: format!("alarm/{spec}/{}", alarm_slug(a)),
            anchor: a.describe().into(),
            inputs: spec.into(),
            expected: "no match".into(),
            computed: format!("log|M| = {}", r.m),
            verdict: Verdict::Alarm,
        });
    }
    out
}

pub fn alarm_slug(a: schur_core::bounds::Alarm) -> String {
    serde_json::to_value(a)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    /// Generator of `K`, as an exponent vector.
    pub kernel: Vec<u32>,
    pub report: GroupJson,
    pub divisibility: DivisibilityJson,
    /// `null` when the quotient is abelian.
    pub attains: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityJson {
    pub lhs_exp: u32,
    pub rhs_exp: u32,
    pub holds: bool,
}

impl From<DivisibilityCheck> for DivisibilityJson {
    fn from(d: DivisibilityCheck) -> Self {
        DivisibilityJson {
            lhs_exp: d.lhs_exp,
            rhs_exp: d.rhs_exp,
            holds: d.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    pub group: GroupJson,
    pub quotients: Vec<QuotientJson>,
}

impl ScanJson {
    pub fn new(spec: &str, s: &QuotientScan) -> Self {
        let quotients = s
            .quotients
            .iter()
            .map(|q| {
                let qspec = format!("{spec} / <{}>", q.kernel);
                QuotientJson {
                    kernel: q.kernel.exps().to_vec(),
                    report: GroupJson::new(&qspec, &q.quotient),
                    divisibility: q.divisibility.into(),
                    attains: (!q.quotient.is_abelian()).then_some(q.attains),
                }
            })
            .collect();
        ScanJson {
            group: GroupJson::new(spec, &s.group),
            quotients,
        }
    }
}
