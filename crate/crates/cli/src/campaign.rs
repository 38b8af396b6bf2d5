//! The verification campaign: every published value and proven inequality
//! the library can check, run over a configurable prime set.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use schur_core::bounds::{
    ellis_inequality_check, group_report, niroomand_exponent, psi2_image, psi3_image, quotient_scan,
};
use schur_core::catalog::{self, GroupSpec};
use schur_core::multiplier::{h2_bar_oracle, schur_multiplier, ORACLE_CAP};
use schur_core::pcgroup::MultiplicationTable;
use schur_core::{AbelianInvariants, PcPresentation, Result};

use crate::json::group_checks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Needs a human look, but is not a failure.
    Alarm,
}

impl Verdict {
    pub fn pass_if(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Alarm => "ALARM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// Which published statement or value the check is about.
    pub anchor: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub alarm: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub primes: Vec<u32>,
    pub oracle_cap: usize,
    /// Sorted by id.
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    /// Wall-clock seconds per job. Kept apart from `checks` so that two runs
    /// differ only here.
    pub runtimes: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignOptions {
    pub primes: Vec<u32>,
    pub oracle_cap: usize,
}

pub const FULL_PRIMES: [u32; 6] = [3, 5, 7, 11, 13, 17];
pub const FAST_PRIMES: [u32; 3] = [3, 5, 7];

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            primes: FULL_PRIMES.to_vec(),
            oracle_cap: ORACLE_CAP,
        }
    }
}

type Job = Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync>;

fn record(id: String, anchor: &str, inputs: &str, expected: String, computed: String, verdict: Verdict) -> CheckRecord {
    CheckRecord {
        id,
        anchor: anchor.into(),
        inputs: inputs.into(),
        expected,
        computed,
        verdict,
    }
}

fn error_record(id: String, anchor: &str, inputs: &str, e: schur_core::Error) -> CheckRecord {
    record(id, anchor, inputs, "a value".into(), format!("error: {e}"), Verdict::Fail)
}

fn spec(text: &str) -> Result<(String, PcPresentation)> {
    let s: GroupSpec = text.parse()?;
    Ok((s.to_string(), catalog::build(&s)?))
}

fn elementary(p: u32, r: usize) -> AbelianInvariants {
    AbelianInvariants::from_cyclic_orders(&vec![p as u64; r])
}

/// Expected multiplier values; checked together with the free-rank law.
fn multiplier_job(text: String, expected: AbelianInvariants, anchor: &'static str) -> Job {
    Box::new(move || {
        let id = format!("multiplier/{text}");
        let run = || -> Result<Vec<CheckRecord>> {
            let (name, g) = spec(&text)?;
            let r = schur_multiplier(&g)?;
            Ok(vec![
                record(
                    id.clone(),
                    anchor,
                    &name,
                    expected.to_string(),
                    r.multiplier.to_string(),
                    Verdict::pass_if(r.multiplier == expected),
                ),
                free_rank_record(&name, &g, r.free_rank_check),
            ])
        };
        run().unwrap_or_else(|e| vec![error_record(id.clone(), anchor, &text, e)])
    })
}

fn free_rank_record(name: &str, g: &PcPresentation, found: usize) -> CheckRecord {
    record(
        format!("free-rank/{name}"),
        "tail module free rank equals d(G)",
        name,
        g.rank().to_string(),
        found.to_string(),
        Verdict::pass_if(found == g.rank()),
    )
}

/// Attainment of the bound, report-level bounds, conditions, and the full
/// quotient scan with divisibility and inheritance.
fn group_job(text: String, expect_attains: Option<bool>, conditions: bool) -> Job {
    Box::new(move || {
        let run = || -> Result<Vec<CheckRecord>> {
            let (name, g) = spec(&text)?;
            let scan = quotient_scan(&g)?;
            let r = &scan.group;
            let mut out = group_checks(&name, r);
            out.push(free_rank_record(&name, &g, schur_multiplier(&g)?.free_rank_check));
            if let Some(want) = expect_attains {
                let bound = niroomand_exponent(r.n as u64, r.k as u64)?;
                out.push(record(
                    format!("attainment/{name}"),
                    "classification of groups attaining the bound",
                    &name,
                    if want { format!("log|M| = {bound}") } else { format!("log|M| < {bound}") },
                    r.m.to_string(),
                    Verdict::pass_if(r.attains_niroomand == want),
                ));
            }
            if conditions {
                if let Some(c) = r.conditions {
                    out.push(record(
                        format!("conditions/{name}"),
                        "necessary conditions for attaining the bound",
                        &name,
                        "G^ab, Z(G) elementary; Z(G) in G' unless exempt".into(),
                        format!(
                            "i={} ii={} iii={} exempt={}",
                            c.gab_elementary, c.center_elementary, c.center_in_derived, c.exempt
                        ),
                        Verdict::pass_if(!r.attains_niroomand || c.satisfied()),
                    ));
                }
            }
            let held = scan.quotients.iter().filter(|q| q.divisibility.holds()).count();
            out.push(record(
                format!("divisibility/{name}"),
                "|M(G)||G' n K| divides |M(G/K)||M(K)||(G/K)^ab x K|",
                &name,
                format!("{} of {}", scan.quotients.len(), scan.quotients.len()),
                format!("{held} of {}", scan.quotients.len()),
                Verdict::pass_if(held == scan.quotients.len()),
            ));
            if r.attains_niroomand {
                let nonabelian: Vec<_> = scan.quotients.iter().filter(|q| !q.quotient.is_abelian()).collect();
                let inherited = nonabelian.iter().filter(|q| q.attains).count();
                out.push(record(
                    format!("inheritance/{name}"),
                    "non-abelian central order-p quotients of attaining groups attain the bound",
                    &name,
                    format!("{} of {}", nonabelian.len(), nonabelian.len()),
                    format!("{inherited} of {}", nonabelian.len()),
                    Verdict::pass_if(inherited == nonabelian.len()),
                ));
            }
            for q in &scan.quotients {
                let qname = format!("{name} / <{}>", q.kernel);
                out.extend(
                    group_checks(&qname, &q.quotient)
                        .into_iter()
                        .filter(|c| c.verdict != Verdict::Pass),
                );
            }
            Ok(out)
        };
        run().unwrap_or_else(|e| vec![error_record(format!("scan/{text}"), "quotient scan", &text, e)])
    })
}

fn psi_job(text: String, psi2_zero: bool, psi3_zero: bool) -> Job {
    Box::new(move || {
        let anchor = "class-3 inequality with psi2, psi3 images";
        let run = || -> Result<Vec<CheckRecord>> {
            let (name, g) = spec(&text)?;
            let r = ellis_inequality_check(&g)?;
            let mut out = vec![record(
                format!("psi/{name}"),
                anchor,
                &name,
                "lhs <= rhs".into(),
                format!("{} <= {}", r.lhs_exp, r.rhs_exp),
                Verdict::pass_if(r.holds()),
            )];
            if psi2_zero {
                let d = psi2_image(&g)?;
                out.push(record(format!("psi2/{name}"), anchor, &name, "0".into(), d.to_string(), Verdict::pass_if(d == 0)));
            }
            if psi3_zero {
                let d = psi3_image(&g)?;
                out.push(record(format!("psi3/{name}"), anchor, &name, "0".into(), d.to_string(), Verdict::pass_if(d == 0)));
            }
            Ok(out)
        };
        run().unwrap_or_else(|e| vec![error_record(format!("psi/{text}"), anchor, &text, e)])
    })
}

fn oracle_job(text: String, cap: usize) -> Job {
    Box::new(move || {
        let anchor = "tails agree with the bar resolution";
        let run = || -> Result<Vec<CheckRecord>> {
            let (name, g) = spec(&text)?;
            let bar = h2_bar_oracle(&MultiplicationTable::from_pcp(&g, cap)?, cap)?;
            let tails = schur_multiplier(&g)?.multiplier;
            Ok(vec![record(
                format!("oracle/{name}"),
                anchor,
                &name,
                bar.to_string(),
                tails.to_string(),
                Verdict::pass_if(bar == tails),
            )])
        };
        run().unwrap_or_else(|e| vec![error_record(format!("oracle/{text}"), anchor, &text, e)])
    })
}

fn h37_excess_job() -> Job {
    Box::new(|| {
        let anchor = "h37 exceeds the class >= 3 bound by one at p = 3";
        let run = || -> Result<CheckRecord> {
            let g = catalog::h37()?;
            let r = group_report(&g)?;
            let b = r.improved_exp().unwrap_or(0);
            Ok(record(
                "improved-excess/h37@3".into(),
                anchor,
                "h37@3",
                format!("log|M| = {}", b + 1),
                r.m.to_string(),
                Verdict::pass_if(r.m as u64 == b + 1),
            ))
        };
        vec![run().unwrap_or_else(|e| error_record("improved-excess/h37@3".into(), anchor, "h37@3", e))]
    })
}

fn jobs(opts: &CampaignOptions) -> Vec<(String, Job)> {
    let mut v: Vec<(String, Job)> = vec![
        (
            "multiplier/h37@3".into(),
            multiplier_job("h37@3".into(), elementary(3, 10), "h37 multiplier of order 3^10"),
        ),
        ("improved-excess/h37@3".into(), h37_excess_job()),
        ("scan/h37@3".into(), group_job("h37@3".into(), Some(true), true)),
        ("psi/h37@3".into(), psi_job("h37@3".into(), false, true)),
    ];
    for &p in &opts.primes {
        if p % 2 == 1 {
            for n in 3..=5 {
                let t = format!("g1@{p},n={n}");
                v.push((format!("scan/{t}"), group_job(t, Some(true), true)));
            }
            for fam in ["g2", "g3"] {
                let t = format!("{fam}@{p}");
                v.push((format!("scan/{t}"), group_job(t, Some(true), true)));
            }
        }
        if p >= 5 {
            for (fam, anchor) in [("example1", "first example multiplier"), ("example2", "second example multiplier")] {
                let t = format!("{fam}@{p}");
                v.push((format!("multiplier/{t}"), multiplier_job(t.clone(), elementary(p, 3), anchor)));
                v.push((format!("scan/{t}"), group_job(t, Some(false), false)));
            }
            if p <= 7 {
                let t = format!("example1@{p}");
                v.push((format!("psi/{t}"), psi_job(t, true, false)));
            }
        }
    }
    let mut oracle = vec!["elemab@2,rank=2", "cyclic@2,n=2", "elemab@2,rank=3", "d8", "q8", "elemab@3,rank=2", "es@3", "elemab@3,rank=3"];
    if opts.oracle_cap >= 81 {
        oracle.push("g1@3,n=4");
    }
    for t in oracle {
        v.push((format!("oracle/{t}"), oracle_job(t.into(), opts.oracle_cap)));
    }
    v
}

/// Runs every job on the current rayon pool and assembles the report.
pub fn run_campaign(opts: &CampaignOptions) -> VerificationReport {
    let results: Vec<(String, Vec<CheckRecord>, f64)> = jobs(opts)
        .into_par_iter()
        .map(|(id, job)| {
            let start = Instant::now();
            let checks = job();
            (id, checks, start.elapsed().as_secs_f64())
        })
        .collect();
    let mut checks = Vec::new();
    let mut runtimes = BTreeMap::new();
    for (id, c, t) in results {
        checks.extend(c);
        runtimes.insert(id, t);
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    checks.dedup_by(|a, b| a.id == b.id && a == b);
    let mut summary = Summary::default();
    for c in &checks {
        match c.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Alarm => summary.alarm += 1,
        }
    }
    VerificationReport {
        tool_version: env!("CARGO_PKG_VERSION").into(),
        primes: opts.primes.clone(),
        oracle_cap: opts.oracle_cap,
        checks,
        summary,
        runtimes,
    }
}
