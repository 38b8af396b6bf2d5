//! Plain-text rendering for terminals.

use std::fmt::Write;

use schur_core::bounds::{GroupReport, QuotientScan};
use schur_core::AbelianInvariants;

use crate::campaign::{Verdict, VerificationReport};

/// Longest invariant list printed in full.
pub const MAX_FACTORS: usize = 12;

/// `Z3 x Z9 x ...`, truncated after [`MAX_FACTORS`] cyclic factors.
pub fn invariants(a: &AbelianInvariants) -> String {
    if a.is_trivial() {
        return "1".into();
    }
    let mut parts: Vec<String> = a.torsion.iter().take(MAX_FACTORS).map(|d| format!("Z{d}")).collect();
    if a.torsion.len() > MAX_FACTORS {
        parts.push(format!("... ({} factors)", a.torsion.len()));
    }
    if a.free_rank > 0 {
        parts.push(format!("Z^{}", a.free_rank));
    }
    parts.join(" x ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn group_report(spec: &str, r: &GroupReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group        {spec}");
    let _ = writeln!(s, "order        {}^{}", r.p, r.n);
    let _ = writeln!(s, "class        {}", r.c);
    let _ = writeln!(s, "|G'|         {}^{}", r.p, r.k);
    let _ = writeln!(s, "d(G)         {}", r.d);
    let _ = writeln!(s, "G^ab         {}", invariants(&r.gab));
    let _ = writeln!(s, "Z(G)         {}", invariants(&r.center));
    let _ = writeln!(s, "M(G)         {}", invariants(&r.multiplier));
    let _ = writeln!(s, "|M(G)|       {}^{}", r.p, r.m);
    let _ = writeln!(s, "t(G)         {}", r.t);
    match r.niroomand_exp {
        Some(b) => {
            let _ = writeln!(s, "bound        {}^{b}", r.p);
            let _ = writeln!(s, "attains      {}", yes_no(r.attains_niroomand));
        }
        None => {
            let _ = writeln!(s, "bound        n/a (abelian)");
        }
    }
    if let Some(c) = r.conditions {
        let _ = writeln!(
            s,
            "conditions   G^ab elementary: {}, Z(G) elementary: {}, Z(G) in G': {}{}",
            yes_no(c.gab_elementary),
            yes_no(c.center_elementary),
            yes_no(c.center_in_derived),
            if c.exempt { " (exempt profile ES_p(p^3) x Z_p^(n-3))" } else { "" }
        );
    }
    for a in r.alarms() {
        let _ = writeln!(s, "ALARM        {}", a.describe());
    }
    s
}

pub fn scan(spec: &str, sc: &QuotientScan) -> String {
    let mut s = group_report(spec, &sc.group);
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "{:<24} {:>3} {:>5} {:>3} {:<28} {:>8} {:>12}",
        "K", "n", "class", "k", "M(G/K)", "attains", "divisibility"
    );
    for q in &sc.quotients {
        let r = &q.quotient;
        let attains = if r.is_abelian() { "n/a" } else { yes_no(q.attains) };
        let div = format!(
            "{} {}<={}",
            if q.divisibility.holds() { "ok" } else { "FAIL" },
            q.divisibility.lhs_exp,
            q.divisibility.rhs_exp
        );
        let _ = writeln!(
            s,
            "{:<24} {:>3} {:>5} {:>3} {:<28} {:>8} {:>12}",
            format!("<{}>", q.kernel),
            r.n,
            r.c,
            r.k,
            invariants(&r.multiplier),
            attains,
            div
        );
        for a in &q.alarms {
            let _ = writeln!(s, "  ALARM {}", a.describe());
        }
    }
    s
}

pub fn campaign(r: &VerificationReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        if c.verdict == Verdict::Pass {
            let _ = writeln!(s, "{:<5} {}", c.verdict, c.id);
        } else {
            let _ = writeln!(
                s,
                "{:<5} {}: expected {}, computed {} [{}]",
                c.verdict, c.id, c.expected, c.computed, c.anchor
            );
        }
    }
    let _ = writeln!(
        s,
        "{} checks: {} pass, {} fail, {} alarm",
        r.checks.len(),
        r.summary.pass,
        r.summary.fail,
        r.summary.alarm
    );
    s
}
