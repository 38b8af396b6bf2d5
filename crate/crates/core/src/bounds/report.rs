use serde::{Deserialize, Serialize};

use super::formulas::{abelian_tensor, green_exponent, improved_exponent, niroomand_exponent};
use super::{abelian_pcp, Alarm};
use crate::error::{Error, Result};
use crate::intlinalg::AbelianInvariants;
use crate::multiplier::schur_multiplier;
use crate::pcgroup::{PcPresentation, SubgroupBasis};

/// Largest order for which [`has_exponent_p`] falls back to enumeration.
pub const EXPONENT_SCAN_CAP: u128 = 1 << 22;

/// Structural conditions every non-abelian group attaining the bound must
/// satisfy, apart from the exempt family `ES_p(p^3) x Z_p^(n-3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttainmentConditions {
    /// `G^ab` is elementary abelian.
    #[serde(rename = "i")]
    pub gab_elementary: bool,
    /// `Z(G)` is elementary abelian.
    #[serde(rename = "ii")]
    pub center_elementary: bool,
    /// `Z(G)` lies in `G'`.
    #[serde(rename = "iii")]
    pub center_in_derived: bool,
    /// The invariant profile of `ES_p(p^3) x Z_p^(n-3)`: class 2, `k = 1`,
    /// `|Z(G)| = p^(n-2)`, exponent `p`, `p` odd.
    #[serde(rename = "exempt_g1")]
    pub exempt: bool,
}

impl AttainmentConditions {
    /// All three conditions hold, or the third fails only for the exempt
    /// family.
    pub fn satisfied(&self) -> bool {
        self.gab_elementary && self.center_elementary && (self.center_in_derived || self.exempt)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub p: u32,
    pub n: u32,
    pub k: u32,
    #[serde(rename = "class")]
    pub c: u32,
    pub d: u32,
    pub gab: AbelianInvariants,
    pub center: AbelianInvariants,
    pub multiplier: AbelianInvariants,
    /// `log_p |M(G)|`
    pub m: u32,
    /// `n(n-1)/2 - log_p |M(G)|`; negative only if something is badly wrong.
    pub t: i64,
    pub green_exp: u64,
    /// `None` for abelian groups.
    pub niroomand_exp: Option<u64>,
    pub attains_niroomand: bool,
    /// `None` for abelian groups.
    pub conditions: Option<AttainmentConditions>,
}

impl GroupReport {
    pub fn is_abelian(&self) -> bool {
        self.c <= 1
    }

    pub fn is_maximal_class(&self) -> bool {
        self.n >= 2 && self.c == self.n - 1
    }

    /// `½(n+k-2)(n-k-1)`, the bound for class at least 3 and `p != 3`.
    pub fn improved_exp(&self) -> Option<u64> {
        if self.is_abelian() {
            return None;
        }
        improved_exponent(self.n as u64, self.k as u64).ok()
    }

    /// Group-level checks whose failure would contradict a proven statement,
    /// or whose success would contradict a cited nonexistence claim.
    pub fn alarms(&self) -> Vec<Alarm> {
        let mut out = Vec::new();
        let (n, m) = (self.n as i64, self.m as i64);
        if self.t < 0 {
            out.push(Alarm::GreenExceeded);
        }
        if let Some(b) = self.niroomand_exp {
            if self.m as u64 > b {
                out.push(Alarm::NiroomandExceeded);
            }
        }
        if self.c >= 3 && self.p != 3 {
            if let Some(b) = self.improved_exp() {
                if self.m as u64 > b {
                    out.push(Alarm::ImprovedBoundExceeded);
                }
            }
        }
        if self.c >= 3 {
            let half = n * (n - 1) / 2;
            if m == half - (n - 1) {
                out.push(Alarm::ForbiddenMinusNMinusOne);
            }
            if n >= 6 && self.p % 2 == 1 && m == half - (n + 1) {
                out.push(Alarm::ForbiddenMinusNPlusOne);
            }
        }
        if self.is_maximal_class() && self.n >= 4 && m > n - 2 {
            out.push(Alarm::MaximalClassExceeded);
        }
        if let Some(c) = &self.conditions {
            if self.attains_niroomand && !c.satisfied() {
                out.push(Alarm::ConditionsViolated);
            }
        }
        out
    }
}

/// `true` iff `log_p |M(G)|` equals the Niroomand exponent; `false` for
/// abelian groups, where the bound is not defined.
pub fn attains_bound(report: &GroupReport) -> bool {
    report.attains_niroomand
}

/// Every element has order dividing `p`.
///
/// For class below `p` the group is regular, and a regular group has
/// exponent `p` iff it is generated by elements of order `p`; the pc
/// generators then decide it. Otherwise the elements are enumerated.
pub fn has_exponent_p(g: &PcPresentation) -> Result<bool> {
    let all_powers_trivial = (0..g.ngens()).all(|i| g.power_rhs(i).is_identity());
    if !all_powers_trivial {
        return Ok(false);
    }
    if (g.nilpotency_class() as u64) < g.p() as u64 {
        return Ok(true);
    }
    if g.order() > EXPONENT_SCAN_CAP {
        return Err(Error::CapExceeded {
            what: "exponent scan group order",
            size: g.order(),
            cap: EXPONENT_SCAN_CAP,
        });
    }
    let p = g.p() as i64;
    Ok(g.elements().all(|x| g.power(&x, p).is_identity()))
}

/// Conditions for a non-abelian group attaining the bound.
pub fn necessary_conditions(g: &PcPresentation) -> Result<AttainmentConditions> {
    if g.is_abelian() {
        return Err(Error::Precondition("conditions are stated for non-abelian groups".into()));
    }
    let p = g.p() as u64;
    let (gab, _) = g.abelianization();
    let z = g.center();
    let zinv = g.subgroup_invariants(&z)?;
    let derived = g.derived_subgroup();
    let exempt = g.p() % 2 == 1
        && g.nilpotency_class() == 2
        && derived.len() == 1
        && z.len() + 2 == g.ngens()
        && has_exponent_p(g)?;
    Ok(AttainmentConditions {
        gab_elementary: gab.is_elementary(p),
        center_elementary: zinv.is_elementary(p),
        center_in_derived: derived.contains_subgroup(g, &z),
        exempt,
    })
}

pub fn group_report(g: &PcPresentation) -> Result<GroupReport> {
    let p = g.p();
    let n = g.ngens() as u32;
    let derived = g.derived_subgroup();
    let k = derived.len() as u32;
    let c = g.nilpotency_class() as u32;
    let (gab, d) = g.abelianization();
    let center = g.subgroup_invariants(&g.center())?;
    let multiplier = schur_multiplier(g)?.multiplier;
    let m = multiplier.order_exponent(p as u64).expect("p-group");
    let green_exp = green_exponent(n as u64);
    let abelian = c <= 1;
    let niroomand_exp = if abelian {
        None
    } else {
        Some(niroomand_exponent(n as u64, k as u64)?)
    };
    let conditions = if abelian { None } else { Some(necessary_conditions(g)?) };
    Ok(GroupReport {
        p,
        n,
        k,
        c,
        d: d as u32,
        gab,
        center,
        multiplier,
        m,
        t: green_exp as i64 - m as i64,
        green_exp,
        niroomand_exp,
        attains_niroomand: niroomand_exp == Some(m as u64),
        conditions,
    })
}

/// Both sides of `|M(G)| |G' ∩ K|  divides  |M(A)| |M(K)| |A^ab (x) K|`
/// for central `K` and `A = G/K`, as `p`-adic exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityCheck {
    pub lhs_exp: u32,
    pub rhs_exp: u32,
}

impl DivisibilityCheck {
    /// Both sides are powers of `p`, so divisibility is `lhs <= rhs`.
    pub fn holds(&self) -> bool {
        self.lhs_exp <= self.rhs_exp
    }
}

pub fn jones_divisibility_check(g: &PcPresentation, k: &SubgroupBasis) -> Result<DivisibilityCheck> {
    if !k.is_central(g) {
        return Err(Error::NotCentral);
    }
    let p = g.p();
    let pl = |a: &AbelianInvariants| a.order_exponent(p as u64).expect("p-group");
    let a = g.central_quotient(k)?;
    let m_g = schur_multiplier(g)?.order_exponent(p);
    let m_a = schur_multiplier(&a)?.order_exponent(p);

    let derived = g.derived_subgroup();
    let mut gens = derived.members().to_vec();
    gens.extend(k.members().iter().cloned());
    let dk = SubgroupBasis::generated_by(g, &gens);
    let meet = derived.len() + k.len() - dk.len();

    let kinv = g.subgroup_invariants(k)?;
    let m_k = schur_multiplier(&abelian_pcp(p, &kinv)?)?.order_exponent(p);
    let (a_ab, _) = a.abelianization();
    let tensor = pl(&abelian_tensor(&a_ab, &kinv)?);
    Ok(DivisibilityCheck {
        lhs_exp: m_g + meet as u32,
        rhs_exp: m_a + m_k + tensor,
    })
}
