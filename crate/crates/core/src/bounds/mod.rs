//! Upper bounds on `|M(G)|` and the structural facts around them.
//!
//! Everything is compared on `p`-adic exponents. Checks that could only
//! fail if a proven statement (or this code) were wrong are reported as
//! [`Alarm`]s rather than errors, so a scan always runs to completion.

mod formulas;
mod psi;
mod report;
mod scan;

use serde::{Deserialize, Serialize};

pub use formulas::{abelian_multiplier, abelian_tensor, green_exponent, improved_exponent, niroomand_exponent};
pub use psi::{ellis_inequality_check, psi2_image, psi3_image, PsiImageReport};
pub use report::{
    attains_bound, group_report, has_exponent_p, jones_divisibility_check, necessary_conditions,
    AttainmentConditions, DivisibilityCheck, GroupReport, EXPONENT_SCAN_CAP,
};
pub use scan::{quotient_scan, QuotientRecord, QuotientScan};

use crate::catalog;
use crate::error::{Error, Result};
use crate::intlinalg::AbelianInvariants;
use crate::pcgroup::PcPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alarm {
    /// `log_p |M(G)| > n(n-1)/2`.
    GreenExceeded,
    /// `log_p |M(G)|` above the Niroomand exponent.
    NiroomandExceeded,
    /// Class at least 3, `p != 3`, and `log_p |M(G)| > ½(n+k-2)(n-k-1)`: a
    /// counterexample to the improved bound.
    ImprovedBoundExceeded,
    /// Class at least 3 with `log_p |M(G)| = n(n-1)/2 - (n-1)`, a size
    /// claimed not to occur.
    ForbiddenMinusNMinusOne,
    /// Class at least 3, `n >= 6`, `p` odd, with
    /// `log_p |M(G)| = n(n-1)/2 - (n+1)`, a size claimed not to occur.
    ForbiddenMinusNPlusOne,
    /// Maximal class, `n >= 4`, and `log_p |M(G)| > n-2`.
    MaximalClassExceeded,
    /// Attains the bound but fails the necessary conditions.
    ConditionsViolated,
    DivisibilityFailed,
    /// `G` attains the bound but some `G/K` does not.
    AttainmentNotInherited,
}

impl Alarm {
    pub fn describe(self) -> &'static str {
        match self {
            Alarm::GreenExceeded => "multiplier exceeds p^(n(n-1)/2)",
            Alarm::NiroomandExceeded => "multiplier exceeds p^((n+k-2)(n-k-1)/2+1)",
            Alarm::ImprovedBoundExceeded => "class >= 3, p != 3 and multiplier exceeds p^((n+k-2)(n-k-1)/2)",
            Alarm::ForbiddenMinusNMinusOne => "class >= 3 with multiplier of order p^(n(n-1)/2-(n-1))",
            Alarm::ForbiddenMinusNPlusOne => "class >= 3, n >= 6, p odd with multiplier of order p^(n(n-1)/2-(n+1))",
            Alarm::MaximalClassExceeded => "maximal class with multiplier above p^(n-2)",
            Alarm::ConditionsViolated => "attains the bound but fails a necessary condition",
            Alarm::DivisibilityFailed => "|M(G)||G' n K| does not divide |M(G/K)||M(K)||(G/K)^ab x K|",
            Alarm::AttainmentNotInherited => "attains the bound but a central quotient does not",
        }
    }
}

/// A pc presentation of the finite abelian `p`-group with the given
/// invariants.
pub fn abelian_pcp(p: u32, a: &AbelianInvariants) -> Result<PcPresentation> {
    if !a.is_p_group(p as u64) {
        return Err(Error::Precondition(format!("{a} is not a finite {p}-group")));
    }
    let mut g = PcPresentation::trivial(p)?;
    for &d in &a.torsion {
        let e = crate::intlinalg::p_adic_log(d, p as u64).expect("p-power order");
        g = g.direct_product(&catalog::cyclic(p, e as usize)?)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::schur_multiplier;

    #[test]
    fn abelian_pcp_round_trip() {
        let a = AbelianInvariants::from_cyclic_orders(&[3, 9, 27]);
        let g = abelian_pcp(3, &a).unwrap();
        assert_eq!(g.ngens(), 6);
        assert_eq!(g.abelianization().0, a);
        assert_eq!(schur_multiplier(&g).unwrap().multiplier, abelian_multiplier(&a).unwrap());
        assert!(abelian_pcp(3, &AbelianInvariants::from_cyclic_orders(&[2])).is_err());
    }
}
