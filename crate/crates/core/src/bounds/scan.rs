use serde::{Deserialize, Serialize};

use super::report::{group_report, jones_divisibility_check, DivisibilityCheck, GroupReport};
use super::Alarm;
use crate::error::Result;
use crate::pcgroup::{PcElement, PcPresentation};

/// One central subgroup `K` of order `p` and what happens in `G/K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientRecord {
    /// Generator of `K`.
    pub kernel: PcElement,
    pub quotient: GroupReport,
    pub divisibility: DivisibilityCheck,
    pub attains: bool,
    pub alarms: Vec<Alarm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientScan {
    pub group: GroupReport,
    pub quotients: Vec<QuotientRecord>,
    /// Alarms raised by `G` itself.
    pub alarms: Vec<Alarm>,
}

impl QuotientScan {
    pub fn all_alarms(&self) -> impl Iterator<Item = &Alarm> {
        self.alarms.iter().chain(self.quotients.iter().flat_map(|q| q.alarms.iter()))
    }
}

/// Reports for `G` and for `G/K` over every central `K` of order `p`, with
/// the divisibility check for each pair. If `G` attains the bound, every
/// non-abelian quotient must too.
pub fn quotient_scan(g: &PcPresentation) -> Result<QuotientScan> {
    let group = group_report(g)?;
    let alarms = group.alarms();
    let mut quotients = Vec::new();
    for k in g.central_order_p_subgroups()? {
        let q = g.central_quotient(&k)?;
        let quotient = group_report(&q)?;
        let divisibility = jones_divisibility_check(g, &k)?;
        let attains = quotient.attains_niroomand;
        let mut alarms = quotient.alarms();
        if !divisibility.holds() {
            alarms.push(Alarm::DivisibilityFailed);
        }
        // the bound is only defined for non-abelian groups; an abelian G/K
        // (K = G' with k = 1) is outside its scope
        if group.attains_niroomand && !quotient.is_abelian() && !attains {
            alarms.push(Alarm::AttainmentNotInherited);
        }
        quotients.push(QuotientRecord {
            kernel: k.members()[0].clone(),
            quotient,
            divisibility,
            attains,
            alarms,
        });
    }
    Ok(QuotientScan {
        group,
        quotients,
        alarms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn h37_has_one_attaining_quotient() {
        let s = quotient_scan(&catalog::h37().unwrap()).unwrap();
        assert_eq!(s.quotients.len(), 1);
        let q = &s.quotients[0];
        assert_eq!(q.quotient.n, 6);
        assert!(q.attains);
        assert!(q.divisibility.holds());
        assert_eq!(s.all_alarms().count(), 0);
    }

    #[test]
    fn g2_quotients() {
        let s = quotient_scan(&catalog::g2(3).unwrap()).unwrap();
        assert_eq!(s.quotients.len(), 4);
        assert!(s.quotients.iter().all(|q| q.quotient.n == 4 && q.attains));
        assert_eq!(s.all_alarms().count(), 0);
    }

    #[test]
    fn maximal_class_example() {
        let s = quotient_scan(&catalog::example2(5).unwrap()).unwrap();
        assert!(s.group.is_maximal_class());
        assert_eq!((s.group.n, s.group.m), (5, 3));
        assert!(s.alarms.is_empty());
    }
}
