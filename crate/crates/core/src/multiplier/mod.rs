//! Schur multiplier `M(G)` via the Hopf formula, realized with central tails
//! on a pc presentation, plus an independent bar-resolution oracle.

mod bar;
mod definitions;
mod tails;

use serde::Serialize;

pub use bar::{h2_bar_oracle, ORACLE_CAP, ORACLE_CAP_MAX};
pub use definitions::{lower_exponent_p_central_series, with_definitions, DefinedPresentation};
pub use tails::{
    consistency_relation_matrix, tail_module, tailed_collect, TailMode, TailedElement, TailedPresentation,
};

use crate::error::{Error, Result};
use crate::intlinalg::AbelianInvariants;
use crate::pcgroup::PcPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplierResult {
    pub multiplier: AbelianInvariants,
    /// Free rank of the tail module; always equals `d(G)` on success.
    pub free_rank_check: usize,
    pub consistency_rows: usize,
    pub tail_count: usize,
}

impl MultiplierResult {
    /// `log_p |M(G)|`.
    pub fn order_exponent(&self, p: u32) -> u32 {
        self.multiplier.order_exponent(p as u64).expect("M(G) is a finite p-group")
    }
}

/// `M(G)` as the torsion of `R/[F,R]`, where `F` is free on a minimal
/// generating set. Fails if the free rank of the tail module is not `d(G)`,
/// which would mean the tail computation itself is wrong.
pub fn schur_multiplier(pres: &PcPresentation) -> Result<MultiplierResult> {
    let bad = pres.check_consistency();
    if !bad.is_empty() {
        return Err(Error::Inconsistent(bad.len()));
    }
    let dp = with_definitions(pres)?;
    let tp = TailedPresentation::with_definitions(&dp);
    let m = tp.consistency_matrix()?;
    let module = crate::intlinalg::abelian_invariants(&m, tp.tail_count())?;
    let d = pres.rank();
    if module.free_rank != d {
        return Err(Error::FreeRankMismatch {
            expected: d,
            found: module.free_rank,
        });
    }
    let multiplier = AbelianInvariants {
        torsion: module.torsion,
        free_rank: 0,
    };
    if !multiplier.is_p_group(pres.p() as u64) {
        return Err(Error::Internal(format!("multiplier {multiplier} is not a p-group")));
    }
    Ok(MultiplierResult {
        multiplier,
        free_rank_check: module.free_rank,
        consistency_rows: m.rows(),
        tail_count: tp.tail_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn log_m(g: &PcPresentation) -> u32 {
        schur_multiplier(g).unwrap().order_exponent(g.p())
    }

    #[test]
    fn classical_values() {
        for p in [2, 3, 5] {
            for k in 0..4usize {
                let z = PcPresentation::elementary_abelian(p, k).unwrap();
                assert_eq!(log_m(&z), (k * k.saturating_sub(1) / 2) as u32);
            }
            assert_eq!(log_m(&catalog::cyclic(p, 3).unwrap()), 0);
        }
        assert_eq!(schur_multiplier(&catalog::d8().unwrap()).unwrap().multiplier.torsion, vec![2]);
        assert!(schur_multiplier(&catalog::q8().unwrap()).unwrap().multiplier.is_trivial());
        assert_eq!(log_m(&catalog::extraspecial(3).unwrap()), 2);
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        let bad = PcPresentation::elementary_abelian(2, 3)
            .unwrap()
            .with_power(0, &[(1, 1)])
            .unwrap()
            .with_power(1, &[(2, 1)])
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap();
        assert!(matches!(schur_multiplier(&bad), Err(Error::Inconsistent(_))));
    }
}
