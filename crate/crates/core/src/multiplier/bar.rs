//! `H_2(G; Z)` straight from the normalized bar resolution.
//!
//! Chains in degree `k` are formal sums of `[g1|...|gk]` with no `gi = 1`.
//! With trivial coefficients
//! `d[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h]`, and because `C_2 / ker d_2`
//! embeds in the free module `C_1`, the torsion of `coker d_3` is exactly the
//! (finite) group `H_2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlinalg::{sparse_smith_form, AbelianInvariants, SparseRow};
use crate::pcgroup::MultiplicationTable;

/// Default largest group order accepted by [`h2_bar_oracle`].
pub const ORACLE_CAP: usize = 32;
/// Largest cap the oracle may be raised to.
pub const ORACLE_CAP_MAX: usize = 81;

pub fn h2_bar_oracle(table: &MultiplicationTable, cap: usize) -> Result<AbelianInvariants> {
    let n = table.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "bar resolution group order",
            size: n as u128,
            cap: cap as u128,
        });
    }
    table.check_associative()?;
    let e = table.identity();
    // nonidentity elements renumbered 0..n-1
    let mut slot = vec![usize::MAX; n];
    let mut k = 0;
    for (x, s) in slot.iter_mut().enumerate() {
        if x != e {
            *s = k;
            k += 1;
        }
    }
    let m = n - 1;
    let pair = |a: usize, b: usize| -> Option<usize> {
        (a != e && b != e).then(|| slot[a] * m + slot[b])
    };
    let mut rows: Vec<SparseRow<BigInt>> = Vec::with_capacity(m * m * m);
    for g in (0..n).filter(|&x| x != e) {
        for h in (0..n).filter(|&x| x != e) {
            let gh = table.mul(g, h);
            for kk in (0..n).filter(|&x| x != e) {
                let hk = table.mul(h, kk);
                let mut row: SparseRow<BigInt> = Vec::with_capacity(4);
                for (c, s) in [(pair(h, kk), 1), (pair(gh, kk), -1), (pair(g, hk), 1), (pair(g, h), -1)] {
                    if let Some(c) = c {
                        row.push((c, BigInt::from(s)));
                    }
                }
                rows.push(row);
            }
        }
    }
    let snf = sparse_smith_form(m * m, rows);
    let torsion: Vec<u64> = snf
        .diag
        .iter()
        .filter(|d| **d > BigInt::from(1))
        .map(|d| u64::try_from(d).map_err(|_| Error::InvariantOverflow))
        .collect::<Result<_>>()?;
    Ok(AbelianInvariants { torsion, free_rank: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn oracle(g: &crate::PcPresentation) -> AbelianInvariants {
        h2_bar_oracle(&MultiplicationTable::from_pcp(g, 64).unwrap(), ORACLE_CAP).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(oracle(&catalog::d8().unwrap()).torsion, vec![2]);
        assert!(oracle(&catalog::q8().unwrap()).is_trivial());
        assert_eq!(oracle(&crate::PcPresentation::elementary_abelian(2, 2).unwrap()).torsion, vec![2]);
        assert!(oracle(&catalog::cyclic(2, 2).unwrap()).is_trivial());
        assert!(oracle(&crate::PcPresentation::trivial(2).unwrap()).is_trivial());
    }

    #[test]
    fn cap_is_enforced() {
        let t = MultiplicationTable::from_pcp(&crate::PcPresentation::elementary_abelian(3, 2).unwrap(), 64).unwrap();
        assert!(matches!(h2_bar_oracle(&t, 8), Err(Error::CapExceeded { .. })));
    }
}
