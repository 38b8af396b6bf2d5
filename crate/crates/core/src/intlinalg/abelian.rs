use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::snf::{smith_normal_form, SmithForm};
use crate::error::{Error, Result};

/// Invariant-factor decomposition `Z/d1 + ... + Z/dt + Z^free_rank` with
/// every `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary list of cyclic orders (`0` means infinite
    /// cyclic) into invariant-factor form.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let n = orders.len();
        let mut m = Matrix::<BigInt>::zeros(n, n);
        for (i, &d) in orders.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        Self::from_smith(&smith_normal_form(&m), n).expect("factors of u64 inputs fit in u64")
    }

    pub(crate) fn from_smith(s: &SmithForm<BigInt>, ngens: usize) -> Result<Self> {
        let mut torsion = Vec::new();
        for d in &s.diag {
            if d.is_one() {
                continue;
            }
            torsion.push(d.to_u64().ok_or(Error::InvariantOverflow)?);
        }
        Ok(AbelianInvariants {
            torsion,
            free_rank: ngens - s.rank,
        })
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Number of cyclic factors in the torsion part.
    pub fn torsion_rank(&self) -> usize {
        self.torsion.len()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigUint::one(), |acc, &d| acc * d))
    }

    /// `log_p` of the order of the torsion subgroup, if it is a p-group.
    pub fn torsion_exponent(&self, p: u64) -> Option<u32> {
        let mut total = 0;
        for &d in &self.torsion {
            total += p_adic_log(d, p)?;
        }
        Some(total)
    }

    /// `log_p |A|`; `None` when infinite or not a p-group.
    pub fn order_exponent(&self, p: u64) -> Option<u32> {
        if !self.is_finite() {
            return None;
        }
        self.torsion_exponent(p)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.is_finite() && self.torsion_exponent(p).is_some()
    }

    pub fn is_elementary(&self, p: u64) -> bool {
        self.is_finite() && self.torsion.iter().all(|&d| d == p)
    }
}

/// `log_p d` when `d` is a power of `p`.
pub fn p_adic_log(mut d: u64, p: u64) -> Option<u32> {
    if d == 0 || p < 2 {
        return None;
    }
    let mut e = 0;
    while d > 1 {
        if !d.is_multiple_of(p) {
            return None;
        }
        d /= p;
        e += 1;
    }
    Some(e)
}

/// Invariants of `Z^ngens / rowspace(relations)`.
pub fn abelian_invariants(relations: &Matrix<BigInt>, ngens: usize) -> Result<AbelianInvariants> {
    if relations.rows() > 0 && relations.cols() != ngens {
        return Err(Error::ColumnMismatch {
            expected: ngens,
            found: relations.cols(),
        });
    }
    if relations.rows() == 0 {
        return Ok(AbelianInvariants {
            torsion: vec![],
            free_rank: ngens,
        });
    }
    AbelianInvariants::from_smith(&smith_normal_form(relations), ngens)
}

impl fmt::Display for AbelianInvariants {
    /// `Z3 x Z3 x Z^2`, or `1` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" x "))
    }
}

impl AbelianInvariants {
    /// Compact form for tables: `Z3^3` style grouping of equal factors.
    pub fn compact(&self) -> String {
        if self.is_trivial() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 {
                format!("Z{d}")
            } else {
                format!("Z{d}^{run}")
            });
            i += run;
        }
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.join(" x ")
    }
}

impl std::ops::Add for AbelianInvariants {
    type Output = AbelianInvariants;

    /// Direct sum.
    fn add(self, rhs: Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(rhs.torsion.iter().copied());
        orders.extend(std::iter::repeat_n(0, self.free_rank + rhs.free_rank));
        AbelianInvariants::from_cyclic_orders(&orders)
    }
}
