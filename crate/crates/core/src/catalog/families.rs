//! Presentations of the named groups. Generator order is fixed per family and
//! chosen so that every relation value lies in later generators; all
//! commutators not listed are trivial.

use crate::error::Result;
use crate::pcgroup::PcPresentation;

fn base(p: u32, n: usize) -> Result<PcPresentation> {
    PcPresentation::elementary_abelian(p, n)
}

/// Extraspecial group of order `p^3` and exponent `p` (odd `p`):
/// `g1, g2, g3` with `[g2, g1] = g3`.
pub fn extraspecial(p: u32) -> Result<PcPresentation> {
    base(p, 3)?.with_comm(1, 0, &[(2, 1)])
}

/// `ES_p(p^3) x Z_p^(n-3)`, `n >= 3`.
pub fn g1(p: u32, n: usize) -> Result<PcPresentation> {
    extraspecial(p)?.direct_product(&base(p, n - 3)?)
}

/// Generators `alpha, alpha1, alpha2, beta1, beta2` with
/// `[alpha_i, alpha] = beta_i`.
pub fn g2(p: u32) -> Result<PcPresentation> {
    base(p, 5)?.with_comm(1, 0, &[(3, 1)])?.with_comm(2, 0, &[(4, 1)])
}

/// Generators `alpha1, alpha2, alpha3, beta1, beta2, beta3` with
/// `[alpha1, alpha2] = beta3`, `[alpha2, alpha3] = beta1`,
/// `[alpha3, alpha1] = beta2`.
pub fn g3(p: u32) -> Result<PcPresentation> {
    base(p, 6)?
        .with_comm(1, 0, &[(5, p - 1)])?
        .with_comm(2, 0, &[(4, 1)])?
        .with_comm(2, 1, &[(3, p - 1)])
}

/// The order `3^7` extension of `g3(3)` by a central `gamma` (generator 7)
/// with `[beta1, alpha1] = [beta2, alpha2] = [beta3, alpha3] = gamma`.
pub fn h37() -> Result<PcPresentation> {
    let g = g3(3)?;
    let mut h = base(3, 7)?;
    for (j, i) in [(1, 0), (2, 0), (2, 1)] {
        let w: Vec<(usize, u32)> = g.comm_rhs(j, i).syllables().collect();
        h = h.with_comm(j, i, &w)?;
    }
    h.with_comm(3, 0, &[(6, 1)])?
        .with_comm(4, 1, &[(6, 1)])?
        .with_comm(5, 2, &[(6, 1)])
}

/// Class 3, order `p^5`: generators `alpha, alpha1, ..., alpha4` with
/// `[alpha, alpha1] = alpha2`, `[alpha2, alpha] = alpha3`,
/// `[alpha2, alpha1] = alpha4`.
pub fn example1(p: u32) -> Result<PcPresentation> {
    base(p, 5)?
        .with_comm(1, 0, &[(2, p - 1)])?
        .with_comm(2, 0, &[(3, 1)])?
        .with_comm(2, 1, &[(4, 1)])
}

/// Maximal class, order `p^5`: `[alpha_i, alpha] = alpha_(i+1)` for
/// `i = 1, 2, 3`, every generator of order `p` (valid for `p >= 5`).
pub fn example2(p: u32) -> Result<PcPresentation> {
    base(p, 5)?
        .with_comm(1, 0, &[(2, 1)])?
        .with_comm(2, 0, &[(3, 1)])?
        .with_comm(3, 0, &[(4, 1)])
}

/// Cyclic group of order `p^n` as the chain `g_i^p = g_(i+1)`.
pub fn cyclic(p: u32, n: usize) -> Result<PcPresentation> {
    let mut g = base(p, n)?;
    for i in 0..n.saturating_sub(1) {
        g = g.with_power(i, &[(i + 1, 1)])?;
    }
    Ok(g)
}

/// Dihedral group of order 8: `g2^2 = g3`, `[g2, g1] = g3`.
pub fn d8() -> Result<PcPresentation> {
    base(2, 3)?.with_power(1, &[(2, 1)])?.with_comm(1, 0, &[(2, 1)])
}

/// Quaternion group of order 8: `g1^2 = g2^2 = [g2, g1] = g3`.
pub fn q8() -> Result<PcPresentation> {
    base(2, 3)?
        .with_power(0, &[(2, 1)])?
        .with_power(1, &[(2, 1)])?
        .with_comm(1, 0, &[(2, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::PcElement;

    #[test]
    fn every_family_is_consistent() {
        for p in [3, 5, 7] {
            for g in [
                extraspecial(p),
                g1(p, 3),
                g1(p, 5),
                g2(p),
                g3(p),
                cyclic(p, 3),
            ] {
                assert!(g.unwrap().is_consistent());
            }
        }
        for p in [5, 7, 11] {
            assert!(example1(p).unwrap().is_consistent());
            assert!(example2(p).unwrap().is_consistent());
        }
        for g in [h37(), d8(), q8()] {
            assert!(g.unwrap().is_consistent());
        }
    }

    #[test]
    fn example1_collection_and_commutator() {
        let g = example1(5).unwrap();
        // alpha2 alpha = alpha alpha2 alpha3
        assert_eq!(g.collect(&[(2, 1), (0, 1)]).unwrap().exps(), &[1, 0, 1, 1, 0]);
        assert_eq!(g.commutator(&g.generator(2), &g.generator(0)), g.generator(3));
        // [alpha, alpha1] = alpha2
        assert_eq!(g.commutator(&g.generator(0), &g.generator(1)), g.generator(2));
    }

    #[test]
    fn g3_relations_as_stated() {
        let g = g3(5).unwrap();
        let a = |i: usize| g.generator(i);
        assert_eq!(g.commutator(&a(0), &a(1)), a(5));
        assert_eq!(g.commutator(&a(1), &a(2)), a(3));
        assert_eq!(g.commutator(&a(2), &a(0)), a(4));
    }

    #[test]
    fn small_two_groups() {
        let d = d8().unwrap();
        let q = q8().unwrap();
        let orders = |g: &PcPresentation| {
            let mut v: Vec<u32> = g.elements().map(|x| g.element_order_exponent(&x)).collect();
            v.sort();
            v
        };
        // D8 has five involutions, Q8 only one
        assert_eq!(orders(&d).iter().filter(|&&e| e == 1).count(), 5);
        assert_eq!(orders(&q).iter().filter(|&&e| e == 1).count(), 1);
        assert_eq!(cyclic(2, 2).unwrap().element_order_exponent(&PcElement::generator(2, 0)), 2);
    }
}
