//! The maps `psi2` and `psi3` on tensor powers of `Gbar^ab`, where
//! `Gbar = G/Z(G)`, for groups of class 3.
//!
//! With a basis `x_1..x_D` of `Gbar^ab` (elementary abelian), write
//! `C(a,b)` for `[x_a, x_b]` in `gamma2/gamma3` and `T(a,b,c)` for
//! `[[x_a, x_b], x_c]` in `gamma3`. Then
//!
//! ```text
//! psi2(a,b,c)   = C(a,b) (x) c + C(b,c) (x) a + C(c,a) (x) b
//! psi3(a,b,c,d) = T(a,b,c) (x) d - T(a,b,d) (x) c + T(c,d,a) (x) b - T(c,d,b) (x) a
//! ```
//!
//! Both maps are multilinear, so their images are spanned by the values on
//! basis tuples; image sizes are `p^rank` over `F_p`.

use serde::{Deserialize, Serialize};

use super::formulas::{abelian_multiplier, abelian_tensor};
use crate::error::{Error, Result};
use crate::intlinalg::modp::rank_mod_p;
use crate::intlinalg::AbelianInvariants;
use crate::multiplier::schur_multiplier;
use crate::pcgroup::{PcElement, PcPresentation, SubgroupBasis};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiImageReport {
    pub dim_psi2: usize,
    pub dim_psi3: usize,
    /// `log_p(|M(G)| |gamma2| |Im psi2| |Im psi3|)`
    pub lhs_exp: u32,
    /// `log_p(|M(G^ab)| |gamma2/gamma3 (x) Gbar^ab| |gamma3 (x) Gbar^ab|)`
    pub rhs_exp: u32,
}

impl PsiImageReport {
    pub fn holds(&self) -> bool {
        self.lhs_exp <= self.rhs_exp
    }
}

/// Coordinates needed by both maps.
struct Sections {
    p: u32,
    /// lifts of a basis of `Gbar^ab`
    xs: Vec<PcElement>,
    /// `[x_a, x_b]` modulo `gamma3`, as vectors
    c2: Vec<Vec<Vec<u32>>>,
    dim2: usize,
    gamma3: SubgroupBasis,
}

fn class_three(g: &PcPresentation) -> Result<Vec<SubgroupBasis>> {
    let lcs = g.lower_central_series();
    if lcs.len() - 1 != 3 {
        return Err(Error::Precondition(format!(
            "psi maps need nilpotency class 3, got class {}",
            lcs.len() - 1
        )));
    }
    Ok(lcs)
}

fn sections(g: &PcPresentation) -> Result<Sections> {
    let lcs = class_three(g)?;
    let p = g.p();
    let z = g.center();
    let mut gens = z.members().to_vec();
    gens.extend(lcs[1].members().iter().cloned());
    let zg = g.normal_closure(&gens);
    let bar = g.quotient(&zg)?;
    if !(bar.pres.is_abelian() && bar.pres.is_elementary_abelian_presentation()) {
        return Err(Error::Precondition("Gbar^ab is not elementary abelian".into()));
    }
    let xs: Vec<PcElement> = bar.kept().iter().map(|&i| g.generator(i)).collect();

    let q2 = g.quotient(&lcs[2])?;
    let projected: Vec<PcElement> = lcs[1].members().iter().map(|x| q2.project(g, x)).collect();
    let g2 = SubgroupBasis::generated_by(&q2.pres, &projected);
    if !g2.is_elementary_abelian(&q2.pres) {
        return Err(Error::Precondition("gamma2/gamma3 is not elementary abelian".into()));
    }
    let c2 = xs
        .iter()
        .map(|a| {
            xs.iter()
                .map(|b| {
                    let c = q2.project(g, &g.commutator(a, b));
                    g2.sift_with_exponents(&q2.pres, &c).1
                })
                .collect()
        })
        .collect();
    Ok(Sections {
        p,
        xs,
        c2,
        dim2: g2.len(),
        gamma3: lcs[2].clone(),
    })
}

fn add_tensor(out: &mut [u32], u: &[u32], e: usize, d: usize, sign: i64, p: u32) {
    for (i, &ui) in u.iter().enumerate() {
        if ui != 0 {
            let slot = &mut out[i * d + e];
            let v = (*slot as i64 + sign * ui as i64).rem_euclid(p as i64);
            *slot = v as u32;
        }
    }
}

fn psi2_dim(s: &Sections) -> usize {
    let d = s.xs.len();
    let mut vecs = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut v = vec![0u32; s.dim2 * d];
                add_tensor(&mut v, &s.c2[a][b], c, d, 1, s.p);
                add_tensor(&mut v, &s.c2[b][c], a, d, 1, s.p);
                add_tensor(&mut v, &s.c2[c][a], b, d, 1, s.p);
                vecs.push(v);
            }
        }
    }
    rank_mod_p(s.p, s.dim2 * d, vecs.iter().map(|v| v.as_slice()))
}

fn psi3_dim(g: &PcPresentation, s: &Sections) -> Result<usize> {
    if !s.gamma3.is_elementary_abelian(g) {
        return Err(Error::Precondition("gamma3 is not elementary abelian".into()));
    }
    let d = s.xs.len();
    let dim3 = s.gamma3.len();
    let mut t = vec![vec![vec![Vec::new(); d]; d]; d];
    for a in 0..d {
        for b in 0..d {
            let ab = g.commutator(&s.xs[a], &s.xs[b]);
            for c in 0..d {
                let x = g.commutator(&ab, &s.xs[c]);
                t[a][b][c] = s.gamma3.sift_with_exponents(g, &x).1;
            }
        }
    }
    let mut vecs = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for e in 0..d {
                    let mut v = vec![0u32; dim3 * d];
                    add_tensor(&mut v, &t[a][b][c], e, d, 1, s.p);
                    add_tensor(&mut v, &t[a][b][e], c, d, -1, s.p);
                    add_tensor(&mut v, &t[c][e][a], b, d, 1, s.p);
                    add_tensor(&mut v, &t[c][e][b], a, d, -1, s.p);
                    vecs.push(v);
                }
            }
        }
    }
    Ok(rank_mod_p(s.p, dim3 * d, vecs.iter().map(|v| v.as_slice())))
}

/// `dim_Fp Im(psi2)`.
pub fn psi2_image(g: &PcPresentation) -> Result<usize> {
    Ok(psi2_dim(&sections(g)?))
}

/// `dim_Fp Im(psi3)`.
pub fn psi3_image(g: &PcPresentation) -> Result<usize> {
    psi3_dim(g, &sections(g)?)
}

/// Evaluates both sides of the class-3 inequality
/// `|M(G)| |gamma2| |Im psi2| |Im psi3| <=
///  |M(G^ab)| |gamma2/gamma3 (x) Gbar^ab| |gamma3 (x) Gbar^ab|`
/// as `p`-adic exponents.
pub fn ellis_inequality_check(g: &PcPresentation) -> Result<PsiImageReport> {
    let s = sections(g)?;
    let p = g.p();
    let lcs = g.lower_central_series();
    let dim_psi2 = psi2_dim(&s);
    let dim_psi3 = psi3_dim(g, &s)?;
    let m = schur_multiplier(g)?.order_exponent(p);
    let lhs_exp = m + lcs[1].len() as u32 + dim_psi2 as u32 + dim_psi3 as u32;

    let (gab, _) = g.abelianization();
    let m_ab = abelian_multiplier(&gab)?;
    let ab_pcp = super::abelian_pcp(p, &gab)?;
    if schur_multiplier(&ab_pcp)?.multiplier != m_ab {
        return Err(Error::Internal("classical abelian multiplier disagrees with the tails".into()));
    }
    let bar_ab = AbelianInvariants::from_cyclic_orders(&vec![p as u64; s.xs.len()]);
    let g2g3 = AbelianInvariants::from_cyclic_orders(&vec![p as u64; s.dim2]);
    let g3 = g.subgroup_invariants(&lcs[2])?;
    let pl = |a: &AbelianInvariants| a.order_exponent(p as u64).expect("p-group");
    let rhs_exp = pl(&m_ab) + pl(&abelian_tensor(&g2g3, &bar_ab)?) + pl(&abelian_tensor(&g3, &bar_ab)?);
    Ok(PsiImageReport {
        dim_psi2,
        dim_psi3,
        lhs_exp,
        rhs_exp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn two_generated_groups_have_trivial_psi2() {
        for p in [5, 7] {
            assert_eq!(psi2_image(&catalog::example1(p).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn h37_images() {
        let h = catalog::h37().unwrap();
        assert_eq!(psi3_image(&h).unwrap(), 0);
        assert!(psi2_image(&h).unwrap() >= 1);
        let r = ellis_inequality_check(&h).unwrap();
        assert_eq!(r.rhs_exp, 15);
        assert!(r.holds());
    }

    #[test]
    fn class_two_is_rejected() {
        assert!(matches!(
            ellis_inequality_check(&catalog::g2(3).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn example1_right_side() {
        let r = ellis_inequality_check(&catalog::example1(5).unwrap()).unwrap();
        // |M(Z5^2)| = 5, |Z5 (x) Z5^2| = 5^2, |Z5^2 (x) Z5^2| = 5^4
        assert_eq!(r.rhs_exp, 7);
        assert!(r.holds());
    }
}
