use super::presentation::{PcElement, PcPresentation, Relation};
use super::subgroup::SubgroupBasis;
use super::table::{pcp_from_multiplication, MultiplicationTable};
use crate::error::{Error, Result};

/// A quotient `G/N` by a normal subgroup, with its canonical projection.
///
/// The quotient keeps the pc generators whose positions are not leading
/// indices of `N`; normal forms of `G/N` are the coset representatives of `N`
/// with those positions zero.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub pres: PcPresentation,
    kept: Vec<usize>,
    kernel: SubgroupBasis,
}

impl Quotient {
    /// Positions of `G` that survive as generators of the quotient.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn kernel(&self) -> &SubgroupBasis {
        &self.kernel
    }

    pub fn project(&self, g: &PcPresentation, x: &PcElement) -> PcElement {
        let r = self.kernel.coset_rep(g, x);
        PcElement(self.kept.iter().map(|&i| r.0[i]).collect())
    }

    /// Canonical preimage: the coset representative with zeros at the kernel
    /// positions.
    pub fn lift(&self, g: &PcPresentation, y: &PcElement) -> PcElement {
        let mut e = vec![0; g.ngens()];
        for (k, &i) in self.kept.iter().enumerate() {
            e[i] = y.0[k];
        }
        PcElement(e)
    }
}

impl PcPresentation {
    /// `G/N` for a normal subgroup `N` given by its basis.
    pub fn quotient(&self, n: &SubgroupBasis) -> Result<Quotient> {
        if !n.is_normal(self) {
            return Err(Error::Precondition("subgroup is not normal".into()));
        }
        let lead = n.leading_indices();
        let kept: Vec<usize> = (0..self.ngens()).filter(|i| !lead.contains(i)).collect();
        let mut q = Quotient {
            pres: PcPresentation::elementary_abelian(self.p(), kept.len())?,
            kept,
            kernel: n.clone(),
        };
        let mut target = q.pres.clone();
        for rel in Relation::all(q.kept.len()) {
            let value = match rel {
                Relation::Power(i) => self.power_rhs(q.kept[i]).clone(),
                Relation::Comm(j, i) => self.comm_rhs(q.kept[j], q.kept[i]).clone(),
            };
            target.set_rhs(rel, q.project(self, &value));
        }
        q.pres = target;
        if !q.pres.is_consistent() {
            return Err(Error::Internal("quotient presentation is inconsistent".into()));
        }
        Ok(q)
    }

    /// `G/K` for a central subgroup `K`.
    pub fn central_quotient(&self, k: &SubgroupBasis) -> Result<PcPresentation> {
        if !k.is_central(self) {
            return Err(Error::NotCentral);
        }
        Ok(self.quotient(k)?.pres)
    }

    /// `G/K` rebuilt from the coset multiplication table. Slower than
    /// [`PcPresentation::central_quotient`] and capped at `cap` cosets; kept as
    /// an independent path.
    pub fn central_quotient_via_table(&self, k: &SubgroupBasis, cap: usize) -> Result<PcPresentation> {
        if !k.is_central(self) {
            return Err(Error::NotCentral);
        }
        let lead = k.leading_indices();
        let m = self.ngens() - lead.len();
        let size = (self.p() as u128).pow(m as u32);
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                what: "coset table",
                size,
                cap: cap as u128,
            });
        }
        let reps: Vec<PcElement> = self
            .elements()
            .filter(|x| lead.iter().all(|&l| x.0[l] == 0))
            .collect();
        let index = |x: &PcElement| reps.binary_search(x).expect("canonical coset rep");
        let mut data = Vec::with_capacity(reps.len() * reps.len());
        for a in &reps {
            for b in &reps {
                data.push(index(&k.coset_rep(self, &self.multiply(a, b))) as u32);
            }
        }
        pcp_from_multiplication(&MultiplicationTable::new(reps.len(), data)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg(p: u32) -> PcPresentation {
        PcPresentation::elementary_abelian(p, 3)
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap()
    }

    #[test]
    fn extraspecial_mod_center_is_elementary_abelian() {
        let g = heisenberg(3);
        let z = g.center();
        let q = g.central_quotient(&z).unwrap();
        assert_eq!(q.ngens(), 2);
        assert!(q.is_abelian());
        let t = g.central_quotient_via_table(&z, 10_000).unwrap();
        assert_eq!(t.ngens(), 2);
        assert!(t.is_abelian());
    }

    #[test]
    fn noncentral_subgroup_is_rejected() {
        let g = heisenberg(3);
        let h = g.normal_closure(&[g.generator(1)]);
        assert_eq!(g.central_quotient(&h), Err(Error::NotCentral));
        // it is normal though, so the general quotient works
        let q = g.quotient(&h).unwrap();
        assert_eq!(q.pres.ngens(), 1);
    }

    #[test]
    fn trivial_kernel_keeps_everything() {
        let g = heisenberg(5);
        let q = g.quotient(&SubgroupBasis::trivial()).unwrap();
        assert_eq!(q.pres, g);
        for x in g.elements().step_by(11) {
            assert_eq!(q.project(&g, &x), x);
            assert_eq!(q.lift(&g, &x), x);
        }
    }

    #[test]
    fn projection_is_a_homomorphism() {
        // Z_9 x Z_3 modulo the subgroup of order 3 generated by g1^3 = g2
        let g = PcPresentation::elementary_abelian(3, 3)
            .unwrap()
            .with_power(0, &[(1, 1)])
            .unwrap();
        let k = g.normal_closure(&[g.generator(1)]);
        let q = g.quotient(&k).unwrap();
        for a in g.elements() {
            for b in g.elements().step_by(5) {
                assert_eq!(
                    q.project(&g, &g.multiply(&a, &b)),
                    q.pres.multiply(&q.project(&g, &a), &q.project(&g, &b))
                );
            }
        }
    }
}
