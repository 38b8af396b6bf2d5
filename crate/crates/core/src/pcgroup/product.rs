use super::presentation::{PcElement, PcPresentation, Relation};
use crate::error::{Error, Result};

impl PcPresentation {
    /// `A x B` on the generators of `A` followed by those of `B`; all cross
    /// commutators are trivial.
    pub fn direct_product(&self, other: &PcPresentation) -> Result<PcPresentation> {
        if self.p() != other.p() {
            return Err(Error::PrimeMismatch(self.p(), other.p()));
        }
        let (na, nb) = (self.ngens(), other.ngens());
        let mut out = PcPresentation::elementary_abelian(self.p(), na + nb)?;
        let shift = |w: &PcElement, offset: usize| {
            let mut e = vec![0; na + nb];
            e[offset..offset + w.len()].copy_from_slice(w.exps());
            PcElement(e)
        };
        for rel in Relation::all(na) {
            out.set_rhs(rel, shift(self.rhs(rel), 0));
        }
        for rel in Relation::all(nb) {
            let moved = match rel {
                Relation::Power(i) => Relation::Power(i + na),
                Relation::Comm(j, i) => Relation::Comm(j + na, i + na),
            };
            out.set_rhs(moved, shift(other.rhs(rel), na));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_with_trivial_group() {
        let a = PcPresentation::elementary_abelian(3, 3)
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap();
        let t = PcPresentation::trivial(3).unwrap();
        assert_eq!(a.direct_product(&t).unwrap(), a);
        assert_eq!(t.direct_product(&a).unwrap(), a);
    }

    #[test]
    fn prime_mismatch() {
        let a = PcPresentation::elementary_abelian(3, 1).unwrap();
        let b = PcPresentation::elementary_abelian(5, 1).unwrap();
        assert_eq!(a.direct_product(&b), Err(Error::PrimeMismatch(3, 5)));
    }

    #[test]
    fn abelianization_concatenates() {
        let z9 = PcPresentation::elementary_abelian(3, 2)
            .unwrap()
            .with_power(0, &[(1, 1)])
            .unwrap();
        let es = PcPresentation::elementary_abelian(3, 3)
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap();
        let g = es.direct_product(&z9).unwrap();
        assert!(g.is_consistent());
        assert_eq!(g.abelianization().0.torsion, vec![3, 3, 9]);
        assert_eq!(g.nilpotency_class(), 2);
    }
}
