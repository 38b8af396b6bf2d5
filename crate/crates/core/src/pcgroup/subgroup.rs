use serde::Serialize;

use super::presentation::{PcElement, PcPresentation};

/// Echelonized generating sequence of a subgroup: members have strictly
/// increasing leading indices and leading exponent 1, and every element of the
/// subgroup is uniquely `m1^e1 ... mk^ek` with `0 <= ei < p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubgroupBasis {
    members: Vec<PcElement>,
}

impl SubgroupBasis {
    pub fn trivial() -> Self {
        SubgroupBasis { members: vec![] }
    }

    pub fn whole(pres: &PcPresentation) -> Self {
        SubgroupBasis {
            members: pres.generators(),
        }
    }

    pub fn members(&self) -> &[PcElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `log_p` of the subgroup order.
    pub fn order_exponent(&self) -> usize {
        self.members.len()
    }

    pub fn leading_indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.leading().unwrap()).collect()
    }

    fn at_leading(&self, l: usize) -> Option<&PcElement> {
        self.members
            .binary_search_by_key(&l, |m| m.leading().unwrap())
            .ok()
            .map(|k| &self.members[k])
    }

    /// Divides `x` on the left by members until its leading index is not a
    /// leading index of the basis; returns the remainder and the exponents
    /// used, in member order.
    pub fn sift_with_exponents(&self, pres: &PcPresentation, x: &PcElement) -> (PcElement, Vec<u32>) {
        let p = pres.p();
        let mut x = x.clone();
        let mut used = vec![0; self.members.len()];
        while let Some(l) = x.leading() {
            let Ok(k) = self
                .members
                .binary_search_by_key(&l, |m| m.leading().unwrap())
            else {
                break;
            };
            let e = x.0[l];
            used[k] = e;
            let b = pres.power(&self.members[k], (p - e) as i64);
            x = pres.multiply(&b, &x);
        }
        (x, used)
    }

    pub fn sift(&self, pres: &PcPresentation, x: &PcElement) -> PcElement {
        self.sift_with_exponents(pres, x).0
    }

    pub fn contains(&self, pres: &PcPresentation, x: &PcElement) -> bool {
        self.sift(pres, x).is_identity()
    }

    pub fn contains_subgroup(&self, pres: &PcPresentation, other: &SubgroupBasis) -> bool {
        other.members.iter().all(|m| self.contains(pres, m))
    }

    /// Canonical representative of the coset `x N` (this basis must span a
    /// normal subgroup `N`): the unique element of the coset whose exponents
    /// vanish at every leading index of the basis.
    pub fn coset_rep(&self, pres: &PcPresentation, x: &PcElement) -> PcElement {
        let p = pres.p();
        let mut x = x.clone();
        for b in &self.members {
            let l = b.leading().unwrap();
            let e = x.0[l];
            if e != 0 {
                x = pres.multiply(&x, &pres.power(b, (p - e) as i64));
            }
        }
        x
    }

    /// Inserts `x` if it is not already in the span; returns the normalized
    /// new member.
    fn insert(&mut self, pres: &PcPresentation, x: &PcElement) -> Option<PcElement> {
        let r = self.sift(pres, x);
        let l = r.leading()?;
        let inv = mod_inverse(r.0[l], pres.p());
        let r = pres.power(&r, inv as i64);
        debug_assert_eq!(r.0[l], 1);
        let pos = self
            .members
            .partition_point(|m| m.leading().unwrap() < l);
        self.members.insert(pos, r.clone());
        Some(r)
    }

    fn close(&mut self, pres: &PcPresentation, mut queue: Vec<PcElement>, normal: bool) {
        let gens = pres.generators();
        while let Some(x) = queue.pop() {
            let Some(r) = self.insert(pres, &x) else { continue };
            queue.push(pres.power(&r, pres.p() as i64));
            for m in &self.members {
                if *m != r {
                    queue.push(pres.commutator(&r, m));
                }
            }
            if normal {
                for g in &gens {
                    queue.push(pres.commutator(&r, g));
                }
            }
        }
    }

    /// Subgroup generated by `gens`.
    pub fn generated_by(pres: &PcPresentation, gens: &[PcElement]) -> Self {
        let mut b = SubgroupBasis::trivial();
        b.close(pres, gens.to_vec(), false);
        b
    }

    /// Whether every member commutes with every generator of the group.
    pub fn is_central(&self, pres: &PcPresentation) -> bool {
        let gens = pres.generators();
        self.members
            .iter()
            .all(|m| gens.iter().all(|g| pres.commutator(m, g).is_identity()))
    }

    pub fn is_normal(&self, pres: &PcPresentation) -> bool {
        let gens = pres.generators();
        self.members
            .iter()
            .all(|m| gens.iter().all(|g| self.contains(pres, &pres.commutator(m, g))))
    }

    pub fn is_abelian(&self, pres: &PcPresentation) -> bool {
        self.members.iter().enumerate().all(|(a, x)| {
            self.members[a + 1..]
                .iter()
                .all(|y| pres.commutator(x, y).is_identity())
        })
    }

    /// Abelian with every member of order dividing `p`.
    pub fn is_elementary_abelian(&self, pres: &PcPresentation) -> bool {
        self.is_abelian(pres)
            && self
                .members
                .iter()
                .all(|m| pres.power(m, pres.p() as i64).is_identity())
    }

    /// Every element of the subgroup, in normal-product order.
    pub fn elements(&self, pres: &PcPresentation) -> Vec<PcElement> {
        let mut out = vec![pres.identity()];
        for m in self.members.iter().rev() {
            let powers: Vec<PcElement> = (0..pres.p() as i64).map(|e| pres.power(m, e)).collect();
            out = powers
                .iter()
                .flat_map(|pw| out.iter().map(move |x| (pw, x)))
                .map(|(pw, x)| pres.multiply(pw, x))
                .collect();
        }
        out
    }

    pub fn member_at(&self, l: usize) -> Option<&PcElement> {
        self.at_leading(l)
    }
}

pub(crate) fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl PcPresentation {
    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[PcElement]) -> SubgroupBasis {
        let mut b = SubgroupBasis::trivial();
        b.close(self, gens.to_vec(), true);
        b
    }

    /// Normal closure of the pairwise generator commutators.
    pub fn derived_subgroup(&self) -> SubgroupBasis {
        let mut gens = Vec::new();
        for j in 0..self.ngens() {
            for i in 0..j {
                gens.push(self.commutator(&self.generator(j), &self.generator(i)));
            }
        }
        self.normal_closure(&gens)
    }

    /// `[A, G]` for a normal subgroup `A`.
    pub fn commutator_with_group(&self, a: &SubgroupBasis) -> SubgroupBasis {
        let mut gens = Vec::new();
        for m in a.members() {
            for g in self.generators() {
                gens.push(self.commutator(m, &g));
            }
        }
        self.normal_closure(&gens)
    }

    /// Frattini subgroup `G' G^p`.
    pub fn frattini_subgroup(&self) -> SubgroupBasis {
        let mut gens: Vec<PcElement> = self.derived_subgroup().members().to_vec();
        for g in self.generators() {
            gens.push(self.power(&g, self.p() as i64));
        }
        self.normal_closure(&gens)
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
    fn closure_of_nothing_is_trivial() {
        let g = heisenberg(3);
        assert!(g.normal_closure(&[]).is_empty());
    }

    #[test]
    fn closure_of_all_generators_is_everything() {
        let g = heisenberg(5);
        assert_eq!(g.normal_closure(&g.generators()).len(), 3);
    }

    #[test]
    fn normal_closure_of_a_noncentral_element() {
        let g = heisenberg(3);
        // <g2> is not normal; its closure picks up [g2, g1] = g3
        let n = g.normal_closure(&[g.generator(1)]);
        assert_eq!(n.len(), 2);
        assert!(n.contains(&g, &g.generator(2)));
        assert!(n.is_normal(&g));
        let h = SubgroupBasis::generated_by(&g, &[g.generator(1)]);
        assert_eq!(h.len(), 1);
        assert!(!h.is_normal(&g));
    }

    #[test]
    fn coset_representatives_are_canonical() {
        let g = heisenberg(3);
        let z = g.normal_closure(&[g.generator(2)]);
        for x in g.elements() {
            let r = z.coset_rep(&g, &x);
            assert_eq!(r.exps()[2], 0);
            let diff = g.multiply(&g.inverse(&x), &r);
            assert!(z.contains(&g, &diff));
        }
    }

    #[test]
    fn subgroup_elements_enumerate_exactly() {
        let g = heisenberg(3);
        let d = g.derived_subgroup();
        assert_eq!(d.elements(&g).len(), 3);
        let all = SubgroupBasis::whole(&g).elements(&g);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 27);
    }

    #[test]
    fn inverses_mod_p() {
        for p in [2u32, 3, 5, 7, 17] {
            for a in 1..p {
                assert_eq!(a * mod_inverse(a, p) % p, 1);
            }
        }
    }
}
