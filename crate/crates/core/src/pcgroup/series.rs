use num_bigint::BigInt;

use super::presentation::{PcElement, PcPresentation};
use super::subgroup::SubgroupBasis;
use crate::error::{Error, Result};
use crate::intlinalg::modp::nullspace_mod_p;
use crate::intlinalg::{abelian_invariants, AbelianInvariants, Matrix};

impl PcPresentation {
    /// `gamma_1 = G, gamma_(i+1) = [gamma_i, G]`, ending with the trivial
    /// subgroup.
    pub fn lower_central_series(&self) -> Vec<SubgroupBasis> {
        let mut series = vec![SubgroupBasis::whole(self)];
        while !series.last().unwrap().is_empty() {
            let next = self.commutator_with_group(series.last().unwrap());
            series.push(next);
        }
        series
    }

    /// Nilpotency class; 0 for the trivial group.
    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    pub fn is_abelian(&self) -> bool {
        self.nilpotency_class() <= 1
    }

    /// Exact center, refined one layer of the pc series at a time.
    ///
    /// `H_t = {x : [x, g] in G_t for every g}` with `G_t = <g_t, ..., g_n>`.
    /// Each `G_t / G_(t+1)` is central, so on `H_t` the map sending `x` to
    /// the `t`-th exponent of `[x, g]` is a homomorphism to `F_p`, and
    /// `H_(t+1)` is the common kernel over all generators `g`. Then
    /// `H_n = Z(G)`.
    pub fn center(&self) -> SubgroupBasis {
        let n = self.ngens();
        let p = self.p();
        let gens = self.generators();
        let mut h = SubgroupBasis::whole(self);
        for t in 1..n {
            let images: Vec<Vec<u32>> = h
                .members()
                .iter()
                .map(|b| gens.iter().map(|g| self.commutator(b, g).0[t]).collect())
                .collect();
            if images.iter().all(|v| v.iter().all(|&x| x == 0)) {
                continue;
            }
            let kernel = nullspace_mod_p(p, &images);
            let members: Vec<PcElement> = kernel
                .iter()
                .map(|coeffs| {
                    coeffs
                        .iter()
                        .zip(h.members())
                        .filter(|(&c, _)| c != 0)
                        .fold(self.identity(), |acc, (&c, b)| self.multiply(&acc, &self.power(b, c as i64)))
                })
                .collect();
            h = SubgroupBasis::generated_by(self, &members);
        }
        h
    }

    /// Brute-force center over all `p^n` elements; test oracle.
    pub fn center_by_enumeration(&self) -> SubgroupBasis {
        let gens = self.generators();
        let central: Vec<PcElement> = self
            .elements()
            .filter(|z| gens.iter().all(|g| self.commutator(z, g).is_identity()))
            .collect();
        SubgroupBasis::generated_by(self, &central)
    }

    /// Invariants of `G/G'` from the exponent-relation matrix, together with
    /// `d(G)`, the minimal number of generators.
    pub fn abelianization(&self) -> (AbelianInvariants, usize) {
        let n = self.ngens();
        let p = self.p() as i64;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut r: Vec<BigInt> = self.power_rhs(i).exps().iter().map(|&e| -BigInt::from(e)).collect();
            r[i] += p;
            rows.push(r);
        }
        for j in 0..n {
            for i in 0..j {
                let w = self.comm_rhs(j, i);
                if !w.is_identity() {
                    rows.push(w.exps().iter().map(|&e| BigInt::from(e)).collect());
                }
            }
        }
        let m = Matrix::from_rows(n, rows).expect("rows have n columns");
        let inv = abelian_invariants(&m, n).expect("column count matches");
        let d = inv.torsion_rank();
        (inv, d)
    }

    /// Minimal number of generators, `dim G/Phi(G)`.
    pub fn rank(&self) -> usize {
        self.ngens() - self.frattini_subgroup().len()
    }

    /// Invariants of an abelian subgroup from its basis: each `m_i^p` is
    /// rewritten in the later members.
    pub fn subgroup_invariants(&self, sub: &SubgroupBasis) -> Result<AbelianInvariants> {
        if !sub.is_abelian(self) {
            return Err(Error::Precondition("subgroup is not abelian".into()));
        }
        let k = sub.len();
        let p = self.p() as i64;
        let mut rows = Vec::with_capacity(k);
        for (i, m) in sub.members().iter().enumerate() {
            let pw = self.power(m, p);
            let (rest, used) = sub.sift_with_exponents(self, &pw);
            if !rest.is_identity() {
                return Err(Error::Internal("basis is not closed under p-th powers".into()));
            }
            let mut r: Vec<BigInt> = used.iter().map(|&e| -BigInt::from(e)).collect();
            r[i] += p;
            rows.push(r);
        }
        abelian_invariants(&Matrix::from_rows(k, rows)?, k)
    }

    /// Order-`p` subgroups of the center: the points of the projective space
    /// of `Omega_1(Z(G))`.
    pub fn central_order_p_subgroups(&self) -> Result<Vec<SubgroupBasis>> {
        let z = self.center();
        let socle_gens: Vec<PcElement> = z
            .elements(self)
            .into_iter()
            .filter(|x| self.power(x, self.p() as i64).is_identity())
            .collect();
        let socle = SubgroupBasis::generated_by(self, &socle_gens);
        let s = socle.len();
        let p = self.p();
        let mut out = Vec::new();
        // vectors with a leading 1 in each position
        for lead in 0..s {
            let free = s - lead - 1;
            let count = (p as u128).pow(free as u32);
            for idx in 0..count {
                let mut x = socle.members()[lead].clone();
                let mut rest = idx;
                for t in (lead + 1..s).rev() {
                    let c = (rest % p as u128) as i64;
                    rest /= p as u128;
                    if c != 0 {
                        x = self.multiply(&x, &self.power(&socle.members()[t], c));
                    }
                }
                out.push(SubgroupBasis::generated_by(self, &[x]));
            }
        }
        Ok(out)
    }
}
