//! Collection to normal form.
//!
//! Strategy: the collected prefix is an exponent vector and the uncollected
//! rest is a stack of syllables `(g, e)`, `0 < e < p`. Multiplying the prefix
//! `u * t` (with `t` supported on generators after `g`) by `g` is rewritten as
//! `u g * t^g`, where `t^g` is pushed back on the stack letter by letter using
//! `g_k^g = g_k [g_k, g]`. Overflowing exponents apply the power relation.
//! The procedure is deterministic, so normal forms and recorded relation
//! counts are reproducible.

use super::presentation::{PcElement, PcPresentation, Relation};
use crate::error::Result;

/// Receives one event per application of a defining relation. Used to track
/// central tails; the unit type ignores everything.
pub(crate) trait TailSink: Clone {
    fn record(&mut self, rel: Relation, times: i64);
    fn absorb(&mut self, other: &Self, sign: i64);
    fn zeroed(&self) -> Self;
}

impl TailSink for () {
    #[inline]
    fn record(&mut self, _: Relation, _: i64) {}
    #[inline]
    fn absorb(&mut self, _: &Self, _: i64) {}
    #[inline]
    fn zeroed(&self) -> Self {}
}

pub(crate) struct Collector<'a> {
    pres: &'a PcPresentation,
}

impl<'a> Collector<'a> {
    pub(crate) fn new(pres: &'a PcPresentation) -> Self {
        Collector { pres }
    }

    fn push_rev(stack: &mut Vec<(usize, u32)>, w: &PcElement) {
        for (i, &e) in w.0.iter().enumerate().rev() {
            if e != 0 {
                stack.push((i, e));
            }
        }
    }

    /// Multiplies `exps` on the right by the syllables on `stack` (top first).
    pub(crate) fn run<S: TailSink>(
        &self,
        exps: &mut [u32],
        stack: &mut Vec<(usize, u32)>,
        sink: &mut S,
    ) {
        let p = self.pres.p();
        let n = self.pres.ngens();
        let mut conj: Vec<(usize, u32)> = Vec::new();
        while let Some((g, e)) = stack.pop() {
            debug_assert!(e > 0 && e < p);
            if exps[g + 1..].iter().all(|&x| x == 0) {
                let s = exps[g] + e;
                if s >= p {
                    exps[g] = s - p;
                    sink.record(Relation::Power(g), 1);
                    Self::push_rev(stack, self.pres.power_rhs(g));
                } else {
                    exps[g] = s;
                }
                continue;
            }

            if e > 1 {
                stack.push((g, e - 1));
            }
            conj.clear();
            for k in g + 1..n {
                let c = exps[k];
                if c == 0 {
                    continue;
                }
                exps[k] = 0;
                let w = self.pres.comm_rhs(k, g);
                // a trivial value still carries a tail in a central extension
                sink.record(Relation::Comm(k, g), c as i64);
                if w.is_identity() {
                    conj.push((k, c));
                } else {
                    for _ in 0..c {
                        conj.push((k, 1));
                        conj.extend(w.syllables());
                    }
                }
            }
            stack.extend(conj.iter().rev().copied());
            let s = exps[g] + 1;
            if s == p {
                exps[g] = 0;
                sink.record(Relation::Power(g), 1);
                Self::push_rev(stack, self.pres.power_rhs(g));
            } else {
                exps[g] = s;
            }
        }
    }

    /// `exps *= w` for a normal word `w`.
    pub(crate) fn mul_normal<S: TailSink>(&self, exps: &mut [u32], w: &[u32], sink: &mut S) {
        let mut stack = Vec::new();
        for (i, &e) in w.iter().enumerate().rev() {
            if e != 0 {
                stack.push((i, e));
            }
        }
        self.run(exps, &mut stack, sink);
    }

    pub(crate) fn mul_syllable<S: TailSink>(&self, exps: &mut [u32], g: usize, e: u32, sink: &mut S) {
        let p = self.pres.p();
        let mut left = e;
        let mut stack = Vec::new();
        while left > 0 {
            let chunk = left.min(p - 1);
            stack.push((g, chunk));
            self.run(exps, &mut stack, sink);
            left -= chunk;
        }
    }

    /// Inverse of `(exps, tails)`: returns `x` and the tails of `x` so that
    /// the product with the input is the identity with zero tails.
    pub(crate) fn inverse<S: TailSink>(&self, exps: &[u32], tails: &S) -> (Vec<u32>, S) {
        let p = self.pres.p();
        let mut r = exps.to_vec();
        let mut acc = tails.clone();
        let mut x = vec![0; exps.len()];
        for i in 0..exps.len() {
            let f = (p - r[i]) % p;
            if f != 0 {
                x[i] = f;
                self.mul_syllable(&mut r, i, f, &mut acc);
            }
        }
        debug_assert!(r.iter().all(|&e| e == 0));
        let mut neg = acc.zeroed();
        neg.absorb(&acc, -1);
        (x, neg)
    }

    /// Collects an arbitrary word with signed exponents.
    pub(crate) fn word<S: TailSink>(&self, word: &[(usize, i64)], zero: &S) -> (Vec<u32>, S) {
        let n = self.pres.ngens();
        let p = self.pres.p() as i64;
        let mut r = vec![0; n];
        let mut t = zero.clone();
        let mut inv_cache: Vec<Option<(Vec<u32>, S)>> = vec![None; n];
        for &(g, e) in word {
            if e > 0 {
                let mut left = e;
                while left > 0 {
                    let chunk = left.min(p - 1);
                    self.mul_syllable(&mut r, g, chunk as u32, &mut t);
                    left -= chunk;
                }
            } else if e < 0 {
                let (xi, ti) = inv_cache[g]
                    .get_or_insert_with(|| {
                        let mut unit = vec![0; n];
                        unit[g] = 1;
                        self.inverse(&unit, &zero.zeroed())
                    })
                    .clone();
                for _ in 0..(-e) {
                    t.absorb(&ti, 1);
                    self.mul_normal(&mut r, &xi, &mut t);
                }
            }
        }
        (r, t)
    }
}

impl PcPresentation {
    /// Normal form of a word given as `(generator, exponent)` pairs with
    /// 0-based generator indices and arbitrary integer exponents.
    pub fn collect(&self, word: &[(usize, i64)]) -> Result<PcElement> {
        for &(g, _) in word {
            self.check_index(g)?;
        }
        Ok(PcElement(Collector::new(self).word(word, &()).0))
    }

    pub fn multiply(&self, a: &PcElement, b: &PcElement) -> PcElement {
        let mut r = a.0.clone();
        Collector::new(self).mul_normal(&mut r, &b.0, &mut ());
        PcElement(r)
    }

    pub fn inverse(&self, a: &PcElement) -> PcElement {
        PcElement(Collector::new(self).inverse(&a.0, &()).0)
    }

    pub fn power(&self, a: &PcElement, k: i64) -> PcElement {
        let base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.multiply(&sq, &sq);
            }
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: &PcElement, b: &PcElement) -> PcElement {
        let ba = self.multiply(b, a);
        let ab = self.multiply(a, b);
        self.multiply(&self.inverse(&ba), &ab)
    }

    /// `b^-1 a b`.
    pub fn conjugate(&self, a: &PcElement, b: &PcElement) -> PcElement {
        self.multiply(&self.inverse(b), &self.multiply(a, b))
    }

    /// `log_p` of the order of `a`.
    pub fn element_order_exponent(&self, a: &PcElement) -> u32 {
        let mut x = a.clone();
        let mut k = 0;
        while !x.is_identity() {
            x = self.power(&x, self.p() as i64);
            k += 1;
        }
        k
    }

    /// All `p^n` normal forms in lexicographic order of exponent vectors.
    pub fn elements(&self) -> impl Iterator<Item = PcElement> + '_ {
        let n = self.ngens();
        let p = self.p();
        let total = (p as u128).pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut e = vec![0; n];
            for slot in e.iter_mut().rev() {
                *slot = (idx % p as u128) as u32;
                idx /= p as u128;
            }
            PcElement(e)
        })
    }

    /// `p^n` as a u128, saturating.
    pub fn order(&self) -> u128 {
        (self.p() as u128).saturating_pow(self.ngens() as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn extraspecial(p: u32) -> PcPresentation {
        PcPresentation::elementary_abelian(p, 3)
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap()
    }

    #[test]
    fn one_commutator_rewrite() {
        let g = extraspecial(5);
        assert_eq!(g.collect(&[(1, 1), (0, 1)]).unwrap().exps(), &[1, 1, 1]);
    }

    #[test]
    fn power_relation_applies() {
        // Z_25 as g1^5 = g2
        let z = PcPresentation::elementary_abelian(5, 2)
            .unwrap()
            .with_power(0, &[(1, 1)])
            .unwrap();
        assert_eq!(z.collect(&[(0, 5)]).unwrap(), *z.power_rhs(0));
        assert_eq!(z.collect(&[(0, 25)]).unwrap(), z.identity());
    }

    #[test]
    fn normal_words_are_fixed_points() {
        let g = extraspecial(3);
        for x in g.elements() {
            let w: Vec<(usize, i64)> = x.syllables().map(|(i, e)| (i, e as i64)).collect();
            assert_eq!(g.collect(&w).unwrap(), x);
        }
    }

    #[test]
    fn inverse_and_commutator() {
        let g = extraspecial(7);
        for a in g.elements().step_by(17) {
            assert!(g.multiply(&a, &g.inverse(&a)).is_identity());
            assert!(g.commutator(&a, &a).is_identity());
            assert_eq!(g.multiply(&a, &g.identity()), a);
        }
        let c = g.commutator(&g.generator(1), &g.generator(0));
        assert_eq!(c, g.generator(2));
        // [g1, g2] = [g2, g1]^-1
        assert_eq!(
            g.collect(&[(0, -1), (1, -1), (0, 1), (1, 1)]).unwrap(),
            PcElement::from_exps(vec![0, 0, 6])
        );
    }

    #[test]
    fn rejects_out_of_range_generator() {
        let g = extraspecial(3);
        assert!(g.collect(&[(3, 1)]).is_err());
    }

    #[test]
    fn trivial_group() {
        let t = PcPresentation::trivial(2).unwrap();
        assert_eq!(t.elements().count(), 1);
        assert!(t.collect(&[]).unwrap().is_identity());
    }
}
