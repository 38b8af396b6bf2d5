use super::presentation::{is_prime, PcElement, PcPresentation, Relation};
use crate::error::{Error, Result};

/// Largest group accepted by [`pcp_from_multiplication`].
pub const TABLE_CAP: usize = 10_000;

/// Cayley table of a finite group on elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    order: usize,
    data: Vec<u32>,
    identity: usize,
}

impl MultiplicationTable {
    /// Validates shape, the Latin-square property and the existence of an
    /// identity. Associativity is checked separately by
    /// [`MultiplicationTable::check_associative`].
    pub fn new(order: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::ShapeMismatch {
                expected: order * order,
                found: data.len(),
            });
        }
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if data.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let mut seen = vec![0usize; order];
        for a in 0..order {
            for b in 0..order {
                let x = data[a * order + b] as usize;
                if seen[x] == a + 1 {
                    return Err(Error::InvalidTable(format!("row {a} repeats an entry")));
                }
                seen[x] = a + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for b in 0..order {
            for a in 0..order {
                let x = data[a * order + b] as usize;
                if seen[x] == b + 1 {
                    return Err(Error::InvalidTable(format!("column {b} repeats an entry")));
                }
                seen[x] = b + 1;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| data[e * order + a] as usize == a && data[a * order + e] as usize == a))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        Ok(MultiplicationTable { order, data, identity })
    }

    /// Table of a pc-presented group; element `i` is the `i`-th normal form in
    /// lexicographic order.
    pub fn from_pcp(pres: &PcPresentation, cap: usize) -> Result<Self> {
        let size = pres.order();
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                what: "multiplication table",
                size,
                cap: cap as u128,
            });
        }
        let elems: Vec<PcElement> = pres.elements().collect();
        let p = pres.p() as usize;
        let index = |x: &PcElement| x.exps().iter().fold(0usize, |acc, &e| acc * p + e as usize);
        let mut data = Vec::with_capacity(elems.len() * elems.len());
        for a in &elems {
            for b in &elems {
                data.push(index(&pres.multiply(a, b)) as u32);
            }
        }
        Self::new(elems.len(), data)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == self.identity).unwrap()
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Light's test on a generating set: `(x s) y = x (s y)` for all `x, y`
    /// and every generator `s` implies associativity.
    pub fn check_associative(&self) -> Result<()> {
        for s in self.generating_set() {
            for x in 0..self.order {
                let xs = self.mul(x, s);
                for y in 0..self.order {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return Err(Error::NotAssociative);
                    }
                }
            }
        }
        Ok(())
    }

    /// Greedy generating set: every element is a left-normed product
    /// `((e s1) s2) ...` of generators, which is what Light's test needs.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        let mut list = vec![self.identity];
        let mut gens = Vec::new();
        for g in 0..self.order {
            if reached[g] {
                continue;
            }
            gens.push(g);
            // old elements must be re-expanded with the new generator
            let mut frontier: Vec<usize> = list.clone();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !reached[y] {
                        reached[y] = true;
                        list.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }
}

/// Builds a pc presentation for the group of a multiplication table.
///
/// A central series with cyclic factors of order `p` is grown from the
/// bottom: at each step the smallest element `x` outside the current normal
/// subgroup `N` with `x^p` in `N` and `x N` central in `G/N` is adjoined. The
/// last element chosen becomes `g1`.
pub fn pcp_from_multiplication(table: &MultiplicationTable) -> Result<PcPresentation> {
    let order = table.order();
    if order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "multiplication table",
            size: order as u128,
            cap: TABLE_CAP as u128,
        });
    }
    let (p, n) = prime_power(order).ok_or(Error::NotPGroup(order))?;
    table.check_associative()?;
    let e = table.identity();
    let inv: Vec<usize> = (0..order).map(|a| table.inverse(a)).collect();
    let comm = |a: usize, b: usize| table.mul(table.mul(inv[a], inv[b]), table.mul(a, b));

    // layers[i] is the membership mask of the i-th subgroup in the chain
    let mut chosen: Vec<usize> = Vec::new();
    let mut layers: Vec<Vec<bool>> = vec![{
        let mut m = vec![false; order];
        m[e] = true;
        m
    }];
    while chosen.len() < n {
        let inn = layers.last().unwrap();
        let x = (0..order)
            .find(|&x| {
                !inn[x]
                    && inn[table.power(x, p as u64)]
                    && (0..order).all(|g| inn[comm(x, g)])
            })
            .ok_or_else(|| Error::InvalidTable("no central element of order p in a quotient".into()))?;
        let mut next = inn.clone();
        let mut xk = e;
        for _ in 1..p {
            xk = table.mul(xk, x);
            for y in 0..order {
                if inn[y] {
                    next[table.mul(xk, y)] = true;
                }
            }
        }
        chosen.push(x);
        layers.push(next);
    }
    // pc generators from the top of the chain down
    let gens: Vec<usize> = chosen.iter().rev().copied().collect();
    let pow: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let mut v = vec![e; p as usize];
            for k in 1..p as usize {
                v[k] = table.mul(v[k - 1], g);
            }
            v
        })
        .collect();
    let decompose = |mut y: usize| -> Vec<u32> {
        let mut exps = vec![0u32; n];
        for i in 0..n {
            // the subgroup below generator i in the chain
            let below = &layers[n - 1 - i];
            let k = (0..p as usize)
                .find(|&k| below[table.mul(inv[pow[i][k]], y)])
                .expect("element lies in the chain");
            exps[i] = k as u32;
            y = table.mul(inv[pow[i][k]], y);
        }
        debug_assert_eq!(y, e);
        exps
    };
    let mut pres = PcPresentation::elementary_abelian(p, n)?;
    for rel in Relation::all(n) {
        let value = match rel {
            Relation::Power(i) => table.power(gens[i], p as u64),
            Relation::Comm(j, i) => comm(gens[j], gens[i]),
        };
        pres.set_rhs(rel, PcElement(decompose(value)));
    }
    if !pres.is_consistent() {
        return Err(Error::Internal("rebuilt presentation is inconsistent".into()));
    }
    Ok(pres)
}

fn prime_power(order: usize) -> Option<(u32, usize)> {
    if order == 1 {
        return Some((2, 0));
    }
    let p = (2..=order).find(|d| order.is_multiple_of(*d))?;
    if !is_prime(p as u64) {
        return None;
    }
    let (mut m, mut n) = (order, 0);
    while m % p == 0 {
        m /= p;
        n += 1;
    }
    (m == 1).then_some((p as u32, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_table(m: usize) -> MultiplicationTable {
        let data = (0..m * m).map(|k| ((k / m + k % m) % m) as u32).collect();
        MultiplicationTable::new(m, data).unwrap()
    }

    fn dihedral_table(m: usize) -> MultiplicationTable {
        // (r^a s^b) with s r = r^-1 s; element index a + m b
        let n = 2 * m;
        let mut data = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x % m, x / m);
                let (a2, b2) = (y % m, y / m);
                let a = if b1 == 0 { a1 + a2 } else { a1 + m - a2 } % m;
                let b = (b1 + b2) % 2;
                data[x * n + y] = (a + m * b) as u32;
            }
        }
        MultiplicationTable::new(n, data).unwrap()
    }

    /// Checks the pcp against the table by building an explicit isomorphism.
    fn assert_isomorphic(t: &MultiplicationTable, g: &PcPresentation) {
        assert_eq!(g.order(), t.order() as u128);
        let gt = MultiplicationTable::from_pcp(g, 10_000).unwrap();
        let oa: Vec<usize> = {
            let mut v: Vec<usize> = (0..t.order()).map(|x| t.element_order(x)).collect();
            v.sort();
            v
        };
        let ob: Vec<usize> = {
            let mut v: Vec<usize> = (0..gt.order()).map(|x| gt.element_order(x)).collect();
            v.sort();
            v
        };
        assert_eq!(oa, ob);
    }

    #[test]
    fn cyclic_four() {
        let g = pcp_from_multiplication(&cyclic_table(4)).unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(g.ngens(), 2);
        assert_eq!(g.power_rhs(0), &g.generator(1));
        assert!(g.power_rhs(1).is_identity());
        assert_isomorphic(&cyclic_table(4), &g);
    }

    #[test]
    fn klein_four() {
        let mut data = vec![0u32; 16];
        for a in 0..4 {
            for b in 0..4 {
                data[a * 4 + b] = (a ^ b) as u32;
            }
        }
        let t = MultiplicationTable::new(4, data).unwrap();
        let g = pcp_from_multiplication(&t).unwrap();
        assert!(g.is_elementary_abelian_presentation());
        assert_eq!(g.ngens(), 2);
    }

    #[test]
    fn dihedral_eight() {
        let t = dihedral_table(4);
        let g = pcp_from_multiplication(&t).unwrap();
        assert_eq!(g.ngens(), 3);
        assert_eq!(g.nilpotency_class(), 2);
        assert_eq!(g.center().len(), 1);
        assert_isomorphic(&t, &g);
    }

    #[test]
    fn rejects_non_p_groups_and_bad_tables() {
        assert_eq!(
            pcp_from_multiplication(&cyclic_table(6)),
            Err(Error::NotPGroup(6))
        );
        assert!(MultiplicationTable::new(2, vec![0, 1, 1, 1]).is_err());
        assert!(MultiplicationTable::new(2, vec![0, 1, 1]).is_err());
    }

    #[test]
    fn nonassociative_loop_is_rejected() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let data = rows.iter().flatten().map(|&x| x as u32).collect();
        let t = MultiplicationTable::new(5, data).unwrap();
        assert_eq!(t.check_associative(), Err(Error::NotAssociative));
    }

    #[test]
    fn table_round_trip_of_pcp() {
        let es = PcPresentation::elementary_abelian(3, 3)
            .unwrap()
            .with_comm(1, 0, &[(2, 1)])
            .unwrap();
        let t = MultiplicationTable::from_pcp(&es, 100).unwrap();
        t.check_associative().unwrap();
        let back = pcp_from_multiplication(&t).unwrap();
        assert_eq!(back.nilpotency_class(), 2);
        assert_eq!(back.center().len(), 1);
        assert_isomorphic(&t, &back);
        assert!(MultiplicationTable::from_pcp(&es, 20).is_err());
    }
}
