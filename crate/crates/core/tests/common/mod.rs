//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use schur_core::bounds::abelian_tensor;
use schur_core::multiplier::schur_multiplier;
use schur_core::{catalog, PcPresentation};

/// Determinant by cofactor expansion; fine for the 4x4 matrices used here.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => {
            let mut acc = BigInt::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][c] * det(&minor);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero invariant factors from determinantal divisors: `s_k = d_k / d_(k-1)`
/// where `d_k` is the gcd of all `k x k` minors.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut d = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect())
                    .collect();
                d = d.gcd(&det(&sub));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push((&d / &prev).abs());
        prev = d;
    }
    out
}

/// Catalog groups small enough for exhaustive or random checks.
pub fn catalog_groups() -> Vec<(String, PcPresentation)> {
    let mut v: Vec<(String, PcPresentation)> = Vec::new();
    for p in [3, 5] {
        v.push((format!("es@{p}"), catalog::extraspecial(p).unwrap()));
        v.push((format!("g2@{p}"), catalog::g2(p).unwrap()));
        v.push((format!("g3@{p}"), catalog::g3(p).unwrap()));
        for n in 3..=5 {
            v.push((format!("g1@{p},n={n}"), catalog::g1(p, n).unwrap()));
        }
    }
    for p in [5, 7] {
        v.push((format!("example1@{p}"), catalog::example1(p).unwrap()));
        v.push((format!("example2@{p}"), catalog::example2(p).unwrap()));
    }
    v.push(("h37".into(), catalog::h37().unwrap()));
    v.push(("d8".into(), catalog::d8().unwrap()));
    v.push(("q8".into(), catalog::q8().unwrap()));
    v.push(("cyclic@2,n=3".into(), catalog::cyclic(2, 3).unwrap()));
    v.push(("cyclic@3,n=2".into(), catalog::cyclic(3, 2).unwrap()));
    v.push(("elemab@2,rank=3".into(), PcPresentation::elementary_abelian(2, 3).unwrap()));
    v
}

/// Pairs of same-prime catalog groups whose product stays small.
pub fn catalog_pairs() -> Vec<(String, PcPresentation, PcPresentation)> {
    let two = [
        ("d8", catalog::d8().unwrap()),
        ("q8", catalog::q8().unwrap()),
        ("z4", catalog::cyclic(2, 2).unwrap()),
        ("z2^2", PcPresentation::elementary_abelian(2, 2).unwrap()),
    ];
    let three = [
        ("es@3", catalog::extraspecial(3).unwrap()),
        ("z9", catalog::cyclic(3, 2).unwrap()),
        ("z3", PcPresentation::elementary_abelian(3, 1).unwrap()),
    ];
    let mut out = Vec::new();
    for set in [&two[..], &three[..]] {
        for (i, (na, a)) in set.iter().enumerate() {
            for (nb, b) in &set[i..] {
                out.push((format!("{na} x {nb}"), a.clone(), b.clone()));
            }
        }
    }
    out.push(("example1@5 x z5".into(), catalog::example1(5).unwrap(), catalog::cyclic(5, 1).unwrap()));
    out
}

/// `(log|M(A x B)|, log|M(A)| + log|M(B)| + log|A^ab (x) B^ab|)`.
pub fn kunneth_sides(a: &PcPresentation, b: &PcPresentation) -> (u32, u32) {
    let p = a.p();
    let ab = a.direct_product(b).unwrap();
    let m = |g: &PcPresentation| schur_multiplier(g).unwrap().order_exponent(p);
    let t = abelian_tensor(&a.abelianization().0, &b.abelianization().0).unwrap();
    (m(&ab), m(a) + m(b) + t.order_exponent(p as u64).unwrap())
}
