//! Linear algebra over the prime field `F_p` on `u32` residues.

use crate::pcgroup::mod_inverse;

/// Row-echelon basis of a subspace of `F_p^dim`, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    p: u32,
    dim: usize,
    // (pivot column, row normalized to pivot 1)
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(p: u32, dim: usize) -> Self {
        Echelon { p, dim, rows: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut v = v.to_vec();
        for (c, r) in &self.rows {
            let f = v[*c] as u64;
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = ((*x as u64 + (p - f) * y as u64) % p) as u32;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = mod_inverse(v[c], self.p) as u64;
        for x in v.iter_mut() {
            *x = (*x as u64 * inv % self.p as u64) as u32;
        }
        // keep earlier rows reduced at the new pivot
        let p = self.p as u64;
        for (_, r) in self.rows.iter_mut() {
            let f = r[c] as u64;
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(&v) {
                    *x = ((*x as u64 + (p - f) * y as u64) % p) as u32;
                }
            }
        }
        self.rows.push((c, v));
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Reduced basis ordered by pivot column; distinct pivots, each 1.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(c, _)| *c);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Basis of `{c : sum_i c_i rows[i] = 0}` over `F_p`, in reduced echelon
/// form.
pub fn nullspace_mod_p(p: u32, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let r = rows.len();
    let cols = rows.first().map_or(0, |v| v.len());
    let pp = p as u64;
    // [A | I], eliminated on the A block only
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<u64> = row.iter().map(|&x| x as u64 % pp).collect();
            v.extend((0..r).map(|j| (i == j) as u64));
            v
        })
        .collect();
    let mut top = 0;
    for col in 0..cols {
        let Some(piv) = (top..r).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(top, piv);
        let inv = mod_inverse(a[top][col] as u32, p) as u64;
        for x in a[top].iter_mut() {
            *x = *x * inv % pp;
        }
        let pivot_row = a[top].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != top && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (pp - f) * y) % pp;
                }
            }
        }
        top += 1;
    }
    let mut e = Echelon::new(p, r);
    for row in &a[top..] {
        let v: Vec<u32> = row[cols..].iter().map(|&x| x as u32).collect();
        e.insert(&v);
    }
    e.basis()
}

/// Rank over `F_p` of a list of vectors of length `dim`.
pub fn rank_mod_p<'a>(p: u32, dim: usize, vectors: impl IntoIterator<Item = &'a [u32]>) -> usize {
    let mut e = Echelon::new(p, dim);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Inverse of a square matrix over `F_p`, `None` if singular.
pub fn inverse_mod_p(p: u32, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let pp = p as u64;
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&x| x as u64 % pp).collect();
            r.extend((0..n).map(|j| (i == j) as u64));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = mod_inverse(a[col][col] as u32, p) as u64;
        for x in a[col].iter_mut() {
            *x = *x * inv % pp;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = (*x + (pp - f) * y) % pp;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].iter().map(|&x| x as u32).collect()).collect())
}

/// Row vector times matrix over `F_p`.
pub fn vec_mat_mod_p(p: u32, v: &[u32], m: &[Vec<u32>]) -> Vec<u32> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| {
            (v.iter().zip(m).map(|(&a, row)| a as u64 * row[j] as u64).sum::<u64>() % p as u64) as u32
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1], vec![1, 3, 1]];
        let k = nullspace_mod_p(5, &rows);
        assert_eq!(k.len(), 2);
        for c in &k {
            assert_eq!(vec_mat_mod_p(5, c, &rows), vec![0, 0, 0]);
        }
        assert!(nullspace_mod_p(3, &[vec![1, 0], vec![0, 1]]).is_empty());
        assert_eq!(nullspace_mod_p(3, &[vec![0, 0]]), vec![vec![1]]);
    }

    #[test]
    fn echelon_rank() {
        let vs: Vec<Vec<u32>> = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1], vec![1, 3, 1]];
        assert_eq!(rank_mod_p(5, 3, vs.iter().map(|v| v.as_slice())), 2);
        assert_eq!(rank_mod_p(2, 3, vs.iter().map(|v| v.as_slice())), 2);
        let mut e = Echelon::new(5, 3);
        e.insert(&vs[0]);
        assert!(e.contains(&vs[1]));
        assert!(!e.contains(&vs[2]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![1, 2], vec![3, 4]];
        let inv = inverse_mod_p(7, &m).unwrap();
        for (i, row) in m.iter().enumerate() {
            let prod = vec_mat_mod_p(7, row, &inv);
            let want: Vec<u32> = (0..2).map(|j| (i == j) as u32).collect();
            assert_eq!(prod, want);
        }
        assert!(inverse_mod_p(2, &m).is_none());
    }
}
