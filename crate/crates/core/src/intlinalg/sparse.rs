//! Invariant factors of large, very sparse relation matrices.
//!
//! Unit pivots are eliminated first (each one splits off a `1` from the Smith
//! form); whatever survives is handed to the dense algorithm.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::hash::Hash;

use super::matrix::{IntScalar, Matrix};
use super::snf::{smith_normal_form, SmithForm};

pub type SparseRow<T> = Vec<(usize, T)>;

pub fn sparse_smith_form<T: IntScalar + Hash>(ncols: usize, rows: Vec<SparseRow<T>>) -> SmithForm<T> {
    let mut rows: Vec<Option<SparseRow<T>>> = rows
        .into_iter()
        .map(|r| {
            let r = normalize(r);
            (!r.is_empty()).then_some(r)
        })
        .collect();
    let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        if let Some(r) = r {
            for (c, _) in r {
                col_rows[*c].insert(i);
            }
        }
    }
    let mut col_alive = vec![true; ncols];

    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = rows
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.as_ref().map(|r| Reverse((r.len(), i))))
        .collect();

    let mut units = 0usize;
    while let Some(Reverse((len, r))) = heap.pop() {
        let Some(row) = rows[r].as_ref() else { continue };
        if row.len() != len {
            continue;
        }
        let pivot = row
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(c, _)| col_rows[*c].len())
            .cloned();
        let Some((pc, pv)) = pivot else { continue };
        let prow = rows[r].take().unwrap();
        for (c, _) in &prow {
            col_rows[*c].remove(&r);
        }
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for s in others {
            let srow = rows[s].take().unwrap();
            let f = srow
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone() * pv.clone())
                .unwrap();
            let merged = axpy(&srow, &prow, &f);
            for (c, _) in &srow {
                col_rows[*c].remove(&s);
            }
            for (c, _) in &merged {
                col_rows[*c].insert(s);
            }
            if !merged.is_empty() {
                heap.push(Reverse((merged.len(), s)));
                rows[s] = Some(merged);
            }
        }
        col_alive[pc] = false;
        units += 1;
    }

    // dense remainder over the surviving columns
    let live_cols: Vec<usize> = (0..ncols)
        .filter(|&c| col_alive[c] && !col_rows[c].is_empty())
        .collect();
    let mut col_pos = vec![usize::MAX; ncols];
    for (k, &c) in live_cols.iter().enumerate() {
        col_pos[c] = k;
    }
    let mut seen = HashSet::new();
    let mut dense = Matrix::zeros(0, live_cols.len());
    for row in rows.into_iter().flatten() {
        if !seen.insert(row.clone()) {
            continue;
        }
        let mut d = vec![T::zero(); live_cols.len()];
        for (c, v) in row {
            d[col_pos[c]] = v;
        }
        dense.push_row(d).expect("row width");
    }
    let rest = smith_normal_form(&dense);
    let mut diag = vec![T::one(); units];
    diag.extend(rest.diag);
    let rank = diag.len();
    SmithForm { diag, rank }
}

fn normalize<T: IntScalar>(mut r: SparseRow<T>) -> SparseRow<T> {
    r.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow<T> = Vec::with_capacity(r.len());
    for (c, v) in r {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// a - f * b for sorted sparse rows.
fn axpy<T: IntScalar>(a: &SparseRow<T>, b: &SparseRow<T>, f: &T) -> SparseRow<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - f.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn dense_to_sparse(m: &Matrix<BigInt>) -> Vec<SparseRow<BigInt>> {
        (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn agrees_with_dense_on_fixed_matrix() {
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1, 2, 0, 3],
            vec![0, 3, 3, 0],
            vec![2, 4, 0, 6],
            vec![0, 0, 0, 9],
            vec![1, -1, 0, 0],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
        let m = Matrix::from_rows(4, rows).unwrap();
        assert_eq!(sparse_smith_form(4, dense_to_sparse(&m)), smith_normal_form(&m));
    }

    #[test]
    fn empty_input() {
        let s = sparse_smith_form::<BigInt>(5, vec![]);
        assert!(s.diag.is_empty());
    }
}
