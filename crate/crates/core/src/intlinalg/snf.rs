use super::matrix::{IntScalar, Matrix};

/// Invariant-factor diagonal of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// Nonzero invariant factors, positive, each dividing the next.
    pub diag: Vec<T>,
    pub rank: usize,
}

/// Smith normal form by elimination with the smallest-magnitude pivot.
///
/// Only the diagonal is returned; the transforming matrices are never needed
/// downstream.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithForm<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    let mut t = 0;

    while t < rows && t < cols {
        let Some((pr, pc)) = smallest_nonzero(&a, t, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(a.get(t, t));
                    a.sub_row_multiple(i, t, &q, t);
                    if !a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(a.get(t, t));
                    a.sub_col_multiple(j, t, &q, t);
                    if !a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // a remainder smaller than the pivot survives in row or column t
                let (pr, pc) = smallest_in_cross(&a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                continue;
            }
            // the pivot must divide the rest of the block
            let pivot = a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot))
            });
            match bad {
                Some(i) => a.add_row(t, i, t),
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
        }
        diag.push(a.get(t, t).clone());
        t += 1;
    }

    let rank = diag.len();
    SmithForm { diag, rank }
}

fn smallest_nonzero<T: IntScalar>(a: &Matrix<T>, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for r in r0..a.rows() {
        for c in c0..a.cols() {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                let unit = mag.is_one();
                best = Some((r, c, mag));
                if unit {
                    let (r, c, _) = best.unwrap();
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn smallest_in_cross<T: IntScalar>(a: &Matrix<T>, t: usize) -> (usize, usize) {
    let mut best = (t, t, a.get(t, t).abs());
    let mut consider = |r: usize, c: usize| {
        let v = a.get(r, c);
        if !v.is_zero() && (best.2.is_zero() || v.abs() < best.2) {
            best = (r, c, v.abs());
        }
    };
    for i in t + 1..a.rows() {
        consider(i, t);
    }
    for j in t + 1..a.cols() {
        consider(t, j);
    }
    (best.0, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_by_two() {
        let s = smith_normal_form(&big(vec![vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn identity_and_zero() {
        let s = smith_normal_form(&Matrix::<BigInt>::identity(3));
        assert_eq!(s.diag, vec![BigInt::from(1); 3]);
        let z = smith_normal_form(&Matrix::<BigInt>::zeros(2, 3));
        assert!(z.diag.is_empty());
        assert_eq!(z.rank, 0);
        let e = smith_normal_form(&Matrix::<BigInt>::zeros(0, 0));
        assert!(e.diag.is_empty());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in Smith form; the answer is diag(1, 6)
        let s = smith_normal_form(&big(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn works_over_machine_integers() {
        let m = Matrix::<i64>::from_rows(3, vec![vec![4, 6, 0], vec![0, 0, 10], vec![2, 2, 2]]).unwrap();
        let s = smith_normal_form(&m);
        // |det| = 4*(0-20) - 6*(0-20) + 0 = 40, gcd of entries 2
        assert_eq!(s.diag.iter().product::<i64>(), 40);
        assert_eq!(s.diag[0], 2);
        for w in s.diag.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }
}
