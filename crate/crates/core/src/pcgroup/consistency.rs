use std::fmt;

use serde::Serialize;

use super::collect::{Collector, TailSink};
use super::presentation::{PcElement, PcPresentation};

/// The overlap words whose two collections must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Overlap {
    /// `(g_k g_j) g_i = g_k (g_j g_i)`, `k > j > i`.
    Triple { k: usize, j: usize, i: usize },
    /// `(g_j^(p-1) g_j) g_i = g_j^(p-1) (g_j g_i)`, `j > i`.
    PowerLeft { j: usize, i: usize },
    /// `(g_j g_i^(p-1)) g_i = g_j (g_i^(p-1) g_i)`, `j > i`.
    PowerRight { j: usize, i: usize },
    /// `(g_i g_i^(p-1)) g_i = g_i (g_i^(p-1) g_i)`.
    Power { i: usize },
}

impl Overlap {
    /// Overlap family label: `a`, `b` or `c`.
    pub fn family(&self) -> char {
        match self {
            Overlap::Triple { .. } => 'a',
            Overlap::PowerLeft { .. } | Overlap::PowerRight { .. } => 'b',
            Overlap::Power { .. } => 'c',
        }
    }

    /// Every overlap of a presentation on `n` generators, in a fixed order.
    pub fn all(n: usize) -> Vec<Overlap> {
        let mut out = Vec::new();
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    out.push(Overlap::Triple { k, j, i });
                }
            }
        }
        for j in 0..n {
            for i in 0..j {
                out.push(Overlap::PowerLeft { j, i });
                out.push(Overlap::PowerRight { j, i });
            }
        }
        for i in 0..n {
            out.push(Overlap::Power { i });
        }
        out
    }
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Overlap::Triple { k, j, i } => write!(f, "(a) g{} g{} g{}", k + 1, j + 1, i + 1),
            Overlap::PowerLeft { j, i } => write!(f, "(b) g{}^p g{}", j + 1, i + 1),
            Overlap::PowerRight { j, i } => write!(f, "(b) g{} g{}^p", j + 1, i + 1),
            Overlap::Power { i } => write!(f, "(c) g{}^(p+1)", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub overlap: Overlap,
    pub left: PcElement,
    pub right: PcElement,
}

impl Violation {
    /// Exponent-wise `right - left` mod `p`. Group arithmetic is not well
    /// defined over an inconsistent presentation, so this is computed on the
    /// vectors.
    pub fn discrepancy(&self, p: u32) -> PcElement {
        PcElement(
            self.left
                .0
                .iter()
                .zip(&self.right.0)
                .map(|(&l, &r)| (r + p - l) % p)
                .collect(),
        )
    }
}

/// Collects both sides of an overlap. The two sides are equal in the group
/// (and in any central extension tracked by `S`) as words; a difference in
/// the normal forms exposes an inconsistency.
pub(crate) fn evaluate_overlap<S: TailSink>(
    pres: &PcPresentation,
    ov: Overlap,
    zero: &S,
) -> ((Vec<u32>, S), (Vec<u32>, S)) {
    let c = Collector::new(pres);
    let n = pres.ngens();
    let p = pres.p();
    // (word1) * word2 where word1 is collected first
    let left_assoc = |first: &[(usize, u32)], then: &[(usize, u32)]| {
        let mut r = vec![0; n];
        let mut t = zero.clone();
        for &(g, e) in first {
            c.mul_syllable(&mut r, g, e, &mut t);
        }
        for &(g, e) in then {
            c.mul_syllable(&mut r, g, e, &mut t);
        }
        (r, t)
    };
    // word1 * (word2) where word2 is collected first
    let right_assoc = |first: &[(usize, u32)], then: &[(usize, u32)]| {
        let mut inner = vec![0; n];
        let mut ti = zero.clone();
        for &(g, e) in then {
            c.mul_syllable(&mut inner, g, e, &mut ti);
        }
        let mut r = vec![0; n];
        let mut t = zero.clone();
        for &(g, e) in first {
            c.mul_syllable(&mut r, g, e, &mut t);
        }
        t.absorb(&ti, 1);
        c.mul_normal(&mut r, &inner, &mut t);
        (r, t)
    };
    match ov {
        Overlap::Triple { k, j, i } => (
            left_assoc(&[(k, 1), (j, 1)], &[(i, 1)]),
            right_assoc(&[(k, 1)], &[(j, 1), (i, 1)]),
        ),
        Overlap::PowerLeft { j, i } => (
            left_assoc(&[(j, p - 1), (j, 1)], &[(i, 1)]),
            right_assoc(&[(j, p - 1)], &[(j, 1), (i, 1)]),
        ),
        Overlap::PowerRight { j, i } => (
            left_assoc(&[(j, 1), (i, p - 1)], &[(i, 1)]),
            right_assoc(&[(j, 1)], &[(i, p - 1), (i, 1)]),
        ),
        Overlap::Power { i } => (
            left_assoc(&[(i, 1), (i, p - 1)], &[(i, 1)]),
            right_assoc(&[(i, 1)], &[(i, p - 1), (i, 1)]),
        ),
    }
}

impl PcPresentation {
    /// All overlaps whose two collections differ. Empty exactly when the
    /// presentation defines a group of order `p^n`.
    pub fn check_consistency(&self) -> Vec<Violation> {
        Overlap::all(self.ngens())
            .into_iter()
            .filter_map(|ov| {
                let ((l, _), (r, _)) = evaluate_overlap(self, ov, &());
                (l != r).then_some(Violation {
                    overlap: ov,
                    left: PcElement(l),
                    right: PcElement(r),
                })
            })
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.check_consistency().is_empty()
    }
}
