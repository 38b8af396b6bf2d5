use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Normal-form exponent vector `g1^e1 ... gn^en` with every `ei` in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PcElement(pub(crate) Vec<u32>);

impl PcElement {
    pub fn identity(n: usize) -> Self {
        PcElement(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        PcElement(e)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        PcElement(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent.
    pub fn leading(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    /// Syllables `(generator, exponent)` with nonzero exponent, left to right.
    pub fn syllables(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
    }
}

impl fmt::Debug for PcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PcElement {
    /// `g1^2*g3^1`, 1-based; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables()
            .map(|(i, e)| format!("g{}^{}", i + 1, e))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// One defining relation of a pc presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// `g_i^p = ...`
    Power(usize),
    /// `[g_j, g_i] = ...` with `j > i`
    Comm(usize, usize),
}

impl Relation {
    /// Position of the relation in the canonical order: powers first, then
    /// commutators by `(j, i)`.
    pub fn index(self, n: usize) -> usize {
        match self {
            Relation::Power(i) => i,
            Relation::Comm(j, i) => n + j * (j - 1) / 2 + i,
        }
    }

    pub fn all(n: usize) -> impl Iterator<Item = Relation> {
        (0..n)
            .map(Relation::Power)
            .chain((1..n).flat_map(|j| (0..j).map(move |i| Relation::Comm(j, i))))
    }

    pub fn count(n: usize) -> usize {
        n + n * n.saturating_sub(1) / 2
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Power(i) => write!(f, "g{}^p", i + 1),
            Relation::Comm(j, i) => write!(f, "[g{},g{}]", j + 1, i + 1),
        }
    }
}

/// Power-commutator presentation of a finite p-group.
///
/// Generators are 0-based in the Rust API; every generator has relative
/// order `p`. `power[i]` is the normal form of `g_i^p` (supported on indices
/// `> i`) and `comm[j][i]` that of `[g_j, g_i] = g_j^-1 g_i^-1 g_j g_i` for
/// `j > i` (supported on indices `> j`). Presentations are immutable once
/// built.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PcPresentation {
    p: u32,
    n: usize,
    power: Vec<PcElement>,
    comm: Vec<Vec<PcElement>>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PcPresentation {
    /// Elementary abelian group of order `p^n`: every relation trivial.
    pub fn elementary_abelian(p: u32, n: usize) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PcPresentation {
            p,
            n,
            power: vec![PcElement::identity(n); n],
            comm: (0..n).map(|j| vec![PcElement::identity(n); j]).collect(),
        })
    }

    pub fn trivial(p: u32) -> Result<Self> {
        Self::elementary_abelian(p, 0)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ngens(&self) -> usize {
        self.n
    }

    /// `log_p |G|` assuming consistency.
    pub fn order_exponent(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> PcElement {
        PcElement::identity(self.n)
    }

    pub fn generator(&self, i: usize) -> PcElement {
        PcElement::generator(self.n, i)
    }

    pub fn generators(&self) -> Vec<PcElement> {
        (0..self.n).map(|i| self.generator(i)).collect()
    }

    pub fn power_rhs(&self, i: usize) -> &PcElement {
        &self.power[i]
    }

    pub fn comm_rhs(&self, j: usize, i: usize) -> &PcElement {
        debug_assert!(j > i);
        &self.comm[j][i]
    }

    pub fn rhs(&self, rel: Relation) -> &PcElement {
        match rel {
            Relation::Power(i) => &self.power[i],
            Relation::Comm(j, i) => &self.comm[j][i],
        }
    }

    /// Sets `g_i^p` to the normal word given as `(generator, exponent)` pairs.
    pub fn with_power(mut self, i: usize, word: &[(usize, u32)]) -> Result<Self> {
        self.check_index(i)?;
        self.power[i] = self.normal_word(word, i + 1)?;
        Ok(self)
    }

    /// Sets `[g_j, g_i]` for `j > i`.
    pub fn with_comm(mut self, j: usize, i: usize, word: &[(usize, u32)]) -> Result<Self> {
        self.check_index(j)?;
        if i >= j {
            return Err(Error::InvalidPresentation(format!(
                "commutator relation needs j > i, got [g{},g{}]",
                j + 1,
                i + 1
            )));
        }
        self.comm[j][i] = self.normal_word(word, j + 1)?;
        Ok(self)
    }

    pub(crate) fn set_rhs(&mut self, rel: Relation, value: PcElement) {
        match rel {
            Relation::Power(i) => self.power[i] = value,
            Relation::Comm(j, i) => self.comm[j][i] = value,
        }
    }

    /// Rejects anything that is not a normal word supported on `[min, n)`.
    fn normal_word(&self, word: &[(usize, u32)], min: usize) -> Result<PcElement> {
        let mut exps = vec![0; self.n];
        let mut last: Option<usize> = None;
        for &(g, e) in word {
            self.check_index(g)?;
            if g < min {
                return Err(Error::InvalidPresentation(format!(
                    "relation value uses g{} but must lie in generators after g{}",
                    g + 1,
                    min
                )));
            }
            if last.is_some_and(|l| g <= l) {
                return Err(Error::InvalidPresentation(
                    "relation value is not a normal word (indices must increase)".into(),
                ));
            }
            if e >= self.p {
                return Err(Error::InvalidPresentation(format!(
                    "exponent {e} of g{} not in [0, {})",
                    g + 1,
                    self.p
                )));
            }
            exps[g] = e;
            last = Some(g);
        }
        Ok(PcElement(exps))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            Err(Error::GeneratorOutOfRange {
                index: i + 1,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Whether every relation value is the identity.
    pub fn is_elementary_abelian_presentation(&self) -> bool {
        Relation::all(self.n).all(|r| self.rhs(r).is_identity())
    }

    /// Relations with nontrivial value, in canonical order.
    pub fn nontrivial_relations(&self) -> Vec<(Relation, &PcElement)> {
        Relation::all(self.n)
            .map(|r| (r, self.rhs(r)))
            .filter(|(_, v)| !v.is_identity())
            .collect()
    }
}

impl fmt::Debug for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::pcgroup::format::render_pcp(self))
    }
}
