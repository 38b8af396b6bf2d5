use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::definitions::{with_definitions, DefinedPresentation};
use crate::error::{Error, Result};
use crate::intlinalg::{abelian_invariants, AbelianInvariants, Matrix};
use crate::pcgroup::{evaluate_overlap, Collector, Overlap, PcElement, PcPresentation, Relation, TailSink};

/// Which relations receive a tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TailMode {
    /// Every relation. The tail module is `M(G) + Z^n` for `n` pc generators.
    Full,
    /// Every relation except definitions. The tail module is
    /// `M(G) + Z^d(G)`.
    Definitions,
}

/// A pc presentation extended by one central, integer-valued tail per tailed
/// relation.
#[derive(Debug, Clone)]
pub struct TailedPresentation {
    base: PcPresentation,
    mode: TailMode,
    /// relation index -> tail column
    columns: Arc<[Option<usize>]>,
    ncols: usize,
    relations: Vec<Relation>,
}

/// Base normal form together with the tail exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailedElement {
    pub main: PcElement,
    pub tails: Vec<i64>,
}

#[derive(Clone)]
pub(crate) struct TailVec {
    columns: Arc<[Option<usize>]>,
    n: usize,
    v: Vec<i64>,
}

impl TailSink for TailVec {
    #[inline]
    fn record(&mut self, rel: Relation, times: i64) {
        if let Some(c) = self.columns[rel.index(self.n)] {
            self.v[c] += times;
        }
    }

    fn absorb(&mut self, other: &Self, sign: i64) {
        for (a, b) in self.v.iter_mut().zip(&other.v) {
            *a += sign * b;
        }
    }

    fn zeroed(&self) -> Self {
        TailVec {
            columns: self.columns.clone(),
            n: self.n,
            v: vec![0; self.v.len()],
        }
    }
}

impl TailedPresentation {
    /// Tails on every relation of `pres`.
    pub fn full(pres: &PcPresentation) -> Self {
        let n = pres.ngens();
        let relations: Vec<Relation> = Relation::all(n).collect();
        TailedPresentation {
            base: pres.clone(),
            mode: TailMode::Full,
            columns: (0..relations.len()).map(Some).collect(),
            ncols: relations.len(),
            relations,
        }
    }

    /// Tails on the non-defining relations of a presentation with
    /// definitions.
    pub fn with_definitions(dp: &DefinedPresentation) -> Self {
        let n = dp.pres.ngens();
        let mut columns = Vec::new();
        let mut relations = Vec::new();
        for rel in Relation::all(n) {
            if dp.is_definition(rel) {
                columns.push(None);
            } else {
                columns.push(Some(relations.len()));
                relations.push(rel);
            }
        }
        TailedPresentation {
            base: dp.pres.clone(),
            mode: TailMode::Definitions,
            columns: columns.into(),
            ncols: relations.len(),
            relations,
        }
    }

    pub fn base(&self) -> &PcPresentation {
        &self.base
    }

    pub fn mode(&self) -> TailMode {
        self.mode
    }

    /// Number of tails, i.e. columns of the consistency matrix.
    pub fn tail_count(&self) -> usize {
        self.ncols
    }

    /// The relation owning each tail column.
    pub fn tailed_relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn column_of(&self, rel: Relation) -> Option<usize> {
        self.columns[rel.index(self.base.ngens())]
    }

    pub(crate) fn zero(&self) -> TailVec {
        TailVec {
            columns: self.columns.clone(),
            n: self.base.ngens(),
            v: vec![0; self.ncols],
        }
    }

    /// Collects `word` in the extension: the main part is the ordinary normal
    /// form, and each application of a tailed relation adds its tail (with
    /// sign for inverse applications).
    pub fn collect(&self, word: &[(usize, i64)]) -> Result<TailedElement> {
        for &(g, _) in word {
            if g >= self.base.ngens() {
                return Err(Error::GeneratorOutOfRange {
                    index: g + 1,
                    n: self.base.ngens(),
                });
            }
        }
        let (main, t) = Collector::new(&self.base).word(word, &self.zero());
        Ok(TailedElement {
            main: PcElement::from_exps(main),
            tails: t.v,
        })
    }

    /// One row per overlap: the difference of the tail vectors of its two
    /// collections.
    pub fn consistency_rows(&self) -> Result<Vec<(Overlap, Vec<i64>)>> {
        let zero = self.zero();
        let mut rows = Vec::new();
        for ov in Overlap::all(self.base.ngens()) {
            let ((l, tl), (r, tr)) = evaluate_overlap(&self.base, ov, &zero);
            if l != r {
                return Err(Error::Inconsistent(1));
            }
            let row: Vec<i64> = tl.v.iter().zip(&tr.v).map(|(a, b)| a - b).collect();
            rows.push((ov, row));
        }
        Ok(rows)
    }

    /// The consistency matrix (see [`TailedPresentation::consistency_rows`]);
    /// `Z^r` modulo its row space is `R/[F,R]` for the free presentation the
    /// tails model.
    pub fn consistency_matrix(&self) -> Result<Matrix<BigInt>> {
        let rows = self
            .consistency_rows()?
            .into_iter()
            .map(|(_, r)| r.into_iter().map(BigInt::from).collect())
            .collect();
        Matrix::from_rows(self.ncols, rows)
    }

    /// Invariants of the tail module `Z^r / rows`.
    pub fn tail_module(&self) -> Result<AbelianInvariants> {
        abelian_invariants(&self.consistency_matrix()?, self.ncols)
    }
}

pub fn tailed_collect(tp: &TailedPresentation, word: &[(usize, i64)]) -> Result<TailedElement> {
    tp.collect(word)
}

pub fn consistency_relation_matrix(tp: &TailedPresentation) -> Result<Matrix<BigInt>> {
    tp.consistency_matrix()
}

/// Tail module of `pres` in the given mode.
pub fn tail_module(pres: &PcPresentation, mode: TailMode) -> Result<AbelianInvariants> {
    match mode {
        TailMode::Full => TailedPresentation::full(pres).tail_module(),
        TailMode::Definitions => TailedPresentation::with_definitions(&with_definitions(pres)?).tail_module(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_power_application() {
        let es = catalog::extraspecial(3).unwrap();
        let tp = TailedPresentation::full(&es);
        let t = tp.collect(&[(0, 3)]).unwrap();
        assert!(t.main.is_identity());
        let mut want = vec![0; tp.tail_count()];
        want[tp.column_of(Relation::Power(0)).unwrap()] = 1;
        assert_eq!(t.tails, want);
    }

    #[test]
    fn normal_words_have_no_tails() {
        let es = catalog::extraspecial(5).unwrap();
        let tp = TailedPresentation::full(&es);
        let t = tp.collect(&[(0, 2), (1, 3), (2, 1)]).unwrap();
        assert!(t.tails.iter().all(|&x| x == 0));
    }

    #[test]
    fn one_commutator_rewrite() {
        let es = catalog::extraspecial(5).unwrap();
        let tp = TailedPresentation::full(&es);
        let t = tp.collect(&[(1, 1), (0, 1)]).unwrap();
        assert_eq!(t.main.exps(), &[1, 1, 1]);
        let mut want = vec![0; tp.tail_count()];
        want[tp.column_of(Relation::Comm(1, 0)).unwrap()] = 1;
        assert_eq!(t.tails, want);
    }

    #[test]
    fn main_part_matches_plain_collection() {
        let g = catalog::h37().unwrap();
        let tp = TailedPresentation::full(&g);
        let w = [(5, 2), (0, -1), (3, 4), (1, 7), (0, 2), (6, -2)];
        assert_eq!(tp.collect(&w).unwrap().main, g.collect(&w).unwrap());
    }

    #[test]
    fn elementary_abelian_rank_two() {
        let z = PcPresentation::elementary_abelian(3, 2).unwrap();
        let inv = tail_module(&z, TailMode::Full).unwrap();
        assert_eq!(inv.torsion, vec![3]);
        assert_eq!(inv.free_rank, 2);
    }

    #[test]
    fn trivial_group_has_empty_matrix() {
        let t = PcPresentation::trivial(2).unwrap();
        let m = TailedPresentation::full(&t).consistency_matrix().unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }

    #[test]
    fn extraspecial_full_tails() {
        let es = catalog::extraspecial(3).unwrap();
        let inv = tail_module(&es, TailMode::Full).unwrap();
        assert_eq!(inv.torsion, vec![3, 3]);
        assert_eq!(inv.free_rank, 3);
    }

    #[test]
    fn modes_agree_on_torsion() {
        for g in [
            catalog::g2(3).unwrap(),
            catalog::example1(5).unwrap(),
            catalog::d8().unwrap(),
            catalog::q8().unwrap(),
            catalog::cyclic(5, 2).unwrap(),
        ] {
            let full = tail_module(&g, TailMode::Full).unwrap();
            let def = tail_module(&g, TailMode::Definitions).unwrap();
            assert_eq!(full.torsion, def.torsion);
            assert_eq!(full.free_rank, g.ngens());
            assert_eq!(def.free_rank, g.rank());
        }
    }
}
