//! Rewriting a presentation so that every generator beyond a minimal
//! generating set is *defined* by one of its relations.
//!
//! The new generators run along the lower exponent-p central series
//! `P1 = G`, `P(m+1) = [Pm, G] Pm^p`. Layer 1 is a minimal generating set
//! `y1..yd`; each generator of layer `m+1` is a commutator `[a, y]` or a power
//! `a^p` of a layer-`m` generator `a`, and the relation expressing it is its
//! definition. In the free group on `y1..yd` a definition holds trivially,
//! which is why it carries no tail.

use crate::error::{Error, Result};
use crate::intlinalg::modp::{inverse_mod_p, vec_mat_mod_p, Echelon};
use crate::pcgroup::{PcElement, PcPresentation, Quotient, Relation, SubgroupBasis};

#[derive(Debug, Clone)]
pub struct DefinedPresentation {
    pub pres: PcPresentation,
    /// For each generator, the relation defining it (`None` for `y1..yd`).
    pub definitions: Vec<Option<Relation>>,
    /// Images of the new generators in the original group.
    pub images: Vec<PcElement>,
    pub d: usize,
}

impl DefinedPresentation {
    pub fn is_definition(&self, rel: Relation) -> bool {
        self.definitions.contains(&Some(rel))
    }
}

/// Lower exponent-p central series, ending with the trivial subgroup.
pub fn lower_exponent_p_central_series(g: &PcPresentation) -> Vec<SubgroupBasis> {
    let mut series = vec![SubgroupBasis::whole(g)];
    while !series.last().unwrap().is_empty() {
        let cur = series.last().unwrap();
        let mut gens = Vec::new();
        for a in cur.members() {
            gens.push(g.power(a, g.p() as i64));
            for x in g.generators() {
                gens.push(g.commutator(a, &x));
            }
        }
        series.push(g.normal_closure(&gens));
    }
    series
}

/// Coordinates of `P_m / P_(m+1)` computed inside `G / P_(m+1)`, where that
/// section is central and elementary abelian.
struct Layer {
    quotient: Quotient,
    basis: SubgroupBasis,
    // coordinates (w.r.t. `basis`) of the chosen generators, and the inverse
    chosen: Vec<Vec<u32>>,
    inverse: Vec<Vec<u32>>,
}

impl Layer {
    fn coords(&self, g: &PcPresentation, x: &PcElement) -> Vec<u32> {
        let q = &self.quotient;
        let (rest, e) = self.basis.sift_with_exponents(&q.pres, &q.project(g, x));
        debug_assert!(rest.is_identity(), "element outside the layer");
        e
    }
}

pub fn with_definitions(g: &PcPresentation) -> Result<DefinedPresentation> {
    let p = g.p();
    let series = lower_exponent_p_central_series(g);
    let depth = series.len() - 1;
    let mut layers: Vec<Layer> = Vec::with_capacity(depth);
    for m in 0..depth {
        let quotient = g.quotient(&series[m + 1])?;
        let projected: Vec<PcElement> = series[m]
            .members()
            .iter()
            .map(|x| quotient.project(g, x))
            .collect();
        let basis = SubgroupBasis::generated_by(&quotient.pres, &projected);
        layers.push(Layer {
            quotient,
            basis,
            chosen: vec![],
            inverse: vec![],
        });
    }

    // (image in G, definition, layer)
    let mut gens: Vec<(PcElement, Option<Relation>, usize)> = Vec::new();
    if depth > 0 {
        let frattini_lead = series[1].leading_indices();
        for i in (0..g.ngens()).filter(|i| !frattini_lead.contains(i)) {
            gens.push((g.generator(i), None, 0));
        }
    }
    let d = gens.len();
    for m in 1..depth {
        let dim = layers[m].basis.len();
        let mut ech = Echelon::new(p, dim);
        let prev: Vec<usize> = (0..gens.len()).filter(|&k| gens[k].2 == m - 1).collect();
        let mut fresh = Vec::new();
        for &a in &prev {
            let mut candidates = Vec::new();
            for b in 0..d.min(a) {
                candidates.push((g.commutator(&gens[a].0, &gens[b].0), Relation::Comm(a, b)));
            }
            candidates.push((g.power(&gens[a].0, p as i64), Relation::Power(a)));
            for (x, rel) in candidates {
                if ech.rank() == dim {
                    break;
                }
                if ech.insert(&layers[m].coords(g, &x)) {
                    fresh.push((x, Some(rel), m));
                }
            }
        }
        if ech.rank() != dim {
            return Err(Error::Internal(format!(
                "definitions span {} of {dim} dimensions in layer {}",
                ech.rank(),
                m + 1
            )));
        }
        gens.extend(fresh);
    }
    if gens.len() != g.ngens() {
        return Err(Error::Internal("layer dimensions do not add up".into()));
    }
    for (m, layer) in layers.iter_mut().enumerate() {
        layer.chosen = gens
            .iter()
            .filter(|x| x.2 == m)
            .map(|x| layer.coords(g, &x.0))
            .collect::<Vec<_>>();
        layer.inverse = inverse_mod_p(p, &layer.chosen)
            .ok_or_else(|| Error::Internal("chosen layer generators are dependent".into()))?;
    }

    let n = gens.len();
    let offsets: Vec<usize> = (0..depth)
        .map(|m| gens.iter().position(|x| x.2 == m).unwrap())
        .collect();
    let decompose = |mut x: PcElement| -> PcElement {
        let mut out = vec![0u32; n];
        for (m, layer) in layers.iter().enumerate() {
            let lambda = vec_mat_mod_p(p, &layer.coords(g, &x), &layer.inverse);
            let mut prod = g.identity();
            for (k, &l) in lambda.iter().enumerate() {
                out[offsets[m] + k] = l;
                prod = g.multiply(&prod, &g.power(&gens[offsets[m] + k].0, l as i64));
            }
            x = g.multiply(&g.inverse(&prod), &x);
        }
        debug_assert!(x.is_identity());
        PcElement::from_exps(out)
    };

    let mut pres = PcPresentation::elementary_abelian(p, n)?;
    for rel in Relation::all(n) {
        let value = match rel {
            Relation::Power(i) => g.power(&gens[i].0, p as i64),
            Relation::Comm(j, i) => g.commutator(&gens[j].0, &gens[i].0),
        };
        pres.set_rhs(rel, decompose(value));
    }
    for (k, (_, def, _)) in gens.iter().enumerate() {
        if let Some(rel) = def {
            if *pres.rhs(*rel) != pres.generator(k) {
                return Err(Error::Internal(format!("definition {rel} does not produce g{}", k + 1)));
            }
        }
    }
    if !pres.is_consistent() {
        return Err(Error::Internal("rewritten presentation is inconsistent".into()));
    }
    Ok(DefinedPresentation {
        pres,
        definitions: gens.iter().map(|x| x.1).collect(),
        images: gens.into_iter().map(|x| x.0).collect(),
        d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn every_non_minimal_generator_gets_a_definition() {
        for g in [
            catalog::g3(3).unwrap(),
            catalog::h37().unwrap(),
            catalog::example2(5).unwrap(),
            catalog::d8().unwrap(),
            catalog::cyclic(3, 3).unwrap(),
        ] {
            let dp = with_definitions(&g).unwrap();
            assert_eq!(dp.d, g.rank());
            assert_eq!(dp.definitions.iter().filter(|d| d.is_none()).count(), dp.d);
            assert_eq!(dp.pres.ngens(), g.ngens());
            assert_eq!(dp.pres.nilpotency_class(), g.nilpotency_class());
        }
    }

    #[test]
    fn images_multiply_like_the_new_presentation() {
        let g = catalog::q8().unwrap();
        let dp = with_definitions(&g).unwrap();
        let h = &dp.pres;
        // evaluating normal words of h through the images is a homomorphism
        let eval = |x: &PcElement| {
            x.syllables().fold(g.identity(), |acc, (k, e)| {
                g.multiply(&acc, &g.power(&dp.images[k], e as i64))
            })
        };
        for a in h.elements() {
            for b in h.elements() {
                assert_eq!(eval(&h.multiply(&a, &b)), g.multiply(&eval(&a), &eval(&b)));
            }
        }
    }

    #[test]
    fn trivial_group() {
        let dp = with_definitions(&PcPresentation::trivial(5).unwrap()).unwrap();
        assert_eq!(dp.d, 0);
        assert_eq!(dp.pres.ngens(), 0);
    }
}
