//! Generic identifiability of structural equation model parameters.
//!
//! For each parameter `t`, all other parameters are eliminated from the
//! graph ideal of the covariance parametrization. A reduced-basis element
//! of degree exactly one in `t`, written `c(s)*t - r(s)`, certifies that
//! `t = r/c` on a dense open subset of the model; reducedness guarantees
//! `c` does not vanish on the model.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Limits;
use crate::ideal::Ideal;
use crate::model::rings::GaussianRingSpec;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentClass {
    GenericallyIdentifiable,
    NonIdentifiableGenerically,
    Undetermined,
}

impl fmt::Display for IdentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentClass::GenericallyIdentifiable => "generically-identifiable",
            IdentClass::NonIdentifiableGenerically => "non-identifiable-generically",
            IdentClass::Undetermined => "undetermined",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct ParamIdent {
    /// ring variable index of the parameter
    pub var: usize,
    /// ideal of relations in this parameter and the `s` variables
    pub ideal: Ideal,
    pub class: IdentClass,
    /// a certifying relation `c(s)*t - r(s)` when generically identifiable
    pub witness: Option<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct IdentResult {
    pub params: Vec<ParamIdent>,
}

impl IdentResult {
    pub fn count(&self, class: IdentClass) -> usize {
        self.params.iter().filter(|p| p.class == class).count()
    }
}

impl GaussianRingSpec {
    pub fn identify_parameters(&self) -> Result<IdentResult> {
        self.identify_parameters_with(&Limits::default())
    }

    pub fn identify_parameters_with(&self, limits: &Limits) -> Result<IdentResult> {
        if self.num_params() == 0 {
            return Err(Error::Invalid(
                "identifiability needs a ring with parameter variables".into(),
            ));
        }
        let gens = self.parametrization_gens()?;
        let graph_ideal = Ideal::new(self.ring(), gens)?;
        let params = self.param_vars();
        let mut out = Vec::with_capacity(params.len());
        for &t in &params {
            let kill: BTreeSet<usize> = params.iter().copied().filter(|&u| u != t).collect();
            let relations = match graph_ideal.eliminate_with(&kill, limits) {
                Ok(ideal) => ideal,
                Err(Error::ResourceLimit { .. }) => {
                    // never guess on an aborted elimination
                    out.push(ParamIdent {
                        var: t,
                        ideal: Ideal::zero(self.ring()),
                        class: IdentClass::Undetermined,
                        witness: None,
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            let order = MonomialOrder::elimination([t], self.ring().num_vars());
            let basis = relations.groebner_basis_with(&order, limits)?;
            let witness = basis.iter().find(|p| p.degree_in(t) == 1).cloned();
            let uses_t = basis.iter().any(|p| p.uses_var(t));
            let class = if witness.is_some() {
                IdentClass::GenericallyIdentifiable
            } else if uses_t {
                // t is constrained but not by any rational formula the
                // reduced basis exposes
                IdentClass::Undetermined
            } else {
                IdentClass::NonIdentifiableGenerically
            };
            out.push(ParamIdent {
                var: t,
                ideal: relations,
                class,
                witness,
            });
        }
        Ok(IdentResult { params: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MixedGraph;
    use crate::model::rings::gaussian_ring_from_graph;

    #[test]
    fn two_node_dag_identifies_the_edge_weight() {
        let g = MixedGraph::digraph(vec!["1", "2"], vec![("1", "2")]).unwrap();
        let r = gaussian_ring_from_graph(&g).unwrap();
        let res = r.identify_parameters().unwrap();
        assert_eq!(res.params.len(), 3);
        assert_eq!(res.count(IdentClass::GenericallyIdentifiable), 3);
        let l = &res.params[0];
        assert_eq!(r.ring().var_name(l.var), "l_{1,2}");
        // l_{1,2} * s_{1,1} - s_{1,2}
        let expected = Polynomial::var(r.ring(), l.var)
            .mul(&r.s_var(0, 0))
            .unwrap()
            .sub(&r.s_var(0, 1))
            .unwrap();
        assert_eq!(l.witness.as_ref().unwrap(), &expected);
    }

    #[test]
    fn bow_pattern_is_not_identified() {
        // 1 -> 2 plus 1 <-> 2: l_{1,2}, p_{1,2}, p_{2,2} are entangled
        let g =
            MixedGraph::new(vec!["1", "2"], vec![("1", "2")], vec![("1", "2")], vec![]).unwrap();
        let r = gaussian_ring_from_graph(&g).unwrap();
        let res = r.identify_parameters().unwrap();
        assert_eq!(res.count(IdentClass::NonIdentifiableGenerically), 3);
        // p_{1,1} = s_{1,1} stays identifiable
        assert_eq!(res.count(IdentClass::GenericallyIdentifiable), 1);
    }

    #[test]
    fn rings_without_parameters_are_rejected() {
        let r = crate::model::rings::gaussian_ring(2).unwrap();
        assert!(matches!(r.identify_parameters(), Err(Error::Invalid(_))));
    }
}
