//! Vanishing ideals of parametrized graphical models, computed by
//! implicitization: write the parametrization, then eliminate the
//! parameters.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::groebner::Limits;
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::model::rings::{DiscreteRingSpec, GaussianRingSpec};
use crate::model::{level_tuples, transport};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

impl DiscreteRingSpec {
    /// The homogeneous vanishing ideal of the discrete DAG model: all
    /// polynomial relations among the joint probabilities of tensors
    /// factoring as a product of conditional tables along the graph.
    ///
    /// One parameter variable is introduced per conditional-probability
    /// entry, the graph ideal `p_i - prod_v t^v(i_v | i_pa(v))` is formed,
    /// and the parameters are eliminated. The conditional tables are left
    /// unnormalized: the factorization absorbs scale vertex by vertex, and
    /// normalizing instead would cut the model with an affine hyperplane
    /// and break homogeneity.
    pub fn vanishing_ideal(&self, g: &MixedGraph) -> Result<Ideal> {
        self.vanishing_ideal_with(g, &Limits::default())
    }

    pub fn vanishing_ideal_with(&self, g: &MixedGraph, limits: &Limits) -> Result<Ideal> {
        let n = self.num_factors();
        if g.n() != n {
            return Err(Error::Invalid(format!(
                "graph has {} vertices but the ring has {} factors",
                g.n(),
                n
            )));
        }
        if g.bidirected_edges().next().is_some() || g.undirected_edges().next().is_some() {
            return Err(Error::UnsupportedGraph(
                "discrete vanishing ideals are defined for DAGs".into(),
            ));
        }
        g.topological_sort()?;

        // parameter variables: one per vertex, parent configuration, level
        let mut theta_names: Vec<String> = Vec::new();
        // theta_index[v] -> map from (pa tuple pos, level) to variable index
        let mut theta_base: Vec<Vec<usize>> = Vec::with_capacity(n);
        let parents: Vec<Vec<usize>> = (0..n).map(|v| g.parents(v)).collect();
        let pa_tuples: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|v| {
                let lv: Vec<u32> = parents[v].iter().map(|&u| self.levels()[u]).collect();
                level_tuples(&lv)
            })
            .collect();
        for (v, tuples_of_v) in pa_tuples.iter().enumerate() {
            let mut bases = Vec::with_capacity(tuples_of_v.len());
            for pt in tuples_of_v {
                bases.push(theta_names.len());
                for level in 1..=self.levels()[v] {
                    let ctx: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
                    theta_names.push(format!("t{}_{{{}|{}}}", v + 1, level, ctx.join(",")));
                }
            }
            theta_base.push(bases);
        }
        let num_theta = theta_names.len();
        let mut names = theta_names;
        names.extend(self.ring().var_names().iter().cloned());
        let aux = RingSpec::new(names);

        // graph ideal: p_i - prod_v theta_v(i_v | i_pa(v))
        let mut gens = Vec::new();
        for (k, tuple) in level_tuples(self.levels()).into_iter().enumerate() {
            let mut prod = Polynomial::one(&aux);
            for v in 0..n {
                let pt: Vec<u32> = parents[v].iter().map(|&u| tuple[u]).collect();
                let which = pa_tuples[v]
                    .iter()
                    .position(|t| *t == pt)
                    .expect("parent tuple");
                let var = theta_base[v][which] + (tuple[v] - 1) as usize;
                prod = prod.mul_raw(&Polynomial::var(&aux, var));
            }
            let p = Polynomial::var(&aux, num_theta + k);
            gens.push(p.sub_raw(&prod));
        }

        let ideal = Ideal::new(&aux, gens)?;
        let kill: BTreeSet<usize> = (0..num_theta).collect();
        let eliminated = ideal.eliminate_with(&kill, limits)?;

        // re-express in the model ring
        let mut map: Vec<Option<usize>> = vec![None; aux.num_vars()];
        for k in 0..self.ring().num_vars() {
            map[num_theta + k] = Some(k);
        }
        let gens = eliminated
            .generators()
            .iter()
            .map(|p| transport(p, &map, self.ring()))
            .collect();
        Ideal::new(self.ring(), gens)
    }
}

impl GaussianRingSpec {
    /// The covariance parametrization of the directed/bidirected model:
    /// `Sigma = (I - Lambda)^-T Psi (I - Lambda)^-1` with `Lambda` supported
    /// on directed edges and `Psi` symmetric, supported on the diagonal and
    /// the bidirected edges. Returns the matrix of `Sigma` entries as
    /// polynomials in the parameter block of this ring.
    pub(crate) fn sigma_parametrization(&self) -> Result<PolyMatrix> {
        let g = self
            .graph()
            .ok_or_else(|| Error::Invalid("ring was not constructed from a graph".into()))?;
        if g.undirected_edges().next().is_some() {
            return Err(Error::UnsupportedGraph(
                "the covariance parametrization needs a directed/bidirected graph".into(),
            ));
        }
        let n = self.n();
        let ring = self.ring().clone();
        let lambda = PolyMatrix::from_fn(&ring, n, n, |i, j| match self.l_var_index(i, j) {
            Some(k) => Polynomial::var(&ring, k),
            None => Polynomial::zero(&ring),
        });
        let psi = PolyMatrix::from_fn(&ring, n, n, |i, j| match self.p_var_index(i, j) {
            Some(k) => Polynomial::var(&ring, k),
            None => Polynomial::zero(&ring),
        });
        // (I - Lambda)^-1 = I + Lambda + ... + Lambda^(n-1); Lambda is
        // nilpotent because the directed part is acyclic
        let mut inv = PolyMatrix::identity(&ring, n);
        let mut power = PolyMatrix::identity(&ring, n);
        for _ in 1..n {
            power = power.matmul(&lambda)?;
            inv = inv.matadd(&power)?;
        }
        inv.transpose().matmul(&psi)?.matmul(&inv)
    }

    /// Generators `s_{i,j} - Sigma_{i,j}` of the graph ideal of the
    /// parametrization, for `i <= j`.
    pub(crate) fn parametrization_gens(&self) -> Result<Vec<Polynomial>> {
        let sigma = self.sigma_parametrization()?;
        let n = self.n();
        let mut gens = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                gens.push(self.s_var(i, j).sub_raw(sigma.get(i, j)));
            }
        }
        Ok(gens)
    }

    /// The vanishing ideal of the Gaussian graphical model of the ring's
    /// graph, expressed in the `s` variables of this ring.
    pub fn vanishing_ideal(&self) -> Result<Ideal> {
        self.vanishing_ideal_with(&Limits::default())
    }

    pub fn vanishing_ideal_with(&self, limits: &Limits) -> Result<Ideal> {
        let g = self
            .graph()
            .cloned()
            .ok_or_else(|| Error::Invalid("ring was not constructed from a graph".into()))?;
        if g.undirected_edges().next().is_some() {
            return self.concentration_vanishing_ideal(&g, limits);
        }
        let gens = self.parametrization_gens()?;
        let ideal = Ideal::new(self.ring(), gens)?;
        let kill: BTreeSet<usize> = self.param_vars().into_iter().collect();
        ideal.eliminate_with(&kill, limits)
    }

    /// Undirected route, experimental: eliminate the entries of a symmetric
    /// concentration matrix `K` supported on the graph from the entries of
    /// `Sigma * K - I`.
    fn concentration_vanishing_ideal(&self, g: &MixedGraph, limits: &Limits) -> Result<Ideal> {
        let n = self.n();
        let mut k_pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        k_pairs.extend(g.undirected_edges());
        k_pairs.sort_unstable();
        let mut names: Vec<String> = k_pairs
            .iter()
            .map(|&(i, j)| format!("k_{{{},{}}}", g.label(i), g.label(j)))
            .collect();
        let num_k = names.len();
        names.extend(self.ring().var_names().iter().cloned());
        let aux = RingSpec::new(names);

        let k_index = |i: usize, j: usize| -> Option<usize> {
            let key = (i.min(j), i.max(j));
            k_pairs.iter().position(|&p| p == key)
        };
        let s_index_aux = |i: usize, j: usize| -> usize {
            // the s block sits after the k block, in the same layout as the
            // model ring minus its (empty) parameter block
            num_k + self.s_var_index(i, j) - self.num_params()
        };
        let kmat = PolyMatrix::from_fn(&aux, n, n, |i, j| match k_index(i, j) {
            Some(t) => Polynomial::var(&aux, t),
            None => Polynomial::zero(&aux),
        });
        let sigma =
            PolyMatrix::from_fn(&aux, n, n, |i, j| Polynomial::var(&aux, s_index_aux(i, j)));
        let prod = sigma.matmul(&kmat)?;
        let identity = PolyMatrix::identity(&aux, n);
        let mut gens = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                gens.push(prod.get(i, j).sub_raw(identity.get(i, j)));
            }
        }
        let ideal = Ideal::new(&aux, gens)?;
        let kill: BTreeSet<usize> = (0..num_k).collect();
        let eliminated = ideal.eliminate_with(&kill, limits)?;
        let mut map: Vec<Option<usize>> = vec![None; aux.num_vars()];
        for t in 0..self.ring().num_vars() {
            map[num_k + t] = Some(t);
        }
        let gens = eliminated
            .generators()
            .iter()
            .map(|p| transport(p, &map, self.ring()))
            .collect();
        Ideal::new(self.ring(), gens)
    }
}
