//! Model rings: joint-probability coordinates for discrete models and
//! covariance (plus edge parameter) coordinates for Gaussian models.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::model::level_tuples;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Ring of joint probabilities `p_{i1,...,in}` for a discrete random vector
/// with the given level counts, one variable per index tuple in
/// lexicographic tuple order.
#[derive(Debug, Clone)]
pub struct DiscreteRingSpec {
    levels: Vec<u32>,
    ring: Arc<RingSpec>,
}

pub fn markov_ring(levels: &[u32]) -> Result<DiscreteRingSpec> {
    if levels.is_empty() || levels.contains(&0) {
        return Err(Error::Invalid("markov ring needs positive levels".into()));
    }
    let names: Vec<String> = level_tuples(levels)
        .into_iter()
        .map(|t| {
            let idx: Vec<String> = t.iter().map(|i| i.to_string()).collect();
            format!("p_{{{}}}", idx.join(","))
        })
        .collect();
    Ok(DiscreteRingSpec {
        levels: levels.to_vec(),
        ring: RingSpec::new(names),
    })
}

impl DiscreteRingSpec {
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn num_factors(&self) -> usize {
        self.levels.len()
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Variable index of a full 1-based level tuple.
    pub fn var_index(&self, tuple: &[u32]) -> usize {
        debug_assert_eq!(tuple.len(), self.levels.len());
        let mut idx = 0usize;
        for (k, &i) in tuple.iter().enumerate() {
            debug_assert!(i >= 1 && i <= self.levels[k]);
            idx = idx * self.levels[k] as usize + (i - 1) as usize;
        }
        idx
    }

    pub fn prob_var(&self, tuple: &[u32]) -> Polynomial {
        Polynomial::var(&self.ring, self.var_index(tuple))
    }
}

/// Ring of covariance entries `s_{i,j}` for `1 <= i <= j <= n`; when built
/// from a graph with directed or bidirected edges it additionally carries
/// `l_{i,j}` per directed edge and `p_{i,j}` per bidirected edge plus
/// `p_{i,i}` per vertex, listed before the `s` block. That parameter-first
/// order is the elimination order used downstream.
#[derive(Debug, Clone)]
pub struct GaussianRingSpec {
    labels: Vec<String>,
    graph: Option<MixedGraph>,
    ring: Arc<RingSpec>,
    l_edges: Vec<(usize, usize)>,
    p_pairs: Vec<(usize, usize)>,
}

pub fn gaussian_ring(n: usize) -> Result<GaussianRingSpec> {
    if n == 0 {
        return Err(Error::Invalid(
            "gaussian ring needs at least one node".into(),
        ));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let names = s_names(&labels);
    Ok(GaussianRingSpec {
        labels,
        graph: None,
        ring: RingSpec::new(names),
        l_edges: Vec::new(),
        p_pairs: Vec::new(),
    })
}

pub fn gaussian_ring_from_graph(g: &MixedGraph) -> Result<GaussianRingSpec> {
    let has_undirected = g.undirected_edges().next().is_some();
    let has_arrows = g.directed_edges().next().is_some() || g.bidirected_edges().next().is_some();
    if has_undirected && has_arrows {
        return Err(Error::UnsupportedGraph(
            "gaussian ring supports undirected graphs or directed/bidirected mixed graphs, not both".into(),
        ));
    }
    let labels: Vec<String> = g.labels().to_vec();
    let mut l_edges = Vec::new();
    let mut p_pairs = Vec::new();
    let mut names = Vec::new();
    if !has_undirected {
        // parameters exist for the directed/bidirected class (a DAG has an
        // empty bidirected part and keeps the diagonal p variables)
        g.topological_sort()?;
        l_edges = g.directed_edges().collect::<Vec<_>>();
        l_edges.sort_unstable();
        let mut pairs: Vec<(usize, usize)> = (0..g.n()).map(|i| (i, i)).collect();
        pairs.extend(g.bidirected_edges());
        pairs.sort_unstable();
        p_pairs = pairs;
        for &(i, j) in &l_edges {
            names.push(format!("l_{{{},{}}}", labels[i], labels[j]));
        }
        for &(i, j) in &p_pairs {
            names.push(format!("p_{{{},{}}}", labels[i], labels[j]));
        }
    }
    names.extend(s_names(&labels));
    Ok(GaussianRingSpec {
        labels,
        graph: Some(g.clone()),
        ring: RingSpec::new(names),
        l_edges,
        p_pairs,
    })
}

fn s_names(labels: &[String]) -> Vec<String> {
    let n = labels.len();
    let mut names = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            names.push(format!("s_{{{},{}}}", labels[i], labels[j]));
        }
    }
    names
}

impl GaussianRingSpec {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn graph(&self) -> Option<&MixedGraph> {
        self.graph.as_ref()
    }

    pub fn num_params(&self) -> usize {
        self.l_edges.len() + self.p_pairs.len()
    }

    pub fn num_s_vars(&self) -> usize {
        let n = self.n();
        n * (n + 1) / 2
    }

    /// Ring indices of the parameter variables (`l` block then `p` block).
    pub fn param_vars(&self) -> Vec<usize> {
        (0..self.num_params()).collect()
    }

    pub fn l_edges(&self) -> &[(usize, usize)] {
        &self.l_edges
    }

    pub fn p_pairs(&self) -> &[(usize, usize)] {
        &self.p_pairs
    }

    pub fn l_var_index(&self, i: usize, j: usize) -> Option<usize> {
        self.l_edges.iter().position(|&e| e == (i, j))
    }

    pub fn p_var_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.p_pairs
            .iter()
            .position(|&e| e == key)
            .map(|k| self.l_edges.len() + k)
    }

    /// Ring index of `s_{i,j}` (unordered).
    pub fn s_var_index(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        let (i, j) = (i.min(j), i.max(j));
        debug_assert!(j < n);
        self.num_params() + i * n - i * (i + 1) / 2 + j
    }

    pub fn s_var(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::var(&self.ring, self.s_var_index(i, j))
    }
}
