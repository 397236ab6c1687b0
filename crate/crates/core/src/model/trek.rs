//! Trek ideals: every covariance subdeterminant forced to vanish by trek
//! separation. For vertex subsets `A`, `B` with trek min-cut `r` below
//! `min(#A, #B)`, all `(r+1)`-minors of `Sigma_{A,B}` vanish on the model.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::model::rings::GaussianRingSpec;
use crate::poly::Polynomial;

pub const TREK_DEFAULT_CAP: usize = 6;
const TREK_MINOR_LIMIT: usize = 5;

impl GaussianRingSpec {
    pub fn trek_ideal(&self) -> Result<Ideal> {
        self.trek_ideal_with_cap(TREK_DEFAULT_CAP)
    }

    /// Enumerates all pairs of nonempty vertex subsets; exponential in the
    /// vertex count, hence the cap.
    pub fn trek_ideal_with_cap(&self, cap: usize) -> Result<Ideal> {
        let g = self
            .graph()
            .ok_or_else(|| Error::Invalid("ring was not constructed from a graph".into()))?;
        if g.undirected_edges().next().is_some() {
            return Err(Error::UnsupportedGraph(
                "trek ideals need a directed/bidirected graph".into(),
            ));
        }
        g.topological_sort()?;
        let n = g.n();
        if n > cap {
            return Err(Error::ResourceLimit {
                what: "trek_ideal".into(),
                detail: format!("subset enumeration over {n} vertices exceeds the cap {cap}"),
            });
        }
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut seen: HashSet<Polynomial> = HashSet::new();
        let subsets: Vec<VertexSet> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
            .collect();
        for (ai, a) in subsets.iter().enumerate() {
            // Sigma_{B,A} is the transpose of Sigma_{A,B} and treks are
            // symmetric, so unordered pairs suffice
            for b in subsets.iter().skip(ai) {
                let cut = g.trek_min_cut(a, b)?;
                if cut >= a.len().min(b.len()) {
                    continue;
                }
                if cut + 1 > TREK_MINOR_LIMIT {
                    return Err(Error::ResourceLimit {
                        what: "trek_ideal".into(),
                        detail: format!("{}x{} minors exceed the size guard", cut + 1, cut + 1),
                    });
                }
                let rows: Vec<usize> = a.iter().collect();
                let cols: Vec<usize> = b.iter().collect();
                let sub = PolyMatrix::from_fn(self.ring(), rows.len(), cols.len(), |i, j| {
                    self.s_var(rows[i], cols[j])
                });
                for minor in sub.minors(cut + 1)? {
                    if !minor.is_zero() && seen.insert(minor.clone()) {
                        gens.push(minor);
                    }
                }
            }
        }
        Ideal::new(self.ring(), gens)
    }
}
