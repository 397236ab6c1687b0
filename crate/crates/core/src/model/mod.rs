//! The statistical layer: model rings, markov matrices, conditional
//! independence ideals, vanishing ideals, trek ideals, and parameter
//! identifiability.

mod ci;
mod identify;
mod rings;
mod trek;
mod vanishing;

pub use identify::{IdentClass, IdentResult, ParamIdent};
pub use rings::{
    gaussian_ring, gaussian_ring_from_graph, markov_ring, DiscreteRingSpec, GaussianRingSpec,
};
pub use trek::TREK_DEFAULT_CAP;

use std::sync::Arc;

use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Odometer over level tuples of the given sizes, 1-based, lexicographic.
pub(crate) fn level_tuples(levels: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if levels.contains(&0) {
        return out;
    }
    let mut cur: Vec<u32> = vec![1; levels.len()];
    loop {
        out.push(cur.clone());
        let mut i = levels.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < levels[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
            if i == 0 {
                return out;
            }
        }
    }
}

/// Re-express a polynomial in `target`, mapping variable `i` of the source
/// ring to `map[i]`. Every variable actually used must be mapped.
pub(crate) fn transport(
    p: &Polynomial,
    map: &[Option<usize>],
    target: &Arc<RingSpec>,
) -> Polynomial {
    let n = target.num_vars();
    let terms = p
        .terms()
        .iter()
        .map(|t| {
            let mut exps = vec![0u32; n];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    let j = map[i].expect("transport: unmapped variable in use");
                    exps[j] = e;
                }
            }
            (t.coef.clone(), crate::monomial::Monomial::new(exps))
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_tuples_are_lexicographic() {
        let t = level_tuples(&[2, 3]);
        assert_eq!(
            t,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 2],
                vec![2, 3]
            ]
        );
        assert_eq!(level_tuples(&[]), vec![Vec::<u32>::new()]);
    }
}
