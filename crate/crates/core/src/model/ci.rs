//! Markov matrices and conditional independence ideals. A discrete CI
//! statement becomes the 2x2 minors of marginalized probability matrices; a
//! Gaussian statement becomes the (#C+1)-minors of the covariance submatrix
//! on rows `A + C` and columns `B + C`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::ideal::Ideal;
use crate::markov::CIStatement;
use crate::matrix::PolyMatrix;
use crate::model::level_tuples;
use crate::model::rings::{DiscreteRingSpec, GaussianRingSpec};
use crate::poly::Polynomial;

fn check_statement(n: usize, stmt: &CIStatement) -> Result<()> {
    for v in stmt.a.iter().chain(stmt.b.iter()).chain(stmt.c.iter()) {
        if v >= n {
            return Err(Error::VertexRange { vertex: v, n });
        }
    }
    Ok(())
}

impl DiscreteRingSpec {
    /// One matrix per statement and conditioning tuple: rows indexed by the
    /// level tuples of `A`, columns by the level tuples of `B`, entries
    /// marginalized over the remaining vertices. Matrices are emitted in
    /// statement order, then lexicographic conditioning-tuple order.
    pub fn markov_matrices(&self, stmts: &[CIStatement]) -> Result<Vec<PolyMatrix>> {
        let n = self.num_factors();
        let mut out = Vec::new();
        for stmt in stmts {
            check_statement(n, stmt)?;
            let a: Vec<usize> = stmt.a.iter().collect();
            let b: Vec<usize> = stmt.b.iter().collect();
            let c: Vec<usize> = stmt.c.iter().collect();
            let used: VertexSet = stmt.a.union(&stmt.b).union(&stmt.c);
            let d: Vec<usize> = (0..n).filter(|&v| !used.contains(v)).collect();

            let levels_of =
                |verts: &[usize]| -> Vec<u32> { verts.iter().map(|&v| self.levels()[v]).collect() };
            let a_tuples = level_tuples(&levels_of(&a));
            let b_tuples = level_tuples(&levels_of(&b));
            let c_tuples = level_tuples(&levels_of(&c));
            let d_tuples = level_tuples(&levels_of(&d));

            for ct in &c_tuples {
                let entries: Vec<Polynomial> = a_tuples
                    .iter()
                    .flat_map(|at| b_tuples.iter().map(move |bt| (at, bt)))
                    .map(|(at, bt)| {
                        let mut acc = Polynomial::zero(self.ring());
                        for dt in &d_tuples {
                            let mut full = vec![0u32; n];
                            for (k, &v) in a.iter().enumerate() {
                                full[v] = at[k];
                            }
                            for (k, &v) in b.iter().enumerate() {
                                full[v] = bt[k];
                            }
                            for (k, &v) in c.iter().enumerate() {
                                full[v] = ct[k];
                            }
                            for (k, &v) in d.iter().enumerate() {
                                full[v] = dt[k];
                            }
                            acc = acc.add_raw(&self.prob_var(&full));
                        }
                        acc
                    })
                    .collect();
                out.push(PolyMatrix::new(
                    self.ring(),
                    a_tuples.len(),
                    b_tuples.len(),
                    entries,
                )?);
            }
        }
        Ok(out)
    }

    /// The ideal generated by all 2x2 minors of all markov matrices, with
    /// duplicate and zero generators dropped.
    pub fn ci_ideal(&self, stmts: &[CIStatement]) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut seen: HashSet<Polynomial> = HashSet::new();
        for m in self.markov_matrices(stmts)? {
            if m.rows() < 2 || m.cols() < 2 {
                continue;
            }
            for minor in m.minors(2)? {
                if !minor.is_zero() && seen.insert(minor.clone()) {
                    gens.push(minor);
                }
            }
        }
        Ideal::new(self.ring(), gens)
    }
}

impl GaussianRingSpec {
    /// For each statement, all (#C+1)-minors of the symbolic covariance
    /// submatrix on rows `A + C` and columns `B + C`.
    pub fn ci_ideal(&self, stmts: &[CIStatement]) -> Result<Ideal> {
        let n = self.n();
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut seen: HashSet<Polynomial> = HashSet::new();
        for stmt in stmts {
            check_statement(n, stmt)?;
            let rows: Vec<usize> = stmt.a.union(&stmt.c).iter().collect();
            let cols: Vec<usize> = stmt.b.union(&stmt.c).iter().collect();
            let k = stmt.c.len() + 1;
            if k > rows.len().min(cols.len()) {
                continue;
            }
            let sub = PolyMatrix::from_fn(self.ring(), rows.len(), cols.len(), |i, j| {
                self.s_var(rows[i], cols[j])
            });
            for minor in sub.minors(k)? {
                if !minor.is_zero() && seen.insert(minor.clone()) {
                    gens.push(minor);
                }
            }
        }
        Ideal::new(self.ring(), gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rings::{gaussian_ring, markov_ring};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    fn stmt(a: &[usize], b: &[usize], c: &[usize]) -> CIStatement {
        CIStatement::new(vs(a), vs(b), vs(c)).unwrap()
    }

    /// The two statements of the worked d = (2,3,2) example:
    /// X1 _||_ X2 | X3 and X1 _||_ X3.
    fn example_statements() -> Vec<CIStatement> {
        vec![stmt(&[0], &[1], &[2]), stmt(&[0], &[2], &[])]
    }

    #[test]
    fn markov_matrices_shapes_and_entries() {
        let r = markov_ring(&[2, 3, 2]).unwrap();
        let ms = r.markov_matrices(&example_statements()).unwrap();
        assert_eq!(ms.len(), 3);
        // two 2x3 matrices of bare variables, conditioning tuple fastest
        assert_eq!((ms[0].rows(), ms[0].cols()), (2, 3));
        assert_eq!(ms[0].get(0, 0).to_string(), "p_{1,1,1}");
        assert_eq!(ms[0].get(1, 2).to_string(), "p_{2,3,1}");
        assert_eq!(ms[1].get(0, 0).to_string(), "p_{1,1,2}");
        // one 2x2 matrix of marginal sums over X2
        assert_eq!((ms[2].rows(), ms[2].cols()), (2, 2));
        assert_eq!(
            ms[2].get(0, 0).to_string(),
            "p_{1,1,1} + p_{1,2,1} + p_{1,3,1}"
        );
        assert_eq!(
            ms[2].get(1, 1).to_string(),
            "p_{2,1,2} + p_{2,2,2} + p_{2,3,2}"
        );
    }

    #[test]
    fn seven_quadratic_generators() {
        let r = markov_ring(&[2, 3, 2]).unwrap();
        let i = r.ci_ideal(&example_statements()).unwrap();
        assert_eq!(i.generators().len(), 7);
        assert!(i.generators().iter().all(|g| g.total_degree() == 2));
    }

    #[test]
    fn bare_matrix_when_nothing_is_marginalized() {
        let r = markov_ring(&[2, 2]).unwrap();
        let ms = r.markov_matrices(&[stmt(&[0], &[1], &[])]).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].get(0, 0).to_string(), "p_{1,1}");
        assert_eq!(ms[0].get(0, 1).to_string(), "p_{1,2}");
        assert_eq!(ms[0].get(1, 0).to_string(), "p_{2,1}");
        assert_eq!(ms[0].get(1, 1).to_string(), "p_{2,2}");
        let i = r.ci_ideal(&[stmt(&[0], &[1], &[])]).unwrap();
        assert_eq!(i.generators().len(), 1);
    }

    #[test]
    fn gaussian_marginal_statement_is_one_entry() {
        let r = gaussian_ring(2).unwrap();
        let i = r.ci_ideal(&[stmt(&[0], &[1], &[])]).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "s_{1,2}");
    }

    #[test]
    fn empty_statement_list_gives_zero_ideal() {
        let r = markov_ring(&[2, 2]).unwrap();
        assert!(r.ci_ideal(&[]).unwrap().is_zero_ideal());
        let g = gaussian_ring(3).unwrap();
        assert!(g.ci_ideal(&[]).unwrap().is_zero_ideal());
    }

    #[test]
    fn out_of_range_vertex_is_an_error() {
        let r = markov_ring(&[2, 2]).unwrap();
        assert!(matches!(
            r.ci_ideal(&[stmt(&[0], &[5], &[])]),
            Err(Error::VertexRange { .. })
        ));
    }
}
