//! Shared helpers for the CLI integration and acceptance suites: running
//! the binary, golden-file comparison, and the brute-force oracles the
//! acceptance criteria check against.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use gmodels::{rat, MixedGraph, Polynomial, Rational, VertexSet};
use num_traits::{One, Zero};
use rand::{rngs::StdRng, Rng};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmodels"))
        .args(args)
        .output()
        .expect("failed to spawn gmodels")
}

/// Compare stdout bytes against a golden file; set UPDATE_GOLDEN=1 to
/// rewrite the expectations.
pub fn assert_golden(name: &str, out: &Output) {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).expect("write golden");
        return;
    }
    let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(
        out.stdout,
        want,
        "golden mismatch for {name}\n--- got ---\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

pub fn vs(v: &[usize]) -> VertexSet {
    VertexSet::new(v.to_vec())
}

// ---------------------------------------------------------------------
// d-separation oracle: exhaustive path enumeration with the collider and
// non-collider blocking rules.
// ---------------------------------------------------------------------

pub fn skeleton_paths(g: &MixedGraph, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn extend(
        g: &MixedGraph,
        path: &mut Vec<usize>,
        seen: &mut Vec<bool>,
        to: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if last == to {
            out.push(path.clone());
            return;
        }
        for next in 0..g.n() {
            if !seen[next] && (g.has_directed(last, next) || g.has_directed(next, last)) {
                seen[next] = true;
                path.push(next);
                extend(g, path, seen, to, out);
                path.pop();
                seen[next] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    extend(g, &mut vec![from], &mut seen, to, &mut out);
    out
}

pub fn path_blocked(g: &MixedGraph, path: &[usize], c: &VertexSet) -> bool {
    for k in 1..path.len().saturating_sub(1) {
        let (prev, v, next) = (path[k - 1], path[k], path[k + 1]);
        let collider = g.has_directed(prev, v) && g.has_directed(next, v);
        if collider {
            let mut opened = c.contains(v);
            for d in g.descendants(v).iter() {
                opened |= c.contains(d);
            }
            if !opened {
                return true;
            }
        } else if c.contains(v) {
            return true;
        }
    }
    false
}

pub fn d_sep_oracle(g: &MixedGraph, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
    for x in a.iter() {
        for y in b.iter() {
            for path in skeleton_paths(g, x, y) {
                if !path_blocked(g, &path, c) {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------
// trek-separation oracle: enumerate treks as (left, right) vertex masks and
// minimize #C_A + #C_B over all blocking pairs.
// ---------------------------------------------------------------------

fn paths_into(g: &MixedGraph, v: usize) -> Vec<(usize, u32)> {
    let mut out = vec![(v, 1u32 << v)];
    let mut frontier = vec![(v, 1u32 << v)];
    while let Some((head, mask)) = frontier.pop() {
        for p in g.parents(head) {
            if mask & (1 << p) == 0 {
                let m = mask | (1 << p);
                out.push((p, m));
                frontier.push((p, m));
            }
        }
    }
    out
}

pub fn trek_cut_oracle(g: &MixedGraph, a: &VertexSet, b: &VertexSet) -> usize {
    let n = g.n();
    let mut treks: Vec<(u32, u32)> = Vec::new();
    for x in a.iter() {
        let lefts = paths_into(g, x);
        for y in b.iter() {
            for &(kl, lmask) in &lefts {
                for &(kr, rmask) in &paths_into(g, y) {
                    if kl == kr || g.has_bidirected(kl, kr) {
                        treks.push((lmask, rmask));
                    }
                }
            }
        }
    }
    treks.sort_unstable();
    treks.dedup();
    let minimal: Vec<(u32, u32)> = treks
        .iter()
        .filter(|&&(l, r)| {
            !treks
                .iter()
                .any(|&(l2, r2)| (l2, r2) != (l, r) && (l2 & l) == l2 && (r2 & r) == r2)
        })
        .copied()
        .collect();
    let mut best = usize::MAX;
    for ca in 0u32..(1 << n) {
        for cb in 0u32..(1 << n) {
            let size = (ca.count_ones() + cb.count_ones()) as usize;
            if size >= best {
                continue;
            }
            if minimal.iter().all(|&(l, r)| (l & ca) != 0 || (r & cb) != 0) {
                best = size;
            }
        }
    }
    best
}

// ---------------------------------------------------------------------
// random graphs
// ---------------------------------------------------------------------

pub fn random_dag(rng: &mut StdRng, n: usize) -> MixedGraph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.45) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    MixedGraph::digraph(labels, edges).unwrap()
}

pub fn random_mixed(rng: &mut StdRng, n: usize) -> MixedGraph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut directed = Vec::new();
    let mut bidirected = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.4) {
                directed.push((labels[i].clone(), labels[j].clone()));
            }
            if rng.random_bool(0.25) {
                bidirected.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    MixedGraph::new(labels, directed, bidirected, vec![]).unwrap()
}

// ---------------------------------------------------------------------
// numeric evaluation of the Gaussian parametrization, via Gauss-Jordan
// matrix inversion (independent of the symbolic nilpotent-series route)
// ---------------------------------------------------------------------

pub fn rand_rat(rng: &mut StdRng) -> Rational {
    rat(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn rand_nonzero(rng: &mut StdRng) -> Rational {
    loop {
        let r = rand_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &f;
                    a[r][j] -= av;
                    let iv = &inv[col][j] * &f;
                    inv[r][j] -= iv;
                }
            }
        }
    }
    Some(inv)
}

pub fn matmul_num(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for t in 0..k {
                        acc += &a[i][t] * &b[t][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// A random point of the parametrized Gaussian model: sampled edge
/// parameters plus the resulting exact covariance entries, laid out in the
/// ring's variable order.
pub fn random_gaussian_point(r: &gmodels::GaussianRingSpec, rng: &mut StdRng) -> Vec<Rational> {
    let n = r.n();
    let lambda: Vec<Rational> = r.l_edges().iter().map(|_| rand_rat(rng)).collect();
    let psi: Vec<Rational> = r
        .p_pairs()
        .iter()
        .map(|&(i, j)| {
            if i == j {
                rand_nonzero(rng)
            } else {
                rand_rat(rng)
            }
        })
        .collect();
    let mut i_minus_l: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for (k, &(u, v)) in r.l_edges().iter().enumerate() {
        i_minus_l[u][v] = -lambda[k].clone();
    }
    let mut psi_mat: Vec<Vec<Rational>> = (0..n)
        .map(|_| (0..n).map(|_| Rational::zero()).collect())
        .collect();
    for (k, &(u, v)) in r.p_pairs().iter().enumerate() {
        psi_mat[u][v] = psi[k].clone();
        psi_mat[v][u] = psi[k].clone();
    }
    let inv = invert(&i_minus_l).expect("I - Lambda is unipotent");
    let invt: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| inv[j][i].clone()).collect())
        .collect();
    let sigma = matmul_num(&matmul_num(&invt, &psi_mat), &inv);
    let mut point = vec![Rational::zero(); r.ring().num_vars()];
    for (k, v) in lambda.into_iter().enumerate() {
        point[k] = v;
    }
    for (k, v) in psi.into_iter().enumerate() {
        point[r.l_edges().len() + k] = v;
    }
    for i in 0..n {
        for j in i..n {
            point[r.s_var_index(i, j)] = sigma[i][j].clone();
        }
    }
    point
}

pub fn assert_all_vanish(gens: &[Polynomial], point: &[Rational], what: &str) {
    for g in gens {
        assert!(
            g.evaluate(point).unwrap().is_zero(),
            "{what}: generator {g} does not vanish"
        );
    }
}
