//! Pairwise, local, and global Markov statement families of undirected
//! graphs and DAGs, with canonical deduplication and domination pruning.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, VertexSet};

/// A conditional independence statement `X_A _||_ X_B | X_C` on vertex
/// positions. Canonical form has `min(A) < min(B)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CIStatement {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl CIStatement {
    pub fn new(a: VertexSet, b: VertexSet, c: VertexSet) -> Result<CIStatement> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Invalid("CI statement needs nonempty A and B".into()));
        }
        if !a.is_disjoint(&b) || !a.is_disjoint(&c) || !b.is_disjoint(&c) {
            return Err(Error::Overlap(
                "CI statement sets must be pairwise disjoint".into(),
            ));
        }
        let mut s = CIStatement { a, b, c };
        if s.a.min_vertex() > s.b.min_vertex() {
            std::mem::swap(&mut s.a, &mut s.b);
        }
        Ok(s)
    }

    /// Render with the graph's vertex labels: `{A} _||_ {B} | {C}`.
    pub fn display<'a>(&'a self, labels: &'a [String]) -> StatementDisplay<'a> {
        StatementDisplay { stmt: self, labels }
    }

    /// Parse the `{A} _||_ {B} | {C}` line format against a label list.
    pub fn parse(line: &str, labels: &[String]) -> Result<CIStatement> {
        let err = |msg: &str| Error::Invalid(format!("statement '{line}': {msg}"));
        let (ab, c) = line.rsplit_once('|').ok_or_else(|| err("missing '|'"))?;
        let (a, b) = ab.split_once("_||_").ok_or_else(|| err("missing '_||_'"))?;
        let parse_set = |txt: &str| -> Result<VertexSet> {
            let txt = txt.trim();
            let inner = txt
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| err("sets must be brace-delimited"))?;
            let mut verts = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                let pos = labels
                    .iter()
                    .position(|l| l == part)
                    .ok_or_else(|| err(&format!("unknown vertex {part}")))?;
                verts.push(pos);
            }
            Ok(VertexSet::new(verts))
        };
        CIStatement::new(parse_set(a)?, parse_set(b)?, parse_set(c)?)
    }
}

pub struct StatementDisplay<'a> {
    stmt: &'a CIStatement,
    labels: &'a [String],
}

impl fmt::Display for StatementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &VertexSet| -> String {
            let names: Vec<&str> = s.iter().map(|v| self.labels[v].as_str()).collect();
            format!("{{{}}}", names.join(","))
        };
        write!(
            f,
            "{} _||_ {} | {}",
            set(&self.stmt.a),
            set(&self.stmt.b),
            set(&self.stmt.c)
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum GraphClass {
    Undirected,
    Dag,
}

fn classify(g: &MixedGraph) -> Result<GraphClass> {
    if g.bidirected_edges().next().is_some() {
        return Err(Error::UnsupportedGraph(
            "Markov statements are defined for undirected graphs and DAGs".into(),
        ));
    }
    let has_directed = g.directed_edges().next().is_some();
    let has_undirected = g.undirected_edges().next().is_some();
    match (has_directed, has_undirected) {
        (true, true) => Err(Error::UnsupportedGraph(
            "Markov statements need a purely undirected graph or a DAG".into(),
        )),
        (true, false) => {
            g.topological_sort()?;
            Ok(GraphClass::Dag)
        }
        // an edgeless graph is treated as undirected; the families agree
        _ => Ok(GraphClass::Undirected),
    }
}

fn all_vertices(g: &MixedGraph) -> VertexSet {
    (0..g.n()).collect()
}

/// Nondescendants of `v`, excluding `v` itself.
fn nondescendants(g: &MixedGraph, v: usize) -> VertexSet {
    let de = g.descendants(v);
    (0..g.n()).filter(|&u| u != v && !de.contains(u)).collect()
}

fn finish(mut stmts: Vec<CIStatement>) -> Vec<CIStatement> {
    stmts.sort();
    stmts.dedup();
    stmts
}

/// Pairwise Markov statements.
///
/// Undirected: `({i}, {j}, V - {i,j})` for every non-adjacent pair.
/// DAG: `({i}, {j}, nd(i) - {i,j})` for every non-adjacent pair with `j` a
/// nondescendant of `i`.
pub fn pairwise_markov(g: &MixedGraph) -> Result<Vec<CIStatement>> {
    let class = classify(g)?;
    let mut out = Vec::new();
    match class {
        GraphClass::Undirected => {
            let all = all_vertices(g);
            for i in 0..g.n() {
                for j in i + 1..g.n() {
                    if !g.has_undirected(i, j) {
                        let pair = VertexSet::new(vec![i, j]);
                        out.push(CIStatement::new(
                            VertexSet::new(vec![i]),
                            VertexSet::new(vec![j]),
                            all.minus(&pair),
                        )?);
                    }
                }
            }
        }
        GraphClass::Dag => {
            for i in 0..g.n() {
                let nd = nondescendants(g, i);
                for j in nd.iter() {
                    if g.has_directed(i, j) || g.has_directed(j, i) {
                        continue;
                    }
                    let pair = VertexSet::new(vec![i, j]);
                    out.push(CIStatement::new(
                        VertexSet::new(vec![i]),
                        VertexSet::new(vec![j]),
                        nd.minus(&pair),
                    )?);
                }
            }
        }
    }
    Ok(finish(out))
}

/// Local Markov statements.
///
/// Undirected: `({i}, V - {i} - N(i), N(i))` per vertex with a nonempty far
/// set. DAG: `({v}, nd(v) - pa(v), pa(v))` per vertex, empty-B dropped.
pub fn local_markov(g: &MixedGraph) -> Result<Vec<CIStatement>> {
    let class = classify(g)?;
    let mut out = Vec::new();
    match class {
        GraphClass::Undirected => {
            let all = all_vertices(g);
            for i in 0..g.n() {
                let closed: VertexSet = g.neighbors_undirected(i).into_iter().chain([i]).collect();
                let far = all.minus(&closed);
                if !far.is_empty() {
                    let nbrs: VertexSet = g.neighbors_undirected(i).into_iter().collect();
                    out.push(CIStatement::new(VertexSet::new(vec![i]), far, nbrs)?);
                }
            }
        }
        GraphClass::Dag => {
            for v in 0..g.n() {
                let pa: VertexSet = g.parents(v).into_iter().collect();
                let b = nondescendants(g, v).minus(&pa);
                if !b.is_empty() {
                    out.push(CIStatement::new(VertexSet::new(vec![v]), b, pa)?);
                }
            }
        }
    }
    Ok(finish(out))
}

pub const GLOBAL_MARKOV_DEFAULT_CAP: usize = 8;

/// Global Markov statements: all separated disjoint triples, with dominated
/// statements pruned. A statement is dominated when another statement with
/// the same conditioning set has `A`- and `B`-supersets (up to swapping the
/// two sides).
pub fn global_markov(g: &MixedGraph) -> Result<Vec<CIStatement>> {
    global_markov_with_cap(g, GLOBAL_MARKOV_DEFAULT_CAP)
}

pub fn global_markov_with_cap(g: &MixedGraph, cap: usize) -> Result<Vec<CIStatement>> {
    let class = classify(g)?;
    let n = g.n();
    if n > cap {
        return Err(Error::ResourceLimit {
            what: "global_markov".into(),
            detail: format!("enumeration over 4^{n} triples exceeds the cap of {cap} vertices"),
        });
    }
    // enumerate assignments of every vertex to A, B, C, or out
    let mut candidates: Vec<CIStatement> = Vec::new();
    let mut assignment = vec![0u8; n];
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut c = Vec::new();
        for (v, &slot) in assignment.iter().enumerate() {
            match slot {
                1 => a.push(v),
                2 => b.push(v),
                3 => c.push(v),
                _ => {}
            }
        }
        // fix the A/B symmetry: keep min(A) < min(B) assignments only
        if !a.is_empty() && !b.is_empty() && a[0] < b[0] {
            let a = VertexSet::new(a);
            let b = VertexSet::new(b);
            let c = VertexSet::new(c);
            let separated = match class {
                GraphClass::Undirected => g.separates(&a, &b, &c)?,
                GraphClass::Dag => g.d_separates(&a, &b, &c)?,
            };
            if separated {
                candidates.push(CIStatement::new(a, b, c)?);
            }
        }
        // next assignment
        let mut i = 0;
        loop {
            if i == n {
                let pruned = prune_dominated(candidates);
                return Ok(finish(pruned));
            }
            assignment[i] += 1;
            if assignment[i] < 4 {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn dominates(big: &CIStatement, small: &CIStatement) -> bool {
    if big.c != small.c || big == small {
        return false;
    }
    let sup = |x: &VertexSet, y: &VertexSet| y.iter().all(|v| x.contains(v));
    (sup(&big.a, &small.a) && sup(&big.b, &small.b))
        || (sup(&big.a, &small.b) && sup(&big.b, &small.a))
}

/// Keep only maximal statements under the domination order. Domination
/// requires equal conditioning sets, so the quadratic scan runs per group.
fn prune_dominated(stmts: Vec<CIStatement>) -> Vec<CIStatement> {
    let mut by_c: std::collections::BTreeMap<VertexSet, Vec<CIStatement>> = Default::default();
    for s in stmts {
        by_c.entry(s.c.clone()).or_default().push(s);
    }
    let mut out = Vec::new();
    for (_, group) in by_c {
        out.extend(
            group
                .iter()
                .filter(|s| !group.iter().any(|t| dominates(t, s)))
                .cloned(),
        );
    }
    out
}
