//! Mixed graphs and the separation machinery: connectivity separation,
//! moralization, d-separation, and trek min-cuts.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A sorted set of vertex positions (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut verts: Vec<usize>) -> VertexSet {
        verts.sort_unstable();
        verts.dedup();
        VertexSet(verts)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// A graph with directed, bidirected, and undirected edge classes over a
/// common vertex set. Vertices are canonicalized at construction: labels
/// are sorted (numerically when every label parses as an integer) and all
/// set operations use the resulting positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    labels: Vec<String>,
    directed: BTreeSet<(usize, usize)>,
    bidirected: BTreeSet<(usize, usize)>, // stored with i < j
    undirected: BTreeSet<(usize, usize)>, // stored with i < j
}

fn label_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

impl MixedGraph {
    pub fn new<S: Into<String>>(
        vertices: Vec<S>,
        directed: Vec<(S, S)>,
        bidirected: Vec<(S, S)>,
        undirected: Vec<(S, S)>,
    ) -> Result<MixedGraph> {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Invalid(format!("duplicate vertex label {}", w[0])));
            }
        }
        fn pos(labels: &[String], l: &str) -> Result<usize> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Invalid(format!("unknown vertex label {l}")))
        }
        let mut dir = BTreeSet::new();
        let mut bidir = BTreeSet::new();
        let mut undir = BTreeSet::new();
        for (a, b) in directed {
            let (a, b) = (a.into(), b.into());
            let (u, v) = (pos(&labels, &a)?, pos(&labels, &b)?);
            if u == v {
                return Err(Error::Invalid(format!("self-loop at {a}")));
            }
            dir.insert((u, v));
        }
        for (a, b) in bidirected {
            let (a, b) = (a.into(), b.into());
            let (u, v) = (pos(&labels, &a)?, pos(&labels, &b)?);
            if u == v {
                return Err(Error::Invalid(format!("self-loop at {a}")));
            }
            bidir.insert((u.min(v), u.max(v)));
        }
        for (a, b) in undirected {
            let (a, b) = (a.into(), b.into());
            let (u, v) = (pos(&labels, &a)?, pos(&labels, &b)?);
            if u == v {
                return Err(Error::Invalid(format!("self-loop at {a}")));
            }
            undir.insert((u.min(v), u.max(v)));
        }
        Ok(MixedGraph {
            labels,
            directed: dir,
            bidirected: bidir,
            undirected: undir,
        })
    }

    /// A directed graph on vertices named by the labels.
    pub fn digraph<S: Into<String> + Clone>(
        vertices: Vec<S>,
        edges: Vec<(S, S)>,
    ) -> Result<MixedGraph> {
        MixedGraph::new(vertices, edges, Vec::new(), Vec::new())
    }

    /// An undirected graph on vertices named by the labels.
    pub fn ugraph<S: Into<String> + Clone>(
        vertices: Vec<S>,
        edges: Vec<(S, S)>,
    ) -> Result<MixedGraph> {
        MixedGraph::new(vertices, Vec::new(), Vec::new(), edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.directed.iter().copied()
    }

    pub fn bidirected_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bidirected.iter().copied()
    }

    pub fn undirected_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.undirected.iter().copied()
    }

    pub fn has_directed(&self, u: usize, v: usize) -> bool {
        self.directed.contains(&(u, v))
    }

    pub fn has_bidirected(&self, u: usize, v: usize) -> bool {
        self.bidirected.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_undirected(&self, u: usize, v: usize) -> bool {
        self.undirected.contains(&(u.min(v), u.max(v)))
    }

    pub fn is_purely_undirected(&self) -> bool {
        self.directed.is_empty() && self.bidirected.is_empty()
    }

    pub fn is_dag(&self) -> bool {
        self.bidirected.is_empty() && self.undirected.is_empty() && self.topological_sort().is_ok()
    }

    pub fn parents(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.has_directed(u, v)).collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.has_directed(v, u)).collect()
    }

    pub fn neighbors_undirected(&self, v: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&u| self.has_undirected(u, v))
            .collect()
    }

    /// Strict descendants of `v` through directed edges.
    pub fn descendants(&self, v: usize) -> VertexSet {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.children(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n()).filter(|&u| seen[u]).collect()
    }

    /// Ancestors of the seeds, including the seeds themselves.
    pub fn ancestral_closure(&self, seeds: &VertexSet) -> VertexSet {
        let mut seen = vec![false; self.n()];
        let mut queue: VecDeque<usize> = seeds.iter().collect();
        for v in seeds.iter() {
            seen[v] = true;
        }
        while let Some(u) = queue.pop_front() {
            for w in self.parents(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n()).filter(|&u| seen[u]).collect()
    }

    /// Deterministic topological order of the directed part, ties broken by
    /// vertex position. Errors with a witness cycle when the directed part
    /// is cyclic.
    pub fn topological_sort(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for &(_, v) in &self.directed {
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            out.push(v);
            for w in self.children(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if out.len() == n {
            Ok(out)
        } else {
            Err(Error::Cycle(self.find_cycle()))
        }
    }

    fn find_cycle(&self) -> String {
        // walk forward from any vertex on a cycle until a repeat appears
        let n = self.n();
        let mut color = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        fn dfs(
            g: &MixedGraph,
            v: usize,
            color: &mut Vec<u8>,
            stack: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            color[v] = 1;
            stack.push(v);
            for w in g.children(v) {
                if color[w] == 1 {
                    let start = stack.iter().position(|&x| x == w).unwrap();
                    return Some(stack[start..].to_vec());
                }
                if color[w] == 0 {
                    if let Some(c) = dfs(g, w, color, stack) {
                        return Some(c);
                    }
                }
            }
            stack.pop();
            color[v] = 2;
            None
        }
        for v in 0..n {
            if color[v] == 0 {
                if let Some(cycle) = dfs(self, v, &mut color, &mut stack) {
                    let mut names: Vec<&str> = cycle.iter().map(|&v| self.label(v)).collect();
                    names.push(self.label(cycle[0]));
                    return names.join(" -> ");
                }
            }
        }
        "unknown".into()
    }

    fn check_disjoint(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<()> {
        for s in [a, b, c] {
            for v in s.iter() {
                if v >= self.n() {
                    return Err(Error::VertexRange {
                        vertex: v,
                        n: self.n(),
                    });
                }
            }
        }
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::Overlap("A, B, C must be pairwise disjoint".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::Invalid("A and B must be nonempty".into()));
        }
        Ok(())
    }

    /// Whether `c` separates `a` from `b` in a purely undirected graph:
    /// no path from `a` to `b` once the vertices of `c` are deleted.
    pub fn separates(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
        if !self.is_purely_undirected() {
            return Err(Error::UnsupportedGraph(
                "separation is defined on undirected graphs".into(),
            ));
        }
        self.check_disjoint(a, b, c)?;
        let mut seen = vec![false; self.n()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for v in a.iter() {
            seen[v] = true;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            if b.contains(u) {
                return Ok(false);
            }
            for w in self.neighbors_undirected(u) {
                if !seen[w] && !c.contains(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(true)
    }

    /// Moral graph of a DAG: the skeleton plus an undirected edge between
    /// every pair of parents sharing a child.
    pub fn moralize(&self) -> Result<MixedGraph> {
        if !self.bidirected.is_empty() || !self.undirected.is_empty() {
            return Err(Error::UnsupportedGraph("moralization expects a DAG".into()));
        }
        self.topological_sort()?;
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(u, v) in &self.directed {
            edges.insert((u.min(v), u.max(v)));
        }
        for v in 0..self.n() {
            let pa = self.parents(v);
            for i in 0..pa.len() {
                for j in i + 1..pa.len() {
                    edges.insert((pa[i].min(pa[j]), pa[i].max(pa[j])));
                }
            }
        }
        Ok(MixedGraph {
            labels: self.labels.clone(),
            directed: BTreeSet::new(),
            bidirected: BTreeSet::new(),
            undirected: edges,
        })
    }

    /// d-separation via the moralized ancestral graph: `c` d-separates `a`
    /// from `b` iff `c` separates them in the moralization of the induced
    /// subgraph on the ancestral closure of `a + b + c`.
    pub fn d_separates(&self, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<bool> {
        if !self.bidirected.is_empty() || !self.undirected.is_empty() {
            return Err(Error::UnsupportedGraph("d-separation expects a DAG".into()));
        }
        self.topological_sort()?;
        self.check_disjoint(a, b, c)?;
        let closure = a.union(b).union(c);
        let closure = self.ancestral_closure(&closure);
        let inside = |v: usize| closure.contains(v);

        // moral adjacency restricted to the ancestral set
        let n = self.n();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in &self.directed {
            if inside(u) && inside(v) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        for v in 0..n {
            if !inside(v) {
                continue;
            }
            let pa: Vec<usize> = self.parents(v).into_iter().filter(|&p| inside(p)).collect();
            for i in 0..pa.len() {
                for j in i + 1..pa.len() {
                    adj[pa[i]].insert(pa[j]);
                    adj[pa[j]].insert(pa[i]);
                }
            }
        }

        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for v in a.iter() {
            seen[v] = true;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            if b.contains(u) {
                return Ok(false);
            }
            for &w in &adj[u] {
                if !seen[w] && !c.contains(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(true)
    }

    /// The minimum, over trek-separating pairs `(C_A, C_B)`, of
    /// `#C_A + #C_B`, computed as a minimum vertex cut in the two-copy flow
    /// network: a top copy with directed edges reversed, a bottom copy with
    /// directed edges forward, copies linked at each vertex and across
    /// bidirected edges, unit vertex capacities, sources `a` in the top
    /// copy and sinks `b` in the bottom copy.
    pub fn trek_min_cut(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        if !self.undirected.is_empty() {
            return Err(Error::UnsupportedGraph(
                "trek separation expects directed and bidirected edges only".into(),
            ));
        }
        self.topological_sort()?;
        for s in [a, b] {
            for v in s.iter() {
                if v >= self.n() {
                    return Err(Error::VertexRange {
                        vertex: v,
                        n: self.n(),
                    });
                }
            }
        }
        let n = self.n();
        // node ids after vertex splitting:
        //   top_in(v) = 2v, top_out(v) = 2v+1,
        //   bot_in(v) = 2n+2v, bot_out(v) = 2n+2v+1,
        //   source = 4n, sink = 4n+1
        let top_in = |v: usize| 2 * v;
        let top_out = |v: usize| 2 * v + 1;
        let bot_in = |v: usize| 2 * n + 2 * v;
        let bot_out = |v: usize| 2 * n + 2 * v + 1;
        let (source, sink) = (4 * n, 4 * n + 1);
        let mut net = MaxFlow::new(4 * n + 2);
        let inf = (2 * n + 2) as i64;
        for v in 0..n {
            net.add_edge(top_in(v), top_out(v), 1);
            net.add_edge(bot_in(v), bot_out(v), 1);
            net.add_edge(top_out(v), bot_in(v), inf);
        }
        for &(u, v) in &self.directed {
            // reversed in the top copy, forward in the bottom copy
            net.add_edge(top_out(v), top_in(u), inf);
            net.add_edge(bot_out(u), bot_in(v), inf);
        }
        for &(u, v) in &self.bidirected {
            net.add_edge(top_out(u), bot_in(v), inf);
            net.add_edge(top_out(v), bot_in(u), inf);
        }
        for v in a.iter() {
            net.add_edge(source, top_in(v), inf);
        }
        for v in b.iter() {
            net.add_edge(bot_out(v), sink, inf);
        }
        Ok(net.max_flow(source, sink) as usize)
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}", self.labels.join(" "))?;
        for &(u, v) in &self.directed {
            write!(f, "; {} -> {}", self.label(u), self.label(v))?;
        }
        for &(u, v) in &self.bidirected {
            write!(f, "; {} <-> {}", self.label(u), self.label(v))?;
        }
        for &(u, v) in &self.undirected {
            write!(f, "; {} -- {}", self.label(u), self.label(v))?;
        }
        Ok(())
    }
}

/// Edmonds-Karp max flow on a small network.
struct MaxFlow {
    // (to, reverse edge index, capacity)
    adj: Vec<Vec<(usize, usize, i64)>>,
}

impl MaxFlow {
    fn new(nodes: usize) -> MaxFlow {
        MaxFlow {
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let (fl, tl) = (self.adj[from].len(), self.adj[to].len());
        self.adj[from].push((to, tl, cap));
        self.adj[to].push((from, fl, 0));
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            // BFS for a shortest augmenting path
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for (idx, &(v, _, cap)) in self.adj[u].iter().enumerate() {
                    if cap > 0 && prev[v].is_none() && v != s {
                        prev[v] = Some((u, idx));
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                return flow;
            }
            // bottleneck
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                let (u, idx) = prev[v].unwrap();
                bottleneck = bottleneck.min(self.adj[u][idx].2);
                v = u;
            }
            // augment
            let mut v = t;
            while v != s {
                let (u, idx) = prev[v].unwrap();
                self.adj[u][idx].2 -= bottleneck;
                let rev = self.adj[u][idx].1;
                self.adj[v][rev].2 += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    fn five_cycle() -> MixedGraph {
        MixedGraph::ugraph(
            vec!["1", "2", "3", "4", "5"],
            vec![("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5")],
        )
        .unwrap()
    }

    fn dag_on_five() -> MixedGraph {
        MixedGraph::digraph(
            vec!["a", "b", "c", "d", "e"],
            vec![("a", "d"), ("b", "d"), ("c", "d"), ("c", "e"), ("d", "e")],
        )
        .unwrap()
    }

    #[test]
    fn topological_sort_examples() {
        let path = MixedGraph::digraph(
            vec!["1", "2", "3", "4"],
            vec![("1", "2"), ("2", "3"), ("3", "4")],
        )
        .unwrap();
        assert_eq!(path.topological_sort().unwrap(), vec![0, 1, 2, 3]);

        let edgeless = MixedGraph::digraph(vec!["1", "2", "3"], vec![]).unwrap();
        assert_eq!(edgeless.topological_sort().unwrap(), vec![0, 1, 2]);

        let g = dag_on_five();
        let order = g.topological_sort().unwrap();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        for (u, v) in g.directed_edges() {
            let pu = order.iter().position(|&x| x == u).unwrap();
            let pv = order.iter().position(|&x| x == v).unwrap();
            assert!(pu < pv);
        }

        let cyclic = MixedGraph::digraph(vec!["1", "2"], vec![("1", "2"), ("2", "1")]).unwrap();
        assert!(matches!(cyclic.topological_sort(), Err(Error::Cycle(_))));
    }

    #[test]
    fn numeric_labels_sort_numerically() {
        let g = MixedGraph::digraph(vec!["10", "2", "1"], vec![("1", "10")]).unwrap();
        assert_eq!(g.labels(), &["1", "2", "10"]);
        assert!(g.has_directed(0, 2));
    }

    #[test]
    fn separation_on_the_five_cycle() {
        let g = five_cycle();
        // C = {2, 5} separates {1} from {3, 4}
        assert!(g.separates(&vs(&[0]), &vs(&[2, 3]), &vs(&[1, 4])).unwrap());
        // the empty set does not separate a connected pair
        assert!(!g.separates(&vs(&[0]), &vs(&[2]), &vs(&[])).unwrap());
        // disjointness violations are errors
        assert!(matches!(
            g.separates(&vs(&[0]), &vs(&[0, 2]), &vs(&[])),
            Err(Error::Overlap(_))
        ));
    }

    #[test]
    fn isolated_vertices_are_separated() {
        let g = MixedGraph::ugraph(vec!["1", "2"], vec![]).unwrap();
        assert!(g.separates(&vs(&[0]), &vs(&[1]), &vs(&[])).unwrap());
    }

    #[test]
    fn moralize_examples() {
        // collider a -> c <- b turns into a triangle
        let collider =
            MixedGraph::digraph(vec!["a", "b", "c"], vec![("a", "c"), ("b", "c")]).unwrap();
        let moral = collider.moralize().unwrap();
        assert!(moral.has_undirected(0, 1));
        assert!(moral.has_undirected(0, 2));
        assert!(moral.has_undirected(1, 2));

        // chain 1 -> 2 -> 3 stays a path
        let chain = MixedGraph::digraph(vec!["1", "2", "3"], vec![("1", "2"), ("2", "3")]).unwrap();
        let moral = chain.moralize().unwrap();
        assert!(moral.has_undirected(0, 1));
        assert!(moral.has_undirected(1, 2));
        assert!(!moral.has_undirected(0, 2));

        // d's parents {a, b, c} become a clique
        let moral = dag_on_five().moralize().unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(moral.has_undirected(i, j));
        }
        // moralization contains the skeleton
        for (u, v) in dag_on_five().directed_edges() {
            assert!(moral.has_undirected(u, v));
        }
    }

    #[test]
    fn d_separation_examples() {
        let collider =
            MixedGraph::digraph(vec!["a", "b", "c"], vec![("a", "c"), ("b", "c")]).unwrap();
        assert!(collider
            .d_separates(&vs(&[0]), &vs(&[1]), &vs(&[]))
            .unwrap());
        assert!(!collider
            .d_separates(&vs(&[0]), &vs(&[1]), &vs(&[2]))
            .unwrap());

        let chain = MixedGraph::digraph(vec!["1", "2", "3"], vec![("1", "2"), ("2", "3")]).unwrap();
        assert!(chain.d_separates(&vs(&[0]), &vs(&[2]), &vs(&[1])).unwrap());
        assert!(!chain.d_separates(&vs(&[0]), &vs(&[2]), &vs(&[])).unwrap());
    }

    #[test]
    fn trek_min_cut_examples() {
        let single = MixedGraph::digraph(vec!["1"], vec![]).unwrap();
        assert_eq!(single.trek_min_cut(&vs(&[0]), &vs(&[0])).unwrap(), 1);

        let pair = MixedGraph::digraph(vec!["1", "2"], vec![]).unwrap();
        assert_eq!(pair.trek_min_cut(&vs(&[0]), &vs(&[1])).unwrap(), 0);

        // the mixed graph with directed 1->2, 1->3, 2->3, 3->4 and
        // bidirected 1<->2, 2<->4 admits no trek separation below full rank
        let mixed = MixedGraph::new(
            vec!["1", "2", "3", "4"],
            vec![("1", "2"), ("1", "3"), ("2", "3"), ("3", "4")],
            vec![("1", "2"), ("2", "4")],
            vec![],
        )
        .unwrap();
        let all = vs(&[0, 1, 2, 3]);
        assert!(mixed.trek_min_cut(&all, &all).unwrap() >= 4);
    }

    #[test]
    fn trek_min_cut_rejects_undirected_edges() {
        let g = MixedGraph::new(vec!["1", "2"], vec![], vec![], vec![("1", "2")]).unwrap();
        assert!(matches!(
            g.trek_min_cut(&vs(&[0]), &vs(&[1])),
            Err(Error::UnsupportedGraph(_))
        ));
    }

    #[test]
    fn separation_is_symmetric_and_monotone() {
        let g = five_cycle();
        let a = vs(&[0]);
        let b = vs(&[2]);
        let c = vs(&[1, 4]);
        assert_eq!(
            g.separates(&a, &b, &c).unwrap(),
            g.separates(&b, &a, &c).unwrap()
        );
        // enlarging C inside the complement of A and B preserves separation
        let larger = c.union(&vs(&[3]));
        assert!(g.separates(&a, &b, &c).unwrap());
        assert!(g.separates(&a, &b, &larger).unwrap());
    }
}
