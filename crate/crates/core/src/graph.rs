//! GKM graphs with an axial function, their validation, and orientation by a
//! generic covector.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{GkmError, Result};
use crate::polyring::{Rational, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub mu: WeightVector,
}

/// An edge stored by vertex indices. `weight` is the weight read from `from`
/// toward `to`; the reverse reading is its negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: WeightVector,
}

impl Edge {
    pub fn other_end(&self, v: usize) -> usize {
        if v == self.from {
            self.to
        } else {
            self.from
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmGraph {
    rank: usize,
    valence: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    incident: Vec<Vec<usize>>,
}

impl GkmGraph {
    /// Builds a graph from vertices and `(from, to, weight)` triples.
    /// Only structural problems are rejected here; axioms are checked by
    /// [`GkmGraph::validate`].
    pub fn new(
        rank: usize,
        valence: usize,
        vertices: Vec<Vertex>,
        edges: Vec<(String, String, WeightVector)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(GkmError::Malformed("rank must be positive".into()));
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.mu.rank() != rank {
                return Err(GkmError::Malformed(format!(
                    "vertex {} has a position of rank {}",
                    v.id,
                    v.mu.rank()
                )));
            }
            if index.insert(v.id.clone(), i).is_some() {
                return Err(GkmError::Malformed(format!("duplicate vertex id {}", v.id)));
            }
        }
        let mut stored = Vec::with_capacity(edges.len());
        let mut incident = vec![Vec::new(); vertices.len()];
        for (a, b, w) in edges {
            let from = *index
                .get(&a)
                .ok_or_else(|| GkmError::Malformed(format!("edge refers to unknown vertex {a}")))?;
            let to = *index
                .get(&b)
                .ok_or_else(|| GkmError::Malformed(format!("edge refers to unknown vertex {b}")))?;
            if from == to {
                return Err(GkmError::Malformed(format!("loop at vertex {a}")));
            }
            if w.rank() != rank {
                return Err(GkmError::Malformed(format!("edge {a}-{b} has a weight of rank {}", w.rank())));
            }
            if w.is_zero() {
                return Err(GkmError::Malformed(format!("edge {a}-{b} has zero weight")));
            }
            incident[from].push(stored.len());
            incident[to].push(stored.len());
            stored.push(Edge { from, to, weight: w });
        }
        Ok(GkmGraph {
            rank,
            valence,
            vertices,
            edges: stored,
            index,
            incident,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn mu(&self, v: usize) -> &WeightVector {
        &self.vertices[v].mu
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn lookup(&self, id: &str) -> Result<usize> {
        self.vertex_index(id)
            .ok_or_else(|| GkmError::Malformed(format!("no vertex named {id}")))
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().map(move |&e| self.edges[e].other_end(v))
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incident[u]
            .iter()
            .copied()
            .find(|&e| self.edges[e].other_end(u) == v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Weight of edge `e` read outward from its endpoint `v`.
    pub fn outward_weight(&self, e: usize, v: usize) -> WeightVector {
        let edge = &self.edges[e];
        if v == edge.from {
            edge.weight.clone()
        } else {
            assert_eq!(v, edge.to, "vertex is not an endpoint of the edge");
            -&edge.weight
        }
    }

    pub fn edge_label(&self, e: usize) -> String {
        let edge = &self.edges[e];
        format!("{}-{}", self.id(edge.from), self.id(edge.to))
    }

    /// The other outward weights at endpoint `v` of `e`.
    fn other_weights(&self, e: usize, v: usize) -> Vec<WeightVector> {
        self.incident[v]
            .iter()
            .filter(|&&f| f != e)
            .map(|&f| self.outward_weight(f, v))
            .collect()
    }

    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();

        let mut failures = Vec::new();
        for (v, inc) in self.incident.iter().enumerate() {
            if inc.len() != self.valence {
                failures.push(format!(
                    "vertex {} has {} edges, expected {}",
                    self.id(v),
                    inc.len(),
                    self.valence
                ));
            }
        }
        checks.push(Check::new("valence", failures));

        let mut failures = Vec::new();
        let mut seen = BTreeSet::new();
        for (e, edge) in self.edges.iter().enumerate() {
            let key = (edge.from.min(edge.to), edge.from.max(edge.to));
            if !seen.insert(key) {
                failures.push(format!("edge {} duplicates an earlier edge", self.edge_label(e)));
            }
        }
        checks.push(Check::new("simple graph", failures));

        let mut failures = Vec::new();
        for v in 0..self.vertices.len() {
            let inc = &self.incident[v];
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    if self.edges[e].weight.is_parallel(&self.edges[f].weight) {
                        failures.push(format!(
                            "weights of {} and {} are dependent at {}",
                            self.edge_label(e),
                            self.edge_label(f),
                            self.id(v)
                        ));
                    }
                }
            }
        }
        checks.push(Check::new("pairwise independence", failures));

        let mut failures = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            let diff = self.mu(edge.to) - self.mu(edge.from);
            match diff.ratio_to(&edge.weight) {
                Some(s) if s.is_positive() => {}
                _ => failures.push(format!(
                    "edge {}: position difference {} is not a positive multiple of {}",
                    self.edge_label(e),
                    diff,
                    edge.weight
                )),
            }
        }
        checks.push(Check::new("moment compatibility", failures));

        let mut failures = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            let at_from = self.other_weights(e, edge.from);
            let at_to = self.other_weights(e, edge.to);
            if at_from.len() != at_to.len() || find_pairing(&at_from, &at_to, &edge.weight).is_none() {
                failures.push(format!(
                    "edge {}: no pairing of the other weights at {} and {} congruent mod {}",
                    self.edge_label(e),
                    self.id(edge.from),
                    self.id(edge.to),
                    edge.weight
                ));
            }
        }
        checks.push(Check::new("weight pairing", failures));

        let failures = if self.is_connected() {
            Vec::new()
        } else {
            vec!["graph is disconnected".to_string()]
        };
        checks.push(Check::new("connected", failures));

        let failures = if 2 * self.edges.len() == self.valence * self.vertices.len() {
            Vec::new()
        } else {
            vec![format!(
                "2*{} edges != {} * {} vertices",
                self.edges.len(),
                self.valence,
                self.vertices.len()
            )]
        };
        checks.push(Check::new("edge count", failures));

        ValidationReport { checks }
    }

    /// Validates and turns a failed report into an error.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(GkmError::ValidationError(Box::new(report)))
        }
    }

    pub fn orient(&self, xi: &WeightVector) -> Result<OrientedGkmGraph> {
        OrientedGkmGraph::new(self.clone(), xi.clone())
    }
}

/// Exhaustive search for a bijection `a[i] -> b[perm[i]]` with every
/// difference a multiple of `alpha`.
pub fn find_pairing(a: &[WeightVector], b: &[WeightVector], alpha: &WeightVector) -> Option<Vec<usize>> {
    fn rec(
        a: &[WeightVector],
        b: &[WeightVector],
        alpha: &WeightVector,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
    ) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if !used[j] && (&a[i] - &b[j]).is_parallel(alpha) {
                used[j] = true;
                perm.push(j);
                if rec(a, b, alpha, used, perm) {
                    return true;
                }
                perm.pop();
                used[j] = false;
            }
        }
        false
    }
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut perm = Vec::new();
    rec(a, b, alpha, &mut used, &mut perm).then_some(perm)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str, failures: Vec<String>) -> Self {
        Check {
            name: name.to_string(),
            passed: failures.is_empty(),
            failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<22} {}", c.name, if c.passed { "ok" } else { "FAILED" })?;
            for msg in &c.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        Ok(())
    }
}

/// Down-degrees, Morse indices and Betti numbers of an orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseProfile {
    pub down_degree: Vec<usize>,
    pub morse_index: Vec<usize>,
    /// `betti[i]` is b_{2i}; odd Betti numbers vanish.
    pub betti: Vec<usize>,
    /// In the six-dimensional case, whether b_2 = |V|/2 - 1.
    pub half_count_check: Option<bool>,
}

/// A GKM graph oriented by a generic covector.
#[derive(Clone, Debug)]
pub struct OrientedGkmGraph {
    graph: GkmGraph,
    xi: WeightVector,
    height: Vec<Rational>,
    ascends_from_first: Vec<bool>,
    down_degree: Vec<usize>,
}

impl OrientedGkmGraph {
    pub fn new(graph: GkmGraph, xi: WeightVector) -> Result<Self> {
        if xi.rank() != graph.rank() {
            return Err(GkmError::RankMismatch {
                expected: graph.rank(),
                found: xi.rank(),
            });
        }
        let mut ascends_from_first = Vec::with_capacity(graph.edges().len());
        for (e, edge) in graph.edges().iter().enumerate() {
            let s = edge.weight.dot(&xi);
            if s.is_zero() {
                return Err(GkmError::NotGeneric(graph.edge_label(e)));
            }
            ascends_from_first.push(s.is_positive());
        }
        let height = graph.vertices().iter().map(|v| v.mu.dot(&xi)).collect();
        let mut down_degree = vec![0; graph.vertex_count()];
        for (e, edge) in graph.edges().iter().enumerate() {
            let top = if ascends_from_first[e] { edge.to } else { edge.from };
            down_degree[top] += 1;
        }
        Ok(OrientedGkmGraph {
            graph,
            xi,
            height,
            ascends_from_first,
            down_degree,
        })
    }

    pub fn graph(&self) -> &GkmGraph {
        &self.graph
    }

    pub fn xi(&self) -> &WeightVector {
        &self.xi
    }

    pub fn valence(&self) -> usize {
        self.graph.valence()
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn id(&self, v: usize) -> &str {
        self.graph.id(v)
    }

    /// ⟨μ(v), ξ⟩.
    pub fn height(&self, v: usize) -> &Rational {
        &self.height[v]
    }

    pub fn initial(&self, e: usize) -> usize {
        let edge = &self.graph.edges()[e];
        if self.ascends_from_first[e] {
            edge.from
        } else {
            edge.to
        }
    }

    pub fn terminal(&self, e: usize) -> usize {
        let edge = &self.graph.edges()[e];
        if self.ascends_from_first[e] {
            edge.to
        } else {
            edge.from
        }
    }

    /// The weight α_e read from i(e) toward t(e).
    pub fn ascending_weight(&self, e: usize) -> WeightVector {
        self.graph.outward_weight(e, self.initial(e))
    }

    pub fn down_degree(&self, v: usize) -> usize {
        self.down_degree[v]
    }

    pub fn morse_index(&self, v: usize) -> usize {
        2 * self.down_degree[v]
    }

    /// Edges at `v` whose other end lies below `v`.
    pub fn descending_edges(&self, v: usize) -> Vec<usize> {
        self.graph
            .incident_edges(v)
            .iter()
            .copied()
            .filter(|&e| self.terminal(e) == v)
            .collect()
    }

    /// Edges at `v` whose other end lies above `v`.
    pub fn ascending_edges(&self, v: usize) -> Vec<usize> {
        self.graph
            .incident_edges(v)
            .iter()
            .copied()
            .filter(|&e| self.initial(e) == v)
            .collect()
    }

    pub fn morse_profile(&self) -> MorseProfile {
        let n = self.valence();
        let mut betti = vec![0; n + 1];
        for &d in &self.down_degree {
            if d <= n {
                betti[d] += 1;
            }
        }
        let half_count_check = (n == 3 && self.rank() == 2).then(|| {
            let v = self.vertex_count();
            v.is_multiple_of(2) && betti[1] + 1 == v / 2
        });
        MorseProfile {
            down_degree: self.down_degree.clone(),
            morse_index: self.down_degree.iter().map(|d| 2 * d).collect(),
            betti,
            half_count_check,
        }
    }

    /// First edge along which the down-degree fails to increase.
    pub fn index_violation(&self) -> Option<usize> {
        (0..self.graph.edges().len())
            .find(|&e| self.down_degree[self.initial(e)] >= self.down_degree[self.terminal(e)])
    }

    pub fn is_index_increasing(&self) -> bool {
        self.index_violation().is_none()
    }

    pub fn require_index_increasing(&self) -> Result<()> {
        match self.index_violation() {
            None => Ok(()),
            Some(e) => Err(GkmError::NotIndexIncreasing(self.graph.edge_label(e))),
        }
    }

    fn reachable(&self, v: usize, upward: bool) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            let next = if upward {
                self.ascending_edges(u)
            } else {
                self.descending_edges(u)
            };
            for e in next {
                let w = self.graph.edges()[e].other_end(u);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn ascending_reachable(&self, v: usize) -> BTreeSet<usize> {
        self.reachable(v, true)
    }

    pub fn descending_reachable(&self, v: usize) -> BTreeSet<usize> {
        self.reachable(v, false)
    }

    fn unique_with_degree(&self, d: usize) -> Option<usize> {
        let mut it = (0..self.vertex_count()).filter(|&v| self.down_degree[v] == d);
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// The unique vertex of index zero, when there is one.
    pub fn bottom(&self) -> Option<usize> {
        self.unique_with_degree(0)
    }

    /// The unique vertex with every edge descending, when there is one.
    pub fn top(&self) -> Option<usize> {
        self.unique_with_degree(self.valence())
    }

    pub fn require_bottom(&self) -> Result<usize> {
        self.bottom()
            .ok_or_else(|| GkmError::Malformed("no unique vertex of index zero".into()))
    }

    pub fn require_top(&self) -> Result<usize> {
        self.top()
            .ok_or_else(|| GkmError::Malformed("no unique vertex of maximal index".into()))
    }

    /// Vertices with down-degree `d`, sorted by height then id.
    pub fn vertices_of_degree(&self, d: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.down_degree[v] == d)
            .collect();
        vs.sort_by(|&a, &b| {
            self.height[a]
                .cmp(&self.height[b])
                .then_with(|| self.id(a).cmp(self.id(b)))
        });
        vs
    }

    pub fn require_six_dim(&self) -> Result<()> {
        if self.valence() != 3 || self.rank() != 2 {
            return Err(GkmError::ScopeError(format!(
                "needs valence 3 and rank 2, got valence {} and rank {}",
                self.valence(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// Structural facts every six-dimensional index-increasing instance has:
    /// at most eight vertices, index-two vertices adjacent to the bottom and
    /// index-four vertices adjacent to the top.
    pub fn check_six_dim_structure(&self) -> Result<()> {
        self.require_six_dim()?;
        self.require_index_increasing()?;
        if self.vertex_count() > 8 {
            return Err(GkmError::InfeasibleInstance(format!(
                "{} vertices, at most 8 are possible",
                self.vertex_count()
            )));
        }
        let o = self.require_bottom()?;
        let r = self.require_top()?;
        for v in self.vertices_of_degree(1) {
            if !self.graph.adjacent(v, o) {
                return Err(GkmError::InfeasibleInstance(format!(
                    "index-two vertex {} is not adjacent to {}",
                    self.id(v),
                    self.id(o)
                )));
            }
        }
        for v in self.vertices_of_degree(2) {
            if !self.graph.adjacent(v, r) {
                return Err(GkmError::InfeasibleInstance(format!(
                    "index-four vertex {} is not adjacent to {}",
                    self.id(v),
                    self.id(r)
                )));
            }
        }
        Ok(())
    }

    /// The ascending cycle through an index-two vertex `p`: `[p, q, r]` when
    /// `p` is adjacent to the top `r`, otherwise `[p, q, r, q']` with the two
    /// upper neighbours ordered by height then id.
    pub fn ascending_cycle(&self, p: usize) -> Result<Vec<usize>> {
        if self.valence() != 3 {
            return Err(GkmError::ScopeError(format!(
                "ascending cycles need valence 3, got {}",
                self.valence()
            )));
        }
        self.require_index_increasing()?;
        if self.down_degree[p] != 1 {
            return Err(GkmError::ScopeError(format!(
                "{} has index {}, not 2",
                self.id(p),
                self.morse_index(p)
            )));
        }
        let r = self.require_top()?;
        let mut ups: Vec<usize> = self
            .ascending_edges(p)
            .into_iter()
            .map(|e| self.graph.edges()[e].other_end(p))
            .collect();
        ups.sort_by(|&a, &b| {
            self.height[a]
                .cmp(&self.height[b])
                .then_with(|| self.id(a).cmp(self.id(b)))
        });
        let cycle = if let Some(pos) = ups.iter().position(|&u| u == r) {
            let q = ups[1 - pos];
            vec![p, q, r]
        } else {
            vec![p, ups[0], r, ups[1]]
        };
        let reach = self.ascending_reachable(p);
        let members: BTreeSet<usize> = cycle.iter().copied().collect();
        let closed = (0..cycle.len()).all(|i| self.graph.adjacent(cycle[i], cycle[(i + 1) % cycle.len()]));
        if reach != members || !closed {
            return Err(GkmError::Malformed(format!(
                "vertices ascending from {} do not form a cycle",
                self.id(p)
            )));
        }
        Ok(cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;

    fn wv(a: i64, b: i64) -> WeightVector {
        WeightVector::from_ints(&[a, b])
    }

    fn cp3(bd_weight: WeightVector) -> GkmGraph {
        let vs = [("A", 0, 0), ("B", 1, 0), ("C", 0, 1), ("D", -1, -2)]
            .iter()
            .map(|&(id, a, b)| Vertex {
                id: id.into(),
                mu: wv(a, b),
            })
            .collect();
        let es = vec![
            ("A", "B", wv(1, 0)),
            ("A", "C", wv(0, 1)),
            ("A", "D", wv(-1, -2)),
            ("B", "C", wv(-1, 1)),
            ("B", "D", bd_weight),
            ("C", "D", wv(-1, -3)),
        ]
        .into_iter()
        .map(|(a, b, w)| (a.to_string(), b.to_string(), w))
        .collect();
        GkmGraph::new(2, 3, vs, es).unwrap()
    }

    #[test]
    fn cp3_validates() {
        let report = cp3(wv(-2, -2)).validate();
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn primitive_weight_breaks_pairing() {
        let report = cp3(wv(-1, -1)).validate();
        assert!(!report.is_valid());
        let pairing = report.check("weight pairing").unwrap();
        assert!(!pairing.passed);
        assert!(pairing.failures.iter().any(|f| f.contains('B')));
        assert!(report.check("moment compatibility").unwrap().passed);
    }

    #[test]
    fn single_vertex_is_valid() {
        let g = GkmGraph::new(
            2,
            0,
            vec![Vertex {
                id: "pt".into(),
                mu: wv(0, 0),
            }],
            vec![],
        )
        .unwrap();
        assert!(g.validate().is_valid());
    }

    #[test]
    fn orientation_and_profile() {
        let g = cp3(wv(-2, -2));
        let og = g.orient(&wv(1, 3)).unwrap();
        let d: Vec<usize> = ["A", "B", "C", "D"]
            .iter()
            .map(|id| og.down_degree(g.lookup(id).unwrap()))
            .collect();
        assert_eq!(d, vec![1, 2, 3, 0]);
        let profile = og.morse_profile();
        assert_eq!(profile.betti, vec![1, 1, 1, 1]);
        assert_eq!(profile.half_count_check, Some(true));
        assert!(og.is_index_increasing());
        assert_eq!(*og.height(g.lookup("D").unwrap()), int(-7));
    }

    #[test]
    fn non_generic_covector() {
        let g = cp3(wv(-2, -2));
        match g.orient(&wv(0, 1)) {
            Err(GkmError::NotGeneric(e)) => assert_eq!(e, "A-B"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reversed_covector_flips_degrees() {
        let g = cp3(wv(-2, -2));
        let up = g.orient(&wv(1, 3)).unwrap();
        let down = g.orient(&wv(-1, -3)).unwrap();
        for v in 0..4 {
            assert_eq!(up.down_degree(v) + down.down_degree(v), 3);
        }
        assert!(down.is_index_increasing());
    }

    #[test]
    fn reachability_and_cycles() {
        let g = cp3(wv(-2, -2));
        let og = g.orient(&wv(1, 3)).unwrap();
        let a = g.lookup("A").unwrap();
        let names: Vec<&str> = og.ascending_reachable(a).iter().map(|&v| g.id(v)).collect();
        assert_eq!(names, vec!["A", "B", "C"]);
        let d = og.require_bottom().unwrap();
        assert_eq!(og.ascending_reachable(d).len(), 4);
        let c = og.require_top().unwrap();
        assert_eq!(og.ascending_reachable(c).len(), 1);
        let cycle: Vec<&str> = og.ascending_cycle(a).unwrap().iter().map(|&v| g.id(v)).collect();
        assert_eq!(cycle, vec!["A", "B", "C"]);
        og.check_six_dim_structure().unwrap();
    }

    #[test]
    fn equal_indices_along_an_edge_are_not_increasing() {
        // a path u - v - w climbing in height: d = (0, 1, 1)
        let vs = vec![
            Vertex { id: "u".into(), mu: wv(0, 0) },
            Vertex { id: "v".into(), mu: wv(1, 1) },
            Vertex { id: "w".into(), mu: wv(0, 2) },
        ];
        let es = vec![("u", "v", wv(1, 1)), ("v", "w", wv(-1, 1))]
            .into_iter()
            .map(|(a, b, w)| (a.to_string(), b.to_string(), w))
            .collect();
        let g = GkmGraph::new(2, 2, vs, es).unwrap();
        let og = g.orient(&wv(0, 1)).unwrap();
        assert_eq!(og.down_degree(1), 1);
        assert_eq!(og.down_degree(2), 1);
        assert!(!og.is_index_increasing());
        assert_eq!(og.index_violation(), Some(1));
    }
}
