//! Diagram graphs: Y-shaped braid diagrams and projective-plane incidence
//! graphs, verification of matrix assignments against a diagram, induced
//! subgraph embedding, and automorphism counting.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::reflection::{braids, commutes, GroupElement};
use crate::ring::ComplexRing;

/// Which side of an incidence bipartition a node belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodePart {
    Point,
    Line,
}

/// A finite simple labeled graph; adjacent nodes stand for braiding
/// generators, non-adjacent nodes for commuting ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    parts: Option<Vec<NodePart>>,
}

impl DiagramGraph {
    pub fn new(
        labels: Vec<String>,
        edges: &[(String, String)],
        parts: Option<Vec<NodePart>>,
    ) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate node label {l}")));
            }
        }
        if let Some(p) = &parts {
            if p.len() != labels.len() {
                return Err(Error::InvalidInput("bipartition length mismatch".into()));
            }
        }
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let (&i, &j) = match (index.get(a), index.get(b)) {
                (Some(i), Some(j)) => (i, j),
                _ => return Err(Error::InvalidInput(format!("edge ({a},{b}) names unknown node"))),
            };
            if i == j {
                return Err(Error::InvalidInput(format!("loop at {a}")));
            }
            if let Some(p) = &parts {
                if p[i] == p[j] {
                    return Err(Error::InvalidInput(format!(
                        "edge ({a},{b}) joins two nodes of the same part"
                    )));
                }
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Self {
            labels,
            index,
            adj,
            parts,
        })
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn contains_node(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn part(&self, label: &str) -> Option<NodePart> {
        let i = *self.index.get(label)?;
        self.parts.as_ref().map(|p| p[i])
    }

    pub fn adjacent(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    pub fn degree(&self, label: &str) -> usize {
        self.index.get(label).map_or(0, |&i| self.adj[i].len())
    }

    pub fn neighbors(&self, label: &str) -> Vec<&str> {
        match self.index.get(label) {
            Some(&i) => self.adj[i].iter().map(|&j| self.labels[j].as_str()).collect(),
            None => Vec::new(),
        }
    }

    /// Edges as label pairs with each pair sorted, the list sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    let (a, b) = (self.labels[i].clone(), self.labels[j].clone());
                    out.push(if a <= b { (a, b) } else { (b, a) });
                }
            }
        }
        out.sort();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.labels.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == self.labels.len()
    }

    /// Unordered node pairs in sorted label order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        let mut sorted = self.labels.clone();
        sorted.sort();
        let mut out = Vec::new();
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                out.push((sorted[i].clone(), sorted[j].clone()));
            }
        }
        out
    }
}

/// The Y-shaped diagram: a central node `a` and three chains of lengths
/// p, q, r labeled b, c, d, … with the arm index as suffix.
pub fn y_diagram(p: usize, q: usize, r: usize) -> Result<DiagramGraph> {
    let arms = [p, q, r];
    if arms.iter().any(|&n| n > 25) {
        return Err(Error::InvalidInput("chain length exceeds label alphabet".into()));
    }
    let mut labels = vec!["a".to_string()];
    let mut edges = Vec::new();
    for (arm, &len) in arms.iter().enumerate() {
        let mut prev = "a".to_string();
        for k in 0..len {
            let letter = (b'b' + k as u8) as char;
            let label = format!("{letter}{}", arm + 1);
            labels.push(label.clone());
            edges.push((prev.clone(), label.clone()));
            prev = label;
        }
    }
    DiagramGraph::new(labels, &edges, None)
}

/// All points of the projective plane over F_q as canonical representatives:
/// nonzero triples with first nonzero coordinate 1, in lexicographic order.
fn projective_points(q: u8) -> Vec<[u8; 3]> {
    let mut pts = Vec::new();
    for x0 in 0..q {
        for x1 in 0..q {
            for x2 in 0..q {
                let v = [x0, x1, x2];
                if v == [0, 0, 0] {
                    continue;
                }
                let first = *v.iter().find(|&&c| c != 0).unwrap();
                if first == 1 {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// Bipartite incidence graph of the points and lines of P²(F_q), q ∈ {2,3}.
/// Point (x) lies on line [y] iff x·y = 0 in F_q. Node labels are `p`/`l`
/// followed by the canonical coordinates, e.g. `p012`.
pub fn projective_plane_incidence(q: u8) -> Result<DiagramGraph> {
    if q != 2 && q != 3 {
        return Err(Error::UnsupportedModulus(format!("q = {q}")));
    }
    let pts = projective_points(q);
    let mut labels = Vec::new();
    let mut parts = Vec::new();
    for p in &pts {
        labels.push(format!("p{}{}{}", p[0], p[1], p[2]));
        parts.push(NodePart::Point);
    }
    for l in &pts {
        labels.push(format!("l{}{}{}", l[0], l[1], l[2]));
        parts.push(NodePart::Line);
    }
    let mut edges = Vec::new();
    for p in &pts {
        for l in &pts {
            let dot: u32 = (0..3).map(|i| u32::from(p[i]) * u32::from(l[i])).sum();
            if dot % u32::from(q) == 0 {
                edges.push((
                    format!("p{}{}{}", p[0], p[1], p[2]),
                    format!("l{}{}{}", l[0], l[1], l[2]),
                ));
            }
        }
    }
    DiagramGraph::new(labels, &edges, Some(parts))
}

/// Relation outcome for one unordered node pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairRelation {
    pub a: String,
    pub b: String,
    pub adjacent: bool,
    pub braid_holds: bool,
    pub commute_holds: bool,
}

impl PairRelation {
    /// Adjacent pairs must braid and not commute; non-adjacent pairs must
    /// commute and not braid.
    pub fn ok(&self) -> bool {
        if self.adjacent {
            self.braid_holds && !self.commute_holds
        } else {
            self.commute_holds && !self.braid_holds
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssignmentReport {
    pub pairs: Vec<PairRelation>,
}

impl AssignmentReport {
    pub fn total(&self) -> usize {
        self.pairs.len()
    }

    pub fn passed(&self) -> usize {
        self.pairs.iter().filter(|p| p.ok()).count()
    }

    pub fn all_pass(&self) -> bool {
        self.pairs.iter().all(|p| p.ok())
    }

    pub fn failures(&self) -> Vec<&PairRelation> {
        self.pairs.iter().filter(|p| !p.ok()).collect()
    }
}

/// Checks every unordered node pair of `graph` against the braid/commute
/// relations of the assigned matrices.
pub fn verify_assignment<R: ComplexRing>(
    graph: &DiagramGraph,
    assignment: &BTreeMap<String, GroupElement<R>>,
) -> Result<AssignmentReport> {
    for label in graph.labels() {
        if !assignment.contains_key(label) {
            return Err(Error::UnassignedLabel(label.clone()));
        }
    }
    let mut pairs = Vec::new();
    for (a, b) in graph.label_pairs() {
        let ma = &assignment[&a];
        let mb = &assignment[&b];
        pairs.push(PairRelation {
            adjacent: graph.adjacent(&a, &b),
            braid_holds: braids(ma, mb)?,
            commute_holds: commutes(ma, mb)?,
            a,
            b,
        });
    }
    Ok(AssignmentReport { pairs })
}

// deterministic pattern traversal: start at a maximum-degree node (ties by
// label), then breadth-first, so every later node touches a mapped one in
// connected patterns
fn pattern_order(g: &DiagramGraph) -> Vec<usize> {
    let n = g.node_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut by_pref: Vec<usize> = (0..n).collect();
    by_pref.sort_by_key(|&i| (usize::MAX - g.adj[i].len(), g.labels[i].clone()));
    for &start in &by_pref {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            let mut nbrs: Vec<usize> = g.adj[i].iter().copied().filter(|&j| !seen[j]).collect();
            nbrs.sort_by_key(|&j| g.labels[j].clone());
            for j in nbrs {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    order
}

fn candidate_order(g: &DiagramGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by_key(|&i| (g.adj[i].len(), g.labels[i].clone()));
    order
}

fn embed_search(
    small: &DiagramGraph,
    big: &DiagramGraph,
    visit: &mut dyn FnMut(&BTreeMap<String, String>) -> bool,
) {
    let order = pattern_order(small);
    let candidates = candidate_order(big);
    let mut mapping: Vec<Option<usize>> = vec![None; small.node_count()];
    let mut used = vec![false; big.node_count()];

    fn rec(
        small: &DiagramGraph,
        big: &DiagramGraph,
        order: &[usize],
        candidates: &[usize],
        depth: usize,
        mapping: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&BTreeMap<String, String>) -> bool,
    ) -> bool {
        if depth == order.len() {
            let map: BTreeMap<String, String> = mapping
                .iter()
                .enumerate()
                .map(|(i, m)| (small.labels[i].clone(), big.labels[m.unwrap()].clone()))
                .collect();
            return visit(&map);
        }
        let u = order[depth];
        'cand: for &v in candidates {
            if used[v] || big.adj[v].len() < small.adj[u].len() {
                continue;
            }
            for w in 0..small.node_count() {
                if let Some(mw) = mapping[w] {
                    // induced: adjacency and non-adjacency both preserved
                    if small.adj[u].contains(&w) != big.adj[v].contains(&mw) {
                        continue 'cand;
                    }
                }
            }
            mapping[u] = Some(v);
            used[v] = true;
            let stop = rec(small, big, order, candidates, depth + 1, mapping, used, visit);
            mapping[u] = None;
            used[v] = false;
            if stop {
                return true;
            }
        }
        false
    }

    rec(
        small,
        big,
        &order,
        &candidates,
        0,
        &mut mapping,
        &mut used,
        visit,
    );
}

/// First induced-subgraph embedding of `small` into `big` in the
/// deterministic search order, if any: an injective node map preserving both
/// adjacency and non-adjacency.
pub fn embed_subgraph(
    small: &DiagramGraph,
    big: &DiagramGraph,
) -> Option<BTreeMap<String, String>> {
    let mut found = None;
    embed_search(small, big, &mut |m| {
        found = Some(m.clone());
        true
    });
    found
}

/// Visits induced embeddings in the deterministic order until the callback
/// returns `true` (stop) or the search space is exhausted.
pub fn for_each_embedding(
    small: &DiagramGraph,
    big: &DiagramGraph,
    mut visit: impl FnMut(&BTreeMap<String, String>) -> bool,
) {
    embed_search(small, big, &mut visit);
}

/// All induced embeddings, up to `limit`.
pub fn all_embeddings(
    small: &DiagramGraph,
    big: &DiagramGraph,
    limit: usize,
) -> Vec<BTreeMap<String, String>> {
    let mut out = Vec::new();
    embed_search(small, big, &mut |m| {
        out.push(m.clone());
        out.len() >= limit
    });
    out
}

/// Order of the automorphism group, by exhaustive backtracking over induced
/// self-embeddings.
pub fn count_graph_automorphisms(g: &DiagramGraph) -> Result<u64> {
    if g.node_count() > 30 {
        return Err(Error::EnumerationTooLarge(format!(
            "{} nodes exceeds the automorphism search limit",
            g.node_count()
        )));
    }
    let mut count = 0u64;
    embed_search(g, g, &mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_diagram_shapes() {
        let y555 = y_diagram(5, 5, 5).unwrap();
        assert_eq!(y555.node_count(), 16);
        assert_eq!(y555.edge_count(), 15);
        assert_eq!(y555.degree("a"), 3);
        assert!(y555.adjacent("a", "b2"));
        assert!(y555.adjacent("d3", "e3"));
        assert!(!y555.adjacent("a", "c1"));
        let y550 = y_diagram(5, 5, 0).unwrap();
        assert_eq!(y550.node_count(), 11);
        let point = y_diagram(0, 0, 0).unwrap();
        assert_eq!(point.node_count(), 1);
    }

    #[test]
    fn incidence_graph_f3() {
        let g = projective_plane_incidence(3).unwrap();
        assert_eq!(g.node_count(), 26);
        assert_eq!(g.edge_count(), 52);
        for l in g.labels() {
            assert_eq!(g.degree(l), 4, "degree of {l}");
        }
        assert!(g.is_connected());
        // bipartite by construction: point/line tags present
        assert_eq!(g.part("p100"), Some(NodePart::Point));
        assert_eq!(g.part("l100"), Some(NodePart::Line));
    }

    #[test]
    fn incidence_graph_f2() {
        let g = projective_plane_incidence(2).unwrap();
        assert_eq!(g.node_count(), 14);
        assert_eq!(g.edge_count(), 21);
        for l in g.labels() {
            assert_eq!(g.degree(l), 3);
        }
        assert!(g.is_connected());
        assert!(projective_plane_incidence(5).is_err());
    }

    #[test]
    fn two_points_lie_on_one_common_line() {
        for q in [2u8, 3] {
            let pts = projective_points(q);
            for (i, p1) in pts.iter().enumerate() {
                for p2 in pts.iter().skip(i + 1) {
                    let common = pts
                        .iter()
                        .filter(|l| {
                            let d1: u32 =
                                (0..3).map(|k| u32::from(p1[k]) * u32::from(l[k])).sum();
                            let d2: u32 =
                                (0..3).map(|k| u32::from(p2[k]) * u32::from(l[k])).sum();
                            d1 % u32::from(q) == 0 && d2 % u32::from(q) == 0
                        })
                        .count();
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn embedding_trivial_cases() {
        let single = y_diagram(0, 0, 0).unwrap();
        let y = y_diagram(1, 1, 0).unwrap();
        assert!(embed_subgraph(&single, &y).is_some());
        // 16 nodes cannot embed into 14
        let y555 = y_diagram(5, 5, 5).unwrap();
        let heawood = projective_plane_incidence(2).unwrap();
        assert!(embed_subgraph(&y555, &heawood).is_none());
    }

    #[test]
    fn y555_embeds_into_f3_incidence_graph() {
        let y555 = y_diagram(5, 5, 5).unwrap();
        let inc = projective_plane_incidence(3).unwrap();
        let m = embed_subgraph(&y555, &inc).expect("embedding exists");
        assert_eq!(m.len(), 16);
        // induced property
        for (u1, v1) in &m {
            for (u2, v2) in &m {
                if u1 < u2 {
                    assert_eq!(y555.adjacent(u1, u2), inc.adjacent(v1, v2));
                }
            }
        }
        // deterministic: re-running returns the same mapping
        assert_eq!(embed_subgraph(&y555, &inc).unwrap(), m);
    }

    #[test]
    fn automorphism_counts() {
        // K4
        let labels: Vec<String> = ["w", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        let k4 = DiagramGraph::new(labels, &edges, None).unwrap();
        assert_eq!(count_graph_automorphisms(&k4).unwrap(), 24);
        // Heawood graph: |PGL3(F2)|·2
        let heawood = projective_plane_incidence(2).unwrap();
        assert_eq!(count_graph_automorphisms(&heawood).unwrap(), 336);
    }

    #[test]
    fn verify_assignment_pass_and_negative_control() {
        use crate::lattice::{build_eisenstein_lattice, eisenstein_seed_vectors};
        use crate::reflection::complex_reflection;
        use crate::ring::EisensteinInt;

        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let mut assign = BTreeMap::new();
        for (label, v) in eisenstein_seed_vectors() {
            assign.insert(label, complex_reflection(&lat, &v, &omega).unwrap());
        }
        let y555 = y_diagram(5, 5, 5).unwrap();
        let report = verify_assignment(&y555, &assign).unwrap();
        assert_eq!(report.total(), 120);
        assert!(report.all_pass());

        // swapping a and c1 must fail with named offending pairs
        let mut swapped = assign.clone();
        let a = swapped["a"].clone();
        let c1 = swapped["c1"].clone();
        swapped.insert("a".into(), c1);
        swapped.insert("c1".into(), a);
        let bad = verify_assignment(&y555, &swapped).unwrap();
        assert!(!bad.all_pass());
        assert!(!bad.failures().is_empty());
        let named: Vec<String> = bad
            .failures()
            .iter()
            .map(|p| format!("{}-{}", p.a, p.b))
            .collect();
        assert!(named.iter().any(|s| s.contains('a') || s.contains("c1")));

        // missing node reported
        let mut missing = assign.clone();
        missing.remove("a");
        assert!(matches!(
            verify_assignment(&y555, &missing),
            Err(Error::UnassignedLabel(_))
        ));
    }

    #[test]
    fn relabeling_by_automorphism_preserves_verdict() {
        use crate::lattice::{build_eisenstein_lattice, eisenstein_seed_vectors};
        use crate::reflection::complex_reflection;
        use crate::ring::EisensteinInt;

        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let mut assign = BTreeMap::new();
        for (label, v) in eisenstein_seed_vectors() {
            assign.insert(label, complex_reflection(&lat, &v, &omega).unwrap());
        }
        let y555 = y_diagram(5, 5, 5).unwrap();
        // the arm swap 1↔2 is a diagram automorphism
        let swap = |l: &str| -> String {
            if l == "a" {
                return l.into();
            }
            let (ch, arm) = l.split_at(1);
            match arm {
                "1" => format!("{ch}2"),
                "2" => format!("{ch}1"),
                _ => l.into(),
            }
        };
        let relabeled: BTreeMap<String, _> = assign
            .iter()
            .map(|(k, v)| (swap(k), v.clone()))
            .collect();
        let r1 = verify_assignment(&y555, &assign).unwrap();
        let r2 = verify_assignment(&y555, &relabeled).unwrap();
        assert_eq!(r1.all_pass(), r2.all_pass());
    }
}
