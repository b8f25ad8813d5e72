//! Root configurations: assignments of lattice roots to diagram nodes, the
//! constrained search that extends a seed configuration to a larger diagram,
//! unit normalization along a spanning tree, and common fixed points of
//! mirror families.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diagram::{
    for_each_embedding, projective_plane_incidence, y_diagram, DiagramGraph, NodePart,
};
use crate::error::{Error, Result};
use crate::lattice::{
    build_eisenstein_lattice, build_gaussian_lattice, eisenstein_seed_vectors, norm_of,
    HermitianLattice,
};
use crate::linalg::Matrix;
use crate::reflection::{complex_reflection, GroupElement};
use crate::ring::{ComplexRing, EisensteinInt, FieldElem, Frac, GaussianInt, RingElem};

/// An assignment of lattice roots to the nodes of a diagram.
#[derive(Clone, Debug)]
pub struct RootConfiguration<R: ComplexRing> {
    pub lattice_id: String,
    pub diagram_id: String,
    lattice: HermitianLattice<R>,
    diagram: DiagramGraph,
    roots: BTreeMap<String, Vec<R>>,
}

impl<R: ComplexRing> RootConfiguration<R> {
    pub fn new(
        lattice_id: impl Into<String>,
        diagram_id: impl Into<String>,
        lattice: HermitianLattice<R>,
        diagram: DiagramGraph,
        roots: BTreeMap<String, Vec<R>>,
    ) -> Self {
        Self {
            lattice_id: lattice_id.into(),
            diagram_id: diagram_id.into(),
            lattice,
            diagram,
            roots,
        }
    }

    pub fn lattice(&self) -> &HermitianLattice<R> {
        &self.lattice
    }

    pub fn diagram(&self) -> &DiagramGraph {
        &self.diagram
    }

    pub fn roots(&self) -> &BTreeMap<String, Vec<R>> {
        &self.roots
    }

    pub fn root(&self, label: &str) -> Option<&Vec<R>> {
        self.roots.get(label)
    }

    /// Full validity: every node carries a lattice root of the expected norm,
    /// and pairwise inner products follow adjacency (unit·prime on edges,
    /// zero off edges).
    pub fn validate(&self) -> Result<()> {
        let prime = R::ramified_prime();
        let expected_norm = R::from_pair(R::ROOT_NORM, 0);
        for label in self.diagram.labels() {
            let v = self
                .roots
                .get(label)
                .ok_or_else(|| Error::UnassignedLabel(label.clone()))?;
            if !self.lattice.contains(v) {
                return Err(Error::NotARoot(format!("{label} lies outside the lattice")));
            }
            let n = self.lattice.norm(v)?;
            if n != expected_norm {
                return Err(Error::NotARoot(format!("{label} has norm {n}")));
            }
        }
        for (a, b) in self.diagram.label_pairs() {
            let ip = self.lattice.inner(&self.roots[&a], &self.roots[&b])?;
            if self.diagram.adjacent(&a, &b) {
                let unit_ok = ip
                    .exact_div(&prime)
                    .map(|u| u.is_unit())
                    .unwrap_or(false);
                if !unit_ok {
                    return Err(Error::InvalidInput(format!(
                        "adjacent pair ({a},{b}) has inner product {ip}, not unit·{prime}"
                    )));
                }
            } else if !ip.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "non-adjacent pair ({a},{b}) has inner product {ip} ≠ 0"
                )));
            }
        }
        Ok(())
    }

    /// The reflection (order 3 resp. 4) in each assigned root.
    pub fn reflections(&self) -> Result<BTreeMap<String, GroupElement<R>>> {
        let mu = R::ring_generator();
        let mut out = BTreeMap::new();
        for (label, v) in &self.roots {
            out.insert(label.clone(), complex_reflection(&self.lattice, v, &mu)?);
        }
        Ok(out)
    }

    /// All pairwise inner products in sorted pair order; the certificate body.
    pub fn pairwise_inner_products(&self) -> Result<BTreeMap<String, R>> {
        let mut out = BTreeMap::new();
        for (a, b) in self.diagram.label_pairs() {
            let ip = self.lattice.inner(&self.roots[&a], &self.roots[&b])?;
            out.insert(format!("{a}|{b}"), ip);
        }
        Ok(out)
    }
}

/// The sixteen seed roots on the Y(5,5,5) diagram.
pub fn seed_y555_roots() -> RootConfiguration<EisensteinInt> {
    let lattice = build_eisenstein_lattice();
    let diagram = y_diagram(5, 5, 5).expect("Y555 construction");
    let roots: BTreeMap<String, Vec<EisensteinInt>> =
        eisenstein_seed_vectors().into_iter().collect();
    RootConfiguration::new("eisenstein_l14", "y555", lattice, diagram, roots)
}

/// The Gaussian Y(3,3,3) seed template: the Eisenstein table transposed to
/// rank-2 blocks with θ̄ ↦ 1−i, θ ↦ 1+i, ω̄ ↦ −i in the hyperbolic entries.
pub fn gaussian_seed_template() -> RootConfiguration<GaussianInt> {
    let g = |a: i64, b: i64| GaussianInt::new(a, b);
    let zero = || vec![g(0, 0); 8];
    let lattice = build_gaussian_lattice();
    let diagram = y_diagram(3, 3, 3).expect("Y333 construction");
    let mut roots = BTreeMap::new();

    let mut a_vec = zero();
    a_vec[6] = g(1, 0);
    a_vec[7] = g(0, -1); // −i
    roots.insert("a".to_string(), a_vec);

    for block in 0..3usize {
        let base = 2 * block;
        let tag = block + 1;

        let mut b = zero();
        b[base + 1] = g(1, -1); // 1−i
        b[7] = g(1, 0);
        roots.insert(format!("b{tag}"), b);

        let mut c = zero();
        c[base] = g(1, 0);
        c[base + 1] = g(1, 0);
        roots.insert(format!("c{tag}"), c);

        let mut d = zero();
        d[base] = g(1, 1); // 1+i
        roots.insert(format!("d{tag}"), d);
    }
    RootConfiguration::new("gaussian_d4x3h", "y333", lattice, diagram, roots)
}

// constraint row of root r as a functional on basis coordinates:
// W[j] = ⟨b_j, r⟩
fn constraint_row<R: ComplexRing>(
    lat: &HermitianLattice<R>,
    r: &[R],
) -> Result<Vec<Frac<R>>> {
    let mut row = Vec::with_capacity(lat.rank());
    for b in lat.basis() {
        row.push(Frac::from_ring(lat.inner(b, r)?));
    }
    Ok(row)
}

/// Solves for lattice vectors with prescribed inner products against the
/// constraint roots and the prescribed norm. The constraint rows must span
/// the lattice rank, so the solution is unique when it exists; the returned
/// list has zero or one entries.
pub fn solve_root_for_constraints<R: ComplexRing>(
    lat: &HermitianLattice<R>,
    constraints: &[(Vec<R>, R)],
    norm_target: &R,
) -> Result<Vec<Vec<R>>> {
    let rank = lat.rank();
    let mut rows: Vec<Vec<Frac<R>>> = Vec::with_capacity(constraints.len());
    for (r, _) in constraints {
        rows.push(constraint_row(lat, r)?);
    }
    // greedy maximal independent subset, in input order
    let mut echelon: Vec<(usize, Vec<Frac<R>>)> = Vec::new();
    let mut selected: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if selected.len() == rank {
            break;
        }
        let mut red = row.clone();
        for (pivot, er) in &echelon {
            if red[*pivot].is_zero() {
                continue;
            }
            let f = red[*pivot].clone();
            for (x, e) in red.iter_mut().zip(er) {
                let t = f.mul(e);
                *x = x.sub(&t);
            }
        }
        if let Some(p) = red.iter().position(|x| !x.is_zero()) {
            let inv = red[p].inv().expect("nonzero pivot");
            let norm_row: Vec<Frac<R>> = red.iter().map(|x| x.mul(&inv)).collect();
            echelon.push((p, norm_row));
            selected.push(i);
        }
    }
    if selected.len() < rank {
        return Err(Error::ConstraintsDoNotSpan {
            got: selected.len(),
            need: rank,
        });
    }
    let w = Matrix::from_rows(selected.iter().map(|&i| rows[i].clone()).collect())?;
    let t: Vec<Frac<R>> = selected
        .iter()
        .map(|&i| Frac::from_ring(constraints[i].1.clone()))
        .collect();
    let coords_f = w.solve(&t)?;
    // integrality
    let mut coords = Vec::with_capacity(rank);
    for c in &coords_f {
        match c.to_ring() {
            Some(x) => coords.push(x),
            None => return Ok(Vec::new()),
        }
    }
    let x = lat.from_coords(&coords)?;
    // verify every constraint (selected and not) and the norm
    for (r, target) in constraints {
        if lat.inner(&x, r)? != *target {
            return Ok(Vec::new());
        }
    }
    if lat.norm(&x)? != *norm_target {
        return Ok(Vec::new());
    }
    Ok(vec![x])
}

// static processing order for extension: repeatedly take the unassigned node
// with the fewest unassigned neighbors (most constrained first), ties by label
fn extension_order(big: &DiagramGraph, assigned: &BTreeSet<String>) -> Vec<String> {
    let mut done: BTreeSet<String> = assigned.clone();
    let mut order = Vec::new();
    let total = big.node_count();
    while done.len() < total {
        let mut best: Option<(usize, String)> = None;
        for label in big.labels() {
            if done.contains(label) {
                continue;
            }
            let unassigned_deg = big
                .neighbors(label)
                .iter()
                .filter(|n| !done.contains(**n))
                .count();
            let key = (unassigned_deg, label.clone());
            if best.as_ref().map(|b| key < *b).unwrap_or(true) {
                best = Some(key);
            }
        }
        let (_, label) = best.expect("unassigned node exists");
        done.insert(label.clone());
        order.push(label);
    }
    order
}

struct SeedSolver<R: ComplexRing> {
    // prime·(W⁻¹ column) per selected seed node, keyed by big-graph label
    scaled_cols: BTreeMap<String, Vec<Frac<R>>>,
}

impl<R: ComplexRing> SeedSolver<R> {
    fn new(
        lat: &HermitianLattice<R>,
        seed_roots: &BTreeMap<String, Vec<R>>,
    ) -> Result<Self> {
        let rank = lat.rank();
        let labels: Vec<String> = seed_roots.keys().cloned().collect();
        let mut rows = Vec::new();
        for l in &labels {
            rows.push(constraint_row(lat, &seed_roots[l])?);
        }
        // greedy independent subset in label order
        let mut echelon: Vec<(usize, Vec<Frac<R>>)> = Vec::new();
        let mut selected: Vec<usize> = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if selected.len() == rank {
                break;
            }
            let mut red = row.clone();
            for (pivot, er) in &echelon {
                if red[*pivot].is_zero() {
                    continue;
                }
                let f = red[*pivot].clone();
                for (x, e) in red.iter_mut().zip(er) {
                    let t = f.mul(e);
                    *x = x.sub(&t);
                }
            }
            if let Some(p) = red.iter().position(|x| !x.is_zero()) {
                let inv = red[p].inv().expect("nonzero pivot");
                let norm_row: Vec<Frac<R>> = red.iter().map(|x| x.mul(&inv)).collect();
                echelon.push((p, norm_row));
                selected.push(i);
            }
        }
        if selected.len() < rank {
            return Err(Error::ConstraintsDoNotSpan {
                got: selected.len(),
                need: rank,
            });
        }
        let w = Matrix::from_rows(selected.iter().map(|&i| rows[i].clone()).collect())?;
        let w_inv = w.inverse()?;
        let prime = Frac::from_ring(R::ramified_prime());
        let mut scaled_cols = BTreeMap::new();
        for (col, &row_idx) in selected.iter().enumerate() {
            let mut column = Vec::with_capacity(rank);
            for r in 0..rank {
                column.push(w_inv.at(r, col).mul(&prime));
            }
            scaled_cols.insert(labels[row_idx].clone(), column);
        }
        Ok(Self { scaled_cols })
    }
}

fn unit_tuples<R: ComplexRing>(len: usize) -> Vec<Vec<R>> {
    let units = R::units();
    let mut out: Vec<Vec<R>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * units.len());
        for prefix in &out {
            for u in &units {
                let mut t = prefix.clone();
                t.push(u.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Extends a seed configuration along an induced embedding of its diagram
/// into `big`: every unmatched node gets a root whose inner products are 0
/// against non-adjacent assigned roots and unit·prime against adjacent ones.
/// Deterministic backtracking over unit choices; the embedded seeds are
/// copied unchanged.
pub fn extend_configuration<R: ComplexRing>(
    seeds: &RootConfiguration<R>,
    big: &DiagramGraph,
    big_diagram_id: &str,
    embedding: &BTreeMap<String, String>,
) -> Result<RootConfiguration<R>> {
    let lat = seeds.lattice();
    let prime = R::ramified_prime();
    let expected_norm = R::from_pair(R::ROOT_NORM, 0);

    // seed roots relocated onto big-graph labels
    let mut assigned: BTreeMap<String, Vec<R>> = BTreeMap::new();
    for (small_label, big_label) in embedding {
        let root = seeds
            .root(small_label)
            .ok_or_else(|| Error::UnassignedLabel(small_label.clone()))?;
        if !big.contains_node(big_label) {
            return Err(Error::InvalidInput(format!(
                "embedding target {big_label} is not a node"
            )));
        }
        assigned.insert(big_label.clone(), root.clone());
    }

    let solver = SeedSolver::new(lat, &assigned)?;
    let seed_set: BTreeSet<String> = assigned.keys().cloned().collect();
    let order = extension_order(big, &seed_set);

    fn candidates<R: ComplexRing>(
        lat: &HermitianLattice<R>,
        big: &DiagramGraph,
        solver: &SeedSolver<R>,
        assigned: &BTreeMap<String, Vec<R>>,
        node: &str,
        prime: &R,
        expected_norm: &R,
    ) -> Result<Vec<Vec<R>>> {
        let adj_selected: Vec<&String> = solver
            .scaled_cols
            .keys()
            .filter(|s| big.adjacent(node, s))
            .collect();
        let rank = lat.rank();
        let mut out = Vec::new();
        'tuple: for tuple in unit_tuples::<R>(adj_selected.len()) {
            let mut coords_f = vec![Frac::<R>::zero(); rank];
            for (u, s) in tuple.iter().zip(&adj_selected) {
                let col = &solver.scaled_cols[s.as_str()];
                let uf = Frac::from_ring(u.clone());
                for (c, e) in coords_f.iter_mut().zip(col) {
                    let t = uf.mul(e);
                    *c = c.add(&t);
                }
            }
            // integrality of the basis coordinates
            let mut coords = Vec::with_capacity(rank);
            for c in &coords_f {
                match c.to_ring() {
                    Some(x) => coords.push(x),
                    None => continue 'tuple,
                }
            }
            let x = lat.from_coords(&coords)?;
            if lat.norm(&x)? != *expected_norm {
                continue;
            }
            // all assigned roots: exact 0 off edges, unit·prime on edges
            for (other, root) in assigned {
                let ip = lat.inner(&x, root)?;
                if big.adjacent(node, other) {
                    let ok = ip.exact_div(prime).map(|u| u.is_unit()).unwrap_or(false);
                    if !ok {
                        continue 'tuple;
                    }
                } else if !ip.is_zero() {
                    continue 'tuple;
                }
            }
            out.push(x);
        }
        Ok(out)
    }

    fn dfs<R: ComplexRing>(
        lat: &HermitianLattice<R>,
        big: &DiagramGraph,
        solver: &SeedSolver<R>,
        assigned: &mut BTreeMap<String, Vec<R>>,
        order: &[String],
        depth: usize,
        prime: &R,
        expected_norm: &R,
        deepest: &mut usize,
    ) -> Result<bool> {
        if depth == order.len() {
            return Ok(true);
        }
        *deepest = (*deepest).max(depth);
        let node = &order[depth];
        let cands = candidates(lat, big, solver, assigned, node, prime, expected_norm)?;
        for x in cands {
            assigned.insert(node.clone(), x);
            if dfs(
                lat,
                big,
                solver,
                assigned,
                order,
                depth + 1,
                prime,
                expected_norm,
                deepest,
            )? {
                return Ok(true);
            }
            assigned.remove(node);
        }
        Ok(false)
    }

    let mut deepest = 0usize;
    let found = dfs(
        lat,
        big,
        &solver,
        &mut assigned,
        &order,
        0,
        &prime,
        &expected_norm,
        &mut deepest,
    )?;
    if !found {
        return Err(Error::SearchExhausted(format!(
            "extension stalled after {deepest} of {} new nodes",
            order.len()
        )));
    }
    let config = RootConfiguration::new(
        seeds.lattice_id.clone(),
        big_diagram_id,
        lat.clone(),
        big.clone(),
        assigned,
    );
    config.validate()?;
    Ok(config)
}

/// Rescales roots by units along a spanning tree so that every incident
/// (point, line) pair has inner product exactly the ramified prime, point
/// slot first; verifies all non-tree edges afterwards. Reflections are
/// unchanged by the rescaling.
pub fn normalize_units<R: ComplexRing>(
    config: &RootConfiguration<R>,
) -> Result<RootConfiguration<R>> {
    let graph = config.diagram();
    let lat = config.lattice();
    let prime = R::ramified_prime();
    if graph.labels().iter().any(|l| graph.part(l).is_none()) {
        return Err(Error::InvalidInput(
            "unit normalization needs a point/line bipartition".into(),
        ));
    }
    let mut roots = config.roots().clone();

    // the inner product of an incident pair in point-first orientation
    let oriented = |roots: &BTreeMap<String, Vec<R>>, a: &str, b: &str| -> Result<(R, String)> {
        let (p, l) = if graph.part(a) == Some(NodePart::Point) {
            (a, b)
        } else {
            (b, a)
        };
        Ok((lat.inner(&roots[p], &roots[l])?, l.to_string()))
    };

    // BFS spanning tree from the lexicographically first node
    let start = graph
        .labels()
        .iter()
        .min()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("empty diagram".into()))?;
    let mut visited: BTreeSet<String> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut tree_edges: Vec<(String, String)> = Vec::new();
    while let Some(u) = queue.pop_front() {
        let mut nbrs: Vec<String> = graph
            .neighbors(&u)
            .into_iter()
            .map(String::from)
            .filter(|n| !visited.contains(n))
            .collect();
        nbrs.sort();
        for v in nbrs {
            visited.insert(v.clone());
            tree_edges.push((u.clone(), v.clone()));
            queue.push_back(v);
        }
    }

    for (parent, child) in &tree_edges {
        let (ip, _) = oriented(&roots, parent, child)?;
        let u = ip
            .exact_div(&prime)
            .filter(|u| u.is_unit())
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "incident pair ({parent},{child}) has inner product {ip}, not unit·{prime}"
                ))
            })?;
        // rescale the child root: w·u = 1 when the child is the point slot,
        // conj(w)·u = 1 when the child is the line slot; u⁻¹ = conj(u)
        let w = if graph.part(child) == Some(NodePart::Point) {
            u.conj()
        } else {
            u
        };
        if w != R::one() {
            let scaled: Vec<R> = roots[child].iter().map(|c| c.mul(&w)).collect();
            roots.insert(child.clone(), scaled);
        }
        debug_assert_eq!(oriented(&roots, parent, child)?.0, prime);
    }

    // every edge, tree or not, must now sit at exactly the prime
    for (a, b) in graph.edges() {
        let (ip, _) = oriented(&roots, &a, &b)?;
        if ip != prime {
            return Err(Error::NormalizationObstruction(format!(
                "edge ({a},{b}) normalizes to {ip} ≠ {prime}"
            )));
        }
    }
    Ok(RootConfiguration::new(
        config.lattice_id.clone(),
        config.diagram_id.clone(),
        lat.clone(),
        graph.clone(),
        roots,
    ))
}

/// Kernel of the constraint system ⟨x, r_i⟩ = 0 for a family of pairwise
/// orthogonal roots: integral representatives with cleared denominators and
/// unit content, together with their norms.
#[derive(Clone, Debug)]
pub struct CommonFixedPoint<R: ComplexRing> {
    pub representatives: Vec<Vec<R>>,
    pub norms: Vec<R>,
}

pub fn common_fixed_point<R: ComplexRing>(
    lat: &HermitianLattice<R>,
    roots: &[Vec<R>],
) -> Result<CommonFixedPoint<R>> {
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if !lat.inner(a, b)?.is_zero() {
                return Err(Error::InvalidInput(
                    "fixed-point computation expects pairwise orthogonal roots".into(),
                ));
            }
        }
    }
    // constraint rows on ambient coordinates: ⟨x, r⟩ = Σ_k (Σ_m conj(r_m) G[m][k]) x_k
    let g = lat.ambient_gram();
    let n = lat.ambient_dim();
    let mut rows = Vec::with_capacity(roots.len());
    for r in roots {
        let mut row = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = R::zero();
            for m in 0..n {
                if r[m].is_zero() || g.at(m, k).is_zero() {
                    continue;
                }
                acc = acc.add(&r[m].conj().mul(g.at(m, k)));
            }
            row.push(Frac::from_ring(acc));
        }
        rows.push(row);
    }
    let m = Matrix::from_rows(rows)?;
    let kernel = m.kernel();
    let mut representatives = Vec::with_capacity(kernel.len());
    let mut norms = Vec::with_capacity(kernel.len());
    for v in kernel {
        // clear denominators, then divide by the content gcd
        let mut lcm = BigInt::one();
        for e in &v {
            lcm = lcm.lcm(e.denominator());
        }
        let mut rep: Vec<R> = v
            .iter()
            .map(|e| {
                let scale = &lcm / e.denominator();
                e.numerator().mul_int(&scale)
            })
            .collect();
        let mut content = BigInt::zero();
        for e in &rep {
            content = content.gcd(&e.content());
        }
        if content > BigInt::one() {
            rep = rep.iter().map(|e| e.div_int_exact(&content)).collect();
        }
        norms.push(norm_of(g, &rep)?);
        representatives.push(rep);
    }
    Ok(CommonFixedPoint {
        representatives,
        norms,
    })
}

/// Outcome of a deterministic extension search: the embedding used, the raw
/// extension, and (when requested) the unit-normalized form.
pub struct ExtensionOutcome<R: ComplexRing> {
    pub embedding: BTreeMap<String, String>,
    pub raw: RootConfiguration<R>,
    pub normalized: Option<RootConfiguration<R>>,
}

fn search_extension<R: ComplexRing>(
    seeds: &RootConfiguration<R>,
    big: &DiagramGraph,
    big_diagram_id: &str,
    normalize: bool,
) -> Result<ExtensionOutcome<R>> {
    let mut outcome: Option<ExtensionOutcome<R>> = None;
    let mut embeddings_tried = 0usize;
    for_each_embedding(seeds.diagram(), big, |embedding| {
        embeddings_tried += 1;
        match extend_configuration(seeds, big, big_diagram_id, embedding) {
            Ok(raw) => {
                if normalize {
                    match normalize_units(&raw) {
                        Ok(norm) => {
                            outcome = Some(ExtensionOutcome {
                                embedding: embedding.clone(),
                                raw,
                                normalized: Some(norm),
                            });
                            true
                        }
                        Err(_) => false, // obstruction: keep searching
                    }
                } else {
                    outcome = Some(ExtensionOutcome {
                        embedding: embedding.clone(),
                        raw,
                        normalized: None,
                    });
                    true
                }
            }
            Err(_) => false,
        }
    });
    outcome.ok_or_else(|| {
        Error::SearchExhausted(format!(
            "no extension found across {embeddings_tried} embeddings"
        ))
    })
}

/// Extends the sixteen seed roots to the 26 nodes of the incidence graph of
/// P²(F₃), returning the first embedding that extends and normalizes.
pub fn search_extended_eisenstein() -> Result<ExtensionOutcome<EisensteinInt>> {
    let seeds = seed_y555_roots();
    let big = projective_plane_incidence(3)?;
    search_extension(&seeds, &big, "pp_f3", true)
}

/// The 14-root Gaussian configuration on the incidence graph of P²(F₂),
/// grown from the Y(3,3,3) template.
pub fn build_gaussian_configuration() -> Result<RootConfiguration<GaussianInt>> {
    let seeds = gaussian_seed_template();
    seeds.validate()?;
    let big = projective_plane_incidence(2)?;
    let outcome = search_extension(&seeds, &big, "pp_f2", false)?;
    Ok(outcome.raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    #[test]
    fn seed_configuration_validates() {
        let cfg = seed_y555_roots();
        cfg.validate().unwrap();
        let ips = cfg.pairwise_inner_products().unwrap();
        assert_eq!(ips.len(), 120);
        // chain inner products exactly θ
        let theta = EisensteinInt::ramified_prime();
        assert_eq!(ips["a|b1"], theta);
        assert_eq!(ips["b1|c1"], theta);
        assert_eq!(ips["c1|e1"], EisensteinInt::zero());
    }

    #[test]
    fn gaussian_template_validates() {
        let cfg = gaussian_seed_template();
        cfg.validate().unwrap();
        let one_i = GaussianInt::ramified_prime();
        let ips = cfg.pairwise_inner_products().unwrap();
        assert_eq!(ips["a|b1"], one_i);
        assert_eq!(ips["a|b2"], one_i);
        assert!(ips["c1|d1"].exact_div(&one_i).unwrap().is_unit());
    }

    #[test]
    fn solver_recovers_seed_root() {
        let cfg = seed_y555_roots();
        let lat = cfg.lattice();
        let a = cfg.root("a").unwrap().clone();
        let mut constraints = Vec::new();
        for (_, v) in cfg.roots() {
            let t = lat.inner(&a, v).unwrap();
            constraints.push((v.clone(), t));
        }
        let sols =
            solve_root_for_constraints(lat, &constraints, &EisensteinInt::new(-3, 0)).unwrap();
        assert_eq!(sols, vec![a]);
    }

    #[test]
    fn solver_rejects_non_divisible_target() {
        let cfg = seed_y555_roots();
        let lat = cfg.lattice();
        let a = cfg.root("a").unwrap().clone();
        let mut constraints = Vec::new();
        for (label, v) in cfg.roots() {
            let mut t = lat.inner(&a, v).unwrap();
            if label == "c1" {
                t = t.add(&EisensteinInt::one()); // breaks divisibility by θ
            }
            constraints.push((v.clone(), t));
        }
        let sols =
            solve_root_for_constraints(lat, &constraints, &EisensteinInt::new(-3, 0)).unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn solver_requires_spanning_constraints() {
        let cfg = seed_y555_roots();
        let lat = cfg.lattice();
        let a = cfg.root("a").unwrap().clone();
        // the fifteen other seeds span only rank 13
        let mut constraints = Vec::new();
        for (label, v) in cfg.roots() {
            if label == "a" {
                continue;
            }
            constraints.push((v.clone(), lat.inner(&a, v).unwrap()));
        }
        assert!(matches!(
            solve_root_for_constraints(lat, &constraints, &EisensteinInt::new(-3, 0)),
            Err(Error::ConstraintsDoNotSpan { got: 13, need: 14 })
        ));
    }

    #[test]
    fn single_root_fixed_space_is_thirteen_dimensional() {
        let cfg = seed_y555_roots();
        let a = cfg.root("a").unwrap().clone();
        let fp = common_fixed_point(cfg.lattice(), &[a]).unwrap();
        assert_eq!(fp.representatives.len(), 13);
    }

    #[test]
    fn orthogonality_precondition_enforced() {
        let cfg = seed_y555_roots();
        let a = cfg.root("a").unwrap().clone();
        let b1 = cfg.root("b1").unwrap().clone();
        assert!(common_fixed_point(cfg.lattice(), &[a, b1]).is_err());
    }
}

#[cfg(test)]
mod extension_tests {
    use super::*;
    use crate::diagram::verify_assignment;

    #[test]
    fn extension_search_finds_26_roots() {
        let outcome = search_extended_eisenstein().unwrap();
        let raw = &outcome.raw;
        raw.validate().unwrap();
        assert_eq!(raw.roots().len(), 26);
        // seeds unchanged on embedded nodes
        let seeds = seed_y555_roots();
        for (small, big) in &outcome.embedding {
            assert_eq!(raw.root(big), seeds.root(small));
        }
        let normalized = outcome.normalized.as_ref().unwrap();
        normalized.validate().unwrap();
        // every incident (point, line) pair sits at exactly θ
        let theta = EisensteinInt::ramified_prime();
        let graph = normalized.diagram();
        for (a, b) in graph.edges() {
            let (p, l) = if graph.part(&a) == Some(crate::diagram::NodePart::Point) {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            };
            let ip = normalized
                .lattice()
                .inner(&normalized.root(&p).unwrap(), &normalized.root(&l).unwrap())
                .unwrap();
            assert_eq!(ip, theta, "edge ({p},{l})");
        }
        // the 13 point roots are mutually orthogonal
        let points: Vec<Vec<EisensteinInt>> = graph
            .labels()
            .iter()
            .filter(|l| graph.part(l) == Some(crate::diagram::NodePart::Point))
            .map(|l| normalized.root(l).unwrap().clone())
            .collect();
        assert_eq!(points.len(), 13);
        for (i, p) in points.iter().enumerate() {
            for q in points.iter().skip(i + 1) {
                assert!(normalized.lattice().inner(p, q).unwrap().is_zero());
            }
        }
        // all 325 triflection relations match the incidence graph
        let report =
            verify_assignment(graph, &normalized.reflections().unwrap()).unwrap();
        assert_eq!(report.total(), 325);
        assert!(report.all_pass());
        // idempotent normalization
        let again = normalize_units(normalized).unwrap();
        assert_eq!(again.roots(), normalized.roots());
    }

    #[test]
    fn gaussian_configuration_found() {
        let cfg = build_gaussian_configuration().unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.roots().len(), 14);
        let report = verify_assignment(cfg.diagram(), &cfg.reflections().unwrap()).unwrap();
        assert_eq!(report.total(), 91);
        assert!(report.all_pass());
    }
}
