//! File formats: scalars as integer pairs `[a, b]`, matrices as row arrays,
//! lattices, diagram graphs, root configurations and their certificates.
//! All maps are ordered, so serialization is byte-stable across runs.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::diagram::{projective_plane_incidence, y_diagram, DiagramGraph, NodePart};
use crate::error::{Error, Result};
use crate::lattice::{build_eisenstein_lattice, build_gaussian_lattice, HermitianLattice};
use crate::linalg::Matrix;
use crate::ring::ComplexRing;
use crate::roots::RootConfiguration;

type ScalarPair = [i64; 2];

fn scalar_to_pair<R: ComplexRing>(x: &R) -> Result<ScalarPair> {
    let (a, b) = x.components();
    let conv = |v: &BigInt| -> Result<i64> {
        i64::try_from(v).map_err(|_| {
            Error::InvalidInput(format!("scalar component {v} exceeds the file range"))
        })
    };
    Ok([conv(a)?, conv(b)?])
}

fn pair_to_scalar<R: ComplexRing>(p: &ScalarPair) -> R {
    R::from_pair(p[0], p[1])
}

fn vector_to_pairs<R: ComplexRing>(v: &[R]) -> Result<Vec<ScalarPair>> {
    v.iter().map(scalar_to_pair).collect()
}

fn pairs_to_vector<R: ComplexRing>(p: &[ScalarPair]) -> Vec<R> {
    p.iter().map(pair_to_scalar).collect()
}

fn matrix_to_rows<R: ComplexRing>(m: &Matrix<R>) -> Result<Vec<Vec<ScalarPair>>> {
    m.rows_vec().iter().map(|r| vector_to_pairs(r)).collect()
}

#[derive(Serialize, Deserialize)]
pub struct LatticeFile {
    pub ring: String,
    pub ambient_gram: Vec<Vec<ScalarPair>>,
    pub basis: Vec<Vec<ScalarPair>>,
}

pub fn lattice_to_file<R: ComplexRing>(lat: &HermitianLattice<R>) -> Result<LatticeFile> {
    Ok(LatticeFile {
        ring: R::RING_TAG.to_string(),
        ambient_gram: matrix_to_rows(lat.ambient_gram())?,
        basis: lat
            .basis()
            .iter()
            .map(|v| vector_to_pairs(v))
            .collect::<Result<_>>()?,
    })
}

pub fn lattice_from_file<R: ComplexRing>(f: &LatticeFile) -> Result<HermitianLattice<R>> {
    if f.ring != R::RING_TAG {
        return Err(Error::InvalidInput(format!(
            "ring tag {} does not match expected {}",
            f.ring,
            R::RING_TAG
        )));
    }
    let gram_rows: Vec<Vec<R>> = f.ambient_gram.iter().map(|r| pairs_to_vector(r)).collect();
    let gram = Matrix::from_rows(gram_rows)?;
    let basis: Vec<Vec<R>> = f.basis.iter().map(|r| pairs_to_vector(r)).collect();
    HermitianLattice::new(gram, &basis)
}

#[derive(Serialize, Deserialize)]
pub struct GraphFile {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<BTreeMap<String, String>>,
}

pub fn graph_to_file(g: &DiagramGraph) -> GraphFile {
    let parts = if g.labels().iter().any(|l| g.part(l).is_some()) {
        Some(
            g.labels()
                .iter()
                .map(|l| {
                    let p = match g.part(l) {
                        Some(NodePart::Point) => "point",
                        Some(NodePart::Line) => "line",
                        None => "none",
                    };
                    (l.clone(), p.to_string())
                })
                .collect(),
        )
    } else {
        None
    };
    GraphFile {
        nodes: g.labels().to_vec(),
        edges: g.edges(),
        parts,
    }
}

pub fn graph_from_file(f: &GraphFile) -> Result<DiagramGraph> {
    let parts = match &f.parts {
        None => None,
        Some(map) => {
            let mut v = Vec::with_capacity(f.nodes.len());
            for n in &f.nodes {
                let p = map
                    .get(n)
                    .ok_or_else(|| Error::InvalidInput(format!("missing part tag for {n}")))?;
                v.push(match p.as_str() {
                    "point" => NodePart::Point,
                    "line" => NodePart::Line,
                    other => {
                        return Err(Error::InvalidInput(format!("bad part tag {other}")))
                    }
                });
            }
            Some(v)
        }
    };
    DiagramGraph::new(f.nodes.clone(), &f.edges, parts)
}

#[derive(Serialize, Deserialize)]
pub struct ConfigFile {
    pub lattice_id: String,
    pub diagram_id: String,
    pub roots: BTreeMap<String, Vec<ScalarPair>>,
}

#[derive(Serialize, Deserialize)]
pub struct CertificateFile {
    pub lattice_id: String,
    pub diagram_id: String,
    /// All pairwise inner products, keyed `label1|label2` with label1 < label2.
    pub inner_products: BTreeMap<String, ScalarPair>,
}

pub fn config_to_file<R: ComplexRing>(cfg: &RootConfiguration<R>) -> Result<ConfigFile> {
    let mut roots = BTreeMap::new();
    for (label, v) in cfg.roots() {
        roots.insert(label.clone(), vector_to_pairs(v)?);
    }
    Ok(ConfigFile {
        lattice_id: cfg.lattice_id.clone(),
        diagram_id: cfg.diagram_id.clone(),
        roots,
    })
}

pub fn certificate_for<R: ComplexRing>(cfg: &RootConfiguration<R>) -> Result<CertificateFile> {
    let mut inner_products = BTreeMap::new();
    for (key, ip) in cfg.pairwise_inner_products()? {
        inner_products.insert(key, scalar_to_pair(&ip)?);
    }
    Ok(CertificateFile {
        lattice_id: cfg.lattice_id.clone(),
        diagram_id: cfg.diagram_id.clone(),
        inner_products,
    })
}

/// Reconstructs the named lattice. Configuration files reference lattices by
/// id; the canonical constructions are the source of truth.
pub fn known_eisenstein_lattice(id: &str) -> Result<HermitianLattice<crate::ring::EisensteinInt>> {
    match id {
        "eisenstein_l14" => Ok(build_eisenstein_lattice()),
        other => Err(Error::InvalidInput(format!("unknown lattice id {other}"))),
    }
}

pub fn known_gaussian_lattice(id: &str) -> Result<HermitianLattice<crate::ring::GaussianInt>> {
    match id {
        "gaussian_d4x3h" => Ok(build_gaussian_lattice()),
        other => Err(Error::InvalidInput(format!("unknown lattice id {other}"))),
    }
}

pub fn known_diagram(id: &str) -> Result<DiagramGraph> {
    match id {
        "y555" => y_diagram(5, 5, 5),
        "y333" => y_diagram(3, 3, 3),
        "pp_f3" => projective_plane_incidence(3),
        "pp_f2" => projective_plane_incidence(2),
        other => Err(Error::InvalidInput(format!("unknown diagram id {other}"))),
    }
}

fn config_with_lattice<R: ComplexRing>(
    f: &ConfigFile,
    lattice: HermitianLattice<R>,
) -> Result<RootConfiguration<R>> {
    let diagram = known_diagram(&f.diagram_id)?;
    let roots: BTreeMap<String, Vec<R>> = f
        .roots
        .iter()
        .map(|(k, v)| (k.clone(), pairs_to_vector(v)))
        .collect();
    Ok(RootConfiguration::new(
        f.lattice_id.clone(),
        f.diagram_id.clone(),
        lattice,
        diagram,
        roots,
    ))
}

pub fn eisenstein_config_from_file(
    f: &ConfigFile,
) -> Result<RootConfiguration<crate::ring::EisensteinInt>> {
    config_with_lattice(f, known_eisenstein_lattice(&f.lattice_id)?)
}

pub fn gaussian_config_from_file(
    f: &ConfigFile,
) -> Result<RootConfiguration<crate::ring::GaussianInt>> {
    config_with_lattice(f, known_gaussian_lattice(&f.lattice_id)?)
}

/// Canonical JSON text: pretty-printed with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_canonical_json(value)?)?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn sha256_hex(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("sha256:{:x}", hasher.finalize()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::EisensteinInt;
    use crate::roots::seed_y555_roots;

    #[test]
    fn lattice_round_trip() {
        let lat = build_eisenstein_lattice();
        let f = lattice_to_file(&lat).unwrap();
        let back = lattice_from_file::<EisensteinInt>(&f).unwrap();
        assert!(lat.span_equals(&back));
        assert!(lattice_from_file::<crate::ring::GaussianInt>(&f).is_err());
    }

    #[test]
    fn graph_round_trip() {
        for g in [
            y_diagram(5, 5, 5).unwrap(),
            projective_plane_incidence(3).unwrap(),
        ] {
            let f = graph_to_file(&g);
            let back = graph_from_file(&f).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn config_round_trip_and_canonical_bytes() {
        let cfg = seed_y555_roots();
        let f = config_to_file(&cfg).unwrap();
        let text1 = to_canonical_json(&f).unwrap();
        let back = eisenstein_config_from_file(&f).unwrap();
        back.validate().unwrap();
        assert_eq!(back.roots(), cfg.roots());
        let text2 = to_canonical_json(&config_to_file(&back).unwrap()).unwrap();
        assert_eq!(text1, text2);
    }

    #[test]
    fn certificate_contents() {
        let cfg = seed_y555_roots();
        let cert = certificate_for(&cfg).unwrap();
        assert_eq!(cert.inner_products.len(), 120);
        assert_eq!(cert.inner_products["a|b1"], [1, 2]); // θ
    }
}
