//! Regenerates the canonical artifact files under data/. The two searched
//! configurations also have a CLI entry point (`hermlat search`); this
//! example writes every canonical file in one go.

use std::path::Path;

use hermlat::diagram::{projective_plane_incidence, y_diagram};
use hermlat::io;
use hermlat::lattice::{build_eisenstein_lattice, build_gaussian_lattice};
use hermlat::roots::{build_gaussian_configuration, search_extended_eisenstein, seed_y555_roots};

fn main() -> hermlat::Result<()> {
    let dir = Path::new("data");
    std::fs::create_dir_all(dir)?;

    io::write_json(
        &dir.join("lattice_eisenstein.json"),
        &io::lattice_to_file(&build_eisenstein_lattice())?,
    )?;
    io::write_json(
        &dir.join("lattice_gaussian.json"),
        &io::lattice_to_file(&build_gaussian_lattice())?,
    )?;
    io::write_json(
        &dir.join("diagram_y555.json"),
        &io::graph_to_file(&y_diagram(5, 5, 5)?),
    )?;
    io::write_json(
        &dir.join("incidence_f3.json"),
        &io::graph_to_file(&projective_plane_incidence(3)?),
    )?;
    io::write_json(
        &dir.join("incidence_f2.json"),
        &io::graph_to_file(&projective_plane_incidence(2)?),
    )?;

    let seeds = seed_y555_roots();
    io::write_json(&dir.join("config_y555.json"), &io::config_to_file(&seeds)?)?;
    io::write_json(
        &dir.join("config_y555.cert.json"),
        &io::certificate_for(&seeds)?,
    )?;

    let extended = search_extended_eisenstein()?
        .normalized
        .expect("search normalizes");
    io::write_json(
        &dir.join("config_26.json"),
        &io::config_to_file(&extended)?,
    )?;
    io::write_json(
        &dir.join("config_26.cert.json"),
        &io::certificate_for(&extended)?,
    )?;

    let gaussian = build_gaussian_configuration()?;
    io::write_json(
        &dir.join("config_gaussian14.json"),
        &io::config_to_file(&gaussian)?,
    )?;
    io::write_json(
        &dir.join("config_gaussian14.cert.json"),
        &io::certificate_for(&gaussian)?,
    )?;

    println!("canonical artifacts written to {}", dir.display());
    Ok(())
}
