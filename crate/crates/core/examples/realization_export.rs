//! Writes the realization of one size as JSON, DOT and CSV.
//!
//! `cargo run --example realization_export -- 3 out/`

use std::fs;
use std::path::PathBuf;

use tamari_cubic::io::RealizationDocument;
use tamari_cubic::lattice::{PosetInstance, DEFAULT_SIZE_CAP};

fn main() -> tamari_cubic::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "realization".into()));
    fs::create_dir_all(&dir)?;

    let doc = RealizationDocument::from(&PosetInstance::build(n, DEFAULT_SIZE_CAP)?);
    fs::write(dir.join(format!("cc{n}.json")), doc.to_json()?)?;
    fs::write(dir.join(format!("cc{n}.dot")), doc.to_dot())?;
    fs::write(dir.join(format!("cc{n}.csv")), doc.vertices_csv())?;
    fs::write(dir.join(format!("cc{n}.edges.csv")), doc.edges_csv())?;
    println!("{} vertices, {} edges written to {}", doc.vertices.len(), doc.edges.len(), dir.display());
    Ok(())
}
