//! Tamari diagrams, their duals, and compatible pairs.
//!
//! Run with `cargo run --example diagrams -- 4` to list every diagram of size 4.

use tamari_cubic::diagrams::{
    compatible_duals, enumerate_tamari_diagrams, enumerate_tids, validate_tamari, DualTamariDiagram, TamariDiagram,
};

fn main() -> tamari_cubic::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    let u = TamariDiagram::new(vec![9, 0, 2, 1, 0, 4, 3, 1, 0, 0])?;
    println!("u = {:?}, reversed is a dual diagram: {:?}", u.letters(), u.reversed().letters());
    if let Err(e) = validate_tamari(&[2, 2, 0]) {
        println!("[2, 2, 0] is rejected: {e}");
    }
    let v = DualTamariDiagram::new(vec![0, 0, 1, 0, 0, 4, 0, 0, 0, 2])?;
    println!("v = {:?}", v.letters());

    println!("\nTamari diagrams of size {n}:");
    let diagrams: Vec<_> = enumerate_tamari_diagrams(n)?.collect();
    for u in &diagrams {
        let duals = compatible_duals(u).count();
        println!("  {:?}  {duals} compatible duals", u.letters());
    }
    println!("{} diagrams, {} interval diagrams", diagrams.len(), enumerate_tids(n)?.count());
    Ok(())
}
