//! Cubic coordinates: validation, order, covers and the flags.
//!
//! `cargo run --example cubic_coordinates -- 9,-1,2,1,-4,4,3,1,-2`

use tamari_cubic::cubic::phi;
use tamari_cubic::io::parse_cc_text;
use tamari_cubic::CubicCoordinate;

fn main() -> tamari_cubic::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "9,-1,2,1,-4,4,3,1,-2".into());
    let c = parse_cc_text(&text)?;
    let tid = phi(&c);
    println!("c = {:?} (size {})", c.entries(), c.size());
    println!("u = {:?}", tid.u().letters());
    println!("v = {:?}", tid.v().letters());
    println!("synchronized: {}, new: {}", c.is_synchronized(), c.is_new());

    println!("covers:");
    for (i, up) in c.covers() {
        println!("  raise entry {i}: {:?}", up.entries());
    }
    for i in 1..c.size() {
        println!("zeroing entry {i}: {:?}", c.zero_entry(i)?.entries());
    }

    let n = c.size();
    println!("bottom {:?} {} c", CubicCoordinate::bottom(n).entries(), CubicCoordinate::bottom(n).compare(&c)?);
    println!("top {:?} {} c", CubicCoordinate::top(n).entries(), CubicCoordinate::top(n).compare(&c)?);

    if let Err(e) = CubicCoordinate::new(vec![2, -2]) {
        println!("(2, -2) is not a coordinate: {e}");
    }
    Ok(())
}
