//! Counting intervals and computing meets and joins.
//!
//! `cargo run --release --example lattice -- 7`

use tamari_cubic::lattice::{check_counts, PosetInstance, DEFAULT_SIZE_CAP};

fn main() -> tamari_cubic::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let report = check_counts(n_max, DEFAULT_SIZE_CAP)?;
    for row in &report.rows {
        println!("{row}");
    }
    println!("consistent: {}", report.is_consistent());

    let poset = PosetInstance::build(4, DEFAULT_SIZE_CAP)?;
    let a = poset.index_of(&tamari_cubic::CubicCoordinate::new(vec![1, -1, 0])?).expect("element");
    let b = poset.index_of(&tamari_cubic::CubicCoordinate::new(vec![-1, 1, -1])?).expect("element");
    println!(
        "\nin CC_4: {:?} meet {:?} = {:?}, join = {:?}",
        poset.element(a).entries(),
        poset.element(b).entries(),
        poset.element(poset.meet(a, b)?).entries(),
        poset.element(poset.join(a, b)?).entries()
    );
    println!("{} elements, {} cover edges", poset.len(), poset.edge_count());
    Ok(())
}
