//! From a Tamari interval diagram to its interval-poset and back.

use tamari_cubic::diagrams::TamariIntervalDiagram;
use tamari_cubic::interval_posets::{chi, chi_inverse, IntervalPoset};

fn main() -> tamari_cubic::Result<()> {
    let tid = TamariIntervalDiagram::from_words(&[9, 0, 2, 1, 0, 4, 3, 1, 0, 0], &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2])?;
    let poset = chi(&tid);
    println!("decreasing relations (b precedes a, b > a):");
    for (b, a) in poset.decreasing_relations() {
        println!("  x{b} < x{a}");
    }
    println!("increasing relations (a precedes b, a < b):");
    for (a, b) in poset.increasing_relations() {
        println!("  x{a} < x{b}");
    }
    let back = chi_inverse(&poset);
    println!("recovered u = {:?}, v = {:?}", back.u().letters(), back.v().letters());
    assert_eq!(back, tid);

    // x1 < x3 without x2 < x3 breaks the increasing axiom.
    match IntervalPoset::from_relations(3, &[(1, 3)]) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("\n{{x1 < x3}} on three vertices: {e}"),
    }
    Ok(())
}
