//! Binary trees, rotations, and the interval to coordinate bijection.

use tamari_cubic::trees::{psi, psi_inverse, BinaryTree, TamariInterval};

fn main() -> tamari_cubic::Result<()> {
    let n = 3;
    for t in BinaryTree::all(n) {
        let ups: Vec<String> = t.rotations_up().iter().map(|(i, s)| format!("{i}:{}", s.to_brackets())).collect();
        println!(
            "{:10} u={:?} v={:?} canopy={} rotations up [{}]",
            t.to_brackets(),
            t.tamari_diagram().letters(),
            t.dual_diagram().letters(),
            t.canopy(),
            ups.join(" ")
        );
    }

    let interval = TamariInterval::new(BinaryTree::left_comb(n), BinaryTree::right_comb(n))?;
    let c = psi(&interval);
    println!("\n[left comb, right comb] -> {:?}", c.entries());
    let back = psi_inverse(&c);
    println!("and back: [{}, {}]", back.lower().to_brackets(), back.upper().to_brackets());

    println!("\nall {} intervals of size {n}:", TamariInterval::all(n).len());
    for i in TamariInterval::all(n) {
        let sync = if i.is_synchronized() { " synchronized" } else { "" };
        println!("  [{}, {}] -> {:?}{sync}", i.lower().to_brackets(), i.upper().to_brackets(), psi(&i).entries());
    }
    Ok(())
}
