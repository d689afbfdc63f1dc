//! Cells of the realization and the map onto synchronized coordinates.

use tamari_cubic::cells::{enumerate_cells, Cell};
use tamari_cubic::lattice::{PosetInstance, DEFAULT_SIZE_CAP};
use tamari_cubic::CubicCoordinate;

fn main() -> tamari_cubic::Result<()> {
    let cell = Cell::from_minimal(CubicCoordinate::new(vec![0, -1, 1, -1, -5, 0, 1, -1, -3])?)?;
    println!("min   {:?}", cell.minimal().entries());
    println!("max   {:?}", cell.maximal().entries());
    println!("gamma {:?}", cell.gamma().entries());
    println!("{} corners, all valid", cell.vertices()?.len());

    for n in 2..=5 {
        let poset = PosetInstance::build(n, DEFAULT_SIZE_CAP)?;
        let cells = enumerate_cells(&poset)?;
        let sync = poset.elements().iter().filter(|c| c.is_synchronized()).count();
        let interior: Vec<usize> = cells.iter().map(|c| c.interior(&poset).len()).collect();
        let extra = interior.iter().filter(|&&k| k > 1 << (n - 1)).count();
        println!("n={n}: {} cells, {sync} synchronized, {extra} cells hold more than their corners", cells.len());
    }
    Ok(())
}
