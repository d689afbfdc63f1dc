//! Runs every brute-force oracle comparison for sizes 1 to 5.

use tamari_cubic::lattice::DEFAULT_SIZE_CAP;
use tamari_cubic::oracle::cross_validate;

fn main() -> tamari_cubic::Result<()> {
    let mut all = true;
    for n in 1..=5 {
        let report = cross_validate(n, DEFAULT_SIZE_CAP)?;
        println!("{report}\n");
        all &= report.passed();
    }
    std::process::exit(if all { 0 } else { 4 });
}
