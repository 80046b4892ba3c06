//! Orders and outer automorphism groups of some simple classical groups.

use flagtrans::atlas::{named_order, out_order, simple_order, ClassicalType, Family};

fn main() -> flagtrans::Result<()> {
    let groups = [
        (Family::Psl, 3, 3),
        (Family::Psl, 5, 3),
        (Family::Psp, 6, 2),
        (Family::Psu, 4, 3),
        (Family::OmegaOdd, 7, 3),
        (Family::OmegaPlus, 8, 2),
        (Family::OmegaMinus, 10, 2),
        (Family::OmegaPlus, 20, 2),
    ];
    for (family, n, q) in groups {
        let t = ClassicalType::new(family, n, q)?;
        println!("{:<16} |X| = {:<60} |Out| = {}", t.to_string(), simple_order(&t)?, out_order(&t)?);
    }
    for name in ["M11", "J2", "A7", "S14", "POmega8+(2)"] {
        println!("{name:<12} {}", named_order(name)?);
    }
    Ok(())
}
