//! Runs the design checks on a block file, or on the λ = 3 design when no
//! file is given.
//!
//! ```text
//! cargo run --release --example verify_design -- [FILE]
//! ```

use flagtrans::cli::read_design;
use flagtrans::design::{classify_design, desdes_identities, flag_transitive, largeness_check, pp3_sweep, Verdict};
use flagtrans::geometry::GeometryBundle;
use flagtrans::permgroup;

fn main() -> flagtrans::Result<()> {
    let bundle = GeometryBundle::build()?;
    let d = match std::env::args().nth(1) {
        Some(path) => read_design(path.as_ref())?,
        None => bundle.d().clone(),
    };
    let params = match classify_design(&d) {
        Ok(p) => p,
        Err(diag) => {
            println!("not a 2-design: {diag:?}");
            std::process::exit(1);
        }
    };
    println!("parameters (v,b,k,r,λ) = ({},{},{},{},{})", params.v, params.b, params.k, params.r, params.lambda);
    println!("desdes identities: {:?}", desdes_identities(&params));

    for (name, group) in [("G", &bundle.psl.g_perm), ("A", &bundle.ext.a_perm)] {
        match flag_transitive(group, &d) {
            Ok(f) => {
                let sweep = pp3_sweep(group, &d)?;
                let pp3 = sweep.iter().all(|r| r.verdict == Verdict::Pass);
                let gx = permgroup::stabilizer(group, bundle.psl.base_point)?.order();
                let large = largeness_check(group.order() as u128, gx as u128)?;
                println!("{name}: {} flags in {} orbit(s); orbit condition at all points {pp3}; |{name}_x| = {gx}, large {large}", f.flags, f.orbits);
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
    Ok(())
}
