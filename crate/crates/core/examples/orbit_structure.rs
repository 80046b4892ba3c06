//! Orbits of the Frobenius group P = 13:3 on the 144 points, the tactical
//! configurations they cut out of the blocks through the base point, and
//! the (P, P) double cosets meeting L.

use flagtrans::design::tactical_params;
use flagtrans::geometry::{centrl_audit, GeometryBundle};
use flagtrans::permgroup;

fn main() -> flagtrans::Result<()> {
    let bundle = GeometryBundle::build()?;
    let psl = &bundle.psl;
    let base = psl.base_point;
    let through = bundle.d().blocks_through(base);

    println!("base point {base}; {} blocks through it", through.len());
    for o in permgroup::orbits(psl.p_perm.generators(), 144) {
        match tactical_params(&o, &through) {
            Ok(t) if o.len() > 1 => println!("orbit of length {:>2}: tactical ({},{},{},{})", o.len(), t.v0, t.b0, t.k0, t.r0),
            _ => println!("orbit of length {:>2}", o.len()),
        }
    }

    let psi = psl.lambda3.points.perm_of(&psl.psi);
    println!("ψ fixes {} points", psi.fixed_points().len());
    let n = permgroup::normalizer(&psl.g, &psl.psi_group)?;
    println!("|N_G(⟨ψ⟩)| = {}, element orders {:?}", n.order(), permgroup::order_census(&n));

    let report = centrl_audit(psl);
    for row in &report.rows {
        println!("{:<26} |PyP| = {:>3}  PyP ∩ L = {:?}  matches {}", row.label, row.double_coset_size, row.found.iter().map(ToString::to_string).collect::<Vec<_>>(), row.matches);
    }
    println!("double cosets partition G: {}", report.partition_of_g);
    Ok(())
}
