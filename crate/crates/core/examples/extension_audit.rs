//! The orbit argument for Aut(D) = G, step by step, plus the non-degenerate
//! triple factorization G = N_G(P)·L·N_G(P).

use flagtrans::design::{extension_uniqueness_audit, triple_factorization};
use flagtrans::geometry::GeometryBundle;
use flagtrans::permgroup;

fn main() -> flagtrans::Result<()> {
    let bundle = GeometryBundle::build()?;
    println!("involution of A outside G normalizing P: {}", bundle.ext.involution);
    println!("the bare polarity normalizes P: {}", bundle.ext.polarity_normalizes_p);

    let audit = extension_uniqueness_audit(&bundle)?;
    for c in &audit.checks {
        println!("({}) {:<5} {}: {}", c.id, if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }

    let n = permgroup::normalizer(&bundle.psl.g, &bundle.psl.p)?;
    let t = triple_factorization(&bundle.psl.g, &n, &bundle.psl.l)?;
    println!("|NL| = {}, |NLN| = {}, covers {}, degenerate {}", t.product_size, t.triple_product_size, t.covers, t.degenerate);
    Ok(())
}
