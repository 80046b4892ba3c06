//! Builds the λ = 3 and λ = 6 designs on 144 points and writes them as JSON.
//!
//! ```text
//! cargo run --release --example build_designs -- [OUT_DIR]
//! ```

use std::path::PathBuf;

use flagtrans::design::classify_design;
use flagtrans::geometry::GeometryBundle;

fn main() -> flagtrans::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    let bundle = GeometryBundle::build()?;
    println!("|G| = {}, |P| = {}, |L| = {}", bundle.psl.g.order(), bundle.psl.p.order(), bundle.psl.l.order());
    println!("|A| = {}, |N_A(P)| = {}", bundle.ext.a.order(), bundle.ext.n_ap.order());

    for (name, d) in [("lambda3", bundle.d()), ("lambda6", bundle.d_prime())] {
        match classify_design(d) {
            Ok(p) => println!("{name}: 2-({},{},{}) with b = {}, r = {}", p.v, p.k, p.lambda, p.b, p.r),
            Err(diag) => println!("{name}: not a 2-design ({diag:?})"),
        }
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{name}.json"));
            std::fs::write(&path, serde_json::to_string(&d.to_file()?)?)?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
