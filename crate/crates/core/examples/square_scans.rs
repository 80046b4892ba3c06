//! Exhaustive scans of the square equations F1..F8 and the block-count
//! factorizations b = λ·k·(k+1).
//!
//! ```text
//! cargo run --release --example square_scans -- [Q_MAX]
//! ```

use flagtrans::diophantine::{b_factorization, scan, Bounds, EquationFamily};

fn main() {
    let mut bounds = Bounds::default();
    if let Some(q) = std::env::args().nth(1).and_then(|s| s.parse().ok()) {
        bounds.q_max = q;
    }
    for f in EquationFamily::ALL {
        let r = scan(f, &bounds);
        println!("{f} {:<42} {:?} -> {}", r.equation, r.bounds, serde_json::to_string(&r.solutions).unwrap());
    }
    for b in [468u64, 936, 54880, 919_679_040, 1_839_358_080, 3_678_716_160] {
        println!("b = {b:>10}: (λ, k) = {:?}", b_factorization(b));
    }
}
