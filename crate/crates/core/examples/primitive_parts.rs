//! Primitive parts Φ*_e(q), Zsigmondy primes, and the p-part bounds on a
//! block stabiliser.

use num_bigint::BigUint;

use flagtrans::arith::{kralj_bound, primitive_part, primitive_prime_divisors, sing_inequality, utakmica_min_xb_p};
use flagtrans::atlas::Family;

fn main() -> flagtrans::Result<()> {
    for (q, e) in [(2, 6), (7, 4), (3, 5), (2, 8), (2, 12)] {
        let r = primitive_part(q, e)?;
        println!("Φ*_{e}({q}) = {}", r.value);
    }

    println!("\nq\\e  {}", (3..=12).map(|e| format!("{e:>6}")).collect::<String>());
    for q in 2u64..=9 {
        let row: String = (3..=12).map(|e| format!("{:>6}", primitive_part(q, e).map(|r| r.value.to_string()).unwrap_or_default())).collect();
        println!("{q:>3}  {row}");
    }

    let ppd = primitive_prime_divisors(2, 12)?;
    println!("\nprimitive prime divisors of 2^12 - 1: {ppd:?}");

    let b = BigUint::from;
    println!("PSL(3,3), |X_x| = 39: |X| < |Out|²·|X_x|·|X_x|_3'² is {}", sing_inequality(&b(5616u32), &b(2u32), &b(39u32), 3));
    println!("PSp(6,2): |X_B|_2 ≥ {}", utakmica_min_xb_p(&b(512u32), &b(1u32), 2));

    for (family, n, q) in [(Family::Psl, 6, 2), (Family::Psp, 6, 2), (Family::Psu, 4, 3), (Family::OmegaPlus, 8, 3)] {
        let k = kralj_bound(family, n, q)?;
        println!("{family}_{n}({q}): exponent {}, |X_B|_p ≥ {}", k.exponent, k.threshold);
    }
    Ok(())
}
