//! Factoring x^n - 1 and the reciprocal transforms that control cyclic-code
//! duality: plain reciprocal f*, monic reciprocal, and conjugate-reciprocal.
//!
//! Run with: cargo run --example factorization

use mplcd::poly::factorize;
use mplcd::{Field, Poly, Result};

fn main() -> Result<()> {
    let f5 = Field::new(5, 1)?;
    let fl = factorize(&f5, &Poly::x_pow_minus_one(&f5, 12))?;
    println!("x^12 - 1 over F_5 = {}", fl.to_string(&f5));

    // reciprocal pairing: x+2 and x+3 are partners, x+1 is its own
    for s in ["x+1", "x+2", "x^2+2*x+4"] {
        let p = Poly::parse(&f5, s)?;
        let r = p.monic_reciprocal(&f5)?;
        println!("  monic reciprocal of {s} is {}", r.to_string(&f5));
    }

    // repeated roots in characteristic p: multiplicities are powers of p
    let f2 = Field::new(2, 1)?;
    let fl = factorize(&f2, &Poly::x_pow_minus_one(&f2, 10))?;
    println!("\nx^10 - 1 over F_2 = {}", fl.to_string(&f2));

    // over F_25 the two octic factors of x^17 - 1 are each other's
    // conjugate-reciprocal, which decides the Hermitian LCD question for the
    // cyclic codes they generate (see the hermitian example)
    let f25 = Field::new(5, 2)?;
    let fl = factorize(&f25, &Poly::x_pow_minus_one(&f25, 17))?;
    println!("\nx^17 - 1 over F_25:");
    for (p, _) in &fl.factors {
        println!("  {}", p.to_string(&f25));
    }
    let a = &fl.factors[1].0;
    let b = &fl.factors[2].0;
    println!(
        "octic #1 conjugate-reciprocal equals octic #2: {}",
        a.conjugate_reciprocal(&f25)? == *b
    );
    println!(
        "octic #1 is Euclidean self-reciprocal: {}",
        a.monic_reciprocal(&f25)? == *a
    );
    Ok(())
}
