//! Deciding the LCD property of cyclic codes structurally, with the
//! per-factor trace, and enumerating all LCD generator polynomials of a
//! given length.
//!
//! Run with: cargo run --example cyclic_lcd

use mplcd::cyclic::{lcd_generators, CyclicCode};
use mplcd::{Field, Inner, Poly, Result};

fn main() -> Result<()> {
    let f2 = Field::new(2, 1)?;

    // <x+1> with n = 10 is not LCD: multiplicity 1 is neither 0 nor p^t = 2
    for gen in ["x+1", "(x+1)^2"] {
        let g = Poly::parse(&f2, gen)?;
        let code = CyclicCode::new(&f2, 10, &g)?;
        let (lcd, trace) = code.is_lcd_structural(Inner::Euclidean)?;
        println!("n=10 over F_2, g = {gen}: LCD = {lcd}");
        for t in &trace {
            println!(
                "  factor {:<20} mult {}/{} partner #{} -> {:?}",
                t.factor.to_string(&f2),
                t.mult_in_g,
                t.mult_in_modulus,
                t.partner,
                t.outcome
            );
        }
    }

    // all LCD generators of length 10 over F_2 (there are exactly four)
    println!("\nLCD generator polynomials, n = 10 over F_2:");
    for g in lcd_generators(&f2, 10, Inner::Euclidean)? {
        let code = CyclicCode::new(&f2, 10, &g)?;
        println!("  [{}, {}]  g = {}", 10, code.dim(), g.to_string(&f2));
    }

    // counts grow with the factorization structure: length 12 over F_5 has
    // 4 self-paired factors and 2 reciprocal pairs, so 2^6 LCD generators
    let f5 = Field::new(5, 1)?;
    let gens = lcd_generators(&f5, 12, Inner::Euclidean)?;
    println!("\nn = 12 over F_5: {} of 256 divisors give LCD codes", gens.len());

    // Hermitian variant over F_4
    let f4 = Field::new(2, 2)?;
    let gens = lcd_generators(&f4, 5, Inner::Hermitian)?;
    println!("n = 5 over F_4 (Hermitian): {} LCD generators", gens.len());
    Ok(())
}
