//! Hermitian duality over F_{l^2}: duals via the entrywise l-th power,
//! conjugate-reciprocal generators, and why the length-17 cyclic codes over
//! F_25 generated by a single octic factor fail to be Hermitian LCD.
//!
//! Run with: cargo run --example hermitian

use mplcd::cyclic::CyclicCode;
use mplcd::poly::factorize;
use mplcd::{Field, Inner, Poly, Result};

fn main() -> Result<()> {
    // F_4: the Hermitian dual is the Euclidean dual of C^l
    let f4 = Field::new(2, 2)?;
    let c = CyclicCode::new(&f4, 3, &Poly::parse(&f4, "x+1")?)?;
    let hgen = c.hermitian_dual_generator()?;
    println!(
        "n=3 over F_4, g = x+1: Hermitian dual generated by {}",
        hgen.to_string(&f4)
    );
    let code = c.code();
    assert_eq!(code.hermitian_dual()?, code.pow_l()?.dual());

    // length 17 over F_25: x^17 - 1 = (x-1) * f * f^sigma with two octics
    let f25 = Field::new(5, 2)?;
    let fl = factorize(&f25, &Poly::x_pow_minus_one(&f25, 17))?;
    let octic = fl.factors[1].0.clone();
    let partner = octic.conjugate_reciprocal(&f25)?;
    println!(
        "\nn=17 over F_25: conjugate-reciprocal of the first octic is {} octic",
        if partner == fl.factors[2].0 { "the other" } else { "the same" }
    );

    // so <octic> is Euclidean LCD but its Hermitian hull is large
    let c = CyclicCode::new(&f25, 17, &octic)?;
    let (euclid, _) = c.is_lcd_structural(Inner::Euclidean)?;
    let (hermit, trace) = c.is_lcd_structural(Inner::Hermitian)?;
    println!("[17, {}] code <octic>: Euclidean LCD = {euclid}, Hermitian LCD = {hermit}", c.dim());
    println!("Hermitian hull dimension: {}", c.code().hull_dim(Inner::Hermitian)?);
    for t in trace.iter().filter(|t| t.outcome != mplcd::cyclic::RuleOutcome::Ok) {
        println!(
            "  failing factor (degree {}): multiplicity {} in g, partner #{} -> {:?}",
            t.factor.degree().unwrap(),
            t.mult_in_g,
            t.partner,
            t.outcome
        );
    }

    // the product of both octics generates the [17, 1] repetition-style code,
    // which IS Hermitian LCD
    let both = octic.mul(&f25, &fl.factors[2].0);
    let c = CyclicCode::new(&f25, 17, &both)?;
    let (hermit, _) = c.is_lcd_structural(Inner::Hermitian)?;
    println!("[17, {}] code <octic * octic^sigma>: Hermitian LCD = {hermit}", c.dim());
    Ok(())
}
