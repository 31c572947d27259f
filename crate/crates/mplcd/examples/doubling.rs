//! The length-doubling constructions [C, C] A (one 2x2 matrix per
//! characteristic) and the binary triple construction [C1, C1, C2] A: both
//! turn LCD inputs into longer LCD codes, and in characteristic 2 the
//! doubling preserves the exact minimum distance.
//!
//! Run with: cargo run --example doubling

use mplcd::code::DEFAULT_DISTANCE_BUDGET;
use mplcd::cyclic::{lcd_generators, CyclicCode};
use mplcd::mproduct::{double_construction, triple_binary, DoubleVariant};
use mplcd::{Field, Inner, Poly, Result};

fn main() -> Result<()> {
    // odd characteristic: A = [[1,1],[1,p-1]] is quasi-orthogonal
    let f5 = Field::new(5, 1)?;
    let c = CyclicCode::new(&f5, 12, &Poly::parse(&f5, "x+1")?)?.code();
    let doubled = double_construction(&c, DoubleVariant::OddChar)?;
    println!(
        "[{}, {}] doubles to [{}, {}], LCD = {}",
        c.len(),
        c.dim(),
        doubled.len(),
        doubled.dim(),
        doubled.is_lcd(Inner::Euclidean)?
    );

    // characteristic 2: A = [[1,1],[0,1]] is upper-triangular NSC, so the
    // doubled distance equals the input distance exactly
    let f2 = Field::new(2, 1)?;
    let c = CyclicCode::new(&f2, 10, &Poly::parse(&f2, "(x+1)^2")?)?.code();
    let doubled = double_construction(&c, DoubleVariant::Char2)?;
    let d_in = c.min_distance(DEFAULT_DISTANCE_BUDGET)?;
    let d_out = doubled.min_distance(DEFAULT_DISTANCE_BUDGET)?;
    println!(
        "[{}, {}, {}] doubles to [{}, {}, {}] over F_2",
        c.len(),
        c.dim(),
        d_in.value,
        doubled.len(),
        doubled.dim(),
        d_out.value
    );

    // iterating the doubling keeps codes LCD at every step
    let mut code = c.clone();
    for _ in 0..3 {
        code = double_construction(&code, DoubleVariant::Char2)?;
        assert!(code.is_lcd(Inner::Euclidean)?);
    }
    println!("three doublings: [{}, {}], still LCD", code.len(), code.dim());

    // the binary triple construction [C1, C1, C2] A
    let c2 = CyclicCode::new(&f2, 10, &Poly::parse(&f2, "(x^4+x^3+x^2+x+1)^2")?)?.code();
    let triple = triple_binary(&c, &c2)?;
    let d = triple.min_distance(DEFAULT_DISTANCE_BUDGET)?;
    println!(
        "triple of [10,8,2] and [10,2,5]: [{}, {}, {}], LCD = {}",
        triple.len(),
        triple.dim(),
        d.value,
        triple.is_lcd(Inner::Euclidean)?
    );

    // every LCD cyclic code of length <= 8 over F_5 stays LCD when doubled
    let mut count = 0;
    for n in 1..=8usize {
        for g in lcd_generators(&f5, n, Inner::Euclidean)? {
            let c = CyclicCode::new(&f5, n, &g)?.code();
            let d = double_construction(&c, DoubleVariant::OddChar)?;
            assert!(d.is_lcd(Inner::Euclidean)?);
            count += 1;
        }
    }
    println!("doubled {count} LCD cyclic codes over F_5; all outputs LCD");
    Ok(())
}
