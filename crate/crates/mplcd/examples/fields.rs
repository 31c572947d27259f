//! Finite field arithmetic tour: prime fields, extension fields, canonical
//! moduli and primitive elements, and the conjugation used by the Hermitian
//! inner product.
//!
//! Run with: cargo run --example fields

use mplcd::{Field, Result};

fn main() -> Result<()> {
    // prime field: the primitive element is the smallest generator
    let f5 = Field::new(5, 1)?;
    println!("F_5: primitive element {}", f5.elem_to_string(f5.primitive()));
    let three = f5.elem_int(3);
    let four = f5.elem_int(4);
    println!("  3 + 4 = {}", f5.elem_to_string(f5.add(three, four)));
    println!("  inv(2) = {}", f5.elem_to_string(f5.inv(f5.elem_int(2))?));

    // extension field: modulus chosen canonically, elements print as powers
    // of the designated primitive element w
    let f25 = Field::new(5, 2)?;
    println!("\nF_25: modulus {}, primitive w = 1 plus the basis root", f25.modulus_string());
    let w = f25.primitive();
    println!("  w has order {}", f25.order(w)?);
    let a = f25.parse_elem("w^7")?;
    let b = f25.parse_elem("2*w+3")?;
    println!(
        "  w^7 * (2w+3) = {}",
        f25.elem_to_string(f25.mul(a, b))
    );

    // the conjugation a -> a^l (l = 5 here) is an involution fixing F_5
    let conj = f25.frobenius_l(a)?;
    println!("  (w^7)^5 = {}", f25.elem_to_string(conj));
    assert_eq!(f25.frobenius_l(conj)?, a);
    assert_eq!(f25.frobenius_l(f25.elem_int(2))?, f25.elem_int(2));

    // every nonzero element is a power of w
    let f4 = Field::new(2, 2)?;
    print!("\nF_4 as powers of w: ");
    for e in f4.elements() {
        print!("{} ", f4.elem_to_string(e));
    }
    println!();
    Ok(())
}
