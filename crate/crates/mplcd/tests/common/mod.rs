//! Independent oracles for the integration suites. These deliberately avoid
//! the library's own enumeration and intersection code paths so that an
//! agreement between oracle and implementation actually means something.
//!
//! Not every test binary uses every oracle.
#![allow(dead_code)]

use mplcd::gf::{Felt, Field, Inner};
use mplcd::linalg::Mat;
use mplcd::code::LinearCode;

/// Second, independently coded minimum-weight enumeration: a recursive
/// depth-first sweep over message digits with partial codeword sums, in
/// contrast to the library's iterative odometer. Only for q^k <= ~1e5.
pub fn min_weight_recursive(code: &LinearCode) -> usize {
    let field = code.field().clone();
    let gen = code.generator().clone();
    let n = code.len();
    let mut best = usize::MAX;

    fn rec(
        field: &Field,
        gen: &Mat,
        row: usize,
        word: &mut Vec<Felt>,
        any_nonzero_msg: bool,
        best: &mut usize,
    ) {
        if row == gen.rows() {
            if any_nonzero_msg {
                let wt = word.iter().filter(|c| !c.is_zero()).count();
                if wt < *best {
                    *best = wt;
                }
            }
            return;
        }
        for e in 0..field.q() {
            let c = field.elem_at(e);
            let saved: Vec<Felt> = if c.is_zero() {
                Vec::new()
            } else {
                let saved = word.clone();
                for (w, &g) in word.iter_mut().zip(gen.row(row)) {
                    *w = field.add(*w, field.mul(c, g));
                }
                saved
            };
            rec(field, gen, row + 1, word, any_nonzero_msg || !c.is_zero(), best);
            if !c.is_zero() {
                *word = saved;
            }
        }
    }

    let mut word = vec![field.zero(); n];
    rec(&field, &gen, 0, &mut word, false, &mut best);
    best
}

/// Brute-force hull dimension: count codewords of C lying in the chosen dual
/// by testing inner products against every generator row directly. The count
/// is q^h for the hull dimension h. Only for small codes.
pub fn brute_hull_dim(code: &LinearCode, inner: Inner) -> usize {
    let field = code.field().clone();
    let gen = code.generator();
    let mut members: u64 = 0;
    code.for_each_codeword(|w| {
        let mut in_dual = true;
        for i in 0..gen.rows() {
            let mut acc = field.zero();
            for (&a, &b) in w.iter().zip(gen.row(i)) {
                let rhs = match inner {
                    Inner::Euclidean => b,
                    Inner::Hermitian => field.frobenius_l(b).expect("even extension degree"),
                };
                acc = field.add(acc, field.mul(a, rhs));
            }
            if !acc.is_zero() {
                in_dual = false;
                break;
            }
        }
        if in_dual {
            members += 1;
        }
    });
    let mut h = 0;
    let mut count = 1u64;
    while count < members {
        count *= field.q();
        h += 1;
    }
    assert_eq!(count, members, "hull membership count must be a power of q");
    h
}
