//! Cyclic codes via generator polynomials: dual generators under both inner
//! products, the structural LCD criteria, and exhaustive enumeration of LCD
//! generator polynomials.
//!
//! A length-n cyclic code is `<g>` for a monic divisor `g` of `x^n - 1`. With
//! `n = p^t * l_part` (`gcd(l_part, p) = 1`), every irreducible factor of
//! `x^n - 1` has multiplicity exactly `p^t`, and the code is LCD exactly when
//! every irreducible factor appears in `g` with multiplicity 0 or `p^t` and
//! with the same multiplicity as its (conjugate-)reciprocal partner.
//!
//! [`CyclicCode::is_lcd_structural`] evaluates that criterion, returns a
//! per-factor trace, and refuses to answer unless the verdict agrees with the
//! rank-based oracle on the expanded code.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Field, Inner};
use crate::linalg::Mat;
use crate::poly::{factorize, Poly};

/// A cyclic code, carrying the decomposition `n = p^t * l_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    field: Field,
    n: usize,
    g: Poly,
    t: u32,
    l_part: usize,
}

/// Why a factor passed or failed the structural criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleOutcome {
    Ok,
    MultiplicityNotZeroOrFull,
    PartnerMultiplicityMismatch,
}

/// One row of the structural-criterion trace: an irreducible factor of
/// `x^n - 1`, its multiplicities, its reciprocal partner and the rule applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionTrace {
    pub factor: Poly,
    pub mult_in_g: u32,
    pub mult_in_modulus: u32,
    pub partner: usize,
    pub self_paired: bool,
    pub outcome: RuleOutcome,
}

/// `n = p^t * l_part` with `gcd(l_part, p) = 1`.
pub fn n_decompose(n: usize, p: u64) -> (u32, usize) {
    let mut t = 0;
    let mut l = n;
    while l > 0 && l.is_multiple_of(p as usize) {
        l /= p as usize;
        t += 1;
    }
    (t, l)
}

impl CyclicCode {
    /// Validates that `g` divides `x^n - 1`; stores the monic associate.
    pub fn new(field: &Field, n: usize, g: &Poly) -> Result<CyclicCode> {
        if n == 0 {
            return Err(Error::LengthMismatch("cyclic code length must be >= 1".into()));
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = g.make_monic(field);
        let modulus = Poly::x_pow_minus_one(field, n);
        if !g.divides(field, &modulus) {
            return Err(Error::NotADivisor {
                divisor: g.to_string(field),
                dividend: modulus.to_string(field),
            });
        }
        let (t, l_part) = n_decompose(n, field.p());
        Ok(CyclicCode {
            field: field.clone(),
            n,
            g,
            t,
            l_part,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.n - self.g.degree().unwrap_or(0)
    }

    /// `(t, l_part)` with `n = p^t * l_part`.
    pub fn decomposition(&self) -> (u32, usize) {
        (self.t, self.l_part)
    }

    /// Expand to a generic linear code via the circulant rows
    /// `g, xg, ..., x^(n-deg g-1) g`.
    pub fn code(&self) -> LinearCode {
        let k = self.dim();
        let mut m = Mat::zeros(&self.field, k, self.n);
        for i in 0..k {
            for (j, &c) in self.g.coeffs().iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        LinearCode::from_generator(&self.field, &m)
    }

    /// `h = (x^n - 1) / g`, the check polynomial.
    pub fn check_poly(&self) -> Poly {
        Poly::x_pow_minus_one(&self.field, self.n)
            .div_exact(&self.field, &self.g)
            .expect("validated divisor")
    }

    /// Monic generator of the Euclidean dual: the monic reciprocal of the
    /// check polynomial. Cross-checked against the kernel of the circulant
    /// generator; a mismatch is a hard error.
    pub fn dual_generator(&self) -> Result<Poly> {
        let field = &self.field;
        let h = self.check_poly();
        let dual_gen = h.monic_reciprocal(field)?;
        let expected = self.code().dual();
        let direct = CyclicCode::new(field, self.n, &dual_gen)?.code();
        if direct != expected {
            return Err(Error::CrossCheck(
                "dual generator disagrees with the kernel-basis dual".into(),
            ));
        }
        Ok(dual_gen)
    }

    /// Monic generator of the Hermitian dual: the conjugate-reciprocal of the
    /// check polynomial. Cross-checked against the code-level Hermitian dual.
    pub fn hermitian_dual_generator(&self) -> Result<Poly> {
        let field = &self.field;
        let h = self.check_poly();
        let dual_gen = h.conjugate_reciprocal(field)?;
        let expected = self.code().hermitian_dual()?;
        let direct = CyclicCode::new(field, self.n, &dual_gen)?.code();
        if direct != expected {
            return Err(Error::CrossCheck(
                "Hermitian dual generator disagrees with the code-level dual".into(),
            ));
        }
        Ok(dual_gen)
    }

    /// Structural LCD criterion with a per-factor trace.
    ///
    /// The verdict is additionally compared against the rank-based
    /// [`LinearCode::is_lcd`] oracle; disagreement is a hard error.
    pub fn is_lcd_structural(&self, inner: Inner) -> Result<(bool, Vec<CriterionTrace>)> {
        let field = &self.field;
        let factors = factorize(field, &Poly::x_pow_minus_one(field, self.n))?;
        let pt = field.p().pow(self.t) as u32;

        // multiplicity of each irreducible factor in g
        let mut mults = Vec::with_capacity(factors.factors.len());
        for (f, _) in &factors.factors {
            let mut m = 0u32;
            let mut rest = self.g.clone();
            while f.divides(field, &rest) {
                rest = rest.div_exact(field, f)?;
                m += 1;
            }
            mults.push(m);
        }

        // partner under the (conjugate-)reciprocal transform; every factor of
        // x^n - 1 has its partner in the list because the factor set is
        // closed under both transforms
        let mut partners = Vec::with_capacity(factors.factors.len());
        for (f, _) in &factors.factors {
            let image = match inner {
                Inner::Euclidean => f.monic_reciprocal(field)?,
                Inner::Hermitian => f.conjugate_reciprocal(field)?,
            };
            let j = factors
                .factors
                .iter()
                .position(|(g, _)| *g == image)
                .ok_or_else(|| {
                    Error::CrossCheck("reciprocal partner missing from factor list".into())
                })?;
            partners.push(j);
        }

        let mut verdict = true;
        let mut trace = Vec::with_capacity(factors.factors.len());
        for (i, (f, _)) in factors.factors.iter().enumerate() {
            let outcome = if mults[i] != 0 && mults[i] != pt {
                RuleOutcome::MultiplicityNotZeroOrFull
            } else if mults[i] != mults[partners[i]] {
                RuleOutcome::PartnerMultiplicityMismatch
            } else {
                RuleOutcome::Ok
            };
            if outcome != RuleOutcome::Ok {
                verdict = false;
            }
            trace.push(CriterionTrace {
                factor: f.clone(),
                mult_in_g: mults[i],
                mult_in_modulus: pt,
                partner: partners[i],
                self_paired: partners[i] == i,
                outcome,
            });
        }

        let oracle = self.code().is_lcd(inner)?;
        if oracle != verdict {
            return Err(Error::CrossCheck(format!(
                "structural LCD criterion ({verdict}) disagrees with the rank oracle ({oracle}) \
                 for n={} g={}",
                self.n,
                self.g.to_string(field)
            )));
        }
        Ok((verdict, trace))
    }
}

/// All monic divisors of `x^n - 1`, in canonical order.
pub fn divisors_of_x_n_minus_1(field: &Field, n: usize) -> Result<Vec<Poly>> {
    let factors = factorize(field, &Poly::x_pow_minus_one(field, n))?;
    let mut out = vec![Poly::one(field)];
    for (f, mult) in &factors.factors {
        let mut next = Vec::with_capacity(out.len() * (*mult as usize + 1));
        let mut power = Poly::one(field);
        for e in 0..=*mult {
            if e > 0 {
                power = power.mul(field, f);
            }
            for d in &out {
                next.push(d.mul(field, &power));
            }
        }
        out = next;
    }
    out.sort_by_key(|a| a.order_key());
    Ok(out)
}

/// All generator polynomials of LCD cyclic codes of length n, built from the
/// factorization structure: self-paired factors take exponent 0 or p^t, and
/// reciprocal pairs take equal exponents in {0, p^t}.
pub fn lcd_generators(field: &Field, n: usize, inner: Inner) -> Result<Vec<Poly>> {
    let factors = factorize(field, &Poly::x_pow_minus_one(field, n))?;
    let (t, _) = n_decompose(n, field.p());
    let pt = field.p().pow(t) as u32;

    // group factors into self-paired singles and cross pairs
    let list = &factors.factors;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; list.len()];
    for i in 0..list.len() {
        if used[i] {
            continue;
        }
        let image = match inner {
            Inner::Euclidean => list[i].0.monic_reciprocal(field)?,
            Inner::Hermitian => list[i].0.conjugate_reciprocal(field)?,
        };
        let j = list
            .iter()
            .position(|(g, _)| *g == image)
            .ok_or_else(|| Error::CrossCheck("reciprocal partner missing".into()))?;
        used[i] = true;
        if j == i {
            groups.push(vec![i]);
        } else {
            used[j] = true;
            groups.push(vec![i, j]);
        }
    }

    let mut out = Vec::with_capacity(1 << groups.len());
    for mask in 0u32..(1 << groups.len()) {
        let mut g = Poly::one(field);
        for (bit, group) in groups.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                for &i in group {
                    g = g.mul(field, &list[i].0.pow(field, pt));
                }
            }
        }
        out.push(g);
    }
    out.sort_by_key(|a| a.order_key());
    Ok(out)
}
