//! Univariate polynomials over a [`Field`], complete factorization into
//! irreducibles, and the reciprocal transforms used by cyclic-code duality.
//!
//! Coefficients are stored ascending with no trailing zeros; the zero
//! polynomial is the empty sequence and its degree is `None`. Polynomials do
//! not carry their field; every operation takes the owning [`Field`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Felt, Field};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Felt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Felt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn x(field: &Field) -> Poly {
        Poly {
            coeffs: vec![field.zero(), field.one()],
        }
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Felt, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Felt>) -> Poly {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| field.elem_int(c)).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.neg(field.one());
        coeffs[n] = field.one();
        Poly::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial (by convention, not a sentinel).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, field: &Field, k: usize) -> Felt {
        self.coeffs.get(k).copied().unwrap_or_else(|| field.zero())
    }

    pub fn leading(&self) -> Option<Felt> {
        self.coeffs.last().copied()
    }

    pub fn constant_term(&self, field: &Field) -> Felt {
        self.coeff(field, 0)
    }

    pub fn is_monic(&self, field: &Field) -> bool {
        self.leading() == Some(field.one())
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(self.coeff(field, i), other.coeff(field, i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, field: &Field, other: &Poly) -> Poly {
        self.add(field, &other.neg(field))
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: Felt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, field: &Field, mut n: u32) -> Poly {
        let mut result = Poly::one(field);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(field, &base);
            }
            base = base.mul(field, &base);
            n >>= 1;
        }
        result
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divmod(&self, field: &Field, g: &Poly) -> Result<(Poly, Poly)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.degree().unwrap();
        let lead_inv = field.inv(g.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(dg)];
        while rem.len() > dg {
            let c = field.mul(*rem.last().unwrap(), lead_inv);
            let k = rem.len() - 1 - dg;
            if !c.is_zero() {
                quot[k] = c;
                for (i, &gc) in g.coeffs.iter().enumerate() {
                    rem[k + i] = field.sub(rem[k + i], field.mul(c, gc));
                }
            }
            rem.pop();
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, field: &Field, g: &Poly) -> Result<Poly> {
        Ok(self.divmod(field, g)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, field: &Field, g: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(field, g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor {
                divisor: g.to_string(field),
                dividend: self.to_string(field),
            });
        }
        Ok(q)
    }

    pub fn divides(&self, field: &Field, dividend: &Poly) -> bool {
        if self.is_zero() {
            return dividend.is_zero();
        }
        dividend.rem(field, self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &Field, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b).expect("b nonzero");
            a = std::mem::replace(&mut b, r);
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic(field)
        }
    }

    pub fn lcm(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(field, other);
        self.mul(field, other)
            .div_exact(field, &g)
            .expect("gcd divides the product")
            .make_monic(field)
    }

    pub fn make_monic(&self, field: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(c) if c == field.one() => self.clone(),
            Some(c) => self.scale(field, field.inv(c).expect("leading coefficient nonzero")),
        }
    }

    pub fn eval(&self, field: &Field, x: Felt) -> Felt {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, field: &Field) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| field.mul(field.elem_int(i as i64), c))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `self^n mod g` by square and multiply.
    pub fn pow_mod(&self, field: &Field, mut n: u64, g: &Poly) -> Result<Poly> {
        let mut result = Poly::one(field).rem(field, g)?;
        let mut base = self.rem(field, g)?;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(field, &base).rem(field, g)?;
            }
            base = base.mul(field, &base).rem(field, g)?;
            n >>= 1;
        }
        Ok(result)
    }

    /// Reciprocal `f*(x) = x^deg(f) f(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Monic reciprocal `f~ = f(0)^{-1} f*`; requires a nonzero constant term.
    pub fn monic_reciprocal(&self, field: &Field) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = self.constant_term(field);
        if c.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(self.reciprocal()?.scale(field, field.inv(c)?))
    }

    /// Conjugate-reciprocal: reverse the coefficients, apply `a -> a^l` to
    /// each, and normalize monic by the conjugated constant term. Requires an
    /// even extension degree and a nonzero constant term.
    pub fn conjugate_reciprocal(&self, field: &Field) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let a0 = self.constant_term(field);
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let scale = field.inv(field.frobenius_l(a0)?)?;
        let coeffs: Result<Vec<Felt>> = self
            .coeffs
            .iter()
            .rev()
            .map(|&c| Ok(field.mul(field.frobenius_l(c)?, scale)))
            .collect();
        Ok(Poly::from_coeffs(coeffs?))
    }

    /// Apply `a -> a^l` to every coefficient.
    pub fn map_frobenius(&self, field: &Field) -> Result<Poly> {
        let coeffs: Result<Vec<Felt>> =
            self.coeffs.iter().map(|&c| field.frobenius_l(c)).collect();
        Ok(Poly::from_coeffs(coeffs?))
    }

    /// Canonical ordering key: degree, then coefficients from the leading
    /// term down (so factor lists sort the way tables are usually printed).
    pub fn order_key(&self) -> (usize, Vec<u64>) {
        let deg = self.coeffs.len();
        let key = self.coeffs.iter().rev().map(|c| c.index()).collect();
        (deg, key)
    }

    pub fn to_string(&self, field: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = field.elem_to_string(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            let term = match (i, cs.as_str()) {
                (0, _) => cs,
                (1, "1") => "x".into(),
                (1, _) => format!("{cs}*x"),
                (_, "1") => format!("x^{i}"),
                (_, _) => format!("{cs}*x^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parse a polynomial expression. Accepts sums of terms (`x^2+4*x+3`),
    /// products of parenthesized factors with powers (`(x+1)^2*(x^4+x+1)`,
    /// `*` optional), and `w`-power coefficients over extension fields.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        Parser::new(field, s)?.parse()
    }
}

/// Unit times powers of monic irreducibles; `unit * prod factors^mult`
/// reproduces the factored polynomial exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    pub unit: Felt,
    pub factors: Vec<(Poly, u32)>,
}

impl FactorList {
    /// Multiply the factorization back out.
    pub fn product(&self, field: &Field) -> Poly {
        let mut acc = Poly::constant(self.unit);
        for (f, mult) in &self.factors {
            acc = acc.mul(field, &f.pow(field, *mult));
        }
        acc
    }

    /// Multiplicity of a monic polynomial in this list (0 when absent).
    pub fn multiplicity(&self, f: &Poly) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn to_string(&self, field: &Field) -> String {
        let mut parts = Vec::new();
        if self.unit != field.one() || self.factors.is_empty() {
            parts.push(field.elem_to_string(self.unit));
        }
        for (f, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({})", f.to_string(field)));
            } else {
                parts.push(format!("({})^{}", f.to_string(field), m));
            }
        }
        parts.join("*")
    }
}

/// Complete factorization over the field: squarefree decomposition (with
/// p-th-root descent where the derivative vanishes), then distinct-degree
/// splitting, then randomized equal-degree splitting. The splitting RNG is
/// seeded from the input, so results are reproducible.
pub fn factorize(field: &Field, f: &Poly) -> Result<FactorList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading().unwrap();
    let monic = f.make_monic(field);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    if monic.degree() == Some(0) {
        return Ok(FactorList { unit, factors });
    }
    let mut rng = rng_for(field, f);
    for (part, mult) in squarefree_parts(field, &monic) {
        for (prod, d) in distinct_degree_parts(field, &part)? {
            let mut irreducibles = Vec::new();
            equal_degree_split(field, &prod, d, &mut rng, &mut irreducibles)?;
            for irr in irreducibles {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by_key(|a| a.0.order_key());
    debug_assert_eq!(
        FactorList { unit, factors: factors.clone() }.product(field),
        *f
    );
    Ok(FactorList { unit, factors })
}

fn rng_for(field: &Field, f: &Poly) -> ChaCha8Rng {
    // FNV-style content hash so factoring the same input is reproducible
    let mut h: u64 = 0xcbf29ce484222325;
    let mut mix = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x100000001b3);
    };
    mix(field.p());
    mix(field.m() as u64);
    for &c in field.modulus() {
        mix(c);
    }
    for &c in f.coeffs() {
        mix(c.index());
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// `f` monic nonconstant; returns pairwise-coprime squarefree parts with
/// multiplicities so that `f = prod part^mult`.
fn squarefree_parts(field: &Field, f: &Poly) -> Vec<(Poly, u32)> {
    let p = field.p() as u32;
    let mut result = Vec::new();
    let deriv = f.derivative(field);
    if deriv.is_zero() {
        for (part, mult) in squarefree_parts(field, &pth_root(field, f)) {
            result.push((part, mult * p));
        }
        return result;
    }
    let mut c = f.gcd(field, &deriv);
    let mut w = f.div_exact(field, &c).expect("gcd divides");
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(field, &c);
        let z = w.div_exact(field, &y).expect("gcd divides");
        if z.degree().unwrap() > 0 {
            result.push((z, i));
        }
        w = y;
        c = c.div_exact(field, &w).expect("gcd divides");
        i += 1;
    }
    if c.degree() != Some(0) {
        for (part, mult) in squarefree_parts(field, &pth_root(field, &c)) {
            result.push((part, mult * p));
        }
    }
    result
}

/// p-th root of a polynomial in `x^p` (all exponents divisible by p):
/// take every p-th coefficient and its p-th root `a^(p^(m-1))`.
fn pth_root(field: &Field, f: &Poly) -> Poly {
    let p = field.p() as usize;
    let root_exp = field.p().pow(field.m() - 1);
    debug_assert!(f
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % p == 0 || c.is_zero()));
    let coeffs: Vec<Felt> = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| field.pow(c, root_exp))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Squarefree monic input; returns (product of all irreducible factors of
/// degree d, d) pairs.
fn distinct_degree_parts(field: &Field, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut result = Vec::new();
    let mut g = f.clone();
    let x = Poly::x(field);
    let mut h = x.rem(field, &g)?;
    let mut d = 0usize;
    while let Some(deg) = g.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            result.push((g.clone(), deg));
            break;
        }
        h = h.pow_mod(field, field.q(), &g)?;
        let part = h.sub(field, &x).gcd(field, &g);
        if part.degree() != Some(0) {
            result.push((part.clone(), d));
            g = g.div_exact(field, &part)?;
            h = h.rem(field, &g)?;
        }
    }
    Ok(result)
}

/// Cantor-Zassenhaus equal-degree splitting of a product of distinct monic
/// irreducibles, all of degree `d`.
fn equal_degree_split(
    field: &Field,
    f: &Poly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    let split = loop {
        let a = random_poly(field, deg, rng);
        if a.degree().is_none_or(|da| da == 0) {
            continue;
        }
        let g1 = a.gcd(field, f);
        if g1.degree() != Some(0) && g1.degree() != f.degree() {
            break g1;
        }
        let b = if field.p() == 2 {
            // trace map: a + a^2 + a^4 + ... over F_{2^(m d)}
            let steps = (field.m() as usize) * d;
            let mut acc = a.rem(field, f)?;
            let mut t = acc.clone();
            for _ in 1..steps {
                t = t.mul(field, &t).rem(field, f)?;
                acc = acc.add(field, &t);
            }
            acc
        } else {
            // norm down to F_q, then raise to (q-1)/2; avoids huge exponents
            let mut conj = a.rem(field, f)?;
            let mut norm = conj.clone();
            for _ in 1..d {
                conj = conj.pow_mod(field, field.q(), f)?;
                norm = norm.mul(field, &conj).rem(field, f)?;
            }
            let half = norm.pow_mod(field, (field.q() - 1) / 2, f)?;
            half.sub(field, &Poly::one(field))
        };
        let g = b.gcd(field, f);
        if g.degree() != Some(0) && g.degree() != f.degree() {
            break g;
        }
    };
    let rest = f.div_exact(field, &split)?;
    equal_degree_split(field, &split, d, rng, out)?;
    equal_degree_split(field, &rest, d, rng, out)
}

fn random_poly(field: &Field, max_deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = (0..max_deg)
        .map(|_| field.elem_at(rng.gen_range(0..field.q())))
        .collect();
    Poly::from_coeffs(coeffs)
}

// --- expression parser ---

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    X,
    W,
    Caret,
    Star,
    Plus,
    Minus,
    Open,
    Close,
}

struct Parser<'f> {
    field: &'f Field,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'f> Parser<'f> {
    fn new(field: &'f Field, s: &str) -> Result<Parser<'f>> {
        let mut toks = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            match c {
                c if c.is_whitespace() => {
                    chars.next();
                }
                '0'..='9' => {
                    let mut v: u64 = 0;
                    while let Some(&d) = chars.peek() {
                        if let Some(dv) = d.to_digit(10) {
                            v = v
                                .checked_mul(10)
                                .and_then(|v| v.checked_add(dv as u64))
                                .ok_or_else(|| Error::Parse("integer overflow".into()))?;
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    toks.push(Tok::Int(v));
                }
                'x' => {
                    chars.next();
                    toks.push(Tok::X);
                }
                'w' => {
                    chars.next();
                    toks.push(Tok::W);
                }
                '^' => {
                    chars.next();
                    toks.push(Tok::Caret);
                }
                '*' => {
                    chars.next();
                    toks.push(Tok::Star);
                }
                '+' => {
                    chars.next();
                    toks.push(Tok::Plus);
                }
                '-' | '−' => {
                    chars.next();
                    toks.push(Tok::Minus);
                }
                '(' => {
                    chars.next();
                    toks.push(Tok::Open);
                }
                ')' => {
                    chars.next();
                    toks.push(Tok::Close);
                }
                other => {
                    return Err(Error::Parse(format!("unexpected character `{other}`")));
                }
            }
        }
        Ok(Parser { field, toks, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse(&mut self) -> Result<Poly> {
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(Error::Parse("trailing input after polynomial".into()));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                negate = true;
            }
            Some(Tok::Plus) => {
                self.next();
            }
            _ => {}
        }
        let mut acc = self.product()?;
        if negate {
            acc = acc.neg(self.field);
        }
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    let t = self.product()?;
                    acc = acc.add(self.field, &t);
                }
                Tok::Minus => {
                    self.next();
                    let t = self.product()?;
                    acc = acc.sub(self.field, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let t = self.power()?;
                    acc = acc.mul(self.field, &t);
                }
                // implicit multiplication: `2x`, `(x+1)(x+2)`, `2*w^3x`
                Some(Tok::Open | Tok::X | Tok::W | Tok::Int(_)) => {
                    let t = self.power()?;
                    acc = acc.mul(self.field, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Tok::Int(k)) if k <= 10_000 => Ok(base.pow(self.field, k as u32)),
                _ => Err(Error::Parse(
                    "exponent must be a small nonnegative integer".into(),
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(Poly::constant(self.field.elem_int(v as i64))),
            Some(Tok::X) => Ok(Poly::x(self.field)),
            Some(Tok::W) => {
                if self.field.m() == 1 {
                    Err(Error::Parse("`w` is only defined for extension fields".into()))
                } else {
                    Ok(Poly::constant(self.field.primitive()))
                }
            }
            Some(Tok::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(inner),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn arithmetic_matches_hand_results() {
        let f = f5();
        let a = Poly::parse(&f, "x+1").unwrap();
        let b = Poly::parse(&f, "x+4").unwrap();
        assert_eq!(a.mul(&f, &b), Poly::parse(&f, "x^2+4").unwrap());

        let (q, r) = Poly::parse(&f, "x^2-1").unwrap().divmod(&f, &a).unwrap();
        assert_eq!(q, Poly::parse(&f, "x+4").unwrap());
        assert!(r.is_zero());

        let g = Poly::x_pow_minus_one(&f, 12).gcd(&f, &a);
        assert_eq!(g, a);
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(Poly::zero().degree(), None);
        assert!(Poly::zero().reciprocal().is_err());
        let f = f5();
        assert!(Poly::one(&f).divmod(&f, &Poly::zero()).is_err());
    }

    #[test]
    fn parse_and_print_round_trip() {
        let f = f5();
        for s in ["x^2+4*x+3", "x", "4", "x^12+4", "x^3+2*x"] {
            let p = Poly::parse(&f, s).unwrap();
            assert_eq!(p.to_string(&f), s);
        }
        // product and power forms
        let p = Poly::parse(&f, "(x+1)(x+4)").unwrap();
        assert_eq!(p, Poly::parse(&f, "x^2+4").unwrap());
        let p = Poly::parse(&f, "(x+1)^2").unwrap();
        assert_eq!(p, Poly::parse(&f, "x^2+2*x+1").unwrap());
        assert_eq!(Poly::parse(&f, "x^12-1").unwrap(), Poly::x_pow_minus_one(&f, 12));
        assert!(Poly::parse(&f, "x^2+*1").is_err());
        assert!(Poly::parse(&f, "y").is_err());
        assert!(Poly::parse(&f, "(x+1").is_err());

        let f4 = Field::new(2, 2).unwrap();
        let p = Poly::parse(&f4, "x+w").unwrap();
        assert_eq!(p.coeff(&f4, 0), f4.primitive());
        assert_eq!(p.to_string(&f4), "x+w");
    }

    #[test]
    fn reciprocal_transforms() {
        let f = f5();
        // (x^2+2x+3)* = 3x^2+2x+1
        let p = Poly::parse(&f, "x^2+2*x+3").unwrap();
        assert_eq!(p.reciprocal().unwrap(), Poly::parse(&f, "3*x^2+2*x+1").unwrap());
        // palindromic
        let p = Poly::parse(&f, "x+1").unwrap();
        assert_eq!(p.reciprocal().unwrap(), p);
        // (x+2)* = 2x+1; monic reciprocal x+3
        let p = Poly::parse(&f, "x+2").unwrap();
        assert_eq!(p.reciprocal().unwrap(), Poly::parse(&f, "2*x+1").unwrap());
        assert_eq!(p.monic_reciprocal(&f).unwrap(), Poly::parse(&f, "x+3").unwrap());
        // self-reciprocal cases
        let p = Poly::parse(&f, "x+1").unwrap();
        assert_eq!(p.monic_reciprocal(&f).unwrap(), p);
        let f2 = Field::new(2, 1).unwrap();
        let p = Poly::parse(&f2, "x^4+x^3+x^2+x+1").unwrap();
        assert_eq!(p.monic_reciprocal(&f2).unwrap(), p);
        // zero constant term is an error
        assert!(Poly::parse(&f, "x^2+x").unwrap().monic_reciprocal(&f).is_err());
    }

    #[test]
    fn conjugate_reciprocal_small_fields() {
        // F_4: (x+w)⊥ = x+w since w^{-2}(1 + w^2 x) = x + w (w^3 = 1)
        let f4 = Field::new(2, 2).unwrap();
        let p = Poly::parse(&f4, "x+w").unwrap();
        assert_eq!(p.conjugate_reciprocal(&f4).unwrap(), p);
        let p1 = Poly::parse(&f4, "x+1").unwrap();
        assert_eq!(p1.conjugate_reciprocal(&f4).unwrap(), p1);
        // F_9: x+2 has prime-subfield coefficients; 2^{-3}(1 + 2^3 x) = x+2
        let f9 = Field::new(3, 2).unwrap();
        let p = Poly::parse(&f9, "x+2").unwrap();
        assert_eq!(p.conjugate_reciprocal(&f9).unwrap(), p);
        // odd extension degree is an error
        let f5 = f5();
        assert!(Poly::parse(&f5, "x+2").unwrap().conjugate_reciprocal(&f5).is_err());
    }

    #[test]
    fn factorization_golden_f5_x12() {
        let f = f5();
        let fl = factorize(&f, &Poly::x_pow_minus_one(&f, 12)).unwrap();
        let expected: Vec<Poly> = [
            "x+1",
            "x+2",
            "x+3",
            "x+4",
            "x^2+x+1",
            "x^2+2*x+4",
            "x^2+3*x+4",
            "x^2+4*x+1",
        ]
        .iter()
        .map(|s| Poly::parse(&f, s).unwrap())
        .collect();
        let got: Vec<Poly> = fl.factors.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(got, expected);
        assert!(fl.factors.iter().all(|(_, m)| *m == 1));
        assert_eq!(fl.unit, f.one());
    }

    #[test]
    fn factorization_golden_trivial_difference_of_squares() {
        let f = f5();
        let fl = factorize(&f, &Poly::parse(&f, "x^2-1").unwrap()).unwrap();
        let got: Vec<Poly> = fl.factors.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(
            got,
            vec![Poly::parse(&f, "x+1").unwrap(), Poly::parse(&f, "x+4").unwrap()]
        );
    }

    #[test]
    fn factorization_golden_f2_x10_repeated_roots() {
        let f = Field::new(2, 1).unwrap();
        let fl = factorize(&f, &Poly::x_pow_minus_one(&f, 10)).unwrap();
        assert_eq!(fl.factors.len(), 2);
        assert_eq!(fl.factors[0], (Poly::parse(&f, "x+1").unwrap(), 2));
        assert_eq!(fl.factors[1], (Poly::parse(&f, "x^4+x^3+x^2+x+1").unwrap(), 2));
    }

    #[test]
    fn factorization_product_reproduces_input() {
        // includes non-monic input and repeated-root cases
        let fields = [
            Field::new(5, 1).unwrap(),
            Field::new(2, 2).unwrap(),
            Field::new(3, 2).unwrap(),
        ];
        for f in &fields {
            for n in 1..=12usize {
                let base = Poly::x_pow_minus_one(f, n);
                let scaled = base.scale(f, f.primitive());
                for input in [base, scaled] {
                    let fl = factorize(f, &input).unwrap();
                    assert_eq!(fl.product(f), input, "over {} with n={n}", f.descriptor());
                }
            }
        }
        assert!(factorize(&f5(), &Poly::zero()).is_err());
    }

    #[test]
    fn multiplicities_are_p_powers_for_x_n_minus_1() {
        for (p, m) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2)] {
            let f = Field::new(p, m).unwrap();
            for n in 1..=14usize {
                let fl = factorize(&f, &Poly::x_pow_minus_one(&f, n)).unwrap();
                let mut rest = n;
                let mut pt = 1u32;
                while rest % p as usize == 0 {
                    rest /= p as usize;
                    pt *= p as u32;
                }
                assert!(
                    fl.factors.iter().all(|(_, mult)| *mult == pt),
                    "n={n} over {}",
                    f.descriptor()
                );
            }
        }
    }

    #[test]
    fn f25_octics_are_conjugate_reciprocal_pair() {
        let f = Field::new(5, 2).unwrap();
        let fl = factorize(&f, &Poly::x_pow_minus_one(&f, 17)).unwrap();
        assert_eq!(fl.factors.len(), 3);
        let degs: Vec<usize> = fl.factors.iter().map(|(p, _)| p.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 8, 8]);
        let a = &fl.factors[1].0;
        let b = &fl.factors[2].0;
        // each octic is Euclidean self-reciprocal, and they are each other's
        // conjugate-reciprocal partner
        assert_eq!(&a.monic_reciprocal(&f).unwrap(), a);
        assert_eq!(&b.monic_reciprocal(&f).unwrap(), b);
        assert_eq!(&a.conjugate_reciprocal(&f).unwrap(), b);
        assert_eq!(&b.conjugate_reciprocal(&f).unwrap(), a);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn poly_f5(max_deg: usize) -> impl Strategy<Value = Poly> {
            proptest::collection::vec(0u32..5, 0..=max_deg + 1).prop_map(|cs| {
                let f = Field::new(5, 1).unwrap();
                Poly::from_coeffs(cs.into_iter().map(|c| f.elem_int(c as i64)).collect())
            })
        }

        proptest! {
            #[test]
            fn divmod_identity(f in poly_f5(8), g in poly_f5(5)) {
                prop_assume!(!g.is_zero());
                let field = Field::new(5, 1).unwrap();
                let (q, r) = f.divmod(&field, &g).unwrap();
                prop_assert_eq!(q.mul(&field, &g).add(&field, &r), f);
                if let (Some(dr), Some(dg)) = (r.degree(), g.degree()) {
                    prop_assert!(dr < dg);
                }
            }

            #[test]
            fn reciprocal_is_involution(f in poly_f5(8)) {
                let field = Field::new(5, 1).unwrap();
                prop_assume!(!f.constant_term(&field).is_zero());
                prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f.clone());
                // and the monic reciprocal is an involution on monic inputs
                let monic = f.make_monic(&field);
                let back = monic
                    .monic_reciprocal(&field).unwrap()
                    .monic_reciprocal(&field).unwrap();
                prop_assert_eq!(back, monic);
            }

            #[test]
            fn reciprocal_is_multiplicative(f in poly_f5(6), g in poly_f5(6)) {
                let field = Field::new(5, 1).unwrap();
                prop_assume!(!f.constant_term(&field).is_zero());
                prop_assume!(!g.constant_term(&field).is_zero());
                let lhs = f.mul(&field, &g).reciprocal().unwrap();
                let rhs = f.reciprocal().unwrap().mul(&field, &g.reciprocal().unwrap());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn gcd_divides_both(f in poly_f5(8), g in poly_f5(8)) {
                prop_assume!(!f.is_zero() || !g.is_zero());
                let field = Field::new(5, 1).unwrap();
                let d = f.gcd(&field, &g);
                prop_assert!(d.divides(&field, &f));
                prop_assert!(d.divides(&field, &g));
                prop_assert!(d.is_monic(&field));
            }

            #[test]
            fn factorization_round_trips(f in poly_f5(9)) {
                prop_assume!(!f.is_zero());
                let field = Field::new(5, 1).unwrap();
                let fl = factorize(&field, &f).unwrap();
                prop_assert_eq!(fl.product(&field), f);
            }

            #[test]
            fn conjugate_reciprocal_twice_is_monic_associate(cs in proptest::collection::vec(0u32..4, 1..8)) {
                let field = Field::new(2, 2).unwrap();
                let f = Poly::from_coeffs(cs.into_iter().map(|c| field.elem_at(c as u64)).collect());
                prop_assume!(!f.constant_term(&field).is_zero());
                let twice = f
                    .conjugate_reciprocal(&field).unwrap()
                    .conjugate_reciprocal(&field).unwrap();
                prop_assert_eq!(twice, f.make_monic(&field));
            }
        }
    }

    #[test]
    fn listed_factors_pass_independent_irreducibility_check() {
        // trial division by every monic polynomial up to half degree
        fn assert_irreducible(f: &Field, p: &Poly) {
            let deg = p.degree().unwrap();
            for d in 1..=deg / 2 {
                let q = f.q();
                let count = q.pow(d as u32);
                for idx in 0..count {
                    let mut rest = idx;
                    let mut coeffs: Vec<Felt> = (0..d)
                        .map(|_| {
                            let c = f.elem_at(rest % q);
                            rest /= q;
                            c
                        })
                        .collect();
                    coeffs.push(f.one());
                    let cand = Poly::from_coeffs(coeffs);
                    assert!(
                        !cand.divides(f, p),
                        "{} divides {}",
                        cand.to_string(f),
                        p.to_string(f)
                    );
                }
            }
        }
        let f = f5();
        for (p, _) in factorize(&f, &Poly::x_pow_minus_one(&f, 12)).unwrap().factors {
            assert_irreducible(&f, &p);
        }
        let f13 = Field::new(13, 1).unwrap();
        for (p, _) in factorize(&f13, &Poly::x_pow_minus_one(&f13, 10)).unwrap().factors {
            assert_irreducible(&f13, &p);
        }
        // extension fields, including the repeated-root case over F_9 and
        // the octic factors over F_25
        let f9 = Field::new(3, 2).unwrap();
        for (p, _) in factorize(&f9, &Poly::x_pow_minus_one(&f9, 12)).unwrap().factors {
            assert_irreducible(&f9, &p);
        }
        let f25 = Field::new(5, 2).unwrap();
        for (p, _) in factorize(&f25, &Poly::x_pow_minus_one(&f25, 17)).unwrap().factors {
            assert_irreducible(&f25, &p);
        }
    }
}
