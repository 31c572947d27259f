//! Arithmetic in small finite fields `F_{p^m}`.
//!
//! A [`Field`] is built from a prime `p`, an extension degree `m` and a monic
//! irreducible modulus of degree `m` over `F_p` (chosen canonically when not
//! given). Elements are stored as canonical indices into precomputed tables,
//! so every operation is a lookup. Fields are capped at `q <= 1024`;
//! nothing in this crate needs more.
//!
//! Extension-field elements print as powers `w^k` of a designated primitive
//! element `w`; the parser also accepts polynomial expressions in `w`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on field size; keeps the q^2 lookup tables small.
const MAX_Q: u64 = 1024;

/// Which inner product a duality-sensitive operation should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Inner {
    Euclidean,
    Hermitian,
}

impl fmt::Display for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inner::Euclidean => write!(f, "euclidean"),
            Inner::Hermitian => write!(f, "hermitian"),
        }
    }
}

/// An element of a [`Field`], stored as its canonical index.
///
/// The index of the element with digits `(a_0, ..., a_{m-1})` over the
/// polynomial basis is `sum a_i p^i`. Elements carry no field reference;
/// all arithmetic goes through the owning [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Felt(pub(crate) u32);

impl Felt {
    /// Canonical integer encoding of this element.
    pub fn index(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus coefficients over F_p, ascending degree; empty when m = 1.
    modulus: Vec<u64>,
    /// p^{m/2} when m is even.
    l: Option<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    /// exp[k] = w^k for the designated primitive element w.
    exp: Vec<u32>,
    /// log[e] defined for e != 0.
    log: Vec<u32>,
    frob_l: Vec<u32>,
    primitive: u32,
}

/// A finite field `F_{p^m}` with fixed modulus and designated primitive element.
///
/// Cloning is cheap (shared immutable data) and all operations are pure, so a
/// `Field` can be used freely across threads.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl Field {
    /// Build `F_{p^m}` with the canonical default modulus: the monic degree-m
    /// polynomial whose coefficient tuple `(a_0, ..., a_{m-1})`, read as a
    /// base-p integer, is smallest among irreducibles.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        Self::build(p, m, None)
    }

    /// Build `F_{p^m}` with an explicit monic irreducible modulus
    /// (coefficients ascending, length m+1).
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<Field> {
        Self::build(p, m, Some(modulus.to_vec()))
    }

    /// Parse a field descriptor of the form `p` or `p^m`, e.g. `5`, `5^2`.
    pub fn parse(desc: &str) -> Result<Field> {
        let desc = desc.trim();
        let (p_str, m_str) = match desc.split_once('^') {
            Some((a, b)) => (a, b),
            None => (desc, "1"),
        };
        let p: u64 = p_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad field descriptor `{desc}`")))?;
        let m: u32 = m_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad field descriptor `{desc}`")))?;
        Field::new(p, m)
    }

    fn build(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadModulus("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_Q)
            .ok_or(Error::FieldTooLarge { max: MAX_Q, got: 0 })?;

        let modulus = if m == 1 {
            Vec::new()
        } else {
            match modulus {
                Some(md) => {
                    let md: Vec<u64> = md.iter().map(|&c| c % p).collect();
                    if md.len() != m as usize + 1 || *md.last().unwrap() != 1 {
                        return Err(Error::BadModulus(format!(
                            "modulus must be monic of degree {m}"
                        )));
                    }
                    if !fp_is_irreducible(&md, p) {
                        return Err(Error::BadModulus("modulus is reducible".into()));
                    }
                    md
                }
                None => default_modulus(p, m),
            }
        };

        let qi = q as usize;
        let digits_of = |e: u64| -> Vec<u64> {
            let mut e = e;
            (0..m)
                .map(|_| {
                    let d = e % p;
                    e /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[u64]| -> u32 {
            let mut e = 0u64;
            for &d in ds.iter().rev() {
                e = e * p + d;
            }
            e as u32
        };

        let mut add = vec![0u32; qi * qi];
        let mut neg = vec![0u32; qi];
        for a in 0..q {
            let da = digits_of(a);
            let dn: Vec<u64> = da.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = encode(&dn);
            for b in 0..q {
                let db = digits_of(b);
                let ds: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&ds);
            }
        }

        let mut mul = vec![0u32; qi * qi];
        for a in 0..q {
            let da = digits_of(a);
            for b in a..q {
                let db = digits_of(b);
                let prod = if m == 1 {
                    vec![(a * b) % p]
                } else {
                    let mut raw = vec![0u64; 2 * m as usize - 1];
                    for (i, &x) in da.iter().enumerate() {
                        for (j, &y) in db.iter().enumerate() {
                            raw[i + j] = (raw[i + j] + x * y) % p;
                        }
                    }
                    fp_rem(&mut raw, &modulus, p);
                    raw.resize(m as usize, 0);
                    raw
                };
                let e = encode(&prod);
                mul[(a * q + b) as usize] = e;
                mul[(b * q + a) as usize] = e;
            }
        }

        // Primitive element: smallest canonical index with multiplicative
        // order exactly q - 1, found by exhaustive order computation.
        let order = |e: u64| -> u64 {
            let mut acc = e;
            let mut n = 1;
            while acc != 1 {
                acc = mul[(acc * q + e) as usize] as u64;
                n += 1;
            }
            n
        };
        let primitive = (1..q)
            .find(|&e| order(e) == q - 1)
            .expect("every finite field has a primitive element") as u32;

        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; qi];
        let mut acc = 1u64;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u32;
            log[acc as usize] = k as u32;
            acc = mul[(acc * q + primitive as u64) as usize] as u64;
        }

        let mut inv = vec![0u32; qi];
        for e in 1..q {
            let k = log[e as usize] as u64;
            inv[e as usize] = exp[((q - 1 - k) % (q - 1)) as usize];
        }

        let l = if m.is_multiple_of(2) { Some(p.pow(m / 2)) } else { None };
        let frob_l = match l {
            Some(l) => {
                let mut t = vec![0u32; qi];
                for e in 1..q {
                    let k = log[e as usize] as u64;
                    t[e as usize] = exp[((k * l) % (q - 1)) as usize];
                }
                t
            }
            None => Vec::new(),
        };

        Ok(Field(Arc::new(FieldData {
            p,
            m,
            q,
            modulus,
            l,
            add,
            mul,
            neg,
            inv,
            exp,
            log,
            frob_l,
            primitive,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// `l = p^{m/2}` for the Hermitian inner product; `None` when m is odd.
    pub fn l(&self) -> Option<u64> {
        self.0.l
    }

    /// Descriptor in `p^m` form, e.g. `5^2`.
    pub fn descriptor(&self) -> String {
        format!("{}^{}", self.0.p, self.0.m)
    }

    /// Modulus coefficients (ascending degree); empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Modulus as a readable polynomial in the basis root, e.g. `x^2+2`.
    pub fn modulus_string(&self) -> String {
        if self.0.m == 1 {
            return "x".into(); // prime field: no extension modulus
        }
        let terms: Vec<String> = self
            .0
            .modulus
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}*x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}*x^{i}"),
            })
            .collect();
        terms.join("+")
    }

    pub fn zero(&self) -> Felt {
        Felt(0)
    }

    pub fn one(&self) -> Felt {
        Felt(1)
    }

    /// The designated primitive element (smallest canonical index of full order).
    pub fn primitive(&self) -> Felt {
        Felt(self.0.primitive)
    }

    /// Embed an integer via the prime subfield.
    pub fn elem_int(&self, i: i64) -> Felt {
        let p = self.0.p as i64;
        Felt(i.rem_euclid(p) as u32)
    }

    /// Element with the given canonical index (must be < q).
    pub fn elem_at(&self, index: u64) -> Felt {
        assert!(index < self.0.q, "element index out of range");
        Felt(index as u32)
    }

    /// Element from digits over the polynomial basis (ascending).
    pub fn from_digits(&self, digits: &[u64]) -> Felt {
        let mut e = 0u64;
        for &d in digits.iter().rev() {
            e = e * self.0.p + d % self.0.p;
        }
        Felt(e as u32)
    }

    /// Digits of `a` over the polynomial basis, ascending; length m.
    pub fn digits(&self, a: Felt) -> Vec<u64> {
        let mut e = a.0 as u64;
        (0..self.0.m)
            .map(|_| {
                let d = e % self.0.p;
                e /= self.0.p;
                d
            })
            .collect()
    }

    /// All field elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> {
        (0..self.0.q).map(|e| Felt(e as u32))
    }

    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.0.add[(a.0 as u64 * self.0.q + b.0 as u64) as usize])
    }

    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Felt) -> Felt {
        Felt(self.0.neg[a.0 as usize])
    }

    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.0.mul[(a.0 as u64 * self.0.q + b.0 as u64) as usize])
    }

    pub fn inv(&self, a: Felt) -> Result<Felt> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Felt(self.0.inv[a.0 as usize]))
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Felt, n: u64) -> Felt {
        if a.is_zero() {
            return if n == 0 { self.one() } else { self.zero() };
        }
        let k = self.0.log[a.0 as usize] as u64;
        let e = (k % (self.0.q - 1)) * (n % (self.0.q - 1)) % (self.0.q - 1);
        Felt(self.0.exp[e as usize])
    }

    /// Componentwise conjugation `a -> a^l`; an involution. Errors when m is odd.
    pub fn frobenius_l(&self, a: Felt) -> Result<Felt> {
        if self.0.l.is_none() {
            return Err(Error::OddExtensionDegree);
        }
        if a.is_zero() {
            return Ok(a);
        }
        Ok(Felt(self.0.frob_l[a.0 as usize]))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Felt) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = a;
        let mut n = 1;
        while acc != self.one() {
            acc = self.mul(acc, a);
            n += 1;
        }
        Ok(n)
    }

    /// Discrete log of a nonzero element with respect to the primitive element.
    pub fn dlog(&self, a: Felt) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.log[a.0 as usize] as u64)
    }

    /// Canonical text form: integers for prime fields, `w^k` powers of the
    /// primitive element for extension fields.
    pub fn elem_to_string(&self, a: Felt) -> String {
        if self.0.m == 1 {
            return format!("{}", a.0);
        }
        if a.is_zero() {
            return "0".into();
        }
        match self.0.log[a.0 as usize] {
            0 => "1".into(),
            1 => "w".into(),
            k => format!("w^{k}"),
        }
    }

    /// Parse an element: integers, `w`, `w^k`, and sums/differences of such
    /// terms with optional integer coefficients (`2*w^3+w+4`, `w+1`, `-2`).
    pub fn parse_elem(&self, s: &str) -> Result<Felt> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut total = self.zero();
        let mut term = String::new();
        let mut sign = 1i64;
        let mut chars = s.chars().peekable();
        let mut first = true;
        loop {
            match chars.next() {
                Some(c @ ('+' | '-')) if !first || !term.is_empty() => {
                    if term.is_empty() {
                        return Err(Error::Parse(format!("dangling operator in `{s}`")));
                    }
                    let t = self.parse_term(&term)?;
                    let t = if sign < 0 { self.neg(t) } else { t };
                    total = self.add(total, t);
                    term.clear();
                    sign = if c == '-' { -1 } else { 1 };
                }
                Some(c @ '-') => {
                    // leading unary minus
                    let _ = c;
                    sign = -1;
                }
                Some(c) => term.push(c),
                None => break,
            }
            first = false;
        }
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling operator in `{s}`")));
        }
        let t = self.parse_term(&term)?;
        let t = if sign < 0 { self.neg(t) } else { t };
        Ok(self.add(total, t))
    }

    /// One product term: `int`, `w`, `w^k`, `int*w^k`, `int*w` (also without `*`).
    fn parse_term(&self, t: &str) -> Result<Felt> {
        let bad = || Error::Parse(format!("bad element term `{t}`"));
        if let Some(pos) = t.find('w') {
            if self.0.m == 1 {
                return Err(Error::Parse("`w` is only defined for extension fields".into()));
            }
            let coef_str = t[..pos].trim_end_matches('*');
            let coef = if coef_str.is_empty() {
                self.one()
            } else {
                let c: i64 = coef_str.parse().map_err(|_| bad())?;
                self.elem_int(c)
            };
            let rest = &t[pos + 1..];
            let k: u64 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            Ok(self.mul(coef, self.pow(self.primitive(), k)))
        } else {
            let c: i64 = t.parse().map_err(|_| bad())?;
            Ok(self.elem_int(c))
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Canonical default modulus: smallest coefficient tuple in base-p order.
fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    let count = p.pow(m);
    for a in 0..count {
        let mut e = a;
        let mut coeffs: Vec<u64> = (0..m)
            .map(|_| {
                let d = e % p;
                e /= p;
                d
            })
            .collect();
        coeffs.push(1);
        if fp_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

// --- minimal F_p[x] helpers used only for modulus validation ---

fn fp_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

/// Remainder of `f` mod `g` over F_p, in place.
fn fp_rem(f: &mut Vec<u64>, g: &[u64], p: u64) {
    fp_trim(f);
    let dg = g.len() - 1;
    let lead_inv = fp_inv(g[dg], p);
    while f.len() > dg {
        let c = (*f.last().unwrap() * lead_inv) % p;
        let k = f.len() - 1 - dg;
        for (i, &gc) in g.iter().enumerate() {
            f[k + i] = (f[k + i] + p * p - (c * gc) % p) % p;
        }
        fp_trim(f);
        if f.is_empty() {
            break;
        }
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // p is tiny; exhaustive search keeps this dependency-free
    (1..p).find(|&b| (a * b) % p == 1).expect("nonzero element")
}

fn fp_mulmod(a: &[u64], b: &[u64], md: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_rem(&mut out, md, p);
    out
}

fn fp_powmod_x(e: u64, md: &[u64], p: u64) -> Vec<u64> {
    // x^e mod md
    let mut result = vec![1u64];
    let mut base = vec![0u64, 1];
    fp_rem(&mut base, md, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_mulmod(&result, &base, md, p);
        }
        base = fp_mulmod(&base, &base, md, p);
        e >>= 1;
    }
    result
}

fn fp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        let mut r = a.clone();
        fp_rem(&mut r, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Rabin irreducibility test over F_p.
fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 || *f.last().unwrap() == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // x^{p^d} == x mod f
    let xpd = fp_powmod_x(p.pow(d as u32), f, p);
    let mut diff = xpd;
    // subtract x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d
    let mut rest = d;
    let mut r = 2;
    let mut prime_divs = Vec::new();
    while r * r <= rest {
        if rest.is_multiple_of(r) {
            prime_divs.push(r);
            while rest.is_multiple_of(r) {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for r in prime_divs {
        let mut g = fp_powmod_x(p.pow((d / r) as u32), f, p);
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        let gcd = fp_gcd(g, f.to_vec(), p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}
