//! Generic linear codes over a [`Field`]: duals under both inner products,
//! intersections, LCD detection, and exact minimum distance at desk scale.
//!
//! A [`LinearCode`] always stores its generator matrix in reduced row echelon
//! form with no zero rows, so code equality, inclusion and golden-file
//! comparison are plain structural equality.
//!
//! [`LinearCode::is_lcd`] runs two independent methods on every call (the
//! intersection-rank route and the Gram-matrix route) and refuses to answer
//! if they disagree; agreement of the two is itself a tested invariant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Felt, Field, Inner};
use crate::linalg::{vec_mat_mul, weight, Mat};

/// Default cap on the number of codewords enumerated for an exact minimum
/// distance; beyond it an upper-bound witness is returned instead.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Mat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Exact,
    UpperWitness,
}

/// Minimum-distance answer: exact value, or an upper bound achieved by a
/// concrete witness codeword when full enumeration exceeds the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub kind: DistanceKind,
    pub value: usize,
    pub witness: Vec<Felt>,
}

impl LinearCode {
    /// Code spanned by the rows of `gen`; the stored generator is canonical
    /// (reduced echelon, zero rows dropped). The zero code (k = 0) is fine.
    pub fn from_generator(field: &Field, gen: &Mat) -> LinearCode {
        let n = gen.cols();
        let (rref, rank, _) = gen.rref(field);
        let mut canonical = Mat::zeros(field, rank, n);
        for i in 0..rank {
            for j in 0..n {
                canonical.set(i, j, rref.get(i, j));
            }
        }
        LinearCode {
            field: field.clone(),
            n,
            gen: canonical,
        }
    }

    pub fn zero_code(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            gen: Mat::zeros(field, 0, n),
        }
    }

    pub fn full_code(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_generator(field, &Mat::identity(field, n))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical generator matrix (RREF, `dim()` rows).
    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch(format!(
                "code lengths {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Euclidean dual; `dim C + dim C^perp = n`.
    pub fn dual(&self) -> LinearCode {
        if self.dim() == 0 {
            return LinearCode::full_code(&self.field, self.n);
        }
        let kernel = self.gen.kernel_basis(&self.field);
        LinearCode::from_generator(&self.field, &kernel)
    }

    /// Entrywise image `C^l = { a^l : a in C }`; same dimension.
    pub fn pow_l(&self) -> Result<LinearCode> {
        let mapped = self.gen.entrywise_frobenius(&self.field)?;
        Ok(LinearCode::from_generator(&self.field, &mapped))
    }

    /// Hermitian dual, computed as the Euclidean dual of `C^l`.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        Ok(self.pow_l()?.dual())
    }

    pub fn dual_for(&self, inner: Inner) -> Result<LinearCode> {
        match inner {
            Inner::Euclidean => Ok(self.dual()),
            Inner::Hermitian => self.hermitian_dual(),
        }
    }

    /// Span of the union of the two codes.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let stacked = self.gen.vstack(&other.gen)?;
        Ok(LinearCode::from_generator(&self.field, &stacked))
    }

    /// Subspace intersection, via duality: `C1 ∩ C2 = (C1^perp + C2^perp)^perp`.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Inclusion test `other ⊆ self`: every generator row of `other` reduces
    /// to zero against this code's echelon basis.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        for i in 0..other.dim() {
            let residue = self.gen.reduce_row(&self.field, other.gen.row(i));
            if residue.iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_word(&self, word: &[Felt]) -> bool {
        let residue = self.gen.reduce_row(&self.field, word);
        residue.iter().all(|c| c.is_zero())
    }

    /// Gram matrix `G G^T` (Euclidean) or `G (G^(l))^T` (Hermitian).
    pub fn gram(&self, inner: Inner) -> Result<Mat> {
        let right = match inner {
            Inner::Euclidean => self.gen.transpose(&self.field),
            Inner::Hermitian => self
                .gen
                .entrywise_frobenius(&self.field)?
                .transpose(&self.field),
        };
        Ok(self.gen.mul(&self.field, &right))
    }

    /// LCD test under the chosen inner product.
    ///
    /// Computes both the intersection-rank verdict (`C ∩ C^perp = 0`) and the
    /// Gram-nonsingularity verdict, and errors out if the two methods ever
    /// disagree; a disagreement would falsify one of the implementations.
    pub fn is_lcd(&self, inner: Inner) -> Result<bool> {
        let dual = self.dual_for(inner)?;
        let hull = self.intersection(&dual)?;
        let via_intersection = hull.dim() == 0;

        let gram = self.gram(inner)?;
        let via_gram = gram.rank(&self.field) == self.dim();

        if via_intersection != via_gram {
            return Err(Error::CrossCheck(format!(
                "LCD methods disagree ({inner}): intersection says {via_intersection}, Gram says {via_gram}"
            )));
        }
        Ok(via_intersection)
    }

    /// Dimension of the hull `C ∩ C^perp` (0 exactly when the code is LCD).
    pub fn hull_dim(&self, inner: Inner) -> Result<usize> {
        let dual = self.dual_for(inner)?;
        Ok(self.intersection(&dual)?.dim())
    }

    /// Number of codewords `q^k`, unless it overflows u64.
    pub fn codeword_count(&self) -> Option<u64> {
        let mut total: u64 = 1;
        for _ in 0..self.dim() {
            total = total.checked_mul(self.field.q())?;
        }
        Some(total)
    }

    /// Visit every codeword exactly once (message-space odometer order,
    /// starting from the zero word), maintaining the word incrementally.
    /// Each digit step adds `(new - old) * row`, so extension-field message
    /// coefficients are walked through all q values, not just the prime
    /// subfield multiples.
    pub fn for_each_codeword<F: FnMut(&[Felt])>(&self, mut visit: F) {
        let field = &self.field;
        let k = self.dim();
        let q = field.q();
        let mut digits = vec![0u64; k];
        let mut word = vec![field.zero(); self.n];
        visit(&word);
        if k == 0 {
            return;
        }
        loop {
            let mut pos = 0;
            loop {
                if pos == k {
                    return;
                }
                let old = field.elem_at(digits[pos]);
                digits[pos] += 1;
                let wrapped = digits[pos] == q;
                if wrapped {
                    digits[pos] = 0;
                }
                let delta = field.sub(field.elem_at(digits[pos]), old);
                if !delta.is_zero() {
                    for (w, &g) in word.iter_mut().zip(self.gen.row(pos)) {
                        *w = field.add(*w, field.mul(delta, g));
                    }
                }
                if wrapped {
                    pos += 1;
                } else {
                    break;
                }
            }
            visit(&word);
        }
    }

    /// All codewords; only sensible for small codes.
    pub fn codewords(&self) -> Vec<Vec<Felt>> {
        let mut out = Vec::new();
        self.for_each_codeword(|w| out.push(w.to_vec()));
        out
    }

    /// Exact minimum weight when `q^k <= budget`, by enumerating all nonzero
    /// codewords; otherwise an upper-bound witness obtained from all messages
    /// of weight <= 2 over the information positions plus a fixed-seed random
    /// sample. Errors on the zero code.
    pub fn min_distance(&self, budget: u64) -> Result<DistanceResult> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let field = &self.field;
        if self.codeword_count().is_some_and(|total| total <= budget) {
            let mut best = usize::MAX;
            let mut witness = Vec::new();
            self.for_each_codeword(|w| {
                let wt = weight(w);
                if wt > 0 && wt < best {
                    best = wt;
                    witness = w.to_vec();
                }
            });
            return Ok(DistanceResult {
                kind: DistanceKind::Exact,
                value: best,
                witness,
            });
        }

        let k = self.dim();
        let mut best = usize::MAX;
        let mut witness = Vec::new();
        let mut consider = |w: &[Felt]| {
            let wt = weight(w);
            if wt > 0 && wt < best {
                best = wt;
                witness = w.to_vec();
            }
        };

        // weight-1 and weight-2 messages
        let nonzero: Vec<Felt> = field.elements().skip(1).collect();
        for i in 0..k {
            for &a in &nonzero {
                let row: Vec<Felt> = self.gen.row(i).iter().map(|&g| field.mul(a, g)).collect();
                consider(&row);
                for j in i + 1..k {
                    for &b in &nonzero {
                        let w: Vec<Felt> = self
                            .gen
                            .row(i)
                            .iter()
                            .zip(self.gen.row(j))
                            .map(|(&gi, &gj)| field.add(field.mul(a, gi), field.mul(b, gj)))
                            .collect();
                        consider(&w);
                    }
                }
            }
        }

        // fixed-seed random sample of full messages
        use rand::{Rng, SeedableRng};
        let mut h: u64 = 0x9e3779b97f4a7c15;
        for i in 0..self.gen.rows() {
            for &c in self.gen.row(i) {
                h = h.wrapping_mul(0x100000001b3) ^ c.index();
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(h);
        let mut msg = vec![field.zero(); k];
        for _ in 0..20_000u32 {
            for d in msg.iter_mut() {
                *d = field.elem_at(rng.gen_range(0..field.q()));
            }
            let w = vec_mat_mul(field, &msg, &self.gen);
            consider(&w);
        }

        Ok(DistanceResult {
            kind: DistanceKind::UpperWitness,
            value: best,
            witness,
        })
    }
}
