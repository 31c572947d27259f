//! Matrix-product codes `[C_1, ..., C_s] A`, their duals, distance bounds,
//! the LCD characterization theorems as executable predicates, and the
//! special matrix constructions (character matrices, length doubling, and the
//! binary triple construction).
//!
//! [`mplcd_check`] is the centerpiece: it tests which characterization
//! applies (quasi-orthogonal matrix, or non-singular lower-triangular with a
//! nested component chain), predicts the LCD verdict from the component
//! verdicts when one does, and always runs the direct rank-based check on the
//! expanded code. A disagreement between prediction and direct check is a
//! hard error, so both directions of each characterization are exercised on
//! every call.

use serde::{Deserialize, Serialize};

use crate::code::{DistanceKind, DistanceResult, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Felt, Field, Inner};
use crate::linalg::{vec_mat_mul, weight, Mat};

/// Components plus the mixing matrix of a matrix-product code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPSpec {
    components: Vec<LinearCode>,
    matrix: Mat,
}

impl MPSpec {
    /// Validates: at least one component, all over one field with one length,
    /// and an s x m matrix with s = number of components, s <= m.
    pub fn new(components: Vec<LinearCode>, matrix: Mat) -> Result<MPSpec> {
        let Some(first) = components.first() else {
            return Err(Error::LengthMismatch("no component codes".into()));
        };
        if components
            .iter()
            .any(|c| c.field() != first.field() || c.len() != first.len())
        {
            return Err(Error::LengthMismatch(
                "components must share one field and one length".into(),
            ));
        }
        if matrix.rows() != components.len() {
            return Err(Error::LengthMismatch(format!(
                "matrix has {} rows but there are {} components",
                matrix.rows(),
                components.len()
            )));
        }
        if matrix.rows() > matrix.cols() {
            return Err(Error::RowsExceedCols {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(MPSpec { components, matrix })
    }

    pub fn field(&self) -> &Field {
        self.components[0].field()
    }

    pub fn components(&self) -> &[LinearCode] {
        &self.components
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// Component length n.
    pub fn inner_len(&self) -> usize {
        self.components[0].len()
    }

    /// Number of components s.
    pub fn s(&self) -> usize {
        self.components.len()
    }

    /// Number of matrix columns m; the product code has length n*m.
    pub fn m(&self) -> usize {
        self.matrix.cols()
    }
}

/// Expand the block generator and canonicalize. With a full-row-rank matrix
/// the dimension is the sum of component dimensions; that identity is checked
/// by rank and a mismatch is a hard error.
pub fn mp_code(spec: &MPSpec) -> Result<LinearCode> {
    let field = spec.field();
    let n = spec.inner_len();
    let m = spec.m();
    let total_k: usize = spec.components.iter().map(|c| c.dim()).sum();
    let mut block = Mat::zeros(field, total_k, n * m);
    let mut row = 0;
    for (i, comp) in spec.components.iter().enumerate() {
        for r in 0..comp.dim() {
            for j in 0..m {
                let a = spec.matrix.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for (t, &g) in comp.generator().row(r).iter().enumerate() {
                    block.set(row, j * n + t, field.mul(a, g));
                }
            }
            row += 1;
        }
    }
    let code = LinearCode::from_generator(field, &block);
    if spec.matrix.is_full_row_rank(field).unwrap_or(false) && code.dim() != total_k {
        return Err(Error::CrossCheck(format!(
            "matrix-product dimension {} differs from component sum {total_k} under a full-row-rank matrix",
            code.dim()
        )));
    }
    Ok(code)
}

/// Dual via component duals: `([C_1,...,C_s]A)^perp = [C_1^perp,...,C_s^perp](A^{-1})^T`.
/// Requires a square nonsingular matrix.
pub fn mp_dual(spec: &MPSpec) -> Result<LinearCode> {
    let field = spec.field();
    let inv_t = spec.matrix.inverse(field)?.transpose(field);
    let duals: Vec<LinearCode> = spec.components.iter().map(|c| c.dual()).collect();
    mp_code(&MPSpec::new(duals, inv_t)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    FullRowRank,
    Nsc,
    NscDual,
}

/// A minimum-distance bound with its per-component terms; `exact` marks the
/// upper-triangular NSC case where the bound is attained with equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub value: usize,
    pub per_term: Vec<(usize, usize)>,
    pub exact: bool,
}

/// Exact minimum distance of the span of the first `k` rows of the matrix
/// (the length-m code `U_A(k)`); spans have at most q^s words, so this is
/// always enumerable here.
pub fn row_span_distance(field: &Field, matrix: &Mat, k: usize) -> Result<usize> {
    let rows: Vec<Vec<Felt>> = (0..k).map(|i| matrix.row(i).to_vec()).collect();
    let span = LinearCode::from_generator(field, &Mat::from_rows(rows)?);
    Ok(span.min_distance(u64::MAX)?.value)
}

/// `d(C) >= min_k d_k * d(U_A(k))` for a full-row-rank matrix, with each
/// span distance computed exactly.
pub fn bound_frr(spec: &MPSpec, component_distances: &[usize]) -> Result<BoundReport> {
    let field = spec.field();
    if component_distances.len() != spec.s() {
        return Err(Error::LengthMismatch("one distance per component".into()));
    }
    if !spec.matrix.is_full_row_rank(field)? {
        return Err(Error::NotFullRowRank);
    }
    let mut per_term = Vec::with_capacity(spec.s());
    for k in 1..=spec.s() {
        let u = row_span_distance(field, &spec.matrix, k)?;
        per_term.push((k, component_distances[k - 1] * u));
    }
    let value = per_term.iter().map(|&(_, v)| v).min().unwrap();
    Ok(BoundReport {
        kind: BoundKind::FullRowRank,
        value,
        per_term,
        exact: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    /// `d* = min{m d_1, (m-1) d_2, ..., (m-s+1) d_s}`.
    Primal,
    /// `(d^perp)* = min{s d_s^perp, (s-1) d_{s-1}^perp, ..., d_1^perp}`;
    /// pass dual component distances and a square matrix.
    Dual,
}

/// NSC distance bounds; `exact` is set when the matrix is also
/// upper-triangular, in which case the bound is an equality.
pub fn bound_nsc(
    spec: &MPSpec,
    component_distances: &[usize],
    side: BoundSide,
) -> Result<BoundReport> {
    let field = spec.field();
    if component_distances.len() != spec.s() {
        return Err(Error::LengthMismatch("one distance per component".into()));
    }
    if !spec.matrix.is_non_singular_by_columns(field)? {
        return Err(Error::NotNsc);
    }
    let s = spec.s();
    let m = spec.m();
    let per_term: Vec<(usize, usize)> = match side {
        BoundSide::Primal => (1..=s)
            .map(|i| (i, (m - i + 1) * component_distances[i - 1]))
            .collect(),
        BoundSide::Dual => {
            if s != m {
                return Err(Error::NotSquare { rows: s, cols: m });
            }
            (1..=s).map(|j| (j, j * component_distances[j - 1])).collect()
        }
    };
    let value = per_term.iter().map(|&(_, v)| v).min().unwrap();
    Ok(BoundReport {
        kind: match side {
            BoundSide::Primal => BoundKind::Nsc,
            BoundSide::Dual => BoundKind::NscDual,
        },
        value,
        per_term,
        exact: spec.matrix.is_upper_triangular(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremKind {
    /// Square matrix with `A A^T` (or `A^(l) A^T`) diagonal and nonzero:
    /// the product is LCD iff every component is.
    QuasiOrthogonal,
    /// Non-singular lower-triangular matrix with a nested component chain
    /// `C_1 ⊇ C_2 ⊇ ... ⊇ C_s`: same biconditional.
    LowerTriangularNested,
    NoneApplicable,
}

/// Outcome of the characterization check, with the precondition evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub kind: TheoremKind,
    pub inner: Inner,
    /// Present exactly when a characterization's hypotheses hold.
    pub predicted_lcd: Option<bool>,
    /// Rank-based verdict on the expanded code; always computed.
    pub direct_lcd: bool,
    pub component_lcd: Vec<bool>,
    pub quasi_orthogonal_diag: Option<Vec<Felt>>,
    pub lower_triangular_nonsingular: bool,
    pub nested_chain: bool,
}

/// Decide the LCD status of a matrix-product code, route it through the
/// applicable characterization, and cross-check prediction against the direct
/// rank oracle (disagreement is a hard error, not a report).
pub fn mplcd_check(spec: &MPSpec, inner: Inner) -> Result<TheoremVerdict> {
    let field = spec.field();
    let component_lcd: Result<Vec<bool>> =
        spec.components.iter().map(|c| c.is_lcd(inner)).collect();
    let component_lcd = component_lcd?;
    let direct_lcd = mp_code(spec)?.is_lcd(inner)?;

    let square = spec.matrix.rows() == spec.matrix.cols();
    let qo_diag = if square {
        spec.matrix.quasi_orthogonal_diagonal(field, inner)?
    } else {
        None
    };
    let lower_triangular_nonsingular = square
        && spec.matrix.is_lower_triangular()
        && !spec.matrix.det(field)?.is_zero();
    let mut nested_chain = true;
    for pair in spec.components.windows(2) {
        if !pair[0].contains(&pair[1])? {
            nested_chain = false;
            break;
        }
    }

    let (kind, predicted_lcd) = if qo_diag.is_some() {
        (
            TheoremKind::QuasiOrthogonal,
            Some(component_lcd.iter().all(|&b| b)),
        )
    } else if lower_triangular_nonsingular && nested_chain {
        (
            TheoremKind::LowerTriangularNested,
            Some(component_lcd.iter().all(|&b| b)),
        )
    } else {
        (TheoremKind::NoneApplicable, None)
    };

    if let Some(pred) = predicted_lcd {
        if pred != direct_lcd {
            return Err(Error::CrossCheck(format!(
                "{kind:?} ({inner}) predicts LCD={pred} but the rank oracle says {direct_lcd}"
            )));
        }
    }

    Ok(TheoremVerdict {
        kind,
        inner,
        predicted_lcd,
        direct_lcd,
        component_lcd,
        quasi_orthogonal_diag: qo_diag,
        lower_triangular_nonsingular,
        nested_chain,
    })
}

/// The 2^r x 2^r Sylvester-type character table of (Z/2)^r realized in the
/// field: entry (i, j) is (-1)^popcount(i AND j). Errors in characteristic 2,
/// where the signs collapse.
pub fn character_matrix(field: &Field, r: u32) -> Result<Mat> {
    if field.p() == 2 {
        return Err(Error::WrongCharacteristic(
            "character matrix needs odd characteristic".into(),
        ));
    }
    let s = 1usize << r;
    let one = field.one();
    let minus_one = field.neg(one);
    // group elements are indexed with the opposite bit significance from the
    // characters, which reproduces the usual printed table layout
    let bitrev = |i: usize| (0..r).fold(0usize, |acc, b| acc | (((i >> b) & 1) << (r - 1 - b)));
    let mut m = Mat::zeros(field, s, s);
    for i in 0..s {
        for j in 0..s {
            let parity = (bitrev(i) & j).count_ones() % 2;
            m.set(i, j, if parity == 0 { one } else { minus_one });
        }
    }
    Ok(m)
}

/// Whether the matrix size s = 2^r divides the multiplicative group order
/// q - 1 (the hypothesis under which the construction is usually stated; the
/// matrix itself only needs s invertible).
pub fn character_order_divides(field: &Field, r: u32) -> bool {
    (field.q() - 1).is_multiple_of(1u64 << r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DoubleVariant {
    /// `[C, C] [[1,1],[1,p-1]]` in odd characteristic.
    OddChar,
    /// `[C, C] [[1,1],[0,1]]` in characteristic 2.
    Char2,
}

/// The doubling spec `[C, C] A` for the variant's fixed 2x2 matrix.
pub fn double_spec(c: &LinearCode, variant: DoubleVariant) -> Result<MPSpec> {
    let field = c.field();
    let matrix = match variant {
        DoubleVariant::OddChar => {
            if field.p() == 2 {
                return Err(Error::WrongCharacteristic(
                    "odd-characteristic doubling needs p odd".into(),
                ));
            }
            Mat::from_ints(field, &[&[1, 1], &[1, -1]])
        }
        DoubleVariant::Char2 => {
            if field.p() != 2 {
                return Err(Error::WrongCharacteristic(
                    "characteristic-2 doubling needs p = 2".into(),
                ));
            }
            Mat::from_ints(field, &[&[1, 1], &[0, 1]])
        }
    };
    MPSpec::new(vec![c.clone(), c.clone()], matrix)
}

/// Length-doubled code [2n, 2k]; when the input is LCD the output is checked
/// to be LCD as well (a violation would falsify the construction).
pub fn double_construction(c: &LinearCode, variant: DoubleVariant) -> Result<LinearCode> {
    let spec = double_spec(c, variant)?;
    let doubled = mp_code(&spec)?;
    if c.is_lcd(Inner::Euclidean)? && !doubled.is_lcd(Inner::Euclidean)? {
        return Err(Error::CrossCheck(
            "doubling an LCD code produced a non-LCD code".into(),
        ));
    }
    Ok(doubled)
}

/// The binary triple spec `[C_1, C_1, C_2] A` with the fixed 3x3 matrix
/// `[[1,0,1],[1,1,0],[1,1,1]]`; only over the prime field F_2.
pub fn triple_binary_spec(c1: &LinearCode, c2: &LinearCode) -> Result<MPSpec> {
    let field = c1.field();
    if field.p() != 2 || field.m() != 1 {
        return Err(Error::WrongCharacteristic(
            "the triple construction is defined over F_2".into(),
        ));
    }
    let matrix = Mat::from_ints(field, &[&[1, 0, 1], &[1, 1, 0], &[1, 1, 1]]);
    MPSpec::new(vec![c1.clone(), c1.clone(), c2.clone()], matrix)
}

/// `[3n, 2k_1 + k_2]` binary code; LCD whenever both inputs are (checked).
pub fn triple_binary(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    let spec = triple_binary_spec(c1, c2)?;
    let code = mp_code(&spec)?;
    if c1.is_lcd(Inner::Euclidean)? && c2.is_lcd(Inner::Euclidean)?
        && !code.is_lcd(Inner::Euclidean)? {
            return Err(Error::CrossCheck(
                "triple construction on LCD inputs produced a non-LCD code".into(),
            ));
        }
    Ok(code)
}

/// Cheap structured upper-bound witness for the product's minimum distance:
/// for every 0/1 component pattern, take a light word of the intersection of
/// the selected components and spread it through the corresponding row sum of
/// the matrix. Returns the best witness found, if any pattern is usable.
pub fn structured_witness(spec: &MPSpec, budget: u64) -> Result<Option<DistanceResult>> {
    let field = spec.field();
    let n = spec.inner_len();
    let m = spec.m();
    let s = spec.s();
    let mut best: Option<DistanceResult> = None;
    for mask in 1u32..(1 << s) {
        let mut inter: Option<LinearCode> = None;
        for i in 0..s {
            if mask & (1 << i) == 0 {
                continue;
            }
            inter = Some(match inter {
                None => spec.components[i].clone(),
                Some(acc) => acc.intersection(&spec.components[i])?,
            });
        }
        let inter = inter.unwrap();
        if inter.dim() == 0 {
            continue;
        }
        let word = inter.min_distance(budget)?;
        let pattern: Vec<Felt> = (0..s)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        let row_sum = vec_mat_mul(field, &pattern, &spec.matrix);
        let wt = weight(&row_sum) * word.value;
        if wt == 0 {
            continue;
        }
        if best.as_ref().is_none_or(|b| wt < b.value) {
            let mut witness = vec![field.zero(); n * m];
            for (j, &a) in row_sum.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (t, &c) in word.witness.iter().enumerate() {
                    witness[j * n + t] = field.mul(a, c);
                }
            }
            debug_assert_eq!(weight(&witness), wt);
            best = Some(DistanceResult {
                kind: DistanceKind::UpperWitness,
                value: wt,
                witness,
            });
        }
    }
    Ok(best)
}
