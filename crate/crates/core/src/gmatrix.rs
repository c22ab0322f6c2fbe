//! Dense square matrices over [`Scalar`] carrying a Z2^n degree.
//!
//! 8×8 matrices have rows and columns labelled by Z2^3 in position order, so
//! their degree can be read off the entries: `X ∈ M_α` iff `X_{βγ} = 0`
//! unless `β + γ = α`. 7×7 matrices only carry degrees assigned by hand.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::grading::{GradeLabel, SignFactor};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch ({0} vs {1})")]
    DimMismatch(usize, usize),
    #[error("index ({0}, {1}) out of range for dimension {2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("matrix is not homogeneous")]
    Inhomogeneous,
    #[error("matrix has no known degree")]
    DegreeUnknown,
    #[error("sign factor acts on Z2^{0} but the degree lives in Z2^{1}")]
    GroupMismatch(usize, usize),
    #[error("basis elements are linearly dependent")]
    DependentBasis,
    #[error("matrix is not in the span of the given basis")]
    NotInSpan,
}

/// Result of inspecting the entry pattern of an 8×8 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(GradeLabel),
    Zero,
    Inhomogeneous,
}

#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    dim: usize,
    entries: Vec<Scalar>,
    assigned_degree: Option<GradeLabel>,
}

impl GradedMatrix {
    pub fn zeros(dim: usize) -> Self {
        GradedMatrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
            assigned_degree: None,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = GradedMatrix::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::one();
        }
        m
    }

    /// `E_{row,col}`: a single unit entry.
    pub fn elementary(dim: usize, row: usize, col: usize) -> Result<Self, MatrixError> {
        if row >= dim || col >= dim {
            return Err(MatrixError::IndexOutOfRange(row, col, dim));
        }
        let mut m = GradedMatrix::zeros(dim);
        m.entries[row * dim + col] = Scalar::one();
        Ok(m)
    }

    /// `E_{αβ}` on the 8×8 matrices indexed by Z2^3.
    pub fn elementary_graded(row: GradeLabel, col: GradeLabel) -> Self {
        assert_eq!(row.n(), 3);
        assert_eq!(col.n(), 3);
        GradedMatrix::elementary(8, row.index(), col.index()).expect("labels index 0..8")
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions add.
    pub fn from_triplets(
        dim: usize,
        triplets: &[(usize, usize, Scalar)],
    ) -> Result<Self, MatrixError> {
        let mut m = GradedMatrix::zeros(dim);
        for (r, c, v) in triplets {
            if *r >= dim || *c >= dim {
                return Err(MatrixError::IndexOutOfRange(*r, *c, dim));
            }
            m.entries[r * dim + c] += v;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &Scalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.dim, k % self.dim, v))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn assigned_degree(&self) -> Option<GradeLabel> {
        self.assigned_degree
    }

    /// Attaches a degree. For 8×8 matrices the entry pattern must agree.
    pub fn with_degree(mut self, deg: GradeLabel) -> Result<Self, MatrixError> {
        if self.dim == 8 && deg.n() == 3 {
            match self.infer_degree() {
                Degree::Homogeneous(d) if d != deg => return Err(MatrixError::Inhomogeneous),
                Degree::Inhomogeneous => return Err(MatrixError::Inhomogeneous),
                _ => {}
            }
        }
        self.assigned_degree = Some(deg);
        Ok(self)
    }

    pub(crate) fn with_degree_unchecked(mut self, deg: Option<GradeLabel>) -> Self {
        self.assigned_degree = deg;
        self
    }

    /// Degree read off the entry pattern (8×8 only; 7×7 matrices report
    /// `Inhomogeneous` unless zero since their grading is not positional).
    pub fn infer_degree(&self) -> Degree {
        if self.dim != 8 {
            return if self.is_zero() {
                Degree::Zero
            } else {
                Degree::Inhomogeneous
            };
        }
        let mut found: Option<u8> = None;
        for (r, c, _) in self.nonzero_entries() {
            let d = (r ^ c) as u8;
            match found {
                None => found = Some(d),
                Some(f) if f != d => return Degree::Inhomogeneous,
                _ => {}
            }
        }
        match found {
            None => Degree::Zero,
            Some(bits) => Degree::Homogeneous(GradeLabel::new(bits, 3).expect("3-bit degree")),
        }
    }

    /// The assigned degree, falling back to the inferred one for 8×8 matrices.
    pub fn degree(&self) -> Result<GradeLabel, MatrixError> {
        if let Some(d) = self.assigned_degree {
            return Ok(d);
        }
        match self.infer_degree() {
            Degree::Homogeneous(d) => Ok(d),
            Degree::Zero => Err(MatrixError::DegreeUnknown),
            Degree::Inhomogeneous => Err(MatrixError::Inhomogeneous),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<(), MatrixError> {
        if self.dim != other.dim {
            Err(MatrixError::DimMismatch(self.dim, other.dim))
        } else {
            Ok(())
        }
    }

    fn sum_degree(&self, other: &Self) -> Option<GradeLabel> {
        match (self.assigned_degree, other.assigned_degree) {
            (Some(a), Some(b)) if a.n() == b.n() => Some(a.plus(b)),
            _ => None,
        }
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = GradedMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out.assigned_degree = self.sum_degree(other);
        Ok(out)
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        let deg = (self.assigned_degree == other.assigned_degree)
            .then_some(self.assigned_degree)
            .flatten();
        Ok(GradedMatrix {
            dim: self.dim,
            entries,
            assigned_degree: deg,
        })
    }

    pub fn mat_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.mat_add(&other.mat_scale(&Scalar::from_int(-1)))
    }

    pub fn mat_scale(&self, s: &Scalar) -> Self {
        GradedMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * s).collect(),
            assigned_degree: self.assigned_degree,
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = GradedMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out.assigned_degree = self.assigned_degree;
        out
    }

    /// `x·y − (−1)^⟨α,β⟩ y·x` for homogeneous `x` of degree α and `y` of degree β.
    /// The result carries degree `α + β`.
    pub fn color_bracket(&self, other: &Self, sf: &SignFactor) -> Result<Self, MatrixError> {
        let a = self.degree()?;
        let b = other.degree()?;
        if a.n() != sf.n() {
            return Err(MatrixError::GroupMismatch(sf.n(), a.n()));
        }
        let sign = sf
            .commutation_sign(a, b)
            .map_err(|_| MatrixError::GroupMismatch(sf.n(), b.n()))?;
        self.bracket_with_sign(other, sign, a.plus(b))
    }

    pub(crate) fn bracket_with_sign(
        &self,
        other: &Self,
        sign: i8,
        deg: GradeLabel,
    ) -> Result<Self, MatrixError> {
        let xy = self.mat_mul(other)?;
        let yx = other.mat_mul(self)?;
        let mut out = if sign == 1 {
            xy.mat_sub(&yx)?
        } else {
            xy.mat_add(&yx)?
        };
        out.assigned_degree = Some(deg);
        Ok(out)
    }

    /// Plain commutator `xy − yx`; no degrees involved.
    pub fn commutator(&self, other: &Self) -> Result<Self, MatrixError> {
        let mut out = self.mat_mul(other)?.mat_sub(&other.mat_mul(self)?)?;
        out.assigned_degree = self.sum_degree(other);
        Ok(out)
    }

    /// Matrix–vector product `M v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, MatrixError> {
        if v.len() != self.dim {
            return Err(MatrixError::DimMismatch(self.dim, v.len()));
        }
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = &self.entries[i * n + j];
                if !a.is_zero() && !x.is_zero() {
                    *slot += &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Same nonzero pattern, entries agreeing up to sign.
    pub fn same_pattern_up_to_sign(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a == b || *a == -b)
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMatrix{}x{}[", self.dim, self.dim)?;
        let nz = self.nonzero_entries();
        for (k, (r, c, v)) in nz.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({r},{c})={v}")?;
        }
        f.write_str("]")?;
        if let Some(d) = self.assigned_degree {
            write!(f, " deg {d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for GradedMatrix {
    /// Sum of `E_{rc}` terms, using grade labels for 8×8 indices and 1-based
    /// integers for 7×7 ones.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero_entries();
        if nz.is_empty() {
            return f.write_str("0");
        }
        let idx = |k: usize| {
            if self.dim == 8 {
                GradeLabel::new(k as u8, 3).expect("3 bits").to_string()
            } else {
                (k + 1).to_string()
            }
        };
        for (k, (r, c, v)) in nz.into_iter().enumerate() {
            let e = if self.dim == 8 {
                format!("E_{{{},{}}}", idx(r), idx(c))
            } else {
                format!("E_{{{}{}}}", idx(r), idx(c))
            };
            let term = crate::algebra::render_term(v, &e);
            if k == 0 {
                f.write_str(&term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for GradedMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Triplet<'a> {
            row: usize,
            col: usize,
            value: &'a Scalar,
        }
        let triplets: Vec<Triplet> = self
            .nonzero_entries()
            .into_iter()
            .map(|(row, col, value)| Triplet { row, col, value })
            .collect();
        let mut st = ser.serialize_struct("GradedMatrix", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("degree", &self.assigned_degree.map(|d| d.to_string()))?;
        st.serialize_field("entries", &triplets)?;
        st.end()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $call:ident) => {
        impl $tr for &GradedMatrix {
            type Output = GradedMatrix;
            fn $m(self, o: &GradedMatrix) -> GradedMatrix {
                self.$call(o).expect("dimension mismatch")
            }
        }
    };
}
binop!(Add, add, mat_add);
binop!(Sub, sub, mat_sub);
binop!(Mul, mul, mat_mul);

impl Neg for &GradedMatrix {
    type Output = GradedMatrix;
    fn neg(self) -> GradedMatrix {
        self.mat_scale(&Scalar::from_int(-1))
    }
}

/// Precomputed row-echelon form of a list of matrices, used to express
/// further matrices in their span.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    len: usize,
    /// (pivot position, reduced row, combination of inputs producing it)
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    dim: usize,
}

impl SpanSolver {
    pub fn new(basis: &[&GradedMatrix]) -> Result<Self, MatrixError> {
        let k = basis.len();
        let dim = basis.first().map_or(0, |b| b.dim);
        let mut rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::with_capacity(k);
        for (idx, b) in basis.iter().enumerate() {
            if b.dim != dim {
                return Err(MatrixError::DimMismatch(dim, b.dim));
            }
            let mut v = b.entries.clone();
            let mut comb = vec![Scalar::zero(); k];
            comb[idx] = Scalar::one();
            for (p, row, rc) in &rows {
                let f = v[*p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            let Some(p) = v.iter().position(|x| !x.is_zero()) else {
                return Err(MatrixError::DependentBasis);
            };
            let inv = v[p].inverse().expect("nonzero pivot");
            for x in v.iter_mut().chain(comb.iter_mut()) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            // keep earlier rows reduced at the new pivot
            for (_, row, rc) in rows.iter_mut() {
                let f = row[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
                for (x, y) in rc.iter_mut().zip(&comb) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            rows.push((p, v, comb));
        }
        Ok(SpanSolver { len: k, rows, dim })
    }

    /// Coefficients `c` with `m = Σ c_i basis_i`.
    pub fn coordinates(&self, m: &GradedMatrix) -> Result<Vec<Scalar>, MatrixError> {
        if self.len > 0 && m.dim != self.dim {
            return Err(MatrixError::DimMismatch(self.dim, m.dim));
        }
        let mut residual = m.entries.clone();
        let mut coeffs = vec![Scalar::zero(); self.len];
        for (p, row, comb) in &self.rows {
            let f = residual[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in coeffs.iter_mut().zip(comb) {
                if !y.is_zero() {
                    *x += &(&f * y);
                }
            }
        }
        if residual.iter().all(Scalar::is_zero) {
            Ok(coeffs)
        } else {
            Err(MatrixError::NotInSpan)
        }
    }
}

/// Exact coordinates of `m` against a linearly independent list.
pub fn coordinates_in_span(
    m: &GradedMatrix,
    basis: &[&GradedMatrix],
) -> Result<Vec<Scalar>, MatrixError> {
    SpanSolver::new(basis)?.coordinates(m)
}

/// `Σ c_i basis_i`.
pub fn combine(coeffs: &[Scalar], basis: &[&GradedMatrix]) -> Result<GradedMatrix, MatrixError> {
    let dim = basis.first().map_or(0, |b| b.dim);
    let mut out = GradedMatrix::zeros(dim);
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        out = out.mat_add(&b.mat_scale(c))?;
    }
    Ok(out.with_degree_unchecked(None))
}

/// Rank over Q(i, √2) of a list of matrices viewed as vectors.
pub fn rank(mats: &[&GradedMatrix]) -> usize {
    let mut pivots: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for m in mats {
        let mut v = m.entries.clone();
        for (p, row) in &pivots {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inverse().expect("nonzero pivot");
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            pivots.push((p, v));
        }
    }
    pivots.len()
}
