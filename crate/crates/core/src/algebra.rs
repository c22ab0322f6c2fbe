//! Bases of so(7) and G2, the A_α^ζ family and bracket tables.
//!
//! The 21 matrices `A_α^ζ` (ζ a line through the point α) are built from the
//! oriented Fano plane; fourteen of them form the Z2^3-graded basis `e1…e14`.
//! Structure constants are always computed from the matrices: every bracket is
//! evaluated as a matrix and expressed in the sub-basis of the target degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::fano::{FanoError, FanoPlane};
use crate::gmatrix::{GradedMatrix, MatrixError, SpanSolver};
use crate::grading::{GradeLabel, SignFactor};
use crate::scalars::{Rational, Scalar};
use crate::transcribed::{self, EForm, SevenForm};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error("unknown basis element {0:?}")]
    UnknownLabel(String),
    #[error("point {0} does not lie on line {1}")]
    NotIncident(GradeLabel, GradeLabel),
    #[error("element {0} is not homogeneous of its stated degree")]
    NotHomogeneous(String),
    #[error("basis {0} is linearly dependent")]
    DependentBasis(String),
    #[error("sign factor on Z2^{0} does not match basis graded by Z2^{1}")]
    GroupMismatch(usize, usize),
    #[error(
        "bracket of {left} and {right} leaves the span of degree {degree}: residual {residual:?}"
    )]
    Closure {
        left: String,
        right: String,
        degree: GradeLabel,
        residual: GradedMatrix,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Fano(#[from] FanoError),
}

/// `m_{βγ} = E_{βγ} − E_{γβ}`.
pub fn build_m(b: GradeLabel, c: GradeLabel) -> Result<GradedMatrix, AlgebraError> {
    for x in [b, c] {
        if x.n() != 3 {
            return Err(FanoError::WrongDim(x).into());
        }
        if x.is_zero() {
            return Err(FanoError::Neutral(x).into());
        }
    }
    if b == c {
        return Err(FanoError::Coincident(b, c).into());
    }
    let m = &GradedMatrix::elementary_graded(b, c) - &GradedMatrix::elementary_graded(c, b);
    Ok(m.with_degree(b.plus(c))?)
}

/// `A_α^ζ` together with its matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ABasisElement {
    pub point: GradeLabel,
    pub line: GradeLabel,
    pub matrix: GradedMatrix,
}

/// The two points other than α on line ζ, ordered so that σ(α, β, γ) = +1.
fn oriented_pair(
    plane: &FanoPlane,
    a: GradeLabel,
    line: GradeLabel,
) -> Result<(GradeLabel, GradeLabel), AlgebraError> {
    let pts = plane.points_on(line)?;
    let k = pts
        .iter()
        .position(|&p| p == a)
        .ok_or(AlgebraError::NotIncident(a, line))?;
    Ok((pts[(k + 1) % 3], pts[(k + 2) % 3]))
}

/// Builds `A_α^ζ`. With the lines through α ordered as (λ, μ, ν) along their
/// orientation, and each line's other points (β, γ) ordered with
/// σ(α, β, γ) = +1:
/// `A^λ = m_{β'γ'} − m_{β''γ''}`, `A^μ = m_{β''γ''} − m_{βγ}`,
/// `A^ν = m_{βγ} − m_{β'γ'}`.
pub fn build_a(a: GradeLabel, zeta: GradeLabel) -> Result<ABasisElement, AlgebraError> {
    let plane = FanoPlane::standard();
    build_a_in(&plane, a, zeta)
}

pub(crate) fn build_a_in(
    plane: &FanoPlane,
    a: GradeLabel,
    zeta: GradeLabel,
) -> Result<ABasisElement, AlgebraError> {
    if zeta.n() != 3 || zeta.is_zero() {
        return Err(FanoError::Neutral(zeta).into());
    }
    // the lines through α are exactly the points of the line labelled α
    let lines = plane.points_on(a)?;
    let k = lines
        .iter()
        .position(|&l| l == zeta)
        .ok_or(AlgebraError::NotIncident(a, zeta))?;
    let m_of = |line| -> Result<GradedMatrix, AlgebraError> {
        let (b, c) = oriented_pair(plane, a, line)?;
        build_m(b, c)
    };
    let next = m_of(lines[(k + 1) % 3])?;
    let after = m_of(lines[(k + 2) % 3])?;
    let matrix = (&next - &after).with_degree(a)?;
    Ok(ABasisElement {
        point: a,
        line: zeta,
        matrix,
    })
}

/// All 21 `A_α^ζ`, ordered by point then line (position order).
pub fn all_a() -> Vec<ABasisElement> {
    let plane = FanoPlane::standard();
    let mut out = Vec::with_capacity(21);
    for a in GradeLabel::nonzero(3).expect("n = 3") {
        for z in plane.lines_through(a).expect("nonzero point") {
            out.push(build_a_in(&plane, a, z).expect("incident pair"));
        }
    }
    out
}

/// A formal integer combination `Σ c · A_α^ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AComb {
    pub terms: Vec<(i64, GradeLabel, GradeLabel)>,
}

impl AComb {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn negate(mut self) -> Self {
        for t in &mut self.terms {
            t.0 = -t.0;
        }
        self
    }

    pub fn to_matrix(&self) -> Result<GradedMatrix, AlgebraError> {
        let mut out = GradedMatrix::zeros(8);
        for &(c, a, z) in &self.terms {
            out = &out + &build_a(a, z)?.matrix.mat_scale(&Scalar::from_int(c));
        }
        Ok(out)
    }
}

impl fmt::Display for AComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, a, z)) in self.terms.iter().enumerate() {
            let coeff = match (*c, k) {
                (1, 0) => String::new(),
                (-1, 0) => "-".into(),
                (c, 0) => c.to_string(),
                (1, _) => " + ".into(),
                (-1, _) => " - ".into(),
                (c, _) if c < 0 => format!(" - {}", -c),
                (c, _) => format!(" + {c}"),
            };
            write!(f, "{coeff}A_{a}^{z}")?;
        }
        Ok(())
    }
}

/// The closed-form commutator `[A_α^λ, A_β^μ]`.
///
/// Zero when α = β. Otherwise, assuming σ(α, β, α+β) = +1 (the arguments are
/// swapped and the result negated when it is −1), with ℓ = ℓ(α, β):
/// `−2A_{α+β}^λ` if λ = μ = ℓ, `A_{α+β}^ℓ` if exactly one of λ, μ is ℓ,
/// and `A_{α+β}^{λ+μ}` otherwise.
pub fn predicted_bracket(
    a: GradeLabel,
    l: GradeLabel,
    b: GradeLabel,
    m: GradeLabel,
) -> Result<AComb, AlgebraError> {
    let plane = FanoPlane::standard();
    predicted_bracket_in(&plane, a, l, b, m)
}

pub(crate) fn predicted_bracket_in(
    plane: &FanoPlane,
    a: GradeLabel,
    l: GradeLabel,
    b: GradeLabel,
    m: GradeLabel,
) -> Result<AComb, AlgebraError> {
    for (p, z) in [(a, l), (b, m)] {
        if p.n() != 3 || z.n() != 3 || p.is_zero() || z.is_zero() {
            return Err(FanoError::WrongDim(p).into());
        }
        if p.dot(z) != 0 {
            return Err(AlgebraError::NotIncident(p, z));
        }
    }
    if a == b {
        return Ok(AComb::default());
    }
    let c = a.plus(b);
    if plane.orientation(a, b, c)? == -1 {
        return Ok(predicted_bracket_in(plane, b, m, a, l)?.negate());
    }
    let ell = plane.line_label(a, b)?;
    let term = match (l == ell, m == ell) {
        (true, true) => (-2, c, ell),
        (true, false) | (false, true) => (1, c, ell),
        (false, false) => (1, c, l.plus(m)),
    };
    Ok(AComb { terms: vec![term] })
}

/// The (point, line) pairs selected as `e1 … e14`.
pub const E_SELECTION: [(&str, &str); 14] = [
    ("100", "010"),
    ("100", "001"),
    ("010", "100"),
    ("010", "001"),
    ("110", "110"),
    ("110", "001"),
    ("001", "100"),
    ("001", "010"),
    ("101", "101"),
    ("101", "010"),
    ("011", "100"),
    ("011", "011"),
    ("111", "101"),
    ("111", "011"),
];

/// Order of the Cartan–Weyl style bases, matching the bracket-table layout.
pub const CARTAN_WEYL_LABELS: [&str; 14] = [
    "h1", "h2", "a12", "a13", "a23", "a21", "a31", "a32", "x1", "x2", "x3", "y1", "y2", "y3",
];

/// Z2^2 degree of each Cartan–Weyl element.
pub fn cartan_weyl_degree(label: &str) -> Option<GradeLabel> {
    let bits = match label {
        "h1" | "h2" => "00",
        "x1" | "y1" | "a23" | "a32" => "01",
        "x2" | "y2" | "a13" | "a31" => "10",
        "x3" | "y3" | "a12" | "a21" => "11",
        _ => return None,
    };
    bits.parse().ok()
}

type Combinations = [(&'static str, &'static [(usize, i64, i64)]); 14];

/// Cartan–Weyl elements as combinations `(e index, (re + im·i)/2)`.
const CARTAN_WEYL_COMB: Combinations = [
    ("h1", &[(2, 0, 2), (1, 0, -2)]),
    ("h2", &[(1, 0, 2)]),
    ("a12", &[(8, 1, 0), (10, 0, -1)]),
    ("a13", &[(12, -1, 0), (14, 0, 1)]),
    ("a23", &[(4, 1, 0), (6, 0, 1)]),
    ("a21", &[(8, -1, 0), (10, 0, -1)]),
    ("a31", &[(12, 1, 0), (14, 0, 1)]),
    ("a32", &[(4, -1, 0), (6, 0, 1)]),
    ("x1", &[(3, 2, 0), (4, 1, 0), (5, 0, 2), (6, 0, 1)]),
    ("x2", &[(11, 2, 0), (12, 1, 0), (13, 0, 2), (14, 0, 1)]),
    ("x3", &[(7, 2, 0), (8, 1, 0), (9, 0, 2), (10, 0, 1)]),
    ("y1", &[(3, 2, 0), (4, 1, 0), (5, 0, -2), (6, 0, -1)]),
    ("y2", &[(11, 2, 0), (12, 1, 0), (13, 0, -2), (14, 0, -1)]),
    ("y3", &[(7, 2, 0), (8, 1, 0), (9, 0, -2), (10, 0, -1)]),
];

#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub label: String,
    pub degree: GradeLabel,
    pub matrix: GradedMatrix,
}

/// Named ordered list of homogeneous, linearly independent matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedBasis {
    pub name: String,
    pub group_dim: usize,
    pub elements: Vec<BasisElement>,
}

impl GradedBasis {
    /// Checks homogeneity (positionally, for 8×8 matrices graded by Z2^3) and
    /// linear independence; assigns each matrix its degree.
    pub fn new(
        name: &str,
        group_dim: usize,
        elements: Vec<BasisElement>,
    ) -> Result<Self, AlgebraError> {
        let mut checked = Vec::with_capacity(elements.len());
        for el in elements {
            if el.degree.n() != group_dim {
                return Err(AlgebraError::NotHomogeneous(el.label));
            }
            let matrix = el
                .matrix
                .with_degree(el.degree)
                .map_err(|_| AlgebraError::NotHomogeneous(el.label.clone()))?;
            checked.push(BasisElement { matrix, ..el });
        }
        let mats: Vec<&GradedMatrix> = checked.iter().map(|e| &e.matrix).collect();
        if crate::gmatrix::rank(&mats) != mats.len() {
            return Err(AlgebraError::DependentBasis(name.to_string()));
        }
        Ok(GradedBasis {
            name: name.to_string(),
            group_dim,
            elements: checked,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.elements
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    pub fn matrix(&self, label: &str) -> Result<&GradedMatrix, AlgebraError> {
        Ok(&self.elements[self.index_of(label)?].matrix)
    }

    pub fn matrices(&self) -> Vec<&GradedMatrix> {
        self.elements.iter().map(|e| &e.matrix).collect()
    }

    /// Indices of the elements of a given degree, in basis order.
    pub fn block(&self, deg: GradeLabel) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].degree == deg)
            .collect()
    }

    /// Same labels and degrees, new matrices.
    pub fn with_matrices(&self, name: &str, mats: Vec<GradedMatrix>) -> Result<Self, AlgebraError> {
        let elements = self
            .elements
            .iter()
            .zip(mats)
            .map(|(e, matrix)| BasisElement {
                label: e.label.clone(),
                degree: e.degree,
                matrix,
            })
            .collect();
        GradedBasis::new(name, self.group_dim, elements)
    }
}

/// Names accepted by [`build_basis`].
pub const BASIS_NAMES: [&str; 8] = [
    "g2",
    "so7",
    "color-case1",
    "color-case2",
    "color-case3",
    "cartan-weyl",
    "g2-7x7",
    "color-7x7",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisName {
    G2,
    So7,
    ColorCase1,
    ColorCase2,
    ColorCase3,
    CartanWeyl,
    G2Seven,
    ColorSeven,
}

impl BasisName {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisName::G2 => "g2",
            BasisName::So7 => "so7",
            BasisName::ColorCase1 => "color-case1",
            BasisName::ColorCase2 => "color-case2",
            BasisName::ColorCase3 => "color-case3",
            BasisName::CartanWeyl => "cartan-weyl",
            BasisName::G2Seven => "g2-7x7",
            BasisName::ColorSeven => "color-7x7",
        }
    }

    pub fn group_dim(self) -> usize {
        match self {
            BasisName::CartanWeyl | BasisName::G2Seven | BasisName::ColorSeven => 2,
            _ => 3,
        }
    }

    /// The sign factor the basis is published with.
    pub fn natural_sign_factor(self) -> SignFactor {
        match self {
            BasisName::ColorCase1 => SignFactor::case1(),
            BasisName::ColorCase2 => SignFactor::case2(),
            BasisName::ColorCase3 => SignFactor::case3(),
            BasisName::ColorSeven => SignFactor::z2z2(),
            other => SignFactor::zero(other.group_dim()),
        }
    }
}

impl FromStr for BasisName {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "g2" => BasisName::G2,
            "so7" => BasisName::So7,
            "color-case1" => BasisName::ColorCase1,
            "color-case2" => BasisName::ColorCase2,
            "color-case3" => BasisName::ColorCase3,
            "cartan-weyl" => BasisName::CartanWeyl,
            "g2-7x7" => BasisName::G2Seven,
            "color-7x7" => BasisName::ColorSeven,
            other => return Err(AlgebraError::UnknownBasis(other.to_string())),
        })
    }
}

impl fmt::Display for BasisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn matrix_from_e_form(terms: &[(i8, &str, &str); 4]) -> GradedMatrix {
    let triplets: Vec<(usize, usize, Scalar)> = terms
        .iter()
        .map(|&(s, r, c)| {
            let r: GradeLabel = r.parse().expect("transcribed label");
            let c: GradeLabel = c.parse().expect("transcribed label");
            (r.index(), c.index(), Scalar::from_int(s as i64))
        })
        .collect();
    GradedMatrix::from_triplets(8, &triplets).expect("indices below 8")
}

fn matrix_from_7x7(terms: &[(i8, bool, u8, u8)]) -> GradedMatrix {
    let triplets: Vec<(usize, usize, Scalar)> = terms
        .iter()
        .map(|&(c, root2, r, col)| {
            let v = Scalar::from_int(c as i64);
            let v = if root2 { &v * &Scalar::sqrt2() } else { v };
            (r as usize - 1, col as usize - 1, v)
        })
        .collect();
    GradedMatrix::from_triplets(7, &triplets).expect("indices below 7")
}

fn e_form_basis(name: &str, data: &EForm) -> Result<GradedBasis, AlgebraError> {
    let elements = data
        .iter()
        .map(|(label, terms)| {
            let matrix = matrix_from_e_form(terms);
            let degree = matrix.degree()?;
            Ok(BasisElement {
                label: (*label).to_string(),
                degree,
                matrix,
            })
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    GradedBasis::new(name, 3, elements)
}

fn seven_basis(name: &str, data: &SevenForm) -> Result<GradedBasis, AlgebraError> {
    let by_label: BTreeMap<&str, &[(i8, bool, u8, u8)]> =
        data.iter().map(|(l, t)| (*l, *t)).collect();
    let elements = CARTAN_WEYL_LABELS
        .iter()
        .map(|&label| BasisElement {
            label: label.to_string(),
            degree: cartan_weyl_degree(label).expect("known label"),
            matrix: matrix_from_7x7(by_label[label]),
        })
        .collect();
    GradedBasis::new(name, 2, elements)
}

/// The basis `e1 … e14` assembled from the `A_α^ζ` construction.
pub fn g2_from_a() -> Result<GradedBasis, AlgebraError> {
    let plane = FanoPlane::standard();
    let elements = E_SELECTION
        .iter()
        .enumerate()
        .map(|(k, (a, z))| {
            let a: GradeLabel = a.parse().expect("label");
            let el = build_a_in(&plane, a, z.parse().expect("label"))?;
            Ok(BasisElement {
                label: format!("e{}", k + 1),
                degree: a,
                matrix: el.matrix,
            })
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    GradedBasis::new("g2", 3, elements)
}

fn so7() -> Result<GradedBasis, AlgebraError> {
    let pts = GradeLabel::nonzero(3).expect("n = 3");
    let mut elements = Vec::with_capacity(21);
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            elements.push(BasisElement {
                label: format!("m{a}_{b}"),
                degree: a.plus(b),
                matrix: build_m(a, b)?,
            });
        }
    }
    GradedBasis::new("so7", 3, elements)
}

fn cartan_weyl() -> Result<GradedBasis, AlgebraError> {
    let g2 = g2_from_a()?;
    let half = Rational::new(1.into(), 2.into());
    let elements = CARTAN_WEYL_COMB
        .iter()
        .map(|(label, comb)| {
            let mut m = GradedMatrix::zeros(8);
            for &(e, re, im) in comb.iter() {
                let coeff = Scalar::from_ints(re, im, 0, 0).scale(&half);
                m = &m + &g2.elements[e - 1].matrix.mat_scale(&coeff);
            }
            BasisElement {
                label: (*label).to_string(),
                degree: cartan_weyl_degree(label).expect("known label"),
                matrix: m.with_degree_unchecked(None),
            }
        })
        .collect();
    GradedBasis::new("cartan-weyl", 2, elements)
}

/// Builds one of the named bases ([`BASIS_NAMES`]).
pub fn build_basis(name: &str) -> Result<GradedBasis, AlgebraError> {
    build_named(name.parse()?)
}

pub fn build_named(name: BasisName) -> Result<GradedBasis, AlgebraError> {
    match name {
        BasisName::G2 => g2_from_a(),
        BasisName::So7 => so7(),
        BasisName::ColorCase1 => e_form_basis("color-case1", &transcribed::CASE1_E),
        BasisName::ColorCase2 => e_form_basis("color-case2", &transcribed::CASE2_E),
        BasisName::ColorCase3 => e_form_basis("color-case3", &transcribed::CASE3_E),
        BasisName::CartanWeyl => cartan_weyl(),
        BasisName::G2Seven => seven_basis("g2-7x7", &transcribed::G2_7X7),
        BasisName::ColorSeven => seven_basis("color-7x7", &transcribed::COLOR_7X7),
    }
}

/// The explicit `E`-form transcription of `e1 … e14` (used to cross-check
/// the `A_α^ζ` construction).
pub fn g2_from_e_form() -> Result<GradedBasis, AlgebraError> {
    e_form_basis("g2", &transcribed::G2_E)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BracketKind {
    #[serde(rename = "comm")]
    Commutator,
    #[serde(rename = "anticomm")]
    Anticommutator,
}

impl BracketKind {
    pub fn from_sign(sign: i8) -> Self {
        if sign == 1 {
            BracketKind::Commutator
        } else {
            BracketKind::Anticommutator
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            BracketKind::Commutator => 1,
            BracketKind::Anticommutator => -1,
        }
    }

    fn delimiters(self) -> (&'static str, &'static str) {
        match self {
            BracketKind::Commutator => ("[", "]"),
            BracketKind::Anticommutator => ("{", "}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub kind: BracketKind,
    /// Nonzero coefficients `(k, c_{ij}^k)` in basis order.
    pub terms: Vec<(usize, Scalar)>,
}

impl BracketEntry {
    pub fn coeff(&self, k: usize) -> Scalar {
        self.terms
            .iter()
            .find(|(idx, _)| *idx == k)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BracketTable {
    pub basis_name: String,
    pub sign_factor: SignFactor,
    pub labels: Vec<String>,
    pub degrees: Vec<GradeLabel>,
    pub entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn get(&self, left: usize, right: usize) -> Option<&BracketEntry> {
        self.entries
            .iter()
            .find(|e| e.left == left && e.right == right)
    }

    pub fn get_by_label(&self, left: &str, right: &str) -> Option<&BracketEntry> {
        let l = self.labels.iter().position(|x| x == left)?;
        let r = self.labels.iter().position(|x| x == right)?;
        self.get(l, r)
    }

    /// Text form of one entry, e.g. `[e1,e11] = e13 + e14`.
    pub fn entry_text(&self, e: &BracketEntry) -> String {
        let (o, c) = e.kind.delimiters();
        format!(
            "{o}{},{}{c} = {}",
            self.labels[e.left],
            self.labels[e.right],
            render_combination(&e.terms, |k| self.labels[k].clone())
        )
    }
}

/// `c·label` with unit coefficients elided, e.g. `2e10`, `-e5`, `i/2 e6`.
pub fn render_term(c: &Scalar, label: &str) -> String {
    if c.is_one() {
        return label.to_string();
    }
    if (-c).is_one() {
        return format!("-{label}");
    }
    match c.as_rational() {
        Some(q) if q.is_integer() => format!("{c}{label}"),
        _ if c.is_monomial() => format!("{c} {label}"),
        _ => format!("({c}) {label}"),
    }
}

/// Renders `Σ c_k label_k`; `0` when empty.
pub fn render_combination(terms: &[(usize, Scalar)], label: impl Fn(usize) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (idx, c)) in terms.iter().enumerate() {
        let t = render_term(c, &label(*idx));
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// Evaluates color brackets of basis elements and expands them in the basis.
pub struct BracketComputer<'a> {
    basis: &'a GradedBasis,
    sign_factor: SignFactor,
    solvers: BTreeMap<GradeLabel, (Vec<usize>, SpanSolver)>,
}

impl<'a> BracketComputer<'a> {
    pub fn new(basis: &'a GradedBasis, sign_factor: &SignFactor) -> Result<Self, AlgebraError> {
        if sign_factor.n() != basis.group_dim {
            return Err(AlgebraError::GroupMismatch(
                sign_factor.n(),
                basis.group_dim,
            ));
        }
        let mut solvers = BTreeMap::new();
        for deg in GradeLabel::all(basis.group_dim)
            .map_err(|_| AlgebraError::GroupMismatch(sign_factor.n(), basis.group_dim))?
        {
            let idx = basis.block(deg);
            let mats: Vec<&GradedMatrix> = idx.iter().map(|&i| &basis.elements[i].matrix).collect();
            let solver = SpanSolver::new(&mats)
                .map_err(|_| AlgebraError::DependentBasis(basis.name.clone()))?;
            solvers.insert(deg, (idx, solver));
        }
        Ok(BracketComputer {
            basis,
            sign_factor: *sign_factor,
            solvers,
        })
    }

    pub fn kind(&self, i: usize, j: usize) -> BracketKind {
        let (a, b) = (self.basis.elements[i].degree, self.basis.elements[j].degree);
        BracketKind::from_sign(if self.sign_factor.eval_bits(a.bits(), b.bits()) == 0 {
            1
        } else {
            -1
        })
    }

    /// `⟦b_i, b_j⟧` as a matrix.
    pub fn bracket_matrix(&self, i: usize, j: usize) -> Result<GradedMatrix, AlgebraError> {
        let (x, y) = (&self.basis.elements[i], &self.basis.elements[j]);
        Ok(x.matrix.bracket_with_sign(
            &y.matrix,
            self.kind(i, j).sign(),
            x.degree.plus(y.degree),
        )?)
    }

    /// Coordinates of an arbitrary matrix of degree `deg` in the block basis.
    pub fn expand(
        &self,
        m: &GradedMatrix,
        deg: GradeLabel,
    ) -> Result<Vec<(usize, Scalar)>, MatrixError> {
        let (idx, solver) = &self.solvers[&deg];
        let coords = solver.coordinates(m)?;
        Ok(idx
            .iter()
            .copied()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .collect())
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<BracketEntry, AlgebraError> {
        let m = self.bracket_matrix(i, j)?;
        let deg = self.basis.elements[i]
            .degree
            .plus(self.basis.elements[j].degree);
        let terms = self.expand(&m, deg).map_err(|_| AlgebraError::Closure {
            left: self.basis.elements[i].label.clone(),
            right: self.basis.elements[j].label.clone(),
            degree: deg,
            residual: m.clone(),
        })?;
        Ok(BracketEntry {
            left: i,
            right: j,
            kind: self.kind(i, j),
            terms,
        })
    }
}

/// Structure constants of `basis` under the color bracket of `sf`, for every
/// pair `i < j`. Fails with [`AlgebraError::Closure`] on the first bracket
/// that leaves the span of its target degree.
pub fn structure_constants(
    basis: &GradedBasis,
    sf: &SignFactor,
) -> Result<BracketTable, AlgebraError> {
    structure_constants_with(basis, sf, false, Execution::default())
}

pub fn structure_constants_with(
    basis: &GradedBasis,
    sf: &SignFactor,
    diagonal: bool,
    execution: Execution,
) -> Result<BracketTable, AlgebraError> {
    let computer = BracketComputer::new(basis, sf)?;
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((if diagonal { i } else { i + 1 })..n).map(move |j| (i, j)))
        .collect();
    let entries = exec::map(execution, &pairs, |&(i, j)| computer.entry(i, j))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BracketTable {
        basis_name: basis.name.clone(),
        sign_factor: *sf,
        labels: basis.labels(),
        degrees: basis.elements.iter().map(|e| e.degree).collect(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
    Latex,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(TableFormat::Text),
            "json" => Ok(TableFormat::Json),
            "latex" => Ok(TableFormat::Latex),
            other => Err(format!(
                "unknown format {other:?} (expected text, json or latex)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: String,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub left: String,
    pub right: String,
    pub kind: BracketKind,
    pub terms: Vec<TermJson>,
}

/// The documented JSON form of a bracket table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableJson {
    pub basis: String,
    pub sign_factor: String,
    pub entries: Vec<EntryJson>,
}

impl From<&BracketTable> for TableJson {
    fn from(t: &BracketTable) -> Self {
        TableJson {
            basis: t.basis_name.clone(),
            sign_factor: t.sign_factor.spec(),
            entries: t
                .entries
                .iter()
                .map(|e| EntryJson {
                    left: t.labels[e.left].clone(),
                    right: t.labels[e.right].clone(),
                    kind: e.kind,
                    terms: e
                        .terms
                        .iter()
                        .map(|(k, c)| TermJson {
                            label: t.labels[*k].clone(),
                            coeff: c.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// `a12` → `a_{12}`, `h1` → `h_1`.
pub fn latex_label(label: &str) -> String {
    let split = label
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(label.len());
    let (head, digits) = label.split_at(split);
    match digits.len() {
        0 => head.to_string(),
        1 => format!("{head}_{digits}"),
        _ => format!("{head}_{{{digits}}}"),
    }
}

fn latex_combination(t: &BracketTable, terms: &[(usize, Scalar)]) -> String {
    render_combination(terms, |k| latex_label(&t.labels[k])).replace(' ', "")
}

fn render_latex(t: &BracketTable) -> String {
    let upper_triangular =
        matches!(t.basis_name.as_str(), "cartan-weyl" | "g2-7x7") && t.sign_factor.is_zero();
    let mut out = String::new();
    if upper_triangular {
        let n = t.labels.len();
        out.push_str("\\begin{tabular}{c||");
        out.push_str(&"c|".repeat(n));
        out.push_str("}\n $[\\cdot,\\cdot]$");
        for l in &t.labels {
            out.push_str(&format!(" & ${}$", latex_label(l)));
        }
        out.push_str(" \\\\ \\hline\\hline\n");
        for i in 0..n {
            out.push_str(&format!("${}$", latex_label(&t.labels[i])));
            for j in 0..n {
                let cell = if j < i {
                    String::new()
                } else if let Some(e) = t.get(i, j) {
                    format!("${}$", latex_combination(t, &e.terms))
                } else if i == j
                    && t.sign_factor
                        .eval_bits(t.degrees[i].bits(), t.degrees[i].bits())
                        == 0
                {
                    "$0$".into()
                } else {
                    String::new()
                };
                out.push_str(" & ");
                out.push_str(&cell);
            }
            out.push_str(" \\\\ \\hline\n");
        }
        out.push_str("\\end{tabular}\n");
    } else {
        out.push_str("\\begin{align*}\n");
        let cells: Vec<String> = t
            .entries
            .iter()
            .map(|e| {
                let (o, c) = match e.kind {
                    BracketKind::Commutator => ("[", "]"),
                    BracketKind::Anticommutator => ("\\{", "\\}"),
                };
                format!(
                    "{o}{},{}{c}={}",
                    latex_label(&t.labels[e.left]),
                    latex_label(&t.labels[e.right]),
                    latex_combination(t, &e.terms)
                )
            })
            .collect();
        for (k, chunk) in cells.chunks(6).enumerate() {
            if k > 0 {
                out.push_str(",\\\\\n");
            }
            out.push('&');
            out.push_str(&chunk.join(",\\ "));
        }
        out.push_str(".\n\\end{align*}\n");
    }
    out
}

/// Deterministic rendering of a bracket table.
pub fn render_table(t: &BracketTable, format: TableFormat) -> String {
    match format {
        TableFormat::Text => {
            let mut out = String::new();
            for e in &t.entries {
                out.push_str(&t.entry_text(e));
                out.push('\n');
            }
            out
        }
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&TableJson::from(t)).expect("serializable");
            s.push('\n');
            s
        }
        TableFormat::Latex => render_latex(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::g;

    #[test]
    fn m_antisymmetry_and_degree() {
        let a = build_m(g("100"), g("110")).unwrap();
        let b = build_m(g("110"), g("100")).unwrap();
        assert!((&a + &b).is_zero());
        assert_eq!(a.degree().unwrap(), g("010"));
        assert!(build_m(g("100"), g("100")).is_err());
        assert!(build_m(g("000"), g("100")).is_err());
    }

    fn delta(x: GradeLabel, y: GradeLabel) -> i64 {
        (x == y) as i64
    }

    #[test]
    fn m_commutators_follow_index_rule() {
        // [m_ab, m_mn] = δ_bm m_an − δ_an m_mb − δ_bn m_am + δ_am m_nb
        let pts = GradeLabel::nonzero(3).unwrap();
        let mm = |x: GradeLabel, y: GradeLabel| {
            if x == y {
                GradedMatrix::zeros(8)
            } else {
                build_m(x, y).unwrap()
            }
        };
        for &a in &pts {
            for &b in &pts {
                if a == b {
                    continue;
                }
                for &m in &pts {
                    for &n in &pts {
                        if m == n {
                            continue;
                        }
                        let lhs = build_m(a, b)
                            .unwrap()
                            .commutator(&build_m(m, n).unwrap())
                            .unwrap();
                        let s = |k: i64| Scalar::from_int(k);
                        let rhs = &(&(&mm(a, n).mat_scale(&s(delta(b, m)))
                            - &mm(m, b).mat_scale(&s(delta(a, n))))
                            - &mm(a, m).mat_scale(&s(delta(b, n))))
                            + &mm(n, b).mat_scale(&s(delta(a, m)));
                        assert_eq!(lhs.entries(), rhs.entries(), "[m{a}{b}, m{m}{n}]");
                    }
                }
            }
        }
    }

    #[test]
    fn a_examples() {
        let m = |a: &str, b: &str| build_m(g(a), g(b)).unwrap();
        assert_eq!(
            build_a(g("100"), g("001")).unwrap().matrix.entries(),
            (&m("111", "011") - &m("001", "101")).entries()
        );
        assert_eq!(
            build_a(g("100"), g("010")).unwrap().matrix.entries(),
            (&m("110", "010") - &m("111", "011")).entries()
        );
        assert_eq!(
            build_a(g("100"), g("011")).unwrap().matrix.entries(),
            (&m("001", "101") - &m("110", "010")).entries()
        );
        assert!(build_a(g("100"), g("100")).is_err());
    }

    #[test]
    fn a_sums_vanish() {
        let plane = FanoPlane::standard();
        for a in GradeLabel::nonzero(3).unwrap() {
            let mut sum = GradedMatrix::zeros(8);
            for z in plane.lines_through(a).unwrap() {
                let el = build_a(a, z).unwrap();
                assert_eq!(el.matrix.degree().unwrap(), a);
                sum = &sum + &el.matrix;
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn predicted_bracket_cases() {
        assert!(predicted_bracket(g("100"), g("010"), g("100"), g("001"))
            .unwrap()
            .is_zero());
        // σ(100, 010, 110) = −1 on the line 100 → 110 → 010
        let c = predicted_bracket(g("100"), g("010"), g("010"), g("100")).unwrap();
        assert_eq!(c.terms, vec![(-1, g("110"), g("110"))]);
        assert!(predicted_bracket(g("100"), g("100"), g("010"), g("100")).is_err());
    }

    #[test]
    fn otherwise_case_lines_are_distinct() {
        let plane = FanoPlane::standard();
        let pairs: Vec<(GradeLabel, GradeLabel)> =
            all_a().iter().map(|a| (a.point, a.line)).collect();
        for &(a, l) in &pairs {
            for &(b, m) in &pairs {
                if a == b {
                    continue;
                }
                let ell = plane.line_label(a, b).unwrap();
                if l != ell && m != ell {
                    assert_ne!(l, m);
                    assert_eq!(a.plus(b).dot(l.plus(m)), 0);
                }
            }
        }
    }

    #[test]
    fn g2_matches_e_form_and_selection() {
        let from_a = g2_from_a().unwrap();
        let from_e = g2_from_e_form().unwrap();
        assert_eq!(from_a, from_e);
        let degrees: Vec<String> = from_a
            .elements
            .iter()
            .map(|e| e.degree.to_string())
            .collect();
        assert_eq!(
            degrees,
            [
                "100", "100", "010", "010", "110", "110", "001", "001", "101", "101", "011", "011",
                "111", "111"
            ]
        );
    }

    #[test]
    fn basis_sizes() {
        let g2 = build_basis("g2").unwrap();
        assert_eq!(g2.len(), 14);
        assert!(g2.block(g("000")).is_empty());
        for a in GradeLabel::nonzero(3).unwrap() {
            assert_eq!(g2.block(a).len(), 2);
        }
        let so7 = build_basis("so7").unwrap();
        assert_eq!(so7.len(), 21);
        for a in GradeLabel::nonzero(3).unwrap() {
            assert_eq!(so7.block(a).len(), 3);
        }
        assert!(matches!(
            build_basis("f4"),
            Err(AlgebraError::UnknownBasis(_))
        ));
        for name in BASIS_NAMES {
            assert_eq!(build_basis(name).unwrap().name, name);
        }
    }

    #[test]
    fn cartan_weyl_h1() {
        let cw = build_basis("cartan-weyl").unwrap();
        let g2 = build_basis("g2").unwrap();
        let i = Scalar::i();
        let want =
            &g2.matrix("e2").unwrap().mat_scale(&i) - &g2.matrix("e1").unwrap().mat_scale(&i);
        assert_eq!(cw.matrix("h1").unwrap().entries(), want.entries());
        assert_eq!(cw.group_dim, 2);
    }

    #[test]
    fn table_examples() {
        let g2 = build_basis("g2").unwrap();
        let t = structure_constants(&g2, &SignFactor::zero(3)).unwrap();
        assert_eq!(t.entries.len(), 91);
        let e = t.get_by_label("e1", "e3").unwrap();
        assert_eq!(e.kind, BracketKind::Commutator);
        assert_eq!(e.terms, vec![(4, Scalar::from_int(-1))]);
        assert_eq!(
            t.entry_text(t.get_by_label("e1", "e2").unwrap()),
            "[e1,e2] = 0"
        );
        assert_eq!(
            t.entry_text(t.get_by_label("e1", "e11").unwrap()),
            "[e1,e11] = e13 + e14"
        );
        assert_eq!(
            t.entry_text(t.get_by_label("e1", "e8").unwrap()),
            "[e1,e8] = -2e10"
        );

        let c2 = build_basis("color-case2").unwrap();
        let t = structure_constants(&c2, &SignFactor::case2()).unwrap();
        let e = t.get_by_label("e1", "e9").unwrap();
        assert_eq!(e.kind, BracketKind::Anticommutator);
        assert_eq!(t.entry_text(e), "{e1,e9} = e8");
        assert_eq!(
            t.entry_text(t.get_by_label("e2", "e9").unwrap()),
            "{e2,e9} = e7"
        );

        let cw = build_basis("cartan-weyl").unwrap();
        let t = structure_constants(&cw, &SignFactor::zero(2)).unwrap();
        assert_eq!(
            t.entry_text(t.get_by_label("x1", "y1").unwrap()),
            "[x1,y1] = h1 + 3h2"
        );
        assert_eq!(
            t.entry_text(t.get_by_label("x3", "y3").unwrap()),
            "[x3,y3] = -2h1 - 3h2"
        );
    }

    #[test]
    fn wrong_group_is_rejected() {
        let g2 = build_basis("g2").unwrap();
        assert!(matches!(
            structure_constants(&g2, &SignFactor::z2z2()),
            Err(AlgebraError::GroupMismatch(2, 3))
        ));
    }

    #[test]
    fn closure_violation_is_reported() {
        let c1 = build_basis("color-case1").unwrap();
        let err = structure_constants(&c1, &SignFactor::zero(3)).unwrap_err();
        assert!(matches!(err, AlgebraError::Closure { .. }), "{err}");
    }

    #[test]
    fn renderings() {
        let cw = build_basis("cartan-weyl").unwrap();
        let t = structure_constants_with(&cw, &SignFactor::zero(2), true, Execution::Sequential)
            .unwrap();
        assert_eq!(t.entries.len(), 105);
        let latex = render_table(&t, TableFormat::Latex);
        let h1_row = latex.lines().find(|l| l.starts_with("$h_1$")).unwrap();
        let cells: Vec<&str> = h1_row.split(" & ").collect();
        assert_eq!(cells[3], "$-3a_{12}$");
        let json = render_table(&t, TableFormat::Json);
        let back: TableJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, TableJson::from(&t));
        assert_eq!(back.entries.len(), 105);

        let g2 = build_basis("g2").unwrap();
        let t = structure_constants(&g2, &SignFactor::zero(3)).unwrap();
        let text = render_table(&t, TableFormat::Text);
        assert_eq!(text.lines().next(), Some("[e1,e2] = 0"));
        let flat = render_table(&t, TableFormat::Latex);
        assert!(flat.contains("[e_1,e_3]=-e_5"));
    }

    #[test]
    fn term_rendering() {
        assert_eq!(render_term(&Scalar::from_int(-2), "e10"), "-2e10");
        assert_eq!(render_term(&Scalar::frac(1, 2), "e4"), "1/2 e4");
        assert_eq!(
            render_term(&Scalar::from_ints(1, 1, 0, 0), "e5"),
            "(1 + i) e5"
        );
        assert_eq!(latex_label("a12"), "a_{12}");
        assert_eq!(latex_label("h1"), "h_1");
    }
}
