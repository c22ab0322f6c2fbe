//! Exhaustive verification suites over finite, exact domains.
//!
//! Each suite returns a [`VerificationReport`]; failures carry the exact
//! expected and actual values and, where a matrix is involved, the residual.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    self, all_a, build_basis, build_m, AlgebraError, BasisName, BracketComputer, BracketKind,
    GradedBasis,
};
use crate::exec::{self, Execution};
use crate::fano::FanoPlane;
use crate::fixtures::{load_fixture, FixtureError};
use crate::gmatrix::{rank, GradedMatrix};
use crate::grading::{GradeLabel, SignFactor};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("sign factor {0} has zero diagonal; the self-bracket obstruction is vacuous")]
    LieType(SignFactor),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub context: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl Failure {
    pub(crate) fn new(
        context: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Failure {
            context: context.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            residual: None,
        }
    }

    fn with_residual(mut self, m: &GradedMatrix) -> Self {
        self.residual = Some(m.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks_run: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks_run: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `suite: N checks, M failures`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} checks, {} failures [{}]",
            self.suite,
            self.checks_run,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    pub(crate) fn check(&mut self, outcome: Option<Failure>) {
        self.checks_run += 1;
        if let Some(f) = outcome {
            self.failures.push(f);
        }
    }

    fn absorb(&mut self, outcomes: impl IntoIterator<Item = Option<Failure>>) {
        for o in outcomes {
            self.check(o);
        }
    }
}

type Key = (GradeLabel, GradeLabel);

fn a_family() -> HashMap<Key, GradedMatrix> {
    all_a()
        .into_iter()
        .map(|a| ((a.point, a.line), a.matrix))
        .collect()
}

fn comb_matrix(family: &HashMap<Key, GradedMatrix>, comb: &algebra::AComb) -> GradedMatrix {
    let mut out = GradedMatrix::zeros(8);
    for &(c, a, z) in &comb.terms {
        out = &out + &family[&(a, z)].mat_scale(&Scalar::from_int(c));
    }
    out
}

/// Compares every commutator `[A_α^λ, A_β^μ]` with the closed form.
pub fn verify_a_products() -> VerificationReport {
    verify_a_products_with(Execution::default())
}

pub fn verify_a_products_with(execution: Execution) -> VerificationReport {
    let plane = FanoPlane::standard();
    let family = a_family();
    let keys: Vec<Key> = all_a().iter().map(|a| (a.point, a.line)).collect();
    let pairs: Vec<(Key, Key)> = keys
        .iter()
        .flat_map(|&x| keys.iter().map(move |&y| (x, y)))
        .collect();
    let outcomes = exec::map(execution, &pairs, |&((a, l), (b, m))| {
        let ctx = format!("[A_{a}^{l}, A_{b}^{m}]");
        let predicted = match algebra::predicted_bracket_in(&plane, a, l, b, m) {
            Ok(p) => p,
            Err(e) => return Some(Failure::new(ctx, "closed form", e)),
        };
        let want = comb_matrix(&family, &predicted);
        let got = family[&(a, l)].commutator(&family[&(b, m)]).expect("8x8");
        (want.entries() != got.entries())
            .then(|| Failure::new(ctx, &want, &got).with_residual(&(&got - &want)))
    });
    let mut report = VerificationReport::new("products");
    report.absorb(outcomes);
    report
}

/// One entry of a fixture, recomputed from matrices.
fn table_outcome(
    computer: &BracketComputer<'_>,
    basis: &GradedBasis,
    left: &str,
    right: &str,
    kind: BracketKind,
    terms: &[(String, Scalar)],
) -> Option<Failure> {
    let ctx = format!("{}: ({left},{right})", basis.name);
    let (i, j) = match (basis.index_of(left), basis.index_of(right)) {
        (Ok(i), Ok(j)) => (i, j),
        (Err(e), _) | (_, Err(e)) => return Some(Failure::new(ctx, "known labels", e)),
    };
    let entry = match computer.entry(i, j) {
        Ok(e) => e,
        Err(AlgebraError::Closure { residual, .. }) => {
            return Some(
                Failure::new(ctx, "closure", "bracket leaves the span").with_residual(&residual),
            )
        }
        Err(e) => return Some(Failure::new(ctx, "bracket", e)),
    };
    let expected: Result<Vec<(usize, Scalar)>, AlgebraError> = terms
        .iter()
        .map(|(l, c)| Ok((basis.index_of(l)?, c.clone())))
        .collect();
    let mut expected = match expected {
        Ok(v) => v,
        Err(e) => return Some(Failure::new(ctx, "known labels", e)),
    };
    expected.sort_by_key(|t| t.0);
    let render = |k: BracketKind, t: &[(usize, Scalar)]| {
        let (o, c) = if k == BracketKind::Commutator {
            ("[", "]")
        } else {
            ("{", "}")
        };
        format!(
            "{o}{left},{right}{c} = {}",
            algebra::render_combination(t, |x| basis.elements[x].label.clone())
        )
    };
    if entry.kind != kind || entry.terms != expected {
        let mut f = Failure::new(
            ctx,
            render(kind, &expected),
            render(entry.kind, &entry.terms),
        );
        let want = expected.iter().fold(
            GradedMatrix::zeros(basis.elements[0].matrix.dim()),
            |acc, (k, c)| &acc + &basis.elements[*k].matrix.mat_scale(c),
        );
        if let Ok(m) = computer.bracket_matrix(i, j) {
            f = f.with_residual(&(&m - &want));
        }
        return Some(f);
    }
    None
}

/// Diffs computed structure constants against an embedded fixture, entry by
/// entry, including the bracket kind. Every unordered pair of distinct
/// elements must be covered by the fixture.
pub fn verify_table(
    basis_name: &str,
    sign_factor: &SignFactor,
    fixture_name: &str,
) -> Result<VerificationReport, VerifyError> {
    let basis = build_basis(basis_name)?;
    verify_table_basis(&basis, sign_factor, fixture_name, Execution::default())
}

pub fn verify_table_basis(
    basis: &GradedBasis,
    sign_factor: &SignFactor,
    fixture_name: &str,
    execution: Execution,
) -> Result<VerificationReport, VerifyError> {
    let fixture = load_fixture(fixture_name)?;
    let computer = BracketComputer::new(basis, sign_factor)?;
    let mut report = VerificationReport::new(format!(
        "table {} / {} / {}",
        basis.name, sign_factor, fixture_name
    ));
    let outcomes = exec::map(execution, &fixture.entries, |e| {
        table_outcome(&computer, basis, &e.left, &e.right, e.kind, &e.terms)
    });
    report.absorb(outcomes);
    let n = basis.len();
    for i in 0..n {
        for j in i + 1..n {
            let (l, r) = (&basis.elements[i].label, &basis.elements[j].label);
            let covered = fixture.get(l, r).is_some() || fixture.get(r, l).is_some();
            report.check((!covered).then(|| {
                Failure::new(
                    format!("{}: ({l},{r})", basis.name),
                    "fixture entry",
                    "missing",
                )
            }));
        }
    }
    Ok(report)
}

/// The colored 8×8 bases use the positions of `e1 … e14` with some signs changed.
pub fn verify_sign_patterns() -> Result<VerificationReport, VerifyError> {
    let g2 = build_basis("g2")?;
    let mut report = VerificationReport::new("sign patterns");
    for name in ["color-case1", "color-case2", "color-case3"] {
        let colored = build_basis(name)?;
        for (x, y) in g2.elements.iter().zip(&colored.elements) {
            let ok = x.label == y.label && x.matrix.same_pattern_up_to_sign(&y.matrix);
            report.check(
                (!ok).then(|| Failure::new(format!("{name}: {}", y.label), &x.matrix, &y.matrix)),
            );
        }
    }
    for (x, y) in build_basis("g2-7x7")?
        .elements
        .iter()
        .zip(&build_basis("color-7x7")?.elements)
    {
        let ok = x.label == y.label && x.matrix.same_pattern_up_to_sign(&y.matrix);
        report.check(
            (!ok).then(|| Failure::new(format!("color-7x7: {}", y.label), &x.matrix, &y.matrix)),
        );
    }
    Ok(report)
}

fn color_sign(sf: &SignFactor, a: GradeLabel, b: GradeLabel) -> i8 {
    if sf.eval_bits(a.bits(), b.bits()) == 0 {
        1
    } else {
        -1
    }
}

/// `out += scale · (x·y − sign · y·x)`, touching only nonzero products.
fn accumulate_bracket(x: &GradedMatrix, y: &GradedMatrix, sign: i8, scale: i8, out: &mut [Scalar]) {
    let n = x.dim();
    let (xe, ye) = (x.entries(), y.entries());
    let mut add = |pos: usize, v: Scalar, positive: bool| {
        if positive {
            out[pos] += &v;
        } else {
            out[pos] -= &v;
        }
    };
    for (i, k, a) in x.nonzero_entries() {
        for j in 0..n {
            let b = &ye[k * n + j];
            if !b.is_zero() {
                add(i * n + j, a * b, scale == 1);
            }
        }
    }
    for (i, k, b) in y.nonzero_entries() {
        for j in 0..n {
            let a = &xe[k * n + j];
            if !a.is_zero() {
                add(i * n + j, b * a, scale * sign == -1);
            }
        }
    }
}

/// Graded Jacobi identity for a named basis. See [`verify_jacobi_basis`].
pub fn verify_jacobi(
    basis_name: &str,
    sign_factor: &SignFactor,
) -> Result<VerificationReport, VerifyError> {
    let basis = build_basis(basis_name)?;
    Ok(verify_jacobi_basis(
        &basis,
        sign_factor,
        Execution::default(),
    )?)
}

/// Checks, for every ordered triple `(x, y, z)` of degrees `(α, β, γ)`,
/// `(−1)^⟨γ,α⟩⟦x,⟦y,z⟧⟧ + (−1)^⟨α,β⟩⟦y,⟦z,x⟧⟧ + (−1)^⟨β,γ⟩⟦z,⟦x,y⟧⟧ = 0`
/// twice: with matrices, and with the structure constants. Closure of every
/// pair (diagonal included) is checked first, since the matrix identity
/// alone holds for any associative product.
pub fn verify_jacobi_basis(
    basis: &GradedBasis,
    sf: &SignFactor,
    execution: Execution,
) -> Result<VerificationReport, AlgebraError> {
    let computer = BracketComputer::new(basis, sf)?;
    let n = basis.len();
    let mut report = VerificationReport::new(format!("jacobi {} / {}", basis.name, sf));
    let deg: Vec<GradeLabel> = basis.elements.iter().map(|e| e.degree).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();

    let brackets: Vec<GradedMatrix> =
        exec::map(execution, &pairs, |&(i, j)| computer.bracket_matrix(i, j))
            .into_iter()
            .collect::<Result<_, _>>()?;
    let coords: Vec<Result<Vec<Scalar>, Failure>> = exec::map(execution, &pairs, |&(i, j)| {
        let m = &brackets[i * n + j];
        let target = deg[i].plus(deg[j]);
        let mut dense = vec![Scalar::zero(); n];
        match computer.expand(m, target) {
            Ok(terms) => {
                for (k, c) in terms {
                    dense[k] = c;
                }
                Ok(dense)
            }
            Err(_) => Err(Failure::new(
                format!(
                    "closure {}: ({},{})",
                    basis.name, basis.elements[i].label, basis.elements[j].label
                ),
                format!("element of degree {target}"),
                "bracket leaves the span",
            )
            .with_residual(m)),
        }
    });
    let mut closed = true;
    for c in &coords {
        closed &= c.is_ok();
        report.check(c.as_ref().err().cloned());
    }

    let sparse: Vec<Vec<(usize, Scalar)>> = coords
        .iter()
        .map(|c| match c {
            Ok(v) => v
                .iter()
                .cloned()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect(),
            Err(_) => Vec::new(),
        })
        .collect();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    let outcomes = exec::map(execution, &triples, |&(x, y, z)| {
        let (a, b, c) = (deg[x], deg[y], deg[z]);
        let dim = basis.elements[x].matrix.dim();
        let mut total = vec![Scalar::zero(); dim * dim];
        for (p, q, r, s) in [
            (x, y, z, color_sign(sf, c, a)),
            (y, z, x, color_sign(sf, a, b)),
            (z, x, y, color_sign(sf, b, c)),
        ] {
            let inner = &brackets[q * n + r];
            let sign = color_sign(sf, deg[p], deg[q].plus(deg[r]));
            accumulate_bracket(&basis.elements[p].matrix, inner, sign, s, &mut total);
        }
        let total = if total.iter().all(Scalar::is_zero) {
            None
        } else {
            let triplets: Vec<(usize, usize, Scalar)> = total
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k / dim, k % dim, v))
                .collect();
            Some(GradedMatrix::from_triplets(dim, &triplets).expect("in range"))
        };
        let labels = (
            &basis.elements[x].label,
            &basis.elements[y].label,
            &basis.elements[z].label,
        );
        let matrix_failure = total.map(|t| {
            Failure::new(format!("matrix jacobi {labels:?}"), "0", "nonzero").with_residual(&t)
        });

        let table_failure = if closed {
            // ⟦p,⟦q,r⟧⟧ = Σ_k c_qr^k ⟦p, b_k⟧ expanded through the table
            let mut sum = vec![Scalar::zero(); n];
            for (p, q, r, sg) in [
                (x, y, z, color_sign(sf, c, a)),
                (y, z, x, color_sign(sf, a, b)),
                (z, x, y, color_sign(sf, b, c)),
            ] {
                for (k, ck) in &sparse[q * n + r] {
                    for (t, v) in &sparse[p * n + k] {
                        let term = ck * v;
                        if sg == 1 {
                            sum[*t] += &term;
                        } else {
                            sum[*t] -= &term;
                        }
                    }
                }
            }
            let nonzero: Vec<(usize, Scalar)> = sum
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            (!nonzero.is_empty()).then(|| {
                Failure::new(
                    format!("table jacobi {labels:?}"),
                    "0",
                    algebra::render_combination(&nonzero, |k| basis.elements[k].label.clone()),
                )
            })
        } else {
            None
        };
        [matrix_failure, table_failure]
    });
    for [m, t] in outcomes {
        report.check(m);
        if closed {
            report.check(t);
        }
    }
    if !closed {
        report
            .notes
            .push("table-level identity skipped: the brackets do not close".into());
    }
    Ok(report)
}

/// An 8-component octonion with an extra coefficient of `q·1`, where `q`
/// is a formal common value of the squares `e_μ·e_μ`.
#[derive(Clone, PartialEq)]
struct Oct {
    v: Vec<Scalar>,
    q: Scalar,
}

impl Oct {
    fn zero() -> Self {
        Oct {
            v: vec![Scalar::zero(); 8],
            q: Scalar::zero(),
        }
    }

    fn basis(k: usize) -> Self {
        let mut o = Oct::zero();
        o.v[k] = Scalar::one();
        o
    }

    fn add(&self, other: &Oct) -> Oct {
        Oct {
            v: self.v.iter().zip(&other.v).map(|(a, b)| a + b).collect(),
            q: &self.q + &other.q,
        }
    }

    fn render(&self) -> String {
        let mut terms: Vec<(usize, Scalar)> = self
            .v
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if !self.q.is_zero() {
            terms.push((8, self.q.clone()));
        }
        algebra::render_combination(&terms, |k| {
            if k == 8 {
                "q".into()
            } else {
                format!("e{}", GradeLabel::new(k as u8, 3).expect("3 bits"))
            }
        })
    }
}

/// Product of two q-free octonions.
fn oct_mul(plane: &FanoPlane, x: &Oct, y: &Oct) -> Oct {
    let mut out = Oct::zero();
    for (i, a) in x.v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            if i == j && i != 0 {
                out.q += &ab;
                continue;
            }
            let (gi, gj) = (
                GradeLabel::new(i as u8, 3).expect("3 bits"),
                GradeLabel::new(j as u8, 3).expect("3 bits"),
            );
            let (s, k) = plane.octonion_mul(gi, gj).expect("distinct or unit");
            if s == 1 {
                out.v[k.index()] += &ab;
            } else {
                out.v[k.index()] -= &ab;
            }
        }
    }
    out
}

fn oct_apply(m: &GradedMatrix, x: &Oct) -> Oct {
    Oct {
        v: m.apply(&x.v).expect("8x8"),
        q: Scalar::zero(),
    }
}

/// Leibniz rule `A(e_μ·e_ν) = A(e_μ)·e_ν + e_μ·A(e_ν)` for all 21 `A_α^ζ` and
/// all 42 ordered products of distinct imaginary units, as an identity in
/// the formal square `q`.
pub fn verify_derivation() -> VerificationReport {
    verify_derivation_with(Execution::default())
}

pub fn verify_derivation_with(execution: Execution) -> VerificationReport {
    let plane = FanoPlane::standard();
    let family = all_a();
    let pts = GradeLabel::nonzero(3).expect("n = 3");
    let mut cases = Vec::new();
    for a in &family {
        for &m in &pts {
            for &n in &pts {
                if m != n {
                    cases.push((a, m, n));
                }
            }
        }
    }
    let outcomes = exec::map(execution, &cases, |&(a, m, n)| {
        let (em, en) = (Oct::basis(m.index()), Oct::basis(n.index()));
        let lhs = oct_apply(&a.matrix, &oct_mul(&plane, &em, &en));
        let rhs = oct_mul(&plane, &oct_apply(&a.matrix, &em), &en).add(&oct_mul(
            &plane,
            &em,
            &oct_apply(&a.matrix, &en),
        ));
        (lhs != rhs).then(|| {
            Failure::new(
                format!("A_{}^{} on e{m}·e{n}", a.point, a.line),
                lhs.render(),
                rhs.render(),
            )
        })
    });
    let mut report = VerificationReport::new("derivation");
    report.absorb(outcomes);
    report
}

/// Ranks and sum relations: `Σ_ζ A_α^ζ = 0`, rank 2 at each point, rank 14
/// overall, 𝔤_000 = 0 with 2-dimensional 𝔤_α, and rank 21 for `m_{βγ}`.
pub fn verify_dimensions() -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("dimensions");
    let family = all_a();
    for a in GradeLabel::nonzero(3).expect("n = 3") {
        let at: Vec<&GradedMatrix> = family
            .iter()
            .filter(|x| x.point == a)
            .map(|x| &x.matrix)
            .collect();
        let sum = at.iter().fold(GradedMatrix::zeros(8), |acc, m| &acc + *m);
        report.check(
            (!sum.is_zero())
                .then(|| Failure::new(format!("sum of A_{a}^ζ"), "0", &sum).with_residual(&sum)),
        );
        let r = rank(&at);
        report.check((r != 2).then(|| Failure::new(format!("rank of A_{a}^ζ"), 2, r)));
    }
    let all: Vec<&GradedMatrix> = family.iter().map(|x| &x.matrix).collect();
    let r = rank(&all);
    report.check((r != 14).then(|| Failure::new("rank of the A family", 14, r)));

    let g2 = build_basis("g2")?;
    for d in GradeLabel::all(3).expect("n = 3") {
        let want = if d.is_zero() { 0 } else { 2 };
        let got = g2.block(d).len();
        report.check((got != want).then(|| Failure::new(format!("dim g_{d}"), want, got)));
    }
    let pts = GradeLabel::nonzero(3).expect("n = 3");
    let ms: Vec<GradedMatrix> = pts
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            pts[i + 1..]
                .iter()
                .map(move |&b| build_m(a, b).expect("distinct points"))
        })
        .collect();
    let r = rank(&ms.iter().collect::<Vec<_>>());
    report.check((r != 21).then(|| Failure::new("rank of the m family", 21, r)));
    Ok(report)
}

/// All sign variants of a matrix's nonzero entries, in binary order of the
/// flip pattern (bit k flips the k-th nonzero entry in row-major order).
pub fn sign_variants(m: &GradedMatrix) -> Vec<GradedMatrix> {
    let nz: Vec<(usize, usize)> = m
        .nonzero_entries()
        .into_iter()
        .map(|(r, c, _)| (r, c))
        .collect();
    (0..1u32 << nz.len())
        .map(|mask| {
            let mut out = m.clone();
            for (k, &(r, c)) in nz.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    let v = -m.get(r, c);
                    out.set(r, c, v);
                }
            }
            out
        })
        .collect()
}

/// For a factor with some `⟨α,α⟩ = 1`, confirms that every sign variant of
/// every `e_i` of such a degree has nonzero square, so `{ẽ_i, ẽ_i} ≠ 0`.
pub fn verify_no_super_coloring(delta: &SignFactor) -> Result<VerificationReport, VerifyError> {
    if delta.is_lie_type() {
        return Err(VerifyError::LieType(*delta));
    }
    let g2 = build_basis("g2")?;
    let mut report = VerificationReport::new(format!("obstruction {delta}"));
    for el in &g2.elements {
        if delta.eval_bits(el.degree.bits(), el.degree.bits()) == 0 {
            continue;
        }
        for (k, v) in sign_variants(&el.matrix).iter().enumerate() {
            let sq = v.mat_mul(v).expect("8x8");
            report.check(
                sq.is_zero().then(|| {
                    Failure::new(format!("{} variant {k}", el.label), "nonzero square", "0")
                }),
            );
        }
    }
    Ok(report)
}

/// [`verify_no_super_coloring`] for every non-alternating factor on Z2^3.
pub fn verify_obstruction_sweep() -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("obstruction sweep");
    let mut factors = 0;
    for sf in crate::grading::enumerate_sign_factors(3) {
        if sf.is_lie_type() {
            continue;
        }
        factors += 1;
        let r = verify_no_super_coloring(&sf)?;
        report.checks_run += r.checks_run;
        report.failures.extend(r.failures);
    }
    report
        .notes
        .push(format!("{factors} non-alternating factors"));
    Ok(report)
}

/// Flips the sign of the first nonzero entry of one basis element.
pub fn corrupt_basis(basis: &GradedBasis, element: usize) -> GradedBasis {
    let mut out = basis.clone();
    let m = &mut out.elements[element].matrix;
    let (r, c, v) = {
        let (r, c, v) = m.nonzero_entries()[0];
        (r, c, -v)
    };
    m.set(r, c, v);
    out
}

/// Each suite is run on a deliberately wrong input and must fail there.
/// A check fails here when the corrupted run passes.
pub fn verify_negative_controls() -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("negative controls");
    let mut expect_fail = |name: &str, r: VerificationReport| {
        report.check(
            r.passed()
                .then(|| Failure::new(name, "failures", "suite passed")),
        );
    };

    let g2 = build_basis("g2")?;
    let bad = corrupt_basis(&g2, 0);
    expect_fail(
        "jacobi on g2 with e1 corrupted",
        verify_jacobi_basis(&bad, &SignFactor::zero(3), Execution::default())?,
    );
    expect_fail(
        "jacobi on color-case1 with the zero factor",
        verify_jacobi("color-case1", &SignFactor::zero(3))?,
    );
    expect_fail(
        "table g2 with e1 corrupted",
        verify_table_basis(&bad, &SignFactor::zero(3), "g2", Execution::default())?,
    );
    expect_fail(
        "table color-case1 against the g2 fixture",
        verify_table("color-case1", &SignFactor::case1(), "g2")?,
    );
    let c1 = build_basis("color-case1")?;
    expect_fail(
        "jacobi on color-case1 with e5 corrupted",
        verify_jacobi_basis(
            &corrupt_basis(&c1, 4),
            &SignFactor::case1(),
            Execution::default(),
        )?,
    );
    let cw = build_basis("color-7x7")?;
    expect_fail(
        "jacobi on color-7x7 with x1 corrupted",
        verify_jacobi_basis(
            &corrupt_basis(&cw, cw.index_of("x1")?),
            &SignFactor::z2z2(),
            Execution::default(),
        )?,
    );

    // corrupted derivation: an A with one entry flipped is no longer a derivation
    let plane = FanoPlane::standard();
    let mut a = all_a().remove(0);
    let (r, c, v) = {
        let (r, c, v) = a.matrix.nonzero_entries()[0];
        (r, c, -v)
    };
    a.matrix.set(r, c, v);
    let pts = GradeLabel::nonzero(3).expect("n = 3");
    let broken = pts.iter().any(|&m| {
        pts.iter().any(|&n| {
            if m == n {
                return false;
            }
            let (em, en) = (Oct::basis(m.index()), Oct::basis(n.index()));
            let lhs = oct_apply(&a.matrix, &oct_mul(&plane, &em, &en));
            let rhs = oct_mul(&plane, &oct_apply(&a.matrix, &em), &en).add(&oct_mul(
                &plane,
                &em,
                &oct_apply(&a.matrix, &en),
            ));
            lhs != rhs
        })
    });
    report.check(
        (!broken)
            .then(|| Failure::new("derivation with a corrupted A", "failures", "suite passed")),
    );
    Ok(report)
}

/// The (basis, factor, fixture) triples with a published table.
pub const TABLE_CASES: [(&str, &str, &str); 7] = [
    ("g2", "zero", "g2"),
    ("color-case1", "case1", "color-case1"),
    ("color-case2", "case2", "color-case2"),
    ("color-case3", "case3", "color-case3"),
    ("cartan-weyl", "zero", "cartan-weyl"),
    ("g2-7x7", "zero", "cartan-weyl"),
    ("color-7x7", "z2z2", "color-7x7"),
];

pub const SUITES: [&str; 7] = [
    "all",
    "products",
    "tables",
    "jacobi",
    "derivation",
    "dimensions",
    "obstruction",
];

/// Runs a named suite. `basis` restricts the table and Jacobi suites to one
/// basis; `sign_factor` overrides the factor they use (and selects the
/// factor for the obstruction suite, which otherwise sweeps all of them).
pub fn run_suite(
    suite: &str,
    basis: Option<&str>,
    sign_factor: Option<&SignFactor>,
    execution: Execution,
) -> Result<Vec<VerificationReport>, VerifyError> {
    let wanted = |s: &str| suite == "all" || suite == s;
    if !SUITES.contains(&suite) {
        return Err(VerifyError::UnknownSuite(suite.to_string()));
    }
    if let Some(b) = basis {
        b.parse::<BasisName>()?;
    }
    let mut out = Vec::new();
    if wanted("products") {
        out.push(verify_a_products_with(execution));
    }
    if wanted("dimensions") {
        out.push(verify_dimensions()?);
    }
    let cases: Vec<(&str, SignFactor, &str)> = TABLE_CASES
        .iter()
        .filter(|(b, _, _)| basis.is_none_or(|x| x == *b))
        .map(|&(b, sf, fx)| {
            let natural = SignFactor::parse(sf, 3).expect("preset");
            let natural = if natural.n() == b.parse::<BasisName>().expect("known").group_dim() {
                natural
            } else {
                SignFactor::parse(sf, 2).expect("preset")
            };
            (b, sign_factor.copied().unwrap_or(natural), fx)
        })
        .collect();
    if wanted("tables") {
        for &(b, sf, fx) in &cases {
            let basis = build_basis(b)?;
            out.push(verify_table_basis(&basis, &sf, fx, execution)?);
        }
        if basis.is_none() {
            out.push(verify_sign_patterns()?);
        }
    }
    if wanted("jacobi") {
        let mut seen = Vec::new();
        for &(b, sf, _) in &cases {
            if seen.contains(&b) {
                continue;
            }
            seen.push(b);
            out.push(verify_jacobi_basis(&build_basis(b)?, &sf, execution)?);
        }
        if basis.is_none() && sign_factor.is_none() {
            out.push(verify_negative_controls()?);
        }
    }
    if wanted("derivation") {
        out.push(verify_derivation_with(execution));
    }
    if wanted("obstruction") {
        match sign_factor {
            Some(sf) => out.push(verify_no_super_coloring(sf)?),
            None => out.push(verify_obstruction_sweep()?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::g;

    #[test]
    fn a_product_example_pair() {
        let p = algebra::predicted_bracket(g("100"), g("010"), g("010"), g("100")).unwrap();
        let fam = a_family();
        let got = fam[&(g("100"), g("010"))]
            .commutator(&fam[&(g("010"), g("100"))])
            .unwrap();
        assert_eq!(got.entries(), comb_matrix(&fam, &p).entries());
        assert_eq!(p.to_string(), "-A_110^110");
    }

    #[test]
    fn a_product_sweep() {
        let r = verify_a_products_with(Execution::Sequential);
        assert_eq!(r.checks_run, 441);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn derivation_sweep() {
        let r = verify_derivation();
        assert_eq!(r.checks_run, 21 * 42);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn dimensions() {
        let r = verify_dimensions().unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn obstruction() {
        let r = verify_no_super_coloring(&SignFactor::identity(3)).unwrap();
        // every nonzero degree has odd self-pairing under the identity form
        // when it has an odd number of bits
        assert!(r.passed());
        assert!(r.checks_run >= 16);
        assert!(matches!(
            verify_no_super_coloring(&SignFactor::case1()),
            Err(VerifyError::LieType(_))
        ));
    }

    #[test]
    fn sign_variants_count() {
        let g2 = build_basis("g2").unwrap();
        let v = sign_variants(&g2.elements[0].matrix);
        assert_eq!(v.len(), 16);
        assert_eq!(v[0], g2.elements[0].matrix);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", None, None, Execution::Sequential),
            Err(VerifyError::UnknownSuite(_))
        ));
    }
}
