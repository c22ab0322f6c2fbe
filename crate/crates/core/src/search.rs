//! Exhaustive search for colorings by sign changes.
//!
//! Each basis element `ẽ_i` is the base matrix with some of its nonzero
//! entries negated. A choice is accepted when every color bracket satisfies
//! `⟦ẽ_i, ẽ_j⟧ = Σ_k ε_ijk c_ij^k ẽ_k` with `c` the uncolored structure
//! constants and `ε_ijk ∈ {±1}`.
//!
//! The engine works over the ring Z[i, √2] in machine integers. Each element
//! has a domain of candidate flip patterns (a bitmask); a bracket whose two
//! arguments are fixed restricts the domains of its targets to patterns that
//! can still satisfy it. Branching picks the smallest open domain.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    structure_constants_with, AlgebraError, BracketEntry, BracketKind, BracketTable, GradedBasis,
};
use crate::exec::{self, Execution};
use crate::grading::SignFactor;
use crate::scalars::Scalar;
use crate::verify::{verify_jacobi_basis, Failure, VerificationReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("sign factor on Z2^{0} does not match basis graded by Z2^{1}")]
    GroupMismatch(usize, usize),
    #[error("entry or structure constant of {0} is not in Z[i, sqrt2]")]
    NotIntegral(String),
    #[error("element {0} has {1} nonzero entries; at most 6 are supported")]
    TooManyEntries(String, usize),
    #[error("element {0} is not a sign change of the base element")]
    PatternMismatch(String),
    #[error("assignment has {0} elements, basis has {1}")]
    LengthMismatch(usize, usize),
}

/// Per element, one sign per nonzero entry of the base matrix (row-major),
/// `+1` keeping the base sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignAssignment {
    pub flips: Vec<Vec<i8>>,
}

impl SignAssignment {
    pub fn identity(base: &GradedBasis) -> Self {
        SignAssignment {
            flips: base
                .elements
                .iter()
                .map(|e| vec![1; e.matrix.nonzero_entries().len()])
                .collect(),
        }
    }

    fn from_masks(base: &GradedBasis, masks: &[u32]) -> Self {
        SignAssignment {
            flips: base
                .elements
                .iter()
                .zip(masks)
                .map(|(e, &m)| {
                    (0..e.matrix.nonzero_entries().len())
                        .map(|k| if m >> k & 1 == 1 { -1 } else { 1 })
                        .collect()
                })
                .collect(),
        }
    }

    /// Reads off the flips turning `base` into `colored`.
    pub fn from_bases(base: &GradedBasis, colored: &GradedBasis) -> Result<Self, SearchError> {
        if base.len() != colored.len() {
            return Err(SearchError::LengthMismatch(colored.len(), base.len()));
        }
        let flips = base
            .elements
            .iter()
            .zip(&colored.elements)
            .map(|(b, c)| {
                if !b.matrix.same_pattern_up_to_sign(&c.matrix) {
                    return Err(SearchError::PatternMismatch(c.label.clone()));
                }
                Ok(b.matrix
                    .nonzero_entries()
                    .into_iter()
                    .map(|(r, col, v)| if c.matrix.get(r, col) == v { 1 } else { -1 })
                    .collect())
            })
            .collect::<Result<_, _>>()?;
        Ok(SignAssignment { flips })
    }

    /// The flipped basis, in exact arithmetic.
    pub fn apply(&self, base: &GradedBasis, name: &str) -> Result<GradedBasis, SearchError> {
        if self.flips.len() != base.len() {
            return Err(SearchError::LengthMismatch(self.flips.len(), base.len()));
        }
        let mats = base
            .elements
            .iter()
            .zip(&self.flips)
            .map(|(e, signs)| {
                let mut m = e.matrix.clone();
                for ((r, c, v), &s) in e.matrix.nonzero_entries().into_iter().zip(signs) {
                    if s == -1 {
                        m.set(r, c, -v);
                    }
                }
                m
            })
            .collect();
        Ok(base.with_matrices(name, mats)?)
    }

    /// True iff every element's first sign is `+1`.
    pub fn is_canonical(&self) -> bool {
        self.flips.iter().all(|f| f.first().is_none_or(|&s| s == 1))
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.flips.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let s: String = row
                .iter()
                .map(|&x| if x == 1 { '+' } else { '-' })
                .collect();
            f.write_str(&s)?;
        }
        Ok(())
    }
}

/// A coloring with its structure constants and the signs `ε_ijk`.
#[derive(Debug, Clone)]
pub struct ColoringSolution {
    pub base: Arc<GradedBasis>,
    pub sign_factor: SignFactor,
    pub assignment: SignAssignment,
    pub table: BracketTable,
    /// `ε_ijk` for `i ≤ j` and every `k` with `c_ij^k ≠ 0`.
    pub epsilon: BTreeMap<(usize, usize, usize), i8>,
}

impl PartialEq for ColoringSolution {
    fn eq(&self, other: &Self) -> bool {
        self.base.name == other.base.name
            && self.sign_factor == other.sign_factor
            && self.assignment == other.assignment
            && self.epsilon == other.epsilon
    }
}

impl ColoringSolution {
    pub fn basis(&self) -> Result<GradedBasis, SearchError> {
        self.assignment
            .apply(&self.base, &format!("{} colored", self.base.name))
    }
}

/// Flips whole elements so that each first sign is `+1`; `ε` and the table
/// change by the product of the flips involved.
pub fn canonicalize(sol: &ColoringSolution) -> ColoringSolution {
    let s: Vec<i8> = sol
        .assignment
        .flips
        .iter()
        .map(|f| f.first().copied().unwrap_or(1))
        .collect();
    let flips = sol
        .assignment
        .flips
        .iter()
        .zip(&s)
        .map(|(f, &g)| f.iter().map(|&x| x * g).collect())
        .collect();
    let epsilon = sol
        .epsilon
        .iter()
        .map(|(&(i, j, k), &e)| ((i, j, k), e * s[i] * s[j] * s[k]))
        .collect();
    let mut table = sol.table.clone();
    for e in &mut table.entries {
        for (k, c) in &mut e.terms {
            if s[e.left] * s[e.right] * s[*k] == -1 {
                *c = -&*c;
            }
        }
    }
    ColoringSolution {
        base: Arc::clone(&sol.base),
        sign_factor: sol.sign_factor,
        assignment: SignAssignment { flips },
        table,
        epsilon,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Restrict each element's first sign to `+1`.
    pub gauge_fix: bool,
    pub max_solutions: Option<usize>,
    /// Elements allowed to change; the others keep the base signs. `None`
    /// frees every non-diagonal element.
    pub free: Option<Vec<usize>>,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            gauge_fix: true,
            max_solutions: None,
            free: None,
            execution: Execution::default(),
        }
    }
}

/// Counters from one search run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub solutions: u64,
}

/// All colorings of `base` for the factor `δ`, in deterministic DFS order.
pub fn search_colorings(
    delta: &SignFactor,
    base: &GradedBasis,
    gauge_fix: bool,
) -> Result<Vec<ColoringSolution>, SearchError> {
    let opts = SearchOptions {
        gauge_fix,
        ..SearchOptions::default()
    };
    Ok(search_with(delta, base, &opts)?.0)
}

pub fn search_with(
    delta: &SignFactor,
    base: &GradedBasis,
    opts: &SearchOptions,
) -> Result<(Vec<ColoringSolution>, SearchStats), SearchError> {
    let engine = Engine::new(delta, base, opts)?;
    let (masks, stats) = engine.run(opts.max_solutions, opts.execution);
    let base = Arc::new(base.clone());
    let solutions = masks.iter().map(|m| engine.solution(&base, m)).collect();
    Ok((solutions, stats))
}

/// Re-derives the table of a solution from its exact matrices and checks
/// graded antisymmetry, the graded Jacobi identity, closure, and that every
/// coefficient equals the uncolored one up to sign.
pub fn verify_solution(
    sol: &ColoringSolution,
    delta: &SignFactor,
) -> Result<VerificationReport, SearchError> {
    let colored = sol.basis()?;
    let n = colored.len();
    let mut report = VerificationReport::new(format!("solution {} / {}", sol.base.name, delta));
    let uncolored = structure_constants_with(
        &sol.base,
        &SignFactor::zero(sol.base.group_dim),
        false,
        Execution::default(),
    )?;
    let computer = match crate::algebra::BracketComputer::new(&colored, delta) {
        Ok(c) => c,
        Err(e) => {
            report.check(Some(Failure::new(
                "bracket setup",
                "compatible sign factor",
                e,
            )));
            return Ok(report);
        }
    };
    let mut entries: BTreeMap<(usize, usize), BracketEntry> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let ctx = format!(
                "({},{})",
                colored.elements[i].label, colored.elements[j].label
            );
            match computer.entry(i, j) {
                Ok(e) => {
                    entries.insert((i, j), e);
                    report.check(None);
                }
                Err(e) => report.check(Some(Failure::new(ctx, "closure", e))),
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (Some(x), Some(y)) = (entries.get(&(i, j)), entries.get(&(j, i))) else {
                continue;
            };
            // ⟦y,x⟧ = −(−1)^⟨α,β⟩ ⟦x,y⟧
            let s = -(x.kind.sign() as i64);
            let ok = x.terms.len() == y.terms.len()
                && x.terms
                    .iter()
                    .all(|(k, c)| y.coeff(*k) == c * &Scalar::from_int(s));
            let ctx = format!(
                "symmetry ({},{})",
                colored.elements[i].label, colored.elements[j].label
            );
            report.check((!ok).then(|| Failure::new(ctx, "graded antisymmetry", "violated")));
            if i <= j {
                let want: Vec<(usize, Scalar)> = if i == j {
                    Vec::new()
                } else {
                    uncolored.get(i, j).expect("i < j entry").terms.clone()
                };
                let ok = x.terms.len() == want.len()
                    && want.iter().all(|(k, c)| {
                        let got = x.coeff(*k);
                        got == *c || got == -c
                    });
                let ctx = format!(
                    "compatibility ({},{})",
                    colored.elements[i].label, colored.elements[j].label
                );
                report.check((!ok).then(|| {
                    Failure::new(
                        ctx,
                        crate::algebra::render_combination(&want, |k| {
                            colored.elements[k].label.clone()
                        }),
                        crate::algebra::render_combination(&x.terms, |k| {
                            colored.elements[k].label.clone()
                        }),
                    )
                }));
            }
        }
    }
    let jac = verify_jacobi_basis(&colored, delta, Execution::default())?;
    report.checks_run += jac.checks_run;
    report.failures.extend(jac.failures);
    Ok(report)
}

type Zi = [i64; 4];

fn zmul(x: Zi, y: Zi) -> Zi {
    let [a, b, c, d] = x;
    let [e, f, g, h] = y;
    [
        a * e - b * f + 2 * c * g - 2 * d * h,
        a * f + b * e + 2 * (c * h + d * g),
        a * g + c * e - (b * h + d * f),
        a * h + d * e + b * g + c * f,
    ]
}

fn zadd(x: &mut Zi, y: Zi, sign: i64) {
    for (a, b) in x.iter_mut().zip(y) {
        *a += sign * b;
    }
}

fn to_zi(s: &Scalar) -> Option<Zi> {
    s.as_int_components()
}

fn from_zi(z: Zi) -> Scalar {
    Scalar::from_ints(z[0], z[1], z[2], z[3])
}

type Sparse = Vec<(usize, usize, Zi)>;

struct Pair {
    i: usize,
    j: usize,
    sign: i64,
    targets: Vec<(usize, Zi)>,
}

struct Engine {
    delta: SignFactor,
    n: usize,
    dim: usize,
    /// `cands[e][mask]`
    cands: Vec<Vec<Sparse>>,
    full: Vec<u32>,
    pairs: Vec<Pair>,
    initial: Vec<u64>,
}

const TUPLE_LIMIT: usize = 1 << 12;

#[derive(Clone)]
struct State {
    dom: Vec<u64>,
    done: Vec<bool>,
}

impl Engine {
    fn new(
        delta: &SignFactor,
        base: &GradedBasis,
        opts: &SearchOptions,
    ) -> Result<Self, SearchError> {
        if delta.n() != base.group_dim {
            return Err(SearchError::GroupMismatch(delta.n(), base.group_dim));
        }
        let n = base.len();
        let dim = base.elements.first().map_or(0, |e| e.matrix.dim());
        let uncolored = structure_constants_with(
            base,
            &SignFactor::zero(base.group_dim),
            false,
            opts.execution,
        )?;
        let mut cands = Vec::with_capacity(n);
        let mut full = Vec::with_capacity(n);
        let mut initial = Vec::with_capacity(n);
        for (idx, e) in base.elements.iter().enumerate() {
            let nz = e.matrix.nonzero_entries();
            if nz.len() > 6 {
                return Err(SearchError::TooManyEntries(e.label.clone(), nz.len()));
            }
            let entries: Vec<(usize, usize, Zi)> = nz
                .iter()
                .map(|&(r, c, v)| {
                    to_zi(v)
                        .map(|z| (r, c, z))
                        .ok_or_else(|| SearchError::NotIntegral(e.label.clone()))
                })
                .collect::<Result<_, _>>()?;
            let count = 1u32 << nz.len();
            cands.push(
                (0..count)
                    .map(|m| {
                        entries
                            .iter()
                            .enumerate()
                            .map(|(k, &(r, c, z))| {
                                (r, c, if m >> k & 1 == 1 { z.map(|x| -x) } else { z })
                            })
                            .collect()
                    })
                    .collect(),
            );
            full.push(count - 1);
            let free = match &opts.free {
                Some(list) => list.contains(&idx),
                None => nz.iter().any(|&(r, c, _)| r != c),
            };
            let dom: u64 = if !free {
                1
            } else {
                (0..count as u64)
                    .filter(|m| !opts.gauge_fix || m & 1 == 0)
                    .fold(0, |acc, m| acc | 1 << m)
            };
            initial.push(dom);
        }
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                let (a, b) = (base.elements[i].degree, base.elements[j].degree);
                let sign = if delta.eval_bits(a.bits(), b.bits()) == 0 {
                    1
                } else {
                    -1
                };
                let targets = if i == j {
                    Vec::new()
                } else {
                    uncolored
                        .get(i, j)
                        .expect("i < j entry")
                        .terms
                        .iter()
                        .map(|(k, c)| {
                            to_zi(c)
                                .map(|z| (*k, z))
                                .ok_or_else(|| SearchError::NotIntegral(base.name.clone()))
                        })
                        .collect::<Result<_, _>>()?
                };
                pairs.push(Pair {
                    i,
                    j,
                    sign,
                    targets,
                });
            }
        }
        Ok(Engine {
            delta: *delta,
            n,
            dim,
            cands,
            full,
            pairs,
            initial,
        })
    }

    fn bracket(&self, x: &Sparse, y: &Sparse, sign: i64) -> Vec<Zi> {
        let mut out = vec![[0i64; 4]; self.dim * self.dim];
        for &(r, k, a) in x {
            for &(k2, c, b) in y {
                if k == k2 {
                    zadd(&mut out[r * self.dim + c], zmul(a, b), 1);
                }
            }
        }
        for &(r, k, a) in y {
            for &(k2, c, b) in x {
                if k == k2 {
                    zadd(&mut out[r * self.dim + c], zmul(a, b), -sign);
                }
            }
        }
        out
    }

    fn single(dom: u64) -> Option<u32> {
        (dom.count_ones() == 1).then(|| dom.trailing_zeros())
    }

    /// Options for a target: its domain, each pattern also negated (ε = −1).
    fn options(&self, t: usize, dom: u64) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for m in 0..64u32 {
            if dom >> m & 1 == 1 {
                out.push((m, m));
                out.push((m ^ self.full[t], m));
            }
        }
        out
    }

    /// Restricts target domains by one bracket. `None` on contradiction,
    /// otherwise whether the pair is fully decided.
    fn apply_pair(&self, p: &Pair, st: &mut State, changed: &mut bool) -> Option<bool> {
        let (mi, mj) = (Self::single(st.dom[p.i])?, Self::single(st.dom[p.j])?);
        let r = self.bracket(
            &self.cands[p.i][mi as usize],
            &self.cands[p.j][mj as usize],
            p.sign,
        );
        if p.targets.is_empty() {
            return r.iter().all(|z| *z == [0; 4]).then_some(true);
        }
        let opts: Vec<Vec<(u32, u32)>> = p
            .targets
            .iter()
            .map(|&(t, _)| self.options(t, st.dom[t]))
            .collect();
        let total = opts
            .iter()
            .try_fold(1usize, |acc, o| acc.checked_mul(o.len()))?;
        if total > TUPLE_LIMIT {
            return Some(false);
        }
        let mut support = vec![0u64; p.targets.len()];
        let mut found = false;
        let mut idx = vec![0usize; p.targets.len()];
        loop {
            let mut acc = r.clone();
            for (slot, (&(t, c), o)) in idx.iter().zip(p.targets.iter().zip(&opts)) {
                for &(row, col, z) in &self.cands[t][o[*slot].0 as usize] {
                    zadd(&mut acc[row * self.dim + col], zmul(c, z), -1);
                }
            }
            if acc.iter().all(|z| *z == [0; 4]) {
                found = true;
                for (k, (slot, o)) in idx.iter().zip(&opts).enumerate() {
                    support[k] |= 1 << o[*slot].1;
                }
            }
            // odometer
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < opts[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        if !found {
            return None;
        }
        let mut decided = true;
        for (k, &(t, _)) in p.targets.iter().enumerate() {
            // a target repeated in the list keeps the intersection of supports
            let nd = st.dom[t] & support[k];
            if nd != st.dom[t] {
                st.dom[t] = nd;
                *changed = true;
            }
            if nd == 0 {
                return None;
            }
            decided &= nd.count_ones() == 1;
        }
        Some(decided)
    }

    fn propagate(&self, st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for (k, p) in self.pairs.iter().enumerate() {
                if st.done[k]
                    || Self::single(st.dom[p.i]).is_none()
                    || Self::single(st.dom[p.j]).is_none()
                {
                    continue;
                }
                match self.apply_pair(p, st, &mut changed) {
                    None => return false,
                    Some(true) => st.done[k] = true,
                    Some(false) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn root(&self) -> Option<State> {
        let mut st = State {
            dom: self.initial.clone(),
            done: vec![false; self.pairs.len()],
        };
        // self-brackets depend on one element only
        for p in self.pairs.iter().filter(|p| p.i == p.j) {
            let mut keep = 0u64;
            for m in 0..64u32 {
                if st.dom[p.i] >> m & 1 == 1 {
                    let c = &self.cands[p.i][m as usize];
                    if self.bracket(c, c, p.sign).iter().all(|z| *z == [0; 4]) {
                        keep |= 1 << m;
                    }
                }
            }
            if keep == 0 {
                return None;
            }
            st.dom[p.i] = keep;
        }
        self.propagate(&mut st).then_some(st)
    }

    fn branch_var(&self, st: &State) -> Option<usize> {
        (0..self.n)
            .filter(|&e| st.dom[e].count_ones() > 1)
            .min_by_key(|&e| (st.dom[e].count_ones(), e))
    }

    fn dfs(
        &self,
        st: State,
        limit: Option<usize>,
        out: &mut Vec<Vec<u32>>,
        stats: &mut SearchStats,
    ) {
        stats.nodes += 1;
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let Some(v) = self.branch_var(&st) else {
            // every pair is decided once all domains are singletons
            out.push(st.dom.iter().map(|d| d.trailing_zeros()).collect());
            stats.solutions += 1;
            return;
        };
        for m in 0..64u32 {
            if st.dom[v] >> m & 1 == 0 {
                continue;
            }
            let mut child = st.clone();
            child.dom[v] = 1 << m;
            if self.propagate(&mut child) {
                self.dfs(child, limit, out, stats);
            }
        }
    }

    fn run(&self, limit: Option<usize>, execution: Execution) -> (Vec<Vec<u32>>, SearchStats) {
        let mut stats = SearchStats::default();
        let Some(root) = self.root() else {
            stats.nodes = 1;
            return (Vec::new(), stats);
        };
        let Some(v) = self.branch_var(&root) else {
            stats.nodes = 1;
            stats.solutions = 1;
            return (
                vec![root.dom.iter().map(|d| d.trailing_zeros()).collect()],
                stats,
            );
        };
        let children: Vec<u32> = (0..64u32).filter(|m| root.dom[v] >> m & 1 == 1).collect();
        let results = exec::map(execution, &children, |&m| {
            let mut child = root.clone();
            child.dom[v] = 1 << m;
            let mut out = Vec::new();
            let mut st = SearchStats::default();
            if self.propagate(&mut child) {
                self.dfs(child, limit, &mut out, &mut st);
            } else {
                st.nodes = 1;
            }
            (out, st)
        });
        let mut all = Vec::new();
        stats.nodes = 1;
        for (out, st) in results {
            stats.nodes += st.nodes;
            all.extend(out);
        }
        if let Some(l) = limit {
            all.truncate(l);
        }
        stats.solutions = all.len() as u64;
        (all, stats)
    }

    fn solution(&self, base: &Arc<GradedBasis>, masks: &[u32]) -> ColoringSolution {
        let mut epsilon = BTreeMap::new();
        let mut entries = Vec::new();
        for p in &self.pairs {
            let r = self.bracket(
                &self.cands[p.i][masks[p.i] as usize],
                &self.cands[p.j][masks[p.j] as usize],
                p.sign,
            );
            let signs = (0..1u32 << p.targets.len())
                .find(|bits| {
                    let mut acc = r.clone();
                    for (k, &(t, c)) in p.targets.iter().enumerate() {
                        let s = if bits >> k & 1 == 1 { 1 } else { -1 };
                        for &(row, col, z) in &self.cands[t][masks[t] as usize] {
                            zadd(&mut acc[row * self.dim + col], zmul(c, z), s);
                        }
                    }
                    acc.iter().all(|z| *z == [0; 4])
                })
                .expect("accepted assignment satisfies every bracket");
            let mut terms = Vec::new();
            for (k, &(t, c)) in p.targets.iter().enumerate() {
                let e: i8 = if signs >> k & 1 == 1 { -1 } else { 1 };
                epsilon.insert((p.i, p.j, t), e);
                terms.push((t, from_zi(c.map(|x| x * e as i64))));
            }
            terms.sort_by_key(|t| t.0);
            if p.i < p.j {
                entries.push(BracketEntry {
                    left: p.i,
                    right: p.j,
                    kind: BracketKind::from_sign(p.sign as i8),
                    terms,
                });
            }
        }
        ColoringSolution {
            base: Arc::clone(base),
            sign_factor: self.delta,
            assignment: SignAssignment::from_masks(base, masks),
            table: BracketTable {
                basis_name: format!("{} colored", base.name),
                sign_factor: self.delta,
                labels: base.labels(),
                degrees: base.elements.iter().map(|e| e.degree).collect(),
                entries,
            },
            epsilon,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_basis;

    #[test]
    fn ring_products() {
        let i = [0, 1, 0, 0];
        let r2 = [0, 0, 1, 0];
        let ir2 = [0, 0, 0, 1];
        assert_eq!(zmul(i, i), [-1, 0, 0, 0]);
        assert_eq!(zmul(r2, r2), [2, 0, 0, 0]);
        assert_eq!(zmul(ir2, ir2), [-2, 0, 0, 0]);
        assert_eq!(zmul(i, ir2), [0, 0, -1, 0]);
        assert_eq!(zmul(r2, ir2), [0, 2, 0, 0]);
        assert_eq!(zmul(i, r2), ir2);
    }

    #[test]
    fn zero_factor_contains_identity() {
        let g2 = build_basis("g2").unwrap();
        let sols = search_colorings(&SignFactor::zero(3), &g2, true).unwrap();
        let id = SignAssignment::identity(&g2);
        assert!(sols.iter().any(|s| s.assignment == id));
        for s in &sols {
            assert!(s.assignment.is_canonical());
        }
    }

    #[test]
    fn identity_factor_is_empty() {
        let g2 = build_basis("g2").unwrap();
        assert!(search_colorings(&SignFactor::identity(3), &g2, true)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn assignment_round_trip() {
        let g2 = build_basis("g2").unwrap();
        let c1 = build_basis("color-case1").unwrap();
        let a = SignAssignment::from_bases(&g2, &c1).unwrap();
        assert_eq!(a.apply(&g2, "x").unwrap().matrices(), c1.matrices());
        assert!(SignAssignment::from_bases(&g2, &build_basis("so7").unwrap()).is_err());
    }
}
