//! Grading groups Z2^n, the dot pairing, sign factors and their classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("grade labels of different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("unsupported group dimension {0}")]
    UnsupportedDim(usize),
    #[error("invalid grade label {0:?}")]
    BadLabel(String),
    #[error("invalid sign factor spec {0:?}")]
    BadSignFactor(String),
    #[error("sign factor classification names exist only for n = 3 (got n = {0})")]
    NotRankThree(usize),
}

/// Element of Z2^n (n = 2 or 3) written as the bit string `α1α2…αn`.
///
/// Bit `k` of `bits` holds `α_{k+1}`, so for n = 3 the numeric value of
/// `bits` is exactly the row/column position in the order
/// `000 100 010 110 001 101 011 111`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeLabel {
    bits: u8,
    n: u8,
}

impl GradeLabel {
    pub fn new(bits: u8, n: usize) -> Result<Self, GradingError> {
        if !(2..=3).contains(&n) {
            return Err(GradingError::UnsupportedDim(n));
        }
        if bits >> n != 0 {
            return Err(GradingError::BadLabel(format!("{bits:#b}")));
        }
        Ok(GradeLabel { bits, n: n as u8 })
    }

    pub(crate) const fn raw(bits: u8, n: u8) -> Self {
        GradeLabel { bits, n }
    }

    pub fn zero(n: usize) -> Result<Self, GradingError> {
        GradeLabel::new(0, n)
    }

    /// All 2^n elements in position order (`000, 100, 010, …`).
    pub fn all(n: usize) -> Result<Vec<Self>, GradingError> {
        (0..1u8 << n).map(|b| GradeLabel::new(b, n)).collect()
    }

    /// The nonzero elements Γ*.
    pub fn nonzero(n: usize) -> Result<Vec<Self>, GradingError> {
        Ok(GradeLabel::all(n)?
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect())
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    /// Position in the `000 100 010 110 …` ordering.
    pub fn index(self) -> usize {
        self.bits as usize
    }

    /// `α_{k+1}` for `k` in `0..n`.
    pub fn bit(self, k: usize) -> u8 {
        (self.bits >> k) & 1
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn check(self, other: Self) -> Result<(), GradingError> {
        if self.n != other.n {
            Err(GradingError::LengthMismatch(self.n(), other.n()))
        } else {
            Ok(())
        }
    }

    /// Component-wise addition mod 2.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Result<Self, GradingError> {
        self.check(other)?;
        Ok(GradeLabel {
            bits: self.bits ^ other.bits,
            n: self.n,
        })
    }

    /// Addition for labels already known to share a length.
    pub(crate) fn plus(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        GradeLabel {
            bits: self.bits ^ other.bits,
            n: self.n,
        }
    }

    /// `(α|β) = Σ α_k β_k mod 2`.
    pub fn pairing(self, other: Self) -> Result<u8, GradingError> {
        self.check(other)?;
        Ok(self.dot(other))
    }

    pub(crate) fn dot(self, other: Self) -> u8 {
        ((self.bits & other.bits).count_ones() & 1) as u8
    }
}

impl fmt::Display for GradeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.n() {
            write!(f, "{}", self.bit(k))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GradeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GradeLabel {
    type Err = GradingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut bits = 0u8;
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return Err(GradingError::BadLabel(s.to_string())),
            }
        }
        GradeLabel::new(bits, s.len()).map_err(|_| GradingError::BadLabel(s.to_string()))
    }
}

impl Serialize for GradeLabel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GradeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the crate and its tests: `g("110")`.
/// Panics on a malformed literal.
pub fn g(s: &str) -> GradeLabel {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

/// Symmetric bilinear form `⟨α,β⟩ = αᵀDβ mod 2` on Z2^n.
///
/// Row `i` of `D` is stored as a bitmask in `rows[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignFactor {
    n: u8,
    rows: [u8; 4],
}

/// Named presets accepted by [`SignFactor::parse`].
pub const PRESETS: &[&str] = &["zero", "case1", "case2", "case3", "z2z2", "identity"];

impl SignFactor {
    pub fn zero(n: usize) -> Self {
        assert!((1..=4).contains(&n), "sign factors support 1 <= n <= 4");
        SignFactor {
            n: n as u8,
            rows: [0; 4],
        }
    }

    /// The form with `D_ij = D_ji = 1` for the listed (0-based) pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut sf = SignFactor::zero(n);
        for &(i, j) in pairs {
            assert!(i < n && j < n);
            sf.rows[i] |= 1 << j;
            sf.rows[j] |= 1 << i;
        }
        sf
    }

    /// `α1β2 + α2β1`.
    pub fn case1() -> Self {
        SignFactor::from_pairs(3, &[(0, 1)])
    }

    /// `α1β3 + α3β1`.
    pub fn case2() -> Self {
        SignFactor::from_pairs(3, &[(0, 2)])
    }

    /// `α2β3 + α3β2`.
    pub fn case3() -> Self {
        SignFactor::from_pairs(3, &[(1, 2)])
    }

    /// `α1β2 + α2β1` on Z2^2.
    pub fn z2z2() -> Self {
        SignFactor::from_pairs(2, &[(0, 1)])
    }

    pub fn identity(n: usize) -> Self {
        SignFactor::from_pairs(n, &(0..n).map(|i| (i, i)).collect::<Vec<_>>())
    }

    /// Builds a factor from the upper triangle `d11,d12,…,d1n,d22,…,dnn`.
    pub fn from_upper_triangle(n: usize, bits: &[u8]) -> Result<Self, GradingError> {
        if !(1..=4).contains(&n) || bits.len() != n * (n + 1) / 2 {
            return Err(GradingError::BadSignFactor(format!("{bits:?}")));
        }
        let mut sf = SignFactor::zero(n);
        let mut it = bits.iter();
        for i in 0..n {
            for j in i..n {
                match it.next() {
                    Some(1) => {
                        sf.rows[i] |= 1 << j;
                        sf.rows[j] |= 1 << i;
                    }
                    Some(0) => {}
                    _ => return Err(GradingError::BadSignFactor(format!("{bits:?}"))),
                }
            }
        }
        Ok(sf)
    }

    pub fn upper_triangle(&self) -> Vec<u8> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                out.push(self.entry(i, j));
            }
        }
        out
    }

    /// Parses a preset name or comma-separated upper-triangle bits.
    /// `default_n` decides the dimension of the `zero` and `identity` presets.
    pub fn parse(spec: &str, default_n: usize) -> Result<Self, GradingError> {
        let bad = || GradingError::BadSignFactor(spec.to_string());
        match spec.trim() {
            "zero" => Ok(SignFactor::zero(default_n)),
            "identity" => Ok(SignFactor::identity(default_n)),
            "case1" => Ok(SignFactor::case1()),
            "case2" => Ok(SignFactor::case2()),
            "case3" => Ok(SignFactor::case3()),
            "z2z2" => Ok(SignFactor::z2z2()),
            other => {
                let bits = other
                    .split(',')
                    .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                let n = (1..=4)
                    .find(|n| n * (n + 1) / 2 == bits.len())
                    .ok_or_else(bad)?;
                SignFactor::from_upper_triangle(n, &bits).map_err(|_| bad())
            }
        }
    }

    /// Preset name when the factor matches one, otherwise the upper-triangle bits.
    pub fn spec(&self) -> String {
        let named = [
            (SignFactor::case1(), "case1"),
            (SignFactor::case2(), "case2"),
            (SignFactor::case3(), "case3"),
            (SignFactor::z2z2(), "z2z2"),
        ];
        if self.is_zero() {
            return "zero".into();
        }
        if let Some((_, name)) = named.iter().find(|(sf, _)| sf == self) {
            return (*name).into();
        }
        self.upper_triangle()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j) & 1
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// `αᵀDβ mod 2`.
    pub fn eval(&self, a: GradeLabel, b: GradeLabel) -> Result<u8, GradingError> {
        if a.n() != self.n() {
            return Err(GradingError::LengthMismatch(a.n(), self.n()));
        }
        if b.n() != self.n() {
            return Err(GradingError::LengthMismatch(b.n(), self.n()));
        }
        Ok(self.eval_bits(a.bits(), b.bits()))
    }

    pub(crate) fn eval_bits(&self, a: u8, b: u8) -> u8 {
        let mut acc = 0u8;
        for i in 0..self.n() {
            if (a >> i) & 1 == 1 {
                acc ^= ((self.rows[i] & b).count_ones() & 1) as u8;
            }
        }
        acc
    }

    /// `(-1)^⟨α,β⟩`: `+1` selects the commutator, `-1` the anticommutator.
    pub fn commutation_sign(&self, a: GradeLabel, b: GradeLabel) -> Result<i8, GradingError> {
        Ok(if self.eval(a, b)? == 0 { 1 } else { -1 })
    }

    /// True iff `⟨α,α⟩ = 0` for every α, i.e. the diagonal of `D` vanishes.
    pub fn is_lie_type(&self) -> bool {
        (0..self.n()).all(|i| self.entry(i, i) == 0)
    }

    /// Rank of `D` over Z2.
    pub fn rank(&self) -> usize {
        bit_rank(&self.rows[..self.n()])
    }

    /// `gᵀ D g` where `g` is given by its rows as bitmasks.
    pub fn congruent(&self, g: &[u8]) -> SignFactor {
        let n = self.n();
        let mut out = SignFactor::zero(n);
        for i in 0..n {
            for j in 0..n {
                // (gᵀDg)_ij = Σ_kl g_ki D_kl g_lj
                let col_i: u8 = (0..n).map(|k| ((g[k] >> i) & 1) << k).sum();
                let col_j: u8 = (0..n).map(|l| ((g[l] >> j) & 1) << l).sum();
                if self.eval_bits(col_i, col_j) == 1 {
                    out.rows[i] |= 1 << j;
                }
            }
        }
        out
    }
}

impl fmt::Display for SignFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl fmt::Debug for SignFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignFactor(n={}, {})", self.n, self.spec())
    }
}

fn bit_rank(rows: &[u8]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..8 {
        let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> bit) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// All `2^(n(n+1)/2)` symmetric bit matrices, ordered by their upper triangle
/// read as a binary number (`d11` most significant).
pub fn enumerate_sign_factors(n: usize) -> Vec<SignFactor> {
    assert!((1..=4).contains(&n), "sign factors support 1 <= n <= 4");
    let m = n * (n + 1) / 2;
    (0..1u32 << m)
        .map(|code| {
            let bits: Vec<u8> = (0..m).map(|k| ((code >> (m - 1 - k)) & 1) as u8).collect();
            SignFactor::from_upper_triangle(n, &bits).expect("valid length")
        })
        .collect()
}

/// All invertible n×n matrices over Z2, rows as bitmasks.
pub fn general_linear_group(n: usize) -> Vec<Vec<u8>> {
    assert!((1..=4).contains(&n));
    let mut out = Vec::new();
    let total = 1u32 << (n * n);
    for code in 0..total {
        let rows: Vec<u8> = (0..n)
            .map(|r| ((code >> (r * n)) & ((1 << n) - 1)) as u8)
            .collect();
        if bit_rank(&rows) == n {
            out.push(rows);
        }
    }
    out
}

/// Congruence invariants of a sign factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignFactorClass {
    pub rank: usize,
    pub alternating: bool,
    /// `3_1 … 3_5` for n = 3.
    pub class_name: Option<String>,
}

/// Invariants `(rank, alternating)`, which determine the congruence class of
/// a symmetric form over Z2. For n = 3 the classes are named
/// `3_1` (zero), `3_2` (alternating, rank 2) and `3_3`, `3_4`, `3_5` for the
/// non-alternating forms of rank 1, 2, 3.
pub fn invariants(sf: &SignFactor) -> SignFactorClass {
    let rank = sf.rank();
    let alternating = sf.is_lie_type();
    let class_name = (sf.n() == 3).then(|| {
        match (rank, alternating) {
            (0, _) => "3_1",
            (2, true) => "3_2",
            (1, false) => "3_3",
            (2, false) => "3_4",
            (3, false) => "3_5",
            _ => unreachable!("alternating forms over Z2 have even rank"),
        }
        .to_string()
    });
    SignFactorClass {
        rank,
        alternating,
        class_name,
    }
}

/// Classifies a sign factor on Z2^3.
pub fn classify_sign_factor(sf: &SignFactor) -> Result<SignFactorClass, GradingError> {
    if sf.n() != 3 {
        return Err(GradingError::NotRankThree(sf.n()));
    }
    Ok(invariants(sf))
}

/// Orbits of all sign factors on Z2^n under congruence by GL(n, Z2),
/// computed by exhaustive action. Each orbit is sorted; orbits are ordered by
/// their smallest member.
pub fn congruence_orbits(n: usize) -> Vec<Vec<SignFactor>> {
    let group = general_linear_group(n);
    let all = enumerate_sign_factors(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut orbits = Vec::new();
    for sf in &all {
        if seen.contains(sf) {
            continue;
        }
        let orbit: std::collections::BTreeSet<SignFactor> =
            group.iter().map(|g| sf.congruent(g)).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    orbits.sort_by_key(|o| o[0]);
    orbits
}

fn triangle(sf: &SignFactor) -> String {
    sf.upper_triangle()
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One congruence orbit with its invariants. Factors are written as their
/// upper-triangle bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceClass {
    pub class: SignFactorClass,
    pub size: usize,
    pub representative: String,
    pub members: Vec<String>,
}

/// Orbits from [`congruence_orbits`] with their invariants, plus whether the
/// invariants agree with the orbits: constant on each orbit and distinct
/// between orbits.
pub fn congruence_classes(n: usize) -> (Vec<CongruenceClass>, bool) {
    let orbits = congruence_orbits(n);
    let mut consistent = true;
    let mut seen = Vec::new();
    let mut classes: Vec<CongruenceClass> = orbits
        .iter()
        .map(|orbit| {
            let class = invariants(&orbit[0]);
            consistent &= orbit.iter().all(|sf| invariants(sf) == class);
            consistent &= !seen.contains(&class);
            seen.push(class.clone());
            CongruenceClass {
                class,
                size: orbit.len(),
                representative: triangle(&orbit[0]),
                members: orbit.iter().map(triangle).collect(),
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (&a.class.class_name, a.class.rank, !a.class.alternating).cmp(&(
            &b.class.class_name,
            b.class.rank,
            !b.class.alternating,
        ))
    });
    (classes, consistent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert_eq!(g("110").add(g("011")).unwrap(), g("101"));
        for a in GradeLabel::all(3).unwrap() {
            assert!(a.add(a).unwrap().is_zero());
            assert_eq!(a.add(g("000")).unwrap(), a);
        }
        assert!(g("10").add(g("100")).is_err());
    }

    #[test]
    fn group_axioms_exhaustive() {
        for n in 2..=3 {
            let all = GradeLabel::all(n).unwrap();
            for &a in &all {
                for &b in &all {
                    assert_eq!(a.add(b), b.add(a));
                    for &c in &all {
                        assert_eq!(a.plus(b).plus(c), a.plus(b.plus(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(g("110").pairing(g("111")).unwrap(), 0);
        assert_eq!(g("100").pairing(g("100")).unwrap(), 1);
        for a in GradeLabel::all(3).unwrap() {
            assert_eq!(a.pairing(g("000")).unwrap(), 0);
        }
    }

    #[test]
    fn labels_parse_and_print() {
        assert_eq!(g("110").to_string(), "110");
        assert_eq!(g("110").index(), 3);
        assert_eq!(g("001").index(), 4);
        assert!("1a0".parse::<GradeLabel>().is_err());
        assert!("1".parse::<GradeLabel>().is_err());
    }

    #[test]
    fn sign_factor_examples() {
        assert_eq!(SignFactor::case1().eval(g("100"), g("010")).unwrap(), 1);
        assert_eq!(SignFactor::case3().eval(g("010"), g("001")).unwrap(), 1);
        for a in GradeLabel::all(3).unwrap() {
            for sf in enumerate_sign_factors(3) {
                assert_eq!(sf.eval(a, g("000")).unwrap(), 0);
            }
        }
        assert!(SignFactor::case1().eval(g("10"), g("01")).is_err());
    }

    #[test]
    fn commutation_sign_examples() {
        let z = SignFactor::zero(3);
        assert_eq!(z.commutation_sign(g("101"), g("111")).unwrap(), 1);
        assert_eq!(
            SignFactor::case1()
                .commutation_sign(g("100"), g("010"))
                .unwrap(),
            -1
        );
        assert_eq!(
            SignFactor::case1()
                .commutation_sign(g("100"), g("001"))
                .unwrap(),
            1
        );
    }

    #[test]
    fn symmetric_and_biadditive_exhaustive() {
        let all = GradeLabel::all(3).unwrap();
        for sf in enumerate_sign_factors(3) {
            for &a in &all {
                for &b in &all {
                    assert_eq!(sf.eval(a, b), sf.eval(b, a));
                    for &c in &all {
                        let lhs = sf.eval(a, b.plus(c)).unwrap();
                        assert_eq!(lhs, sf.eval(a, b).unwrap() ^ sf.eval(a, c).unwrap());
                        assert_eq!(a.dot(b.plus(c)), a.dot(b) ^ a.dot(c));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_sign_factors(1).len(), 2);
        assert_eq!(enumerate_sign_factors(2).len(), 8);
        assert_eq!(enumerate_sign_factors(3).len(), 64);
        assert_eq!(general_linear_group(3).len(), 168);
        assert_eq!(general_linear_group(2).len(), 6);
    }

    #[test]
    fn classification_examples() {
        let c = classify_sign_factor(&SignFactor::zero(3)).unwrap();
        assert_eq!(
            (c.rank, c.alternating, c.class_name.as_deref()),
            (0, true, Some("3_1"))
        );
        for sf in [
            SignFactor::case1(),
            SignFactor::case2(),
            SignFactor::case3(),
        ] {
            assert_eq!(
                classify_sign_factor(&sf).unwrap().class_name.as_deref(),
                Some("3_2")
            );
        }
        assert_eq!(
            classify_sign_factor(&SignFactor::identity(3))
                .unwrap()
                .class_name
                .as_deref(),
            Some("3_5")
        );
        assert!(classify_sign_factor(&SignFactor::z2z2()).is_err());
    }

    #[test]
    fn five_orbits_match_invariants() {
        let orbits = congruence_orbits(3);
        assert_eq!(orbits.len(), 5);
        for orbit in &orbits {
            let inv = invariants(&orbit[0]);
            assert!(orbit.iter().all(|sf| invariants(sf) == inv));
        }
        let mut names: Vec<_> = orbits
            .iter()
            .map(|o| invariants(&o[0]).class_name.unwrap())
            .collect();
        names.sort();
        assert_eq!(names, ["3_1", "3_2", "3_3", "3_4", "3_5"]);
        let sizes: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(sizes, 64);
    }

    #[test]
    fn classification_is_congruence_invariant() {
        let group = general_linear_group(3);
        for sf in enumerate_sign_factors(3) {
            let inv = invariants(&sf);
            for gm in &group {
                assert_eq!(invariants(&sf.congruent(gm)), inv);
            }
        }
    }

    #[test]
    fn lie_type() {
        assert!(SignFactor::case2().is_lie_type());
        assert!(!SignFactor::identity(3).is_lie_type());
        assert!(SignFactor::zero(3).is_lie_type());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(SignFactor::parse("case1", 3).unwrap(), SignFactor::case1());
        assert_eq!(
            SignFactor::parse("0,1,0,0,0,0", 3).unwrap(),
            SignFactor::case1()
        );
        assert_eq!(
            SignFactor::parse("0,0,0,0,1,0", 3).unwrap(),
            SignFactor::case3()
        );
        assert_eq!(SignFactor::parse("0,1,0", 2).unwrap(), SignFactor::z2z2());
        assert_eq!(SignFactor::parse("zero", 2).unwrap().n(), 2);
        assert!(SignFactor::parse("0,1", 3).is_err());
        assert!(SignFactor::parse("0,2,0", 3).is_err());
        assert!(SignFactor::parse("bogus", 3).is_err());
        for sf in enumerate_sign_factors(3) {
            assert_eq!(SignFactor::parse(&sf.spec(), 3).unwrap(), sf);
        }
    }
}
