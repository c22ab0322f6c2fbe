//! The oriented Fano plane on Γ* = Z2^3 \ {000} and the octonion products it fixes.

use serde::Serialize;
use thiserror::Error;

use crate::grading::GradeLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("{0} is the neutral element, not a point or line of the Fano plane")]
    Neutral(GradeLabel),
    #[error("expected labels of length 3, got {0}")]
    WrongDim(GradeLabel),
    #[error("points {0} and {1} coincide")]
    Coincident(GradeLabel, GradeLabel),
    #[error("({0}, {1}, {2}) is not a line of three distinct points")]
    NotCollinear(GradeLabel, GradeLabel, GradeLabel),
    #[error("the product e_{0} · e_{0} is not part of the oriented-plane multiplication")]
    SquareUndefined(GradeLabel),
}

const fn p(bits: u8) -> GradeLabel {
    GradeLabel::raw(bits, 3)
}

// bits: 100 = 1, 010 = 2, 110 = 3, 001 = 4, 101 = 5, 011 = 6, 111 = 7
/// The seven lines, each read along its arrows.
const ORIENTED_LINES: [[GradeLabel; 3]; 7] = [
    [p(7), p(4), p(3)], // 111 → 001 → 110
    [p(7), p(6), p(1)], // 111 → 011 → 100
    [p(2), p(5), p(7)], // 010 → 101 → 111
    [p(1), p(3), p(2)], // 100 → 110 → 010
    [p(5), p(6), p(3)], // 101 → 011 → 110
    [p(1), p(4), p(5)], // 100 → 001 → 101
    [p(2), p(4), p(6)], // 010 → 001 → 011
];

/// A line of the plane with its label and positively oriented points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrientedLine {
    pub label: GradeLabel,
    pub points: [GradeLabel; 3],
}

/// The oriented Fano plane used to define σ and the octonion products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPlane {
    lines: Vec<OrientedLine>,
}

impl Default for FanoPlane {
    fn default() -> Self {
        FanoPlane::standard()
    }
}

fn check_point(a: GradeLabel) -> Result<(), FanoError> {
    if a.n() != 3 {
        Err(FanoError::WrongDim(a))
    } else if a.is_zero() {
        Err(FanoError::Neutral(a))
    } else {
        Ok(())
    }
}

fn label_of(points: &[GradeLabel; 3]) -> GradeLabel {
    GradeLabel::nonzero(3)
        .expect("n = 3")
        .into_iter()
        .find(|z| points.iter().all(|&q| z.dot(q) == 0))
        .expect("every collinear triple has a line label")
}

impl FanoPlane {
    pub fn standard() -> Self {
        let lines = ORIENTED_LINES
            .iter()
            .map(|pts| OrientedLine {
                label: label_of(pts),
                points: *pts,
            })
            .collect();
        FanoPlane { lines }
    }

    pub fn lines(&self) -> &[OrientedLine] {
        &self.lines
    }

    /// α^⊥: the three lines through the point α, in position order.
    pub fn lines_through(&self, a: GradeLabel) -> Result<[GradeLabel; 3], FanoError> {
        check_point(a)?;
        let v: Vec<GradeLabel> = GradeLabel::nonzero(3)
            .expect("n = 3")
            .into_iter()
            .filter(|z| a.dot(*z) == 0)
            .collect();
        Ok([v[0], v[1], v[2]])
    }

    /// The three points of line ζ in positive cyclic order, as stored.
    pub fn points_on(&self, z: GradeLabel) -> Result<[GradeLabel; 3], FanoError> {
        check_point(z)?;
        Ok(self
            .lines
            .iter()
            .find(|l| l.label == z)
            .expect("seven labelled lines")
            .points)
    }

    /// ℓ(α, β): the label of the unique line through two distinct points.
    pub fn line_label(&self, a: GradeLabel, b: GradeLabel) -> Result<GradeLabel, FanoError> {
        check_point(a)?;
        check_point(b)?;
        if a == b {
            return Err(FanoError::Coincident(a, b));
        }
        Ok(label_of(&[a, b, a.plus(b)]))
    }

    /// σ(α, β, γ) for three distinct collinear points.
    pub fn orientation(
        &self,
        a: GradeLabel,
        b: GradeLabel,
        c: GradeLabel,
    ) -> Result<i8, FanoError> {
        for x in [a, b, c] {
            check_point(x)?;
        }
        if a == b || b == c || a == c || !a.plus(b).plus(c).is_zero() {
            return Err(FanoError::NotCollinear(a, b, c));
        }
        for line in &self.lines {
            let [x, y, z] = line.points;
            for rot in [[x, y, z], [y, z, x], [z, x, y]] {
                if rot == [a, b, c] {
                    return Ok(1);
                }
                if rot == [c, b, a] {
                    return Ok(-1);
                }
            }
        }
        Err(FanoError::NotCollinear(a, b, c))
    }

    /// `e_α · e_β = σ(α, β, α+β) e_{α+β}`, with `e_000` the unit.
    pub fn octonion_mul(
        &self,
        a: GradeLabel,
        b: GradeLabel,
    ) -> Result<(i8, GradeLabel), FanoError> {
        if a.n() != 3 {
            return Err(FanoError::WrongDim(a));
        }
        if b.n() != 3 {
            return Err(FanoError::WrongDim(b));
        }
        if a.is_zero() {
            return Ok((1, b));
        }
        if b.is_zero() {
            return Ok((1, a));
        }
        if a == b {
            return Err(FanoError::SquareUndefined(a));
        }
        let c = a.plus(b);
        Ok((self.orientation(a, b, c)?, c))
    }

    /// Signed 7×7 product table over Γ*; diagonal entries are `None`.
    pub fn octonion_table(&self) -> Vec<Vec<Option<(i8, GradeLabel)>>> {
        let pts = GradeLabel::nonzero(3).expect("n = 3");
        pts.iter()
            .map(|&a| pts.iter().map(|&b| self.octonion_mul(a, b).ok()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::g;

    fn plane() -> FanoPlane {
        FanoPlane::standard()
    }

    #[test]
    fn lines_through_examples() {
        let f = plane();
        let mut l = f.lines_through(g("100")).unwrap().to_vec();
        l.sort();
        let mut want = vec![g("001"), g("011"), g("010")];
        want.sort();
        assert_eq!(l, want);
        let mut l = f.lines_through(g("111")).unwrap().to_vec();
        l.sort();
        let mut want = vec![g("110"), g("011"), g("101")];
        want.sort();
        assert_eq!(l, want);
        assert!(f.lines_through(g("000")).is_err());
    }

    #[test]
    fn points_on_examples() {
        let f = plane();
        assert_eq!(
            f.points_on(g("001")).unwrap(),
            [g("100"), g("110"), g("010")]
        );
        assert_eq!(
            f.points_on(g("111")).unwrap(),
            [g("101"), g("011"), g("110")]
        );
        for z in GradeLabel::nonzero(3).unwrap() {
            let [a, b, c] = f.points_on(z).unwrap();
            assert!(a.plus(b).plus(c).is_zero());
        }
    }

    #[test]
    fn incidence_is_exhaustively_consistent() {
        let f = plane();
        for a in GradeLabel::nonzero(3).unwrap() {
            for z in GradeLabel::nonzero(3).unwrap() {
                let on_line = f.points_on(z).unwrap().contains(&a);
                assert_eq!(on_line, a.dot(z) == 0);
                assert_eq!(f.lines_through(a).unwrap().contains(&z), on_line);
            }
            let count = f.lines.iter().filter(|l| l.points.contains(&a)).count();
            assert_eq!(count, 3);
        }
    }

    #[test]
    fn line_label_examples() {
        let f = plane();
        assert_eq!(f.line_label(g("111"), g("001")).unwrap(), g("110"));
        assert_eq!(f.line_label(g("100"), g("010")).unwrap(), g("001"));
        assert!(f.line_label(g("100"), g("100")).is_err());
        for a in GradeLabel::nonzero(3).unwrap() {
            for b in GradeLabel::nonzero(3).unwrap() {
                if a != b {
                    let l = f.line_label(a, b).unwrap();
                    assert_eq!(l, f.line_label(b, a).unwrap());
                    assert_eq!(l, f.line_label(a, a.plus(b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn orientation_examples() {
        let f = plane();
        assert_eq!(f.orientation(g("110"), g("010"), g("100")).unwrap(), 1);
        assert_eq!(f.orientation(g("110"), g("101"), g("011")).unwrap(), 1);
        assert_eq!(f.orientation(g("111"), g("100"), g("011")).unwrap(), -1);
        assert!(f.orientation(g("100"), g("010"), g("001")).is_err());
        for line in f.lines() {
            let [a, b, c] = line.points;
            assert_eq!(
                f.orientation(a, b, c).unwrap(),
                -f.orientation(b, a, c).unwrap()
            );
        }
    }

    #[test]
    fn octonion_products() {
        let f = plane();
        assert_eq!(f.octonion_mul(g("110"), g("010")).unwrap(), (1, g("100")));
        assert_eq!(f.octonion_mul(g("111"), g("001")).unwrap(), (1, g("110")));
        assert_eq!(f.octonion_mul(g("000"), g("011")).unwrap(), (1, g("011")));
        assert_eq!(f.octonion_mul(g("011"), g("000")).unwrap(), (1, g("011")));
        assert!(f.octonion_mul(g("011"), g("011")).is_err());
        for a in GradeLabel::nonzero(3).unwrap() {
            for b in GradeLabel::nonzero(3).unwrap() {
                if a != b {
                    let (s1, c1) = f.octonion_mul(a, b).unwrap();
                    let (s2, c2) = f.octonion_mul(b, a).unwrap();
                    assert_eq!(c1, c2);
                    assert_eq!(s1, -s2);
                }
            }
        }
    }
}
