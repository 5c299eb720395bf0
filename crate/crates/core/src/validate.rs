use std::fmt;

use serde::Serialize;

use crate::tagged::Cppt;
use crate::error::CanonError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    OuterTooSmall,
    OuterNotSimple,
    OuterAngleConvex,
    FaceSize,
    DegenerateFace,
    NonSimpleFace,
    TriangleHasReflex,
    ConvexCount,
    EdgeCount,
    TriangleCount,
    QuadCount,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::OuterTooSmall => "outer face has fewer than 3 vertices",
            Rule::OuterNotSimple => "outer face is not a simple cycle",
            Rule::OuterAngleConvex => "outer face angle is not reflex",
            Rule::FaceSize => "interior face size is not 3 or 4",
            Rule::DegenerateFace => "face boundary repeats an edge",
            Rule::NonSimpleFace => "face boundary repeats a vertex",
            Rule::TriangleHasReflex => "interior triangle contains reflex angle",
            Rule::ConvexCount => "interior face does not have exactly 3 convex angles",
            Rule::EdgeCount => "e != 2n - 3",
            Rule::TriangleCount => "t != h - 2",
            Rule::QuadCount => "q != n - h",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub location: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub n: usize,
    pub e: usize,
    pub t: usize,
    pub q: usize,
    pub h: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl Cppt {
    /// Checks every combinatorial 4-PPT axiom. Never fails; problems are
    /// listed in the report.
    pub fn validate(&self) -> ValidationReport {
        let faces = self.trace_faces();
        let mut violations = vec![];
        let mut push = |rule, location: String| violations.push(Violation { rule, location });

        let outer = &faces[0];
        let h = outer.len();
        if h < 3 {
            push(Rule::OuterTooSmall, format!("outer face of size {h}"));
        }
        if !outer.is_simple() {
            push(Rule::OuterNotSimple, format!("{:?}", outer.vertices()));
        }
        for &d in &outer.darts {
            if !self.is_reflex(d) {
                push(Rule::OuterAngleConvex, format!("vertex {}", d.origin));
            }
        }

        let (mut t, mut q) = (0, 0);
        for f in &faces[1..] {
            let loc = format!("{:?}", f.vertices());
            match f.len() {
                3 => t += 1,
                4 => q += 1,
                _ => push(Rule::FaceSize, loc.clone()),
            }
            if f.is_degenerate() {
                push(Rule::DegenerateFace, loc.clone());
            } else if !f.is_simple() {
                push(Rule::NonSimpleFace, loc.clone());
            }
            let reflex = self.reflex_count(f);
            if f.len() == 3 && reflex > 0 {
                push(Rule::TriangleHasReflex, loc);
            } else if f.len() != 3 && f.len() - reflex.min(f.len()) != 3 {
                push(Rule::ConvexCount, loc);
            }
        }

        let n = self.n();
        let e = self.edge_count();
        if e + 3 != 2 * n {
            push(Rule::EdgeCount, format!("e = {e}, n = {n}"));
        }
        if t + 2 != h {
            push(Rule::TriangleCount, format!("t = {t}, h = {h}"));
        }
        if q + h != n {
            push(Rule::QuadCount, format!("q = {q}, n = {n}, h = {h}"));
        }
        ValidationReport {
            valid: violations.is_empty(),
            n,
            e,
            t,
            q,
            h,
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }
}

/// Number of triangles in any 4-PPT filling a simple cycle of `b` vertices
/// of which `c` have their reflex angle inside the cycle: `b - 2c - 2`.
pub fn triangle_count(b: usize, c: usize) -> Result<usize, CanonError> {
    if b < 3 {
        return Err(CanonError::Precondition(format!("cycle length {b} < 3")));
    }
    b.checked_sub(2 * c + 2)
        .ok_or_else(|| CanonError::Precondition(format!("no 4-PPT fills a {b}-cycle with {c} inner reflex angles")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn canonical_four_is_valid() {
        let t = fixtures::canonical(4);
        let r = t.validate();
        assert!(r.valid, "{:?}", r.violations);
        assert_eq!((r.n, r.e, r.t, r.q, r.h), (4, 5, 1, 1, 3));
        assert_eq!(triangle_count(3, 0).unwrap(), r.t);
    }

    #[test]
    fn reflex_in_triangle_is_reported() {
        // r=0, s=1, t=2, v1=3; move v1's reflex into triangle (r, s, v1)
        let faces = vec![vec![0, 2, 1], vec![0, 1, 3], vec![0, 3, 1, 2]];
        let t = Cppt::from_faces(4, &faces, 0, &[0, 0, 0, 1]).unwrap();
        let r = t.validate();
        assert!(!r.valid);
        assert!(r.has(Rule::TriangleHasReflex));
        assert!(r.has(Rule::ConvexCount));
    }

    #[test]
    fn five_face_is_reported() {
        // outer triangle 0,1,2 with a pentagon 0,1,4,3,... built as a path
        // of two interior vertices hanging between 0 and 1
        let faces = vec![vec![0, 2, 1], vec![0, 1, 3, 4], vec![0, 4, 3, 1, 2]];
        let t = Cppt::from_faces(5, &faces, 0, &[0, 0, 0, 2, 2]).unwrap();
        let r = t.validate();
        assert!(r.has(Rule::FaceSize));
        assert!(!r.valid);
    }

    #[test]
    fn corollary_values() {
        assert_eq!(triangle_count(3, 0).unwrap(), 1);
        assert_eq!(triangle_count(4, 0).unwrap(), 2);
        assert_eq!(triangle_count(5, 1).unwrap(), 1);
        assert!(triangle_count(4, 2).is_err());
        assert!(triangle_count(2, 0).is_err());
    }
}
