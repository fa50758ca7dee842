use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on `{1, ..., degree}` stored as a 0-based image table.
///
/// Products are read left to right: `p * q` applies `p` first and then `q`,
/// so `(p * q).image(i) == q.image(p.image(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if seen[img - 1] {
                return Err(Error::RepeatedPoint(img));
            }
            seen[img - 1] = true;
            table.push((img - 1) as u32);
        }
        Ok(Permutation { images: table })
    }

    /// Builds a permutation from disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if seen[pt - 1] {
                    return Err(Error::RepeatedPoint(pt));
                }
                seen[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1,2,3)(4,5)"`, `"()"` or `"id"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { images }
    }


    #[inline]
    pub(crate) fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` raised to an arbitrary integer power.
    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        if e == 0 {
            return Permutation::identity(self.degree());
        }
        // Reduce modulo the element order so huge exponents stay cheap.
        let ord = self.order();
        if ord <= u64::MAX as u128 {
            e %= ord as u64;
        }
        let mut result = Permutation::identity(self.degree());
        let mut acc = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&acc);
            }
            e >>= 1;
            if e > 0 {
                acc = acc.then(&acc);
            }
        }
        result
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g^-1 x g)(p) = g(x(g^-1(p))), i.e. g(i) -> g(x(i)).
        let mut images = vec![0u32; self.images.len()];
        for i in 0..self.images.len() {
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Non-trivial cycles as 1-based points, each starting at its least point,
    /// sorted by that least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included as 1-cycles), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycle_type()
            .into_iter()
            .fold(1u128, |acc, len| acc.lcm(&(len as u128)))
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        transpositions % 2 == 0
    }

    /// Least 1-based point moved by `self`.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.smallest_moved0().map(|p| p + 1)
    }

    pub(crate) fn smallest_moved0(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &v)| v as usize != *i)
            .map(|(i, _)| i)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product. Panics if the degrees differ.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Serialized as cycle notation.
impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Splits cycle notation into its cycles without checking the degree.
/// Columns in errors are 1-based character positions.
pub(crate) fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let trimmed = text.trim();
    if trimmed == "id" {
        return Ok(Vec::new());
    }
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let syntax = |column: usize, message: &str| Error::Syntax {
        column,
        message: message.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(syntax(1, "empty permutation"));
    }
    while pos < chars.len() {
        if chars[pos] != '(' {
            return Err(syntax(pos + 1, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= chars.len() {
                return Err(syntax(pos + 1, "unterminated cycle"));
            }
            if chars[pos] == ')' && cycle.is_empty() {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos + 1, "expected a point"));
            }
            let digits: String = chars[start..pos].iter().collect();
            let point: usize = digits
                .parse()
                .map_err(|_| syntax(start + 1, "point does not fit in an integer"))?;
            cycle.push(point);
            skip_ws(&mut pos);
            match chars.get(pos) {
                Some(',') => pos += 1,
                Some(')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(pos + 1, "expected ',' or ')'")),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut pos);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_cycles() {
        let p = Permutation::parse("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), vec![2, 3, 1, 5, 4]);
    }

    #[test]
    fn parse_identity_forms() {
        assert!(Permutation::parse("()", 3).unwrap().is_identity());
        assert!(Permutation::parse(" id ", 3).unwrap().is_identity());
        assert!(Permutation::parse("( 1 , 2 ) ( 3 )", 3).unwrap().image(1) == 2);
    }

    #[test]
    fn parse_s8_lookup_element() {
        let x = Permutation::parse("(2,8,7,6,4,3)", 8).unwrap();
        assert_eq!(x.images(), vec![1, 8, 2, 3, 5, 4, 6, 7]);
        assert_eq!(x.to_string(), "(2,8,7,6,4,3)");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(1,2,1)", 3),
            Err(Error::RepeatedPoint(1))
        );
        assert_eq!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(Error::RepeatedPoint(2))
        );
        assert_eq!(
            Permutation::parse("(1,4)", 3),
            Err(Error::PointOutOfRange {
                point: 4,
                degree: 3
            })
        );
        assert_eq!(
            Permutation::parse("(0,1)", 3),
            Err(Error::PointOutOfRange {
                point: 0,
                degree: 3
            })
        );
        for bad in ["(1,2", "1,2)", "(1,,2)", "(a)", "", "(1 2)"] {
            assert!(
                matches!(Permutation::parse(bad, 3), Err(Error::Syntax { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = Permutation::parse("(1,2)", 3).unwrap();
        let b = Permutation::parse("(1,2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).unwrap().image(1), 3);
        let word = &(&a * &b) * &b;
        assert_eq!(word.to_string(), "(2,3)");
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn identity_and_inverse_laws() {
        let p = Permutation::parse("(1,5,2)(3,4)", 6).unwrap();
        assert_eq!(p.compose(&Permutation::identity(6)).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn powers_and_orders() {
        let p = Permutation::parse("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.order(), 6);
        let c8 = Permutation::parse("(1,2,3,4,5,6,7,8)", 8).unwrap();
        assert_eq!(c8.pow(4).image(1), 5);
        assert!(p.pow(0).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(7), p);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn conjugation_matches_products() {
        let x = Permutation::parse("(1,2,3)", 4).unwrap();
        let g = Permutation::parse("(1,4)(2,3)", 4).unwrap();
        let expected = &(&g.inverse() * &x) * &g;
        assert_eq!(x.conjugate_by(&g), expected);
    }
}
