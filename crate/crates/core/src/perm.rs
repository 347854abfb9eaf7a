//! Permutations of `{1..n}` and cycle notation.
//!
//! Points are 0-based internally and 1-based in every textual form.
//!
//! # Action convention
//!
//! Permutations act on the right: `x^(pq) = (x^p)^q`. Consequently
//! [`Permutation::compose`] (and `&p * &q`) applies `p` first and then `q`,
//! so `compose(p, q)(x) = q(p(x))`. This is the convention used by GAP and by
//! products of cycles read left to right; it is fixed and not configurable.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, ParseError, ParseErrorKind};

/// A bijection of `{0..degree}` stored as its image list.
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

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self, Error> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(Error::NotAPermutation);
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = alloc::vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || seen[x] {
                    return Err(Error::NotAPermutation);
                }
                seen[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Smallest point moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `p` then `q`: the result maps `x` to `q(p(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| other.images[x as usize])
            .collect();
        Permutation { images }
    }

    /// The conjugate `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Self {
        let inv = by.inverse();
        inv.mul_unchecked(self).mul_unchecked(by)
    }

    pub fn pow(&self, mut k: i64) -> Self {
        let mut base = if k < 0 {
            k = -k;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Cycles of length at least two, each starting at its smallest point,
    /// ordered by that point. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Lengths of all cycles including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    /// Extends the permutation to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Places the permutation on the block `offset..offset+degree()` of a
    /// permutation of degree `total`.
    pub fn shift(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u32;
        }
        Permutation { images }
    }

    /// Restriction to the block `offset..offset+len`, which must be invariant.
    pub fn restrict_block(&self, offset: usize, len: usize) -> Option<Self> {
        let mut images = Vec::with_capacity(len);
        for i in offset..offset + len {
            let x = self.apply(i);
            if x < offset || x >= offset + len {
                return None;
            }
            images.push((x - offset) as u32);
        }
        Some(Permutation { images })
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        use core::fmt::Write;
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{}", x + 1);
            }
            s.push(')');
        }
        s
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product; panics on degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Left-to-right product free function mirroring [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, Error> {
    p.compose(q)
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

/// Parses a product of disjoint cycles such as `(1,2,3)(4,5)` with 1-based
/// points. Whitespace is ignored; `()` is the identity. Error positions are
/// byte offsets into `text`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut seen = alloc::vec![false; degree];
    let err = |pos: usize, kind: ParseErrorKind| ParseError { pos, kind };

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos] as char).is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, ParseErrorKind::Empty));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(err(pos, ParseErrorKind::Expected('(')));
        }
        pos += 1;
        skip_ws(&mut pos);
        let mut cycle: Vec<usize> = Vec::new();
        if pos < bytes.len() && bytes[pos] == b')' {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, ParseErrorKind::ExpectedPoint));
                }
                let point: usize = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, ParseErrorKind::PointOutOfRange(usize::MAX)))?;
                if point == 0 || point > degree {
                    return Err(err(start, ParseErrorKind::PointOutOfRange(point)));
                }
                if seen[point - 1] {
                    return Err(err(start, ParseErrorKind::RepeatedPoint(point)));
                }
                seen[point - 1] = true;
                cycle.push(point - 1);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => return Err(err(pos, ParseErrorKind::Expected(')'))),
                    None => return Err(err(pos, ParseErrorKind::UnexpectedEnd)),
                }
            }
        }
        for (i, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(i + 1) % cycle.len()] as u32;
        }
        skip_ws(&mut pos);
    }
    Ok(Permutation { images })
}
