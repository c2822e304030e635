//! Parenthesis arrangements encoded as preorder bit strings.
//!
//! A leaf is `0`, a product is `1` followed by the codes of its factors, so a
//! shape with `n` leaves takes `2n - 1` bits. The unit has degree 0 and an
//! empty code. Numeric order of codes of equal degree is the recursive order
//! "leaf before product, then left factor, then right factor".

use std::fmt;

/// Largest supported degree; `2 * 24 - 1` bits fit in a `u64`.
pub const MAX_DEGREE: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    degree: u8,
    code: u64,
}

impl Shape {
    pub const UNIT: Shape = Shape { degree: 0, code: 0 };
    pub const LEAF: Shape = Shape { degree: 1, code: 0 };

    pub(crate) fn from_raw(degree: u8, code: u64) -> Shape {
        Shape { degree, code }
    }

    pub fn degree(self) -> usize {
        self.degree as usize
    }

    pub fn is_unit(self) -> bool {
        self.degree == 0
    }

    fn width(self) -> u32 {
        if self.degree == 0 {
            0
        } else {
            2 * self.degree as u32 - 1
        }
    }

    pub fn code(self) -> u64 {
        self.code
    }

    /// The shape of a product; the unit is absorbed on either side.
    pub fn product(self, rhs: Shape) -> Shape {
        if self.is_unit() {
            return rhs;
        }
        if rhs.is_unit() {
            return self;
        }
        let degree = self.degree as usize + rhs.degree as usize;
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Shape {
            degree: degree as u8,
            code: 1 << (self.width() + rhs.width()) | self.code << rhs.width() | rhs.code,
        }
    }

    /// The two factors of a product shape.
    pub fn split(self) -> Option<(Shape, Shape)> {
        if self.degree < 2 {
            return None;
        }
        let mut pos = self.width() - 1;
        let left = parse(self.code, &mut pos);
        let right = parse(self.code, &mut pos);
        Some((left, right))
    }

    /// Keeps the leaves whose position (0-based, left to right) is in `mask`;
    /// all other leaves become the unit and are absorbed.
    pub fn restrict(self, mask: u64) -> Shape {
        if self.degree == 0 {
            return self;
        }
        let mut pos = self.width();
        let mut leaf = 0;
        restrict_rec(self.code, &mut pos, &mut leaf, mask)
    }

    /// `(((· ·) ·) ... ·)` with `n` leaves; the unit for `n = 0`.
    pub fn right_normed(n: usize) -> Shape {
        (0..n).fold(Shape::UNIT, |acc, _| acc.product(Shape::LEAF))
    }

    /// All shapes with `n` leaves, in ascending order (Catalan many).
    pub fn all(n: usize) -> Vec<Shape> {
        let mut table: Vec<Vec<Shape>> = vec![vec![Shape::UNIT], vec![Shape::LEAF]];
        for k in 2..=n {
            let mut out = Vec::new();
            for i in 1..k {
                for &l in &table[i] {
                    for &r in &table[k - i] {
                        out.push(l.product(r));
                    }
                }
            }
            out.sort();
            table.push(out);
        }
        table.swap_remove(n)
    }
}

fn bit(code: u64, pos: u32) -> bool {
    code >> pos & 1 == 1
}

/// Parses the subtree whose first bit is at `*pos` (counting down from the top).
fn parse(code: u64, pos: &mut u32) -> Shape {
    let is_node = bit(code, *pos - 1);
    *pos -= 1;
    if !is_node {
        return Shape::LEAF;
    }
    let l = parse(code, pos);
    let r = parse(code, pos);
    l.product(r)
}

fn restrict_rec(code: u64, pos: &mut u32, leaf: &mut u32, mask: u64) -> Shape {
    let is_node = bit(code, *pos - 1);
    *pos -= 1;
    if !is_node {
        let keep = mask >> *leaf & 1 == 1;
        *leaf += 1;
        return if keep { Shape::LEAF } else { Shape::UNIT };
    }
    let l = restrict_rec(code, pos, leaf, mask);
    let r = restrict_rec(code, pos, leaf, mask);
    l.product(r)
}

impl fmt::Display for Shape {
    /// `(··)(·(··))` style, the outermost product without brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(s: Shape, f: &mut fmt::Formatter<'_>, outer: bool) -> fmt::Result {
            match s.split() {
                None if s.is_unit() => f.write_str("1"),
                None => f.write_str("·"),
                Some((l, r)) => {
                    if !outer {
                        f.write_str("(")?;
                    }
                    go(l, f, false)?;
                    go(r, f, false)?;
                    if !outer {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        if self.degree == 1 {
            return f.write_str("(·)");
        }
        if self.degree == 2 {
            return f.write_str("(··)");
        }
        go(*self, f, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: Shape, b: Shape) -> Shape {
        a.product(b)
    }

    const L: Shape = Shape::LEAF;

    #[test]
    fn codes_and_split() {
        let two = pair(L, L);
        assert_eq!(two.code(), 0b100);
        let s = pair(two, pair(L, two));
        assert_eq!(s.degree(), 5);
        assert_eq!(s.split(), Some((two, pair(L, two))));
        assert_eq!(L.split(), None);
        assert_eq!(s.to_string(), "(··)(·(··))");
    }

    #[test]
    fn catalan_counts_and_order() {
        let counts: Vec<usize> = (0..8).map(|n| Shape::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 14, 42, 132]);
        let three = Shape::all(3);
        // leaf-first left factor sorts first: ·(··) < (··)·
        assert_eq!(three, vec![pair(L, pair(L, L)), pair(pair(L, L), L)]);
    }

    #[test]
    fn restriction_example() {
        // (··)((··)(··)) restricted to leaves 2 and 6, and to the rest
        let two = pair(L, L);
        let r = pair(two, pair(two, two));
        let image = 1 << 1 | 1 << 5;
        assert_eq!(r.restrict(image), two);
        let rest = r.restrict(!image & 0b111111);
        assert_eq!(rest, pair(L, pair(two, L)));
        assert_eq!(rest.to_string(), "·((··)·)");
        assert_eq!(r.restrict(0b111111), r);
        assert_eq!(r.restrict(0), Shape::UNIT);
    }

    #[test]
    fn right_normed_shape() {
        assert_eq!(Shape::right_normed(0), Shape::UNIT);
        assert_eq!(Shape::right_normed(1), L);
        assert_eq!(Shape::right_normed(3), pair(pair(L, L), L));
    }

    #[test]
    fn unit_is_absorbed() {
        assert_eq!(Shape::UNIT.product(L), L);
        assert_eq!(L.product(Shape::UNIT), L);
    }
}
