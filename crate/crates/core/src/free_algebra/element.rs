//! Elements of the free algebra and its tensor powers, with text I/O.

use smallvec::SmallVec;

use super::tree::Tree;
use crate::foundation::scalar::{format_scalar, is_negative, one};
use crate::foundation::{parse_scalar, LinComb, Scalar};
use crate::Error;

pub type FreeElement = LinComb<Tree>;

/// A basis tensor `T1 ⊗ ... ⊗ Tp`.
pub type Tuple = SmallVec<[Tree; 4]>;

pub type TensorElement = LinComb<Tuple>;

pub fn tuple(trees: &[Tree]) -> Tuple {
    Tuple::from_slice(trees)
}

pub fn generator(g: u8) -> FreeElement {
    FreeElement::basis(Tree::leaf(g))
}

pub fn unit() -> FreeElement {
    FreeElement::basis(Tree::UNIT)
}

pub fn multiply(a: &FreeElement, b: &FreeElement) -> FreeElement {
    let mut out = FreeElement::zero();
    for (x, c) in a {
        for (y, d) in b {
            out.add_term(x.product(y), c * d);
        }
    }
    out
}

/// `a1 ⊗ ... ⊗ ap` for elements given slot by slot.
pub fn tensor_of(slots: &[FreeElement]) -> TensorElement {
    let mut acc: Vec<(Tuple, Scalar)> = vec![(Tuple::new(), one())];
    for slot in slots {
        let mut next = Vec::with_capacity(acc.len() * slot.len());
        for (t, c) in &acc {
            for (x, d) in slot {
                let mut t2 = t.clone();
                t2.push(*x);
                next.push((t2, c * d));
            }
        }
        acc = next;
    }
    acc.into_iter().collect()
}

/// The product of all slots of every tuple, left to right as written by `combine`.
pub fn contract<F>(t: &TensorElement, mut combine: F) -> FreeElement
where
    F: FnMut(&[Tree]) -> Tree,
{
    t.map_keys(|tuple| combine(tuple))
}

/// The highest generator index used, plus one.
pub fn generator_bound(a: &FreeElement) -> usize {
    a.keys().map(Tree::generator_bound).max().unwrap_or(0)
}

fn join_terms<I: Iterator<Item = (String, Scalar)>>(terms: I) -> String {
    let mut out = String::new();
    for (i, (body, c)) in terms.enumerate() {
        if i == 0 {
            out.push_str(&format_scalar(&c));
        } else if is_negative(&c) {
            out.push_str(" - ");
            out.push_str(&format_scalar(&-c));
        } else {
            out.push_str(" + ");
            out.push_str(&format_scalar(&c));
        }
        out.push('*');
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: `c*tree` terms in basis order, e.g. `-1*(x1 x2) + 1/2*x1`.
pub fn render(a: &FreeElement) -> String {
    join_terms(a.iter().map(|(t, c)| (t.to_string(), c.clone())))
}

/// Canonical text of a tensor: `c*[T1 | T2]` terms.
pub fn render_tensor(t: &TensorElement) -> String {
    join_terms(t.iter().map(|(tuple, c)| {
        let parts: Vec<String> = tuple.iter().map(ToString::to_string).collect();
        (format!("[{}]", parts.join(" | ")), c.clone())
    }))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Gen(usize),
    Number(String),
    Plus,
    Minus,
    Star,
    Open,
    Close,
    OpenBracket,
    CloseBracket,
    Bar,
}

fn tokenize(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '[' => {
                out.push(Token::OpenBracket);
                i += 1
            }
            ']' => {
                out.push(Token::CloseBracket);
                i += 1
            }
            '|' => {
                out.push(Token::Bar);
                i += 1
            }
            'x' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let index: usize =
                    chars[start..j]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| {
                            Error::Parse(format!("expected a generator index after `x` at {i}"))
                        })?;
                out.push(Token::Gen(index));
                i = j;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '/') {
                    j += 1;
                }
                out.push(Token::Number(chars[i..j].iter().collect()));
                i = j;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` at {i}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), Error> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!("expected {want:?}, found {t:?}"))),
            None => Err(Error::Parse(format!(
                "expected {want:?}, found end of input"
            ))),
        }
    }

    /// sum := [sign] term (sign term)*
    fn sum(&mut self) -> Result<FreeElement, Error> {
        let mut out = FreeElement::zero();
        let mut sign = one();
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                sign = -one();
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            out.add_scaled(&sign, &t);
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    sign = one();
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    sign = -one();
                }
                _ => return Ok(out),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Gen(_) | Token::Open) | Some(Token::Number(_))
        )
    }

    /// term := [rational '*'] factor [factor] | rational
    fn term(&mut self) -> Result<FreeElement, Error> {
        let mut coeff = one();
        if let Some(Token::Number(n)) = self.peek().cloned() {
            if self.tokens.get(self.pos + 1) == Some(&Token::Star) {
                coeff = parse_scalar(&n)?;
                self.pos += 2;
            } else if n.contains('/') {
                self.pos += 1;
                return Ok(FreeElement::term(Tree::UNIT, parse_scalar(&n)?));
            }
        }
        let first = self.factor()?;
        let value = if self.starts_factor() {
            let second = self.factor()?;
            if self.starts_factor() {
                return Err(Error::Parse(
                    "products take exactly two factors; add parentheses".into(),
                ));
            }
            multiply(&first, &second)
        } else {
            first
        };
        Ok(value.scale(&coeff))
    }

    /// factor := xN | integer | '(' sum ')'
    fn factor(&mut self) -> Result<FreeElement, Error> {
        match self.next() {
            Some(Token::Gen(i)) => {
                if i == 0 || i > self.dim {
                    return Err(Error::UnknownGenerator {
                        index: i,
                        dim: self.dim,
                    });
                }
                Ok(generator((i - 1) as u8))
            }
            Some(Token::Number(n)) => Ok(FreeElement::term(Tree::UNIT, parse_scalar(&n)?)),
            Some(Token::Open) => {
                let inner = self.sum()?;
                self.expect(Token::Close)?;
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn finish(&self) -> Result<(), Error> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("trailing input at {t:?}"))),
        }
    }
}

/// Parses an element over `dim` generators, e.g. `3/2*((x1 x2) x3) - x1`.
pub fn parse_element(text: &str, dim: usize) -> Result<FreeElement, Error> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        dim,
    };
    if p.peek().is_none() {
        return Err(Error::Parse("empty expression".into()));
    }
    if p.tokens == [Token::Number("0".into())] {
        return Ok(FreeElement::zero());
    }
    let out = p.sum()?;
    p.finish()?;
    Ok(out)
}

/// Parses the tensor rendering `c*[T1 | ... | Tp] + ...` (or `0`).
pub fn parse_tensor(text: &str, dim: usize) -> Result<TensorElement, Error> {
    let tokens = tokenize(text)?;
    if tokens == [Token::Number("0".into())] {
        return Ok(TensorElement::zero());
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        dim,
    };
    let mut out = TensorElement::zero();
    let mut sign = one();
    if p.peek() == Some(&Token::Minus) {
        p.pos += 1;
        sign = -one();
    }
    loop {
        let mut coeff = sign.clone();
        if let Some(Token::Number(n)) = p.peek().cloned() {
            p.pos += 1;
            p.expect(Token::Star)?;
            coeff *= parse_scalar(&n)?;
        }
        p.expect(Token::OpenBracket)?;
        let mut slots = vec![p.sum()?];
        while p.peek() == Some(&Token::Bar) {
            p.pos += 1;
            slots.push(p.sum()?);
        }
        p.expect(Token::CloseBracket)?;
        out.add_scaled(&coeff, &tensor_of(&slots));
        match p.next() {
            None => return Ok(out),
            Some(Token::Plus) => sign = one(),
            Some(Token::Minus) => sign = -one(),
            Some(t) => {
                return Err(Error::Parse(format!(
                    "unexpected {t:?} between tensor terms"
                )))
            }
        }
    }
}
