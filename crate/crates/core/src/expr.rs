//! Parser for polynomial expressions such as `2*x^2*y - 1/3 z` over an
//! arbitrary (graded-)commutative algebra. Juxtaposition, `*` and `·` all
//! multiply, in the written order.

use alloc::format;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

pub(crate) trait ExprAlgebra {
    type Elem: Clone;

    fn scalar(&self, q: Rational) -> Self::Elem;
    fn atom(&self, name: &str) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

pub(crate) fn parse_expr<A: ExprAlgebra>(alg: &A, src: &str) -> Result<A::Elem> {
    let mut p = ExprParser { alg, src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(Error::parse(p.pos, "unexpected input"));
    }
    Ok(e)
}

struct ExprParser<'a, A> {
    alg: &'a A,
    src: &'a str,
    pos: usize,
}

impl<A: ExprAlgebra> ExprParser<'_, A> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<A::Elem> {
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        let mut acc = self.alg.scale(&self.term()?, &sign);
        loop {
            let sign = if self.eat('+') {
                Rational::one()
            } else if self.eat('-') {
                -Rational::one()
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            acc = self.alg.add(&acc, &self.alg.scale(&t, &sign));
        }
    }

    fn term(&mut self) -> Result<A::Elem> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            let explicit = self.eat('*') || self.eat('·');
            self.skip_ws();
            let starts_factor = self
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || c == '(');
            if !starts_factor {
                if explicit {
                    return Err(Error::parse(self.pos, "expected a factor after '*'"));
                }
                return Ok(acc);
            }
            let f = self.power()?;
            acc = self.alg.mul(&acc, &f)?;
        }
    }

    fn power(&mut self) -> Result<A::Elem> {
        let base = self.factor()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let k: u32 = self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected a nonnegative integer exponent"))?;
        let mut acc = self.alg.scalar(Rational::one());
        for _ in 0..k {
            acc = self.alg.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<A::Elem> {
        self.skip_ws();
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(Error::parse(self.pos, "expected ')'"));
            }
            return Ok(e);
        }
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            let save = self.pos;
            if self.eat('/') {
                self.skip_ws();
                let d = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.bump();
                }
                if d == self.pos {
                    return Err(Error::parse(d, "expected a denominator"));
                }
            } else {
                self.pos = save;
            }
            let q = parse_rational(&self.src[start..self.pos])
                .map_err(|_| Error::parse(start, "invalid rational"))?;
            return Ok(self.alg.scalar(q));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.bump();
        }
        let name = &self.src[start..self.pos];
        if name.is_empty() {
            return Err(Error::parse(start, "expected a number, a name or '('"));
        }
        self.alg
            .atom(name)
            .ok_or_else(|| Error::parse(start, format!("unknown symbol {name:?}")))
    }
}
