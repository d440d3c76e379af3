//! Bound expressions in `n`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := digits | 'n' | '(' expr ')'
//! ```

use logbehave_core::poly::{PolyZ, RatFunc};
use logbehave_core::BigInt;
use std::str::FromStr;

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bound expression, column {column}: {message}")]
pub struct ExprError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    N,
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start + 1, Tok::Int(BigInt::from_str(&digits).unwrap())));
            }
            'n' => {
                out.push((i + 1, Tok::N));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((i + 1, Tok::Op(c)));
                i += 1;
            }
            _ => {
                return Err(ExprError {
                    column: i + 1,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let col = self.column();
                let rhs = self.unary()?;
                acc = acc.div(&rhs).ok_or(ExprError {
                    column: col,
                    message: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ExprError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(k)) => k.clone(),
            _ => return self.err("exponent must be an integer literal"),
        };
        let e = match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(format!("exponent exceeds {MAX_EXPONENT}")),
        };
        let col = self.column();
        self.pos += 1;
        let mut out = RatFunc::constant(&1u32.into());
        for _ in 0..e {
            out = &out * &base;
        }
        if negative {
            out = out.recip().ok_or(ExprError {
                column: col,
                message: "zero raised to a negative power".into(),
            })?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<RatFunc, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                Ok(RatFunc::from_poly(PolyZ::constant(k)))
            }
            Some(Tok::N) => {
                self.pos += 1;
                Ok(RatFunc::from_poly(PolyZ::var()))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parses a bound expression into a canonical rational function.
pub fn parse_bound(src: &str) -> Result<RatFunc, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use logbehave_core::exactnum::{pow, rat};
    use logbehave_core::induction::{clf_bound, flf_bound};
    use proptest::prelude::*;

    #[test]
    fn built_in_bounds() {
        assert_eq!(parse_bound("16*(n-1)/n").unwrap(), clf_bound());
        assert_eq!(
            parse_bound("16*(n^3-n^2+1)/(n^3-n^2)").unwrap(),
            flf_bound()
        );
        assert_eq!(parse_bound("159/10").unwrap(), RatFunc::constant(&rat(159, 10)));
    }

    #[test]
    fn precedence() {
        let f = parse_bound("-n^2 + 2*n - 3/n").unwrap();
        assert_eq!(f.eval_i64(3), Some(rat(-4, 1)));
        let g = parse_bound("(n+1)^-2").unwrap();
        assert_eq!(g.eval_i64(1), Some(rat(1, 4)));
        assert_eq!(parse_bound("2^3^1").unwrap_err().message, "trailing input");
    }

    #[test]
    fn rejects() {
        for (src, col) in [
            ("16n", 3),
            ("x+1", 1),
            ("n/(n-n)", 3),
            ("(n+1", 5),
            ("n^n", 3),
            ("n^65", 3),
            ("1.5", 2),
            ("", 1),
            ("n*", 3),
        ] {
            let e = parse_bound(src).unwrap_err();
            assert_eq!(e.column, col, "{src}: {e}");
        }
    }

    proptest! {
        #[test]
        fn matches_direct_evaluation(a in -50i64..50, b in 1i64..50, c in -20i64..20, e in 0u32..4, n in 1i64..40) {
            let src = format!("({a})*n^{e} + {c}/{b} - (n-{c})*({a}+n)");
            let f = parse_bound(&src).unwrap();
            let want = rat(a, 1) * pow(&rat(n, 1), e as u64) + rat(c, b) - rat(n - c, 1) * rat(a + n, 1);
            prop_assert_eq!(f.eval_i64(n), Some(want));
        }
    }
}
