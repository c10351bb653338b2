//! Coefficient expressions over a tower.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exp)?
//! exp    := int | '-' int | '(' '-'? int ('/' int)? ')'
//! atom   := int | name | '(' expr ')'
//! ```
//!
//! Names are `p`, `pi`, `t` (residue generator, when f_ur > 1) and the step
//! generators of the tower. A rational power x^(a/b) is accepted only when x
//! is exactly +-pi^k with b | k*a, so that the result is again +-pi^(ka/b).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::tower::{TowerElement, TowerField};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt =
                s[st..i].parse().map_err(|_| Error::Parse { position: st, message: "bad integer".into() })?;
            out.push((st, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Name(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { position: i, message: format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    k: &'a TowerField,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { position: self.here(), message: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<TowerElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.k.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.k.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<TowerElement> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let t = self.unary()?;
                acc = self.k.mul(&acc, &t);
            } else if self.eat('/') {
                let t = self.unary()?;
                acc = self.k.div(&acc, &t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<TowerElement> {
        if self.eat('-') {
            let x = self.unary()?;
            return Ok(self.k.neg(&x));
        }
        self.power()
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let n: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse { position: self.here(), message: "exponent too large".into() })?;
                Ok(if neg { -n } else { n })
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn power(&mut self) -> Result<TowerElement> {
        let start = self.here();
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let (a, b) = if self.eat('(') {
            let a = self.int()?;
            let b = if self.eat('/') { self.int()? } else { 1 };
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            (a, b)
        } else {
            (self.int()?, 1)
        };
        if b == 0 {
            return Err(Error::Parse { position: start, message: "zero denominator in exponent".into() });
        }
        let g = a.gcd(&b);
        let (a, b) = if b < 0 { (-a / g, -b / g) } else { (a / g, b / g) };
        if b == 1 {
            return self.k.pow_signed(&base, a);
        }
        rational_power(self.k, &base, a, b)
    }

    fn atom(&mut self) -> Result<TowerElement> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.k.from_bigint(&n))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                self.k.generator(&name).ok_or_else(|| Error::Parse {
                    position: self.toks[self.pos - 1].0,
                    message: format!("unknown name '{}'", name),
                })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let x = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(x)
            }
            _ => self.err("expected a number, a name or '('"),
        }
    }
}

/// x^(a/b) for x = +-pi^k exactly, b > 1 and gcd(a, b) = 1.
pub fn rational_power(k: &TowerField, x: &TowerElement, a: i64, b: i64) -> Result<TowerElement> {
    let (sign, j) = k
        .as_signed_uniformizer_power(x)
        .ok_or_else(|| Error::Unresolvable(format!("base is not +-pi^k exactly (exponent {}/{})", a, b)))?;
    if (j * a) % b != 0 {
        return Err(Error::Unresolvable(format!(
            "pi^{} to the power {}/{} needs a ramification index divisible by {}",
            j,
            a,
            b,
            b / (j * a).gcd(&b)
        )));
    }
    if sign < 0 && b % 2 == 0 {
        return Err(Error::Unresolvable(format!("even root of a negative element (exponent {}/{})", a, b)));
    }
    let r = k.uniformizer_pow(j * a / b)?;
    Ok(if sign < 0 && a.rem_euclid(2) == 1 { k.neg(&r) } else { r })
}

pub fn parse_and_eval(k: &TowerField, s: &str) -> Result<TowerElement> {
    let toks = lex(s)?;
    let mut p = Parser { k, toks, pos: 0, len: s.len() };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::TowerSpec;
    use crate::val::val;

    #[test]
    fn rational_powers_resolve() {
        let k = TowerSpec::new(2, 8).radical("r", 15, "p").build().unwrap();
        let x = parse_and_eval(&k, "2^(3/5)").unwrap();
        assert!(k.equal(&x, &k.uniformizer_pow(9).unwrap()));
        assert_eq!(k.valuation(&x).unwrap(), val(3, 5));
        let y = parse_and_eval(&k, "1 + 2^(3/5)*1 + 1*2^(2/5)").unwrap();
        assert_eq!(k.valuation(&y).unwrap(), val(0, 1));
    }

    #[test]
    fn lambda_power() {
        let k = TowerSpec::new(3, 1).cyclotomic("lambda").radical("mu", 4, "lambda").build().unwrap();
        let x = parse_and_eval(&k, "lambda^(3/4)").unwrap();
        assert_eq!(k.valuation(&x).unwrap(), val(3, 8));
        assert!(parse_and_eval(&k, "lambda^(1/3)").is_err());
    }

    #[test]
    fn negative_base_odd_root() {
        let k = TowerSpec::new(2, 1).radical("r", 5, "-2").build().unwrap();
        let x = parse_and_eval(&k, "(-2)^(1/5)").unwrap();
        assert!(k.equal(&k.pow(&x, 5), &k.from_int(-2)));
    }

    #[test]
    fn parse_errors_carry_position() {
        let k = TowerField::unramified(2, 1).unwrap();
        match parse_and_eval(&k, "1 + $") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{:?}", other),
        }
        assert!(parse_and_eval(&k, "foo").is_err());
        assert!(parse_and_eval(&k, "(1+2").is_err());
    }

    #[test]
    fn division_and_negative_exponent() {
        let k = TowerField::unramified(3, 1).unwrap();
        let x = parse_and_eval(&k, "p^-2 * 9").unwrap();
        assert!(k.equal(&x, &k.one()));
    }
}
