//! Reads the TeX expressions stored in the presets: sums and products of
//! Laurent monomials in t_1, t_2, ..., parentheses, `\frac{..}{..}` and
//! `\cdot`. Layout commands (`\left`, `\right`, `\\`, `&`, `\hspace`) are
//! skipped.

use ncvir::{Character, RationalCharacter};

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(usize),
    Caret,
    Plus,
    Minus,
    Open,
    Close,
    LBrace,
    RBrace,
    Frac,
    Cdot,
    Eq,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, CliError> {
    let bad = |msg: String| CliError::Display(msg);
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' | '&' => i += 1,
            // sentence-final period
            '.' if chars[i + 1..].iter().all(|c| c.is_whitespace()) => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            '{' => {
                out.push(Tok::LBrace);
                i += 1;
            }
            '}' => {
                out.push(Tok::RBrace);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '=' => {
                out.push(Tok::Eq);
                i += 1;
            }
            '0'..='9' => {
                // a digit directly after ^ is a one-digit exponent
                if out.last() == Some(&Tok::Caret) {
                    out.push(Tok::Num(c.to_digit(10).expect("digit").into()));
                    i += 1;
                    continue;
                }
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().map_err(|_| bad(format!("number {s} out of range")))?));
            }
            't' => {
                if chars.get(i + 1) != Some(&'_') {
                    return Err(bad(format!("expected t_<index> at offset {i}")));
                }
                i += 2;
                let idx = if chars.get(i) == Some(&'{') {
                    let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(|| bad("unclosed variable index".into()))?;
                    let s: String = chars[i + 1..i + close].iter().collect();
                    i += close + 1;
                    s
                } else {
                    let s = chars.get(i).map(|c| c.to_string()).unwrap_or_default();
                    i += 1;
                    s
                };
                let k: usize = idx.trim().parse().map_err(|_| bad(format!("bad variable index {idx:?}")))?;
                if k == 0 {
                    return Err(bad("variables are numbered from 1".into()));
                }
                out.push(Tok::Var(k - 1));
            }
            '\\' => {
                let start = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                match name.as_str() {
                    "" => {
                        // "\\" line break or an escaped symbol
                        i += 1;
                    }
                    "frac" => out.push(Tok::Frac),
                    "cdot" => out.push(Tok::Cdot),
                    "left" | "right" => {
                        if chars.get(i) == Some(&'.') {
                            i += 1;
                        }
                    }
                    "hspace" => {
                        let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(|| bad("unclosed \\hspace".into()))?;
                        i += close + 1;
                    }
                    other => return Err(bad(format!("unsupported command \\{other}"))),
                }
            }
            other => return Err(bad(format!("unexpected character {other:?} at offset {i}"))),
        }
    }
    Ok(out)
}

/// Numerator and denominator kept apart until the end.
#[derive(Clone)]
struct Frac {
    num: Character,
    den: Character,
}

impl Frac {
    fn whole(c: Character) -> Self {
        let den = Character::one(c.nvars());
        Frac { num: c, den }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    fn add(&self, o: &Frac, negate: bool) -> Frac {
        let right = &o.num * &self.den;
        let left = &self.num * &o.den;
        let num = if negate { &left - &right } else { &left + &right };
        Frac { num, den: &self.den * &o.den }
    }

    fn div(&self, o: &Frac) -> Frac {
        Frac { num: &self.num * &o.den, den: &self.den * &o.num }
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<(), CliError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(CliError::Display(format!("expected {t:?} at token {}, found {:?}", self.pos, self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Frac, CliError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            negate = true;
            self.pos += 1;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        let mut acc = Frac::whole(Character::zero(self.nvars)).add(&self.term()?, negate);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, false);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac, CliError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Cdot) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Open | Tok::Frac) => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, CliError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Frac::whole(Character::constant(self.nvars, n)))
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                if k >= self.nvars {
                    return Err(CliError::Display(format!("t_{} exceeds {} variables", k + 1, self.nvars)));
                }
                let e = self.exponent()?;
                let mut exps = vec![0; self.nvars];
                exps[k] = e;
                Ok(Frac::whole(Character::monomial(self.nvars, exps, 1)))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(x)
            }
            Some(Tok::Frac) => {
                self.pos += 1;
                self.expect(Tok::LBrace)?;
                let num = self.expr()?;
                self.expect(Tok::RBrace)?;
                self.expect(Tok::LBrace)?;
                let den = self.expr()?;
                self.expect(Tok::RBrace)?;
                Ok(num.div(&den))
            }
            other => Err(CliError::Display(format!("unexpected {other:?} at token {}", self.pos))),
        }
    }

    fn exponent(&mut self) -> Result<i32, CliError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let braced = self.peek() == Some(&Tok::LBrace);
        if braced {
            self.pos += 1;
        }
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            sign = -1;
            self.pos += 1;
        }
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(CliError::Display(format!("expected exponent at token {}", self.pos)));
        };
        self.pos += 1;
        if braced {
            self.expect(Tok::RBrace)?;
        }
        i32::try_from(n).map(|n| sign * n).map_err(|_| CliError::Display("exponent out of range".into()))
    }
}

/// Parses a displayed expression, optionally preceded by `=`, into a
/// rational character in `nvars` variables.
pub fn parse_display(src: &str, nvars: usize) -> Result<RationalCharacter, CliError> {
    let mut toks = tokenize(src)?;
    if toks.first() == Some(&Tok::Eq) {
        toks.remove(0);
    }
    let mut p = Parser { toks, pos: 0, nvars };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(CliError::Display(format!("trailing input at token {}", p.pos)));
    }
    RationalCharacter::new(x.num, x.den).map_err(CliError::Engine)
}
