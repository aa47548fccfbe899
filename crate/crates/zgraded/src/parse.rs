//! Text formats: signatures, expressions, and truncation tags.
//!
//! The expression grammar (no juxtaposition multiplication):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | name | name '^' uint | '(' expr ')' | '-' factor
//! ```
//!
//! Every parse failure is a positioned diagnostic; no input panics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::filtration::{Flavor, Truncation};
use crate::series::{series_linear, series_mul, series_pow, GradedSeries};
use crate::signature::WeightSignature;
use crate::Coeff;

/// Parses the `.gsig` signature format: statements separated by `;` or
/// newlines, `#` starts a comment, and each statement is either
/// `zero: a, b` or `vars: name:weight, ...`.
pub fn parse_signature(text: &str) -> Result<WeightSignature, Error> {
    let mut zero_vars: Vec<String> = Vec::new();
    let mut graded_vars: Vec<(String, i64)> = Vec::new();

    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        let content = raw.split('#').next().unwrap_or("");
        for stmt in split_with_cols(content, ';') {
            let (col0, body) = stmt;
            let trimmed = body.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = col0 + leading_ws(body) + 1;
            let Some((head, rest)) = trimmed.split_once(':') else {
                return Err(Error::parse(
                    line,
                    col,
                    "expected `zero:` or `vars:` statement",
                ));
            };
            match head.trim() {
                "zero" => {
                    for item in rest.split(',') {
                        let name = item.trim();
                        if name.is_empty() {
                            continue;
                        }
                        check_name(name, line, col)?;
                        zero_vars.push(name.to_string());
                    }
                }
                "vars" => {
                    for item in rest.split(',') {
                        let entry = item.trim();
                        if entry.is_empty() {
                            continue;
                        }
                        let Some((name, w)) = entry.split_once(':') else {
                            return Err(Error::parse(
                                line,
                                col,
                                format!("expected `name:weight`, found `{entry}`"),
                            ));
                        };
                        let name = name.trim();
                        check_name(name, line, col)?;
                        let weight: i64 = w.trim().parse().map_err(|_| {
                            Error::parse(
                                line,
                                col,
                                format!("invalid weight `{}`", w.trim()),
                            )
                        })?;
                        graded_vars.push((name.to_string(), weight));
                    }
                }
                other => {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("unknown section `{other}` (expected `zero` or `vars`)"),
                    ));
                }
            }
        }
    }
    WeightSignature::new(zero_vars, graded_vars)
}

fn split_with_cols(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push((start, &s[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &s[start..]));
    out
}

fn leading_ws(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

fn check_name(name: &str, line: usize, col: usize) -> Result<(), Error> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::parse(line, col, format!("invalid name `{name}`")))
    }
}

/// Parses a truncation flag value like `UF:3` or `F:0`.
pub fn parse_trunc(text: &str) -> Result<Truncation, Error> {
    let err = |msg: String| Error::parse(1, 1, msg);
    let Some((flavor, order)) = text.split_once(':') else {
        return Err(err(format!(
            "expected `flavor:order`, found `{text}`"
        )));
    };
    let flavor = match flavor.trim() {
        "F" => Flavor::F,
        "UF" => Flavor::UF,
        other => return Err(err(format!("unknown flavor `{other}`"))),
    };
    let order = order
        .trim()
        .parse()
        .map_err(|_| err(format!("invalid order `{}`", order.trim())))?;
    Ok(Truncation { flavor, order })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, Error> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = match c {
            '+' => {
                bump(&mut chars);
                Tok::Plus
            }
            '-' => {
                bump(&mut chars);
                Tok::Minus
            }
            '*' => {
                bump(&mut chars);
                Tok::Star
            }
            '^' => {
                bump(&mut chars);
                Tok::Caret
            }
            '/' => {
                bump(&mut chars);
                Tok::Slash
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                    s.push(bump(&mut chars));
                }
                Tok::Int(s.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while matches!(chars.peek(),
                    Some(d) if d.is_ascii_alphanumeric() || *d == '_')
                {
                    s.push(bump(&mut chars));
                }
                Tok::Name(s)
            }
            other => {
                return Err(Error::parse(
                    tl,
                    tc,
                    format!("unexpected character `{other}`"),
                ));
            }
        };
        out.push(Spanned {
            tok,
            line: tl,
            col: tc,
        });
    }
    Ok(out)
}

struct Parser<'a> {
    sig: &'a WeightSignature,
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: String) -> Error {
        let (line, col) = self.here();
        Error::parse(line, col, msg)
    }

    fn expr(&mut self) -> Result<GradedSeries, Error> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.next();
            let rhs = self.term()?;
            let b = if negate { -Coeff::one() } else { Coeff::one() };
            acc = series_linear(self.sig, &Coeff::one(), &acc, &b, &rhs)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedSeries, Error> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            let rhs = self.factor()?;
            acc = series_mul(self.sig, &acc, &rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GradedSeries, Error> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                self.next();
                Ok(self.factor()?.neg())
            }
            Some(Tok::LParen) => {
                self.next();
                let inner = self.expr()?;
                match self.next().map(|s| s.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`".into())),
                }
            }
            Some(Tok::Int(n)) => {
                self.next();
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.next();
                    let pos = self.here();
                    match self.next().map(|s| s.tok) {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            Ok(GradedSeries::constant(Coeff::new(n, d)))
                        }
                        Some(Tok::Int(_)) => Err(Error::parse(
                            pos.0,
                            pos.1,
                            "zero denominator",
                        )),
                        _ => Err(self.err("expected denominator".into())),
                    }
                } else {
                    Ok(GradedSeries::constant(Coeff::from_integer(n)))
                }
            }
            Some(Tok::Name(name)) => {
                let pos = self.here();
                self.next();
                let idx = self.sig.var_index(&name).ok_or_else(|| {
                    Error::parse(pos.0, pos.1, format!("unknown variable `{name}`"))
                })?;
                let mut exp = 1u64;
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.next();
                    exp = self.exponent()?;
                }
                let v = GradedSeries::var(self.sig, self.sig.name(idx))?;
                series_pow(self.sig, &v, exp)
            }
            _ => Err(self.err("expected a factor".into())),
        }
    }

    /// An exponent is an unsigned integer; a signed or parenthesized
    /// negative value is diagnosed specifically.
    fn exponent(&mut self) -> Result<u64, Error> {
        let pos = self.here();
        let neg_err = || Error::parse(pos.0, pos.1, "negative exponent");
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.next();
                if matches!(self.peek(), Some(Tok::Slash)) {
                    return Err(self.err("fractional exponent".into()));
                }
                u64::try_from(&n).map_err(|_| {
                    Error::parse(pos.0, pos.1, "exponent too large")
                })
            }
            Some(Tok::Minus) => Err(neg_err()),
            Some(Tok::LParen) => {
                self.next();
                if matches!(self.peek(), Some(Tok::Minus)) {
                    return Err(neg_err());
                }
                let e = self.exponent()?;
                match self.next().map(|s| s.tok) {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("expected `)`".into())),
                }
            }
            _ => Err(self.err("expected an exponent".into())),
        }
    }
}

/// Parses an expression over `sig` and lowers it through the series
/// operations, so Koszul signs and odd nilpotence apply during lowering.
pub fn parse_expr(sig: &WeightSignature, text: &str) -> Result<GradedSeries, Error> {
    let toks = lex(text)?;
    let end = {
        let lines: Vec<&str> = text.lines().collect();
        let line = lines.len().max(1);
        let col = lines.last().map(|l| l.chars().count()).unwrap_or(0) + 1;
        (line, col)
    };
    let mut p = Parser {
        sig,
        toks,
        pos: 0,
        end,
    };
    if p.peek().is_none() {
        return Err(p.err("empty expression".into()));
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after expression".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff;
    use crate::series::series_mul;

    #[test]
    fn signature_formats() {
        let sig = parse_signature("zero: x; vars: xi1:1, xi2:2, eta1:-3").unwrap();
        assert_eq!(sig.alpha(), vec![1, 2]);
        assert_eq!(sig.beta(), vec![3]);
        assert_eq!(sig.num_zero_vars(), 1);

        let sig = parse_signature("vars: theta:1").unwrap();
        assert_eq!(sig.num_zero_vars(), 0);
        assert!(sig.is_odd(0));

        assert!(matches!(
            parse_signature("vars: a:0"),
            Err(Error::ZeroWeight(_))
        ));

        // comments and multi-line layout
        let sig = parse_signature("# model\nzero: x\nvars: xi:2 # even\nvars: eta:-2\n")
            .unwrap();
        assert_eq!(sig.num_vars(), 3);
    }

    #[test]
    fn expr_examples() {
        let sig = parse_signature("zero: x; vars: xi1:1, eta1:-3").unwrap();
        let f = parse_expr(&sig, "3/2*x^2*xi1 - eta1").unwrap();
        assert_eq!(f.num_terms(), 2);

        let sig2 = parse_signature("vars: theta1:1, theta2:1").unwrap();
        let f = parse_expr(&sig2, "theta2*theta1").unwrap();
        let t1t2 = series_mul(
            &sig2,
            &GradedSeries::var(&sig2, "theta1").unwrap(),
            &GradedSeries::var(&sig2, "theta2").unwrap(),
        )
        .unwrap();
        assert_eq!(f, t1t2.neg());
        assert!(parse_expr(&sig2, "theta1*theta1").unwrap().is_zero());
    }

    #[test]
    fn expr_errors_are_positioned() {
        let sig = parse_signature("vars: xi:2, eta:-2").unwrap();
        match parse_expr(&sig, "xi^(-1)") {
            Err(Error::Parse { line: 1, col, msg }) => {
                assert_eq!(col, 4);
                assert!(msg.contains("negative exponent"));
            }
            other => panic!("expected negative exponent error, got {other:?}"),
        }
        assert!(matches!(
            parse_expr(&sig, "xi + zeta"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_expr(&sig, ""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_expr(&sig, "xi xi"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expr(&sig, "1/0"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expr(&sig, "xi^1/2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn precedence_and_parens() {
        let sig = parse_signature("zero: x").unwrap();
        let f = parse_expr(&sig, "2*x + 3*x^2").unwrap();
        let g = parse_expr(&sig, "x*(2 + 3*x)").unwrap();
        assert_eq!(f, g);
        let h = parse_expr(&sig, "-x^2").unwrap();
        assert_eq!(h, parse_expr(&sig, "0 - x*x").unwrap());
        assert_eq!(
            parse_expr(&sig, "7/2").unwrap(),
            GradedSeries::constant(coeff(7, 2))
        );
    }
}
