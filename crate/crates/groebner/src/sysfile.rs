//! Plain-text polynomial system files and their rendering.
//!
//! Format, one item per line, `#` starting a comment anywhere:
//!
//! ```text
//! p 101
//! vars x,y,z
//! order degrevlex
//! x^2 + x + 1
//! x*y - x
//! ```
//!
//! The three header lines come first, in that order. Every following
//! nonempty line is one polynomial: `+`/`-` separate monomials, `^` raises
//! a variable to a decimal power, and `*` between factors is optional —
//! adjacency multiplies, so `2x^2y` equals `2*x^2*y`. Integer literals are
//! reduced modulo `p`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{Polynomial, Ring};
use crate::term::{Term, TermOrder, MAX_EXPONENT};

/// A parsed system file: the ring it declares, the variable names in
/// declaration order, and the polynomials.
#[derive(Debug, Clone)]
pub struct ParsedSystem {
    pub ring: Ring,
    pub names: Vec<String>,
    pub polys: Vec<Polynomial>,
}

fn parse_err(msg: impl Into<String>, line: usize, col: usize) -> Error {
    Error::Parse {
        msg: msg.into(),
        line,
        col,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(u128),
    Ident(String),
}

/// Tokenizes one polynomial line; columns are 1-based character offsets.
fn tokenize(line: &str, lineno: usize) -> Result<Vec<(Token, usize)>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '+' {
            tokens.push((Token::Plus, col));
            i += 1;
        } else if c == '-' {
            tokens.push((Token::Minus, col));
            i += 1;
        } else if c == '*' {
            tokens.push((Token::Star, col));
            i += 1;
        } else if c == '^' {
            tokens.push((Token::Caret, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let mut value: u128 = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(chars[i] as u128 - '0' as u128))
                    .ok_or_else(|| parse_err("integer literal too large", lineno, col))?;
                i += 1;
            }
            tokens.push((Token::Number(value), col));
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_continue(chars[i]) {
                i += 1;
            }
            tokens.push((Token::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(parse_err(format!("unexpected character '{c}'"), lineno, col));
        }
    }
    Ok(tokens)
}

/// Parses one polynomial line against the declared ring.
fn parse_poly_line(
    line: &str,
    lineno: usize,
    ring: &Ring,
    names: &[String],
) -> Result<Polynomial> {
    let field = ring.field();
    let n = ring.nvars();
    let tokens = tokenize(line, lineno)?;
    let mut parts: Vec<(u64, Term)> = Vec::new();
    let mut pos = 0;

    while pos < tokens.len() {
        // Sign prefix: required between monomials, optional on the first.
        let mut negative = false;
        match &tokens[pos].0 {
            Token::Plus => {
                pos += 1;
            }
            Token::Minus => {
                negative = true;
                pos += 1;
            }
            _ if pos == 0 => {}
            _ => {
                return Err(parse_err(
                    "expected '+' or '-' between monomials",
                    lineno,
                    tokens[pos].1,
                ));
            }
        }
        if pos >= tokens.len() {
            let (_, col) = tokens[tokens.len() - 1];
            return Err(parse_err("dangling sign", lineno, col));
        }

        // One product of factors: numbers and powered variables.
        let mut coeff: u64 = 1;
        let mut exps: Vec<u64> = vec![0; n];
        let mut saw_factor = false;
        loop {
            if pos >= tokens.len() {
                break;
            }
            let (token, col) = &tokens[pos];
            match token {
                Token::Number(v) => {
                    coeff = field.mul(coeff, field.from_u64((*v % field.modulus() as u128) as u64));
                    pos += 1;
                    saw_factor = true;
                }
                Token::Ident(name) => {
                    let var = names.iter().position(|x| x == name).ok_or_else(|| {
                        Error::UnknownVariable {
                            name: name.clone(),
                            line: lineno,
                            col: *col,
                        }
                    })?;
                    pos += 1;
                    let mut power: u64 = 1;
                    if pos < tokens.len() && tokens[pos].0 == Token::Caret {
                        let caret_col = tokens[pos].1;
                        pos += 1;
                        match tokens.get(pos) {
                            Some((Token::Number(v), ecol)) => {
                                if *v >= MAX_EXPONENT as u128 {
                                    return Err(parse_err(
                                        "exponent too large",
                                        lineno,
                                        *ecol,
                                    ));
                                }
                                power = *v as u64;
                                pos += 1;
                            }
                            _ => {
                                return Err(parse_err(
                                    "'^' must be followed by a number",
                                    lineno,
                                    caret_col,
                                ));
                            }
                        }
                    }
                    exps[var] += power;
                    if exps[var] >= MAX_EXPONENT as u64 {
                        return Err(parse_err("exponent too large", lineno, *col));
                    }
                    saw_factor = true;
                }
                Token::Star => {
                    pos += 1;
                    // A '*' must sit between factors.
                    match tokens.get(pos) {
                        Some((Token::Number(_), _)) | Some((Token::Ident(_), _)) => {}
                        _ => {
                            return Err(parse_err(
                                "'*' must be followed by a factor",
                                lineno,
                                *col,
                            ));
                        }
                    }
                }
                Token::Plus | Token::Minus => break,
                Token::Caret => {
                    return Err(parse_err("unexpected '^'", lineno, *col));
                }
            }
        }
        if !saw_factor {
            let (_, col) = tokens[pos.min(tokens.len() - 1)];
            return Err(parse_err("expected a monomial", lineno, col));
        }
        if negative {
            coeff = field.neg(coeff);
        }
        let term = Term::new(exps.into_iter().map(|e| e as u32).collect());
        parts.push((coeff, term));
    }

    if parts.is_empty() {
        return Err(parse_err("empty polynomial", lineno, 1));
    }
    ring.polynomial_from_residues(parts)
}

/// Parses a complete system document.
pub fn parse_system(text: &str) -> Result<ParsedSystem> {
    let mut field: Option<PrimeField> = None;
    let mut names: Option<Vec<String>> = None;
    let mut order: Option<TermOrder> = None;
    let mut ring: Option<Ring> = None;
    let mut polys: Vec<Polynomial> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim();
        let col = line.len() - line.trim_start().len() + 1;

        if field.is_none() {
            let rest = trimmed
                .strip_prefix("p ")
                .or_else(|| trimmed.strip_prefix("p\t"))
                .ok_or_else(|| parse_err("expected header 'p <modulus>'", lineno, col))?;
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| parse_err("invalid modulus", lineno, col))?;
            field = Some(PrimeField::new(p)?);
        } else if names.is_none() {
            let rest = trimmed
                .strip_prefix("vars ")
                .or_else(|| trimmed.strip_prefix("vars\t"))
                .ok_or_else(|| parse_err("expected header 'vars <list>'", lineno, col))?;
            let list: Vec<String> = rest
                .split(',')
                .map(|s| s.trim().to_string())
                .collect();
            if list.is_empty() || list.iter().any(|s| s.is_empty()) {
                return Err(parse_err("empty variable name", lineno, col));
            }
            for name in &list {
                let mut chars = name.chars();
                let head_ok = chars.next().map(is_ident_start).unwrap_or(false);
                if !head_ok || !chars.all(is_ident_continue) {
                    return Err(parse_err(
                        format!("invalid variable name '{name}'"),
                        lineno,
                        col,
                    ));
                }
            }
            for (i, name) in list.iter().enumerate() {
                if list[..i].contains(name) {
                    return Err(parse_err(
                        format!("duplicate variable '{name}'"),
                        lineno,
                        col,
                    ));
                }
            }
            names = Some(list);
        } else if order.is_none() {
            let rest = trimmed
                .strip_prefix("order ")
                .or_else(|| trimmed.strip_prefix("order\t"))
                .ok_or_else(|| parse_err("expected header 'order <name>'", lineno, col))?;
            let ord = match rest.trim() {
                "lex" => TermOrder::Lex,
                "deglex" => TermOrder::DegLex,
                "degrevlex" => TermOrder::DegRevLex,
                other => {
                    return Err(parse_err(
                        format!("unknown order '{other}' (expected lex, deglex, degrevlex)"),
                        lineno,
                        col,
                    ));
                }
            };
            let (Some(f), Some(nm)) = (field, names.as_ref()) else {
                unreachable!("headers are parsed in order: p, vars, order");
            };
            order = Some(ord);
            ring = Some(Ring::new(f, nm.len(), ord));
        } else {
            let r = ring.as_ref().expect("header complete");
            let nm = names.as_ref().expect("header complete");
            polys.push(parse_poly_line(line, lineno, r, nm)?);
        }
    }

    let ring = ring.ok_or_else(|| parse_err("missing header", text.lines().count() + 1, 1))?;
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(ParsedSystem {
        ring,
        names: names.expect("header complete"),
        polys,
    })
}

/// Renders a term like `x*z^2`; the constant term renders as `1`.
pub fn term_string(t: &Term, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in t.exponents().iter().enumerate() {
        if e == 1 {
            parts.push(names[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Renders one polynomial, terms descending under its ring order.
///
/// With `signed` false every coefficient prints as its least non-negative
/// residue and terms join with `+`; with `signed` true coefficients print
/// as balanced representatives in `(-p/2, p/2]` and negative ones join
/// with `-`.
pub fn poly_string(f: &Polynomial, names: &[String], signed: bool) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let field = f.ring().field();
    let mut out = String::new();
    for (i, (c, t)) in f.terms().iter().enumerate() {
        let (negative, magnitude) = if signed {
            let s = field.signed(*c);
            (s < 0, s.unsigned_abs())
        } else {
            (false, *c)
        };
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        if t.is_one() {
            out.push_str(&magnitude.to_string());
        } else if magnitude == 1 {
            out.push_str(&term_string(t, names));
        } else {
            out.push_str(&format!("{}*{}", magnitude, term_string(t, names)));
        }
    }
    out
}

/// Renders a full system document that [`parse_system`] reads back.
pub fn render_system(ring: &Ring, names: &[String], polys: &[Polynomial], signed: bool) -> String {
    let mut out = format!(
        "p {}\nvars {}\norder {}\n",
        ring.field().modulus(),
        names.join(","),
        ring.order().name()
    );
    for f in polys {
        out.push_str(&poly_string(f, names, signed));
        out.push('\n');
    }
    out
}
