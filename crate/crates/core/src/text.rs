//! Shared tokenizer for the polynomial and Weyl-element text grammar.
//!
//! A term is an optional sign, an optional rational coefficient and a list of
//! factors `x<i>` / `d<i>` with optional `^<e>`, separated by whitespace or
//! `*`. Terms are joined by `+` or `-`. Variable indices are 1-based.

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{One, Signed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum VarKind {
    X,
    D,
}

#[derive(Debug)]
pub(crate) struct RawTerm {
    pub coeff: Rational,
    /// factors in the order written: (kind, 0-based index, exponent)
    pub factors: Vec<(VarKind, usize, u32)>,
}

pub(crate) fn parse_terms(src: &str, nvars: usize, allow_d: bool) -> Result<Vec<RawTerm>> {
    let s: Vec<char> = src.chars().collect();
    let mut pos = 0;
    let mut out = Vec::new();
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at column {at} in {src:?}"));

    let skip_ws = |pos: &mut usize| {
        while *pos < s.len() && s[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == s.len() {
        return Err(err("empty expression", 0));
    }
    let mut first = true;
    while pos < s.len() {
        skip_ws(&mut pos);
        let mut negative = false;
        let mut saw_sign = false;
        while pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
            if s[pos] == '-' {
                negative = !negative;
            }
            saw_sign = true;
            pos += 1;
            skip_ws(&mut pos);
        }
        if !first && !saw_sign {
            return Err(err("expected '+' or '-'", pos));
        }
        first = false;

        let mut coeff = Rational::one();
        let mut have_factor = false;
        if pos < s.len() && s[pos].is_ascii_digit() {
            let start = pos;
            while pos < s.len() && s[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut lit: String = s[start..pos].iter().collect();
            if pos < s.len() && s[pos] == '/' {
                pos += 1;
                let ds = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                if ds == pos {
                    return Err(err("missing denominator", pos));
                }
                lit.push('/');
                lit.extend(&s[ds..pos]);
            }
            coeff = parse_rational(&lit)?;
            have_factor = true;
        }

        let mut factors = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
            if pos >= s.len() || !(s[pos] == 'x' || s[pos] == 'd') {
                break;
            }
            let kind = if s[pos] == 'x' { VarKind::X } else { VarKind::D };
            if kind == VarKind::D && !allow_d {
                return Err(err("differential symbol in a commutative polynomial", pos));
            }
            pos += 1;
            let start = pos;
            while pos < s.len() && s[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err("variable needs an index", pos));
            }
            let idx: usize = s[start..pos].iter().collect::<String>().parse().unwrap();
            if idx == 0 || idx > nvars {
                return Err(err(&format!("variable index {idx} out of range 1..={nvars}"), start));
            }
            let mut exp = 1u32;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                let es = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                if es == pos {
                    return Err(err("missing exponent", pos));
                }
                exp = s[es..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| err("exponent too large", es))?;
            }
            factors.push((kind, idx - 1, exp));
            have_factor = true;
        }
        if !have_factor {
            return Err(err("expected a term", pos));
        }
        if negative {
            coeff = -coeff;
        }
        out.push(RawTerm { coeff, factors });
        skip_ws(&mut pos);
        if pos < s.len() && !(s[pos] == '+' || s[pos] == '-') {
            return Err(err(&format!("unexpected character {:?}", s[pos]), pos));
        }
    }
    Ok(out)
}

/// Formats a list of (coefficient, factor string) pairs, highest term first.
pub(crate) fn format_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs == Rational::one() {
            out.push_str(mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push(' ');
            out.push_str(mono);
        }
    }
    out
}

pub(crate) fn format_factors(exps: &[u32], symbol: char, out: &mut Vec<String>) {
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(format!("{symbol}{}", i + 1)),
            _ => out.push(format!("{symbol}{}^{e}", i + 1)),
        }
    }
}
