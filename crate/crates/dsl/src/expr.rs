//! Algebra elements written as text, in the same format they print in:
//! `2*e.f + 1/2*x y^* - v`. A term is an optional rational coefficient
//! followed by `*`, then factors separated by spaces; a factor is a path
//! (or vertex) name, optionally followed by `^*` for its adjoint.

use std::sync::Arc;

use num_rational::BigRational;
use relgraph::{Algebra, Element, Scalar};

use crate::error::DslError;
use crate::syntax::is_name_char;

fn is_path_char(c: char) -> bool {
    is_name_char(c) || "[].".contains(c)
}

/// Parses `text` into an element of `alg`.
pub fn parse_element(alg: &Arc<Algebra>, text: &str) -> Result<Element, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut out = Element::zero(alg);
    skip(&mut i);
    if text.trim() == "0" && alg.graph().vertex("0").is_none() {
        return Ok(out);
    }
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        if chars[i] == '+' || chars[i] == '-' {
            negative = chars[i] == '-';
            i += 1;
            skip(&mut i);
        } else if !first {
            return Err(DslError::usage(format!("expected `+` or `-` at position {}", i + 1)));
        }
        first = false;
        let mut coef = Scalar::from_integer(1.into());
        if let Some((c, next)) = coefficient(&chars, i) {
            coef = c;
            i = next;
            skip(&mut i);
        }
        let mut term: Option<Element> = None;
        while i < chars.len() && is_path_char(chars[i]) {
            let start = i;
            while i < chars.len() && is_path_char(chars[i]) {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let path = alg
                .graph()
                .parse_path(&name)
                .map_err(|e| DslError::usage(e.to_string()))?;
            let factor = if chars.get(i) == Some(&'^') && chars.get(i + 1) == Some(&'*') {
                i += 2;
                Element::ghost_path(alg, path).map_err(|e| DslError::usage(e.to_string()))?
            } else {
                Element::path(alg, path)
            };
            term = Some(match term {
                None => factor,
                Some(t) => &t * &factor,
            });
            skip(&mut i);
        }
        let Some(term) = term else {
            return Err(DslError::usage(format!("expected a path at position {}", i + 1)));
        };
        if negative {
            coef = -coef;
        }
        out = &out + &term.scale(&coef);
    }
    Ok(out)
}

/// A coefficient `p` or `p/q` followed by `*` (but not `^*`), starting at
/// `i`; returns it with the index past the `*`.
fn coefficient(chars: &[char], mut i: usize) -> Option<(Scalar, usize)> {
    let start = i;
    while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
        i += 1;
    }
    let text: String = chars[start..i].iter().collect();
    while i < chars.len() && chars[i] == ' ' {
        i += 1;
    }
    if text.is_empty() || chars.get(i) != Some(&'*') {
        return None;
    }
    let value = match text.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
            if q == 0 {
                return None;
            }
            BigRational::new(p.into(), q.into())
        }
        None => BigRational::from_integer(text.parse::<i64>().ok()?.into()),
    };
    Some((value, i + 1))
}
