//! Line-based PIP format.
//!
//! ```text
//! # comment
//! pip 7
//! base 1
//! order 1 3
//! incons 3 7
//! ```
//!
//! `order a b` is a cover `a < b`, `incons a b` a generating inconsistent
//! pair. An optional `base` record (before any relation) sets the label
//! offset, overriding the caller's default.

use crate::error::{Error, Result};
use crate::pip::Pip;

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_pip(text: &str, default_base: usize) -> Result<Pip> {
    let mut n: Option<usize> = None;
    let mut base = default_base;
    let mut covers = Vec::new();
    let mut incons = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let numbers: Vec<usize> = tokens[1..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| parse_error(line, format!("`{t}` is not a label"))))
            .collect::<Result<_>>()?;
        let arity = |want: usize| {
            if numbers.len() == want {
                Ok(())
            } else {
                Err(parse_error(line, format!("`{}` takes {want} argument(s)", tokens[0])))
            }
        };
        match (tokens[0], n) {
            ("pip", None) => {
                arity(1)?;
                n = Some(numbers[0]);
            }
            ("pip", Some(_)) => return Err(parse_error(line, "duplicate `pip` header")),
            (_, None) => return Err(parse_error(line, "expected `pip <n>` header first")),
            ("base", Some(_)) => {
                arity(1)?;
                if !covers.is_empty() || !incons.is_empty() {
                    return Err(parse_error(line, "`base` must precede relations"));
                }
                base = numbers[0];
            }
            (kind @ ("order" | "incons"), Some(size)) => {
                arity(2)?;
                let mut pair = [0; 2];
                for (slot, &label) in pair.iter_mut().zip(&numbers) {
                    *slot = label
                        .checked_sub(base)
                        .filter(|&x| x < size)
                        .ok_or_else(|| parse_error(line, format!("label {label} out of range")))?;
                }
                let target = if kind == "order" { &mut covers } else { &mut incons };
                target.push((pair[0], pair[1]));
            }
            (other, Some(_)) => return Err(parse_error(line, format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing `pip <n>` header"))?;
    Pip::new(n, &covers, &incons)
}

/// Covers and minimal inconsistent pairs, labels shifted by `base`.
pub fn write_pip(p: &Pip, base: usize) -> String {
    let mut out = format!("pip {}\n", p.len());
    if base != 0 {
        out += &format!("base {base}\n");
    }
    for (a, b) in p.hasse_covers() {
        out += &format!("order {} {}\n", a + base, b + base);
    }
    for (a, b) in p.minimal_inconsistent_pairs() {
        out += &format!("incons {} {}\n", a + base, b + base);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    #[test]
    fn roundtrip() {
        let p = p7();
        for base in [0, 1] {
            assert_eq!(parse_pip(&write_pip(&p, base), 0).unwrap(), p);
        }
        assert_eq!(parse_pip("pip 0\n", 0).unwrap(), Pip::antichain(0));
    }

    #[test]
    fn comments_and_base() {
        let text = "# seven\npip 2  # header\nbase 1\n\norder 1 2 # cover\n";
        assert_eq!(parse_pip(text, 0).unwrap(), Pip::chain(2));
        assert_eq!(parse_pip("pip 2\norder 1 2\n", 1).unwrap(), Pip::chain(2));
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("pip 2\norder 0 x\n", 2),
            ("order 0 1\n", 1),
            ("pip 2\norder 0 5\n", 2),
            ("pip 2\nfoo 1\n", 2),
            ("pip 2\norder 0\n", 2),
            ("pip 2\npip 3\n", 2),
            ("pip 2\norder 0 1\nbase 1\n", 3),
        ];
        for (text, line) in cases {
            match parse_pip(text, 0) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_pip("pip 2\norder 0 1\norder 1 0\n", 0), Err(Error::Cycle(..))));
        assert!(matches!(parse_pip("", 0), Err(Error::Parse { line: 0, .. })));
    }
}
