//! One-line family specifications such as `hypercube:3`, `multipartite:4,3,2`
//! or `cart:path:3xpath:3`.
//!
//! `join:` and `cart:` split their argument at the first top-level `+` or
//! `x`; parentheses group nested operands, e.g. `join:(cart:path:2xpath:2)+path:1`.

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;

/// `true` when the input looks like a family spec rather than graph6.
/// graph6 never contains `:`.
pub fn is_family_spec(input: &str) -> bool {
    input.contains(':')
}

pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let spec = strip_parens(spec.trim());
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::input(format!("family spec {spec:?} lacks a ':'")))?;
    let nums = || parse_numbers(name, arg);
    let one = || -> Result<usize> {
        match nums()?.as_slice() {
            [k] => Ok(*k),
            other => Err(Error::input(format!("{name} takes one number, got {}", other.len()))),
        }
    };
    match name {
        "path" => families::path(one()?),
        "cycle" => families::cycle(one()?),
        "complete" => families::complete(one()?),
        "star" => families::star(one()?),
        "empty" => Graph::empty(one()?),
        "hypercube" => families::hypercube(one()?),
        "crossedprism" => families::crossed_prism(one()?),
        "prism" => families::prism_complete(one()?),
        "gap" => families::gap_family(one()?),
        "ht" => families::bipartite_ht_family(one()?),
        "multipartite" => families::complete_multipartite(&nums()?),
        "kneser" => match nums()?.as_slice() {
            [n, r] => families::kneser(*n, *r),
            _ => Err(Error::input("kneser takes two numbers: kneser:n,r")),
        },
        "join" => {
            let (a, b) = split_top(arg, '+')?;
            families::join(&parse_family_spec(a)?, &parse_family_spec(b)?)
        }
        "cart" => {
            let (a, b) = split_top(arg, 'x')?;
            families::cartesian_product(&parse_family_spec(a)?, &parse_family_spec(b)?)
        }
        other => Err(Error::input(format!("unknown family {other:?}"))),
    }
}

fn parse_numbers(name: &str, arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::input(format!("{name}: {t:?} is not a natural number")))
        })
        .collect()
}

/// Removes one layer of enclosing parentheses when they match each other.
fn strip_parens(s: &str) -> &str {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return s;
    }
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && i + 1 < s.len() {
            return s;
        }
    }
    strip_parens(&s[1..s.len() - 1])
}

fn split_top(arg: &str, sep: char) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in arg.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Ok((&arg[..i], &arg[i + 1..])),
            _ => {}
        }
    }
    Err(Error::input(format!("expected two operands separated by {sep:?} in {arg:?}")))
}
