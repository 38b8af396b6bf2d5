//! Plain-text pc presentation format.
//!
//! ```text
//! # extraspecial group of order 27
//! prime 3
//! gens 3
//! comm 2 1 = g3^1
//! ```
//!
//! Generators are 1-based. `power i = w` sets `g_i^p`, `comm j i = w` sets
//! `[g_j, g_i]` (`j > i`). Words are `g<k>^<e>` factors joined by `*`; an
//! empty word (or `1`) is the identity. Unlisted relations are trivial.
//! Rendering lists only nontrivial relations, in canonical order, so that two
//! equal presentations always render identically.

use std::fmt::Write;

use super::presentation::{PcElement, PcPresentation, Relation};
use crate::error::{Error, Result};

pub fn render_pcp(pres: &PcPresentation) -> String {
    let mut out = String::new();
    writeln!(out, "prime {}", pres.p()).unwrap();
    writeln!(out, "gens {}", pres.ngens()).unwrap();
    for (rel, w) in pres.nontrivial_relations() {
        match rel {
            Relation::Power(i) => writeln!(out, "power {} = {}", i + 1, render_word(w)),
            Relation::Comm(j, i) => writeln!(out, "comm {} {} = {}", j + 1, i + 1, render_word(w)),
        }
        .unwrap();
    }
    out
}

fn render_word(w: &PcElement) -> String {
    if w.is_identity() {
        String::new()
    } else {
        w.to_string()
    }
}

struct Line<'a> {
    text: &'a str,
    offset: usize,
}

type ParsedRelation<'l, 'a> = (&'l Line<'a>, Relation, Vec<(usize, u32)>);

pub fn parse_pcp(text: &str) -> Result<PcPresentation> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let content = raw.split('#').next().unwrap().trim_end();
        let lead = content.len() - content.trim_start().len();
        if !content.trim().is_empty() {
            lines.push(Line {
                text: content.trim(),
                offset: offset + lead,
            });
        }
        offset += raw.len();
    }

    let mut prime: Option<u32> = None;
    let mut gens: Option<usize> = None;
    let mut relations: Vec<ParsedRelation> = Vec::new();
    for line in &lines {
        let (head, rest) = line.text.split_once(char::is_whitespace).unwrap_or((line.text, ""));
        match head {
            "prime" => {
                if prime.is_some() {
                    return Err(Error::parse(line.offset, "duplicate `prime`"));
                }
                prime = Some(parse_num(rest.trim(), line.offset, "prime")?);
            }
            "gens" => {
                if gens.is_some() {
                    return Err(Error::parse(line.offset, "duplicate `gens`"));
                }
                gens = Some(parse_num(rest.trim(), line.offset, "generator count")?);
            }
            "power" | "comm" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(line.offset, "expected `=`"))?;
                let idx: Vec<usize> = lhs
                    .split_whitespace()
                    .map(|t| parse_num::<usize>(t, line.offset, "generator index"))
                    .collect::<Result<_>>()?;
                if idx.contains(&0) {
                    return Err(Error::parse(line.offset, "generator indices are 1-based"));
                }
                let rel = match (head, idx.as_slice()) {
                    ("power", [i]) => Relation::Power(i - 1),
                    ("comm", [j, i]) => Relation::Comm(j - 1, i - 1),
                    _ => {
                        return Err(Error::parse(
                            line.offset,
                            format!("wrong number of indices for `{head}`"),
                        ))
                    }
                };
                let word_pos = line.offset + head.len() + 1 + lhs.len() + 1;
                relations.push((line, rel, parse_word(rhs, word_pos)?));
            }
            other => {
                return Err(Error::parse(line.offset, format!("unknown keyword `{other}`")));
            }
        }
    }
    let p = prime.ok_or_else(|| Error::parse(text.len(), "missing `prime`"))?;
    let n = gens.ok_or_else(|| Error::parse(text.len(), "missing `gens`"))?;
    let mut pres = PcPresentation::elementary_abelian(p, n)?;
    let mut seen = std::collections::HashSet::new();
    for (line, rel, word) in relations {
        if !seen.insert(rel) {
            return Err(Error::parse(line.offset, format!("relation {rel} given twice")));
        }
        let wrap = |e: Error| Error::parse(line.offset, e.to_string());
        pres = match rel {
            Relation::Power(i) => pres.with_power(i, &word).map_err(wrap)?,
            Relation::Comm(j, i) => pres.with_comm(j, i, &word).map_err(wrap)?,
        };
    }
    Ok(pres)
}

fn parse_num<T: std::str::FromStr>(s: &str, pos: usize, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(pos, format!("expected {what}, found `{s}`")))
}

/// Parses `g2^1*g5^3` into 0-based `(generator, exponent)` pairs.
pub(crate) fn parse_word(s: &str, pos: usize) -> Result<Vec<(usize, u32)>> {
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for factor in t.split('*') {
        let f = factor.trim();
        let body = f
            .strip_prefix('g')
            .ok_or_else(|| Error::parse(pos, format!("factor `{f}` must look like g<k>^<e>")))?;
        let (k, e) = body.split_once('^').unwrap_or((body, "1"));
        let k: usize = parse_num(k.trim(), pos, "generator index")?;
        let e: u32 = parse_num(e.trim(), pos, "exponent")?;
        if k == 0 {
            return Err(Error::parse(pos, "generator indices are 1-based"));
        }
        if e != 0 {
            out.push((k - 1, e));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = PcPresentation::elementary_abelian(5, 4)
            .unwrap()
            .with_power(0, &[(3, 2)])
            .unwrap()
            .with_comm(1, 0, &[(2, 1), (3, 4)])
            .unwrap();
        let text = render_pcp(&g);
        assert_eq!(text, "prime 5\ngens 4\npower 1 = g4^2\ncomm 2 1 = g3^1*g4^4\n");
        assert_eq!(parse_pcp(&text).unwrap(), g);
    }

    #[test]
    fn order_of_lines_does_not_matter() {
        let a = parse_pcp("comm 2 1 = g3\n# c\ngens 3\nprime 3\n").unwrap();
        let b = parse_pcp("prime 3\ngens 3\ncomm 2 1 = g3^1\npower 2 =\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(render_pcp(&a), render_pcp(&b));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_pcp("prime 3\ngens 2\nfoo 1\n") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 15),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_pcp("prime 4\ngens 1\n").is_err());
        assert!(parse_pcp("prime 3\ngens 2\ncomm 1 2 = \n").is_err());
        assert!(parse_pcp("prime 3\ngens 2\npower 1 = g1^1\n").is_err());
        assert!(parse_pcp("prime 3\ngens 2\npower 1 = g2^1\npower 1 = g2^2\n").is_err());
        assert!(parse_pcp("gens 2\n").is_err());
    }

    #[test]
    fn trivial_group_text() {
        let t = parse_pcp("prime 2\ngens 0\n").unwrap();
        assert_eq!(t.ngens(), 0);
    }
}
