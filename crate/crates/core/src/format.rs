//! Text formats: MEL v1 graphs, divisors and scrambles.
//!
//! MEL v1: a header line `n m`, then `m` lines `u v [k]` with `k` defaulting
//! to 1. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-comment lines, each as its 1-based line number and `(column, token)` pairs.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain([(raw.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push((s + 1, &raw[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        Some((i + 1, tokens))
    })
}

fn number<T: std::str::FromStr>(line: usize, (col, tok): (usize, &str), what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_error(line, col, format!("expected {what}, found `{tok}`")))
}

pub fn parse_mel(text: &str) -> Result<Multigraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing header line `n m`"))?;
    if header.len() != 2 {
        let col = header.get(2).map_or(1, |t| t.0);
        return Err(parse_error(hline, col, "header must be `n m`"));
    }
    let n: usize = number(hline, header[0], "vertex count")?;
    let m: usize = number(hline, header[1], "edge line count")?;
    if n == 0 {
        return Err(parse_error(
            hline,
            header[0].0,
            "vertex count must be at least 1",
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(parse_error(
                line,
                toks[0].0,
                format!("more than {m} edge lines"),
            ));
        }
        if !(2..=3).contains(&toks.len()) {
            let col = toks.get(3).map_or(toks[0].0, |t| t.0);
            return Err(parse_error(line, col, "edge line must be `u v [k]`"));
        }
        let u: usize = number(line, toks[0], "vertex")?;
        let v: usize = number(line, toks[1], "vertex")?;
        let k: u32 = match toks.get(2) {
            Some(&t) => number(line, t, "multiplicity")?,
            None => 1,
        };
        for (w, tok) in [(u, toks[0]), (v, toks[1])] {
            if w >= n {
                return Err(parse_error(
                    line,
                    tok.0,
                    format!("vertex {w} out of range 0..{n}"),
                ));
            }
        }
        if u == v {
            return Err(parse_error(
                line,
                toks[0].0,
                format!("loop edge at vertex {u}"),
            ));
        }
        if k < 1 {
            return Err(parse_error(
                line,
                toks[2].0,
                "multiplicity must be at least 1",
            ));
        }
        edges.push((u, v, k));
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Multigraph::from_edges(n, &edges)
}

/// Sorted `u < v` lines with accumulated multiplicities; `k` is always written.
pub fn write_mel(g: &Multigraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v, k) in edges {
        writeln!(out, "{u} {v} {k}").unwrap();
    }
    out
}

/// `n` followed by `n` integers, whitespace separated (newlines allowed).
pub fn parse_divisor(text: &str) -> Result<Vec<i64>> {
    let mut tokens =
        content_lines(text).flat_map(|(line, toks)| toks.into_iter().map(move |t| (line, t)));
    let (line, first) = tokens
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing chip count"))?;
    let n: usize = number(line, first, "chip count")?;
    let mut chips = Vec::with_capacity(n);
    for (line, tok) in tokens {
        if chips.len() == n {
            return Err(parse_error(
                line,
                tok.0,
                format!("more than {n} chip values"),
            ));
        }
        chips.push(number(line, tok, "integer")?);
    }
    if chips.len() != n {
        return Err(parse_error(
            line,
            1,
            format!("expected {n} chip values, found {}", chips.len()),
        ));
    }
    Ok(chips)
}

pub fn write_divisor(chips: &[i64]) -> String {
    let body: Vec<String> = chips.iter().map(i64::to_string).collect();
    format!("{}\n{}\n", chips.len(), body.join(" "))
}

/// One egg per line, vertex ids separated by whitespace.
pub fn parse_eggs(text: &str, n: usize) -> Result<Vec<VertexSet>> {
    let mut eggs = Vec::new();
    for (line, toks) in content_lines(text) {
        let mut egg = VertexSet::empty(n);
        for tok in toks {
            let v: usize = number(line, tok, "vertex")?;
            if v >= n {
                return Err(parse_error(
                    line,
                    tok.0,
                    format!("vertex {v} out of range 0..{n}"),
                ));
            }
            egg.insert(v);
        }
        eggs.push(egg);
    }
    Ok(eggs)
}

pub fn write_eggs(eggs: &[VertexSet]) -> String {
    let mut out = String::new();
    for egg in eggs {
        let parts: Vec<String> = egg.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::hypercube;

    #[test]
    fn mel_round_trip() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(parse_mel(&write_mel(&q3)).unwrap(), q3);
    }

    #[test]
    fn mel_defaults_and_comments() {
        let g = parse_mel("# doubled edge\n3 3\n0 1\n1 0 1\n\n1 2 4\n").unwrap();
        assert_eq!(g.mult(0, 1), 2);
        assert_eq!(g.mult(1, 2), 4);
        assert_eq!(write_mel(&g), "3 2\n0 1 2\n1 2 4\n");
    }

    #[test]
    fn mel_errors_carry_position() {
        match parse_mel("") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_mel("3 1\n0  x\n") {
            Err(Error::Parse {
                line: 2, column: 4, ..
            }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_mel("2 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_mel("2 1\n0 2\n"),
            Err(Error::Parse { column: 3, .. })
        ));
        assert!(matches!(parse_mel("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_mel("2 1\n0 1 0\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn divisor_round_trip() {
        let d = vec![-2, 2, 1, 2, 1, 0, 0, 0];
        assert_eq!(parse_divisor(&write_divisor(&d)).unwrap(), d);
        assert!(parse_divisor("3 1 2").is_err());
        assert!(parse_divisor("1 1 2").is_err());
    }

    #[test]
    fn eggs_round_trip() {
        let eggs = parse_eggs("0 4\n# spoke\n1 5\n", 8).unwrap();
        assert_eq!(eggs.len(), 2);
        assert_eq!(write_eggs(&eggs), "0 4\n1 5\n");
        assert!(parse_eggs("0 9\n", 8).is_err());
    }
}
