//! Facet files: a plain text format and a JSON document.
//!
//! Text:
//! ```text
//! # comment
//! m 4
//! 1 2 3
//! 1 2 4
//! ```
//! JSON: `{"m":4,"facets":[[1,2,3],[1,2,4]]}`.

use serde::Deserialize;

use crate::complex::{BuildOptions, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    /// JSON when the path ends in `.json`, text otherwise.
    pub fn from_path(path: &str) -> Format {
        if path.to_ascii_lowercase().ends_with(".json") {
            Format::Json
        } else {
            Format::Text
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_text(input: &str, opts: BuildOptions) -> Result<SimplicialComplex> {
    let mut m = None;
    let mut facets = Vec::new();
    for (n, raw) in input.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if m.is_none() {
            let mut parts = line.split_whitespace();
            if parts.next() != Some("m") {
                return Err(parse_err(line_no, "expected header 'm <count>'"));
            }
            let count = parts
                .next()
                .and_then(|c| c.parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, "missing vertex count"))?;
            if parts.next().is_some() {
                return Err(parse_err(line_no, "trailing tokens after vertex count"));
            }
            m = Some(count);
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("bad label '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if facet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(line_no, "labels must be strictly increasing"));
        }
        facets.push(facet);
    }
    let m = m.ok_or(Error::EmptyInput)?;
    SimplicialComplex::build_with(m, &facets, opts)
}

pub fn to_text(complex: &SimplicialComplex) -> String {
    let mut out = format!("m {}\n", complex.m());
    for f in complex.facet_lists() {
        let line: Vec<String> = f.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Deserialize)]
struct Document {
    m: usize,
    facets: Vec<Vec<usize>>,
}

pub fn parse_json(input: &str, opts: BuildOptions) -> Result<SimplicialComplex> {
    let doc: Document =
        serde_json::from_str(input).map_err(|e| parse_err(e.line(), e.to_string()))?;
    SimplicialComplex::build_with(doc.m, &doc.facets, opts)
}

pub fn to_json(complex: &SimplicialComplex) -> String {
    let mut s = serde_json::to_string(complex).expect("complex serializes");
    s.push('\n');
    s
}

pub fn parse(input: &str, format: Format, opts: BuildOptions) -> Result<SimplicialComplex> {
    match format {
        Format::Text => parse_text(input, opts),
        Format::Json => parse_json(input, opts),
    }
}

pub fn render(complex: &SimplicialComplex, format: Format) -> String {
    match format {
        Format::Text => to_text(complex),
        Format::Json => to_json(complex),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary_simplex, cycle};

    #[test]
    fn text_round_trip() {
        let src = "# 4-cycle\nm 4\n1 2\n2 3   # edge\n\n3 4\n1 4\n";
        let c = parse_text(src, BuildOptions::default()).unwrap();
        assert_eq!(c, cycle(4));
        let canon = to_text(&c);
        assert_eq!(canon, "m 4\n1 2\n1 4\n2 3\n3 4\n");
        assert_eq!(
            to_text(&parse_text(&canon, BuildOptions::default()).unwrap()),
            canon
        );
    }

    #[test]
    fn json_round_trip() {
        let c = boundary_simplex(3);
        let s = to_json(&c);
        assert_eq!(
            s,
            "{\"m\":4,\"facets\":[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]}\n"
        );
        assert_eq!(
            to_json(&parse_json(&s, BuildOptions::default()).unwrap()),
            s
        );
    }

    #[test]
    fn parse_errors() {
        let opts = BuildOptions::default();
        assert!(matches!(
            parse_text("1 2\n", opts),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("m 3\n1 x\n", opts),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("m 3\n2 1 3\n", opts),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_text("# nothing\n", opts), Err(Error::EmptyInput));
        assert_eq!(parse_text("m 3\n1 2\n", opts), Err(Error::MissingVertex(3)));
        assert!(parse_text(
            "m 3\n1 2\n",
            BuildOptions {
                allow_isolated: true
            }
        )
        .is_ok());
        assert!(matches!(
            parse_json("{\"m\":2}", opts),
            Err(Error::Parse { .. })
        ));
    }
}
