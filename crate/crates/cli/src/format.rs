//! Line-oriented graph file format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v w        (m lines; 0-based endpoints, w a positive integer or p/q)
//! ```
//!
//! Edge ids are assigned in file order, so cut reports can be traced back to
//! input lines. `parse_graph(serialize_graph(g))` reproduces `g` exactly for
//! any graph whose edge ids are dense and in edge order, which covers every
//! parsed or generated graph.

use std::fmt;
use std::str::FromStr;

use kway_core::rational::Rational;
use kway_core::Graph;

/// A malformed input file, with the 1-based offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses a weight token: a positive decimal integer or `p/q`.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    Rational::from_str(token).map_err(|_| format!("invalid rational '{token}'"))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(err(line_no, "expected header 'n m'"));
                }
                let n = tokens[0]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid vertex count '{}'", tokens[0])))?;
                let m = tokens[1]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid edge count '{}'", tokens[1])))?;
                if n == 0 {
                    return Err(err(line_no, "graph needs at least one vertex"));
                }
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(err(line_no, format!("more than {m} edge lines")));
                }
                if tokens.len() != 3 {
                    return Err(err(line_no, "expected edge line 'u v w'"));
                }
                let u = tokens[0]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid vertex '{}'", tokens[0])))?;
                let v = tokens[1]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid vertex '{}'", tokens[1])))?;
                let w = parse_rational(tokens[2]).map_err(|msg| err(line_no, msg))?;
                if u >= n || v >= n {
                    return Err(err(
                        line_no,
                        format!("vertex index out of range for {n} vertices"),
                    ));
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {u}")));
                }
                if w <= Rational::from_integer(0.into()) {
                    return Err(err(line_no, "edge weight must be positive"));
                }
                edges.push((u, v, w));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| err(last_line.max(1), "missing header 'n m'"))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| err(last_line.max(1), e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kway_core::rational::{rat, ratio};

    #[test]
    fn parses_unit_triangle() {
        let g = parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.edges().iter().all(|e| e.weight == rat(1)));
    }

    #[test]
    fn parses_fractional_weight() {
        let g = parse_graph("2 1\n0 1 3/2\n").unwrap();
        assert_eq!(g.edges()[0].weight, ratio(3, 2));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_graph("# triangle\n\n3 3\n0 1 1\n# middle\n1 2 1\n0 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn self_loop_is_reported_with_line() {
        let e = parse_graph("2 1\n0 0 5\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn vertex_out_of_range_is_reported() {
        let e = parse_graph("2 1\n0 2 5\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));
    }

    #[test]
    fn nonpositive_weight_is_rejected() {
        assert!(parse_graph("2 1\n0 1 0\n").is_err());
        assert!(parse_graph("2 1\n0 1 -2\n").is_err());
        assert!(parse_graph("2 1\n0 1 0/5\n").is_err());
    }

    #[test]
    fn malformed_weight_tokens_are_rejected() {
        for w in ["1/0", "0/0", "1.5", "1/2/3", "abc", "2,5"] {
            let text = format!("2 1\n0 1 {w}\n");
            let e = parse_graph(&text).unwrap_err();
            assert_eq!(e.line, 2, "weight {w:?}");
        }
        // negative fractions parse as rationals but fail the positivity check
        assert!(parse_graph("2 1\n0 1 3/-2\n").is_err());
        assert!(parse_graph("2 1\n0 1 -3/2\n").is_err());
    }

    #[test]
    fn edge_count_mismatch_is_rejected() {
        assert!(parse_graph("3 2\n0 1 1\n").is_err());
        assert!(parse_graph("3 1\n0 1 1\n1 2 1\n").is_err());
    }

    #[test]
    fn missing_header_is_rejected() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("# nothing\n").is_err());
    }

    #[test]
    fn round_trip_is_exact() {
        let text = "4 3\n0 1 7\n1 2 3/2\n2 3 1000000000000000000000000001\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(serialize_graph(&g), text);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }
}
