//! MacKay's alist interchange format for sparse parity-check matrices.
//!
//! Variable nodes map to the left class, check nodes to the right class.
//! Neighbor rows may be zero-padded up to the declared maximum degree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{BipartiteGraph, GraphError, Side};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Split<'a, char>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.split('\n').enumerate(),
        }
    }

    /// Next non-blank line as `(1-based line number, tokens)`.
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (idx, raw) in self.inner.by_ref() {
            let tokens: Vec<&str> = raw.split_ascii_whitespace().collect();
            if !tokens.is_empty() {
                return Some((idx + 1, tokens));
            }
        }
        None
    }
}

fn parse_number(line: usize, token: &str) -> Result<usize, GraphError> {
    token.parse().map_err(|_| GraphError::Malformed {
        line,
        reason: format!("expected a nonnegative integer, found {token:?}"),
    })
}

fn numbers(line: usize, tokens: &[&str]) -> Result<Vec<usize>, GraphError> {
    tokens.iter().map(|t| parse_number(line, t)).collect()
}

fn expect_line<'a>(
    lines: &mut Lines<'a>,
    what: &str,
    last_line: usize,
) -> Result<(usize, Vec<&'a str>), GraphError> {
    lines.next_tokens().ok_or_else(|| GraphError::Malformed {
        line: last_line + 1,
        reason: format!("unexpected end of input, expected {what}"),
    })
}

/// Reads one block of neighbor rows (variable or check side).
fn read_rows(
    lines: &mut Lines<'_>,
    mut last_line: usize,
    side: Side,
    degrees: &[usize],
    max_degree: usize,
    other_count: usize,
) -> Result<(Vec<Vec<usize>>, Vec<usize>, usize), GraphError> {
    let other_side = match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    let mut rows = Vec::with_capacity(degrees.len());
    let mut row_lines = Vec::with_capacity(degrees.len());
    for (vertex, &degree) in degrees.iter().enumerate() {
        let (line, tokens) = expect_line(lines, &format!("neighbor row of {side} vertex {}", vertex + 1), last_line)?;
        last_line = line;
        let values = numbers(line, &tokens)?;
        if values.len() < degree || values.len() > max_degree.max(degree) {
            return Err(GraphError::Inconsistent {
                line,
                reason: format!(
                    "{side} vertex {} declares degree {degree} but its row has {} entries",
                    vertex + 1,
                    values.len()
                ),
            });
        }
        let (listed, padding) = values.split_at(degree);
        if let Some(&bad) = padding.iter().find(|&&x| x != 0) {
            return Err(GraphError::Inconsistent {
                line,
                reason: format!(
                    "{side} vertex {} declares degree {degree} but lists extra neighbor {bad}",
                    vertex + 1
                ),
            });
        }
        let mut seen = BTreeSet::new();
        let mut row = Vec::with_capacity(degree);
        for &one_based in listed {
            if one_based == 0 || one_based > other_count {
                if one_based == 0 {
                    return Err(GraphError::Inconsistent {
                        line,
                        reason: format!(
                            "{side} vertex {} declares degree {degree} but its row is zero-padded early",
                            vertex + 1
                        ),
                    });
                }
                return Err(GraphError::IndexOutOfRange {
                    line: Some(line),
                    side: other_side,
                    index: one_based,
                    bound: other_count,
                });
            }
            if !seen.insert(one_based) {
                return Err(GraphError::DuplicateNeighbor {
                    line: Some(line),
                    side,
                    vertex: vertex + 1,
                    neighbor: one_based,
                });
            }
            row.push(one_based - 1);
        }
        rows.push(row);
        row_lines.push(line);
    }
    Ok((rows, row_lines, last_line))
}

/// Parses alist text into a validated graph.
///
/// Accepts LF or CRLF line endings and ignores blank lines. Errors carry the
/// 1-based line number where the problem was detected.
pub fn parse_alist(text: &str) -> Result<BipartiteGraph, GraphError> {
    let mut lines = Lines::new(text);

    let (line, tokens) = lines.next_tokens().ok_or(GraphError::MalformedHeader {
        line: 1,
        reason: "empty input".into(),
    })?;
    let header = numbers(line, &tokens).map_err(|_| GraphError::MalformedHeader {
        line,
        reason: format!("expected \"N M\", found {:?}", tokens.join(" ")),
    })?;
    let [var_count, check_count] = header[..] else {
        return Err(GraphError::MalformedHeader {
            line,
            reason: format!("expected two integers \"N M\", found {}", header.len()),
        });
    };
    if var_count == 0 || check_count == 0 {
        return Err(GraphError::MalformedHeader {
            line,
            reason: "node counts must be positive".into(),
        });
    }

    let (line, tokens) = expect_line(&mut lines, "maximum degrees", line)?;
    let maxima = numbers(line, &tokens).map_err(|_| GraphError::MalformedHeader {
        line,
        reason: "expected \"maxVarDeg maxChkDeg\"".into(),
    })?;
    let [max_var, max_check] = maxima[..] else {
        return Err(GraphError::MalformedHeader {
            line,
            reason: format!("expected two maximum degrees, found {}", maxima.len()),
        });
    };
    let max_line = line;

    let (var_degree_line, tokens) = expect_line(&mut lines, "variable degrees", line)?;
    if tokens.len() != var_count {
        return Err(GraphError::Inconsistent {
            line: var_degree_line,
            reason: format!("expected {var_count} variable degrees, found {}", tokens.len()),
        });
    }
    let var_degrees = numbers(var_degree_line, &tokens)?;

    let (check_degree_line, tokens) = expect_line(&mut lines, "check degrees", var_degree_line)?;
    if tokens.len() != check_count {
        return Err(GraphError::Inconsistent {
            line: check_degree_line,
            reason: format!("expected {check_count} check degrees, found {}", tokens.len()),
        });
    }
    let check_degrees = numbers(check_degree_line, &tokens)?;

    for (declared, degrees, what) in [
        (max_var, &var_degrees, "variable"),
        (max_check, &check_degrees, "check"),
    ] {
        let actual = degrees.iter().copied().max().unwrap_or(0);
        if actual != declared {
            return Err(GraphError::Inconsistent {
                line: max_line,
                reason: format!("declared maximum {what} degree {declared} but the largest is {actual}"),
            });
        }
    }
    for (degrees, side, line) in [
        (&var_degrees, Side::Left, var_degree_line),
        (&check_degrees, Side::Right, check_degree_line),
    ] {
        let expected = degrees[0];
        if let Some((vertex, &degree)) = degrees
            .iter()
            .enumerate()
            .find(|&(_, &deg)| deg != expected || deg == 0)
        {
            return Err(GraphError::NotBiregular {
                line: Some(line),
                side,
                vertex: vertex + 1,
                degree,
                expected: expected.max(1),
            });
        }
    }

    let (var_rows, _, last) =
        read_rows(&mut lines, check_degree_line, Side::Left, &var_degrees, max_var, check_count)?;
    let (check_rows, check_lines, _) =
        read_rows(&mut lines, last, Side::Right, &check_degrees, max_check, var_count)?;

    if let Some((line, _)) = lines.next_tokens() {
        return Err(GraphError::Malformed {
            line,
            reason: "trailing data after the last check row".into(),
        });
    }

    // Both halves must describe the same edge set.
    let mut from_checks = vec![Vec::new(); var_count];
    for (check, row) in check_rows.iter().enumerate() {
        for &var in row {
            if !var_rows[var].contains(&check) {
                return Err(GraphError::Inconsistent {
                    line: check_lines[check],
                    reason: format!(
                        "check {} lists variable {} but that variable does not list the check",
                        check + 1,
                        var + 1
                    ),
                });
            }
            from_checks[var].push(check);
        }
    }
    debug_assert!(var_rows
        .iter()
        .zip(&from_checks)
        .all(|(a, b)| a.len() == b.len()));

    BipartiteGraph::from_left_adjacency(check_count, var_rows)
}

/// Serializes a graph as alist text with LF line endings.
pub fn to_alist(graph: &BipartiteGraph) -> String {
    let (c, d) = graph.biregular_profile();
    let (n, m) = (graph.left_count(), graph.right_count());
    let mut out = String::new();
    let join = |items: &mut dyn Iterator<Item = usize>| {
        items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(out, "{n} {m}");
    let _ = writeln!(out, "{c} {d}");
    let _ = writeln!(out, "{}", join(&mut std::iter::repeat_n(c, n)));
    let _ = writeln!(out, "{}", join(&mut std::iter::repeat_n(d, m)));
    for u in 0..n {
        let _ = writeln!(out, "{}", join(&mut graph.left_neighbors(u).map(|v| v + 1)));
    }
    for v in 0..m {
        let _ = writeln!(out, "{}", join(&mut graph.right_neighbors(v).iter().map(|u| u + 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K33: &str = "3 3\n3 3\n3 3 3\n3 3 3\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n";

    // Vertex-edge incidence of K_4 with edges 01 02 03 12 13 23.
    const SUBDIVIDED_K4: &str = "4 6\n3 2\n3 3 3 3\n2 2 2 2 2 2\n\
        1 2 3\n1 4 5\n2 4 6\n3 5 6\n\
        1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

    #[test]
    fn parses_complete_bipartite() {
        let g = parse_alist(K33).unwrap();
        assert_eq!((g.left_count(), g.right_count()), (3, 3));
        assert_eq!(g.biregular_profile(), (3, 3));
    }

    #[test]
    fn parses_subdivided_k4() {
        let g = parse_alist(SUBDIVIDED_K4).unwrap();
        assert_eq!((g.left_count(), g.right_count()), (4, 6));
        assert_eq!(g.biregular_profile(), (3, 2));
        assert_eq!(g.left_count() * 3, g.right_count() * 2);
    }

    #[test]
    fn accepts_crlf_and_padding() {
        let text = "2 2\r\n2 2\r\n2 2\r\n2 2\r\n1 2\r\n2 1\r\n1 2\r\n1 2\r\n";
        let g = parse_alist(text).unwrap();
        assert_eq!(g.biregular_profile(), (2, 2));
        // Zero padding beyond the declared degree is allowed.
        let padded = "1 1\n1 1\n1\n1\n1\n1\n";
        assert!(parse_alist(padded).is_ok());
    }

    #[test]
    fn duplicate_neighbor_reports_line() {
        let text = "2 2\n2 2\n2 2\n2 2\n1 1\n1 2\n1 2\n1 2\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, GraphError::DuplicateNeighbor { line: Some(5), .. }), "{err}");
    }

    #[test]
    fn out_of_range_index() {
        let text = "1 1\n1 1\n1\n1\n2\n1\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, GraphError::IndexOutOfRange { line: Some(5), index: 2, .. }), "{err}");
    }

    #[test]
    fn malformed_header() {
        assert!(matches!(parse_alist("3\n"), Err(GraphError::MalformedHeader { line: 1, .. })));
        assert!(matches!(parse_alist("a b\n"), Err(GraphError::MalformedHeader { line: 1, .. })));
        assert!(matches!(parse_alist(""), Err(GraphError::MalformedHeader { .. })));
        assert!(matches!(parse_alist("0 3\n"), Err(GraphError::MalformedHeader { .. })));
    }

    #[test]
    fn non_biregular_degrees() {
        let text = "2 2\n2 2\n2 1\n2 1\n1 2\n1\n1 2\n1\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, GraphError::NotBiregular { line: Some(3), side: Side::Left, .. }), "{err}");
    }

    #[test]
    fn halves_must_agree() {
        // Variable rows say 1-1, 2-2; check rows say 1-2, 2-1.
        let text = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, GraphError::Inconsistent { line: 7, .. }), "{err}");
    }

    #[test]
    fn degree_row_mismatch() {
        let text = "1 1\n1 1\n1\n1\n1 1\n1\n";
        assert!(matches!(parse_alist(text), Err(GraphError::Inconsistent { line: 5, .. })));
        let truncated = "1 1\n1 1\n1\n1\n1\n";
        assert!(matches!(parse_alist(truncated), Err(GraphError::Malformed { line: 6, .. })));
        let trailing = "1 1\n1 1\n1\n1\n1\n1\n7\n";
        assert!(matches!(parse_alist(trailing), Err(GraphError::Malformed { line: 7, .. })));
    }

    #[test]
    fn wrong_declared_maximum() {
        let text = "1 1\n2 1\n1\n1\n1\n1\n";
        assert!(matches!(parse_alist(text), Err(GraphError::Inconsistent { line: 2, .. })));
    }

    #[test]
    fn serializes_canonically() {
        let g = parse_alist(SUBDIVIDED_K4).unwrap();
        assert_eq!(to_alist(&g), SUBDIVIDED_K4);
    }
}
