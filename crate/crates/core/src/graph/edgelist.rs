use super::Graph;
use crate::error::EdgeListError;

/// Parse a plain edge list: whitespace-separated id pairs, one or more per
/// line. Lines starting with `#` are comments; a comment of the form
/// `# nodes: N` fixes the node count (otherwise max id + 1), which is how
/// isolated trailing nodes are declared. Duplicate pairs collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("nodes:") {
                let n = n.trim();
                declared = Some(n.parse().map_err(|_| EdgeListError::InvalidToken {
                    line: line_no,
                    token: n.to_string(),
                })?);
            }
            continue;
        }
        let ids = trimmed
            .split_whitespace()
            .map(|tok| parse_id(tok, line_no))
            .collect::<Result<Vec<_>, _>>()?;
        if ids.len() % 2 != 0 {
            return Err(EdgeListError::DanglingId { line: line_no });
        }
        for pair in ids.chunks(2) {
            if pair[0] == pair[1] {
                return Err(EdgeListError::Graph {
                    line: line_no,
                    source: crate::error::GraphError::SelfLoop(pair[0]),
                });
            }
            max_id = max_id.max(Some(pair[0].max(pair[1])));
            edges.push((pair[0], pair[1]));
        }
    }
    let n = match (declared, max_id) {
        (Some(d), Some(m)) if m >= d => {
            return Err(EdgeListError::HeaderTooSmall {
                declared: d,
                max_id: m,
            })
        }
        (Some(d), _) => d,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    Ok(Graph::from_edges(n, edges).expect("ids validated against node count"))
}

fn parse_id(tok: &str, line: usize) -> Result<usize, EdgeListError> {
    match tok.parse::<i64>() {
        Ok(v) if v < 0 => Err(EdgeListError::NegativeId {
            line,
            token: tok.to_string(),
        }),
        Ok(v) => Ok(v as usize),
        Err(_) => Err(EdgeListError::InvalidToken {
            line,
            token: tok.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn path_and_duplicates() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), named::path(3));
        let g = parse_edge_list("0 1\n1 0").unwrap();
        assert_eq!(g.n_edges(), 1);
    }

    #[test]
    fn comments_and_header() {
        let g = parse_edge_list("# comment\n0 1\n").unwrap();
        assert_eq!(g.n_nodes(), 2);
        let g = parse_edge_list("# nodes: 5\n0 1 1 2\n").unwrap();
        assert_eq!((g.n_nodes(), g.n_edges()), (5, 2));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_edge_list("0 -1"),
            Err(EdgeListError::NegativeId { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n0 x"),
            Err(EdgeListError::InvalidToken { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(EdgeListError::DanglingId { line: 1 })
        ));
        assert!(matches!(
            parse_edge_list("# nodes: 2\n0 2"),
            Err(EdgeListError::HeaderTooSmall { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 3"),
            Err(EdgeListError::Graph { .. })
        ));
    }
}
