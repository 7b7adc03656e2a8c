//! graph6 records (McKay's format): a size field followed by the upper
//! triangle of the adjacency matrix in column order, six bits per byte,
//! each byte offset by 63.

use super::Graph;
use crate::error::{Graph6Error, Graph6ErrorKind};

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Decode one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are ignored.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let mut start = 0;
    if line.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = line.len();
    while end > start && matches!(line[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let rec = &line[start..end];
    decode(rec).map_err(|e| err(e.offset + start, e.kind))
}

fn decode(rec: &[u8]) -> Result<Graph, Graph6Error> {
    if rec.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if matches!(rec[0], b':' | b';' | b'&') {
        return Err(err(0, Graph6ErrorKind::Unsupported));
    }
    if let Some(pos) = rec.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(err(pos, Graph6ErrorKind::OutOfRange(rec[pos])));
    }
    let (n, body_start) = decode_size(rec)?;
    let n_bits = n * n.saturating_sub(1) / 2;
    let expected = n_bits.div_ceil(6);
    let body = &rec[body_start..];
    if body.len() != expected {
        return Err(err(
            body_start,
            Graph6ErrorKind::WrongDataLength {
                expected,
                found: body.len(),
            },
        ));
    }
    if n_bits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad = 6 - n_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(body_start + expected - 1, Graph6ErrorKind::TrailingBits));
        }
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 bits describe a simple graph"))
}

fn decode_size(rec: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let field = |from: usize, len: usize| -> Result<usize, Graph6Error> {
        if rec.len() < from + len {
            return Err(err(rec.len(), Graph6ErrorKind::BadLength));
        }
        Ok(rec[from..from + len]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
    };
    if rec[0] != 126 {
        return Ok((usize::from(rec[0] - BIAS), 1));
    }
    if rec.len() > 1 && rec[1] == 126 {
        Ok((field(2, 6)?, 8))
    } else {
        Ok((field(1, 3)?, 4))
    }
}

/// Decode every non-empty line of a graph6 file. Error offsets are
/// relative to the start of the file.
pub fn parse_graph6_file(bytes: &[u8]) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in bytes.split(|&b| b == b'\n') {
        let trimmed = line.strip_suffix(b"\r").unwrap_or(line);
        if !trimmed.is_empty() {
            let g = parse_graph6(trimmed).map_err(|e| err(e.offset + offset, e.kind))?;
            graphs.push(g);
        }
        offset += line.len() + 1;
    }
    Ok(graphs)
}

/// Encode a graph as a graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n_nodes();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let n_bits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; n_bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        // column-major upper triangle: entry (i, j), i < j
        let pos = j * (j - 1) / 2 + i;
        bits[pos / 6] |= 1 << (5 - pos % 6);
    }
    out.extend(bits.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 output is ASCII")
}
