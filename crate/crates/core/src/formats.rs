//! Codecs for the graph6 text format and the planar_code binary format.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

// ---------------------------------------------------------------------------
// graph6

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<usize> {
        let b = *bytes.get(i).ok_or_else(|| g6_err("truncated size field"))?;
        if !(63..=126).contains(&b) {
            return Err(g6_err(format!("byte {b} at offset {i} outside 63..126")));
        }
        Ok((b - 63) as usize)
    };
    let first = byte(0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | byte(i)?;
        }
        Ok((n, 8))
    } else {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | byte(i)?;
        }
        Ok((n, 4))
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and a trailing
/// line terminator (LF, CRLF) are accepted.
pub fn decode_graph6(text: &[u8]) -> Result<Graph> {
    let mut s = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    let (n, offset) = decode_size(s)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &s[offset..];
    if body.len() < need {
        return Err(g6_err(format!(
            "truncated bit vector: need {need} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(g6_err(format!(
            "trailing garbage: {} extra bytes",
            body.len() - need
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(g6_err(format!("byte {b} outside 63..126")));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(g6_err(format!("byte {b} outside 63..126")));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph as a graph6 record without header or newline.
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    out
}

/// Decodes a whole graph6 file: one graph per non-empty line, header allowed
/// on the first line. Errors carry 1-based line numbers.
pub fn decode_graph6_lines(text: &[u8]) -> Result<Vec<Graph>> {
    text.split(|&b| b == b'\n')
        .enumerate()
        .filter(|(_, line)| !line.iter().all(|&b| b == b'\r'))
        .map(|(i, line)| {
            decode_graph6(line).map_err(|e| match e {
                Error::Graph6(msg) => g6_err(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// planar_code

fn pc_err(msg: impl Into<String>) -> Error {
    Error::PlanarCode(msg.into())
}

/// One plane graph as stored in planar_code: per-vertex cyclic neighbour
/// order, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarCodeEntry {
    pub rotations: Vec<Vec<usize>>,
}

impl PlanarCodeEntry {
    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Underlying simple graph, forgetting the rotation order.
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.rotations.clone())
    }

    /// Checks index range, loops, repeated neighbours, and symmetry.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                if w >= n {
                    return Err(pc_err(format!(
                        "vertex {}: neighbour {} > n = {n}",
                        v + 1,
                        w + 1
                    )));
                }
                if w == v {
                    return Err(pc_err(format!("vertex {}: self-loop", v + 1)));
                }
                if rot[..i].contains(&w) {
                    return Err(pc_err(format!(
                        "vertex {}: repeated neighbour {}",
                        v + 1,
                        w + 1
                    )));
                }
                if !self.rotations[w].contains(&v) {
                    return Err(pc_err(format!(
                        "asymmetric adjacency: {} lists {} but not conversely",
                        v + 1,
                        w + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Decodes a planar_code byte stream (header required).
pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlanarCodeEntry>> {
    let mut body = bytes
        .strip_prefix(PLANAR_CODE_HEADER)
        .ok_or_else(|| pc_err("missing >>planar_code<< header"))?;
    let mut entries = Vec::new();
    while let Some((&n, rest)) = body.split_first() {
        let index = entries.len() + 1;
        if n == 0 {
            return Err(pc_err(format!(
                "graph {index}: n = 0 (multi-byte extension for n > 255 is not supported)"
            )));
        }
        let n = n as usize;
        body = rest;
        let mut rotations = Vec::with_capacity(n);
        for v in 0..n {
            let end = body.iter().position(|&b| b == 0).ok_or_else(|| {
                pc_err(format!(
                    "graph {index}: unterminated record for vertex {}",
                    v + 1
                ))
            })?;
            let mut rot = Vec::with_capacity(end);
            for &b in &body[..end] {
                if b as usize > n {
                    return Err(pc_err(format!(
                        "graph {index}: vertex {}: neighbour {b} > n = {n}",
                        v + 1
                    )));
                }
                rot.push(b as usize - 1);
            }
            rotations.push(rot);
            body = &body[end + 1..];
        }
        let entry = PlanarCodeEntry { rotations };
        entry
            .validate()
            .map_err(|e| pc_err(format!("graph {index}: {e}")))?;
        entries.push(entry);
    }
    Ok(entries)
}

/// Encodes entries with the `>>planar_code<<` header.
pub fn encode_planar_code(entries: &[PlanarCodeEntry]) -> Result<Vec<u8>> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for (i, e) in entries.iter().enumerate() {
        let n = e.n();
        if n == 0 || n > 255 {
            return Err(pc_err(format!(
                "graph {}: n = {n} not encodable in the one-byte variant",
                i + 1
            )));
        }
        out.push(n as u8);
        for rot in &e.rotations {
            out.extend(rot.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> PlanarCodeEntry {
        let r = [[2, 3, 4], [1, 4, 3], [1, 2, 4], [1, 3, 2]];
        PlanarCodeEntry {
            rotations: r
                .iter()
                .map(|l| l.iter().map(|&x| x - 1).collect())
                .collect(),
        }
    }

    #[test]
    fn graph6_k4() {
        let g = decode_graph6(b"C~").unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(encode_graph6(&g), b"C~");
        assert_eq!(decode_graph6(b">>graph6<<C~\r\n").unwrap(), g);
    }

    #[test]
    fn graph6_empty_and_small() {
        assert_eq!(decode_graph6(b"?").unwrap().n(), 0);
        assert_eq!(decode_graph6(b"@").unwrap().n(), 1);
        assert_eq!(encode_graph6(&Graph::empty(0)), b"?");
        assert_eq!(encode_graph6(&Graph::empty(1)), b"@");
        // P3 = 0-1, 1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(encode_graph6(&Graph::path(3)), b"Bg");
        assert_eq!(decode_graph6(b"Bg").unwrap(), Graph::path(3));
    }

    #[test]
    fn graph6_large_n() {
        let g = Graph::cycle(70);
        let enc = encode_graph6(&g);
        assert_eq!(&enc[..4], &[126, 63, 63 + 1, 63 + 6]);
        assert_eq!(decode_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(decode_graph6(b"C"), Err(Error::Graph6(_))));
        assert!(matches!(decode_graph6(b"C~~"), Err(Error::Graph6(_))));
        assert!(matches!(decode_graph6(b"C\x7f"), Err(Error::Graph6(_))));
        assert!(matches!(decode_graph6(b" "), Err(Error::Graph6(_))));
        let err = decode_graph6_lines(b"C~\nC\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn graph6_lines() {
        let gs = decode_graph6_lines(b">>graph6<<C~\r\nBg\n\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(4), Graph::path(3)]);
    }

    #[test]
    fn planar_code_tetrahedron() {
        let t = tetrahedron();
        let bytes = encode_planar_code(std::slice::from_ref(&t)).unwrap();
        let mut expected = PLANAR_CODE_HEADER.to_vec();
        expected.extend([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]);
        assert_eq!(bytes, expected);
        let back = decode_planar_code(&bytes).unwrap();
        assert_eq!(back, vec![t.clone()]);
        assert_eq!(back[0].edge_count(), 6);
        assert_eq!(back[0].graph(), Graph::complete(4));

        let two = encode_planar_code(&[t.clone(), t.clone()]).unwrap();
        let d = decode_planar_code(&two).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], d[1]);
        assert!(decode_planar_code(PLANAR_CODE_HEADER).unwrap().is_empty());
    }

    #[test]
    fn planar_code_errors() {
        let h = PLANAR_CODE_HEADER;
        let with = |body: &[u8]| [h, body].concat();
        assert!(decode_planar_code(b"\x04\x02").is_err());
        assert!(decode_planar_code(&with(&[0])).is_err());
        assert!(decode_planar_code(&with(&[2, 3, 0, 1, 0])).is_err());
        assert!(decode_planar_code(&with(&[2, 2, 0, 1])).is_err());
        assert!(decode_planar_code(&with(&[3, 2, 0, 0, 0])).is_err());
        let big = PlanarCodeEntry {
            rotations: vec![Vec::new(); 256],
        };
        assert!(encode_planar_code(&[big]).is_err());
    }
}
