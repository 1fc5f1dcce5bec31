//! graph6 short form (n <= 62).
//!
//! The first byte is `n + 63`; the upper triangle of the adjacency matrix
//! follows column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte, big-endian, each byte offset by 63.

use thiserror::Error;

use super::Graph;

pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("expected {expected} bytes for a graph on {n} vertices, got {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final byte at offset {0}")]
    Padding(usize),
    #[error("long-form graph6 header at offset 0 is not supported")]
    LongForm,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub(super) fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub(super) fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (head - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length { n, expected, found: body.len() });
    }
    let total = n * n.saturating_sub(1) / 2;
    if !total.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 * expected - total;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding(expected));
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are in range and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_is_bw() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.to_graph6().unwrap(), "Bw");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(Graph::empty(1).to_graph6().unwrap(), "@");
        assert_eq!(Graph::from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(Graph::empty(0).to_graph6().unwrap(), "?");
    }

    #[test]
    fn five_vertex_reference_string() {
        // a-c, a-e, b-d, d-e
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6().unwrap(), "DQc");
    }

    #[test]
    fn p7_round_trip() {
        let e: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
        let p7 = Graph::new(7, &e).unwrap();
        assert_eq!(Graph::from_graph6(&p7.to_graph6().unwrap()).unwrap(), p7);
    }

    #[test]
    fn malformed_strings() {
        assert_eq!(Graph::from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            Graph::from_graph6("B w"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            Graph::from_graph6("Bww"),
            Err(Graph6Error::Length { n: 3, expected: 1, found: 2 })
        );
        // K_3 with a stray padding bit set
        assert_eq!(Graph::from_graph6("Bx"), Err(Graph6Error::Padding(1)));
        assert_eq!(Graph::from_graph6("~??"), Err(Graph6Error::LongForm));
        assert_eq!(Graph::empty(63).to_graph6(), Err(Graph6Error::TooLarge(63)));
    }
}
