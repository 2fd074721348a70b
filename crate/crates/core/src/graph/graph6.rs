//! graph6 text encoding (McKay), restricted to single-byte sizes (n <= 62).

use super::Graph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";
pub const MAX_GRAPH6_N: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

impl Graph {
    /// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
    /// whitespace are stripped.
    pub fn parse_graph6(line: &str) -> Result<Graph> {
        let line = line.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        let bytes = line.as_bytes();
        let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty line".into()))?;
        if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte {b} at offset {i} is outside 63..=126")));
        }
        if first == 126 {
            return Err(Error::Graph6(format!("multi-byte size header: only n <= {MAX_GRAPH6_N} is supported")));
        }
        let n = (first - 63) as usize;
        let expected = body_len(n);
        if body.len() != expected {
            return Err(Error::Graph6(format!("n = {n} needs {expected} body bytes, found {}", body.len())));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        let used = n * n.saturating_sub(1) / 2;
        if !used.is_multiple_of(6) {
            let pad_mask = (1u8 << (6 - used % 6)) - 1;
            if (body[expected - 1] - 63) & pad_mask != 0 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    /// Encodes as graph6 without a header or trailing newline.
    ///
    /// Panics if `n > 62`.
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= MAX_GRAPH6_N, "graph6 encoding supports n <= {MAX_GRAPH6_N}");
        let mut body = vec![0u8; body_len(self.n)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    body[k / 6] |= 1 << (5 - k % 6);
                }
                k += 1;
            }
        }
        std::iter::once(self.n as u8 + 63).chain(body.into_iter().map(|b| b + 63)).map(char::from).collect()
    }
}
