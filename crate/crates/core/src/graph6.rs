//! The graph6 interchange format.
//!
//! Header `N(n)` then the upper triangle of the adjacency matrix in column
//! order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte with a
//! bias of 63 and zero padding.

use alloc::vec::Vec;

use crate::graph::{Graph, MAX_ORDER};
use crate::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + BIAS);
        out.push(((n >> 6) & 0x3f) as u8 + BIAS);
        out.push((n & 0x3f) as u8 + BIAS);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbor_mask(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

pub fn encode_string(g: &Graph) -> alloc::string::String {
    // graph6 bytes are always printable ASCII.
    alloc::string::String::from_utf8(encode(g)).expect("graph6 is ASCII")
}

pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input"));
    }
    if bytes.iter().any(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::MalformedGraph6("byte outside 63..=126"));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::MalformedGraph6("unsupported or truncated order header"));
        }
        let n = ((bytes[1] - BIAS) as usize) << 12 | ((bytes[2] - BIAS) as usize) << 6 | (bytes[3] - BIAS) as usize;
        if n < 63 {
            return Err(Error::MalformedGraph6("long header used for small order"));
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::MalformedGraph6("body length does not match order"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_single_vertex() {
        assert_eq!(encode(&Graph::complete(4)), b"C~");
        assert_eq!(encode(&Graph::empty(1)), b"@");
        assert_eq!(encode(&Graph::empty(0)), b"?");
        assert_eq!(decode(b"C~").unwrap(), Graph::complete(4));
        assert_eq!(decode(b">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn matches_reference_string() {
        // A-C, A-E, B-D, D-E on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), b"DQc");
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(63);
        let bytes = encode(&g);
        assert_eq!(bytes[0], 126);
        assert_eq!(decode(&bytes).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(b""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode(b"C"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode(b"C~~"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode(b"C\x7f"), Err(Error::MalformedGraph6(_))));
        // K3 has three bits, so the low three of its byte are padding.
        assert!(matches!(decode(&[66, 63 + 0b111001]), Err(Error::MalformedGraph6(_))));
    }
}
