use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// graph6 codec. The adjacency bits cover the upper triangle column by
/// column: (0,1), (0,2), (1,2), (0,3), ..., six bits per printable byte,
/// most significant bit first, each byte offset by 63.
const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one graph6 record. An optional `>>graph6<<` prefix and a trailing
/// newline are tolerated; anything else must be exactly the record.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut bytes = input.strip_prefix(HEADER).unwrap_or(input);
    while let Some(rest) = bytes
        .strip_suffix(b"\n")
        .or_else(|| bytes.strip_suffix(b"\r"))
    {
        bytes = rest;
    }
    let (n, body) = parse_order(bytes)?;
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > MAX_ORDER {
        return Err(Error::Graph6OrderTooLarge(n));
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Error::Graph6TrailingData(body.len() - expected));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=LONG_FORM).contains(&b) {
            return Err(Error::Graph6InvalidByte {
                position: bytes.len() - body.len() + i,
                byte: b,
            });
        }
    }
    let bit = |p: usize| (body[p / 6] - OFFSET) >> (5 - p % 6) & 1;
    let mut adj = vec![0u64; n];
    let mut p = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(p) == 1 {
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            p += 1;
        }
    }
    for q in p..expected * 6 {
        if bit(q) != 0 {
            return Err(Error::Graph6NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(n, adj))
}

/// Splits off the length header. Only the canonical encoding of each order
/// is accepted: short form for n <= 62, four-byte long form for 63 and 64.
fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes.first() {
        None => Err(Error::Graph6Header),
        Some(&b) if (OFFSET..LONG_FORM).contains(&b) => Ok(((b - OFFSET) as usize, &bytes[1..])),
        Some(&LONG_FORM) => match bytes.get(1) {
            Some(&LONG_FORM) => {
                let sextets = sextets(bytes.get(2..8).ok_or(Error::Graph6Header)?)?;
                let n = fold(&sextets);
                if n > MAX_ORDER {
                    Err(Error::Graph6OrderTooLarge(n))
                } else {
                    Err(Error::Graph6Header)
                }
            }
            Some(_) => {
                let sextets = sextets(bytes.get(1..4).ok_or(Error::Graph6Header)?)?;
                let n = fold(&sextets);
                if n <= 62 {
                    return Err(Error::Graph6Header);
                }
                Ok((n, &bytes[4..]))
            }
            None => Err(Error::Graph6Header),
        },
        Some(_) => Err(Error::Graph6Header),
    }
}

fn sextets(bytes: &[u8]) -> Result<Vec<usize>> {
    bytes
        .iter()
        .map(|&b| {
            if (OFFSET..=LONG_FORM).contains(&b) {
                Ok((b - OFFSET) as usize)
            } else {
                Err(Error::Graph6Header)
            }
        })
        .collect()
}

fn fold(sextets: &[usize]) -> usize {
    sextets.iter().fold(0, |acc, &s| acc << 6 | s)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_FORM);
        out.push((n >> 12 & 63) as u8 + OFFSET);
        out.push((n >> 6 & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }
    let mut sextets = vec![0u8; body_len(n)];
    let mut p = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                sextets[p / 6] |= 1 << (5 - p % 6);
            }
            p += 1;
        }
    }
    out.extend(sextets.iter().map(|s| s + OFFSET));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses newline-separated graph6 records, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| parse_graph6(line.as_bytes()))
        .collect()
}
