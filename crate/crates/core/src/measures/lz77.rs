//! Self-contained LZ77 codec with a fixed token encoding.
//!
//! Greedy longest-match parsing over a 32 KiB sliding window. The stream is
//! groups of up to eight tokens, each group led by a control byte whose bits
//! (LSB first) flag literal (0) or match (1). A literal is one raw byte; a
//! match is four bytes: distance-1 and length-MIN_MATCH, both big-endian u16.
//! Everything is byte-deterministic, which is what makes compressed sizes
//! and decode step counts comparable across platforms.

use crate::error::{Error, Result};

pub const WINDOW: usize = 32 * 1024;
pub const MIN_MATCH: usize = 4;
pub const MAX_MATCH: usize = u16::MAX as usize + MIN_MATCH;

const HASH_BITS: u32 = 16;
const NO_POS: i64 = -1;

#[inline]
fn hash4(data: &[u8]) -> usize {
    let v = u32::from_le_bytes([data[0], data[1], data[2], data[3]]);
    (v.wrapping_mul(2654435761) >> (32 - HASH_BITS)) as usize
}

#[derive(Debug, Clone, Copy)]
enum Token {
    Literal(u8),
    Match { distance: usize, length: usize },
}

fn longest_match(data: &[u8], pos: usize, cand: usize, cap: usize) -> usize {
    let mut len = 0;
    while len < cap && data[cand + len] == data[pos + len] {
        len += 1;
    }
    len
}

pub fn compress(data: &[u8]) -> Vec<u8> {
    let mut tokens: Vec<Token> = Vec::new();
    let mut head = vec![NO_POS; 1 << HASH_BITS];
    let mut prev = vec![NO_POS; data.len()];

    let insert = |head: &mut Vec<i64>, prev: &mut Vec<i64>, at: usize| {
        if at + MIN_MATCH <= data.len() {
            let h = hash4(&data[at..]);
            prev[at] = head[h];
            head[h] = at as i64;
        }
    };

    let mut pos = 0;
    while pos < data.len() {
        let cap = (data.len() - pos).min(MAX_MATCH);
        let mut best_len = 0;
        let mut best_dist = 0;
        if cap >= MIN_MATCH {
            let h = hash4(&data[pos..]);
            let mut cand = head[h];
            let window_start = pos.saturating_sub(WINDOW) as i64;
            while cand >= window_start {
                let c = cand as usize;
                let len = longest_match(data, pos, c, cap);
                if len > best_len {
                    best_len = len;
                    best_dist = pos - c;
                    if len == cap {
                        break;
                    }
                }
                cand = prev[c];
            }
        }
        if best_len >= MIN_MATCH {
            tokens.push(Token::Match {
                distance: best_dist,
                length: best_len,
            });
            for k in 0..best_len {
                insert(&mut head, &mut prev, pos + k);
            }
            pos += best_len;
        } else {
            tokens.push(Token::Literal(data[pos]));
            insert(&mut head, &mut prev, pos);
            pos += 1;
        }
    }

    let mut out = Vec::with_capacity(tokens.len() + tokens.len() / 8 + 1);
    for group in tokens.chunks(8) {
        let mut flags = 0u8;
        for (i, token) in group.iter().enumerate() {
            if matches!(token, Token::Match { .. }) {
                flags |= 1 << i;
            }
        }
        out.push(flags);
        for token in group {
            match *token {
                Token::Literal(b) => out.push(b),
                Token::Match { distance, length } => {
                    debug_assert!((1..=WINDOW).contains(&distance));
                    debug_assert!((MIN_MATCH..=MAX_MATCH).contains(&length));
                    out.extend_from_slice(&((distance - 1) as u16).to_be_bytes());
                    out.extend_from_slice(&((length - MIN_MATCH) as u16).to_be_bytes());
                }
            }
        }
    }
    out
}

/// Counters from a decode pass: one token emission per literal or match,
/// plus one copy operation per byte reproduced through a match.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeStats {
    pub tokens: u64,
    pub copied_bytes: u64,
}

impl DecodeStats {
    /// Primitive decompressor operations: token emissions + byte copies.
    pub fn steps(&self) -> u64 {
        self.tokens + self.copied_bytes
    }
}

pub fn decompress(data: &[u8]) -> Result<Vec<u8>> {
    decompress_with_stats(data).map(|(out, _)| out)
}

pub fn decompress_with_stats(data: &[u8]) -> Result<(Vec<u8>, DecodeStats)> {
    let mut out = Vec::new();
    let mut stats = DecodeStats::default();
    let mut pos = 0;
    while pos < data.len() {
        let flags = data[pos];
        pos += 1;
        for i in 0..8 {
            if pos == data.len() {
                break;
            }
            if flags & (1 << i) == 0 {
                out.push(data[pos]);
                pos += 1;
                stats.tokens += 1;
            } else {
                if pos + 4 > data.len() {
                    return Err(Error::domain("truncated match token"));
                }
                let distance = u16::from_be_bytes([data[pos], data[pos + 1]]) as usize + 1;
                let length = u16::from_be_bytes([data[pos + 2], data[pos + 3]]) as usize + MIN_MATCH;
                pos += 4;
                if distance > out.len() {
                    return Err(Error::domain(format!(
                        "match distance {distance} exceeds output length {}",
                        out.len()
                    )));
                }
                let start = out.len() - distance;
                for k in 0..length {
                    let byte = out[start + k];
                    out.push(byte);
                }
                stats.tokens += 1;
                stats.copied_bytes += length as u64;
            }
        }
    }
    Ok((out, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use proptest::prelude::*;

    fn random_bytes(len: usize, seed: u64) -> Vec<u8> {
        let mut rng = Rng::new(seed);
        (0..len).map(|_| (rng.next_u64() & 0xFF) as u8).collect()
    }

    #[test]
    fn empty_input_round_trips() {
        let compressed = compress(&[]);
        assert!(compressed.is_empty());
        assert_eq!(decompress(&compressed).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn single_byte_costs_two() {
        let compressed = compress(b"x");
        assert_eq!(compressed.len(), 2);
        assert_eq!(decompress(&compressed).unwrap(), b"x");
    }

    #[test]
    fn repetitive_text_compresses_hard() {
        let data: Vec<u8> = b"million".repeat(100_000);
        let compressed = compress(&data);
        assert!(
            (compressed.len() as f64) < 0.01 * data.len() as f64,
            "compressed {} of {}",
            compressed.len(),
            data.len()
        );
        let (restored, stats) = decompress_with_stats(&compressed).unwrap();
        assert_eq!(restored, data);
        // regenerating the text costs on the order of its length
        let steps = stats.steps() as f64;
        assert!(steps >= 0.99 * data.len() as f64 && steps <= 1.01 * data.len() as f64);
    }

    #[test]
    fn random_bytes_stay_incompressible() {
        let data = random_bytes(64 * 1024, 424242);
        let compressed = compress(&data);
        assert!(
            compressed.len() as f64 > 0.95 * data.len() as f64,
            "compressed {} of {}",
            compressed.len(),
            data.len()
        );
        assert_eq!(decompress(&compressed).unwrap(), data);
    }

    #[test]
    fn overlapping_match_copies_correctly() {
        // distance 1, long run: the classic overlap case
        let data = vec![7u8; 1000];
        let compressed = compress(&data);
        assert!(compressed.len() < 20);
        assert_eq!(decompress(&compressed).unwrap(), data);
    }

    #[test]
    fn corrupt_stream_is_rejected() {
        // control byte says "match" but the stream ends
        assert!(decompress(&[0b0000_0001, 0x00]).is_err());
        // match pointing before the start of the output
        assert!(decompress(&[0b0000_0001, 0x00, 0x05, 0x00, 0x00]).is_err());
    }

    #[test]
    fn matches_beyond_window_are_not_used() {
        // two identical blocks separated by more than WINDOW of noise: the
        // second block must still decode correctly
        let mut data = b"the quick brown fox jumps over the lazy dog".repeat(20);
        data.extend(random_bytes(WINDOW + 512, 9));
        data.extend(b"the quick brown fox jumps over the lazy dog".repeat(20));
        let compressed = compress(&data);
        assert_eq!(decompress(&compressed).unwrap(), data);
    }

    proptest! {
        #[test]
        fn round_trip_is_lossless(data in proptest::collection::vec(any::<u8>(), 0..4096)) {
            let compressed = compress(&data);
            let restored = decompress(&compressed).unwrap();
            prop_assert_eq!(restored, data);
        }

        #[test]
        fn round_trip_on_low_entropy_alphabets(
            data in proptest::collection::vec(0u8..4, 0..8192),
        ) {
            let compressed = compress(&data);
            let restored = decompress(&compressed).unwrap();
            prop_assert_eq!(restored, data);
        }
    }
}
