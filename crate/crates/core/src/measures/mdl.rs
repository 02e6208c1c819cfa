//! Computable proxies for minimum description size and logical depth.
//!
//! The compressed size of a byte sequence upper-bounds its description
//! length, and the operation count of regenerating the sequence from its
//! compressed form stands in for the execution effort of the minimal code.
//! Both lean on the in-repo LZ77 codec so the numbers are reproducible.

use crate::error::{Error, Result};
use crate::measures::lz77;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescriptionLength {
    pub original_length: usize,
    pub compressed_length: usize,
    /// compressed / original
    pub ratio: f64,
}

fn compress_verified(data: &[u8]) -> Result<Vec<u8>> {
    if data.is_empty() {
        return Err(Error::config("description proxies need non-empty data"));
    }
    let compressed = lz77::compress(data);
    let restored = lz77::decompress(&compressed)?;
    if restored != data {
        return Err(Error::internal("compression round-trip mismatch"));
    }
    Ok(compressed)
}

/// Compressed length and compression ratio of `data`, with the round-trip
/// verified on every call.
pub fn description_length_proxy(data: &[u8]) -> Result<DescriptionLength> {
    let compressed = compress_verified(data)?;
    Ok(DescriptionLength {
        original_length: data.len(),
        compressed_length: compressed.len(),
        ratio: compressed.len() as f64 / data.len() as f64,
    })
}

/// Number of decompressor primitive operations (token emissions plus byte
/// copies) needed to regenerate `data` from its compressed form.
pub fn logical_depth_proxy(data: &[u8]) -> Result<u64> {
    let compressed = compress_verified(data)?;
    let (_, stats) = lz77::decompress_with_stats(&compressed)?;
    Ok(stats.steps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn random_bytes(len: usize, seed: u64) -> Vec<u8> {
        let mut rng = Rng::new(seed);
        (0..len).map(|_| (rng.next_u64() & 0xFF) as u8).collect()
    }

    #[test]
    fn redundant_text_has_tiny_description() {
        let text = b"million".repeat(100_000);
        let report = description_length_proxy(&text).unwrap();
        assert!(report.ratio < 0.01, "ratio {}", report.ratio);
    }

    #[test]
    fn random_data_is_incompressible() {
        let data = random_bytes(256 * 1024, 1);
        let report = description_length_proxy(&data).unwrap();
        assert!(report.ratio > 0.95, "ratio {}", report.ratio);
    }

    #[test]
    fn single_byte_header_dominates() {
        let report = description_length_proxy(b"z").unwrap();
        assert!(report.ratio >= 1.0);
        assert_eq!(logical_depth_proxy(b"z").unwrap(), 1);
    }

    #[test]
    fn depth_grows_linearly_while_length_stays_small() {
        let small = b"million".repeat(10_000);
        let large = b"million".repeat(100_000);
        let depth_small = logical_depth_proxy(&small).unwrap() as f64;
        let depth_large = logical_depth_proxy(&large).unwrap() as f64;
        let growth = depth_large / depth_small;
        assert!((growth - 10.0).abs() < 0.5, "depth growth {growth}");
        let ratio = description_length_proxy(&large).unwrap().ratio;
        assert!(ratio < 0.01);
    }

    #[test]
    fn depth_is_about_output_length_regardless_of_ratio() {
        let random = random_bytes(64 * 1024, 2);
        let repeated = b"million".repeat(64 * 1024 / 7);
        let depth_random = logical_depth_proxy(&random).unwrap() as f64;
        let depth_repeated = logical_depth_proxy(&repeated).unwrap() as f64;
        let gap = (depth_random - depth_repeated).abs() / depth_random.max(depth_repeated);
        assert!(gap < 0.05, "depth gap {gap}");

        let ratio_random = description_length_proxy(&random).unwrap().ratio;
        let ratio_repeated = description_length_proxy(&repeated).unwrap().ratio;
        assert!(ratio_random / ratio_repeated > 100.0);
    }

    #[test]
    fn empty_data_is_rejected() {
        assert!(description_length_proxy(b"").is_err());
        assert!(logical_depth_proxy(b"").is_err());
    }
}
