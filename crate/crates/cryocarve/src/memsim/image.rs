//! Synthetic memory dumps: the two IR files embedded at recorded offsets
//! amid filler content.

use crate::ir::WeightBlob;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use thiserror::Error;

pub const TAG_XML: &str = "xml";
pub const TAG_BLOB: &str = "bin";

#[derive(Debug, Error)]
pub enum MemError {
    #[error("image too small: need {needed} bytes, have {available}")]
    TooSmall { needed: usize, available: usize },
    #[error("image length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("majority voting needs an odd number of trials, got {0}")]
    EvenTrialCount(usize),
    #[error("need at least {0} trials, got {1}")]
    TooFewTrials(usize, usize),
    #[error("manifest line {0} is malformed")]
    BadManifestLine(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Where a ground-truth artifact was embedded. Evaluation-only metadata:
/// carving operations receive the raw bytes and never see the manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub offset: usize,
    pub length: usize,
    pub tag: String,
}

/// A byte array standing in for RAM contents, with an optional manifest of
/// embedded artifacts.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryImage {
    bytes: Vec<u8>,
    manifest: Option<Vec<ManifestEntry>>,
}

/// What the non-artifact regions of a synthesized image look like.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillerProfile {
    /// Uniform random bytes.
    RandomBytes,
    /// Printable ASCII text with whitespace, valid UTF-8 throughout.
    AsciiText,
    /// Alternating stretches of the two above.
    Mixed,
}

impl MemoryImage {
    pub fn new(bytes: Vec<u8>) -> Self {
        MemoryImage {
            bytes,
            manifest: None,
        }
    }

    pub fn with_manifest(bytes: Vec<u8>, manifest: Vec<ManifestEntry>) -> Result<Self, MemError> {
        let mut spans: Vec<(usize, usize)> = Vec::new();
        for e in &manifest {
            let end = e
                .offset
                .checked_add(e.length)
                .filter(|&end| end <= bytes.len())
                .ok_or(MemError::TooSmall {
                    needed: e.offset.saturating_add(e.length),
                    available: bytes.len(),
                })?;
            spans.push((e.offset, end));
        }
        spans.sort_unstable();
        for w in spans.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(MemError::LengthMismatch(w[0].1, w[1].0));
            }
        }
        Ok(MemoryImage {
            bytes,
            manifest: Some(manifest),
        })
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn manifest(&self) -> Option<&[ManifestEntry]> {
        self.manifest.as_deref()
    }

    pub(crate) fn replace_bytes(&self, bytes: Vec<u8>) -> MemoryImage {
        debug_assert_eq!(bytes.len(), self.bytes.len());
        MemoryImage {
            bytes,
            manifest: self.manifest.clone(),
        }
    }

    /// Raw image bytes to a file; the manifest goes to a text sidecar with
    /// one `offset length tag` line per artifact.
    pub fn save(&self, image_path: &Path) -> Result<(), MemError> {
        std::fs::write(image_path, &self.bytes)?;
        if let Some(manifest) = &self.manifest {
            let mut text = String::new();
            for e in manifest {
                text.push_str(&format!("{} {} {}\n", e.offset, e.length, e.tag));
            }
            std::fs::write(sidecar_path(image_path), text)?;
        }
        Ok(())
    }

    pub fn load(image_path: &Path) -> Result<Self, MemError> {
        let bytes = std::fs::read(image_path)?;
        let sidecar = sidecar_path(image_path);
        if !sidecar.exists() {
            return Ok(MemoryImage::new(bytes));
        }
        let text = std::fs::read_to_string(sidecar)?;
        let mut manifest = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |s: Option<&str>| {
                s.and_then(|v| v.parse::<usize>().ok())
                    .ok_or(MemError::BadManifestLine(i + 1))
            };
            let offset = parse(parts.next())?;
            let length = parse(parts.next())?;
            let tag = parts
                .next()
                .ok_or(MemError::BadManifestLine(i + 1))?
                .to_string();
            manifest.push(ManifestEntry {
                offset,
                length,
                tag,
            });
        }
        MemoryImage::with_manifest(bytes, manifest)
    }
}

fn sidecar_path(image_path: &Path) -> std::path::PathBuf {
    let mut p = image_path.as_os_str().to_owned();
    p.push(".manifest");
    std::path::PathBuf::from(p)
}

const WORDS: &[&str] = &[
    "kernel", "thread", "mutex", "service", "buffer", "session", "packet", "daemon", "config",
    "status", "module", "driver", "cache", "queue", "timer", "signal", "process", "memory",
    "device", "handle", "socket", "stream", "object", "window", "client", "server", "request",
    "response", "update", "1024", "0x7f", "error", "warn", "info",
];

fn fill_ascii(buf: &mut [u8], rng: &mut ChaCha8Rng) {
    let mut pos = 0;
    while pos < buf.len() {
        let word = WORDS.choose(rng).unwrap().as_bytes();
        let n = word.len().min(buf.len() - pos);
        buf[pos..pos + n].copy_from_slice(&word[..n]);
        pos += n;
        if pos < buf.len() {
            buf[pos] = if rng.random_bool(0.12) { b'\n' } else { b' ' };
            pos += 1;
        }
    }
}

fn fill_random(buf: &mut [u8], rng: &mut ChaCha8Rng) {
    rng.fill(buf);
}

fn fill(buf: &mut [u8], profile: FillerProfile, rng: &mut ChaCha8Rng) {
    match profile {
        FillerProfile::AsciiText => fill_ascii(buf, rng),
        FillerProfile::RandomBytes => fill_random(buf, rng),
        FillerProfile::Mixed => {
            let mut pos = 0;
            while pos < buf.len() {
                let n = rng.random_range(64..512).min(buf.len() - pos);
                if rng.random_bool(0.5) {
                    fill_ascii(&mut buf[pos..pos + n], rng);
                } else {
                    fill_random(&mut buf[pos..pos + n], rng);
                }
                pos += n;
            }
        }
    }
}

/// Builds a RAM image of `total_size` bytes containing the architecture XML
/// and the weight blob at recorded, non-overlapping, 8-byte-aligned offsets,
/// surrounded by filler. Deterministic for a given seed.
///
/// Artifacts are aligned the way an allocator would place them, which also
/// keeps the 64-bit scan windows of the weight carver in phase with the
/// blob. Each artifact is additionally padded with a short ASCII margin so
/// scans cannot run from filler straight into an artifact.
pub fn synthesize_dump(
    xml: &str,
    blob: &WeightBlob,
    filler_profile: FillerProfile,
    total_size: usize,
    seed: u64,
) -> Result<MemoryImage, MemError> {
    const MARGIN: usize = 16; // ASCII pad bytes on each side of an artifact
    let xml_bytes = xml.as_bytes();
    let needed = xml_bytes.len() + blob.len() + 4 * MARGIN + 64;
    if total_size < needed {
        return Err(MemError::TooSmall {
            needed,
            available: total_size,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bytes = vec![0u8; total_size];
    fill(&mut bytes, filler_profile, &mut rng);

    // Place the XML in the first half and the blob in the second, far enough
    // apart that margins never collide.
    let slack = total_size - needed;
    let xml_off = align8(MARGIN + rng.random_range(0..=slack / 2));
    let blob_off = align8(
        (xml_off + xml_bytes.len() + 2 * MARGIN)
            + rng.random_range(0..=(total_size
                - (xml_off + xml_bytes.len() + 2 * MARGIN)
                - blob.len()
                - MARGIN
                - 8)),
    );
    debug_assert!(blob_off + blob.len() + MARGIN <= total_size);

    let mut margin = vec![0u8; MARGIN];
    for (off, content) in [(xml_off, xml_bytes), (blob_off, blob.bytes())] {
        fill_ascii(&mut margin, &mut rng);
        bytes[off - MARGIN..off].copy_from_slice(&margin);
        bytes[off..off + content.len()].copy_from_slice(content);
        fill_ascii(&mut margin, &mut rng);
        bytes[off + content.len()..off + content.len() + MARGIN].copy_from_slice(&margin);
    }

    let manifest = vec![
        ManifestEntry {
            offset: xml_off,
            length: xml_bytes.len(),
            tag: TAG_XML.to_string(),
        },
        ManifestEntry {
            offset: blob_off,
            length: blob.len(),
            tag: TAG_BLOB.to_string(),
        },
    ];
    MemoryImage::with_manifest(bytes, manifest)
}

fn align8(offset: usize) -> usize {
    (offset + 7) & !7
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::serialize_weights;

    fn blob(n: usize) -> WeightBlob {
        serialize_weights((0..n).map(|i| 0.01 * i as f32 + 0.1))
    }

    #[test]
    fn manifest_records_both_artifacts() {
        let img = synthesize_dump("<net>x</net>", &blob(16), FillerProfile::AsciiText, 4096, 7)
            .unwrap();
        let m = img.manifest().unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].tag, TAG_XML);
        assert_eq!(m[1].tag, TAG_BLOB);
        assert_eq!(m[0].offset % 8, 0);
        assert_eq!(m[1].offset % 8, 0);
        let xml_span = &img.bytes()[m[0].offset..m[0].offset + m[0].length];
        assert_eq!(xml_span, b"<net>x</net>");
    }

    #[test]
    fn too_small_rejected() {
        let r = synthesize_dump("<net></net>", &blob(256), FillerProfile::AsciiText, 512, 7);
        assert!(matches!(r, Err(MemError::TooSmall { .. })));
    }

    #[test]
    fn same_seed_same_image() {
        let a = synthesize_dump("<net/>", &blob(8), FillerProfile::Mixed, 8192, 3).unwrap();
        let b = synthesize_dump("<net/>", &blob(8), FillerProfile::Mixed, 8192, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ascii_filler_is_utf8() {
        let img = synthesize_dump("<net/>", &blob(4), FillerProfile::AsciiText, 4096, 11).unwrap();
        let m = img.manifest().unwrap();
        let mut cursor = 0;
        for e in m {
            assert!(std::str::from_utf8(&img.bytes()[cursor..e.offset]).is_ok());
            cursor = e.offset + e.length;
        }
        assert!(std::str::from_utf8(&img.bytes()[cursor..]).is_ok());
    }

    #[test]
    fn save_load_round_trip() {
        let dir = std::env::temp_dir().join("cryocarve-image-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("dump.raw");
        let img = synthesize_dump("<net/>", &blob(8), FillerProfile::AsciiText, 2048, 5).unwrap();
        img.save(&path).unwrap();
        let back = MemoryImage::load(&path).unwrap();
        assert_eq!(img, back);
        std::fs::remove_dir_all(&dir).ok();
    }
}
