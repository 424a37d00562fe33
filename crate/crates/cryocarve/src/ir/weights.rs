//! The weight blob: every parameter as consecutive little-endian IEEE-754
//! single-precision values, layer by layer from input to output. Within a
//! layer all neuron (or filter) weights come first, then the biases. The
//! on-disk `.bin` file is exactly these bytes, no header.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BlobError {
    #[error("blob length {0} is not a multiple of 4")]
    UnalignedLength(usize),
}

/// Ordered little-endian float32 byte sequence holding all parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBlob {
    bytes: Vec<u8>,
}

impl WeightBlob {
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self, BlobError> {
        if bytes.len() % 4 != 0 {
            return Err(BlobError::UnalignedLength(bytes.len()));
        }
        Ok(WeightBlob { bytes })
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Number of float32 values stored.
    pub fn value_count(&self) -> usize {
        self.bytes.len() / 4
    }
}

/// Encodes parameter values in stream order into a blob.
pub fn serialize_weights<I>(values: I) -> WeightBlob
where
    I: IntoIterator<Item = f32>,
{
    let mut bytes = Vec::new();
    for v in values {
        bytes.extend_from_slice(&v.to_le_bytes());
    }
    WeightBlob { bytes }
}

/// Decodes a blob back into parameter values, bit-exactly.
pub fn deserialize_weights(blob: &WeightBlob) -> Vec<f32> {
    blob.bytes
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_identical() {
        let values = vec![0.5f32, -1.25, f32::NAN, 1e-30, -0.0];
        let blob = serialize_weights(values.iter().copied());
        assert_eq!(blob.len(), 20);
        let back = deserialize_weights(&blob);
        for (a, b) in values.iter().zip(&back) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn empty_blob() {
        let blob = serialize_weights(std::iter::empty());
        assert!(blob.is_empty());
        assert_eq!(deserialize_weights(&blob), Vec::<f32>::new());
    }

    #[test]
    fn unaligned_bytes_rejected() {
        assert_eq!(
            WeightBlob::from_bytes(vec![0; 7]).unwrap_err(),
            BlobError::UnalignedLength(7)
        );
    }

    #[test]
    fn little_endian_layout() {
        let blob = serialize_weights([1.0f32]);
        assert_eq!(blob.bytes(), &[0x00, 0x00, 0x80, 0x3F]);
    }
}
