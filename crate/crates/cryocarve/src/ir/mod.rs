//! Model intermediate representation: a layered network description with a
//! bit-exact two-file serialization (architecture XML + raw weight blob).

mod model;
mod weights;
pub mod xml;

pub use model::{Edge, IrError, IrModel, LayerKind, LayerSpec, Precision};
pub use weights::{deserialize_weights, serialize_weights, BlobError, WeightBlob};
pub use xml::{parse_xml, serialize_xml, XmlError};
