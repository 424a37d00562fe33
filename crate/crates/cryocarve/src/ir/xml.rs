//! The architecture XML dialect.
//!
//! A fixed minimal tag set (`net`, `layers`, `layer`, `data`, `input`,
//! `output`, `port`, `dim`, `edges`, `edge`, plus an opaque
//! `cli_parameters` block) describes the layer graph. Serialization is
//! deterministic byte-for-byte; the parser is strict and rejects anything
//! outside the dialect. Lenient, repairing parsing of corrupted documents
//! lives in the carver, which reuses the raw structures defined here.

use super::model::{Edge, IrModel, LayerKind, LayerSpec, Precision};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum XmlError {
    #[error("malformed XML: {0}")]
    MalformedXml(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
}

/// Dialect vocabulary, shared with the carver's repair dictionary.
pub mod dialect {
    pub const TAGS: &[&str] = &[
        "net",
        "layers",
        "layer",
        "data",
        "input",
        "output",
        "port",
        "dim",
        "edges",
        "edge",
        "cli_parameters",
    ];

    pub const ATTRS: &[&str] = &[
        "name",
        "version",
        "id",
        "type",
        "precision",
        "in-size",
        "out-size",
        "in-channels",
        "out-channels",
        "kernel",
        "strides",
        "channels",
        "rate",
        "from-layer",
        "from-port",
        "to-layer",
        "to-port",
    ];

    pub const LAYER_TYPES: &[&str] = &[
        "Input",
        "Dense",
        "Conv2D",
        "MaxPool2D",
        "ReLU",
        "PReLU",
        "Dropout",
        "Flatten",
        "Softmax",
    ];

    pub const PRECISIONS: &[&str] = &["FP32"];

    /// Attributes an opening tag of this kind may carry.
    pub fn attrs_for(tag: &str) -> &'static [&'static str] {
        match tag {
            "net" => &["name", "version"],
            "layer" => &["id", "name", "type"],
            "port" => &["id", "precision"],
            "data" => &[
                "in-size",
                "out-size",
                "in-channels",
                "out-channels",
                "kernel",
                "strides",
                "channels",
                "rate",
            ],
            "edge" => &["from-layer", "from-port", "to-layer", "to-port"],
            _ => &[],
        }
    }

    /// Child tags allowed directly inside this tag.
    pub fn children_for(tag: &str) -> &'static [&'static str] {
        match tag {
            "net" => &["layers", "edges", "cli_parameters"],
            "layers" => &["layer"],
            "layer" => &["data", "input", "output"],
            "input" | "output" => &["port"],
            "edges" => &["edge"],
            _ => &[],
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

fn unescape(text: &str) -> String {
    text.replace("&lt;", "<")
        .replace("&gt;", ">")
        .replace("&quot;", "\"")
        .replace("&amp;", "&")
}

fn dims_list(out: &mut String, indent: &str, dims: &[usize]) {
    for d in dims {
        let _ = writeln!(out, "{indent}<dim>{d}</dim>");
    }
}

fn port(out: &mut String, indent: &str, id: usize, precision: Precision, dims: &[usize]) {
    let _ = writeln!(
        out,
        "{indent}<port id=\"{id}\" precision=\"{}\">",
        precision.as_str()
    );
    dims_list(out, &format!("{indent}    "), dims);
    let _ = writeln!(out, "{indent}</port>");
}

fn data_attrs(kind: &LayerKind) -> Vec<(&'static str, String)> {
    match kind {
        LayerKind::Dense { in_size, out_size } => vec![
            ("in-size", in_size.to_string()),
            ("out-size", out_size.to_string()),
        ],
        LayerKind::Conv2D {
            in_channels,
            out_channels,
            kernel,
            stride,
        } => vec![
            ("in-channels", in_channels.to_string()),
            ("out-channels", out_channels.to_string()),
            ("kernel", format!("{},{}", kernel.0, kernel.1)),
            ("strides", format!("{},{}", stride.0, stride.1)),
        ],
        LayerKind::MaxPool2D { kernel, stride } => vec![
            ("kernel", format!("{},{}", kernel.0, kernel.1)),
            ("strides", format!("{},{}", stride.0, stride.1)),
        ],
        LayerKind::PReLU { channels } => vec![("channels", channels.to_string())],
        LayerKind::Dropout { rate } => vec![("rate", rate.to_string())],
        _ => vec![],
    }
}

/// Renders the model as architecture XML. Deterministic for equal inputs:
/// fixed attribute order, four-space indentation, `\n` line endings.
pub fn serialize_xml(model: &IrModel) -> String {
    let shapes = model
        .layer_shapes()
        .expect("valid model propagates shapes");
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<net name=\"{}\" version=\"7\">",
        escape(model.name())
    );
    let _ = writeln!(out, "    <layers>");
    for (i, layer) in model.layers().iter().enumerate() {
        let _ = writeln!(
            out,
            "        <layer id=\"{}\" name=\"{}\" type=\"{}\">",
            layer.id,
            escape(&layer.name),
            layer.kind.type_name()
        );
        let data = data_attrs(&layer.kind);
        if !data.is_empty() {
            let attrs: Vec<String> = data
                .iter()
                .map(|(k, v)| format!("{k}=\"{v}\""))
                .collect();
            let _ = writeln!(out, "            <data {}/>", attrs.join(" "));
        }
        if i > 0 {
            let _ = writeln!(out, "            <input>");
            port(&mut out, "                ", 0, layer.precision, &shapes[i - 1]);
            let _ = writeln!(out, "            </input>");
        }
        let out_port = if i == 0 { 0 } else { 1 };
        let _ = writeln!(out, "            <output>");
        port(
            &mut out,
            "                ",
            out_port,
            layer.precision,
            &shapes[i],
        );
        let _ = writeln!(out, "            </output>");
        let _ = writeln!(out, "        </layer>");
    }
    let _ = writeln!(out, "    </layers>");
    let _ = writeln!(out, "    <edges>");
    for e in model.edges() {
        let _ = writeln!(
            out,
            "        <edge from-layer=\"{}\" from-port=\"{}\" to-layer=\"{}\" to-port=\"{}\"/>",
            e.from_layer, e.from_port, e.to_layer, e.to_port
        );
    }
    let _ = writeln!(out, "    </edges>");
    let _ = writeln!(out, "    <cli_parameters/>");
    let _ = writeln!(out, "</net>");
    out
}

// ---------------------------------------------------------------------------
// Raw document structures (shared with the carver)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct RawPort {
    pub id: usize,
    pub precision: String,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct RawLayer {
    pub id: usize,
    pub name: String,
    pub type_name: String,
    pub data: Vec<(String, String)>,
    pub input_ports: Vec<RawPort>,
    pub output_ports: Vec<RawPort>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct RawModel {
    pub name: String,
    pub version: String,
    pub layers: Vec<RawLayer>,
    pub edges: Vec<Edge>,
}

impl RawLayer {
    pub fn data_attr(&self, key: &str) -> Option<&str> {
        self.data
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

// ---------------------------------------------------------------------------
// Strict parsing
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum Token {
    Open { name: String, attrs: Vec<(String, String)>, self_closing: bool },
    Close { name: String },
    Text(String),
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    fn next_token(&mut self) -> Result<Option<Token>, XmlError> {
        let bytes = self.text.as_bytes();
        // Text content runs until the next tag.
        let start = self.pos;
        while self.pos < bytes.len() && bytes[self.pos] != b'<' {
            self.pos += 1;
        }
        let text = &self.text[start..self.pos];
        if !text.trim().is_empty() {
            return Ok(Some(Token::Text(text.trim().to_string())));
        }
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        let tag_start = self.pos;
        while self.pos < bytes.len() && bytes[self.pos] != b'>' {
            self.pos += 1;
        }
        if self.pos >= bytes.len() {
            return Err(XmlError::MalformedXml("unterminated tag".into()));
        }
        let inner = &self.text[tag_start + 1..self.pos];
        self.pos += 1; // consume '>'
        if let Some(name) = inner.strip_prefix('/') {
            return Ok(Some(Token::Close {
                name: name.trim().to_string(),
            }));
        }
        let (inner, self_closing) = match inner.strip_suffix('/') {
            Some(rest) => (rest, true),
            None => (inner, false),
        };
        let mut parts = inner.splitn(2, char::is_whitespace);
        let name = parts.next().unwrap_or("").to_string();
        if name.is_empty() {
            return Err(XmlError::MalformedXml("empty tag name".into()));
        }
        let mut attrs = Vec::new();
        if let Some(rest) = parts.next() {
            let mut rest = rest.trim();
            while !rest.is_empty() {
                let eq = rest.find('=').ok_or_else(|| {
                    XmlError::MalformedXml(format!("attribute without value in <{name}>"))
                })?;
                let key = rest[..eq].trim().to_string();
                let after = rest[eq + 1..].trim_start();
                let mut chars = after.char_indices();
                match chars.next() {
                    Some((_, '"')) => {}
                    _ => {
                        return Err(XmlError::MalformedXml(format!(
                            "unquoted attribute value in <{name}>"
                        )))
                    }
                }
                let close = after[1..].find('"').ok_or_else(|| {
                    XmlError::MalformedXml(format!("unterminated attribute value in <{name}>"))
                })?;
                attrs.push((key, unescape(&after[1..1 + close])));
                rest = after[close + 2..].trim_start();
            }
        }
        Ok(Some(Token::Open {
            name,
            attrs,
            self_closing,
        }))
    }
}

fn parse_usize(value: &str, what: &str) -> Result<usize, XmlError> {
    value
        .trim()
        .parse::<usize>()
        .map_err(|_| XmlError::SchemaViolation(format!("{what}: expected integer, got {value:?}")))
}

fn parse_pair(value: &str, what: &str) -> Result<(usize, usize), XmlError> {
    let mut it = value.split(',');
    let a = parse_usize(it.next().unwrap_or(""), what)?;
    let b = parse_usize(it.next().unwrap_or(""), what)?;
    if it.next().is_some() {
        return Err(XmlError::SchemaViolation(format!(
            "{what}: expected two comma-separated integers"
        )));
    }
    Ok((a, b))
}

fn require<'a>(attrs: &'a [(String, String)], key: &str, tag: &str) -> Result<&'a str, XmlError> {
    attrs
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| XmlError::SchemaViolation(format!("<{tag}> missing attribute {key:?}")))
}

/// Parses the document into raw structures, enforcing tag balance and the
/// dialect's nesting rules but deferring semantic checks.
pub(crate) fn parse_raw(text: &str) -> Result<RawModel, XmlError> {
    let mut lexer = Lexer::new(text);
    let mut stack: Vec<String> = Vec::new();
    let mut model = RawModel::default();
    let mut cur_layer: Option<RawLayer> = None;
    let mut cur_port: Option<RawPort> = None;
    let mut in_output = false;
    let mut seen_net = false;

    while let Some(tok) = lexer.next_token()? {
        match tok {
            Token::Open {
                name,
                attrs,
                self_closing,
            } => {
                if !dialect::TAGS.contains(&name.as_str()) {
                    return Err(XmlError::MalformedXml(format!("unknown tag <{name}>")));
                }
                match stack.last().map(String::as_str) {
                    None => {
                        if name != "net" {
                            return Err(XmlError::MalformedXml(format!(
                                "document must start with <net>, found <{name}>"
                            )));
                        }
                    }
                    Some(parent) => {
                        if !dialect::children_for(parent).contains(&name.as_str()) {
                            return Err(XmlError::MalformedXml(format!(
                                "<{name}> not allowed inside <{parent}>"
                            )));
                        }
                    }
                }
                match name.as_str() {
                    "net" => {
                        if seen_net {
                            return Err(XmlError::MalformedXml("multiple <net> roots".into()));
                        }
                        seen_net = true;
                        model.name = require(&attrs, "name", "net")?.to_string();
                        model.version = require(&attrs, "version", "net")?.to_string();
                    }
                    "layer" => {
                        let mut layer = RawLayer {
                            id: parse_usize(require(&attrs, "id", "layer")?, "layer id")?,
                            name: require(&attrs, "name", "layer")?.to_string(),
                            type_name: require(&attrs, "type", "layer")?.to_string(),
                            ..Default::default()
                        };
                        layer.data.clear();
                        cur_layer = Some(layer);
                    }
                    "data" => {
                        let layer = cur_layer.as_mut().ok_or_else(|| {
                            XmlError::MalformedXml("<data> outside <layer>".into())
                        })?;
                        for (k, v) in attrs {
                            layer.data.push((k, v));
                        }
                    }
                    "input" => in_output = false,
                    "output" => in_output = true,
                    "port" => {
                        let precision = require(&attrs, "precision", "port")?.to_string();
                        if !dialect::PRECISIONS.contains(&precision.as_str()) {
                            return Err(XmlError::SchemaViolation(format!(
                                "unsupported precision {precision:?}"
                            )));
                        }
                        cur_port = Some(RawPort {
                            id: parse_usize(require(&attrs, "id", "port")?, "port id")?,
                            precision,
                            dims: Vec::new(),
                        });
                    }
                    "edge" => {
                        model.edges.push(Edge {
                            from_layer: parse_usize(
                                require(&attrs, "from-layer", "edge")?,
                                "edge from-layer",
                            )?,
                            from_port: parse_usize(
                                require(&attrs, "from-port", "edge")?,
                                "edge from-port",
                            )?,
                            to_layer: parse_usize(
                                require(&attrs, "to-layer", "edge")?,
                                "edge to-layer",
                            )?,
                            to_port: parse_usize(
                                require(&attrs, "to-port", "edge")?,
                                "edge to-port",
                            )?,
                        });
                    }
                    _ => {}
                }
                if !self_closing {
                    stack.push(name);
                } else if name == "port" {
                    return Err(XmlError::MalformedXml("<port> must contain dims".into()));
                } else {
                    // Self-closing data/edge/dim-less tags close immediately.
                    close_tag(&name, &mut model, &mut cur_layer, &mut cur_port, in_output)?;
                }
            }
            Token::Close { name } => {
                let open = stack.pop().ok_or_else(|| {
                    XmlError::MalformedXml(format!("unmatched closing tag </{name}>"))
                })?;
                if open != name {
                    return Err(XmlError::MalformedXml(format!(
                        "expected </{open}>, found </{name}>"
                    )));
                }
                close_tag(&name, &mut model, &mut cur_layer, &mut cur_port, in_output)?;
            }
            Token::Text(text) => match stack.last().map(String::as_str) {
                Some("dim") => {
                    let port = cur_port.as_mut().ok_or_else(|| {
                        XmlError::MalformedXml("<dim> outside <port>".into())
                    })?;
                    port.dims.push(parse_usize(&text, "dim")?);
                }
                Some("cli_parameters") => {} // opaque, ignored
                other => {
                    return Err(XmlError::MalformedXml(format!(
                        "unexpected text {text:?} inside <{}>",
                        other.unwrap_or("document root")
                    )))
                }
            },
        }
    }
    if let Some(open) = stack.last() {
        return Err(XmlError::MalformedXml(format!("<{open}> never closed")));
    }
    if !seen_net {
        return Err(XmlError::MalformedXml("no <net> root found".into()));
    }
    Ok(model)
}

fn close_tag(
    name: &str,
    model: &mut RawModel,
    cur_layer: &mut Option<RawLayer>,
    cur_port: &mut Option<RawPort>,
    in_output: bool,
) -> Result<(), XmlError> {
    match name {
        "layer" => {
            let layer = cur_layer
                .take()
                .ok_or_else(|| XmlError::MalformedXml("stray </layer>".into()))?;
            model.layers.push(layer);
        }
        "port" => {
            let port = cur_port
                .take()
                .ok_or_else(|| XmlError::MalformedXml("stray </port>".into()))?;
            if port.dims.is_empty() {
                return Err(XmlError::SchemaViolation("<port> without dims".into()));
            }
            let layer = cur_layer
                .as_mut()
                .ok_or_else(|| XmlError::MalformedXml("<port> outside <layer>".into()))?;
            if in_output {
                layer.output_ports.push(port);
            } else {
                layer.input_ports.push(port);
            }
        }
        _ => {}
    }
    Ok(())
}

/// Maps a raw layer onto a typed kind using its `<data>` attributes (and,
/// for Input, its output port dims).
pub(crate) fn raw_layer_kind(layer: &RawLayer) -> Result<LayerKind, XmlError> {
    let get = |key: &str| -> Result<usize, XmlError> {
        parse_usize(
            layer.data_attr(key).ok_or_else(|| {
                XmlError::SchemaViolation(format!(
                    "layer {} ({}) missing data attribute {key:?}",
                    layer.id, layer.type_name
                ))
            })?,
            key,
        )
    };
    let get_pair = |key: &str| -> Result<(usize, usize), XmlError> {
        parse_pair(
            layer.data_attr(key).ok_or_else(|| {
                XmlError::SchemaViolation(format!(
                    "layer {} ({}) missing data attribute {key:?}",
                    layer.id, layer.type_name
                ))
            })?,
            key,
        )
    };
    match layer.type_name.as_str() {
        "Input" => {
            let port = layer.output_ports.first().ok_or_else(|| {
                XmlError::SchemaViolation(format!("Input layer {} has no output port", layer.id))
            })?;
            Ok(LayerKind::Input {
                dims: port.dims.clone(),
            })
        }
        "Dense" => Ok(LayerKind::Dense {
            in_size: get("in-size")?,
            out_size: get("out-size")?,
        }),
        "Conv2D" => Ok(LayerKind::Conv2D {
            in_channels: get("in-channels")?,
            out_channels: get("out-channels")?,
            kernel: get_pair("kernel")?,
            stride: get_pair("strides")?,
        }),
        "MaxPool2D" => Ok(LayerKind::MaxPool2D {
            kernel: get_pair("kernel")?,
            stride: get_pair("strides")?,
        }),
        "ReLU" => Ok(LayerKind::ReLU),
        "PReLU" => Ok(LayerKind::PReLU {
            channels: get("channels")?,
        }),
        "Dropout" => {
            let raw = layer.data_attr("rate").ok_or_else(|| {
                XmlError::SchemaViolation(format!("Dropout layer {} missing rate", layer.id))
            })?;
            let rate = raw.trim().parse::<f32>().map_err(|_| {
                XmlError::SchemaViolation(format!("rate: expected float, got {raw:?}"))
            })?;
            Ok(LayerKind::Dropout { rate })
        }
        "Flatten" => Ok(LayerKind::Flatten),
        "Softmax" => Ok(LayerKind::Softmax),
        other => Err(XmlError::SchemaViolation(format!(
            "unknown layer type {other:?}"
        ))),
    }
}

/// Converts a raw document into a validated model. With `verify_ports`,
/// stored port dims must agree with the shapes implied by the layer
/// parameters.
pub(crate) fn raw_to_model(raw: &RawModel, verify_ports: bool) -> Result<IrModel, XmlError> {
    let mut layers = Vec::with_capacity(raw.layers.len());
    for rl in &raw.layers {
        let kind = raw_layer_kind(rl)?;
        let mut spec = LayerSpec::new(rl.id, rl.name.clone(), kind);
        spec.precision = Precision::Fp32;
        layers.push(spec);
    }
    let model = IrModel::new(raw.name.clone(), layers, raw.edges.clone())
        .map_err(|e| XmlError::SchemaViolation(e.to_string()))?;
    if verify_ports {
        let shapes = model
            .layer_shapes()
            .map_err(|e| XmlError::SchemaViolation(e.to_string()))?;
        for (i, rl) in raw.layers.iter().enumerate() {
            if let Some(p) = rl.output_ports.first() {
                if p.dims != shapes[i] {
                    return Err(XmlError::SchemaViolation(format!(
                        "layer {} output port dims {:?} disagree with propagated {:?}",
                        rl.id, p.dims, shapes[i]
                    )));
                }
            }
            if i > 0 {
                if let Some(p) = rl.input_ports.first() {
                    if p.dims != shapes[i - 1] {
                        return Err(XmlError::SchemaViolation(format!(
                            "layer {} input port dims {:?} disagree with propagated {:?}",
                            rl.id, p.dims, shapes[i - 1]
                        )));
                    }
                }
            }
        }
    }
    Ok(model)
}

/// Parses architecture XML produced by [`serialize_xml`] (or equivalent).
/// Inverse of serialization on its image.
pub fn parse_xml(text: &str) -> Result<IrModel, XmlError> {
    let raw = parse_raw(text)?;
    raw_to_model(&raw, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> IrModel {
        IrModel::chain(
            "simple_ffnn",
            vec![
                ("input".into(), LayerKind::Input { dims: vec![1, 3] }),
                (
                    "fc".into(),
                    LayerKind::Dense {
                        in_size: 3,
                        out_size: 4,
                    },
                ),
                ("act".into(), LayerKind::ReLU),
                ("prob".into(), LayerKind::Softmax),
            ],
        )
        .unwrap()
    }

    #[test]
    fn serialized_form_contains_expected_port() {
        let m = IrModel::chain(
            "simple_ffnn",
            vec![("input".into(), LayerKind::Input { dims: vec![1, 3] })],
        )
        .unwrap();
        let xml = serialize_xml(&m);
        assert!(xml.contains("<port id=\"0\" precision=\"FP32\">"));
        assert!(xml.contains("<dim>1</dim>"));
        assert!(xml.contains("<dim>3</dim>"));
        assert!(xml.starts_with("<net name=\"simple_ffnn\" version=\"7\">"));
        assert!(xml.trim_end().ends_with("</net>"));
    }

    #[test]
    fn serialization_is_deterministic() {
        assert_eq!(serialize_xml(&sample()), serialize_xml(&sample()));
    }

    #[test]
    fn round_trip() {
        let m = sample();
        let parsed = parse_xml(&serialize_xml(&m)).unwrap();
        assert_eq!(m, parsed);
    }

    #[test]
    fn unclosed_layers_is_malformed() {
        let xml = "<net name=\"m\" version=\"7\">\n<layers>\n</net>\n";
        match parse_xml(xml) {
            Err(XmlError::MalformedXml(_)) => {}
            other => panic!("expected MalformedXml, got {other:?}"),
        }
    }

    #[test]
    fn unknown_layer_type_is_schema_violation() {
        let xml = serialize_xml(&sample()).replace("type=\"ReLU\"", "type=\"Foo\"");
        match parse_xml(&xml) {
            Err(XmlError::SchemaViolation(msg)) => assert!(msg.contains("Foo")),
            other => panic!("expected SchemaViolation, got {other:?}"),
        }
    }

    #[test]
    fn unknown_tag_is_malformed() {
        let xml = "<net name=\"m\" version=\"7\"><bogus/></net>";
        assert!(matches!(parse_xml(xml), Err(XmlError::MalformedXml(_))));
    }

    #[test]
    fn missing_attribute_is_schema_violation() {
        let xml = "<net version=\"7\"></net>";
        assert!(matches!(parse_xml(xml), Err(XmlError::SchemaViolation(_))));
    }

    #[test]
    fn inconsistent_port_dims_rejected() {
        let xml = serialize_xml(&sample()).replacen("<dim>4</dim>", "<dim>9</dim>", 1);
        assert!(matches!(parse_xml(&xml), Err(XmlError::SchemaViolation(_))));
    }

    #[test]
    fn name_with_markup_round_trips() {
        let m = IrModel::chain(
            "a<b&c",
            vec![("input".into(), LayerKind::Input { dims: vec![1, 2] })],
        )
        .unwrap();
        let parsed = parse_xml(&serialize_xml(&m)).unwrap();
        assert_eq!(parsed.name(), "a<b&c");
    }
}
