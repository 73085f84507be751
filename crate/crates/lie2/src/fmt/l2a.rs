//! The L2A interchange format: a line-oriented text format for structure
//! constants with exact rational entries.
//!
//! Grammar (one record per line, `#` comments, blank lines ignored):
//!
//! ```text
//! l2a 1
//! meta <key> <free-form value>
//! space <name> <dim> <label>*
//! map <name> <source-space> <target-space>
//! mapentry <map-name> <target-label> <source-label> <rational>
//! tensor <name> <kind> <out-space> <slot>*      slot = alt:<space> | sym:<space> | plain:<space>
//! tensorentry <tensor-name> <in-labels|-> <out-label> <rational>
//! ```
//!
//! `<rational>` is `p` or `p/q` with `q > 0`; `<in-labels>` is a
//! comma-separated label list (`-` when the tensor has no inputs). In strict
//! mode unknown directives are rejected; in lax mode they are preserved and
//! re-emitted verbatim.

use crate::error::{Error, Result};
use crate::exactlin::Symmetry;
use crate::scalar::Scalar;
use std::fmt::Write as _;

pub const FORMAT_VERSION: u32 = 1;

/// The tensor kinds named by the format.
pub const TENSOR_KINDS: &[&str] = &[
    "l2_00",
    "l2_01",
    "l3",
    "phi2",
    "action",
    "cochain-component",
    "leibniz",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: String,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    /// (target label, source label, value)
    pub entries: Vec<(String, String, Scalar)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorDecl {
    pub name: String,
    pub kind: String,
    pub output: String,
    pub slots: Vec<(Symmetry, String)>,
    /// (input labels, output label, value)
    pub entries: Vec<(Vec<String>, String, Scalar)>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct L2aDoc {
    pub meta: Vec<(String, String)>,
    pub spaces: Vec<SpaceDecl>,
    pub maps: Vec<MapDecl>,
    pub tensors: Vec<TensorDecl>,
    /// unknown lines preserved in lax mode, with their line numbers
    pub unknown: Vec<(usize, String)>,
}

impl L2aDoc {
    pub fn space(&self, name: &str) -> Option<&SpaceDecl> {
        self.spaces.iter().find(|s| s.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&MapDecl> {
        self.maps.iter().find(|m| m.name == name)
    }

    pub fn tensor(&self, name: &str) -> Option<&TensorDecl> {
        self.tensors.iter().find(|t| t.name == name)
    }

    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn ident_ok(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || b == b'[' || b == b']' || b == b'+' || b == b'(' || b == b')' || b == b'*' || b == b'-')
}

/// Parse a document. `strict` rejects unknown directives; lax preserves them.
pub fn parse(input: &str, strict: bool) -> Result<L2aDoc> {
    let mut doc = L2aDoc::default();
    let mut saw_header = false;
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap();
        if !saw_header {
            if head != "l2a" {
                return Err(perr(lineno, "expected header `l2a <version>`"));
            }
            let ver: u32 = words
                .next()
                .ok_or_else(|| perr(lineno, "missing format version"))?
                .parse()
                .map_err(|_| perr(lineno, "invalid format version"))?;
            if ver != FORMAT_VERSION {
                return Err(perr(lineno, format!("unsupported format version {ver}")));
            }
            if words.next().is_some() {
                return Err(perr(lineno, "trailing tokens after header"));
            }
            saw_header = true;
            continue;
        }
        match head {
            "meta" => {
                let key = words
                    .next()
                    .ok_or_else(|| perr(lineno, "meta needs a key"))?
                    .to_string();
                let rest: Vec<&str> = words.collect();
                doc.meta.push((key, rest.join(" ")));
            }
            "space" => {
                let name = words
                    .next()
                    .ok_or_else(|| perr(lineno, "space needs a name"))?
                    .to_string();
                if !ident_ok(&name) {
                    return Err(perr(lineno, format!("bad space name `{name}`")));
                }
                if doc.space(&name).is_some() {
                    return Err(perr(lineno, format!("duplicate space `{name}`")));
                }
                let dim: usize = words
                    .next()
                    .ok_or_else(|| perr(lineno, "space needs a dimension"))?
                    .parse()
                    .map_err(|_| perr(lineno, "invalid dimension"))?;
                let labels: Vec<String> = words.map(|w| w.to_string()).collect();
                if labels.len() != dim {
                    return Err(perr(
                        lineno,
                        format!("space `{name}`: {dim} labels expected, got {}", labels.len()),
                    ));
                }
                let mut seen = std::collections::HashSet::new();
                for l in &labels {
                    if !ident_ok(l) {
                        return Err(perr(lineno, format!("bad label `{l}`")));
                    }
                    if !seen.insert(l.clone()) {
                        return Err(perr(lineno, format!("duplicate label `{l}`")));
                    }
                }
                doc.spaces.push(SpaceDecl { name, labels });
            }
            "map" => {
                let name = req_ident(&mut words, lineno, "map name")?;
                if doc.map(&name).is_some() {
                    return Err(perr(lineno, format!("duplicate map `{name}`")));
                }
                let source = req_ident(&mut words, lineno, "source space")?;
                let target = req_ident(&mut words, lineno, "target space")?;
                for s in [&source, &target] {
                    if doc.space(s).is_none() {
                        return Err(perr(lineno, format!("unknown space `{s}`")));
                    }
                }
                no_more(&mut words, lineno)?;
                doc.maps.push(MapDecl {
                    name,
                    source,
                    target,
                    entries: Vec::new(),
                });
            }
            "mapentry" => {
                let name = req_ident(&mut words, lineno, "map name")?;
                let trg = req_ident(&mut words, lineno, "target label")?;
                let src = req_ident(&mut words, lineno, "source label")?;
                let val = req_scalar(&mut words, lineno)?;
                no_more(&mut words, lineno)?;
                let (src_space, trg_space) = {
                    let m = doc
                        .map(&name)
                        .ok_or_else(|| perr(lineno, format!("unknown map `{name}`")))?;
                    (m.source.clone(), m.target.clone())
                };
                if doc.space(&src_space).map(|s| !s.labels.contains(&src)) != Some(false) {
                    return Err(perr(lineno, format!("unknown source label `{src}`")));
                }
                if doc.space(&trg_space).map(|s| !s.labels.contains(&trg)) != Some(false) {
                    return Err(perr(lineno, format!("unknown target label `{trg}`")));
                }
                let m = doc.maps.iter_mut().find(|m| m.name == name).unwrap();
                m.entries.push((trg, src, val));
            }
            "tensor" => {
                let name = req_ident(&mut words, lineno, "tensor name")?;
                if doc.tensor(&name).is_some() {
                    return Err(perr(lineno, format!("duplicate tensor `{name}`")));
                }
                let kind = req_ident(&mut words, lineno, "tensor kind")?;
                if !TENSOR_KINDS.contains(&kind.as_str()) {
                    return Err(perr(lineno, format!("unknown tensor kind `{kind}`")));
                }
                let output = req_ident(&mut words, lineno, "output space")?;
                if doc.space(&output).is_none() {
                    return Err(perr(lineno, format!("unknown space `{output}`")));
                }
                let mut slots = Vec::new();
                for w in words {
                    let (sym, sp) = w
                        .split_once(':')
                        .ok_or_else(|| perr(lineno, format!("bad slot `{w}`")))?;
                    let sym = Symmetry::from_tag(sym)
                        .ok_or_else(|| perr(lineno, format!("bad symmetry tag `{sym}`")))?;
                    if doc.space(sp).is_none() {
                        return Err(perr(lineno, format!("unknown space `{sp}`")));
                    }
                    slots.push((sym, sp.to_string()));
                }
                doc.tensors.push(TensorDecl {
                    name,
                    kind,
                    output,
                    slots,
                    entries: Vec::new(),
                });
            }
            "tensorentry" => {
                let name = req_ident(&mut words, lineno, "tensor name")?;
                let ins_raw = words
                    .next()
                    .ok_or_else(|| perr(lineno, "missing input labels"))?
                    .to_string();
                let out_label = req_ident(&mut words, lineno, "output label")?;
                let val = req_scalar(&mut words, lineno)?;
                no_more(&mut words, lineno)?;
                let t = doc
                    .tensor(&name)
                    .ok_or_else(|| perr(lineno, format!("unknown tensor `{name}`")))?
                    .clone();
                let ins: Vec<String> = if ins_raw == "-" {
                    Vec::new()
                } else {
                    ins_raw.split(',').map(|s| s.to_string()).collect()
                };
                if ins.len() != t.slots.len() {
                    return Err(perr(
                        lineno,
                        format!("tensor `{name}` expects {} input labels", t.slots.len()),
                    ));
                }
                for (lbl, (_, sp)) in ins.iter().zip(&t.slots) {
                    let space = doc.space(sp).unwrap();
                    if !space.labels.contains(lbl) {
                        return Err(perr(lineno, format!("unknown label `{lbl}` in `{sp}`")));
                    }
                }
                let out_space = doc.space(&t.output).unwrap();
                if !out_space.labels.contains(&out_label) {
                    return Err(perr(lineno, format!("unknown output label `{out_label}`")));
                }
                doc.tensors
                    .iter_mut()
                    .find(|x| x.name == name)
                    .unwrap()
                    .entries
                    .push((ins, out_label, val));
            }
            _ => {
                if strict {
                    return Err(perr(lineno, format!("unknown directive `{head}`")));
                }
                doc.unknown.push((lineno, raw.to_string()));
            }
        }
    }
    if !saw_header {
        return Err(perr(1, "empty document (missing `l2a` header)"));
    }
    Ok(doc)
}

fn req_ident(words: &mut std::str::SplitWhitespace, lineno: usize, what: &str) -> Result<String> {
    let w = words
        .next()
        .ok_or_else(|| perr(lineno, format!("missing {what}")))?;
    if !ident_ok(w) {
        return Err(perr(lineno, format!("bad {what} `{w}`")));
    }
    Ok(w.to_string())
}

fn req_scalar(words: &mut std::str::SplitWhitespace, lineno: usize) -> Result<Scalar> {
    let w = words
        .next()
        .ok_or_else(|| perr(lineno, "missing rational value"))?;
    w.parse()
        .map_err(|_| perr(lineno, format!("invalid rational `{w}`")))
}

fn no_more(words: &mut std::str::SplitWhitespace, lineno: usize) -> Result<()> {
    if words.next().is_some() {
        return Err(perr(lineno, "trailing tokens"));
    }
    Ok(())
}

/// Canonical emission: header, meta, spaces, maps, tensors; entries sorted.
/// Unknown (lax) lines are appended at the end.
pub fn emit(doc: &L2aDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "l2a {FORMAT_VERSION}");
    for (k, v) in &doc.meta {
        if v.is_empty() {
            let _ = writeln!(out, "meta {k}");
        } else {
            let _ = writeln!(out, "meta {k} {v}");
        }
    }
    for s in &doc.spaces {
        let _ = write!(out, "space {} {}", s.name, s.labels.len());
        for l in &s.labels {
            let _ = write!(out, " {l}");
        }
        let _ = writeln!(out);
    }
    for m in &doc.maps {
        let _ = writeln!(out, "map {} {} {}", m.name, m.source, m.target);
        let mut entries = m.entries.clone();
        entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        for (t, s, v) in entries {
            let _ = writeln!(out, "mapentry {} {} {} {}", m.name, t, s, v);
        }
    }
    for t in &doc.tensors {
        let _ = write!(out, "tensor {} {} {}", t.name, t.kind, t.output);
        for (sym, sp) in &t.slots {
            let _ = write!(out, " {}:{}", sym.tag(), sp);
        }
        let _ = writeln!(out);
        let mut entries = t.entries.clone();
        entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        for (ins, o, v) in entries {
            let ins_str = if ins.is_empty() { "-".to_string() } else { ins.join(",") };
            let _ = writeln!(out, "tensorentry {} {} {} {}", t.name, ins_str, o, v);
        }
    }
    for (_, raw) in &doc.unknown {
        let _ = writeln!(out, "{raw}");
    }
    out
}
