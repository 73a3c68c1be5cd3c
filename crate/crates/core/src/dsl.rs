//! The line-oriented input format.
//!
//! ```text
//! # comment
//! vertices: x, y
//! arrows: a: x->x, b: x->x, c: x->y
//! ideal commutative
//! zero: a*a, b*b, a*c
//! comm: a*b
//! char: 0
//! koszul: asserted
//! max_degree: 6
//! ```
//!
//! `anti:` lists anticommutativity relations. Keys may repeat; lists
//! accumulate.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ideal::{validate_ideal, Flavor, IdealError, IdealSpec, RawIdeal, RawRelation};
use crate::notice::Notice;
use crate::quiver::{Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct SpecDocument {
    pub spec: IdealSpec,
    pub koszul_asserted: bool,
    pub max_degree: Option<usize>,
    pub notices: Vec<Notice>,
}

impl SpecDocument {
    pub fn quiver(&self) -> &Quiver {
        self.spec.quiver()
    }
}

impl PartialEq for SpecDocument {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
            && self.koszul_asserted == other.koszul_asserted
            && self.max_degree == other.max_degree
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    col: usize,
}

impl Pos {
    fn err(self, message: impl fmt::Display) -> DslError {
        DslError {
            line: self.line,
            col: self.col,
            message: message.to_string(),
        }
    }
}

/// Comma-separated items of `text`, which starts at column `col0`, with
/// their 1-based columns.
fn items(text: &str, col0: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.chars().take_while(|c| c.is_whitespace()).count();
        let trimmed = part.trim();
        if !trimmed.is_empty() {
            out.push((trimmed, col0 + text[..offset].chars().count() + lead));
        }
        offset += part.len() + 1;
    }
    out
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s.contains(|c: char| c.is_whitespace() || ",:*#".contains(c))
        && !s.contains("->")
}

fn word(text: &str, pos: Pos) -> Result<Vec<String>, DslError> {
    let letters: Vec<String> = text.split('*').map(|s| s.trim().to_string()).collect();
    if let Some(bad) = letters.iter().find(|l| !valid_name(l)) {
        return Err(pos.err(format!("malformed word `{text}` (bad letter `{bad}`)")));
    }
    Ok(letters)
}

struct Generator {
    word: Vec<String>,
    flavor: Option<Flavor>,
    pos: Pos,
}

pub fn parse_spec(text: &str) -> Result<SpecDocument, DslError> {
    let mut vertices: Vec<(String, Pos)> = Vec::new();
    let mut arrows: Vec<((String, String, String), Pos)> = Vec::new();
    let mut declared: Option<(Flavor, Pos)> = None;
    let mut generators: Vec<Generator> = Vec::new();
    let mut field_char: Option<(u64, Pos)> = None;
    let mut koszul_asserted = false;
    let mut max_degree = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.chars().take_while(|c| c.is_whitespace()).count();
        let start = Pos { line, col: indent + 1 };
        let body = content.trim();
        if let Some(rest) = body.strip_prefix("ideal") {
            if rest.starts_with(|c: char| c.is_whitespace() || c == ':') {
                let name = rest.trim_start_matches(':').trim();
                let flavor = match name {
                    "commutative" => Flavor::Commutative,
                    "anticommutative" => Flavor::Anticommutative,
                    _ => return Err(start.err(format!("unknown ideal flavor `{name}`"))),
                };
                if let Some((f, _)) = declared {
                    if f != flavor {
                        return Err(start.err("conflicting ideal flavors"));
                    }
                }
                declared = Some((flavor, start));
                continue;
            }
        }
        let Some(colon) = body.find(':') else {
            return Err(start.err(format!("expected `key: value`, found `{body}`")));
        };
        let key = body[..colon].trim();
        let value = &body[colon + 1..];
        let value_col = indent + body[..colon + 1].chars().count() + 1;
        let list = items(value, value_col);
        let at = |col| Pos { line, col };
        match key {
            "vertices" => {
                for (name, col) in list {
                    if !valid_name(name) {
                        return Err(at(col).err(format!("bad vertex name `{name}`")));
                    }
                    vertices.push((name.to_string(), at(col)));
                }
            }
            "arrows" => {
                for (item, col) in list {
                    let parsed = item.split_once(':').and_then(|(name, ends)| {
                        let (s, t) = ends.split_once("->")?;
                        Some((name.trim(), s.trim(), t.trim()))
                    });
                    match parsed {
                        Some((n, s, t)) if valid_name(n) && valid_name(s) && valid_name(t) => {
                            arrows.push(((n.into(), s.into(), t.into()), at(col)))
                        }
                        _ => {
                            return Err(at(col).err(format!("expected `name: source->target`, found `{item}`")))
                        }
                    }
                }
            }
            "zero" | "comm" | "anti" => {
                let flavor = match key {
                    "comm" => Some(Flavor::Commutative),
                    "anti" => Some(Flavor::Anticommutative),
                    _ => None,
                };
                for (item, col) in list {
                    generators.push(Generator {
                        word: word(item, at(col))?,
                        flavor,
                        pos: at(col),
                    });
                }
            }
            "char" => {
                let v = value.trim();
                let p = v
                    .parse::<u64>()
                    .map_err(|_| at(value_col).err(format!("bad characteristic `{v}`")))?;
                field_char = Some((p, at(value_col)));
            }
            "koszul" => match value.trim() {
                "asserted" => koszul_asserted = true,
                "unknown" => koszul_asserted = false,
                v => return Err(at(value_col).err(format!("expected `asserted` or `unknown`, found `{v}`"))),
            },
            "max_degree" => {
                let v = value.trim();
                let d = v
                    .parse::<usize>()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| at(value_col).err(format!("bad degree bound `{v}`")))?;
                max_degree = Some(d);
            }
            _ => return Err(start.err(format!("unknown key `{key}`"))),
        }
    }

    let first = Pos { line: 1, col: 1 };
    let quiver = Quiver::new(
        vertices.iter().map(|(v, _)| v.clone()),
        arrows.iter().map(|(a, _)| a.clone()),
    )
    .map_err(|e| {
        let pos = match &e {
            QuiverError::DuplicateVertex(v) => vertices.iter().rev().find(|(n, _)| n == v).map(|(_, p)| *p),
            QuiverError::DuplicateArrow(a) | QuiverError::DanglingEndpoint { arrow: a, .. } => {
                arrows.iter().rev().find(|((n, _, _), _)| n == a).map(|(_, p)| *p)
            }
            _ => None,
        };
        pos.unwrap_or(first).err(&e)
    })?;
    let quiver = Arc::new(quiver);

    let mut flavor = declared.map(|(f, _)| f);
    for g in &generators {
        if let Some(f) = g.flavor {
            match flavor {
                None => flavor = Some(f),
                Some(d) if d != f => {
                    return Err(g.pos.err(format!("{f} relation in a {d} ideal")));
                }
                Some(_) => {}
            }
        }
    }
    let (p, char_pos) = field_char.unwrap_or((0, first));
    let raw_of = |gs: &mut dyn Iterator<Item = &Generator>| {
        let mut raw = RawIdeal {
            flavor,
            field_char: p,
            ..RawIdeal::default()
        };
        for g in gs {
            match g.flavor {
                None => raw.monomials.push(g.word.clone()),
                Some(f) => raw.relations.push(RawRelation {
                    flavor: f,
                    word: g.word.clone(),
                }),
            }
        }
        raw
    };
    // Each generator on its own first, so errors point at the right item.
    for g in &generators {
        let raw = RawIdeal {
            field_char: 0,
            ..raw_of(&mut std::iter::once(g))
        };
        validate_ideal(quiver.clone(), &raw).map_err(|e| g.pos.err(e))?;
    }
    let (spec, mut notices) = validate_ideal(quiver.clone(), &raw_of(&mut generators.iter())).map_err(|e| match e {
        IdealError::BadCharacteristic(_) => char_pos.err(e),
        e => first.err(e),
    })?;
    notices.splice(0..0, quiver.notices());
    Ok(SpecDocument {
        spec,
        koszul_asserted,
        max_degree,
        notices,
    })
}

/// Canonical text for a document; parsing it gives back the same document.
pub fn print_spec(doc: &SpecDocument) -> String {
    let spec = &doc.spec;
    let q = spec.quiver();
    let mut out = String::new();
    out.push_str(&format!("vertices: {}\n", q.vertex_names().join(", ")));
    if q.arrow_count() > 0 {
        let arrows: Vec<String> = q
            .arrows()
            .iter()
            .map(|a| format!("{}: {}->{}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
            .collect();
        out.push_str(&format!("arrows: {}\n", arrows.join(", ")));
    }
    out.push_str(&format!("ideal {}\n", spec.flavor()));
    let pairs = |set: &std::collections::BTreeSet<_>| -> Vec<String> {
        set.iter().map(|&(a, b)| q.render_word(&[a, b])).collect()
    };
    if !spec.monomials().is_empty() {
        out.push_str(&format!("zero: {}\n", pairs(spec.monomials()).join(", ")));
    }
    if !spec.relations().is_empty() {
        let key = match spec.flavor() {
            Flavor::Commutative => "comm",
            Flavor::Anticommutative => "anti",
        };
        out.push_str(&format!("{key}: {}\n", pairs(spec.relations()).join(", ")));
    }
    out.push_str(&format!("char: {}\n", spec.field_char()));
    if doc.koszul_asserted {
        out.push_str("koszul: asserted\n");
    }
    if let Some(d) = doc.max_degree {
        out.push_str(&format!("max_degree: {d}\n"));
    }
    out
}
