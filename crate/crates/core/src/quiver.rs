//! Finite quivers and paths.
//!
//! Paths compose left to right: `p * q` means "first `p`, then `q`", so the
//! word `ac` is the arrow `a` followed by the arrow `c`. Declaration order of
//! arrows is the total order used for canonical words everywhere downstream.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::notice::Notice;

/// Suffix marking arrows of an opposite quiver.
pub const OPPOSITE_MARK: char = '°';

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArrowId(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("empty name")]
    EmptyName,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` uses undeclared vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("empty word")]
    EmptyWord,
    #[error("`{0}` is not a path: consecutive arrows do not compose")]
    NotComposable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    /// Builds and validates a quiver. Disconnected quivers are accepted;
    /// see [`Quiver::notices`].
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let mut quiver = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        };
        for name in vertices {
            let name = name.into();
            if name.is_empty() {
                return Err(QuiverError::EmptyName);
            }
            if quiver.vertex_index.contains_key(&name) {
                return Err(QuiverError::DuplicateVertex(name));
            }
            quiver
                .vertex_index
                .insert(name.clone(), VertexId(quiver.vertices.len()));
            quiver.vertices.push(name);
        }
        for (name, source, target) in arrows {
            let (name, source, target) = (name.into(), source.into(), target.into());
            if name.is_empty() {
                return Err(QuiverError::EmptyName);
            }
            if quiver.arrow_index.contains_key(&name) {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let lookup = |v: &String| {
                quiver
                    .vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| QuiverError::DanglingEndpoint {
                        arrow: name.clone(),
                        vertex: v.clone(),
                    })
            };
            let (source, target) = (lookup(&source)?, lookup(&target)?);
            quiver
                .arrow_index
                .insert(name.clone(), ArrowId(quiver.arrows.len()));
            quiver.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(quiver)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn is_loop(&self, a: ArrowId) -> bool {
        self.arrows[a.0].is_loop()
    }

    /// `ab` is a path, i.e. the target of `a` is the origin of `b`.
    pub fn composable(&self, a: ArrowId, b: ArrowId) -> bool {
        self.target(a) == self.source(b)
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, QuiverError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId, QuiverError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    /// Loops based at `x`, in declaration order.
    pub fn loops_at(&self, x: VertexId) -> Vec<ArrowId> {
        self.arrow_ids()
            .filter(|&a| self.source(a) == x && self.target(a) == x)
            .collect()
    }

    pub fn is_path(&self, word: &[ArrowId]) -> bool {
        word.windows(2).all(|w| self.composable(w[0], w[1]))
    }

    /// Validates a nonempty arrow word as a path.
    pub fn path(&self, word: &[ArrowId]) -> Result<Path, QuiverError> {
        let (first, last) = match (word.first(), word.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(QuiverError::EmptyWord),
        };
        if !self.is_path(word) {
            return Err(QuiverError::NotComposable(self.render_word(word)));
        }
        Ok(Path {
            source: self.source(first),
            target: self.target(last),
            arrows: word.to_vec(),
        })
    }

    pub fn path_from_names(&self, names: &[&str]) -> Result<Path, QuiverError> {
        let word = names
            .iter()
            .map(|n| self.arrow_id(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&word)
    }

    /// Looks up a `*`-separated word such as `a*b*c`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<ArrowId>, QuiverError> {
        text.split('*')
            .map(|n| self.arrow_id(n.trim()))
            .collect()
    }

    /// Renders a word as `a*b*c`.
    pub fn render_word(&self, word: &[ArrowId]) -> String {
        word.iter()
            .map(|&a| self.arrow_name(a))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn render_path(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            self.vertex_name(path.source).to_string()
        } else {
            self.render_word(&path.arrows)
        }
    }

    /// Product `p * q`; `None` is the zero path.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            source: p.source,
            target: q.target,
            arrows,
        })
    }

    /// Same vertices, every arrow reversed and renamed with the opposite
    /// mark (or stripped of it, so that the construction is an involution).
    pub fn opposite(&self) -> Quiver {
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| {
                (
                    opposite_name(&a.name),
                    self.vertices[a.target.0].clone(),
                    self.vertices[a.source.0].clone(),
                )
            })
            .collect();
        Quiver::new(self.vertices.clone(), arrows)
            .expect("opposite of a valid quiver is valid")
    }

    /// The subquiver `Q_x`: the vertex `x`, every arrow starting or ending at
    /// `x`, and the endpoints of those arrows. Declaration order is kept.
    pub fn vertex_subquiver(&self, x: VertexId) -> Result<Quiver, QuiverError> {
        if x.0 >= self.vertices.len() {
            return Err(QuiverError::UnknownVertex(format!("#{}", x.0)));
        }
        let incident: Vec<&Arrow> = self
            .arrows
            .iter()
            .filter(|a| a.source == x || a.target == x)
            .collect();
        let mut keep = BTreeSet::from([x]);
        for a in &incident {
            keep.insert(a.source);
            keep.insert(a.target);
        }
        let vertices: Vec<String> = keep.iter().map(|v| self.vertices[v.0].clone()).collect();
        let arrows: Vec<(String, String, String)> = incident
            .iter()
            .map(|a| {
                (
                    a.name.clone(),
                    self.vertices[a.source.0].clone(),
                    self.vertices[a.target.0].clone(),
                )
            })
            .collect();
        Ok(Quiver::new(vertices, arrows).expect("subquiver of a valid quiver is valid"))
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for a in &self.arrows {
            let (r1, r2) = (find(&mut parent, a.source.0), find(&mut parent, a.target.0));
            if r1 != r2 {
                parent[r1.max(r2)] = r1.min(r2);
            }
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let root = find(&mut parent, v);
            let idx = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[idx].push(VertexId(v));
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Construction-time warnings (currently only disconnectedness).
    pub fn notices(&self) -> Vec<Notice> {
        let components = self.components();
        if components.len() <= 1 {
            return Vec::new();
        }
        let listing = components
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&v| self.vertex_name(v)).collect();
                format!("{{{}}}", names.join(", "))
            })
            .collect::<Vec<_>>()
            .join(" ");
        vec![Notice::new(
            "disconnected-quiver",
            format!(
                "quiver has {} connected components {listing}; the degree-0 center has one identity per component",
                components.len()
            ),
        )]
    }
}

fn opposite_name(name: &str) -> String {
    match name.strip_suffix(OPPOSITE_MARK) {
        Some(stripped) if !stripped.is_empty() => stripped.to_string(),
        _ => format!("{name}{OPPOSITE_MARK}"),
    }
}

/// A path of a quiver: a vertex (degree 0) or a composable arrow word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn degree(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}
