//! JSON graph documents. Rationals travel as strings (`"3"`, `"-1/2"`) so no
//! value ever passes through a float.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GkmError, Result};
use crate::graph::{GkmGraph, Vertex};
use crate::polyring::{format_rational, Rational, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub mu: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub weight: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub rank: usize,
    pub valence: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<String>>,
}

/// Parses `a` or `a/b` with integer `a`, `b` and `b != 0`.
pub fn parse_rational(text: &str, at: &str) -> Result<Rational> {
    let err = |message: String| GkmError::ParseError {
        at: at.to_string(),
        message,
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| err(format!("`{text}` is not a rational number")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| err(format!("`{text}` is not a rational number")))?;
    if den.is_zero() {
        return Err(err(format!("`{text}` has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma separated covector such as `1/2,3`.
pub fn parse_covector(text: &str) -> Result<WeightVector> {
    let parts: Vec<&str> = text.split(',').collect();
    let comps = parts
        .iter()
        .enumerate()
        .map(|(i, p)| parse_rational(p, &format!("xi[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(comps))
}

fn parse_vector(items: &[String], at: &str) -> Result<WeightVector> {
    let comps = items
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(comps))
}

fn format_vector(w: &WeightVector) -> Vec<String> {
    w.components().iter().map(format_rational).collect()
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| GkmError::ParseError {
            at: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    fn check_len(&self, len: usize, at: &str) -> Result<()> {
        if len != self.rank {
            return Err(GkmError::ParseError {
                at: at.to_string(),
                message: format!("expected {} components, found {len}", self.rank),
            });
        }
        Ok(())
    }

    /// Builds the graph without checking the GKM axioms.
    pub fn to_graph(&self) -> Result<GkmGraph> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let at = format!("vertices[{i}].mu");
            self.check_len(v.mu.len(), &at)?;
            vertices.push(Vertex {
                id: v.id.clone(),
                mu: parse_vector(&v.mu, &at)?,
            });
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let at = format!("edges[{i}].weight");
            self.check_len(e.weight.len(), &at)?;
            edges.push((e.from.clone(), e.to.clone(), parse_vector(&e.weight, &at)?));
        }
        GkmGraph::new(self.rank, self.valence, vertices, edges)
    }

    /// Builds the graph and requires it to pass validation.
    pub fn to_validated_graph(&self) -> Result<GkmGraph> {
        self.to_graph()?.validated()
    }

    pub fn xi(&self) -> Result<Option<WeightVector>> {
        match &self.xi {
            None => Ok(None),
            Some(items) => {
                self.check_len(items.len(), "xi")?;
                parse_vector(items, "xi").map(Some)
            }
        }
    }

    pub fn from_graph(g: &GkmGraph, xi: Option<&WeightVector>) -> Self {
        GraphDocument {
            rank: g.rank(),
            valence: g.valence(),
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexDoc {
                    id: v.id.clone(),
                    mu: format_vector(&v.mu),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    from: g.id(e.from).to_string(),
                    to: g.id(e.to).to_string(),
                    weight: format_vector(&e.weight),
                })
                .collect(),
            xi: xi.map(format_vector),
        }
    }

    /// Same document with every rational written in lowest terms.
    pub fn canonicalized(&self) -> Result<Self> {
        let g = self.to_graph()?;
        Ok(Self::from_graph(&g, self.xi()?.as_ref()))
    }
}

pub fn load_document(path: &Path) -> Result<GraphDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| GkmError::ParseError {
        at: path.display().to_string(),
        message: e.to_string(),
    })?;
    GraphDocument::from_json(&text)
}

/// Reads and validates a graph file.
pub fn load_graph(path: &Path) -> Result<GkmGraph> {
    load_document(path)?.to_validated_graph()
}
