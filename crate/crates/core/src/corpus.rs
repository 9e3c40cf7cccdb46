//! Built-in instances with their recorded expectations.

use serde::Serialize;

use crate::document::GraphDocument;
use crate::error::{GkmError, Result};
use crate::graph::GkmGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    /// Table row letter, or `None` when no row matches.
    pub table_type: Option<char>,
    /// b_0, b_2, b_4, b_6.
    pub betti: Vec<usize>,
    pub hard_lefschetz: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusInstance {
    pub name: &'static str,
    pub summary: &'static str,
    #[serde(skip)]
    pub source: &'static str,
    pub enabled: bool,
    pub expected: Expected,
}

impl CorpusInstance {
    pub fn document(&self) -> GraphDocument {
        GraphDocument::from_json(self.source).expect("built-in documents parse")
    }

    pub fn graph(&self) -> Result<GkmGraph> {
        self.document().to_validated_graph()
    }
}

fn expected(table_type: Option<char>, betti: [usize; 4]) -> Expected {
    Expected {
        table_type,
        betti: betti.to_vec(),
        hard_lefschetz: true,
    }
}

pub fn instances() -> Vec<CorpusInstance> {
    vec![
        CorpusInstance {
            name: "cp3-k4",
            summary: "CP^3 projected to the plane: triangle with one interior vertex",
            source: include_str!("../../../corpus/cp3-k4.json"),
            enabled: true,
            expected: expected(Some('a'), [1, 1, 1, 1]),
        },
        CorpusInstance {
            name: "cp3-quad",
            summary: "CP^3 under a second projection: quadrilateral image",
            source: include_str!("../../../corpus/cp3-quad.json"),
            enabled: true,
            expected: expected(Some('b'), [1, 1, 1, 1]),
        },
        CorpusInstance {
            name: "blowup-line-c",
            summary: "CP^3 blown up along a line: quadrilateral, six vertices, one tetragonal cycle",
            source: include_str!("../../../corpus/blowup-line-c.json"),
            enabled: true,
            expected: expected(Some('c'), [1, 2, 2, 1]),
        },
        CorpusInstance {
            name: "tol-d",
            summary: "quadrilateral with two interior vertices and a negative coefficient",
            source: include_str!("../../../corpus/tol-d.json"),
            enabled: true,
            expected: expected(Some('d'), [1, 2, 2, 1]),
        },
        CorpusInstance {
            name: "blowup-point-e",
            summary: "CP^3 blown up at a point: pentagon",
            source: include_str!("../../../corpus/blowup-point-e.json"),
            enabled: true,
            expected: expected(Some('e'), [1, 2, 2, 1]),
        },
        CorpusInstance {
            name: "flag-su3",
            summary: "complete flags in C^3: hexagon with three long diagonals",
            source: include_str!("../../../corpus/flag-su3.json"),
            enabled: true,
            expected: expected(Some('f'), [1, 2, 2, 1]),
        },
        CorpusInstance {
            name: "cube-g",
            summary: "(CP^1)^3 projected: hexagon with two interior vertices",
            source: include_str!("../../../corpus/cube-g.json"),
            enabled: true,
            expected: expected(Some('g'), [1, 3, 3, 1]),
        },
        CorpusInstance {
            name: "blowup-line-hex",
            summary: "CP^3 blown up along a line, hexagonal projection outside every table row",
            source: include_str!("../../../corpus/blowup-line-hex.json"),
            enabled: true,
            expected: expected(None, [1, 2, 2, 1]),
        },
    ]
}

pub fn names() -> Vec<&'static str> {
    instances().iter().map(|i| i.name).collect()
}

pub fn instance(name: &str) -> Result<CorpusInstance> {
    instances()
        .into_iter()
        .find(|i| i.name == name)
        .ok_or_else(|| GkmError::UnknownInstance(name.to_string()))
}

pub fn graph(name: &str) -> Result<GkmGraph> {
    instance(name)?.graph()
}
