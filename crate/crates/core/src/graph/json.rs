use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Adjacency-list form: `{"n": .., "edges": [[i, j], ..], "labels": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))?;
        match j.labels {
            Some(labels) if labels.len() != j.n => Err(Error::DimensionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                j.n
            ))),
            Some(labels) => Ok(g.with_labels(labels)),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serialises")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        serde_json::from_str::<GraphJson>(text)?.try_into()
    }

    /// Parses either JSON (leading `{`) or graph6.
    pub fn parse_any(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            super::graph6_decode(text.trim())
        }
    }
}
