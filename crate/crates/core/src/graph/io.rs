//! JSON graph files: `{"n", "edges": [[u,v],...], "labels"?, "certificates": [...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Certificates, Graph, Label};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    #[serde(default)]
    pub certificates: Vec<String>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[Label]>::to_vec),
            certificates: g
                .certificates()
                .names()
                .into_iter()
                .map(String::from)
                .collect(),
        }
    }
}

impl GraphFile {
    /// Validates and builds the graph. Stored certificates are checked for
    /// well-formedness but not trusted: the loaded graph carries none.
    pub fn into_graph(self) -> Result<Graph> {
        if let Some(bad) = self
            .certificates
            .iter()
            .find(|c| !Certificates::is_known_name(c))
        {
            return Err(Error::argument(format!("unknown certificate {bad:?}")));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges)?.with_labels(self.labels)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from(g)).expect("graph serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)
        .map_err(|e| Error::argument(format!("malformed graph JSON: {e}")))?;
    file.into_graph()
}

pub fn load(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::argument(format!("cannot read graph file {}: {e}", path.display())))?;
    from_json(&text)
}
