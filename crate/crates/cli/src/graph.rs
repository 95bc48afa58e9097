use std::fmt::Write;

use rank2_crystal::crystal::{ball, Moves};
use rank2_crystal::lspath::LsCrystal;
use rank2_crystal::{Index, ShapeWeight};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

/// Integers are written as decimal strings so that no precision is lost.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub path: String,
    /// Coordinates in the fundamental weights.
    pub weight: [String; 2],
    /// `[n₁, n₂]` with weight `λ − n₁α₁ − n₂α₂`.
    pub root: [String; 2],
    pub epsilon: [String; 2],
    pub phi: [String; 2],
}

/// `f_i(source) = target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub i: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub config: RunConfig,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl GraphDocument {
    /// The ball of radius `config.depth` around `π_λ`.
    pub fn build(config: &RunConfig, shape: ShapeWeight) -> Self {
        let paths = LsCrystal::new(shape.clone());
        let b = ball(&paths, paths.straight_line(), config.depth, Moves::All)
            .unwrap_or_else(|e| match e {});
        let vertices = b
            .vertices
            .iter()
            .enumerate()
            .map(|(id, p)| {
                let w = paths.weight(p);
                let rc = shape
                    .root_coords(&w)
                    .expect("path weights differ from λ by roots");
                let (e1, f1) = paths.eps_phi(p, Index::One);
                let (e2, f2) = paths.eps_phi(p, Index::Two);
                Vertex {
                    id,
                    path: p.to_string(),
                    weight: [w.c1().to_string(), w.c2().to_string()],
                    root: [rc.n1.to_string(), rc.n2.to_string()],
                    epsilon: [e1.to_string(), e2.to_string()],
                    phi: [f1.to_string(), f2.to_string()],
                }
            })
            .collect();
        let edges = b
            .edges
            .iter()
            .map(|&(source, target, i)| Edge {
                source,
                target,
                i: i.number(),
            })
            .collect();
        GraphDocument {
            config: config.clone(),
            vertices,
            edges,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for v in &self.vertices {
            writeln!(
                out,
                "  {} [label=\"{}\\nwt=({},{})\"];",
                v.id, v.path, v.weight[0], v.weight[1]
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  {} -> {} [label=\"f{}\"];", e.source, e.target, e.i).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph documents serialize") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(depth: usize) -> GraphDocument {
        let config = RunConfig {
            depth,
            ..RunConfig::default()
        };
        let shape = config.shape().unwrap();
        GraphDocument::build(&config, shape)
    }

    #[test]
    fn depth_one_has_three_vertices() {
        let d = doc(1);
        let paths: Vec<&str> = d.vertices.iter().map(|v| v.path.as_str()).collect();
        assert_eq!(paths, ["0:0:[]", "1:1:[]", "-1:-1:[]"]);
        assert_eq!(d.edges, vec![Edge { source: 0, target: 1, i: 1 }, Edge { source: 2, target: 0, i: 2 }]);
        assert_eq!(doc(0).vertices.len(), 1);
        assert!(doc(0).edges.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let d = doc(3);
        let back: GraphDocument = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn dot_labels() {
        let dot = doc(1).to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("0 -> 1 [label=\"f1\"]"));
        assert!(dot.contains("2 -> 0 [label=\"f2\"]"));
    }
}
