use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rewrite::{applicable_moves, apply, Move};
use super::MoveError;
use crate::pants::{canonical_key, enumerate_types, CanonicalKey, EnumerationOptions, KeyOptions, PantsDecomposition};
use crate::surface::Surface;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveGraphNode {
    pub digest: String,
    pub one_sided: usize,
    pub representative: PantsDecomposition,
    #[serde(skip)]
    pub key: Option<CanonicalKey>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveGraphEdge {
    pub from: usize,
    pub to: usize,
    /// A move realizing the edge, applied to a member of `from`.
    pub via: Move,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveGraph {
    pub surface: Surface,
    pub pants_count: usize,
    pub crosscap_absorption: bool,
    pub nodes: Vec<MoveGraphNode>,
    pub edges: Vec<MoveGraphEdge>,
    pub components: usize,
}

/// Decompositions sharing a canonical key. Without absorption this is just the
/// representative; with it, every flip assignment when a crosscap is present.
pub(crate) fn members(d: &PantsDecomposition, opts: KeyOptions) -> Vec<PantsDecomposition> {
    let absorbs = opts.crosscap_absorption && d.curve_census().one_sided > 0;
    if !absorbs || d.edges.is_empty() {
        return vec![d.clone()];
    }
    (0u32..1 << d.edges.len())
        .map(|mask| {
            let mut m = d.clone();
            for (i, e) in m.edges.iter_mut().enumerate() {
                e.flip = mask >> i & 1 == 1;
            }
            m
        })
        .collect()
}

/// Type-level move graph of a surface at the given pants count.
pub fn build_move_graph(
    surface: &Surface,
    pants_count: usize,
    opts: EnumerationOptions,
) -> Result<MoveGraph, MoveError> {
    let reps = enumerate_types(pants_count, Some(surface), opts)?;
    let mut nodes: Vec<MoveGraphNode> = reps
        .into_iter()
        .map(|d| {
            let key = canonical_key(&d, opts.key);
            MoveGraphNode {
                digest: key.digest(),
                one_sided: d.curve_census().one_sided,
                representative: d,
                key: Some(key),
            }
        })
        .collect();
    nodes.sort_by(|a, b| (&a.digest, &a.key).cmp(&(&b.digest, &b.key)));
    let index: BTreeMap<&CanonicalKey, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (n.key.as_ref().unwrap(), i))
        .collect();

    let found: Vec<Vec<(usize, Move)>> = nodes
        .par_iter()
        .map(|node| {
            let own = node.key.as_ref().unwrap();
            let mut out = Vec::new();
            for member in members(&node.representative, opts.key) {
                for m in applicable_moves(&member) {
                    let next = apply(&member, &m).expect("applicable move applies");
                    let key = canonical_key(&next, opts.key);
                    if &key != own {
                        let j = *index.get(&key).expect("moves preserve the surface");
                        out.push((j, m));
                    }
                }
            }
            out
        })
        .collect();

    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (i, list) in found.into_iter().enumerate() {
        for (j, via) in list {
            if seen.insert((i.min(j), i.max(j))) {
                edges.push(MoveGraphEdge { from: i, to: j, via });
            }
        }
    }
    let components = count_components(nodes.len(), &edges);
    Ok(MoveGraph {
        surface: *surface,
        pants_count,
        crosscap_absorption: opts.key.crosscap_absorption,
        nodes,
        edges,
        components,
    })
}

fn count_components(n: usize, edges: &[MoveGraphEdge]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = n;
    for e in edges {
        let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

impl MoveGraph {
    /// DOT export with nodes in digest order and move literals on edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let name = self.surface.name();
        writeln!(s, "graph \"{}\" {{", self.surface).unwrap();
        writeln!(
            s,
            "  graph [surface=\"{name}\", pants={}, absorption={}, components={}];",
            self.pants_count, self.crosscap_absorption, self.components
        )
        .unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(
                s,
                "  n{i} [label=\"{}\\n{name}\", one_sided={}];",
                n.digest, n.one_sided
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.from, e.to, e.via).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(s: &str, v: usize, absorption: bool) -> MoveGraph {
        let opts = EnumerationOptions {
            key: KeyOptions::absorption(absorption),
            ..Default::default()
        };
        build_move_graph(&s.parse().unwrap(), v, opts).unwrap()
    }

    #[test]
    fn k1_graph() {
        let g = graph("N(2,1)", 1, false);
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert!(g.edges[0].via.variant().starts_with("IV"));
        assert_eq!(g.components, 1);
    }

    #[test]
    fn n30_graph_connected_both_ways() {
        for absorption in [false, true] {
            let g = graph("N(3,0)", 1, absorption);
            assert_eq!(g.nodes.len(), if absorption { 2 } else { 3 });
            assert_eq!(g.components, 1);
        }
    }

    #[test]
    fn pants_graph_trivial() {
        let g = graph("F(0,3)", 1, false);
        assert_eq!((g.nodes.len(), g.edges.len(), g.components), (1, 0, 1));
        let dot = g.to_dot();
        assert!(dot.contains("components=1"));
        assert!(!dot.contains("--"));
    }

    #[test]
    fn dot_is_deterministic() {
        assert_eq!(graph("N(3,1)", 2, false).to_dot(), graph("N(3,1)", 2, false).to_dot());
    }
}
