use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::decomposition::{LeafKind, PantsDecomposition};

/// Representative-independent serialization of a decomposition type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short hex digest used for labels.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(&self.0);
        hash[..6].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digest())
    }
}

/// Equivalence used by [`canonical_key`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KeyOptions {
    /// When set, a decomposition containing a crosscap has all flip bits
    /// identified: any edge lies on a path to the crosscap in a connected graph.
    pub crosscap_absorption: bool,
}

impl KeyOptions {
    pub fn absorption(on: bool) -> Self {
        KeyOptions {
            crosscap_absorption: on,
        }
    }
}

/// Slot-free multigraph form: what remains after forgetting slot order and labels.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, bool)>,
    pub leaves: Vec<(usize, LeafKind)>,
}

impl Shape {
    pub fn of(d: &PantsDecomposition, opts: KeyOptions) -> Shape {
        let absorb = opts.crosscap_absorption && d.leaves.iter().any(|l| l.kind == LeafKind::Crosscap);
        Shape {
            vertices: d.pants,
            edges: d
                .edges
                .iter()
                .map(|e| (e.a.0, e.b.0, e.flip && !absorb))
                .collect(),
            leaves: d.leaves.iter().map(|l| (l.at.0, l.kind)).collect(),
        }
    }

    /// Serializes the shape after renaming vertex `v` to `perm[v]` and
    /// reversing every vertex in `gauge`.
    fn encode(&self, perm: &[usize], gauge: u32) -> Vec<u8> {
        let flipped = |v: usize| gauge >> v & 1 == 1;
        let mut edges: Vec<(u8, u8, u8)> = self
            .edges
            .iter()
            .map(|&(u, v, f)| {
                let f = if u == v { f } else { f ^ flipped(u) ^ flipped(v) };
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                (a as u8, b as u8, f as u8)
            })
            .collect();
        edges.sort_unstable();
        let mut leaves: Vec<(u8, u8)> = self
            .leaves
            .iter()
            .map(|&(v, k)| (perm[v] as u8, k.code()))
            .collect();
        leaves.sort_unstable();
        let mut out = Vec::with_capacity(2 + 3 * edges.len() + 2 * leaves.len());
        out.push(self.vertices as u8);
        out.push(edges.len() as u8);
        for (a, b, f) in edges {
            out.extend([a, b, f]);
        }
        for (v, k) in leaves {
            out.extend([v, k]);
        }
        out
    }

    /// Per-vertex data that any isomorphism must preserve.
    fn vertex_invariants(&self) -> Vec<Vec<u8>> {
        let mut inv = vec![vec![0u8; 6]; self.vertices];
        for &(u, v, f) in &self.edges {
            if u == v {
                inv[u][if f { 1 } else { 0 }] += 1;
            } else {
                inv[u][2] += 1;
                inv[v][2] += 1;
            }
        }
        for &(v, k) in &self.leaves {
            inv[v][3 + k.code() as usize] += 1;
        }
        // one refinement round: multiset of neighbor invariants
        let base = inv.clone();
        for (v, row) in inv.iter_mut().enumerate() {
            let mut nbrs: Vec<&Vec<u8>> = self
                .edges
                .iter()
                .filter(|&&(a, b, _)| a != b && (a == v || b == v))
                .map(|&(a, b, _)| &base[if a == v { b } else { a }])
                .collect();
            nbrs.sort();
            for n in nbrs {
                row.extend_from_slice(n);
            }
        }
        inv
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let inv = self.vertex_invariants();
        let mut order: Vec<usize> = (0..self.vertices).collect();
        order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match blocks.last_mut() {
                Some(block) if inv[block[0]] == inv[v] => block.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        let has_cross_edges = self.edges.iter().any(|&(u, v, _)| u != v);
        let gauges: u32 = if has_cross_edges {
            1 << self.vertices.saturating_sub(1)
        } else {
            1
        };
        let mut best: Option<Vec<u8>> = None;
        let mut perm = vec![0usize; self.vertices];
        for_each_block_permutation(&blocks, &mut perm, 0, 0, &mut |perm| {
            // reversing every vertex at once is trivial, so the last vertex stays fixed
            for gauge in 0..gauges {
                let bytes = self.encode(perm, gauge);
                if best.as_ref().is_none_or(|b| bytes < *b) {
                    best = Some(bytes);
                }
            }
        });
        best.unwrap_or_default()
    }
}

fn for_each_block_permutation(
    blocks: &[Vec<usize>],
    perm: &mut Vec<usize>,
    block: usize,
    offset: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(members) = blocks.get(block) else {
        visit(perm);
        return;
    };
    let mut items = members.clone();
    permute(&mut items, 0, &mut |arrangement| {
        for (i, &v) in arrangement.iter().enumerate() {
            perm[v] = offset + i;
        }
        for_each_block_permutation(blocks, perm, block + 1, offset + members.len(), visit);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Canonical key of a valid decomposition.
///
/// Invariant under relabeling pants, permuting slots, renaming leaves within
/// a kind, and re-orienting individual pants.
pub fn canonical_key(d: &PantsDecomposition, opts: KeyOptions) -> CanonicalKey {
    CanonicalKey(Shape::of(d, opts).canonical_bytes())
}
