use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical::{CanonicalKey, KeyOptions, Shape};
use super::decomposition::{Edge, Leaf, LeafKind, PantsDecomposition, SlotRef};
use super::PantsError;
use crate::surface::Surface;

pub const MAX_ENUMERATED_PANTS: usize = 4;

/// `(vertex, vertex, flip)`
type RawEdge = (usize, usize, bool);
/// `(vertex, kind)`
type RawLeaf = (usize, LeafKind);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EnumerationOptions {
    pub key: KeyOptions,
    /// Allow puncture leaves. Switched on automatically when the surface
    /// constraint has punctures.
    pub include_punctures: bool,
}

/// One representative per canonical key, sorted by key.
pub fn enumerate_types(
    pants_count: usize,
    constraint: Option<&Surface>,
    opts: EnumerationOptions,
) -> Result<Vec<PantsDecomposition>, PantsError> {
    if pants_count == 0 || pants_count > MAX_ENUMERATED_PANTS {
        return Err(PantsError::PantsCountOutOfRange(pants_count));
    }
    if let Some(s) = constraint {
        if s.invariants().pants_count != pants_count as i64 {
            return Ok(Vec::new());
        }
    }
    let mut kinds = vec![LeafKind::Boundary, LeafKind::Crosscap];
    if opts.include_punctures || constraint.is_some_and(|s| s.punctures > 0) {
        kinds.push(LeafKind::Puncture);
    }
    let shapes = raw_shapes(pants_count, &kinds);
    let keyed: Vec<(CanonicalKey, PantsDecomposition)> = shapes
        .par_iter()
        .filter_map(|shape| {
            let d = realize(shape);
            let surface = d.validate().ok()?;
            if constraint.is_some_and(|c| *c != surface) {
                return None;
            }
            Some((super::canonical_key(&d, opts.key), d))
        })
        .collect();
    let mut unique: BTreeMap<CanonicalKey, PantsDecomposition> = BTreeMap::new();
    for (key, d) in keyed {
        unique.entry(key).or_insert(d);
    }
    Ok(unique.into_values().collect())
}

/// Every slot-free multigraph on `n` trivalent vertices, connected or not.
fn raw_shapes(n: usize, kinds: &[LeafKind]) -> Vec<Shape> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut edges = Vec::new();
    let mut cap = vec![3usize; n];
    place_edges(&pairs, 0, &mut cap, &mut edges, &mut |cap, edges| {
        let mut leaves = Vec::new();
        place_leaves(cap, 0, kinds, 0, &mut leaves, &mut |leaves| {
            out.push(Shape {
                vertices: n,
                edges: edges.to_vec(),
                leaves: leaves.to_vec(),
            });
        });
    });
    out
}

fn place_edges(
    pairs: &[(usize, usize)],
    idx: usize,
    cap: &mut Vec<usize>,
    edges: &mut Vec<RawEdge>,
    visit: &mut dyn FnMut(&[usize], &[RawEdge]),
) {
    let Some(&(i, j)) = pairs.get(idx) else {
        visit(cap, edges);
        return;
    };
    let max = if i == j { cap[i] / 2 } else { cap[i].min(cap[j]) };
    for count in 0..=max {
        for flipped in 0..=count {
            let before = edges.len();
            for k in 0..count {
                edges.push((i, j, k < flipped));
            }
            if i == j {
                cap[i] -= 2 * count;
            } else {
                cap[i] -= count;
                cap[j] -= count;
            }
            place_edges(pairs, idx + 1, cap, edges, visit);
            if i == j {
                cap[i] += 2 * count;
            } else {
                cap[i] += count;
                cap[j] += count;
            }
            edges.truncate(before);
        }
    }
}

/// Fills remaining slots with leaf multisets, kinds taken in nondecreasing order.
fn place_leaves(
    cap: &[usize],
    v: usize,
    kinds: &[LeafKind],
    min_kind: usize,
    leaves: &mut Vec<(usize, LeafKind)>,
    visit: &mut dyn FnMut(&[RawLeaf]),
) {
    if v == cap.len() {
        visit(leaves);
        return;
    }
    let placed = leaves.iter().filter(|(u, _)| *u == v).count();
    if placed == cap[v] {
        place_leaves(cap, v + 1, kinds, 0, leaves, visit);
        return;
    }
    for k in min_kind..kinds.len() {
        leaves.push((v, kinds[k]));
        place_leaves(cap, v, kinds, k, leaves, visit);
        leaves.pop();
    }
}

/// Assigns slots in order: edges first, then leaves; labels `b0`, `p0`, `cc0`, ...
fn realize(shape: &Shape) -> PantsDecomposition {
    let mut next = vec![0u8; shape.vertices];
    let mut take = |v: usize| {
        let s = SlotRef(v, next[v]);
        next[v] += 1;
        s
    };
    let edges = shape
        .edges
        .iter()
        .map(|&(u, v, flip)| Edge {
            a: take(u),
            b: take(v),
            flip,
        })
        .collect();
    let mut counters: BTreeMap<LeafKind, usize> = BTreeMap::new();
    let leaves = shape
        .leaves
        .iter()
        .map(|&(v, kind)| {
            let c = counters.entry(kind).or_default();
            let label = format!("{}{c}", kind.label_prefix());
            *c += 1;
            Leaf {
                at: take(v),
                kind,
                label,
            }
        })
        .collect();
    PantsDecomposition {
        pants: shape.vertices,
        edges,
        leaves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(list: &[PantsDecomposition]) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for d in list {
            *m.entry(d.validate().unwrap().name()).or_default() += 1;
        }
        m
    }

    #[test]
    fn one_pants_census() {
        let all = enumerate_types(1, None, EnumerationOptions::default()).unwrap();
        assert_eq!(all.len(), 8);
        let by = surfaces(&all);
        assert_eq!(by["F_{0,3}"], 1);
        assert_eq!(by["F_{1,1}"], 1);
        assert_eq!(by["N_{2,1}"], 2);
        assert_eq!(by["N_{1,2}"], 1);
        assert_eq!(by["N_{3,0}"], 3);
    }

    #[test]
    fn absorption_on_merges_one_type() {
        let opts = EnumerationOptions {
            key: KeyOptions::absorption(true),
            ..Default::default()
        };
        assert_eq!(enumerate_types(1, None, opts).unwrap().len(), 7);
    }

    #[test]
    fn filtered() {
        let n21 = Surface::non_orientable(2, 1, 0).unwrap();
        let n12 = Surface::non_orientable(1, 2, 0).unwrap();
        let o = EnumerationOptions::default();
        assert_eq!(enumerate_types(1, Some(&n21), o).unwrap().len(), 2);
        assert_eq!(enumerate_types(1, Some(&n12), o).unwrap().len(), 1);
        assert!(enumerate_types(2, Some(&n12), o).unwrap().is_empty());
    }

    #[test]
    fn punctures_are_optional() {
        let with = EnumerationOptions {
            include_punctures: true,
            ..Default::default()
        };
        let all = enumerate_types(1, None, with).unwrap();
        assert!(all.len() > 8);
        let f03_1 = Surface::orientable(0, 2, 1);
        assert_eq!(enumerate_types(1, Some(&f03_1), EnumerationOptions::default()).unwrap().len(), 1);
    }

    #[test]
    fn range_checked() {
        let o = EnumerationOptions::default();
        assert!(enumerate_types(0, None, o).is_err());
        assert!(enumerate_types(5, None, o).is_err());
    }

    #[test]
    fn slot_count_identity() {
        for v in 1..=3 {
            for d in enumerate_types(v, None, EnumerationOptions::default()).unwrap() {
                assert_eq!(3 * d.pants, 2 * d.edges.len() + d.leaves.len());
                assert_eq!(d.validate().unwrap().euler_characteristic(), -(v as i64));
            }
        }
    }
}
