use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::PantsError;
use crate::surface::Surface;

/// A slot of a pair of pants: `(pants index, slot index in 0..3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlotRef(pub usize, pub u8);

impl SlotRef {
    pub fn pants(&self) -> usize {
        self.0
    }

    pub fn slot(&self) -> usize {
        self.1 as usize
    }
}

impl fmt::Display for SlotRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

/// A 2-sided interior pants curve, glued between two slots.
///
/// `flip` records whether the gluing reverses the local orientations of the
/// two pants. It is only meaningful up to re-orienting individual pants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: SlotRef,
    pub b: SlotRef,
    pub flip: bool,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a.0 == self.b.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Boundary,
    Puncture,
    Crosscap,
}

impl LeafKind {
    pub(crate) fn code(self) -> u8 {
        match self {
            LeafKind::Boundary => 0,
            LeafKind::Puncture => 1,
            LeafKind::Crosscap => 2,
        }
    }

    pub(crate) fn label_prefix(self) -> &'static str {
        match self {
            LeafKind::Boundary => "b",
            LeafKind::Puncture => "p",
            LeafKind::Crosscap => "cc",
        }
    }
}

/// A univalent vertex of the dual graph: a boundary component, a puncture,
/// or a 1-sided pants curve (crosscap).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Leaf {
    pub at: SlotRef,
    pub kind: LeafKind,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    A,
    B,
}

/// What fills a slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Occupant {
    EdgeEnd { edge: usize, end: End },
    Leaf(usize),
}

/// A pants decomposition as a decorated trivalent dual graph.
///
/// Each pair of pants is a vertex with three slots. Every slot is filled by
/// exactly one edge end or one leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PantsDecomposition {
    pub pants: usize,
    pub edges: Vec<Edge>,
    pub leaves: Vec<Leaf>,
}

/// Counts of pants curves by kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCensus {
    pub one_sided: usize,
    pub two_sided_interior: usize,
    pub boundary: usize,
    pub punctures: usize,
}

impl PantsDecomposition {
    pub fn from_json(text: &str) -> Result<Self, PantsError> {
        serde_json::from_str(text).map_err(|e| PantsError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }

    /// Fills a 3-by-`pants` table with slot occupants, checking that every
    /// slot is used exactly once.
    pub fn slot_table(&self) -> Result<Vec<[Occupant; 3]>, PantsError> {
        if self.pants == 0 {
            return Err(PantsError::Empty);
        }
        let mut table: Vec<[Option<Occupant>; 3]> = vec![[None; 3]; self.pants];
        let mut place = |slot: SlotRef, occ: Occupant| -> Result<(), PantsError> {
            if slot.0 >= self.pants {
                return Err(PantsError::PantsOutOfRange(slot));
            }
            if slot.1 > 2 {
                return Err(PantsError::SlotOutOfRange(slot));
            }
            let cell = &mut table[slot.0][slot.slot()];
            if cell.is_some() {
                return Err(PantsError::SlotReused(slot));
            }
            *cell = Some(occ);
            Ok(())
        };
        for (i, e) in self.edges.iter().enumerate() {
            place(e.a, Occupant::EdgeEnd { edge: i, end: End::A })?;
            place(e.b, Occupant::EdgeEnd { edge: i, end: End::B })?;
        }
        for (i, l) in self.leaves.iter().enumerate() {
            place(l.at, Occupant::Leaf(i))?;
        }
        table
            .into_iter()
            .enumerate()
            .map(|(p, row)| {
                let mut out = [Occupant::Leaf(0); 3];
                for (s, cell) in row.into_iter().enumerate() {
                    out[s] = cell.ok_or(PantsError::DanglingSlot(SlotRef(p, s as u8)))?;
                }
                Ok(out)
            })
            .collect()
    }

    /// Checks structure and assembles the surface the graph describes.
    pub fn validate(&self) -> Result<Surface, PantsError> {
        self.slot_table()?;
        let mut labels = BTreeSet::new();
        for l in &self.leaves {
            if !labels.insert(l.label.as_str()) {
                return Err(PantsError::DuplicateLabel(l.label.clone()));
            }
            if is_edge_id(&l.label) {
                return Err(PantsError::ReservedLabel(l.label.clone()));
            }
        }
        if let Some(p) = self.unreachable_pants() {
            return Err(PantsError::Disconnected(p));
        }
        let census = self.curve_census();
        let chi = -(self.pants as i64);
        let orientable = census.one_sided == 0 && self.is_orientable_decomposition();
        Ok(Surface::classify(chi, orientable, census.boundary as u32, census.punctures as u32)
            .expect("a connected trivalent graph always assembles a surface"))
    }

    fn unreachable_pants(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.pants];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, _, _) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    /// Neighbor lists `(other pants, edge index, flip)`; self-loops appear once.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize, bool)>> {
        let mut adj = vec![Vec::new(); self.pants];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a.0].push((e.b.0, i, e.flip));
            if !e.is_loop() {
                adj[e.b.0].push((e.a.0, i, e.flip));
            }
        }
        adj
    }

    /// An orientation of each pants making every internal gluing
    /// orientation-compatible, if one exists. Crosscap leaves are ignored.
    pub fn orientation_potential(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut side: Vec<Option<bool>> = vec![None; self.pants];
        for root in 0..self.pants {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _, flip) in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su ^ flip);
                            queue.push_back(w);
                        }
                        Some(sw) if sw != su ^ flip => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// True iff the complement of the 1-sided curves is orientable.
    pub fn is_orientable_decomposition(&self) -> bool {
        self.orientation_potential().is_some()
    }

    pub fn curve_census(&self) -> CurveCensus {
        let count = |k: LeafKind| self.leaves.iter().filter(|l| l.kind == k).count();
        CurveCensus {
            one_sided: count(LeafKind::Crosscap),
            two_sided_interior: self.edges.len(),
            boundary: count(LeafKind::Boundary),
            punctures: count(LeafKind::Puncture),
        }
    }

    /// Reverses the orientation of one pants: toggles the flip of every
    /// non-loop edge incident to it.
    pub fn reorient(&mut self, pants: usize) {
        for e in &mut self.edges {
            if !e.is_loop() && (e.a.0 == pants || e.b.0 == pants) {
                e.flip = !e.flip;
            }
        }
    }

    pub fn leaf_by_label(&self, label: &str) -> Option<usize> {
        self.leaves.iter().position(|l| l.label == label)
    }

    /// Leaf labels for a kind, in leaf order.
    pub fn labels_of(&self, kind: LeafKind) -> Vec<&str> {
        self.leaves
            .iter()
            .filter(|l| l.kind == kind)
            .map(|l| l.label.as_str())
            .collect()
    }

    /// Allocates a label of the given kind not yet in use.
    pub fn fresh_label(&self, kind: LeafKind) -> String {
        (0..)
            .map(|k| format!("{}{k}", kind.label_prefix()))
            .find(|c| self.leaf_by_label(c).is_none())
            .unwrap()
    }
}

/// Identifier of the pants curve carried by internal edge `i`.
pub fn edge_id(i: usize) -> String {
    format!("e{i}")
}

pub fn parse_edge_id(id: &str) -> Option<usize> {
    id.strip_prefix('e').and_then(|r| {
        if r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty() {
            r.parse().ok()
        } else {
            None
        }
    })
}

fn is_edge_id(label: &str) -> bool {
    parse_edge_id(label).is_some()
}

/// Small builder used by tests and examples.
#[derive(Debug, Default, Clone)]
pub struct Builder {
    pants: usize,
    edges: Vec<Edge>,
    leaves: Vec<Leaf>,
}

impl Builder {
    pub fn new(pants: usize) -> Self {
        Builder {
            pants,
            ..Default::default()
        }
    }

    pub fn edge(mut self, a: (usize, u8), b: (usize, u8), flip: bool) -> Self {
        self.edges.push(Edge {
            a: SlotRef(a.0, a.1),
            b: SlotRef(b.0, b.1),
            flip,
        });
        self
    }

    pub fn leaf(mut self, at: (usize, u8), kind: LeafKind, label: &str) -> Self {
        self.leaves.push(Leaf {
            at: SlotRef(at.0, at.1),
            kind,
            label: label.to_string(),
        });
        self
    }

    pub fn boundary(self, at: (usize, u8), label: &str) -> Self {
        self.leaf(at, LeafKind::Boundary, label)
    }

    pub fn crosscap(self, at: (usize, u8), label: &str) -> Self {
        self.leaf(at, LeafKind::Crosscap, label)
    }

    pub fn puncture(self, at: (usize, u8), label: &str) -> Self {
        self.leaf(at, LeafKind::Puncture, label)
    }

    pub fn build(self) -> PantsDecomposition {
        PantsDecomposition {
            pants: self.pants,
            edges: self.edges,
            leaves: self.leaves,
        }
    }
}

/// Frequently used one- and two-pants decompositions.
pub mod standard {
    use super::{Builder, PantsDecomposition};

    /// `F_{0,3}`: three boundary leaves.
    pub fn pants() -> PantsDecomposition {
        Builder::new(1)
            .boundary((0, 0), "b0")
            .boundary((0, 1), "b1")
            .boundary((0, 2), "b2")
            .build()
    }

    /// One pants with a self-loop and a boundary leaf: `F_{1,1}` when the
    /// loop is unflipped, the Klein bottle minus a disk otherwise.
    pub fn loop_with_boundary(flip: bool) -> PantsDecomposition {
        Builder::new(1).edge((0, 0), (0, 1), flip).boundary((0, 2), "b0").build()
    }

    /// One pants with a self-loop and a crosscap: `N_{3,0}`.
    pub fn loop_with_crosscap(flip: bool) -> PantsDecomposition {
        Builder::new(1).edge((0, 0), (0, 1), flip).crosscap((0, 2), "cc0").build()
    }

    /// Klein bottle minus a disk cut along two 1-sided curves.
    pub fn k1_two_crosscaps() -> PantsDecomposition {
        Builder::new(1)
            .crosscap((0, 0), "cc0")
            .crosscap((0, 1), "cc1")
            .boundary((0, 2), "b0")
            .build()
    }

    /// Mobius band minus a disk: one crosscap, two boundary leaves.
    pub fn m1() -> PantsDecomposition {
        Builder::new(1)
            .crosscap((0, 0), "cc0")
            .boundary((0, 1), "b0")
            .boundary((0, 2), "b1")
            .build()
    }

    /// `N_{3,0}` cut along three 1-sided curves.
    pub fn three_crosscaps() -> PantsDecomposition {
        Builder::new(1)
            .crosscap((0, 0), "cc0")
            .crosscap((0, 1), "cc1")
            .crosscap((0, 2), "cc2")
            .build()
    }

    /// Four-holed sphere as two pants joined along one edge.
    pub fn four_holed_sphere() -> PantsDecomposition {
        Builder::new(2)
            .edge((0, 0), (1, 0), false)
            .boundary((0, 1), "b0")
            .boundary((0, 2), "b1")
            .boundary((1, 1), "b2")
            .boundary((1, 2), "b3")
            .build()
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    fn n(g: u32, r: u32) -> Surface {
        Surface::non_orientable(g, r, 0).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(loop_with_boundary(false).validate().unwrap(), Surface::orientable(1, 1, 0));
        assert_eq!(loop_with_boundary(true).validate().unwrap(), n(2, 1));
        assert_eq!(three_crosscaps().validate().unwrap(), n(3, 0));
        assert_eq!(k1_two_crosscaps().validate().unwrap(), n(2, 1));
        assert_eq!(m1().validate().unwrap(), n(1, 2));
        assert_eq!(pants().validate().unwrap(), Surface::orientable(0, 3, 0));
        assert_eq!(four_holed_sphere().validate().unwrap(), Surface::orientable(0, 4, 0));
    }

    #[test]
    fn validate_errors() {
        let reused = Builder::new(1).edge((0, 0), (0, 0), false).boundary((0, 1), "b").build();
        assert!(matches!(reused.validate(), Err(PantsError::SlotReused(SlotRef(0, 0)))));
        let dangling = Builder::new(1).boundary((0, 0), "a").boundary((0, 1), "b").build();
        assert!(matches!(dangling.validate(), Err(PantsError::DanglingSlot(SlotRef(0, 2)))));
        let mut disconnected = pants();
        disconnected.pants = 2;
        disconnected.leaves.extend(
            ["x", "y", "z"]
                .iter()
                .enumerate()
                .map(|(s, l)| Leaf {
                    at: SlotRef(1, s as u8),
                    kind: LeafKind::Boundary,
                    label: l.to_string(),
                }),
        );
        assert!(matches!(disconnected.validate(), Err(PantsError::Disconnected(1))));
        let bad_slot = Builder::new(1).boundary((0, 3), "a").build();
        assert!(matches!(bad_slot.validate(), Err(PantsError::SlotOutOfRange(_))));
        let dup = Builder::new(1)
            .boundary((0, 0), "a")
            .boundary((0, 1), "a")
            .boundary((0, 2), "c")
            .build();
        assert!(matches!(dup.validate(), Err(PantsError::DuplicateLabel(_))));
        assert!(matches!(Builder::new(0).build().validate(), Err(PantsError::Empty)));
    }

    #[test]
    fn orientability_of_decompositions() {
        assert!(!loop_with_boundary(true).is_orientable_decomposition());
        assert!(loop_with_boundary(false).is_orientable_decomposition());
        assert!(three_crosscaps().is_orientable_decomposition());
        // a tree with arbitrary flips
        let mut tree = four_holed_sphere();
        tree.edges[0].flip = true;
        assert!(tree.is_orientable_decomposition());
        // two parallel edges: orientable iff flips agree
        let theta = |f0, f1| {
            Builder::new(2)
                .edge((0, 0), (1, 0), f0)
                .edge((0, 1), (1, 1), f1)
                .boundary((0, 2), "b0")
                .boundary((1, 2), "b1")
                .build()
        };
        assert!(theta(true, true).is_orientable_decomposition());
        assert!(!theta(true, false).is_orientable_decomposition());
        assert_eq!(theta(true, false).validate().unwrap(), n(2, 2));
        assert_eq!(theta(true, true).validate().unwrap(), Surface::orientable(1, 2, 0));
    }

    #[test]
    fn census_examples() {
        let c = k1_two_crosscaps().curve_census();
        assert_eq!((c.one_sided, c.two_sided_interior, c.boundary, c.punctures), (2, 0, 1, 0));
        let c = loop_with_boundary(false).curve_census();
        assert_eq!((c.one_sided, c.two_sided_interior, c.boundary, c.punctures), (0, 1, 1, 0));
        let c = three_crosscaps().curve_census();
        assert_eq!((c.one_sided, c.two_sided_interior, c.boundary, c.punctures), (3, 0, 0, 0));
    }

    #[test]
    fn json_shape() {
        let d = loop_with_boundary(true);
        let v: serde_json::Value = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(v["pants"], 1);
        assert_eq!(v["edges"][0]["a"], serde_json::json!([0, 0]));
        assert_eq!(v["edges"][0]["flip"], true);
        assert_eq!(v["leaves"][0]["kind"], "boundary");
        assert_eq!(PantsDecomposition::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn edge_ids() {
        assert_eq!(parse_edge_id("e12"), Some(12));
        assert_eq!(parse_edge_id("e"), None);
        assert_eq!(parse_edge_id("b0"), None);
        assert_eq!(edge_id(3), "e3");
    }
}
