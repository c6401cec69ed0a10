use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MoveError;
use crate::pants::{Edge, End, Leaf, LeafKind, Occupant, PantsDecomposition, SlotRef};

/// Which pairs of outer slots end up together after Move II.
///
/// `A < B` are the other slots at the edge's `a` end, `C < D` at its `b` end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regrouping {
    AcBd,
    AdBc,
}

impl Regrouping {
    pub const ALL: [Regrouping; 2] = [Regrouping::AcBd, Regrouping::AdBc];
}

impl fmt::Display for Regrouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regrouping::AcBd => "AC|BD",
            Regrouping::AdBc => "AD|BC",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Torus-with-hole flip at a vertex carrying an unflipped self-loop.
    I { vertex: usize },
    /// Four-holed-sphere flip across an edge joining two distinct pants.
    II { edge: usize, regroup: Regrouping },
    /// Replace a 1-sided curve by the other core of its Mobius band with a hole.
    III { crosscap: String },
    /// Two crosscaps at one vertex become a flipped self-loop.
    IVMerge { vertex: usize },
    /// A flipped self-loop becomes two crosscaps.
    IVSplit { vertex: usize },
}

impl Move {
    pub fn variant(&self) -> &'static str {
        match self {
            Move::I { .. } => "I",
            Move::II { .. } => "II",
            Move::III { .. } => "III",
            Move::IVMerge { .. } => "IVmerge",
            Move::IVSplit { .. } => "IVsplit",
        }
    }

    fn inapplicable(&self, reason: impl Into<String>) -> MoveError {
        MoveError::Inapplicable {
            mv: self.to_string(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::I { vertex } => write!(f, "I@v{vertex}"),
            Move::II { edge, regroup } => write!(f, "II@e{edge}:{regroup}"),
            Move::III { crosscap } => write!(f, "III@{crosscap}"),
            Move::IVMerge { vertex } => write!(f, "IVmerge@v{vertex}"),
            Move::IVSplit { vertex } => write!(f, "IVsplit@v{vertex}"),
        }
    }
}

impl FromStr for Move {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MoveError::Parse(s.to_string());
        let (head, site) = s.trim().split_once('@').ok_or_else(err)?;
        let vertex = |site: &str| -> Result<usize, MoveError> {
            site.strip_prefix('v').and_then(|n| n.parse().ok()).ok_or_else(err)
        };
        match head {
            "I" => Ok(Move::I { vertex: vertex(site)? }),
            "II" => {
                let (e, r) = site.split_once(':').ok_or_else(err)?;
                let edge = crate::pants::parse_edge_id(e).ok_or_else(err)?;
                let regroup = match r {
                    "AC|BD" | "BD|AC" => Regrouping::AcBd,
                    "AD|BC" | "BC|AD" => Regrouping::AdBc,
                    _ => return Err(err()),
                };
                Ok(Move::II { edge, regroup })
            }
            "III" if !site.is_empty() => Ok(Move::III {
                crosscap: site.to_string(),
            }),
            "IVmerge" => Ok(Move::IVMerge { vertex: vertex(site)? }),
            "IVsplit" => Ok(Move::IVSplit { vertex: vertex(site)? }),
            _ => Err(err()),
        }
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A start decomposition and moves to replay from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    pub start: PantsDecomposition,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn empty(start: PantsDecomposition) -> Self {
        MoveSequence {
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every intermediate decomposition, starting with `start`.
    pub fn trace(&self) -> Result<Vec<PantsDecomposition>, MoveError> {
        let mut out = vec![self.start.clone()];
        for m in &self.moves {
            let next = apply(out.last().unwrap(), m)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn replay(&self) -> Result<PantsDecomposition, MoveError> {
        self.moves.iter().try_fold(self.start.clone(), |d, m| apply(&d, m))
    }
}

fn self_loop_at(d: &PantsDecomposition, vertex: usize, flip: bool) -> Option<usize> {
    d.edges
        .iter()
        .position(|e| e.a.0 == vertex && e.b.0 == vertex && e.flip == flip)
}

fn crosscap_slots(d: &PantsDecomposition, vertex: usize) -> Vec<(u8, usize)> {
    let mut v: Vec<(u8, usize)> = d
        .leaves
        .iter()
        .enumerate()
        .filter(|(_, l)| l.kind == LeafKind::Crosscap && l.at.0 == vertex)
        .map(|(i, l)| (l.at.1, i))
        .collect();
    v.sort();
    v
}

/// All moves applicable to a valid decomposition, in a fixed order.
pub fn applicable_moves(d: &PantsDecomposition) -> Vec<Move> {
    let mut out = Vec::new();
    for v in 0..d.pants {
        if self_loop_at(d, v, false).is_some() {
            out.push(Move::I { vertex: v });
        }
    }
    for (i, e) in d.edges.iter().enumerate() {
        if !e.is_loop() {
            for regroup in Regrouping::ALL {
                out.push(Move::II { edge: i, regroup });
            }
        }
    }
    for l in &d.leaves {
        if l.kind == LeafKind::Crosscap {
            out.push(Move::III {
                crosscap: l.label.clone(),
            });
        }
    }
    for v in 0..d.pants {
        if crosscap_slots(d, v).len() >= 2 {
            out.push(Move::IVMerge { vertex: v });
        }
    }
    for v in 0..d.pants {
        if self_loop_at(d, v, true).is_some() {
            out.push(Move::IVSplit { vertex: v });
        }
    }
    out
}

fn other_slots(slot: u8) -> [u8; 2] {
    match slot {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

fn occupant_at(d: &PantsDecomposition, at: SlotRef) -> Occupant {
    for (i, e) in d.edges.iter().enumerate() {
        if e.a == at {
            return Occupant::EdgeEnd { edge: i, end: End::A };
        }
        if e.b == at {
            return Occupant::EdgeEnd { edge: i, end: End::B };
        }
    }
    let leaf = d.leaves.iter().position(|l| l.at == at).expect("valid decomposition");
    Occupant::Leaf(leaf)
}

fn relocate(d: &mut PantsDecomposition, occ: Occupant, to: SlotRef) {
    match occ {
        Occupant::EdgeEnd { edge, end: End::A } => d.edges[edge].a = to,
        Occupant::EdgeEnd { edge, end: End::B } => d.edges[edge].b = to,
        Occupant::Leaf(i) => d.leaves[i].at = to,
    }
}

/// Swaps whatever fills two slots.
pub(crate) fn swap_slots(d: &mut PantsDecomposition, x: SlotRef, y: SlotRef) {
    let ox = occupant_at(d, x);
    let oy = occupant_at(d, y);
    relocate(d, ox, y);
    relocate(d, oy, x);
}

/// The slots `(B, X)` whose occupants Move II exchanges.
pub(crate) fn move_ii_swap(e: &Edge, regroup: Regrouping) -> (SlotRef, SlotRef) {
    let [_, b] = other_slots(e.a.1);
    let [c, dd] = other_slots(e.b.1);
    let x = match regroup {
        Regrouping::AcBd => c,
        Regrouping::AdBc => dd,
    };
    (SlotRef(e.a.0, b), SlotRef(e.b.0, x))
}

/// Applies a move, returning the new decomposition.
pub fn apply(d: &PantsDecomposition, m: &Move) -> Result<PantsDecomposition, MoveError> {
    let mut out = d.clone();
    match m {
        Move::I { vertex } => {
            self_loop_at(d, *vertex, false).ok_or_else(|| m.inapplicable("no unflipped self-loop at vertex"))?;
        }
        Move::II { edge, regroup } => {
            let e = d.edges.get(*edge).ok_or_else(|| m.inapplicable("no such edge"))?;
            if e.is_loop() {
                return Err(m.inapplicable("edge is a self-loop"));
            }
            if e.flip {
                out.reorient(e.b.0);
            }
            let (b, x) = move_ii_swap(e, *regroup);
            swap_slots(&mut out, b, x);
        }
        Move::III { crosscap } => {
            let leaf = d
                .leaf_by_label(crosscap)
                .filter(|&i| d.leaves[i].kind == LeafKind::Crosscap)
                .ok_or_else(|| m.inapplicable("no crosscap with this label"))?;
            let at = d.leaves[leaf].at;
            for s in other_slots(at.1) {
                if let Occupant::EdgeEnd { edge, .. } = occupant_at(d, SlotRef(at.0, s)) {
                    out.edges[edge].flip = !out.edges[edge].flip;
                    break;
                }
            }
        }
        Move::IVMerge { vertex } => {
            let slots = crosscap_slots(d, *vertex);
            if slots.len() < 2 {
                return Err(m.inapplicable("fewer than two crosscaps at vertex"));
            }
            let (s1, i1) = slots[0];
            let (s2, i2) = slots[1];
            out.leaves = d
                .leaves
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != i1 && *i != i2)
                .map(|(_, l)| l.clone())
                .collect();
            out.edges.push(Edge {
                a: SlotRef(*vertex, s1),
                b: SlotRef(*vertex, s2),
                flip: true,
            });
        }
        Move::IVSplit { vertex } => {
            let i = self_loop_at(d, *vertex, true).ok_or_else(|| m.inapplicable("no flipped self-loop at vertex"))?;
            let e = out.edges.remove(i);
            let mut slots = [e.a, e.b];
            slots.sort();
            for at in slots {
                let label = out.fresh_label(LeafKind::Crosscap);
                out.leaves.push(Leaf {
                    at,
                    kind: LeafKind::Crosscap,
                    label,
                });
            }
        }
    }
    Ok(out)
}
