//! Isotopy-level calculus on the Klein bottle minus a disk (K1) and the
//! Mobius band minus a disk (M1).
//!
//! The 1-sided curves of K1 form a line indexed by the integers, consecutive
//! curves being disjoint. Curves 0 and 1 are anchored to the two crosscap
//! cores of [`standard::k1_two_crosscaps`].

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dt::DtVector;
use crate::pants::{standard, PantsDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KleinError {
    #[error("cannot parse K1 decomposition {0:?} (expected Pair:<n> or C2)")]
    Parse(String),
    #[error("twist direction must be +1 or -1, got {0}")]
    Direction(i64),
    #[error("{0} is outside the search window of radius {1}")]
    OutsideWindow(K1Decomposition, i64),
}

/// Vertex of the graph of 1-sided curves in K1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneSidedCurve(pub i64);

/// The two curves disjoint from `c`. They meet each other once.
pub fn neighbors(c: OneSidedCurve) -> [OneSidedCurve; 2] {
    [OneSidedCurve(c.0 - 1), OneSidedCurve(c.0 + 1)]
}

/// Dehn twist along the 2-sided curve of K1, which shifts the line by one.
pub fn twist_c2(c: OneSidedCurve, direction: i64) -> Result<OneSidedCurve, KleinError> {
    match direction {
        1 | -1 => Ok(OneSidedCurve(c.0 + direction)),
        d => Err(KleinError::Direction(d)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum K1Decomposition {
    /// Curves `lower` and `lower + 1`.
    Pair { lower: i64 },
    /// The unique primitive non-peripheral 2-sided curve.
    C2,
}

impl fmt::Display for K1Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K1Decomposition::Pair { lower } => write!(f, "Pair:{lower}"),
            K1Decomposition::C2 => f.write_str("C2"),
        }
    }
}

impl FromStr for K1Decomposition {
    type Err = KleinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "C2" {
            return Ok(K1Decomposition::C2);
        }
        s.strip_prefix("Pair:")
            .and_then(|n| n.parse().ok())
            .map(|lower| K1Decomposition::Pair { lower })
            .ok_or_else(|| KleinError::Parse(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum K1MoveVariant {
    III,
    IV,
}

/// A move between K1 decompositions, with its literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Step {
    pub variant: K1MoveVariant,
    pub to: K1Decomposition,
    pub literal: String,
}

/// Neighbors of a decomposition in the move graph. A pair trades one curve
/// for the other core of the complementary M1; `C2` splits into the pair
/// selected by `framing`.
pub fn k1_move_adjacency(d: K1Decomposition, framing: i64) -> Vec<K1Step> {
    match d {
        K1Decomposition::Pair { lower } => vec![
            K1Step {
                variant: K1MoveVariant::III,
                to: K1Decomposition::Pair { lower: lower - 1 },
                literal: format!("III@c{}", lower + 1),
            },
            K1Step {
                variant: K1MoveVariant::III,
                to: K1Decomposition::Pair { lower: lower + 1 },
                literal: format!("III@c{lower}"),
            },
            K1Step {
                variant: K1MoveVariant::IV,
                to: K1Decomposition::C2,
                literal: "IVmerge@v0".into(),
            },
        ],
        K1Decomposition::C2 => vec![K1Step {
            variant: K1MoveVariant::IV,
            to: K1Decomposition::Pair { lower: framing },
            literal: "IVsplit@v0".into(),
        }],
    }
}

/// Breadth-first distances from `from` over pairs with `|lower| <= radius`
/// and `C2`. With `iii_only`, IV moves are not used.
pub fn k1_distances(
    from: K1Decomposition,
    radius: i64,
    framing: i64,
    iii_only: bool,
) -> BTreeMap<K1Decomposition, usize> {
    let inside = |d: &K1Decomposition| match d {
        K1Decomposition::Pair { lower } => lower.abs() <= radius,
        K1Decomposition::C2 => true,
    };
    let mut dist = BTreeMap::from([(from, 0usize)]);
    let mut queue = VecDeque::from([from]);
    while let Some(d) = queue.pop_front() {
        let here = dist[&d];
        for step in k1_move_adjacency(d, framing) {
            if (iii_only && step.variant != K1MoveVariant::III) || !inside(&step.to) {
                continue;
            }
            if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(step.to) {
                slot.insert(here + 1);
                queue.push_back(step.to);
            }
        }
    }
    dist
}

/// A shortest move sequence between two decompositions inside the window.
pub fn k1_path(
    from: K1Decomposition,
    to: K1Decomposition,
    radius: i64,
    framing: i64,
) -> Result<Vec<K1Step>, KleinError> {
    for d in [from, to] {
        if let K1Decomposition::Pair { lower } = d {
            if lower.abs() > radius {
                return Err(KleinError::OutsideWindow(d, radius));
            }
        }
    }
    let mut prev: BTreeMap<K1Decomposition, (K1Decomposition, K1Step)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = std::collections::BTreeSet::from([from]);
    while let Some(d) = queue.pop_front() {
        if d == to {
            break;
        }
        for step in k1_move_adjacency(d, framing) {
            let ok = match step.to {
                K1Decomposition::Pair { lower } => lower.abs() <= radius,
                K1Decomposition::C2 => true,
            };
            if ok && seen.insert(step.to) {
                prev.insert(step.to, (d, step.clone()));
                queue.push_back(step.to);
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, step) = prev.get(&cur).cloned().ok_or(KleinError::OutsideWindow(to, radius))?;
        steps.push(step);
        cur = p;
    }
    steps.reverse();
    Ok(steps)
}

/// Coordinates of the curves near the anchor, relative to the two-crosscap
/// decomposition of K1 (entries `(n0, n1; m, t)`).
pub fn anchored_curve(index: i64) -> Option<DtVector> {
    let (n0, n1) = match index {
        -1 => (0, 1),
        0 => (-1, 0),
        1 => (0, -1),
        2 => (1, 0),
        _ => return None,
    };
    Some(DtVector::from_ints(standard::k1_two_crosscaps(), &[n0, n1], &[(0, 0)]))
}

/// Coordinates of the 2-sided curve `C2` on the two-crosscap decomposition.
pub fn c2_curve() -> DtVector {
    DtVector::from_ints(standard::k1_two_crosscaps(), &[1, 1], &[(0, 0)])
}

/// One of the two 1-sided isotopy classes in M1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct M1Class {
    pub name: String,
    /// The pants decomposition this curve completes to.
    pub decomposition: PantsDecomposition,
    /// The curve in coordinates relative to the standard M1 decomposition.
    pub curve: DtVector,
}

/// The two essential non-peripheral curves of M1, on either side of the
/// removed disk. The first is the core of the standard decomposition.
pub fn m1_isotopy_decompositions() -> [M1Class; 2] {
    let base = standard::m1();
    [
        M1Class {
            name: "below".into(),
            decomposition: base.clone(),
            curve: DtVector::from_ints(base.clone(), &[-1], &[(0, 0), (0, 0)]),
        },
        M1Class {
            name: "above".into(),
            decomposition: base.clone(),
            curve: DtVector::from_ints(base, &[1], &[(0, 0), (0, 0)]),
        },
    ]
}

/// Intersection of the second M1 class with the core of the first.
pub fn m1_mutual_intersection() -> f64 {
    let [core, other] = m1_isotopy_decompositions();
    let label = core.curve.names().one_sided[0].clone();
    other.curve.intersection_with(&label).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dt::components;

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(OneSidedCurve(0)), [OneSidedCurve(-1), OneSidedCurve(1)]);
        assert_eq!(neighbors(OneSidedCurve(5)), [OneSidedCurve(4), OneSidedCurve(6)]);
        for a in -10..=10 {
            for b in -10..=10 {
                let ab = neighbors(OneSidedCurve(a)).contains(&OneSidedCurve(b));
                let ba = neighbors(OneSidedCurve(b)).contains(&OneSidedCurve(a));
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn twist_is_translation() {
        assert_eq!(twist_c2(OneSidedCurve(0), 1).unwrap(), OneSidedCurve(1));
        assert!(twist_c2(OneSidedCurve(0), 2).is_err());
        for i in -10..=10 {
            let c = OneSidedCurve(i);
            assert_eq!(twist_c2(twist_c2(c, 1).unwrap(), -1).unwrap(), c);
            let shifted = neighbors(c).map(|n| twist_c2(n, 1).unwrap());
            assert_eq!(neighbors(twist_c2(c, 1).unwrap()), shifted);
        }
    }

    #[test]
    fn adjacency_of_pair_zero() {
        let steps = k1_move_adjacency(K1Decomposition::Pair { lower: 0 }, 0);
        let to: Vec<_> = steps.iter().map(|s| (s.variant, s.to)).collect();
        assert_eq!(
            to,
            [
                (K1MoveVariant::III, K1Decomposition::Pair { lower: -1 }),
                (K1MoveVariant::III, K1Decomposition::Pair { lower: 1 }),
                (K1MoveVariant::IV, K1Decomposition::C2),
            ]
        );
    }

    #[test]
    fn window_is_connected() {
        for radius in [0, 1, 5, 25] {
            let dist = k1_distances(K1Decomposition::C2, radius, 0, false);
            assert_eq!(dist.len() as i64, 2 * radius + 2);
        }
    }

    #[test]
    fn path_to_c2_is_one_iv() {
        let p = k1_path(K1Decomposition::Pair { lower: 7 }, K1Decomposition::C2, 25, 0).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].literal, "IVmerge@v0");
        assert_eq!("Pair:-3".parse::<K1Decomposition>().unwrap(), K1Decomposition::Pair { lower: -3 });
        assert!("Pair:x".parse::<K1Decomposition>().is_err());
    }

    #[test]
    fn anchors_match_coordinates() {
        let c2 = components(&c2_curve()).unwrap();
        assert_eq!((c2.components.len(), c2.components[0].sidedness), (1, 2));
        for i in -1..=2 {
            let r = components(&anchored_curve(i).unwrap()).unwrap();
            assert_eq!((r.components.len(), r.components[0].sidedness), (1, 1), "curve {i}");
        }
        // consecutive anchors are disjoint: each crosses the other's core zero times
        let disjoint = |a: i64, b: i64| {
            let (va, vb) = (anchored_curve(a).unwrap(), anchored_curve(b).unwrap());
            let core_of = |v: &DtVector| v.n.iter().find(|(_, n)| n.0 < 0.0).map(|(l, _)| l.clone());
            match (core_of(&va), core_of(&vb)) {
                (Some(l), _) => vb.intersection_with(&l).unwrap() == 0.0,
                (_, Some(l)) => va.intersection_with(&l).unwrap() == 0.0,
                _ => false,
            }
        };
        assert!(disjoint(-1, 0));
        assert!(disjoint(0, 1));
        assert!(disjoint(1, 2));
        assert!(!disjoint(0, 2));
    }

    #[test]
    fn m1_classes() {
        let classes = m1_isotopy_decompositions();
        assert_eq!(classes.len(), 2);
        for c in &classes {
            let r = components(&c.curve).unwrap();
            assert_eq!((r.components.len(), r.components[0].sidedness), (1, 1));
        }
        assert_eq!(m1_mutual_intersection(), 1.0);
    }
}
