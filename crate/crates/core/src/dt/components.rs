use serde::{Deserialize, Serialize};

use super::decode::{decode, CurveSystem};
use super::vector::DtVector;
use super::DtError;
use crate::pants::{edge_id, LeafKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Closed,
    Arc,
}

/// Where a component comes from in the decoded system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Traced through pants arcs.
    Arcs,
    /// A parallel copy of a 2-sided pants curve or boundary component.
    PantsCurve,
    /// The 2-sided double cover of a crosscap core.
    DoubleCover,
    /// A crosscap core itself.
    Core,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// 1 or 2. Arcs have disk neighborhoods and are reported as 2.
    pub sidedness: u8,
    pub peripheral: bool,
    /// Number of pants arcs traversed.
    pub strands: usize,
    pub origin: Origin,
    /// The pants curve or crosscap for annular components.
    pub curve: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub components: Vec<Component>,
}

impl ComponentReport {
    pub fn closed(&self) -> usize {
        self.components.iter().filter(|c| c.kind == ComponentKind::Closed).count()
    }

    pub fn arcs(&self) -> usize {
        self.components.iter().filter(|c| c.kind == ComponentKind::Arc).count()
    }

    pub fn one_sided(&self) -> usize {
        self.components.iter().filter(|c| c.sidedness == 1).count()
    }
}

#[derive(Debug, Clone, Copy)]
enum Outer {
    Boundary,
    Glued { to: usize, reverses: bool },
}

/// Every marked point of a curve system with its arc partner and gluing.
struct StrandModel {
    inner: Vec<usize>,
    outer: Vec<Outer>,
}

impl StrandModel {
    fn build(cs: &CurveSystem) -> Self {
        let base = &cs.base;
        let mut offset = vec![[0usize; 3]; base.pants];
        let mut total = 0usize;
        for (row, arcs) in offset.iter_mut().zip(&cs.pants) {
            for (o, x) in row.iter_mut().zip(arcs.measures) {
                *o = total;
                total += x as usize;
            }
        }
        let point = |p: usize, s: usize, k: i64| offset[p][s] + k as usize;
        let mut inner = vec![usize::MAX; total];
        for (p, arcs) in cs.pants.iter().enumerate() {
            for ((s, a), (t, b)) in arcs.arcs() {
                let (x, y) = (point(p, s, a), point(p, t, b));
                inner[x] = y;
                inner[y] = x;
            }
        }
        let mut outer = vec![Outer::Boundary; total];
        for (i, e) in base.edges.iter().enumerate() {
            let piece = cs.curve(&edge_id(i)).expect("edge piece");
            let m = piece.crossings;
            for k in 0..m {
                let partner = if e.flip {
                    (k + piece.twist).rem_euclid(m)
                } else {
                    (piece.twist - k - 1).rem_euclid(m)
                };
                let (x, y) = (point(e.a.0, e.a.slot(), k), point(e.b.0, e.b.slot(), partner));
                outer[x] = Outer::Glued {
                    to: y,
                    reverses: e.flip,
                };
                outer[y] = Outer::Glued {
                    to: x,
                    reverses: e.flip,
                };
            }
        }
        for leaf in &base.leaves {
            if leaf.kind != LeafKind::Crosscap {
                continue;
            }
            let n = cs.crosscap(&leaf.label).expect("crosscap piece").transverse;
            for k in 0..2 * n {
                outer[point(leaf.at.0, leaf.at.slot(), k)] = Outer::Glued {
                    to: point(leaf.at.0, leaf.at.slot(), (k + n) % (2 * n)),
                    reverses: true,
                };
            }
        }
        StrandModel { inner, outer }
    }

    /// Follows arc, gluing, arc, ... from `start` until a boundary point or
    /// back at `start`. Returns (strands, orientation reversals, closed).
    fn trace(&self, start: usize, visited: &mut [bool]) -> (usize, usize, bool) {
        let (mut strands, mut reversals) = (0, 0);
        let mut cur = start;
        loop {
            visited[cur] = true;
            let other = self.inner[cur];
            visited[other] = true;
            strands += 1;
            match self.outer[other] {
                Outer::Boundary => return (strands, reversals, false),
                Outer::Glued { to, reverses } => {
                    reversals += reverses as usize;
                    if to == start {
                        return (strands, reversals, true);
                    }
                    cur = to;
                }
            }
        }
    }
}

/// Component analysis of a decoded curve system.
pub fn analyze(cs: &CurveSystem) -> ComponentReport {
    let model = StrandModel::build(cs);
    let mut visited = vec![false; model.inner.len()];
    let mut components = Vec::new();
    let boundary_points: Vec<usize> = (0..model.inner.len())
        .filter(|&p| matches!(model.outer[p], Outer::Boundary))
        .collect();
    for p in boundary_points {
        if visited[p] {
            continue;
        }
        let (strands, _, _) = model.trace(p, &mut visited);
        components.push(Component {
            kind: ComponentKind::Arc,
            sidedness: 2,
            peripheral: false,
            strands,
            origin: Origin::Arcs,
            curve: None,
        });
    }
    for p in 0..model.inner.len() {
        if visited[p] {
            continue;
        }
        let (strands, reversals, closed) = model.trace(p, &mut visited);
        debug_assert!(closed);
        components.push(Component {
            kind: ComponentKind::Closed,
            sidedness: if reversals % 2 == 1 { 1 } else { 2 },
            peripheral: false,
            strands,
            origin: Origin::Arcs,
            curve: None,
        });
    }
    let is_boundary = |id: &str| cs.base.leaf_by_label(id).is_some();
    for c in &cs.curves {
        for _ in 0..c.parallel_copies {
            components.push(Component {
                kind: ComponentKind::Closed,
                sidedness: 2,
                peripheral: is_boundary(&c.id),
                strands: 0,
                origin: Origin::PantsCurve,
                curve: Some(c.id.clone()),
            });
        }
    }
    for c in &cs.crosscaps {
        for _ in 0..c.double_covers {
            components.push(Component {
                kind: ComponentKind::Closed,
                sidedness: 2,
                peripheral: false,
                strands: 0,
                origin: Origin::DoubleCover,
                curve: Some(c.label.clone()),
            });
        }
        if c.core {
            components.push(Component {
                kind: ComponentKind::Closed,
                sidedness: 1,
                peripheral: false,
                strands: 0,
                origin: Origin::Core,
                curve: Some(c.label.clone()),
            });
        }
    }
    ComponentReport { components }
}

/// Decodes a realizable integer vector and reports its components.
pub fn components(v: &DtVector) -> Result<ComponentReport, DtError> {
    Ok(analyze(&decode(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pants::standard::*;

    fn k1(n1: i64, n2: i64, m: i64, t: i64) -> ComponentReport {
        components(&DtVector::from_ints(k1_two_crosscaps(), &[n1, n2], &[(m, t)])).unwrap()
    }

    #[test]
    fn k1_examples() {
        let r = k1(1, 1, 0, 0);
        assert_eq!(r.components.len(), 1);
        assert_eq!((r.components[0].kind, r.components[0].sidedness), (ComponentKind::Closed, 2));
        assert!(!r.components[0].peripheral);

        let r = k1(1, 0, 0, 0);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].sidedness, 1);

        let r = k1(0, 0, 0, 2);
        assert_eq!(r.closed(), 2);
        assert!(r.components.iter().all(|c| c.peripheral));
    }

    #[test]
    fn arcs_end_on_boundary() {
        // two boundary points on b0 joined through the crosscaps
        let r = k1(1, 0, 2, 0);
        assert_eq!(r.arcs(), 1);
        assert_eq!(r.closed(), 0);
    }

    #[test]
    fn doubling_a_one_sided_curve() {
        let r = k1(2, 0, 0, 0);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].sidedness, 2);
        assert_eq!(r.components[0].strands, 2);
    }

    #[test]
    fn flipped_loop_sidedness() {
        // one strand through a flipped self-loop is 1-sided
        let v = DtVector::from_ints(loop_with_boundary(true), &[], &[(1, 0), (0, 0)]);
        let r = components(&v).unwrap();
        assert_eq!((r.closed(), r.one_sided()), (1, 1));
        let v = DtVector::from_ints(loop_with_boundary(false), &[], &[(1, 0), (0, 0)]);
        let r = components(&v).unwrap();
        assert_eq!((r.closed(), r.one_sided()), (1, 0));
    }
}
