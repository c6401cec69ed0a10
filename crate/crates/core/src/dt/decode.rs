use serde::{Deserialize, Serialize};

use super::vector::{CoordinateNames, DtVector, ScalarKind};
use super::DtError;
use crate::pants::PantsDecomposition;

/// Arc counts of a curve system in one pants.
///
/// `self_arcs[i]` counts arcs from slot `i` back to itself, wrapping around
/// slot `i+1`; `pair_arcs[i]` counts arcs between slots `i` and `i+1` (mod 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PantsArcs {
    pub measures: [i64; 3],
    pub self_arcs: [i64; 3],
    pub pair_arcs: [i64; 3],
}

impl PantsArcs {
    /// Standard-position arcs for the given slot measures, whose sum must be even.
    pub fn standard(x: [i64; 3]) -> Self {
        let mut self_arcs = [0; 3];
        let mut pair_arcs = [0; 3];
        match (0..3).find(|&i| x[i] > x[(i + 1) % 3] + x[(i + 2) % 3]) {
            Some(i) => {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                self_arcs[i] = (x[i] - x[j] - x[k]) / 2;
                pair_arcs[i] = x[j];
                pair_arcs[k] = x[k];
            }
            None => {
                for (i, a) in pair_arcs.iter_mut().enumerate() {
                    *a = (x[i] + x[(i + 1) % 3] - x[(i + 2) % 3]) / 2;
                }
            }
        }
        PantsArcs {
            measures: x,
            self_arcs,
            pair_arcs,
        }
    }

    /// Endpoints on slot `i`: twice the self-arcs plus the arcs to both other slots.
    pub fn endpoints(&self, i: usize) -> i64 {
        2 * self.self_arcs[i] + self.pair_arcs[i] + self.pair_arcs[(i + 2) % 3]
    }

    /// Arc endpoints as `((slot, position), (slot, position))`.
    ///
    /// Positions on slot `i` run through four blocks: first ends of self-arcs,
    /// arcs to slot `i+1`, second ends of self-arcs (nested), arcs to `i+2`.
    /// A family joining two slots appears in opposite orders on them.
    pub fn arcs(&self) -> Vec<((usize, i64), (usize, i64))> {
        let mut out = Vec::new();
        for i in 0..3 {
            let a = self.self_arcs[i];
            let inner = self.pair_arcs[i];
            for p in 0..a {
                out.push(((i, p), (i, a + inner + (a - 1 - p))));
            }
            let j = (i + 1) % 3;
            // on slot j the arcs to i form its last block
            let start_j = 2 * self.self_arcs[j] + self.pair_arcs[j];
            for p in 0..inner {
                out.push(((i, a + p), (j, start_j + (inner - 1 - p))));
            }
        }
        out
    }
}

/// Annular data at a crosscap.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrosscapPiece {
    pub label: String,
    /// Strands crossing the core; the slot carries twice as many points.
    pub transverse: i64,
    /// Copies of the 2-sided double cover of the core.
    pub double_covers: i64,
    pub core: bool,
}

/// Data along a 2-sided pants curve or boundary component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurvePiece {
    pub id: String,
    pub crossings: i64,
    /// Cyclic offset of the gluing; full turns are kept.
    pub twist: i64,
    /// Parallel copies of the curve itself, used only when `crossings` is zero.
    pub parallel_copies: i64,
}

/// Decoded curve-and-arc system in standard position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveSystem {
    pub base: PantsDecomposition,
    pub pants: Vec<PantsArcs>,
    pub crosscaps: Vec<CrosscapPiece>,
    pub curves: Vec<CurvePiece>,
}

impl CurveSystem {
    /// Canonical serialization.
    pub fn serialize_canonical(&self) -> String {
        serde_json::to_string(self).expect("curve system serializes")
    }

    pub fn curve(&self, id: &str) -> Option<&CurvePiece> {
        self.curves.iter().find(|c| c.id == id)
    }

    pub fn crosscap(&self, label: &str) -> Option<&CrosscapPiece> {
        self.crosscaps.iter().find(|c| c.label == label)
    }

    pub fn is_empty(&self) -> bool {
        self.pants.iter().all(|p| p.measures == [0; 3])
            && self.crosscaps.iter().all(|c| c.double_covers == 0 && !c.core)
            && self.curves.iter().all(|c| c.parallel_copies == 0)
    }
}

fn as_int(x: f64) -> i64 {
    x as i64
}

/// Standard-position curve system of a realizable integer vector.
pub fn decode(v: &DtVector) -> Result<CurveSystem, DtError> {
    if v.kind != ScalarKind::Int {
        return Err(DtError::WrongKind("decode needs integer coordinates"));
    }
    let r = v.realizable()?;
    if !r.realizable {
        return Err(DtError::Unrealizable(r.diagnostic.unwrap_or_default()));
    }
    let names = v.names();
    let pants = (0..v.base.pants)
        .map(|p| PantsArcs::standard(v.slot_measures(p).map(as_int)))
        .collect();
    let crosscaps = names
        .one_sided
        .iter()
        .map(|l| {
            let n = as_int(v.n_of(l));
            CrosscapPiece {
                label: l.clone(),
                transverse: n.max(0),
                double_covers: (-n).max(0) / 2,
                core: n < 0 && (-n) % 2 == 1,
            }
        })
        .collect();
    let curves = names
        .two_sided
        .iter()
        .map(|id| {
            let (m, t) = v.mt_of(id);
            let (m, t) = (as_int(m), as_int(t));
            CurvePiece {
                id: id.clone(),
                crossings: m,
                twist: if m > 0 { t } else { 0 },
                parallel_copies: if m > 0 { 0 } else { t },
            }
        })
        .collect();
    Ok(CurveSystem {
        base: v.base.clone(),
        pants,
        crosscaps,
        curves,
    })
}

/// Inverse of [`decode`] on systems in standard position.
pub fn encode(cs: &CurveSystem) -> Result<DtVector, DtError> {
    let bad = |why: String| Err(DtError::NotStandard(why));
    cs.base.validate()?;
    let names = CoordinateNames::of(&cs.base);
    let labels: Vec<&String> = cs.crosscaps.iter().map(|c| &c.label).collect();
    let ids: Vec<&String> = cs.curves.iter().map(|c| &c.id).collect();
    if labels != names.one_sided.iter().collect::<Vec<_>>() || ids != names.two_sided.iter().collect::<Vec<_>>() {
        return bad("pieces do not match the coordinate names of the base".into());
    }
    let mut v = DtVector::zero(cs.base.clone(), ScalarKind::Int);
    for c in &cs.crosscaps {
        if c.transverse < 0 || c.double_covers < 0 {
            return bad(format!("negative count at {}", c.label));
        }
        if c.transverse > 0 && (c.double_covers > 0 || c.core) {
            return bad(format!("crosscap {} mixes transverse strands with annular pieces", c.label));
        }
        let n = c.transverse - 2 * c.double_covers - c.core as i64;
        v.n.insert(c.label.clone(), super::vector::Coord(n as f64));
    }
    for c in &cs.curves {
        if c.crossings < 0 || c.parallel_copies < 0 {
            return bad(format!("negative count at {}", c.id));
        }
        if c.crossings > 0 && c.parallel_copies > 0 {
            return bad(format!("curve {} has both crossings and parallel copies", c.id));
        }
        if c.crossings == 0 && c.twist != 0 {
            return bad(format!("curve {} twists without crossings", c.id));
        }
        let t = if c.crossings > 0 { c.twist } else { c.parallel_copies };
        v.mt.insert(c.id.clone(), [super::vector::Coord(c.crossings as f64), super::vector::Coord(t as f64)]);
    }
    if cs.pants.len() != cs.base.pants {
        return bad("one arc record per pants expected".into());
    }
    for (p, arcs) in cs.pants.iter().enumerate() {
        let x = v.slot_measures(p).map(as_int);
        if arcs.measures != x {
            return bad(format!("pants {p} measures {:?} disagree with the curve data {:?}", arcs.measures, x));
        }
        if x.iter().sum::<i64>() % 2 != 0 || *arcs != PantsArcs::standard(x) {
            return bad(format!("pants {p} arcs are not in standard position"));
        }
    }
    Ok(v)
}
