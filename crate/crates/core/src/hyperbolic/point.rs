use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::HyperbolicError;
use crate::dt::CoordinateNames;
use crate::pants::{LeafKind, Occupant, PantsDecomposition};

/// Fenchel-Nielsen coordinates relative to a pants decomposition.
///
/// `mu` is the length of each 1-sided pants curve, keyed by crosscap label.
/// `lt` holds `[ell, theta]` for every internal edge (`e{i}`) and boundary
/// leaf. A twist is measured from the a-end: `theta = 0` makes the seam feet
/// of both sides coincide, where each side's foot is the seam towards the
/// lowest other slot of its pants. On a boundary leaf theta moves the
/// distinguished point along the boundary geodesic away from that foot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FnPoint {
    pub base: PantsDecomposition,
    #[serde(default)]
    pub mu: BTreeMap<String, f64>,
    #[serde(default)]
    pub lt: BTreeMap<String, [f64; 2]>,
}

impl FnPoint {
    /// Point from entries in [`CoordinateNames`] order: one `mu` per
    /// crosscap, then `(ell, theta)` per 2-sided curve.
    pub fn new(base: PantsDecomposition, mu: &[f64], lt: &[(f64, f64)]) -> Self {
        let names = CoordinateNames::of(&base);
        assert_eq!(names.one_sided.len(), mu.len(), "one mu per crosscap");
        assert_eq!(names.two_sided.len(), lt.len(), "one (ell, theta) per 2-sided curve");
        FnPoint {
            mu: names.one_sided.into_iter().zip(mu.iter().copied()).collect(),
            lt: names.two_sided.into_iter().zip(lt.iter().map(|&(l, t)| [l, t])).collect(),
            base,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, HyperbolicError> {
        let p: FnPoint = serde_json::from_str(text).map_err(|e| HyperbolicError::Parse(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("point serializes")
    }

    pub fn names(&self) -> CoordinateNames {
        CoordinateNames::of(&self.base)
    }

    pub fn validate(&self) -> Result<(), HyperbolicError> {
        self.base.validate()?;
        let names = self.names();
        let want: BTreeSet<&String> = names.one_sided.iter().collect();
        let have: BTreeSet<&String> = self.mu.keys().collect();
        if want != have {
            return Err(HyperbolicError::Domain(format!(
                "mu must have exactly the crosscap labels {:?}",
                names.one_sided
            )));
        }
        let want: BTreeSet<&String> = names.two_sided.iter().collect();
        let have: BTreeSet<&String> = self.lt.keys().collect();
        if want != have {
            return Err(HyperbolicError::Domain(format!(
                "lt must have exactly the 2-sided curves {:?}",
                names.two_sided
            )));
        }
        for (k, &m) in &self.mu {
            if !(m > 0.0 && m.is_finite()) {
                return Err(HyperbolicError::Domain(format!("mu of {k} must be positive, got {m}")));
            }
        }
        for (k, &[l, t]) in &self.lt {
            if !(l > 0.0 && l.is_finite()) {
                return Err(HyperbolicError::Domain(format!("ell of {k} must be positive, got {l}")));
            }
            if !t.is_finite() {
                return Err(HyperbolicError::Domain(format!("theta of {k} is not finite")));
            }
        }
        Ok(())
    }

    /// Flat coordinate vector in [`CoordinateNames`] order.
    pub fn coordinates(&self) -> Vec<f64> {
        let names = self.names();
        let mut out: Vec<f64> = names.one_sided.iter().map(|l| self.mu[l]).collect();
        for id in &names.two_sided {
            out.extend(self.lt[id]);
        }
        out
    }

    /// Inverse of [`FnPoint::coordinates`].
    pub fn with_coordinates(&self, x: &[f64]) -> Self {
        let names = self.names();
        assert_eq!(x.len(), names.dimension());
        let k = names.one_sided.len();
        FnPoint {
            base: self.base.clone(),
            mu: names.one_sided.iter().cloned().zip(x[..k].iter().copied()).collect(),
            lt: names
                .two_sided
                .iter()
                .cloned()
                .zip(x[k..].chunks(2).map(|c| [c[0], c[1]]))
                .collect(),
        }
    }

    pub fn ell(&self, id: &str) -> f64 {
        self.lt[id][0]
    }

    pub fn theta(&self, id: &str) -> f64 {
        self.lt[id][1]
    }

    pub fn with_theta(mut self, id: &str, theta: f64) -> Self {
        self.lt.get_mut(id).expect("2-sided curve")[1] = theta;
        self
    }

    /// Cuff lengths of one pants; a crosscap slot has cuff `2 mu`.
    pub fn cuff_lengths(&self, pants: usize) -> Result<[f64; 3], HyperbolicError> {
        let table = self.base.slot_table()?;
        let mut out = [0.0; 3];
        for (s, occ) in table[pants].iter().enumerate() {
            out[s] = match *occ {
                Occupant::EdgeEnd { edge, .. } => self.ell(&crate::pants::edge_id(edge)),
                Occupant::Leaf(i) => {
                    let leaf = &self.base.leaves[i];
                    match leaf.kind {
                        LeafKind::Boundary => self.ell(&leaf.label),
                        LeafKind::Crosscap => 2.0 * self.mu[&leaf.label],
                        LeafKind::Puncture => {
                            return Err(HyperbolicError::Unsupported(format!(
                                "puncture {} has no geodesic cuff",
                                leaf.label
                            )))
                        }
                    }
                }
            };
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pants::standard::*;

    #[test]
    fn json_round_trip_and_validation() {
        let p = FnPoint::new(k1_two_crosscaps(), &[1.0, 2.0], &[(3.0, 0.5)]);
        let text = p.to_json();
        assert_eq!(FnPoint::from_json(&text).unwrap(), p);
        assert_eq!(p.coordinates(), [1.0, 2.0, 3.0, 0.5]);
        assert_eq!(p.with_coordinates(&p.coordinates()), p);
        assert_eq!(p.cuff_lengths(0).unwrap(), [2.0, 4.0, 3.0]);

        let bad = FnPoint::new(k1_two_crosscaps(), &[0.0, 2.0], &[(3.0, 0.5)]);
        assert!(matches!(bad.validate(), Err(HyperbolicError::Domain(_))));
        let mut missing = p.clone();
        missing.mu.remove("cc1");
        assert!(missing.validate().is_err());
        assert!(FnPoint::from_json(r#"{"base":{"pants":1,"edges":[],"leaves":[]},"x":1}"#).is_err());
    }
}
