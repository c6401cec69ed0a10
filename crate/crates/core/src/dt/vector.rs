use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::DtError;
use crate::pants::{edge_id, LeafKind, Occupant, PantsDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Int,
    Real,
}

/// A coordinate value. Integral values serialize without a fractional part.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Coord(pub f64);

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.fract() == 0.0 && self.0.abs() < 9.0e15 {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(Coord)
    }
}

/// Dehn-Thurston coordinates relative to a pants decomposition.
///
/// `n` holds one value per crosscap label. `mt` holds `[m, t]` per 2-sided
/// curve: internal edges as `e{i}` and boundary leaves by label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DtVector {
    pub kind: ScalarKind,
    pub base: PantsDecomposition,
    #[serde(default)]
    pub n: BTreeMap<String, Coord>,
    #[serde(default)]
    pub mt: BTreeMap<String, [Coord; 2]>,
}

/// Coordinate names of a base in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateNames {
    /// Crosscap labels in leaf order.
    pub one_sided: Vec<String>,
    /// Edge ids `e0, e1, ...` followed by boundary labels in leaf order.
    pub two_sided: Vec<String>,
}

impl CoordinateNames {
    pub fn of(base: &PantsDecomposition) -> Self {
        let one_sided = base.labels_of(LeafKind::Crosscap).into_iter().map(String::from).collect();
        let two_sided = (0..base.edges.len())
            .map(edge_id)
            .chain(base.labels_of(LeafKind::Boundary).into_iter().map(String::from))
            .collect();
        CoordinateNames { one_sided, two_sided }
    }

    /// Number of scalar entries: one per crosscap, two per 2-sided curve.
    pub fn dimension(&self) -> usize {
        self.one_sided.len() + 2 * self.two_sided.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realizability {
    pub realizable: bool,
    pub diagnostic: Option<String>,
}

impl DtVector {
    pub fn zero(base: PantsDecomposition, kind: ScalarKind) -> Self {
        let names = CoordinateNames::of(&base);
        DtVector {
            kind,
            n: names.one_sided.into_iter().map(|l| (l, Coord(0.0))).collect(),
            mt: names.two_sided.into_iter().map(|l| (l, [Coord(0.0); 2])).collect(),
            base,
        }
    }

    /// Integer vector from entries in [`CoordinateNames`] order.
    pub fn from_ints(base: PantsDecomposition, n: &[i64], mt: &[(i64, i64)]) -> Self {
        let names = CoordinateNames::of(&base);
        assert_eq!(names.one_sided.len(), n.len(), "one n per crosscap");
        assert_eq!(names.two_sided.len(), mt.len(), "one (m, t) per 2-sided curve");
        DtVector {
            kind: ScalarKind::Int,
            n: names.one_sided.into_iter().zip(n).map(|(l, &v)| (l, Coord(v as f64))).collect(),
            mt: names
                .two_sided
                .into_iter()
                .zip(mt)
                .map(|(l, &(m, t))| (l, [Coord(m as f64), Coord(t as f64)]))
                .collect(),
            base,
        }
    }

    /// Real vector from entries in [`CoordinateNames`] order.
    pub fn from_reals(base: PantsDecomposition, n: &[f64], mt: &[(f64, f64)]) -> Self {
        let mut v = DtVector::zero(base, ScalarKind::Real);
        let names = CoordinateNames::of(&v.base);
        for (l, &x) in names.one_sided.iter().zip(n) {
            v.n.insert(l.clone(), Coord(x));
        }
        for (l, &(m, t)) in names.two_sided.iter().zip(mt) {
            v.mt.insert(l.clone(), [Coord(m), Coord(t)]);
        }
        v
    }

    pub fn with_n(mut self, label: &str, value: f64) -> Self {
        self.n.insert(label.to_string(), Coord(value));
        self
    }

    pub fn with_mt(mut self, id: &str, m: f64, t: f64) -> Self {
        self.mt.insert(id.to_string(), [Coord(m), Coord(t)]);
        self
    }

    pub fn names(&self) -> CoordinateNames {
        CoordinateNames::of(&self.base)
    }

    pub fn n_of(&self, label: &str) -> f64 {
        self.n[label].0
    }

    pub fn mt_of(&self, id: &str) -> (f64, f64) {
        let [m, t] = self.mt[id];
        (m.0, t.0)
    }

    /// Checks coordinate names, domain and scalar kind.
    pub fn validate(&self) -> Result<(), DtError> {
        self.base.validate()?;
        let names = self.names();
        let expect_n: BTreeSet<&String> = names.one_sided.iter().collect();
        let expect_mt: BTreeSet<&String> = names.two_sided.iter().collect();
        for (expected, given) in [
            (&expect_n, self.n.keys().collect::<BTreeSet<_>>()),
            (&expect_mt, self.mt.keys().collect::<BTreeSet<_>>()),
        ] {
            if let Some(missing) = expected.difference(&given).next() {
                return Err(DtError::MissingCoordinate((*missing).clone()));
            }
            if let Some(extra) = given.difference(expected).next() {
                return Err(DtError::UnknownCoordinate((*extra).clone()));
            }
        }
        let integral = |id: &str, x: f64| -> Result<(), DtError> {
            if !x.is_finite() {
                return Err(DtError::NotFinite(id.to_string()));
            }
            if self.kind == ScalarKind::Int && x.fract() != 0.0 {
                return Err(DtError::NotInteger(id.to_string()));
            }
            Ok(())
        };
        for (l, v) in &self.n {
            integral(l, v.0)?;
        }
        for (id, [m, t]) in &self.mt {
            integral(id, m.0)?;
            integral(id, t.0)?;
            if m.0 < 0.0 {
                return Err(DtError::NegativeIntersection(id.clone()));
            }
            if m.0 == 0.0 && t.0 < 0.0 {
                return Err(DtError::NegativeTwistAtZero(id.clone()));
            }
        }
        Ok(())
    }

    /// The three slot measures of a pants: `m` on edge and boundary slots,
    /// `2 max(n, 0)` on crosscap slots, zero on punctures.
    pub fn slot_measures(&self, pants: usize) -> [f64; 3] {
        let table = self.base.slot_table().expect("valid base");
        let mut x = [0.0; 3];
        for (s, occ) in table[pants].iter().enumerate() {
            x[s] = match *occ {
                Occupant::EdgeEnd { edge, .. } => self.mt_of(&edge_id(edge)).0,
                Occupant::Leaf(i) => {
                    let leaf = &self.base.leaves[i];
                    match leaf.kind {
                        LeafKind::Boundary => self.mt_of(&leaf.label).0,
                        LeafKind::Crosscap => 2.0 * self.n_of(&leaf.label).max(0.0),
                        LeafKind::Puncture => 0.0,
                    }
                }
            };
        }
        x
    }

    /// Parity check: every pants must see an even number of arc endpoints.
    pub fn realizable(&self) -> Result<Realizability, DtError> {
        self.validate()?;
        if self.kind == ScalarKind::Real {
            return Ok(Realizability {
                realizable: true,
                diagnostic: None,
            });
        }
        for p in 0..self.base.pants {
            let x = self.slot_measures(p);
            let sum = x.iter().sum::<f64>() as i64;
            if sum % 2 != 0 {
                return Ok(Realizability {
                    realizable: false,
                    diagnostic: Some(format!(
                        "pants {p} has slot measures ({}, {}, {}) with odd sum {sum}",
                        x[0], x[1], x[2]
                    )),
                });
            }
        }
        Ok(Realizability {
            realizable: true,
            diagnostic: None,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.n.values().all(|v| v.0 == 0.0) && self.mt.values().all(|[m, t]| m.0 == 0.0 && t.0 == 0.0)
    }

    /// Multiplies every coordinate by `k`.
    pub fn scaled(&self, k: f64) -> Self {
        let mut v = self.clone();
        for x in v.n.values_mut() {
            x.0 *= k;
        }
        for [m, t] in v.mt.values_mut() {
            m.0 *= k;
            t.0 *= k;
        }
        v
    }

    /// Geometric intersection with a pants curve: `m` for 2-sided curves and
    /// `max(n, 0)` for crosscaps.
    pub fn intersection_with(&self, id: &str) -> Option<f64> {
        if let Some(n) = self.n.get(id) {
            return Some(n.0.max(0.0));
        }
        self.mt.get(id).map(|[m, _]| m.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pants::standard::*;

    fn k1(n1: i64, n2: i64, m: i64, t: i64) -> DtVector {
        DtVector::from_ints(k1_two_crosscaps(), &[n1, n2], &[(m, t)])
    }

    #[test]
    fn realizable_examples() {
        assert!(k1(1, 1, 0, 0).realizable().unwrap().realizable);
        let bad = k1(1, 1, 1, 0).realizable().unwrap();
        assert!(!bad.realizable);
        assert!(bad.diagnostic.unwrap().contains("odd sum 5"));
        let real = DtVector::from_reals(k1_two_crosscaps(), &[0.3, 1.7], &[(0.1, -2.0)]);
        assert!(real.realizable().unwrap().realizable);
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(k1(0, 0, 0, -1).validate(), Err(DtError::NegativeTwistAtZero(_))));
        assert!(matches!(k1(0, 0, -1, 0).validate(), Err(DtError::NegativeIntersection(_))));
        assert!(k1(0, 0, 1, -1).validate().is_ok());
        let mut v = k1(0, 0, 0, 0);
        v.n.remove("cc0");
        assert!(matches!(v.validate(), Err(DtError::MissingCoordinate(_))));
        let v = k1(0, 0, 0, 0).with_n("zz", 1.0);
        assert!(matches!(v.validate(), Err(DtError::UnknownCoordinate(_))));
        let v = k1(0, 0, 0, 0).with_n("cc0", 0.5);
        assert!(matches!(v.validate(), Err(DtError::NotInteger(_))));
    }

    #[test]
    fn json_shape_round_trips() {
        let v = k1(-2, 1, 3, -4);
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains("\"kind\":\"int\""));
        assert!(text.contains("\"cc0\":-2"));
        assert!(text.contains("\"b0\":[3,-4]"));
        let back: DtVector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<DtVector>(&text.replace("\"kind\"", "\"extra\":1,\"kind\"")).is_err());
    }

    #[test]
    fn names_order() {
        let names = CoordinateNames::of(&loop_with_crosscap(true));
        assert_eq!(names.one_sided, ["cc0"]);
        assert_eq!(names.two_sided, ["e0"]);
        assert_eq!(names.dimension(), 3);
    }
}
