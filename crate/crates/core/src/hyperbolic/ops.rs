use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::holonomy::{Holonomy, Probe};
use super::point::FnPoint;
use super::HyperbolicError;
use crate::dt::CoordinateNames;
use crate::pants::{edge_id, LeafKind, Occupant, PantsDecomposition};

/// A pants holding two crosscaps; `curve` is the 2-sided curve in its third
/// slot (an edge id or boundary label).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YSite {
    pub crosscaps: [String; 2],
    pub curve: String,
}

impl YSite {
    /// Every site of a base, one per pants with two crosscaps.
    pub fn all(base: &PantsDecomposition) -> Result<Vec<YSite>, HyperbolicError> {
        let table = base.slot_table()?;
        let mut out = Vec::new();
        for row in &table {
            let mut caps = Vec::new();
            let mut other = None;
            for occ in row {
                match *occ {
                    Occupant::Leaf(i) if base.leaves[i].kind == LeafKind::Crosscap => {
                        caps.push(base.leaves[i].label.clone())
                    }
                    Occupant::Leaf(i) if base.leaves[i].kind == LeafKind::Boundary => {
                        other = Some(base.leaves[i].label.clone())
                    }
                    Occupant::EdgeEnd { edge, .. } => other = Some(edge_id(edge)),
                    Occupant::Leaf(_) => {}
                }
            }
            if let (2, Some(curve)) = (caps.len(), other) {
                out.push(YSite {
                    crosscaps: [caps[0].clone(), caps[1].clone()],
                    curve,
                });
            }
        }
        Ok(out)
    }

    pub fn check(&self, base: &PantsDecomposition) -> Result<(), HyperbolicError> {
        let found = YSite::all(base)?;
        let same = |s: &YSite| {
            s.curve == self.curve
                && (s.crosscaps == self.crosscaps
                    || (s.crosscaps[0] == self.crosscaps[1] && s.crosscaps[1] == self.crosscaps[0]))
        };
        if found.iter().any(same) {
            Ok(())
        } else {
            Err(HyperbolicError::Site(format!(
                "no pants holds crosscaps {} and {} next to {}; sites are {:?}",
                self.crosscaps[0], self.crosscaps[1], self.curve, found
            )))
        }
    }
}

/// Coordinate action of the Y-homeomorphism at `site`: the two crosscap
/// lengths trade places and the twist of the adjacent curve advances by half
/// its length.
pub fn y_action(point: &FnPoint, site: &YSite) -> Result<FnPoint, HyperbolicError> {
    point.validate()?;
    site.check(&point.base)?;
    let mut out = point.clone();
    let [j1, j2] = &site.crosscaps;
    out.mu.insert(j1.clone(), point.mu[j2]);
    out.mu.insert(j2.clone(), point.mu[j1]);
    let [ell, theta] = point.lt[&site.curve];
    out.lt.insert(site.curve.clone(), [ell, theta + ell / 2.0]);
    Ok(out)
}

/// The (linear) Jacobian of [`y_action`] in [`CoordinateNames`] order, with
/// entries stored doubled so they are integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jacobian {
    pub doubled: Vec<Vec<i64>>,
}

impl Jacobian {
    pub fn of_y(base: &PantsDecomposition, site: &YSite) -> Result<Self, HyperbolicError> {
        site.check(base)?;
        let names = CoordinateNames::of(base);
        let n = names.dimension();
        let k = names.one_sided.len();
        let mu_index = |l: &str| names.one_sided.iter().position(|x| x == l).unwrap();
        let curve = names.two_sided.iter().position(|x| *x == site.curve).unwrap();
        let (j1, j2) = (mu_index(&site.crosscaps[0]), mu_index(&site.crosscaps[1]));
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        m[j1][j1] = 0;
        m[j2][j2] = 0;
        m[j1][j2] = 2;
        m[j2][j1] = 2;
        let (ell, theta) = (k + 2 * curve, k + 2 * curve + 1);
        m[theta][ell] = 1;
        Ok(Jacobian { doubled: m })
    }

    /// Exact determinant as a reduced fraction `(numerator, denominator)`.
    pub fn determinant(&self) -> (i128, i128) {
        let n = self.doubled.len();
        let num = bareiss(&self.doubled);
        let mut den: i128 = 1 << n;
        let g = gcd(num.abs(), den);
        let (mut num, d) = (num / g.max(1), den / g.max(1));
        den = d;
        if den < 0 {
            num = -num;
            den = -den;
        }
        (num, den)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Fraction-free Gaussian elimination.
fn bareiss(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Result of [`twist_flow_asymptotics`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwistFit {
    pub curve: String,
    pub probe: Probe,
    pub ell: f64,
    pub slope: f64,
    pub intercept: f64,
    /// Probe value after `k` full twists, `k = 1..=steps`.
    pub values: Vec<f64>,
}

/// Least-squares slope of the probe value against the number of full twists
/// applied along `curve`.
pub fn twist_flow_asymptotics(
    point: &FnPoint,
    curve: &str,
    probe: &Probe,
    steps: usize,
) -> Result<TwistFit, HyperbolicError> {
    point.validate()?;
    let [ell, theta] = *point
        .lt
        .get(curve)
        .ok_or_else(|| HyperbolicError::Domain(format!("{curve} is not a 2-sided curve of the base")))?;
    if steps < 2 {
        return Err(HyperbolicError::Domain("need at least two twist steps".into()));
    }
    let values = (1..=steps)
        .into_par_iter()
        .map(|k| {
            let p = point.clone().with_theta(curve, theta + k as f64 * ell);
            Holonomy::new(&p)?.probe(probe)
        })
        .collect::<Result<Vec<f64>, _>>()?;
    let n = steps as f64;
    let mean_k = (n + 1.0) / 2.0;
    let mean_v = values.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (i, v) in values.iter().enumerate() {
        let dk = (i + 1) as f64 - mean_k;
        sxy += dk * (v - mean_v);
        sxx += dk * dk;
    }
    let slope = sxy / sxx;
    Ok(TwistFit {
        curve: curve.to_string(),
        probe: probe.clone(),
        ell,
        slope,
        intercept: mean_v - slope * mean_k,
        values,
    })
}
