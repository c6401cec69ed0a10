use serde::{Deserialize, Serialize};

use super::vector::{DtVector, ScalarKind};
use super::DtError;

/// The square of `t + i m`: identifies `(0, t)` with `(0, -t)` and maps the
/// closed half-plane `m >= 0` onto the plane.
pub fn fold(m: f64, t: f64) -> (f64, f64) {
    (t * t - m * m, 2.0 * t * m)
}

/// Point of Euclidean space for a real coordinate vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartPoint {
    /// Names of the entries: crosscap labels, then `id.re` / `id.im` pairs.
    pub names: Vec<String>,
    pub values: Vec<f64>,
}

impl ChartPoint {
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }
}

fn require_real(v: &DtVector) -> Result<(), DtError> {
    if v.kind != ScalarKind::Real {
        return Err(DtError::WrongKind("the chart works on real coordinates"));
    }
    v.validate()
}

/// Crosscap entries pass through; every 2-sided `(m, t)` is folded.
pub fn mf_chart(v: &DtVector) -> Result<ChartPoint, DtError> {
    require_real(v)?;
    let names = v.names();
    let mut out = ChartPoint {
        names: Vec::new(),
        values: Vec::new(),
    };
    for l in &names.one_sided {
        out.names.push(l.clone());
        out.values.push(v.n_of(l));
    }
    for id in &names.two_sided {
        let (m, t) = v.mt_of(id);
        let (re, im) = fold(m, t);
        out.names.push(format!("{id}.re"));
        out.names.push(format!("{id}.im"));
        out.values.extend([re, im]);
    }
    Ok(out)
}

/// Rescales a nonzero vector so its chart image has sup-norm one.
///
/// Scaling by `s` multiplies crosscap entries by `s` and folded entries by
/// `s^2`, so `s = min(1/A, 1/sqrt(B))` with `A` the largest `|n|` and `B`
/// the largest folded entry.
pub fn projectivize(v: &DtVector) -> Result<DtVector, DtError> {
    require_real(v)?;
    if v.is_zero() {
        return Err(DtError::ZeroVector);
    }
    let a = v.n.values().fold(0.0f64, |acc, x| acc.max(x.0.abs()));
    let b = v.mt.values().fold(0.0f64, |acc, [m, t]| {
        let (re, im) = fold(m.0, t.0);
        acc.max(re.abs()).max(im.abs())
    });
    let s1 = if a > 0.0 { 1.0 / a } else { f64::INFINITY };
    let s2 = if b > 0.0 { 1.0 / b.sqrt() } else { f64::INFINITY };
    let s = s1.min(s2);
    Ok(v.scaled(s))
}
