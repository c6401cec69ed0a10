use std::f64::consts::FRAC_PI_2;

use super::isometry::Isometry;
use super::HyperbolicError;

/// Seam lengths of the right-angled hexagon with alternate sides `l/2`.
///
/// Returns `[s01, s12, s20]`, where `s_ij` joins the halves of cuffs `i`
/// and `j`.
pub fn hexagon_seams(l: [f64; 3]) -> Result<[f64; 3], HyperbolicError> {
    for (i, &x) in l.iter().enumerate() {
        if !(x > 0.0 && x.is_finite()) {
            return Err(HyperbolicError::Domain(format!("cuff length {i} must be positive, got {x}")));
        }
    }
    let h = l.map(|x| x / 2.0);
    let seam = |i: usize, j: usize, k: usize| {
        ((h[i].cosh() * h[j].cosh() + h[k].cosh()) / (h[i].sinh() * h[j].sinh())).acosh()
    };
    Ok([seam(0, 1, 2), seam(1, 2, 0), seam(2, 0, 1)])
}

/// `cosh(s) sinh(a) sinh(b) - cosh(a) cosh(b) - cosh(c)`, relative to `cosh(c)`.
pub fn hexagon_residual(l: [f64; 3], seams: [f64; 3]) -> f64 {
    let h = l.map(|x| x / 2.0);
    [(0, 1, 2, 0), (1, 2, 0, 1), (2, 0, 1, 2)]
        .iter()
        .map(|&(i, j, k, s)| {
            let lhs = seams[s].cosh() * h[i].sinh() * h[j].sinh() - h[i].cosh() * h[j].cosh();
            ((lhs - h[k].cosh()) / h[k].cosh()).abs()
        })
        .fold(0.0, f64::max)
}

/// One pair of pants realized in the upper half-plane.
///
/// The front hexagon is traced counterclockwise starting at `i` heading up:
/// cuff half 0, seam 01, cuff half 1, seam 12, cuff half 2, seam 20. The
/// interior lies to the left of the walk.
#[derive(Debug, Clone)]
pub struct PantsBlock {
    pub lengths: [f64; 3],
    pub seams: [f64; 3],
    /// Frame at the start of each of the six sides.
    pub frames: [Isometry; 6],
    /// Boundary elements with `cuffs[0] * cuffs[1] * cuffs[2] = 1`.
    pub cuffs: [Isometry; 3],
    /// Frame on each cuff at the foot of the seam towards the lowest other
    /// slot, pointing along the walk.
    pub feet: [Isometry; 3],
    /// How far the walk misses closing up.
    pub closure: f64,
}

impl PantsBlock {
    pub fn new(lengths: [f64; 3]) -> Result<Self, HyperbolicError> {
        let seams = hexagon_seams(lengths)?;
        let sides = [
            lengths[0] / 2.0,
            seams[0],
            lengths[1] / 2.0,
            seams[1],
            lengths[2] / 2.0,
            seams[2],
        ];
        let turn = Isometry::rotate(FRAC_PI_2);
        let mut frames = [Isometry::IDENTITY; 6];
        let mut f = Isometry::IDENTITY;
        for (k, &side) in sides.iter().enumerate() {
            frames[k] = f;
            f = f * Isometry::translate(side) * turn;
        }
        let closure = f.distance_up_to_sign(&Isometry::IDENTITY);
        let mirror = |k: usize| Isometry::REFLECT.conjugate_by(&frames[k]);
        let seam_mirror = [mirror(1), mirror(3), mirror(5)];
        // reflections in the two seams bounding cuff s
        let cuffs = [
            seam_mirror[2] * seam_mirror[0],
            seam_mirror[0] * seam_mirror[1],
            seam_mirror[1] * seam_mirror[2],
        ];
        let feet = [
            frames[0] * Isometry::translate(sides[0]),
            frames[2],
            frames[4] * Isometry::translate(sides[4]),
        ];
        let block = PantsBlock {
            lengths,
            seams,
            frames,
            cuffs,
            feet,
            closure,
        };
        if closure.is_nan() || closure >= 1e-6 {
            return Err(HyperbolicError::Numeric(format!(
                "hexagon for cuffs {lengths:?} fails to close (residual {closure:e})"
            )));
        }
        Ok(block)
    }
}
