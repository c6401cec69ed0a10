//! The chart on measured foliations: each 2-sided `(m, t)` folds to a point
//! of the plane so that `(0, t)` and `(0, -t)` agree.

use nonorientable::dt::{fold, mf_chart, projectivize, DtVector};
use nonorientable::pants::standard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, t) in [(1.0, 0.5), (0.0, 2.0), (0.0, -2.0), (2.0, -1.0)] {
        let (x, y) = fold(m, t);
        println!("fold({m}, {t}) = ({x:.3}, {y:.3})");
    }
    let v = DtVector::from_reals(standard::loop_with_boundary(true), &[], &[(1.5, -0.25), (0.0, 3.0)]);
    let chart = mf_chart(&v)?;
    for (name, value) in chart.names.iter().zip(&chart.values) {
        println!("  {name} = {value:.4}");
    }
    let p = mf_chart(&projectivize(&v)?)?;
    println!("projectivized sup norm {:.6}", p.sup_norm());
    Ok(())
}
