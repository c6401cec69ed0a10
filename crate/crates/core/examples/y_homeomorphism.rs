//! The Y-homeomorphism swaps two crosscaps sharing a pants and slides the
//! adjacent twist by half a length. Its square is a full Dehn twist.

use nonorientable::hyperbolic::{y_action, FnPoint, Jacobian, YSite};
use nonorientable::pants::standard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = standard::k1_two_crosscaps();
    let site = YSite::all(&base)?.remove(0);
    println!("site: crosscaps {:?} next to {}", site.crosscaps, site.curve);

    let mut p = FnPoint::new(base.clone(), &[0.7, 1.3], &[(2.0, 0.1)]);
    for k in 1..=4 {
        p = y_action(&p, &site)?;
        println!("Y^{k}: {:?}", p.coordinates());
    }
    let j = Jacobian::of_y(&base, &site)?;
    println!("2 x Jacobian: {:?}", j.doubled);
    let (num, den) = j.determinant();
    println!("determinant {num}/{den}");
    Ok(())
}
