//! Builds the holonomy of a hyperbolic Klein bottle with a hole from its
//! Fenchel-Nielsen coordinates and prints a few curve lengths.

use nonorientable::hyperbolic::{length_spectrum, standard_probes, FnPoint, Holonomy, Probe};
use nonorientable::pants::standard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let point = FnPoint::new(standard::k1_two_crosscaps(), &[0.8, 1.1], &[(2.0, 0.3)]);
    let hol = Holonomy::new(&point)?;
    println!("generators {:?}, residual {:.1e}", hol.generator_names(), hol.residual);
    for word in ["cc0", "cc1", "cc0.cc0", "cc0.cc1", "cc0.cc1'", "b0"] {
        let probe: Probe = word.parse()?;
        println!("  {word:<10} length {:.6}", hol.probe(&probe)?);
    }

    let probes = standard_probes(&point)?;
    let spectrum = length_spectrum(&point, &probes)?;
    println!("{} standard probes, shortest {:.4}", probes.len(), spectrum.iter().cloned().fold(f64::INFINITY, f64::min));

    let json = point.to_json();
    println!("{json}");
    assert_eq!(FnPoint::from_json(&json)?, point);
    Ok(())
}
