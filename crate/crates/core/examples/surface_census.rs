//! Euler characteristic, pants count and crosscap bound for a few surfaces.

use nonorientable::Surface;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let surfaces = [
        Surface::orientable(0, 3, 0),
        Surface::orientable(1, 1, 0),
        Surface::orientable(2, 0, 0),
        Surface::non_orientable(1, 2, 0)?,
        Surface::non_orientable(2, 1, 0)?,
        Surface::non_orientable(3, 0, 0)?,
        Surface::non_orientable(4, 1, 1)?,
    ];
    println!("{:<10} {:>4} {:>6} {:>10}", "surface", "chi", "pants", "crosscaps");
    for s in surfaces {
        let inv = s.invariants();
        println!("{:<10} {:>4} {:>6} {:>10}", s.name(), inv.chi, inv.pants_count, inv.max_crosscaps);
    }
    // a Mobius band has no pants decomposition
    let mobius = Surface::non_orientable(1, 1, 0)?;
    println!("{} admits a decomposition: {}", mobius.name(), mobius.invariants().admits);
    Ok(())
}
