//! Decodes integer Dehn-Thurston coordinates on the Klein bottle minus a disk
//! into arcs and closed curves, and re-encodes them.

use nonorientable::dt::{components, decode, encode, DtVector};
use nonorientable::pants::standard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = standard::k1_two_crosscaps();
    let vectors = [
        ([1, 1], (0, 0)),
        ([-1, 0], (0, 0)),
        ([-2, 0], (0, 0)),
        ([2, 1], (2, 3)),
        ([1, -3], (2, 2)),
        ([3, 1], (1, 0)),
    ];
    for (n, mt) in vectors {
        let v = DtVector::from_ints(base.clone(), &n, &[mt]);
        let r = v.realizable()?;
        if !r.realizable {
            println!("{n:?} {mt:?}: {}", r.diagnostic.unwrap_or_default());
            continue;
        }
        let report = components(&v)?;
        let round_trip = encode(&decode(&v)?)? == v;
        println!(
            "{n:?} {mt:?}: {} closed ({} one-sided), {} arcs, round trip {round_trip}",
            report.closed(),
            report.one_sided(),
            report.arcs()
        );
    }
    Ok(())
}
