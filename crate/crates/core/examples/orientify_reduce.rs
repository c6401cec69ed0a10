//! Takes a decomposition of N_{4,0} with an orientation-reversing cycle, makes
//! the complement of its 1-sided curves orientable, then trades crosscaps
//! away two at a time.

use nonorientable::moves::{orientify, reduce_crosscaps};
use nonorientable::pants::Builder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = Builder::new(2)
        .edge((0, 0), (1, 0), false)
        .edge((0, 1), (1, 1), true)
        .crosscap((0, 2), "cc0")
        .crosscap((1, 2), "cc1")
        .build();
    println!("start: {} with {} crosscaps", d.validate()?.name(), d.curve_census().one_sided);

    let o = orientify(&d)?;
    let mid = o.replay()?;
    let moves: Vec<String> = o.moves.iter().map(|m| m.to_string()).collect();
    println!("orientify: {}", moves.join(" "));
    println!("  orientable complement: {}, crosscaps {}", mid.is_orientable_decomposition(), mid.curve_census().one_sided);

    let r = reduce_crosscaps(&mid)?;
    let end = r.replay()?;
    let moves: Vec<String> = r.moves.iter().map(|m| m.to_string()).collect();
    println!("reduce: {}", moves.join(" "));
    println!("  crosscaps {}, surface {}", end.curve_census().one_sided, end.validate()?.name());
    Ok(())
}
