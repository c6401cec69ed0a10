//! Builds the move graph of N_{3,1} and prints it in DOT form.
//!
//! `cargo run --example move_graph > n31.dot`

use nonorientable::moves::build_move_graph;
use nonorientable::pants::{EnumerationOptions, KeyOptions};
use nonorientable::Surface;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let surface = Surface::non_orientable(3, 1, 0)?;
    for absorb in [false, true] {
        let opts = EnumerationOptions {
            key: KeyOptions::absorption(absorb),
            ..Default::default()
        };
        let g = build_move_graph(&surface, 2, opts)?;
        eprintln!(
            "absorption {absorb}: {} types, {} moves, {} components",
            g.nodes.len(),
            g.edges.len(),
            g.components
        );
        if !absorb {
            print!("{}", g.to_dot());
        }
    }
    Ok(())
}
