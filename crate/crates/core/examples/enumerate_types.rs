//! Lists the decomposition types with one and two pants, grouped by surface.

use std::collections::BTreeMap;

use nonorientable::pants::{canonical_key, enumerate_types, EnumerationOptions, KeyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for absorb in [false, true] {
        let opts = EnumerationOptions {
            key: KeyOptions::absorption(absorb),
            ..Default::default()
        };
        for pants in 1..=2 {
            let types = enumerate_types(pants, None, opts)?;
            let mut by_surface: BTreeMap<String, Vec<String>> = BTreeMap::new();
            for d in &types {
                let name = d.validate()?.name();
                by_surface.entry(name).or_default().push(canonical_key(d, opts.key).digest());
            }
            println!("{pants} pants, absorption {absorb}: {} types", types.len());
            for (name, keys) in by_surface {
                println!("  {name:<10} {}", keys.join(" "));
            }
        }
    }
    Ok(())
}
