//! The Klein bottle minus a disk: its 1-sided curves form a line, and its
//! decompositions are consecutive pairs of them or the 2-sided curve C2.

use nonorientable::klein::{anchored_curve, c2_curve, k1_distances, k1_path, m1_mutual_intersection, K1Decomposition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for i in -1..=2 {
        let v = anchored_curve(i).unwrap();
        let n: Vec<f64> = v.names().one_sided.iter().map(|l| v.n_of(l)).collect();
        println!("curve {i}: n = {n:?}");
    }
    let c2 = c2_curve();
    println!("C2: n = [{}, {}]", c2.n_of("cc0"), c2.n_of("cc1"));

    let from = K1Decomposition::Pair { lower: 0 };
    let to = K1Decomposition::Pair { lower: 5 };
    let path = k1_path(from, to, 16, 0)?;
    let literals: Vec<&str> = path.iter().map(|s| s.literal.as_str()).collect();
    println!("{from} -> {to}: {}", literals.join(" "));

    let iii_only = k1_distances(from, 8, 0, true);
    for k in 1..=4 {
        println!("III distance to Pair:{k} = {}", iii_only[&K1Decomposition::Pair { lower: k }]);
    }
    println!("M1 curves meet {} times", m1_mutual_intersection());
    Ok(())
}
