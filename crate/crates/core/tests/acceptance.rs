//! End-to-end acceptance checks. Each test prints one PASS/FAIL line.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use nonorientable::dt::{self, fold, ComponentKind, DtVector, Origin};
use nonorientable::hyperbolic::{
    curve_length, hexagon_residual, hexagon_seams, length_spectrum, standard_probes, twist_flow_asymptotics,
    y_action, FnPoint, Isometry, Jacobian, YSite,
};
use nonorientable::klein::{k1_distances, K1Decomposition};
use nonorientable::moves::build_move_graph;
use nonorientable::pants::{enumerate_types, standard, Builder, EnumerationOptions, KeyOptions, PantsDecomposition};
use nonorientable::Surface;

fn report(name: &str, pass: bool, detail: impl AsRef<str>) {
    println!("[{}] {name}: {}", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
}

#[test]
fn one_pants_census() {
    let t = Instant::now();
    let out = nonorientable::cli::run(["npants", "pants", "enumerate", "--pants", "1"]);
    let elapsed = t.elapsed();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let mut by_surface: BTreeMap<String, usize> = BTreeMap::new();
    for ty in doc["types"].as_array().unwrap() {
        let s: Surface = ty["surface"].as_str().unwrap().parse().unwrap();
        *by_surface.entry(s.name()).or_default() += 1;
    }
    let expect: BTreeMap<String, usize> = [("F_{0,3}", 1), ("F_{1,1}", 1), ("N_{2,1}", 2), ("N_{1,2}", 1), ("N_{3,0}", 3)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let pass = out.code == 0 && doc["count"] == 8 && by_surface == expect && elapsed < Duration::from_secs(1);
    report("one-pants census", pass, format!("{} types {by_surface:?} in {elapsed:?}", doc["count"]));
    assert!(pass);
}

/// Every surface that has a decomposition with at most three pants,
/// punctured ones included.
fn small_surfaces() -> BTreeSet<Surface> {
    let opts = EnumerationOptions {
        key: KeyOptions::default(),
        include_punctures: true,
    };
    (1..=3)
        .flat_map(|p| enumerate_types(p, None, opts).unwrap())
        .map(|d| d.validate().unwrap())
        .collect()
}

#[test]
fn move_graphs_connected_and_parity() {
    let t = Instant::now();
    let surfaces = small_surfaces();
    let mut graphs = 0;
    let mut disconnected = Vec::new();
    let mut parity_breaks = 0;
    let mut edges = 0;
    for s in &surfaces {
        for absorption in [false, true] {
            let opts = EnumerationOptions {
                key: KeyOptions::absorption(absorption),
                include_punctures: s.punctures > 0,
            };
            let g = build_move_graph(s, s.invariants().pants_count as usize, opts).unwrap();
            graphs += 1;
            if g.components != 1 {
                disconnected.push(format!("{}/{absorption}: {}", s.name(), g.components));
            }
            for e in &g.edges {
                edges += 1;
                if g.nodes[e.from].one_sided % 2 != g.nodes[e.to].one_sided % 2 {
                    parity_breaks += 1;
                }
            }
        }
    }
    let elapsed = t.elapsed();
    let connected = disconnected.is_empty() && elapsed < Duration::from_secs(300);
    report(
        "move graphs connected",
        connected,
        format!("{} surfaces, {graphs} graphs, disconnected {disconnected:?}, {elapsed:?}", surfaces.len()),
    );
    let parity = parity_breaks == 0;
    report("one-sided parity along moves", parity, format!("{edges} edges, {parity_breaks} breaks"));
    assert!(connected && parity);
}

#[test]
fn k1_transitivity() {
    let radius = 25;
    let all = k1_distances(K1Decomposition::Pair { lower: 0 }, radius, 0, false);
    let connected = all.len() == (2 * radius + 1) as usize + 1;
    let iii = k1_distances(K1Decomposition::Pair { lower: 0 }, radius, 0, true);
    let mismatched: Vec<(i64, Option<usize>)> = (-radius..=radius)
        .filter_map(|k| {
            let d = iii.get(&K1Decomposition::Pair { lower: k }).copied();
            (d != Some(2 * k.unsigned_abs() as usize)).then_some((k, d))
        })
        .collect();
    let measured_abs = (-radius..=radius).all(|k| iii.get(&K1Decomposition::Pair { lower: k }) == Some(&(k.unsigned_abs() as usize)));
    let distance = mismatched.is_empty();
    report(
        "K1 transitivity: connected, Pair{0} -> Pair{k} is 2|k| III moves",
        connected && distance,
        format!(
            "{} of {} vertices reached; {} of {} distances differ from 2|k|, measured distance is |k| throughout: {measured_abs}",
            all.len(),
            2 * radius + 2,
            mismatched.len(),
            2 * radius + 1,
        ),
    );
    assert!(connected);
    assert!(distance, "measured III distances are |k|: {mismatched:?}");
}

fn dt_bases() -> Vec<(PantsDecomposition, i64)> {
    let mut out: Vec<(PantsDecomposition, i64)> = enumerate_types(1, None, EnumerationOptions::default())
        .unwrap()
        .into_iter()
        .map(|d| (d, 3))
        .collect();
    out.push((
        Builder::new(2)
            .edge((0, 2), (1, 0), true)
            .crosscap((0, 0), "cc0")
            .crosscap((0, 1), "cc1")
            .crosscap((1, 1), "cc2")
            .boundary((1, 2), "b0")
            .build(),
        2,
    ));
    out
}

#[test]
fn dt_round_trip_injectivity_and_components() {
    let t = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (base, bound) in dt_bases() {
        let vectors = common::boxed_vectors(&base, bound);
        let results: Vec<(String, Option<String>)> = vectors
            .par_iter()
            .map(|v| {
                let cs = dt::decode(v).unwrap();
                let ser = cs.serialize_canonical();
                if dt::encode(&cs).unwrap() != *v {
                    return (ser, Some(format!("round trip {v:?}")));
                }
                let r = dt::analyze(&cs);
                let o = common::oracle_components(v);
                let got = (r.arcs(), r.one_sided(), r.closed() - r.one_sided());
                let want = (o.arcs, o.one_sided, o.two_sided);
                if got != want {
                    return (ser, Some(format!("components {got:?} vs oracle {want:?} for {}", serde_json::to_string(v).unwrap())));
                }
                (ser, None)
            })
            .collect();
        let distinct: HashSet<&String> = results.iter().map(|r| &r.0).collect();
        if distinct.len() != vectors.len() {
            failures.push(format!("{} collisions on {}", vectors.len() - distinct.len(), base.to_json()));
        }
        failures.extend(results.iter().filter_map(|r| r.1.clone()));
        checked += vectors.len();
    }
    let elapsed = t.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(120);
    report(
        "DT round trip, injectivity, component oracle",
        pass,
        format!("{checked} vectors in {elapsed:?}, {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    );
    assert!(pass);
}

#[test]
fn k1_coordinate_facts() {
    let k1 = |n0: i64, n1: i64| {
        dt::components(&DtVector::from_ints(standard::k1_two_crosscaps(), &[n0, n1], &[(0, 0)])).unwrap()
    };
    let c2 = k1(1, 1);
    let one = k1(1, 0);
    let double = k1(-2, 0);
    let core = k1(-1, 0);
    let single = |r: &dt::ComponentReport| r.components.len() == 1 && r.components[0].kind == ComponentKind::Closed;
    let pass = single(&c2)
        && c2.components[0].sidedness == 2
        && !c2.components[0].peripheral
        && single(&one)
        && one.components[0].sidedness == 1
        && single(&double)
        && double.components[0].origin == Origin::DoubleCover
        && double.components[0].sidedness == 2
        && double.components[0].curve.as_deref() == Some("cc0")
        && single(&core)
        && core.components[0].origin == Origin::Core
        && core.components[0].sidedness == 1
        && core.components[0].curve.as_deref() == Some("cc0");
    report("K1 coordinate facts", pass, "(1,1;0,0) (1,0;0,0) (-2,0;0,0) (-1,0;0,0)");
    assert!(pass);
}

#[test]
fn fold_chart() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let glued = (0..1000).all(|_| {
        let t: f64 = rng.gen_range(-1e3..1e3);
        fold(0.0, t) == fold(0.0, -t)
    });
    let mut seen = HashSet::new();
    for i in 1..=100 {
        for j in 0..100 {
            let m = i as f64 * 0.05;
            let t = -5.0 + j as f64 * 0.1;
            let (a, b) = fold(m, t);
            seen.insert((a.to_bits(), b.to_bits()));
        }
    }
    let injective = seen.len() == 100 * 100;
    report(
        "fold chart",
        glued && injective,
        format!("(0,t)~(0,-t) on 1000 samples: {glued}; {} distinct images of 10000 grid points", seen.len()),
    );
    assert!(glued && injective);
}

#[test]
fn hexagon_and_glide_numerics() {
    let grid: Vec<f64> = (0..24).map(|i| 0.1 * 100f64.powf(i as f64 / 23.0)).collect();
    let mut worst = 0.0f64;
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                let l = [a, b, c];
                worst = worst.max(hexagon_residual(l, hexagon_seams(l).unwrap()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut glide_worst = 0.0f64;
    for i in 0..1000 {
        let tr = 0.1 * 1000f64.powf(i as f64 / 999.0);
        // diag(x, -1/x) has trace x - 1/x
        let x = (tr + (tr * tr + 4.0).sqrt()) / 2.0;
        let g = Isometry([[x, 0.0], [0.0, -1.0 / x]]);
        let h = Isometry::rotate(rng.gen_range(0.0..6.0)) * Isometry::translate(rng.gen_range(-2.0..2.0));
        let g = g.conjugate_by(&h);
        let direct = curve_length(&g).unwrap();
        let squared = curve_length(&(g * g)).unwrap() / 2.0;
        let formula = 2.0 * (tr / 2.0).asinh();
        glide_worst = glide_worst.max((direct - squared).abs()).max((direct - formula).abs());
    }
    let pass = worst < 1e-10 && glide_worst < 1e-10;
    report(
        "hexagon identity and glide lengths",
        pass,
        format!("hexagon residual {worst:e} on {} triples, glide defect {glide_worst:e}", grid.len().pow(3)),
    );
    assert!(pass);
}

fn random_point(rng: &mut ChaCha8Rng, base: &PantsDecomposition) -> FnPoint {
    let names = dt::CoordinateNames::of(base);
    let mu: Vec<f64> = (0..names.one_sided.len()).map(|_| rng.gen_range(0.1..5.0)).collect();
    let lt: Vec<(f64, f64)> = (0..names.two_sided.len())
        .map(|_| (rng.gen_range(0.1..5.0), rng.gen_range(-5.0..5.0)))
        .collect();
    FnPoint::new(base.clone(), &mu, &lt)
}

fn spectral_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn fn_injectivity_sampling() {
    let bases = [
        ("K1 two crosscaps", standard::k1_two_crosscaps()),
        ("K1 flipped loop", standard::loop_with_boundary(true)),
        ("F11", standard::loop_with_boundary(false)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut all_pass = true;
    let mut details = Vec::new();
    for (name, base) in bases {
        let probes = standard_probes(&random_point(&mut rng, &base)).unwrap();
        let (mut worst_random, mut worst_single) = (f64::INFINITY, f64::INFINITY);
        for _ in 0..1000 {
            let p = random_point(&mut rng, &base);
            let q = random_point(&mut rng, &base);
            let sp = length_spectrum(&p, &probes).unwrap();
            worst_random = worst_random.min(spectral_gap(&sp, &length_spectrum(&q, &probes).unwrap()));
            // distinct in a single coordinate
            let mut x = p.coordinates();
            let i = rng.gen_range(0..x.len());
            x[i] += rng.gen_range(1e-3..1.0);
            let q = p.with_coordinates(&x);
            worst_single = worst_single.min(spectral_gap(&sp, &length_spectrum(&q, &probes).unwrap()));
        }
        let pass = worst_random > 1e-6 && worst_single > 1e-6;
        all_pass &= pass;
        details.push(format!(
            "{name}: {} probes, smallest gap {worst_random:.3e} random, {worst_single:.3e} one coordinate",
            probes.len()
        ));
    }
    report("FN injectivity sampling", all_pass, details.join("; "));
    assert!(all_pass);
}

#[test]
fn y_homeomorphism_action() {
    let base = standard::k1_two_crosscaps();
    let site = YSite {
        crosscaps: ["cc0".into(), "cc1".into()],
        curve: "b0".into(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut formula = true;
    let mut square = true;
    let mut eighth = true;
    for _ in 0..1000 {
        let p = random_point(&mut rng, &base);
        let [m0, m1, l, th] = p.coordinates()[..] else { unreachable!() };
        let y = y_action(&p, &site).unwrap();
        formula &= y.coordinates() == [m1, m0, l, th + l / 2.0];
        let yy = y_action(&y, &site).unwrap();
        square &= yy.coordinates() == [m0, m1, l, th + l / 2.0 + l / 2.0];
        let mut z = p.clone();
        for _ in 0..8 {
            z = y_action(&z, &site).unwrap();
        }
        eighth &= z != p;
    }
    let example = y_action(&FnPoint::new(base.clone(), &[1.0, 2.0], &[(3.0, 0.0)]), &site)
        .unwrap()
        .coordinates()
        == [2.0, 1.0, 3.0, 1.5];
    let det = Jacobian::of_y(&base, &site).unwrap().determinant();
    let pass = formula && square && eighth && example && det == (-1, 1);
    report(
        "Y-homeomorphism action",
        pass,
        format!("formula {formula}, y^2 = full twist {square}, y^8 != id {eighth}, det {}/{}", det.0, det.1),
    );
    assert!(pass);
}

#[test]
fn twist_asymptotics() {
    let t = Instant::now();
    let base = standard::loop_with_boundary(true);
    let probes: [(&str, f64); 2] = [("t0", 1.0), ("t0.b0.t0", 2.0)];
    let mut ratios = Vec::new();
    let mut flat_worst = 0.0f64;
    for (ell, theta) in [(0.5, 0.0), (1.3, 0.2), (2.0, -1.0)] {
        let p = FnPoint::new(base.clone(), &[], &[(ell, theta), (1.7, 0.4)]);
        for (w, kappa) in probes {
            let fit = twist_flow_asymptotics(&p, "e0", &w.parse().unwrap(), 50).unwrap();
            ratios.push((ell, w, fit.slope / (kappa * ell)));
        }
        let flat = twist_flow_asymptotics(&p, "e0", &"b0".parse().unwrap(), 50).unwrap();
        flat_worst = flat_worst.max(flat.slope.abs());
    }
    let elapsed = t.elapsed();
    let pass = ratios.iter().all(|r| (0.98..=1.02).contains(&r.2))
        && flat_worst < 1e-6
        && elapsed < Duration::from_secs(10);
    report(
        "twist asymptotics",
        pass,
        format!(
            "slope/(kappa ell): {:?}; disjoint probe slope {flat_worst:e}; {elapsed:?}",
            ratios.iter().map(|r| format!("{}@{}={:.4}", r.1, r.0, r.2)).collect::<Vec<_>>()
        ),
    );
    assert!(pass);
}
