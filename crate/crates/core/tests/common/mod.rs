//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use nonorientable::dt::{DtVector, PantsArcs};
use nonorientable::pants::{edge_id, LeafKind, PantsDecomposition};

/// Arc counts `[a00, a11, a22, a01, a12, a20]` solving the endpoint equations
/// by exhaustive search, keeping the solution with at most one kind of
/// self-arc and no arcs between the two slots that self-arcs avoid.
pub fn brute_force_arcs(x: [i64; 3]) -> Option<[i64; 6]> {
    let mut found = None;
    let bound = x.iter().copied().max().unwrap_or(0);
    for a0 in 0..=bound / 2 {
        for a1 in 0..=bound / 2 {
            for a2 in 0..=bound / 2 {
                let selfs = [a0, a1, a2];
                if selfs.iter().filter(|&&a| a > 0).count() > 1 {
                    continue;
                }
                for p01 in 0..=bound {
                    for p12 in 0..=bound {
                        for p20 in 0..=bound {
                            let pair = [p01, p12, p20];
                            let ok = (0..3).all(|i| 2 * selfs[i] + pair[i] + pair[(i + 2) % 3] == x[i]);
                            // self-arcs at i leave no room for arcs joining the other two
                            let standard = (0..3).all(|i| selfs[i] == 0 || pair[(i + 1) % 3] == 0);
                            if ok && standard {
                                assert!(found.is_none(), "standard arcs for {x:?} are not unique");
                                found = Some([a0, a1, a2, p01, p12, p20]);
                            }
                        }
                    }
                }
            }
        }
    }
    found
}

pub fn arcs_as_array(a: &PantsArcs) -> [i64; 6] {
    [
        a.self_arcs[0],
        a.self_arcs[1],
        a.self_arcs[2],
        a.pair_arcs[0],
        a.pair_arcs[1],
        a.pair_arcs[2],
    ]
}

/// Union-find that tracks the parity of the path to the root.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        if self.parent[x] == x {
            return (x, 0);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parity[x] ^= p;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    /// Joins `x` and `y` with parity `w`; returns the parity of the cycle
    /// closed by this link, if it closes one.
    fn link(&mut self, x: usize, y: usize, w: u8) -> Option<u8> {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return Some(px ^ py ^ w);
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ w;
        None
    }
}

/// What the oracle counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Census {
    pub arcs: usize,
    pub one_sided: usize,
    pub two_sided: usize,
    /// Pants arcs traversed over all traced components.
    pub strands: usize,
}

impl Census {
    pub fn closed(&self) -> usize {
        self.one_sided + self.two_sided
    }
}

/// Components of a realizable integer vector, found by materializing every
/// marked point and linking arc partners and glued partners in a
/// parity-tracking union-find.
///
/// Conventions: on slot `i` the points run through self-arc first ends, arcs
/// to `i+1`, self-arc second ends (nested), arcs to `i+2`; a family joining
/// two slots is laid out in opposite orders on them. Across an unflipped edge
/// point `k` meets `t-k-1 (mod m)`, across a flipped one `k+t (mod m)`; at a
/// crosscap with `n > 0` point `k` meets `k+n (mod 2n)`.
pub fn oracle_components(v: &DtVector) -> Census {
    let base: &PantsDecomposition = &v.base;
    let mut index: HashMap<(usize, usize, i64), usize> = HashMap::new();
    let mut measures = vec![[0i64; 3]; base.pants];
    for (p, row) in measures.iter_mut().enumerate() {
        let x = v.slot_measures(p);
        for s in 0..3 {
            row[s] = x[s] as i64;
            for k in 0..row[s] {
                let id = index.len();
                index.insert((p, s, k), id);
            }
        }
    }
    let n_points = index.len();
    let mut dsu = ParityDsu::new(n_points);
    let mut census = Census::default();
    let mut linked_out = vec![false; n_points];

    // arcs inside each pants
    for (p, x) in measures.iter().enumerate() {
        let [a0, a1, a2, p01, p12, p20] = brute_force_arcs(*x).expect("realizable pants");
        let selfs = [a0, a1, a2];
        let pair = [p01, p12, p20];
        let first_of_pair = |i: usize| selfs[i];
        let start_of_prev = |i: usize| 2 * selfs[i] + pair[i];
        for i in 0..3 {
            for q in 0..selfs[i] {
                let u = index[&(p, i, q)];
                let w = index[&(p, i, 2 * selfs[i] + pair[i] - 1 - q)];
                dsu.link(u, w, 0);
                census.strands += 1;
            }
            let j = (i + 1) % 3;
            for q in 0..pair[i] {
                let u = index[&(p, i, first_of_pair(i) + q)];
                let w = index[&(p, j, start_of_prev(j) + pair[i] - 1 - q)];
                dsu.link(u, w, 0);
                census.strands += 1;
            }
        }
    }

    let mut closing = Vec::new();
    for (i, e) in base.edges.iter().enumerate() {
        let (m, t) = v.mt_of(&edge_id(i));
        let (m, t) = (m as i64, t as i64);
        for k in 0..m {
            let other = if e.flip { (k + t).rem_euclid(m) } else { (t - k - 1).rem_euclid(m) };
            let u = index[&(e.a.0, e.a.slot(), k)];
            let w = index[&(e.b.0, e.b.slot(), other)];
            linked_out[u] = true;
            linked_out[w] = true;
            if let Some(par) = dsu.link(u, w, e.flip as u8) {
                closing.push(par);
            }
        }
    }
    for leaf in &base.leaves {
        if leaf.kind != LeafKind::Crosscap {
            continue;
        }
        let n = v.n_of(&leaf.label) as i64;
        for k in 0..n.max(0) {
            let u = index[&(leaf.at.0, leaf.at.slot(), k)];
            let w = index[&(leaf.at.0, leaf.at.slot(), k + n)];
            linked_out[u] = true;
            linked_out[w] = true;
            if let Some(par) = dsu.link(u, w, 1) {
                closing.push(par);
            }
        }
    }
    for par in closing {
        if par == 1 {
            census.one_sided += 1;
        } else {
            census.two_sided += 1;
        }
    }
    // every path component has exactly two unglued points
    census.arcs = linked_out.iter().filter(|&&l| !l).count() / 2;

    // annuli that carry no marked points
    for id in v.names().two_sided {
        let (m, t) = v.mt_of(&id);
        if m == 0.0 {
            census.two_sided += t as usize;
        }
    }
    for label in v.names().one_sided {
        let n = v.n_of(&label) as i64;
        if n < 0 {
            census.two_sided += (-n / 2) as usize;
            census.one_sided += (-n % 2) as usize;
        }
    }
    census
}

/// Every realizable integer vector on `base` with `|n| <= bound`,
/// `0 <= m <= bound`, `|t| <= bound` and `t >= 0` when `m = 0`.
pub fn boxed_vectors(base: &PantsDecomposition, bound: i64) -> Vec<DtVector> {
    let names = nonorientable::dt::CoordinateNames::of(base);
    let n_values: Vec<i64> = (-bound..=bound).collect();
    let mt_values: Vec<(i64, i64)> = (0..=bound)
        .flat_map(|m| (-bound..=bound).map(move |t| (m, t)))
        .filter(|&(m, t)| m > 0 || t >= 0)
        .collect();
    let mut out = Vec::new();
    let mut ns = vec![0usize; names.one_sided.len()];
    loop {
        let mut mts = vec![0usize; names.two_sided.len()];
        loop {
            let n: Vec<i64> = ns.iter().map(|&i| n_values[i]).collect();
            let mt: Vec<(i64, i64)> = mts.iter().map(|&i| mt_values[i]).collect();
            let v = DtVector::from_ints(base.clone(), &n, &mt);
            if v.realizable().unwrap().realizable {
                out.push(v);
            }
            if !odometer(&mut mts, mt_values.len()) {
                break;
            }
        }
        if !odometer(&mut ns, n_values.len()) {
            break;
        }
    }
    out
}

fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}
