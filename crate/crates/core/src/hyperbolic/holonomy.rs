use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hexagon::PantsBlock;
use super::isometry::{distance, length_from_trace, Isometry};
use super::point::FnPoint;
use super::HyperbolicError;
use crate::pants::{edge_id, LeafKind};

/// Largest base the assembly supports.
pub const MAX_HOLONOMY_PANTS: usize = 2;

/// A word in the generators; each letter is `(generator index, inverse)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, bool)>);

/// A closed-curve word, or an arc probe `@b:W` measuring how far `W` moves
/// the distinguished point of boundary `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Probe {
    Closed(String),
    Arc { boundary: String, word: String },
}

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Probe::Closed(w) => f.write_str(w),
            Probe::Arc { boundary, word } => write!(f, "@{boundary}:{word}"),
        }
    }
}

impl FromStr for Probe {
    type Err = HyperbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('@') {
            let (b, w) = rest
                .split_once(':')
                .ok_or_else(|| HyperbolicError::Parse(format!("arc probe {s:?} needs '@boundary:word'")))?;
            return Ok(Probe::Arc {
                boundary: b.trim().to_string(),
                word: w.trim().to_string(),
            });
        }
        if s.is_empty() {
            return Err(HyperbolicError::Parse("empty probe".into()));
        }
        Ok(Probe::Closed(s.to_string()))
    }
}

impl From<Probe> for String {
    fn from(p: Probe) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Probe {
    type Error = HyperbolicError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Holonomy representation of a hyperbolic structure given by FN
/// coordinates.
///
/// Generators, in order: `c{i}` (the cuff of edge `i` seen from its a-end)
/// and, for edges off the spanning tree, `t{i}` (crossing edge `i` from its
/// a-end); then one glide reflection per crosscap, named by its label; then
/// one cuff element per boundary leaf, named by its label.
#[derive(Debug, Clone)]
pub struct Holonomy {
    names: Vec<String>,
    elements: Vec<Isometry>,
    /// Combinatorial orientation character of each generator.
    reversing: Vec<bool>,
    basepoints: BTreeMap<String, Complex64>,
    /// Largest relative defect of the gluing relations.
    pub residual: f64,
}

fn size(g: &Isometry) -> f64 {
    g.0.iter().flatten().fold(1.0f64, |a, v| a.max(v.abs()))
}

/// Defect of `x = y` relative to the rounding expected from conjugating by
/// matrices as large as `conj`.
fn rel_defect(x: &Isometry, y: &Isometry, conj: f64) -> f64 {
    x.distance_up_to_sign(y) / (conj * conj).max(size(x)).max(size(y))
}

impl Holonomy {
    pub fn new(point: &FnPoint) -> Result<Self, HyperbolicError> {
        point.validate()?;
        let base = &point.base;
        if base.pants > MAX_HOLONOMY_PANTS {
            return Err(HyperbolicError::Unsupported(format!(
                "holonomy is assembled for at most {MAX_HOLONOMY_PANTS} pants, base has {}",
                base.pants
            )));
        }
        let blocks = (0..base.pants)
            .map(|p| PantsBlock::new(point.cuff_lengths(p)?))
            .collect::<Result<Vec<_>, _>>()?;

        // local transition across each edge: G_b = G_a * X_e
        let transition: Vec<Isometry> = base
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let fold = if e.flip {
                    Isometry::REFLECT
                } else {
                    Isometry::rotate(std::f64::consts::PI)
                };
                blocks[e.a.0].feet[e.a.slot()]
                    * Isometry::translate(point.theta(&edge_id(i)))
                    * fold
                    * blocks[e.b.0].feet[e.b.slot()].inverse()
            })
            .collect();

        let mut place: Vec<Option<(Isometry, bool)>> = vec![None; base.pants];
        let mut tree = vec![false; base.edges.len()];
        place[0] = Some((Isometry::IDENTITY, false));
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let (gu, pu) = place[u].unwrap();
            for (i, e) in base.edges.iter().enumerate() {
                let (w, g) = if e.a.0 == u && place[e.b.0].is_none() {
                    (e.b.0, gu * transition[i])
                } else if e.b.0 == u && place[e.a.0].is_none() {
                    (e.a.0, gu * transition[i].inverse())
                } else {
                    continue;
                };
                tree[i] = true;
                place[w] = Some((g, pu ^ e.flip));
                queue.push_back(w);
            }
        }
        let place: Vec<(Isometry, bool)> = place.into_iter().map(|p| p.expect("connected base")).collect();
        let global = |p: usize, x: Isometry| x.conjugate_by(&place[p].0);

        let mut names = Vec::new();
        let mut elements = Vec::new();
        let mut reversing = Vec::new();
        let mut residual = 0.0f64;
        for (i, e) in base.edges.iter().enumerate() {
            let ca = global(e.a.0, blocks[e.a.0].cuffs[e.a.slot()]);
            let cb = global(e.b.0, blocks[e.b.0].cuffs[e.b.slot()]);
            names.push(format!("c{i}"));
            elements.push(ca);
            reversing.push(false);
            let mut conj = size(&place[e.a.0].0).max(size(&place[e.b.0].0));
            let seen = if tree[i] {
                cb
            } else {
                let t = place[e.a.0].0 * transition[i] * place[e.b.0].0.inverse();
                names.push(format!("t{i}"));
                elements.push(t);
                reversing.push(place[e.a.0].1 ^ place[e.b.0].1 ^ e.flip);
                conj = conj.max(size(&t) * size(&place[e.b.0].0));
                cb.conjugate_by(&t)
            };
            let expect = if e.flip { ca } else { ca.inverse() };
            residual = residual.max(rel_defect(&seen, &expect, conj));
        }
        let mut basepoints = BTreeMap::new();
        for kind in [LeafKind::Crosscap, LeafKind::Boundary] {
            for leaf in base.leaves.iter().filter(|l| l.kind == kind) {
                let (p, s) = (leaf.at.0, leaf.at.slot());
                let foot = place[p].0 * blocks[p].feet[s];
                let cuff = global(p, blocks[p].cuffs[s]);
                names.push(leaf.label.clone());
                if kind == LeafKind::Crosscap {
                    let g = Isometry::glide(point.mu[&leaf.label]).conjugate_by(&foot);
                    residual = residual.max(rel_defect(&(g * g), &cuff.inverse(), size(&foot)));
                    elements.push(g);
                    reversing.push(true);
                } else {
                    elements.push(cuff);
                    reversing.push(false);
                    let shift = foot * Isometry::translate(point.theta(&leaf.label));
                    basepoints.insert(leaf.label.clone(), shift.apply(Complex64::i()));
                }
            }
        }
        if elements.iter().any(|g| g.0.iter().flatten().any(|x| !x.is_finite())) {
            return Err(HyperbolicError::Numeric("generator matrices overflow".into()));
        }
        if residual.is_nan() || residual >= 1e-6 {
            return Err(HyperbolicError::Numeric(format!(
                "gluing relations hold only to {residual:e}"
            )));
        }
        Ok(Holonomy {
            names,
            elements,
            reversing,
            basepoints,
            residual,
        })
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Option<Isometry> {
        self.names.iter().position(|n| n == name).map(|i| self.elements[i])
    }

    /// Whether the named generator reverses orientation, read off the base
    /// (crosscap passes plus flipped edges along its loop).
    pub fn reverses_orientation(&self, name: &str) -> Option<bool> {
        self.names.iter().position(|n| n == name).map(|i| self.reversing[i])
    }

    fn det_negative(&self, g: usize) -> bool {
        self.elements[g].det() < 0.0
    }

    pub fn basepoint(&self, boundary: &str) -> Option<Complex64> {
        self.basepoints.get(boundary).copied()
    }

    /// Parses a word: generator names matched longest-first, each optionally
    /// followed by `'` (inverse) or `^k`. Spaces, `.` and `*` separate.
    pub fn parse_word(&self, text: &str) -> Result<Word, HyperbolicError> {
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.names[i].len()));
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < bytes.len() {
            let c = bytes[pos] as char;
            if c.is_whitespace() || c == '.' || c == '*' {
                pos += 1;
                continue;
            }
            let g = order
                .iter()
                .copied()
                .find(|&i| text[pos..].starts_with(self.names[i].as_str()))
                .ok_or_else(|| {
                    HyperbolicError::Parse(format!(
                        "no generator at {:?} in {text:?}; generators are {:?}",
                        &text[pos..],
                        self.names
                    ))
                })?;
            pos += self.names[g].len();
            let mut power: i64 = 1;
            if text[pos..].starts_with('\'') {
                power = -1;
                pos += 1;
            } else if text[pos..].starts_with('^') {
                let rest = &text[pos + 1..];
                let len = rest
                    .char_indices()
                    .take_while(|&(k, ch)| ch.is_ascii_digit() || (k == 0 && ch == '-'))
                    .count();
                power = rest[..len]
                    .parse()
                    .map_err(|_| HyperbolicError::Parse(format!("bad exponent in {text:?}")))?;
                pos += 1 + len;
            }
            for _ in 0..power.unsigned_abs() {
                out.push((g, power < 0));
            }
        }
        Ok(Word(out))
    }

    pub fn evaluate(&self, word: &Word) -> Isometry {
        word.0.iter().fold(Isometry::IDENTITY, |acc, &(g, inv)| {
            acc * if inv { self.elements[g].inverse() } else { self.elements[g] }
        })
    }

    pub fn word(&self, text: &str) -> Result<Isometry, HyperbolicError> {
        Ok(self.evaluate(&self.parse_word(text)?))
    }

    /// Whether the word reverses orientation, from the letter characters.
    pub fn word_reverses(&self, word: &Word) -> bool {
        word.0.iter().fold(false, |acc, &(g, _)| acc ^ self.reversing[g])
    }

    /// Geodesic length of a closed probe, or displacement of the boundary
    /// point for an arc probe.
    pub fn probe(&self, probe: &Probe) -> Result<f64, HyperbolicError> {
        match probe {
            Probe::Closed(w) => {
                let word = self.parse_word(w)?;
                let negative = word.0.iter().filter(|&&(g, _)| self.det_negative(g)).count() % 2 == 1;
                length_from_trace(self.evaluate(&word).trace(), !negative)
            }
            Probe::Arc { boundary, word } => {
                let p = self
                    .basepoint(boundary)
                    .ok_or_else(|| HyperbolicError::Parse(format!("{boundary} is not a boundary label")))?;
                let g = self.word(word)?;
                Ok(distance(p, g.apply(p)))
            }
        }
    }
}

/// Lengths of `probes` at `point`, in probe order.
pub fn length_spectrum(point: &FnPoint, probes: &[Probe]) -> Result<Vec<f64>, HyperbolicError> {
    let hol = Holonomy::new(point)?;
    probes.par_iter().map(|p| hol.probe(p)).collect()
}

/// A fixed probe family for a base: every reduced word of length one or two
/// in the generators, and for each boundary `b` and letter `x` the arc
/// probes `@b:x` and `@b:x.b` (except `x = b'`).
pub fn standard_probes(point: &FnPoint) -> Result<Vec<Probe>, HyperbolicError> {
    let hol = Holonomy::new(point)?;
    let letters: Vec<String> = hol
        .generator_names()
        .iter()
        .flat_map(|n| [n.clone(), format!("{n}'")])
        .collect();
    let inverse = |a: &str, b: &str| a.trim_end_matches('\'') == b.trim_end_matches('\'') && a != b;
    let mut out: Vec<Probe> = letters.iter().map(|x| Probe::Closed(x.clone())).collect();
    for x in &letters {
        for y in &letters {
            if !inverse(x, y) {
                out.push(Probe::Closed(format!("{x}.{y}")));
            }
        }
    }
    for b in point.base.labels_of(LeafKind::Boundary) {
        for x in &letters {
            out.push(Probe::Arc {
                boundary: b.to_string(),
                word: x.clone(),
            });
            if *x != format!("{b}'") {
                out.push(Probe::Arc {
                    boundary: b.to_string(),
                    word: format!("{x}.{b}"),
                });
            }
        }
    }
    Ok(out)
}
