use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::graph::members;
use super::rewrite::{applicable_moves, apply, Move, MoveSequence};
use super::MoveError;
use crate::pants::{canonical_key, CanonicalKey, KeyOptions, PantsDecomposition};

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Equivalence deciding when the target has been reached.
    pub key: KeyOptions,
    /// Maximum number of expanded decompositions over both directions.
    pub budget: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            key: KeyOptions::default(),
            budget: DEFAULT_BUDGET,
        }
    }
}

struct Side {
    /// key -> (neighbor key toward this side's root, move from neighbor, decomposition)
    seen: HashMap<CanonicalKey, (Option<(CanonicalKey, Move)>, PantsDecomposition)>,
    frontier: Vec<CanonicalKey>,
}

impl Side {
    fn seeded(seeds: Vec<PantsDecomposition>) -> Self {
        let mut seen = HashMap::new();
        let mut frontier = Vec::new();
        for d in seeds {
            let k = strict_key(&d);
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(k.clone()) {
                slot.insert((None, d));
                frontier.push(k);
            }
        }
        Side { seen, frontier }
    }

    /// Expands one BFS level; returns a key also seen by `other`, if any.
    fn expand(&mut self, other: &Side, expanded: &mut usize, budget: usize) -> Result<Option<CanonicalKey>, MoveError> {
        let mut next = Vec::new();
        for k in std::mem::take(&mut self.frontier) {
            *expanded += 1;
            if *expanded > budget {
                return Err(MoveError::BudgetExceeded(budget));
            }
            let d = self.seen[&k].1.clone();
            for m in applicable_moves(&d) {
                let nd = apply(&d, &m)?;
                let nk = strict_key(&nd);
                if self.seen.contains_key(&nk) {
                    continue;
                }
                self.seen.insert(nk.clone(), (Some((k.clone(), m)), nd));
                if other.seen.contains_key(&nk) {
                    return Ok(Some(nk));
                }
                next.push(nk);
            }
        }
        self.frontier = next;
        Ok(None)
    }
}

fn strict_key(d: &PantsDecomposition) -> CanonicalKey {
    canonical_key(d, KeyOptions::default())
}

/// Bidirectional breadth-first search for a shortest move sequence from `d1`
/// to a decomposition with the canonical key of `d2`.
///
/// States are compared without crosscap absorption so that replays never
/// depend on which member of an absorbed class was stored.
pub fn find_move_path(
    d1: &PantsDecomposition,
    d2: &PantsDecomposition,
    opts: SearchOptions,
) -> Result<MoveSequence, MoveError> {
    let (s1, s2) = (d1.validate()?, d2.validate()?);
    if s1 != s2 {
        return Err(MoveError::DifferentSurfaces(s1.name(), s2.name()));
    }
    let goal = canonical_key(d2, opts.key);
    if canonical_key(d1, opts.key) == goal {
        return Ok(MoveSequence::empty(d1.clone()));
    }
    let mut fwd = Side::seeded(vec![d1.clone()]);
    let mut bwd = Side::seeded(members(d2, opts.key));
    let start_key = strict_key(d1);
    let meet = if bwd.seen.contains_key(&start_key) {
        start_key
    } else {
        let mut expanded = 0usize;
        loop {
            if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
                return Err(MoveError::Inapplicable {
                    mv: "path".into(),
                    reason: "target is not reachable by elementary moves".into(),
                });
            }
            let hit = if fwd.frontier.len() <= bwd.frontier.len() {
                fwd.expand(&bwd, &mut expanded, opts.budget)?
            } else {
                bwd.expand(&fwd, &mut expanded, opts.budget)?
            };
            if let Some(k) = hit {
                break k;
            }
        }
    };

    let mut moves = Vec::new();
    let mut k = meet.clone();
    while let Some((parent, m)) = fwd.seen[&k].0.clone() {
        moves.push(m);
        k = parent;
    }
    moves.reverse();
    let mut current = MoveSequence {
        start: d1.clone(),
        moves: moves.clone(),
    }
    .replay()?;
    let mut k = meet;
    while let Some((toward_root, _)) = bwd.seen[&k].0.clone() {
        let (m, next) = applicable_moves(&current)
            .into_iter()
            .find_map(|m| {
                let n = apply(&current, &m).ok()?;
                (strict_key(&n) == toward_root).then_some((m, n))
            })
            .expect("elementary moves are reversible at the type level");
        moves.push(m);
        current = next;
        k = toward_root;
    }
    debug_assert_eq!(canonical_key(&current, opts.key), goal);
    Ok(MoveSequence {
        start: d1.clone(),
        moves,
    })
}
