use std::collections::VecDeque;

use super::rewrite::{apply, Move, MoveSequence, Regrouping};
use super::MoveError;
use crate::pants::{End, LeafKind, Occupant, PantsDecomposition, SlotRef};

/// A half-edge named stably across Move II: edge indices and leaf labels
/// survive it, slots do not.
#[derive(Debug, Clone)]
enum Half {
    EdgeEnd(usize, End),
    Leaf(String),
}

impl Half {
    fn locate(&self, d: &PantsDecomposition) -> SlotRef {
        match self {
            Half::EdgeEnd(i, End::A) => d.edges[*i].a,
            Half::EdgeEnd(i, End::B) => d.edges[*i].b,
            Half::Leaf(label) => d.leaves[d.leaf_by_label(label).expect("label survives")].at,
        }
    }

    fn edge(&self) -> Option<usize> {
        match self {
            Half::EdgeEnd(i, _) => Some(*i),
            Half::Leaf(_) => None,
        }
    }
}

struct Runner {
    current: PantsDecomposition,
    moves: Vec<Move>,
}

impl Runner {
    fn push(&mut self, m: Move) -> Result<(), MoveError> {
        self.current = apply(&self.current, &m)?;
        self.moves.push(m);
        Ok(())
    }

    /// Move II on `edge` with the regrouping that puts the half-edges at
    /// slots `p` and `q` (on opposite ends of `edge`) into the same pants.
    fn join(&mut self, edge: usize, p: SlotRef, q: SlotRef) -> Result<(), MoveError> {
        let e = &self.current.edges[edge];
        let (pa, qb) = if p.0 == e.a.0 { (p.1, q.1) } else { (q.1, p.1) };
        let lowest_a = (0..3).find(|&s| s != e.a.1).unwrap();
        let lowest_b = (0..3).find(|&s| s != e.b.1).unwrap();
        let regroup = if (pa == lowest_a) == (qb == lowest_b) {
            Regrouping::AcBd
        } else {
            Regrouping::AdBc
        };
        self.push(Move::II { edge, regroup })
    }

    /// Brings `moving` into the pants holding `target` by Move II steps along
    /// a shortest path that avoids both half-edges' own edges and `avoid`.
    fn transport(&mut self, moving: &Half, target: &Half, avoid: Option<usize>) -> Result<(), MoveError> {
        let (pm, pt) = (moving.locate(&self.current), target.locate(&self.current));
        let banned = [moving.edge(), target.edge()];
        let path = shortest_path(&self.current, pm.0, pt.0, &banned, avoid).ok_or_else(|| MoveError::Inapplicable {
            mv: "II".into(),
            reason: "no path to transport along".into(),
        })?;
        self.transport_along(moving, target, &path)
    }

    /// Walks `moving` along `path`, whose first edge touches the pants of
    /// `moving` and whose last edge touches the pants of `target`. Each step
    /// groups `moving` with the next path edge, so the rest of the path stays
    /// intact.
    fn transport_along(&mut self, moving: &Half, target: &Half, path: &[usize]) -> Result<(), MoveError> {
        for (i, &t) in path.iter().enumerate() {
            let pm = moving.locate(&self.current);
            let te = &self.current.edges[t];
            debug_assert!(te.a.0 == pm.0 || te.b.0 == pm.0);
            let next = if te.a.0 == pm.0 { te.b.0 } else { te.a.0 };
            let q = match path.get(i + 1) {
                None => target.locate(&self.current),
                Some(&u) => {
                    let ue = &self.current.edges[u];
                    if ue.a.0 == next {
                        ue.a
                    } else {
                        ue.b
                    }
                }
            };
            self.join(t, pm, q)?;
        }
        Ok(())
    }
}

/// Edge indices of a shortest path between two pants, ignoring self-loops.
fn shortest_path(
    d: &PantsDecomposition,
    from: usize,
    to: usize,
    banned: &[Option<usize>],
    avoid: Option<usize>,
) -> Option<Vec<usize>> {
    let mut via: Vec<Option<(usize, usize)>> = vec![None; d.pants];
    let mut seen = vec![false; d.pants];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = Vec::new();
            let mut v = to;
            while let Some((p, e)) = via[v] {
                path.push(e);
                v = p;
            }
            path.reverse();
            return Some(path);
        }
        for (i, e) in d.edges.iter().enumerate() {
            if e.is_loop() || banned.contains(&Some(i)) {
                continue;
            }
            let w = if e.a.0 == u {
                e.b.0
            } else if e.b.0 == u {
                e.a.0
            } else {
                continue;
            };
            if seen[w] || Some(w) == avoid {
                continue;
            }
            seen[w] = true;
            via[w] = Some((u, i));
            queue.push_back(w);
        }
    }
    None
}

/// A non-tree edge whose fundamental cycle reverses orientation, with the
/// tree path from its `b` end to its `a` end.
fn odd_cycle(d: &PantsDecomposition) -> Option<(usize, Vec<usize>)> {
    let adj = d.adjacency();
    let mut side = vec![None; d.pants];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; d.pants];
    let mut tree = vec![false; d.edges.len()];
    side[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &(w, i, flip) in &adj[u] {
            if side[w].is_none() {
                side[w] = Some(side[u].unwrap() ^ flip);
                parent[w] = Some((u, i));
                tree[i] = true;
                queue.push_back(w);
            }
        }
    }
    let f = d
        .edges
        .iter()
        .enumerate()
        .position(|(i, e)| !tree[i] && side[e.a.0].unwrap() ^ side[e.b.0].unwrap() ^ e.flip)?;
    let to_root = |mut v: usize| {
        let mut chain = vec![(v, None)];
        while let Some((p, e)) = parent[v] {
            chain.push((p, Some(e)));
            v = p;
        }
        chain
    };
    let (from_b, from_a) = (to_root(d.edges[f].b.0), to_root(d.edges[f].a.0));
    let meet = from_b.iter().find(|(v, _)| from_a.iter().any(|(w, _)| w == v)).unwrap().0;
    let mut path: Vec<usize> = from_b.iter().take_while(|(v, _)| *v != meet).map(|&(v, _)| parent[v].unwrap().1).collect();
    let mut down: Vec<usize> = from_a.iter().take_while(|(v, _)| *v != meet).map(|&(v, _)| parent[v].unwrap().1).collect();
    down.reverse();
    path.extend(down);
    Some((f, path))
}

/// Moves turning `d` into a decomposition whose complement of 1-sided curves
/// is orientable: each orientation-reversing cycle is shrunk onto a flipped
/// self-loop, which is then split into two crosscaps.
pub fn orientify(d: &PantsDecomposition) -> Result<MoveSequence, MoveError> {
    d.validate()?;
    let mut run = Runner {
        current: d.clone(),
        moves: Vec::new(),
    };
    while let Some((f, path)) = odd_cycle(&run.current) {
        run.transport_along(&Half::EdgeEnd(f, End::B), &Half::EdgeEnd(f, End::A), &path)?;
        let e = &run.current.edges[f];
        debug_assert!(e.is_loop() && e.flip, "{} -> {}", d.to_json(), run.current.to_json());
        let vertex = e.a.0;
        run.push(Move::IVSplit { vertex })?;
    }
    Ok(MoveSequence {
        start: d.clone(),
        moves: run.moves,
    })
}

/// Moves lowering the number of 1-sided curves to at most two, two at a time.
pub fn reduce_crosscaps(d: &PantsDecomposition) -> Result<MoveSequence, MoveError> {
    d.validate()?;
    if !d.is_orientable_decomposition() {
        return Err(MoveError::NotOrientable);
    }
    let mut run = Runner {
        current: d.clone(),
        moves: Vec::new(),
    };
    loop {
        let labels: Vec<String> = run
            .current
            .labels_of(LeafKind::Crosscap)
            .into_iter()
            .map(String::from)
            .collect();
        if labels.len() < 3 {
            break;
        }
        let (anchor, second) = (Half::Leaf(labels[0].clone()), Half::Leaf(labels[1].clone()));
        run.transport(&second, &anchor, None)?;
        let q = anchor.locate(&run.current).0;
        let table = run.current.slot_table()?;
        let third = table[q]
            .iter()
            .copied()
            .find(|o| match o {
                Occupant::Leaf(i) => ![&labels[0], &labels[1]].contains(&&run.current.leaves[*i].label),
                Occupant::EdgeEnd { .. } => true,
            })
            .unwrap();
        match third {
            Occupant::Leaf(_) => {
                // closed case: three crosscaps on one pants
                run.push(Move::IVMerge { vertex: q })?;
                let last = run.current.labels_of(LeafKind::Crosscap)[0].to_string();
                run.push(Move::III { crosscap: last })?;
            }
            Occupant::EdgeEnd { edge: e, end } => {
                let far = match end {
                    End::A => End::B,
                    End::B => End::A,
                };
                let c3 = labels[2].clone();
                run.transport(&Half::Leaf(c3.clone()), &Half::EdgeEnd(e, far), Some(q))?;
                run.push(Move::IVMerge { vertex: q })?;
                let l = run.current.edges.len() - 1;
                let (l1, c3_at) = (run.current.edges[l].a, Half::Leaf(c3.clone()).locate(&run.current));
                run.join(e, l1, c3_at)?;
                run.push(Move::III { crosscap: c3 })?;
                let (la, lb) = (run.current.edges[l].a, run.current.edges[l].b);
                run.join(e, la, lb)?;
            }
        }
    }
    Ok(MoveSequence {
        start: d.clone(),
        moves: run.moves,
    })
}
