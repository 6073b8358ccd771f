//! Quantum Bruhat graph of the infinite dihedral group.
//!
//! Production code only needs [`distance`] and [`weight`], which are closed
//! forms. The breadth-first search below walks the graph itself and exists to
//! check them.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::roots::{two_rho_pair, AffineRoot, Coweight};
use crate::weyl::WeylElt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Bruhat => "bruhat",
            EdgeKind::Quantum => "quantum",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QbgEdge {
    pub src: WeylElt,
    pub dst: WeylElt,
    pub kind: EdgeKind,
    /// The positive root `r` with `dst = src * s_r`.
    pub root: AffineRoot,
    pub weight: Coweight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbgPath {
    pub edges: Vec<QbgEdge>,
}

impl QbgPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn weight(&self) -> Coweight {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn is_consecutive(&self) -> bool {
        self.edges.windows(2).all(|p| p[0].dst == p[1].src)
    }
}

/// Outgoing edges of `v`. Upward edges are searched among reflections by
/// positive roots of index `|n| <= bound`; an upward edge from `v` never
/// needs `|n| > length(v) + 1`.
pub fn edges_from(v: WeylElt, bound: i64) -> Vec<QbgEdge> {
    let len = v.length() as i64;
    let mut out = Vec::new();
    for root in AffineRoot::positive_roots(bound) {
        let dst = v * WeylElt::reflection(root);
        let dst_len = dst.length() as i64;
        let kind = if dst_len == len + 1 {
            EdgeKind::Bruhat
        } else if dst_len == len + 1 - two_rho_pair(root.coroot()) {
            EdgeKind::Quantum
        } else {
            continue;
        };
        let weight = match kind {
            EdgeKind::Bruhat => Coweight::ZERO,
            EdgeKind::Quantum => root.coroot(),
        };
        out.push(QbgEdge {
            src: v,
            dst,
            kind,
            root,
            weight,
        });
    }
    out
}

/// Length of a shortest path `u => v`.
pub fn distance(u: WeylElt, v: WeylElt) -> u64 {
    let (lu, lv) = (u.length(), v.length());
    if u.bruhat_leq(v) {
        lv - lu
    } else if u.side().compatible(v.side()) {
        lu - lv
    } else {
        lu.abs_diff(lv) + 2
    }
}

/// Weight shared by every shortest path `u => v`: strip last letters off `u`
/// until it drops below `v` in Bruhat order, collecting one simple coroot
/// per removed letter.
pub fn weight(u: WeylElt, v: WeylElt) -> Coweight {
    let mut z = u;
    let mut wt = Coweight::ZERO;
    while !z.bruhat_leq(v) {
        let last = z.last_letter().expect("identity lies below everything");
        wt += last.simple_root().coroot();
        z = z * last.element();
    }
    wt
}

/// Truncation used by the search oracle.
pub fn truncation_cap(u: WeylElt, v: WeylElt) -> u64 {
    u.length() + v.length() + 4
}

/// Breadth-first layers from `u` inside the subgraph of elements of length
/// at most `cap`, recording for every vertex its distance and the set of
/// weights of shortest paths reaching it.
pub fn bfs_from(u: WeylElt, cap: u64) -> HashMap<WeylElt, (u64, BTreeSet<Coweight>)> {
    let bound = cap as i64 + 1;
    let mut seen: HashMap<WeylElt, (u64, BTreeSet<Coweight>)> = HashMap::new();
    seen.insert(u, (0, BTreeSet::from([Coweight::ZERO])));
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        let (da, wa) = seen[&a].clone();
        for edge in edges_from(a, bound) {
            if edge.dst.length() > cap {
                continue;
            }
            let shifted = wa.iter().map(|w| *w + edge.weight);
            match seen.get_mut(&edge.dst) {
                None => {
                    seen.insert(edge.dst, (da + 1, shifted.collect()));
                    queue.push_back(edge.dst);
                }
                Some((db, wb)) if *db == da + 1 => wb.extend(shifted),
                Some(_) => {}
            }
        }
    }
    seen
}

/// Distance and the set of shortest-path weights computed by search.
pub fn search_distance_and_weights(u: WeylElt, v: WeylElt) -> Result<(u64, BTreeSet<Coweight>)> {
    let cap = truncation_cap(u, v);
    let layers = bfs_from(u, cap);
    let (d, weights) = layers
        .get(&v)
        .cloned()
        .ok_or_else(|| truncation(u, v, cap))?;
    let touches_cap = shortest_path_vertices(&layers, u, v)
        .iter()
        .any(|z| z.length() == cap);
    if touches_cap {
        return Err(truncation(u, v, cap));
    }
    Ok((d, weights))
}

/// Every shortest path `u => v`, enumerated through the truncated graph.
/// The number of paths grows exponentially with the distance; keep inputs
/// small.
pub fn shortest_paths(u: WeylElt, v: WeylElt) -> Result<Vec<QbgPath>> {
    let cap = truncation_cap(u, v);
    let layers = bfs_from(u, cap);
    let &(d, _) = layers.get(&v).ok_or_else(|| truncation(u, v, cap))?;
    let bound = cap as i64 + 1;

    // extend partial paths forward, keeping only those that stay on a
    // shortest route to `v`
    let on_route = shortest_path_vertices(&layers, u, v);
    if on_route.iter().any(|z| z.length() == cap) {
        return Err(truncation(u, v, cap));
    }
    let mut partial: Vec<Vec<QbgEdge>> = vec![Vec::new()];
    for step in 0..d {
        let mut next = Vec::new();
        for path in partial {
            let head = path.last().map_or(u, |e| e.dst);
            for edge in edges_from(head, bound) {
                let ok = on_route.contains(&edge.dst)
                    && layers.get(&edge.dst).is_some_and(|(dd, _)| *dd == step + 1);
                if ok {
                    let mut p = path.clone();
                    p.push(edge);
                    next.push(p);
                }
            }
        }
        partial = next;
    }
    Ok(partial
        .into_iter()
        .filter(|p| p.last().map_or(u, |e| e.dst) == v)
        .map(|edges| QbgPath { edges })
        .collect())
}

fn truncation(u: WeylElt, v: WeylElt, cap: u64) -> Error {
    Error::TruncationTooSmall {
        src: u.to_string(),
        dst: v.to_string(),
        cap,
    }
}

/// Vertices lying on at least one shortest path `u => v`.
fn shortest_path_vertices(
    layers: &HashMap<WeylElt, (u64, BTreeSet<Coweight>)>,
    u: WeylElt,
    v: WeylElt,
) -> BTreeSet<WeylElt> {
    let Some(&(d, _)) = layers.get(&v) else {
        return BTreeSet::new();
    };
    let cap = truncation_cap(u, v);
    let bound = cap as i64 + 1;
    let mut on_route = BTreeSet::from([v]);
    let mut frontier = vec![v];
    for dist in (0..d).rev() {
        let mut prev = Vec::new();
        for (z, (dz, _)) in layers.iter() {
            if *dz != dist {
                continue;
            }
            let hits = edges_from(*z, bound)
                .iter()
                .any(|e| frontier.contains(&e.dst));
            if hits {
                prev.push(*z);
            }
        }
        on_route.extend(prev.iter().copied());
        frontier = prev;
    }
    on_route
}
