//! Canonical codes for colorings under vertex relabeling.
//!
//! The search refines an ordered partition of the vertices by counting red
//! and blue neighbours in each cell, individualizes a vertex of the first
//! non-singleton cell whenever refinement stalls, and keeps the
//! lexicographically smallest adjacency encoding over all leaves. Leaves with
//! equal codes yield automorphisms, which prune later siblings lying in the
//! same orbit of the prefix stabilizer.

use std::fmt;

use crate::coloring::TwoColoring;
use crate::graph::SimpleGraph;

/// Relabeling-invariant encoding of a coloring. Two colorings have equal
/// codes iff they are isomorphic; codes are totally ordered.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_code(c: &TwoColoring) -> CanonicalCode {
    canonical_form(c).0
}

/// The canonical code together with the canonical vertex order: position
/// `i` of the returned vector holds the vertex placed `i`-th.
pub fn canonical_form(c: &TwoColoring) -> (CanonicalCode, Vec<usize>) {
    let host: Vec<u64> = (0..c.order()).map(|u| c.host_mask(u)).collect();
    let red = c.red_masks();
    canonize(c.order(), &host, &red, None)
}

/// Canonical code of an uncolored graph.
pub fn graph_code(g: &SimpleGraph) -> CanonicalCode {
    let host: Vec<u64> = (0..g.order()).map(|u| g.mask(u)).collect();
    let red = vec![0; g.order()];
    canonize(g.order(), &host, &red, None).0
}

pub fn are_isomorphic(a: &TwoColoring, b: &TwoColoring) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}

/// Canonical code where isomorphisms must also preserve a per-vertex label.
pub(crate) fn labeled_code(order: usize, host: &[u64], red: &[u64], labels: &[u64]) -> CanonicalCode {
    canonize(order, host, red, Some(labels)).0
}

fn canonize(
    order: usize,
    host: &[u64],
    red: &[u64],
    labels: Option<&[u64]>,
) -> (CanonicalCode, Vec<usize>) {
    debug_assert!(order <= 64);
    let blue: Vec<u64> = host.iter().zip(red).map(|(h, r)| h & !r).collect();
    let mut search = Search {
        order,
        red,
        blue: &blue,
        labels,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let cells = match labels {
        None => {
            if order == 0 {
                Vec::new()
            } else {
                vec![(0..order).collect()]
            }
        }
        Some(labels) => {
            let mut vs: Vec<usize> = (0..order).collect();
            vs.sort_by_key(|&v| (labels[v], v));
            let mut cells: Vec<Vec<usize>> = Vec::new();
            for v in vs {
                match cells.last_mut() {
                    Some(cell) if labels[cell[0]] == labels[v] => cell.push(v),
                    _ => cells.push(vec![v]),
                }
            }
            cells
        }
    };
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (code, ordering) = search.best.expect("search visits at least one leaf");
    (CanonicalCode(code), ordering)
}

struct Search<'a> {
    order: usize,
    red: &'a [u64],
    blue: &'a [u64],
    labels: Option<&'a [u64]>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'outer: loop {
            for xi in 0..cells.len() {
                let xmask = cells[xi].iter().fold(0u64, |m, &v| m | 1 << v);
                for ci in 0..cells.len() {
                    if cells[ci].len() < 2 {
                        continue;
                    }
                    let key = |v: usize| {
                        (
                            (self.red[v] & xmask).count_ones(),
                            (self.blue[v] & xmask).count_ones(),
                        )
                    };
                    let k0 = key(cells[ci][0]);
                    if cells[ci].iter().all(|&v| key(v) == k0) {
                        continue;
                    }
                    let mut keyed: Vec<_> = cells[ci].iter().map(|&v| (key(v), v)).collect();
                    keyed.sort_unstable();
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (k, v) in keyed {
                        if last == Some(k) {
                            parts.last_mut().unwrap().push(v);
                        } else {
                            parts.push(vec![v]);
                            last = Some(k);
                        }
                    }
                    cells.splice(ci..ci + 1, parts);
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        self.refine(&mut cells);
        let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
            let ordering: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(ordering);
            return;
        };
        let mut target = cells[ti].clone();
        target.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                if explored.iter().any(|&u| orbits[u] == orbits[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            next.splice(ti..ti + 1, [vec![v], rest]);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    /// Orbit representatives under the group generated by the known
    /// automorphisms that fix `prefix` pointwise.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let a = find(&mut parent, v);
                let b = find(&mut parent, w);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.order).map(|v| find(&mut parent, v)).collect()
    }

    fn leaf(&mut self, ordering: Vec<usize>) {
        let code = self.encode(&ordering);
        let Some((first_code, first_order)) = &self.first else {
            self.first = Some((code.clone(), ordering.clone()));
            self.best = Some((code, ordering));
            return;
        };
        let (best_code, best_order) = self.best.as_ref().unwrap();
        let reference = if &code == first_code {
            Some(first_order)
        } else if &code == best_code {
            Some(best_order)
        } else {
            None
        };
        if let Some(reference) = reference {
            let mut g = vec![0; self.order];
            for (i, &v) in reference.iter().enumerate() {
                g[v] = ordering[i];
            }
            self.generators.push(g);
        } else if &code < best_code {
            self.best = Some((code, ordering));
        }
    }

    fn encode(&self, ordering: &[usize]) -> Vec<u8> {
        let n = self.order;
        let mut out = Vec::with_capacity(2 + n * n.saturating_sub(1) / 8);
        out.push(n as u8);
        if let Some(labels) = self.labels {
            for &v in ordering {
                out.extend_from_slice(&labels[v].to_be_bytes());
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..n {
            let u = ordering[i];
            for &v in &ordering[i + 1..] {
                let val = if self.red[u] >> v & 1 == 1 {
                    2
                } else if self.blue[u] >> v & 1 == 1 {
                    1
                } else {
                    0
                };
                acc = acc << 2 | val;
                filled += 1;
                if filled == 4 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (2 * (4 - filled)));
        }
        out
    }
}
