//! Brute-force poset isomorphism for small diagrams.
//!
//! Two finite posets are isomorphic exactly when their Hasse diagrams are
//! isomorphic as directed graphs, so the search matches cover edges. Elements
//! are assigned in topological order and candidates are pruned by an invariant
//! signature (height, depth, up-degree, down-degree).

use crate::hasse::HasseDiagram;

type Signature = (usize, usize, usize, usize);

fn signatures(h: &HasseDiagram) -> Vec<Signature> {
    let heights = h.heights();
    let depths = h.depths();
    (0..h.len())
        .map(|i| (heights[i], depths[i], h.upper_covers(i).len(), h.lower_covers(i).len()))
        .collect()
}

/// Returns `map` with `map[i]` the image in `q` of element `i` of `p`, such
/// that `i -> j` is a cover in `p` iff `map[i] -> map[j]` is a cover in `q`.
pub fn poset_isomorphic(p: &HasseDiagram, q: &HasseDiagram) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.edges().len() != q.edges().len() {
        return None;
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }

    // assign by increasing height so lower covers are mapped first
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (sp[i].0, sp[i].1, i));

    let mut search = Search {
        p,
        q,
        sp: &sp,
        sq: &sq,
        order,
        map: vec![usize::MAX; p.len()],
        used: vec![false; q.len()],
    };
    if search.extend(0) {
        Some(search.map)
    } else {
        None
    }
}

struct Search<'a> {
    p: &'a HasseDiagram,
    q: &'a HasseDiagram,
    sp: &'a [Signature],
    sq: &'a [Signature],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for y in 0..self.q.len() {
            if self.used[y] || self.sp[x] != self.sq[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[y] = false;
            self.map[x] = usize::MAX;
        }
        false
    }

    /// Cover edges between `x` and already-mapped elements must match exactly.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let mapped = |i: usize| self.map[i] != usize::MAX;
        let down_p = self.p.lower_covers(x).iter().filter(|&&i| mapped(i));
        let mut count = 0;
        for &i in down_p {
            if !self.q.lower_covers(y).contains(&self.map[i]) {
                return false;
            }
            count += 1;
        }
        let mapped_down_q = self
            .q
            .lower_covers(y)
            .iter()
            .filter(|&&j| self.used[j])
            .count();
        if mapped_down_q != count {
            return false;
        }
        let mut count = 0;
        for &i in self.p.upper_covers(x).iter().filter(|&&i| mapped(i)) {
            if !self.q.upper_covers(y).contains(&self.map[i]) {
                return false;
            }
            count += 1;
        }
        let mapped_up_q = self.q.upper_covers(y).iter().filter(|&&j| self.used[j]).count();
        mapped_up_q == count
    }
}

/// Checks that `map` is a bijection `p -> q` preserving and reflecting `<=`.
pub fn is_order_isomorphism(p: &HasseDiagram, q: &HasseDiagram, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &y in map {
        if y >= q.len() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..p.len()).all(|i| (0..p.len()).all(|j| p.leq(i, j) == q.leq(map[i], map[j])))
}
