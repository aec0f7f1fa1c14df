//! Explicit cover graphs.
//!
//! A [`HasseDiagram`] built from bounds orders its elements componentwise.
//! Diagrams built from an arbitrary cover list (reversed posets, deleted
//! elements, hand-made test posets) carry their own reachability table, so the
//! element sequences then act as plain labels.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, resource, Result};
use crate::poset;
use crate::sequence::{BSBounds, DegreeSequence, Limits};

#[derive(Clone, Debug)]
enum Order {
    Componentwise,
    /// `above[i]` holds every `j` with `i <= j`.
    Explicit(Vec<FixedBitSet>),
}

#[derive(Clone, Debug)]
pub struct HasseDiagram {
    elements: Vec<DegreeSequence>,
    edges: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<DegreeSequence, usize>,
    order: Order,
}

/// Wire form: `{"elements": [[1,3], ...], "edges": [[0,1], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseJson {
    pub elements: Vec<Vec<i64>>,
    pub edges: Vec<[usize; 2]>,
}

impl PartialEq for HasseDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.edges == other.edges
    }
}

impl Eq for HasseDiagram {}

impl HasseDiagram {
    pub fn from_bounds(bounds: &BSBounds) -> Result<Self> {
        Self::from_bounds_with(bounds, &Limits::default())
    }

    pub fn from_bounds_with(bounds: &BSBounds, limits: &Limits) -> Result<Self> {
        let elements = poset::enumerate_with(bounds, limits)?;
        let index = index_of_all(&elements);
        let mut edges = Vec::new();
        for (i, d) in elements.iter().enumerate() {
            for c in (0..d.len()).filter_map(|k| d.step_up(k)) {
                if let Some(&j) = index.get(&c) {
                    edges.push((i, j));
                }
            }
        }
        Ok(Self::assemble(elements, edges, index, Order::Componentwise))
    }

    /// Builds a diagram from labels and cover edges `(from, to)` meaning `to`
    /// covers `from`. Rejects cycles and edges implied by transitivity.
    pub fn from_covers(
        elements: Vec<DegreeSequence>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = elements.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n || a == b) {
            return invalid(format!("edge ({a}, {b}) is out of range or a loop"));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
        let mut new_pos = vec![0; n];
        for (pos, &old) in perm.iter().enumerate() {
            new_pos[old] = pos;
        }
        let sorted: Vec<DegreeSequence> = perm.iter().map(|&i| elements[i].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return invalid("duplicate element labels");
        }
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (new_pos[a], new_pos[b])).collect();
        let above = reachability(n, &edges)?;
        for &(a, b) in &edges {
            // b must not be reachable from a through another upper cover of a
            let redundant = edges
                .iter()
                .any(|&(x, y)| x == a && y != b && above[y].contains(b));
            if redundant {
                return invalid(format!(
                    "edge {:?} -> {:?} is implied by transitivity",
                    sorted[a], sorted[b]
                ));
            }
        }
        let index = index_of_all(&sorted);
        Ok(Self::assemble(sorted, edges, index, Order::Explicit(above)))
    }

    /// Builds the diagram of an arbitrary finite order given by a `leq` oracle.
    pub fn from_relation(
        elements: Vec<DegreeSequence>,
        leq: impl Fn(&DegreeSequence, &DegreeSequence) -> bool,
    ) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let lt = |a: usize, b: usize| a != b && leq(&elements[a], &elements[b]);
        for a in 0..n {
            for b in 0..n {
                if a != b && lt(a, b) && lt(b, a) {
                    return invalid("relation is not antisymmetric");
                }
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|z| lt(a, z) && lt(z, b)) {
                    edges.push((a, b));
                }
            }
        }
        Self::from_covers(elements, edges)
    }

    fn assemble(
        elements: Vec<DegreeSequence>,
        mut edges: Vec<(usize, usize)>,
        index: HashMap<DegreeSequence, usize>,
        order: Order,
    ) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let n = elements.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &edges {
            up[a].push(b);
            down[b].push(a);
        }
        for v in down.iter_mut() {
            v.sort_unstable();
        }
        HasseDiagram { elements, edges, up, down, index, order }
    }

    pub fn elements(&self) -> &[DegreeSequence] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cover edges `(from, to)`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Indices of the elements covering `i`, in lexicographic order.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn index_of(&self, d: &DegreeSequence) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// True when the order is the componentwise order on the element sequences.
    pub fn is_componentwise(&self) -> bool {
        matches!(self.order, Order::Componentwise)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.order {
            Order::Componentwise => {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
            }
            Order::Explicit(above) => above[i].contains(j),
        }
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Longest chain length below each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for i in self.topological_order() {
            for &j in &self.up[i] {
                h[j] = h[j].max(h[i] + 1);
            }
        }
        h
    }

    /// Longest chain length above each element.
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for &i in self.topological_order().iter().rev() {
            for &j in &self.up[i] {
                d[i] = d[i].max(d[j] + 1);
            }
        }
        d
    }

    /// Length of the longest chain; 0 for the empty poset.
    pub fn rank(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(i) = stack.pop() {
            out.push(i);
            for &j in self.up[i].iter().rev() {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        out
    }

    /// Maximal chains as index paths from minimal to maximal elements, in
    /// lexicographic order of their element sequences.
    pub fn maximal_chains(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for m in self.minimal_elements() {
            path.push(m);
            self.chains_from(&mut path, &mut out, limits.max_chains)?;
            path.pop();
        }
        Ok(out)
    }

    fn chains_from(
        &self,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        max: usize,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        if self.up[last].is_empty() {
            if out.len() >= max {
                return resource(format!("more than {max} maximal chains"));
            }
            out.push(path.clone());
            return Ok(());
        }
        for &next in &self.up[last] {
            path.push(next);
            self.chains_from(path, out, max)?;
            path.pop();
        }
        Ok(())
    }

    /// Number of maximal chains, by path counting (no enumeration guard needed).
    pub fn count_maximal_chains(&self) -> BigUint {
        let mut paths = vec![BigUint::from(0u32); self.len()];
        let order = self.topological_order();
        for &i in order.iter().rev() {
            paths[i] = if self.up[i].is_empty() {
                BigUint::from(1u32)
            } else {
                self.up[i].iter().map(|&j| paths[j].clone()).sum()
            };
        }
        self.minimal_elements().iter().map(|&i| paths[i].clone()).sum()
    }

    /// True when every maximal chain has the same length.
    pub fn is_pure(&self) -> bool {
        let h = self.heights();
        let d = self.depths();
        let mut lengths = self
            .minimal_elements()
            .into_iter()
            .map(|i| d[i])
            .chain(self.maximal_elements().into_iter().map(|i| h[i]));
        let Some(first) = lengths.next() else {
            return true;
        };
        // pure iff every element lies on a chain of full length
        lengths.all(|l| l == first) && (0..self.len()).all(|i| h[i] + d[i] == first)
    }

    /// The same elements with the order reversed.
    pub fn reversed(&self) -> HasseDiagram {
        let n = self.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in below.iter_mut().enumerate() {
            for j in 0..n {
                if self.leq(j, i) {
                    row.insert(j);
                }
            }
        }
        let edges = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        Self::assemble(self.elements.clone(), edges, self.index.clone(), Order::Explicit(below))
    }

    /// The induced subposet on the elements for which `keep` holds.
    pub fn induced(&self, keep: impl Fn(usize) -> bool) -> HasseDiagram {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        let elements: Vec<DegreeSequence> = kept.iter().map(|&i| self.elements[i].clone()).collect();
        let m = kept.len();
        let lt = |a: usize, b: usize| self.lt(kept[a], kept[b]);
        let mut edges = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if lt(a, b) && !(0..m).any(|z| lt(a, z) && lt(z, b)) {
                    edges.push((a, b));
                }
            }
        }
        let index = index_of_all(&elements);
        let order = match &self.order {
            Order::Componentwise => Order::Componentwise,
            Order::Explicit(_) => {
                let mut above = vec![FixedBitSet::with_capacity(m); m];
                for (a, row) in above.iter_mut().enumerate() {
                    for b in 0..m {
                        if self.leq(kept[a], kept[b]) {
                            row.insert(b);
                        }
                    }
                }
                Order::Explicit(above)
            }
        };
        Self::assemble(elements, edges, index, order)
    }

    /// The subposet with one element removed.
    pub fn without(&self, d: &DegreeSequence) -> Result<HasseDiagram> {
        let Some(v) = self.index_of(d) else {
            return invalid(format!("{d:?} is not an element of the diagram"));
        };
        Ok(self.induced(|i| i != v))
    }

    pub fn to_json(&self) -> HasseJson {
        HasseJson {
            elements: self.elements.iter().map(|d| d.entries().to_vec()).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &HasseJson) -> Result<Self> {
        let elements = json
            .elements
            .iter()
            .map(|e| DegreeSequence::new(e.clone()))
            .collect::<Result<Vec<_>>>()?;
        let edges = json.edges.iter().map(|&[a, b]| (a, b)).collect();
        Self::from_covers(elements, edges)
    }
}

fn index_of_all(elements: &[DegreeSequence]) -> HashMap<DegreeSequence, usize> {
    elements.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect()
}

fn reachability(n: usize, edges: &[(usize, usize)]) -> Result<Vec<FixedBitSet>> {
    let mut up = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in edges {
        up[a].push(b);
        indeg[b] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(i) = stack.pop() {
        topo.push(i);
        for &j in &up[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                stack.push(j);
            }
        }
    }
    if topo.len() != n {
        return invalid("cover edges contain a cycle");
    }
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    for &i in topo.iter().rev() {
        above[i].insert(i);
        for &j in &up[i] {
            let row = above[j].clone();
            above[i].union_with(&row);
        }
    }
    Ok(above)
}
