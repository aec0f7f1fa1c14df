//! Simplicial complexes stored by their facets.
//!
//! Vertices are string labels. Each complex holds a shared, sorted label
//! universe and its facets as sorted index lists; links and deletions keep the
//! universe of their parent so faces stay comparable across a decomposition.
//! Labels that parse as comma-separated integers sort as integer tuples, so
//! order-complex vertices appear in lexicographic sequence order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, resource, Result};
use crate::hasse::HasseDiagram;
use crate::poset;
use crate::sequence::{BSBounds, DegreeSequence, Limits};

/// A face as sorted indices into the label universe.
pub(crate) type Face = Vec<u32>;

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Arc<[String]>,
    facets: Vec<Face>,
}

/// Face counts `f = (f_-1, f_0, ..., f_dim)` and the h-vector of a pure complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHVector {
    pub f: Vec<i64>,
    /// Absent when the complex is not pure.
    pub h: Option<Vec<i64>>,
}

impl FHVector {
    pub fn h(&self) -> Result<&[i64]> {
        match &self.h {
            Some(h) => Ok(h),
            None => invalid("h-vector is only defined for pure complexes"),
        }
    }

    /// `sum_i (-1)^i f_i` over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.f
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
            .sum()
    }
}

/// Wire form: `{"vertices": [..], "facets": [[..], ..]}`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

/// Orders labels as integer tuples when both parse, numeric labels first.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    fn parse(s: &str) -> Option<Vec<i64>> {
        s.split(',').map(|t| t.trim().parse().ok()).collect()
    }
    match (parse(a), parse(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Sorts, dedups and drops faces contained in a strictly larger face.
fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    for f in faces.iter_mut() {
        f.sort_unstable();
        f.dedup();
    }
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        let dominated = kept
            .iter()
            .take_while(|g| g.len() > f.len())
            .any(|g| is_subset(&f, g));
        if !dominated {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn from_facets<I, F, S>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let facets: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(Into::into).collect())
            .collect();
        let mut labels: Vec<String> = facets.iter().flatten().cloned().collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        labels.dedup();
        let faces = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| labels.binary_search_by(|x| label_cmp(x, l)).unwrap() as u32)
                    .collect()
            })
            .collect();
        SimplicialComplex { labels: labels.into(), facets: maximalize(faces) }
    }

    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { labels: Arc::from(Vec::new()), facets: Vec::new() }
    }

    /// The complex `{∅}` whose only face is empty.
    pub fn empty_face() -> Self {
        SimplicialComplex { labels: Arc::from(Vec::new()), facets: vec![Vec::new()] }
    }

    pub fn simplex<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Self {
        Self::from_facets([vertices])
    }

    pub(crate) fn with_faces(&self, faces: Vec<Face>) -> Self {
        SimplicialComplex { labels: self.labels.clone(), facets: maximalize(faces) }
    }

    /// Same universe, facets already sorted, maximal and deduplicated.
    pub(crate) fn with_normalized_faces(&self, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable();
        SimplicialComplex { labels: self.labels.clone(), facets: faces }
    }

    pub(crate) fn facet_indices(&self) -> &[Face] {
        &self.facets
    }

    pub(crate) fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub(crate) fn index_of(&self, label: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|x| label_cmp(x, label))
            .ok()
            .map(|i| i as u32)
    }

    pub(crate) fn face_from_labels(&self, labels: &[&str]) -> Option<Face> {
        let mut face: Face = labels.iter().map(|l| self.index_of(l)).collect::<Option<_>>()?;
        face.sort_unstable();
        face.dedup();
        Some(face)
    }

    pub(crate) fn vertex_indices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.facets.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Vertices occurring in some facet, in label order.
    pub fn vertices(&self) -> Vec<&str> {
        self.vertex_indices().into_iter().map(|v| self.label(v)).collect()
    }

    /// Facets as label lists, each sorted, in canonical order.
    pub fn facets(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&v| self.label(v)).collect())
            .collect()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// A single facet, or void, or `{∅}`.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[&str]) -> bool {
        match self.face_from_labels(face) {
            Some(f) => self.facets.iter().any(|g| is_subset(&f, g)),
            None => face.is_empty() && !self.is_void(),
        }
    }

    fn require_face(&self, sigma: &[&str]) -> Result<Face> {
        let face = self.face_from_labels(sigma).filter(|f| self.facets.iter().any(|g| is_subset(f, g)));
        match face {
            Some(f) => Ok(f),
            None if sigma.is_empty() && !self.is_void() => Ok(Vec::new()),
            None => invalid(format!("{sigma:?} is not a face of the complex")),
        }
    }

    /// `{ τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`.
    pub fn link(&self, sigma: &[&str]) -> Result<Self> {
        let s = self.require_face(sigma)?;
        Ok(self.link_face(&s))
    }

    /// `{ τ : σ ⊄ τ }`.
    pub fn deletion(&self, sigma: &[&str]) -> Result<Self> {
        let s = self.require_face(sigma)?;
        Ok(self.deletion_face(&s))
    }

    pub(crate) fn link_face(&self, s: &[u32]) -> Self {
        let faces = self
            .facets
            .iter()
            .filter(|f| is_subset(s, f))
            .map(|f| f.iter().copied().filter(|v| !s.contains(v)).collect())
            .collect();
        self.with_faces(faces)
    }

    pub(crate) fn deletion_face(&self, s: &[u32]) -> Self {
        let mut faces = Vec::new();
        for f in &self.facets {
            if is_subset(s, f) {
                for &v in s {
                    faces.push(f.iter().copied().filter(|&x| x != v).collect());
                }
            } else {
                faces.push(f.clone());
            }
        }
        self.with_faces(faces)
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mine: HashSet<&str> = self.vertices().into_iter().collect();
        if let Some(shared) = other.vertices().into_iter().find(|v| mine.contains(v)) {
            return invalid(format!("cannot join complexes sharing vertex {shared:?}"));
        }
        let mut facets = Vec::new();
        for f in self.facets() {
            for g in other.facets() {
                facets.push(f.iter().chain(g.iter()).map(|s| s.to_string()).collect::<Vec<_>>());
            }
        }
        if facets.is_empty() {
            return Ok(Self::void());
        }
        Ok(Self::from_facets(facets))
    }

    /// The cone over `self` with the given apex.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        Self::simplex([apex]).join(self)
    }

    fn face_budget(&self) -> Result<()> {
        match self.facets.iter().map(Vec::len).max() {
            Some(k) if k > 30 => resource(format!("facets of size {k} are too large to list all faces")),
            _ => Ok(()),
        }
    }

    fn all_faces<K: FaceKey>(&self) -> HashSet<K> {
        let mut out = HashSet::new();
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                out.insert(K::from_mask(f, mask));
            }
        }
        out
    }

    /// Face counts by dimension, with the h-vector when the complex is pure.
    pub fn f_vector(&self) -> Result<FHVector> {
        self.face_budget()?;
        let counts = if self.labels.len() <= 128 {
            face_counts(&self.all_faces::<u128>())
        } else {
            face_counts(&self.all_faces::<Face>())
        };
        let h = self.is_pure().then(|| h_from_f(&counts));
        Ok(FHVector { f: counts, h })
    }

    /// Minimal vertex sets that are not faces, in canonical order.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Vec<String>>> {
        self.face_budget()?;
        let found = if self.labels.len() <= 128 {
            self.nonfaces_with::<u128>()
        } else {
            self.nonfaces_with::<Face>()
        };
        let mut out: Vec<Vec<String>> = found
            .into_iter()
            .map(|f| f.into_iter().map(|v| self.label(v).to_string()).collect())
            .collect();
        out.sort_by(|a, b| {
            a.len().cmp(&b.len()).then_with(|| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| label_cmp(x, y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        });
        Ok(out)
    }

    fn nonfaces_with<K: FaceKey>(&self) -> Vec<Face> {
        let faces: HashSet<K> = self.all_faces();
        let verts = self.vertex_indices();
        let mut out = Vec::new();
        for face in &faces {
            let members = face.members();
            let top = members.last().copied();
            for &v in verts.iter().filter(|&&v| top.is_none_or(|t| v > t)) {
                let candidate = face.with(v);
                if faces.contains(&candidate) {
                    continue;
                }
                let minimal = members.iter().all(|&u| faces.contains(&candidate.without(u)));
                if minimal {
                    let mut m = members.clone();
                    m.push(v);
                    out.push(m);
                }
            }
        }
        out
    }

    /// Flag: every minimal nonface has exactly two vertices.
    pub fn is_flag(&self) -> Result<bool> {
        Ok(self.minimal_nonfaces()?.iter().all(|n| n.len() == 2))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertices().into_iter().map(String::from).collect(),
            facets: self
                .facets()
                .into_iter()
                .map(|f| f.into_iter().map(String::from).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        let listed: HashSet<&str> = json.vertices.iter().map(String::as_str).collect();
        if listed.len() != json.vertices.len() {
            return invalid("duplicate vertex labels");
        }
        let used: HashSet<&str> = json.facets.iter().flatten().map(String::as_str).collect();
        if let Some(v) = used.iter().find(|v| !listed.contains(*v)) {
            return invalid(format!("facet vertex {v:?} is not listed in vertices"));
        }
        if let Some(v) = listed.iter().find(|v| !used.contains(*v)) {
            return invalid(format!("vertex {v:?} lies in no facet"));
        }
        let c = Self::from_facets(json.facets.clone());
        if c.num_facets() != json.facets.len() {
            return invalid("facets are not pairwise inclusion-incomparable");
        }
        Ok(c)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets() == other.facets()
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("Void");
        }
        f.debug_set()
            .entries(self.facets().iter().map(|fc| format!("{{{}}}", fc.join(" "))))
            .finish()
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = ComplexJson::deserialize(d)?;
        Self::from_json(&json).map_err(serde::de::Error::custom)
    }
}

trait FaceKey: Hash + Eq + Sized {
    fn from_mask(facet: &[u32], mask: u64) -> Self;
    fn members(&self) -> Vec<u32>;
    fn size(&self) -> usize;
    fn with(&self, v: u32) -> Self;
    fn without(&self, v: u32) -> Self;
}

impl FaceKey for u128 {
    fn from_mask(facet: &[u32], mask: u64) -> Self {
        facet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u128, |acc, (_, &v)| acc | 1u128 << v)
    }

    fn members(&self) -> Vec<u32> {
        (0..128).filter(|&i| self >> i & 1 == 1).collect()
    }

    fn size(&self) -> usize {
        self.count_ones() as usize
    }

    fn with(&self, v: u32) -> Self {
        self | 1u128 << v
    }

    fn without(&self, v: u32) -> Self {
        self & !(1u128 << v)
    }
}

impl FaceKey for Face {
    fn from_mask(facet: &[u32], mask: u64) -> Self {
        facet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    }

    fn members(&self) -> Vec<u32> {
        self.clone()
    }

    fn size(&self) -> usize {
        self.len()
    }

    fn with(&self, v: u32) -> Self {
        let mut f = self.clone();
        let pos = f.partition_point(|&x| x < v);
        f.insert(pos, v);
        f
    }

    fn without(&self, v: u32) -> Self {
        self.iter().copied().filter(|&x| x != v).collect()
    }
}

fn face_counts<K: FaceKey>(faces: &HashSet<K>) -> Vec<i64> {
    if faces.is_empty() {
        return vec![0];
    }
    let top = faces.iter().map(K::size).max().unwrap();
    let mut f = vec![0i64; top + 1];
    for face in faces {
        f[face.size()] += 1;
    }
    f
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` with `d = dim + 1`.
fn h_from_f(f: &[i64]) -> Vec<i64> {
    if f == [0] {
        return Vec::new();
    }
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize]
                })
                .sum()
        })
        .collect()
}

/// `Δ(P)`: facets are the maximal chains of the diagram.
pub fn order_complex(h: &HasseDiagram) -> Result<SimplicialComplex> {
    order_complex_with(h, &Limits::default())
}

pub fn order_complex_with(h: &HasseDiagram, limits: &Limits) -> Result<SimplicialComplex> {
    if h.is_empty() {
        return Ok(SimplicialComplex::empty_face());
    }
    let mut labels: Vec<(String, usize)> = h
        .elements()
        .iter()
        .enumerate()
        .map(|(i, d)| (d.label(), i))
        .collect();
    labels.sort_by(|a, b| label_cmp(&a.0, &b.0));
    let mut position = vec![0u32; h.len()];
    for (pos, (_, i)) in labels.iter().enumerate() {
        position[*i] = pos as u32;
    }
    let faces: Vec<Face> = h
        .maximal_chains(limits)?
        .into_iter()
        .map(|c| {
            let mut f: Face = c.into_iter().map(|i| position[i]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    let universe: Vec<String> = labels.into_iter().map(|(l, _)| l).collect();
    Ok(SimplicialComplex { labels: universe.into(), facets: maximalize(faces) })
}

/// The order complex of `Pi(bounds)`.
pub fn bs_order_complex(bounds: &BSBounds) -> Result<SimplicialComplex> {
    order_complex(&HasseDiagram::from_bounds(bounds)?)
}

/// `(Γ_d, Σ_d)`: order complexes of the open down-set and open up-set of `d`.
///
/// For `d = lower` (resp. `upper`) the first (resp. second) part is `{∅}`, the
/// unit of the join, so `link(Δ, d) = Γ_d ⋆ Σ_d` holds for every element.
pub fn downset_upset_split(
    bounds: &BSBounds,
    d: &DegreeSequence,
) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let below = poset::interval(bounds, bounds.lower(), d)?;
    let above = poset::interval(bounds, d, bounds.upper())?;
    let down = HasseDiagram::from_bounds(&below)?;
    let up = HasseDiagram::from_bounds(&above)?;
    let dd = down.index_of(d).expect("d is the top of its down-set");
    let du = up.index_of(d).expect("d is the bottom of its up-set");
    Ok((
        order_complex(&down.induced(|i| i != dd))?,
        order_complex(&up.induced(|i| i != du))?,
    ))
}
