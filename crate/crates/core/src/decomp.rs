//! Vertex decompositions, shedding vertices and shellings.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{invalid, resource, Result};

/// Certificate of vertex-decomposability.
///
/// A `Node` names a shedding vertex together with certificates for its link
/// and its deletion; a `Leaf` marks a simplex (including void and `{∅}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingTree {
    Leaf,
    Node {
        vertex: String,
        link: Arc<SheddingTree>,
        del: Arc<SheddingTree>,
    },
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leaf: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    link: Option<Box<TreeJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    del: Option<Box<TreeJson>>,
}

impl SheddingTree {
    /// Number of `Node`s, counting shared subtrees once per occurrence.
    pub fn node_count(&self) -> usize {
        match self {
            SheddingTree::Leaf => 0,
            SheddingTree::Node { link, del, .. } => 1 + link.node_count() + del.node_count(),
        }
    }

    fn to_repr(&self) -> TreeJson {
        match self {
            SheddingTree::Leaf => TreeJson { leaf: Some(true), vertex: None, link: None, del: None },
            SheddingTree::Node { vertex, link, del } => TreeJson {
                leaf: None,
                vertex: Some(vertex.clone()),
                link: Some(Box::new(link.to_repr())),
                del: Some(Box::new(del.to_repr())),
            },
        }
    }

    fn from_repr(r: TreeJson) -> std::result::Result<Self, String> {
        match r {
            TreeJson { leaf: Some(true), vertex: None, link: None, del: None } => Ok(SheddingTree::Leaf),
            TreeJson { leaf: None | Some(false), vertex: Some(v), link: Some(l), del: Some(d) } => {
                Ok(SheddingTree::Node {
                    vertex: v,
                    link: Arc::new(Self::from_repr(*l)?),
                    del: Arc::new(Self::from_repr(*d)?),
                })
            }
            _ => Err("shedding tree node needs either \"leaf\": true or vertex/link/del".into()),
        }
    }
}

impl Serialize for SheddingTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SheddingTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_repr(TreeJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Link of `v` in a pure complex: the facets through `v` with `v` removed.
fn pure_link(c: &SimplicialComplex, v: u32) -> SimplicialComplex {
    let faces = c
        .facet_indices()
        .iter()
        .filter(|f| f.binary_search(&v).is_ok())
        .map(|f| f.iter().copied().filter(|&x| x != v).collect())
        .collect();
    c.with_normalized_faces(faces)
}

/// Deletion of `v` from a pure complex, when it is pure of the same dimension.
///
/// That happens exactly when every `F \ v` is a ridge of some facet avoiding
/// `v`; the deletion's facets are then the facets avoiding `v`.
fn pure_deletion(c: &SimplicialComplex, v: u32) -> Option<SimplicialComplex> {
    let (with, without): (Vec<&Face>, Vec<&Face>) =
        c.facet_indices().iter().partition(|f| f.binary_search(&v).is_ok());
    if with.is_empty() || without.is_empty() {
        return None;
    }
    let mut ridges: HashSet<Face> = HashSet::new();
    for g in &without {
        for skip in 0..g.len() {
            let mut r = (*g).clone();
            r.remove(skip);
            ridges.insert(r);
        }
    }
    let covered = with.iter().all(|f| {
        let r: Face = f.iter().copied().filter(|&x| x != v).collect();
        ridges.contains(&r)
    });
    covered.then(|| c.with_normalized_faces(without.into_iter().cloned().collect()))
}

/// Drops the cone points (vertices in every facet). Decomposability and the
/// certificates are unchanged by coning.
fn strip_cone_points(c: &SimplicialComplex) -> SimplicialComplex {
    let facets = c.facet_indices();
    let Some(first) = facets.first() else {
        return c.clone();
    };
    let apex: Vec<u32> = first
        .iter()
        .copied()
        .filter(|v| facets.iter().all(|f| f.binary_search(v).is_ok()))
        .collect();
    if apex.is_empty() {
        return c.clone();
    }
    let faces = facets
        .iter()
        .map(|f| f.iter().copied().filter(|v| !apex.contains(v)).collect())
        .collect();
    c.with_normalized_faces(faces)
}

/// Memoized vertex-decomposability search.
///
/// The memo is keyed by the labeled facet set after cone points are removed;
/// it can be reused across queries on complexes sharing a label universe.
pub struct Decomposer {
    memo: HashMap<Vec<Face>, Option<Arc<SheddingTree>>>,
    max_entries: usize,
}

impl Default for Decomposer {
    fn default() -> Self {
        Decomposer { memo: HashMap::new(), max_entries: 2_000_000 }
    }
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_entries(max_entries: usize) -> Self {
        Decomposer { memo: HashMap::new(), max_entries }
    }

    /// A certificate if `c` is vertex-decomposable, `None` otherwise.
    pub fn decompose(&mut self, c: &SimplicialComplex) -> Result<Option<SheddingTree>> {
        if !c.is_pure() {
            return invalid("vertex-decomposability is defined for pure complexes only");
        }
        Ok(self.search(c)?.map(|t| (*t).clone()))
    }

    fn search(&mut self, c: &SimplicialComplex) -> Result<Option<Arc<SheddingTree>>> {
        if c.is_simplex() {
            return Ok(Some(Arc::new(SheddingTree::Leaf)));
        }
        let core = strip_cone_points(c);
        if core.is_simplex() {
            return Ok(Some(Arc::new(SheddingTree::Leaf)));
        }
        if let Some(hit) = self.memo.get(core.facet_indices()) {
            return Ok(hit.clone());
        }
        if self.memo.len() >= self.max_entries {
            return resource(format!(
                "vertex-decomposition search exceeded {} memo entries",
                self.max_entries
            ));
        }
        let mut found = None;
        for v in core.vertex_indices() {
            if let Some(tree) = self.try_shed(&core, v)? {
                found = Some(Arc::new(tree));
                break;
            }
        }
        self.memo.insert(core.facet_indices().to_vec(), found.clone());
        Ok(found)
    }

    fn try_shed(&mut self, c: &SimplicialComplex, v: u32) -> Result<Option<SheddingTree>> {
        let Some(del) = pure_deletion(c, v) else {
            return Ok(None);
        };
        let Some(link_tree) = self.search(&pure_link(c, v))? else {
            return Ok(None);
        };
        let Some(del_tree) = self.search(&del)? else {
            return Ok(None);
        };
        Ok(Some(SheddingTree::Node {
            vertex: c.label(v).to_string(),
            link: link_tree,
            del: del_tree,
        }))
    }

    /// Vertices whose link and deletion are pure (deletion of unchanged
    /// dimension) and vertex-decomposable.
    pub fn shedding_vertices(&mut self, c: &SimplicialComplex) -> Result<Vec<String>> {
        if !c.is_pure() {
            return invalid("shedding vertices are defined for pure complexes only");
        }
        let mut out = Vec::new();
        for v in c.vertex_indices() {
            if self.try_shed(c, v)?.is_some() {
                out.push(c.label(v).to_string());
            }
        }
        Ok(out)
    }
}

/// See [`Decomposer::decompose`].
pub fn is_vertex_decomposable(c: &SimplicialComplex) -> Result<Option<SheddingTree>> {
    Decomposer::new().decompose(c)
}

/// See [`Decomposer::shedding_vertices`].
pub fn shedding_vertices(c: &SimplicialComplex) -> Result<Vec<String>> {
    Decomposer::new().shedding_vertices(c)
}

/// Replays a certificate: recomputes every link and deletion and checks the
/// purity conditions and the simplex leaves.
pub fn verify_certificate(c: &SimplicialComplex, tree: &SheddingTree) -> bool {
    shelling_faces(c, tree).is_ok()
}

fn shelling_faces(c: &SimplicialComplex, tree: &SheddingTree) -> Result<Vec<Face>> {
    match tree {
        SheddingTree::Leaf => {
            if c.is_simplex() {
                Ok(c.facet_indices().to_vec())
            } else {
                invalid("certificate leaf at a complex that is not a simplex")
            }
        }
        SheddingTree::Node { vertex, link, del } => {
            if !c.is_pure() {
                return invalid("certificate node at an impure complex");
            }
            let Some(v) = c.index_of(vertex).filter(|v| c.vertex_indices().contains(v)) else {
                return invalid(format!("certificate names {vertex:?}, which is not a vertex"));
            };
            let Some(deleted) = pure_deletion(c, v) else {
                return invalid(format!("deletion of {vertex:?} is not pure of full dimension"));
            };
            let mut order = shelling_faces(&deleted, del)?;
            for mut g in shelling_faces(&pure_link(c, v), link)? {
                let pos = g.partition_point(|&x| x < v);
                g.insert(pos, v);
                order.push(g);
            }
            Ok(order)
        }
    }
}

/// Shelling order read off a certificate: the deletion's shelling followed by
/// the cone over the link's shelling.
pub fn shelling_from_tree(c: &SimplicialComplex, tree: &SheddingTree) -> Result<Vec<Vec<String>>> {
    let faces = shelling_faces(c, tree)?;
    Ok(faces
        .iter()
        .map(|f| f.iter().map(|&v| c.label(v).to_string()).collect())
        .collect())
}

/// True when each facet after the first meets the union of the earlier ones
/// in a nonempty union of its codimension-one faces.
pub fn is_shelling<S: AsRef<str>>(c: &SimplicialComplex, order: &[Vec<S>]) -> Result<bool> {
    let faces: Vec<Face> = order
        .iter()
        .map(|f| {
            let labels: Vec<&str> = f.iter().map(AsRef::as_ref).collect();
            c.face_from_labels(&labels)
                .filter(|face| face.len() == labels.len())
                .ok_or_else(|| crate::Error::Invalid(format!("{labels:?} is not a facet")))
        })
        .collect::<Result<_>>()?;
    let mut sorted = faces.clone();
    sorted.sort_unstable();
    if sorted != c.facet_indices() {
        return invalid("shelling order is not a permutation of the facets");
    }
    Ok(is_shelling_order(&faces))
}

pub(crate) fn is_shelling_order(faces: &[Face]) -> bool {
    let meet = |a: &Face, b: &Face| -> Face { a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect() };
    for j in 1..faces.len() {
        let fj = &faces[j];
        let pieces: Vec<Face> = faces[..j].iter().map(|fi| meet(fi, fj)).collect();
        let ridges: Vec<&Face> = pieces.iter().filter(|p| p.len() + 1 == fj.len()).collect();
        if ridges.is_empty() {
            return false;
        }
        let all_in_ridges = pieces
            .iter()
            .all(|p| ridges.iter().any(|r| p.iter().all(|x| r.binary_search(x).is_ok())));
        if !all_in_ridges {
            return false;
        }
    }
    true
}

/// The h-vector read off a shelling: `h_i` counts facets whose restriction
/// (vertices `v` with `F \ v` inside an earlier facet) has `i` elements.
pub fn h_vector_from_shelling(faces: &[Vec<String>]) -> Vec<i64> {
    let d = faces.first().map_or(0, Vec::len);
    let mut h = vec![0i64; d + 1];
    for (j, f) in faces.iter().enumerate() {
        let restriction = f
            .iter()
            .filter(|v| {
                faces[..j]
                    .iter()
                    .any(|g| f.iter().filter(|x| x != v).all(|x| g.contains(x)))
            })
            .count();
        h[restriction] += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::bs_order_complex;
    use crate::sequence::BSBounds;

    fn sc(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied()))
    }

    fn bs(lo: &str, hi: &str) -> SimplicialComplex {
        bs_order_complex(&BSBounds::parse(lo, hi).unwrap()).unwrap()
    }

    #[test]
    fn simplex_is_leaf() {
        assert_eq!(is_vertex_decomposable(&sc(&[&["a", "b", "c"]])).unwrap(), Some(SheddingTree::Leaf));
        assert_eq!(is_vertex_decomposable(&SimplicialComplex::void()).unwrap(), Some(SheddingTree::Leaf));
        assert_eq!(is_vertex_decomposable(&SimplicialComplex::empty_face()).unwrap(), Some(SheddingTree::Leaf));
    }

    #[test]
    fn disjoint_edges_are_not_decomposable() {
        let c = sc(&[&["a", "b"], &["c", "d"]]);
        assert_eq!(is_vertex_decomposable(&c).unwrap(), None);
        assert!(shedding_vertices(&c).unwrap().is_empty());
    }

    #[test]
    fn impure_input_is_rejected() {
        assert!(is_vertex_decomposable(&sc(&[&["a", "b"], &["c"]])).is_err());
        assert!(shedding_vertices(&sc(&[&["a", "b"], &["c"]])).is_err());
    }

    #[test]
    fn diamond_with_tail_certificate() {
        let c = bs("1,3", "3,4");
        let tree = is_vertex_decomposable(&c).unwrap().unwrap();
        let SheddingTree::Node { vertex, link, del } = &tree else {
            panic!("expected a node");
        };
        assert_eq!(vertex, "1,4");
        assert_eq!(**link, SheddingTree::Leaf);
        assert_eq!(**del, SheddingTree::Leaf);
        assert_eq!(c.link(&["1,4"]).unwrap().facets(), [["1,3", "2,4", "3,4"]]);
        assert_eq!(c.deletion(&["1,4"]).unwrap().facets(), [["1,3", "2,3", "2,4", "3,4"]]);
        assert!(verify_certificate(&c, &tree));

        let order = shelling_from_tree(&c, &tree).unwrap();
        assert_eq!(order, [["1,3", "2,3", "2,4", "3,4"], ["1,3", "1,4", "2,4", "3,4"]]);
        assert!(is_shelling(&c, &order).unwrap());
    }

    #[test]
    fn shedding_vertex_examples() {
        assert_eq!(shedding_vertices(&bs("1,3", "3,4")).unwrap(), ["1,4", "2,3"]);
        assert_eq!(shedding_vertices(&sc(&[&["a", "b"]])).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn shelling_checks() {
        let c = bs("1,3", "3,4");
        let forward = [
            vec!["1,3", "1,4", "2,4", "3,4"],
            vec!["1,3", "2,3", "2,4", "3,4"],
        ];
        assert!(is_shelling(&c, &forward).unwrap());
        assert!(is_shelling(&sc(&[&["a", "b"]]), &[vec!["a", "b"]]).unwrap());
        let edges = sc(&[&["a", "b"], &["c", "d"]]);
        assert!(!is_shelling(&edges, &[vec!["a", "b"], vec!["c", "d"]]).unwrap());
        assert!(!is_shelling(&edges, &[vec!["c", "d"], vec!["a", "b"]]).unwrap());
        assert!(is_shelling(&edges, &[vec!["a", "b"]]).is_err());
        assert!(is_shelling(&edges, &[vec!["a", "b"], vec!["a", "b"]]).is_err());
        assert!(is_shelling(&edges, &[vec!["a", "b"], vec!["c", "x"]]).is_err());
    }

    #[test]
    fn two_step_poset_shelling() {
        let c = bs("0,1", "2,3");
        let tree = is_vertex_decomposable(&c).unwrap().unwrap();
        let order = shelling_from_tree(&c, &tree).unwrap();
        assert_eq!(order.len(), 2);
        assert!(is_shelling(&c, &order).unwrap());
    }

    #[test]
    fn invalid_certificates_are_rejected() {
        let c = bs("1,3", "3,4");
        assert!(!verify_certificate(&c, &SheddingTree::Leaf));
        let bad = SheddingTree::Node {
            vertex: "1,3".into(),
            link: Arc::new(SheddingTree::Leaf),
            del: Arc::new(SheddingTree::Leaf),
        };
        assert!(!verify_certificate(&c, &bad));
        assert!(shelling_from_tree(&c, &bad).is_err());
        let missing = SheddingTree::Node {
            vertex: "7,7".into(),
            link: Arc::new(SheddingTree::Leaf),
            del: Arc::new(SheddingTree::Leaf),
        };
        assert!(!verify_certificate(&c, &missing));
    }

    #[test]
    fn tree_json_shape() {
        let c = bs("1,3", "3,4");
        let tree = is_vertex_decomposable(&c).unwrap().unwrap();
        let json = serde_json::to_string(&tree).unwrap();
        assert_eq!(json, r#"{"vertex":"1,4","link":{"leaf":true},"del":{"leaf":true}}"#);
        let back: SheddingTree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tree);
        assert!(serde_json::from_str::<SheddingTree>(r#"{"vertex":"a"}"#).is_err());
    }

    #[test]
    fn shelling_h_vector_matches_face_counts() {
        let c = bs("0,1", "2,3");
        let tree = is_vertex_decomposable(&c).unwrap().unwrap();
        let order = shelling_from_tree(&c, &tree).unwrap();
        assert_eq!(h_vector_from_shelling(&order), c.f_vector().unwrap().h.unwrap());
    }
}
