//! Simplicial complexes on an ordered label list, stored as bitmask faces.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::colouring::Colouring;
use crate::error::{Error, Result};

/// A face as a bitmask over vertex indices.
pub type Face = u64;

/// Maximum number of vertices a [`Face`] can address.
pub const MAX_VERTICES: usize = 64;

/// Canonical face order: cardinality first, then lexicographic on sorted index lists.
pub fn face_cmp(a: Face, b: Face) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal => {
            let d = a ^ b;
            if d == 0 {
                Ordering::Equal
            } else if a & (d & d.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        o => o,
    }
}

pub fn sort_faces(faces: &mut [Face]) {
    faces.sort_by(|a, b| face_cmp(*a, *b));
}

/// Iterates the indices of set bits in increasing order.
pub fn bits(mut f: Face) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if f == 0 {
            None
        } else {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            Some(i)
        }
    })
}

/// All subsets of `f`, including `0` and `f`.
pub fn subsets(f: Face) -> impl Iterator<Item = Face> {
    let mut s = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        if s == f {
            done = true;
        } else {
            s = (s.wrapping_sub(f)) & f;
        }
        Some(cur)
    })
}

fn full_mask(n: usize) -> Face {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Face counts by dimension: `entries[i + 1] = f_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    pub entries: Vec<usize>,
}

impl FVector {
    /// `f_i` for `i >= -1`, zero beyond the dimension.
    pub fn f(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.entries.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `dim Δ`, i.e. the largest `i` with `f_i > 0`.
    pub fn dim(&self) -> isize {
        self.entries.len() as isize - 2
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// Inclusion-maximal faces in canonical order; empty for the void complex.
    facets: Vec<Face>,
    faces: OnceLock<Vec<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    // Larger faces first so each candidate is only tested against kept ones.
    faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|g| f & !g == 0) {
            kept.push(f);
        }
    }
    sort_faces(&mut kept);
    kept
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count",
            actual: labels.len(),
            limit: MAX_VERTICES,
        });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl SimplicialComplex {
    /// Builds a complex from labelled facets. Every label must occur in some facet.
    pub fn from_facets<L, F, T, S>(labels: L, facets: F) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
        F: IntoIterator<Item = T>,
        T: IntoIterator<Item = S>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        check_labels(&labels)?;
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut masks = Vec::new();
        for facet in facets {
            let mut m: Face = 0;
            for tok in facet {
                let tok = tok.as_ref();
                let i = *index
                    .get(tok)
                    .ok_or_else(|| Error::UnknownVertex(tok.to_string()))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        let used = masks.iter().fold(0, |a, m| a | m);
        if masks.is_empty() && !labels.is_empty() {
            return Err(Error::UnusedVertex(labels[0].clone()));
        }
        for (i, l) in labels.iter().enumerate() {
            if used & (1 << i) == 0 {
                return Err(Error::UnusedVertex(l.clone()));
            }
        }
        Ok(Self::from_masks(labels, masks))
    }

    /// Builds a complex on an explicit ground set; labels need not all be used.
    /// An empty facet list gives the void complex.
    pub fn from_masks<I: IntoIterator<Item = Face>>(labels: Vec<String>, faces: I) -> Self {
        let facets = maximal(faces.into_iter().collect());
        SimplicialComplex {
            labels,
            facets,
            faces: OnceLock::new(),
        }
    }

    pub fn void(labels: Vec<String>) -> Self {
        Self::from_masks(labels, [])
    }

    /// The complex `⟨∅⟩` with no vertices.
    pub fn empty_face() -> Self {
        Self::from_masks(Vec::new(), [0])
    }

    pub fn simplex(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self::from_masks(labels, [full_mask(n)])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f & !g == 0)
    }

    /// Union of all faces.
    pub fn vertex_mask(&self) -> Face {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    /// All faces in canonical order.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| {
            let mut set = HashSet::new();
            for &f in &self.facets {
                for s in subsets(f) {
                    set.insert(s);
                }
            }
            let mut v: Vec<Face> = set.into_iter().collect();
            sort_faces(&mut v);
            v
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(-2)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut entries = vec![0usize; (self.dim() + 2) as usize];
        for f in self.faces() {
            entries[f.count_ones() as usize] += 1;
        }
        Ok(FVector { entries })
    }

    /// Faces of the link of `sigma`, in the original vertex indices.
    pub fn link_faces(&self, sigma: Face) -> Result<Vec<Face>> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace(self.format_face(sigma)));
        }
        let mut out: Vec<Face> = self
            .faces()
            .iter()
            .filter(|&&f| f & sigma == sigma)
            .map(|f| f & !sigma)
            .collect();
        sort_faces(&mut out);
        Ok(out)
    }

    /// The link of `sigma`, relabelled onto the vertices it uses.
    /// The link of `∅` is the complex itself.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if sigma == 0 {
            if self.is_void() {
                return Err(Error::NotAFace(self.format_face(0)));
            }
            return Ok(self.clone());
        }
        let faces = self.link_faces(sigma)?;
        let used = faces.iter().fold(0, |a, f| a | f);
        Ok(self.restrict_to(used, faces))
    }

    /// Faces not containing `v`, on the remaining vertices.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        let faces: Vec<Face> = self
            .faces()
            .iter()
            .copied()
            .filter(|f| f & (1 << v) == 0)
            .collect();
        let keep = full_mask(self.n()) & !(1 << v);
        self.restrict_to(keep, faces)
    }

    fn restrict_to(&self, keep: Face, faces: Vec<Face>) -> SimplicialComplex {
        let kept: Vec<usize> = bits(keep).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let remap = |f: Face| -> Face {
            kept.iter()
                .enumerate()
                .filter(|(_, &i)| f & (1 << i) != 0)
                .fold(0, |a, (j, _)| a | (1 << j))
        };
        SimplicialComplex::from_masks(labels, faces.into_iter().map(remap))
    }

    /// Inclusion-minimal non-faces over the ground set, canonically sorted.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![0];
        }
        // A minimal non-face minus any vertex is a face.
        let mut found = HashSet::new();
        for &t in self.faces() {
            for v in 0..self.n() {
                let s = t | (1 << v);
                if s == t || self.contains(s) {
                    continue;
                }
                if bits(s).all(|u| self.contains(s & !(1 << u))) {
                    found.insert(s);
                }
            }
        }
        let mut v: Vec<Face> = found.into_iter().collect();
        sort_faces(&mut v);
        v
    }

    /// The Alexander dual over the ground set.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = full_mask(self.n());
        let facets: Vec<Face> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| all & !s)
            .collect();
        SimplicialComplex::from_masks(self.labels.clone(), facets)
    }

    pub fn underlying_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::edgeless(self.labels.clone());
        for &f in self.faces() {
            if f.count_ones() == 2 {
                let mut it = bits(f);
                let (u, v) = (it.next().unwrap(), it.next().unwrap());
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn is_flag(&self) -> bool {
        clique_complex(&self.underlying_graph()) == *self
    }

    /// `abc` when every label is one character, otherwise `{a,b,c}`; `∅` for the empty face.
    pub fn format_face(&self, f: Face) -> String {
        format_face_with(&self.labels, f)
    }
}

pub fn format_face_with(labels: &[String], f: Face) -> String {
    if f == 0 {
        return "∅".to_string();
    }
    let parts: Vec<&str> = bits(f)
        .map(|i| labels.get(i).map(|s| s.as_str()).unwrap_or("?"))
        .collect();
    if labels.iter().all(|l| l.chars().count() == 1) {
        parts.concat()
    } else {
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let parts: Vec<String> = self.facets.iter().map(|&x| self.format_face(x)).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Face>,
}

impl SimpleGraph {
    pub fn edgeless(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![0; n],
        }
    }

    pub fn complete(labels: Vec<String>) -> Self {
        let n = labels.len();
        let all = full_mask(n);
        SimpleGraph {
            labels,
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        }
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbourhood(&self, v: usize) -> Face {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in bits(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = full_mask(self.n());
        SimpleGraph {
            labels: self.labels.clone(),
            adj: (0..self.n()).map(|v| all & !self.adj[v] & !(1 << v)).collect(),
        }
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting).
    pub fn maximal_cliques(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, full_mask(self.n()), 0, &mut out);
        sort_faces(&mut out);
        out
    }

    fn bron_kerbosch(&self, r: Face, p: Face, x: Face, out: &mut Vec<Face>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & self.adj[u]).count_ones())
            .unwrap();
        let (mut p, mut x) = (p, x);
        for v in bits(p & !self.adj[pivot]) {
            let nv = self.adj[v];
            self.bron_kerbosch(r | (1 << v), p & nv, x & nv, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
}

pub fn clique_complex(g: &SimpleGraph) -> SimplicialComplex {
    SimplicialComplex::from_masks(g.labels.clone(), g.maximal_cliques())
}

pub fn independence_complex(g: &SimpleGraph) -> SimplicialComplex {
    clique_complex(&g.complement())
}

/// Faces `σ ∪ τ` with `τ ⊆ {1',…,k'}` and `j' ∈ τ` only when `σ` misses class `j`.
/// The primed vertices are appended after the original labels.
pub fn bvt_complex(delta: &SimplicialComplex, c: &Colouring) -> Result<SimplicialComplex> {
    c.check_proper(delta)?;
    let n = delta.n();
    let k = c.k();
    if n + k > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count",
            actual: n + k,
            limit: MAX_VERTICES,
        });
    }
    let mut labels = delta.labels().to_vec();
    labels.extend((1..=k).map(|j| format!("{j}'")));
    let class_masks: Vec<Face> = (0..k).map(|j| c.class_mask(j)).collect();
    let mut facets = BTreeSet::new();
    for &s in delta.faces() {
        let tau = (0..k)
            .filter(|&j| s & class_masks[j] == 0)
            .fold(0, |a, j| a | (1 << (n + j)));
        facets.insert(s | tau);
    }
    Ok(SimplicialComplex::from_masks(labels, facets))
}
