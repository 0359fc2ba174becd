//! The index-vector poset `P(Δ,𝒞)` and the minimal non-face poset.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::simplicial::{bits, Face, SimplicialComplex};
use crate::ufi::{IndexVector, UfiContext};

/// A finite set of index vectors under the componentwise order.
#[derive(Debug, Clone)]
pub struct IndexVectorPoset {
    k: usize,
    elements: Vec<IndexVector>,
    /// Face of each element, when the poset comes from a complex.
    faces: Vec<Option<Face>>,
    index: HashMap<IndexVector, usize>,
    down: Vec<Vec<u64>>,
}

/// `lower < upper` with nothing in between; `gap = |upper| - |lower|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub gap: u32,
}

/// Number of boolean intervals of a given rank; `supported` is false when
/// the poset is not an order ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BooleanCount {
    pub count: usize,
    pub supported: bool,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn set_bit(v: &mut [u64], i: usize) {
    v[i / 64] |= 1 << (i % 64);
}

fn get_bit(v: &[u64], i: usize) -> bool {
    v[i / 64] & (1 << (i % 64)) != 0
}

fn iter_bits(v: &[u64]) -> impl Iterator<Item = usize> + '_ {
    v.iter().enumerate().flat_map(|(w, &x)| {
        crate::simplicial::bits(x).map(move |b| w * 64 + b)
    })
}

impl IndexVectorPoset {
    /// Elements are sorted by total, then lexicographically.
    pub fn from_vectors(k: usize, vectors: Vec<(IndexVector, Option<Face>)>) -> Self {
        let mut vectors = vectors;
        vectors.sort_by(|a, b| a.0.total().cmp(&b.0.total()).then_with(|| a.0.cmp(&b.0)));
        vectors.dedup_by(|a, b| a.0 == b.0);
        let (elements, faces): (Vec<IndexVector>, Vec<Option<Face>>) = vectors.into_iter().unzip();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let n = elements.len();
        let down = (0..n)
            .map(|v| {
                let mut row = vec![0u64; words(n)];
                for u in 0..n {
                    if elements[u].leq(&elements[v]) {
                        set_bit(&mut row, u);
                    }
                }
                row
            })
            .collect();
        IndexVectorPoset {
            k,
            elements,
            faces,
            index,
            down,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[IndexVector] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IndexVector {
        &self.elements[i]
    }

    pub fn face(&self, i: usize) -> Option<Face> {
        self.faces[i]
    }

    pub fn position(&self, e: &IndexVector) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &IndexVector) -> bool {
        self.index.contains_key(e)
    }

    pub fn le(&self, u: usize, v: usize) -> bool {
        get_bit(&self.down[v], u)
    }

    /// Every coordinate decrement of every element stays in the poset.
    pub fn is_order_ideal(&self) -> bool {
        self.elements.iter().all(|e| {
            (0..self.k).all(|i| {
                e.0[i] == 0 || {
                    let mut d = e.clone();
                    d.0[i] -= 1;
                    self.contains(&d)
                }
            })
        })
    }

    /// The covering relations, sorted by `(lower, upper)`.
    pub fn covering_relations(&self) -> Vec<Cover> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            let below: Vec<usize> = iter_bits(&self.down[v]).filter(|&u| u != v).collect();
            for &u in &below {
                let covered = !below.iter().any(|&w| w != u && self.le(u, w));
                if covered {
                    out.push(Cover {
                        lower: u,
                        upper: v,
                        gap: self.elements[v].total() - self.elements[u].total(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    fn lower_covers(&self, v: usize) -> Vec<usize> {
        let below: Vec<usize> = iter_bits(&self.down[v]).filter(|&u| u != v).collect();
        below
            .iter()
            .copied()
            .filter(|&u| !below.iter().any(|&w| w != u && self.le(u, w)))
            .collect()
    }

    /// The greatest common lower bound of `u` and `v`, if it exists.
    pub fn meet(&self, u: usize, v: usize) -> Option<usize> {
        let common: Vec<u64> = self.down[u]
            .iter()
            .zip(&self.down[v])
            .map(|(a, b)| a & b)
            .collect();
        // The last element in sorted order is maximal among the common bounds.
        let w = iter_bits(&common).last()?;
        if self.down[w] == common {
            Some(w)
        } else {
            None
        }
    }

    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.len()).all(|u| (u + 1..self.len()).all(|v| self.meet(u, v).is_some()))
    }

    fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        iter_bits(&self.down[v]).filter(|&w| self.le(u, w)).collect()
    }

    /// `[u, v]` is isomorphic to a boolean lattice of rank `t`.
    fn is_boolean_interval(&self, u: usize, v: usize, t: usize) -> bool {
        let elems = self.interval(u, v);
        if t >= 32 || elems.len() != 1 << t {
            return false;
        }
        let atoms: Vec<usize> = elems
            .iter()
            .copied()
            .filter(|&w| w != u && !elems.iter().any(|&z| z != u && z != w && self.le(z, w)))
            .collect();
        if atoms.len() != t {
            return false;
        }
        let code = |w: usize| -> u32 {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| self.le(a, w))
                .fold(0, |acc, (i, _)| acc | (1 << i))
        };
        let codes: Vec<u32> = elems.iter().map(|&w| code(w)).collect();
        let distinct: HashSet<u32> = codes.iter().copied().collect();
        if distinct.len() != elems.len() {
            return false;
        }
        for (a, &wa) in elems.iter().enumerate() {
            for (b, &wb) in elems.iter().enumerate() {
                let sub = codes[a] & !codes[b] == 0;
                if self.le(wa, wb) != sub {
                    return false;
                }
            }
        }
        true
    }

    /// Every interval `[u, v]` whose bottom is the meet of the elements of
    /// `[u, v]` covered by `v` is boolean.
    pub fn is_meet_distributive(&self) -> bool {
        if !self.is_meet_semilattice() {
            return false;
        }
        for v in 0..self.len() {
            let covers = self.lower_covers(v);
            for u in iter_bits(&self.down[v]).filter(|&u| u != v) {
                let s: Vec<usize> = covers.iter().copied().filter(|&c| self.le(u, c)).collect();
                let mut m = s[0];
                for &c in &s[1..] {
                    m = self.meet(m, c).expect("meet-semilattice");
                }
                if m == u && !self.is_boolean_interval(u, v, s.len()) {
                    return false;
                }
            }
        }
        true
    }

    /// Intervals `[u, u + 1_J]` with `|J| = i` all of whose points lie in the poset.
    pub fn boolean_interval_count(&self, i: usize) -> BooleanCount {
        let supported = self.is_order_ideal();
        if i > self.k {
            return BooleanCount { count: 0, supported };
        }
        let mut count = 0;
        for u in &self.elements {
            for j in 0u64..(1 << self.k) {
                if j.count_ones() as usize != i {
                    continue;
                }
                let all_in = crate::simplicial::subsets(j).all(|s| {
                    let mut w = u.clone();
                    for b in crate::simplicial::bits(s) {
                        w.0[b] += 1;
                    }
                    self.contains(&w)
                });
                if all_in {
                    count += 1;
                }
            }
        }
        BooleanCount { count, supported }
    }

    /// Hasse diagram in DOT, with vertices named by their index vectors and
    /// labelled by `names` when given.
    pub fn to_dot(&self, names: Option<&dyn Fn(usize) -> String>) -> String {
        let mut s = String::from("digraph P {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            let label = names.map(|f| f(i)).unwrap_or_else(|| e.to_string());
            s.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
        }
        for c in self.covering_relations() {
            s.push_str(&format!("  n{} -> n{};\n", c.lower, c.upper));
        }
        s.push_str("}\n");
        s
    }
}

/// Serialized poset; `covers` is recomputed from the elements on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub k: usize,
    pub vertices: Vec<String>,
    pub elements: Vec<PosetElementJson>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElementJson {
    pub vector: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<String>>,
}

impl IndexVectorPoset {
    /// `vertices` names the bits of the stored faces.
    pub fn to_json(&self, vertices: &[String]) -> PosetJson {
        PosetJson {
            k: self.k,
            vertices: vertices.to_vec(),
            elements: self
                .elements
                .iter()
                .zip(&self.faces)
                .map(|(e, f)| PosetElementJson {
                    vector: e.0.clone(),
                    face: f.map(|f| bits(f).map(|v| vertices[v].clone()).collect()),
                })
                .collect(),
            covers: self
                .covering_relations()
                .iter()
                .map(|c| (c.lower, c.upper))
                .collect(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Self> {
        let mut vectors = Vec::new();
        for e in &j.elements {
            if e.vector.len() != j.k {
                return Err(Error::Parse(format!("index vector of length {} in a poset with k = {}", e.vector.len(), j.k)));
            }
            let face = match &e.face {
                None => None,
                Some(labels) => Some(labels.iter().try_fold(0, |m, l| {
                    j.vertices
                        .iter()
                        .position(|v| v == l)
                        .map(|i| m | (1 << i))
                        .ok_or_else(|| Error::UnknownVertex(l.clone()))
                })?),
            };
            vectors.push((IndexVector(e.vector.clone()), face));
        }
        Ok(IndexVectorPoset::from_vectors(j.k, vectors))
    }
}

pub fn index_vector_poset(delta: &SimplicialComplex, c: &Colouring) -> Result<IndexVectorPoset> {
    let ctx = UfiContext::new(delta, c)?;
    let vectors = delta
        .faces()
        .iter()
        .map(|&f| (ctx.index_vector(f), Some(f)))
        .collect();
    Ok(IndexVectorPoset::from_vectors(c.k(), vectors))
}

/// Index vectors of the minimal non-faces that do not lie inside one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonfacePoset {
    pub k: usize,
    pub elements: Vec<(Face, IndexVector)>,
}

impl NonfacePoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Componentwise-minimal index vectors, sorted.
    pub fn minimal_elements(&self) -> Vec<IndexVector> {
        let vs: Vec<&IndexVector> = self.elements.iter().map(|(_, e)| e).collect();
        let mut out: Vec<IndexVector> = vs
            .iter()
            .filter(|e| !vs.iter().any(|f| f != *e && f.leq(e)))
            .map(|e| (*e).clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn minimal_nonface_poset(delta: &SimplicialComplex, c: &Colouring) -> Result<NonfacePoset> {
    let ctx = UfiContext::new(delta, c)?;
    let masks: Vec<Face> = (0..c.k()).map(|i| c.class_mask(i)).collect();
    let elements = delta
        .minimal_nonfaces()
        .into_iter()
        .filter(|&s| !masks.iter().any(|&m| s & !m == 0))
        .map(|s| (s, ctx.index_vector(s)))
        .collect();
    Ok(NonfacePoset { k: c.k(), elements })
}

/// `ε_σ · Π y_i^{d_i} - ε_τ · Π x_i^{d_i}` for a cover `e(σ) < e(τ)`, `d = e(τ) - e(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syzygy {
    pub lower: Face,
    pub upper: Face,
    pub lower_coefficient: Monomial,
    pub upper_coefficient: Monomial,
    /// Total degree of the syzygy, `n + gap`.
    pub degree: u32,
}

pub fn first_syzygies_covering(delta: &SimplicialComplex, c: &Colouring) -> Result<Vec<Syzygy>> {
    let p = index_vector_poset(delta, c)?;
    let k = c.k();
    let n = delta.n() as u32;
    Ok(p.covering_relations()
        .into_iter()
        .map(|cv| {
            let lo = p.element(cv.lower);
            let hi = p.element(cv.upper);
            let mut ycoef = vec![0; 2 * k];
            let mut xcoef = vec![0; 2 * k];
            for i in 0..k {
                let d = hi.0[i] - lo.0[i];
                ycoef[k + i] = d;
                xcoef[i] = d;
            }
            Syzygy {
                lower: p.face(cv.lower).unwrap(),
                upper: p.face(cv.upper).unwrap(),
                lower_coefficient: Monomial(ycoef),
                upper_coefficient: Monomial(xcoef),
                degree: n + cv.gap,
            }
        })
        .collect())
}

/// Lower bounds `β_{1,n+i} >= #(gap-i covers)`, plus `Σ_j j·f_{j-1}(Δ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstBettiBound {
    pub by_degree: BTreeMap<u32, usize>,
    pub coarse: usize,
}

impl FirstBettiBound {
    pub fn total(&self) -> usize {
        self.by_degree.values().sum()
    }
}

pub fn first_betti_lower_bound(delta: &SimplicialComplex, c: &Colouring) -> Result<FirstBettiBound> {
    let mut by_degree = BTreeMap::new();
    for s in first_syzygies_covering(delta, c)? {
        *by_degree.entry(s.degree).or_insert(0) += 1;
    }
    let f = delta.f_vector()?;
    let coarse = f.entries.iter().enumerate().map(|(j, &x)| j * x).sum();
    Ok(FirstBettiBound { by_degree, coarse })
}
