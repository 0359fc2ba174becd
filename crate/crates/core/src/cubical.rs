//! The cube complex `C(Δ,𝒞)` on the boolean intervals of `P(Δ,𝒞)`, its
//! collapse schedule, and the cellular free complex it supports.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colouring::{check_nesting_ordered, Colouring};
use crate::error::Result;
use crate::limits::{self, Limits};
use crate::linalg;
use crate::monomial::{lcm_lattice, Monomial, MonomialIdeal, MultigradedBettiTable};
use crate::poset::{index_vector_poset, IndexVectorPoset};
use crate::simplicial::{bits, subsets, SimplicialComplex};
use crate::ufi::{IndexVector, UfiContext};

/// The interval `[lower, lower + Σ_{j ∈ dirs} ε(j)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub lower: IndexVector,
    pub dirs: u64,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.dirs.count_ones() as usize
    }

    pub fn upper(&self) -> IndexVector {
        self.corner(self.dirs)
    }

    /// `lower + 1_s` for `s ⊆ dirs`.
    pub fn corner(&self, s: u64) -> IndexVector {
        let mut e = self.lower.clone();
        for j in bits(s) {
            e.0[j] += 1;
        }
        e
    }

    pub fn vertices(&self) -> impl Iterator<Item = IndexVector> + '_ {
        subsets(self.dirs).map(|s| self.corner(s))
    }

    /// Codimension-one faces with their incidence signs.
    pub fn facets(&self) -> Vec<(Cube, i64)> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for (pos, j) in bits(self.dirs).enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let rest = self.dirs & !(1 << j);
            out.push((
                Cube {
                    lower: self.lower.clone(),
                    dirs: rest,
                },
                sign,
            ));
            out.push((
                Cube {
                    lower: self.corner(1 << j),
                    dirs: rest,
                },
                -sign,
            ));
        }
        out
    }

    /// `self ⊆ other` as intervals.
    pub fn is_face_of(&self, other: &Cube) -> bool {
        other.lower.leq(&self.lower) && self.upper().leq(&other.upper())
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lower, self.upper())
    }
}

#[derive(Debug, Clone)]
pub struct CubicalComplex {
    poset: IndexVectorPoset,
    /// Nonempty cubes sorted by dimension, then lower corner, then directions.
    cubes: Vec<Cube>,
    index: HashMap<Cube, usize>,
}

impl CubicalComplex {
    /// Cubes of an order ideal of index vectors.
    pub fn from_poset(poset: IndexVectorPoset) -> Self {
        let k = poset.k();
        let mut cubes = Vec::new();
        for e in poset.elements() {
            for dirs in 0u64..(1 << k) {
                let c = Cube {
                    lower: e.clone(),
                    dirs,
                };
                if c.vertices().all(|v| poset.contains(&v)) {
                    cubes.push(c);
                }
            }
        }
        cubes.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let index = cubes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        CubicalComplex {
            poset,
            cubes,
            index,
        }
    }

    pub fn poset(&self) -> &IndexVectorPoset {
        &self.poset
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn position(&self, c: &Cube) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn contains(&self, c: &Cube) -> bool {
        self.index.contains_key(c)
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Face counts by dimension, starting with vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for c in &self.cubes {
            if f.len() <= c.dim() {
                f.resize(c.dim() + 1, 0);
            }
            f[c.dim()] += 1;
        }
        f
    }

    pub fn dim(&self) -> isize {
        self.cubes.last().map(|c| c.dim() as isize).unwrap_or(-1)
    }

    /// Checks the cubical complex axioms; returns the first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        for e in self.poset.elements() {
            let v = Cube {
                lower: e.clone(),
                dirs: 0,
            };
            if !self.contains(&v) {
                return Err(format!("vertex {e} missing"));
            }
        }
        for c in &self.cubes {
            for lo in subsets(c.dirs) {
                let rest = c.dirs & !lo;
                for d in subsets(rest) {
                    let sub = Cube {
                        lower: c.corner(lo),
                        dirs: d,
                    };
                    if !self.contains(&sub) {
                        return Err(format!("subinterval {sub} of {c} missing"));
                    }
                }
            }
        }
        let k = self.poset.k();
        for (i, a) in self.cubes.iter().enumerate() {
            let (au, al) = (a.upper(), &a.lower);
            for b in &self.cubes[i + 1..] {
                let bu = b.upper();
                let lo: Vec<u32> = (0..k).map(|t| al.0[t].max(b.lower.0[t])).collect();
                let hi: Vec<u32> = (0..k).map(|t| au.0[t].min(bu.0[t])).collect();
                if lo.iter().zip(&hi).any(|(l, h)| l > h) {
                    continue;
                }
                let dirs = (0..k)
                    .filter(|&t| hi[t] > lo[t])
                    .fold(0u64, |acc, t| acc | (1 << t));
                let cap = Cube {
                    lower: IndexVector(lo),
                    dirs,
                };
                if !self.contains(&cap) {
                    return Err(format!("intersection of {a} and {b} is not a face"));
                }
            }
        }
        Ok(())
    }

    /// The 1-skeleton in DOT.
    pub fn to_dot(&self, names: Option<&dyn Fn(&IndexVector) -> String>) -> String {
        let mut s = String::from("graph C {\n");
        for c in self.cubes.iter().filter(|c| c.dim() == 0) {
            let label = names.map(|f| f(&c.lower)).unwrap_or_else(|| c.lower.to_string());
            s.push_str(&format!("  \"{}\" [label=\"{}\"];\n", c.lower, label));
        }
        for c in self.cubes.iter().filter(|c| c.dim() == 1) {
            s.push_str(&format!("  \"{}\" -- \"{}\";\n", c.lower, c.upper()));
        }
        s.push_str("}\n");
        s
    }
}

pub fn cubical_complex(delta: &SimplicialComplex, c: &Colouring) -> Result<CubicalComplex> {
    check_nesting_ordered(delta, c)?;
    let cc = CubicalComplex::from_poset(index_vector_poset(delta, c)?);
    debug_assert!(cc.validate().is_ok());
    Ok(cc)
}

/// An elementary collapse removing the free face `free` and its unique coface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    pub free: Cube,
    pub coface: Cube,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CollapseSequence {
    pub steps: Vec<Collapse>,
}

impl CollapseSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the collapses on `cc`, checking each is elementary and that a
    /// single vertex remains.
    pub fn validate(&self, cc: &CubicalComplex) -> std::result::Result<(), String> {
        let mut alive: HashSet<&Cube> = cc.cubes().iter().collect();
        for (n, step) in self.steps.iter().enumerate() {
            if !alive.contains(&step.free) || !alive.contains(&step.coface) {
                return Err(format!("step {n}: face already removed"));
            }
            let cofaces: Vec<&&Cube> = alive
                .iter()
                .filter(|g| **g != &step.free && step.free.is_face_of(g))
                .collect();
            if cofaces.len() != 1 || **cofaces[0] != step.coface {
                return Err(format!(
                    "step {n}: {} has {} proper cofaces",
                    step.free,
                    cofaces.len()
                ));
            }
            alive.remove(&step.free);
            alive.remove(&step.coface);
        }
        match alive.len() {
            1 if alive.iter().next().unwrap().dim() == 0 => Ok(()),
            m => Err(format!("{m} faces remain")),
        }
    }
}

/// Peels a maximal index vector `e` at a time: with `d` the last coordinate
/// where `e` is positive, collapses `[e - 1_B, e] ⊂ [e - 1_{B ∪ {d}}, e]`
/// for `B` avoiding `d`, largest `B` first. The result is validated.
pub fn collapse_sequence(cc: &CubicalComplex) -> Result<CollapseSequence> {
    let poset = cc.poset();
    if !poset.is_order_ideal() {
        return Err(crate::error::Error::Precondition(
            "the index vectors do not form an order ideal".into(),
        ));
    }
    let mut remaining: Vec<IndexVector> = poset.elements().to_vec();
    let mut steps = Vec::new();
    while remaining.len() > 1 {
        // Elements are kept sorted by total then lexicographically.
        let e = remaining.pop().unwrap();
        let supp: u64 = (0..e.k()).filter(|&i| e.0[i] > 0).fold(0, |a, i| a | (1 << i));
        let d = 63 - supp.leading_zeros() as usize;
        let rest = supp & !(1 << d);
        let mut bs: Vec<u64> = subsets(rest).collect();
        bs.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        for b in bs {
            let down = |s: u64| {
                let mut l = e.clone();
                for j in bits(s) {
                    l.0[j] -= 1;
                }
                Cube { lower: l, dirs: s }
            };
            steps.push(Collapse {
                free: down(b),
                coface: down(b | (1 << d)),
            });
        }
    }
    let seq = CollapseSequence { steps };
    seq.validate(cc)
        .map_err(|m| crate::error::Error::Precondition(format!("invalid collapse: {m}")))?;
    Ok(seq)
}

/// The cube complex with every cube labelled by the lcm of its vertex labels.
#[derive(Debug, Clone)]
pub struct LabeledCellComplex {
    pub complex: CubicalComplex,
    pub labels: Vec<Monomial>,
    pub vars: Vec<String>,
    pub n: usize,
}

impl LabeledCellComplex {
    /// Labels strictly increase along every facet incidence.
    pub fn is_minimal(&self) -> bool {
        self.complex.cubes().iter().enumerate().all(|(i, c)| {
            c.facets().iter().all(|(q, _)| {
                let j = self.complex.position(q).unwrap();
                self.labels[j] != self.labels[i] && self.labels[j].divides(&self.labels[i])
            })
        })
    }

    /// Every label has degree `n + dim`.
    pub fn degrees_match(&self) -> bool {
        self.complex
            .cubes()
            .iter()
            .zip(&self.labels)
            .all(|(c, l)| l.degree() as usize == self.n + c.dim())
    }

    pub fn label_of(&self, c: &Cube) -> Option<&Monomial> {
        self.complex.position(c).map(|i| &self.labels[i])
    }
}

pub fn labeled_complex(delta: &SimplicialComplex, c: &Colouring) -> Result<LabeledCellComplex> {
    let cc = cubical_complex(delta, c)?;
    let ctx = UfiContext::new(delta, c)?;
    let sizes = ctx.class_sizes();
    let labels = cc
        .cubes()
        .iter()
        .map(|cube| {
            cube.vertices()
                .map(|v| v.monomial(&sizes))
                .reduce(|a, b| a.lcm(&b))
                .unwrap()
        })
        .collect();
    Ok(LabeledCellComplex {
        complex: cc,
        labels,
        vars: ctx.vars().to_vec(),
        n: delta.n(),
    })
}

/// A basis element of the free complex: `None` is the empty cell.
pub type Cell = Option<usize>;

/// One entry `sign · coefficient` of a differential, from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub target: usize,
    pub sign: i64,
    pub coefficient: Monomial,
}

/// `terms[i + 1]` is the basis of `F_i` (cells of dimension `i`); `diff[i + 1]`
/// lists, per basis element of `F_i`, its image in `F_{i-1}`.
#[derive(Debug, Clone)]
pub struct CellularFreeComplex {
    pub vars: Vec<String>,
    pub terms: Vec<Vec<Cell>>,
    pub labels: Vec<Vec<Monomial>>,
    pub diff: Vec<Vec<Vec<Entry>>>,
}

pub fn cellular_free_complex(l: &LabeledCellComplex) -> CellularFreeComplex {
    let nv = l.vars.len();
    let cc = &l.complex;
    let top = cc.dim().max(-1);
    let mut terms: Vec<Vec<Cell>> = vec![vec![None]];
    let mut labels: Vec<Vec<Monomial>> = vec![vec![Monomial::one(nv)]];
    let mut pos_in_term: HashMap<usize, usize> = HashMap::new();
    for d in 0..=top {
        let mut basis = Vec::new();
        let mut labs = Vec::new();
        for (i, c) in cc.cubes().iter().enumerate() {
            if c.dim() as isize == d {
                pos_in_term.insert(i, basis.len());
                basis.push(Some(i));
                labs.push(l.labels[i].clone());
            }
        }
        terms.push(basis);
        labels.push(labs);
    }
    let mut diff: Vec<Vec<Vec<Entry>>> = vec![vec![Vec::new()]];
    for d in 0..=top {
        let t = (d + 1) as usize;
        let mut col = Vec::new();
        for (src, cell) in terms[t].iter().enumerate() {
            let cube = &cc.cubes()[cell.unwrap()];
            let lp = &labels[t][src];
            let entries = if d == 0 {
                vec![Entry {
                    target: 0,
                    sign: 1,
                    coefficient: lp.clone(),
                }]
            } else {
                cube.facets()
                    .into_iter()
                    .map(|(q, sign)| {
                        let qi = cc.position(&q).expect("facet present");
                        let target = pos_in_term[&qi];
                        Entry {
                            target,
                            sign,
                            coefficient: lp.div(&l.labels[qi]).expect("label divides"),
                        }
                    })
                    .collect()
            };
            col.push(entries);
        }
        diff.push(col);
    }
    CellularFreeComplex {
        vars: l.vars.clone(),
        terms,
        labels,
        diff,
    }
}

/// Summary of the checks made by [`verify_resolution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionReport {
    /// Size of the lcm lattice; every element is checked.
    pub multidegrees: usize,
    /// Distinct cell labels.
    pub cell_multidegrees: usize,
    pub non_acyclic: Vec<Monomial>,
    pub d_squared_zero: bool,
    /// `β_{i,a}` counted from cells of dimension `i` labelled `a`.
    pub cell_betti: MultigradedBettiTable,
    /// `β_{i,a} = dim H̃_{i-1}(X_{<a})`.
    pub homology_betti: MultigradedBettiTable,
}

impl ResolutionReport {
    pub fn is_resolution(&self) -> bool {
        self.d_squared_zero && self.non_acyclic.is_empty()
    }
}

impl CellularFreeComplex {
    /// Homological degrees present, as `(i, rank of F_i)` for `i >= -1`.
    pub fn ranks(&self) -> Vec<(isize, usize)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(t, b)| (t as isize - 1, b.len()))
            .collect()
    }

    /// `δ∘δ = 0`, by composing the monomial-coefficient matrices.
    pub fn d_squared_is_zero(&self) -> bool {
        for t in 2..self.diff.len() {
            for src in &self.diff[t] {
                let mut acc: HashMap<(usize, Monomial), i64> = HashMap::new();
                for e in src {
                    for f in &self.diff[t - 1][e.target] {
                        let coef = e.coefficient.mul(&f.coefficient);
                        *acc.entry((f.target, coef)).or_insert(0) += e.sign * f.sign;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Flips the sign of one entry; used as a negative control.
    pub fn flip_sign(&mut self, degree: isize, source: usize, entry: usize) {
        let e = &mut self.diff[(degree + 1) as usize][source][entry];
        e.sign = -e.sign;
    }

    /// Reduced homology ranks of the subcomplex of cells whose labels pass
    /// `keep`; the empty cell is always kept.
    fn restricted_homology(&self, keep: impl Fn(&Monomial) -> bool) -> Vec<usize> {
        let kept: Vec<Vec<Option<usize>>> = self
            .labels
            .iter()
            .enumerate()
            .map(|(t, labs)| {
                let mut next = 0;
                labs.iter()
                    .map(|l| {
                        if t == 0 || keep(l) {
                            next += 1;
                            Some(next - 1)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = kept.iter().map(|k| k.iter().flatten().count()).collect();
        let mut ranks = vec![0usize; self.terms.len() + 1];
        for t in 1..self.terms.len() {
            let rows: Vec<linalg::SparseRow> = self.diff[t]
                .iter()
                .enumerate()
                .filter(|(s, _)| kept[t][*s].is_some())
                .map(|(_, entries)| {
                    let mut row: Vec<(usize, i64)> = entries
                        .iter()
                        .filter_map(|e| kept[t - 1][e.target].map(|c| (c, e.sign)))
                        .collect();
                    row.sort_unstable();
                    row
                })
                .collect();
            ranks[t] = linalg::rank(&rows);
        }
        (0..self.terms.len())
            .map(|t| sizes[t] - ranks[t] - ranks[t + 1])
            .collect()
    }

    fn cell_betti(&self) -> MultigradedBettiTable {
        let mut b = MultigradedBettiTable::default();
        for (t, labs) in self.labels.iter().enumerate().skip(1) {
            for l in labs {
                b.insert(t - 1, l.clone(), 1);
            }
        }
        b
    }
}

/// Checks `δ² = 0`, acyclicity of `X_{≤a}` for every `a` in the lcm lattice
/// of `ideal`, and computes `β_{i,a}` from `X_{<a}`.
pub fn verify_resolution(
    f: &CellularFreeComplex,
    ideal: &MonomialIdeal,
    lim: &Limits,
) -> Result<ResolutionReport> {
    limits::check("generator count", ideal.len(), lim.max_oracle_generators)?;
    let lattice = lcm_lattice(ideal, None);
    let results: Vec<(Monomial, bool, Vec<usize>)> = lattice
        .par_iter()
        .map(|a| {
            let le = f.restricted_homology(|l| l.divides(a));
            let lt = f.restricted_homology(|l| l.divides(a) && l != a);
            (a.clone(), le.iter().all(|&h| h == 0), lt)
        })
        .collect();
    let mut non_acyclic = Vec::new();
    let mut homology_betti = MultigradedBettiTable::default();
    for (a, ok, lt) in results {
        if !ok {
            non_acyclic.push(a.clone());
        }
        // Index t of `lt` is H̃_{t-1}, which gives β_t.
        for (t, &h) in lt.iter().enumerate() {
            homology_betti.insert(t, a.clone(), h as u64);
        }
    }
    Ok(ResolutionReport {
        multidegrees: lattice.len(),
        cell_multidegrees: f.labels.iter().flatten().skip(1).collect::<HashSet<_>>().len(),
        non_acyclic,
        d_squared_zero: f.d_squared_is_zero(),
        cell_betti: f.cell_betti(),
        homology_betti,
    })
}

/// Serialized differential matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub degree: isize,
    pub basis: Vec<BasisJson>,
    /// Image of each basis element in the previous term.
    pub differential: Vec<Vec<EntryJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub cell: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub target: usize,
    pub sign: i64,
    pub coefficient: String,
}

impl CellularFreeComplex {
    pub fn to_json(&self, cc: &CubicalComplex) -> ResolutionJson {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(t, basis)| TermJson {
                degree: t as isize - 1,
                basis: basis
                    .iter()
                    .zip(&self.labels[t])
                    .map(|(cell, lab)| BasisJson {
                        cell: cell.map(|i| cc.cubes()[i].to_string()).unwrap_or_else(|| "∅".into()),
                        label: lab.format(&self.vars),
                    })
                    .collect(),
                differential: self.diff[t]
                    .iter()
                    .map(|es| {
                        es.iter()
                            .map(|e| EntryJson {
                                target: e.target,
                                sign: e.sign,
                                coefficient: e.coefficient.format(&self.vars),
                            })
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        ResolutionJson {
            variables: self.vars.clone(),
            terms,
        }
    }
}

/// `f_i(C)` predicted from the f-vector of `Δ`: `Σ_{j>=i} C(j,i) f_{j-1}`.
pub fn predicted_f_vector(delta: &SimplicialComplex) -> Result<Vec<usize>> {
    let f = delta.f_vector()?;
    let d = f.entries.len();
    Ok((0..d)
        .map(|i| (i..d).map(|j| binom(j, i) * f.entries[j]).sum())
        .collect())
}

pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Totals by label degree, for comparison with ℤ-graded tables.
pub fn label_degree_counts(l: &LabeledCellComplex) -> BTreeMap<(usize, u32), usize> {
    let mut out = BTreeMap::new();
    for (c, lab) in l.complex.cubes().iter().zip(&l.labels) {
        *out.entry((c.dim(), lab.degree())).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: &[&str]) -> SimplicialComplex {
        let mut labels: Vec<String> = facets.iter().flat_map(|f| f.chars()).map(String::from).collect();
        labels.sort();
        labels.dedup();
        let fs: Vec<Vec<String>> = facets.iter().map(|f| f.chars().map(String::from).collect()).collect();
        SimplicialComplex::from_facets(labels, fs).unwrap()
    }

    fn col(d: &SimplicialComplex, cls: &[&str]) -> Colouring {
        let classes: Vec<Vec<String>> = cls.iter().map(|c| c.chars().map(String::from).collect()).collect();
        Colouring::from_labels(d, classes, false).unwrap()
    }

    #[test]
    fn running_cube_complex() {
        let d = complex(&["abc", "bcd", "ce", "de", "df"]);
        let c = col(&d, &["da", "be", "cf"]);
        let cc = cubical_complex(&d, &c).unwrap();
        assert_eq!(cc.f_vector(), vec![17, 28, 14, 2]);
        assert_eq!(predicted_f_vector(&d).unwrap(), vec![17, 28, 14, 2]);
        assert!(cc.validate().is_ok());
        let seq = collapse_sequence(&cc).unwrap();
        assert_eq!(seq.len(), 30);
    }

    #[test]
    fn rejects_wrong_order() {
        let d = complex(&["abc", "bcd", "ce", "de", "df"]);
        let c = col(&d, &["ad", "be", "cf"]);
        let e = cubical_complex(&d, &c).unwrap_err();
        assert_eq!(e.to_string(), "not nested: link(d) ⊄ link(a)");
    }

    #[test]
    fn small_complexes() {
        let e = SimplicialComplex::empty_face();
        let cc = cubical_complex(&e, &Colouring::singleton(0)).unwrap();
        assert_eq!(cc.f_vector(), vec![1]);
        assert!(collapse_sequence(&cc).unwrap().is_empty());
        let v = complex(&["a"]);
        let cc = cubical_complex(&v, &Colouring::singleton(1)).unwrap();
        assert_eq!(collapse_sequence(&cc).unwrap().len(), 1);
        let ab = complex(&["ab"]);
        let cc = cubical_complex(&ab, &Colouring::singleton(2)).unwrap();
        assert_eq!(cc.f_vector(), vec![4, 4, 1]);
    }

    #[test]
    fn running_resolution() {
        let d = complex(&["abc", "bcd", "ce", "de", "df"]);
        let c = col(&d, &["da", "be", "cf"]);
        let l = labeled_complex(&d, &c).unwrap();
        assert!(l.is_minimal());
        assert!(l.degrees_match());
        let mut f = cellular_free_complex(&l);
        assert!(f.d_squared_is_zero());
        let ranks: Vec<usize> = f.ranks().iter().map(|r| r.1).collect();
        assert_eq!(ranks, [1, 17, 28, 14, 2]);
        f.flip_sign(2, 0, 0);
        assert!(!f.d_squared_is_zero());
    }

    #[test]
    fn square_label() {
        let d = complex(&["abc", "bcd", "ce", "de", "df"]);
        let c = col(&d, &["da", "be", "cf"]);
        let l = labeled_complex(&d, &c).unwrap();
        let ctx = UfiContext::new(&d, &c).unwrap();
        let b = ctx.index_vector(0b10);
        let de = ctx.index_vector(0b11000);
        let sq = Cube {
            dirs: (0..3).filter(|&i| de.0[i] != b.0[i]).fold(0, |a, i| a | (1 << i)),
            lower: b,
        };
        assert_eq!(sq.upper(), de);
        let lab = l.label_of(&sq).unwrap();
        assert_eq!(lab.degree(), 8);
        assert_eq!(lab.format(&l.vars), "x1^2*x2*x3^2*y1*y2^2");
    }
}
