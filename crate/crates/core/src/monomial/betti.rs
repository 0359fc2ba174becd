//! Multigraded Betti numbers via upper Koszul simplicial complexes, and the
//! Hilbert numerator via inclusion–exclusion over generators.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::{Monomial, MonomialIdeal};
use crate::error::Result;
use crate::invariants::BettiTable;
use crate::limits::{self, Limits};
use crate::linalg;
use crate::simplicial::bits;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl MultigradedBettiTable {
    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, i: usize, a: Monomial, value: u64) {
        if value > 0 {
            *self.entries.entry((i, a)).or_insert(0) += value;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((i, a), v)| (*i, a, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The ℤ-graded table by total degree.
    pub fn graded(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, a, v) in self.iter() {
            t.add(i, a.degree(), v);
        }
        t
    }
}

/// The lcm lattice without its bottom element: lcms of nonempty generator
/// subsets, optionally only of subsets of size at most `max_size`.
pub fn lcm_lattice(ideal: &MonomialIdeal, max_size: Option<usize>) -> Vec<Monomial> {
    let gens = ideal.gens();
    let mut all: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = all.iter().cloned().collect();
    let mut size = 1;
    while !frontier.is_empty() && max_size.is_none_or(|m| size < m) {
        let mut next = Vec::new();
        for l in &frontier {
            for g in gens {
                let m = l.lcm(g);
                if all.insert(m.clone()) {
                    next.push(m);
                }
            }
        }
        frontier = next;
        size += 1;
    }
    let mut v: Vec<Monomial> = all.into_iter().collect();
    v.sort_by(super::canonical_cmp);
    v
}

/// Faces of `{ b ⊆ supp(a) squarefree : x^{a-b} ∈ I }`, up to `max_size` elements.
fn upper_koszul(ideal: &MonomialIdeal, a: &Monomial, max_size: usize) -> Vec<u64> {
    let support: Vec<usize> = bits(a.support()).collect();
    let mut faces = Vec::new();
    if !ideal.contains(a) {
        return faces;
    }
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((b, from)) = stack.pop() {
        faces.push(b);
        if b.count_ones() as usize >= max_size {
            continue;
        }
        for (p, &v) in support.iter().enumerate().skip(from) {
            let mut m = a.clone();
            for u in bits(b | (1 << v)) {
                m.0[u] -= 1;
            }
            if ideal.contains(&m) {
                stack.push((b | (1 << v), p + 1));
            }
        }
    }
    faces
}

/// Reduced homology ranks `dim H̃_q` for `q = -1..=qmax` of the complex with
/// the given faces. All faces of size up to `qmax + 2` must be present.
pub(crate) fn reduced_homology(faces: &[u64], qmax: isize) -> Vec<usize> {
    let top = (qmax + 2).max(0) as usize;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        let s = f.count_ones() as usize;
        if s <= top {
            by_size[s].push(f);
        }
    }
    for v in by_size.iter_mut() {
        v.sort_unstable();
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // rank of ∂ from size s to size s-1, for s = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<linalg::SparseRow> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row: Vec<(usize, i64)> = bits(f)
                    .enumerate()
                    .filter_map(|(t, v)| {
                        index[s - 1]
                            .get(&(f & !(1 << v)))
                            .map(|&c| (c, if t % 2 == 0 { 1 } else { -1 }))
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        ranks[s] = linalg::rank(&rows);
    }
    (0..=(qmax + 1) as usize)
        .map(|s| by_size[s].len() - ranks[s] - ranks.get(s + 1).copied().unwrap_or(0))
        .collect()
}

fn has_cone_point(faces: &[u64], support: u64) -> bool {
    let set: HashSet<u64> = faces.iter().copied().collect();
    bits(support).any(|v| faces.iter().all(|f| set.contains(&(f | (1 << v)))))
}

/// Multigraded Betti numbers with the default guards.
pub fn betti_oracle(ideal: &MonomialIdeal) -> Result<MultigradedBettiTable> {
    betti_oracle_with(ideal, &Limits::default(), None)
}

/// Multigraded Betti numbers `β_{i,a}` for `i <= max_i` (all `i` if `None`).
pub fn betti_oracle_with(
    ideal: &MonomialIdeal,
    lim: &Limits,
    max_i: Option<usize>,
) -> Result<MultigradedBettiTable> {
    limits::check("generator count", ideal.len(), lim.max_oracle_generators)?;
    limits::check("variable count", ideal.nvars(), lim.max_oracle_variables)?;
    let lattice = lcm_lattice(ideal, max_i.map(|i| i + 1));
    let imax = max_i.unwrap_or(ideal.nvars()) as isize;
    let strands: Vec<(Monomial, Vec<usize>)> = lattice
        .into_par_iter()
        .map(|a| {
            let faces = upper_koszul(ideal, &a, (imax + 1) as usize);
            if has_cone_point(&faces, a.support()) {
                return (a, Vec::new());
            }
            let h = reduced_homology(&faces, imax - 1);
            (a, h)
        })
        .collect();
    let mut table = MultigradedBettiTable::default();
    for (a, h) in strands {
        for (i, &r) in h.iter().enumerate() {
            table.insert(i, a.clone(), r as u64);
        }
    }
    Ok(table)
}

/// Numerator of the Hilbert series of `R/I` over `(1-t)^{#vars}`, as
/// coefficients by degree, with the default guards.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<Vec<i64>> {
    hilbert_numerator_with(ideal, &Limits::default())
}

pub fn hilbert_numerator_with(ideal: &MonomialIdeal, lim: &Limits) -> Result<Vec<i64>> {
    limits::check("generator count", ideal.len(), lim.max_oracle_generators)?;
    // Σ_S (-1)^{|S|} x^{lcm S}, grouped by lcm as generators are added.
    let mut acc: HashMap<Monomial, i64> = HashMap::new();
    acc.insert(Monomial::one(ideal.nvars()), 1);
    for g in ideal.gens() {
        let mut next = acc.clone();
        for (l, c) in &acc {
            let m = l.lcm(g);
            *next.entry(m).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    let mut poly = Vec::new();
    for (m, c) in acc {
        let d = m.degree() as usize;
        if poly.len() <= d {
            poly.resize(d + 1, 0);
        }
        poly[d] += c;
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    Ok(poly)
}

/// `1 - Σ_{i,j} (-1)^i β_{i,j}(I) t^j`, the Hilbert numerator of `R/I`
/// recovered from the Betti numbers of `I`.
pub fn euler_numerator(table: &MultigradedBettiTable) -> Vec<i64> {
    let mut poly = vec![1i64];
    for (i, a, v) in table.iter() {
        let d = a.degree() as usize;
        if poly.len() <= d {
            poly.resize(d + 1, 0);
        }
        let sign = if i % 2 == 0 { -1 } else { 1 };
        poly[d] += sign * v as i64;
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(v: &[&str], gens: &[&str]) -> MonomialIdeal {
        let v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        let gens = gens.iter().map(|g| Monomial::parse(&v, g).unwrap()).collect();
        MonomialIdeal::new(v, gens)
    }

    #[test]
    fn principal() {
        let i = ideal(&["x", "y"], &["x*y^2"]);
        let b = betti_oracle(&i).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.graded().get(0, 3), 1);
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let i = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let b = betti_oracle(&i).unwrap().graded();
        assert_eq!((b.get(0, 1), b.get(1, 2), b.get(2, 3)), (3, 3, 1));
    }

    #[test]
    fn truncated_oracle() {
        let i = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let b = betti_oracle_with(&i, &Limits::default(), Some(1)).unwrap().graded();
        assert_eq!((b.get(0, 1), b.get(1, 2), b.get(2, 3)), (3, 3, 0));
    }

    #[test]
    fn unit_ideal() {
        let i = ideal(&["x"], &["1"]);
        let b = betti_oracle(&i).unwrap().graded();
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(hilbert_numerator(&i).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn numerators() {
        assert_eq!(hilbert_numerator(&ideal(&["x"], &["x"])).unwrap(), vec![1, -1]);
        let m = ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(hilbert_numerator(&m).unwrap(), vec![1, -2, 1]);
        assert_eq!(euler_numerator(&betti_oracle(&m).unwrap()), vec![1, -2, 1]);
    }

    #[test]
    fn homology_of_circle() {
        // Boundary of a triangle: H̃_1 = 1.
        let faces = [0, 1, 2, 4, 3, 5, 6];
        assert_eq!(reduced_homology(&faces, 1), vec![0, 0, 1]);
        assert_eq!(reduced_homology(&[0], 0), vec![1, 0]);
    }
}
