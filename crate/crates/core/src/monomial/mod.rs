//! Monomial ideals: arithmetic, exchange predicates, decompositions and the
//! homological oracles.

mod betti;
mod decomposition;

pub use betti::{
    betti_oracle, betti_oracle_with, euler_numerator, hilbert_numerator, hilbert_numerator_with,
    lcm_lattice, MultigradedBettiTable,
};
pub use decomposition::{
    associated_primes_generic, intersect_components, irreducible_decomposition_generic,
    irreducible_decomposition_with, IrreducibleComponent,
};

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{bits, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    /// `x_i · self / x_j`, if `x_j` divides `self`.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Monomial> {
        if self.0[j] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[j] -= 1;
        e[i] += 1;
        Some(Monomial(e))
    }

    /// Bitmask of the variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |a, (i, _)| a | (1 << i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Largest index with positive exponent.
    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn format(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars[i].clone()
                } else {
                    format!("{}^{}", vars[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses `x1^2*y3` style text over `vars`; `1` is the unit monomial.
    pub fn parse(vars: &[String], text: &str) -> Result<Monomial> {
        let mut e = vec![0u32; vars.len()];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial(e));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, x)) => (
                    n.trim(),
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let i = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            e[i] += exp;
        }
        Ok(Monomial(e))
    }
}

/// Degree first, then larger exponent vectors first.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

/// Variable names `x1..xk, y1..yk`.
pub fn ufi_variables(k: usize) -> Vec<String> {
    (1..=k)
        .map(|i| format!("x{i}"))
        .chain((1..=k).map(|i| format!("y{i}")))
        .collect()
}

/// A monomial ideal, stored by its minimal generators in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

/// Keeps the divisibility-minimal monomials, sorted canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Self {
        assert!(
            gens.iter().all(|g| g.nvars() == vars.len()),
            "generator length does not match the variable list"
        );
        MonomialIdeal {
            gens: minimalize(gens),
            vars,
        }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: vec![] }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal::new(self.vars.clone(), gens))
    }

    /// `I^t`; `I^0` is the unit ideal.
    pub fn power(&self, t: usize) -> MonomialIdeal {
        let mut acc = MonomialIdeal::new(self.vars.clone(), vec![Monomial::one(self.nvars())]);
        for _ in 0..t {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::new(self.vars.clone(), gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::new(self.vars.clone(), gens))
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// For every generator `m` and `i < μ(m)`, `x_i m / x_μ(m) ∈ I`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|m| match m.max_index() {
            None => true,
            Some(mu) => (0..mu).all(|i| self.contains(&m.exchange(i, mu).unwrap())),
        })
    }

    /// For every generator `m`, `x_j | m` and `i < j`, `x_i m / x_j ∈ I`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|m| {
            (0..self.nvars()).all(|j| {
                m.0[j] == 0 || (0..j).all(|i| self.contains(&m.exchange(i, j).unwrap()))
            })
        })
    }

    pub fn is_q_borel(&self, q: &BorelPoset) -> bool {
        let rel = q.closure();
        self.gens.iter().all(|m| {
            rel.iter()
                .all(|&(i, j)| m.0[j] == 0 || self.contains(&m.exchange(i, j).unwrap()))
        })
    }

    /// Minimal generators not reachable from another minimal generator by moves.
    pub fn q_borel_generators(&self, q: &BorelPoset) -> Vec<Monomial> {
        let rel = q.closure();
        let gens: HashSet<&Monomial> = self.gens.iter().collect();
        let mut reached: HashSet<Monomial> = HashSet::new();
        for g in &self.gens {
            let mut seen: HashSet<Monomial> = HashSet::new();
            let mut queue = VecDeque::from([g.clone()]);
            seen.insert(g.clone());
            while let Some(m) = queue.pop_front() {
                for &(i, j) in &rel {
                    if let Some(next) = m.exchange(i, j) {
                        if seen.insert(next.clone()) {
                            if gens.contains(&next) {
                                reached.insert(next.clone());
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        self.gens
            .iter()
            .filter(|g| !reached.contains(*g))
            .cloned()
            .collect()
    }

    pub fn is_principal_q_borel(&self, q: &BorelPoset) -> bool {
        self.is_q_borel(q) && self.q_borel_generators(q).len() == 1
    }

    pub fn is_polymatroidal(&self) -> Result<bool> {
        if !self.is_equigenerated() {
            return Err(Error::NotEquigenerated);
        }
        let gens: HashSet<&Monomial> = self.gens.iter().collect();
        for u in &self.gens {
            for v in &self.gens {
                for i in 0..self.nvars() {
                    if u.0[i] <= v.0[i] {
                        continue;
                    }
                    let ok = (0..self.nvars()).any(|j| {
                        v.0[j] > u.0[j] && gens.contains(&u.exchange(j, i).unwrap())
                    });
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_matroidal(&self) -> Result<bool> {
        Ok(self.is_squarefree() && self.is_polymatroidal()?)
    }

    /// Exchange condition in the fixed variable order: if `u` and `v` first
    /// differ at `i` with `u_i > v_i`, some `j > i` has `x_i v / x_j ∈ I`.
    pub fn is_weakly_polymatroidal(&self) -> bool {
        for u in &self.gens {
            for v in &self.gens {
                let Some(i) = (0..self.nvars()).find(|&i| u.0[i] != v.0[i]) else {
                    continue;
                };
                if u.0[i] < v.0[i] {
                    continue;
                }
                let ok = (i + 1..self.nvars())
                    .any(|j| v.exchange(i, j).is_some_and(|w| self.contains(&w)));
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn format_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.format(&self.vars)).collect()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.vars.clone(),
            generators: self.format_gens(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<MonomialIdeal> {
        let gens = j
            .generators
            .iter()
            .map(|g| Monomial::parse(&j.variables, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(j.variables.clone(), gens))
    }

    /// Squarefree monomials of the minimal non-faces, over the labels of `delta`.
    pub fn stanley_reisner(delta: &SimplicialComplex) -> MonomialIdeal {
        let n = delta.n();
        let gens = delta
            .minimal_nonfaces()
            .into_iter()
            .map(|s| {
                let mut e = vec![0; n];
                for v in bits(s) {
                    e[v] = 1;
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::new(delta.labels().to_vec(), gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format_gens().join(", "))
    }
}

/// Serialized form of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

/// A poset on the variables given by relation pairs `(i, j)` meaning `x_i < x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelPoset {
    n: usize,
    relations: Vec<(usize, usize)>,
}

impl BorelPoset {
    pub fn new(n: usize, relations: Vec<(usize, usize)>) -> Result<Self> {
        let p = BorelPoset { n, relations };
        if p.relations.iter().any(|&(i, j)| i >= n || j >= n) {
            return Err(Error::Precondition("relation outside the variable range".into()));
        }
        if p.closure().iter().any(|&(i, j)| i == j) {
            return Err(Error::Precondition("relations contain a cycle".into()));
        }
        Ok(p)
    }

    /// `Q_k` on `x1..xk, y1..yk` with `x_i < y_i` only.
    pub fn q_k(k: usize) -> Self {
        BorelPoset {
            n: 2 * k,
            relations: (0..k).map(|i| (i, k + i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// Transitive closure as a sorted pair list.
    pub fn closure(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut reach = vec![vec![false; n]; n];
        for &(i, j) in &self.relations {
            reach[i][j] = true;
        }
        for m in 0..n {
            for i in 0..n {
                if reach[i][m] {
                    for j in 0..n {
                        if reach[m][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (i, row) in reach.iter().enumerate() {
            for (j, &r) in row.iter().enumerate() {
                if r {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn ideal(v: &[&str], gens: &[&str]) -> MonomialIdeal {
        let v = vars(v);
        let gens = gens.iter().map(|g| Monomial::parse(&v, g).unwrap()).collect();
        MonomialIdeal::new(v, gens)
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&["x", "y"], &["x^2", "x^2*y"]).format_gens(), ["x^2"]);
        assert_eq!(
            ideal(&["x", "y", "z"], &["x*y", "y*z", "x*y*z"]).format_gens(),
            ["x*y", "y*z"]
        );
    }

    #[test]
    fn parse_and_format() {
        let v = vars(&["x1", "y3"]);
        let m = Monomial::parse(&v, "x1^2*y3").unwrap();
        assert_eq!(m.0, vec![2, 1]);
        assert_eq!(m.format(&v), "x1^2*y3");
        assert_eq!(Monomial::one(2).format(&v), "1");
        assert!(Monomial::parse(&v, "z").is_err());
        assert!(Monomial::parse(&v, "x1^a").is_err());
    }

    #[test]
    fn arithmetic() {
        let x = ideal(&["x", "y"], &["x"]);
        let y = ideal(&["x", "y"], &["y"]);
        assert_eq!(x.multiply(&y).unwrap().format_gens(), ["x*y"]);
        assert_eq!(x.intersect(&y).unwrap().format_gens(), ["x*y"]);
        assert_eq!(x.power(1), x);
        let other = ideal(&["a", "b"], &["a"]);
        assert_eq!(x.multiply(&other).unwrap_err(), Error::VariableMismatch);
    }

    #[test]
    fn stability() {
        let m = ideal(&["x", "y"], &["x", "y"]).power(3);
        assert!(m.is_strongly_stable() && m.is_stable());
        let y2 = ideal(&["x", "y"], &["y^2"]);
        assert!(!y2.is_stable());
    }

    #[test]
    fn exchange_properties() {
        let m2 = ideal(&["x", "y"], &["x", "y"]).power(2);
        assert!(m2.is_polymatroidal().unwrap());
        assert!(m2.is_weakly_polymatroidal());
        assert!(ideal(&["x", "y"], &["x", "y^2"]).is_polymatroidal().is_err());
        let sq = ideal(&["x1", "x2", "y1", "y2"], &["x1*x2", "y1*x2", "x1*y2", "y1*y2"]);
        assert!(sq.is_matroidal().unwrap());
        let not = ideal(&["x", "y", "z", "w"], &["x*y", "z*w"]);
        assert!(!not.is_polymatroidal().unwrap());
    }

    #[test]
    fn borel() {
        let q = BorelPoset::q_k(1);
        assert_eq!(q.relations().len(), 1);
        let i = ideal(&["x1", "y1"], &["x1^2", "x1*y1"]);
        assert!(i.is_q_borel(&q));
        assert_eq!(i.q_borel_generators(&q).len(), 1);
        assert!(i.is_principal_q_borel(&q));
        let j = ideal(&["x1", "y1"], &["y1^2"]);
        assert!(!j.is_q_borel(&q));
        let empty = BorelPoset::new(2, vec![]).unwrap();
        assert!(j.is_q_borel(&empty));
        assert!(BorelPoset::new(2, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let i = ideal(&["x1", "y1"], &["x1^2", "x1*y1"]);
        let j = i.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: IdealJson = serde_json::from_str(&s).unwrap();
        assert_eq!(MonomialIdeal::from_json(&back).unwrap(), i);
    }
}
