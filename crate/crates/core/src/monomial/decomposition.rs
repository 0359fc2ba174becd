//! Irreducible decomposition by recursive splitting of mixed generators.

use std::collections::HashMap;
use std::fmt;

use super::{minimalize, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::primes::PrimeSet;

/// `𝔪^b = (x_i^{b_i} : b_i >= 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    pub b: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(b: Vec<u32>) -> Result<Self> {
        if b.iter().all(|&e| e == 0) {
            return Err(Error::Precondition(
                "an irreducible component needs a positive exponent".into(),
            ));
        }
        Ok(IrreducibleComponent { b })
    }

    pub fn support(&self) -> u64 {
        self.b
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |a, (i, _)| a | (1 << i))
    }

    /// `𝔪^other ⊆ 𝔪^self`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .b
            .iter()
            .zip(&self.b)
            .all(|(&c, &b)| c == 0 || (b >= 1 && b <= c))
    }

    pub fn ideal(&self, vars: &[String]) -> MonomialIdeal {
        let n = self.b.len();
        let gens = self
            .b
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let mut m = Monomial::one(n);
                m.0[i] = e;
                m
            })
            .collect();
        MonomialIdeal::new(vars.to_vec(), gens)
    }

    pub fn format(&self, vars: &[String]) -> String {
        format!("({})", self.ideal(vars).format_gens().join(", "))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (1..=self.b.len()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.format(&vars))
    }
}

/// Drops every component containing another one, deduplicates and sorts.
pub(crate) fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = (0..comps.len())
        .map(|i| !(0..comps.len()).any(|j| j != i && comps[i].contains(&comps[j])))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

struct Splitter {
    memo: HashMap<Vec<Monomial>, Vec<IrreducibleComponent>>,
    nodes: usize,
    budget: usize,
}

impl Splitter {
    fn run(&mut self, gens: Vec<Monomial>) -> Result<Vec<IrreducibleComponent>> {
        if let Some(c) = self.memo.get(&gens) {
            return Ok(c.clone());
        }
        self.nodes += 1;
        limits::check("decomposition nodes", self.nodes, self.budget)?;
        let mixed = gens.iter().find(|g| g.support().count_ones() >= 2);
        let out = match mixed {
            None => {
                if gens.iter().any(|g| g.degree() == 0) {
                    Vec::new()
                } else {
                    let mut b = vec![0; gens[0].nvars()];
                    for g in &gens {
                        let i = g.max_index().unwrap();
                        b[i] = g.0[i];
                    }
                    vec![IrreducibleComponent { b }]
                }
            }
            Some(m) => {
                let i = m.support().trailing_zeros() as usize;
                let mut u = Monomial::one(m.nvars());
                u.0[i] = m.0[i];
                let v = m.div(&u).unwrap();
                let mut left = gens.clone();
                left.push(u);
                let mut right = gens.clone();
                right.push(v);
                let mut comps = self.run(minimalize(left))?;
                comps.extend(self.run(minimalize(right))?);
                irredundant(comps)
            }
        };
        self.memo.insert(gens, out.clone());
        Ok(out)
    }
}

/// Irredundant irreducible decomposition with the default guards.
pub fn irreducible_decomposition_generic(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    irreducible_decomposition_with(ideal, &Limits::default())
}

/// The unit ideal decomposes as the empty intersection.
pub fn irreducible_decomposition_with(
    ideal: &MonomialIdeal,
    lim: &Limits,
) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_empty() {
        return Err(Error::Precondition("the zero ideal has no such decomposition".into()));
    }
    let mut s = Splitter {
        memo: HashMap::new(),
        nodes: 0,
        budget: lim.max_split_nodes,
    };
    s.run(ideal.gens().to_vec())
}

/// The intersection of the components, as a monomial ideal.
pub fn intersect_components(vars: &[String], comps: &[IrreducibleComponent]) -> MonomialIdeal {
    let mut acc = MonomialIdeal::new(vars.to_vec(), vec![Monomial::one(vars.len())]);
    for c in comps {
        acc = acc.intersect(&c.ideal(vars)).expect("same ring");
    }
    acc
}

/// Supports of the irredundant irreducible components.
pub fn associated_primes_generic(ideal: &MonomialIdeal) -> Result<PrimeSet> {
    let comps = irreducible_decomposition_generic(ideal)?;
    Ok(PrimeSet::from_masks(comps.iter().map(|c| c.support())))
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
    fn product_of_variables() {
        let i = ideal(&["x", "y"], &["x*y"]);
        let d = irreducible_decomposition_generic(&i).unwrap();
        let names: Vec<String> = d.iter().map(|c| c.format(i.vars())).collect();
        assert_eq!(names, ["(y)", "(x)"]);
        assert_eq!(associated_primes_generic(&i).unwrap().len(), 2);
    }

    #[test]
    fn irreducible_is_itself() {
        let i = ideal(&["x", "y", "z"], &["x^2", "z^3"]);
        let d = irreducible_decomposition_generic(&i).unwrap();
        assert_eq!(d, vec![IrreducibleComponent { b: vec![2, 0, 3] }]);
    }

    #[test]
    fn intersection_recovers_ideal() {
        let i = ideal(&["x", "y", "z"], &["x^2*y", "y^2*z^3", "x*z^2", "x^3"]);
        let d = irreducible_decomposition_generic(&i).unwrap();
        assert_eq!(intersect_components(i.vars(), &d), i);
    }

    #[test]
    fn containment() {
        let a = IrreducibleComponent { b: vec![1, 2] };
        let b = IrreducibleComponent { b: vec![2, 2] };
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(IrreducibleComponent::new(vec![0, 0]).is_err());
    }

    #[test]
    fn guard() {
        let i = ideal(&["x", "y", "z"], &["x*y", "y*z"]);
        let lim = Limits {
            max_split_nodes: 1,
            ..Limits::default()
        };
        assert!(matches!(
            irreducible_decomposition_with(&i, &lim),
            Err(Error::Guard { .. })
        ));
    }
}
