//! Irreducible decompositions, associated primes and their persistence for
//! uniform face ideals of nested colourings.

use std::collections::BTreeSet;
use std::fmt;

use crate::colouring::{check_nesting_ordered, Colouring};
use crate::error::Result;
use crate::limits::{self, Limits};
use crate::monomial::{intersect_components, IrreducibleComponent, MonomialIdeal};
use crate::poset::minimal_nonface_poset;
use crate::simplicial::{bits, face_cmp, SimplicialComplex};
use crate::ufi::{power_as_ufi, IndexVector, UfiContext};

/// Monomial primes, each stored as the bitmask of its variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: BTreeSet<u64>,
}

impl PrimeSet {
    pub fn from_masks<I: IntoIterator<Item = u64>>(masks: I) -> Self {
        PrimeSet {
            primes: masks.into_iter().filter(|&m| m != 0).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.primes.contains(&mask)
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes.is_subset(&other.primes)
    }

    /// Masks by height, then variable order.
    pub fn masks(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.primes.iter().copied().collect();
        v.sort_by(|&a, &b| face_cmp(a, b));
        v
    }

    /// The primes minimal under inclusion.
    pub fn minimal(&self) -> PrimeSet {
        PrimeSet::from_masks(
            self.primes
                .iter()
                .copied()
                .filter(|&p| !self.primes.iter().any(|&q| q != p && q & p == q)),
        )
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            primes: self.primes.difference(&other.primes).copied().collect(),
        }
    }

    pub fn format_prime(vars: &[String], mask: u64) -> String {
        let names: Vec<&str> = bits(mask).map(|i| vars[i].as_str()).collect();
        format!("({})", names.join(", "))
    }

    pub fn format(&self, vars: &[String]) -> Vec<String> {
        self.masks()
            .into_iter()
            .map(|m| Self::format_prime(vars, m))
            .collect()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.primes.iter().map(|m| 64 - m.leading_zeros()).max().unwrap_or(0);
        let vars: Vec<String> = (1..=top).map(|i| format!("x{i}")).collect();
        write!(f, "{{{}}}", self.format(&vars).join(", "))
    }
}

/// The decomposition of `I(Δ,𝒞)` into `(x_i^j, y_i^{#C_i-j+1})` for each class
/// and `(x_j^{#C_j-e_j+1} : e_j > 0)` for each minimal non-face vector `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UfiDecomposition {
    pub vars: Vec<String>,
    pub sizes: Vec<u32>,
    /// `(i, j)`, zero-based class `i`, `1 <= j <= #C_i`.
    pub class_components: Vec<(usize, u32)>,
    pub nonface_vectors: Vec<IndexVector>,
}

impl UfiDecomposition {
    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_component(&self, i: usize, j: u32) -> IrreducibleComponent {
        let k = self.k();
        let mut b = vec![0; 2 * k];
        b[i] = j;
        b[k + i] = self.sizes[i] - j + 1;
        IrreducibleComponent { b }
    }

    pub fn nonface_component(&self, e: &IndexVector) -> IrreducibleComponent {
        let mut b = vec![0; 2 * self.k()];
        for (j, &ej) in e.0.iter().enumerate() {
            if ej > 0 {
                b[j] = self.sizes[j] - ej + 1;
            }
        }
        IrreducibleComponent { b }
    }

    pub fn nonface_components(&self) -> Vec<IrreducibleComponent> {
        self.nonface_vectors.iter().map(|e| self.nonface_component(e)).collect()
    }

    pub fn components(&self) -> Vec<IrreducibleComponent> {
        let mut out: Vec<IrreducibleComponent> = self
            .class_components
            .iter()
            .map(|&(i, j)| self.class_component(i, j))
            .collect();
        out.extend(self.nonface_components());
        out
    }

    pub fn len(&self) -> usize {
        self.class_components.len() + self.nonface_vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn intersection(&self) -> MonomialIdeal {
        intersect_components(&self.vars, &self.components())
    }

    pub fn format(&self) -> Vec<String> {
        self.components().iter().map(|c| c.format(&self.vars)).collect()
    }
}

pub fn ufi_irreducible_decomposition(
    delta: &SimplicialComplex,
    c: &Colouring,
) -> Result<UfiDecomposition> {
    check_nesting_ordered(delta, c)?;
    let ctx = UfiContext::new(delta, c)?;
    let sizes = c.class_sizes();
    let class_components = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| (1..=s).map(move |j| (i, j)))
        .collect();
    let nonface_vectors = minimal_nonface_poset(delta, c)?.minimal_elements();
    Ok(UfiDecomposition {
        vars: ctx.vars().to_vec(),
        sizes,
        class_components,
        nonface_vectors,
    })
}

/// `{(x_i, y_i)} ∪ {(x_j : e_j > 0) : e ∈ min 𝒩}`.
pub fn ufi_associated_primes(delta: &SimplicialComplex, c: &Colouring) -> Result<PrimeSet> {
    let d = ufi_irreducible_decomposition(delta, c)?;
    let k = d.k();
    let classes = (0..k)
        .filter(|&i| d.sizes[i] > 0)
        .map(|i| (1u64 << i) | (1u64 << (k + i)));
    let nonfaces = d.nonface_vectors.iter().map(|e| {
        e.0.iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .fold(0u64, |a, (j, _)| a | (1 << j))
    });
    Ok(PrimeSet::from_masks(classes.chain(nonfaces)))
}

/// The minimal primes all have the same height.
pub fn is_unmixed(delta: &SimplicialComplex, c: &Colouring) -> Result<bool> {
    let min = ufi_associated_primes(delta, c)?.minimal();
    let heights: BTreeSet<u32> = min.masks().iter().map(|m| m.count_ones()).collect();
    Ok(heights.len() <= 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceReport {
    pub vars: Vec<String>,
    /// `Ass(R/I^t)` for `t = 1, 2, …`.
    pub powers: Vec<PrimeSet>,
    /// `inclusions[t-1]` is `Ass(R/I^t) ⊆ Ass(R/I^{t+1})`.
    pub inclusions: Vec<bool>,
}

impl PersistenceReport {
    pub fn holds(&self) -> bool {
        self.inclusions.iter().all(|&b| b)
    }

    /// Primes first appearing at power `t` (1-based).
    pub fn new_at(&self, t: usize) -> PrimeSet {
        match t {
            0 => PrimeSet::default(),
            1 => self.powers[0].clone(),
            _ => self.powers[t - 1].difference(&self.powers[t - 2]),
        }
    }
}

pub fn persistence_report(
    delta: &SimplicialComplex,
    c: &Colouring,
    max_power: usize,
    lim: &Limits,
) -> Result<PersistenceReport> {
    limits::check("power", max_power, lim.max_power)?;
    check_nesting_ordered(delta, c)?;
    let vars = UfiContext::new(delta, c)?.vars().to_vec();
    let powers = (1..=max_power)
        .map(|t| {
            let (g, d) = power_as_ufi(delta, c, t)?;
            limits::check("face count", g.face_count(), lim.max_faces)?;
            ufi_associated_primes(&g, &d)
        })
        .collect::<Result<Vec<_>>>()?;
    let inclusions = powers.windows(2).map(|w| w[0].is_subset(&w[1])).collect();
    Ok(PersistenceReport {
        vars,
        powers,
        inclusions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> (SimplicialComplex, Colouring) {
        let labels: Vec<String> = "abcdef".chars().map(String::from).collect();
        let facets: Vec<Vec<String>> = ["abc", "bcd", "ce", "de", "df"]
            .iter()
            .map(|f| f.chars().map(String::from).collect())
            .collect();
        let d = SimplicialComplex::from_facets(labels, facets).unwrap();
        let c = Colouring::from_labels(&d, vec![vec!["d", "a"], vec!["b", "e"], vec!["c", "f"]], false)
            .unwrap();
        (d, c)
    }

    #[test]
    fn running_primes() {
        let (d, c) = running();
        let p = ufi_associated_primes(&d, &c).unwrap();
        let vars = crate::monomial::ufi_variables(3);
        assert_eq!(
            p.format(&vars),
            [
                "(x1, x2)",
                "(x1, x3)",
                "(x1, y1)",
                "(x2, x3)",
                "(x2, y2)",
                "(x3, y3)",
                "(x1, x2, x3)"
            ]
        );
        assert!(is_unmixed(&d, &c).unwrap());
    }

    #[test]
    fn running_decomposition() {
        let (d, c) = running();
        let dec = ufi_irreducible_decomposition(&d, &c).unwrap();
        assert_eq!(dec.class_components.len(), 6);
        assert_eq!(dec.nonface_vectors.len(), 4);
        assert_eq!(dec.intersection(), crate::ufi::uniform_face_ideal(&d, &c).unwrap());
    }

    #[test]
    fn minimal_primes() {
        let p = PrimeSet::from_masks([0b11, 0b111, 0b1100]);
        assert_eq!(p.minimal().masks(), vec![0b11, 0b1100]);
    }
}
