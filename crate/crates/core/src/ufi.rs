//! Index vectors, uniform monomials and uniform face ideals.

use std::collections::BTreeSet;
use std::fmt;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::monomial::{ufi_variables, BorelPoset, Monomial, MonomialIdeal};
use crate::simplicial::{bits, Face, SimplicialComplex, MAX_VERTICES};

/// `e(σ)`: per class, the 1-based position of the vertex of `σ` in it, or 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector(pub Vec<u32>);

impl IndexVector {
    pub fn zero(k: usize) -> Self {
        IndexVector(vec![0; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &IndexVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &IndexVector) -> IndexVector {
        IndexVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `Π x_i^{c_i - e_i} y_i^{e_i}` for class sizes `c`.
    pub fn monomial(&self, sizes: &[u32]) -> Monomial {
        let k = self.k();
        let mut e = vec![0; 2 * k];
        for i in 0..k {
            e[i] = sizes[i] - self.0[i];
            e[k + i] = self.0[i];
        }
        Monomial(e)
    }

    /// Reads `e_i` off the `y_i` exponents of a monomial in `x1..xk, y1..yk`.
    pub fn from_monomial(m: &Monomial) -> IndexVector {
        let k = m.nvars() / 2;
        IndexVector(m.0[k..].to_vec())
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn index_vector(sigma: Face, c: &Colouring) -> Result<IndexVector> {
    let mut e = vec![0u32; c.k()];
    for (i, class) in c.classes().iter().enumerate() {
        for (j, &v) in class.iter().enumerate() {
            if sigma & (1 << v) != 0 {
                if e[i] != 0 {
                    return Err(Error::FaceMeetsClassTwice(i + 1));
                }
                e[i] = j as u32 + 1;
            }
        }
    }
    Ok(IndexVector(e))
}

pub fn uniform_monomial(sigma: Face, c: &Colouring) -> Result<Monomial> {
    Ok(index_vector(sigma, c)?.monomial(&c.class_sizes()))
}

/// A complex with a proper colouring, ready for ideal construction.
#[derive(Debug, Clone)]
pub struct UfiContext {
    delta: SimplicialComplex,
    colouring: Colouring,
    vars: Vec<String>,
}

impl UfiContext {
    pub fn new(delta: &SimplicialComplex, c: &Colouring) -> Result<Self> {
        if delta.is_void() {
            return Err(Error::VoidComplex);
        }
        c.check_proper(delta)?;
        Ok(UfiContext {
            delta: delta.clone(),
            colouring: c.clone(),
            vars: ufi_variables(c.k()),
        })
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.delta.n()
    }

    pub fn k(&self) -> usize {
        self.colouring.k()
    }

    pub fn class_sizes(&self) -> Vec<u32> {
        self.colouring.class_sizes()
    }

    pub fn index_vector(&self, sigma: Face) -> IndexVector {
        index_vector(sigma, &self.colouring).expect("proper colouring")
    }

    /// Every face with its uniform monomial, in canonical face order.
    pub fn tagged_generators(&self) -> Vec<(Face, Monomial)> {
        let sizes = self.class_sizes();
        self.delta
            .faces()
            .iter()
            .map(|&f| (f, self.index_vector(f).monomial(&sizes)))
            .collect()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self.tagged_generators().into_iter().map(|(_, m)| m).collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }
}

pub fn uniform_face_ideal(delta: &SimplicialComplex, c: &Colouring) -> Result<MonomialIdeal> {
    Ok(UfiContext::new(delta, c)?.ideal())
}

/// `Q_k`: relations `x_i < y_i` only.
pub fn q_k_poset(k: usize) -> BorelPoset {
    BorelPoset::q_k(k)
}

/// Builds the complex whose faces have the given index vectors, with class
/// sizes `sizes`. Vertices are labelled `a, b, …` across classes in order
/// when there are at most 26 of them.
pub fn complex_from_index_vectors<'a, I>(sizes: &[u32], vectors: I) -> Result<(SimplicialComplex, Colouring)>
where
    I: IntoIterator<Item = &'a IndexVector>,
{
    let total: usize = sizes.iter().map(|&s| s as usize).sum();
    if total > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count",
            actual: total,
            limit: MAX_VERTICES,
        });
    }
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut classes = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &s in sizes {
        offsets.push(next);
        classes.push((next..next + s as usize).collect::<Vec<_>>());
        next += s as usize;
    }
    let labels: Vec<String> = if total <= 26 {
        (0..total).map(|v| ((b'a' + v as u8) as char).to_string()).collect()
    } else {
        let mut l = Vec::with_capacity(total);
        for (i, &s) in sizes.iter().enumerate() {
            for j in 1..=s {
                l.push(format!("v{}_{}", i + 1, j));
            }
        }
        l
    };
    let mut faces = Vec::new();
    for e in vectors {
        let mut f: Face = 0;
        for (i, &ei) in e.0.iter().enumerate() {
            if ei > 0 {
                f |= 1 << (offsets[i] + ei as usize - 1);
            }
        }
        faces.push(f);
    }
    let sc = SimplicialComplex::from_masks(labels, faces);
    let c = Colouring::new(total, classes, true)?;
    Ok((sc, c))
}

fn face_vectors(delta: &SimplicialComplex, c: &Colouring) -> Result<BTreeSet<IndexVector>> {
    let ctx = UfiContext::new(delta, c)?;
    Ok(delta.faces().iter().map(|&f| ctx.index_vector(f)).collect())
}

/// `(Σ, ℰ)` with `I(Σ, ℰ) = I(Δ, 𝒞) · I(Γ, 𝒟)`; the faces of `Σ` are read off
/// the index vectors of the product generators.
pub fn product_as_ufi(
    delta: &SimplicialComplex,
    c: &Colouring,
    gamma: &SimplicialComplex,
    d: &Colouring,
) -> Result<(SimplicialComplex, Colouring)> {
    if c.k() != d.k() {
        return Err(Error::ClassCountMismatch(c.k(), d.k()));
    }
    let a = face_vectors(delta, c)?;
    let b = face_vectors(gamma, d)?;
    let sizes: Vec<u32> = c
        .class_sizes()
        .iter()
        .zip(d.class_sizes())
        .map(|(x, y)| x + y)
        .collect();
    let mut sums = BTreeSet::new();
    for u in &a {
        for v in &b {
            sums.insert(u.add(v));
        }
    }
    complex_from_index_vectors(&sizes, &sums)
}

/// `(Γ_t, 𝒟_t)` with `I(Γ_t, 𝒟_t) = I(Δ, 𝒞)^t`.
pub fn power_as_ufi(
    delta: &SimplicialComplex,
    c: &Colouring,
    t: usize,
) -> Result<(SimplicialComplex, Colouring)> {
    if t == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    UfiContext::new(delta, c)?;
    let mut acc = (delta.clone(), c.clone());
    for _ in 1..t {
        acc = product_as_ufi(&acc.0, &acc.1, delta, c)?;
    }
    Ok(acc)
}

/// Vertex labels of a face, for tagging generators.
pub fn face_tag(delta: &SimplicialComplex, f: Face) -> String {
    if f == 0 {
        return "∅".into();
    }
    let labels: Vec<&str> = bits(f).map(|v| delta.label(v)).collect();
    labels.concat()
}
