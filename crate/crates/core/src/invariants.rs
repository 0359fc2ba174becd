//! Betti tables, Hilbert series data, pure diagrams and Boij–Söderberg
//! decompositions for uniform face ideals of nested colourings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::colouring::{check_nesting_ordered, Colouring};
use crate::cubical::binom;
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Graded Betti numbers `β_{i,j}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pdim(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max (j - i)`.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    pub fn min_row(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Column sums `Σ_j β_{i,j}`.
    pub fn column_totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.pdim().map_or(0, |p| p + 1)];
        for (i, _, v) in self.iter() {
            t[i] += v;
        }
        t
    }

    /// The table of `R/I` from that of `I`.
    pub fn quotient(&self) -> BettiTable {
        let mut q = BettiTable::new();
        q.add(0, 0, 1);
        for (i, j, v) in self.iter() {
            q.add(i + 1, j, v);
        }
        q
    }

    /// `Σ (-1)^i β_{i,j} t^j`.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let mut p = Vec::new();
        for (i, j, v) in self.iter() {
            let j = j as usize;
            if p.len() <= j {
                p.resize(j + 1, 0);
            }
            p[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        trim(&mut p);
        p
    }

    fn rational(&self) -> BTreeMap<(usize, u32), BigRational> {
        self.iter()
            .map(|(i, j, v)| ((i, j), BigRational::from_integer(BigInt::from(v))))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_betti(self))
    }
}

fn grid(table: &BettiTable, skip_zero_rows: bool) -> String {
    let Some(pdim) = table.pdim() else {
        return "     | 0\n-----+--\n   0 | .\n".into();
    };
    let lo = table.min_row().unwrap().min(0);
    let hi = table.reg().unwrap();
    let cell = |i: usize, r: i64| -> String {
        let j = r + i as i64;
        if j < 0 {
            return ".".into();
        }
        match table.get(i, j as u32) {
            0 => ".".into(),
            v => v.to_string(),
        }
    };
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    for r in lo..=hi {
        let cells: Vec<String> = (0..=pdim).map(|i| cell(i, r)).collect();
        if skip_zero_rows && cells.iter().all(|c| c == ".") {
            continue;
        }
        rows.push((r.to_string(), cells));
    }
    let head: Vec<String> = (0..=pdim).map(|i| i.to_string()).collect();
    let mut widths: Vec<usize> = head.iter().map(|h| h.len()).collect();
    for (_, cells) in &rows {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.chars().count());
        }
    }
    let lw = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(4);
    let line = |label: &str, cells: &[String]| -> String {
        let body: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        format!("{label:>lw$} | {}\n", body.join(" "))
    };
    let mut s = line("", &head);
    let width: usize = widths.iter().sum::<usize>() + widths.len();
    s.push_str(&format!("{}-+{}\n", "-".repeat(lw), "-".repeat(width)));
    for (label, cells) in &rows {
        s.push_str(&line(label, cells));
    }
    s
}

/// Rows `j - i` from `min(0, ·)` to the regularity, columns `i`; zeros as periods.
pub fn render_betti(table: &BettiTable) -> String {
    grid(table, false)
}

/// As [`render_betti`] with all-zero rows left out.
pub fn render_betti_compact(table: &BettiTable) -> String {
    grid(table, true)
}

/// The pure diagram `π(d_0, …, d_s)`; `entries[i]` sits at `(i, d_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureDiagram {
    pub degrees: Vec<u32>,
    pub entries: Vec<BigRational>,
}

pub fn pure_diagram(degrees: &[u32]) -> Result<PureDiagram> {
    if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing);
    }
    let entries = (0..degrees.len())
        .map(|i| {
            let mut den = BigInt::one();
            for (j, &d) in degrees.iter().enumerate() {
                if j != i {
                    den *= BigInt::from(d as i64 - degrees[i] as i64);
                }
            }
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            BigRational::new(sign, den)
        })
        .collect();
    Ok(PureDiagram {
        degrees: degrees.to_vec(),
        entries,
    })
}

impl PureDiagram {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `self <= other`: at least as long, and degreewise no larger.
    pub fn le(&self, other: &PureDiagram) -> bool {
        self.len() >= other.len() && other.degrees.iter().zip(&self.degrees).all(|(b, a)| a <= b)
    }
}

impl fmt::Display for PureDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "π({})", d.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSTerm {
    pub coefficient: BigRational,
    pub diagram: PureDiagram,
}

/// `Σ coefficient · π(d)`, terms ordered by diagram length, then degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BSDecomposition {
    pub terms: Vec<BSTerm>,
}

impl BSDecomposition {
    fn from_terms(mut terms: Vec<BSTerm>) -> Self {
        terms.sort_by(|a, b| {
            a.diagram
                .len()
                .cmp(&b.diagram.len())
                .then_with(|| a.diagram.degrees.cmp(&b.diagram.degrees))
        });
        BSDecomposition { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<u64>> {
        self.terms
            .iter()
            .map(|t| {
                if t.coefficient.is_integer() {
                    t.coefficient.to_integer().to_u64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// The diagrams form a strict chain.
    pub fn is_chain(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[1].diagram.le(&w[0].diagram) && w[1].diagram != w[0].diagram)
    }

    pub fn reconstruct(&self) -> BTreeMap<(usize, u32), BigRational> {
        let mut out: BTreeMap<(usize, u32), BigRational> = BTreeMap::new();
        for t in &self.terms {
            for (i, (d, e)) in t.diagram.degrees.iter().zip(&t.diagram.entries).enumerate() {
                let v = out.entry((i, *d)).or_insert_with(BigRational::zero);
                *v += &t.coefficient * e.abs();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn reconstructs(&self, table: &BettiTable) -> bool {
        self.reconstruct() == table.rational()
    }
}

impl fmt::Display for BSDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}·{}", t.coefficient, t.diagram))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn nested_f_vector(delta: &SimplicialComplex, c: &Colouring) -> Result<Vec<usize>> {
    check_nesting_ordered(delta, c)?;
    Ok(delta.f_vector()?.entries)
}

/// `β_{i,n+i}(I) = Σ_{j>=i} C(j,i) f_{j-1}(Δ)`.
pub fn betti_closed_form(delta: &SimplicialComplex, c: &Colouring) -> Result<BettiTable> {
    let f = nested_f_vector(delta, c)?;
    let n = delta.n() as u32;
    let mut t = BettiTable::new();
    for i in 0..f.len() {
        let b: usize = (i..f.len()).map(|j| binom(j, i) * f[j]).sum();
        t.add(i, n + i as u32, b as u64);
    }
    Ok(t)
}

/// `Σ_j j! f_{j-1}(Δ) π(n, …, n+j)`.
pub fn bsd_ideal(delta: &SimplicialComplex, c: &Colouring) -> Result<BSDecomposition> {
    let f = nested_f_vector(delta, c)?;
    let n = delta.n() as u32;
    let terms = (0..f.len())
        .filter(|&j| f[j] > 0)
        .map(|j| {
            let degs: Vec<u32> = (0..=j as u32).map(|t| n + t).collect();
            Ok(BSTerm {
                coefficient: BigRational::from_integer(factorial(j) * BigInt::from(f[j])),
                diagram: pure_diagram(&degs)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BSDecomposition::from_terms(terms))
}

/// `Σ_{j>=1} a_j π(0, n, …, n+j)` with
/// `a_j = j!(n f_{j-1}(Δ) + Σ_v (f_{j-2}(lk v) - f_{j-1}(lk v)))`.
pub fn bsd_quotient(delta: &SimplicialComplex, c: &Colouring) -> Result<BSDecomposition> {
    let f = nested_f_vector(delta, c)?;
    if f.len() == 1 {
        return Err(Error::Precondition(
            "the complex ⟨∅⟩ gives the unit ideal".into(),
        ));
    }
    let n = delta.n();
    let links = (0..n)
        .map(|v| delta.link(1 << v).and_then(|l| l.f_vector()))
        .collect::<Result<Vec<_>>>()?;
    let mut terms = Vec::new();
    for j in 1..f.len() {
        let ji = j as isize;
        let mut a = (n * f[j]) as i64;
        for lk in &links {
            a += lk.f(ji - 2) as i64 - lk.f(ji - 1) as i64;
        }
        if a < 0 {
            return Err(Error::PeelFailed(format!("negative coefficient a_{j} = {a}")));
        }
        if a == 0 {
            continue;
        }
        let mut degs = vec![0u32];
        degs.extend((0..=j as u32).map(|t| n as u32 + t));
        terms.push(BSTerm {
            coefficient: BigRational::from_integer(factorial(j) * BigInt::from(a)),
            diagram: pure_diagram(&degs)?,
        });
    }
    Ok(BSDecomposition::from_terms(terms))
}

/// Greedy peel: take the lowest degree in every nonzero column, subtract the
/// largest multiple of that pure diagram leaving no negative entry, repeat.
pub fn bsd_generic(table: &BettiTable) -> Result<BSDecomposition> {
    let mut rem = table.rational();
    let mut terms = Vec::new();
    while !rem.is_empty() {
        let pdim = rem.keys().map(|k| k.0).max().unwrap();
        let mut degs = Vec::with_capacity(pdim + 1);
        for i in 0..=pdim {
            match rem.keys().filter(|k| k.0 == i).map(|k| k.1).min() {
                Some(d) => degs.push(d),
                None => return Err(Error::PeelFailed(format!("column {i} is empty"))),
            }
        }
        let pi = pure_diagram(&degs)
            .map_err(|_| Error::PeelFailed(format!("degrees {degs:?} are not increasing")))?;
        let coefficient = (0..=pdim)
            .map(|i| &rem[&(i, degs[i])] / pi.entries[i].abs())
            .min()
            .unwrap();
        for i in 0..=pdim {
            let key = (i, degs[i]);
            let v = &rem[&key] - &coefficient * pi.entries[i].abs();
            if v.is_negative() {
                return Err(Error::PeelFailed(format!("negative remainder at {key:?}")));
            }
            if v.is_zero() {
                rem.remove(&key);
            } else {
                rem.insert(key, v);
            }
        }
        terms.push(BSTerm {
            coefficient,
            diagram: pi,
        });
    }
    let d = BSDecomposition::from_terms(terms);
    if !d.is_chain() {
        return Err(Error::PeelFailed("diagrams do not form a chain".into()));
    }
    Ok(d)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// Numerical data of `R/I(Δ,𝒞)` for nested `𝒞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSummary {
    /// `H(t) = Q(t) / (1-t)^dim`, coefficients by degree.
    pub q: Vec<i64>,
    pub dim: usize,
    pub codim: usize,
    pub multiplicity: i64,
    pub pdim: usize,
    pub depth: usize,
    /// Regularity of the ideal, `n`.
    pub reg: usize,
    pub cohen_macaulay: bool,
}

pub fn hilbert_summary(delta: &SimplicialComplex, c: &Colouring) -> Result<HilbertSummary> {
    let f = nested_f_vector(delta, c)?;
    let dim_delta = f.len() as isize - 2;
    if dim_delta < 0 {
        return Err(Error::Precondition(
            "the complex ⟨∅⟩ gives the unit ideal".into(),
        ));
    }
    let n = delta.n();
    let k = c.k();
    let mut q: Vec<i64> = (0..n).map(|i| i as i64 + 1).collect();
    let mut tail = Vec::new();
    for i in 2..f.len() {
        tail = poly_add(&tail, &poly_scale(&one_minus_t_pow(i - 2), f[i] as i64));
    }
    let mut shifted = vec![0i64; n];
    shifted.extend(tail);
    q = poly_sub(&q, &shifted);
    let multiplicity = q.iter().sum();
    let dd = dim_delta as usize;
    Ok(HilbertSummary {
        q,
        dim: 2 * k - 2,
        codim: 2,
        multiplicity,
        pdim: dd + 2,
        depth: 2 * (k - 1) - dd,
        reg: n,
        cohen_macaulay: dd == 0,
    })
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut p = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        p[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        p[i] += v;
    }
    trim(&mut p);
    p
}

pub fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    poly_add(a, &poly_scale(b, -1))
}

pub fn poly_scale(a: &[i64], c: i64) -> Vec<i64> {
    let mut p: Vec<i64> = a.iter().map(|v| v * c).collect();
    trim(&mut p);
    p
}

pub fn one_minus_t_pow(e: usize) -> Vec<i64> {
    (0..=e)
        .map(|i| {
            let b = binom(e, i) as i64;
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect()
}

/// `p / (1 - t)` if exact.
pub fn divide_one_minus_t(p: &[i64]) -> Option<Vec<i64>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    // q_i = Σ_{j<=i} p_j; exact iff the total vanishes.
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in p {
        acc += c;
        q.push(acc);
    }
    if q.pop() != Some(0) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// The largest `e` with `(1-t)^e` dividing a nonzero `p`.
pub fn one_minus_t_multiplicity(p: &[i64]) -> usize {
    let mut p = p.to_vec();
    let mut e = 0;
    while !p.is_empty() {
        match divide_one_minus_t(&p) {
            Some(q) => {
                p = q;
                e += 1;
            }
            None => break,
        }
    }
    e
}
