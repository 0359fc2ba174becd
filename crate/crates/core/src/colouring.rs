//! Ordered vertex colourings, nestedness and (nested) chromatic numbers.
//!
//! Class lists are written greatest-to-least: the first listed vertex of a
//! class has the largest link, and the `j`-th listed vertex has index `j`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::simplicial::{bits, Face, SimpleGraph, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl Colouring {
    /// Checks that `classes` partition `0..n`. Empty classes need `allow_empty`.
    pub fn new(n: usize, classes: Vec<Vec<usize>>, allow_empty: bool) -> Result<Self> {
        Self::validated(n, classes, allow_empty, |v| v.to_string())
    }

    fn validated(
        n: usize,
        classes: Vec<Vec<usize>>,
        allow_empty: bool,
        name: impl Fn(usize) -> String,
    ) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() && !allow_empty {
                return Err(Error::NotAPartition(format!("class {} is empty", i + 1)));
            }
            for &v in c {
                if v >= n {
                    return Err(Error::NotAPartition(format!("vertex index {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::NotAPartition(format!("vertex {} listed twice", name(v))));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::NotAPartition(format!("vertex {} is uncoloured", name(v))));
        }
        Ok(Colouring { n, classes })
    }

    /// Builds a colouring from class lists of vertex labels of `delta`.
    pub fn from_labels<C, S>(delta: &SimplicialComplex, classes: C, allow_empty: bool) -> Result<Self>
    where
        C: IntoIterator,
        C::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Vec::new();
        for class in classes {
            let mut c = Vec::new();
            for tok in class {
                let tok = tok.as_ref();
                let v = delta
                    .index_of(tok)
                    .ok_or_else(|| Error::UnknownVertex(tok.to_string()))?;
                c.push(v);
            }
            out.push(c);
        }
        Self::validated(delta.n(), out, allow_empty, |v| delta.label(v).to_string())
    }

    /// One class per vertex, in vertex order.
    pub fn singleton(n: usize) -> Self {
        Colouring {
            n,
            classes: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_sizes(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c.len() as u32).collect()
    }

    pub fn class_mask(&self, i: usize) -> Face {
        self.classes[i].iter().fold(0, |a, &v| a | (1 << v))
    }

    /// `(class, 1-based position)` of every vertex.
    pub fn positions(&self) -> Vec<(usize, u32)> {
        let mut pos = vec![(0, 0); self.n];
        for (i, c) in self.classes.iter().enumerate() {
            for (j, &v) in c.iter().enumerate() {
                pos[v] = (i, j as u32 + 1);
            }
        }
        pos
    }

    pub fn with_classes(&self, classes: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(self.n, classes, true)
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::NotAPartition(format!(
                "colouring covers {} vertices, complex has {}",
                self.n, n
            )));
        }
        Ok(())
    }

    /// Errors with a witness edge if some class contains two vertices of a common face.
    pub fn check_proper(&self, delta: &SimplicialComplex) -> Result<()> {
        self.check_n(delta.n())?;
        for c in &self.classes {
            for (a, &u) in c.iter().enumerate() {
                for &v in &c[a + 1..] {
                    if delta.contains((1 << u) | (1 << v)) {
                        return Err(Error::NotProper(
                            delta.label(u).to_string(),
                            delta.label(v).to_string(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_proper(&self, delta: &SimplicialComplex) -> Result<bool> {
        match self.check_proper(delta) {
            Ok(()) => Ok(true),
            Err(Error::NotProper(..)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn is_proper_on_graph(&self, g: &SimpleGraph) -> Result<bool> {
        self.check_n(g.n())?;
        Ok(self
            .classes
            .iter()
            .all(|c| c.iter().all(|&u| c.iter().all(|&v| !g.has_edge(u, v)))))
    }

    /// `{d,a}|{b,e}|{c,f}` style, with `{}` for empty classes.
    pub fn format(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&v| labels[v].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        parts.join("|")
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.n).map(|v| v.to_string()).collect();
        f.write_str(&self.format(&labels))
    }
}

/// The preorder `u ≼ v ⇔ key(u) ⊇ key(v)`, where the key is the link of a
/// vertex (or its neighbourhood, for graphs).
#[derive(Debug, Clone)]
pub struct LinkPreorder {
    keys: Vec<Vec<Face>>,
}

fn is_superset(a: &[Face], b: &[Face]) -> bool {
    // Both sorted ascending by value.
    let mut i = 0;
    for &x in b {
        while i < a.len() && a[i] < x {
            i += 1;
        }
        if i == a.len() || a[i] != x {
            return false;
        }
    }
    true
}

impl LinkPreorder {
    pub fn of_complex(delta: &SimplicialComplex) -> Result<Self> {
        let mut keys = Vec::with_capacity(delta.n());
        for v in 0..delta.n() {
            let mut k = delta.link_faces(1 << v)?;
            k.sort_unstable();
            keys.push(k);
        }
        Ok(LinkPreorder { keys })
    }

    pub fn of_graph(g: &SimpleGraph) -> Self {
        let keys = (0..g.n())
            .map(|v| bits(g.neighbourhood(v)).map(|u| 1u64 << u).collect())
            .collect();
        LinkPreorder { keys }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// `key(u) ⊇ key(v)`.
    pub fn above(&self, u: usize, v: usize) -> bool {
        is_superset(&self.keys[u], &self.keys[v])
    }

    pub fn equivalent(&self, u: usize, v: usize) -> bool {
        self.keys[u] == self.keys[v]
    }

    pub fn key_size(&self, v: usize) -> usize {
        self.keys[v].len()
    }

    /// Sorts `class` by decreasing key, keeping input order on ties, and
    /// checks that consecutive keys are nested. On failure returns an
    /// incomparable pair in input order.
    pub fn order_class(&self, class: &[usize]) -> std::result::Result<Vec<usize>, (usize, usize)> {
        let mut order = class.to_vec();
        order.sort_by_key(|&v| std::cmp::Reverse(self.key_size(v)));
        for w in order.windows(2) {
            if !self.above(w[0], w[1]) {
                let pu = class.iter().position(|&x| x == w[0]).unwrap();
                let pv = class.iter().position(|&x| x == w[1]).unwrap();
                return Err(if pu < pv { (w[0], w[1]) } else { (w[1], w[0]) });
            }
        }
        Ok(order)
    }

    /// True iff the listed order is already a chain of decreasing keys.
    pub fn is_ordered(&self, class: &[usize]) -> bool {
        class.windows(2).all(|w| self.above(w[0], w[1]))
    }

    /// Minimum cover of the vertices by chains (Dilworth), each chain listed
    /// from largest to smallest key.
    pub fn min_chain_cover(&self) -> Vec<Vec<usize>> {
        let n = self.keys.len();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of: HashMap<&[Face], usize> = HashMap::new();
        for v in 0..n {
            let g = *group_of.entry(&self.keys[v]).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(v);
        }
        let m = groups.len();
        let rep: Vec<usize> = groups.iter().map(|g| g[0]).collect();
        let succ: Vec<Vec<usize>> = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| a != b && self.above(rep[a], rep[b]))
                    .collect()
            })
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; m];
        for a in 0..m {
            let mut seen = vec![false; m];
            augment(a, &succ, &mut match_right, &mut seen);
        }
        let mut next: Vec<Option<usize>> = vec![None; m];
        let mut has_pred = vec![false; m];
        for (b, a) in match_right.iter().enumerate() {
            if let Some(a) = a {
                next[*a] = Some(b);
                has_pred[b] = true;
            }
        }
        let mut chains = Vec::new();
        for start in 0..m {
            if has_pred[start] {
                continue;
            }
            let mut chain = Vec::new();
            let mut cur = Some(start);
            while let Some(g) = cur {
                chain.extend_from_slice(&groups[g]);
                cur = next[g];
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| *c.iter().min().unwrap());
        chains
    }
}

fn augment(
    a: usize,
    succ: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &b in &succ[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if match_right[b].is_none() || augment(match_right[b].unwrap(), succ, match_right, seen) {
            match_right[b] = Some(a);
            return true;
        }
    }
    false
}

/// Outcome of a nestedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nestedness {
    /// Every class admits a nesting order; the colouring is returned with
    /// each class in its canonical nesting order.
    Nested(Colouring),
    /// Class `class` contains `u` (listed first) and `v` with incomparable links.
    NotNested { class: usize, u: usize, v: usize },
}

impl Nestedness {
    pub fn is_nested(&self) -> bool {
        matches!(self, Nestedness::Nested(_))
    }

    pub fn into_result(self, delta: &SimplicialComplex) -> Result<Colouring> {
        match self {
            Nestedness::Nested(c) => Ok(c),
            Nestedness::NotNested { u, v, .. } => Err(Error::NotNested(
                delta.label(u).to_string(),
                delta.label(v).to_string(),
            )),
        }
    }
}

fn check_independent(delta: &SimplicialComplex, class: &[usize]) -> Result<()> {
    for (a, &u) in class.iter().enumerate() {
        for &v in &class[a + 1..] {
            if delta.contains((1 << u) | (1 << v)) {
                return Err(Error::NotProper(
                    delta.label(u).to_string(),
                    delta.label(v).to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Orders an independent set by decreasing link, or returns an incomparable pair.
pub fn nesting_order(
    delta: &SimplicialComplex,
    class: &[usize],
) -> Result<std::result::Result<Vec<usize>, (usize, usize)>> {
    check_independent(delta, class)?;
    let mut keys = Vec::new();
    for &v in class {
        let mut k = delta.link_faces(1 << v)?;
        k.sort_unstable();
        keys.push(k);
    }
    let local = LinkPreorder { keys };
    let idx: Vec<usize> = (0..class.len()).collect();
    Ok(local
        .order_class(&idx)
        .map(|o| o.into_iter().map(|i| class[i]).collect())
        .map_err(|(a, b)| (class[a], class[b])))
}

pub fn is_nested(delta: &SimplicialComplex, c: &Colouring) -> Result<Nestedness> {
    c.check_proper(delta)?;
    let pre = LinkPreorder::of_complex(delta)?;
    nestedness_from(&pre, c)
}

fn nestedness_from(pre: &LinkPreorder, c: &Colouring) -> Result<Nestedness> {
    let mut classes = Vec::with_capacity(c.k());
    for (i, class) in c.classes().iter().enumerate() {
        match pre.order_class(class) {
            Ok(o) => classes.push(o),
            Err((u, v)) => return Ok(Nestedness::NotNested { class: i, u, v }),
        }
    }
    Ok(Nestedness::Nested(c.with_classes(classes)?))
}

/// True iff every class is listed in a nesting order (largest link first).
pub fn is_nesting_ordered(delta: &SimplicialComplex, c: &Colouring) -> Result<bool> {
    c.check_proper(delta)?;
    let pre = LinkPreorder::of_complex(delta)?;
    Ok(c.classes().iter().all(|cl| pre.is_ordered(cl)))
}

/// Like [`is_nesting_ordered`], but reports the offending pair.
pub fn check_nesting_ordered(delta: &SimplicialComplex, c: &Colouring) -> Result<()> {
    is_nested(delta, c)?.into_result(delta)?;
    let pre = LinkPreorder::of_complex(delta)?;
    for cl in c.classes() {
        if let Some(w) = cl.windows(2).find(|w| !pre.above(w[0], w[1])) {
            return Err(Error::NotNested(
                delta.label(w[0]).to_string(),
                delta.label(w[1]).to_string(),
            ));
        }
    }
    Ok(())
}

/// Proper on `g` with classes linearly ordered by neighbourhood containment.
pub fn is_nested_on_graph(g: &SimpleGraph, c: &Colouring) -> Result<bool> {
    if !c.is_proper_on_graph(g)? {
        return Ok(false);
    }
    let pre = LinkPreorder::of_graph(g);
    Ok(nestedness_from(&pre, c)?.is_nested())
}

/// `χ_N(Δ)` with a nested witness colouring.
pub fn nested_chromatic_number(delta: &SimplicialComplex) -> Result<(usize, Colouring)> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let pre = LinkPreorder::of_complex(delta)?;
    let chains = pre.min_chain_cover();
    let c = Colouring::new(delta.n(), chains, false)?;
    Ok((c.k(), c))
}

/// `χ_N(G)` with a witness colouring, using neighbourhoods in place of links.
pub fn graph_nested_colouring(g: &SimpleGraph) -> Colouring {
    let chains = LinkPreorder::of_graph(g).min_chain_cover();
    Colouring::new(g.n(), chains, false).expect("chain cover is a partition")
}

pub fn graph_nested_chromatic_number(g: &SimpleGraph) -> usize {
    graph_nested_colouring(g).k()
}

/// Exact chromatic number of the underlying graph.
pub fn chromatic_number(delta: &SimplicialComplex, lim: &Limits) -> Result<usize> {
    limits::check("vertex count", delta.n(), lim.max_vertices)?;
    let g = delta.underlying_graph();
    Ok(graph_chromatic_number(&g))
}

pub fn graph_chromatic_number(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let lower = g
        .maximal_cliques()
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.neighbourhood(v).count_ones()));
    (lower..=n)
        .find(|&k| {
            let mut col = vec![usize::MAX; n];
            colour_from(g, &order, 0, k, &mut col, 0)
        })
        .unwrap_or(n)
}

fn colour_from(
    g: &SimpleGraph,
    order: &[usize],
    pos: usize,
    k: usize,
    col: &mut [usize],
    used: usize,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // Symmetry breaking: never open more than one new colour at a time.
    for c in 0..k.min(used + 1) {
        if bits(g.neighbourhood(v)).any(|u| col[u] == c) {
            continue;
        }
        col[v] = c;
        if colour_from(g, order, pos + 1, k, col, used.max(c + 1)) {
            return true;
        }
    }
    col[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            ["a", "b", "c", "d", "e", "f"],
            [vec!["a", "b", "c"], vec!["b", "c", "d"], vec!["c", "e"], vec!["d", "e"], vec!["d", "f"]],
        )
        .unwrap()
    }

    fn col(d: &SimplicialComplex, cls: &[&str]) -> Colouring {
        let classes: Vec<Vec<String>> = cls
            .iter()
            .map(|c| c.chars().map(|ch| ch.to_string()).collect())
            .collect();
        Colouring::from_labels(d, classes, false).unwrap()
    }

    #[test]
    fn partition_checks() {
        assert!(Colouring::new(2, vec![vec![0]], false).is_err());
        assert!(Colouring::new(2, vec![vec![0, 1], vec![1]], false).is_err());
        assert!(Colouring::new(1, vec![vec![0], vec![]], false).is_err());
        assert!(Colouring::new(1, vec![vec![0], vec![]], true).is_ok());
    }

    #[test]
    fn properness() {
        let d = running();
        assert!(col(&d, &["da", "be", "cf"]).is_proper(&d).unwrap());
        assert!(Colouring::singleton(6).is_proper(&d).unwrap());
        let ab = SimplicialComplex::from_facets(["a", "b"], [vec!["a", "b"]]).unwrap();
        assert!(!col(&ab, &["ab"]).is_proper(&ab).unwrap());
    }

    #[test]
    fn nesting_orders() {
        let d = running();
        assert_eq!(nesting_order(&d, &[3, 0]).unwrap(), Ok(vec![3, 0]));
        assert_eq!(nesting_order(&d, &[0, 3]).unwrap(), Ok(vec![3, 0]));
        assert_eq!(nesting_order(&d, &[0, 5]).unwrap(), Err((0, 5)));
        assert_eq!(nesting_order(&d, &[4, 1]).unwrap(), Ok(vec![1, 4]));
        assert_eq!(nesting_order(&d, &[2]).unwrap(), Ok(vec![2]));
        assert!(nesting_order(&d, &[0, 1]).is_err());
    }

    #[test]
    fn nestedness() {
        let d = running();
        let c = col(&d, &["da", "be", "cf"]);
        assert!(is_nested(&d, &c).unwrap().is_nested());
        assert!(is_nesting_ordered(&d, &c).unwrap());
        assert!(!is_nesting_ordered(&d, &col(&d, &["ad", "be", "cf"])).unwrap());
        let bad = col(&d, &["af", "be", "c", "d"]);
        let r = is_nested(&d, &bad).unwrap();
        assert_eq!(r, Nestedness::NotNested { class: 0, u: 0, v: 5 });
        assert_eq!(
            r.into_result(&d).unwrap_err().to_string(),
            "not nested: link(f) ⊄ link(a)"
        );
    }

    #[test]
    fn chromatic_numbers() {
        let d = running();
        let (k, w) = nested_chromatic_number(&d).unwrap();
        assert_eq!(k, 3);
        assert!(is_nested(&d, &w).unwrap().is_nested());
        assert_eq!(chromatic_number(&d, &Limits::default()).unwrap(), 3);
        assert_eq!(graph_nested_chromatic_number(&d.underlying_graph()), 3);
        let g = SimplicialComplex::from_facets(
            ["a", "b", "c", "d", "e"],
            [vec!["a", "b", "c"], vec!["b", "d"], vec!["c", "d", "e"]],
        )
        .unwrap();
        assert_eq!(nested_chromatic_number(&g).unwrap().0, 5);
        assert_eq!(graph_nested_chromatic_number(&g.underlying_graph()), 3);
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        assert_eq!(graph_nested_chromatic_number(&SimpleGraph::edgeless(labels.clone())), 1);
        assert_eq!(graph_chromatic_number(&SimpleGraph::edgeless(labels.clone())), 1);
        assert_eq!(graph_chromatic_number(&SimpleGraph::complete(labels)), 4);
    }
}
