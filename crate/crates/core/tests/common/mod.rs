#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use ufi::colouring::{nested_chromatic_number, Colouring};
use ufi::simplicial::{bits, Face, SimplicialComplex};

pub fn complex(facets: &[&str]) -> SimplicialComplex {
    let mut labels: Vec<String> = facets
        .iter()
        .flat_map(|f| f.chars())
        .map(String::from)
        .collect();
    labels.sort();
    labels.dedup();
    let fs: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.chars().map(String::from).collect())
        .collect();
    SimplicialComplex::from_facets(labels, fs).unwrap()
}

pub fn colouring(d: &SimplicialComplex, classes: &[&str]) -> Colouring {
    let cls: Vec<Vec<String>> = classes
        .iter()
        .map(|c| c.chars().map(String::from).collect())
        .collect();
    Colouring::from_labels(d, cls, false).unwrap()
}

/// `Δ = ⟨abc,bcd,ce,de,df⟩`.
pub fn running() -> SimplicialComplex {
    complex(&["abc", "bcd", "ce", "de", "df"])
}

/// `{d,a} | {b,e} | {c,f}`.
pub fn running_c() -> Colouring {
    colouring(&running(), &["da", "be", "cf"])
}

/// `{d,a} | {b,e} | {c} | {f}`.
pub fn running_d() -> Colouring {
    colouring(&running(), &["da", "be", "c", "f"])
}

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// A complex on `0..n` with every vertex used, from faces given as masks.
pub fn from_faces(n: usize, faces: &[Face]) -> SimplicialComplex {
    let mut all: Vec<Face> = faces.to_vec();
    all.extend((0..n).map(|v| 1 << v));
    all.push(0);
    SimplicialComplex::from_masks(letters(n), all)
}

/// Every simplicial complex on exactly the vertices `0..n`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut cands: Vec<Face> = (0u64..(1 << n)).filter(|m| m.count_ones() >= 2).collect();
    cands.sort_by_key(|m| (m.count_ones(), *m));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        i: usize,
        n: usize,
        cands: &[Face],
        chosen: &mut Vec<Face>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if i == cands.len() {
            out.push(from_faces(n, chosen));
            return;
        }
        go(i + 1, n, cands, chosen, out);
        let f = cands[i];
        let closed = f.count_ones() == 2
            || bits(f).all(|v| chosen.contains(&(f & !(1 << v))));
        if closed {
            chosen.push(f);
            go(i + 1, n, cands, chosen, out);
            chosen.pop();
        }
    }
    go(0, n, &cands, &mut chosen, &mut out);
    out
}

/// Every proper colouring with ordered classes, classes listed by least vertex.
pub fn all_ordered_colourings(d: &SimplicialComplex) -> Vec<Colouring> {
    let mut out = Vec::new();
    fn go(v: usize, d: &SimplicialComplex, classes: &mut Vec<Vec<usize>>, out: &mut Vec<Colouring>) {
        if v == d.n() {
            out.push(Colouring::new(d.n(), classes.clone(), false).unwrap());
            return;
        }
        for i in 0..classes.len() {
            if classes[i].iter().any(|&u| d.contains((1 << u) | (1 << v))) {
                continue;
            }
            for p in 0..=classes[i].len() {
                classes[i].insert(p, v);
                go(v + 1, d, classes, out);
                classes[i].remove(p);
            }
        }
        classes.push(vec![v]);
        go(v + 1, d, classes, out);
        classes.pop();
    }
    go(0, d, &mut Vec::new(), &mut out);
    out
}

/// A random complex on exactly `n` vertices.
pub fn random_complex(rng: &mut StdRng, n: usize) -> SimplicialComplex {
    let m = rng.gen_range(1..=n + 1);
    let p = rng.gen_range(0.2..0.7);
    let mut faces = Vec::new();
    for _ in 0..m {
        let f: Face = (0..n).filter(|_| rng.gen_bool(p)).fold(0, |a, v| a | (1 << v));
        faces.push(f);
    }
    from_faces(n, &faces)
}

/// A nested colouring listed in a nesting order: a minimum chain cover with
/// chains randomly cut into pieces and classes shuffled.
pub fn random_nested_colouring(rng: &mut StdRng, d: &SimplicialComplex) -> Colouring {
    let (_, c) = nested_chromatic_number(d).unwrap();
    let mut classes = Vec::new();
    for chain in c.classes() {
        let mut cur = Vec::new();
        for &v in chain {
            if !cur.is_empty() && rng.gen_bool(0.25) {
                classes.push(std::mem::take(&mut cur));
            }
            cur.push(v);
        }
        classes.push(cur);
    }
    classes.shuffle(rng);
    Colouring::new(d.n(), classes, false).unwrap()
}

pub fn random_nested(rng: &mut StdRng, max_n: usize) -> (SimplicialComplex, Colouring) {
    let n = rng.gen_range(1..=max_n);
    let d = random_complex(rng, n);
    let c = random_nested_colouring(rng, &d);
    (d, c)
}

/// Splits classes of a nested colouring until it has `k` classes, padding
/// with empty classes if there are too few vertices.
pub fn with_class_count(c: &Colouring, k: usize) -> Colouring {
    let mut classes: Vec<Vec<usize>> = c.classes().to_vec();
    while classes.len() < k {
        match classes.iter().position(|cl| cl.len() >= 2) {
            Some(i) => {
                let tail = classes[i].split_off(1);
                classes.push(tail);
            }
            None => classes.push(Vec::new()),
        }
    }
    Colouring::new(c.n(), classes, true).unwrap()
}

/// Every proper colouring as an unordered set partition into independent sets.
pub fn all_proper_partitions(d: &SimplicialComplex) -> Vec<Colouring> {
    let mut out = Vec::new();
    fn go(v: usize, d: &SimplicialComplex, classes: &mut Vec<Vec<usize>>, out: &mut Vec<Colouring>) {
        if v == d.n() {
            out.push(Colouring::new(d.n(), classes.clone(), false).unwrap());
            return;
        }
        for i in 0..classes.len() {
            if classes[i].iter().all(|&u| !d.contains((1 << u) | (1 << v))) {
                classes[i].push(v);
                go(v + 1, d, classes, out);
                classes[i].pop();
            }
        }
        classes.push(vec![v]);
        go(v + 1, d, classes, out);
        classes.pop();
    }
    go(0, d, &mut Vec::new(), &mut out);
    out
}
