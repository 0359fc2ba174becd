mod common;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use common::*;
use ufi::colouring::{
    check_nesting_ordered, graph_nested_chromatic_number, is_nested, is_nested_on_graph,
    nested_chromatic_number,
};
use ufi::cubical::cubical_complex;
use ufi::invariants::{bsd_quotient, hilbert_summary, pure_diagram};
use ufi::monomial::{betti_oracle, MonomialIdeal};
use ufi::poset::{index_vector_poset, minimal_nonface_poset};
use ufi::primes::is_unmixed;
use ufi::simplicial::bvt_complex;
use ufi::ufi::{power_as_ufi, product_as_ufi, IndexVector};
use ufi::{uniform_face_ideal, Colouring, SimplicialComplex};

fn faces(d: &SimplicialComplex, fs: &[u64]) -> BTreeSet<String> {
    fs.iter().map(|&f| d.format_face(f).replace(['{', '}', ',', ' '], "")).collect()
}

fn strs(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn iv(v: &[u32]) -> IndexVector {
    IndexVector(v.to_vec())
}

#[test]
fn running_f_vectors_of_links() {
    let d = running();
    assert_eq!(d.f_vector().unwrap().entries, vec![1, 6, 8, 2]);
    let expected: [(&str, &[usize]); 6] = [
        ("a", &[1, 2, 1]),
        ("b", &[1, 3, 2]),
        ("c", &[1, 4, 2]),
        ("d", &[1, 4, 1]),
        ("e", &[1, 2]),
        ("f", &[1, 1]),
    ];
    for (v, f) in expected {
        let i = d.index_of(v).unwrap();
        assert_eq!(d.link(1 << i).unwrap().f_vector().unwrap().entries, f, "link of {v}");
    }
}

#[test]
fn running_minimal_nonfaces() {
    let d = running();
    assert_eq!(
        faces(&d, &d.minimal_nonfaces()),
        strs(&["ad", "ae", "af", "be", "bf", "cde", "cf", "ef"])
    );
    assert!(!d.is_flag());
}

#[test]
fn twenty_proper_fourteen_nested() {
    let d = running();
    let all = all_proper_partitions(&d);
    assert_eq!(all.len(), 20);
    let nested = all.iter().filter(|c| is_nested(&d, c).unwrap().is_nested()).count();
    assert_eq!(nested, 14);
    let g = d.underlying_graph();
    for c in &all {
        assert_eq!(
            is_nested(&d, c).unwrap().is_nested(),
            is_nested_on_graph(&g, c).unwrap(),
            "{c}"
        );
    }
}

#[test]
fn non_nested_colouring_names_the_links() {
    let d = running();
    let c = colouring(&d, &["af", "be", "c", "d"]);
    assert!(!is_nested(&d, &c).unwrap().is_nested());
    let e = check_nesting_ordered(&d, &c).unwrap_err().to_string();
    assert!(e.contains("link(f)") && e.contains("link(a)"), "{e}");
}

#[test]
fn gamma_has_larger_nested_chromatic_number() {
    let g = complex(&["abc", "bd", "cde"]);
    assert_eq!(nested_chromatic_number(&g).unwrap().0, 5);
    let graph = g.underlying_graph();
    assert_eq!(graph_nested_chromatic_number(&graph), 3);
    let c = colouring(&complex(&["abc", "bd", "ce", "cd", "de"]), &["da", "be", "c"]);
    assert!(is_nested_on_graph(&graph, &c).unwrap());
    assert!(!is_nested(&g, &c).unwrap().is_nested());
}

#[test]
fn product_example() {
    let d = complex(&["abc", "cd"]);
    let c = colouring(&d, &["ad", "b", "c"]);
    let g = complex(&["ab", "ac"]);
    let e = Colouring::singleton(3);
    let (s, f) = product_as_ufi(&d, &c, &g, &e).unwrap();
    assert_eq!(
        faces(&s, s.facets()),
        strs(&["adf", "adg", "aef", "bdf", "bdg", "bef", "cdf", "cg"])
    );
    assert_eq!(f.classes(), &[vec![0, 1, 2], vec![3, 4], vec![5, 6]]);
    assert!(is_nested(&s, &f).unwrap().is_nested());
    let prod = uniform_face_ideal(&d, &c)
        .unwrap()
        .multiply(&uniform_face_ideal(&g, &e).unwrap())
        .unwrap();
    assert_eq!(uniform_face_ideal(&s, &f).unwrap(), prod);
}

#[test]
fn singleton_ideal_is_dual_of_bvt_complex() {
    let d = running();
    let s = Colouring::singleton(6);
    let bvt = bvt_complex(&d, &s).unwrap();
    let dual = MonomialIdeal::stanley_reisner(&bvt.alexander_dual());
    let ufi = uniform_face_ideal(&d, &s).unwrap();
    assert_eq!(dual.gens(), ufi.gens());

    let vars = ufi.vars().to_vec();
    let sr = MonomialIdeal::stanley_reisner(&bvt);
    let shown = [
        "x1*y1", "x2*y2", "x3*y3", "x4*y4", "x5*y5", "x6*y6", "x1*x4", "x1*x5", "x1*x6", "x2*x5",
        "x2*x6", "x3*x6", "x5*x6", "x3*x4*x5",
    ];
    let got: BTreeSet<String> = sr.gens().iter().map(|m| m.format(&vars)).collect();
    let want: BTreeSet<String> = shown
        .iter()
        .map(|g| ufi::monomial::Monomial::parse(&vars, g).unwrap().format(&vars))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn non_meet_semilattice_example() {
    let d = complex(&["ab", "cd"]);
    let p = index_vector_poset(&d, &colouring(&d, &["ca", "bd"])).unwrap();
    assert!(!p.is_meet_semilattice());
    let nested: Vec<Colouring> = all_proper_partitions(&d)
        .into_iter()
        .filter(|c| is_nested(&d, c).unwrap().is_nested())
        .collect();
    assert_eq!(nested, vec![Colouring::singleton(4)]);
}

#[test]
fn awkward_covering_relation() {
    let d = complex(&["ab", "cd"]);
    assert_eq!(d.f_vector().unwrap().entries, vec![1, 4, 2]);
    let c = colouring(&d, &["ac", "bd"]);
    assert!(index_vector_poset(&d, &c).unwrap().is_meet_semilattice());
    let b = betti_oracle(&uniform_face_ideal(&d, &c).unwrap()).unwrap().graded();
    assert_eq!(b.column_totals()[1], 9);
}

#[test]
fn quotient_pure_diagrams() {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let bq = bsd_quotient(&running(), &running_c()).unwrap();
    let shown = [
        (26, vec![0, 6, 7], vec![r(1, 42), r(1, 6), r(1, 7)]),
        (116, vec![0, 6, 7, 8], vec![r(1, 336), r(1, 12), r(1, 7), r(1, 16)]),
        (108, vec![0, 6, 7, 8, 9], vec![r(1, 3024), r(1, 36), r(1, 14), r(1, 16), r(1, 54)]),
    ];
    for (t, (a, degs, entries)) in bq.terms.iter().zip(shown) {
        assert_eq!(t.coefficient, r(a, 1));
        assert_eq!(t.diagram.degrees, degs);
        let abs: Vec<BigRational> = t.diagram.entries.iter().map(|e| e.abs()).collect();
        assert_eq!(abs, entries);
        assert_eq!(pure_diagram(&degs).unwrap(), t.diagram);
    }
}

#[test]
fn nonface_poset_of_running_example() {
    let (d, c) = (running(), running_c());
    let n = minimal_nonface_poset(&d, &c).unwrap();
    assert_eq!(n.len(), 5);
    assert_eq!(
        n.minimal_elements(),
        vec![iv(&[0, 1, 2]), iv(&[1, 2, 1]), iv(&[2, 0, 2]), iv(&[2, 2, 0])]
    );
}

#[test]
fn persistence_example() {
    let d = running();
    let dd = running_d();
    let mut min = minimal_nonface_poset(&d, &dd).unwrap().minimal_elements();
    min.sort();
    let mut shown = vec![
        iv(&[2, 2, 0, 0]),
        iv(&[2, 0, 0, 1]),
        iv(&[0, 1, 0, 1]),
        iv(&[0, 0, 1, 1]),
        iv(&[1, 2, 1, 0]),
    ];
    shown.sort();
    assert_eq!(min, shown);
    assert!(is_unmixed(&d, &running_c()).unwrap());
    assert!(is_unmixed(&d, &dd).unwrap());

    let (g2, d2) = power_as_ufi(&d, &dd, 2).unwrap();
    let min2 = minimal_nonface_poset(&g2, &d2).unwrap().minimal_elements();
    assert!(min2.contains(&iv(&[3, 2, 0, 1])));
    assert!(min2.contains(&iv(&[2, 2, 1, 1])));
    assert!(is_unmixed(&g2, &d2).unwrap());
}

#[test]
fn hilbert_data_of_running_example() {
    let h = hilbert_summary(&running(), &running_c()).unwrap();
    assert_eq!(h.multiplicity, 13);
    assert_eq!((h.codim, h.dim), (2, 4));
    assert_eq!((h.pdim, h.depth), (4, 2));
    assert!(!h.cohen_macaulay);
}

#[test]
fn cubical_complex_of_running_example() {
    let cc = cubical_complex(&running(), &running_c()).unwrap();
    assert_eq!(cc.f_vector(), vec![17, 28, 14, 2]);
    assert_eq!(cc.dim(), 3);
    cc.validate().unwrap();
}
