use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use ufi::colouring::{
    check_nesting_ordered, chromatic_number, graph_nested_colouring, is_nested, Nestedness,
};
use ufi::cubical::{
    cellular_free_complex, collapse_sequence, cubical_complex, labeled_complex,
    predicted_f_vector, verify_resolution,
};
use ufi::invariants::{
    betti_closed_form, bsd_generic, bsd_ideal, bsd_quotient, divide_one_minus_t, hilbert_summary,
    one_minus_t_multiplicity, render_betti_compact, BSDecomposition,
};
use ufi::io::Instance;
use ufi::monomial::{
    betti_oracle_with, hilbert_numerator_with, irreducible_decomposition_with,
    IrreducibleComponent, MultigradedBettiTable,
};
use ufi::poset::{first_betti_lower_bound, index_vector_poset};
use ufi::primes::{
    is_unmixed, persistence_report, ufi_associated_primes, ufi_irreducible_decomposition, PrimeSet,
};
use ufi::ufi::{face_tag, power_as_ufi, product_as_ufi, UfiContext};
use ufi::{BettiTable, Colouring, ErrorKind, Limits, MonomialIdeal};

use crate::input::Input;
use crate::{Failure, Options};

pub struct Report {
    pub text: String,
    pub json: Value,
    /// A closed form disagreed with its oracle.
    pub mismatch: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            mismatch: false,
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classes_json(c: &Colouring, labels: &[String]) -> Value {
    json!(c
        .classes()
        .iter()
        .map(|cl| cl.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn table_json(t: &BettiTable) -> Value {
    json!(t.iter().map(|(i, j, v)| json!([i, j, v])).collect::<Vec<_>>())
}

fn poly_string(p: &[i64]) -> String {
    let mut s = String::new();
    for (d, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        match (d, mag) {
            (0, m) => write!(s, "{m}").unwrap(),
            (1, 1) => s.push('t'),
            (1, m) => write!(s, "{m}t").unwrap(),
            (_, 1) => write!(s, "t^{d}").unwrap(),
            (_, m) => write!(s, "{m}t^{d}").unwrap(),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn check(input: &Input) -> Result<Report, Failure> {
    let inst = input.instance()?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let labels = d.labels();
    let f = d.f_vector()?.entries;
    let mut text = String::new();
    writeln!(text, "vertices: {}", labels.join(" ")).unwrap();
    writeln!(text, "f-vector: {f:?}").unwrap();
    writeln!(text, "colouring: {}", c.format(labels)).unwrap();
    if let Err(e) = c.check_proper(d) {
        writeln!(text, "proper: no ({e})").unwrap();
        let json = json!({"f_vector": f, "proper": false, "witness": e.to_string()});
        return Ok(Report::new(text, json));
    }
    writeln!(text, "proper: yes").unwrap();
    let json = match is_nested(d, c)? {
        Nestedness::Nested(ordered) => {
            writeln!(text, "nested: yes").unwrap();
            writeln!(text, "nesting order: {}", ordered.format(labels)).unwrap();
            let listed = check_nesting_ordered(d, c);
            match &listed {
                Ok(()) => writeln!(text, "listed in nesting order: yes").unwrap(),
                Err(e) => writeln!(text, "listed in nesting order: no ({e})").unwrap(),
            }
            json!({
                "f_vector": f,
                "proper": true,
                "nested": true,
                "nesting_order": classes_json(&ordered, labels),
                "ordered": listed.is_ok(),
                "witness": listed.err().map(|e| e.to_string()),
            })
        }
        n => {
            let e = n.into_result(d).unwrap_err();
            writeln!(text, "nested: no ({e})").unwrap();
            json!({
                "f_vector": f,
                "proper": true,
                "nested": false,
                "ordered": false,
                "witness": e.to_string(),
            })
        }
    };
    Ok(Report::new(text, json))
}

pub fn chromatic(input: &Input, opts: &Options) -> Result<Report, Failure> {
    let inst = input.instance()?;
    let d = &inst.complex;
    let labels = d.labels();
    let chi = chromatic_number(d, &opts.limits())?;
    let (chi_n, witness) = ufi::nested_chromatic_number(d)?;
    let graph = graph_nested_colouring(&d.underlying_graph());
    let text = format!(
        "chromatic number: {chi}\nnested chromatic number: {chi_n}\nnested colouring: {}\n\
         nested chromatic number of the underlying graph: {}\nnested colouring of the graph: {}\n",
        witness.format(labels),
        graph.k(),
        graph.format(labels),
    );
    let json = json!({
        "chromatic_number": chi,
        "nested_chromatic_number": chi_n,
        "witness": classes_json(&witness, labels),
        "graph_nested_chromatic_number": graph.k(),
        "graph_witness": classes_json(&graph, labels),
    });
    Ok(Report::new(text, json))
}

pub fn ideal(input: &Input, tag_faces: bool) -> Result<Report, Failure> {
    let ideal = match input {
        Input::Ideal(i) => i.clone(),
        _ => {
            let inst = input.instance()?;
            let ctx = UfiContext::new(&inst.complex, &inst.colouring)?;
            if tag_faces {
                let tagged: Vec<(String, String)> = ctx
                    .tagged_generators()
                    .into_iter()
                    .map(|(f, m)| (face_tag(&inst.complex, f), m.format(ctx.vars())))
                    .collect();
                let w = tagged.iter().map(|t| t.0.chars().count()).max().unwrap_or(0);
                let mut text = String::new();
                for (tag, m) in &tagged {
                    let pad = w - tag.chars().count();
                    writeln!(text, "{tag}{}  {m}", " ".repeat(pad)).unwrap();
                }
                let json = json!({
                    "variables": ctx.vars(),
                    "generators": tagged.iter().map(|t| t.1.clone()).collect::<Vec<_>>(),
                    "faces": tagged.iter().map(|t| t.0.clone()).collect::<Vec<_>>(),
                });
                return Ok(Report::new(text, json));
            }
            ctx.ideal()
        }
    };
    let mut text = ideal.format_gens().join("\n");
    text.push('\n');
    let json = serde_json::to_value(ideal.to_json()).expect("serializable");
    Ok(Report::new(text, json))
}

pub fn poset(input: &Input) -> Result<Report, Failure> {
    let (p, vertices) = match input {
        Input::Poset(p, j) => (p.clone(), j.vertices.clone()),
        _ => {
            let inst = input.instance()?;
            inst.colouring.check_proper(&inst.complex)?;
            (
                index_vector_poset(&inst.complex, &inst.colouring)?,
                inst.complex.labels().to_vec(),
            )
        }
    };
    let j = p.to_json(&vertices);
    let names = |i: usize| -> String {
        let e = &j.elements[i];
        match &e.face {
            Some(f) if f.is_empty() => format!("{} ∅", p.element(i)),
            Some(f) => format!("{} {}", p.element(i), f.concat()),
            None => p.element(i).to_string(),
        }
    };
    let text = p.to_dot(Some(&names));
    Ok(Report::new(text, serde_json::to_value(&j).expect("serializable")))
}

fn nested(input: &Input) -> Result<&Instance, Failure> {
    let inst = input.instance()?;
    check_nesting_ordered(&inst.complex, &inst.colouring)?;
    Ok(inst)
}

pub fn cubical(input: &Input, dot: bool, resolution: bool, opts: &Options) -> Result<Report, Failure> {
    let inst = nested(input)?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let cc = cubical_complex(d, c)?;
    let ctx = UfiContext::new(d, c)?;
    if dot {
        let tags: HashMap<_, _> = d
            .faces()
            .iter()
            .map(|&f| (ctx.index_vector(f), face_tag(d, f)))
            .collect();
        let names = |e: &ufi::IndexVector| format!("{e} {}", tags[e]);
        let text = cc.to_dot(Some(&names));
        return Ok(Report::new(text.clone(), json!({ "dot": text })));
    }
    let seq = collapse_sequence(&cc)?;
    let fv = cc.f_vector();
    let mut text = format!(
        "f-vector: {}\ndimension: {}\ncollapses to a point in {} steps\n",
        fv.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        cc.dim(),
        seq.len()
    );
    let mut json = json!({
        "f_vector": fv,
        "dimension": cc.dim(),
        "collapses": seq.len(),
    });
    if !resolution {
        return Ok(Report::new(text, json));
    }
    let l = labeled_complex(d, c)?;
    let f = cellular_free_complex(&l);
    let rep = verify_resolution(&f, &ctx.ideal(), &opts.limits())?;
    let agree = rep.cell_betti == rep.homology_betti;
    let rj = f.to_json(&cc);
    let ranks: Vec<String> = f
        .ranks()
        .iter()
        .filter(|r| r.0 >= 0)
        .map(|(i, r)| format!("F_{i} {r}"))
        .collect();
    writeln!(text, "ranks: {}", ranks.join(", ")).unwrap();
    writeln!(text, "labels strictly increase: {}", yes(l.is_minimal())).unwrap();
    writeln!(text, "δ² = 0: {}", yes(rep.d_squared_zero)).unwrap();
    writeln!(
        text,
        "acyclic in all {} lcm-lattice degrees: {}",
        rep.multidegrees,
        yes(rep.non_acyclic.is_empty())
    )
    .unwrap();
    writeln!(text, "cell counts match homology: {}", yes(agree)).unwrap();
    for t in rj.terms.iter().skip(2) {
        let prev = &rj.terms[(t.degree) as usize];
        writeln!(text, "F_{} -> F_{}", t.degree, t.degree - 1).unwrap();
        for (b, image) in t.basis.iter().zip(&t.differential) {
            let parts: Vec<String> = image
                .iter()
                .map(|e| {
                    let sign = if e.sign < 0 { "-" } else { "+" };
                    format!("{sign}{} {}", e.coefficient, prev.basis[e.target].cell)
                })
                .collect();
            writeln!(text, "  {} [{}] ↦ {}", b.cell, b.label, parts.join(" ")).unwrap();
        }
    }
    json["resolution"] = serde_json::to_value(&rj).expect("serializable");
    json["verification"] = json!({
        "lattice_degrees": rep.multidegrees,
        "cell_degrees": rep.cell_multidegrees,
        "non_acyclic": rep.non_acyclic.iter().map(|m| m.format(&rj.variables)).collect::<Vec<_>>(),
        "d_squared_zero": rep.d_squared_zero,
        "minimal": l.is_minimal(),
        "betti_agree": agree,
    });
    let mut r = Report::new(text, json);
    r.mismatch = !(rep.is_resolution() && agree && l.is_minimal());
    Ok(r)
}

fn oracle_table(i: &MonomialIdeal, lim: &Limits) -> ufi::Result<MultigradedBettiTable> {
    betti_oracle_with(i, lim, None)
}

pub fn betti(input: &Input, oracle: bool, opts: &Options) -> Result<Report, Failure> {
    let lim = opts.limits();
    if let Input::Ideal(i) = input {
        let t = oracle_table(i, &lim)?.graded();
        return Ok(Report::new(
            render_betti_compact(&t),
            json!({ "oracle": table_json(&t) }),
        ));
    }
    let inst = input.instance()?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let closed = betti_closed_form(d, c);
    if !oracle {
        let t = closed?;
        return Ok(Report::new(render_betti_compact(&t), json!({ "table": table_json(&t) })));
    }
    let i = UfiContext::new(d, c)?.ideal();
    let o = oracle_table(&i, &lim)?.graded();
    match closed {
        Ok(t) => {
            let same = t == o;
            let mut text = render_betti_compact(&t);
            if same {
                text.push_str("oracle: agrees\n");
            } else {
                text.push_str("oracle: differs\n");
                text.push_str(&render_betti_compact(&o));
            }
            let json = json!({ "table": table_json(&t), "oracle": table_json(&o), "agree": same });
            let mut r = Report::new(text, json);
            r.mismatch = !same;
            Ok(r)
        }
        Err(e) if e.kind() == ErrorKind::Precondition => {
            let mut text = render_betti_compact(&o);
            writeln!(text, "closed form not applicable: {e}").unwrap();
            Ok(Report::new(text, json!({ "oracle": table_json(&o), "closed_form": e.to_string() })))
        }
        Err(e) => Err(e.into()),
    }
}

fn bs_json(b: &BSDecomposition) -> Value {
    json!(b
        .terms
        .iter()
        .map(|t| json!({"coefficient": t.coefficient.to_string(), "degrees": t.diagram.degrees}))
        .collect::<Vec<_>>())
}

pub fn bs(input: &Input, quotient: bool, oracle: bool, opts: &Options) -> Result<Report, Failure> {
    let lim = opts.limits();
    let pick = |t: BettiTable| if quotient { t.quotient() } else { t };
    if let Input::Ideal(i) = input {
        let b = bsd_generic(&pick(oracle_table(i, &lim)?.graded()))?;
        return Ok(Report::new(format!("{b}\n"), json!({ "oracle": bs_json(&b) })));
    }
    let inst = input.instance()?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let b = if quotient { bsd_quotient(d, c)? } else { bsd_ideal(d, c)? };
    let mut text = format!("{b}\n");
    let mut json = json!({ "terms": bs_json(&b) });
    if !oracle {
        return Ok(Report::new(text, json));
    }
    let i = UfiContext::new(d, c)?.ideal();
    let g = bsd_generic(&pick(oracle_table(&i, &lim)?.graded()))?;
    let same = g == b;
    writeln!(text, "oracle: {}", if same { "agrees" } else { "differs" }).unwrap();
    if !same {
        writeln!(text, "{g}").unwrap();
    }
    json["oracle"] = bs_json(&g);
    json["agree"] = json!(same);
    let mut r = Report::new(text, json);
    r.mismatch = !same;
    Ok(r)
}

pub fn invariants(input: &Input, oracle: bool, opts: &Options) -> Result<Report, Failure> {
    let inst = input.instance()?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let h = hilbert_summary(d, c)?;
    let unmixed = is_unmixed(d, c)?;
    let i = UfiContext::new(d, c)?.ideal();
    let weak = i.is_weakly_polymatroidal();
    let poly = i.is_polymatroidal()?;
    let mut text = String::new();
    writeln!(text, "H(t) = Q(t)/(1-t)^{}, Q(t) = {}", h.dim, poly_string(&h.q)).unwrap();
    writeln!(text, "dimension: {}", h.dim).unwrap();
    writeln!(text, "codimension: {}", h.codim).unwrap();
    writeln!(text, "multiplicity: {}", h.multiplicity).unwrap();
    writeln!(text, "projective dimension of R/I: {}", h.pdim).unwrap();
    writeln!(text, "depth: {}", h.depth).unwrap();
    writeln!(text, "regularity of I: {}", h.reg).unwrap();
    writeln!(text, "Cohen-Macaulay: {}", yes(h.cohen_macaulay)).unwrap();
    writeln!(text, "unmixed: {}", yes(unmixed)).unwrap();
    writeln!(text, "weakly polymatroidal: {}", yes(weak)).unwrap();
    writeln!(text, "polymatroidal: {}", yes(poly)).unwrap();
    let mut json = json!({
        "q": h.q,
        "dimension": h.dim,
        "codimension": h.codim,
        "multiplicity": h.multiplicity,
        "projective_dimension": h.pdim,
        "depth": h.depth,
        "regularity": h.reg,
        "cohen_macaulay": h.cohen_macaulay,
        "unmixed": unmixed,
        "weakly_polymatroidal": weak,
        "polymatroidal": poly,
    });
    if !oracle {
        return Ok(Report::new(text, json));
    }
    let lim = opts.limits();
    let mismatches = hilbert_oracle_mismatches(&h, &i, &lim)?;
    if mismatches.is_empty() {
        text.push_str("oracle: agrees\n");
    } else {
        writeln!(text, "oracle: differs in {}", mismatches.join(", ")).unwrap();
    }
    json["oracle_mismatches"] = json!(mismatches);
    let mut r = Report::new(text, json);
    r.mismatch = !mismatches.is_empty();
    Ok(r)
}

/// Names of the fields of `h` that the brute-force computation contradicts.
fn hilbert_oracle_mismatches(
    h: &ufi::invariants::HilbertSummary,
    i: &MonomialIdeal,
    lim: &Limits,
) -> ufi::Result<Vec<&'static str>> {
    let num = hilbert_numerator_with(i, lim)?;
    let codim = one_minus_t_multiplicity(&num);
    let mut q = num;
    for _ in 0..codim {
        q = divide_one_minus_t(&q).expect("divisible");
    }
    let b = oracle_table(i, lim)?.graded();
    let mut bad = Vec::new();
    if codim != h.codim {
        bad.push("codimension");
    }
    if q != h.q {
        bad.push("Q(t)");
    }
    if q.iter().sum::<i64>() != h.multiplicity {
        bad.push("multiplicity");
    }
    if b.pdim().map(|p| p + 1) != Some(h.pdim) {
        bad.push("projective dimension");
    }
    if b.reg() != Some(h.reg as i64) {
        bad.push("regularity");
    }
    Ok(bad)
}

fn primes_text(vars: &[String], p: &PrimeSet) -> String {
    p.format(vars).iter().map(|s| format!("  {s}\n")).collect()
}

fn generic_parts(i: &MonomialIdeal, lim: &Limits) -> Result<(Vec<IrreducibleComponent>, PrimeSet), Failure> {
    let comps = irreducible_decomposition_with(i, lim)?;
    let primes = PrimeSet::from_masks(comps.iter().map(|c| c.support()));
    Ok((comps, primes))
}

pub fn primes(input: &Input, powers: Option<usize>, oracle: bool, opts: &Options) -> Result<Report, Failure> {
    let lim = opts.limits();
    if let Input::Ideal(i) = input {
        let (comps, p) = generic_parts(i, &lim)?;
        let vars = i.vars();
        let mut text = format!("irreducible components ({}):\n", comps.len());
        for c in &comps {
            writeln!(text, "  {}", c.format(vars)).unwrap();
        }
        write!(text, "associated primes ({}):\n{}", p.len(), primes_text(vars, &p)).unwrap();
        let json = json!({
            "components": comps.iter().map(|c| c.format(vars)).collect::<Vec<_>>(),
            "primes": p.format(vars),
        });
        return Ok(Report::new(text, json));
    }
    let inst = input.instance()?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let dec = ufi_irreducible_decomposition(d, c)?;
    let ass = ufi_associated_primes(d, c)?;
    let unmixed = is_unmixed(d, c)?;
    let vars = dec.vars.clone();
    let comps = dec.format();
    let mut text = format!("irreducible components ({}):\n", comps.len());
    for s in &comps {
        writeln!(text, "  {s}").unwrap();
    }
    write!(text, "associated primes ({}):\n{}", ass.len(), primes_text(&vars, &ass)).unwrap();
    writeln!(text, "unmixed: {}", yes(unmixed)).unwrap();
    let mut json = json!({
        "components": comps,
        "primes": ass.format(&vars),
        "unmixed": unmixed,
    });
    let mut mismatch = false;
    if let Some(n) = powers {
        let rep = persistence_report(d, c, n, &lim)?;
        let mut per = Vec::new();
        for t in 1..=n {
            let new = rep.new_at(t);
            let listed = if new.is_empty() { "none".to_string() } else { new.format(&vars).join(", ") };
            writeln!(text, "Ass(R/I^{t}): {} primes, new: {listed}", rep.powers[t - 1].len()).unwrap();
            per.push(json!({"power": t, "primes": rep.powers[t - 1].format(&vars), "new": new.format(&vars)}));
        }
        writeln!(text, "persistent: {}", yes(rep.holds())).unwrap();
        json["powers"] = json!(per);
        json["persistent"] = json!(rep.holds());
    }
    if oracle {
        let i = UfiContext::new(d, c)?.ideal();
        let (mut generic, gp) = generic_parts(&i, &lim)?;
        let mut closed = dec.components();
        closed.sort();
        generic.sort();
        let same = closed == generic && gp == ass && dec.intersection() == i;
        writeln!(text, "oracle: {}", if same { "agrees" } else { "differs" }).unwrap();
        json["agree"] = json!(same);
        mismatch = !same;
    }
    let mut r = Report::new(text, json);
    r.mismatch = mismatch;
    Ok(r)
}

pub fn product(first: &Input, second: &Input) -> Result<Report, Failure> {
    let a = nested(first)?;
    let b = nested(second)?;
    let (s, e) = product_as_ufi(&a.complex, &a.colouring, &b.complex, &b.colouring)?;
    let lhs = UfiContext::new(&s, &e)?.ideal();
    let rhs = UfiContext::new(&a.complex, &a.colouring)?
        .ideal()
        .multiply(&UfiContext::new(&b.complex, &b.colouring)?.ideal())?;
    let same = lhs == rhs;
    let out = Instance {
        complex: s,
        colouring: e,
    };
    let labels = out.complex.labels();
    let facets: Vec<String> = out.complex.facets().iter().map(|&f| face_tag(&out.complex, f)).collect();
    let text = format!(
        "vertices: {}\nfacets: {}\ncolouring: {}\nnested: {}\nideal equals the product: {}\n",
        labels.join(" "),
        facets.join(" "),
        out.colouring.format(labels),
        yes(check_nesting_ordered(&out.complex, &out.colouring).is_ok()),
        yes(same),
    );
    let mut r = Report::new(text, serde_json::to_value(out.to_json()).expect("serializable"));
    r.mismatch = !same;
    Ok(r)
}

enum Status {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// Stops a check early without failing it.
enum Halt {
    Skip(String),
    Error(ufi::Error),
}

impl From<ufi::Error> for Halt {
    fn from(e: ufi::Error) -> Self {
        if e.kind() == ErrorKind::Guard {
            Halt::Skip(e.to_string())
        } else {
            Halt::Error(e)
        }
    }
}

/// Skips the check when `r` fails a mathematical precondition.
fn applicable<T>(r: ufi::Result<T>) -> Result<T, Halt> {
    r.map_err(|e| match e.kind() {
        ErrorKind::Precondition => Halt::Skip(e.to_string()),
        _ => e.into(),
    })
}

type Outcome = Result<Result<String, String>, Halt>;

struct Checks(Vec<(&'static str, Status)>);

impl Checks {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Outcome) {
        let s = match f() {
            Ok(Ok(detail)) => Status::Pass(detail),
            Ok(Err(why)) => Status::Fail(why),
            Err(Halt::Skip(why)) => Status::Skip(why),
            Err(Halt::Error(e)) => Status::Fail(e.to_string()),
        };
        self.0.push((name, s));
    }
}

fn same<T: PartialEq>(a: T, b: T, what: &str) -> Result<String, String> {
    if a == b {
        Ok(String::new())
    } else {
        Err(format!("{what} differs"))
    }
}

pub fn verify(input: &Input, opts: &Options) -> Result<Report, Failure> {
    let inst = nested(input)?;
    let (d, c) = (&inst.complex, &inst.colouring);
    let lim = opts.limits();
    let i = UfiContext::new(d, c)?.ideal();
    let oracle = oracle_table(&i, &lim);
    let table = || -> ufi::Result<BettiTable> { oracle.clone().map(|t| t.graded()) };
    let mut ch = Checks(Vec::new());

    ch.run("Betti numbers", || {
        Ok(same(betti_closed_form(d, c)?, table()?, "table"))
    });
    ch.run("linear resolution", || {
        let n = d.n() as u32;
        let t = table()?;
        Ok(if t.iter().all(|(i, j, _)| j == n + i as u32) {
            Ok(String::new())
        } else {
            Err("oracle table is not linear".into())
        })
    });
    ch.run("first syzygies", || {
        let b = first_betti_lower_bound(d, c)?;
        let t = table()?;
        let b1 = t.column_totals().get(1).copied().unwrap_or(0);
        Ok(same(b.total() as u64, b1, "β_1"))
    });
    ch.run("Boij-Söderberg, ideal", || {
        let b = bsd_ideal(d, c)?;
        let t = table()?;
        if !b.reconstructs(&t) {
            return Ok(Err("does not reconstruct the table".into()));
        }
        Ok(same(b, bsd_generic(&t)?, "peel"))
    });
    ch.run("Boij-Söderberg, quotient", || {
        let b = applicable(bsd_quotient(d, c))?;
        let t = table()?.quotient();
        if !b.reconstructs(&t) {
            return Ok(Err("does not reconstruct the table".into()));
        }
        Ok(same(b, bsd_generic(&t)?, "peel"))
    });
    ch.run("Hilbert series", || {
        let h = applicable(hilbert_summary(d, c))?;
        let bad = hilbert_oracle_mismatches(&h, &i, &lim)?;
        Ok(if bad.is_empty() { Ok(String::new()) } else { Err(format!("{} differ", bad.join(", "))) })
    });
    ch.run("irreducible decomposition", || {
        let dec = applicable(ufi_irreducible_decomposition(d, c))?;
        if dec.intersection() != i {
            return Ok(Err("intersection is not the ideal".into()));
        }
        let mut closed = dec.components();
        closed.sort();
        let mut generic = irreducible_decomposition_with(&i, &lim)?;
        generic.sort();
        Ok(same(closed, generic, "component list"))
    });
    ch.run("associated primes", || {
        let p = applicable(ufi_associated_primes(d, c))?;
        let comps = irreducible_decomposition_with(&i, &lim)?;
        Ok(same(p, PrimeSet::from_masks(comps.iter().map(|c| c.support())), "prime set"))
    });
    ch.run("square", || {
        let (g, e) = power_as_ufi(d, c, 2)?;
        lim.check_instance(&g)?;
        let sq = i.power(2);
        if UfiContext::new(&g, &e)?.ideal() != sq {
            return Ok(Err("ideal of the square differs".into()));
        }
        if !ufi::is_nesting_ordered(&g, &e)? {
            return Ok(Err("square colouring is not nested".into()));
        }
        if sq.is_empty() || d.face_count() <= 1 {
            return Ok(Ok(String::new()));
        }
        let p1 = ufi_associated_primes(d, c)?;
        let p2 = ufi_associated_primes(&g, &e)?;
        let comps = irreducible_decomposition_with(&sq, &lim)?;
        if p2 != PrimeSet::from_masks(comps.iter().map(|c| c.support())) {
            return Ok(Err("associated primes of the square differ".into()));
        }
        Ok(if p1.is_subset(&p2) { Ok(String::new()) } else { Err("primes not persistent".into()) })
    });
    ch.run("cubical complex", || {
        let cc = cubical_complex(d, c)?;
        if let Err(m) = cc.validate() {
            return Ok(Err(m));
        }
        if cc.f_vector() != predicted_f_vector(d)? {
            return Ok(Err("f-vector differs".into()));
        }
        let seq = collapse_sequence(&cc)?;
        Ok(Ok(format!("{} collapses", seq.len())))
    });
    ch.run("cellular resolution", || {
        let l = labeled_complex(d, c)?;
        if !l.is_minimal() {
            return Ok(Err("labels do not strictly increase".into()));
        }
        let f = cellular_free_complex(&l);
        let rep = verify_resolution(&f, &i, &lim)?;
        if !rep.is_resolution() {
            return Ok(Err(format!("{} degrees not acyclic", rep.non_acyclic.len())));
        }
        if rep.cell_betti != rep.homology_betti {
            return Ok(Err("cell counts differ from homology".into()));
        }
        Ok(same(rep.cell_betti, oracle.clone()?, "multigraded Betti numbers")
            .map(|_| format!("{} degrees", rep.multidegrees)))
    });

    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for (name, s) in &ch.0 {
        let (tag, detail) = match s {
            Status::Pass(m) => ("PASS", m),
            Status::Fail(m) => {
                failed += 1;
                ("FAIL", m)
            }
            Status::Skip(m) => ("SKIP", m),
        };
        if detail.is_empty() {
            writeln!(text, "{tag} {name}").unwrap();
        } else {
            writeln!(text, "{tag} {name}: {detail}").unwrap();
        }
        rows.push(json!({"check": name, "status": tag, "detail": detail}));
    }
    let mut r = Report::new(text, json!({ "checks": rows, "failed": failed }));
    r.mismatch = failed > 0;
    Ok(r)
}
