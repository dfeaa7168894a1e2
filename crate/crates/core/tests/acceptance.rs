//! Acceptance criteria, one line of output each.

use std::collections::BTreeSet;
use std::time::Instant;

use hopfmotives_core::algebra::{parse_tensor, Bialgebra, Element, TensorElement};
use hopfmotives_core::catalog::{self, Catalog, Payload};
use hopfmotives_core::comod::{line_comodule_classes, Comodule};
use hopfmotives_core::dual::{decompose, dualize};
use hopfmotives_core::jinv::{
    admissible_tuples_containing, jset_from_tuple, poincare_fpoin, quadric_rank, quotient_bialgebra,
    tuple_from_jset, JTuple, QuadricJSet,
};
use hopfmotives_core::motdec::{
    assemble_partition, connections_closed_form, quadric_connections, rpe_beta_search, twist_multiset_for_tuple,
    Lambda, QuadricSpec,
};
use hopfmotives_core::poly::PoincarePoly;
use hopfmotives_core::Prime;

type EdgeData = (u32, Vec<u32>, Vec<(Lambda, Lambda)>);
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Indices of single-term deletions from `terms` that the verifier rejects.
fn detected_deletions(terms: &TensorElement, rebuild: impl Fn(TensorElement) -> bool) -> BTreeSet<usize> {
    let keys: Vec<_> = terms.keys().cloned().collect();
    (0..keys.len())
        .filter(|&i| {
            let mut t = terms.clone();
            t.retain(|k| *k != keys[i]);
            !rebuild(t)
        })
        .collect()
}

fn term_index(terms: &TensorElement, b: &Bialgebra, m: &hopfmotives_core::algebra::Presentation, s: &str) -> usize {
    let t = parse_tensor(b.presentation(), m, s).unwrap();
    let key = t.keys().next().unwrap().clone();
    terms.keys().position(|k| *k == key).unwrap()
}

fn mutate_bialgebra(b: &Bialgebra, gen: &str, s: &str) -> Result<BTreeSet<usize>, String> {
    let pr = b.presentation();
    let g = pr.generator_index(gen).map_err(err)?;
    let terms = b.generator_coproducts()[g].clone();
    ensure(terms == parse_tensor(pr, pr, s).map_err(err)?, format!("coproduct of {gen} differs"))?;
    Ok(detected_deletions(&terms, |t| {
        let mut cs = b.generator_coproducts().to_vec();
        cs[g] = t;
        Bialgebra::new(pr.clone(), cs, b.periodic().cloned()).is_ok_and(|x| x.verify().passed())
    }))
}

fn mutate_comodule(m: &Comodule, gen: &str, s: &str, expect: &[&str]) -> Result<(usize, usize), String> {
    let (pres, coactions) = m.algebra_parts().ok_or("not an algebra comodule")?;
    let g = pres.generator_index(gen).map_err(err)?;
    let h = m.coalgebra();
    let terms = coactions[g].clone();
    ensure(terms == parse_tensor(h.presentation(), pres, s).map_err(err)?, format!("coaction of {gen} differs"))?;
    let found = detected_deletions(&terms, |t| {
        let mut cs = coactions.to_vec();
        cs[g] = t;
        Comodule::algebra(h.clone(), pres.clone(), cs).is_ok_and(|x| x.verify().passed())
    });
    let want: BTreeSet<usize> = expect.iter().map(|e| term_index(&terms, h, pres, e)).collect();
    ensure(found == want, format!("detected deletions of rho({gen}) are {found:?}, expected {want:?}"))?;
    Ok((found.len(), terms.len()))
}

fn criterion_1(cat: &Catalog) -> Outcome {
    let mut nb = 0;
    let mut nc = 0;
    for e in cat.entries() {
        match &e.payload {
            Payload::Bialgebra(b) => {
                ensure(b.verify().passed(), format!("{} fails: {}", e.key, b.verify()))?;
                nb += 1;
            }
            Payload::Comodule(m) => {
                ensure(m.verify().passed(), format!("{} fails: {}", e.key, m.verify()))?;
                nc += 1;
            }
            _ => {}
        }
    }
    let e8 = cat.get("e8.mod2").map_err(err)?.bialgebra().ok_or("e8.mod2")?;
    let s = "e15|1 + e9|e3^2 + e5|e5^2 + e3|e3^4 + 1|e15";
    let found = mutate_bialgebra(e8, "e15", s)?;
    let pr = e8.presentation();
    let terms = e8.generator_coproducts()[pr.generator_index("e15").unwrap()].clone();
    // Cross terms are products of primitives, so only the counit sees them go.
    let want: BTreeSet<usize> = ["e15|1", "1|e15"].iter().map(|t| term_index(&terms, e8, pr, t)).collect();
    ensure(found == want, format!("detected deletions of Δ(e15) are {found:?}, expected {want:?}"))?;

    let e7p7 = cat.get("e7p7.mod2").map_err(err)?.comodule().ok_or("e7p7")?;
    let (a, an) = mutate_comodule(e7p7, "x9", "e9|1 + e5|h^4 + 1|x9", &["1|x9"])?;
    let e8p8 = cat.get("e8p8.mod3").map_err(err)?.comodule().ok_or("e8p8")?;
    let (b, bn) = mutate_comodule(
        e8p8,
        "x10",
        "e10|1 + e4^2|h^2 - e4|x6 + 1|x10",
        &["e4^2|h^2", "2*e4|x6", "1|x10"],
    )?;
    Ok(format!(
        "{nb} bialgebras and {nc} comodules verify; deletions rejected: Δ(e15) {}/5, ρ(x9) {a}/{an}, ρ(x10) {b}/{bn}",
        found.len()
    ))
}

fn criterion_2() -> Outcome {
    let p3 = Prime::new(3).unwrap();
    let f = poincare_fpoin(&JTuple(vec![1, 1]), &[4, 10], p3).map_err(err)?;
    let want = PoincarePoly::geometric(4, 3).mul(&PoincarePoly::geometric(10, 3));
    ensure(f == want, format!("E8 mod 3 gives {f}"))?;
    ensure(f.eval_one() == 9, "E8 mod 3 rank")?;
    let g = poincare_fpoin(&JTuple(vec![1, 1, 1]), &[3, 5, 9], Prime::new(2).unwrap()).map_err(err)?;
    ensure(g.eval_one() == 8, format!("E7 mod 2 rank {}", g.eval_one()))?;
    Ok(format!("E8 p=3 (1,1): {f}; E7 p=2 (1,1,1): rank 8"))
}

fn lam(s: &str) -> Lambda {
    Lambda::parse(s, None).unwrap()
}

fn blocks(list: &[&[&str]]) -> Vec<Vec<Lambda>> {
    list.iter().map(|b| b.iter().map(|s| lam(s)).collect()).collect()
}

fn criterion_3(cat: &Catalog) -> Outcome {
    let extra = |key: &str| -> Result<EdgeData, String> {
        match &cat.get(key).map_err(err)?.payload {
            Payload::Edges(e) => Ok((e.n, e.jset.clone(), e.edges.clone())),
            _ => Err(format!("{key} is not an edge list")),
        }
    };
    let partition = |n: u32, jset: &[u32], edges: &[(Lambda, Lambda)]| {
        let spec = QuadricSpec::new(QuadricJSet::new(n, jset.iter().copied()).map_err(err)?);
        assemble_partition(&quadric_connections(&spec), edges).map_err(err)
    };
    let without = |jset: &[u32], k: u32| jset.iter().copied().filter(|&x| x != k).collect::<Vec<_>>();

    let (n, j, e) = extra("vishik.dim6")?;
    let p = partition(n, &j, &e)?;
    ensure(p.blocks == blocks(&[&["0", "2", "3", "5"], &["1", "3'", "4", "6"]]), "dim 6 partition")?;
    ensure(partition(n, &without(&j, 2), &e)?.blocks.len() == 1, "dim 6 without 2 is not one block")?;

    let (n, j, e) = extra("vishik.dim8")?;
    let p = partition(n, &j, &e)?;
    ensure(
        p.blocks == blocks(&[&["0", "7"], &["1", "8"], &["2", "3", "4", "4'", "5", "6"]]),
        "dim 8 partition",
    )?;
    ensure(partition(n, &without(&j, 3), &e)?.blocks.len() == 1, "dim 8 without 3 is not one block")?;

    let (n, j, e) = extra("vishik.dim10")?;
    let p = partition(n, &j, &e)?;
    ensure(
        p.blocks == blocks(&[&["0", "2", "4", "5", "7", "9"], &["1", "3", "5'", "6", "8", "10"]]),
        "dim 10 partition",
    )?;
    Ok(String::from("dim 6, 8, 10 partitions exact; both collapses give one block"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 3..=14u32 {
        let m = (n - 1) / 2;
        let lo = if n % 2 == 0 { 0 } else { 1 };
        let range: Vec<u32> = (lo..=m).collect();
        for mask in 0u32..(1 << range.len()) {
            let members = range.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &k)| k);
            let spec = QuadricSpec::new(QuadricJSet::new(n, members).map_err(err)?);
            let engine = quadric_connections(&spec);
            let closed = connections_closed_form(&spec);
            ensure(engine.contains_graph(&closed), format!("n = {n}, mask {mask:b}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} J-sets for n ≤ 14"))
}

fn criterion_5(cat: &Catalog) -> Outcome {
    let e7p7 = cat.get("e7p7.mod2").map_err(err)?.comodule().ok_or("e7p7")?;
    let r = rpe_beta_search(e7p7, &JTuple(vec![1, 1, 1])).map_err(err)?;
    ensure(r.is_empty(), format!("E7/P7 returned {} pairs", r.len()))?;
    let e8p8 = cat.get("e8p8.mod3").map_err(err)?.comodule().ok_or("e8p8")?;
    let pres = e8p8.algebra_parts().unwrap().0;
    let r = rpe_beta_search(e8p8, &JTuple(vec![1, 1])).map_err(err)?;
    let got: Vec<(Element, Element)> = r.into_iter().map(|x| (x.beta, x.alpha)).collect();
    let want: Vec<(Element, Element)> = (0..22)
        .map(|j| {
            (
                pres.parse_element(&format!("x10^2*x6^2*h^{j}")).unwrap(),
                pres.parse_element(&format!("h^{}", j + 4)).unwrap(),
            )
        })
        .collect();
    let show = |v: &[(Element, Element)]| {
        v.iter()
            .map(|(b, a)| format!("({}, {})", pres.fmt_element(b), pres.fmt_element(a)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    ensure(got == want, format!("E8/P8 returned {}", show(&got)))?;
    Ok(String::from("E7/P7 (1,1,1): none; E8/P8 (1,1): β = x6^2 x10^2 h^j, α = h^(j+4), j = 0..21"))
}

fn criterion_6(cat: &Catalog) -> Outcome {
    let m = cat.get("e7p7.mod2").map_err(err)?.comodule().ok_or("e7p7")?;
    let pres = m.algebra_parts().unwrap().0;
    let (h, map) = quotient_bialgebra(m.coalgebra(), &JTuple(vec![1, 0, 0])).map_err(err)?;
    let reduced = m.reduce(&h, &map).map_err(err)?;
    let got: BTreeSet<String> = reduced
        .coinvariant_elements(None)
        .map_err(err)?
        .iter()
        .map(|x| pres.fmt_element(x))
        .collect();
    let mut want = BTreeSet::new();
    for i in 0..14 {
        want.insert(pres.fmt_element(&pres.parse_element(&format!("h^{i}")).unwrap()));
        want.insert(pres.fmt_element(&pres.parse_element(&format!("x9*h^{i}")).unwrap()));
    }
    for s in ["x5*h^12", "x5*h^13", "x5*x9*h^12", "x5*x9*h^13"] {
        want.insert(pres.fmt_element(&pres.parse_element(s).unwrap()));
    }
    ensure(got == want, format!("{} coinvariants over F_2[e3]/(e3^2), expected {}", got.len(), want.len()))?;
    let deg9 = m.coinvariant_elements(Some(9)).map_err(err)?;
    ensure(deg9 == vec![pres.parse_element("h^9").unwrap()], "degree 9 coinvariants over the full H")?;
    Ok(format!("{} coinvariants over F_2[e3]/(e3^2); degree 9 over H is span(h^9)", got.len()))
}

fn criterion_7(cat: &Catalog) -> Outcome {
    let b = cat.get("e8.mod2").map_err(err)?.bialgebra().ok_or("e8.mod2")?;
    let pr = b.presentation();
    let want = vec![JTuple(vec![1, 1, 1, 0]), JTuple(vec![2, 1, 0, 0])];
    for mask in 0..8u32 {
        let mut s = String::from("e15");
        for (bit, term) in ["e5^3", "e3^5", "e3^2*e9"].iter().enumerate() {
            if mask >> bit & 1 == 1 {
                s += " + ";
                s += term;
            }
        }
        let x = pr.parse_element(&s).map_err(err)?;
        let mut got = admissible_tuples_containing(&x, b).map_err(err)?.maximal;
        got.sort();
        ensure(got == want, format!("{s}: maximal tuples {got:?}"))?;
    }
    Ok(String::from("all 8 choices give {(1,1,1,0), (2,1,0,0)}"))
}

fn criterion_8(cat: &Catalog) -> Outcome {
    for p in [2u32, 3, 5] {
        let h = cat.get(&format!("pgl{p}.k0")).map_err(err)?.bialgebra().ok_or("pgl")?;
        let dec = decompose(&dualize(h), h).map_err(err)?;
        ensure(
            dec.blocks.len() == p as usize && dec.blocks.iter().all(|b| b.dim == 1),
            format!("PGL_{p}: {} blocks", dec.blocks.len()),
        )?;
        let lc = line_comodule_classes(h).map_err(err)?;
        ensure(lc.grouplikes.len() == p as usize, format!("PGL_{p}: grouplike count"))?;
        for (i, row) in lc.table.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                ensure(k == (i + j) % p as usize, format!("PGL_{p}: L_{i} ⊗ L_{j} = L_{k}"))?;
            }
        }
    }
    for n in 1..=3 {
        let h = cat.get(&format!("morava_rost.n{n}")).map_err(err)?.bialgebra().ok_or("morava")?;
        let dec = decompose(&dualize(h), h).map_err(err)?;
        ensure(dec.blocks.len() == 2 && dec.tate_block().is_some(), format!("Morava Rost n = {n}"))?;
    }
    for a in 1..=2 {
        let h = cat.get(&format!("k2.e8.mod3.a{a}")).map_err(err)?.bialgebra().ok_or("k2")?;
        let dec = decompose(&dualize(h), h).map_err(err)?;
        ensure(dec.blocks.len() >= 2 && dec.tate_block().is_some(), format!("K(2) E8 mod 3, α = {a}"))?;
    }
    Ok(String::from("PGL_p cyclic for p = 2, 3, 5; Morava Rost 2 blocks with Tate; K(2) E8 mod 3 splits for α = 1, 2"))
}

fn criterion_9() -> Outcome {
    let b = catalog::so_mod2(6).map_err(err)?.borel_normalize().map_err(err)?;
    let gens: Vec<(String, u32)> = b
        .presentation()
        .generators()
        .iter()
        .map(|g| (g.name.clone(), g.truncation))
        .collect();
    let want = vec![("e1".to_string(), 8), ("e3".to_string(), 4), ("e5".to_string(), 2)];
    ensure(gens == want, format!("SO_13 normalizes to {gens:?}"))?;
    let mut pairs = 0;
    for n in 3..=14u32 {
        let m = (n - 1) / 2;
        let lo = if n % 2 == 0 { 0 } else { 1 };
        let range: Vec<u32> = (lo..=m).collect();
        let mut from_sets = BTreeSet::new();
        for mask in 0u32..(1 << range.len()) {
            let s = QuadricJSet::new(n, range.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &k)| k))
                .map_err(err)?;
            if let Ok(t) = tuple_from_jset(&s) {
                let back = jset_from_tuple(&t, n).map_err(err)?;
                ensure(back == s, format!("n = {n}: {t} does not return to its J-set"))?;
                from_sets.insert(t);
            }
        }
        let r = quadric_rank(n);
        let mut from_tuples = BTreeSet::new();
        let mut t = vec![0u32; r];
        loop {
            if let Ok(s) = jset_from_tuple(&JTuple(t.clone()), n) {
                let back = tuple_from_jset(&s).map_err(err)?;
                ensure(back.entries() == t.as_slice(), format!("n = {n}: {back} does not return"))?;
                from_tuples.insert(back);
            }
            let mut i = 0;
            while i < r && t[i] == 4 {
                t[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
            t[i] += 1;
        }
        ensure(from_sets == from_tuples, format!("n = {n}: the two directions disagree"))?;
        pairs += from_sets.len();
    }
    Ok(format!("SO_13 → e1, e3, e5 with (8, 4, 2); {pairs} tuple/J-set pairs round-trip for n ≤ 14"))
}

fn criterion_10(cat: &Catalog) -> Outcome {
    let Payload::Degrees(table) = &cat.get("weyl.degrees").map_err(err)?.payload else {
        return Err("weyl.degrees is not a degree table".into());
    };
    let mut checked = 0;
    for (name, degrees) in &table.rows {
        let rank: usize = name[1..].parse().map_err(err)?;
        if rank > 4 {
            continue;
        }
        let brute = catalog::weyl_poincare_bruteforce(name, 100_000).map_err(err)?;
        ensure(
            brute == PoincarePoly::from_fundamental_degrees(degrees),
            format!("{name}: table gives a different polynomial from enumeration"),
        )?;
        checked += 1;
    }
    let mut cases = 0;
    for e in cat.entries() {
        if let Payload::JCase(c) = &e.payload {
            let pw = catalog::weyl_poincare(&c.group).map_err(err)?;
            let tw = twist_multiset_for_tuple(&pw, &c.tuple, &c.degrees, c.prime).map_err(err)?;
            let rank = poincare_fpoin(&c.tuple, &c.degrees, c.prime).map_err(err)?.eval_one();
            ensure(tw.len() as u64 * rank == pw.eval_one(), format!("{}: |I|·rank(H) ≠ |W|", e.key))?;
            cases += 1;
        }
    }
    Ok(format!("{checked} types of rank ≤ 4 match enumeration; {cases} J-tuples satisfy |I|·rank(H) = |W|"))
}

fn main() {
    let start = Instant::now();
    let cat = Catalog::builtin();
    let cat = match cat {
        Ok(c) => c,
        Err(e) => {
            println!("catalog failed to load: {e}");
            std::process::exit(1);
        }
    };
    let criteria: Vec<Criterion<'_>> = vec![
        ("bialgebra and comodule axioms", Box::new(|| criterion_1(&cat))),
        ("Poincaré polynomials of H", Box::new(criterion_2)),
        ("quadric diagrams", Box::new(|| criterion_3(&cat))),
        ("engine contains closed form", Box::new(criterion_4)),
        ("β-searches", Box::new(|| criterion_5(&cat))),
        ("coinvariants", Box::new(|| criterion_6(&cat))),
        ("E8 mod 2 maximal tuples", Box::new(|| criterion_7(&cat))),
        ("dual decompositions", Box::new(|| criterion_8(&cat))),
        ("Borel normalization and J-set bijection", Box::new(criterion_9)),
        ("Weyl oracle and twist counts", Box::new(|| criterion_10(&cat))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
