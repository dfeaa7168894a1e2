use std::sync::OnceLock;

use hopfmotives_core::algebra::{tensor_mul, tensor_of, Bialgebra, Element, Monomial, Presentation};
use hopfmotives_core::catalog::{self, Catalog};
use hopfmotives_core::comod::{check_morphism, tensor_comodule, Comodule, ComoduleMap, Vector};
use hopfmotives_core::dual::factor_univariate;
use hopfmotives_core::jinv::{
    ideal_member, is_bi_ideal, jset_from_tuple, poincare_fpoin, quadric_rank, quotient_bialgebra, tuple_from_jset,
    JTuple, QuadricJSet,
};
use hopfmotives_core::motdec::{quadric_comodule, QuadricSpec};
use hopfmotives_core::poly::UniPoly;
use hopfmotives_core::Prime;
use proptest::prelude::*;

fn cat() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::builtin().unwrap())
}

fn bialgebras() -> Vec<&'static Bialgebra> {
    cat().entries().filter_map(|e| e.bialgebra()).collect()
}

fn comodule(key: &str) -> &'static Comodule {
    cat().get(key).unwrap().comodule().unwrap()
}

fn coinvariants() -> &'static [Vec<Element>; 2] {
    static C: OnceLock<[Vec<Element>; 2]> = OnceLock::new();
    C.get_or_init(|| ["e7p7.mod2", "e8p8.mod3"].map(|k| comodule(k).coinvariant_elements(None).unwrap()))
}

/// Presentations carrying explicit rules.
fn rewriting_presentations() -> Vec<&'static Presentation> {
    let mut out: Vec<&Presentation> = bialgebras()
        .into_iter()
        .map(|b| b.presentation())
        .filter(|p| !p.rules().is_empty())
        .collect();
    out.push(comodule("e8p8.mod3").algebra_parts().unwrap().0);
    out
}

/// A homogeneous element built from `coeffs` on the basis monomials of one
/// degree chosen by `pick`.
fn homogeneous(pr: &Presentation, pick: usize, coeffs: &[u32]) -> Element {
    let degrees: Vec<u32> = {
        let mut d: Vec<u32> = pr.basis().iter().map(|m| pr.degree(m)).collect();
        d.dedup();
        d
    };
    let d = degrees[pick % degrees.len()];
    let ms = pr.basis().iter().filter(|m| pr.degree(m) == d);
    Element::from_terms(pr.prime(), ms.zip(coeffs.iter().cycle()).map(|(m, &c)| (m.clone(), c)))
}

fn any_element(pr: &Presentation, coeffs: &[u32]) -> Element {
    Element::from_terms(
        pr.prime(),
        pr.basis().iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m.clone(), c)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn confluent_under_rule_order(which in 0usize..64, exps in prop::collection::vec(0u32..30, 8), seed in any::<u64>()) {
        let ps = rewriting_presentations();
        let pr = ps[which % ps.len()];
        let n = pr.ngens();
        let caps: Vec<u32> = pr.generators().iter().map(|g| exps[0].max(1) + g.truncation).collect();
        let m = Monomial::from_exponents((0..n).map(|i| exps[i % exps.len()] % caps[i]).collect());
        let mut order: Vec<usize> = (0..pr.effective_rules().len()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(pr.normalize_with_rule_order(&m, &order), pr.normalize_monomial(&m));
    }

    #[test]
    fn coproduct_is_multiplicative(which in 0usize..64, pa in any::<usize>(), pb in any::<usize>(),
                                   ca in prop::collection::vec(0u32..7, 1..6), cb in prop::collection::vec(0u32..7, 1..6)) {
        let bs = bialgebras();
        let b = bs[which % bs.len()];
        let pr = b.presentation();
        let x = homogeneous(pr, pa, &ca);
        let y = homogeneous(pr, pb, &cb);
        let xy = pr.multiply(&x, &y).unwrap();
        prop_assert_eq!(b.coproduct(&xy), tensor_mul(pr, pr, &b.coproduct(&x), &b.coproduct(&y)));
    }

    #[test]
    fn borel_normalize_keeps_poincare(m in 1usize..=7) {
        let b = catalog::so_mod2(m).unwrap();
        let n = b.borel_normalize().unwrap();
        prop_assert!(n.is_borel_form());
        prop_assert_eq!(n.presentation().poincare(), b.presentation().poincare());
        prop_assert!(n.verify().passed());
    }

    #[test]
    fn quotients_verify_with_expected_rank(which in 0usize..3, raw in prop::collection::vec(0u32..4, 4)) {
        let key = ["e8.mod2", "e7.mod2", "e8.mod3"][which];
        let b = cat().get(key).unwrap().bialgebra().unwrap();
        let ks = b.borel_exponents().unwrap();
        let t = JTuple(ks.iter().zip(&raw).map(|(&k, &r)| r % (k + 1)).collect());
        if is_bi_ideal(&t, b).unwrap() {
            let (h, _) = quotient_bialgebra(b, &t).unwrap();
            prop_assert!(h.verify().passed());
            let degrees: Vec<u32> = b.presentation().generators().iter().map(|g| g.degree).collect();
            let f = poincare_fpoin(&t, &degrees, b.prime()).unwrap();
            prop_assert_eq!(f.eval_one(), h.dim() as u64);
            prop_assert_eq!(f, h.presentation().poincare());
        } else {
            prop_assert!(quotient_bialgebra(b, &t).is_err());
        }
    }

    #[test]
    fn membership_is_termwise(raw in prop::collection::vec(0u32..4, 4), coeffs in prop::collection::vec(0u32..2, 1..40)) {
        let b = cat().get("e8.mod2").unwrap().bialgebra().unwrap();
        let pr = b.presentation();
        let t = JTuple(vec![raw[0], raw[1] % 3, raw[2] % 2, raw[3] % 2]);
        let x = any_element(pr, &coeffs);
        let termwise = x.iter().all(|(m, _)| {
            ideal_member(&Element::term(pr.prime(), m.clone(), 1), &t, b).unwrap()
        });
        prop_assert_eq!(ideal_member(&x, &t, b).unwrap(), termwise);
    }

    #[test]
    fn membership_is_monotone(a in prop::collection::vec(0u32..4, 4), b_ in prop::collection::vec(0u32..4, 4),
                              coeffs in prop::collection::vec(0u32..2, 1..40)) {
        let b = cat().get("e8.mod2").unwrap().bialgebra().unwrap();
        let clamp = |v: &[u32]| JTuple(vec![v[0], v[1] % 3, v[2] % 2, v[3] % 2]);
        let (t, u) = (clamp(&a), clamp(&b_));
        let small = JTuple(t.entries().iter().zip(u.entries()).map(|(x, y)| *x.min(y)).collect());
        let x = any_element(b.presentation(), &coeffs);
        if ideal_member(&x, &t, b).unwrap() {
            prop_assert!(ideal_member(&x, &small, b).unwrap());
        }
    }

    #[test]
    fn coinvariants_closed_under_products(which in 0usize..2, i in any::<usize>(), j in any::<usize>()) {
        let m = comodule(["e7p7.mod2", "e8p8.mod3"][which]);
        let pres = m.algebra_parts().unwrap().0;
        let c = &coinvariants()[which];
        let xy = pres.multiply(&c[i % c.len()], &c[j % c.len()]).unwrap();
        let one = m.coalgebra().presentation().one();
        prop_assert_eq!(m.coact(&xy).unwrap(), tensor_of(&one, &xy));
    }

    #[test]
    fn line_tensor_products_verify(which in 0usize..3, i in any::<usize>(), j in any::<usize>()) {
        let p = [2u32, 3, 5][which];
        let h = cat().get(&format!("pgl{p}.k0")).unwrap().bialgebra().unwrap();
        let g = h.find_grouplikes().unwrap();
        let (a, b) = (&g[i % g.len()], &g[j % g.len()]);
        let la = Comodule::line(h.clone(), a).unwrap();
        let lb = Comodule::line(h.clone(), b).unwrap();
        let t = tensor_comodule(&la, &lb).unwrap();
        prop_assert!(t.verify().passed());
        prop_assert_eq!(t.line_class(), Some(h.presentation().multiply(a, b).unwrap()));
    }

    #[test]
    fn multiplication_by_h_powers_composes(a in 0u32..14, b in 0u32..14) {
        let m = comodule("e7p7.mod2");
        let pres = m.algebra_parts().unwrap().0;
        let times = |e: u32| {
            let hp = pres.parse_element(&format!("h^{e}")).unwrap();
            let images: Vec<Vector> = pres
                .basis()
                .iter()
                .map(|x| {
                    let y = pres.multiply(&Element::term(pres.prime(), x.clone(), 1), &hp).unwrap();
                    m.element_to_vector(&y).unwrap()
                })
                .collect();
            ComoduleMap::new(m, m, images).unwrap()
        };
        let (f, g) = (times(a), times(b));
        prop_assert!(check_morphism(m, m, &f));
        prop_assert!(check_morphism(m, m, &g.after(&f)));
        prop_assert_eq!(g.after(&f), times(a + b));
    }

    #[test]
    fn quadric_comodules_verify(n in 3u32..=14, mask in any::<u32>()) {
        let m = (n - 1) / 2;
        let lo = if n % 2 == 0 { 0 } else { 1 };
        let members = (lo..=m).filter(|k| mask >> k & 1 == 1);
        let spec = QuadricSpec::new(QuadricJSet::new(n, members).unwrap());
        let c = quadric_comodule(&spec).unwrap();
        prop_assert!(c.verify().passed());
        prop_assert_eq!(c.dim(), spec.lambda().len());
    }

    #[test]
    fn jset_tuple_round_trip(n in 3u32..=14, raw in prop::collection::vec(0u32..4, 4)) {
        let t = JTuple(raw[..quadric_rank(n)].to_vec());
        if let Ok(s) = jset_from_tuple(&t, n) {
            prop_assert_eq!(tuple_from_jset(&s).unwrap(), t);
        }
    }

    #[test]
    fn factorization_multiplies_back(which in 0usize..3, coeffs in prop::collection::vec(0u32..5, 1..8)) {
        let p = Prime::new([2u32, 3, 5][which]).unwrap();
        let f = UniPoly::new(p, coeffs.iter().map(|c| c % p.get()).collect());
        if !f.is_zero() {
            prop_assert_eq!(factor_univariate(&f).unwrap().product(p), f);
        }
    }
}

#[test]
fn antipode_identity_on_all_monomials() {
    for b in bialgebras() {
        let pr = b.presentation();
        let s = b.antipode_table();
        for m in pr.basis() {
            let x = Element::term(pr.prime(), m.clone(), 1);
            let mut acc = pr.zero();
            for ((l, r), c) in b.coproduct(&x).iter() {
                let sl = &s[pr.basis_index(l).unwrap()];
                let prod = pr.multiply(sl, &Element::term(pr.prime(), r.clone(), 1)).unwrap();
                acc.add_scaled(&prod, c);
            }
            let eps = if m.is_one() { pr.one() } else { pr.zero() };
            assert_eq!(acc, eps, "antipode fails on {}", pr.fmt_monomial(m));
        }
    }
}

#[test]
fn grouplikes_form_a_group() {
    for key in ["pgl2.k0", "pgl3.k0", "pgl5.k0", "morava_rost.n1", "k2.e8.mod3.a1"] {
        let b = cat().get(key).unwrap().bialgebra().unwrap();
        let pr = b.presentation();
        let g = b.find_grouplikes().unwrap();
        assert!(g.contains(&pr.one()));
        for x in &g {
            assert!(g.contains(&b.antipode(x)), "{key}: inverse missing");
            for y in &g {
                assert!(g.contains(&pr.multiply(x, y).unwrap()), "{key}: product missing");
            }
        }
    }
}
