use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{weyl, CatalogEntry, DegreeTable, EdgeList, JCase, Payload};
use crate::algebra::{Bialgebra, GeneratorDecl, Monomial, Periodic, Presentation, RewriteRule};
use crate::comod::Comodule;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::jinv::{JTuple, QuadricJSet};
use crate::motdec::{quadric_comodule, Lambda, QuadricSpec};

fn prime(p: u32) -> Prime {
    Prime::new(p).expect("catalog primes are prime")
}

/// `F_2[e_1, ..., e_m]/(e_i^2 = e_{2i})`, all generators primitive.
pub fn so_mod2(m: usize) -> Result<Bialgebra> {
    let gens = (1..=m).map(|i| GeneratorDecl::new(&format!("e{i}"), i as u32, 2)).collect();
    let rules = (1..=m / 2)
        .map(|i| RewriteRule {
            source: Monomial::generator(m, i - 1, 2),
            target: Some((1, Monomial::generator(m, 2 * i - 1, 1))),
        })
        .collect();
    Ok(Bialgebra::primitive(Presentation::new(prime(2), gens, rules)?))
}

/// `F_p[x]/(x^p)` with `Δx = x⊗1 + 1⊗x - x⊗x` and `β` of degree -1.
pub fn pgl_k0(p: u32) -> Result<Bialgebra> {
    let pres = Presentation::new(prime(p), vec![GeneratorDecl::new("x", 1, p)], vec![])?;
    Bialgebra::from_strings(
        pres,
        &[("x", "x|1 + 1|x - x|x")],
        Some(Periodic {
            name: "beta".into(),
            degree: -1,
        }),
    )
}

/// `F_2[x]/(x^2)` with `Δx = x⊗1 + 1⊗x + v_n x⊗x`, `deg x = 2^n - 1`.
pub fn morava_rost(n: u32) -> Result<Bialgebra> {
    let d = (1u32 << n) - 1;
    let pres = Presentation::new(prime(2), vec![GeneratorDecl::new("x", d, 2)], vec![])?;
    Bialgebra::from_strings(
        pres,
        &[("x", "x|1 + 1|x + x|x")],
        Some(Periodic {
            name: format!("v{n}"),
            degree: -(d as i32),
        }),
    )
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// `F_p[x]/(x^p)`, `deg x = p + 1`, with
/// `Δx = x⊗1 + 1⊗x + α v_2 Σ (1/p) C(p,i) x^i⊗x^{p-i}`; `alpha = 0` gives
/// the primitive (Chow) coproduct.
pub fn k2_bialgebra(p: u32, alpha: u32) -> Result<Bialgebra> {
    let f = prime(p);
    let name = format!("x{}", p + 1);
    let pres = Presentation::new(f, vec![GeneratorDecl::new(&name, p + 1, p)], vec![])?;
    let mut delta = format!("{name}|1 + 1|{name}");
    let mut binom: u64 = 1;
    for i in 1..p {
        binom = binom * (p - i + 1) as u64 / i as u64;
        let c = f.mul(alpha, ((binom / p as u64) % p as u64) as u32);
        if c != 0 {
            delta += &format!(" + {c}*{}|{}", power(&name, i), power(&name, p - i));
        }
    }
    let periodic = (alpha != 0).then(|| Periodic {
        name: "v2".into(),
        degree: -((p * p - 1) as i32),
    });
    Bialgebra::from_strings(pres, &[(&name, &delta)], periodic)
}

fn primitive(p: u32, gens: &[(&str, u32, u32)]) -> Result<Bialgebra> {
    let decls = gens.iter().map(|&(n, d, t)| GeneratorDecl::new(n, d, t)).collect();
    Ok(Bialgebra::primitive(Presentation::new(prime(p), decls, vec![])?))
}

fn e7_mod2() -> Result<Bialgebra> {
    primitive(2, &[("e3", 3, 2), ("e5", 5, 2), ("e9", 9, 2)])
}

fn e8_mod3() -> Result<Bialgebra> {
    primitive(3, &[("e4", 4, 3), ("e10", 10, 3)])
}

fn e8_mod2() -> Result<Bialgebra> {
    let pres = Presentation::new(
        prime(2),
        vec![
            GeneratorDecl::new("e3", 3, 8),
            GeneratorDecl::new("e5", 5, 4),
            GeneratorDecl::new("e9", 9, 2),
            GeneratorDecl::new("e15", 15, 2),
        ],
        vec![],
    )?;
    Bialgebra::from_strings(pres, &[("e15", E15_COPRODUCT)], None)
}

pub(crate) const E15_COPRODUCT: &str = "e15|1 + e9|e3^2 + e5|e5^2 + e3|e3^4 + 1|e15";
pub(crate) const E7P7_X5: &str = "e5|1 + e3|h^2 + 1|x5";
pub(crate) const E7P7_X9: &str = "e9|1 + e5|h^4 + 1|x9";
pub(crate) const E8P8_X6: &str = "e4|h^2 + 1|x6";
pub(crate) const E8P8_X10: &str = "e10|1 + e4^2|h^2 - e4|x6 + 1|x10";

fn e7p7() -> Result<Comodule> {
    let pres = Presentation::new(
        prime(2),
        vec![
            GeneratorDecl::new("h", 1, 14),
            GeneratorDecl::new("x5", 5, 2),
            GeneratorDecl::new("x9", 9, 2),
        ],
        vec![],
    )?;
    Comodule::algebra_from_strings(e7_mod2()?, pres, &[("x5", E7P7_X5), ("x9", E7P7_X9)])
}

/// Relations `x6^4 = -h^24`, `x10^3 = -h^24 x6`, `x6^3 h^2 = 0`. Their
/// overlap forces `h^26 = 0`, stored as the truncation of `h`.
fn e8p8() -> Result<Comodule> {
    let gens = vec![
        GeneratorDecl::new("x10", 10, 3),
        GeneratorDecl::new("x6", 6, 4),
        GeneratorDecl::new("h", 1, 26),
    ];
    let mono = |e: [u32; 3]| Monomial::from_exponents(e.to_vec());
    let rules = vec![
        RewriteRule {
            source: mono([3, 0, 0]),
            target: Some((2, mono([0, 1, 24]))),
        },
        RewriteRule {
            source: mono([0, 4, 0]),
            target: Some((2, mono([0, 0, 24]))),
        },
        RewriteRule {
            source: mono([0, 3, 2]),
            target: None,
        },
    ];
    let pres = Presentation::new(prime(3), gens, rules)?;
    Comodule::algebra_from_strings(e8_mod3()?, pres, &[("x6", E8P8_X6), ("x10", E8P8_X10)])
}

fn quadric(n: u32, absent: &[u32]) -> Result<Comodule> {
    quadric_comodule(&QuadricSpec::new(quadric_jset(n, absent)?))
}

fn quadric_jset(n: u32, absent: &[u32]) -> Result<QuadricJSet> {
    let lo = if n.is_multiple_of(2) { 0 } else { 1 };
    QuadricJSet::new(n, (lo..=(n - 1) / 2).filter(|k| !absent.contains(k)))
}

fn edges(n: u32, absent: &[u32], list: &[(&str, &str)]) -> Result<EdgeList> {
    let m = (n - 1) / 2;
    let mut out = Vec::new();
    for (a, b) in list {
        let parse = |s: &str| {
            Lambda::parse(s, Some(m)).ok_or_else(|| Error::InvalidJSet(format!("bad quadric index {s}")))
        };
        out.push((parse(a)?, parse(b)?));
    }
    Ok(EdgeList {
        n,
        jset: quadric_jset(n, absent)?.members.into_iter().collect(),
        edges: out,
    })
}

fn jcase(group: &str, p: u32, gens: &[(u32, u32)], tuple: &[u32]) -> JCase {
    JCase {
        group: group.into(),
        prime: prime(p),
        degrees: gens.iter().map(|g| g.0).collect(),
        truncations: gens.iter().map(|g| g.1).collect(),
        tuple: JTuple(tuple.to_vec()),
    }
}

/// Groups of the shape `F_p[x_{p+1}]/(x^p)`: (key, Dynkin type, p).
pub(crate) const TYPE_ONE: &[(&str, &str, u32)] = &[
    ("g2", "G2", 2),
    ("f4", "F4", 2),
    ("e6", "E6", 2),
    ("f4", "F4", 3),
    ("e6sc", "E6", 3),
    ("e7", "E7", 3),
    ("e8", "E8", 5),
];

pub(crate) fn all() -> Result<Vec<CatalogEntry>> {
    use Payload::*;
    let mut out = Vec::new();
    let mut push = |key: &str, prov: &str, payload: Payload| out.push(CatalogEntry::new(key, prov, payload));

    for n in 3..=14u32 {
        let m = ((n - 1) / 2) as usize;
        push(
            &format!("so{n}.mod2"),
            &format!("Chow ring of SO_{n} modulo 2: F_2[e_1..e_{m}]/(e_i^2 = e_2i), primitive generators"),
            Bialgebra(so_mod2(m)?),
        );
    }
    push(
        "quadric.dim6",
        "coaction on Ch(Q) for a 6-dimensional quadric with 1 not in J",
        Comodule(quadric(8, &[1])?),
    );
    push(
        "quadric.dim8",
        "coaction on Ch(Q) for an 8-dimensional quadric with 1 not in J",
        Comodule(quadric(10, &[1])?),
    );
    push(
        "quadric.dim10",
        "coaction on Ch(Q) for a 10-dimensional quadric with 3 not in J",
        Comodule(quadric(12, &[3])?),
    );
    push(
        "e7.mod2",
        "Chow ring of simply connected E7 modulo 2: F_2[e_3,e_5,e_9]/(e_3^2,e_5^2,e_9^2)",
        Bialgebra(e7_mod2()?),
    );
    push(
        "e7p7.mod2",
        "Ch(E7/P7) modulo 2 over Ch(E7): rho(h) = 1|h, rho(x5) = e5|1 + e3|h^2 + 1|x5, rho(x9) = e9|1 + e5|h^4 + 1|x9",
        Comodule(e7p7()?),
    );
    push(
        "e8.mod3",
        "Chow ring of E8 modulo 3: F_3[e_4,e_10]/(e_4^3,e_10^3)",
        Bialgebra(e8_mod3()?),
    );
    push(
        "e8p8.mod3",
        "Ch(E8/P8) modulo 3 over Ch(E8): rho(x6) = e4|h^2 + 1|x6, rho(x10) = e10|1 + e4^2|h^2 - e4|x6 + 1|x10",
        Comodule(e8p8()?),
    );
    push(
        "e8.mod2",
        "Chow ring of E8 modulo 2 with e3, e5, e9 primitive and the coproduct of e15 mixing lower generators",
        Bialgebra(e8_mod2()?),
    );
    for p in [2, 3, 5, 7] {
        push(
            &format!("pgl{p}.k0"),
            &format!("K^0(PGL_{p}) modulo {p}: F_{p}[beta, 1/beta][x]/(x^{p})"),
            Bialgebra(pgl_k0(p)?),
        );
    }
    for &(key, group, p) in TYPE_ONE.iter().chain([("e8", "E8", 3)].iter()) {
        let x = p + 1;
        if !(key == "e8" && p == 3) {
            push(
                &format!("chow.{key}.mod{p}"),
                &format!("Ch({group}) modulo {p}: F_{p}[x_{x}]/(x_{x}^{p}), x_{x} primitive"),
                Bialgebra(k2_bialgebra(p, 0)?),
            );
        }
        for alpha in 1..p {
            push(
                &format!("k2.{key}.mod{p}.a{alpha}"),
                &format!("K(2)({group}) modulo {p}: F_{p}[v_2, 1/v_2][x_{x}]/(x_{x}^{p}) with alpha = {alpha}"),
                Bialgebra(k2_bialgebra(p, alpha)?),
            );
        }
    }
    for n in 1..=3 {
        push(
            &format!("morava_rost.n{n}"),
            &format!("K({n}) of the Rost motive, p = 2: F_2[v_{n}, 1/v_{n}][x]/(x^2)"),
            Bialgebra(morava_rost(n)?),
        );
    }
    push(
        "vishik.dim6",
        "excellent connections for a 6-dimensional quadric with 1 not in J",
        Edges(edges(8, &[1], &[("0", "3"), ("1", "4"), ("2", "5"), ("3'", "6")])?),
    );
    push(
        "vishik.dim8",
        "excellent connections for an 8-dimensional quadric with 1 not in J",
        Edges(edges(10, &[1], &[("0", "7"), ("1", "8"), ("2", "5"), ("3", "6"), ("4", "4'")])?),
    );
    push(
        "vishik.dim10",
        "excellent connections for a 10-dimensional quadric with 3 not in J",
        Edges(edges(
            12,
            &[3],
            &[("0", "7"), ("1", "8"), ("2", "9"), ("3", "10"), ("4", "5"), ("5'", "6")],
        )?),
    );
    let rows = weyl::table_types(8)
        .into_iter()
        .map(|t| {
            let d = weyl::fundamental_degrees(&t)?;
            Ok((t, d))
        })
        .collect::<Result<Vec<_>>>()?;
    push(
        "weyl.degrees",
        "fundamental degrees of the Weyl groups up to rank 8",
        Degrees(DegreeTable { rows }),
    );

    let cases = [
        ("jcase.g2.mod2.j1", jcase("G2", 2, &[(3, 2)], &[1])),
        ("jcase.f4.mod2.j1", jcase("F4", 2, &[(3, 2)], &[1])),
        ("jcase.e6.mod2.j1", jcase("E6", 2, &[(3, 2)], &[1])),
        ("jcase.f4.mod3.j1", jcase("F4", 3, &[(4, 3)], &[1])),
        ("jcase.e6sc.mod3.j1", jcase("E6", 3, &[(4, 3)], &[1])),
        ("jcase.e7.mod3.j1", jcase("E7", 3, &[(4, 3)], &[1])),
        ("jcase.e8.mod5.j1", jcase("E8", 5, &[(6, 5)], &[1])),
        ("jcase.e7.mod2.j111", jcase("E7", 2, &[(3, 2), (5, 2), (9, 2)], &[1, 1, 1])),
        ("jcase.e7.mod2.j100", jcase("E7", 2, &[(3, 2), (5, 2), (9, 2)], &[1, 0, 0])),
        ("jcase.e8.mod3.j11", jcase("E8", 3, &[(4, 3), (10, 3)], &[1, 1])),
        ("jcase.e8.mod3.j10", jcase("E8", 3, &[(4, 3), (10, 3)], &[1, 0])),
        (
            "jcase.e8.mod2.j3211",
            jcase("E8", 2, &[(3, 8), (5, 4), (9, 2), (15, 2)], &[3, 2, 1, 1]),
        ),
        (
            "jcase.e8.mod2.j1110",
            jcase("E8", 2, &[(3, 8), (5, 4), (9, 2), (15, 2)], &[1, 1, 1, 0]),
        ),
        (
            "jcase.e8.mod2.j2100",
            jcase("E8", 2, &[(3, 8), (5, 4), (9, 2), (15, 2)], &[2, 1, 0, 0]),
        ),
    ];
    for (key, case) in cases {
        let prov = format!("J-invariant {} for {} at p = {}", case.tuple, case.group, case.prime.get());
        push(key, &prov, JCase(case));
    }
    Ok(out)
}
