//! The dual algebra `H^∨`, its block decomposition, and factorization of
//! univariate polynomials over F_p.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Bialgebra, Element, Monomial};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg;
use crate::poly::UniPoly;

/// Largest dual algebra accepted by [`decompose`].
pub const MAX_DECOMPOSE_DIM: usize = 64;

/// Largest degree accepted by [`factor_univariate`].
pub const MAX_FACTOR_DEGREE: usize = 12;

/// Dense structure constants of `H^∨` on the basis dual to the normal monomials of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAlgebra {
    p: Prime,
    basis: Vec<Monomial>,
    /// `mult[i][j][k] = (f_i f_j)(m_k)`.
    mult: Vec<Vec<Vec<u32>>>,
    unit: usize,
}

/// `(f_i · f_j)(m_k) = (f_i ⊗ f_j)(Δ m_k)`.
pub fn dualize(h: &Bialgebra) -> DualAlgebra {
    let pres = h.presentation();
    let n = pres.dim();
    let mut mult = vec![vec![vec![0u32; n]; n]; n];
    for (k, delta) in h.coproduct_table().iter().enumerate() {
        for ((a, b), c) in delta.iter() {
            let i = pres.basis_index(a).expect("normal monomial");
            let j = pres.basis_index(b).expect("normal monomial");
            mult[i][j][k] = c;
        }
    }
    let unit = pres.basis_index(&pres.one_monomial()).expect("unit monomial");
    DualAlgebra {
        p: h.prime(),
        basis: pres.basis().to_vec(),
        mult,
        unit,
    }
}

impl DualAlgebra {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomials of `H` whose dual functionals form the basis.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn one(&self) -> Vec<u32> {
        self.basis_vector(self.unit)
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Basis index of the functional dual to `m`.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = p.mul(ai, bj);
                for (o, &s) in out.iter_mut().zip(&self.mult[i][j]) {
                    if s != 0 {
                        *o = p.add(*o, p.mul(c, s));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u32], e: u32) -> Vec<u32> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }

    /// Minimal polynomial of `a` over F_p.
    pub fn min_poly(&self, a: &[u32]) -> UniPoly {
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            if let Some(c) = linalg::solve_in_span(self.p, &powers, &next) {
                let mut coeffs: Vec<u32> = c.iter().map(|&x| self.p.neg(x)).collect();
                coeffs.push(1);
                return UniPoly::new(self.p, coeffs);
            }
            powers.push(next);
        }
    }

    /// Rank of multiplication by `a`, the dimension of the ideal `aD`.
    pub fn ideal_dim(&self, a: &[u32]) -> usize {
        let rows: Vec<Vec<u32>> = (0..self.dim()).map(|i| self.mul(a, &self.basis_vector(i))).collect();
        linalg::rank(self.p, &rows, self.dim())
    }

    /// Basis of `{a : a^p = a}`.
    pub fn frobenius_fixed(&self) -> Vec<Vec<u32>> {
        let n = self.dim();
        let p = self.p;
        // Frobenius is additive on a commutative algebra, so this matrix is its
        // matrix; rows are indexed by output coordinate.
        let images: Vec<Vec<u32>> = (0..n).map(|i| self.pow(&self.basis_vector(i), p.get())).collect();
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| {
                        let v = images[i][k];
                        if i == k {
                            p.sub(v, 1)
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        linalg::nullspace(p, &rows, n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub dim: usize,
    pub label: String,
    pub idempotent: Vec<u32>,
    /// For one-dimensional blocks, the group-like of `H` given by the block's character.
    pub grouplike: Option<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
}

impl Decomposition {
    pub fn idempotents(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|b| b.idempotent.clone()).collect()
    }

    pub fn tate_block(&self) -> Option<&Block> {
        self.blocks.iter().find(|b| b.label == "Tate")
    }
}

/// Primitive orthogonal idempotents of a commutative dual algebra.
///
/// The idempotents of `D` are those of the subalgebra `B = {a : a^p = a}`,
/// which is a product of copies of F_p. Each basis element of `B` splits the
/// current idempotents through Lagrange interpolation at its eigenvalues.
pub fn decompose(d: &DualAlgebra, h: &Bialgebra) -> Result<Decomposition> {
    let n = d.dim();
    if n > MAX_DECOMPOSE_DIM {
        return Err(Error::BoundExceeded {
            what: format!("dual algebra of dimension {n}"),
            bound: MAX_DECOMPOSE_DIM as u64,
        });
    }
    if !d.is_commutative() {
        return Err(Error::UnsupportedPresentation(
            "dual algebra is not commutative (coproduct not cocommutative)".into(),
        ));
    }
    let p = d.p;
    let mut idems = vec![d.one()];
    for b in d.frobenius_fixed() {
        let mut next = Vec::new();
        for e in &idems {
            let eb = d.mul(e, &b);
            for c in 0..p.get() {
                let mut f = e.clone();
                for c2 in (0..p.get()).filter(|&c2| c2 != c) {
                    let inv = p.inv(p.sub(c, c2));
                    let factor: Vec<u32> = eb
                        .iter()
                        .zip(e)
                        .map(|(&x, &y)| p.mul(inv, p.sub(x, p.mul(c2, y))))
                        .collect();
                    f = d.mul(&f, &factor);
                }
                if f.iter().any(|&x| x != 0) {
                    next.push(f);
                }
            }
        }
        idems = next;
    }
    let pres = h.presentation();
    let mut blocks: Vec<Block> = idems
        .into_iter()
        .map(|e| {
            let dim = d.ideal_dim(&e);
            let grouplike = (dim == 1).then(|| {
                // On a one-dimensional block, f_i · e = χ(f_i) e.
                let pivot = e.iter().position(|&x| x != 0).expect("nonzero idempotent");
                let inv = p.inv(e[pivot]);
                Element::from_terms(
                    p,
                    (0..n).map(|i| {
                        let fe = d.mul(&d.basis_vector(i), &e);
                        (d.basis[i].clone(), p.mul(fe[pivot], inv))
                    }),
                )
            });
            let label = if e[d.unit] == 1 {
                String::from("Tate")
            } else if let Some(g) = &grouplike {
                format!("grouplike {}", pres.fmt_element(g))
            } else {
                String::from("no grouplike")
            };
            Block {
                dim,
                label,
                idempotent: e,
                grouplike,
            }
        })
        .collect();
    blocks.sort_by(|a, b| {
        (a.label != "Tate", a.dim, &a.idempotent).cmp(&(b.label != "Tate", b.dim, &b.idempotent))
    });
    Ok(Decomposition { blocks })
}

/// Irreducible factors with multiplicity, and the leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn product(&self, p: Prime) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(p, self.unit), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }
}

/// Trial division by monic polynomials in increasing degree, then
/// lexicographic order of coefficients from the constant term up.
pub fn factor_univariate(f: &UniPoly) -> Result<Factorization> {
    let p = f.prime();
    let deg = f
        .degree()
        .ok_or_else(|| Error::NonDivisible("cannot factor the zero polynomial".into()))?;
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::BoundExceeded {
            what: format!("polynomial degree {deg}"),
            bound: MAX_FACTOR_DEGREE as u64,
        });
    }
    let unit = f.leading();
    let mut rest = f.monic();
    let mut factors = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.degree().unwrap_or(0) {
        let mut coeffs = vec![0u32; d];
        loop {
            let mut full = coeffs.clone();
            full.push(1);
            let g = UniPoly::new(p, full);
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&g);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((g, mult));
            }
            if 2 * d > rest.degree().unwrap_or(0) || !next_coeffs(&mut coeffs, p.get()) {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        match factors.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, m)) => *m += 1,
            None => factors.push((rest, 1)),
        }
    }
    Ok(Factorization { unit, factors })
}

fn next_coeffs(c: &mut [u32], p: u32) -> bool {
    for x in c.iter_mut() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GeneratorDecl, Periodic, Presentation};

    fn truncated(q: u32, coproduct: &str) -> Bialgebra {
        let pres = Presentation::new(Prime::new(q).unwrap(), vec![GeneratorDecl::new("x", 1, q)], vec![]).unwrap();
        Bialgebra::from_strings(
            pres,
            &[("x", coproduct)],
            Some(Periodic {
                name: "v".into(),
                degree: -1,
            }),
        )
        .unwrap()
    }

    /// All idempotents, by brute force over the p^n elements.
    fn idempotent_oracle(d: &DualAlgebra) -> Vec<Vec<u32>> {
        let n = d.dim();
        let p = d.prime().get();
        let mut v = vec![0u32; n];
        let mut out = Vec::new();
        loop {
            if d.mul(&v, &v) == v {
                out.push(v.clone());
            }
            if !next_coeffs(&mut v, p) {
                return out;
            }
        }
    }

    fn check(h: &Bialgebra) -> Decomposition {
        let d = dualize(h);
        let dec = decompose(&d, h).unwrap();
        let p = d.prime();
        let mut sum = vec![0u32; d.dim()];
        for (i, a) in dec.idempotents().iter().enumerate() {
            for (s, x) in sum.iter_mut().zip(a) {
                *s = p.add(*s, *x);
            }
            for (j, b) in dec.idempotents().iter().enumerate() {
                let ab = d.mul(a, b);
                if i == j {
                    assert_eq!(&ab, a);
                } else {
                    assert!(ab.iter().all(|&x| x == 0));
                }
            }
        }
        assert_eq!(sum, d.one());
        assert_eq!(dec.blocks.iter().map(|b| b.dim).sum::<usize>(), d.dim());
        if (p.get() as u64).pow(d.dim() as u32) <= 200_000 {
            assert_eq!(idempotent_oracle(&d).len(), 1 << dec.blocks.len());
        }
        dec
    }

    #[test]
    fn pgl_blocks() {
        for q in [2, 3, 5] {
            let h = truncated(q, "x|1 + 1|x - x|x");
            let dec = check(&h);
            assert_eq!(dec.blocks.len(), q as usize);
            assert!(dec.blocks.iter().all(|b| b.dim == 1 && b.grouplike.is_some()));
            assert_eq!(dec.blocks[0].label, "Tate");
            assert_eq!(dec.blocks[0].grouplike, Some(h.presentation().one()));
            let mut gl: Vec<Element> = dec.blocks.iter().map(|b| b.grouplike.clone().unwrap()).collect();
            let mut found = h.find_grouplikes().unwrap();
            gl.sort_by(|a, b| a.iter().cmp(b.iter()));
            found.sort_by(|a, b| a.iter().cmp(b.iter()));
            assert_eq!(gl, found);
            let d = dualize(&h);
            let y = d.basis_vector(1);
            let mut expected = vec![0u32; q as usize + 1];
            expected[1] = q - 1;
            expected[q as usize] = 1;
            assert_eq!(d.min_poly(&y), UniPoly::new(d.prime(), expected));
        }
    }

    #[test]
    fn morava_rost_blocks() {
        let dec = check(&truncated(2, "x|1 + 1|x + x|x"));
        assert_eq!(dec.blocks.len(), 2);
        assert!(dec.tate_block().is_some());
    }

    #[test]
    fn primitive_dual_is_local() {
        for q in [2, 3, 5] {
            let h = truncated(q, "x|1 + 1|x");
            let d = dualize(&h);
            let dec = check(&h);
            assert_eq!(dec.blocks.len(), 1);
            let mut yp = vec![0u32; q as usize + 1];
            yp[q as usize] = 1;
            assert_eq!(d.min_poly(&d.basis_vector(1)), UniPoly::new(d.prime(), yp));
        }
    }

    #[test]
    fn dual_is_associative_and_commutative() {
        let h = truncated(3, "x|1 + 1|x - x|x");
        let d = dualize(&h);
        assert!(d.is_associative());
        assert!(d.is_commutative());
    }

    #[test]
    fn factor_examples() {
        let p3 = Prime::new(3).unwrap();
        let f = UniPoly::from_signed(p3, &[0, -1, 0, 1]);
        let fac = factor_univariate(&f).unwrap();
        let lin: Vec<UniPoly> = (0..3).map(|c| UniPoly::new(p3, vec![c, 1])).collect();
        assert_eq!(fac.factors, lin.into_iter().map(|g| (g, 1)).collect::<Vec<_>>());
        let p2 = Prime::new(2).unwrap();
        let fac = factor_univariate(&UniPoly::new(p2, vec![0, 1, 1])).unwrap();
        assert_eq!(fac.factors.len(), 2);
        let irr = UniPoly::new(p3, vec![1, 0, 1]);
        let fac = factor_univariate(&irr).unwrap();
        assert_eq!(fac.factors, vec![(irr.clone(), 1)]);
        let sq = UniPoly::new(p3, vec![1, 2, 1]).mul(&UniPoly::constant(p3, 2));
        let fac = factor_univariate(&sq).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.factors, vec![(UniPoly::new(p3, vec![1, 1]), 2)]);
        assert_eq!(fac.product(p3), sq);
    }
}
