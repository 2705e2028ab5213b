//! Structure constants, unitalization, and the trace-form radical.
//!
//! A [`StructureTable`] materialises a presentation as an explicit algebra:
//! every product of basis words is rewritten into the basis and the full
//! table is certified associative on all basis triples. That certification
//! is what guarantees the rewrite rules are mutually consistent, so it runs
//! on every build and is never skipped.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::Error;
use crate::matrix::RationalMatrix;
use crate::poly::Poly;
use crate::pres::Presentation;
use crate::word::Word;
use crate::Result;

/// An associative algebra given by structure constants on a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    // prod[i][j] = coefficient vector of e_i * e_j.
    prod: Vec<Vec<Vec<BigRational>>>,
    // Set when some basis vector is a two-sided unit (unitalizations).
    unit_index: Option<usize>,
}

impl Algebra {
    /// Wraps structure constants without certifying them; callers that build
    /// tables from rewrite rules must run [`Algebra::check_associativity`].
    pub fn from_products(prod: Vec<Vec<Vec<BigRational>>>, unit_index: Option<usize>) -> Algebra {
        let dim = prod.len();
        assert!(prod.iter().all(|row| row.len() == dim));
        assert!(prod.iter().flatten().all(|v| v.len() == dim));
        if let Some(u) = unit_index {
            assert!(u < dim);
        }
        Algebra {
            dim,
            prod,
            unit_index,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    /// Coefficient vector of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[BigRational] {
        &self.prod[i][j]
    }

    /// Bilinear product of coefficient vectors.
    pub fn mul_vec(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![BigRational::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (slot, p) in out.iter_mut().zip(&self.prod[i][j]) {
                    if !p.is_zero() {
                        let v = &*slot + p * &c;
                        *slot = v;
                    }
                }
            }
        }
        out
    }

    // v * e_k for a coefficient vector v.
    fn mul_vec_basis(&self, v: &[BigRational], k: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (c, cv) in v.iter().enumerate() {
            if cv.is_zero() {
                continue;
            }
            for (slot, p) in out.iter_mut().zip(&self.prod[c][k]) {
                if !p.is_zero() {
                    let nv = &*slot + p * cv;
                    *slot = nv;
                }
            }
        }
        out
    }

    // e_i * v for a coefficient vector v.
    fn mul_basis_vec(&self, i: usize, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (c, cv) in v.iter().enumerate() {
            if cv.is_zero() {
                continue;
            }
            for (slot, p) in out.iter_mut().zip(&self.prod[i][c]) {
                if !p.is_zero() {
                    let nv = &*slot + p * cv;
                    *slot = nv;
                }
            }
        }
        out
    }

    /// Verifies `(e_i e_j) e_k = e_i (e_j e_k)` on every basis triple.
    /// Returns the first offending triple.
    pub fn check_associativity(&self) -> core::result::Result<(), (usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.prod[i][j];
                for k in 0..self.dim {
                    let left = self.mul_vec_basis(ij, k);
                    let right = self.mul_basis_vec(i, &self.prod[j][k]);
                    if left != right {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of left multiplication by the coefficient vector `a`.
    pub fn left_mul_matrix_vec(&self, a: &[BigRational]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = vec![BigRational::zero(); self.dim];
            ej[j] = BigRational::one();
            let col = self.mul_vec(a, &ej);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Adjoins a two-sided unit as a new last basis vector.
    pub fn unitalize(&self) -> Algebra {
        let d = self.dim;
        let pad = |v: &[BigRational]| {
            let mut out = Vec::with_capacity(d + 1);
            out.extend_from_slice(v);
            out.push(BigRational::zero());
            out
        };
        let basis_vec = |i: usize| {
            let mut out = vec![BigRational::zero(); d + 1];
            out[i] = BigRational::one();
            out
        };
        let mut prod = vec![vec![Vec::new(); d + 1]; d + 1];
        // the fill is symmetric in (i, d) and (d, i), so indices stay
        #[allow(clippy::needless_range_loop)]
        for i in 0..d {
            for j in 0..d {
                prod[i][j] = pad(&self.prod[i][j]);
            }
            prod[i][d] = basis_vec(i);
            prod[d][i] = basis_vec(i);
        }
        prod[d][d] = basis_vec(d);
        Algebra {
            dim: d + 1,
            prod,
            unit_index: Some(d),
        }
    }

    /// Solves for a two-sided unit inside the algebra, if one exists.
    pub fn internal_unit_vec(&self) -> Option<Vec<BigRational>> {
        if let Some(u) = self.unit_index {
            let mut out = vec![BigRational::zero(); self.dim];
            out[u] = BigRational::one();
            return Some(out);
        }
        let d = self.dim;
        if d == 0 {
            return None;
        }
        // Unknown u with u e_j = e_j and e_j u = e_j for every j: rows are
        // indexed by (side, j, output coordinate), columns by u's coordinates.
        let mut sys = RationalMatrix::zeros(2 * d * d, d);
        let mut rhs = vec![BigRational::zero(); 2 * d * d];
        for j in 0..d {
            for i in 0..d {
                for out_c in 0..d {
                    sys.set(j * d + out_c, i, self.prod[i][j][out_c].clone());
                    sys.set(d * d + j * d + out_c, i, self.prod[j][i][out_c].clone());
                }
            }
            rhs[j * d + j] = BigRational::one();
            rhs[d * d + j * d + j] = BigRational::one();
        }
        sys.solve(&rhs)
    }

    /// Dimension of the Jacobson radical.
    ///
    /// Over the rationals the radical of the unitalization is the kernel of
    /// the trace form `(a, b) -> tr(L_a L_b)` of the regular representation,
    /// and the radical of the algebra itself is its intersection with the
    /// original span.
    pub fn radical_dimension(&self) -> usize {
        let hat = if self.unit_index.is_some() {
            self.clone()
        } else {
            self.unitalize()
        };
        let n = hat.dim;
        let mats: Vec<RationalMatrix> = (0..n)
            .map(|i| {
                let mut e = vec![BigRational::zero(); n];
                e[i] = BigRational::one();
                hat.left_mul_matrix_vec(&e)
            })
            .collect();
        // Pairing rows: every basis vector of the unitalization against the
        // original coordinates only.
        let mut pairing = RationalMatrix::zeros(n, self.dim);
        for b in 0..n {
            for a in 0..self.dim {
                let mut t = BigRational::zero();
                for i in 0..n {
                    for c in 0..n {
                        let x = mats[b].get(i, c);
                        if x.is_zero() {
                            continue;
                        }
                        t += mats[a].get(c, i) * x;
                    }
                }
                pairing.set(b, a, t);
            }
        }
        self.dim - pairing.rank()
    }
}

/// A presentation together with its certified multiplication table.
#[derive(Debug, Clone)]
pub struct StructureTable {
    pres: Presentation,
    basis: Vec<Word>,
    alg: Algebra,
}

impl StructureTable {
    /// Builds the table by rewriting all pairwise products, then certifies
    /// associativity on every basis triple.
    pub fn build(pres: Presentation) -> Result<StructureTable> {
        let basis = pres.basis();
        let prod: Vec<Vec<Vec<BigRational>>> = basis
            .iter()
            .map(|u| {
                basis
                    .iter()
                    .map(|v| pres.normal_form(u.concat(v)).coeff_vector())
                    .collect()
            })
            .collect();
        let alg = Algebra::from_products(prod, None);
        if let Err((i, j, k)) = alg.check_associativity() {
            return Err(Error::AssociativityViolation(basis[i], basis[j], basis[k]));
        }
        Ok(StructureTable { pres, basis, alg })
    }

    pub fn pres(&self) -> Presentation {
        self.pres
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// The product of two basis words as an element.
    pub fn entry(&self, i: usize, j: usize) -> Element {
        let coeffs = self.alg.basis_product(i, j);
        Element::from_terms(
            self.pres,
            self.basis
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (*w, c.clone())),
        )
    }

    fn check_pres(&self, elem: &Element) -> Result<()> {
        if elem.pres() == self.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    /// Matrix of left multiplication on the algebra itself.
    pub fn left_mul_matrix(&self, elem: &Element) -> Result<RationalMatrix> {
        self.check_pres(elem)?;
        Ok(self.alg.left_mul_matrix_vec(&elem.coeff_vector()))
    }

    /// Matrix of left multiplication on the unitalization. The adjoined
    /// unit contributes a final column holding the element itself and a
    /// zero bottom row.
    pub fn left_mul_matrix_unitalized(&self, elem: &Element) -> Result<RationalMatrix> {
        self.check_pres(elem)?;
        let d = self.alg.dim();
        let inner = self.left_mul_matrix(elem)?;
        let mut m = RationalMatrix::zeros(d + 1, d + 1);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, inner.get(i, j).clone());
            }
        }
        for (i, c) in elem.coeff_vector().into_iter().enumerate() {
            m.set(i, d, c);
        }
        Ok(m)
    }

    /// Minimal polynomial of left multiplication on the unitalization.
    pub fn minimal_polynomial_unitalized(&self, elem: &Element) -> Result<Poly> {
        Ok(self.left_mul_matrix_unitalized(elem)?.minimal_polynomial())
    }

    /// Minimal polynomial of left multiplication on the algebra itself.
    pub fn minimal_polynomial(&self, elem: &Element) -> Result<Poly> {
        Ok(self.left_mul_matrix(elem)?.minimal_polynomial())
    }

    /// The two-sided unit inside the algebra, if one exists.
    pub fn internal_unit(&self) -> Option<Element> {
        let v = self.alg.internal_unit_vec()?;
        Some(Element::from_terms(
            self.pres,
            self.basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (*w, c)),
        ))
    }

    pub fn radical_dimension(&self) -> usize {
        self.alg.radical_dimension()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::int;
    use crate::pres::{FamilyKind, OddZero};
    use crate::word::Gen;
    use alloc::string::ToString;

    #[test]
    fn chain_table_products_match_rewrites() {
        let t = StructureTable::build(Presentation::zn(3, OddZero::QpZero).unwrap()).unwrap();
        // Basis order: p, q, pq.
        assert_eq!(t.entry(0, 0).to_string(), "p");
        assert_eq!(t.entry(0, 1).to_string(), "pq");
        assert_eq!(t.entry(1, 0).to_string(), "0");
        assert_eq!(t.entry(1, 2).to_string(), "0");
        assert_eq!(t.entry(2, 0).to_string(), "0");
        assert_eq!(t.entry(0, 2).to_string(), "pq");
        assert_eq!(t.entry(2, 1).to_string(), "pq");
    }

    #[test]
    fn all_presentations_certify_associative() {
        for n in 1..=10 {
            for flag in [OddZero::QpZero, OddZero::PqZero] {
                StructureTable::build(Presentation::zn(n, flag).unwrap()).unwrap();
            }
        }
        for m in 2..=4 {
            for kind in FamilyKind::ALL {
                StructureTable::build(Presentation::family(kind, m).unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn chain_internal_unit_alternates_signs() {
        // For the 3-dimensional chain algebra the unit is p + q - pq.
        let t = StructureTable::build(Presentation::zn(3, OddZero::QpZero).unwrap()).unwrap();
        let u = t.internal_unit().unwrap();
        assert_eq!(u.to_string(), "p + q - pq");
        // It really is a unit.
        let p = Element::generator(t.pres(), Gen::P);
        assert_eq!(u.mul(&p).unwrap(), p);
        assert_eq!(p.mul(&u).unwrap(), p);
    }

    #[test]
    fn families_have_no_internal_unit() {
        for kind in FamilyKind::ALL {
            let t = StructureTable::build(Presentation::family(kind, 2).unwrap()).unwrap();
            assert!(t.internal_unit().is_none(), "{kind:?}");
        }
    }

    #[test]
    fn unitalize_adjoins_a_unit() {
        let t = StructureTable::build(Presentation::zn(4, OddZero::QpZero).unwrap()).unwrap();
        let hat = t.algebra().unitalize();
        assert_eq!(hat.dim(), 5);
        assert_eq!(hat.unit_index(), Some(4));
        assert!(hat.check_associativity().is_ok());
        assert_eq!(hat.internal_unit_vec().unwrap()[4], int(1));
    }

    #[test]
    fn radical_dimensions_of_small_algebras() {
        // One-dimensional chain algebra is just the ground field.
        let z1 = StructureTable::build(Presentation::zn(1, OddZero::QpZero).unwrap()).unwrap();
        assert_eq!(z1.radical_dimension(), 0);
        // Chain algebras split off two field factors, the rest is radical.
        for n in 2..=7 {
            let t = StructureTable::build(Presentation::zn(n, OddZero::QpZero).unwrap()).unwrap();
            assert_eq!(t.radical_dimension(), n - 2, "chain {n}");
        }
    }

    #[test]
    fn left_multiplication_is_a_homomorphism() {
        let t = StructureTable::build(Presentation::f2(2).unwrap()).unwrap();
        let p = Element::generator(t.pres(), Gen::P);
        let q = Element::generator(t.pres(), Gen::Q);
        let lp = t.left_mul_matrix(&p).unwrap();
        let lq = t.left_mul_matrix(&q).unwrap();
        let lpq = t.left_mul_matrix(&p.mul(&q).unwrap()).unwrap();
        assert_eq!(lp.mul(&lq), lpq);
        // Unitalized version keeps the product and adds a zero bottom row.
        let hp = t.left_mul_matrix_unitalized(&p).unwrap();
        for j in 0..hp.cols() {
            assert_eq!(hp.get(hp.rows() - 1, j), &int(0));
        }
    }
}
