//! Drazin and group inverses, numerically and in closed form.
//!
//! Three independent routes are provided and deliberately kept separate so
//! they can be checked against each other:
//!
//! * [`matrix_drazin`] computes the inverse of any square rational matrix by
//!   full-rank factorisation and recursion, with the index measured through
//!   the rank chain `rank(A^k)`.
//! * [`algebra_drazin`] lifts an element to left multiplication on the
//!   unitalization, inverts the matrix, and reads the element back off the
//!   unit column; the axioms are then re-verified inside the algebra.
//! * [`closed_form_drazin_alpha_pq`] and [`closed_form_group_lambda`] build
//!   the explicit word formulas for `(alpha p + q)` under the collapse
//!   hypothesis `(pq)^m = (pq)^(m-1)`, respectively its scalar twist
//!   `lambda (pq)^(m-1) = (pq)^m`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::{Element, WordCombination};
use crate::error::Error;
use crate::matrix::RationalMatrix;
use crate::models::{LambdaSpec, ModelPair};
use crate::table::StructureTable;
use crate::word::Word;
use crate::Result;

/// Verified properties of a claimed Drazin pair `(a, d, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrazinChecks {
    /// `a d = d a`.
    pub commutes: bool,
    /// `d a d = d`.
    pub inner: bool,
    /// `a^(k+1) d = a^k`.
    pub power: bool,
    /// `k` is the least exponent with the power identity.
    pub minimal: bool,
}

impl DrazinChecks {
    pub fn all(&self) -> bool {
        self.commutes && self.inner && self.power && self.minimal
    }
}

/// A Drazin inverse with its index and re-verified axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult<T> {
    pub inverse: T,
    pub index: usize,
    pub checks: DrazinChecks,
}

/// Least `k >= 0` with `rank(A^k) = rank(A^(k+1))`.
pub fn matrix_index(a: &RationalMatrix) -> usize {
    assert!(a.is_square());
    let mut prev = a.rows(); // rank of the identity
    let mut power = a.clone();
    let mut k = 0;
    loop {
        let r = power.rank();
        if r == prev {
            return k;
        }
        prev = r;
        k += 1;
        power = power.mul(a);
    }
}

// Cline recursion: factor A = F G with both factors of full rank, recurse
// on the smaller product G F, and assemble A^D = F ((GF)^D)^2 G. Each level
// strictly shrinks the size, ending at a zero or invertible block.
fn cline(a: &RationalMatrix) -> RationalMatrix {
    if a.is_zero() {
        return RationalMatrix::zeros(a.rows(), a.cols());
    }
    if let Some(inv) = a.inverse() {
        return inv;
    }
    let (f, g) = a.full_rank_factorization();
    let core = cline(&g.mul(&f));
    f.mul(&core).mul(&core).mul(&g)
}

fn matrix_checks(a: &RationalMatrix, d: &RationalMatrix, k: usize) -> DrazinChecks {
    let ad = a.mul(d);
    DrazinChecks {
        commutes: ad == d.mul(a),
        inner: d.mul(&ad) == *d,
        power: a.pow(k + 1).mul(d) == a.pow(k),
        minimal: k == 0 || a.pow(k).mul(d) != a.pow(k - 1),
    }
}

/// Drazin inverse of a square rational matrix.
pub fn matrix_drazin(a: &RationalMatrix) -> DrazinResult<RationalMatrix> {
    assert!(a.is_square());
    let inverse = cline(a);
    let index = matrix_index(a);
    let checks = matrix_checks(a, &inverse, index);
    DrazinResult {
        inverse,
        index,
        checks,
    }
}

// Axioms checked inside the algebra. Elements have no zeroth power, so the
// index is always >= 1 here and minimality is measured on the unitalized
// multiplication operator, where the identity is available.
fn element_checks(
    table: &StructureTable,
    a: &Element,
    d: &Element,
    k: usize,
) -> Result<DrazinChecks> {
    debug_assert!(k >= 1);
    let ad = a.mul(d)?;
    let commutes = ad == d.mul(a)?;
    let inner = d.mul(&ad)? == *d;
    let power = a.pow(k + 1)?.mul(d)? == a.pow(k)?;
    let minimal = matrix_index(&table.left_mul_matrix_unitalized(a)?) == k;
    Ok(DrazinChecks {
        commutes,
        inner,
        power,
        minimal,
    })
}

/// Drazin inverse of an algebra element through its action on the
/// unitalization. The inverse is a polynomial in the element with no
/// constant term, so it can be read back off the adjoined-unit column.
pub fn algebra_drazin(table: &StructureTable, a: &Element) -> Result<DrazinResult<Element>> {
    let mhat = table.left_mul_matrix_unitalized(a)?;
    let dm = matrix_drazin(&mhat);
    let dim = table.dim();
    if !dm.inverse.get(dim, dim).is_zero() {
        return Err(Error::ConstructionFailure(String::from(
            "drazin inverse escaped the algebra: unit coefficient is nonzero",
        )));
    }
    let inverse = Element::from_terms(
        table.pres(),
        table
            .basis()
            .iter()
            .enumerate()
            .map(|(i, w)| (*w, dm.inverse.get(i, dim).clone()))
            .filter(|(_, c)| !c.is_zero()),
    );
    let checks = element_checks(table, a, &inverse, dm.index)?;
    Ok(DrazinResult {
        inverse,
        index: dm.index,
        checks,
    })
}

/// Drazin inverse from a one-sided pair of witnesses: if
/// `a^(k1+1) x = a^k1` and `y a^(k2+1) = a^k2` then with `k = max(k1, k2)`
/// the inverse is `a^k x^(k+1) = y^(k+1) a^k`. Witness failures are
/// reported, not assumed.
pub fn drazin_via_left_right(
    table: &StructureTable,
    a: &Element,
    x: &Element,
    y: &Element,
    k1: usize,
    k2: usize,
) -> Result<DrazinResult<Element>> {
    if k1 == 0 || k2 == 0 {
        return Err(Error::ParameterError(format!(
            "witness exponents must be >= 1, got k1 = {k1}, k2 = {k2}"
        )));
    }
    if a.pow(k1 + 1)?.mul(x)? != a.pow(k1)? {
        return Err(Error::WitnessInvalid(format!(
            "right witness fails a^{} x = a^{}",
            k1 + 1,
            k1
        )));
    }
    if y.mul(&a.pow(k2 + 1)?)? != a.pow(k2)? {
        return Err(Error::WitnessInvalid(format!(
            "left witness fails y a^{} = a^{}",
            k2 + 1,
            k2
        )));
    }
    let k = k1.max(k2);
    let from_right = a.pow(k)?.mul(&x.pow(k + 1)?)?;
    let from_left = y.pow(k + 1)?.mul(&a.pow(k)?)?;
    if from_right != from_left {
        return Err(Error::WitnessInvalid(String::from(
            "witness products disagree",
        )));
    }
    let index = matrix_index(&table.left_mul_matrix_unitalized(a)?);
    let checks = element_checks(table, a, &from_right, index)?;
    Ok(DrazinResult {
        inverse: from_right,
        index,
        checks,
    })
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

// 1 for odd order, 0 for even: whether the word repeats its first letter.
fn parity(i: usize) -> BigRational {
    int((i % 2) as i64)
}

// Leading part shared by both closed-form kernels: an alternating-sign sum
// over all words of order < 2m - 2.
fn kernel_leading_sum(m: usize, alpha: &BigRational) -> WordCombination {
    let mut terms = Vec::new();
    for i in 1..=(2 * m - 3) {
        let half = int((i / 2) as i64);
        let ph = parity(i);
        let sign = if i % 2 == 1 { int(1) } else { int(-1) };
        let cp = (&half + (&half + &ph) / alpha) * &sign;
        let cq = (&half + &ph + &half / alpha) * &sign;
        terms.push((Word::p_word(i), cp));
        terms.push((Word::q_word(i), cq));
    }
    WordCombination::from_terms(terms)
}

/// The summation kernel of the closed-form Drazin inverse of
/// `alpha p + q` under the hypothesis `(pq)^m = (pq)^(m-1)`.
///
/// For `alpha != -1` this is the kernel `A` with
/// `(alpha p + q)^D = A^3 (alpha p + q)^2`; at `alpha = -1` the rational
/// coefficients of `A` blow up and the alternating kernel `B` with
/// `(alpha p + q)^D = B^4 (alpha p + q)^3` is returned instead.
pub fn drazin_kernel(m: usize, alpha: &BigRational) -> Result<WordCombination> {
    if m < 2 {
        return Err(Error::ParameterError(format!(
            "closed form needs m >= 2, got m = {m}"
        )));
    }
    if alpha.is_zero() {
        return Err(Error::ParameterError(String::from(
            "closed form needs alpha != 0",
        )));
    }
    if *alpha == int(-1) {
        let mut terms = Vec::new();
        for i in (1..=(2 * m - 3)).step_by(2) {
            terms.push((Word::q_word(i), int(1)));
            terms.push((Word::p_word(i), int(-1)));
        }
        return Ok(WordCombination::from_terms(terms));
    }
    let m1 = int((m - 1) as i64);
    let one_plus = BigRational::one() + alpha;
    let sq = &one_plus * &one_plus;
    let corrections = WordCombination::from_terms([
        (Word::q_word(2 * m - 2), -(&m1 + &m1 / alpha)),
        (Word::p_word(2 * m - 2), -(&m1 / alpha - alpha / &sq)),
        (Word::q_word(2 * m - 1), &m1 / alpha + BigRational::one() / &sq),
    ]);
    Ok(kernel_leading_sum(m, alpha).add(&corrections))
}

/// The summation kernel of the closed-form group inverse of
/// `alpha p + q` under the twist hypothesis `lambda (pq)^(m-1) = (pq)^m`
/// with `lambda != 1`: the group inverse is `K^2 (alpha p + q)` for the
/// returned kernel `K`, in both the generic and the `alpha = -1` branch.
pub fn group_kernel_lambda(spec: &LambdaSpec, alpha: &BigRational) -> Result<WordCombination> {
    if alpha.is_zero() {
        return Err(Error::ParameterError(String::from(
            "closed form needs alpha != 0",
        )));
    }
    let m = spec.m();
    let lam = spec.lambda();
    let one = BigRational::one();
    if *alpha == int(-1) {
        let mut terms = Vec::new();
        for i in (1..=(2 * m - 3)).step_by(2) {
            terms.push((Word::q_word(i), int(1)));
            terms.push((Word::p_word(i), int(-1)));
        }
        let tilt = &one / (&one - lam);
        terms.push((Word::q_word(2 * m - 1), tilt.clone()));
        terms.push((Word::p_word(2 * m - 1), -tilt));
        return Ok(WordCombination::from_terms(terms));
    }
    let mr = int(m as i64);
    let m1 = int((m - 1) as i64);
    let lm1 = lam - &one;
    let den = alpha * &lm1 * &lm1;
    let a1 = (alpha + &one) * (&mr * &lm1 + &one - int(2) * lam) / &den;
    let a2 = (&mr * (&one + alpha - lam - alpha * lam) + (lam - alpha + int(2) * alpha * lam)) / &den;
    let b1 = (&mr * (alpha + &one) * (&one - lam) + alpha * lam + int(2) * lam - &one) / &den;
    let b2 = -(&mr * (&one + alpha - alpha * lam - lam) + lam * (alpha + &one)) / &den;
    let corrections = WordCombination::from_terms([
        (Word::q_word(2 * m - 2), -(&m1 + &m1 / alpha)),
        (Word::p_word(2 * m - 2), a1),
        (Word::p_word(2 * m - 1), a2),
        (Word::q_word(2 * m - 1), b1),
        (Word::q_word(2 * m), b2),
    ]);
    Ok(kernel_leading_sum(m, alpha).add(&corrections))
}

/// Closed-form Drazin inverse of `alpha p + q` in a presentation satisfying
/// `(pq)^m = (pq)^(m-1)`. The hypothesis is checked by rewriting, the
/// formula is assembled from [`drazin_kernel`], and the axioms are
/// re-verified in the algebra before returning.
pub fn closed_form_drazin_alpha_pq(
    table: &StructureTable,
    m: usize,
    alpha: &BigRational,
) -> Result<DrazinResult<Element>> {
    if m < 2 {
        return Err(Error::ParameterError(format!(
            "closed form needs m >= 2, got m = {m}"
        )));
    }
    if alpha.is_zero() {
        return Err(Error::ParameterError(String::from(
            "closed form needs alpha != 0",
        )));
    }
    let pres = table.pres();
    if pres.normal_form(Word::p_word(2 * m)) != pres.normal_form(Word::p_word(2 * m - 2)) {
        return Err(Error::HypothesisViolation(format!(
            "(pq)^{m} = (pq)^{} fails in this presentation",
            m - 1
        )));
    }
    let kernel = drazin_kernel(m, alpha)?.into_element(pres);
    let a = Element::from_profile(pres, core::slice::from_ref(alpha), &[BigRational::one()]);
    let inverse = if *alpha == int(-1) {
        kernel.pow(4)?.mul(&a.pow(3)?)?
    } else {
        kernel.pow(3)?.mul(&a.pow(2)?)?
    };
    let index = matrix_index(&table.left_mul_matrix_unitalized(&a)?);
    let checks = element_checks(table, &a, &inverse, index)?;
    Ok(DrazinResult {
        inverse,
        index,
        checks,
    })
}

/// Checks that a model pair satisfies `lambda (pq)^(m-1) = (pq)^m` with `m`
/// least, i.e. the twist relation fails at every earlier stage.
pub fn verify_lambda_hypothesis(pair: &ModelPair, spec: &LambdaSpec) -> Result<()> {
    let pq = pair.p().mul(pair.q());
    for k in 2..=spec.m() {
        let holds = pq.pow(k - 1).scale(spec.lambda()) == pq.pow(k);
        if k == spec.m() && !holds {
            return Err(Error::HypothesisViolation(format!(
                "twist relation fails at m = {k}"
            )));
        }
        if k < spec.m() && holds && !spec.is_degenerate() {
            return Err(Error::HypothesisViolation(format!(
                "twist relation already holds at m = {k}, so m is not minimal"
            )));
        }
    }
    Ok(())
}

/// Closed-form group inverse of `alpha p + q` in a scalar-twisted model,
/// evaluated as matrices and verified against the group-inverse axioms.
/// Also returns the expanded word formula used.
///
/// A group inverse is a Drazin inverse certified at exponent 1, so the
/// reported index is always 1; `minimal` records that the measured index
/// never exceeds it (it can be 0 when the matrix happens to be invertible,
/// e.g. in the bare two-by-two cell).
pub fn closed_form_group_lambda(
    pair: &ModelPair,
    spec: &LambdaSpec,
    alpha: &BigRational,
) -> Result<(WordCombination, DrazinResult<RationalMatrix>)> {
    verify_lambda_hypothesis(pair, spec)?;
    let kernel = group_kernel_lambda(spec, alpha)?;
    let generator = WordCombination::from_terms([
        (Word::p_word(1), alpha.clone()),
        (Word::q_word(1), BigRational::one()),
    ]);
    let formula = kernel.pow(2).mul(&generator);
    let a = pair.represent_combination(&generator);
    let inverse = pair.represent_combination(&formula);
    let ad = a.mul(&inverse);
    let checks = DrazinChecks {
        commutes: ad == inverse.mul(&a),
        inner: inverse.mul(&ad) == inverse,
        power: a.mul(&ad) == a,
        minimal: matrix_index(&a) <= 1,
    };
    Ok((
        formula,
        DrazinResult {
            inverse,
            index: 1,
            checks,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{int as ri, rat};
    use crate::models::build_lambda_pair;
    use crate::pres::{FamilyKind, OddZero, Presentation};
    use crate::word::Gen;

    #[test]
    fn matrix_drazin_on_reference_matrices() {
        // Invertible: index 0 and the ordinary inverse.
        let a = RationalMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let r = matrix_drazin(&a);
        assert_eq!(r.index, 0);
        assert_eq!(a.mul(&r.inverse), RationalMatrix::identity(2));
        assert!(r.checks.all());

        // Nilpotent shift: inverse 0, index = nilpotency degree.
        let n = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let r = matrix_drazin(&n);
        assert!(r.inverse.is_zero());
        assert_eq!(r.index, 3);
        assert!(r.checks.all());

        // Idempotent of rank 1: its own Drazin inverse, index 1.
        let e = RationalMatrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let r = matrix_drazin(&e);
        assert_eq!(r.inverse, e);
        assert_eq!(r.index, 1);
        assert!(r.checks.all());

        // Zero and empty matrices.
        assert_eq!(matrix_drazin(&RationalMatrix::zeros(2, 2)).index, 1);
        assert_eq!(matrix_drazin(&RationalMatrix::zeros(0, 0)).index, 0);

        // Mixed Jordan structure: diag(J_2(0), 3).
        let j = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
        let r = matrix_drazin(&j);
        assert_eq!(r.index, 2);
        assert!(r.checks.all());
        assert_eq!(r.inverse.get(2, 2), &rat(1, 3));
        assert_eq!(r.inverse.get(0, 1), &ri(0));
    }

    #[test]
    fn algebra_drazin_in_a_chain_algebra() {
        let table = StructureTable::build(Presentation::zn(4, OddZero::QpZero).unwrap()).unwrap();
        let pres = table.pres();
        let p = Element::generator(pres, Gen::P);
        let q = Element::generator(pres, Gen::Q);

        // Idempotents are their own inverses with index 1.
        let r = algebra_drazin(&table, &p).unwrap();
        assert_eq!(r.inverse, p);
        assert_eq!(r.index, 1);
        assert!(r.checks.all());

        // pq is nilpotent of degree 2: inverse 0, index 2.
        let pq = p.mul(&q).unwrap();
        let r = algebra_drazin(&table, &pq).unwrap();
        assert!(r.inverse.is_zero());
        assert_eq!(r.index, 2);
        assert!(r.checks.all());

        // The zero element has index 1.
        let r = algebra_drazin(&table, &Element::zero(pres)).unwrap();
        assert!(r.inverse.is_zero());
        assert_eq!(r.index, 1);
        assert!(r.checks.all());
    }

    #[test]
    fn witness_route_agrees_with_direct_route() {
        let table = StructureTable::build(Presentation::f1(2).unwrap()).unwrap();
        let pres = table.pres();
        let a = Element::from_profile(pres, &[ri(1)], &[ri(1)]);
        let direct = algebra_drazin(&table, &a).unwrap();
        let k = direct.index;
        let via = drazin_via_left_right(&table, &a, &direct.inverse, &direct.inverse, k, k)
            .unwrap();
        assert_eq!(via.inverse, direct.inverse);
        assert!(via.checks.all());

        // A witness that fails its defining identity is rejected.
        let bad = Element::generator(pres, Gen::P);
        assert!(matches!(
            drazin_via_left_right(&table, &a, &bad, &bad, k, k),
            Err(Error::WitnessInvalid(_))
        ));
        assert!(matches!(
            drazin_via_left_right(&table, &a, &direct.inverse, &direct.inverse, 0, 1),
            Err(Error::ParameterError(_))
        ));
    }

    #[test]
    fn closed_form_matches_direct_drazin_for_small_cases() {
        for kind in FamilyKind::ALL {
            let m = 2;
            let table = StructureTable::build(Presentation::family(kind, m).unwrap()).unwrap();
            for alpha in [ri(1), ri(-1), rat(1, 3)] {
                let closed = closed_form_drazin_alpha_pq(&table, m, &alpha).unwrap();
                let a = Element::from_profile(
                    table.pres(),
                    core::slice::from_ref(&alpha),
                    &[BigRational::one()],
                );
                let direct = algebra_drazin(&table, &a).unwrap();
                assert_eq!(closed.inverse, direct.inverse, "{kind:?} alpha={alpha}");
                assert!(closed.checks.all(), "{kind:?} alpha={alpha}");
                let bound = if alpha == ri(-1) { 3 } else { 2 };
                assert!(closed.index <= bound, "{kind:?} alpha={alpha}");
            }
        }
    }

    #[test]
    fn closed_form_rejects_broken_hypothesis_and_parameters() {
        // A long chain algebra does not collapse (pq)^3 onto (pq)^2:
        // that word only vanishes from order six on.
        let table = StructureTable::build(Presentation::zn(9, OddZero::QpZero).unwrap()).unwrap();
        assert!(matches!(
            closed_form_drazin_alpha_pq(&table, 3, &ri(1)),
            Err(Error::HypothesisViolation(_))
        ));
        // But it does hold degenerately once both powers vanish.
        let degenerate = closed_form_drazin_alpha_pq(&table, 4, &ri(1)).unwrap();
        assert!(degenerate.checks.all());

        let f = StructureTable::build(Presentation::f1(2).unwrap()).unwrap();
        assert!(matches!(
            closed_form_drazin_alpha_pq(&f, 2, &ri(0)),
            Err(Error::ParameterError(_))
        ));
    }

    #[test]
    fn lambda_kernel_coefficients_at_reference_point() {
        // alpha = 1, lambda = 2, m = 2.
        let spec = LambdaSpec::new(2, ri(2)).unwrap();
        let k = group_kernel_lambda(&spec, &ri(1)).unwrap();
        assert_eq!(k.coeff(&Word::p_word(1)), ri(1));
        assert_eq!(k.coeff(&Word::q_word(1)), ri(1));
        assert_eq!(k.coeff(&Word::q_word(2)), ri(-2));
        assert_eq!(k.coeff(&Word::p_word(2)), ri(-2)); // a1
        assert_eq!(k.coeff(&Word::p_word(3)), ri(1)); // a2
        assert_eq!(k.coeff(&Word::q_word(3)), ri(1)); // b1
        assert_eq!(k.coeff(&Word::q_word(4)), ri(0)); // b2
    }

    #[test]
    fn lambda_closed_form_is_a_group_inverse() {
        for (m, lam, alpha) in [
            (2usize, ri(2), ri(1)),
            (2, rat(1, 2), ri(-1)),
            (3, ri(2), ri(2)),
            (3, ri(-1), ri(1)),
        ] {
            let spec = LambdaSpec::new(m, lam).unwrap();
            let pair = build_lambda_pair(&spec).unwrap();
            let (_, result) = closed_form_group_lambda(&pair, &spec, &alpha).unwrap();
            assert_eq!(result.index, 1, "m={m} alpha={alpha}");
            assert!(result.checks.all(), "m={m} alpha={alpha}");
            // Agreement with the matrix route.
            let a = pair.represent_combination(&WordCombination::from_terms([
                (Word::p_word(1), alpha.clone()),
                (Word::q_word(1), ri(1)),
            ]));
            assert_eq!(result.inverse, matrix_drazin(&a).inverse);
        }
    }
}
