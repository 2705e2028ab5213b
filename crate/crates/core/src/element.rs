//! Elements of a presented algebra: rational combinations of basis words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::pres::Presentation;
use crate::word::{Gen, Word};
use crate::Result;

// Accumulates `c * w` into a coefficient map, dropping cancelled terms.
pub(crate) fn add_term(map: &mut BTreeMap<Word, BigRational>, w: Word, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let v = match map.remove(&w) {
        Some(old) => old + c,
        None => c,
    };
    if !v.is_zero() {
        map.insert(w, v);
    }
}

/// An element of a fixed presentation, stored on the word basis.
///
/// Invariants: every key is a basis word of the presentation and no stored
/// coefficient is zero, so equality of elements is equality of maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pres: Presentation,
    terms: BTreeMap<Word, BigRational>,
}

impl Element {
    pub fn zero(pres: Presentation) -> Element {
        Element {
            pres,
            terms: BTreeMap::new(),
        }
    }

    // `map` must already be reduced: basis words only, no zero coefficients.
    pub(crate) fn from_basis_map(pres: Presentation, map: BTreeMap<Word, BigRational>) -> Element {
        debug_assert!(map.keys().all(|w| pres.is_basis_word(w)));
        debug_assert!(map.values().all(|c| !c.is_zero()));
        Element { pres, terms: map }
    }

    /// The image of a word, rewritten into the basis.
    pub fn from_word(pres: Presentation, w: Word) -> Element {
        pres.normal_form(w)
    }

    /// The image of a generator. May be zero (a one-dimensional chain
    /// algebra kills one of the two generators).
    pub fn generator(pres: Presentation, g: Gen) -> Element {
        Element::from_word(pres, Word::new(g, 1))
    }

    /// Sum of `coeff * word` over arbitrary words, each rewritten first.
    pub fn from_terms(
        pres: Presentation,
        terms: impl IntoIterator<Item = (Word, BigRational)>,
    ) -> Element {
        let mut acc = BTreeMap::new();
        for (w, c) in terms {
            for (bw, bc) in pres.normal_form(w).terms {
                add_term(&mut acc, bw, bc * &c);
            }
        }
        Element::from_basis_map(pres, acc)
    }

    /// Builds `sum xs[i-1] * (pq-word of order i) + sum ys[i-1] * (qp-word
    /// of order i)`. Entries beyond the basis horizon are rewritten, not
    /// discarded, so any profile length is accepted.
    pub fn from_profile(pres: Presentation, xs: &[BigRational], ys: &[BigRational]) -> Element {
        let terms = xs
            .iter()
            .enumerate()
            .map(|(i, c)| (Word::p_word(i + 1), c.clone()))
            .chain(
                ys.iter()
                    .enumerate()
                    .map(|(i, c)| (Word::q_word(i + 1), c.clone())),
            );
        Element::from_terms(pres, terms)
    }

    pub fn pres(&self) -> Presentation {
        self.pres
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a basis word (zero when absent).
    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Basis terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient vector with respect to `pres.basis()`.
    pub fn coeff_vector(&self) -> Vec<BigRational> {
        let mut out = alloc::vec![BigRational::zero(); self.pres.dimension()];
        for (w, c) in &self.terms {
            let i = self.pres.basis_index(w).expect("stored words are basis words");
            out[i] = c.clone();
        }
        out
    }

    fn check_pres(&self, rhs: &Element) -> Result<()> {
        if self.pres == rhs.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn add(&self, rhs: &Element) -> Result<Element> {
        self.check_pres(rhs)?;
        let mut acc = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_term(&mut acc, *w, c.clone());
        }
        Ok(Element::from_basis_map(self.pres, acc))
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Element {
        if c.is_zero() {
            return Element::zero(self.pres);
        }
        let terms = self.terms.iter().map(|(w, v)| (*w, v * c)).collect();
        Element::from_basis_map(self.pres, terms)
    }

    pub fn mul(&self, rhs: &Element) -> Result<Element> {
        self.check_pres(rhs)?;
        let mut acc = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let c = a * b;
                for (w, k) in self.pres.normal_form(u.concat(v)).terms {
                    add_term(&mut acc, w, k * &c);
                }
            }
        }
        Ok(Element::from_basis_map(self.pres, acc))
    }

    /// `k`-th power for `k >= 1`. These algebras carry no unit element in
    /// general, so the zeroth power is rejected.
    pub fn pow(&self, k: usize) -> Result<Element> {
        if k == 0 {
            return Err(Error::ParameterError(alloc::string::String::from(
                "power must be >= 1: the algebra need not contain a unit",
            )));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms)
    }
}

// Shared term formatter: "p + 3/2*pq - qp" style, zero prints as "0".
fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<Word, BigRational>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (w, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag != BigRational::one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "{w}")?;
    }
    Ok(())
}

/// A rational combination of words with no relations imposed beyond the
/// idempotency baked into word concatenation. Useful for formulas that make
/// sense before choosing a presentation; reduce with
/// [`WordCombination::into_element`] or evaluate in a matrix model.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordCombination {
    terms: BTreeMap<Word, BigRational>,
}

impl WordCombination {
    pub fn zero() -> WordCombination {
        WordCombination::default()
    }

    pub fn word(w: Word) -> WordCombination {
        WordCombination::from_terms([(w, BigRational::one())])
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = (Word, BigRational)>,
    ) -> WordCombination {
        let mut acc = BTreeMap::new();
        for (w, c) in terms {
            add_term(&mut acc, w, c);
        }
        WordCombination { terms: acc }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, rhs: &WordCombination) -> WordCombination {
        let mut acc = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_term(&mut acc, *w, c.clone());
        }
        WordCombination { terms: acc }
    }

    pub fn scale(&self, c: &BigRational) -> WordCombination {
        if c.is_zero() {
            return WordCombination::zero();
        }
        WordCombination {
            terms: self.terms.iter().map(|(w, v)| (*w, v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &WordCombination) -> WordCombination {
        let mut acc = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                add_term(&mut acc, u.concat(v), a * b);
            }
        }
        WordCombination { terms: acc }
    }

    /// `k`-th power for `k >= 1`; the span of words has no unit.
    pub fn pow(&self, k: usize) -> WordCombination {
        assert!(k >= 1, "word combinations have no zeroth power");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduces every word into the basis of a presentation.
    pub fn into_element(&self, pres: Presentation) -> Element {
        Element::from_terms(pres, self.terms.iter().map(|(w, c)| (*w, c.clone())))
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms)
    }
}

/// Convenience for integer coefficients in tests and constructions.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience for whole numbers.
pub fn int(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::OddZero;
    use alloc::string::ToString;

    fn z3() -> Presentation {
        Presentation::zn(3, OddZero::QpZero).unwrap()
    }

    #[test]
    fn products_follow_the_chain_relations() {
        let pres = z3();
        let p = Element::generator(pres, Gen::P);
        let q = Element::generator(pres, Gen::Q);
        // p and q are idempotent.
        assert_eq!(p.mul(&p).unwrap(), p);
        assert_eq!(q.mul(&q).unwrap(), q);
        // qp = 0 under the default flag, pq survives.
        assert!(q.mul(&p).unwrap().is_zero());
        assert_eq!(p.mul(&q).unwrap().to_string(), "pq");
        // pq absorbs further factors: pq * p = (pqp) = 0 here.
        let pq = p.mul(&q).unwrap();
        assert!(pq.mul(&p).unwrap().is_zero());
    }

    #[test]
    fn mixing_presentations_is_rejected() {
        let a = Element::generator(z3(), Gen::P);
        let b = Element::generator(Presentation::f1(2).unwrap(), Gen::P);
        assert!(matches!(a.add(&b), Err(Error::PresentationMismatch)));
        assert!(matches!(a.mul(&b), Err(Error::PresentationMismatch)));
    }

    #[test]
    fn profile_entries_beyond_horizon_are_rewritten() {
        // In f1(2): x3 multiplies pqp which rewrites to pq + qp - qpq.
        let pres = Presentation::f1(2).unwrap();
        let a = Element::from_profile(pres, &[int(0), int(0), int(1)], &[]);
        assert_eq!(a.to_string(), "pq + qp - qpq");
        // In z3 the same entry just dies.
        let b = Element::from_profile(z3(), &[int(0), int(0), int(1)], &[]);
        assert!(b.is_zero());
    }

    #[test]
    fn coefficient_vector_matches_basis_order() {
        let pres = z3();
        let a = Element::from_profile(pres, &[int(2), rat(1, 3)], &[int(-1)]);
        assert_eq!(a.coeff_vector(), alloc::vec![int(2), int(-1), rat(1, 3)]);
    }

    #[test]
    fn display_formats_signs_and_fractions() {
        let pres = z3();
        let a = Element::from_profile(pres, &[int(-1), rat(3, 2)], &[int(1)]);
        assert_eq!(a.to_string(), "-p + q + 3/2*pq");
        assert_eq!(Element::zero(pres).to_string(), "0");
    }

    #[test]
    fn powers_multiply_out() {
        let pres = z3();
        let p = Element::generator(pres, Gen::P);
        let q = Element::generator(pres, Gen::Q);
        let s = p.add(&q).unwrap();
        // (p + q)^2 = p + q + pq since qp = 0.
        let sq = s.pow(2).unwrap();
        assert_eq!(sq.to_string(), "p + q + pq");
        assert!(s.pow(0).is_err());
    }
}
