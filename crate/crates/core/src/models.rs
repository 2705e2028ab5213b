//! Concrete matrix pairs realising the presentations.
//!
//! Every builder returns two idempotent matrices whose generated algebra is
//! isomorphic to the intended presentation, together with a statement about
//! whether the ambient identity matrix lies in that algebra. Two shapes
//! exist for chain algebras:
//!
//! * `with_ambient_unit = true`: the left regular representation in the
//!   block basis (all `p`-headed words, then all `q`-headed words). The
//!   algebra contains the ambient identity, which represents the internal
//!   unit of the chain algebra.
//! * `with_ambient_unit = false`: one extra dimension is adjoined and both
//!   generators pick up an all-ones column acting on it. Every product of
//!   the generators then has a zero bottom row, so no combination reaches
//!   the ambient identity.
//!
//! Family pairs are block sums of a chain part and a fixed small block
//! realising the three- or four-dimensional non-unital summand; the small
//! block acts on the unitalization of that summand because its action on
//! itself is not faithful.

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::{Element, WordCombination};
use crate::error::Error;
use crate::matrix::RationalMatrix;
use crate::pres::{FamilyKind, OddZero, Presentation};
use crate::word::{Gen, Word};
use crate::Result;

/// Parameters of the scalar-twisted pair: `p q p = lambda p` with the twist
/// relation `lambda (pq)^(m-1) = (pq)^m` holding at `m` and failing below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSpec {
    m: usize,
    lambda: BigRational,
}

impl LambdaSpec {
    /// Requires `m >= 2` and `lambda != 1` (at 1 the twist relation
    /// degenerates into the untwisted one).
    pub fn new(m: usize, lambda: BigRational) -> Result<LambdaSpec> {
        if m < 2 {
            return Err(Error::ParameterError(format!(
                "twisted pair needs m >= 2, got m = {m}"
            )));
        }
        if lambda == BigRational::one() {
            return Err(Error::ParameterError(alloc::string::String::from(
                "lambda = 1 is excluded: the twist relation collapses",
            )));
        }
        Ok(LambdaSpec { m, lambda })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    /// `lambda = 0` is allowed but degenerate: the minimality of `m` fails
    /// because the zero twist already holds one step earlier.
    pub fn is_degenerate(&self) -> bool {
        self.lambda.is_zero()
    }
}

/// What a model pair is a model of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelKind {
    Presentation(Presentation),
    Lambda(LambdaSpec),
    /// A chain of the given length joined with the three-dimensional
    /// non-chain summand.
    ChainWithW3 { n: usize, flag: OddZero },
    /// A chain joined with the four-dimensional non-chain summand.
    ChainWithW4 { n: usize, flag: OddZero },
}

/// Two concrete idempotent matrices and their bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelPair {
    p: RationalMatrix,
    q: RationalMatrix,
    intended: ModelKind,
    contains_ambient_unit: bool,
}

impl ModelPair {
    pub fn p(&self) -> &RationalMatrix {
        &self.p
    }

    pub fn q(&self) -> &RationalMatrix {
        &self.q
    }

    pub fn intended(&self) -> &ModelKind {
        &self.intended
    }

    /// Whether the ambient identity matrix lies in the generated algebra.
    pub fn contains_ambient_unit(&self) -> bool {
        self.contains_ambient_unit
    }

    pub fn size(&self) -> usize {
        self.p.rows()
    }

    /// Image of an alternating word: the corresponding product of `p`s and
    /// `q`s.
    pub fn represent_word(&self, w: &Word) -> RationalMatrix {
        let mut g = w.start();
        let mut acc = self.generator(g).clone();
        for _ in 1..w.order() {
            g = g.other();
            acc = acc.mul(self.generator(g));
        }
        acc
    }

    fn generator(&self, g: Gen) -> &RationalMatrix {
        match g {
            Gen::P => &self.p,
            Gen::Q => &self.q,
        }
    }

    /// Word images of both letter shapes for orders `1..=max_order`, built
    /// by one multiplication per order. Index `i` holds order `i + 1`.
    pub fn word_images(&self, max_order: usize) -> (Vec<RationalMatrix>, Vec<RationalMatrix>) {
        let mut ps = Vec::with_capacity(max_order);
        let mut qs = Vec::with_capacity(max_order);
        if max_order == 0 {
            return (ps, qs);
        }
        ps.push(self.p.clone());
        qs.push(self.q.clone());
        for o in 1..max_order {
            // Extend on the right by the letter the previous word ends before.
            let next_p = &ps[o - 1].mul(if o % 2 == 1 { &self.q } else { &self.p });
            let next_q = &qs[o - 1].mul(if o % 2 == 1 { &self.p } else { &self.q });
            ps.push(next_p.clone());
            qs.push(next_q.clone());
        }
        (ps, qs)
    }

    /// Image of `sum xs[i-1] (pq-word of order i) + sum ys[i-1] (qp-word of
    /// order i)`.
    pub fn represent_profile(&self, xs: &[BigRational], ys: &[BigRational]) -> RationalMatrix {
        let top = xs.len().max(ys.len());
        let (ps, qs) = self.word_images(top);
        let mut acc = RationalMatrix::zeros(self.size(), self.size());
        for (i, c) in xs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&ps[i].scale(c));
            }
        }
        for (i, c) in ys.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&qs[i].scale(c));
            }
        }
        acc
    }

    /// Image of an element of a presentation.
    pub fn represent_element(&self, elem: &Element) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.size(), self.size());
        for (w, c) in elem.terms() {
            acc = acc.add(&self.represent_word(w).scale(c));
        }
        acc
    }

    /// Image of a presentation-free word combination.
    pub fn represent_combination(&self, comb: &WordCombination) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.size(), self.size());
        for (w, c) in comb.terms() {
            acc = acc.add(&self.represent_word(w).scale(c));
        }
        acc
    }
}

/// Chain algebra model of dimension `n`, in either shape.
pub fn build_zn_pair(n: usize, flag: OddZero, with_ambient_unit: bool) -> Result<ModelPair> {
    let pres = Presentation::zn(n, flag)?;
    let r = pres.max_order(Gen::P);
    let s = pres.max_order(Gen::Q);
    let size = if with_ambient_unit { n } else { n + 1 };
    let one = BigRational::one;
    // Coordinates: p-headed word of order i at i-1, q-headed at r+i-1,
    // the adjoined coordinate (if any) last.
    let mut p = RationalMatrix::zeros(size, size);
    let mut q = RationalMatrix::zeros(size, size);
    for i in 1..=r {
        p.set(i - 1, i - 1, one());
        if i < s {
            q.set(r + i, i - 1, one()); // p-word order i -> q-word order i+1
        }
    }
    for i in 1..=s {
        q.set(r + i - 1, r + i - 1, one());
        if i < r {
            p.set(i, r + i - 1, one()); // q-word order i -> p-word order i+1
        }
    }
    if !with_ambient_unit {
        for i in 0..r {
            p.set(i, n, one());
        }
        for i in 0..s {
            q.set(r + i, n, one());
        }
    }
    Ok(ModelPair {
        p,
        q,
        intended: ModelKind::Presentation(pres),
        contains_ambient_unit: with_ambient_unit,
    })
}

/// The fixed three-by-three pair used as the reference example for the
/// three-dimensional chain algebra without ambient unit.
pub fn pinned_z3_pair() -> ModelPair {
    ModelPair {
        p: RationalMatrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        q: RationalMatrix::from_int_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
        intended: ModelKind::Presentation(
            Presentation::zn(3, OddZero::QpZero).expect("3 >= 1"),
        ),
        contains_ambient_unit: false,
    }
}

// The three-dimensional non-unital summand acting on its unitalization,
// basis (p, q, pq, e). Acting on itself would not be faithful: p - pq kills
// every basis vector from the left.
fn w3_pair() -> (RationalMatrix, RationalMatrix) {
    let p = RationalMatrix::from_int_rows(&[
        &[1, 0, 0, 1],
        &[0, 0, 0, 0],
        &[0, 1, 1, 0],
        &[0, 0, 0, 0],
    ]);
    let q = RationalMatrix::from_int_rows(&[
        &[1, 0, 0, 0],
        &[1, 1, 1, 1],
        &[-1, 0, 0, 0],
        &[0, 0, 0, 0],
    ]);
    (p, q)
}

// The four-dimensional non-unital summand on its unitalization, basis
// (p, q, pq, qp, e).
fn w4_pair() -> (RationalMatrix, RationalMatrix) {
    let p = RationalMatrix::from_int_rows(&[
        &[1, 0, 0, 1, 1],
        &[0, 0, 0, 0, 0],
        &[0, 1, 1, 0, 0],
        &[0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0],
    ]);
    let q = RationalMatrix::from_int_rows(&[
        &[0, 0, 0, 0, 0],
        &[0, 1, 1, 0, 1],
        &[0, 0, 0, 0, 0],
        &[1, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0],
    ]);
    (p, q)
}

/// Family model: a chain block plus the matching non-unital summand.
///
/// The chain dimension and, for odd chain dimension, the choice of vanishing
/// top word follow the decomposition of each family; picking the other flag
/// for `f2`/`f4` would break `(pq)^m = (pq)^(m-1)` inside the chain block.
pub fn build_family_pair(kind: FamilyKind, m: usize) -> Result<ModelPair> {
    let pres = Presentation::family(kind, m)?;
    let (zn, flag) = match kind {
        FamilyKind::F1 | FamilyKind::F3 => (4 * m - 6, OddZero::QpZero),
        FamilyKind::F2 | FamilyKind::F4 => (4 * m - 5, OddZero::PqZero),
    };
    let z = build_zn_pair(zn, flag, true)?;
    let (wp, wq) = match kind {
        FamilyKind::F1 | FamilyKind::F2 => w3_pair(),
        FamilyKind::F3 | FamilyKind::F4 => w4_pair(),
    };
    Ok(ModelPair {
        p: RationalMatrix::block_diag(&[z.p(), &wp]),
        q: RationalMatrix::block_diag(&[z.q(), &wq]),
        intended: ModelKind::Presentation(pres),
        contains_ambient_unit: false,
    })
}

/// A chain of length `n` joined with the three-dimensional summand, for
/// classifying elements of that direct sum. Faithful, ambient unit outside
/// the span.
pub fn build_zw3_pair(n: usize, flag: OddZero) -> Result<ModelPair> {
    let z = build_zn_pair(n, flag, true)?;
    let (wp, wq) = w3_pair();
    Ok(ModelPair {
        p: RationalMatrix::block_diag(&[z.p(), &wp]),
        q: RationalMatrix::block_diag(&[z.q(), &wq]),
        intended: ModelKind::ChainWithW3 { n, flag },
        contains_ambient_unit: false,
    })
}

/// A chain of length `n` joined with the four-dimensional summand.
pub fn build_zw4_pair(n: usize, flag: OddZero) -> Result<ModelPair> {
    let z = build_zn_pair(n, flag, true)?;
    let (wp, wq) = w4_pair();
    Ok(ModelPair {
        p: RationalMatrix::block_diag(&[z.p(), &wp]),
        q: RationalMatrix::block_diag(&[z.q(), &wq]),
        intended: ModelKind::ChainWithW4 { n, flag },
        contains_ambient_unit: false,
    })
}

/// Scalar-twisted pair: a two-by-two cell with `p q p = lambda p`, padded
/// for `m > 2` with a chain tail that defeats the twist relation below `m`.
pub fn build_lambda_pair(spec: &LambdaSpec) -> Result<ModelPair> {
    let lam = spec.lambda();
    let one = BigRational::one();
    let p_cell = RationalMatrix::from_rows(alloc::vec![
        alloc::vec![one.clone(), BigRational::zero()],
        alloc::vec![BigRational::zero(), BigRational::zero()],
    ]);
    let q_cell = RationalMatrix::from_rows(alloc::vec![
        alloc::vec![lam.clone(), one.clone()],
        alloc::vec![lam * (&one - lam), &one - lam],
    ]);
    if spec.m() == 2 {
        return Ok(ModelPair {
            p: p_cell,
            q: q_cell,
            intended: ModelKind::Lambda(spec.clone()),
            contains_ambient_unit: true,
        });
    }
    let tail = build_zn_pair(4 * spec.m() - 8, OddZero::QpZero, false)?;
    Ok(ModelPair {
        p: RationalMatrix::block_diag(&[&p_cell, tail.p()]),
        q: RationalMatrix::block_diag(&[&q_cell, tail.q()]),
        intended: ModelKind::Lambda(spec.clone()),
        contains_ambient_unit: false,
    })
}

/// Rank of the span of the represented basis words, flattened. Equality
/// with the presentation dimension certifies the model is faithful.
pub fn word_image_rank(pair: &ModelPair, pres: &Presentation) -> usize {
    let rows: Vec<Vec<BigRational>> = pres
        .basis()
        .iter()
        .map(|w| pair.represent_word(w).entries().to_vec())
        .collect();
    RationalMatrix::from_rows(rows).rank()
}

/// Whether the ambient identity lies in the span of the represented words.
pub fn ambient_unit_in_span(pair: &ModelPair, pres: &Presentation) -> bool {
    let mut rows: Vec<Vec<BigRational>> = pres
        .basis()
        .iter()
        .map(|w| pair.represent_word(w).entries().to_vec())
        .collect();
    let base = RationalMatrix::from_rows(rows.clone()).rank();
    rows.push(RationalMatrix::identity(pair.size()).entries().to_vec());
    RationalMatrix::from_rows(rows).rank() == base
}

// Flattened images of every word through `max_order`, one row per word.
fn word_rows(pair: &ModelPair, max_order: usize) -> Vec<Vec<BigRational>> {
    let (ps, qs) = pair.word_images(max_order);
    ps.iter()
        .chain(qs.iter())
        .map(|m| m.entries().to_vec())
        .collect()
}

/// Rank of the span of all word images through `max_order`. Useful for
/// pairs whose target algebra is not given by a presentation.
pub fn word_span_rank(pair: &ModelPair, max_order: usize) -> usize {
    RationalMatrix::from_rows(word_rows(pair, max_order)).rank()
}

/// Whether the ambient identity lies in the span of all word images
/// through `max_order`.
pub fn ambient_unit_in_word_span(pair: &ModelPair, max_order: usize) -> bool {
    let mut rows = word_rows(pair, max_order);
    let base = RationalMatrix::from_rows(rows.clone()).rank();
    rows.push(RationalMatrix::identity(pair.size()).entries().to_vec());
    RationalMatrix::from_rows(rows).rank() == base
}

/// Checks `represent(word) = represent(normal form of word)` for both
/// letter shapes through `max_order`; returns how many words were checked.
/// Covering the orders where rewrite rules first apply certifies that the
/// model satisfies every defining relation of the presentation.
pub fn verify_relations(pair: &ModelPair, pres: &Presentation, max_order: usize) -> Result<usize> {
    let mut checked = 0;
    for o in 1..=max_order {
        for w in [Word::p_word(o), Word::q_word(o)] {
            let direct = pair.represent_word(&w);
            let reduced = pair.represent_element(&pres.normal_form(w));
            if direct != reduced {
                return Err(Error::ConstructionFailure(format!(
                    "model violates the rewrite of {w}"
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::int;

    fn idempotent(m: &RationalMatrix) -> bool {
        m.mul(m) == *m
    }

    #[test]
    fn chain_pairs_satisfy_their_presentation() {
        for n in 1..=8 {
            for flag in [OddZero::QpZero, OddZero::PqZero] {
                for with_unit in [true, false] {
                    let pair = build_zn_pair(n, flag, with_unit).unwrap();
                    let pres = Presentation::zn(n, flag).unwrap();
                    assert!(idempotent(pair.p()), "p idempotent n={n}");
                    assert!(idempotent(pair.q()), "q idempotent n={n}");
                    verify_relations(&pair, &pres, n + 3).unwrap();
                    assert_eq!(word_image_rank(&pair, &pres), n, "faithful n={n}");
                    assert_eq!(
                        ambient_unit_in_span(&pair, &pres),
                        with_unit,
                        "ambient unit n={n} with_unit={with_unit}"
                    );
                }
            }
        }
    }

    #[test]
    fn family_pairs_are_faithful_and_unitless() {
        for kind in FamilyKind::ALL {
            for m in 2..=4 {
                let pair = build_family_pair(kind, m).unwrap();
                let pres = Presentation::family(kind, m).unwrap();
                assert!(idempotent(pair.p()));
                assert!(idempotent(pair.q()));
                verify_relations(&pair, &pres, 2 * m + 3).unwrap();
                assert_eq!(
                    word_image_rank(&pair, &pres),
                    pres.dimension(),
                    "{kind:?} m={m}"
                );
                assert!(!ambient_unit_in_span(&pair, &pres), "{kind:?} m={m}");
            }
        }
    }

    #[test]
    fn pinned_pair_matches_reference_values() {
        let pair = pinned_z3_pair();
        let pres = Presentation::zn(3, OddZero::QpZero).unwrap();
        assert!(idempotent(pair.p()));
        assert!(idempotent(pair.q()));
        // q p = 0 picks the default vanishing word.
        assert!(pair.q().mul(pair.p()).is_zero());
        verify_relations(&pair, &pres, 6).unwrap();
        let sum = pair.p().add(pair.q());
        assert_eq!(sum.rank(), 2);
        assert_eq!(sum.mul(&sum).rank(), 2);
        assert!(!ambient_unit_in_span(&pair, &pres));
        // The internal unit of the algebra represents as diag(1, 1, 0).
        let table = crate::table::StructureTable::build(pres).unwrap();
        let unit = table.internal_unit().unwrap();
        assert_eq!(
            pair.represent_element(&unit),
            RationalMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn twisted_pair_satisfies_twist_at_m_and_not_below() {
        for (m, lam) in [(2usize, crate::element::rat(1, 2)), (3, int(2)), (4, int(-1))] {
            let spec = LambdaSpec::new(m, lam.clone()).unwrap();
            let pair = build_lambda_pair(&spec).unwrap();
            assert!(idempotent(pair.p()));
            assert!(idempotent(pair.q()));
            // p q p = lambda p holds in the bare cell; the padded models
            // only promise the twist relation at m.
            if m == 2 {
                let pqp = pair.p().mul(pair.q()).mul(pair.p());
                assert_eq!(pqp, pair.p().scale(&lam));
            }
            // lambda (pq)^(k-1) = (pq)^k exactly from k = m upward.
            let pq = pair.p().mul(pair.q());
            for k in 2..=m + 1 {
                let holds = pq.pow(k - 1).scale(&lam) == pq.pow(k);
                assert_eq!(holds, k >= m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn twisted_pair_rejects_bad_parameters() {
        assert!(LambdaSpec::new(1, int(2)).is_err());
        assert!(LambdaSpec::new(3, int(1)).is_err());
        assert!(LambdaSpec::new(2, int(0)).unwrap().is_degenerate());
        assert!(!LambdaSpec::new(2, int(3)).unwrap().is_degenerate());
    }

    #[test]
    fn profile_representation_is_linear_in_the_words() {
        let pair = build_zn_pair(5, OddZero::QpZero, false).unwrap();
        let xs = [int(2), int(0), int(-1)];
        let ys = [int(1)];
        let direct = pair.represent_profile(&xs, &ys);
        let by_words = pair
            .represent_word(&Word::p_word(1))
            .scale(&int(2))
            .add(&pair.represent_word(&Word::p_word(3)).scale(&int(-1)))
            .add(&pair.represent_word(&Word::q_word(1)));
        assert_eq!(direct, by_words);
    }

    #[test]
    fn chain_with_summand_pairs_are_faithful_without_ambient_unit() {
        for n in 2..=7 {
            for flag in [OddZero::QpZero, OddZero::PqZero] {
                let w3 = build_zw3_pair(n, flag).unwrap();
                assert!(idempotent(w3.p()) && idempotent(w3.q()), "n={n}");
                // Spanning dimension: chain length plus the summand size.
                assert_eq!(word_span_rank(&w3, n + 3), n + 3, "n={n}");
                assert!(!ambient_unit_in_word_span(&w3, n + 3), "n={n}");

                let w4 = build_zw4_pair(n, flag).unwrap();
                assert!(idempotent(w4.p()) && idempotent(w4.q()), "n={n}");
                assert_eq!(word_span_rank(&w4, n + 3), n + 4, "n={n}");
                assert!(!ambient_unit_in_word_span(&w4, n + 3), "n={n}");
            }
        }
    }
}
