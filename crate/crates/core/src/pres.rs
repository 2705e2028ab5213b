//! Finite-dimensional presentations spanned by alternating words.
//!
//! A presentation fixes which alternating words in the idempotents `p` and
//! `q` form a linear basis, and how every longer word rewrites into that
//! basis. Two shapes are supported:
//!
//! * chain algebras [`Presentation::zn`]: every word above a cut-off order
//!   is zero. For even `n` both order-(n/2 + 1) words vanish; for odd `n`
//!   exactly one word of order (n + 1)/2 vanishes, selected by [`OddZero`].
//!   The dimension is `n`.
//! * the four families `f1` .. `f4` with parameter `m >= 2`: no word
//!   vanishes, but the top words satisfy extra linear relations. Every
//!   family imposes `(pq)^m = (pq)^(m-1)`. The `f1`/`f3` families also
//!   collapse `(qp)^m = (qp)^(m-1)`, and the `f1`/`f2` families satisfy a
//!   four-term relation mixing the order-(2m-1) and order-(2m-2) words.
//!   The dimensions are `4m-3`, `4m-2`, `4m-2`, `4m-1`.
//!
//! Rewriting always terminates because each step either lowers the word
//! order or lands on basis words, and [`crate::table`] certifies that the
//! resulting product is associative, so the rules are mutually consistent.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::element::{add_term, Element};
use crate::error::Error;
use crate::word::{Gen, Word};
use crate::Result;

/// For odd-dimensional chain algebras: which top word is set to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddZero {
    /// The top word starting with `q` vanishes (the default choice).
    QpZero,
    /// The top word starting with `p` vanishes.
    PqZero,
}

impl OddZero {
    fn killed_start(self) -> Gen {
        match self {
            OddZero::QpZero => Gen::Q,
            OddZero::PqZero => Gen::P,
        }
    }
}

/// Distinguishes the four top-relation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    F1,
    F2,
    F3,
    F4,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::F1,
        FamilyKind::F2,
        FamilyKind::F3,
        FamilyKind::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::F1 => "F1",
            FamilyKind::F2 => "F2",
            FamilyKind::F3 => "F3",
            FamilyKind::F4 => "F4",
        }
    }
}

/// A finite-dimensional presentation with a fixed word basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    Zn { n: usize, flag: OddZero },
    F1 { m: usize },
    F2 { m: usize },
    F3 { m: usize },
    F4 { m: usize },
}

impl Presentation {
    /// Chain algebra of dimension `n >= 1`.
    ///
    /// For even `n` the `flag` is irrelevant (both top words vanish) and is
    /// normalised to [`OddZero::QpZero`] so equal presentations compare equal.
    pub fn zn(n: usize, flag: OddZero) -> Result<Presentation> {
        if n == 0 {
            return Err(Error::ParameterError(format!(
                "chain algebra needs n >= 1, got n = {n}"
            )));
        }
        let flag = if n.is_multiple_of(2) { OddZero::QpZero } else { flag };
        Ok(Presentation::Zn { n, flag })
    }

    /// One of the four top-relation families; requires `m >= 2`.
    pub fn family(kind: FamilyKind, m: usize) -> Result<Presentation> {
        if m < 2 {
            return Err(Error::ParameterError(format!(
                "family {} needs m >= 2, got m = {m}",
                kind.name()
            )));
        }
        Ok(match kind {
            FamilyKind::F1 => Presentation::F1 { m },
            FamilyKind::F2 => Presentation::F2 { m },
            FamilyKind::F3 => Presentation::F3 { m },
            FamilyKind::F4 => Presentation::F4 { m },
        })
    }

    pub fn f1(m: usize) -> Result<Presentation> {
        Presentation::family(FamilyKind::F1, m)
    }

    pub fn f2(m: usize) -> Result<Presentation> {
        Presentation::family(FamilyKind::F2, m)
    }

    pub fn f3(m: usize) -> Result<Presentation> {
        Presentation::family(FamilyKind::F3, m)
    }

    pub fn f4(m: usize) -> Result<Presentation> {
        Presentation::family(FamilyKind::F4, m)
    }

    /// The family kind and parameter, if this is not a chain algebra.
    pub fn family_parts(&self) -> Option<(FamilyKind, usize)> {
        match *self {
            Presentation::Zn { .. } => None,
            Presentation::F1 { m } => Some((FamilyKind::F1, m)),
            Presentation::F2 { m } => Some((FamilyKind::F2, m)),
            Presentation::F3 { m } => Some((FamilyKind::F3, m)),
            Presentation::F4 { m } => Some((FamilyKind::F4, m)),
        }
    }

    /// Largest order of a basis word starting with `start`.
    pub fn max_order(&self, start: Gen) -> usize {
        match *self {
            Presentation::Zn { n, flag } => {
                if n % 2 == 0 {
                    n / 2
                } else {
                    let hi = n.div_ceil(2);
                    if start == flag.killed_start() {
                        hi - 1
                    } else {
                        hi
                    }
                }
            }
            Presentation::F1 { m } => match start {
                Gen::P => 2 * m - 2,
                Gen::Q => 2 * m - 1,
            },
            Presentation::F2 { m } | Presentation::F3 { m } => 2 * m - 1,
            Presentation::F4 { m } => match start {
                Gen::P => 2 * m - 1,
                Gen::Q => 2 * m,
            },
        }
    }

    /// Linear dimension: the number of basis words.
    pub fn dimension(&self) -> usize {
        self.max_order(Gen::P) + self.max_order(Gen::Q)
    }

    pub fn is_basis_word(&self, w: &Word) -> bool {
        w.order() <= self.max_order(w.start())
    }

    /// All basis words in the canonical order `p, q, pq, qp, pqp, ...`.
    pub fn basis(&self) -> Vec<Word> {
        let tp = self.max_order(Gen::P);
        let tq = self.max_order(Gen::Q);
        let mut out = Vec::with_capacity(tp + tq);
        for o in 1..=tp.max(tq) {
            if o <= tp {
                out.push(Word::p_word(o));
            }
            if o <= tq {
                out.push(Word::q_word(o));
            }
        }
        out
    }

    /// Position of `w` in [`Presentation::basis`], if `w` is a basis word.
    pub fn basis_index(&self, w: &Word) -> Option<usize> {
        if !self.is_basis_word(w) {
            return None;
        }
        let tp = self.max_order(Gen::P);
        let tq = self.max_order(Gen::Q);
        let o = w.order();
        let before = (o - 1).min(tp) + (o - 1).min(tq);
        Some(before + usize::from(w.start() == Gen::Q && o <= tp))
    }

    // One rewriting step for a non-basis word. Coefficients are +-1 and each
    // produced word has strictly smaller order or is itself a basis word, so
    // iterated reduction terminates.
    fn reduce_step(&self, w: Word) -> Vec<(Word, i64)> {
        debug_assert!(!self.is_basis_word(&w));
        let Some((kind, m)) = self.family_parts() else {
            // Chain algebra: everything above the horizon is zero.
            return Vec::new();
        };
        let o = w.order();
        match w.start() {
            Gen::P if o >= 2 * m => vec![(Word::p_word(o - 2), 1)],
            Gen::P => {
                // o == 2m-1, non-basis only in f1:
                // (pq)^(m-1) p = (pq)^(m-1) + (qp)^(m-1) - (qp)^(m-1) q.
                debug_assert_eq!(kind, FamilyKind::F1);
                vec![
                    (Word::p_word(2 * m - 2), 1),
                    (Word::q_word(2 * m - 2), 1),
                    (Word::q_word(2 * m - 1), -1),
                ]
            }
            Gen::Q if o > 2 * m => vec![(Word::q_word(o - 2), 1)],
            Gen::Q => {
                // o == 2m, a basis word in f4.
                match kind {
                    FamilyKind::F1 | FamilyKind::F3 => vec![(Word::q_word(2 * m - 2), 1)],
                    // (qp)^m = (qp)^(m-1) q + (pq)^(m-1) p - (pq)^(m-1).
                    FamilyKind::F2 => vec![
                        (Word::q_word(2 * m - 1), 1),
                        (Word::p_word(2 * m - 1), 1),
                        (Word::p_word(2 * m - 2), -1),
                    ],
                    FamilyKind::F4 => unreachable!("order-2m q word is a basis word in f4"),
                }
            }
        }
    }

    /// Expresses a word in the basis.
    pub fn normal_form(&self, w: Word) -> Element {
        let mut acc: BTreeMap<Word, BigRational> = BTreeMap::new();
        let mut work = vec![(w, BigRational::one())];
        while let Some((w, c)) = work.pop() {
            if self.is_basis_word(&w) {
                add_term(&mut acc, w, c);
                continue;
            }
            for (next, k) in self.reduce_step(w) {
                work.push((next, &c * BigRational::from_integer(BigInt::from(k))));
            }
        }
        Element::from_basis_map(*self, acc)
    }
}

/// An equality of two words, to be tested via [`Presentation::normal_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordRelation {
    pub lhs: Word,
    pub rhs: Word,
}

impl WordRelation {
    /// Whether both sides have the same normal form in `pres`.
    pub fn holds_in(&self, pres: &Presentation) -> bool {
        pres.normal_form(self.lhs) == pres.normal_form(self.rhs)
    }
}

/// Shape of the word assumed to collapse onto `(pq)^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessShape {
    /// `(pq)^(m-k) p`, odd order, starts with `p`.
    OddP,
    /// `(qp)^(m-k) q`, odd order, starts with `q`.
    OddQ,
    /// `(qp)^(m-k)`, even order, starts with `q`.
    EvenQ,
}

/// A collapse hypothesis together with the relation it forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightlyCoupledWitness {
    pub hypothesis: WordRelation,
    pub derived: WordRelation,
}

/// If a word of order about `2(m-k)` equals the top word `(pq)^m`, the pair
/// of idempotents is so tightly coupled that the word already equals its
/// one-step extension. This returns both relations for the given shape so
/// callers can verify the implication inside any concrete presentation.
///
/// Shapes and conclusions (`j = m - k`):
///
/// * [`WitnessShape::OddP`]: `(pq)^j p = (pq)^m` forces `(pq)^j p = (pq)^(j+1)`.
/// * [`WitnessShape::OddQ`]: `(qp)^j q = (pq)^m` forces `(qp)^j q = (pq)^(j+1)`.
/// * [`WitnessShape::EvenQ`]: `(qp)^j = (pq)^m` forces `(qp)^j = (pq)^j p`.
///
/// Requires `1 <= k < m`.
pub fn tightly_coupled_witness(
    shape: WitnessShape,
    m: usize,
    k: usize,
) -> Result<TightlyCoupledWitness> {
    if k < 1 || k >= m {
        return Err(Error::ParameterError(format!(
            "witness needs 1 <= k < m, got k = {k}, m = {m}"
        )));
    }
    let j = m - k;
    let (lhs, derived_rhs) = match shape {
        WitnessShape::OddP => (Word::p_word(2 * j + 1), Word::p_word(2 * j + 2)),
        WitnessShape::OddQ => (Word::q_word(2 * j + 1), Word::p_word(2 * j + 2)),
        WitnessShape::EvenQ => (Word::q_word(2 * j), Word::p_word(2 * j + 1)),
    };
    Ok(TightlyCoupledWitness {
        hypothesis: WordRelation {
            lhs,
            rhs: Word::p_word(2 * m),
        },
        derived: WordRelation {
            lhs,
            rhs: derived_rhs,
        },
    })
}
