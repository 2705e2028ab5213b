//! Alternating words in two idempotent generators.
//!
//! A word is a finite alternating product of the generators `p` and `q`,
//! e.g. `pqp` or `qpqp`. Because the letters alternate, a word is determined
//! by its first letter and its *order* (the number of letters). The words of
//! order `i` are written `(pq)_i` (starting with `p`) and `(qp)_i` (starting
//! with `q`): `(pq)_3 = pqp`, `(qp)_4 = qpqp`, and so on.

use core::fmt;

/// One of the two idempotent generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    P,
    Q,
}

impl Gen {
    /// The other generator.
    pub fn other(self) -> Gen {
        match self {
            Gen::P => Gen::Q,
            Gen::Q => Gen::P,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::P => write!(f, "p"),
            Gen::Q => write!(f, "q"),
        }
    }
}

/// An alternating word, determined by its first letter and its length.
///
/// Words are ordered by `(order, start)` with the `p`-headed word first,
/// matching the usual enumeration `p, q, pq, qp, pqp, qpq, …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    start: Gen,
    order: usize,
}

impl Word {
    /// Builds the word with the given first letter and order (`order >= 1`).
    ///
    /// # Panics
    ///
    /// Panics if `order == 0`; the empty word is not an element of the list.
    pub fn new(start: Gen, order: usize) -> Word {
        assert!(order >= 1, "words have order >= 1");
        Word { start, order }
    }

    /// `(pq)_i`: the order-`i` word starting with `p`.
    pub fn p_word(order: usize) -> Word {
        Word::new(Gen::P, order)
    }

    /// `(qp)_i`: the order-`i` word starting with `q`.
    pub fn q_word(order: usize) -> Word {
        Word::new(Gen::Q, order)
    }

    pub fn start(&self) -> Gen {
        self.start
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The last letter: equals the first letter exactly for odd order.
    pub fn last(&self) -> Gen {
        if self.order % 2 == 1 {
            self.start
        } else {
            self.start.other()
        }
    }

    /// Concatenates two words using idempotency of the generators.
    ///
    /// If the last letter of `self` equals the first letter of `rhs` the two
    /// letters merge (`pp = p`), so the order drops by one. The operation is
    /// total: any two words concatenate to a word.
    ///
    /// # Example
    ///
    /// ```
    /// use idempair_core::word::Word;
    /// let pq = Word::p_word(2);
    /// let qp = Word::q_word(2);
    /// assert_eq!(pq.concat(&qp), Word::p_word(3)); // pq·qp = pqp
    /// assert_eq!(pq.concat(&pq), Word::p_word(4)); // pq·pq = pqpq
    /// ```
    pub fn concat(&self, rhs: &Word) -> Word {
        let overlap = usize::from(self.last() == rhs.start);
        Word {
            start: self.start,
            order: self.order + rhs.order - overlap,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.order, self.start).cmp(&(other.order, other.start))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut g = self.start;
        for _ in 0..self.order {
            write!(f, "{g}")?;
            g = g.other();
        }
        Ok(())
    }
}
