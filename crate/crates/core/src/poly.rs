//! Dense univariate polynomials over the rationals.
//!
//! Used for the classification invariants (power series truncated at the
//! basis horizon) and for minimal polynomials of multiplication operators.
//! Coefficients are exact rationals; no floating point anywhere.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Order of vanishing at zero. The zero polynomial vanishes to infinite
/// order, and `Infinite` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ZeroMultiplicity {
    Finite(usize),
    Infinite,
}

/// A polynomial stored lowest degree first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Poly {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds from `coeffs[i] * t^i`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                let slot = &coeffs[i + j] + prod;
                coeffs[i + j] = slot;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// `t * self`.
    pub fn shift_up(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Order of vanishing at `t = 0`.
    pub fn root_zero_multiplicity(&self) -> ZeroMultiplicity {
        if self.is_zero() {
            return ZeroMultiplicity::Infinite;
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        ZeroMultiplicity::Finite(k)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let v = &rem[k + i] - &factor * &div.coeffs[i];
                rem[k + i] = v;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = factor;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) => {
                let inv = BigRational::one() / lead;
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// The product of the distinct irreducible factors, i.e. `self` divided
    /// by `gcd(self, self')`. Monic; has the same roots without multiplicity.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        let inv = BigRational::one() / q.leading().unwrap();
        q.scale(&inv)
    }

    // Clears denominators and content: the unique primitive integer
    // polynomial with positive leading coefficient spanning the same line.
    fn primitive_integer(&self) -> Vec<BigInt> {
        assert!(!self.is_zero());
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for v in &mut ints {
            *v = &*v / &content;
        }
        ints
    }

    /// All distinct rational roots, sorted.
    ///
    /// `complete` is true exactly when the roots found account for the whole
    /// degree of the square-free part, i.e. every complex root is one of the
    /// returned rationals. Divisor candidates come from trial division, so a
    /// root whose numerator or denominator hides a factor beyond the trial
    /// bound can be missed; in that case `complete` is false, never wrongly
    /// true.
    pub fn rational_roots(&self) -> RootSearch {
        if self.is_zero() {
            return RootSearch {
                roots: Vec::new(),
                complete: false,
            };
        }
        let sf = self.square_free_part();
        let mut ints = sf.primitive_integer();
        let mut roots = BTreeSet::new();

        let low_zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if low_zeros > 0 {
            roots.insert(BigRational::zero());
            ints.drain(..low_zeros);
        }
        let target_degree = ints.len() - 1;
        if target_degree > 0 {
            let nums = divisors(&ints[0].abs());
            let dens = divisors(&ints.last().unwrap().abs());
            for num in &nums {
                for den in &dens {
                    for sign in [1, -1] {
                        let cand = BigRational::new(num * BigInt::from(sign), den.clone());
                        if sf.eval(&cand).is_zero() {
                            roots.insert(cand);
                        }
                    }
                }
            }
        }
        let complete = roots.len() == sf.degree().unwrap_or(0);
        RootSearch {
            roots: roots.into_iter().collect(),
            complete,
        }
    }
}

/// Result of [`Poly::rational_roots`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSearch {
    pub roots: Vec<BigRational>,
    pub complete: bool,
}

// All positive divisors of n >= 1 via trial division. Factors beyond the
// trial bound are kept as a single pseudo-prime block, so the list can be
// incomplete only when n has two distinct prime factors above the bound.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    const TRIAL_BOUND: u64 = 1_000_000;
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest && d <= BigInt::from(TRIAL_BOUND) {
        let mut e = 0u32;
        while (&rest % &d).is_zero() {
            rest = &rest / &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let prev = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk = &pk * &p;
            out.extend(prev.iter().map(|v| v * &pk));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{int, rat};

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn arithmetic_and_normalisation() {
        let a = poly(&[(1, 1), (2, 1)]); // 1 + 2t
        let b = poly(&[(-1, 1), (-2, 1)]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.mul(&a), poly(&[(1, 1), (4, 1), (4, 1)]));
        assert_eq!(a.degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn zero_multiplicity_counts_low_zeros() {
        assert_eq!(
            poly(&[(0, 1), (0, 1), (5, 1)]).root_zero_multiplicity(),
            ZeroMultiplicity::Finite(2)
        );
        assert_eq!(
            poly(&[(3, 1)]).root_zero_multiplicity(),
            ZeroMultiplicity::Finite(0)
        );
        assert_eq!(
            Poly::zero().root_zero_multiplicity(),
            ZeroMultiplicity::Infinite
        );
        assert!(ZeroMultiplicity::Infinite > ZeroMultiplicity::Finite(1_000_000));
        assert!(ZeroMultiplicity::Finite(1) < ZeroMultiplicity::Finite(2));
    }

    #[test]
    fn division_and_gcd() {
        // (t - 1)(t - 2) and (t - 1)(t - 3) share t - 1.
        let a = poly(&[(2, 1), (-3, 1), (1, 1)]);
        let b = poly(&[(3, 1), (-4, 1), (1, 1)]);
        let g = a.gcd(&b);
        assert_eq!(g, poly(&[(-1, 1), (1, 1)]));
        let (q, r) = a.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[(-2, 1), (1, 1)]));
    }

    #[test]
    fn square_free_part_strips_multiplicity() {
        // t^2 (t - 1)^3 -> t (t - 1).
        let t = poly(&[(0, 1), (1, 1)]);
        let tm1 = poly(&[(-1, 1), (1, 1)]);
        let p = t.mul(&t).mul(&tm1).mul(&tm1).mul(&tm1);
        assert_eq!(p.square_free_part(), t.mul(&tm1));
    }

    #[test]
    fn rational_roots_of_split_polynomial() {
        // 6 (t - 1/2)(t + 2/3) t = 6t^3 + t^2 - 2t.
        let p = poly(&[(0, 1), (-2, 1), (1, 1), (6, 1)]);
        let found = p.rational_roots();
        assert!(found.complete);
        assert_eq!(found.roots, alloc::vec![rat(-2, 3), int(0), rat(1, 2)]);
    }

    #[test]
    fn irrational_roots_are_flagged_incomplete() {
        // t^2 - 2 has no rational roots.
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]);
        let found = p.rational_roots();
        assert!(!found.complete);
        assert!(found.roots.is_empty());

        // (t - 1)(t^2 - 2) finds 1 but cannot split the rest.
        let q = p.mul(&poly(&[(-1, 1), (1, 1)]));
        let found = q.rational_roots();
        assert!(!found.complete);
        assert_eq!(found.roots, alloc::vec![int(1)]);
    }

    #[test]
    fn eval_uses_exact_rationals() {
        let p = poly(&[(1, 2), (1, 3)]); // 1/2 + t/3
        assert_eq!(p.eval(&rat(3, 2)), int(1));
    }
}
