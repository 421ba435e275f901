//! Sparse multivariate polynomials in the formal parameters `a`, `b`, `t`.
//!
//! A polynomial is stored as an integer numerator polynomial over a common
//! positive denominator. The numerator content and the denominator are kept
//! coprime, and zero coefficients are never stored, so two equal polynomials
//! always have identical storage.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// One of the three formal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    A,
    B,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::T];

    pub fn index(self) -> usize {
        match self {
            Var::A => 0,
            Var::B => 1,
            Var::T => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::T => "t",
        }
    }
}

/// Exponent triple `(e_a, e_b, e_t)`. The derived ordering is lexicographic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let mut e = [0; 3];
        for (i, x) in e.iter_mut().enumerate() {
            *x = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn degree(self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }
}

/// Polynomial in `a`, `b`, `t` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
    den: BigInt,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Poly::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(c: BigRational, mono: Monomial) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let (num, den) = c.into_raw();
        let mut terms = BTreeMap::new();
        terms.insert(mono, num);
        let mut p = Poly { terms, den };
        p.normalize();
        p
    }

    /// Builds a polynomial from integer coefficients over a common denominator.
    pub fn from_parts(terms: BTreeMap<Monomial, BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut p = Poly { terms, den };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.terms.values_mut() {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        self.den /= &g;
        for c in self.terms.values_mut() {
            *c /= &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The constant value, if the polynomial has no non-constant monomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .get(&Monomial::ONE)
                .map(|c| BigRational::new(c.clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Terms in ascending lexicographic monomial order with rational coefficients.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, BigRational)> + '_ {
        self.terms
            .iter()
            .map(|(m, c)| (*m, BigRational::new(c.clone(), self.den.clone())))
    }

    pub fn coefficient(&self, mono: Monomial) -> BigRational {
        self.terms
            .get(&mono)
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(Monomial, BigRational)> {
        self.terms().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v.index()]).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.combine(other, true)
    }

    fn combine(&self, other: &Poly, negate: bool) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let (mut terms, den, scale_other) = if self.den == other.den {
            (self.terms.clone(), self.den.clone(), None)
        } else {
            let g = self.den.gcd(&other.den);
            let left = &other.den / &g;
            let right = &self.den / &g;
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * &left))
                .collect();
            (terms, &self.den * &left, Some(right))
        };
        for (m, c) in &other.terms {
            let c = match &scale_other {
                Some(s) => c * s,
                None => c.clone(),
            };
            let entry = terms.entry(*m).or_insert_with(BigInt::zero);
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        let mut p = Poly { terms, den };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = c1 * c2;
                terms
                    .entry(m1.mul(*m2))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let mut p = Poly {
            terms,
            den: &self.den * &other.den,
        };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut p = Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x * c.numer()))
                .collect(),
            den: &self.den * c.denom(),
        };
        p.normalize();
        p
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Uses the lexicographic leading term of the divisor.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lead_mono, lead_coef) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((mono, coef)) = rem.leading() {
            let shift = mono.checked_div(lead_mono)?;
            let q = Poly::term(coef / &lead_coef, shift);
            rem = rem.sub(&q.mul(divisor));
            quot = quot.add(&q);
        }
        Some(quot)
    }

    /// Substitutes rational values for all three variables.
    pub fn eval(&self, values: [&BigRational; 3]) -> BigRational {
        let mut total = BigRational::zero();
        let mut cache: [Vec<BigRational>; 3] = Default::default();
        for (mono, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(BigRational::one());
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * values[i];
                    powers.push(next);
                }
                term *= &powers[e as usize];
            }
            total += term;
        }
        total / BigRational::from_integer(self.den.clone())
    }

    /// Groups the polynomial by powers of `v`: entry `i` is the coefficient of `v^i`.
    pub fn collect_in(&self, v: Var) -> Vec<Poly> {
        let idx = v.index();
        let mut groups: BTreeMap<u32, BTreeMap<Monomial, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[idx];
            rest.0[idx] = 0;
            groups.entry(e).or_default().insert(rest, c.clone());
        }
        let top = groups.keys().next_back().copied().unwrap_or(0) as usize;
        let mut out = vec![Poly::zero(); top + 1];
        for (e, terms) in groups {
            out[e as usize] = Poly::from_parts(terms, self.den.clone());
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mono: Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = mono.0[v.index()];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(v.name())?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Canonical rendering, highest lexicographic monomial first: `-3*a^2*b + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let p = a.add(&b).mul(&a.sub(&b));
        assert_eq!(p, a.mul(&a).sub(&b.mul(&b)));
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn canonical_rendering() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let t = Poly::var(Var::T);
        let p = t.sub(&a.mul(&a).mul(&b).scale(&rat(3, 1)));
        assert_eq!(p.to_string(), "-3*a^2*b + t");
        assert_eq!(a.scale(&rat(3, 2)).to_string(), "3/2*a");
        assert_eq!(Poly::constant(rat(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn rational_coefficients_stay_normalized() {
        let a = Poly::var(Var::A);
        let half = a.scale(&rat(1, 2));
        let sum = half.add(&half);
        assert_eq!(sum, a);
        assert!(sum.denominator().is_one());
        let mixed = a.scale(&rat(2, 3)).add(&Poly::constant(rat(1, 6)));
        assert_eq!(mixed.denominator(), &BigInt::from(6));
    }

    #[test]
    fn exact_division() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let p = a.pow(3).sub(&b.pow(3));
        let q = p.div_exact(&a.sub(&b)).unwrap();
        assert_eq!(q, a.mul(&a).add(&a.mul(&b)).add(&b.mul(&b)));
        assert!(p.div_exact(&a.add(&b)).is_none());
    }

    #[test]
    fn evaluation_and_collection() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let p = a.mul(&b).add(&b);
        let v = p.eval([&rat(2, 1), &rat(3, 1), &rat(0, 1)]);
        assert_eq!(v, rat(9, 1));
        let by_a = p.collect_in(Var::A);
        assert_eq!(by_a, vec![b.clone(), b]);
    }
}
