//! The exact scalar ring: integers, rationals and polynomials in `a`, `b`, `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{Monomial, Poly, Var};
use super::ArithError;

/// An exact value. Constructors and arithmetic keep the narrowest kind:
/// a polynomial with no variables becomes a rational, and a rational with
/// denominator one becomes an integer. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
}

/// A rational point at which polynomials in `a`, `b`, `t` are evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub a: BigRational,
    pub b: BigRational,
    pub t: BigRational,
}

impl Point {
    pub fn new(a: BigRational, b: BigRational, t: BigRational) -> Self {
        Point { a, b, t }
    }

    pub fn ints(a: i64, b: i64, t: i64) -> Self {
        Point::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigRational::from_integer(t.into()),
        )
    }

    pub fn get(&self, v: Var) -> &BigRational {
        match v {
            Var::A => &self.a,
            Var::B => &self.b,
            Var::T => &self.t,
        }
    }

    pub fn as_scalars(&self) -> (Scalar, Scalar, Scalar) {
        (
            Scalar::from(self.a.clone()),
            Scalar::from(self.b.clone()),
            Scalar::from(self.t.clone()),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={},b={},t={}", self.a, self.b, self.t)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::Int(v)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Int(v.into())
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        if r.denom().is_one() {
            Scalar::Int(r.to_integer())
        } else {
            Scalar::Rat(r)
        }
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::from(c),
            None => Scalar::Poly(p),
        }
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Scalar::Int(BigInt::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::from(v)
    }

    /// `n/d` in lowest terms. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from(BigRational::new(n.into(), d.into()))
    }

    pub fn var(v: Var) -> Self {
        Scalar::Poly(Poly::var(v))
    }

    pub fn a() -> Self {
        Scalar::var(Var::A)
    }

    pub fn b() -> Self {
        Scalar::var(Var::B)
    }

    pub fn t() -> Self {
        Scalar::var(Var::T)
    }

    pub fn is_int(&self) -> bool {
        matches!(self, Scalar::Int(_))
    }

    pub fn is_poly(&self) -> bool {
        matches!(self, Scalar::Poly(_))
    }

    /// Integer value, or `KindMismatch` for a non-integer.
    pub fn as_int(&self) -> Result<&BigInt, ArithError> {
        match self {
            Scalar::Int(v) => Ok(v),
            other => Err(ArithError::KindMismatch(format!(
                "expected an integer, found {other}"
            ))),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_int().ok().and_then(|v| v.to_i64())
    }

    /// Rational value, or `KindMismatch` for a non-constant polynomial.
    pub fn to_rational(&self) -> Result<BigRational, ArithError> {
        match self {
            Scalar::Int(v) => Ok(BigRational::from_integer(v.clone())),
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Poly(p) => Err(ArithError::KindMismatch(format!(
                "expected a constant, found polynomial {p}"
            ))),
        }
    }

    /// Polynomial view of any scalar.
    pub fn to_poly(&self) -> Poly {
        match self {
            Scalar::Int(v) => Poly::constant(BigRational::from_integer(v.clone())),
            Scalar::Rat(r) => Poly::constant(r.clone()),
            Scalar::Poly(p) => p.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            _ => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            _ => false,
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(num_traits::pow(v.clone(), e as usize)),
            Scalar::Rat(r) => Scalar::from(num_traits::pow(r.clone(), e as usize)),
            Scalar::Poly(p) => Scalar::from(p.pow(e)),
        }
    }

    /// Integer power with sign `(-1)^e` folded in cheaply.
    pub fn neg_one_pow(e: u64) -> Scalar {
        if e.is_multiple_of(2) {
            Scalar::int(1)
        } else {
            Scalar::int(-1)
        }
    }

    /// Ring division: integers must divide exactly, polynomials must divide
    /// with zero remainder, rationals always divide.
    pub fn exact_div(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match (self, rhs) {
            (Scalar::Int(x), Scalar::Int(y)) => {
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Ok(Scalar::Int(q))
                } else {
                    Err(ArithError::NotDivisible(format!("{x} by {y}")))
                }
            }
            (Scalar::Poly(_), _) | (_, Scalar::Poly(_)) => {
                let num = self.to_poly();
                let den = rhs.to_poly();
                num.div_exact(&den)
                    .map(Scalar::from)
                    .ok_or_else(|| ArithError::NotDivisible(format!("{num} by {den}")))
            }
            _ => Ok(Scalar::from(self.to_rational()? / rhs.to_rational()?)),
        }
    }

    /// Field division: like `exact_div` but integer quotients may become rational.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match (self, rhs) {
            (Scalar::Poly(_), _) | (_, Scalar::Poly(_)) => self.exact_div(rhs),
            _ => Ok(Scalar::from(self.to_rational()? / rhs.to_rational()?)),
        }
    }

    /// Substitutes rational values for `a`, `b`, `t`.
    pub fn eval(&self, point: &Point) -> BigRational {
        match self {
            Scalar::Int(v) => BigRational::from_integer(v.clone()),
            Scalar::Rat(r) => r.clone(),
            Scalar::Poly(p) => p.eval([&point.a, &point.b, &point.t]),
        }
    }

    /// Replaces one variable by an arbitrary scalar.
    pub fn substitute(&self, v: Var, value: &Scalar) -> Scalar {
        let p = match self {
            Scalar::Poly(p) => p,
            _ => return self.clone(),
        };
        let groups = p.collect_in(v);
        // Horner in the substituted variable.
        let mut acc = Scalar::zero();
        for coef in groups.into_iter().rev() {
            acc = &(&acc * value) + &Scalar::from(coef);
        }
        acc
    }

    /// Replaces all three variables at once.
    pub fn substitute_all(&self, a: &Scalar, b: &Scalar, t: &Scalar) -> Scalar {
        let p = match self {
            Scalar::Poly(p) => p,
            _ => return self.clone(),
        };
        let mut total = Scalar::zero();
        for (mono, coef) in p.terms() {
            let [ea, eb, et] = mono.0;
            let term = &(&a.pow(ea) * &b.pow(eb)) * &t.pow(et);
            total = &total + &(&term * &Scalar::from(coef));
        }
        total
    }

    /// Coefficient of a monomial, zero for absent ones.
    pub fn coefficient(&self, mono: Monomial) -> BigRational {
        match self {
            Scalar::Poly(p) => p.coefficient(mono),
            other if mono.is_one() => other.to_rational().expect("constant"),
            _ => BigRational::zero(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        match self {
            Scalar::Poly(p) => p.total_degree(),
            _ => 0,
        }
    }
}

fn binary(lhs: &Scalar, rhs: &Scalar, int_op: fn(&BigInt, &BigInt) -> BigInt, rat_op: fn(&BigRational, &BigRational) -> BigRational, poly_op: fn(&Poly, &Poly) -> Poly) -> Scalar {
    match (lhs, rhs) {
        (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(int_op(x, y)),
        (Scalar::Poly(_), _) | (_, Scalar::Poly(_)) => Scalar::from(poly_op(&lhs.to_poly(), &rhs.to_poly())),
        _ => Scalar::from(rat_op(
            &lhs.to_rational().expect("constant"),
            &rhs.to_rational().expect("constant"),
        )),
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        binary(self, rhs, |x, y| x + y, |x, y| x + y, Poly::add)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        binary(self, rhs, |x, y| x - y, |x, y| x - y, Poly::sub)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        binary(self, rhs, |x, y| x * y, |x, y| x * y, Poly::mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}


impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Parses integer or `p/q` literals.
impl FromStr for Scalar {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                Ok(Scalar::from(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Scalar::Int(n))
            }
        }
    }
}

/// `true` when the scalar is a negative constant.
pub fn is_negative_constant(x: &Scalar) -> bool {
    match x {
        Scalar::Int(v) => v.is_negative(),
        Scalar::Rat(r) => r.is_negative(),
        Scalar::Poly(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(Scalar::ratio(3, 6), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(3, 6).to_string(), "1/2");
        assert_eq!(Scalar::ratio(4, -2), Scalar::int(-2));
        assert_eq!("-6/4".parse::<Scalar>().unwrap().to_string(), "-3/2");
    }

    #[test]
    fn evaluation_example() {
        let p = &(&Scalar::a() * &Scalar::b()) + &Scalar::b();
        assert_eq!(p.eval(&Point::ints(2, 3, 0)), BigRational::from_integer(9.into()));
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (Scalar::a(), Scalar::b());
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn demotion_after_cancellation() {
        let a = Scalar::a();
        let z = &(&a + &Scalar::int(2)) - &a;
        assert_eq!(z, Scalar::int(2));
        assert!(z.is_int());
    }

    #[test]
    fn ring_division() {
        assert_eq!(Scalar::int(12).exact_div(&Scalar::int(4)).unwrap(), Scalar::int(3));
        assert!(matches!(
            Scalar::int(7).exact_div(&Scalar::int(2)),
            Err(ArithError::NotDivisible(_))
        ));
        assert_eq!(Scalar::int(7).div(&Scalar::int(2)).unwrap(), Scalar::ratio(7, 2));
        let (a, b) = (Scalar::a(), Scalar::b());
        let p = &a.pow(2) - &b.pow(2);
        assert_eq!(p.exact_div(&(&a - &b)).unwrap(), &a + &b);
        assert!(matches!(p.exact_div(&a), Err(ArithError::NotDivisible(_))));
        assert!(matches!(a.exact_div(&Scalar::zero()), Err(ArithError::DivisionByZero)));
    }

    #[test]
    fn substitution() {
        let (a, b) = (Scalar::a(), Scalar::b());
        let p = &(&a * &a) + &b;
        let q = p.substitute(Var::A, &(&b + &Scalar::int(1)));
        assert_eq!(q, &(&(&b * &b) + &(&Scalar::int(3) * &b)) + &Scalar::int(1));
    }
}
