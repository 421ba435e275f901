//! Dense univariate polynomials in `z` over a ring.

use std::fmt;

use super::{Ring, Scalar};

/// Coefficients in ascending powers of `z`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        UniPoly::new(vec![R::zero(), R::one()])
    }

    /// `c * z^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, z: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(c);
        }
        acc
    }

    /// Composition `self(q(z))`.
    pub fn compose(&self, q: &UniPoly<R>) -> Self {
        let mut acc = <UniPoly<R> as Ring>::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Scalar> {
    /// Renders as `c_n*z^n + ... + c_0`, highest power first.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let zpow = match i {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{i}"),
            };
            let part = if i == 0 {
                format!("({c})")
            } else if c.is_one() {
                zpow
            } else {
                format!("({c})*{zpow}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for UniPoly<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        UniPoly::constant(R::one())
    }

    fn from_i64(v: i64) -> Self {
        UniPoly::constant(R::from_i64(v))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return <Self as Ring>::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        UniPoly::new(out)
    }

    fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_eval() {
        let z = UniPoly::<Scalar>::z();
        let one = <UniPoly<Scalar> as Ring>::one();
        let p = z.add(&one).mul(&z.sub(&one));
        assert_eq!(p.coeffs(), &[Scalar::int(-1), Scalar::zero(), Scalar::one()]);
        assert_eq!(p.eval(&Scalar::int(3)), Scalar::int(8));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(<UniPoly<Scalar> as Ring>::zero().degree(), None);
    }

    #[test]
    fn composition() {
        let z = UniPoly::<Scalar>::z();
        let sq = z.mul(&z);
        let shifted = sq.compose(&z.sub(&UniPoly::constant(Scalar::a())));
        assert_eq!(shifted.eval(&Scalar::a()), Scalar::zero());
        assert_eq!(shifted.render(), "z^2 + (-2*a)*z + (a^2)");
    }
}
