//! Truncated power series in `z` over [`Scalar`], the closed-form generating
//! functions of the three families, and the kernel polynomials whose products
//! with those generating functions have long runs of vanishing coefficients.

use thiserror::Error;

use crate::arith::{ArithError, Ring, Scalar, UniPoly};
use crate::sequences::{poly_family_terms, Family, PolyKind, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1, found {0}")]
    NonUnitConstantTerm(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Coefficients `c_0..c_N`; everything from `z^(N+1)` on is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Scalar>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.resize(order + 1, Scalar::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(Vec::new(), order)
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        TruncatedSeries::new(vec![c], order)
    }

    /// `c z^k`.
    pub fn monomial(c: Scalar, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly<Scalar>, order: usize) -> Self {
        TruncatedSeries::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Scalar::zero(); order + 1];
        for (i, x) in self.coeffs.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(x * y);
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TruncatedSeries::constant(Scalar::one(), self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![Scalar::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        TruncatedSeries { coeffs }
    }

    /// `r` with `self * r = 1 + O(z^(N+1))`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = Scalar::one().div(c0)?;
        let mut r: Vec<Scalar> = Vec::with_capacity(self.coeffs.len());
        r.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = Scalar::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !r[n - i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &r[n - i]);
                }
            }
            r.push(-&(&acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// `s` with `s^2 = self + O(z^(N+1))` and `s_0 = 1`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm(self.coeffs[0].to_string()));
        }
        let two = Scalar::int(2);
        let mut s: Vec<Scalar> = Vec::with_capacity(self.coeffs.len());
        s.push(Scalar::one());
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                if !s[i].is_zero() && !s[n - i].is_zero() {
                    acc = &acc - &(&s[i] * &s[n - i]);
                }
            }
            s.push(acc.div(&two)?);
        }
        Ok(TruncatedSeries { coeffs: s })
    }
}

/// `(1 - a z)^2 - 4 b z^m` to the given order.
pub fn discriminant(m: u32, a: &Scalar, b: &Scalar, order: usize) -> TruncatedSeries {
    let one_minus_az = one_minus_cz(a, order);
    one_minus_az
        .mul(&one_minus_az)
        .sub(&TruncatedSeries::monomial(b * &Scalar::int(4), m as usize, order))
}

fn one_minus_cz(c: &Scalar, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(vec![Scalar::one(), -c], order)
}

/// Generating function of `spec` through its radical closed form.
pub fn gen_series(spec: &SequenceSpec, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let root = discriminant(spec.m, &spec.a, &spec.b, order).sqrt()?;
    let two = TruncatedSeries::constant(Scalar::int(2), order);
    match spec.family {
        Family::Restricted => Ok(two.mul(&one_minus_cz(&spec.a, order).add(&root).reciprocal()?)),
        Family::Shifted => {
            let c = &spec.a + &(&spec.t * &Scalar::int(2));
            Ok(two.mul(&one_minus_cz(&c, order).add(&root).reciprocal()?))
        }
        Family::Unrestricted => root.reciprocal(),
    }
}

/// `alpha = (1 - a z + sqrt Q) / 2` and `beta = (1 - a z - sqrt Q) / 2`.
pub fn alpha_beta(m: u32, a: &Scalar, b: &Scalar, order: usize) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let root = discriminant(m, a, b, order).sqrt()?;
    let base = one_minus_cz(a, order);
    let half = Scalar::ratio(1, 2);
    Ok((base.add(&root).scale(&half), base.sub(&root).scale(&half)))
}

/// Which kernel polynomial, and which generating function it annihilates
/// a window of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// `Fib_{2n+2}(1 - a z, -b z^m)`, paired with the restricted series.
    Fib,
    /// `Fib_{2n+2} - t z Fib_{2n+1}`, paired with the shifted series.
    FibT(Scalar),
    /// `L_{2n+1}(1 - a z, -b z^m)`, paired with the unrestricted series.
    Lucas,
}

impl Kernel {
    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Fib => "fib",
            Kernel::FibT(_) => "fib-t",
            Kernel::Lucas => "lucas",
        }
    }
}

/// The kernel polynomial as an exact series whose order is its degree.
pub fn kernel_poly(n: usize, m: u32, a: &Scalar, b: &Scalar, kernel: &Kernel) -> TruncatedSeries {
    let p = kernel_upoly(n, m, a, b, kernel);
    let order = p.degree().unwrap_or(0);
    TruncatedSeries::from_poly(&p, order)
}

pub fn kernel_upoly(n: usize, m: u32, a: &Scalar, b: &Scalar, kernel: &Kernel) -> UniPoly<Scalar> {
    let x = UniPoly::new(vec![Scalar::one(), -a]);
    let s = UniPoly::monomial(-b, m as usize);
    match kernel {
        Kernel::Fib => poly_family_terms(PolyKind::Fib, 2 * n + 3, &x, &s).pop().unwrap(),
        Kernel::FibT(t) => {
            let f = poly_family_terms(PolyKind::Fib, 2 * n + 3, &x, &s);
            f[2 * n + 2].sub(&f[2 * n + 1].shift(1).scale(t))
        }
        Kernel::Lucas => poly_family_terms(PolyKind::Lucas, 2 * n + 2, &x, &s).pop().unwrap(),
    }
}

/// Outcome of a vanishing check; `offending` is the first `k` whose
/// coefficient did not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vanishing {
    pub holds: bool,
    pub offending: Option<usize>,
}

/// Checks `[z^(nm+k)] kernel * series = 0` for every `k` in `1..=mn+m-1`.
pub fn verify_vanishing(n: usize, m: u32, a: &Scalar, b: &Scalar, kernel: &Kernel) -> Result<Vanishing, SeriesError> {
    let mu = m as usize;
    let order = 2 * mu * n + mu;
    let spec = match kernel {
        Kernel::Fib => SequenceSpec::restricted(m, a.clone(), b.clone()),
        Kernel::FibT(t) => SequenceSpec::shifted(m, a.clone(), b.clone(), t.clone()),
        Kernel::Lucas => SequenceSpec::unrestricted(m, a.clone(), b.clone()),
    };
    let series = gen_series(&spec, order)?;
    let product = TruncatedSeries::from_poly(&kernel_upoly(n, m, a, b, kernel), order).mul(&series);
    for k in 1..mu * n + mu {
        if !product.coeff(n * mu + k).is_zero() {
            return Ok(Vanishing { holds: false, offending: Some(k) });
        }
    }
    Ok(Vanishing { holds: true, offending: None })
}
