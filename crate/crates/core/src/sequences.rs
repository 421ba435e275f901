//! The three path-counting sequence families, Fibonacci and Lucas polynomial
//! values, and a table of named special cases.
//!
//! * restricted `c(n, m, a, b)`: non-negative paths, generating function
//!   `f = 1 + a z f + b z^m f^2`;
//! * shifted `C(n, m, a, b, t) = [z^n] f / (1 - t z f)`: horizontal steps on
//!   height zero weigh `a + t`;
//! * unrestricted `g(n, m, a, b) = [z^n] 1 / sqrt((1 - a z)^2 - 4 b z^m)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Point, Ring, Scalar, UniPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Restricted,
    Shifted,
    Unrestricted,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Restricted, Family::Shifted, Family::Unrestricted];

    pub fn name(self) -> &'static str {
        match self {
            Family::Restricted => "restricted",
            Family::Shifted => "shifted",
            Family::Unrestricted => "unrestricted",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected restricted, shifted or unrestricted"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Named {
    Catalan,
    AeratedCatalan,
    Motzkin,
    Schroeder,
    CentralBinomial,
    AeratedCentralBinomial,
    CentralTrinomial,
    Delannoy,
}

impl Named {
    pub const ALL: [Named; 8] = [
        Named::Catalan,
        Named::AeratedCatalan,
        Named::Motzkin,
        Named::Schroeder,
        Named::CentralBinomial,
        Named::AeratedCentralBinomial,
        Named::CentralTrinomial,
        Named::Delannoy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::Catalan => "catalan",
            Named::AeratedCatalan => "aerated-catalan",
            Named::Motzkin => "motzkin",
            Named::Schroeder => "schroeder",
            Named::CentralBinomial => "central-binomial",
            Named::AeratedCentralBinomial => "aerated-central-binomial",
            Named::CentralTrinomial => "central-trinomial",
            Named::Delannoy => "delannoy",
        }
    }

    /// `(family, m, a, b, t)` this name stands for.
    pub fn resolve(self) -> (Family, u32, i64, i64, i64) {
        match self {
            // Catalan numbers are C(n, 2, 2, 1, -1); the tuple (1, 1, -1) gives 1, 0, 1, 1, 3, ...
            Named::Catalan => (Family::Shifted, 2, 2, 1, -1),
            Named::AeratedCatalan => (Family::Restricted, 2, 0, 1, 0),
            Named::Motzkin => (Family::Restricted, 2, 1, 1, 0),
            Named::Schroeder => (Family::Restricted, 1, 1, 1, 0),
            Named::CentralBinomial => (Family::Unrestricted, 2, 2, 1, 0),
            Named::AeratedCentralBinomial => (Family::Unrestricted, 2, 0, 1, 0),
            Named::CentralTrinomial => (Family::Unrestricted, 2, 1, 1, 0),
            Named::Delannoy => (Family::Unrestricted, 1, 1, 1, 0),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Named {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Named::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| format!("unknown sequence name {s:?}"))
    }
}

/// One moment sequence: a family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    pub family: Family,
    pub m: u32,
    pub a: Scalar,
    pub b: Scalar,
    /// Only read by the shifted family.
    pub t: Scalar,
    pub name: Option<Named>,
}

impl SequenceSpec {
    pub fn new(family: Family, m: u32, a: Scalar, b: Scalar, t: Scalar) -> Self {
        assert!(m >= 1, "m must be positive");
        let t = if family == Family::Shifted { t } else { Scalar::zero() };
        SequenceSpec { family, m, a, b, t, name: None }
    }

    pub fn restricted(m: u32, a: Scalar, b: Scalar) -> Self {
        SequenceSpec::new(Family::Restricted, m, a, b, Scalar::zero())
    }

    pub fn shifted(m: u32, a: Scalar, b: Scalar, t: Scalar) -> Self {
        SequenceSpec::new(Family::Shifted, m, a, b, t)
    }

    pub fn unrestricted(m: u32, a: Scalar, b: Scalar) -> Self {
        SequenceSpec::new(Family::Unrestricted, m, a, b, Scalar::zero())
    }

    /// Family with formal parameters `a`, `b` (and `t` for the shifted one).
    pub fn symbolic(family: Family, m: u32) -> Self {
        SequenceSpec::new(family, m, Scalar::a(), Scalar::b(), Scalar::t())
    }

    pub fn named(name: Named) -> Self {
        let (family, m, a, b, t) = name.resolve();
        let mut spec = SequenceSpec::new(family, m, Scalar::int(a), Scalar::int(b), Scalar::int(t));
        spec.name = Some(name);
        spec
    }

    /// Substitutes a rational point into symbolic parameters.
    pub fn at(&self, point: &Point) -> Self {
        let ev = |x: &Scalar| Scalar::from(x.eval(point));
        SequenceSpec {
            family: self.family,
            m: self.m,
            a: ev(&self.a),
            b: ev(&self.b),
            t: ev(&self.t),
            name: self.name,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.a.is_poly() || self.b.is_poly() || self.t.is_poly()
    }

    pub fn label(&self) -> String {
        if let Some(name) = self.name {
            return name.to_string();
        }
        match self.family {
            Family::Shifted => format!("shifted(m={},a={},b={},t={})", self.m, self.a, self.b, self.t),
            f => format!("{f}(m={},a={},b={})", self.m, self.a, self.b),
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// How a window of terms was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenerationPath {
    Recurrence,
    ClosedForm,
    Series,
    PathDp,
}

/// A contiguous run of sequence terms, all from one generation path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWindow {
    pub spec: SequenceSpec,
    pub start: usize,
    pub terms: Vec<Scalar>,
    pub path: GenerationPath,
}

impl SequenceWindow {
    pub fn term(&self, n: usize) -> &Scalar {
        &self.terms[n - self.start]
    }
}

/// `sum_{i+j=n} x(i) y(j)` with `x`, `y` indexed from zero.
fn convolution(x: &[Scalar], y: &[Scalar], n: usize) -> Scalar {
    (0..=n).fold(Scalar::zero(), |acc, i| {
        if x[i].is_zero() || y[n - i].is_zero() {
            acc
        } else {
            &acc + &(&x[i] * &y[n - i])
        }
    })
}

fn restricted_terms(m: usize, a: &Scalar, b: &Scalar, count: usize) -> Vec<Scalar> {
    let mut c: Vec<Scalar> = Vec::with_capacity(count);
    for n in 0..count {
        if n == 0 {
            c.push(Scalar::one());
            continue;
        }
        let mut v = a * &c[n - 1];
        if n >= m {
            v = &v + &(b * &convolution(&c, &c, n - m));
        }
        c.push(v);
    }
    c
}

/// Terms `0..count` through the convolution recurrences read off the
/// functional equations of the generating functions.
pub fn seq_terms(spec: &SequenceSpec, count: usize) -> SequenceWindow {
    let m = spec.m as usize;
    let (a, b) = (&spec.a, &spec.b);
    let c = restricted_terms(m, a, b, count);
    let terms = match spec.family {
        Family::Restricted => c,
        Family::Shifted => {
            // F (1 - (a+t) z - b z^m f) = 1.
            let at = a + &spec.t;
            let mut s: Vec<Scalar> = Vec::with_capacity(count);
            for n in 0..count {
                if n == 0 {
                    s.push(Scalar::one());
                    continue;
                }
                let mut v = &at * &s[n - 1];
                if n >= m {
                    v = &v + &(b * &convolution(&s, &c, n - m));
                }
                s.push(v);
            }
            s
        }
        Family::Unrestricted => {
            // G (1 - a z - 2 b z^m f) = 1, because 1 - a z - 2 b z^m f is the square root.
            let two_b = b * &Scalar::int(2);
            let mut g: Vec<Scalar> = Vec::with_capacity(count);
            for n in 0..count {
                if n == 0 {
                    g.push(Scalar::one());
                    continue;
                }
                let mut v = a * &g[n - 1];
                if n >= m {
                    v = &v + &(&two_b * &convolution(&g, &c, n - m));
                }
                g.push(v);
            }
            g
        }
    };
    SequenceWindow {
        spec: spec.clone(),
        start: 0,
        terms,
        path: GenerationPath::Recurrence,
    }
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan_number(k: i64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// `c(n, m, a, b) = sum_k C_k binom(n + (2-m)k, 2k) a^(n-mk) b^k`.
pub fn c_closed_form(n: u64, m: u32, a: &Scalar, b: &Scalar) -> Scalar {
    closed_form_sum(n, m, a, b, catalan_number)
}

/// `g(n, m, a, b) = sum_k binom(2k, k) binom(n + 2k - mk, 2k) a^(n-mk) b^k`.
pub fn g_closed_form(n: u64, m: u32, a: &Scalar, b: &Scalar) -> Scalar {
    closed_form_sum(n, m, a, b, |k| binomial(2 * k, k))
}

fn closed_form_sum(n: u64, m: u32, a: &Scalar, b: &Scalar, weight: impl Fn(i64) -> BigInt) -> Scalar {
    let (n, m) = (n as i64, m as i64);
    let mut total = Scalar::zero();
    for k in 0..=n / m {
        let coef = weight(k) * binomial(n + (2 - m) * k, 2 * k);
        if coef.is_zero() {
            continue;
        }
        let term = &(&Scalar::from(coef) * &a.pow((n - m * k) as u32)) * &b.pow(k as u32);
        total = &total + &term;
    }
    total
}

/// Closed-form window for the restricted and unrestricted families.
pub fn closed_form_terms(spec: &SequenceSpec, count: usize) -> Option<SequenceWindow> {
    let f = match spec.family {
        Family::Restricted => c_closed_form,
        Family::Unrestricted => g_closed_form,
        Family::Shifted => return None,
    };
    Some(SequenceWindow {
        spec: spec.clone(),
        start: 0,
        terms: (0..count as u64).map(|n| f(n, spec.m, &spec.a, &spec.b)).collect(),
        path: GenerationPath::ClosedForm,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyKind {
    Fib,
    Lucas,
    NormalizedLucas,
}

/// Values `P_0..P_{count-1}` of the chosen family at `(x, s)`, all sharing
/// `P_n = x P_{n-1} + s P_{n-2}`. The normalized Lucas family starts at
/// `1, x` and takes `P_2 = x^2 + 2s`.
pub fn poly_family_terms<R: Ring>(kind: PolyKind, count: usize, x: &R, s: &R) -> Vec<R> {
    let mut out: Vec<R> = Vec::with_capacity(count);
    for n in 0..count {
        let v = match (n, kind) {
            (0, PolyKind::Fib) => R::zero(),
            (0, PolyKind::Lucas) => R::from_i64(2),
            (0, PolyKind::NormalizedLucas) => R::one(),
            (1, PolyKind::Fib) => R::one(),
            (1, _) => x.clone(),
            (2, PolyKind::NormalizedLucas) => x.mul(&out[1]).add(&R::from_i64(2).mul(s).mul(&out[0])),
            _ => x.mul(&out[n - 1]).add(&s.mul(&out[n - 2])),
        };
        out.push(v);
    }
    out
}

pub fn poly_family<R: Ring>(kind: PolyKind, n: usize, x: &R, s: &R) -> R {
    poly_family_terms(kind, n + 1, x, s).pop().expect("n + 1 terms")
}

pub fn fib<R: Ring>(n: usize, x: &R, s: &R) -> R {
    poly_family(PolyKind::Fib, n, x, s)
}

pub fn lucas<R: Ring>(n: usize, x: &R, s: &R) -> R {
    poly_family(PolyKind::Lucas, n, x, s)
}

pub fn normalized_lucas<R: Ring>(n: usize, x: &R, s: &R) -> R {
    poly_family(PolyKind::NormalizedLucas, n, x, s)
}

/// Coefficients expressing `z^n` in the basis `Fib_{n+1-2k}(z, -1)` (for
/// [`PolyKind::Fib`]) or `Luc_{n-2k}(z, -1)` (otherwise), `k = 0..=n/2`.
pub fn basis_expansion(n: usize, kind: PolyKind) -> Vec<BigInt> {
    let n = n as i64;
    (0..=n / 2)
        .map(|k| match kind {
            PolyKind::Fib => binomial(n, k) - binomial(n, k - 1),
            _ => binomial(n, k),
        })
        .collect()
}

/// `sum_k coeff_k * basis_k(z)` for the expansion of `z^n`; equals `z^n`.
pub fn basis_reconstruction(n: usize, kind: PolyKind) -> UniPoly<Scalar> {
    let z = UniPoly::<Scalar>::z();
    let minus_one = UniPoly::constant(Scalar::int(-1));
    let coeffs = basis_expansion(n, kind);
    let (basis_kind, top) = match kind {
        PolyKind::Fib => (PolyKind::Fib, n + 1),
        _ => (PolyKind::NormalizedLucas, n),
    };
    let basis = poly_family_terms(basis_kind, top + 1, &z, &minus_one);
    coeffs
        .into_iter()
        .enumerate()
        .fold(<UniPoly<Scalar> as Ring>::zero(), |acc, (k, c)| {
            acc.add(&basis[top - 2 * k].scale(&Scalar::from(c)))
        })
}

/// Parameters of the reductions from `m = 1` to `m = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M1Reduction {
    /// `(a', b', t')` with `c(n, 1, a, b) = C(n, 2, a', b', t')`.
    pub restricted: (Scalar, Scalar, Scalar),
    /// `(a', b')` with `g(n, 1, a, b) = g(n, 2, a', b')`.
    pub unrestricted: (Scalar, Scalar),
}

pub fn m1_reduce(a: &Scalar, b: &Scalar) -> M1Reduction {
    let a2 = a + &(b * &Scalar::int(2));
    let b2 = b * &(a + b);
    M1Reduction {
        restricted: (a2.clone(), b2.clone(), -b),
        unrestricted: (a2, b2),
    }
}

/// The substitution `a -> x + y`, `b -> x y` used by the two-root formulas.
/// Here `x` and `y` are the formal variables `a` and `b`.
pub fn root_parameters() -> (Scalar, Scalar) {
    let (x, y) = (Scalar::var(Var::A), Scalar::var(Var::B));
    (&x + &y, &x * &y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn known_sequences() {
        let s = SequenceSpec::restricted(3, Scalar::int(1), Scalar::int(1));
        assert_eq!(seq_terms(&s, 8).terms, ints(&[1, 1, 1, 2, 4, 7, 13, 26]));
        assert_eq!(seq_terms(&SequenceSpec::named(Named::Motzkin), 7).terms, ints(&[1, 1, 2, 4, 9, 21, 51]));
        let d = SequenceSpec::unrestricted(1, Scalar::int(1), Scalar::int(1));
        assert_eq!(seq_terms(&d, 5).terms, ints(&[1, 3, 13, 63, 321]));
        assert_eq!(seq_terms(&SequenceSpec::named(Named::Schroeder), 5).terms, ints(&[1, 2, 6, 22, 90]));
        let g = SequenceSpec::unrestricted(3, Scalar::int(1), Scalar::int(1));
        assert_eq!(seq_terms(&g, 8).terms, ints(&[1, 1, 1, 3, 7, 13, 27, 61]));
    }

    #[test]
    fn catalan_tuple() {
        let cat = seq_terms(&SequenceSpec::named(Named::Catalan), 8).terms;
        assert_eq!(cat, ints(&[1, 1, 2, 5, 14, 42, 132, 429]));
        let other = SequenceSpec::shifted(2, Scalar::int(1), Scalar::int(1), Scalar::int(-1));
        assert_ne!(seq_terms(&other, 8).terms, cat);
    }

    #[test]
    fn closed_forms() {
        let one = Scalar::int(1);
        assert_eq!(c_closed_form(4, 3, &one, &one), Scalar::int(4));
        assert_eq!(c_closed_form(5, 2, &one, &one), Scalar::int(21));
        assert_eq!(c_closed_form(0, 4, &Scalar::a(), &Scalar::b()), Scalar::int(1));
        assert_eq!(g_closed_form(4, 3, &one, &one), Scalar::int(7));
        assert_eq!(g_closed_form(3, 2, &one, &one), Scalar::int(7));
        assert_eq!(g_closed_form(4, 2, &Scalar::zero(), &one), Scalar::int(6));
    }

    #[test]
    fn polynomial_families() {
        let (x, s) = (Scalar::int(1), Scalar::int(-1));
        assert_eq!(poly_family_terms(PolyKind::Fib, 12, &x, &s), ints(&[0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1]));
        assert_eq!(poly_family_terms(PolyKind::Lucas, 6, &x, &s), ints(&[2, 1, -1, -2, -1, 1]));
        let (x, s) = (Scalar::a(), Scalar::b());
        assert_eq!(fib(4, &x, &s), &x.pow(3) + &(&Scalar::int(2) * &(&x * &s)));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(basis_expansion(2, PolyKind::Lucas), vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(basis_expansion(2, PolyKind::Fib), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(basis_expansion(4, PolyKind::Fib), vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)]);
        for n in 0..=20 {
            for kind in [PolyKind::Fib, PolyKind::Lucas] {
                assert_eq!(basis_reconstruction(n, kind), UniPoly::monomial(Scalar::one(), n), "n={n} {kind:?}");
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let r = m1_reduce(&Scalar::int(1), &Scalar::int(1));
        assert_eq!(r.restricted, (Scalar::int(3), Scalar::int(2), Scalar::int(-1)));
        let r0 = m1_reduce(&Scalar::zero(), &Scalar::b());
        assert_eq!(r0.restricted, (&Scalar::int(2) * &Scalar::b(), Scalar::b().pow(2), -&Scalar::b()));
    }
}
