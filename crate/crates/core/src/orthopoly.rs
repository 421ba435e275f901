//! Moments, three-term recurrence coefficients and the orthogonal
//! polynomials between them.
//!
//! A moment sequence `a(n)` with nonvanishing Hankel determinants `d_0(n)`
//! determines monic polynomials with
//! `p_{n+1}(z) = (z - s(n)) p_n(z) - t(n-1) p_{n-1}(z)`.

use thiserror::Error;

use crate::arith::{det_exact, ArithError, Ring, RingMatrix, Scalar, UniPoly};
use crate::sequences::{seq_terms, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    /// `d_0(n) = 0`: no orthogonal polynomial of degree `n` exists.
    #[error("Hankel determinant d_0({0}) vanishes")]
    SingularHankel(usize),
    #[error("need {needed} {what}, got {got}")]
    TooShort { what: &'static str, needed: usize, got: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Recurrence coefficients `s(0..N)` and `t(0..N-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JacobiCoeffs {
    pub s: Vec<Scalar>,
    pub t: Vec<Scalar>,
}

impl JacobiCoeffs {
    pub fn new(s: Vec<Scalar>, t: Vec<Scalar>) -> Self {
        JacobiCoeffs { s, t }
    }

    /// Constant coefficients `s(n) = s`, `t(n) = t`.
    pub fn constant(s: Scalar, t: Scalar, len: usize) -> Self {
        JacobiCoeffs { s: vec![s; len], t: vec![t; len.saturating_sub(1)] }
    }

    fn s_at(&self, j: usize) -> Result<&Scalar, OrthoError> {
        self.s.get(j).ok_or(OrthoError::TooShort { what: "s coefficients", needed: j + 1, got: self.s.len() })
    }

    fn t_at(&self, j: usize) -> Result<&Scalar, OrthoError> {
        self.t.get(j).ok_or(OrthoError::TooShort { what: "t coefficients", needed: j + 1, got: self.t.len() })
    }
}

/// Moments `a(0..count)` with `a(0) = 1`, from the weighted Motzkin path
/// triangle `v(n, j) = v(n-1, j-1) + s(j) v(n-1, j) + t(j) v(n-1, j+1)`.
pub fn moments_from_jacobi(j: &JacobiCoeffs, count: usize) -> Result<Vec<Scalar>, OrthoError> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    // Row n only needs heights from which the path can still return by step count-1.
    let mut row = vec![Scalar::one()];
    out.push(Scalar::one());
    for n in 1..count {
        let top = n.min(count - 1 - n);
        let mut next = Vec::with_capacity(top + 1);
        for h in 0..=top {
            let mut v = Scalar::zero();
            if h >= 1 {
                if let Some(x) = row.get(h - 1) {
                    v = &v + x;
                }
            }
            if let Some(x) = row.get(h) {
                if !x.is_zero() {
                    v = &v + &(j.s_at(h)? * x);
                }
            }
            if let Some(x) = row.get(h + 1) {
                if !x.is_zero() {
                    v = &v + &(j.t_at(h)? * x);
                }
            }
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    Ok(out)
}

/// The moment functional applied to a polynomial.
fn functional(moments: &[Scalar], p: &UniPoly<Scalar>) -> Scalar {
    p.coeffs()
        .iter()
        .zip(moments)
        .filter(|(c, _)| !c.is_zero())
        .fold(Scalar::zero(), |acc, (c, a)| &acc + &(c * a))
}

/// Recovers `s(0..count)` and `t(0..count-1)` by Gram-Schmidt against the
/// moment functional. Needs `2 count` moments. `a(0)` need not be one: the
/// coefficients do not change when every moment is scaled by the same factor.
pub fn jacobi_from_moments(moments: &[Scalar], count: usize) -> Result<JacobiCoeffs, OrthoError> {
    let needed = 2 * count;
    if moments.len() < needed {
        return Err(OrthoError::TooShort { what: "moments", needed, got: moments.len() });
    }
    let z = UniPoly::<Scalar>::z();
    let mut prev = <UniPoly<Scalar> as Ring>::zero();
    let mut cur = <UniPoly<Scalar> as Ring>::one();
    let mut prev_norm = Scalar::one();
    let mut out = JacobiCoeffs::default();
    for n in 0..count {
        let sq = cur.mul(&cur);
        let norm = functional(moments, &sq);
        if norm.is_zero() {
            return Err(OrthoError::SingularHankel(n + 1));
        }
        if n > 0 {
            out.t.push(norm.div(&prev_norm)?);
        }
        let s = functional(moments, &sq.shift(1)).div(&norm)?;
        let mut next = z.sub(&UniPoly::constant(s.clone())).mul(&cur);
        if let Some(t) = out.t.last() {
            next = next.sub(&prev.scale(t));
        }
        out.s.push(s);
        prev = std::mem::replace(&mut cur, next);
        prev_norm = norm;
    }
    Ok(out)
}

/// `p_0, ..., p_n` by the recurrence.
pub fn orth_polys(j: &JacobiCoeffs, n: usize) -> Result<Vec<UniPoly<Scalar>>, OrthoError> {
    let z = UniPoly::<Scalar>::z();
    let mut out = vec![<UniPoly<Scalar> as Ring>::one()];
    for k in 0..n {
        let mut next = z.sub(&UniPoly::constant(j.s_at(k)?.clone())).mul(&out[k]);
        if k >= 1 {
            next = next.sub(&out[k - 1].scale(j.t_at(k - 1)?));
        }
        out.push(next);
    }
    Ok(out)
}

/// `p_n` together with `(-1)^n p_n(0)`.
pub fn orth_poly(j: &JacobiCoeffs, n: usize) -> Result<(UniPoly<Scalar>, Scalar), OrthoError> {
    let p = orth_polys(j, n)?.pop().expect("at least p_0");
    let at_zero = &Scalar::neg_one_pow(n as u64) * &p.coeff(0);
    Ok((p, at_zero))
}

/// The bordered Hankel determinant with last column `1, z, ..., z^n`,
/// expanded along that column.
pub fn char_poly_tilde_of_terms(terms: &[Scalar], n: usize) -> UniPoly<Scalar> {
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // Delete row i and the border column.
        let minor = RingMatrix::from_fn(n, |r, c| {
            let row = if r < i { r } else { r + 1 };
            terms[row + c].clone()
        });
        let d = det_exact(&minor);
        coeffs.push(if (i + n).is_multiple_of(2) { d } else { -d });
    }
    UniPoly::new(coeffs)
}

pub fn char_poly_tilde(spec: &SequenceSpec, n: usize) -> UniPoly<Scalar> {
    let terms = seq_terms(spec, (2 * n).max(1)).terms;
    char_poly_tilde_of_terms(&terms, n)
}

/// `p~_n` divided by `b^(n(n-1)/m)` when that exponent is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTilde {
    pub poly: UniPoly<Scalar>,
    /// False when the exponent is fractional and `poly` is left unnormalized.
    pub normalized: bool,
}

pub fn normalized_char_poly(spec: &SequenceSpec, n: usize) -> Result<NormalizedTilde, OrthoError> {
    let raw = char_poly_tilde(spec, n);
    let num = n * n.saturating_sub(1);
    let m = spec.m as usize;
    if !num.is_multiple_of(m) {
        return Ok(NormalizedTilde { poly: raw, normalized: false });
    }
    let scale = spec.b.pow((num / m) as u32);
    let coeffs = raw.coeffs().iter().map(|c| c.div(&scale)).collect::<Result<Vec<_>, _>>()?;
    Ok(NormalizedTilde { poly: UniPoly::new(coeffs), normalized: true })
}

/// Recurrence coefficients of the moments `C(n+1, 3, a, b, t) / a`:
/// `s(3n) = (n+1)a + t`, `s(3n+1) = a`, `s(3n+2) = -((n+1)a + t)`,
/// `t(3n) = b / ((n+1)a + t)`, `t(3n+1) = -b / ((n+1)a + t)`,
/// `t(3n+2) = -((n+1)a + t)((n+2)a + t)`.
pub fn shifted_cubic_jacobi(a: &Scalar, b: &Scalar, t: &Scalar, count: usize) -> Result<JacobiCoeffs, OrthoError> {
    let w = |n: usize| &(&Scalar::int(n as i64 + 1) * a) + t;
    let mut out = JacobiCoeffs::default();
    for i in 0..count {
        let (n, r) = (i / 3, i % 3);
        out.s.push(match r {
            0 => w(n),
            1 => a.clone(),
            _ => -w(n),
        });
        if i + 1 < count {
            out.t.push(match r {
                0 => b.div(&w(n))?,
                1 => -b.div(&w(n))?,
                _ => -(&w(n) * &w(n + 1)),
            });
        }
    }
    Ok(out)
}

/// The moments `C(n+1, 3, a, b, t) / a` for `n < count`.
pub fn shifted_cubic_moments(a: &Scalar, b: &Scalar, t: &Scalar, count: usize) -> Result<Vec<Scalar>, OrthoError> {
    let spec = SequenceSpec::shifted(3, a.clone(), b.clone(), t.clone());
    let terms = seq_terms(&spec, count + 1).terms;
    terms[1..].iter().map(|x| x.div(a).map_err(OrthoError::from)).collect()
}
