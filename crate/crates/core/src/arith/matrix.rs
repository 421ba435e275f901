//! Square matrices and exact determinants.
//!
//! Berkowitz's division-free algorithm runs over any commutative ring and
//! produces every leading principal minor in one pass. It is the reference.
//! Integer and rational matrices first try fraction-free elimination without
//! pivoting, whose pivots are exactly those leading minors, and fall back to
//! Berkowitz as soon as one of them vanishes.
//!
//! Polynomial matrices also use fraction-free elimination, with exact
//! polynomial division. Berkowitz's intermediate vectors are powers of the
//! matrix and their polynomials grow far faster than the minors that
//! elimination keeps, so beyond size 6 or so with three formal parameters
//! Berkowitz is out of reach. After a vanishing leading minor the remaining
//! ones are computed block by block with row pivoting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ArithError, Ring, Scalar};

/// Row-major square matrix. Dimension zero is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Clone> RingMatrix<R> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RingMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, ArithError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(ArithError::NotSquare { rows: n, row, len: r.len() });
            }
            entries.extend(r);
        }
        Ok(RingMatrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.n {
            self.entries.swap(i * self.n + c, j * self.n + c);
        }
    }

    pub fn map<S: Clone>(&self, f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// The leading `k x k` block.
    pub fn leading(&self, k: usize) -> RingMatrix<R> {
        RingMatrix::from_fn(k, |i, j| self.get(i, j).clone())
    }
}

/// Coefficients of `det(x I - M)` from `x^n` down to the constant term.
pub fn berkowitz_char_poly<R: Ring>(m: &RingMatrix<R>) -> Vec<R> {
    let mut p = vec![R::one()];
    berkowitz_steps(m, |_, next| p = next.to_vec());
    p
}

/// `[d_0, d_1, ..., d_n]` where `d_k` is the leading `k x k` minor and `d_0 = 1`.
pub fn leading_minors<R: Ring>(m: &RingMatrix<R>) -> Vec<R> {
    let mut minors = vec![R::one()];
    berkowitz_steps(m, |r, p| {
        let c = p[r + 1].clone();
        minors.push(if r % 2 == 0 { c.neg() } else { c });
    });
    minors
}

/// Runs Berkowitz, handing the characteristic polynomial of each leading
/// `(r+1)`-block to `visit` in descending order of powers.
fn berkowitz_steps<R: Ring>(m: &RingMatrix<R>, mut visit: impl FnMut(usize, &[R])) {
    let mut p: Vec<R> = vec![R::one()];
    for r in 0..m.dim() {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
        let mut q = Vec::with_capacity(r + 2);
        q.push(R::one());
        q.push(m.get(r, r).neg());
        let mut v: Vec<R> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for step in 0..r {
            let dot = (0..r).fold(R::zero(), |acc, j| acc.add(&m.get(r, j).mul(&v[j])));
            q.push(dot.neg());
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(R::zero(), |acc, j| acc.add(&m.get(i, j).mul(&v[j]))))
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = R::zero();
            for j in 0..=i.min(r) {
                if !p[j].is_zero() && !q[i - j].is_zero() {
                    acc = acc.add(&q[i - j].mul(&p[j]));
                }
            }
            next.push(acc);
        }
        visit(r, &next);
        p = next;
    }
}

/// Fraction-free elimination without pivoting. Returns the leading minors
/// `d_1..d_n` up to and including the first zero one.
fn bareiss_minors(mut a: Vec<Vec<BigInt>>) -> (Vec<BigInt>, bool) {
    let n = a.len();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            return (minors, false);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = pivot;
    }
    (minors, true)
}

/// Determinant of an integer matrix by fraction-free elimination with row
/// pivoting.
pub fn bareiss_det(m: &RingMatrix<BigInt>) -> BigInt {
    let n = m.dim();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * prev
}

/// Integer matrix plus the common denominator it was scaled by, when all
/// entries are constants.
fn cleared(m: &RingMatrix<Scalar>) -> Option<(Vec<Vec<BigInt>>, BigInt)> {
    let mut lcm = BigInt::one();
    for e in m.entries() {
        match e {
            Scalar::Int(_) => {}
            Scalar::Rat(r) => lcm = lcm.lcm(r.denom()),
            Scalar::Poly(_) => return None,
        }
    }
    let n = m.dim();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match m.get(i, j) {
                    Scalar::Int(v) => v * &lcm,
                    Scalar::Rat(r) => r.numer() * (&lcm / r.denom()),
                    Scalar::Poly(_) => unreachable!(),
                })
                .collect()
        })
        .collect();
    Some((rows, lcm))
}

fn rows_of(m: &RingMatrix<Scalar>) -> Vec<Vec<Scalar>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j).clone()).collect()).collect()
}

fn exact(x: &Scalar, d: &Scalar) -> Scalar {
    // Sylvester's identity makes every division exact in Q[a, b, t]; constant
    // quotients may still be rational when the entries are.
    x.div(d).expect("fraction-free elimination divides exactly")
}

/// [`bareiss_minors`] over scalars.
fn bareiss_minors_scalar(mut a: Vec<Vec<Scalar>>) -> (Vec<Scalar>, bool) {
    let n = a.len();
    let mut minors = Vec::with_capacity(n);
    let mut prev = Scalar::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            return (minors, false);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &pivot) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact(&v, &prev);
            }
        }
        prev = pivot;
    }
    (minors, true)
}

/// Fraction-free elimination with row pivoting over scalars.
pub fn bareiss_det_scalar(m: &RingMatrix<Scalar>) -> Scalar {
    let n = m.dim();
    let mut a = rows_of(m);
    let mut negate = false;
    let mut prev = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact(&v, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

fn poly_leading_minors(m: &RingMatrix<Scalar>) -> Vec<Scalar> {
    let (minors, complete) = bareiss_minors_scalar(rows_of(m));
    let mut out = vec![Scalar::one()];
    out.extend(minors);
    if !complete {
        for k in out.len()..=m.dim() {
            out.push(bareiss_det_scalar(&m.leading(k)));
        }
    }
    out
}

/// Every leading minor `[d_0 = 1, d_1, ..., d_n]` of a scalar matrix.
pub fn leading_minors_exact(m: &RingMatrix<Scalar>) -> Vec<Scalar> {
    if let Some((rows, lcm)) = cleared(m) {
        let (minors, complete) = bareiss_minors(rows);
        if complete {
            let mut out = vec![Scalar::one()];
            let mut scale = BigInt::one();
            for d in minors {
                scale *= &lcm;
                out.push(Scalar::from(num_rational::BigRational::new(d, scale.clone())));
            }
            return out;
        }
        return leading_minors(m);
    }
    poly_leading_minors(m)
}

/// Exact determinant. Dimension zero gives one.
pub fn det_exact(m: &RingMatrix<Scalar>) -> Scalar {
    if let Some((rows, lcm)) = cleared(m) {
        let n = rows.len();
        let (minors, complete) = bareiss_minors(rows);
        if complete {
            let d = minors.last().cloned().unwrap_or_else(BigInt::one);
            let scale = num_traits::pow(lcm, n);
            return Scalar::from(num_rational::BigRational::new(d, scale));
        }
        return leading_minors(m).pop().unwrap_or_else(Scalar::one);
    }
    bareiss_det_scalar(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> RingMatrix<Scalar> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(det_exact(&int_matrix(&[&[1, 1], &[1, 2]])), Scalar::int(1));
        assert_eq!(det_exact(&int_matrix(&[&[1, 1, 2], &[1, 2, 5], &[2, 5, 14]])), Scalar::int(1));
        assert_eq!(det_exact(&int_matrix(&[&[0, 1], &[1, 0]])), Scalar::int(-1));
        assert_eq!(det_exact(&RingMatrix::from_rows(vec![]).unwrap()), Scalar::int(1));
        assert_eq!(det_exact(&int_matrix(&[&[7]])), Scalar::int(7));
    }

    #[test]
    fn berkowitz_matches_bareiss() {
        let m = int_matrix(&[&[0, 2, 1], &[3, 0, 4], &[1, 1, 0]]);
        let ints = m.map(|x| x.as_int().unwrap().clone());
        let b = bareiss_det(&ints);
        assert_eq!(Scalar::from(b), leading_minors(&m).pop().unwrap());
        assert_eq!(leading_minors(&m), vec![Scalar::int(1), Scalar::int(0), Scalar::int(-6), Scalar::int(11)]);
    }

    #[test]
    fn char_poly_of_companion() {
        // Companion of x^2 - 3x + 2.
        let m = int_matrix(&[&[0, -2], &[1, 3]]);
        assert_eq!(berkowitz_char_poly(&m), vec![Scalar::int(1), Scalar::int(-3), Scalar::int(2)]);
    }

    #[test]
    fn rational_entries() {
        let m = RingMatrix::from_rows(vec![
            vec![Scalar::ratio(1, 2), Scalar::ratio(1, 3)],
            vec![Scalar::ratio(1, 3), Scalar::ratio(1, 4)],
        ])
        .unwrap();
        assert_eq!(det_exact(&m), Scalar::ratio(1, 72));
        assert_eq!(leading_minors_exact(&m), vec![Scalar::int(1), Scalar::ratio(1, 2), Scalar::ratio(1, 72)]);
    }

    #[test]
    fn symbolic_entries() {
        let (a, b) = (Scalar::a(), Scalar::b());
        let m = RingMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]]).unwrap();
        assert_eq!(det_exact(&m), &a.pow(2) - &b.pow(2));
    }

    #[test]
    fn polynomial_elimination_matches_berkowitz() {
        let (a, b, t) = (Scalar::a(), Scalar::b(), Scalar::t());
        // Zero leading entry forces the pivoting path.
        let m = RingMatrix::from_fn(4, |i, j| match (i + j) % 4 {
            0 => Scalar::zero(),
            1 => &a + &t,
            2 => &b * &a,
            _ => &(&t * &t) - &b,
        });
        assert_eq!(leading_minors_exact(&m), leading_minors(&m));
        assert_eq!(det_exact(&m), leading_minors(&m).pop().unwrap());
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = RingMatrix::from_rows(vec![vec![Scalar::int(1)], vec![]]);
        assert!(matches!(r, Err(ArithError::NotSquare { .. })));
    }
}
