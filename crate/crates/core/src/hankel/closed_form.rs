//! Closed forms for Hankel determinants, each tied to the parameter range it
//! is known to cover. Queries outside that range are refused rather than
//! extrapolated, since most formulas only hold on particular residue classes
//! of the size.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::HankelError;
use crate::arith::Scalar;
use crate::sequences::{fib, normalized_lucas, Family, Named, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedFormId {
    /// Shifted `m = 2` family in terms of the roots `x`, `y` of `z^2 - a z + b`.
    A,
    /// Shifted `m = 2` family via Fibonacci polynomials.
    AStar,
    CatalanAllK,
    /// Unrestricted `m = 2` family in terms of the roots `x`, `y`.
    B,
    /// Unrestricted `m = 2` family via normalized Lucas polynomials.
    BStar,
    BinomAllK,
    Thm4_1,
    Cor4_3,
    Thm4_4,
    Rem4_6,
    Thm5_4,
    Thm5_5,
    Thm5_6,
    Thm6_1,
    Thm6_2,
    Thm6_3,
    Thm6_4,
    Thm6_5,
    Thm7_1,
    Thm7_2,
    Thm7_3,
    Thm7_4,
    ZeroPattern5_1,
}

use ClosedFormId::*;

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 23] = [
        A, AStar, CatalanAllK, B, BStar, BinomAllK, Thm4_1, Cor4_3, Thm4_4, Rem4_6, Thm5_4, Thm5_5, Thm5_6,
        Thm6_1, Thm6_2, Thm6_3, Thm6_4, Thm6_5, Thm7_1, Thm7_2, Thm7_3, Thm7_4, ZeroPattern5_1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            A => "A",
            AStar => "A*",
            CatalanAllK => "catalan-all-k",
            B => "B",
            BStar => "B*",
            BinomAllK => "binom-all-k",
            Thm4_1 => "thm4.1",
            Cor4_3 => "cor4.3",
            Thm4_4 => "thm4.4",
            Rem4_6 => "rem4.6",
            Thm5_4 => "thm5.4",
            Thm5_5 => "thm5.5",
            Thm5_6 => "thm5.6",
            Thm6_1 => "thm6.1",
            Thm6_2 => "thm6.2",
            Thm6_3 => "thm6.3",
            Thm6_4 => "thm6.4",
            Thm6_5 => "thm6.5",
            Thm7_1 => "thm7.1",
            Thm7_2 => "thm7.2",
            Thm7_3 => "thm7.3",
            Thm7_4 => "thm7.4",
            ZeroPattern5_1 => "zero-pattern-5.1",
        }
    }

    pub fn domain(self) -> Domain {
        use Family::*;
        const R: &[Family] = &[Restricted];
        const S: &[Family] = &[Shifted];
        const U: &[Family] = &[Unrestricted];
        const RS: &[Family] = &[Restricted, Shifted];
        const RU: &[Family] = &[Restricted, Unrestricted];
        let d = Domain {
            families: R,
            m_min: 1,
            m_max: None,
            k_min: 0,
            k_max: Some(2),
            min_size: 0,
            a_zero: false,
            fixed: None,
            two_roots: false,
            sizes: "all sizes",
        };
        match self {
            A => Domain { families: RS, m_min: 2, m_max: Some(2), two_roots: true, ..d },
            AStar => Domain { families: RS, m_min: 2, m_max: Some(2), ..d },
            CatalanAllK => Domain {
                families: S,
                m_min: 2,
                m_max: Some(2),
                k_max: None,
                fixed: Some(Named::Catalan),
                ..d
            },
            B => Domain { families: U, m_min: 2, m_max: Some(2), min_size: 1, two_roots: true, ..d },
            BStar => Domain { families: U, m_min: 2, m_max: Some(2), min_size: 1, ..d },
            BinomAllK => Domain {
                families: U,
                m_min: 2,
                m_max: Some(2),
                k_max: None,
                min_size: 1,
                fixed: Some(Named::CentralBinomial),
                ..d
            },
            Thm4_1 => Domain { m_max: Some(1), ..d },
            Cor4_3 => Domain { families: S, m_max: Some(1), ..d },
            Thm4_4 => Domain { families: U, m_max: Some(1), min_size: 1, ..d },
            Rem4_6 => Domain { families: U, m_max: Some(1), min_size: 1, a_zero: true, ..d },
            Thm5_4 => Domain { k_max: Some(0), a_zero: true, sizes: "sizes mn and mn+1, zero otherwise", ..d },
            Thm5_5 => Domain {
                families: U,
                k_max: Some(0),
                min_size: 1,
                a_zero: true,
                sizes: "sizes mn and mn+1, zero otherwise",
                ..d
            },
            Thm5_6 => Domain { k_min: 1, k_max: Some(1), a_zero: true, sizes: "size mn, zero otherwise", ..d },
            Thm6_1 => Domain { families: RS, m_min: 3, m_max: Some(3), k_max: Some(0), ..d },
            Thm6_2 => Domain { m_min: 3, m_max: Some(3), k_min: 1, k_max: Some(1), ..d },
            Thm6_3 => Domain { families: S, m_min: 3, m_max: Some(3), k_min: 1, k_max: Some(1), ..d },
            Thm6_4 => Domain { m_min: 3, m_max: Some(3), k_min: 2, ..d },
            Thm6_5 => Domain { families: S, m_min: 3, m_max: Some(3), k_min: 2, ..d },
            Thm7_1 => Domain { m_min: 2, k_max: Some(0), sizes: "sizes mn and mn+1, zero otherwise", ..d },
            Thm7_2 => Domain {
                m_min: 3,
                k_min: 1,
                k_max: Some(1),
                sizes: "sizes mn, mn+1, mn-1, zero otherwise",
                ..d
            },
            Thm7_3 => Domain {
                families: S,
                m_min: 3,
                k_min: 1,
                k_max: Some(1),
                sizes: "sizes mn, mn+1, mn-1, zero otherwise",
                ..d
            },
            Thm7_4 => Domain { m_min: 4, k_min: 2, sizes: "sizes mn+1 and mn-2 only", ..d },
            ZeroPattern5_1 => Domain {
                families: RU,
                m_min: 3,
                min_size: 1,
                sizes: "sizes mn+r with 2 <= r <= m-1-k only",
                ..d
            },
        }
    }

    /// Whether the formula makes a claim about this cell. Parameter
    /// restrictions (`a = 0`, fixed sequences) are checked separately.
    pub fn covers(self, family: Family, m: u32, k: usize, size: usize) -> bool {
        let d = self.domain();
        if !d.families.contains(&family)
            || m < d.m_min
            || d.m_max.is_some_and(|hi| m > hi)
            || k < d.k_min
            || d.k_max.is_some_and(|hi| k > hi)
            || size < d.min_size
        {
            return false;
        }
        let r = size % m as usize;
        let m = m as usize;
        match self {
            Thm7_4 => r == 1 || r == m - 2,
            ZeroPattern5_1 => (2..m - k).contains(&r),
            _ => true,
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFormId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        let key = match key.as_str() {
            "astar" | "a-star" => "a*",
            "bstar" | "b-star" => "b*",
            other => other,
        };
        ClosedFormId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_lowercase() == key)
            .ok_or_else(|| format!("unknown closed form id {s:?}"))
    }
}

/// Where a closed form applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domain {
    pub families: &'static [Family],
    pub m_min: u32,
    pub m_max: Option<u32>,
    pub k_min: usize,
    /// `None` means every shift.
    pub k_max: Option<usize>,
    pub min_size: usize,
    /// The formula assumes `a = 0`.
    pub a_zero: bool,
    /// The formula is about one fixed sequence; `a`, `b`, `t` are ignored.
    pub fixed: Option<Named>,
    /// `a` and `b` carry the roots `x`, `y`; the sequence uses `x + y` and `x y`.
    pub two_roots: bool,
    pub sizes: &'static str,
}

/// One closed-form evaluation. `n` is the matrix size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormQuery {
    pub id: ClosedFormId,
    pub family: Family,
    pub m: u32,
    pub k: usize,
    pub n: usize,
    pub a: Scalar,
    pub b: Scalar,
    pub t: Scalar,
}

impl ClosedFormQuery {
    #[allow(clippy::too_many_arguments)]
    pub fn new(id: ClosedFormId, family: Family, m: u32, k: usize, n: usize, a: Scalar, b: Scalar, t: Scalar) -> Self {
        ClosedFormQuery { id, family, m, k, n, a, b, t }
    }

    /// Query for an id whose sequence is fixed.
    pub fn fixed(id: ClosedFormId, k: usize, n: usize) -> Option<Self> {
        let name = id.domain().fixed?;
        let spec = SequenceSpec::named(name);
        Some(ClosedFormQuery::new(id, spec.family, spec.m, k, n, spec.a, spec.b, spec.t))
    }

    fn t_eff(&self) -> Scalar {
        if self.family == Family::Shifted {
            self.t.clone()
        } else {
            Scalar::zero()
        }
    }

    /// The sequence whose Hankel determinant the formula describes.
    pub fn spec(&self) -> SequenceSpec {
        let d = self.id.domain();
        if let Some(name) = d.fixed {
            return SequenceSpec::named(name);
        }
        if d.two_roots {
            let (x, y) = (&self.a, &self.b);
            return SequenceSpec::new(self.family, self.m, x + y, x * y, self.t_eff());
        }
        SequenceSpec::new(self.family, self.m, self.a.clone(), self.b.clone(), self.t_eff())
    }

    pub fn check_domain(&self) -> Result<(), HankelError> {
        let d = self.id.domain();
        let out = |why: String| Err(HankelError::OutOfDomain(format!("{}: {why}", self.id)));
        if !self.id.covers(self.family, self.m, self.k, self.n) {
            let fams: Vec<&str> = d.families.iter().map(|f| f.name()).collect();
            let k_hi = d.k_max.map_or("any".to_string(), |k| k.to_string());
            let m_hi = d.m_max.map_or("any".to_string(), |m| m.to_string());
            return out(format!(
                "covers families [{}], m in {}..{}, k in {}..{}, size >= {}, {}; got {} m={} k={} size={}",
                fams.join(", "),
                d.m_min,
                m_hi,
                d.k_min,
                k_hi,
                d.min_size,
                d.sizes,
                self.family,
                self.m,
                self.k,
                self.n
            ));
        }
        if d.a_zero && !self.a.is_zero() {
            return out(format!("requires a = 0, got a = {}", self.a));
        }
        Ok(())
    }
}

fn c2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn binom_small(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

fn sign(e: u64) -> Scalar {
    Scalar::neg_one_pow(e)
}

fn pow2(e: u64) -> Scalar {
    Scalar::from(BigInt::from(1) << e)
}

fn int(v: u64) -> Scalar {
    Scalar::from(BigInt::from(v))
}

fn pw(x: &Scalar, e: u64) -> Scalar {
    x.pow(e as u32)
}

/// `value * b^e`, dividing exactly when `e` is negative.
fn times_b_pow(value: Scalar, b: &Scalar, e: i64) -> Result<Scalar, HankelError> {
    if e >= 0 {
        Ok(&value * &pw(b, e as u64))
    } else {
        Ok(value.exact_div(&pw(b, (-e) as u64))?)
    }
}

fn sum(items: impl Iterator<Item = Scalar>) -> Scalar {
    items.fold(Scalar::zero(), |acc, x| &acc + &x)
}

/// `sum_{i=0}^{n} i^2`.
fn square_sum(n: u64) -> Scalar {
    int(n * (n + 1) * (2 * n + 1) / 6)
}

/// `(x^n - y^n) / (x - y)` written as a sum, so `x = y` needs no special case.
fn h(n: u64, x: &Scalar, y: &Scalar) -> Scalar {
    sum((0..n).map(|i| &pw(x, i) * &pw(y, n - 1 - i)))
}

/// Splits `size` as `m n + r` with `0 <= r < m`.
fn split(size: usize, m: u32) -> (u64, u64) {
    let (s, m) = (size as u64, m as u64);
    (s / m, s % m)
}

/// Evaluates a closed form. Refuses queries outside its domain.
pub fn closed_form_det(q: &ClosedFormQuery) -> Result<Scalar, HankelError> {
    q.check_domain()?;
    let s = q.n as u64;
    let k = q.k;
    let (a, b, t) = (&q.a, &q.b, &q.t_eff());
    let m = q.m as u64;
    let v = match q.id {
        A => {
            let (x, y) = (a, b);
            let xy = x * y;
            let pre = pw(&xy, c2(s));
            let q_ = |j: u64| &h(j + 1, x, y) + &(t * &h(j, x, y));
            match k {
                0 => pre,
                1 => &pre * &q_(s),
                _ => &pre * &sum((0..=s).map(|j| &pw(&xy, s - j) * &q_(j).pow(2))),
            }
        }
        AStar => {
            let nb = -b;
            let pre = pw(b, c2(s));
            let q_ = |j: u64| &fib(j as usize + 1, a, &nb) + &(t * &fib(j as usize, a, &nb));
            match k {
                0 => pre,
                1 => &pre * &q_(s),
                _ => &pre * &sum((0..=s).map(|j| &pw(b, s - j) * &q_(j).pow(2))),
            }
        }
        CatalanAllK => {
            let mut p = BigRational::from_integer(1.into());
            for j in 1..k as u64 {
                for i in 1..=j {
                    p *= BigRational::new((2 * s + j + i).into(), (j + i).into());
                }
            }
            Scalar::from(p)
        }
        B => {
            let (x, y) = (a, b);
            let xy = x * y;
            let d0 = &pow2(s - 1) * &pw(&xy, c2(s));
            let l = |j: u64| &pw(x, j) + &pw(y, j);
            match k {
                0 => d0,
                1 => &d0 * &l(s),
                _ => {
                    let inner = &(&int(2) * &pw(&xy, s)) + &sum((1..=s).map(|j| &l(j).pow(2) * &pw(&xy, s - j)));
                    &d0 * &inner
                }
            }
        }
        BStar => {
            let nb = -b;
            let luc = |j: u64| normalized_lucas(j as usize, a, &nb);
            let d0 = &pow2(s - 1) * &pw(b, c2(s));
            match k {
                0 => d0,
                1 => &d0 * &luc(s),
                _ => {
                    let top = c2(s + 1);
                    let inner = &(&int(2) * &pw(b, top)) + &sum((1..=s).map(|j| &luc(j).pow(2) * &pw(b, top - j)));
                    &pow2(s - 1) * &inner
                }
            }
        }
        BinomAllK => {
            let mut p = BigRational::from_integer(BigInt::from(1) << (s - 1 + k as u64));
            for j in 0..k as u64 {
                for i in 1..=j {
                    p *= BigRational::new((2 * s + j + i - 1).into(), (i + j).into());
                }
            }
            Scalar::from(p)
        }
        Thm4_1 => {
            let u = a + b;
            match k {
                0 => &pw(b, c2(s)) * &pw(&u, c2(s)),
                1 => &pw(b, c2(s)) * &pw(&u, c2(s + 1)),
                _ => {
                    let d1 = &pw(b, c2(s)) * &pw(&u, c2(s + 1));
                    &d1 * &sum((0..=s).map(|j| &pw(&u, j) * &pw(b, s - j)))
                }
            }
        }
        Cor4_3 => {
            let u = a + b;
            let q_ = |j: u64| &pw(&u, j) + &(t * &sum((0..j).map(|i| &pw(&u, i) * &pw(b, j - 1 - i))));
            let d0 = &pw(b, c2(s)) * &pw(&u, c2(s));
            match k {
                0 => d0,
                1 => &d0 * &q_(s),
                _ => &d0 * &sum((0..=s).map(|j| &(&pw(&u, s - j) * &pw(b, s - j)) * &q_(j).pow(2))),
            }
        }
        Thm4_4 => {
            let u = a + b;
            let d0 = &(&pow2(s - 1) * &pw(b, c2(s))) * &pw(&u, c2(s));
            match k {
                0 => d0,
                1 => &d0 * &(&pw(&u, s) + &pw(b, s)),
                _ => {
                    let head = &int(2) * &(&pw(b, s) * &pw(&u, s));
                    let tail = sum((1..=s).map(|j| {
                        let l = &pw(&u, j) + &pw(b, j);
                        &l.pow(2) * &(&pw(b, s - j) * &pw(&u, s - j))
                    }));
                    &d0 * &(&head + &tail)
                }
            }
        }
        Rem4_6 => match k {
            0 => &pow2(s - 1) * &pw(b, s * (s - 1)),
            1 => &pow2(s) * &pw(b, s * s),
            _ => &(&pow2(s) * &int(2 * s + 1)) * &pw(b, s * s + s),
        },
        Thm5_4 | Thm7_1 | Thm6_1 => {
            let (n, r) = split(q.n, q.m);
            let sg = sign(binom_small(m.saturating_sub(1), 2) * n);
            match r {
                0 => times_b_pow(sg, b, (n * (m * n)) as i64 - n as i64)?,
                1 => &sg * &pw(b, n * (m * n + 1)),
                _ => Scalar::zero(),
            }
        }
        Thm5_5 => {
            let (n, r) = split(q.n, q.m);
            let sg = sign(binom_small(m.saturating_sub(1), 2) * n);
            match r {
                0 => &(&sg * &pow2(m * n - 1)) * &pw(b, n * (m * n - 1)),
                1 => &(&sg * &pow2(m * n)) * &pw(b, n * (m * n + 1)),
                _ => Scalar::zero(),
            }
        }
        Thm5_6 => {
            let (n, r) = split(q.n, q.m);
            match r {
                0 => &sign(binom_small(m, 2) * n) * &pw(b, m * n * n),
                _ => Scalar::zero(),
            }
        }
        Thm6_2 => {
            let (n, r) = split(q.n, 3);
            let sg = sign(n);
            match r {
                0 => &sg * &pw(b, 3 * n * n),
                1 => &(&sg * &int(n + 1)) * &(a * &pw(b, 3 * n * n + 2 * n)),
                _ => &(&sg * &int(n + 1)) * &(a * &pw(b, 3 * n * n + 4 * n + 1)),
            }
        }
        Thm6_3 => {
            let (n, r) = split(q.n, 3);
            match r {
                0 => &sign(n) * &pw(b, 3 * n * n),
                1 => &sign(n) * &(&(&(&int(n + 1) * a) + t) * &pw(b, 3 * n * n + 2 * n)),
                _ => {
                    // Size 3n - 1 with n >= 1.
                    let n = n + 1;
                    &sign(n - 1) * &(&(&(&int(n) * a) + t) * &pw(b, 3 * n * n - 2 * n))
                }
            }
        }
        Thm6_4 => {
            let (n, r) = split(q.n, 3);
            let a3 = pw(a, 3);
            match r {
                0 => {
                    let inner = &(&a3 * &square_sum(n)) - &(&int(n + 1) * b);
                    times_b_pow(&sign(n + 1) * &inner, b, (3 * n * n + n) as i64 - 1)?
                }
                1 => &(&sign(n) * &int((n + 1) * (n + 1))) * &(&pw(a, 2) * &pw(b, 3 * n * n + 3 * n)),
                _ => {
                    let inner = &(&a3 * &square_sum(n + 1)) - &(&int(n + 1) * b);
                    &(&sign(n) * &inner) * &pw(b, 3 * n * n + 5 * n + 1)
                }
            }
        }
        Thm6_5 => {
            let (n, r) = split(q.n, 3);
            let a3 = pw(a, 3);
            // t + (n+1) a for the block index n.
            let shift = |n: u64| t + &(&int(n + 1) * a);
            let extra = |n: u64| &(&int(n) * &(a * t)) * &shift(n);
            match r {
                0 => {
                    let inner = &(&(&a3 * &square_sum(n)) - &(&int(n + 1) * b)) + &extra(n);
                    times_b_pow(&sign(n + 1) * &inner, b, (3 * n * n + n) as i64 - 1)?
                }
                1 => &(&sign(n) * &shift(n).pow(2)) * &pw(b, 3 * n * n + 3 * n),
                _ => {
                    // Size 3n - 1 with n >= 1.
                    let n = n + 1;
                    let inner = &(&(&a3 * &square_sum(n)) - &(&int(n) * b)) + &extra(n);
                    &(&sign(n - 1) * &inner) * &pw(b, 3 * n * n - n - 1)
                }
            }
        }
        Thm7_2 | Thm7_3 => {
            let (n, r) = split(q.n, q.m);
            let lead = |n: u64| if q.id == Thm7_2 { &int(n) * a } else { &(&int(n) * a) + t };
            if r == 0 {
                &sign(binom_small(m, 2) * n) * &pw(b, m * n * n)
            } else if r == 1 {
                &(&sign(binom_small(m, 2) * n) * &lead(n + 1)) * &pw(b, m * n * n + 2 * n)
            } else if r == m - 1 {
                let n = n + 1;
                let v = &(&sign(binom_small(m, 2) * n) * &lead(n)) * &pw(b, m * n * n - 2 * n);
                -v
            } else {
                Scalar::zero()
            }
        }
        Thm7_4 => {
            let (n, r) = split(q.n, q.m);
            let a2 = pw(a, 2);
            if r == 1 {
                let sg = sign(n * binom_small(m - 1, 2));
                &(&sg * &int((n + 1) * (n + 1))) * &(&a2 * &pw(b, m * n * n + 3 * n))
            } else {
                let n = n + 1;
                let sg = sign(n * binom_small(m - 1, 2));
                -(&(&sg * &int(n * n)) * &(&a2 * &pw(b, m * n * n - 3 * n)))
            }
        }
        ZeroPattern5_1 => Scalar::zero(),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[allow(clippy::too_many_arguments)]
    fn q(id: ClosedFormId, family: Family, m: u32, k: usize, n: usize, a: i64, b: i64, t: i64) -> ClosedFormQuery {
        ClosedFormQuery::new(id, family, m, k, n, Scalar::int(a), Scalar::int(b), Scalar::int(t))
    }

    #[test]
    fn names_round_trip() {
        for id in ClosedFormId::ALL {
            assert_eq!(id.name().parse::<ClosedFormId>().unwrap(), id);
        }
        assert_eq!("Astar".parse::<ClosedFormId>().unwrap(), AStar);
        assert!("thm9.9".parse::<ClosedFormId>().is_err());
    }

    #[test]
    fn documented_values() {
        let cat = ClosedFormQuery::fixed(CatalanAllK, 3, 2).unwrap();
        assert_eq!(closed_form_det(&cat).unwrap(), Scalar::int(14));
        let schroeder = q(Thm4_1, Family::Restricted, 1, 2, 2, 1, 1, 0);
        assert_eq!(closed_form_det(&schroeder).unwrap(), Scalar::int(56));
        let sym = ClosedFormQuery::new(Thm7_2, Family::Restricted, 4, 1, 4, Scalar::a(), Scalar::b(), Scalar::zero());
        assert_eq!(closed_form_det(&sym).unwrap(), Scalar::b().pow(4));
        let zero = q(ZeroPattern5_1, Family::Restricted, 5, 1, 8, 1, 1, 0);
        assert_eq!(closed_form_det(&zero).unwrap(), Scalar::zero());
    }

    #[test]
    fn refuses_outside_domain() {
        let bad = q(Thm6_2, Family::Restricted, 4, 1, 3, 1, 1, 0);
        assert!(matches!(closed_form_det(&bad), Err(HankelError::OutOfDomain(_))));
        let residue = q(ZeroPattern5_1, Family::Restricted, 5, 1, 10, 1, 1, 0);
        assert!(closed_form_det(&residue).is_err());
        let nonzero_a = q(Thm5_4, Family::Restricted, 3, 0, 3, 1, 1, 0);
        assert!(closed_form_det(&nonzero_a).is_err());
        let thm74 = q(Thm7_4, Family::Restricted, 4, 2, 4, 1, 1, 0);
        assert!(closed_form_det(&thm74).is_err());
    }
}
