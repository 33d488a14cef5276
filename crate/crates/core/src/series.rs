//! Exact truncated power-series arithmetic: polynomials in `q` with integer
//! coefficients, and series in `x` whose coefficients are such polynomials.
//! All the walk functional equations are solved here by coefficient
//! recursion; extracting the coefficient of `x^n` on either side only ever
//! involves lower orders, so iterating the defining equation to the
//! truncation order yields the unique solution.
//!
//! Coefficients are exact `i64` integers and every operation is overflow
//! checked; an overflow aborts loudly rather than wrapping.

use std::ops::{Add, AddAssign, Mul, Sub};

use thiserror::Error;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    #[error("geometric division needs a divisor with no constant term")]
    NonNilpotentDivisor,
}

fn add_c(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("series coefficient overflow")
}

fn mul_c(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("series coefficient overflow")
}

/// Polynomial in `q` truncated at a fixed degree, dense exact-integer
/// coefficients.
///
/// Arithmetic between two polynomials requires equal truncation degrees and
/// panics otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<i64>, // index = power of q; length = qmax + 1
}

impl QPoly {
    pub fn zero(qmax: usize) -> QPoly {
        QPoly {
            coeffs: vec![0; qmax + 1],
        }
    }

    pub fn one(qmax: usize) -> QPoly {
        QPoly::monomial(0, 1, qmax)
    }

    /// `c * q^k`, or zero when `k` exceeds the truncation degree.
    pub fn monomial(k: usize, c: i64, qmax: usize) -> QPoly {
        let mut p = QPoly::zero(qmax);
        if k <= qmax {
            p.coeffs[k] = c;
        }
        p
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> QPoly {
        assert!(!coeffs.is_empty());
        QPoly { coeffs }
    }

    pub fn qmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Change the truncation degree, dropping or zero-padding coefficients.
    pub fn truncated(&self, qmax: usize) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(qmax + 1, 0);
        QPoly { coeffs }
    }

    /// Multiply by `q^k` (truncating at the top).
    pub fn shift_q(&self, k: usize) -> QPoly {
        let mut out = QPoly::zero(self.qmax());
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 && i + k <= self.qmax() {
                out.coeffs[i + k] = c;
            }
        }
        out
    }

    pub fn scaled(&self, c: i64) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|&a| mul_c(a, c)).collect(),
        }
    }

    /// The truncation of `1/(1 - q^step)`, i.e. `1 + q^step + q^(2 step) + ...`
    pub fn geometric(step: usize, qmax: usize) -> QPoly {
        assert!(step >= 1);
        let mut p = QPoly::zero(qmax);
        let mut k = 0;
        while k <= qmax {
            p.coeffs[k] = 1;
            k += step;
        }
        p
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().copied().fold(0, add_c)
    }

    /// Degree of the highest nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        assert_eq!(self.qmax(), rhs.qmax(), "truncation mismatch");
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| add_c(a, b))
                .collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        assert_eq!(self.qmax(), rhs.qmax(), "truncation mismatch");
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| add_c(a, -b))
                .collect(),
        }
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        assert_eq!(self.qmax(), rhs.qmax(), "truncation mismatch");
        let qmax = self.qmax();
        let mut out = QPoly::zero(qmax);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().take(qmax + 1 - i).enumerate() {
                if b != 0 {
                    out.coeffs[i + j] = add_c(out.coeffs[i + j], mul_c(a, b));
                }
            }
        }
        out
    }
}

impl Mul<&QPoly> for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        &self * rhs
    }
}

impl Add<&QPoly> for QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        &self + rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        assert_eq!(self.qmax(), rhs.qmax(), "truncation mismatch");
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = add_c(*a, b);
        }
    }
}

/// Power series in `x` truncated at a fixed order, with [`QPoly`]
/// coefficients sharing one q-truncation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    terms: Vec<QPoly>, // index = power of x; length = xmax + 1
}

impl XSeries {
    pub fn zero(xmax: usize, qmax: usize) -> XSeries {
        XSeries {
            terms: vec![QPoly::zero(qmax); xmax + 1],
        }
    }

    pub fn one(xmax: usize, qmax: usize) -> XSeries {
        let mut s = XSeries::zero(xmax, qmax);
        s.terms[0] = QPoly::one(qmax);
        s
    }

    /// `c * x^xpow * q^qpow`.
    pub fn monomial(xpow: usize, qpow: usize, c: i64, xmax: usize, qmax: usize) -> XSeries {
        let mut s = XSeries::zero(xmax, qmax);
        if xpow <= xmax {
            s.terms[xpow] = QPoly::monomial(qpow, c, qmax);
        }
        s
    }

    pub fn xmax(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn qmax(&self) -> usize {
        self.terms[0].qmax()
    }

    pub fn term(&self, n: usize) -> &QPoly {
        &self.terms[n]
    }

    pub fn set_term(&mut self, n: usize, p: QPoly) {
        assert_eq!(p.qmax(), self.qmax(), "truncation mismatch");
        self.terms[n] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(QPoly::is_zero)
    }

    fn check_align(&self, rhs: &XSeries) {
        assert_eq!(self.xmax(), rhs.xmax(), "truncation mismatch");
        assert_eq!(self.qmax(), rhs.qmax(), "truncation mismatch");
    }

    pub fn add(&self, rhs: &XSeries) -> XSeries {
        self.check_align(rhs);
        XSeries {
            terms: self
                .terms
                .iter()
                .zip(&rhs.terms)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &XSeries) -> XSeries {
        self.check_align(rhs);
        XSeries {
            terms: self
                .terms
                .iter()
                .zip(&rhs.terms)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &XSeries) -> XSeries {
        self.check_align(rhs);
        let mut out = XSeries::zero(self.xmax(), self.qmax());
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate() {
                if i + j > self.xmax() {
                    break;
                }
                if !b.is_zero() {
                    out.terms[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiply every term by one q-polynomial.
    pub fn scale_q(&self, p: &QPoly) -> XSeries {
        XSeries {
            terms: self.terms.iter().map(|t| t * p).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> XSeries {
        XSeries {
            terms: self.terms.iter().map(|t| t.scaled(c)).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_x(&self, k: usize) -> XSeries {
        let mut out = XSeries::zero(self.xmax(), self.qmax());
        for (i, t) in self.terms.iter().enumerate() {
            if i + k <= self.xmax() {
                out.terms[i + k] = t.clone();
            }
        }
        out
    }

    /// The substitution `x -> qx`: term `n` picks up `q^n`.
    pub fn subst_qx(&self) -> XSeries {
        XSeries {
            terms: self
                .terms
                .iter()
                .enumerate()
                .map(|(n, t)| t.shift_q(n))
                .collect(),
        }
    }

    /// Formal derivative in `x`, shifted down: term `n` becomes
    /// `(n+1) * terms[n+1]`; the top order is lost to the truncation.
    pub fn x_derivative(&self) -> XSeries {
        let mut out = XSeries::zero(self.xmax(), self.qmax());
        for n in 0..self.xmax() {
            out.terms[n] = self.terms[n + 1].scaled(n as i64 + 1);
        }
        out
    }

    /// `a * (1 + u + u^2 + ...)` for a divisor `u` with no constant term;
    /// the truncated expansion of `a / (1 - u)`.
    pub fn geom_div(&self, u: &XSeries) -> Result<XSeries, SeriesError> {
        self.check_align(u);
        if u.terms[0].coeff(0) != 0 {
            return Err(SeriesError::NonNilpotentDivisor);
        }
        let mut out = self.clone();
        let mut acc = self.clone();
        // each multiplication raises the least (x + q) valuation, so the
        // powers vanish under truncation within xmax + qmax + 1 rounds
        for _ in 0..=self.xmax() + self.qmax() {
            acc = acc.mul(u);
            if acc.is_zero() {
                return Ok(out);
            }
            out = out.add(&acc);
        }
        unreachable!("powers of a constant-free divisor vanish under truncation")
    }
}

/// The walk series entering every generating function: `m_star`/`m` are the
/// flat-start, flat-end walks with and without the star condition, and
/// `q_star`/`q_end` the end-at-zero walks (free start height).
///
/// Everything is produced by iterating the defining functional equations:
///
/// * `M*(x) = 1 + x M*(x) + q x (M*(x) - 1) M*(qx)`
/// * `M(x)  = M*(x) + x M*(x) M(x)`
/// * `Q(x)  = M(x) (1 + x q Q(qx))` and `Q*(x) = M*(x) (1 + x q Q(qx))`
#[derive(Clone, Debug)]
pub struct WalkSeries {
    pub m_star: XSeries,
    pub m: XSeries,
    pub q_end: XSeries,
    pub q_end_star: XSeries,
}

/// Iterate `next` until every x-order stabilizes. Each application of a
/// well-founded equation fixes at least one further order, so `xmax + 2`
/// rounds are always enough; the fixed point is asserted.
fn fixed_point(xmax: usize, qmax: usize, next: impl Fn(&XSeries) -> XSeries) -> XSeries {
    let mut s = XSeries::zero(xmax, qmax);
    for _ in 0..=xmax + 1 {
        s = next(&s);
    }
    debug_assert_eq!(s, next(&s), "recursion did not reach a fixed point");
    s
}

/// Solve `M*(x) = 1 + x M*(x) + q x (M*(x) - 1) M*(qx)`.
pub fn solve_m_star(xmax: usize, qmax: usize) -> XSeries {
    let one = XSeries::one(xmax, qmax);
    fixed_point(xmax, qmax, |s| {
        let shifted = s.sub(&one).mul(&s.subst_qx());
        one.add(&s.shift_x(1))
            .add(&shifted.shift_x(1).scale_q(&QPoly::monomial(1, 1, qmax)))
    })
}

/// Solve `M(x) = M*(x) + x M*(x) M(x)` given `M*`.
pub fn solve_m(m_star: &XSeries) -> XSeries {
    let (xmax, qmax) = (m_star.xmax(), m_star.qmax());
    fixed_point(xmax, qmax, |s| m_star.add(&m_star.mul(s).shift_x(1)))
}

/// Solve the pair `Q(x) = M(x)(1 + xq Q(qx))`, `Q*(x) = M*(x)(1 + xq Q(qx))`.
pub fn solve_q_pair(m_star: &XSeries, m: &XSeries) -> (XSeries, XSeries) {
    let (xmax, qmax) = (m.xmax(), m.qmax());
    let one = XSeries::one(xmax, qmax);
    let q1 = QPoly::monomial(1, 1, qmax);
    let q_end = fixed_point(xmax, qmax, |s| {
        m.mul(&one.add(&s.subst_qx().shift_x(1).scale_q(&q1)))
    });
    let bracket = one.add(&q_end.subst_qx().shift_x(1).scale_q(&q1));
    let q_end_star = m_star.mul(&bracket);
    (q_end, q_end_star)
}

/// All four base series at the given truncations.
pub fn walk_series(xmax: usize, qmax: usize) -> WalkSeries {
    let m_star = solve_m_star(xmax, qmax);
    let m = solve_m(&m_star);
    let (q_end, q_end_star) = solve_q_pair(&m_star, &m);
    WalkSeries {
        m_star,
        m,
        q_end,
        q_end_star,
    }
}

impl WalkSeries {
    fn q1(&self) -> QPoly {
        QPoly::monomial(1, 1, self.m.qmax())
    }

    /// Touching closed walks, by the area statistic:
    /// `O(x) = M(x) (1 + q x^2 (d(xM)/dx)(qx))` and the star variant with
    /// `M*` in front.
    pub fn touch_closed_pair(&self) -> (XSeries, XSeries) {
        let d = self.m.shift_x(1).x_derivative().subst_qx();
        let bracket = XSeries::one(self.m.xmax(), self.m.qmax())
            .add(&d.shift_x(2).scale_q(&self.q1()));
        (self.m.mul(&bracket), self.m_star.mul(&bracket))
    }

    /// Touching free walks: `G(x) = M(x) (1 + qx Q(qx))^2` and the star
    /// variant.
    pub fn touch_free_pair(&self) -> (XSeries, XSeries) {
        let f = XSeries::one(self.m.xmax(), self.m.qmax())
            .add(&self.q_end.subst_qx().shift_x(1).scale_q(&self.q1()));
        let sq = f.mul(&f);
        (self.m.mul(&sq), self.m_star.mul(&sq))
    }

    /// Left-peak and left-right-peak series:
    ///
    /// `LP(x)  = xq^2/(1-xq^2) (xq M(qx) Q*(x) + q (Q(qx) - 1))`
    /// `LRP(x) = x^2q^4/(1-xq^2)^2 (x^2q^2 M(qx)^2 M*(x) + q (M(qx) - 1))`
    pub fn peak_pair(&self) -> (XSeries, XSeries) {
        let (xmax, qmax) = (self.m.xmax(), self.m.qmax());
        let one = XSeries::one(xmax, qmax);
        let xq2 = XSeries::monomial(1, 2, 1, xmax, qmax);
        let inv = one.geom_div(&xq2).expect("xq^2 has no constant term");
        let mq = self.m.subst_qx();
        let qq = self.q_end.subst_qx();
        let lp_bracket = mq
            .mul(&self.q_end_star)
            .shift_x(1)
            .scale_q(&self.q1())
            .add(&qq.sub(&one).scale_q(&self.q1()));
        let lp = lp_bracket.mul(&inv).mul(&xq2);
        let lrp_bracket = mq
            .mul(&mq)
            .mul(&self.m_star)
            .shift_x(2)
            .scale_q(&QPoly::monomial(2, 1, qmax))
            .add(&mq.sub(&one).scale_q(&self.q1()));
        let lrp = lrp_bracket
            .mul(&inv)
            .mul(&inv)
            .mul(&XSeries::monomial(2, 4, 1, xmax, qmax));
        (lp, lrp)
    }

    /// The three series assembling the forked-diagram generating functions:
    ///
    /// `T(x) = Q*(x) + 2(G*(x) - Q*(x)) + xq^2 M(qx) Q*(x) + q^2 Q(qx)`
    ///
    /// `RPd(x) = xq^2/(1-xq^2) [ xq M(qx) M*(x) + 2qx M(qx)(Q*(x) - M*(x))
    ///           + 2q(Q(qx)-1) + q^2(M(qx)-1) + q^3 x^2 M(qx)^2 M*(x) ]
    ///           + (q^3 + 4q^2 + 2q)/(1 - xq^2)`
    ///
    /// `U(x) = M*(x) + 4x^2q^2 M*(x) Q(qx)^2 + q^2[ qM(qx) + M*(x)(xqM(qx))^2 ]
    ///         + 4xq M*(x) Q(qx) + 2xq^2 M*(x) M(qx) + 4q^2 Q(qx)
    ///         + 4x^2q^3 M*(x) M(qx) Q(qx)`
    pub fn fork_triple(&self) -> (XSeries, XSeries, XSeries) {
        let (xmax, qmax) = (self.m.xmax(), self.m.qmax());
        let one = XSeries::one(xmax, qmax);
        let q1 = self.q1();
        let q2 = QPoly::monomial(2, 1, qmax);
        let q3 = QPoly::monomial(3, 1, qmax);
        let mq = self.m.subst_qx();
        let qq = self.q_end.subst_qx();
        let (_, g_star) = self.touch_free_pair();

        let t = self
            .q_end_star
            .add(&g_star.sub(&self.q_end_star).scale(2))
            .add(&mq.mul(&self.q_end_star).shift_x(1).scale_q(&q2))
            .add(&qq.scale_q(&q2));

        let xq2 = XSeries::monomial(1, 2, 1, xmax, qmax);
        let inv = one.geom_div(&xq2).expect("xq^2 has no constant term");
        let bracket = mq
            .mul(&self.m_star)
            .shift_x(1)
            .scale_q(&q1)
            .add(
                &mq.mul(&self.q_end_star.sub(&self.m_star))
                    .shift_x(1)
                    .scale_q(&q1)
                    .scale(2),
            )
            .add(&qq.sub(&one).scale_q(&q1).scale(2))
            .add(&mq.sub(&one).scale_q(&q2))
            .add(&mq.mul(&mq).mul(&self.m_star).shift_x(2).scale_q(&q3));
        let correction = QPoly::monomial(3, 1, qmax);
        let correction = &(&correction + &QPoly::monomial(2, 4, qmax)) + &QPoly::monomial(1, 2, qmax);
        let rpd = bracket
            .mul(&xq2)
            .mul(&inv)
            .add(&one.scale_q(&correction).mul(&inv));

        let u = self
            .m_star
            .add(&self.m_star.mul(&qq).mul(&qq).shift_x(2).scale_q(&q2).scale(4))
            .add(&mq.scale_q(&q3))
            .add(&self.m_star.mul(&mq).mul(&mq).shift_x(2).scale_q(&QPoly::monomial(4, 1, qmax)))
            .add(&self.m_star.mul(&qq).shift_x(1).scale_q(&q1).scale(4))
            .add(&self.m_star.mul(&mq).shift_x(1).scale_q(&q2).scale(2))
            .add(&qq.scale_q(&q2).scale(4))
            .add(&self.m_star.mul(&mq).mul(&qq).shift_x(2).scale_q(&q3).scale(4));
        (t, rpd, u)
    }
}
