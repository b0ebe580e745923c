//! The commutative coefficient ring.
//!
//! A [`Scalar`] is a finite sum of Gaussian-rational multiples of monomials
//!
//! ```text
//! hbar^h * p0^e0 * p1^e1 * p2^e2 * p3^e3 * a0^f0 * ... * a3^f3 * w^k
//! ```
//!
//! with `h, k` arbitrary integers. `p0..p3` are the contravariant momentum
//! components p^mu, `a0..a3` the acceleration parameters alpha^mu and `w` the
//! central square root of `p.p = (p0)^2 - (p1)^2 - (p2)^2 - (p3)^2`.
//!
//! The representation is canonical: the relation `w^2 = p.p` is used to
//! eliminate `(p0)^2`, so every stored monomial has `p0`-degree 0 or 1 while
//! `w` carries any integer power. The ring is free over the polynomial ring
//! in `p1, p2, p3, w, 1/w` with basis `{1, p0}`, hence two scalars are equal
//! exactly when their term lists are equal. Inverses exist only for
//! `unit * hbar^h * w^k`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::clifford::metric;
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

fn q_add(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).expect("rational overflow in addition")
}

fn q_sub(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).expect("rational overflow in subtraction")
}

fn q_mul(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b)
        .expect("rational overflow in multiplication")
}

fn q_div(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b)
        .expect("rational overflow or division by zero")
}

/// `a + b i` with exact rational parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub const fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::new(Rational::from_integer(n as i128), Rational::zero())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::new(Rational::new(n as i128, d as i128), Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = q_add(&q_mul(&self.re, &self.re), &q_mul(&self.im, &self.im));
        Some(Self::new(q_div(&self.re, &norm), q_div(&-self.im, &norm)))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| *self * inv)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(q_add(&self.re, &rhs.re), q_add(&self.im, &rhs.im))
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(q_sub(&self.re, &rhs.re), q_sub(&self.im, &rhs.im))
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = q_sub(&q_mul(&self.re, &rhs.re), &q_mul(&self.im, &rhs.im));
        let im = q_add(&q_mul(&self.re, &rhs.im), &q_mul(&self.im, &rhs.re));
        Self::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = coefficient_body(self, false);
        if neg {
            write!(f, "-")?;
        }
        write!(f, "{body}")
    }
}

/// Exponent vector of one scalar monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub hbar: i8,
    pub p: [u8; 4],
    pub alpha: [u8; 4],
    pub w: i8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        hbar: 0,
        p: [0; 4],
        alpha: [0; 4],
        w: 0,
    };

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn alpha_degree(&self) -> u32 {
        self.alpha.iter().map(|&e| e as u32).sum()
    }

    pub fn p_degree(&self) -> u32 {
        self.p.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let add = |a: u8, b: u8| a.checked_add(b).expect("exponent overflow");
        let addi = |a: i8, b: i8| a.checked_add(b).expect("exponent overflow");
        Monomial {
            hbar: addi(self.hbar, other.hbar),
            p: std::array::from_fn(|k| add(self.p[k], other.p[k])),
            alpha: std::array::from_fn(|k| add(self.alpha[k], other.alpha[k])),
            w: addi(self.w, other.w),
        }
    }

    fn sort_key(&self) -> (u32, [u8; 4], i8, u32, [u8; 4], i8) {
        (
            self.alpha_degree(),
            self.alpha,
            self.hbar,
            self.p_degree(),
            self.p,
            self.w,
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // alpha-graded first so truncated series print by order
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Direction in which terms are listed when rendering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    #[default]
    Ascending,
    Descending,
}

/// Element of the coefficient ring, in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: Vec<(Monomial, GaussianRational)>,
}

/// Push `c * m`, rewriting `(p0)^2 = w^2 + (p1)^2 + (p2)^2 + (p3)^2`.
fn push_reduced(out: &mut Vec<(Monomial, GaussianRational)>, m: Monomial, c: GaussianRational) {
    if m.p[0] < 2 {
        out.push((m, c));
        return;
    }
    let mut base = m;
    base.p[0] -= 2;
    let mut via_w = base;
    via_w.w = via_w.w.checked_add(2).expect("exponent overflow");
    push_reduced(out, via_w, c);
    for k in 1..4 {
        let mut t = base;
        t.p[k] = t.p[k].checked_add(2).expect("exponent overflow");
        push_reduced(out, t, c);
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::ratio(n, d))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut raw = Vec::with_capacity(1);
        push_reduced(&mut raw, m, c);
        Self::from_raw(raw)
    }

    pub fn hbar_pow(k: i8) -> Self {
        Self::term(
            Monomial {
                hbar: k,
                ..Monomial::ONE
            },
            GaussianRational::one(),
        )
    }

    pub fn hbar() -> Self {
        Self::hbar_pow(1)
    }

    /// Contravariant momentum component `p^mu`.
    pub fn p(mu: usize) -> Self {
        let mut m = Monomial::ONE;
        m.p[mu] = 1;
        Self::term(m, GaussianRational::one())
    }

    /// Covariant momentum component `P_mu = eta_{mu mu} p^mu`.
    pub fn p_lower(mu: usize) -> Self {
        Self::p(mu).scale(GaussianRational::int(metric(mu) as i64))
    }

    /// Acceleration parameter `alpha^mu`.
    pub fn alpha(mu: usize) -> Self {
        let mut m = Monomial::ONE;
        m.alpha[mu] = 1;
        Self::term(m, GaussianRational::one())
    }

    pub fn alpha_lower(mu: usize) -> Self {
        Self::alpha(mu).scale(GaussianRational::int(metric(mu) as i64))
    }

    /// `alpha^mu alpha_mu`.
    pub fn alpha_squared() -> Self {
        (0..4).fold(Scalar::zero(), |acc, mu| {
            acc + Self::alpha(mu) * Self::alpha_lower(mu)
        })
    }

    pub fn w() -> Self {
        Self::w_pow(1)
    }

    pub fn w_pow(k: i8) -> Self {
        Self::term(
            Monomial {
                w: k,
                ..Monomial::ONE
            },
            GaussianRational::one(),
        )
    }

    /// `eta_{mu nu} p^mu p^nu`, which the canonical form stores as `w^2`.
    pub fn p_squared() -> Self {
        (0..4).fold(Scalar::zero(), |acc, mu| {
            acc + Self::p(mu) * Self::p_lower(mu)
        })
    }

    fn from_raw(mut raw: Vec<(Monomial, GaussianRational)>) -> Self {
        raw.sort_unstable_by_key(|a| a.0);
        let mut terms: Vec<(Monomial, GaussianRational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = *lc + c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this scalar is a pure Gaussian-rational constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn scale(&self, c: GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, x)| (*m, *x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Scalar {
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            push_reduced(&mut raw, m.mul(mono), *c);
        }
        Self::from_raw(raw)
    }

    fn merge(&self, other: &Scalar, negate: bool) -> Scalar {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sgn = |c: GaussianRational| if negate { -c } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sgn(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 + sgn(b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, sgn(*c))));
        Scalar { terms: out }
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                push_reduced(&mut raw, ma.mul(mb), *ca * *cb);
            }
        }
        Self::from_raw(raw)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        (0..n).fold(Scalar::one(), |acc, _| acc.mul_ref(self))
    }

    /// Inverse of `c * hbar^h * w^k`; anything else is a modeling error.
    pub fn invert(&self) -> Result<Scalar> {
        match self.terms.as_slice() {
            [(m, c)] if m.p == [0; 4] && m.alpha == [0; 4] => {
                let inv = c.inv().expect("stored coefficients are nonzero");
                let mono = Monomial {
                    hbar: m.hbar.checked_neg().expect("exponent overflow"),
                    w: m.w.checked_neg().expect("exponent overflow"),
                    ..Monomial::ONE
                };
                Ok(Scalar::term(mono, inv))
            }
            _ => Err(Error::NonInvertibleCoefficient(self.to_string())),
        }
    }

    /// Partial derivative with respect to the contravariant component `p^nu`.
    ///
    /// `w` is differentiated through `dw/dp^nu = P_nu / w`.
    pub fn pderiv(&self, nu: usize) -> Scalar {
        let eta = metric(nu) as i64;
        let mut raw = Vec::with_capacity(2 * self.terms.len());
        for (m, c) in &self.terms {
            if m.p[nu] > 0 {
                let mut d = *m;
                d.p[nu] -= 1;
                push_reduced(&mut raw, d, *c * GaussianRational::int(m.p[nu] as i64));
            }
            if m.w != 0 {
                let mut d = *m;
                d.w -= 2;
                d.p[nu] = d.p[nu].checked_add(1).expect("exponent overflow");
                push_reduced(&mut raw, d, *c * GaussianRational::int(m.w as i64 * eta));
            }
        }
        Self::from_raw(raw)
    }

    /// Complex conjugation of the coefficients; all symbols are real.
    pub fn conj_i(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// Total degree in `alpha^0..alpha^3`; zero for the zero scalar.
    pub fn alpha_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.alpha_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn alpha_truncate(&self, order: u32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.alpha_degree() <= order)
                .copied()
                .collect(),
        }
    }

    /// Part of exact alpha-degree `order`.
    pub fn alpha_homogeneous(&self, order: u32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.alpha_degree() == order)
                .copied()
                .collect(),
        }
    }

    pub fn is_alpha_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.alpha == [0; 4])
    }

    pub fn is_momentum_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.p == [0; 4] && m.w == 0)
    }

    /// Replace `alpha^mu` by rational numbers.
    pub fn substitute_alpha(&self, values: &[Rational; 4]) -> Scalar {
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut factor = Rational::one();
            for (k, v) in values.iter().enumerate() {
                for _ in 0..m.alpha[k] {
                    factor = q_mul(&factor, v);
                }
            }
            let mut stripped = *m;
            stripped.alpha = [0; 4];
            push_reduced(&mut raw, stripped, *c * GaussianRational::real(factor));
        }
        Self::from_raw(raw)
    }

    /// `Some(c)` when `self == c * other` for a Gaussian-rational constant `c`.
    pub fn ratio_to(&self, other: &Scalar) -> Option<GaussianRational> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let c = self.terms[0].1.div(&other.terms[0].1)?;
        let matches = self
            .terms
            .iter()
            .zip(&other.terms)
            .all(|((ma, ca), (mb, cb))| ma == mb && *ca == *cb * c);
        matches.then_some(c)
    }

    pub fn render(&self, order: MonomialOrder) -> String {
        render_terms(&self.terms, order, false)
    }

    pub fn render_latex(&self, order: MonomialOrder) -> String {
        render_terms(&self.terms, order, true)
    }
}

fn rational_text(q: &Rational, latex: bool) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Splits a coefficient into a leading sign and the text of its magnitude.
/// The magnitude text is empty when it equals 1 and `elide_one` is set.
fn coefficient_body(c: &GaussianRational, elide_one: bool) -> (bool, String) {
    coefficient_body_fmt(c, elide_one, false)
}

fn coefficient_body_fmt(c: &GaussianRational, elide_one: bool, latex: bool) -> (bool, String) {
    let mul = if latex { " " } else { "*" };
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let mag = c.re.abs();
        if mag.is_one() && elide_one {
            (neg, String::new())
        } else {
            (neg, rational_text(&mag, latex))
        }
    } else if c.re.is_zero() {
        let neg = c.im.is_negative();
        let mag = c.im.abs();
        if mag.is_one() {
            (neg, "i".to_string())
        } else {
            (neg, format!("{}{mul}i", rational_text(&mag, latex)))
        }
    } else {
        let sign = if c.im.is_negative() { "-" } else { "+" };
        let im_mag = c.im.abs();
        let im_text = if im_mag.is_one() {
            "i".to_string()
        } else {
            format!("{}{mul}i", rational_text(&im_mag, latex))
        };
        let re_text = if c.re.is_negative() {
            format!("-{}", rational_text(&c.re.abs(), latex))
        } else {
            rational_text(&c.re, latex)
        };
        (false, format!("({re_text} {sign} {im_text})"))
    }
}

fn power(base: &str, e: i32, latex: bool) -> String {
    if e == 1 {
        base.to_string()
    } else if latex {
        format!("{base}^{{{e}}}")
    } else {
        format!("{base}^{e}")
    }
}

fn monomial_text(m: &Monomial, latex: bool) -> String {
    let mut factors = Vec::new();
    if m.hbar != 0 {
        factors.push(power(
            if latex { "\\hbar" } else { "hbar" },
            m.hbar as i32,
            latex,
        ));
    }
    for k in 0..4 {
        if m.p[k] > 0 {
            let base = if latex {
                format!("p^{{{k}}}")
            } else {
                format!("p{k}")
            };
            let base = if latex && m.p[k] > 1 {
                format!("({base})")
            } else {
                base
            };
            factors.push(power(&base, m.p[k] as i32, latex));
        }
    }
    for k in 0..4 {
        if m.alpha[k] > 0 {
            let base = if latex {
                format!("\\alpha^{{{k}}}")
            } else {
                format!("a{k}")
            };
            let base = if latex && m.alpha[k] > 1 {
                format!("({base})")
            } else {
                base
            };
            factors.push(power(&base, m.alpha[k] as i32, latex));
        }
    }
    if m.w != 0 {
        factors.push(power(if latex { "|M|" } else { "w" }, m.w as i32, latex));
    }
    factors.join(if latex { " " } else { "*" })
}

fn render_terms(
    terms: &[(Monomial, GaussianRational)],
    order: MonomialOrder,
    latex: bool,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let iter: Box<dyn Iterator<Item = &(Monomial, GaussianRational)>> = match order {
        MonomialOrder::Ascending => Box::new(terms.iter()),
        MonomialOrder::Descending => Box::new(terms.iter().rev()),
    };
    let mul = if latex { " " } else { "*" };
    for (idx, (m, c)) in iter.enumerate() {
        let mono = monomial_text(m, latex);
        let (neg, coef) = coefficient_body_fmt(c, !mono.is_empty(), latex);
        let body = match (coef.is_empty(), mono.is_empty()) {
            (true, _) => mono,
            (false, true) => coef,
            (false, false) => format!("{coef}{mul}{mono}"),
        };
        match (idx, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(MonomialOrder::Ascending))
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::constant(c)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.merge(rhs, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.merge(rhs, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
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
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(-GaussianRational::one())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(-GaussianRational::one())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.merge(rhs, true);
    }
}
