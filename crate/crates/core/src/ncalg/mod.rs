//! Normal-form engine for the algebra generated by the canonical positions
//! `x_0..x_3`, the Clifford generators and the coefficient ring.
//!
//! Every element is stored as a sum of monomials `x^a * word * f` with the
//! position part leftmost, the Clifford word in the middle and the scalar
//! rightmost. Words commute with positions and momenta; scalars are pushed
//! to the right of positions with
//!
//! ```text
//! f * x_nu = x_nu * f - i hbar * df/dp^nu
//! ```
//!
//! which is `(P_mu, x_nu) = -eta_{mu nu}` written for an arbitrary function of
//! the momenta. Iterated, a scalar moves past a whole position monomial as
//! `f x^b = sum_k C(b,k) x^(b-k) (-i hbar)^|k| d^k f`.

mod adjoint;
mod poly;
mod render;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::clifford::{metric, wmul, CliffordWord};
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Monomial, Rational, Scalar};

pub use adjoint::{position_adjoint, word_adjoint};
pub use poly::{poly_eval_left, poly_eval_sym, PolyForm};
pub use render::RenderOptions;

/// Exponents of `x_0..x_3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial(pub [u8; 4]);

impl XMonomial {
    pub const ONE: XMonomial = XMonomial([0; 4]);

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn generator(mu: usize) -> Self {
        let mut e = [0; 4];
        e[mu] = 1;
        XMonomial(e)
    }
}

/// Position part and Clifford word of a normal-form monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    pub x: XMonomial,
    pub word: CliffordWord,
}

impl Key {
    pub const ONE: Key = Key {
        x: XMonomial::ONE,
        word: CliffordWord::IDENTITY,
    };
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.x.degree(), self.x, self.word).cmp(&(other.x.degree(), other.x, other.word))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the noncommutative algebra in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCElement {
    terms: BTreeMap<Key, Scalar>,
}

fn binomial(n: u8, k: u8) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `(-i)^n` as a Gaussian rational.
fn minus_i_pow(n: u32) -> GaussianRational {
    match n % 4 {
        0 => GaussianRational::one(),
        1 => -GaussianRational::i(),
        2 => -GaussianRational::one(),
        _ => GaussianRational::i(),
    }
}

/// Memo of momentum derivatives `d^k f` for multi-indices `k`.
struct DerivCache<'a> {
    base: &'a Scalar,
    memo: HashMap<[u8; 4], Scalar>,
}

impl<'a> DerivCache<'a> {
    fn new(base: &'a Scalar) -> Self {
        DerivCache {
            base,
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, k: [u8; 4]) -> Scalar {
        if k == [0; 4] {
            return self.base.clone();
        }
        if let Some(s) = self.memo.get(&k) {
            return s.clone();
        }
        let j = k.iter().position(|&e| e > 0).expect("nonzero multi-index");
        let mut prev = k;
        prev[j] -= 1;
        let d = self.get(prev).pderiv(j);
        self.memo.insert(k, d.clone());
        d
    }
}

impl NCElement {
    pub fn zero() -> Self {
        NCElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    pub fn from_term(key: Key, s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(key, s);
        }
        NCElement { terms }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Self::from_term(Key::ONE, s)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_scalar(Scalar::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_scalar(Scalar::int(n))
    }

    /// Canonical position `x_mu` (covariant index).
    pub fn x(mu: usize) -> Self {
        Self::from_term(
            Key {
                x: XMonomial::generator(mu),
                word: CliffordWord::IDENTITY,
            },
            Scalar::one(),
        )
    }

    /// `x^mu = eta^{mu mu} x_mu`.
    pub fn x_upper(mu: usize) -> Self {
        Self::x(mu).scale(GaussianRational::int(metric(mu) as i64))
    }

    /// Clifford generator `gamma_mu` (covariant index).
    pub fn gamma(mu: usize) -> Self {
        Self::word(CliffordWord::generator(mu))
    }

    pub fn word(w: CliffordWord) -> Self {
        Self::from_term(
            Key {
                x: XMonomial::ONE,
                word: w,
            },
            Scalar::one(),
        )
    }

    /// `i gamma_0 gamma_1 gamma_2 gamma_3`.
    pub fn gamma5() -> Self {
        let (c, w) = crate::clifford::gamma5();
        Self::from_term(
            Key {
                x: XMonomial::ONE,
                word: w,
            },
            Scalar::constant(c),
        )
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &Key) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// The scalar if the element is `f * 1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Key::ONE).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, key: Key, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += s;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, s.clone());
            }
        }
    }

    fn combine(&self, other: &NCElement, negate: bool) -> NCElement {
        let mut out = self.clone();
        for (k, s) in &other.terms {
            if negate {
                out.add_term(*k, &-s);
            } else {
                out.add_term(*k, s);
            }
        }
        out
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, c: GaussianRational) -> NCElement {
        if c.is_zero() {
            return NCElement::zero();
        }
        NCElement {
            terms: self.terms.iter().map(|(k, s)| (*k, s.scale(c))).collect(),
        }
    }

    /// Right multiplication by a scalar: `a * f`.
    pub fn mul_scalar_right(&self, f: &Scalar) -> NCElement {
        let mut terms = BTreeMap::new();
        for (k, s) in &self.terms {
            let prod = s.mul_ref(f);
            if !prod.is_zero() {
                terms.insert(*k, prod);
            }
        }
        NCElement { terms }
    }

    /// Normal-form product.
    pub fn mul(&self, other: &NCElement) -> NCElement {
        let mut acc: HashMap<Key, Scalar> = HashMap::new();
        for (ka, fa) in &self.terms {
            let mut derivs = DerivCache::new(fa);
            let p_free = fa.is_momentum_free();
            for (kb, gb) in &other.terms {
                let (sign, word) = wmul(ka.word, kb.word);
                let b = kb.x.0;
                let bound: [u8; 4] = if p_free { [0; 4] } else { b };
                for k0 in 0..=bound[0] {
                    for k1 in 0..=bound[1] {
                        for k2 in 0..=bound[2] {
                            for k3 in 0..=bound[3] {
                                let k = [k0, k1, k2, k3];
                                let d = derivs.get(k);
                                if d.is_zero() {
                                    continue;
                                }
                                let order: u32 = k.iter().map(|&e| e as u32).sum();
                                let binom: i64 = (0..4).map(|j| binomial(b[j], k[j])).product();
                                let coef =
                                    minus_i_pow(order) * GaussianRational::int(binom * sign as i64);
                                let mut s = d.mul_ref(gb).scale(coef);
                                if order > 0 {
                                    s = s.mul_monomial(&Monomial {
                                        hbar: order as i8,
                                        ..Monomial::ONE
                                    });
                                }
                                let x = XMonomial(std::array::from_fn(|j| {
                                    ka.x.0[j]
                                        .checked_add(b[j] - k[j])
                                        .expect("exponent overflow")
                                }));
                                let key = Key { x, word };
                                match acc.get_mut(&key) {
                                    Some(e) => *e += &s,
                                    None => {
                                        acc.insert(key, s);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        NCElement {
            terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> NCElement {
        (0..n).fold(NCElement::one(), |acc, _| acc.mul(self))
    }

    /// `(a, b) = (ab - ba) / (i hbar)`.
    pub fn bracket(&self, other: &NCElement) -> NCElement {
        let comm = self.mul(other).combine(&other.mul(self), true);
        // 1/(i hbar) = -i hbar^-1
        comm.mul_scalar_right(&Scalar::term(
            Monomial {
                hbar: -1,
                ..Monomial::ONE
            },
            -GaussianRational::i(),
        ))
    }

    /// Symmetrised product `(ab + ba) / 2`.
    pub fn dot(&self, other: &NCElement) -> NCElement {
        self.mul(other)
            .combine(&other.mul(self), false)
            .scale(GaussianRational::ratio(1, 2))
    }

    /// Largest total position degree among the monomials.
    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.x.degree()).max().unwrap_or(0)
    }

    pub fn alpha_degree(&self) -> u32 {
        self.terms
            .values()
            .map(Scalar::alpha_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn alpha_truncate(&self, order: u32) -> NCElement {
        self.map_scalars(|s| s.alpha_truncate(order))
    }

    /// Part of exact alpha-degree `order`.
    pub fn alpha_homogeneous(&self, order: u32) -> NCElement {
        self.map_scalars(|s| s.alpha_homogeneous(order))
    }

    pub fn substitute_alpha(&self, values: &[Rational; 4]) -> NCElement {
        self.map_scalars(|s| s.substitute_alpha(values))
    }

    /// Projection onto monomials whose Clifford word has the given grade.
    pub fn grade_part(&self, grade: u32) -> NCElement {
        NCElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.word.grade() == grade)
                .map(|(k, s)| (*k, s.clone()))
                .collect(),
        }
    }

    fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> NCElement {
        NCElement {
            terms: self
                .terms
                .iter()
                .filter_map(|(k, s)| {
                    let t = f(s);
                    (!t.is_zero()).then_some((*k, t))
                })
                .collect(),
        }
    }

    /// True for elements built from positions with momentum-free,
    /// Clifford-trivial coefficients; these commute among themselves.
    pub fn in_position_subalgebra(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, s)| k.word == CliffordWord::IDENTITY && s.is_momentum_free())
    }

    /// `d/dx_nu`, which equals `d^nu = eta^{nu rho} d/dx^rho`, on the
    /// commutative position subalgebra.
    pub fn x_partial(&self, nu: usize) -> Result<NCElement> {
        if !self.in_position_subalgebra() {
            return Err(Error::NotInCommutativeSubalgebra(
                self.render_plain_inline(),
            ));
        }
        let mut out = NCElement::zero();
        for (k, s) in &self.terms {
            let e = k.x.0[nu];
            if e == 0 {
                continue;
            }
            let mut x = k.x;
            x.0[nu] -= 1;
            out.add_term(
                Key { x, word: k.word },
                &s.scale(GaussianRational::int(e as i64)),
            );
        }
        Ok(out)
    }

    /// `d_mu = d/dx^mu = eta_{mu nu} d/dx_nu`.
    pub fn x_partial_lower(&self, mu: usize) -> Result<NCElement> {
        Ok(self
            .x_partial(mu)?
            .scale(GaussianRational::int(metric(mu) as i64)))
    }

    /// Antilinear anti-automorphism fixing the momenta, `M`, `D`, `J` and
    /// the orientation `i g0 g1 g2 g3`.
    pub fn adjoint(&self) -> NCElement {
        adjoint::adjoint(self)
    }

    /// Inverse of `u = 1 + v` as the geometric series `sum_k (-v)^k`, kept
    /// up to alpha-degree `order`. Every monomial of `v` must carry alpha.
    pub fn geometric_inverse(&self, order: u32) -> Result<NCElement> {
        let v = self.clone() - NCElement::one();
        if v.terms
            .values()
            .any(|s| s.terms().iter().any(|(m, _)| m.alpha_degree() == 0))
        {
            return Err(Error::NotUnitalSeries(
                self.alpha_homogeneous(0).render_plain_inline(),
            ));
        }
        let minus_v = -v;
        let mut sum = NCElement::one();
        let mut power = NCElement::one();
        for _ in 0..order {
            power = power.mul(&minus_v).alpha_truncate(order);
            if power.is_zero() {
                break;
            }
            sum = sum + power.clone();
        }
        Ok(sum)
    }
}

impl From<Scalar> for NCElement {
    fn from(s: Scalar) -> Self {
        NCElement::from_scalar(s)
    }
}

impl Add<&NCElement> for &NCElement {
    type Output = NCElement;
    fn add(self, rhs: &NCElement) -> NCElement {
        self.combine(rhs, false)
    }
}

impl Sub<&NCElement> for &NCElement {
    type Output = NCElement;
    fn sub(self, rhs: &NCElement) -> NCElement {
        self.combine(rhs, true)
    }
}

impl Mul<&NCElement> for &NCElement {
    type Output = NCElement;
    fn mul(self, rhs: &NCElement) -> NCElement {
        NCElement::mul(self, rhs)
    }
}

impl Add for NCElement {
    type Output = NCElement;
    fn add(self, rhs: NCElement) -> NCElement {
        if self.terms.len() >= rhs.terms.len() {
            let mut out = self;
            for (k, s) in &rhs.terms {
                out.add_term(*k, s);
            }
            out
        } else {
            rhs + self
        }
    }
}

impl Sub for NCElement {
    type Output = NCElement;
    fn sub(self, rhs: NCElement) -> NCElement {
        let mut out = self;
        for (k, s) in &rhs.terms {
            out.add_term(*k, &-s);
        }
        out
    }
}

impl Neg for NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        self.scale(-GaussianRational::one())
    }
}

impl Neg for &NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        self.scale(-GaussianRational::one())
    }
}

impl std::iter::Sum for NCElement {
    fn sum<I: Iterator<Item = NCElement>>(iter: I) -> Self {
        iter.fold(NCElement::zero(), |a, b| a + b)
    }
}
