//! Catalog of the operators of the model, realised in the normal-form algebra.
//!
//! Primitives are the momenta `p^mu`, canonical positions `x_mu` and Clifford
//! generators `gamma_mu`. Everything else is built from them:
//!
//! ```text
//! M      = P^mu gamma_mu                 |M| = w,  eps = M / w
//! gamma  = i gamma_0 gamma_1 gamma_2 gamma_3
//! s_{mn} = -(hbar^2/4) (gamma_m, gamma_n)
//! D      = P^mu . x_mu
//! J_{mn} = P_m . x_n - P_n . x_m + s_{mn}
//! C_m    = 2 D . x_m - P_m . x^2 + 2 x^r . s_{rm}
//! W_m    = -1/2 epsilon_{mnrs} J^{nr} P^s
//! S_m    = W_m M / M^2,     S_{mn} = epsilon_{mnrs} W^r P^s / M^2
//! X_m    = x_m + P^n s_{nm} / M^2,   V_m = P_m M / M^2
//! ```
//!
//! All builders take lower indices; [`raise`] applies the metric.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::clifford::{epsilon, metric};
use crate::error::{Error, Result};
use crate::ncalg::NCElement;
use crate::scalars::{GaussianRational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observable {
    /// Momentum `P_mu`.
    P,
    /// Canonical position `x_mu`.
    Xc,
    /// Clifford generator `gamma_mu`.
    Gamma,
    /// Orientation `gamma = i gamma_0 gamma_1 gamma_2 gamma_3`.
    Gamma5,
    M,
    /// `|M| = w`.
    Mabs,
    /// Mass sign `eps = M / |M|`.
    Eps,
    /// Canonical spin `s_{mu nu}`.
    SSpin,
    /// `s~_{mu nu} = (i/2) epsilon_{mu nu rho sigma} s^{rho sigma}`.
    SSpinDual,
    D,
    J,
    C,
    /// Pauli-Lubanski vector.
    W,
    /// Spin vector `S_mu = W_mu / M`.
    SVec,
    /// Spin tensor `S_{mu nu}`.
    S,
    /// `S~_{mu nu} = (i/2) epsilon_{mu nu rho sigma} S^{rho sigma}`.
    SDual,
    /// Hermitian position `X_mu`.
    Xh,
    /// Velocity `V_mu = P_mu / M`.
    V,
}

impl Observable {
    pub const ALL: [Observable; 18] = [
        Observable::P,
        Observable::Xc,
        Observable::Gamma,
        Observable::Gamma5,
        Observable::M,
        Observable::Mabs,
        Observable::Eps,
        Observable::SSpin,
        Observable::SSpinDual,
        Observable::D,
        Observable::J,
        Observable::C,
        Observable::W,
        Observable::SVec,
        Observable::S,
        Observable::SDual,
        Observable::Xh,
        Observable::V,
    ];

    /// Name used by the expression language.
    pub fn name(self) -> &'static str {
        match self {
            Observable::P => "P",
            Observable::Xc => "xc",
            Observable::Gamma => "gamma",
            Observable::Gamma5 => "gamma5",
            Observable::M => "M",
            Observable::Mabs => "Mabs",
            Observable::Eps => "eps",
            Observable::SSpin => "sspin",
            Observable::SSpinDual => "sdual",
            Observable::D => "D",
            Observable::J => "J",
            Observable::C => "C",
            Observable::W => "W",
            Observable::SVec => "Svec",
            Observable::S => "S",
            Observable::SDual => "Sdual",
            Observable::Xh => "Xh",
            Observable::V => "V",
        }
    }

    /// Number of (lower) indices the builder takes.
    pub fn arity(self) -> usize {
        match self {
            Observable::Gamma5
            | Observable::M
            | Observable::Mabs
            | Observable::Eps
            | Observable::D => 0,
            Observable::P
            | Observable::Xc
            | Observable::Gamma
            | Observable::C
            | Observable::W
            | Observable::SVec
            | Observable::Xh
            | Observable::V => 1,
            Observable::SSpin
            | Observable::SSpinDual
            | Observable::J
            | Observable::S
            | Observable::SDual => 2,
        }
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::UnknownObservable(s.to_string()))
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `eta^{mu mu}` applied to one index of a component.
pub fn raise(e: &NCElement, mu: usize) -> NCElement {
    e.scale(GaussianRational::int(metric(mu) as i64))
}

/// The metric is diagonal and self-inverse, so lowering is the same map.
pub fn lower(e: &NCElement, mu: usize) -> NCElement {
    raise(e, mu)
}

type Vector = [NCElement; 4];
type Tensor = [[NCElement; 4]; 4];

fn vector(f: impl FnMut(usize) -> NCElement) -> Vector {
    std::array::from_fn(f)
}

fn tensor(mut f: impl FnMut(usize, usize) -> NCElement) -> Tensor {
    std::array::from_fn(|m| std::array::from_fn(|n| f(m, n)))
}

fn c(n: i64) -> GaussianRational {
    GaussianRational::int(n)
}

/// Every catalog operator, built once.
#[derive(Clone, Debug)]
pub struct Catalog {
    p: Vector,
    x: Vector,
    gamma: Vector,
    gamma5: NCElement,
    mass: NCElement,
    mass_abs: NCElement,
    eps: NCElement,
    sspin: Tensor,
    sspin_dual: Tensor,
    dilatation: NCElement,
    j: Tensor,
    conformal: Vector,
    w: Vector,
    svec: Vector,
    s: Tensor,
    s_dual: Tensor,
    xh: Vector,
    v: Vector,
}

impl Catalog {
    /// Shared instance, built on first use.
    pub fn global() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::new)
    }

    pub fn new() -> Catalog {
        let winv2 = Scalar::w_pow(-2);
        let p = vector(|mu| NCElement::from_scalar(Scalar::p_lower(mu)));
        let p_up = vector(|mu| raise(&p[mu], mu));
        let x = vector(NCElement::x);
        let x_up = vector(|mu| raise(&x[mu], mu));
        let gamma = vector(NCElement::gamma);
        let gamma5 = NCElement::gamma5();
        let mass: NCElement = (0..4).map(|mu| p_up[mu].mul(&gamma[mu])).sum();
        let mass_abs = NCElement::from_scalar(Scalar::w());
        let eps = mass.mul_scalar_right(&Scalar::w_pow(-1));

        let quarter_hbar2 = Scalar::ratio(-1, 4) * Scalar::hbar_pow(2);
        let sspin = tensor(|m, n| gamma[m].bracket(&gamma[n]).mul_scalar_right(&quarter_hbar2));
        let sspin_up = tensor(|m, n| raise(&raise(&sspin[m][n], m), n));
        let sspin_dual = dual(&sspin_up);

        let dilatation: NCElement = (0..4).map(|mu| p_up[mu].dot(&x[mu])).sum();
        let j = tensor(|m, n| p[m].dot(&x[n]) - p[n].dot(&x[m]) + sspin[m][n].clone());
        let j_up = tensor(|m, n| raise(&raise(&j[m][n], m), n));
        let x2: NCElement = (0..4).map(|mu| x_up[mu].mul(&x[mu])).sum();
        let conformal = vector(|mu| {
            let spin_part: NCElement = (0..4).map(|rho| x_up[rho].dot(&sspin[rho][mu])).sum();
            dilatation.dot(&x[mu]).scale(c(2)) - p[mu].dot(&x2) + spin_part.scale(c(2))
        });

        let w = vector(|mu| {
            let mut acc = NCElement::zero();
            for nu in 0..4 {
                for rho in 0..4 {
                    for sigma in 0..4 {
                        let e = epsilon(mu, nu, rho, sigma);
                        if e != 0 {
                            let t = j_up[nu][rho].mul(&p_up[sigma]);
                            acc = acc + t.scale(GaussianRational::ratio(-(e as i64), 2));
                        }
                    }
                }
            }
            acc
        });
        let w_up = vector(|mu| raise(&w[mu], mu));
        let svec = vector(|mu| w[mu].mul(&mass).mul_scalar_right(&winv2));
        let s = tensor(|m, n| {
            let mut acc = NCElement::zero();
            for rho in 0..4 {
                for sigma in 0..4 {
                    let e = epsilon(m, n, rho, sigma);
                    if e != 0 {
                        acc = acc + w_up[rho].mul(&p_up[sigma]).scale(c(e as i64));
                    }
                }
            }
            acc.mul_scalar_right(&winv2)
        });
        let s_up = tensor(|m, n| raise(&raise(&s[m][n], m), n));
        let s_dual = dual(&s_up);

        let xh = vector(|mu| {
            let shift: NCElement = (0..4).map(|nu| p_up[nu].mul(&sspin[nu][mu])).sum();
            x[mu].clone() + shift.mul_scalar_right(&winv2)
        });
        let v = vector(|mu| p[mu].mul(&mass).mul_scalar_right(&winv2));

        Catalog {
            p,
            x,
            gamma,
            gamma5,
            mass,
            mass_abs,
            eps,
            sspin,
            sspin_dual,
            dilatation,
            j,
            conformal,
            w,
            svec,
            s,
            s_dual,
            xh,
            v,
        }
    }

    /// Component with all indices lowered.
    pub fn get(&self, obs: Observable, indices: &[usize]) -> Result<&NCElement> {
        if indices.len() != obs.arity() {
            return Err(Error::IndexArity {
                name: obs.name().to_string(),
                expected: obs.arity(),
                got: indices.len(),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&k| k > 3) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let i = |k: usize| indices[k];
        Ok(match obs {
            Observable::P => &self.p[i(0)],
            Observable::Xc => &self.x[i(0)],
            Observable::Gamma => &self.gamma[i(0)],
            Observable::Gamma5 => &self.gamma5,
            Observable::M => &self.mass,
            Observable::Mabs => &self.mass_abs,
            Observable::Eps => &self.eps,
            Observable::SSpin => &self.sspin[i(0)][i(1)],
            Observable::SSpinDual => &self.sspin_dual[i(0)][i(1)],
            Observable::D => &self.dilatation,
            Observable::J => &self.j[i(0)][i(1)],
            Observable::C => &self.conformal[i(0)],
            Observable::W => &self.w[i(0)],
            Observable::SVec => &self.svec[i(0)],
            Observable::S => &self.s[i(0)][i(1)],
            Observable::SDual => &self.s_dual[i(0)][i(1)],
            Observable::Xh => &self.xh[i(0)],
            Observable::V => &self.v[i(0)],
        })
    }

    /// Builder by expression-language name.
    pub fn build(&self, name: &str, indices: &[usize]) -> Result<NCElement> {
        let obs: Observable = name.parse()?;
        self.get(obs, indices).cloned()
    }

    /// Component with all indices raised.
    pub fn get_upper(&self, obs: Observable, indices: &[usize]) -> Result<NCElement> {
        let e = self.get(obs, indices)?;
        Ok(indices.iter().fold(e.clone(), |acc, &mu| raise(&acc, mu)))
    }

    pub fn p(&self, mu: usize) -> &NCElement {
        &self.p[mu]
    }

    pub fn x(&self, mu: usize) -> &NCElement {
        &self.x[mu]
    }

    pub fn gamma(&self, mu: usize) -> &NCElement {
        &self.gamma[mu]
    }

    pub fn gamma5(&self) -> &NCElement {
        &self.gamma5
    }

    pub fn mass(&self) -> &NCElement {
        &self.mass
    }

    pub fn mass_abs(&self) -> &NCElement {
        &self.mass_abs
    }

    pub fn eps(&self) -> &NCElement {
        &self.eps
    }

    pub fn sspin(&self, mu: usize, nu: usize) -> &NCElement {
        &self.sspin[mu][nu]
    }

    pub fn sspin_dual(&self, mu: usize, nu: usize) -> &NCElement {
        &self.sspin_dual[mu][nu]
    }

    pub fn dilatation(&self) -> &NCElement {
        &self.dilatation
    }

    pub fn j(&self, mu: usize, nu: usize) -> &NCElement {
        &self.j[mu][nu]
    }

    pub fn conformal(&self, mu: usize) -> &NCElement {
        &self.conformal[mu]
    }

    pub fn w(&self, mu: usize) -> &NCElement {
        &self.w[mu]
    }

    pub fn svec(&self, mu: usize) -> &NCElement {
        &self.svec[mu]
    }

    pub fn s(&self, mu: usize, nu: usize) -> &NCElement {
        &self.s[mu][nu]
    }

    pub fn s_dual(&self, mu: usize, nu: usize) -> &NCElement {
        &self.s_dual[mu][nu]
    }

    pub fn xh(&self, mu: usize) -> &NCElement {
        &self.xh[mu]
    }

    pub fn v(&self, mu: usize) -> &NCElement {
        &self.v[mu]
    }

    /// `P^mu P_mu`.
    pub fn p_squared(&self) -> NCElement {
        self.contract(&self.p, &self.p)
    }

    /// `x^mu x_mu`.
    pub fn x_squared(&self) -> NCElement {
        self.contract(&self.x, &self.x)
    }

    /// `X^mu X_mu`.
    pub fn xh_squared(&self) -> NCElement {
        self.contract(&self.xh, &self.xh)
    }

    /// `W^mu W_mu`.
    pub fn w_squared(&self) -> NCElement {
        self.contract(&self.w, &self.w)
    }

    /// `sum_mu eta^{mu mu} a_mu b_mu` with the left factor first.
    pub fn contract(&self, a: &[NCElement; 4], b: &[NCElement; 4]) -> NCElement {
        (0..4).map(|mu| raise(&a[mu], mu).mul(&b[mu])).sum()
    }

    /// `alpha^mu A_mu` for a lower-index vector observable.
    pub fn alpha_contract(&self, a: &[NCElement; 4]) -> NCElement {
        (0..4)
            .map(|mu| a[mu].mul_scalar_right(&Scalar::alpha(mu)))
            .sum()
    }

    pub fn positions(&self) -> &[NCElement; 4] {
        &self.x
    }

    pub fn hermitian_positions(&self) -> &[NCElement; 4] {
        &self.xh
    }

    pub fn momenta(&self) -> &[NCElement; 4] {
        &self.p
    }

    pub fn pauli_lubanski(&self) -> &[NCElement; 4] {
        &self.w
    }

    pub fn conformal_generators(&self) -> &[NCElement; 4] {
        &self.conformal
    }

    /// Residual of `S_mu = -(hbar/2) gamma (gamma_mu - V_mu)`.
    pub fn spin_vector_identity(&self, mu: usize) -> NCElement {
        let rhs = self
            .gamma5
            .mul(&(self.gamma[mu].clone() - self.v[mu].clone()))
            .mul_scalar_right(&(Scalar::ratio(-1, 2) * Scalar::hbar()));
        self.svec[mu].clone() - rhs
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::new()
    }
}

/// `(i/2) epsilon_{mu nu rho sigma} T^{rho sigma}` from upper components.
fn dual(t_up: &Tensor) -> Tensor {
    tensor(|m, n| {
        let mut acc = NCElement::zero();
        for rho in 0..4 {
            for sigma in 0..4 {
                let e = epsilon(m, n, rho, sigma);
                if e != 0 {
                    acc = acc + t_up[rho][sigma].scale(GaussianRational::ratio(e as i64, 1));
                }
            }
        }
        acc.scale(GaussianRational::new(
            0.into(),
            num_rational::Ratio::new(1, 2),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static Catalog {
        Catalog::global()
    }

    #[test]
    fn names_round_trip() {
        for o in Observable::ALL {
            assert_eq!(o.name().parse::<Observable>().unwrap(), o);
        }
        assert!(matches!(
            "Q".parse::<Observable>(),
            Err(Error::UnknownObservable(_))
        ));
    }

    #[test]
    fn build_checks_indices() {
        assert!(cat().build("P", &[0]).is_ok());
        assert!(matches!(
            cat().build("P", &[0, 1]),
            Err(Error::IndexArity { .. })
        ));
        assert!(matches!(
            cat().build("J", &[0, 4]),
            Err(Error::IndexOutOfRange(4))
        ));
        assert!(matches!(
            cat().build("Q", &[]),
            Err(Error::UnknownObservable(_))
        ));
    }

    #[test]
    fn builders_are_referentially_transparent() {
        let fresh = Catalog::new();
        assert_eq!(fresh.xh(2), cat().xh(2));
        assert_eq!(fresh.conformal(1), cat().conformal(1));
    }

    #[test]
    fn raising_momenta() {
        let up0 = cat().get_upper(Observable::P, &[0]).unwrap();
        assert_eq!(&up0, cat().p(0));
        let up1 = cat().get_upper(Observable::P, &[1]).unwrap();
        assert_eq!(up1, -cat().p(1));
        assert_eq!(lower(&raise(cat().p(2), 2), 2), *cat().p(2));
    }

    #[test]
    fn mass_squares_to_p_squared() {
        assert_eq!(cat().mass().mul(cat().mass()), cat().p_squared());
        assert_eq!(cat().p_squared(), NCElement::from_scalar(Scalar::w_pow(2)));
    }

    #[test]
    fn dilatation_scales_mass() {
        assert_eq!(cat().dilatation().bracket(cat().mass()), *cat().mass());
    }

    #[test]
    fn spin_magnitude() {
        let w2 = cat().w_squared().mul_scalar_right(&Scalar::w_pow(-2));
        let expected = NCElement::from_scalar(Scalar::ratio(-3, 4) * Scalar::hbar_pow(2));
        assert_eq!(w2, expected);
    }

    #[test]
    fn spin_vector_identity_vanishes() {
        for mu in 0..4 {
            assert!(cat().spin_vector_identity(mu).is_zero(), "mu = {mu}");
        }
    }
}
