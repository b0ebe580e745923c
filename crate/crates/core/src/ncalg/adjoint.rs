//! The involution `a -> a^dagger`.
//!
//! It is the antilinear anti-automorphism that fixes `p^mu`, `w`, `hbar`,
//! `alpha^mu`, the mass `M = p^mu g_mu`, the dilatation and Lorentz
//! generators and the orientation `i g0 g1 g2 g3`. Those requirements force
//!
//! ```text
//! g_mu^dagger = eps g_mu eps,          eps = M / w
//! x_mu^dagger = x_mu + 2 i gamma W_mu / M^2
//! ```
//!
//! where `W_mu = -1/2 epsilon_{mu nu rho sigma} s^{nu rho} p^sigma` is the
//! Pauli-Lubanski vector of the realisation (its orbital part vanishes).

use std::sync::OnceLock;

use super::NCElement;
use crate::clifford::{epsilon, metric, CliffordWord};
use crate::scalars::{GaussianRational, Scalar};

struct Images {
    words: Vec<NCElement>,
    x: [NCElement; 4],
}

fn mass() -> NCElement {
    (0..4)
        .map(|mu| NCElement::gamma(mu).mul_scalar_right(&Scalar::p(mu)))
        .sum()
}

fn spin_upper(nu: usize, rho: usize) -> NCElement {
    // s_{nu rho} = -(hbar^2/4) (g_nu, g_rho)
    let s = NCElement::gamma(nu)
        .bracket(&NCElement::gamma(rho))
        .mul_scalar_right(&(Scalar::ratio(-1, 4) * Scalar::hbar_pow(2)));
    s.scale(GaussianRational::int((metric(nu) * metric(rho)) as i64))
}

fn pauli_lubanski(mu: usize) -> NCElement {
    let mut w = NCElement::zero();
    for nu in 0..4 {
        for rho in 0..4 {
            for sigma in 0..4 {
                let e = epsilon(mu, nu, rho, sigma);
                if e == 0 {
                    continue;
                }
                let term = spin_upper(nu, rho).mul_scalar_right(&Scalar::p(sigma));
                w = w + term.scale(GaussianRational::ratio(-(e as i64), 2));
            }
        }
    }
    w
}

fn images() -> &'static Images {
    static IMAGES: OnceLock<Images> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let m = mass();
        let winv2 = Scalar::w_pow(-2);
        let words = CliffordWord::all()
            .map(|w| {
                m.mul(&NCElement::word(w))
                    .mul(&m)
                    .mul_scalar_right(&winv2)
                    .scale(GaussianRational::int(w.reversal_sign() as i64))
            })
            .collect();
        let g5 = NCElement::gamma5();
        let x = std::array::from_fn(|mu| {
            let shift = g5
                .mul(&pauli_lubanski(mu))
                .mul_scalar_right(&winv2)
                .scale(GaussianRational::new(0.into(), 2.into()));
            NCElement::x(mu) + shift
        });
        Images { words, x }
    })
}

/// Image of the Clifford word under the involution.
pub fn word_adjoint(w: CliffordWord) -> &'static NCElement {
    &images().words[w.mask() as usize]
}

/// Image of the canonical position `x_mu`.
pub fn position_adjoint(mu: usize) -> &'static NCElement {
    &images().x[mu]
}

pub(super) fn adjoint(a: &NCElement) -> NCElement {
    let imgs = images();
    let mut out = NCElement::zero();
    for (key, s) in a.terms() {
        // (x^a w f)^dagger = conj(f) w^dagger (x_3^dagger)^a3 ... (x_0^dagger)^a0
        let mut right = imgs.words[key.word.mask() as usize].clone();
        for mu in (0..4).rev() {
            for _ in 0..key.x.0[mu] {
                right = right.mul(&imgs.x[mu]);
            }
        }
        out = out + NCElement::from_scalar(s.conj_i()).mul(&right);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antilinear_on_constants() {
        let i = NCElement::from_scalar(Scalar::i());
        assert_eq!(i.adjoint(), -i);
    }

    #[test]
    fn fixes_mass_and_orientation() {
        assert_eq!(mass().adjoint(), mass());
        let g5 = NCElement::gamma5();
        assert_eq!(g5.adjoint(), g5);
    }

    #[test]
    fn involutive_on_generators() {
        for w in CliffordWord::all() {
            let e = NCElement::word(w);
            assert_eq!(e.adjoint().adjoint(), e);
        }
        for mu in 0..4 {
            let x = NCElement::x(mu);
            assert_eq!(x.adjoint().adjoint(), x);
        }
    }
}
