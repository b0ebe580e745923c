//! Finite special conformal transformations to uniformly accelerated frames.
//!
//! A transformed observable is the truncated series
//!
//! ```text
//! conj(A, N) = sum_{n <= N} ad^n(A) / n!,     ad(A) = SIGMA (A, alpha^rho C_rho)
//! ```
//!
//! and the checks in this module compare such series with the closed forms
//! of the conformal factor, positions, vierbein, metric, Clifford tetrad and
//! momenta. Quantities of the accelerated frame are written in the
//! generators of the inertial one.
//!
//! Every factor in `lambda`, `x-bar` and the vierbein lies in the commuting
//! position subalgebra, so their relative ordering never matters.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::clifford::{eta, metric};
use crate::ncalg::{poly_eval_left, poly_eval_sym, NCElement, PolyForm};
use crate::observables::{raise, Catalog};
use crate::scalars::{GaussianRational, Rational, Scalar};

/// Sign of the adjoint action. Fixed once by [`anchor_sign`]: with it the
/// alpha-linear part of `conj(M, 1)` is `-2 M . (alpha^mu x_mu)`.
pub const SIGMA: i64 = 1;

/// `alpha^rho C_rho`.
pub fn generator() -> &'static NCElement {
    static G: OnceLock<NCElement> = OnceLock::new();
    G.get_or_init(|| Catalog::global().alpha_contract(Catalog::global().conformal_generators()))
}

/// `alpha^mu x_mu`.
pub fn alpha_dot_x() -> NCElement {
    Catalog::global().alpha_contract(Catalog::global().positions())
}

/// `alpha^mu X_mu`.
pub fn alpha_dot_xh() -> NCElement {
    Catalog::global().alpha_contract(Catalog::global().hermitian_positions())
}

fn alpha_squared() -> NCElement {
    NCElement::from_scalar(Scalar::alpha_squared())
}

fn ad(a: &NCElement, g: &NCElement, sigma: i64) -> NCElement {
    a.bracket(g).scale(GaussianRational::int(sigma))
}

/// Adjoint-action series with an explicit generator and sign.
pub fn conjugate_with(a: &NCElement, order: u32, g: &NCElement, sigma: i64) -> NCElement {
    let mut sum = a.alpha_truncate(order);
    let mut term = sum.clone();
    for n in 1..=order {
        term = ad(&term, g, sigma)
            .alpha_truncate(order)
            .scale(GaussianRational::ratio(1, n as i64));
        if term.is_zero() {
            break;
        }
        sum = sum + term.clone();
    }
    sum
}

/// `conj(A, N)` with the frozen sign [`SIGMA`].
pub fn conjugate(a: &NCElement, order: u32) -> NCElement {
    conjugate_with(a, order, generator(), SIGMA)
}

/// Inverse transformation, i.e. `alpha -> -alpha`.
pub fn conjugate_inverse(a: &NCElement, order: u32) -> NCElement {
    conjugate_with(a, order, &-generator(), SIGMA)
}

/// Number of nonvanishing terms `ad^n(A)`, `n >= 1`, before the series stops,
/// searched up to `limit`. `None` means it did not stop.
pub fn termination_depth(a: &NCElement, limit: u32) -> Option<u32> {
    let mut term = a.clone();
    for n in 0..=limit {
        term = ad(&term, generator(), SIGMA);
        if term.is_zero() {
            return Some(n);
        }
    }
    None
}

/// The sign for which the alpha-linear part of `conj(M, 1)` equals
/// `-2 M . (alpha^mu x_mu)`.
pub fn anchor_sign() -> Option<i64> {
    let cat = Catalog::global();
    let target = cat
        .mass()
        .dot(&alpha_dot_x())
        .scale(GaussianRational::int(-2));
    let linear = cat.mass().bracket(generator());
    if linear == target {
        Some(1)
    } else if -linear == target {
        Some(-1)
    } else {
        None
    }
}

/// `1/lambda = 1 - 2 alpha^mu x_mu + alpha^2 x^2`.
pub fn conformal_factor_inv() -> NCElement {
    NCElement::one() - alpha_dot_x().scale(GaussianRational::int(2))
        + Catalog::global().x_squared().mul(&alpha_squared())
}

/// `lambda` up to alpha-degree `order`.
pub fn conformal_factor(order: u32) -> NCElement {
    conformal_factor_inv()
        .geometric_inverse(order)
        .expect("1/lambda is unital")
}

/// `x^mu - x^2 alpha^mu` with a lower index.
fn position_target(mu: usize) -> NCElement {
    let cat = Catalog::global();
    cat.x(mu).clone() - cat.x_squared().mul_scalar_right(&Scalar::alpha_lower(mu))
}

/// Residual set of one frame law.
#[derive(Clone, Debug)]
pub struct FrameShift {
    pub name: String,
    pub order: u32,
    pub components: Vec<ShiftComponent>,
    pub coefficients: Vec<(String, GaussianRational)>,
}

#[derive(Clone, Debug)]
pub struct ShiftComponent {
    pub label: String,
    pub series: NCElement,
    pub reference: NCElement,
    pub residual: NCElement,
}

impl FrameShift {
    fn new(name: &str, order: u32) -> Self {
        FrameShift {
            name: name.to_string(),
            order,
            components: Vec::new(),
            coefficients: Vec::new(),
        }
    }

    fn push(&mut self, label: String, series: NCElement, reference: NCElement) {
        let residual = &series - &reference;
        self.components.push(ShiftComponent {
            label,
            series,
            reference,
            residual,
        });
    }

    /// Every residual vanishes through alpha-degree `order`.
    pub fn passed(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.residual.alpha_truncate(self.order).is_zero())
    }

    /// Residual of the first failing component, truncated, or zero.
    pub fn worst_residual(&self) -> NCElement {
        self.components
            .iter()
            .map(|c| c.residual.alpha_truncate(self.order))
            .find(|r| !r.is_zero())
            .unwrap_or_else(NCElement::zero)
    }

    pub fn coefficient(&self, name: &str) -> Option<GaussianRational> {
        self.coefficients
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| *c)
    }
}

/// Transformed primitives and derived frame data for one truncation order.
#[derive(Debug)]
pub struct FrameData {
    pub order: u32,
    pub lambda: NCElement,
    pub lambda_inv: NCElement,
    /// `x-bar_mu` from the series.
    pub x_bar: [NCElement; 4],
    pub p_bar: [NCElement; 4],
    pub gamma_bar: [NCElement; 4],
    pub m_bar: NCElement,
    /// `e[mu][nu] = e_mu^nu`.
    pub vierbein: [[NCElement; 4]; 4],
}

impl FrameData {
    pub fn new(order: u32) -> FrameData {
        let cat = Catalog::global();
        let lambda_inv = conformal_factor_inv();
        let lambda = conformal_factor(order);
        let x_bar = std::array::from_fn(|mu| conjugate(cat.x(mu), order));
        let p_bar = std::array::from_fn(|mu| conjugate(cat.p(mu), order));
        let gamma_bar = std::array::from_fn(|mu| conjugate(cat.gamma(mu), order));
        let m_bar = conjugate(cat.mass(), order);
        let inv2 = lambda_inv.mul(&lambda_inv);
        let vierbein = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                let d: NCElement = x_bar[mu]
                    .x_partial(nu)
                    .expect("x-bar lies in the position subalgebra");
                inv2.mul(&d).alpha_truncate(order)
            })
        });
        FrameData {
            order,
            lambda,
            lambda_inv,
            x_bar,
            p_bar,
            gamma_bar,
            m_bar,
            vierbein,
        }
    }

    /// Shared instance per order.
    pub fn cached(order: u32) -> Arc<FrameData> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<OnceLock<Arc<FrameData>>>>>> =
            OnceLock::new();
        let slot = {
            let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
            map.entry(order).or_default().clone()
        };
        slot.get_or_init(|| Arc::new(FrameData::new(order))).clone()
    }

    pub fn e(&self, mu: usize, nu: usize) -> &NCElement {
        &self.vierbein[mu][nu]
    }
}

/// `e_mu^nu` up to alpha-degree `order`.
pub fn vierbein(order: u32) -> [[NCElement; 4]; 4] {
    FrameData::cached(order).vierbein.clone()
}

/// `(1/lambda) x-bar^mu = x^mu - x^2 alpha^mu`.
pub fn check_position_law(order: u32) -> FrameShift {
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("position law", order);
    for mu in 0..4 {
        let series = fd.lambda_inv.mul(&fd.x_bar[mu]).alpha_truncate(order);
        out.push(format!("x[{mu}]"), series, position_target(mu));
    }
    out
}

/// `lambda^-1 conj(M) = M` and `conj(M) lambda^-1 = M`; the series stops
/// after `ad^2`.
pub fn check_mass_law(order: u32) -> FrameShift {
    let cat = Catalog::global();
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("mass law", order);
    let closed = cat.mass().dot(&fd.lambda_inv);
    out.push(
        "M-bar".into(),
        fd.m_bar.clone(),
        closed.alpha_truncate(order),
    );
    out.push(
        "M-bar lambda".into(),
        fd.m_bar.dot(&fd.lambda).alpha_truncate(order),
        cat.mass().clone(),
    );
    out
}

/// Metric `d_mu x-bar^rho eta_{rho sigma} d_nu x-bar^sigma = lambda^2 eta`
/// together with the alpha-degree bound of the vierbein.
pub fn metric_check(order: u32) -> FrameShift {
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("metric", order);
    let lambda2 = fd.lambda.mul(&fd.lambda).alpha_truncate(order);
    let jac: Vec<Vec<NCElement>> = (0..4)
        .map(|mu| {
            (0..4)
                .map(|rho| {
                    raise(&fd.x_bar[rho], rho)
                        .x_partial_lower(mu)
                        .expect("position subalgebra")
                })
                .collect()
        })
        .collect();
    for mu in 0..4 {
        for nu in mu..4 {
            let g: NCElement = (0..4)
                .map(|rho| raise(&jac[mu][rho].mul(&jac[nu][rho]), rho))
                .sum::<NCElement>()
                .alpha_truncate(order);
            let target = lambda2.scale(GaussianRational::int(eta(mu, nu) as i64));
            out.push(format!("g[{mu},{nu}]"), g, target);
        }
    }
    for mu in 0..4 {
        for nu in 0..4 {
            let e = fd.e(mu, nu);
            let high = e.clone() - e.alpha_truncate(2);
            out.push(
                format!("e[{mu},{nu}] above degree 2"),
                high,
                NCElement::zero(),
            );
        }
    }
    out
}

/// `gamma-bar_mu = lambda e_mu^nu gamma_nu` and preservation of the Clifford
/// relations by the transported tetrad.
pub fn check_tetrad_law(order: u32) -> FrameShift {
    let cat = Catalog::global();
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("tetrad law", order);
    let tetrad: Vec<NCElement> = (0..4)
        .map(|mu| {
            (0..4)
                .map(|nu| fd.lambda.mul(fd.e(mu, nu)).mul(cat.gamma(nu)))
                .sum::<NCElement>()
                .alpha_truncate(order)
        })
        .collect();
    for mu in 0..4 {
        out.push(
            format!("gamma[{mu}]"),
            fd.gamma_bar[mu].clone(),
            tetrad[mu].clone(),
        );
    }
    for mu in 0..4 {
        for nu in mu..4 {
            out.push(
                format!("clifford[{mu},{nu}]"),
                tetrad[mu].dot(&tetrad[nu]).alpha_truncate(order),
                NCElement::int(eta(mu, nu) as i64),
            );
        }
    }
    out
}

/// `e_mu^nu . P_nu + 1/2 (d^rho e_mu^nu) s_{nu rho}`, with the orbital and
/// spin parts returned separately.
fn momentum_closed_form(fd: &FrameData, mu: usize) -> (NCElement, NCElement) {
    let cat = Catalog::global();
    let half = GaussianRational::ratio(1, 2);
    let mut orbital = NCElement::zero();
    let mut spin = NCElement::zero();
    for nu in 0..4 {
        let e = fd.e(mu, nu);
        orbital = orbital + e.dot(cat.p(nu));
        for rho in 0..4 {
            let de = e.x_partial(rho).expect("position subalgebra");
            spin = spin + de.mul(cat.sspin(nu, rho)).scale(half);
        }
    }
    (orbital, spin)
}

/// `P-bar_mu = e_mu^nu . P_nu + 1/2 (d^rho e_mu^nu) s_{nu rho}`.
pub fn check_momentum_law(order: u32) -> FrameShift {
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("momentum law", order);
    for mu in 0..4 {
        let (orbital, spin) = momentum_closed_form(&fd, mu);
        out.push(
            format!("P[{mu}]"),
            fd.p_bar[mu].clone(),
            (orbital + spin).alpha_truncate(order),
        );
    }
    for mu in 0..4 {
        let (_, spin) = momentum_closed_form(&fd, mu);
        let series_spin = fd.p_bar[mu].alpha_homogeneous(1).grade_part(2);
        out.push(
            format!("spin part of P[{mu}] at degree 1"),
            series_spin,
            spin.alpha_homogeneous(1),
        );
    }
    out
}

/// `(conj(P_mu), conj(x_nu)) = -eta_{mu nu}`.
pub fn check_canonical_commutators(order: u32) -> FrameShift {
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("canonical commutators", order);
    for mu in 0..4 {
        for nu in 0..4 {
            out.push(
                format!("(P[{mu}], x[{nu}])"),
                fd.p_bar[mu].bracket(&fd.x_bar[nu]).alpha_truncate(order),
                NCElement::int(-(eta(mu, nu) as i64)),
            );
        }
    }
    out
}

/// Conjugating with `alpha` then `-alpha` gives back `M`, `x_mu`, `P_mu` and
/// `gamma_mu`.
pub fn reciprocity_check(order: u32) -> FrameShift {
    let cat = Catalog::global();
    let fd = FrameData::cached(order);
    let mut out = FrameShift::new("reciprocity", order);
    let mut push = |label: String, bar: &NCElement, orig: &NCElement| {
        out.push(label, conjugate_inverse(bar, order), orig.clone());
    };
    push("M".into(), &fd.m_bar, cat.mass());
    for mu in 0..4 {
        push(format!("x[{mu}]"), &fd.x_bar[mu], cat.x(mu));
        push(format!("P[{mu}]"), &fd.p_bar[mu], cat.p(mu));
        push(format!("gamma[{mu}]"), &fd.gamma_bar[mu], cat.gamma(mu));
    }
    out
}

/// `conj(AB) = conj(A) conj(B)` for products of catalog observables.
pub fn check_homomorphism(order: u32) -> FrameShift {
    let cat = Catalog::global();
    let mut out = FrameShift::new("homomorphism", order);
    let pairs = [
        ("P[1] x[2]", cat.p(1), cat.x(2)),
        ("x[0] P[0]", cat.x(0), cat.p(0)),
        ("gamma[0] x[3]", cat.gamma(0), cat.x(3)),
        ("M gamma[2]", cat.mass(), cat.gamma(2)),
        ("D x[1]", cat.dilatation(), cat.x(1)),
    ];
    for (label, a, b) in pairs {
        out.push(
            label.into(),
            conjugate(&a.mul(b), order),
            conjugate(a, order)
                .mul(&conjugate(b, order))
                .alpha_truncate(order),
        );
    }
    out
}

/// Writes `residual = c * basis` for a single constant `c`, if possible.
pub fn extract_ratio(residual: &NCElement, basis: &NCElement) -> Option<GaussianRational> {
    if basis.is_zero() {
        return None;
    }
    let mut ratio: Option<GaussianRational> = None;
    for (k, b) in basis.terms() {
        let c = residual.coefficient(k).ratio_to(b)?;
        match ratio {
            None => ratio = Some(c),
            Some(r) if r == c => {}
            Some(_) => return None,
        }
    }
    let c = ratio?;
    (residual.clone() - basis.scale(c)).is_zero().then_some(c)
}

/// Closed form of the vierbein as a polynomial in the four position slots,
/// written with the index contracted against `P_nu` (the upper `nu`) in the
/// same place in every term:
///
/// ```text
/// e_mu^nu = delta (1 - 2 alpha.x + alpha^2 x^2) + 2 (alpha^nu x_mu - x^nu alpha_mu)
///           - 2 alpha^nu alpha_mu x^2 - 2 alpha^2 x^nu x_mu + 4 (alpha.x) x^nu alpha_mu
/// ```
pub fn vierbein_template(mu: usize, nu: usize) -> PolyForm {
    let a = Scalar::alpha;
    let al = Scalar::alpha_lower;
    let a2 = Scalar::alpha_squared();
    let g = |rho: usize| Scalar::int(metric(rho) as i64);
    let mut f = PolyForm::new();
    if mu == nu {
        f.push(Scalar::one(), vec![]);
        for rho in 0..4 {
            f.push(a(rho).scale(GaussianRational::int(-2)), vec![rho]);
            f.push(a2.clone() * g(rho), vec![rho, rho]);
        }
    }
    f.push(a(nu).scale(GaussianRational::int(2)), vec![mu]);
    f.push(al(mu) * g(nu).scale(GaussianRational::int(-2)), vec![nu]);
    for rho in 0..4 {
        f.push(
            a(nu) * al(mu) * g(rho).scale(GaussianRational::int(-2)),
            vec![rho, rho],
        );
        f.push(
            a(rho) * al(mu) * g(nu).scale(GaussianRational::int(4)),
            vec![rho, nu],
        );
    }
    f.push(a2 * g(nu).scale(GaussianRational::int(-2)), vec![nu, mu]);
    f
}

/// Mass and momentum laws in the hermitian variables `X`, `S`, with the
/// `hbar^2` corrections extracted from the exact series:
///
/// ```text
/// M-bar   = M . (1 - 2 alpha^mu X_mu + alpha^2 (X^2 + c_M hbar^2 / P^2))
/// P-bar_mu = E_mu^nu . P_nu + 1/2 d^rho E_mu^nu S_{nu rho}
///            + c_P hbar^2 d_nu d^rho E_mu^nu P_rho / P^2
/// ```
///
/// with `E_mu^nu = e_mu^nu(X)`. Expected `c_M = 3/4`, `c_P = 3/32`.
pub fn check_hermitian_forms() -> FrameShift {
    let cat = Catalog::global();
    let fd = FrameData::cached(2);
    let mut out = FrameShift::new("hermitian forms", 2);
    let hbar2_winv2 = Scalar::hbar_pow(2) * Scalar::w_pow(-2);

    let xh_form = NCElement::one() - alpha_dot_xh().scale(GaussianRational::int(2))
        + cat.xh_squared().mul(&alpha_squared());
    let mass_base = cat.mass().dot(&xh_form);
    let mass_basis = cat
        .mass()
        .mul(&alpha_squared())
        .mul_scalar_right(&hbar2_winv2);
    let mass_rest = fd.m_bar.clone() - mass_base.clone();
    let c_m = extract_ratio(&mass_rest, &mass_basis);
    let c_m_val = c_m.unwrap_or_else(GaussianRational::zero);
    out.push(
        "M-bar".into(),
        fd.m_bar.clone(),
        mass_base + mass_basis.scale(c_m_val),
    );
    out.coefficients
        .push(("mass hbar^2 coefficient".into(), c_m_val));

    let forms: Vec<Vec<PolyForm>> = (0..4)
        .map(|mu| (0..4).map(|nu| vierbein_template(mu, nu)).collect())
        .collect();
    let xs = cat.positions();
    for mu in 0..4 {
        for nu in 0..4 {
            out.push(
                format!("template e[{mu},{nu}]"),
                fd.e(mu, nu).clone(),
                poly_eval_sym(&forms[mu][nu], xs),
            );
        }
    }
    let xh = cat.hermitian_positions();
    let mut c_p_all: Option<GaussianRational> = None;
    let mut consistent = true;
    let mut momentum = Vec::new();
    for mu in 0..4 {
        let mut orbital = NCElement::zero();
        let mut orbital_left = NCElement::zero();
        let mut spin = NCElement::zero();
        let mut second = NCElement::zero();
        for nu in 0..4 {
            let f = &forms[mu][nu];
            orbital = orbital + poly_eval_sym(f, xh).dot(cat.p(nu));
            orbital_left = orbital_left + poly_eval_left(f, xh).dot(cat.p(nu));
            for rho in 0..4 {
                let d_rho = f.derivative(rho);
                spin = spin
                    + poly_eval_sym(&d_rho, xh)
                        .dot(cat.s(nu, rho))
                        .scale(GaussianRational::ratio(1, 2));
                let dd = d_rho
                    .derivative(nu)
                    .scale(GaussianRational::int(metric(nu) as i64));
                second = second
                    + poly_eval_sym(&dd, xh)
                        .mul(cat.p(rho))
                        .mul_scalar_right(&hbar2_winv2);
            }
        }
        let rest = fd.p_bar[mu].clone() - orbital.clone() - spin.clone();
        let c = extract_ratio(&rest, &second);
        match (c, c_p_all) {
            (Some(c), None) => c_p_all = Some(c),
            (Some(c), Some(prev)) if c == prev => {}
            _ => consistent = false,
        }
        out.push(
            format!("ordering of E[{mu}] . P"),
            orbital_left,
            orbital.clone(),
        );
        momentum.push((mu, orbital + spin, second));
    }
    let c_p_val = if consistent {
        c_p_all.unwrap_or_else(GaussianRational::zero)
    } else {
        GaussianRational::zero()
    };
    for (mu, base, second) in momentum {
        out.push(
            format!("P-bar[{mu}]"),
            fd.p_bar[mu].clone(),
            base + second.scale(c_p_val),
        );
    }
    out.coefficients
        .push(("momentum hbar^2 coefficient".into(), c_p_val));
    out
}

/// Substitutes numbers for `alpha`.
pub fn substitute(e: &NCElement, alpha: &[Rational; 4]) -> NCElement {
    e.substitute_alpha(alpha)
}

/// Runs every frame law at `order` (hermitian forms are exact and always
/// use the terminating series).
pub fn all_checks(order: u32) -> Vec<FrameShift> {
    vec![
        check_mass_law(order.max(2)),
        check_position_law(order),
        metric_check(order),
        check_tetrad_law(order),
        check_momentum_law(order),
        check_canonical_commutators(order),
        reciprocity_check(order),
        check_homomorphism(order),
        check_hermitian_forms(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn zeros() -> [Rational; 4] {
        [Ratio::from_integer(0); 4]
    }

    #[test]
    fn order_zero_is_identity() {
        let cat = Catalog::global();
        for a in [cat.mass(), cat.x(2), cat.j(0, 1)] {
            assert_eq!(&conjugate(a, 0), a);
        }
    }

    #[test]
    fn sign_matches_anchor() {
        assert_eq!(anchor_sign(), Some(SIGMA));
    }

    #[test]
    fn mass_series_terminates() {
        let cat = Catalog::global();
        assert_eq!(termination_depth(cat.mass(), 5), Some(2));
        let closed = cat.mass().dot(&conformal_factor_inv());
        assert_eq!(conjugate(cat.mass(), 2), closed);
        assert_eq!(conjugate(cat.mass(), 4), closed);
    }

    #[test]
    fn conformal_factor_series() {
        let inv = conformal_factor_inv();
        assert_eq!(inv.substitute_alpha(&zeros()), NCElement::one());
        assert_eq!(inv.alpha_degree(), 2);
        let first = NCElement::one() + alpha_dot_x().scale(GaussianRational::int(2));
        assert_eq!(conformal_factor(1), first);
        for n in 0..4 {
            let prod = conformal_factor(n).mul(&inv).alpha_truncate(n);
            assert_eq!(prod, NCElement::one());
        }
    }

    #[test]
    fn first_order_position_shift() {
        // alpha-linear part of lambda (x_mu - x^2 alpha_mu), with lambda
        // expanded as a geometric series
        let lambda = conformal_factor(1);
        for mu in 0..4 {
            let closed = lambda.mul(&position_target(mu)).alpha_homogeneous(1);
            let series = conjugate(Catalog::global().x(mu), 1).alpha_homogeneous(1);
            assert_eq!(series, closed, "mu = {mu}");
        }
    }

    #[test]
    fn low_order_laws() {
        assert!(check_position_law(1).passed());
        assert!(check_mass_law(2).passed());
        assert!(check_canonical_commutators(1).passed());
    }

    #[test]
    fn vierbein_at_zero_alpha() {
        let e = vierbein(2);
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = NCElement::int((mu == nu) as i64);
                assert_eq!(e[mu][nu].substitute_alpha(&zeros()), expected);
            }
        }
    }

    #[test]
    fn template_matches_series_vierbein() {
        let fd = FrameData::cached(2);
        for mu in 0..4 {
            for nu in 0..4 {
                let t = poly_eval_sym(&vierbein_template(mu, nu), Catalog::global().positions());
                assert_eq!(&t, fd.e(mu, nu));
            }
        }
    }

    #[test]
    fn extract_ratio_requires_proportionality() {
        let b = NCElement::x(0) + NCElement::gamma(1);
        assert_eq!(
            extract_ratio(&b.scale(GaussianRational::ratio(3, 4)), &b),
            Some(GaussianRational::ratio(3, 4))
        );
        assert_eq!(
            extract_ratio(&(NCElement::x(0) - NCElement::gamma(1)), &b),
            None
        );
        assert_eq!(extract_ratio(&b, &NCElement::zero()), None);
    }

    #[test]
    fn position_law_at_zero_alpha() {
        let fd = FrameData::cached(1);
        for mu in 0..4 {
            assert_eq!(
                &fd.x_bar[mu].substitute_alpha(&zeros()),
                Catalog::global().x(mu)
            );
        }
    }
}
