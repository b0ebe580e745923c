use std::collections::HashMap;

use super::{Expr, Shorthand};
use crate::error::{Error, Result};
use crate::frames;
use crate::ncalg::NCElement;
use crate::observables::Catalog;
use crate::scalars::{GaussianRational, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalConfig {
    /// Truncation order for `conj` calls without an inline order.
    pub order: Option<u32>,
}

/// Evaluates expressions against the global catalog, memoising `conj`.
#[derive(Debug, Default)]
pub struct Evaluator {
    config: EvalConfig,
    conj_cache: HashMap<(String, u32), NCElement>,
}

impl Evaluator {
    pub fn new(config: EvalConfig) -> Self {
        Evaluator {
            config,
            conj_cache: HashMap::new(),
        }
    }

    pub fn config(&self) -> EvalConfig {
        self.config
    }

    pub fn eval(&mut self, e: &Expr) -> Result<NCElement> {
        let cat = Catalog::global();
        Ok(match e {
            Expr::Obs(o, idx) => cat.get(*o, idx)?.clone(),
            Expr::Shorthand(h) => shorthand(*h),
            Expr::Num(r) => NCElement::constant(GaussianRational::real(*r)),
            Expr::I => NCElement::constant(GaussianRational::i()),
            Expr::Hbar => NCElement::from_scalar(Scalar::hbar()),
            Expr::Alpha(mu) => NCElement::from_scalar(Scalar::alpha(*mu)),
            Expr::Add(a, b) => self.eval(a)? + self.eval(b)?,
            Expr::Sub(a, b) => self.eval(a)? - self.eval(b)?,
            Expr::Mul(a, b) => self.eval(a)?.mul(&self.eval(b)?),
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Pow(a, n) => self.eval(a)?.pow(*n),
            Expr::Comm(a, b) => self.eval(a)?.bracket(&self.eval(b)?),
            Expr::Dot(a, b) => self.eval(a)?.dot(&self.eval(b)?),
            Expr::Adj(a) => self.eval(a)?.adjoint(),
            Expr::Conj(a, order, span) => {
                let n = order.or(self.config.order).ok_or_else(|| Error::Eval {
                    line: span.line,
                    column: span.column,
                    message: "conj needs an order, inline or configured".into(),
                })?;
                let key = (a.to_string(), n);
                if let Some(hit) = self.conj_cache.get(&key) {
                    return Ok(hit.clone());
                }
                let value = frames::conjugate(&self.eval(a)?, n);
                self.conj_cache.insert(key, value.clone());
                value
            }
        })
    }
}

fn shorthand(h: Shorthand) -> NCElement {
    let cat = Catalog::global();
    match h {
        Shorthand::P2 => cat.p_squared(),
        Shorthand::W2 => cat.w_squared(),
        Shorthand::X2Canonical => cat.x_squared(),
        Shorthand::X2Hermitian => cat.xh_squared(),
        Shorthand::Alpha2 => NCElement::from_scalar(Scalar::alpha_squared()),
        Shorthand::Minv2 => NCElement::from_scalar(Scalar::w_pow(-2)),
        Shorthand::AlphaX => frames::alpha_dot_x(),
        Shorthand::AlphaXh => frames::alpha_dot_xh(),
        Shorthand::AlphaC => frames::generator().clone(),
        Shorthand::LambdaInv => frames::conformal_factor_inv(),
    }
}
