//! Substitution of noncommuting arguments into commutative polynomial forms.

use super::NCElement;
use crate::clifford::CliffordWord;
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Scalar};

/// Polynomial in four slots, each term kept in the order it was written.
///
/// The written order only matters for [`poly_eval_left`]; as a commutative
/// polynomial the form is the sum of `coefficient * slot_a * slot_b * ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyForm {
    terms: Vec<(Scalar, Vec<usize>)>,
}

impl PolyForm {
    pub fn new() -> Self {
        PolyForm { terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut f = PolyForm::new();
        f.push(c, vec![]);
        f
    }

    pub fn push(&mut self, coefficient: Scalar, slots: Vec<usize>) {
        assert!(slots.iter().all(|&s| s < 4), "slot index out of range");
        if !coefficient.is_zero() {
            self.terms.push((coefficient, slots));
        }
    }

    pub fn terms(&self) -> &[(Scalar, Vec<usize>)] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, s)| s.len()).max().unwrap_or(0)
    }

    /// Reads a form off an element of the position subalgebra, slots in
    /// ascending index order.
    pub fn from_position_element(e: &NCElement) -> Result<PolyForm> {
        if !e.in_position_subalgebra() {
            return Err(Error::NotInCommutativeSubalgebra(e.render_plain_inline()));
        }
        let mut f = PolyForm::new();
        for (k, s) in e.terms() {
            debug_assert_eq!(k.word, CliffordWord::IDENTITY);
            let slots = (0..4)
                .flat_map(|mu| std::iter::repeat_n(mu, k.x.0[mu] as usize))
                .collect();
            f.push(s.clone(), slots);
        }
        Ok(f)
    }

    /// Commutative derivative with respect to one slot; each occurrence is
    /// removed in turn and the remaining factors keep their written order.
    pub fn derivative(&self, slot: usize) -> PolyForm {
        let mut out = PolyForm::new();
        for (c, slots) in &self.terms {
            for (pos, &s) in slots.iter().enumerate() {
                if s == slot {
                    let mut rest = slots.clone();
                    rest.remove(pos);
                    out.push(c.clone(), rest);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: GaussianRational) -> PolyForm {
        let mut out = PolyForm::new();
        for (s, slots) in &self.terms {
            out.push(s.scale(c), slots.clone());
        }
        out
    }

    pub fn add(&self, other: &PolyForm) -> PolyForm {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn product(args: &[NCElement; 4], slots: &[usize]) -> NCElement {
    slots
        .iter()
        .fold(NCElement::one(), |acc, &s| acc.mul(&args[s]))
}

/// Fully symmetrised substitution: each term of degree k becomes the
/// average of the k! ordered products of its arguments, times its
/// coefficient on the right.
pub fn poly_eval_sym(form: &PolyForm, args: &[NCElement; 4]) -> NCElement {
    let mut out = NCElement::zero();
    for (c, slots) in &form.terms {
        let perms = permutations(slots.len());
        let count = perms.len() as i64;
        let sum: NCElement = perms
            .into_iter()
            .map(|perm| {
                let ordered: Vec<usize> = perm.iter().map(|&k| slots[k]).collect();
                product(args, &ordered)
            })
            .sum();
        out = out
            + sum
                .scale(GaussianRational::ratio(1, count))
                .mul_scalar_right(c);
    }
    out
}

/// Substitution in the written order of each term.
pub fn poly_eval_left(form: &PolyForm, args: &[NCElement; 4]) -> NCElement {
    let mut out = NCElement::zero();
    for (c, slots) in &form.terms {
        out = out + product(args, slots).mul_scalar_right(c);
    }
    out
}
