//! Independent reconstruction of the involution on the canonical positions.
//!
//! Given the Clifford images `g_nu -> eps g_nu eps`, the image of `x_mu` is
//! sought as `x_mu + D_mu` with `D_mu` position-free in a finite ansatz. It
//! must commute with every image `g_nu^dagger` and make the dilatation and
//! Lorentz generators self-adjoint. All conditions are linear in the ansatz
//! coefficients and are solved exactly over the Gaussian rationals.

use std::collections::BTreeMap;

use electroloc::clifford::CliffordWord;
use electroloc::ncalg::{word_adjoint, Key};
use electroloc::scalars::{GaussianRational, Monomial, Scalar};
use electroloc::{Catalog, NCElement};

type Gr = GaussianRational;
type Row = BTreeMap<usize, Gr>;

/// Position-free ansatz: every Clifford word times `hbar` and either
/// `p^a / w^2` with `|a| <= 2` or `1`.
pub fn ansatz() -> Vec<NCElement> {
    let mut monos = vec![Monomial {
        hbar: 1,
        ..Monomial::ONE
    }];
    let mut exps = vec![[0u8; 4]];
    for a in 0..4 {
        exps.push(unit(a, 1));
        for b in a..4 {
            let mut e = unit(a, 1);
            e[b] += 1;
            if e[0] < 2 {
                exps.push(e);
            }
        }
    }
    for p in exps {
        monos.push(Monomial {
            hbar: 1,
            p,
            alpha: [0; 4],
            w: -2,
        });
    }
    let mut out = Vec::new();
    for w in CliffordWord::all() {
        for m in &monos {
            out.push(NCElement::word(w).mul_scalar_right(&Scalar::term(*m, Gr::one())));
        }
    }
    out
}

fn unit(a: usize, k: u8) -> [u8; 4] {
    let mut e = [0; 4];
    e[a] = k;
    e
}

/// Flattened coefficients keyed by (position monomial, word, scalar monomial).
fn flatten(e: &NCElement) -> BTreeMap<(Key, Monomial), Gr> {
    let mut out = BTreeMap::new();
    for (k, s) in e.terms() {
        for (m, c) in s.terms() {
            out.insert((*k, *m), *c);
        }
    }
    out
}

/// A linear system `sum_k c_k column_k = rhs` assembled from element-valued
/// equations.
struct System {
    rows: BTreeMap<(usize, Key, Monomial), Row>,
    unknowns: usize,
    equations: usize,
}

const RHS: usize = usize::MAX;

impl System {
    fn new(unknowns: usize) -> Self {
        System {
            rows: BTreeMap::new(),
            unknowns,
            equations: 0,
        }
    }

    /// Adds the element equation `sum_k c_k columns[k] + constant = 0`.
    fn push(&mut self, columns: &[(usize, NCElement)], constant: &NCElement) {
        let eq = self.equations;
        self.equations += 1;
        for (k, col) in columns {
            for ((key, m), c) in flatten(col) {
                let row = self.rows.entry((eq, key, m)).or_default();
                let slot = row.entry(*k).or_insert_with(Gr::zero);
                *slot = *slot + c;
            }
        }
        for ((key, m), c) in flatten(constant) {
            let row = self.rows.entry((eq, key, m)).or_default();
            let slot = row.entry(RHS).or_insert_with(Gr::zero);
            *slot = *slot - c;
        }
    }

    /// Particular solution and nullspace basis, or `None` if inconsistent.
    fn solve(self) -> Option<(Vec<Gr>, Vec<Vec<Gr>>)> {
        let mut pivots: Vec<(usize, Row)> = Vec::new();
        for (_, mut row) in self.rows {
            row.retain(|_, c| !c.is_zero());
            for (p, prow) in &pivots {
                if let Some(f) = row.get(p).cloned() {
                    for (k, c) in prow {
                        let slot = row.entry(*k).or_insert_with(Gr::zero);
                        *slot = *slot - f * *c;
                    }
                    row.retain(|_, c| !c.is_zero());
                }
            }
            match row.keys().find(|&&k| k != RHS).copied() {
                None if row.contains_key(&RHS) => return None,
                None => {}
                Some(p) => {
                    let inv = row[&p].inv().expect("nonzero pivot");
                    for c in row.values_mut() {
                        *c = *c * inv;
                    }
                    pivots.push((p, row));
                }
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|(p, _)| *p).collect();
        let back = |free: Option<usize>, with_rhs: bool| -> Vec<Gr> {
            let mut x = vec![Gr::zero(); self.unknowns];
            if let Some(f) = free {
                x[f] = Gr::one();
            }
            for (p, row) in pivots.iter().rev() {
                let mut v = if with_rhs {
                    row.get(&RHS).cloned().unwrap_or_else(Gr::zero)
                } else {
                    Gr::zero()
                };
                for (k, c) in row {
                    if *k != RHS && k != p {
                        v = v - *c * x[*k];
                    }
                }
                x[*p] = v;
            }
            x
        };
        let particular = back(None, true);
        let null = (0..self.unknowns)
            .filter(|k| !pivot_cols.contains(k))
            .map(|f| back(Some(f), false))
            .collect();
        Some((particular, null))
    }
}

fn combine(basis: &[NCElement], c: &[Gr]) -> NCElement {
    basis
        .iter()
        .zip(c)
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| b.scale(*c))
        .sum()
}

/// Adjoint of an element of position degree at most one, split into the
/// part not involving the unknown shifts and the left factor multiplying each
/// shift `D_mu`.
fn split_adjoint(a: &NCElement) -> (NCElement, [NCElement; 4]) {
    let mut base = NCElement::zero();
    let mut left: [NCElement; 4] = std::array::from_fn(|_| NCElement::zero());
    for (key, s) in a.terms() {
        let f = NCElement::from_scalar(s.conj_i()).mul(word_adjoint(key.word));
        match key.x.0.iter().position(|&k| k != 0) {
            None => base = base + f,
            Some(mu) => {
                assert_eq!(key.x.0.iter().map(|&k| k as u32).sum::<u32>(), 1);
                base = base + f.mul(&NCElement::x(mu));
                left[mu] = left[mu].clone() + f;
            }
        }
    }
    (base, left)
}

pub struct OracleResult {
    /// `x_mu^dagger - x_mu` as reconstructed.
    pub shifts: [NCElement; 4],
    /// Solutions of the commutation conditions alone that differ by a
    /// central element.
    pub central: usize,
    /// Dimension of the remaining solution space; zero means unique.
    pub freedom: usize,
}

pub fn solve_position_adjoint() -> Option<OracleResult> {
    let basis = ansatz();
    let n = basis.len();

    // Commutation with the Clifford images fixes each shift up to the
    // centre of the algebra; this part is the same for every index.
    let images: Vec<NCElement> = (0..4)
        .map(|nu| word_adjoint(CliffordWord::generator(nu)).clone())
        .collect();
    let mut particulars = Vec::new();
    let mut null = Vec::new();
    for mu in 0..4 {
        let mut sys = System::new(n);
        for img in &images {
            let cols: Vec<(usize, NCElement)> = basis
                .iter()
                .enumerate()
                .map(|(k, b)| (k, b.bracket(img)))
                .collect();
            sys.push(&cols, &NCElement::x(mu).bracket(img));
        }
        let (p, ns) = sys.solve()?;
        particulars.push(combine(&basis, &p));
        null = ns.iter().map(|v| combine(&basis, v)).collect();
    }

    // Self-adjointness of the dilatation and Lorentz generators pins the
    // central part.
    let cat = Catalog::global();
    let mut generators = vec![cat.dilatation().clone()];
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            generators.push(cat.j(mu, nu).clone());
        }
    }
    let m = null.len();
    let mut sys = System::new(4 * m);
    for g in &generators {
        let (base, left) = split_adjoint(g);
        let mut constant = base - g.clone();
        let mut cols = Vec::new();
        for mu in 0..4 {
            constant = constant + left[mu].mul(&particulars[mu]);
            for (j, z) in null.iter().enumerate() {
                cols.push((mu * m + j, left[mu].mul(z)));
            }
        }
        sys.push(&cols, &constant);
    }
    let (t, ns) = sys.solve()?;
    let shifts = std::array::from_fn(|mu| {
        particulars[mu].clone() + combine(&null, &t[mu * m..(mu + 1) * m])
    });
    Some(OracleResult {
        shifts,
        central: m,
        freedom: ns.len(),
    })
}
