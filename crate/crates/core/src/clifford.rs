//! Basis words of the Clifford algebra Cl(1,3) with eta = diag(1,-1,-1,-1).
//!
//! A word is a strictly increasing product `g_i g_j ...` stored as a 4-bit
//! mask. Generators obey `g_mu g_nu + g_nu g_mu = 2 eta_{mu nu}`.

use std::fmt;

use crate::scalars::GaussianRational;

/// Diagonal entry `eta_{mu mu}`; the metric is its own inverse.
pub const fn metric(mu: usize) -> i8 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// `eta_{mu nu}` as an integer.
pub const fn eta(mu: usize, nu: usize) -> i8 {
    if mu == nu {
        metric(mu)
    } else {
        0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordWord(u8);

impl CliffordWord {
    pub const IDENTITY: CliffordWord = CliffordWord(0);
    pub const VOLUME: CliffordWord = CliffordWord(0b1111);

    pub fn from_mask(mask: u8) -> Self {
        assert!(mask < 16, "Clifford word mask out of range");
        CliffordWord(mask)
    }

    pub fn generator(mu: usize) -> Self {
        assert!(mu < 4, "Clifford generator index out of range");
        CliffordWord(1 << mu)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |k| self.0 & (1 << k) != 0)
    }

    pub fn all() -> impl Iterator<Item = CliffordWord> {
        (0..16).map(CliffordWord)
    }

    /// Ordered product of generators, returned as `(sign, word)`.
    pub fn from_indices(indices: &[usize]) -> (i8, CliffordWord) {
        indices
            .iter()
            .fold((1, CliffordWord::IDENTITY), |(s, w), &mu| {
                let (t, v) = wmul(w, CliffordWord::generator(mu));
                (s * t, v)
            })
    }

    /// Sign picked up by reversing the generator order, `(-1)^{k(k-1)/2}`.
    pub fn reversal_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign under `g_mu -> -g_mu`.
    pub fn grade_involution_sign(self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn render_latex(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        self.indices()
            .map(|k| format!("\\gamma_{{{k}}}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().map(|k| format!("g{k}")).collect();
        f.write_str(&parts.join(" "))
    }
}

const fn wmul_raw(u: u8, v: u8) -> (i8, u8) {
    // transpositions needed to move each generator of v left past the larger ones of u
    let mut swaps = 0u32;
    let mut j = 0;
    while j < 4 {
        if v & (1 << j) != 0 {
            let greater = u & !((1u8 << (j + 1)) - 1);
            swaps += greater.count_ones();
        }
        j += 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let common = u & v;
    let mut k = 1;
    while k < 4 {
        if common & (1 << k) != 0 {
            sign = -sign;
        }
        k += 1;
    }
    (sign, u ^ v)
}

const fn build_table() -> [[(i8, u8); 16]; 16] {
    let mut t = [[(0i8, 0u8); 16]; 16];
    let mut u = 0;
    while u < 16 {
        let mut v = 0;
        while v < 16 {
            t[u][v] = wmul_raw(u as u8, v as u8);
            v += 1;
        }
        u += 1;
    }
    t
}

static PRODUCT_TABLE: [[(i8, u8); 16]; 16] = build_table();

/// Product of two basis words: `u * v = sign * word`.
pub fn wmul(u: CliffordWord, v: CliffordWord) -> (i8, CliffordWord) {
    let (s, w) = PRODUCT_TABLE[u.0 as usize][v.0 as usize];
    (s, CliffordWord(w))
}

/// The orientation `i g0 g1 g2 g3` as coefficient and word.
pub fn gamma5() -> (GaussianRational, CliffordWord) {
    (GaussianRational::i(), CliffordWord::VOLUME)
}

/// Covariant Levi-Civita symbol with `epsilon_{0123} = +1`.
pub fn epsilon(mu: usize, nu: usize, rho: usize, sigma: usize) -> i8 {
    let idx = [mu, nu, rho, sigma];
    if idx.iter().any(|&k| k > 3) {
        return 0;
    }
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Contravariant Levi-Civita symbol, `epsilon^{0123} = -1`.
pub fn epsilon_upper(mu: usize, nu: usize, rho: usize, sigma: usize) -> i8 {
    epsilon(mu, nu, rho, sigma) * metric(mu) * metric(nu) * metric(rho) * metric(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(mu: usize) -> CliffordWord {
        CliffordWord::generator(mu)
    }

    #[test]
    fn generator_squares_follow_metric() {
        assert_eq!(wmul(g(0), g(0)), (1, CliffordWord::IDENTITY));
        for k in 1..4 {
            assert_eq!(wmul(g(k), g(k)), (-1, CliffordWord::IDENTITY));
        }
    }

    #[test]
    fn swapped_pair() {
        assert_eq!(wmul(g(1), g(0)), (-1, CliffordWord::from_mask(0b0011)));
        assert_eq!(wmul(g(0), g(1)), (1, CliffordWord::from_mask(0b0011)));
    }

    #[test]
    fn associativity_exhaustive() {
        for a in CliffordWord::all() {
            for b in CliffordWord::all() {
                for c in CliffordWord::all() {
                    let (s1, ab) = wmul(a, b);
                    let (s2, left) = wmul(ab, c);
                    let (t1, bc) = wmul(b, c);
                    let (t2, right) = wmul(a, bc);
                    assert_eq!(left, right);
                    assert_eq!(s1 * s2, t1 * t2, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn anticommutation_exhaustive() {
        for mu in 0..4 {
            for nu in 0..4 {
                let (s, w) = wmul(g(mu), g(nu));
                let (t, v) = wmul(g(nu), g(mu));
                assert_eq!(w, v);
                if mu == nu {
                    assert_eq!(s, t);
                    assert_eq!(s, metric(mu));
                } else {
                    assert_eq!(s, -t);
                }
            }
        }
    }

    #[test]
    fn reversal_and_involution_signs() {
        for w in CliffordWord::all() {
            let idx: Vec<usize> = w.indices().collect();
            let rev: Vec<usize> = idx.iter().rev().copied().collect();
            let (s, v) = CliffordWord::from_indices(&rev);
            assert_eq!(v, w);
            assert_eq!(s, w.reversal_sign());
            let k = idx.len() as i32;
            assert_eq!(
                w.reversal_sign() as i32,
                (-1i32).pow((k * (k - 1) / 2) as u32)
            );
            assert_eq!(w.grade_involution_sign() as i32, (-1i32).pow(k as u32));
        }
    }

    #[test]
    fn gamma5_squares_to_one() {
        let (c, w) = gamma5();
        let (s, v) = wmul(w, w);
        assert_eq!(v, CliffordWord::IDENTITY);
        // (i)^2 * s = 1
        assert_eq!(
            c * c * GaussianRational::int(s as i64),
            GaussianRational::one()
        );
    }

    #[test]
    fn gamma5_anticommutes_with_generators() {
        for mu in 0..4 {
            let (s, a) = wmul(CliffordWord::VOLUME, g(mu));
            let (t, b) = wmul(g(mu), CliffordWord::VOLUME);
            assert_eq!(a, b);
            assert_eq!(s, -t);
        }
    }

    #[test]
    fn levi_civita() {
        assert_eq!(epsilon(0, 1, 2, 3), 1);
        assert_eq!(epsilon_upper(0, 1, 2, 3), -1);
        assert_eq!(epsilon(0, 0, 1, 2), 0);
        assert_eq!(epsilon(1, 0, 2, 3), -1);
        assert_eq!(epsilon(0, 1, 3, 2), -1);
        assert_eq!(epsilon(3, 2, 1, 0), 1);
    }

    #[test]
    fn rendering() {
        assert_eq!(CliffordWord::IDENTITY.to_string(), "1");
        assert_eq!(CliffordWord::VOLUME.to_string(), "g0 g1 g2 g3");
        assert_eq!(CliffordWord::from_mask(0b0101).to_string(), "g0 g2");
    }
}
