//! Seeded random kernel elements.

use electroloc::clifford::CliffordWord;
use electroloc::ncalg::{Key, XMonomial};
use electroloc::scalars::{GaussianRational, Monomial, Scalar};
use electroloc::NCElement;
use rand::Rng;

pub fn scalar(rng: &mut impl Rng) -> Scalar {
    let mono = Monomial {
        hbar: rng.gen_range(-1..=1),
        p: std::array::from_fn(|_| rng.gen_range(0..=1)),
        alpha: std::array::from_fn(|_| rng.gen_range(0..=1)),
        w: rng.gen_range(-2..=2),
    };
    let c = GaussianRational::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
        + GaussianRational::i() * GaussianRational::int(rng.gen_range(-2..=2));
    Scalar::term(mono, c)
}

pub fn x_monomial(rng: &mut impl Rng) -> XMonomial {
    let mut x = [0u8; 4];
    for _ in 0..rng.gen_range(0..=3) {
        x[rng.gen_range(0..4)] += 1;
    }
    XMonomial(x)
}

/// Up to two terms with position degree at most 3; `word` forces the
/// Clifford word of the first term.
pub fn element(rng: &mut impl Rng, word: Option<u8>) -> NCElement {
    let n = rng.gen_range(1..=2);
    (0..n)
        .map(|k| {
            let mask = match (k, word) {
                (0, Some(m)) => m,
                _ => rng.gen_range(0..16),
            };
            NCElement::from_term(
                Key {
                    x: x_monomial(rng),
                    word: CliffordWord::from_mask(mask),
                },
                scalar(rng),
            )
        })
        .sum()
}
