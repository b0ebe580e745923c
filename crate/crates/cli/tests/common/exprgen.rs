//! Seeded generator of random expression trees.

use electroloc::expr::{Expr, Shorthand, Span};
use electroloc::scalars::Rational;
use electroloc::Observable;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn leaf(rng: &mut ChaCha8Rng) -> Expr {
    match rng.gen_range(0..6) {
        0 | 1 => {
            let obs = *Observable::ALL.choose(rng).unwrap();
            let idx = (0..obs.arity()).map(|_| rng.gen_range(0..4)).collect();
            Expr::Obs(obs, idx)
        }
        2 => Expr::Shorthand(*Shorthand::ALL.choose(rng).unwrap()),
        3 => Expr::Num(Rational::new(rng.gen_range(0..20), rng.gen_range(1..7))),
        4 => Expr::Alpha(rng.gen_range(0..4)),
        _ => {
            if rng.gen_bool(0.5) {
                Expr::I
            } else {
                Expr::Hbar
            }
        }
    }
}

fn node(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng);
    }
    let mut sub = || Box::new(node(rng, depth - 1));
    let (a, b) = (sub(), sub());
    match rng.gen_range(0..9) {
        0 => Expr::Add(a, b),
        1 => Expr::Sub(a, b),
        2 | 3 => Expr::Mul(a, b),
        4 => Expr::Neg(a),
        5 => Expr::Pow(a, rng.gen_range(0..4)),
        6 => Expr::Comm(a, b),
        7 => Expr::Dot(a, b),
        _ => {
            if rng.gen_bool(0.5) {
                Expr::Adj(a)
            } else {
                let order = rng.gen_bool(0.7).then(|| rng.gen_range(1..5));
                Expr::Conj(a, order, Span::default())
            }
        }
    }
}

pub fn corpus(seed: u64, n: usize) -> Vec<Expr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| node(&mut rng, 4)).collect()
}
