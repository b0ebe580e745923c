mod common;

use common::dirac::*;
use electroloc::clifford::CliffordWord;
use electroloc::ncalg::word_adjoint;
use electroloc::scalars::{Monomial, Scalar};
use electroloc::{Catalog, GaussianRational, NCElement};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xd1ac)
}

fn random_momentum_element(rng: &mut ChaCha8Rng) -> NCElement {
    (0..3)
        .map(|_| {
            let mono = Monomial {
                hbar: rng.gen_range(0..2),
                p: std::array::from_fn(|_| rng.gen_range(0..3)),
                alpha: [0; 4],
                w: rng.gen_range(-2..2),
            };
            let c = GaussianRational::ratio(rng.gen_range(-4..5), rng.gen_range(1..4))
                + GaussianRational::i() * GaussianRational::int(rng.gen_range(-2..3));
            NCElement::word(CliffordWord::from_mask(rng.gen_range(0..16)))
                .mul_scalar_right(&Scalar::term(mono, c))
        })
        .sum()
}

#[test]
fn word_products_match_matrices() {
    let at = Point::random(&mut rng());
    for a in CliffordWord::all() {
        for b in CliffordWord::all() {
            let sym = NCElement::word(a).mul(&NCElement::word(b));
            let m = element_matrix(&sym, &at).unwrap();
            let expected = mat_mul(&word_matrix(a), &word_matrix(b));
            assert!(distance(&m, &expected) < TOL, "{a:?} {b:?}");
        }
    }
}

#[test]
fn momentum_dependent_products_match_matrices() {
    let mut rng = rng();
    for _ in 0..200 {
        let a = random_momentum_element(&mut rng);
        let b = random_momentum_element(&mut rng);
        let at = Point::random(&mut rng);
        let lhs = element_matrix(&a.mul(&b), &at).unwrap();
        let rhs = mat_mul(
            &element_matrix(&a, &at).unwrap(),
            &element_matrix(&b, &at).unwrap(),
        );
        let scale = 1.0 + distance(&rhs, &[[Complex64::new(0.0, 0.0); 4]; 4]);
        assert!(distance(&lhs, &rhs) < TOL * scale);
    }
}

#[test]
fn mass_squares_to_shell() {
    let cat = Catalog::global();
    let mut rng = rng();
    for _ in 0..20 {
        let at = Point::random(&mut rng);
        let m = element_matrix(cat.mass(), &at).unwrap();
        assert!(distance(&m, &mass_matrix(&at)) < TOL);
        let m2 = mat_mul(&m, &m);
        assert!(distance(&m2, &mat_scale(&identity(), (at.w * at.w).into())) < TOL);
    }
}

#[test]
fn pauli_lubanski_square_matches_spin_half() {
    let cat = Catalog::global();
    let mut rng = rng();
    for _ in 0..20 {
        let at = Point::random(&mut rng);
        let target = mat_scale(
            &identity(),
            (-0.75 * at.hbar * at.hbar * at.w * at.w).into(),
        );
        let oracle = (0..4).fold([[Complex64::new(0.0, 0.0); 4]; 4], |acc, mu| {
            let w = pauli_lubanski_matrix(mu, &at);
            mat_add(&acc, &mat_scale(&mat_mul(&w, &w), metric(mu).into()))
        });
        assert!(distance(&oracle, &target) < TOL);
        let kernel = element_matrix(&cat.w_squared(), &at).unwrap();
        assert!(distance(&kernel, &target) < TOL);
        for mu in 0..4 {
            let k = element_matrix(cat.w(mu), &at).unwrap();
            let o = pauli_lubanski_matrix(mu, &at);
            let same = distance(&k, &o) < TOL;
            let flipped = distance(&k, &mat_scale(&o, (-1.0).into())) < TOL;
            assert!(same || flipped, "W[{mu}]");
        }
    }
}

/// The Clifford part of the involution is the adjoint for the inner product
/// with the positive metric `g^0 M / w`.
#[test]
fn word_adjoint_is_metric_adjoint() {
    let mut rng = rng();
    for _ in 0..10 {
        let at = Point::random(&mut rng);
        let g = mat_scale(
            &mat_mul(&gamma_upper(0), &mass_matrix(&at)),
            (1.0 / at.w).into(),
        );
        let g_inv = inverse(&g);
        for w in CliffordWord::all() {
            let kernel = element_matrix(word_adjoint(w), &at).unwrap();
            let oracle = mat_mul(&g_inv, &mat_mul(&dagger(&word_matrix(w)), &g));
            assert!(distance(&kernel, &oracle) < TOL, "{w:?}");
        }
    }
}
