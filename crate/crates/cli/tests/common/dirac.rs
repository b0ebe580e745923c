//! Numerical 4x4 Dirac-matrix representation used as an independent oracle
//! for the symbolic Clifford and scalar arithmetic.

use electroloc::clifford::CliffordWord;
use electroloc::scalars::{GaussianRational, Rational, Scalar};
use electroloc::NCElement;
use num_complex::Complex64;
use rand::Rng;

pub type Mat = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity() -> Mat {
    let mut m = [[ZERO; 4]; 4];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = ONE;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    let mut c = *a;
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] += b[i][j];
        }
    }
    c
}

pub fn mat_scale(a: &Mat, s: Complex64) -> Mat {
    a.map(|row| row.map(|z| z * s))
}

pub fn dagger(a: &Mat) -> Mat {
    let mut c = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = a[j][i].conj();
        }
    }
    c
}

pub fn distance(a: &Mat, b: &Mat) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            d = d.max((a[i][j] - b[i][j]).norm());
        }
    }
    d
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn inverse(a: &Mat) -> Mat {
    let mut m = *a;
    let mut inv = identity();
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&r, &s| m[r][col].norm().total_cmp(&m[s][col].norm()))
            .unwrap();
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let d = m[col][col];
        for j in 0..4 {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for r in 0..4 {
            if r != col {
                let f = m[r][col];
                for j in 0..4 {
                    m[r][j] -= f * m[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    inv
}

/// Dirac representation of the upper-index generators.
pub fn gamma_upper(mu: usize) -> Mat {
    let mut m = [[ZERO; 4]; 4];
    if mu == 0 {
        for k in 0..4 {
            m[k][k] = if k < 2 { ONE } else { -ONE };
        }
        return m;
    }
    let sigma: [[Complex64; 2]; 2] = match mu {
        1 => [[ZERO, ONE], [ONE, ZERO]],
        2 => [[ZERO, -I], [I, ZERO]],
        _ => [[ONE, ZERO], [ZERO, -ONE]],
    };
    for i in 0..2 {
        for j in 0..2 {
            m[i][j + 2] = sigma[i][j];
            m[i + 2][j] = -sigma[i][j];
        }
    }
    m
}

pub fn metric(mu: usize) -> f64 {
    if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn gamma_lower(mu: usize) -> Mat {
    mat_scale(&gamma_upper(mu), Complex64::new(metric(mu), 0.0))
}

pub fn word_matrix(w: CliffordWord) -> Mat {
    w.indices()
        .fold(identity(), |acc, k| mat_mul(&acc, &gamma_lower(k)))
}

/// Values substituted for hbar, the upper momentum components, the upper
/// alpha components and the mass.
#[derive(Clone, Copy, Debug)]
pub struct Point {
    pub hbar: f64,
    pub p: [f64; 4],
    pub alpha: [f64; 4],
    pub w: f64,
}

impl Point {
    /// A random on-shell point with `p0 = sqrt(w^2 + |p|^2)`.
    pub fn random(rng: &mut impl Rng) -> Point {
        let w = rng.gen_range(0.5..2.0);
        let spatial: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
        let p0 = (w * w + spatial.iter().map(|s| s * s).sum::<f64>()).sqrt();
        Point {
            hbar: rng.gen_range(0.5..1.5),
            p: [p0, spatial[0], spatial[1], spatial[2]],
            alpha: std::array::from_fn(|_| rng.gen_range(-0.5..0.5)),
            w,
        }
    }

    /// `p_mu` with a lower index.
    pub fn p_lower(&self, mu: usize) -> f64 {
        metric(mu) * self.p[mu]
    }
}

fn rational(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn gaussian(c: &GaussianRational) -> Complex64 {
    Complex64::new(rational(&c.re), rational(&c.im))
}

pub fn scalar_value(s: &Scalar, at: &Point) -> Complex64 {
    s.terms()
        .iter()
        .map(|(m, c)| {
            let mut v = gaussian(c) * at.hbar.powi(m.hbar as i32) * at.w.powi(m.w as i32);
            for k in 0..4 {
                v *= at.p[k].powi(m.p[k] as i32) * at.alpha[k].powi(m.alpha[k] as i32);
            }
            v
        })
        .sum()
}

/// Matrix of an element without position factors; `None` if any term has
/// one.
pub fn element_matrix(e: &NCElement, at: &Point) -> Option<Mat> {
    let mut out = [[ZERO; 4]; 4];
    for (key, s) in e.terms() {
        if key.x.0.iter().any(|&k| k != 0) {
            return None;
        }
        out = mat_add(
            &out,
            &mat_scale(&word_matrix(key.word), scalar_value(s, at)),
        );
    }
    Some(out)
}

/// `sum_mu p^mu gamma_mu`.
pub fn mass_matrix(at: &Point) -> Mat {
    (0..4).fold([[ZERO; 4]; 4], |acc, mu| {
        mat_add(
            &acc,
            &mat_scale(&gamma_lower(mu), Complex64::new(at.p[mu], 0.0)),
        )
    })
}

fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    let mut v = idx;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if v[i] == v[j] {
                return 0.0;
            }
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    v.sort();
    sign
}

/// Pauli-Lubanski vector `W_mu = -1/2 eps_{mu nu rho sigma} s^{nu rho} p^sigma`
/// with `s^{nu rho} = (i hbar / 4) [g^nu, g^rho]` and `eps_{0123} = 1`.
pub fn pauli_lubanski_matrix(mu: usize, at: &Point) -> Mat {
    let mut out = [[ZERO; 4]; 4];
    for nu in 0..4 {
        for rho in 0..4 {
            for sigma in 0..4 {
                let e = levi_civita([mu, nu, rho, sigma]);
                if e == 0.0 {
                    continue;
                }
                let gn = gamma_upper(nu);
                let gr = gamma_upper(rho);
                let comm = mat_add(&mat_mul(&gn, &gr), &mat_scale(&mat_mul(&gr, &gn), -ONE));
                let s = mat_scale(&comm, I * at.hbar / 4.0);
                out = mat_add(
                    &out,
                    &mat_scale(&s, Complex64::new(-0.5 * e * at.p[sigma], 0.0)),
                );
            }
        }
    }
    out
}
