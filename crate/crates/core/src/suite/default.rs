//! The shipped manifest: every commutation relation, definition and frame law
//! of the model, spelled out over all index values.

use std::fmt::Write;

use crate::clifford::{epsilon, eta, metric};
use crate::error::Result;

use super::Manifest;

/// Text of `manifests/default.manifest`, identical to
/// [`generate_default_manifest`].
pub const DEFAULT_MANIFEST: &str = include_str!("../../manifests/default.manifest");

pub fn default_manifest() -> Result<Manifest> {
    Manifest::parse(DEFAULT_MANIFEST)
}

/// `sum_k c_k t_k`, written with signs folded in; `0` when empty.
fn lin(terms: &[(i64, String)]) -> String {
    let mut out = String::new();
    for (c, t) in terms.iter().filter(|(c, _)| *c != 0) {
        let mag = c.unsigned_abs();
        let body = if mag == 1 {
            t.clone()
        } else {
            format!("{mag}*{t}")
        };
        if out.is_empty() {
            out = if *c < 0 { format!("-{body}") } else { body };
        } else {
            let _ = write!(out, " {} {body}", if *c < 0 { '-' } else { '+' });
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `A^mu B_mu` from lower components.
fn contract(f: impl Fn(usize) -> String) -> String {
    contract_skipping(None, f)
}

/// Same, leaving out `mu = skip` where the summand vanishes identically.
fn contract_skipping(skip: Option<usize>, f: impl Fn(usize) -> String) -> String {
    let terms: Vec<(i64, String)> = (0..4)
        .filter(|&mu| Some(mu) != skip)
        .map(|mu| (metric(mu) as i64, f(mu)))
        .collect();
    lin(&terms)
}

fn pairs() -> Vec<(usize, usize)> {
    (0..4)
        .flat_map(|m| (m + 1..4).map(move |n| (m, n)))
        .collect()
}

fn e(m: usize, n: usize) -> i64 {
    eta(m, n) as i64
}

/// `A_{mu nu} -> eta_{nu rho} V_mu - eta_{mu rho} V_nu` for a vector `V`.
fn vector_law(v: &str, m: usize, n: usize, r: usize) -> String {
    lin(&[
        (e(n, r), format!("{v}[{m}]")),
        (-e(m, r), format!("{v}[{n}]")),
    ])
}

/// Lorentz algebra right-hand side for a tensor `T`.
fn tensor_law(t: &str, (m, n): (usize, usize), (r, s): (usize, usize)) -> String {
    let comp = |a: usize, b: usize| format!("{t}[{a},{b}]");
    let terms: Vec<(i64, String)> = [
        (e(n, r), (m, s)),
        (e(m, s), (n, r)),
        (-e(m, r), (n, s)),
        (-e(n, s), (m, r)),
    ]
    .into_iter()
    .filter(|(_, (a, b))| a != b)
    .map(|(c, (a, b))| (c, comp(a, b)))
    .collect();
    lin(&terms)
}

struct Writer {
    out: String,
}

impl Writer {
    fn section(&mut self, tag: &str, comment: &str) {
        if !self.out.is_empty() {
            self.out.push('\n');
        }
        let _ = writeln!(self.out, "# {comment}\n[{tag}]");
    }

    fn exact(&mut self, name: &str, lhs: &str, rhs: &str) {
        let _ = writeln!(self.out, "{name} := {lhs} == {rhs} @ exact");
    }

    fn raw(&mut self, line: &str) {
        self.out.push_str(line);
        self.out.push('\n');
    }
}

fn hermitian(w: &mut Writer) {
    w.section(
        "hermitian",
        "Poincare, dilatation, mass, spin and hermitian positions",
    );
    for (m, n) in pairs() {
        w.exact(&format!("PP_{m}{n}"), &format!("comm(P[{m}], P[{n}])"), "0");
    }
    for (m, n) in pairs() {
        for r in 0..4 {
            w.exact(
                &format!("JP_{m}{n}_{r}"),
                &format!("comm(J[{m},{n}], P[{r}])"),
                &vector_law("P", m, n, r),
            );
        }
    }
    let ps = pairs();
    for (k, &a) in ps.iter().enumerate() {
        for &b in &ps[k + 1..] {
            w.exact(
                &format!("JJ_{}{}_{}{}", a.0, a.1, b.0, b.1),
                &format!("comm(J[{},{}], J[{},{}])", a.0, a.1, b.0, b.1),
                &tensor_law("J", a, b),
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("DP_{m}"),
            &format!("comm(D, P[{m}])"),
            &format!("P[{m}]"),
        );
    }
    for (m, n) in pairs() {
        w.exact(&format!("DJ_{m}{n}"), &format!("comm(D, J[{m},{n}])"), "0");
    }
    w.exact("M2", "M*M", "P2");
    for m in 0..4 {
        w.exact(&format!("PM_{m}"), &format!("comm(P[{m}], M)"), "0");
    }
    for (m, n) in pairs() {
        w.exact(&format!("JM_{m}{n}"), &format!("comm(J[{m},{n}], M)"), "0");
    }
    w.exact("DM", "comm(D, M)", "M");
    w.exact("DMabs", "comm(D, Mabs)", "Mabs");
    for m in 0..4 {
        for r in 0..4 {
            w.exact(
                &format!("PW_{m}_{r}"),
                &format!("comm(P[{m}], W[{r}])"),
                "0",
            );
        }
    }
    for (m, n) in pairs() {
        for r in 0..4 {
            w.exact(
                &format!("JW_{m}{n}_{r}"),
                &format!("comm(J[{m},{n}], W[{r}])"),
                &vector_law("W", m, n, r),
            );
        }
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("WW_{m}{n}"),
            &format!("comm(W[{m}], W[{n}])*Minv2"),
            &format!("S[{m},{n}]"),
        );
    }
    w.exact("PW", &contract(|mu| format!("P[{mu}]*W[{mu}]")), "0");
    for n in 0..4 {
        w.exact(
            &format!("PS_{n}"),
            &contract_skipping(Some(n), |mu| format!("P[{mu}]*S[{mu},{n}]")),
            "0",
        );
    }
    w.raw("spin_magnitude := W2*Minv2 == -3/4*hbar^2 @ exact | extract per hbar^2");
    for (m, n) in pairs() {
        w.exact(
            &format!("JX_{m}{n}"),
            &format!("J[{m},{n}]"),
            &format!("dot(P[{m}], Xh[{n}]) - dot(P[{n}], Xh[{m}]) + S[{m},{n}]"),
        );
    }
    w.exact("DX", "D", &contract(|mu| format!("dot(P[{mu}], Xh[{mu}])")));
    for m in 0..4 {
        let orbital = contract_skipping(Some(m), |r| format!("dot(P[{r}]*Minv2, J[{r},{m}])"));
        w.exact(
            &format!("Xdef_{m}"),
            &format!("Xh[{m}]"),
            &format!("dot(P[{m}]*Minv2, D) + {orbital}"),
        );
    }
    for m in 0..4 {
        for n in 0..4 {
            w.exact(
                &format!("PX_{m}_{n}"),
                &format!("comm(P[{m}], Xh[{n}])"),
                &lin(&[(-e(m, n), "1".into())]),
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("DXh_{m}"),
            &format!("comm(D, Xh[{m}])"),
            &format!("-Xh[{m}]"),
        );
    }
    for (m, n) in pairs() {
        for r in 0..4 {
            w.exact(
                &format!("JXh_{m}{n}_{r}"),
                &format!("comm(J[{m},{n}], Xh[{r}])"),
                &vector_law("Xh", m, n, r),
            );
        }
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("XX_{m}{n}"),
            &format!("comm(Xh[{m}], Xh[{n}])"),
            &format!("S[{m},{n}]*Minv2"),
        );
    }
}

fn canonical(w: &mut Writer) {
    w.section(
        "canonical",
        "Duality, self-dual spin and canonical positions",
    );
    for (m, n) in pairs() {
        w.exact(
            &format!("Sdual_{m}{n}"),
            &format!("Sdual[{m},{n}]"),
            &format!("i*(P[{m}]*W[{n}] - P[{n}]*W[{m}])*Minv2"),
        );
    }
    for n in 0..4 {
        w.exact(
            &format!("PSdual_{n}"),
            &contract_skipping(Some(n), |mu| format!("P[{mu}]*Sdual[{mu},{n}]")),
            &format!("i*W[{n}]"),
        );
    }
    for (m, n) in pairs() {
        let terms: Vec<(i64, String)> = pairs()
            .into_iter()
            .map(|(r, s)| {
                let c = (epsilon(m, n, r, s) * metric(r) * metric(s)) as i64;
                (c, format!("Sdual[{r},{s}]"))
            })
            .collect();
        w.exact(
            &format!("Sinverse_{m}{n}"),
            &format!("S[{m},{n}]"),
            &format!("i*({})", lin(&terms)),
        );
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("sself_{m}{n}"),
            &format!("sspin[{m},{n}]"),
            &format!("S[{m},{n}] + gamma5*Sdual[{m},{n}]"),
        );
        w.exact(
            &format!("sdual_{m}{n}"),
            &format!("sdual[{m},{n}]"),
            &format!("gamma5*sspin[{m},{n}]"),
        );
    }
    for m in 0..4 {
        w.exact(
            &format!("xW_{m}"),
            &format!("xc[{m}]"),
            &format!("Xh[{m}] - i*gamma5*W[{m}]*Minv2"),
        );
        let shift = contract_skipping(Some(m), |nu| format!("P[{nu}]*sspin[{nu},{m}]"));
        w.exact(
            &format!("xs_{m}"),
            &format!("xc[{m}]"),
            &format!("Xh[{m}] - ({shift})*Minv2"),
        );
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("Jx_{m}{n}"),
            &format!("J[{m},{n}]"),
            &format!("dot(P[{m}], xc[{n}]) - dot(P[{n}], xc[{m}]) + sspin[{m},{n}]"),
        );
    }
    w.exact("Dx", "D", &contract(|mu| format!("dot(P[{mu}], xc[{mu}])")));
    for m in 0..4 {
        for n in 0..4 {
            w.exact(
                &format!("Px_{m}_{n}"),
                &format!("comm(P[{m}], xc[{n}])"),
                &lin(&[(-e(m, n), "1".into())]),
            );
        }
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("xx_{m}{n}"),
            &format!("comm(xc[{m}], xc[{n}])"),
            "0",
        );
    }
    let ps = pairs();
    for (k, &a) in ps.iter().enumerate() {
        for &b in &ps[k + 1..] {
            w.exact(
                &format!("ss_{}{}_{}{}", a.0, a.1, b.0, b.1),
                &format!("comm(sspin[{},{}], sspin[{},{}])", a.0, a.1, b.0, b.1),
                &tensor_law("sspin", a, b),
            );
        }
    }
    for m in 0..4 {
        for (n, r) in pairs() {
            w.exact(
                &format!("Ps_{m}_{n}{r}"),
                &format!("comm(P[{m}], sspin[{n},{r}])"),
                "0",
            );
            w.exact(
                &format!("xs_{m}_{n}{r}"),
                &format!("comm(xc[{m}], sspin[{n},{r}])"),
                "0",
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("Dxc_{m}"),
            &format!("comm(D, xc[{m}])"),
            &format!("-xc[{m}]"),
        );
    }
    for (m, n) in pairs() {
        for r in 0..4 {
            w.exact(
                &format!("Jxc_{m}{n}_{r}"),
                &format!("comm(J[{m},{n}], xc[{r}])"),
                &vector_law("xc", m, n, r),
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("Pgamma5_{m}"),
            &format!("comm(P[{m}], gamma5)"),
            "0",
        );
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("Jgamma5_{m}{n}"),
            &format!("comm(J[{m},{n}], gamma5)"),
            "0",
        );
    }
    w.exact("Dgamma5", "comm(D, gamma5)", "0");
    w.exact("gamma5_square", "gamma5*gamma5", "1");
}

fn clifford(w: &mut Writer) {
    w.section("clifford", "Mass sign, velocities and Clifford generators");
    w.exact("eps_square", "eps*eps", "1");
    w.exact("gamma5_eps", "dot(gamma5, eps)", "0");
    w.exact("gamma5_M", "dot(gamma5, M)", "0");
    for m in 0..4 {
        w.exact(&format!("Peps_{m}"), &format!("comm(P[{m}], eps)"), "0");
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("Jeps_{m}{n}"),
            &format!("comm(J[{m},{n}], eps)"),
            "0",
        );
    }
    w.exact("Deps", "comm(D, eps)", "0");
    w.exact("M_sign", "M", "eps*Mabs");
    for m in 0..4 {
        w.exact(
            &format!("V_{m}"),
            &format!("comm(Xh[{m}], M)"),
            &format!("V[{m}]"),
        );
    }
    for m in 0..4 {
        w.exact(
            &format!("gamma_xM_{m}"),
            &format!("comm(xc[{m}], M)"),
            &format!("gamma[{m}]"),
        );
        w.exact(
            &format!("gamma_VS_{m}"),
            &format!("hbar*gamma[{m}]"),
            &format!("hbar*V[{m}] - 2*gamma5*Svec[{m}]"),
        );
        w.exact(
            &format!("Svec_gamma5_{m}"),
            &format!("dot(Svec[{m}], gamma5)"),
            "0",
        );
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("s_gamma_{m}{n}"),
            &format!("sspin[{m},{n}]"),
            &format!("-1/4*hbar^2*comm(gamma[{m}], gamma[{n}])"),
        );
    }
    w.exact(
        "Dirac_left",
        "M",
        &contract(|mu| format!("P[{mu}]*gamma[{mu}]")),
    );
    w.exact(
        "Dirac_right",
        "M",
        &contract(|mu| format!("gamma[{mu}]*P[{mu}]")),
    );
    for m in 0..4 {
        for n in m..4 {
            w.exact(
                &format!("Clifford_{m}{n}"),
                &format!("dot(gamma[{m}], gamma[{n}])"),
                &lin(&[(e(m, n), "1".into())]),
            );
        }
    }
    for m in 0..4 {
        for n in 0..4 {
            w.exact(
                &format!("Pgamma_{m}_{n}"),
                &format!("comm(P[{m}], gamma[{n}])"),
                "0",
            );
            w.exact(
                &format!("xgamma_{m}_{n}"),
                &format!("comm(xc[{m}], gamma[{n}])"),
                "0",
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("gamma5_gamma_{m}"),
            &format!("dot(gamma5, gamma[{m}])"),
            "0",
        );
    }
    w.exact(
        "gamma5_product",
        "gamma5",
        "i*gamma[0]*gamma[1]*gamma[2]*gamma[3]",
    );
    for m in 0..4 {
        for n in m..4 {
            let rhs = if m == n {
                format!(
                    "-1/4*hbar^2*({} - P[{m}]*P[{m}]*Minv2)",
                    lin(&[(e(m, m), "1".into())])
                )
            } else {
                format!("1/4*hbar^2*P[{m}]*P[{n}]*Minv2")
            };
            w.exact(
                &format!("spinonehalf_{m}{n}"),
                &format!("dot(Svec[{m}], Svec[{n}])"),
                &rhs,
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("spin_vector_{m}"),
            &format!("Svec[{m}]"),
            &format!("-1/2*hbar*gamma5*(gamma[{m}] - V[{m}])"),
        );
    }
    w.raw(&format!(
        "spin_vector_magnitude := {} == -3/4*hbar^2 @ exact | extract per hbar^2",
        contract(|mu| format!("Svec[{mu}]*Svec[{mu}]"))
    ));
}

fn conformal(w: &mut Writer) {
    w.section("conformal", "Special conformal generators");
    for m in 0..4 {
        for n in 0..4 {
            let rhs = lin(&[(-2 * e(m, n), "D".into()), (-2, format!("J[{m},{n}]"))]);
            let rhs = if m == n {
                lin(&[(-2 * e(m, n), "D".into())])
            } else {
                rhs
            };
            w.exact(
                &format!("PC_{m}_{n}"),
                &format!("comm(P[{m}], C[{n}])"),
                &rhs,
            );
        }
    }
    for (m, n) in pairs() {
        for r in 0..4 {
            w.exact(
                &format!("JC_{m}{n}_{r}"),
                &format!("comm(J[{m},{n}], C[{r}])"),
                &vector_law("C", m, n, r),
            );
        }
    }
    for m in 0..4 {
        w.exact(
            &format!("DC_{m}"),
            &format!("comm(D, C[{m}])"),
            &format!("-C[{m}]"),
        );
    }
    for (m, n) in pairs() {
        w.exact(&format!("CC_{m}{n}"), &format!("comm(C[{m}], C[{n}])"), "0");
    }
}

fn frame_laws(w: &mut Writer) {
    w.section("frames", "Finite transformations to accelerated frames");
    w.exact("mass_conjugate", "conj(M; order=2)", "dot(M, lambdainv)");
    w.exact("mass_termination", "comm(comm(comm(M, aC), aC), aC)", "0");
    w.raw("mass_reciprocal := dot(conj(M), 1 + 2*conj(ax) + alpha2*conj(x2)) == M @ order 3");
    for m in 0..4 {
        w.raw(&format!(
            "position_{m} := lambdainv*conj(xc[{m}]) == {} @ order 3",
            lin(&[
                (1, format!("xc[{m}]")),
                (-(metric(m) as i64), format!("x2*alpha[{m}]"))
            ])
        ));
    }
    for check in [
        "mass",
        "position",
        "metric",
        "tetrad",
        "momentum",
        "commutators",
        "reciprocity",
        "homomorphism",
    ] {
        w.raw(&format!("{check}_law := check {check} @ order 3"));
    }
    w.raw("hermitian_forms := check hermitian @ exact");
}

fn adjoint(w: &mut Writer) {
    w.section("adjoint", "Hermiticity of the localization observables");
    for m in 0..4 {
        w.exact(
            &format!("adj_Xh_{m}"),
            &format!("adj(Xh[{m}])"),
            &format!("Xh[{m}]"),
        );
    }
    for (m, n) in pairs() {
        w.exact(
            &format!("adj_S_{m}{n}"),
            &format!("adj(S[{m},{n}])"),
            &format!("S[{m},{n}]"),
        );
        w.exact(
            &format!("adj_J_{m}{n}"),
            &format!("adj(J[{m},{n}])"),
            &format!("J[{m},{n}]"),
        );
    }
    w.exact("adj_M", "adj(M)", "M");
    w.exact("adj_D", "adj(D)", "D");
    for m in 0..4 {
        w.exact(
            &format!("adj_C_{m}"),
            &format!("adj(C[{m}])"),
            &format!("C[{m}]"),
        );
    }
    w.exact("adj_gamma5", "adj(gamma5)", "gamma5");
    w.exact("adj_eps", "adj(eps)", "eps");
    for m in 0..4 {
        w.exact(
            &format!("adj_shift_{m}"),
            &format!("adj(xc[{m}] - Xh[{m}])"),
            &format!("Xh[{m}] - xc[{m}]"),
        );
    }
}

/// Builds the default manifest text from scratch.
pub fn generate_default_manifest() -> String {
    let mut w = Writer { out: String::new() };
    hermitian(&mut w);
    canonical(&mut w);
    clifford(&mut w);
    conformal(&mut w);
    frame_laws(&mut w);
    adjoint(&mut w);
    w.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_file_matches_generator() {
        assert_eq!(DEFAULT_MANIFEST, generate_default_manifest());
    }

    #[test]
    fn lin_formatting() {
        assert_eq!(lin(&[]), "0");
        assert_eq!(lin(&[(0, "a".into()), (-1, "b".into())]), "-b");
        assert_eq!(
            lin(&[(1, "a".into()), (-2, "b".into()), (1, "c".into())]),
            "a - 2*b + c"
        );
    }

    #[test]
    fn shipped_manifest_parses() {
        let m = default_manifest().unwrap();
        assert!(m.entries.len() > 400);
        assert_eq!(
            m.tags(),
            vec![
                "hermitian",
                "canonical",
                "clifford",
                "conformal",
                "frames",
                "adjoint"
            ]
        );
    }
}
