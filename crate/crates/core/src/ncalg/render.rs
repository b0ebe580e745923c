use serde_json::{json, Value};

use super::{Key, NCElement, XMonomial};
use crate::clifford::CliffordWord;
use crate::scalars::{GaussianRational, MonomialOrder, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub order: MonomialOrder,
    /// Print `i g0 g1 g2 g3` as `gamma5`.
    pub gamma5_alias: bool,
}

fn x_text(x: &XMonomial, latex: bool) -> String {
    let mut parts = Vec::new();
    for (k, &e) in x.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let base = if latex {
            format!("x_{{{k}}}")
        } else {
            format!("x{k}")
        };
        parts.push(match (e, latex) {
            (1, _) => base,
            (_, true) => format!("{base}^{{{e}}}"),
            (_, false) => format!("{base}^{e}"),
        });
    }
    parts.join(if latex { " " } else { "*" })
}

fn parenthesize(s: &Scalar, text: String) -> String {
    if s.len() > 1 {
        format!("({text})")
    } else {
        text
    }
}

/// Joins monomials with ` + `, folding a leading minus into ` - `.
fn join_signed(lines: Vec<String>) -> String {
    let mut out = String::new();
    for (k, line) in lines.into_iter().enumerate() {
        match (k, line.strip_prefix('-')) {
            (0, _) => out.push_str(&line),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&line);
            }
        }
    }
    out
}

impl NCElement {
    fn ordered_terms(&self, order: MonomialOrder) -> Vec<(&Key, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        if order == MonomialOrder::Descending {
            v.reverse();
        }
        v
    }

    fn line(key: &Key, s: &Scalar, opts: &RenderOptions, latex: bool) -> String {
        let (word_text, scalar) = if opts.gamma5_alias && key.word == CliffordWord::VOLUME {
            let alias = if latex { "\\gamma" } else { "gamma5" };
            (alias.to_string(), s.scale(-GaussianRational::i()))
        } else if latex {
            (key.word.render_latex(), s.clone())
        } else {
            (key.word.to_string(), s.clone())
        };
        let scalar_text = if latex {
            scalar.render_latex(opts.order)
        } else {
            scalar.render(opts.order)
        };
        let mul = if latex { " " } else { "*" };
        let has_word = key.word != CliffordWord::IDENTITY;
        if key.x == XMonomial::ONE {
            // no positions: scalar and word commute, print the scalar first
            match (has_word, scalar.is_one()) {
                (false, _) => scalar_text,
                (true, true) => word_text,
                (true, false) => format!("{}{mul}{word_text}", parenthesize(&scalar, scalar_text)),
            }
        } else {
            let mut out = x_text(&key.x, latex);
            if has_word {
                out.push_str(mul);
                out.push_str(&word_text);
            }
            if !scalar.is_one() {
                out.push_str(mul);
                out.push_str(&parenthesize(&scalar, scalar_text));
            }
            out
        }
    }

    /// Plain rendering, one monomial per line.
    pub fn render_plain(&self, opts: &RenderOptions) -> String {
        if self.is_zero() {
            return "0\n".to_string();
        }
        let mut out = String::new();
        for (k, s) in self.ordered_terms(opts.order) {
            out.push_str(&Self::line(k, s, opts, false));
            out.push('\n');
        }
        out
    }

    /// Plain rendering on a single line, monomials joined by ` + `.
    pub fn render_plain_inline(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let opts = RenderOptions::default();
        let lines = self
            .ordered_terms(opts.order)
            .into_iter()
            .map(|(k, s)| Self::line(k, s, &opts, false))
            .collect::<Vec<_>>();
        join_signed(lines)
    }

    pub fn render_latex(&self, opts: &RenderOptions) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let lines = self
            .ordered_terms(opts.order)
            .into_iter()
            .map(|(k, s)| Self::line(k, s, opts, true))
            .collect::<Vec<_>>();
        join_signed(lines)
    }

    pub fn render_json(&self, opts: &RenderOptions) -> Value {
        let terms: Vec<Value> = self
            .ordered_terms(opts.order)
            .into_iter()
            .map(|(k, s)| {
                json!({
                    "x": k.x.0,
                    "word": k.word.indices().collect::<Vec<_>>(),
                    "scalar": s.render(opts.order),
                })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl std::fmt::Display for NCElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_plain_inline())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma5_rendering() {
        let g5 = NCElement::gamma5();
        assert_eq!(
            g5.render_plain(&RenderOptions::default()),
            "i*g0 g1 g2 g3\n"
        );
        let alias = RenderOptions {
            gamma5_alias: true,
            ..Default::default()
        };
        assert_eq!(g5.render_plain(&alias), "gamma5\n");
    }

    #[test]
    fn lines_are_ordered_and_stable() {
        let e = NCElement::x(1).mul_scalar_right(&(Scalar::p(0) + Scalar::hbar()))
            + NCElement::gamma(0)
            + NCElement::int(3);
        let text = e.render_plain(&RenderOptions::default());
        assert_eq!(text, "3\ng0\nx1*(p0 + hbar)\n");
        let desc = RenderOptions {
            order: MonomialOrder::Descending,
            ..Default::default()
        };
        assert_eq!(e.render_plain(&desc), "x1*(hbar + p0)\ng0\n3\n");
        assert_eq!(
            NCElement::zero().render_plain(&RenderOptions::default()),
            "0\n"
        );
    }
}
