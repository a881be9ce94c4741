//! Rendering of polynomials and integers in the three output formats.

use fermionic_core::{BigInt, LaurentPoly};

use crate::json::poly_to_json;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// `e / step` in lowest terms, as `"3"` or `"-1/2"`.
pub fn exponent(e: i64, step: u32) -> String {
    let g = gcd(e.unsigned_abs(), step as u64).max(1);
    let (n, d) = (e / g as i64, step as u64 / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{}/{}", n, d)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One row per term: the mathematical exponents, then the coefficient.
pub fn poly_csv(p: &LaurentPoly) -> String {
    let mut out = String::new();
    for v in p.vars() {
        out.push_str(v.name());
        out.push(',');
    }
    out.push_str("coeff\n");
    for (e, c) in p.terms() {
        for (x, v) in e.iter().zip(p.vars()) {
            out.push_str(&exponent(*x, v.step()));
            out.push(',');
        }
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

pub fn render_poly(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Json => poly_to_json(p) + "\n",
        Format::Csv => poly_csv(p),
        Format::Pretty => format!("{}\n", p),
    }
}

pub fn render_int(name: &str, n: &BigInt, format: Format) -> String {
    match format {
        Format::Json => format!("{{\"{}\":\"{}\"}}\n", name, n),
        Format::Csv => format!("{}\n{}\n", name, n),
        Format::Pretty => format!("{}\n", n),
    }
}
