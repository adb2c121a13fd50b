//! Sparse exact-integer polynomials in one or two variables.

use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in two variables with i64 coefficients. Used with
/// (z, x) for catalytic-parameter series and with (q, t) for statistics.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({})", self.display("q", "t"))
    }
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::monomial(0, 0, 1)
    }

    pub fn monomial(i: u32, j: u32, c: i64) -> Self {
        let mut p = BivarPoly::default();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        *self.coeffs.get(&(i, j)).unwrap_or(&0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::default();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> BivarPoly {
        let mut out = BivarPoly::default();
        for ((i, j), v) in self.terms() {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// Evaluation with both variables set to 1.
    pub fn eval_ones(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Invariance under exchanging the two variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|((i, j), c)| self.coeff(j, i) == c)
    }

    /// Deterministic rendering with the given variable names.
    pub fn display(&self, a: &str, b: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for ((i, j), c) in self.coeffs.iter().rev() {
            let mut term = String::new();
            if *c != 1 || (*i == 0 && *j == 0) {
                term.push_str(&c.to_string());
            }
            for (var, e) in [(a, i), (b, j)] {
                if *e == 1 {
                    if !term.is_empty() && !term.ends_with('-') {
                        term.push('*');
                    }
                    term.push_str(var);
                } else if *e > 1 {
                    if !term.is_empty() && !term.ends_with('-') {
                        term.push('*');
                    }
                    term.push_str(&format!("{var}^{e}"));
                }
            }
            parts.push(term);
        }
        parts.join(" + ")
    }

    /// JSON object keyed by "q^i t^j".
    pub fn to_json(&self, a: &str, b: &str) -> String {
        let items: Vec<String> = self
            .coeffs
            .iter()
            .map(|((i, j), c)| format!("\"{a}^{i} {b}^{j}\":{c}"))
            .collect();
        format!("{{{}}}", items.join(","))
    }
}

/// A univariate polynomial with i64 coefficients, dense representation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    /// coefficient of x^i at index i; no trailing zeros
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![0, 1],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0i64; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// The divided difference (x P(x) - P(1)) / (x - 1), computed exactly
    /// as suffix sums of the coefficients.
    pub fn divided_difference(&self) -> UniPoly {
        let mut out = vec![0i64; self.coeffs.len()];
        let mut suffix = 0i64;
        for i in (0..self.coeffs.len()).rev() {
            suffix += self.coeffs[i];
            out[i] = suffix;
        }
        UniPoly::from_coeffs(out)
    }
}
