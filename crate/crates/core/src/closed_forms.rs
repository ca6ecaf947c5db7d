//! Closed-form predictions for the non-commuting graph of `U_{6n}` as pure
//! functions of `n`.
//!
//! Nothing here touches a group table or a graph; these are the formulas the
//! exhaustive computations in [`crate::invariants`] are checked against.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{OmegaClass, U6nElement};
use crate::polynomial::IntPolynomial;

/// A predicted or computed quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Ints(Vec<i64>),
    Labels(Vec<String>),
    Poly(IntPolynomial),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Ints(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Labels(v) => write!(f, "[{}]", v.join(", ")),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

/// Range of `n` a formula is claimed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    Full,
    /// The formula assumes every vertex has eccentricity 2, which fails at
    /// `n = 1` where the classes `Ω1..Ω3` are single dominating vertices.
    NGe2,
}

impl Validity {
    pub fn covers(self, n: usize) -> bool {
        match self {
            Validity::Full => true,
            Validity::NGe2 => n >= 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub name: String,
    pub n: usize,
    pub value: Value,
    pub validity: Validity,
}

impl Prediction {
    pub fn new(name: impl Into<String>, n: usize, value: Value) -> Self {
        Prediction {
            name: name.into(),
            n,
            value,
            validity: Validity::Full,
        }
    }

    pub fn with_validity(mut self, validity: Validity) -> Self {
        self.validity = validity;
        self
    }
}

/// `C(n, k)` by the multiplicative recurrence.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at each step: acc * (n - i) is divisible by i + 1
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn n64(n: usize) -> i64 {
    n as i64
}

/// Vertex degree in a class: `4n` on `Ω1..Ω3`, `3n` on `Ω4`.
pub fn cf_degree(class: OmegaClass, n: usize) -> i64 {
    match class {
        OmegaClass::Omega4 => 3 * n64(n),
        _ => 4 * n64(n),
    }
}

pub fn cf_class_size(class: OmegaClass, n: usize) -> i64 {
    match class {
        OmegaClass::Omega4 => 2 * n64(n),
        _ => n64(n),
    }
}

pub fn cf_center_size(n: usize) -> i64 {
    n64(n)
}

pub fn cf_edge_count(n: usize) -> i64 {
    9 * n64(n) * n64(n)
}

pub fn cf_alpha(n: usize) -> i64 {
    2 * n64(n)
}

pub fn cf_tau(n: usize) -> i64 {
    3 * n64(n)
}

/// Common value of the clique and chromatic numbers.
pub fn cf_chi_omega(_n: usize) -> i64 {
    4
}

/// Part sizes of `K_{n,n,n,2n}`, ascending.
pub fn cf_partition_sizes(n: usize) -> Vec<i64> {
    let n = n64(n);
    vec![n, n, n, 2 * n]
}

/// Members of each class by definition, as normal forms.
pub fn cf_omega_class(class: OmegaClass, n: usize) -> Vec<U6nElement> {
    let odd = (0..n).map(|r| 2 * r + 1);
    let mut out: Vec<U6nElement> = match class {
        OmegaClass::Omega1 => odd.map(|i| U6nElement::new(n, i, 0)).collect(),
        OmegaClass::Omega2 => odd.map(|i| U6nElement::new(n, i, 1)).collect(),
        OmegaClass::Omega3 => odd.map(|i| U6nElement::new(n, i, 2)).collect(),
        OmegaClass::Omega4 => (0..n)
            .flat_map(|r| [U6nElement::new(n, 2 * r, 1), U6nElement::new(n, 2 * r, 2)])
            .collect(),
    };
    out.sort();
    out
}

/// Degree of every vertex of the subgraph induced on `Ω1 ∪ Ω2 ∪ Ω3`.
pub fn cf_regular_degree(n: usize) -> i64 {
    2 * n64(n)
}

pub fn cf_metric_dimension(n: usize) -> i64 {
    if n == 1 {
        3
    } else {
        5 * n64(n) - 4
    }
}

/// `x^3 (x + 2)(x + 3)` for `n = 1`, otherwise `x^{5n-4} (x + n)^3 (x + 2n)`,
/// expanded.
pub fn cf_resolving_polynomial(n: usize) -> IntPolynomial {
    let linear = |c: i64| IntPolynomial::from_coefficients([c, 1]);
    if n == 1 {
        IntPolynomial::monomial(3, 1).mul(&linear(2)).mul(&linear(3))
    } else {
        let n = n64(n);
        IntPolynomial::monomial((5 * n - 4) as u32, 1)
            .mul(&linear(n).pow(3))
            .mul(&linear(2 * n))
    }
}

/// Counts of resolving sets of sizes `5n-4, ..., 5n` by the counting
/// argument: `2n^4, 7n^3, 9n^2, 5n, 1`. At `n = 1` the sequence of the
/// expanded `n = 1` polynomial.
pub fn cf_resolving_sequence(n: usize) -> Vec<i64> {
    if n == 1 {
        return vec![6, 5, 1];
    }
    let n = n64(n);
    vec![2 * n.pow(4), 7 * n.pow(3), 9 * n * n, 5 * n, 1]
}

/// Roots of the resolving polynomial, ascending.
pub fn cf_resolving_roots(n: usize) -> Vec<i64> {
    if n == 1 {
        vec![-3, -2, 0]
    } else {
        let n = n64(n);
        vec![-2 * n, -n, 0]
    }
}

/// Detour distance between any two distinct vertices: `5n - 1`.
pub fn cf_detour_distance(n: usize) -> i64 {
    5 * n64(n) - 1
}

/// `(5n(5n-1)/2) x^{5n-1}`
pub fn cf_detour_polynomial(n: usize) -> IntPolynomial {
    let v = 5 * n64(n);
    IntPolynomial::monomial((v - 1) as u32, v * (v - 1) / 2)
}

/// `5n(5n-1)^2 / 2`
pub fn cf_detour_index(n: usize) -> BigInt {
    let v = BigInt::from(5 * n64(n));
    &v * (&v - 1) * (&v - 1) / 2
}

/// Every vertex has eccentricity 2.
pub fn cf_eccentricity(n: usize) -> Prediction {
    Prediction::new("eccentricity.values", n, Value::Ints(vec![2])).with_validity(Validity::NGe2)
}

/// `5n x^2`
pub fn cf_total_eccentricity_polynomial(n: usize) -> Prediction {
    Prediction::new(
        "total_eccentricity",
        n,
        Value::Poly(IntPolynomial::monomial(2, 5 * n64(n))),
    )
    .with_validity(Validity::NGe2)
}

/// `18n^2 x^2`
pub fn cf_eccentric_connectivity_polynomial(n: usize) -> Prediction {
    Prediction::new(
        "eccentric_connectivity",
        n,
        Value::Poly(IntPolynomial::monomial(2, 18 * n64(n) * n64(n))),
    )
    .with_validity(Validity::NGe2)
}

/// `1 + sum_{k=1}^{n} (C(2n,k) + 3C(n,k)) x^k + sum_{k=n+1}^{2n} C(2n,k) x^k`
pub fn cf_independence_polynomial(n: usize) -> IntPolynomial {
    let m = n as u64;
    let mut p = IntPolynomial::one();
    for k in 1..=m {
        p.add_term(k as u32, binomial(2 * m, k) + 3 * binomial(m, k));
    }
    for k in m + 1..=2 * m {
        p.add_term(k as u32, binomial(2 * m, k));
    }
    p
}

/// `x^{5n} + sum_{k=1}^{n} (C(2n,k) + 3C(n,k)) x^{5n-k} + sum_{k=n+1}^{2n} C(2n,k) x^{5n-k}`
pub fn cf_vertex_cover_polynomial(n: usize) -> IntPolynomial {
    let m = n as u64;
    let top = 5 * m;
    let mut p = IntPolynomial::monomial(top as u32, 1);
    for k in 1..=m {
        p.add_term((top - k) as u32, binomial(2 * m, k) + 3 * binomial(m, k));
    }
    for k in m + 1..=2 * m {
        p.add_term((top - k) as u32, binomial(2 * m, k));
    }
    p
}

/// Centralizer of `x` in `U_{6n}` for `x` in the given class:
///
/// * `Ω1`: `<a>`
/// * `Ω2`: `<a^2> · <a^{2s+1} b>` = `{a^{2s}} ∪ {a^{2s+1} b}`
/// * `Ω3`: `<a^2> · <a^{2s+1} b^2>` = `{a^{2s}} ∪ {a^{2s+1} b^2}`
/// * `Ω4`: `<a^2> · <a^{2s} b, a^{2s} b^2>` = `{a^{2s} b^k}`
pub fn cf_centralizer(class: OmegaClass, x: U6nElement, n: usize) -> Result<BTreeSet<U6nElement>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if x.a_exp >= 2 * n || x.b_exp >= 3 || OmegaClass::of(x) != Some(class) {
        return Err(Error::InvalidParameter(format!(
            "{x} is not an element of {} in U_{}",
            class.name(),
            6 * n
        )));
    }
    let e = |i: usize, k: usize| U6nElement::new(n, i, k);
    let evens = (0..n).map(|s| e(2 * s, 0));
    let set = match class {
        OmegaClass::Omega1 => (0..2 * n).map(|i| e(i, 0)).collect(),
        OmegaClass::Omega2 => evens.chain((0..n).map(|s| e(2 * s + 1, 1))).collect(),
        OmegaClass::Omega3 => evens.chain((0..n).map(|s| e(2 * s + 1, 2))).collect(),
        OmegaClass::Omega4 => (0..n).flat_map(|s| (0..3).map(move |k| e(2 * s, k))).collect(),
    };
    Ok(set)
}
