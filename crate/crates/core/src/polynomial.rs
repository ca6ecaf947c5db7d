//! Sparse univariate polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial stored as exponent → non-zero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Merges duplicate exponents and drops zero coefficients.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Result<Self> {
        let mut p = Self::zero();
        for (exp, c) in terms {
            let exp = u32::try_from(exp)
                .map_err(|_| Error::InvalidParameter(format!("exponent {exp} is not a non-negative 32-bit integer")))?;
            p.add_term(exp, c.into());
        }
        Ok(p)
    }

    /// Polynomial whose coefficient of `x^i` is `coeffs[i]`.
    pub fn from_coefficients<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(i as u32, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with a non-zero coefficient.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coefficient(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Dense coefficient list `[c_0, ..., c_deg]`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coefficient(e)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Horner evaluation.
    pub fn evaluate(&self, v: &BigInt) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for e in (0..=deg).rev() {
            acc = acc * v + self.coefficient(e);
        }
        acc
    }

    pub fn evaluate_i64(&self, v: i64) -> BigInt {
        self.evaluate(&BigInt::from(v))
    }

    /// `p'(1) = sum of exp * coeff`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.terms.iter().map(|(&e, c)| c * BigInt::from(e)).sum()
    }

    /// `x^len * p(1/x)`; requires `len >= degree`.
    pub fn reversed(&self, len: u32) -> Result<Self> {
        if self.degree().is_some_and(|d| d > len) {
            return Err(Error::InvalidParameter(format!(
                "cannot reverse a degree-{} polynomial at length {len}",
                self.degree().unwrap_or(0)
            )));
        }
        Ok(IntPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (len - e, c.clone())).collect(),
        })
    }

    /// Distinct integer roots, ascending. Non-zero roots divide the lowest
    /// non-zero coefficient.
    pub fn integer_roots(&self) -> Vec<i64> {
        let Some(low) = self.min_degree() else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(0);
        }
        let trailing = self.coefficient(low).abs();
        if let Some(t) = trailing.to_u64() {
            let mut d = 1u64;
            while d * d <= t {
                if t % d == 0 {
                    for cand in [d, t / d] {
                        for r in [cand as i64, -(cand as i64)] {
                            if self.evaluate_i64(r).is_zero() && !roots.contains(&r) {
                                roots.push(r);
                            }
                        }
                    }
                }
                d += 1;
            }
        }
        roots.sort_unstable();
        roots
    }

    /// Ascending terms `c*x^e` joined by ` + `. Unit coefficients are
    /// omitted on non-constant terms, `x^1` is written `x` and `x^0` is
    /// dropped; the zero polynomial is `0`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let var = match e {
                    0 => return c.to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{e}"),
                };
                if c.is_one() {
                    var
                } else if *c == -BigInt::one() {
                    format!("-{var}")
                } else {
                    format!("{c}*{var}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the canonical format.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = |t: &str| Error::Parse(format!("malformed polynomial term `{t}`"));
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let (coeff, var) = match term.split_once('*') {
                Some((c, v)) => (c.parse::<BigInt>().map_err(|_| bad(term))?, Some(v)),
                None if term.contains('x') => {
                    let (sign, v) = match term.strip_prefix('-') {
                        Some(v) => (-1, v),
                        None => (1, term),
                    };
                    (BigInt::from(sign), Some(v))
                }
                None => (term.parse::<BigInt>().map_err(|_| bad(term))?, None),
            };
            let exp = match var {
                None => 0,
                Some("x") => 1,
                Some(v) => v
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(|| bad(term))?,
            };
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        IntPolynomial::add(self, rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerms {
    terms: Vec<(u32, String)>,
}

/// `{"terms": [[exp, "coeff"], ...]}` sorted by exponent.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonTerms {
            terms: self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = JsonTerms::deserialize(d)?;
        let mut p = IntPolynomial::zero();
        for (e, c) in j.terms {
            let c: BigInt = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let x2 = IntPolynomial::monomial(2, 1);
        assert_eq!(x2.add(&x2), IntPolynomial::monomial(2, 2));
        let x1 = poly("1 + x");
        assert_eq!(x1.mul(&x1), poly("1 + 2*x + x^2"));
        assert!(x2.add(&IntPolynomial::monomial(2, -1)).is_zero());
    }

    #[test]
    fn from_terms_merges_and_drops() {
        let p = IntPolynomial::from_terms([(3, 6), (4, 5), (5, 1)]).unwrap();
        assert_eq!(p.to_canonical_string(), "6*x^3 + 5*x^4 + x^5");
        let q = IntPolynomial::from_terms([(2, 3), (2, -3), (1, 4), (1, 1)]).unwrap();
        assert_eq!(q, IntPolynomial::monomial(1, 5));
        assert!(IntPolynomial::from_terms([(-1, 1)]).is_err());
    }

    #[test]
    fn evaluation() {
        let p = poly("6*x^3 + 5*x^4 + x^5");
        assert!(p.evaluate_i64(-2).is_zero());
        assert!(p.evaluate_i64(-3).is_zero());
        assert_eq!(poly("7 + 2*x").evaluate_i64(0), BigInt::from(7));
        assert_eq!(p.integer_roots(), vec![-3, -2, 0]);
        assert!(IntPolynomial::zero().evaluate_i64(5).is_zero());
    }

    #[test]
    fn derivative() {
        assert_eq!(IntPolynomial::monomial(4, 10).derivative_at_one(), BigInt::from(40));
        assert_eq!(IntPolynomial::monomial(9, 45).derivative_at_one(), BigInt::from(405));
        assert!(IntPolynomial::constant(12).derivative_at_one().is_zero());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(IntPolynomial::zero().to_canonical_string(), "0");
        assert_eq!(IntPolynomial::from_coefficients([1, 5, 1]).to_canonical_string(), "1 + 5*x + x^2");
        assert_eq!(IntPolynomial::monomial(2, 9).to_canonical_string(), "9*x^2");
        assert_eq!(poly("-x + -3*x^2 + 1").to_canonical_string(), "1 + -x + -3*x^2");
        assert!("3*y".parse::<IntPolynomial>().is_err());
        assert!("x^-1".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn reversal_and_roots() {
        let i = poly("1 + 5*x + x^2");
        assert_eq!(i.reversed(5).unwrap(), poly("x^3 + 5*x^4 + x^5"));
        assert!(i.reversed(1).is_err());
        assert_eq!(poly("x^6 + 6*x^5").integer_roots(), vec![-6, 0]);
    }

    #[test]
    fn json_terms() {
        let p = poly("32*x^6 + 56*x^7");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"terms":[[6,"32"],[7,"56"]]}"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&j).unwrap(), p);
    }

    #[test]
    fn big_coefficients_are_exact() {
        // (1 + x)^80 has C(80, 40) ~ 1.08e23 as its middle coefficient
        let p = poly("1 + x").pow(80);
        let expected: BigInt = "107507208733336176461620".parse().unwrap();
        assert_eq!(p.coefficient(40), expected);
        assert_eq!(p.evaluate_i64(1), BigInt::from(2).pow(80));
    }
}
