//! Finite groups given by Cayley tables, and the family `U_{6n}`.
//!
//! Every group is stored as a dense multiplication table over element indices.
//! [`u6n_group`] fills the table from the normal-form law
//! `(a^i b^k)(a^j b^l) = a^{i+j} b^{(-1)^j k + l}`; [`group_from_table`]
//! validates an arbitrary table. Center and centralizers are always computed
//! by commutation tests over the table.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables up to this order get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 200;
/// Number of random triples checked for larger tables.
pub const ASSOCIATIVITY_SAMPLES: usize = 100_000;

/// An element `a^i b^k` of `U_{6n}` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct U6nElement {
    pub a_exp: usize,
    pub b_exp: usize,
}

impl U6nElement {
    /// Builds `a^a_exp b^b_exp`, reducing the exponents modulo `2n` and `3`.
    pub fn new(n: usize, a_exp: usize, b_exp: usize) -> Self {
        U6nElement {
            a_exp: a_exp % (2 * n),
            b_exp: b_exp % 3,
        }
    }

    pub fn identity() -> Self {
        U6nElement { a_exp: 0, b_exp: 0 }
    }

    /// Element index in the table: `3 * a_exp + b_exp`.
    pub fn index(self) -> usize {
        3 * self.a_exp + self.b_exp
    }

    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        if index >= 6 * n {
            return Err(Error::IndexOutOfRange {
                what: "U6n element",
                index,
                size: 6 * n,
            });
        }
        Ok(U6nElement {
            a_exp: index / 3,
            b_exp: index % 3,
        })
    }

    /// Normal-form product in `U_{6n}`.
    pub fn mul(self, other: Self, n: usize) -> Self {
        // b^k a^j = a^j b^{(-1)^j k}
        let k = if other.a_exp.is_multiple_of(2) {
            self.b_exp
        } else {
            (3 - self.b_exp) % 3
        };
        U6nElement::new(n, self.a_exp + other.a_exp, k + other.b_exp)
    }
}

impl fmt::Display for U6nElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a_exp == 0 && self.b_exp == 0 {
            return f.write_str("1");
        }
        match self.a_exp {
            0 => {}
            1 => f.write_str("a")?,
            i => write!(f, "a^{i}")?,
        }
        match self.b_exp {
            0 => {}
            1 => f.write_str("b")?,
            k => write!(f, "b^{k}")?,
        }
        Ok(())
    }
}

/// A finite group stored as a Cayley table over indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    parameter_n: Option<usize>,
}

/// Cayley-table file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyTable {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `Some(n)` when the group was built by [`u6n_group`].
    pub fn parameter_n(&self) -> Option<usize> {
        self.parameter_n
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "group",
                index: x,
                size: self.order(),
            })
        }
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y]
    }

    pub fn multiply(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub fn inverse(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        Ok(self.inverses[x])
    }

    pub fn commute(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y) == self.mul_unchecked(y, x))
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> BTreeSet<usize> {
        (0..self.order())
            .filter(|&x| (0..self.order()).all(|y| self.mul_unchecked(x, y) == self.mul_unchecked(y, x)))
            .collect()
    }

    /// `{y : xy = yx}`.
    pub fn centralizer(&self, x: usize) -> Result<BTreeSet<usize>> {
        self.check(x)?;
        Ok((0..self.order())
            .filter(|&y| self.mul_unchecked(x, y) == self.mul_unchecked(y, x))
            .collect())
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.mul_unchecked(x, y) == self.mul_unchecked(y, x)))
    }

    /// Index of the element with the given label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Normal form of element `x` of a constructed `U_{6n}`.
    pub fn u6n_element(&self, x: usize) -> Result<U6nElement> {
        let n = self.parameter_n.ok_or_else(|| {
            Error::UnsupportedGroup("group was not constructed as U6n".into())
        })?;
        U6nElement::from_index(n, x)
    }

    /// Splits the non-central elements of a constructed `U_{6n}` into the
    /// four centralizer classes:
    ///
    /// * `Ω1 = {a^{2r+1}}`
    /// * `Ω2 = {a^{2r+1} b}`
    /// * `Ω3 = {a^{2r+1} b^2}`
    /// * `Ω4 = {a^{2r} b, a^{2r} b^2}`
    pub fn omega_partition(&self) -> Result<OmegaPartition> {
        let n = self.parameter_n.ok_or_else(|| {
            Error::UnsupportedGroup("the Omega partition is only defined for U6n".into())
        })?;
        let mut part = OmegaPartition::default();
        for x in 0..self.order() {
            let e = U6nElement::from_index(n, x)?;
            let class = match (e.a_exp % 2, e.b_exp) {
                (0, 0) => continue,
                (1, 0) => &mut part.omega1,
                (1, 1) => &mut part.omega2,
                (1, 2) => &mut part.omega3,
                _ => &mut part.omega4,
            };
            class.insert(x);
        }
        Ok(part)
    }

    pub fn to_cayley_table(&self) -> CayleyTable {
        let n = self.order();
        CayleyTable {
            labels: self.labels.clone(),
            table: (0..n).map(|x| self.table[x * n..(x + 1) * n].to_vec()).collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let t: CayleyTable = serde_json::from_str(s)?;
        group_from_table(t.labels, t.table)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }
}

/// Constructs `U_{6n}` from its normal form; elements are indexed by
/// `3 * a_exp + b_exp`.
pub fn u6n_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let order = 6 * n;
    let elements: Vec<U6nElement> = (0..order).map(|i| U6nElement::from_index(n, i)).collect::<Result<_>>()?;
    let mut table = Vec::with_capacity(order * order);
    for x in &elements {
        for y in &elements {
            table.push(x.mul(*y, n).index());
        }
    }
    let inverses = elements
        .iter()
        .map(|x| {
            // (a^i b^k)^{-1} = b^{-k} a^{-i} = a^{-i} b^{-(-1)^i k}
            let k = if x.a_exp % 2 == 0 { 3 - x.b_exp } else { x.b_exp };
            U6nElement::new(n, 2 * n - x.a_exp, k).index()
        })
        .collect();
    Ok(FiniteGroup {
        labels: elements.iter().map(|e| e.to_string()).collect(),
        table,
        identity: 0,
        inverses,
        parameter_n: Some(n),
    })
}

/// Validates a Cayley table (closure, identity, inverses, associativity) and
/// wraps it as a group. The identity is detected, not assumed to be index 0.
pub fn group_from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    let order = labels.len();
    if order == 0 {
        return Err(Error::Validation("a group needs at least one element".into()));
    }
    if table.len() != order {
        return Err(Error::Validation(format!(
            "table has {} rows but there are {order} labels",
            table.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for l in &labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::Validation(format!("duplicate label `{l}`")));
        }
    }
    let mut flat = Vec::with_capacity(order * order);
    for (r, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(Error::Validation(format!(
                "row {r} has {} entries, expected {order}",
                row.len()
            )));
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= order {
                return Err(Error::Validation(format!(
                    "entry ({r}, {c}) = {v} is outside 0..{order} (not closed)"
                )));
            }
        }
        flat.extend_from_slice(row);
    }
    let at = |x: usize, y: usize| flat[x * order + y];

    let identity = (0..order)
        .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or_else(|| Error::Validation("no element acts as a two-sided identity".into()))?;

    let mut inverses = Vec::with_capacity(order);
    for (x, label) in labels.iter().enumerate() {
        let inv = (0..order)
            .find(|&y| at(x, y) == identity && at(y, x) == identity)
            .ok_or_else(|| Error::Validation(format!("element {x} (`{label}`) has no two-sided inverse")))?;
        inverses.push(inv);
    }

    let check_triple = |x: usize, y: usize, z: usize| -> Result<()> {
        if at(at(x, y), z) != at(x, at(y, z)) {
            Err(Error::Validation(format!(
                "associativity fails for the triple ({x}, {y}, {z}) = (`{}`, `{}`, `{}`)",
                labels[x], labels[y], labels[z]
            )))
        } else {
            Ok(())
        }
    };
    if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    check_triple(x, y, z)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            check_triple(
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            )?;
        }
    }

    Ok(FiniteGroup {
        labels,
        table: flat,
        identity,
        inverses,
        parameter_n: None,
    })
}

/// The four centralizer classes of non-central elements of `U_{6n}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OmegaPartition {
    pub omega1: BTreeSet<usize>,
    pub omega2: BTreeSet<usize>,
    pub omega3: BTreeSet<usize>,
    pub omega4: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaClass {
    Omega1,
    Omega2,
    Omega3,
    Omega4,
}

impl OmegaClass {
    pub const ALL: [OmegaClass; 4] = [
        OmegaClass::Omega1,
        OmegaClass::Omega2,
        OmegaClass::Omega3,
        OmegaClass::Omega4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OmegaClass::Omega1 => "omega1",
            OmegaClass::Omega2 => "omega2",
            OmegaClass::Omega3 => "omega3",
            OmegaClass::Omega4 => "omega4",
        }
    }

    /// The class a non-central element of `U_{6n}` belongs to.
    pub fn of(e: U6nElement) -> Option<OmegaClass> {
        match (e.a_exp % 2, e.b_exp) {
            (0, 0) => None,
            (1, 0) => Some(OmegaClass::Omega1),
            (1, 1) => Some(OmegaClass::Omega2),
            (1, 2) => Some(OmegaClass::Omega3),
            _ => Some(OmegaClass::Omega4),
        }
    }
}

impl OmegaPartition {
    pub fn class(&self, c: OmegaClass) -> &BTreeSet<usize> {
        match c {
            OmegaClass::Omega1 => &self.omega1,
            OmegaClass::Omega2 => &self.omega2,
            OmegaClass::Omega3 => &self.omega3,
            OmegaClass::Omega4 => &self.omega4,
        }
    }

    pub fn class_of(&self, x: usize) -> Option<OmegaClass> {
        OmegaClass::ALL.into_iter().find(|&c| self.class(c).contains(&x))
    }

    pub fn sizes(&self) -> [usize; 4] {
        OmegaClass::ALL.map(|c| self.class(c).len())
    }

    pub fn union(&self) -> BTreeSet<usize> {
        OmegaClass::ALL
            .iter()
            .flat_map(|&c| self.class(c).iter().copied())
            .collect()
    }
}
