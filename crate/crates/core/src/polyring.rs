//! Exact polynomial arithmetic over the rationals, used as the symmetric
//! algebra of the dual Lie algebra of the torus.
//!
//! Degrees stored here are polynomial degrees. The cohomological degree of a
//! homogeneous polynomial is twice its polynomial degree (each variable sits
//! in degree two).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GkmError, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational text form used throughout reports and documents: `a` or `a/b`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde helper writing a rational in its text form.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Serde helper writing a matrix of rationals as nested string arrays.
pub fn serialize_matrix<S: serde::Serializer>(m: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let text: Vec<String> = row.iter().map(format_rational).collect();
        seq.serialize_element(&text)?;
    }
    seq.end()
}

/// A vector in t* (or t), with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(components: Vec<Rational>) -> Self {
        WeightVector(components)
    }

    pub fn from_ints(components: &[i64]) -> Self {
        WeightVector(components.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![Rational::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &WeightVector) -> Rational {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in pairing");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Rational) -> WeightVector {
        WeightVector(self.0.iter().map(|c| c * s).collect())
    }

    /// Returns `Some(s)` with `self = s * other` when `other` is nonzero and the
    /// two vectors are parallel.
    pub fn ratio_to(&self, other: &WeightVector) -> Option<Rational> {
        let pivot = other.0.iter().position(|c| !c.is_zero())?;
        let s = &self.0[pivot] / &other.0[pivot];
        (other.scale(&s) == *self).then_some(s)
    }

    /// Two vectors are linearly dependent iff every 2x2 minor vanishes.
    pub fn is_parallel(&self, other: &WeightVector) -> bool {
        let k = self.rank();
        for i in 0..k {
            for j in (i + 1)..k {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }

    /// Planar cross product `a_x b_y - a_y b_x`. Rank two only.
    pub fn cross(&self, other: &WeightVector) -> Rational {
        assert!(self.rank() == 2 && other.rank() == 2, "cross product needs rank 2");
        &self.0[0] * &other.0[1] - &self.0[1] * &other.0[0]
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.rank(), rhs.rank());
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.rank(), rhs.rank());
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|c| -c).collect())
    }
}

/// Exponent vector. Ordered graded-lexicographically with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn variable(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `d` in `rank` variables, in descending
    /// graded-lex order.
    pub fn all_of_degree(rank: usize, d: usize) -> Vec<Monomial> {
        fn rec(rank: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == rank {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(rank, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if rank == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(rank, d as u32, &mut Vec::with_capacity(rank), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `rank` variables with rational coefficients. Zero
/// coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(rank: usize) -> Self {
        Polynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(rank, Monomial::one(rank), c)
    }

    pub fn variable(rank: usize, i: usize) -> Self {
        Self::monomial(rank, Monomial::variable(rank, i), Rational::one())
    }

    pub fn monomial(rank: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), rank, "monomial has wrong number of exponents");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { rank, terms }
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(rank);
        for (m, c) in terms {
            assert_eq!(m.0.len(), rank, "monomial has wrong number of exponents");
            p.add_term(m, c);
        }
        p
    }

    /// The linear form `sum_i w_i x_i`.
    pub fn lin_form(w: &WeightVector) -> Self {
        let k = w.rank();
        Polynomial::from_terms(
            k,
            w.components()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::variable(k, i), c.clone())),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Constant coefficient when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coefficient(&Monomial::one(self.rank))),
            Some(_) => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Polynomial) -> Result<()> {
        if self.rank != other.rank {
            return Err(GkmError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_rank(other)?;
        let mut out = Polynomial::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.rank);
        }
        Polynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        (0..e).fold(Polynomial::one(self.rank), |acc, _| &acc * self)
    }

    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        Polynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &WeightVector) -> Result<Rational> {
        if point.rank() != self.rank {
            return Err(GkmError::RankMismatch {
                expected: self.rank,
                found: point.rank(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.components().iter().zip(&m.0) {
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// For a nonzero linear form, the first variable with a nonzero coefficient.
    fn linear_pivot(l: &Polynomial) -> Result<(usize, Rational)> {
        if l.is_zero() || l.degree() != Some(1) || !l.is_homogeneous() {
            return Err(GkmError::DegreeError(format!(
                "expected a nonzero homogeneous linear form, got {l}"
            )));
        }
        // Descending grlex puts x1 first among degree-one monomials.
        let (m, c) = l.terms.iter().next_back().expect("nonzero");
        let j = m.0.iter().position(|&e| e == 1).expect("degree one");
        Ok((j, c.clone()))
    }

    /// Exact quotient `f / l` for a homogeneous linear form `l`.
    ///
    /// Reduction eliminates the first variable `x_j` occurring in `l`: the
    /// term with the largest power of `x_j` is cancelled against
    /// `(term / (a x_j)) * l`. Once no term involves `x_j`, anything left is a
    /// nonzero remainder.
    pub fn divide_by_linear(&self, l: &Polynomial) -> Result<Polynomial> {
        self.check_rank(l)?;
        let (j, lead) = Self::linear_pivot(l)?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.rank);
        loop {
            let best = rest
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a.0[j].cmp(&b.0[j]).then_with(|| a.cmp(b)))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = best else { break };
            if m.0[j] == 0 {
                return Err(GkmError::NotDivisible(self.to_string(), l.to_string()));
            }
            let mut qm = m.clone();
            qm.0[j] -= 1;
            let qc = &c / &lead;
            let step = Polynomial::monomial(self.rank, qm.clone(), qc.clone());
            rest = rest.checked_sub(&(&step * l))?;
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Substitutes the kernel of `l` (solving `l = 0` for its pivot variable).
    /// The result vanishes iff `l` divides `self`.
    pub fn restrict_to_kernel(&self, l: &Polynomial) -> Result<Polynomial> {
        self.check_rank(l)?;
        let (j, lead) = Self::linear_pivot(l)?;
        // x_j = -(sum_{i != j} l_i x_i) / l_j
        let mut replacement = Polynomial::zero(self.rank);
        for (m, c) in &l.terms {
            if m.0[j] == 0 {
                replacement.add_term(m.clone(), -(c / &lead));
            }
        }
        let mut out = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            let mut stripped = m.clone();
            let e = stripped.0[j];
            stripped.0[j] = 0;
            let base = Polynomial::monomial(self.rank, stripped, c.clone());
            out = &out + &(&base * &replacement.pow(e as usize));
        }
        Ok(out)
    }
}

pub fn congruent_mod_linear(f: &Polynomial, g: &Polynomial, l: &Polynomial) -> bool {
    match f.checked_sub(g) {
        Ok(diff) => diff.divide_by_linear(l).is_ok(),
        Err(_) => false,
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial rank mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial rank mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial rank mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Polynomial {
    /// Signed sum of `c*x1^a*x2^b` terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&magnitude), vars.join("*"))?;
            }
        }
        Ok(())
    }
}
