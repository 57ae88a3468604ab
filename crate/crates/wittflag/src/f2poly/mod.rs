//! Multivariate polynomials over GF(2) with weighted variables.
//!
//! A polynomial is a set of monomials (all nonzero coefficients are 1), so
//! addition is symmetric difference and squaring is the Frobenius. Term
//! comparisons use degree-reverse-lexicographic order graded by the
//! variable weights; the canonical text form lists terms in descending
//! order, e.g. `b1_1*b2_2 + b1_2 + 1`.

mod groebner;
mod regular;
mod solve;

pub use groebner::{groebner, normal_form, GroebnerBasis, QuotientDim};
pub use regular::{all_monomials_to_degree, is_regular_sequence, RegularityMethod, RegularityVerdict};
pub use solve::{solve_linear_combination, CoeffMode, Combination, SolveOutcome};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

impl Variable {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        Variable { name: name.into(), weight }
    }
}

/// A polynomial ring descriptor: the ordered list of variables with their
/// weights. Variable precedence for display and for the revlex tiebreak is
/// the list order.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<Variable>,
}

impl Ring {
    pub fn new(vars: Vec<Variable>) -> Arc<Ring> {
        let mut names: Vec<&str> = vars.iter().map(|v| v.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), vars.len(), "duplicate variable names");
        Arc::new(Ring { vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        m.0.iter()
            .zip(&self.vars)
            .map(|(&e, v)| e as u64 * v.weight as u64)
            .sum()
    }

    /// Weighted degrevlex comparison: higher weighted degree wins; ties are
    /// broken by the smallest exponent difference scanning from the last
    /// variable (the monomial with the larger trailing exponent is smaller).
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.weighted_degree(a).cmp(&self.weighted_degree(b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars()).rev() {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient monomial; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    RingMismatch,
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::RingMismatch => write!(f, "polynomials belong to different rings"),
            PolyError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// A polynomial over GF(2): a set of monomials, stored sorted in
/// descending term order so the leading term is first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2 {
    ring: Arc<Ring>,
    terms: Vec<Monomial>,
}

impl Poly2 {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly2 { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Poly2 { ring: ring.clone(), terms: vec![Monomial::one(ring.nvars())] }
    }

    pub fn constant(ring: &Arc<Ring>, bit: bool) -> Self {
        if bit {
            Poly2::one(ring)
        } else {
            Poly2::zero(ring)
        }
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Poly2 {
            ring: ring.clone(),
            terms: vec![Monomial::var(ring.nvars(), index)],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        assert_eq!(m.0.len(), ring.nvars());
        Poly2 { ring: ring.clone(), terms: vec![m] }
    }

    /// Builds a polynomial from monomials, cancelling pairs mod 2.
    pub fn from_monomials(ring: &Arc<Ring>, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut terms: Vec<Monomial> = monomials.into_iter().collect();
        for t in &terms {
            assert_eq!(t.0.len(), ring.nvars());
        }
        terms.sort_by(|a, b| ring.cmp_monomials(b, a));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for t in terms {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        Poly2 { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn leading_term(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Maximum weighted degree over the support; zero polynomial gives 0.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| self.ring.weighted_degree(t))
            .max()
            .unwrap_or(0)
    }

    fn check_ring(&self, other: &Poly2) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly2) -> Result<Poly2, PolyError> {
        self.check_ring(other)?;
        // Merge two descending-sorted term lists, cancelling equal monomials.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_monomials(&self.terms[i], &other.terms[j]) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Poly2 { ring: self.ring.clone(), terms: out })
    }

    pub fn try_mul(&self, other: &Poly2) -> Result<Poly2, PolyError> {
        self.check_ring(other)?;
        let mut acc: std::collections::HashMap<Monomial, bool> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let e = acc.entry(a.mul(b)).or_insert(false);
                *e = !*e;
            }
        }
        Ok(Poly2::from_monomials(
            &self.ring,
            acc.into_iter().filter(|(_, odd)| *odd).map(|(m, _)| m),
        ))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly2 {
        // Multiplication by a monomial preserves the term order.
        Poly2 {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    /// The terms of exact weighted degree `d`.
    pub fn homogeneous_component(&self, d: u64) -> Poly2 {
        Poly2 {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| self.ring.weighted_degree(t) == d)
                .cloned()
                .collect(),
        }
    }

    /// The top-degree homogeneous part (the zero polynomial stays zero).
    pub fn leading_form(&self) -> Poly2 {
        self.homogeneous_component(self.total_degree())
    }

    /// Substitutes `images[i]` for variable `i`. All images must live in
    /// one common ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[Poly2]) -> Result<Poly2, PolyError> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        for img in images {
            if !(Arc::ptr_eq(&img.ring, &target) || img.ring == target) {
                return Err(PolyError::RingMismatch);
            }
        }
        let mut acc = Poly2::zero(&target);
        for term in &self.terms {
            let mut prod = Poly2::one(&target);
            for (i, &e) in term.0.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.try_mul(&images[i])?;
                }
            }
            acc = acc.try_add(&prod)?;
        }
        Ok(acc)
    }

    /// Evaluates at a 0/1 point (a ring homomorphism to GF(2)); used for
    /// the rank homomorphism on relation families.
    pub fn evaluate_bits(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.ring.nvars());
        let mut acc = false;
        for term in &self.terms {
            let value = term
                .0
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || assignment[i]);
            acc ^= value;
        }
        acc
    }

    /// Parses the canonical text form: terms joined by `+`, factors by `*`,
    /// exponents by `^`; `0` and `1` denote the constants.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Poly2, PolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        if text == "0" {
            return Ok(Poly2::zero(ring));
        }
        let mut monomials = Vec::new();
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(PolyError::Parse("empty term".into()));
            }
            let mut mono = Monomial::one(ring.nvars());
            if term == "1" {
                monomials.push(mono);
                continue;
            }
            for factor in term.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let exp: u16 = e
                            .trim()
                            .parse()
                            .map_err(|_| PolyError::Parse(format!("bad exponent in `{factor}`")))?;
                        (n.trim(), exp)
                    }
                    None => (factor, 1),
                };
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| PolyError::Parse(format!("unknown variable `{name}`")))?;
                mono.0[idx] += exp;
            }
            monomials.push(mono);
        }
        Ok(Poly2::from_monomials(ring, monomials))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if term.is_one() {
                write!(f, "1")?;
                continue;
            }
            let mut first = true;
            for (v, &e) in term.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_ring() -> Arc<Ring> {
        Ring::new(vec![
            Variable::new("b1_1", 1),
            Variable::new("b1_2", 1),
            Variable::new("b2_2", 2),
        ])
    }

    #[test]
    fn display_sorts_terms_descending() {
        let ring = sample_ring();
        let p = Poly2::parse(&ring, "1 + b1_2 + b1_1*b2_2").unwrap();
        assert_eq!(p.to_string(), "b1_1*b2_2 + b1_2 + 1");
    }

    #[test]
    fn parse_roundtrip() {
        let ring = sample_ring();
        for text in ["0", "1", "b1_1", "b2_2 + b1_1*b1_2", "b1_1^3 + b1_1*b1_2*b2_2^2 + 1"] {
            let p = Poly2::parse(&ring, text).unwrap();
            let q = Poly2::parse(&ring, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn addition_is_symmetric_difference() {
        let ring = sample_ring();
        let p = Poly2::parse(&ring, "b1_1 + b1_2").unwrap();
        let q = Poly2::parse(&ring, "b1_2 + b2_2").unwrap();
        assert_eq!((&p + &q).to_string(), "b2_2 + b1_1");
        assert!((&p + &p).is_zero());
    }

    #[test]
    fn frobenius_square() {
        let ring = sample_ring();
        let p = Poly2::parse(&ring, "b1_1 + b1_2 + b2_2").unwrap();
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "b2_2^2 + b1_1^2 + b1_2^2");
    }

    #[test]
    fn weighted_degrevlex_examples() {
        let ring = sample_ring();
        // b2_2 and b1_1*b1_2 tie at weighted degree 2; the revlex tiebreak
        // favours the monomial with the smaller trailing exponent.
        let p = Poly2::parse(&ring, "b1_1 + b2_2 + b1_1*b1_2").unwrap();
        assert_eq!(p.to_string(), "b1_1*b1_2 + b2_2 + b1_1");
        let q = Poly2::parse(&ring, "b1_2^2 + b1_1*b1_2 + b1_1^2").unwrap();
        assert_eq!(q.to_string(), "b1_1^2 + b1_1*b1_2 + b1_2^2");
    }

    #[test]
    fn homogeneous_components() {
        let ring = sample_ring();
        let p = Poly2::parse(&ring, "b2_2 + b1_1*b1_2 + b1_1 + 1").unwrap();
        assert_eq!(p.homogeneous_component(2).to_string(), "b1_1*b1_2 + b2_2");
        assert_eq!(p.homogeneous_component(1).to_string(), "b1_1");
        assert_eq!(p.leading_form().to_string(), "b1_1*b1_2 + b2_2");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let ring = sample_ring();
        let other = Ring::new(vec![Variable::new("x", 1)]);
        let p = Poly2::one(&ring);
        let q = Poly2::one(&other);
        assert_eq!(p.try_add(&q), Err(PolyError::RingMismatch));
        assert_eq!(p.try_mul(&q), Err(PolyError::RingMismatch));
    }

    #[test]
    fn substitution() {
        let ring = sample_ring();
        let target = Ring::new(vec![Variable::new("b", 1)]);
        let b = Poly2::var(&target, 0);
        let b2 = &b * &b;
        // b1_1 -> b, b1_2 -> b, b2_2 -> b + b^2.
        let images = vec![b.clone(), b.clone(), &b + &b2];
        let mu3 = Poly2::parse(&ring, "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2").unwrap();
        let image = mu3.substitute(&images).unwrap();
        assert_eq!(image.to_string(), "b^3 + b^2 + b + 1");
    }

    #[test]
    fn evaluate_bits_is_ring_hom() {
        let ring = sample_ring();
        let p = Poly2::parse(&ring, "b1_1*b2_2 + b1_2 + 1").unwrap();
        // At (1,1,1): 1 + 1 + 1 = 1.
        assert!(p.evaluate_bits(&[true, true, true]));
        // At (1,0,0): 0 + 0 + 1 = 1.
        assert!(p.evaluate_bits(&[true, false, false]));
        // At (1,1,0): 0 + 1 + 1 = 0.
        assert!(!p.evaluate_bits(&[true, true, false]));
    }
}
