//! Exponent vectors and multivariate polynomials over F_p.
//!
//! Polynomials are stored in canonical form: no zero coefficients, terms
//! sorted in descending grevlex order on the distinguished grading. Two
//! polynomials are equal iff their term lists coincide.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::ring::Ring;

/// An exponent vector; one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Raw total degree (sum of exponents).
    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Multidegree under the ring's full grading.
    pub fn multidegree(&self, ring: &Ring) -> Vec<i64> {
        let d = ring.grading().dim();
        let mut deg = vec![0i64; d];
        for (i, &e) in self.exps.iter().enumerate() {
            for (k, acc) in deg.iter_mut().enumerate() {
                *acc += ring.grading().weight(i)[k] * e as i64;
            }
        }
        deg
    }

    /// Degree in the distinguished single grading.
    pub fn single_degree(&self, ring: &Ring) -> i64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| ring.grading().single_weight(i) * e as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }
}

/// A multivariate polynomial over F_p, tied to its ambient ring.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    /// Sorted descending grevlex; no zero coefficients.
    terms: Vec<(Monomial, u64)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: u64) -> Self {
        let c = c % ring.p();
        if c == 0 {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(i, ring.nvars()), 1)],
        }
    }

    /// Build from raw terms: merges duplicates, drops zeros, sorts, and
    /// enforces the arity and degree cap.
    pub fn from_terms(ring: &Ring, raw: Vec<(Monomial, u64)>) -> Result<Self> {
        let mut merged: Vec<(Monomial, u64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if m.nvars() != ring.nvars() {
                return Err(Error::InvalidRing(
                    "exponent vector arity does not match the ring".into(),
                ));
            }
            let deg = m.total_degree();
            if deg > ring.degree_cap() as u64 {
                return Err(Error::DegreeOverflow {
                    cap: ring.degree_cap(),
                    reached: deg,
                });
            }
            let c = c % ring.p();
            if let Some(entry) = merged.iter_mut().find(|(em, _)| *em == m) {
                entry.1 = ring.field().add(entry.1, c);
            } else {
                merged.push((m, c));
            }
        }
        merged.retain(|(_, c)| *c != 0);
        merged.sort_by(|a, b| MonomialOrder::GrevLex.cmp(ring, &b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms: merged,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// A single term? (Used by monomial-ideal checks.)
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        if order == MonomialOrder::GrevLex {
            return self.terms.first().map(|(m, c)| (m, *c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&self.ring, &a.0, &b.0))
            .map(|(m, c)| (m, *c))
    }

    /// Maximum raw total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Maximum degree in the distinguished grading.
    pub fn single_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.single_degree(&self.ring)).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = *self.ring.field();
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match MonomialOrder::GrevLex.cmp(&self.ring, &self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: u64) -> Polynomial {
        let field = *self.ring.field();
        let c = c % self.ring.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(*k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<Polynomial> {
        let field = *self.ring.field();
        let c = c % self.ring.p();
        if c == 0 {
            return Ok(Self::zero(&self.ring));
        }
        let cap = self.ring.degree_cap() as u64;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            let prod = tm.mul(m);
            let deg = prod.total_degree();
            if deg > cap {
                return Err(Error::DegreeOverflow {
                    cap: self.ring.degree_cap(),
                    reached: deg,
                });
            }
            terms.push((prod, field.mul(*tc, c)));
        }
        // multiplying by a fixed term preserves the grevlex order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, *c)?)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, mut k: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The p-th power f^p. In characteristic p this is the term-wise map
    /// x^e -> x^{p e}; coefficients are fixed because c^p = c on F_p.
    pub fn frobenius(&self) -> Result<Polynomial> {
        let p = self.ring.p();
        let cap = self.ring.degree_cap() as u64;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let deg = m.total_degree() * p;
            if deg > cap {
                return Err(Error::DegreeOverflow {
                    cap: self.ring.degree_cap(),
                    reached: deg,
                });
            }
            let exps = m.exponents().iter().map(|&e| e * p as u32).collect();
            terms.push((Monomial::new(exps), *c));
        }
        // e -> p*e preserves the order of distinct monomials
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Sum of the terms of multidegree exactly `deg` (full multigrading).
    pub fn homogeneous_component(&self, deg: &[i64]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.multidegree(&self.ring) == deg)
                .cloned()
                .collect(),
        }
    }

    /// Sum of the terms of distinguished single degree `deg`.
    pub fn single_degree_component(&self, deg: i64) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.single_degree(&self.ring) == deg)
                .cloned()
                .collect(),
        }
    }

    /// All multidegrees with a nonzero component, deduplicated.
    pub fn multidegrees(&self) -> Vec<Vec<i64>> {
        let mut degs: Vec<Vec<i64>> = Vec::new();
        for (m, _) in &self.terms {
            let d = m.multidegree(&self.ring);
            if !degs.contains(&d) {
                degs.push(d);
            }
        }
        degs
    }

    /// `Some(deg)` if every term has the same distinguished degree
    /// (the zero polynomial counts as homogeneous of every degree).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(m, _)| m.single_degree(&self.ring));
        match it.next() {
            None => Some(0),
            Some(d) => {
                if it.all(|e| e == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Homogeneous under the full multigrading.
    pub fn is_multihomogeneous(&self) -> bool {
        self.multidegrees().len() <= 1
    }

    /// Make the leading coefficient (under `order`) equal to 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c == 1 => self.clone(),
            Some((_, c)) => self.scale(self.ring.field().inv(c)),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Ring {
    /// All monomials of distinguished (weighted) degree `deg`, descending
    /// grevlex. Degree 0 yields `{1}`.
    pub fn graded_piece_basis(&self, deg: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if deg < 0 {
            return out;
        }
        let n = self.nvars();
        let mut exps = vec![0u32; n];
        fn rec(ring: &Ring, var: usize, rem: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if var == ring.nvars() {
                if rem == 0 {
                    out.push(Monomial::new(exps.clone()));
                }
                return;
            }
            let w = ring.grading().single_weight(var);
            let max = rem / w;
            for e in 0..=max {
                exps[var] = e as u32;
                rec(ring, var + 1, rem - e * w, exps, out);
            }
            exps[var] = 0;
        }
        rec(self, 0, deg, &mut exps, &mut out);
        out.sort_by(|a, b| MonomialOrder::GrevLex.cmp(self, b, a));
        out
    }

    /// All monomials of distinguished degree at most `deg`.
    pub fn monomials_up_to(&self, deg: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=deg {
            out.extend(self.graded_piece_basis(d));
        }
        out
    }
}
