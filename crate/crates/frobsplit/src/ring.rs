//! Polynomial rings over F_p with a (multi)grading.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Default cap on total degree; computations that would exceed it fail
/// loudly instead of wrapping.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// A grading of the ring by Z^d, one weight vector per variable.
///
/// The first coordinate is the distinguished single grading; its entries
/// must be strictly positive so every graded piece is finite-dimensional
/// and the degree-0 piece is just F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<Vec<i64>>,
}

impl Grading {
    /// The standard grading: every variable has weight 1.
    pub fn standard(nvars: usize) -> Self {
        Grading {
            weights: vec![vec![1]; nvars],
        }
    }

    /// A grading from one weight vector per variable.
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidRing("grading needs at least one variable".into()));
        }
        let d = weights[0].len();
        if d == 0 {
            return Err(Error::InvalidRing("weight vectors must be nonempty".into()));
        }
        for w in &weights {
            if w.len() != d {
                return Err(Error::InvalidRing("weight vectors must all have the same length".into()));
            }
            if w[0] <= 0 {
                return Err(Error::InvalidRing(
                    "first weight row must be strictly positive".into(),
                ));
            }
        }
        Ok(Grading { weights })
    }

    /// Number of grading components d.
    pub fn dim(&self) -> usize {
        self.weights[0].len()
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Multidegree of variable `i`.
    pub fn weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    /// Weight of variable `i` in the distinguished single grading.
    pub fn single_weight(&self, i: usize) -> i64 {
        self.weights[i][0]
    }

    /// Sum of all variable weight vectors.
    pub fn total_weight(&self) -> Vec<i64> {
        let mut acc = vec![0i64; self.dim()];
        for w in &self.weights {
            for (a, b) in acc.iter_mut().zip(w) {
                *a += b;
            }
        }
        acc
    }
}

#[derive(Debug)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    grading: Grading,
    degree_cap: u32,
}

/// A graded polynomial ring F_p[x_1, ..., x_n].
///
/// Cheap to clone; all ring data is immutable and shared.
#[derive(Debug, Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

impl Ring {
    /// A ring with the standard grading (all weights 1).
    pub fn new(field: PrimeField, vars: &[&str]) -> Result<Self> {
        let grading = Grading::standard(vars.len());
        Self::with_grading(field, vars, grading)
    }

    pub fn with_grading(field: PrimeField, vars: &[&str], grading: Grading) -> Result<Self> {
        Self::with_grading_and_cap(field, vars, grading, DEFAULT_DEGREE_CAP)
    }

    pub fn with_grading_and_cap(
        field: PrimeField,
        vars: &[&str],
        grading: Grading,
        degree_cap: u32,
    ) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("variable names must be nonempty".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable name `{}`", v)));
            }
        }
        if grading.nvars() != vars.len() {
            return Err(Error::InvalidRing(
                "grading arity does not match the number of variables".into(),
            ));
        }
        Ok(Ring {
            inner: Arc::new(RingInner {
                field,
                vars: vars.iter().map(|s| s.to_string()).collect(),
                grading,
                degree_cap,
            }),
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.inner.field
    }

    /// The characteristic p.
    pub fn p(&self) -> u64 {
        self.inner.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.inner.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub fn grading(&self) -> &Grading {
        &self.inner.grading
    }

    pub fn degree_cap(&self) -> u32 {
        self.inner.degree_cap
    }

    /// Structural equality with a pointer fast path.
    pub fn same_ring(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.grading == other.inner.grading)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.p(), self.inner.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_construction() {
        let f2 = PrimeField::new(2).unwrap();
        let r = Ring::new(f2, &["x", "y"]).unwrap();
        assert_eq!(r.nvars(), 2);
        assert_eq!(r.var_index("y"), Some(1));
        assert_eq!(r.to_string(), "F_2[x,y]");

        assert!(Ring::new(f2, &["x", "x"]).is_err());
        assert!(Ring::new(f2, &[]).is_err());
        assert!(Ring::new(f2, &["x", ""]).is_err());
    }

    #[test]
    fn grading_validation() {
        assert!(Grading::new(vec![vec![1, 0], vec![0, 1]]).is_err()); // second first-row entry 0
        assert!(Grading::new(vec![vec![1, 0], vec![1, 1]]).is_ok());
        assert!(Grading::new(vec![vec![1], vec![1, 2]]).is_err());
        let g = Grading::new(vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(g.total_weight(), vec![2, 1]);
    }

    #[test]
    fn structural_equality() {
        let f2 = PrimeField::new(2).unwrap();
        let a = Ring::new(f2, &["x", "y"]).unwrap();
        let b = Ring::new(f2, &["x", "y"]).unwrap();
        let c = Ring::new(f2, &["x", "z"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
