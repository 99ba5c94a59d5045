//! Ideals with cached reduced Gröbner bases and the ideal-theoretic
//! operations every higher layer relies on: membership, sum, intersection,
//! quotient, saturation, and Frobenius bracket powers.
//!
//! Two ideals are equal iff their reduced grevlex bases coincide termwise;
//! that makes equality a genuine decision procedure.

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{buchberger, buchberger_extended, divide, GroebnerData};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::{Grading, Ring};

/// An ideal of a polynomial ring, given by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceCell<Vec<Polynomial>>,
    extended: OnceCell<GroebnerData>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            basis: OnceCell::new(),
            extended: OnceCell::new(),
        })
    }

    /// Parse comma-free generator expressions.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|t| crate::parse::parse_polynomial(ring, t))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced grevlex Gröbner basis, computed once and cached.
    pub fn reduced_basis(&self) -> Result<&[Polynomial]> {
        self.basis
            .get_or_try_init(|| buchberger(&self.ring, &self.generators, MonomialOrder::GrevLex))
            .map(|v| v.as_slice())
    }

    /// Reduced basis plus cofactors expressing it over the generators.
    pub fn groebner_data(&self) -> Result<&GroebnerData> {
        self.extended.get_or_try_init(|| {
            buchberger_extended(&self.ring, &self.generators, MonomialOrder::GrevLex)
        })
    }

    /// The unique reduced remainder of `f` modulo the ideal;
    /// zero iff `f` is a member.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let basis = self.reduced_basis()?;
        crate::groebner::reduce(f, basis, MonomialOrder::GrevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Write a member as an explicit combination of the *generators*:
    /// returns `a` with `f = sum(a[j] * generators[j])`, or `None` if `f`
    /// is not in the ideal.
    pub fn express(&self, f: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let data = self.groebner_data()?;
        let (q, rem) = divide(f, &data.basis, MonomialOrder::GrevLex)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut out = vec![Polynomial::zero(&self.ring); self.generators.len()];
        for (qk, cof) in q.iter().zip(&data.cofactors) {
            if qk.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(cof) {
                *o = o.add(&qk.mul(c)?)?;
            }
        }
        Ok(Some(out))
    }

    pub fn eq_ideal(&self, other: &Ideal) -> Result<bool> {
        if !self.ring.same_ring(&other.ring) {
            return Ok(false);
        }
        Ok(self.reduced_basis()? == other.reduced_basis()?)
    }

    /// Canonical text key (the reduced basis), used for deduplication and
    /// deterministic ordering.
    pub fn canonical_key(&self) -> Result<String> {
        let basis = self.reduced_basis()?;
        if basis.is_empty() {
            return Ok("0".to_string());
        }
        Ok(basis
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", "))
    }

    /// Sort key for worklists: total degree of the basis, then the key text.
    pub fn worklist_key(&self) -> Result<(u64, String)> {
        let basis = self.reduced_basis()?;
        let deg: u64 = basis.iter().filter_map(|g| g.total_degree()).sum();
        Ok((deg, self.canonical_key()?))
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.reduced_basis()?.is_empty())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        let b = self.reduced_basis()?;
        Ok(b.len() == 1 && b[0].is_one())
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.is_unit_ideal()?)
    }

    /// Graded for the distinguished grading: every reduced-basis element is
    /// homogeneous. (This is intrinsic — it does not depend on the
    /// generators handed in.)
    pub fn is_graded(&self) -> Result<bool> {
        Ok(self.reduced_basis()?.iter().all(|g| g.is_homogeneous()))
    }

    /// Monomial ideal: every reduced-basis element is a single term.
    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.reduced_basis()?.iter().all(|g| g.is_term()))
    }

    /// Squarefree monomial ideal (Stanley-Reisner type).
    pub fn is_squarefree_monomial(&self) -> Result<bool> {
        Ok(self
            .reduced_basis()?
            .iter()
            .all(|g| g.is_term() && g.terms().next().unwrap().0.is_squarefree()))
    }

    /// Ideal generated by the union of the generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Intersection via the auxiliary-variable trick: eliminate `t` from
    /// `t*I + (1-t)*J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal()? || other.is_zero_ideal()? {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = extend_ring(&self.ring)?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(t.mul(&lift(&ext, f))?);
        }
        for g in &other.generators {
            gens.push(one_minus_t.mul(&lift(&ext, g))?);
        }
        let gb = buchberger(&ext, &gens, MonomialOrder::Elimination(1))?;
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.terms().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| drop_first_var(&self.ring, g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// The colon ideal `(I : J) = { f : f*J ⊆ I }`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            if g.is_zero() {
                continue;
            }
            // (I : g) = (I ∩ (g)) / g
            let principal = Ideal::new(&self.ring, vec![g.clone()])?;
            let meet = self.intersection(&principal)?;
            let mut quot_gens = Vec::new();
            for h in meet.generators() {
                let (q, rem) = divide(h, std::slice::from_ref(g), MonomialOrder::GrevLex)?;
                assert!(rem.is_zero(), "intersection with (g) must be divisible by g");
                quot_gens.push(q.into_iter().next().unwrap());
            }
            let this = Ideal::new(&self.ring, quot_gens)?;
            acc = Some(match acc {
                None => this,
                Some(prev) => prev.intersection(&this)?,
            });
        }
        // (I : (0)) is the whole ring.
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// Saturation with respect to the irrelevant ideal (all variables):
    /// iterate `I : m` until it stabilizes.
    pub fn saturate(&self) -> Result<Ideal> {
        let vars: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|i| Polynomial::var(&self.ring, i))
            .collect();
        let irrelevant = Ideal::new(&self.ring, vars)?;
        let mut current = self.clone();
        loop {
            let next = current.quotient(&irrelevant)?;
            if next.eq_ideal(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// The Frobenius power I^{[p]}, generated by p-th powers of the
    /// generators.
    pub fn bracket_power(&self) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.frobenius())
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }
}

/// Equality of ideals is equality of reduced bases.
///
/// Panics if a basis computation overflows the degree cap; use
/// [`Ideal::eq_ideal`] where that matters.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.eq_ideal(other).expect("Gröbner basis computation failed")
    }
}

impl Eq for Ideal {}

/// Fresh ring with one auxiliary elimination variable in front.
fn extend_ring(ring: &Ring) -> Result<Ring> {
    let mut name = "t".to_string();
    while ring.var_names().iter().any(|v| *v == name) {
        name.push('_');
    }
    let mut vars: Vec<&str> = vec![&name];
    let originals: Vec<String> = ring.var_names().to_vec();
    vars.extend(originals.iter().map(|s| s.as_str()));
    let d = ring.grading().dim();
    let mut weights = vec![{
        let mut w = vec![0i64; d];
        w[0] = 1;
        w
    }];
    for i in 0..ring.nvars() {
        weights.push(ring.grading().weight(i).to_vec());
    }
    Ring::with_grading_and_cap(
        *ring.field(),
        &vars,
        Grading::new(weights)?,
        ring.degree_cap() + 2,
    )
}

fn lift(ext: &Ring, f: &Polynomial) -> Polynomial {
    let terms = f
        .terms()
        .map(|(m, c)| {
            let mut exps = vec![0u32];
            exps.extend_from_slice(m.exponents());
            (Monomial::new(exps), c)
        })
        .collect();
    Polynomial::from_terms(ext, terms).expect("lift cannot overflow")
}

fn drop_first_var(ring: &Ring, f: &Polynomial) -> Result<Polynomial> {
    let terms = f
        .terms()
        .map(|(m, c)| {
            debug_assert_eq!(m.exponents()[0], 0);
            (Monomial::new(m.exponents()[1..].to_vec()), c)
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Convenience: the prime field of an ideal's ring.
impl Ideal {
    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), vars).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, &["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let f = crate::parse::parse_polynomial(&r, "x^2 + x*y").unwrap();
        assert!(i.normal_form(&f).unwrap().is_zero());

        let j = ideal(&r, &["x"]);
        let y = Polynomial::var(&r, 1);
        assert_eq!(j.normal_form(&y).unwrap(), y);

        // (x+y)^2 = x^2 + y^2 in char 2
        let k = ideal(&r, &["x^2 + y^2"]);
        let sq = crate::parse::parse_polynomial(&r, "(x + y)^2").unwrap();
        assert!(k.normal_form(&sq).unwrap().is_zero());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = ring(3, &["x", "y", "z"]);
        let i = ideal(&r, &["x*y - z^2", "x^2 - y*z"]);
        for text in ["x^3 + y^3 + z^3", "x*y*z + 2*z^3", "x + y + z + 1"] {
            let f = crate::parse::parse_polynomial(&r, text).unwrap();
            let nf = i.normal_form(&f).unwrap();
            assert_eq!(i.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn sum_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(ideal(&r, &["x"]).sum(&ideal(&r, &["y"])).unwrap(), ideal(&r, &["x", "y"]));
        assert_eq!(ideal(&r, &["x"]).sum(&Ideal::zero(&r)).unwrap(), ideal(&r, &["x"]));
        assert_eq!(
            ideal(&r, &["x*y"]).sum(&ideal(&r, &["x^2"])).unwrap(),
            ideal(&r, &["x*y", "x^2"])
        );
    }

    #[test]
    fn intersection_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(
            ideal(&r, &["x"]).intersection(&ideal(&r, &["y"])).unwrap(),
            ideal(&r, &["x*y"])
        );
        assert_eq!(
            ideal(&r, &["x"]).intersection(&ideal(&r, &["x", "y"])).unwrap(),
            ideal(&r, &["x"])
        );
        // (x^2, y) ∩ (x) = (x^2, x*y), verified by double inclusion below
        let meet = ideal(&r, &["x^2", "y"]).intersection(&ideal(&r, &["x"])).unwrap();
        let expected = ideal(&r, &["x^2", "x*y"]);
        assert_eq!(meet, expected);
        for g in expected.generators() {
            assert!(ideal(&r, &["x^2", "y"]).contains(g).unwrap());
            assert!(ideal(&r, &["x"]).contains(g).unwrap());
        }
    }

    #[test]
    fn quotient_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(
            ideal(&r, &["x^2"]).quotient(&ideal(&r, &["x"])).unwrap(),
            ideal(&r, &["x"])
        );
        assert_eq!(
            ideal(&r, &["x*y"]).quotient(&ideal(&r, &["x"])).unwrap(),
            ideal(&r, &["y"])
        );
        let q = ideal(&r, &["x^2", "x*y"]).quotient(&ideal(&r, &["x"])).unwrap();
        assert_eq!(q, ideal(&r, &["x", "y"]));
        // both inclusions by membership
        for g in q.reduced_basis().unwrap() {
            let prod = g.mul(&Polynomial::var(&r, 0)).unwrap();
            assert!(ideal(&r, &["x^2", "x*y"]).contains(&prod).unwrap());
        }
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(ideal(&r, &["x^2", "x*y"]).saturate().unwrap(), ideal(&r, &["x"]));
        assert_eq!(ideal(&r, &["x"]).saturate().unwrap(), ideal(&r, &["x"]));
        assert!(ideal(&r, &["x", "y"]).saturate().unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn bracket_power_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(
            ideal(&r, &["x", "y"]).bracket_power().unwrap(),
            ideal(&r, &["x^2", "y^2"])
        );
        assert!(Ideal::zero(&r).bracket_power().unwrap().is_zero_ideal().unwrap());

        let r3 = ring(3, &["x", "y"]);
        assert_eq!(
            ideal(&r3, &["x + y"]).bracket_power().unwrap(),
            ideal(&r3, &["x^3 + y^3"])
        );
    }

    #[test]
    fn express_members() {
        let r = ring(3, &["x", "y", "z"]);
        let i = ideal(&r, &["x*y - z^2", "x^2 - y*z"]);
        let f = crate::parse::parse_polynomial(&r, "(x*y - z^2)*x + (x^2 - y*z)*(y + z)").unwrap();
        let rep = i.express(&f).unwrap().expect("member");
        let mut acc = Polynomial::zero(&r);
        for (a, g) in rep.iter().zip(i.generators()) {
            acc = acc.add(&a.mul(g).unwrap()).unwrap();
        }
        assert_eq!(acc, f);
        let non_member = Polynomial::var(&r, 0);
        assert!(i.express(&non_member).unwrap().is_none());
    }

    #[test]
    fn gradedness_and_monomiality() {
        let r = ring(2, &["x", "y"]);
        assert!(ideal(&r, &["x^2 + x*y"]).is_graded().unwrap());
        assert!(!ideal(&r, &["x + x*y"]).is_graded().unwrap());
        assert!(ideal(&r, &["x^2", "x*y"]).is_monomial().unwrap());
        // (x, x+y) = (x, y) is monomial even though the given generators are not
        assert!(ideal(&r, &["x", "x + y"]).is_monomial().unwrap());
        assert!(!ideal(&r, &["x + y"]).is_monomial().unwrap());
        assert!(ideal(&r, &["x*y"]).is_squarefree_monomial().unwrap());
        assert!(!ideal(&r, &["x^2*y"]).is_squarefree_monomial().unwrap());
    }
}
