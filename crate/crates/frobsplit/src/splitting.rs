//! p^{-1}-linear operators on a polynomial ring: the trace map, splittings
//! represented by premultipliers, graded parts, and compatibility of ideals.
//!
//! Every p^{-1}-linear endomorphism of R is Tr(g·-) for a unique
//! premultiplier g, and g is a splitting iff Tr(g) = 1. Compatibility of an
//! ideal I is decided by the ideal-quotient criterion g ∈ (I^{[p]} : I);
//! the definition φ(I) ⊆ I is kept alongside as a degree-bounded semantic
//! cross-check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Polynomial};
use crate::ring::Ring;

/// The canonical p^{-1}-linear generator: Tr(x^c) = x^{(c-(p-1)·1)/p} when
/// c ≡ (p-1)·1 componentwise mod p, else 0. Coefficients pass through
/// unchanged because Frobenius fixes F_p.
#[derive(Debug, Clone)]
pub struct TraceMap {
    ring: Ring,
}

impl TraceMap {
    pub fn new(ring: &Ring) -> Self {
        TraceMap { ring: ring.clone() }
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let p = self.ring.p() as u32;
        let mut terms = Vec::new();
        'term: for (m, c) in f.terms() {
            let mut exps = Vec::with_capacity(m.nvars());
            for &e in m.exponents() {
                if e % p != p - 1 {
                    continue 'term;
                }
                exps.push((e - (p - 1)) / p);
            }
            terms.push((Monomial::new(exps), c));
        }
        Polynomial::from_terms(&self.ring, terms)
    }
}

/// `true` iff Tr(g) = 1, i.e. the operator Tr(g·-) is a Frobenius splitting.
pub fn is_splitting(g: &Polynomial) -> bool {
    let tr = TraceMap::new(g.ring()).apply(g).expect("same ring");
    tr.is_one()
}

/// A Frobenius splitting of the ring, represented by its premultiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    ring: Ring,
    premultiplier: Polynomial,
}

impl Splitting {
    /// Validated constructor: fails unless Tr(g) = 1.
    pub fn new(g: Polynomial) -> Result<Self> {
        let tr = TraceMap::new(g.ring()).apply(&g)?;
        if !tr.is_one() {
            return Err(Error::NotASplitting {
                trace: tr.to_string(),
            });
        }
        Ok(Splitting {
            ring: g.ring().clone(),
            premultiplier: g,
        })
    }

    /// The standard splitting with premultiplier (x_1 ... x_n)^{p-1}; the
    /// unique torus-invariant splitting of the polynomial ring.
    pub fn standard(ring: &Ring) -> Result<Self> {
        let e = (ring.p() - 1) as u32;
        let m = Monomial::new(vec![e; ring.nvars()]);
        let g = Polynomial::from_terms(ring, vec![(m, 1)])?;
        Splitting::new(g)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn premultiplier(&self) -> &Polynomial {
        &self.premultiplier
    }

    /// Evaluate φ(f) = Tr(g·f).
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        TraceMap::new(&self.ring).apply(&self.premultiplier.mul(f)?)
    }

    /// Target multidegree of a graded premultiplier: (p-1) · sum of all
    /// variable weights.
    pub fn graded_target(&self) -> Vec<i64> {
        let p = self.ring.p() as i64;
        self.ring
            .grading()
            .total_weight()
            .into_iter()
            .map(|w| (p - 1) * w)
            .collect()
    }

    /// Graded (for the full multigrading) iff the premultiplier is
    /// homogeneous of the target multidegree.
    pub fn is_graded(&self) -> bool {
        let target = self.graded_target();
        self.premultiplier
            .terms()
            .all(|(m, _)| m.multidegree(&self.ring) == target)
    }

    /// The graded part: keep the component of the premultiplier in the
    /// target multidegree. Always again a splitting for valid input (the
    /// trace of g sees exactly that component).
    pub fn graded_part(&self) -> Result<Splitting> {
        let g = self.premultiplier.homogeneous_component(&self.graded_target());
        Splitting::new(g)
    }

    /// Scan monomials of single degree ≤ `max_degree` for a violation of
    /// the pointwise graded condition: for r of multidegree k, φ(r) must be
    /// the zero polynomial unless p | k, and then must lie in multidegree
    /// k/p. Returns the first offender (degree, r, φ(r)).
    pub fn graded_violation(&self, max_degree: i64) -> Result<Option<(i64, Polynomial, Polynomial)>> {
        let p = self.ring.p() as i64;
        for k in 0..=max_degree {
            for m in self.ring.graded_piece_basis(k) {
                let r = Polynomial::from_terms(&self.ring, vec![(m.clone(), 1)])?;
                let image = self.apply(&r)?;
                if image.is_zero() {
                    continue;
                }
                let md = m.multidegree(&self.ring);
                if md.iter().any(|c| c.rem_euclid(p) != 0) {
                    return Ok(Some((k, r, image)));
                }
                let expected: Vec<i64> = md.iter().map(|c| c / p).collect();
                if image.terms().any(|(im, _)| im.multidegree(&self.ring) != expected) {
                    return Ok(Some((k, r, image)));
                }
            }
        }
        Ok(None)
    }

    /// Decide compatibility of `ideal` by the ideal-quotient criterion
    /// g ∈ (I^{[p]} : I). A positive verdict is spot-verified semantically;
    /// a negative verdict carries a verified witness h ∈ I with φ(h) ∉ I.
    pub fn compatibility(&self, ideal: &Ideal) -> Result<CompatibilityCertificate> {
        if !ideal.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let quot = ideal.bracket_power()?.quotient(ideal)?;
        let verdict = quot.contains(&self.premultiplier)?;

        let witness = if verdict {
            // Spot checks: φ maps the reduced basis into I, and a sample of
            // random degree-bounded members stays inside as well.
            for h in ideal.reduced_basis()? {
                assert!(
                    ideal.contains(&self.apply(h)?)?,
                    "quotient criterion and φ(I) ⊆ I disagree on a basis element"
                );
            }
            for h in random_members(ideal, 8, 0xfeddeb)? {
                assert!(
                    ideal.contains(&self.apply(&h)?)?,
                    "quotient criterion and φ(I) ⊆ I disagree on a random member"
                );
            }
            None
        } else {
            Some(self.incompatibility_witness(ideal)?)
        };

        Ok(CompatibilityCertificate {
            ideal: ideal.clone(),
            splitting: self.clone(),
            verdict,
            witness,
        })
    }

    /// Find h ∈ I with φ(h) ∉ I. Writing members as x^m · f with f a basis
    /// element and m componentwise < p always suffices: every p^{-1}-linear
    /// functional on R over R^p is a combination of such traces.
    fn incompatibility_witness(&self, ideal: &Ideal) -> Result<Polynomial> {
        let p = self.ring.p() as u32;
        let n = self.ring.nvars();
        let mut multipliers: Vec<Monomial> = Vec::new();
        let mut stack = vec![0u32; n];
        enumerate_box(&mut stack, 0, p, &mut multipliers);
        multipliers.sort_by_key(|m| m.total_degree());
        for f in ideal.reduced_basis()? {
            for m in &multipliers {
                let h = f.mul_term(m, 1)?;
                if !ideal.contains(&self.apply(&h)?)? {
                    debug_assert!(ideal.contains(&h)?);
                    return Ok(h);
                }
            }
        }
        unreachable!("quotient criterion refuted compatibility but no witness was found");
    }
}

fn enumerate_box(stack: &mut Vec<u32>, var: usize, p: u32, out: &mut Vec<Monomial>) {
    if var == stack.len() {
        out.push(Monomial::new(stack.clone()));
        return;
    }
    for e in 0..p {
        stack[var] = e;
        enumerate_box(stack, var + 1, p, out);
    }
    stack[var] = 0;
}

/// Outcome of a compatibility check, with a verified witness on failure.
#[derive(Debug, Clone)]
pub struct CompatibilityCertificate {
    ideal: Ideal,
    splitting: Splitting,
    verdict: bool,
    witness: Option<Polynomial>,
}

impl CompatibilityCertificate {
    pub fn holds(&self) -> bool {
        self.verdict
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn splitting(&self) -> &Splitting {
        &self.splitting
    }

    /// On failure, an element h ∈ I with φ(h) ∉ I.
    pub fn witness(&self) -> Option<&Polynomial> {
        self.witness.as_ref()
    }

    /// Re-verify the stored witness by membership computations.
    pub fn verify_witness(&self) -> Result<bool> {
        match &self.witness {
            None => Ok(self.verdict),
            Some(h) => Ok(self.ideal.contains(h)?
                && !self.ideal.contains(&self.splitting.apply(h)?)?),
        }
    }
}

/// The default bound for the semantic cross-check of compatibility:
/// p · (max generator degree) + arity.
pub fn semantic_check_bound(splitting: &Splitting, ideal: &Ideal) -> i64 {
    let p = splitting.ring().p() as i64;
    let max_deg = ideal
        .generators()
        .iter()
        .filter_map(|g| g.single_degree())
        .max()
        .unwrap_or(0);
    p * max_deg + splitting.ring().nvars() as i64
}

/// Degree-bounded semantic reading of φ(I) ⊆ I: check φ(m·f) ∈ I for every
/// reduced-basis element f and every monomial m with deg(m·f) ≤ bound.
/// (φ is F_p-linear since Frobenius fixes F_p, so monomial multiples of a
/// generating set span all members up to the bound.)
pub fn semantic_compatibility(splitting: &Splitting, ideal: &Ideal, bound: i64) -> Result<bool> {
    let ring = ideal.ring();
    for f in ideal.reduced_basis()? {
        let d = f.single_degree().unwrap_or(0);
        for m in ring.monomials_up_to(bound - d) {
            let h = f.mul_term(&m, 1)?;
            if !ideal.contains(&splitting.apply(&h)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pseudo-random members of the ideal (R-combinations of the generators),
/// seeded for reproducibility.
pub fn random_members(ideal: &Ideal, count: usize, seed: u64) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let basis = ideal.reduced_basis()?.to_vec();
    if basis.is_empty() {
        return Ok(out);
    }
    let monomials = ring.monomials_up_to(3);
    for _ in 0..count {
        let mut acc = Polynomial::zero(ring);
        for f in &basis {
            if rng.gen_bool(0.5) {
                continue;
            }
            let m = &monomials[rng.gen_range(0..monomials.len())];
            let c = rng.gen_range(1..ring.p());
            acc = acc.add(&f.mul_term(m, c)?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;
    use crate::ring::Grading;

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), vars).unwrap()
    }

    fn poly(r: &Ring, t: &str) -> Polynomial {
        parse_polynomial(r, t).unwrap()
    }

    #[test]
    fn trace_rule_examples() {
        let r1 = ring(2, &["x"]);
        let tr = TraceMap::new(&r1);
        assert_eq!(tr.apply(&poly(&r1, "x^3")).unwrap(), poly(&r1, "x"));
        assert_eq!(tr.apply(&poly(&r1, "x")).unwrap(), poly(&r1, "1"));

        let r2 = ring(2, &["x", "y"]);
        let tr2 = TraceMap::new(&r2);
        assert!(tr2.apply(&poly(&r2, "x^2*y")).unwrap().is_zero());
    }

    #[test]
    fn trace_is_p_inverse_linear() {
        // Tr(f^p · g) = f · Tr(g)
        let r = ring(3, &["x", "y"]);
        let tr = TraceMap::new(&r);
        for (ft, gt) in [("x + y", "x^2*y^2"), ("x*y + 2", "x^5*y^2 + x^2*y^2"), ("x^2", "x*y")] {
            let f = poly(&r, ft);
            let g = poly(&r, gt);
            let lhs = tr.apply(&f.frobenius().unwrap().mul(&g).unwrap()).unwrap();
            let rhs = f.mul(&tr.apply(&g).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn is_splitting_examples() {
        let r = ring(2, &["x", "y"]);
        assert!(is_splitting(&poly(&r, "x*y")));
        assert!(!is_splitting(&poly(&r, "x^2")));
        assert!(is_splitting(&poly(&r, "x*y + x^2")));
    }

    #[test]
    fn apply_examples() {
        let r = ring(2, &["x", "y"]);
        let phi = Splitting::new(poly(&r, "x*y")).unwrap();
        assert_eq!(phi.apply(&poly(&r, "x^2")).unwrap(), poly(&r, "x"));
        assert!(phi.apply(&poly(&r, "x")).unwrap().is_zero());
        assert!(phi.apply(&poly(&r, "1")).unwrap().is_one());
    }

    #[test]
    fn standard_splitting_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(Splitting::standard(&r).unwrap().premultiplier(), &poly(&r, "x*y"));
        let r3 = ring(3, &["x"]);
        assert_eq!(Splitting::standard(&r3).unwrap().premultiplier(), &poly(&r3, "x^2"));
    }

    #[test]
    fn standard_premultiplier_is_unique_monomial_splitting() {
        // among monomial premultipliers of total degree n(p-1), only
        // (x_1...x_n)^{p-1} has trace 1
        for p in [2u64, 3] {
            let r = ring(p, &["x", "y"]);
            let target = (2 * (p - 1)) as i64;
            let hits: Vec<_> = r
                .graded_piece_basis(target)
                .into_iter()
                .filter(|m| {
                    let g = Polynomial::from_terms(&r, vec![(m.clone(), 1)]).unwrap();
                    is_splitting(&g)
                })
                .collect();
            assert_eq!(hits.len(), 1);
            assert_eq!(hits[0].exponents(), &[(p - 1) as u32, (p - 1) as u32]);
        }
    }

    fn multigraded_ring_f2() -> Ring {
        // full multigrading refining the standard one: wt(x) = (1,0),
        // wt(y) = (1,1); distinguishes x^2 from x*y
        Ring::with_grading(
            PrimeField::new(2).unwrap(),
            &["x", "y"],
            Grading::new(vec![vec![1, 0], vec![1, 1]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn graded_part_selects_the_target_component() {
        let r = multigraded_ring_f2();
        let phi = Splitting::new(poly(&r, "x*y + x^2")).unwrap();
        assert!(!phi.is_graded());
        let graded = phi.graded_part().unwrap();
        assert_eq!(graded.premultiplier(), &poly(&r, "x*y"));
        assert!(graded.is_graded());
        // idempotent
        assert_eq!(graded.graded_part().unwrap(), graded);
        // an already-graded splitting is returned unchanged
        let std = Splitting::standard(&r).unwrap();
        assert_eq!(std.graded_part().unwrap(), std);
    }

    #[test]
    fn graded_violation_scan_finds_offender() {
        let r = multigraded_ring_f2();
        let phi = Splitting::new(poly(&r, "x*y + x^2")).unwrap();
        let (k, witness, image) = phi.graded_violation(6).unwrap().expect("not graded");
        // xy has multidegree (2,1), not divisible by 2, yet φ(xy) = x ≠ 0
        assert_eq!(k, 2);
        assert_eq!(witness, poly(&r, "x*y"));
        assert_eq!(image, poly(&r, "x"));
        // a graded splitting passes the same scan
        assert!(phi.graded_part().unwrap().graded_violation(6).unwrap().is_none());
    }

    #[test]
    fn compatibility_examples() {
        let r = ring(2, &["x", "y"]);
        let phi = Splitting::new(poly(&r, "x*y")).unwrap();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(phi.compatibility(&i).unwrap().holds());

        assert!(phi.compatibility(&Ideal::zero(&r)).unwrap().holds());
        assert!(phi.compatibility(&Ideal::unit(&r)).unwrap().holds());

        let bad = Ideal::parse(&r, &["x + y"]).unwrap();
        let cert = phi.compatibility(&bad).unwrap();
        assert!(!cert.holds());
        assert!(cert.verify_witness().unwrap());
    }

    #[test]
    fn semantic_check_agrees_on_samples() {
        let r = ring(2, &["x", "y"]);
        let phi = Splitting::standard(&r).unwrap();
        for gens in [vec!["x"], vec!["x + y"], vec!["x*y"], vec!["x", "y^2"]] {
            let i = Ideal::parse(&r, &gens).unwrap();
            let bound = semantic_check_bound(&phi, &i);
            assert_eq!(
                phi.compatibility(&i).unwrap().holds(),
                semantic_compatibility(&phi, &i, bound).unwrap(),
                "{:?}",
                gens
            );
        }
    }

    #[test]
    fn splitting_axioms_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for p in [2u64, 3] {
            let r = ring(p, &["x", "y"]);
            let phi = Splitting::standard(&r).unwrap();
            let monos = r.monomials_up_to(4);
            let mut rand_poly = |rng: &mut ChaCha8Rng| {
                let mut acc = Polynomial::zero(&r);
                for _ in 0..rng.gen_range(0..5) {
                    let m = &monos[rng.gen_range(0..monos.len())];
                    let c = rng.gen_range(0..p);
                    acc = acc
                        .add(&Polynomial::from_terms(&r, vec![(m.clone(), c)]).unwrap())
                        .unwrap();
                }
                acc
            };
            for _ in 0..200 {
                let a = rand_poly(&mut rng);
                let b = rand_poly(&mut rng);
                // additivity
                assert_eq!(
                    phi.apply(&a.add(&b).unwrap()).unwrap(),
                    phi.apply(&a).unwrap().add(&phi.apply(&b).unwrap()).unwrap()
                );
                // φ(a^p b) = a φ(b)
                assert_eq!(
                    phi.apply(&a.frobenius().unwrap().mul(&b).unwrap()).unwrap(),
                    a.mul(&phi.apply(&b).unwrap()).unwrap()
                );
                // φ splits Frobenius
                assert_eq!(phi.apply(&a.frobenius().unwrap()).unwrap(), a);
            }
            assert!(phi.apply(&Polynomial::one(&r)).unwrap().is_one());
        }
    }
}
