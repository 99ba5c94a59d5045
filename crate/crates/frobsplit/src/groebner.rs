//! Buchberger's algorithm (sugar strategy, Gebauer-Möller pair elimination),
//! multivariate division with quotient tracking, and Schreyer-style syzygies
//! of a Gröbner basis.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::Ring;

/// Divide `f` by `divisors`: returns `(quotients, remainder)` with
/// `f = sum(quotients[k] * divisors[k]) + remainder` and no term of the
/// remainder divisible by any divisor's leading monomial.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut quotients = vec![Polynomial::zero(&ring); divisors.len()];
    let mut remainder = Polynomial::zero(&ring);
    let mut work = f.clone();

    let leads: Vec<Option<(Monomial, u64)>> = divisors
        .iter()
        .map(|d| d.leading_term(order).map(|(m, c)| (m.clone(), c)))
        .collect();

    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c)
        };
        let reducer = leads
            .iter()
            .enumerate()
            .find(|(_, l)| matches!(l, Some((m, _)) if m.divides(&lm)));
        match reducer {
            Some((k, Some((dm, dc)))) => {
                let m = dm.div_into(&lm);
                let c = field.div(lc, *dc);
                let q = Polynomial::from_terms(&ring, vec![(m.clone(), c)])?;
                quotients[k] = quotients[k].add(&q)?;
                work = work.sub(&divisors[k].mul_term(&m, c)?)?;
            }
            _ => {
                let lt = Polynomial::from_terms(&ring, vec![(lm.clone(), lc)])?;
                remainder = remainder.add(&lt)?;
                work = work.sub(&lt)?;
            }
        }
    }
    Ok((quotients, remainder))
}

/// Remainder of `f` on division by `divisors`.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    divide(f, divisors, order).map(|(_, r)| r)
}

/// A Gröbner basis together with cofactors over the original generators:
/// `basis[k] = sum_j cofactors[k][j] * gens[j]`.
#[derive(Debug, Clone)]
pub struct GroebnerData {
    pub basis: Vec<Polynomial>,
    pub cofactors: Vec<Vec<Polynomial>>,
}

struct Tracked {
    poly: Polynomial,
    rep: Vec<Polynomial>,
    sugar: u64,
}

/// Pair key ordered by (sugar, lcm degree, lcm exponents, i, j); the
/// BTreeSet pops the minimum, which makes pair selection deterministic.
type PairKey = (u64, u64, Vec<u32>, usize, usize);

struct Engine {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Tracked>,
    pairs: BTreeSet<PairKey>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].poly.leading_term(self.order).unwrap().0
    }

    fn pair_key(&self, i: usize, j: usize) -> PairKey {
        let t = self.lm(i).lcm(self.lm(j));
        let di = t.total_degree() - self.lm(i).total_degree();
        let dj = t.total_degree() - self.lm(j).total_degree();
        let sugar = (self.basis[i].sugar + di).max(self.basis[j].sugar + dj);
        (sugar, t.total_degree(), t.exponents().to_vec(), i, j)
    }

    /// Gebauer-Möller update after appending basis element `t`.
    fn update_pairs(&mut self, t: usize) {
        let lm_t = self.lm(t).clone();

        // Chain criterion on the old pairs.
        let stale: Vec<PairKey> = self
            .pairs
            .iter()
            .filter(|(_, _, _, i, j)| {
                let lcm_ij = self.lm(*i).lcm(self.lm(*j));
                lm_t.divides(&lcm_ij)
                    && self.lm(*i).lcm(&lm_t) != lcm_ij
                    && self.lm(*j).lcm(&lm_t) != lcm_ij
            })
            .cloned()
            .collect();
        for k in stale {
            self.pairs.remove(&k);
        }

        // New candidate pairs (g, t), pruned by the M/F/B criteria.
        let cands: Vec<(usize, Monomial)> =
            (0..t).map(|g| (g, self.lm(g).lcm(&lm_t))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (g, tg) in &cands {
            let dominated = cands
                .iter()
                .any(|(_, other)| other.divides(tg) && other != tg);
            if dominated {
                continue;
            }
            if kept.iter().any(|(_, k)| k == tg) {
                continue; // keep one pair per lcm
            }
            kept.push((*g, tg.clone()));
        }
        for (g, _) in kept {
            if self.lm(g).coprime(&lm_t) {
                continue; // Buchberger's first criterion
            }
            let key = self.pair_key(g, t);
            self.pairs.insert(key);
        }
    }

    /// Reduce a tracked polynomial fully against the current basis,
    /// updating the representation and the sugar degree.
    fn reduce_tracked(&self, mut work: Polynomial, mut rep: Vec<Polynomial>, mut sugar: u64) -> Result<Tracked> {
        let ring = &self.ring;
        let field = *ring.field();
        let mut remainder = Polynomial::zero(ring);
        'outer: while !work.is_zero() {
            let (lm, lc) = {
                let (m, c) = work.leading_term(self.order).unwrap();
                (m.clone(), c)
            };
            for b in &self.basis {
                let (bm, bc) = b.poly.leading_term(self.order).unwrap();
                if bm.divides(&lm) {
                    let m = bm.div_into(&lm);
                    let c = field.div(lc, bc);
                    sugar = sugar.max(b.sugar + m.total_degree());
                    work = work.sub(&b.poly.mul_term(&m, c)?)?;
                    for (r, br) in rep.iter_mut().zip(&b.rep) {
                        *r = r.sub(&br.mul_term(&m, c)?)?;
                    }
                    continue 'outer;
                }
            }
            let lt = Polynomial::from_terms(ring, vec![(lm, lc)])?;
            remainder = remainder.add(&lt)?;
            work = work.sub(&lt)?;
        }
        Ok(Tracked {
            poly: remainder,
            rep,
            sugar,
        })
    }
}

/// Reduced Gröbner basis with cofactors over the input generators.
pub fn buchberger_extended(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerData> {
    let m = gens.len();
    let unit = |j: usize| -> Vec<Polynomial> {
        (0..m)
            .map(|k| {
                if k == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect()
    };

    let mut engine = Engine {
        ring: ring.clone(),
        order,
        basis: Vec::new(),
        pairs: BTreeSet::new(),
    };

    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let lc = g.leading_term(order).unwrap().1;
        let inv = ring.field().inv(lc);
        let mut rep = unit(j);
        rep[j] = rep[j].scale(inv);
        engine.basis.push(Tracked {
            poly: g.scale(inv),
            rep,
            sugar: g.total_degree().unwrap_or(0),
        });
        let t = engine.basis.len() - 1;
        engine.update_pairs(t);
    }

    while let Some(key) = engine.pairs.iter().next().cloned() {
        engine.pairs.remove(&key);
        let (sugar, _, _, i, j) = key;
        // S-polynomial of the (monic) pair.
        let t = engine.lm(i).lcm(engine.lm(j));
        let mi = engine.lm(i).div_into(&t);
        let mj = engine.lm(j).div_into(&t);
        let spoly = engine.basis[i]
            .poly
            .mul_term(&mi, 1)?
            .sub(&engine.basis[j].poly.mul_term(&mj, 1)?)?;
        let mut rep = vec![Polynomial::zero(ring); m];
        for (r, (ri, rj)) in rep
            .iter_mut()
            .zip(engine.basis[i].rep.iter().zip(&engine.basis[j].rep))
        {
            *r = ri.mul_term(&mi, 1)?.sub(&rj.mul_term(&mj, 1)?)?;
        }
        let reduced = engine.reduce_tracked(spoly, rep, sugar)?;
        if reduced.poly.is_zero() {
            continue;
        }
        let lc = reduced.poly.leading_term(order).unwrap().1;
        let inv = ring.field().inv(lc);
        engine.basis.push(Tracked {
            poly: reduced.poly.scale(inv),
            rep: reduced.rep.iter().map(|r| r.scale(inv)).collect(),
            sugar: reduced.sugar,
        });
        let t = engine.basis.len() - 1;
        engine.update_pairs(t);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..engine.basis.len() {
        let lm_i = engine.lm(i).clone();
        let redundant = (0..engine.basis.len()).any(|k| {
            k != i
                && engine.lm(k).divides(&lm_i)
                && (engine.lm(k) != &lm_i || keep.contains(&k))
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut minimal: Vec<(Polynomial, Vec<Polynomial>)> = keep
        .into_iter()
        .map(|i| (engine.basis[i].poly.clone(), engine.basis[i].rep.clone()))
        .collect();

    // Interreduce tails.
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, (p, _))| p.clone())
            .collect();
        let (quots, rem) = divide(&minimal[i].0, &others, order)?;
        let mut rep = minimal[i].1.clone();
        for (q, (_, other_rep)) in quots.iter().zip(
            minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, pr)| pr),
        ) {
            if q.is_zero() {
                continue;
            }
            for (r, or) in rep.iter_mut().zip(other_rep.iter()) {
                *r = r.sub(&q.mul(or)?)?;
            }
        }
        minimal[i] = (rem, rep);
    }

    minimal.sort_by(|a, b| {
        let la = a.0.leading_term(order).unwrap().0;
        let lb = b.0.leading_term(order).unwrap().0;
        order.cmp(ring, la, lb)
    });

    let (basis, cofactors): (Vec<_>, Vec<_>) = minimal.into_iter().unzip();
    Ok(GroebnerData { basis, cofactors })
}

/// Reduced Gröbner basis of the given generators, sorted ascending by
/// leading monomial; deterministic and unique for the order.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_extended(ring, gens, order).map(|d| d.basis)
}

/// Syzygies of a Gröbner basis, one per S-pair (Schreyer's construction):
/// every returned vector `s` satisfies `sum(s[k] * basis[k]) = 0`, and
/// together they generate the full syzygy module of the basis.
pub fn schreyer_syzygies(
    ring: &Ring,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Result<Vec<Vec<Polynomial>>> {
    let field = *ring.field();
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (lmi, lci) = basis[i].leading_term(order).unwrap();
            let (lmj, lcj) = basis[j].leading_term(order).unwrap();
            let t = lmi.lcm(lmj);
            let mi = lmi.div_into(&t);
            let mj = lmj.div_into(&t);
            let ci = field.inv(lci);
            let cj = field.inv(lcj);
            let spoly = basis[i]
                .mul_term(&mi, ci)?
                .sub(&basis[j].mul_term(&mj, cj)?)?;
            let (quots, rem) = divide(&spoly, basis, order)?;
            assert!(rem.is_zero(), "input to schreyer_syzygies is not a Gröbner basis");
            let mut syz = vec![Polynomial::zero(ring); basis.len()];
            syz[i] = Polynomial::from_terms(ring, vec![(mi.clone(), ci)])?;
            syz[j] = syz[j].sub(&Polynomial::from_terms(ring, vec![(mj.clone(), cj)])?)?;
            for (s, q) in syz.iter_mut().zip(&quots) {
                *s = s.sub(q)?;
            }
            if syz.iter().any(|s| !s.is_zero()) {
                out.push(syz);
            }
        }
    }
    Ok(out)
}
