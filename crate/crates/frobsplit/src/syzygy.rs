//! First syzygies of an ideal's generator list.
//!
//! Strategy: compute a Gröbner basis G with cofactors A (so G = A·F for the
//! generators F), write F = B·G by division, take Schreyer's syzygies of G
//! from all S-pair reductions, and translate: Syz(F) is generated by
//! { s·A : s ∈ Syz(G) } together with the rows of (Id - B·A).

use crate::error::Result;
use crate::groebner::{divide, schreyer_syzygies};
use crate::ideal::Ideal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A generating set of the first syzygy module of a fixed generator list:
/// every relation `s` satisfies `sum(s[j] * generators[j]) = 0`.
#[derive(Debug, Clone)]
pub struct SyzygyModule {
    ring: Ring,
    generators: Vec<Polynomial>,
    relations: Vec<Vec<Polynomial>>,
}

impl SyzygyModule {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The generator list the relations refer to.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

impl Ideal {
    /// Generating set of the first syzygy module of `self.generators()`.
    /// Each returned tuple is verified to annihilate the generators.
    pub fn syzygies(&self) -> Result<SyzygyModule> {
        let ring = self.ring().clone();
        let gens = self.generators().to_vec();
        let m = gens.len();
        let order = MonomialOrder::GrevLex;

        let data = self.groebner_data()?;
        let s = data.basis.len();

        // B: gens[j] = sum_k b[j][k] * basis[k]
        let mut b = Vec::with_capacity(m);
        for g in &gens {
            let (q, rem) = divide(g, &data.basis, order)?;
            assert!(rem.is_zero(), "generator must reduce to zero against its own basis");
            b.push(q);
        }

        let mut relations: Vec<Vec<Polynomial>> = Vec::new();

        // Schreyer syzygies of the basis, pushed forward along A.
        for s_rel in schreyer_syzygies(&ring, &data.basis, order)? {
            let mut rel = vec![Polynomial::zero(&ring); m];
            for (sk, ak) in s_rel.iter().zip(&data.cofactors) {
                if sk.is_zero() {
                    continue;
                }
                for (r, a) in rel.iter_mut().zip(ak) {
                    *r = r.add(&sk.mul(a)?)?;
                }
            }
            push_unique(&mut relations, rel);
        }

        // Rows of Id - B·A.
        for j in 0..m {
            let mut rel = vec![Polynomial::zero(&ring); m];
            rel[j] = Polynomial::one(&ring);
            for k in 0..s {
                if b[j][k].is_zero() {
                    continue;
                }
                for (r, a) in rel.iter_mut().zip(&data.cofactors[k]) {
                    *r = r.sub(&b[j][k].mul(a)?)?;
                }
            }
            push_unique(&mut relations, rel);
        }

        // Every relation must annihilate the generators.
        for rel in &relations {
            let mut acc = Polynomial::zero(&ring);
            for (s_j, f_j) in rel.iter().zip(&gens) {
                acc = acc.add(&s_j.mul(f_j)?)?;
            }
            assert!(acc.is_zero(), "syzygy fails to annihilate the generators");
        }

        Ok(SyzygyModule {
            ring,
            generators: gens,
            relations,
        })
    }
}

fn push_unique(relations: &mut Vec<Vec<Polynomial>>, rel: Vec<Polynomial>) {
    if rel.iter().all(|p| p.is_zero()) {
        return;
    }
    if relations.contains(&rel) {
        return;
    }
    relations.push(rel);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::linalg::MatFp;

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), vars).unwrap()
    }

    #[test]
    fn koszul_relation_for_two_variables() {
        let r = ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let syz = i.syzygies().unwrap();
        // The Koszul relation (y, x) generates; over F_2 signs vanish.
        let y = Polynomial::var(&r, 1);
        let x = Polynomial::var(&r, 0);
        assert!(syz.relations().contains(&vec![y, x]));
    }

    #[test]
    fn principal_ideal_has_no_syzygies() {
        let r = ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 + y^2"]).unwrap();
        assert!(i.syzygies().unwrap().is_empty());
    }

    /// Rank oracle: in each low degree, the homogeneous syzygies of degree
    /// <= k must span the full kernel of (a_1,...,a_m) -> sum a_j f_j.
    #[test]
    fn completeness_against_linear_algebra() {
        let r = ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let syz = i.syzygies().unwrap();
        let field = *r.field();
        let gens = i.generators();
        let degs: Vec<i64> = gens.iter().map(|g| g.single_degree().unwrap()).collect();

        for k in 0..=6i64 {
            // columns: pairs (j, monomial of degree k - deg f_j); the matrix
            // maps a column to the coefficient vector of m * f_j in R_k.
            let target = r.graded_piece_basis(k);
            let mut cols: Vec<(usize, crate::poly::Monomial)> = Vec::new();
            for (j, d) in degs.iter().enumerate() {
                for m in r.graded_piece_basis(k - d) {
                    cols.push((j, m));
                }
            }
            if cols.is_empty() {
                continue;
            }
            let mut mat = MatFp::zeros(field, target.len(), cols.len());
            for (c, (j, m)) in cols.iter().enumerate() {
                let prod = gens[*j].mul_term(m, 1).unwrap();
                for (row, basis_m) in target.iter().enumerate() {
                    mat.set(row, c, prod.coeff(basis_m));
                }
            }
            let kernel_dim = mat.nullity();

            // span of the syzygy multiples in the same coordinates
            let mut span = MatFp::zeros(field, 0, cols.len());
            for rel in syz.relations() {
                // relation degree: deg(s_j) + deg(f_j) is constant over j
                let rel_deg = rel
                    .iter()
                    .zip(&degs)
                    .filter(|(s, _)| !s.is_zero())
                    .map(|(s, d)| s.single_degree().unwrap() + d)
                    .max()
                    .unwrap();
                for m in r.graded_piece_basis(k - rel_deg) {
                    let mut row = vec![0u64; cols.len()];
                    for (j, s_j) in rel.iter().enumerate() {
                        let shifted = s_j.mul_term(&m, 1).unwrap();
                        for (c, (cj, cm)) in cols.iter().enumerate() {
                            if cj == &j {
                                row[c] = shifted.coeff(cm);
                            }
                        }
                    }
                    span.push_row(&row);
                }
            }
            assert_eq!(span.rank(), kernel_dim, "degree {}", k);
        }
    }
}
