//! Global monomial orders.

use std::cmp::Ordering;

use crate::poly::Monomial;
use crate::ring::Ring;

/// A global monomial order (1 is the minimum monomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic on the distinguished (weighted) grading.
    /// This is the crate's canonical order.
    GrevLex,
    /// Pure lexicographic, x_1 > x_2 > ... > x_n.
    Lex,
    /// Block order eliminating the first `k` variables: compare the first
    /// block by (raw degree, revlex), ties by grevlex on the rest.
    Elimination(usize),
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    // With equal degrees, the monomial whose *last* differing exponent is
    // smaller is the larger one.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex_slice(ring: &Ring, offset: usize, a: &[u32], b: &[u32]) -> Ordering {
    let deg = |e: &[u32]| -> i64 {
        e.iter()
            .enumerate()
            .map(|(i, &x)| ring.grading().single_weight(offset + i) * x as i64)
            .sum()
    };
    deg(a).cmp(&deg(b)).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    pub fn cmp(&self, ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
        let (ae, be) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::GrevLex => grevlex_slice(ring, 0, ae, be),
            MonomialOrder::Lex => ae.cmp(be),
            MonomialOrder::Elimination(k) => {
                let block = |e: &[u32]| -> u64 { e[..k].iter().map(|&x| x as u64).sum() };
                block(ae)
                    .cmp(&block(be))
                    .then_with(|| revlex_tail(&ae[..k], &be[..k]))
                    .then_with(|| grevlex_slice(ring, k, &ae[k..], &be[k..]))
            }
        }
    }
}
