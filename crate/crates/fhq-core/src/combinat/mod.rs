//! Partitions, Young diagrams, contents, standard tableaux, border strips,
//! e-cores, q-contents and content polynomials.

mod partition;
mod strips;
mod tableau;

pub use partition::{BadPartition, Partition};
pub use strips::{e_core, removable_border_strips, remove_strip, BorderStrip};
pub use tableau::{standard_tableaux, StandardTableau, TableauSizeGuard, TABLEAU_SIZE_GUARD};

use crate::exactalg::{LaurentQ, PolyX};

/// Content multiset of the diagram, sorted ascending.
pub fn contents(lambda: &Partition) -> Vec<i64> {
    lambda.contents()
}

/// q-content multiset: `[c]_q` for each content `c`, in content order.
pub fn q_contents(lambda: &Partition) -> Vec<LaurentQ> {
    lambda.contents().into_iter().map(LaurentQ::qnumber).collect()
}

/// Contents reduced mod `e`, sorted ascending.
pub fn contents_mod_e(lambda: &Partition, e: u32) -> Vec<u32> {
    lambda.contents_mod(e)
}

/// The content polynomial `prod_{P in cont(lambda)} (x + [P]_q)` over
/// `Z[q,q^-1]`.
pub fn content_polynomial(lambda: &Partition) -> PolyX {
    let mut out = PolyX::one();
    for c in lambda.contents() {
        out = &out * &PolyX::x_plus(LaurentQ::qnumber(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn q_contents_examples() {
        // (2): contents {0,1} -> {0, 1}
        assert_eq!(
            q_contents(&pt(&[2])),
            vec![LaurentQ::zero(), LaurentQ::one()]
        );
        // (1,1): contents {-1,0} -> {-q^-1, 0}
        assert_eq!(
            q_contents(&pt(&[1, 1])),
            vec![LaurentQ::qnumber(-1), LaurentQ::zero()]
        );
        // (2,1): contents {-1,0,1}
        assert_eq!(
            q_contents(&pt(&[2, 1])),
            vec![LaurentQ::qnumber(-1), LaurentQ::zero(), LaurentQ::one()]
        );
    }

    #[test]
    fn content_polynomial_examples() {
        assert_eq!(content_polynomial(&Partition::empty()), PolyX::one());
        // (2): x(x+1) = x^2 + x
        let p = content_polynomial(&pt(&[2]));
        assert_eq!(p.coeff(2), LaurentQ::one());
        assert_eq!(p.coeff(1), LaurentQ::one());
        assert!(p.coeff(0).is_zero());
        // (1,1): x(x - q^-1)
        let p = content_polynomial(&pt(&[1, 1]));
        assert_eq!(p.coeff(2), LaurentQ::one());
        assert_eq!(p.coeff(1), LaurentQ::qnumber(-1));
        assert!(p.coeff(0).is_zero());
    }

    #[test]
    fn content_polynomial_telescoping_identity() {
        // c(x) * q^n * prod_i (x + [-i]_q) = c(qx - 1) * prod_i (x + [lambda_i - i]_q)
        // as an exact identity in Z[q,q^-1][x], with lambda padded to n parts
        let q = LaurentQ::q();
        let minus_one = LaurentQ::from_int(-1);
        for lam in Partition::all_up_to_size(8) {
            let n = lam.size() as i64;
            let c = content_polynomial(&lam);
            let mut lhs = c.scale(&LaurentQ::q_pow(n));
            for i in 1..=n {
                lhs = &lhs * &PolyX::x_plus(LaurentQ::qnumber(-i));
            }
            let mut rhs = c.compose_affine(&q, &minus_one);
            for i in 1..=n {
                let li = lam.part(i as usize - 1) as i64;
                rhs = &rhs * &PolyX::x_plus(LaurentQ::qnumber(li - i));
            }
            assert_eq!(lhs, rhs, "lambda={lam}");
        }
    }

    #[test]
    fn block_content_equivalence() {
        // same e-core iff same content residue multiset, for all pairs of
        // partitions of equal size
        for n in 0..=8u32 {
            let lams = Partition::all_of_size(n);
            for e in 2..=5u32 {
                for a in &lams {
                    for b in &lams {
                        let same_core = e_core(a, e) == e_core(b, e);
                        let same_res = contents_mod_e(a, e) == contents_mod_e(b, e);
                        assert_eq!(same_core, same_res, "a={a} b={b} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn syt_count_sanity() {
        // sum over shapes of (f^lambda)^2 = n!
        for n in 1..=7u32 {
            let mut total = BigInt::from(0);
            for lam in Partition::all_of_size(n) {
                let f = lam.num_standard_tableaux();
                total += &f * &f;
            }
            let mut fact = BigInt::from(1);
            for k in 1..=n as i64 {
                fact *= BigInt::from(k);
            }
            assert_eq!(total, fact);
        }
    }
}
