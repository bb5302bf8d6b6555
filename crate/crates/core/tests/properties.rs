use proptest::prelude::*;

use doset_hibi::catalog::posets_with_minimum_up_to;
use doset_hibi::determinantal::{gamma_prime_elements, GammaTuple};
use doset_hibi::sagbi::{DiagonalOrder, Monomial, Var};
use doset_hibi::semigroup::HibiRing;
use doset_hibi::{DistributiveLattice, ExponentVector};

fn order() -> DiagonalOrder {
    DiagonalOrder::new(2, 3, &"1,2".parse().unwrap()).unwrap()
}

fn monomial() -> impl Strategy<Value = Monomial> {
    let len = order().vars().len();
    prop::collection::vec(0u32..4, len).prop_map(|exps| {
        let o = order();
        let factors: Vec<(Var, u32)> = o.vars().iter().copied().zip(exps).collect();
        o.monomial(&factors).unwrap()
    })
}

proptest! {
    #[test]
    fn deglex_is_total(a in monomial(), b in monomial()) {
        let lt = a < b;
        let eq = a == b;
        let gt = a > b;
        prop_assert_eq!(lt as u8 + eq as u8 + gt as u8, 1);
    }

    #[test]
    fn deglex_is_multiplicative(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        prop_assert!(a.mul(&c) >= a);
    }

    #[test]
    fn exponent_vectors_add_and_subtract(a in prop::collection::vec(0u64..100, 5), b in prop::collection::vec(0u64..100, 5)) {
        let (x, y) = (ExponentVector::new(a), ExponentVector::new(b));
        let sum = x.checked_add(&y).unwrap();
        prop_assert_eq!(sum.checked_sub(&y), Some(x.clone()));
        prop_assert!(x.dominated_by(&sum));
    }

    #[test]
    fn straightening_preserves_the_exponent(k in 0usize..24, factors in prop::collection::vec(0usize..64, 0..6)) {
        let posets = posets_with_minimum_up_to(4);
        let p = &posets[k % posets.len()];
        let ring = HibiRing::new(DistributiveLattice::from_ideals(p).unwrap());
        let n = ring.lattice().len();
        let factors: Vec<usize> = factors.into_iter().map(|a| a % n).collect();
        let standard = ring.straighten(&factors);
        prop_assert_eq!(ring.recompose(&standard).unwrap(), ring.recompose(&factors).unwrap());
    }

    #[test]
    fn gamma_join_and_meet_are_bounds(n in 3usize..7, i in 0usize..200, j in 0usize..200) {
        let gamma = GammaTuple::new(vec![1, 2]).unwrap();
        let elems = gamma_prime_elements(2, n, &gamma);
        let (a, b) = (&elems[i % elems.len()], &elems[j % elems.len()]);
        let (join, meet) = (a.join(b), a.meet(b));
        prop_assert!(a.leq(&join) && b.leq(&join));
        prop_assert!(meet.leq(a) && meet.leq(b));
        for c in &elems {
            if a.leq(c) && b.leq(c) {
                prop_assert!(join.leq(c));
            }
            if c.leq(a) && c.leq(b) {
                prop_assert!(c.leq(&meet));
            }
        }
    }
}
