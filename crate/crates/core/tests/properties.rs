use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

mod common;
use common::{effective_character, permutation, schur_combination};

use tcfa_core::charring::{partitions, tensor_power_character};
use tcfa_core::conf::{self, SpaceCohomology};
use tcfa_core::fbchain::{self, BarWord};
use tcfa_core::stability;
use tcfa_core::{Basis, FBCharacter, Partition, SymFunc};

fn random_symfunc(k: usize) -> impl Strategy<Value = SymFunc> {
    proptest::collection::vec(-3i64..=3, partitions(k).len()).prop_map(move |coeffs| {
        let mut f = SymFunc::zero();
        for (lambda, c) in partitions(k).into_iter().zip(coeffs) {
            f += &SymFunc::p(lambda).scale(&BigRational::new(c.into(), 2.into()));
        }
        f
    })
}

/// `sym_log` by the triangular recursion `f_k = g_k − [sym_exp(f_{<k})]_k`.
fn triangular_log(g: &FBCharacter) -> FBCharacter {
    let k_max = g.max_degree();
    let mut f = FBCharacter::empty(k_max);
    for k in 1..=k_max {
        let lower = f.sym_exp().unwrap();
        let gk = g.filter(|d| d.k == k);
        let ek = lower.filter(|d| d.k == k);
        f = f.add(&gk.sub(&ek));
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn plethysm_is_associative(f in effective_character(8, 2), r in 1usize..=4, s in 1usize..=4) {
        let lhs = f.super_adams(s).unwrap().super_adams(r).unwrap();
        prop_assert_eq!(lhs, f.super_adams(r * s).unwrap());
    }

    #[test]
    fn sym_exp_and_sym_log_are_inverse(f in effective_character(5, 3)) {
        let g = f.sym_exp().unwrap();
        prop_assert_eq!(g.sym_log().unwrap(), f.clone());
        prop_assert_eq!(triangular_log(&g), f);
    }

    #[test]
    fn sym_exp_preserves_effectiveness(f in effective_character(6, 2)) {
        let g = f.sym_exp().unwrap();
        prop_assert!(g.is_effective());
        for (_, h) in g.pieces() {
            prop_assert!(h.is_virtual_character());
        }
    }

    #[test]
    fn induction_product_is_a_commutative_monoid(
        a in effective_character(5, 2), b in effective_character(5, 2), c in effective_character(5, 2)
    ) {
        prop_assert_eq!(a.induction_product(&b), b.induction_product(&a));
        prop_assert_eq!(
            a.induction_product(&b).induction_product(&c),
            a.induction_product(&b.induction_product(&c))
        );
        prop_assert_eq!(a.induction_product(&FBCharacter::unit(5)), a);
    }

    #[test]
    fn basis_conversions_round_trip(k in 1usize..=6, seed in 0usize..64) {
        let f = {
            let coeffs: Vec<u8> = (0..partitions(k).len()).map(|i| ((seed + 3 * i) % 5) as u8).collect();
            &schur_combination(k, &coeffs) - &SymFunc::p(Partition::row(k))
        };
        for basis in [Basis::PowerSum, Basis::Schur, Basis::Homogeneous, Basis::Monomial] {
            let coeffs = f.coefficients(basis);
            prop_assert_eq!(SymFunc::from_basis(basis, &coeffs), f.clone());
        }
    }

    #[test]
    fn random_power_sum_round_trip(f in random_symfunc(5)) {
        for basis in [Basis::Schur, Basis::Homogeneous, Basis::Monomial] {
            prop_assert_eq!(SymFunc::from_basis(basis, &f.coefficients(basis)), f.clone());
        }
    }

    #[test]
    fn bar_differential_squares_to_zero_and_commutes(n in 2usize..=5, k in 1usize..=5,
                                                     shuffle in proptest::collection::vec(0usize..100, 5)) {
        let cx = fbchain::bar_complex(n, 1, k).unwrap();
        let g = cx.degree(k).unwrap();
        let perm = permutation(k, &shuffle);
        for term in g.terms() {
            for w in term.basis() {
                let mut dd: BTreeMap<BarWord, i64> = BTreeMap::new();
                for (t, a) in g.differential(w) {
                    for (u, b) in g.differential(&t) {
                        *dd.entry(u).or_insert(0) += a * b;
                    }
                }
                prop_assert!(dd.values().all(|&v| v == 0));
                let mut lhs: Vec<(BarWord, i64)> =
                    g.differential(w).into_iter().map(|(t, a)| (t.act(&perm), a)).collect();
                let mut rhs = g.differential(&w.act(&perm));
                lhs.sort();
                rhs.sort();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn homology_conserves_euler_characteristic(n in 2usize..=6, d in 1usize..=3, k in 1usize..=5) {
        let h = fbchain::homology(&fbchain::bar_complex(n, d, k).unwrap());
        prop_assert!(h.euler_conserved());
        prop_assert!(h.character().is_effective());
        for p in h.pieces.values() {
            prop_assert_eq!(BigInt::from(p.rank), p.character.dimension());
        }
    }

    #[test]
    fn support_cone_contains_sym_exp(f in effective_character(5, 3)) {
        let cone = stability::support_cone(&f).unwrap();
        prop_assert!(cone.certify_sym_exp(&f).unwrap());
        prop_assert!(cone.b_lower <= cone.b_upper);
    }

    #[test]
    fn conf_is_multiplicative(a in proptest::collection::vec((0i64..3, 0i64..3, 1u64..3), 1..3),
                              b in proptest::collection::vec((0i64..3, 0i64..3, 1u64..3), 1..3),
                              n in 2usize..=3) {
        let x = SpaceCohomology::new(1, a).unwrap().with_flags(false, true, 0, 0).unwrap();
        let y = SpaceCohomology::new(1, b).unwrap().with_flags(false, true, 0, 0).unwrap();
        let xy = x.disjoint_union(&y).unwrap();
        let lhs = conf::conf_cohomology(&xy, n, 4, true).unwrap().character;
        let rhs = conf::conf_cohomology(&x, n, 4, true).unwrap().character
            .induction_product(&conf::conf_cohomology(&y, n, 4, true).unwrap().character);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_undoes_multiplication(a in effective_character(5, 2), b in effective_character(5, 3)) {
        let o = a.sym_exp().unwrap();
        let g = b.sym_exp().unwrap();
        prop_assert_eq!(stability::divide(&o.induction_product(&g), &o).unwrap(), g);
    }
}

#[test]
fn odd_class_gives_exterior_powers() {
    for c in [1i64, 3] {
        let f = FBCharacter::single(6, 1, c, 0, SymFunc::h(1));
        let g = f.sym_exp().unwrap();
        for k in 1..=6 {
            let slice = g.slice(k);
            assert_eq!(slice.len(), 1);
            assert_eq!(slice[&(c * k as i64, 0)], SymFunc::e(k));
        }
    }
}

#[test]
fn tensor_powers_match_repeated_products() {
    let v = FBCharacter::single(4, 1, 1, 0, SymFunc::h(1)).add(&FBCharacter::single(4, 1, 0, 0, SymFunc::h(1)));
    for k in 1..=4 {
        let slice = tensor_power_character(&v, k).unwrap();
        let total: BigInt = slice.values().map(SymFunc::dimension).sum();
        assert_eq!(total, BigInt::from(2).pow(k as u32));
    }
}
