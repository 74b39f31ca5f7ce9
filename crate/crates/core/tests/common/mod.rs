#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use tcfa_core::charring::partitions;
use tcfa_core::{FBCharacter, SymFunc};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Effective symmetric function of degree `k` from small Schur coefficients.
pub fn schur_combination(k: usize, coeffs: &[u8]) -> SymFunc {
    let mut f = SymFunc::zero();
    for (lambda, &c) in partitions(k).iter().zip(coeffs) {
        f += &SymFunc::s(lambda).scale(&q(c as i64));
    }
    f
}

prop_compose! {
    pub fn piece(max_k: usize)(k in 1..=max_k, c in 0i64..4, w in 0i64..3,
                              coeffs in proptest::collection::vec(0u8..=2, 7)) -> (usize, i64, i64, SymFunc) {
        let mut coeffs = coeffs;
        coeffs[0] += 1;
        (k, c, w, schur_combination(k, &coeffs))
    }
}

/// Nonzero effective characters with pieces in graded degrees `1..=max_k`.
pub fn effective_character(max_degree: usize, max_k: usize) -> impl Strategy<Value = FBCharacter> {
    proptest::collection::vec(piece(max_k), 1..4).prop_map(move |pieces| {
        let mut f = FBCharacter::empty(max_degree);
        for (k, c, w, g) in pieces {
            f.add_piece(k, c, w, &g);
        }
        f
    })
}

/// A permutation of `0..k` from a list of swap targets.
pub fn permutation(k: usize, swaps: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..k).collect();
    for (i, s) in swaps.iter().take(k).enumerate() {
        perm.swap(i, s % k);
    }
    perm
}
