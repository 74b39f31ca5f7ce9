//! Cohomology characters of the Koszul-dual coLie coalgebras `a_n` of the
//! truncated algebras `(Λ[x]/xⁿ)₊`, and their renormalized variants `Â_n`.
//!
//! In characteristic zero the bar homology is `Sym` of the dual's cohomology,
//! so `ch a_n = sym_log(1 + ch H(Bar))`. `Â_n = (a_n[2d](d))[−1]` moves every
//! piece by `(Δc, Δw) = (−2d+1, −d)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use once_cell::sync::Lazy;

use crate::charring::{factorial, FBCharacter, SymFunc};
use crate::error::{Error, Result};
use crate::fbchain;

#[derive(Clone, Debug, PartialEq)]
pub struct LieDualChar {
    pub n: usize,
    pub d: usize,
    pub max_degree: usize,
    /// `ch H*(a_n)`.
    pub character: FBCharacter,
    /// `ch Â_n`.
    pub renormalized: FBCharacter,
}

static CACHE: Lazy<Mutex<HashMap<(usize, usize, usize), Arc<LieDualChar>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `(Δc, Δw)` taking `a_n` to `Â_n`.
pub fn renormalization_shift(d: usize) -> (i64, i64) {
    let d = d as i64;
    (1 - 2 * d, -d)
}

pub fn renormalize(character: &FBCharacter, d: usize) -> FBCharacter {
    let (dc, dw) = renormalization_shift(d);
    character.shift(dc, dw)
}

fn validate(d: usize, max_degree: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidArgument("dimension d must be ≥ 1".into()));
    }
    if max_degree < 1 {
        return Err(Error::InvalidArgument("truncation K must be ≥ 1".into()));
    }
    crate::check_degree_cap(max_degree)
}

/// `a_2`: the n = 2 bar complex has zero differential, so its homology is the
/// tensor coalgebra on one class at `(1, 2d−1, d)`; take `sym_log` of that.
pub fn a2_character(d: usize, max_degree: usize) -> Result<LieDualChar> {
    validate(d, max_degree)?;
    let dd = d as i64;
    let generator = FBCharacter::single(max_degree, 1, 2 * dd - 1, dd, SymFunc::h(1));
    let mut tensor = FBCharacter::unit(max_degree);
    let mut power = FBCharacter::unit(max_degree);
    for _ in 1..=max_degree {
        power = power.induction_product(&generator);
        tensor = tensor.add(&power);
    }
    let character = tensor.sym_log()?;
    Ok(LieDualChar {
        n: 2,
        d,
        max_degree,
        renormalized: renormalize(&character, d),
        character,
    })
}

/// Character of the bar homology `H(Bar A_{n,+})`, without unit.
pub fn bar_homology_character(n: usize, d: usize, max_degree: usize) -> Result<FBCharacter> {
    let cx = fbchain::bar_complex(n, d, max_degree)?;
    Ok(fbchain::homology(&cx).character())
}

/// `a_n` for any `n ≥ 2`, from the bar complex; results are cached.
pub fn an_character(n: usize, d: usize, max_degree: usize) -> Result<LieDualChar> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("a_n needs n ≥ 2, got {n}")));
    }
    validate(d, max_degree)?;
    let key = (n, d, max_degree);
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return Ok((**hit).clone());
    }
    let bar = bar_homology_character(n, d, max_degree)?;
    let character = FBCharacter::unit(max_degree).add(&bar).sym_log()?;
    let out = LieDualChar {
        n,
        d,
        max_degree,
        renormalized: renormalize(&character, d),
        character,
    };
    check_invariants(&out)?;
    CACHE.lock().unwrap().insert(key, Arc::new(out.clone()));
    Ok(out)
}

/// Structural checks on `a_n`; a failure means a sign or shift bug upstream.
pub fn check_invariants(a: &LieDualChar) -> Result<()> {
    let fail = |msg: String| Err(Error::Calibration(format!("a_{} (d={}): {msg}", a.n, a.d)));
    let (n, d) = (a.n as i64, a.d as i64);
    if !a.character.is_effective() {
        return fail("character is not effective".into());
    }
    let first = a.character.slice(1);
    if first.len() != 1 || first.get(&(2 * d - 1, d)) != Some(&SymFunc::h(1)) {
        return fail(format!("degree 1 slice is not h1 at ({}, {d})", 2 * d - 1));
    }
    for (deg, _) in a.character.pieces() {
        let k = deg.k as i64;
        if deg.k > 1 && k < n {
            return fail(format!("nonzero slice at k={k} with 1 < k < n"));
        }
        if deg.w != d * k {
            return fail(format!("piece at (k,c,w)=({k},{},{}) has w ≠ dk", deg.c, deg.w));
        }
        let lower = (2 * d - 1) * k;
        // c ≤ (2d(n−1) − 1)k/(n−1), cleared of denominators
        let upper_ok = n == 2 || deg.c * (n - 1) <= (2 * d * (n - 1) - 1) * k;
        if deg.c < lower || !upper_ok {
            return fail(format!("piece at (k,c)=({k},{}) outside the support bounds", deg.c));
        }
    }
    if a.n == 2 {
        for k in 1..=a.max_degree {
            let dims = a.character.dimension(k);
            let expected = factorial(k - 1);
            let placed = (2 * d - 1) * k as i64;
            if dims.len() != 1 || dims.get(&(placed, d * k as i64)) != Some(&expected) {
                return fail(format!("slice k={k} is not concentrated at c={placed} with dim {expected}"));
            }
        }
    }
    let (dc, dw) = renormalization_shift(a.d);
    if a.renormalized != a.character.shift(dc, dw) {
        return fail("renormalized character is not the shifted raw character".into());
    }
    Ok(())
}

/// Character of the operator coLie coalgebra `Â_n` truncated to graded degrees `≤ m`.
/// Only `m = 1` is admitted for `n > 2`.
pub fn operator_lie_char(n: usize, d: usize, m: usize, max_degree: usize) -> Result<FBCharacter> {
    if m < 1 {
        return Err(Error::InvalidArgument("operator degree m must be ≥ 1".into()));
    }
    if n != 2 && m > 1 {
        return Err(Error::Hypothesis(format!(
            "operator splitting beyond degree 1 is only available for n = 2 (got n = {n}, m = {m})"
        )));
    }
    let a = if n == 2 {
        a2_character(d, max_degree)?
    } else {
        an_character(n, d, max_degree.min(m))?
    };
    let mut out = FBCharacter::empty(max_degree);
    for (deg, f) in a.renormalized.pieces() {
        if deg.k <= m {
            out.add_piece(deg.k, deg.c, deg.w, f);
        }
    }
    Ok(out)
}

/// Sum of the dimensions of the graded-degree-`k` slice of `a_2`, i.e. `(k−1)!`.
pub fn a2_dimension(k: usize) -> BigInt {
    factorial(k.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::Partition;

    #[test]
    fn a2_examples() {
        let a = a2_character(1, 3).unwrap();
        assert_eq!(a.character.get(1, 1, 1), SymFunc::h(1));
        assert_eq!(a.character.get(2, 2, 2), SymFunc::h(2));
        assert_eq!(a.character.total_dimension(3), BigInt::from(2));
        assert_eq!(a.character.slice(3).len(), 1);
        assert_eq!(a.character.get(3, 3, 3), SymFunc::s(&Partition::new(vec![2, 1])));
        let a = a2_character(2, 2).unwrap();
        assert_eq!(a.character.get(2, 6, 4), SymFunc::h(2));
        assert_eq!(a.renormalized.get(2, 3, 2), SymFunc::h(2));
        check_invariants(&a).unwrap();
    }

    #[test]
    fn a2_slices_are_omega_of_lie() {
        // Lie_k = (1/k) Σ_{e|k} μ(e) p_e^{k/e}
        let a = a2_character(1, 6).unwrap();
        for k in 1..=6 {
            let mut lie = SymFunc::zero();
            for e in (1..=k).filter(|e| k % e == 0) {
                let mu = match e {
                    1 => 1,
                    2 | 3 | 5 => -1,
                    6 => 1,
                    _ => 0,
                };
                let p = SymFunc::p(Partition::new(vec![e; k / e]));
                lie += &p.scale(&num_rational::BigRational::new(mu.into(), (k as i64).into()));
            }
            let slice = a.character.slice(k);
            assert_eq!(slice.len(), 1);
            assert_eq!(slice.values().next().unwrap(), &lie.omega(), "k={k}");
        }
    }

    #[test]
    fn an_calibrates_against_a2() {
        for d in 1..=2 {
            assert_eq!(an_character(2, d, 5).unwrap(), a2_character(d, 5).unwrap());
        }
    }

    #[test]
    fn an_examples() {
        for d in 1..=2 {
            let a = an_character(3, d, 4).unwrap();
            assert!(a.character.slice(2).is_empty());
        }
        let a = an_character(3, 1, 3).unwrap();
        let slice = a.character.slice(3);
        assert!(!slice.is_empty());
        assert!(slice.keys().all(|&(c, w)| (3..=5).contains(&c) && w == 3));
    }

    #[test]
    fn round_trip_reproduces_bar_homology() {
        for n in 2..=4 {
            let a = an_character(n, 1, 5).unwrap();
            let bar = bar_homology_character(n, 1, 5).unwrap();
            assert_eq!(a.character.sym_exp().unwrap(), FBCharacter::unit(5).add(&bar));
        }
    }

    #[test]
    fn operator_lie_examples() {
        let o = operator_lie_char(2, 1, 1, 4).unwrap();
        assert_eq!(o, FBCharacter::single(4, 1, 0, 0, SymFunc::h(1)));
        let o = operator_lie_char(2, 1, 2, 4).unwrap();
        assert_eq!(o.get(2, 1, 1), SymFunc::h(2));
        assert!(o.slice(3).is_empty());
        let o = operator_lie_char(2, 2, 2, 4).unwrap();
        assert_eq!(o.get(2, 3, 2), SymFunc::h(2));
        let o = operator_lie_char(3, 1, 1, 4).unwrap();
        assert_eq!(o, FBCharacter::single(4, 1, 0, 0, SymFunc::h(1)));
        assert!(operator_lie_char(2, 1, 0, 4).is_err());
        assert!(operator_lie_char(3, 1, 2, 4).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(an_character(1, 1, 3).is_err());
        assert!(a2_character(0, 3).is_err());
        assert!(a2_character(1, 0).is_err());
    }
}
