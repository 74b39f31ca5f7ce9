//! Verification suites run by `tcfa verify`: calibration of the dual
//! characters and agreement of the configuration-space pipeline with the oracles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charring::{factorial, FBCharacter};
use crate::conf::{self, SpaceCohomology};
use crate::error::{Error, Result};
use crate::koszul;
use crate::oracle::{self, CountQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Calibration,
    Oracle,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "calibration" => Ok(Suite::Calibration),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite {other:?} (expected calibration, oracle or all)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First counterexample, or a summary when passed.
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {}: {}", self.name, self.detail)
    }
}

fn check(name: &str, outcome: Result<std::result::Result<String, String>>) -> CheckResult {
    match outcome {
        Ok(Ok(detail)) => CheckResult {
            name: name.into(),
            passed: true,
            detail,
        },
        Ok(Err(detail)) => CheckResult {
            name: name.into(),
            passed: false,
            detail,
        },
        Err(e) => CheckResult {
            name: name.into(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

pub fn run(suite: Suite, max_degree: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Calibration | Suite::All) {
        out.extend(calibration(max_degree));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        out.extend(oracle_suite(max_degree));
    }
    out
}

pub fn calibration(max_degree: usize) -> Vec<CheckResult> {
    let k_max = max_degree;
    vec![
        check("a_2 placement", a2_placement(k_max)),
        check("a_2 from the bar complex", a2_bar_agreement(k_max)),
        check("a_2 against partition lattices", a2_partition_lattice(k_max.min(5))),
        check("a_n support bounds", an_bounds(k_max)),
        check("sym_exp(a_n) = bar homology", round_trip(k_max)),
    ]
}

pub fn oracle_suite(max_degree: usize) -> Vec<CheckResult> {
    vec![
        check("inclusion-exclusion vs brute force", brute_force(max_degree.min(4))),
        check("E-polynomial vs point count", e_polynomials(max_degree)),
        check("Betti numbers of P_2^k(A^1)", betti(max_degree)),
    ]
}

type Outcome = Result<std::result::Result<String, String>>;

fn a2_placement(k_max: usize) -> Outcome {
    for d in 1..=2usize {
        let a = koszul::a2_character(d, k_max)?;
        for k in 1..=k_max {
            let dims = a.character.dimension(k);
            let c = (2 * d - 1) as i64 * k as i64;
            let w = (d * k) as i64;
            if dims.len() != 1 || dims.get(&(c, w)) != Some(&factorial(k - 1)) {
                return Ok(Err(format!("d={d} k={k}: dimensions {dims:?}")));
            }
        }
    }
    Ok(Ok(format!("d ∈ {{1,2}}, k ≤ {k_max}: concentrated at c=(2d−1)k with dim (k−1)!")))
}

fn a2_bar_agreement(k_max: usize) -> Outcome {
    for d in 1..=2 {
        if koszul::an_character(2, d, k_max)? != koszul::a2_character(d, k_max)? {
            return Ok(Err(format!("d={d}: bar complex and closed form differ")));
        }
    }
    Ok(Ok(format!("d ∈ {{1,2}}, k ≤ {k_max}")))
}

fn a2_partition_lattice(k_max: usize) -> Outcome {
    let a = koszul::a2_character(1, k_max.max(1))?;
    for k in 2..=k_max {
        let lattice = oracle::partition_lattice_character(k)?;
        let slice = a.character.slice(k);
        if slice.len() != 1 || slice.values().next() != Some(&lattice) {
            return Ok(Err(format!("k={k}: a_2 slice differs from the partition lattice homology")));
        }
    }
    Ok(Ok(format!("2 ≤ k ≤ {k_max}")))
}

fn an_bounds(k_max: usize) -> Outcome {
    for n in 3..=4 {
        for d in 1..=2 {
            // an_character checks the support bounds itself
            koszul::an_character(n, d, k_max)?;
        }
    }
    Ok(Ok(format!("n ∈ {{3,4}}, d ∈ {{1,2}}, k ≤ {k_max}")))
}

fn round_trip(k_max: usize) -> Outcome {
    for n in 2..=4 {
        let a = koszul::an_character(n, 1, k_max)?;
        let bar = koszul::bar_homology_character(n, 1, k_max)?;
        if a.character.sym_exp()? != FBCharacter::unit(k_max).add(&bar) {
            return Ok(Err(format!("n={n}: sym_exp(a_n) differs from the bar homology")));
        }
    }
    Ok(Ok(format!("n ≤ 4, k ≤ {k_max}")))
}

fn brute_force(k_max: usize) -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3, 4, 5] {
        for d in 1..=2 {
            for k in 0..=k_max {
                for n in 2..=4 {
                    let query = CountQuery::new(q, d, k, n)?;
                    let Ok(brute) = oracle::point_count_brute_force(&query) else {
                        continue;
                    };
                    if oracle::point_count(&query)? != BigInt::from(brute) {
                        return Ok(Err(format!("(n,d,k,q)=({n},{d},{k},{q})")));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(format!("{checked} queries")))
}

fn e_polynomials(k_max: usize) -> Outcome {
    for d in 1..=2 {
        for n in 2..=4 {
            let cc = conf::conf_cohomology(&SpaceCohomology::affine(d), n, k_max, true)?;
            for k in 0..=k_max {
                let e = conf::e_polynomial(&cc, k)?;
                let expected = oracle::point_count_polynomial(d, k, n)?;
                if e != expected {
                    return Ok(Err(format!("(n,d,k)=({n},{d},{k}): {e} vs {expected}")));
                }
                for q in [2u64, 3, 4, 5, 7] {
                    let count = oracle::point_count(&CountQuery::new(q, d, k, n)?)?;
                    if e.eval_integer(q as i64) != BigRational::from_integer(count) {
                        return Ok(Err(format!("(n,d,k,q)=({n},{d},{k},{q})")));
                    }
                }
            }
        }
    }
    Ok(Ok(format!("d ∈ {{1,2}}, n ∈ {{2,3,4}}, k ≤ {k_max}")))
}

fn betti(k_max: usize) -> Outcome {
    let cc = conf::conf_cohomology(&SpaceCohomology::affine(1), 2, k_max, true)?;
    for k in 0..=k_max {
        let p = conf::poincare(&cc, k)?;
        for c in 0..=k as i64 {
            let expected = oracle::stirling_unsigned(k, k - c as usize);
            if p.coefficient(c) != expected {
                return Ok(Err(format!("k={k} c={c}: {} vs {expected}", p.coefficient(c))));
            }
        }
    }
    Ok(Ok(format!("k ≤ {k_max}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_degree() {
        let results = run(Suite::All, 4);
        assert_eq!(results.len(), 8);
        for r in &results {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("oracle".parse::<Suite>().unwrap(), Suite::Oracle);
        assert!("everything".parse::<Suite>().is_err());
    }
}
