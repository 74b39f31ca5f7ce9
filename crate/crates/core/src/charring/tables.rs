//! Per-degree tables: irreducible characters of S_k (Murnaghan–Nakayama) and
//! Kostka numbers. Built once per degree and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::partition::{partitions, Partition};

pub struct DegreeTables {
    pub degree: usize,
    /// Partitions of `degree` in canonical order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `chi[λ][μ]` = value of the irreducible χ^λ on the class μ.
    pub chi: Vec<Vec<i64>>,
    /// `kostka[λ][μ]` = multiplicity of s_λ in h_μ.
    pub kostka: Vec<Vec<i64>>,
    /// `z[μ]` as a rational.
    pub z: Vec<BigRational>,
}

static CACHE: Lazy<Mutex<HashMap<usize, Arc<DegreeTables>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn tables(degree: usize) -> Arc<DegreeTables> {
    if let Some(t) = CACHE.lock().unwrap().get(&degree) {
        return Arc::clone(t);
    }
    let built = Arc::new(DegreeTables::build(degree));
    CACHE
        .lock()
        .unwrap()
        .entry(degree)
        .or_insert(built)
        .clone()
}

impl DegreeTables {
    fn build(degree: usize) -> Self {
        let parts = partitions(degree);
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let chi: Vec<Vec<i64>> = parts
            .iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| murnaghan_nakayama(lambda, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let z: Vec<BigRational> = parts.iter().map(|p| BigRational::from_integer(p.z())).collect();

        // <h_μ, s_λ> = Σ_ν [p_ν]h_μ · z_ν · χ^λ(ν), with [p_ν]h_μ = #(ways)/∏ z
        // computed through the class function of the permutation module 1↑S_μ.
        let kostka = parts
            .iter()
            .map(|lambda| {
                let li = index[lambda];
                parts
                    .iter()
                    .map(|mu| {
                        // <s_λ, h_μ> = (1/k!) Σ_σ χ^λ(σ) · #fixed points of σ on S_k/S_μ
                        let mut total = BigRational::zero();
                        for (ni, nu) in parts.iter().enumerate() {
                            let fixed = young_permutation_character(mu, nu);
                            if fixed.is_zero() {
                                continue;
                            }
                            total += BigRational::new(
                                fixed * BigInt::from(chi[li][ni]),
                                nu.z(),
                            );
                        }
                        debug_assert!(total.is_integer());
                        i64::try_from(total.to_integer()).expect("Kostka number overflow")
                    })
                    .collect()
            })
            .collect();

        DegreeTables {
            degree,
            parts,
            index,
            chi,
            kostka,
            z,
        }
    }
}

/// Number of cosets of the Young subgroup S_μ fixed by a permutation of cycle
/// type ν: the number of ways to colour the cycles of ν so that colour i
/// covers exactly μ_i points.
pub fn young_permutation_character(mu: &Partition, nu: &Partition) -> BigInt {
    fn go(cycles: &[usize], remaining: &mut Vec<usize>) -> BigInt {
        match cycles.split_first() {
            None => {
                if remaining.iter().all(|&r| r == 0) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&len, rest)) => {
                let mut total = BigInt::zero();
                for i in 0..remaining.len() {
                    if remaining[i] >= len {
                        remaining[i] -= len;
                        total += go(rest, remaining);
                        remaining[i] += len;
                    }
                }
                total
            }
        }
    }
    go(nu.parts(), &mut mu.parts().to_vec())
}

fn murnaghan_nakayama(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&Partition::new(parts), rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_character_table() {
        let t = tables(3);
        // rows [3], [2,1], [1,1,1]; columns [3], [2,1], [1,1,1]
        assert_eq!(t.chi, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    }

    #[test]
    fn column_orthogonality() {
        for k in 1..=7 {
            let t = tables(k);
            for a in 0..t.parts.len() {
                for b in 0..t.parts.len() {
                    let s: i64 = (0..t.parts.len()).map(|l| t.chi[l][a] * t.chi[l][b]).sum();
                    let expected = if a == b {
                        i64::try_from(t.parts[a].z()).unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn kostka_is_unitriangular() {
        for k in 1..=7 {
            let t = tables(k);
            for (l, lambda) in t.parts.iter().enumerate() {
                for (m, mu) in t.parts.iter().enumerate() {
                    let v = t.kostka[l][m];
                    if l == m {
                        assert_eq!(v, 1);
                    } else if !lambda.dominates(mu) {
                        assert_eq!(v, 0, "{lambda} {mu}");
                    } else {
                        assert!(v >= 0);
                    }
                }
            }
        }
        let t = tables(4);
        let i = |p: Vec<usize>| t.index[&Partition::new(p)];
        assert_eq!(t.kostka[i(vec![3, 1])][i(vec![2, 1, 1])], 2);
        assert_eq!(t.kostka[i(vec![2, 2])][i(vec![1, 1, 1, 1])], 2);
    }
}
