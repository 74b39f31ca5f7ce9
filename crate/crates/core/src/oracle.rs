//! Combinatorial ground truth: point counts of `P_n^k(A^d)` over finite
//! fields, unsigned Stirling numbers, and the top homology of partition lattices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::charring::{partitions, SymFunc};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::poly::Polynomial;

/// Largest `q^{dk}` the brute-force enumeration accepts.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountQuery {
    pub q: u64,
    pub d: usize,
    pub k: usize,
    pub n: usize,
}

impl CountQuery {
    pub fn new(q: u64, d: usize, k: usize, n: usize) -> Result<Self> {
        let query = CountQuery { q, d, k, n };
        query.validate()?;
        Ok(query)
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=64).contains(&self.q) || !is_prime_power(self.q) {
            return Err(Error::InvalidArgument(format!("q={} is not a prime power in [2, 64]", self.q)));
        }
        if self.d < 1 {
            return Err(Error::InvalidArgument("dimension d must be ≥ 1".into()));
        }
        if self.k > 10 {
            return Err(Error::InvalidArgument(format!("k={} exceeds 10", self.k)));
        }
        if self.n < 2 {
            return Err(Error::InvalidArgument(format!("n={} must be ≥ 2", self.n)));
        }
        Ok(())
    }
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).unwrap();
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// Prime powers in `[2, 64]`, increasing.
pub fn prime_powers() -> Vec<u64> {
    (2..=64).filter(|&q| is_prime_power(q)).collect()
}

/// `counts[j]` = number of set partitions of `{1..k}` into `j` blocks of size `≤ max_block`.
pub fn restricted_stirling2(k: usize, max_block: usize) -> Vec<BigInt> {
    // table[m][j]: partitions of an m-set; the block holding the last element has size i
    let mut table = vec![vec![BigInt::zero(); k + 1]; k + 1];
    table[0][0] = BigInt::one();
    for m in 1..=k {
        for j in 1..=m {
            let mut total = BigInt::zero();
            for i in 1..=max_block.min(m) {
                total += binomial(m - 1, i - 1) * &table[m - i][j - 1];
            }
            table[m][j] = total;
        }
    }
    table.swap_remove(k)
}

fn binomial(n: usize, r: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..r {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// `|P_n^k(A^d)(F_q)|`: maps `[k] → F_q^d` with every fibre of size `< n`, summed
/// over fibre partitions as falling factorials of `q^d`.
pub fn point_count(query: &CountQuery) -> Result<BigInt> {
    query.validate()?;
    let points = BigInt::from(query.q).pow(query.d as u32);
    let counts = restricted_stirling2(query.k, query.n - 1);
    let mut total = BigInt::zero();
    for (j, count) in counts.iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        let mut falling = BigInt::one();
        for i in 0..j {
            falling *= &points - BigInt::from(i);
        }
        total += count * falling;
    }
    Ok(total)
}

/// Direct enumeration of all maps `[k] → F_q^d`.
pub fn point_count_brute_force(query: &CountQuery) -> Result<u64> {
    query.validate()?;
    let points = query.q.pow(query.d as u32);
    let total = (points as u128).pow(query.k as u32);
    if total > BRUTE_FORCE_LIMIT as u128 {
        return Err(Error::InvalidArgument(format!(
            "brute force over {total} maps exceeds the limit {BRUTE_FORCE_LIMIT}"
        )));
    }
    let mut count = 0u64;
    let mut fibres = vec![0usize; points as usize];
    let mut digits = vec![0u64; query.k];
    for code in 0..total as u64 {
        let mut x = code;
        for digit in digits.iter_mut() {
            *digit = x % points;
            x /= points;
        }
        fibres.iter_mut().for_each(|f| *f = 0);
        let mut ok = true;
        for &v in &digits {
            fibres[v as usize] += 1;
            if fibres[v as usize] >= query.n {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// The point count as a polynomial in `q`, interpolated through `dk+1` prime powers.
pub fn point_count_polynomial(d: usize, k: usize, n: usize) -> Result<Polynomial> {
    let needed = d * k + 1;
    let qs = prime_powers();
    if needed > qs.len() {
        return Err(Error::InvalidArgument(format!(
            "degree {} needs {needed} interpolation nodes, only {} prime powers ≤ 64",
            d * k,
            qs.len()
        )));
    }
    let mut points = Vec::with_capacity(needed);
    for &q in &qs[..needed] {
        points.push((BigInt::from(q), point_count(&CountQuery::new(q, d, k, n)?)?));
    }
    Polynomial::interpolate('q', &points)
        .ok_or_else(|| Error::Calibration("point count is not an integer polynomial".into()))
}

/// Unsigned Stirling numbers of the first kind via `c(k,j) = c(k−1,j−1) + (k−1)c(k−1,j)`.
pub fn stirling_unsigned(k: usize, j: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=k {
        let mut next = vec![BigInt::zero(); m + 1];
        for (i, v) in row.iter().enumerate() {
            next[i + 1] += v;
            next[i] += v * BigInt::from(m - 1);
        }
        row = next;
    }
    row.get(j).cloned().unwrap_or_default()
}

/// Set partition of `{0..k}` as a restricted growth string.
type SetPartition = Vec<u8>;

fn set_partitions(k: usize) -> Vec<SetPartition> {
    fn go(prefix: &mut SetPartition, k: usize, next: u8, out: &mut Vec<SetPartition>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for label in 0..=next {
            prefix.push(label);
            go(prefix, k, next.max(label + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, 0, &mut out);
    out
}

fn canonical(labels: &[u8]) -> SetPartition {
    let mut relabel: HashMap<u8, u8> = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let n = relabel.len() as u8;
            *relabel.entry(*l).or_insert(n)
        })
        .collect()
}

fn refines(x: &SetPartition, y: &SetPartition) -> bool {
    (0..x.len()).all(|i| (0..i).all(|j| x[i] != x[j] || y[i] == y[j]))
}

/// Chains in the proper part of Π_k, grouped by number of elements.
fn proper_chains(k: usize) -> (Vec<SetPartition>, Vec<Vec<Vec<usize>>>) {
    let elements: Vec<SetPartition> = set_partitions(k)
        .into_iter()
        .filter(|p| {
            let blocks = p.iter().max().map(|&m| m as usize + 1).unwrap_or(0);
            blocks > 1 && blocks < k
        })
        .collect();
    let above: Vec<Vec<usize>> = (0..elements.len())
        .map(|i| {
            (0..elements.len())
                .filter(|&j| j != i && refines(&elements[i], &elements[j]))
                .collect()
        })
        .collect();
    let mut by_length: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    let mut frontier: Vec<Vec<usize>> = (0..elements.len()).map(|i| vec![i]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for chain in &frontier {
            for &j in &above[*chain.last().unwrap()] {
                let mut longer = chain.clone();
                longer.push(j);
                next.push(longer);
            }
        }
        by_length.push(frontier);
        frontier = next;
    }
    (elements, by_length)
}

/// Frobenius character of the top reduced homology of the proper part of the
/// partition lattice Π_k, `2 ≤ k ≤ 5`.
///
/// The homology is checked to be concentrated in degree `k−3`; the character
/// is then the Lefschetz number of the chain complex, where a fixed chain is
/// fixed pointwise and contributes `+1`.
pub fn partition_lattice_character(k: usize) -> Result<SymFunc> {
    if !(2..=5).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "partition lattice character needs 2 ≤ k ≤ 5, got {k}"
        )));
    }
    let (elements, chains) = proper_chains(k);
    // chains[i] has i elements, i.e. simplicial dimension i−1
    let ranks: Vec<usize> = (1..chains.len())
        .map(|len| {
            let index: HashMap<&Vec<usize>, usize> =
                chains[len - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
            linalg::rank(chains[len].iter().map(|chain| -> SparseVec {
                linalg::sparse_from_entries((0..chain.len()).map(|i| {
                    let mut face = chain.clone();
                    face.remove(i);
                    (index[&face], if i % 2 == 0 { 1 } else { -1 })
                }))
            }))
        })
        .collect();
    let top = k - 1; // chains with k−2 elements, i.e. dimension k−3
    for len in 0..chains.len() {
        let out_rank = if len == 0 { 0 } else { ranks[len - 1] };
        let in_rank = ranks.get(len).copied().unwrap_or(0);
        let homology = chains[len].len() - out_rank - in_rank;
        let expected = if len + 1 == top { crate::charring::factorial(k - 1) } else { BigInt::zero() };
        if BigInt::from(homology) != expected {
            return Err(Error::Calibration(format!(
                "partition lattice Π_{k}: reduced homology in dimension {} has rank {homology}",
                len as i64 - 1
            )));
        }
    }
    let index: HashMap<&SetPartition, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 }; // (−1)^{k−3}
    let mut out = SymFunc::zero();
    for mu in partitions(k) {
        let perm = mu.representative();
        let image: Vec<usize> = elements
            .iter()
            .map(|p| {
                let mut moved = vec![0u8; k];
                for (i, &l) in p.iter().enumerate() {
                    moved[perm[i]] = l;
                }
                index[&canonical(&moved)]
            })
            .collect();
        let mut lefschetz = 0i64;
        for (len, family) in chains.iter().enumerate() {
            let fixed = family.iter().filter(|c| c.iter().all(|&x| image[x] == x)).count() as i64;
            // dimension len−1
            lefschetz += if len % 2 == 1 { fixed } else { -fixed };
        }
        let value = BigRational::new(BigInt::from(sign * lefschetz), mu.z());
        out += &SymFunc::p(mu).scale(&value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::Partition;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(point_count(&CountQuery::new(3, 1, 3, 2).unwrap()).unwrap(), big(6));
        assert_eq!(point_count(&CountQuery::new(2, 1, 3, 3).unwrap()).unwrap(), big(6));
        for (q, d) in [(2, 1), (5, 2), (64, 1)] {
            let n = 3;
            let got = point_count(&CountQuery::new(q, d, 1, n).unwrap()).unwrap();
            assert_eq!(got, BigInt::from(q).pow(d as u32));
        }
    }

    #[test]
    fn point_count_matches_brute_force() {
        for q in [2u64, 3, 4, 5] {
            for d in 1..=2 {
                for k in 0..=4 {
                    for n in 2..=5 {
                        let query = CountQuery::new(q, d, k, n).unwrap();
                        let Ok(brute) = point_count_brute_force(&query) else {
                            continue;
                        };
                        assert_eq!(point_count(&query).unwrap(), BigInt::from(brute), "{query:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn point_count_polynomial_properties() {
        for d in 1..=2 {
            for k in 0..=6 {
                for n in 2..=8 {
                    let p = point_count_polynomial(d, k, n).unwrap();
                    assert_eq!(p.degree().unwrap_or(0), (d * k) as i64);
                    if n > k {
                        assert_eq!(p, Polynomial::monomial('q', (d * k) as i64, big(1)));
                    }
                    if n == 2 {
                        let mut falling = Polynomial::monomial('q', 0, big(1));
                        for i in 0..k {
                            let factor = &Polynomial::monomial('q', d as i64, big(1))
                                - &Polynomial::monomial('q', 0, big(i as i64));
                            falling = &falling * &factor;
                        }
                        assert_eq!(p, falling);
                    }
                }
            }
        }
        assert_eq!(point_count_polynomial(1, 3, 3).unwrap().to_string(), "q^3 - q");
    }

    #[test]
    fn query_validation() {
        assert!(CountQuery::new(6, 1, 2, 2).is_err());
        assert!(CountQuery::new(1, 1, 2, 2).is_err());
        assert!(CountQuery::new(128, 1, 2, 2).is_err());
        assert!(CountQuery::new(4, 1, 11, 2).is_err());
        assert!(CountQuery::new(4, 1, 2, 1).is_err());
        assert!(CountQuery::new(4, 0, 2, 2).is_err());
        assert_eq!(prime_powers().len(), 27);
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_unsigned(3, 2), big(3));
        assert_eq!(stirling_unsigned(3, 1), big(2));
        for k in 0..8 {
            assert_eq!(stirling_unsigned(k, k), big(1));
        }
        let row: BigInt = (0..=6).map(|j| stirling_unsigned(6, j)).sum();
        assert_eq!(row, big(720));
    }

    #[test]
    fn partition_lattice_examples() {
        assert_eq!(partition_lattice_character(2).unwrap(), SymFunc::h(2));
        let three = partition_lattice_character(3).unwrap();
        assert_eq!(three, SymFunc::s(&Partition::new(vec![2, 1])));
        for (k, dim) in [(4, 6), (5, 24)] {
            let f = partition_lattice_character(k).unwrap();
            assert_eq!(f.dimension(), big(dim));
            assert!(f.is_effective());
        }
        assert!(partition_lattice_character(1).is_err());
        assert!(partition_lattice_character(6).is_err());
    }
}
