use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from arbitrary positive parts (sorted, zeros dropped).
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `[k]`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `[1^k]`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of parts; `p_λ · p_μ = p_{λ ∪ μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Every part multiplied by `r`; `p_r ∘ p_λ = p_{rλ}`.
    pub fn scale(&self, r: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * r).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Size of the centralizer of a permutation of cycle type `self`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0usize;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                i += 1;
            }
            for m in 1..=mult {
                z *= BigInt::from(m) * BigInt::from(part);
            }
        }
        z
    }

    /// Number of permutations of this cycle type: `k!/z_λ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// A permutation of `{0..k}` with this cycle type (cycles on consecutive runs).
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.size());
        let mut start = 0;
        for &part in &self.0 {
            for j in 0..part {
                perm.push(start + (j + 1) % part);
            }
            start += part;
        }
        perm
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Parses the bracket notation `[3,1,1]` (also accepts `[]`).
    pub fn parse(text: &str) -> Option<Partition> {
        let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
        if inner.is_empty() {
            return Some(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&p| p > 0))
            .collect::<Option<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(parts))
    }
}

/// Size first, then reverse-lexicographic: `[3] < [2,1] < [1,1,1]`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `k` in canonical (reverse-lexicographic) order.
pub fn partitions(k: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let p4: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let mut sorted = partitions(5);
        sorted.sort();
        assert_eq!(sorted, partitions(5));
    }

    #[test]
    fn centralizers_sum_to_one() {
        use num_rational::BigRational;
        use num_traits::Zero;
        for k in 1..=7 {
            let total = partitions(k)
                .iter()
                .fold(BigRational::zero(), |acc, p| acc + BigRational::new(BigInt::one(), p.z()));
            assert_eq!(total, BigRational::one());
        }
        assert_eq!(Partition::new(vec![2, 1, 1]).z(), BigInt::from(4));
    }

    #[test]
    fn representative_has_cycle_type() {
        let lambda = Partition::new(vec![3, 2, 2, 1]);
        let perm = lambda.representative();
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for i in 0..perm.len() {
            if seen[i] {
                continue;
            }
            let (mut j, mut len) = (i, 0);
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            cycles.push(len);
        }
        assert_eq!(Partition::new(cycles), lambda);
    }

    #[test]
    fn conjugate_and_parse() {
        let lambda = Partition::new(vec![4, 2, 1]);
        assert_eq!(lambda.conjugate(), Partition::new(vec![3, 2, 1, 1]));
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(Partition::parse("[4,2,1]"), Some(lambda.clone()));
        assert_eq!(Partition::parse(&lambda.to_string()), Some(lambda));
        assert_eq!(Partition::parse("[1,2]"), None);
        assert_eq!(Partition::parse("[]"), Some(Partition::empty()));
    }

    #[test]
    fn dominance() {
        assert!(Partition::row(4).dominates(&Partition::new(vec![2, 2])));
        assert!(!Partition::new(vec![2, 2]).dominates(&Partition::new(vec![3, 1])));
    }
}
