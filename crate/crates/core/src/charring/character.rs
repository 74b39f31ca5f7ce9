use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::partitions;
use super::symfunc::SymFunc;
use crate::error::{Error, Result};

/// Graded degree `k`, cohomological degree `c` and weight `w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TriDegree {
    pub k: usize,
    pub c: i64,
    pub w: i64,
}

impl TriDegree {
    pub fn new(k: usize, c: i64, w: i64) -> Self {
        TriDegree { k, c, w }
    }
}

/// Character of an FB-graded, (c,w)-bigraded object, complete up to `max_degree`.
///
/// Each piece at `(k, c, w)` is a homogeneous symmetric function of degree `k`.
/// Zero pieces are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FBCharacter {
    max_degree: usize,
    pieces: BTreeMap<TriDegree, SymFunc>,
}

type Slice = BTreeMap<(i64, i64), SymFunc>;

impl FBCharacter {
    pub fn empty(max_degree: usize) -> Self {
        FBCharacter {
            max_degree,
            pieces: BTreeMap::new(),
        }
    }

    /// The unit `1` at `(0,0,0)`.
    pub fn unit(max_degree: usize) -> Self {
        let mut out = Self::empty(max_degree);
        out.pieces.insert(TriDegree::new(0, 0, 0), SymFunc::one());
        out
    }

    /// A single piece; pieces beyond `max_degree` are dropped.
    pub fn single(max_degree: usize, k: usize, c: i64, w: i64, f: SymFunc) -> Self {
        let mut out = Self::empty(max_degree);
        out.add_piece(k, c, w, &f);
        out
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&TriDegree, &SymFunc)> {
        self.pieces.iter()
    }

    pub fn piece(&self, k: usize, c: i64, w: i64) -> Option<&SymFunc> {
        self.pieces.get(&TriDegree::new(k, c, w))
    }

    /// The piece at `(k,c,w)`, or zero.
    pub fn get(&self, k: usize, c: i64, w: i64) -> SymFunc {
        self.piece(k, c, w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// All `(c, w)` pieces at graded degree `k`.
    pub fn slice(&self, k: usize) -> Slice {
        self.pieces
            .range(TriDegree::new(k, i64::MIN, i64::MIN)..=TriDegree::new(k, i64::MAX, i64::MAX))
            .map(|(d, f)| ((d.c, d.w), f.clone()))
            .collect()
    }

    /// Adds `f` at `(k,c,w)`. `f` must be homogeneous of degree `k`.
    pub fn add_piece(&mut self, k: usize, c: i64, w: i64, f: &SymFunc) {
        if k > self.max_degree || f.is_zero() {
            return;
        }
        assert!(
            f.degrees().iter().all(|&d| d == k),
            "piece at graded degree {k} is not homogeneous of degree {k}"
        );
        let key = TriDegree::new(k, c, w);
        let entry = self.pieces.entry(key).or_default();
        *entry += f;
        if entry.is_zero() {
            self.pieces.remove(&key);
        }
    }

    fn from_slices(max_degree: usize, slices: Vec<Slice>) -> Self {
        let mut out = Self::empty(max_degree);
        for (k, slice) in slices.into_iter().enumerate() {
            for ((c, w), f) in slice {
                if !f.is_zero() && k <= max_degree {
                    out.pieces.insert(TriDegree::new(k, c, w), f);
                }
            }
        }
        out
    }

    fn slices(&self) -> Vec<Slice> {
        let mut out = vec![Slice::new(); self.max_degree + 1];
        for (d, f) in &self.pieces {
            out[d.k].insert((d.c, d.w), f.clone());
        }
        out
    }

    pub fn add(&self, other: &FBCharacter) -> FBCharacter {
        let mut out = self.truncate(self.max_degree.min(other.max_degree));
        for (d, f) in &other.pieces {
            out.add_piece(d.k, d.c, d.w, f);
        }
        out
    }

    pub fn sub(&self, other: &FBCharacter) -> FBCharacter {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FBCharacter {
        FBCharacter {
            max_degree: self.max_degree,
            pieces: self.pieces.iter().map(|(d, f)| (*d, -f)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> FBCharacter {
        let mut out = Self::empty(self.max_degree);
        for (d, f) in &self.pieces {
            out.add_piece(d.k, d.c, d.w, &f.scale(factor));
        }
        out
    }

    pub fn truncate(&self, max_degree: usize) -> FBCharacter {
        FBCharacter {
            max_degree,
            pieces: self
                .pieces
                .iter()
                .filter(|(d, _)| d.k <= max_degree)
                .map(|(d, f)| (*d, f.clone()))
                .collect(),
        }
    }

    /// Shift every piece by `(Δc, Δw)`.
    pub fn shift(&self, dc: i64, dw: i64) -> FBCharacter {
        FBCharacter {
            max_degree: self.max_degree,
            pieces: self
                .pieces
                .iter()
                .map(|(d, f)| (TriDegree::new(d.k, d.c + dc, d.w + dw), f.clone()))
                .collect(),
        }
    }

    /// Keep only the pieces satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&TriDegree) -> bool) -> FBCharacter {
        FBCharacter {
            max_degree: self.max_degree,
            pieces: self
                .pieces
                .iter()
                .filter(|(d, _)| keep(d))
                .map(|(d, f)| (*d, f.clone()))
                .collect(),
        }
    }

    /// Day convolution: product of symmetric functions, (k,c,w) adding.
    pub fn induction_product(&self, other: &FBCharacter) -> FBCharacter {
        let max_degree = self.max_degree.min(other.max_degree);
        let mut out = Self::empty(max_degree);
        for (a, f) in &self.pieces {
            for (b, g) in &other.pieces {
                let k = a.k + b.k;
                if k > max_degree {
                    continue;
                }
                out.add_piece(k, a.c + b.c, a.w + b.w, &(f * g));
            }
        }
        out
    }

    /// The r-th Adams operation with Koszul signs:
    /// `t^c u^w F ↦ (−1)^{(r−1)c} t^{rc} u^{rw} p_r∘F`.
    pub fn super_adams(&self, r: usize) -> Result<FBCharacter> {
        if r == 0 {
            return Err(Error::InvalidArgument("super_adams needs r ≥ 1".into()));
        }
        let mut out = Self::empty(self.max_degree);
        let r_i = r as i64;
        for (d, f) in &self.pieces {
            if d.k * r > self.max_degree {
                continue;
            }
            let odd = ((r_i - 1) * d.c).rem_euclid(2) == 1;
            let g = f.adams(r);
            out.add_piece(d.k * r, d.c * r_i, d.w * r_i, &if odd { -&g } else { g });
        }
        Ok(out)
    }

    fn check_augmented(&self) -> Result<()> {
        if let Some((d, _)) = self.pieces.iter().find(|(d, _)| d.k == 0) {
            return Err(Error::DegreeZeroInput { c: d.c, w: d.w });
        }
        Ok(())
    }

    /// Character of `Sym(f)`: `exp(Σ_r super_adams(r, f)/r)`, unit included.
    pub fn sym_exp(&self) -> Result<FBCharacter> {
        self.check_augmented()?;
        let k_max = self.max_degree;
        let mut log_terms = Self::empty(k_max);
        for r in 1..=k_max.max(1) {
            let inv = BigRational::new(BigInt::one(), BigInt::from(r));
            log_terms = log_terms.add(&self.super_adams(r)?.scale(&inv));
        }
        Ok(exp_series(&log_terms))
    }

    /// Inverse of [`sym_exp`](Self::sym_exp): the augmented `f` with `sym_exp(f) = self`.
    pub fn sym_log(&self) -> Result<FBCharacter> {
        let unit = self.slice(0);
        if unit.len() != 1 || unit.get(&(0, 0)) != Some(&SymFunc::one()) {
            return Err(Error::MissingUnit);
        }
        let logarithm = log_series(self);
        // f = Σ_r μ(r)/r · ψ_r(log g)
        let mut out = Self::empty(self.max_degree);
        for r in 1..=self.max_degree.max(1) {
            let mu = mobius(r);
            if mu == 0 {
                continue;
            }
            let coeff = BigRational::new(BigInt::from(mu), BigInt::from(r));
            out = out.add(&logarithm.super_adams(r)?.scale(&coeff));
        }
        Ok(out)
    }

    /// Dimensions at graded degree `k`, per `(c, w)`.
    pub fn dimension(&self, k: usize) -> BTreeMap<(i64, i64), BigInt> {
        self.slice(k)
            .into_iter()
            .map(|(cw, f)| (cw, f.dimension()))
            .filter(|(_, d)| !d.is_zero())
            .collect()
    }

    /// Total (unsigned) dimension of the graded-degree-`k` slice.
    pub fn total_dimension(&self, k: usize) -> BigInt {
        self.dimension(k).values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.pieces.values().all(SymFunc::is_effective)
    }

    /// Graded degrees carrying a nonzero piece.
    pub fn support_degrees(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.pieces.keys().map(|d| d.k).collect();
        ks.dedup();
        ks
    }
}

/// `exp` of an augmented series via `k·E_k = Σ_j j·F_j·E_{k−j}`.
fn exp_series(f: &FBCharacter) -> FBCharacter {
    let k_max = f.max_degree;
    let fs = f.slices();
    let mut es: Vec<Slice> = vec![Slice::new(); k_max + 1];
    es[0].insert((0, 0), SymFunc::one());
    for k in 1..=k_max {
        let mut acc = Slice::new();
        for j in 1..=k {
            let weight = BigRational::from_integer(BigInt::from(j));
            multiply_into(&fs[j], &es[k - j], &weight, &mut acc);
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(k));
        acc.retain(|_, v| !v.is_zero());
        es[k] = acc.into_iter().map(|(cw, v)| (cw, v.scale(&inv))).collect();
    }
    FBCharacter::from_slices(k_max, es)
}

/// `log` of a series with unit constant term via `L_k = G_k − (1/k)Σ_{j<k} j·L_j·G_{k−j}`.
fn log_series(g: &FBCharacter) -> FBCharacter {
    let k_max = g.max_degree;
    let gs = g.slices();
    let mut ls: Vec<Slice> = vec![Slice::new(); k_max + 1];
    for k in 1..=k_max {
        let mut acc = Slice::new();
        for j in 1..k {
            let weight = BigRational::from_integer(BigInt::from(j));
            multiply_into(&ls[j], &gs[k - j], &weight, &mut acc);
        }
        let inv = BigRational::new(BigInt::from(-1), BigInt::from(k));
        let mut lk = gs[k].clone();
        for (cw, v) in acc {
            let entry = lk.entry(cw).or_default();
            *entry += &v.scale(&inv);
        }
        lk.retain(|_, v| !v.is_zero());
        ls[k] = lk;
    }
    FBCharacter::from_slices(k_max, ls)
}

fn multiply_into(a: &Slice, b: &Slice, weight: &BigRational, out: &mut Slice) {
    for ((c1, w1), f) in a {
        for ((c2, w2), g) in b {
            let entry = out.entry((c1 + c2, w1 + w2)).or_default();
            *entry += &(f * g).scale(weight);
        }
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Character of `V^{⊗k}` with S_k permuting the factors (Koszul signs included),
/// for `v` concentrated in graded degree 1, via the cycle-index sum
/// `Σ_{μ⊢k} z_μ^{-1} ∏_i ψ_{μ_i}(v)`.
pub fn tensor_power_character(v: &FBCharacter, k: usize) -> Result<Slice> {
    if k < 1 {
        return Err(Error::InvalidArgument("tensor power needs k ≥ 1".into()));
    }
    if v.pieces().any(|(d, _)| d.k != 1) {
        return Err(Error::InvalidArgument(
            "tensor_power_character needs v concentrated in graded degree 1".into(),
        ));
    }
    let v = FBCharacter {
        max_degree: k,
        pieces: v.pieces.clone(),
    };
    let mut total = FBCharacter::empty(k);
    for mu in partitions(k) {
        let mut term = FBCharacter::unit(k);
        for &part in mu.parts() {
            term = term.induction_product(&v.super_adams(part)?);
        }
        total = total.add(&term.scale(&BigRational::new(BigInt::one(), mu.z())));
    }
    Ok(total.slice(k))
}

impl fmt::Display for FBCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, sf) in &self.pieces {
            writeln!(
                f,
                "k={} c={} w={}: {} (dim {})",
                d.k,
                d.c,
                d.w,
                sf.schur_string(),
                sf.dimension()
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::partition::Partition;
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i32> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn induction_product_examples() {
        let h1 = FBCharacter::single(4, 1, 0, 0, SymFunc::h(1));
        let sq = h1.induction_product(&h1);
        assert_eq!(sq.get(2, 0, 0), &SymFunc::h(2) + &SymFunc::e(2));
        assert!(h1.induction_product(&FBCharacter::empty(4)).is_zero());
        let a = FBCharacter::single(4, 2, 1, 1, SymFunc::h(2));
        let b = FBCharacter::single(4, 1, 2, 1, SymFunc::h(1));
        let ab = a.induction_product(&b);
        assert_eq!(ab.get(3, 3, 2), &SymFunc::h(2) * &SymFunc::h(1));
        assert_eq!(ab.pieces().count(), 1);
    }

    #[test]
    fn super_adams_examples() {
        let odd = FBCharacter::single(4, 1, 1, 0, SymFunc::h(1));
        assert_eq!(odd.super_adams(1).unwrap(), odd);
        let two = odd.super_adams(2).unwrap();
        assert_eq!(two.get(2, 2, 0), -&SymFunc::p(Partition::row(2)));
        let even = FBCharacter::single(4, 1, 2, 1, SymFunc::h(1));
        assert_eq!(
            even.super_adams(2).unwrap().get(2, 4, 2),
            SymFunc::p(Partition::row(2))
        );
        assert!(odd.super_adams(0).is_err());
    }

    #[test]
    fn sym_exp_of_even_class_is_free_tca() {
        let x = FBCharacter::single(6, 1, 0, 0, SymFunc::h(1));
        let e = x.sym_exp().unwrap();
        for k in 0..=6 {
            assert_eq!(e.slice(k).len(), 1);
            assert_eq!(e.get(k, 0, 0), SymFunc::h(k));
        }
    }

    #[test]
    fn sym_exp_of_odd_class_is_exterior() {
        let x = FBCharacter::single(6, 1, 1, 0, SymFunc::h(1));
        let e = x.sym_exp().unwrap();
        for k in 0..=6 {
            let slice = e.slice(k);
            assert_eq!(slice.len(), 1, "k={k}");
            assert_eq!(e.get(k, k as i64, 0), SymFunc::e(k));
        }
    }

    #[test]
    fn sym_exp_rejects_degree_zero_and_handles_empty() {
        assert!(matches!(
            FBCharacter::unit(3).sym_exp(),
            Err(Error::DegreeZeroInput { .. })
        ));
        assert_eq!(FBCharacter::empty(3).sym_exp().unwrap(), FBCharacter::unit(3));
    }

    #[test]
    fn sym_log_examples() {
        let f = FBCharacter::single(5, 2, 2, 1, SymFunc::h(2));
        assert_eq!(f.sym_exp().unwrap().sym_log().unwrap(), f);

        // 1 + t²u·h_1 at k=1: degree-2 slice is −h_2 at (4,2)
        let mut g = FBCharacter::unit(4);
        g.add_piece(1, 2, 1, &SymFunc::h(1));
        let log = g.sym_log().unwrap();
        let slice2 = log.slice(2);
        assert_eq!(slice2.len(), 1);
        assert_eq!(log.get(2, 4, 2), -&SymFunc::h(2));
        assert_eq!(log.sym_exp().unwrap(), g);

        assert!(matches!(FBCharacter::empty(3).sym_log(), Err(Error::MissingUnit)));
        let mut bad = FBCharacter::unit(3);
        bad.add_piece(0, 1, 0, &SymFunc::one());
        assert!(bad.sym_log().is_err());
    }

    #[test]
    fn sym_log_of_tensor_algebra_on_odd_class() {
        // g = Σ_k h_1^k at (k(2d−1), dk) with d = 1; degree-2 slice has dimension 1
        let mut g = FBCharacter::unit(5);
        let mut power = SymFunc::one();
        for k in 1..=5 {
            power = &power * &SymFunc::h(1);
            g.add_piece(k, k as i64, k as i64, &power);
        }
        let log = g.sym_log().unwrap();
        assert_eq!(log.total_dimension(2), BigInt::from(1));
        assert_eq!(log.get(2, 2, 2), SymFunc::h(2));
    }

    #[test]
    fn tensor_power_examples() {
        let one_even = FBCharacter::single(5, 1, 0, 0, SymFunc::h(1));
        for k in 1..=5 {
            assert_eq!(tensor_power_character(&one_even, k).unwrap()[&(0, 0)], SymFunc::h(k));
        }
        let two_even = FBCharacter::single(5, 1, 0, 0, SymFunc::h(1).scale(&q(2)));
        let t2 = tensor_power_character(&two_even, 2).unwrap();
        assert_eq!(t2[&(0, 0)], &SymFunc::h(2).scale(&q(3)) + &SymFunc::e(2));
        let one_odd = FBCharacter::single(5, 1, 1, 0, SymFunc::h(1));
        let t2 = tensor_power_character(&one_odd, 2).unwrap();
        assert_eq!(t2.len(), 1);
        assert_eq!(t2[&(2, 0)], SymFunc::e(2));
        assert!(tensor_power_character(&one_odd, 0).is_err());
    }

    #[test]
    fn dimension_examples() {
        let f = FBCharacter::single(4, 3, 0, 0, SymFunc::h(3));
        assert_eq!(f.dimension(3)[&(0, 0)], BigInt::from(1));
        let f = FBCharacter::single(4, 2, 1, 0, SymFunc::e(2));
        assert_eq!(f.dimension(2)[&(1, 0)], BigInt::from(1));
        let f = FBCharacter::single(4, 3, 0, 0, &SymFunc::h(1) * &SymFunc::h(2));
        assert_eq!(f.dimension(3)[&(0, 0)], BigInt::from(3));
    }

    #[test]
    fn truncation_is_respected() {
        let x = FBCharacter::single(3, 1, 0, 0, SymFunc::h(1));
        let y = FBCharacter::single(5, 1, 0, 0, SymFunc::h(1));
        let prod = x.induction_product(&y);
        assert_eq!(prod.max_degree(), 3);
        assert!(x.sym_exp().unwrap().slice(4).is_empty());
        let big = FBCharacter::single(2, 3, 0, 0, SymFunc::h(3));
        assert!(big.is_zero());
        assert_eq!(q(1), BigRational::one());
    }
}
