use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::partition::{factorial, partitions, Partition};
use super::tables::tables;

/// Bases in which a symmetric function can be read or written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    PowerSum,
    Schur,
    Homogeneous,
    Monomial,
}

/// A virtual symmetric function over ℚ, stored in the power-sum basis.
///
/// Homogeneous components of different degrees may coexist; most callers keep a
/// single degree per value.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigRational::one());
        SymFunc { coeffs }
    }

    /// The complete homogeneous function `h_k`.
    pub fn h(k: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for mu in partitions(k) {
            let z = mu.z();
            coeffs.insert(mu, BigRational::new(BigInt::one(), z));
        }
        SymFunc { coeffs }
    }

    /// The elementary function `e_k`.
    pub fn e(k: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for mu in partitions(k) {
            let z = mu.z();
            let sign = if (k - mu.len()).is_multiple_of(2) { 1 } else { -1 };
            coeffs.insert(mu, BigRational::new(BigInt::from(sign), z));
        }
        SymFunc { coeffs }
    }

    /// The Schur function `s_λ`.
    pub fn s(lambda: &Partition) -> Self {
        let mut single = BTreeMap::new();
        single.insert(lambda.clone(), BigRational::one());
        Self::from_basis(Basis::Schur, &single)
    }

    /// `h_λ = h_{λ_1} h_{λ_2} ⋯`.
    pub fn h_product(lambda: &Partition) -> Self {
        lambda
            .parts()
            .iter()
            .fold(Self::one(), |acc, &part| &acc * &Self::h(part))
    }

    pub fn from_integer(value: i64) -> Self {
        Self::one().scale(&BigRational::from_integer(value.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Power-sum coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degrees with a nonzero component.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        ds.dedup();
        ds
    }

    pub fn component(&self, degree: usize) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, lambda: Partition, value: BigRational) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(value);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += value;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigRational) -> SymFunc {
        if factor.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }

    /// Classical plethysm `p_r ∘ f`.
    pub fn adams(&self, r: usize) -> SymFunc {
        assert!(r >= 1);
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.scale(r), c.clone()))
                .collect(),
        }
    }

    /// The involution ω (tensoring with the sign character).
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| {
                    let odd = (p.size() - p.len()) % 2 == 1;
                    (p.clone(), if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Hall inner product.
    pub fn inner(&self, other: &SymFunc) -> BigRational {
        let mut total = BigRational::zero();
        for (p, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(p) {
                total += c * d * BigRational::from_integer(p.z());
            }
        }
        total
    }

    /// Coefficients in the requested basis (keys in canonical partition order).
    pub fn coefficients(&self, basis: Basis) -> BTreeMap<Partition, BigRational> {
        if basis == Basis::PowerSum {
            return self.coeffs.clone();
        }
        let mut out = BTreeMap::new();
        for degree in self.degrees() {
            let t = tables(degree);
            let comp = self.component(degree);
            // Schur coefficients a_λ = Σ_μ c_μ χ^λ(μ)
            let schur: Vec<BigRational> = (0..t.parts.len())
                .map(|l| {
                    comp.coeffs.iter().fold(BigRational::zero(), |acc, (mu, c)| {
                        acc + c * BigRational::from_integer(t.chi[l][t.index[mu]].into())
                    })
                })
                .collect();
            let values: Vec<BigRational> = match basis {
                Basis::Schur => schur,
                Basis::Monomial => {
                    // b_μ = Σ_λ a_λ K_{λμ}
                    (0..t.parts.len())
                        .map(|m| {
                            (0..t.parts.len()).fold(BigRational::zero(), |acc, l| {
                                acc + &schur[l] * BigRational::from_integer(t.kostka[l][m].into())
                            })
                        })
                        .collect()
                }
                Basis::Homogeneous => {
                    // a_λ = Σ_μ K_{λμ} c_μ; K upper unitriangular in canonical order.
                    let n = t.parts.len();
                    let mut c = vec![BigRational::zero(); n];
                    for l in (0..n).rev() {
                        let mut v = schur[l].clone();
                        for m in (l + 1)..n {
                            if t.kostka[l][m] != 0 {
                                v -= &c[m] * BigRational::from_integer(t.kostka[l][m].into());
                            }
                        }
                        c[l] = v;
                    }
                    c
                }
                Basis::PowerSum => unreachable!(),
            };
            for (lambda, v) in t.parts.iter().zip(values) {
                if !v.is_zero() {
                    out.insert(lambda.clone(), v);
                }
            }
        }
        out
    }

    /// Builds a symmetric function from coefficients in the given basis.
    pub fn from_basis(basis: Basis, coeffs: &BTreeMap<Partition, BigRational>) -> SymFunc {
        if basis == Basis::PowerSum {
            let mut out = SymFunc::zero();
            for (p, c) in coeffs {
                out.add_term(p.clone(), c.clone());
            }
            return out;
        }
        let mut by_degree: BTreeMap<usize, BTreeMap<Partition, BigRational>> = BTreeMap::new();
        for (p, c) in coeffs {
            by_degree.entry(p.size()).or_default().insert(p.clone(), c.clone());
        }
        let mut out = SymFunc::zero();
        for (degree, part) in by_degree {
            let t = tables(degree);
            let n = t.parts.len();
            let given = |l: usize| part.get(&t.parts[l]).cloned().unwrap_or_else(BigRational::zero);
            let schur: Vec<BigRational> = match basis {
                Basis::Schur => (0..n).map(given).collect(),
                Basis::Homogeneous => (0..n)
                    .map(|l| {
                        (0..n).fold(BigRational::zero(), |acc, m| {
                            acc + given(m) * BigRational::from_integer(t.kostka[l][m].into())
                        })
                    })
                    .collect(),
                Basis::Monomial => {
                    // b_μ = Σ_λ a_λ K_{λμ}; K^T lower unitriangular.
                    let mut a = vec![BigRational::zero(); n];
                    for m in 0..n {
                        let mut v = given(m);
                        for l in 0..m {
                            if t.kostka[l][m] != 0 {
                                v -= &a[l] * BigRational::from_integer(t.kostka[l][m].into());
                            }
                        }
                        a[m] = v;
                    }
                    a
                }
                Basis::PowerSum => unreachable!(),
            };
            // s_λ = Σ_μ χ^λ(μ) p_μ / z_μ
            for (m, mu) in t.parts.iter().enumerate() {
                let mut v = BigRational::zero();
                for (l, a) in schur.iter().enumerate() {
                    if !a.is_zero() && t.chi[l][m] != 0 {
                        v += a * BigRational::from_integer(t.chi[l][m].into());
                    }
                }
                out.add_term(mu.clone(), v / &t.z[m]);
            }
        }
        out
    }

    pub fn schur(&self) -> BTreeMap<Partition, BigRational> {
        self.coefficients(Basis::Schur)
    }

    /// Dimension of the (virtual) representation: `k!·[p_1^k]` summed over degrees.
    pub fn dimension(&self) -> BigInt {
        let mut total = BigRational::zero();
        for (p, c) in &self.coeffs {
            if p.parts().iter().all(|&x| x == 1) {
                total += c * BigRational::from_integer(factorial(p.size()));
            }
        }
        debug_assert!(total.is_integer());
        total.to_integer()
    }

    /// All Schur coefficients are nonnegative integers.
    pub fn is_effective(&self) -> bool {
        self.schur()
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Schur coefficients are integers (a genuine virtual character).
    pub fn is_virtual_character(&self) -> bool {
        self.schur().values().all(|c| c.is_integer())
    }

    /// Compact Schur expansion like `s[2] + 2s[1,1]`.
    pub fn schur_string(&self) -> String {
        format_expansion(&self.schur(), "s")
    }
}

pub(crate) fn format_expansion(coeffs: &BTreeMap<Partition, BigRational>, symbol: &str) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (p, c)) in coeffs.iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(symbol);
        out.push_str(&p.to_string());
    }
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.schur_string())
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.coeffs {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.coeffs {
            self.add_term(p.clone(), -c.clone());
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in &self.coeffs {
            for (q, d) in &rhs.coeffs {
                out.add_term(p.union(q), c * d);
            }
        }
        out
    }
}
