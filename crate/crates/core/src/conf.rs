//! Cohomology characters of the generalized configuration spaces `P_n^k(X)`
//! for spaces whose compactly supported cochains have trivial multiplication:
//! `ch H*(A_n(X)) = sym_exp(ch H*(X, sΩ) · ch Â_n)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charring::{FBCharacter, SymFunc};
use crate::error::{Error, Result};
use crate::koszul;
use crate::poly::Polynomial;

/// `H*(X, sΩ_X)` as `(c, w) ↦ dim`, plus the hypotheses the formulas need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceCohomology {
    pub d: usize,
    classes: BTreeMap<(i64, i64), u64>,
    pub irreducible: bool,
    pub trivial_multiplication: bool,
    /// `m` in TopTriv_m; 0 when unasserted.
    pub top_triv: usize,
    /// Asserted vanishing gap `s`; 0 when unasserted.
    pub gap_s: usize,
}

impl SpaceCohomology {
    /// Builds and validates a space; repeated `(c, w)` entries are summed.
    pub fn new(d: usize, classes: impl IntoIterator<Item = (i64, i64, u64)>) -> Result<Self> {
        let mut merged = BTreeMap::new();
        for (c, w, dim) in classes {
            *merged.entry((c, w)).or_insert(0) += dim;
        }
        let space = SpaceCohomology {
            d,
            classes: merged,
            irreducible: false,
            trivial_multiplication: false,
            top_triv: 0,
            gap_s: 0,
        };
        space.validate()?;
        Ok(space)
    }

    /// `X = A^d`: the unit input, irreducible, non-proper, trivial multiplication.
    pub fn affine(d: usize) -> Self {
        SpaceCohomology {
            d,
            classes: BTreeMap::from([((0, 0), 1)]),
            irreducible: true,
            trivial_multiplication: true,
            top_triv: usize::MAX,
            gap_s: 0,
        }
    }

    pub fn with_flags(mut self, irreducible: bool, trivial_multiplication: bool, top_triv: usize, gap_s: usize) -> Result<Self> {
        self.irreducible = irreducible;
        self.trivial_multiplication = trivial_multiplication;
        self.top_triv = top_triv;
        self.gap_s = gap_s;
        self.validate()?;
        Ok(self)
    }

    pub fn classes(&self) -> &BTreeMap<(i64, i64), u64> {
        &self.classes
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.d < 1 {
            return bad("dimension must be ≥ 1".into());
        }
        for (&(c, w), &dim) in &self.classes {
            if c < 0 {
                return bad(format!("class at (c,w)=({c},{w}) has negative c"));
            }
            if dim == 0 {
                return bad(format!("class at (c,w)=({c},{w}) has dim 0"));
            }
        }
        if self.irreducible {
            let at_zero: Vec<_> = self.classes.iter().filter(|(&(c, _), _)| c == 0).collect();
            if at_zero != [(&(0, 0), &1)] {
                return Err(Error::Hypothesis(
                    "irreducible spaces need exactly one class at c=0, namely (0,0) with dim 1".into(),
                ));
            }
        }
        let top = 2 * self.d as i64;
        if self.top_triv >= 1 && self.classes.keys().any(|&(c, _)| c == top) {
            return Err(Error::Hypothesis(format!(
                "top_triv ≥ 1 needs a non-proper space, but a class sits in the top degree c={top}"
            )));
        }
        if let Some(&(c, w)) = self
            .classes
            .keys()
            .find(|&&(c, _)| c > 0 && (c as usize) < self.gap_s)
        {
            return Err(Error::Hypothesis(format!(
                "cohomology gap s={} contradicts the class at (c,w)=({c},{w})",
                self.gap_s
            )));
        }
        Ok(())
    }

    /// The largest `s` with no class in `0 < c < s`; `None` when every class is at `c = 0`.
    pub fn derived_gap(&self) -> Option<i64> {
        self.classes.keys().map(|&(c, _)| c).filter(|&c| c > 0).min()
    }

    /// The classes as a graded-degree-1 character.
    pub fn character(&self, max_degree: usize) -> FBCharacter {
        let mut out = FBCharacter::empty(max_degree);
        for (&(c, w), &dim) in &self.classes {
            out.add_piece(1, c, w, &SymFunc::h(1).scale(&BigInt::from(dim).into()));
        }
        out
    }

    /// Direct sum of two spaces of the same dimension (classes concatenated).
    pub fn disjoint_union(&self, other: &SpaceCohomology) -> Result<SpaceCohomology> {
        if self.d != other.d {
            return Err(Error::InvalidArgument("disjoint union needs equal dimensions".into()));
        }
        let classes = self
            .classes
            .iter()
            .chain(&other.classes)
            .map(|(&(c, w), &dim)| (c, w, dim));
        let out = SpaceCohomology::new(self.d, classes)?;
        out.with_flags(
            false,
            self.trivial_multiplication && other.trivial_multiplication,
            0,
            0,
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfCohomology {
    pub n: usize,
    pub max_degree: usize,
    pub include_unit: bool,
    pub space: SpaceCohomology,
    pub character: FBCharacter,
}

/// `ĝ = H*(X, sΩ) ⊗ ch Â_n`, the generators of `A_n(X)` as a free tca.
pub fn generator_character(space: &SpaceCohomology, n: usize, max_degree: usize) -> Result<FBCharacter> {
    let a = koszul::an_character(n, space.d, max_degree)?;
    let mut out = FBCharacter::empty(max_degree);
    for (&(c, w), &dim) in &space.classes {
        let copy = a.renormalized.shift(c, w).scale(&BigInt::from(dim).into());
        out = out.add(&copy);
    }
    Ok(out)
}

pub fn conf_cohomology(
    space: &SpaceCohomology,
    n: usize,
    max_degree: usize,
    include_unit: bool,
) -> Result<ConfCohomology> {
    space.validate()?;
    if !space.trivial_multiplication {
        return Err(Error::Hypothesis(
            "conf needs trivial multiplication on compactly supported cochains; \
             without it the cohomology of A_n(X) is not Sym of the generators"
                .into(),
        ));
    }
    let mut character = generator_character(space, n, max_degree)?.sym_exp()?;
    if !character.is_effective() {
        return Err(Error::Calibration(
            "configuration space character has a negative Schur coefficient".into(),
        ));
    }
    if !include_unit {
        character = character.filter(|d| d.k > 0);
    }
    Ok(ConfCohomology {
        n,
        max_degree,
        include_unit,
        space: space.clone(),
        character,
    })
}

fn check_degree(cc: &ConfCohomology, k: usize) -> Result<()> {
    if k > cc.max_degree {
        return Err(Error::InvalidArgument(format!(
            "graded degree {k} exceeds the computed truncation {}",
            cc.max_degree
        )));
    }
    Ok(())
}

/// `Σ_c (Σ_w dim H^c_w) t^c` at graded degree `k`.
pub fn poincare(cc: &ConfCohomology, k: usize) -> Result<Polynomial> {
    check_degree(cc, k)?;
    let mut out = Polynomial::zero('t');
    for ((c, _), dim) in cc.character.dimension(k) {
        out.add_term(c, dim);
    }
    Ok(out)
}

/// `E_k(q) = q^{dk} Σ_{c,w} (−1)^c dim H^c_w q^{−w}`.
pub fn e_polynomial(cc: &ConfCohomology, k: usize) -> Result<Polynomial> {
    check_degree(cc, k)?;
    let dk = (cc.space.d * k) as i64;
    let mut out = Polynomial::zero('q');
    for ((c, w), dim) in cc.character.dimension(k) {
        let signed = if c.rem_euclid(2) == 0 { dim } else { -dim };
        if !signed.is_zero() {
            out.add_term(dk - w, signed);
        }
    }
    Ok(out)
}
