//! Exact linear algebra over ℚ: fraction-free sparse rank and dense
//! reduced row echelon forms.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector: `(index, value)` pairs, strictly increasing index, no zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn sparse_from_entries(entries: impl IntoIterator<Item = (usize, i64)>) -> SparseVec {
    let mut map: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    for (i, v) in entries {
        *map.entry(i).or_insert(0) += v;
    }
    map.into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(i, v)| (i, BigInt::from(v)))
        .collect()
}

/// Incremental echelon basis over ℚ with integer rows.
///
/// Rows are kept primitive (content 1, positive leading entry); each new vector is
/// reduced against the stored pivots by fraction-free elimination on its leading
/// index until it either vanishes or opens a new pivot.
#[derive(Default)]
pub struct EchelonBasis {
    pivots: HashMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some((lead, _)) = v.first() else {
                return false;
            };
            let lead = *lead;
            match self.pivots.get(&lead) {
                None => {
                    make_primitive(&mut v);
                    self.pivots.insert(lead, v);
                    return true;
                }
                Some(p) => {
                    v = eliminate(&v, p);
                }
            }
        }
    }
}

/// `a·p[lead] − p·a[lead]`, made primitive; `a` and `p` share the leading index.
fn eliminate(a: &SparseVec, p: &SparseVec) -> SparseVec {
    let alpha = &a[0].1;
    let beta = &p[0].1;
    let g = alpha.gcd(beta);
    let fa = beta / &g;
    let fp = alpha / &g;
    let mut out = Vec::with_capacity(a.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < a.len() || j < p.len() {
        let ai = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let pj = p.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        if ai < pj {
            out.push((ai, &a[i].1 * &fa));
            i += 1;
        } else if pj < ai {
            out.push((pj, -(&p[j].1 * &fp)));
            j += 1;
        } else {
            let v = &a[i].1 * &fa - &p[j].1 * &fp;
            if !v.is_zero() {
                out.push((ai, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

fn make_primitive(v: &mut SparseVec) {
    let Some(first) = v.first() else {
        return;
    };
    let mut g = first.1.abs();
    for (_, x) in v.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let negate = first.1.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of a family of sparse integer vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Dense matrix over ℚ in row-major order.
pub type DenseMatrix = Vec<Vec<BigRational>>;

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut m: DenseMatrix) -> (DenseMatrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Kernel of `m` (acting on column vectors) as vectors `v_f` indexed by the free
/// columns `f`, normalised so that `v_f[f] = 1` and `v_f[f'] = 0` for other free `f'`.
pub fn kernel_basis(m: &DenseMatrix, cols: usize) -> (DenseMatrix, Vec<usize>) {
    let (r, pivots) = rref(m.clone());
    let is_pivot: Vec<bool> = (0..cols).map(|c| pivots.contains(&c)).collect();
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    (basis, free)
}
