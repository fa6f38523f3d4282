//! Sublattices of `Z^d` and the content of a lattice vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, Matrix};

/// Integer vector in some ambient `Z^d`.
pub type IntVec = Vec<BigInt>;

pub fn int_vec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// A sublattice of `Z^d`, stored by its row-style Hermite basis.
///
/// Two `Lattice`s spanning the same group compare equal: the basis is put
/// in echelon form with positive pivots and reduced entries above pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    basis: Vec<IntVec>,
    pivots: Vec<usize>,
}

impl Lattice {
    /// The full lattice `Z^d`.
    pub fn standard(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient_dim];
                e[i] = BigInt::from(1);
                e
            })
            .collect();
        Lattice {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The group generated by `vectors` (all of length `ambient_dim`).
    pub fn span(ambient_dim: usize, vectors: &[IntVec]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::InvalidInput(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        let (basis, pivots) = hermite_rows(ambient_dim, vectors.to_vec());
        Ok(Lattice {
            ambient_dim,
            basis,
            pivots,
        })
    }

    /// Like [`Lattice::span`] but insists the given vectors are linearly
    /// independent, i.e. already a basis.
    pub fn from_basis(ambient_dim: usize, basis: &[IntVec]) -> Result<Self> {
        let lattice = Lattice::span(ambient_dim, basis)?;
        if lattice.rank() != basis.len() {
            return Err(Error::InvalidInput(
                "lattice basis vectors are linearly dependent".into(),
            ));
        }
        Ok(lattice)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.basis.clone())
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<IntVec> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (b, &c) in self.basis.iter().zip(&self.pivots) {
            // columns left of the pivot are already cleared
            let (q, r) = residual[c].div_rem(&b[c]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, y) in residual.iter_mut().zip(b) {
                    *x -= &q * y;
                }
            }
            coords.push(q);
        }
        is_zero_vec(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Maps lattice coordinates back to the ambient space.
    pub fn from_coordinates(&self, coords: &[BigInt]) -> IntVec {
        let mut out = vec![BigInt::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }
}

/// Largest `m >= 1` with `v / m` in `lattice`; `None` when `v = 0`.
///
/// Errors if `v` is not a lattice vector.
pub fn content(v: &[BigInt], lattice: &Lattice) -> Result<Option<BigInt>> {
    let coords = lattice.coordinates(v).ok_or_else(|| {
        Error::InvalidInput(format!("vector {} is not in the lattice", fmt_vec(v)))
    })?;
    let g = gcd_all(&coords);
    Ok((!g.is_zero()).then_some(g))
}

/// Invariant factors of `lattice / <v>` computed without the echelon
/// coordinate solve: the coordinates are recovered from a Smith form of the
/// basis matrix and then reduced by a second Smith form.
///
/// Returns the nontrivial torsion orders (at most one entry).
pub fn cyclic_quotient_torsion(v: &[BigInt], lattice: &Lattice) -> Result<Vec<BigInt>> {
    let basis = lattice.basis_matrix();
    let s = smith_normal_form(&basis);
    // v = x B  and  U B V = D  =>  v V = (x U^-1) D
    let w = s.right.left_apply(v);
    let r = lattice.rank();
    let mut y = Vec::with_capacity(r);
    for (i, wi) in w.iter().enumerate() {
        if i < r {
            let (q, rem) = wi.div_rem(&s.diagonal[i]);
            if !rem.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "vector {} is not in the lattice",
                    fmt_vec(v)
                )));
            }
            y.push(q);
        } else if !wi.is_zero() {
            return Err(Error::InvalidInput(format!(
                "vector {} is not in the lattice",
                fmt_vec(v)
            )));
        }
    }
    let inclusion = Matrix::from_rows(r, vec![y]);
    Ok(smith_normal_form(&inclusion).torsion())
}

pub(crate) fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Integer row echelon form of the row span, with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`.
fn hermite_rows(ncols: usize, mut rows: Vec<IntVec>) -> (Vec<IntVec>, Vec<usize>) {
    rows.retain(|r| !is_zero_vec(r));
    let mut top = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        loop {
            let best = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                let pivot_row = rows[top].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                done &= rows[i][col].is_zero();
            }
            if done {
                if rows[top][col].is_negative() {
                    for x in &mut rows[top] {
                        *x = -&*x;
                    }
                }
                pivots.push(col);
                top += 1;
                break;
            }
        }
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    // reduce above pivots
    for (k, &col) in pivots.iter().enumerate() {
        let pivot_row = rows[k].clone();
        for row in rows.iter_mut().take(k) {
            let q = row[col].div_floor(&pivot_row[col]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
    }
    (rows, pivots)
}
