//! Subspaces of one homogeneous degree, stored as reduced row spaces over the
//! graded-lex monomial basis. The representation is canonical: equal subspaces
//! compare equal component-wise.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::monomial::DegreeBasis;
use crate::poly::SparsePoly;
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    degree: u32,
    num_vars: usize,
    /// RREF matrix with one row per basis element, no zero rows.
    basis: QMatrix,
}

impl GradedSubspace {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        let ambient = DegreeBasis::new(num_vars, degree).len();
        GradedSubspace {
            degree,
            num_vars,
            basis: QMatrix::zeros(0, ambient),
        }
    }

    pub fn full(num_vars: usize, degree: u32) -> Self {
        let ambient = DegreeBasis::new(num_vars, degree).len();
        GradedSubspace {
            degree,
            num_vars,
            basis: QMatrix::identity(ambient),
        }
    }

    /// Canonicalizes an arbitrary spanning set of coefficient rows.
    pub fn from_rows(num_vars: usize, degree: u32, rows: QMatrix) -> Result<Self> {
        let ambient = DegreeBasis::new(num_vars, degree).len();
        if rows.ncols() != ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace rows",
                expected: ambient,
                found: rows.ncols(),
            });
        }
        let (r, pivots) = rows.rref();
        let mut reduced = QMatrix::zeros(pivots.len(), ambient);
        for i in 0..pivots.len() {
            for j in 0..ambient {
                reduced.set(i, j, r.get(i, j).clone());
            }
        }
        Ok(GradedSubspace {
            degree,
            num_vars,
            basis: reduced,
        })
    }

    pub fn from_vectors(num_vars: usize, degree: u32, vecs: Vec<Vec<Scalar>>) -> Result<Self> {
        if vecs.is_empty() {
            return Ok(Self::zero(num_vars, degree));
        }
        Self::from_rows(num_vars, degree, QMatrix::from_rows(vecs)?)
    }

    /// Span of homogeneous polynomials of the given degree.
    pub fn from_polys(num_vars: usize, degree: u32, polys: &[SparsePoly]) -> Result<Self> {
        let basis = DegreeBasis::new(num_vars, degree);
        let mut rows = Vec::new();
        for p in polys {
            rows.push(p.coeff_vector(&basis)?);
        }
        Self::from_vectors(num_vars, degree, rows)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis_matrix(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_polys(&self) -> Vec<SparsePoly> {
        let basis = DegreeBasis::new(self.num_vars, self.degree);
        self.basis
            .rows()
            .map(|r| SparsePoly::from_coeff_vector(&basis, r))
            .collect()
    }

    /// Membership test by reduction against the RREF rows.
    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.basis.ncols());
        let mut rem = v.to_vec();
        for row in 0..self.basis.nrows() {
            // the pivot of an RREF row is its first nonzero entry (a unit)
            let Some(pcol) = (0..self.basis.ncols()).find(|&j| !self.basis.get(row, j).is_zero())
            else {
                continue;
            };
            let c = rem[pcol].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in rem.iter_mut().enumerate() {
                *x = x.clone() - &c * self.basis.get(row, j);
            }
        }
        rem.iter().all(|x| x.is_zero())
    }

    pub fn contains_poly(&self, p: &SparsePoly) -> Result<bool> {
        let basis = DegreeBasis::new(self.num_vars, self.degree);
        let v = p.coeff_vector(&basis)?;
        Ok(self.contains_vector(&v))
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.degree == other.degree
            && self.num_vars == other.num_vars
            && self.basis.rows().all(|r| other.contains_vector(r))
    }

    fn check_compatible(&self, other: &GradedSubspace, context: &'static str) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        Ok(())
    }

    /// Sum of subspaces, canonicalized.
    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_compatible(other, "subspace sum")?;
        Self::from_rows(self.num_vars, self.degree, self.basis.vstack(&other.basis))
    }

    /// Intersection of subspaces: solve `u^T A = v^T B` over the stacked
    /// system and canonicalize the resulting span.
    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_compatible(other, "subspace intersection")?;
        let a = &self.basis;
        let b = &other.basis;
        if a.nrows() == 0 || b.nrows() == 0 {
            return Ok(Self::zero(self.num_vars, self.degree));
        }
        let m = a.ncols();
        let mut sys = QMatrix::zeros(m, a.nrows() + b.nrows());
        for i in 0..a.nrows() {
            for j in 0..m {
                sys.set(j, i, a.get(i, j).clone());
            }
        }
        for i in 0..b.nrows() {
            for j in 0..m {
                sys.set(j, a.nrows() + i, -b.get(i, j).clone());
            }
        }
        let kernel = sys.kernel_basis();
        let mut rows = Vec::new();
        for k in kernel {
            let mut w = vec![Scalar::zero(); m];
            for (i, coef) in k.iter().take(a.nrows()).enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (j, x) in w.iter_mut().enumerate() {
                    *x = x.clone() + coef * a.get(i, j);
                }
            }
            rows.push(w);
        }
        Self::from_vectors(self.num_vars, self.degree, rows)
    }
}
