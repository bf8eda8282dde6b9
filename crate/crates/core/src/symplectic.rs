//! Symplectic linear algebra: the form, symplectic/antisymplectic/Hamiltonian
//! matrix predicates, Hamiltonian vector fields, the Poisson bracket, and
//! quadratic forms of linear Hamiltonian fields.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::monomial::Monomial;
use crate::poly::SparsePoly;
use crate::scalar::{frac, int, Scalar};
use num_traits::Zero;

/// A skew-symmetric invertible matrix representing the symplectic form.
/// The matrix need not be the canonical `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    matrix: QMatrix,
    inverse_t: QMatrix,
    dim_half: usize,
}

impl SymplecticForm {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.nrows().is_multiple_of(2) || matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                context: "symplectic form",
                expected: 2,
                found: matrix.nrows(),
            });
        }
        if !matrix.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        let inverse = matrix.inverse().ok_or(Error::SingularMatrix)?;
        let dim_half = matrix.nrows() / 2;
        Ok(SymplecticForm {
            inverse_t: inverse.transpose(),
            matrix,
            dim_half,
        })
    }

    /// The canonical form `J = [[0, I], [-I, 0]]` on `2n` variables.
    pub fn canonical(n: usize) -> Self {
        let mut m = QMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, int(1));
            m.set(n + i, i, int(-1));
        }
        Self::new(m).expect("canonical form is valid")
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// `([omega]^{-1})^T`, the matrix that turns gradients into fields.
    pub fn inverse_t(&self) -> &QMatrix {
        &self.inverse_t
    }

    pub fn dim(&self) -> usize {
        2 * self.dim_half
    }

    pub fn dim_half(&self) -> usize {
        self.dim_half
    }
}

/// Classification of a matrix against the form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixClass {
    /// `B^T [omega] B = [omega]`
    Symplectic,
    /// `B^T [omega] B = -[omega]`
    Antisymplectic,
    Neither,
}

impl std::fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixClass::Symplectic => write!(f, "symplectic"),
            MatrixClass::Antisymplectic => write!(f, "antisymplectic"),
            MatrixClass::Neither => write!(f, "neither"),
        }
    }
}

fn check_dim(b: &QMatrix, form: &SymplecticForm, context: &'static str) -> Result<()> {
    if !b.is_square() || b.nrows() != form.dim() {
        return Err(Error::DimensionMismatch {
            context,
            expected: form.dim(),
            found: b.nrows(),
        });
    }
    Ok(())
}

/// Exact classification of `B` as omega-symplectic, omega-antisymplectic or neither.
pub fn classify_matrix(b: &QMatrix, form: &SymplecticForm) -> Result<MatrixClass> {
    check_dim(b, form, "classify_matrix")?;
    let btob = &(&b.transpose() * form.matrix()) * b;
    if &btob == form.matrix() {
        Ok(MatrixClass::Symplectic)
    } else if btob == -form.matrix() {
        Ok(MatrixClass::Antisymplectic)
    } else {
        Ok(MatrixClass::Neither)
    }
}

/// True iff `L^T [omega] + [omega] L = 0`.
pub fn is_hamiltonian_matrix(l: &QMatrix, form: &SymplecticForm) -> Result<bool> {
    check_dim(l, form, "is_hamiltonian_matrix")?;
    let lhs = &(&l.transpose() * form.matrix()) + &(form.matrix() * l);
    Ok(lhs.is_zero())
}

/// A polynomial vector field, one component per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    components: Vec<SparsePoly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<SparsePoly>) -> Result<Self> {
        let n = components.len();
        for c in &components {
            if c.num_vars() != n {
                return Err(Error::DimensionMismatch {
                    context: "vector field components",
                    expected: n,
                    found: c.num_vars(),
                });
            }
        }
        Ok(PolyVectorField { components })
    }

    /// The linear field `x -> A x`.
    pub fn from_linear(a: &QMatrix) -> Self {
        let n = a.nrows();
        let components = (0..n)
            .map(|i| {
                let mut p = SparsePoly::zero(n);
                for j in 0..n {
                    p.add_term(Monomial::var(n, j), a.get(i, j).clone());
                }
                p
            })
            .collect();
        PolyVectorField { components }
    }

    pub fn zero(num_vars: usize) -> Self {
        PolyVectorField {
            components: vec![SparsePoly::zero(num_vars); num_vars],
        }
    }

    pub fn identity(num_vars: usize) -> Self {
        Self::from_linear(&QMatrix::identity(num_vars))
    }

    pub fn num_vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SparsePoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &SparsePoly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: u32) -> PolyVectorField {
        PolyVectorField {
            components: self.components.iter().map(|c| c.truncate(order)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> PolyVectorField {
        PolyVectorField {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn sub(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Extracts the matrix of a linear field; `None` when a component has a
    /// term of degree other than one.
    pub fn linear_matrix(&self) -> Option<QMatrix> {
        let n = self.num_vars();
        let mut m = QMatrix::zeros(n, n);
        for (i, comp) in self.components.iter().enumerate() {
            for (mono, c) in comp.terms() {
                if mono.degree() != 1 {
                    return None;
                }
                let j = mono.exps().iter().position(|&e| e == 1).unwrap();
                m.set(i, j, c.clone());
            }
        }
        Some(m)
    }
}

/// `X_H = ([omega]^{-1})^T grad H`, the omega-Hamiltonian field of `H`.
pub fn hamiltonian_field(h: &SparsePoly, form: &SymplecticForm) -> Result<PolyVectorField> {
    if h.num_vars() != form.dim() {
        return Err(Error::DimensionMismatch {
            context: "hamiltonian_field",
            expected: form.dim(),
            found: h.num_vars(),
        });
    }
    let grad = h.gradient();
    let n = form.dim();
    let it = form.inverse_t();
    let components = (0..n)
        .map(|i| {
            let mut acc = SparsePoly::zero(n);
            for (j, g) in grad.iter().enumerate() {
                if !it.get(i, j).is_zero() {
                    acc = &acc + &g.scale(it.get(i, j));
                }
            }
            acc
        })
        .collect();
    Ok(PolyVectorField { components })
}

/// Poisson bracket `{F, G} = <grad F, X_G>`.
pub fn poisson(f: &SparsePoly, g: &SparsePoly, form: &SymplecticForm) -> Result<SparsePoly> {
    if f.num_vars() != form.dim() || g.num_vars() != form.dim() {
        return Err(Error::DimensionMismatch {
            context: "poisson bracket",
            expected: form.dim(),
            found: if f.num_vars() != form.dim() {
                f.num_vars()
            } else {
                g.num_vars()
            },
        });
    }
    let xg = hamiltonian_field(g, form)?;
    let mut acc = SparsePoly::zero(form.dim());
    for (i, xi) in xg.components.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        acc = &acc + &(&f.partial_derivative(i) * xi);
    }
    Ok(acc)
}

/// Recovers the quadratic Hamiltonian of a linear Hamiltonian field: for
/// `A` with `A^T[omega] + [omega]A = 0`, returns `Q(x) = (1/2) x^T ([omega]^T A) x`,
/// so that the field of `Q` is `x -> A x`. Fails loudly when `A` is not
/// omega-Hamiltonian; nothing is symmetrized.
pub fn quadratic_from_matrix(a: &QMatrix, form: &SymplecticForm) -> Result<SparsePoly> {
    check_dim(a, form, "quadratic_from_matrix")?;
    if !is_hamiltonian_matrix(a, form)? {
        return Err(Error::NotHamiltonianMatrix {
            identity: "A^T[omega] + [omega]A",
        });
    }
    let s = &form.matrix().transpose() * a;
    debug_assert!(s.is_symmetric());
    let n = form.dim();
    let half = frac(1, 2);
    let mut q = SparsePoly::zero(n);
    for i in 0..n {
        for j in 0..n {
            if s.get(i, j).is_zero() {
                continue;
            }
            let mono = Monomial::var(n, i).mul(&Monomial::var(n, j));
            q.add_term(mono, s.get(i, j) * &half);
        }
    }
    Ok(q)
}

/// Lie bracket of polynomial vector fields, `[A, B] = (dB)A - (dA)B`.
pub fn lie_bracket(a: &PolyVectorField, b: &PolyVectorField) -> PolyVectorField {
    assert_eq!(a.num_vars(), b.num_vars());
    let n = a.num_vars();
    let components = (0..n)
        .map(|i| {
            let mut acc = SparsePoly::zero(n);
            for j in 0..n {
                acc = &acc + &(&b.components[i].partial_derivative(j) * &a.components[j]);
                acc = &acc - &(&a.components[i].partial_derivative(j) * &b.components[j]);
            }
            acc
        })
        .collect();
    PolyVectorField { components }
}
