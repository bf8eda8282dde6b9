//! Shared fixtures and independent oracles for the integration suites.
//!
//! The dense kernel computation here deliberately avoids the library's
//! operator and subspace machinery: its own basis enumeration, its own
//! action formula, its own elimination. It exists to cross-check the
//! engine's complements, not to share code with them.

use num_traits::Zero;
use omnf_core::{
    frac, int, FiniteSymmetryGroup, Monomial, QMatrix, Scalar, Sign, SparsePoly, SymplecticForm,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn poly(num_vars: usize, terms: &[(&[u32], Scalar)]) -> SparsePoly {
    let mut p = SparsePoly::zero(num_vars);
    for (e, c) in terms {
        p.add_term(Monomial::new(e.to_vec()), c.clone());
    }
    p
}

pub fn omega_plane(a: Scalar) -> SymplecticForm {
    SymplecticForm::new(
        QMatrix::from_rows(vec![vec![int(0), a.clone()], vec![-a, int(0)]]).unwrap(),
    )
    .unwrap()
}

pub fn rotation_l(lam: Scalar) -> QMatrix {
    QMatrix::from_rows(vec![vec![int(0), lam.clone()], vec![-lam, int(0)]]).unwrap()
}

pub fn omega_coupled() -> SymplecticForm {
    SymplecticForm::new(QMatrix::from_i64(&[
        &[0, 0, 0, -1],
        &[0, 0, 1, 0],
        &[0, -1, 0, 0],
        &[1, 0, 0, 0],
    ]))
    .unwrap()
}

pub fn coupled_l(lam: Scalar) -> QMatrix {
    let mut l = QMatrix::zeros(4, 4);
    l.set(0, 1, lam.clone());
    l.set(1, 0, -lam.clone());
    l.set(2, 3, lam.clone());
    l.set(3, 2, -lam);
    l
}

pub fn d4_group() -> FiniteSymmetryGroup {
    FiniteSymmetryGroup::generate(
        &[
            (
                QMatrix::from_i64(&[&[0, -1], &[1, 0]]),
                Sign::Plus,
                Sign::Plus,
            ),
            (
                QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
                Sign::Minus,
                Sign::Minus,
            ),
        ],
        16,
    )
    .unwrap()
}

pub fn coupled_group() -> FiniteSymmetryGroup {
    let tau = QMatrix::from_i64(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
    let psi = QMatrix::from_i64(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
    FiniteSymmetryGroup::generate(
        &[
            (tau, Sign::Minus, Sign::Minus),
            (psi, Sign::Plus, Sign::Minus),
        ],
        16,
    )
    .unwrap()
}

/// u1 = x1^2 + x2^2 on the plane.
pub fn u_plane() -> SparsePoly {
    poly(2, &[(&[2, 0], int(1)), (&[0, 2], int(1))])
}

pub fn u1() -> SparsePoly {
    poly(4, &[(&[2, 0, 0, 0], int(1)), (&[0, 2, 0, 0], int(1))])
}

pub fn u2() -> SparsePoly {
    poly(4, &[(&[0, 0, 2, 0], int(1)), (&[0, 0, 0, 2], int(1))])
}

pub fn u3() -> SparsePoly {
    poly(4, &[(&[1, 0, 1, 0], int(1)), (&[0, 1, 0, 1], int(1))])
}

pub fn u4() -> SparsePoly {
    poly(4, &[(&[0, 1, 1, 0], int(1)), (&[1, 0, 0, 1], int(-1))])
}

pub fn random_homogeneous(rng: &mut ChaCha8Rng, num_vars: usize, degree: u32) -> SparsePoly {
    let mut p = SparsePoly::zero(num_vars);
    for _ in 0..rng.gen_range(1..=5) {
        let mut exps = vec![0u32; num_vars];
        for _ in 0..degree {
            exps[rng.gen_range(0..num_vars)] += 1;
        }
        p.add_term(
            Monomial::new(exps),
            frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
        );
    }
    p
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    num_vars: usize,
    min_deg: u32,
    max_deg: u32,
) -> SparsePoly {
    let mut p = SparsePoly::zero(num_vars);
    for d in min_deg..=max_deg {
        p = &p + &random_homogeneous(rng, num_vars, d);
    }
    p
}

/// Matrix of `F -> F(gamma x)` on the library's degree-k monomial basis.
pub fn substitution_matrix(gamma: &QMatrix, num_vars: usize, k: u32) -> QMatrix {
    let basis = omnf_core::DegreeBasis::new(num_vars, k);
    let n = basis.len();
    let mut m = QMatrix::zeros(n, n);
    for j in 0..n {
        let image =
            SparsePoly::monomial(basis.monomial(j).clone(), int(1)).substitute_linear(gamma);
        for (mono, c) in image.terms() {
            m.set(basis.position(mono).unwrap(), j, c.clone());
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Independent dense oracle for kernels of the derivation xi -> <grad xi, M x>
// ---------------------------------------------------------------------------

/// Exponent tuples of total degree `deg`, enumerated lexicographically with
/// the *last* variable varying slowest; intentionally a different order than
/// the library uses.
fn dense_exponents(num_vars: usize, deg: u32) -> Vec<Vec<u32>> {
    if num_vars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for last in 0..=deg {
        for mut rest in dense_exponents(num_vars - 1, deg - last) {
            rest.push(last);
            out.push(rest);
        }
    }
    out
}

/// Kernel of the derivation `xi -> <grad xi, M x>` on degree-k polynomials,
/// computed with a dense matrix in the oracle's own basis order and a plain
/// Gauss-Jordan elimination written here.
pub fn dense_derivation_kernel(m: &QMatrix, k: u32) -> Vec<SparsePoly> {
    let n_vars = m.nrows();
    let exps = dense_exponents(n_vars, k);
    let dim = exps.len();
    let index_of = |e: &[u32]| exps.iter().position(|x| x == e).unwrap();

    // column alpha: derivation applied to x^alpha
    let mut a = vec![vec![Scalar::zero(); dim]; dim];
    for (col, alpha) in exps.iter().enumerate() {
        for i in 0..n_vars {
            if alpha[i] == 0 {
                continue;
            }
            for j in 0..n_vars {
                if m.get(i, j).is_zero() {
                    continue;
                }
                // alpha_i * M[i][j] * x^(alpha - e_i + e_j)
                let mut target = alpha.clone();
                target[i] -= 1;
                target[j] += 1;
                let row = index_of(&target);
                a[row][col] = a[row][col].clone() + int(alpha[i] as i64) * m.get(i, j);
            }
        }
    }

    // Gauss-Jordan, tracking pivot columns
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..dim).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        for i in 0..dim {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - &f * p;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();

    let mut kernel = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); dim];
        v[free] = int(1);
        for &(pr, pc) in &pivots {
            v[pc] = -a[pr][free].clone();
        }
        let mut p = SparsePoly::zero(n_vars);
        for (i, c) in v.into_iter().enumerate() {
            if !c.is_zero() {
                p.add_term(Monomial::new(exps[i].clone()), c);
            }
        }
        kernel.push(p);
    }
    kernel
}
