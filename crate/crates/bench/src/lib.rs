//! Fixture builders shared by the benchmarks.

use omnf_core::{
    frac, int, FiniteSymmetryGroup, Jet, Monomial, QMatrix, Scalar, Sign, SparsePoly,
    SymplecticForm,
};

pub fn poly(num_vars: usize, terms: &[(&[u32], Scalar)]) -> SparsePoly {
    let mut p = SparsePoly::zero(num_vars);
    for (e, c) in terms {
        p.add_term(Monomial::new(e.to_vec()), c.clone());
    }
    p
}

pub fn omega_plane() -> SymplecticForm {
    let a = frac(5, 3);
    SymplecticForm::new(
        QMatrix::from_rows(vec![vec![int(0), a.clone()], vec![-a, int(0)]]).unwrap(),
    )
    .unwrap()
}

pub fn rotation_l() -> QMatrix {
    let lam = frac(-7, 2);
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

pub fn coupled_l() -> QMatrix {
    QMatrix::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
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

/// Dihedral-invariant planar input of order 7.
pub fn planar_input() -> (Jet, SymplecticForm) {
    let form = omega_plane();
    let h2 = omnf_core::quadratic_from_matrix(&rotation_l(), &form).unwrap();
    let u = poly(2, &[(&[2, 0], int(1)), (&[0, 2], int(1))]);
    let h = &(&h2 + &u.pow(2)) + &u.pow(3).scale(&frac(1, 5));
    (Jet::new(h, 7), form)
}
