//! The normal-form engine: homological operators on graded polynomial spaces,
//! certified graded complements (plain and equivariant), degree-by-degree
//! homological solves, truncated Lie-series changes of coordinates, and the
//! end-to-end pipelines.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::monomial::DegreeBasis;
use crate::poly::{Jet, SparsePoly};
use crate::scalar::Scalar;
use crate::subspace::GradedSubspace;
use crate::symmetry::{FiniteSymmetryGroup, Sign};
use crate::symplectic::{
    hamiltonian_field, is_hamiltonian_matrix, poisson, quadratic_from_matrix, PolyVectorField,
    SymplecticForm,
};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Matrix of the homological operator `xi -> {xi, H^2}` on one graded piece.
#[derive(Debug, Clone)]
pub struct AdOperator {
    degree: u32,
    h2: SparsePoly,
    basis: DegreeBasis,
    matrix: QMatrix,
}

impl AdOperator {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn h2(&self) -> &SparsePoly {
        &self.h2
    }

    pub fn basis(&self) -> &DegreeBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn apply(&self, p: &SparsePoly) -> Result<SparsePoly> {
        let v = p.coeff_vector(&self.basis)?;
        Ok(SparsePoly::from_coeff_vector(
            &self.basis,
            &self.matrix.mul_vec(&v),
        ))
    }

    /// Image of the operator as a canonical subspace.
    pub fn image_subspace(&self) -> GradedSubspace {
        GradedSubspace::from_rows(self.basis.num_vars(), self.degree, self.matrix.transpose())
            .expect("ambient dimensions agree")
    }

    /// Kernel of the operator as a canonical subspace.
    pub fn kernel_subspace(&self) -> GradedSubspace {
        GradedSubspace::from_vectors(
            self.basis.num_vars(),
            self.degree,
            self.matrix.kernel_basis(),
        )
        .expect("ambient dimensions agree")
    }
}

/// Builds the matrix of `ad_{H^2}^k` on the degree-`k` monomial basis; column
/// `j` is `{m_j, H^2}` expanded in the same basis.
pub fn ad_matrix(h2: &SparsePoly, form: &SymplecticForm, k: u32) -> Result<AdOperator> {
    if h2.num_vars() != form.dim() {
        return Err(Error::DimensionMismatch {
            context: "ad_matrix",
            expected: form.dim(),
            found: h2.num_vars(),
        });
    }
    if !h2.is_homogeneous(2) {
        return Err(Error::NotQuadratic {
            found: h2.max_degree(),
        });
    }
    let basis = DegreeBasis::new(form.dim(), k);
    let n = basis.len();
    let mut matrix = QMatrix::zeros(n, n);
    for j in 0..n {
        let mono = SparsePoly::monomial(basis.monomial(j).clone(), crate::scalar::int(1));
        let image = poisson(&mono, h2, form)?;
        debug_assert!(image.is_homogeneous(k));
        for (m, c) in image.terms() {
            let i = basis.position(m).expect("bracket preserves the degree");
            matrix.set(i, j, c.clone());
        }
    }
    Ok(AdOperator {
        degree: k,
        h2: h2.clone(),
        basis,
        matrix,
    })
}

/// Rank certificate for one graded decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: u32,
    pub ambient_dim: usize,
    pub image_dim: usize,
    pub complement_dim: usize,
    pub intersection_dim: usize,
    /// Whether the transposed operator is the Fischer adjoint of the forward
    /// one. Recorded, never assumed.
    pub fischer_adjoint: bool,
    pub equivariant: Option<EquivariantCertificate>,
}

/// Rank certificate for the equivariant decomposition at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantCertificate {
    /// dim of the sigma_1 sigma_2 isotypic subspace
    pub invariant_space_dim: usize,
    /// dim of the image of the sigma_1 isotypic subspace under the operator
    pub constrained_image_dim: usize,
    pub complement_dim: usize,
    pub intersection_dim: usize,
}

pub(crate) struct ComplementData {
    pub complement: GradedSubspace,
    pub ad: AdOperator,
    pub certificate: DegreeCertificate,
}

fn fischer_adjoint_holds(ad: &AdOperator, adt: &AdOperator) -> bool {
    // W-adjoint of A is W^{-1} A^T W with W = diag(alpha!)
    let basis = ad.basis();
    let n = basis.len();
    let weights: Vec<Scalar> = (0..n)
        .map(|i| BigRational::from_integer(basis.monomial(i).factorial_weight()))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let expected = ad.matrix().get(j, i) * &weights[j] / &weights[i];
            if *adt.matrix().get(i, j) != expected {
                return false;
            }
        }
    }
    true
}

pub(crate) fn complement_data(
    l: &QMatrix,
    form: &SymplecticForm,
    k: u32,
) -> Result<ComplementData> {
    if !is_hamiltonian_matrix(l, form)? {
        return Err(Error::NotHamiltonianMatrix {
            identity: "L^T[omega] + [omega]L",
        });
    }
    if !is_hamiltonian_matrix(&l.transpose(), form)? {
        return Err(Error::SNotSymplectic);
    }
    let h2 = quadratic_from_matrix(l, form)?;
    let h2t = quadratic_from_matrix(&l.transpose(), form)?;
    let ad = ad_matrix(&h2, form, k)?;
    let adt = ad_matrix(&h2t, form, k)?;
    let image = ad.image_subspace();
    let complement = adt.kernel_subspace();
    let ambient = ad.basis().len();
    let intersection = image.intersect(&complement)?;
    if image.dim() + complement.dim() != ambient || intersection.dim() != 0 {
        return Err(Error::ComplementCertificateFailed {
            degree: k,
            ambient_dim: ambient,
            image_dim: image.dim(),
            kernel_dim: complement.dim(),
            intersection_dim: intersection.dim(),
        });
    }
    let certificate = DegreeCertificate {
        degree: k,
        ambient_dim: ambient,
        image_dim: image.dim(),
        complement_dim: complement.dim(),
        intersection_dim: intersection.dim(),
        fischer_adjoint: fischer_adjoint_holds(&ad, &adt),
        equivariant: None,
    };
    Ok(ComplementData {
        complement,
        ad,
        certificate,
    })
}

/// The graded complement `ker ad_{H^2_T}^k` of `im ad_{H^2}^k`, certified by
/// rank: the two subspaces must intersect trivially and fill the degree.
/// `L` must be omega-Hamiltonian and so must `L^T` (the hypothesis that the
/// one-parameter closure of `e^{s L^T}` acts symplectically).
pub fn complement_basis(l: &QMatrix, form: &SymplecticForm, k: u32) -> Result<GradedSubspace> {
    Ok(complement_data(l, form, k)?.complement)
}

pub(crate) fn span_of_images(
    ad: &AdOperator,
    constraint: &GradedSubspace,
) -> Result<GradedSubspace> {
    let rows: Vec<Vec<Scalar>> = constraint
        .basis_matrix()
        .rows()
        .map(|r| ad.matrix().mul_vec(r))
        .collect();
    GradedSubspace::from_vectors(constraint.num_vars(), constraint.degree(), rows)
}

pub(crate) struct EquivariantData {
    pub complement: GradedSubspace,
    pub constraint: GradedSubspace,
    pub ad: AdOperator,
    pub certificate: DegreeCertificate,
}

pub(crate) fn equivariant_complement_data(
    l: &QMatrix,
    form: &SymplecticForm,
    group: &FiniteSymmetryGroup,
    k: u32,
) -> Result<EquivariantData> {
    if group.dim() != form.dim() {
        return Err(Error::DimensionMismatch {
            context: "equivariant_complement",
            expected: form.dim(),
            found: group.dim(),
        });
    }
    group.verify_semisymplectic(form)?;
    let linear_field = PolyVectorField::from_linear(l);
    if !group.check_equivariance(&linear_field, group.sigma2().values())? {
        return Err(Error::SymmetryHypothesisFailed {
            hypothesis: "linearization is not sigma_2-equivariant under the group".into(),
        });
    }
    let data = complement_data(l, form, k)?;
    let invariant_space = group.reynolds_image(&group.sigma12(), k)?;
    let complement = data.complement.intersect(&invariant_space)?;
    let constraint = group.reynolds_image(group.sigma1().values(), k)?;
    let constrained_image = span_of_images(&data.ad, &constraint)?;
    let intersection = constrained_image.intersect(&complement)?;
    if constrained_image.dim() + complement.dim() != invariant_space.dim()
        || intersection.dim() != 0
    {
        return Err(Error::DecompositionCertificateFailed { degree: k });
    }
    let certificate = DegreeCertificate {
        equivariant: Some(EquivariantCertificate {
            invariant_space_dim: invariant_space.dim(),
            constrained_image_dim: constrained_image.dim(),
            complement_dim: complement.dim(),
            intersection_dim: intersection.dim(),
        }),
        ..data.certificate
    };
    Ok(EquivariantData {
        complement,
        constraint,
        ad: data.ad,
        certificate,
    })
}

/// The equivariant graded complement: the plain complement intersected with
/// the sigma_1 sigma_2 isotypic subspace, certified against the image of the
/// sigma_1 isotypic subspace under the homological operator.
pub fn equivariant_complement(
    l: &QMatrix,
    form: &SymplecticForm,
    group: &FiniteSymmetryGroup,
    k: u32,
) -> Result<GradedSubspace> {
    Ok(equivariant_complement_data(l, form, group, k)?.complement)
}

/// One degree of the homological equation: `input = removed + resonant` with
/// `removed = ad(generator)` exactly and `resonant` in the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologicalSplit {
    pub degree: u32,
    pub resonant: SparsePoly,
    pub generator: SparsePoly,
    pub removed: SparsePoly,
}

/// Splits a homogeneous `hk` along `im(ad) ⊕ complement` (or, when a
/// constraint subspace is given, along `ad(constraint) ⊕ complement`) and
/// produces the deterministic generator solving `ad(generator) = removed`.
pub fn homological_split(
    hk: &SparsePoly,
    adop: &AdOperator,
    complement: &GradedSubspace,
    constraint: Option<&GradedSubspace>,
) -> Result<HomologicalSplit> {
    let k = adop.degree();
    let basis = adop.basis();
    let hvec = hk.coeff_vector(basis)?;
    let image = match constraint {
        Some(c) => span_of_images(adop, c)?,
        None => adop.image_subspace(),
    };
    let joint = image
        .basis_matrix()
        .transpose()
        .hstack(&complement.basis_matrix().transpose());
    let solve_failure = || match constraint {
        Some(_) => Error::EquivariantSolveFailed { degree: k },
        None => Error::CertificateViolation {
            check: format!("degree-{k} input lies outside image ⊕ complement"),
        },
    };
    let coeffs = joint.solve_particular(&hvec).ok_or_else(solve_failure)?;
    let mut resonant_vec = vec![Scalar::zero(); basis.len()];
    for (i, c) in coeffs[image.dim()..].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, x) in resonant_vec.iter_mut().enumerate() {
            *x = x.clone() + c * complement.basis_matrix().get(i, j);
        }
    }
    let resonant = SparsePoly::from_coeff_vector(basis, &resonant_vec);
    let removed = hk - &resonant;
    let gvec = removed.coeff_vector(basis)?;
    let generator = if removed.is_zero() {
        SparsePoly::zero(hk.num_vars())
    } else {
        match constraint {
            Some(c) => {
                // solve ad(C^T y) = removed for y, then map back
                let restricted: Vec<Vec<Scalar>> = c
                    .basis_matrix()
                    .rows()
                    .map(|r| adop.matrix().mul_vec(r))
                    .collect();
                let cols = QMatrix::from_rows(restricted)?.transpose();
                let y = cols.solve_particular(&gvec).ok_or_else(solve_failure)?;
                let mut xi = vec![Scalar::zero(); basis.len()];
                for (i, coef) in y.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (j, x) in xi.iter_mut().enumerate() {
                        *x = x.clone() + coef * c.basis_matrix().get(i, j);
                    }
                }
                SparsePoly::from_coeff_vector(basis, &xi)
            }
            None => {
                let y = adop
                    .matrix()
                    .solve_particular(&gvec)
                    .ok_or_else(solve_failure)?;
                SparsePoly::from_coeff_vector(basis, &y)
            }
        }
    };
    // exactness of all three identities
    if &(&removed + &resonant) != hk
        || adop.apply(&generator)? != removed
        || !complement.contains_poly(&resonant)?
    {
        return Err(Error::CertificateViolation {
            check: format!("degree-{k} homological split identities"),
        });
    }
    Ok(HomologicalSplit {
        degree: k,
        resonant,
        generator,
        removed,
    })
}

/// Conjugates `h` by the time-1 flow of the Hamiltonian field of `xi`,
/// computed as the exact Poisson-Lie series `sum_m (1/m!) ad_xi^m(h)` with
/// `ad_xi(f) = {f, xi}`, truncated at order `r`. Graded components of degree
/// below `deg(xi)` are unchanged and the component at `deg(xi)` shifts by
/// `{H^2, xi} = -ad_{H^2}(xi)`.
pub fn lie_transform(h: &Jet, xi: &SparsePoly, form: &SymplecticForm, r: u32) -> Result<Jet> {
    if xi.is_zero() {
        return Ok(Jet::new(h.poly().clone(), r));
    }
    let deg = xi.max_degree().unwrap();
    if !xi.is_homogeneous(deg) {
        return Err(Error::NonHomogeneous {
            context: "lie_transform generator",
            degree: deg,
        });
    }
    if deg < 3 {
        return Err(Error::GeneratorDegreeTooLow { found: deg });
    }
    let mut sum = h.poly().truncate(r);
    let mut term = sum.clone();
    let mut factorial = Scalar::one();
    let mut m: u64 = 0;
    while !term.is_zero() {
        m += 1;
        factorial *= BigRational::from_integer(m.into());
        term = poisson(&term, xi, form)?.truncate(r);
        if term.is_zero() {
            break;
        }
        sum = &sum + &term.scale(&factorial.recip());
        // each bracket raises the degree by deg - 2 >= 1, so this terminates
        debug_assert!(m <= r as u64 + 2);
    }
    Ok(Jet::new(sum, r))
}

/// One degree of a pipeline run: the certified complement, the split, and the
/// rank certificate.
#[derive(Debug, Clone)]
pub struct DegreeRecord {
    pub certificate: DegreeCertificate,
    pub complement: GradedSubspace,
    pub split: HomologicalSplit,
}

/// Exact symmetry checks recorded on an equivariant run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCertificate {
    pub normal_form_invariant: bool,
    pub field_equivariant: bool,
    pub resonant_terms_in_complement: bool,
}

/// Full output of a pipeline run.
#[derive(Debug, Clone)]
pub struct NormalFormReport {
    /// The ingested input, truncated at the requested order.
    pub input: Jet,
    pub order: u32,
    pub linearization: QMatrix,
    pub degenerate_linear_part: bool,
    pub degrees: Vec<DegreeRecord>,
    /// `K = H^2 + sum_k K^k`, every `K^k` in its certified complement.
    pub normal_form: Jet,
    /// `X_K`, truncated at `field_order = order - 1`.
    pub field: PolyVectorField,
    pub field_order: u32,
    pub symmetry: Option<SymmetryCertificate>,
}

fn pipeline(
    h: &Jet,
    form: &SymplecticForm,
    group: Option<&FiniteSymmetryGroup>,
    r: u32,
) -> Result<NormalFormReport> {
    if h.num_vars() != form.dim() {
        return Err(Error::DimensionMismatch {
            context: "normal_form input",
            expected: form.dim(),
            found: h.num_vars(),
        });
    }
    let input = Jet::new(h.poly().clone(), r);
    if !input.poly().homogeneous_component(0).is_zero()
        || !input.poly().homogeneous_component(1).is_zero()
    {
        return Err(Error::NonEquilibriumInput);
    }
    let h2 = input.poly().homogeneous_component(2);
    let l = hamiltonian_field(&h2, form)?
        .linear_matrix()
        .expect("field of a quadratic is linear");
    let degenerate = l.is_zero();

    let sigma2: Option<Vec<Sign>> = group.map(|g| g.sigma2().values().to_vec());
    if let Some(g) = group {
        g.verify_semisymplectic(form)?;
        if !g.check_invariance(input.poly(), &g.sigma12())? {
            return Err(Error::SymmetryHypothesisFailed {
                hypothesis: "input Hamiltonian is not sigma_1 sigma_2-invariant under the group"
                    .into(),
            });
        }
        let linear_field = PolyVectorField::from_linear(&l);
        if !g.check_equivariance(&linear_field, sigma2.as_deref().unwrap())? {
            return Err(Error::SymmetryHypothesisFailed {
                hypothesis: "linearization is not sigma_2-equivariant under the group".into(),
            });
        }
    }

    let mut current = input.clone();
    let mut degrees = Vec::new();
    for k in 3..=r {
        let (complement, certificate, adop, constraint) = match group {
            Some(g) => {
                let data = equivariant_complement_data(&l, form, g, k)?;
                (
                    data.complement,
                    data.certificate,
                    data.ad,
                    Some(data.constraint),
                )
            }
            None => {
                let data = complement_data(&l, form, k)?;
                (data.complement, data.certificate, data.ad, None)
            }
        };
        let hk = current.poly().homogeneous_component(k);
        let split = homological_split(&hk, &adop, &complement, constraint.as_ref())?;
        if !split.generator.is_zero() {
            current = lie_transform(&current, &split.generator, form, r)?;
        }
        debug_assert_eq!(current.poly().homogeneous_component(k), split.resonant);
        degrees.push(DegreeRecord {
            certificate,
            complement,
            split,
        });
    }

    let normal_form = current;
    let field_order = r.saturating_sub(1);
    let field = hamiltonian_field(normal_form.poly(), form)?.truncate(field_order);

    let symmetry = match group {
        Some(g) => {
            let cert = SymmetryCertificate {
                normal_form_invariant: g.check_invariance(normal_form.poly(), &g.sigma12())?,
                field_equivariant: g.check_equivariance(&field, sigma2.as_deref().unwrap())?,
                resonant_terms_in_complement: degrees
                    .iter()
                    .map(|d| d.complement.contains_poly(&d.split.resonant))
                    .collect::<Result<Vec<bool>>>()?
                    .into_iter()
                    .all(|b| b),
            };
            if !(cert.normal_form_invariant
                && cert.field_equivariant
                && cert.resonant_terms_in_complement)
            {
                return Err(Error::CertificateViolation {
                    check: "symmetry preservation of the normal form".into(),
                });
            }
            Some(cert)
        }
        None => None,
    };

    Ok(NormalFormReport {
        input,
        order: r,
        linearization: l,
        degenerate_linear_part: degenerate,
        degrees,
        normal_form,
        field,
        field_order,
        symmetry,
    })
}

/// Degree-by-degree normal form of `h` up to order `r`: the result is
/// `H^2 + K^3 + ... + K^r` with every `K^k` in the certified complement, and
/// the transformed field preserves the linear part.
pub fn normal_form(h: &Jet, form: &SymplecticForm, r: u32) -> Result<NormalFormReport> {
    pipeline(h, form, None, r)
}

/// Equivariant variant: complements are intersected with the
/// sigma_1 sigma_2 isotypic subspace and every generator is constrained to the
/// sigma_1 isotypic subspace, so the output keeps the input's symmetries and
/// the Hamiltonian structure.
pub fn equivariant_normal_form(
    h: &Jet,
    form: &SymplecticForm,
    group: &FiniteSymmetryGroup,
    r: u32,
) -> Result<NormalFormReport> {
    pipeline(h, form, Some(group), r)
}
