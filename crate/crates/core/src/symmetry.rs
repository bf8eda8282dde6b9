//! Finite matrix symmetry groups carrying two sign homomorphisms: closure
//! generation, semisymplectic verification, symmetry-type classification,
//! coset structure, character-weighted Reynolds projections, and exact
//! invariance/equivariance checks.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::monomial::DegreeBasis;
use crate::poly::SparsePoly;
use crate::scalar::{int, Scalar};
use crate::subspace::GradedSubspace;
use crate::symplectic::{classify_matrix, MatrixClass, PolyVectorField, SymplecticForm};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;

/// A sign in the image of a homomorphism to Z_2 = {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn scalar(self) -> Scalar {
        int(self.to_i8() as i64)
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.to_i8())
    }
}

/// A map element-index -> sign, multiplicative over the group table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignHomomorphism {
    values: Vec<Sign>,
}

impl SignHomomorphism {
    pub fn new(values: Vec<Sign>) -> Self {
        SignHomomorphism { values }
    }

    pub fn get(&self, i: usize) -> Sign {
        self.values[i]
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&s| s == Sign::Plus)
    }

    fn verify(&self, table: &[Vec<usize>]) -> Result<()> {
        for (i, row) in table.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if self.values[k] != self.values[i] * self.values[j] {
                    return Err(Error::NonMultiplicativeCharacter { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Symmetry type of a group element by the pair (sigma_1, sigma_2):
/// symplectic/antisymplectic crossed with equivariant/reversible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymmetryType {
    /// symplectic equivariant: (+1, +1)
    SE,
    /// symplectic reversible: (+1, -1)
    SR,
    /// antisymplectic equivariant: (-1, +1)
    AE,
    /// antisymplectic reversible: (-1, -1)
    AR,
}

impl SymmetryType {
    pub fn from_signs(s1: Sign, s2: Sign) -> Self {
        match (s1, s2) {
            (Sign::Plus, Sign::Plus) => SymmetryType::SE,
            (Sign::Plus, Sign::Minus) => SymmetryType::SR,
            (Sign::Minus, Sign::Plus) => SymmetryType::AE,
            (Sign::Minus, Sign::Minus) => SymmetryType::AR,
        }
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryType::SE => "SE",
            SymmetryType::SR => "SR",
            SymmetryType::AE => "AE",
            SymmetryType::AR => "AR",
        };
        write!(f, "{s}")
    }
}

/// A closed finite set of matrices with verified multiplication table and two
/// sign homomorphisms.
#[derive(Debug, Clone)]
pub struct FiniteSymmetryGroup {
    elements: Vec<QMatrix>,
    mul_table: Vec<Vec<usize>>,
    identity_index: usize,
    sigma1: SignHomomorphism,
    sigma2: SignHomomorphism,
    dim: usize,
}

/// Cosets of `Gamma_{++} = ker sigma_1 ∩ ker sigma_2`, with one representative
/// per sign class when that class is non-empty. `delta[i-1]` carries delta_i,
/// the representative with `sigma_j = +1` exactly for `j = i` (and `delta_3`
/// with both signs `-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetStructure {
    pub gamma_pp: Vec<usize>,
    pub delta1: Option<usize>,
    pub delta2: Option<usize>,
    pub delta3: Option<usize>,
    pub index: usize,
}

impl FiniteSymmetryGroup {
    /// Breadth-first closure of the generators under products, propagating the
    /// two signs multiplicatively. Fails when the closure exceeds `max_size`,
    /// when a matrix would receive two different signs, or when a generator is
    /// singular.
    pub fn generate(
        generators: &[(QMatrix, Sign, Sign)],
        max_size: usize,
    ) -> Result<FiniteSymmetryGroup> {
        let Some(first) = generators.first() else {
            return Err(Error::NoGenerators);
        };
        let dim = first.0.nrows();
        if dim == 0 || dim % 2 != 0 {
            return Err(Error::DimensionMismatch {
                context: "group generators",
                expected: 2,
                found: dim,
            });
        }
        for (index, (g, _, _)) in generators.iter().enumerate() {
            if !g.is_square() || g.nrows() != dim {
                return Err(Error::DimensionMismatch {
                    context: "group generators",
                    expected: dim,
                    found: g.nrows(),
                });
            }
            if g.inverse().is_none() {
                return Err(Error::SingularGenerator { index });
            }
        }

        let mut elements: Vec<QMatrix> = vec![QMatrix::identity(dim)];
        let mut s1: Vec<Sign> = vec![Sign::Plus];
        let mut s2: Vec<Sign> = vec![Sign::Plus];
        let mut index: HashMap<QMatrix, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);

        let add = |elements: &mut Vec<QMatrix>,
                   s1: &mut Vec<Sign>,
                   s2: &mut Vec<Sign>,
                   index: &mut HashMap<QMatrix, usize>,
                   m: QMatrix,
                   v1: Sign,
                   v2: Sign|
         -> Result<bool> {
            if let Some(&k) = index.get(&m) {
                if s1[k] != v1 || s2[k] != v2 {
                    return Err(Error::InconsistentSigns { element: k });
                }
                return Ok(false);
            }
            if elements.len() == max_size {
                return Err(Error::ClosureExceeded { max_size });
            }
            index.insert(m.clone(), elements.len());
            elements.push(m);
            s1.push(v1);
            s2.push(v2);
            Ok(true)
        };

        for (g, v1, v2) in generators {
            add(
                &mut elements,
                &mut s1,
                &mut s2,
                &mut index,
                g.clone(),
                *v1,
                *v2,
            )?;
        }

        // fixed-point closure under products
        let mut frontier: Vec<usize> = (0..elements.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &i in &frontier {
                for j in 0..elements.len() {
                    for (a, b) in [(i, j), (j, i)] {
                        let prod = &elements[a] * &elements[b];
                        let v1 = s1[a] * s1[b];
                        let v2 = s2[a] * s2[b];
                        if add(&mut elements, &mut s1, &mut s2, &mut index, prod, v1, v2)? {
                            next.push(elements.len() - 1);
                        }
                    }
                }
            }
            frontier = next;
        }

        let order = elements.len();
        let mut mul_table = vec![vec![0usize; order]; order];
        for i in 0..order {
            for j in 0..order {
                let prod = &elements[i] * &elements[j];
                let k = *index.get(&prod).expect("closure is complete");
                if s1[k] != s1[i] * s1[j] || s2[k] != s2[i] * s2[j] {
                    return Err(Error::InconsistentSigns { element: k });
                }
                mul_table[i][j] = k;
            }
        }

        let sigma1 = SignHomomorphism::new(s1);
        let sigma2 = SignHomomorphism::new(s2);
        sigma1.verify(&mul_table)?;
        sigma2.verify(&mul_table)?;
        Ok(FiniteSymmetryGroup {
            elements,
            mul_table,
            identity_index: 0,
            sigma1,
            sigma2,
            dim,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element(&self, i: usize) -> &QMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[QMatrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul_table
    }

    pub fn sigma1(&self) -> &SignHomomorphism {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &SignHomomorphism {
        &self.sigma2
    }

    /// The product character `sigma_1 sigma_2`.
    pub fn sigma12(&self) -> Vec<Sign> {
        self.sigma1
            .values()
            .iter()
            .zip(self.sigma2.values())
            .map(|(&a, &b)| a * b)
            .collect()
    }

    pub fn trivial_character(&self) -> Vec<Sign> {
        vec![Sign::Plus; self.order()]
    }

    /// Classifies every element against the form and checks that the class
    /// matches sigma_1 (+1 symplectic, -1 antisymplectic). On success the
    /// action is certified sigma_1-semisymplectic.
    pub fn verify_semisymplectic(&self, form: &SymplecticForm) -> Result<Vec<MatrixClass>> {
        let classes: Vec<MatrixClass> = self
            .elements
            .iter()
            .map(|g| classify_matrix(g, form))
            .collect::<Result<_>>()?;
        let neither: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == MatrixClass::Neither)
            .map(|(i, _)| i)
            .collect();
        if !neither.is_empty() {
            return Err(Error::NotSemisymplectic { offenders: neither });
        }
        let mismatched: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(i, c)| {
                let expected = match self.sigma1.get(*i) {
                    Sign::Plus => MatrixClass::Symplectic,
                    Sign::Minus => MatrixClass::Antisymplectic,
                };
                **c != expected
            })
            .map(|(i, _)| i)
            .collect();
        if !mismatched.is_empty() {
            return Err(Error::SigmaMismatch {
                offenders: mismatched,
            });
        }
        Ok(classes)
    }

    /// Per-element symmetry type, plus the set of types present.
    pub fn classify_symmetry_types(&self) -> (Vec<SymmetryType>, BTreeSet<SymmetryType>) {
        let types: Vec<SymmetryType> = (0..self.order())
            .map(|i| SymmetryType::from_signs(self.sigma1.get(i), self.sigma2.get(i)))
            .collect();
        let present = types.iter().copied().collect();
        (types, present)
    }

    /// Computes `Gamma_{++}` and the smallest-index representative of each
    /// non-empty sign class.
    pub fn coset_structure(&self) -> CosetStructure {
        let mut gamma_pp = Vec::new();
        let mut delta1 = None;
        let mut delta2 = None;
        let mut delta3 = None;
        for i in 0..self.order() {
            match (self.sigma1.get(i), self.sigma2.get(i)) {
                (Sign::Plus, Sign::Plus) => gamma_pp.push(i),
                (Sign::Plus, Sign::Minus) => delta1 = delta1.or(Some(i)),
                (Sign::Minus, Sign::Plus) => delta2 = delta2.or(Some(i)),
                (Sign::Minus, Sign::Minus) => delta3 = delta3.or(Some(i)),
            }
        }
        let index = self.order() / gamma_pp.len();
        CosetStructure {
            gamma_pp,
            delta1,
            delta2,
            delta3,
            index,
        }
    }

    /// Matrix of `F -> (1/|Gamma|) sum_gamma chi(gamma) F(gamma x)` on the
    /// monomial basis of the given degree. Idempotent; its image is the
    /// chi-isotypic subspace.
    pub fn reynolds_projection(&self, character: &[Sign], degree: u32) -> Result<QMatrix> {
        self.validate_character(character)?;
        let basis = DegreeBasis::new(self.dim, degree);
        let n = basis.len();
        let weight = BigRational::new(1.into(), (self.order() as i64).into());
        let mut r = QMatrix::zeros(n, n);
        for (gi, g) in self.elements.iter().enumerate() {
            let chi = character[gi].scalar() * &weight;
            for j in 0..n {
                let image =
                    SparsePoly::monomial(basis.monomial(j).clone(), int(1)).substitute_linear(g);
                for (m, c) in image.terms() {
                    let i = basis.position(m).expect("degree is preserved");
                    let v = r.get(i, j) + &(c * &chi);
                    r.set(i, j, v);
                }
            }
        }
        Ok(r)
    }

    /// Image of the Reynolds projection as a canonical subspace.
    pub fn reynolds_image(&self, character: &[Sign], degree: u32) -> Result<GradedSubspace> {
        let r = self.reynolds_projection(character, degree)?;
        GradedSubspace::from_rows(self.dim, degree, r.transpose())
    }

    fn validate_character(&self, character: &[Sign]) -> Result<()> {
        if character.len() != self.order() {
            return Err(Error::DimensionMismatch {
                context: "character length",
                expected: self.order(),
                found: character.len(),
            });
        }
        for i in 0..self.order() {
            for j in 0..self.order() {
                let k = self.mul_table[i][j];
                if character[k] != character[i] * character[j] {
                    return Err(Error::NonMultiplicativeCharacter { i, j });
                }
            }
        }
        Ok(())
    }

    /// True iff `F(gamma x) = chi(gamma) F(x)` as exact polynomial identities
    /// for every group element.
    pub fn check_invariance(&self, f: &SparsePoly, character: &[Sign]) -> Result<bool> {
        if f.num_vars() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "check_invariance",
                expected: self.dim,
                found: f.num_vars(),
            });
        }
        self.validate_character(character)?;
        for (gi, g) in self.elements.iter().enumerate() {
            if f.substitute_linear(g) != f.scale(&character[gi].scalar()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `X(gamma x) = chi(gamma) gamma X(x)` as exact identities for
    /// every group element (linear action).
    pub fn check_equivariance(&self, x: &PolyVectorField, character: &[Sign]) -> Result<bool> {
        if x.num_vars() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "check_equivariance",
                expected: self.dim,
                found: x.num_vars(),
            });
        }
        self.validate_character(character)?;
        for (gi, g) in self.elements.iter().enumerate() {
            let chi = character[gi].scalar();
            for i in 0..self.dim {
                let lhs = x.component(i).substitute_linear(g);
                let mut rhs = SparsePoly::zero(self.dim);
                for j in 0..self.dim {
                    if g.get(i, j).is_zero() {
                        continue;
                    }
                    rhs = &rhs + &x.component(j).scale(&(g.get(i, j) * &chi));
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
