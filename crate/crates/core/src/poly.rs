//! Sparse multivariate polynomials over exact rationals, jets (order-truncated
//! polynomials), and the Fischer pairing.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::monomial::{DegreeBasis, Monomial};
use crate::scalar::{format_scalar, int, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial: monomial -> nonzero coefficient. The map is ordered by
/// the graded-lex order, so iteration, equality and printing are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SparsePoly {
    pub fn zero(num_vars: usize) -> Self {
        SparsePoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::constant(num_vars), c);
        p
    }

    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::var(num_vars, i), int(1));
        p
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(m.num_vars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(num_vars);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    context: "polynomial term",
                    expected: num_vars,
                    found: m.num_vars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * m` into the polynomial, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.num_vars(), self.num_vars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.num_vars);
        }
        SparsePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Largest total degree among the terms, `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// True when every term has total degree `k`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn homogeneous_component(&self, k: u32) -> SparsePoly {
        SparsePoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of total degree greater than `order`.
    pub fn truncate(&self, order: u32) -> SparsePoly {
        SparsePoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_trunc(&self, other: &SparsePoly, order: u32) -> SparsePoly {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = SparsePoly::zero(self.num_vars);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > order {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > order {
                    continue;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::constant(self.num_vars, int(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> SparsePoly {
        assert!(i < self.num_vars);
        let mut out = SparsePoly::zero(self.num_vars);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] = e - 1;
            out.add_term(Monomial::new(exps), c * int(e as i64));
        }
        out
    }

    /// The exact gradient, one component per variable.
    pub fn gradient(&self) -> Vec<SparsePoly> {
        (0..self.num_vars)
            .map(|i| self.partial_derivative(i))
            .collect()
    }

    /// Substitutes `x -> A x`, i.e. evaluates the pullback of the polynomial
    /// under the linear map with matrix `a`.
    pub fn substitute_linear(&self, a: &QMatrix) -> SparsePoly {
        assert_eq!(a.nrows(), self.num_vars);
        assert_eq!(a.ncols(), self.num_vars);
        let rows: Vec<SparsePoly> = (0..self.num_vars)
            .map(|i| {
                let mut p = SparsePoly::zero(self.num_vars);
                for j in 0..self.num_vars {
                    p.add_term(Monomial::var(self.num_vars, j), a.get(i, j).clone());
                }
                p
            })
            .collect();
        self.compose(&rows)
    }

    /// Full composition `P(s_1, ..., s_n)`; all substitutions must share a
    /// variable count.
    pub fn compose(&self, subs: &[SparsePoly]) -> SparsePoly {
        self.compose_impl(subs, None)
    }

    fn compose_impl(&self, subs: &[SparsePoly], order: Option<u32>) -> SparsePoly {
        assert_eq!(subs.len(), self.num_vars);
        let out_vars = subs.first().map_or(self.num_vars, |p| p.num_vars());
        // cache powers of each substitution as they are needed
        let mut powers: Vec<Vec<SparsePoly>> = subs
            .iter()
            .map(|p| vec![SparsePoly::constant(out_vars, int(1)), p.clone()])
            .collect();
        let mut out = SparsePoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut prod = SparsePoly::constant(out_vars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = match order {
                        Some(r) => powers[i].last().unwrap().mul_trunc(&subs[i], r),
                        None => powers[i].last().unwrap() * &subs[i],
                    };
                    powers[i].push(next);
                }
                prod = match order {
                    Some(r) => prod.mul_trunc(&powers[i][e as usize], r),
                    None => &prod * &powers[i][e as usize],
                };
                if prod.is_zero() {
                    break;
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// Coefficient vector of a homogeneous polynomial over the given degree
    /// basis; the polynomial must be zero or homogeneous of the basis degree.
    pub fn coeff_vector(&self, basis: &DegreeBasis) -> Result<Vec<Scalar>> {
        if self.num_vars != basis.num_vars() {
            return Err(Error::DimensionMismatch {
                context: "coefficient vector",
                expected: basis.num_vars(),
                found: self.num_vars,
            });
        }
        if !self.is_homogeneous(basis.degree()) {
            return Err(Error::NonHomogeneous {
                context: "coefficient vector",
                degree: basis.degree(),
            });
        }
        let mut v = vec![Scalar::zero(); basis.len()];
        for (m, c) in &self.terms {
            let pos = basis.position(m).expect("monomial outside basis");
            v[pos] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coeff_vector(basis: &DegreeBasis, v: &[Scalar]) -> SparsePoly {
        assert_eq!(v.len(), basis.len());
        let mut p = SparsePoly::zero(basis.num_vars());
        for (i, c) in v.iter().enumerate() {
            p.add_term(basis.monomial(i).clone(), c.clone());
        }
        p
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&int(-1))
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = SparsePoly::zero(self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{}", format_scalar(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", format_scalar(&abs), m)?;
            }
        }
        Ok(())
    }
}

/// Fischer (Bombieri) pairing of two homogeneous polynomials of the given
/// degree: `sum_alpha alpha! F_alpha G_alpha`. Symmetric, bilinear and
/// positive-definite; distinct monomials are orthogonal.
pub fn fischer_ip(f: &SparsePoly, g: &SparsePoly, degree: u32) -> Result<Scalar> {
    if f.num_vars != g.num_vars {
        return Err(Error::DimensionMismatch {
            context: "fischer pairing",
            expected: f.num_vars,
            found: g.num_vars,
        });
    }
    for p in [f, g] {
        if !p.is_homogeneous(degree) {
            return Err(Error::NonHomogeneous {
                context: "fischer pairing",
                degree,
            });
        }
    }
    let mut acc = Scalar::zero();
    for (m, cf) in &f.terms {
        if let Some(cg) = g.terms.get(m) {
            acc += BigRational::from_integer(m.factorial_weight()) * cf * cg;
        }
    }
    Ok(acc)
}

/// Polynomial truncated at a fixed order: every stored term has total degree
/// at most `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet {
    poly: SparsePoly,
    order: u32,
}

impl Jet {
    /// Wraps a polynomial, discarding all terms above `order`.
    pub fn new(poly: SparsePoly, order: u32) -> Self {
        Jet {
            poly: poly.truncate(order),
            order,
        }
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(|x|^{})", self.poly, self.order + 1)
    }
}

/// Composition `P(phi_1, ..., phi_n)` truncated at `order`.
pub fn compose_jet(p: &SparsePoly, phi: &[Jet], order: u32) -> Result<Jet> {
    if phi.len() != p.num_vars() {
        return Err(Error::DimensionMismatch {
            context: "jet composition",
            expected: p.num_vars(),
            found: phi.len(),
        });
    }
    if let Some(first) = phi.first() {
        for j in phi {
            if j.num_vars() != first.num_vars() {
                return Err(Error::DimensionMismatch {
                    context: "jet composition",
                    expected: first.num_vars(),
                    found: j.num_vars(),
                });
            }
        }
    }
    let subs: Vec<SparsePoly> = phi.iter().map(|j| j.poly.clone()).collect();
    Ok(Jet::new(p.compose_impl(&subs, Some(order)), order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use proptest::prelude::*;

    fn var(n: usize, i: usize) -> SparsePoly {
        SparsePoly::variable(n, i)
    }

    #[test]
    fn gradient_power_rule() {
        // x1^2 + x2^2 -> (2 x1, 2 x2)
        let p = &(&var(2, 0) * &var(2, 0)) + &(&var(2, 1) * &var(2, 1));
        let g = p.gradient();
        assert_eq!(g[0], var(2, 0).scale(&int(2)));
        assert_eq!(g[1], var(2, 1).scale(&int(2)));
    }

    #[test]
    fn gradient_of_coupling_hamiltonian() {
        // -lam (x1 x3 + x2 x4) -> -lam (x3, x4, x1, x2)
        let lam = frac(7, 3);
        let p = (&(&var(4, 0) * &var(4, 2)) + &(&var(4, 1) * &var(4, 3))).scale(&-lam.clone());
        let g = p.gradient();
        assert_eq!(g[0], var(4, 2).scale(&-lam.clone()));
        assert_eq!(g[1], var(4, 3).scale(&-lam.clone()));
        assert_eq!(g[2], var(4, 0).scale(&-lam.clone()));
        assert_eq!(g[3], var(4, 1).scale(&-lam));
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let p = SparsePoly::constant(2, int(5));
        assert!(p.gradient().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn compose_jet_identity_truncates() {
        let p = &var(2, 0) * &var(2, 1);
        let phi = vec![Jet::new(var(2, 0), 5), Jet::new(var(2, 1), 5)];
        let out = compose_jet(&p, &phi, 5).unwrap();
        assert_eq!(out.poly(), &p);
    }

    #[test]
    fn compose_jet_expands_and_drops_high_order() {
        // x1^2 at (x1 + x2^2, x2), order 3 -> x1^2 + 2 x1 x2^2
        let p = &var(2, 0) * &var(2, 0);
        let s1 = &var(2, 0) + &(&var(2, 1) * &var(2, 1));
        let phi = vec![Jet::new(s1, 3), Jet::new(var(2, 1), 3)];
        let out = compose_jet(&p, &phi, 3).unwrap();
        let mut expect = &var(2, 0) * &var(2, 0);
        expect.add_term(Monomial::new(vec![1, 2]), int(2));
        assert_eq!(out.poly(), &expect);
    }

    #[test]
    fn compose_jet_zero_substitution() {
        let p = var(2, 0);
        let phi = vec![
            Jet::new(SparsePoly::zero(2), 2),
            Jet::new(SparsePoly::zero(2), 2),
        ];
        assert!(compose_jet(&p, &phi, 2).unwrap().is_zero());
    }

    #[test]
    fn compose_jet_arity_mismatch() {
        let p = var(2, 0);
        let phi = vec![Jet::new(var(2, 0), 2)];
        assert!(compose_jet(&p, &phi, 2).is_err());
    }

    #[test]
    fn fischer_examples() {
        let x1sq = &var(2, 0) * &var(2, 0);
        let x1x2 = &var(2, 0) * &var(2, 1);
        assert_eq!(fischer_ip(&x1sq, &x1sq, 2).unwrap(), int(2));
        assert_eq!(fischer_ip(&x1x2, &x1sq, 2).unwrap(), int(0));
        assert_eq!(fischer_ip(&x1x2, &x1x2, 2).unwrap(), int(1));
        assert!(fischer_ip(&(&x1sq + &var(2, 0)), &x1sq, 2).is_err());
    }

    fn arb_poly(num_vars: usize, max_deg: u32) -> impl Strategy<Value = SparsePoly> {
        let term = (
            proptest::collection::vec(0..=max_deg, num_vars),
            -6i64..=6,
            1i64..=4,
        );
        proptest::collection::vec(term, 0..6).prop_map(move |ts| {
            let mut p = SparsePoly::zero(num_vars);
            for (exps, n, d) in ts {
                if exps.iter().sum::<u32>() <= max_deg {
                    p.add_term(Monomial::new(exps), frac(n, d));
                }
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn leibniz_rule(p in arb_poly(3, 3), q in arb_poly(3, 3)) {
            let prod = &p * &q;
            for i in 0..3 {
                let lhs = prod.partial_derivative(i);
                let rhs = &(&p.partial_derivative(i) * &q) + &(&p * &q.partial_derivative(i));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn fischer_symmetric_and_positive(p in arb_poly(2, 3), q in arb_poly(2, 3)) {
            let hp = p.homogeneous_component(3);
            let hq = q.homogeneous_component(3);
            let a = fischer_ip(&hp, &hq, 3).unwrap();
            let b = fischer_ip(&hq, &hp, 3).unwrap();
            prop_assert_eq!(&a, &b);
            let norm = fischer_ip(&hp, &hp, 3).unwrap();
            if hp.is_zero() {
                prop_assert!(norm.is_zero());
            } else {
                prop_assert!(norm > Scalar::zero());
            }
        }

        #[test]
        fn compose_with_identity_is_truncation(p in arb_poly(2, 5), order in 0u32..5) {
            let phi = vec![Jet::new(var(2, 0), order), Jet::new(var(2, 1), order)];
            let out = compose_jet(&p, &phi, order).unwrap();
            prop_assert_eq!(out.poly(), &p.truncate(order));
        }
    }
}
