//! Monomials and the graded-lexicographic basis of each homogeneous degree.

use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::factorial;

/// Exponent vector of a monomial in `num_vars` variables.
///
/// Monomials are totally ordered by total degree first, then so that higher
/// powers of earlier variables come first within a degree. This makes the
/// enumeration of a degree deterministic: for two variables and degree 3 the
/// order is `x1^3 < x1^2*x2 < x1*x2^2 < x2^3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial (all exponents zero).
    pub fn constant(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The monomial `x_i` (zero-based index).
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree, the sum of the exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// The factorial weight `alpha! = prod_i alpha_i!` used by the Fischer pairing.
    pub fn factorial_weight(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.exps {
            acc *= factorial(e);
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of exact total degree `degree` in `num_vars` variables,
/// listed in increasing order. The length is `C(num_vars + degree - 1, degree)`.
pub fn monomial_basis(num_vars: usize, degree: u32) -> Vec<Monomial> {
    assert!(num_vars > 0, "need at least one variable");
    fn rec(num_vars: usize, degree: u32, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if num_vars == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(num_vars - 1, degree - e, out, prefix);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(num_vars, degree, &mut raw, &mut Vec::new());
    raw.into_iter().map(Monomial::new).collect()
}

/// Number of monomials of degree `degree` in `num_vars` variables (stars and bars).
pub fn basis_dimension(num_vars: usize, degree: u32) -> usize {
    // C(num_vars + degree - 1, degree)
    let n = num_vars as u128 + degree as u128 - 1;
    let k = degree as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

/// The ordered monomial basis of one homogeneous degree plus a position index.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let monomials = monomial_basis(num_vars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        DegreeBasis {
            num_vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constant_basis() {
        let b = monomial_basis(2, 0);
        assert_eq!(b, vec![Monomial::constant(2)]);
    }

    #[test]
    fn degree_three_in_two_vars() {
        let b = monomial_basis(2, 3);
        let expect: Vec<Monomial> = [[3, 0], [2, 1], [1, 2], [0, 3]]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect();
        assert_eq!(b, expect);
    }

    #[test]
    fn degree_two_in_four_vars_has_ten_elements() {
        assert_eq!(monomial_basis(4, 2).len(), 10);
        assert_eq!(basis_dimension(4, 2), 10);
    }

    proptest! {
        #[test]
        fn basis_count_matches_stars_and_bars(n in 1usize..6, k in 0u32..7) {
            let b = monomial_basis(n, k);
            prop_assert_eq!(b.len(), basis_dimension(n, k));
        }

        #[test]
        fn basis_is_strictly_increasing(n in 1usize..6, k in 0u32..7) {
            let b = monomial_basis(n, k);
            for w in b.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for m in &b {
                prop_assert_eq!(m.degree(), k);
            }
        }
    }

    #[test]
    fn factorial_weights() {
        assert_eq!(
            Monomial::new(vec![2, 0]).factorial_weight(),
            BigInt::from(2)
        );
        assert_eq!(
            Monomial::new(vec![1, 1]).factorial_weight(),
            BigInt::from(1)
        );
        assert_eq!(
            Monomial::new(vec![3, 2]).factorial_weight(),
            BigInt::from(12)
        );
    }
}
