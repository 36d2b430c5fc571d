//! Sparse linear combinations over [`ParamScalar`], and the normal-ordering
//! trait every algebra basis implements.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::{GaussianRational, ParamScalar};

/// A finite sum `Σ c_k · k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sparse<K: Ord> {
    terms: BTreeMap<K, ParamScalar>,
}

impl<K: Ord> Default for Sparse<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Sparse<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, ParamScalar::one())
    }

    pub fn term(key: K, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> ParamScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in &other.terms {
            if unit {
                self.add_term(k.clone(), v);
            } else {
                self.add_term(k.clone(), &(v * c));
            }
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_const(&self, c: &GaussianRational) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&ParamScalar) -> ParamScalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &f(v));
        }
        out
    }

    /// Linear extension of a basis map.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Sparse<L>) -> Sparse<L> {
        let mut out = Sparse::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<K, ParamScalar> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, ParamScalar)> for Sparse<K> {
    fn from_iter<I: IntoIterator<Item = (K, ParamScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, &v);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&Sparse<K>> for Sparse<K> {
    fn add_assign(&mut self, rhs: &Sparse<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Sparse<K>> for Sparse<K> {
    fn sub_assign(&mut self, rhs: &Sparse<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), &-v);
        }
    }
}

impl<K: Ord + Clone> Add for &Sparse<K> {
    type Output = Sparse<K>;
    fn add(self, rhs: Self) -> Sparse<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &Sparse<K> {
    type Output = Sparse<K>;
    fn sub(self, rhs: Self) -> Sparse<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &Sparse<K> {
    type Output = Sparse<K>;
    fn neg(self) -> Sparse<K> {
        self.map_coeffs(|c| -c)
    }
}

impl<K: Ord + Clone> Add for Sparse<K> {
    type Output = Sparse<K>;
    fn add(mut self, rhs: Self) -> Sparse<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Sparse<K> {
    type Output = Sparse<K>;
    fn sub(mut self, rhs: Self) -> Sparse<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for Sparse<K> {
    type Output = Sparse<K>;
    fn neg(self) -> Sparse<K> {
        -&self
    }
}

impl<K: Ord + Debug> Debug for Sparse<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// A monomial basis of an associative algebra with a normal-ordering rule.
pub trait NormalOrdered: Ord + Clone {
    fn unit() -> Self;

    /// Normal form of the product of two basis monomials.
    fn mul_basis(&self, rhs: &Self) -> Sparse<Self>;
}

impl<K: NormalOrdered> Sparse<K> {
    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    pub fn scalar(c: ParamScalar) -> Self {
        Self::term(K::unit(), c)
    }

    pub fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_scaled(&ka.mul_basis(kb), &(va * vb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.product(rhs) - &rhs.product(self)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_part(&self) -> ParamScalar {
        self.coeff(&K::unit())
    }
}

impl<K: NormalOrdered> Mul for &Sparse<K> {
    type Output = Sparse<K>;
    fn mul(self, rhs: Self) -> Sparse<K> {
        self.product(rhs)
    }
}

impl<K: NormalOrdered> Mul for Sparse<K> {
    type Output = Sparse<K>;
    fn mul(self, rhs: Self) -> Sparse<K> {
        self.product(&rhs)
    }
}

/// Tensor products multiply slot by slot.
impl<A: NormalOrdered, B: NormalOrdered> NormalOrdered for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }

    fn mul_basis(&self, rhs: &Self) -> Sparse<Self> {
        tensor(&self.0.mul_basis(&rhs.0), &self.1.mul_basis(&rhs.1))
    }
}

/// `a ⊗ b` for two linear combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &Sparse<A>, b: &Sparse<B>) -> Sparse<(A, B)> {
    let mut out = Sparse::zero();
    for (ka, va) in a.iter() {
        for (kb, vb) in b.iter() {
            out.add_term((ka.clone(), kb.clone()), &(va * vb));
        }
    }
    out
}

/// Applies `f ⊗ g` to a tensor element.
pub fn map_tensor<A, B, C, D>(
    t: &Sparse<(A, B)>,
    mut f: impl FnMut(&A) -> Sparse<C>,
    mut g: impl FnMut(&B) -> Sparse<D>,
) -> Sparse<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    let mut out = Sparse::zero();
    for ((a, b), v) in t.iter() {
        out.add_scaled(&tensor(&f(a), &g(b)), v);
    }
    out
}

/// The multiplication map `a ⊗ b ↦ a·b`.
pub fn multiply<K: NormalOrdered>(t: &Sparse<(K, K)>) -> Sparse<K> {
    let mut out = Sparse::zero();
    for ((a, b), v) in t.iter() {
        out.add_scaled(&a.mul_basis(b), v);
    }
    out
}
