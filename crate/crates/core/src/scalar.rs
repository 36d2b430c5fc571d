//! The coefficient ring shared by every algebra in the crate.
//!
//! A [`ParamScalar`] is a Laurent polynomial in `z` and an ordinary polynomial
//! in the spectral parameters `h+`, `h-` and `k`, with Gaussian-rational
//! coefficients. Terms are kept sorted by exponent key and zero coefficients
//! are pruned eagerly, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `(num/den)·i`.
    pub fn imag(num: i64, den: i64) -> Self {
        Self::new(BigRational::zero(), BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -&self.im / &norm))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical `p/q` text used by the JSON schema (`"1"`, `"-3/4"`).
pub fn rational_text(r: &BigRational) -> String {
    fmt_rational(r)
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}*i", fmt_rational(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// Exponent key of a scalar monomial `z^z · h+^hp · h-^hm · k^k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ScalarKey {
    pub z: i32,
    pub hp: u32,
    pub hm: u32,
    pub k: u32,
}

impl ScalarKey {
    pub const ONE: ScalarKey = ScalarKey { z: 0, hp: 0, hm: 0, k: 0 };

    pub fn z(e: i32) -> Self {
        Self { z: e, ..Self::ONE }
    }

    fn mul(self, o: Self) -> Self {
        Self { z: self.z + o.z, hp: self.hp + o.hp, hm: self.hm + o.hm, k: self.k + o.k }
    }
}

/// Element of `Q(i)[z, 1/z, h+, h-, k]` in canonical sparse form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar {
    terms: BTreeMap<ScalarKey, GaussianRational>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(ScalarKey::ONE, c)
    }

    pub fn monomial(key: ScalarKey, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        Self { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(num, den))
    }

    pub fn rational(r: BigRational) -> Self {
        Self::constant(GaussianRational::from_rational(r))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    /// `(num/den)·i`.
    pub fn imag(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::imag(num, den))
    }

    /// `z^e`, any integer `e`.
    pub fn z_pow(e: i32) -> Self {
        Self::monomial(ScalarKey::z(e), GaussianRational::one())
    }

    pub fn z() -> Self {
        Self::z_pow(1)
    }

    pub fn hp() -> Self {
        Self::monomial(ScalarKey { hp: 1, ..ScalarKey::ONE }, GaussianRational::one())
    }

    pub fn hm() -> Self {
        Self::monomial(ScalarKey { hm: 1, ..ScalarKey::ONE }, GaussianRational::one())
    }

    pub fn k() -> Self {
        Self::monomial(ScalarKey { k: 1, ..ScalarKey::ONE }, GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&ScalarKey::ONE).is_some_and(GaussianRational::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ScalarKey, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant (all exponents zero) Gaussian rational, if the scalar is one.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&ScalarKey::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, key: ScalarKey, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation: `i ↦ -i`, the symbols `z, h+, h-, k` are real.
    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect() }
    }

    /// Sets `z = 0`. Fails when a negative power of `z` is present.
    pub fn eval_z0(&self) -> Result<Self> {
        if let Some((key, _)) = self.terms.iter().find(|(k, _)| k.z < 0) {
            return Err(Error::PoleAtZero { z_exp: key.z });
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.z == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        })
    }

    /// Smallest power of `z` occurring, `None` for zero.
    pub fn min_z(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.z).min()
    }

    /// Applies `h+ ↦ a·h+`, `h- ↦ b·h-`, `k ↦ c·k` for constants `a, b, c`.
    pub fn rescale_symbols(&self, a: &GaussianRational, b: &GaussianRational, c: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (key, v) in &self.terms {
            let f = &(&a.pow(key.hp) * &b.pow(key.hm)) * &c.pow(key.k);
            out.add_term(*key, &(v * &f));
        }
        out
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<GaussianRational> for ParamScalar {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: Self) -> ParamScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &ParamScalar) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v);
        }
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, rhs: &ParamScalar) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, &-v);
        }
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: Self) -> ParamScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: Self) -> ParamScalar {
        if self.terms.len() == 1 {
            let (k, v) = self.terms.iter().next().unwrap();
            if *k == ScalarKey::ONE {
                return rhs.scale(v);
            }
        }
        let mut out = ParamScalar::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_term(ka.mul(*kb), &(va * vb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(ParamScalar, Add add, Sub sub, Mul mul);
forward_owned!(GaussianRational, Add add, Sub sub, Mul mul);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn fmt_symbol(out: &mut Vec<String>, name: &str, e: i64) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

impl fmt::Display for ParamScalar {
    /// Prints in the workbench expression grammar, e.g. `(1/2)*z^-1*h+ + i*k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in &self.terms {
            let mut factors = Vec::new();
            fmt_symbol(&mut factors, "z", key.z as i64);
            fmt_symbol(&mut factors, "h+", key.hp as i64);
            fmt_symbol(&mut factors, "h-", key.hm as i64);
            fmt_symbol(&mut factors, "k", key.k as i64);
            // Pull a plain negative sign out of real or purely imaginary coefficients.
            let negative = (c.im.is_zero() && c.re.is_negative())
                || (c.re.is_zero() && c.im.is_negative());
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if mag.is_one() && !factors.is_empty() {
                None
            } else if !mag.im.is_zero() && !mag.re.is_zero() {
                Some(format!("({mag})"))
            } else if mag.re.is_integer() && mag.im.is_zero() || mag.im.is_one() && mag.re.is_zero() {
                Some(mag.to_string())
            } else {
                Some(format!("({mag})"))
            };
            let mut parts: Vec<String> = coeff.into_iter().collect();
            parts.extend(factors);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `n!` as a big rational.
pub fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= j;
    }
    BigRational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ParamScalar {
        ParamScalar::int(n)
    }

    #[test]
    fn arith_examples() {
        let a = &ParamScalar::i() * &ParamScalar::z();
        let b = &(-&ParamScalar::i()) * &ParamScalar::z_pow(-1);
        assert!((&a * &b).is_one());

        let half_z2 = &ParamScalar::ratio(1, 2) * &ParamScalar::z_pow(2);
        assert_eq!(&half_z2 + &half_z2, ParamScalar::z_pow(2));

        let lhs = &(-&(&ParamScalar::k() * &ParamScalar::z())) * &(&ParamScalar::k() * &ParamScalar::z_pow(2));
        let rhs = -&(&ParamScalar::k().pow(2) * &ParamScalar::z_pow(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = &ParamScalar::hp() - &ParamScalar::hp();
        assert!(a.is_zero());
        assert_eq!(a, ParamScalar::zero());
    }

    #[test]
    fn conjugation_examples() {
        let iz = &ParamScalar::i() * &ParamScalar::z();
        assert_eq!(iz.conj(), -&iz);
        assert_eq!(ParamScalar::ratio(2, 3).conj(), ParamScalar::ratio(2, 3));
        let one_plus_i = &s(1) + &ParamScalar::i();
        let one_minus_i = &s(1) - &ParamScalar::i();
        assert_eq!((&one_plus_i * &ParamScalar::k()).conj(), &one_minus_i * &ParamScalar::k());
    }

    #[test]
    fn eval_z0_examples() {
        let a = &ParamScalar::z_pow(2) + &s(3);
        assert_eq!(a.eval_z0().unwrap(), s(3));
        assert!(matches!(ParamScalar::z_pow(-1).eval_z0(), Err(Error::PoleAtZero { z_exp: -1 })));
        let b = &(&ParamScalar::z_pow(2) * &ParamScalar::hp()) + &ParamScalar::hm();
        assert_eq!(b.eval_z0().unwrap(), ParamScalar::hm());
    }

    #[test]
    fn display_is_readable() {
        let a = &(&ParamScalar::ratio(1, 2) * &ParamScalar::z_pow(-1)) - &ParamScalar::i();
        assert_eq!(a.to_string(), "(1/2)*z^-1 - i");
        assert_eq!(ParamScalar::zero().to_string(), "0");
    }

    #[test]
    fn gaussian_inverse() {
        let a = GaussianRational::new(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(GaussianRational::zero().inv().is_none());
    }
}
