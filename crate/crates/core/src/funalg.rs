//! The Hopf *-algebra of functions on the deformed Euclidean group.
//!
//! Elements are written in the normal-ordered basis `Th(l)·a1^m·a2^n`, where
//! `Th(l) = e^{-ilθ}`. The defining relations are
//!
//! ```text
//! [Th(1), a1] = (z/2)(1 - Th(1))²
//! [Th(1), a2] = i(z/2)(Th(2) - 1)
//! [a1, a2]    = i z a1
//! ```
//!
//! and `cos θ`, `sin θ` are expanded as `(Th(-1)+Th(1))/2` and
//! `(i/2)(Th(1)-Th(-1))` so that coproduct and antipode stay inside the basis.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::scalar::ParamScalar;
use crate::sparse::{map_tensor, NormalOrdered, Sparse};

/// Basis monomial `Th(l)·a1^m·a2^n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FMonomial {
    pub l: i64,
    pub m: u32,
    pub n: u32,
}

impl FMonomial {
    pub const fn new(l: i64, m: u32, n: u32) -> Self {
        Self { l, m, n }
    }

    pub fn degree(&self) -> u32 {
        self.m + self.n
    }
}

impl fmt::Display for FMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.l != 0 {
            parts.push(format!("Th({})", self.l));
        }
        match self.m {
            0 => {}
            1 => parts.push("a1".into()),
            m => parts.push(format!("a1^{m}")),
        }
        match self.n {
            0 => {}
            1 => parts.push("a2".into()),
            n => parts.push(format!("a2^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type FElement = Sparse<FMonomial>;
pub type FTensorElement = Sparse<(FMonomial, FMonomial)>;

fn fm(l: i64, m: u32, n: u32) -> FMonomial {
    FMonomial::new(l, m, n)
}

fn half() -> ParamScalar {
    ParamScalar::ratio(1, 2)
}

fn i_half() -> ParamScalar {
    ParamScalar::imag(1, 2)
}

type Cache<K, V> = RefCell<HashMap<K, Rc<V>>>;

thread_local! {
    static SHIFT_CACHE: RefCell<HashMap<(u32, u32, i64), Rc<FElement>>> = RefCell::new(HashMap::new());
    static PRODUCT_CACHE: Cache<(u32, u32, i64, u32), FElement> = RefCell::new(HashMap::new());
    static COPRODUCT_CACHE: RefCell<HashMap<FMonomial, Rc<FTensorElement>>> = RefCell::new(HashMap::new());
    static ANTIPODE_CACHE: RefCell<HashMap<FMonomial, Rc<FElement>>> = RefCell::new(HashMap::new());
}

/// Appends `a2` on the right of every term (always normal-ordered).
fn append_a2(x: &FElement, k: u32) -> FElement {
    if k == 0 {
        return x.clone();
    }
    x.iter().map(|(mono, c)| (fm(mono.l, mono.m, mono.n + k), c.clone())).collect()
}

/// Right-multiplies by `a1^k` using `f(a2)·a1^k = a1^k·f(a2 - ikz)`.
fn append_a1(x: &FElement, k: u32) -> FElement {
    if k == 0 {
        return x.clone();
    }
    let shift = &ParamScalar::imag(-(k as i64), 1) * &ParamScalar::z();
    let mut out = FElement::zero();
    for (mono, c) in x.iter() {
        // (a2 + shift)^N expanded binomially
        let mut binom = num_bigint::BigInt::from(1);
        for j in (0..=mono.n).rev() {
            let e = mono.n - j;
            let coeff = &(c * &shift.pow(e)) * &ParamScalar::rational(num_rational::BigRational::from_integer(binom.clone()));
            out.add_term(fm(mono.l, mono.m + k, j), &coeff);
            binom = binom * (mono.n - e) / (e + 1);
        }
    }
    out
}

fn shift_l(x: &FElement, dl: i64) -> FElement {
    if dl == 0 {
        return x.clone();
    }
    x.iter().map(|(mono, c)| (fm(mono.l + dl, mono.m, mono.n), c.clone())).collect()
}

/// Normal form of `a1^m · a2^n · Th(l)`.
fn move_th_left(m: u32, n: u32, l: i64) -> Rc<FElement> {
    if let Some(hit) = SHIFT_CACHE.with(|c| c.borrow().get(&(m, n, l)).cloned()) {
        return hit;
    }
    let out = if l == 0 {
        FElement::basis(fm(0, m, n))
    } else if n > 0 {
        // a2·Th(l) = Th(l)·a2 - i(z/2)·l·(Th(l+1) - Th(l-1))
        let c = &ParamScalar::imag(-l, 2) * &ParamScalar::z();
        let mut out = append_a2(&move_th_left(m, n - 1, l), 1);
        out.add_scaled(&move_th_left(m, n - 1, l + 1), &c);
        out.add_scaled(&move_th_left(m, n - 1, l - 1), &-&c);
        out
    } else if m > 0 {
        // a1·Th(l) = Th(l)·a1 - (z/2)·l·(Th(l-1) - 2Th(l) + Th(l+1))
        let c = &ParamScalar::ratio(-l, 2) * &ParamScalar::z();
        let mut out = append_a1(&move_th_left(m - 1, 0, l), 1);
        out.add_scaled(&move_th_left(m - 1, 0, l - 1), &c);
        out.add_scaled(&move_th_left(m - 1, 0, l), &(&c * &ParamScalar::int(-2)));
        out.add_scaled(&move_th_left(m - 1, 0, l + 1), &c);
        out
    } else {
        FElement::basis(fm(l, 0, 0))
    };
    let out = Rc::new(out);
    SHIFT_CACHE.with(|c| c.borrow_mut().insert((m, n, l), out.clone()));
    out
}

impl NormalOrdered for FMonomial {
    fn unit() -> Self {
        fm(0, 0, 0)
    }

    fn mul_basis(&self, rhs: &Self) -> FElement {
        let key = (self.m, self.n, rhs.l, rhs.m);
        let core = match PRODUCT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
            Some(hit) => hit,
            None => {
                let v = Rc::new(append_a1(&move_th_left(self.m, self.n, rhs.l), rhs.m));
                PRODUCT_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
                v
            }
        };
        append_a2(&shift_l(&core, self.l), rhs.n)
    }
}

pub fn th(l: i64) -> FElement {
    FElement::basis(fm(l, 0, 0))
}

pub fn a1() -> FElement {
    FElement::basis(fm(0, 1, 0))
}

pub fn a2() -> FElement {
    FElement::basis(fm(0, 0, 1))
}

/// `cos θ = (Th(1) + Th(-1))/2`.
pub fn cos_theta() -> FElement {
    &th(1).scale(&half()) + &th(-1).scale(&half())
}

/// `sin θ = (i/2)(Th(1) - Th(-1))`.
pub fn sin_theta() -> FElement {
    (&th(1) - &th(-1)).scale(&i_half())
}

/// `x = a1 - i·a2`.
pub fn x() -> FElement {
    &a1() - &a2().scale(&ParamScalar::i())
}

/// `x̄ = a1 + i·a2`.
pub fn xbar() -> FElement {
    &a1() + &a2().scale(&ParamScalar::i())
}

pub fn f_normal_product(a: &FElement, b: &FElement) -> FElement {
    a.product(b)
}

fn f_tensor(a: &FElement, b: &FElement) -> FTensorElement {
    crate::sparse::tensor(a, b)
}

fn coproduct_a1() -> FTensorElement {
    &(&f_tensor(&cos_theta(), &a1()) - &f_tensor(&sin_theta(), &a2())) + &f_tensor(&a1(), &FElement::one())
}

fn coproduct_a2() -> FTensorElement {
    &(&f_tensor(&sin_theta(), &a1()) + &f_tensor(&cos_theta(), &a2())) + &f_tensor(&a2(), &FElement::one())
}

fn coproduct_basis(mono: &FMonomial) -> Rc<FTensorElement> {
    if let Some(hit) = COPRODUCT_CACHE.with(|c| c.borrow().get(mono).cloned()) {
        return hit;
    }
    let out = if mono.n > 0 {
        coproduct_basis(&fm(mono.l, mono.m, mono.n - 1)).product(&coproduct_a2())
    } else if mono.m > 0 {
        coproduct_basis(&fm(mono.l, mono.m - 1, 0)).product(&coproduct_a1())
    } else {
        FTensorElement::basis((fm(mono.l, 0, 0), fm(mono.l, 0, 0)))
    };
    let out = Rc::new(out);
    COPRODUCT_CACHE.with(|c| c.borrow_mut().insert(*mono, out.clone()));
    out
}

/// Coproduct of a single basis monomial (cached).
pub fn f_coproduct_basis(mono: &FMonomial) -> Rc<FTensorElement> {
    coproduct_basis(mono)
}

/// The coproduct, extended from the generators as an algebra map.
pub fn f_coproduct(a: &FElement) -> FTensorElement {
    let mut out = FTensorElement::zero();
    for (mono, c) in a.iter() {
        out.add_scaled(&coproduct_basis(mono), c);
    }
    out
}

fn antipode_a1() -> FElement {
    -&(&cos_theta().product(&a1()) + &sin_theta().product(&a2()))
}

fn antipode_a2() -> FElement {
    &sin_theta().product(&a1()) - &cos_theta().product(&a2())
}

fn antipode_basis(mono: &FMonomial) -> Rc<FElement> {
    if let Some(hit) = ANTIPODE_CACHE.with(|c| c.borrow().get(mono).cloned()) {
        return hit;
    }
    // S reverses products: S(Th(l)·a1^m·a2^n) = S(a2)^n · S(a1)^m · Th(-l)
    let out = if mono.n > 0 {
        antipode_a2().product(&antipode_basis(&fm(mono.l, mono.m, mono.n - 1)))
    } else if mono.m > 0 {
        antipode_a1().product(&antipode_basis(&fm(mono.l, mono.m - 1, 0)))
    } else {
        th(-mono.l)
    };
    let out = Rc::new(out);
    ANTIPODE_CACHE.with(|c| c.borrow_mut().insert(*mono, out.clone()));
    out
}

pub fn f_antipode(a: &FElement) -> FElement {
    a.map_linear(|mono| (*antipode_basis(mono)).clone())
}

/// `ε(Th(l)) = 1`, `ε(a1) = ε(a2) = 0`.
pub fn f_counit_basis(mono: &FMonomial) -> ParamScalar {
    if mono.m == 0 && mono.n == 0 {
        ParamScalar::one()
    } else {
        ParamScalar::zero()
    }
}

pub fn f_counit(a: &FElement) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for (mono, c) in a.iter() {
        if mono.m == 0 && mono.n == 0 {
            out += c;
        }
    }
    out
}

/// The involution `a1* = a1`, `a2* = a2`, `Th(l)* = Th(-l)`; antilinear and order reversing.
pub fn f_star(a: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in a.iter() {
        let reversed = FElement::basis(fm(0, 0, mono.n))
            .product(&FElement::basis(fm(0, mono.m, 0)))
            .product(&th(-mono.l));
        out.add_scaled(&reversed, &c.conj());
    }
    out
}

pub fn f_tensor_star(t: &FTensorElement) -> FTensorElement {
    let mut out = FTensorElement::zero();
    for ((a, b), c) in t.iter() {
        let sa = f_star(&FElement::basis(*a));
        let sb = f_star(&FElement::basis(*b));
        out.add_scaled(&f_tensor(&sa, &sb), &c.conj());
    }
    out
}

/// `(Δ ⊗ id)` applied to a tensor.
pub fn coproduct_left(t: &FTensorElement) -> Sparse<((FMonomial, FMonomial), FMonomial)> {
    let mut out = Sparse::zero();
    for ((a, b), c) in t.iter() {
        for ((a1, a2), c2) in coproduct_basis(a).iter() {
            out.add_term(((*a1, *a2), *b), &(c * c2));
        }
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor, re-associated to match [`coproduct_left`].
pub fn coproduct_right(t: &FTensorElement) -> Sparse<((FMonomial, FMonomial), FMonomial)> {
    let mut out = Sparse::zero();
    for ((a, b), c) in t.iter() {
        for ((b1, b2), c2) in coproduct_basis(b).iter() {
            out.add_term(((*a, *b1), *b2), &(c * c2));
        }
    }
    out
}

/// `(S ⊗ id)` or `(id ⊗ S)` on a tensor, selected by `left`.
pub fn antipode_slot(t: &FTensorElement, left: bool) -> FTensorElement {
    if left {
        map_tensor(t, |a| f_antipode(&FElement::basis(*a)), |b| FElement::basis(*b))
    } else {
        map_tensor(t, |a| FElement::basis(*a), |b| f_antipode(&FElement::basis(*b)))
    }
}

/// All monomials `Th(l)·a1^m·a2^n` with `|l| ≤ max_l` and `m + n ≤ max_deg`.
pub fn monomial_window(max_l: i64, max_deg: u32) -> Vec<FMonomial> {
    let mut out = Vec::new();
    for l in -max_l..=max_l {
        for d in 0..=max_deg {
            for m in 0..=d {
                out.push(fm(l, m, d - m));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::multiply;

    fn z() -> ParamScalar {
        ParamScalar::z()
    }

    fn iz() -> ParamScalar {
        &ParamScalar::i() * &z()
    }

    #[test]
    fn a2_a1_reorders() {
        let got = a2().product(&a1());
        let want = &FElement::basis(fm(0, 1, 1)) - &a1().scale(&iz());
        assert_eq!(got, want);
    }

    #[test]
    fn unit_is_neutral() {
        let m = FElement::basis(fm(2, 1, 1));
        assert_eq!(FElement::one().product(&m), m);
        assert_eq!(m.product(&FElement::one()), m);
    }

    #[test]
    fn a1_th1_reorders() {
        let got = a1().product(&th(1));
        let zh = &z() * &half();
        let mut want = FElement::basis(fm(1, 1, 0));
        want.add_term(fm(0, 0, 0), &-&zh);
        want.add_term(fm(1, 0, 0), &z());
        want.add_term(fm(2, 0, 0), &-&zh);
        assert_eq!(got, want);
    }

    #[test]
    fn defining_relations_hold() {
        let one = FElement::one();
        let t = th(1);
        let lhs = t.commutator(&a1());
        let rhs = (&one - &t).pow(2).scale(&(&z() * &half()));
        assert_eq!(lhs, rhs);

        let lhs = t.commutator(&a2());
        let rhs = (&th(2) - &one).scale(&(&iz() * &half()));
        assert_eq!(lhs, rhs);

        assert_eq!(a1().commutator(&a2()), a1().scale(&iz()));
        assert_eq!(th(1).product(&th(-1)), one);
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(f_coproduct(&th(3)), FTensorElement::basis((fm(3, 0, 0), fm(3, 0, 0))));
        assert_eq!(f_coproduct(&FElement::one()), FTensorElement::one());
        let want = &(&f_tensor(&cos_theta(), &a1()) - &f_tensor(&sin_theta(), &a2())) + &f_tensor(&a1(), &FElement::one());
        assert_eq!(f_coproduct(&a1()), want);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(f_antipode(&th(1)), th(-1));
        assert_eq!(f_antipode(&FElement::one()), FElement::one());
        let want = &(&th(1) + &th(-1)).product(&a1()).scale(&-&half())
            - &(&th(1) - &th(-1)).product(&a2()).scale(&i_half());
        assert_eq!(f_antipode(&a1()), want);
    }

    #[test]
    fn counit_examples() {
        assert!(f_counit(&th(5)).is_one());
        assert!(f_counit(&a1()).is_zero());
        assert!(f_counit(&FElement::basis(fm(2, 1, 1))).is_zero());
    }

    #[test]
    fn star_examples() {
        assert_eq!(f_star(&th(1)), th(-1));
        let a1a2 = FElement::basis(fm(0, 1, 1));
        assert_eq!(f_star(&a1a2), &a1a2 - &a1().scale(&iz()));
        let got = f_star(&FElement::basis(fm(1, 1, 0)));
        let mut want = FElement::basis(fm(-1, 1, 0));
        let zh = &z() * &half();
        want.add_term(fm(-2, 0, 0), &zh);
        want.add_term(fm(-1, 0, 0), &-&z());
        want.add_term(fm(0, 0, 0), &zh);
        assert_eq!(got, want);
        assert_eq!(f_star(&a1().scale(&ParamScalar::i())), a1().scale(&-&ParamScalar::i()));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        for g in [a1(), a2(), th(1), th(-2)] {
            let eps = FElement::scalar(f_counit(&g));
            assert_eq!(multiply(&antipode_slot(&f_coproduct(&g), true)), eps);
            assert_eq!(multiply(&antipode_slot(&f_coproduct(&g), false)), eps);
        }
    }

    #[test]
    fn window_size() {
        assert_eq!(monomial_window(2, 3).len(), 5 * 10);
    }
}
