//! The quantized enveloping algebra in PBW normal form.
//!
//! A basis monomial is `P1^a · P2^c · E^b · J^d` with `E = e^{zP2/2}`. `P1`,
//! `P2` and `E` commute, and `J` is moved to the right with the derivation
//! `D = [J, ·]` of the commutative subalgebra:
//!
//! ```text
//! D(P1)  = (i/2z)(E² - E⁻²)
//! D(P2)  = -i P1
//! D(E^b) = -i (bz/2) P1 E^b
//! ```
//!
//! so that `J^d · M = Σ_k C(d,k) D^k(M) J^(d-k)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalar::ParamScalar;
use crate::sparse::{NormalOrdered, Sparse};

/// PBW monomial `P1^a · P2^c · E^b · J^d`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct UMonomial {
    pub a: u32,
    pub c: u32,
    pub b: i32,
    pub d: u32,
}

impl UMonomial {
    pub const fn new(a: u32, c: u32, b: i32, d: u32) -> Self {
        Self { a, c, b, d }
    }
}

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("P1", self.a), ("P2", self.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if self.b != 0 {
            parts.push(format!("E({})", self.b));
        }
        match self.d {
            0 => {}
            1 => parts.push("J".into()),
            d => parts.push(format!("J^{d}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type UElement = Sparse<UMonomial>;
pub type UTensorElement = Sparse<(UMonomial, UMonomial)>;

fn um(a: u32, c: u32, b: i32, d: u32) -> UMonomial {
    UMonomial::new(a, c, b, d)
}

fn imag(num: i64, den: i64) -> ParamScalar {
    ParamScalar::imag(num, den)
}

thread_local! {
    static DERIVATION_CACHE: RefCell<HashMap<(UMonomial, u32), Rc<UElement>>> = RefCell::new(HashMap::new());
    static COPRODUCT_CACHE: RefCell<HashMap<UMonomial, Rc<UTensorElement>>> = RefCell::new(HashMap::new());
    static ANTIPODE_CACHE: RefCell<HashMap<UMonomial, Rc<UElement>>> = RefCell::new(HashMap::new());
}

/// `D = [J, ·]` on a `J`-free monomial.
fn derivation_once(mono: &UMonomial) -> UElement {
    debug_assert_eq!(mono.d, 0);
    let mut out = UElement::zero();
    let z = ParamScalar::z();
    let zinv = ParamScalar::z_pow(-1);
    if mono.a > 0 {
        let c = &imag(mono.a as i64, 2) * &zinv;
        out.add_term(um(mono.a - 1, mono.c, mono.b + 2, 0), &c);
        out.add_term(um(mono.a - 1, mono.c, mono.b - 2, 0), &-&c);
    }
    if mono.c > 0 {
        out.add_term(um(mono.a + 1, mono.c - 1, mono.b, 0), &imag(-(mono.c as i64), 1));
    }
    if mono.b != 0 {
        out.add_term(um(mono.a + 1, mono.c, mono.b, 0), &(&imag(-(mono.b as i64), 2) * &z));
    }
    out
}

/// `D^k` on a `J`-free monomial (cached).
fn derivation_pow(mono: &UMonomial, k: u32) -> Rc<UElement> {
    if let Some(hit) = DERIVATION_CACHE.with(|c| c.borrow().get(&(*mono, k)).cloned()) {
        return hit;
    }
    let out = if k == 0 {
        UElement::basis(*mono)
    } else {
        derivation_pow(mono, k - 1).map_linear(derivation_once)
    };
    let out = Rc::new(out);
    DERIVATION_CACHE.with(|c| c.borrow_mut().insert((*mono, k), out.clone()));
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

impl NormalOrdered for UMonomial {
    fn unit() -> Self {
        um(0, 0, 0, 0)
    }

    fn mul_basis(&self, rhs: &Self) -> UElement {
        let commuting = um(rhs.a, rhs.c, rhs.b, 0);
        let mut out = UElement::zero();
        for k in 0..=self.d {
            let c = ParamScalar::rational(BigRational::from_integer(binomial(self.d, k)));
            for (t, v) in derivation_pow(&commuting, k).iter() {
                let key = um(self.a + t.a, self.c + t.c, self.b + t.b, self.d - k + rhs.d);
                out.add_term(key, &(v * &c));
            }
        }
        out
    }
}

pub fn p1() -> UElement {
    UElement::basis(um(1, 0, 0, 0))
}

pub fn p2() -> UElement {
    UElement::basis(um(0, 1, 0, 0))
}

pub fn jgen() -> UElement {
    UElement::basis(um(0, 0, 0, 1))
}

/// `E^b = e^{(b/2) z P2}`.
pub fn e_pow(b: i32) -> UElement {
    UElement::basis(um(0, 0, b, 0))
}

pub fn u_normal_product(a: &UElement, b: &UElement) -> UElement {
    a.product(b)
}

fn u_tensor(a: &UElement, b: &UElement) -> UTensorElement {
    crate::sparse::tensor(a, b)
}

fn coproduct_basis(mono: &UMonomial) -> Rc<UTensorElement> {
    if let Some(hit) = COPRODUCT_CACHE.with(|c| c.borrow().get(mono).cloned()) {
        return hit;
    }
    let one = UElement::one();
    let out = if mono.d > 0 {
        let dj = &u_tensor(&e_pow(-1), &jgen()) + &u_tensor(&jgen(), &e_pow(1));
        coproduct_basis(&um(mono.a, mono.c, mono.b, mono.d - 1)).product(&dj)
    } else if mono.a > 0 {
        let dp1 = &u_tensor(&e_pow(-1), &p1()) + &u_tensor(&p1(), &e_pow(1));
        dp1.product(&coproduct_basis(&um(mono.a - 1, mono.c, mono.b, 0)))
    } else if mono.c > 0 {
        let dp2 = &u_tensor(&p2(), &one) + &u_tensor(&one, &p2());
        dp2.product(&coproduct_basis(&um(0, mono.c - 1, mono.b, 0)))
    } else {
        UTensorElement::basis((um(0, 0, mono.b, 0), um(0, 0, mono.b, 0)))
    };
    let out = Rc::new(out);
    COPRODUCT_CACHE.with(|c| c.borrow_mut().insert(*mono, out.clone()));
    out
}

pub fn u_coproduct(a: &UElement) -> UTensorElement {
    let mut out = UTensorElement::zero();
    for (mono, c) in a.iter() {
        out.add_scaled(&coproduct_basis(mono), c);
    }
    out
}

/// `S(J) = -J - (iz/2) P1`.
fn antipode_j() -> UElement {
    &(-&jgen()) - &p1().scale(&(&imag(1, 2) * &ParamScalar::z()))
}

fn antipode_basis(mono: &UMonomial) -> Rc<UElement> {
    if let Some(hit) = ANTIPODE_CACHE.with(|c| c.borrow().get(mono).cloned()) {
        return hit;
    }
    // S(P1^a P2^c E^b J^d) = S(J)^d · E^{-b} · (-P2)^c · (-P1)^a
    let out = if mono.d > 0 {
        antipode_j().product(&antipode_basis(&um(mono.a, mono.c, mono.b, mono.d - 1)))
    } else {
        let sign = if (mono.a + mono.c).is_multiple_of(2) { 1 } else { -1 };
        UElement::term(um(mono.a, mono.c, -mono.b, 0), ParamScalar::int(sign))
    };
    let out = Rc::new(out);
    ANTIPODE_CACHE.with(|c| c.borrow_mut().insert(*mono, out.clone()));
    out
}

pub fn u_antipode(a: &UElement) -> UElement {
    a.map_linear(|mono| (*antipode_basis(mono)).clone())
}

pub fn u_counit(a: &UElement) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for (mono, c) in a.iter() {
        if mono.a == 0 && mono.c == 0 && mono.d == 0 {
            out += c;
        }
    }
    out
}

/// `J* = J`, `P1* = P1`, `P2* = P2`, `E^b` fixed; antilinear and order reversing.
pub fn u_star(a: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (mono, c) in a.iter() {
        let reversed = jgen().pow(mono.d).product(&UElement::basis(um(mono.a, mono.c, mono.b, 0)));
        out.add_scaled(&reversed, &c.conj());
    }
    out
}

/// The elements with names in the workbench.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum NamedElement {
    Nu1,
    Nu2,
    Tau,
    X,
    Hplus,
    Hminus,
    Uplus,
    Uminus,
    HHplus,
    HHminus,
    Jscript,
    Casimir,
    CasimirTilde,
}

impl NamedElement {
    pub const ALL: [NamedElement; 13] = [
        NamedElement::Nu1,
        NamedElement::Nu2,
        NamedElement::Tau,
        NamedElement::X,
        NamedElement::Hplus,
        NamedElement::Hminus,
        NamedElement::Uplus,
        NamedElement::Uminus,
        NamedElement::HHplus,
        NamedElement::HHminus,
        NamedElement::Jscript,
        NamedElement::Casimir,
        NamedElement::CasimirTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedElement::Nu1 => "nu1",
            NamedElement::Nu2 => "nu2",
            NamedElement::Tau => "tau",
            NamedElement::X => "X",
            NamedElement::Hplus => "Hplus",
            NamedElement::Hminus => "Hminus",
            NamedElement::Uplus => "Uplus",
            NamedElement::Uminus => "Uminus",
            NamedElement::HHplus => "HHplus",
            NamedElement::HHminus => "HHminus",
            NamedElement::Jscript => "Jscript",
            NamedElement::Casimir => "Casimir",
            NamedElement::CasimirTilde => "CasimirTilde",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.name() == s)
    }
}

/// `X = J - i(z/4) P1`.
fn x_element() -> UElement {
    &jgen() - &p1().scale(&(&imag(1, 4) * &ParamScalar::z()))
}

pub fn named_element(n: NamedElement) -> UElement {
    let z = ParamScalar::z();
    let zinv = ParamScalar::z_pow(-1);
    let half_zinv = &ParamScalar::ratio(1, 2) * &zinv;
    match n {
        NamedElement::Nu1 => e_pow(-1).product(&p1()).scale(&imag(-1, 1)),
        NamedElement::Nu2 => p2().scale(&imag(-1, 1)),
        NamedElement::Tau => e_pow(-1).product(&x_element()).scale(&imag(-1, 1)),
        NamedElement::X => x_element(),
        NamedElement::Hplus => {
            &(&e_pow(2) - &UElement::one()).scale(&half_zinv) - &e_pow(1).product(&p1()).scale(&imag(1, 2))
        }
        NamedElement::Hminus => {
            &(&UElement::one() - &e_pow(-2)).scale(&half_zinv) + &e_pow(-1).product(&p1()).scale(&imag(1, 2))
        }
        NamedElement::Uplus => {
            let inner = &(&UElement::one() + &e_pow(-2)) - &e_pow(-1).product(&p1()).scale(&(&ParamScalar::i() * &z));
            inner.scale(&ParamScalar::ratio(1, 2))
        }
        NamedElement::Uminus => {
            let inner = &(&UElement::one() + &e_pow(2)) + &e_pow(1).product(&p1()).scale(&(&ParamScalar::i() * &z));
            inner.scale(&ParamScalar::ratio(1, 2))
        }
        NamedElement::HHplus => named_element(NamedElement::Uplus).product(&named_element(NamedElement::Hplus)),
        NamedElement::HHminus => named_element(NamedElement::Uminus).product(&named_element(NamedElement::Hminus)),
        NamedElement::Jscript => e_pow(-1).product(&x_element()),
        NamedElement::Casimir => {
            let zinv2 = ParamScalar::z_pow(-2);
            let sinh2 = &(&e_pow(2) - &UElement::one().scale(&ParamScalar::int(2))) + &e_pow(-2);
            &sinh2.scale(&zinv2) + &p1().pow(2)
        }
        NamedElement::CasimirTilde => {
            named_element(NamedElement::HHplus).product(&named_element(NamedElement::HHminus))
        }
    }
}

/// PBW monomials with `a + c + d ≤ max_deg` and `|b| ≤ max_b`.
pub fn pbw_window(max_deg: u32, max_b: i32) -> Vec<UMonomial> {
    let mut out = Vec::new();
    for a in 0..=max_deg {
        for c in 0..=max_deg - a {
            for d in 0..=max_deg - a - c {
                for b in -max_b..=max_b {
                    out.push(um(a, c, b, d));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::{multiply, tensor};

    fn z() -> ParamScalar {
        ParamScalar::z()
    }

    #[test]
    fn j_p1_reorders() {
        let got = jgen().product(&p1());
        let c = &imag(1, 2) * &ParamScalar::z_pow(-1);
        let want = &(&UElement::basis(um(1, 0, 0, 1)) + &e_pow(2).scale(&c)) - &e_pow(-2).scale(&c);
        assert_eq!(got, want);
    }

    #[test]
    fn j_e2_reorders() {
        let got = jgen().product(&e_pow(2));
        let want = &UElement::basis(um(0, 0, 2, 1)) - &UElement::basis(um(1, 0, 2, 0)).scale(&(&ParamScalar::i() * &z()));
        assert_eq!(got, want);
    }

    #[test]
    fn p1_p2_commute() {
        assert_eq!(p1().product(&p2()), p2().product(&p1()));
        assert_eq!(p1().product(&p2()), UElement::basis(um(1, 1, 0, 0)));
    }

    #[test]
    fn defining_relations() {
        let c = &imag(1, 2) * &ParamScalar::z_pow(-1);
        assert_eq!(jgen().commutator(&p1()), (&e_pow(2) - &e_pow(-2)).scale(&c));
        assert_eq!(jgen().commutator(&p2()), p1().scale(&imag(-1, 1)));
        assert!(p1().commutator(&p2()).is_zero());
        assert_eq!(e_pow(3).product(&e_pow(-1)), e_pow(2));
    }

    #[test]
    fn coproduct_examples() {
        let one = UElement::one();
        assert_eq!(u_coproduct(&p2()), &tensor(&p2(), &one) + &tensor(&one, &p2()));
        assert_eq!(u_coproduct(&p1()), &tensor(&e_pow(-1), &p1()) + &tensor(&p1(), &e_pow(1)));
        let hp = named_element(NamedElement::Hplus);
        assert_eq!(u_coproduct(&hp), &tensor(&one, &hp) + &tensor(&hp, &e_pow(2)));
        let hm = named_element(NamedElement::Hminus);
        assert_eq!(u_coproduct(&hm), &tensor(&e_pow(-2), &hm) + &tensor(&hm, &one));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(u_antipode(&p1()), -&p1());
        assert_eq!(u_antipode(&jgen()), antipode_j());
        assert_eq!(u_antipode(&e_pow(3)), e_pow(-3));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        for g in [p1(), p2(), jgen(), e_pow(1), e_pow(-2)] {
            let dg = u_coproduct(&g);
            let eps = UElement::scalar(u_counit(&g));
            let left = crate::sparse::map_tensor(&dg, |a| u_antipode(&UElement::basis(*a)), |b| UElement::basis(*b));
            let right = crate::sparse::map_tensor(&dg, |a| UElement::basis(*a), |b| u_antipode(&UElement::basis(*b)));
            assert_eq!(multiply(&left), eps);
            assert_eq!(multiply(&right), eps);
        }
    }

    #[test]
    fn counit_examples() {
        assert!(u_counit(&jgen()).is_zero());
        assert!(u_counit(&e_pow(4)).is_one());
        assert!(u_counit(&named_element(NamedElement::Casimir)).is_zero());
    }

    #[test]
    fn star_examples() {
        let zp1 = p1().scale(&z());
        assert_eq!(u_star(&zp1), zp1);
        let tau = named_element(NamedElement::Tau);
        let nu1 = named_element(NamedElement::Nu1);
        let want = &(-&tau) - &nu1.scale(&(&ParamScalar::i() * &z()));
        assert_eq!(u_star(&tau), want);
        assert_eq!(u_star(&jgen().product(&p1())), p1().product(&jgen()));
    }

    #[test]
    fn named_examples() {
        assert_eq!(named_element(NamedElement::X), x_element());
        let zinv2 = ParamScalar::z_pow(-2);
        let mut want = UElement::zero();
        want.add_term(um(0, 0, 2, 0), &zinv2);
        want.add_term(um(0, 0, 0, 0), &(&zinv2 * &ParamScalar::int(-2)));
        want.add_term(um(0, 0, -2, 0), &zinv2);
        want.add_term(um(2, 0, 0, 0), &ParamScalar::one());
        assert_eq!(named_element(NamedElement::Casimir), want);
        let mut up = UElement::zero();
        up.add_term(um(0, 0, 0, 0), &ParamScalar::ratio(1, 2));
        up.add_term(um(0, 0, -2, 0), &ParamScalar::ratio(1, 2));
        up.add_term(um(1, 0, -1, 0), &(&imag(-1, 2) * &z()));
        assert_eq!(named_element(NamedElement::Uplus), up);
    }

    #[test]
    fn casimir_factorises() {
        let hp = named_element(NamedElement::Hplus);
        let hm = named_element(NamedElement::Hminus);
        assert_eq!(hp.product(&hm).scale(&ParamScalar::int(4)), named_element(NamedElement::Casimir));
    }
}
