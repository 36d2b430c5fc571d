//! The two canonical left actions of the enveloping algebra on functions:
//!
//! ```text
//! ℓ(Y)f = Σ f(1) <Y, f(2)>
//! λ(Y)f = Σ <S(Y), f(1)> f(2)
//! ```
//!
//! Both are evaluated generator by generator, right to left along each PBW
//! monomial, since `λ(YZ) = λ(Y)λ(Z)` and `ℓ(YZ) = ℓ(Y)ℓ(Z)`. Each generator
//! acts through the letter contractions of [`crate::pairing`]. The `_direct`
//! variants contract against the full coproduct of `f` instead and exist to
//! cross-check the factored evaluation.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::envalg::{e_pow, jgen, p1, p2, u_antipode, UElement, UMonomial};
use crate::funalg::{f_coproduct_basis, FElement, FMonomial};
use crate::pairing::{contract_left, contract_right, pair_basis, words, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Generator {
    P1,
    P2,
    J,
    Exp(i32),
}

impl Generator {
    fn element(self) -> UElement {
        match self {
            Generator::P1 => p1(),
            Generator::P2 => p2(),
            Generator::J => jgen(),
            Generator::Exp(b) => e_pow(b),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    Lambda,
    Ell,
}

thread_local! {
    static GENERATOR_CACHE: RefCell<HashMap<(Kind, Generator, FMonomial), Rc<FElement>>> = RefCell::new(HashMap::new());
}

/// Applies a letter word: for `λ` the letters act first-to-last, for `ℓ` last-to-first.
fn apply_word(kind: Kind, word: &[Letter], f: &FElement) -> FElement {
    let mut g = f.clone();
    match kind {
        Kind::Lambda => {
            for l in word {
                g = contract_left(*l, &g);
            }
        }
        Kind::Ell => {
            for l in word.iter().rev() {
                g = contract_right(*l, &g);
            }
        }
    }
    g
}

fn generator_on_basis(kind: Kind, gen: Generator, mono: &FMonomial) -> Rc<FElement> {
    if let Some(hit) = GENERATOR_CACHE.with(|c| c.borrow().get(&(kind, gen, *mono)).cloned()) {
        return hit;
    }
    let operator = match kind {
        Kind::Lambda => u_antipode(&gen.element()),
        Kind::Ell => gen.element(),
    };
    let f = FElement::basis(*mono);
    let mut out = FElement::zero();
    for (c, word) in words(&operator) {
        out.add_scaled(&apply_word(kind, &word, &f), &c);
    }
    let out = Rc::new(out);
    GENERATOR_CACHE.with(|c| c.borrow_mut().insert((kind, gen, *mono), out.clone()));
    out
}

fn generator_action(kind: Kind, gen: Generator, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        out.add_scaled(&generator_on_basis(kind, gen, mono), c);
    }
    out
}

fn monomial_action(kind: Kind, mono: &UMonomial, f: &FElement) -> FElement {
    let mut g = f.clone();
    for _ in 0..mono.d {
        g = generator_action(kind, Generator::J, &g);
    }
    if mono.b != 0 {
        g = generator_action(kind, Generator::Exp(mono.b), &g);
    }
    for _ in 0..mono.c {
        g = generator_action(kind, Generator::P2, &g);
    }
    for _ in 0..mono.a {
        g = generator_action(kind, Generator::P1, &g);
    }
    g
}

fn action(kind: Kind, u: &UElement, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in u.iter() {
        out.add_scaled(&monomial_action(kind, mono, f), c);
    }
    out
}

/// `λ(u) f`.
pub fn lambda_action(u: &UElement, f: &FElement) -> FElement {
    action(Kind::Lambda, u, f)
}

/// `ℓ(u) f`.
pub fn ell_action(u: &UElement, f: &FElement) -> FElement {
    action(Kind::Ell, u, f)
}

/// `λ(u) f = Σ <S(u), f(1)> f(2)` with the full coproduct of every monomial of `f`.
pub fn lambda_action_direct(u: &UElement, f: &FElement) -> FElement {
    let su = u_antipode(u);
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        for ((left, right), v) in f_coproduct_basis(mono).iter() {
            let mut p = crate::scalar::ParamScalar::zero();
            for (um, uc) in su.iter() {
                p += &(uc * &pair_basis(um, left));
            }
            if !p.is_zero() {
                out.add_term(*right, &(&(c * v) * &p));
            }
        }
    }
    out
}

/// `ℓ(u) f = Σ f(1) <u, f(2)>` with the full coproduct of every monomial of `f`.
pub fn ell_action_direct(u: &UElement, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        for ((left, right), v) in f_coproduct_basis(mono).iter() {
            let mut p = crate::scalar::ParamScalar::zero();
            for (um, uc) in u.iter() {
                p += &(uc * &pair_basis(um, right));
            }
            if !p.is_zero() {
                out.add_term(*left, &(&(c * v) * &p));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envalg::{named_element, NamedElement};
    use crate::funalg::{a1, a2, monomial_window, th};
    use crate::scalar::ParamScalar;

    fn fm(l: i64, m: u32, n: u32) -> FElement {
        FElement::basis(FMonomial::new(l, m, n))
    }

    #[test]
    fn lambda_p2_lowers_a2() {
        for mono in monomial_window(2, 4) {
            let got = lambda_action(&p2(), &FElement::basis(mono));
            let want = if mono.n == 0 {
                FElement::zero()
            } else {
                fm(mono.l, mono.m, mono.n - 1).scale(&ParamScalar::imag(-(mono.n as i64), 1))
            };
            assert_eq!(got, want, "{mono}");
        }
    }

    #[test]
    fn lambda_jscript_on_a1() {
        let jj = named_element(NamedElement::Jscript);
        assert_eq!(lambda_action(&jj, &a1()), a2().scale(&ParamScalar::i()));
        assert_eq!(lambda_action(&jj, &a2()), a1().scale(&-&ParamScalar::i()));
    }

    #[test]
    fn unit_actions() {
        let hp = named_element(NamedElement::Hplus);
        assert!(lambda_action(&hp, &FElement::one()).is_zero());
        assert_eq!(lambda_action(&e_pow(3), &FElement::one()), FElement::one());
        let f = fm(1, 2, 1);
        assert_eq!(ell_action(&UElement::one(), &f), f);
        assert_eq!(lambda_action(&UElement::one(), &f), f);
    }

    #[test]
    fn ell_tau_measures_l() {
        let tau = named_element(NamedElement::Tau);
        for mono in monomial_window(2, 3) {
            let f = FElement::basis(mono);
            let want = f.scale(&ParamScalar::imag(-mono.l, 1));
            assert_eq!(ell_action(&tau, &f), want, "{mono}");
        }
        assert!(ell_action(&named_element(NamedElement::X), &a1()).is_zero());
        assert!(!ell_action(&named_element(NamedElement::X), &th(1)).is_zero());
    }

    #[test]
    fn factored_matches_direct() {
        let gens = [p1(), p2(), jgen(), e_pow(1), e_pow(-2), named_element(NamedElement::Hplus)];
        for mono in monomial_window(1, 2) {
            let f = FElement::basis(mono);
            for g in &gens {
                assert_eq!(lambda_action(g, &f), lambda_action_direct(g, &f), "λ {g:?} on {mono}");
                assert_eq!(ell_action(g, &f), ell_action_direct(g, &f), "ℓ {g:?} on {mono}");
            }
        }
    }
}
