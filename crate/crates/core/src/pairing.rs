//! The duality pairing between the enveloping algebra and the function algebra.
//!
//! Pairings are stored for four kinds of "letters": `ν1`, `ν2`, `τ` and the
//! group-likes `E^b`. On the basis `Th(l)·a1^m·a2^n` they read
//!
//! ```text
//! <ν1, ·>  = δ_{m1} δ_{n0}
//! <ν2, ·>  = δ_{m0} δ_{n1}
//! <τ, ·>   = -i l δ_{m0} δ_{n0}
//! <E^b, ·> = δ_{m0} (ibz/2)^n
//! ```
//!
//! and `P1 = iEν1`, `P2 = iν2`, `J = iEτ - (z/4)Eν1` translate PBW monomials
//! into letter words. Words pair through iterated coproducts of `F`.
//!
//! Two evaluation routes exist for the contractions
//! `L(u)f = Σ <u, f(1)> f(2)` and `R(u)f = Σ f(1) <u, f(2)>`:
//! the direct route expands the full coproduct of every monomial, and the
//! factored route uses `L(u)(fg) = Σ L(u(1))f · L(u(2))g` with the letter
//! coproducts, seeded by direct contractions of the generators.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;


use crate::envalg::{UElement, UMonomial};
use crate::funalg::{f_coproduct_basis, f_counit, FElement, FMonomial};
use crate::scalar::ParamScalar;
use crate::sparse::NormalOrdered;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    Nu1,
    Nu2,
    Tau,
    /// `E^b`
    Exp(i32),
}

/// A word of letters with a scalar coefficient.
pub type Word = (ParamScalar, Vec<Letter>);

impl Letter {
    pub fn counit(self) -> ParamScalar {
        match self {
            Letter::Exp(_) => ParamScalar::one(),
            _ => ParamScalar::zero(),
        }
    }

    /// `Δ(letter)` as `(left, right)` pairs; `None` is the unit.
    pub fn coproduct(self) -> Vec<(Option<Letter>, Option<Letter>)> {
        match self {
            Letter::Nu1 => vec![(Some(Letter::Exp(-2)), Some(Letter::Nu1)), (Some(Letter::Nu1), None)],
            Letter::Nu2 => vec![(Some(Letter::Nu2), None), (None, Some(Letter::Nu2))],
            Letter::Tau => vec![(Some(Letter::Exp(-2)), Some(Letter::Tau)), (Some(Letter::Tau), None)],
            Letter::Exp(b) => vec![(Some(Letter::Exp(b)), Some(Letter::Exp(b)))],
        }
    }

    /// The letter as a PBW element.
    pub fn to_u(self) -> UElement {
        use crate::envalg::{named_element, NamedElement};
        match self {
            Letter::Nu1 => named_element(NamedElement::Nu1),
            Letter::Nu2 => named_element(NamedElement::Nu2),
            Letter::Tau => named_element(NamedElement::Tau),
            Letter::Exp(b) => crate::envalg::e_pow(b),
        }
    }
}

/// `<letter, Th(l)·a1^m·a2^n>`.
pub fn pair_letter_basis(letter: Letter, mono: &FMonomial) -> ParamScalar {
    match letter {
        Letter::Nu1 => {
            if mono.m == 1 && mono.n == 0 {
                ParamScalar::one()
            } else {
                ParamScalar::zero()
            }
        }
        Letter::Nu2 => {
            if mono.m == 0 && mono.n == 1 {
                ParamScalar::one()
            } else {
                ParamScalar::zero()
            }
        }
        Letter::Tau => {
            if mono.m == 0 && mono.n == 0 {
                ParamScalar::imag(-mono.l, 1)
            } else {
                ParamScalar::zero()
            }
        }
        Letter::Exp(b) => {
            if mono.m == 0 {
                let c = ParamScalar::imag(b as i64, 2);
                (&c * &ParamScalar::z()).pow(mono.n)
            } else {
                ParamScalar::zero()
            }
        }
    }
}

fn i_scalar() -> ParamScalar {
    ParamScalar::i()
}

/// Letter-word expansion of a PBW element.
pub fn words(u: &UElement) -> Vec<Word> {
    let p1: Vec<Word> = vec![(i_scalar(), vec![Letter::Exp(1), Letter::Nu1])];
    let p2: Vec<Word> = vec![(i_scalar(), vec![Letter::Nu2])];
    let j: Vec<Word> = vec![
        (i_scalar(), vec![Letter::Exp(1), Letter::Tau]),
        (&ParamScalar::ratio(-1, 4) * &ParamScalar::z(), vec![Letter::Exp(1), Letter::Nu1]),
    ];
    let mut out = Vec::new();
    for (mono, c) in u.iter() {
        let mut acc: Vec<Word> = vec![(c.clone(), Vec::new())];
        let push = |acc: &mut Vec<Word>, factor: &[Word]| {
            let mut next = Vec::with_capacity(acc.len() * factor.len());
            for (ca, wa) in acc.iter() {
                for (cb, wb) in factor {
                    let mut w = wa.clone();
                    w.extend_from_slice(wb);
                    next.push((ca * cb, w));
                }
            }
            *acc = next;
        };
        for _ in 0..mono.a {
            push(&mut acc, &p1);
        }
        for _ in 0..mono.c {
            push(&mut acc, &p2);
        }
        if mono.b != 0 {
            push(&mut acc, &[(ParamScalar::one(), vec![Letter::Exp(mono.b)])]);
        }
        for _ in 0..mono.d {
            push(&mut acc, &j);
        }
        out.extend(acc);
    }
    out
}

/// Direct route: `Σ <letter, f(1)> f(2)` from the full coproduct.
pub fn contract_left_direct(letter: Letter, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        for ((left, right), v) in f_coproduct_basis(mono).iter() {
            let p = pair_letter_basis(letter, left);
            if !p.is_zero() {
                out.add_term(*right, &(&(c * v) * &p));
            }
        }
    }
    out
}

/// Direct route: `Σ f(1) <letter, f(2)>` from the full coproduct.
pub fn contract_right_direct(letter: Letter, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        for ((left, right), v) in f_coproduct_basis(mono).iter() {
            let p = pair_letter_basis(letter, right);
            if !p.is_zero() {
                out.add_term(*left, &(&(c * v) * &p));
            }
        }
    }
    out
}

/// `<u, f>` computed from the base table through iterated coproducts.
pub fn u_f_pairing(u: &UElement, f: &FElement) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for (c, word) in words(u) {
        let mut g = f.clone();
        for letter in &word {
            if g.is_zero() {
                break;
            }
            g = contract_left_direct(*letter, &g);
        }
        out += &(&c * &f_counit(&g));
    }
    out
}

/// `<u, Th(l)·a1^m·a2^n>` for a single PBW monomial and basis monomial.
pub fn pair_basis(u: &UMonomial, f: &FMonomial) -> ParamScalar {
    u_f_pairing(&UElement::basis(*u), &FElement::basis(*f))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Side {
    Left,
    Right,
}

thread_local! {
    static CONTRACT_CACHE: RefCell<HashMap<(Side, Letter, FMonomial), Rc<FElement>>> = RefCell::new(HashMap::new());
}

fn contract_factored_basis(side: Side, letter: Letter, mono: &FMonomial) -> Rc<FElement> {
    if let Some(hit) = CONTRACT_CACHE.with(|c| c.borrow().get(&(side, letter, *mono)).cloned()) {
        return hit;
    }
    let generator = |g: FMonomial| match side {
        Side::Left => contract_left_direct(letter, &FElement::basis(g)),
        Side::Right => contract_right_direct(letter, &FElement::basis(g)),
    };
    // Peel the right-most generator: mono = prefix · g.
    let split = if mono.n > 0 {
        Some((FMonomial::new(mono.l, mono.m, mono.n - 1), FMonomial::new(0, 0, 1)))
    } else if mono.m > 0 {
        Some((FMonomial::new(mono.l, mono.m - 1, 0), FMonomial::new(0, 1, 0)))
    } else if mono.l > 0 {
        Some((FMonomial::new(mono.l - 1, 0, 0), FMonomial::new(1, 0, 0)))
    } else if mono.l < 0 {
        Some((FMonomial::new(mono.l + 1, 0, 0), FMonomial::new(-1, 0, 0)))
    } else {
        None
    };
    let out = match split {
        None => FElement::scalar(letter.counit()),
        Some((prefix, g)) if prefix == FMonomial::unit() => generator(g),
        Some((prefix, g)) => {
            let mut out = FElement::zero();
            let prefix_el = FElement::basis(prefix);
            let g_el = FElement::basis(g);
            for (u1, u2) in letter.coproduct() {
                let lhs = match u1 {
                    Some(l) => (*contract_factored_basis(side, l, &prefix)).clone(),
                    None => prefix_el.clone(),
                };
                if lhs.is_zero() {
                    continue;
                }
                let rhs = match u2 {
                    Some(l) => (*contract_factored_basis(side, l, &g)).clone(),
                    None => g_el.clone(),
                };
                out += &lhs.product(&rhs);
            }
            out
        }
    };
    let out = Rc::new(out);
    CONTRACT_CACHE.with(|c| c.borrow_mut().insert((side, letter, *mono), out.clone()));
    out
}

fn contract_factored(side: Side, letter: Letter, f: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in f.iter() {
        out.add_scaled(&contract_factored_basis(side, letter, mono), c);
    }
    out
}

/// Factored route for `Σ <letter, f(1)> f(2)`.
pub fn contract_left(letter: Letter, f: &FElement) -> FElement {
    contract_factored(Side::Left, letter, f)
}

/// Factored route for `Σ f(1) <letter, f(2)>`.
pub fn contract_right(letter: Letter, f: &FElement) -> FElement {
    contract_factored(Side::Right, letter, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envalg::{e_pow, named_element, NamedElement};
    use crate::funalg::{a1, a2, monomial_window, th};

    #[test]
    fn base_pairings() {
        let nu1 = named_element(NamedElement::Nu1);
        assert!(u_f_pairing(&nu1, &a1()).is_one());
        assert!(u_f_pairing(&nu1, &a2()).is_zero());
        let tau = named_element(NamedElement::Tau);
        for l in -3..=3 {
            let want = ParamScalar::imag(-l, 1);
            assert_eq!(u_f_pairing(&tau, &th(l)), want);
        }
        let iz = &ParamScalar::i() * &ParamScalar::z();
        assert_eq!(u_f_pairing(&e_pow(2), &a2()), iz);
    }

    #[test]
    fn unit_pairs_as_counit() {
        for mono in monomial_window(1, 2) {
            let f = FElement::basis(mono);
            assert_eq!(u_f_pairing(&UElement::one(), &f), f_counit(&f));
        }
    }

    #[test]
    fn letter_words_reassemble() {
        // Σ c · (product of letters) must reproduce the PBW element.
        let u = crate::envalg::jgen().product(&crate::envalg::p1());
        let mut back = UElement::zero();
        for (c, w) in words(&u) {
            let mut acc = UElement::one();
            for l in w {
                acc = acc.product(&l.to_u());
            }
            back.add_scaled(&acc, &c);
        }
        assert_eq!(back, u);
    }

    #[test]
    fn letter_coproducts_match_envalg() {
        use crate::sparse::tensor;
        for letter in [Letter::Nu1, Letter::Nu2, Letter::Tau, Letter::Exp(3)] {
            let mut want = crate::envalg::UTensorElement::zero();
            for (a, b) in letter.coproduct() {
                let a = a.map(Letter::to_u).unwrap_or_else(UElement::one);
                let b = b.map(Letter::to_u).unwrap_or_else(UElement::one);
                want += &tensor(&a, &b);
            }
            assert_eq!(crate::envalg::u_coproduct(&letter.to_u()), want, "{letter:?}");
        }
    }

    #[test]
    fn factored_route_matches_direct() {
        for mono in monomial_window(2, 3) {
            let f = FElement::basis(mono);
            for letter in [Letter::Nu1, Letter::Nu2, Letter::Tau, Letter::Exp(1), Letter::Exp(-2)] {
                assert_eq!(contract_left(letter, &f), contract_left_direct(letter, &f), "L {letter:?} {mono}");
                assert_eq!(contract_right(letter, &f), contract_right_direct(letter, &f), "R {letter:?} {mono}");
            }
        }
    }
}
