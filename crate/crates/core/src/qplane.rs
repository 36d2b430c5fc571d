//! The quantum plane `B_X = {f | ℓ(X)f = 0}`.
//!
//! It is generated by `χ = x/z` and `χ̄ = -x̄/z`, where `x = a1 - i·a2` and
//! `x̄ = a1 + i·a2`. In these variables the relation `[x, x̄] = -z(x + x̄)`
//! becomes the z-free `[χ, χ̄] = χ - χ̄`. Elements are kept in the normal
//! order `χ^p χ̄^q`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::action::{ell_action, lambda_action};
use crate::envalg::{named_element, NamedElement, UElement};
use crate::error::{Error, Result};
use crate::funalg::{a1, a2, th, FElement, FMonomial};
use crate::scalar::ParamScalar;
use crate::sparse::{NormalOrdered, Sparse};

/// Basis monomial `χ^p χ̄^q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PlaneMonomial {
    pub p: u32,
    pub q: u32,
}

impl PlaneMonomial {
    pub const fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    pub fn degree(&self) -> u32 {
        self.p + self.q
    }
}

impl fmt::Display for PlaneMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("chi", self.p), ("chibar", self.q)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type PlaneElement = Sparse<PlaneMonomial>;

/// Elements of `F ⊗ B_X`, the codomain of the coaction.
pub type CoactionElement = Sparse<(FMonomial, PlaneMonomial)>;

fn pm(p: u32, q: u32) -> PlaneMonomial {
    PlaneMonomial::new(p, q)
}

thread_local! {
    static SWAP_CACHE: RefCell<HashMap<(u32, u32), Rc<PlaneElement>>> = RefCell::new(HashMap::new());
    static TO_F_CACHE: RefCell<HashMap<PlaneMonomial, Rc<FElement>>> = RefCell::new(HashMap::new());
    static FROM_F_CACHE: RefCell<HashMap<(u32, u32), Rc<PlaneElement>>> = RefCell::new(HashMap::new());
    static POCH_CACHE: RefCell<HashMap<PochKey, Rc<PlaneElement>>> = RefCell::new(HashMap::new());
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

/// `χ̄^b · χ^c` in normal order, using `χ̄·P(χ) = P(χ+1)·χ̄ - χ·(P(χ+1) - P(χ))`.
fn swap(b: u32, c: u32) -> Rc<PlaneElement> {
    if let Some(hit) = SWAP_CACHE.with(|s| s.borrow().get(&(b, c)).cloned()) {
        return hit;
    }
    let out = if b == 0 || c == 0 {
        PlaneElement::basis(pm(c, b))
    } else {
        let mut out = PlaneElement::zero();
        // (χ+1)^c = Σ_j C(c,j) χ^j
        for j in 0..=c {
            let coeff = ParamScalar::int(binomial(c, j));
            let prev = swap(b - 1, j);
            for (mono, v) in prev.iter() {
                out.add_term(pm(mono.p, mono.q + 1), &(v * &coeff));
            }
            // -χ·((χ+1)^c - χ^c): the j = c term cancels.
            if j < c {
                let tail = swap(b - 1, j + 1);
                out.add_scaled(&tail, &-&coeff);
            }
        }
        out
    };
    let out = Rc::new(out);
    SWAP_CACHE.with(|s| s.borrow_mut().insert((b, c), out.clone()));
    out
}

impl NormalOrdered for PlaneMonomial {
    fn unit() -> Self {
        pm(0, 0)
    }

    fn mul_basis(&self, rhs: &Self) -> PlaneElement {
        let mid = swap(self.q, rhs.p);
        let mut out = PlaneElement::zero();
        for (mono, v) in mid.iter() {
            out.add_term(pm(self.p + mono.p, mono.q + rhs.q), v);
        }
        out
    }
}

pub fn chi() -> PlaneElement {
    PlaneElement::basis(pm(1, 0))
}

pub fn chibar() -> PlaneElement {
    PlaneElement::basis(pm(0, 1))
}

pub fn plane_normal_product(a: &PlaneElement, b: &PlaneElement) -> PlaneElement {
    a.product(b)
}

/// `χ = (a1 - i·a2)/z`.
pub fn chi_in_f() -> FElement {
    (&a1() - &a2().scale(&ParamScalar::i())).scale(&ParamScalar::z_pow(-1))
}

/// `χ̄ = -(a1 + i·a2)/z`.
pub fn chibar_in_f() -> FElement {
    (&a1() + &a2().scale(&ParamScalar::i())).scale(&-ParamScalar::z_pow(-1))
}

fn to_f_basis(mono: &PlaneMonomial) -> Rc<FElement> {
    if let Some(hit) = TO_F_CACHE.with(|c| c.borrow().get(mono).cloned()) {
        return hit;
    }
    let out = if mono.q > 0 {
        to_f_basis(&pm(mono.p, mono.q - 1)).product(&chibar_in_f())
    } else if mono.p > 0 {
        to_f_basis(&pm(mono.p - 1, 0)).product(&chi_in_f())
    } else {
        FElement::one()
    };
    let out = Rc::new(out);
    TO_F_CACHE.with(|c| c.borrow_mut().insert(*mono, out.clone()));
    out
}

/// Embeds a plane element into the function algebra.
pub fn plane_to_f(a: &PlaneElement) -> FElement {
    let mut out = FElement::zero();
    for (mono, c) in a.iter() {
        out.add_scaled(&to_f_basis(mono), c);
    }
    out
}

fn from_f_basis(m: u32, n: u32) -> Rc<PlaneElement> {
    if let Some(hit) = FROM_F_CACHE.with(|c| c.borrow().get(&(m, n)).cloned()) {
        return hit;
    }
    let half_z = &ParamScalar::ratio(1, 2) * &ParamScalar::z();
    let out = if n > 0 {
        // a2 = (iz/2)(χ + χ̄)
        let a2p = (&chi() + &chibar()).scale(&(&half_z * &ParamScalar::i()));
        from_f_basis(m, n - 1).product(&a2p)
    } else if m > 0 {
        // a1 = (z/2)(χ - χ̄)
        let a1p = (&chi() - &chibar()).scale(&half_z);
        from_f_basis(m - 1, 0).product(&a1p)
    } else {
        PlaneElement::one()
    };
    let out = Rc::new(out);
    FROM_F_CACHE.with(|c| c.borrow_mut().insert((m, n), out.clone()));
    out
}

/// Inverse of [`plane_to_f`]; fails on any term with `l ≠ 0`.
pub fn plane_from_f(a: &FElement) -> Result<PlaneElement> {
    let mut out = PlaneElement::zero();
    for (mono, c) in a.iter() {
        if mono.l != 0 {
            return Err(Error::NotInPlane { l: mono.l });
        }
        out.add_scaled(&from_f_basis(mono.m, mono.n), c);
    }
    Ok(out)
}

/// `λ(u)` on the plane, through the embedding into `F`.
pub fn plane_lambda(u: &UElement, a: &PlaneElement) -> PlaneElement {
    plane_from_f(&lambda_action(u, &plane_to_f(a))).expect("λ preserves the quantum plane")
}

/// Which plane generator an affine expression is built on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Chi,
    ChiBar,
}

impl Var {
    pub fn element(self) -> PlaneElement {
        match self {
            Var::Chi => chi(),
            Var::ChiBar => chibar(),
        }
    }
}

/// `c0 + c1·v` for a single plane generator `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine {
    pub c0: ParamScalar,
    pub c1: ParamScalar,
    pub var: Var,
}

impl Affine {
    pub fn new(c0: impl Into<ParamScalar>, c1: impl Into<ParamScalar>, var: Var) -> Self {
        Self { c0: c0.into(), c1: c1.into(), var }
    }

    /// `v` itself.
    pub fn var(var: Var) -> Self {
        Self::new(0, 1, var)
    }

    /// `c - v`.
    pub fn one_minus(var: Var, c: i64) -> Self {
        Self::new(c, -1, var)
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self { c0: &self.c0 + &ParamScalar::int(k), c1: self.c1.clone(), var: self.var }
    }

    pub fn element(&self) -> PlaneElement {
        &PlaneElement::scalar(self.c0.clone()) + &self.var.element().scale(&self.c1)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::Chi => "chi",
            Var::ChiBar => "chibar",
        };
        write!(f, "({}) + ({})*{v}", self.c0, self.c1)
    }
}

/// The rising factorial `(a)_n = a(a+1)⋯(a+n-1)`.
pub fn pochhammer_poly(base: &Affine, n: u32) -> PlaneElement {
    let mut acc = PlaneElement::one();
    for k in 0..n {
        acc = acc.product(&base.shifted(k as i64).element());
    }
    acc
}

/// `ρ = χ̄(1 - χ)`.
pub fn rho() -> PlaneElement {
    chibar().product(&(&PlaneElement::one() - &chi()))
}

/// `ρ_n = ρ(ρ+2)(ρ+6)⋯(ρ+n(n-1))`.
pub fn rho_poly(n: u32) -> PlaneElement {
    let r = rho();
    let mut acc = PlaneElement::one();
    for k in 0..n {
        let shift = (k as i64) * (k as i64 + 1);
        acc = acc.product(&(&r + &PlaneElement::scalar(ParamScalar::int(shift))));
    }
    acc
}

/// `δ(χ) = Th(1)⊗χ + χ⊗1` and `δ(χ̄) = Th(-1)⊗χ̄ + χ̄⊗1`, extended multiplicatively.
pub fn plane_coaction(a: &PlaneElement) -> CoactionElement {
    let one_p = PlaneElement::one();
    let gen = |l: i64, inner: FElement, v: PlaneElement| -> CoactionElement {
        &crate::sparse::tensor(&th(l), &v) + &crate::sparse::tensor(&inner, &one_p)
    };
    let dchi = gen(1, chi_in_f(), chi());
    let dchibar = gen(-1, chibar_in_f(), chibar());
    let mut out = CoactionElement::zero();
    for (mono, c) in a.iter() {
        let t = dchi.pow(mono.p).product(&dchibar.pow(mono.q));
        out.add_scaled(&t, c);
    }
    out
}

/// `ℓ(X)f = 0`.
pub fn invariance_check(f: &FElement) -> bool {
    ell_action(&named_element(NamedElement::X), f).is_zero()
}

/// The antilinear automorphism exchanging `χ` and `χ̄`.
pub fn plane_exchange(a: &PlaneElement) -> PlaneElement {
    let mut out = PlaneElement::zero();
    for (mono, c) in a.iter() {
        out.add_scaled(&swap(mono.p, mono.q), &c.conj());
    }
    out
}

/// Family of a Pochhammer basis element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Chi,
    ChiBar,
}

/// `ρ_ell·(χ)_r` or `ρ_ell·(χ̄)_r`; at `r = 0` only the `Chi` family is used.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PochKey {
    pub family: Family,
    pub ell: u32,
    pub r: u32,
}

impl PochKey {
    pub fn new(family: Family, ell: u32, r: u32) -> Self {
        let family = if r == 0 { Family::Chi } else { family };
        Self { family, ell, r }
    }

    /// The leading monomial, whose coefficient is `(-1)^ell`.
    fn top(&self) -> PlaneMonomial {
        match self.family {
            Family::Chi => pm(self.ell + self.r, self.ell),
            Family::ChiBar => pm(self.ell, self.ell + self.r),
        }
    }

    fn from_top(mono: &PlaneMonomial) -> Self {
        if mono.p >= mono.q {
            Self::new(Family::Chi, mono.q, mono.p - mono.q)
        } else {
            Self::new(Family::ChiBar, mono.p, mono.q - mono.p)
        }
    }

    pub fn element(&self) -> Rc<PlaneElement> {
        if let Some(hit) = POCH_CACHE.with(|c| c.borrow().get(self).cloned()) {
            return hit;
        }
        let var = match self.family {
            Family::Chi => Var::Chi,
            Family::ChiBar => Var::ChiBar,
        };
        let out = Rc::new(rho_poly(self.ell).product(&pochhammer_poly(&Affine::var(var), self.r)));
        POCH_CACHE.with(|c| c.borrow_mut().insert(*self, out.clone()));
        out
    }
}

impl fmt::Display for PochKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.family {
            Family::Chi => "chi",
            Family::ChiBar => "chibar",
        };
        write!(f, "rho_{}*({v})_{}", self.ell, self.r)
    }
}

pub type PochElement = Sparse<PochKey>;

/// Change of basis into a family whose element `K` has a single leading
/// monomial of top total degree. `leading` maps a monomial to the key whose
/// leading term it is, together with that term's coefficient (±1).
pub fn expand_triangular<K: Ord + Clone>(
    a: &PlaneElement,
    leading: impl Fn(&PlaneMonomial) -> (K, i64),
    element: impl Fn(&K) -> Rc<PlaneElement>,
) -> Sparse<K> {
    let mut rest: BTreeMap<(u32, PlaneMonomial), ParamScalar> =
        a.iter().map(|(m, c)| ((m.degree(), *m), c.clone())).collect();
    let mut out = Sparse::zero();
    while let Some(((_, mono), c)) = rest.pop_last() {
        let (key, sign) = leading(&mono);
        let coeff = &c * &ParamScalar::int(sign);
        for (m, v) in element(&key).iter() {
            if *m == mono {
                continue;
            }
            let slot = rest.entry((m.degree(), *m)).or_insert_with(ParamScalar::zero);
            *slot -= &(v * &coeff);
            if slot.is_zero() {
                rest.remove(&(m.degree(), *m));
            }
        }
        out.add_term(key, &coeff);
    }
    out
}

/// Rewrites a plane element in the basis `ρ_ell·(χ)_r`, `ρ_ell·(χ̄)_r`.
pub fn to_poch(a: &PlaneElement) -> PochElement {
    expand_triangular(
        a,
        |mono| {
            let key = PochKey::from_top(mono);
            debug_assert_eq!(key.top(), *mono);
            (key, if key.ell.is_multiple_of(2) { 1 } else { -1 })
        },
        |key| key.element(),
    )
}

/// Expands a Pochhammer-basis element back into normal-ordered monomials.
pub fn from_poch(a: &PochElement) -> PlaneElement {
    let mut out = PlaneElement::zero();
    for (key, c) in a.iter() {
        out.add_scaled(&key.element(), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: i64, p: u32, q: u32) -> PlaneElement {
        PlaneElement::term(pm(p, q), ParamScalar::int(c))
    }

    #[test]
    fn basic_relation() {
        let want = &(&p(1, 1, 1) - &p(1, 1, 0)) + &p(1, 0, 1);
        assert_eq!(chibar().product(&chi()), want);
        let comm = chi().commutator(&chibar());
        assert_eq!(comm, &chi() - &chibar());
    }

    #[test]
    fn associativity_window() {
        let monos: Vec<_> = (0..=3).flat_map(|p| (0..=3 - p).map(move |q| pm(p, q))).collect();
        for a in &monos {
            for b in &monos {
                for c in &monos {
                    let (a, b, c) = (PlaneElement::basis(*a), PlaneElement::basis(*b), PlaneElement::basis(*c));
                    assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
                }
            }
        }
    }

    #[test]
    fn f_round_trip() {
        for p in 0..4 {
            for q in 0..4 {
                let a = PlaneElement::basis(pm(p, q));
                assert_eq!(plane_from_f(&plane_to_f(&a)).unwrap(), a);
            }
        }
        let half_z = &ParamScalar::ratio(1, 2) * &ParamScalar::z();
        assert_eq!(plane_from_f(&a1()).unwrap(), (&chi() - &chibar()).scale(&half_z));
        assert!(matches!(plane_from_f(&th(1)), Err(Error::NotInPlane { l: 1 })));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_poly(&Affine::var(Var::Chi), 0), PlaneElement::one());
        assert_eq!(pochhammer_poly(&Affine::var(Var::Chi), 2), &p(1, 2, 0) + &p(1, 1, 0));
        let want = &(&p(1, 0, 2) - &p(3, 0, 1)) + &p(2, 0, 0);
        assert_eq!(pochhammer_poly(&Affine::one_minus(Var::ChiBar, 1), 2), want);
    }

    #[test]
    fn rho_factorizations() {
        assert_eq!(rho(), &p(1, 1, 0) - &p(1, 1, 1));
        for n in 0..5 {
            let r = rho_poly(n);
            let a = pochhammer_poly(&Affine::var(Var::ChiBar), n).product(&pochhammer_poly(&Affine::one_minus(Var::Chi, 1), n));
            let b = pochhammer_poly(&Affine::var(Var::Chi), n).product(&pochhammer_poly(&Affine::one_minus(Var::ChiBar, 1), n));
            assert_eq!(a, r, "n={n}");
            assert_eq!(b, r, "n={n}");
        }
    }

    #[test]
    fn poch_round_trip() {
        let sq = chi().pow(2);
        let want: PochElement = [(PochKey::new(Family::Chi, 0, 2), ParamScalar::one()), (PochKey::new(Family::Chi, 0, 1), ParamScalar::int(-1))]
            .into_iter()
            .collect();
        assert_eq!(to_poch(&sq), want);
        for p in 0..5 {
            for q in 0..5 {
                let a = PlaneElement::basis(pm(p, q));
                assert_eq!(from_poch(&to_poch(&a)), a);
            }
        }
    }

    #[test]
    fn exchange_is_automorphism() {
        let a = &p(2, 1, 2) + &p(1, 2, 0);
        let b = &p(1, 0, 1) - &p(3, 1, 1);
        assert_eq!(plane_exchange(&a.product(&b)), plane_exchange(&a).product(&plane_exchange(&b)));
        assert_eq!(plane_exchange(&plane_exchange(&a)), a);
    }

    #[test]
    fn coaction_generators() {
        let d = plane_coaction(&chi());
        let want = &crate::sparse::tensor(&th(1), &chi()) + &crate::sparse::tensor(&chi_in_f(), &PlaneElement::one());
        assert_eq!(d, want);
        let dc = plane_coaction(&chi());
        let dcb = plane_coaction(&chibar());
        assert_eq!(dc.commutator(&dcb), &dc - &dcb);
    }

    #[test]
    fn invariance_examples() {
        let f = plane_to_f(&PlaneElement::basis(pm(2, 1)));
        assert!(invariance_check(&f));
        assert!(!invariance_check(&th(1)));
        assert!(invariance_check(&FElement::one()));
    }
}
