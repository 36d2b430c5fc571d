//! The named verification suites.

use std::fmt;
use std::str::FromStr;

use crate::action::{ell_action, lambda_action, lambda_action_direct};
use crate::classical::verify_limits;
use crate::envalg::{e_pow, jgen, named_element, p1, p2, pbw_window, u_antipode, u_coproduct, u_counit, u_star};
use crate::envalg::{NamedElement, UElement, UMonomial};
use crate::error::{Error, Result};
use crate::funalg::{a1, a2, f_antipode, f_coproduct, f_counit, f_star, f_tensor_star, monomial_window, th, x, xbar};
use crate::funalg::{FElement, FMonomial};
use crate::pairing::u_f_pairing;
use crate::qplane::{
    chi, chi_in_f, chibar, chibar_in_f, from_poch, plane_coaction, plane_lambda, plane_to_f, pochhammer_poly, rho,
    rho_poly, to_poch, Affine, Family, PlaneElement, PlaneMonomial, PochKey, Var,
};
use crate::report::{all_pass, VerificationReport};
use crate::scalar::ParamScalar;
use crate::schrodinger::{
    angular_states, lemma38_elements, verify_angular_series, verify_hypergeometric, verify_plane_wave, verify_plane_wave_series,
};
use crate::sparse::{multiply, tensor, Sparse};

/// Every suite the workbench can run.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    HopfF,
    HopfU,
    Duality,
    Lemma22,
    Prop23,
    Prop24Crosscheck,
    AbstractIdentities,
    Lemma32,
    Prop33,
    Lemma34,
    Lemma35,
    Lemma38,
    Prop39,
    Hypergeometric,
    ClassicalLimits,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 15] = [
        Suite::HopfF,
        Suite::HopfU,
        Suite::Duality,
        Suite::Lemma22,
        Suite::Prop23,
        Suite::Prop24Crosscheck,
        Suite::AbstractIdentities,
        Suite::Lemma32,
        Suite::Prop33,
        Suite::Lemma34,
        Suite::Lemma35,
        Suite::Lemma38,
        Suite::Prop39,
        Suite::Hypergeometric,
        Suite::ClassicalLimits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfF => "hopf-f",
            Suite::HopfU => "hopf-u",
            Suite::Duality => "duality",
            Suite::Lemma22 => "lemma22",
            Suite::Prop23 => "prop23",
            Suite::Prop24Crosscheck => "prop24-crosscheck",
            Suite::AbstractIdentities => "abstract-identities",
            Suite::Lemma32 => "lemma32",
            Suite::Prop33 => "prop33",
            Suite::Lemma34 => "lemma34",
            Suite::Lemma35 => "lemma35",
            Suite::Lemma38 => "lemma38",
            Suite::Prop39 => "prop39",
            Suite::Hypergeometric => "hypergeometric",
            Suite::ClassicalLimits => "classical-limits",
            Suite::All => "all",
        }
    }

    /// Suites whose states accept a corrupted coefficient.
    pub fn accepts_corruption(self) -> bool {
        matches!(self, Suite::Prop33 | Suite::Prop39 | Suite::ClassicalLimits)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Window overrides; `None` selects the suite default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Windows {
    pub degree: Option<u32>,
    pub order: Option<u32>,
    pub r_max: Option<u32>,
    pub l_max: Option<u32>,
    /// `(m, n)` for plane waves, `(ℓ, r)` for angular states.
    pub corrupt: Option<(u32, u32)>,
}

impl Windows {
    /// Explicit bounds must be positive.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("degree", self.degree), ("order", self.order), ("l-max", self.l_max)] {
            if v == Some(0) {
                return Err(Error::InvalidArgument(format!("--{name} must be positive")));
            }
        }
        Ok(())
    }

    fn degree(&self, d: u32) -> u32 {
        self.degree.unwrap_or(d)
    }
    fn order(&self, d: u32) -> u32 {
        self.order.unwrap_or(d)
    }
    fn r_max(&self) -> u32 {
        self.r_max.unwrap_or(5)
    }
    fn l_max(&self) -> u32 {
        self.l_max.unwrap_or(8)
    }
}

/// Reports of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: Suite,
    pub reports: Vec<VerificationReport>,
}

impl SuiteResult {
    pub fn pass(&self) -> bool {
        all_pass(&self.reports)
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, w: &Windows) -> Vec<SuiteResult> {
    if suite == Suite::All {
        return std::thread::scope(|s| {
            let handles: Vec<_> = Suite::INDIVIDUAL
                .into_iter()
                .map(|x| s.spawn(move || SuiteResult { suite: x, reports: reports(x, w) }))
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        });
    }
    vec![SuiteResult { suite, reports: reports(suite, w) }]
}

fn reports(suite: Suite, w: &Windows) -> Vec<VerificationReport> {
    match suite {
        Suite::HopfF => hopf_f(w.degree(3)),
        Suite::HopfU => hopf_u(w.degree(2)),
        Suite::Duality => duality(w.degree(2)),
        Suite::Lemma22 => lemma22(),
        Suite::Prop23 => prop23(w.degree(6)),
        Suite::Prop24Crosscheck => prop24(w.degree(4)),
        Suite::AbstractIdentities => abstract_identities(),
        Suite::Lemma32 => lemma32(w.order(10)),
        Suite::Prop33 => {
            let n = w.order(8);
            let mut out = verify_plane_wave(n, n, w.corrupt);
            out.extend(verify_plane_wave_series(n));
            out
        }
        Suite::Lemma34 => lemma34(w.order(10)),
        Suite::Lemma35 => lemma35(w.order(8)),
        Suite::Lemma38 => {
            let mut out = lemma38_elements(w.r_max(), w.l_max());
            out.extend(u_pm_identities(w.order(8)));
            out
        }
        Suite::Prop39 => {
            let mut out = angular_states(w.r_max(), w.l_max(), w.corrupt);
            out.push(verify_angular_series(w.r_max(), w.l_max()));
            out
        }
        Suite::Hypergeometric => verify_hypergeometric(w.order(8), w.r_max(), w.l_max()),
        Suite::ClassicalLimits => verify_limits(w.order(8), w.r_max(), w.l_max(), w.corrupt),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn show_pair<A: fmt::Display, B: fmt::Display>(k: &(A, B)) -> String {
    format!("{} (x) {}", k.0, k.1)
}

fn show_triple<A: fmt::Display>(k: &((A, A), A)) -> String {
    format!("{} (x) {} (x) {}", k.0 .0, k.0 .1, k.1)
}

type Triple<K> = Sparse<((K, K), K)>;

/// `(Δ⊗id)t` and `(id⊗Δ)t`, both keyed as `((a, b), c)`.
fn coassociativity<K: Ord + Clone>(t: &Sparse<(K, K)>, delta: impl Fn(&K) -> Sparse<(K, K)>) -> (Triple<K>, Triple<K>) {
    let mut left = Sparse::zero();
    let mut right = Sparse::zero();
    for ((a, b), c) in t.iter() {
        for ((a1, a2), v) in delta(a).iter() {
            left.add_term(((a1.clone(), a2.clone()), b.clone()), &(c * v));
        }
        for ((b1, b2), v) in delta(b).iter() {
            right.add_term(((a.clone(), b1.clone()), b2.clone()), &(c * v));
        }
    }
    (left, right)
}

/// `(ε⊗id)t` and `(id⊗ε)t`.
fn counit_slots<K: Ord + Clone>(t: &Sparse<(K, K)>, eps: impl Fn(&K) -> ParamScalar) -> (Sparse<K>, Sparse<K>) {
    let mut left = Sparse::zero();
    let mut right = Sparse::zero();
    for ((a, b), c) in t.iter() {
        left.add_term(b.clone(), &(c * &eps(a)));
        right.add_term(a.clone(), &(c * &eps(b)));
    }
    (left, right)
}

fn hopf_f(degree: u32) -> Vec<VerificationReport> {
    let window = [("l", 2), ("m+n", degree as i64)];
    let monos = monomial_window(2, degree);
    let mut out = Vec::new();

    let mut assoc = VerificationReport::new("(ab)c = a(bc) in F", &window);
    let small = monomial_window(1, degree.min(2));
    for a in &small {
        for b in &small {
            let ab = FElement::basis(*a).product(&FElement::basis(*b));
            for c in &small {
                let fc = FElement::basis(*c);
                let bc = FElement::basis(*b).product(&fc);
                assoc.check(format!("{a} | {b} | {c}"), &ab.product(&fc), &FElement::basis(*a).product(&bc));
            }
        }
    }
    assoc.note("triples drawn from |l| <= 1, m+n <= min(degree, 2)");
    out.push(assoc);

    let mut alg = VerificationReport::new("Delta(fg) = Delta(f) Delta(g)", &window);
    let mut star_anti = VerificationReport::new("(fg)* = g* f*", &window);
    for a in &monos {
        let fa = FElement::basis(*a);
        let da = f_coproduct(&fa);
        for b in monos.iter().filter(|b| a.degree() + b.degree() <= degree) {
            let fb = FElement::basis(*b);
            let ab = fa.product(&fb);
            alg.check_with(format!("{a} | {b}"), &da.product(&f_coproduct(&fb)), &f_coproduct(&ab), show_pair);
            star_anti.check(format!("{a} | {b}"), &f_star(&fb).product(&f_star(&fa)), &f_star(&ab));
        }
    }
    alg.note("pairs with deg a + deg b <= degree");
    out.push(alg);

    let mut rel = VerificationReport::new("Delta preserves the three defining relations", &[]);
    let (dt, da1, da2) = (f_coproduct(&th(1)), f_coproduct(&a1()), f_coproduct(&a2()));
    let one = Sparse::<(FMonomial, FMonomial)>::one();
    let z = ParamScalar::z();
    let half_z = &ParamScalar::ratio(1, 2) * &z;
    let half_iz = &ParamScalar::imag(1, 2) * &z;
    let iz = &ParamScalar::i() * &z;
    rel.check_with("[Th(1), a1] = (z/2)(1 - Th(1))^2", &(&one - &dt).pow(2).scale(&half_z), &dt.commutator(&da1), show_pair);
    rel.check_with("[Th(1), a2] = (iz/2)(Th(2) - 1)", &(&dt.pow(2) - &one).scale(&half_iz), &dt.commutator(&da2), show_pair);
    rel.check_with("[a1, a2] = iz a1", &da1.scale(&iz), &da1.commutator(&da2), show_pair);
    rel.check_with("Th(1) Th(-1) = 1", &one, &dt.product(&f_coproduct(&th(-1))), show_pair);
    out.push(rel);

    let mut coassoc = VerificationReport::new("(Delta (x) id) Delta = (id (x) Delta) Delta", &window);
    let mut counit = VerificationReport::new("(eps (x) id) Delta = id = (id (x) eps) Delta", &window);
    let mut antipode = VerificationReport::new("m(S (x) id) Delta = eps 1 = m(id (x) S) Delta", &window);
    let mut star = VerificationReport::new("(f*)* = f and Delta(f*) = (* (x) *) Delta(f)", &window);
    for a in &monos {
        let fa = FElement::basis(*a);
        let da = f_coproduct(&fa);
        let (l, r) = coassociativity(&da, |k| f_coproduct(&FElement::basis(*k)));
        coassoc.check_with(a, &l, &r, show_triple);
        let (l, r) = counit_slots(&da, |k| f_counit(&FElement::basis(*k)));
        counit.check(format!("{a}, left"), &fa, &l);
        counit.check(format!("{a}, right"), &fa, &r);
        let eps = FElement::scalar(f_counit(&fa));
        let left = crate::sparse::map_tensor(&da, |k| f_antipode(&FElement::basis(*k)), |k| FElement::basis(*k));
        let right = crate::sparse::map_tensor(&da, |k| FElement::basis(*k), |k| f_antipode(&FElement::basis(*k)));
        antipode.check(format!("{a}, left"), &eps, &multiply(&left));
        antipode.check(format!("{a}, right"), &eps, &multiply(&right));
        let s = f_star(&fa);
        star.check(format!("{a}, involution"), &fa, &f_star(&s));
        star.check_with(format!("{a}, coproduct"), &f_tensor_star(&da), &f_coproduct(&s), show_pair);
    }
    star_anti.note("pairs with deg a + deg b <= degree");
    out.extend([coassoc, counit, antipode, star, star_anti]);
    out
}

fn hopf_u(degree: u32) -> Vec<VerificationReport> {
    let window = [("a+c+d", degree as i64), ("b", 2)];
    let monos = pbw_window(degree, 2);
    let ub = |m: &UMonomial| UElement::basis(*m);
    let mut out = Vec::new();

    let mut assoc = VerificationReport::new("(uv)w = u(vw) in U", &window);
    let small = pbw_window(degree.min(2), 1);
    for a in &small {
        for b in &small {
            let ab = ub(a).product(&ub(b));
            for c in &small {
                let bc = ub(b).product(&ub(c));
                assoc.check(format!("{a} | {b} | {c}"), &ab.product(&ub(c)), &ub(a).product(&bc));
            }
        }
    }
    assoc.note("triples drawn from a+c+d <= min(degree, 2), |b| <= 1");
    out.push(assoc);

    let mut alg = VerificationReport::new("Delta(uv) = Delta(u) Delta(v)", &window);
    for a in &monos {
        let da = u_coproduct(&ub(a));
        for b in &monos {
            let prod = ub(a).product(&ub(b));
            alg.check_with(format!("{a} | {b}"), &da.product(&u_coproduct(&ub(b))), &u_coproduct(&prod), show_pair);
        }
    }
    out.push(alg);

    let mut rel = VerificationReport::new("Delta preserves the defining relations", &[]);
    let (dj, dp1, dp2) = (u_coproduct(&jgen()), u_coproduct(&p1()), u_coproduct(&p2()));
    let c = &ParamScalar::imag(1, 2) * &ParamScalar::z_pow(-1);
    let de = |b: i32| u_coproduct(&e_pow(b));
    rel.check_with("[J, P1] = (i/2z)(E(2) - E(-2))", &(&de(2) - &de(-2)).scale(&c), &dj.commutator(&dp1), show_pair);
    rel.check_with("[J, P2] = -i P1", &dp1.scale(&ParamScalar::imag(-1, 1)), &dj.commutator(&dp2), show_pair);
    rel.check_with("[P1, P2] = 0", &Sparse::zero(), &dp1.commutator(&dp2), show_pair);
    rel.check_with("E(1) E(-1) = 1", &Sparse::one(), &de(1).product(&de(-1)), show_pair);
    out.push(rel);

    let mut coassoc = VerificationReport::new("(Delta (x) id) Delta = (id (x) Delta) Delta", &window);
    let mut counit = VerificationReport::new("(eps (x) id) Delta = id = (id (x) eps) Delta", &window);
    let mut antipode = VerificationReport::new("m(S (x) id) Delta = eps 1 = m(id (x) S) Delta", &window);
    let mut star = VerificationReport::new("(u*)* = u and Delta(u*) = (* (x) *) Delta(u)", &window);
    for a in &monos {
        let u = ub(a);
        let du = u_coproduct(&u);
        let (l, r) = coassociativity(&du, |k| u_coproduct(&ub(k)));
        coassoc.check_with(a, &l, &r, show_triple);
        let (l, r) = counit_slots(&du, |k| u_counit(&ub(k)));
        counit.check(format!("{a}, left"), &u, &l);
        counit.check(format!("{a}, right"), &u, &r);
        let eps = UElement::scalar(u_counit(&u));
        let left = crate::sparse::map_tensor(&du, |k| u_antipode(&ub(k)), ub);
        let right = crate::sparse::map_tensor(&du, ub, |k| u_antipode(&ub(k)));
        antipode.check(format!("{a}, left"), &eps, &multiply(&left));
        antipode.check(format!("{a}, right"), &eps, &multiply(&right));
        let s = u_star(&u);
        star.check(format!("{a}, involution"), &u, &u_star(&s));
        let mut dstar = Sparse::zero();
        for ((x1, x2), v) in du.iter() {
            dstar.add_scaled(&tensor(&u_star(&ub(x1)), &u_star(&ub(x2))), &v.conj());
        }
        star.check_with(format!("{a}, coproduct"), &dstar, &u_coproduct(&s), show_pair);
    }
    out.extend([coassoc, counit, antipode, star]);

    let one = UElement::one();
    let tau = named_element(NamedElement::Tau);
    let hp = named_element(NamedElement::Hplus);
    let hm = named_element(NamedElement::Hminus);
    let mut closed = VerificationReport::new("closed-form coproducts and star of tau", &[]);
    closed.check_with("Delta tau = E(-2) (x) tau + tau (x) 1", &(&tensor(&e_pow(-2), &tau) + &tensor(&tau, &one)), &u_coproduct(&tau), show_pair);
    closed.check_with("Delta H+ = 1 (x) H+ + H+ (x) E(2)", &(&tensor(&one, &hp) + &tensor(&hp, &e_pow(2))), &u_coproduct(&hp), show_pair);
    closed.check_with("Delta H- = E(-2) (x) H- + H- (x) 1", &(&tensor(&e_pow(-2), &hm) + &tensor(&hm, &one)), &u_coproduct(&hm), show_pair);
    let nu1 = named_element(NamedElement::Nu1);
    let want = &(-&tau) - &nu1.scale(&(&ParamScalar::i() * &ParamScalar::z()));
    closed.check("tau* = -tau - iz nu1", &want, &u_star(&tau));
    out.push(closed);
    out
}

fn generators() -> Vec<(&'static str, UElement)> {
    vec![
        ("P1", p1()),
        ("P2", p2()),
        ("J", jgen()),
        ("E(1)", e_pow(1)),
        ("E(-1)", e_pow(-1)),
        ("tau", named_element(NamedElement::Tau)),
        ("nu1", named_element(NamedElement::Nu1)),
        ("nu2", named_element(NamedElement::Nu2)),
    ]
}

fn pair_tensor(t: &Sparse<(UMonomial, UMonomial)>, f: &FElement, g: &FElement) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for ((u1, u2), c) in t.iter() {
        let p = &u_f_pairing(&UElement::basis(*u1), f) * &u_f_pairing(&UElement::basis(*u2), g);
        out += &(c * &p);
    }
    out
}

fn duality(degree: u32) -> Vec<VerificationReport> {
    let window = [("l", 2), ("m+n", degree as i64)];
    let monos = monomial_window(2, degree);
    let gens = generators();
    let scalar_key = "<.,.>";
    let mut out = Vec::new();

    let mut coprod = VerificationReport::new("<Delta u, f (x) g> = <u, fg>", &window);
    let mut antipode = VerificationReport::new("<S(u), f> = <u, S(f)>", &window);
    for (name, u) in &gens {
        let du = u_coproduct(u);
        for a in &monos {
            let fa = FElement::basis(*a);
            antipode.check_scalar(format!("{name}, {a}"), scalar_key, &u_f_pairing(u, &f_antipode(&fa)), &u_f_pairing(&u_antipode(u), &fa));
            for b in &monos {
                let fb = FElement::basis(*b);
                coprod.check_scalar(format!("{name}, {a} | {b}"), scalar_key, &u_f_pairing(u, &fa.product(&fb)), &pair_tensor(&du, &fa, &fb));
            }
        }
    }
    out.extend([coprod, antipode]);

    let mut product = VerificationReport::new("<uv, f> = <u (x) v, Delta f>", &window);
    for (nu, u) in &gens {
        for (nv, v) in &gens {
            let uv = u.product(v);
            for a in &monos {
                let df = f_coproduct(&FElement::basis(*a));
                let mut want = ParamScalar::zero();
                for ((f1, f2), c) in df.iter() {
                    let p = &u_f_pairing(u, &FElement::basis(*f1)) * &u_f_pairing(v, &FElement::basis(*f2));
                    want += &(c * &p);
                }
                product.check_scalar(format!("{nu}*{nv}, {a}"), scalar_key, &want, &u_f_pairing(&uv, &FElement::basis(*a)));
            }
        }
    }
    out.push(product);

    let mut direct = VerificationReport::new("factored lambda = direct lambda on generators", &window);
    let mut lam = VerificationReport::new("lambda(YZ) f = lambda(Y) lambda(Z) f", &window);
    let mut ell = VerificationReport::new("ell(YZ) f = ell(Y) ell(Z) f", &window);
    let act_monos = monomial_window(1, degree.min(2));
    for a in &act_monos {
        let f = FElement::basis(*a);
        for (ny, y) in &gens {
            direct.check(format!("{ny}, {a}"), &lambda_action_direct(y, &f), &lambda_action(y, &f));
            for (nz, z) in &gens {
                let yz = y.product(z);
                lam.check(format!("{ny}*{nz}, {a}"), &lambda_action(y, &lambda_action(z, &f)), &lambda_action_direct(&yz, &f));
                ell.check(format!("{ny}*{nz}, {a}"), &ell_action(y, &ell_action(z, &f)), &ell_action(&yz, &f));
            }
        }
    }
    for r in [&mut direct, &mut lam, &mut ell] {
        r.note("f drawn from |l| <= 1, m+n <= min(degree, 2)");
    }
    out.extend([direct, lam, ell]);

    let mut module_lambda = VerificationReport::new("lambda(Y)(fg) = sum lambda(Y(2)) f lambda(Y(1)) g", &window);
    let mut module_ell = VerificationReport::new("ell(Y)(fg) = sum ell(Y(1)) f ell(Y(2)) g", &window);
    let ma_monos = monomial_window(1, degree.min(1));
    for (name, y) in &gens {
        let dy = u_coproduct(y);
        for a in &ma_monos {
            let f = FElement::basis(*a);
            for b in &ma_monos {
                let g = FElement::basis(*b);
                let fg = f.product(&g);
                let mut want_l = FElement::zero();
                let mut want_e = FElement::zero();
                for ((y1, y2), c) in dy.iter() {
                    let (u1, u2) = (UElement::basis(*y1), UElement::basis(*y2));
                    want_l.add_scaled(&lambda_action(&u2, &f).product(&lambda_action(&u1, &g)), c);
                    want_e.add_scaled(&ell_action(&u1, &f).product(&ell_action(&u2, &g)), c);
                }
                module_lambda.check(format!("{name}, {a} | {b}"), &want_l, &lambda_action(y, &fg));
                module_ell.check(format!("{name}, {a} | {b}"), &want_e, &ell_action(y, &fg));
            }
        }
    }
    for r in [&mut module_lambda, &mut module_ell] {
        r.note("f, g drawn from |l| <= 1, m+n <= min(degree, 1)");
    }
    out.extend([module_lambda, module_ell]);
    out
}

fn lemma22() -> Vec<VerificationReport> {
    let x_el = named_element(NamedElement::X);
    let mut rep = VerificationReport::new("Delta X = E(-1) (x) X + X (x) E(1); (* o S)(X) = -X", &[]);
    let want = &tensor(&e_pow(-1), &x_el) + &tensor(&x_el, &e_pow(1));
    rep.check_with("coproduct", &want, &u_coproduct(&x_el), show_pair);
    rep.check("star of antipode", &-&x_el, &u_star(&u_antipode(&x_el)));
    vec![rep]
}

fn prop23(degree: u32) -> Vec<VerificationReport> {
    let xel = named_element(NamedElement::X);
    let mut out = Vec::new();
    let mut kernel = VerificationReport::new("ell(X) f = 0 for l = 0", &[("m+n", degree as i64)]);
    let mut nonzero = VerificationReport::new("ell(X) f != 0 for l != 0", &[("l", 3), ("m+n", degree as i64)]);
    for mono in monomial_window(3, degree) {
        let got = ell_action(&xel, &FElement::basis(mono));
        if mono.l == 0 {
            kernel.check(mono, &FElement::zero(), &got);
        } else {
            nonzero.check_true(mono, "ell(X) f != 0", !got.is_zero());
        }
    }
    out.extend([kernel, nonzero]);

    let mut coaction = VerificationReport::new("delta x = Th(1) (x) x + x (x) 1, delta xbar = Th(-1) (x) xbar + xbar (x) 1", &[]);
    let one = FElement::one();
    coaction.check_with("x", &(&tensor(&th(1), &x()) + &tensor(&x(), &one)), &f_coproduct(&x()), show_pair);
    coaction.check_with("xbar", &(&tensor(&th(-1), &xbar()) + &tensor(&xbar(), &one)), &f_coproduct(&xbar()), show_pair);
    // The plane-valued coaction, pushed into F (x) F, must agree with Delta.
    for p in 0..=2 {
        for q in 0..=2 - p {
            let a = PlaneElement::basis(PlaneMonomial::new(p, q));
            let pushed = crate::sparse::map_tensor(&plane_coaction(&a), |m| FElement::basis(*m), |m| plane_to_f(&PlaneElement::basis(*m)));
            coaction.check_with(format!("chi^{p} chibar^{q}"), &f_coproduct(&plane_to_f(&a)), &pushed, show_pair);
        }
    }
    out.push(coaction);

    let mut rel = VerificationReport::new("[x, xbar] = -z(x + xbar); x* = xbar; [chi, chibar] = chi - chibar", &[]);
    rel.check("[x, xbar]", &(&x() + &xbar()).scale(&-ParamScalar::z()), &x().commutator(&xbar()));
    rel.check("x*", &xbar(), &f_star(&x()));
    rel.check("chi in F", &(&chi_in_f() - &chibar_in_f()), &chi_in_f().commutator(&chibar_in_f()));
    rel.check("chi in plane", &(&chi() - &chibar()), &chi().commutator(&chibar()));
    out.push(rel);
    out
}

/// `Th(l)·a1^m·a2^n` as an element.
fn fmono(l: i64, m: u32, n: u32) -> FElement {
    FElement::basis(FMonomial::new(l, m, n))
}

/// `(num/den)·i·z`.
fn iz(num: i64, den: i64) -> ParamScalar {
    &ParamScalar::imag(num, den) * &ParamScalar::z()
}

fn a2_shift(c: ParamScalar) -> FElement {
    &a2() + &FElement::scalar(c)
}

fn closed_p1(mono: &FMonomial) -> FElement {
    if mono.m == 0 {
        return FElement::zero();
    }
    let base = fmono(mono.l, mono.m - 1, 0).product(&a2_shift(iz(1, 2)).pow(mono.n));
    base.scale(&ParamScalar::imag(-(mono.m as i64), 1))
}

fn closed_p2(mono: &FMonomial) -> FElement {
    if mono.n == 0 {
        return FElement::zero();
    }
    fmono(mono.l, mono.m, mono.n - 1).scale(&ParamScalar::imag(-(mono.n as i64), 1))
}

/// The stated `λ(J)` form, or with `half_shift = false` the stated `λ(X)` form.
fn closed_j_like(mono: &FMonomial, half_shift: bool) -> FElement {
    let (l, m, n) = (mono.l, mono.m as i64, mono.n);
    let plus = a2_shift(iz(1, 2)).pow(n);
    let minus = a2_shift(iz(-3, 2)).pow(n);
    let mut inner = fmono(0, mono.m, 0).scale(&ParamScalar::imag(l, 1));
    if m > 0 {
        // a2 - (i/2)(m - 1/2) z  or  a2 - i m z/2
        let shifted = a2_shift(if half_shift { iz(-(2 * m - 1), 4) } else { iz(-m, 2) });
        inner = &inner + &fmono(0, mono.m - 1, 0).product(&shifted).scale(&ParamScalar::int(m));
    }
    let mut body = inner.product(&plus);
    let tail = fmono(0, mono.m + 1, 0).product(&(&plus - &minus));
    body = &body + &tail.scale(&(&ParamScalar::imag(1, 2) * &ParamScalar::z_pow(-1)));
    th(l).product(&body).scale(&ParamScalar::i())
}

fn prop24(degree: u32) -> Vec<VerificationReport> {
    let window = [("l", 2), ("m+n", degree as i64)];
    let mut p1r = VerificationReport::new("lambda(P1) Th(l)a1^m a2^n = -i m Th(l) a1^(m-1) (a2 + iz/2)^n", &window);
    let mut p2r = VerificationReport::new("lambda(P2) Th(l)a1^m a2^n = -i n Th(l) a1^m a2^(n-1)", &window);
    let mut jr = VerificationReport::new("lambda(J) closed form", &window).informational();
    let mut xr = VerificationReport::new("lambda(X) closed form", &window).informational();
    let xel = named_element(NamedElement::X);
    for mono in monomial_window(2, degree) {
        let f = FElement::basis(mono);
        p1r.check(mono, &closed_p1(&mono), &lambda_action(&p1(), &f));
        p2r.check(mono, &closed_p2(&mono), &lambda_action(&p2(), &f));
        jr.check(mono, &closed_j_like(&mono, true), &lambda_action(&jgen(), &f));
        xr.check(mono, &closed_j_like(&mono, false), &lambda_action(&xel, &f));
    }
    jr.note("reconciliation only: the action derived from the pairing is authoritative");
    jr.note("anchor: lambda(Jscript) a1 = i a2 holds for the pairing-derived action (see lemma34)");
    xr.note("reconciliation only: the action derived from the pairing is authoritative");
    vec![p1r, p2r, jr, xr]
}

fn abstract_identities() -> Vec<VerificationReport> {
    let n = |e| named_element(e);
    let (hp, hm) = (n(NamedElement::Hplus), n(NamedElement::Hminus));
    let (hhp, hhm) = (n(NamedElement::HHplus), n(NamedElement::HHminus));
    let jj = n(NamedElement::Jscript);
    let cas = n(NamedElement::Casimir);
    let mut out = Vec::new();

    let mut c = VerificationReport::new("C = (4/z^2) sinh^2(z P2/2) + P1^2 = 4 H+ H-", &[]);
    c.check("C", &cas, &hp.product(&hm).scale(&ParamScalar::int(4)));
    out.push(c);

    let mut central = VerificationReport::new("[C, g] = 0 for g in P1, P2, J, E(1), E(-1)", &[]);
    for (name, g) in [("P1", p1()), ("P2", p2()), ("J", jgen()), ("E(1)", e_pow(1)), ("E(-1)", e_pow(-1))] {
        central.check(name, &UElement::zero(), &cas.commutator(&g));
    }
    out.push(central);

    let mut ladder = VerificationReport::new("[Jscript, HH+] = HH+, [Jscript, HH-] = -HH-, [HH+, HH-] = 0", &[]);
    ladder.check("[Jscript, HH+]", &hhp, &jj.commutator(&hhp));
    ladder.check("[Jscript, HH-]", &-&hhm, &jj.commutator(&hhm));
    ladder.check("[HH+, HH-]", &UElement::zero(), &hhp.commutator(&hhm));
    out.push(ladder);

    let mut ct = VerificationReport::new("Ctilde = HH+ HH- = H+ H- (1 + z^2 H+ H-)", &[]);
    let hh = hp.product(&hm);
    let want = hh.product(&(&UElement::one() + &hh.scale(&ParamScalar::z_pow(2))));
    ct.check("Ctilde", &want, &n(NamedElement::CasimirTilde));
    out.push(ct);

    out
}

fn poch(var: Var, c0: i64, sign: i64, n: u32) -> PlaneElement {
    pochhammer_poly(&Affine::new(c0, sign, var), n)
}

fn lemma32(order: u32) -> Vec<VerificationReport> {
    let window = [("n", order as i64)];
    let hp = named_element(NamedElement::Hplus);
    let hm = named_element(NamedElement::Hminus);
    let zinv = ParamScalar::z_pow(-1);
    let coef = |sign: i64, n: u32| &ParamScalar::int(sign * n as i64) * &zinv;
    let lowered = |var: Var, c0: i64, sign: i64, n: u32| if n == 0 { PlaneElement::zero() } else { poch(var, c0, sign, n - 1) };

    // (operator, identity, source Pochhammer (var, c0, sign), target (var, c0, sign), coefficient sign, required)
    type Spec<'a> = (&'a UElement, &'a str, (Var, i64, i64), Option<((Var, i64, i64), i64)>, bool);
    let specs: [Spec; 8] = [
        (&hp, "lambda(H+)(chibar)_n = 0", (Var::ChiBar, 0, 1), None, true),
        (&hp, "lambda(H+)(chi)_n = -(n/z)(chi)_(n-1)", (Var::Chi, 0, 1), Some(((Var::Chi, 0, 1), -1)), true),
        (&hp, "lambda(H+)(1-chi)_n = -(n/z)(2-chi)_(n-1)", (Var::Chi, 1, -1), Some(((Var::Chi, 2, -1), -1)), true),
        (&hm, "lambda(H-)(chi)_n = 0", (Var::Chi, 0, 1), None, true),
        (&hm, "lambda(H-)(chibar)_n = (n/z)(chibar+1)_(n-1)", (Var::ChiBar, 0, 1), Some(((Var::ChiBar, 1, 1), 1)), true),
        (&hm, "lambda(H-)(1-chibar)_n = (n/z)(1-chibar)_(n-1)", (Var::ChiBar, 1, -1), Some(((Var::ChiBar, 1, -1), 1)), true),
        (&hp, "lambda(H+)(1-chi)_n = (n/z)(2-chi)_(n-1)", (Var::Chi, 1, -1), Some(((Var::Chi, 2, -1), 1)), false),
        (&hm, "lambda(H-)(chibar)_n = -(n/z)(chibar+1)_(n-1)", (Var::ChiBar, 0, 1), Some(((Var::ChiBar, 1, 1), -1)), false),
    ];
    let mut out = Vec::new();
    for (op, name, (var, c0, sign), target, required) in specs {
        let mut rep = VerificationReport::new(name, &window);
        for n in 0..=order {
            let got = plane_lambda(op, &poch(var, c0, sign, n));
            let want = match target {
                None => PlaneElement::zero(),
                Some(((tv, tc, ts), s)) => lowered(tv, tc, ts, n).scale(&coef(s, n)),
            };
            rep.check(format!("n={n}"), &want, &got);
        }
        rep.note("quotients read as removal of the first Pochhammer factor: (a)_n / a = (a+1)_(n-1)");
        if !required {
            rep = rep.informational();
            rep.note("sign-consistent form realized by the pairing-derived action");
        }
        out.push(rep);
    }
    out
}

fn lemma34(order: u32) -> Vec<VerificationReport> {
    let jj = named_element(NamedElement::Jscript);
    let mut eig = VerificationReport::new("lambda(Jscript)(chi)_n = -n (chi)_n, lambda(Jscript)(chibar)_n = n (chibar)_n", &[("n", order as i64)]);
    for n in 0..=order {
        let c = poch(Var::Chi, 0, 1, n);
        eig.check(format!("chi, n={n}"), &c.scale(&ParamScalar::int(-(n as i64))), &plane_lambda(&jj, &c));
        let cb = poch(Var::ChiBar, 0, 1, n);
        eig.check(format!("chibar, n={n}"), &cb.scale(&ParamScalar::int(n as i64)), &plane_lambda(&jj, &cb));
    }
    let mut steps = VerificationReport::new("proof ingredients", &[]);
    steps.check("lambda(Jscript) a1 = i a2", &a2().scale(&ParamScalar::i()), &lambda_action(&jj, &a1()));
    steps.check("lambda(Jscript) a2 = -i a1", &a1().scale(&ParamScalar::imag(-1, 1)), &lambda_action(&jj, &a2()));
    let one = PlaneElement::one();
    steps.check("lambda(E(-2)) chi = chi + 1", &(&chi() + &one), &plane_lambda(&e_pow(-2), &chi()));
    steps.check("lambda(E(-2)) chibar = chibar + 1", &(&chibar() + &one), &plane_lambda(&e_pow(-2), &chibar()));
    let want = &tensor(&e_pow(-2), &jj) + &tensor(&jj, &UElement::one());
    steps.check_with("Delta Jscript = E(-2) (x) Jscript + Jscript (x) 1", &want, &u_coproduct(&jj), show_pair);
    vec![eig, steps]
}

fn lemma35(order: u32) -> Vec<VerificationReport> {
    let window = [("n", order as i64)];
    let jj = named_element(NamedElement::Jscript);
    let mut fact = VerificationReport::new("(chibar)_n (1-chi)_n = (chi)_n (1-chibar)_n = rho(rho+2)...(rho+n(n-1))", &window);
    let mut inv = VerificationReport::new("lambda(Jscript) rho_n = 0", &window);
    let mut rec = VerificationReport::new("rho_n = rho_(n-1) (rho + n(n-1))", &window);
    for n in 0..=order {
        let r = rho_poly(n);
        fact.check(format!("n={n}, chibar form"), &r, &poch(Var::ChiBar, 0, 1, n).product(&poch(Var::Chi, 1, -1, n)));
        fact.check(format!("n={n}, chi form"), &r, &poch(Var::Chi, 0, 1, n).product(&poch(Var::ChiBar, 1, -1, n)));
        inv.check(format!("n={n}"), &PlaneElement::zero(), &plane_lambda(&jj, &r));
        if n > 0 {
            let shift = PlaneElement::scalar(ParamScalar::int((n * (n - 1)) as i64));
            rec.check(format!("n={n}"), &r, &rho_poly(n - 1).product(&(&rho() + &shift)));
        }
    }
    let mut shift = VerificationReport::new("(chi - chibar) P(chi) = P(chi+1) (chi - chibar)", &window);
    let d = &chi() - &chibar();
    let chi1 = &chi() + &PlaneElement::one();
    for k in 0..=order {
        shift.check(format!("P = chi^{k}"), &chi1.pow(k).product(&d), &d.product(&chi().pow(k)));
    }
    shift.note("P ranges over the monomial basis, so the law holds for all P of degree <= n");
    let mut alpha = VerificationReport::new("(chibar + a)(1 - chi - a) = (chi + a)(1 - chibar - a)", &[]);
    let a = PlaneElement::scalar(ParamScalar::hp());
    let one = PlaneElement::one();
    let lhs = (&chibar() + &a).product(&(&(&one - &chi()) - &a));
    let rhs = (&chi() + &a).product(&(&(&one - &chibar()) - &a));
    alpha.check("a generic", &lhs, &rhs);
    alpha.note("a is represented by a free commuting symbol");

    let mut basis = VerificationReport::new("Pochhammer basis spans each degree with d+1 elements", &window);
    for deg in 0..=order {
        let mut keys = Vec::new();
        for ell in 0..=deg / 2 {
            let r = deg - 2 * ell;
            keys.push(PochKey::new(Family::Chi, ell, r));
            if r > 0 {
                keys.push(PochKey::new(Family::ChiBar, ell, r));
            }
        }
        basis.check_true(format!("d={deg}"), "count", keys.len() as u32 == deg + 1);
        for p in 0..=deg {
            let m = PlaneElement::basis(PlaneMonomial::new(p, deg - p));
            basis.check(format!("d={deg}, round trip"), &m, &from_poch(&to_poch(&m)));
        }
    }
    vec![fact, rec, inv, shift, alpha, basis]
}

/// `λ(U±)` on plane monomials, total degree `≤ order`.
fn u_pm_identities(order: u32) -> Vec<VerificationReport> {
    let window = [("n+m", order as i64)];
    let up = named_element(NamedElement::Uplus);
    let um = named_element(NamedElement::Uminus);
    let one = PlaneElement::one();
    let mut plus = VerificationReport::new("lambda(U+) chi^n chibar^m = chi^n (chibar+1)^m", &window);
    let mut minus = VerificationReport::new("lambda(U-) chibar^m chi^n = (chibar-1)^m chi^n", &window);
    let mut other = VerificationReport::new("lambda(U-) chi^n chibar^m = chi^n (chibar-1)^m", &window).informational();
    let cb_plus = &chibar() + &one;
    let cb_minus = &chibar() - &one;
    for n in 0..=order {
        for m in 0..=order - n {
            let case = format!("n={n},m={m}");
            let cn = chi().pow(n);
            let cbm = chibar().pow(m);
            plus.check(&case, &cn.product(&cb_plus.pow(m)), &plane_lambda(&up, &cn.product(&cbm)));
            minus.check(&case, &cb_minus.pow(m).product(&cn), &plane_lambda(&um, &cbm.product(&cn)));
            other.check(&case, &cn.product(&cb_minus.pow(m)), &plane_lambda(&um, &cn.product(&cbm)));
        }
    }
    other.note("the alternative factor order, reported for comparison");
    vec![plus, minus, other]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn closed_p1_example() {
        // λ(P1) a1 = -i
        let got = closed_p1(&FMonomial::new(0, 1, 0));
        assert_eq!(got, FElement::scalar(ParamScalar::imag(-1, 1)));
    }
}
