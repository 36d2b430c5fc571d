use elchi_core::envalg::NamedElement;
use elchi_core::workbench::expr::{num, parse_expression, Atom, Expr};
use proptest::prelude::*;

fn atoms(u_side: bool) -> Vec<Atom> {
    let mut out = vec![Atom::I, Atom::Z, Atom::Hp, Atom::Hm, Atom::K];
    if u_side {
        out.extend([Atom::P1, Atom::P2, Atom::J, Atom::E(-2), Atom::E(3)]);
        out.extend(NamedElement::ALL.map(Atom::Named));
    } else {
        out.extend([Atom::Th(-1), Atom::Th(2), Atom::A1, Atom::A2, Atom::X, Atom::XBar, Atom::Chi, Atom::ChiBar]);
    }
    out
}

fn expr_tree(u_side: bool) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(atoms(u_side)).prop_map(Expr::Atom),
        (0i64..20, 1i64..6).prop_map(|(n, d)| num(n, d)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, -2i64..5).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
        ]
    })
}

fn any_expr() -> impl Strategy<Value = Expr> {
    prop_oneof![expr_tree(true), expr_tree(false)]
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in any_expr()) {
        let printed = e.to_string();
        let back = parse_expression(&printed).unwrap();
        prop_assert_eq!(&back, &e, "printed as {}", printed);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn whitespace_is_insignificant(e in any_expr()) {
        let compact: String = e.to_string().chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_expression(&compact).unwrap(), e);
    }
}
