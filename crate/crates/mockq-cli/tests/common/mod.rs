use mockq_cli::dsl::{BinOp, Expr};
use proptest::prelude::*;

const RESERVED: [&str; 6] = ["q", "inf", "poch", "qbin", "sum", "qtheta"];

pub fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,6}".prop_filter("reserved", |s| !RESERVED.contains(&s.as_str()))
}

pub fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0i64..1000).prop_map(Expr::Int), Just(Expr::Q), ident().prop_map(Expr::Var)];
    leaf.prop_recursive(5, 48, 3, |inner| {
        let op = prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)];
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |e| Expr::Neg(b(e))),
            (op, inner.clone(), inner.clone()).prop_map(|(o, x, y)| Expr::bin(o, x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Pow(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone(), proptest::option::of(inner.clone()))
                .prop_map(|(z, s, n)| Expr::Poch { z: Box::new(z), step: Box::new(s), n: n.map(Box::new) }),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::QBin(Box::new(x), Box::new(y))),
            (ident(), inner.clone(), proptest::option::of(inner.clone()), inner.clone()).prop_map(|(v, lo, hi, body)| {
                Expr::Sum { var: v, lo: Box::new(lo), hi: hi.map(Box::new), body: Box::new(body) }
            }),
            (ident(), inner.clone(), inner.clone())
                .prop_map(|(c, d, s)| Expr::QTheta { chi: c, den: Box::new(d), shift: Box::new(s) }),
            (ident(), proptest::option::of(ident()), inner)
                .prop_map(|(n, v, a)| Expr::Call { name: n, variant: v, arg: Box::new(a) }),
        ]
    })
}
