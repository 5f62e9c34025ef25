//! A small expression language for stating q-series identities.

mod ast;
mod eval;
mod parse;

pub use ast::{BinOp, Expr, Stmt};
pub use eval::{eval_stmt, Evaluator, Outcome, Value};
pub use parse::{parse, parse_expr, Tok};

/// Parse and evaluate in one step.
pub fn run(src: &str, truncation: i64, id: &str) -> mockq::Result<Outcome> {
    eval_stmt(&parse(src)?, truncation, id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mockq::{catalog, Error, Status};

    fn series(src: &str, t: i64) -> mockq::QSeries {
        match run(src, t, "t").unwrap() {
            Outcome::Series(s) => s,
            Outcome::Report(r) => panic!("{r}"),
        }
    }

    fn report(src: &str, t: i64) -> mockq::VerificationReport {
        match run(src, t, "t").unwrap() {
            Outcome::Report(r) => r,
            Outcome::Series(_) => panic!("not an identity"),
        }
    }

    #[test]
    fn parses_examples() {
        let e = parse_expr("poch(q; 1; 2)").unwrap();
        assert!(matches!(e, Expr::Poch { n: Some(_), .. }));
        assert!(matches!(parse("chi0_star(q) == qtheta(chi60_111, 120, -1)").unwrap(), Stmt::Eq(..)));
        let s = parse_expr("sum(n=0..inf, q^n * poch(q^n; 1; n))").unwrap();
        assert!(matches!(s, Expr::Sum { hi: None, .. }));
        assert_eq!(s.to_string(), "sum(n = 0 .. inf, q^n * poch(q^n; 1; n))");
        assert_eq!(parse_expr("a - (b - c)").unwrap().to_string(), "a - (b - c)");
        assert_eq!(parse_expr("-(a*b)^2").unwrap().to_string(), "-(a * b)^2");
        assert_eq!(parse_expr("f.theta(-q^2)").unwrap().to_string(), "f.theta(-q^2)");
    }

    #[test]
    fn diagnostics() {
        for (src, line, col) in [("poch(q; 1 2)", 1, 11), ("1 +\n  * q", 2, 3), ("q ^", 1, 4), ("1 == 2 == 3", 1, 8), ("$", 1, 1)] {
            match parse(src) {
                Err(Error::Parse { line: l, col: c, msg }) => assert_eq!((l, c), (line, col), "{src}: {msg}"),
                other => panic!("{src}: {other:?}"),
            }
        }
        let Err(Error::Parse { msg, .. }) = parse("poch(q; 1 2)") else { unreachable!() };
        assert!(msg.contains("`;`"), "{msg}");
    }

    #[test]
    fn evaluates() {
        assert!(report("poch(q;1;2) == 1 - q - q^2 + q^3", 20).passed());
        let r = report("poch(q;1;2) == 1 - q + q^2 + q^3", 20);
        assert_eq!((r.status, r.first_mismatch.as_deref()), (Status::Fail, Some("2")));
        assert!(report("qbin(4, 2) == 1 + q + 2*q^2 + q^3 + q^4", 10).passed());
        assert!(report("poch(q; 1; inf) == sum(n = 0 .. inf, q^(n*(n+1)/2) * (-1)^n / poch(q;1;n) * 0) + poch(q;1;inf)", 30).passed());
        assert!(report("q^(1/2) * q^(1/2) == q", 10).passed());
        assert!(report("f(-q) == f.fine(-q)", 40).passed());
    }

    #[test]
    fn matches_catalog() {
        let le = series("sum(n=0..inf, q^n * poch(q^n; 1; n))", 120);
        assert_eq!(le, catalog::expand("chi0_star", 120, None).unwrap());
        let omega_sq = series("omega_star(q^2)", 60);
        assert_eq!(omega_sq.first_mismatch(&catalog::expand("nu_star", 60, None).unwrap()).unwrap(), None);
        let th = series("qtheta(chi24_2, 24, -16)", 80);
        assert_eq!(th.first_mismatch(&catalog::expand("nu_star", 80, None).unwrap()).unwrap(), None);
    }

    #[test]
    fn errors() {
        assert!(matches!(run("sum(n = 0 .. inf, 1)", 5, "t"), Err(Error::Divergence(_))));
        assert!(matches!(run("nope(q)", 5, "t"), Err(Error::Lookup { .. })));
        assert!(matches!(run("n + 1", 5, "t"), Err(Error::Domain(_))));
        assert!(matches!(run("chi0(1 - q)", 5, "t"), Err(Error::Domain(_))));
        assert!(matches!(run("1/(q-q)", 5, "t"), Err(_)));
    }
}
