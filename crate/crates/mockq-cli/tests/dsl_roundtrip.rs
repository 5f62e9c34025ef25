mod common;

use mockq_cli::dsl::{parse, parse_expr, Stmt};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_roundtrip(e in common::expr()) {
        let src = e.to_string();
        prop_assert_eq!(parse_expr(&src).unwrap(), e, "{}", src);
    }

    #[test]
    fn identity_roundtrip(a in common::expr(), b in common::expr()) {
        let s = Stmt::Eq(a, b);
        prop_assert_eq!(parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn printing_is_stable(e in common::expr()) {
        let once = e.to_string();
        prop_assert_eq!(parse_expr(&once).unwrap().to_string(), once);
    }
}
