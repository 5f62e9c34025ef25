use mockq::{Cyclo, QSeries, Q};
use num_traits::{One, Signed};

fn power(n: i64, den: u64) -> String {
    let e = Q::new(n.into(), (den as i64).into());
    match (e.is_integer(), n) {
        (true, _) if e.is_one() => "q".into(),
        (true, _) => format!("q^{e}"),
        _ => format!("q^({e})"),
    }
}

fn coeff(c: &Cyclo) -> (bool, String) {
    match c.as_rational() {
        Some(q) => (q.is_negative(), q.abs().to_string()),
        None => (false, format!("[{c}]")),
    }
}

/// `1 - q + 2*q^3 + O(q^T)` style rendering.
pub fn series(s: &QSeries) -> String {
    let mut out = String::new();
    for (i, (n, c)) in s.terms().enumerate() {
        let (neg, mag) = coeff(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out += if neg { " - " } else { " + " };
        }
        match (*n, mag.as_str()) {
            (0, m) => out += m,
            (n, "1") => out += &power(n, s.den()),
            (n, m) => out += &format!("{m}*{}", power(n, s.den())),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    if s.is_exact() {
        out
    } else {
        format!("{out} + O({})", power(s.trunc(), s.den()))
    }
}
