//! The identity suite: every record compares two or more generators coefficientwise.

use super::defs::*;
use super::{bailey, fine};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::series::{self, Monomial, QSeries};
use rayon::prelude::*;
use std::sync::OnceLock;

/// One side of an identity.
#[derive(Clone, Copy)]
pub struct Side {
    pub label: &'static str,
    pub generator: fn(i64) -> Result<QSeries>,
}

/// A checkable identity; every side must agree with the first.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub anchor: &'static str,
    pub default_truncation: i64,
    pub sides: Vec<Side>,
}

impl IdentityRecord {
    pub fn verify(&self, truncation: i64) -> VerificationReport {
        let run = || -> Result<VerificationReport> {
            let first = (self.sides[0].generator)(truncation)?;
            for s in &self.sides[1..] {
                let other = (s.generator)(truncation)?;
                let r = first.compare(&other, self.id);
                if !r.passed() {
                    let detail = format!("{} vs {}: {}", self.sides[0].label, s.label, r.detail);
                    return Ok(VerificationReport { detail, ..r });
                }
            }
            let labels: Vec<&str> = self.sides.iter().map(|s| s.label).collect();
            Ok(VerificationReport::pass(self.id, truncation, labels.join(" = ")))
        };
        run().unwrap_or_else(|e| VerificationReport::error(self.id, e.to_string()))
    }
}

macro_rules! rec {
    ($id:literal, $anchor:literal, $t:expr; $($label:literal => $g:expr),+ $(,)?) => {
        IdentityRecord {
            id: $id,
            anchor: $anchor,
            default_truncation: $t,
            sides: vec![$(Side { label: $label, generator: $g }),+],
        }
    };
}

fn phi_star_minus(t: i64) -> Result<QSeries> {
    Ok(phi_star(t)?.substitute_sign())
}

fn report_series(r: Result<VerificationReport>) -> Result<QSeries> {
    // selftests return reports; wrap them as a zero-or-one indicator series
    let r = r?;
    if r.passed() {
        Ok(QSeries::zero(series::Prec::q(1)))
    } else {
        Err(Error::Degenerate(format!("{r}")))
    }
}

fn build() -> Vec<IdentityRecord> {
    vec![
        // false-theta expansions
        rec!("prop_5th_chi0", "χ0*(q) = Σ χ60(1,1,1)(n) q^{(n²−1)/120}", 200; "definition" => chi0_star, "false_theta" => chi0_star_ft),
        rec!("prop_5th_chi1", "χ1*(q) = Σ χ60(1,1,2)(n) q^{(n²−49)/120}", 200; "definition" => chi1_star, "false_theta" => chi1_star_ft),
        rec!("prop_3rd_phi", "φ*(q) = Σ χ24(1)(n) q^{(n²−1)/24}", 200; "definition" => phi_star, "false_theta" => phi_star_ft),
        rec!("prop_3rd_phi_minus", "φ*(−q) = Σ ψ6(1)(n) q^{(n²−1)/24}", 200; "substitute_sign" => phi_star_minus, "false_theta" => phi_star_minus_ft),
        rec!("prop_3rd_nu", "ν*(q) = Σ χ24(2)(n) q^{(n²−16)/24}", 200; "definition" => nu_star, "false_theta" => nu_star_ft),
        rec!("prop_3rd_f", "f*(q) = 2 Σ ψ6(1)(n) q^{(n²−1)/24}", 200; "definition" => f_star, "false_theta" => f_star_ft),
        rec!("prop_3rd_omega", "ω*(q) = Σ (ψ6(1)+ψ6(2))(n) q^{(n²−1)/3}", 200; "definition" => omega_star, "false_theta" => omega_star_ft),
        rec!("prop_3rd_upchi", "𝛘*(q) = Σ ψ6(1)(n) (1 + ζ3^{−n}) q^{(n²−1)/24}", 200; "definition" => upchi_star, "false_theta" => upchi_star_ft),
        rec!("prop_3rd_varrho", "ϱ*(q) = Σ (ψ6(1)+ψ6(2))(n) ζ3^{1−n} q^{(n²−1)/3}", 200; "definition" => varrho_star, "false_theta" => varrho_star_ft),
        rec!("prop_7th_F0", "F0*(q) = Σ χ84(1,1,1)(n) q^{(n²−1)/168}", 200; "definition" => f0_star, "false_theta" => f0_star_ft),
        rec!("prop_7th_F1", "F1*(q) = Σ χ84(1,1,2)(n) q^{(n²−25)/168}", 200; "definition" => f1_star, "false_theta" => f1_star_ft),
        rec!("prop_7th_F2", "F2*(q) = Σ χ84(1,1,3)(n) q^{(n²−121)/168}", 200; "definition" => f2_star, "false_theta" => f2_star_ft),
        rec!("prop_6th_phi", "φ6*(q) = Σ (ψ12(1)+ψ12(5))(n) q^{(n²−1)/24}", 200; "definition" => phi6_star, "false_theta" => phi6_star_ft),
        rec!("prop_6th_psi", "ψ6*(q) = Σ ψ12(3)(n) q^{(n²−9)/24}", 200; "definition" => psi6_star, "false_theta" => psi6_star_ft),
        rec!("prop_6th_rho", "ρ6*(q) = Σ ψ24(6)(n) q^{(n²−36)/48}", 200; "definition" => rho6_star, "false_theta" => rho6_star_ft),
        rec!("prop_10th_Phi", "Φ*(q) = Σ (ψ10(2)+ψ10(3))(n) q^{(n²−4)/5}", 200; "definition" => phi10_star, "false_theta" => phi10_star_ft),
        rec!("prop_10th_Psi", "Ψ*(q) = Σ (ψ10(1)+ψ10(4))(n) q^{(n²−1)/5}", 200; "definition" => psi10_star, "false_theta" => psi10_star_ft),
        rec!("prop_10th_X", "X*(q) = Σ ψ10(1)(n) q^{(n²−1)/40}", 200; "definition" => x10_star, "false_theta" => x10_star_ft),
        rec!("prop_10th_chi", "χ10*(q) = Σ ψ10(3)(n) q^{(n²−9)/40}", 200; "definition" => chi10_star, "false_theta" => chi10_star_ft),
        rec!("prop_8th_D5", "D5*(q) = Σ ψ4(1)(n) q^{(n²−1)/4}", 200; "definition" => d5_star, "false_theta" => d5_star_ft),
        rec!("prop_8th_D6", "D6*(q) = Σ (ψ8(1)+ψ8(3))(n) q^{(n²−1)/4}", 200; "definition" => d6_star, "false_theta" => d6_star_ft),
        rec!("prop_8th_I12", "I12*(q) = Σ (ψ16(1)+ψ16(7))(n) q^{(n²−1)/16}", 200; "definition" => i12_star, "false_theta" => i12_star_ft),
        rec!("prop_8th_I13", "I13*(q) = Σ (ψ16(3)+ψ16(5))(n) q^{(n²−9)/16}", 200; "definition" => i13_star, "false_theta" => i13_star_ft),
        // structural equalities
        rec!("omega_sq_eq_nu", "ω*(q²) = ν*(q)", 300; "nu_star" => nu_star, "omega_star(q^2)" => nu_star_omega_sq),
        rec!("rho_psi_d5_chain/rho_eq_psi_sq", "ρ6*(q) = ψ6*(q²)", 300; "rho6_star" => rho6_star, "psi6_star(q^2)" => rho6_star_psi_sq),
        rec!("rho_psi_d5_chain/psi_sq_eq_d5_cube", "ψ6*(q²) = D5*(q³)", 300; "psi6_star(q^2)" => rho6_star_psi_sq, "D5_star(q^3)" => rho6_star_d5_cube),
        rec!("rho6_star_even", "ρ6*(q) = Σ q^{2n}(q²;q⁴)_n/(−q²;q²)_{2n+1}", 200; "definition" => rho6_star, "even" => rho6_star_even),
        rec!("phi6_star_theta", "φ6*(q) as a theta combination", 200; "definition" => phi6_star, "theta" => phi6_star_theta),
        rec!("psi6_star_theta", "ψ6*(q) = Σ (−1)^k q^{3k(k+1)/2}", 200; "definition" => psi6_star, "theta" => psi6_star_theta),
        // terminating forms
        rec!("chi0_star_finite_forms", "χ0* = 1 + qΣq^{2m}(q^{m+1})_m = Σqⁿ(qⁿ)_n = 1 + qΣqⁿ(q^{n+1})_{n+1}", 200;
            "definition" => chi0_star, "finite_a" => chi0_star_finite_a, "finite_b" => chi0_star_finite_b, "finite_c" => chi0_star_finite_c),
        rec!("chi1_star_finite_form", "χ1* = Σqⁿ(q^{n+1})_n", 200; "definition" => chi1_star, "finite" => chi1_star_finite),
        rec!("phi_star_terminating", "φ* = 1 + qΣ(q;−q)_n qⁿ", 200; "definition" => phi_star, "finite" => phi_star_terminating),
        rec!("phi_star_fine", "φ* = 1 + Σ(−1)ⁿq^{2n+1}/(q;q²)_{n+1}", 200; "definition" => phi_star, "fine" => phi_star_fine),
        rec!("nu_star_terminating", "ν* = Σ(q²;q⁴)_n q^{2n}", 200; "definition" => nu_star, "finite" => nu_star_terminating),
        rec!("omega_star_rogers", "ω* = Σqⁿ(q;q²)_n", 200; "definition" => omega_star, "rogers" => omega_star_rogers),
        rec!("F0_star_double_sum", "F0* = 1 − qΣ(−1)ⁿ[k n]q^{(n+2)k−n(n+1)/2}", 150; "definition" => f0_star, "double_sum" => f0_star_double_sum),
        rec!("chi0_star_surgery", "χ0* = 1 + qΣ(−1)ⁿ[k n]q^{k(k+1)+n(3n+5)/2+kn}", 100; "definition" => chi0_star, "surgery" => chi0_star_surgery),
        rec!("phi_star_surgery", "φ* = 1 + qΣ(−1)ⁿ[k n]_{q²}q^{n(2n+3)+k²}", 100; "definition" => phi_star, "surgery" => phi_star_surgery),
        rec!("F0_star_surgery", "F0* = 1 − Σ(−1)ⁿ[k n]q^{k+n(n−1)/2+(k+n+1)²}", 100; "definition" => f0_star, "surgery" => f0_star_surgery),
        // unstarred alternate forms
        rec!("fine_f", "f(q) = 2 − Σ(−1)ⁿqⁿ/(−q)_n", 200; "definition" => f, "fine" => f_fine),
        rec!("fine_omega", "ω(q) = Σqⁿ/(q;q²)_{n+1}", 200; "definition" => omega, "fine" => omega_fine),
        rec!("fine_upchi", "𝛘(q) = 1 − ζ3 Σ e^{πin/3}qⁿ/(−ζ3q)_n", 120; "definition" => upchi, "fine" => upchi_fine),
        rec!("fine_varrho", "ϱ(q) = Σ ζ3^{−n}qⁿ/(ζ3q;q²)_{n+1}", 120; "definition" => varrho, "fine" => varrho_fine),
        // classical
        rec!("selftest_euler", "Σ q^{m(m−1)/2} zᵐ/(q)_m = (−z)_∞ at z = q, −q, q^{1/2}", 500;
            "euler" => |t| report_series(series::selftest_euler(&Monomial::q(1, 1), t)
                .and_then(|r| if r.passed() { series::selftest_euler(&Monomial::neg_q(1, 1), t) } else { Ok(r) })
                .and_then(|r| if r.passed() { series::selftest_euler(&Monomial::q(1, 2), t) } else { Ok(r) })),
            "expected" => |_| Ok(QSeries::zero(series::Prec::q(1)))),
        rec!("selftest_triple_product", "Jacobi triple product and η³", 500;
            "triple" => |t| report_series(series::selftest_triple_product(&Monomial::q(1, 2), t)
                .and_then(|r| if r.passed() { series::selftest_eta_cubed(8 * t) } else { Ok(r) })),
            "expected" => |_| Ok(QSeries::zero(series::Prec::q(1)))),
        rec!("selftest_q_binomial", "q-binomial theorem, series and formula", 100;
            "binomial" => |t| report_series(series::selftest_q_binomial_theorem(12, &Monomial::q(1, 1))
                .and_then(|r| if r.passed() { series::selftest_q_binomial_series(12, &Monomial::q(1, 1), t) } else { Ok(r) })
                .and_then(|r| if r.passed() { series::selftest_q_binomial_formula(&Monomial::neg_q(1, 1), &Monomial::q(1, 1), t) } else { Ok(r) })),
            "expected" => |_| Ok(QSeries::zero(series::Prec::q(1)))),
        // transformations at the specializations used
        rec!("fine_andrews_specializations", "Andrews and Fine transformations at the specializations used", 150;
            "all" => |t| {
                let bad: Vec<_> = fine::verify_fine_andrews_specializations(t).into_iter().filter(|r| !r.passed()).collect();
                match bad.first() { None => Ok(QSeries::zero(series::Prec::q(1))), Some(r) => Err(Error::Degenerate(r.to_string())) }
            },
            "expected" => |_| Ok(QSeries::zero(series::Prec::q(1)))),
        rec!("bailey_delta_pair", "reduced Bailey identity for the unit pair at x = q, q²", 80;
            "bailey" => |t| {
                for e in [1, 2] {
                    let pair = bailey::delta_pair(Monomial::q(e, 1), (2.0 * t as f64).sqrt() as usize + 2, t)?;
                    let r = bailey::bailey_reduced_identity(&pair, t);
                    if !r.passed() { return Err(Error::Degenerate(r.to_string())); }
                }
                Ok(QSeries::zero(series::Prec::q(1)))
            },
            "expected" => |_| Ok(QSeries::zero(series::Prec::q(1)))),
    ]
}

pub fn identity_records() -> &'static [IdentityRecord] {
    static REC: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REC.get_or_init(build)
}

pub fn identity_ids() -> Vec<&'static str> {
    identity_records().iter().map(|r| r.id).collect()
}

/// Verify one record; a group prefix such as `rho_psi_d5_chain` runs all of its members.
pub fn verify_identity(id: &str, truncation: i64) -> Result<VerificationReport> {
    if let Some(r) = identity_records().iter().find(|r| r.id == id) {
        return Ok(r.verify(truncation));
    }
    let prefix = format!("{id}/");
    let members: Vec<_> = identity_records().iter().filter(|r| r.id.starts_with(&prefix)).collect();
    if members.is_empty() {
        return Err(Error::Lookup { kind: "identity", name: id.to_string() });
    }
    let reports: Vec<_> = members.iter().map(|r| r.verify(truncation)).collect();
    Ok(match reports.iter().find(|r| !r.passed()) {
        Some(r) => r.clone(),
        None => VerificationReport::pass(id, truncation, format!("{} members", reports.len())),
    })
}

/// Run the whole suite; `truncation` overrides each record's default when given.
pub fn verify_all(truncation: Option<i64>) -> Vec<VerificationReport> {
    identity_records().par_iter().map(|r| r.verify(truncation.unwrap_or(r.default_truncation))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_low_order() {
        for r in verify_all(Some(40)) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn group_prefix() {
        assert!(verify_identity("rho_psi_d5_chain", 60).unwrap().passed());
        assert!(verify_identity("nope", 10).is_err());
        assert!(identity_ids().contains(&"omega_sq_eq_nu"));
    }
}
