//! Named mock theta functions, their starred variants and the identity suite.

mod bailey;
mod defs;
mod dense;
mod fine;
mod identities;
mod jones;

pub use bailey::{bailey_reduced_identity, beta_from_alpha, BaileyPair};
pub use defs::*;
pub use fine::verify_fine_andrews_specializations;
pub use identities::{identity_ids, identity_records, verify_all, verify_identity, IdentityRecord, Side};
pub use jones::{jones_trefoil, jones_trefoil_sum, surgery_series, JonesForm};

use crate::error::{Error, Result};
use crate::series::QSeries;
use std::sync::OnceLock;

/// One way of producing a function's expansion.
#[derive(Clone, Copy)]
pub struct Variant {
    pub name: &'static str,
    pub generator: fn(i64) -> Result<QSeries>,
}

/// A registered q-series with its alternative generators; the first variant is the definition.
#[derive(Clone)]
pub struct NamedFunction {
    pub id: &'static str,
    pub order_label: &'static str,
    pub coefficient_field_order: u64,
    pub variants: Vec<Variant>,
}

impl NamedFunction {
    pub fn variant(&self, name: &str) -> Result<&Variant> {
        self.variants
            .iter()
            .find(|v| v.name == name)
            .ok_or_else(|| Error::Lookup { kind: "variant", name: format!("{}/{}", self.id, name) })
    }

    pub fn variant_names(&self) -> Vec<&'static str> {
        self.variants.iter().map(|v| v.name).collect()
    }
}

macro_rules! nf {
    ($id:literal, $ord:literal, $k:literal; $($name:literal => $g:expr),* $(,)?) => {
        NamedFunction {
            id: $id,
            order_label: $ord,
            coefficient_field_order: $k,
            variants: vec![$(Variant { name: $name, generator: $g }),*],
        }
    };
}

fn build() -> Vec<NamedFunction> {
    vec![
        nf!("chi0", "5", 1; "definition" => chi0),
        nf!("chi1", "5", 1; "definition" => chi1),
        nf!("chi0_star", "5", 1; "definition" => chi0_star, "false_theta" => chi0_star_ft,
            "finite_a" => chi0_star_finite_a, "finite_b" => chi0_star_finite_b, "finite_c" => chi0_star_finite_c,
            "surgery" => chi0_star_surgery),
        nf!("chi1_star", "5", 1; "definition" => chi1_star, "false_theta" => chi1_star_ft, "finite" => chi1_star_finite),
        nf!("phi", "3", 1; "definition" => phi),
        nf!("nu", "3", 1; "definition" => nu),
        nf!("f", "3", 1; "definition" => f, "fine" => f_fine),
        nf!("omega", "3", 1; "definition" => omega, "fine" => omega_fine),
        nf!("upchi", "3", 12; "definition" => upchi, "fine" => upchi_fine),
        nf!("varrho", "3", 12; "definition" => varrho, "fine" => varrho_fine),
        nf!("phi_star", "3", 1; "definition" => phi_star, "false_theta" => phi_star_ft, "finite" => phi_star_terminating,
            "fine" => phi_star_fine, "surgery" => phi_star_surgery),
        nf!("nu_star", "3", 1; "definition" => nu_star, "false_theta" => nu_star_ft, "finite" => nu_star_terminating,
            "omega_sq" => nu_star_omega_sq),
        nf!("f_star", "3", 1; "definition" => f_star, "false_theta" => f_star_ft),
        nf!("omega_star", "3", 1; "definition" => omega_star, "false_theta" => omega_star_ft,
            "rogers" => omega_star_rogers),
        nf!("upchi_star", "3", 12; "definition" => upchi_star, "false_theta" => upchi_star_ft),
        nf!("varrho_star", "3", 12; "definition" => varrho_star, "false_theta" => varrho_star_ft),
        nf!("F0", "7", 1; "definition" => f0),
        nf!("F1", "7", 1; "definition" => f1),
        nf!("F2", "7", 1; "definition" => f2),
        nf!("F0_star", "7", 1; "definition" => f0_star, "false_theta" => f0_star_ft,
            "double_sum" => f0_star_double_sum, "surgery" => f0_star_surgery),
        nf!("F1_star", "7", 1; "definition" => f1_star, "false_theta" => f1_star_ft),
        nf!("F2_star", "7", 1; "definition" => f2_star, "false_theta" => f2_star_ft),
        nf!("phi6", "6", 1; "definition" => phi6),
        nf!("psi6", "6", 1; "definition" => psi6),
        nf!("rho6", "6", 1; "definition" => rho6),
        nf!("phi6_star", "6", 1; "definition" => phi6_star, "false_theta" => phi6_star_ft, "theta" => phi6_star_theta),
        nf!("psi6_star", "6", 1; "definition" => psi6_star, "false_theta" => psi6_star_ft, "theta" => psi6_star_theta),
        nf!("rho6_star", "6", 1; "definition" => rho6_star, "false_theta" => rho6_star_ft, "even" => rho6_star_even,
            "psi_sq" => rho6_star_psi_sq, "d5_cube" => rho6_star_d5_cube),
        nf!("Phi10", "10", 1; "definition" => phi10),
        nf!("Psi10", "10", 1; "definition" => psi10),
        nf!("X10", "10", 1; "definition" => x10),
        nf!("chi10", "10", 1; "definition" => chi10),
        nf!("Phi10_star", "10", 1; "definition" => phi10_star, "false_theta" => phi10_star_ft),
        nf!("Psi10_star", "10", 1; "definition" => psi10_star, "false_theta" => psi10_star_ft),
        nf!("X10_star", "10", 1; "definition" => x10_star, "false_theta" => x10_star_ft),
        nf!("chi10_star", "10", 1; "definition" => chi10_star, "false_theta" => chi10_star_ft),
        nf!("D5", "2", 1; "definition" => d5),
        nf!("D6", "4", 1; "definition" => d6),
        nf!("I12", "8", 1; "definition" => i12),
        nf!("I13", "8", 1; "definition" => i13),
        nf!("D5_star", "2", 1; "definition" => d5_star, "false_theta" => d5_star_ft),
        nf!("D6_star", "4", 1; "definition" => d6_star, "false_theta" => d6_star_ft),
        nf!("I12_star", "8", 1; "definition" => i12_star, "false_theta" => i12_star_ft),
        nf!("I13_star", "8", 1; "definition" => i13_star, "false_theta" => i13_star_ft),
    ]
}

/// The immutable function registry.
pub fn registry() -> &'static [NamedFunction] {
    static REG: OnceLock<Vec<NamedFunction>> = OnceLock::new();
    REG.get_or_init(build)
}

pub fn lookup(id: &str) -> Result<&'static NamedFunction> {
    registry()
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Lookup { kind: "function", name: id.to_string() })
}

/// Expand a registered function below q^truncation; the default variant is the definition.
pub fn expand(id: &str, truncation: i64, variant: Option<&str>) -> Result<QSeries> {
    let f = lookup(id)?;
    let v = f.variant(variant.unwrap_or("definition"))?;
    if truncation < 0 {
        return Err(Error::Domain("truncation must be nonnegative".into()));
    }
    let s = (v.generator)(truncation)?;
    if f.coefficient_field_order > 1 {
        return s.with_field(f.coefficient_field_order);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_errors() {
        assert!(matches!(expand("nope", 5, None), Err(Error::Lookup { .. })));
        assert!(matches!(expand("chi0", 5, Some("nope")), Err(Error::Lookup { .. })));
    }

    #[test]
    fn every_variant_agrees() {
        for f in registry() {
            let base = expand(f.id, 60, None).unwrap();
            for v in &f.variants[1..] {
                let s = expand(f.id, 60, Some(v.name)).unwrap();
                assert_eq!(base.first_mismatch(&s).unwrap(), None, "{} / {}", f.id, v.name);
            }
        }
    }
}
