//! Exact q-series workbench for mock theta functions, false theta functions,
//! Eichler integrals and quantum invariants of Seifert manifolds.

pub mod catalog;
pub mod chars;
pub mod cyclo;
pub mod error;
pub mod lfunc;
pub mod report;
pub mod series;
pub mod wrt;

pub use cyclo::{Cyclo, Q};
pub use error::{Error, Result};
pub use report::{Status, VerificationReport};
pub use series::{Monomial, Prec, QSeries};
