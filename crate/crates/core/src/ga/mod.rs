//! Real Clifford algebra arithmetic over diagonal signatures `(p,q)`,
//! `p + q <= 8`.

mod multivector;
mod signature;
mod text;
mod versor;

pub use multivector::{Blade, Multivector, PRUNE_EPS};
pub use signature::{Signature, MAX_DIM};
pub use text::{parse_multivector, parse_multivector_with};
pub use versor::{apply_versor, exp_bivector, exp_bivector_series, Versor, DEFAULT_EXP_TERMS};
