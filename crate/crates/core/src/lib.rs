//! Exact symbolic engine for supports, torsion, depth and sp-filtration
//! t-structures over commutative noetherian rings at desk scale.

pub mod error;
pub mod field;
pub mod groebner;
pub(crate) mod modgb;
pub mod complex;
pub mod koszul;
pub mod spectrum;
pub mod tstruct;
pub mod verify;
pub mod module;
pub mod oracle;
pub mod monomial;
pub mod poly;

pub use error::{EngineError, Result};
pub use field::{Coeff, FieldDescriptor};
pub use groebner::{GroebnerBasis, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{make_ring, parse_polynomial, Polynomial, Ring};
