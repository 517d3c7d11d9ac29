//! Socle degrees of Frobenius powers of ideals in weighted-graded polynomial
//! rings over prime fields, with the supporting Gröbner basis, ideal and
//! homology machinery.

pub mod error;
pub mod fuzz;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod ring;
mod serde_keys;
pub mod socle;
pub mod theorem;

pub use error::{AlgebraError, ErrorClass};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use parse::{parse_poly, print_poly, ParseError};
pub use poly::{Degree, Polynomial};
pub use ring::{MonomialOrder, Monomial, Ring, RingSpec};
pub use ideal::Ideal;
pub use quotient::HilbertFunction;
pub use socle::SocleProfile;
pub use homology::{AInvariant, BettiTable};
pub use theorem::{check_theorem, gorenstein_explore, CISetup, TheoremReport};
