//! Exact arithmetic: Laurent polynomials in `(q, t)`, the field ℚ(q, t),
//! polynomials in `z_1..z_n` over it, and the resonance functional `Coeff_p`.

mod dense;
mod laurent;
mod ratfunc;
mod resonance;
mod zpoly;

pub use laurent::{LaurentQT, QtExp};
pub use ratfunc::RatFuncQT;
pub use resonance::{coeff_p_poly, coeff_p_scalar, coeff_p_scalar_frac, pole_order, Resonance};
pub use zpoly::{Exponent, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole of order {order} exceeds the requested order")]
    PoleOrderExceeded { order: u32 },
    #[error("pole of order {order} at monomial {exponent:?}")]
    PoleAtMonomial { order: u32, exponent: Vec<u32> },
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("resonance parameter must be positive")]
    NonPositiveResonance,
}
