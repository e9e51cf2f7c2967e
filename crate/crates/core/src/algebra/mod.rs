//! Finite fields GF(p^t) and dense linear algebra over GF(p).

mod field;
mod matrix;

pub use field::{is_prime, prime_power, FieldElement, FieldOp, FieldSpec, Operand};
pub use matrix::MatGFp;
