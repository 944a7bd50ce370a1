//! Ordinals below ε₀, the fast-growing hierarchy with budgeted evaluation,
//! the slow function `F⋄`, and Paris–Harrington colourings at desk scale.

pub mod digits;
pub mod error;
pub mod hierarchy;
pub mod oracle;
pub mod ordinal;
pub mod ramsey;
pub mod slow;
pub mod suites;
pub mod syntax;

pub use digits::{code_of, code_value, decode_digits, encode_digits, DigitString};
pub use error::{Error, ParseError, Result};
pub use hierarchy::{
    eps0_fund_seq, f_eps0_eval, fgh_eval, fund_seq, hierarchy_eval, meshes, step_down, BaseFunction, Budget,
    EvalOutcome, QuadraticBase, StepDown, StepDownPath, SuccessorBase,
};
pub use ordinal::{add, compare, mul_nat, omega_stack, omega_tower, Kind, Ordinal, Term};
pub use ramsey::{chain_check, find_bad_coloring, find_witness, min_witness, ph_holds, sigma, Coloring, PhVerdict};
pub use slow::{cantor_pair, cantor_unpair, f_diamond, f_eps0_inverse, slow_hierarchy_eval};
pub use syntax::{parse, render};
