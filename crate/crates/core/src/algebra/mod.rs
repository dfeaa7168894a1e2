//! Presented graded commutative algebras over F_p and bialgebra structures on them.

mod bialgebra;
mod monomial;
mod presentation;
mod report;
mod tensor;

pub use bialgebra::{Bialgebra, Periodic, GROUPLIKE_BOUND};
pub use monomial::Monomial;
pub use presentation::{Element, GeneratorDecl, Presentation, RewriteRule, MAX_BASIS};
#[allow(unused_imports)]
pub(crate) use presentation::{fmt_terms, split_coefficient, split_signed_terms};
pub use report::{Report, Violation, ViolationKind};
pub use tensor::{
    check_tensor, counit_left, counit_right, fmt_tensor, normalize_tensor, parse_tensor, tensor_mul,
    tensor_of, tensor_one, TensorElement, TripleTensor,
};
