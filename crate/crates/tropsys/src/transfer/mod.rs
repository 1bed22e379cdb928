//! Transfer of classical polynomial identities to surpassing relations.

pub mod certify;
pub mod parse;
pub mod sympoly;

pub use certify::{
    render_certificate, reverify, symbolic_det_identity, transfer_check, CertRow, Certificate, DetIdentity,
    EntryCertificate, Refusal, RefusalReason,
};
pub use parse::parse_sym_polys;
pub use sympoly::{sym_adjoint, sym_det, sym_matmul, Monomial, SymPoly};
