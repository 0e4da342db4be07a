//! Finite fields GF(p^a) and the primitive-element machinery behind the
//! long-cycle constructions.

pub mod arith;
pub mod cubic;
mod field;
mod hypj;
pub mod poly;

pub use field::{make_field, Field, FieldElement, FieldSpec, MAX_FIELD_ORDER};
pub use hypj::{
    certificate_record, certify, consecutive_primitive_pair, gamma_map, gamma_prime_map, hypothesis_j_search, CertificateRecord,
    CertificateRoute, HypothesisJCertificate, RecordRoute,
};
