//! The L2A text format: parser, canonical emitter, and conversions to the
//! domain objects.

pub mod convert;
pub mod l2a;

pub use convert::{
    cochain_to_doc, doc_to_2mor, doc_to_cochain, doc_to_complex, doc_to_hom, doc_to_leibniz,
    doc_to_lie2, doc_to_lie_algebra, doc_to_rep, doc_to_uth, hom_to_doc, lie2_to_doc,
};
pub use l2a::{emit, parse, L2aDoc};
