//! Reasoning for Standpoint EL+ knowledge bases.
//!
//! The pipeline is [`parser`] → [`normalizer`] → [`preprocessor`] → [`saturation`], driven by
//! [`reasoner`]. [`oracle`] is an independent bounded model finder used for cross-checking, and
//! [`datalog`] emits an equivalent Datalog program.

pub mod datalog;
pub mod kb_model;
pub mod normalizer;
pub mod oracle;
pub mod parser;
pub mod preprocessor;
pub mod reasoner;
pub mod saturation;
