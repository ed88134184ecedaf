//! Library surface of the command line tool. The binary, the integration
//! tests and the corpus generator all go through these two modules so input
//! handling and report shapes cannot drift apart.

pub mod report;
pub mod schema;
