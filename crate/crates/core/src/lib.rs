//! Exact-arithmetic verification toolkit for explicit computations with
//! finite projective group actions: cyclotomic scalars, sparse polynomial
//! algebra, matrix-group closures, invariant theory, curve singularity
//! analysis and integer surface ledgers, plus a scenario runner that
//! replays the bundled verification suites.

pub mod cyclo;
pub mod unipoly;
pub mod linalg;
pub mod polyring;
pub mod matgroup;
pub mod invariants;
pub mod curvegeom;
pub mod surfledger;
pub mod catalog;
pub mod scenario;
pub mod report;
