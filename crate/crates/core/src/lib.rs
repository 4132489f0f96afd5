//! Exact singularity analysis for circulant 0/1 matrices.
//!
//! A circulant matrix of order `n` is singular exactly when its associated
//! polynomial is divisible by a cyclotomic polynomial `Φ_d` with `d | n`. The
//! crate provides exact polynomial arithmetic ([`poly`]), cyclotomic machinery
//! ([`cyclo`]), the matrix model with determinant oracles ([`circulant`]),
//! recurrent decompositions ([`decomp`]), the constructor of singular
//! weight-`k` matrices for composite `2k + 1` ([`construct`]) and the complete
//! census of singular matrices at `n = 45, k = 22` ([`census`]).

pub mod census;
pub mod cli;
pub mod circulant;
pub mod construct;
pub mod cyclo;
pub mod decomp;
pub mod poly;

/// Support of the singular weight-22 row of order 45, ascending.
pub const E22: [usize; 22] = [
    0, 1, 2, 3, 4, 5, 9, 12, 16, 17, 18, 19, 20, 21, 27, 30, 31, 32, 34, 35, 36, 39,
];
