//! The plane Cremona group acting on the space of conics, its dual action,
//! and the induced maps of `ℙ² × ℙ²`.

mod conic;
mod elementary;
mod embed;
mod maps;
mod sample;
mod suites;
mod word;

pub use conic::{conic_action, conic_action_on, conic_index, conic_ring, secant_cubic, symmetric_matrix, CONIC_ENTRIES};
pub use elementary::*;
pub use embed::{chi, phi, phi_dual, psi, psi_of, rho_conjugate, second_factor};
pub use maps::*;
pub use sample::Sampler;
pub use suites::*;
pub use word::{Cr2Word, Generator, Token};
