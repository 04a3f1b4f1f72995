#![no_std]
//! Exact symbolic calculus for rational maps between projective,
//! multi-projective and affine spaces over the rationals, with the named
//! plane Cremona constructions acting on the space of conics.

extern crate alloc;

pub mod exactpoly;
pub mod birmap;
pub mod report;
pub mod gizatullin;
pub mod volforms;
pub mod codim1;
