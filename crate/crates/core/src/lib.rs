//! Inverse systems of Artin local algebras and their minimal Gorenstein
//! covers of colength one and two.

pub mod arith;
pub mod groebner;
pub mod apolarity;
pub mod inverse_system;
pub mod integrator;
pub mod mgc;
