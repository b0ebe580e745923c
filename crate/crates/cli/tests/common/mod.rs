#![allow(dead_code)]

pub mod adjoint_oracle;
pub mod dirac;
pub mod exprgen;
pub mod random;
