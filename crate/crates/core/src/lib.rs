pub mod classify;
pub mod cli;
pub mod curve;
pub mod error;
pub mod hull;
pub mod linalg;
pub mod matrix;
pub mod polyhedron;
pub mod rational;
pub mod render;
pub mod tropical;

pub use error::{Error, Result};
pub use polyhedron::{Halfspace, Polyhedron};
pub use rational::{RatVector, Rational};
