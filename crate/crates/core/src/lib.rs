//! Ideal-induced local functions on groups, the closure operator and
//! topology they generate, and anti-ideals on rings.

pub mod anti;
pub mod error;
pub mod group;
pub mod ideal;
pub mod int_set;
pub mod lab;
pub mod local;
pub mod pwpoly;
pub mod ring;
pub mod topology;

mod text;

pub use error::{Error, Result};
pub use group::{build_group, FiniteGroup, Homomorphism, Subset};
pub use ideal::{Ambient, AmbientSet, Family, FiniteIdeal, IntIdeal, SetIdeal};
pub use int_set::SemilinearSet;
