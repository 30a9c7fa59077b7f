//! Fitting classes, radicals, Hall subgroups and injectors of finite
//! permutation groups.

pub mod error;
pub mod fitting;
pub mod harness;
pub mod injectors;
pub mod perm;
pub mod primes;

pub use error::{ClassError, FileError, GroupError, HarnessError, InjectorError, ParseError};
pub use fitting::{ClassExpr, HFunction};
pub use perm::{Limits, PermGroup, Permutation, Subgroup, SubgroupSet};
pub use primes::PrimeSet;
