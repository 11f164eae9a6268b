//! Exact Chevalley groups of simply-laced type in minuscule representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`rings`]: exact commutative rings with unit, Bézout and ASR oracles;
//! * [`roots`]: simply-laced root systems, Weyl reflections, subsystems;
//! * [`weights`]: minuscule weight orbits and their labelled Hasse diagrams;
//! * [`group`]: root elements and generator words realized as matrices;
//! * [`matsumoto`]: the `g = v·g1·u` factorization for unit corners;
//! * [`reduction`]: elementary reduction of unimodular columns
//!   (`D_l` vector representation and `E6` 27-dimensional representation);
//! * [`congruence`]: relative elementary subgroup certificates in `E7`.

pub mod rings;
pub mod roots;
pub mod weights;
pub mod group;
pub mod matsumoto;
pub mod random;
pub mod reduction;
pub mod congruence;
