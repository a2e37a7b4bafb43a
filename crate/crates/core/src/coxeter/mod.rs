//! Finite Coxeter groups: construction, cosets, parabolic subgroups and their
//! conjugacy classes.

mod atlas;
mod group;
mod roots;
mod spec;
mod subset;

pub use atlas::{ParabolicAtlas, ParabolicClass, SubsetData, TieBreak};
pub use group::{CoxeterSystem, GroupElement, Side, DEFAULT_ELEMENT_CAP};
pub use spec::{CoxeterSpec, SUPPORTED_TYPES};
pub use subset::{bergeron_cmp, bergeron_descending, SubsetMask};
