//! Enumeration oracle over truncated p-adic fields: coset representatives of
//! `SL_2(O_F)` in `SL_2(F)`, their pairwise distinctness, and the number of
//! cosets inside `S_F(a)`.

pub mod cosets;
pub mod field;

pub use cosets::{
    count_in_s, determinant_is_one, enum_reps, expected_count, rep_count, same_coset,
    transversal_distinctness, CosetRep, CountMethod, DistinctnessReport, RepKind,
    DEFAULT_ENUM_BUDGET,
};
pub use field::{LocalElt, LocalFieldSpec, Valuation};
