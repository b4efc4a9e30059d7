//! Exact character theory: tables by Dixon's mod-241 method, inner
//! products, plethysms, restriction, induction from subgroups, and
//! eigenvalue multisets, all over Q(zeta_120).

mod character;
mod dixon;
mod modl;

pub use character::{extensions_of, induced_perm_char, CharError, Character};
pub use dixon::character_table;
