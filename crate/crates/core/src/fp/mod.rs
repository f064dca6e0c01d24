//! Finitely presented groups: words, presentations, coset enumeration and
//! permutation representations read off coset tables.

mod derive;
mod enumerate;
mod schreier_sims;
mod word;

pub use derive::presentation_of;
pub use enumerate::{todd_coxeter, CosetTable, EnumerationLimits, Strategy, DEFAULT_MAX_COSETS};
pub use schreier_sims::permutation_group_order;
pub use word::{inverse_letter, Letter, Presentation, Word};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// The group of cosets of a table enumerated over the trivial subgroup.
///
/// Coset `0` becomes the identity and the columns of the presentation
/// generators become the right regular action, so element indices are coset
/// numbers. Redundant presentation generators are dropped from the stored
/// generating sequence.
pub fn coset_table_to_group(table: &CosetTable) -> Result<FiniteGroup> {
    if !table.is_complete() {
        return Err(Error::IncompleteTable);
    }
    if table.ncosets() == 1 {
        return Ok(FiniteGroup::trivial());
    }
    let columns: Vec<Vec<u32>> = (0..table.ngens())
        .map(|g| table.permutation(&Word::generator(g)))
        .collect::<Result<_>>()?;
    FiniteGroup::from_right_action("fp", columns)
}

/// Order of the permutation group generated by the coset permutations of `words`.
pub fn permutation_subgroup_order(table: &CosetTable, words: &[Word]) -> Result<u128> {
    if !table.is_complete() {
        return Err(Error::IncompleteTable);
    }
    let perms: Vec<Vec<u32>> = words.iter().map(|w| table.permutation(w)).collect::<Result<_>>()?;
    Ok(permutation_group_order(table.ncosets(), &perms))
}
