use crate::error::{Error, Result};

/// Order caps for the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Exact chromatic number.
    pub chromatic: usize,
    /// Subset enumerations (`m_P`, domination numbers, chord covers).
    pub subsets: usize,
    /// Coloring enumerations (`chi_P`, brute-force `chi_td`).
    pub colorings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            chromatic: 16,
            subsets: 20,
            colorings: 16,
        }
    }
}

impl Limits {
    /// Same cap for every routine.
    pub fn uniform(max_order: usize) -> Limits {
        Limits {
            chromatic: max_order,
            subsets: max_order,
            colorings: max_order,
        }
    }

    pub(crate) fn check(limit: usize, routine: &'static str, order: usize) -> Result<()> {
        if order > limit {
            Err(Error::SizeCap {
                routine,
                order,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
