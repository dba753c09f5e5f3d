//! The line-per-term text format for exact-rational series.

use num_traits::Zero;

use crate::rational::{frac_string, Rational};
use crate::series::bi::BiSeries;
use crate::series::uni::UniSeries;

impl UniSeries<Rational> {
    /// One line per nonzero term, `"i num/den"`, degrees ascending.
    pub fn term_lines(&self) -> Vec<String> {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{i} {}", frac_string(c)))
            .collect()
    }
}

impl BiSeries<Rational> {
    /// One line per nonzero term, `"a b num/den"`, total degree ascending
    /// and X-degree descending within a degree.
    pub fn term_lines(&self) -> Vec<String> {
        self.nonzero_terms()
            .map(|(a, b, c)| format!("{a} {b} {}", frac_string(c)))
            .collect()
    }
}
