use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A leaf label: a strand index, a symplectic symbol, or the twist marker `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Strand(u32),
    X(u32),
    Y(u32),
    Infinity,
}

impl Label {
    fn key(&self) -> (u8, u32, u8) {
        match *self {
            Label::Strand(i) => (0, i, 0),
            Label::X(i) => (1, i, 0),
            Label::Y(i) => (1, i, 1),
            Label::Infinity => (2, 0, 0),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Label::Infinity)
    }

    pub fn is_symplectic(&self) -> bool {
        matches!(self, Label::X(_) | Label::Y(_))
    }

    pub fn is_strand(&self) -> bool {
        matches!(self, Label::Strand(_))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Strand(i) => write!(f, "{i}"),
            Label::X(i) => write!(f, "x{i}"),
            Label::Y(i) => write!(f, "y{i}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

/// The ordinary labels available to a computation.
///
/// Letters are numbered from 0 in label order; for symplectic alphabets the
/// order is x1 < y1 < x2 < y2 < ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    Strands(u32),
    Symplectic(u32),
}

impl Alphabet {
    pub fn size(&self) -> usize {
        match *self {
            Alphabet::Strands(m) => m as usize,
            Alphabet::Symplectic(g) => 2 * g as usize,
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }

    pub fn label(&self, letter: usize) -> Label {
        assert!(letter < self.size(), "letter {letter} outside the alphabet");
        let i = letter as u32;
        match self {
            Alphabet::Strands(_) => Label::Strand(i + 1),
            Alphabet::Symplectic(_) => {
                if i.is_multiple_of(2) {
                    Label::X(i / 2 + 1)
                } else {
                    Label::Y(i / 2 + 1)
                }
            }
        }
    }

    pub fn letter(&self, label: Label) -> Result<usize> {
        let out = match (self, label) {
            (Alphabet::Strands(m), Label::Strand(i)) if i >= 1 && i <= *m => i as usize - 1,
            (Alphabet::Symplectic(g), Label::X(i)) if i >= 1 && i <= *g => 2 * (i as usize - 1),
            (Alphabet::Symplectic(g), Label::Y(i)) if i >= 1 && i <= *g => 2 * (i as usize - 1) + 1,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "label {label} is not in the alphabet {self:?}"
                )))
            }
        };
        Ok(out)
    }

    pub fn contains(&self, label: Label) -> bool {
        self.letter(label).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_order() {
        let a = Alphabet::Symplectic(2);
        let ls = a.labels();
        assert_eq!(ls, vec![Label::X(1), Label::Y(1), Label::X(2), Label::Y(2)]);
        let mut sorted = ls.clone();
        sorted.sort();
        assert_eq!(sorted, ls);
        for (i, l) in ls.iter().enumerate() {
            assert_eq!(a.letter(*l).unwrap(), i);
        }
        assert!(Label::Strand(9) < Label::Infinity);
    }
}
