//! Freely reduced words in a free group.

use std::fmt;

use crate::error::{Error, Result};
use crate::trees::parse::Cursor;
use crate::trees::{Alphabet, Label, RootedTree};

/// A freely reduced word; each letter is `(generator, ±1)` with generators numbered from 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        GroupWord {
            letters: vec![(i, 1)],
        }
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "exponents are ±1");
            if out.last() == Some(&(g, -e)) {
                out.pop();
            } else {
                out.push((g, e));
            }
        }
        GroupWord { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &GroupWord) -> Self {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[u, v] = u v u^-1 v^-1`
    pub fn commutator(u: &GroupWord, v: &GroupWord) -> Self {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    pub fn conjugate_by(&self, c: &GroupWord) -> Self {
        c.mul(self).mul(&c.inverse())
    }

    /// Iterated commutator read off a rooted tree, with leaf label `i` replaced
    /// by `words[i - 1]` (strand labels) or by the alphabet letter (symplectic labels).
    pub fn from_tree(t: &RootedTree, leaf: &impl Fn(Label) -> Result<GroupWord>) -> Result<Self> {
        match t {
            RootedTree::Leaf(l) => leaf(*l),
            RootedTree::Node(a, b) => Ok(Self::commutator(
                &Self::from_tree(a, leaf)?,
                &Self::from_tree(b, leaf)?,
            )),
        }
    }

    /// The commutator whose leaves are the alphabet letters themselves.
    pub fn letter_tree(t: &RootedTree, alphabet: Alphabet) -> Result<Self> {
        Self::from_tree(t, &|l| Ok(GroupWord::generator(alphabet.letter(l)?)))
    }

    /// Parses `x1 x2^-1 [x1,x3]^2 (x2 y1)^-1`; letter names follow the alphabet.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut c = Cursor::new(text);
        let w = parse_word(&mut c, alphabet)?;
        c.finish()?;
        Ok(w)
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let names: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                let name = letter_name(g, alphabet);
                if e < 0 {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect();
        names.join(" ")
    }
}

fn letter_name(g: usize, alphabet: Alphabet) -> String {
    match alphabet {
        Alphabet::Strands(_) => format!("x{}", g + 1),
        Alphabet::Symplectic(_) => alphabet.label(g).to_string(),
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_generator().map_or(1, |g| g + 1) as u32;
        write!(f, "{}", self.display(Alphabet::Strands(n)))
    }
}

fn parse_word(c: &mut Cursor, alphabet: Alphabet) -> Result<GroupWord> {
    let mut w = GroupWord::identity();
    loop {
        match c.peek() {
            None | Some(',') | Some(']') | Some(')') => return Ok(w),
            _ => {}
        }
        let atom = parse_atom(c, alphabet)?;
        let atom = if c.eat('^') {
            let neg = c.eat('-');
            let k = c.number()? as i64;
            atom.pow(if neg { -k } else { k })
        } else {
            atom
        };
        w = w.mul(&atom);
    }
}

fn parse_atom(c: &mut Cursor, alphabet: Alphabet) -> Result<GroupWord> {
    if c.eat('[') {
        let u = parse_word(c, alphabet)?;
        c.expect(',')?;
        let v = parse_word(c, alphabet)?;
        c.expect(']')?;
        return Ok(GroupWord::commutator(&u, &v));
    }
    if c.eat('(') {
        let u = parse_word(c, alphabet)?;
        c.expect(')')?;
        return Ok(u);
    }
    let here = c.save();
    if c.number().is_ok_and(|k| k == 1) {
        return Ok(GroupWord::identity());
    }
    c.restore(here);
    let label = c.label()?;
    let g = match (alphabet, label) {
        (Alphabet::Strands(m), Label::X(i)) if i <= m => (i - 1) as usize,
        (Alphabet::Symplectic(_), l) => alphabet.letter(l)?,
        _ => {
            c.restore(here);
            return Err(Error::Parse {
                position: here,
                message: format!("letter {label} is not in the alphabet {alphabet:?}"),
            });
        }
    };
    Ok(GroupWord::generator(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_parse() {
        let a = Alphabet::Strands(3);
        let w = GroupWord::parse("x1 x2 x2^-1 x3", a).unwrap();
        assert_eq!(w.display(a), "x1 x3");
        let c = GroupWord::parse("[x1,x2]", a).unwrap();
        assert_eq!(c.display(a), "x1 x2 x1^-1 x2^-1");
        assert_eq!(GroupWord::parse("(x1 x2)^-1", a).unwrap().display(a), "x2^-1 x1^-1");
        assert!(GroupWord::parse("1", a).unwrap().is_identity());
        assert!(GroupWord::parse("x4", a).is_err());
        let s = Alphabet::Symplectic(2);
        assert_eq!(GroupWord::parse("y2 x1^-1", s).unwrap().letters(), &[(3, 1), (0, -1)]);
    }
}
