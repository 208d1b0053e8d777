//! Text syntax for labels, rooted trees, unitrivalent trees and integer sums.
//!
//! ```text
//! label    := 1 | 2 | ... | x1 | y3 | inf
//! rooted   := label | "(" rooted "," rooted ")" | "[" rooted "," rooted "]"
//! tree     := "<" rooted "," rooted "," rooted ">" | label "-" label
//! sum      := ["-"] term (("+" | "-") term)*
//! term     := [integer "*"] item
//! ```

use num_bigint::BigInt;

use super::label::Label;
use super::rooted::RootedTree;
use super::unitrivalent::UnitrivalentTree;
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }

    pub(crate) fn save(&self) -> usize {
        self.pos
    }

    pub(crate) fn restore(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub(crate) fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        self.text[start..self.pos]
            .parse()
            .or_else(|_| self.error("number out of range"))
    }

    pub(crate) fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        if rest.starts_with("inf") {
            self.pos += 3;
            return Ok(Label::Infinity);
        }
        if rest.starts_with('∞') {
            self.pos += '∞'.len_utf8();
            return Ok(Label::Infinity);
        }
        let kind = self.peek_raw();
        if matches!(kind, Some('x') | Some('y')) {
            self.pos += 1;
        }
        let i = self.number()?;
        let i = u32::try_from(i).or_else(|_| self.error("label index out of range"))?;
        if i == 0 {
            return self.error("label indices start at 1");
        }
        Ok(match kind {
            Some('x') => Label::X(i),
            Some('y') => Label::Y(i),
            _ => Label::Strand(i),
        })
    }

    pub(crate) fn rooted(&mut self) -> Result<RootedTree> {
        let close = match self.peek() {
            Some('(') => ')',
            Some('[') => ']',
            _ => return Ok(RootedTree::Leaf(self.label()?)),
        };
        self.pos += 1;
        let a = self.rooted()?;
        self.expect(',')?;
        let b = self.rooted()?;
        self.expect(close)?;
        Ok(RootedTree::node(a, b))
    }

    pub(crate) fn tree(&mut self) -> Result<UnitrivalentTree> {
        if self.eat('<') {
            let a = self.rooted()?;
            self.expect(',')?;
            let b = self.rooted()?;
            self.expect(',')?;
            let c = self.rooted()?;
            self.expect('>')?;
            return Ok(UnitrivalentTree::tripod(&a, &b, &c));
        }
        let a = self.label()?;
        if !self.eat('-') {
            return self.error("expected '<' or an order-zero tree 'a-b'");
        }
        let b = self.label()?;
        Ok(UnitrivalentTree::graft(&RootedTree::Leaf(a), &RootedTree::Leaf(b)))
    }

    /// Integer combination of items read by `item`.
    pub(crate) fn sum<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T>,
    ) -> Result<Vec<(BigInt, T)>> {
        let mut out = Vec::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let here = self.save();
            let coeff = match self.number() {
                Ok(k) if self.eat('*') => BigInt::from(k),
                _ => {
                    self.restore(here);
                    BigInt::from(1)
                }
            };
            let x = item(self)?;
            out.push((coeff * sign, x));
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }
}

pub fn parse_label(text: &str) -> Result<Label> {
    let mut c = Cursor::new(text);
    let l = c.label()?;
    c.finish()?;
    Ok(l)
}

pub fn parse_rooted(text: &str) -> Result<RootedTree> {
    let mut c = Cursor::new(text);
    let t = c.rooted()?;
    c.finish()?;
    Ok(t)
}

pub fn parse_tree(text: &str) -> Result<UnitrivalentTree> {
    let mut c = Cursor::new(text);
    let t = c.tree()?;
    c.finish()?;
    t.validate()?;
    Ok(t)
}

pub fn parse_tree_sum(text: &str) -> Result<Vec<(BigInt, UnitrivalentTree)>> {
    let mut c = Cursor::new(text);
    let s = c.sum(|c| c.tree())?;
    c.finish()?;
    for (_, t) in &s {
        t.validate()?;
    }
    Ok(s)
}

pub fn parse_rooted_sum(text: &str) -> Result<Vec<(BigInt, RootedTree)>> {
    let mut c = Cursor::new(text);
    let s = c.sum(|c| c.rooted())?;
    c.finish()?;
    Ok(s)
}

/// Sums of `label ⊗ rooted` terms; `@` may stand in for `⊗`.
pub fn parse_tensor_sum(text: &str) -> Result<Vec<(BigInt, Label, RootedTree)>> {
    let mut c = Cursor::new(text);
    let s = c.sum(|c| {
        let l = c.label()?;
        if !c.eat('⊗') {
            c.expect('@')?;
        }
        Ok((l, c.rooted()?))
    })?;
    c.finish()?;
    Ok(s.into_iter().map(|(k, (l, t))| (k, l, t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["1", "x2", "(1,(2,3))", "((y1,x1),inf)"] {
            assert_eq!(parse_rooted(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rooted("[1,[2,3]]").unwrap().to_string(), "(1,(2,3))");
        let t = parse_tree("<1, 3, 2>").unwrap().canonicalize().unwrap();
        assert_eq!((t.tree.to_string(), t.sign), ("<1,2,3>".to_string(), -1));
        assert_eq!(parse_tree("2-1").unwrap().canonicalize().unwrap().tree.to_string(), "1-2");
    }

    #[test]
    fn sums() {
        let s = parse_tree_sum("2*<1,2,3> - 1-2 + <1,1,1>").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[1].0, BigInt::from(-1));
        let r = parse_rooted_sum("-(1,2) + 3*1").unwrap();
        assert_eq!(r[1].0, BigInt::from(3));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_rooted("(1,2"), Err(Error::Parse { position: 4, .. })));
        assert!(parse_label("0").is_err());
        assert!(parse_tree("<1,2>").is_err());
    }
}
