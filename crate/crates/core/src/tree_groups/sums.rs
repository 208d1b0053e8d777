use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::trees::{CanonicalForm, CanonicalTree, UnitrivalentTree};

/// Integer combination of canonical trees, with AS signs folded into coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeSum {
    terms: BTreeMap<CanonicalTree, BigInt>,
}

impl TreeSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(form: &CanonicalForm) -> Self {
        let mut s = Self::new();
        s.add_form(form, &BigInt::one());
        s
    }

    pub fn add_form(&mut self, form: &CanonicalForm, k: &BigInt) {
        self.add_canonical(&form.tree, &(k * form.sign));
    }

    pub fn add_canonical(&mut self, tree: &CanonicalTree, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry(tree.clone()).or_insert_with(BigInt::zero);
        *e += k;
        if e.is_zero() {
            self.terms.remove(tree);
        }
    }

    pub fn add_tree(&mut self, t: &UnitrivalentTree, k: &BigInt) -> Result<()> {
        let f = t.canonicalize()?;
        self.add_form(&f, k);
        Ok(())
    }

    pub fn add_sum(&mut self, other: &TreeSum, k: &BigInt) {
        for (t, c) in &other.terms {
            self.add_canonical(t, &(c * k));
        }
    }

    pub fn terms(&self) -> &BTreeMap<CanonicalTree, BigInt> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for TreeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            if c.abs().is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{}*{t}", c.abs())?;
            }
        }
        Ok(())
    }
}
