//! The exact sequence `0 → Z/2 ⊗ L_{2n+1} → T̃_{4n-1} → D_{4n-1} → 0`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::eta::{d_group, eta, TensorElement};
use super::groups::{framed_infty, untwist, InftyOptions};
use super::sums::TreeSum;
use crate::abelian::{verify_short_exact, ExactnessReport, GroupHom, GroupReport};
use crate::error::{Error, Result};
use crate::lie::LieSystem;
use crate::trees::{cap_infty, Alphabet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopSequenceReport {
    pub order: usize,
    pub left: GroupReport,
    pub middle: GroupReport,
    pub right: GroupReport,
    pub left_well_defined: bool,
    pub right_well_defined: bool,
    pub exactness: Option<ExactnessReport>,
    pub failure: Option<String>,
}

impl TopSequenceReport {
    pub fn passed(&self) -> bool {
        self.left_well_defined
            && self.right_well_defined
            && self.exactness.as_ref().is_some_and(ExactnessReport::passed)
    }
}

/// Left map `J ↦ J^∞`; right map `η` on trees and `η ∘ untwist` on inf-trees.
pub fn verify_top_sequence(
    order: usize,
    alphabet: Alphabet,
    options: InftyOptions,
    cap: usize,
) -> Result<TopSequenceReport> {
    if order % 4 != 3 {
        return Err(Error::InvalidArgument(format!(
            "the top sequence lives in orders 4n-1, got {order}"
        )));
    }
    // J^∞ has order (order + 1) / 2, so J has degree one more.
    let k = order.div_ceil(2) + 1;
    let sys = LieSystem::new(alphabet);
    let middle = framed_infty(order, alphabet, options, cap)?;
    let left_group = sys.lie_mod2_group(k);
    let d = d_group(order, &sys)?;

    let mut left_images = Vec::new();
    for j in sys.lie.basis_trees(k) {
        let f = cap_infty(&j)?.canonicalize()?;
        left_images.push(middle.vector(&TreeSum::single(&f))?);
    }
    let left = GroupHom::new(left_group.clone(), middle.group().clone(), left_images);

    let mut right_images = Vec::new();
    for t in middle.generators() {
        let e = if t.is_infty() {
            let mut acc = TensorElement::zero(&sys.lie, order);
            for (tree, c) in untwist(t)?.terms() {
                acc = acc.add(&eta(tree, &sys.lie)?.scale(c));
            }
            acc
        } else {
            eta(t, &sys.lie)?
        };
        let x = d.kernel.express(&e.flatten()).ok_or_else(|| {
            Error::Consistency(format!("η({t}) is not in the bracket kernel"))
        })?;
        right_images.push(x);
    }
    let right = GroupHom::new(
        middle.group().clone(),
        Arc::new(d.kernel.group().clone()),
        right_images,
    );

    let mut report = TopSequenceReport {
        order,
        left: left_group.report(),
        middle: middle.report(),
        right: d.group().report(),
        left_well_defined: left.is_ok(),
        right_well_defined: right.is_ok(),
        exactness: None,
        failure: None,
    };
    match (left, right) {
        (Ok(l), Ok(r)) => report.exactness = Some(verify_short_exact(&l, &r)?),
        (Err(e), _) => report.failure = Some(format!("left map: {e}")),
        (_, Err(e)) => report.failure = Some(format!("right map: {e}")),
    }
    Ok(report)
}
