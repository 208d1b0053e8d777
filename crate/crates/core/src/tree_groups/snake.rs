//! The connecting map `sℓ_{2n}: D_{2n} → Z/2 ⊗ L_{n+1}`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::eta::{bracket_map, TensorElement};
use crate::abelian::Echelon;
use crate::error::{Error, Result};
use crate::lie::{LieElement, LieSystem};
use crate::trees::{RootedTree, UnitrivalentTree};

/// Lifts `d` to `L_1 ⊗ L'_{2n+1}`, brackets into `L'_{2n+2}`, and returns the
/// unique `a` in `Z/2 ⊗ L_{n+1}` with `sq(a)` equal to the result.
pub fn sl_map(d: &TensorElement, sys: &LieSystem) -> Result<LieElement> {
    let deg = d.degree;
    if !deg.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "the connecting map is defined on even degrees, got {deg}"
        )));
    }
    let k = deg / 2 + 1;
    if !bracket_map(d, &sys.lie).is_zero() {
        return Err(Error::Precondition("element is not in the bracket kernel".into()));
    }
    let q = &sys.quasi;
    let top = q.group(deg + 2);
    let mut v = vec![BigInt::zero(); top.ngens()];
    for (i, comp) in d.components.iter().enumerate() {
        let lifted = sys.lie_to_quasi_odd(comp)?;
        for (o, x) in v.iter_mut().zip(q.bracket_vector(&q.generator(i), &lifted)) {
            *o += x;
        }
    }
    let target = top.coords(&v);

    let r = sys.lie.rank(k);
    let mut rows: Vec<Vec<BigInt>> = (0..r)
        .map(|w| top.coords(&sys.sq_vector(&sys.lie.basis_element(k, w))))
        .collect();
    let torsion = top.torsion_rows();
    rows.extend(torsion);
    let ech = Echelon::new(&rows, top.nslots(), true);
    let x = ech.solve(&target).ok_or_else(|| {
        Error::Consistency("bracket of the lift is not a square".into())
    })?;
    Ok(LieElement {
        degree: k,
        coeffs: x[..r].to_vec(),
    }
    .mod2())
}

/// `½ η(J −− J) = Σ_{v ∈ J} ℓ(v) ⊗ (J −− J)_v`.
pub fn half_eta_doubled(j: &RootedTree, sys: &LieSystem) -> Result<TensorElement> {
    let lie = &sys.lie;
    let (jj, from_j) = UnitrivalentTree::graft_marked(j, j);
    let n = 2 * j.order() + 1;
    let mut out = TensorElement::zero(lie, n - 1);
    for v in from_j {
        let i = lie.alphabet().letter(jj.label(v).unwrap())?;
        out.components[i] = out.components[i].add(&lie.tree(&jj.root_at(v)?)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_rooted, Alphabet};

    #[test]
    fn recovers_j() {
        let sys = LieSystem::new(Alphabet::Strands(2));
        let j = parse_rooted("(1,2)").unwrap();
        let d = half_eta_doubled(&j, &sys).unwrap();
        assert_eq!(sl_map(&d, &sys).unwrap(), sys.lie.tree(&j).unwrap().mod2());
        let z = TensorElement::zero(&sys.lie, 2);
        assert!(sl_map(&z, &sys).unwrap().is_zero());
    }
}
