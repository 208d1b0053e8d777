//! The root-sum map `η`, bracket maps, and the kernels `D_n`, `D'_n`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::groups::TreeGroup;
use crate::abelian::group::SparseVec;
use crate::abelian::{GroupHom, PresentedGroup, Subgroup};
use crate::error::{Error, Result};
use crate::lie::{FreeLie, LieElement, LieSystem, QuasiLieElement};
use crate::trees::{CanonicalTree, RootedTree};

/// An element of `L_1 ⊗ L_{n+1}`: one component in `L_{n+1}` per letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub degree: usize,
    pub components: Vec<LieElement>,
}

impl TensorElement {
    pub fn zero(lie: &FreeLie, n: usize) -> Self {
        TensorElement {
            degree: n,
            components: (0..lie.letters()).map(|_| lie.zero(n + 1)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LieElement::is_zero)
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        TensorElement {
            degree: self.degree,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> TensorElement {
        TensorElement {
            degree: self.degree,
            components: self.components.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// Exact division by two; fails if some coefficient is odd.
    pub fn halve(&self) -> Result<TensorElement> {
        let two = BigInt::from(2);
        let mut out = self.clone();
        for c in out.components.iter_mut().flat_map(|e| e.coeffs.iter_mut()) {
            let (q, r) = c.div_rem(&two);
            if !r.is_zero() {
                return Err(Error::InvalidArgument("tensor is not divisible by 2".into()));
            }
            *c = q;
        }
        Ok(out)
    }

    /// Coefficients indexed `letter * rank + basis index`.
    pub fn flatten(&self) -> Vec<BigInt> {
        self.components.iter().flat_map(|e| e.coeffs.iter().cloned()).collect()
    }

    pub fn from_flat(lie: &FreeLie, n: usize, v: &[BigInt]) -> TensorElement {
        let r = lie.rank(n + 1);
        TensorElement {
            degree: n,
            components: (0..lie.letters())
                .map(|i| LieElement {
                    degree: n + 1,
                    coeffs: v[i * r..(i + 1) * r].to_vec(),
                })
                .collect(),
        }
    }

    /// Parses `1⊗(2,3) - 2⊗(1,3) + ...`; all rooted trees must have the same size.
    pub fn parse(text: &str, lie: &FreeLie) -> Result<TensorElement> {
        let terms = crate::trees::parse_tensor_sum(text)?;
        let n = terms[0].2.num_leaves();
        let mut out = TensorElement::zero(lie, n - 1);
        for (k, l, t) in terms {
            if t.num_leaves() != n {
                return Err(Error::InvalidArgument("tensor terms have mixed degrees".into()));
            }
            let i = lie.alphabet().letter(l)?;
            out.components[i] = out.components[i].add(&lie.tree(&t)?.scale(&k));
        }
        Ok(out)
    }

    pub fn display(&self, lie: &FreeLie) -> String {
        let basis = lie.basis_trees(self.degree + 1);
        let labels = lie.alphabet().labels();
        let mut parts = Vec::new();
        for (i, comp) in self.components.iter().enumerate() {
            for (w, c) in comp.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let coeff = if c.is_one() {
                    String::new()
                } else if *c == -BigInt::one() {
                    "-".into()
                } else {
                    format!("{c}*")
                };
                parts.push(format!("{coeff}{}⊗{}", labels[i], basis[w]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

/// An element of `L_1 ⊗ L'_{n+1}`, components as vectors over the symbols of `L'_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTensor {
    pub degree: usize,
    pub components: Vec<Vec<BigInt>>,
}

impl QuasiTensor {
    pub fn flatten(&self) -> Vec<BigInt> {
        self.components.iter().flatten().cloned().collect()
    }
}

/// `η(t) = Σ_v ℓ(v) ⊗ T_v(t)`.
pub fn eta(t: &CanonicalTree, lie: &FreeLie) -> Result<TensorElement> {
    let n = t.order();
    let mut out = TensorElement::zero(lie, n);
    for (label, tv) in t.rootings() {
        let i = lie.alphabet().letter(label)?;
        out.components[i] = out.components[i].add(&lie.tree(&tv)?);
    }
    Ok(out)
}

fn symbol_vector(sys: &LieSystem, t: &RootedTree) -> Result<Vec<BigInt>> {
    match t {
        RootedTree::Leaf(l) => {
            let mut v = vec![BigInt::zero(); sys.lie.letters()];
            v[sys.alphabet().letter(*l)?] = BigInt::one();
            Ok(v)
        }
        _ => sys.quasi.tree_vector(t),
    }
}

/// `η'(t)`: the same root sum, evaluated in the quasi-Lie algebra.
pub fn eta_quasi(t: &CanonicalTree, sys: &LieSystem) -> Result<QuasiTensor> {
    let n = t.order();
    let width = sys.quasi.group(n + 1).ngens();
    let mut comps = vec![vec![BigInt::zero(); width]; sys.lie.letters()];
    for (label, tv) in t.rootings() {
        let i = sys.alphabet().letter(label)?;
        for (o, x) in comps[i].iter_mut().zip(symbol_vector(sys, &tv)?) {
            *o += x;
        }
    }
    Ok(QuasiTensor {
        degree: n,
        components: comps,
    })
}

/// `Σ_i [x_i, e_i]` in `L_{n+2}`.
pub fn bracket_map(e: &TensorElement, lie: &FreeLie) -> LieElement {
    let mut out = lie.zero(e.degree + 2);
    for (i, comp) in e.components.iter().enumerate() {
        out = out.add(&lie.bracket(&lie.generator(i), comp));
    }
    out
}

/// `Σ_i [x_i, e_i]` in `L'_{n+2}`.
pub fn bracket_map_quasi(e: &QuasiTensor, sys: &LieSystem) -> QuasiLieElement {
    let n = e.degree;
    let q = &sys.quasi;
    let mut v = vec![BigInt::zero(); q.group(n + 2).ngens()];
    for (i, comp) in e.components.iter().enumerate() {
        let c = q.element(n + 1, comp);
        for (o, x) in v.iter_mut().zip(q.bracket_vector(&q.generator(i), &c)) {
            *o += x;
        }
    }
    q.element(n + 2, &v)
}

/// The kernel of a bracket map, as a subgroup of its ambient tensor group.
#[derive(Clone, Debug)]
pub struct DGroup {
    pub degree: usize,
    pub quasi: bool,
    pub bracket: GroupHom,
    pub kernel: Subgroup,
}

impl DGroup {
    pub fn ambient(&self) -> &Arc<PresentedGroup> {
        self.bracket.domain()
    }

    pub fn group(&self) -> &PresentedGroup {
        self.kernel.group()
    }

    pub fn rank(&self) -> usize {
        self.kernel.group().free_rank()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.kernel.contains(v)
    }
}

/// `D_n = ker(L_1 ⊗ L_{n+1} → L_{n+2})`.
pub fn d_group(n: usize, sys: &LieSystem) -> Result<DGroup> {
    let lie = &sys.lie;
    let r = lie.rank(n + 1);
    let labels = lie.alphabet().labels();
    let basis = lie.basis_trees(n + 1);
    let mut names = Vec::new();
    let mut images = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        for (w, b) in basis.iter().enumerate() {
            names.push(format!("{l}⊗{b}"));
            images.push(lie.bracket(&lie.generator(i), &lie.basis_element(n + 1, w)).coeffs);
        }
    }
    debug_assert_eq!(names.len(), labels.len() * r);
    let ambient = Arc::new(PresentedGroup::free(names));
    let bracket = GroupHom::new(ambient, sys.lie_group(n + 2), images)?;
    let kernel = bracket.certify().kernel;
    Ok(DGroup {
        degree: n,
        quasi: false,
        bracket,
        kernel,
    })
}

/// `D'_n = ker(L_1 ⊗ L'_{n+1} → L'_{n+2})`.
pub fn d_group_quasi(n: usize, sys: &LieSystem) -> Result<DGroup> {
    let q = &sys.quasi;
    let inner = q.group(n + 1);
    let width = inner.ngens();
    let labels = sys.alphabet().labels();
    let mut names = Vec::new();
    let mut relators: Vec<SparseVec> = Vec::new();
    let mut images = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        for (s, name) in inner.generators().iter().enumerate() {
            names.push(format!("{l}⊗{name}"));
            let c = q.element(n + 1, &inner.generator_vector(s));
            images.push(q.bracket_vector(&q.generator(i), &c));
        }
        for r in inner.relators() {
            relators.push(r.iter().map(|(k, x)| (i * width + k, x.clone())).collect());
        }
    }
    let ambient = Arc::new(PresentedGroup::present(names, relators));
    let bracket = GroupHom::new(ambient, q.group(n + 2), images)?;
    let kernel = bracket.certify().kernel;
    Ok(DGroup {
        degree: n,
        quasi: true,
        bracket,
        kernel,
    })
}

/// `η_n: T_n → D_n`, or `η'_n: T_n → D'_n` when `quasi`.
pub fn eta_hom(t: &TreeGroup, d: &DGroup, sys: &LieSystem) -> Result<GroupHom> {
    let mut images = Vec::new();
    for tree in t.generators() {
        let v = if d.quasi {
            eta_quasi(tree, sys)?.flatten()
        } else {
            eta(tree, &sys.lie)?.flatten()
        };
        let x = d.kernel.express(&v).ok_or_else(|| {
            Error::Consistency(format!("η({tree}) does not lie in the bracket kernel"))
        })?;
        images.push(x);
    }
    GroupHom::new(t.group().clone(), Arc::new(d.kernel.group().clone()), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_tree, Alphabet};

    #[test]
    fn eta_of_y_tree() {
        let sys = LieSystem::new(Alphabet::Strands(3));
        let t = parse_tree("<1,2,3>").unwrap().canonicalize().unwrap().tree;
        let e = eta(&t, &sys.lie).unwrap();
        assert_eq!(e.display(&sys.lie), "1⊗(2,3) - 2⊗(1,3) + 3⊗(1,2)");
        assert!(bracket_map(&e, &sys.lie).is_zero());
        assert_eq!(TensorElement::parse("1⊗(2,3) - 2@(1,3) + 3⊗(1,2)", &sys.lie).unwrap(), e);
    }

    #[test]
    fn eta_order_zero() {
        let sys = LieSystem::new(Alphabet::Strands(2));
        let t = parse_tree("1-2").unwrap().canonicalize().unwrap().tree;
        assert_eq!(eta(&t, &sys.lie).unwrap().display(&sys.lie), "1⊗2 + 2⊗1");
    }

    #[test]
    fn d_ranks() {
        let sys = LieSystem::new(Alphabet::Strands(2));
        assert_eq!(d_group(2, &sys).unwrap().rank(), 1);
        assert_eq!(d_group(3, &sys).unwrap().rank(), 0);
    }
}
