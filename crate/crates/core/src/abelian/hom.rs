//! Homomorphisms between presented groups and their exact certification.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::group::{dense_from_sparse, GroupReport, PresentedGroup, SparseVec};
use super::lattice::Echelon;
use crate::error::{Error, Result};

/// A homomorphism, checked on every relator of the domain at construction.
#[derive(Clone, Debug)]
pub struct GroupHom {
    domain: Arc<PresentedGroup>,
    codomain: Arc<PresentedGroup>,
    images: Vec<Vec<BigInt>>,
}

impl GroupHom {
    pub fn new(
        domain: Arc<PresentedGroup>,
        codomain: Arc<PresentedGroup>,
        images: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        if images.len() != domain.ngens() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} generators",
                images.len(),
                domain.ngens()
            )));
        }
        if let Some(bad) = images.iter().position(|v| v.len() != codomain.ngens()) {
            return Err(Error::InvalidArgument(format!(
                "image of generator {bad} has the wrong length"
            )));
        }
        let h = GroupHom {
            domain,
            codomain,
            images,
        };
        for (i, r) in h.domain.relators().iter().enumerate() {
            let img = h.apply_sparse(r);
            if !h.codomain.is_zero(&img) {
                let residue = h
                    .codomain
                    .coords(&img)
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                return Err(Error::RelatorViolation { index: i, residue });
            }
        }
        Ok(h)
    }

    pub fn from_sparse_images(
        domain: Arc<PresentedGroup>,
        codomain: Arc<PresentedGroup>,
        images: Vec<SparseVec>,
    ) -> Result<Self> {
        let n = codomain.ngens();
        let dense = images.iter().map(|v| dense_from_sparse(v, n)).collect();
        Self::new(domain, codomain, dense)
    }

    pub fn zero(domain: Arc<PresentedGroup>, codomain: Arc<PresentedGroup>) -> Self {
        let images = vec![vec![BigInt::zero(); codomain.ngens()]; domain.ngens()];
        GroupHom {
            domain,
            codomain,
            images,
        }
    }

    pub fn identity(group: Arc<PresentedGroup>) -> Self {
        let images = (0..group.ngens()).map(|i| group.generator_vector(i)).collect();
        GroupHom {
            domain: group.clone(),
            codomain: group,
            images,
        }
    }

    pub fn domain(&self) -> &Arc<PresentedGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<PresentedGroup> {
        &self.codomain
    }

    pub fn images(&self) -> &[Vec<BigInt>] {
        &self.images
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.domain.ngens());
        let mut out = vec![BigInt::zero(); self.codomain.ngens()];
        for (c, img) in v.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> Vec<BigInt> {
        self.apply(&dense_from_sparse(v, self.domain.ngens()))
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        let images = self.images.iter().map(|v| other.apply(v)).collect();
        GroupHom::new(self.domain.clone(), other.codomain.clone(), images)
    }

    /// Row `t` holds the codomain coordinates of the image of domain slot `t`.
    pub fn coordinate_matrix(&self) -> Vec<Vec<BigInt>> {
        let k = self.domain.nslots();
        (0..k)
            .map(|t| {
                let mut e = vec![BigInt::zero(); k];
                e[t] = BigInt::from(1);
                self.codomain.coords(&self.apply(&self.domain.section(&e)))
            })
            .collect()
    }

    pub fn certify(&self) -> Certificate {
        let a = self.coordinate_matrix();
        let kg = self.domain.nslots();
        let kh = self.codomain.nslots();
        let th = self.codomain.torsion_rows();

        // Kernel: projections of the left kernel of [A; torsion rows of H].
        let mut stacked = a.clone();
        stacked.extend(th.iter().cloned());
        let ech = Echelon::new(&stacked, kh, true);
        let projected: Vec<Vec<BigInt>> = ech.kernel().iter().map(|z| z[..kg].to_vec()).collect();
        let kernel = Subgroup::new(self.domain.clone(), &projected);

        let mut cokernel_rel: Vec<SparseVec> = a.iter().map(|r| super::group::sparse_from_dense(r)).collect();
        cokernel_rel.extend(th.iter().map(|r| super::group::sparse_from_dense(r)));
        let cokernel = PresentedGroup::present((0..kh).map(|i| format!("c{i}")).collect(), cokernel_rel);

        Certificate {
            injective: kernel.group().is_trivial_group(),
            surjective: cokernel.is_trivial_group(),
            kernel,
            cokernel,
        }
    }
}

/// A subgroup of a presented group, given by a lattice of ambient coordinates.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: Arc<PresentedGroup>,
    lattice: Echelon,
    group: PresentedGroup,
}

impl Subgroup {
    /// The subgroup generated by the given coordinate vectors together with
    /// the torsion relations of the ambient group.
    pub fn new(ambient: Arc<PresentedGroup>, generators: &[Vec<BigInt>]) -> Self {
        let k = ambient.nslots();
        let mut rows: Vec<Vec<BigInt>> = generators.to_vec();
        let torsion = ambient.torsion_rows();
        rows.extend(torsion.iter().cloned());
        let basis_ech = Echelon::new(&rows, k, false);
        let basis = basis_ech.basis().to_vec();
        let lattice = Echelon::new(&basis, k, true);
        let relations: Vec<SparseVec> = torsion
            .iter()
            .map(|r| {
                let x = lattice.solve(r).expect("torsion rows lie in the lattice");
                super::group::sparse_from_dense(&x)
            })
            .collect();
        let group = PresentedGroup::present(
            (0..basis.len()).map(|i| format!("s{i}")).collect(),
            relations,
        );
        Subgroup {
            ambient,
            lattice,
            group,
        }
    }

    pub fn group(&self) -> &PresentedGroup {
        &self.group
    }

    pub fn ambient(&self) -> &Arc<PresentedGroup> {
        &self.ambient
    }

    /// Lattice basis, in ambient coordinates.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        self.lattice.basis()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.lattice.contains(&self.ambient.coords(v))
    }

    /// Coordinates of an ambient element over the subgroup generators.
    pub fn express(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        self.lattice.solve(&self.ambient.coords(v))
    }

    /// The ambient element for subgroup generator `i`.
    pub fn generator_element(&self, i: usize) -> Vec<BigInt> {
        self.ambient.section(&self.lattice.basis()[i])
    }

    pub fn report(&self) -> GroupReport {
        self.group.report()
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub injective: bool,
    pub surjective: bool,
    pub kernel: Subgroup,
    pub cokernel: PresentedGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub kernel: GroupReport,
    pub cokernel: GroupReport,
}

impl Certificate {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    pub fn report(&self) -> MapReport {
        MapReport {
            well_defined: true,
            injective: self.injective,
            surjective: self.surjective,
            kernel: self.kernel.report(),
            cokernel: self.cokernel.report(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Junction {
    /// Position of the middle group: between map `index` and map `index + 1`.
    pub index: usize,
    pub composite_zero: bool,
    pub kernel_in_image: bool,
    /// Failing element of the middle group, over its generators.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub junctions: Vec<Junction>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.junctions
            .iter()
            .all(|j| j.composite_zero && j.kernel_in_image)
    }
}

fn stringify(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Checks `im f_i = ker f_{i+1}` at every interior group of the sequence.
pub fn verify_exact(maps: &[&GroupHom]) -> Result<ExactnessReport> {
    let mut junctions = Vec::new();
    for (i, pair) in maps.windows(2).enumerate() {
        let (f, g) = (pair[0], pair[1]);
        if !Arc::ptr_eq(f.codomain(), g.domain()) && f.codomain().generators() != g.domain().generators() {
            return Err(Error::InvalidArgument(format!(
                "maps {i} and {} do not compose",
                i + 1
            )));
        }
        let mid = g.domain();
        let mut witness = None;

        let kf = f.domain().nslots();
        let mut composite_zero = true;
        for t in 0..kf {
            let mut e = vec![BigInt::zero(); kf];
            e[t] = BigInt::from(1);
            let x = f.domain().section(&e);
            let y = f.apply(&x);
            if !g.codomain().is_zero(&g.apply(&y)) {
                composite_zero = false;
                witness = Some(stringify(&y));
                break;
            }
        }

        let mut image_rows = f.coordinate_matrix();
        image_rows.extend(mid.torsion_rows());
        let image = Echelon::new(&image_rows, mid.nslots(), false);
        let cert = g.certify();
        let mut kernel_in_image = true;
        for b in cert.kernel.basis() {
            if !image.contains(b) {
                kernel_in_image = false;
                if witness.is_none() {
                    witness = Some(stringify(&mid.section(b)));
                }
                break;
            }
        }
        junctions.push(Junction {
            index: i,
            composite_zero,
            kernel_in_image,
            witness,
        });
    }
    Ok(ExactnessReport { junctions })
}

/// Checks that `0 -> A -f-> B -g-> C -> 0` is exact.
pub fn verify_short_exact(f: &GroupHom, g: &GroupHom) -> Result<ExactnessReport> {
    let zero_in = GroupHom::zero(Arc::new(PresentedGroup::trivial()), f.domain().clone());
    let zero_out = GroupHom::zero(g.codomain().clone(), Arc::new(PresentedGroup::trivial()));
    verify_exact(&[&zero_in, f, g, &zero_out])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Arc<PresentedGroup> {
        Arc::new(PresentedGroup::cyclic(0))
    }

    fn scalar(dom: Arc<PresentedGroup>, cod: Arc<PresentedGroup>, k: i64) -> Result<GroupHom> {
        GroupHom::new(dom, cod, vec![vec![BigInt::from(k)]])
    }

    #[test]
    fn times_two() {
        let c = scalar(z(), z(), 2).unwrap().certify();
        assert!(c.injective);
        assert!(!c.surjective);
        assert_eq!(c.cokernel.torsion(), vec![BigInt::from(2)]);
    }

    #[test]
    fn zero_into_z2() {
        let z2 = Arc::new(PresentedGroup::cyclic(2));
        let c = GroupHom::zero(z(), z2).certify();
        assert_eq!(c.kernel.group().free_rank(), 1);
        assert_eq!(c.cokernel.torsion(), vec![BigInt::from(2)]);
    }

    #[test]
    fn ill_defined_is_rejected() {
        let z2 = Arc::new(PresentedGroup::cyclic(2));
        let err = scalar(z2, z(), 1).unwrap_err();
        assert!(matches!(err, Error::RelatorViolation { index: 0, .. }));
    }

    #[test]
    fn z_z_z2_sequence() {
        let z2 = Arc::new(PresentedGroup::cyclic(2));
        let (a, b) = (z(), z());
        let f = scalar(a, b.clone(), 2).unwrap();
        let g = scalar(b.clone(), z2.clone(), 1).unwrap();
        assert!(verify_short_exact(&f, &g).unwrap().passed());
        let g3 = scalar(b, z2, 0).unwrap();
        let rep = verify_short_exact(&f, &g3).unwrap();
        assert!(!rep.passed());
    }
}
