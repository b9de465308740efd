//! The Newton-Okounkov simplicial complex of a stratification poset, the
//! integral structure on its maximal simplices, lattice-point sets, and the
//! degree of the embedded Schubert variety.
//!
//! Each maximal chain `C = (τ_r > … > τ_0)` carries the affine map sending
//! `e_{τ_0} ↦ 0` and `e_{τ_j} ↦ Σ_{k=1}^{j} b_k e_k`; its coordinates are the
//! bond-weighted partial sums `b_k (a_k + … + a_r)`, ordered from the bottom
//! bond `b_1` upward. The level-`m` lattice points of the maximal simplex are
//! exactly `(1/m)·LS⁺_{C,λ}(m)`, and the degree of the variety is the sum
//! over maximal chains of the product of bonds — cross-checked here against
//! an exact finite-difference extraction from the dimension counts.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ls_fan;
use crate::strat_poset::{Chain, StratPoset};

/// The order complex of `A_τ`: all chains are faces, the maximal faces are
/// the maximal chains. Faces are stored as descending vertex lists.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    num_vertices: usize,
    faces: Vec<Vec<usize>>,
    maximal_faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the order complex of the poset.
    pub fn order_complex(poset: &StratPoset) -> Self {
        let faces = poset.all_chains();
        let maximal_faces = poset.maximal_chains().into_iter().map(|c| c.elems).collect();
        SimplicialComplex { num_vertices: poset.num_vertices(), faces, maximal_faces }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// All nonempty faces.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal_faces
    }

    /// Homogeneous iff every maximal face has the same dimension.
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.maximal_faces.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Dimension of the complex (`ℓ(τ)` for a stratification poset).
    pub fn dimension(&self) -> usize {
        self.maximal_faces.iter().map(|f| f.len()).max().unwrap_or(1) - 1
    }
}

/// The affine lattice map attached to one maximal chain.
#[derive(Debug, Clone)]
pub struct IntegralStructure {
    chain: Chain,
    /// Integer image of each chain vertex, aligned with `chain.elems`
    /// (descending); coordinates run from the bottom bond upward.
    images: Vec<Vec<BigInt>>,
}

impl IntegralStructure {
    pub fn for_chain(chain: &Chain) -> Self {
        let r = chain.len();
        let mut images = Vec::with_capacity(r + 1);
        for pos in 0..=r {
            // chain.elems[pos] is τ_{r−pos}; its image is Σ_{k=1}^{r−pos} b_k e_k
            // with b_k = chain.bonds[r−k].
            let j = r - pos;
            let mut img = vec![BigInt::zero(); r];
            for k in 1..=j {
                img[k - 1] = chain.bonds[r - k].clone();
            }
            images.push(img);
        }
        IntegralStructure { chain: chain.clone(), images }
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    /// Integer image of the vertex at the given (descending) chain position.
    pub fn vertex_image(&self, pos: usize) -> &[BigInt] {
        &self.images[pos]
    }

    /// Affine extension to barycentric points of the simplex; coordinates are
    /// the partial sums `b_k (a_k + … + a_r)`.
    pub fn embed(&self, barycentric: &[BigRational]) -> Result<Vec<BigRational>> {
        if barycentric.len() != self.chain.elems.len()
            || barycentric.iter().any(|c| c.is_negative())
            || barycentric.iter().fold(BigRational::zero(), |a, c| a + c) != BigRational::one()
        {
            return Err(Error::NotBarycentric);
        }
        let r = self.chain.len();
        let mut out = vec![BigRational::zero(); r];
        for (pos, c) in barycentric.iter().enumerate() {
            for (slot, img) in out.iter_mut().zip(&self.images[pos]) {
                *slot += c * BigRational::from(img.clone());
            }
        }
        Ok(out)
    }
}

/// Dehy embedding of a barycentric point of the simplex of `chain`,
/// coordinates aligned with `chain.elems` (descending).
pub fn dehy_embed(chain: &Chain, point: &[BigRational]) -> Result<Vec<BigRational>> {
    IntegralStructure::for_chain(chain).embed(point)
}

/// The level-`m` lattice points `{v ∈ Δ_C : m·i(v) ∈ ℤ^r}` of the maximal
/// simplex of `chain`, enumerated from the integrality of the embedded
/// coordinates. Points are barycentric, aligned with `chain.elems`, and
/// equal `{a/m : a ∈ LS⁺_{C,λ}(m)}`.
pub fn lattice_points(chain: &Chain, m: u64) -> Vec<Vec<BigRational>> {
    face_lattice_points(chain, &chain.elems.clone(), m).into_iter().collect()
}

/// Lattice points of the subsimplex spanned by `face` (a descending subset
/// of `chain.elems`) under the integral structure restricted from `chain`.
/// Points are barycentric on `face`.
pub fn face_lattice_points(
    chain: &Chain,
    face: &[usize],
    m: u64,
) -> BTreeSet<Vec<BigRational>> {
    let mut out = BTreeSet::new();
    if m == 0 || face.is_empty() {
        return out;
    }
    debug_assert!(face.iter().all(|v| chain.contains(*v)));
    let positions: Vec<usize> = face
        .iter()
        .map(|v| chain.elems.iter().position(|e| e == v).expect("face lies on chain"))
        .collect();
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]), "face must descend");
    // Between consecutive face members, the cumulative coordinate from the
    // top is constant; integrality of m·i(v) there means it lies on the grid
    // of the gcd of the chain bonds spanned by the gap.
    let mut grids: Vec<BigInt> = Vec::new();
    for w in positions.windows(2) {
        let mut g = BigInt::zero();
        for k in w[0]..w[1] {
            g = num_integer::gcd(g, chain.bonds[k].clone());
        }
        grids.push(g * BigInt::from(m));
    }
    // Chain bonds below the last face member only see the full mass 1, whose
    // scaled coordinate m·b_k is integral; nothing to check there.
    let p = face.len();
    let mut cums: Vec<BigRational> = Vec::new();
    enumerate_cums(&grids, p, &mut cums, &mut out);
    out
}

/// Nondecreasing cumulative coordinates on the given grids, completed to
/// barycentric points.
fn enumerate_cums(
    grids: &[BigInt],
    p: usize,
    cums: &mut Vec<BigRational>,
    out: &mut BTreeSet<Vec<BigRational>>,
) {
    let k = cums.len();
    if k == p - 1 {
        let mut point = Vec::with_capacity(p);
        let mut prev = BigRational::zero();
        for c in cums.iter() {
            point.push(c - &prev);
            prev = c.clone();
        }
        point.push(BigRational::one() - prev);
        out.insert(point);
        return;
    }
    let lo = if k == 0 { BigRational::zero() } else { cums[k - 1].clone() };
    let g = &grids[k];
    if g.is_zero() {
        // No condition on this gap (cannot happen on strict chains).
        return;
    }
    let gr = BigRational::from(g.clone());
    let mut j = (&lo * &gr).ceil().to_integer();
    loop {
        let c = BigRational::new(j.clone(), g.clone());
        if c > BigRational::one() {
            break;
        }
        cums.push(c);
        enumerate_cums(grids, p, cums, out);
        cums.pop();
        j += 1;
    }
}

/// Degree of the embedded Schubert variety: the sum over all maximal chains
/// of the product of the bonds along the chain.
pub fn degree(poset: &StratPoset) -> BigInt {
    let mut total = BigInt::zero();
    for chain in poset.maximal_chains() {
        total += chain.bond_product();
    }
    total
}

/// Independent extraction of the degree from dimension counts: the counts
/// are a polynomial in `m` of degree `r = ℓ(τ)`, and the degree equals `r!`
/// times its leading coefficient, computed by exact divided differences.
///
/// Needs at least `r+1` distinct sample values of `m`; any extra samples
/// must be consistent (higher divided differences vanish), otherwise
/// [`Error::NonPolynomialData`] is returned.
pub fn degree_via_hilbert(poset: &StratPoset, samples: &[u64]) -> Result<BigInt> {
    let r = poset.rank_of(poset.tau_index());
    let distinct: BTreeSet<u64> = samples.iter().copied().collect();
    if distinct.len() < r + 1 || distinct.len() != samples.len() {
        return Err(Error::InsufficientSamples);
    }
    let xs: Vec<BigRational> =
        samples.iter().map(|&m| BigRational::from(BigInt::from(m))).collect();
    let mut dd: Vec<BigRational> = ls_fan::count_fan_many(poset, samples)
        .into_iter()
        .map(|c| BigRational::from(BigInt::from(c)))
        .collect();
    // dd[i] holds the divided difference f[x_i, …, x_{i+order}].
    let mut leading = None;
    for order in 1..samples.len() {
        for i in 0..(samples.len() - order) {
            dd[i] = (&dd[i + 1] - &dd[i]) / (&xs[i + order] - &xs[i]);
        }
        dd.truncate(samples.len() - order);
        if order == r {
            leading = Some(dd[0].clone());
        }
        if order > r && !dd.iter().all(|d| d.is_zero()) {
            return Err(Error::NonPolynomialData);
        }
    }
    let leading = match leading {
        Some(l) => l,
        // r = 0: the constant count itself.
        None => dd[0].clone(),
    };
    let mut factorial = BigInt::one();
    for k in 2..=r {
        factorial *= BigInt::from(k);
    }
    let degree = leading * BigRational::from(factorial);
    if !degree.is_integer() || !degree.numer().is_positive() {
        return Err(Error::NonPolynomialData);
    }
    Ok(degree.to_integer())
}
