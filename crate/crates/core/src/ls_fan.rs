//! The Lakshmibai-Seshadri fan of monoids `LS_λ⁺` over a stratification
//! poset, LS-paths and the `Θ` bijection, the partial order `⊵`, standard
//! sums with their unique decomposition, and the fan-algebra product.
//!
//! A fan element is a sparse nonnegative rational vector on the vertices of
//! `A_τ`. Membership in `LS_λ⁺` means: the support is a chain, the degree is
//! an integer, and for each consecutive support pair the cumulative
//! coefficient from the top is a `d` making the two elements joined by a
//! `(d,λ)`-chain — equivalently, all the bond-weighted partial sums along any
//! maximal chain through the support are integers. Chain independence of the
//! verdict is Dehy's theorem; the test suite checks it exhaustively.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::RationalWeight;
use crate::strat_poset::{Chain, StratPoset};

/// A nonnegative rational vector on the vertices of `A_τ` with sparse
/// support. Zero coefficients are never stored; the degree (coefficient sum)
/// is cached.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FanElement {
    coeffs: BTreeMap<usize, BigRational>,
    degree: BigRational,
}

impl FanElement {
    /// The zero vector — the degree-0 identity of the fan algebra, distinct
    /// from the algebra's `Zero` product result.
    pub fn zero() -> Self {
        FanElement { coeffs: BTreeMap::new(), degree: BigRational::zero() }
    }

    /// The unit vector `e_v`.
    pub fn unit(v: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(v, BigRational::one());
        FanElement { coeffs, degree: BigRational::one() }
    }

    /// Builds an element from (vertex, coefficient) pairs. Coefficients must
    /// be nonnegative; zeros are dropped, repeated vertices accumulate.
    pub fn from_coeffs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut coeffs: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (v, c) in pairs {
            if c.is_negative() {
                return Err(Error::NotFanMember);
            }
            if c.is_zero() {
                continue;
            }
            *coeffs.entry(v).or_insert_with(BigRational::zero) += c;
        }
        let degree = coeffs.values().fold(BigRational::zero(), |acc, c| acc + c);
        Ok(FanElement { coeffs, degree })
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, v: usize) -> BigRational {
        self.coeffs.get(&v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> &BigRational {
        &self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Support sorted descending by length (ties by vertex index, which can
    /// only occur for non-thin elements).
    pub fn support_desc(&self, poset: &StratPoset) -> Vec<usize> {
        let mut supp: Vec<usize> = self.coeffs.keys().copied().collect();
        supp.sort_by_key(|&v| (core::cmp::Reverse(poset.rank_of(v)), v));
        supp
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &FanElement) -> FanElement {
        let mut coeffs = self.coeffs.clone();
        for (v, c) in &other.coeffs {
            *coeffs.entry(*v).or_insert_with(BigRational::zero) += c;
        }
        FanElement { coeffs, degree: &self.degree + &other.degree }
    }

    /// Scales every coefficient by a nonnegative rational.
    pub fn scaled(&self, k: &BigRational) -> FanElement {
        debug_assert!(!k.is_negative());
        if k.is_zero() {
            return FanElement::zero();
        }
        FanElement {
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, c * k)).collect(),
            degree: &self.degree * k,
        }
    }
}

/// An LS-path, stored as the support in decreasing Bruhat order together
/// with the aligned, strictly increasing sequence of rationals ending in 1
/// (the leading 0 of the textbook notation is implicit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsPath {
    /// `σ_p > σ_{p−1} > … > σ_1`, as poset vertex indices.
    pub sigmas: Vec<usize>,
    /// `d_p < d_{p−1} < … < d_1 = 1`, aligned with `sigmas`.
    pub ds: Vec<BigRational>,
}

/// Verdict of the triangle comparison `⊵`; the order is genuinely partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Result of the fan-algebra product: either the sum of the two exponents or
/// the distinguished zero of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanProduct {
    Product(FanElement),
    Zero,
}

impl FanProduct {
    pub fn is_zero(&self) -> bool {
        matches!(self, FanProduct::Zero)
    }

    pub fn element(&self) -> Option<&FanElement> {
        match self {
            FanProduct::Product(e) => Some(e),
            FanProduct::Zero => None,
        }
    }
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Is one (equivalently every) saturated chain from `kappa` down to `sigma`
/// a `(d, λ)`-chain, i.e. is `d·⟨κ_i(λ), β_i∨⟩` integral at every cover?
///
/// Errors with [`Error::Incomparable`] when `sigma ≰ kappa`.
pub fn is_d_chain(
    poset: &StratPoset,
    kappa: usize,
    sigma: usize,
    d: &BigRational,
) -> Result<bool> {
    if kappa == sigma {
        return Ok(true);
    }
    let Some(g) = poset.chain_bond_gcd(kappa, sigma) else {
        return Err(Error::Incomparable);
    };
    Ok((d * BigRational::from(g)).is_integer())
}

/// Membership in the fan of monoids `LS_λ⁺`.
pub fn in_fan(poset: &StratPoset, a: &FanElement) -> bool {
    if a.is_zero() {
        return true;
    }
    if !a.degree().is_integer() {
        return false;
    }
    let supp = a.support_desc(poset);
    // The support must be a chain.
    for w in supp.windows(2) {
        if !poset.is_less(w[1], w[0]) {
            return false;
        }
    }
    // Between consecutive support elements, the cumulative coefficient from
    // the top must give a (d,λ)-chain. Below the minimum the cumulative sum
    // is the (integral) degree, which satisfies every bond condition.
    let mut cum = BigRational::zero();
    for w in supp.windows(2) {
        cum += a.coeff(w[0]);
        match is_d_chain(poset, w[0], w[1], &cum) {
            Ok(true) => {}
            _ => return false,
        }
    }
    true
}

/// `weight(a) = Σ_κ a_κ κ(λ)` as an exact rational weight.
pub fn weight_of(poset: &StratPoset, a: &FanElement) -> RationalWeight {
    let mut w = RationalWeight::zero(poset.cartan().rank());
    for (v, c) in a.coeffs() {
        w = w.add_scaled(c, poset.lambda_image(*v));
    }
    w
}

/// The grid `{ k/g : k ∈ ℤ } ∩ (0, bound)`, increasing.
fn grid_below(g: &BigInt, bound: &BigRational) -> Vec<BigRational> {
    let gr = BigRational::from(g.clone());
    let top = bound * &gr;
    let mut kmax = top.floor().to_integer();
    if top.is_integer() {
        kmax -= 1;
    }
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while k <= kmax {
        out.push(BigRational::new(k.clone(), g.clone()));
        k += 1;
    }
    out
}

/// All elements of `LS_λ⁺` of degree `m`, in the canonical listing order
/// (the refinement of `⊵` from [`listing_cmp`]).
///
/// The enumeration walks support chains bottom-up; the cumulative mass above
/// each support element must lie on the grid determined by the bond gcd of
/// the next consecutive pair, so every element is produced exactly once.
pub fn enumerate_fan(poset: &StratPoset, m: u64) -> Vec<FanElement> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(FanElement::zero());
        return out;
    }
    let total = rat(m);
    let n = poset.num_vertices();
    let mut acc: Vec<(usize, BigRational)> = Vec::new();
    for bottom in 0..n {
        grow(poset, bottom, &total, &mut acc, &mut out);
    }
    sort_canonical(poset, &mut out);
    out
}

/// `sigma` carries mass `mass` together with everything above it; `acc`
/// holds the coefficients already fixed strictly below `sigma`.
fn grow(
    poset: &StratPoset,
    sigma: usize,
    mass: &BigRational,
    acc: &mut Vec<(usize, BigRational)>,
    out: &mut Vec<FanElement>,
) {
    // Stop here: sigma is the top of the support.
    {
        let mut pairs = acc.clone();
        pairs.push((sigma, mass.clone()));
        out.push(FanElement::from_coeffs(pairs).expect("positive coefficients"));
    }
    for upper in 0..poset.num_vertices() {
        if !poset.is_less(sigma, upper) {
            continue;
        }
        let g = poset.chain_bond_gcd(upper, sigma).expect("comparable");
        for above in grid_below(&g, mass) {
            acc.push((sigma, mass - &above));
            grow(poset, upper, &above, acc, out);
            acc.pop();
        }
    }
}

/// `|LS_λ⁺(m)|` without materializing the elements (memoized count over the
/// same recursion as [`enumerate_fan`]).
pub fn count_fan(poset: &StratPoset, m: u64) -> BigUint {
    count_fan_many(poset, &[m]).pop().expect("one sample")
}

/// Counts `|LS_λ⁺(m)|` for several degrees at once; the recursion does not
/// depend on the total degree, so the memo table is shared.
pub fn count_fan_many(poset: &StratPoset, samples: &[u64]) -> Vec<BigUint> {
    let mut memo: BTreeMap<(usize, BigRational), BigUint> = BTreeMap::new();
    samples
        .iter()
        .map(|&m| {
            if m == 0 {
                return BigUint::one();
            }
            let total = rat(m);
            let mut sum = BigUint::zero();
            for bottom in 0..poset.num_vertices() {
                sum += count_from(poset, bottom, &total, &mut memo);
            }
            sum
        })
        .collect()
}

fn count_from(
    poset: &StratPoset,
    sigma: usize,
    mass: &BigRational,
    memo: &mut BTreeMap<(usize, BigRational), BigUint>,
) -> BigUint {
    if let Some(c) = memo.get(&(sigma, mass.clone())) {
        return c.clone();
    }
    let mut count = BigUint::one();
    for upper in 0..poset.num_vertices() {
        if !poset.is_less(sigma, upper) {
            continue;
        }
        let g = poset.chain_bond_gcd(upper, sigma).expect("comparable");
        for above in grid_below(&g, mass) {
            count += count_from(poset, upper, &above, memo);
        }
    }
    memo.insert((sigma, mass.clone()), count.clone());
    count
}

/// Elements of the per-chain monoid `LS⁺_{C,λ}` of degree `m`, enumerated by
/// the bond-weighted partial sums `S_k ∈ (1/b_k)ℤ ∩ [0,m]`, nondecreasing
/// from the top of the chain down.
pub fn enumerate_chain_members(poset: &StratPoset, chain: &Chain, m: u64) -> Vec<FanElement> {
    let total = rat(m);
    let mut out = Vec::new();
    let mut sums: Vec<BigRational> = Vec::new();
    partial_sum_rec(chain, &total, &mut sums, &mut out);
    sort_canonical(poset, &mut out);
    out
}

fn partial_sum_rec(
    chain: &Chain,
    total: &BigRational,
    sums: &mut Vec<BigRational>,
    out: &mut Vec<FanElement>,
) {
    let k = sums.len();
    if k == chain.bonds.len() {
        // Coefficients from the partial-sum profile.
        let mut pairs: Vec<(usize, BigRational)> = Vec::new();
        let mut prev = BigRational::zero();
        for (i, s) in sums.iter().enumerate() {
            pairs.push((chain.elems[i], s - &prev));
            prev = s.clone();
        }
        pairs.push((chain.elems[chain.elems.len() - 1], total - &prev));
        out.push(FanElement::from_coeffs(pairs).expect("nonnegative"));
        return;
    }
    let lo = if k == 0 { BigRational::zero() } else { sums[k - 1].clone() };
    let b = &chain.bonds[k];
    // S_k ranges over (1/b)ℤ ∩ [lo, total].
    let br = BigRational::from(b.clone());
    let mut j = (&lo * &br).ceil().to_integer();
    loop {
        let s = BigRational::new(j.clone(), b.clone());
        if &s > total {
            break;
        }
        sums.push(s);
        partial_sum_rec(chain, total, sums, out);
        sums.pop();
        j += 1;
    }
}

/// All LS-paths of shape `m·λ` with top element in `A_τ`, enumerated
/// directly from the definition: for every chain of the poset, every
/// strictly increasing sequence of rationals from the `(d, mλ)`-chain grids.
pub fn enumerate_ls_paths(poset: &StratPoset, m: u64) -> Vec<LsPath> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for chain in poset.all_chains() {
        let p = chain.len();
        // Grids for d_k attached to the consecutive pair (chain[k], chain[k+1]).
        let grids: Vec<Vec<BigRational>> = (0..p.saturating_sub(1))
            .map(|k| {
                let g = poset.chain_bond_gcd(chain[k], chain[k + 1]).expect("chain");
                let mg = g * BigInt::from(m);
                grid_below(&mg, &BigRational::one())
            })
            .collect();
        let mut ds: Vec<BigRational> = Vec::new();
        ds_rec(&chain, &grids, &mut ds, &mut out);
    }
    out
}

fn ds_rec(chain: &[usize], grids: &[Vec<BigRational>], ds: &mut Vec<BigRational>, out: &mut Vec<LsPath>) {
    let k = ds.len();
    if k == grids.len() {
        let mut full = ds.clone();
        full.push(BigRational::one());
        out.push(LsPath { sigmas: chain.to_vec(), ds: full });
        return;
    }
    for d in &grids[k] {
        if k > 0 && d <= &ds[k - 1] {
            continue;
        }
        ds.push(d.clone());
        ds_rec(chain, grids, ds, out);
        ds.pop();
    }
}

/// Structural and chain validity of an LS-path of shape `m·λ`.
pub fn validate_path(poset: &StratPoset, path: &LsPath, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidPath("shape multiple must be positive".to_string()));
    }
    if path.sigmas.is_empty() || path.sigmas.len() != path.ds.len() {
        return Err(Error::InvalidPath("support and d-sequence misaligned".to_string()));
    }
    for &v in &path.sigmas {
        if v >= poset.num_vertices() {
            return Err(Error::InvalidPath("vertex out of range".to_string()));
        }
    }
    for w in path.sigmas.windows(2) {
        if !poset.is_less(w[1], w[0]) {
            return Err(Error::InvalidPath("support is not strictly decreasing".to_string()));
        }
    }
    let one = BigRational::one();
    if *path.ds.last().expect("nonempty") != one {
        return Err(Error::InvalidPath("d-sequence must end at 1".to_string()));
    }
    for (k, d) in path.ds.iter().enumerate() {
        if !d.is_positive() || d > &one {
            return Err(Error::InvalidPath("d values must lie in (0, 1]".to_string()));
        }
        if k > 0 && d <= &path.ds[k - 1] {
            return Err(Error::InvalidPath("d-sequence must increase strictly".to_string()));
        }
    }
    let mr = rat(m);
    for k in 0..path.sigmas.len().saturating_sub(1) {
        let d = &path.ds[k] * &mr;
        if !is_d_chain(poset, path.sigmas[k], path.sigmas[k + 1], &d)? {
            return Err(Error::InvalidPath("missing (d, λ)-chain".to_string()));
        }
    }
    Ok(())
}

/// `Θ(π) = Σ_j (d_j − d_{j+1}) m e_{σ_j}` — the bijection from LS-paths of
/// shape `m·λ` onto `LS_λ⁺(m)`.
pub fn theta(poset: &StratPoset, path: &LsPath, m: u64) -> Result<FanElement> {
    validate_path(poset, path, m)?;
    let mr = rat(m);
    let mut pairs = Vec::with_capacity(path.sigmas.len());
    let mut prev = BigRational::zero();
    for (sigma, d) in path.sigmas.iter().zip(&path.ds) {
        pairs.push((*sigma, (d - &prev) * &mr));
        prev = d.clone();
    }
    let a = FanElement::from_coeffs(pairs)?;
    debug_assert!(in_fan(poset, &a));
    Ok(a)
}

/// Inverse of [`theta`]: `d_i = (a_r + … + a_i)/m` read off the support from
/// the top. Errors on non-members or degree mismatch.
pub fn theta_inv(poset: &StratPoset, a: &FanElement, m: u64) -> Result<LsPath> {
    if !in_fan(poset, a) {
        return Err(Error::NotFanMember);
    }
    if *a.degree() != rat(m) || m == 0 {
        return Err(Error::DegreeMismatch);
    }
    let supp = a.support_desc(poset);
    let mr = rat(m);
    let mut ds = Vec::with_capacity(supp.len());
    let mut cum = BigRational::zero();
    for &v in &supp {
        cum += a.coeff(v);
        ds.push(&cum / &mr);
    }
    Ok(LsPath { sigmas: supp, ds })
}

/// The partial order `⊵`: enumerate both supports by decreasing length and
/// compare, at each step, first the support elements in Bruhat order and
/// then the coefficients.
pub fn triangle_cmp(
    poset: &StratPoset,
    a: &FanElement,
    b: &FanElement,
) -> Result<TriangleOrder> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch);
    }
    for x in [a, b] {
        let supp = x.support_desc(poset);
        for w in supp.windows(2) {
            if poset.rank_of(w[0]) == poset.rank_of(w[1]) {
                return Err(Error::NotThin);
            }
        }
    }
    let sa = a.support_desc(poset);
    let sb = b.support_desc(poset);
    let mut ia = sa.iter();
    let mut ib = sb.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ok(TriangleOrder::Equal),
            (Some(&va), Some(&vb)) => {
                if va != vb {
                    return Ok(if poset.is_less(vb, va) {
                        TriangleOrder::Greater
                    } else if poset.is_less(va, vb) {
                        TriangleOrder::Less
                    } else {
                        TriangleOrder::Incomparable
                    });
                }
                let (ca, cb) = (a.coeff(va), b.coeff(vb));
                match ca.cmp(&cb) {
                    Ordering::Greater => return Ok(TriangleOrder::Greater),
                    Ordering::Less => return Ok(TriangleOrder::Less),
                    Ordering::Equal => {}
                }
            }
            // Equal degrees with an equal common prefix force simultaneous
            // exhaustion; reaching here means the precondition was violated.
            _ => return Ok(TriangleOrder::Incomparable),
        }
    }
}

/// Total refinement of `⊵` used for canonical listings: compare the
/// interleaved (support element, coefficient) sequences in decreasing-length
/// order, larger elements first; Bruhat-incomparable support elements fall
/// back to (length, vertex index).
pub fn listing_cmp(poset: &StratPoset, a: &FanElement, b: &FanElement) -> Ordering {
    let sa = a.support_desc(poset);
    let sb = b.support_desc(poset);
    let mut ia = sa.iter();
    let mut ib = sb.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (Some(&va), Some(&vb)) => {
                if va != vb {
                    if poset.is_less(vb, va) {
                        return Ordering::Less;
                    }
                    if poset.is_less(va, vb) {
                        return Ordering::Greater;
                    }
                    return (core::cmp::Reverse(poset.rank_of(va)), va)
                        .cmp(&(core::cmp::Reverse(poset.rank_of(vb)), vb));
                }
                match a.coeff(va).cmp(&b.coeff(vb)) {
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {}
                }
            }
        }
    }
}

/// Sorts elements into the canonical listing order.
pub fn sort_canonical(poset: &StratPoset, elems: &mut [FanElement]) {
    elems.sort_by(|a, b| listing_cmp(poset, a, b));
}

/// The unique standard decomposition of a degree-`m` member into `m`
/// degree-one members with weakly descending supports, obtained by slicing
/// the cumulative profile at integer degrees.
pub fn standard_decompose(poset: &StratPoset, a: &FanElement) -> Result<Vec<FanElement>> {
    if !in_fan(poset, a) {
        return Err(Error::NotFanMember);
    }
    if !a.degree().is_integer() {
        return Err(Error::NonIntegralDegree);
    }
    let m = a.degree().to_integer();
    let mut parts = Vec::new();
    let supp = a.support_desc(poset);
    // Segment of σ_k in mass units: (c_{k−1}, c_k], cumulative from the top.
    let mut bounds = Vec::with_capacity(supp.len() + 1);
    bounds.push(BigRational::zero());
    let mut cum = BigRational::zero();
    for &v in &supp {
        cum += a.coeff(v);
        bounds.push(cum.clone());
    }
    let mut t = BigInt::one();
    while t <= m {
        let lo = BigRational::from(&t - BigInt::one());
        let hi = BigRational::from(t.clone());
        let mut pairs = Vec::new();
        for (k, &v) in supp.iter().enumerate() {
            let a_lo = if bounds[k] > lo { bounds[k].clone() } else { lo.clone() };
            let a_hi = if bounds[k + 1] < hi { bounds[k + 1].clone() } else { hi.clone() };
            if a_hi > a_lo {
                pairs.push((v, a_hi - a_lo));
            }
        }
        let part = FanElement::from_coeffs(pairs)?;
        debug_assert_eq!(*part.degree(), BigRational::one());
        debug_assert!(in_fan(poset, &part));
        parts.push(part);
        t += 1;
    }
    Ok(parts)
}

/// Is the sequence of degree-one members standard, i.e. does
/// `min supp aʲ ≥ max supp aʲ⁺¹` hold for all `j`?
pub fn is_standard_monomial(poset: &StratPoset, seq: &[FanElement]) -> bool {
    for w in seq.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        if x.is_zero() || y.is_zero() {
            return false;
        }
        let min_x = *x.support_desc(poset).last().expect("nonempty");
        let max_y = y.support_desc(poset)[0];
        if !poset.is_leq(max_y, min_x) {
            return false;
        }
    }
    true
}

/// Fan-algebra product: the exponent sum when one chain contains both
/// supports, the distinguished zero otherwise.
pub fn fan_multiply(poset: &StratPoset, a: &FanElement, b: &FanElement) -> FanProduct {
    debug_assert!(in_fan(poset, a) && in_fan(poset, b));
    for &va in a.coeffs().keys() {
        for &vb in b.coeffs().keys() {
            if va != vb && !poset.is_less(va, vb) && !poset.is_less(vb, va) {
                return FanProduct::Zero;
            }
        }
    }
    let sum = a.add(b);
    debug_assert!(in_fan(poset, &sum));
    FanProduct::Product(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanData, Weight};
    use crate::strat_poset::StratPoset;
    use crate::weyl::WeylElement;

    fn a1(two: bool) -> StratPoset {
        let cd = CartanData::named("A1").unwrap();
        let lambda = Weight::from_i64(&[if two { 2 } else { 1 }]);
        StratPoset::build(&cd, &lambda, &WeylElement::longest(&cd), None).unwrap()
    }

    fn half() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }

    #[test]
    fn d_chain_examples() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        assert!(is_d_chain(&p2, s1, id, &half()).unwrap());
        assert!(is_d_chain(&p2, s1, s1, &half()).unwrap());
        let p1 = a1(false);
        let (id, s1) = (p1.id_index(), p1.tau_index());
        assert!(!is_d_chain(&p1, s1, id, &half()).unwrap());
        assert_eq!(is_d_chain(&p1, id, s1, &half()).unwrap_err(), Error::Incomparable);
    }

    #[test]
    fn membership_examples() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        for v in [id, s1] {
            assert!(in_fan(&p2, &FanElement::unit(v)));
        }
        let mixed =
            FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap();
        assert!(in_fan(&p2, &mixed));
        let p1 = a1(false);
        let mixed1 = FanElement::from_coeffs([(p1.tau_index(), half()), (p1.id_index(), half())])
            .unwrap();
        assert!(!in_fan(&p1, &mixed1));
    }

    #[test]
    fn enumerate_a1() {
        let p2 = a1(true);
        let elems = enumerate_fan(&p2, 1);
        assert_eq!(elems.len(), 3);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        assert!(elems.contains(&FanElement::unit(s1)));
        assert!(elems.contains(&FanElement::unit(id)));
        assert!(elems
            .contains(&FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap()));
        // 2m+1 members in degree m
        for m in 0..6u64 {
            assert_eq!(enumerate_fan(&p2, m).len() as u64, 2 * m + 1);
            assert_eq!(count_fan(&p2, m), BigUint::from(2 * m + 1));
        }
    }

    #[test]
    fn enumerate_a2_fundamental() {
        let cd = CartanData::named("A2").unwrap();
        let p = StratPoset::build(
            &cd,
            &Weight::from_i64(&[1, 0]),
            &WeylElement::longest(&cd),
            None,
        )
        .unwrap();
        assert_eq!(p.num_vertices(), 3);
        let elems = enumerate_fan(&p, 1);
        assert_eq!(elems.len(), 3);
        for e in &elems {
            assert_eq!(e.coeffs().len(), 1, "all bonds 1 allows only unit vectors");
        }
        assert!(elems.contains(&FanElement::unit(p.tau_index())));
        assert!(elems.contains(&FanElement::unit(p.id_index())));
    }

    #[test]
    fn weights() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        let w_id = weight_of(&p2, &FanElement::unit(id));
        assert_eq!(w_id.to_integral().unwrap(), Weight::from_i64(&[2]));
        let mixed = FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap();
        assert_eq!(weight_of(&p2, &mixed).to_integral().unwrap(), Weight::from_i64(&[0]));
        let w_top = weight_of(&p2, &FanElement::unit(s1));
        assert_eq!(w_top.to_integral().unwrap(), Weight::from_i64(&[-2]));
    }

    #[test]
    fn theta_examples() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        let single = LsPath { sigmas: vec![s1], ds: vec![BigRational::one()] };
        assert_eq!(theta(&p2, &single, 1).unwrap(), FanElement::unit(s1));
        let two_leg = LsPath { sigmas: vec![s1, id], ds: vec![half(), BigRational::one()] };
        assert_eq!(
            theta(&p2, &two_leg, 1).unwrap(),
            FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap()
        );
        assert_eq!(
            theta(&p2, &two_leg, 2).unwrap(),
            FanElement::from_coeffs([(s1, BigRational::one()), (id, BigRational::one())])
                .unwrap()
        );
        // the same two-leg path is not valid for shape λ = ω₁
        let p1 = a1(false);
        let bad = LsPath {
            sigmas: vec![p1.tau_index(), p1.id_index()],
            ds: vec![half(), BigRational::one()],
        };
        assert!(theta(&p1, &bad, 1).is_err());
    }

    #[test]
    fn theta_round_trips() {
        let p2 = a1(true);
        for m in 1..=4u64 {
            for a in enumerate_fan(&p2, m) {
                let path = theta_inv(&p2, &a, m).unwrap();
                assert_eq!(theta(&p2, &path, m).unwrap(), a);
            }
            for path in enumerate_ls_paths(&p2, m) {
                let a = theta(&p2, &path, m).unwrap();
                assert_eq!(theta_inv(&p2, &a, m).unwrap(), path);
            }
        }
    }

    #[test]
    fn triangle_examples() {
        let cd = CartanData::named("A2").unwrap();
        let p = StratPoset::build(
            &cd,
            &Weight::from_i64(&[1, 0]),
            &WeylElement::longest(&cd),
            None,
        )
        .unwrap();
        let e_tau = FanElement::unit(p.tau_index());
        let e_id = FanElement::unit(p.id_index());
        assert_eq!(triangle_cmp(&p, &e_tau, &e_id).unwrap(), TriangleOrder::Greater);
        assert_eq!(triangle_cmp(&p, &e_id, &e_id).unwrap(), TriangleOrder::Equal);
        // s₁ < s₂s₁ in the quotient
        let s1 = p.index_of_word(&[0]).unwrap();
        let s2s1 = p.index_of_word(&[1, 0]).unwrap();
        assert_eq!(
            triangle_cmp(&p, &FanElement::unit(s1), &FanElement::unit(s2s1)).unwrap(),
            TriangleOrder::Less
        );
        // degree mismatch is rejected
        let two = FanElement::from_coeffs([(p.id_index(), rat(2))]).unwrap();
        assert_eq!(triangle_cmp(&p, &two, &e_id).unwrap_err(), Error::DegreeMismatch);
        // incomparable supports in the full flag poset
        let cd = CartanData::named("A2").unwrap();
        let pf = StratPoset::build(
            &cd,
            &Weight::from_i64(&[1, 1]),
            &WeylElement::longest(&cd),
            None,
        )
        .unwrap();
        let u1 = FanElement::unit(pf.index_of_word(&[0]).unwrap());
        let u2 = FanElement::unit(pf.index_of_word(&[1]).unwrap());
        assert_eq!(triangle_cmp(&pf, &u1, &u2).unwrap(), TriangleOrder::Incomparable);
        // non-thin operands are rejected: two support elements of equal length
        let fat = u1.scaled(&half()).add(&u2.scaled(&half()));
        assert_eq!(
            triangle_cmp(&pf, &fat, &FanElement::unit(pf.id_index())).unwrap_err(),
            Error::NotThin
        );
    }

    #[test]
    fn decompose_examples() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        let sum = FanElement::from_coeffs([(s1, BigRational::one()), (id, BigRational::one())])
            .unwrap();
        assert_eq!(
            standard_decompose(&p2, &sum).unwrap(),
            vec![FanElement::unit(s1), FanElement::unit(id)]
        );
        let twice_top = FanElement::from_coeffs([(s1, rat(2))]).unwrap();
        assert_eq!(
            standard_decompose(&p2, &twice_top).unwrap(),
            vec![FanElement::unit(s1), FanElement::unit(s1)]
        );
        let three_half = FanElement::from_coeffs([
            (s1, BigRational::new(BigInt::from(3), BigInt::from(2))),
            (id, half()),
        ])
        .unwrap();
        assert_eq!(
            standard_decompose(&p2, &three_half).unwrap(),
            vec![
                FanElement::unit(s1),
                FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap()
            ]
        );
        // non-member is rejected
        let p1 = a1(false);
        let bad = FanElement::from_coeffs([(p1.tau_index(), half()), (p1.id_index(), half())])
            .unwrap();
        assert_eq!(standard_decompose(&p1, &bad).unwrap_err(), Error::NotFanMember);
    }

    #[test]
    fn standard_monomials() {
        let p2 = a1(true);
        let (id, s1) = (p2.id_index(), p2.tau_index());
        let mixed = FanElement::from_coeffs([(s1, half()), (id, half())]).unwrap();
        assert!(is_standard_monomial(&p2, &[FanElement::unit(s1), FanElement::unit(id)]));
        assert!(!is_standard_monomial(&p2, &[FanElement::unit(id), FanElement::unit(s1)]));
        assert!(!is_standard_monomial(&p2, &[mixed.clone(), FanElement::unit(s1)]));
        assert!(is_standard_monomial(&p2, &[FanElement::unit(s1), mixed]));
    }

    #[test]
    fn products() {
        let cd = CartanData::named("A2").unwrap();
        let pf = StratPoset::build(
            &cd,
            &Weight::from_i64(&[1, 1]),
            &WeylElement::longest(&cd),
            None,
        )
        .unwrap();
        let e_tau = FanElement::unit(pf.tau_index());
        let e_id = FanElement::unit(pf.id_index());
        assert_eq!(
            fan_multiply(&pf, &e_tau, &e_id),
            FanProduct::Product(e_tau.add(&e_id))
        );
        let u1 = FanElement::unit(pf.index_of_word(&[0]).unwrap());
        let u2 = FanElement::unit(pf.index_of_word(&[1]).unwrap());
        assert!(fan_multiply(&pf, &u1, &u2).is_zero());
        let p2 = a1(true);
        let mixed = FanElement::from_coeffs([
            (p2.tau_index(), half()),
            (p2.id_index(), half()),
        ])
        .unwrap();
        let sq = fan_multiply(&p2, &mixed, &mixed);
        assert_eq!(sq.element().unwrap().degree(), &rat(2));
    }

    #[test]
    fn per_chain_enumeration_matches_fan_restriction() {
        let cd = CartanData::named("A2").unwrap();
        let p = StratPoset::build(
            &cd,
            &Weight::from_i64(&[1, 1]),
            &WeylElement::longest(&cd),
            None,
        )
        .unwrap();
        for m in 0..=3u64 {
            let all = enumerate_fan(&p, m);
            for chain in p.maximal_chains() {
                let restricted: Vec<FanElement> = all
                    .iter()
                    .filter(|a| a.coeffs().keys().all(|v| chain.contains(*v)))
                    .cloned()
                    .collect();
                let direct = enumerate_chain_members(&p, &chain, m);
                assert_eq!(restricted, direct);
            }
        }
    }
}
