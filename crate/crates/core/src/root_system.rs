//! Finite-type Cartan matrices, weights, roots, coroots and reflections, all
//! in exact integer and rational coordinates.
//!
//! Convention, fixed once for the whole crate: the Cartan matrix entry
//! `c[i][j]` is the pairing `⟨α_j, α_i∨⟩` of the simple root `α_j` against the
//! simple coroot `α_i∨`. Weights are stored in the fundamental-weight basis,
//! so `⟨λ, α_i∨⟩` is simply the `i`-th coordinate of `λ`, and the simple root
//! `α_i` has fundamental coordinates given by the `i`-th *column* of `c`.
//! Roots are stored in the simple-root basis.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<BigInt>,
}

impl Weight {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Weight { coords }
    }

    /// Weight from small integer coordinates.
    pub fn from_i64(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![BigInt::zero(); rank] }
    }

    /// The fundamental weight `ω_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); rank];
        coords[i] = BigInt::one();
        Weight { coords }
    }

    /// `ρ`, the weight with `⟨ρ, α_i∨⟩ = 1` for every simple `i`.
    pub fn rho(rank: usize) -> Self {
        Weight { coords: vec![BigInt::one(); rank] }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Dominant iff all coordinates are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn to_rational(&self) -> RationalWeight {
        RationalWeight {
            coords: self.coords.iter().map(|c| BigRational::from(c.clone())).collect(),
        }
    }
}

/// A weight with exact rational coordinates in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalWeight {
    coords: Vec<BigRational>,
}

impl RationalWeight {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalWeight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        RationalWeight { coords: vec![BigRational::zero(); rank] }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// `self + c·w`, used to accumulate weighted sums of vertex weights.
    pub fn add_scaled(&self, c: &BigRational, w: &Weight) -> RationalWeight {
        RationalWeight {
            coords: self
                .coords
                .iter()
                .zip(w.coords())
                .map(|(a, b)| a + c * BigRational::from(b.clone()))
                .collect(),
        }
    }

    /// Integral coordinates, if all denominators are one.
    pub fn to_integral(&self) -> Option<Weight> {
        if self.coords.iter().all(|c| c.is_integer()) {
            Some(Weight { coords: self.coords.iter().map(|c| c.to_integer()).collect() })
        } else {
            None
        }
    }
}

/// A root in simple-root coordinates. For finite type the coordinates are all
/// nonnegative (positive root) or all nonpositive; never mixed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    /// The simple root `α_i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0i64; rank];
        coords[i] = 1;
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> Root {
        Root { coords: self.coords.iter().map(|&c| -c).collect() }
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Root {
    /// `α_1 + 2α_2`-style rendering with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite-type generalized Cartan matrix together with its symmetrizer and
/// the derived root data (positive roots, coroot coordinates).
///
/// Construction validates the generalized-Cartan-matrix axioms, computes a
/// minimal positive integral symmetrizer and rejects any matrix whose
/// symmetrization is not positive definite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    label: String,
    rank: usize,
    c: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    coroots: Vec<Vec<i64>>,
}

impl CartanData {
    /// Named constructor: `"A1"`–`"A4"`, `"B2"`, `"B3"`, `"C3"`, `"D4"`, `"G2"`.
    pub fn named(name: &str) -> Result<Self> {
        let c: Vec<Vec<i64>> = match name {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "A4" => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            "B2" => vec![vec![2, -1], vec![-2, 2]],
            "B3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            "C3" => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            "D4" => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            _ => {
                return Err(Error::InvalidCartan(alloc::format!("unknown type name \"{name}\"")));
            }
        };
        let mut cd = Self::from_matrix(c)?;
        cd.label = name.to_string();
        Ok(cd)
    }

    /// Raw-matrix constructor. Entries follow the crate convention
    /// `c[i][j] = ⟨α_j, α_i∨⟩`.
    pub fn from_matrix(c: Vec<Vec<i64>>) -> Result<Self> {
        let rank = c.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("empty matrix".to_string()));
        }
        for row in &c {
            if row.len() != rank {
                return Err(Error::InvalidCartan("matrix is not square".to_string()));
            }
        }
        for i in 0..rank {
            if c[i][i] != 2 {
                return Err(Error::InvalidCartan("diagonal entries must equal 2".to_string()));
            }
            for j in 0..rank {
                if i != j {
                    if c[i][j] > 0 {
                        return Err(Error::InvalidCartan(
                            "off-diagonal entries must be nonpositive".to_string(),
                        ));
                    }
                    if (c[i][j] == 0) != (c[j][i] == 0) {
                        return Err(Error::InvalidCartan(
                            "c[i][j] = 0 must imply c[j][i] = 0".to_string(),
                        ));
                    }
                }
            }
        }
        let symmetrizer = symmetrizer(&c)?;
        if !is_positive_definite(&c, &symmetrizer) {
            return Err(Error::NotFiniteType);
        }
        let positive_roots = close_positive_roots(&c);
        let coroots = positive_roots.iter().map(|r| coroot_coords(&c, &symmetrizer, r)).collect();
        Ok(CartanData {
            label: "custom".to_string(),
            rank,
            c,
            symmetrizer,
            positive_roots,
            coroots,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `⟨α_j, α_i∨⟩`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.c[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The set `Φ⁺`, sorted by (height, coordinates).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Coordinates of `β∨` in the simple-coroot basis, aligned with
    /// [`Self::positive_roots`]. Also computable for any root via
    /// [`Self::coroot`].
    pub fn coroot_of_index(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    /// Coordinates of `β∨` in the simple-coroot basis.
    pub fn coroot(&self, beta: &Root) -> Vec<i64> {
        coroot_coords(&self.c, &self.symmetrizer, beta)
    }

    /// `⟨λ, β∨⟩` for an integral weight.
    pub fn pairing(&self, lambda: &Weight, beta: &Root) -> BigInt {
        let co = self.coroot(beta);
        let mut acc = BigInt::zero();
        for (ci, li) in co.iter().zip(lambda.coords()) {
            acc += li * BigInt::from(*ci);
        }
        acc
    }

    /// `⟨λ, β∨⟩` for a rational weight.
    pub fn pairing_rational(&self, lambda: &RationalWeight, beta: &Root) -> BigRational {
        let co = self.coroot(beta);
        let mut acc = BigRational::zero();
        for (ci, li) in co.iter().zip(lambda.coords()) {
            acc += li * BigRational::from(BigInt::from(*ci));
        }
        acc
    }

    /// `s_i(λ) = λ − ⟨λ, α_i∨⟩ α_i` in fundamental coordinates.
    pub fn reflect_weight(&self, i: usize, lambda: &Weight) -> Weight {
        let k = lambda.coords()[i].clone();
        let coords = lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(j, cj)| cj - &k * BigInt::from(self.c[j][i]))
            .collect();
        Weight::new(coords)
    }

    /// `s_i` on a rational weight.
    pub fn reflect_rational_weight(&self, i: usize, lambda: &RationalWeight) -> RationalWeight {
        let k = lambda.coords()[i].clone();
        let coords = lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(j, cj)| cj - &k * BigRational::from(BigInt::from(self.c[j][i])))
            .collect();
        RationalWeight::new(coords)
    }

    /// `s_i(β)` in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        // ⟨β, α_i∨⟩ = Σ_j c[i][j] β_j; only the α_i coordinate moves.
        let k: i64 = beta.coords().iter().enumerate().map(|(j, &bj)| self.c[i][j] * bj).sum();
        let mut coords = beta.coords().to_vec();
        coords[i] -= k;
        Root::new(coords)
    }

    /// Fundamental coordinates of `α_i` (the `i`-th column of the matrix).
    pub fn simple_root_as_weight(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|j| BigInt::from(self.c[j][i])).collect())
    }

    /// Fundamental coordinates of an arbitrary root.
    pub fn root_as_weight(&self, beta: &Root) -> Weight {
        let coords = (0..self.rank)
            .map(|j| {
                beta.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| BigInt::from(self.c[j][i] * k))
                    .sum()
            })
            .collect();
        Weight::new(coords)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }
}

/// Minimal positive integral symmetrizer: `d_i c[i][j] = d_j c[j][i]`.
fn symmetrizer(c: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = c.len();
    let mut ratio: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if ratio[start].is_some() {
            continue;
        }
        ratio[start] = Some(BigRational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let ri = ratio[i].clone().unwrap();
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                // d_j = d_i c[i][j] / c[j][i]
                let rj = &ri * BigRational::new(BigInt::from(c[i][j]), BigInt::from(c[j][i]));
                match &ratio[j] {
                    None => {
                        ratio[j] = Some(rj);
                        stack.push(j);
                    }
                    Some(prev) => {
                        if *prev != rj {
                            return Err(Error::InvalidCartan(
                                "matrix is not symmetrizable".to_string(),
                            ));
                        }
                    }
                }
            }
        }
    }
    // Clear denominators component-wise with a common multiplier, then reduce.
    let mut lcm_den = BigInt::one();
    for r in ratio.iter().flatten() {
        lcm_den = num_integer::lcm(lcm_den, r.denom().clone());
    }
    let mut d: Vec<BigInt> =
        ratio.into_iter().map(|r| (r.unwrap() * BigRational::from(lcm_den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &d {
        g = num_integer::gcd(g, v.clone());
    }
    for v in &mut d {
        *v /= &g;
    }
    let mut out = Vec::with_capacity(n);
    for v in d {
        let small = i64::try_from(&v)
            .map_err(|_| Error::InvalidCartan("symmetrizer entries too large".to_string()))?;
        if small <= 0 {
            return Err(Error::InvalidCartan("symmetrizer not positive".to_string()));
        }
        out.push(small);
    }
    // Final consistency check over all pairs.
    for i in 0..n {
        for j in 0..n {
            if out[i].checked_mul(c[i][j]) != out[j].checked_mul(c[j][i]) {
                return Err(Error::InvalidCartan("matrix is not symmetrizable".to_string()));
            }
        }
    }
    Ok(out)
}

/// Positive definiteness of `diag(d)·C` via leading principal minors
/// (fraction-free Bareiss elimination over i128).
fn is_positive_definite(c: &[Vec<i64>], d: &[i64]) -> bool {
    let n = c.len();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (d[i] as i128) * (c[i][j] as i128)).collect())
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        if m[k][k] <= 0 {
            return false;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    true
}

/// Saturate `{α_i}` under all simple reflections, keeping positive roots.
fn close_positive_roots(c: &[Vec<i64>]) -> Vec<Root> {
    let n = c.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    for r in &queue {
        seen.insert(r.coords().to_vec());
    }
    while let Some(beta) = queue.pop() {
        for i in 0..n {
            let k: i64 = beta.coords().iter().enumerate().map(|(j, &bj)| c[i][j] * bj).sum();
            let mut coords = beta.coords().to_vec();
            coords[i] -= k;
            if coords.iter().all(|&x| x >= 0) && seen.insert(coords.clone()) {
                queue.push(Root::new(coords));
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
    roots.sort_by_key(|r| (r.height(), r.coords().to_vec()));
    roots
}

fn coroot_coords(c: &[Vec<i64>], d: &[i64], beta: &Root) -> Vec<i64> {
    // (β,β)/2 with (α_i,α_j) = d_i c[i][j]; then β∨ = Σ k_i d_i/d_β α_i∨.
    let n = c.len();
    let mut norm2: i128 = 0;
    for i in 0..n {
        for j in 0..n {
            norm2 += (beta.coords()[i] as i128)
                * (beta.coords()[j] as i128)
                * (d[i] as i128)
                * (c[i][j] as i128);
        }
    }
    debug_assert!(norm2 > 0, "root of nonpositive norm");
    let d_beta2 = norm2; // = 2·d_β
    beta.coords()
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let num = 2 * (k as i128) * (d[i] as i128);
            debug_assert!(num % d_beta2 == 0, "coroot coordinates must be integral");
            (num / d_beta2) as i64
        })
        .collect()
}
