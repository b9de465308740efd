//! The bonded Bruhat poset `A_τ` attached to a dominant weight `λ` and a
//! coset `τ ∈ W/W_Q`: vertices, covering edges labelled by positive roots and
//! bonds, and maximal chains.
//!
//! The bond on a covering edge `κ ⋖ σ = s_β κ` is `⟨κ(λ), β∨⟩`, computed on
//! the lower endpoint. Vertices are sorted by (length, canonical word), which
//! fixes the vertex indexing, the edge order and the chain enumeration order
//! once and for all.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{CartanData, Root, Weight};
use crate::weyl::{self, CosetElement, WeylElement};

/// A covering edge `lower ⋖ upper` with its reflection root and bond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub lower: usize,
    pub upper: usize,
    pub root: Root,
    pub bond: BigInt,
}

/// A saturated descending chain, stored top-down: `elems[0] > elems[1] > …`,
/// with `bonds[k]` the bond of the edge between `elems[k]` and `elems[k+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub elems: Vec<usize>,
    pub bonds: Vec<BigInt>,
}

impl Chain {
    /// Number of edges (`ℓ(top) − ℓ(bottom)` for saturated chains).
    pub fn len(&self) -> usize {
        self.bonds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elems.contains(&v)
    }

    /// Product of the bonds along the chain (1 for a single vertex).
    pub fn bond_product(&self) -> BigInt {
        let mut p = BigInt::one();
        for b in &self.bonds {
            p *= b;
        }
        p
    }
}

/// The Hasse diagram with bonds of `A_τ = {σ ≤ τ}`.
#[derive(Debug, Clone)]
pub struct StratPoset {
    cd: CartanData,
    lambda: Weight,
    qset: BTreeSet<usize>,
    vertices: Vec<CosetElement>,
    word_index: BTreeMap<Vec<usize>, usize>,
    lambda_images: Vec<Weight>,
    leq: Vec<Vec<bool>>,
    edges: Vec<Edge>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    bond_table: BTreeMap<(usize, usize), BigInt>,
    tau_idx: usize,
    id_idx: usize,
}

impl StratPoset {
    /// Builds the stratification poset for `(λ, τ)`.
    ///
    /// `qset` defaults to `{i : ⟨λ, α_i∨⟩ = 0}`; an explicit override must be
    /// contained in that zero set (otherwise `κ(λ)` is not well defined on
    /// cosets) and must keep every bond positive.
    pub fn build(
        cd: &CartanData,
        lambda: &Weight,
        tau: &WeylElement,
        qset_override: Option<&BTreeSet<usize>>,
    ) -> Result<Self> {
        if lambda.rank() != cd.rank() {
            return Err(Error::QsetIncompatible("weight rank mismatch".to_string()));
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroHighestWeight);
        }
        let zeros: BTreeSet<usize> =
            (0..cd.rank()).filter(|&i| lambda.coords()[i].is_zero()).collect();
        let qset = match qset_override {
            None => zeros,
            Some(q) => {
                for &i in q {
                    cd.check_index(i)?;
                }
                if !q.is_subset(&zeros) {
                    return Err(Error::QsetIncompatible(
                        "qset must consist of indices where lambda vanishes".to_string(),
                    ));
                }
                q.clone()
            }
        };
        let tau = CosetElement::new(cd, tau, &qset);
        let vertices = weyl::enumerate_lower_cosets(cd, &tau);
        let n = vertices.len();
        let mut word_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            word_index.insert(v.rep().word().to_vec(), i);
        }
        let id_idx = *word_index.get(&Vec::new()).expect("id is in every interval");
        let tau_idx = *word_index.get(tau.rep().word()).expect("tau is a vertex");
        let lambda_images: Vec<Weight> = vertices.iter().map(|v| v.apply(cd, lambda)).collect();

        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if vertices[i].length() <= vertices[j].length() {
                    leq[i][j] = weyl::bruhat_leq(cd, &vertices[i], &vertices[j]);
                }
            }
        }

        let mut edges = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        let mut bond_table = BTreeMap::new();
        for l in 0..n {
            for u in 0..n {
                if vertices[u].length() != vertices[l].length() + 1 || !leq[l][u] {
                    continue;
                }
                let root = weyl::covering_root(cd, &vertices[l], &vertices[u]).ok_or_else(
                    || Error::Internal("length-one Bruhat relation without a cover".to_string()),
                )?;
                let bond = cd.pairing(&lambda_images[l], &root);
                if !bond.is_positive() {
                    return Err(Error::QsetIncompatible(
                        "lambda/qset produce a nonpositive bond".to_string(),
                    ));
                }
                upper[l].push(u);
                lower[u].push(l);
                bond_table.insert((l, u), bond.clone());
                edges.push(Edge { lower: l, upper: u, root, bond });
            }
        }
        for adj in upper.iter_mut().chain(lower.iter_mut()) {
            adj.sort_unstable();
        }
        edges.sort_by_key(|e| (e.lower, e.upper));

        // Gradedness: every maximal chain has exactly ℓ(τ)+1 vertices.
        for v in 0..n {
            if v != id_idx && lower[v].is_empty() {
                return Err(Error::Internal("vertex above id without lower cover".to_string()));
            }
            if v != tau_idx && upper[v].is_empty() {
                return Err(Error::Internal("vertex below tau without upper cover".to_string()));
            }
        }

        Ok(StratPoset {
            cd: cd.clone(),
            lambda: lambda.clone(),
            qset,
            vertices,
            word_index,
            lambda_images,
            leq,
            edges,
            upper,
            lower,
            bond_table,
            tau_idx,
            id_idx,
        })
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn qset(&self) -> &BTreeSet<usize> {
        &self.qset
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[CosetElement] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &CosetElement {
        &self.vertices[i]
    }

    pub fn tau_index(&self) -> usize {
        self.tau_idx
    }

    pub fn id_index(&self) -> usize {
        self.id_idx
    }

    pub fn rank_of(&self, v: usize) -> usize {
        self.vertices[v].length()
    }

    /// Index of the vertex with the given canonical word, if present.
    pub fn index_of_word(&self, word: &[usize]) -> Option<usize> {
        self.word_index.get(word).copied()
    }

    /// Index of a coset, if it lies in `A_τ`.
    pub fn index_of(&self, coset: &CosetElement) -> Option<usize> {
        self.word_index.get(coset.rep().word()).copied()
    }

    /// `v(λ)` for the vertex `v`.
    pub fn lambda_image(&self, v: usize) -> &Weight {
        &self.lambda_images[v]
    }

    /// Bruhat order on vertex indices.
    pub fn is_leq(&self, lower: usize, upper: usize) -> bool {
        self.leq[lower][upper]
    }

    pub fn is_less(&self, lower: usize, upper: usize) -> bool {
        lower != upper && self.leq[lower][upper]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower[v]
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper[v]
    }

    /// Bond of the covering edge `lower ⋖ upper`.
    pub fn bond(&self, lower: usize, upper: usize) -> Option<&BigInt> {
        self.bond_table.get(&(lower, upper))
    }

    /// All maximal chains from `τ` down to `id`, in lexicographic order of
    /// their vertex-index sequences.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut stack = vec![self.tau_idx];
        self.descend_chains(&mut stack, &mut out);
        out
    }

    fn descend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let last = *stack.last().expect("nonempty");
        if last == self.id_idx {
            let elems = stack.clone();
            let bonds = elems
                .windows(2)
                .map(|w| self.bond_table[&(w[1], w[0])].clone())
                .collect();
            out.push(Chain { elems, bonds });
            return;
        }
        for &next in &self.lower[last] {
            stack.push(next);
            self.descend_chains(stack, out);
            stack.pop();
        }
    }

    /// Least common multiple of all edge bonds (1 when there are no edges).
    pub fn lcm_bonds(&self) -> BigInt {
        let mut n = BigInt::one();
        for e in &self.edges {
            n = n.lcm(&e.bond);
        }
        n
    }

    /// Translation invariance of bonds: whenever `κ ⋖ σ` is a cover, `α` is
    /// simple, and both `s_ακ < κ` and `s_ασ < σ`, the pair `s_ακ ⋖ s_ασ` is
    /// again a cover with the same bond.
    pub fn bond_translation_check(&self) -> bool {
        for i in 0..self.cd.rank() {
            for e in &self.edges {
                let kappa = &self.vertices[e.lower];
                let sigma = &self.vertices[e.upper];
                let skappa = kappa.left_mul_simple(&self.cd, i);
                let ssigma = sigma.left_mul_simple(&self.cd, i);
                if skappa.length() >= kappa.length() || ssigma.length() >= sigma.length() {
                    continue;
                }
                let (Some(l), Some(u)) = (self.index_of(&skappa), self.index_of(&ssigma)) else {
                    return false;
                };
                match self.bond(l, u) {
                    Some(b) if *b == e.bond => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// All saturated chains from `top` down to `bottom` (inclusive), each as
    /// a descending vertex list. Empty when `bottom ≰ top`.
    pub fn saturated_chains_between(&self, top: usize, bottom: usize) -> Vec<Vec<usize>> {
        if !self.leq[bottom][top] {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut stack = vec![top];
        self.descend_between(bottom, &mut stack, &mut out);
        out
    }

    fn descend_between(&self, bottom: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *stack.last().expect("nonempty");
        if last == bottom {
            out.push(stack.clone());
            return;
        }
        for &next in &self.lower[last] {
            if self.leq[bottom][next] {
                stack.push(next);
                self.descend_between(bottom, stack, out);
                stack.pop();
            }
        }
    }

    /// Gcd of the bonds along one saturated chain from `top` down to
    /// `bottom`. By Dehy's chain-independence this does not depend on the
    /// chain (tested exhaustively elsewhere). Returns zero for `top ==
    /// bottom` (no conditions) and `None` when `bottom ≰ top`.
    pub fn chain_bond_gcd(&self, top: usize, bottom: usize) -> Option<BigInt> {
        if !self.leq[bottom][top] {
            return None;
        }
        let mut g = BigInt::zero();
        let mut cur = top;
        while cur != bottom {
            let next = *self.lower[cur]
                .iter()
                .find(|&&w| self.leq[bottom][w])
                .expect("graded interval has a descent towards its bottom");
            g = g.gcd(&self.bond_table[&(next, cur)]);
            cur = next;
        }
        Some(g)
    }

    /// All nonempty chains (totally ordered subsets) of the poset, each as a
    /// descending vertex list.
    pub fn all_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.num_vertices() {
            stack.push(start);
            self.extend_chain(&mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_chain(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(stack.clone());
        let last = *stack.last().expect("nonempty");
        for next in 0..self.num_vertices() {
            if self.is_less(next, last) {
                stack.push(next);
                self.extend_chain(stack, out);
                stack.pop();
            }
        }
    }
}
