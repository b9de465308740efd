//! Weyl group elements, reduced words, minimal coset representatives for
//! `W/W_Q`, Bruhat order and covering reflections.
//!
//! Elements carry a stored reduced word and the image of `ρ` under the
//! element; since `ρ` is regular, two elements are equal iff their `ρ`-images
//! agree, which makes equality a single vector comparison. Coset
//! representatives are additionally normalized to the lexicographically
//! smallest reduced word, so sorting by (length, word) is canonical.
//!
//! Simple-root indices are 0-based throughout the API; the CLI layer converts
//! from the 1-based notation used in words like `"1.2.1"`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::root_system::{CartanData, Root, Weight};

/// An element of the Weyl group, stored as a reduced word together with its
/// `ρ`-image.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    rho_image: Weight,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rho_image == other.rho_image
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(cd: &CartanData) -> Self {
        WeylElement { word: Vec::new(), rho_image: Weight::rho(cd.rank()) }
    }

    /// Builds the element of the given word, reducing it along the way.
    pub fn from_word(cd: &CartanData, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(cd);
        for &i in word {
            cd.check_index(i)?;
            w = w.right_mul(cd, i);
        }
        Ok(w)
    }

    /// The longest element `w₀`.
    pub fn longest(cd: &CartanData) -> Self {
        let mut w = Self::identity(cd);
        'outer: loop {
            for i in 0..cd.rank() {
                if w.apply_root(cd, &Root::simple(cd.rank(), i)).is_positive() {
                    w = w.right_mul(cd, i);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Length of the element (the stored word is reduced).
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `w(λ)`: letters act right to left.
    pub fn apply(&self, cd: &CartanData, lambda: &Weight) -> Weight {
        let mut v = lambda.clone();
        for &i in self.word.iter().rev() {
            v = cd.reflect_weight(i, &v);
        }
        v
    }

    /// `w(β)` on root coordinates.
    pub fn apply_root(&self, cd: &CartanData, beta: &Root) -> Root {
        let mut v = beta.clone();
        for &i in self.word.iter().rev() {
            v = cd.reflect_root(i, &v);
        }
        v
    }

    /// `w⁻¹(β)` on root coordinates.
    pub fn inverse_apply_root(&self, cd: &CartanData, beta: &Root) -> Root {
        let mut v = beta.clone();
        for &i in self.word.iter() {
            v = cd.reflect_root(i, &v);
        }
        v
    }

    /// `w·s_i`, keeping the stored word reduced.
    pub fn right_mul(&self, cd: &CartanData, i: usize) -> Self {
        let alpha = Root::simple(cd.rank(), i);
        if self.apply_root(cd, &alpha).is_positive() {
            // ℓ(w s_i) = ℓ(w) + 1
            let mut word = self.word.clone();
            word.push(i);
            let rho_image = cd.reflect_weight_by_word(&word, &Weight::rho(cd.rank()));
            return WeylElement { word, rho_image };
        }
        // ℓ(w s_i) = ℓ(w) − 1: by the exchange property some letter drops.
        let target = {
            let si_rho = cd.reflect_weight(i, &Weight::rho(cd.rank()));
            self.apply(cd, &si_rho)
        };
        for k in 0..self.word.len() {
            let mut word = self.word.clone();
            word.remove(k);
            let image = cd.reflect_weight_by_word(&word, &Weight::rho(cd.rank()));
            if image == target {
                return WeylElement { word, rho_image: image };
            }
        }
        unreachable!("exchange property must produce a deletion")
    }

    /// `s_i·w`, keeping the stored word reduced.
    pub fn left_mul(&self, cd: &CartanData, i: usize) -> Self {
        let alpha = Root::simple(cd.rank(), i);
        if self.inverse_apply_root(cd, &alpha).is_positive() {
            let mut word = Vec::with_capacity(self.word.len() + 1);
            word.push(i);
            word.extend_from_slice(&self.word);
            let rho_image = cd.reflect_weight(i, &self.rho_image);
            return WeylElement { word, rho_image };
        }
        let target = cd.reflect_weight(i, &self.rho_image);
        for k in 0..self.word.len() {
            let mut word = self.word.clone();
            word.remove(k);
            let image = cd.reflect_weight_by_word(&word, &Weight::rho(cd.rank()));
            if image == target {
                return WeylElement { word, rho_image: image };
            }
        }
        unreachable!("exchange property must produce a deletion")
    }

    /// Rewrites the stored word as the lexicographically smallest reduced
    /// word (greedy smallest left descent).
    pub fn canonicalized(&self, cd: &CartanData) -> Self {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.word.len());
        while !w.word.is_empty() {
            let mut descent = None;
            for i in 0..cd.rank() {
                if w.inverse_apply_root(cd, &Root::simple(cd.rank(), i)).is_negative() {
                    descent = Some(i);
                    break;
                }
            }
            let i = descent.expect("non-identity element has a left descent");
            word.push(i);
            w = w.left_mul(cd, i);
        }
        WeylElement { word, rho_image: self.rho_image.clone() }
    }

    /// True iff the given word is reduced.
    pub fn word_is_reduced(cd: &CartanData, word: &[usize]) -> Result<bool> {
        Ok(Self::from_word(cd, word)?.length() == word.len())
    }
}

impl CartanData {
    /// Applies a word of simple reflections to a weight, rightmost letter
    /// first.
    pub fn reflect_weight_by_word(&self, word: &[usize], lambda: &Weight) -> Weight {
        let mut v = lambda.clone();
        for &i in word.iter().rev() {
            v = self.reflect_weight(i, &v);
        }
        v
    }
}

/// An element of `W/W_Q`, stored as the minimal-length representative in
/// `W^Q` with a canonical (lex-smallest) reduced word.
#[derive(Debug, Clone)]
pub struct CosetElement {
    rep: WeylElement,
    qset: BTreeSet<usize>,
}

impl PartialEq for CosetElement {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.qset == other.qset
    }
}

impl Eq for CosetElement {}

impl PartialOrd for CosetElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CosetElement {
    /// Deterministic ordering by (length, canonical word); not the Bruhat
    /// order.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rep.length(), self.rep.word(), &self.qset).cmp(&(
            other.rep.length(),
            other.rep.word(),
            &other.qset,
        ))
    }
}

impl CosetElement {
    /// The representative of `wW_Q` that is minimal in `W^Q`.
    pub fn new(cd: &CartanData, w: &WeylElement, qset: &BTreeSet<usize>) -> Self {
        let mut rep = w.clone();
        'reduce: loop {
            for &i in qset {
                let shorter = rep.right_mul(cd, i);
                if shorter.length() < rep.length() {
                    rep = shorter;
                    continue 'reduce;
                }
            }
            break;
        }
        CosetElement { rep: rep.canonicalized(cd), qset: qset.clone() }
    }

    pub fn identity(cd: &CartanData, qset: &BTreeSet<usize>) -> Self {
        CosetElement { rep: WeylElement::identity(cd), qset: qset.clone() }
    }

    pub fn rep(&self) -> &WeylElement {
        &self.rep
    }

    pub fn qset(&self) -> &BTreeSet<usize> {
        &self.qset
    }

    /// Length in the graded poset `W/W_Q` (= length of the minimal rep).
    pub fn length(&self) -> usize {
        self.rep.length()
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    /// `σ(λ)` through the minimal representative.
    pub fn apply(&self, cd: &CartanData, lambda: &Weight) -> Weight {
        self.rep.apply(cd, lambda)
    }

    /// `s_i·σ` as a coset.
    pub fn left_mul_simple(&self, cd: &CartanData, i: usize) -> CosetElement {
        CosetElement::new(cd, &self.rep.left_mul(cd, i), &self.qset)
    }

    /// All cosets covered by `self` in `W/W_Q`. Each cover drops one letter
    /// from the canonical word (subword property at colength one).
    pub fn lower_covers(&self, cd: &CartanData) -> Vec<CosetElement> {
        let mut out: BTreeSet<CosetElement> = BTreeSet::new();
        let r = self.rep.length();
        for k in 0..r {
            let mut word = self.rep.word().to_vec();
            word.remove(k);
            let w = WeylElement::from_word(cd, &word).expect("indices already validated");
            let coset = CosetElement::new(cd, &w, &self.qset);
            if coset.length() + 1 == r {
                out.insert(coset);
            }
        }
        out.into_iter().collect()
    }

    /// Dot-separated 1-based word, `"id"` for the identity.
    pub fn word_string(&self) -> String {
        if self.rep.is_identity() {
            return "id".to_string();
        }
        let parts: Vec<String> = self.rep.word().iter().map(|i| (i + 1).to_string()).collect();
        parts.join(".")
    }
}

impl fmt::Display for CosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// Length of a Weyl group element.
pub fn length(w: &WeylElement) -> usize {
    w.length()
}

/// Minimal coset representative of `wW_Q`.
pub fn min_coset_rep(cd: &CartanData, w: &WeylElement, qset: &BTreeSet<usize>) -> CosetElement {
    CosetElement::new(cd, w, qset)
}

/// Bruhat order on `W` via the lifting property: for a right descent `s` of
/// `v`, `u ≤ v` iff (`us ≤ vs` when `us < u`, else `u ≤ vs`).
pub fn bruhat_leq_elements(cd: &CartanData, u: &WeylElement, v: &WeylElement) -> bool {
    if u.length() > v.length() {
        return false;
    }
    if u.length() == 0 {
        return true;
    }
    // v has positive length here since ℓ(u) ≤ ℓ(v).
    let s = *v.word().last().expect("nonempty word");
    let vs = v.right_mul(cd, s);
    let us = u.right_mul(cd, s);
    if us.length() < u.length() {
        bruhat_leq_elements(cd, &us, &vs)
    } else {
        bruhat_leq_elements(cd, u, &vs)
    }
}

/// Induced Bruhat order on `W/W_Q`, decided on the minimal representatives.
pub fn bruhat_leq(cd: &CartanData, u: &CosetElement, v: &CosetElement) -> bool {
    debug_assert_eq!(u.qset(), v.qset());
    bruhat_leq_elements(cd, u.rep(), v.rep())
}

/// For a covering pair `κ ⋖ σ` in `W/W_Q`, the unique positive root `β` with
/// `s_β κ = σ`; `None` when the pair is not a cover.
pub fn covering_root(cd: &CartanData, kappa: &CosetElement, sigma: &CosetElement) -> Option<Root> {
    debug_assert_eq!(kappa.qset(), sigma.qset());
    if sigma.length() != kappa.length() + 1 || !bruhat_leq(cd, kappa, sigma) {
        return None;
    }
    // A weight with stabilizer exactly W_Q makes coset equality one compare.
    let mu = q_regular_weight(cd, kappa.qset());
    let from = kappa.apply(cd, &mu);
    let target = sigma.apply(cd, &mu);
    let mut found = None;
    for beta in cd.positive_roots() {
        let k = cd.pairing(&from, beta);
        let image = from.sub(&cd.root_as_weight(beta).scaled(&k));
        if image == target {
            debug_assert!(found.is_none(), "covering reflection must be unique");
            found = Some(beta.clone());
            #[cfg(not(debug_assertions))]
            break;
        }
    }
    found
}

/// Dominant weight whose stabilizer in `W` is exactly `W_Q`.
pub fn q_regular_weight(cd: &CartanData, qset: &BTreeSet<usize>) -> Weight {
    let mut coords = Weight::rho(cd.rank()).coords().to_vec();
    for &i in qset {
        coords[i] = num_bigint::BigInt::from(0);
    }
    Weight::new(coords)
}

/// The full lower interval `A_τ = {σ ∈ W/W_Q : σ ≤ τ}`, sorted by
/// (length, word).
pub fn enumerate_lower_cosets(cd: &CartanData, tau: &CosetElement) -> Vec<CosetElement> {
    let mut seen: BTreeSet<CosetElement> = BTreeSet::new();
    let mut queue: Vec<CosetElement> = Vec::new();
    seen.insert(tau.clone());
    queue.push(tau.clone());
    while let Some(sigma) = queue.pop() {
        for kappa in sigma.lower_covers(cd) {
            if seen.insert(kappa.clone()) {
                queue.push(kappa);
            }
        }
    }
    seen.into_iter().collect()
}

/// Validates that `word` is a reduced word and returns the element; errors
/// otherwise.
pub fn reduced_element(cd: &CartanData, word: &[usize]) -> Result<WeylElement> {
    let w = WeylElement::from_word(cd, word)?;
    if w.length() != word.len() {
        return Err(Error::NotReduced("word does not have minimal length".to_string()));
    }
    Ok(w)
}
