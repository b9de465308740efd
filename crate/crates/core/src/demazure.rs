//! Demazure operators and characters, path-model characters, dimension
//! counts, and the divided-power monomials produced by the combinatorial
//! reduction `S(a, σ)`.
//!
//! The Demazure operator is evaluated by its closed form: with
//! `k = ⟨μ, α_i∨⟩`,
//!
//! ```text
//! D_i(e^μ) = e^μ + e^{μ−α_i} + … + e^{μ−kα_i}   if k ≥ 0,
//!          = 0                                   if k = −1,
//!          = −(e^{μ+α_i} + … + e^{μ+(−k−1)α_i})  if k ≤ −2.
//! ```
//!
//! The central cross-check of the module is the character identity: the
//! operator character along a reduced word of `τ` equals the sum of
//! `e^{weight(a)}` over the degree-`m` fan members of `A_τ`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ls_fan::{self, FanElement};
use crate::root_system::{CartanData, Weight};
use crate::strat_poset::StratPoset;
use crate::weyl::{self, CosetElement};

/// A finitely-supported character: weights with nonnegative multiplicities.
/// Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterElt {
    terms: BTreeMap<Weight, BigUint>,
}

impl CharacterElt {
    pub fn zero() -> Self {
        CharacterElt { terms: BTreeMap::new() }
    }

    /// The single term `e^μ`.
    pub fn monomial(mu: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu, BigUint::one());
        CharacterElt { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigUint> {
        &self.terms
    }

    pub fn add_term(&mut self, mu: Weight, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(mu).or_insert_with(BigUint::zero) += mult;
    }

    /// Total multiplicity (the dimension when this is a module character).
    pub fn total_mass(&self) -> BigUint {
        self.terms.values().fold(BigUint::zero(), |acc, m| acc + m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The Demazure operator `D_i` extended linearly, via the closed form above.
///
/// Errors with [`Error::NegativeMultiplicity`] if cancellation drives a
/// stored multiplicity below zero; characters of dominant weights never do.
pub fn demazure_op(cd: &CartanData, i: usize, chi: &CharacterElt) -> Result<CharacterElt> {
    cd.check_index(i)?;
    let alpha = cd.simple_root_as_weight(i);
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (mu, mult) in chi.terms() {
        let k = mu.coords()[i].clone();
        let signed = BigInt::from_biguint(Sign::Plus, mult.clone());
        if !k.is_negative() {
            let mut j = BigInt::zero();
            let mut term = mu.clone();
            while j <= k {
                *acc.entry(term.clone()).or_insert_with(BigInt::zero) += &signed;
                term = term.sub(&alpha);
                j += 1;
            }
        } else if k != BigInt::from(-1) {
            // k ≤ −2: −(e^{μ+α} + … + e^{μ+(−k−1)α})
            let top = -&k - BigInt::one();
            let mut j = BigInt::one();
            let mut term = mu.add(&alpha);
            while j <= top {
                *acc.entry(term.clone()).or_insert_with(BigInt::zero) -= &signed;
                term = term.add(&alpha);
                j += 1;
            }
        }
    }
    let mut terms = BTreeMap::new();
    for (mu, c) in acc {
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity);
        }
        if !c.is_zero() {
            terms.insert(mu, c.to_biguint().expect("nonnegative"));
        }
    }
    Ok(CharacterElt { terms })
}

/// `D_{i_1} ∘ … ∘ D_{i_r} e^{mλ}` along a reduced word (rightmost operator
/// applied first). Rejects non-reduced words.
pub fn demazure_character(
    cd: &CartanData,
    lambda: &Weight,
    m: u64,
    word: &[usize],
) -> Result<CharacterElt> {
    weyl::reduced_element(cd, word)?;
    let mut chi = CharacterElt::monomial(lambda.scaled(&BigInt::from(m)));
    for &i in word.iter().rev() {
        chi = demazure_op(cd, i, &chi)?;
    }
    Ok(chi)
}

/// `Σ e^{weight(a)}` over the degree-`m` members of the fan on `A_τ`; equals
/// [`demazure_character`] along a reduced word of `τ`.
pub fn path_character(poset: &StratPoset, m: u64) -> CharacterElt {
    let mut chi = CharacterElt::zero();
    for a in ls_fan::enumerate_fan(poset, m) {
        let w = ls_fan::weight_of(poset, &a)
            .to_integral()
            .expect("fan members have integral weight");
        chi.add_term(w, BigUint::one());
    }
    chi
}

/// `|LS_λ⁺(m)|`, the dimension of the degree-`m` graded piece.
pub fn dimension(poset: &StratPoset, m: u64) -> BigUint {
    ls_fan::count_fan(poset, m)
}

/// A symbolic product of divided powers acting on a highest weight vector:
/// `X_{−i_1}^{(n_1)} ⋯ X_{−i_t}^{(n_t)} v_{mλ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedPowerMonomial {
    /// `(simple index, exponent)` pairs, leftmost factor first.
    pub factors: Vec<(usize, BigUint)>,
    /// The monomial acts on `v_{mλ}` for this `m`.
    pub shape: BigUint,
}

impl fmt::Display for DividedPowerMonomial {
    /// `X(-1)^(1) X(-2)^(3) v(m=2)` with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in &self.factors {
            write!(f, "X(-{})^({}) ", i + 1, n)?;
        }
        write!(f, "v(m={})", self.shape)
    }
}

/// The combinatorial reduction of a fan member along a reduced word of its
/// maximal support element: each step reflects the upper part of the support
/// by `s_{i_1}` (merging coefficients when two support elements collide) and
/// records the exponent `n_1 = Σ_h a_{τ_h} |⟨τ_h(λ), α_{i_1}∨⟩|`, until only
/// mass at `id` is left.
///
/// All exponents are nonnegative integers; a non-integral exponent signals a
/// bug and errors with [`Error::IntegralityViolation`].
pub fn s_sequence(
    poset: &StratPoset,
    a: &FanElement,
    word: &[usize],
) -> Result<Vec<(BigUint, usize)>> {
    if !ls_fan::in_fan(poset, a) {
        return Err(Error::NotFanMember);
    }
    let cd = poset.cartan();
    let max_vertex = if a.is_zero() { poset.id_index() } else { a.support_desc(poset)[0] };
    // `word` must be a reduced word of the maximal support coset.
    let w = weyl::reduced_element(cd, word)?;
    let coset = CosetElement::new(cd, &w, poset.qset());
    if coset != *poset.vertex(max_vertex) || w.length() != poset.rank_of(max_vertex) {
        return Err(Error::NotReduced(
            "word is not a reduced word of the maximal support element".to_string(),
        ));
    }

    let mut current = a.clone();
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        let supp_desc = current.support_desc(poset);
        // Ascending support τ_1 < τ_2 < … < τ_q.
        let ts: Vec<usize> = supp_desc.iter().rev().copied().collect();
        let q = ts.len();
        let moved: Vec<CosetElement> =
            ts.iter().map(|&v| poset.vertex(v).left_mul_simple(cd, i)).collect();
        // j maximal with s_i τ_j > τ_j; everything above j reflects.
        let mut start = 0;
        for h in (0..q).rev() {
            if moved[h].length() > poset.rank_of(ts[h]) {
                start = h + 1;
                break;
            }
        }
        // Exponent: Σ_{h ≥ start} a_{τ_h} |⟨τ_h(λ), α_i∨⟩|.
        let mut n = BigRational::zero();
        for &t in &ts[start..] {
            let pairing = poset.lambda_image(t).coords()[i].clone();
            n += current.coeff(t) * BigRational::from(pairing.abs());
        }
        if !n.is_integer() || n.is_negative() {
            return Err(Error::IntegralityViolation);
        }
        // Reflect the upper part; colliding support elements accumulate.
        let mut pairs: Vec<(usize, BigRational)> = Vec::with_capacity(q);
        for h in 0..q {
            if h < start {
                pairs.push((ts[h], current.coeff(ts[h])));
            } else {
                let idx = poset.index_of(&moved[h]).ok_or_else(|| {
                    Error::Internal("reflected support element left the poset".to_string())
                })?;
                pairs.push((idx, current.coeff(ts[h])));
            }
        }
        current = FanElement::from_coeffs(pairs)?;
        debug_assert!(ls_fan::in_fan(poset, &current));
        out.push((n.to_integer().to_biguint().expect("nonnegative"), i));
    }
    // After consuming the whole word, only mass at id may remain.
    let only_id = current.is_zero()
        || (current.coeffs().len() == 1 && current.coeffs().contains_key(&poset.id_index()));
    if !only_id {
        return Err(Error::Internal("reduction did not terminate at id".to_string()));
    }
    Ok(out)
}

/// The divided-power monomial `v_{a,σ}` attached to a fan member and a
/// reduced word of its maximal support element. Checks the weight
/// bookkeeping `deg(a)·λ − Σ n_k α_{i_k} = weight(a)`.
pub fn v_monomial(
    poset: &StratPoset,
    a: &FanElement,
    word: &[usize],
) -> Result<DividedPowerMonomial> {
    if !a.degree().is_integer() {
        return Err(Error::NonIntegralDegree);
    }
    let seq = s_sequence(poset, a, word)?;
    let cd = poset.cartan();
    let m = a.degree().to_integer();
    let mut expected = poset.lambda().scaled(&m).to_rational();
    for (n, i) in &seq {
        let alpha = cd.simple_root_as_weight(*i);
        let step = BigRational::from(-BigInt::from_biguint(Sign::Plus, n.clone()));
        expected = expected.add_scaled(&step, &alpha);
    }
    if expected != ls_fan::weight_of(poset, a) {
        return Err(Error::Internal("weight bookkeeping mismatch in reduction".to_string()));
    }
    Ok(DividedPowerMonomial {
        factors: seq.into_iter().map(|(n, i)| (i, n)).collect(),
        shape: m.to_biguint().expect("nonnegative degree"),
    })
}

/// The exponent cascade of the extremal weight vector along a reduced word
/// `σ = s_{i_1} ⋯ s_{i_r}`: `n_r = ⟨λ, α_{i_r}∨⟩`,
/// `n_{r−1} = ⟨s_{i_r}(λ), α_{i_{r−1}}∨⟩`, …
pub fn extremal_exponents(cd: &CartanData, lambda: &Weight, word: &[usize]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); word.len()];
    let mut mu = lambda.clone();
    for (k, &i) in word.iter().enumerate().rev() {
        out[k] = mu.coords()[i].clone();
        mu = cd.reflect_weight(i, &mu);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElement;
    use alloc::vec;

    fn chr(cd: &CartanData, entries: &[(&[i64], u64)]) -> CharacterElt {
        let _ = cd;
        let mut c = CharacterElt::zero();
        for (w, m) in entries {
            c.add_term(Weight::from_i64(w), BigUint::from(*m));
        }
        c
    }

    #[test]
    fn operator_closed_form() {
        let a1 = CartanData::named("A1").unwrap();
        // k = 1
        let d = demazure_op(&a1, 0, &CharacterElt::monomial(Weight::from_i64(&[1]))).unwrap();
        assert_eq!(d, chr(&a1, &[(&[1], 1), (&[-1], 1)]));
        // k = −1 kills the term
        let d = demazure_op(&a1, 0, &CharacterElt::monomial(Weight::from_i64(&[-1]))).unwrap();
        assert!(d.is_zero());
        // k = 0 fixes it
        let d = demazure_op(&a1, 0, &CharacterElt::monomial(Weight::from_i64(&[0]))).unwrap();
        assert_eq!(d, chr(&a1, &[(&[0], 1)]));
        // k = −3 produces a negative sum, flagged on its own
        assert_eq!(
            demazure_op(&a1, 0, &CharacterElt::monomial(Weight::from_i64(&[-3]))).unwrap_err(),
            Error::NegativeMultiplicity
        );
    }

    #[test]
    fn operator_is_idempotent() {
        let b2 = CartanData::named("B2").unwrap();
        let chi = demazure_character(&b2, &Weight::from_i64(&[1, 2]), 1, &[0, 1, 0]).unwrap();
        for i in 0..2 {
            let once = demazure_op(&b2, i, &chi).unwrap();
            let twice = demazure_op(&b2, i, &once).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn character_examples() {
        let a1 = CartanData::named("A1").unwrap();
        let c = demazure_character(&a1, &Weight::from_i64(&[2]), 1, &[0]).unwrap();
        assert_eq!(c, chr(&a1, &[(&[2], 1), (&[0], 1), (&[-2], 1)]));

        // standard representation of SL₃ along the quotient by qset = {2}
        let a2 = CartanData::named("A2").unwrap();
        let c = demazure_character(&a2, &Weight::from_i64(&[1, 0]), 1, &[1, 0]).unwrap();
        assert_eq!(c.total_mass(), BigUint::from(3u32));
        assert_eq!(c.terms().len(), 3);

        // τ = id
        let c = demazure_character(&a2, &Weight::from_i64(&[1, 1]), 1, &[]).unwrap();
        assert_eq!(c, chr(&a2, &[(&[1, 1], 1)]));

        // non-reduced words are rejected
        assert!(demazure_character(&a2, &Weight::from_i64(&[1, 0]), 1, &[0, 0]).is_err());
    }

    #[test]
    fn characters_agree_with_path_side() {
        let a1 = CartanData::named("A1").unwrap();
        let lambda = Weight::from_i64(&[2]);
        let p = StratPoset::build(&a1, &lambda, &WeylElement::longest(&a1), None).unwrap();
        for m in 1..=3u64 {
            let left = demazure_character(&a1, &lambda, m, &[0]).unwrap();
            let right = path_character(&p, m);
            assert_eq!(left, right);
            assert_eq!(dimension(&p, m), BigUint::from(2 * m + 1));
        }
    }

    #[test]
    fn dimension_examples() {
        let a2 = CartanData::named("A2").unwrap();
        let adjoint = StratPoset::build(
            &a2,
            &Weight::from_i64(&[1, 1]),
            &WeylElement::longest(&a2),
            None,
        )
        .unwrap();
        // the adjoint representation of SL₃, counted three ways
        assert_eq!(dimension(&adjoint, 1), BigUint::from(8u32));
        assert_eq!(path_character(&adjoint, 1).total_mass(), BigUint::from(8u32));
        assert_eq!(
            demazure_character(&a2, &Weight::from_i64(&[1, 1]), 1, &[0, 1, 0])
                .unwrap()
                .total_mass(),
            BigUint::from(8u32)
        );
        let trivial = StratPoset::build(
            &a2,
            &Weight::from_i64(&[1, 1]),
            &WeylElement::identity(&a2),
            None,
        )
        .unwrap();
        for m in 0..5 {
            assert_eq!(dimension(&trivial, m), BigUint::one());
        }
    }

    #[test]
    fn reduced_word_independence() {
        let a2 = CartanData::named("A2").unwrap();
        let lambda = Weight::from_i64(&[2, 1]);
        let c1 = demazure_character(&a2, &lambda, 2, &[0, 1, 0]).unwrap();
        let c2 = demazure_character(&a2, &lambda, 2, &[1, 0, 1]).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn s_sequence_a1() {
        let a1 = CartanData::named("A1").unwrap();
        let lambda = Weight::from_i64(&[2]);
        let p = StratPoset::build(&a1, &lambda, &WeylElement::longest(&a1), None).unwrap();
        let (id, s1) = (p.id_index(), p.tau_index());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = FanElement::from_coeffs([(s1, half.clone()), (id, half)]).unwrap();
        // n₁ = ½·|⟨s₁(2ω₁), α₁∨⟩| = ½·2 = 1
        assert_eq!(s_sequence(&p, &a, &[0]).unwrap(), vec![(BigUint::one(), 0)]);
        // empty word on mass at id
        let m_id = FanElement::from_coeffs([(id, BigRational::from(BigInt::from(3)))]).unwrap();
        assert_eq!(s_sequence(&p, &m_id, &[]).unwrap(), vec![]);
        // wrong word rejected
        assert!(s_sequence(&p, &a, &[]).is_err());
    }

    #[test]
    fn extremal_cascades_match() {
        // For a = e_σ the reduction exponents are the extremal cascade.
        let a2 = CartanData::named("A2").unwrap();
        let lambda = Weight::from_i64(&[1, 1]);
        let p = StratPoset::build(&a2, &lambda, &WeylElement::longest(&a2), None).unwrap();
        for v in 0..p.num_vertices() {
            let word = p.vertex(v).rep().word().to_vec();
            let seq = s_sequence(&p, &FanElement::unit(v), &word).unwrap();
            let cascade = extremal_exponents(&a2, &lambda, &word);
            assert_eq!(seq.len(), cascade.len());
            for ((n, _), c) in seq.iter().zip(&cascade) {
                assert_eq!(BigInt::from_biguint(Sign::Plus, n.clone()), *c);
            }
        }
    }

    #[test]
    fn monomial_weights() {
        let a2 = CartanData::named("A2").unwrap();
        let lambda = Weight::from_i64(&[1, 1]);
        let p = StratPoset::build(&a2, &lambda, &WeylElement::longest(&a2), None).unwrap();
        // weight of v_{e_{w0}} is w0(λ), along both reduced words of w0
        let w0 = p.tau_index();
        for word in [vec![0, 1, 0], vec![1, 0, 1]] {
            let mono = v_monomial(&p, &FanElement::unit(w0), &word).unwrap();
            assert_eq!(mono.shape, BigUint::one());
            let mut mu = lambda.to_rational();
            for (i, n) in &mono.factors {
                let alpha = a2.simple_root_as_weight(*i);
                let c = BigRational::from(-BigInt::from_biguint(Sign::Plus, n.clone()));
                mu = mu.add_scaled(&c, &alpha);
            }
            assert_eq!(
                mu.to_integral().unwrap(),
                p.lambda_image(w0).clone(),
                "weight must be w0(λ) for word {word:?}"
            );
        }
        // e_id gives the empty monomial
        let mono = v_monomial(&p, &FanElement::unit(p.id_index()), &[]).unwrap();
        assert!(mono.factors.is_empty());
        assert_eq!(alloc::format!("{mono}"), "v(m=1)");
    }

    #[test]
    fn monomial_display() {
        let m = DividedPowerMonomial {
            factors: vec![(0, BigUint::from(1u32)), (1, BigUint::from(3u32))],
            shape: BigUint::from(2u32),
        };
        assert_eq!(alloc::format!("{m}"), "X(-1)^(1) X(-2)^(3) v(m=2)");
    }
}
