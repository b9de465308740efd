//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run `cargo test -p lsfan-core --test acceptance -- --nocapture` to see the
//! per-criterion lines. The case matrix is: types A1, A2, B2, A3, G2; every
//! dominant λ with fundamental coordinates in {0,1,2} (λ ≠ 0); every coset
//! τ ≤ w₀ for the parabolic attached to λ; degrees m ∈ {1,2,3}.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use lsfan_core::demazure;
use lsfan_core::ls_fan::{self, FanElement, FanProduct};
use lsfan_core::nok;
use lsfan_core::root_system::{CartanData, Weight};
use lsfan_core::strat_poset::{Chain, StratPoset};
use lsfan_core::weyl::WeylElement;

const MATRIX_TYPES: [&str; 5] = ["A1", "A2", "B2", "A3", "G2"];
const SEED: u64 = 1729;

/// All dominant weights with coordinates in {0,1,2}, excluding zero.
fn matrix_lambdas(rank: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(rank as u32) {
        let mut c = code;
        let mut v = vec![0i64; rank];
        for slot in v.iter_mut() {
            *slot = (c % 3) as i64;
            c /= 3;
        }
        if v.iter().any(|&x| x != 0) {
            out.push(v);
        }
    }
    out
}

/// Runs `f` on every (type, λ, τ) case of the matrix.
fn for_each_case(mut f: impl FnMut(&str, &CartanData, &Weight, &StratPoset)) {
    for name in MATRIX_TYPES {
        let cd = CartanData::named(name).unwrap();
        for lam in matrix_lambdas(cd.rank()) {
            let lambda = Weight::from_i64(&lam);
            let top =
                StratPoset::build(&cd, &lambda, &WeylElement::longest(&cd), None).unwrap();
            for t in 0..top.num_vertices() {
                let p = StratPoset::build(&cd, &lambda, top.vertex(t).rep(), None).unwrap();
                f(name, &cd, &lambda, &p);
            }
        }
    }
}

fn build(name: &str, lam: &[i64]) -> StratPoset {
    let cd = CartanData::named(name).unwrap();
    StratPoset::build(&cd, &Weight::from_i64(lam), &WeylElement::longest(&cd), None).unwrap()
}

/// Independent per-chain membership check straight from the lattice
/// conditions: all bond-weighted partial sums along the chain are integral
/// and the coefficients sum to `m`.
fn chain_conditions_hold(chain: &Chain, a: &FanElement, degree: &BigRational) -> bool {
    if !a.coeffs().keys().all(|v| chain.contains(*v)) {
        return false;
    }
    let mut partial = BigRational::zero();
    for (k, b) in chain.bonds.iter().enumerate() {
        partial += a.coeff(chain.elems[k]);
        if !(&partial * BigRational::from(b.clone())).is_integer() {
            return false;
        }
    }
    partial += a.coeff(*chain.elems.last().unwrap());
    partial == *degree && degree.is_integer()
}

/// The SL₃ adjoint bonded Hasse diagram, exactly as published.
#[test]
fn criterion_1_sl3_adjoint_hasse_diagram() {
    let t0 = Instant::now();
    let p = build("A2", &[1, 1]);
    assert_eq!(p.num_vertices(), 6);
    assert_eq!(p.edges().len(), 8);
    let got: BTreeSet<(String, String, i64)> = p
        .edges()
        .iter()
        .map(|e| {
            (
                p.vertex(e.lower).word_string(),
                p.vertex(e.upper).word_string(),
                i64::try_from(&e.bond).unwrap(),
            )
        })
        .collect();
    let expected: BTreeSet<(String, String, i64)> = [
        ("id", "1", 1),
        ("id", "2", 1),
        ("1", "2.1", 2),
        ("2", "1.2", 2),
        ("1", "1.2", 1),
        ("2", "2.1", 1),
        ("2.1", "1.2.1", 1),
        ("1.2", "1.2.1", 1),
    ]
    .into_iter()
    .map(|(l, u, b)| (l.to_string(), u.to_string(), b))
    .collect();
    assert_eq!(got, expected);
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("acceptance: criterion 1 (SL3 adjoint bonded Hasse diagram, {elapsed:?}): PASS");
}

/// Demazure character equals the path character, exactly, over the matrix.
#[test]
fn criterion_2_character_equality() {
    let t0 = Instant::now();
    let mut cases = 0usize;
    for_each_case(|name, cd, lambda, p| {
        let tau = p.vertex(p.tau_index());
        let word = tau.rep().word().to_vec();
        for m in 1..=3u64 {
            let operator_side = demazure::demazure_character(cd, lambda, m, &word).unwrap();
            let path_side = demazure::path_character(p, m);
            assert_eq!(
                operator_side,
                path_side,
                "type {name} lambda {:?} tau {} m {m}",
                lambda.coords(),
                tau.word_string()
            );
            cases += 1;
        }
    });
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 60, "matrix took {elapsed:?}");
    println!("acceptance: criterion 2 (character equality, {cases} cases, {elapsed:?}): PASS");
}

/// Bond-product degree equals the finite-difference extraction from the
/// dimension counts, on every case.
#[test]
fn criterion_3_degree_cross_check() {
    let t0 = Instant::now();
    let mut cases = 0usize;
    for_each_case(|name, _cd, lambda, p| {
        let r = p.rank_of(p.tau_index());
        let samples: Vec<u64> = (0..=r as u64).collect();
        let via_hilbert = nok::degree_via_hilbert(p, &samples).unwrap();
        assert_eq!(
            nok::degree(p),
            via_hilbert,
            "type {name} lambda {:?} tau {}",
            lambda.coords(),
            p.vertex(p.tau_index()).word_string()
        );
        cases += 1;
    });
    assert_eq!(nok::degree(&build("A2", &[1, 1])), BigInt::from(6));
    assert_eq!(nok::degree(&build("A1", &[2])), BigInt::from(2));
    println!(
        "acceptance: criterion 3 (degree = Hilbert count, {cases} cases, {:?}): PASS",
        t0.elapsed()
    );
}

fn theta_posets() -> Vec<StratPoset> {
    vec![
        build("A2", &[1, 1]),
        build("A2", &[2, 1]),
        build("A2", &[1, 0]),
        build("B2", &[1, 1]),
        build("B2", &[1, 2]),
    ]
}

/// Θ is a bijection between LS-paths of shape mλ and degree-m fan members.
#[test]
fn criterion_4_theta_bijection() {
    let t0 = Instant::now();
    for p in theta_posets() {
        for m in 1..=4u64 {
            let members = ls_fan::enumerate_fan(&p, m);
            let paths = ls_fan::enumerate_ls_paths(&p, m);
            assert_eq!(paths.len(), members.len(), "|B(mλ)_τ| = |LS_λ⁺(m)|");
            assert_eq!(
                BigInt::from(ls_fan::count_fan(&p, m)),
                BigInt::from(members.len()),
            );
            for a in &members {
                let path = ls_fan::theta_inv(&p, a, m).unwrap();
                assert_eq!(&ls_fan::theta(&p, &path, m).unwrap(), a);
            }
            for path in &paths {
                let a = ls_fan::theta(&p, path, m).unwrap();
                assert_eq!(&ls_fan::theta_inv(&p, &a, m).unwrap(), path);
                // Θ preserves supports.
                let supp: BTreeSet<usize> = a.coeffs().keys().copied().collect();
                let path_supp: BTreeSet<usize> = path.sigmas.iter().copied().collect();
                assert_eq!(supp, path_supp);
            }
        }
    }
    println!("acceptance: criterion 4 (theta bijection, m <= 4, {:?}): PASS", t0.elapsed());
}

fn try_sub(a: &FanElement, b: &FanElement) -> Option<FanElement> {
    let mut pairs = Vec::new();
    let mut remaining = a.coeffs().clone();
    for (v, c) in b.coeffs() {
        let have = remaining.remove(v).unwrap_or_else(BigRational::zero);
        let diff = have - c;
        if diff.is_negative() {
            return None;
        }
        pairs.push((*v, diff));
    }
    pairs.extend(remaining);
    Some(FanElement::from_coeffs(pairs).unwrap())
}

/// Finds up to `cap` ordered standard decompositions by exhaustive search.
fn brute_force_decompositions(
    p: &StratPoset,
    a: &FanElement,
    m: usize,
    cap: usize,
) -> Vec<Vec<FanElement>> {
    let candidates: Vec<FanElement> = ls_fan::enumerate_fan(p, 1)
        .into_iter()
        .filter(|b| try_sub(a, b).is_some())
        .collect();
    let mut out = Vec::new();
    let mut acc = Vec::new();
    search(p, &candidates, a.clone(), m, cap, &mut acc, &mut out);
    out
}

fn search(
    p: &StratPoset,
    candidates: &[FanElement],
    remaining: FanElement,
    left: usize,
    cap: usize,
    acc: &mut Vec<FanElement>,
    out: &mut Vec<Vec<FanElement>>,
) {
    if out.len() >= cap {
        return;
    }
    if left == 0 {
        if remaining.is_zero() {
            out.push(acc.clone());
        }
        return;
    }
    for b in candidates {
        if let Some(prev) = acc.last() {
            let min_prev = *prev.support_desc(p).last().unwrap();
            let max_b = b.support_desc(p)[0];
            if !p.is_leq(max_b, min_prev) {
                continue;
            }
        }
        if let Some(rest) = try_sub(&remaining, b) {
            acc.push(b.clone());
            search(p, candidates, rest, left - 1, cap, acc, out);
            acc.pop();
        }
    }
}

/// Unique standard decomposition, against the exhaustive oracle.
#[test]
fn criterion_5_unique_standard_decomposition() {
    let t0 = Instant::now();
    let mut members_checked = 0usize;
    for p in theta_posets() {
        for m in 1..=3u64 {
            for a in ls_fan::enumerate_fan(&p, m) {
                let found = brute_force_decompositions(&p, &a, m as usize, 2);
                assert_eq!(found.len(), 1, "exactly one standard decomposition");
                let direct = ls_fan::standard_decompose(&p, &a).unwrap();
                assert_eq!(found[0], direct);
                let total =
                    direct.iter().fold(FanElement::zero(), |acc, part| acc.add(part));
                assert_eq!(total, a);
                assert!(ls_fan::is_standard_monomial(&p, &direct));
                members_checked += 1;
            }
        }
    }
    println!(
        "acceptance: criterion 5 (unique standard decomposition, {members_checked} members, {:?}): PASS",
        t0.elapsed()
    );
}

/// Dehy chain-independence on the regular-λ A3 poset: every saturated chain
/// between two comparable cosets carries the same bond gcd (hence the same
/// `(d,λ)`-chain verdicts for every d), and every multi-chain member passes
/// the full lattice conditions on every maximal chain through its support.
#[test]
fn criterion_6_chain_independence() {
    let t0 = Instant::now();
    let p = build("A3", &[1, 1, 1]);
    let mut pairs = 0usize;
    for top in 0..p.num_vertices() {
        for bottom in 0..p.num_vertices() {
            if bottom == top || !p.is_leq(bottom, top) {
                continue;
            }
            let chains = p.saturated_chains_between(top, bottom);
            assert!(!chains.is_empty());
            let mut gcds = BTreeSet::new();
            for chain in &chains {
                let mut g = BigInt::zero();
                for w in chain.windows(2) {
                    g = num_integer::gcd(g, p.bond(w[1], w[0]).unwrap().clone());
                }
                gcds.insert(g);
            }
            assert_eq!(gcds.len(), 1, "saturated chains disagree between {top} and {bottom}");
            pairs += 1;
        }
    }
    let mut multi = 0usize;
    for q in [p, build("A2", &[1, 1]), build("B2", &[1, 2])] {
        let maximal = q.maximal_chains();
        for m in 1..=3u64 {
            let degree = BigRational::from(BigInt::from(m));
            for a in ls_fan::enumerate_fan(&q, m) {
                let through: Vec<&Chain> = maximal
                    .iter()
                    .filter(|c| a.coeffs().keys().all(|v| c.contains(*v)))
                    .collect();
                if through.len() < 2 {
                    continue;
                }
                for chain in through {
                    assert!(
                        chain_conditions_hold(chain, &a, &degree),
                        "member fails on one of its chains"
                    );
                }
                multi += 1;
            }
        }
    }
    println!(
        "acceptance: criterion 6 (chain independence, {pairs} pairs, {multi} multi-chain members, {:?}): PASS",
        t0.elapsed()
    );
}

/// The reduction S(a,σ): integral nonnegative exponents, exact weight
/// bookkeeping, and the extremal cascade for extremal members.
#[test]
fn criterion_7_divided_power_reduction() {
    let t0 = Instant::now();
    let mut members = 0usize;
    for_each_case(|_name, cd, lambda, p| {
        for s in 1..=2u64 {
            for a in ls_fan::enumerate_fan(p, s) {
                let max = a.support_desc(p)[0];
                let word = p.vertex(max).rep().word().to_vec();
                // integrality and nonnegativity are checked inside; weight
                // bookkeeping is re-verified here.
                let mono = demazure::v_monomial(p, &a, &word).unwrap();
                let mut expected = lambda.scaled(&BigInt::from(s)).to_rational();
                for (i, n) in &mono.factors {
                    let alpha = cd.simple_root_as_weight(*i);
                    let c = -BigRational::from(BigInt::from(n.clone()));
                    expected = expected.add_scaled(&c, &alpha);
                }
                assert_eq!(expected, ls_fan::weight_of(p, &a));
                members += 1;
            }
            // Extremal members: exponents are the cascade for s·λ.
            for v in 0..p.num_vertices() {
                let word = p.vertex(v).rep().word().to_vec();
                let extremal = FanElement::unit(v).scaled(&BigRational::from(BigInt::from(s)));
                let seq = demazure::s_sequence(p, &extremal, &word).unwrap();
                let cascade =
                    demazure::extremal_exponents(cd, &lambda.scaled(&BigInt::from(s)), &word);
                let got: Vec<BigInt> = seq.iter().map(|(n, _)| BigInt::from(n.clone())).collect();
                assert_eq!(got, cascade);
                for ((_, i), &w) in seq.iter().zip(word.iter()) {
                    assert_eq!(*i, w);
                }
            }
        }
    });
    println!(
        "acceptance: criterion 7 (divided-power reduction, {members} members, {:?}): PASS",
        t0.elapsed()
    );
}

/// #standard sequences of m degree-1 members equals dimension(P, m).
#[test]
fn criterion_8_standard_monomial_count() {
    let t0 = Instant::now();
    let mut cases = 0usize;
    for_each_case(|name, _cd, lambda, p| {
        let ones = ls_fan::enumerate_fan(p, 1);
        let min_supp: Vec<usize> =
            ones.iter().map(|a| *a.support_desc(p).last().unwrap()).collect();
        let max_supp: Vec<usize> = ones.iter().map(|a| a.support_desc(p)[0]).collect();
        // counts[j] = number of standard sequences ending at ones[j]
        let mut counts: Vec<num_bigint::BigUint> =
            vec![num_bigint::BigUint::one(); ones.len()];
        for m in 1..=3u64 {
            if m > 1 {
                let mut next = vec![num_bigint::BigUint::zero(); ones.len()];
                for (j, nj) in next.iter_mut().enumerate() {
                    for i in 0..ones.len() {
                        // sequence … ones[i], ones[j] is standard iff
                        // min supp ones[i] ≥ max supp ones[j]
                        if p.is_leq(max_supp[j], min_supp[i]) {
                            *nj += &counts[i];
                        }
                    }
                }
                counts = next;
            }
            let total: num_bigint::BigUint =
                counts.iter().fold(num_bigint::BigUint::zero(), |acc, c| acc + c);
            assert_eq!(
                total,
                demazure::dimension(p, m),
                "type {name} lambda {:?} tau {} m {m}",
                lambda.coords(),
                p.vertex(p.tau_index()).word_string()
            );
            cases += 1;
        }
    });
    println!(
        "acceptance: criterion 8 (standard monomial count, {cases} cases, {:?}): PASS",
        t0.elapsed()
    );
}

/// Fan-algebra laws on 10⁴ seeded random pairs: degree additivity, per-chain
/// monoid closure, and Zero exactly on incomparable supports.
#[test]
fn criterion_9_fan_algebra_laws() {
    let t0 = Instant::now();
    let pools: Vec<(StratPoset, Vec<FanElement>, Vec<Chain>)> = [
        ("A2", vec![1i64, 1]),
        ("B2", vec![1, 2]),
        ("A3", vec![1, 1, 1]),
    ]
    .into_iter()
    .map(|(name, lam)| {
        let p = build(name, &lam);
        let mut members = ls_fan::enumerate_fan(&p, 1);
        members.extend(ls_fan::enumerate_fan(&p, 2));
        let chains = p.maximal_chains();
        (p, members, chains)
    })
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut zeros = 0usize;
    for trial in 0..10_000usize {
        let (p, pool, chains) = &pools[trial % pools.len()];
        let a = &pool[(rng.next_u64() % pool.len() as u64) as usize];
        let b = &pool[(rng.next_u64() % pool.len() as u64) as usize];
        // Independent comparability check over the whole support union.
        let union: Vec<usize> =
            a.coeffs().keys().chain(b.coeffs().keys()).copied().collect();
        let mut comparable = true;
        for (i, &u) in union.iter().enumerate() {
            for &v in &union[i + 1..] {
                if u != v && !p.is_leq(u, v) && !p.is_leq(v, u) {
                    comparable = false;
                }
            }
        }
        match ls_fan::fan_multiply(p, a, b) {
            FanProduct::Zero => {
                assert!(!comparable, "Zero only on incomparable supports");
                zeros += 1;
            }
            FanProduct::Product(sum) => {
                assert!(comparable);
                assert_eq!(sum.degree(), &(a.degree() + b.degree()), "degree additivity");
                assert_eq!(sum, a.add(b));
                assert!(ls_fan::in_fan(p, &sum), "monoid closure");
                // Per-chain closure: the sum satisfies the partial-sum
                // conditions on a maximal chain through the union.
                let chain = chains
                    .iter()
                    .find(|c| union.iter().all(|v| c.contains(*v)))
                    .expect("comparable union extends to a maximal chain");
                assert!(chain_conditions_hold(chain, &sum, sum.degree()));
            }
        }
    }
    assert!(zeros > 0, "the sample must exercise the Zero branch");
    println!(
        "acceptance: criterion 9 (fan-algebra laws, 10000 pairs, {zeros} zeros, {:?}): PASS",
        t0.elapsed()
    );
}
