//! Topological intricacy and average sample complexity for SFTs.
//!
//! Finite-n values average log N(S) over all coordinate subsets S of
//! {0..n-1} with a coefficient system; the limit for mixing SFTs under
//! uniform weights comes from a fast-converging series over block counts.

use num_traits::ToPrimitive;

use crate::coeffs::{binomial, CoefficientSystem};
use crate::error::{Error, Result};
use crate::subshift::Sft;

/// Hard ceiling for the 2^n subset averages.
pub const FINITE_N_LIMIT: usize = 22;

/// One finite-n evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinitePoint {
    pub n: usize,
    pub asc: f64,
    pub int: f64,
}

/// Result of the series evaluation for mixing SFTs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesIntricacy {
    pub h: f64,
    pub asc: f64,
    pub int: f64,
    /// Number of series terms taken.
    pub terms: usize,
    /// Bound on the truncated tail of the term sum.
    pub tail_bound: f64,
}

/// Asc(n) = (1/n) Σ_S c_S log N(S), exactly, over all 2^n subsets.
pub fn asc_finite(x: &Sft, n: usize, cs: &CoefficientSystem) -> Result<f64> {
    Ok(weighted_log_pattern_sum(x, n, cs)? / n as f64)
}

/// Int(n) = (1/n) Σ_S c_S [log N(S) + log N(S^c) - log N(n*)]
///        = 2 Asc(n) - (1/n) log N(n*).
pub fn int_finite(x: &Sft, n: usize, cs: &CoefficientSystem) -> Result<f64> {
    let asc = asc_finite(x, n, cs)?;
    let full = ln_big(&x.path_count(n));
    Ok(2.0 * asc - full / n as f64)
}

/// Asc(1..=n_max) and Int(1..=n_max).
pub fn asc_profile(x: &Sft, n_max: usize, cs: &CoefficientSystem) -> Result<Vec<FinitePoint>> {
    (1..=n_max)
        .map(|n| {
            let asc = asc_finite(x, n, cs)?;
            let int = 2.0 * asc - ln_big(&x.path_count(n)) / n as f64;
            Ok(FinitePoint { n, asc, int })
        })
        .collect()
}

/// b_n = Σ_S c_S log N(S). Interval-decomposition fast path when M^2 > 0,
/// otherwise one shared enumeration of the length-n words.
fn weighted_log_pattern_sum(x: &Sft, n: usize, cs: &CoefficientSystem) -> Result<f64> {
    if n == 0 || n > FINITE_N_LIMIT {
        return Err(Error::ResourceBudget(format!(
            "finite-n averages support 1 <= n <= {FINITE_N_LIMIT}, got {n}"
        )));
    }
    let c = cs.coefficients(n)?;
    if x.is_power_positive(2) {
        // log N(S) splits over the maximal runs of S, so group subsets by
        // which runs they contain: the run [i, i+L) lies in subsets whose
        // remaining k-L members avoid the run's boundary positions.
        let log_n: Vec<f64> = (0..=n).map(|len| ln_big(&x.path_count(len))).collect();
        let mut total = 0.0;
        for len in 1..=n {
            if log_n[len] == 0.0 {
                continue;
            }
            let mut weight = 0.0;
            for start in 0..=n - len {
                let boundaries = (start > 0) as usize + (start + len < n) as usize;
                let free = n - len - boundaries;
                for extra in 0..=free {
                    weight += c[len + extra] * binomial(free, extra);
                }
            }
            total += weight * log_n[len];
        }
        Ok(total)
    } else {
        subset_sum_by_enumeration(x, n, &c)
    }
}

/// Direct route: list the allowed length-n words once, then count distinct
/// projections for every subset.
fn subset_sum_by_enumeration(x: &Sft, n: usize, c: &[f64]) -> Result<f64> {
    let words = allowed_words(x, n)?;
    let cost = words.len() as u128 * (1u128 << n);
    if cost > 200_000_000 {
        return Err(Error::ResourceBudget(format!(
            "subset enumeration cost {cost} too high at n = {n}"
        )));
    }
    let bits_per_symbol = usize::BITS - (x.size() - 1).leading_zeros();
    let packable = bits_per_symbol as usize * n <= 64;
    let mut total = 0.0;
    let mut keys: Vec<u64> = Vec::with_capacity(words.len());
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if c[size] == 0.0 {
            continue;
        }
        let count = if packable {
            keys.clear();
            for w in &words {
                let mut key = 0u64;
                let mut m = mask;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    key = key << bits_per_symbol | w[i] as u64;
                    m &= m - 1;
                }
                keys.push(key);
            }
            keys.sort_unstable();
            keys.dedup();
            keys.len()
        } else {
            let mut set: std::collections::HashSet<Vec<u8>> = std::collections::HashSet::new();
            for w in &words {
                set.insert(
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect(),
                );
            }
            set.len()
        };
        total += c[size] * (count as f64).ln();
    }
    Ok(total)
}

fn allowed_words(x: &Sft, n: usize) -> Result<Vec<Vec<u8>>> {
    let estimate = x.path_count(n);
    if estimate.to_u64().map_or(true, |e| e > 5_000_000) {
        return Err(Error::ResourceBudget(format!(
            "{estimate} allowed words of length {n} exceed the enumeration budget"
        )));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(x: &Sft, n: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        let last = *word.last().unwrap();
        for next in 0..x.size() as u8 {
            if x.allows(last, next) {
                word.push(next);
                rec(x, n, word, out);
                word.pop();
            }
        }
    }
    for start in 0..x.size() as u8 {
        word.push(start);
        rec(x, n, &mut word, &mut out);
        word.pop();
    }
    Ok(out)
}

/// Limit of Asc under uniform weights for an SFT with M^2 > 0:
/// (1/4) Σ_k log N(k*) / 2^k, truncated once the remaining tail of the term
/// sum drops below 1e-10. Int follows from Int = 2 Asc - h.
pub fn asc_sft_series(x: &Sft) -> Result<SeriesIntricacy> {
    if !x.is_power_positive(2) {
        return Err(Error::Precondition(
            "series formula needs an adjacency matrix with M^2 > 0; use the finite-n profile"
                .into(),
        ));
    }
    let log_r = (x.size() as f64).ln();
    // log N(k*) <= k log r, so the tail past K is below log(r) (K+2) / 2^K.
    let mut terms = 8usize;
    while log_r * (terms as f64 + 2.0) / 2f64.powi(terms as i32) >= 1e-10 {
        terms += 1;
    }
    let mut sum = 0.0;
    for k in 1..=terms {
        sum += ln_big(&x.path_count(k)) / 2f64.powi(k as i32);
    }
    let tail_bound = log_r * (terms as f64 + 2.0) / 2f64.powi(terms as i32);
    let asc = sum / 4.0;
    let h = x.entropy();
    Ok(SeriesIntricacy { h, asc, int: 2.0 * asc - h, terms, tail_bound })
}

/// Natural log of a big count (counts of interest fit f64 comfortably).
pub(crate) fn ln_big(v: &num_bigint::BigUint) -> f64 {
    match v.to_f64() {
        Some(f) if f.is_finite() && f > 0.0 => f.ln(),
        _ => {
            // top 53 bits + exponent
            let bits = v.bits();
            let shift = bits.saturating_sub(53);
            let top = (v >> shift).to_f64().unwrap_or(1.0);
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subshift::Sft;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn golden_mean_int_at_three() {
        let g = Sft::named("golden").unwrap();
        let int = int_finite(&g, 3, &CoefficientSystem::Uniform).unwrap();
        let exact = (4.0 * 6f64.ln() + 2.0 * 8f64.ln() - 6.0 * 5f64.ln()) / 24.0;
        assert!((int - exact).abs() < 1e-12);
        assert!((int - 0.070).abs() < 1e-3);
    }

    #[test]
    fn full_shift_asc_is_half_log_two_at_every_n() {
        let f = Sft::named("full2").unwrap();
        for n in 1..=12 {
            let asc = asc_finite(&f, n, &CoefficientSystem::Uniform).unwrap();
            assert!((asc - LN2 / 2.0).abs() < 1e-12, "n={n}");
            let int = int_finite(&f, n, &CoefficientSystem::Uniform).unwrap();
            assert!(int.abs() < 1e-12);
        }
    }

    #[test]
    fn period_two_closed_form() {
        let p = Sft::named("period2").unwrap();
        for n in 1..=14 {
            let asc = asc_finite(&p, n, &CoefficientSystem::Uniform).unwrap();
            let expected = (1.0 - 0.5f64.powi(n as i32)) * LN2 / n as f64;
            assert!((asc - expected).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn fast_path_matches_enumeration() {
        let g = Sft::named("golden").unwrap();
        for cs in [
            CoefficientSystem::Uniform,
            CoefficientSystem::Neural,
            CoefficientSystem::p_symmetric(0.3).unwrap(),
        ] {
            for n in 1..=10 {
                let fast = weighted_log_pattern_sum(&g, n, &cs).unwrap();
                let slow = subset_sum_by_enumeration(&g, n, &cs.coefficients(n).unwrap()).unwrap();
                assert!((fast - slow).abs() < 1e-10, "{} n={n}", cs.label());
            }
        }
    }

    #[test]
    fn series_full_shifts() {
        for r in 2..=5 {
            let f = Sft::full_shift(r).unwrap();
            let s = asc_sft_series(&f).unwrap();
            assert!(
                (s.asc - (r as f64).ln() / 2.0).abs() < 1e-9,
                "r={r} asc={}",
                s.asc
            );
        }
    }

    #[test]
    fn series_golden_mean() {
        let s = asc_sft_series(&Sft::named("golden").unwrap()).unwrap();
        assert!((s.asc - 0.286).abs() < 5e-3);
        assert!((s.int - 0.090).abs() < 5e-3);
        assert!(s.tail_bound < 1e-10);
    }

    #[test]
    fn series_rejects_periodic_matrix() {
        assert!(matches!(
            asc_sft_series(&Sft::named("period2").unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn subadditivity_of_term_sums() {
        for name in ["golden", "full2", "period2"] {
            let x = Sft::named(name).unwrap();
            let b: Vec<f64> = (1..=20)
                .map(|n| {
                    n as f64 * asc_finite(&x, n, &CoefficientSystem::Uniform).unwrap()
                })
                .collect();
            for m in 1..=10usize {
                for n in 1..=10usize {
                    assert!(
                        b[m + n - 1] <= b[m - 1] + b[n - 1] + 1e-10,
                        "{name} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn asc_below_entropy_chain() {
        for name in ["golden", "full2", "figI", "figII"] {
            let x = Sft::named(name).unwrap();
            let h = x.entropy();
            for n in 1..=10 {
                let asc = asc_finite(&x, n, &CoefficientSystem::Uniform).unwrap();
                let full = ln_big(&x.path_count(n)) / n as f64;
                assert!(asc <= full + 1e-12, "{name} n={n}");
                assert!(full >= h - 1e-12, "{name} n={n}");
                let int = int_finite(&x, n, &CoefficientSystem::Uniform).unwrap();
                assert!(int >= -1e-12, "{name} n={n}");
            }
        }
    }

    #[test]
    fn series_agrees_with_finite_extrapolation() {
        for name in ["golden", "full2"] {
            let x = Sft::named(name).unwrap();
            let series = asc_sft_series(&x).unwrap().asc;
            let finite = asc_finite(&x, 20, &CoefficientSystem::Uniform).unwrap();
            assert!((finite - series).abs() <= 0.02, "{name}");
            assert!(finite >= series - 1e-12, "{name}: finite values sit above the limit");
        }
    }

    #[test]
    fn figure_fixtures_disagree_in_asc() {
        let fig1 = Sft::named("figI").unwrap();
        let fig2 = Sft::named("figII").unwrap();
        for n in 1..=10 {
            assert_eq!(fig1.count_blocks(n), fig2.count_blocks(n), "n={n}");
        }
        let p1 = asc_finite(&fig1, 10, &CoefficientSystem::Uniform).unwrap();
        let p2 = asc_finite(&fig2, 10, &CoefficientSystem::Uniform).unwrap();
        assert!((p1 - 0.399).abs() < 5e-3, "figI Asc(10) = {p1}");
        assert!((p2 - 0.377).abs() < 5e-3, "figII Asc(10) = {p2}");
        let i1 = int_finite(&fig1, 10, &CoefficientSystem::Uniform).unwrap();
        let i2 = int_finite(&fig2, 10, &CoefficientSystem::Uniform).unwrap();
        assert!((i1 - 0.254).abs() < 5e-3, "figI Int(10) = {i1}");
        assert!((i2 - 0.208).abs() < 5e-3, "figII Int(10) = {i2}");
    }

    #[test]
    fn budget_guard() {
        let g = Sft::named("golden").unwrap();
        assert!(matches!(
            asc_finite(&g, 23, &CoefficientSystem::Uniform),
            Err(Error::ResourceBudget(_))
        ));
    }
}
