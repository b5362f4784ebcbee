//! Stationary r-step Markov measures on SFTs: entropy rate, conditional
//! entropies at a lag, and the measure-theoretic average sample complexity
//! and intricacy, by series (uniform weights) and by finite-n brute force.

use crate::coeffs::CoefficientSystem;
use crate::error::{Error, Result};
use crate::subshift::Sft;

/// Budget for the finite-n brute-force average.
pub const BRUTE_N_LIMIT: usize = 18;

/// A stationary Markov measure of order r on an SFT, carried by its chain on
/// allowed r-blocks.
#[derive(Debug, Clone)]
pub struct MarkovMeasure {
    sft: Sft,
    order: usize,
    /// allowed r-blocks over the working alphabet, lexicographic
    states: Vec<Vec<u8>>,
    /// block-to-block transition probabilities
    chain: Vec<Vec<f64>>,
    stationary: Vec<f64>,
}

/// Truncated series evaluation with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
    pub tail_bound: f64,
}

impl MarkovMeasure {
    /// Build an order-`r` measure from transition probabilities given as
    /// (context, next symbol, probability) triples over the working
    /// alphabet. For each allowed context, probabilities of unlisted allowed
    /// successors are filled by complement when exactly one is missing.
    pub fn build_rstep(x: &Sft, r: usize, params: &[(String, char, f64)]) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("order must be >= 1".into()));
        }
        let states = allowed_blocks(x, r);
        if states.is_empty() {
            return Err(Error::EmptySubshift);
        }
        let find_state = |text: &str| -> Result<usize> {
            let data = text
                .chars()
                .map(|c| x.alphabet().index_of(c))
                .collect::<Result<Vec<u8>>>()?;
            states
                .iter()
                .position(|s| *s == data)
                .ok_or_else(|| Error::InvalidArgument(format!("context {text:?} is not an allowed {r}-block")))
        };

        let m = states.len();
        let mut chain = vec![vec![0.0f64; m]; m];
        let mut given: Vec<Vec<Option<f64>>> = vec![vec![None; m]; m];
        for (context, next, prob) in params {
            let i = find_state(context)?;
            let next_idx = x.alphabet().index_of(*next)?;
            if !(0.0..=1.0).contains(prob) {
                return Err(Error::BadProbability {
                    name: format!("{context}->{next}"),
                    value: *prob,
                });
            }
            let j = successor_index(x, &states, i, next_idx).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "transition {context:?} -> {next:?} is forbidden by the SFT"
                ))
            })?;
            given[i][j] = Some(*prob);
        }
        for i in 0..m {
            let succ: Vec<usize> = (0..m)
                .filter(|&j| successor_ok(x, &states[i], &states[j]))
                .collect();
            let specified: f64 = succ.iter().filter_map(|&j| given[i][j]).sum();
            let missing: Vec<usize> = succ.iter().copied().filter(|&j| given[i][j].is_none()).collect();
            match missing.len() {
                0 => {
                    if (specified - 1.0).abs() > 1e-9 {
                        return Err(Error::InvalidArgument(format!(
                            "probabilities out of context {:?} sum to {specified}, not 1",
                            state_text(x, &states[i])
                        )));
                    }
                }
                1 => {
                    let rem = 1.0 - specified;
                    if rem < -1e-9 {
                        return Err(Error::BadProbability {
                            name: format!("complement out of {:?}", state_text(x, &states[i])),
                            value: rem,
                        });
                    }
                    given[i][missing[0]] = Some(rem.max(0.0));
                }
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "context {:?} leaves {} successor probabilities unspecified",
                        state_text(x, &states[i]),
                        missing.len()
                    )));
                }
            }
            for &j in &succ {
                chain[i][j] = given[i][j].unwrap_or(0.0);
            }
        }
        let stationary = stationary_vector(&chain)?;
        Ok(MarkovMeasure { sft: x.clone(), order: r, states, chain, stationary })
    }

    /// The 1-step family on the golden mean SFT, parameterized by the
    /// probability of staying at 0. The second row is forced: 1 -> 0.
    pub fn golden_mean_1step(p00: f64) -> Result<Self> {
        let x = Sft::named("golden")?;
        MarkovMeasure::build_rstep(&x, 1, &[("0".into(), '0', p00)])
    }

    pub fn sft(&self) -> &Sft {
        &self.sft
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn states(&self) -> Vec<String> {
        self.states.iter().map(|s| state_text(&self.sft, s)).collect()
    }

    pub fn chain(&self) -> &[Vec<f64>] {
        &self.chain
    }

    pub fn stationary(&self) -> &[f64] {
        &self.stationary
    }

    /// Stationarity residual ||pP - p||_1.
    pub fn stationarity_residual(&self) -> f64 {
        let m = self.states.len();
        (0..m)
            .map(|j| {
                let image: f64 = (0..m).map(|i| self.stationary[i] * self.chain[i][j]).sum();
                (image - self.stationary[j]).abs()
            })
            .sum()
    }

    /// Marginal distribution of the time-0 symbol.
    pub fn symbol_marginal(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.sft.size()];
        for (s, &p) in self.states.iter().zip(&self.stationary) {
            out[s[0] as usize] += p;
        }
        out
    }

    /// Entropy rate h = -Σ_i p_i Σ_j P_ij log P_ij, natural log,
    /// 0 log 0 = 0.
    pub fn entropy_rate(&self) -> f64 {
        let mut h = 0.0;
        for (row, &p) in self.chain.iter().zip(&self.stationary) {
            if p <= 0.0 {
                continue;
            }
            for &q in row {
                if q > 0.0 {
                    h -= p * q * q.ln();
                }
            }
        }
        h.max(0.0)
    }

    /// H(alpha | alpha_i): conditional entropy of the time-0 symbol given
    /// the symbol at distance i >= 1. Equal to H(pair at lag i) - H(symbol).
    pub fn conditional_entropy_at_lag(&self, lag: usize) -> Result<f64> {
        if lag == 0 {
            return Err(Error::InvalidArgument("lag must be >= 1".into()));
        }
        let mut joint = self.block_joint_at_lag_one();
        for _ in 1..lag {
            joint = self.advance_joint(joint);
        }
        Ok(self.symbol_conditional_from_joint(&joint))
    }

    /// joint[i][j] = p_i P_ij (block pair at lag 1)
    fn block_joint_at_lag_one(&self) -> Vec<Vec<f64>> {
        let m = self.states.len();
        let mut j0 = vec![vec![0.0; m]; m];
        for i in 0..m {
            for j in 0..m {
                j0[i][j] = self.stationary[i] * self.chain[i][j];
            }
        }
        j0
    }

    /// advance the second coordinate one step: J <- J P
    fn advance_joint(&self, joint: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
        let m = self.states.len();
        let mut next = vec![vec![0.0; m]; m];
        for i in 0..m {
            for d in 0..m {
                let v = joint[i][d];
                if v == 0.0 {
                    continue;
                }
                for j in 0..m {
                    if self.chain[d][j] > 0.0 {
                        next[i][j] += v * self.chain[d][j];
                    }
                }
            }
        }
        next
    }

    /// H(symbol pair) - H(symbol marginal), marginalizing blocks to their
    /// first symbols.
    fn symbol_conditional_from_joint(&self, joint: &[Vec<f64>]) -> f64 {
        let r = self.sft.size();
        let mut pair = vec![vec![0.0f64; r]; r];
        for (i, row) in joint.iter().enumerate() {
            let a = self.states[i][0] as usize;
            for (j, &v) in row.iter().enumerate() {
                pair[a][self.states[j][0] as usize] += v;
            }
        }
        let h_pair: f64 = pair
            .iter()
            .flatten()
            .filter(|&&v| v > 0.0)
            .map(|&v| -v * v.ln())
            .sum();
        let h_sym: f64 = self
            .symbol_marginal()
            .iter()
            .filter(|&&v| v > 0.0)
            .map(|&v| -v * v.ln())
            .sum();
        (h_pair - h_sym).max(0.0)
    }

    /// Asc_mu = (1/2) Σ_{i>=1} 2^{-i} H(alpha | alpha_i), under uniform
    /// weights, truncated when 2^{-K} log(alphabet) < tol.
    pub fn asc_mu(&self, tol: f64) -> Result<SeriesValue> {
        if tol <= 0.0 {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        let log_r = (self.sft.size() as f64).ln();
        let mut terms = 1usize;
        while log_r / 2f64.powi(terms as i32) >= tol {
            terms += 1;
        }
        let mut sum = 0.0;
        let mut joint = self.block_joint_at_lag_one();
        for i in 1..=terms {
            sum += self.symbol_conditional_from_joint(&joint) / 2f64.powi(i as i32);
            if i < terms {
                joint = self.advance_joint(joint);
            }
        }
        Ok(SeriesValue {
            value: sum / 2.0,
            terms,
            tail_bound: log_r / 2f64.powi(terms as i32),
        })
    }

    /// Int_mu = 2 Asc_mu - h_mu. Truncation-level negatives are clamped to 0.
    pub fn int_mu(&self) -> Result<f64> {
        let asc = self.asc_mu(1e-12)?.value;
        let int = 2.0 * asc - self.entropy_rate();
        Ok(if int < 0.0 && int > -1e-9 { 0.0 } else { int })
    }

    /// Finite-n measure-theoretic average sample complexity
    /// (1/n) Σ_S c_S H(alpha_S), by direct cylinder enumeration. Serves as
    /// the oracle for the series path.
    pub fn brute_asc_mu(&self, n: usize, cs: &CoefficientSystem) -> Result<f64> {
        if n == 0 || n > BRUTE_N_LIMIT {
            return Err(Error::ResourceBudget(format!(
                "brute-force average supports 1 <= n <= {BRUTE_N_LIMIT}, got {n}"
            )));
        }
        let c = cs.coefficients(n)?;
        let words = self.cylinders(n)?;
        let cost = words.len() as u128 * (1u128 << n);
        if cost > 400_000_000 {
            return Err(Error::ResourceBudget(format!(
                "cylinder enumeration cost {cost} too high at n = {n}"
            )));
        }
        let bits = usize::BITS - (self.sft.size() - 1).leading_zeros();
        let mut total = 0.0;
        // reusable bucket accumulator for projected distributions
        let mut buckets: Vec<f64> = Vec::new();
        for mask in 0u64..1 << n {
            let size = mask.count_ones() as usize;
            if c[size] == 0.0 {
                continue;
            }
            let width = bits as usize * size;
            let h = if width <= 22 {
                buckets.clear();
                buckets.resize(1 << width, 0.0);
                for (w, p) in &words {
                    let mut key = 0usize;
                    let mut m = mask;
                    while m != 0 {
                        let i = m.trailing_zeros() as usize;
                        key = key << bits | w[i] as usize;
                        m &= m - 1;
                    }
                    buckets[key] += p;
                }
                buckets
                    .iter()
                    .filter(|&&q| q > 0.0)
                    .map(|&q| -q * q.ln())
                    .sum::<f64>()
            } else {
                let mut grouped: std::collections::HashMap<Vec<u8>, f64> =
                    std::collections::HashMap::new();
                for (w, p) in &words {
                    let key: Vec<u8> =
                        (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
                    *grouped.entry(key).or_insert(0.0) += p;
                }
                grouped.values().filter(|&&q| q > 0.0).map(|&q| -q * q.ln()).sum()
            };
            total += c[size] * h;
        }
        Ok(total / n as f64)
    }

    /// All length-n symbol cylinders with positive measure, with their
    /// probabilities p_{B_0} Π P_{B_t B_{t+1}}.
    fn cylinders(&self, n: usize) -> Result<Vec<(Vec<u8>, f64)>> {
        let r = self.order;
        let mut out: Vec<(Vec<u8>, f64)> = Vec::new();
        if n <= r {
            // marginalize the stationary block distribution onto prefixes
            let mut grouped: std::collections::HashMap<Vec<u8>, f64> =
                std::collections::HashMap::new();
            for (s, &p) in self.states.iter().zip(&self.stationary) {
                if p > 0.0 {
                    *grouped.entry(s[..n].to_vec()).or_insert(0.0) += p;
                }
            }
            let mut v: Vec<(Vec<u8>, f64)> = grouped.into_iter().collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            return Ok(v);
        }
        // DFS over block-chain paths of length n - r
        let mut stack: Vec<(usize, Vec<u8>, f64)> = self
            .states
            .iter()
            .zip(&self.stationary)
            .enumerate()
            .filter(|(_, (_, &p))| p > 0.0)
            .map(|(i, (s, &p))| (i, s.clone(), p))
            .collect();
        while let Some((state, word, p)) = stack.pop() {
            if word.len() == n {
                out.push((word, p));
                continue;
            }
            for (next, &q) in self.chain[state].iter().enumerate() {
                if q > 0.0 {
                    let mut w = word.clone();
                    w.push(*self.states[next].last().unwrap());
                    stack.push((next, w, p * q));
                }
            }
        }
        Ok(out)
    }
}

/// Allowed r-blocks (paths of r working symbols), lexicographic.
fn allowed_blocks(x: &Sft, r: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut stack: Vec<Vec<u8>> = (0..x.size() as u8).rev().map(|i| vec![i]).collect();
    while let Some(w) = stack.pop() {
        if w.len() == r {
            out.push(w);
            continue;
        }
        let last = *w.last().unwrap();
        for next in (0..x.size() as u8).rev() {
            if x.allows(last, next) {
                let mut v = w.clone();
                v.push(next);
                stack.push(v);
            }
        }
    }
    out
}

fn successor_ok(x: &Sft, from: &[u8], to: &[u8]) -> bool {
    let r = from.len();
    from[1..] == to[..r - 1] && x.allows(from[r - 1], to[r - 1])
}

fn successor_index(x: &Sft, states: &[Vec<u8>], from: usize, next_symbol: u8) -> Option<usize> {
    states
        .iter()
        .position(|s| successor_ok(x, &states[from], s) && *s.last().unwrap() == next_symbol)
}

fn state_text(x: &Sft, s: &[u8]) -> String {
    s.iter().map(|&i| x.alphabet().label(i)).collect()
}

/// Stationary vector of a stochastic matrix: restricted to the unique
/// recurrent class (zero elsewhere), by direct linear solve up to dimension
/// 64 and averaged power iteration above.
fn stationary_vector(chain: &[Vec<f64>]) -> Result<Vec<f64>> {
    let m = chain.len();
    for (i, row) in chain.iter().enumerate() {
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!("row {i} sums to {sum}, not 1")));
        }
        if row.iter().any(|&q| q < 0.0) {
            return Err(Error::BadProbability { name: format!("row {i}"), value: -1.0 });
        }
    }
    let class = unique_recurrent_class(chain)?;
    let k = class.len();
    let sub: Vec<Vec<f64>> = class
        .iter()
        .map(|&i| class.iter().map(|&j| chain[i][j]).collect())
        .collect();
    let pi = if k <= 64 { solve_stationary(&sub)? } else { power_stationary(&sub) };
    let mut out = vec![0.0; m];
    for (slot, &i) in class.iter().enumerate() {
        out[i] = pi[slot];
    }
    Ok(out)
}

/// The states of the single closed communicating class, if there is exactly
/// one.
fn unique_recurrent_class(chain: &[Vec<f64>]) -> Result<Vec<usize>> {
    let m = chain.len();
    let reach_from = |s: usize| -> Vec<bool> {
        let mut seen = vec![false; m];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..m {
                if chain[u][v] > 0.0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    };
    let reach: Vec<Vec<bool>> = (0..m).map(reach_from).collect();
    // a state is recurrent iff everything it reaches reaches it back
    let mut recurrent = vec![false; m];
    for i in 0..m {
        recurrent[i] = (0..m).all(|j| !reach[i][j] || reach[j][i]);
    }
    let seeds: Vec<usize> = (0..m).filter(|&i| recurrent[i]).collect();
    let Some(&first) = seeds.first() else {
        return Err(Error::ReducibleChain);
    };
    if seeds.iter().any(|&i| !reach[first][i] || !reach[i][first]) {
        return Err(Error::ReducibleChain);
    }
    Ok(seeds)
}

/// Gaussian elimination for p P = p, Σ p = 1 on an irreducible chain.
fn solve_stationary(p: &[Vec<f64>]) -> Result<Vec<f64>> {
    let m = p.len();
    // rows of (P^T - I), last row replaced by the normalization
    let mut a = vec![vec![0.0f64; m + 1]; m];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = p[j][i] - if i == j { 1.0 } else { 0.0 };
        }
    }
    for j in 0..m {
        a[m - 1][j] = 1.0;
    }
    a[m - 1][m] = 1.0;
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-14 {
            return Err(Error::ReducibleChain);
        }
        a.swap(col, pivot);
        for row in 0..m {
            if row != col {
                let f = a[row][col] / a[col][col];
                for k in col..=m {
                    a[row][k] -= f * a[col][k];
                }
            }
        }
    }
    Ok((0..m).map(|i| (a[i][m] / a[i][i]).max(0.0)).collect())
}

fn power_stationary(p: &[Vec<f64>]) -> Vec<f64> {
    let m = p.len();
    let mut pi = vec![1.0 / m as f64; m];
    for _ in 0..100_000 {
        // average with the identity so periodic chains converge
        let mut next = vec![0.0; m];
        for i in 0..m {
            next[i] += 0.5 * pi[i];
            for j in 0..m {
                next[j] += 0.5 * pi[i] * p[i][j];
            }
        }
        let diff: f64 = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum();
        pi = next;
        if diff < 1e-15 {
            break;
        }
    }
    pi
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const LN2: f64 = std::f64::consts::LN_2;

    fn full2_1step(p00: f64, p11: f64) -> MarkovMeasure {
        let x = Sft::named("full2").unwrap();
        MarkovMeasure::build_rstep(
            &x,
            1,
            &[("0".into(), '0', p00), ("1".into(), '1', p11)],
        )
        .unwrap()
    }

    #[test]
    fn golden_stationary_vector() {
        let m = MarkovMeasure::golden_mean_1step(0.618).unwrap();
        assert_abs_diff_eq!(m.stationary()[0], 1.0 / (2.0 - 0.618), epsilon = 1e-12);
        assert_abs_diff_eq!(m.stationary()[1], (1.0 - 0.618) / (2.0 - 0.618), epsilon = 1e-12);
        assert!(m.stationarity_residual() <= 1e-10);
    }

    #[test]
    fn boundary_parameters() {
        let m = MarkovMeasure::golden_mean_1step(1.0).unwrap();
        assert_eq!(m.stationary(), &[1.0, 0.0]);
        assert_abs_diff_eq!(m.entropy_rate(), 0.0, epsilon = 1e-12);

        let m = MarkovMeasure::golden_mean_1step(0.0).unwrap();
        assert_abs_diff_eq!(m.stationary()[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(m.entropy_rate(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_rates() {
        let m = MarkovMeasure::golden_mean_1step(0.618).unwrap();
        assert!((m.entropy_rate() - 0.481).abs() < 1e-3);
        let m = full2_1step(0.5, 0.5);
        assert!((m.entropy_rate() - LN2).abs() < 1e-12);
    }

    #[test]
    fn conditional_entropy_lags() {
        let m = MarkovMeasure::golden_mean_1step(0.618).unwrap();
        // for a 1-step chain the lag-1 value is the entropy rate
        assert_abs_diff_eq!(
            m.conditional_entropy_at_lag(1).unwrap(),
            m.entropy_rate(),
            epsilon = 1e-12
        );
        // mixing: converges to the marginal entropy
        let pi = m.symbol_marginal();
        let h_pi: f64 = pi.iter().map(|&p| -p * p.ln()).sum();
        let h60 = m.conditional_entropy_at_lag(60).unwrap();
        assert!((h60 - h_pi).abs() < 1e-9);

        let iid = full2_1step(0.5, 0.5);
        for lag in [1, 3, 10] {
            assert_abs_diff_eq!(
                iid.conditional_entropy_at_lag(lag).unwrap(),
                LN2,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn lag_entropy_bounded_and_nonnegative() {
        let m = MarkovMeasure::golden_mean_1step(0.37).unwrap();
        let pi = m.symbol_marginal();
        let h_pi: f64 = pi.iter().map(|&p| -p * p.ln()).sum();
        for lag in 1..=30 {
            let h = m.conditional_entropy_at_lag(lag).unwrap();
            assert!(h >= 0.0 && h <= h_pi + 1e-12, "lag={lag}");
        }
    }

    #[test]
    fn golden_table_rows() {
        for (p00, h, asc, int) in [
            (0.618, 0.481, 0.266, 0.051),
            (0.533, 0.471, 0.271, 0.071),
            (0.216, 0.292, 0.208, 0.124),
        ] {
            let m = MarkovMeasure::golden_mean_1step(p00).unwrap();
            assert!((m.entropy_rate() - h).abs() < 2e-3, "h at {p00}");
            assert!((m.asc_mu(1e-12).unwrap().value - asc).abs() < 2e-3, "asc at {p00}");
            assert!((m.int_mu().unwrap() - int).abs() < 2e-3, "int at {p00}");
        }
    }

    #[test]
    fn full_shift_table_rows() {
        for (p00, p11, h, asc, int) in [
            (0.5, 0.5, 0.693, 0.347, 0.0),
            (0.216, 0.0, 0.292, 0.208, 0.124),
            (0.0, 0.216, 0.292, 0.208, 0.124),
            (0.905, 0.905, 0.315, 0.209, 0.104),
        ] {
            let m = full2_1step(p00, p11);
            assert!((m.entropy_rate() - h).abs() < 2e-3, "h at ({p00},{p11})");
            assert!(
                (m.asc_mu(1e-12).unwrap().value - asc).abs() < 2e-3,
                "asc at ({p00},{p11})"
            );
            assert!((m.int_mu().unwrap() - int).abs() < 2e-3, "int at ({p00},{p11})");
        }
    }

    #[test]
    fn two_step_golden_rows() {
        let x = Sft::named("golden").unwrap();
        for (p000, p100, h, asc, int) in [
            (0.618, 0.618, 0.481, 0.266, 0.051),
            (0.483, 0.569, 0.466, 0.272, 0.078),
        ] {
            let m = MarkovMeasure::build_rstep(
                &x,
                2,
                &[("00".into(), '0', p000), ("10".into(), '0', p100)],
            )
            .unwrap();
            assert!((m.entropy_rate() - h).abs() < 2e-3, "h at ({p000},{p100})");
            assert!(
                (m.asc_mu(1e-12).unwrap().value - asc).abs() < 2e-3,
                "asc at ({p000},{p100})"
            );
            assert!((m.int_mu().unwrap() - int).abs() < 2e-3, "int at ({p000},{p100})");
        }
    }

    /// The boundary chain with no 000 block: the entropy rate has the closed
    /// form H_b(p100) / (2 + p100), and the asc/int identity holds exactly.
    #[test]
    fn two_step_boundary_chain() {
        let x = Sft::named("golden").unwrap();
        let p100 = 0.275f64;
        let m = MarkovMeasure::build_rstep(
            &x,
            2,
            &[("00".into(), '0', 0.0), ("10".into(), '0', p100)],
        )
        .unwrap();
        let hb = -p100 * p100.ln() - (1.0 - p100) * (1.0 - p100).ln();
        assert_abs_diff_eq!(m.entropy_rate(), hb / (2.0 + p100), epsilon = 1e-12);
        let asc = m.asc_mu(1e-12).unwrap().value;
        assert_abs_diff_eq!(m.int_mu().unwrap(), 2.0 * asc - m.entropy_rate(), epsilon = 1e-9);
        // series truncation error vs. the finite-n oracle stays small
        let brute = m.brute_asc_mu(12, &CoefficientSystem::Uniform).unwrap();
        assert!((brute - asc).abs() < 0.01);
    }

    #[test]
    fn collapse_to_lower_order() {
        let x = Sft::named("golden").unwrap();
        for p in [0.3, 0.618, 0.9] {
            let one = MarkovMeasure::golden_mean_1step(p).unwrap();
            let two = MarkovMeasure::build_rstep(
                &x,
                2,
                &[("00".into(), '0', p), ("10".into(), '0', p)],
            )
            .unwrap();
            assert_abs_diff_eq!(one.entropy_rate(), two.entropy_rate(), epsilon = 1e-9);
            assert_abs_diff_eq!(
                one.asc_mu(1e-12).unwrap().value,
                two.asc_mu(1e-12).unwrap().value,
                epsilon = 1e-9
            );
            assert_abs_diff_eq!(one.int_mu().unwrap(), two.int_mu().unwrap(), epsilon = 1e-9);
        }
    }

    #[test]
    fn brute_force_known_values() {
        let iid = full2_1step(0.5, 0.5);
        for n in [1usize, 3, 7] {
            let v = iid.brute_asc_mu(n, &CoefficientSystem::Uniform).unwrap();
            assert_abs_diff_eq!(v, LN2 / 2.0, epsilon = 1e-12);
        }
        // n = 1: subsets are {} and {0}, so the value is H(p)/2
        let m = MarkovMeasure::golden_mean_1step(0.618).unwrap();
        let pi = m.symbol_marginal();
        let h1: f64 = pi.iter().map(|&p| -p * p.ln()).sum();
        assert_abs_diff_eq!(
            m.brute_asc_mu(1, &CoefficientSystem::Uniform).unwrap(),
            h1 / 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn brute_force_approaches_series() {
        let m = MarkovMeasure::golden_mean_1step(0.618).unwrap();
        let series = m.asc_mu(1e-12).unwrap().value;
        let mut prev = f64::INFINITY;
        for n in [4usize, 8, 12, 14] {
            let v = m.brute_asc_mu(n, &CoefficientSystem::Uniform).unwrap();
            let gap = (v - series).abs();
            assert!(gap <= prev + 1e-9, "gap not shrinking at n={n}");
            prev = gap;
        }
        assert!(prev <= 0.02);
    }

    #[test]
    fn forbidden_transition_rejected() {
        let x = Sft::named("golden").unwrap();
        assert!(MarkovMeasure::build_rstep(&x, 1, &[("1".into(), '1', 0.4)]).is_err());
    }

    #[test]
    fn bad_probability_rejected() {
        assert!(matches!(
            MarkovMeasure::golden_mean_1step(1.5),
            Err(Error::BadProbability { .. })
        ));
    }
}
