//! Shifts of finite type: languages and block counts, coordinate-set pattern
//! counts N(S), topological entropy, and de Bruijn graphs.
//!
//! An [`Sft`] is always held in memory-1 form: a 0/1 adjacency matrix over a
//! working alphabet. Building from forbidden words recodes to blocks when
//! needed; `labels` remembers what each working symbol spells in the
//! original alphabet, and block enumeration/counting reports blocks of the
//! original language.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, FactorSet, Word};

/// Enumeration budget for the brute-force pattern-count path, in word
/// extensions.
const ENUMERATION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct Sft {
    /// Working (possibly recoded) alphabet labels, one per matrix row.
    alphabet: Alphabet,
    matrix: Vec<Vec<u8>>,
    /// Original alphabet of the language.
    original_alphabet: Alphabet,
    /// What each working symbol spells in the original alphabet.
    labels: Vec<Vec<u8>>,
    /// Length of each label (m-1 for forbidden words of max length m).
    window: usize,
}

/// JSON form: either an explicit matrix or a forbidden-word list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SftSpec {
    pub alphabet: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<Vec<String>>,
}

impl Sft {
    /// Memory-1 SFT straight from a 0/1 adjacency matrix.
    pub fn from_matrix(alphabet: Alphabet, matrix: Vec<Vec<u8>>) -> Result<Self> {
        let r = alphabet.size();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidArgument(format!("matrix must be {r}x{r}")));
        }
        if matrix.iter().flatten().any(|&x| x > 1) {
            return Err(Error::InvalidArgument("adjacency entries must be 0 or 1".into()));
        }
        let labels = (0..r as u8).map(|i| vec![i]).collect();
        let sft = Sft {
            original_alphabet: alphabet.clone(),
            alphabet,
            matrix,
            labels,
            window: 1,
        };
        sft.trimmed()
    }

    /// SFT with the given finite set of forbidden words, recoded to a
    /// memory-1 presentation on (m-1)-blocks where m is the longest
    /// forbidden word.
    pub fn from_forbidden_words(alphabet: Alphabet, forbidden: &[Word]) -> Result<Self> {
        if forbidden.iter().any(|w| w.is_empty()) {
            return Err(Error::InvalidArgument("forbidden words must be nonempty".into()));
        }
        let m = forbidden.iter().map(|w| w.len()).max().unwrap_or(2).max(2);
        let bad: Vec<&[u8]> = forbidden.iter().map(|w| w.data()).collect();
        let contains_bad =
            |w: &[u8]| bad.iter().any(|b| w.windows(b.len()).any(|win| win == *b));

        // vertices: clean (m-1)-blocks over the original alphabet
        let r = alphabet.size();
        let mut labels: Vec<Vec<u8>> = Vec::new();
        let mut stack: Vec<Vec<u8>> = (0..r as u8).map(|i| vec![i]).collect();
        stack.reverse();
        while let Some(w) = stack.pop() {
            if contains_bad(&w) {
                continue;
            }
            if w.len() == m - 1 {
                labels.push(w);
            } else {
                for s in (0..r as u8).rev() {
                    let mut next = w.clone();
                    next.push(s);
                    stack.push(next);
                }
            }
        }
        if labels.is_empty() {
            return Err(Error::EmptySubshift);
        }
        let k = labels.len();
        let mut matrix = vec![vec![0u8; k]; k];
        for (i, b) in labels.iter().enumerate() {
            for (j, c) in labels.iter().enumerate() {
                if m == 2 || b[1..] == c[..m - 2] {
                    let mut merged = b.clone();
                    merged.push(*c.last().unwrap());
                    if !contains_bad(&merged) {
                        matrix[i][j] = 1;
                    }
                }
            }
        }
        let working = if m == 2 {
            alphabet.clone()
        } else {
            // recoded symbols keep no printable identity; number them
            Alphabet::new((0..k).map(|i| {
                char::from_u32(('A' as u32) + i as u32).unwrap_or('?')
            }))?
        };
        let sft = Sft {
            alphabet: working,
            matrix,
            original_alphabet: alphabet,
            labels,
            window: m - 1,
        };
        sft.trimmed()
    }

    /// The named built-in fixtures.
    pub fn named(name: &str) -> Result<Self> {
        let b = Alphabet::binary();
        match name {
            "golden" => Sft::from_matrix(b, vec![vec![1, 1], vec![1, 0]]),
            "full2" => Sft::from_matrix(b, vec![vec![1, 1], vec![1, 1]]),
            "full3" => Sft::from_matrix(
                Alphabet::digits(3)?,
                vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]],
            ),
            "period2" => Sft::from_matrix(b, vec![vec![0, 1], vec![1, 0]]),
            "figI" => Sft::from_matrix(
                Alphabet::digits(3)?,
                vec![vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 0]],
            ),
            "figII" => Sft::from_matrix(
                Alphabet::digits(3)?,
                vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 0, 0]],
            ),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    /// Full shift on `r` symbols.
    pub fn full_shift(r: usize) -> Result<Self> {
        Sft::from_matrix(Alphabet::digits(r)?, vec![vec![1; r]; r])
    }

    pub fn from_spec(spec: &SftSpec) -> Result<Self> {
        let alphabet = Alphabet::new(spec.alphabet.iter().filter_map(|s| s.chars().next()))?;
        if alphabet.size() != spec.alphabet.len() {
            return Err(Error::InvalidArgument("alphabet labels must be single characters".into()));
        }
        match (&spec.matrix, &spec.forbidden) {
            (Some(m), None) => Sft::from_matrix(alphabet, m.clone()),
            (None, Some(f)) => {
                let words = f
                    .iter()
                    .map(|t| Word::from_text(t, &alphabet))
                    .collect::<Result<Vec<_>>>()?;
                Sft::from_forbidden_words(alphabet, &words)
            }
            _ => Err(Error::InvalidArgument(
                "spec needs exactly one of `matrix` or `forbidden`".into(),
            )),
        }
    }

    /// Parse either a named fixture or an inline/loaded JSON spec.
    pub fn parse(text: &str) -> Result<Self> {
        if let Ok(sft) = Sft::named(text) {
            return Ok(sft);
        }
        if text.trim_start().starts_with('{') {
            let spec: SftSpec = serde_json::from_str(text)?;
            return Sft::from_spec(&spec);
        }
        Err(Error::UnknownName(text.to_string()))
    }

    /// Delete symbols with zero in- or out-degree until none remain.
    fn trimmed(mut self) -> Result<Self> {
        loop {
            let k = self.matrix.len();
            let keep: Vec<usize> = (0..k)
                .filter(|&i| {
                    self.matrix[i].iter().any(|&x| x == 1)
                        && (0..k).any(|j| self.matrix[j][i] == 1)
                })
                .collect();
            if keep.is_empty() {
                return Err(Error::EmptySubshift);
            }
            if keep.len() == k {
                return Ok(self);
            }
            self.matrix = keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.matrix[i][j]).collect())
                .collect();
            self.labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
            self.alphabet = Alphabet::new(keep.iter().map(|&i| self.alphabet.symbols()[i]))?;
        }
    }

    /// Number of working symbols (matrix dimension).
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn original_alphabet(&self) -> &Alphabet {
        &self.original_alphabet
    }

    /// Length of the recoding window (1 when no recoding happened).
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn allows(&self, from: u8, to: u8) -> bool {
        self.matrix[from as usize][to as usize] == 1
    }

    /// Successors of a working symbol, ascending.
    pub fn successors(&self, from: u8) -> Vec<u8> {
        (0..self.size() as u8).filter(|&j| self.allows(from, j)).collect()
    }

    /// Number of allowed words with exactly `k` working symbols.
    pub fn path_count(&self, k: usize) -> BigUint {
        if k == 0 {
            return BigUint::one();
        }
        let mut v: Vec<BigUint> = vec![BigUint::one(); self.size()];
        for _ in 1..k {
            let mut next = vec![BigUint::zero(); self.size()];
            for i in 0..self.size() {
                for j in 0..self.size() {
                    if self.matrix[i][j] == 1 {
                        next[i] += &v[j];
                    }
                }
            }
            v = next;
        }
        v.into_iter().sum()
    }

    /// |L_n|: number of n-blocks of the original language.
    pub fn count_blocks(&self, n: usize) -> BigUint {
        if n == 0 {
            return BigUint::one();
        }
        if n >= self.window {
            self.path_count(n - self.window + 1)
        } else {
            // short blocks: distinct n-subwords of the vertex labels
            let mut set: HashSet<&[u8]> = HashSet::new();
            for label in &self.labels {
                for win in label.windows(n) {
                    set.insert(win);
                }
            }
            BigUint::from(set.len())
        }
    }

    /// The n-blocks of the original language, deterministically ordered by
    /// ascending start symbol and transitions.
    pub fn enumerate_blocks(&self, n: usize) -> FactorSet {
        let mut out: Vec<Box<[u8]>> = Vec::new();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        if n == 0 {
            return FactorSet::from_parts(self.original_alphabet.clone(), 0, vec![Box::from([])]);
        }
        if n < self.window {
            for label in &self.labels {
                for win in label.windows(n) {
                    if seen.insert(win.to_vec()) {
                        out.push(win.into());
                    }
                }
            }
            return FactorSet::from_parts(self.original_alphabet.clone(), n, out);
        }
        let steps = n - self.window + 1;
        let mut path: Vec<u8> = Vec::with_capacity(steps);
        for start in 0..self.size() as u8 {
            path.push(start);
            self.enumerate_rec(steps, &mut path, &mut out, &mut seen);
            path.pop();
        }
        FactorSet::from_parts(self.original_alphabet.clone(), n, out)
    }

    fn enumerate_rec(
        &self,
        steps: usize,
        path: &mut Vec<u8>,
        out: &mut Vec<Box<[u8]>>,
        seen: &mut HashSet<Vec<u8>>,
    ) {
        if path.len() == steps {
            let word = self.spell(path);
            if seen.insert(word.clone()) {
                out.push(word.into());
            }
            return;
        }
        let last = *path.last().unwrap();
        for next in 0..self.size() as u8 {
            if self.allows(last, next) {
                path.push(next);
                self.enumerate_rec(steps, path, out, seen);
                path.pop();
            }
        }
    }

    /// Original-alphabet spelling of a working-symbol path.
    fn spell(&self, path: &[u8]) -> Vec<u8> {
        let mut word = self.labels[path[0] as usize].clone();
        for &v in &path[1..] {
            word.push(*self.labels[v as usize].last().unwrap());
        }
        word
    }

    /// Are all entries of M^k strictly positive?
    pub fn is_power_positive(&self, k: usize) -> bool {
        let r = self.size();
        let base: Vec<Vec<bool>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&x| x == 1).collect())
            .collect();
        let mut power = base.clone();
        for _ in 1..k {
            let mut next = vec![vec![false; r]; r];
            for i in 0..r {
                for m in 0..r {
                    if power[i][m] {
                        for j in 0..r {
                            next[i][j] |= base[m][j];
                        }
                    }
                }
            }
            power = next;
        }
        power.iter().all(|row| row.iter().all(|&x| x))
    }

    /// Topological entropy: natural log of the spectral radius of M.
    ///
    /// Power iteration runs on M + I so that periodic matrices converge too;
    /// the shift is subtracted at the end.
    pub fn entropy(&self) -> f64 {
        let r = self.size();
        let mut x = vec![1.0f64; r];
        let mut lambda = 0.0f64;
        for _ in 0..1_000_000 {
            let mut y = vec![0.0f64; r];
            for i in 0..r {
                y[i] = x[i];
                for j in 0..r {
                    if self.matrix[i][j] == 1 {
                        y[i] += x[j];
                    }
                }
            }
            let norm = y.iter().cloned().fold(0.0f64, f64::max);
            for v in &mut y {
                *v /= norm;
            }
            let prev = lambda;
            lambda = norm;
            x = y;
            if (lambda - prev).abs() <= 1e-13 * lambda {
                break;
            }
        }
        (lambda - 1.0).max(f64::MIN_POSITIVE).ln().max(0.0)
    }

    /// N(S): number of distinct restrictions to S of allowed words on
    /// {0..max(S)}. Uses the interval product when M^2 > 0, otherwise
    /// budgeted enumeration.
    pub fn pattern_count(&self, s: &CoordinateSet) -> Result<BigUint> {
        if s.members().is_empty() {
            return Ok(BigUint::one());
        }
        if self.is_power_positive(2) {
            self.pattern_count_via_intervals(s)
        } else {
            self.pattern_count_enumerated(s)
        }
    }

    /// N(S) as the product of N(I) over the maximal consecutive intervals I
    /// of S. Valid when M^2 > 0 (each gap can be bridged freely).
    pub fn pattern_count_via_intervals(&self, s: &CoordinateSet) -> Result<BigUint> {
        if !self.is_power_positive(2) {
            return Err(Error::Precondition(
                "interval product for N(S) needs M^2 > 0; use the enumeration fallback".into(),
            ));
        }
        let mut result = BigUint::one();
        for run in s.runs() {
            result *= self.path_count(run);
        }
        Ok(result)
    }

    /// N(S) by enumerating allowed words on {0..max(S)}, projecting to S and
    /// deduplicating. Aborts when the estimated enumeration exceeds the
    /// budget.
    pub fn pattern_count_enumerated(&self, s: &CoordinateSet) -> Result<BigUint> {
        let members = s.members();
        if members.is_empty() {
            return Ok(BigUint::one());
        }
        let horizon = members.last().unwrap() + 1;
        // estimated explored nodes: sum of path counts up to the horizon
        let mut estimate = BigUint::zero();
        for k in 1..=horizon {
            estimate += self.path_count(k);
            if estimate.to_u64().map_or(true, |e| e > ENUMERATION_BUDGET) {
                return Err(Error::ResourceBudget(format!(
                    "pattern-count enumeration over horizon {horizon} exceeds {ENUMERATION_BUDGET} extensions"
                )));
            }
        }
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut word: Vec<u8> = Vec::with_capacity(horizon);
        for start in 0..self.size() as u8 {
            word.push(start);
            self.project_rec(horizon, members, &mut word, &mut seen);
            word.pop();
        }
        Ok(BigUint::from(seen.len()))
    }

    fn project_rec(
        &self,
        horizon: usize,
        members: &[usize],
        word: &mut Vec<u8>,
        seen: &mut HashSet<Vec<u8>>,
    ) {
        if word.len() == horizon {
            seen.insert(members.iter().map(|&i| word[i]).collect());
            return;
        }
        let last = *word.last().unwrap();
        for next in 0..self.size() as u8 {
            if self.allows(last, next) {
                word.push(next);
                self.project_rec(horizon, members, word, seen);
                word.pop();
            }
        }
    }

    /// De Bruijn graph of order n: vertices are allowed (n-1)-blocks, with an
    /// edge B -> C whenever some allowed n-block has prefix B and suffix C.
    pub fn de_bruijn_graph(&self, n: usize) -> Result<DeBruijnGraph> {
        if n < 2 {
            return Err(Error::InvalidArgument("de Bruijn graph needs n >= 2".into()));
        }
        let vertices = self.enumerate_blocks(n - 1);
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        for (i, v) in vertices.raw().iter().enumerate() {
            index.insert(v.to_vec(), i);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices.count()];
        for w in self.enumerate_blocks(n).raw() {
            let b = index[&w[..n - 1].to_vec()];
            let c = index[&w[1..].to_vec()];
            if !adj[b].contains(&c) {
                adj[b].push(c);
            }
        }
        let verts = vertices.iter().collect();
        Ok(DeBruijnGraph { vertices: verts, adj })
    }
}

/// A subset S of the coordinate window {0, ..., n-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateSet {
    horizon: usize,
    members: Vec<usize>,
}

impl CoordinateSet {
    pub fn new(horizon: usize, members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|ab| ab[0] >= ab[1]) {
            return Err(Error::InvalidArgument(
                "coordinate-set members must be strictly increasing".into(),
            ));
        }
        if members.last().is_some_and(|&m| m >= horizon) {
            return Err(Error::InvalidArgument(format!(
                "coordinate {} outside horizon {}",
                members.last().unwrap(),
                horizon
            )));
        }
        Ok(CoordinateSet { horizon, members })
    }

    /// S from a bitmask over the horizon; bit i set means i in S.
    pub fn from_bits(horizon: usize, bits: u64) -> Self {
        let members = (0..horizon).filter(|&i| bits >> i & 1 == 1).collect();
        CoordinateSet { horizon, members }
    }

    pub fn full(horizon: usize) -> Self {
        CoordinateSet { horizon, members: (0..horizon).collect() }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self) -> CoordinateSet {
        let mut members = Vec::with_capacity(self.horizon - self.members.len());
        let mut it = self.members.iter().peekable();
        for i in 0..self.horizon {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                members.push(i);
            }
        }
        CoordinateSet { horizon: self.horizon, members }
    }

    /// Lengths of the maximal runs of consecutive members.
    pub fn runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut i = 0;
        while i < self.members.len() {
            let mut j = i;
            while j + 1 < self.members.len() && self.members[j + 1] == self.members[j] + 1 {
                j += 1;
            }
            runs.push(j - i + 1);
            i = j + 1;
        }
        runs
    }
}

/// De Bruijn graph with blocks as vertices.
#[derive(Debug, Clone)]
pub struct DeBruijnGraph {
    pub vertices: Vec<Word>,
    pub adj: Vec<Vec<usize>>,
}

impl DeBruijnGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum()
    }
}

/// Strong connectivity by forward and backward reachability from vertex 0.
pub fn is_irreducible(g: &DeBruijnGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, outs) in g.adj.iter().enumerate() {
        for &v in outs {
            radj[v].push(u);
        }
    }
    let reach = |adj: &[Vec<usize>]| -> usize {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count
    };
    reach(&g.adj) == n && reach(&radj) == n
}
