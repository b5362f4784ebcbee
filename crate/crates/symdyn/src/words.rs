//! Alphabets, finite words, factor extraction, palindrome primitives and
//! empirical block frequencies. Everything downstream (complexity measures,
//! subshift languages, Markov cylinders) is built on these types.
//!
//! Values are immutable after construction and all operations are pure.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// An ordered alphabet of distinct single-character labels.
///
/// Internally every word stores symbol *indices*; the alphabet is the
/// index <-> label bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        let mut seen = HashSet::new();
        if symbols.is_empty() || !symbols.iter().all(|c| seen.insert(*c)) {
            return Err(Error::BadAlphabet(symbols));
        }
        Ok(Alphabet { symbols })
    }

    /// The binary alphabet `{'0','1'}`.
    pub fn binary() -> Self {
        Alphabet { symbols: vec!['0', '1'] }
    }

    /// Alphabet `{'0',...}` with `r` digit labels (r <= 10).
    pub fn digits(r: usize) -> Result<Self> {
        if r == 0 || r > 10 {
            return Err(Error::InvalidArgument(format!(
                "digit alphabet supports 1..=10 symbols, got {r}"
            )));
        }
        Alphabet::new((0..r).map(|i| char::from_digit(i as u32, 10).unwrap()))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn label(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    pub fn index_of(&self, label: char) -> Result<u8> {
        self.symbols
            .iter()
            .position(|&c| c == label)
            .map(|i| i as u8)
            .ok_or(Error::UnknownSymbol(label))
    }
}

/// A finite word: a sequence of symbol indices over an [`Alphabet`].
/// The empty word is permitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    data: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, data: Vec<u8>) -> Result<Self> {
        let size = alphabet.size();
        if let Some(&bad) = data.iter().find(|&&i| (i as usize) >= size) {
            return Err(Error::IndexOutOfRange { index: bad as usize, size });
        }
        Ok(Word { alphabet, data })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, data: Vec::new() }
    }

    /// Parse a word from its text form, one character per symbol.
    pub fn from_text(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let data = text
            .chars()
            .map(|c| alphabet.index_of(c))
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { alphabet: alphabet.clone(), data })
    }

    /// Parse a binary word from a string of `0`/`1`.
    pub fn binary(text: &str) -> Result<Self> {
        Word::from_text(text, &Alphabet::binary())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.data.iter().map(|&i| self.alphabet.label(i)).collect()
    }

    /// The word with a contiguous range of this word's symbols.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { alphabet: self.alphabet.clone(), data: self.data[start..end].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    /// The reversal B' of this word.
    pub fn reversal(&self) -> Word {
        let mut data = self.data.clone();
        data.reverse();
        Word { alphabet: self.alphabet.clone(), data }
    }

    /// Does the word read the same forwards as backwards? The empty word
    /// counts as a palindrome.
    pub fn is_palindrome(&self) -> bool {
        let n = self.data.len();
        (0..n / 2).all(|i| self.data[i] == self.data[n - 1 - i])
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::InvalidArgument("alphabet mismatch in concat".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Word { alphabet: self.alphabet.clone(), data })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The deduplicated n-factors of a word, in first-occurrence order.
#[derive(Debug, Clone)]
pub struct FactorSet {
    alphabet: Alphabet,
    n: usize,
    factors: Vec<Box<[u8]>>,
    /// Set when the requested window exceeded the word length, which forces
    /// an empty set.
    pub window_exceeds_word: bool,
}

impl FactorSet {
    pub(crate) fn from_parts(alphabet: Alphabet, n: usize, factors: Vec<Box<[u8]>>) -> Self {
        FactorSet { alphabet, n, factors, window_exceeds_word: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// p(n): the number of distinct factors.
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.factors
            .iter()
            .map(|f| Word { alphabet: self.alphabet.clone(), data: f.to_vec() })
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.iter().any(|f| f.as_ref() == w.data())
    }

    pub(crate) fn raw(&self) -> &[Box<[u8]>] {
        &self.factors
    }
}

/// All distinct length-`n` contiguous subwords of `w`, in first-occurrence
/// order. When `n > |w|` the set is empty and flagged.
pub fn factors(w: &Word, n: usize) -> FactorSet {
    if n > w.len() {
        let mut fs = FactorSet::from_parts(w.alphabet.clone(), n, Vec::new());
        fs.window_exceeds_word = true;
        return fs;
    }
    let mut seen: HashSet<&[u8]> = HashSet::new();
    let mut out: Vec<Box<[u8]>> = Vec::new();
    for i in 0..=w.len() - n {
        let win = &w.data[i..i + n];
        if seen.insert(win) {
            out.push(win.into());
        }
    }
    FactorSet::from_parts(w.alphabet.clone(), n, out)
}

/// The complexity profile p(1..=n_max) of `w`. p(0) = 1 is implied and not
/// reported.
pub fn complexity_profile(w: &Word, n_max: usize) -> Result<Vec<usize>> {
    if n_max > w.len() {
        return Err(Error::InvalidArgument(format!(
            "n_max {} exceeds word length {}",
            n_max,
            w.len()
        )));
    }
    Ok((1..=n_max).map(|n| factors(w, n).count()).collect())
}

/// All distinct palindromic factors of `w`, of every length, including the
/// empty word. Ordered by (length, first occurrence).
pub fn palindromic_factors(w: &Word) -> Vec<Word> {
    let tree = PalTree::build(w.data());
    let mut out = vec![Word::empty(w.alphabet.clone())];
    let mut spans: Vec<(usize, usize)> = tree.factor_spans();
    spans.sort_by_key(|&(start, end)| (end - start, start));
    out.extend(spans.into_iter().map(|(s, e)| w.slice(s, e)));
    out
}

/// Number of distinct palindromic factors including the empty word.
/// Always at most |w| + 1.
pub fn palindromic_factor_count(w: &Word) -> usize {
    PalTree::build(w.data()).distinct() + 1
}

/// A word is rich when it attains the maximum possible number |w|+1 of
/// distinct palindromic factors (empty word counted).
pub fn is_rich(w: &Word) -> bool {
    palindromic_factor_count(w) == w.len() + 1
}

/// Richness via the prefix test: every prefix must end in a palindromic
/// suffix that occurs exactly once in that prefix. Equivalent to [`is_rich`];
/// kept as a second route for cross-checking.
pub fn is_rich_prefix_test(w: &Word) -> bool {
    PalTree::build(w.data()).new_palindrome_flags().iter().all(|&f| f)
}

/// Length of the longest palindromic suffix of `w` (0 for the empty word).
pub fn longest_palindromic_suffix(w: &Word) -> usize {
    if w.is_empty() {
        0
    } else {
        PalTree::build(w.data()).last_suffix_len()
    }
}

/// Distinct palindromic factors per length 1..=n_max.
pub fn palindrome_counts(w: &Word, n_max: usize) -> Vec<usize> {
    PalTree::build(w.data()).counts_by_length(n_max)
}

/// Balance check for binary words: for every n <= n_max the number of `1`s
/// in length-n factors varies by at most 1.
pub fn is_balanced(w: &Word, n_max: usize) -> Result<bool> {
    if w.alphabet.size() != 2 {
        return Err(Error::UnsupportedAlphabet(w.alphabet.size()));
    }
    let limit = n_max.min(w.len());
    for n in 1..=limit {
        // Sliding count of ones over all n-windows.
        let mut ones: usize = w.data[..n].iter().filter(|&&b| b == 1).count();
        let mut min = ones;
        let mut max = ones;
        for i in n..w.len() {
            ones += (w.data[i] == 1) as usize;
            ones -= (w.data[i - n] == 1) as usize;
            min = min.min(ones);
            max = max.max(ones);
        }
        if max - min > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Empirical k-block frequencies over the |w|-k+1 windows of `w`,
/// in first-occurrence order. The frequencies sum to 1.
#[derive(Debug, Clone)]
pub struct BlockFrequencies {
    alphabet: Alphabet,
    k: usize,
    entries: Vec<(Box<[u8]>, f64)>,
}

impl BlockFrequencies {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn iter(&self) -> impl Iterator<Item = (Word, f64)> + '_ {
        self.entries.iter().map(|(b, f)| {
            (Word { alphabet: self.alphabet.clone(), data: b.to_vec() }, *f)
        })
    }

    /// Frequency of the block given by `text`, or 0 when absent.
    pub fn get(&self, text: &str) -> f64 {
        let Ok(w) = Word::from_text(text, &self.alphabet) else {
            return 0.0;
        };
        self.entries
            .iter()
            .find(|(b, _)| b.as_ref() == w.data())
            .map(|(_, f)| *f)
            .unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|(_, f)| f).sum()
    }
}

pub fn block_frequencies(w: &Word, k: usize) -> Result<BlockFrequencies> {
    if k == 0 || w.len() < k {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= |w|, got k={} |w|={}",
            k,
            w.len()
        )));
    }
    let windows = w.len() - k + 1;
    let mut index: HashMap<&[u8], usize> = HashMap::new();
    let mut entries: Vec<(Box<[u8]>, f64)> = Vec::new();
    for i in 0..windows {
        let win = &w.data[i..i + k];
        match index.get(win) {
            Some(&j) => entries[j].1 += 1.0,
            None => {
                index.insert(win, entries.len());
                entries.push((win.into(), 1.0));
            }
        }
    }
    for e in &mut entries {
        e.1 /= windows as f64;
    }
    Ok(BlockFrequencies { alphabet: w.alphabet.clone(), k, entries })
}

// ---------------------------------------------------------------------------
// Palindromic tree (eertree). One node per distinct palindromic factor, so
// richness, palindrome counts and longest palindromic suffixes come out in
// linear time.
// ---------------------------------------------------------------------------

pub(crate) struct PalTree {
    /// node fields: length, suffix link, end position of first occurrence
    len: Vec<isize>,
    link: Vec<usize>,
    first_end: Vec<usize>,
    next: Vec<HashMap<u8, usize>>,
    /// per input position: did adding this symbol create a new palindrome?
    new_flags: Vec<bool>,
    last: usize,
    data: Vec<u8>,
}

impl PalTree {
    pub(crate) fn build(data: &[u8]) -> Self {
        // node 0: imaginary root of length -1; node 1: empty-word root
        let mut t = PalTree {
            len: vec![-1, 0],
            link: vec![0, 0],
            first_end: vec![0, 0],
            next: vec![HashMap::new(), HashMap::new()],
            new_flags: Vec::with_capacity(data.len()),
            last: 1,
            data: Vec::with_capacity(data.len()),
        };
        for &c in data {
            t.push(c);
        }
        t
    }

    fn push(&mut self, c: u8) {
        self.data.push(c);
        let pos = self.data.len() - 1;
        let mut cur = self.last;
        // Walk suffix links until c extends a palindromic suffix.
        loop {
            let l = self.len[cur];
            let i = pos as isize - l - 1;
            if i >= 0 && self.data[i as usize] == c {
                break;
            }
            cur = self.link[cur];
        }
        if let Some(&existing) = self.next[cur].get(&c) {
            self.last = existing;
            self.new_flags.push(false);
            return;
        }
        // New palindrome: create the node and find its suffix link.
        let node = self.len.len();
        self.len.push(self.len[cur] + 2);
        self.first_end.push(pos + 1);
        self.next.push(HashMap::new());
        let link = if self.len[node] == 1 {
            1
        } else {
            let mut probe = self.link[cur];
            loop {
                let l = self.len[probe];
                let i = pos as isize - l - 1;
                if i >= 0 && self.data[i as usize] == c {
                    break;
                }
                probe = self.link[probe];
            }
            self.next[probe][&c]
        };
        self.link.push(link);
        self.next[cur].insert(c, node);
        self.last = node;
        self.new_flags.push(true);
    }

    /// Number of distinct nonempty palindromic factors.
    pub(crate) fn distinct(&self) -> usize {
        self.len.len() - 2
    }

    /// Count of distinct palindromic factors per length 1..=n_max.
    pub(crate) fn counts_by_length(&self, n_max: usize) -> Vec<usize> {
        let mut counts = vec![0usize; n_max + 1];
        for &l in self.len.iter().skip(2) {
            let l = l as usize;
            if l <= n_max {
                counts[l] += 1;
            }
        }
        counts.drain(..1);
        counts
    }

    /// (start, end) span of the first occurrence of each distinct palindrome.
    fn factor_spans(&self) -> Vec<(usize, usize)> {
        (2..self.len.len())
            .map(|v| {
                let end = self.first_end[v];
                (end - self.len[v] as usize, end)
            })
            .collect()
    }

    fn new_palindrome_flags(&self) -> &[bool] {
        &self.new_flags
    }

    fn last_suffix_len(&self) -> usize {
        self.len[self.last] as usize
    }
}

// ---------------------------------------------------------------------------
// Sequence file format: UTF-8 text, one sequence per line, symbols as single
// characters; optional first line `#alphabet:abc`.
// ---------------------------------------------------------------------------

/// Read sequences from text. Lines after an optional `#alphabet:` header are
/// parsed over the declared alphabet, otherwise over the sorted set of
/// characters seen in the file.
pub fn read_sequences(text: &str) -> Result<Vec<Word>> {
    let mut lines = text.lines().peekable();
    let alphabet = match lines.peek() {
        Some(l) if l.starts_with("#alphabet:") => {
            let spec = lines.next().unwrap().trim_start_matches("#alphabet:");
            Alphabet::new(spec.trim().chars())?
        }
        _ => {
            let mut chars: Vec<char> = text
                .lines()
                .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
                .flat_map(|l| l.trim().chars())
                .collect();
            chars.sort_unstable();
            chars.dedup();
            if chars.is_empty() {
                return Ok(Vec::new());
            }
            Alphabet::new(chars)?
        }
    };
    let mut out = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(Word::from_text(line, &alphabet)?);
    }
    Ok(out)
}

/// Write sequences in the same format, with an explicit alphabet header.
pub fn write_sequences(words: &[Word]) -> String {
    let mut s = String::new();
    if let Some(first) = words.first() {
        s.push_str("#alphabet:");
        s.extend(first.alphabet().symbols().iter());
        s.push('\n');
    }
    for w in words {
        s.push_str(&w.to_text());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    #[test]
    fn factors_of_binary_word() {
        let w = bw("0100101001001");
        let f1 = factors(&w, 1);
        assert_eq!(f1.count(), 2);
        let texts: Vec<String> = f1.iter().map(|w| w.to_text()).collect();
        assert_eq!(texts, vec!["0", "1"]); // first-occurrence order
    }

    #[test]
    fn factors_window_too_long() {
        let w = bw("01");
        let f = factors(&w, 5);
        assert_eq!(f.count(), 0);
        assert!(f.window_exceeds_word);
    }

    #[test]
    fn profile_of_periodic_word() {
        let w = bw(&"01".repeat(20));
        assert_eq!(complexity_profile(&w, 5).unwrap(), vec![2, 2, 2, 2, 2]);
    }

    #[test]
    fn profile_nondecreasing() {
        let w = bw("0110100110010110100101100110");
        let p = complexity_profile(&w, 8).unwrap();
        assert!(p.windows(2).all(|ab| ab[0] <= ab[1]));
    }

    #[test]
    fn reversal_and_palindromes() {
        assert!(bw("0110").is_palindrome());
        let w = bw("011");
        assert_eq!(w.reversal().to_text(), "110");
        assert!(!w.is_palindrome());
        assert!(Word::empty(Alphabet::binary()).is_palindrome());
        assert_eq!(w.reversal().reversal(), w);
    }

    #[test]
    fn palindromic_factors_by_hand() {
        let a = Alphabet::new("ab".chars()).unwrap();
        let w = Word::from_text("aba", &a).unwrap();
        let pals: Vec<String> = palindromic_factors(&w).iter().map(|p| p.to_text()).collect();
        assert_eq!(pals, vec!["", "a", "b", "aba"]);
        assert_eq!(palindromic_factor_count(&w), 4);

        let w = bw("0011");
        let pals: Vec<String> = palindromic_factors(&w).iter().map(|p| p.to_text()).collect();
        assert_eq!(pals, vec!["", "0", "1", "00", "11"]);
    }

    #[test]
    fn richness_small_cases() {
        assert!(is_rich(&bw("0110")));
        assert_eq!(palindromic_factor_count(&bw("0110")), 5);
        assert!(is_rich(&Word::empty(Alphabet::binary())));
    }

    /// Definitional richness, prefix-test richness and the naive oracle agree
    /// on all binary words up to length 12, and the palindrome count never
    /// exceeds |w|+1.
    #[test]
    fn richness_routes_agree_exhaustively() {
        for len in 0..=12usize {
            for bits in 0u32..1 << len {
                let data: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                let w = Word::new(Alphabet::binary(), data).unwrap();
                let count = naive_palindrome_count(&w);
                assert!(count <= w.len() + 1);
                assert_eq!(palindromic_factor_count(&w), count, "word {}", w);
                let rich = count == w.len() + 1;
                assert_eq!(is_rich(&w), rich, "word {}", w);
                assert_eq!(is_rich_prefix_test(&w), rich, "word {}", w);
                assert_eq!(naive_prefix_test(&w), rich, "word {}", w);
            }
        }
    }

    /// Oracle: collect palindromic substrings into a set, the long way.
    fn naive_palindrome_count(w: &Word) -> usize {
        let mut set: HashSet<&[u8]> = HashSet::new();
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                let sub = &w.data()[i..j];
                if sub.iter().eq(sub.iter().rev()) {
                    set.insert(sub);
                }
            }
        }
        set.len() + 1
    }

    /// Oracle: every prefix has a palindromic suffix occurring exactly once.
    fn naive_prefix_test(w: &Word) -> bool {
        'prefix: for end in 1..=w.len() {
            let p = &w.data()[..end];
            for len in 1..=end {
                let suf = &p[end - len..];
                if suf.iter().eq(suf.iter().rev()) {
                    let occurrences = (0..=end - len).filter(|&i| &p[i..i + len] == suf).count();
                    if occurrences == 1 {
                        continue 'prefix;
                    }
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn balance() {
        assert!(!is_balanced(&bw("0011"), 2).unwrap());
        assert!(is_balanced(&bw(&"01".repeat(9)), 10).unwrap());
        let ternary = Word::from_text("012", &Alphabet::digits(3).unwrap()).unwrap();
        assert!(matches!(is_balanced(&ternary, 2), Err(Error::UnsupportedAlphabet(3))));
    }

    #[test]
    fn frequencies_sum_to_one() {
        let w = bw(&"001".repeat(50));
        let f = block_frequencies(&w, 2).unwrap();
        assert!((f.total() - 1.0).abs() < 1e-12);
        assert!((f.get("00") - 1.0 / 3.0).abs() < 0.01);
        assert!((f.get("01") - 1.0 / 3.0).abs() < 0.01);
        assert!((f.get("10") - 1.0 / 3.0).abs() < 0.01);
        assert_eq!(f.get("11"), 0.0);

        let w = bw(&"0".repeat(40));
        let f = block_frequencies(&w, 1).unwrap();
        assert_eq!(f.get("0"), 1.0);
    }

    #[test]
    fn longest_pal_suffix() {
        assert_eq!(longest_palindromic_suffix(&bw("01")), 1);
        assert_eq!(longest_palindromic_suffix(&bw("01001")), 4); // 1001
        assert_eq!(longest_palindromic_suffix(&bw("0110")), 4);
    }

    #[test]
    fn sequence_file_roundtrip() {
        let text = "#alphabet:012\n0120\n22\n";
        let words = read_sequences(text).unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].to_text(), "0120");
        assert_eq!(write_sequences(&words), text);
        // headerless: alphabet inferred from content
        let words = read_sequences("0101\n11\n").unwrap();
        assert_eq!(words[0].alphabet().size(), 2);
    }
}
