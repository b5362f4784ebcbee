//! Construction of the classical low-complexity sequences: substitution
//! fixed points, mechanical (Sturmian) words, standard sequences from
//! continued fractions, and a small corpus of named sequences.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// A substitution theta: symbol -> nonempty word, extended to words by
/// concatenation theta(b1 b2 ...) = theta(b1) theta(b2) ...
#[derive(Debug, Clone)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Vec<u8>>,
}

impl Substitution {
    /// Build from (symbol, image-text) pairs covering the whole alphabet.
    pub fn new(alphabet: Alphabet, images: &[(char, &str)]) -> Result<Self> {
        let mut table: Vec<Option<Vec<u8>>> = vec![None; alphabet.size()];
        for (sym, img) in images {
            let idx = alphabet.index_of(*sym)? as usize;
            let w = Word::from_text(img, &alphabet)?;
            if w.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "image of {sym:?} must be nonempty"
                )));
            }
            table[idx] = Some(w.data().to_vec());
        }
        let images = table
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "no image for symbol {:?}",
                        alphabet.label(i as u8)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Substitution { alphabet, images })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, symbol: u8) -> &[u8] {
        &self.images[symbol as usize]
    }

    /// Apply the substitution once to a word.
    pub fn apply(&self, w: &Word) -> Word {
        let mut data = Vec::with_capacity(w.len() * 2);
        for &s in w.data() {
            data.extend_from_slice(&self.images[s as usize]);
        }
        Word::new(self.alphabet.clone(), data).expect("images are alphabet-valid")
    }

    /// Prefix of length `target` of the fixed point lim theta^k(seed).
    ///
    /// Requires the seed to be prolongable: theta(seed) starts with seed and
    /// has length >= 2, so each iteration extends the previous one.
    pub fn fixed_point(&self, seed: char, target: usize) -> Result<Word> {
        if target == 0 {
            return Err(Error::InvalidArgument("target length must be >= 1".into()));
        }
        let s = self.alphabet.index_of(seed)?;
        let img = &self.images[s as usize];
        if img[0] != s {
            return Err(Error::NotProlongable {
                seed,
                reason: "image does not begin with the seed symbol".into(),
            });
        }
        if img.len() < 2 {
            return Err(Error::NotProlongable {
                seed,
                reason: "image has length < 2, iteration cannot grow".into(),
            });
        }
        let mut cur = Word::new(self.alphabet.clone(), vec![s]).unwrap();
        while cur.len() < target {
            cur = self.apply(&cur);
        }
        Ok(cur.prefix(target))
    }

    /// Primitivity: some power m <= m_max has theta^m(a) containing every
    /// symbol, for every a. Checked on the incidence matrix.
    pub fn is_primitive(&self, m_max: usize) -> bool {
        let r = self.alphabet.size();
        // incidence[a][b]: does theta(a) contain b?
        let mut reach: Vec<Vec<bool>> = vec![vec![false; r]; r];
        for (a, img) in self.images.iter().enumerate() {
            for &b in img {
                reach[a][b as usize] = true;
            }
        }
        let mut power = reach.clone();
        for _ in 1..=m_max {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return true;
            }
            // boolean matrix product power * reach
            let mut next = vec![vec![false; r]; r];
            for a in 0..r {
                for m in 0..r {
                    if power[a][m] {
                        for b in 0..r {
                            next[a][b] |= reach[m][b];
                        }
                    }
                }
            }
            if next == power {
                break; // reached the transitive closure fixpoint
            }
            power = next;
        }
        power.iter().all(|row| row.iter().all(|&x| x))
    }

    /// Primitivity checked directly on iterated images, for cross-checking
    /// against the matrix route.
    pub fn is_primitive_by_iteration(&self, m_max: usize) -> bool {
        let r = self.alphabet.size();
        'power: for m in 1..=m_max {
            for a in 0..r as u8 {
                let mut w = Word::new(self.alphabet.clone(), vec![a]).unwrap();
                for _ in 0..m {
                    w = self.apply(&w);
                    // cap growth: only symbol presence matters
                    if w.len() > 1 << 16 {
                        w = w.prefix(1 << 16);
                    }
                }
                let mut seen = vec![false; r];
                for &s in w.data() {
                    seen[s as usize] = true;
                }
                if !seen.iter().all(|&x| x) {
                    continue 'power;
                }
            }
            return true;
        }
        false
    }
}

/// Which of the two mechanical codings to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MechanicalVariant {
    /// floor(a(n+1)+b) - floor(an+b)
    Lower,
    /// ceil(a(n+1)+b) - ceil(an+b)
    Upper,
}

/// Mechanical sequence with slope `alpha` and intercept `beta`, computed in
/// f64. Reliable for moderate lengths; near-integer values of alpha*n+beta
/// are at the mercy of floating point, so exact fixtures should go through
/// [`mechanical_cf`].
pub fn mechanical(alpha: f64, beta: f64, len: usize, variant: MechanicalVariant) -> Result<Word> {
    if len == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    if !(0.0..=1.0).contains(&alpha) || !(0.0..=1.0).contains(&beta) {
        return Err(Error::InvalidArgument("alpha and beta must lie in [0,1]".into()));
    }
    let step = |n: f64| -> f64 {
        let v = alpha * n + beta;
        match variant {
            MechanicalVariant::Lower => v.floor(),
            MechanicalVariant::Upper => v.ceil(),
        }
    };
    let data: Vec<u8> = (0..len)
        .map(|n| (step((n + 1) as f64) - step(n as f64)) as u8)
        .collect();
    Word::new(Alphabet::binary(), data)
}

/// Mechanical sequence with slope given exactly by continued-fraction terms
/// `[a0; a1, a2, ...]` (a0 = 0 for slopes in [0,1)) and rational intercept
/// `beta = beta_num/beta_den`.
///
/// The slope is replaced by a convergent p/q; while n stays below q the
/// floors of n*alpha and n*p/q agree, so the terms must supply a convergent
/// with q > len + 1. Arithmetic is exact in i128.
pub fn mechanical_cf(
    cf: &[u64],
    beta_num: i64,
    beta_den: i64,
    len: usize,
    variant: MechanicalVariant,
) -> Result<Word> {
    if len == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    if beta_den <= 0 {
        return Err(Error::BadDirective("intercept denominator must be positive".into()));
    }
    let (p, q) = convergent_exceeding(cf, (len as u64) + 1)?;
    let floor_div = |a: i128, b: i128| -> i128 { a.div_euclid(b) };
    let val = |n: i128| -> i128 {
        // alpha*n + beta = (p*n*beta_den + beta_num*q) / (q*beta_den)
        let num = p as i128 * n * beta_den as i128 + beta_num as i128 * q as i128;
        let den = q as i128 * beta_den as i128;
        match variant {
            MechanicalVariant::Lower => floor_div(num, den),
            MechanicalVariant::Upper => -floor_div(-num, den),
        }
    };
    let data: Vec<u8> = (0..len as i128)
        .map(|n| (val(n + 1) - val(n)) as u8)
        .collect();
    Word::new(Alphabet::binary(), data)
}

/// Smallest continued-fraction convergent p/q of `[a0; a1, ...]` with
/// q > min_den, or the final convergent if the terms run out first (an
/// exactly rational slope).
fn convergent_exceeding(cf: &[u64], min_den: u64) -> Result<(u64, u64)> {
    if cf.is_empty() {
        return Err(Error::BadDirective("continued fraction needs at least one term".into()));
    }
    if cf[1..].iter().any(|&a| a == 0) {
        return Err(Error::BadDirective("continued-fraction tail terms must be positive".into()));
    }
    let (mut h0, mut k0) = (1u64, 0u64); // h_{-1}/k_{-1}
    let (mut h1, mut k1) = (cf[0], 1u64); // h_0/k_0
    for &a in &cf[1..] {
        let h2 = a
            .checked_mul(h1)
            .and_then(|x| x.checked_add(h0))
            .ok_or_else(|| Error::BadDirective("continued-fraction overflow".into()))?;
        let k2 = a
            .checked_mul(k1)
            .and_then(|x| x.checked_add(k0))
            .ok_or_else(|| Error::BadDirective("continued-fraction overflow".into()))?;
        (h0, k0) = (h1, k1);
        (h1, k1) = (h2, k2);
        if k1 > min_den {
            return Ok((h1, k1));
        }
    }
    if k1 > min_den {
        Ok((h1, k1))
    } else {
        Err(Error::BadDirective(format!(
            "continued fraction too short: denominator {k1} does not exceed {min_den}"
        )))
    }
}

/// Directive sequence (d1, d2, ..., dn) for standard sequences: d1 >= 0 and
/// dk > 0 for k > 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectiveSequence(pub Vec<u32>);

impl DirectiveSequence {
    pub fn new(d: Vec<u32>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::BadDirective("directive sequence must be nonempty".into()));
        }
        if d[1..].iter().any(|&x| x == 0) {
            return Err(Error::BadDirective(
                "directive entries after the first must be positive".into(),
            ));
        }
        Ok(DirectiveSequence(d))
    }

    /// Directive sequence of the continued fraction `[0; 1+d1, d2, ...]`.
    pub fn from_continued_fraction(cf: &[u64]) -> Result<Self> {
        if cf.len() < 2 || cf[0] != 0 {
            return Err(Error::BadDirective(
                "continued fraction must start with 0 and have a tail".into(),
            ));
        }
        if cf[1] == 0 {
            return Err(Error::BadDirective("second continued-fraction term must be >= 1".into()));
        }
        let mut d = vec![(cf[1] - 1) as u32];
        for &a in &cf[2..] {
            if a == 0 {
                return Err(Error::BadDirective(
                    "continued-fraction tail terms must be positive".into(),
                ));
            }
            d.push(a as u32);
        }
        DirectiveSequence::new(d)
    }
}

/// The standard sequence s_n for the full directive: s_{-1}=1, s_0=0,
/// s_n = s_{n-1}^{d_n} s_{n-2}.
pub fn standard_sequence(d: &DirectiveSequence) -> Word {
    let a = Alphabet::binary();
    let mut prev = Word::new(a.clone(), vec![1]).unwrap(); // s_{-1}
    let mut cur = Word::new(a, vec![0]).unwrap(); // s_0
    for &dn in &d.0 {
        let mut data = Vec::with_capacity(cur.len() * dn as usize + prev.len());
        for _ in 0..dn {
            data.extend_from_slice(cur.data());
        }
        data.extend_from_slice(prev.data());
        prev = std::mem::replace(&mut cur, Word::new(Alphabet::binary(), data).unwrap());
    }
    cur
}

/// Length-`len` prefix of the characteristic word (left special sequence)
/// of the slope with continued fraction `cf = [0; 1+d1, d2, ...]`.
///
/// Iterates the standard-sequence recursion until the block covers the
/// requested prefix; errors when the supplied terms run out first.
pub fn characteristic_word(cf: &[u64], len: usize) -> Result<Word> {
    if len == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    let d = DirectiveSequence::from_continued_fraction(cf)?;
    let a = Alphabet::binary();
    let mut prev = Word::new(a.clone(), vec![1]).unwrap();
    let mut cur = Word::new(a, vec![0]).unwrap();
    for &dn in &d.0 {
        let mut data = Vec::with_capacity(cur.len() * dn as usize + prev.len());
        for _ in 0..dn {
            data.extend_from_slice(cur.data());
        }
        data.extend_from_slice(prev.data());
        prev = std::mem::replace(&mut cur, Word::new(Alphabet::binary(), data).unwrap());
        if cur.len() >= len {
            return Ok(cur.prefix(len));
        }
    }
    Err(Error::BadDirective(format!(
        "directive too short: standard sequence reaches length {} < {}",
        cur.len(),
        len
    )))
}

/// The named corpus sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "name", content = "block")]
pub enum NamedSequence {
    Fibonacci,
    Morse,
    Chacon,
    Kolakoski,
    ChampernowneBinary,
    Periodic(String),
}

impl NamedSequence {
    pub fn parse(name: &str, block: Option<&str>) -> Result<Self> {
        match name {
            "fibonacci" => Ok(NamedSequence::Fibonacci),
            "morse" => Ok(NamedSequence::Morse),
            "chacon" => Ok(NamedSequence::Chacon),
            "kolakoski" => Ok(NamedSequence::Kolakoski),
            "champernowne_binary" => Ok(NamedSequence::ChampernowneBinary),
            "periodic" => {
                let block = block.ok_or_else(|| {
                    Error::InvalidArgument("periodic generator needs a block".into())
                })?;
                if block.is_empty() {
                    return Err(Error::InvalidArgument("periodic block must be nonempty".into()));
                }
                Ok(NamedSequence::Periodic(block.to_string()))
            }
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Length-`len` prefix of a named sequence.
pub fn named_sequence(which: &NamedSequence, len: usize) -> Result<Word> {
    if len == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    match which {
        NamedSequence::Fibonacci => {
            Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "0")])?.fixed_point('0', len)
        }
        NamedSequence::Morse => {
            Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "10")])?
                .fixed_point('0', len)
        }
        NamedSequence::Chacon => {
            Substitution::new(Alphabet::binary(), &[('0', "0010"), ('1', "1")])?
                .fixed_point('0', len)
        }
        NamedSequence::Kolakoski => Ok(kolakoski(len)),
        NamedSequence::ChampernowneBinary => Ok(champernowne_binary(len)),
        NamedSequence::Periodic(block) => {
            let mut chars: Vec<char> = block.chars().collect();
            chars.sort_unstable();
            chars.dedup();
            let alphabet = Alphabet::new(chars)?;
            let b = Word::from_text(block, &alphabet)?;
            let data: Vec<u8> = b.data().iter().cycle().take(len).copied().collect();
            Word::new(alphabet, data)
        }
    }
}

/// The self-describing run-length sequence over {1,2}, starting 1,2,2.
fn kolakoski(len: usize) -> Word {
    let alphabet = Alphabet::new("12".chars()).unwrap();
    // indices: symbol '1' -> 0, '2' -> 1; runs lengths are symbol values
    let mut out: Vec<u8> = vec![0, 1, 1];
    let mut read = 2; // out[2] drives the next run
    let mut sym = 0u8; // next run is of '1's
    while out.len() < len {
        let run = out[read] + 1; // value 1 or 2
        for _ in 0..run {
            out.push(sym);
        }
        sym = 1 - sym;
        read += 1;
    }
    out.truncate(len);
    Word::new(alphabet, out).unwrap()
}

/// Concatenated binary expansions of 1, 2, 3, ...
fn champernowne_binary(len: usize) -> Word {
    let mut data: Vec<u8> = Vec::with_capacity(len + 32);
    let mut n: u64 = 1;
    while data.len() < len {
        let bits = 64 - n.leading_zeros();
        for i in (0..bits).rev() {
            data.push(((n >> i) & 1) as u8);
        }
        n += 1;
    }
    data.truncate(len);
    Word::new(Alphabet::binary(), data).unwrap()
}

/// A serializable generator description, the JSON form used by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GeneratorSpec {
    Substitution {
        images: BTreeMap<String, String>,
        seed: String,
    },
    Mechanical {
        #[serde(skip_serializing_if = "Option::is_none")]
        alpha: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        cf: Option<Vec<u64>>,
        #[serde(default)]
        beta: f64,
        variant: MechanicalVariant,
    },
    Characteristic {
        cf: Vec<u64>,
    },
    Standard {
        directive: Vec<u32>,
    },
    Named {
        name: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        block: Option<String>,
    },
}

impl GeneratorSpec {
    /// Produce the length-`len` prefix described by the spec.
    pub fn generate(&self, len: usize) -> Result<Word> {
        match self {
            GeneratorSpec::Substitution { images, seed } => {
                let mut symbols: Vec<char> = Vec::new();
                for k in images.keys() {
                    let mut chars = k.chars();
                    let (Some(c), None) = (chars.next(), chars.next()) else {
                        return Err(Error::InvalidArgument(format!(
                            "substitution keys must be single symbols, got {k:?}"
                        )));
                    };
                    symbols.push(c);
                }
                let alphabet = Alphabet::new(symbols)?;
                let pairs: Vec<(char, &str)> = images
                    .iter()
                    .map(|(k, v)| (k.chars().next().unwrap(), v.as_str()))
                    .collect();
                let theta = Substitution::new(alphabet, &pairs)?;
                let mut seed_chars = seed.chars();
                let (Some(seed), None) = (seed_chars.next(), seed_chars.next()) else {
                    return Err(Error::InvalidArgument("seed must be a single symbol".into()));
                };
                theta.fixed_point(seed, len)
            }
            GeneratorSpec::Mechanical { alpha, cf, beta, variant } => match (alpha, cf) {
                (_, Some(cf)) => {
                    if *beta != 0.0 {
                        return Err(Error::InvalidArgument(
                            "continued-fraction mechanical form supports beta = 0 only".into(),
                        ));
                    }
                    mechanical_cf(cf, 0, 1, len, *variant)
                }
                (Some(alpha), None) => mechanical(*alpha, *beta, len, *variant),
                (None, None) => Err(Error::InvalidArgument(
                    "mechanical generator needs either alpha or cf".into(),
                )),
            },
            GeneratorSpec::Characteristic { cf } => characteristic_word(cf, len),
            GeneratorSpec::Standard { directive } => {
                let d = DirectiveSequence::new(directive.clone())?;
                let s = standard_sequence(&d);
                if s.len() < len {
                    Err(Error::BadDirective(format!(
                        "standard sequence has length {}, shorter than {}",
                        s.len(),
                        len
                    )))
                } else {
                    Ok(s.prefix(len))
                }
            }
            GeneratorSpec::Named { name, block } => {
                let which = NamedSequence::parse(name, block.as_deref())?;
                named_sequence(&which, len)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::complexity_profile;

    #[test]
    fn fibonacci_fixed_point() {
        let theta = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "0")]).unwrap();
        let w = theta.fixed_point('0', 13).unwrap();
        assert_eq!(w.to_text(), "0100101001001");
    }

    #[test]
    fn morse_fixed_point() {
        let theta = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "10")]).unwrap();
        let w = theta.fixed_point('0', 16).unwrap();
        assert_eq!(w.to_text(), "0110100110010110");
    }

    #[test]
    fn degenerate_fixed_point() {
        let theta = Substitution::new(
            Alphabet::new("0".chars()).unwrap(),
            &[('0', "00")],
        )
        .unwrap();
        assert_eq!(theta.fixed_point('0', 5).unwrap().to_text(), "00000");
    }

    #[test]
    fn non_prolongable_seed() {
        let theta = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "0")]).unwrap();
        assert!(matches!(
            theta.fixed_point('1', 5),
            Err(Error::NotProlongable { seed: '1', .. })
        ));
    }

    #[test]
    fn prefix_stability() {
        let theta = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "10")]).unwrap();
        let short = theta.fixed_point('0', 40).unwrap();
        let long = theta.fixed_point('0', 80).unwrap();
        assert_eq!(long.prefix(40), short);
    }

    #[test]
    fn primitivity() {
        let fib = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "0")]).unwrap();
        assert!(fib.is_primitive(2));
        assert!(fib.is_primitive_by_iteration(2));

        let morse = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "10")]).unwrap();
        assert!(morse.is_primitive(1));
        assert!(morse.is_primitive_by_iteration(1));

        let not = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "1")]).unwrap();
        assert!(!not.is_primitive(16));
        assert!(!not.is_primitive_by_iteration(8));
    }

    #[test]
    fn mechanical_fixtures() {
        let alpha = 1.0 / ((1.0 + 5f64.sqrt()) / 2.0).powi(2);
        let lower = mechanical(alpha, 0.0, 10, MechanicalVariant::Lower).unwrap();
        assert_eq!(lower.to_text(), "0010010100");
        let upper = mechanical(alpha, 0.0, 10, MechanicalVariant::Upper).unwrap();
        assert_eq!(upper.to_text(), "1010010100");
        let flat = mechanical(0.0, 0.0, 8, MechanicalVariant::Lower).unwrap();
        assert_eq!(flat.to_text(), "00000000");
    }

    #[test]
    fn mechanical_cf_matches_float() {
        let cf = [0u64, 2, 1, 1, 1, 1, 1];
        let lower = mechanical_cf(&cf, 0, 1, 10, MechanicalVariant::Lower).unwrap();
        assert_eq!(lower.to_text(), "0010010100");
        let upper = mechanical_cf(&cf, 0, 1, 10, MechanicalVariant::Upper).unwrap();
        assert_eq!(upper.to_text(), "1010010100");
    }

    #[test]
    fn standard_sequences() {
        let d = DirectiveSequence::new(vec![1]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "01");
        let d = DirectiveSequence::new(vec![1, 1]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "010");
        let d = DirectiveSequence::new(vec![1, 1, 1]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "01001");
        let d = DirectiveSequence::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "01001010");
        // d = (0, 1): s_1 = s_{-1} = 1, s_2 = s_1 s_0 = 10
        let d = DirectiveSequence::new(vec![0]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "1");
        let d = DirectiveSequence::new(vec![0, 1]).unwrap();
        assert_eq!(standard_sequence(&d).to_text(), "10");
    }

    #[test]
    fn characteristic_word_fixture() {
        let cf: Vec<u64> = std::iter::once(0)
            .chain(std::iter::once(2))
            .chain(std::iter::repeat(1).take(20))
            .collect();
        let l = characteristic_word(&cf, 18).unwrap();
        assert_eq!(l.to_text(), "010010100100101001");
        // characteristic word = tail of the lower mechanical word with beta=0
        let mech = mechanical_cf(&cf, 0, 1, 19, MechanicalVariant::Lower).unwrap();
        assert_eq!(mech.slice(1, 19), l);
        // and equals the Fibonacci substitution fixed point
        let fib = named_sequence(&NamedSequence::Fibonacci, 18).unwrap();
        assert_eq!(l, fib);
    }

    #[test]
    fn characteristic_word_sturmian_complexity() {
        let cf: Vec<u64> = [0, 2].iter().copied().chain(std::iter::repeat(1).take(25)).collect();
        let l = characteristic_word(&cf, 400).unwrap();
        let p = complexity_profile(&l, 8).unwrap();
        assert_eq!(p, vec![2, 3, 4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn named_fixtures() {
        assert_eq!(
            named_sequence(&NamedSequence::Kolakoski, 15).unwrap().to_text(),
            "122112122122112"
        );
        assert_eq!(
            named_sequence(&NamedSequence::Chacon, 10).unwrap().to_text(),
            "0010001010"
        );
        assert_eq!(
            named_sequence(&NamedSequence::Periodic("01".into()), 5).unwrap().to_text(),
            "01010"
        );
        assert_eq!(
            named_sequence(&NamedSequence::ChampernowneBinary, 12).unwrap().to_text(),
            "110111001011"
        );
    }

    #[test]
    fn kolakoski_self_describes() {
        let w = named_sequence(&NamedSequence::Kolakoski, 400).unwrap();
        // run-length encoding equals the word itself, minus the final run
        let mut runs: Vec<u8> = Vec::new();
        let data = w.data();
        let mut i = 0;
        while i < data.len() {
            let mut j = i;
            while j < data.len() && data[j] == data[i] {
                j += 1;
            }
            runs.push((j - i) as u8 - 1); // 1 -> index 0, 2 -> index 1
            i = j;
        }
        runs.pop(); // last run may be truncated
        assert_eq!(&data[..runs.len()], runs.as_slice());
    }

    #[test]
    fn generator_spec_json() {
        let spec: GeneratorSpec = serde_json::from_str(
            r#"{"kind":"substitution","images":{"0":"01","1":"0"},"seed":"0"}"#,
        )
        .unwrap();
        assert_eq!(spec.generate(13).unwrap().to_text(), "0100101001001");
        let spec: GeneratorSpec =
            serde_json::from_str(r#"{"kind":"named","name":"kolakoski"}"#).unwrap();
        assert_eq!(spec.generate(6).unwrap().to_text(), "122112");
    }
}
