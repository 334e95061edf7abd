//! Words over the alphabet `{1, …, θ}` and Lyndon combinatorics.
//!
//! Letters are stored zero-based (`0` is `x_1`); the public constructors and
//! the serialized form use one-based letters.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finite word; `Ord` is the lexicographic order with prefixes first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("the empty word is not allowed here")]
    Empty,
    #[error("{0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("a single letter has no Shirshov decomposition")]
    SingleLetter,
    #[error("letter {0} out of range")]
    BadLetter(usize),
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// From one-based letters, e.g. `[1, 1, 2]` for `x_1 x_1 x_2`.
    pub fn from_letters(letters: &[usize]) -> Word {
        Word(
            letters
                .iter()
                .map(|&l| {
                    assert!((1..=255).contains(&l), "letters are 1-based");
                    (l - 1) as u8
                })
                .collect(),
        )
    }

    pub fn letter(i: usize) -> Word {
        Word(vec![i as u8])
    }

    /// One-based letters.
    pub fn letters(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter-count tuple in `N^θ`.
    pub fn degree(&self, theta: usize) -> Vec<u32> {
        let mut d = vec![0u32; theta];
        for &l in &self.0 {
            d[l as usize] += 1;
        }
        d
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Renames letters through `map` (zero-based).
    pub fn relabel(&self, map: &[usize]) -> Word {
        Word(self.0.iter().map(|&l| map[l as usize] as u8).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // x1^2x2 style
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            write!(f, "x{}", l as usize + 1)?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if v.iter().any(|&l| l == 0 || l > 255) {
            return Err(serde::de::Error::custom("letters must lie in 1..=255"));
        }
        Ok(Word::from_letters(&v))
    }
}

/// True iff `u` is strictly smaller than each of its proper nonempty suffixes.
pub fn is_lyndon(u: &Word) -> Result<bool, WordError> {
    if u.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(is_lyndon_slice(&u.0))
}

fn is_lyndon_slice(u: &[u8]) -> bool {
    (1..u.len()).all(|i| u < &u[i..])
}

/// All Lyndon words of length at most `max_len`, in lexicographic order (Duval's generator).
pub fn enumerate_lyndon(theta: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if theta == 0 || max_len == 0 {
        return out;
    }
    let k = theta as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Word(w.clone()));
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Lyndon words whose degree is componentwise at most `bound`.
pub fn enumerate_lyndon_in_box(theta: usize, bound: &[u32]) -> Vec<Word> {
    let max_len: u32 = bound.iter().sum();
    enumerate_lyndon(theta, max_len as usize)
        .into_iter()
        .filter(|w| w.degree(theta).iter().zip(bound).all(|(a, b)| a <= b))
        .collect()
}

/// Chen–Fox–Lyndon factorization `u = l_1 ⋯ l_r` with `l_1 ≥ … ≥ l_r`.
pub fn lyndon_factorization(u: &Word) -> Result<Vec<Word>, WordError> {
    if u.is_empty() {
        return Err(WordError::Empty);
    }
    let s = &u.0;
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    Ok(out)
}

/// Shirshov decomposition `u = vw`, `w` the smallest proper nonempty suffix.
pub fn shirshov_decomposition(u: &Word) -> Result<(Word, Word), WordError> {
    if u.is_empty() {
        return Err(WordError::Empty);
    }
    if u.len() == 1 {
        return Err(WordError::SingleLetter);
    }
    if !is_lyndon_slice(&u.0) {
        return Err(WordError::NotLyndon(u.to_string()));
    }
    let best = (1..u.len()).min_by(|&a, &b| u.0[a..].cmp(&u.0[b..])).unwrap();
    Ok((Word(u.0[..best].to_vec()), Word(u.0[best..].to_vec())))
}

/// `u ≺ v` in deg-lex: longer words are smaller; equal lengths compare lexicographically.
pub fn deg_lex_less(u: &Word, v: &Word) -> bool {
    if u.len() != v.len() {
        return u.len() > v.len();
    }
    u < v
}

/// All words with the given letter counts, in lexicographic order.
pub fn words_of_degree(deg: &[u32]) -> Vec<Word> {
    let total: u32 = deg.iter().sum();
    let mut out = Vec::new();
    let mut counts = deg.to_vec();
    let mut cur = Vec::with_capacity(total as usize);
    fn rec(counts: &mut [u32], cur: &mut Vec<u8>, left: u32, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for l in 0..counts.len() {
            if counts[l] > 0 {
                counts[l] -= 1;
                cur.push(l as u8);
                rec(counts, cur, left - 1, out);
                cur.pop();
                counts[l] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, total, &mut out);
    out
}

/// All words of length `len` over `theta` letters, lexicographic.
pub fn all_words(theta: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * theta);
        for w in &out {
            for l in 0..theta {
                let mut v = w.0.clone();
                v.push(l as u8);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Word {
        Word::from_letters(v)
    }

    #[test]
    fn lyndon_recognition() {
        assert!(is_lyndon(&w(&[1, 2])).unwrap());
        assert!(!is_lyndon(&w(&[2, 1])).unwrap());
        assert!(is_lyndon(&w(&[1, 1, 2, 1, 2])).unwrap());
        assert!(!is_lyndon(&w(&[1, 1])).unwrap());
        assert!(is_lyndon(&Word::empty()).is_err());
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_lyndon(2, 2), vec![w(&[1]), w(&[1, 2]), w(&[2])]);
        assert_eq!(enumerate_lyndon(2, 3), vec![w(&[1]), w(&[1, 1, 2]), w(&[1, 2]), w(&[1, 2, 2]), w(&[2])]);
        assert_eq!(enumerate_lyndon(1, 6), vec![w(&[1])]);
    }

    #[test]
    fn enumeration_matches_filter() {
        for theta in 1..=3 {
            for len in 1..=7 {
                let mut brute: Vec<Word> =
                    (1..=len).flat_map(|l| all_words(theta, l)).filter(|u| is_lyndon(u).unwrap()).collect();
                brute.sort();
                assert_eq!(enumerate_lyndon(theta, len), brute, "theta={theta} len={len}");
            }
        }
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(lyndon_factorization(&w(&[2, 1, 1])).unwrap(), vec![w(&[2]), w(&[1]), w(&[1])]);
        assert_eq!(lyndon_factorization(&w(&[1, 2, 1, 2])).unwrap(), vec![w(&[1, 2]), w(&[1, 2])]);
        assert_eq!(lyndon_factorization(&w(&[1, 2, 2, 1, 2])).unwrap(), vec![w(&[1, 2, 2]), w(&[1, 2])]);
    }

    #[test]
    fn shirshov_examples() {
        assert_eq!(shirshov_decomposition(&w(&[1, 2])).unwrap(), (w(&[1]), w(&[2])));
        assert_eq!(shirshov_decomposition(&w(&[1, 1, 2, 1, 2])).unwrap(), (w(&[1, 1, 2]), w(&[1, 2])));
        assert_eq!(shirshov_decomposition(&w(&[1, 1, 2])).unwrap(), (w(&[1]), w(&[1, 2])));
        assert!(shirshov_decomposition(&w(&[2, 1])).is_err());
        assert!(shirshov_decomposition(&w(&[1])).is_err());
    }

    #[test]
    fn deg_lex_examples() {
        assert!(deg_lex_less(&w(&[1, 2]), &w(&[1])));
        assert!(deg_lex_less(&w(&[1, 2]), &w(&[2, 1])));
        assert!(!deg_lex_less(&Word::empty(), &w(&[1])));
        assert!(deg_lex_less(&w(&[1]), &Word::empty()));
    }

    #[test]
    fn words_of_degree_counts() {
        assert_eq!(words_of_degree(&[2, 2]).len(), 6);
        assert_eq!(words_of_degree(&[1, 1, 1]).len(), 6);
        let ws = words_of_degree(&[2, 1]);
        assert_eq!(ws, vec![w(&[1, 1, 2]), w(&[1, 2, 1]), w(&[2, 1, 1])]);
    }

    #[test]
    fn display_uses_powers() {
        assert_eq!(w(&[1, 1, 2, 1, 2]).to_string(), "x1^2x2x1x2");
        assert_eq!(Word::empty().to_string(), "1");
    }
}
