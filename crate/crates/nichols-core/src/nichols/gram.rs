//! Gram-matrix oracle for the canonical bilinear form on words.

use std::collections::HashMap;

use crate::cyclotomic::CycScalar;
use crate::freealgebra::{BraidingMatrix, NcPoly};
use crate::words::{words_of_degree, Word};

/// `(u | w)` for words, by `(u | w' x_i) = (D_i u | w')`.
pub fn word_pairing(b: &BraidingMatrix, u: &Word, w: &Word) -> CycScalar {
    let mut memo = HashMap::new();
    pairing_rec(b, &u.0, &w.0, &mut memo)
}

fn pairing_rec(b: &BraidingMatrix, u: &[u8], w: &[u8], memo: &mut HashMap<(Vec<u8>, Vec<u8>), CycScalar>) -> CycScalar {
    if u.len() != w.len() {
        return b.zero();
    }
    if u.is_empty() {
        return b.one();
    }
    let key = (u.to_vec(), w.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let i = *w.last().unwrap();
    let rest = &w[..w.len() - 1];
    let n = b.conductor() as u64;
    let mut acc = b.zero();
    let mut e: u64 = 0;
    for k in (0..u.len()).rev() {
        if u[k] == i {
            let mut v = u.to_vec();
            v.remove(k);
            let sub = pairing_rec(b, &v, rest, memo);
            if !sub.is_zero() {
                acc = &acc + &(&b.zeta_pow((e % n) as i64) * &sub);
            }
        }
        e += b.exp(i as usize, u[k] as usize) as u64;
    }
    memo.insert(key, acc.clone());
    acc
}

/// Words of one degree with, for each word, the ways of deleting a letter.
struct Level {
    words: Vec<Word>,
    /// `(letter, index of the shorter word, exponent of ζ)` per deletion.
    deletions: Vec<Vec<(u8, usize, u32)>>,
}

fn levels(b: &BraidingMatrix, deg: &[u32]) -> HashMap<Vec<u32>, Level> {
    let n = b.conductor();
    let mut out: HashMap<Vec<u32>, Level> = HashMap::new();
    let mut index: HashMap<Vec<u32>, HashMap<Vec<u8>, usize>> = HashMap::new();
    for d in crate::nichols::degrees_in_box(deg) {
        let words = words_of_degree(&d);
        let mut deletions = Vec::with_capacity(words.len());
        for u in &words {
            let s = &u.0;
            let mut dels = Vec::new();
            for k in 0..s.len() {
                let i = s[k] as usize;
                let e: u64 = s[k + 1..].iter().map(|&l| b.exp(i, l as usize) as u64).sum();
                let mut smaller = d.clone();
                smaller[i] -= 1;
                let mut v = s.clone();
                v.remove(k);
                dels.push((s[k], index[&smaller][&v], (e % n as u64) as u32));
            }
            deletions.push(dels);
        }
        index.insert(d.clone(), words.iter().enumerate().map(|(k, w)| (w.0.clone(), k)).collect());
        out.insert(d, Level { words, deletions });
    }
    out
}

/// Gram matrix on the words of degree `deg` (lexicographic order).
///
/// Columns are filled by walking the prefix tree of the words: the pairings against
/// `w x_i` are read off those against `w` via `(u | w x_i) = (D_i u | w)`.
pub fn gram_matrix(b: &BraidingMatrix, deg: &[u32]) -> (Vec<Word>, Vec<Vec<CycScalar>>) {
    let lv = levels(b, deg);
    let words = lv[deg].words.clone();
    let col_index: HashMap<&[u8], usize> = words.iter().enumerate().map(|(k, w)| (w.0.as_slice(), k)).collect();
    let mut m = vec![vec![b.zero(); words.len()]; words.len()];
    let powers: Vec<CycScalar> = (0..b.conductor() as i64).map(|k| b.zeta_pow(k)).collect();
    let mut stack: Vec<(Vec<u8>, Vec<u32>, Vec<CycScalar>)> = vec![(Vec::new(), vec![0; deg.len()], vec![b.one()])];
    while let Some((prefix, d, f)) = stack.pop() {
        if d.as_slice() == deg {
            let c = col_index[prefix.as_slice()];
            for (r, v) in f.into_iter().enumerate() {
                m[r][c] = v;
            }
            continue;
        }
        for i in 0..deg.len() {
            if d[i] == deg[i] {
                continue;
            }
            let mut d2 = d.clone();
            d2[i] += 1;
            let level = &lv[&d2];
            let g: Vec<CycScalar> = level
                .deletions
                .iter()
                .map(|dels| {
                    let mut acc = b.zero();
                    for &(l, idx, e) in dels {
                        if l as usize == i && !f[idx].is_zero() {
                            acc = &acc + &(&powers[e as usize] * &f[idx]);
                        }
                    }
                    acc
                })
                .collect();
            if g.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mut p2 = prefix.clone();
            p2.push(i as u8);
            stack.push((p2, d2, g));
        }
    }
    (words, m)
}

/// Exact rank by Gaussian elimination (first nonzero pivot, row-major).
pub fn rank(mut m: Vec<Vec<CycScalar>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<CycScalar> = m[r].iter().map(|x| x * &inv).collect();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    let t = &f * &pivot_row[k];
                    m[i][k] -= &t;
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `dim 𝔅(V)^deg` as the rank of the Gram matrix.
pub fn gram_rank(b: &BraidingMatrix, deg: &[u32]) -> usize {
    rank(gram_matrix(b, deg).1)
}

/// `p ∈ I(V)` iff `(p | w) = 0` for every word `w` of each homogeneous degree.
pub fn in_ideal_gram(b: &BraidingMatrix, p: &NcPoly) -> bool {
    let t = b.theta();
    let mut memo = HashMap::new();
    for (deg, part) in p.homogeneous_components(t) {
        for w in words_of_degree(&deg) {
            let mut acc = b.zero();
            for (u, c) in part.terms() {
                acc = &acc + &(c * &pairing_rec(b, &u.0, &w.0, &mut memo));
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}
