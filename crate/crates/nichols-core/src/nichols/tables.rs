//! Lyndon words attached to positive roots, in standard numbering.

use std::collections::BTreeMap;

use crate::classify::StandardClass;
use crate::weyl::{positive_roots, standard_cartan, CartanKind, CartanMatrix};
use crate::words::Word;

use super::NicholsError;

fn w(letters: &[usize]) -> Word {
    Word::from_letters(letters)
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn desc(a: usize, b: usize) -> Vec<usize> {
    (b..=a).rev().collect()
}

fn root_of(theta: usize, word: &Word) -> Vec<u32> {
    word.degree(theta)
}

/// Words by the max-factorization rule: `l(α) = max{l(β)l(γ) : β+γ = α, l(β) < l(γ)}`.
pub fn generic_words(c: &CartanMatrix) -> Result<BTreeMap<Vec<u32>, Word>, NicholsError> {
    let roots = positive_roots(c)?;
    let n = c.rank();
    let mut out: BTreeMap<Vec<u32>, Word> = BTreeMap::new();
    for alpha in &roots.positive_roots {
        let h: u32 = alpha.iter().sum();
        if h == 1 {
            let i = alpha.iter().position(|&a| a == 1).unwrap();
            out.insert(alpha.clone(), Word::letter(i));
            continue;
        }
        let mut best: Option<Word> = None;
        for (beta, lb) in out.iter() {
            if (0..n).any(|k| beta[k] > alpha[k]) {
                continue;
            }
            let gamma: Vec<u32> = (0..n).map(|k| alpha[k] - beta[k]).collect();
            if let Some(lg) = out.get(&gamma) {
                if lb < lg {
                    let cand = lb.concat(lg);
                    if best.as_ref().is_none_or(|b| cand > *b) {
                        best = Some(cand);
                    }
                }
            }
        }
        let word = best.ok_or_else(|| NicholsError::Domain(format!("no factorization for root {alpha:?}")))?;
        out.insert(alpha.clone(), word);
    }
    Ok(out)
}

fn type_a(theta: usize) -> Vec<Word> {
    let mut v = Vec::new();
    for i in 1..=theta {
        for j in i..=theta {
            v.push(w(&range(i, j)));
        }
    }
    v
}

fn type_b(theta: usize) -> Vec<Word> {
    let mut v = type_a(theta);
    for i in 1..theta {
        for j in i + 1..=theta {
            let mut l = range(1, i);
            l.extend(range(1, j));
            v.push(w(&l));
        }
    }
    v
}

fn type_c(theta: usize) -> Vec<Word> {
    let mut v = type_a(theta);
    for i in 1..theta {
        let mut l = range(i, theta - 1);
        l.extend(range(i, theta));
        v.push(w(&l));
        for j in i + 1..theta {
            let mut l = range(i, theta);
            l.extend(desc(theta - 1, j));
            v.push(w(&l));
        }
    }
    v
}

fn type_d(theta: usize) -> Vec<Word> {
    let mut v = Vec::new();
    for i in 1..theta {
        for j in i..theta {
            v.push(w(&range(i, j)));
        }
    }
    v.push(w(&[theta]));
    for i in 1..=theta - 2 {
        let mut zb = range(i, theta - 2);
        zb.push(theta);
        v.push(w(&zb));
        let mut u = zb.clone();
        u.push(theta - 1);
        v.push(w(&u));
        for j in i + 1..=theta - 2 {
            let mut z = u.clone();
            z.extend(desc(theta - 2, j));
            v.push(w(&z));
        }
    }
    v
}

fn type_g2() -> Vec<Word> {
    vec![w(&[1]), w(&[2]), w(&[1, 2]), w(&[1, 1, 2]), w(&[1, 1, 1, 2]), w(&[1, 1, 2, 1, 2])]
}

/// F₄ words for the roots with full support.
fn type_f4_full() -> Vec<Word> {
    [
        vec![1, 2, 3, 4],
        vec![1, 2, 3, 4, 3],
        vec![1, 2, 3, 4, 3, 2],
        vec![1, 2, 3, 4, 3, 2, 3],
        vec![1, 2, 3, 4, 3, 4],
        vec![1, 2, 3, 4, 3, 4, 2],
        vec![1, 2, 3, 4, 3, 4, 2, 3],
        vec![1, 2, 3, 4, 3, 4, 2, 3, 3],
        vec![1, 2, 3, 4, 3, 4, 2, 3, 3, 2],
        vec![1, 2, 3, 4, 3, 1, 2, 3, 4, 3, 2],
    ]
    .iter()
    .map(|l| w(l))
    .collect()
}

/// E-type words for rank 6, 7 or 8 (Bourbaki numbering).
pub fn e_type_words(n: usize) -> Result<Vec<(Vec<u32>, Word)>, NicholsError> {
    if !(6..=8).contains(&n) {
        return Err(NicholsError::Domain(format!("E{n} is not a finite type")));
    }
    ordered(&standard_cartan(CartanKind::E, n), generic_words(&standard_cartan(CartanKind::E, n))?)
}

fn ordered(c: &CartanMatrix, map: BTreeMap<Vec<u32>, Word>) -> Result<Vec<(Vec<u32>, Word)>, NicholsError> {
    let roots = positive_roots(c)?;
    roots
        .positive_roots
        .into_iter()
        .map(|r| {
            let word = map.get(&r).cloned().ok_or_else(|| NicholsError::NotRoot(format!("{r:?}")))?;
            Ok((r, word))
        })
        .collect()
}

/// Root and Lyndon word for every positive root of a finite type, ordered as `positive_roots`.
pub fn table_words(kind: CartanKind, theta: usize) -> Result<Vec<(Vec<u32>, Word)>, NicholsError> {
    let bad = || NicholsError::Domain(format!("{kind:?}{theta} is not a finite type"));
    let list = match kind {
        CartanKind::A if theta >= 1 => type_a(theta),
        CartanKind::B if theta >= 2 => type_b(theta),
        CartanKind::C if theta >= 3 => type_c(theta),
        CartanKind::D if theta >= 4 => type_d(theta),
        CartanKind::G if theta == 2 => type_g2(),
        CartanKind::E => return e_type_words(theta),
        CartanKind::F if theta == 4 => {
            let c = standard_cartan(kind, 4);
            let mut map = generic_words(&c)?;
            for word in type_f4_full() {
                map.insert(root_of(4, &word), word);
            }
            return ordered(&c, map);
        }
        _ => return Err(bad()),
    };
    let map = list.into_iter().map(|word| (root_of(theta, &word), word)).collect();
    ordered(&standard_cartan(kind, theta), map)
}

/// Lyndon word of `alpha` for the Cartan type of a standard class.
pub fn lyndon_word_for_root(class: &StandardClass, alpha: &[u32]) -> Result<Word, NicholsError> {
    let (kind, theta) = class
        .cartan_kind()
        .ok_or_else(|| NicholsError::NotStandard(format!("{} has no single Cartan type", class.family())))?;
    if alpha.len() != theta {
        return Err(NicholsError::NotRoot(format!("{alpha:?}")));
    }
    table_words(kind, theta)?
        .into_iter()
        .find(|(r, _)| r == alpha)
        .map(|(_, word)| word)
        .ok_or_else(|| NicholsError::NotRoot(format!("{alpha:?}")))
}
