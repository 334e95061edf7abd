//! The braided tensor algebra `T(V)` of a diagonal braiding.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::cyclotomic::{CycError, CycScalar};
use crate::words::{is_lyndon, shirshov_decomposition, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("invalid braiding: {0}")]
    InvalidBraiding(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// Matrix `(q_ij)` with `q_ij = ζ_N^{k_ij}`.
#[derive(Clone)]
pub struct BraidingMatrix {
    theta: usize,
    conductor: u32,
    exps: Vec<Vec<u32>>,
    powers: Vec<CycScalar>,
}

impl BraidingMatrix {
    pub fn new(conductor: u32, exps: Vec<Vec<i64>>) -> Result<BraidingMatrix, AlgebraError> {
        let theta = exps.len();
        if theta == 0 {
            return Err(AlgebraError::InvalidBraiding("theta must be positive".into()));
        }
        if exps.iter().any(|r| r.len() != theta) {
            return Err(AlgebraError::InvalidBraiding("matrix is not square".into()));
        }
        let zeta = CycScalar::root_of_unity(conductor, 1)?;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut p = CycScalar::one(conductor)?;
        for _ in 0..conductor {
            powers.push(p.clone());
            p = &p * &zeta;
        }
        let n = conductor as i64;
        let exps = exps.into_iter().map(|r| r.into_iter().map(|k| k.rem_euclid(n) as u32).collect()).collect();
        Ok(BraidingMatrix { theta, conductor, exps, powers })
    }

    /// From scalars that are all roots of unity; the conductor is the lcm of their orders.
    pub fn from_scalars(q: &[Vec<CycScalar>]) -> Result<BraidingMatrix, AlgebraError> {
        let mut pairs = Vec::new();
        let mut l = 1u32;
        for row in q {
            let mut r = Vec::new();
            for s in row {
                let (m, k) = s
                    .as_root_of_unity()
                    .ok_or_else(|| AlgebraError::InvalidBraiding(format!("{s} is not a root of unity")))?;
                let g = k.gcd(&m);
                let (m, k) = (m / g.max(1), k / g.max(1));
                let m = m.max(1);
                l = l.lcm(&m);
                r.push((m, k));
            }
            pairs.push(r);
        }
        let exps = pairs.into_iter().map(|r| r.into_iter().map(|(m, k)| (k * (l / m)) as i64).collect()).collect();
        BraidingMatrix::new(l, exps)
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Exponent `k_ij` of `q_ij` (zero-based indices).
    pub fn exp(&self, i: usize, j: usize) -> u32 {
        self.exps[i][j]
    }

    pub fn exps(&self) -> &[Vec<u32>] {
        &self.exps
    }

    pub fn q(&self, i: usize, j: usize) -> CycScalar {
        self.powers[self.exps[i][j] as usize].clone()
    }

    /// `ζ_N^k`.
    pub fn zeta_pow(&self, k: i64) -> CycScalar {
        self.powers[k.rem_euclid(self.conductor as i64) as usize].clone()
    }

    pub fn one(&self) -> CycScalar {
        self.powers[0].clone()
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar::zero(self.conductor).expect("conductor already validated")
    }

    pub fn scalar(&self, v: i64) -> CycScalar {
        CycScalar::from_int(self.conductor, v).expect("conductor already validated")
    }

    /// Exponent of `χ(α, β)`.
    pub fn chi_exp(&self, a: &[i64], b: &[i64]) -> u32 {
        let n = self.conductor as i64;
        let mut s: i64 = 0;
        for i in 0..self.theta {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.theta {
                if b[j] != 0 {
                    s = (s + a[i] * b[j] % n * self.exps[i][j] as i64) % n;
                }
            }
        }
        s.rem_euclid(n) as u32
    }

    /// `χ(α, β) = Π q_ij^{α_i β_j}`.
    pub fn chi(&self, a: &[i64], b: &[i64]) -> CycScalar {
        self.powers[self.chi_exp(a, b) as usize].clone()
    }

    /// `χ` on `N^θ` degrees.
    pub fn chi_deg(&self, a: &[u32], b: &[u32]) -> CycScalar {
        let a: Vec<i64> = a.iter().map(|&x| x as i64).collect();
        let b: Vec<i64> = b.iter().map(|&x| x as i64).collect();
        self.chi(&a, &b)
    }

    /// Exponent of `q_α = χ(α, α)`.
    pub fn q_alpha_exp(&self, a: &[i64]) -> u32 {
        self.chi_exp(a, a)
    }

    /// Same braiding re-expressed over a multiple of the conductor.
    pub fn with_conductor(&self, m: u32) -> Result<BraidingMatrix, AlgebraError> {
        if m % self.conductor != 0 {
            return Err(AlgebraError::Domain(format!("conductor {m} is not a multiple of {}", self.conductor)));
        }
        let f = (m / self.conductor) as i64;
        BraidingMatrix::new(m, self.exps.iter().map(|r| r.iter().map(|&k| k as i64 * f).collect()).collect())
    }

    /// Braiding of the vertices `perm[0], perm[1], …` (new vertex `a` is old `perm[a]`).
    pub fn permuted(&self, perm: &[usize]) -> BraidingMatrix {
        let exps = perm.iter().map(|&a| perm.iter().map(|&b| self.exps[a][b] as i64).collect()).collect();
        BraidingMatrix::new(self.conductor, exps).expect("permutation of a valid braiding")
    }

    /// Sub-braiding on the listed vertices.
    pub fn restrict(&self, verts: &[usize]) -> BraidingMatrix {
        self.permuted(verts)
    }
}

impl PartialEq for BraidingMatrix {
    fn eq(&self, other: &BraidingMatrix) -> bool {
        if self.theta != other.theta {
            return false;
        }
        let l = self.conductor.lcm(&other.conductor);
        let (fa, fb) = (l / self.conductor, l / other.conductor);
        (0..self.theta).all(|i| (0..self.theta).all(|j| self.exps[i][j] * fa == other.exps[i][j] * fb))
    }
}

impl fmt::Debug for BraidingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidingMatrix(N={}, {:?})", self.conductor, self.exps)
    }
}

impl Serialize for BraidingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BraidingMatrix", 3)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("q_exponents", &self.exps)?;
        st.end()
    }
}

/// Degree of a word as a signed vector.
pub fn word_degree(w: &Word, theta: usize) -> Vec<i64> {
    let mut d = vec![0i64; theta];
    for &l in &w.0 {
        d[l as usize] += 1;
    }
    d
}

/// A noncommutative polynomial, kept canonical (no zero coefficients).
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Word, CycScalar>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(w: Word, c: CycScalar) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    /// The generator `x_i` (zero-based `i`).
    pub fn letter(b: &BraidingMatrix, i: usize) -> NcPoly {
        NcPoly::monomial(Word::letter(i), b.one())
    }

    pub fn word(b: &BraidingMatrix, w: Word) -> NcPoly {
        NcPoly::monomial(w, b.one())
    }

    pub fn constant(c: CycScalar) -> NcPoly {
        NcPoly::monomial(Word::empty(), c)
    }

    pub fn add_term(&mut self, w: Word, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&CycScalar> {
        self.terms.get(w)
    }

    /// Terms listed in deg-lex order, smallest first.
    pub fn terms_deg_lex(&self) -> Vec<(&Word, &CycScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        v
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), -c);
        }
        r
    }

    pub fn scale(&self, c: &CycScalar) -> NcPoly {
        let mut r = NcPoly::zero();
        if c.is_zero() {
            return r;
        }
        for (w, d) in &self.terms {
            r.terms.insert(w.clone(), d * c);
        }
        r
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut r = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                r.add_term(u.concat(v), a * b);
            }
        }
        r
    }

    pub fn pow(&self, b: &BraidingMatrix, k: u32) -> NcPoly {
        let mut acc = NcPoly::constant(b.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree if every term has the same letter counts.
    pub fn degree(&self, theta: usize) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree(theta);
        it.all(|w| w.degree(theta) == d).then_some(d)
    }

    pub fn homogeneous_components(&self, theta: usize) -> BTreeMap<Vec<u32>, NcPoly> {
        let mut out: BTreeMap<Vec<u32>, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree(theta)).or_default().terms.insert(w.clone(), c.clone());
        }
        out
    }

    /// Largest word in lexicographic order.
    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn min_word(&self) -> Option<&Word> {
        self.terms.keys().next()
    }

    pub fn relabel(&self, map: &[usize]) -> NcPoly {
        let mut r = NcPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(w.relabel(map), c.clone());
        }
        r
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms_deg_lex().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{self}]")
    }
}

impl Serialize for NcPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            word: &'a Word,
            coeff: &'a CycScalar,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in self.terms_deg_lex().into_iter().rev() {
            seq.serialize_element(&Term { word: w, coeff: c })?;
        }
        seq.end()
    }
}

/// An element of `T(V) ⊗ T(V)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), CycScalar>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, l: Word, r: Word, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &CycScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut r = self.clone();
        for ((a, b), c) in &other.terms {
            r.add_term(a.clone(), b.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut r = self.clone();
        for ((a, b), c) in &other.terms {
            r.add_term(a.clone(), b.clone(), -c);
        }
        r
    }

    pub fn scale(&self, c: &CycScalar) -> TensorPoly {
        let mut r = TensorPoly::zero();
        for ((a, b), d) in &self.terms {
            r.add_term(a.clone(), b.clone(), d * c);
        }
        r
    }

    /// `p ⊗ q`.
    pub fn tensor(p: &NcPoly, q: &NcPoly) -> TensorPoly {
        let mut r = TensorPoly::zero();
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                r.add_term(u.clone(), v.clone(), a * b);
            }
        }
        r
    }

    /// Splits into bidegree components.
    pub fn bihomogeneous_components(&self, theta: usize) -> BTreeMap<(Vec<u32>, Vec<u32>), TensorPoly> {
        let mut out: BTreeMap<(Vec<u32>, Vec<u32>), TensorPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry((a.degree(theta), b.degree(theta))).or_default().terms.insert((a.clone(), b.clone()), c.clone());
        }
        out
    }

    /// Component in the given bidegree.
    pub fn component(&self, theta: usize, left: &[u32], right: &[u32]) -> TensorPoly {
        let mut r = TensorPoly::zero();
        for ((a, b), c) in &self.terms {
            if a.degree(theta) == left && b.degree(theta) == right {
                r.terms.insert((a.clone(), b.clone()), c.clone());
            }
        }
        r
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b), c)| format!("({c})*{a}⊗{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly[{self}]")
    }
}

/// `χ(deg x, deg y)` for words.
pub fn chi_words(b: &BraidingMatrix, x: &Word, y: &Word) -> CycScalar {
    let t = b.theta();
    b.chi(&word_degree(x, t), &word_degree(y, t))
}

/// `[x, y]_c = xy − χ(α, β) yx`, extended bilinearly over homogeneous parts.
pub fn braided_commutator(b: &BraidingMatrix, x: &NcPoly, y: &NcPoly) -> NcPoly {
    let t = b.theta();
    let mut r = NcPoly::zero();
    for (dx, px) in x.homogeneous_components(t) {
        for (dy, py) in y.homogeneous_components(t) {
            let c = b.chi_deg(&dx, &dy);
            r = r.add(&px.mul(&py)).sub(&py.mul(&px).scale(&c));
        }
    }
    r
}

/// `(ad_c x_i)^r (x_j)`.
pub fn ad_pow(b: &BraidingMatrix, i: usize, r: u32, j: usize) -> Result<NcPoly, AlgebraError> {
    if i == j {
        return Err(AlgebraError::Domain("ad_pow needs distinct letters".into()));
    }
    let xi = NcPoly::letter(b, i);
    let mut acc = NcPoly::letter(b, j);
    for _ in 0..r {
        acc = braided_commutator(b, &xi, &acc);
    }
    Ok(acc)
}

/// The hyperletter `[u]_c` of a Lyndon word.
pub fn hyperletter(b: &BraidingMatrix, u: &Word) -> Result<NcPoly, AlgebraError> {
    if !is_lyndon(u)? {
        return Err(WordError::NotLyndon(u.to_string()).into());
    }
    let mut memo = HashMap::new();
    Ok(hyperletter_rec(b, u, &mut memo))
}

fn hyperletter_rec(b: &BraidingMatrix, u: &Word, memo: &mut HashMap<Word, NcPoly>) -> NcPoly {
    if u.len() == 1 {
        return NcPoly::word(b, u.clone());
    }
    if let Some(p) = memo.get(u) {
        return p.clone();
    }
    let (v, w) = shirshov_decomposition(u).expect("Lyndon input");
    let pv = hyperletter_rec(b, &v, memo);
    let pw = hyperletter_rec(b, &w, memo);
    let r = braided_commutator(b, &pv, &pw);
    memo.insert(u.clone(), r.clone());
    r
}

/// Enumerates the shuffle splittings of a word; `emit(left, right, exponent)`.
///
/// Δ(x_{w_1}⋯x_{w_n}) = Σ_S q-exponent · w|_L ⊗ w|_R where the exponent
/// collects `k(w_a, w_b)` over `a < b`, `a ∈ R`, `b ∈ L`.
fn word_splittings(b: &BraidingMatrix, w: &Word, left_deg: Option<&[u32]>, emit: &mut dyn FnMut(Word, Word, u32)) {
    let t = b.theta();
    let n = b.conductor();
    let total = w.degree(t);
    let mut remaining: Vec<u32> = total.clone();
    let mut need_left: Option<Vec<u32>> = left_deg.map(|d| d.to_vec());
    if let Some(d) = &need_left {
        if d.iter().zip(&total).any(|(a, b)| a > b) {
            return;
        }
    }
    let mut right_cnt = vec![0u32; t];
    let mut left = Vec::new();
    let mut right = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        b: &BraidingMatrix,
        w: &[u8],
        pos: usize,
        n: u32,
        exp: u32,
        right_cnt: &mut Vec<u32>,
        remaining: &mut Vec<u32>,
        need_left: &mut Option<Vec<u32>>,
        left: &mut Vec<u8>,
        right: &mut Vec<u8>,
        emit: &mut dyn FnMut(Word, Word, u32),
    ) {
        if pos == w.len() {
            emit(Word(left.clone()), Word(right.clone()), exp);
            return;
        }
        let l = w[pos] as usize;
        remaining[l] -= 1;
        // put in the left factor
        let can_left = need_left.as_ref().is_none_or(|d| d[l] > 0);
        if can_left {
            let mut e = exp as u64;
            for (a, &c) in right_cnt.iter().enumerate() {
                if c > 0 {
                    e += c as u64 * b.exp(a, l) as u64;
                }
            }
            if let Some(d) = need_left.as_mut() {
                d[l] -= 1;
            }
            left.push(l as u8);
            rec(b, w, pos + 1, n, (e % n as u64) as u32, right_cnt, remaining, need_left, left, right, emit);
            left.pop();
            if let Some(d) = need_left.as_mut() {
                d[l] += 1;
            }
        }
        // put in the right factor
        let can_right = need_left.as_ref().is_none_or(|d| d[l] <= remaining[l]);
        if can_right {
            right_cnt[l] += 1;
            right.push(l as u8);
            rec(b, w, pos + 1, n, exp, right_cnt, remaining, need_left, left, right, emit);
            right.pop();
            right_cnt[l] -= 1;
        }
        remaining[l] += 1;
    }
    rec(b, &w.0, 0, n, 0, &mut right_cnt, &mut remaining, &mut need_left, &mut left, &mut right, emit);
}

/// `Δ(p)` in the braided tensor product.
pub fn coproduct(b: &BraidingMatrix, p: &NcPoly) -> TensorPoly {
    let mut r = TensorPoly::zero();
    for (w, c) in p.terms() {
        word_splittings(b, w, None, &mut |l, rt, e| {
            r.add_term(l, rt, c * &b.zeta_pow(e as i64));
        });
    }
    r
}

/// Component of `Δ(p)` whose left factor has degree `left_deg`.
pub fn coproduct_component(b: &BraidingMatrix, p: &NcPoly, left_deg: &[u32]) -> TensorPoly {
    let mut r = TensorPoly::zero();
    for (w, c) in p.terms() {
        word_splittings(b, w, Some(left_deg), &mut |l, rt, e| {
            r.add_term(l, rt, c * &b.zeta_pow(e as i64));
        });
    }
    r
}

/// `(Δ ⊗ id)` applied to a tensor, giving triples keyed by three words.
pub fn coproduct_left(b: &BraidingMatrix, t: &TensorPoly) -> BTreeMap<(Word, Word, Word), CycScalar> {
    let mut out: BTreeMap<(Word, Word, Word), CycScalar> = BTreeMap::new();
    for ((u, v), c) in t.terms() {
        word_splittings(b, u, None, &mut |l, m, e| {
            let val = c * &b.zeta_pow(e as i64);
            add_triple(&mut out, (l, m, v.clone()), val);
        });
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor.
pub fn coproduct_right(b: &BraidingMatrix, t: &TensorPoly) -> BTreeMap<(Word, Word, Word), CycScalar> {
    let mut out: BTreeMap<(Word, Word, Word), CycScalar> = BTreeMap::new();
    for ((u, v), c) in t.terms() {
        word_splittings(b, v, None, &mut |m, r, e| {
            let val = c * &b.zeta_pow(e as i64);
            add_triple(&mut out, (u.clone(), m, r), val);
        });
    }
    out
}

fn add_triple(out: &mut BTreeMap<(Word, Word, Word), CycScalar>, key: (Word, Word, Word), val: CycScalar) {
    if val.is_zero() {
        return;
    }
    let remove = match out.get_mut(&key) {
        Some(e) => {
            *e += &val;
            e.is_zero()
        }
        None => {
            out.insert(key.clone(), val);
            false
        }
    };
    if remove {
        out.remove(&key);
    }
}

/// Skew derivation `D_i`: coefficient of `· ⊗ x_i` in `Δ_{n-1,1}`.
pub fn derivation_d(b: &BraidingMatrix, i: usize, p: &NcPoly) -> NcPoly {
    let n = b.conductor() as u64;
    let mut r = NcPoly::zero();
    for (w, c) in p.terms() {
        let s = &w.0;
        let mut e: u64 = 0;
        for k in (0..s.len()).rev() {
            if s[k] as usize == i {
                let mut v = s.clone();
                v.remove(k);
                r.add_term(Word(v), c * &b.zeta_pow((e % n) as i64));
            }
            e += b.exp(i, s[k] as usize) as u64;
        }
    }
    r
}

/// Skew derivation `F_i`: coefficient of `x_i ⊗ ·` in `Δ_{1,n-1}`.
pub fn derivation_f(b: &BraidingMatrix, i: usize, p: &NcPoly) -> NcPoly {
    let n = b.conductor() as u64;
    let mut r = NcPoly::zero();
    for (w, c) in p.terms() {
        let s = &w.0;
        let mut e: u64 = 0;
        for k in 0..s.len() {
            if s[k] as usize == i {
                let mut v = s.clone();
                v.remove(k);
                r.add_term(Word(v), c * &b.zeta_pow((e % n) as i64));
            }
            e += b.exp(s[k] as usize, i) as u64;
        }
    }
    r
}

/// The canonical form with `(x_i | x_j) = δ_ij`; `(p | w x_i) = (D_i p | w)`.
pub fn bilinear_form(b: &BraidingMatrix, x: &NcPoly, y: &NcPoly) -> CycScalar {
    let t = b.theta();
    let xs = x.homogeneous_components(t);
    let mut acc = b.zero();
    for (w, c) in y.terms() {
        let Some(px) = xs.get(&w.degree(t)) else { continue };
        let mut cur = px.clone();
        for &l in w.0.iter().rev() {
            cur = derivation_d(b, l as usize, &cur);
            if cur.is_zero() {
                break;
            }
        }
        if let Some(v) = cur.coeff(&Word::empty()) {
            acc = &acc + &(v * c);
        }
    }
    acc
}
