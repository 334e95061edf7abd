//! Graded components of `𝔅(V)` built degree by degree.
//!
//! `B^γ` is embedded in `⊕_j B^{γ−e_j}` through `p ↦ (D_j p)_j`, which is injective
//! on `𝔅(V)` in positive degree. Spanning candidates are `x_i b` with `b` a basis
//! word of `B^{γ−e_i}`, using `D_j(x_i y) = x_i D_j(y) + δ_ij χ(e_i, deg y) y`.

use std::collections::{BTreeMap, HashMap};

use crate::cyclotomic::CycScalar;
use crate::freealgebra::{BraidingMatrix, NcPoly};
use crate::words::Word;

use super::{max_cap, NicholsError};

/// Sparse coordinate vector, sorted by index, without zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SVec(pub Vec<(usize, CycScalar)>);

impl SVec {
    pub fn unit(i: usize, c: CycScalar) -> SVec {
        if c.is_zero() {
            SVec::default()
        } else {
            SVec(vec![(i, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&CycScalar> {
        self.0.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.0[k].1)
    }

    /// `self + lam·other`.
    pub fn axpy(&self, lam: &CycScalar, other: &SVec) -> SVec {
        if lam.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            if y == b.len() || (x < a.len() && a[x].0 < b[y].0) {
                out.push(a[x].clone());
                x += 1;
            } else if x == a.len() || b[y].0 < a[x].0 {
                out.push((b[y].0, lam * &b[y].1));
                y += 1;
            } else {
                let v = &a[x].1 + &(lam * &b[y].1);
                if !v.is_zero() {
                    out.push((a[x].0, v));
                }
                x += 1;
                y += 1;
            }
        }
        SVec(out)
    }

    pub fn scale(&self, c: &CycScalar) -> SVec {
        if c.is_zero() {
            return SVec::default();
        }
        SVec(self.0.iter().map(|(i, v)| (*i, v * c)).collect())
    }

    fn shifted(&self, off: usize) -> impl Iterator<Item = (usize, CycScalar)> + '_ {
        self.0.iter().map(move |(i, v)| (i + off, v.clone()))
    }

    /// Entries with index in `lo..hi`, re-based to start at zero.
    fn slice(&self, lo: usize, hi: usize) -> SVec {
        SVec(self.0.iter().filter(|(i, _)| *i >= lo && *i < hi).map(|(i, v)| (i - lo, v.clone())).collect())
    }
}

/// `Σ_k x_k · cols[k]`.
fn apply(cols: &[SVec], x: &SVec) -> SVec {
    let mut acc: BTreeMap<usize, CycScalar> = BTreeMap::new();
    for (k, c) in &x.0 {
        for (i, v) in &cols[*k].0 {
            let t = c * v;
            match acc.get_mut(i) {
                Some(e) => *e += &t,
                None => {
                    acc.insert(*i, t);
                }
            }
        }
    }
    SVec(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
}

#[derive(Debug, Clone, Default)]
struct Component {
    /// Basis words in decreasing lexicographic order.
    basis: Vec<Word>,
    /// `dj[k][j]`: coordinates of `D_j(basis_k)` in `B^{γ−e_j}`.
    dj: Vec<Vec<Option<SVec>>>,
    /// `lmul[i][k]`: coordinates of `x_i·basis_k` in `B^{γ+e_i}`, once that component exists.
    lmul: Vec<Option<Vec<SVec>>>,
}

/// Lazily computed graded pieces of a Nichols algebra.
pub struct NicholsEngine {
    b: BraidingMatrix,
    comps: HashMap<Vec<u32>, Component>,
}

fn total(d: &[u32]) -> u32 {
    d.iter().sum()
}

impl NicholsEngine {
    pub fn new(b: &BraidingMatrix) -> NicholsEngine {
        let t = b.theta();
        let mut comps = HashMap::new();
        comps
            .insert(vec![0; t], Component { basis: vec![Word::empty()], dj: vec![vec![None; t]], lmul: vec![None; t] });
        NicholsEngine { b: b.clone(), comps }
    }

    pub fn braiding(&self) -> &BraidingMatrix {
        &self.b
    }

    /// Number of components computed so far.
    pub fn computed_components(&self) -> usize {
        self.comps.len()
    }

    /// Builds every component below and at `deg`.
    pub fn ensure(&mut self, deg: &[u32]) -> Result<(), NicholsError> {
        if deg.len() != self.b.theta() {
            return Err(NicholsError::Domain("degree has the wrong length".into()));
        }
        let max = max_cap();
        if total(deg) > max {
            return Err(NicholsError::CapExceeded { requested: total(deg), max });
        }
        self.ensure_inner(deg);
        Ok(())
    }

    fn ensure_inner(&mut self, deg: &[u32]) {
        if self.comps.contains_key(deg) {
            return;
        }
        for i in 0..deg.len() {
            if deg[i] > 0 {
                let mut d = deg.to_vec();
                d[i] -= 1;
                self.ensure_inner(&d);
            }
        }
        self.build(deg);
    }

    fn build(&mut self, g: &[u32]) {
        let t = self.b.theta();
        let one = self.b.one();
        let minus = |i: usize| -> Vec<u32> {
            let mut d = g.to_vec();
            d[i] -= 1;
            d
        };
        // block layout of the target space ⊕_j B^{γ−e_j}
        let mut offsets = vec![0usize; t + 1];
        for j in 0..t {
            let dj = if g[j] > 0 { self.comps[&minus(j)].basis.len() } else { 0 };
            offsets[j + 1] = offsets[j] + dj;
        }
        let mut cands: Vec<(Word, usize, usize)> = Vec::new();
        for i in 0..t {
            if g[i] == 0 {
                continue;
            }
            for (kb, w) in self.comps[&minus(i)].basis.iter().enumerate() {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.push(i as u8);
                v.extend_from_slice(&w.0);
                cands.push((Word(v), i, kb));
            }
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0));

        let mut rows: Vec<(usize, SVec, SVec)> = Vec::new();
        let mut basis = Vec::new();
        let mut psis: Vec<SVec> = Vec::new();
        let mut lmul_cols: Vec<Vec<SVec>> = (0..t)
            .map(|i| if g[i] > 0 { vec![SVec::default(); self.comps[&minus(i)].basis.len()] } else { vec![] })
            .collect();

        for (word, i, kb) in cands {
            let delta = minus(i);
            let src = &self.comps[&delta];
            let mut psi: Vec<(usize, CycScalar)> = Vec::new();
            for j in 0..t {
                if g[j] == 0 {
                    continue;
                }
                let mut block = SVec::default();
                if delta[j] > 0 {
                    let mut eps = delta.clone();
                    eps[j] -= 1;
                    let cols = self.comps[&eps].lmul[i].as_ref().expect("left multiplication built with B^{γ-e_j}");
                    block = apply(cols, src.dj[kb][j].as_ref().expect("D_j recorded"));
                }
                if i == j {
                    let c = self.b.chi_deg(&Word::letter(i).degree(t), &delta);
                    block = block.axpy(&c, &SVec::unit(kb, one.clone()));
                }
                psi.extend(block.shifted(offsets[j]));
            }
            let psi = SVec(psi);
            // reduce
            let mut res = psi.clone();
            let mut comb = SVec::default();
            for (p, row, rc) in &rows {
                if let Some(l) = res.get(*p).cloned() {
                    res = res.axpy(&-&l, row);
                    comb = comb.axpy(&l, rc);
                }
            }
            if res.is_zero() {
                lmul_cols[i][kb] = comb;
            } else {
                let k = basis.len();
                basis.push(word);
                psis.push(psi);
                let (p, lead) = res.0[0].clone();
                let inv = lead.inv().expect("nonzero pivot");
                let rc = SVec::unit(k, one.clone()).axpy(&-&one, &comb).scale(&inv);
                rows.push((p, res.scale(&inv), rc));
                lmul_cols[i][kb] = SVec::unit(k, one.clone());
            }
        }
        let dj = psis
            .iter()
            .map(|psi| (0..t).map(|j| (g[j] > 0).then(|| psi.slice(offsets[j], offsets[j + 1]))).collect())
            .collect();
        for (i, cols) in lmul_cols.into_iter().enumerate() {
            if g[i] > 0 {
                self.comps.get_mut(&minus(i)).unwrap().lmul[i] = Some(cols);
            }
        }
        self.comps.insert(g.to_vec(), Component { basis, dj, lmul: vec![None; t] });
    }

    pub fn dim(&mut self, deg: &[u32]) -> Result<usize, NicholsError> {
        self.ensure(deg)?;
        Ok(self.comps[deg].basis.len())
    }

    /// Basis words of `B^deg` (decreasing lexicographic order).
    pub fn basis_words(&mut self, deg: &[u32]) -> Result<Vec<Word>, NicholsError> {
        self.ensure(deg)?;
        Ok(self.comps[deg].basis.clone())
    }

    /// Coordinates of the image of a homogeneous polynomial in `B^deg`.
    pub fn image(&mut self, p: &NcPoly, deg: &[u32]) -> Result<SVec, NicholsError> {
        self.ensure(deg)?;
        let t = self.b.theta();
        let mut memo: HashMap<Vec<u8>, SVec> = HashMap::new();
        let mut acc = SVec::default();
        for (w, c) in p.terms() {
            if w.degree(t) != deg {
                return Err(NicholsError::Domain("polynomial is not homogeneous of the given degree".into()));
            }
            let v = self.word_coords(&w.0, &mut memo);
            acc = acc.axpy(c, &v);
        }
        Ok(acc)
    }

    fn word_coords(&self, w: &[u8], memo: &mut HashMap<Vec<u8>, SVec>) -> SVec {
        if w.is_empty() {
            return SVec::unit(0, self.b.one());
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let t = self.b.theta();
        let tail = &w[1..];
        let tv = self.word_coords(tail, memo);
        let mut d = vec![0u32; t];
        for &l in tail {
            d[l as usize] += 1;
        }
        let v = if tv.is_zero() {
            tv
        } else {
            let cols = self.comps[&d].lmul[w[0] as usize].as_ref().expect("component built");
            apply(cols, &tv)
        };
        memo.insert(w.to_vec(), v.clone());
        v
    }

    /// Coordinates of a word in its component.
    pub fn coords_of_word(&mut self, w: &Word) -> Result<SVec, NicholsError> {
        let deg = w.degree(self.b.theta());
        self.ensure(&deg)?;
        Ok(self.word_coords(&w.0, &mut HashMap::new()))
    }

    /// Coordinates of `p^k` for homogeneous `p` of degree `deg`, multiplying on the left inside `𝔅(V)`.
    pub fn power_image(&mut self, p: &NcPoly, deg: &[u32], k: u32) -> Result<SVec, NicholsError> {
        if k == 0 {
            return Ok(SVec::unit(0, self.b.one()));
        }
        let top: Vec<u32> = deg.iter().map(|d| d * k).collect();
        self.ensure(&top)?;
        let mut v = self.image(p, deg)?;
        let mut cur = deg.to_vec();
        for _ in 1..k {
            if v.is_zero() {
                return Ok(v);
            }
            let mut acc = SVec::default();
            for (w, c) in p.terms() {
                let mut x = v.clone();
                let mut d = cur.clone();
                for &l in w.0.iter().rev() {
                    if x.is_zero() {
                        break;
                    }
                    let cols = self.comps[&d].lmul[l as usize].as_ref().expect("component built");
                    x = apply(cols, &x);
                    d[l as usize] += 1;
                }
                acc = acc.axpy(c, &x);
            }
            v = acc;
            for (c, d) in cur.iter_mut().zip(deg) {
                *c += d;
            }
        }
        Ok(v)
    }

    /// `p ∈ I(V)`, testing each homogeneous component.
    pub fn in_ideal(&mut self, p: &NcPoly) -> Result<bool, NicholsError> {
        let t = self.b.theta();
        for (deg, part) in p.homogeneous_components(t) {
            if total(&deg) == 0 {
                if !part.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            if !self.image(&part, &deg)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
