//! Nichols algebras of diagonal type: graded dimensions, ideal membership, PBW data,
//! dimension formulas, relations and coproduct identities.

mod coproducts;
mod dims;
mod engine;
mod gram;
mod relations;
mod tables;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU32, Ordering};

use serde::{Serialize, Serializer};

use crate::cyclotomic::{mult_order, CycScalar, Order};
use crate::freealgebra::{AlgebraError, BraidingMatrix, NcPoly};
use crate::weyl::WeylError;
use crate::words::{is_lyndon, Word};

pub use coproducts::{coproduct_identities_check, CoproductCase, CoproductReport};
pub use dims::{closed_formula_dim, dim_nichols, pbw_product_prefix, root_heights, Dimension};
pub use engine::{NicholsEngine, SVec};
pub use gram::{gram_matrix, gram_rank, in_ideal_gram, rank, word_pairing};
pub use relations::{
    relation_in_ideal, relations, root_word, verify_presentation, HilbertRow, PresentationReport, Relation,
    RelationCheck,
};
pub use tables::{e_type_words, generic_words, lyndon_word_for_root, table_words};

/// Default total-degree cap for Hilbert prefixes and PBW extraction.
pub const DEFAULT_CAP: u32 = 10;

static MAX_CAP: AtomicU32 = AtomicU32::new(0);

/// Largest total degree any computation may reach; `NICHOLS_MAX_CAP` overrides the default 64.
pub fn max_cap() -> u32 {
    let v = MAX_CAP.load(Ordering::Relaxed);
    if v != 0 {
        return v;
    }
    let v = std::env::var("NICHOLS_MAX_CAP").ok().and_then(|s| s.trim().parse().ok()).filter(|&c| c > 0).unwrap_or(64);
    MAX_CAP.store(v, Ordering::Relaxed);
    v
}

pub fn set_max_cap(cap: u32) {
    MAX_CAP.store(cap.max(1), Ordering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NicholsError {
    #[error("cap exceeded: total degree {requested} > {max}")]
    CapExceeded { requested: u32, max: u32 },
    #[error("not standard: {0}")]
    NotStandard(String),
    #[error("{0} is not a positive root")]
    NotRoot(String),
    #[error("outside formula validity: {0}")]
    Formula(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Height of a PBW generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Height {
    Finite(u64),
    Infinite,
}

impl Height {
    pub fn from_q(q: &CycScalar) -> Height {
        match mult_order(q) {
            Ok(Order::Finite(n)) => Height::Finite(n),
            _ => Height::Infinite,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Height::Finite(n) => Some(n),
            Height::Infinite => None,
        }
    }
}

impl Serialize for Height {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Height::Finite(n) => s.serialize_u64(*n),
            Height::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub alpha: Vec<u32>,
    pub lyndon: Word,
    pub q_alpha: CycScalar,
    pub height: Height,
}

impl RootDatum {
    pub fn new(b: &BraidingMatrix, lyndon: Word) -> RootDatum {
        let alpha = lyndon.degree(b.theta());
        let q_alpha = b.chi_deg(&alpha, &alpha);
        let height = Height::from_q(&q_alpha);
        RootDatum { alpha, lyndon, q_alpha, height }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPrefix {
    pub cap: u32,
    pub dims: BTreeMap<Vec<u32>, u64>,
}

impl HilbertPrefix {
    pub fn get(&self, deg: &[u32]) -> u64 {
        self.dims.get(deg).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

impl Serialize for HilbertPrefix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            degree: &'a [u32],
            dim: u64,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            cap: u32,
            dims: Vec<Entry<'a>>,
        }
        let dims = self.dims.iter().filter(|(_, &d)| d > 0).map(|(k, &d)| Entry { degree: k, dim: d }).collect();
        Out { cap: self.cap, dims }.serialize(s)
    }
}

/// All degrees `d ≤ bound` componentwise, by increasing total degree.
pub(crate) fn degrees_in_box(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in bound {
        out = out.into_iter().flat_map(|d: Vec<u32>| (0..=m).map(move |i| [d.clone(), vec![i]].concat())).collect();
    }
    out.sort_by_key(|d| d.iter().sum::<u32>());
    out
}

/// All degrees in `N^θ` of total degree at most `cap`.
pub fn degrees_up_to(theta: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; theta];
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[k] = v;
            rec(k + 1, left - v, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, cap, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then(a.cmp(b)));
    out
}

fn check_cap(cap: u32) -> Result<(), NicholsError> {
    let max = max_cap();
    if cap > max {
        return Err(NicholsError::CapExceeded { requested: cap, max });
    }
    Ok(())
}

/// `p ∈ I(V)`.
pub fn in_ideal(b: &BraidingMatrix, p: &NcPoly) -> Result<bool, NicholsError> {
    NicholsEngine::new(b).in_ideal(p)
}

/// `dim 𝔅(V)^α` with the default cap.
pub fn component_dim(b: &BraidingMatrix, alpha: &[u32]) -> Result<usize, NicholsError> {
    component_dim_with_cap(b, alpha, DEFAULT_CAP)
}

pub fn component_dim_with_cap(b: &BraidingMatrix, alpha: &[u32], cap: u32) -> Result<usize, NicholsError> {
    check_cap(cap)?;
    let d = alpha.iter().sum::<u32>();
    if d > cap {
        return Err(NicholsError::CapExceeded { requested: d, max: cap });
    }
    NicholsEngine::new(b).dim(alpha)
}

impl NicholsEngine {
    pub fn hilbert_prefix(&mut self, cap: u32) -> Result<HilbertPrefix, NicholsError> {
        check_cap(cap)?;
        let mut dims = BTreeMap::new();
        for d in degrees_up_to(self.braiding().theta(), cap) {
            let v = self.dim(&d)? as u64;
            dims.insert(d, v);
        }
        Ok(HilbertPrefix { cap, dims })
    }

    /// Lyndon words among the basis words, with their root data.
    pub fn pbw_generators(&mut self, cap: u32) -> Result<Vec<RootDatum>, NicholsError> {
        check_cap(cap)?;
        let b = self.braiding().clone();
        let mut out = Vec::new();
        for d in degrees_up_to(b.theta(), cap) {
            if d.iter().all(|&x| x == 0) {
                continue;
            }
            for w in self.basis_words(&d)? {
                if is_lyndon(&w).unwrap_or(false) {
                    out.push(RootDatum::new(&b, w));
                }
            }
        }
        out.sort_by(|a, b| a.lyndon.cmp(&b.lyndon));
        Ok(out)
    }

    /// Smallest `h ≥ 1` with `u^h` not a basis word, if reached within `cap`.
    pub fn observed_height(&mut self, u: &Word, cap: u32) -> Result<Option<u64>, NicholsError> {
        let t = self.braiding().theta();
        let mut h = 1u64;
        loop {
            let p = u.pow(h as usize);
            if p.len() as u32 > cap {
                return Ok(None);
            }
            let basis = self.basis_words(&p.degree(t))?;
            if !basis.contains(&p) {
                return Ok(Some(h));
            }
            h += 1;
        }
    }
}

pub fn hilbert_prefix(b: &BraidingMatrix, cap: u32) -> Result<HilbertPrefix, NicholsError> {
    NicholsEngine::new(b).hilbert_prefix(cap)
}

pub fn pbw_generators(b: &BraidingMatrix, cap: u32) -> Result<Vec<RootDatum>, NicholsError> {
    NicholsEngine::new(b).pbw_generators(cap)
}
