//! Defining relations of standard Nichols algebras and their semantic verification.

use serde::Serialize;

use crate::cyclotomic::{mult_order, Order};
use crate::freealgebra::{ad_pow, braided_commutator, hyperletter, BraidingMatrix, NcPoly};
use crate::weyl::{cartan_matrix, m_matrix, DEFAULT_CARTAN_CAP};
use crate::words::Word;

use super::dims::{pbw_product_prefix, root_heights};
use super::tables::generic_words;
use super::{max_cap, Height, NicholsEngine, NicholsError};

/// A relation `base^power`; `power = 1` except for root vector powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub label: String,
    pub degree: Vec<u32>,
    pub base: NcPoly,
    pub power: u32,
}

impl Relation {
    fn new(label: String, theta: usize, base: NcPoly) -> Relation {
        let degree = base.degree(theta).unwrap_or_else(|| vec![0; theta]);
        Relation { label, degree, base, power: 1 }
    }

    pub fn total_degree(&self) -> u32 {
        self.degree.iter().sum()
    }

    /// The relation expanded in `T(V)`.
    pub fn poly(&self, b: &BraidingMatrix) -> NcPoly {
        self.base.pow(b, self.power)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub label: String,
    pub degree: Vec<u32>,
    /// `None` when the degree is beyond the global cap.
    pub in_ideal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: Vec<u32>,
    pub engine: u64,
    pub pbw: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub cap: u32,
    pub relations: Vec<RelationCheck>,
    pub hilbert: Vec<HilbertRow>,
    pub relations_pass: bool,
    pub hilbert_match: bool,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.relations_pass && self.hilbert_match
    }
}

fn has_order(q: &crate::cyclotomic::CycScalar, n: u64) -> bool {
    matches!(mult_order(q), Ok(Order::Finite(m)) if m == n)
}

fn x(b: &BraidingMatrix, i: usize) -> NcPoly {
    NcPoly::letter(b, i)
}

fn br(b: &BraidingMatrix, u: &NcPoly, v: &NcPoly) -> NcPoly {
    braided_commutator(b, u, v)
}

/// Relations of a standard braiding of finite Cartan type, in the input numbering.
pub fn relations(b: &BraidingMatrix) -> Result<Vec<Relation>, NicholsError> {
    let t = b.theta();
    let heights = root_heights(b)?;
    let m = m_matrix(b, DEFAULT_CARTAN_CAP);
    let mm = |i: usize, j: usize| m[i][j].unwrap_or(0);
    let mut out = Vec::new();

    for i in 0..t {
        for j in 0..t {
            if i != j {
                let p = ad_pow(b, i, mm(i, j) + 1, j)?;
                out.push(Relation::new(format!("serre({},{})", i + 1, j + 1), t, p));
            }
        }
    }

    let words = generic_words(&cartan_matrix(b, DEFAULT_CARTAN_CAP)?)?;
    for (alpha, h) in &heights {
        if let Height::Finite(n) = h {
            let word = &words[alpha];
            let base = hyperletter(b, word)?;
            let degree: Vec<u32> = alpha.iter().map(|a| a * *n as u32).collect();
            out.push(Relation { label: format!("power[{word}]^{n}"), degree, base, power: *n as u32 });
        }
    }

    let minus_one = |k: usize| has_order(&b.q(k, k), 2);
    for k in 0..t {
        if !minus_one(k) {
            continue;
        }
        for j in 0..t {
            for l in j + 1..t {
                if j == k || l == k || mm(k, j) != 1 || mm(k, l) != 1 || mm(j, l) != 0 {
                    continue;
                }
                let jkl = br(b, &x(b, j), &br(b, &x(b, k), &x(b, l)));
                out.push(Relation::new(format!("relA({},{},{})", j + 1, k + 1, l + 1), t, br(b, &jkl, &x(b, k))));
            }
        }
    }

    for k in 0..t {
        for j in 0..t {
            if k == j || mm(j, k) != 1 {
                continue;
            }
            let extra = match mm(k, j) {
                2 => has_order(&b.q(k, k), 3) || minus_one(j),
                3 => has_order(&b.q(k, k), 4) || minus_one(j),
                _ => false,
            };
            if !extra {
                continue;
            }
            let kj = ad_pow(b, k, 1, j)?;
            let kkj = ad_pow(b, k, 2, j)?;
            if mm(k, j) == 2 {
                out.push(Relation::new(format!("relB({},{})", k + 1, j + 1), t, br(b, &kkj, &kj)));
                for l in 0..t {
                    if l == k || l == j || mm(j, l) != 1 || mm(k, l) != 0 {
                        continue;
                    }
                    let kkjl = br(b, &x(b, k), &br(b, &x(b, k), &ad_pow(b, j, 1, l)?));
                    out.push(Relation::new(format!("relB2({},{},{})", k + 1, j + 1, l + 1), t, br(b, &kkjl, &kj)));
                }
            } else {
                let kkkj = ad_pow(b, k, 3, j)?;
                // [x_k^2 x_j x_k x_j]_c = [[x_k^2 x_j]_c, [x_k x_j]_c]_c
                let top = br(b, &kkj, &kj);
                let g = [br(b, &kkkj, &kkj), br(b, &x(b, k), &top), br(b, &top, &kj), br(b, &kkj, &top)];
                for (n, p) in g.into_iter().enumerate() {
                    out.push(Relation::new(format!("G2{}({},{})", n + 1, k + 1, j + 1), t, p));
                }
            }
        }
    }
    Ok(out)
}

/// `true` iff the relation vanishes in `𝔅(V)`; `None` beyond the global cap.
pub fn relation_in_ideal(engine: &mut NicholsEngine, r: &Relation) -> Result<Option<bool>, NicholsError> {
    if r.total_degree() > max_cap() {
        return Ok(None);
    }
    let t = engine.braiding().theta();
    let base_deg = r.base.degree(t).unwrap_or_else(|| vec![0; t]);
    if r.base.is_zero() {
        return Ok(Some(true));
    }
    Ok(Some(engine.power_image(&r.base, &base_deg, r.power)?.is_zero()))
}

/// Checks every relation against `I(V)` and compares the Hilbert prefix with the PBW product.
pub fn verify_presentation(b: &BraidingMatrix, cap: u32) -> Result<PresentationReport, NicholsError> {
    let t = b.theta();
    let rels = relations(b)?;
    let mut engine = NicholsEngine::new(b);
    let mut checks = Vec::new();
    for r in &rels {
        let in_ideal = relation_in_ideal(&mut engine, r)?;
        checks.push(RelationCheck { label: r.label.clone(), degree: r.degree.clone(), in_ideal });
    }
    let pbw = pbw_product_prefix(t, &root_heights(b)?, cap)?;
    let ours = engine.hilbert_prefix(cap)?;
    let mut hilbert = Vec::new();
    for (d, &e) in &ours.dims {
        let p = pbw.get(d);
        if e != 0 || p != 0 {
            hilbert.push(HilbertRow { degree: d.clone(), engine: e, pbw: p });
        }
    }
    let relations_pass = checks.iter().all(|c| c.in_ideal != Some(false));
    let hilbert_match = hilbert.iter().all(|r| r.engine == r.pbw);
    Ok(PresentationReport { cap, relations: checks, hilbert, relations_pass, hilbert_match })
}

/// Lyndon word of a positive root of a standard braiding in its own letter order.
pub fn root_word(b: &BraidingMatrix, alpha: &[u32]) -> Result<Word, NicholsError> {
    let words = generic_words(&cartan_matrix(b, DEFAULT_CARTAN_CAP)?)?;
    words.get(alpha).cloned().ok_or_else(|| NicholsError::NotRoot(format!("{alpha:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nichols::in_ideal;

    fn check(b: &BraidingMatrix, cap: u32) -> PresentationReport {
        let rep = verify_presentation(b, cap).unwrap();
        for c in &rep.relations {
            assert_eq!(c.in_ideal, Some(true), "{}", c.label);
        }
        assert!(rep.hilbert_match);
        rep
    }

    #[test]
    fn a2_cartan_q3() {
        let b = BraidingMatrix::new(3, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let rep = check(&b, 8);
        assert_eq!(rep.hilbert.iter().map(|r| r.engine).sum::<u64>(), 27);
        assert_eq!(rep.relations.len(), 2 + 3);
    }

    #[test]
    fn c2_q_i_type_a() {
        // -1 — i^{-1} — i
        let b = BraidingMatrix::new(4, vec![vec![2, 1], vec![0, 3]]).unwrap();
        check(&b, 8);
    }

    #[test]
    fn a3_with_minus_one_middle() {
        // q = ζ_4: q — q⁻¹ — (-1) — q — q⁻¹ pattern on three vertices
        let b = BraidingMatrix::new(4, vec![vec![1, 3, 0], vec![0, 2, 1], vec![0, 0, 3]]).unwrap();
        let rels = relations(&b).unwrap();
        assert!(rels.iter().any(|r| r.label == "relA(1,2,3)"));
        check(&b, 6);
    }

    #[test]
    fn b2_relb_present() {
        // q11 ∈ G3, B(a)-like: ζ — q⁻¹ — q with q = i
        let b = BraidingMatrix::new(12, vec![vec![4, 9], vec![0, 3]]).unwrap();
        let rels = relations(&b).unwrap();
        let r = rels.iter().find(|r| r.label == "relB(1,2)").expect("relB emitted");
        assert!(in_ideal(&b, &r.poly(&b)).unwrap());
    }

    #[test]
    fn g2_bracket_of_x1_with_top_word_is_a_square() {
        // q = i: [x1, [x1²x2x1x2]] equals a nonzero multiple of [x1²x2]², so it is not a relation
        let b =
            crate::classify::cartan_braiding(crate::weyl::CartanKind::G, 2, crate::classify::RootOfUnity::new(4, 1));
        let rels = relations(&b).unwrap();
        let g22 = rels.iter().find(|r| r.label == "G22(1,2)").unwrap();
        assert!(!in_ideal(&b, &g22.base).unwrap());
        assert!(!crate::nichols::in_ideal_gram(&b, &g22.base));
        let sq = hyperletter(&b, &Word::from_letters(&[1, 1, 2])).unwrap().pow(&b, 2);
        let c = b.zeta_pow(3);
        assert!(in_ideal(&b, &g22.base.sub(&sq.scale(&c))).unwrap());
        for label in ["G21(1,2)", "G23(1,2)", "G24(1,2)"] {
            let r = rels.iter().find(|r| r.label == label).unwrap();
            assert!(in_ideal(&b, &r.base).unwrap(), "{label}");
        }
    }
}
