//! Generalized Dynkin diagrams and the standard families of types A, B and G₂.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycScalar;
use crate::freealgebra::BraidingMatrix;
use crate::weyl::{
    cartan_matrix, diagram_key, finite_type, is_standard, CartanKind, FiniteComponent, FiniteType, DEFAULT_CARTAN_CAP,
};

/// Orbit cap used when classifying.
pub const CLASSIFY_ORBIT_CAP: usize = 200;

/// A root of unity `exp(2πi·exponent/conductor)` with coprime parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub conductor: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    pub fn new(n: u32, k: i64) -> RootOfUnity {
        let k = k.rem_euclid(n as i64) as u32;
        let g = k.gcd(&n);
        RootOfUnity { conductor: n / g, exponent: k / g }
    }

    pub fn order(&self) -> u32 {
        self.conductor
    }

    pub fn to_scalar(&self) -> CycScalar {
        CycScalar::root_of_unity(self.conductor, self.exponent as i64).expect("valid root")
    }

    /// Exponent over a conductor divisible by the order.
    pub fn exponent_over(&self, n: u32) -> u32 {
        debug_assert_eq!(n % self.conductor, 0);
        self.exponent * (n / self.conductor)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.conductor, -(self.exponent as i64))
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        RootOfUnity::new(self.conductor, self.exponent as i64 * k)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.conductor, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "z{n}"),
            (n, k) => write!(f, "z{n}^{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum G2Variant {
    I,
    Ii,
    Iii,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum StandardClass {
    Cartan {
        kind: CartanKind,
        theta: usize,
        q: RootOfUnity,
    },
    TypeA {
        theta: usize,
        q: RootOfUnity,
        i_list: Vec<usize>,
    },
    #[serde(rename = "TypeB_a")]
    TypeBa {
        zeta: RootOfUnity,
        q: RootOfUnity,
    },
    #[serde(rename = "TypeB_b")]
    TypeBb {
        theta: usize,
        q: RootOfUnity,
        i_list: Vec<usize>,
    },
    #[serde(rename = "TypeB_c")]
    TypeBc {
        theta: usize,
        zeta: RootOfUnity,
        i_list: Vec<usize>,
    },
    #[serde(rename = "G2_a")]
    G2a {
        q: RootOfUnity,
    },
    #[serde(rename = "G2_b")]
    G2b {
        zeta: RootOfUnity,
        variant: G2Variant,
    },
    NotStandard {
        reason: String,
    },
    Disconnected {
        components: Vec<Classification>,
    },
}

impl StandardClass {
    pub fn is_standard(&self) -> bool {
        match self {
            StandardClass::NotStandard { .. } => false,
            StandardClass::Disconnected { components } => components.iter().all(|c| c.class.is_standard()),
            _ => true,
        }
    }

    /// Underlying finite Cartan type, for connected classes.
    pub fn cartan_kind(&self) -> Option<(CartanKind, usize)> {
        match self {
            StandardClass::Cartan { kind, theta, .. } => Some((*kind, *theta)),
            StandardClass::TypeA { theta, .. } => Some((CartanKind::A, *theta)),
            StandardClass::TypeBa { .. } => Some((CartanKind::B, 2)),
            StandardClass::TypeBb { theta, .. } | StandardClass::TypeBc { theta, .. } => Some((CartanKind::B, *theta)),
            StandardClass::G2a { .. } | StandardClass::G2b { .. } => Some((CartanKind::G, 2)),
            _ => None,
        }
    }

    /// Family label used in reports.
    pub fn family(&self) -> &'static str {
        match self {
            StandardClass::Cartan { .. } => "Cartan",
            StandardClass::TypeA { .. } => "TypeA",
            StandardClass::TypeBa { .. } => "TypeB_a",
            StandardClass::TypeBb { .. } => "TypeB_b",
            StandardClass::TypeBc { .. } => "TypeB_c",
            StandardClass::G2a { .. } => "G2_a",
            StandardClass::G2b { .. } => "G2_b",
            StandardClass::NotStandard { .. } => "NotStandard",
            StandardClass::Disconnected { .. } => "Disconnected",
        }
    }

    /// Braiding in standard numbering (symmetric, minimal conductor).
    pub fn braiding(&self) -> Option<BraidingMatrix> {
        if let StandardClass::Cartan { kind, theta, q } = self {
            return Some(cartan_braiding(*kind, *theta, *q));
        }
        Some(self.chain_diagram()?.symmetric_braiding())
    }

    fn chain_diagram(&self) -> Option<ChainDiagram> {
        match self {
            StandardClass::TypeA { theta, q, i_list } => {
                let n = lcm_all(&[q.order(), if i_list.is_empty() { 1 } else { 2 }]);
                chain_a(n, q.exponent_over(n), i_list, *theta)
            }
            StandardClass::TypeBb { theta, q, i_list } => {
                let n = lcm_all(&[q.order(), 2]);
                let qe = q.exponent_over(n);
                family_b_tail(n, 2 * qe, n - (2 * qe) % n, qe, i_list, *theta)
            }
            StandardClass::TypeBc { theta, zeta, i_list } => {
                let n = lcm_all(&[zeta.order(), 2]);
                let z = zeta.exponent_over(n);
                let h = n / 2;
                let chain_q = (h + n - z) % n;
                family_b_tail(n, chain_q, (h + z) % n, z, i_list, *theta)
            }
            StandardClass::TypeBa { zeta, q } => {
                let n = lcm_all(&[zeta.order(), q.order()]);
                let (z, qe) = (zeta.exponent_over(n), q.exponent_over(n));
                Some(ChainDiagram { n, labels: vec![z, qe], edges: vec![(n - qe) % n] })
            }
            StandardClass::G2a { q } => {
                let n = q.order();
                let qe = q.exponent_over(n);
                Some(ChainDiagram { n, labels: vec![qe, 3 * qe % n], edges: vec![(n - 3 * qe % n) % n] })
            }
            StandardClass::G2b { zeta, variant } => {
                let n = 8;
                let z = zeta.exponent_over(8);
                let (l0, e, l1) = match variant {
                    G2Variant::I => (2 * z, z, 7 * z),
                    G2Variant::Ii => (2 * z, 3 * z, 4),
                    G2Variant::Iii => (z, 5 * z, 4),
                };
                Some(ChainDiagram { n, labels: vec![l0 % 8, l1 % 8], edges: vec![e % 8] })
            }
            _ => None,
        }
    }
}

impl fmt::Display for StandardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            StandardClass::Cartan { kind, theta, q } => write!(f, "Cartan {kind:?}{theta}, q={q}"),
            StandardClass::TypeA { theta, q, i_list } => write!(f, "C({theta},{q};{})", list(i_list)),
            StandardClass::TypeBa { zeta, q } => write!(f, "B2(a) zeta={zeta}, q={q}"),
            StandardClass::TypeBb { theta, q, i_list } => {
                write!(f, "B{theta}(b) q={q}, i=[{}]", list(i_list))
            }
            StandardClass::TypeBc { theta, zeta, i_list } => {
                write!(f, "B{theta}(c) zeta={zeta}, i=[{}]", list(i_list))
            }
            StandardClass::G2a { q } => write!(f, "G2(a) q={q}"),
            StandardClass::G2b { zeta, variant } => write!(f, "G2(b)({variant:?}) zeta={zeta}"),
            StandardClass::NotStandard { reason } => write!(f, "not standard: {reason}"),
            StandardClass::Disconnected { components } => {
                let parts: Vec<String> = components.iter().map(|c| c.class.to_string()).collect();
                write!(f, "disconnected: {}", parts.join(" | "))
            }
        }
    }
}

/// A class together with its vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub class: StandardClass,
    /// `vertices[k]` is the input vertex (zero-based) of standard vertex `k + 1`.
    pub vertices: Vec<usize>,
}

/// Labels `q_ii` and edges `q_ij q_ji ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynkinDiagram {
    pub vertex_labels: Vec<CycScalar>,
    pub edge_labels: Vec<(usize, usize, CycScalar)>,
}

pub fn dynkin_diagram(b: &BraidingMatrix) -> DynkinDiagram {
    let t = b.theta();
    let vertex_labels = (0..t).map(|i| b.q(i, i)).collect();
    let mut edge_labels = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let p = b.zeta_pow(b.exp(i, j) as i64 + b.exp(j, i) as i64);
            if !p.is_one() {
                edge_labels.push((i, j, p));
            }
        }
    }
    DynkinDiagram { vertex_labels, edge_labels }
}

/// Same generalized Dynkin diagram under the identity vertex correspondence.
pub fn twist_equivalent(b1: &BraidingMatrix, b2: &BraidingMatrix) -> bool {
    if b1.theta() != b2.theta() {
        return false;
    }
    let l = b1.conductor().lcm(&b2.conductor());
    let (x, y) = (b1.with_conductor(l).unwrap(), b2.with_conductor(l).unwrap());
    diagram_key(&x) == diagram_key(&y)
}

/// Rewrites `b` over the smallest conductor containing all its entries.
pub fn reduce_conductor(b: &BraidingMatrix) -> BraidingMatrix {
    let n = b.conductor();
    let mut g = n;
    for row in b.exps() {
        for &k in row {
            g = g.gcd(&k);
        }
    }
    let exps = b.exps().iter().map(|r| r.iter().map(|&k| (k / g) as i64).collect()).collect();
    BraidingMatrix::new(n / g, exps).expect("divisor conductor")
}

fn lcm_all(v: &[u32]) -> u32 {
    v.iter().fold(1, |a, &b| a.lcm(&b))
}

/// A chain diagram in exponent form over `ζ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ChainDiagram {
    n: u32,
    labels: Vec<u32>,
    edges: Vec<u32>,
}

impl ChainDiagram {
    fn rescale(&self, m: u32) -> ChainDiagram {
        let f = m / self.n;
        ChainDiagram {
            n: m,
            labels: self.labels.iter().map(|x| x * f).collect(),
            edges: self.edges.iter().map(|x| x * f).collect(),
        }
    }

    fn reversed(&self) -> ChainDiagram {
        let mut c = self.clone();
        c.labels.reverse();
        c.edges.reverse();
        c
    }

    fn symmetric_braiding(&self) -> BraidingMatrix {
        let t = self.labels.len();
        let odd_edge = self.edges.iter().any(|e| e % 2 == 1);
        let d = if self.n % 2 == 0 && odd_edge { self.rescale(2 * self.n) } else { self.clone() };
        let n = d.n as i64;
        let half = |e: u32| -> i64 {
            if e % 2 == 0 {
                (e / 2) as i64
            } else if n % 2 == 1 {
                (e as i64 * ((n + 1) / 2)) % n
            } else {
                e as i64
            }
        };
        let mut exps = vec![vec![0i64; t]; t];
        if d.n == 2 * self.n && odd_edge {
            // edge exponents were doubled by rescale; halve back to the square root
            for k in 0..t - 1 {
                let e = self.edges[k] as i64;
                exps[k][k + 1] = e;
                exps[k + 1][k] = e;
            }
        } else {
            for k in 0..t - 1 {
                let e = half(d.edges[k]);
                exps[k][k + 1] = e;
                exps[k + 1][k] = e;
            }
        }
        for k in 0..t {
            exps[k][k] = d.labels[k] as i64;
        }
        reduce_conductor(&BraidingMatrix::new(d.n, exps).expect("valid chain"))
    }

    fn from_braiding(b: &BraidingMatrix) -> ChainDiagram {
        let t = b.theta();
        let n = b.conductor();
        ChainDiagram {
            n,
            labels: (0..t).map(|i| b.exp(i, i)).collect(),
            edges: (0..t.saturating_sub(1)).map(|k| (b.exp(k, k + 1) + b.exp(k + 1, k)) % n).collect(),
        }
    }
}

/// `C(θ, q; I)` over `ζ_n` with `q = ζ_n^{qe}`; `None` if `−1` is not available.
fn chain_a(n: u32, qe: u32, i_list: &[usize], theta: usize) -> Option<ChainDiagram> {
    let neg = if n % 2 == 0 { Some(n / 2) } else { None };
    let inv = |x: u32| (n - x % n) % n;
    let in_i = |k: usize| i_list.contains(&k);
    if theta == 1 {
        let l = if in_i(1) { neg? } else { qe % n };
        return Some(ChainDiagram { n, labels: vec![l], edges: vec![] });
    }
    let mut edges = vec![0u32; theta - 1];
    edges[theta - 2] = if in_i(theta) { qe % n } else { inv(qe) };
    for k in (2..theta).rev() {
        // edge k-1 joins vertices k-1, k (1-based), edges[k-2]
        edges[k - 2] = if in_i(k) { inv(edges[k - 1]) } else { edges[k - 1] };
    }
    let mut labels = vec![0u32; theta];
    for k in 1..=theta {
        labels[k - 1] = if in_i(k) {
            neg?
        } else {
            let adj = if k < theta { edges[k - 1] } else { edges[theta - 2] };
            inv(adj)
        };
    }
    Some(ChainDiagram { n, labels, edges })
}

/// `C(θ−1, chain_q; I) — edge — tail`, returned in standard numbering (tail first).
fn family_b_tail(n: u32, chain_q: u32, edge: u32, tail: u32, i_list: &[usize], theta: usize) -> Option<ChainDiagram> {
    let c = chain_a(n, chain_q % n, i_list, theta - 1)?;
    let mut labels = c.labels;
    labels.push(tail % n);
    let mut edges = c.edges;
    edges.push(edge % n);
    Some(ChainDiagram { n, labels, edges }.reversed())
}

/// Symmetric Cartan-type braiding `q_ij = q^{d_i a_ij / 2}`, `q_ii = q^{d_i}`.
pub fn cartan_braiding(kind: CartanKind, theta: usize, q: RootOfUnity) -> BraidingMatrix {
    let c = crate::weyl::standard_cartan(kind, theta);
    let n = 2 * q.order();
    let qe = q.exponent_over(n) as i64;
    // d_i = 1 on short vertices
    let d: Vec<i64> = (0..theta)
        .map(|i| match kind {
            CartanKind::B if i > 0 => 2,
            CartanKind::C if i == theta - 1 => 2,
            CartanKind::F if i < 2 => 2,
            CartanKind::G if i == 1 => 3,
            _ => 1,
        })
        .collect();
    let exps = (0..theta).map(|i| (0..theta).map(|j| d[i] * c.a[i][j] * qe / 2).collect()).collect();
    reduce_conductor(&BraidingMatrix::new(n, exps).expect("valid Cartan braiding"))
}

fn is_cartan_type(b: &BraidingMatrix, m: &[Vec<u32>]) -> bool {
    let t = b.theta();
    let n = b.conductor() as u64;
    (0..t).all(|i| {
        (0..t)
            .all(|j| i == j || (m[i][j] as u64 * b.exp(i, i) as u64 + b.exp(i, j) as u64 + b.exp(j, i) as u64) % n == 0)
    })
}

fn subsets(max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << max) {
        out.push((1..=max).filter(|k| mask & (1 << (k - 1)) != 0).collect());
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn connected_components(b: &BraidingMatrix) -> Vec<Vec<usize>> {
    let t = b.theta();
    let n = b.conductor();
    let adj = |i: usize, j: usize| i != j && (b.exp(i, j) + b.exp(j, i)) % n != 0;
    let mut seen = vec![false; t];
    let mut out = Vec::new();
    for s in 0..t {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..t {
                if !seen[w] && adj(v, w) {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Family of a standard braiding.
pub fn classify_standard(b: &BraidingMatrix) -> StandardClass {
    classify(b).class
}

/// Classification with the vertex numbering.
pub fn classify(b: &BraidingMatrix) -> Classification {
    let comps = connected_components(b);
    if comps.len() > 1 {
        let components = comps
            .iter()
            .map(|c| {
                let sub = classify(&b.restrict(c));
                Classification { class: sub.class, vertices: sub.vertices.iter().map(|&v| c[v]).collect() }
            })
            .collect();
        return Classification {
            class: StandardClass::Disconnected { components },
            vertices: (0..b.theta()).collect(),
        };
    }
    let not = |reason: String| Classification {
        class: StandardClass::NotStandard { reason },
        vertices: (0..b.theta()).collect(),
    };
    match is_standard(b, CLASSIFY_ORBIT_CAP) {
        Ok(r) if r.standard => {}
        Ok(r) => return not(r.reason.unwrap_or_else(|| "orbit check failed".into())),
        Err(e) => return not(e.to_string()),
    }
    let c = match cartan_matrix(b, DEFAULT_CARTAN_CAP) {
        Ok(c) => c,
        Err(e) => return not(e.to_string()),
    };
    let comp = match finite_type(&c) {
        FiniteType::Finite { mut components } => components.remove(0),
        FiniteType::NotFinite => return not("Cartan matrix not of finite type".into()),
    };
    let class = recognize(b, &comp)
        .unwrap_or_else(|| StandardClass::NotStandard { reason: format!("no {comp} family matches the diagram") });
    Classification { class, vertices: comp.vertices }
}

fn recognize(b: &BraidingMatrix, comp: &FiniteComponent) -> Option<StandardClass> {
    let sb = b.permuted(&comp.vertices);
    let t = sb.theta();
    let m: Vec<Vec<u32>> = (0..t)
        .map(|i| (0..t).map(|j| crate::weyl::cartan_entry(&sb, i, j, DEFAULT_CARTAN_CAP).unwrap()).collect())
        .collect();
    let n = sb.conductor();
    let root = |k: u32| RootOfUnity::new(n, k as i64);
    if is_cartan_type(&sb, &m) {
        let short = match comp.kind {
            CartanKind::F => 2,
            _ => 0,
        };
        let q = root(sb.exp(short, short));
        if comp.kind == CartanKind::G {
            return Some(StandardClass::G2a { q });
        }
        return Some(StandardClass::Cartan { kind: comp.kind, theta: t, q });
    }
    let d = ChainDiagram::from_braiding(&sb);
    let inv = |x: u32| (n - x % n) % n;
    let neg = if n % 2 == 0 { Some(n / 2) } else { None };
    let minus_ones = |labels: &[u32]| -> Vec<usize> {
        labels.iter().enumerate().filter(|(_, &l)| Some(l) == neg).map(|(k, _)| k + 1).collect()
    };
    match comp.kind {
        CartanKind::A => {
            let qe = if t == 1 { d.labels[0] } else { (d.edges[t - 2] + 2 * d.labels[t - 1]) % n };
            let i_list = minus_ones(&d.labels);
            (chain_a(n, qe, &i_list, t)? == d).then(|| StandardClass::TypeA { theta: t, q: root(qe), i_list })
        }
        CartanKind::B => {
            let p = d.reversed();
            let tail = p.labels[t - 1];
            let edge = p.edges[t - 2];
            let chain_i = minus_ones(&p.labels[..t - 1]);
            // (b)
            if edge == inv(2 * tail) {
                if let Some(c) = family_b_tail(n, 2 * tail, edge, tail, &chain_i, t) {
                    if c == d {
                        return Some(StandardClass::TypeBb { theta: t, q: root(tail), i_list: chain_i });
                    }
                }
            }
            // (c)
            if root(tail).order() == 3 {
                if let Some(h) = neg {
                    if edge == (h + tail) % n {
                        let chain_q = (h + inv(tail)) % n;
                        if let Some(c) = family_b_tail(n, chain_q, edge, tail, &chain_i, t) {
                            if c == d {
                                return Some(StandardClass::TypeBc { theta: t, zeta: root(tail), i_list: chain_i });
                            }
                        }
                    }
                }
            }
            // (a), standard numbering
            if t == 2 {
                let (z, qe) = (d.labels[0], d.labels[1]);
                if root(z).order() == 3 && root(qe).order() >= 4 && d.edges[0] == inv(qe) {
                    return Some(StandardClass::TypeBa { zeta: root(z), q: root(qe) });
                }
            }
            None
        }
        CartanKind::G => {
            if n % 8 != 0 {
                return None;
            }
            let f = n / 8;
            let (l0, e) = (d.labels[0], d.edges[0]);
            let cands = [(G2Variant::I, e), (G2Variant::Ii, 3 * e % n), (G2Variant::Iii, l0)];
            for (variant, z) in cands {
                if z % f != 0 || root(z).order() != 8 {
                    continue;
                }
                let zeta = root(z);
                let want = StandardClass::G2b { zeta, variant }.chain_diagram()?.rescale(n);
                if want == d {
                    return Some(StandardClass::G2b { zeta, variant });
                }
            }
            None
        }
        _ => None,
    }
}

/// Family selector for `enumerate_standard`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyType {
    A,
    B,
    G,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumeratedBraiding {
    pub class: StandardClass,
    pub braiding: BraidingMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct Enumeration {
    pub items: Vec<EnumeratedBraiding>,
    pub diagnostic: Option<String>,
}

fn primitive_exponents(n: u32) -> Vec<u32> {
    (1..=n).filter(|&k| k.gcd(&n) == 1).map(|k| k % n).collect()
}

/// Representatives of the standard families of the given type, rank and parameter order `n`.
pub fn enumerate_standard(ty: FamilyType, theta: usize, n: u32) -> Enumeration {
    let mut classes = Vec::new();
    let mut diag = None;
    let qs: Vec<RootOfUnity> = primitive_exponents(n).into_iter().map(|k| RootOfUnity::new(n, k as i64)).collect();
    let g3 = [RootOfUnity::new(3, 1), RootOfUnity::new(3, 2)];
    match ty {
        FamilyType::A => {
            if n < 2 || theta == 0 {
                diag = Some("type A needs q != 1".to_string());
            } else {
                for &q in &qs {
                    for i_list in subsets(theta) {
                        classes.push(StandardClass::TypeA { theta, q, i_list });
                    }
                }
            }
        }
        FamilyType::B => {
            if theta < 2 {
                diag = Some("type B needs theta >= 2".to_string());
            } else {
                if n >= 3 {
                    for &q in &qs {
                        for i_list in subsets(theta - 1) {
                            classes.push(StandardClass::TypeBb { theta, q, i_list });
                        }
                    }
                }
                if n == 3 {
                    for &zeta in &g3 {
                        for i_list in subsets(theta - 1) {
                            classes.push(StandardClass::TypeBc { theta, zeta, i_list });
                        }
                    }
                }
                if theta == 2 && n >= 4 {
                    for &zeta in &g3 {
                        for &q in &qs {
                            classes.push(StandardClass::TypeBa { zeta, q });
                        }
                    }
                }
                if classes.is_empty() {
                    diag = Some(format!("no type B family with parameter order {n}"));
                }
            }
        }
        FamilyType::G => {
            if theta != 2 {
                diag = Some("type G needs theta = 2".to_string());
            } else {
                if n >= 4 {
                    for &q in &qs {
                        classes.push(StandardClass::G2a { q });
                    }
                }
                if n == 8 {
                    for variant in [G2Variant::I, G2Variant::Ii, G2Variant::Iii] {
                        for &zeta in &qs {
                            classes.push(StandardClass::G2b { zeta, variant });
                        }
                    }
                }
                if classes.is_empty() {
                    diag = Some(format!("ord q = {n} is below 4"));
                }
            }
        }
    }
    let mut seen = HashSet::new();
    let mut items = Vec::new();
    for class in classes {
        let Some(br) = class.braiding() else { continue };
        if !seen.insert(diagram_key(&br)) {
            continue;
        }
        match is_standard(&br, CLASSIFY_ORBIT_CAP) {
            Ok(r) if r.standard => items.push(EnumeratedBraiding { class, braiding: br }),
            _ => {}
        }
    }
    if items.is_empty() && diag.is_none() {
        diag = Some("no standard braiding survives".into());
    }
    Enumeration { items, diagnostic: diag }
}

/// Normal form of a class for comparison: Cartan members of A/B families collapse to `Cartan`.
pub fn normalize(class: &StandardClass) -> StandardClass {
    match class.braiding() {
        Some(b) => classify_standard(&b),
        None => class.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(n: u32, e: Vec<Vec<i64>>) -> BraidingMatrix {
        BraidingMatrix::new(n, e).unwrap()
    }

    #[test]
    fn twist_examples() {
        let b = br(7, vec![vec![1, 2], vec![5, 3]]);
        let c = br(7, vec![vec![1, 5], vec![2, 3]]);
        assert!(twist_equivalent(&b, &c));
        let s = br(14, vec![vec![2, 7], vec![7, 6]]);
        assert!(twist_equivalent(&b, &s));
        let a = StandardClass::TypeA { theta: 2, q: RootOfUnity::new(5, 1), i_list: vec![] }.braiding().unwrap();
        let a1 = StandardClass::TypeA { theta: 2, q: RootOfUnity::new(5, 1), i_list: vec![1] }.braiding().unwrap();
        assert!(!twist_equivalent(&a, &a1));
    }

    #[test]
    fn chain_a_matches_diagram_rules() {
        // C(2,q;1): -1 — q^{-1} — q
        let c = chain_a(10, 2, &[1], 2).unwrap();
        assert_eq!(c.labels, vec![5, 2]);
        assert_eq!(c.edges, vec![8]);
        // invariant q = e·l^2
        for i_list in subsets(3) {
            let c = chain_a(12, 1, &i_list, 3).unwrap();
            assert_eq!((c.edges[1] + 2 * c.labels[2]) % 12, 1, "{i_list:?}");
        }
    }

    #[test]
    fn classify_examples() {
        let a3 = br(5, vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]]);
        assert_eq!(
            classify_standard(&a3),
            StandardClass::Cartan { kind: CartanKind::A, theta: 3, q: RootOfUnity::new(5, 1) }
        );
        // zeta — q^{-1} — q, ord q = 7
        let ba = br(21, vec![vec![7, -3], vec![0, 3]]);
        assert_eq!(
            classify_standard(&ba),
            StandardClass::TypeBa { zeta: RootOfUnity::new(3, 1), q: RootOfUnity::new(7, 1) }
        );
        let g = br(8, vec![vec![2, 1], vec![0, 7]]);
        assert_eq!(classify_standard(&g), StandardClass::G2b { zeta: RootOfUnity::new(8, 1), variant: G2Variant::I });
        // G2 Cartan data with q of order 3 collapses: q^3 = 1
        let g3 = br(3, vec![vec![1, -3], vec![0, 3]]);
        assert_eq!(crate::weyl::cartan_entry(&g3, 0, 1, 8), Some(0));
        assert!(matches!(classify_standard(&g3), StandardClass::Disconnected { .. }));
    }

    #[test]
    fn disconnected_diagonal() {
        let b = br(5, vec![vec![1, 0], vec![0, 2]]);
        match classify_standard(&b) {
            StandardClass::Disconnected { components } => assert_eq!(components.len(), 2),
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn enumeration_round_trips() {
        for (ty, theta, n) in [
            (FamilyType::A, 2, 4),
            (FamilyType::A, 3, 3),
            (FamilyType::B, 2, 4),
            (FamilyType::B, 2, 3),
            (FamilyType::B, 3, 5),
            (FamilyType::G, 2, 5),
            (FamilyType::G, 2, 8),
        ] {
            let e = enumerate_standard(ty, theta, n);
            assert!(!e.items.is_empty(), "{ty:?} {theta} {n}");
            for it in &e.items {
                let got = classify_standard(&it.braiding);
                assert!(got.is_standard(), "{} -> {got}", it.class);
                assert_eq!(normalize(&it.class), got);
                let k = got.cartan_kind().unwrap();
                assert_eq!(k, it.class.cartan_kind().unwrap());
            }
        }
    }

    #[test]
    fn enumerated_b_includes_family_a() {
        let e = enumerate_standard(FamilyType::B, 2, 4);
        assert!(e.items.iter().any(|it| matches!(it.class, StandardClass::TypeBa { .. })));
        let e = enumerate_standard(FamilyType::G, 2, 3);
        assert!(e.items.is_empty());
        assert!(e.diagnostic.is_some());
    }

    #[test]
    fn serializes_with_family_tag() {
        let c = StandardClass::G2b { zeta: RootOfUnity::new(8, 3), variant: G2Variant::Ii };
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"family":"G2_b","zeta":{"conductor":8,"exponent":3},"variant":"ii"}"#);
    }
}
