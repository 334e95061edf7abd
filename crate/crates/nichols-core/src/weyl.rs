//! Cartan integers, reflections of braidings and the Weyl groupoid orbit.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::freealgebra::BraidingMatrix;

/// Default scan bound for `cartan_entry`.
pub const DEFAULT_CARTAN_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("reflection undefined at vertex {0}")]
    ReflectionUndefined(usize),
    #[error("inconclusive: orbit not closed within cap {0}")]
    Inconclusive(usize),
    #[error("Cartan entry m_{0}{1} undefined")]
    UndefinedEntry(usize, usize),
    #[error("not of finite type")]
    NotFiniteType,
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
}

/// Generalized Cartan matrix `a_ij = -m_ij`, `a_ii = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> Result<CartanMatrix, WeylError> {
        let n = a.len();
        if n == 0 || a.iter().any(|r| r.len() != n) {
            return Err(WeylError::InvalidCartan("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(WeylError::InvalidCartan(format!("a_{i}{i} must be 2")));
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return Err(WeylError::InvalidCartan(format!("a_{i}{j} is positive")));
                }
            }
        }
        Ok(CartanMatrix { a })
    }

    /// From Cartan integers `m_ij` (diagonal ignored).
    pub fn from_m(m: &[Vec<u32>]) -> CartanMatrix {
        let n = m.len();
        let a = (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { -(m[i][j] as i64) }).collect()).collect();
        CartanMatrix { a }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            2
        } else {
            (-self.a[i][j]) as u32
        }
    }
}

/// Minimal `m` with `(m+1)_{q_ii}(q_ii^m q_ij q_ji − 1) = 0`, or `None` if none up to `cap`.
pub fn cartan_entry(b: &BraidingMatrix, i: usize, j: usize, cap: u32) -> Option<u32> {
    if i == j {
        return Some(2);
    }
    let n = b.conductor() as u64;
    let eii = b.exp(i, i) as u64;
    let edge = (b.exp(i, j) + b.exp(j, i)) as u64 % n;
    let ord_ii = if eii == 0 { 0 } else { n / eii.gcd(&n) };
    (0..=cap).find(|&m| {
        let first = ord_ii != 0 && (m as u64 + 1) % ord_ii == 0;
        let second = (m as u64 * eii + edge) % n == 0;
        first || second
    })
}

/// All `m_ij`, `None` where undefined.
pub fn m_matrix(b: &BraidingMatrix, cap: u32) -> Vec<Vec<Option<u32>>> {
    let t = b.theta();
    (0..t).map(|i| (0..t).map(|j| cartan_entry(b, i, j, cap)).collect()).collect()
}

/// The Cartan matrix of `b`, if every entry is defined.
pub fn cartan_matrix(b: &BraidingMatrix, cap: u32) -> Result<CartanMatrix, WeylError> {
    let m = m_matrix(b, cap);
    let t = b.theta();
    let mut a = vec![vec![2i64; t]; t];
    for i in 0..t {
        for j in 0..t {
            if i != j {
                a[i][j] = -(m[i][j].ok_or(WeylError::UndefinedEntry(i + 1, j + 1))? as i64);
            }
        }
    }
    Ok(CartanMatrix { a })
}

/// `s_i(e_j) = e_j + m_ij e_i`; column `c` is the image of `e_c`.
pub fn simple_reflection_matrix(m_row: &[Option<u32>], i: usize) -> Result<Vec<Vec<i64>>, WeylError> {
    let t = m_row.len();
    let mut s: Vec<Vec<i64>> = (0..t).map(|r| (0..t).map(|c| (r == c) as i64).collect()).collect();
    for c in 0..t {
        if c == i {
            s[i][i] = -1;
        } else {
            s[i][c] = m_row[c].ok_or(WeylError::ReflectionUndefined(i + 1))? as i64;
        }
    }
    Ok(s)
}

/// Reflection of `b` at vertex `i`: `q̄_jk = χ(s_i e_j, s_i e_k)`.
pub fn reflect(b: &BraidingMatrix, i: usize) -> Result<BraidingMatrix, WeylError> {
    reflect_with_cap(b, i, DEFAULT_CARTAN_CAP)
}

pub fn reflect_with_cap(b: &BraidingMatrix, i: usize, cap: u32) -> Result<BraidingMatrix, WeylError> {
    let t = b.theta();
    let mut c = vec![0i64; t];
    for j in 0..t {
        c[j] =
            if j == i { -2 } else { cartan_entry(b, i, j, cap).ok_or(WeylError::ReflectionUndefined(i + 1))? as i64 };
    }
    let e = |x: usize, y: usize| b.exp(x, y) as i64;
    let exps = (0..t)
        .map(|j| (0..t).map(|k| c[j] * c[k] * e(i, i) + c[j] * e(i, k) + c[k] * e(j, i) + e(j, k)).collect())
        .collect();
    Ok(BraidingMatrix::new(b.conductor(), exps).expect("same shape and conductor"))
}

/// Vertex exponents and edge-product exponents; equal keys mean equal generalized Dynkin diagrams.
pub fn diagram_key(b: &BraidingMatrix) -> (u32, Vec<u32>, Vec<u32>) {
    let t = b.theta();
    let n = b.conductor();
    let labels = (0..t).map(|i| b.exp(i, i)).collect();
    let mut edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            edges.push((b.exp(i, j) + b.exp(j, i)) % n);
        }
    }
    (n, labels, edges)
}

/// A point of the Weyl groupoid orbit.
#[derive(Debug, Clone, Serialize)]
pub struct GroupoidPoint {
    pub basis_matrix: Vec<Vec<i64>>,
    pub braiding: BraidingMatrix,
    pub m: Vec<Vec<Option<u32>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StandardReport {
    pub standard: bool,
    pub orbit: Vec<GroupoidPoint>,
    /// Why the braiding failed, when it did.
    pub reason: Option<String>,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect()
}

/// Breadth-first closure of the orbit of `b`; standard iff all `m` are defined and constant.
pub fn is_standard(b: &BraidingMatrix, orbit_cap: usize) -> Result<StandardReport, WeylError> {
    let t = b.theta();
    let m0 = m_matrix(b, DEFAULT_CARTAN_CAP);
    let mut orbit = Vec::new();
    let mut seen = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(diagram_key(b), 0usize);
    queue.push_back((identity(t), b.clone()));
    while let Some((basis, br)) = queue.pop_front() {
        let m = m_matrix(&br, DEFAULT_CARTAN_CAP);
        let idx = orbit.len();
        orbit.push(GroupoidPoint { basis_matrix: basis.clone(), braiding: br.clone(), m: m.clone() });
        if let Some((i, j)) = first_undefined(&m) {
            return Ok(StandardReport {
                standard: false,
                orbit,
                reason: Some(format!("m_{}{} undefined at orbit point {idx}", i + 1, j + 1)),
            });
        }
        if m != m0 {
            return Ok(StandardReport {
                standard: false,
                orbit,
                reason: Some(format!("Cartan integers change at orbit point {idx}")),
            });
        }
        for i in 0..t {
            let r = reflect(&br, i)?;
            let key = diagram_key(&r);
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= orbit_cap {
                return Err(WeylError::Inconclusive(orbit_cap));
            }
            seen.insert(key, seen.len());
            let s = simple_reflection_matrix(&m[i], i)?;
            queue.push_back((mat_mul(&basis, &s), r));
        }
    }
    Ok(StandardReport { standard: true, orbit, reason: None })
}

fn first_undefined(m: &[Vec<Option<u32>>]) -> Option<(usize, usize)> {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.is_none() {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// One connected component; `vertices[k]` is the input vertex of standard vertex `k + 1`.
///
/// Standard numbering: chains for A; short vertex `1` for B; Bourbaki for C, D, E, F₄;
/// short vertex `1` for G₂.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteComponent {
    pub kind: CartanKind,
    pub rank: usize,
    pub vertices: Vec<usize>,
}

impl FiniteComponent {
    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.kind, n) {
            (CartanKind::A, _) => n * (n + 1) / 2,
            (CartanKind::B, _) | (CartanKind::C, _) => n * n,
            (CartanKind::D, _) => n * (n - 1),
            (CartanKind::E, 6) => 36,
            (CartanKind::E, 7) => 63,
            (CartanKind::E, _) => 120,
            (CartanKind::F, _) => 24,
            (CartanKind::G, _) => 6,
        }
    }

    /// Cartan matrix in standard numbering.
    pub fn standard_cartan(&self) -> CartanMatrix {
        standard_cartan(self.kind, self.rank)
    }
}

impl fmt::Display for FiniteComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum FiniteType {
    Finite { components: Vec<FiniteComponent> },
    NotFinite,
}

/// Cartan matrix of a finite type in standard numbering.
pub fn standard_cartan(kind: CartanKind, n: usize) -> CartanMatrix {
    let mut a: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| if r == c { 2 } else { 0 }).collect()).collect();
    let mut link = |i: usize, j: usize, mij: i64| {
        a[i][j] = -mij;
        a[j][i] = -1;
    };
    match kind {
        CartanKind::A => (0..n - 1).for_each(|i| link(i, i + 1, 1)),
        CartanKind::B => {
            link(0, 1, 2);
            (1..n - 1).for_each(|i| link(i, i + 1, 1));
        }
        CartanKind::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, 1));
            link(n - 2, n - 1, 2);
        }
        CartanKind::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, 1));
            link(n - 3, n - 1, 1);
        }
        CartanKind::E => {
            link(0, 2, 1);
            link(1, 3, 1);
            (2..n - 1).for_each(|i| link(i, i + 1, 1));
        }
        CartanKind::F => {
            link(0, 1, 1);
            link(2, 1, 2);
            link(2, 3, 1);
        }
        CartanKind::G => link(0, 1, 3),
    }
    CartanMatrix { a }
}

/// Identifies each connected component with a finite-type Dynkin diagram.
pub fn finite_type(c: &CartanMatrix) -> FiniteType {
    let n = c.rank();
    let a = &c.a;
    for i in 0..n {
        for j in 0..n {
            if i != j && ((a[i][j] == 0) != (a[j][i] == 0)) {
                return FiniteType::NotFinite;
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut verts = vec![s];
        comp[s] = s;
        let mut k = 0;
        while k < verts.len() {
            let v = verts[k];
            for w in 0..n {
                if w != v && a[v][w] != 0 && comp[w] == usize::MAX {
                    comp[w] = s;
                    verts.push(w);
                }
            }
            k += 1;
        }
        verts.sort_unstable();
        match identify_component(a, &verts) {
            Some(fc) => components.push(fc),
            None => return FiniteType::NotFinite,
        }
    }
    FiniteType::Finite { components }
}

fn identify_component(a: &[Vec<i64>], verts: &[usize]) -> Option<FiniteComponent> {
    let n = verts.len();
    if n == 1 {
        return Some(FiniteComponent { kind: CartanKind::A, rank: 1, vertices: verts.to_vec() });
    }
    let nbrs = |v: usize| -> Vec<usize> { verts.iter().copied().filter(|&w| w != v && a[v][w] != 0).collect() };
    let mut edges = Vec::new();
    for (x, &v) in verts.iter().enumerate() {
        for &w in &verts[x + 1..] {
            if a[v][w] != 0 {
                edges.push((v, w, a[v][w] * a[w][v]));
            }
        }
    }
    if edges.len() != n - 1 || edges.iter().any(|e| e.2 > 3) {
        return None;
    }
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    let mk = |kind, vertices: Vec<usize>| Some(FiniteComponent { kind, rank: n, vertices });
    // m_{vw} > 1 marks v as the short end
    let short_end = |v: usize, w: usize| if -a[v][w] > 1 { (v, w) } else { (w, v) };
    match multi.len() {
        0 => {}
        1 => {
            let (v, w, p) = *multi[0];
            let (short, long) = short_end(v, w);
            if p == 3 {
                return if n == 2 { mk(CartanKind::G, vec![short, long]) } else { None };
            }
            let path = path_order(verts, &nbrs)?;
            if n == 2 {
                return mk(CartanKind::B, vec![short, long]);
            }
            let pos = |x: usize| path.iter().position(|&y| y == x).unwrap();
            let (ps, pl) = (pos(short), pos(long));
            if ps == 0 || ps == n - 1 {
                // short vertex at an end: B with that end first
                let mut p = path.clone();
                if ps == n - 1 {
                    p.reverse();
                }
                return mk(CartanKind::B, p);
            }
            if pl == 0 || pl == n - 1 {
                let mut p = path.clone();
                if pl == 0 {
                    p.reverse();
                }
                return mk(CartanKind::C, p);
            }
            if n == 4 {
                // F4: long pair first
                let mut p = path.clone();
                if ps < pl {
                    p.reverse();
                }
                return mk(CartanKind::F, p);
            }
            return None;
        }
        _ => return None,
    }
    let degs: Vec<usize> = verts.iter().map(|&v| nbrs(v).len()).collect();
    let branch: Vec<usize> = verts.iter().zip(&degs).filter(|(_, &d)| d >= 3).map(|(&v, _)| v).collect();
    if branch.is_empty() {
        let p = path_order(verts, &nbrs)?;
        return mk(CartanKind::A, p);
    }
    if branch.len() > 1 || nbrs(branch[0]).len() != 3 {
        return None;
    }
    let c = branch[0];
    let mut arms: Vec<Vec<usize>> = nbrs(c)
        .into_iter()
        .map(|start| {
            let mut arm = vec![start];
            let mut prev = c;
            let mut cur = start;
            loop {
                let next: Vec<usize> = nbrs(cur).into_iter().filter(|&x| x != prev).collect();
                if next.is_empty() {
                    break;
                }
                prev = cur;
                cur = next[0];
                arm.push(cur);
            }
            arm
        })
        .collect();
    arms.sort_by_key(|arm| (arm.len(), arm[0]));
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    match lens.as_slice() {
        [1, 1, _] => {
            // chain 1..n-2 ends at the branch node, leaves n-1, n
            let mut v: Vec<usize> = arms[2].iter().rev().copied().collect();
            v.push(c);
            v.push(arms[0][0]);
            v.push(arms[1][0]);
            mk(CartanKind::D, v)
        }
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
            let mut v = vec![arms[1][1], arms[0][0], arms[1][0], c];
            v.extend(arms[2].iter().copied());
            mk(CartanKind::E, v)
        }
        _ => None,
    }
}

fn path_order(verts: &[usize], nbrs: &dyn Fn(usize) -> Vec<usize>) -> Option<Vec<usize>> {
    let ends: Vec<usize> = verts.iter().copied().filter(|&v| nbrs(v).len() == 1).collect();
    if ends.len() != 2 || verts.iter().any(|&v| nbrs(v).len() > 2) {
        return None;
    }
    let mut p = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    loop {
        let next: Vec<usize> = nbrs(cur).into_iter().filter(|&x| x != prev).collect();
        if next.is_empty() {
            break;
        }
        prev = cur;
        cur = next[0];
        p.push(cur);
    }
    Some(p)
}

/// Positive roots of a finite-type Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub positive_roots: Vec<Vec<u32>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn contains(&self, r: &[u32]) -> bool {
        self.positive_roots.iter().any(|x| x == r)
    }
}

/// Applies `s_i(β) = β − (Σ_j a_ij β_j) e_i`.
pub fn reflect_root(c: &CartanMatrix, i: usize, beta: &[i64]) -> Vec<i64> {
    let mut r = beta.to_vec();
    let s: i64 = (0..beta.len()).map(|j| c.a[i][j] * beta[j]).sum();
    r[i] -= s;
    r
}

/// Closure of the simple roots under simple reflections, kept in `N^θ`.
pub fn positive_roots(c: &CartanMatrix) -> Result<RootSystem, WeylError> {
    if finite_type(c) == FiniteType::NotFinite {
        return Err(WeylError::NotFiniteType);
    }
    let n = c.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let e: Vec<i64> = (0..n).map(|k| (k == i) as i64).collect();
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let r = reflect_root(c, i, &b);
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<u32>> = seen.into_iter().map(|r| r.into_iter().map(|x| x as u32).collect()).collect();
    roots.sort_by(|x, y| {
        let hx: u32 = x.iter().sum();
        let hy: u32 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    Ok(RootSystem { positive_roots: roots })
}
