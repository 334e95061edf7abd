//! Dimensions: product of heights over the roots, and the closed formulas per family.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::classify::{RootOfUnity, StandardClass, CLASSIFY_ORBIT_CAP};
use crate::freealgebra::BraidingMatrix;
use crate::weyl::{cartan_matrix, is_standard, positive_roots, CartanKind, DEFAULT_CARTAN_CAP};

use super::{check_cap, degrees_up_to, Height, HilbertPrefix, NicholsError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dimension {
    Finite(BigUint),
    Infinite,
}

impl Dimension {
    pub fn to_u64(&self) -> Option<u64> {
        match self {
            Dimension::Finite(n) => n.to_u64(),
            Dimension::Infinite => None,
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Numbers that fit in `u64` serialize as JSON numbers, larger ones as decimal strings.
impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Dimension::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Positive roots of a standard braiding with the heights `ord χ(α,α)`.
pub fn root_heights(b: &BraidingMatrix) -> Result<Vec<(Vec<u32>, Height)>, NicholsError> {
    let rep = is_standard(b, CLASSIFY_ORBIT_CAP)?;
    if !rep.standard {
        return Err(NicholsError::NotStandard(format!(
            "{}; use hilbert_prefix for a truncated Hilbert series",
            rep.reason.unwrap_or_default()
        )));
    }
    let c = cartan_matrix(b, DEFAULT_CARTAN_CAP)?;
    let roots = positive_roots(&c)?;
    Ok(roots
        .positive_roots
        .into_iter()
        .map(|a| {
            let h = Height::from_q(&b.chi_deg(&a, &a));
            (a, h)
        })
        .collect())
}

/// `Π_{α∈Δ⁺} N_α`.
pub fn dim_nichols(b: &BraidingMatrix) -> Result<Dimension, NicholsError> {
    let mut d = BigUint::one();
    for (_, h) in root_heights(b)? {
        match h {
            Height::Finite(n) => d *= n,
            Height::Infinite => return Ok(Dimension::Infinite),
        }
    }
    Ok(Dimension::Finite(d))
}

/// Coefficients of `Π (1 + t^α + … + t^{(N_α−1)α})` up to total degree `cap`.
pub fn pbw_product_prefix(theta: usize, roots: &[(Vec<u32>, Height)], cap: u32) -> Result<HilbertPrefix, NicholsError> {
    check_cap(cap)?;
    let mut dims: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    dims.insert(vec![0; theta], 1);
    for (alpha, h) in roots {
        let ht: u32 = alpha.iter().sum();
        if ht == 0 {
            return Err(NicholsError::Domain("zero root".into()));
        }
        let max_pow = cap / ht;
        let top = match h {
            Height::Finite(n) => (*n as u32 - 1).min(max_pow),
            Height::Infinite => max_pow,
        };
        let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (deg, &c) in &dims {
            let base: u32 = deg.iter().sum();
            for k in 0..=top {
                if base + k * ht > cap {
                    break;
                }
                let d: Vec<u32> = deg.iter().zip(alpha).map(|(x, a)| x + k * a).collect();
                *next.entry(d).or_insert(0) += c;
            }
        }
        dims = next;
    }
    let full = degrees_up_to(theta, cap).into_iter().map(|d| {
        let v = dims.get(&d).copied().unwrap_or(0);
        (d, v)
    });
    Ok(HilbertPrefix { cap, dims: full.collect() })
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pw(n: u64, e: u64) -> BigUint {
    big(n).pow(e as u32)
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Number of same-coloured squares: the board has `len + 1` squares, the last white,
/// and the colour flips across every vertex in `i_list`.
fn white_squares(len: usize, i_list: &[usize]) -> i64 {
    let mut sorted = i_list.to_vec();
    sorted.sort_unstable();
    let j = sorted.len();
    let alt: i64 =
        sorted.iter().enumerate().map(|(k, &i)| if (j - 1 - k) % 2 == 0 { i as i64 } else { -(i as i64) }).sum();
    len as i64 + 1 - alt
}

fn need_order(n: u32, min: u32, what: &str) -> Result<u64, NicholsError> {
    if n < min {
        return Err(NicholsError::Formula(format!("{what} requires a parameter of order at least {min}, got {n}")));
    }
    Ok(n as u64)
}

/// Closed dimension formula of a standard class.
pub fn closed_formula_dim(class: &StandardClass) -> Result<BigUint, NicholsError> {
    match class {
        StandardClass::NotStandard { reason } => Err(NicholsError::NotStandard(reason.clone())),
        StandardClass::Disconnected { components } => {
            let mut d = BigUint::one();
            for c in components {
                d *= closed_formula_dim(&c.class)?;
            }
            Ok(d)
        }
        StandardClass::Cartan { kind, theta, q } => {
            let th = *theta as u64;
            match kind {
                CartanKind::A | CartanKind::D | CartanKind::E => {
                    let n = need_order(q.order(), 2, "Cartan type")?;
                    let roots = match kind {
                        CartanKind::A => th * (th + 1) / 2,
                        CartanKind::D => th * (th - 1),
                        _ => [36, 63, 120][*theta - 6],
                    };
                    Ok(pw(n, roots))
                }
                CartanKind::B | CartanKind::C | CartanKind::F => {
                    let n = need_order(q.order(), 2, "doubly laced Cartan type")?;
                    // roots with q_α = q², the remaining ones have q_α = q
                    let (long, total) = match kind {
                        CartanKind::B => (th * (th - 1), th * th),
                        CartanKind::C => (th, th * th),
                        _ => (12, 24),
                    };
                    if n % 2 == 1 {
                        Ok(pw(n, total))
                    } else if n == 2 {
                        Err(NicholsError::Formula("q = -1 gives q_α = 1 on long roots".into()))
                    } else {
                        Ok(pw(n, total) / pw(2, long))
                    }
                }
                CartanKind::G => g2a(q.order()),
            }
        }
        StandardClass::TypeA { theta, q, i_list } => {
            let n = need_order(q.order(), 2, "type A")?;
            let th = *theta as i64;
            let t = white_squares(*theta, i_list);
            let same = binom2(t) + binom2(th + 1 - t);
            Ok(pw(2, (binom2(th + 1) - same) as u64) * pw(n, same as u64))
        }
        StandardClass::TypeBa { zeta, q } => {
            let n = need_order(q.order(), 2, "type B (a)")?;
            if n % 3 != 0 {
                return Ok(big(27) * pw(n, 2));
            }
            // q_{2e1+e2} = ζq⁻¹ need not have order N once 3 | N
            let l = num_integer::lcm(zeta.order(), q.order());
            let r = RootOfUnity::new(l, zeta.exponent_over(l) as i64 - q.exponent_over(l) as i64).order();
            Ok(big(9) * big(n) * big(r as u64))
        }
        StandardClass::TypeBb { theta, q, i_list } => {
            let n = need_order(q.order(), 3, "type B (b)")?;
            let th = *theta as i64;
            let t = white_squares(*theta - 1, i_list);
            let e = (th * th - 2 * t * th + 2 * t * t) as u64;
            if n % 2 == 1 {
                Ok(pw(2, ((2 * t + 1) * (th - t)) as u64) * pw(n, e))
            } else if (n / 2) % 2 == 0 {
                Ok(pw(2, (2 * t * (th - t) + th) as u64) * pw(n / 2, e))
            } else {
                // -q⁻¹ has order N/2 on the θ-t short roots carrying it
                Ok(pw(2, (2 * t * (th - t) + t) as u64) * pw(n / 2, e))
            }
        }
        StandardClass::TypeBc { theta, zeta, i_list } => {
            if zeta.order() != 3 {
                return Err(NicholsError::Formula("type B (c) requires ζ of order 3".into()));
            }
            let th = *theta as i64;
            let t = white_squares(*theta - 1, i_list);
            Ok(pw(2, (th * (th - 1)) as u64) * pw(3, (th * th - 2 * t * th + 2 * t * t) as u64))
        }
        StandardClass::G2a { q } => g2a(q.order()),
        StandardClass::G2b { .. } => Ok(pw(2, 12)),
    }
}

fn g2a(order: u32) -> Result<BigUint, NicholsError> {
    let n = need_order(order, 4, "G₂ (a)")?;
    Ok(if n % 3 == 0 { big(27) * pw(n / 3, 6) } else { pw(n, 6) })
}
