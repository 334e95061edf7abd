//! Exact arithmetic in the cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` reduced
//! modulo the cyclotomic polynomial `Φ_N`, as integer numerators over one
//! positive common denominator.  The representation is canonical, so
//! equality inside one conductor is coordinate equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

static CONDUCTOR_CAP: AtomicU32 = AtomicU32::new(120);

/// Largest conductor accepted when constructing scalars.
pub fn conductor_cap() -> u32 {
    CONDUCTOR_CAP.load(Ordering::Relaxed)
}

/// Changes the conductor cap for the whole process.
pub fn set_conductor_cap(cap: u32) {
    CONDUCTOR_CAP.store(cap.max(1), Ordering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {n} exceeds the configured cap {cap}")]
    ConductorTooLarge { n: u32, cap: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
}

/// Per-conductor data: `Φ_N` and the reductions of `x^e` for `e < N`.
struct Field {
    n: u32,
    deg: usize,
    phi: Vec<i64>,
    powers: Vec<Vec<i64>>,
    units: Vec<u32>,
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    let mut rem = a.to_vec();
    let dq = a.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                rem[k + i] -= c * bi;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl Field {
    fn build(n: u32) -> Field {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        if deg == 0 {
            unreachable!("cyclotomic polynomials have positive degree");
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_N
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..deg {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(phi[i]).expect("overflow in power table"))
                        .expect("overflow in power table");
                }
            }
        }
        let units = (1..n.max(2)).filter(|k| k.gcd(&n) == 1).collect();
        Field { n, deg, phi, powers, units }
    }
}

fn field(n: u32) -> Arc<Field> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("field cache poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(Field::build(n))).clone()
}

fn check_conductor(n: u32) -> Result<(), CycError> {
    if n == 0 {
        return Err(CycError::ZeroConductor);
    }
    let cap = conductor_cap();
    if n > cap {
        return Err(CycError::ConductorTooLarge { n, cap });
    }
    Ok(())
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    fn raw(field: Arc<Field>, num: Vec<BigInt>, den: BigInt) -> CycScalar {
        let mut s = CycScalar { field, num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Zero of `Q(ζ_n)`.
    pub fn zero(n: u32) -> Result<CycScalar, CycError> {
        check_conductor(n)?;
        let f = field(n);
        let d = f.deg;
        Ok(CycScalar { field: f, num: vec![BigInt::zero(); d], den: BigInt::one() })
    }

    pub fn one(n: u32) -> Result<CycScalar, CycError> {
        CycScalar::from_int(n, 1)
    }

    pub fn from_int(n: u32, v: i64) -> Result<CycScalar, CycError> {
        let mut z = CycScalar::zero(n)?;
        z.num[0] = BigInt::from(v);
        Ok(z)
    }

    pub fn from_rational(n: u32, v: &BigRational) -> Result<CycScalar, CycError> {
        let mut z = CycScalar::zero(n)?;
        z.num[0] = v.numer().clone();
        z.den = v.denom().clone();
        z.normalize();
        Ok(z)
    }

    /// Builds `Σ c_i ζ^i` from arbitrary-length rational coordinates.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Result<CycScalar, CycError> {
        check_conductor(n)?;
        let f = field(n);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut acc = vec![BigInt::zero(); f.deg];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            let row = &f.powers[e % f.n as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *a += &scaled * r;
                }
            }
        }
        Ok(CycScalar::raw(f, acc, den))
    }

    /// `ζ_n^k` in canonical form.
    pub fn root_of_unity(n: u32, k: i64) -> Result<CycScalar, CycError> {
        check_conductor(n)?;
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let num = f.powers[e].iter().map(|&c| BigInt::from(c)).collect();
        Ok(CycScalar { field: f, num, den: BigInt::one() })
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// Degree `φ(N)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.field.deg
    }

    /// Rational coordinates in the power basis.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    fn zero_like(&self) -> CycScalar {
        CycScalar { field: self.field.clone(), num: vec![BigInt::zero(); self.field.deg], den: BigInt::one() }
    }

    fn one_like(&self) -> CycScalar {
        let mut o = self.zero_like();
        o.num[0] = BigInt::one();
        o
    }

    /// Re-expresses `self` inside `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Result<CycScalar, CycError> {
        let n = self.field.n;
        if m == n {
            return Ok(self.clone());
        }
        if m == 0 || m % n != 0 {
            return Err(CycError::Domain(format!("cannot embed conductor {n} into {m}")));
        }
        check_conductor(m)?;
        Ok(self.embed_unchecked(m))
    }

    fn embed_unchecked(&self, m: u32) -> CycScalar {
        let f = field(m);
        let step = (m / self.field.n) as usize;
        let mut acc = vec![BigInt::zero(); f.deg];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[(i * step) % m as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *a += c * r;
                }
            }
        }
        CycScalar::raw(f, acc, self.den.clone())
    }

    fn unify(a: &CycScalar, b: &CycScalar) -> Result<(CycScalar, CycScalar), CycError> {
        let l = a.field.n.lcm(&b.field.n);
        check_conductor(l)?;
        Ok((a.embed_unchecked(l), b.embed_unchecked(l)))
    }

    fn same_field(&self, other: &CycScalar) -> bool {
        self.field.n == other.field.n
    }

    pub fn checked_add(&self, other: &CycScalar) -> Result<CycScalar, CycError> {
        if !self.same_field(other) {
            let (a, b) = CycScalar::unify(self, other)?;
            return Ok(a.add_same(&b));
        }
        Ok(self.add_same(other))
    }

    pub fn checked_mul(&self, other: &CycScalar) -> Result<CycScalar, CycError> {
        if !self.same_field(other) {
            let (a, b) = CycScalar::unify(self, other)?;
            return Ok(a.mul_same(&b));
        }
        Ok(self.mul_same(other))
    }

    fn add_same(&self, other: &CycScalar) -> CycScalar {
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return CycScalar::raw(self.field.clone(), num, self.den.clone());
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect();
        CycScalar::raw(self.field.clone(), num, &self.den * &other.den)
    }

    fn mul_same(&self, other: &CycScalar) -> CycScalar {
        let f = &self.field;
        let d = f.deg;
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        if d == 1 {
            return CycScalar::raw(f.clone(), vec![&self.num[0] * &other.num[0]], &self.den * &other.den);
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut acc: Vec<BigInt> = prod[..d].to_vec();
        for (e, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[e % f.n as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *a += c * r;
                }
            }
        }
        CycScalar::raw(f.clone(), acc, &self.den * &other.den)
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k`.
    pub fn galois(&self, k: u32) -> CycScalar {
        let f = &self.field;
        let mut acc = vec![BigInt::zero(); f.deg];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[(i * k as usize) % f.n as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *a += c * r;
                }
            }
        }
        CycScalar::raw(f.clone(), acc, self.den.clone())
    }

    /// Multiplicative inverse, via the product of the nontrivial conjugates.
    pub fn inv(&self) -> Result<CycScalar, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let mut p = self.one_like();
        for &k in &self.field.units {
            if k != 1 {
                p = p.mul_same(&self.galois(k));
            }
        }
        let norm = self.mul_same(&p);
        debug_assert!(norm.is_rational());
        // norm = a / b as a rational; divide p by it
        let (a, b) = (norm.num[0].clone(), norm.den.clone());
        let num = p.num.iter().map(|c| c * &b).collect();
        Ok(CycScalar::raw(self.field.clone(), num, &p.den * a))
    }

    pub fn checked_div(&self, other: &CycScalar) -> Result<CycScalar, CycError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<CycScalar, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_same(&b);
            }
        }
        Ok(acc)
    }

    /// Multiplies by a small integer.
    pub fn scale_int(&self, k: i64) -> CycScalar {
        let num = self.num.iter().map(|c| c * k).collect();
        CycScalar::raw(self.field.clone(), num, self.den.clone())
    }

    /// The pair `(L, k)` with `self = ζ_L^k`, `L = lcm(2, N)`, if `self` is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<(u32, u32)> {
        let n = self.field.n;
        let l = if n % 2 == 0 { n } else { 2 * n };
        let target = self.embed_unchecked(l);
        let f = field(l);
        if !target.den.is_one() {
            return None;
        }
        (0..l)
            .find(|&k| f.powers[k as usize].iter().zip(&target.num).all(|(&p, t)| BigInt::from(p) == *t))
            .map(|k| (l, k))
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &CycScalar) -> bool {
        if self.same_field(other) {
            return self.den == other.den && self.num == other.num;
        }
        let l = self.field.n.lcm(&other.field.n);
        let (a, b) = (self.embed_unchecked(l), other.embed_unchecked(l));
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({}; N={})", self, self.field.n)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let mag = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some((l, k)) = self.as_root_of_unity() {
            let mut st = s.serialize_struct("RootOfUnity", 2)?;
            st.serialize_field("conductor", &l)?;
            st.serialize_field("exponent", &k)?;
            return st.end();
        }
        let coeffs: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("CycScalar", 2)?;
        st.serialize_field("conductor", &self.field.n)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                self.$checked(rhs).expect("cyclotomic arithmetic failed")
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$checked(&rhs).expect("cyclotomic arithmetic failed")
            }
        }
    };
}

impl CycScalar {
    pub fn checked_sub(&self, other: &CycScalar) -> Result<CycScalar, CycError> {
        self.checked_add(&-other)
    }
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

/// Outcome of [`mult_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Order {
    /// The scalar equals 1.
    IsOne,
    /// Smallest `n ≥ 2` with `x^n = 1`.
    Finite(u64),
    NotRootOfUnity,
}

impl Order {
    /// The order as a number, with 1 for `IsOne`.
    pub fn value(self) -> Option<u64> {
        match self {
            Order::IsOne => Some(1),
            Order::Finite(n) => Some(n),
            Order::NotRootOfUnity => None,
        }
    }
}

/// Multiplicative order of `x`; roots of unity of `Q(ζ_N)` lie in `μ_{lcm(2,N)}`.
pub fn mult_order(x: &CycScalar) -> Result<Order, CycError> {
    if x.is_zero() {
        return Err(CycError::Domain("order of zero".into()));
    }
    if x.is_one() {
        return Ok(Order::IsOne);
    }
    let n = x.conductor() as u64;
    let l = n.lcm(&2);
    for d in 2..=l {
        if l % d == 0 && x.pow(d as i64)?.is_one() {
            return Ok(Order::Finite(d));
        }
    }
    Ok(Order::NotRootOfUnity)
}

/// `(n)_q = 1 + q + … + q^{n-1}`.
pub fn q_number(n: u64, q: &CycScalar) -> CycScalar {
    let mut acc = q.zero_like();
    let mut p = q.one_like();
    for _ in 0..n {
        acc = acc.add_same(&p);
        p = p.mul_same(q);
    }
    acc
}

/// `(n)_q! = (1)_q (2)_q ⋯ (n)_q`.
pub fn q_factorial(n: u64, q: &CycScalar) -> CycScalar {
    let mut acc = q.one_like();
    for k in 1..=n {
        acc = acc.mul_same(&q_number(k, q));
    }
    acc
}

/// Gaussian binomial by the Pascal recursion, valid at roots of unity.
pub fn q_binomial(n: u64, k: u64, q: &CycScalar) -> Result<CycScalar, CycError> {
    if k > n {
        return Err(CycError::Domain(format!("binomial with k={k} > n={n}")));
    }
    let powers: Vec<CycScalar> = {
        let mut v = vec![q.one_like()];
        for i in 1..=k as usize {
            let next = v[i - 1].mul_same(q);
            v.push(next);
        }
        v
    };
    // row[j] = binom(m, j) for the current m
    let mut row = vec![q.one_like()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k as usize) {
            let v = if j == 0 || j == m {
                q.one_like()
            } else {
                row[j - 1].add_same(&powers[j].mul_same(&row[j]))
            };
            next.push(v);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Convenience wrapper for [`CycScalar::root_of_unity`].
pub fn root_of_unity(n: u32, k: i64) -> Result<CycScalar, CycError> {
    CycScalar::root_of_unity(n, k)
}

/// Euler's totient, used for degrees and orders.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Order of `ζ_n^k`.
pub fn root_order(n: u32, k: i64) -> u32 {
    let k = k.rem_euclid(n as i64) as u32;
    n / k.gcd(&n)
}

impl CycScalar {
    /// Rational value, if the scalar lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Integer value, if the scalar is a small integer.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_rational() && self.den.is_one() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    /// The defining polynomial of the field, for diagnostics.
    pub fn modulus(&self) -> Vec<i64> {
        self.field.phi.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycScalar {
        root_of_unity(n, k).unwrap()
    }

    #[test]
    fn trivial_roots() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(2, 1), CycScalar::from_int(2, -1).unwrap());
        assert_eq!(z(4, 2), CycScalar::from_int(4, -1).unwrap());
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() as u32 - 1, euler_phi(n));
        }
    }

    #[test]
    fn zeta_n_satisfies_its_polynomial() {
        for n in 1..=30u32 {
            let zeta = z(n, 1);
            assert!(zeta.pow(n as i64).unwrap().is_one());
            let phi = cyclotomic_polynomial(n);
            let mut acc = CycScalar::zero(n).unwrap();
            for (e, &c) in phi.iter().enumerate() {
                acc = &acc + &zeta.pow(e as i64).unwrap().scale_int(c);
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        }
    }

    #[test]
    fn orders_of_roots() {
        for n in 1..=30u32 {
            for k in 1..n as i64 {
                let o = mult_order(&z(n, k)).unwrap();
                let expect = n / (k as u32).gcd(&n);
                assert_eq!(o.value(), Some(expect as u64), "order of z_{n}^{k}");
            }
        }
        assert_eq!(mult_order(&z(12, 4)).unwrap(), Order::Finite(3));
        assert_eq!(mult_order(&CycScalar::from_int(5, -1).unwrap()).unwrap(), Order::Finite(2));
        assert_eq!(mult_order(&z(7, 0)).unwrap(), Order::IsOne);
        assert_eq!(mult_order(&CycScalar::from_int(3, 2).unwrap()).unwrap(), Order::NotRootOfUnity);
        assert!(mult_order(&CycScalar::zero(3).unwrap()).is_err());
    }

    #[test]
    fn mixed_conductors_embed() {
        let a = z(3, 1);
        let b = z(6, 2);
        assert_eq!(a, b);
        let c = &z(4, 1) * &z(3, 1);
        assert_eq!(c.conductor(), 12);
        assert_eq!(c, z(12, 7));
    }

    #[test]
    fn inverse_and_division() {
        for n in [3u32, 5, 8, 12, 15, 24] {
            let x = &z(n, 1) + &CycScalar::from_int(n, 2).unwrap();
            let y = x.inv().unwrap();
            assert!((&x * &y).is_one());
        }
        assert!(CycScalar::zero(5).unwrap().inv().is_err());
    }

    #[test]
    fn conductor_cap_reported() {
        assert!(matches!(root_of_unity(121, 1), Err(CycError::ConductorTooLarge { .. })));
        assert!(matches!(root_of_unity(0, 1), Err(CycError::ZeroConductor)));
    }

    #[test]
    fn q_numbers() {
        let m1 = CycScalar::from_int(2, -1).unwrap();
        assert!(q_number(2, &m1).is_zero());
        let q = z(7, 2);
        assert!(q_binomial(5, 0, &q).unwrap().is_one());
        assert_eq!(q_binomial(2, 1, &q).unwrap(), &CycScalar::one(7).unwrap() + &q);
        assert!(q_binomial(2, 3, &q).is_err());
        // binom(4,2)_q at q = i vanishes: (4)_i = 0 in the numerator
        let i = z(4, 1);
        let b = q_binomial(4, 2, &i).unwrap();
        assert_eq!(b, CycScalar::zero(4).unwrap());
    }

    #[test]
    fn pascal_matches_factorial_quotient() {
        for n in 0..8u64 {
            for k in 0..=n {
                for (m, e) in [(7u32, 1i64), (9, 2), (11, 3)] {
                    let q = z(m, e);
                    let den = &q_factorial(k, &q) * &q_factorial(n - k, &q);
                    if den.is_zero() {
                        continue;
                    }
                    let quot = q_factorial(n, &q).checked_div(&den).unwrap();
                    assert_eq!(q_binomial(n, k, &q).unwrap(), quot);
                }
            }
        }
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(z(5, 2).as_root_of_unity(), Some((10, 4)));
        assert_eq!(CycScalar::from_int(4, -1).unwrap().as_root_of_unity(), Some((4, 2)));
        assert_eq!(CycScalar::from_int(4, 3).unwrap().as_root_of_unity(), None);
    }

    #[test]
    fn display_is_readable() {
        let x = &z(8, 3) - &CycScalar::from_int(8, 2).unwrap();
        assert_eq!(x.to_string(), "-2 + z^3");
    }
}
