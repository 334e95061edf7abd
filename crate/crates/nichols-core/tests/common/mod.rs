//! Random instances and property checks shared by the property suite and the acceptance run.
#![allow(dead_code)]

use nichols::cyclotomic::CycScalar;
use nichols::freealgebra::{
    bilinear_form, braided_commutator, coproduct, coproduct_left, coproduct_right, BraidingMatrix, NcPoly,
};
use nichols::words::{is_lyndon, lyndon_factorization, shirshov_decomposition, words_of_degree, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_braiding<R: Rng>(rng: &mut R, max_theta: usize, symmetric: bool) -> BraidingMatrix {
    let theta = rng.gen_range(1..=max_theta);
    let n = rng.gen_range(2..=12u32);
    let mut e = vec![vec![0i64; theta]; theta];
    for i in 0..theta {
        for j in 0..theta {
            if symmetric && j < i {
                e[i][j] = e[j][i];
            } else {
                e[i][j] = rng.gen_range(0..n as i64);
            }
        }
    }
    BraidingMatrix::new(n, e).unwrap()
}

pub fn random_scalar<R: Rng>(rng: &mut R, b: &BraidingMatrix) -> CycScalar {
    if rng.gen_bool(0.5) {
        b.zeta_pow(rng.gen_range(0..b.conductor() as i64))
    } else {
        b.scalar(rng.gen_range(-3..=3))
    }
}

pub fn random_degree<R: Rng>(rng: &mut R, theta: usize, total: u32) -> Vec<u32> {
    let mut d = vec![0u32; theta];
    for _ in 0..total {
        d[rng.gen_range(0..theta)] += 1;
    }
    d
}

/// Up to three random words of the given degree with random coefficients.
pub fn random_homogeneous<R: Rng>(rng: &mut R, b: &BraidingMatrix, deg: &[u32]) -> NcPoly {
    let words = words_of_degree(deg);
    let mut p = NcPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = words.choose(rng).unwrap().clone();
        p = p.add(&NcPoly::monomial(w, random_scalar(rng, b)));
    }
    p
}

pub fn random_word<R: Rng>(rng: &mut R, theta: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word((0..len).map(|_| rng.gen_range(0..theta) as u8).collect())
}

fn deg(b: &BraidingMatrix, p: &NcPoly) -> Vec<u32> {
    p.degree(b.theta()).unwrap_or_else(|| vec![0; b.theta()])
}

/// Three random homogeneous elements of positive degree with total degree at most 6.
fn random_triple<R: Rng>(rng: &mut R) -> (BraidingMatrix, NcPoly, NcPoly, NcPoly) {
    let b = random_braiding(rng, 3, false);
    let t = b.theta();
    let a = rng.gen_range(1..=4u32);
    let c = rng.gen_range(1..=5 - a);
    let e = rng.gen_range(1..=6 - a - c);
    let (da, dc, de) = (random_degree(rng, t, a), random_degree(rng, t, c), random_degree(rng, t, e));
    let u = random_homogeneous(rng, &b, &da);
    let v = random_homogeneous(rng, &b, &dc);
    let w = random_homogeneous(rng, &b, &de);
    (b, u, v, w)
}

pub fn check_jacobi<R: Rng>(rng: &mut R) -> Result<(), String> {
    let (b, u, v, w) = random_triple(rng);
    let br = |x: &NcPoly, y: &NcPoly| braided_commutator(&b, x, y);
    let (al, be, ga) = (deg(&b, &u), deg(&b, &v), deg(&b, &w));
    let lhs = br(&br(&u, &v), &w);
    let uw = br(&u, &w);
    let rhs =
        br(&u, &br(&v, &w)).sub(&v.mul(&uw).scale(&b.chi_deg(&al, &be))).add(&uw.mul(&v).scale(&b.chi_deg(&be, &ga)));
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("Jacobi fails for u={u:?} v={v:?} w={w:?}"))
    }
}

pub fn check_derivations<R: Rng>(rng: &mut R) -> Result<(), String> {
    let (b, u, v, w) = random_triple(rng);
    let br = |x: &NcPoly, y: &NcPoly| braided_commutator(&b, x, y);
    let (al, be, ga) = (deg(&b, &u), deg(&b, &v), deg(&b, &w));
    let lhs = br(&u, &v.mul(&w));
    let rhs = br(&u, &v).mul(&w).add(&v.mul(&br(&u, &w)).scale(&b.chi_deg(&al, &be)));
    if lhs != rhs {
        return Err(format!("[u, vw] rule fails for u={u:?} v={v:?} w={w:?}"));
    }
    let lhs = br(&u.mul(&v), &w);
    let rhs = br(&u, &w).mul(&v).scale(&b.chi_deg(&be, &ga)).add(&u.mul(&br(&v, &w)));
    if lhs != rhs {
        return Err(format!("[uv, w] rule fails for u={u:?} v={v:?} w={w:?}"));
    }
    Ok(())
}

pub fn check_coassociativity<R: Rng>(rng: &mut R) -> Result<(), String> {
    let b = random_braiding(rng, 3, false);
    let w = random_word(rng, b.theta(), 5);
    let d = coproduct(&b, &NcPoly::word(&b, w.clone()));
    if coproduct_left(&b, &d) == coproduct_right(&b, &d) {
        Ok(())
    } else {
        Err(format!("coassociativity fails on {w}"))
    }
}

pub fn check_form_symmetry<R: Rng>(rng: &mut R) -> Result<(), String> {
    let b = random_braiding(rng, 3, true);
    let total = rng.gen_range(1..=5);
    let d = random_degree(rng, b.theta(), total);
    let x = random_homogeneous(rng, &b, &d);
    let y = random_homogeneous(rng, &b, &d);
    if bilinear_form(&b, &x, &y) == bilinear_form(&b, &y, &x) {
        Ok(())
    } else {
        Err(format!("form not symmetric on x={x:?} y={y:?}"))
    }
}

/// Duval factorization, Shirshov decomposition and closure of Lyndon words under ordered products.
pub fn check_words<R: Rng>(rng: &mut R) -> Result<(), String> {
    let theta = rng.gen_range(1..=3);
    let u = random_word(rng, theta, 8);
    let f = lyndon_factorization(&u).map_err(|e| e.to_string())?;
    let joined = f.iter().fold(Word::empty(), |acc, x| acc.concat(x));
    if joined != u {
        return Err(format!("factors of {u} do not concatenate back"));
    }
    if f.iter().any(|x| !is_lyndon(x).unwrap()) || f.windows(2).any(|p| p[0] < p[1]) {
        return Err(format!("factorization of {u} is not a non-increasing product of Lyndon words"));
    }
    for l in &f {
        if l.len() < 2 {
            continue;
        }
        let (v, w) = shirshov_decomposition(l).map_err(|e| e.to_string())?;
        if v.concat(&w) != *l || !is_lyndon(&v).unwrap() || !is_lyndon(&w).unwrap() || v >= w {
            return Err(format!("bad Shirshov decomposition of {l}"));
        }
        // w is the smallest proper suffix
        if (1..l.len()).any(|k| Word(l.0[k..].to_vec()) < w) {
            return Err(format!("Shirshov suffix of {l} is not minimal"));
        }
    }
    if f.len() >= 2 {
        let (a, c) = (&f[f.len() - 1], &f[0]);
        if a < c && !is_lyndon(&a.concat(c)).unwrap() {
            return Err(format!("{a}{c} should be Lyndon"));
        }
    }
    Ok(())
}

/// `(x | y y') = Σ (x₍₁₎ | y)(x₍₂₎ | y')`, evaluated through the coproduct.
pub fn check_form_hopf<R: Rng>(rng: &mut R) -> Result<(), String> {
    let b = random_braiding(rng, 3, false);
    let t = b.theta();
    let a = rng.gen_range(1..=3);
    let c = rng.gen_range(1..=5 - a);
    let (da, dc) = (random_degree(rng, t, a), random_degree(rng, t, c));
    let total: Vec<u32> = da.iter().zip(&dc).map(|(p, q)| p + q).collect();
    let x = random_homogeneous(rng, &b, &total);
    let y = random_homogeneous(rng, &b, &da);
    let y2 = random_homogeneous(rng, &b, &dc);
    let lhs = bilinear_form(&b, &x, &y.mul(&y2));
    let mut rhs = b.zero();
    for ((l, r), k) in coproduct(&b, &x).terms() {
        let f1 = bilinear_form(&b, &NcPoly::word(&b, l.clone()), &y);
        if f1.is_zero() {
            continue;
        }
        let f2 = bilinear_form(&b, &NcPoly::word(&b, r.clone()), &y2);
        rhs = &rhs + &(&(k * &f1) * &f2);
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("Hopf pairing fails for x={x:?} y={y:?} y'={y2:?}"))
    }
}

pub fn check_field_axioms<R: Rng>(rng: &mut R) -> Result<(), String> {
    let n = rng.gen_range(1..=30u32);
    let b = BraidingMatrix::new(n, vec![vec![0]]).unwrap();
    let mut r = || {
        let mut s = b.zero();
        for _ in 0..3 {
            s = &s + &(&random_scalar(rng, &b) * &b.zeta_pow(rng.gen_range(0..n as i64)));
        }
        s
    };
    let (x, y, z) = (r(), r(), r());
    let ok = &(&x + &y) + &z == &x + &(&y + &z)
        && &(&x * &y) * &z == &x * &(&y * &z)
        && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
        && &x * &y == &y * &x
        && &x + &(-&x) == b.zero()
        && (x.is_zero() || &x * &x.inv().unwrap() == b.one())
        && b.zeta_pow(n as i64) == b.one();
    if ok {
        Ok(())
    } else {
        Err(format!("field axioms fail in conductor {n} for {x}, {y}, {z}"))
    }
}

/// Engine dimension against the rank of the Gram matrix.
pub fn check_engine_vs_gram<R: Rng>(rng: &mut R) -> Result<(), String> {
    let b = random_braiding(rng, 3, false);
    let total = rng.gen_range(1..=5);
    let d = random_degree(rng, b.theta(), total);
    let e = nichols::nichols::component_dim(&b, &d).map_err(|e| e.to_string())?;
    let g = nichols::nichols::gram_rank(&b, &d);
    if e == g {
        Ok(())
    } else {
        Err(format!("{b:?} degree {d:?}: engine {e}, gram {g}"))
    }
}
