//! Dense polynomials over the prime field GF(p), little-endian coefficient
//! vectors. Only what modulus selection needs: reduction, products modulo a
//! monic polynomial, gcd and Rabin's irreducibility test.

use super::arith::{pow_mod, prime_factors};

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Remainder of `a` modulo `f` (any nonzero `f`).
pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut f = f.to_vec();
    trim(&mut f);
    assert!(!f.is_empty(), "division by the zero polynomial");
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        if c != 0 {
            let shift = dr - df;
            for (i, &fc) in f.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - c * fc % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub fn pow_mod_poly(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// `x^(p^k) mod f`, by k successive p-th powers so that p^k never has to fit
/// in a machine word.
fn frobenius_power_of_x(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut cur = rem(&[0, 1], f, p);
    for _ in 0..k {
        cur = pow_mod_poly(&cur, p, f, p);
    }
    cur
}

/// Rabin's test: a degree-n polynomial f is irreducible over GF(p) iff
/// `x^(p^n) = x mod f` and `gcd(f, x^(p^(n/r)) - x) = 1` for every prime `r | n`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let n = (f.len() - 1) as u32;
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    if sub(&frobenius_power_of_x(n, &f, p), &x, p) != Vec::<u64>::new() {
        return false;
    }
    for r in prime_factors(n as u64) {
        let h = sub(&frobenius_power_of_x(n / r as u32, &f, p), &x, p);
        if gcd(&f, &h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Monic polynomial of degree `a` whose lower coefficients are the base-p
/// digits of `index` (constant term first).
pub fn monic_from_index(index: u64, p: u64, a: u32) -> Vec<u64> {
    let mut coeffs = Vec::with_capacity(a as usize + 1);
    let mut rest = index;
    for _ in 0..a {
        coeffs.push(rest % p);
        rest /= p;
    }
    coeffs.push(1);
    coeffs
}

/// The monic irreducible of degree `a` whose lower coefficients, read as a
/// base-p integer, are smallest.
pub fn first_irreducible(p: u64, a: u32) -> Vec<u64> {
    if a == 1 {
        return vec![0, 1];
    }
    let count = p.pow(a);
    (0..count)
        .map(|i| monic_from_index(i, p, a))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
    }

    #[test]
    fn rabin_agrees_with_root_search_for_low_degree() {
        // Degrees 2 and 3 are irreducible exactly when rootless.
        for p in [2u64, 3, 5, 7] {
            for a in [2u32, 3] {
                for i in 0..p.pow(a) {
                    let f = monic_from_index(i, p, a);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn degree_four_over_gf2() {
        // x^4+x+1 irreducible, x^4+x^2+1 = (x^2+x+1)^2 is not (and is rootless).
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(!has_root(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree 4 over GF(2) is 3, over GF(3) is 18
        let count = |p: u64, a: u32| (0..p.pow(a)).filter(|&i| is_irreducible(&monic_from_index(i, p, a), p)).count();
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(3, 4), 18);
        assert_eq!(count(2, 5), 6);
    }

    #[test]
    fn first_irreducibles() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(first_irreducible(5, 1), vec![0, 1]);
    }
}
