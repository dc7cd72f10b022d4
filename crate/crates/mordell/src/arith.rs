//! Integer and rational helpers shared across the crate: prime sieves,
//! trial-division and Pollard rho factoring, logarithms of big integers,
//! continued-fraction snapping, and the fixed 12-significant-digit float
//! format used by all text output.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; (n + 1) as usize];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2u64;
    while i * i <= n {
        if sieve[i as usize] {
            let mut j = i * i;
            while j <= n {
                sieve[j as usize] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k as usize]).collect()
}

/// Natural log of |n|. Exact enough for height bookkeeping: the top 52 bits
/// go through f64, the rest contribute bit-shift multiples of ln 2.
pub fn ln_big(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let a = n.abs();
    let bits = a.bits();
    if bits <= 52 {
        return a.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top: BigInt = a >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// f64 value of a big rational; saturates to 0 or +-inf outside f64 range.
/// The quotient is computed with a 64-bit mantissa so precision does not
/// depend on the size of numerator or denominator.
pub fn rat_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let neg = q.is_negative();
    let n = q.numer().abs();
    let d = q.denom().clone();
    let s: i64 = 64 + d.bits() as i64 - n.bits() as i64;
    let quot: BigInt = if s >= 0 {
        (n << s as u64) / &d
    } else {
        n / (&d << (-s) as u64)
    };
    let m = quot.to_f64().unwrap_or(f64::INFINITY);
    let val = m * (-s as f64).exp2();
    if neg {
        -val
    } else {
        val
    }
}

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse {
        what: "integer",
        input: s.to_string(),
    })
}

/// Accepts "p/q" or a plain integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_bigint(num)?;
        let d = parse_bigint(den)?;
        if d.is_zero() {
            return Err(Error::Parse {
                what: "rational",
                input: s.to_string(),
            });
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(parse_bigint(s)?))
    }
}

/// "p/q" for non-integers, plain digits otherwise.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Fixed 12-significant-digit form used for every float the crate prints.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    format!("{:.11e}", x)
}

/// Best rational approximation with denominator <= max_den, by continued
/// fractions. Returns None when x is not finite.
pub fn snap_to_rational(x: f64, max_den: u64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut k0) = (BigInt::one(), BigInt::zero()); // h_{-1}, k_{-1}
    let (mut h1, mut k1) = (
        BigInt::from(x.floor() as i64),
        BigInt::one(),
    );
    let max_den = BigInt::from(max_den);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if frac.abs() < 1e-15 {
            break;
        }
        let t = 1.0 / frac;
        if t >= 9.0e15 {
            break;
        }
        let a = BigInt::from(t.floor() as i64);
        frac = t - t.floor();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > max_den {
            // The best approximation with a bounded denominator is either the
            // previous convergent or a semiconvergent; the previous convergent
            // is good enough for exact-snap screening.
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
    }
    Some(BigRational::new(h1, k1))
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.numer().sign() == num_bigint::Sign::Minus {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Kronecker symbol (a | b), the full extension of the Legendre symbol.
pub fn kronecker(mut a: i64, mut b: i64) -> i32 {
    if b == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    // (2 | b) by b mod 8
    const TAB2: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let mut v = 0;
    while b % 2 == 0 {
        b /= 2;
        v += 1;
    }
    let mut k = if v % 2 == 0 { 1 } else { TAB2[(a & 7) as usize] };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b > 1 { 0 } else { k };
        }
        v = 0;
        while a % 2 == 0 {
            a /= 2;
            v += 1;
        }
        if v % 2 == 1 {
            k *= TAB2[(b & 7) as usize];
        }
        // reciprocity: flip when both are 3 mod 4
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

/// Trial division; fine for the u64 sizes this crate feeds it.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 7u64;
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += steps[i];
        i = (i + 1) % steps.len();
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let prev = divs.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            divs.extend(prev.iter().map(|d| d * pe));
        }
    }
    divs.sort_unstable();
    divs
}

/// Outcome of factoring a big integer with bounded effort.
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    /// Composite cofactor that resisted the effort budget, if any.
    pub unfactored: Option<BigInt>,
}

impl Factorization {
    pub fn complete(&self) -> bool {
        self.unfactored.is_none()
    }
}

/// Factor |n| by trial division up to `trial_bound` and then Pollard-Brent
/// rho with a bounded number of rounds. Never loops forever: hard composites
/// come back in `unfactored`.
pub fn factor_big(n: &BigInt, trial_bound: u64, rho_rounds: u32) -> Factorization {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let push = |f: BigInt, e: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = factors.iter_mut().find(|(p, _)| *p == f) {
            entry.1 += e;
        } else {
            factors.push((f, e));
        }
    };
    let mut m = n.abs();
    if m.is_zero() || m.is_one() {
        return Factorization {
            factors,
            unfactored: None,
        };
    }
    for p in primes_up_to(trial_bound) {
        let bp = BigInt::from(p);
        if (&bp * &bp) > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            push(bp, e, &mut factors);
        }
        if m.is_one() {
            break;
        }
    }
    if m.is_one() {
        return Factorization {
            factors,
            unfactored: None,
        };
    }
    // Split what remains with rho; stack of pending composites.
    let mut pending = vec![m];
    let mut unfactored: Option<BigInt> = None;
    let mut rounds_left = rho_rounds;
    while let Some(c) = pending.pop() {
        if c.is_one() {
            continue;
        }
        if is_probable_prime(&c) {
            push(c, 1, &mut factors);
            continue;
        }
        if let Some(r) = perfect_power_root(&c) {
            // c = r^k: factor the root once, multiply exponents.
            let (root, k) = r;
            for _ in 0..k {
                pending.push(root.clone());
            }
            continue;
        }
        if rounds_left == 0 {
            unfactored = Some(match unfactored {
                Some(u) => u * c,
                None => c,
            });
            continue;
        }
        rounds_left -= 1;
        match pollard_rho(&c, rho_rounds - rounds_left) {
            Some(d) => {
                pending.push(&c / &d);
                pending.push(d);
            }
            None => {
                unfactored = Some(match unfactored {
                    Some(u) => u * c,
                    None => c,
                });
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Factorization {
        factors,
        unfactored,
    }
}

/// Miller-Rabin with fixed witnesses; deterministic below 3.3e24, extremely
/// reliable above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let small: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let bp = BigInt::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &small {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// If n = r^k for some k >= 2, return (r, k) with r not itself a perfect power.
fn perfect_power_root(n: &BigInt) -> Option<(BigInt, u32)> {
    let bits = n.bits();
    for k in (2..=bits.max(2)).rev() {
        let k = k as u32;
        if k as u64 > bits {
            continue;
        }
        let r = n.nth_root(k);
        if r.pow(k) == *n && r > BigInt::one() {
            return Some((r, k));
        }
    }
    None
}

/// Pollard-Brent rho; one call makes a bounded number of iterations and may
/// fail (None) on hard inputs.
fn pollard_rho(n: &BigInt, salt: u32) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let c = BigInt::from(1 + salt as u64);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut x = BigInt::from(2 + salt as u64);
    let mut y = x.clone();
    let mut d = BigInt::one();
    let mut iter = 0u64;
    let budget = 1u64 << 20;
    while d.is_one() {
        if iter >= budget {
            return None;
        }
        x = f(&x);
        y = f(&f(&y));
        let diff = if x > y { &x - &y } else { &y - &x };
        if diff.is_zero() {
            return None;
        }
        d = diff.gcd(n);
        iter += 1;
    }
    if d == *n {
        None
    } else {
        Some(d)
    }
}

/// All y > 0 with y^2 dividing |n|, given its complete factorization.
pub fn square_divisor_roots(f: &Factorization) -> Vec<BigInt> {
    let mut roots = vec![BigInt::one()];
    for (p, e) in &f.factors {
        let half = e / 2;
        if half == 0 {
            continue;
        }
        let prev = roots.clone();
        let mut pk = BigInt::one();
        for _ in 0..half {
            pk *= p;
            roots.extend(prev.iter().map(|r| r * &pk));
        }
    }
    roots.sort();
    roots
}

/// Floor square root for u64.
pub fn isqrt_u64(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && r.checked_mul(r).map_or(true, |s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |s| s <= n) {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_primes_small() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
    }

    #[test]
    fn test_ln_big_matches_f64() {
        for n in [1u64, 2, 17, 1_000_003, u64::MAX] {
            let b = BigInt::from(n);
            assert!((ln_big(&b) - (n as f64).ln()).abs() < 1e-12);
        }
        let huge = BigInt::from(10).pow(500);
        assert!((ln_big(&huge) - 500.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn test_parse_and_format_rational() {
        let q = parse_rational("-3/12").unwrap();
        assert_eq!(fmt_rational(&q), "-1/4");
        let z = parse_rational("42").unwrap();
        assert_eq!(fmt_rational(&z), "42");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn test_fmt_sig_is_twelve_digits() {
        assert_eq!(fmt_sig(1.0), "1.00000000000e0");
        assert_eq!(fmt_sig(-0.5), "-5.00000000000e-1");
        assert_eq!(fmt_sig(123456.789), "1.23456789000e5");
    }

    #[test]
    fn test_snap_recovers_exact_fractions() {
        let x = 129.0 / 100.0;
        let s = snap_to_rational(x, 1_000_000).unwrap();
        assert_eq!(s, BigRational::new(BigInt::from(129), BigInt::from(100)));
        let y = -383.0 / 1000.0;
        let s = snap_to_rational(y, 1_000_000).unwrap();
        assert_eq!(s, BigRational::new(BigInt::from(-383), BigInt::from(1000)));
        // integer snaps to itself
        let s = snap_to_rational(7.0, 10).unwrap();
        assert_eq!(s, BigRational::from_integer(BigInt::from(7)));
    }

    #[test]
    fn test_rat_to_f64() {
        let q = BigRational::new(BigInt::from(-383), BigInt::from(1000));
        assert!((rat_to_f64(&q) + 0.383).abs() < 1e-15);
        // ratio of two ~500-digit numbers close to 3
        let n = BigInt::from(3) * BigInt::from(10).pow(500) + 7;
        let d = BigInt::from(10).pow(500);
        let q = BigRational::new(n, d);
        assert!((rat_to_f64(&q) - 3.0).abs() < 1e-14);
        // near the top of f64 range
        let huge = BigRational::from_integer(BigInt::from(10).pow(300));
        assert!((rat_to_f64(&huge).log10() - 300.0).abs() < 1e-10);
        let astro = BigRational::from_integer(BigInt::from(10).pow(4000));
        assert!(rat_to_f64(&astro).is_infinite());
    }

    #[test]
    fn test_factor_u64() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(divisors_u64(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn test_factor_big_complete() {
        let n = BigInt::from(2u64).pow(5) * BigInt::from(1_000_003u64).pow(2);
        let f = factor_big(&n, 10_000, 32);
        assert!(f.complete());
        assert_eq!(
            f.factors,
            vec![(BigInt::from(2), 5), (BigInt::from(1_000_003), 2)]
        );
    }

    #[test]
    fn test_square_divisor_roots() {
        // 144 = 2^4 * 3^2: y with y^2 | 144 are 1, 2, 3, 4, 6, 12
        let f = factor_big(&BigInt::from(144), 100, 4);
        let roots = square_divisor_roots(&f);
        let expect: Vec<BigInt> = [1u64, 2, 3, 4, 6, 12]
            .iter()
            .map(|&n| BigInt::from(n))
            .collect();
        assert_eq!(roots, expect);
    }

    #[test]
    fn test_probable_prime() {
        assert!(is_probable_prime(&BigInt::from(2)));
        assert!(is_probable_prime(&BigInt::from(1_000_003)));
        assert!(!is_probable_prime(&BigInt::from(1_000_001))); // 101 * 9901
        let mersenne = BigInt::from(2).pow(127) - 1;
        assert!(is_probable_prime(&mersenne));
    }

    #[test]
    fn test_isqrt() {
        assert_eq!(isqrt_u64(0), 0);
        assert_eq!(isqrt_u64(15), 3);
        assert_eq!(isqrt_u64(16), 4);
        assert_eq!(isqrt_u64(u64::MAX), 4294967295);
    }

    #[test]
    fn test_rational_sqrt() {
        let r = BigRational::new(BigInt::from(49), BigInt::from(64));
        assert_eq!(
            rational_sqrt(&r),
            Some(BigRational::new(BigInt::from(7), BigInt::from(8)))
        );
        assert_eq!(rational_sqrt(&BigRational::from_integer(BigInt::from(2))), None);
        assert_eq!(
            rational_sqrt(&BigRational::from_integer(BigInt::from(-4))),
            None
        );
        assert_eq!(
            rational_sqrt(&BigRational::zero()),
            Some(BigRational::zero())
        );
    }

    #[test]
    fn test_kronecker_matches_euler_criterion() {
        // odd primes: (a | p) = a^((p-1)/2) mod p
        for p in [3i64, 5, 7, 11, 13, 37, 97] {
            for a in -30..30i64 {
                let want = if a.rem_euclid(p) == 0 {
                    0
                } else {
                    let mut pow = 1i64;
                    let base = a.rem_euclid(p);
                    for _ in 0..(p - 1) / 2 {
                        pow = pow * base % p;
                    }
                    if pow == 1 {
                        1
                    } else {
                        -1
                    }
                };
                assert_eq!(kronecker(a, p), want, "({a} | {p})");
            }
        }
    }

    #[test]
    fn test_kronecker_structure() {
        // (a | 2) depends on a mod 8
        for a in [1i64, 7, 9, 15, 17] {
            assert_eq!(kronecker(a, 2), 1, "a = {a}");
        }
        for a in [3i64, 5, 11, 13] {
            assert_eq!(kronecker(a, 2), -1, "a = {a}");
        }
        assert_eq!(kronecker(4, 2), 0);
        // multiplicative in the bottom argument
        for a in [-7i64, -3, 5, 12] {
            for m in 1..20i64 {
                for n in 1..20i64 {
                    assert_eq!(
                        kronecker(a, m * n),
                        kronecker(a, m) * kronecker(a, n),
                        "a = {a}, m = {m}, n = {n}"
                    );
                }
            }
        }
        // and in the top argument for positive bottom
        for b in [3i64, 7, 15, 21] {
            for a in -12..12i64 {
                for c in -12..12i64 {
                    assert_eq!(kronecker(a * c, b), kronecker(a, b) * kronecker(c, b));
                }
            }
        }
    }
}
