//! Canonical heights in the normalization hhat(P) = lim h(2^k P) / 4^k,
//! where h(x) = log max(|numerator|, |denominator|) of the x-coordinate.
//!
//! Doubling on y^2 = x^3 + Ax + B sends x = p/q (coprime) to Phi/Psi with
//!   Phi(p, q) = p^4 - 2Ap^2q^2 - 8Bpq^3 + A^2 q^4
//!   Psi(p, q) = 4q (p^3 + Apq^2 + Bq^3),
//! so h(2P) = 4 h(P) + log N(Phi, Psi on the normalized pair) - log g, with
//! g = gcd(Phi, Psi). Summing the telescope,
//!
//!   hhat(P) = h(P) + sum_k 4^{-(k-1)} [ log N_k - log g_k ].
//!
//! The N_k come from the real projective dynamics in floats (errors at step
//! k are damped by 4^{-k}, so doubles suffice). The g_k are integers
//! supported on primes of 256 (4A^3 + 27B^2)^2, because the resultant of the
//! two quartics is exactly that; each such prime is tracked p-adically at
//! fixed precision, and the valuation sequence v_p(g_k) is eventually
//! periodic (the orbit of doubling on the finite component data), so the
//! tail sums in closed form once a period is confirmed.

use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Real-series terms; 4^{-40} is far below double precision.
const REAL_STEPS: usize = 40;
/// Exact gcd-defect terms before the periodic tail takes over.
const PADIC_STEPS: usize = 32;
/// Longest period the tail detector will accept.
const MAX_PERIOD: usize = 8;

fn big_to_f64_scaled(n: &BigInt, shift: u64) -> f64 {
    (n >> shift).to_f64().unwrap_or(0.0)
}

/// Modular inverse of a mod m (m > 1, gcd(a, m) = 1).
fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "inverse of a non-unit");
    e.x.mod_floor(m)
}

struct PrimeTrack {
    p: BigInt,
    ln_p: f64,
    /// residues of the reduced pair mod p^prec
    rp: BigInt,
    rq: BigInt,
    modulus: BigInt,
    prec: u32,
    a_red: BigInt,
    b_red: BigInt,
    /// v_p(g_k) per step
    vals: Vec<u32>,
}

impl PrimeTrack {
    fn new(p: u64, v_bound: u32, n0: &BigInt, d0: &BigInt, a: &BigInt, b: &BigInt) -> PrimeTrack {
        let prec = PADIC_STEPS as u32 * v_bound + v_bound + 16;
        let pb = BigInt::from(p);
        let modulus = pb.pow(prec);
        PrimeTrack {
            ln_p: (p as f64).ln(),
            rp: n0.mod_floor(&modulus),
            rq: d0.mod_floor(&modulus),
            a_red: a.mod_floor(&modulus),
            b_red: b.mod_floor(&modulus),
            p: pb,
            modulus,
            prec,
            vals: Vec::with_capacity(PADIC_STEPS),
        }
    }

    /// Valuation of r as far as the current precision can see.
    fn val(&self, r: &BigInt) -> u32 {
        if r.is_zero() {
            return self.prec;
        }
        let mut v = 0;
        let mut r = r.clone();
        while (&r % &self.p).is_zero() {
            r /= &self.p;
            v += 1;
        }
        v
    }

    fn phi_psi(&self) -> (BigInt, BigInt) {
        let m = &self.modulus;
        let p2 = &self.rp * &self.rp % m;
        let q2 = &self.rq * &self.rq % m;
        let q3 = &q2 * &self.rq % m;
        let phi = (&p2 * &p2 - BigInt::from(2) * &self.a_red * &p2 * &q2
            - BigInt::from(8) * &self.b_red * &self.rp * &q3
            + &self.a_red * &self.a_red * &q2 * &q2)
            .mod_floor(m);
        let psi = (BigInt::from(4)
            * &self.rq
            * (&p2 * &self.rp + &self.a_red * &self.rp * &q2 + &self.b_red * &q3))
            .mod_floor(m);
        (phi, psi)
    }

    /// Replace the pair by (Phi/g, Psi/g) given this step's full g, and
    /// record v_p(g). g_here is v_p(g); g_unit is g / p^{v_p(g)} mod p^prec.
    fn advance(&mut self, phi: BigInt, psi: BigInt, v_here: u32, g_unit: &BigInt) {
        self.prec -= v_here;
        let shift = self.p.pow(v_here);
        self.modulus /= &shift;
        let inv_u = inv_mod_big(&(g_unit.mod_floor(&self.modulus)), &self.modulus);
        self.rp = (phi / &shift).mod_floor(&self.modulus) * &inv_u % &self.modulus;
        self.rq = (psi / &shift).mod_floor(&self.modulus) * &inv_u % &self.modulus;
        self.a_red = self.a_red.mod_floor(&self.modulus);
        self.b_red = self.b_red.mod_floor(&self.modulus);
        self.vals.push(v_here);
    }

    /// Closed-form tail of sum_{k >= K} v_p(g_k) 4^{-(k+1)} ln p, assuming
    /// the detected period continues.
    fn tail(&self) -> Result<f64> {
        let k = self.vals.len();
        for d in 1..=MAX_PERIOD {
            if 2 * d > k {
                break;
            }
            if self.vals[k - 2 * d..k - d] == self.vals[k - d..k] {
                let mut s = 0.0;
                for (j, &v) in self.vals[k - d..k].iter().enumerate() {
                    s += v as f64 * 0.25f64.powi((k + j + 1) as i32);
                }
                return Ok(s / (1.0 - 0.25f64.powi(d as i32)) * self.ln_p);
            }
        }
        Err(Error::HeightBudget {
            doublings: k,
            bits: self.prec as u64,
        })
    }
}

/// Canonical height of a rational point, model-independent; exactly 0 for
/// torsion.
pub fn canonical_height(e: &Curve, pt: &Point) -> Result<f64> {
    if !e.contains(pt) {
        return Err(Error::OffCurve);
    }
    if crate::torsion::order_at_most(e, pt, crate::torsion::MAX_POINT_ORDER).is_some() {
        return Ok(0.0);
    }
    let (short, map) = e.short_model();
    let sp = map.forward(pt);
    let (x, _) = sp.xy().expect("nontorsion point is affine");
    let n0 = x.numer().clone();
    let d0 = x.denom().clone();
    let a = short.short_a().to_integer();
    let b = short.short_b().to_integer();
    let disc_core = short.disc_core()?;

    // real projective series
    let bits = n0.bits().max(d0.bits());
    let shift = bits.saturating_sub(63);
    let (mut u, mut v) = (big_to_f64_scaled(&n0, shift), big_to_f64_scaled(&d0, shift));
    let norm = u.abs().max(v.abs());
    let h0 = crate::arith::ln_big(&n0.abs().max(d0.abs()));
    u /= norm;
    v /= norm;
    let (af, bf) = (
        crate::arith::rat_to_f64(&BigRational::from(a.clone())),
        crate::arith::rat_to_f64(&BigRational::from(b.clone())),
    );
    if !af.is_finite() || !bf.is_finite() {
        return Err(Error::domain("coefficients overflow the height iteration"));
    }
    let mut real_sum = 0.0;
    let mut weight = 0.25;
    for _ in 0..REAL_STEPS {
        let u2 = u * u;
        let v2 = v * v;
        let phi = u2 * u2 - 2.0 * af * u2 * v2 - 8.0 * bf * u * v * v2 + af * af * v2 * v2;
        let psi = 4.0 * v * (u2 * u + af * u * v2 + bf * v * v2);
        let n = phi.abs().max(psi.abs());
        if n == 0.0 || !n.is_finite() {
            return Err(Error::domain("height iteration hit a degenerate pair"));
        }
        real_sum += weight * n.ln();
        u = phi / n;
        v = psi / n;
        weight *= 0.25;
    }

    // gcd defect: primes of 256 (4A^3 + 27B^2)^2
    let fact = crate::arith::factor_big(&disc_core, 1_000_000, 6);
    if !fact.complete() {
        return Err(Error::domain(
            "cannot certify height: discriminant resists factorization",
        ));
    }
    let mut tracks: Vec<PrimeTrack> = Vec::new();
    let mut seen_two = false;
    for (p, exp) in &fact.factors {
        let pu = p.to_u64().ok_or_else(|| {
            Error::domain("discriminant has a prime factor beyond u64; height defect untrackable")
        })?;
        let v_bound = 2 * exp + if pu == 2 { 8 } else { 0 };
        seen_two |= pu == 2;
        tracks.push(PrimeTrack::new(pu, v_bound, &n0, &d0, &a, &b));
    }
    if !seen_two {
        tracks.push(PrimeTrack::new(2, 8, &n0, &d0, &a, &b));
    }

    let mut defect = 0.0;
    let mut weight = 0.25;
    for step in 0..PADIC_STEPS {
        let evals: Vec<(BigInt, BigInt)> = tracks.iter().map(|t| t.phi_psi()).collect();
        let vgs: Vec<u32> = tracks
            .iter()
            .zip(&evals)
            .map(|(t, (phi, psi))| t.val(phi).min(t.val(psi)))
            .collect();
        for (i, t) in tracks.iter().enumerate() {
            if vgs[i] >= t.prec {
                return Err(Error::HeightBudget {
                    doublings: step,
                    bits: t.prec as u64,
                });
            }
        }
        let mut log_g = 0.0;
        for (t, &vg) in tracks.iter().zip(&vgs) {
            log_g += vg as f64 * t.ln_p;
        }
        defect += weight * log_g;
        weight *= 0.25;
        let primes: Vec<BigInt> = tracks.iter().map(|t| t.p.clone()).collect();
        for i in 0..tracks.len() {
            let mut g_unit = BigInt::one();
            for (j, q) in primes.iter().enumerate() {
                if j != i {
                    g_unit *= q.pow(vgs[j]);
                }
            }
            let (phi, psi) = evals[i].clone();
            tracks[i].advance(phi, psi, vgs[i], &g_unit);
        }
    }
    let mut tail = 0.0;
    for t in &tracks {
        tail += t.tail()?;
    }

    Ok(h0 + real_sum - defect - tail)
}

/// Height pairing <P, Q> = (hhat(P+Q) - hhat(P) - hhat(Q)) / 2.
pub fn height_pairing(e: &Curve, p: &Point, q: &Point) -> Result<f64> {
    let s = e.add(p, q)?;
    Ok((canonical_height(e, &s)? - canonical_height(e, p)? - canonical_height(e, q)?) / 2.0)
}

/// Determinant of the height-pairing Gram matrix; 1.0 for an empty list.
pub fn regulator(e: &Curve, gens: &[Point]) -> Result<f64> {
    let n = gens.len();
    if n == 0 {
        return Ok(1.0);
    }
    let mut m = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = height_pairing(e, &gens[i], &gens[j])?;
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    Ok(det(&mut m))
}

fn det(m: &mut [Vec<f64>]) -> f64 {
    let n = m.len();
    let mut sign = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    sign * (0..n).map(|i| m[i][i]).product::<f64>()
}
