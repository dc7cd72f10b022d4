//! Heegner points through the modular parametrization: positive definite
//! binary quadratic forms pick one CM point per ideal class, the q-series
//! sum phi(tau) = sum (a_n/n) q^n maps each into the uniformizing plane,
//! the class-group trace lands on a rational point, and the Weierstrass
//! function turns the trace back into coordinates that snap to exact
//! rationals. Heights of these points against twist L-values give the
//! Gross-Zagier consistency ratio.

use crate::arith::{kronecker, rat_to_f64, rational_sqrt, snap_to_rational};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::lseries::{central_value_from_an, detect_epsilon_from_an, CentralValue, Parity};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use std::f64::consts::PI;

/// Positive definite integral form a x^2 + b x y + c y^2, a > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Gauss-reduced representative of the proper equivalence class.
    pub fn reduce(&self) -> QuadForm {
        let (mut a, mut b, mut c) = (self.a as i128, self.b as i128, self.c as i128);
        loop {
            // translate b into (-a, a]
            if b > a || b <= -a {
                let two_a = 2 * a;
                let mut q = b.div_euclid(two_a);
                let mut b1 = b - two_a * q; // [0, 2a)
                if b1 > a {
                    b1 -= two_a;
                    q += 1;
                }
                c = a * q * q - b * q + c;
                b = b1;
            }
            if a > c {
                // invert: (a, b, c) -> (c, -b, a)
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            break;
        }
        if a == c && b < 0 {
            b = -b;
        }
        QuadForm {
            a: a as i64,
            b: b as i64,
            c: c as i64,
        }
    }

    pub fn is_reduced(&self) -> bool {
        let ok = -self.a < self.b && self.b <= self.a && self.a <= self.c;
        ok && (self.a != self.c || self.b >= 0)
    }

    /// Root in the upper half plane.
    pub fn root(&self) -> Complex64 {
        let d = self.discriminant() as f64;
        Complex64::new(
            -self.b as f64 / (2.0 * self.a as f64),
            (-d).sqrt() / (2.0 * self.a as f64),
        )
    }
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn g(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            g(b, a % b)
        }
    }
    g(g(a, b), c)
}

/// All primitive reduced forms of the given negative discriminant, sorted.
/// Their number is the form class number h(d).
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    if d >= 0 || d.rem_euclid(4) > 1 {
        return Err(Error::domain(
            "discriminant must be negative and 0 or 1 mod 4",
        ));
    }
    let amax = ((-d) as f64 / 3.0).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for a in 1..=amax {
        for b in (1 - a)..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b as i128 * b as i128 - d as i128;
            let den = 4 * a as i128;
            if num % den != 0 {
                continue;
            }
            let c = (num / den) as i64;
            if c < a || (a == c && b < 0) {
                continue;
            }
            if gcd3(a, b, c) != 1 {
                continue;
            }
            out.push(QuadForm { a, b, c });
        }
    }
    out.sort();
    Ok(out)
}

pub fn class_number(d: i64) -> Result<usize> {
    Ok(reduced_forms(d)?.len())
}

/// Fundamental discriminant test (field discriminants of imaginary
/// quadratic fields when negative).
pub fn is_fundamental(d: i64) -> bool {
    fn squarefree(mut n: i64) -> bool {
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return false;
                }
            }
            p += 1;
        }
        true
    }
    if d >= 0 || d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(-d),
        0 => {
            let q = d / 4;
            matches!(q.rem_euclid(4), 2 | 3) && squarefree(-q)
        }
        _ => false,
    }
}

/// The forms picking out one Heegner point of discriminant d per ideal
/// class at level n: each has n | a and b = r mod 2n.
#[derive(Debug, Clone)]
pub struct HeegnerSystem {
    pub d: i64,
    pub r: i64,
    pub forms: Vec<QuadForm>,
}

/// Find the Heegner system for (n, d): d must be an odd fundamental
/// discriminant, coprime to 2n, and a square mod 4n.
pub fn heegner_system(n: u64, d: i64) -> Result<HeegnerSystem> {
    if d >= 0 || !is_fundamental(d) || d % 2 == 0 {
        return Err(Error::domain(
            "need an odd fundamental discriminant below zero",
        ));
    }
    let ni = n as i64;
    if gcd3(d, 2 * ni, 2 * ni) != 1 {
        return Err(Error::domain("discriminant must be coprime to 2N"));
    }
    let four_n = 4 * n as i128;
    let r = (0..2 * ni)
        .find(|&r| (r as i128 * r as i128 - d as i128).rem_euclid(four_n) == 0)
        .ok_or_else(|| Error::domain("discriminant is not a square mod 4N"))?;
    let classes = reduced_forms(d)?;
    let h = classes.len();
    let mut reps: Vec<Option<QuadForm>> = vec![None; h];
    let mut found = 0usize;
    'search: for mult in 1i64..=4000 {
        let a = mult * ni;
        let step = 2 * ni;
        // b = r + k step over one period of residues mod 2a
        for k in 0..mult {
            let b = r + k * step;
            let num = b as i128 * b as i128 - d as i128;
            let den = 4 * a as i128;
            if num % den != 0 {
                continue;
            }
            let c128 = num / den;
            if c128 > i64::MAX as i128 {
                continue;
            }
            let form = QuadForm { a, b, c: c128 as i64 };
            let key = form.reduce();
            if let Some(idx) = classes.iter().position(|f| *f == key) {
                if reps[idx].is_none() {
                    // center b: smallest |b| keeping b = r mod 2n
                    let two_a = 2 * a;
                    let mut bb = b.rem_euclid(two_a);
                    if bb > a {
                        bb -= two_a;
                    }
                    let cc = ((bb as i128 * bb as i128 - d as i128) / den) as i64;
                    reps[idx] = Some(QuadForm { a, b: bb, c: cc });
                    found += 1;
                    if found == h {
                        break 'search;
                    }
                }
            }
        }
    }
    if found < h {
        return Err(Error::domain(
            "could not reach every ideal class with a level form",
        ));
    }
    Ok(HeegnerSystem {
        d,
        r,
        forms: reps.into_iter().map(|f| f.expect("filled")).collect(),
    })
}

/// phi(tau) = sum (a_n / n) e^{2 pi i n tau}, the uniformizer pullback.
pub fn modular_param_sum(an: &[i64], tau: Complex64) -> Complex64 {
    let q = (Complex64::i() * 2.0 * PI * tau).exp();
    let mut qp = Complex64::new(1.0, 0.0);
    let mut s = Complex64::new(0.0, 0.0);
    for (m, &a) in an.iter().enumerate().skip(1) {
        qp *= q;
        if a != 0 {
            s += qp * (a as f64 / m as f64);
        }
        if qp.norm_sqr() < 1e-36 {
            break;
        }
    }
    s
}

/// Complex AGM with the canonical branch (|a - g| <= |a + g| each step).
fn agm_complex(mut a: Complex64, mut b: Complex64) -> Complex64 {
    for _ in 0..80 {
        let am = (a + b) / 2.0;
        let mut gm = (a * b).sqrt();
        if (am - gm).norm() > (am + gm).norm() {
            gm = -gm;
        }
        if (am - gm).norm() <= 1e-15 * am.norm() {
            return am;
        }
        a = am;
        b = gm;
    }
    (a + b) / 2.0
}

/// Period lattice of y^2 = x^3 + Ax + B: omega1 real, omega2 completing a
/// basis with Im(omega2/omega1) > 0.
#[derive(Debug, Clone, Copy)]
pub struct Lattice {
    pub omega1: f64,
    pub omega2: Complex64,
    /// length of the shortest nonzero lattice vector
    pub rmin: f64,
}

pub fn period_lattice(short: &Curve) -> Result<Lattice> {
    if !short.is_short() {
        return Err(Error::domain("period lattice wants a short model"));
    }
    let a = rat_to_f64(short.short_a());
    let b = rat_to_f64(short.short_b());
    let (roots, complex_pair) = crate::lseries::depressed_cubic_roots(a, b);
    let (omega1, omega2) = match complex_pair {
        None => {
            let (e1, e2, e3) = (roots[0], roots[1], roots[2]);
            let w1 = PI / crate::lseries::agm((e1 - e2).sqrt(), (e1 - e3).sqrt());
            let w2 = PI / crate::lseries::agm((e1 - e3).sqrt(), (e2 - e3).sqrt());
            (w1, Complex64::new(0.0, w2))
        }
        Some((m, n)) => {
            let e1 = Complex64::new(roots[0], 0.0);
            let e2 = Complex64::new(m, n);
            let e3 = Complex64::new(m, -n);
            let w1 = PI / agm_complex((e1 - e3).sqrt(), (e1 - e2).sqrt());
            let w2 = Complex64::i() * PI / agm_complex((e1 - e3).sqrt(), (e2 - e3).sqrt());
            (w1.re, w2)
        }
    };
    let mut rmin = f64::INFINITY;
    for j in -2i32..=2 {
        for k in -2i32..=2 {
            if j == 0 && k == 0 {
                continue;
            }
            let v = omega2 * k as f64 + Complex64::new(omega1 * j as f64, 0.0);
            rmin = rmin.min(v.norm());
        }
    }
    Ok(Lattice {
        omega1,
        omega2,
        rmin,
    })
}

/// Weierstrass evaluator for a short model: Laurent series near zero plus
/// curve-law doubling, with lattice reduction of the argument.
pub struct WpContext {
    a: f64,
    coeffs: Vec<f64>,
    pub lattice: Lattice,
}

impl WpContext {
    pub fn new(short: &Curve) -> Result<WpContext> {
        let a = rat_to_f64(short.short_a());
        let b = rat_to_f64(short.short_b());
        // wp(z) = z^-2 + sum_{k>=2} c_k z^{2k-2}, c_2 = -A/5, c_3 = -B/7,
        // c_k = 3/((2k+1)(k-3)) sum c_m c_{k-m}
        let kmax = 44usize;
        let mut c = vec![0.0f64; kmax + 1];
        c[2] = -a / 5.0;
        c[3] = -b / 7.0;
        for k in 4..=kmax {
            let mut s = 0.0;
            for m in 2..=(k - 2) {
                s += c[m] * c[k - m];
            }
            c[k] = 3.0 * s / ((2 * k + 1) as f64 * (k - 3) as f64);
        }
        Ok(WpContext {
            a,
            coeffs: c,
            lattice: period_lattice(short)?,
        })
    }

    /// Nearest lattice translate of z.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let l = &self.lattice;
        let beta = z.im / l.omega2.im;
        let alpha = (z.re - beta * l.omega2.re) / l.omega1;
        let mut best = z
            - Complex64::new(alpha.round() * l.omega1, 0.0)
            - l.omega2 * beta.round();
        for j in -1i32..=1 {
            for k in -1i32..=1 {
                let cand = best - Complex64::new(j as f64 * l.omega1, 0.0) - l.omega2 * k as f64;
                if cand.norm() < best.norm() {
                    best = cand;
                }
            }
        }
        best
    }

    /// (x, y) with x = wp(z), y = wp'(z)/2, on y^2 = x^3 + Ax + B.
    /// None when z is a lattice point (the group identity).
    pub fn eval(&self, z: Complex64) -> Option<(Complex64, Complex64)> {
        let z = self.reduce(z);
        let rmin = self.lattice.rmin;
        if z.norm() < 1e-12 * rmin {
            return None;
        }
        let mut w = z;
        let mut halvings = 0u32;
        while w.norm() > 0.5 * rmin {
            w /= 2.0;
            halvings += 1;
        }
        let zz = w * w;
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        // Horner over even powers, highest first
        for k in (2..self.coeffs.len()).rev() {
            p = p * zz + self.coeffs[k];
            dp = dp * zz + (2 * k - 2) as f64 * self.coeffs[k];
        }
        let x = 1.0 / zz + p * zz;
        let wp_prime = -2.0 / (zz * w) + dp * w;
        let mut pt = (x, wp_prime / 2.0);
        for _ in 0..halvings {
            let (x, y) = pt;
            if y.norm() < 1e-12 * (1.0 + x.norm_sqr()) {
                // two-torsion doubles to the identity
                return None;
            }
            let lam = (3.0 * x * x + self.a) / (2.0 * y);
            let x2 = lam * lam - 2.0 * x;
            let y2 = lam * (x - x2) - y;
            pt = (x2, y2);
        }
        Some(pt)
    }
}

/// Trace of the Heegner points over the class group, evaluated on the
/// curve, with the snapped rational point on the original model when the
/// coordinates are rational to snapping precision.
#[derive(Debug, Clone)]
pub struct HeegnerTrace {
    pub d: i64,
    pub r: i64,
    pub class_number: usize,
    /// trace in the uniformizing plane (short-model lattice)
    pub z: Complex64,
    /// wp image of z: short-model coordinates
    pub x: Complex64,
    pub y: Complex64,
    /// |Im x| / (1 + |x|), the reality defect before snapping
    pub residual: f64,
    /// exact point on the input model, when snapping succeeded
    pub point: Option<Point>,
}

/// Compute the Heegner trace for discriminant d at level `conductor`.
pub fn heegner_point(e: &Curve, conductor: u64, d: i64) -> Result<HeegnerTrace> {
    let sys = heegner_system(conductor, d)?;
    let mut terms = 64usize;
    for f in &sys.forms {
        let im = f.root().im;
        let need = (34.0 / (2.0 * PI * im)).ceil() as usize + 40;
        terms = terms.max(need);
    }
    if terms > 2_000_000 {
        return Err(Error::domain("q-series would need too many terms"));
    }
    let an = crate::local::an_coefficients(e, terms)?;
    let mut z = Complex64::new(0.0, 0.0);
    for f in &sys.forms {
        z += modular_param_sum(&an, f.root());
    }
    // the q-series lives on the lattice of the input model; rescale into
    // the short model's plane
    let (short, map) = e.short_model();
    let u = rat_to_f64(map.scale());
    z /= u;
    let ctx = WpContext::new(&short)?;
    let (x, y, residual, point) = match ctx.eval(z) {
        None => (
            Complex64::new(f64::INFINITY, 0.0),
            Complex64::new(f64::INFINITY, 0.0),
            0.0,
            Some(Point::Infinity),
        ),
        Some((x, y)) => {
            let residual = x.im.abs() / (1.0 + x.norm());
            let snapped = if residual < 1e-6 {
                snap_short_point(&short, x, y).map(|p| map.backward(&p))
            } else {
                None
            };
            if let Some(p) = &snapped {
                debug_assert!(e.contains(p));
            }
            (x, y, residual, snapped)
        }
    };
    Ok(HeegnerTrace {
        d: sys.d,
        r: sys.r,
        class_number: sys.forms.len(),
        z,
        x,
        y,
        residual,
        point,
    })
}

/// Snap complex coordinates to an exact rational point on the short model.
fn snap_short_point(short: &Curve, x: Complex64, y: Complex64) -> Option<Point> {
    let xr = snap_to_rational(x.re, 1_000_000)?;
    let rhs = &xr * &xr * &xr + short.short_a() * &xr + short.short_b();
    let yr = rational_sqrt(&rhs)?;
    let yf = rat_to_f64(&yr);
    let y_signed = if (y.re - yf).abs() <= (y.re + yf).abs() {
        yr
    } else {
        -yr
    };
    let pt = Point::Affine(xr, y_signed);
    if short.contains(&pt) {
        Some(pt)
    } else {
        None
    }
}

/// The quadratic twist by d of a model with a1 = a3 = 0: the substitution
/// x -> dx, y -> d^2 y scaled back to y^2 = x^3 + d a2 x^2 + d^2 a4 x +
/// d^3 a6.
pub fn twist_curve(e: &Curve, d: i64) -> Result<Curve> {
    let [a1, a2, a3, a4, a6] = e.a_invariants();
    if !a1.is_zero() || !a3.is_zero() {
        return Err(Error::domain("twisting needs a model with a1 = a3 = 0"));
    }
    if d == 0 {
        return Err(Error::domain("twist by zero"));
    }
    let d = BigInt::from(d);
    Curve::new(
        BigInt::zero(),
        a2 * &d,
        BigInt::zero(),
        a4 * (&d * &d),
        a6 * (&d * &d * &d),
    )
}

/// Coefficients of the quadratic twist by d: a_n times the Kronecker
/// character (d | n). Valid for fundamental d coprime to the conductor.
pub fn twisted_an(an: &[i64], d: i64) -> Vec<i64> {
    an.iter()
        .enumerate()
        .map(|(n, &a)| kronecker(d, n as i64) as i64 * a)
        .collect()
}

/// One discriminant's row of the Gross-Zagier comparison.
#[derive(Debug, Clone)]
pub struct GzRow {
    pub d: i64,
    pub class_number: usize,
    /// half the unit count of the CM order: 3 at -3, 2 at -4, else 1
    pub units: u64,
    pub twist_conductor: u64,
    pub l_twist: f64,
    pub point: Point,
    pub height: f64,
    /// L(E^(d), 1) u^2 sqrt|d| / height: constant in d when the height
    /// formula holds
    pub ratio: f64,
}

/// The Gross-Zagier consistency scan: Heegner point heights against twist
/// central values across several discriminants.
pub fn gross_zagier_scan(e: &Curve, conductor: u64, discs: &[i64]) -> Result<Vec<GzRow>> {
    let base_probe = crate::lseries::detect_epsilon(e, conductor, None)?;
    if base_probe.reading != Some(Parity::Odd) {
        return Err(Error::domain(
            "the trace construction needs odd functional-equation sign",
        ));
    }
    let mut rows = Vec::with_capacity(discs.len());
    for &d in discs {
        let trace = heegner_point(e, conductor, d)?;
        let point = trace
            .point
            .clone()
            .ok_or_else(|| Error::domain(format!("snap failed for discriminant {d}")))?;
        let height = crate::heights::canonical_height(e, &point)?;
        let twist_conductor = conductor
            .checked_mul((d * d) as u64)
            .ok_or_else(|| Error::domain("twist conductor overflows"))?;
        let m = crate::lseries::default_terms(twist_conductor, 1.0);
        let base_an = crate::local::an_coefficients(e, m)?;
        let tw = twisted_an(&base_an, d);
        let probe = detect_epsilon_from_an(&tw, twist_conductor);
        if probe.reading != Some(Parity::Even) {
            return Err(Error::domain(format!(
                "twist by {d} did not read as even sign"
            )));
        }
        let cv: CentralValue = central_value_from_an(&tw, twist_conductor, Parity::Even);
        let units = match d {
            -3 => 3,
            -4 => 2,
            _ => 1,
        };
        let ratio = if height > 1e-12 {
            cv.l_value * (units * units) as f64 * ((-d) as f64).sqrt() / height
        } else {
            f64::NAN
        };
        rows.push(GzRow {
            d,
            class_number: trace.class_number,
            units,
            twist_conductor,
            l_twist: cv.l_value,
            point,
            height,
            ratio,
        });
    }
    Ok(rows)
}

/// Relative spread (max - min) / mean of the finite ratios.
pub fn ratio_spread(rows: &[GzRow]) -> f64 {
    let vals: Vec<f64> = rows.iter().map(|r| r.ratio).filter(|r| r.is_finite()).collect();
    if vals.len() < 2 {
        return f64::NAN;
    }
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    let max = vals.iter().cloned().fold(f64::MIN, f64::max);
    let min = vals.iter().cloned().fold(f64::MAX, f64::min);
    (max - min) / mean.abs()
}

/// Normalized pairing determinant of two points: near zero exactly when
/// they sit on a common one-dimensional line in the lattice of rational
/// points.
pub fn collinearity_defect(e: &Curve, p: &Point, q: &Point) -> Result<f64> {
    let hp = crate::heights::height_pairing(e, p, p)?;
    let hq = crate::heights::height_pairing(e, q, q)?;
    let hpq = crate::heights::height_pairing(e, p, q)?;
    if hp == 0.0 || hq == 0.0 {
        return Ok(0.0);
    }
    Ok((hp * hq - hpq * hpq) / (hp * hq))
}
