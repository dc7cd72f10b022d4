//! Traceless 2x2 matrices F(x, y, z) = [[x, y+z], [y-z, -x]] under the
//! adjoint action of SL(2,R), their orbit classification by the form
//! delta = x^2 + y^2 - z^2, and the map omega sending F to exp(F) acting
//! on i in the upper half plane. The nilpotent cone delta = 0 splits into
//! the half cones z > 0 and z < 0, and omega restricted to the cone is
//! surjective with an explicit inverse.

use crate::error::{Error, Result};
use num_complex::Complex64;
use num_traits::Num;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitClass {
    Zero,
    /// delta = 0, z > 0: the orbit of S through the upper half cone
    NilpotentPlus,
    /// delta = 0, z < 0: the lower half cone
    NilpotentMinus,
    /// delta < 0: conjugate to a rotation generator
    Elliptic,
    /// delta > 0: conjugate to a diagonal generator
    Hyperbolic,
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OrbitClass::Zero => "zero",
            OrbitClass::NilpotentPlus => "nilpotent_plus",
            OrbitClass::NilpotentMinus => "nilpotent_minus",
            OrbitClass::Elliptic => "elliptic",
            OrbitClass::Hyperbolic => "hyperbolic",
        };
        f.write_str(s)
    }
}

impl<T: Clone + Num + std::ops::Neg<Output = T>> LieElement<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        LieElement { x, y, z }
    }

    pub fn zero() -> Self {
        LieElement::new(T::zero(), T::zero(), T::zero())
    }

    /// X = [[1,0],[0,-1]], a hyperbolic basis element.
    pub fn basis_x() -> Self {
        LieElement::new(T::one(), T::zero(), T::zero())
    }

    /// Y = [[0,1],[1,0]], hyperbolic.
    pub fn basis_y() -> Self {
        LieElement::new(T::zero(), T::one(), T::zero())
    }

    /// Z = [[0,1],[-1,0]], elliptic.
    pub fn basis_z() -> Self {
        LieElement::new(T::zero(), T::zero(), T::one())
    }

    /// S = (Y+Z)/2 = [[0,1],[0,0]], on the upper half cone.
    pub fn s_upper() -> Self {
        let half = T::one() / (T::one() + T::one());
        LieElement::new(T::zero(), half.clone(), half)
    }

    /// T = (Y-Z)/2 = [[0,0],[1,0]], on the lower half cone.
    pub fn t_lower() -> Self {
        let half = T::one() / (T::one() + T::one());
        LieElement::new(T::zero(), half.clone(), -half)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn matrix(&self) -> [[T; 2]; 2] {
        [
            [self.x.clone(), self.y.clone() + self.z.clone()],
            [self.y.clone() - self.z.clone(), -self.x.clone()],
        ]
    }

    /// -det of the matrix; its sign separates the adjoint orbits, and
    /// F^2 = delta * I.
    pub fn delta(&self) -> T {
        self.x.clone() * self.x.clone() + self.y.clone() * self.y.clone()
            - self.z.clone() * self.z.clone()
    }

    /// [F, G] = FG - GF, expressed back in the (x, y, z) coordinates.
    pub fn bracket(&self, o: &Self) -> Self {
        let two = T::one() + T::one();
        let x = two.clone() * (o.y.clone() * self.z.clone() - self.y.clone() * o.z.clone());
        let y = two.clone() * (self.x.clone() * o.z.clone() - o.x.clone() * self.z.clone());
        let z = two * (self.x.clone() * o.y.clone() - o.x.clone() * self.y.clone());
        LieElement::new(x, y, z)
    }

    /// Cartan involution, minus transpose: fixes z, flips the signs of x
    /// and y. It sends S to -T and T to -S.
    pub fn cartan(&self) -> Self {
        LieElement::new(-self.x.clone(), -self.y.clone(), self.z.clone())
    }

    /// Killing form 4 tr(FG) = 8 (x1 x2 + y1 y2 - z1 z2).
    pub fn killing(&self, o: &Self) -> T {
        let mut eight = T::one();
        for _ in 0..3 {
            eight = eight.clone() + eight;
        }
        eight
            * (self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone()
                - self.z.clone() * o.z.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        LieElement::new(
            self.x.clone() + o.x.clone(),
            self.y.clone() + o.y.clone(),
            self.z.clone() + o.z.clone(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        LieElement::new(
            c.clone() * self.x.clone(),
            c.clone() * self.y.clone(),
            c.clone() * self.z.clone(),
        )
    }

    /// g F g^{-1} for g with det exactly 1 (exact coefficient types).
    pub fn conjugate(&self, g: &[[T; 2]; 2]) -> Result<Self> {
        let det = g[0][0].clone() * g[1][1].clone() - g[0][1].clone() * g[1][0].clone();
        if det != T::one() {
            return Err(Error::domain("conjugating matrix must have det 1"));
        }
        let f = self.matrix();
        // g f
        let p = [
            [
                g[0][0].clone() * f[0][0].clone() + g[0][1].clone() * f[1][0].clone(),
                g[0][0].clone() * f[0][1].clone() + g[0][1].clone() * f[1][1].clone(),
            ],
            [
                g[1][0].clone() * f[0][0].clone() + g[1][1].clone() * f[1][0].clone(),
                g[1][0].clone() * f[0][1].clone() + g[1][1].clone() * f[1][1].clone(),
            ],
        ];
        // inverse of g is [[d, -b], [-c, a]]
        let m00 = p[0][0].clone() * g[1][1].clone() + p[0][1].clone() * (-g[1][0].clone());
        let m01 = p[0][0].clone() * (-g[0][1].clone()) + p[0][1].clone() * g[0][0].clone();
        let m10 = p[1][0].clone() * g[1][1].clone() + p[1][1].clone() * (-g[1][0].clone());
        let two = T::one() + T::one();
        Ok(LieElement::new(
            m00,
            (m01.clone() + m10.clone()) / two.clone(),
            (m01 - m10) / two,
        ))
    }
}

impl<T: Clone + Num + std::ops::Neg<Output = T> + PartialOrd> LieElement<T> {
    /// Orbit of F under conjugation. The delta = 0 comparison is exact,
    /// so cone inputs should be constructed with delta = 0 exactly.
    pub fn classify(&self) -> OrbitClass {
        let d = self.delta();
        if d < T::zero() {
            OrbitClass::Elliptic
        } else if d > T::zero() {
            OrbitClass::Hyperbolic
        } else if self.z > T::zero() {
            OrbitClass::NilpotentPlus
        } else if self.z < T::zero() {
            OrbitClass::NilpotentMinus
        } else {
            // delta = 0 and z = 0 forces x = y = 0
            OrbitClass::Zero
        }
    }
}

/// An element of SL(2,R).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GroupElement {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let g = GroupElement { a, b, c, d };
        if (g.det() - 1.0).abs() > 1e-9 {
            return Err(Error::domain("group element must have det 1"));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        GroupElement {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// (a tau + b) / (c tau + d).
    pub fn mobius(&self, tau: Complex64) -> Complex64 {
        (self.a * tau + self.b) / (self.c * tau + self.d)
    }

    /// g F g^{-1}, dividing by det to absorb rounding in g.
    pub fn adjoint(&self, f: &LieElement<f64>) -> LieElement<f64> {
        let m = f.matrix();
        let p = [
            [
                self.a * m[0][0] + self.b * m[1][0],
                self.a * m[0][1] + self.b * m[1][1],
            ],
            [
                self.c * m[0][0] + self.d * m[1][0],
                self.c * m[0][1] + self.d * m[1][1],
            ],
        ];
        let det = self.det();
        let m00 = (p[0][0] * self.d - p[0][1] * self.c) / det;
        let m01 = (-p[0][0] * self.b + p[0][1] * self.a) / det;
        let m10 = (p[1][0] * self.d - p[1][1] * self.c) / det;
        LieElement::new(m00, 0.5 * (m01 + m10), 0.5 * (m01 - m10))
    }
}

/// Closed-form exponential from F^2 = delta I:
/// delta > 0 gives cosh/sinh, delta < 0 cos/sin, and near zero both
/// scalar series are summed directly to avoid 0/0.
pub fn exp_map(f: &LieElement<f64>) -> GroupElement {
    let m = exp_matrix(f);
    GroupElement {
        a: m[0][0],
        b: m[0][1],
        c: m[1][0],
        d: m[1][1],
    }
}

pub fn exp_matrix(f: &LieElement<f64>) -> [[f64; 2]; 2] {
    let d = f.delta();
    let (c, s) = if d.abs() < 1e-8 {
        let c = 1.0 + d / 2.0 + d * d / 24.0 + d * d * d / 720.0;
        let s = 1.0 + d / 6.0 + d * d / 120.0 + d * d * d / 5040.0;
        (c, s)
    } else if d > 0.0 {
        let r = d.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-d).sqrt();
        (r.cos(), r.sin() / r)
    };
    let m = f.matrix();
    [
        [c + s * m[0][0], s * m[0][1]],
        [s * m[1][0], c + s * m[1][1]],
    ]
}

/// omega(F) = exp(F) . i, a point of the upper half plane.
pub fn omega(f: &LieElement<f64>) -> Complex64 {
    exp_map(f).mobius(Complex64::new(0.0, 1.0))
}

/// A nilpotent preimage of tau under omega.
///
/// On the cone exp F = I + F = [[1+x, u], [v, 1-x]] with u v = -x^2, and
/// omega(F) = (u(1-x) + v(1+x) + i) / ((1-x)^2 + v^2), so Im tau fixes
/// (1-x)^2 + v^2 = 1/Im tau =: R^2.
///
/// Preimages with x = 0 exist exactly on the line Im tau = 1 (v = 0,
/// upper triangular) and on the circle |tau - i/2| = 1/2 (u = 0, lower
/// triangular); both are checked first since |x| = 0 cannot be beaten.
/// Otherwise both roots x = 1 -+ sqrt(R^2 - v^2) are scanned over v on
/// each sign branch; the four branches' real-part residuals together
/// always bracket a zero, and among the verified crossings the one with
/// the smallest |x| is returned.
pub fn omega_inverse_nilpotent(tau: Complex64) -> Result<LieElement<f64>> {
    let eta = tau.im;
    let xi = tau.re;
    if !(eta > 0.0) || !eta.is_finite() || !xi.is_finite() {
        return Err(Error::domain("target must lie in the upper half plane"));
    }
    let accept = 1e-9 * (1.0 + tau.norm());
    // x = 0, v = 0: omega = u + i
    if (eta - 1.0).abs() < accept {
        let f = LieElement::new(0.0, 0.5 * xi, 0.5 * xi);
        if (omega(&f) - tau).norm() < accept {
            return Ok(f);
        }
    }
    // x = 0, u = 0: omega = (v + i)/(1 + v^2)
    if (xi * xi + eta * eta - eta).abs() < accept * eta {
        let v = xi / eta;
        let f = LieElement::new(0.0, 0.5 * v, -0.5 * v);
        if (omega(&f) - tau).norm() < accept {
            return Ok(f);
        }
    }
    let r = (1.0 / eta).sqrt();
    let target = xi / eta;
    // real part of omega minus target, as a function of v on one x-branch
    let residual = |v: f64, xs: f64| -> f64 {
        let x = 1.0 - xs * (r * r - v * v).max(0.0).sqrt();
        let u = -x * x / v;
        u * (1.0 - x) + v * (1.0 + x) - target
    };
    let mut grid = Vec::with_capacity(1200);
    let mut s = 1e-14;
    while s < 0.1 {
        grid.push(s);
        s *= 1.6;
    }
    let n = 1000;
    for k in 0..=n {
        grid.push(0.1 + 0.9 * (k as f64 / n as f64) * (1.0 - 1e-9));
    }
    let mut best: Option<LieElement<f64>> = None;
    for xs in [1.0f64, -1.0] {
        for sign in [1.0f64, -1.0] {
            let mut prev: Option<(f64, f64)> = None;
            for &sv in &grid {
                let v = sign * sv * r;
                let g = residual(v, xs);
                if !g.is_finite() {
                    prev = None;
                    continue;
                }
                if let Some((pv, pg)) = prev {
                    if (pg <= 0.0) != (g <= 0.0) {
                        // bisect the bracket
                        let (mut lo, mut hi) = (pv, v);
                        let mut glo = pg;
                        for _ in 0..120 {
                            let mid = 0.5 * (lo + hi);
                            let gm = residual(mid, xs);
                            if (glo <= 0.0) == (gm <= 0.0) {
                                lo = mid;
                                glo = gm;
                            } else {
                                hi = mid;
                            }
                        }
                        let v0 = 0.5 * (lo + hi);
                        let x = 1.0 - xs * (r * r - v0 * v0).max(0.0).sqrt();
                        let u = -x * x / v0;
                        let cand = LieElement::new(x, 0.5 * (u + v0), 0.5 * (u - v0));
                        let err = (omega(&cand) - tau).norm();
                        if err < accept
                            && best.as_ref().map(|b| x.abs() < b.x.abs()).unwrap_or(true)
                        {
                            best = Some(cand);
                        }
                    }
                }
                prev = Some((v, g));
            }
        }
    }
    best.ok_or_else(|| Error::domain("no nilpotent preimage located"))
}

/// Deterministic rational points on the cone x^2 + y^2 = z^2, built from
/// scaled Pythagorean triples.
pub fn pythagorean_cone_samples(
    seed: u64,
    count: usize,
) -> Vec<LieElement<num_rational::BigRational>> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n: i64 = rng.gen_range(1..=20);
        let m: i64 = n + rng.gen_range(1..=20);
        let num: i64 = {
            let v = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        };
        let den: i64 = rng.gen_range(1..=9);
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        let q = |k: i64| BigRational::from(BigInt::from(k));
        out.push(LieElement::new(
            t.clone() * q(m * m - n * n),
            t.clone() * q(2 * m * n),
            t * q(m * m + n * n),
        ));
    }
    out
}

/// All three defining relations of an sl2 triple, plus the Cartan
/// conditions theta(h) = -h, theta(e) = -f. The triple is accepted with
/// its raising and lowering members in either order, so both (X, S, T)
/// and (-X, -S, -T) pass.
pub fn ks_triple_check<T>(h: &LieElement<T>, s: &LieElement<T>, t: &LieElement<T>) -> bool
where
    T: Clone + Num + std::ops::Neg<Output = T>,
{
    let ordered = |h: &LieElement<T>, e: &LieElement<T>, f: &LieElement<T>| -> bool {
        let two = T::one() + T::one();
        h.bracket(e) == e.scale(&two)
            && h.bracket(f) == f.scale(&(-two.clone()))
            && e.bracket(f) == *h
            && h.cartan() == h.scale(&(-T::one()))
            && e.cartan() == f.scale(&(-T::one()))
    };
    ordered(h, s, t) || ordered(h, t, s)
}
