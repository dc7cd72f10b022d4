//! Elliptic curves over Q in long Weierstrass form
//!
//! ```text
//! y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
//! ```
//!
//! with exact rational point arithmetic. Every curve carries its derived
//! short form y^2 = x^3 + Ax + B (rational A, B via completing the square
//! and the cube); `short_model` clears denominators with a (u^4, u^6)
//! scaling and hands back the point map, so integral-model-only operations
//! (discriminant core, naive heights, reduction mod p) have a canonical
//! target.

use crate::arith::{factor_u64, fmt_rational, ln_big};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Infinity,
    Affine(BigRational, BigRational),
}

impl Point {
    pub fn affine(x: impl Into<BigRational>, y: impl Into<BigRational>) -> Point {
        Point::Affine(x.into(), y.into())
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::Affine(
            BigRational::from_integer(BigInt::from(x)),
            BigRational::from_integer(BigInt::from(y)),
        )
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, y) => Some((x, y)),
        }
    }

    /// Naive height: log max(|num x|, |den x|); zero at infinity.
    pub fn naive_height(&self) -> f64 {
        match self {
            Point::Infinity => 0.0,
            Point::Affine(x, _) => {
                let n = ln_big(x.numer());
                let d = ln_big(x.denom());
                n.max(d).max(0.0)
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine(x, y) => write!(f, "({}, {})", fmt_rational(x), fmt_rational(y)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    a1: BigInt,
    a2: BigInt,
    a3: BigInt,
    a4: BigInt,
    a6: BigInt,
    short_a: BigRational,
    short_b: BigRational,
}

/// Change of coordinates from a long model onto its short integral model:
/// x' = u^2 (x + shift), y' = u^3 (y + (a1 x + a3)/2).
#[derive(Debug, Clone)]
pub struct ShortMap {
    u: BigRational,
    shift: BigRational,
    a1: BigInt,
    a3: BigInt,
}

impl ShortMap {
    /// The u with x_short = u^2 (x + shift): lengths on the short model are
    /// 1/u times lengths on the source model.
    pub fn scale(&self) -> &BigRational {
        &self.u
    }

    pub fn forward(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let u2 = &self.u * &self.u;
                let u3 = &u2 * &self.u;
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let ys = y + &half * (BigRational::from_integer(self.a1.clone()) * x
                    + BigRational::from_integer(self.a3.clone()));
                Point::Affine(u2 * (x + &self.shift), u3 * ys)
            }
        }
    }

    pub fn backward(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(xs, ys) => {
                let u2 = &self.u * &self.u;
                let u3 = &u2 * &self.u;
                let x = xs / u2 - &self.shift;
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let y = ys / u3
                    - half
                        * (BigRational::from_integer(self.a1.clone()) * &x
                            + BigRational::from_integer(self.a3.clone()));
                Point::Affine(x, y)
            }
        }
    }
}

impl Curve {
    /// Long Weierstrass model; rejects singular input.
    pub fn new(
        a1: impl Into<BigInt>,
        a2: impl Into<BigInt>,
        a3: impl Into<BigInt>,
        a4: impl Into<BigInt>,
        a6: impl Into<BigInt>,
    ) -> Result<Curve> {
        let (a1, a2, a3, a4, a6) = (a1.into(), a2.into(), a3.into(), a4.into(), a6.into());
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = 2 * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + 4 * &a6;
        let c4: BigInt = &b2 * &b2 - 24 * &b4;
        let b2_cubed: BigInt = &b2 * &b2 * &b2;
        let c6: BigInt = -b2_cubed + 36 * &b2 * &b4 - 216 * &b6;
        let short_a = BigRational::new(-c4, BigInt::from(48));
        let short_b = BigRational::new(-c6, BigInt::from(864));
        let four = BigRational::from_integer(BigInt::from(4));
        let twenty_seven = BigRational::from_integer(BigInt::from(27));
        let disc = four * short_a.pow(3) + twenty_seven * short_b.pow(2);
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(Curve {
            a1,
            a2,
            a3,
            a4,
            a6,
            short_a,
            short_b,
        })
    }

    /// y^2 = x^3 + Ax + B with integer coefficients.
    pub fn short(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Curve> {
        Curve::new(0, 0, 0, a, b)
    }

    pub fn a_invariants(&self) -> [&BigInt; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn short_a(&self) -> &BigRational {
        &self.short_a
    }

    pub fn short_b(&self) -> &BigRational {
        &self.short_b
    }

    pub fn is_short(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero()
    }

    pub fn is_integral_short(&self) -> bool {
        self.is_short()
    }

    /// 4A^3 + 27B^2 on a short integral model.
    pub fn disc_core(&self) -> Result<BigInt> {
        if !self.is_short() {
            return Err(Error::NonIntegralModel);
        }
        let a = &self.a4;
        let b = &self.a6;
        Ok(4 * a * a * a + 27 * b * b)
    }

    /// Discriminant convention used throughout: -16 (4A^3 + 27B^2).
    pub fn discriminant(&self) -> Result<BigInt> {
        Ok(-16 * self.disc_core()?)
    }

    /// Height of the curve: max(4|A|^3, 27 B^2) on a short integral model.
    pub fn height(&self) -> Result<BigInt> {
        if !self.is_short() {
            return Err(Error::NonIntegralModel);
        }
        let a = self.a4.abs();
        let b = &self.a6;
        let ha: BigInt = 4 * &a * &a * &a;
        let hb: BigInt = 27 * b * b;
        Ok(ha.max(hb))
    }

    /// j = 1728 * 4A^3 / (4A^3 + 27B^2), exact.
    pub fn j_invariant(&self) -> BigRational {
        let four = BigRational::from_integer(BigInt::from(4));
        let a3 = self.short_a.pow(3);
        let num = BigRational::from_integer(BigInt::from(1728)) * &four * &a3;
        let den = four * a3 + BigRational::from_integer(BigInt::from(27)) * self.short_b.pow(2);
        num / den
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let a1 = BigRational::from_integer(self.a1.clone());
                let a2 = BigRational::from_integer(self.a2.clone());
                let a3 = BigRational::from_integer(self.a3.clone());
                let a4 = BigRational::from_integer(self.a4.clone());
                let a6 = BigRational::from_integer(self.a6.clone());
                let lhs = y * y + a1 * x * y + a3 * y;
                let rhs = x * x * x + a2 * x * x + a4 * x + a6;
                lhs == rhs
            }
        }
    }

    /// -(x, y) = (x, -y - a1 x - a3).
    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let a1 = BigRational::from_integer(self.a1.clone());
                let a3 = BigRational::from_integer(self.a3.clone());
                Point::Affine(x.clone(), -y - a1 * x - a3)
            }
        }
    }

    /// Chord-tangent sum; rejects points not on the curve.
    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::OffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1) = match p {
            Point::Infinity => return q.clone(),
            Point::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            Point::Infinity => return p.clone(),
            Point::Affine(x, y) => (x, y),
        };
        let a1 = BigRational::from_integer(self.a1.clone());
        let a2 = BigRational::from_integer(self.a2.clone());
        let a3 = BigRational::from_integer(self.a3.clone());
        let a4 = BigRational::from_integer(self.a4.clone());

        let lambda: BigRational;
        if x1 == x2 {
            // Either Q = -P (vertical chord) or a tangent doubling.
            if (y1 + y2 + &a1 * x1 + &a3).is_zero() {
                return Point::Infinity;
            }
            let num = BigRational::from_integer(BigInt::from(3)) * x1 * x1
                + BigRational::from_integer(BigInt::from(2)) * &a2 * x1
                + &a4
                - &a1 * y1;
            let den = BigRational::from_integer(BigInt::from(2)) * y1 + &a1 * x1 + &a3;
            lambda = num / den;
        } else {
            lambda = (y2 - y1) / (x2 - x1);
        }
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &a1 * &lambda - &a2 - x1 - x2;
        let y3 = -(&lambda + &a1) * &x3 - &nu - &a3;
        Point::Affine(x3, y3)
    }

    /// [n]P by double-and-add; [0]P = O, [-n]P = -[n]P.
    pub fn mul(&self, n: i64, p: &Point) -> Result<Point> {
        if !self.contains(p) {
            return Err(Error::OffCurve);
        }
        Ok(self.mul_unchecked(n, p))
    }

    pub(crate) fn mul_unchecked(&self, n: i64, p: &Point) -> Point {
        if n == 0 || p.is_infinity() {
            return Point::Infinity;
        }
        let (mut k, base) = if n < 0 {
            (n.unsigned_abs(), self.neg(p))
        } else {
            (n as u64, p.clone())
        };
        let mut acc = Point::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.add_unchecked(&pow, &pow);
            }
        }
        acc
    }

    /// Short integral model isomorphic over Q, together with the point map.
    /// Denominators of (A, B) are cleared by the least u with u^4 A and
    /// u^6 B integral.
    pub fn short_model(&self) -> (Curve, ShortMap) {
        let b2 = &self.a1 * &self.a1 + 4 * &self.a2;
        let shift = BigRational::new(b2, BigInt::from(12));
        // Denominators divide 48 and 864, so u64 factoring is safe.
        let den_a = self.short_a.denom().to_u64().expect("denominator fits u64");
        let den_b = self.short_b.denom().to_u64().expect("denominator fits u64");
        let mut u = BigInt::one();
        let mut need: Vec<(u64, u32)> = Vec::new();
        for (p, e) in factor_u64(den_a) {
            need.push((p, (e + 3) / 4));
        }
        for (p, e) in factor_u64(den_b) {
            let k = (e + 5) / 6;
            if let Some(entry) = need.iter_mut().find(|(q, _)| *q == p) {
                entry.1 = entry.1.max(k);
            } else {
                need.push((p, k));
            }
        }
        for (p, k) in need {
            u *= BigInt::from(p).pow(k);
        }
        let u = BigRational::from_integer(u);
        let u4 = u.pow(4);
        let u6 = u.pow(6);
        let a = (&self.short_a * u4).to_integer();
        let b = (&self.short_b * u6).to_integer();
        let short = Curve::short(a, b).expect("scaling preserves nonsingularity");
        let map = ShortMap {
            u,
            shift,
            a1: self.a1.clone(),
            a3: self.a3.clone(),
        };
        (short, map)
    }

    /// The short integral model alone (j-invariant preserved).
    pub fn to_short_form(&self) -> Curve {
        self.short_model().0
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &BigInt, sym: &str, first: bool| -> String {
            if c.is_zero() {
                return String::new();
            }
            let sign = if c.is_negative() {
                " - "
            } else if first {
                ""
            } else {
                " + "
            };
            let mag = c.abs();
            if mag.is_one() && !sym.is_empty() {
                format!("{sign}{sym}")
            } else if sym.is_empty() {
                format!("{sign}{mag}")
            } else {
                format!("{sign}{mag}{sym}")
            }
        };
        let mut lhs = "y^2".to_string();
        lhs += &term(&self.a1, "xy", false);
        lhs += &term(&self.a3, "y", false);
        let mut rhs = "x^3".to_string();
        rhs += &term(&self.a2, "x^2", false);
        rhs += &term(&self.a4, "x", false);
        rhs += &term(&self.a6, "", false);
        write!(f, "{lhs} = {rhs}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn test_singular_rejected() {
        assert!(Curve::short(0, 0).is_err());
        assert!(Curve::short(-3, 2).is_err()); // 4*(-27) + 27*4 = 0
        assert!(Curve::short(-1, 0).is_ok());
    }

    #[test]
    fn test_double_on_mordell_curve() {
        // y^2 = x^3 - 2, P = (3, 5): tangent doubling lands at
        // (129/100, -383/1000). Checked against the chord-tangent formulas
        // by hand: lambda = 27/10.
        let e = Curve::short(0, -2).unwrap();
        let p = Point::from_ints(3, 5);
        assert!(e.contains(&p));
        let two_p = e.add(&p, &p).unwrap();
        assert_eq!(two_p, Point::Affine(rat(129, 100), rat(-383, 1000)));
        assert!(e.contains(&two_p));
        assert_eq!(e.mul(2, &p).unwrap(), two_p);
    }

    #[test]
    fn test_add_identities() {
        let e = Curve::short(0, -2).unwrap();
        let p = Point::from_ints(3, 5);
        let o = Point::Infinity;
        assert_eq!(e.add(&p, &o).unwrap(), p);
        assert_eq!(e.add(&o, &p).unwrap(), p);
        assert_eq!(e.add(&p, &e.neg(&p)).unwrap(), o);
        assert_eq!(e.mul(0, &p).unwrap(), o);
        assert_eq!(e.mul(-1, &p).unwrap(), e.neg(&p));
    }

    #[test]
    fn test_two_torsion_doubles_to_infinity() {
        // (0, 0) on y^2 = x^3 - x has order 2.
        let e = Curve::short(-1, 0).unwrap();
        let t = Point::from_ints(0, 0);
        assert!(e.contains(&t));
        assert_eq!(e.add(&t, &t).unwrap(), Point::Infinity);
    }

    #[test]
    fn test_long_model_arithmetic() {
        // y^2 + y = x^3 - x (conductor 37): (0, 0) is a non-torsion point;
        // small multiples from the chord-tangent law directly.
        let e = Curve::new(0, 0, 1, -1, 0).unwrap();
        let p = Point::from_ints(0, 0);
        assert!(e.contains(&p));
        let p2 = e.mul(2, &p).unwrap();
        // 2P: lambda = (3x^2 + a4 - a1 y)/(2y + a3) = -1/1 = -1;
        // x3 = 1 - 0 - 0 = 1, y3 = -(-1)(1) - 0 - 1 = 0.
        assert_eq!(p2, Point::from_ints(1, 0));
        let p3 = e.mul(3, &p).unwrap();
        assert_eq!(p3, Point::Affine(rat(-1, 1), rat(-1, 1)));
        let p4 = e.mul(4, &p).unwrap();
        assert_eq!(p4, Point::from_ints(2, -3));
        // associativity spot-check: (P + 2P) + 3P == P + (2P + 3P)
        let l = e.add(&e.add(&p, &p2).unwrap(), &p3).unwrap();
        let r = e.add(&p, &e.add(&p2, &p3).unwrap()).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn test_off_curve_rejected() {
        let e = Curve::short(0, -2).unwrap();
        let bad = Point::from_ints(1, 1);
        assert!(e.add(&bad, &Point::Infinity).is_err());
        assert!(e.mul(2, &bad).is_err());
    }

    #[test]
    fn test_short_form_scaling() {
        // y^2 + y = x^3 completes to y^2 = x^3 + 1/4, scaled to (0, 16).
        let e = Curve::new(0, 0, 1, 0, 0).unwrap();
        assert_eq!(*e.short_b(), rat(1, 4));
        let (s, map) = e.short_model();
        assert_eq!(s.a_invariants()[3], &BigInt::zero());
        assert_eq!(s.a_invariants()[4], &BigInt::from(16));
        assert_eq!(e.j_invariant(), s.j_invariant());
        // the point map carries curve points to curve points, both ways
        let p = Point::from_ints(0, 0); // on y^2 + y = x^3? 0 = 0: yes
        assert!(e.contains(&p));
        let ps = map.forward(&p);
        assert!(s.contains(&ps));
        assert_eq!(map.backward(&ps), p);
    }

    #[test]
    fn test_short_map_preserves_group_law() {
        let e = Curve::new(0, 0, 1, -1, 0).unwrap();
        let (s, map) = e.short_model();
        let p = Point::from_ints(0, 0);
        let q = e.mul(3, &p).unwrap();
        let sum = e.add(&p, &q).unwrap();
        let ps = map.forward(&p);
        let qs = map.forward(&q);
        assert!(s.contains(&ps) && s.contains(&qs));
        assert_eq!(s.add(&ps, &qs).unwrap(), map.forward(&sum));
    }

    #[test]
    fn test_disc_and_height() {
        let e = Curve::short(-1, 0).unwrap();
        assert_eq!(e.disc_core().unwrap(), BigInt::from(-4));
        assert_eq!(e.discriminant().unwrap(), BigInt::from(64));
        assert_eq!(e.height().unwrap(), BigInt::from(4));
        let f = Curve::short(0, 1).unwrap();
        assert_eq!(f.disc_core().unwrap(), BigInt::from(27));
        assert_eq!(f.height().unwrap(), BigInt::from(27));
        // long models refuse model-bound quantities
        let g = Curve::new(0, 0, 1, -1, 0).unwrap();
        assert!(g.disc_core().is_err());
        assert!(g.height().is_err());
    }

    #[test]
    fn test_j_invariant_special_values() {
        assert_eq!(
            Curve::short(1, 0).unwrap().j_invariant(),
            BigRational::from_i64(1728).unwrap()
        );
        assert_eq!(
            Curve::short(0, 1).unwrap().j_invariant(),
            BigRational::zero()
        );
    }

    #[test]
    fn test_naive_height() {
        assert_eq!(Point::Infinity.naive_height(), 0.0);
        let p = Point::Affine(rat(129, 100), rat(-383, 1000));
        assert!((p.naive_height() - (129f64).ln()).abs() < 1e-12);
        let q = Point::Affine(rat(1, 100), rat(0, 1));
        assert!((q.naive_height() - (100f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn test_huge_coefficient_curve_constructs() {
        // 57-digit a4 still constructs and computes j exactly.
        let a4: BigInt =
            "20067762415575526585033208209338542750930230312178956502".parse().unwrap();
        let a6: BigInt = "34481611795030556467032985690390720374855944359319180361266008296291939448732243429"
            .parse()
            .unwrap();
        let e = Curve::new(BigInt::one(), BigInt::from(-1), BigInt::one(), -a4, a6).unwrap();
        let j = e.j_invariant();
        assert!(!j.numer().is_zero());
    }

    #[test]
    fn test_display() {
        let e = Curve::new(1, -1, 1, -3, 3).unwrap();
        assert_eq!(e.to_string(), "y^2 + xy + y = x^3 - x^2 - 3x + 3");
        let s = Curve::short(0, -2).unwrap();
        assert_eq!(s.to_string(), "y^2 = x^3 - 2");
        assert_eq!(Point::from_ints(3, 5).to_string(), "(3, 5)");
        assert_eq!(Point::Infinity.to_string(), "O");
    }
}
