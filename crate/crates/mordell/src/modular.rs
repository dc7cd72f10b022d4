//! Exact q-expansions of E4, E6, Delta and j, numeric evaluation of j on
//! the upper half plane with a certified truncation tail, the thirteen
//! class-number-one CM points with their integer j-values, K-orbits and
//! nilpotent-cone sections with their omega images, a curve over Q with
//! prescribed j-invariant, and an evidence harness that snaps sampled j
//! values to rationals and runs the rank and central-value probes on the
//! resulting curves.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::sl2::{omega, omega_inverse_nilpotent, GroupElement, LieElement};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Laurent series in q with exact coefficients: the coefficient of
/// q^(start + k) is coeffs[k], and everything from q^(start + len) on is
/// unknown truncation error.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries {
    start: i64,
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn new(start: i64, coeffs: Vec<BigRational>) -> Self {
        QSeries { start, coeffs }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent one past the last known coefficient.
    pub fn known_until(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    pub fn coeff(&self, n: i64) -> BigRational {
        if n < self.start {
            return BigRational::zero();
        }
        let k = (n - self.start) as usize;
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Drop leading zero coefficients so coeffs[0] is the true leading
    /// term (precision shrinks accordingly).
    pub fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
        self
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let start = self.start.min(o.start);
        let until = self.known_until().min(o.known_until());
        let len = (until - start).max(0) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let n = start + k as i64;
            *c = self.coeff(n) + o.coeff(n);
        }
        QSeries { start, coeffs }
    }

    pub fn sub(&self, o: &QSeries) -> QSeries {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        QSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product; the result keeps min(len, o.len) coefficients,
    /// which is exactly how far the product is trustworthy.
    pub fn mul(&self, o: &QSeries) -> QSeries {
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        QSeries {
            start: self.start + o.start,
            coeffs,
        }
    }

    /// Multiplicative inverse to n coefficients; the leading coefficient
    /// must be nonzero (call normalized first).
    pub fn invert(&self, n: usize) -> Result<QSeries> {
        let a0 = self
            .coeffs
            .first()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::domain("cannot invert a series with zero leading term"))?;
        let n = n.min(self.coeffs.len());
        let inv0 = BigRational::one() / a0;
        let mut b = Vec::with_capacity(n);
        b.push(inv0.clone());
        for k in 1..n {
            let mut s = BigRational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b.push(-s * &inv0);
        }
        Ok(QSeries {
            start: -self.start,
            coeffs: b,
        })
    }

    /// The coefficients as integers; errors if any denominator is not 1.
    pub fn integer_coefficients(&self) -> Result<Vec<(i64, BigInt)>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.denom().is_one() {
                return Err(Error::domain("series has a non-integer coefficient"));
            }
            out.push((self.start + k as i64, c.numer().clone()));
        }
        Ok(out)
    }
}

fn sigma_series(terms: usize, power: u32, scale: i64) -> Vec<BigRational> {
    // coefficient of q^n is scale * sigma_power(n), n = 0 shifted to 1
    let mut sums = vec![BigInt::zero(); terms + 1];
    for d in 1..=terms {
        let dp = BigInt::from(d).pow(power);
        let mut m = d;
        while m <= terms {
            sums[m] += &dp;
            m += d;
        }
    }
    let mut coeffs = vec![BigRational::from(BigInt::one())];
    coeffs.extend(
        sums.into_iter()
            .skip(1)
            .map(|s| BigRational::from(s * BigInt::from(scale))),
    );
    coeffs
}

/// E4 = 1 + 240 sum sigma_3(n) q^n, exponents 0..=terms.
pub fn eisenstein4(terms: usize) -> QSeries {
    QSeries::new(0, sigma_series(terms, 3, 240))
}

/// E6 = 1 - 504 sum sigma_5(n) q^n.
pub fn eisenstein6(terms: usize) -> QSeries {
    QSeries::new(0, sigma_series(terms, 5, -504))
}

/// Delta = (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ..., exponents
/// 1..=terms.
pub fn delta_series(terms: usize) -> QSeries {
    let e4 = eisenstein4(terms);
    let e6 = eisenstein6(terms);
    let num = e4.mul(&e4).mul(&e4).sub(&e6.mul(&e6));
    num.scale(&BigRational::new(BigInt::one(), BigInt::from(1728)))
        .normalized()
}

/// j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ..., exponents
/// -1..=terms.
pub fn j_series(terms: usize) -> QSeries {
    let n = terms + 2;
    let e4 = eisenstein4(n);
    let e43 = e4.mul(&e4).mul(&e4);
    let delta = delta_series(n);
    e43.mul(&delta.invert(n).expect("delta starts with q"))
}

/// Float coefficient table of j for repeated evaluation.
pub struct JTable {
    coeffs: Vec<f64>, // c(-1), c(0), c(1), ...
}

#[derive(Debug, Clone, Copy)]
pub struct JEval {
    pub value: Complex64,
    /// rigorous bound on the dropped tail, from |c(n)| <= e^{4 pi sqrt n}
    pub tail: f64,
}

impl JTable {
    pub fn new(terms: usize) -> Self {
        let coeffs = j_series(terms)
            .integer_coefficients()
            .expect("j has integer coefficients")
            .into_iter()
            .map(|(_, c)| c.to_f64().expect("j coefficient fits f64 range"))
            .collect();
        JTable { coeffs }
    }

    pub fn terms(&self) -> usize {
        self.coeffs.len().saturating_sub(2)
    }

    pub fn eval(&self, tau: Complex64) -> Result<JEval> {
        if !(tau.im > 0.0) {
            return Err(Error::domain("j is defined on the upper half plane"));
        }
        let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
        let qn = q.norm();
        let t = self.terms() as f64;
        // tail sum_{n > T} e^{4 pi sqrt n} |q|^n, ratio bounded by
        // e^{2 pi / sqrt(T+1)} |q|
        let ratio = (2.0 * std::f64::consts::PI / (t + 1.0).sqrt()).exp() * qn;
        if ratio >= 0.99 {
            return Err(Error::domain(
                "Im tau too small for the truncation budget",
            ));
        }
        let lead = (4.0 * std::f64::consts::PI * (t + 1.0).sqrt()).exp() * qn.powf(t + 1.0);
        let tail = lead / (1.0 - ratio);
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().skip(1).rev() {
            acc = acc * q + c;
        }
        let value = acc + self.coeffs[0] / q;
        Ok(JEval { value, tail })
    }
}

/// One-shot j(tau) with the given number of q-terms.
pub fn j_eval(tau: Complex64, terms: usize) -> Result<JEval> {
    JTable::new(terms).eval(tau)
}

/// A CM point with class number one and its integer j-value.
#[derive(Debug, Clone)]
pub struct CmPoint {
    /// 1-based position in the list
    pub index: usize,
    pub tau: Complex64,
    pub j: i64,
    /// human-readable form of tau
    pub label: String,
}

/// The thirteen class-number-one CM points, ordered by |discriminant|.
pub fn cm_points() -> Vec<CmPoint> {
    let half = |m: i64, j: i64| ((0.5, 0.5 * (m as f64).sqrt()), format!("(1+i sqrt {m})/2"), j);
    let imag = |m: i64, j: i64| ((0.0, (m as f64).sqrt()), format!("i sqrt {m}"), j);
    let data = [
        half(3, 0),
        imag(1, 1728),
        half(7, -3375),
        imag(2, 8000),
        half(11, -32768),
        imag(3, 54000),
        imag(4, 287496),
        half(19, -884736),
        half(27, -12288000),
        imag(7, 16581375),
        half(43, -884736000),
        half(67, -147197952000),
        half(163, -262537412640768000),
    ];
    data.into_iter()
        .enumerate()
        .map(|(i, ((re, im), label, j))| CmPoint {
            index: i + 1,
            tau: Complex64::new(re, im),
            j,
            label: if (im - 2.0).abs() < 1e-12 && re == 0.0 {
                "2i".into()
            } else if (im - 1.0).abs() < 1e-12 && re == 0.0 {
                "i".into()
            } else {
                label
            },
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct CmCheck {
    pub index: usize,
    pub label: String,
    pub expected: i64,
    pub computed: Complex64,
    /// relative error, or absolute when the expected value is 0
    pub error: f64,
    pub pass: bool,
}

/// Evaluate j at all thirteen CM points and compare with the exact
/// integers: relative tolerance 1e-6, absolute 1e-4 at j = 0.
pub fn cm_table_verify(terms: usize) -> Vec<CmCheck> {
    let table = JTable::new(terms);
    cm_points()
        .into_iter()
        .map(|p| {
            let computed = table
                .eval(p.tau)
                .map(|e| e.value)
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
            let diff = (computed - p.j as f64).norm();
            let (error, pass) = if p.j == 0 {
                (diff, diff < 1e-4)
            } else {
                let rel = diff / (p.j as f64).abs();
                (rel, rel < 1e-6)
            };
            CmCheck {
                index: p.index,
                label: p.label,
                expected: p.j,
                computed,
                error,
                pass,
            }
        })
        .collect()
}

/// tau under the rotation k_theta = [[cos, sin], [-sin, cos]] for each
/// angle: the K-orbit of the k-th CM point.
pub fn k_orbit_sample(k: usize, angles: &[f64]) -> Result<Vec<Complex64>> {
    let points = cm_points();
    let p = points
        .get(k.wrapping_sub(1))
        .ok_or_else(|| Error::domain("CM index must be 1..=13"))?;
    Ok(angles
        .iter()
        .map(|&t| {
            let g = GroupElement {
                a: t.cos(),
                b: t.sin(),
                c: -t.sin(),
                d: t.cos(),
            };
            g.mobius(p.tau)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    /// fixed z = c: the circle x^2 + y^2 = c^2
    CircleC,
    /// fixed y = b: the hyperbola x^2 + b^2 = z^2
    HyperbolaD,
    /// fixed x = a: the hyperbola a^2 + y^2 = z^2
    HyperbolaE,
}

impl std::fmt::Display for ConeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConeKind::CircleC => "C",
            ConeKind::HyperbolaD => "D",
            ConeKind::HyperbolaE => "E",
        })
    }
}

/// A one-parameter section of the nilpotent cone through the anchor,
/// holding one coordinate of the anchor fixed.
#[derive(Debug, Clone)]
pub struct ConeSet {
    pub kind: ConeKind,
    /// CM index the anchor maps to under omega
    pub index: usize,
    pub anchor: LieElement<f64>,
}

/// The three cone sections through a nilpotent preimage of the k-th CM
/// point. k = 2 is excluded: its preimage is 0, which anchors nothing.
pub fn cone_sets(k: usize) -> Result<[ConeSet; 3]> {
    if k == 2 {
        return Err(Error::domain("index 2 has the zero preimage, no cone sections"));
    }
    let points = cm_points();
    let p = points
        .get(k.wrapping_sub(1))
        .ok_or_else(|| Error::domain("CM index must be 1..=13"))?;
    let anchor = omega_inverse_nilpotent(p.tau)?;
    if anchor.z.abs() < 1e-12 {
        // a nonzero nilpotent element always has z != 0
        return Err(Error::domain("degenerate anchor with c = 0"));
    }
    Ok([
        ConeSet {
            kind: ConeKind::CircleC,
            index: k,
            anchor: anchor.clone(),
        },
        ConeSet {
            kind: ConeKind::HyperbolaD,
            index: k,
            anchor: anchor.clone(),
        },
        ConeSet {
            kind: ConeKind::HyperbolaE,
            index: k,
            anchor,
        },
    ])
}

/// n points of the section and their omega images; the first entry is
/// always the anchor itself, so the CM point appears among the images.
pub fn image_sample(set: &ConeSet, n: usize, seed: u64) -> Vec<(LieElement<f64>, Complex64)> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let a = &set.anchor;
    let mut elems = Vec::with_capacity(n);
    elems.push(a.clone());
    for _ in 1..n {
        let f = match set.kind {
            ConeKind::CircleC => {
                let c = a.z;
                let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                LieElement::new(c * t.cos(), c * t.sin(), c)
            }
            ConeKind::HyperbolaD => {
                let b = a.y;
                if b.abs() < 1e-12 {
                    // degenerate section: the lines x = +-z
                    let s: f64 = rng.gen_range(-2.0..2.0);
                    let sgn = if a.x != 0.0 { (a.z / a.x).signum() } else { 1.0 };
                    LieElement::new(s, 0.0, sgn * s)
                } else {
                    let s: f64 = rng.gen_range(-2.5..2.5);
                    LieElement::new(b.abs() * s.sinh(), b, a.z.signum() * b.abs() * s.cosh())
                }
            }
            ConeKind::HyperbolaE => {
                let ax = a.x;
                if ax.abs() < 1e-12 {
                    let s: f64 = rng.gen_range(-2.0..2.0);
                    let sgn = if a.y != 0.0 { (a.z / a.y).signum() } else { 1.0 };
                    LieElement::new(0.0, s, sgn * s)
                } else {
                    let s: f64 = rng.gen_range(-2.5..2.5);
                    LieElement::new(ax, ax.abs() * s.sinh(), a.z.signum() * ax.abs() * s.cosh())
                }
            }
        };
        elems.push(f);
    }
    elems.into_iter().map(|f| {
        let w = omega(&f);
        (f, w)
    }).collect()
}

/// A curve over Q with the given j-invariant: y^2 = x^3 + 3j(1728-j) x +
/// 2j(1728-j)^2 cleared to integer coefficients, with the degenerate j
/// values mapped to y^2 = x^3 + 1 and y^2 = x^3 + x.
pub fn curve_from_j(j: &BigRational) -> Result<Curve> {
    if j.is_zero() {
        return Curve::short(0, 1);
    }
    if *j == BigRational::from(BigInt::from(1728)) {
        return Curve::short(1, 0);
    }
    let p = j.numer().clone();
    let q = j.denom().clone();
    let m = BigInt::from(1728) * &q - &p;
    let a = BigInt::from(3) * &p * &m * &q * &q;
    let b = BigInt::from(2) * &p * &m * &m * &q * &q * &q;
    Curve::new(
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        a,
        b,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// the K-orbit of the CM point
    Orbit,
    /// omega image of the circle section
    X,
    /// omega image of the fixed-y hyperbola section
    Y,
    /// omega image of the fixed-x hyperbola section
    Z,
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SetKind::Orbit => "orbit",
            SetKind::X => "X",
            SetKind::Y => "Y",
            SetKind::Z => "Z",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EvidenceItem {
    pub tau: Complex64,
    pub j_value: Complex64,
    pub j_tail: f64,
    /// j snapped to a nearby rational, when one exists within tolerance
    pub snapped: Option<BigRational>,
    pub curve: Option<Curve>,
    pub torsion: Option<String>,
    pub torsion_admissible: Option<bool>,
    /// rank surrogate from the partial-product scan
    pub slope: Option<f64>,
    pub conductor: Option<u64>,
    pub parity: Option<&'static str>,
    pub l_value: Option<f64>,
    pub l_derivative: Option<f64>,
    /// torsion structures of small quadratic twists, recording the model
    /// ambiguity in the curve choice
    pub twist_torsion: Vec<(i64, String)>,
    pub verdict: &'static str,
}

#[derive(Debug, Clone)]
pub struct EvidenceReport {
    pub header: String,
    pub set: SetKind,
    pub index: usize,
    pub items: Vec<EvidenceItem>,
}

pub struct HarnessConfig<'a> {
    pub budget: usize,
    pub seed: u64,
    /// scan depth for the rank surrogate
    pub xmax: u64,
    pub jobs: usize,
    pub snap_max_den: u64,
    pub snap_tol: f64,
    /// conductor lookup for curves the caller recognizes
    pub conductor_for: &'a dyn Fn(&Curve) -> Option<u64>,
}

impl Default for HarnessConfig<'static> {
    fn default() -> Self {
        HarnessConfig {
            budget: 6,
            seed: 1,
            xmax: 20_000,
            jobs: 1,
            snap_max_den: 10_000,
            snap_tol: 1e-8,
            conductor_for: &|_| None,
        }
    }
}

/// Samples tau in the chosen set, snaps j(tau) to rationals, builds the
/// corresponding curves and runs the torsion, rank-surrogate and (when a
/// conductor is known) central-value probes. Evidence only: no sample
/// can prove a statement quantified over infinitely many tau.
pub fn conjecture_harness(k: usize, kind: SetKind, cfg: &HarnessConfig) -> Result<EvidenceReport> {
    use rand::Rng;
    use rand::SeedableRng;
    if cfg.budget == 0 {
        return Err(Error::domain("budget must be positive"));
    }
    let taus: Vec<Complex64> = match kind {
        SetKind::Orbit => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut angles = vec![0.0];
            for _ in 1..cfg.budget {
                angles.push(rng.gen_range(0.0..std::f64::consts::TAU));
            }
            k_orbit_sample(k, &angles)?
        }
        SetKind::X | SetKind::Y | SetKind::Z => {
            let sets = cone_sets(k)?;
            let set = match kind {
                SetKind::X => &sets[0],
                SetKind::Y => &sets[1],
                _ => &sets[2],
            };
            image_sample(set, cfg.budget, cfg.seed)
                .into_iter()
                .map(|(_, tau)| tau)
                .collect()
        }
    };
    let table = JTable::new(120);
    let items = taus.into_iter().map(|tau| evidence_for(tau, &table, cfg)).collect();
    Ok(EvidenceReport {
        header: "evidence only: sampled tau with rational j; nothing here proves a statement \
                 about every curve in the set"
            .into(),
        set: kind,
        index: k,
        items,
    })
}

fn evidence_for(tau: Complex64, table: &JTable, cfg: &HarnessConfig) -> EvidenceItem {
    let mut item = EvidenceItem {
        tau,
        j_value: Complex64::new(f64::NAN, f64::NAN),
        j_tail: f64::NAN,
        snapped: None,
        curve: None,
        torsion: None,
        torsion_admissible: None,
        slope: None,
        conductor: None,
        parity: None,
        l_value: None,
        l_derivative: None,
        twist_torsion: Vec::new(),
        verdict: "inconclusive",
    };
    let je = match table.eval(tau) {
        Ok(e) => e,
        Err(_) => return item, // tau too close to the boundary
    };
    item.j_value = je.value;
    item.j_tail = je.tail;
    // snap only genuinely real j values
    let scale = 1.0 + je.value.norm();
    if je.value.im.abs() > cfg.snap_tol * scale + je.tail {
        item.verdict = "no_snap";
        return item;
    }
    let snapped = crate::arith::snap_to_rational(je.value.re, cfg.snap_max_den).filter(|r| {
        let back = crate::arith::rat_to_f64(r);
        (back - je.value.re).abs() <= cfg.snap_tol * scale + je.tail
    });
    let Some(j) = snapped else {
        item.verdict = "no_snap";
        return item;
    };
    item.snapped = Some(j.clone());
    let Ok(curve) = curve_from_j(&j) else {
        return item;
    };
    item.curve = Some(curve.clone());
    if let Ok(t) = crate::torsion::torsion_subgroup(&curve) {
        item.torsion_admissible = Some(crate::torsion::mazur_admissible(&t.invariants));
        item.torsion = Some(t.to_string());
    }
    for d in [-3i64, -2, -1, 2, 3] {
        if let Ok(tw) = crate::heegner::twist_curve(&curve, d) {
            if let Ok(t) = crate::torsion::torsion_subgroup(&tw) {
                item.twist_torsion.push((d, t.to_string()));
            }
        }
    }
    if let Ok(scan) = crate::lseries::bsd_scan(&curve, cfg.xmax, 24, cfg.jobs) {
        item.slope = Some(scan.slope);
    }
    if let Some(n) = (cfg.conductor_for)(&curve) {
        item.conductor = Some(n);
        if let Ok(cv) = crate::lseries::central_value(&curve, n, None, None) {
            item.parity = Some(match cv.parity {
                crate::lseries::Parity::Even => "even",
                crate::lseries::Parity::Odd => "odd",
            });
            item.l_value = Some(cv.l_value);
            item.l_derivative = cv.l_derivative;
        }
    }
    item.verdict = verdict(&item);
    item
}

/// Coherence of the probes. Loose thresholds: the slope estimator is
/// noisy by construction, and this can only ever be evidence.
fn verdict(item: &EvidenceItem) -> &'static str {
    if item.torsion_admissible == Some(false) {
        return "inconsistent";
    }
    let Some(slope) = item.slope else {
        return "inconclusive";
    };
    if item.conductor.is_some() && item.parity.is_none() {
        // sign detection failed: the central-value probe is unreadable
        return "inconclusive";
    }
    match item.parity {
        Some("even") => {
            let l = item.l_value.unwrap_or(f64::NAN);
            if !l.is_finite() {
                return "inconclusive";
            }
            if l.abs() > 1e-3 {
                if slope < 1.0 {
                    "consistent"
                } else {
                    "inconsistent"
                }
            } else if slope > 1.0 {
                "consistent"
            } else {
                "inconsistent"
            }
        }
        Some("odd") => {
            let l = item.l_derivative.unwrap_or(f64::NAN);
            if !l.is_finite() {
                return "inconclusive";
            }
            if l.abs() > 1e-3 {
                if slope > 0.3 && slope < 2.0 {
                    "consistent"
                } else {
                    "inconsistent"
                }
            } else if slope > 2.0 {
                "consistent"
            } else {
                "inconsistent"
            }
        }
        _ => {
            // no central values available: torsion and slope sanity only
            if slope.is_finite() && slope > -1.0 && slope < 30.0 {
                "consistent"
            } else {
                "inconclusive"
            }
        }
    }
}
