//! The family of short Weierstrass curves ordered by the height
//! max(4|A|^3, 27 B^2): enumeration of all minimal nonsingular members
//! below a bound, and aggregate statistics over them.

use crate::curve::Curve;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCurve {
    pub a: i64,
    pub b: i64,
    pub height: u64,
}

/// max(4|A|^3, 27 B^2); the enumeration keeps this within u64.
pub fn family_height(a: i64, b: i64) -> u64 {
    let ha = 4 * (a as i128).abs().pow(3);
    let hb = 27 * (b as i128).pow(2);
    ha.max(hb) as u64
}

/// A member is counted once: reject (A, B) when some prime has p^4 | A and
/// p^6 | B, since (A/p^4, B/p^6) is the same curve earlier in the ordering.
pub fn is_family_minimal(a: i64, b: i64) -> bool {
    if a == 0 && b == 0 {
        return false;
    }
    let bound = if a != 0 {
        (a.unsigned_abs() as f64).powf(0.25) as u64 + 1
    } else {
        (b.unsigned_abs() as f64).powf(1.0 / 6.0) as u64 + 1
    };
    for p in crate::arith::primes_up_to(bound.max(2)) {
        let p4 = (p as i128).pow(4);
        let p6 = (p as i128).pow(6);
        let div_a = a == 0 || (a as i128) % p4 == 0;
        let div_b = b == 0 || (b as i128) % p6 == 0;
        if div_a && div_b {
            return false;
        }
    }
    true
}

/// All minimal nonsingular members with height strictly below xmax,
/// ordered by (height, A, B).
pub fn enumerate_family(xmax: u64) -> Vec<FamilyCurve> {
    let mut out = Vec::new();
    if xmax == 0 {
        return out;
    }
    let x = (xmax - 1) as i128;
    let amax = {
        let mut a = ((x / 4) as f64).cbrt() as i64 + 1;
        while 4 * (a as i128).pow(3) >= xmax as i128 {
            a -= 1;
        }
        a.max(0)
    };
    let bmax = {
        let mut b = ((x / 27) as f64).sqrt() as i64 + 1;
        while 27 * (b as i128).pow(2) >= xmax as i128 {
            b -= 1;
        }
        b.max(0)
    };
    for a in -amax..=amax {
        for b in -bmax..=bmax {
            let disc = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
            if disc == 0 || !is_family_minimal(a, b) {
                continue;
            }
            out.push(FamilyCurve {
                a,
                b,
                height: family_height(a, b),
            });
        }
    }
    out.sort_by_key(|c| (c.height, c.a, c.b));
    out
}

/// Mean of a statistic over the family below xmax.
pub fn family_average(
    xmax: u64,
    mut stat: impl FnMut(i64, i64) -> Result<f64>,
) -> Result<(usize, f64)> {
    let fam = enumerate_family(xmax);
    if fam.is_empty() {
        return Err(Error::domain("no family members below the bound"));
    }
    let mut s = 0.0;
    for c in &fam {
        s += stat(c.a, c.b)?;
    }
    Ok((fam.len(), s / fam.len() as f64))
}

/// Fraction of the family where the predicate holds.
pub fn family_fraction(
    xmax: u64,
    mut pred: impl FnMut(i64, i64) -> Result<bool>,
) -> Result<(usize, f64)> {
    family_average(xmax, |a, b| Ok(if pred(a, b)? { 1.0 } else { 0.0 }))
}

/// Torsion structure counts across the family.
#[derive(Debug, Clone)]
pub struct TorsionCensus {
    pub total: usize,
    /// (structure label, count), labels sorted
    pub counts: Vec<(String, usize)>,
    pub average_order: f64,
    /// whether every observed group sits in the admissible list
    pub all_admissible: bool,
    /// how many groups were certified rather than bounded
    pub certified: usize,
}

pub fn torsion_census(xmax: u64, jobs: usize) -> Result<TorsionCensus> {
    let fam = enumerate_family(xmax);
    if fam.is_empty() {
        return Err(Error::domain("no family members below the bound"));
    }
    let jobs = jobs.max(1).min(fam.len());
    let mut slots: Vec<Option<Result<(String, u64, bool, bool)>>> =
        (0..fam.len()).map(|_| None).collect();
    if jobs <= 1 {
        for (i, c) in fam.iter().enumerate() {
            slots[i] = Some(census_item(c.a, c.b));
        }
    } else {
        std::thread::scope(|scope| {
            let mut rest: &mut [Option<Result<(String, u64, bool, bool)>>] = &mut slots;
            let mut start = 0usize;
            for w in 0..jobs {
                let len = (fam.len() - start).div_ceil(jobs - w);
                let (head, tail) = rest.split_at_mut(len);
                rest = tail;
                let fam = &fam;
                let lo = start;
                scope.spawn(move || {
                    for (off, slot) in head.iter_mut().enumerate() {
                        let c = &fam[lo + off];
                        *slot = Some(census_item(c.a, c.b));
                    }
                });
                start += len;
            }
        });
    }
    let mut counts = std::collections::BTreeMap::new();
    let mut order_sum = 0u64;
    let mut all_admissible = true;
    let mut certified = 0usize;
    for s in slots {
        let (label, order, adm, cert) = s.expect("filled")?;
        *counts.entry(label).or_insert(0usize) += 1;
        order_sum += order;
        all_admissible &= adm;
        certified += cert as usize;
    }
    Ok(TorsionCensus {
        total: fam.len(),
        counts: counts.into_iter().collect(),
        average_order: order_sum as f64 / fam.len() as f64,
        all_admissible,
        certified,
    })
}

fn census_item(a: i64, b: i64) -> Result<(String, u64, bool, bool)> {
    let e = Curve::short(a, b)?;
    let t = crate::torsion::torsion_subgroup(&e)?;
    Ok((
        t.to_string(),
        t.order,
        crate::torsion::mazur_admissible(&t.invariants),
        t.certified,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_enumeration_matches_brute_force() {
        let xmax = 5000u64;
        let fam = enumerate_family(xmax);
        let mut brute = Vec::new();
        for a in -200i64..=200 {
            for b in -200i64..=200 {
                let disc = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
                if disc == 0 {
                    continue;
                }
                let ha = 4 * (a as i128).abs().pow(3);
                let hb = 27 * (b as i128).pow(2);
                if ha.max(hb) >= xmax as i128 {
                    continue;
                }
                if !is_family_minimal(a, b) {
                    continue;
                }
                brute.push((a, b));
            }
        }
        assert_eq!(fam.len(), brute.len());
        let set: std::collections::BTreeSet<(i64, i64)> =
            fam.iter().map(|c| (c.a, c.b)).collect();
        for pair in brute {
            assert!(set.contains(&pair), "{pair:?} missing");
        }
    }

    #[test]
    fn test_small_family_by_hand() {
        // below 100: |A| <= 2 (4*27 >= 100), |B| <= 1 (27*4 >= 100), minus
        // the cusp (0,0); no nonminimal pairs this small
        let fam = enumerate_family(100);
        assert_eq!(fam.len(), 5 * 3 - 1);
        assert!(fam.iter().all(|c| c.height < 100));
        // ordered by height: the first members are B = 0 pure cubics
        assert_eq!((fam[0].a, fam[0].b), (-1, 0));
        assert_eq!((fam[1].a, fam[1].b), (1, 0));
        assert!(fam[0].height == 4 && fam[1].height == 4);
    }

    #[test]
    fn test_minimality_filter() {
        assert!(!is_family_minimal(16, 64)); // (1, 1) scaled by 2^(4,6)
        assert!(is_family_minimal(16, 32));
        assert!(!is_family_minimal(0, 64));
        assert!(is_family_minimal(0, 32));
        assert!(!is_family_minimal(-16, 0));
        assert!(is_family_minimal(-8, 0));
        assert!(!is_family_minimal(324, 729)); // p = 3: (4, 1) scaled
        assert!(!is_family_minimal(0, 0));
    }

    #[test]
    fn test_family_functionals() {
        let (n, frac) = family_fraction(500, |_, b| Ok(b == 0)).unwrap();
        assert!(n > 10);
        assert!(frac > 0.0 && frac < 1.0);
        let (_, avg_b) = family_average(500, |_, b| Ok(b as f64)).unwrap();
        // B -> -B is a bijection of the family (twist by -1 on x)
        assert!(avg_b.abs() < 1e-12);
        let (_, avg_a) = family_average(500, |a, _| Ok(a as f64)).unwrap();
        // not A-symmetric: the singular pairs (-3t^2, 2t^3) all have A < 0,
        // so removing them biases the mean of A upward
        assert!(avg_a > 0.0);
    }

    #[test]
    fn test_torsion_census_small() {
        let census = torsion_census(2000, 1).unwrap();
        assert_eq!(census.total, enumerate_family(2000).len());
        assert!(census.all_admissible);
        assert_eq!(
            census.counts.iter().map(|(_, c)| c).sum::<usize>(),
            census.total
        );
        assert!(census.average_order >= 1.0);
        // the family below 2000 contains curves with visible torsion:
        // y^2 = x^3 + 1 has full Z/6
        assert!(census.counts.iter().any(|(l, _)| l.contains('6')));
        assert!(census.certified == census.total, "small groups all certify");
    }

    #[test]
    fn test_census_jobs_agree() {
        let c1 = torsion_census(1200, 1).unwrap();
        let c3 = torsion_census(1200, 3).unwrap();
        assert_eq!(c1.total, c3.total);
        assert_eq!(c1.counts, c3.counts);
        assert_eq!(c1.certified, c3.certified);
    }
}
