//! Independent finite-field oracle: brute-force counts of pairs
//! (A, B) ∈ SL₂(F_q)² with Aⁿ = Bᵐ = ϖ·Id for a scalar ϖ ∈ μ₂, total and
//! irreducible, compared against the motive pipeline evaluated at q.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::assembly::{r_kappa_motive, MotiveEngine};
use crate::counting::n_pi_enumerate;
use crate::eigcfg::{EigenConfig, Partition};
use crate::{Error, Result};

/// Parameters of one oracle run; rank is fixed at 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FfParams {
    pub q: u64,
    pub n: u64,
    pub m: u64,
}

const MAX_Q: u64 = 17;

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FfParams {
    /// Validates the full contract: q a feasible odd prime, n, m coprime, and
    /// F_q containing all 2n-th and 2m-th roots of unity (so that the
    /// characteristic-zero point count applies verbatim).
    pub fn new(q: u64, n: u64, m: u64) -> Result<Self> {
        let params = FfParams::new_without_field_check(q, n, m)?;
        let lcm = (2 * n).lcm(&(2 * m));
        if !(q - 1).is_multiple_of(lcm) {
            return Err(Error::FieldTooSmall { q, lcm });
        }
        Ok(params)
    }

    /// Skips only the root-of-unity condition; for diagnostics of fields that
    /// are too small (the measured counts then need not match predictions).
    pub fn new_without_field_check(q: u64, n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Invalid("n and m must be positive".into()));
        }
        if n.gcd(&m) != 1 {
            return Err(Error::NotCoprime(n, m));
        }
        if !is_prime(q) || q == 2 {
            return Err(Error::Invalid(format!("q = {q} is not an odd prime")));
        }
        if q > MAX_Q {
            return Err(Error::TooLarge(q));
        }
        Ok(FfParams { q, n, m })
    }
}

type Mat = [u64; 4];

const ID: Mat = [1, 0, 0, 1];

fn mat_mul(x: Mat, y: Mat, q: u64) -> Mat {
    [
        (x[0] * y[0] + x[1] * y[2]) % q,
        (x[0] * y[1] + x[1] * y[3]) % q,
        (x[2] * y[0] + x[3] * y[2]) % q,
        (x[2] * y[1] + x[3] * y[3]) % q,
    ]
}

fn mat_pow(mut x: Mat, mut k: u64, q: u64) -> Mat {
    let mut acc = ID;
    while k > 0 {
        if k & 1 == 1 {
            acc = mat_mul(acc, x, q);
        }
        x = mat_mul(x, x, q);
        k >>= 1;
    }
    acc
}

fn sl2_elements(q: u64) -> Vec<Mat> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    // det = ad − bc ≡ 1 (mod q)
                    if (a * d % q + q - b * c % q) % q == 1 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Bitmask over the q+1 projective points of the lines a matrix stabilizes.
fn invariant_line_mask(x: Mat, q: u64) -> u32 {
    let [a, b, c, d] = x;
    let mut mask = 0u32;
    for t in 0..q {
        // v = (1, t) maps to (a + b·t, c + d·t); invariant iff parallel.
        if ((a + b * t) * t % q + 2 * q - (c + d * t) % q).is_multiple_of(q) {
            mask |= 1 << t;
        }
    }
    if b == 0 {
        mask |= 1 << q; // v = (0, 1) maps to (b, d)
    }
    mask
}

/// The scalars ϖ with ϖ² = 1: the candidates for the common value Aⁿ = Bᵐ.
fn scalar_roots(q: u64) -> [u64; 2] {
    [1, q - 1]
}

struct OmegaBuckets {
    /// For each ϖ: (A-candidates, B-candidates) as invariant-line masks.
    buckets: Vec<(Vec<u32>, Vec<u32>)>,
}

fn collect(params: &FfParams) -> OmegaBuckets {
    let FfParams { q, n, m } = *params;
    let elements = sl2_elements(q);
    let mut buckets: Vec<(Vec<u32>, Vec<u32>)> =
        scalar_roots(q).map(|_| (Vec::new(), Vec::new())).into();
    for x in elements {
        let xn = mat_pow(x, n, q);
        let xm = mat_pow(x, m, q);
        for (wi, &w) in scalar_roots(q).iter().enumerate() {
            let scalar = [w, 0, 0, w];
            if xn == scalar || xm == scalar {
                let mask = invariant_line_mask(x, q);
                if xn == scalar {
                    buckets[wi].0.push(mask);
                }
                if xm == scalar {
                    buckets[wi].1.push(mask);
                }
            }
        }
    }
    OmegaBuckets { buckets }
}

/// Exhaustive count of pairs with Aⁿ = Bᵐ = ϖ·Id for some scalar ϖ ∈ μ₂.
pub fn count_pairs(params: &FfParams) -> u64 {
    collect(params)
        .buckets
        .iter()
        .map(|(a, b)| (a.len() * b.len()) as u64)
        .sum()
}

/// As `count_pairs`, restricted to pairs without a common invariant line.
pub fn count_irr_pairs(params: &FfParams) -> u64 {
    let mut total = 0u64;
    for (a_masks, b_masks) in collect(params).buckets {
        for &ma in &a_masks {
            for &mb in &b_masks {
                if ma & mb == 0 {
                    total += 1;
                }
            }
        }
    }
    total
}

/// Pipeline predictions: Σ_ϖ Σ_{π1,π2} N^{π1}(ϖ)·N^{π2}(ϖ)·[R_κ](q), and the
/// same restricted to admissible configurations with [R_κ^irr](q).
pub fn predicted_counts(params: &FfParams, engine: &mut MotiveEngine) -> Result<(BigInt, BigInt)> {
    let q = BigInt::from(params.q);
    let patterns = Partition::all_of_rank(2);
    let mut total = BigInt::from(0);
    let mut irr = BigInt::from(0);
    for a in 0..2u32 {
        for pi1 in &patterns {
            for pi2 in &patterns {
                let count =
                    n_pi_enumerate(params.n, 2, a, pi1) * n_pi_enumerate(params.m, 2, a, pi2);
                if count == 0 {
                    continue;
                }
                let cfg = EigenConfig::from_partitions(pi1, pi2)?;
                total += BigInt::from(count) * r_kappa_motive(&cfg)?.eval_at(&q);
                if cfg.admissible() {
                    let report = engine.config_report(&cfg)?;
                    irr += BigInt::from(count) * report.r_irr.eval_at(&q);
                }
            }
        }
    }
    Ok((total, irr))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_self_test() {
        for q in [3u64, 5, 7, 11, 13, 17] {
            for a in 1..q {
                // a^(q−1) = 1 via matrix powers of diag(a, a⁻¹)·... simplest:
                let mut acc = 1u64;
                for _ in 0..q - 1 {
                    acc = acc * a % q;
                }
                assert_eq!(acc, 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn sl2_order() {
        // |SL₂(F_q)| = q³ − q.
        assert_eq!(sl2_elements(3).len(), 24);
        assert_eq!(sl2_elements(5).len(), 120);
        assert_eq!(sl2_elements(13).len(), 2184);
    }

    #[test]
    fn params_validation() {
        assert!(FfParams::new(13, 2, 3).is_ok());
        assert_eq!(
            FfParams::new(7, 2, 3),
            Err(Error::FieldTooSmall { q: 7, lcm: 12 })
        );
        assert_eq!(
            FfParams::new(13, 3, 4),
            Err(Error::FieldTooSmall { q: 13, lcm: 24 })
        );
        assert_eq!(FfParams::new(19, 2, 3), Err(Error::TooLarge(19)));
        assert_eq!(FfParams::new(13, 2, 4), Err(Error::NotCoprime(2, 4)));
        assert!(FfParams::new_without_field_check(13, 3, 4).is_ok());
    }

    #[test]
    fn unknot_counts() {
        // A¹ = B¹ = ϖ·Id forces A = B = ±Id.
        let params = FfParams::new(13, 1, 1).unwrap();
        assert_eq!(count_pairs(&params), 2);
        assert_eq!(count_irr_pairs(&params), 0);
    }

    #[test]
    fn trefoil_counts_over_f13() {
        let params = FfParams::new(13, 2, 3).unwrap();
        assert_eq!(count_pairs(&params), 33672);
        assert_eq!(count_irr_pairs(&params), 24024);
        let mut engine = MotiveEngine::new();
        let (total, irr) = predicted_counts(&params, &mut engine).unwrap();
        assert_eq!(total, BigInt::from(33672));
        assert_eq!(irr, BigInt::from(24024));
    }

    #[test]
    fn oracle_agreement_small_range() {
        let mut engine = MotiveEngine::new();
        for q in [5u64, 7, 11, 13, 17] {
            for n in 1..=6u64 {
                for m in 1..=6u64 {
                    let Ok(params) = FfParams::new(q, n, m) else {
                        continue;
                    };
                    let measured_total = count_pairs(&params);
                    let measured_irr = count_irr_pairs(&params);
                    assert!(measured_irr <= measured_total);
                    let (ptotal, pirr) = predicted_counts(&params, &mut engine).unwrap();
                    assert_eq!(ptotal, BigInt::from(measured_total), "q={q} n={n} m={m}");
                    assert_eq!(pirr, BigInt::from(measured_irr), "q={q} n={n} m={m}");
                }
            }
        }
    }
}
