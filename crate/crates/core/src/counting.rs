//! Exact counts of eigenvalue configurations: N^π_{n,r}(ϖ) for each r-th root
//! of unity ϖ = ψ^a, and the component counts |M^{π1,π2}_{n,m,r}|, via proved
//! closed formulas, the multinomial theorem, and brute-force enumeration.
//!
//! Roots of unity are handled purely integrally: primitive-root power sums are
//! evaluated by Möbius inversion, and the enumeration oracle works with
//! exponents modulo n·r.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::eigcfg::Partition;
use crate::{Error, Result};

/// How to evaluate a pair count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// The proved closed formulas for the partitions occurring at r ≤ 4.
    Closed,
    /// Brute-force enumeration of eigenvalue tuples (test oracle).
    Enumerate,
    /// (r/nm)·multinomial(n;e)·multinomial(m;e′).
    Multinomial,
}

/// Counts N^π_{n,r}(ψ^a) and |M^{π1,π2}| for one (n, m, r).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: u64,
    pub m: u64,
    pub r: u32,
    /// per_omega_n[a][π] = |N^π_{n,r}(ψ^a)|.
    pub per_omega_n: Vec<BTreeMap<Partition, i64>>,
    pub per_omega_m: Vec<BTreeMap<Partition, i64>>,
    /// |M^{π1,π2}_{n,m,r}| = Σ_a per_omega_n[a][π1] · per_omega_m[a][π2].
    pub pair_counts: BTreeMap<(Partition, Partition), i64>,
}

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient, 0 when k is out of range.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Full multinomial symbol n! / (e_1! ··· e_r! (n − Σe)!) for the partition's
/// value counts e_i.
pub fn multinomial(n: u64, pi: &Partition) -> i64 {
    let total: u64 = (1..=pi.rank()).map(|i| u64::from(pi.count(i))).sum();
    if total > n {
        return 0;
    }
    let mut acc: i64 = 1;
    let mut remaining = n as i64;
    for i in 1..=pi.rank() {
        let e = i64::from(pi.count(i));
        acc *= binomial(remaining, e);
        remaining -= e;
    }
    acc
}

/// Σ over primitive e-th roots ν of ν^a, via Möbius inversion:
/// Σ_{y|e} μ(y)·SR(e/y; a) with SR(e; a) = e if e | a else 0.
pub fn prim_root_power_sum(e: u64, a: u64) -> i64 {
    divisors(e)
        .into_iter()
        .map(|y| {
            let f = e / y;
            if a.is_multiple_of(f) {
                mobius(y) * f as i64
            } else {
                0
            }
        })
        .sum()
}

fn sign(r: u64, re: u64) -> i64 {
    if (r + re).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Classification of the partitions with closed formulas at r ≤ 4.
enum PiClass {
    AllOnes,
    Prime,
    DoublePrime,
    TwoTwo,
}

fn classify(pi: &Partition, r: u32) -> Option<PiClass> {
    if pi.rank() != r {
        return None;
    }
    if pi.count(1) == r {
        Some(PiClass::AllOnes)
    } else if r >= 2 && pi.count(1) == r - 2 && pi.count(2) == 1 {
        Some(PiClass::Prime)
    } else if r >= 3 && pi.count(1) == r - 3 && pi.count(3) == 1 {
        Some(PiClass::DoublePrime)
    } else if r == 4 && pi.count(2) == 2 {
        Some(PiClass::TwoTwo)
    } else {
        None
    }
}

/// |N^π_{n,r}(ψ^a)| by the closed formulas, for
/// π ∈ {{1^r}, {1^{r−2},2}, {1^{r−3},3}, {2²} (r = 4)}.
pub fn n_pi_closed(n: u64, r: u32, a: u32, pi: &Partition) -> Result<i64> {
    let class = classify(pi, r).ok_or(Error::UnsupportedPartition)?;
    let r64 = u64::from(r);
    let a64 = u64::from(a % r);
    let common: Vec<u64> = divisors(n.gcd(&r64));
    match class {
        PiClass::AllOnes => {
            // n·|N^π| = Σ_{e|n, e|r} (−1)^{r+r/e} C(n/e, r/e) Σ_{ν∈μ*_e} ν^a
            let total: i64 = common
                .iter()
                .map(|&e| {
                    sign(r64, r64 / e)
                        * binomial((n / e) as i64, (r64 / e) as i64)
                        * prim_root_power_sum(e, a64)
                })
                .sum();
            debug_assert_eq!(total % n as i64, 0);
            Ok(total / n as i64)
        }
        PiClass::Prime => {
            let mut total = binomial(n as i64 - 1, i64::from(r) - 2);
            for &e in &common {
                if e >= 2 {
                    total -= sign(r64, r64 / e)
                        * binomial((n / e) as i64 - 1, (r64 / e) as i64 - 1)
                        * prim_root_power_sum(e, a64);
                }
            }
            Ok(total)
        }
        PiClass::DoublePrime => {
            let mut total = binomial(n as i64 - 1, i64::from(r) - 3);
            for &e in &common {
                if e >= 3 {
                    total += sign(r64, r64 / e)
                        * binomial((n / e) as i64 - 1, (r64 / e) as i64 - 1)
                        * prim_root_power_sum(e, a64);
                }
            }
            if n.is_multiple_of(2) && r.is_multiple_of(2) {
                let psi_half = if a64 % 2 == 0 { 1 } else { -1 }; // ψ^{a·r/2} = (−1)^a
                let s = if (r64 / 2) % 2 == 0 { 1 } else { -1 };
                total -= s * binomial((n / 2) as i64 - 1, (r64 / 2) as i64 - 2) * psi_half;
            }
            Ok(total)
        }
        PiClass::TwoTwo => {
            // Unordered pairs {x₁, x₂} ⊂ ℤ_{4n} with x₁ ≠ x₂, x_i ≡ a (mod 4)
            // and x₁ + x₂ ≡ 0 (mod 2n). Substituting x = a + 4y reduces to
            // a + 2(y₁ + y₂) ≡ 0 (mod n), solved by residue class of (n, a).
            let n64 = n as i64;
            Ok(match (n % 4, a64 % 4) {
                (1, _) | (3, _) => (n64 - 1) / 2,
                (_, 1) | (_, 3) => 0,
                (2, _) => n64 - 1,
                (0, 0) => n64 - 2,
                (0, 2) => n64,
                _ => unreachable!(),
            })
        }
    }
}

/// |N^π_{n,r}(ψ^a)| by direct enumeration: unordered r-multisets of exponents
/// x ∈ ℤ_{nr} with x ≡ a (mod r), Σx ≡ 0 (mod nr), and multiplicity pattern π.
pub fn n_pi_enumerate(n: u64, r: u32, a: u32, pi: &Partition) -> i64 {
    assert!(n * u64::from(r) <= 10_000, "enumeration budget exceeded");
    let nr = n * u64::from(r);
    let a = u64::from(a % r);
    // Candidates: the n exponents ≡ a (mod r). (x_i are the eigenvalue
    // exponents; ε^n = ψ^a becomes n·x ≡ a·n ≡ (nr/r)·a (mod nr), i.e.
    // x ≡ a (mod r).)
    let candidates: Vec<u64> = (0..n).map(|t| a + t * u64::from(r)).collect();
    let mut count = 0i64;
    let mut multiset = Vec::new();
    fn rec(
        candidates: &[u64],
        from: usize,
        left: u32,
        nr: u64,
        pi: &Partition,
        multiset: &mut Vec<u64>,
        count: &mut i64,
    ) {
        if left == 0 {
            let sum: u64 = multiset.iter().sum();
            if !sum.is_multiple_of(nr) {
                return;
            }
            let mut mults: Vec<u32> = Vec::new();
            let mut i = 0;
            while i < multiset.len() {
                let mut j = i;
                while j < multiset.len() && multiset[j] == multiset[i] {
                    j += 1;
                }
                mults.push((j - i) as u32);
                i = j;
            }
            if &Partition::from_mults(&mults) == pi {
                *count += 1;
            }
            return;
        }
        for i in from..candidates.len() {
            multiset.push(candidates[i]);
            rec(candidates, i, left - 1, nr, pi, multiset, count);
            multiset.pop();
        }
    }
    rec(&candidates, 0, r, nr, pi, &mut multiset, &mut count);
    count
}

/// |M^{π1,π2}_{n,m,r}| by the requested method.
pub fn pair_count(
    n: u64,
    m: u64,
    r: u32,
    pi1: &Partition,
    pi2: &Partition,
    method: CountMethod,
) -> Result<i64> {
    if n.gcd(&m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    if pi1.rank() != r || pi2.rank() != r {
        return Err(Error::UnsupportedPartition);
    }
    match method {
        CountMethod::Enumerate => Ok((0..r)
            .map(|a| n_pi_enumerate(n, r, a, pi1) * n_pi_enumerate(m, r, a, pi2))
            .sum()),
        CountMethod::Multinomial => {
            let num = i64::from(r) * multinomial(n, pi1) * multinomial(m, pi2);
            let den = (n * m) as i64;
            if num % den != 0 {
                return Err(Error::Invalid(format!(
                    "multinomial count (r/nm)·{num} is not an integer for n={n}, m={m}"
                )));
            }
            Ok(num / den)
        }
        CountMethod::Closed => {
            if let Some(v) = pair_count_closed(n, m, r, pi1, pi2) {
                Ok(v)
            } else if let Some(v) = pair_count_closed(m, n, r, pi2, pi1) {
                Ok(v)
            } else {
                Err(Error::UnsupportedPartition)
            }
        }
    }
}

fn pair_count_closed(n: u64, m: u64, r: u32, pi1: &Partition, pi2: &Partition) -> Option<i64> {
    use PiClass::*;
    let c1 = classify(pi1, r)?;
    let c2 = classify(pi2, r)?;
    let n = n as i64;
    let m = m as i64;
    let r64 = i64::from(r);
    match (c1, c2) {
        (AllOnes, AllOnes) => {
            let num = binomial(n - 1, r64 - 1) * binomial(m - 1, r64 - 1);
            debug_assert_eq!(num % r64, 0);
            Some(num / r64)
        }
        (AllOnes, Prime) => Some(binomial(n - 1, r64 - 1) * binomial(m - 1, r64 - 2)),
        (Prime, Prime) => Some(r64 * binomial(n - 1, r64 - 2) * binomial(m - 1, r64 - 2)),
        (AllOnes, DoublePrime) => Some(binomial(n - 1, r64 - 1) * binomial(m - 1, r64 - 3)),
        (AllOnes, TwoTwo) => {
            let num = binomial(n - 1, 3) * (m - 1);
            debug_assert_eq!(num % 2, 0);
            Some(num / 2)
        }
        (Prime, TwoTwo) => Some(2 * binomial(n - 1, 2) * (m - 1)),
        _ => None,
    }
}

/// Builds the full table for a triple (n, m, r) using the enumeration method
/// for the per-ϖ counts.
pub fn count_table(n: u64, m: u64, r: u32) -> Result<CountTable> {
    if n.gcd(&m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    if r == 0 || r > 4 {
        return Err(Error::UnsupportedRank(r));
    }
    let patterns = Partition::all_of_rank(r);
    let per = |k: u64| -> Vec<BTreeMap<Partition, i64>> {
        (0..r)
            .map(|a| {
                patterns
                    .iter()
                    .map(|pi| (pi.clone(), n_pi_enumerate(k, r, a, pi)))
                    .collect()
            })
            .collect()
    };
    let per_omega_n = per(n);
    let per_omega_m = per(m);
    let mut pair_counts = BTreeMap::new();
    for pi1 in &patterns {
        for pi2 in &patterns {
            let total: i64 = (0..r as usize)
                .map(|a| per_omega_n[a][pi1] * per_omega_m[a][pi2])
                .sum();
            pair_counts.insert((pi1.clone(), pi2.clone()), total);
        }
    }
    Ok(CountTable {
        n,
        m,
        r,
        per_omega_n,
        per_omega_m,
        pair_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(multinomial(5, &pi("1^4")), 5);
        assert_eq!(multinomial(4, &pi("2^1,1^2")), 12);
    }

    #[test]
    fn prim_root_sums() {
        // a = 0: Euler phi.
        assert_eq!(prim_root_power_sum(1, 0), 1);
        assert_eq!(prim_root_power_sum(4, 0), 2);
        assert_eq!(prim_root_power_sum(6, 0), 2);
        // Sum over primitive 2nd roots of ν^a = (−1)^a.
        assert_eq!(prim_root_power_sum(2, 1), -1);
        // Primitive 4th roots i, −i: i + (−i) = 0; i² + (−i)² = −2.
        assert_eq!(prim_root_power_sum(4, 1), 0);
        assert_eq!(prim_root_power_sum(4, 2), -2);
    }

    #[test]
    fn n_pi_examples() {
        assert_eq!(n_pi_closed(2, 2, 0, &pi("1^2")).unwrap(), 0);
        assert_eq!(n_pi_closed(2, 2, 1, &pi("1^2")).unwrap(), 1);
        assert_eq!(n_pi_closed(3, 2, 0, &pi("1^2")).unwrap(), 1);
        assert_eq!(n_pi_closed(2, 2, 0, &pi("2^1")).unwrap(), 2);
        for a in 0..4 {
            assert_eq!(n_pi_closed(5, 4, a, &pi("1^4")).unwrap(), 1);
        }
        assert_eq!(n_pi_enumerate(2, 2, 1, &pi("1^2")), 1);
        assert_eq!(n_pi_enumerate(2, 2, 0, &pi("2^1")), 2);
        assert!(n_pi_closed(4, 4, 0, &pi("4^1")).is_err());
    }

    #[test]
    fn closed_matches_enumeration() {
        for n in 2..=12u64 {
            for r in 2..=4u32 {
                for a in 0..r {
                    for pi in Partition::all_of_rank(r) {
                        if classify(&pi, r).is_none() {
                            continue;
                        }
                        assert_eq!(
                            n_pi_closed(n, r, a, &pi).unwrap(),
                            n_pi_enumerate(n, r, a, &pi),
                            "n={n} r={r} a={a} pi={pi}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ordered_tuple_totals() {
        // Σ over π of ordered-tuple counts = n^{r−1} per ϖ when gcd(n,r)=1.
        for (n, r) in [(5u64, 2u32), (5, 3), (7, 4), (3, 4)] {
            for a in 0..r {
                let mut ordered = 0i64;
                let nr = n * u64::from(r);
                // Count ordered tuples directly.
                let candidates: Vec<u64> = (0..n)
                    .map(|t| u64::from(a % r) + t * u64::from(r))
                    .collect();
                fn rec(c: &[u64], left: u32, sum: u64, nr: u64, acc: &mut i64) {
                    if left == 0 {
                        if sum.is_multiple_of(nr) {
                            *acc += 1;
                        }
                        return;
                    }
                    for &x in c {
                        rec(c, left - 1, sum + x, nr, acc);
                    }
                }
                rec(&candidates, r, 0, nr, &mut ordered);
                assert_eq!(ordered, (n as i64).pow(r - 1), "n={n} r={r} a={a}");
            }
        }
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(
            pair_count(2, 3, 2, &pi("1^2"), &pi("1^2"), CountMethod::Closed).unwrap(),
            1
        );
        assert_eq!(
            pair_count(5, 7, 4, &pi("1^4"), &pi("1^4"), CountMethod::Closed).unwrap(),
            20
        );
        assert_eq!(
            pair_count(5, 7, 4, &pi("1^4"), &pi("1^4"), CountMethod::Enumerate).unwrap(),
            20
        );
        assert_eq!(
            pair_count(5, 7, 4, &pi("2^2"), &pi("1^4"), CountMethod::Closed).unwrap(),
            pair_count(5, 7, 4, &pi("2^2"), &pi("1^4"), CountMethod::Enumerate).unwrap()
        );
        assert_eq!(
            pair_count(2, 4, 2, &pi("1^2"), &pi("1^2"), CountMethod::Closed),
            Err(Error::NotCoprime(2, 4))
        );
    }

    #[test]
    fn table_consistency() {
        let table = count_table(3, 5, 2).unwrap();
        for ((pi1, pi2), &v) in &table.pair_counts {
            let direct: i64 = (0..2)
                .map(|a| table.per_omega_n[a][pi1] * table.per_omega_m[a][pi2])
                .sum();
            assert_eq!(v, direct);
            assert!(v >= 0);
        }
    }
}
