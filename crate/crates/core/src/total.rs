//! Assembly of the motive of the full character variety [𝔛_r] for r ≤ 4 from
//! the irreducible pieces, via the stratification by partitions of r.

use crate::assembly::MotiveEngine;
use crate::qpoly::{scaled_sum, MotivePoly};
use crate::{Error, Result};
use num_integer::Integer;

/// Sym^a of a motive generated by the Lefschetz motive, via the Adams
/// recursion a·Sym^a(p) = Σ_{k=1}^{a} adams(p, k)·Sym^{a−k}(p).
pub fn sym_motive(p: &MotivePoly, a: u32) -> Result<MotivePoly> {
    let mut syms = vec![MotivePoly::one()];
    for j in 1..=a as usize {
        let mut acc = MotivePoly::zero();
        for k in 1..=j {
            acc = &acc + &(&p.adams(k) * &syms[j - k]);
        }
        syms.push(acc.exact_div(&MotivePoly::constant(j as i64))?);
    }
    Ok(syms.pop().expect("non-empty"))
}

fn check_coprime(n: u64, m: u64) -> Result<()> {
    if n.gcd(&m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    Ok(())
}

/// [𝔛̄₂^irr], the irreducible PGL₂ character variety, by parity branch.
pub fn x2bar_irr(n: u64, m: u64) -> Result<MotivePoly> {
    check_coprime(n, m)?;
    let (n, m) = if m.is_multiple_of(2) { (m, n) } else { (n, m) };
    let n = n as i64;
    let m = m as i64;
    let q_minus_2: MotivePoly = "q - 2".parse().unwrap();
    let q_minus_1: MotivePoly = "q - 1".parse().unwrap();
    if n % 2 == 1 {
        scaled_sum(&[((n - 1) * (m - 1), 4, q_minus_2)])
    } else {
        scaled_sum(&[((n - 2) * (m - 1), 4, q_minus_2), (m - 1, 2, q_minus_1)])
    }
}

/// [𝔛_4^{2²}]: the stratum of sums of two rank-2 irreducibles, assembled
/// ℤ₂-equivariantly as q·[Sym²(𝔛̄₂^irr)] + (−1)·([𝔛̄₂^irr]² − [Sym²(𝔛̄₂^irr)]),
/// i.e. (q + 1)·Sym²(B) − B² with B = [𝔛̄₂^irr].
pub fn stratum_22(n: u64, m: u64) -> Result<MotivePoly> {
    let b = x2bar_irr(n, m)?;
    let sym2 = sym_motive(&b, 2)?;
    let q_plus_1: MotivePoly = "q + 1".parse().unwrap();
    Ok(&(&q_plus_1 * &sym2) - &(&b * &b))
}

/// [𝔛̃₃^irr], the irreducible GL₃-determinant-twisted character variety, by
/// residue class of (n, m) mod 6. The listed branches cover 3 ∤ n·m directly
/// and 3 | n; the remaining residues are reached through the n ↔ m symmetry.
pub fn x3tilde_irr(n: u64, m: u64) -> Result<MotivePoly> {
    check_coprime(n, m)?;
    let q_minus_1: MotivePoly = "q - 1".parse().unwrap();
    let factor = |s: &str| -> MotivePoly { &q_minus_1 * &s.parse().unwrap() };
    let p1 = factor("q^4 + 4q^3 - 3q^2 - 15q + 12");
    let p2 = factor("q^4 + 2q^3 - 3q^2 - q + 4");
    let p3 = factor("q^2 - 3q + 3");
    let p4 = factor("q^2 - q + 1");
    // With n the multiple of 3:
    let f_b = |n: i64, m: i64| -> Result<MotivePoly> {
        scaled_sum(&[
            ((m - 1) * (m - 2) * n * (n - 3), 36, p1.clone()),
            ((m - 1) * (m - 2), 6, p2.clone()),
            ((m - 1) * (m * n + n * n - 5 * n - m + 2), 6, p3.clone()),
            (m - 1, 1, p4.clone()),
        ])
    };
    let ni = n as i64;
    let mi = m as i64;
    if n.is_multiple_of(3) {
        f_b(ni, mi)
    } else if m.is_multiple_of(3) {
        f_b(mi, ni)
    } else {
        scaled_sum(&[
            ((mi - 1) * (mi - 2) * (ni - 1) * (ni - 2), 36, p1),
            ((ni - 1) * (mi - 1) * (ni + mi - 4), 6, p3),
        ])
    }
}

impl MotiveEngine {
    /// The motive of the full (semi-simple) SL_r character variety 𝔛_r.
    pub fn total_motive(&mut self, r: u32, n: u64, m: u64) -> Result<MotivePoly> {
        check_coprime(n, m)?;
        let q = MotivePoly::q();
        let q_minus_1: MotivePoly = "q - 1".parse().unwrap();
        match r {
            1 => Ok(MotivePoly::one()),
            2 => Ok(&self.m_irr(2, n, m)? + &q),
            3 => {
                let reducibles = &q_minus_1 * &x2bar_irr(n, m)?;
                Ok(&(&self.m_irr(3, n, m)? + &reducibles) + &q.pow(2))
            }
            4 => {
                let x31 = x3tilde_irr(n, m)?;
                let x22 = stratum_22(n, m)?;
                let x211 = &(&q * &q_minus_1) * &x2bar_irr(n, m)?;
                let mut acc = self.m_irr(4, n, m)?;
                for part in [x31, x22, x211, q.pow(3)] {
                    acc = &acc + &part;
                }
                Ok(acc)
            }
            _ => Err(Error::UnsupportedRank(r)),
        }
    }
}
