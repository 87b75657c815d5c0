//! Eigenvalue configurations κ = (𝛜, 𝛆): canonical coincidence patterns of
//! the eigenvalue multisets of A and B, admissibility filtering, and the
//! symmetry group S_κ permuting equal-multiplicity labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A multiplicity pattern π = {1^{e_1}, 2^{e_2}, ..., r^{e_r}}: `counts[i]` is
/// the number of eigenvalue values occurring with multiplicity i+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    counts: Vec<u32>,
}

impl Partition {
    /// Builds from e_1, e_2, ... (number of values of each multiplicity).
    pub fn from_counts(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Partition { counts }
    }

    /// Builds from the multiset of multiplicities, e.g. [2, 1, 1] ↦ {1², 2}.
    pub fn from_mults(mults: &[u32]) -> Self {
        let mut counts = Vec::new();
        for &m in mults {
            assert!(m >= 1);
            if counts.len() < m as usize {
                counts.resize(m as usize, 0);
            }
            counts[m as usize - 1] += 1;
        }
        Partition { counts }
    }

    /// e_i for 1-based multiplicity i (0 beyond the stored range).
    pub fn count(&self, i: u32) -> u32 {
        assert!(i >= 1);
        self.counts.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Σ i·e_i, the rank this pattern partitions.
    pub fn rank(&self) -> u32 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    /// The multiplicities as a descending list, e.g. {1², 2} ↦ [2, 1, 1].
    pub fn mults(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &e) in self.counts.iter().enumerate().rev() {
            for _ in 0..e {
                out.push(i as u32 + 1);
            }
        }
        out
    }

    /// All multiplicity patterns of a given rank, deterministic order.
    pub fn all_of_rank(r: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if remaining == 0 {
                out.push(acc.clone());
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                acc.push(part);
                rec(remaining - part, part, acc, out);
                acc.pop();
            }
        }
        let mut raw = Vec::new();
        rec(r, r, &mut Vec::new(), &mut raw);
        let mut out: Vec<Partition> = raw.iter().map(|m| Partition::from_mults(m)).collect();
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    /// Renders as e.g. `2^1,1^2` (descending part size).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.counts.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}^{}", i + 1, e)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the CLI spec `2^1,1^2` meaning e_2 = 1, e_1 = 2.
    fn from_str(s: &str) -> Result<Partition> {
        let mut counts: Vec<u32> = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (part, e) = match item.split_once('^') {
                Some((p, e)) => (p, e),
                None => (item, "1"),
            };
            let part: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad partition item {item:?}")))?;
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad partition item {item:?}")))?;
            if part == 0 {
                return Err(Error::Invalid("partition parts must be positive".into()));
            }
            if counts.len() < part {
                counts.resize(part, 0);
            }
            counts[part - 1] += e;
        }
        Ok(Partition::from_counts(counts))
    }
}

/// A configuration of eigenvalues κ: the coincidence pattern of the A- and
/// B-eigenvalue multisets, with abstract labels. Canonical form keeps each
/// multiplicity list sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EigenConfig {
    a_mults: Vec<u32>,
    b_mults: Vec<u32>,
}

impl EigenConfig {
    pub fn new(mut a_mults: Vec<u32>, mut b_mults: Vec<u32>) -> Result<Self> {
        a_mults.sort_unstable_by(|x, y| y.cmp(x));
        b_mults.sort_unstable_by(|x, y| y.cmp(x));
        if a_mults.contains(&0) || b_mults.contains(&0) {
            return Err(Error::Invalid("zero multiplicity in configuration".into()));
        }
        let ra: u32 = a_mults.iter().sum();
        let rb: u32 = b_mults.iter().sum();
        if ra != rb || ra == 0 {
            return Err(Error::Invalid(format!(
                "multiplicity sums disagree: {ra} vs {rb}"
            )));
        }
        Ok(EigenConfig { a_mults, b_mults })
    }

    pub fn from_partitions(pi1: &Partition, pi2: &Partition) -> Result<Self> {
        EigenConfig::new(pi1.mults(), pi2.mults())
    }

    pub fn rank(&self) -> u32 {
        self.a_mults.iter().sum()
    }

    pub fn a_mults(&self) -> &[u32] {
        &self.a_mults
    }

    pub fn b_mults(&self) -> &[u32] {
        &self.b_mults
    }

    pub fn a_partition(&self) -> Partition {
        Partition::from_mults(&self.a_mults)
    }

    pub fn b_partition(&self) -> Partition {
        Partition::from_mults(&self.b_mults)
    }

    /// Whether R_κ can carry irreducible representations: true for rank 1
    /// (every character is irreducible), false when some a_i + b_j > r, and
    /// false for the rank-4 configuration with both patterns (2,2), which is
    /// reducible-only by an ad hoc argument.
    pub fn admissible(&self) -> bool {
        let r = self.rank();
        if r == 1 {
            return true;
        }
        let max_a = *self.a_mults.first().unwrap();
        let max_b = *self.b_mults.first().unwrap();
        if max_a + max_b > r {
            return false;
        }
        !(r == 4 && self.a_mults == [2, 2] && self.b_mults == [2, 2])
    }

    /// All admissible configurations of a rank, lexicographic on
    /// (a_mults, b_mults). Rank 1 yields the single trivial configuration.
    pub fn configs_for_rank(r: u32) -> Result<Vec<EigenConfig>> {
        if r == 0 || r > 4 {
            return Err(Error::UnsupportedRank(r));
        }
        let patterns = Partition::all_of_rank(r);
        let mut out = Vec::new();
        for pa in &patterns {
            for pb in &patterns {
                let cfg = EigenConfig::from_partitions(pa, pb)?;
                if cfg.admissible() {
                    out.push(cfg);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// |S_κ|: the order of the group permuting equal-multiplicity labels of
    /// each matrix independently.
    pub fn symmetry_order(&self) -> u64 {
        fn side(mults: &[u32]) -> u64 {
            let mut order = 1u64;
            let mut i = 0;
            while i < mults.len() {
                let mut j = i;
                while j < mults.len() && mults[j] == mults[i] {
                    j += 1;
                }
                order *= (1..=(j - i) as u64).product::<u64>();
                i = j;
            }
            order
        }
        side(&self.a_mults) * side(&self.b_mults)
    }
}

impl fmt::Display for EigenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_side = |mults: &[u32]| {
            mults
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "(({}),({}))",
            fmt_side(&self.a_mults),
            fmt_side(&self.b_mults)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_round_trip() {
        let pi: Partition = "2^1,1^2".parse().unwrap();
        assert_eq!(pi.rank(), 4);
        assert_eq!(pi.mults(), vec![2, 1, 1]);
        assert_eq!(pi.to_string(), "2^1,1^2");
        assert_eq!(Partition::from_mults(&[2, 1, 1]), pi);
    }

    #[test]
    fn admissibility_examples() {
        let cfg = EigenConfig::new(vec![2, 1], vec![2, 1]).unwrap();
        assert!(!cfg.admissible()); // 2 + 2 > 3
        let cfg = EigenConfig::new(vec![1, 1], vec![1, 1]).unwrap();
        assert!(cfg.admissible());
        let cfg = EigenConfig::new(vec![2, 2], vec![2, 2]).unwrap();
        assert!(!cfg.admissible()); // reducible-only rank-4 configuration
    }

    #[test]
    fn configs_per_rank_match_counts() {
        assert_eq!(EigenConfig::configs_for_rank(1).unwrap().len(), 1);
        let r2 = EigenConfig::configs_for_rank(2).unwrap();
        assert_eq!(r2, vec![EigenConfig::new(vec![1, 1], vec![1, 1]).unwrap()]);
        let r3 = EigenConfig::configs_for_rank(3).unwrap();
        assert_eq!(
            r3,
            vec![
                EigenConfig::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap(),
                EigenConfig::new(vec![1, 1, 1], vec![2, 1]).unwrap(),
                EigenConfig::new(vec![2, 1], vec![1, 1, 1]).unwrap(),
            ]
        );
        assert_eq!(EigenConfig::configs_for_rank(4).unwrap().len(), 10);
        assert_eq!(
            EigenConfig::configs_for_rank(5),
            Err(Error::UnsupportedRank(5))
        );
    }

    #[test]
    fn configs_are_unique_admissible_and_sum_to_rank() {
        for r in 1..=4 {
            let cfgs = EigenConfig::configs_for_rank(r).unwrap();
            for (i, cfg) in cfgs.iter().enumerate() {
                assert!(cfg.admissible());
                assert_eq!(cfg.rank(), r);
                assert!(!cfgs[..i].contains(cfg));
            }
        }
    }

    #[test]
    fn symmetry_orders() {
        assert_eq!(
            EigenConfig::new(vec![1, 1], vec![1, 1])
                .unwrap()
                .symmetry_order(),
            4
        );
        assert_eq!(
            EigenConfig::new(vec![2, 1, 1], vec![1, 1, 1, 1])
                .unwrap()
                .symmetry_order(),
            48
        );
        assert_eq!(
            EigenConfig::new(vec![2, 1], vec![2, 1])
                .unwrap()
                .symmetry_order(),
            1
        );
    }
}
