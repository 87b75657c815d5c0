//! Per-configuration assembly ([R_κ], [R_κ^red], [R_κ^irr], [𝔐_κ^irr]) and
//! the rank recursion combining configurations into [𝔐_r^irr](n, m).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::counting::{pair_count, CountMethod};
use crate::eigcfg::{EigenConfig, Partition};
use crate::qpoly::{GroupKind, MotivePoly};
use crate::strata::{stratum_motive, StratumReport};
use crate::typeenum::enumerate_types;
use crate::{Error, Result};

/// Everything the pipeline knows about one configuration κ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub config: EigenConfig,
    pub strata: Vec<StratumReport>,
    pub r_kappa: MotivePoly,
    pub r_red: MotivePoly,
    pub r_irr: MotivePoly,
    pub m_irr: MotivePoly,
}

/// [R_κ] = ([GL_r]/∏[GL_{a_i}]) · ([GL_r]/∏[GL_{b_j}]).
pub fn r_kappa_motive(cfg: &EigenConfig) -> Result<MotivePoly> {
    let gl_r = MotivePoly::group_motive(GroupKind::Gl, cfg.rank());
    let side = |mults: &[u32]| -> Result<MotivePoly> {
        let mut den = MotivePoly::one();
        for &a in mults {
            den = &den * &MotivePoly::group_motive(GroupKind::Gl, a);
        }
        gl_r.exact_div(&den)
    };
    Ok(&side(cfg.a_mults())? * &side(cfg.b_mults())?)
}

/// Memoizing engine for the rank recursion. The cache maps canonical
/// configurations to [𝔐_κ^irr].
#[derive(Debug, Default)]
pub struct MotiveEngine {
    cache: HashMap<EigenConfig, MotivePoly>,
}

impl MotiveEngine {
    pub fn new() -> Self {
        MotiveEngine::default()
    }

    /// [𝔐_κ^irr]: 1 for the rank-1 configuration, 0 for inadmissible ones,
    /// and otherwise ([R_κ] − Σ m_κ(τ)[R(τ)]) / [PGL_r], memoized.
    pub fn m_irr_for_config(&mut self, cfg: &EigenConfig) -> Result<MotivePoly> {
        if cfg.rank() > 4 {
            return Err(Error::UnsupportedRank(cfg.rank()));
        }
        if !cfg.admissible() {
            return Ok(MotivePoly::zero());
        }
        if cfg.rank() == 1 {
            return Ok(MotivePoly::one());
        }
        if let Some(hit) = self.cache.get(cfg) {
            return Ok(hit.clone());
        }
        let report = self.config_report(cfg)?;
        Ok(report.m_irr)
    }

    /// Full report for an admissible configuration.
    pub fn config_report(&mut self, cfg: &EigenConfig) -> Result<ConfigReport> {
        if cfg.rank() > 4 {
            return Err(Error::UnsupportedRank(cfg.rank()));
        }
        if !cfg.admissible() {
            return Err(Error::Invalid(format!(
                "config_report requires an admissible configuration, got {cfg}"
            )));
        }
        let r_kappa = r_kappa_motive(cfg)?;
        if cfg.rank() == 1 {
            return Ok(ConfigReport {
                config: cfg.clone(),
                strata: Vec::new(),
                r_kappa: r_kappa.clone(),
                r_red: MotivePoly::zero(),
                r_irr: r_kappa,
                m_irr: MotivePoly::one(),
            });
        }
        let orbits = enumerate_types(cfg)?;
        // Warm the cache for every sub-configuration a dim ≥ 2 block needs,
        // so the stratum loop below can use simple lookups.
        for orbit in &orbits {
            for block in orbit.representative.flatten() {
                if block.dim >= 2 {
                    let sub = sub_config(&block.evals_a, &block.evals_b)?;
                    let value = self.m_irr_for_config(&sub)?;
                    self.cache.insert(sub, value);
                }
            }
        }
        let cache = &self.cache;
        let mut recurse = |sub: &EigenConfig| -> Result<MotivePoly> {
            if !sub.admissible() {
                return Ok(MotivePoly::zero());
            }
            if sub.rank() == 1 {
                return Ok(MotivePoly::one());
            }
            cache
                .get(sub)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("sub-configuration {sub} not warmed")))
        };
        let mut r_red = MotivePoly::zero();
        let mut strata = Vec::new();
        for orbit in &orbits {
            let report = stratum_motive(orbit, &mut recurse)?;
            r_red = &r_red + &report.r_tau.scalar_mul_i64(i64::from(orbit.multiplicity));
            strata.push(report);
        }
        let r_irr = &r_kappa - &r_red;
        let pgl = MotivePoly::group_motive(GroupKind::Pgl, cfg.rank());
        let m_irr = r_irr.exact_div(&pgl)?;
        self.cache.insert(cfg.clone(), m_irr.clone());
        Ok(ConfigReport {
            config: cfg.clone(),
            strata,
            r_kappa,
            r_red,
            r_irr,
            m_irr,
        })
    }

    /// [𝔐_r^irr](n, m) = Σ over admissible partition pairs of
    /// |M^{π1,π2}_{n,m,r}| · [𝔐_{κ(π1,π2)}^irr].
    pub fn m_irr(&mut self, r: u32, n: u64, m: u64) -> Result<MotivePoly> {
        self.weighted_sum(r, n, m, |report| report.m_irr.clone())
    }

    /// Representation-variety-level total Σ |M^{π1,π2}| · [R_κ^irr], used by
    /// the finite-field oracle.
    pub fn r_irr_total(&mut self, r: u32, n: u64, m: u64) -> Result<MotivePoly> {
        self.weighted_sum(r, n, m, |report| report.r_irr.clone())
    }

    fn weighted_sum(
        &mut self,
        r: u32,
        n: u64,
        m: u64,
        pick: impl Fn(&ConfigReport) -> MotivePoly,
    ) -> Result<MotivePoly> {
        if r == 0 || r > 4 {
            return Err(Error::UnsupportedRank(r));
        }
        if n.gcd(&m) != 1 {
            return Err(Error::NotCoprime(n, m));
        }
        let patterns = Partition::all_of_rank(r);
        let mut acc = MotivePoly::zero();
        for pi1 in &patterns {
            for pi2 in &patterns {
                let cfg = EigenConfig::from_partitions(pi1, pi2)?;
                if !cfg.admissible() {
                    continue;
                }
                let count = default_pair_count(n, m, r, pi1, pi2)?;
                if count == 0 {
                    continue;
                }
                let report = self.config_report(&cfg)?;
                acc = &acc + &pick(&report).scalar_mul(&BigInt::from(count));
            }
        }
        Ok(acc)
    }
}

/// Production pair count: the proved closed formulas, falling back to the
/// multinomial theorem (valid for r ≤ 4) and the enumeration oracle for any
/// pattern the closed family misses.
fn default_pair_count(n: u64, m: u64, r: u32, pi1: &Partition, pi2: &Partition) -> Result<i64> {
    match pair_count(n, m, r, pi1, pi2, CountMethod::Closed) {
        Ok(v) => Ok(v),
        Err(Error::UnsupportedPartition) => {
            if n.gcd(&u64::from(r)) == 1 && m.gcd(&u64::from(r)) == 1 {
                pair_count(n, m, r, pi1, pi2, CountMethod::Multinomial)
            } else {
                pair_count(n, m, r, pi1, pi2, CountMethod::Enumerate)
            }
        }
        Err(e) => Err(e),
    }
}

fn sub_config(evals_a: &[u8], evals_b: &[u8]) -> Result<EigenConfig> {
    let mults = |evals: &[u8]| {
        let mut counts = std::collections::BTreeMap::new();
        for &l in evals {
            *counts.entry(l).or_insert(0u32) += 1;
        }
        counts.into_values().collect::<Vec<u32>>()
    };
    EigenConfig::new(mults(evals_a), mults(evals_b))
}
