//! Enumeration of the types τ = (ξ, σ) of semi-simple filtrations compatible
//! with an eigenvalue configuration κ, up to the S_κ-action, together with
//! orbit multiplicities m_κ(τ).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eigcfg::EigenConfig;
use crate::{Error, Result};

/// One isotypic class inside a filtration level: `mult` copies of an
/// irreducible of dimension `dim` whose generators act with the given
/// eigenvalue-label multisets (sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsotypicBlock {
    pub dim: u32,
    pub mult: u32,
    pub evals_a: Vec<u8>,
    pub evals_b: Vec<u8>,
}

/// A type τ: the ordered levels of the semi-simple filtration, each level a
/// canonical (sorted) list of isotypic blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeDescriptor {
    pub levels: Vec<Vec<IsotypicBlock>>,
}

/// An S_κ-orbit of types: a canonical representative and the orbit length
/// m_κ(τ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOrbit {
    pub representative: TypeDescriptor,
    pub multiplicity: u32,
}

/// A flattened block U_α: one copy of an isotypic block, remembering its
/// 1-based level d(α) and the index of its isotypic class within the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatBlock {
    pub dim: u32,
    pub evals_a: Vec<u8>,
    pub evals_b: Vec<u8>,
    pub level: usize,
    pub iso: usize,
}

impl FlatBlock {
    /// Σ_k a_k^α · a_k^β, the overlap of A-eigenvalue multisets.
    pub fn a_overlap(&self, other: &FlatBlock) -> u32 {
        overlap(&self.evals_a, &other.evals_a)
    }

    /// Σ_k b_k^α · b_k^β, the overlap of B-eigenvalue multisets.
    pub fn b_overlap(&self, other: &FlatBlock) -> u32 {
        overlap(&self.evals_b, &other.evals_b)
    }

    pub fn signature(&self) -> (u32, &[u8], &[u8]) {
        (self.dim, &self.evals_a, &self.evals_b)
    }
}

fn overlap(x: &[u8], y: &[u8]) -> u32 {
    let count = |v: &[u8], l: u8| v.iter().filter(|&&c| c == l).count() as u32;
    let labels: BTreeSet<u8> = x.iter().copied().collect();
    labels.iter().map(|&l| count(x, l) * count(y, l)).sum()
}

impl TypeDescriptor {
    /// Expands every block with its multiplicity, stable order level-by-level.
    pub fn flatten(&self) -> Vec<FlatBlock> {
        let mut out = Vec::new();
        for (li, level) in self.levels.iter().enumerate() {
            for (bi, block) in level.iter().enumerate() {
                for _ in 0..block.mult {
                    out.push(FlatBlock {
                        dim: block.dim,
                        evals_a: block.evals_a.clone(),
                        evals_b: block.evals_b.clone(),
                        level: li + 1,
                        iso: bi,
                    });
                }
            }
        }
        out
    }

    /// Total rank Σ dim·mult.
    pub fn rank(&self) -> u32 {
        self.levels.iter().flatten().map(|b| b.dim * b.mult).sum()
    }

    fn is_irreducible_shape(&self) -> bool {
        self.levels.len() == 1
            && self.levels[0].len() == 1
            && self.levels[0][0].mult == 1
            && self.levels[0][0].dim == self.rank()
    }

    /// Applies a pair of label permutations (maps old label to new) and
    /// re-canonicalizes.
    fn relabel(&self, perm_a: &[usize], perm_b: &[usize]) -> TypeDescriptor {
        let map = |evals: &[u8], perm: &[usize]| {
            let mut out: Vec<u8> = evals.iter().map(|&l| perm[l as usize] as u8).collect();
            out.sort_unstable();
            out
        };
        let levels = self
            .levels
            .iter()
            .map(|level| {
                let mut blocks: Vec<IsotypicBlock> = level
                    .iter()
                    .map(|b| IsotypicBlock {
                        dim: b.dim,
                        mult: b.mult,
                        evals_a: map(&b.evals_a, perm_a),
                        evals_b: map(&b.evals_b, perm_b),
                    })
                    .collect();
                // Match the raw enumeration's canonical order, which sorts by
                // (dim, evals_a, evals_b) and ignores the multiplicity.
                blocks.sort_by(|x, y| {
                    (x.dim, &x.evals_a, &x.evals_b).cmp(&(y.dim, &y.evals_a, &y.evals_b))
                });
                blocks
            })
            .collect();
        TypeDescriptor { levels }
    }
}

impl fmt::Display for TypeDescriptor {
    /// Mirrors the paper's table notation, e.g.
    /// `ξ=({(1,1)},{(2,1)}); σ_A=({{e1}},{{e2,e3}}); σ_B=({{f1}},{{f2,f3}})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self
            .levels
            .iter()
            .map(|level| {
                let inner = level
                    .iter()
                    .map(|b| format!("({},{})", b.dim, b.mult))
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{{{inner}}}")
            })
            .collect::<Vec<_>>()
            .join(",");
        let side = |pick: fn(&IsotypicBlock) -> &[u8], prefix: char| {
            self.levels
                .iter()
                .map(|level| {
                    let inner = level
                        .iter()
                        .map(|b| {
                            let labels = pick(b)
                                .iter()
                                .map(|l| format!("{prefix}{}", l + 1))
                                .collect::<Vec<_>>()
                                .join(",");
                            format!("{{{labels}}}")
                        })
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{{{inner}}}")
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "ξ=({shape}); σ_A=({}); σ_B=({})",
            side(|b| &b.evals_a, 'e'),
            side(|b| &b.evals_b, 'f')
        )
    }
}

/// All sorted multisets of `size` labels drawn from a pool of per-label
/// availabilities, scaled by `copies` (a block of mult m consumes m copies).
fn label_multisets(pool: &[u32], size: u32, copies: u32) -> Vec<Vec<u8>> {
    fn rec(
        pool: &[u32],
        size: u32,
        copies: u32,
        from: u8,
        acc: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if size == 0 {
            out.push(acc.clone());
            return;
        }
        for l in from..pool.len() as u8 {
            let used = acc.iter().filter(|&&x| x == l).count() as u32 + 1;
            if used * copies <= pool[l as usize] {
                acc.push(l);
                rec(pool, size - 1, copies, l, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(pool, size, copies, 0, &mut Vec::new(), &mut out);
    out
}

fn consume(pool: &mut [u32], evals: &[u8], copies: u32) {
    for &l in evals {
        pool[l as usize] -= copies;
    }
}

fn restore(pool: &mut [u32], evals: &[u8], copies: u32) {
    for &l in evals {
        pool[l as usize] += copies;
    }
}

/// Enumerates all canonical raw types (no S_κ quotient) for a configuration.
///
/// Levels are built in order; within a level, blocks are chosen with strictly
/// increasing (dim, evalsA, evalsB) signatures, which both enforces the
/// within-level distinctness invariant and produces each canonical form once.
/// With `prune` set, dim ≥ 2 blocks whose eigenvalue sub-configuration is
/// inadmissible are skipped (no irreducible has those eigenvalues, so such
/// strata are empty).
pub fn enumerate_raw(cfg: &EigenConfig, prune: bool) -> Vec<TypeDescriptor> {
    let mut a_pool = cfg.a_mults().to_vec();
    let mut b_pool = cfg.b_mults().to_vec();
    let mut out = Vec::new();
    let mut levels = Vec::new();
    next_level(&mut a_pool, &mut b_pool, &mut levels, prune, &mut out);
    out
}

fn next_level(
    a_pool: &mut Vec<u32>,
    b_pool: &mut Vec<u32>,
    levels: &mut Vec<Vec<IsotypicBlock>>,
    prune: bool,
    out: &mut Vec<TypeDescriptor>,
) {
    let remaining: u32 = a_pool.iter().sum();
    if remaining == 0 {
        let t = TypeDescriptor {
            levels: levels.clone(),
        };
        if !t.is_irreducible_shape() {
            out.push(t);
        }
        return;
    }
    let mut blocks = Vec::new();
    extend_level(a_pool, b_pool, levels, &mut blocks, None, prune, out);
}

#[allow(clippy::too_many_arguments)]
fn extend_level(
    a_pool: &mut Vec<u32>,
    b_pool: &mut Vec<u32>,
    levels: &mut Vec<Vec<IsotypicBlock>>,
    blocks: &mut Vec<IsotypicBlock>,
    min_sig: Option<(u32, Vec<u8>, Vec<u8>)>,
    prune: bool,
    out: &mut Vec<TypeDescriptor>,
) {
    if !blocks.is_empty() {
        // Close the level and move on.
        levels.push(blocks.clone());
        next_level(a_pool, b_pool, levels, prune, out);
        levels.pop();
    }
    let remaining: u32 = a_pool.iter().sum();
    for dim in 1..=remaining {
        // Dim-1 blocks may repeat (mult ≤ 2); dim ≥ 2 blocks are simple.
        // Higher multiplicities cannot occur for admissible r ≤ 4
        // configurations, so they are rejected here by construction.
        let max_mult = if dim == 1 { 2 } else { 1 };
        for mult in 1..=max_mult {
            if dim * mult > remaining {
                continue;
            }
            for ea in label_multisets(a_pool, dim, mult) {
                consume(a_pool, &ea, mult);
                for eb in label_multisets(b_pool, dim, mult) {
                    if prune && dim >= 2 && !block_possible(&ea, &eb) {
                        continue;
                    }
                    let sig = (dim, ea.clone(), eb.clone());
                    if let Some(min) = &min_sig {
                        if sig <= *min {
                            continue;
                        }
                    }
                    consume(b_pool, &eb, mult);
                    blocks.push(IsotypicBlock {
                        dim,
                        mult,
                        evals_a: ea.clone(),
                        evals_b: eb.clone(),
                    });
                    extend_level(a_pool, b_pool, levels, blocks, Some(sig), prune, out);
                    blocks.pop();
                    restore(b_pool, &eb, mult);
                }
                restore(a_pool, &ea, mult);
            }
        }
    }
}

/// Whether a dim ≥ 2 block can host an irreducible: its eigenvalue sub-
/// configuration must be admissible.
fn block_possible(ea: &[u8], eb: &[u8]) -> bool {
    let mults = |evals: &[u8]| {
        let mut counts = std::collections::BTreeMap::new();
        for &l in evals {
            *counts.entry(l).or_insert(0u32) += 1;
        }
        counts.into_values().collect::<Vec<u32>>()
    };
    EigenConfig::new(mults(ea), mults(eb))
        .map(|c| c.admissible())
        .unwrap_or(false)
}

/// All permutations of 0..mults.len() that preserve the multiplicity of every
/// label (the factor of S_κ acting on one side).
fn perms_preserving(mults: &[u32]) -> Vec<Vec<usize>> {
    let n = mults.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        mults: &[u32],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == mults.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..mults.len() {
            if !used[j] && mults[j] == mults[i] {
                used[j] = true;
                perm[i] = j;
                rec(i + 1, mults, perm, used, out);
                used[j] = false;
            }
        }
    }
    rec(0, mults, &mut perm, &mut used, &mut out);
    out
}

fn orbit_of(t: &TypeDescriptor, cfg: &EigenConfig) -> BTreeSet<TypeDescriptor> {
    let mut orbit = BTreeSet::new();
    for pa in perms_preserving(cfg.a_mults()) {
        for pb in perms_preserving(cfg.b_mults()) {
            orbit.insert(t.relabel(&pa, &pb));
        }
    }
    orbit
}

/// The orbit length m_κ(τ) = |S_κ| / |stabilizer|.
pub fn orbit_multiplicity(t: &TypeDescriptor, cfg: &EigenConfig) -> u32 {
    orbit_of(t, cfg).len() as u32
}

/// The raw types whose strata are nonempty: dim ≥ 2 blocks with a repeated
/// label are pruned (an irreducible of dimension ≥ 2 has distinct eigenvalues
/// in both generators), and types whose completion variety [M_τ] vanishes are
/// dropped (their extensions are all semi-simple, hence of another type).
pub fn possible_types(cfg: &EigenConfig) -> Result<Vec<TypeDescriptor>> {
    let mut out = Vec::new();
    for t in enumerate_raw(cfg, true) {
        if crate::strata::m_tau_motive(&t)? != crate::qpoly::MotivePoly::zero() {
            out.push(t);
        }
    }
    Ok(out)
}

/// Enumerates the S_κ-orbits of nonempty reducible-shape types for an
/// admissible configuration, ordered by canonical representative.
pub fn enumerate_types(cfg: &EigenConfig) -> Result<Vec<TypeOrbit>> {
    if cfg.rank() > 4 {
        return Err(Error::UnsupportedRank(cfg.rank()));
    }
    let raw = possible_types(cfg)?;
    let mut seen: BTreeSet<TypeDescriptor> = BTreeSet::new();
    let mut orbits = Vec::new();
    for t in &raw {
        if seen.contains(t) {
            continue;
        }
        let orbit = orbit_of(t, cfg);
        let representative = orbit.first().expect("orbit non-empty").clone();
        let multiplicity = orbit.len() as u32;
        seen.extend(orbit);
        orbits.push(TypeOrbit {
            representative,
            multiplicity,
        });
    }
    orbits.sort_by(|x, y| x.representative.cmp(&y.representative));
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(a: &[u32], b: &[u32]) -> EigenConfig {
        EigenConfig::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn mults(orbits: &[TypeOrbit]) -> Vec<u32> {
        let mut v: Vec<u32> = orbits.iter().map(|o| o.multiplicity).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn rank1_has_no_reducible_types() {
        assert!(enumerate_types(&cfg(&[1], &[1])).unwrap().is_empty());
    }

    #[test]
    fn rank2_orbits() {
        let orbits = enumerate_types(&cfg(&[1, 1], &[1, 1])).unwrap();
        assert_eq!(mults(&orbits), vec![2, 4]);
        let raw = enumerate_raw(&cfg(&[1, 1], &[1, 1]), false);
        assert_eq!(raw.len(), 6);
    }

    #[test]
    fn rank3_orbit_multiplicities_match_tables() {
        let k1 = enumerate_types(&cfg(&[1, 1, 1], &[1, 1, 1])).unwrap();
        assert_eq!(mults(&k1), vec![6, 9, 9, 9, 18, 18, 36]);
        let k2 = enumerate_types(&cfg(&[1, 1, 1], &[2, 1])).unwrap();
        assert_eq!(k2.len(), 8);
        assert_eq!(mults(&k2), vec![3, 3, 3, 3, 3, 3, 6, 6]);
        let k3 = enumerate_types(&cfg(&[2, 1], &[1, 1, 1])).unwrap();
        assert_eq!(k3.len(), 8);
        assert_eq!(mults(&k3), vec![3, 3, 3, 3, 3, 3, 6, 6]);
    }

    #[test]
    fn orbit_multiplicity_sums_to_raw_count() {
        for r in 2..=4u32 {
            for cfg in EigenConfig::configs_for_rank(r).unwrap() {
                let raw = possible_types(&cfg).unwrap().len() as u32;
                let orbits = enumerate_types(&cfg).unwrap();
                let total: u32 = orbits.iter().map(|o| o.multiplicity).sum();
                assert_eq!(total, raw, "config {cfg}");
                for o in &orbits {
                    assert!(u64::from(o.multiplicity) <= cfg.symmetry_order());
                    assert_eq!(cfg.symmetry_order() % u64::from(o.multiplicity), 0);
                    assert_eq!(orbit_multiplicity(&o.representative, &cfg), o.multiplicity);
                }
            }
        }
    }

    #[test]
    fn descriptor_invariants_hold_for_representatives() {
        for r in 2..=4u32 {
            for cfg in EigenConfig::configs_for_rank(r).unwrap() {
                for o in enumerate_types(&cfg).unwrap() {
                    let t = &o.representative;
                    assert_eq!(t.rank(), r);
                    // Aggregated label multisets must reproduce the config.
                    let mut a_agg = vec![0u32; cfg.a_mults().len()];
                    let mut b_agg = vec![0u32; cfg.b_mults().len()];
                    for level in &t.levels {
                        assert!(!level.is_empty());
                        for (i, b) in level.iter().enumerate() {
                            assert_eq!(b.evals_a.len(), b.dim as usize);
                            assert_eq!(b.evals_b.len(), b.dim as usize);
                            for &l in &b.evals_a {
                                a_agg[l as usize] += b.mult;
                            }
                            for &l in &b.evals_b {
                                b_agg[l as usize] += b.mult;
                            }
                            for prev in &level[..i] {
                                assert_ne!(
                                    (prev.dim, &prev.evals_a, &prev.evals_b),
                                    (b.dim, &b.evals_a, &b.evals_b)
                                );
                            }
                        }
                    }
                    a_agg.sort_unstable_by(|x, y| y.cmp(x));
                    b_agg.sort_unstable_by(|x, y| y.cmp(x));
                    assert_eq!(a_agg, cfg.a_mults());
                    assert_eq!(b_agg, cfg.b_mults());
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let cfg = cfg(&[2, 1, 1], &[2, 2]);
        assert_eq!(
            enumerate_types(&cfg).unwrap(),
            enumerate_types(&cfg).unwrap()
        );
    }

    #[test]
    fn flatten_expands_multiplicity() {
        let t = TypeDescriptor {
            levels: vec![
                vec![
                    IsotypicBlock {
                        dim: 1,
                        mult: 1,
                        evals_a: vec![0],
                        evals_b: vec![0],
                    },
                    IsotypicBlock {
                        dim: 1,
                        mult: 1,
                        evals_a: vec![1],
                        evals_b: vec![1],
                    },
                ],
                vec![IsotypicBlock {
                    dim: 1,
                    mult: 2,
                    evals_a: vec![2],
                    evals_b: vec![2],
                }],
            ],
        };
        let flat = t.flatten();
        assert_eq!(flat.len(), 4);
        assert_eq!(
            flat.iter().map(|b| b.level).collect::<Vec<_>>(),
            vec![1, 1, 2, 2]
        );
        assert_eq!(flat[2].iso, flat[3].iso);
    }

    #[test]
    fn display_mirrors_table_notation() {
        let t = TypeDescriptor {
            levels: vec![
                vec![IsotypicBlock {
                    dim: 1,
                    mult: 1,
                    evals_a: vec![0],
                    evals_b: vec![0],
                }],
                vec![IsotypicBlock {
                    dim: 2,
                    mult: 1,
                    evals_a: vec![1, 2],
                    evals_b: vec![1, 2],
                }],
            ],
        };
        assert_eq!(
            t.to_string(),
            "ξ=({(1,1)},{(2,1)}); σ_A=({{e1}},{{e2,e3}}); σ_B=({{f1}},{{f2,f3}})"
        );
    }
}
