//! Motive of a single stratum R(τ): the completion variety [M_τ], the gauge
//! group [G_τ], the recursive irreducible factor [𝔐_τ^irr], and
//! [R(τ)] = [𝔐_τ^irr] · [M_τ] · [GL_r] / [G_τ].

use serde::{Deserialize, Serialize};

use crate::eigcfg::EigenConfig;
use crate::qpoly::{GroupKind, MotivePoly};
use crate::typeenum::{FlatBlock, TypeDescriptor, TypeOrbit};
use crate::{Error, Result};

/// Per-type record of every factor entering [R(τ)].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub type_orbit: TypeOrbit,
    pub m_tau: MotivePoly,
    pub g_tau: MotivePoly,
    pub irr_factor: MotivePoly,
    pub r_tau: MotivePoly,
}

/// The exponents behind one consecutive-level target factor, exposed for the
/// CLI `--explain` flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetFactor {
    /// 1-based level of the target isotypic class.
    pub level: usize,
    /// Index of the isotypic class within its level.
    pub iso: usize,
    /// Free coordinates C_{i,j}.
    pub c: u32,
    /// Forbidden subspace dimension D_{i,j}.
    pub d: u32,
    /// Isotypic multiplicity of the target.
    pub mult: u32,
}

/// Exponent breakdown of [M_τ]: the distant-pair exponent C plus one record
/// per consecutive-level isotypic target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtauBreakdown {
    pub distant: u32,
    pub targets: Vec<TargetFactor>,
}

/// C(α, β) = dim U_α · dim U_β − Σ_k b_k^α b_k^β: the free entries the pair
/// contributes to the completion space.
pub fn pair_dim(alpha: &FlatBlock, beta: &FlatBlock) -> u32 {
    alpha.dim * beta.dim - alpha.b_overlap(beta)
}

/// dim Hom_Γ(U_β, ⊕ level blocks): for dim-1 blocks this is the number of
/// level blocks with the same (dim, evalsA, evalsB) signature. A signature
/// coincidence involving a dim ≥ 2 block is not determined combinatorially
/// (such blocks have moduli) and is reported as `UnsupportedHom`; it cannot
/// occur for admissible configurations at r ≤ 4.
pub fn hom_dim(beta: &FlatBlock, level_blocks: &[FlatBlock]) -> Result<u32> {
    let mut count = 0;
    for alpha in level_blocks {
        if alpha.signature() == beta.signature() {
            if beta.dim >= 2 {
                return Err(Error::UnsupportedHom);
            }
            count += 1;
        }
    }
    Ok(count)
}

/// The generalized Schubert factor q^{m·d} · ∏_{l=0}^{m−1} (q^{c−d} − q^l):
/// the class of m-tuples of vectors in a c-dimensional space whose nontrivial
/// combinations avoid a fixed d-dimensional subspace. Valid for m = 1 (where
/// it is q^c − q^d) and for m = 2 with dim-1 targets; anything else is
/// outside the proven domain.
pub fn schubert_factor(c: u32, d: u32, m: u32) -> Result<MotivePoly> {
    if m == 0 || m > 2 || c < d {
        return Err(Error::UnsupportedSchubert);
    }
    let mut acc = MotivePoly::monomial((m * d) as usize, 1.into());
    let head = MotivePoly::monomial((c - d) as usize, 1.into());
    for l in 0..m {
        acc = &acc * &(&head - &MotivePoly::monomial(l as usize, 1.into()));
    }
    Ok(acc)
}

fn m_tau_parts(t: &TypeDescriptor) -> Result<(MotivePoly, MtauBreakdown)> {
    let flat = t.flatten();
    let mut acc = MotivePoly::one();
    let mut targets = Vec::new();
    for li in 1..t.levels.len() {
        let sources: Vec<&FlatBlock> = flat.iter().filter(|b| b.level == li).collect();
        let level_sources: Vec<FlatBlock> = sources.iter().map(|b| (*b).clone()).collect();
        for (iso, class) in t.levels[li].iter().enumerate() {
            let beta = FlatBlock {
                dim: class.dim,
                evals_a: class.evals_a.clone(),
                evals_b: class.evals_b.clone(),
                level: li + 1,
                iso,
            };
            let m = class.mult;
            if m > 1 && class.dim != 1 {
                return Err(Error::UnsupportedSchubert);
            }
            let c: u32 = sources.iter().map(|a| pair_dim(a, &beta)).sum();
            let a_total: u32 = sources.iter().map(|a| a.a_overlap(&beta)).sum();
            let hom = hom_dim(&beta, &level_sources)?;
            if a_total < hom {
                return Err(Error::UnsupportedSchubert);
            }
            let d = a_total - hom;
            acc = &acc * &schubert_factor(c, d, m)?;
            targets.push(TargetFactor {
                level: li + 1,
                iso,
                c,
                d,
                mult: m,
            });
        }
    }
    // Pairs separated by more than one level contribute free coordinates only.
    let mut distant = 0u32;
    for alpha in &flat {
        for beta in &flat {
            if beta.level > alpha.level + 1 {
                distant += pair_dim(alpha, beta);
            }
        }
    }
    let poly = &MotivePoly::monomial(distant as usize, 1.into()) * &acc;
    Ok((poly, MtauBreakdown { distant, targets }))
}

/// [M_τ]: motive of the variety of completions of the associated graded
/// representation into a representation of type τ.
pub fn m_tau_motive(t: &TypeDescriptor) -> Result<MotivePoly> {
    Ok(m_tau_parts(t)?.0)
}

/// The exponents entering [M_τ], for diagnostics.
pub fn m_tau_breakdown(t: &TypeDescriptor) -> Result<MtauBreakdown> {
    Ok(m_tau_parts(t)?.1)
}

/// [G_τ] = q^D · ∏_{i,j} [GL_{m_{i,j}}] with D the total A-eigenvalue overlap
/// over ordered cross-level pairs, together with the exponent D.
pub fn gauge_parts(t: &TypeDescriptor) -> (MotivePoly, u32) {
    let flat = t.flatten();
    let mut d = 0u32;
    for alpha in &flat {
        for beta in &flat {
            if beta.level > alpha.level {
                d += alpha.a_overlap(beta);
            }
        }
    }
    let mut acc = MotivePoly::monomial(d as usize, 1.into());
    for block in t.levels.iter().flatten() {
        acc = &acc * &MotivePoly::group_motive(GroupKind::Gl, block.mult);
    }
    (acc, d)
}

/// [G_τ]: motive of the gauge group of the stratum.
pub fn gauge_motive(t: &TypeDescriptor) -> MotivePoly {
    gauge_parts(t).0
}

/// ∏_α [𝔐^irr_{κ_α}] over flattened blocks; `recurse` resolves the
/// irreducible-moduli motive of each block's sub-configuration.
pub fn irr_factor(
    t: &TypeDescriptor,
    recurse: &mut dyn FnMut(&EigenConfig) -> Result<MotivePoly>,
) -> Result<MotivePoly> {
    let mut acc = MotivePoly::one();
    for block in t.flatten() {
        if block.dim == 1 {
            continue;
        }
        let sub = EigenConfig::new(label_mults(&block.evals_a), label_mults(&block.evals_b))?;
        acc = &acc * &recurse(&sub)?;
    }
    Ok(acc)
}

fn label_mults(evals: &[u8]) -> Vec<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for &l in evals {
        *counts.entry(l).or_insert(0u32) += 1;
    }
    counts.into_values().collect()
}

/// Full per-stratum report; every division is exact by construction.
pub fn stratum_motive(
    orbit: &TypeOrbit,
    recurse: &mut dyn FnMut(&EigenConfig) -> Result<MotivePoly>,
) -> Result<StratumReport> {
    let t = &orbit.representative;
    let m_tau = m_tau_motive(t)?;
    let g_tau = gauge_motive(t);
    let irr = irr_factor(t, recurse)?;
    let gl_r = MotivePoly::group_motive(GroupKind::Gl, t.rank());
    let r_tau = (&(&irr * &m_tau) * &gl_r).exact_div(&g_tau)?;
    Ok(StratumReport {
        type_orbit: orbit.clone(),
        m_tau,
        g_tau,
        irr_factor: irr,
        r_tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typeenum::IsotypicBlock;

    fn p(s: &str) -> MotivePoly {
        s.parse().unwrap()
    }

    fn block(dim: u32, mult: u32, ea: &[u8], eb: &[u8]) -> IsotypicBlock {
        IsotypicBlock {
            dim,
            mult,
            evals_a: ea.to_vec(),
            evals_b: eb.to_vec(),
        }
    }

    fn flat(dim: u32, ea: &[u8], eb: &[u8], level: usize) -> FlatBlock {
        FlatBlock {
            dim,
            evals_a: ea.to_vec(),
            evals_b: eb.to_vec(),
            level,
            iso: 0,
        }
    }

    #[test]
    fn pair_dim_examples() {
        assert_eq!(
            pair_dim(&flat(1, &[0], &[0], 1), &flat(1, &[1], &[1], 2)),
            1
        );
        assert_eq!(
            pair_dim(&flat(1, &[0], &[0], 1), &flat(1, &[1], &[0], 2)),
            0
        );
        assert_eq!(
            pair_dim(&flat(1, &[0], &[0], 1), &flat(2, &[1, 2], &[0, 1], 2)),
            1
        );
    }

    #[test]
    fn hom_dim_examples() {
        let level = vec![flat(1, &[0], &[0], 1), flat(1, &[1], &[1], 1)];
        assert_eq!(hom_dim(&flat(1, &[0], &[0], 2), &level).unwrap(), 1);
        assert_eq!(hom_dim(&flat(1, &[0], &[2], 2), &level).unwrap(), 0);
        let deep = vec![flat(2, &[0, 1], &[0, 1], 1)];
        assert_eq!(
            hom_dim(&flat(2, &[0, 1], &[0, 1], 2), &deep),
            Err(Error::UnsupportedHom)
        );
        assert_eq!(hom_dim(&flat(2, &[0, 2], &[0, 1], 2), &deep).unwrap(), 0);
    }

    #[test]
    fn schubert_specializations() {
        // m = 1 is literally q^C − q^D.
        assert_eq!(schubert_factor(3, 1, 1).unwrap(), p("q^3 - q"));
        // m = 2, c = 1, d = 0: the case that cannot happen geometrically.
        assert_eq!(schubert_factor(1, 0, 2).unwrap(), MotivePoly::zero());
        // m = 2, c = 2, d = 0: q^4 minus the rank ≤ 1 matrices, i.e. [GL_2].
        assert_eq!(
            schubert_factor(2, 0, 2).unwrap(),
            MotivePoly::group_motive(GroupKind::Gl, 2)
        );
        assert_eq!(schubert_factor(1, 2, 1), Err(Error::UnsupportedSchubert));
        assert_eq!(schubert_factor(2, 0, 3), Err(Error::UnsupportedSchubert));
    }

    #[test]
    fn m_tau_examples() {
        // Rank-3 κ3 type ξ=({(1,1)},{(2,1)}), σ_A=({{e1}},{{e1,e2}}), B distinct.
        let t = TypeDescriptor {
            levels: vec![
                vec![block(1, 1, &[0], &[0])],
                vec![block(2, 1, &[0, 1], &[1, 2])],
            ],
        };
        assert_eq!(m_tau_motive(&t).unwrap(), p("q^2 - q"));
        // Any single-level type.
        let single = TypeDescriptor {
            levels: vec![vec![block(1, 1, &[0], &[0]), block(2, 1, &[1, 2], &[1, 2])]],
        };
        assert_eq!(m_tau_motive(&single).unwrap(), MotivePoly::one());
        // Two dim-1 sources, one mult-2 dim-1 target, all labels disjoint.
        let two_to_double = TypeDescriptor {
            levels: vec![
                vec![block(1, 1, &[0], &[0]), block(1, 1, &[1], &[1])],
                vec![block(1, 2, &[2], &[2])],
            ],
        };
        assert_eq!(
            m_tau_motive(&two_to_double).unwrap(),
            p("q^4 - q^3 - q^2 + q")
        );
    }

    #[test]
    fn gauge_examples() {
        let single = TypeDescriptor {
            levels: vec![vec![block(1, 1, &[0], &[0]), block(1, 1, &[1], &[1])]],
        };
        assert_eq!(gauge_motive(&single), p("q^2 - 2q + 1"));
        let t = TypeDescriptor {
            levels: vec![
                vec![block(1, 1, &[0], &[0])],
                vec![block(2, 1, &[0, 1], &[1, 2])],
            ],
        };
        assert_eq!(gauge_motive(&t), p("q^3 - 2q^2 + q"));
        let doubled = TypeDescriptor {
            levels: vec![vec![block(1, 2, &[0], &[0]), block(1, 1, &[1], &[1])]],
        };
        // Contains the factor [GL_2].
        assert_eq!(doubled.levels[0][0].mult, 2,);
        assert!(gauge_motive(&doubled)
            .exact_div(&MotivePoly::group_motive(GroupKind::Gl, 2))
            .is_ok());
    }

    #[test]
    fn irr_factor_recursion() {
        let mut recurse = |cfg: &EigenConfig| -> Result<MotivePoly> {
            // Rank-2 sub-blocks: q − 2 when all labels distinct, else 0.
            if cfg.a_mults() == [1, 1] && cfg.b_mults() == [1, 1] {
                Ok(p("q - 2"))
            } else {
                Ok(MotivePoly::zero())
            }
        };
        let t = TypeDescriptor {
            levels: vec![vec![block(1, 1, &[0], &[0]), block(2, 1, &[1, 2], &[1, 2])]],
        };
        assert_eq!(irr_factor(&t, &mut recurse).unwrap(), p("q - 2"));
        let all_dim1 = TypeDescriptor {
            levels: vec![vec![block(1, 1, &[0], &[0]), block(1, 1, &[1], &[1])]],
        };
        assert_eq!(irr_factor(&all_dim1, &mut recurse).unwrap(), p("1"));
        let repeated = TypeDescriptor {
            levels: vec![vec![block(1, 1, &[0], &[0]), block(2, 1, &[1, 1], &[1, 2])]],
        };
        assert_eq!(
            irr_factor(&repeated, &mut recurse).unwrap(),
            MotivePoly::zero()
        );
    }

    #[test]
    fn stratum_motive_rank2() {
        let mut recurse =
            |_: &EigenConfig| -> Result<MotivePoly> { panic!("no dim >= 2 blocks here") };
        let single = TypeOrbit {
            representative: TypeDescriptor {
                levels: vec![vec![block(1, 1, &[0], &[0]), block(1, 1, &[1], &[1])]],
            },
            multiplicity: 2,
        };
        let report = stratum_motive(&single, &mut recurse).unwrap();
        assert_eq!(report.r_tau, p("q^2 + q"));
        let two_level = TypeOrbit {
            representative: TypeDescriptor {
                levels: vec![vec![block(1, 1, &[0], &[0])], vec![block(1, 1, &[1], &[1])]],
            },
            multiplicity: 4,
        };
        let report = stratum_motive(&two_level, &mut recurse).unwrap();
        assert_eq!(report.r_tau, p("q^3 - q"));
    }
}
