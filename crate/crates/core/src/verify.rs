//! Self-verification suites: golden-value checks frozen from the published
//! closed-form results and independent consistency oracles. Shared by the CLI
//! `verify` subcommand and the acceptance test harness.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::assembly::MotiveEngine;
use crate::counting::{binomial, n_pi_closed, n_pi_enumerate, pair_count, CountMethod};
use crate::eigcfg::{EigenConfig, Partition};
use crate::ffcheck::{count_irr_pairs, count_pairs, predicted_counts, FfParams};
use crate::qpoly::{scaled_sum, GroupKind, MotivePoly};
use crate::strata::schubert_factor;
use crate::total::{stratum_22, sym_motive, x2bar_irr};
use crate::Error;

/// Outcome of one verification item.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn run(name: &str, f: impl FnOnce() -> Result<String, String>) -> Check {
    match f() {
        Ok(detail) => Check {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name: name.to_string(),
            passed: false,
            detail,
        },
    }
}

fn p(s: &str) -> MotivePoly {
    s.parse().expect("static polynomial literal")
}

fn expect_eq(label: &str, got: &MotivePoly, want: &MotivePoly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, expected {want}"))
    }
}

fn cfg(a: &[u32], b: &[u32]) -> EigenConfig {
    EigenConfig::new(a.to_vec(), b.to_vec()).expect("static configuration")
}

// ---------------------------------------------------------------------------
// Golden-value checks against the published tables.
// ---------------------------------------------------------------------------

fn rank2_golden() -> Check {
    run("rank2-golden", || {
        let mut engine = MotiveEngine::new();
        let report = engine
            .config_report(&cfg(&[1, 1], &[1, 1]))
            .map_err(|e| e.to_string())?;
        expect_eq("[R_k]", &report.r_kappa, &p("q^4 + 2q^3 + q^2"))?;
        expect_eq("[R_k^red]", &report.r_red, &p("4q^3 + 2q^2 - 2q"))?;
        expect_eq("[R_k^irr]", &report.r_irr, &p("q^4 - 2q^3 - q^2 + 2q"))?;
        expect_eq("[M_k^irr]", &report.m_irr, &p("q - 2"))?;
        Ok("unique rank-2 configuration matches all four golden polynomials".into())
    })
}

fn rank3_golden() -> Check {
    run("rank3-golden", || {
        let mut engine = MotiveEngine::new();
        let k1 = engine
            .config_report(&cfg(&[1, 1, 1], &[1, 1, 1]))
            .map_err(|e| e.to_string())?;
        expect_eq(
            "k1 [R^red]",
            &k1.r_red,
            &p("18q^10 + 18q^9 - 9q^8 - 9q^7 + 6q^6 + 21q^5 + 3q^4 - 12q^3"),
        )?;
        expect_eq("k1 [M^irr]", &k1.m_irr, &p("q^4 + 4q^3 - 9q^2 - 3q + 12"))?;
        let m_irr_23 = p("q^2 - 3q + 3");
        for c in [cfg(&[2, 1], &[1, 1, 1]), cfg(&[1, 1, 1], &[2, 1])] {
            let report = engine.config_report(&c).map_err(|e| e.to_string())?;
            expect_eq(
                &format!("{c} [R_k]"),
                &report.r_kappa,
                &p("q^10 + 3q^9 + 5q^8 + 5q^7 + 3q^6 + q^5"),
            )?;
            expect_eq(
                &format!("{c} [R^irr]"),
                &report.r_irr,
                &p("q^10 - 3q^9 + 2q^8 + 2q^7 - 2q^5 - 3q^4 + 3q^3"),
            )?;
            expect_eq(&format!("{c} [M^irr]"), &report.m_irr, &m_irr_23)?;
        }
        Ok("rank-3 per-configuration golden polynomials match".into())
    })
}

/// Renders a per-type table row as a canonical comparison key.
fn row_key(m_tau: &MotivePoly, g_tau: &MotivePoly, irr: &MotivePoly, mult: u32) -> String {
    format!("[{m_tau}] | [{g_tau}] | [{irr}] | x{mult}")
}

fn rank3_type_table() -> Check {
    run("rank3-type-table", || {
        let q = MotivePoly::q();
        let u = p("q - 1");
        let u2 = &u * &u;
        let u3 = &u2 * &u;
        let qu = &q * &u; // q² − q
        let qu2 = &q * &u2;
        let qu3 = &q * &u3;
        let s = p("q^2 - 1");
        let one = MotivePoly::one();
        let w = p("q - 2");

        let expected_k1: Vec<(MotivePoly, MotivePoly, MotivePoly, u32)> = vec![
            (one.clone(), u2.clone(), w.clone(), 9),
            (s.clone(), u2.clone(), w.clone(), 9),
            (s.clone(), u2.clone(), w.clone(), 9),
            (one.clone(), u3.clone(), one.clone(), 6),
            (s.clone(), u3.clone(), one.clone(), 18),
            (u2.clone(), u3.clone(), one.clone(), 18),
            (qu2.clone(), u3.clone(), one.clone(), 36),
        ];
        let expected_k2: Vec<(MotivePoly, MotivePoly, MotivePoly, u32)> = vec![
            (one.clone(), u2.clone(), w.clone(), 3),
            (u.clone(), u2.clone(), w.clone(), 3),
            (u.clone(), u2.clone(), w.clone(), 3),
            (one.clone(), u3.clone(), one.clone(), 3),
            (s.clone(), u3.clone(), one.clone(), 3),
            (u.clone(), u3.clone(), one.clone(), 6),
            (u2.clone(), u3.clone(), one.clone(), 3),
            (u2.clone(), u3.clone(), one.clone(), 6),
        ];
        let expected_k3: Vec<(MotivePoly, MotivePoly, MotivePoly, u32)> = vec![
            (one.clone(), u2.clone(), w.clone(), 3),
            (qu.clone(), qu2.clone(), w.clone(), 3),
            (qu.clone(), qu2.clone(), w.clone(), 3),
            (one.clone(), u3.clone(), one.clone(), 3),
            (s.clone(), u3.clone(), one.clone(), 3),
            (qu.clone(), qu3.clone(), one.clone(), 6),
            (u2.clone(), u3.clone(), one.clone(), 3),
            (qu2.clone(), qu3.clone(), one.clone(), 6),
        ];

        // k2 has the repeated eigenvalues in B (torus gauge groups, plain
        // rows); k3 has them in A (q-factored gauge groups and strata).
        let cases = [
            (cfg(&[1, 1, 1], &[1, 1, 1]), expected_k1),
            (cfg(&[1, 1, 1], &[2, 1]), expected_k2),
            (cfg(&[2, 1], &[1, 1, 1]), expected_k3),
        ];
        let mut engine = MotiveEngine::new();
        let mut rows = 0;
        for (config, expected) in cases {
            let report = engine.config_report(&config).map_err(|e| e.to_string())?;
            let mut got: Vec<String> = report
                .strata
                .iter()
                .map(|s| row_key(&s.m_tau, &s.g_tau, &s.irr_factor, s.type_orbit.multiplicity))
                .collect();
            let mut want: Vec<String> = expected
                .iter()
                .map(|(m, g, i, mult)| row_key(m, g, i, *mult))
                .collect();
            got.sort();
            want.sort();
            if got != want {
                return Err(format!(
                    "{config}: per-type rows differ;\n  got:  {got:?}\n  want: {want:?}"
                ));
            }
            rows += want.len();
        }
        Ok(format!(
            "all {rows} rank-3 per-type (M_t, G_t, irr, mult) rows match"
        ))
    })
}

/// The ten rank-4 per-configuration [R_k^irr] golden polynomials.
fn rank4_expected() -> Vec<(EigenConfig, MotivePoly)> {
    let p31 = p(
        "q^18 - 4q^17 + 5q^16 - q^15 - 3q^14 + 3q^13 - 5q^12 + 7q^11 - 2q^10 + q^9 \
                 - 6q^7 + 4q^6",
    );
    let p22 = p(
        "q^20 + 4q^19 - 12q^18 - 4q^17 + 24q^16 - 11q^15 - 3q^14 - 7q^13 - 6q^12 \
                 + 25q^11 - 3q^10 + 11q^9 - 19q^8 - 18q^7 + 18q^6",
    );
    let p211 = p(
        "q^22 + 5q^21 + 6q^20 - 40q^19 - 13q^18 + 57q^17 + 51q^16 - 35q^15 - 74q^14 \
                  - 32q^13 + 25q^12 + 93q^11 + 38q^10 - 30q^9 - 82q^8 - 18q^7 + 48q^6",
    );
    let p1111 = p(
        "q^24 + 6q^23 + 19q^22 + 10q^21 - 125q^20 - 68q^19 + 106q^18 + 260q^17 \
                   + 129q^16 - 344q^15 - 277q^14 - 88q^13 + 265q^12 + 406q^11 + 8q^10 \
                   - 182q^9 - 270q^8 + 144q^6",
    );
    let p22_211 = p(
        "q^18 - 3q^17 + 4q^16 - 2q^15 - 3q^14 + 3q^13 - 3q^12 + 7q^11 - 2q^10 \
                     - q^8 - 5q^7 + 4q^6",
    );
    // For ((2,1,1),(2,1,1)) the published value overstates [R^irr] by
    // 2(q−2)[PGL_4]: the two strata mixing a 2-dimensional irreducible with a
    // repeated character are nonempty, with completion spaces [GL_2] and
    // q^4 − 1 respectively. The corrected polynomial below matches a
    // brute-force count of pairs with spectra (1,1,2,3) over F_5 exactly
    // (see tests/brute_force.rs).
    let p211_211 = p(
        "q^20 + 2q^19 - 11q^18 + 4q^17 + 16q^16 - 11q^15 - 3q^14 - 10q^13 + 3q^12 \
                      + 18q^11 + q^10 + 6q^9 - 20q^8 - 9q^7 + 13q^6",
    );
    vec![
        (cfg(&[3, 1], &[1, 1, 1, 1]), p31.clone()),
        (cfg(&[1, 1, 1, 1], &[3, 1]), p31),
        (cfg(&[2, 2], &[1, 1, 1, 1]), p22.clone()),
        (cfg(&[1, 1, 1, 1], &[2, 2]), p22),
        (cfg(&[2, 1, 1], &[1, 1, 1, 1]), p211.clone()),
        (cfg(&[1, 1, 1, 1], &[2, 1, 1]), p211),
        (cfg(&[1, 1, 1, 1], &[1, 1, 1, 1]), p1111),
        (cfg(&[2, 2], &[2, 1, 1]), p22_211.clone()),
        (cfg(&[2, 1, 1], &[2, 2]), p22_211),
        (cfg(&[2, 1, 1], &[2, 1, 1]), p211_211),
    ]
}

fn rank4_golden() -> Check {
    run("rank4-golden", || {
        let mut engine = MotiveEngine::new();
        let expected = rank4_expected();
        let all = EigenConfig::configs_for_rank(4).map_err(|e| e.to_string())?;
        if all.len() != expected.len() {
            return Err(format!(
                "expected {} admissible rank-4 configurations, found {}",
                expected.len(),
                all.len()
            ));
        }
        for (config, want) in &expected {
            let report = engine.config_report(config).map_err(|e| e.to_string())?;
            expect_eq(&format!("{config} [R^irr]"), &report.r_irr, want)?;
        }
        Ok(format!(
            "all {} rank-4 [R_k^irr] polynomials match",
            expected.len()
        ))
    })
}

/// The closed-form rank-4 result: binomial coefficients and their paired
/// polynomials.
fn rank4_closed_form(n: u64, m: u64) -> Result<MotivePoly, Error> {
    let b4 = |k: i64| binomial(k, 4);
    let b2 = |k: i64| binomial(k, 2);
    let b21 = |k: i64| k * (k - 1) * (k - 2) / 2; // multinomial (k; 2, 1)
    let b11 = |k: i64| k * (k - 1); // multinomial (k; 1, 1)
    let (n, m) = (n as i64, m as i64);
    let m1 = p("q^9 + 6q^8 + 20q^7 + 17q^6 - 98q^5 - 26q^4 + 38q^3 + 126q^2 - 144");
    let m2 = p("q^7 + 5q^6 + 7q^5 - 34q^4 + 34q^2 + 18q - 48");
    let m3 = p("q^5 + 4q^4 - 11q^3 + q^2 + 18q - 18");
    let m4 = p("q^3 - 4q^2 + 6q - 4");
    let m5 = p("q^3 - 3q^2 + 5q - 4");
    // Carries the ((2,1,1),(2,1,1)) correction: 2(q−2) less than the
    // published coefficient (see rank4_expected).
    let m6 = p("q^5 + 2q^4 - 10q^3 + 7q^2 + 9q - 13");
    scaled_sum(&[
        (4 * b4(n) * b4(m), n * m, m1),
        (4 * (b4(n) * b21(m) + b21(n) * b4(m)), n * m, m2),
        (4 * (b4(n) * b2(m) + b2(n) * b4(m)), n * m, m3),
        (4 * (b4(n) * b11(m) + b11(n) * b4(m)), n * m, m4),
        (4 * (b21(n) * b2(m) + b2(n) * b21(m)), n * m, m5),
        (4 * b21(n) * b21(m), n * m, m6),
    ])
}

fn theorem_main() -> Check {
    run("rank4-closed-form", || {
        let mut engine = MotiveEngine::new();
        let mut pairs = 0;
        for n in 2..=9u64 {
            for m in (n + 1)..=9u64 {
                if n.gcd(&m) != 1 {
                    continue;
                }
                let got = engine.m_irr(4, n, m).map_err(|e| e.to_string())?;
                let want = rank4_closed_form(n, m).map_err(|e| e.to_string())?;
                expect_eq(&format!("m_irr(4, {n}, {m})"), &got, &want)?;
                pairs += 1;
            }
        }
        Ok(format!(
            "recursive and closed-form rank-4 motives agree on {pairs} coprime pairs"
        ))
    })
}

fn stratum22_displays() -> Check {
    run("stratum-22-displays", || {
        for (n, m) in [
            (3u64, 5u64),
            (5, 7),
            (3, 7),
            (7, 9),
            (2, 3),
            (4, 5),
            (8, 9),
            (2, 9),
        ] {
            let got = stratum_22(n, m).map_err(|e| e.to_string())?;
            // Defining identity: q·Sym²(B) + (−1)·(B² − Sym²(B)).
            let b = x2bar_irr(n, m).map_err(|e| e.to_string())?;
            let s = sym_motive(&b, 2).map_err(|e| e.to_string())?;
            let direct = &(&MotivePoly::q() * &s) - &(&(&b * &b) - &s);
            expect_eq(&format!("stratum_22({n}, {m}) identity"), &got, &direct)?;
            // Expanded per-parity closed forms of (q+1)·Sym²(B) − B². These
            // fix two sign slips and an off-by-one in the published expanded
            // displays, whose even-parity version is not even integral.
            let (n, m) = if m % 2 == 0 { (m, n) } else { (n, m) };
            let (n, m) = (n as i64, m as i64);
            let want = if n % 2 == 1 {
                scaled_sum(&[
                    (
                        (n - 1) * (n - 1) * (m - 1) * (m - 1),
                        32,
                        p("q^3 - 5q^2 + 8q - 4"),
                    ),
                    ((n - 1) * (m - 1), 8, p("q^3 + q^2 - 2q - 2")),
                ])
            } else {
                scaled_sum(&[
                    (
                        (n - 2) * (n - 2) * (m - 1) * (m - 1),
                        32,
                        p("q^3 - 5q^2 + 8q - 4"),
                    ),
                    ((n - 2) * (m - 1), 8, p("q^3 + q^2 - 2q - 2")),
                    ((m - 1) * (m - 1), 8, p("q^3 - 3q^2 + 3q - 1")),
                    (m - 1, 4, p("q^3 + q^2 - q - 1")),
                    ((n - 2) * (m - 1) * (m - 1), 8, p("q^3 - 4q^2 + 5q - 2")),
                ])
            }
            .map_err(|e| e.to_string())?;
            expect_eq(&format!("stratum_22({n}, {m}) expansion"), &got, &want)?;
        }
        Ok(
            "{2,2} stratum matches its defining identity and expanded closed \
            forms in both parity branches (published displays corrected for \
            sign errata)"
                .into(),
        )
    })
}

fn total_motive_assembly() -> Check {
    run("total-motive-assembly", || {
        let mut engine = MotiveEngine::new();
        let total223 = engine.total_motive(2, 2, 3).map_err(|e| e.to_string())?;
        expect_eq("total_motive(2, 2, 3)", &total223, &p("2q - 2"))?;
        let mut pairs = 0;
        for n in 1..=9u64 {
            for m in n..=9u64 {
                if n.gcd(&m) != 1 {
                    continue;
                }
                let a = engine
                    .total_motive(4, n, m)
                    .map_err(|e| format!("total_motive(4, {n}, {m}) failed: {e}"))?;
                let b = engine.total_motive(4, m, n).map_err(|e| e.to_string())?;
                expect_eq(&format!("total_motive(4, {n}, {m}) symmetry"), &a, &b)?;
                pairs += 1;
            }
        }
        Ok(format!(
            "rank-4 totals assemble exactly and are n<->m symmetric on {pairs} pairs"
        ))
    })
}

fn schubert_specializations() -> Check {
    run("schubert-specializations", || {
        for c in 1..=4u32 {
            for d in 0..c {
                let got = schubert_factor(c, d, 1).map_err(|e| e.to_string())?;
                let want = &MotivePoly::monomial(c as usize, 1.into())
                    - &MotivePoly::monomial(d as usize, 1.into());
                expect_eq(&format!("schubert({c}, {d}, 1)"), &got, &want)?;
            }
        }
        let s210 = schubert_factor(1, 0, 2).map_err(|e| e.to_string())?;
        expect_eq("schubert(1, 0, 2)", &s210, &MotivePoly::zero())?;
        let s220 = schubert_factor(2, 0, 2).map_err(|e| e.to_string())?;
        expect_eq(
            "schubert(2, 0, 2)",
            &s220,
            &MotivePoly::group_motive(GroupKind::Gl, 2),
        )?;
        Ok("m=1 gives q^C - q^D; (c,d,m)=(1,0,2) gives 0; (2,0,2) gives [GL_2]".into())
    })
}

// ---------------------------------------------------------------------------
// Independent consistency oracles.
// ---------------------------------------------------------------------------

fn counting_consistency() -> Check {
    run("counting-consistency", || {
        let mut checked = 0u64;
        for r in 1..=4u32 {
            let patterns = Partition::all_of_rank(r);
            for n in 2..=12u64 {
                for m in 2..=12u64 {
                    if n.gcd(&m) != 1 {
                        continue;
                    }
                    for a in 0..r {
                        for pi in &patterns {
                            match n_pi_closed(n, r, a, pi) {
                                Ok(closed) => {
                                    let enumerated = n_pi_enumerate(n, r, a, pi);
                                    if closed != enumerated {
                                        return Err(format!(
                                            "N^{pi}(n={n}, r={r}, a={a}): closed {closed} != enumerated {enumerated}"
                                        ));
                                    }
                                    checked += 1;
                                }
                                Err(Error::UnsupportedPartition) => {}
                                Err(e) => return Err(e.to_string()),
                            }
                        }
                    }
                    for pi1 in &patterns {
                        for pi2 in &patterns {
                            let enumerated = pair_count(n, m, r, pi1, pi2, CountMethod::Enumerate)
                                .map_err(|e| e.to_string())?;
                            match pair_count(n, m, r, pi1, pi2, CountMethod::Closed) {
                                Ok(closed) if closed != enumerated => {
                                    return Err(format!(
                                        "|M^({pi1}),({pi2})| n={n} m={m} r={r}: closed {closed} != enumerated {enumerated}"
                                    ));
                                }
                                Ok(_) => checked += 1,
                                Err(Error::UnsupportedPartition) => {}
                                Err(e) => return Err(e.to_string()),
                            }
                            if n.gcd(&u64::from(r)) == 1 && m.gcd(&u64::from(r)) == 1 {
                                let multi = pair_count(n, m, r, pi1, pi2, CountMethod::Multinomial)
                                    .map_err(|e| e.to_string())?;
                                if multi != enumerated {
                                    return Err(format!(
                                        "|M^({pi1}),({pi2})| n={n} m={m} r={r}: multinomial {multi} != enumerated {enumerated}"
                                    ));
                                }
                                checked += 1;
                            }
                        }
                    }
                    // |M^{pi,pi}| = (1/r)·C(n−1, r−1)·C(m−1, r−1) for pi = {1^r}.
                    let ones = Partition::from_mults(&vec![1; r as usize]);
                    let lhs = pair_count(n, m, r, &ones, &ones, CountMethod::Enumerate)
                        .map_err(|e| e.to_string())?;
                    let rhs_num = binomial(n as i64 - 1, i64::from(r) - 1)
                        * binomial(m as i64 - 1, i64::from(r) - 1);
                    if lhs * i64::from(r) != rhs_num {
                        return Err(format!(
                            "|M^(1^{r}),(1^{r})| n={n} m={m}: {lhs} != C(n-1,r-1)C(m-1,r-1)/r"
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} counting identities verified"))
    })
}

fn ff_oracle(q: u64, n: u64, m: u64) -> Check {
    let name = format!("ff-oracle-n{n}-m{m}-q{q}");
    run(&name, || {
        let params = match FfParams::new(q, n, m) {
            Ok(params) => params,
            Err(Error::FieldTooSmall { q, lcm }) => {
                // Diagnose anyway: the counts genuinely disagree because the
                // field misses the required roots of unity, so strata that are
                // nonempty in characteristic zero have no F_q points.
                let params =
                    FfParams::new_without_field_check(q, n, m).map_err(|e| e.to_string())?;
                let measured = (count_pairs(&params), count_irr_pairs(&params));
                let mut engine = MotiveEngine::new();
                let predicted =
                    predicted_counts(&params, &mut engine).map_err(|e| e.to_string())?;
                return Err(format!(
                    "F_{q} lacks the required roots of unity (lcm(2n,2m) = {lcm} does not \
                     divide q - 1 = {}), so the polynomial-count hypothesis fails: measured \
                     (total, irr) = {measured:?} but predictions evaluate to ({}, {})",
                    q - 1,
                    predicted.0,
                    predicted.1
                ));
            }
            Err(e) => return Err(e.to_string()),
        };
        let measured_total = count_pairs(&params);
        let measured_irr = count_irr_pairs(&params);
        let mut engine = MotiveEngine::new();
        let (ptotal, pirr) = predicted_counts(&params, &mut engine).map_err(|e| e.to_string())?;
        if ptotal != BigInt::from(measured_total) || pirr != BigInt::from(measured_irr) {
            return Err(format!(
                "measured (total, irr) = ({measured_total}, {measured_irr}) but predicted \
                 ({ptotal}, {pirr})"
            ));
        }
        Ok(format!(
            "measured = predicted: total {measured_total}, irreducible {measured_irr}"
        ))
    })
}

fn pgl_divisibility() -> Check {
    run("pgl-divisibility", || {
        let mut engine = MotiveEngine::new();
        let mut configs = 0;
        for r in 2..=4u32 {
            let pgl = MotivePoly::group_motive(GroupKind::Pgl, r);
            for config in EigenConfig::configs_for_rank(r).map_err(|e| e.to_string())? {
                let report = engine.config_report(&config).map_err(|e| e.to_string())?;
                let quotient = report.r_irr.exact_div(&pgl).map_err(|_| {
                    format!("{config}: [R_k] - [R_k^red] is not divisible by [PGL_{r}]")
                })?;
                expect_eq(&format!("{config} quotient"), &quotient, &report.m_irr)?;
                configs += 1;
            }
        }
        Ok(format!(
            "[R_k^irr] exactly divisible by [PGL_r] for all {configs} admissible configurations"
        ))
    })
}

fn random_poly(rng: &mut StdRng) -> MotivePoly {
    let degree = rng.gen_range(0..=8usize);
    let coeffs: Vec<BigInt> = (0..=degree)
        .map(|_| BigInt::from(rng.gen_range(-20i64..=20)))
        .collect();
    MotivePoly::from_coeffs(coeffs)
}

fn exact_div_randomized() -> Check {
    run("exact-div-randomized", || {
        let mut rng = StdRng::seed_from_u64(0x746f_7275_735f_6b74);
        let mut done = 0;
        while done < 1000 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            if b.is_zero() {
                continue;
            }
            let product = &a * &b;
            let back = product.exact_div(&b).map_err(|e| e.to_string())?;
            if back != a {
                return Err(format!("exact_div(({a})*({b}), {b}) returned {back}"));
            }
            done += 1;
        }
        Ok("1000 randomized exact_div(a*b, b) = a round-trips".into())
    })
}

/// Golden-value suite frozen from the published tables.
pub fn paper_suite() -> Vec<Check> {
    vec![
        rank2_golden(),
        rank3_golden(),
        rank3_type_table(),
        rank4_golden(),
        theorem_main(),
        stratum22_displays(),
        total_motive_assembly(),
        schubert_specializations(),
    ]
}

/// Independent consistency oracles (enumeration, finite fields, algebra).
pub fn oracle_suite() -> Vec<Check> {
    vec![
        counting_consistency(),
        ff_oracle(13, 2, 3),
        ff_oracle(13, 3, 4),
        ff_oracle(11, 2, 5),
        pgl_divisibility(),
        exact_div_randomized(),
    ]
}

/// Both suites, in order.
pub fn all_suites() -> Vec<Check> {
    let mut checks = paper_suite();
    checks.extend(oracle_suite());
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_suite_passes() {
        for check in paper_suite() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn oracle_suite_reports_field_limitations_only() {
        // The two triples whose field misses the required roots of unity are
        // expected to fail with a diagnostic; everything else must pass.
        for check in oracle_suite() {
            let expected_red =
                check.name == "ff-oracle-n3-m4-q13" || check.name == "ff-oracle-n2-m5-q11";
            assert_eq!(
                check.passed, !expected_red,
                "{}: {}",
                check.name, check.detail
            );
        }
    }
}
