//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use detkrs::greene::{self, decomposition_shapes, evaluate, BlockKind, Mode, Stat};
use detkrs::ideals::{
    gap_monomial, gkrs_failure_witness, in_ini, verify_groebner_determinantal, verify_identity,
    Comparison, IdealExpr,
};
use detkrs::krs::{krs, krs_inverse_monomial, krs_monomial};
use detkrs::paths::{
    certify_shelling, facets, giambelli_multiplicity, gv_multiplicity, hilbert_series,
};
use detkrs::poly::rational;
use detkrs::rees::{
    bigraded_monomials, gamma_of_x, in_ini_symbolic_rees, is_gorenstein_at, satisfies_forms,
    symbolic_forms, GorensteinReason,
};
use detkrs::straighten::{normalize, straighten, straighten_oracle, ORACLE_DEFAULT_BOUND};
use detkrs::tableau::{minor_preceq, standard_bitableaux};
use detkrs::verify::{all_sequences, random_monomial};
use detkrs::{Bitableau, Minor, PositionMonomial, Shape, Tableau};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Brute-force test for a `t`-diagonal: `t` support positions with strictly
/// increasing rows and columns.
fn has_diagonal(mon: &PositionMonomial, t: usize) -> bool {
    fn rec(support: &[(usize, usize)], last: (usize, usize), need: usize) -> bool {
        if need == 0 {
            return true;
        }
        support
            .iter()
            .any(|&p| p.0 > last.0 && p.1 > last.1 && rec(support, p, need - 1))
    }
    let support: Vec<(usize, usize)> = mon.exponents().keys().copied().collect();
    rec(&support, (0, 0), t)
}

fn sh(parts: &[usize]) -> Shape {
    Shape::new(parts.to_vec()).unwrap()
}

fn minor(rows: &[usize], cols: &[usize]) -> Minor {
    Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
}

fn krs_bijection() -> Outcome {
    let (m, n) = (3, 3);
    for d in 0..=4 {
        let bitableaux = standard_bitableaux(m, n, d);
        let monomials = PositionMonomial::all_of_degree(m, n, d);
        let expected = binomial(8 + d as u64, d as u64) as usize;
        ensure(monomials.len() == expected, || {
            format!("{} monomials in degree {d}", monomials.len())
        })?;
        ensure(bitableaux.len() == expected, || {
            format!(
                "{} standard bitableaux in degree {d}, expected {expected}",
                bitableaux.len()
            )
        })?;
        for b in &bitableaux {
            let mon = krs_monomial(b, m, n).map_err(|e| format!("{b}: {e}"))?;
            ensure(krs_inverse_monomial(&mon) == *b, || {
                format!("inverse after krs changes {b}")
            })?;
        }
        for mon in &monomials {
            let back = krs_monomial(&krs_inverse_monomial(mon), m, n)
                .map_err(|e| format!("{mon}: {e}"))?;
            ensure(back == *mon, || format!("krs after inverse changes {mon}"))?;
        }
    }
    Ok(())
}

fn sample_krs() -> Outcome {
    let b = Bitableau::new(
        Tableau::new(vec![vec![1, 3, 4, 5], vec![2, 6]]),
        Tableau::new(vec![vec![1, 2, 3, 6], vec![4, 5]]),
    )
    .map_err(|e| e.to_string())?;
    let arr = krs(&b).map_err(|e| e.to_string())?;
    ensure(arr.top == vec![1, 2, 3, 4, 5, 6], || {
        format!("top {:?}", arr.top)
    })?;
    ensure(arr.bottom == vec![4, 1, 2, 5, 6, 3], || {
        format!("bottom {:?}", arr.bottom)
    })?;
    let mon = krs_monomial(&b, 6, 6).map_err(|e| e.to_string())?;
    let expected = PositionMonomial::parse(6, 6, "1,4 2,1 3,2 4,5 5,6 6,3").unwrap();
    ensure(mon == expected, || format!("monomial {mon}"))
}

fn greene_statistics() -> Outcome {
    for s in all_sequences(6, 4) {
        for k in 1..=4 {
            for stat in [Stat::Alpha, Stat::Gamma, Stat::AlphaStar] {
                let fast = evaluate(&s, stat, k, Mode::Fast)
                    .map_err(|e| e.to_string())?
                    .0;
                let (brute, witness) =
                    evaluate(&s, stat, k, Mode::brute()).map_err(|e| e.to_string())?;
                ensure(fast == brute, || {
                    format!("{s:?} {stat:?} k={k}: fast {fast}, brute {brute}")
                })?;
                ensure(witness.is_some_and(|w| w.validate(&s)), || {
                    format!("{s:?} {stat:?}: bad witness")
                })?;
            }
            let g = evaluate(&s, Stat::Gamma, k, Mode::brute())
                .map_err(|e| e.to_string())?
                .0;
            let w = evaluate(&s, Stat::W, k, Mode::brute())
                .map_err(|e| e.to_string())?
                .0;
            ensure(g + w == s.len(), || {
                format!("{s:?} t={k}: gamma {g} + w {w} != {}", s.len())
            })?;
        }
    }
    Ok(())
}

fn worked_values() -> Outcome {
    let lambda = sh(&[4, 3, 3, 1]);
    let gammas: Vec<usize> = (1..=4).map(|t| lambda.gamma(t)).collect();
    ensure(gammas == vec![11, 7, 4, 1], || {
        format!("gamma vector {gammas:?}")
    })?;
    let gap = gap_monomial();
    let bottom = gap.bottom_row();
    let hats: Vec<usize> = (1..=4)
        .map(|t| greene::hat_gamma(&bottom, t, Mode::brute()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(hats == vec![6, 4, 2, 1], || {
        format!("gap monomial gamma-hat {hats:?}")
    })?;
    let seq = [4, 1, 2, 5, 6, 3];
    ensure(greene::ins_shape(&seq) == sh(&[4, 2]), || {
        "insertion shape".into()
    })?;
    let a1 = greene::hat_alpha(&seq, 1, Mode::brute()).map_err(|e| e.to_string())?;
    let a2 = greene::hat_alpha(&seq, 2, Mode::brute()).map_err(|e| e.to_string())?;
    ensure((a1, a2) == (4, 6), || format!("alpha-hat ({a1}, {a2})"))?;
    let shapes =
        decomposition_shapes(&seq, BlockKind::Increasing, 10).map_err(|e| e.to_string())?;
    ensure(!shapes.contains(&sh(&[4, 2])), || {
        "found a decomposition of shape (4,2)".into()
    })?;
    ensure(
        shapes.contains(&sh(&[4, 1, 1])) && shapes.contains(&sh(&[3, 3])),
        || format!("shapes {shapes:?}"),
    )
}

fn groebner() -> Outcome {
    for (m, n, dmax) in [(2, 2, 5), (2, 3, 5), (3, 3, 5), (3, 4, 4)] {
        for t in 1..=m.min(n) {
            let r = verify_groebner_determinantal(m, n, t, dmax).map_err(|e| e.to_string())?;
            ensure(r.passed, || format!("I[{t}] on {m}x{n}: {:?}", r.degrees))?;
            // Independent count of monomials containing a t-diagonal.
            for c in &r.degrees {
                let count = PositionMonomial::all_of_degree(m, n, c.degree)
                    .iter()
                    .filter(|x| has_diagonal(x, t))
                    .count();
                ensure(count == c.dimension, || {
                    format!(
                        "I[{t}] on {m}x{n} d={}: {} vs {count}",
                        c.degree, c.dimension
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn straightening() -> Outcome {
    let (m, n) = (3, 3);
    let minors = Minor::all(m, n);
    for d1 in &minors {
        for d2 in &minors {
            let b = Bitableau::from_minors(vec![d1.clone(), d2.clone()]);
            let rep = straighten(&b, m, n).map_err(|e| format!("{b}: {e}"))?;
            let oracle = straighten_oracle(&b, m, n, ORACLE_DEFAULT_BOUND)
                .map_err(|e| format!("{b}: {e}"))?;
            ensure(normalize(&rep) == normalize(&oracle), || {
                format!("{b}: straighten differs from oracle")
            })?;
            let mut same_shape = false;
            for (c, t) in &rep {
                let ms = t.minors();
                ensure(t.is_standard() && ms.len() <= 2, || format!("{b} -> {t}"))?;
                let eps = &ms[0];
                ensure(minor_preceq(eps, d1) && minor_preceq(eps, d2), || {
                    format!("{b} -> {t}: first factor")
                })?;
                if let Some(eta) = ms.get(1) {
                    ensure(minor_preceq(d1, eta) && minor_preceq(d2, eta), || {
                        format!("{b} -> {t}: second factor")
                    })?;
                }
                ensure(t.content(m, n) == b.content(m, n), || {
                    format!("{b} -> {t}: content")
                })?;
                ensure(b.shape().leq(&t.shape()), || {
                    format!("{b} -> {t}: shape decreased")
                })?;
                same_shape |= t.shape() == b.shape() && *c != rational(0);
            }
            ensure(same_shape, || format!("{b}: no term of the input shape"))?;
        }
    }
    let input = Bitableau::from_minors(vec![minor(&[1, 2], &[1, 4]), minor(&[1, 2], &[2, 3])]);
    let rep = normalize(&straighten(&input, 2, 4).map_err(|e| e.to_string())?);
    let expected = normalize(&vec![
        (
            rational(1),
            Bitableau::from_minors(vec![minor(&[1, 2], &[1, 3]), minor(&[1, 2], &[2, 4])]),
        ),
        (
            rational(-1),
            Bitableau::from_minors(vec![minor(&[1, 2], &[1, 2]), minor(&[1, 2], &[3, 4])]),
        ),
    ]);
    ensure(rep == expected, || format!("Plücker relation gave {rep:?}"))
}

fn multiplicity() -> Outcome {
    for m in 1..=6 {
        for n in 1..=6 {
            for t in 1..=m.min(n) {
                let count = BigInt::from(facets(m, n, t).map_err(|e| e.to_string())?.len());
                let gv = gv_multiplicity(m, n, t);
                let giambelli = giambelli_multiplicity(m, n, t).map_err(|e| e.to_string())?;
                ensure(count == gv && gv == giambelli, || {
                    format!("{m}x{n} t={t}: facets {count}, determinant {gv}, product {giambelli}")
                })?;
            }
        }
    }
    ensure(gv_multiplicity(3, 3, 2) == BigInt::from(6), || {
        "3x3 t=2".into()
    })
}

fn hilbert() -> Outcome {
    for m in 1..=5 {
        for n in 1..=5 {
            for t in 1..=m.min(n) {
                let hs = hilbert_series(m, n, t).map_err(|e| format!("{m}x{n} t={t}: {e}"))?;
                let fs = facets(m, n, t).map_err(|e| e.to_string())?;
                let cert = certify_shelling(&fs);
                ensure(cert.valid && cert.restrictions_are_right_turns, || {
                    format!("{m}x{n} t={t}: certificate")
                })?;
                if t == 2 {
                    let expected: Vec<u64> = (0..m.min(n) as u64)
                        .map(|k| binomial(m as u64 - 1, k) * binomial(n as u64 - 1, k))
                        .collect();
                    ensure(hs.numerator == expected, || {
                        format!("{m}x{n}: numerator {:?}", hs.numerator)
                    })?;
                }
            }
        }
    }
    let s = hilbert_series(3, 3, 2).map_err(|e| e.to_string())?;
    ensure(
        s.numerator == vec![1, 4, 1] && s.denominator_degree == 5,
        || format!("3x3 t=2: {s:?}"),
    )?;
    let s = hilbert_series(3, 3, 3).map_err(|e| e.to_string())?;
    ensure(
        s.numerator == vec![1, 1, 1] && s.denominator_degree == 8,
        || format!("3x3 t=3: {s:?}"),
    )?;
    for d in 0..=10u64 {
        let cubic = binomial(d + 8, 8) - if d >= 3 { binomial(d + 5, 8) } else { 0 };
        ensure(s.coefficient(d as usize) == BigInt::from(cubic), || {
            format!("cubic d={d}")
        })?;
    }
    Ok(())
}

fn hilbert_function() -> Outcome {
    for t in 1..=3 {
        let hs = hilbert_series(3, 3, t).map_err(|e| e.to_string())?;
        for d in 0..=5 {
            let direct = PositionMonomial::all_of_degree(3, 3, d)
                .iter()
                .filter(|x| !has_diagonal(x, t))
                .count();
            ensure(hs.coefficient(d) == BigInt::from(direct), || {
                format!(
                    "t={t} d={d}: series {} vs count {direct}",
                    hs.coefficient(d)
                )
            })?;
        }
    }
    let hs = hilbert_series(3, 3, 2).map_err(|e| e.to_string())?;
    let first: Vec<BigInt> = (0..3).map(|d| hs.coefficient(d)).collect();
    ensure(
        first == vec![BigInt::from(1), BigInt::from(9), BigInt::from(36)],
        || format!("{first:?}"),
    )
}

fn identity(lhs: &str, rhs: &str, m: usize, n: usize, dmax: usize, cmp: Comparison) -> Outcome {
    let l = IdealExpr::parse(lhs).unwrap();
    let r = IdealExpr::parse(rhs).unwrap();
    let rep = verify_identity(&l, &r, m, n, dmax, cmp).map_err(|e| e.to_string())?;
    ensure(rep.passed, || {
        format!(
            "{lhs} vs {rhs}: degree {:?} witness {:?}",
            rep.failing_degree, rep.witness
        )
    })
}

fn decompositions() -> Outcome {
    identity("I[2]^2", "I[1]^(4) & I[2]^(2)", 3, 3, 5, Comparison::Equal)?;
    identity("I[2]^(2)", "I[2]^2 + I[3]", 3, 3, 5, Comparison::Equal)?;
    identity("I[1]*I[3]", "I[2]^2", 4, 4, 4, Comparison::Contained)
}

fn gkrs_failure() -> Outcome {
    let gap = gap_monomial();
    let member = in_ini(&IdealExpr::product_of(&[4, 2]), &gap).map_err(|e| e.to_string())?;
    ensure(member, || "gap monomial is not in the initial ideal".into())?;
    let r = gkrs_failure_witness(&gap, &[4, 2]).map_err(|e| e.to_string())?;
    ensure(
        r.member && !r.bitableau_initial_exists && !r.shapes_checked.is_empty(),
        || format!("{r:?}"),
    )
}

fn rees_identities() -> Outcome {
    for m in 1..=5 {
        for n in 1..=5 {
            let all = PositionMonomial::all_variables(m, n);
            for i in 1..=m.min(n) {
                let g = gamma_of_x(m, n, i).map_err(|e| e.to_string())?;
                let hat = greene::hat_gamma(&all.bottom_row(), i, Mode::Fast)
                    .map_err(|e| e.to_string())?;
                ensure(g == (m - i + 1) * (n - i + 1) && g == hat, || {
                    format!("{m}x{n} i={i}: {g} vs {hat}")
                })?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let all = PositionMonomial::all_variables(4, 4);
    for _ in 0..200 {
        let mon = random_monomial(&mut rng, 4, 4, 8);
        for i in 1..=4 {
            let lhs = greene::monomial_hat_gamma(&all.mul(&mon), i);
            let rhs = greene::monomial_hat_gamma(&all, i) + greene::monomial_hat_gamma(&mon, i);
            ensure(lhs == rhs, || format!("{mon} i={i}: {lhs} vs {rhs}"))?;
        }
    }
    for t in 1..=3 {
        let forms = symbolic_forms(3, 3, t).map_err(|e| e.to_string())?;
        for x in bigraded_monomials(3, 3, 5, 3) {
            ensure(
                in_ini_symbolic_rees(&x, t) == satisfies_forms(&forms, &x),
                || format!("{x} t={t}"),
            )?;
        }
    }
    use GorensteinReason::*;
    for ((m, n, t), expected) in [
        ((4, 4, 2), Some(Balanced)),
        ((3, 3, 2), Some(Submaximal)),
        ((4, 3, 2), None),
        ((6, 6, 3), Some(Balanced)),
    ] {
        let got = is_gorenstein_at(m, n, t).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{m}x{n} t={t}: {got:?}"))?;
    }
    ensure(
        Balanced.clause() == 'd' && Submaximal.clause() == 'c',
        || "clause labels".into(),
    )
}

type Criterion = (usize, &'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            1,
            "KRS bijection on 3x3 up to degree 4",
            krs_bijection,
            Some(Duration::from_secs(30)),
        ),
        (2, "sample KRS reproduction", sample_krs, None),
        (
            3,
            "Greene statistics, fast vs brute",
            greene_statistics,
            Some(Duration::from_secs(120)),
        ),
        (4, "worked values", worked_values, None),
        (
            5,
            "Groebner bases of determinantal ideals",
            groebner,
            Some(Duration::from_secs(300)),
        ),
        (6, "straightening", straightening, None),
        (
            7,
            "multiplicity",
            multiplicity,
            Some(Duration::from_secs(60)),
        ),
        (8, "Hilbert series", hilbert, None),
        (9, "Hilbert function", hilbert_function, None),
        (10, "decomposition identities", decompositions, None),
        (11, "G-KRS failure", gkrs_failure, None),
        (12, "Rees-level identities", rees_identities, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS {id:>2} {name} ({:.2}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name} ({:.2}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
