//! Verification suites: exhaustive and seeded-random checks of the
//! identities implemented by the other modules.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Debug};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::greene::{self, evaluate, ins_shape, BlockKind, Mode, Stat};
use crate::ideals::{
    gap_monomial, gkrs_failure_witness, in_ini, in_ini_power, in_ini_symbolic,
    initial_monomial_count, longest_diagonal, standard_basis_count, verify_groebner_determinantal,
    verify_identity, verify_initial_ideal, Comparison, IdealExpr,
};
use crate::krs::{ins, knuth_neighbors, krs, krs_inverse_monomial, krs_monomial};
use crate::linalg::{initial_space, rank};
use crate::monomial::PositionMonomial;
use crate::paths::{
    binomial, certify_shelling, facets, giambelli_multiplicity, gv_multiplicity, hilbert_series,
    is_face, light_shadow, Point,
};
use crate::poly::{expand_minor, rational, ExactPolynomial, MinorCache};
use crate::rees::{
    bigraded_monomials, canonical_at_principal, check_distinguished_d, dim_at, gamma_of_x,
    in_ini_at, in_ini_rees, in_ini_rees_product, in_ini_symbolic_rees, is_gorenstein_at,
    product_forms, satisfies_forms, shape_simplification_counterexample, symbolic_forms,
    BigradedMonomial, GorensteinReason,
};
use crate::shape::{dual_shape, gamma, partitions, shape_leq, Shape};
use crate::straighten::{
    normalize, straighten_oracle, straighten_with, PluckerStraightener, ORACLE_DEFAULT_BOUND,
};
use crate::tableau::{minor_preceq, standard_bitableaux, Bitableau, Minor, Tableau};
use crate::weight::{find_separating_weight, leading_pairs, WeightResult};

pub const DEFAULT_SEED: u64 = 42;

/// Failures kept per suite; further failures are only counted.
pub const MAX_RECORDED_FAILURES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Krs,
    Greene,
    Groebner,
    Symbolic,
    Powers,
    Products,
    Straight,
    Paths,
    Hilbert,
    Rees,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Krs,
        Suite::Greene,
        Suite::Groebner,
        Suite::Symbolic,
        Suite::Powers,
        Suite::Products,
        Suite::Straight,
        Suite::Paths,
        Suite::Hilbert,
        Suite::Rees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Krs => "krs",
            Suite::Greene => "greene",
            Suite::Groebner => "groebner",
            Suite::Symbolic => "symbolic",
            Suite::Powers => "powers",
            Suite::Products => "products",
            Suite::Straight => "straight",
            Suite::Paths => "paths",
            Suite::Hilbert => "hilbert",
            Suite::Rees => "rees",
        }
    }

    /// Comma-separated suite names. `"all"` expands to every suite;
    /// `"decomp"` selects the product checks and `"destr"` the power checks.
    pub fn parse_selection(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in text.split(',').map(str::trim) {
            match name {
                "all" => out.extend(Suite::ALL),
                "decomp" => out.push(Suite::Products),
                "destr" => out.push(Suite::Powers),
                _ => out.push(name.parse()?),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Bounds for the suites. `None` keeps each check's default.
#[derive(Clone, Debug, Serialize)]
pub struct Bounds {
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub max_degree: Option<usize>,
    pub max_seq_len: Option<usize>,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_m: None,
            max_n: None,
            max_degree: None,
            max_seq_len: None,
            seed: DEFAULT_SEED,
        }
    }
}

impl Bounds {
    fn m(&self, default: usize) -> usize {
        self.max_m.unwrap_or(default)
    }

    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn degree(&self, default: usize) -> usize {
        self.max_degree.unwrap_or(default)
    }

    fn seq_len(&self, default: usize) -> usize {
        self.max_seq_len.unwrap_or(default)
    }

    /// Keeps the fixed-size cases that fit inside `max_m x max_n`.
    fn fits(&self, m: usize, n: usize) -> bool {
        self.max_m.is_none_or(|b| m <= b) && self.max_n.is_none_or(|b| n <= b)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Checker {
    cases: usize,
    failure_count: usize,
    failures: Vec<Failure>,
}

impl Checker {
    fn fail(&mut self, check: &str, input: String, expected: String, actual: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                check: check.to_string(),
                input,
                expected,
                actual,
            });
        }
    }

    fn check(&mut self, check: &str, input: impl FnOnce() -> String, ok: bool) {
        self.cases += 1;
        if !ok {
            self.fail(check, input(), "true".into(), "false".into());
        }
    }

    fn eq<T: Debug + PartialEq>(
        &mut self,
        check: &str,
        input: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.fail(
                check,
                input(),
                format!("{expected:?}"),
                format!("{actual:?}"),
            );
        }
    }

    /// Records an error as a failure and returns the value otherwise.
    fn ok<T>(&mut self, check: &str, input: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(check, input(), "no error".into(), e.to_string());
                None
            }
        }
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> VerifyReport {
    let start = Instant::now();
    let mut c = Checker::default();
    match suite {
        Suite::Krs => {
            shapes_suite(&mut c);
            krs_suite(&mut c, bounds);
        }
        Suite::Greene => greene_suite(&mut c, bounds),
        Suite::Groebner => groebner_suite(&mut c, bounds),
        Suite::Symbolic => symbolic_suite(&mut c, bounds),
        Suite::Powers => powers_suite(&mut c, bounds),
        Suite::Products => products_suite(&mut c, bounds),
        Suite::Straight => straight_suite(&mut c, bounds),
        Suite::Paths => paths_suite(&mut c, bounds),
        Suite::Hilbert => hilbert_suite(&mut c, bounds),
        Suite::Rees => rees_suite(&mut c, bounds),
    }
    VerifyReport {
        suite,
        cases: c.cases,
        failure_count: c.failure_count,
        failures: c.failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs the suites concurrently; reports come back in suite order.
pub fn run_suites(suites: &[Suite], bounds: &Bounds) -> Vec<VerifyReport> {
    let mut reports: Vec<VerifyReport> = std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&x| s.spawn(move || run_suite(x, bounds)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification threads do not panic"))
            .collect()
    });
    reports.sort_by_key(|r| r.suite.name());
    reports
}

/// All sequences over `1..=alphabet` of length at most `max_len`.
pub fn all_sequences(max_len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for a in 1..=alphabet {
                let mut t: Vec<usize> = s.clone();
                t.push(a);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_monomial(
    rng: &mut impl Rng,
    m: usize,
    n: usize,
    max_degree: usize,
) -> PositionMonomial {
    let d = rng.gen_range(0..=max_degree);
    let positions: Vec<(usize, usize)> = (0..d)
        .map(|_| (rng.gen_range(1..=m), rng.gen_range(1..=n)))
        .collect();
    PositionMonomial::from_positions(m, n, &positions).expect("positions are in range")
}

pub fn random_polynomial(
    rng: &mut impl Rng,
    m: usize,
    n: usize,
    max_degree: usize,
) -> ExactPolynomial {
    let terms = rng.gen_range(1..=4);
    let mut p = ExactPolynomial::zero(m, n);
    for _ in 0..terms {
        let mon = random_monomial(rng, m, n, max_degree);
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        p.add_term(mon.dense(), &rational(c));
    }
    p
}

fn shapes_up_to(size: usize, max_len: usize, max_part: usize) -> Vec<Shape> {
    (0..=size)
        .flat_map(|s| partitions(s, max_len, 1, max_part))
        .collect()
}

fn shapes_suite(c: &mut Checker) {
    let small = shapes_up_to(25, 5, 5);
    for rho in &small {
        for sigma in &small {
            let by_gamma = (1..=6).all(|t| gamma(rho, t) <= gamma(sigma, t));
            c.eq(
                "shape order via gamma",
                || format!("{rho:?} {sigma:?}"),
                shape_leq(rho, sigma),
                by_gamma,
            );
        }
    }
    for lambda in shapes_up_to(10, 10, 10) {
        for t in 1..=6 {
            for u in 1..=lambda.size() + 1 {
                let lhs = lambda.gamma(t) >= u;
                let rhs = (1..=lambda.len()).any(|k| lambda.alpha(k) >= (t - 1) * k + u);
                c.eq(
                    "gamma bound via alpha",
                    || format!("{lambda:?} t={t} u={u}"),
                    lhs,
                    rhs,
                );
            }
        }
        let dual = dual_shape(&lambda);
        c.eq(
            "dual is an involution",
            || format!("{lambda:?}"),
            lambda.clone(),
            dual_shape(&dual),
        );
        for k in 1..=6 {
            let expected: usize = lambda.parts().iter().map(|&p| p.min(k)).sum();
            c.eq(
                "alpha of dual",
                || format!("{lambda:?} k={k}"),
                expected,
                dual.alpha(k),
            );
        }
    }
    let minors = Minor::all(3, 3);
    for a in &minors {
        c.check(
            "minor order reflexive",
            || a.to_string(),
            minor_preceq(a, a),
        );
        for b in &minors {
            if minor_preceq(a, b) && minor_preceq(b, a) {
                c.eq("minor order antisymmetric", || format!("{a} {b}"), a, b);
            }
            for d in &minors {
                if minor_preceq(a, b) && minor_preceq(b, d) {
                    c.check(
                        "minor order transitive",
                        || format!("{a} {b} {d}"),
                        minor_preceq(a, d),
                    );
                }
            }
        }
    }
}

/// Each row is an initial segment of the row above.
pub fn is_nested(t: &Tableau) -> bool {
    t.rows.windows(2).all(|w| w[0].starts_with(&w[1]))
}

fn diagonal_product(b: &Bitableau, m: usize, n: usize) -> Result<PositionMonomial> {
    let positions: Vec<(usize, usize)> = b.minors().iter().flat_map(Minor::diagonal).collect();
    PositionMonomial::from_positions(m, n, &positions)
}

fn krs_suite(c: &mut Checker, b: &Bounds) {
    let (m, n) = (3, 3);
    let dmax = b.degree(4);
    if b.fits(m, n) {
        for d in 0..=dmax {
            let bitableaux = standard_bitableaux(m, n, d);
            let monomials = PositionMonomial::all_of_degree(m, n, d);
            c.eq(
                "family sizes agree",
                || format!("3x3 d={d}"),
                bitableaux.len(),
                monomials.len(),
            );
            for sigma in &bitableaux {
                let Some(mon) = c.ok("krs", || sigma.to_string(), krs_monomial(sigma, m, n)) else {
                    continue;
                };
                c.eq(
                    "inverse after krs",
                    || sigma.to_string(),
                    sigma.clone(),
                    krs_inverse_monomial(&mon),
                );
                let (rows, cols) = sigma.content(m, n);
                let mrows: Vec<usize> = (1..=m)
                    .map(|i| (1..=n).map(|j| mon.exponent(i, j) as usize).sum())
                    .collect();
                let mcols: Vec<usize> = (1..=n)
                    .map(|j| (1..=m).map(|i| mon.exponent(i, j) as usize).sum())
                    .collect();
                c.eq(
                    "content preserved",
                    || sigma.to_string(),
                    (rows, cols),
                    (mrows, mcols),
                );
                if let (Some(a), Some(at)) = (
                    c.ok("krs", || sigma.to_string(), krs(sigma)),
                    c.ok(
                        "krs of transpose",
                        || sigma.to_string(),
                        krs(&sigma.transpose()),
                    ),
                ) {
                    c.eq(
                        "transpose equivariance",
                        || sigma.to_string(),
                        a.transpose(),
                        at,
                    );
                }
                if is_nested(&sigma.left) || is_nested(&sigma.right) {
                    if let Some(diag) = c.ok(
                        "diagonals",
                        || sigma.to_string(),
                        diagonal_product(sigma, m, n),
                    ) {
                        c.eq("nested rule", || sigma.to_string(), diag, mon.clone());
                    }
                }
                if d <= 3 {
                    for k in 1..=3usize {
                        let p = sigma.power(k);
                        c.check(
                            "powers stay standard",
                            || format!("{sigma} k={k}"),
                            p.is_standard(),
                        );
                        if let Some(pm) = c.ok(
                            "krs of power",
                            || format!("{sigma} k={k}"),
                            krs_monomial(&p, m, n),
                        ) {
                            c.eq(
                                "power rule",
                                || format!("{sigma} k={k}"),
                                mon.pow(k as u32),
                                pm,
                            );
                        }
                    }
                }
            }
            for mon in &monomials {
                let sigma = krs_inverse_monomial(mon);
                c.check(
                    "inverse is standard",
                    || mon.to_string(),
                    sigma.is_standard(),
                );
                if let Some(back) = c.ok("krs", || mon.to_string(), krs_monomial(&sigma, m, n)) {
                    c.eq("krs after inverse", || mon.to_string(), mon.clone(), back);
                }
            }
        }
    }
    for mm in 1..=b.m(3) {
        for nn in 1..=b.n(3) {
            for d in 0..=dmax {
                c.eq(
                    "standard bitableaux count monomials",
                    || format!("{mm}x{nn} d={d}"),
                    PositionMonomial::all_of_degree(mm, nn, d).len(),
                    standard_bitableaux(mm, nn, d).len(),
                );
            }
        }
    }
    knuth_classes(c, b.seq_len(6), 4);
}

/// Knuth classes are exactly the fibres of the insertion tableau.
fn knuth_classes(c: &mut Checker, max_len: usize, alphabet: usize) {
    let seqs = all_sequences(max_len, alphabet);
    let mut class: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut tableau_of_class: Vec<Tableau> = Vec::new();
    for s in &seqs {
        if class.contains_key(s) {
            continue;
        }
        let id = tableau_of_class.len();
        let p = ins(s);
        tableau_of_class.push(p.clone());
        let mut queue = VecDeque::from([s.clone()]);
        class.insert(s.clone(), id);
        while let Some(x) = queue.pop_front() {
            c.eq(
                "Knuth moves keep the insertion tableau",
                || format!("{s:?} ~ {x:?}"),
                &p,
                &ins(&x),
            );
            for y in knuth_neighbors(&x) {
                if !class.contains_key(&y) {
                    class.insert(y.clone(), id);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut seen: BTreeMap<&Tableau, usize> = BTreeMap::new();
    for (id, p) in tableau_of_class.iter().enumerate() {
        if let Some(prev) = seen.insert(p, id) {
            c.fail(
                "equal insertion tableaux are Knuth equivalent",
                format!("{:?}", p.rows),
                format!("one class, got classes {prev} and {id}"),
                "two classes".into(),
            );
        } else {
            c.cases += 1;
        }
    }
}

fn greene_suite(c: &mut Checker, b: &Bounds) {
    let seqs = all_sequences(b.seq_len(6), 4);
    for s in &seqs {
        let input = || format!("{s:?}");
        for k in 1..=4 {
            for stat in [Stat::Alpha, Stat::Gamma, Stat::AlphaStar] {
                let fast = c.ok("fast", input, evaluate(s, stat, k, Mode::Fast));
                let brute = c.ok("brute", input, evaluate(s, stat, k, Mode::brute()));
                if let (Some((f, _)), Some((v, w))) = (fast, brute) {
                    c.eq(
                        "fast equals brute",
                        || format!("{s:?} {stat:?} k={k}"),
                        f,
                        v,
                    );
                    match w {
                        Some(w) => c.check(
                            "witness validates",
                            || format!("{s:?} {stat:?} k={k}"),
                            w.validate(s),
                        ),
                        None => c.check("brute mode returns a witness", input, false),
                    }
                }
            }
            let t = k;
            let g = c.ok(
                "brute gamma",
                input,
                evaluate(s, Stat::Gamma, t, Mode::brute()),
            );
            let w = c.ok("brute w", input, evaluate(s, Stat::W, t, Mode::brute()));
            if let (Some((g, _)), Some((w, _))) = (g, w) {
                c.eq(
                    "gamma plus w is the length",
                    || format!("{s:?} t={t}"),
                    s.len(),
                    g + w,
                );
                let alphas: Vec<usize> = (1..=s.len()).map(|j| ins_shape(s).alpha(j)).collect();
                for u in 1..=s.len() + 1 {
                    let rhs = alphas
                        .iter()
                        .enumerate()
                        .any(|(j, &a)| a >= (t - 1) * (j + 1) + u);
                    c.eq(
                        "gamma bound via alpha on sequences",
                        || format!("{s:?} t={t} u={u}"),
                        g >= u,
                        rhs,
                    );
                }
            }
        }
        let kinds = [BlockKind::Increasing, BlockKind::NonIncreasing];
        for kind in kinds {
            let w = greene::brute_optimum(s, kind, |sh| sh.size());
            c.eq(
                "decompositions cover the sequence",
                || format!("{s:?} {kind:?}"),
                s.len(),
                w.shape.size(),
            );
        }
    }
    let mut rng = b.rng();
    for _ in 0..200 {
        let mon = random_monomial(&mut rng, 4, 4, b.degree(8));
        for t in 1..=4 {
            c.eq(
                "gamma plus w is the degree",
                || format!("{mon} t={t}"),
                mon.degree(),
                greene::monomial_hat_gamma(&mon, t) + greene::monomial_w(&mon, t),
            );
        }
    }
}

fn groebner_suite(c: &mut Checker, b: &Bounds) {
    let dmax = b.degree(5);
    for (m, n, d) in [
        (2, 2, dmax),
        (2, 3, dmax),
        (3, 3, dmax),
        (3, 4, dmax.min(4)),
    ] {
        if !b.fits(m, n) {
            continue;
        }
        for t in 1..=m.min(n) {
            let input = || format!("I[{t}] on {m}x{n} up to degree {d}");
            if let Some(r) = c.ok("groebner", input, verify_groebner_determinantal(m, n, t, d)) {
                for deg in &r.degrees {
                    c.check(
                        "initial space is the diagonal ideal",
                        || format!("{} d={}", input(), deg.degree),
                        deg.ok,
                    );
                }
            }
        }
    }
    let (m, n) = (b.m(3), b.n(4));
    for d in Minor::all(m, n) {
        let p = expand_minor(&d, m, n);
        let lead = p.leading_term().map(|(e, q)| (e.clone(), q.clone()));
        let diag = PositionMonomial::from_positions(m, n, &d.diagonal()).map(|x| x.dense());
        c.eq(
            "leading term is the main diagonal",
            || d.to_string(),
            diag.ok().map(|e| (e, rational(1))),
            lead,
        );
    }
    if b.fits(3, 3) {
        let polys: Vec<_> = Minor::all(3, 3)
            .iter()
            .map(|d| expand_minor(d, 3, 3))
            .collect();
        let res = c.ok(
            "weight",
            || "minors of 3x3".into(),
            find_separating_weight(&leading_pairs(&polys)),
        );
        if let Some(r) = res {
            c.check(
                "minors admit a separating weight",
                || "minors of 3x3".into(),
                matches!(r, WeightResult::Weight { .. }),
            );
        }
        let specs = [
            "I[1]",
            "I[2]",
            "I[3]",
            "I[2]^2",
            "I[1]^2",
            "I[2]^(2)",
            "I[2]^(3)",
            "I[1]^(3)",
            "I[2]*I[1]",
            "I[3]*I[2]",
        ];
        for text in specs {
            let expr = IdealExpr::parse(text).expect("fixed expressions parse");
            for d in 0..=dmax {
                let input = || format!("{text} on 3x3 d={d}");
                let a = c.ok(
                    "standard basis count",
                    input,
                    standard_basis_count(&expr, 3, 3, d),
                );
                let m = c.ok(
                    "initial monomial count",
                    input,
                    initial_monomial_count(&expr, 3, 3, d),
                );
                if let (Some(a), Some(m)) = (a, m) {
                    c.eq("Hilbert functions agree", input, a, m);
                }
            }
        }
    }
}

fn initial_ideal_checks(c: &mut Checker, specs: &[&str], m: usize, n: usize, dmax: usize) {
    for text in specs {
        let expr = IdealExpr::parse(text).expect("fixed expressions parse");
        let input = || format!("{text} on {m}x{n} up to degree {dmax}");
        if let Some(r) = c.ok(
            "initial ideal",
            input,
            verify_initial_ideal(&expr, m, n, dmax),
        ) {
            for deg in &r.degrees {
                c.check(
                    "initial space matches membership",
                    || format!("{} d={}", input(), deg.degree),
                    deg.ok,
                );
            }
        }
    }
}

fn identity_check(
    c: &mut Checker,
    lhs: &str,
    rhs: &str,
    m: usize,
    n: usize,
    dmax: usize,
    cmp: Comparison,
) {
    let l = IdealExpr::parse(lhs).expect("fixed expressions parse");
    let r = IdealExpr::parse(rhs).expect("fixed expressions parse");
    let input = || format!("{lhs} vs {rhs} on {m}x{n} up to degree {dmax}");
    if let Some(rep) = c.ok("identity", input, verify_identity(&l, &r, m, n, dmax, cmp)) {
        c.eq("identity holds", input, None, rep.witness);
    }
}

fn symbolic_suite(c: &mut Checker, b: &Bounds) {
    if !b.fits(3, 3) {
        return;
    }
    let dmax = b.degree(5);
    for d in 0..=dmax {
        for mon in PositionMonomial::all_of_degree(3, 3, d) {
            for t in 1..=3 {
                for k in 1..=3 {
                    if in_ini_symbolic(&mon, t, k) {
                        c.check(
                            "symbolic membership is monotone",
                            || format!("{mon} t={t} k={k}"),
                            in_ini_symbolic(&mon, t, k - 1),
                        );
                    }
                }
            }
        }
    }
    for t in 1..=3 {
        let Some(forms) = c.ok("facets", || format!("3x3 t={t}"), symbolic_forms(3, 3, t)) else {
            continue;
        };
        for x in bigraded_monomials(3, 3, b.degree(6), 2) {
            if x.k == 0 {
                continue;
            }
            c.eq(
                "symbolic membership via facet primes",
                || format!("{} t={t} k={}", x.mon, x.k),
                in_ini_symbolic(&x.mon, t, x.k),
                satisfies_forms(&forms, &x),
            );
        }
    }
    initial_ideal_checks(
        c,
        &["I[2]^(2)", "I[2]^(3)", "I[1]^(2)", "I[3]^(2)"],
        3,
        3,
        dmax,
    );
    identity_check(
        c,
        "I[2]^(2)",
        "I[2]^2 + I[3]",
        3,
        3,
        dmax,
        Comparison::Equal,
    );
}

fn powers_suite(c: &mut Checker, b: &Bounds) {
    if !b.fits(3, 3) {
        return;
    }
    let dmax = b.degree(5);
    for d in 0..=dmax {
        for mon in PositionMonomial::all_of_degree(3, 3, d) {
            for t in 1..=3 {
                for k in 1..=3 {
                    if in_ini_power(&mon, t, k) {
                        c.check(
                            "power membership implies symbolic",
                            || format!("{mon} t={t} k={k}"),
                            in_ini_symbolic(&mon, t, k),
                        );
                    }
                }
            }
        }
    }
    initial_ideal_checks(c, &["I[2]^2", "I[1]^2", "I[3]^2"], 3, 3, dmax);
    identity_check(
        c,
        "I[2]^2",
        "I[1]^(4) & I[2]^(2)",
        3,
        3,
        dmax,
        Comparison::Equal,
    );
}

fn products_suite(c: &mut Checker, b: &Bounds) {
    if b.fits(3, 3) {
        let rho = Shape::new(vec![2, 2]).expect("valid shape");
        let square = IdealExpr::Power(2, 2);
        for d in 0..=b.degree(6) {
            for mon in PositionMonomial::all_of_degree(3, 3, d) {
                if let Some(lhs) = c.ok("membership", || mon.to_string(), in_ini(&square, &mon)) {
                    let rhs = (1..=2).all(|t| in_ini_symbolic(&mon, t, rho.gamma(t)));
                    c.eq(
                        "product as intersection of symbolic powers",
                        || mon.to_string(),
                        lhs,
                        rhs,
                    );
                }
            }
        }
        initial_ideal_checks(
            c,
            &["I[2]*I[1]", "I[3]*I[1]", "I[2]*I[2]*I[1]"],
            3,
            3,
            b.degree(5),
        );
    }
    if b.fits(4, 4) {
        identity_check(
            c,
            "I[1]*I[3]",
            "I[2]^2",
            4,
            4,
            b.degree(4),
            Comparison::Contained,
        );
    }
    let gap = gap_monomial();
    if let Some(r) = c.ok(
        "G-KRS witness",
        || gap.to_string(),
        gkrs_failure_witness(&gap, &[4, 2]),
    ) {
        c.check(
            "monomial lies in the initial ideal",
            || gap.to_string(),
            r.member,
        );
        c.check(
            "no bitableau initial monomial divides it",
            || gap.to_string(),
            !r.bitableau_initial_exists,
        );
    }
}

fn straight_suite(c: &mut Checker, b: &Bounds) {
    let (m, n) = (3, 3);
    if b.fits(m, n) {
        let minors = Minor::all(m, n);
        let mut s = PluckerStraightener::new();
        for d1 in &minors {
            for d2 in &minors {
                let input = || format!("{d1}·{d2}");
                let prod = Bitableau::from_minors(vec![d1.clone(), d2.clone()]);
                let Some(rep) = c.ok("straighten", input, straighten_with(&mut s, &prod, m, n))
                else {
                    continue;
                };
                if let Some(oracle) = c.ok(
                    "oracle",
                    input,
                    straighten_oracle(&prod, m, n, ORACLE_DEFAULT_BOUND),
                ) {
                    c.eq(
                        "straighten equals oracle",
                        input,
                        normalize(&oracle),
                        normalize(&rep),
                    );
                }
                let content = prod.content(m, n);
                let shape = prod.shape();
                let mut exact_shape = false;
                for (q, t) in &rep {
                    let ms = t.minors();
                    let term = || format!("{} -> {t}", input());
                    c.check("terms are standard", term, t.is_standard());
                    c.check("at most two factors", term, ms.len() <= 2);
                    if let Some(eps) = ms.first() {
                        c.check(
                            "first factor below both inputs",
                            term,
                            minor_preceq(eps, d1) && minor_preceq(eps, d2),
                        );
                    }
                    if let Some(eta) = ms.get(1) {
                        c.check(
                            "both inputs below second factor",
                            term,
                            minor_preceq(d1, eta) && minor_preceq(d2, eta),
                        );
                    }
                    c.eq("content preserved", term, content.clone(), t.content(m, n));
                    c.check(
                        "shape does not decrease",
                        term,
                        shape_leq(&shape, &t.shape()),
                    );
                    exact_shape |= t.shape() == shape && !q.is_zero();
                }
                c.check("a term keeps the input shape", input, exact_shape);
            }
        }
    }
    let mut rng = b.rng();
    for _ in 0..200 {
        let f = random_polynomial(&mut rng, 3, 3, 3);
        let g = random_polynomial(&mut rng, 3, 3, 3);
        let lf = f.leading_monomial();
        let lg = g.leading_monomial();
        let lfg = (&f * &g).leading_monomial();
        c.eq(
            "initial term is multiplicative",
            || format!("({f}) * ({g})"),
            lf.zip(lg).map(|(a, b)| a.mul(&b)),
            lfg,
        );
    }
    let mut cache = MinorCache::new(3, 3);
    let minors = Minor::all(3, 3);
    for _ in 0..50 {
        let count = rng.gen_range(1..=8);
        let polys: Vec<ExactPolynomial> = (0..count)
            .map(|_| {
                let a = &minors[rng.gen_range(0..minors.len())];
                let bb = &minors[rng.gen_range(0..minors.len())];
                cache.bitableau(&Bitableau::from_minors(vec![a.clone(), bb.clone()]))
            })
            .collect();
        let sums: Vec<ExactPolynomial> = polys
            .windows(2)
            .map(|w| &w[0] + &w[1])
            .chain(polys.iter().cloned())
            .collect();
        c.eq(
            "initial space has the rank as dimension",
            || format!("{} polynomials", sums.len()),
            rank(&sums),
            initial_space(&sums).len(),
        );
    }
}

fn paths_suite(c: &mut Checker, b: &Bounds) {
    for m in 1..=b.m(6) {
        for n in 1..=b.n(6) {
            for t in 1..=m.min(n) {
                let input = || format!("{m}x{n} t={t}");
                let Some(fs) = c.ok("facets", input, facets(m, n, t)) else {
                    continue;
                };
                let count = BigInt::from(fs.len());
                c.eq(
                    "facets count paths",
                    input,
                    count.clone(),
                    gv_multiplicity(m, n, t),
                );
                if let Some(g) = c.ok("product formula", input, giambelli_multiplicity(m, n, t)) {
                    c.eq("product formula counts facets", input, count, g);
                }
                if m <= 4 && n <= 4 {
                    for f in &fs {
                        let pts: Vec<Point> = f.points().into_iter().collect();
                        c.check(
                            "facets are faces",
                            || format!("{} {pts:?}", input()),
                            is_face(&pts, t),
                        );
                        let maximal = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).all(|p| {
                            if f.points().contains(&p) {
                                return true;
                            }
                            let mut more = pts.clone();
                            more.push(p);
                            !is_face(&more, t)
                        });
                        c.check(
                            "facets are maximal",
                            || format!("{} {pts:?}", input()),
                            maximal,
                        );
                    }
                }
                if m <= 5 && n <= 5 {
                    let cert = certify_shelling(&fs);
                    c.check("order is a shelling", input, cert.valid);
                    c.check(
                        "restrictions are right turns",
                        input,
                        cert.restrictions_are_right_turns,
                    );
                    for f in &fs {
                        let pts: Vec<Point> = f.points().into_iter().collect();
                        let back = c.ok("light and shadow", input, light_shadow(&pts, m, n, t));
                        c.eq(
                            "light and shadow recovers the paths",
                            input,
                            Some(f),
                            back.as_ref(),
                        );
                    }
                }
            }
        }
    }
}

fn hilbert_suite(c: &mut Checker, b: &Bounds) {
    for m in 1..=b.m(5) {
        for n in 1..=b.n(5) {
            for t in 1..=m.min(n) {
                let input = || format!("{m}x{n} t={t}");
                let Some(hs) = c.ok("three numerators agree", input, hilbert_series(m, n, t))
                else {
                    continue;
                };
                c.eq("constant term", input, Some(&1), hs.numerator.first());
                c.eq(
                    "h(1) is the multiplicity",
                    input,
                    BigInt::from(hs.multiplicity()),
                    gv_multiplicity(m, n, t),
                );
                if t == 2 {
                    let expected: Vec<u64> = (0..m.min(n))
                        .map(|k| {
                            let v =
                                binomial(m as i64 - 1, k as i64) * binomial(n as i64 - 1, k as i64);
                            u64::try_from(v).unwrap_or(u64::MAX)
                        })
                        .collect();
                    c.eq(
                        "numerator for 2-minors",
                        input,
                        expected,
                        hs.numerator.clone(),
                    );
                }
                if m <= 3 && n <= 3 {
                    for d in 0..=b.degree(5) {
                        let direct = PositionMonomial::all_of_degree(m, n, d)
                            .iter()
                            .filter(|x| longest_diagonal(x) < t)
                            .count();
                        c.eq(
                            "series matches monomial counts",
                            || format!("{} d={d}", input()),
                            BigInt::from(direct),
                            hs.coefficient(d),
                        );
                    }
                }
                if (m, n, t) == (3, 3, 3) {
                    for d in 0..=b.degree(5) {
                        let expected = binomial(d as i64 + 8, 8) - binomial(d as i64 + 5, 8);
                        c.eq(
                            "cubic hypersurface",
                            || format!("d={d}"),
                            expected,
                            hs.coefficient(d),
                        );
                    }
                }
            }
        }
    }
}

fn rees_suite(c: &mut Checker, b: &Bounds) {
    if b.fits(3, 3) {
        let xs = bigraded_monomials(3, 3, b.degree(5), 3);
        for t in 1..=3 {
            if let Some(forms) = c.ok("facets", || format!("3x3 t={t}"), symbolic_forms(3, 3, t)) {
                for x in &xs {
                    c.eq(
                        "symbolic Rees membership via forms",
                        || format!("{x} t={t}"),
                        in_ini_symbolic_rees(x, t),
                        satisfies_forms(&forms, x),
                    );
                }
            }
            for x in &xs {
                c.eq(
                    "algebra of minors inside the Rees algebra",
                    || format!("{x} t={t}"),
                    in_ini_at(x, t),
                    in_ini_rees(x, t) && x.mon.degree() == t * x.k,
                );
            }
        }
        for factors in [vec![2], vec![2, 1], vec![3, 2], vec![3, 1, 1]] {
            if let Some(forms) = c.ok(
                "facets",
                || format!("{factors:?}"),
                product_forms(3, 3, &factors),
            ) {
                for x in bigraded_monomials(3, 3, b.degree(5), 2) {
                    let by_gamma = c.ok(
                        "membership",
                        || format!("{x}"),
                        in_ini_rees_product(&x, &factors),
                    );
                    c.eq(
                        "product Rees membership via forms",
                        || format!("{x} {factors:?}"),
                        by_gamma,
                        Some(satisfies_forms(&forms, &x)),
                    );
                }
            }
        }
    }
    c.eq(
        "shape simplification",
        || "sizes up to 12".into(),
        None,
        shape_simplification_counterexample(12),
    );
    for m in 1..=b.m(5) {
        for n in 1..=b.n(5) {
            let all = PositionMonomial::all_variables(m, n);
            for i in 1..=m.min(n) {
                let expected = c.ok(
                    "gamma of all variables",
                    || format!("{m}x{n} i={i}"),
                    gamma_of_x(m, n, i),
                );
                c.eq(
                    "gamma of all variables",
                    || format!("{m}x{n} i={i}"),
                    expected,
                    Some(greene::monomial_hat_gamma(&all, i)),
                );
            }
            if m <= 3 && n <= 4 {
                let ok = c.ok(
                    "distinguished product",
                    || format!("{m}x{n}"),
                    check_distinguished_d(m, n),
                );
                c.eq(
                    "distinguished product",
                    || format!("{m}x{n}"),
                    Some(true),
                    ok,
                );
            }
        }
    }
    if b.fits(4, 4) {
        let mut rng = b.rng();
        let all = PositionMonomial::all_variables(4, 4);
        for _ in 0..200 {
            let mon = random_monomial(&mut rng, 4, 4, b.degree(8));
            for i in 1..=4 {
                c.eq(
                    "gamma is additive on all variables",
                    || format!("{mon} i={i}"),
                    greene::monomial_hat_gamma(&all, i) + greene::monomial_hat_gamma(&mon, i),
                    greene::monomial_hat_gamma(&all.mul(&mon), i),
                );
            }
        }
        let r = c.ok(
            "principal canonical module",
            || "4x4 t=2".into(),
            canonical_at_principal(4, 4, 2, 10),
        );
        c.eq(
            "canonical module is principal",
            || "4x4 t=2".into(),
            Some(None::<BigradedMonomial>),
            r,
        );
    }
    let table = [
        ((4, 4, 2), Some(GorensteinReason::Balanced)),
        ((3, 3, 2), Some(GorensteinReason::Submaximal)),
        ((4, 3, 2), None),
        ((6, 6, 3), Some(GorensteinReason::Balanced)),
    ];
    for ((m, n, t), expected) in table {
        let got = c.ok(
            "Gorenstein",
            || format!("{m}x{n} t={t}"),
            is_gorenstein_at(m, n, t),
        );
        c.eq(
            "Gorenstein table",
            || format!("{m}x{n} t={t}"),
            Some(expected),
            got,
        );
    }
    for ((m, n, t), expected) in [((2, 4, 2), 5), ((3, 3, 2), 9), ((4, 3, 1), 12)] {
        let got = c.ok("dimension", || format!("{m}x{n} t={t}"), dim_at(m, n, t));
        c.eq(
            "dimension of the algebra of minors",
            || format!("{m}x{n} t={t}"),
            Some(expected),
            got,
        );
    }
}
