//! Acceptance harness. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lrs_core::applications::{
    boustrophedon, boustrophedon_egf_check, stirling_column, stirling_triangle, wythoff_array,
    wythoff_closed_form_check, wythoff_partition_check, WythoffVariant,
};
use lrs_core::closed_form::{agrees, irs_closed_form, order2_closed_form};
use lrs_core::identity::{coprime_product, sweep, BilateralIRS2, Grid, Suite, CATALOG};
use lrs_core::irs_algebra::{
    build_toeplitz, delta_identity_check, irs_representation, represent_by_irs, solve_toeplitz,
};
use lrs_core::rational::{frac, int};
use lrs_core::roots::characteristic_roots;
use lrs_core::{BilateralSequence, CoefficientSet, Error, Rational, SequenceSpec};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_1a25;
const BITS: usize = 256;

type Outcome = Result<(), String>;
type Golden = (&'static str, &'static [i64], &'static [i64], &'static [i64]);

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn spec(p: &[i64], a: &[i64]) -> SequenceSpec {
    SequenceSpec::from_integers(p, a).unwrap()
}

fn irs(p: &[i64]) -> BilateralSequence {
    BilateralSequence::irs(&CoefficientSet::from_integers(p).unwrap())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let q = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if !nonzero || !q.is_zero() {
            return q;
        }
    }
}

fn random_integer_coefficients(rng: &mut ChaCha8Rng, r: usize) -> Vec<i64> {
    let mut p: Vec<i64> = (0..r).map(|_| rng.gen_range(-9..=9)).collect();
    while p[r - 1] == 0 {
        p[r - 1] = rng.gen_range(-9..=9);
    }
    p
}

fn golden_tables() -> Outcome {
    let cases: [Golden; 6] = [
        ("fibonacci", &[1, 1], &[0, 1], &[0, 1, 1, 2, 3, 5, 8, 13]),
        ("pell", &[2, 1], &[0, 1], &[0, 1, 2, 5, 12, 29]),
        ("jacobsthal", &[1, 2], &[0, 1], &[0, 1, 1, 3, 5, 11, 21]),
        ("jacobsthal-lucas", &[1, 2], &[2, 1], &[2, 1, 5, 7, 17, 31]),
        ("tribonacci", &[1, 1, 1], &[0, 0, 1], &[0, 0, 1, 1, 2, 4, 7, 13, 24, 44]),
        ("tribonacci-like", &[1, 1, 1], &[2, 1, 1], &[2, 1, 1, 4, 6, 11, 21]),
    ];
    for (name, p, a, want) in cases {
        let got = BilateralSequence::new(spec(p, a))
            .terms_range(0, want.len() as i64 - 1)
            .map_err(|e| e.to_string())?;
        ensure(got == ints(want), || format!("{name}: got {got:?}"))?;
    }
    Ok(())
}

fn toeplitz_tribonacci_like() -> Outcome {
    let s = spec(&[1, 1, 1], &[2, 1, 1]);
    let rep = irs_representation(&s).map_err(|e| e.to_string())?;
    let cs: Vec<Rational> = rep.terms.iter().map(|t| t.c.clone()).collect();
    let want = vec![frac(6, 19), frac(-4, 19), frac(-1, 19)];
    ensure(cs == want, || format!("coefficients {cs:?}"))?;
    let seq = BilateralSequence::new(s.clone());
    let trib = irs(&[1, 1, 1]);
    for n in 0..=64 {
        let v = rep.evaluate(&seq, n).map_err(|e| e.to_string())?;
        ensure(v == trib.term(n).unwrap(), || format!("mismatch at n={n}"))?;
    }
    Ok(())
}

fn singular_system() -> Outcome {
    let sys = build_toeplitz(&spec(&[1, 3, 1], &[1, 0, 1]));
    let det = sys.matrix.determinant().map_err(|e| e.to_string())?;
    ensure(det.is_zero(), || format!("determinant {det}"))?;
    match solve_toeplitz(&sys) {
        Err(Error::SingularSystem) => Ok(()),
        other => Err(format!("expected a singular system, got {other:?}")),
    }
}

fn representation_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..200 {
        let r = rng.gen_range(1..=6usize);
        let mut p: Vec<Rational> = (0..r - 1).map(|_| random_rational(&mut rng, false)).collect();
        p.push(random_rational(&mut rng, true));
        let cs = CoefficientSet::new(p).unwrap();
        let a: Vec<Rational> = (0..r).map(|_| random_rational(&mut rng, false)).collect();
        let s = SequenceSpec::new(cs.clone(), a).unwrap();
        let seq = BilateralSequence::new(s.clone());
        for n in 0..=64 {
            let v = represent_by_irs(&s, n).map_err(|e| e.to_string())?;
            ensure(v == seq.term(n).unwrap(), || format!("case {case}, n={n}"))?;
        }
        for k in 0..=r as i64 - 2 {
            for n in 0..=r as i64 - 2 {
                let v = delta_identity_check(&cs, k, n).map_err(|e| e.to_string())?;
                ensure(v == int(i64::from(k == n)), || format!("delta case {case}, k={k}, n={n}"))?;
            }
        }
    }
    Ok(())
}

fn closed_form_agreement() -> Outcome {
    let mut sets: Vec<Vec<i64>> = vec![vec![1, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1], vec![2, -1]];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..20 {
        let r = rng.gen_range(1..=5usize);
        sets.push(random_integer_coefficients(&mut rng, r));
    }
    for p in &sets {
        let cs = CoefficientSet::from_integers(p).unwrap();
        let roots = characteristic_roots(&cs, BITS).map_err(|e| format!("{p:?}: {e}"))?;
        let seq = BilateralSequence::irs(&cs);
        let s = SequenceSpec::irs(&cs);
        for n in 0..=40 {
            let exact = seq.term(n).unwrap();
            ensure(agrees(&irs_closed_form(&roots, n), &exact, BITS), || format!("{p:?} n={n}"))?;
            if p.len() == 2 {
                let v = order2_closed_form(&s, n, BITS).map_err(|e| e.to_string())?;
                ensure(agrees(&v, &exact, BITS), || format!("order-2 form {p:?} n={n}"))?;
            }
        }
    }
    let e2 = irs(&[2, -1]);
    for n in 0..=40 {
        ensure(e2.term(n).unwrap() == int(n), || format!("E2={{2,-1}} at n={n}"))?;
    }
    Ok(())
}

fn nonlinear_sweep() -> Outcome {
    let mut pairs = vec![(1, 1), (2, 1), (1, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    while pairs.len() < 23 {
        let (p1, p2) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        if p2 != 0 {
            pairs.push((p1, p2));
        }
    }
    let grid = Grid::new(1..=5, 0..=6, -10..=10);
    for (p1, p2) in pairs {
        let s = SequenceSpec::irs(&CoefficientSet::from_integers(&[p1, p2]).unwrap());
        for suite in [Suite::Nonlinear, Suite::Negative, Suite::SmallM] {
            let v = sweep(suite, &s, &grid).map_err(|e| e.to_string())?;
            ensure(v.passed, || format!("{{{p1},{p2}}} {}: {v}", suite.name()))?;
        }
    }
    Ok(())
}

fn named_identities() -> Outcome {
    for entry in CATALOG.iter().filter(|e| e.expected_to_hold) {
        let v = lrs_core::identity::named_identity_suite(entry.name, entry.min_index, 64)
            .map_err(|e| e.to_string())?;
        ensure(v.passed, || format!("{}: {v}", entry.name))?;
    }
    Ok(())
}

fn congruences() -> Outcome {
    let mut failures = Vec::new();
    let grid = Grid::new(2..=6, 0..=6, 0..=10);
    let families = [("fibonacci", 1, 1), ("pell", 2, 1), ("jacobsthal", 1, 2)];
    for (name, p1, p2) in families {
        let s = SequenceSpec::irs(&CoefficientSet::from_integers(&[p1, p2]).unwrap());
        let v = sweep(Suite::Congruence, &s, &grid).map_err(|e| e.to_string())?;
        if !v.passed {
            failures.push(format!("{name}: {v}"));
        }
        let f = BilateralIRS2::from_integers(p1, p2).unwrap();
        for a in 1..=8 {
            for b in a..=8 {
                for ms in [vec![a, b], vec![a, b, b + 1]] {
                    if let Some(v) = coprime_product(&f, &ms).map_err(|e| e.to_string())? {
                        if !v.passed {
                            failures.push(format!("{name} product {ms:?}: {v}"));
                        }
                    }
                }
            }
        }
    }
    let fib = BilateralIRS2::from_integers(1, 1).unwrap();
    match coprime_product(&fib, &[3, 4, 5]).map_err(|e| e.to_string())? {
        Some(v) if v.passed => {}
        other => failures.push(format!("F_60 mod F_3 F_4 F_5: {other:?}")),
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn stirling() -> Outcome {
    let tri = stirling_triangle(31);
    for k in 1..=7usize {
        let col = stirling_column(k, 30).map_err(|e| e.to_string())?;
        for (n, v) in col.iter().enumerate() {
            let want = tri[n + 1].get(k).cloned().unwrap_or_default();
            ensure(*v == Rational::from_integer(want), || format!("k={k} n={n}"))?;
        }
    }
    let c2 = stirling_column(2, 6).unwrap();
    ensure(c2[2..6] == ints(&[3, 7, 15, 31]), || format!("S(n,2): {c2:?}"))?;
    let c3 = stirling_column(3, 6).unwrap();
    ensure(c3[3..6] == ints(&[6, 25, 90]), || format!("S(n,3): {c3:?}"))
}

const WYTHOFF_PRINTED: [[i64; 8]; 8] = [
    [0, 1, 1, 2, 3, 5, 8, 13],
    [1, 3, 4, 7, 11, 18, 29, 47],
    [2, 4, 6, 10, 16, 26, 42, 68],
    [3, 6, 9, 15, 24, 39, 63, 102],
    [4, 8, 12, 20, 32, 52, 84, 136],
    [5, 9, 14, 23, 37, 60, 97, 157],
    [6, 11, 17, 28, 45, 73, 118, 191],
    [7, 12, 19, 31, 50, 81, 131, 212],
];

const PELL_WYTHOFF_PRINTED: [[i64; 8]; 5] = [
    [0, 1, 2, 5, 12, 29, 70, 169],
    [1, 3, 7, 17, 41, 99, 239, 577],
    [2, 6, 14, 34, 82, 198, 470, 1154],
    [3, 8, 19, 46, 111, 268, 647, 1562],
    [4, 11, 26, 63, 152, 367, 886, 2139],
];

fn wythoff() -> Outcome {
    let mut failures = Vec::new();
    for (variant, table) in
        [(WythoffVariant::Fibonacci, &WYTHOFF_PRINTED[..]), (WythoffVariant::Pell, &PELL_WYTHOFF_PRINTED[..])]
    {
        let arr = wythoff_array(variant, table.len(), 8).map_err(|e| e.to_string())?;
        for (j, row) in table.iter().enumerate() {
            for (n, &want) in row.iter().enumerate() {
                let got = &arr.entries[j][n];
                if *got != BigInt::from(want) {
                    failures.push(format!("{} [{j}][{n}]: table {want}, computed {got}", variant.name()));
                }
                if !wythoff_closed_form_check(variant, j as u64, n as i64, BITS).map_err(|e| e.to_string())? {
                    failures.push(format!("{} closed form [{j}][{n}]", variant.name()));
                }
            }
        }
    }
    let report = wythoff_partition_check(8, 20).map_err(|e| e.to_string())?;
    if !report.holds() {
        failures.push(format!("partition: {report:?}"));
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn boustrophedon_checks() -> Outcome {
    let a = ints(&[1, 1, 1, 1]);
    let (b, tri) = boustrophedon(&a).map_err(|e| e.to_string())?;
    ensure(b == ints(&[1, 2, 4, 9]), || format!("b = {b:?}"))?;
    ensure(tri.verify(&a), || "triangle recurrence".into())?;
    // a_n, then the entries of each row in the order they are generated
    let (a0, a1, a2, a3) = (1, 1, 1, 1);
    let (b1, b2) = (a0 + a1, a1 + a2 + a0 + a1);
    let pattern: [&[i64]; 4] = [
        &[a0],
        &[a1, a0 + a1],
        &[a2, a2 + b1, a1 + a2 + b1],
        &[a3, a3 + b2, a2 + a3 + b1 + b2, 2 * a2 + a3 + b1 + b2],
    ];
    for (n, row) in pattern.iter().enumerate() {
        ensure(tri.rows[n] == ints(row), || format!("row {n}: {:?}", tri.rows[n]))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    for case in 0..50 {
        let len = rng.gen_range(1..=12);
        let a: Vec<Rational> = (0..len).map(|_| random_rational(&mut rng, false)).collect();
        let (_, tri) = boustrophedon(&a).map_err(|e| e.to_string())?;
        ensure(tri.verify(&a), || format!("recurrence, case {case}"))?;
        ensure(boustrophedon_egf_check(&a).map_err(|e| e.to_string())?, || format!("egf, case {case}"))?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, title: "sequence tables", limit: secs(1), run: golden_tables },
        Criterion {
            id: 2,
            title: "toeplitz solve for tribonacci-like",
            limit: secs(1),
            run: toeplitz_tribonacci_like,
        },
        Criterion { id: 3, title: "singular toeplitz system", limit: None, run: singular_system },
        Criterion { id: 4, title: "representation sweep", limit: secs(30), run: representation_sweep },
        Criterion { id: 5, title: "closed-form agreement", limit: secs(30), run: closed_form_agreement },
        Criterion { id: 6, title: "nonlinear identity sweep", limit: secs(60), run: nonlinear_sweep },
        Criterion { id: 7, title: "named identities", limit: None, run: named_identities },
        Criterion { id: 8, title: "congruences", limit: None, run: congruences },
        Criterion { id: 9, title: "stirling columns", limit: None, run: stirling },
        Criterion { id: 10, title: "wythoff tables", limit: None, run: wythoff },
        Criterion { id: 11, title: "boustrophedon", limit: None, run: boustrophedon_checks },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let Some(limit) = c.limit {
            if outcome.is_ok() && elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {} ({elapsed:.2?})", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({elapsed:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
