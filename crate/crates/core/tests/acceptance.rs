//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use qc_core::congruence::{verify_lemma, LemmaId};
use qc_core::numeric::{
    check_divisibility, div1_summand, divisibility_divisor, divisibility_sum, eval_at_one, evaluate_supercongruence,
    wang_summand, DivisibilityId, DivisibilitySpec, SupercongruenceId, SupercongruenceSpec,
};
use qc_core::qobjects::{cyclotomic, divisors};
use qc_core::wzengine::{
    conjecture61_expression, is_laurent, reindex_identity_check, telescope_check, theorem_summand, verify_boundary,
    verify_summand_vanishing, verify_theorem, wz_f, wz_pair_check, BoundaryId, ReindexId, TheoremId, WZPoint,
};
use qc_core::{Poly, RatFunc, Rational};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    ensure(start.elapsed() <= budget, || format!("took {:?}, budget {budget:?}", start.elapsed()))
}

fn theorem_instances(id: TheoremId, ns: &[i64]) -> Outcome {
    for &n in ns {
        let res = verify_theorem(id, n).map_err(|e| format!("{id} n={n}: {e}"))?;
        ensure(res.pass, || format!("{id} n={n}: nonzero remainder {}", res.witness))?;
    }
    Ok(())
}

fn wz_pair_grid() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for n in 0..=10 {
        for k in -3..=3 {
            ensure(wz_pair_check(WZPoint::new(n, k)), || format!("pair identity fails at ({n},{k})"))?;
            points += 1;
        }
    }
    ensure(points == 77, || format!("{points} points"))?;
    within(start, Duration::from_secs(30))
}

fn telescoping() -> Outcome {
    for m in 1..=8 {
        for k in -2..=2 {
            ensure(telescope_check(m, k).map_err(|e| e.to_string())?, || format!("telescoping fails at m={m} k={k}"))?;
        }
    }
    Ok(())
}

fn first_theorem() -> Outcome {
    let start = Instant::now();
    theorem_instances(TheoremId::Thm11, &[3, 5, 7, 9])?;
    let big = Instant::now();
    theorem_instances(TheoremId::Thm11, &[15])?;
    within(big, Duration::from_secs(120))?;
    within(start, Duration::from_secs(240))
}

fn second_theorem() -> Outcome {
    theorem_instances(TheoremId::Thm12, &[3, 5, 7, 9, 15])
}

fn input_congruence() -> Outcome {
    theorem_instances(TheoremId::QDiv, &[3, 5, 7, 9])
}

fn further_theorems() -> Outcome {
    theorem_instances(TheoremId::Thm51, &[5, 7, 9])?;
    theorem_instances(TheoremId::Thm52, &[5, 7, 9])
}

fn lemmas() -> Outcome {
    for id in LemmaId::ALL {
        for n in (3..=21).step_by(2) {
            let res = verify_lemma(id, n).map_err(|e| format!("{id} n={n}: {e}"))?;
            ensure(res.pass, || format!("{id} n={n}: witness {}", res.witness))?;
        }
    }
    Ok(())
}

fn boundaries() -> Outcome {
    for id in BoundaryId::ALL {
        for m in (3..=9).step_by(2).filter(|&m| m > id.min_m_exclusive()) {
            let res = verify_boundary(id, m).map_err(|e| format!("{id} m={m}: {e}"))?;
            ensure(res.pass, || format!("{id} m={m}: remainder {}", res.witness))?;
        }
    }
    Ok(())
}

fn reindexing() -> Outcome {
    for m in [3, 5, 7] {
        for id in ReindexId::ALL {
            ensure(reindex_identity_check(id, m).map_err(|e| e.to_string())?, || format!("{id} m={m}"))?;
        }
        let res = verify_summand_vanishing(m).map_err(|e| e.to_string())?;
        ensure(res.pass, || format!("summand k={m} not divisible by [{m}]^4"))?;
    }
    Ok(())
}

fn supercongruences() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(SupercongruenceId, u64, Option<u32>)> = Vec::new();
    for p in [3, 5, 7, 11, 13] {
        cases.push((SupercongruenceId::Div1Half, p, None));
        cases.push((SupercongruenceId::Div1Full, p, None));
    }
    for p in [5, 7, 11, 13] {
        cases.push((SupercongruenceId::Guo1, p, None));
        cases.push((SupercongruenceId::Wang, p, None));
    }
    for p in [5, 7] {
        cases.push((SupercongruenceId::Guo1Pr, p, Some(2)));
        cases.push((SupercongruenceId::WangPr, p, Some(2)));
    }
    for (id, p, r) in cases {
        let spec = SupercongruenceSpec::new(id, p, r).map_err(|e| e.to_string())?;
        let out = evaluate_supercongruence(&spec).map_err(|e| format!("{id} p={p}: {e}"))?;
        ensure(out.pass, || format!("{id} p={p}: residue {} target {}", out.residue, out.target))?;
    }
    let spot = |id, expect: i64| -> Outcome {
        let out = evaluate_supercongruence(&SupercongruenceSpec::new(id, 5, None).unwrap()).map_err(|e| e.to_string())?;
        ensure(out.residue == BigInt::from(expect), || format!("{id} at p=5: residue {}", out.residue))
    };
    spot(SupercongruenceId::Guo1, 255)?;
    spot(SupercongruenceId::Wang, 380)?;
    within(start, Duration::from_secs(10))
}

fn divisibility() -> Outcome {
    for id in DivisibilityId::ALL {
        for n in 2..=64 {
            ensure(check_divisibility(&DivisibilitySpec::new(id, n).unwrap()), || format!("{id} n={n}"))?;
        }
    }
    ensure(divisibility_sum(DivisibilityId::Sunby, 2) == BigInt::from(48), || "sum at n=2".into())?;
    ensure(divisibility_divisor(DivisibilityId::Sunby, 2) == BigInt::from(24), || "divisor 24".into())?;
    ensure(divisibility_divisor(DivisibilityId::Strong, 2) == BigInt::from(48), || "divisor 48".into())
}

fn conjecture() -> Outcome {
    let start = Instant::now();
    for n in 1..=24 {
        let r = conjecture61_expression(n).map_err(|e| e.to_string())?;
        ensure(is_laurent(&r), || format!("n={n}: denominator {}", r.den()))?;
        if n == 1 {
            ensure(r == RatFunc::q_power(-2), || format!("n=1 value {r}"))?;
        }
    }
    within(start, Duration::from_secs(300))
}

fn bridge() -> Outcome {
    for n in 0..=10u32 {
        let v = eval_at_one(&wz_f(WZPoint::new(n, 0))).map_err(|e| e.to_string())?;
        ensure(v == div1_summand(n), || format!("F({n},0) at 1 is {v}"))?;
    }
    for k in 0..=10u32 {
        let v = eval_at_one(&theorem_summand(TheoremId::Thm12, k).to_ratfunc()).map_err(|e| e.to_string())?;
        ensure(v == wang_summand(k), || format!("summand {k} at 1 is {v}"))?;
    }
    Ok(())
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-12i64..=12, 1i64..=5), 0..7)
        .prop_map(|v| Poly::from_coeffs(v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect()))
}

fn run_prop<S: Strategy>(seed: u64, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 256, rng_seed: RngSeed::Fixed(seed), ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn kernel_properties() -> Outcome {
    run_prop(101, (small_poly(), small_poly()), |(a, b)| {
        if b.is_zero() {
            return Ok(());
        }
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&b * &q) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        Ok(())
    })?;
    run_prop(103, (small_poly(), small_poly(), small_poly()), |(g, u, v)| {
        let (a, b) = (&g * &u, &g * &v);
        if a.is_zero() && b.is_zero() {
            return Ok(());
        }
        let d = a.gcd(&b).unwrap();
        prop_assert!(a.divrem(&d).unwrap().1.is_zero());
        prop_assert!(b.divrem(&d).unwrap().1.is_zero());
        if !g.is_zero() {
            prop_assert!(d.divrem(&g).unwrap().1.is_zero());
        }
        Ok(())
    })?;
    let ratfunc = || (small_poly(), small_poly()).prop_filter("nonzero denominator", |(_, d)| !d.is_zero());
    run_prop(107, (ratfunc(), ratfunc()), |((an, ad), (bn, bd))| {
        let a = RatFunc::new(&an, &ad).unwrap();
        let b = RatFunc::new(&bn, &bd).unwrap();
        let mut results = vec![&a + &b, &a - &b, &a * &b];
        if !b.is_zero() {
            results.push(a.checked_div(&b).unwrap());
        }
        for r in results {
            prop_assert!(r.den().is_monic());
            prop_assert!(r.num().gcd(&r.den()).unwrap().is_one() || r.num().is_zero());
        }
        Ok(())
    })?;
    for n in 1..=200u32 {
        let mut prod = Poly::one();
        for d in divisors(n) {
            prod = &prod * &cyclotomic(d as i64).unwrap();
        }
        let expect = &Poly::monomial(Rational::from_integer(1.into()), n as usize) - &Poly::one();
        ensure(prod == expect, || format!("cyclotomic product fails at n={n}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("WZ pair identity on 0<=n<=10, -3<=k<=3", wz_pair_grid),
        ("telescoping on 1<=m<=8, -2<=k<=2", telescoping),
        ("truncated [3k][2k][k]^2 sum mod [n]Phi_n^3, n in {3,5,7,9,15}", first_theorem),
        ("truncated [3k-1] sum mod [n]Phi_n^3, n in {3,5,7,9,15}", second_theorem),
        ("truncated [3k+1] sum mod [n]Phi_n^3, n in {3,5,7,9}", input_congruence),
        ("[3k+5] and [3k-3] sums mod [n]Phi_n^3, n in {5,7,9}", further_theorems),
        ("auxiliary congruences and identity for odd 3<=n<=21", lemmas),
        ("boundary congruences for G(m,k), odd m<=9", boundaries),
        ("reindexing identities and [m]^4 vanishing, m in {3,5,7}", reindexing),
        ("numeric supercongruences modulo prime powers", supercongruences),
        ("binomial-sum divisibility for 2<=n<=64", divisibility),
        ("Laurent property for 1<=n<=24", conjecture),
        ("values at q=1 match the classical summands", bridge),
        ("kernel properties under a fixed seed", kernel_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2}  PASS  {name}  ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}  FAIL  {name}  ({ms} ms): {e}", i + 1);
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
