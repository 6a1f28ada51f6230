//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use symchar::verify::{factorial, prior_bound, verify_key_ineq, Stratum};
use symchar::{
    build_symmetric, cycle_types, degree_hook_length, enumerate_rim_hooks, evaluate,
    evaluate_with_order, orthogonality_check, partitions, predicted_value, staircase, CharValue,
    CycleType, Evaluator, ExtremalSpec, HookClass, PartOrder, Partition,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(stratum: Stratum) -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    single_threaded(|| {
        for n in 1..=12 {
            let rep = symchar::verify::verify(n, stratum, 12).map_err(|e| e.to_string())?;
            ensure(rep.passed(), || format!("n={n}: {:?}", rep.violations[0]))?;
            for rec in &rep.records {
                ensure(rec.max <= stratum.bound(rec.k), || format!("n={n} k={}", rec.k))?;
            }
            pairs += rep.pairs_checked();
        }
        Ok::<_, String>(())
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} pairs, 0 violations, {elapsed:.2?} single-threaded"))
}

fn ac1() -> Outcome {
    sweep(Stratum::All)
}

fn ac2() -> Outcome {
    sweep(Stratum::FixedPoint)
}

fn ac3() -> Outcome {
    let mut notes = Vec::new();
    for k in 1..=4 {
        let (lam, mu) = staircase(k);
        ensure(lam.size() == [3, 10, 21, 36][k - 1], || format!("k={k}: n={}", lam.size()))?;
        let start = Instant::now();
        let v = evaluate(&lam, &mu).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(60), || format!("k={k} took {elapsed:?}"))?;
        let pred = predicted_value(k);
        ensure(v.magnitude() == &factorial(k), || format!("k={k}: |χ| = {v}"))?;
        let derived = [-1, -1, 1, 1][k - 1];
        ensure(pred.sign == derived && v.signum() == derived, || {
            format!("k={k}: χ = {v}, derived sign {}", pred.sign)
        })?;
        let printed = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
        ensure(pred.printed_sign == printed, || format!("k={k}: printed sign"))?;
        notes.push(format!(
            "k={k} n={} χ={v} printed-sign {}{}",
            lam.size(),
            if printed > 0 { '+' } else { '-' },
            if pred.signs_agree() { "" } else { " (differs)" }
        ));
    }
    ensure(
        evaluate(&"2,1".parse().unwrap(), &"3".parse().unwrap()).unwrap() == CharValue::from(-1),
        || "χ_(2,1)((3)) ≠ -1".into(),
    )?;
    Ok(notes.join("; "))
}

fn ac4() -> Outcome {
    let cases = [("2,2", "3,1", -1), ("4,3,3,1", "5,5,1", -2)];
    for (lam, mu, want) in cases {
        let v = evaluate(&lam.parse().unwrap(), &mu.parse().unwrap()).map_err(|e| e.to_string())?;
        ensure(v == CharValue::from(want), || format!("χ_[{lam}]([{mu}]) = {v}"))?;
    }
    Ok("χ_[2,2]([3,1]) = -1, χ_[4,3,3,1]([5,5,1]) = -2".into())
}

fn ac5() -> Outcome {
    let rep = verify_key_ineq(20);
    ensure(rep.passed(), || format!("{:?}", rep.violations[0]))?;
    let staircase: Partition = "4,3,2,1".parse().unwrap();
    ensure(
        rep.equality_cases
            .iter()
            .any(|c| c.lambda == staircase && c.r == 5 && c.total == 2),
        || "equality case ([4,3,2,1], r=5) missing".into(),
    )?;
    Ok(format!(
        "{} partitions, {} equality cases incl. ([4,3,2,1], r=5, t=2)",
        rep.partitions_checked,
        rep.equality_cases.len()
    ))
}

fn strict_sequences(max: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (k - 1)..=max {
        if k > 1 && first == 0 {
            continue;
        }
        for mut tail in strict_sequences(first - usize::from(first > 0), k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn ac6() -> Outcome {
    let mut specs = 0;
    for k in 1..=4 {
        for arms in strict_sequences(9, k) {
            for r in arms[0] + 1..=11 {
                let spec = ExtremalSpec::symmetric(arms.clone(), r);
                let lam = build_symmetric(&spec).map_err(|e| e.to_string())?;
                let hooks = enumerate_rim_hooks(&lam, r);
                ensure(hooks.len() == k, || format!("{lam} r={r}: {} hooks", hooks.len()))?;
                for (p, h) in hooks.iter().enumerate() {
                    ensure(h.class == HookClass::Central, || format!("{lam} r={r}: non-central"))?;
                    let want = spec.omit_arm(h.first.row).map_err(|e| e.to_string())?;
                    ensure(h.first.row == p + 1 && h.remainder.to_frobenius() == want, || {
                        format!("{lam} r={r}: removal gives {:?}", h.remainder.to_frobenius())
                    })?;
                }
                specs += 1;
            }
        }
    }
    Ok(format!("{specs} parameter sets"))
}

fn ac7() -> Outcome {
    for n in 0..=12 {
        let mut ev = Evaluator::new();
        let id = CycleType::repeated(1, n);
        for lam in partitions(n) {
            let v = ev.evaluate(&lam, &id).map_err(|e| e.to_string())?;
            ensure(v == degree_hook_length(&lam), || format!("degree of {lam}"))?;
        }
    }
    for n in 1..=10 {
        let rep = orthogonality_check(n, 14).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("orthogonality n={n}"))?;
        let mut ev = Evaluator::new();
        for mu in cycle_types(n) {
            let twist = if (n - mu.k()) % 2 == 0 { 1 } else { -1 };
            for lam in partitions(n) {
                let v = ev.evaluate(&lam, &mu).unwrap();
                let w = ev.evaluate(&lam.conjugate(), &mu).unwrap();
                ensure(*w.value() == BigInt::from(twist) * v.value(), || {
                    format!("conjugation {lam} at {mu}")
                })?;
                for order in PartOrder::ALL {
                    let o = evaluate_with_order(&lam, &mu, order).unwrap();
                    ensure(o == v, || format!("order {order:?} {lam} at {mu}"))?;
                }
            }
        }
    }
    Ok("degrees n≤12, orthogonality/conjugation/order n≤10".into())
}

fn ac8() -> Outcome {
    let mut worst = String::new();
    for n in 1..=12 {
        for stratum in [Stratum::All, Stratum::FixedPoint] {
            let rep = symchar::verify::verify(n, stratum, 12).map_err(|e| e.to_string())?;
            for rec in &rep.records {
                let k_fact = factorial(rec.k);
                let prior = prior_bound(rec.k);
                ensure(rec.max <= k_fact && k_fact <= prior, || format!("n={n} k={}", rec.k))?;
                ensure(rec.margin == BigInt::from(prior.clone()) - BigInt::from(rec.max.clone()), || {
                    format!("margin n={n} k={}", rec.k)
                })?;
                if n == 12 && stratum == Stratum::All && rec.k == 4 {
                    worst = format!("n=12 k=4: max {} ≤ 24 ≤ {prior}, margin {}", rec.max, rec.margin);
                }
            }
        }
    }
    Ok(worst)
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 |χ| ≤ k! for all λ, μ ⊢ n ≤ 12", ac1),
        ("AC2 |χ| ≤ (k-1)! with a fixed point, n ≤ 12", ac2),
        ("AC3 staircase witnesses reach k!, k = 1..4", ac3),
        ("AC4 fixed-point witnesses", ac4),
        ("AC5 t_r·r ≤ n and C_r ≤ d for n ≤ 20", ac5),
        ("AC6 symmetric family: k central r-hooks, arm deletion", ac6),
        ("AC7 degree, orthogonality, conjugation, order oracles", ac7),
        ("AC8 observed max ≤ k! ≤ 2^(k-1)k! with margins", ac8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
