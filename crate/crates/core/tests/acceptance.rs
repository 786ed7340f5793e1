//! The eight acceptance criteria. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use knit::colored::{
    colored_invariant, q_integer, r_matrix, spin_half_jones, BraidingOperator, ColorLabel, ColoredSpace,
    CrossingOperator,
};
use knit::diagram::{closure_plat, closure_trace};
use knit::examples::{braid, BORROMEAN_PLAT, HOPF_PLAT, TREFOIL_PLAT};
use knit::invariance::invariance_suite;
use knit::jones::{jones_polynomial, markov_trace_jones};
use knit::qsim::{approx_jones, estimate_markov_trace, HadamardCircuit, Part};
use knit::{normal_form, BraidWord, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..100 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=10);
        let w = BraidWord::random_with(n, len, &mut rng).unwrap();
        let tl = markov_trace_jones(&w).map_err(|e| e.to_string())?;
        let state_sum = jones_polynomial(&closure_trace(&w)).map_err(|e| e.to_string())?;
        if tl != state_sum {
            return Err(format!("braid {k} ({w}, n = {n}): {tl} vs {state_sum}"));
        }
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(60), format!("100 braids agree term-wise in {t:.2?}"))
}

fn link_invariance() -> Outcome {
    let report = invariance_suite(50, 2024).map_err(|e| e.to_string())?;
    let summary: Vec<String> = report.checks.iter().map(|c| format!("{} {}/{}", c.name, c.passed, c.trials)).collect();
    if let Some(bad) = report.checks.iter().find(|c| !c.all_passed()) {
        return Err(format!("{}: {:?}", summary.join(", "), bad.failures));
    }
    Ok(summary.join(", "))
}

/// A relator of `B_n` as a letter list, chosen at random.
fn relator(n: usize, rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let (p, q) = (Letter::pos, Letter::neg);
    let i = rng.gen_range(1..n);
    match rng.gen_range(0..3) {
        1 if n >= 4 => {
            let i = rng.gen_range(1..n - 2);
            let j = rng.gen_range(i + 2..n);
            vec![p(i), p(j), q(i), q(j)]
        }
        2 if n >= 3 => {
            let i = rng.gen_range(1..n - 1);
            vec![p(i), p(i + 1), p(i), q(i + 1), q(i), q(i + 1)]
        }
        _ if rng.gen_bool(0.5) => vec![p(i), q(i)],
        _ => vec![q(i), p(i)],
    }
}

fn word_problem() -> Outcome {
    let start = Instant::now();
    let a = BraidWord::parse("s1 s2 s1", 3).unwrap();
    let b = BraidWord::parse("s2 s1 s2", 3).unwrap();
    if normal_form(&a) != normal_form(&b) {
        return Err("s1 s2 s1 and s2 s1 s2 have different normal forms".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..200 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=12);
        let w = BraidWord::random_with(n, len, &mut rng).unwrap();
        let mut letters = w.letters().to_vec();
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, relator(n, &mut rng));
        let v = BraidWord::new(n, letters).unwrap();
        if normal_form(&v) != normal_form(&w) {
            return Err(format!("perturbation {k}: {w} vs {v}"));
        }
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(10), format!("braid relation and 200 perturbations in {t:.2?}"))
}

fn yang_baxter_unitarity() -> Outcome {
    let mut worst_ybe: f64 = 0.0;
    let mut worst_unit: f64 = 0.0;
    for r in [5u32, 7, 10] {
        for a in 0..=3 {
            for b in 0..=3 {
                let m = r_matrix(ColorLabel::new(a), ColorLabel::new(b), r).map_err(|e| e.to_string())?;
                worst_unit = worst_unit.max(m.unitarity_defect());
                for c in 0..=3 {
                    let space =
                        ColoredSpace::new([a, b, c].map(ColorLabel::new).to_vec(), r).map_err(|e| e.to_string())?;
                    let product = |gens: [usize; 3]| {
                        let mut s = space.clone();
                        let mut op = BraidingOperator::identity(&s);
                        for g in gens {
                            let x = CrossingOperator::new(&s, g, true).unwrap();
                            s = x.codomain.clone();
                            op = op.then_crossing(&x).unwrap();
                        }
                        op
                    };
                    let (lhs, rhs) = (product([1, 2, 1]), product([2, 1, 2]));
                    worst_ybe = worst_ybe.max(lhs.max_difference(&rhs));
                    worst_unit = worst_unit.max(lhs.unitarity_defect());
                }
            }
        }
    }
    check(
        worst_ybe <= 1e-10 && worst_unit <= 1e-10,
        format!("max YBE residual {worst_ybe:.1e}, max unitarity defect {worst_unit:.1e}"),
    )
}

fn colored_reduction() -> Outcome {
    let r = 7;
    let mut worst: f64 = 0.0;
    for (name, named) in [("trefoil", TREFOIL_PLAT), ("Hopf", HOPF_PLAT), ("Borromean", BORROMEAN_PLAT)] {
        let w = braid(named);
        let d = closure_plat(&w).map_err(|e| e.to_string())?;
        let exact = jones_polynomial(&d).and_then(|v| v.evaluate_at_root(r)).map_err(|e| e.to_string())?;
        let got = spin_half_jones(&w, r).map_err(|e| e.to_string())?;
        let err = (got - exact).norm();
        if err > 1e-8 {
            return Err(format!("{name}: {got} vs {exact}"));
        }
        worst = worst.max(err);
    }
    Ok(format!("trefoil, Hopf, Borromean at r = 7, max deviation {worst:.1e}"))
}

fn quantum_dimensions() -> Outcome {
    let unknot = BraidWord::identity(2).unwrap();
    let mut worst: f64 = 0.0;
    for twice_j in 0..=4 {
        let v = colored_invariant(&unknot, &[ColorLabel::new(twice_j)], 10).map_err(|e| e.to_string())?;
        worst = worst.max((v - q_integer(twice_j as i64 + 1, 10).unwrap()).norm());
    }
    let mut vanish: f64 = 0.0;
    for r in 3..=40 {
        vanish = vanish.max(q_integer(r as i64, r).unwrap().abs());
    }
    check(
        worst <= 1e-10 && vanish <= 1e-12,
        format!("unknot deviation {worst:.1e} for j <= 2, max |[r]| {vanish:.1e} for r = 3..40"),
    )
}

fn approximation_contract() -> Outcome {
    let start = Instant::now();
    let w = braid(TREFOIL_PLAT);
    let mut hits = 0;
    for seed in 0..100 {
        let e = approx_jones(&w, 5, 0.1, 0.75, seed).map_err(|e| e.to_string())?;
        if e.within_delta().ok_or("exact value missing")? {
            hits += 1;
        }
    }
    let t = start.elapsed();
    check(hits >= 70 && t < Duration::from_secs(300), format!("{hits}/100 runs within 0.1 in {t:.2?}"))
}

fn cost_scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for len in [0usize, 1, 3, 7, 12, 20, 30] {
        let w = BraidWord::random_with(4, len, &mut rng).unwrap();
        let halves = [ColorLabel::half(); 4];
        let circuit = HadamardCircuit::new(&w, &halves, 5).map_err(|e| e.to_string())?;
        for part in [Part::Real, Part::Imag] {
            let run = circuit.run(part);
            if run.steps != len || (run.norm - 1.0).abs() > 1e-8 {
                return Err(format!("|β| = {len}: {} steps, norm {}", run.steps, run.norm));
            }
        }
        let e = approx_jones(&w, 5, 0.5, 0.75, 1).map_err(|e| e.to_string())?;
        if e.steps != len || e.circuits != 2 {
            return Err(format!("|β| = {len}: estimate reports {} steps", e.steps));
        }
        checked += 1;
    }
    let w = braid(BORROMEAN_PLAT);
    let colors = [ColorLabel::new(1), ColorLabel::new(2), ColorLabel::new(1)];
    let e = estimate_markov_trace(&w, &colors, 7, 0.5, 0.75, 1).map_err(|e| e.to_string())?;
    check(e.steps == w.len(), format!("{checked} braids with |β| up to 30 and the coloured Borromean: steps = |β|"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence", oracle_equivalence),
        ("link invariance", link_invariance),
        ("word problem", word_problem),
        ("Yang-Baxter and unitarity", yang_baxter_unitarity),
        ("colored reduction", colored_reduction),
        ("quantum dimensions", quantum_dimensions),
        ("approximation contract", approximation_contract),
        ("cost scaling", cost_scaling),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
