//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails.

use std::process::{Command, ExitCode};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tetrahn::chow::intersect_number;
use tetrahn::degeneration::{
    adjusted_slope, build_degeneration, combined_bound, component_bounds, GluedBundleSketch,
};
use tetrahn::rational::{frac, int, render};
use tetrahn::slope::{is_semistable_split, BundleData, Provenance};
use tetrahn::tetragonal::{corollary_embedding, curve_class, general_curve, normal_tower, verify_theorem};
use tetrahn::{oracle, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(v: &Rational) -> String {
    render(v)
}

/// `2g + 4 + k/(g - s)`.
fn shifted(g: i64, k: i64, s: i64) -> Rational {
    int(2 * g + 4) + frac(k, g - s)
}

fn canonical_normal_slope() -> Outcome {
    for g in [7, 8, 20, 101] {
        let mu = BundleData::new((g - 2) as u64, 2 * g * g - 2).map_err(|e| e.to_string())?.slope();
        let want = shifted(g, 6, 2);
        ensure(mu == want, || format!("g={g}: slope {} != {}", r(&mu), r(&want)))?;
        let tower = normal_tower(&general_curve(g).map_err(|e| e.to_string())?);
        ensure(tower.n_c.slope() == want, || format!("g={g}: tower N_C slope {}", r(&tower.n_c.slope())))?;
    }
    Ok("g in {7, 8, 20, 101}".into())
}

fn ncq_degree() -> Outcome {
    for g in 6..=500 {
        let c = general_curve(g).map_err(|e| e.to_string())?;
        let class = curve_class(&c);
        let divisor = c.scroll().divisor(4, -(g - 5));
        let d = intersect_number(&class, &divisor).map_err(|e| e.to_string())?;
        ensure(d == 4 * g + 12, || format!("g={g}: [C]·(4H-(g-5)R) = {d}, want {}", 4 * g + 12))?;
        let tower = normal_tower(&c);
        ensure(tower.n_cq.degree() == d, || format!("g={g}: tower degree {}", tower.n_cq.degree()))?;
    }
    Ok("g in 6..=500".into())
}

fn quotient_slopes() -> Outcome {
    for g in 7..=500 {
        let q = BundleData::new((g - 4) as u64, 2 * g * g - 4 * g - 14).unwrap().slope();
        ensure(q == shifted(g, 2, 4), || format!("g={g}: odd quotient slope {}", r(&q)))?;
        let tower = normal_tower(&general_curve(g).unwrap());
        ensure(tower.quotient_q.slope() == q, || format!("g={g}: tower quotient {}", tower.quotient_q))?;
    }
    for g in (6..=500).step_by(2) {
        let q = BundleData::new((g - 3) as u64, 2 * g * g - 2 * g - 10).unwrap().slope();
        ensure(q == shifted(g, 2, 3), || format!("g={g}: even quotient slope {}", r(&q)))?;
        let c = general_curve(g).unwrap();
        ensure(c.balanced_syzygy, || format!("g={g}: syzygy not balanced"))?;
        let tower = normal_tower(&c);
        ensure(tower.quotient_y.slope() == q, || format!("g={g}: tower quotient {}", tower.quotient_y))?;
    }
    Ok("g in 7..=500 (N_Q quotient), even g in 6..=500 (N_Y quotient)".into())
}

fn check_verdict(g: i64, top: Rational, quotient: Rational) -> Result<(), String> {
    let v = verify_theorem(g).map_err(|e| e.to_string())?;
    ensure(v.passed(), || {
        let failed: Vec<_> = v.failed_checks().map(|c| c.to_string()).collect();
        format!("g={g}: verdict {:?}, failed {failed:?}", v.status)
    })?;
    ensure(v.top_slope() == top, || format!("g={g}: top slope {} != {}", r(&v.top_slope()), r(&top)))?;
    ensure(v.quotient_slope() == quotient, || {
        format!("g={g}: quotient slope {} != {}", r(&v.quotient_slope()), r(&quotient))
    })?;
    ensure(top > quotient, || format!("g={g}: {} not > {}", r(&top), r(&quotient)))?;
    let bound = v.bound.as_ref().ok_or_else(|| format!("g={g}: no bound"))?;
    let want = int(2 * g + 2) + frac(4, g - 2);
    ensure(bound.bound == want, || format!("g={g}: bound {} != {}", r(&bound.bound), r(&want)))?;
    ensure(bound.bound < quotient, || format!("g={g}: bound {} not < {}", r(&bound.bound), r(&quotient)))?;
    Ok(())
}

fn odd_theorem() -> Outcome {
    for g in (7..=499).step_by(2) {
        check_verdict(g, int(2 * g + 6), shifted(g, 2, 4))?;
        let tower = normal_tower(&general_curve(g).unwrap());
        let degs = tower.n_cq.degrees();
        ensure(degs.iter().all(|&d| d == degs[0]), || format!("g={g}: N_C/Q splits as {degs:?}"))?;
        ensure(is_semistable_split(&tower.n_cq), || format!("g={g}: N_C/Q not semistable"))?;
    }
    Ok("odd g in 7..=499".into())
}

fn even_theorem() -> Outcome {
    for g in (6..=500).step_by(2) {
        check_verdict(g, int(2 * g + 8), shifted(g, 2, 3))?;
    }
    Ok("even g in 6..=500".into())
}

fn degeneration_bookkeeping() -> Outcome {
    for g in 6..=500 {
        let d = build_degeneration(g).map_err(|e| e.to_string())?;
        let c = curve_class(&general_curve(g).unwrap());
        ensure(d.class_sum() == c, || format!("g={g}: [C1]+[C2] = {} != {c}", d.class_sum()))?;
        let (c1, c2) = (d.rational_component(), d.elliptic_component());
        ensure((c1.h_degree, c2.h_degree) == (g - 2, g), || {
            format!("g={g}: degrees ({}, {})", c1.h_degree, c2.h_degree)
        })?;
        ensure((c1.r_degree, c2.r_degree) == (1, 3), || {
            format!("g={g}: fiber degrees ({}, {})", c1.r_degree, c2.r_degree)
        })?;
        ensure(d.arithmetic_genus() == g, || format!("g={g}: p_a = {}", d.arithmetic_genus()))?;
        let failed: Vec<_> = d.checks().into_iter().filter(|c| !c.pass).map(|c| c.to_string()).collect();
        ensure(failed.is_empty(), || format!("g={g}: failed {failed:?}"))?;

        let (b1, b2) = component_bounds(g).map_err(|e| e.to_string())?;
        ensure(b1.bound == int(g), || format!("g={g}: C1 bound {}", r(&b1.bound)))?;
        let want2 = int(g + 2) + frac(4, g - 2);
        ensure(b2.bound == want2, || format!("g={g}: C2 bound {}", r(&b2.bound)))?;
        let combined = combined_bound(g).map_err(|e| e.to_string())?;
        ensure(combined.provenance == Provenance::ComponentSum, || format!("g={g}: provenance"))?;
        let want = int(2 * g + 2) + frac(4, g - 2);
        ensure(combined.bound == want, || format!("g={g}: combined {}", r(&combined.bound)))?;
        ensure(combined.bound == b1.bound + b2.bound, || format!("g={g}: combined is not the sum"))?;
    }
    Ok("g in 6..=500".into())
}

fn corollary_arithmetic() -> Outcome {
    let mut n = 0;
    for a in 0..=1 {
        for b in 0..=1 {
            for c in 1..=100 {
                let e = corollary_embedding(a, b, c).map_err(|e| e.to_string())?;
                let g = 3 * c + a + b + 3;
                ensure(e.g == g, || format!("(a,b,c)=({a},{b},{c}): g = {}", e.g))?;
                let hr = e.base_class.coeff(1, 1);
                ensure(hr == 8 * c - 2 * g + 10, || format!("(a,b,c)=({a},{b},{c}): HR coefficient {hr}"))?;
                ensure(e.base_class.coeff(2, 0) == 4, || format!("(a,b,c)=({a},{b},{c}): H^2 coefficient"))?;
                ensure(e.matches, || format!("(a,b,c)=({a},{b},{c}): class {}", e.base_class))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples"))
}

fn oracle_equivalence() -> Outcome {
    const N: u64 = 10_000;
    let s = oracle::run(N, 0x5eed);
    if let Some(c) = &s.counterexample {
        return Err(format!("case {} ({}): {}", c.index, c.kind, c.detail));
    }
    ensure(s.chow_agreements >= N && s.hn_agreements >= N && s.confluence_agreements >= N, || {
        format!("agreements chow {} hn {} confluence {}", s.chow_agreements, s.hn_agreements, s.confluence_agreements)
    })?;
    Ok(format!("{} Chow products, {} split bundles, 0 disagreements", s.chow_agreements, s.hn_agreements))
}

fn adjusted_slope_properties() -> Outcome {
    const N: usize = 2_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..N {
        let rank = rng.random_range(1..=12u64);
        let degrees = (rng.random_range(-200..=200i64), rng.random_range(-200..=200i64));
        let nodes = rng.random_range(1..=12usize);
        let codims: Vec<u64> = (0..nodes)
            .map(|_| if rng.random_bool(0.3) { 0 } else { rng.random_range(0..=rank) })
            .collect();
        let s = GluedBundleSketch::new(rank, degrees, codims.clone()).map_err(|e| e.to_string())?;
        let (adj, mu) = (adjusted_slope(&s), s.slope());
        ensure(adj <= mu, || format!("case {i}: {} > {}", r(&adj), r(&mu)))?;
        let all_zero = codims.iter().all(|&c| c == 0);
        ensure((adj == mu) == all_zero, || format!("case {i}: equality {} with codims {codims:?}", adj == mu))?;
        for j in 0..nodes {
            if codims[j] < rank {
                let mut bumped = codims.clone();
                bumped[j] += 1;
                let t = GluedBundleSketch::new(rank, degrees, bumped).map_err(|e| e.to_string())?;
                let adj2 = adjusted_slope(&t);
                ensure(adj2 < adj, || format!("case {i}: raising codim {j} gave {} >= {}", r(&adj2), r(&adj)))?;
            }
        }
    }
    Ok(format!("{N} sketches"))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tetrahn");
    let out = Command::new(bin)
        .args(["--verify", "--sweep", "6..100"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || format!("clean sweep exited {:?}", out.status.code()))?;
    let rows = stdout.lines().filter(|l| l.starts_with("g=") && l.contains(" pass ")).count();
    ensure(rows == 95, || format!("{rows} pass rows, want 95"))?;

    let out = Command::new(bin)
        .args(["--verify", "--sweep", "6..100", "--corrupt-quotient-degree", "1000"])
        .output()
        .map_err(|e| e.to_string())?;
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(1), || format!("corrupted sweep exited {:?}", out.status.code()))?;
    let named = stderr
        .lines()
        .find(|l| l.starts_with("failed:") && l.contains("hn_slope_ordering") && l.contains(" > "))
        .ok_or_else(|| format!("no failed inequality named on stderr: {stderr}"))?;
    Ok(format!("95 pass rows; corrupted run exits 1 ({})", named.trim_start_matches("failed: ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("canonical normal bundle slope", canonical_normal_slope),
        ("deg N_C/Q = 4g+12 via Chow product", ncq_degree),
        ("quotient slopes", quotient_slopes),
        ("odd genus filtration", odd_theorem),
        ("even genus filtration", even_theorem),
        ("degeneration bookkeeping", degeneration_bookkeeping),
        ("retwisted embedding class", corollary_arithmetic),
        ("oracle equivalence", oracle_equivalence),
        ("adjusted slope properties", adjusted_slope_properties),
        ("CLI contract", cli_contract),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
