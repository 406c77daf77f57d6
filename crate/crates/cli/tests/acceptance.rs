//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcube::{
    c2, character_of_decomposition, character_symmetric_power, decompose_symmetric_power,
    dim_by_convolution, dim_closed_form, dim_weight, greedy_decompose, multiplicity_sym,
    symmetric_power_dimension, Decomposition, FormulaCase, IrrepLabel, Oracle, SortedIndex, Weight,
};

type Outcome = Result<String, String>;

type Criterion = (
    &'static str,
    &'static str,
    Duration,
    Box<dyn Fn() -> Outcome>,
);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn symcube(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_symcube"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn failed: {e}"))?;
    ensure(out.status.success(), || {
        format!(
            "`symcube {}` exited {:?}",
            args.join(" "),
            out.status.code()
        )
    })?;
    Ok(String::from_utf8_lossy(&out.stdout).trim().to_string())
}

/// Example values at m = 40 through the CLI.
fn example_at_degree_40() -> Outcome {
    let expected = [
        ((18, 16, 16), 6957),
        ((17, 16, 16), 6710),
        ((18, 16, 15), 6421),
        ((17, 16, 15), 6208),
        ((18, 15, 15), 5952),
        ((17, 15, 15), 5770),
    ];
    for ((k, r, n), want) in expected {
        let w = [40 - 2 * k, 40 - 2 * r, 40 - 2 * n].map(|x: i64| x.to_string());
        let got = symcube(&["dim", "40", &w[0], &w[1], &w[2]])?;
        ensure(got == want.to_string(), || {
            format!("C^40_{{{k},{r},{n}}}: got {got}, want {want}")
        })?;
    }
    let x = symcube(&["mult", "40", "4", "8", "8"])?;
    ensure(x == "3", || format!("mult 40 4 8 8: got {x}, want 3"))?;
    Ok("six weight dimensions and x^40_(4,8,8) = 3".into())
}

fn trivial_module_pattern() -> Outcome {
    for m in 0..=40 {
        let x = multiplicity_sym(m, IrrepLabel::new(0, 0, 0)).map_err(|e| e.to_string())?;
        let want = i128::from(m % 4 == 0);
        ensure(x == want, || format!("m={m}: got {x}, want {want}"))?;
    }
    Ok("m <= 40".into())
}

fn oracle_equivalence(max_m: u32) -> Outcome {
    let oracle = Oracle::default().with_monomial_cap(max_m);
    for m in 0..=max_m {
        let fast = character_symmetric_power(m).map_err(|e| e.to_string())?;
        let slow = oracle.enumerate_character(m).map_err(|e| e.to_string())?;
        ensure(fast == slow, || format!("characters differ at m={m}"))?;
    }
    Ok(format!("m <= {max_m}"))
}

fn formula_cross_check() -> Outcome {
    let mut hits: BTreeMap<FormulaCase, usize> = BTreeMap::new();
    for m in 0..=60 {
        for idx in SortedIndex::all(m) {
            let closed = dim_closed_form(idx).map_err(|e| e.to_string())?;
            let conv =
                dim_by_convolution(m, idx.k(), idx.r(), idx.n()).map_err(|e| e.to_string())?;
            ensure(closed == conv, || {
                format!(
                    "{idx} ({}): closed {closed}, convolution {conv}",
                    idx.case()
                )
            })?;
            *hits.entry(idx.case()).or_default() += 1;
        }
    }
    let summary: Vec<String> = FormulaCase::ALL
        .iter()
        .map(|c| format!("{}:{}", c, hits.get(c).copied().unwrap_or(0)))
        .collect();
    for case in FormulaCase::ALL {
        let n = hits.get(&case).copied().unwrap_or(0);
        ensure(n >= 100, || format!("case {case} hit only {n} times"))?;
    }
    Ok(format!("m <= 60, hits {}", summary.join(" ")))
}

/// The last argument as printed, `r2 - r3`, instead of `r1 - r3`.
fn c2_printed_variant(r1: i64, r2: i64, r3: i64) -> i64 {
    r2.min(r3).min(r1 - r2).min(r2 - r3) + 1
}

fn c2_arbitration() -> Outcome {
    let oracle = Oracle::default();
    for r1 in 0..=40 {
        for r2 in 0..=r1 + 2 {
            for r3 in 0..=r1 + 2 {
                let slow = oracle
                    .c2_bruteforce(r1, r2, r3)
                    .map_err(|e| e.to_string())?;
                let fast = c2(r1, r2, r3);
                ensure(fast == slow, || {
                    format!("c2({r1},{r2},{r3}): {fast} vs brute force {slow}")
                })?;
            }
        }
    }
    let printed = c2_printed_variant(5, 2, 3);
    ensure(c2(5, 2, 3) == 3 && printed == 0, || {
        format!("c2(5,2,3) = {}, printed variant = {printed}", c2(5, 2, 3))
    })?;
    Ok("r1 <= 40; c2(5,2,3) = 3, printed variant gives 0".into())
}

fn checksum() -> Outcome {
    for m in 0..=50 {
        let total = decompose_symmetric_power(m)
            .and_then(|d| d.total_dim())
            .map_err(|e| e.to_string())?;
        let want = symmetric_power_dimension(m).map_err(|e| e.to_string())?;
        ensure(total == want, || {
            format!("m={m}: {total} vs C(m+7,7) = {want}")
        })?;
    }
    Ok("m <= 50".into())
}

fn greedy_agreement() -> Outcome {
    for m in 0..=10 {
        let greedy = character_symmetric_power(m)
            .and_then(|c| greedy_decompose(&c))
            .map_err(|e| e.to_string())?;
        let direct = decompose_symmetric_power(m).map_err(|e| e.to_string())?;
        ensure(greedy == direct, || {
            format!("decompositions differ at m={m}")
        })?;
    }
    Ok("m <= 10".into())
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for trial in 0..200 {
        let mut planted = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=6) {
            let l = IrrepLabel::new(
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
            );
            planted.insert(l, rng.gen_range(1..=3));
        }
        let d: Decomposition = planted.into_iter().collect();
        let c = character_of_decomposition(&d).map_err(|e| e.to_string())?;
        let back = greedy_decompose(&c).map_err(|e| e.to_string())?;
        ensure(back == d, || {
            format!("trial {trial}: {d:?} came back as {back:?}")
        })?;
    }
    Ok("200 synthetic decompositions".into())
}

fn symmetry_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..1000 {
        let m: u32 = rng.gen_range(0..=30);
        let mi = m as i64;
        let base = [0; 3].map(|_| mi - 2 * rng.gen_range(0..=mi));
        let reference = dim_weight(m, Weight::from_components(base)).map_err(|e| e.to_string())?;
        let [a, b, c] = base;
        for p in [
            [a, b, c],
            [a, c, b],
            [b, a, c],
            [b, c, a],
            [c, a, b],
            [c, b, a],
        ] {
            for signs in 0..8 {
                let q: Vec<i64> = p
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| if signs >> i & 1 == 1 { -l } else { l })
                    .collect();
                let w = Weight::new(q[0], q[1], q[2]);
                let d = dim_weight(m, w).map_err(|e| e.to_string())?;
                ensure(d == reference, || {
                    format!("m={m}: dim at {w} is {d}, at {base:?} is {reference}")
                })?;
            }
        }
    }
    Ok("1000 weights x 48 symmetries, m <= 30".into())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "1",
            "degree-40 example values",
            Duration::from_secs(1),
            Box::new(example_at_degree_40),
        ),
        (
            "2",
            "trivial-module multiplicity pattern",
            Duration::from_secs(1),
            Box::new(trivial_module_pattern),
        ),
        (
            "3a",
            "oracle equivalence (ci)",
            Duration::from_secs(10),
            Box::new(|| oracle_equivalence(12)),
        ),
        (
            "3b",
            "oracle equivalence (extended)",
            Duration::from_secs(300),
            Box::new(|| oracle_equivalence(20)),
        ),
        (
            "4",
            "closed form = convolution, all six cases",
            Duration::from_secs(30),
            Box::new(formula_cross_check),
        ),
        (
            "5",
            "2x2 matrix count and printed-formula regression",
            Duration::from_secs(1),
            Box::new(c2_arbitration),
        ),
        (
            "6",
            "decomposition dimension checksum",
            Duration::from_secs(30),
            Box::new(checksum),
        ),
        (
            "7",
            "greedy = inclusion-exclusion",
            Duration::from_secs(10),
            Box::new(greedy_agreement),
        ),
        (
            "8",
            "greedy round trip",
            Duration::from_secs(10),
            Box::new(round_trip),
        ),
        (
            "9",
            "permutation and sign symmetry",
            Duration::from_secs(5),
            Box::new(symmetry_suite),
        ),
    ];

    let mut failed = 0;
    for (id, title, budget, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= *budget => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:.0?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("criterion {id:>3} PASS  {title}: {detail} [{elapsed:.2?}]"),
            Err(e) => {
                failed += 1;
                println!("criterion {id:>3} FAIL  {title}: {e} [{elapsed:.2?}]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
