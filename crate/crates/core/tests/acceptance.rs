//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.


use std::time::{Duration, Instant};

use hypercut::analysis::{check_pair_neighbor_counts, g_extra_connectivity, path_neighbor_bound};
use hypercut::bitset::SmallCube;
use hypercut::formulas::{
    kappa_cycle, kappa_g_extra_formula, kappa_path, kappa_power_of_two_cycle,
    verify_cycle_gap_inequality,
};
use hypercut::oracle::{enumerate_copies, Oracle};
use hypercut::sampling;
use hypercut::{
    build_cycle_cut, build_path_cut, validate_cut, Cube, CutMode, Element, OracleValue,
    SearchBudget, StructureKind, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [CutMode; 2] = [CutMode::Structure, CutMode::Substructure];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn oracle_exact(n: u32, kind: StructureKind, mode: CutMode, budget: &SearchBudget) -> Result<usize, String> {
    let oracle = Oracle::new(n, kind, mode, budget).map_err(|e| e.to_string())?;
    let result = oracle.min_cut(budget.max_family_size);
    match (result.value, &result.witness) {
        (OracleValue::Exact(v), Some(w)) => match validate_cut(w) {
            Verdict::ValidCut => Ok(v),
            other => Err(format!("witness for Q_{n} {kind} {mode} rejected: {other:?}")),
        },
        (other, _) => Err(format!("Q_{n} {kind} {mode}: oracle gave {other:?}")),
    }
}

fn path_formula(n: u32, k: u32) -> usize {
    kappa_path(n, u64::from(k), CutMode::Structure).unwrap().exact_value().unwrap() as usize
}

fn path_oracle_sweep(n: u32, ks: std::ops::RangeInclusive<u32>) -> Outcome {
    let budget = SearchBudget::default();
    let mut seen = Vec::new();
    for k in ks {
        for mode in MODES {
            let got = oracle_exact(n, StructureKind::Path(k), mode, &budget)?;
            let want = path_formula(n, k);
            if got != want {
                return Err(format!("Q_{n} P_{k} {mode}: oracle {got}, formula {want}"));
            }
            if mode == CutMode::Structure {
                seen.push(got.to_string());
            }
        }
    }
    Ok(format!("values {}", seen.join(",")))
}

fn c1() -> Outcome {
    path_oracle_sweep(3, 3..=4)
}

fn c2() -> Outcome {
    path_oracle_sweep(4, 3..=8)
}

fn c3() -> Outcome {
    let mut checked = 0;
    for n in 3..=11u32 {
        for k in 3..=(1u32 << (n - 1)).min(256) {
            let f = build_path_cut(n, k).map_err(|e| e.to_string())?;
            if validate_cut(&f) != Verdict::ValidCut || f.len() != path_formula(n, k) {
                return Err(format!("path cut n={n} k={k} has {} elements, verdict {:?}", f.len(), validate_cut(&f)));
            }
            checked += 1;
        }
    }
    for n in 5..=11u32 {
        for k in (6..=(1u32 << (n - 2)).min(256)).step_by(2) {
            let f = build_cycle_cut(n, k).map_err(|e| e.to_string())?;
            let want = (2 * n).div_ceil(k) as usize;
            if validate_cut(&f) != Verdict::ValidCut || f.len() != want {
                return Err(format!("cycle cut n={n} k={k} has {} elements, verdict {:?}", f.len(), validate_cut(&f)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} families valid"))
}

fn c4() -> Outcome {
    let mut out = Vec::new();
    for (n, k, want) in [(4u32, 4u32, 2usize), (5, 4, 3), (5, 8, 2)] {
        let budget = SearchBudget::default().with_max_family_size(3);
        let got = oracle_exact(n, StructureKind::Cycle(k), CutMode::Structure, &budget)?;
        let formula = kappa_cycle(n, u64::from(k), CutMode::Structure)
            .ok()
            .and_then(|v| v.exact_value());
        let table = kappa_power_of_two_cycle(n, k.trailing_zeros()).map_err(|e| e.to_string())?;
        if got != want || table.exact_value() != Some(want as u64) {
            return Err(format!("Q_{n} C_{k}: oracle {got}, table {want}, formula {formula:?}"));
        }
        out.push(format!("Q_{n};C_{k}={got}"));
    }
    Ok(out.join(" "))
}

fn c5() -> Outcome {
    let mut counts = Vec::new();
    for (n, k) in [(3u32, 4u32), (4, 6)] {
        let small = SmallCube::new(n).unwrap();
        let copies = enumerate_copies(n, StructureKind::Path(k), CutMode::Structure).map_err(|e| e.to_string())?;
        if copies.is_empty() {
            return Err(format!("no P_{k} in Q_{n}"));
        }
        for el in &copies {
            if small.is_cut(small.mask_of(el.vertices())) {
                return Err(format!("a single P_{k} disconnects Q_{n}: {:?}", el.vertices()));
            }
        }
        counts.push(format!("{} copies of P_{k} in Q_{n}", copies.len()));
    }
    Ok(counts.join(", "))
}

fn c6() -> Outcome {
    let mut values = Vec::new();
    for g in 0..=4 {
        let brute = g_extra_connectivity(4, g).map_err(|e| e.to_string())?;
        let formula = kappa_g_extra_formula(4, g).map_err(|e| e.to_string())?;
        if brute != Some(formula as u32) {
            return Err(format!("g={g}: brute force {brute:?}, formula {formula}"));
        }
        values.push(formula.to_string());
    }
    Ok(format!("values {}", values.join(",")))
}

fn c7() -> Outcome {
    let bad = verify_cycle_gap_inequality(64);
    if bad.is_empty() {
        Ok("0 violations up to n = 64".into())
    } else {
        Err(format!("violations: {bad:?}"))
    }
}

fn c8() -> Outcome {
    const TRIALS: usize = 10_000;
    for n in 2..=10 {
        let cube = Cube::new(n).unwrap();
        for u in cube.vertices() {
            for i in 0..n {
                for j in i + 1..n {
                    let v = u.flip(i).flip(j);
                    let common = cube.common_neighbors(u, v).unwrap();
                    if common.len() != 2 {
                        return Err(format!("Q_{n}: {} and {} share {} neighbours", u.render(n), v.render(n), common.len()));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let n = 6;
    let mut hits = 0usize;
    for k in 3..=9u32 {
        for _ in 0..TRIALS {
            let path = sampling::random_path(&mut rng, n, k as usize);
            let pair = sampling::random_pair_near(&mut rng, n, &path.verts).expect("Q_6 has room");
            let count = check_pair_neighbor_counts(n, pair, &Element::Path(path)).map_err(|e| e.to_string())?;
            if count as u32 > path_neighbor_bound(k) {
                return Err(format!("P_{k}: count {count} exceeds {}", path_neighbor_bound(k)));
            }
            hits += usize::from(count as u32 == path_neighbor_bound(k));
        }
    }
    for k in [4usize, 6, 8] {
        for _ in 0..TRIALS {
            let cycle = sampling::random_cycle(&mut rng, n, k);
            let pair = sampling::random_pair_near(&mut rng, n, &cycle.verts).expect("Q_6 has room");
            let count = check_pair_neighbor_counts(n, pair, &Element::Cycle(cycle)).map_err(|e| e.to_string())?;
            if count + 1 > k {
                return Err(format!("C_{k}: count {count} exceeds {}", k - 1));
            }
        }
    }
    Ok(format!("0 violations, path bound attained {hits} times"))
}

fn c9() -> Outcome {
    let mut rows = 0;
    for n in 4..=20u32 {
        for m in 2..=n - 2 {
            let v = kappa_power_of_two_cycle(n, m).map_err(|e| e.to_string())?;
            let value = v.exact_value().ok_or("power-of-two value not exact")?;
            if let Some(general) = kappa_cycle(n, 1 << m, CutMode::Structure).ok().and_then(|g| g.exact_value()) {
                if general != value {
                    return Err(format!("n={n} m={m}: {value} vs {general}"));
                }
            }
            if n >= 6 && m >= 3 && value >= u64::from(n - m) {
                return Err(format!("n={n} m={m}: {value} is not below {}", n - m));
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} (n, m) pairs consistent"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 path oracle n=3", c1, Duration::from_secs(1)),
        ("2 path oracle n=4", c2, Duration::from_secs(300)),
        ("3 construction sweep", c3, Duration::from_secs(60)),
        ("4 power-of-two cycle table", c4, Duration::from_secs(600)),
        ("5 single-path non-cuts", c5, Duration::from_secs(10)),
        ("6 g-extra at n=4", c6, Duration::from_secs(60)),
        ("7 cycle gap inequality", c7, Duration::from_secs(1)),
        ("8 neighbour-count properties", c8, Duration::from_secs(600)),
        ("9 power-of-two consistency", c9, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({took:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
