//! Acceptance criteria 1-9, one PASS/FAIL line each. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use kummer_g2::census::{self, CensusMode};
use kummer_g2::checks::{all_passed, PropertyCheck};
use kummer_g2::forms;
use kummer_g2::index::{self, TraceConvention};
use kummer_g2::orbifold::{gamma_group, relation_table, singular_set};
use kummer_g2::quaternion;
use kummer_g2::symmetry;

struct Outcome {
    passed: bool,
    detail: String,
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.2}s]", out.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        if elapsed > limit {
            out.passed = false;
            out.detail = format!("{} exceeds {}s", out.detail, limit.as_secs());
        }
    }
    out
}

fn failed_names(checks: &[PropertyCheck]) -> String {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        format!("{} checks", checks.len())
    } else {
        format!("failed: {}", failed.join("; "))
    }
}

fn singular() -> Outcome {
    match singular_set(&gamma_group()) {
        Ok(set) => Outcome {
            passed: set.count() == 12 && set.components.iter().all(|t| t.dimension() == 3),
            detail: format!("{} components", set.count()),
        },
        Err(e) => Outcome { passed: false, detail: e.to_string() },
    }
}

fn census_free() -> (Outcome, Outcome) {
    let start = Instant::now();
    // one thread, as the criterion demands
    let report = census::run_census_serial(CensusMode::Free, None);
    let elapsed = start.elapsed();
    match report {
        Ok(r) => {
            let c = r.counts;
            let within = elapsed < Duration::from_secs(60);
            let counts = Outcome {
                passed: within && c.total == 1 << 20 && c.irreducible_and_rigid == 1_024_128 && c.nonflat_irreducible_rigid == 1_008_126,
                detail: format!(
                    "{} irreducible and rigid, {} non-flat of {} [{:.2}s]",
                    c.irreducible_and_rigid,
                    c.nonflat_irreducible_rigid,
                    c.total,
                    elapsed.as_secs_f64()
                ),
            };
            let criterion = Outcome {
                passed: c.total == 1 << 20 && c.criterion_mismatches == 0,
                detail: format!("{} mismatches over {}", c.criterion_mismatches, c.total),
            };
            (counts, criterion)
        }
        Err(e) => {
            let o = || Outcome { passed: false, detail: e.to_string() };
            (o(), o())
        }
    }
}

fn stabilizer() -> Outcome {
    let h = symmetry::stabilizer_of_phi();
    Outcome {
        passed: h.len() == 1344,
        detail: format!("|H| = {} of 645120 signed permutations", h.len()),
    }
}

fn orbits() -> Outcome {
    let run = || -> kummer_g2::Result<symmetry::OrbitReport> {
        let aut = symmetry::aut_orbifold(&symmetry::stabilizer_of_phi())?;
        let subset = census::nonflat_irreducible_rigid(CensusMode::Free, None)?;
        symmetry::orbit_count(&subset, &symmetry::aut_generators(), aut.normalizer_count as u64, 8)
    };
    match run() {
        Ok(r) => Outcome {
            passed: r.pigeonhole_bound == 246 && r.orbit_count >= 246,
            detail: format!(
                "bound {} (|Aut| = {}), exact orbit count {}",
                r.pigeonhole_bound, r.group_order, r.orbit_count
            ),
        },
        Err(e) => Outcome { passed: false, detail: e.to_string() },
    }
}

fn index_examples() -> Outcome {
    let eval = |input: kummer_g2::Result<index::IndexInput>| {
        input.and_then(|i| index::l2_index(&i, TraceConvention::Fundamental)).map(|r| r.value)
    };
    match (eval(index::gocho_example()), eval(index::trivial_so3_example())) {
        (Ok(g), Ok(t)) => Outcome {
            passed: g == kummer_g2::rational::q(0) && t == kummer_g2::rational::q(0),
            detail: format!("Gocho {g}, trivial {t}"),
        },
        (Err(e), _) | (_, Err(e)) => Outcome { passed: false, detail: e.to_string() },
    }
}

fn g2_suite() -> Outcome {
    let checks = forms::property_suite(1000, 7);
    let d = forms::component_dimensions();
    let dims = d.two == (7, 14) && d.three == (1, 7, 27);
    Outcome {
        passed: all_passed(&checks) && dims,
        detail: format!("{}, Λ² = {:?}, Λ³ = {:?}", failed_names(&checks), d.two, d.three),
    }
}

fn hk_suite() -> Outcome {
    let checks = quaternion::verify_suite(100, 7);
    Outcome {
        passed: all_passed(&checks),
        detail: failed_names(&checks),
    }
}

fn relations() -> Outcome {
    let run = || -> kummer_g2::Result<String> {
        let table = relation_table()?;
        let words: Vec<String> = table.translation_relations().map(|r| r.word.clone()).collect();
        let constrained = census::run_census(CensusMode::Constrained, Some(&table))?;
        let free = census::run_census(CensusMode::Free, None)?;
        let differs = constrained.irreducible_and_rigid() != free.irreducible_and_rigid();
        Ok(format!(
            "{} squares/commutators are lattice translations; constrained: {} of {} irreducible and rigid, {} non-flat{}",
            words.len(),
            constrained.irreducible_and_rigid(),
            constrained.total(),
            constrained.nonflat_irreducible_rigid(),
            if differs { " (differs from free mode)" } else { "" }
        ))
    };
    match run() {
        Ok(detail) => Outcome { passed: true, detail },
        Err(e) => Outcome { passed: false, detail: e.to_string() },
    }
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let (c2, c3) = census_free();
    let results = [
        (1, "singular set of T7/Γ is 12 copies of T3", timed(secs(1), singular)),
        (2, "free census counts 1024128 / 1008126", c2),
        (3, "irreducible ∧ rigid ⇔ τ-criterion", c3),
        (4, "lattice stabilizer of φ0 has 1344 elements", timed(secs(30), stabilizer)),
        (5, "orbit bound 246 and exact orbit count ≥ 246", timed(None, orbits)),
        (6, "index of Gocho and trivial examples is 0", timed(None, index_examples)),
        (7, "G2 algebra property suite", timed(secs(5), g2_suite)),
        (8, "hyperkähler quotient suite", timed(secs(5), hk_suite)),
        (9, "relation audit and constrained census", timed(None, relations)),
    ];
    let mut all = true;
    for (n, name, out) in &results {
        all &= out.passed;
        println!("criterion {n}: {} - {name}: {}", if out.passed { "PASS" } else { "FAIL" }, out.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
