//! Report assembly for the `kummer-g2` command line: the staged
//! `verify-paper` pipeline, its manifest, and JSON/CSV emission.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use kummer_g2::census::{self, CensusMode, CensusReport};
use kummer_g2::checks::{all_passed, PropertyCheck};
use kummer_g2::index::{self, TraceConvention};
use kummer_g2::orbifold::{gamma_group, relation_table, singular_set};
use kummer_g2::rational::format_rational;
use kummer_g2::symmetry::{self, OrbitReport};
use kummer_g2::{forms, quaternion};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXPECTED_SINGULAR: u64 = 12;
pub const EXPECTED_IRREDUCIBLE_RIGID: u64 = 1_024_128;
pub const EXPECTED_NONFLAT: u64 = 1_008_126;
pub const EXPECTED_STABILIZER: u64 = 1344;
pub const EXPECTED_AUT: u64 = 1024;
pub const EXPECTED_BOUND: u64 = 246;
/// |K|, the order of the diagonal part of the automorphism group.
pub const K_ORDER: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Flagged,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub status: ClaimStatus,
}

impl Claim {
    fn new(id: &str, claim: &str, expected: impl ToString, observed: impl ToString, status: ClaimStatus) -> Self {
        Claim {
            id: id.into(),
            claim: claim.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            status,
        }
    }

    fn check(id: &str, claim: &str, expected: impl ToString, observed: impl ToString) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let status = if e == o { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Claim::new(id, claim, e, o, status)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeSelection {
    Free,
    Constrained,
    Both,
}

impl ModeSelection {
    fn runs_free(self) -> bool {
        self != ModeSelection::Constrained
    }

    fn runs_constrained(self) -> bool {
        self != ModeSelection::Free
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: ModeSelection,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: ModeSelection::Both,
            samples: 1000,
            seed: 7,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub version: String,
    pub command: Vec<String>,
    pub mode: ModeSelection,
    pub samples: usize,
    pub seed: u64,
    pub claims: Vec<Claim>,
    /// Stages that errored or panicked; stages depending on them are skipped.
    pub failed_stages: Vec<String>,
    /// Seconds per stage. Excluded from `stable_sha256`.
    pub timings: BTreeMap<String, f64>,
    /// SHA-256 of the report with `manifest.timings` and this field removed.
    pub stable_sha256: String,
}

impl RunManifest {
    /// Every claim that is not flagged passed.
    pub fn success(&self) -> bool {
        self.failed_stages.is_empty() && self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// Result of [`verify_paper`].
pub struct PaperRun {
    pub manifest: RunManifest,
    pub report: Value,
    pub orbits: Option<OrbitReport>,
}

impl PaperRun {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.report)? + "\n")
    }
}

/// Count fields as decimal strings.
pub fn census_json(report: &CensusReport) -> Value {
    let c = &report.counts;
    json!({
        "mode": report.mode,
        "total": c.total.to_string(),
        "irreducible": c.irreducible.to_string(),
        "rigid": c.rigid.to_string(),
        "irreducible_and_rigid": c.irreducible_and_rigid.to_string(),
        "nonflat_irreducible_rigid": c.nonflat_irreducible_rigid.to_string(),
        "tau_criterion_mismatches": c.criterion_mismatches.to_string(),
        "constraints": report
            .constraints
            .iter()
            .map(|set| set.iter().map(|g| g.name()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn orbit_json(report: &OrbitReport) -> Value {
    json!({
        "subset_size": report.subset_size.to_string(),
        "group_order": report.group_order.to_string(),
        "orbit_count": report.orbit_count.to_string(),
        "pigeonhole_bound": report.pigeonhole_bound.to_string(),
        "pigeonhole_bound_k_only": report.pigeonhole_bound_k_only.to_string(),
        "largest_orbit": report.largest_orbit.to_string(),
    })
}

/// One row per orbit with the ten generator images as letters, sorted.
pub fn write_orbit_csv<W: Write>(report: &OrbitReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(census::GENERATOR_NAMES)?;
    let mut rows: Vec<String> = report.orbits.iter().map(|o| o.representative.letters()).collect();
    rows.sort();
    for r in rows {
        let cells: Vec<String> = r.chars().map(String::from).collect();
        w.write_record(&cells)?;
    }
    w.flush()?;
    Ok(())
}

fn checks_json(checks: &[PropertyCheck]) -> Value {
    json!(checks)
}

struct Stages {
    timings: BTreeMap<String, f64>,
    failed: Vec<String>,
}

impl Stages {
    /// Runs a stage, recording its time; errors and panics mark it failed.
    fn run<T>(&mut self, name: &str, f: impl FnOnce() -> anyhow::Result<T>) -> Option<T> {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f));
        self.timings.insert(name.into(), start.elapsed().as_secs_f64());
        match out {
            Ok(Ok(v)) => Some(v),
            Ok(Err(e)) => {
                log::error!("stage {name} failed: {e:#}");
                self.failed.push(name.into());
                None
            }
            Err(_) => {
                log::error!("stage {name} panicked");
                self.failed.push(name.into());
                None
            }
        }
    }
}

fn suite_claim(id: &str, claim: &str, checks: &[PropertyCheck]) -> Claim {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let observed = if failed.is_empty() {
        format!("{} of {} passed", checks.len(), checks.len())
    } else {
        format!("failed: {}", failed.join(", "))
    };
    let status = if all_passed(checks) { ClaimStatus::Pass } else { ClaimStatus::Fail };
    Claim::new(id, claim, "all checks pass", observed, status)
}

/// Runs every finite check in order and assembles the report.
pub fn verify_paper(opts: &VerifyOptions, command: Vec<String>) -> Result<PaperRun> {
    let mut stages = Stages {
        timings: BTreeMap::new(),
        failed: Vec::new(),
    };
    let mut claims = Vec::new();

    let g2 = stages.run("g2", || {
        let checks = forms::property_suite(opts.samples, opts.seed);
        let dims = forms::component_dimensions();
        Ok((checks, dims))
    });
    let hk = stages.run("eh", || Ok(quaternion::verify_suite(opts.samples, opts.seed)));
    let mut g2_json = json!(null);
    if let Some((checks, dims)) = &g2 {
        claims.push(suite_claim("g2.algebra", "exterior algebra identities of the G2 structure", checks));
        g2_json = json!({
            "checks": checks_json(checks),
            "dimensions": {
                "two": [dims.two.0, dims.two.1],
                "three": [dims.three.0, dims.three.1, dims.three.2],
            },
        });
    }
    if let Some(checks) = &hk {
        claims.push(suite_claim("eh.quotient", "Eguchi-Hanson hyperkähler quotient identities", checks));
        if let Value::Object(m) = &mut g2_json {
            m.insert("hyperkahler".into(), checks_json(checks));
        } else {
            g2_json = json!({ "hyperkahler": checks_json(checks) });
        }
    }

    let group = stages.run("group", || {
        let gamma = gamma_group();
        let set = singular_set(&gamma)?;
        let relations = relation_table()?;
        Ok((set, relations))
    });
    let group_json = match &group {
        Some((set, relations)) => {
            claims.push(Claim::check(
                "group.singular_set",
                "singular set of T7/Γ has 12 components, each a T3",
                EXPECTED_SINGULAR,
                set.count(),
            ));
            let all_t3 = set.components.iter().all(|t| t.dimension() == 3);
            if !all_t3 {
                claims.push(Claim::new("group.singular_dims", "singular components are 3-tori", "3", "mixed", ClaimStatus::Fail));
            }
            let lattice = relations.translation_relations().count();
            claims.push(Claim::check(
                "group.relations",
                "squares and commutators of α, β, γ are lattice translations",
                9,
                lattice,
            ));
            json!({
                "singular_components": set.count().to_string(),
                "components": set.components.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "relations": relations,
            })
        }
        None => json!(null),
    };

    let free = if opts.mode.runs_free() {
        stages.run("census_free", || Ok(census::run_census(CensusMode::Free, None)?))
    } else {
        None
    };
    let constrained = match (&group, opts.mode.runs_constrained()) {
        (Some((_, relations)), true) => stages.run("census_constrained", || {
            Ok(census::run_census(CensusMode::Constrained, Some(relations))?)
        }),
        _ => None,
    };

    // census claims are judged on the free census when it ran, otherwise on the
    // constrained one, where a mismatch is a recorded discrepancy
    let judged = free.as_ref().map(|r| (r, false)).or(constrained.as_ref().map(|r| (r, true)));
    if let Some((r, from_constrained)) = judged {
        let mut push = |id: &str, claim: &str, expected: u64, observed: u64| {
            let mut c = Claim::check(id, claim, expected, observed);
            if from_constrained && c.status == ClaimStatus::Fail {
                c.status = ClaimStatus::Flagged;
            }
            claims.push(c);
        };
        push(
            "census.irreducible_rigid",
            "irreducible and infinitesimally rigid assignments",
            EXPECTED_IRREDUCIBLE_RIGID,
            r.irreducible_and_rigid(),
        );
        push(
            "census.nonflat",
            "of which non-flat on the resolution",
            EXPECTED_NONFLAT,
            r.nonflat_irreducible_rigid(),
        );
        push(
            "census.tau_criterion",
            "mismatches against the two-distinct-nontrivial-τ criterion",
            0,
            r.counts.criterion_mismatches,
        );
    }
    if let Some(c) = &constrained {
        let differs = free
            .as_ref()
            .is_none_or(|f| f.irreducible_and_rigid() != c.irreducible_and_rigid() || f.nonflat_irreducible_rigid() != c.nonflat_irreducible_rigid());
        claims.push(Claim::new(
            "census.constrained",
            "census restricted to assignments respecting the deck relations",
            "recorded",
            format!("{} / {}", c.irreducible_and_rigid(), c.nonflat_irreducible_rigid()),
            if differs { ClaimStatus::Flagged } else { ClaimStatus::Pass },
        ));
    }

    let sym = stages.run("symmetry", || {
        let h = symmetry::stabilizer_of_phi();
        let closed = symmetry::check_stabilizer(&h);
        let aut = symmetry::aut_orbifold(&h)?;
        let subset = census::nonflat_irreducible_rigid(CensusMode::Free, None)?;
        let orbits = symmetry::orbit_count(&subset, &symmetry::aut_generators(), aut.normalizer_count as u64, K_ORDER)?;
        Ok((h.len(), closed, aut, orbits))
    });
    let symmetry_json = match &sym {
        Some((h, closed, aut, orbits)) => {
            claims.push(Claim::check("symmetry.stabilizer", "lattice isometries preserving φ0", EXPECTED_STABILIZER, h));
            claims.push(Claim::check("symmetry.stabilizer_group", "stabilizer closed and preserves ψ", true, closed));
            claims.push(Claim::check(
                "symmetry.aut",
                "orbifold automorphisms equal K ⋉ {0,1/2}^7",
                format!("{EXPECTED_AUT} true"),
                format!("{} {}", aut.normalizer_count, aut.matches_k_generated),
            ));
            claims.push(Claim::check(
                "symmetry.orbit_bound",
                "pigeonhole bound on pairwise inequivalent non-flat instantons",
                EXPECTED_BOUND,
                orbits.pigeonhole_bound,
            ));
            claims.push(Claim::new(
                "symmetry.orbit_count",
                "exact orbit count is at least the bound",
                format!(">= {EXPECTED_BOUND}"),
                orbits.orbit_count,
                if orbits.orbit_count >= EXPECTED_BOUND { ClaimStatus::Pass } else { ClaimStatus::Fail },
            ));
            json!({
                "stabilizer_order": h.to_string(),
                "aut": {
                    "candidates": aut.candidates.to_string(),
                    "normalizer_count": aut.normalizer_count.to_string(),
                    "literal_condition_count": aut.literal_count.to_string(),
                    "condition_disagreements": aut.condition_disagreements.to_string(),
                    "matches_k_generated": aut.matches_k_generated,
                    "k_generators_normalize": aut.k_generators_normalize,
                },
                "orbits": orbit_json(orbits),
            })
        }
        None => json!(null),
    };

    let idx = stages.run("index", || {
        let run = |input: index::IndexInput| -> anyhow::Result<(String, String)> {
            let f = index::l2_index(&input, TraceConvention::Fundamental)?;
            let a = index::l2_index(&input, TraceConvention::Adjoint)?;
            Ok((format_rational(&f.value), format_rational(&a.value)))
        };
        Ok((run(index::gocho_example()?)?, run(index::trivial_so3_example()?)?))
    });
    let index_json = match &idx {
        Some((gocho, trivial)) => {
            claims.push(Claim::check("index.gocho", "index of the U(1) instanton on Eguchi-Hanson space", 0, &gocho.0));
            claims.push(Claim::check("index.trivial", "index of the trivial flat SO(3) connection", 0, &trivial.0));
            json!({
                "gocho": { "fundamental": gocho.0, "adjoint": gocho.1 },
                "trivial_so3": { "fundamental": trivial.0, "adjoint": trivial.1 },
            })
        }
        None => json!(null),
    };

    let mut manifest = RunManifest {
        version: VERSION.into(),
        command,
        mode: opts.mode,
        samples: opts.samples,
        seed: opts.seed,
        claims,
        failed_stages: stages.failed,
        timings: BTreeMap::new(),
        stable_sha256: String::new(),
    };
    let mut report = json!({
        "manifest": manifest,
        "g2": g2_json,
        "group": group_json,
        "census_free": free.as_ref().map(census_json),
        "census_constrained": constrained.as_ref().map(census_json),
        "symmetry": symmetry_json,
        "index": index_json,
    });
    let digest = stable_digest(&report)?;
    manifest.timings = stages.timings;
    manifest.stable_sha256 = digest;
    report["manifest"] = serde_json::to_value(&manifest)?;

    Ok(PaperRun {
        manifest,
        report,
        orbits: sym.map(|s| s.3),
    })
}

/// SHA-256 of the compact JSON with the timing and digest fields removed.
pub fn stable_digest(report: &Value) -> Result<String> {
    let mut v = report.clone();
    if let Some(m) = v.get_mut("manifest").and_then(Value::as_object_mut) {
        m.remove("timings");
        m.remove("stable_sha256");
    }
    let bytes = serde_json::to_vec(&v).context("serializing report")?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}
