//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints one status line even when all of them pass.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use adjvol_core::draconian::Checker;
use adjvol_core::harness::{self, ScanConfig, Suite, VerifyConfig};
use adjvol_core::recurrence::{subdivision_step, triangle_step};
use adjvol_core::{
    BigUint, DraconianSequence, Edge, Enumerator, Family, Graph, Planner, Result, Strategy,
};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        detail: detail.into(),
    })
}

fn seqs(rows: &[&[u32]]) -> Vec<DraconianSequence> {
    let set: BTreeSet<DraconianSequence> =
        rows.iter().map(|r| DraconianSequence(r.to_vec())).collect();
    set.into_iter().collect()
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

fn star_listing() -> Result<Outcome> {
    let start = Instant::now();
    let g = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4)])?;
    let set = Enumerator::default().enumerate(&g)?;
    let want = seqs(&[
        &[0, 3, 0, 0],
        &[0, 2, 0, 1],
        &[1, 1, 1, 0],
        &[1, 1, 0, 1],
        &[1, 0, 1, 1],
        &[0, 1, 1, 1],
        &[0, 2, 1, 0],
        &[1, 2, 0, 0],
    ]);
    let want_text: String = want.iter().map(|s| format!("{s}\n")).collect();
    let ok = set.to_text() == want_text && set.count == BigUint::from(8u32);
    outcome(
        ok && within(start, Duration::from_secs(1)),
        format!(
            "count={} byte-exact={}",
            set.count,
            set.to_text() == want_text
        ),
    )
}

fn subdivision_example() -> Result<Outcome> {
    let start = Instant::now();
    let en = Enumerator::default();
    let c3 = Family::Cycle(3).build()?;
    let d3 = en.enumerate(&c3)?;
    let want_c3 = seqs(&[
        &[2, 0, 0],
        &[0, 2, 0],
        &[0, 0, 2],
        &[1, 1, 0],
        &[1, 0, 1],
        &[0, 1, 1],
    ]);
    let w = subdivision_step(&c3, Edge::new(1, 3), 1, &en, Checker::Flow)?;
    let [a, b, c] = w.image_sets();
    let want_a = seqs(&[
        &[2, 0, 0, 1],
        &[0, 2, 0, 1],
        &[0, 0, 2, 1],
        &[1, 1, 0, 1],
        &[1, 0, 1, 1],
        &[0, 1, 1, 1],
    ]);
    let want_b = seqs(&[&[1, 2, 0, 0], &[2, 1, 0, 0], &[2, 0, 1, 0], &[1, 1, 1, 0]]);
    let want_c = seqs(&[
        &[1, 0, 0, 2],
        &[1, 0, 2, 0],
        &[0, 1, 0, 2],
        &[0, 0, 1, 2],
        &[0, 1, 2, 0],
        &[0, 2, 1, 0],
    ]);
    let c4 = en.count(&Family::Cycle(4).build()?)?;
    let checks = [
        d3.sequences == want_c3,
        a == want_a,
        b == want_b,
        c == want_c,
        w.verify(&en)?.passed(),
        c4 == BigUint::from(16u32),
    ];
    outcome(
        checks.iter().all(|&x| x) && within(start, Duration::from_secs(1)),
        format!("checks={checks:?} |D(C4)|={c4}"),
    )
}

fn triangle_example() -> Result<Outcome> {
    let en = Enumerator::default();
    let c3 = Family::Cycle(3).build()?;
    let w = triangle_step(&c3, Edge::new(1, 3), 1, &en)?;
    let [a, b, c] = w.image_sets();
    let want_a = seqs(&[
        &[2, 0, 0, 1],
        &[0, 2, 0, 1],
        &[0, 0, 2, 1],
        &[1, 1, 0, 1],
        &[1, 0, 1, 1],
        &[0, 1, 1, 1],
    ]);
    let want_b = seqs(&[
        &[3, 0, 0, 0],
        &[1, 2, 0, 0],
        &[1, 0, 2, 0],
        &[2, 1, 0, 0],
        &[2, 0, 1, 0],
        &[1, 1, 1, 0],
    ]);
    let want_c = seqs(&[
        &[1, 0, 0, 2],
        &[0, 2, 1, 0],
        &[0, 0, 3, 0],
        &[0, 1, 0, 2],
        &[0, 0, 1, 2],
        &[0, 1, 2, 0],
    ]);
    let checks = [
        a == want_a,
        b == want_b,
        c == want_c,
        w.verify(&en)?.passed(),
        w.total() == 18,
    ];
    outcome(
        checks.iter().all(|&x| x),
        format!("checks={checks:?} total={}", w.total()),
    )
}

fn join_family_values() -> Result<Outcome> {
    let planner = Planner::default();
    let mut details = Vec::new();
    let mut ok = true;
    for (name, g, want) in harness::counterexample_family()? {
        // the edge used must join the two degree-3 vertices of K_1 ∨ P_3
        let auto = planner.nvol(&g, Strategy::Auto)?.value;
        let oracle = planner.nvol(&g, Strategy::Enumerate)?.value;
        ok &= auto == BigUint::from(want) && oracle == BigUint::from(want);
        details.push(format!("{name}={oracle}"));
    }
    let base = Graph::empty(1).join(&Family::Path(3).build()?);
    ok &= base.degree(1) == 3 && base.degree(3) == 3 && base.has_edge(1, 3);
    outcome(ok, details.join(" "))
}

fn suite(s: Suite, workers: usize, limit: Duration) -> Result<Outcome> {
    let start = Instant::now();
    let cfg = VerifyConfig {
        workers,
        ..VerifyConfig::defaults(s)
    };
    let r = harness::run_suite(s, &cfg)?;
    let first = r
        .failures()
        .next()
        .map(|c| format!(" first-failure={} {}", c.name, c.detail));
    outcome(
        r.passed() && within(start, limit),
        format!(
            "cases={} failures={} elapsed_ms={}{}",
            r.cases.len(),
            r.failures().count(),
            start.elapsed().as_millis(),
            first.unwrap_or_default()
        ),
    )
}

fn closed_forms() -> Result<Outcome> {
    let start = Instant::now();
    let cfg = VerifyConfig {
        workers: 4,
        ..VerifyConfig::defaults(Suite::Formulas)
    };
    let r = harness::run_suite(Suite::Formulas, &cfg)?;
    let has = |p: &str| r.cases.iter().filter(|c| c.name.starts_with(p)).count();
    let named = |n: &str| r.cases.iter().any(|c| c.name == n);
    let coverage = has("forest tree:") >= 50
        && has("cycle n=") == 8
        && named("complete-minus-matching n=7 k=3")
        && named("k2m n=4")
        && named("k2m n=9");
    outcome(
        r.passed() && coverage && within(start, Duration::from_secs(300)),
        format!(
            "cases={} failures={} coverage={coverage} elapsed_ms={}",
            r.cases.len(),
            r.failures().count(),
            start.elapsed().as_millis()
        ),
    )
}

fn recurrences() -> Result<Outcome> {
    let rec = suite(Suite::Recurrences, 4, Duration::from_secs(600))?;
    let bij = suite(Suite::Bijections, 4, Duration::from_secs(600))?;
    outcome(
        rec.ok && bij.ok,
        format!("recurrences: {} bijections: {}", rec.detail, bij.detail),
    )
}

fn wheels() -> Result<Outcome> {
    let start = Instant::now();
    let cfg = ScanConfig {
        n_max: 10,
        seed: 1,
        samples: 0,
        workers: 8,
    };
    let records = harness::scan_wheels(&cfg)?;
    let ns: BTreeSet<usize> = records.iter().map(|r| r.n - 1).collect();
    let ok = records.iter().all(|r| r.agree)
        && ns == (3..=10).collect()
        && within(start, Duration::from_secs(600));
    outcome(
        ok,
        format!(
            "wheels={} elapsed_ms={}",
            records.len(),
            start.elapsed().as_millis()
        ),
    )
}

fn outerplanar() -> Result<Outcome> {
    let cfg = ScanConfig {
        n_max: 10,
        seed: 1,
        samples: 300,
        workers: 4,
    };
    let records = harness::scan_outerplanar(&cfg)?;
    let theorem: Vec<_> = records.iter().filter(|r| !r.conjectural).collect();
    let conj: Vec<_> = records.iter().filter(|r| r.conjectural).collect();
    let theorem_agree = theorem.iter().filter(|r| r.agree).count();
    let conj_agree = conj.iter().filter(|r| r.agree).count();
    let ok =
        theorem.len() >= 100 && theorem_agree == theorem.len() && records.iter().all(|r| r.n <= 10);
    outcome(
        ok,
        format!(
            "theorem={}/{} agree, conjecture={}/{} agree (reported only)",
            theorem_agree,
            theorem.len(),
            conj_agree,
            conj.len()
        ),
    )
}

fn determinism() -> Result<Outcome> {
    let graphs = [
        Family::Wheel(7).build()?,
        Family::CompleteMinusMatching(7, 2).build()?,
        Family::RandomOuterplanar { n: 10, seed: 5 }.build()?,
        Family::Cycle(9).build()?,
    ];
    let mut ok = true;
    for g in &graphs {
        let texts: Vec<String> = [1, 2, 8]
            .iter()
            .map(|&w| {
                Enumerator::with_workers(w)
                    .enumerate(g)
                    .map(|s| s.to_text())
            })
            .collect::<Result<_>>()?;
        ok &= texts.windows(2).all(|p| p[0] == p[1]);
    }
    let scan = |w: usize| -> Result<String> {
        let cfg = ScanConfig {
            n_max: 9,
            seed: 11,
            samples: 60,
            workers: w,
        };
        let mut lines: Vec<String> = harness::scan_outerplanar(&cfg)?
            .iter()
            .map(|r| r.to_line())
            .collect();
        lines.extend(
            harness::scan_wheels(&ScanConfig { n_max: 7, ..cfg })?
                .iter()
                .map(|r| r.to_line()),
        );
        Ok(lines.join("\n"))
    };
    let scans = [scan(1)?, scan(2)?, scan(8)?];
    let scans_equal = scans.windows(2).all(|p| p[0] == p[1]);
    outcome(
        ok && scans_equal,
        format!("listings-identical={ok} scans-identical={scans_equal}"),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("star listing", star_listing),
        ("subdivision example on C3", subdivision_example),
        ("triangle example on C3", triangle_example),
        ("K1 join P3 family values", join_family_values),
        ("closed forms against oracle", closed_forms),
        ("recurrence identities and witnesses", recurrences),
        ("checker equivalence", || {
            suite(Suite::Checkers, 4, Duration::from_secs(600))
        }),
        ("wheel values to n=10", wheels),
        ("outerplanar formula", outerplanar),
        ("determinism across workers", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match run() {
            Ok(o) if o.ok => ("pass", o.detail),
            Ok(o) => ("FAIL", o.detail),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if status != "pass" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} {name} [{detail}] ({} ms)",
            k + 1,
            start.elapsed().as_millis()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
