//! Verification suites and conjecture scans, shared by the command line
//! and the test targets. Every random choice flows from one seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::draconian::{
    check_flow, check_subset_scoped, Checker, DraconianSequence, Enumerator, SubsetScope,
};
use crate::error::{Error, Result};
use crate::graph::{random_outerplanar, random_tree, Blocks, Edge, Family, Graph};
use crate::outerplanar::nvol_outerplanar;
use crate::recurrence::{self, subdivision_step, triangle_step, Planner, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Measured and reported, never asserted.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Case {
    fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            status: Status::Info,
            detail: detail.into(),
        }
    }

    fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, got: T, want: T) -> Self {
        let detail = format!("got={got} want={want}");
        Case::check(name, got == want, detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Recurrences,
    Checkers,
    Formulas,
    Bijections,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Recurrences,
        Suite::Checkers,
        Suite::Formulas,
        Suite::Bijections,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Recurrences => "recurrences",
            Suite::Checkers => "checkers",
            Suite::Formulas => "formulas",
            Suite::Bijections => "bijections",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    /// Cases whose name starts with `prefix`.
    pub fn group(&self, prefix: &str) -> Vec<&Case> {
        self.cases
            .iter()
            .filter(|c| c.name.starts_with(prefix))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
    pub workers: usize,
}

impl VerifyConfig {
    pub fn defaults(suite: Suite) -> Self {
        let (n_max, samples) = match suite {
            Suite::Recurrences => (8, 200),
            Suite::Checkers => (6, 10_000),
            Suite::Formulas => (9, 60),
            Suite::Bijections => (7, 50),
        };
        VerifyConfig {
            n_max,
            seed: 1,
            samples,
            workers: 1,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Recurrences => verify_recurrences(cfg)?,
        Suite::Checkers => verify_checkers(cfg)?,
        Suite::Formulas => verify_formulas(cfg)?,
        Suite::Bijections => verify_bijections(cfg)?,
    };
    Ok(SuiteReport { suite, cases })
}

fn enumerator(cfg: &VerifyConfig) -> Enumerator {
    Enumerator::with_workers(cfg.workers)
}

// ---------------------------------------------------------------- generators

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("valid pairs")
}

/// A 2-connected graph with a degree-2 vertex `u` and an edge `e ∋ u`: a
/// Hamiltonian cycle in random order plus random chords avoiding `u`.
pub fn random_two_connected_with_degree_two(n: usize, rng: &mut impl Rng) -> (Graph, Edge, usize) {
    assert!(n >= 3);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    let u = order[rng.gen_range(0..n)];
    let p = rng.gen_range(0.1..0.7);
    for a in 1..=n {
        for b in a + 1..=n {
            if a != u && b != u && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edges(n, edges).expect("valid pairs");
    let v = *g.neighbors(u).choose(rng).expect("degree two");
    (g, Edge::new(u, v), u)
}

/// A connected graph with a degree-2 vertex `u` and an edge `e ∋ u`.
pub fn random_connected_with_degree_two(n: usize, rng: &mut impl Rng) -> (Graph, Edge, usize) {
    assert!(n >= 3);
    let base = random_tree(n - 1, rng.gen());
    let p = rng.gen_range(0.0..0.4);
    let mut edges: Vec<(usize, usize)> = base.edges().map(|e| (e.u(), e.v())).collect();
    for a in 1..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let picks: Vec<usize> = (1..n)
        .collect::<Vec<_>>()
        .choose_multiple(rng, 2)
        .copied()
        .collect();
    edges.push((picks[0], n));
    edges.push((picks[1], n));
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let g = Graph::from_edges(n, edges)
        .expect("valid pairs")
        .permute(&perm)
        .expect("permutation");
    let u = perm[n - 1];
    let v = *g.neighbors(u).choose(rng).expect("degree two");
    (g, Edge::new(u, v), u)
}

/// A weak composition of `n − 1` into `n` parts. Half the time each part
/// is capped by the vertex degree, which makes draconian outcomes common.
pub fn random_composition(g: &Graph, rng: &mut impl Rng) -> Vec<u32> {
    let n = g.n();
    let mut a = vec![0u32; n];
    let caps: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let capped = rng.gen_bool(0.5) && caps.iter().map(|&c| c as usize).sum::<usize>() + 1 >= n;
    for _ in 0..n.saturating_sub(1) {
        let open: Vec<usize> = (0..n).filter(|&i| !capped || a[i] < caps[i]).collect();
        let i = *open.choose(rng).expect("room remains");
        a[i] += 1;
    }
    a
}

fn weak_compositions(total: usize, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(i: usize, rem: u32, a: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i + 1 == a.len() {
            a[i] = rem;
            f(a);
            return;
        }
        for x in 0..=rem {
            a[i] = x;
            rec(i + 1, rem - x, a, f);
        }
    }
    if parts > 0 {
        rec(0, total as u32, &mut vec![0; parts], f);
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

// ---------------------------------------------------------------- suites

/// Subset and flow checkers agree: exhaustively on every connected catalog
/// graph with `n ≤ n_max` (capped by the catalog), then on `samples`
/// random pairs with `8 ≤ n ≤ 12`.
pub fn verify_checkers(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 1..=cfg.n_max.min(catalog::CATALOG_MAX_N) {
        let graphs = catalog::connected_graphs(n)?;
        let (mut pairs, mut members, mut mismatches) = (0usize, 0usize, Vec::new());
        for g in &graphs {
            let d = g.double();
            weak_compositions(n - 1, n, &mut |a| {
                let s = check_subset_scoped(&d, a, SubsetScope::All).expect("valid length");
                let c = check_subset_scoped(&d, a, SubsetScope::Clustered).expect("valid length");
                let f = check_flow(&d, a).expect("valid length");
                pairs += 1;
                members += s as usize;
                if s != f || s != c {
                    mismatches.push(format!("{g} {:?}", DraconianSequence(a.to_vec())));
                }
            });
        }
        cases.push(Case::check(
            format!("checkers exhaustive n={n}"),
            mismatches.is_empty(),
            format!(
                "graphs={} pairs={pairs} draconian={members} mismatches={}{}",
                graphs.len(),
                mismatches.len(),
                mismatches
                    .first()
                    .map(|m| format!(" first={m}"))
                    .unwrap_or_default()
            ),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut members, mut mismatches) = (0usize, Vec::new());
    for _ in 0..cfg.samples {
        let n = rng.gen_range(8..=12);
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(n, p, &mut rng);
        let a = random_composition(&g, &mut rng);
        let d = g.double();
        let s = Checker::Subset.check(&d, &a)?;
        let c = check_subset_scoped(&d, &a, SubsetScope::Clustered)?;
        let f = Checker::Flow.check(&d, &a)?;
        members += s as usize;
        if s != f || s != c {
            mismatches.push(format!("{g} {:?}", DraconianSequence(a)));
        }
    }
    cases.push(Case::check(
        "checkers random 8<=n<=12",
        mismatches.is_empty(),
        format!(
            "pairs={} draconian={members} mismatches={}{}",
            cfg.samples,
            mismatches.len(),
            mismatches
                .first()
                .map(|m| format!(" first={m}"))
                .unwrap_or_default()
        ),
    ));
    Ok(cases)
}

/// Closed forms against the enumeration oracle: random trees up to
/// `n_max`, cycles up to `n_max + 1`, complete-minus-matching up to
/// `n_max − 2`, `K_{2,n−2}` up to `n_max`; also the forest rule on
/// disconnected forests, the Stirling identity and the `K_1 ∨ P_3` values.
pub fn verify_formulas(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let en = enumerator(cfg);
    let planner = Planner::new(en.clone());
    let mut cases = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    for _ in 0..cfg.samples {
        let n = rng.gen_range(1..=cfg.n_max.max(1));
        let tree_seed: u64 = rng.gen();
        let g = random_tree(n, tree_seed);
        cases.push(Case::equal(
            format!("forest tree:{n},{tree_seed}"),
            en.count(&g)?,
            recurrence::nvol_forest(n, 1)?,
        ));
    }
    for _ in 0..cfg.samples.div_ceil(4) {
        let a = random_tree(rng.gen_range(1..=4), rng.gen());
        let b = random_tree(rng.gen_range(1..=4), rng.gen());
        let g = a.disjoint_union(&b).disjoint_union(&Graph::empty(1));
        cases.push(Case::equal(
            format!("forest disconnected {}", g.canonical_text()),
            planner.nvol(&g, Strategy::Enumerate)?.value,
            recurrence::nvol_forest(g.n(), 3)?,
        ));
    }
    for n in 3..=cfg.n_max + 1 {
        let g = Family::Cycle(n).build()?;
        cases.push(Case::equal(
            format!("cycle n={n}"),
            en.count(&g)?,
            recurrence::nvol_cycle(n)?,
        ));
    }
    for n in 3..=cfg.n_max.saturating_sub(2) {
        for k in 0..=n / 2 {
            let g = Family::CompleteMinusMatching(n, k).build()?;
            cases.push(Case::equal(
                format!("complete-minus-matching n={n} k={k}"),
                en.count(&g)?,
                recurrence::nvol_complete_minus_matching(n, k)?,
            ));
        }
    }
    for n in 3..=cfg.n_max {
        let g = Family::CompleteBipartite(2, n - 2).build()?;
        cases.push(Case::equal(
            format!("k2m n={n}"),
            en.count(&g)?,
            recurrence::nvol_k2m(n)?,
        ));
    }
    for n in 3..=20 {
        cases.push(Case::check(
            format!("stirling n={n}"),
            recurrence::stirling_identity_check(n)?,
            "3^n-2^n+1 = 2S(n+1,3)+S(n+1,2)+S(n+1,1)",
        ));
    }
    for (name, g, want) in counterexample_family()? {
        let auto = planner.nvol(&g, Strategy::Auto)?.value;
        let oracle = en.count(&g)?;
        cases.push(Case::check(
            format!("join-family {name}"),
            auto == big(want) && oracle == big(want),
            format!("auto={auto} oracle={oracle} want={want}"),
        ));
    }
    let star = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4)])?;
    cases.push(Case::equal("star K1,3", en.count(&star)?, big(8)));
    cases.push(Case::equal(
        "path P4",
        en.count(&Family::Path(4).build()?)?,
        big(8),
    ));
    Ok(cases)
}

/// `K_1 ∨ P_3`, and its edge-deleted, subdivided and triangle-joined
/// variants at the edge joining its two degree-3 vertices.
pub fn counterexample_family() -> Result<Vec<(&'static str, Graph, u64)>> {
    let g = Graph::empty(1).join(&Family::Path(3).build()?);
    let e = Edge::new(1, 3);
    Ok(vec![
        ("G", g.clone(), 18),
        ("G-e", g.delete_edge(e)?, 16),
        ("G:e", g.subdivide(e)?, 50),
        ("G^e", g.triangle_join(e)?, 52),
    ])
}

/// Both recurrences on `samples` random eligible pairs each, with
/// `3 ≤ n ≤ n_max`: count identities plus exact disjoint covers. The
/// subdivision identity on merely connected graphs is measured only.
pub fn verify_recurrences(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let en = enumerator(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    let n_max = cfg.n_max.max(3);
    for _ in 0..cfg.samples {
        let n = rng.gen_range(3..=n_max);
        let (g, e, u) = random_two_connected_with_degree_two(n, &mut rng);
        let lhs = en.count(&g.subdivide(e)?)?;
        let rhs = en.count(&g)? * 2u32 + en.count(&g.delete_edge(e)?)?;
        let w = subdivision_step(&g, e, u, &en, Checker::Flow)?;
        let chk = w.verify(&en)?;
        cases.push(Case::check(
            format!("subdivision {} e={e} u={u}", g.canonical_text()),
            lhs == rhs && chk.passed() && w.value() == lhs,
            format!(
                "target={lhs} 2g+g-e={rhs} sets={:?} disjoint={} exact={}",
                chk.sizes, chk.disjoint, chk.exact
            ),
        ));
    }
    for _ in 0..cfg.samples {
        let n = rng.gen_range(3..=n_max);
        let (g, e, u) = if rng.gen_bool(0.5) {
            random_connected_with_degree_two(n, &mut rng)
        } else {
            random_two_connected_with_degree_two(n, &mut rng)
        };
        let lhs = en.count(&g.triangle_join(e)?)?;
        let rhs = en.count(&g)? * 3u32;
        let w = triangle_step(&g, e, u, &en)?;
        let chk = w.verify(&en)?;
        cases.push(Case::check(
            format!("triangle {} e={e} u={u}", g.canonical_text()),
            lhs == rhs && chk.passed() && w.value() == lhs,
            format!(
                "target={lhs} 3g={rhs} sets={:?} disjoint={} exact={}",
                chk.sizes, chk.disjoint, chk.exact
            ),
        ));
    }
    let (mut measured, mut held) = (0, 0);
    let mut first_miss = None;
    for _ in 0..cfg.samples.div_ceil(4) {
        let n = rng.gen_range(3..=n_max);
        let (g, e, _) = random_connected_with_degree_two(n, &mut rng);
        if g.is_two_connected() {
            continue;
        }
        measured += 1;
        let lhs = en.count(&g.subdivide(e)?)?;
        let rhs = en.count(&g)? * 2u32 + en.count(&g.delete_edge(e)?)?;
        if lhs == rhs {
            held += 1;
        } else if first_miss.is_none() {
            first_miss = Some(format!(
                "{} e={e} target={lhs} 2g+g-e={rhs}",
                g.canonical_text()
            ));
        }
    }
    cases.push(Case::info(
        "subdivision on connected, not 2-connected",
        format!(
            "measured={measured} held={held}{}",
            first_miss
                .map(|m| format!(" first-miss={m}"))
                .unwrap_or_default()
        ),
    ));
    Ok(cases)
}

/// The worked examples on the triangle, plus agreement of the witness
/// construction under both leaf checkers on random small cases.
pub fn verify_bijections(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let en = enumerator(cfg);
    let mut cases = Vec::new();
    let c3 = Family::Cycle(3).build()?;
    let e = Edge::new(1, 3);
    let parse = |v: &[[u32; 4]]| -> Vec<DraconianSequence> {
        let set: BTreeSet<_> = v.iter().map(|s| DraconianSequence(s.to_vec())).collect();
        set.into_iter().collect()
    };

    let w = subdivision_step(&c3, e, 1, &en, Checker::Flow)?;
    let [a, b, c] = w.image_sets();
    let want_a = parse(&[
        [2, 0, 0, 1],
        [0, 2, 0, 1],
        [0, 0, 2, 1],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
        [0, 1, 1, 1],
    ]);
    cases.push(Case::check(
        "subdivision C3 set A",
        a == want_a,
        format!("{a:?}"),
    ));
    let want_b = parse(&[[1, 2, 0, 0], [2, 1, 0, 0], [2, 0, 1, 0], [1, 1, 1, 0]]);
    cases.push(Case::check(
        "subdivision C3 set B",
        b == want_b,
        format!("{b:?}"),
    ));
    let want_c = parse(&[
        [1, 0, 0, 2],
        [1, 0, 2, 0],
        [0, 1, 0, 2],
        [0, 0, 1, 2],
        [0, 1, 2, 0],
        [0, 2, 1, 0],
    ]);
    cases.push(Case::check(
        "subdivision C3 set C",
        c == want_c,
        format!("{c:?}"),
    ));
    let chk = w.verify(&en)?;
    cases.push(Case::check(
        "subdivision C3 cover",
        chk.passed() && w.total() == 16,
        format!("sizes={:?} total={}", chk.sizes, w.total()),
    ));

    let w = triangle_step(&c3, e, 1, &en)?;
    let [a, b, c] = w.image_sets();
    cases.push(Case::check(
        "triangle C3 set A",
        a == want_a,
        format!("{a:?}"),
    ));
    let want_b = parse(&[
        [3, 0, 0, 0],
        [1, 2, 0, 0],
        [1, 0, 2, 0],
        [2, 1, 0, 0],
        [2, 0, 1, 0],
        [1, 1, 1, 0],
    ]);
    cases.push(Case::check(
        "triangle C3 set B",
        b == want_b,
        format!("{b:?}"),
    ));
    let want_c = parse(&[
        [1, 0, 0, 2],
        [0, 2, 1, 0],
        [0, 0, 3, 0],
        [0, 1, 0, 2],
        [0, 0, 1, 2],
        [0, 1, 2, 0],
    ]);
    cases.push(Case::check(
        "triangle C3 set C",
        c == want_c,
        format!("{c:?}"),
    ));
    let chk = w.verify(&en)?;
    cases.push(Case::check(
        "triangle C3 cover",
        chk.passed() && w.total() == 18,
        format!("sizes={:?} total={}", chk.sizes, w.total()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let n = rng.gen_range(3..=cfg.n_max.max(3));
        let (g, e, u) = random_two_connected_with_degree_two(n, &mut rng);
        let flow = subdivision_step(&g, e, u, &en, Checker::Flow)?;
        let subset = subdivision_step(&g, e, u, &en, Checker::Subset)?;
        let chk = flow.verify(&en)?;
        cases.push(Case::check(
            format!("witness checkers {} e={e} u={u}", g.canonical_text()),
            flow.image_sets() == subset.image_sets() && chk.passed(),
            format!("sizes={:?}", chk.sizes),
        ));
    }
    Ok(cases)
}

// ---------------------------------------------------------------- scans

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanTarget {
    Wheels,
    OuterplanarConjecture,
}

impl fmt::Display for ScanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanTarget::Wheels => "wheels",
            ScanTarget::OuterplanarConjecture => "outerplanar-conjecture",
        })
    }
}

impl FromStr for ScanTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wheels" => Ok(ScanTarget::Wheels),
            "outerplanar-conjecture" | "outerplanar" => Ok(ScanTarget::OuterplanarConjecture),
            _ => Err(Error::Parse(format!("unknown scan target {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
    pub workers: usize,
}

/// One scanned instance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ScanRecord {
    pub fingerprint: String,
    pub n: usize,
    pub formula: String,
    pub oracle: String,
    pub agree: bool,
    /// The compared formula is conjectured rather than proven here.
    pub conjectural: bool,
    pub graph: String,
}

impl ScanRecord {
    fn new(g: &Graph, formula: BigUint, oracle: BigUint, conjectural: bool) -> Self {
        ScanRecord {
            fingerprint: g.fingerprint(),
            n: g.n(),
            agree: formula == oracle,
            formula: formula.to_string(),
            oracle: oracle.to_string(),
            conjectural,
            graph: g.canonical_text(),
        }
    }

    /// Fixed-field line: `fp n formula oracle agree status graph`.
    pub fn to_line(&self) -> String {
        format!(
            "fp={} n={} formula={} oracle={} agree={} status={} graph={}",
            self.fingerprint,
            self.n,
            self.formula,
            self.oracle,
            if self.agree { "yes" } else { "NO" },
            if self.conjectural {
                "conjecture"
            } else {
                "theorem"
            },
            self.graph
        )
    }
}

pub fn run_scan(target: ScanTarget, cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    match target {
        ScanTarget::Wheels => scan_wheels(cfg),
        ScanTarget::OuterplanarConjecture => scan_outerplanar(cfg),
    }
}

/// `W_n` for `3 ≤ n ≤ n_max`: sharded enumeration against `3^n − 2^n + 1`.
pub fn scan_wheels(cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    let en = Enumerator::with_workers(cfg.workers);
    let mut out = (3..=cfg.n_max)
        .map(|n| {
            let g = Family::Wheel(n).build()?;
            Ok(ScanRecord::new(
                &g,
                recurrence::wheel_conjecture_value(n)?,
                en.count(&g)?,
                true,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `samples` seeded random outerplanar graphs with `4 ≤ n ≤ n_max`, the
/// face-product formula against enumeration. Duplicates are dropped.
pub fn scan_outerplanar(cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let lo = 4.min(cfg.n_max.max(3));
    let jobs: Vec<(usize, u64)> = (0..cfg.samples)
        .map(|_| (rng.gen_range(lo..=cfg.n_max.max(3)), rng.gen()))
        .collect();
    let en = Enumerator::default();
    let one = |&(n, s): &(usize, u64)| -> Result<ScanRecord> {
        let g = random_outerplanar(n, s);
        let f = nvol_outerplanar(&g)?;
        Ok(ScanRecord::new(&g, f.value, en.count(&g)?, f.conjectural))
    };
    let results: Vec<Result<ScanRecord>> = if cfg.workers <= 1 {
        jobs.iter().map(one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Hypothesis(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(one).collect())
    };
    let set: BTreeSet<ScanRecord> = results.into_iter().collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}
