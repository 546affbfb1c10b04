//! The acceptance suites. Each suite checks one claim over a fixed corpus
//! (random parts use fixed seeds) and reports how many instances it
//! checked and which ones failed.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::combinatorics::{rat, IntPartition, Rational, TPoly};
use crate::error::Result;
use crate::graphs::{canonical_star_forest, complete, cycle, theta, Multigraph};
use crate::invariants::{
    chromatic_sym, chromatic_sym_delcon, sigma_l_direct, sigma_l_formula, tutte_from_connected_partitions,
    tutte_from_contractions, tutte_sym, tutte_sym_delcon,
};
use crate::kernel::{
    broom_relation, classify_n4, cycle_relation, ell_iso, ell_loop, ell_multi, ell_os, ell_os_plus, ell_tri,
    kernel_membership, n4_families_expected, precedes, reduce_to_star_forests, sample_nontrivial_friendly,
    simple_graphs, two_edge_connected_relation, verify_witness, witness_graph, Friendliness, Generator,
    GraphCombination,
};
use crate::quasi::{tq, tq_from_arc_subsets, tq_from_connected_partitions, xq, Digraph, TruncatedQFunc};
use crate::symfun::rank;

/// Failure messages kept per suite; the count covers all of them.
const KEPT_FAILURES: usize = 20;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// `PASS 3 generator friendliness (206 checks, 0.41s)`
    pub fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} {:>2} {} ({} checks, {} failed, {:.2}s)",
            self.id,
            self.name,
            self.checked,
            self.failed,
            self.elapsed.as_secs_f64()
        );
        for f in &self.failures {
            s.push_str("\n       ");
            s.push_str(f);
        }
        if self.failed > self.failures.len() {
            s.push_str(&format!("\n       .. and {} more", self.failed - self.failures.len()));
        }
        s
    }
}

struct Tally {
    checked: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    /// Records a computation that returned an error as a failure.
    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: error: {e}", what()));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }
}

fn run(id: u8, name: &'static str, body: impl FnOnce(&mut Tally)) -> SuiteReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally);
    SuiteReport {
        id,
        name,
        checked: tally.checked,
        failed: tally.failed,
        failures: tally.failures,
        elapsed: start.elapsed(),
    }
}

pub type Suite = fn() -> SuiteReport;

/// All suites in criterion order.
pub fn suites() -> Vec<(u8, &'static str, Suite)> {
    vec![
        (1, "four XB routes agree", suite_xb_routes as Suite),
        (2, "t = -1 recovers X", suite_t_minus_one),
        (3, "generator friendliness", suite_generators),
        (4, "differences of two graphs are not X-friendly", suite_two_graph_differences),
        (5, "friendly complement pairs on [4] and [5]", suite_complement_pairs),
        (6, "reduction to star forests", suite_reduction),
        (7, "two-edge-connected and cycle relations", suite_cycle_relations),
        (8, "sink formula for sigma_l", suite_sigma),
        (9, "witness graphs", suite_witness),
        (10, "quasisymmetric routes", suite_quasi),
        (11, "broom relations", suite_broom),
        (12, "star-forest basis", suite_star_forest_basis),
    ]
}

pub fn run_all() -> Vec<SuiteReport> {
    suites().into_iter().map(|(_, _, f)| f()).collect()
}

/// A random multigraph on [n] with at most `max_edges` edges (loops with
/// probability 1/8 each when allowed) and weights in 1..=max_weight.
pub fn random_multigraph(
    rng: &mut impl Rng,
    n: usize,
    max_edges: usize,
    max_weight: u32,
    loops: bool,
) -> Multigraph {
    let m = rng.gen_range(0..=max_edges);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m && n > 0 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v && !(loops && n == 1 || loops && rng.gen_ratio(1, 8)) {
            continue;
        }
        edges.push((u, v));
    }
    let weights = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
    Multigraph::new(n, edges, weights).expect("random edges are in range")
}

pub fn random_simple_graph(rng: &mut impl Rng, n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Multigraph::from_edges(n, &edges).expect("pairs are in range")
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn random_tpoly(rng: &mut impl Rng) -> TPoly {
    let degree = rng.gen_range(0..=2);
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-3..=3)).collect();
    if c.iter().all(|&x| x == 0) {
        c[0] = 1;
    }
    TPoly::from_ints(&c)
}

/// All multigraphs on [n] with at most `max_edges` edges, loops included,
/// unit weights.
fn all_multigraphs(n: usize, max_edges: usize) -> Vec<Multigraph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    multisets(&slots, 0, max_edges, &mut current, &mut |edges| {
        out.push(Multigraph::from_edges(n, edges).expect("slots are in range"));
    });
    out
}

fn multisets<T: Clone>(
    items: &[T],
    start: usize,
    remaining: usize,
    current: &mut Vec<T>,
    f: &mut impl FnMut(&[T]),
) {
    f(current);
    if remaining == 0 {
        return;
    }
    for i in start..items.len() {
        current.push(items[i].clone());
        multisets(items, i, remaining - 1, current, f);
        current.pop();
    }
}

/// The corpus shared by the first two suites.
fn xb_corpus() -> Vec<Multigraph> {
    let mut corpus = simple_graphs(4).expect("64 graphs");
    corpus.extend(all_multigraphs(3, 4));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        corpus.push(random_multigraph(&mut rng, n, 8, 3, true));
    }
    corpus
}

pub fn suite_xb_routes() -> SuiteReport {
    run(1, "four XB routes agree", |t| {
        for g in xb_corpus() {
            t.check_result(
                (|| {
                    let def = tutte_sym(&g)?;
                    Ok(def == tutte_sym_delcon(&g)?
                        && def == tutte_from_contractions(&g)?
                        && def == tutte_from_connected_partitions(&g)?)
                })(),
                || format!("{g}"),
            );
        }
    })
}

pub fn suite_t_minus_one() -> SuiteReport {
    run(2, "t = -1 recovers X", |t| {
        let minus_one = rat(-1, 1);
        for g in xb_corpus() {
            t.check_result(
                (|| {
                    let x = chromatic_sym(&g)?;
                    Ok(tutte_sym(&g)?.specialize_t(&minus_one) == x && chromatic_sym_delcon(&g)? == x)
                })(),
                || format!("{g}"),
            );
        }
    })
}

pub fn suite_generators() -> SuiteReport {
    run(3, "generator friendliness", |t| {
        let tutte: [(&str, GraphCombination); 4] = [
            ("loop", ell_loop()),
            ("multi", ell_multi()),
            ("tri", ell_tri()),
            ("os+", ell_os_plus()),
        ];
        for (name, l) in &tutte {
            t.check_result(l.is_tutte_friendly().map(|f| f.is_friendly()), || {
                format!("{name} is not Tutte-friendly")
            });
        }
        let os = ell_os();
        t.check_result(os.is_x_friendly().map(|f| f.is_friendly()), || {
            "os is not X-friendly".into()
        });
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (name, l) in tutte.iter().chain(std::iter::once(&("os", os.clone()))) {
            for _ in 0..50 {
                let n = rng.gen_range(l.n()..=6);
                let host = random_multigraph(&mut rng, n, 6, 2, true);
                let perm = random_permutation(&mut rng, n);
                t.check_result(
                    (|| {
                        let ext = l.extend(&host)?.relabel(&perm)?;
                        // ℓ_os lies only in the kernel of X
                        Ok(if *name == "os" {
                            ext.x_sum()?.is_zero()
                        } else {
                            ext.xb_sum()?.is_zero()
                        })
                    })(),
                    || format!("{name} extended by {host}"),
                );
            }
        }
    })
}

pub fn suite_two_graph_differences() -> SuiteReport {
    run(4, "differences of two graphs are not X-friendly", |t| {
        let diff = |h1: &Multigraph, h2: &Multigraph| -> Result<bool> {
            let l = GraphCombination::from_terms(
                h1.n(),
                [(TPoly::one(), h1.clone()), (TPoly::from_int(-1), h2.clone())],
            )?;
            Ok(!l.is_x_friendly()?.is_friendly())
        };
        let graphs = simple_graphs(3).expect("8 graphs");
        for h1 in &graphs {
            for h2 in graphs.iter().filter(|h| *h != h1) {
                t.check_result(diff(h1, h2), || format!("{h1} - {h2}"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut sampled = 0;
        while sampled < 500 {
            let (h1, h2) = (random_simple_graph(&mut rng, 5), random_simple_graph(&mut rng, 5));
            if h1 == h2 {
                continue;
            }
            sampled += 1;
            t.check_result(diff(&h1, &h2), || format!("{h1} - {h2}"));
        }
    })
}

pub fn suite_complement_pairs() -> SuiteReport {
    run(5, "friendly complement pairs on [4] and [5]", |t| {
        match classify_n4() {
            Ok(families) => {
                let expected = n4_families_expected();
                t.check(families == expected, || {
                    let show: Vec<String> = families
                        .iter()
                        .map(|f| f.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" | "))
                        .collect();
                    format!("families on [4]: {}", show.join(" ;; "))
                });
            }
            Err(e) => t.check(false, || format!("classify_n4: {e}")),
        }
        match sample_nontrivial_friendly(5, 500, 5) {
            Ok(found) => {
                for p in &found {
                    t.fail(format!("friendly pair on [5]: {} and {}", p.h1, p.h2));
                }
                t.checked += 500;
            }
            Err(e) => t.check(false, || format!("sampling on [5]: {e}")),
        }
    })
}

fn check_reduction(l: &GraphCombination) -> Result<std::result::Result<(), String>> {
    let red = reduce_to_star_forests(l)?;
    let output = red.output()?;
    if red.replay()? != output {
        return Ok(Err("certificate replay differs from output".into()));
    }
    if l.xb_sum()? != output.xb_sum()? {
        return Ok(Err("XB not preserved".into()));
    }
    for step in red.certificate.iter().filter(|s| s.generator == Generator::OsPlus) {
        if let Some(p) = step.products.iter().find(|p| !precedes(&step.source, p)) {
            return Ok(Err(format!("{} rewritten to {p}", step.source)));
        }
    }
    Ok(Ok(()))
}

/// A random element of the kernel: relabelled extensions of generators and
/// isomorphism relations with random coefficients.
fn random_kernel_element(rng: &mut impl Rng, n: usize) -> Result<GraphCombination> {
    let mut l = GraphCombination::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let generator = match rng.gen_range(0..5) {
            0 => ell_loop(),
            1 => ell_multi(),
            2 if n >= 3 => ell_tri(),
            3 if n >= 3 => ell_os_plus(),
            _ => {
                // isomorphism relations are used as they are, not extended
                let g = random_multigraph(rng, n, 5, 1, true);
                let perm = random_permutation(rng, n);
                l = l.add_scaled(&ell_iso(&g, &perm)?, &random_tpoly(rng))?;
                continue;
            }
        };
        let host = random_multigraph(rng, n, 4, 1, true);
        let perm = random_permutation(rng, n);
        let ext = generator.extend(&host)?.relabel(&perm)?;
        l = l.add_scaled(&ext, &random_tpoly(rng))?;
    }
    Ok(l)
}

pub fn suite_reduction() -> SuiteReport {
    run(6, "reduction to star forests", |t| {
        for n in 1..=5 {
            for g in simple_graphs(n).expect("small n") {
                let l = GraphCombination::single(g.clone());
                match check_reduction(&l) {
                    Ok(Ok(())) => t.check(true, String::new),
                    Ok(Err(msg)) => t.check(false, || format!("{g}: {msg}")),
                    Err(e) => t.check(false, || format!("{g}: error: {e}")),
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut members = 0;
        for i in 0..200 {
            let n = rng.gen_range(2..=5);
            let l = if i % 2 == 0 {
                random_kernel_element(&mut rng, n)
            } else {
                let mut l = GraphCombination::zero(n);
                for _ in 0..rng.gen_range(1..=3) {
                    let g = random_multigraph(&mut rng, n, 5, 1, true);
                    let c = random_tpoly(&mut rng);
                    l = l.add_scaled(&GraphCombination::single(g), &c).expect("same n");
                }
                Ok(l)
            };
            let verdict = l.and_then(|l| {
                let member = kernel_membership(&l)?;
                Ok((member, l))
            });
            match verdict {
                Ok((member, l)) => {
                    members += usize::from(member);
                    // generated kernel elements must be recognised as such
                    t.check(member || i % 2 == 1, || format!("kernel element rejected: {l}"));
                }
                Err(e) => t.check(false, || format!("combination {i}: {e}")),
            }
        }
        t.check(members >= 100, || format!("only {members} of 200 combinations in the kernel"));
    })
}

pub fn suite_cycle_relations() -> SuiteReport {
    run(7, "two-edge-connected and cycle relations", |t| {
        let mut graphs: Vec<(String, Multigraph)> =
            (3..=6).map(|n| (format!("C{n}"), cycle(n))).collect();
        graphs.push(("double edge".into(), cycle(2)));
        graphs.push(("K4".into(), complete(4)));
        graphs.push(("theta(1,2,2)".into(), theta(&[1, 2, 2])));
        for (name, g) in &graphs {
            let m = g.num_edges();
            for i in 0..m {
                for j in 0..m {
                    t.check_result(
                        two_edge_connected_relation(g, i, j)
                            .and_then(|l| Ok(l.is_tutte_friendly()?.is_friendly())),
                        || format!("{name} with e_i = {}, e_j = {}", i + 1, j + 1),
                    );
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in 3..=5 {
            for _ in 0..2 {
                let n = rng.gen_range(len..=6);
                let host = random_multigraph(&mut rng, n, 4, 2, true);
                let mut vertices = random_permutation(&mut rng, n);
                vertices.truncate(len);
                let cycle_edges: Vec<_> =
                    (0..len).map(|m| (vertices[m], vertices[(m + 1) % len])).collect();
                let g = host.add_edges(&cycle_edges).expect("in range");
                for i in 0..len {
                    for j in 0..len {
                        t.check_result(
                            cycle_relation(&g, &vertices, i, j).and_then(|l| Ok(l.xb_sum()?.is_zero())),
                            || format!("C{len} in {g}, i = {}, j = {}", i + 1, j + 1),
                        );
                    }
                }
            }
        }
        t.check_result(
            cycle_relation(&complete(3), &[0, 1, 2], 1, 0).map(|l| l == ell_tri()),
            || "triangle instance differs from the six-term triangle relation".into(),
        );
    })
}

pub fn suite_sigma() -> SuiteReport {
    run(8, "sink formula for sigma_l", |t| {
        let mut corpus: Vec<Multigraph> = Vec::new();
        for n in 1..=4 {
            corpus.extend(simple_graphs(n).expect("small n"));
        }
        for n in 1..=3 {
            for g in simple_graphs(n).expect("small n") {
                for mask in 1u32..1 << n {
                    let w = (0..n).map(|v| 1 + (mask >> v & 1)).collect();
                    corpus.push(g.with_weights(w).expect("positive weights"));
                }
            }
        }
        for g in &corpus {
            for k in 0..=g.num_edges() {
                for l in 0..=g.total_weight() + 1 {
                    t.check_result(
                        (|| Ok(sigma_l_formula(g, k, l)? == sigma_l_direct(g, k, l)?))(),
                        || format!("{g}, k = {k}, l = {l}"),
                    );
                }
            }
        }
    })
}

pub fn suite_witness() -> SuiteReport {
    run(9, "witness graphs", |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut done = 0;
        while done < 20 {
            let n = rng.gen_range(1..=3);
            let mut l = GraphCombination::zero(n);
            for _ in 0..rng.gen_range(1..=3) {
                let g = random_multigraph(&mut rng, n, 3, 1, true);
                l = l.add_scaled(&GraphCombination::single(g), &random_tpoly(&mut rng)).expect("same n");
            }
            let Ok(Friendliness::Violation { pi, a, .. }) = l.is_tutte_friendly() else {
                continue;
            };
            done += 1;
            t.check_result(
                (|| {
                    let g = witness_graph(&l, &pi, a)?;
                    Ok(verify_witness(&l, &pi, a, &g)?.is_certified())
                })(),
                || format!("{l} at {pi}, a = {a}"),
            );
        }
    })
}

/// Every digraph on [n] with at most `max_arcs` arcs (loops and repeated
/// arcs allowed) and weights in {1, 2}.
fn digraph_corpus(n: usize, max_arcs: usize, f: &mut impl FnMut(Digraph)) {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let mut arc_sets = Vec::new();
    multisets(&slots, 0, max_arcs, &mut Vec::new(), &mut |arcs| arc_sets.push(arcs.to_vec()));
    for mask in 0u32..1 << n {
        let weights: Vec<u32> = (0..n).map(|v| 1 + (mask >> v & 1)).collect();
        for arcs in &arc_sets {
            f(Digraph::new(n, arcs.clone(), weights.clone()).expect("in range"));
        }
    }
}

pub fn suite_quasi() -> SuiteReport {
    run(10, "quasisymmetric routes", |t| {
        // Many orientations share one underlying multigraph.
        let mut xb_cache = FxHashMap::default();
        for n in 1..=4 {
            digraph_corpus(n, 5, &mut |d| {
                t.check_result(quasi_agree(&d, &mut xb_cache), || format!("{d}"));
            });
        }
    })
}

fn quasi_agree(d: &Digraph, xb_cache: &mut FxHashMap<Multigraph, TruncatedQFunc>) -> Result<bool> {
    let vars = d.total_weight() as usize;
    let direct = tq(d, vars)?;
    if direct != tq_from_connected_partitions(d, vars)?
        || direct != tq_from_arc_subsets(d, vars)?
        || direct.at_t_minus_one() != xq(d, vars)?
    {
        return Ok(false);
    }
    let g = d.underlying();
    if !xb_cache.contains_key(&g) {
        let f = TruncatedQFunc::from_symmetric(&tutte_sym(&g)?, vars)?;
        xb_cache.insert(g.clone(), f);
    }
    Ok(direct.at_q_one() == xb_cache[&g])
}

pub fn suite_broom() -> SuiteReport {
    run(11, "broom relations", |t| {
        for n in 0..=3 {
            for k in 1..=3 {
                t.check_result(
                    (|| {
                        let l = broom_relation(n, k)?;
                        let by_reduction = reduce_to_star_forests(&l)?.is_zero();
                        let direct = l.xb_sum()?.is_zero();
                        Ok(by_reduction && direct)
                    })(),
                    || match broom_relation(n, k).and_then(|l| l.xb_sum()) {
                        Ok(xb) => format!("B({n},{k}) relation has XB = {xb}"),
                        Err(e) => format!("B({n},{k}): {e}"),
                    },
                );
            }
        }
    })
}

pub fn suite_star_forest_basis() -> SuiteReport {
    run(12, "star-forest basis", |t| {
        for n in 1..=7 {
            t.check_result(
                (|| {
                    let lambdas = IntPartition::all(n);
                    let rows = lambdas
                        .iter()
                        .map(|lambda| {
                            let x = chromatic_sym(&canonical_star_forest(lambda, n)?)?;
                            Ok(lambdas.iter().map(|mu| x.coeff(mu).constant_term()).collect())
                        })
                        .collect::<Result<Vec<Vec<Rational>>>>()?;
                    Ok(rank(rows) == lambdas.len())
                })(),
                || format!("n = {n}"),
            );
        }
    })
}
