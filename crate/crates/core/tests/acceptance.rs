//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use opturan::blocks::block_decomposition;
use opturan::constructions::{construct_Hprime, construct_two_m5, f_formula, fan_mop, h_formula, Mode};
use opturan::doublestar::{is_double_star_free, shared_neighbor_holds, DoubleStarSpec};
use opturan::oracle::{all_graphs, brute_dedupe, brute_edge_hosts, MinorOracle};
use opturan::search::corpus::{enumerate_connected_outerplanar, enumerate_two_connected_outerplanar};
use opturan::search::report::probe_conjecture;
use opturan::search::{all_labeled_triangulations, enumerate_mops, Engine, ExtremalResult, SearchConfig};
use opturan::subgraph::contains_subgraph;
use opturan::{are_isomorphic, edge_hosts_double_star, is_outerplanar, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(p: usize, q: usize) -> DoubleStarSpec {
    DoubleStarSpec::new(p, q).unwrap()
}

fn engine(workers: usize) -> Engine {
    Engine::new(SearchConfig { workers, ..SearchConfig::default() }).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn checked(r: ExtremalResult) -> Result<ExtremalResult, String> {
    r.validate().map_err(|e| format!("n={} {:?}: {e}", r.n, r.mode))?;
    Ok(r)
}

fn exact_values(e: &Engine, jobs: &[(usize, DoubleStarSpec, Mode)]) -> Result<Vec<ExtremalResult>, String> {
    jobs.iter().map(|&(n, s, m)| e.ex(n, s, m).map_err(|e| e.to_string()).and_then(checked)).collect()
}

fn connected_22_jobs() -> Vec<(usize, DoubleStarSpec, Mode)> {
    (6..=11).map(|n| (n, spec(2, 2), Mode::Connected)).collect()
}

fn general_22_jobs() -> Vec<(usize, DoubleStarSpec, Mode)> {
    (6..=11).map(|n| (n, spec(2, 2), Mode::General)).collect()
}

fn large_pq_jobs() -> Vec<(usize, DoubleStarSpec, Mode)> {
    [(3, 3, 8), (2, 4, 8), (3, 4, 9), (2, 5, 9)].iter().map(|&(p, q, n)| (n, spec(p, q), Mode::General)).collect()
}

fn compare(results: &[ExtremalResult], expected: &[usize]) -> Result<(), String> {
    for (r, &want) in results.iter().zip(expected) {
        ensure(r.value == want, || format!("n={} (p,q)=({},{}) got {} expected {want}", r.n, r.p, r.q, r.value))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let results = exact_values(&engine(available_workers()), &connected_22_jobs())?;
    let elapsed = start.elapsed();
    compare(&results, &[7, 9, 10, 12, 13, 15])?;
    for r in &results {
        ensure(r.value == h_formula(r.n), || format!("n={} differs from floor(3(n-1)/2)", r.n))?;
    }
    ensure(elapsed <= Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("connected S(2,2), n=6..11 -> 7 9 10 12 13 15 in {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let results = exact_values(&engine(available_workers()), &general_22_jobs())?;
    compare(&results, &[7, 9, 10, 12, 14, 15])?;
    let n10 = &results[4];
    let two_m5 = construct_two_m5();
    let graphs = n10.witness_graphs().map_err(|e| e.to_string())?;
    ensure(graphs.iter().any(|g| are_isomorphic(g, &two_m5)), || "no witness isomorphic to 2M5 at n=10".into())?;
    Ok(format!("general S(2,2), n=6..11 -> 7 9 10 12 14 15; n=10 witness {}", n10.witnesses[0]))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let results = exact_values(&engine(available_workers()), &large_pq_jobs())?;
    compare(&results, &[13, 13, 15, 15])?;
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(900), || format!("took {elapsed:?}"))?;
    Ok(format!("(3,3,8) (2,4,8) (3,4,9) (2,5,9) -> 13 13 15 15 in {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let e = engine(1);
    let jobs: Vec<_> = (1..=5).map(|n| (n, spec(2, 2), Mode::General)).collect();
    let results = exact_values(&e, &jobs)?;
    compare(&results, &[0, 1, 3, 5, 7])?;
    Ok("general S(2,2), n=1..5 -> 0 1 3 5 7".into())
}

fn criterion_5() -> Outcome {
    for t in 1..=4 {
        for i in 0..=5 {
            let g = construct_Hprime(t, i).map_err(|e| e.to_string())?;
            let n = 6 * t + i;
            let want = f_formula(n).map_err(|e| e.to_string())?;
            ensure(g.order() == n, || format!("H'({t},{i}) has {} vertices", g.order()))?;
            ensure(g.size() == want, || format!("H'({t},{i}) has {} edges, f = {want}", g.size()))?;
            ensure(is_outerplanar(&g), || format!("H'({t},{i}) not outerplanar"))?;
            ensure(g.is_connected(), || format!("H'({t},{i}) disconnected"))?;
            ensure(is_double_star_free(&g, spec(2, 3)), || format!("H'({t},{i}) contains S(2,3)"))?;
        }
    }
    Ok("24 chain graphs: order, f(n) edges, outerplanar, connected, S(2,3)-free".into())
}

fn criterion_6() -> Outcome {
    let report = probe_conjecture(&engine(available_workers()), 7, 11).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for row in &report.rows {
        let f = f_formula(row.n).map_err(|e| e.to_string())?;
        ensure(row.connected >= f && row.general >= f, || format!("n={} below f(n)={f}", row.n))?;
        ensure(row.connected <= row.general, || format!("n={} connected exceeds general", row.n))?;
        summary.push(format!("n={}: c={} g={} f={f}", row.n, row.connected, row.general));
    }
    ensure(!report.has_failure(), || "report flags a failure".into())?;
    report.to_json().map_err(|e| e.to_string())?;
    report.to_csv().map_err(|e| e.to_string())?;
    Ok(summary.join(", "))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 6..=10 {
        let bound = 5 * n / 4;
        for g in enumerate_two_connected_outerplanar(n, Some(spec(2, 2))).map_err(|e| e.to_string())? {
            ensure(g.size() <= bound, || format!("n={n}: 2-connected free graph with {} edges", g.size()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} 2-connected S(2,2)-free classes, n=6..10, within floor(5n/4)"))
}

fn is_m4(g: &Graph) -> bool {
    g.order() == 4 && g.size() == 5
}

fn criterion_8() -> Outcome {
    let m5 = fan_mop(5).unwrap();
    let mut checked = 0;
    let mut m4_blocks = 0;
    for n in 6..=8 {
        for g in enumerate_connected_outerplanar(n, Some(spec(2, 2))).map_err(|e| e.to_string())? {
            let label = opturan::graph6::encode(&g);
            ensure(shared_neighbor_holds(&g), || format!("{label}: shared-neighbor condition fails"))?;
            ensure(contains_subgraph(&g, &m5).is_none(), || format!("{label}: contains M5"))?;
            let blocks = block_decomposition(&g).map_err(|e| e.to_string())?;
            let block_graph = |i: usize| g.induced(blocks.blocks[i]);
            for a in 0..blocks.len() {
                if !is_m4(&block_graph(a)) {
                    continue;
                }
                m4_blocks += 1;
                for b in blocks.neighbors_of(a) {
                    ensure(block_graph(b).order() == 2, || format!("{label}: block next to M4 is not M2"))?;
                    let around = blocks.neighbors_of(b);
                    ensure(around.len() <= 2, || format!("{label}: block next to M4 has {} neighbors", around.len()))?;
                    for c in around.into_iter().filter(|&c| c != a) {
                        ensure(block_graph(c).order() == 2, || format!("{label}: second neighbor is not M2"))?;
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} connected S(2,2)-free classes, n=6..8 ({m4_blocks} M4 blocks): zero violations"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut edge_checks = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n);
        let p = rng.gen_range(1..=3);
        let q = rng.gen_range(p..=4);
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let fast = edge_hosts_double_star(&g, a, b, spec(p, q)).unwrap();
                ensure(fast == brute_edge_hosts(&g, a, b, p, q), || {
                    format!("counting criterion disagrees on {} edge {a}-{b} ({p},{q})", opturan::graph6::encode(&g))
                })?;
                edge_checks += 1;
            }
        }
    }

    let mut oracle = MinorOracle::new();
    let mut planarity_checks = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            ensure(is_outerplanar(&g) == oracle.is_outerplanar(&g), || {
                format!("outerplanarity disagrees on {}", opturan::graph6::encode(&g))
            })?;
            planarity_checks += 1;
        }
    }
    for n in [7, 8] {
        for _ in 0..1500 {
            let g = random_graph(&mut rng, n);
            ensure(is_outerplanar(&g) == oracle.is_outerplanar(&g), || {
                format!("outerplanarity disagrees on {}", opturan::graph6::encode(&g))
            })?;
            planarity_checks += 1;
        }
    }

    let mut counts = Vec::new();
    for n in 6..=8 {
        let oracle_count = brute_dedupe(all_labeled_triangulations(n).iter().map(|t| t.to_graph())).len();
        let ours = enumerate_mops(n).map_err(|e| e.to_string())?.len();
        ensure(ours == oracle_count, || format!("n={n}: {ours} MOP classes, oracle {oracle_count}"))?;
        counts.push(ours.to_string());
    }
    Ok(format!(
        "{edge_checks} oriented edges, {planarity_checks} outerplanarity checks, MOP classes n=6..8: {}",
        counts.join(" ")
    ))
}

fn criterion_10() -> Outcome {
    let jobs: Vec<_> = connected_22_jobs().into_iter().chain(general_22_jobs()).chain(large_pq_jobs()).collect();
    let reference = exact_values(&engine(1), &jobs)?;
    for workers in [2, 8] {
        let other = exact_values(&engine(workers), &jobs)?;
        for (a, b) in reference.iter().zip(&other) {
            ensure(a.same_outcome(b), || format!("{workers} workers differ at n={} ({},{}) {:?}", a.n, a.p, a.q, a.mode))?;
        }
    }
    Ok(format!("{} results identical with 1, 2 and 8 workers", jobs.len()))
}

fn available_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("connected S(2,2) values", criterion_1),
        ("general S(2,2) values with the n=10 anomaly", criterion_2),
        ("2n-3 for larger double stars", criterion_3),
        ("small orders", criterion_4),
        ("S(2,3) chain constructions", criterion_5),
        ("S(2,3) probe", criterion_6),
        ("2-connected edge bound", criterion_7),
        ("block structure of S(2,2)-free graphs", criterion_8),
        ("oracle equivalences", criterion_9),
        ("determinism across worker counts", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
