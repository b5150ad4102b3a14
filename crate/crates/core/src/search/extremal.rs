//! Exact outerplanar Turán numbers of double stars for small `n`.
//!
//! Connected case: every connected outerplanar graph on `n >= 3` vertices
//! extends, by adding edges, to a maximal outerplanar graph on the same
//! vertex set. So the maximum over all connected free outerplanar graphs
//! equals the maximum, over one representative of each isomorphism class
//! of maximal outerplanar graphs, of the largest free connected spanning
//! subgraph. General case: components are independent, so
//! `ex(n) = max(ex_c(n), max_k ex_c(k) + ex(n - k))`.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::constructions::{best_construction, mop_edges, Mode};
use crate::doublestar::{is_double_star_free, DoubleStarSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::planarity::is_outerplanar;
use crate::search::bnb::search_host;
use crate::search::cache::ResultCache;
use crate::search::triangulation::{enumerate_triangulations, DEFAULT_MOP_CAP};

/// Most witnesses kept per result.
pub const WITNESS_CAP: usize = 16;

/// Exact value of `ex_OP(n, S_{p,q})` or `ex^c_OP(n, S_{p,q})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub mode: Mode,
    pub value: usize,
    /// graph6 of optimal graphs, one per isomorphism class, canonical
    /// labels sorted; the first is the canonical-least.
    pub witnesses: Vec<String>,
    /// Maximal outerplanar classes scanned (summed over component sizes in
    /// general mode).
    pub mop_count: usize,
    /// Wall time in milliseconds; zero when served from the cache.
    #[serde(default)]
    pub elapsed_ms: u64,
}

impl ExtremalResult {
    pub fn spec(&self) -> DoubleStarSpec {
        DoubleStarSpec::new(self.p, self.q).expect("results carry valid specs")
    }

    /// Everything except timing, for determinism comparisons.
    pub fn same_outcome(&self, other: &ExtremalResult) -> bool {
        (self.n, self.p, self.q, self.mode, self.value, &self.witnesses, self.mop_count)
            == (other.n, other.p, other.q, other.mode, other.value, &other.witnesses, other.mop_count)
    }

    pub fn witness_graphs(&self) -> Result<Vec<Graph>> {
        self.witnesses.iter().map(|w| graph6::decode(w)).collect()
    }

    /// Checks every stated property of the witnesses from scratch.
    pub fn validate(&self) -> Result<()> {
        let spec = self.spec();
        if self.n >= 2 && self.value > mop_edges(self.n) {
            return Err(Error::Domain(format!("value {} exceeds 2n-3", self.value)));
        }
        if self.witnesses.is_empty() {
            return Err(Error::Domain("no witness".into()));
        }
        for g in self.witness_graphs()? {
            let ok = g.order() == self.n
                && g.size() == self.value
                && is_outerplanar(&g)
                && is_double_star_free(&g, spec)
                && (self.mode == Mode::General || g.is_connected());
            if !ok {
                return Err(Error::Domain(format!("invalid witness {}", graph6::encode(&g))));
            }
        }
        Ok(())
    }
}

/// Search settings.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub workers: usize,
    /// Largest `n` searched.
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { workers: 1, cap: DEFAULT_MOP_CAP }
    }
}

type Key = (usize, usize, usize, Mode);

/// Runs and memoizes exact searches, optionally backed by a cache file.
pub struct Engine {
    config: SearchConfig,
    pool: rayon::ThreadPool,
    memo: Mutex<HashMap<Key, ExtremalResult>>,
    cache: Option<Mutex<ResultCache>>,
}

fn canonical_witnesses(graphs: impl IntoIterator<Item = Graph>) -> Vec<String> {
    let labels: BTreeSet<String> = graphs.into_iter().map(|g| canonical_form(&g).into_string()).collect();
    labels.into_iter().take(WITNESS_CAP).collect()
}

impl Engine {
    pub fn new(config: SearchConfig) -> Result<Self> {
        let workers = config.workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
        Ok(Engine { config: SearchConfig { workers, ..config }, pool, memo: Mutex::new(HashMap::new()), cache: None })
    }

    pub fn with_cache(mut self, cache: ResultCache) -> Self {
        self.cache = Some(Mutex::new(cache));
        self
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.config.cap {
            return Err(Error::ResourceCap { n, cap: self.config.cap, what: "exact search" });
        }
        Ok(())
    }

    fn lookup(&self, key: Key) -> Option<ExtremalResult> {
        if let Some(r) = self.memo.lock().expect("memo lock").get(&key) {
            return Some(r.clone());
        }
        let cache = self.cache.as_ref()?;
        let hit = cache.lock().expect("cache lock").get(key.0, key.1, key.2, key.3).cloned();
        if let Some(r) = &hit {
            self.memo.lock().expect("memo lock").insert(key, r.clone());
        }
        hit
    }

    fn store(&self, r: &ExtremalResult) -> Result<()> {
        self.memo.lock().expect("memo lock").insert((r.n, r.p, r.q, r.mode), r.clone());
        if let Some(cache) = &self.cache {
            cache.lock().expect("cache lock").insert(r.clone())?;
        }
        Ok(())
    }

    /// `ex^c_OP(n, S_{p,q})`.
    pub fn ex_connected(&self, n: usize, spec: DoubleStarSpec) -> Result<ExtremalResult> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        self.check_cap(n)?;
        let key = (n, spec.p(), spec.q(), Mode::Connected);
        if let Some(r) = self.lookup(key) {
            return Ok(r);
        }
        let start = Instant::now();
        let result = if n < 3 {
            // K1 and K2 are free of every double star
            ExtremalResult {
                n,
                p: spec.p(),
                q: spec.q(),
                mode: Mode::Connected,
                value: n - 1,
                witnesses: vec![graph6::encode(&Graph::complete(n))],
                mop_count: 1,
                elapsed_ms: 0,
            }
        } else {
            self.search_connected(n, spec)?
        };
        let result = ExtremalResult { elapsed_ms: start.elapsed().as_millis() as u64, ..result };
        self.store(&result)?;
        Ok(result)
    }

    fn search_connected(&self, n: usize, spec: DoubleStarSpec) -> Result<ExtremalResult> {
        let mops: Vec<Graph> = enumerate_triangulations(n, self.config.cap)?.iter().map(|t| t.to_graph()).collect();
        let seed = best_construction(n, spec, Mode::Connected)
            .filter(|g| g.order() == n && g.is_connected() && is_double_star_free(g, spec) && is_outerplanar(g))
            .map(|g| g.size())
            .unwrap_or(0);
        let shared = AtomicUsize::new(seed);
        let outcomes: Vec<_> =
            self.pool.install(|| mops.par_iter().map(|m| search_host(m, spec, true, &shared)).collect());
        let value = outcomes.iter().flatten().map(|o| o.value).max().ok_or_else(|| {
            Error::Domain(format!("no connected {spec}-free spanning subgraph reached the seed value {seed}"))
        })?;
        debug_assert_eq!(value, shared.load(Ordering::Relaxed));
        let witnesses = canonical_witnesses(outcomes.into_iter().flatten().filter(|o| o.value == value).map(|o| o.witness));
        Ok(ExtremalResult {
            n,
            p: spec.p(),
            q: spec.q(),
            mode: Mode::Connected,
            value,
            witnesses,
            mop_count: mops.len(),
            elapsed_ms: 0,
        })
    }

    /// `ex_OP(n, S_{p,q})` by combining connected values over component
    /// sizes; ties prefer fewer components.
    pub fn ex_general(&self, n: usize, spec: DoubleStarSpec) -> Result<ExtremalResult> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        self.check_cap(n)?;
        let key = (n, spec.p(), spec.q(), Mode::General);
        if let Some(r) = self.lookup(key) {
            return Ok(r);
        }
        let start = Instant::now();
        let connected: Vec<ExtremalResult> = (1..=n).map(|k| self.ex_connected(k, spec)).collect::<Result<_>>()?;
        let exc = |k: usize| connected[k - 1].value;

        // best[m] = (value, components) for m vertices
        let mut best = vec![(0usize, 0usize); n + 1];
        for m in 1..=n {
            let mut cur = (exc(m), 1);
            for k in 1..m {
                let cand = (exc(k) + best[m - k].0, 1 + best[m - k].1);
                if cand.0 > cur.0 || (cand.0 == cur.0 && cand.1 < cur.1) {
                    cur = cand;
                }
            }
            best[m] = cur;
        }

        let mut witness_memo: HashMap<usize, Vec<Graph>> = HashMap::new();
        let witnesses = self.assemble(n, &connected, &best, &mut witness_memo)?;
        let result = ExtremalResult {
            n,
            p: spec.p(),
            q: spec.q(),
            mode: Mode::General,
            value: best[n].0,
            witnesses: canonical_witnesses(witnesses),
            mop_count: connected.iter().map(|r| r.mop_count).sum(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        self.store(&result)?;
        Ok(result)
    }

    /// All optimal disjoint unions for `m` vertices with the optimal
    /// component count, capped.
    fn assemble(
        &self,
        m: usize,
        connected: &[ExtremalResult],
        best: &[(usize, usize)],
        memo: &mut HashMap<usize, Vec<Graph>>,
    ) -> Result<Vec<Graph>> {
        if let Some(w) = memo.get(&m) {
            return Ok(w.clone());
        }
        let (value, comps) = best[m];
        let mut out: Vec<Graph> = Vec::new();
        if comps == 1 && connected[m - 1].value == value {
            out.extend(connected[m - 1].witness_graphs()?);
        }
        for k in 1..m {
            if connected[k - 1].value + best[m - k].0 == value && 1 + best[m - k].1 == comps {
                let rest = self.assemble(m - k, connected, best, memo)?;
                for a in connected[k - 1].witness_graphs()? {
                    for b in &rest {
                        out.push(a.disjoint_union(b)?);
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        out.retain(|g| seen.insert(canonical_form(g)));
        out.sort_by_cached_key(canonical_form);
        out.truncate(WITNESS_CAP);
        memo.insert(m, out.clone());
        Ok(out)
    }

    pub fn ex(&self, n: usize, spec: DoubleStarSpec, mode: Mode) -> Result<ExtremalResult> {
        match mode {
            Mode::Connected => self.ex_connected(n, spec),
            Mode::General => self.ex_general(n, spec),
        }
    }
}

/// One-shot connected search with default settings.
pub fn ex_connected(n: usize, spec: DoubleStarSpec) -> Result<ExtremalResult> {
    Engine::new(SearchConfig::default())?.ex_connected(n, spec)
}

/// One-shot general search with default settings.
pub fn ex_general(n: usize, spec: DoubleStarSpec) -> Result<ExtremalResult> {
    Engine::new(SearchConfig::default())?.ex_general(n, spec)
}
