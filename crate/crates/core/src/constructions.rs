//! Extremal families and closed-form values.
//!
//! All constructors are deterministic. Properties that the families are
//! supposed to have (edge counts, maximum degree, freeness) are checked by
//! the test suites rather than assumed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::doublestar::DoubleStarSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `⌊3(n-1)/2⌋`, the connected `S_{2,2}` value.
pub fn h_formula(n: usize) -> usize {
    3 * n.saturating_sub(1) / 2
}

/// The `S_{2,3}` lower-bound value, cased on `n mod 6`.
pub fn f_formula(n: usize) -> Result<usize> {
    if n < 6 {
        return Err(Error::Domain(format!("f(n) is defined for n >= 6, got {n}")));
    }
    let i = n % 6;
    let numerator = match i {
        0 => 5 * n - 3,
        1 => 5 * n - 5,
        _ => 5 * n + i - 9,
    };
    debug_assert_eq!(numerator % 3, 0);
    Ok(numerator / 3)
}

/// `max{0, 2n-3}`, the edge count of a maximal outerplanar graph.
pub fn mop_edges(n: usize) -> usize {
    (2 * n).saturating_sub(3)
}

/// The closed forms that appear as extremal values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaKind {
    /// `⌊3(n-1)/2⌋`
    H,
    /// residue formula mod 6
    F,
    /// `max{0, 2n-3}` below the order of the double star
    SmallN,
    /// `2n - 3`
    TwoNMinus3,
}

impl FormulaKind {
    pub fn evaluate(self, n: usize) -> Result<usize> {
        match self {
            FormulaKind::H => Ok(h_formula(n)),
            FormulaKind::F => f_formula(n),
            FormulaKind::SmallN | FormulaKind::TwoNMinus3 => Ok(mop_edges(n)),
        }
    }
}

/// The fan `K_1 + P_{k-1}`: apex 0 joined to the path `1 - 2 - ... - (k-1)`.
pub fn fan_mop(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Domain("fan needs at least one vertex".into()));
    }
    Graph::path(k - 1).with_apex()
}

/// `K_1 + (⌊(n-1)/2⌋ K_2 ∪ ε K_1)`: apex 0, matched pairs `(1,2), (3,4), ...`
/// and, for even `n`, a final vertex attached to the apex only.
#[allow(non_snake_case)]
pub fn construct_Gn(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::Domain(format!("G_n is defined for n >= 6, got {n}")));
    }
    let mut g = Graph::try_empty(n)?;
    for v in 1..n {
        g.add_edge(0, v);
    }
    for k in 0..(n - 1) / 2 {
        g.add_edge(2 * k + 1, 2 * k + 2);
    }
    Ok(g)
}

/// Two disjoint fans on five vertices.
pub fn construct_two_m5() -> Graph {
    let m5 = fan_mop(5).expect("static size");
    m5.disjoint_union(&m5).expect("10 vertices")
}

/// `T_n = K_1 + P_{n-1}`.
#[allow(non_snake_case)]
pub fn construct_Tn(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("T_n is defined for n >= 3, got {n}")));
    }
    fan_mop(n)
}

/// Chords of the serpentine triangulation of the `n`-gon `0..n`: the zigzag
/// `v1v3, v3vn, vnv4, v4v(n-1), ...` in 1-based polygon labels.
pub fn serpentine_chords(n: usize) -> Vec<(usize, usize)> {
    if n < 4 {
        return Vec::new();
    }
    let mut seq = vec![1, 3];
    let (mut front, mut back) = (4, n);
    let mut take_back = true;
    while seq.len() < n - 2 {
        if take_back {
            seq.push(back);
            back -= 1;
        } else {
            seq.push(front);
            front += 1;
        }
        take_back = !take_back;
    }
    seq.windows(2).map(|w| (w[0].min(w[1]) - 1, w[0].max(w[1]) - 1)).collect()
}

/// Maximal outerplanar graph of maximum degree 4: the serpentine
/// triangulation on the outer cycle `0 - 1 - ... - (n-1)`.
#[allow(non_snake_case)]
pub fn construct_On(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::Domain(format!("O_n needs n >= 5 to reach maximum degree 4, got {n}")));
    }
    let mut g = Graph::try_empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    for (a, b) in serpentine_chords(n) {
        g.add_edge(a, b);
    }
    if g.max_degree() != 4 {
        return Err(Error::Domain(format!("serpentine on {n} vertices has maximum degree {}", g.max_degree())));
    }
    Ok(g)
}

/// The maximal outerplanar graph on six vertices with maximum degree 4:
/// hexagon `0..6` with chords `0-2, 2-5, 3-5`. Its two degree-2 vertices
/// are 1 and 4.
#[allow(non_snake_case)]
pub fn construct_H() -> Graph {
    let mut g = Graph::cycle(6);
    for (a, b) in [(0, 2), (2, 5), (3, 5)] {
        g.add_edge(a, b);
    }
    g
}

/// Degree-2 vertices of `g` in increasing label order.
pub fn degree_two_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == 2).collect()
}

/// The chain `H_i'`: `t` copies of `H` linked port to port, plus for
/// `i >= 1` a fan on `i` vertices hung from the last free port.
#[allow(non_snake_case)]
pub fn construct_Hprime(t: usize, i: usize) -> Result<Graph> {
    if t < 1 {
        return Err(Error::Domain("H' needs t >= 1".into()));
    }
    if i > 5 {
        return Err(Error::Domain(format!("H'_i is defined for i in 0..=5, got {i}")));
    }
    let h = construct_H();
    let ports = degree_two_vertices(&h);
    let (u, v) = (ports[0], ports[1]);
    let mut g = Graph::try_empty(0)?;
    for copy in 0..t {
        g = g.disjoint_union(&h)?;
        if copy > 0 {
            g.add_edge(6 * (copy - 1) + v, 6 * copy + u);
        }
    }
    if i >= 1 {
        let m = fan_mop(i)?;
        let attach = (0..i).find(|&w| m.degree(w) <= 2).expect("fans have a vertex of degree at most 2");
        g = g.disjoint_union(&m)?;
        g.add_edge(6 * (t - 1) + v, 6 * t + attach);
    }
    Ok(g)
}
/// Whether the maximum ranges over connected graphs only or over all graphs.
/// Which family a formula value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Connected,
    General,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Connected => "connected",
            Mode::General => "general",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "connected" => Ok(Mode::Connected),
            "general" => Ok(Mode::General),
            other => Err(Error::Domain(format!("unknown mode {other:?}; expected connected or general"))),
        }
    }
}

/// Known value of the outerplanar Turán number at one `(n, p, q, mode)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TuranValue {
    Exact { value: usize, source: String },
    LowerBound { value: usize, source: String },
    Unknown { reason: String },
}

impl TuranValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            TuranValue::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Short text for report columns.
    pub fn describe(&self) -> String {
        match self {
            TuranValue::Exact { value, .. } => value.to_string(),
            TuranValue::LowerBound { value, .. } => format!(">={value}"),
            TuranValue::Unknown { .. } => "-".into(),
        }
    }

    pub fn source(&self) -> &str {
        match self {
            TuranValue::Exact { source, .. } | TuranValue::LowerBound { source, .. } => source,
            TuranValue::Unknown { reason } => reason,
        }
    }
}

/// Closed-form value where a proven result applies, a lower bound for
/// `S_{2,3}` from `n = 7` on, and `Unknown` elsewhere.
pub fn turan_formula(n: usize, spec: DoubleStarSpec, mode: Mode) -> TuranValue {
    let (p, q) = (spec.p(), spec.q());
    if n <= p + q + 1 {
        return TuranValue::Exact {
            value: mop_edges(n),
            source: format!("n <= p+q+1 = {}: every maximal outerplanar graph is free", p + q + 1),
        };
    }
    if (p, q) == (2, 2) {
        // n >= 6 here
        return match (mode, n) {
            (Mode::General, 10) => TuranValue::Exact { value: 14, source: "S(2,2), n = 10: witness 2M5".into() },
            (Mode::Connected, _) => TuranValue::Exact {
                value: h_formula(n),
                source: "connected S(2,2), n >= 6: floor(3(n-1)/2)".into(),
            },
            (Mode::General, _) => TuranValue::Exact {
                value: h_formula(n),
                source: "S(2,2), n >= 6, n != 10: floor(3(n-1)/2)".into(),
            },
        };
    }
    if p >= 2 && (p >= 3 || q >= 4) {
        return TuranValue::Exact {
            value: mop_edges(n),
            source: "q >= p >= 2, p >= 3 or q >= 4, n >= p+q+2: 2n-3 (witnesses T_n / O_n are connected)".into(),
        };
    }
    if (p, q) == (2, 3) {
        // n >= 7 here
        let value = f_formula(n).expect("n >= 7");
        return TuranValue::LowerBound { value, source: "S(2,3), n >= 7: chain construction H'_i".into() };
    }
    TuranValue::Unknown { reason: format!("no closed form for p = {p} (needs q >= p >= 2 and n >= p+q+2)") }
}

/// A free graph with the best known edge count for seeding exact searches.
pub fn best_construction(n: usize, spec: DoubleStarSpec, mode: Mode) -> Option<Graph> {
    let (p, q) = (spec.p(), spec.q());
    if n == 0 {
        return None;
    }
    if n <= p + q + 1 {
        return fan_mop(n).ok();
    }
    match (p, q) {
        (2, 2) if mode == Mode::General && n == 10 => Some(construct_two_m5()),
        (2, 2) => construct_Gn(n).ok(),
        (2, 3) => construct_Hprime(n / 6, n % 6).ok(),
        (3, 3) => construct_Tn(n).ok(),
        _ if p >= 3 => construct_Tn(n).ok(),
        _ if q >= 4 => construct_On(n).ok(),
        _ => None,
    }
}
