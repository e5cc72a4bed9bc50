//! Whole-poset assembly: every orbit with all of its labels, the closure
//! order and its Hasse diagram with monoid-move annotations, DOT and JSON
//! exports, and the cross-verification suite that replays the theory's
//! identities against independent oracles at a given degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::{enumerate_flags, pair_to_flag, RankProfile, StandardFlag};
use crate::monoid::{act, check_delta_growth, generate_from_closed, RootType};
use crate::pairs::{
    enumerate_decorated, enumerate_pairs, DecoratedPermutation, ShareshianPair, StandardizedPair,
};
use crate::perm::{RootLabel, RootSide};

/// One orbit with its four labels and its dimension.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    pub id: usize,
    pub pair: ShareshianPair,
    pub standardized: StandardizedPair,
    pub decorated: DecoratedPermutation,
    pub flag: StandardFlag,
    pub dim: usize,
}

/// A covering relation of the closure order.  `moves` lists every root
/// whose action carries the lower orbit to the upper one; it may be empty,
/// since Bruhat covers in the product order need not come from the monoid.
#[derive(Clone, Debug)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub moves: Vec<(RootLabel, RootType)>,
}

/// The full closure order on the orbits of one degree.
pub struct OrbitPoset {
    n: usize,
    records: Vec<OrbitRecord>,
    leq: BitRows,
    covers: Vec<HasseEdge>,
}

impl OrbitPoset {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn records(&self) -> &[OrbitRecord] {
        &self.records
    }

    pub fn covers(&self) -> &[HasseEdge] {
        &self.covers
    }

    /// Whether orbit `a` lies in the closure of orbit `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }
}

struct BitRows {
    stride: usize,
    words: Vec<u64>,
}

impl BitRows {
    fn new(v: usize) -> Self {
        let stride = v.div_ceil(64);
        Self {
            stride,
            words: vec![0; v * stride],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }
}

/// One record per orbit, ids following the pair enumeration order.
pub fn build_atlas(n: usize) -> Result<Vec<OrbitRecord>> {
    let pairs = enumerate_pairs(n)?;
    Ok(pairs
        .into_iter()
        .enumerate()
        .map(|(id, pair)| OrbitRecord {
            standardized: pair.standardize(),
            decorated: pair.to_decorated(),
            flag: pair_to_flag(&pair),
            dim: pair.dimension(),
            pair,
            id,
        })
        .collect())
}

/// Builds the closure order, reduces it to Hasse covers, and annotates each
/// cover with every monoid move realizing it.
pub fn build_poset(n: usize) -> Result<OrbitPoset> {
    let records = build_atlas(n)?;
    let v = records.len();
    let tables: Vec<_> = records
        .iter()
        .map(|r| {
            let std = &r.standardized;
            (std.w().rank_table(), std.u().rank_table())
        })
        .collect();
    let mut leq = BitRows::new(v);
    for i in 0..v {
        for j in 0..v {
            let below = crate::perm::dominates(&tables[i].0, &tables[j].0)
                && crate::perm::dominates(&tables[i].1, &tables[j].1);
            if below {
                leq.set(i, j);
            }
        }
    }
    // strict successor/predecessor rows for the transitive reduction
    let mut succ = BitRows::new(v);
    let mut pred = BitRows::new(v);
    for i in 0..v {
        for j in 0..v {
            if i != j && leq.get(i, j) {
                debug_assert!(!leq.get(j, i), "closure order must be antisymmetric");
                succ.set(i, j);
                pred.set(j, i);
            }
        }
    }
    let roots = RootLabel::all(n);
    let mut covers = Vec::new();
    for i in 0..v {
        for j in 0..v {
            if !succ.get(i, j) {
                continue;
            }
            let blocked = succ.row(i).iter().zip(pred.row(j)).any(|(a, b)| a & b != 0);
            if blocked {
                continue;
            }
            let moves = roots
                .iter()
                .filter_map(|&root| {
                    let mv = act(root, &records[i].pair).expect("root valid for degree");
                    (mv.target == records[j].pair).then_some((root, mv.root_type))
                })
                .collect();
            covers.push(HasseEdge {
                lower: i,
                upper: j,
                moves,
            });
        }
    }
    Ok(OrbitPoset {
        n,
        records,
        leq,
        covers,
    })
}

fn node_label(record: &OrbitRecord) -> String {
    record.standardized.letter_label()
}

/// DOT rendering: one rank per dimension, standardized-pair labels, edge
/// color blue for complex-stable moves, red for non-compact moves, green
/// for covers with no move; dashed edges are realized only by left roots.
pub fn export_dot(poset: &OrbitPoset) -> String {
    let mut out = String::new();
    out.push_str("digraph orbit_poset {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box];\n");
    let max_dim = poset.records.iter().map(|r| r.dim).max().unwrap_or(0);
    for dim in 0..=max_dim {
        out.push_str("  { rank=same;");
        for r in &poset.records {
            if r.dim == dim {
                out.push_str(&format!(" o{} [label=\"{}\"];", r.id, node_label(r)));
            }
        }
        out.push_str(" }\n");
    }
    for edge in &poset.covers {
        let (color, style, label) = edge_attributes(edge);
        out.push_str(&format!(
            "  o{} -> o{} [color={color}, style={style}{}];\n",
            edge.lower,
            edge.upper,
            label
                .map(|l| format!(", label=\"{l}\""))
                .unwrap_or_default(),
        ));
    }
    out.push_str("}\n");
    out
}

fn edge_attributes(edge: &HasseEdge) -> (&'static str, &'static str, Option<String>) {
    let right = edge
        .moves
        .iter()
        .find(|(root, _)| root.side == RootSide::RightG);
    let chosen = right.or_else(|| edge.moves.first());
    match chosen {
        None => ("green", "solid", None),
        Some(&(root, kind)) => {
            let color = match kind {
                RootType::ComplexStable => "blue",
                RootType::NonCompact => "red",
                RootType::RealOrUnstable => unreachable!("fixed moves never realize a cover"),
            };
            let style = match root.side {
                RootSide::RightG => "solid",
                RootSide::LeftK => "dashed",
            };
            let prefix = match root.side {
                RootSide::RightG => "r",
                RootSide::LeftK => "l",
            };
            (color, style, Some(format!("{prefix}{}", root.index)))
        }
    }
}

#[derive(Serialize)]
struct PosetJson {
    n: usize,
    orbits: Vec<OrbitJson>,
    covers: Vec<CoverJson>,
}

#[derive(Serialize)]
struct OrbitJson {
    id: usize,
    w: String,
    ustar: String,
    u: String,
    delta: Vec<usize>,
    dim: usize,
    flag: String,
}

#[derive(Serialize)]
struct CoverJson {
    lower: usize,
    upper: usize,
    moves: Vec<MoveJson>,
}

#[derive(Serialize)]
struct MoveJson {
    side: String,
    index: usize,
    #[serde(rename = "type")]
    kind: String,
}

fn orbit_json(record: &OrbitRecord) -> OrbitJson {
    OrbitJson {
        id: record.id,
        w: record.pair.w().to_string(),
        ustar: record.pair.u_star().to_string(),
        u: record.standardized.u().to_string(),
        delta: record.decorated.delta().elems().to_vec(),
        dim: record.dim,
        flag: record.flag.to_string(),
    }
}

/// JSON rendering of the poset; byte-stable for a fixed degree.
pub fn export_json(poset: &OrbitPoset) -> String {
    let doc = PosetJson {
        n: poset.n,
        orbits: poset.records.iter().map(orbit_json).collect(),
        covers: poset
            .covers
            .iter()
            .map(|edge| CoverJson {
                lower: edge.lower,
                upper: edge.upper,
                moves: edge
                    .moves
                    .iter()
                    .map(|&(root, kind)| MoveJson {
                        side: root.side.to_string(),
                        index: root.index,
                        kind: kind.as_str().to_string(),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("poset serialization cannot fail");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct OrbitListJson {
    n: usize,
    orbits: Vec<OrbitJson>,
}

/// JSON rendering of an orbit list without the order relation.
pub fn orbits_json(n: usize, records: &[OrbitRecord]) -> String {
    let doc = OrbitListJson {
        n,
        orbits: records.iter().map(orbit_json).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("orbit serialization cannot fail");
    text.push('\n');
    text
}

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckReport {
    fn pass(name: &'static str) -> Self {
        Self {
            name,
            passed: true,
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Dimension formula, weak-order generation, and the word-shape and
    /// hat-set sweeps.
    Quick,
    /// Everything, including the all-pairs closure-order comparison.
    Full,
}

/// Report of a verification run; rendering gives one line per check.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<CheckReport>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            match &check.detail {
                Some(detail) if !check.passed => {
                    out.push_str(&format!("FAIL {}: {detail}\n", check.name))
                }
                _ => out.push_str(&format!("PASS {}\n", check.name)),
            }
        }
        for note in &self.notes {
            out.push_str(&format!("INFO {note}\n"));
        }
        out.push_str(if self.all_passed() {
            "RESULT pass\n"
        } else {
            "RESULT fail\n"
        });
        out
    }
}

/// The two closure criteria — rank-invariant domination on flags and the
/// product Bruhat order on pairs — must agree on every ordered pair of
/// orbits.
pub fn check_closure_equivalence(records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "closure-order-equivalence";
    let profiles: Vec<RankProfile> = records.iter().map(|r| r.flag.rank_profile()).collect();
    for a in records {
        for b in records {
            let by_rank = profiles[a.id].magyar_leq(&profiles[b.id]);
            let by_pair = a
                .pair
                .closure_leq(&b.pair)
                .expect("records share one degree");
            if by_rank != by_pair {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "orbits {} and {}: rank criterion says {by_rank}, pair order says {by_pair}",
                        a.id, b.id
                    ),
                );
            }
        }
    }
    CheckReport::pass(NAME)
}

/// The stabilizer oracle must reproduce the pair dimension formula on every
/// orbit.
pub fn check_dimension_formula(records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "dimension-formula";
    for r in records {
        let by_stabilizer = r.flag.stabilizer_dim();
        let by_pair = r.pair.dimension();
        if by_stabilizer != by_pair || by_pair != r.dim {
            return CheckReport::fail(
                NAME,
                format!(
                    "orbit {} ({}): stabilizer gives {by_stabilizer}, pair formula gives {by_pair}",
                    r.id, r.pair
                ),
            );
        }
    }
    CheckReport::pass(NAME)
}

/// The rank identity `r*_{p,q+1} = r̄_{p,q}` must hold on every flag.
pub fn check_rank_identity(records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "rank-identity";
    for r in records {
        if !r.flag.check_rstar_rbar() {
            return CheckReport::fail(NAME, format!("orbit {} flag {}", r.id, r.flag));
        }
    }
    CheckReport::pass(NAME)
}

/// Closing the zero-dimensional orbits under all monoid moves must yield
/// exactly the enumerated orbit set.
pub fn check_generation(n: usize, records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "weak-order-generation";
    let generated = match generate_from_closed(n) {
        Ok(set) => set,
        Err(e) => return CheckReport::fail(NAME, e.to_string()),
    };
    let enumerated: std::collections::BTreeSet<_> =
        records.iter().map(|r| r.pair.clone()).collect();
    if generated != enumerated {
        let missing = enumerated.difference(&generated).count();
        let extra = generated.difference(&enumerated).count();
        return CheckReport::fail(
            NAME,
            format!("{missing} enumerated orbits unreachable, {extra} generated pairs unknown"),
        );
    }
    CheckReport::pass(NAME)
}

/// Every orbit's `u w⁻¹` must have the omitted-generator word shape.
pub fn check_word_shape(records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "omitted-word-shape";
    for r in records {
        if !r.pair.check_omitted_word() {
            return CheckReport::fail(NAME, format!("orbit {} ({})", r.id, r.pair));
        }
    }
    CheckReport::pass(NAME)
}

/// Every move from every orbit must respect the hat-set growth law.
pub fn check_delta_growth_sweep(records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "delta-growth";
    for r in records {
        for root in RootLabel::all(r.pair.degree()) {
            let mv = act(root, &r.pair).expect("root valid for degree");
            if !check_delta_growth(&mv) {
                return CheckReport::fail(NAME, format!("orbit {} under {root}", r.id));
            }
        }
    }
    CheckReport::pass(NAME)
}

/// The three parameterizations must count the same orbits and the passages
/// between them must round-trip to the identity everywhere.
pub fn check_round_trips(n: usize, records: &[OrbitRecord]) -> CheckReport {
    const NAME: &str = "bijection-round-trips";
    let flags = match enumerate_flags(n) {
        Ok(f) => f,
        Err(e) => return CheckReport::fail(NAME, e.to_string()),
    };
    let decorated = match enumerate_decorated(n) {
        Ok(d) => d,
        Err(e) => return CheckReport::fail(NAME, e.to_string()),
    };
    if flags.len() != records.len() || decorated.len() != records.len() {
        return CheckReport::fail(
            NAME,
            format!(
                "parameterization counts differ: {} flags, {} pairs, {} decorated",
                flags.len(),
                records.len(),
                decorated.len()
            ),
        );
    }
    for f in &flags {
        if pair_to_flag(&f.to_pair()) != *f {
            return CheckReport::fail(NAME, format!("flag {f} does not round-trip"));
        }
    }
    for r in records {
        if pair_to_flag(&r.pair).to_pair() != r.pair
            || r.pair.to_decorated().to_pair() != r.pair
            || r.standardized.destandardize() != r.pair
        {
            return CheckReport::fail(NAME, format!("orbit {} does not round-trip", r.id));
        }
    }
    CheckReport::pass(NAME)
}

/// Runs the verification suite at the given degree.
pub fn verify(n: usize, level: VerifyLevel) -> Result<VerifyReport> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let records = build_atlas(n)?;
    let mut checks = Vec::new();
    if level == VerifyLevel::Full {
        checks.push(check_closure_equivalence(&records));
    }
    checks.push(check_dimension_formula(&records));
    if level == VerifyLevel::Full {
        checks.push(check_rank_identity(&records));
    }
    checks.push(check_generation(n, &records));
    checks.push(check_word_shape(&records));
    checks.push(check_delta_growth_sweep(&records));
    if level == VerifyLevel::Full {
        checks.push(check_round_trips(n, &records));
    }

    let mut notes = Vec::new();
    if let Some(full) = records.iter().find(|r| r.decorated.delta().size() == n) {
        notes.push(format!(
            "unique orbit with full hat set 1..={n}: {} (standardized {})",
            full.pair,
            full.standardized.letter_label()
        ));
    }
    if level == VerifyLevel::Full {
        let poset = build_poset(n)?;
        let moveless: Vec<&HasseEdge> = poset
            .covers()
            .iter()
            .filter(|e| e.moves.is_empty())
            .collect();
        let max_gap = moveless
            .iter()
            .map(|e| poset.records()[e.upper].dim - poset.records()[e.lower].dim)
            .max()
            .unwrap_or(0);
        notes.push(format!(
            "{} of {} covers carry no monoid move; largest dimension gap among them is {max_gap}",
            moveless.len(),
            poset.covers().len()
        ));
    }
    Ok(VerifyReport { n, checks, notes })
}
