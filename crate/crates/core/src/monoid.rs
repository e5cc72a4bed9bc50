//! Monoid action of simple roots on orbits through their pairs, root-type
//! classification, and weak-order generation from the closed orbits.
//!
//! A root acts on `(w, u*)` coordinatewise: left roots multiply both
//! coordinates on the left by the same reflection, right roots multiply `w`
//! by `s_α` and `u*` by the twisted reflection `σ s_α σ⁻¹`, each coordinate
//! moving only when its length (standard for `w`, twisted for `u*`) grows.
//! The root type records which coordinates moved.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::pairs::ShareshianPair;
use crate::perm::{star_of_root, Permutation, RootLabel, RootSide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootType {
    /// Both coordinates advance; the orbit moves and the hat set is kept.
    ComplexStable,
    /// Exactly one coordinate advances; the orbit moves and the hat set
    /// grows by one.
    NonCompact,
    /// Neither coordinate advances; the orbit is fixed.  The pair does not
    /// separate real from complex-unstable roots, so they share a value.
    RealOrUnstable,
}

impl RootType {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootType::ComplexStable => "complex_stable",
            RootType::NonCompact => "non_compact",
            RootType::RealOrUnstable => "real_or_unstable",
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One application of a root to an orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub source: ShareshianPair,
    pub root: RootLabel,
    pub target: ShareshianPair,
    pub root_type: RootType,
}

impl MoveRecord {
    /// Whether the move changed the orbit; productive moves raise the
    /// dimension by exactly one.
    pub fn is_productive(&self) -> bool {
        self.target != self.source
    }

    /// One JSON line `{"source": ..., "root": {...}, "type": ..., "target": ...}`.
    pub fn to_json_line(&self) -> String {
        format!(
            "{{\"source\":\"{}\",\"root\":{{\"side\":\"{}\",\"index\":{}}},\"type\":\"{}\",\"target\":\"{}\"}}",
            self.source, self.root.side, self.root.index, self.root_type, self.target
        )
    }
}

/// Applies a root to an orbit pair.  Each coordinate moves exactly when the
/// matching length predicate grows; targets are always valid pairs and the
/// action is idempotent per root.
pub fn act(root: RootLabel, pair: &ShareshianPair) -> Result<MoveRecord> {
    let n = pair.degree();
    root.check_degree(n)?;
    let w = pair.w();
    let u_star = pair.u_star();
    let s = Permutation::simple(n, root.index);
    let (stable_w, moved_w, stable_u, moved_u) = match root.side {
        RootSide::LeftK => {
            let mw = s.compose(w)?;
            let mu = s.compose(u_star)?;
            (
                mw.length() > w.length(),
                mw,
                mu.star_length() > u_star.star_length(),
                mu,
            )
        }
        RootSide::RightG => {
            let s_star = star_of_root(root.index, n)?;
            let mw = w.compose(&s)?;
            let mu = u_star.compose(&s_star)?;
            (
                mw.length() > w.length(),
                mw,
                mu.star_length() > u_star.star_length(),
                mu,
            )
        }
    };
    let root_type = match (stable_w, stable_u) {
        (true, true) => RootType::ComplexStable,
        (false, false) => RootType::RealOrUnstable,
        _ => RootType::NonCompact,
    };
    let target = ShareshianPair::new(
        if stable_w { moved_w } else { w.clone() },
        if stable_u { moved_u } else { u_star.clone() },
    )?;
    Ok(MoveRecord {
        source: pair.clone(),
        root,
        target,
        root_type,
    })
}

/// The `n` zero-dimensional orbits: the pair of the `i`-th one is
/// `(s_{n−1}⋯s_i, s*_1⋯s*_{i−1})`, the label of the flag obtained by
/// inserting `e_n` at position `i` of the plain ascending flag.
pub fn closed_orbits(n: usize) -> Result<Vec<ShareshianPair>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut w = Permutation::identity(n);
        for j in (i..n).rev() {
            w = w.mul(&Permutation::simple(n, j));
        }
        let mut u_star = Permutation::identity(n);
        for j in 1..i {
            u_star = u_star.mul(&star_of_root(j, n)?);
        }
        out.push(ShareshianPair::new(w, u_star)?);
    }
    Ok(out)
}

/// Closure of the closed orbits under the action of every root; breadth
/// first, so an orbit first appears at the search depth equal to its
/// dimension.
pub fn generate_from_closed(n: usize) -> Result<BTreeSet<ShareshianPair>> {
    let roots = RootLabel::all(n);
    let mut seen: BTreeSet<ShareshianPair> = closed_orbits(n)?.into_iter().collect();
    let mut queue: VecDeque<ShareshianPair> = seen.iter().cloned().collect();
    while let Some(pair) = queue.pop_front() {
        for &root in &roots {
            let target = act(root, &pair)?.target;
            if seen.insert(target.clone()) {
                queue.push_back(target);
            }
        }
    }
    Ok(seen)
}

/// Hat-set bookkeeping of a move: non-compact moves grow the hat set by
/// exactly one element, complex-stable moves keep it, fixed moves are
/// vacuous.  Returns `false` on violation.
pub fn check_delta_growth(record: &MoveRecord) -> bool {
    let before = record.source.delta().size();
    let after = record.target.delta().size();
    match record.root_type {
        RootType::NonCompact => after == before + 1,
        RootType::ComplexStable => after == before,
        RootType::RealOrUnstable => true,
    }
}
