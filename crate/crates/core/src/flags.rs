//! Standard-form flags, the torus-fixed flags of their two Borel orbits,
//! exact rank invariants, the rank-based closure criterion, and a
//! stabilizer-based dimension oracle.
//!
//! A standard-form flag is a chain of `n` vectors, each a standard basis
//! vector `e_i` or a hat vector `ê_i = e_i + e_n` (`i < n`), such that `e_n`
//! occurs, everything after `e_n` is a plain vector, and hat indices
//! strictly decrease along the flag.  These flags are canonical orbit
//! representatives; all linear algebra here is exact over the integers.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::pairs::ShareshianPair;
use crate::perm::{sigma_unchecked, Permutation};

/// One vector of a standard-form flag: `Std(i)` is `e_i`, `Hat(i)` is
/// `e_i + e_n` (only defined for `i < n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlagVector {
    Std(usize),
    Hat(usize),
}

impl FlagVector {
    pub fn index(&self) -> usize {
        match *self {
            FlagVector::Std(i) | FlagVector::Hat(i) => i,
        }
    }

    pub fn is_hat(&self) -> bool {
        matches!(self, FlagVector::Hat(_))
    }

    fn coordinates(&self, n: usize) -> Vec<i128> {
        let mut row = vec![0; n];
        row[self.index() - 1] = 1;
        if self.is_hat() {
            row[n - 1] = 1;
        }
        row
    }
}

impl fmt::Display for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagVector::Std(i) => write!(f, "e{i}"),
            FlagVector::Hat(i) => write!(f, "h{i}"),
        }
    }
}

/// A flag in standard form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardFlag {
    vectors: Vec<FlagVector>,
}

impl fmt::Display for StandardFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vectors {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl StandardFlag {
    /// Validates the standard-form conditions: indices exhaust `1..=n` (so
    /// the vectors are linearly independent and `e_n` occurs exactly once),
    /// no hat vector of index `n`, only plain vectors after `e_n`, and hat
    /// indices strictly decreasing.
    pub fn new(vectors: Vec<FlagVector>) -> Result<Self> {
        let n = vectors.len();
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        let mut seen = vec![false; n + 1];
        for v in &vectors {
            let i = v.index();
            if i < 1 || i > n || seen[i] {
                return Err(Error::InvalidFlag(format!(
                    "indices must exhaust 1..={n} exactly once"
                )));
            }
            if v.is_hat() && i == n {
                return Err(Error::InvalidFlag(format!(
                    "hat index {i} must be below {n}"
                )));
            }
            seen[i] = true;
        }
        let en_pos = vectors
            .iter()
            .position(|v| *v == FlagVector::Std(n))
            .expect("index n occurs and cannot be a hat");
        if vectors[en_pos + 1..].iter().any(FlagVector::is_hat) {
            return Err(Error::InvalidFlag(
                "every vector after e_n must be a standard basis vector".into(),
            ));
        }
        let hat_indices: Vec<usize> = vectors
            .iter()
            .filter(|v| v.is_hat())
            .map(FlagVector::index)
            .collect();
        if !hat_indices.windows(2).all(|p| p[0] > p[1]) {
            return Err(Error::InvalidFlag(
                "hat indices must strictly decrease along the flag".into(),
            ));
        }
        Ok(Self { vectors })
    }

    pub fn degree(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[FlagVector] {
        &self.vectors
    }

    fn en_position(&self) -> usize {
        let n = self.degree();
        self.vectors
            .iter()
            .position(|v| *v == FlagVector::Std(n))
            .expect("validated at construction")
    }

    /// Parses `"h2,h1,e3"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let vectors = text
            .trim()
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (kind, idx) = tok.split_at(1.min(tok.len()));
                let index = idx
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad flag token {tok:?}")))?;
                match kind {
                    "e" => Ok(FlagVector::Std(index)),
                    "h" => Ok(FlagVector::Hat(index)),
                    _ => Err(Error::Parse(format!(
                        "bad flag token {tok:?}, expected e<i> or h<i>"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if vectors.len() != n {
            return Err(Error::Parse(format!(
                "flag {text:?} has {} vectors, expected {n}",
                vectors.len()
            )));
        }
        Self::new(vectors)
    }

    /// The `w` with `w(𝓔₊)` the unique torus-fixed flag in the standard
    /// Borel orbit through this flag: `e_n` moves to the earliest hat
    /// position and each hat index shifts one hat position later, with the
    /// last landing where `e_n` was.
    pub fn tilde_flag(&self) -> Permutation {
        let n = self.degree();
        let mut window: Vec<usize> = self.vectors.iter().map(FlagVector::index).collect();
        let mut specials: Vec<usize> = self
            .vectors
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_hat())
            .map(|(pos, _)| pos)
            .collect();
        specials.push(self.en_position());
        let mut values = vec![n];
        values.extend(
            specials[..specials.len() - 1]
                .iter()
                .map(|&pos| window[pos]),
        );
        for (&pos, value) in specials.iter().zip(values) {
            window[pos] = value;
        }
        Permutation::from_window(window).expect("shifted indices still exhaust 1..=n")
    }

    /// The `u*` with `u*(𝓔*)` the unique torus-fixed flag in the twisted
    /// Borel orbit: each hat vector is replaced in place by its plain
    /// counterpart, so the window is the index sequence itself.
    pub fn star_flag(&self) -> Permutation {
        let window: Vec<usize> = self.vectors.iter().map(FlagVector::index).collect();
        let f_star = Permutation::from_window(window).expect("indices exhaust 1..=n");
        f_star.mul(&sigma_unchecked(self.degree()).inverse())
    }

    pub fn to_pair(&self) -> ShareshianPair {
        ShareshianPair::new(self.tilde_flag(), self.star_flag())
            .expect("a standard-form flag always labels an orbit")
    }

    /// Exact rank invariants of the flag.
    pub fn rank_profile(&self) -> RankProfile {
        let n = self.degree();
        let rows: Vec<Vec<i128>> = self.vectors.iter().map(|v| v.coordinates(n)).collect();
        let e_row = |i: usize| {
            let mut row = vec![0i128; n];
            row[i - 1] = 1;
            row
        };
        let dim_sum = |p: usize, q: usize, star: bool, with_line: bool| -> usize {
            let mut m: Vec<Vec<i128>> = rows[..p].to_vec();
            if star {
                if q >= 1 {
                    m.push(e_row(n));
                    for i in 1..q {
                        m.push(e_row(i));
                    }
                }
            } else {
                for i in 1..=q {
                    m.push(e_row(i));
                }
            }
            if with_line {
                m.push(e_row(n));
            }
            linalg::rank(m)
        };
        let size = n + 1;
        let mut r = vec![vec![0usize; size]; size];
        let mut r_star = vec![vec![0usize; size]; size];
        let mut delta = vec![vec![0usize; size]; size];
        let mut r_bar = vec![vec![0usize; size]; size];
        for p in 0..=n {
            for q in 0..=n {
                r[p][q] = p + q - dim_sum(p, q, false, false);
                r_star[p][q] = p + q - dim_sum(p, q, true, false);
                delta[p][q] = 1 - (dim_sum(p, q, false, true) - dim_sum(p, q, false, false));
                r_bar[p][q] = r[p][q] + delta[p][q];
            }
        }
        RankProfile {
            r,
            r_star,
            delta,
            r_bar,
        }
    }

    /// The identity `r*_{p,q+1} = r̄_{p,q}` for `p, q = 0..n−1`.
    pub fn check_rstar_rbar(&self) -> bool {
        self.rank_profile().rstar_matches_rbar()
    }

    /// Rank-based closure criterion: `self` lies in the closure of `other`
    /// iff its `r` and `r̄` invariants dominate the other's entrywise.
    pub fn magyar_leq(&self, other: &Self) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.rank_profile().magyar_leq(&other.rank_profile()))
    }

    /// Orbit dimension computed from the stabilizer: the dimension of the
    /// upper-triangular algebra of the embedded lower-rank group minus the
    /// dimension of its subalgebra fixing every subspace of the flag.  The
    /// kernel dimension comes from the exact rank of an integer constraint
    /// matrix, so this oracle is independent of the pair combinatorics.
    pub fn stabilizer_dim(&self) -> usize {
        let n = self.degree();
        // Inverse of the basis matrix whose columns are the flag vectors:
        // column j of the inverse is e_{pos(j)} − [j is a hat index] e_{pos(n)}.
        let mut pos_of_index = vec![0usize; n + 1];
        let mut hat_index = vec![false; n + 1];
        for (pos, v) in self.vectors.iter().enumerate() {
            pos_of_index[v.index()] = pos;
            hat_index[v.index()] = v.is_hat();
        }
        let mut t_inv = vec![vec![0i128; n]; n];
        for j in 1..=n {
            t_inv[pos_of_index[j]][j - 1] += 1;
            if j < n && hat_index[j] {
                t_inv[pos_of_index[n]][j - 1] -= 1;
            }
        }
        // Coefficient columns: one per matrix unit E_{ab}, a <= b <= n−1.
        let cols: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        // x stabilizes the flag iff x·v_m lies in V_m for each m, i.e. the
        // coordinates of x·v_m along flag vectors beyond position m vanish.
        let mut constraints = Vec::new();
        for (m, v) in self.vectors.iter().enumerate() {
            let coords = v.coordinates(n);
            for j in m + 1..n {
                let row: Vec<i128> = cols
                    .iter()
                    .map(|&(a, b)| t_inv[j][a - 1] * coords[b - 1])
                    .collect();
                constraints.push(row);
            }
        }
        linalg::rank(constraints)
    }
}

/// All standard-form flags of degree `n`, in a fixed deterministic order.
pub fn enumerate_flags(n: usize) -> Result<Vec<StandardFlag>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let mut out = Vec::new();
    let mut cur: Vec<FlagVector> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        n: usize,
        en_placed: bool,
        last_hat: usize,
        cur: &mut Vec<FlagVector>,
        used: &mut [bool],
        out: &mut Vec<StandardFlag>,
    ) {
        if cur.len() == n {
            out.push(StandardFlag {
                vectors: cur.clone(),
            });
            return;
        }
        for i in 1..n {
            if used[i] {
                continue;
            }
            used[i] = true;
            cur.push(FlagVector::Std(i));
            rec(n, en_placed, last_hat, cur, used, out);
            cur.pop();
            if !en_placed && i < last_hat {
                cur.push(FlagVector::Hat(i));
                rec(n, en_placed, i, cur, used, out);
                cur.pop();
            }
            used[i] = false;
        }
        if !en_placed {
            used[n] = true;
            cur.push(FlagVector::Std(n));
            rec(n, true, last_hat, cur, used, out);
            cur.pop();
            used[n] = false;
        }
    }
    rec(n, false, usize::MAX, &mut cur, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// Builds an orbit's standard-form flag from its pair: hats occupy the
/// chain of positions `w⁻¹(n), w⁻¹(j_k), ..., w⁻¹(j_2)` carrying indices
/// `j_k, ..., j_1`, `e_n` sits at `w⁻¹(j_1)`, and every other position `i`
/// holds `e_{w(i)}`.
pub fn pair_to_flag(pair: &ShareshianPair) -> StandardFlag {
    let n = pair.degree();
    let w = pair.w();
    let delta = pair.delta();
    let hats = delta.hat_indices();
    let mut vectors: Vec<FlagVector> = (1..=n).map(|i| FlagVector::Std(w.apply(i))).collect();
    if !hats.is_empty() {
        let w_inv = w.inverse();
        let k = hats.len();
        vectors[w_inv.apply(n) - 1] = FlagVector::Hat(hats[k - 1]);
        for m in 1..k {
            vectors[w_inv.apply(hats[m]) - 1] = FlagVector::Hat(hats[m - 1]);
        }
        vectors[w_inv.apply(hats[0]) - 1] = FlagVector::Std(n);
    }
    StandardFlag::new(vectors).expect("pair data always assembles a standard-form flag")
}

/// The four invariant matrices of a flag, indexed `0..=n` in both
/// directions with the conventions `V_0 = E_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub r: Vec<Vec<usize>>,
    #[serde(rename = "rstar")]
    pub r_star: Vec<Vec<usize>>,
    pub delta: Vec<Vec<usize>>,
    #[serde(rename = "rbar")]
    pub r_bar: Vec<Vec<usize>>,
}

impl RankProfile {
    fn degree(&self) -> usize {
        self.r.len() - 1
    }

    pub fn rstar_matches_rbar(&self) -> bool {
        let n = self.degree();
        (0..n).all(|p| (0..n).all(|q| self.r_star[p][q + 1] == self.r_bar[p][q]))
    }

    pub fn magyar_leq(&self, other: &RankProfile) -> bool {
        let n = self.degree();
        let r_ok = (1..n).all(|p| (1..n).all(|q| self.r[p][q] >= other.r[p][q]));
        let rbar_ok = (0..n).all(|p| (0..n).all(|q| self.r_bar[p][q] >= other.r_bar[p][q]));
        r_ok && rbar_ok
    }

    /// JSON object with keys `r`, `rstar`, `delta`, `rbar`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serialization cannot fail")
    }
}
