//! The three labels of an orbit and the passages between them.
//!
//! An orbit is labeled by a pair `(w, u*)` of group elements, by its
//! standardized variant `(w, u)` with `u = σ⁻¹ u* σ`, or by a decorated
//! permutation `(w, Δ)` where `Δ` records the hat indices of the orbit's
//! standard-form flag together with `n`.  The pair determines `Δ` through
//! the cycle `τ_Δ = u* σ w⁻¹`, and `(w, u*)` is a valid label exactly when
//! that cycle has the shape `(n, j_k, ..., j_1)` with `Δ` a decreasing
//! sequence for `w⁻¹`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{sigma_unchecked, Permutation};

/// A hat set `{j_1 < ... < j_k < n}` together with `n` itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Delta {
    elems: Vec<usize>,
    degree: usize,
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.elems {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl Delta {
    /// Builds a hat set from its full element list, which must be strictly
    /// increasing, contained in `1..=n`, and end with `n`.
    pub fn new(elems: Vec<usize>, degree: usize) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall(degree));
        }
        if elems.is_empty() || *elems.last().unwrap() != degree {
            return Err(Error::InvalidDelta(format!(
                "{elems:?} must contain the degree {degree}"
            )));
        }
        if !elems.windows(2).all(|p| p[0] < p[1]) || elems[0] < 1 {
            return Err(Error::InvalidDelta(format!(
                "{elems:?} is not strictly increasing inside 1..={degree}"
            )));
        }
        Ok(Self { elems, degree })
    }

    /// The singleton `{n}`: no hat vectors.
    pub fn singleton(degree: usize) -> Self {
        Self::new(vec![degree], degree).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Elements in increasing order, ending with the degree.
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    /// Number of elements, counting `n`.
    pub fn size(&self) -> usize {
        self.elems.len()
    }

    /// The hat indices `j_1 < ... < j_k`, i.e. everything but `n`.
    pub fn hat_indices(&self) -> &[usize] {
        &self.elems[..self.elems.len() - 1]
    }

    /// Whether `w⁻¹(n) < w⁻¹(j_k) < ... < w⁻¹(j_1)`.
    pub fn decreasing_for(&self, w: &Permutation) -> bool {
        assert_eq!(w.degree(), self.degree);
        let wi = w.inverse();
        let mut prev = 0;
        for &j in self.elems.iter().rev() {
            let v = wi.apply(j);
            if v <= prev {
                return false;
            }
            prev = v;
        }
        true
    }

    /// The cycle `(n, j_k, ..., j_1)` sending `n ↦ j_k ↦ ... ↦ j_1 ↦ n`;
    /// the identity when there are no hat indices.
    pub fn tau(&self) -> Permutation {
        let n = self.degree;
        if self.elems.len() == 1 {
            return Permutation::identity(n);
        }
        let mut window: Vec<usize> = (1..=n).collect();
        for i in 1..self.elems.len() {
            window[self.elems[i] - 1] = self.elems[i - 1];
        }
        window[self.elems[0] - 1] = n;
        Permutation::from_window(window).unwrap()
    }
}

/// Tests whether `(w, y)` labels an orbit, returning the hat set when it
/// does.  The candidate is read off the cycle `τ = y ∘ σ ∘ w⁻¹`: it must be
/// the identity or a single cycle through `n` whose orbit, listed from `n`,
/// decreases strictly, and the resulting set must be a decreasing sequence
/// for `w⁻¹`.
pub fn is_shareshian(w: &Permutation, y: &Permutation) -> Result<Option<Delta>> {
    if w.degree() != y.degree() {
        return Err(Error::DegreeMismatch(w.degree(), y.degree()));
    }
    let n = w.degree();
    let tau = y.compose(&sigma_unchecked(n))?.compose(&w.inverse())?;
    Ok(delta_from_tau(&tau).filter(|d| d.decreasing_for(w)))
}

fn delta_from_tau(tau: &Permutation) -> Option<Delta> {
    let n = tau.degree();
    if tau.is_identity() {
        return Some(Delta::singleton(n));
    }
    let mut orbit = Vec::new();
    let mut cur = tau.apply(n);
    while cur != n {
        orbit.push(cur);
        cur = tau.apply(cur);
    }
    if orbit.is_empty() {
        return None;
    }
    let moved = (1..=n).filter(|&x| tau.apply(x) != x).count();
    if moved != orbit.len() + 1 {
        return None;
    }
    if !orbit.windows(2).all(|p| p[0] > p[1]) {
        return None;
    }
    let mut elems: Vec<usize> = orbit.into_iter().rev().collect();
    elems.push(n);
    Some(Delta::new(elems, n).unwrap())
}

/// The pair `(w, u*)` labeling an orbit.  Constructing one through [`new`]
/// checks the pair criterion, so every value of this type is a real orbit.
///
/// [`new`]: ShareshianPair::new
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShareshianPair {
    w: Permutation,
    u_star: Permutation,
}

impl fmt::Display for ShareshianPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w={};ustar={}", self.w, self.u_star)
    }
}

impl ShareshianPair {
    pub fn new(w: Permutation, u_star: Permutation) -> Result<Self> {
        match is_shareshian(&w, &u_star)? {
            Some(_) => Ok(Self { w, u_star }),
            None => Err(Error::NotOrbitPair(format!("w={w};ustar={u_star}"))),
        }
    }

    pub(crate) fn from_parts(w: Permutation, u_star: Permutation) -> Self {
        debug_assert!(matches!(is_shareshian(&w, &u_star), Ok(Some(_))));
        Self { w, u_star }
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn u_star(&self) -> &Permutation {
        &self.u_star
    }

    pub fn degree(&self) -> usize {
        self.w.degree()
    }

    /// The hat set determined by the pair; its size equals the order of
    /// `u* σ w⁻¹` as a group element.
    pub fn delta(&self) -> Delta {
        is_shareshian(&self.w, &self.u_star)
            .expect("equal degrees by construction")
            .expect("validated at construction")
    }

    /// The standardized view `(w, σ⁻¹ u* σ)`.
    pub fn standardize(&self) -> StandardizedPair {
        let s = sigma_unchecked(self.degree());
        let u = s.inverse().mul(&self.u_star).mul(&s);
        StandardizedPair {
            w: self.w.clone(),
            u,
        }
    }

    pub fn to_decorated(&self) -> DecoratedPermutation {
        DecoratedPermutation {
            w: self.w.clone(),
            delta: self.delta(),
        }
    }

    /// Orbit dimension `(ℓ(w) + ℓ*(u*) + |Δ| − n) / 2`.
    ///
    /// Panics if the equivalent standardized form
    /// `(ℓ(w) + ℓ(u) − ℓ(u w⁻¹)) / 2` disagrees or the value falls outside
    /// `0..=n(n−1)/2`; either signals a bug, not bad input.
    pub fn dimension(&self) -> usize {
        let n = self.degree();
        let lw = self.w.length() as i64;
        let lus = self.u_star.star_length() as i64;
        let primary = lw + lus + self.delta().size() as i64 - n as i64;
        let std = self.standardize();
        let uwinv = std.u().mul(&self.w.inverse());
        let alt = lw + std.u().length() as i64 - uwinv.length() as i64;
        assert_eq!(primary, alt, "dimension formulas disagree for {self}");
        assert!(
            primary >= 0 && primary % 2 == 0,
            "dimension {primary}/2 is not a non-negative integer for {self}"
        );
        let dim = (primary / 2) as usize;
        assert!(
            dim <= n * (n - 1) / 2,
            "dimension {dim} too large for {self}"
        );
        dim
    }

    /// Closure order: `self` lies in the closure of `other` iff `w` and `u*`
    /// are below the other's coordinates in the standard and twisted Bruhat
    /// orders respectively.
    pub fn closure_leq(&self, other: &Self) -> Result<bool> {
        Ok(self.w.bruhat_leq(&other.w)? && self.u_star.star_bruhat_leq(&other.u_star)?)
    }

    /// Checks that `u w⁻¹` has length `n − |Δ|` and equals the product
    /// `s_1 ⋯ s_{n−1}` with exactly the factors indexed by the hat set
    /// omitted.  Returns `false` on violation.
    pub fn check_omitted_word(&self) -> bool {
        let n = self.degree();
        let delta = self.delta();
        let u = self.standardize().u;
        let x = u.mul(&self.w.inverse());
        if x.length() != n - delta.size() {
            return false;
        }
        let mut acc = Permutation::identity(n);
        for i in 1..n {
            if !delta.hat_indices().contains(&i) {
                acc = acc.mul(&Permutation::simple(n, i));
            }
        }
        x == acc
    }

    /// Parses `"w=3,1,2;ustar=1,3,2"`; the permutations may use one-line or
    /// cycle syntax.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let fields = parse_fields(text, &["w", "ustar"])?;
        Self::new(
            Permutation::parse(&fields[0], n)?,
            Permutation::parse(&fields[1], n)?,
        )
    }
}

/// The pair `(w, u)` with `u = σ⁻¹ u* σ`: a display-friendly view in which
/// both coordinates live in the standard Bruhat order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardizedPair {
    w: Permutation,
    u: Permutation,
}

impl fmt::Display for StandardizedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w={};u={}", self.w, self.u)
    }
}

impl StandardizedPair {
    pub fn new(w: Permutation, u: Permutation) -> Result<Self> {
        if w.degree() != u.degree() {
            return Err(Error::DegreeMismatch(w.degree(), u.degree()));
        }
        let s = sigma_unchecked(w.degree());
        let u_star = s.mul(&u).mul(&s.inverse());
        ShareshianPair::new(w, u_star).map(|p| p.standardize())
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn u(&self) -> &Permutation {
        &self.u
    }

    pub fn degree(&self) -> usize {
        self.w.degree()
    }

    pub fn destandardize(&self) -> ShareshianPair {
        let s = sigma_unchecked(self.degree());
        let u_star = s.mul(&self.u).mul(&s.inverse());
        ShareshianPair::from_parts(self.w.clone(), u_star)
    }

    /// Letter rendering `(ts, e)` used for small-degree display.
    pub fn letter_label(&self) -> String {
        format!("({}, {})", self.w.letter_word(), self.u.letter_word())
    }
}

/// The label `(w, Δ)`: a permutation decorated with a hat set that is a
/// decreasing sequence for `w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPermutation {
    w: Permutation,
    delta: Delta,
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w={};delta={}", self.w, self.delta)
    }
}

impl DecoratedPermutation {
    pub fn new(w: Permutation, delta: Delta) -> Result<Self> {
        if w.degree() != delta.degree() {
            return Err(Error::DegreeMismatch(w.degree(), delta.degree()));
        }
        if !delta.decreasing_for(&w) {
            return Err(Error::InvalidDelta(format!(
                "{delta} is not a decreasing sequence for the inverse of {w}"
            )));
        }
        Ok(Self { w, delta })
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn delta(&self) -> &Delta {
        &self.delta
    }

    pub fn degree(&self) -> usize {
        self.w.degree()
    }

    /// The pair with `u* = τ_Δ ∘ w ∘ σ⁻¹`.
    pub fn to_pair(&self) -> ShareshianPair {
        let n = self.degree();
        let u_star = self
            .delta
            .tau()
            .mul(&self.w)
            .mul(&sigma_unchecked(n).inverse());
        ShareshianPair::from_parts(self.w.clone(), u_star)
    }

    /// Parses `"w=3,1,2;delta=2,3"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let fields = parse_fields(text, &["w", "delta"])?;
        let w = Permutation::parse(&fields[0], n)?;
        let elems = fields[1]
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad hat-set entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(w, Delta::new(elems, n)?)
    }
}

fn parse_fields(text: &str, keys: &[&str]) -> Result<Vec<String>> {
    let parts: Vec<&str> = text.trim().split(';').collect();
    if parts.len() != keys.len() {
        return Err(Error::Parse(format!(
            "expected fields {keys:?} separated by ';', got {text:?}"
        )));
    }
    keys.iter()
        .zip(parts)
        .map(|(key, part)| {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected {key}=..., got {part:?}")))?;
            if k.trim() != *key {
                return Err(Error::Parse(format!(
                    "expected field {key}, got {:?}",
                    k.trim()
                )));
            }
            Ok(v.trim().to_string())
        })
        .collect()
}

fn delta_candidates(n: usize) -> Vec<Delta> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut elems: Vec<usize> = (1..n).filter(|&j| mask >> (j - 1) & 1 == 1).collect();
        elems.push(n);
        out.push(Delta::new(elems, n).unwrap());
    }
    out.sort();
    out
}

/// All decorated permutations of degree `n`, lexicographic by window and
/// then by hat set.
pub fn enumerate_decorated(n: usize) -> Result<Vec<DecoratedPermutation>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let candidates = delta_candidates(n);
    let mut out = Vec::new();
    for w in Permutation::all(n) {
        for delta in &candidates {
            if delta.decreasing_for(&w) {
                out.push(DecoratedPermutation {
                    w: w.clone(),
                    delta: delta.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// All orbit pairs of degree `n`, duplicate-free, in the enumeration order
/// of [`enumerate_decorated`].
pub fn enumerate_pairs(n: usize) -> Result<Vec<ShareshianPair>> {
    Ok(enumerate_decorated(n)?
        .iter()
        .map(DecoratedPermutation::to_pair)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(window: &[usize]) -> Permutation {
        Permutation::from_window(window.to_vec()).unwrap()
    }

    #[test]
    fn tau_of_delta_examples() {
        assert_eq!(Delta::singleton(3).tau(), Permutation::identity(3));
        assert_eq!(Delta::new(vec![2, 3], 3).unwrap().tau(), p(&[1, 3, 2]));
        let full = Delta::new(vec![1, 2, 3], 3).unwrap();
        assert_eq!(full.tau(), p(&[3, 1, 2]));
        assert_eq!(full.tau().order(), full.size());
    }

    #[test]
    fn delta_rejects_bad_sets() {
        assert!(Delta::new(vec![1, 2], 3).is_err());
        assert!(Delta::new(vec![2, 2, 3], 3).is_err());
        assert!(Delta::new(vec![], 3).is_err());
        assert!(Delta::new(vec![2], 1).is_err());
    }

    #[test]
    fn is_shareshian_examples() {
        // w = (2,3), y = (1,2,3)
        let d = is_shareshian(&p(&[1, 3, 2]), &p(&[2, 3, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(d.elems(), &[2, 3]);
        // hat-free: y = w σ⁻¹
        let d = is_shareshian(&Permutation::identity(3), &p(&[2, 3, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(d.elems(), &[3]);
        // w = y = (1,3) is not an orbit pair
        assert!(is_shareshian(&p(&[3, 2, 1]), &p(&[3, 2, 1]))
            .unwrap()
            .is_none());
        assert!(is_shareshian(&Permutation::identity(3), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn delta_of_pair_examples() {
        let pair = ShareshianPair::new(p(&[1, 3, 2]), p(&[2, 3, 1])).unwrap();
        assert_eq!(pair.delta().elems(), &[2, 3]);
        for w in Permutation::all(3) {
            let u_star = w.mul(&sigma_unchecked(3).inverse());
            let pair = ShareshianPair::new(w, u_star).unwrap();
            assert_eq!(pair.delta().elems(), &[3]);
        }
        // w = (3,2,1) as a cycle is the window [3,1,2]; partner (1,3)
        let pair = ShareshianPair::new(p(&[3, 1, 2]), p(&[3, 2, 1])).unwrap();
        assert_eq!(pair.delta().elems(), &[1, 3]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_pairs(3).unwrap().len(), 13);
        assert_eq!(enumerate_pairs(2).unwrap().len(), 3);
        assert!(enumerate_pairs(1).is_err());
        let n2: Vec<String> = enumerate_pairs(2)
            .unwrap()
            .iter()
            .map(|q| q.delta().to_string())
            .collect();
        assert_eq!(
            n2.iter().filter(|d| d.as_str() == "2").count(),
            2,
            "hat-free orbits at degree 2"
        );
        assert_eq!(n2.iter().filter(|d| d.as_str() == "1,2").count(), 1);
    }

    #[test]
    fn decorated_round_trip() {
        let pair = ShareshianPair::new(p(&[1, 3, 2]), p(&[2, 3, 1])).unwrap();
        let dec = pair.to_decorated();
        assert_eq!(dec.delta().elems(), &[2, 3]);
        assert_eq!(dec.to_pair(), pair);
        for q in enumerate_pairs(4).unwrap() {
            assert_eq!(q.to_decorated().to_pair(), q);
        }
        // (w, Δ) = ((1,3), {1,2,3}) has partner (2,3)
        let dec = DecoratedPermutation::new(p(&[3, 2, 1]), Delta::new(vec![1, 2, 3], 3).unwrap())
            .unwrap();
        assert_eq!(*dec.to_pair().u_star(), p(&[1, 3, 2]));
        // {1,2,3} is decreasing only for the longest element
        assert!(
            DecoratedPermutation::new(p(&[1, 3, 2]), Delta::new(vec![1, 2, 3], 3).unwrap())
                .is_err()
        );
    }

    #[test]
    fn standardize_examples() {
        let pair = ShareshianPair::new(p(&[3, 1, 2]), Permutation::identity(3)).unwrap();
        let std = pair.standardize();
        assert!(std.u().is_identity());
        assert_eq!(std.letter_label(), "(ts, e)");
        assert_eq!(std.destandardize(), pair);

        let pair = ShareshianPair::new(p(&[3, 2, 1]), p(&[1, 3, 2])).unwrap();
        let std = pair.standardize();
        assert_eq!(*std.u(), p(&[3, 2, 1]));
        assert_eq!(std.letter_label(), "(sts, sts)");
        assert_eq!(std.destandardize(), pair);
    }

    #[test]
    fn dimension_examples() {
        let from_std =
            |w: &[usize], u: &[usize]| StandardizedPair::new(p(w), p(u)).unwrap().destandardize();
        // (e, st), (sts, sts), (t, st)
        assert_eq!(from_std(&[1, 2, 3], &[2, 3, 1]).dimension(), 0);
        assert_eq!(from_std(&[3, 2, 1], &[3, 2, 1]).dimension(), 3);
        assert_eq!(from_std(&[1, 3, 2], &[2, 3, 1]).dimension(), 1);
    }

    #[test]
    fn closure_examples() {
        let from_std =
            |w: &[usize], u: &[usize]| StandardizedPair::new(p(w), p(u)).unwrap().destandardize();
        let bottom = from_std(&[1, 2, 3], &[2, 3, 1]); // (e, st)
        let mid = from_std(&[2, 1, 3], &[3, 2, 1]); // (s, tst)
        let atom = from_std(&[1, 3, 2], &[2, 1, 3]); // (t, s)
        assert!(bottom.closure_leq(&bottom).unwrap());
        assert!(bottom.closure_leq(&mid).unwrap());
        assert!(!atom.closure_leq(&mid).unwrap());
    }

    #[test]
    fn omitted_word_examples() {
        // Δ = {n}: u w⁻¹ = σ⁻¹ of length n−1
        let hat_free = ShareshianPair::new(
            p(&[2, 1, 3]),
            p(&[2, 1, 3]).mul(&sigma_unchecked(3).inverse()),
        )
        .unwrap();
        assert!(hat_free.check_omitted_word());
        // standardized (t, st): u w⁻¹ = s, Δ = {2,3}
        let pair = StandardizedPair::new(p(&[1, 3, 2]), p(&[2, 3, 1]))
            .unwrap()
            .destandardize();
        assert!(pair.check_omitted_word());
        // open orbit: u w⁻¹ = e, Δ = {1,2,3}
        let open = StandardizedPair::new(p(&[3, 2, 1]), p(&[3, 2, 1]))
            .unwrap()
            .destandardize();
        assert!(open.check_omitted_word());
    }

    #[test]
    fn pair_text_round_trip() {
        let pair = ShareshianPair::parse("w=1,3,2;ustar=2,3,1", 3).unwrap();
        assert_eq!(pair.to_string(), "w=1,3,2;ustar=2,3,1");
        assert!(ShareshianPair::parse("w=3,2,1;ustar=3,2,1", 3).is_err());
        assert!(ShareshianPair::parse("w=1,3,2", 3).is_err());
        let dec = DecoratedPermutation::parse("w=1,3,2;delta=2,3", 3).unwrap();
        assert_eq!(dec.to_string(), "w=1,3,2;delta=2,3");
        assert_eq!(dec.to_pair(), pair);
    }
}
