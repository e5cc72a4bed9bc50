//! Symmetric-group arithmetic: one-line windows, lengths and Bruhat orders
//! for the standard simple reflections and for the twisted generators
//! obtained by conjugating with the long cycle.

use std::fmt;

use crate::error::{Error, Result};

/// Element of the symmetric group on `{1, ..., n}` in one-line notation:
/// `window[i-1]` is the image of `i`.
///
/// The degree is fixed per instance and is at least 2.  Values are immutable
/// after construction and every operation is a pure function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<usize>,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.window {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Permutation {
    /// Builds a permutation from a one-line window; the window must be a
    /// rearrangement of `1..=n` with `n >= 2`.
    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidWindow(format!(
                    "{window:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "degree must be at least 2");
        Self {
            window: (1..=n).collect(),
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(n >= 2 && a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut window: Vec<usize> = (1..=n).collect();
        window.swap(a - 1, b - 1);
        Self { window }
    }

    /// The simple reflection exchanging `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        Self::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Image of `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.window[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Self { window }
    }

    /// `self ∘ other`, applying `other` first: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let window = other.window.iter().map(|&v| self.window[v - 1]).collect();
        Self { window }
    }

    /// Order of the element in the group.
    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = self.mul(&power);
            k += 1;
        }
        k
    }

    /// Coxeter length: the number of inversions of the window.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Length with respect to the twisted generators `σ s_i σ⁻¹`; equals the
    /// standard length of `σ⁻¹ ∘ self ∘ σ`.
    pub fn star_length(&self) -> usize {
        let s = sigma_unchecked(self.degree());
        s.inverse().mul(self).mul(&s).length()
    }

    /// Table `t[i][j] = #{a <= i : w(a) <= j}` for `i, j = 0..=n`.
    pub(crate) fn rank_table(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut t = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            let v = self.window[i - 1];
            for j in 0..=n {
                t[i][j] = t[i - 1][j] + usize::from(v <= j);
            }
        }
        t
    }

    /// Bruhat order of the standard Coxeter system, decided by the
    /// rank-dominance criterion: `self <= other` iff
    /// `#{a <= i : self(a) <= j} >= #{a <= i : other(a) <= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(dominates(&self.rank_table(), &other.rank_table()))
    }

    /// Bruhat order of the twisted system: compares `σ⁻¹ x σ` and `σ⁻¹ y σ`
    /// in the standard order.
    pub fn star_bruhat_leq(&self, other: &Self) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let s = sigma_unchecked(self.degree());
        let si = s.inverse();
        si.mul(self).mul(&s).bruhat_leq(&si.mul(other).mul(&s))
    }

    /// All degree-`n` permutations in lexicographic window order.
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n >= 2);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation {
                    window: cur.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Parses one-line notation `"3,1,2"` or cycle notation `"(3,2,1)"`,
    /// where a cycle maps each listed element to the next and the last
    /// element back to the first.  Cycles must be disjoint; unlisted
    /// elements are fixed.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        let text = text.trim();
        if text.starts_with('(') {
            return Self::parse_cycles(text, n);
        }
        let window = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad window entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if window.len() != n {
            return Err(Error::Parse(format!(
                "window {text:?} has {} entries, expected {n}",
                window.len()
            )));
        }
        Self::from_window(window)
    }

    fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let mut window: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
            };
            let body = &stripped[..close];
            rest = stripped[close + 1..].trim_start();
            let members = body
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if members.is_empty() {
                return Err(Error::Parse("empty cycle".into()));
            }
            for &m in &members {
                if m < 1 || m > n {
                    return Err(Error::Parse(format!("cycle entry {m} outside 1..={n}")));
                }
                if seen[m] {
                    return Err(Error::Parse(format!("element {m} repeated across cycles")));
                }
                seen[m] = true;
            }
            for (i, &m) in members.iter().enumerate() {
                window[m - 1] = members[(i + 1) % members.len()];
            }
        }
        Self::from_window(window)
    }

    /// A reduced word: indices `i_1, ..., i_m` with
    /// `self = s_{i_1} ∘ ... ∘ s_{i_m}` and `m` equal to the length.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut letters = Vec::new();
        while let Some(i) = (1..v.degree()).find(|&i| v.window[i - 1] > v.window[i]) {
            v.window.swap(i - 1, i);
            letters.push(i);
        }
        letters.reverse();
        letters
    }

    /// Renders the element as a word in generator letters `s, t, u, ...`
    /// (identity renders as `e`); falls back to the window for large degrees.
    pub fn letter_word(&self) -> String {
        const LETTERS: [char; 8] = ['s', 't', 'u', 'v', 'w', 'x', 'y', 'z'];
        if self.is_identity() {
            return "e".to_string();
        }
        if self.degree() > LETTERS.len() + 1 {
            return self.to_string();
        }
        self.reduced_word()
            .iter()
            .map(|&i| LETTERS[i - 1])
            .collect()
    }
}

pub(crate) fn dominates(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.iter()
        .zip(b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(&x, &y)| x >= y))
}

pub(crate) fn sigma_unchecked(n: usize) -> Permutation {
    let mut window = Vec::with_capacity(n);
    window.push(n);
    window.extend(1..n);
    Permutation { window }
}

/// The long cycle mapping `n ↦ n−1 ↦ ... ↦ 2 ↦ 1 ↦ n`, in one-line
/// notation `[n, 1, 2, ..., n−1]`.
pub fn sigma(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    Ok(sigma_unchecked(n))
}

/// The longest element `[n, n−1, ..., 1]`.
pub fn longest_element(n: usize) -> Permutation {
    assert!(n >= 2);
    Permutation {
        window: (1..=n).rev().collect(),
    }
}

/// The twisted simple reflection `σ s_index σ⁻¹` as a permutation: the
/// transposition `(1, n)` for index 1 and `(index−1, index)` otherwise.
pub fn star_of_root(index: usize, n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    if index < 1 || index > n - 1 {
        return Err(Error::RootIndexOutOfRange {
            side: "right",
            index,
            degree: n,
        });
    }
    Ok(if index == 1 {
        Permutation::transposition(n, 1, n)
    } else {
        Permutation::transposition(n, index - 1, index)
    })
}

/// Multiplication side for the classical monoid action on the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MulSide {
    Left,
    Right,
}

/// Classical monoid action of a simple reflection on the group: multiplies
/// by `s_root_index` on the chosen side when that increases the length, and
/// fixes the element otherwise.  Idempotent.
pub fn monoid_w(root_index: usize, w: &Permutation, side: MulSide) -> Result<Permutation> {
    let n = w.degree();
    if root_index < 1 || root_index > n - 1 {
        return Err(Error::RootIndexOutOfRange {
            side: match side {
                MulSide::Left => "left",
                MulSide::Right => "right",
            },
            index: root_index,
            degree: n,
        });
    }
    let s = Permutation::simple(n, root_index);
    let moved = match side {
        MulSide::Left => s.mul(w),
        MulSide::Right => w.mul(&s),
    };
    Ok(if moved.length() > w.length() {
        moved
    } else {
        w.clone()
    })
}

/// Which factor of the monoid acts: simple roots of the embedded
/// lower-rank group act on the left, simple roots of the ambient group on
/// the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSide {
    LeftK,
    RightG,
}

impl fmt::Display for RootSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSide::LeftK => write!(f, "left"),
            RootSide::RightG => write!(f, "right"),
        }
    }
}

/// A simple root together with the side it acts on.  Valid indices are
/// `1..=n−2` on the left and `1..=n−1` on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootLabel {
    pub side: RootSide,
    pub index: usize,
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.side, self.index)
    }
}

impl RootLabel {
    pub fn left(index: usize) -> Self {
        Self {
            side: RootSide::LeftK,
            index,
        }
    }

    pub fn right(index: usize) -> Self {
        Self {
            side: RootSide::RightG,
            index,
        }
    }

    pub fn check_degree(&self, n: usize) -> Result<()> {
        let max = match self.side {
            RootSide::LeftK => n.saturating_sub(2),
            RootSide::RightG => n - 1,
        };
        if self.index < 1 || self.index > max {
            return Err(Error::RootIndexOutOfRange {
                side: match self.side {
                    RootSide::LeftK => "left",
                    RootSide::RightG => "right",
                },
                index: self.index,
                degree: n,
            });
        }
        Ok(())
    }

    /// All roots valid at degree `n`: left `1..=n−2`, then right `1..=n−1`.
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n >= 2);
        let mut out = Vec::new();
        for i in 1..=n.saturating_sub(2) {
            out.push(Self::left(i));
        }
        for i in 1..=n - 1 {
            out.push(Self::right(i));
        }
        out
    }

    /// Parses `"left:1"` or `"right:2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let (side, index) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected side:index, got {text:?}")))?;
        let index = index
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad root index {index:?}")))?;
        match side.trim() {
            "left" | "l" => Ok(Self::left(index)),
            "right" | "r" => Ok(Self::right(index)),
            other => Err(Error::Parse(format!(
                "unknown root side {other:?}, expected left or right"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(window: &[usize]) -> Permutation {
        Permutation::from_window(window.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_first() {
        let s = p(&[2, 1, 3]);
        let t = p(&[1, 3, 2]);
        assert_eq!(s.compose(&t).unwrap(), p(&[2, 3, 1]));
        let q = p(&[3, 1, 2]);
        assert_eq!(q.compose(&Permutation::identity(3)).unwrap(), q);
        assert_eq!(
            p(&[3, 1, 2]).compose(&p(&[2, 3, 1])).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        assert_eq!(p(&[2, 3, 1]).length(), 2);
    }

    #[test]
    fn sigma_windows() {
        assert_eq!(sigma(3).unwrap(), p(&[3, 1, 2]));
        assert_eq!(sigma(2).unwrap(), p(&[2, 1]));
        assert_eq!(sigma(1), Err(Error::DegreeTooSmall(1)));
        let s = sigma(5).unwrap();
        let mut acc = Permutation::identity(5);
        for _ in 0..5 {
            acc = s.compose(&acc).unwrap();
        }
        assert!(acc.is_identity());
    }

    #[test]
    fn star_length_examples() {
        assert_eq!(Permutation::identity(3).star_length(), 0);
        // σ (st) σ⁻¹ has twisted length 2 because conjugation carries
        // twisted words to standard words letter by letter.
        let s3 = sigma(3).unwrap();
        let st = p(&[2, 3, 1]);
        let conj = s3.compose(&st).unwrap().compose(&s3.inverse()).unwrap();
        assert_eq!(conj.star_length(), 2);
        assert_eq!(Permutation::transposition(3, 1, 3).star_length(), 1);
    }

    #[test]
    fn bruhat_rank_criterion() {
        let id = Permutation::identity(3);
        for w in Permutation::all(3) {
            assert!(id.bruhat_leq(&w).unwrap());
        }
        assert!(p(&[2, 1, 3]).bruhat_leq(&p(&[3, 2, 1])).unwrap());
        assert!(!p(&[2, 1, 3]).bruhat_leq(&p(&[1, 3, 2])).unwrap());
    }

    #[test]
    fn star_bruhat_transports_along_sigma() {
        let s3 = sigma(3).unwrap();
        let s3i = s3.inverse();
        let conj = |x: &Permutation| s3.mul(x).mul(&s3i);
        let sstar = conj(&p(&[2, 1, 3]));
        let wstar = conj(&p(&[3, 2, 1]));
        assert!(sstar.star_bruhat_leq(&sstar).unwrap());
        assert!(Permutation::identity(3)
            .star_bruhat_leq(&star_of_root(1, 3).unwrap())
            .unwrap());
        assert!(sstar.star_bruhat_leq(&wstar).unwrap());
    }

    #[test]
    fn monoid_moves() {
        let id = Permutation::identity(3);
        assert_eq!(monoid_w(1, &id, MulSide::Left).unwrap(), p(&[2, 1, 3]));
        let t = p(&[1, 3, 2]);
        assert_eq!(monoid_w(2, &t, MulSide::Right).unwrap(), t);
        assert_eq!(monoid_w(1, &t, MulSide::Left).unwrap(), p(&[2, 3, 1]));
        assert!(monoid_w(3, &t, MulSide::Left).is_err());
    }

    #[test]
    fn star_roots() {
        assert_eq!(star_of_root(1, 3).unwrap(), p(&[3, 2, 1]));
        assert_eq!(star_of_root(2, 3).unwrap(), p(&[2, 1, 3]));
        assert_eq!(
            star_of_root(3, 4).unwrap(),
            Permutation::transposition(4, 2, 3)
        );
        assert!(star_of_root(3, 3).is_err());
    }

    #[test]
    fn parse_one_line_and_cycles() {
        assert_eq!(Permutation::parse("3,1,2", 3).unwrap(), p(&[3, 1, 2]));
        assert_eq!(Permutation::parse("(3,2,1)", 3).unwrap(), p(&[3, 1, 2]));
        assert_eq!(Permutation::parse("(1,2)", 4).unwrap(), p(&[2, 1, 3, 4]));
        assert_eq!(
            Permutation::parse("(1,2)(3,4)", 4).unwrap(),
            p(&[2, 1, 4, 3])
        );
        assert!(Permutation::parse("1,2", 3).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("junk", 3).is_err());
    }

    #[test]
    fn display_round_trip() {
        let w = p(&[4, 1, 3, 2]);
        assert_eq!(Permutation::parse(&w.to_string(), 4).unwrap(), w);
    }

    #[test]
    fn reduced_words_and_letters() {
        assert_eq!(Permutation::identity(3).letter_word(), "e");
        assert_eq!(p(&[2, 1, 3]).letter_word(), "s");
        assert_eq!(p(&[1, 3, 2]).letter_word(), "t");
        assert_eq!(p(&[2, 3, 1]).letter_word(), "st");
        assert_eq!(p(&[3, 1, 2]).letter_word(), "ts");
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut acc = Permutation::identity(4);
            for &i in &word {
                acc = acc.mul(&Permutation::simple(4, i));
            }
            assert_eq!(acc, w);
        }
    }

    #[test]
    fn root_label_ranges() {
        assert!(RootLabel::left(1).check_degree(3).is_ok());
        assert!(RootLabel::left(2).check_degree(3).is_err());
        assert!(RootLabel::left(1).check_degree(2).is_err());
        assert!(RootLabel::right(1).check_degree(2).is_ok());
        assert_eq!(RootLabel::all(3).len(), 3);
        assert_eq!(RootLabel::all(2).len(), 1);
        assert_eq!(RootLabel::parse("left:1").unwrap(), RootLabel::left(1));
        assert_eq!(RootLabel::parse("right:2").unwrap(), RootLabel::right(2));
        assert!(RootLabel::parse("middle:1").is_err());
    }
}
