//! Property tests on randomly drawn inputs, complementing the exhaustive
//! small-degree sweeps.

use borbit::pairs::{DecoratedPermutation, Delta};
use borbit::perm::{monoid_w, MulSide, Permutation};
use proptest::prelude::*;

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|window| Permutation::from_window(window).unwrap())
}

fn arb_degree() -> impl Strategy<Value = usize> {
    2usize..=7
}

proptest! {
    #[test]
    fn composition_is_associative(n in arb_degree(), seed in any::<u64>()) {
        let mut rng = seed;
        let mut draw = || {
            // splitmix: enough variety for three windows
            let mut w: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (rng >> 33) as usize % (i + 1);
                w.swap(i, j);
            }
            Permutation::from_window(w).unwrap()
        };
        let (p, q, r) = (draw(), draw(), draw());
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels_and_preserves_length(n in arb_degree(), w in (2usize..=7).prop_flat_map(arb_permutation)) {
        let _ = n;
        let inv = w.inverse();
        prop_assert!(w.compose(&inv).unwrap().is_identity());
        prop_assert_eq!(w.length(), inv.length());
    }

    #[test]
    fn parse_round_trips_display(w in (2usize..=8).prop_flat_map(arb_permutation)) {
        let n = w.degree();
        prop_assert_eq!(Permutation::parse(&w.to_string(), n).unwrap(), w);
    }

    #[test]
    fn bruhat_is_antisymmetric(n in arb_degree(), seed in any::<u64>()) {
        let x = sample(n, seed);
        let y = sample(n, seed.wrapping_add(1));
        if x.bruhat_leq(&y).unwrap() && y.bruhat_leq(&x).unwrap() {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn monoid_moves_are_idempotent(n in arb_degree(), seed in any::<u64>(), i in 1usize..7, left in any::<bool>()) {
        prop_assume!(i < n);
        let w = sample(n, seed);
        let side = if left { MulSide::Left } else { MulSide::Right };
        let once = monoid_w(i, &w, side).unwrap();
        prop_assert_eq!(monoid_w(i, &once, side).unwrap(), once.clone());
        prop_assert!(once.length() == w.length() || once.length() == w.length() + 1);
    }

    #[test]
    fn random_decorations_round_trip(n in arb_degree(), seed in any::<u64>(), mask in any::<u32>()) {
        let w = sample(n, seed);
        let mut elems: Vec<usize> = (1..n).filter(|&j| mask >> (j - 1) & 1 == 1).collect();
        elems.push(n);
        let delta = Delta::new(elems, n).unwrap();
        prop_assume!(delta.decreasing_for(&w));
        let decorated = DecoratedPermutation::new(w, delta).unwrap();
        let pair = decorated.to_pair();
        prop_assert_eq!(pair.to_decorated(), decorated);
        prop_assert_eq!(borbit::pair_to_flag(&pair).to_pair(), pair);
    }
}

fn sample(n: usize, seed: u64) -> Permutation {
    let mut rng = seed;
    let mut w: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        rng = rng
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (rng >> 33) as usize % (i + 1);
        w.swap(i, j);
    }
    Permutation::from_window(w).unwrap()
}
