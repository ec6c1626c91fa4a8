//! Exhaustive search for the classical bound.
//!
//! The enumerated side (the smaller orbit) has its first sign pinned to `+1`;
//! the remaining `n - 1` signs split into high bits, which select a block,
//! and low bits, which are walked in Gray-code order so that each step
//! flips one sign and updates the column sums in `O(N_B)`. Every block
//! starts from freshly summed columns, so the value assigned to a strategy
//! does not depend on how blocks are distributed over threads, and blocks
//! are reduced in a fixed order. Results are therefore bit-identical for
//! any thread count.

use rayon::prelude::*;

use super::{quantum_value, BoundResult};
use crate::error::{Error, Result};
use crate::orbits::GramMatrix;
use crate::scalar::Real;
use crate::strategy::Strategy;

/// Largest enumerated side accepted by [`classical_bound`].
pub const SEARCH_BUDGET: usize = 30;

const MAX_LOW_BITS: usize = 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `0` uses every available processor.
    pub threads: usize,
}

impl SearchOptions {
    pub fn threads(threads: usize) -> Self {
        Self { threads }
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate<T> {
    value: T,
    code: u64,
}

impl<T: Real> Candidate<T> {
    /// Larger value wins; values within the tie tolerance go to the smaller code.
    fn beats(&self, other: &Self) -> bool {
        let tol = T::tie_eps() * T::one().max(other.value.abs());
        if self.value > other.value + tol {
            true
        } else if (self.value - other.value).abs() <= tol {
            self.code < other.code
        } else {
            false
        }
    }

    fn merge(self, other: Self) -> Self {
        if other.beats(&self) {
            other
        } else {
            self
        }
    }
}

/// Exact classical bound using every available processor.
pub fn classical_bound<T: Real>(gram: &GramMatrix<T>) -> Result<BoundResult<T>> {
    classical_bound_with(gram, &SearchOptions::default())
}

pub fn classical_bound_with<T: Real>(gram: &GramMatrix<T>, options: &SearchOptions) -> Result<BoundResult<T>> {
    let smaller = gram.rows().min(gram.cols());
    if smaller > SEARCH_BUDGET {
        return Err(Error::BudgetExceeded { settings: smaller, limit: SEARCH_BUDGET });
    }
    let quantum = quantum_value(gram);

    let transposed = gram.cols() < gram.rows();
    let (enumerated, recovered) = if transposed {
        let t = gram.transposed();
        let (a, b) = search(&t, options)?;
        (a, b)
    } else {
        search(gram, options)?
    };
    let (alice_strategy, bob_strategy) = if transposed { (recovered, enumerated) } else { (enumerated, recovered) };

    let classical = super::evaluate_strategies(gram, &alice_strategy, &bob_strategy)?;
    let ratio = if classical > T::zero() { quantum / classical } else { T::nan() };
    Ok(BoundResult {
        alice_label: gram.alice_label.clone(),
        bob_label: gram.bob_label.clone(),
        classical_bound: classical,
        quantum_value: quantum,
        alice_strategy,
        bob_strategy,
        ratio,
    })
}

/// Maximizes over the row strategies of `gram`; returns the winning row
/// strategy and the column strategy aligned with its column sums.
fn search<T: Real>(gram: &GramMatrix<T>, options: &SearchOptions) -> Result<(Strategy, Strategy)> {
    let n = gram.rows();
    let free = n - 1;
    let low = free.min(MAX_LOW_BITS);
    let high = free - low;
    let blocks = 1u64 << high;

    let run = |block: u64| search_block(gram, block, low);
    let best = match options.threads {
        1 => (0..blocks).map(run).reduce(Candidate::merge),
        0 => (0..blocks).into_par_iter().map(run).collect::<Vec<_>>().into_iter().reduce(Candidate::merge),
        threads => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidStrategy(format!("thread pool: {e}")))?;
            pool.install(|| (0..blocks).into_par_iter().map(run).collect::<Vec<_>>())
                .into_iter()
                .reduce(Candidate::merge)
        }
    }
    .expect("at least one block");

    let rows = Strategy::from_code(best.code, n);
    let sums = column_sums(gram, &rows);
    let cols = sums.iter().map(|&s| if s < -T::tie_eps() { -1 } else { 1 }).collect();
    Ok((rows, Strategy::new(cols)?))
}

fn column_sums<T: Real>(gram: &GramMatrix<T>, rows: &Strategy) -> Vec<T> {
    let mut sums = vec![T::zero(); gram.cols()];
    for (i, &sign) in rows.signs().iter().enumerate() {
        for (s, &g) in sums.iter_mut().zip(gram.row(i)) {
            if sign > 0 {
                *s += g;
            } else {
                *s -= g;
            }
        }
    }
    sums
}

fn objective<T: Real>(sums: &[T]) -> T {
    sums.iter().fold(T::zero(), |acc, s| acc + s.abs())
}

fn search_block<T: Real>(gram: &GramMatrix<T>, block: u64, low: usize) -> Candidate<T> {
    let n = gram.rows();
    let base = block << low;
    let mut signs = Strategy::from_code(base, n).signs().to_vec();
    let start = Strategy::new(signs.clone()).expect("signs are ±1");
    let mut sums = column_sums(gram, &start);
    let mut best = Candidate { value: objective(&sums), code: base };

    let mut gray = 0u64;
    for step in 1u64..(1u64 << low) {
        let bit = step.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let index = n - 1 - bit;
        signs[index] = -signs[index];
        let row = gram.row(index);
        let two = T::lit(2.0);
        if signs[index] > 0 {
            sums.iter_mut().zip(row).for_each(|(s, &g)| *s += two * g);
        } else {
            sums.iter_mut().zip(row).for_each(|(s, &g)| *s -= two * g);
        }
        let candidate = Candidate { value: objective(&sums), code: base | gray };
        if candidate.beats(&best) {
            best = candidate;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell_bounds::{classical_bound_oracle, evaluate_strategies};
    use crate::orbits::{canonical_solid, gram, Solid};
    use proptest::prelude::{prop_assert, proptest, ProptestConfig};

    fn brute_force(g: &GramMatrix<f64>) -> (f64, u64) {
        // plain enumeration in code order, first strict maximum within tolerance
        let n = g.rows();
        let mut best = (objective(&column_sums(g, &Strategy::all_plus(n))), 0);
        for code in 1..(1u64 << n) {
            let s = Strategy::from_code(code, n);
            let v = objective(&column_sums(g, &s));
            if v > best.0 + 1e-12 * best.0.abs().max(1.0) {
                best = (v, code);
            }
        }
        best
    }

    #[test]
    fn tetrahedron_octahedron() {
        let t = canonical_solid::<f64>(Solid::Tetrahedron);
        let o = canonical_solid::<f64>(Solid::Octahedron);
        let r = classical_bound(&gram(&t, &o)).unwrap();
        assert!((r.classical_bound - 4.0 * 3f64.sqrt()).abs() < 1e-9);
        assert_eq!(r.alice_strategy.signs()[0], 1);
        let check = evaluate_strategies(&gram(&t, &o), &r.alice_strategy, &r.bob_strategy).unwrap();
        assert_eq!(check, r.classical_bound);
    }

    #[test]
    fn tie_break_picks_smallest_code() {
        let t = canonical_solid::<f64>(Solid::Tetrahedron);
        let g = gram(&t, &t);
        let r = classical_bound(&g).unwrap();
        let (value, code) = brute_force(&g);
        assert!((r.classical_bound - value).abs() < 1e-12);
        assert_eq!(r.alice_strategy.code(), code);
    }

    #[test]
    fn transposition_when_bob_is_smaller() {
        let c = canonical_solid::<f64>(Solid::Cuboctahedron);
        let t = canonical_solid::<f64>(Solid::Tetrahedron);
        let r = classical_bound(&gram(&c, &t)).unwrap();
        assert_eq!(r.n_a(), 12);
        assert_eq!(r.n_b(), 4);
        assert_eq!(r.bob_strategy.signs()[0], 1);
        assert!((r.classical_bound - 13.0639).abs() < 5e-4);
    }

    #[test]
    fn budget_guard() {
        let g = GramMatrix::from_rows("a", "b", vec![vec![0.1f64; 31]; 31]).unwrap();
        assert_eq!(
            classical_bound(&g).unwrap_err(),
            Error::BudgetExceeded { settings: 31, limit: SEARCH_BUDGET }
        );
    }

    #[test]
    fn thread_counts_agree_bitwise() {
        let to = canonical_solid::<f64>(Solid::TruncatedOctahedron);
        let c = canonical_solid::<f64>(Solid::Cube);
        let g = gram(&to, &c);
        let one = classical_bound_with(&g, &SearchOptions::threads(1)).unwrap();
        let many = classical_bound_with(&g, &SearchOptions::threads(4)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn blocked_search_matches_single_block() {
        // 20 settings: 3 high bits, several blocks
        let mut rng_state = 7u64;
        let mut next = || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng_state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let rows: Vec<Vec<f64>> = (0..20).map(|_| (0..21).map(|_| next()).collect()).collect();
        let g = GramMatrix::from_rows("a", "b", rows).unwrap();
        let r = classical_bound_with(&g, &SearchOptions::threads(3)).unwrap();
        let (value, code) = brute_force(&g);
        assert!((r.classical_bound - value).abs() < 1e-9);
        assert_eq!(r.alice_strategy.code(), code);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_oracle_on_random_matrices(
            rows in 1usize..7,
            cols in 1usize..7,
            seed in proptest::collection::vec(-1.0f64..1.0, 36),
        ) {
            let data: Vec<Vec<f64>> = (0..rows).map(|i| seed[i * 6..i * 6 + cols].to_vec()).collect();
            let g = GramMatrix::from_rows("a", "b", data).unwrap();
            let r = classical_bound(&g).unwrap();
            let oracle = classical_bound_oracle(&g).unwrap();
            prop_assert!((r.classical_bound - oracle).abs() < 1e-9);
            let negated = classical_bound(&g.negated()).unwrap();
            prop_assert!((negated.classical_bound - r.classical_bound).abs() < 1e-9);
        }
    }
}
