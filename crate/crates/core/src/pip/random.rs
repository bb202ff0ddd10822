//! Seeded random PIPs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Pip;
use crate::error::{Error, Result};
use crate::limits;

/// A random PIP on `n` elements, deterministic in `seed`.
///
/// Each pair `i < j` becomes an order relation with probability
/// `order_density`. Each remaining incomparable pair becomes a generating
/// inconsistent pair with probability `incons_density`, unless the two
/// elements have a common upper bound (which would force an element to be
/// inconsistent with itself); such pairs are skipped.
pub fn random_pip(seed: u64, n: usize, order_density: f64, incons_density: f64) -> Result<Pip> {
    for d in [order_density, incons_density] {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::Precondition(format!("density {d} outside [0, 1]")));
        }
    }
    limits::check_elements("random PIP", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(order_density) {
                covers.push((i, j));
            }
        }
    }
    let order = Pip::new(n, &covers, &[])?;
    let mut incons = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if order.comparable(i, j) {
                continue;
            }
            let sampled = rng.gen_bool(incons_density);
            if sampled && order.above(i).is_disjoint(order.above(j)) {
                incons.push((i, j));
            }
        }
    }
    Pip::new(n, &covers, &incons)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_densities_give_antichain() {
        for seed in 0..5 {
            assert_eq!(random_pip(seed, 6, 0.0, 0.0).unwrap(), Pip::antichain(6));
        }
    }

    #[test]
    fn full_order_density_gives_total_order() {
        let p = random_pip(3, 7, 1.0, 1.0).unwrap();
        assert_eq!(p, Pip::chain(7));
    }

    #[test]
    fn deterministic() {
        for seed in 0..10 {
            assert_eq!(
                random_pip(seed, 9, 0.3, 0.3).unwrap(),
                random_pip(seed, 9, 0.3, 0.3).unwrap()
            );
        }
    }

    #[test]
    fn full_incons_density_on_antichain_is_complete_graph() {
        let p = random_pip(1, 5, 0.0, 1.0).unwrap();
        assert_eq!(p.inconsistent_pair_count(), 10);
    }

    #[test]
    fn bad_density() {
        assert!(random_pip(0, 3, 1.5, 0.0).is_err());
        assert!(random_pip(0, 3, f64::NAN, 0.0).is_err());
    }
}
