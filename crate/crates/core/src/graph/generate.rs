use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Digraph, GraphError};

fn backbone(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut d = Digraph::empty(n);
    if n >= 2 {
        for i in 0..n {
            let (u, v) = (perm[i], perm[(i + 1) % n]);
            if !d.has_arc(u, v) {
                d.add_arc(u, v).expect("fresh arc");
            }
        }
    }
    d
}

/// Deterministic strong digraph: a random Hamiltonian cycle plus every other
/// ordered pair independently with probability `density`. May contain
/// antiparallel pairs.
pub fn generate_strong_digraph(n: usize, density: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = backbone(n, &mut rng);
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) && rng.gen_bool(density.clamp(0.0, 1.0)) {
                d.add_arc(u, v).expect("fresh arc");
            }
        }
    }
    d
}

/// Like [`generate_strong_digraph`] but with no antiparallel pairs: each
/// unordered pair off the cycle gets at most one arc, in a random direction.
/// There is no oriented strong digraph on two vertices.
pub fn generate_strong_oriented(n: usize, density: f64, seed: u64) -> Result<Digraph, GraphError> {
    if n == 2 {
        return Err(GraphError::Antiparallel(0, 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = backbone(n, &mut rng);
    for u in 0..n {
        for v in u + 1..n {
            if d.adjacent(u, v) || !rng.gen_bool(density.clamp(0.0, 1.0)) {
                continue;
            }
            if rng.gen_bool(0.5) {
                d.add_arc(u, v).expect("fresh arc");
            } else {
                d.add_arc(v, u).expect("fresh arc");
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_strong() {
        for seed in 0..50 {
            for n in 1..12 {
                let d = generate_strong_digraph(n, 0.2, seed);
                assert_eq!(d, generate_strong_digraph(n, 0.2, seed));
                assert!(d.is_strongly_connected());
                if n != 2 {
                    let o = generate_strong_oriented(n, 0.3, seed).unwrap();
                    assert!(o.is_strongly_connected());
                    assert!(o.check_oriented().is_ok());
                }
            }
        }
    }

    #[test]
    fn density_extremes() {
        let d = generate_strong_digraph(6, 0.0, 3);
        assert_eq!(d.arc_count(), 6);
        let d = generate_strong_digraph(6, 1.0, 3);
        assert_eq!(d.arc_count(), 30);
        let t = generate_strong_oriented(6, 1.0, 3).unwrap();
        assert_eq!(t.arc_count(), 15);
    }

    #[test]
    fn two_vertices() {
        assert_eq!(generate_strong_digraph(2, 0.5, 0).arc_count(), 2);
        assert!(generate_strong_oriented(2, 0.5, 0).is_err());
    }
}
