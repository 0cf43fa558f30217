//! Shared helpers for the integration suites: seeded random complexes and
//! small comparison utilities.

#![allow(dead_code)]

use macx::bitset::VertexSet;
use macx::complex::Complex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random complex on labels "1".."m" (m ≤ 9). Never the void complex; may
/// have ghost vertices unless `ghost_free`.
pub fn random_complex(rng: &mut ChaCha8Rng, m: usize, ghost_free: bool) -> Complex {
    assert!(m <= 9);
    let labels: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let n_facets = rng.gen_range(1..=m + 2);
    let mut faces: Vec<Vec<String>> = Vec::new();
    for _ in 0..n_facets {
        let size = rng.gen_range(1..=m);
        let mut idx: Vec<usize> = (0..m).collect();
        idx.shuffle(rng);
        faces.push(idx[..size].iter().map(|&i| labels[i].clone()).collect());
    }
    if ghost_free {
        let mut covered = vec![false; m];
        for f in &faces {
            for l in f {
                covered[l.parse::<usize>().unwrap() - 1] = true;
            }
        }
        for (i, c) in covered.iter().enumerate() {
            if !c {
                faces.push(vec![labels[i].clone()]);
            }
        }
    }
    Complex::from_labels(labels, faces).unwrap()
}

/// Random proper complex (not the full simplex) on m vertices.
pub fn random_proper_complex(rng: &mut ChaCha8Rng, m: usize, ghost_free: bool) -> Complex {
    loop {
        let k = random_complex(rng, m, ghost_free);
        if !k.is_full_simplex() {
            return k;
        }
    }
}

/// All complexes on a fixed small vertex set, enumerated by antichains of
/// candidate facets; exhaustive for tiny m via generating-face subsets.
pub fn exhaustive_complexes(m: usize, limit: usize) -> Vec<Complex> {
    // enumerate subsets of the nonempty-face powerset as generating sets is
    // astronomically redundant; instead walk all antichains greedily up to
    // `limit`, seeded by every single-facet complex
    let labels: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    let total = 1u64 << m;
    // generating sets: every subset of the set of nonempty subsets is too
    // much; take all complexes generated by up to three faces
    let mut seen = std::collections::HashSet::new();
    for a in 1..total {
        for b in a..total {
            for c in b..total {
                if out.len() >= limit {
                    return out;
                }
                let mk = |mask: u64| -> Vec<String> {
                    (0..m).filter(|i| mask & (1 << i) != 0).map(|i| labels[i].clone()).collect()
                };
                let k = Complex::from_labels(
                    labels.clone(),
                    vec![mk(a), mk(b), mk(c)],
                )
                .unwrap();
                let key: Vec<VertexSet> = k.facets().to_vec();
                if seen.insert(key) {
                    out.push(k);
                }
            }
        }
    }
    out
}

pub fn facet_label_sets(k: &Complex) -> std::collections::BTreeSet<Vec<String>> {
    k.facets()
        .iter()
        .map(|f| {
            let mut v = k.ground().labels_of(f);
            v.sort();
            v
        })
        .collect()
}

/// Equality as abstract complexes: same facet label sets.
pub fn same_complex(a: &Complex, b: &Complex) -> bool {
    facet_label_sets(a) == facet_label_sets(b)
}
