//! Random instances shared by the integration tests.
#![allow(dead_code)]

use hyperbetti::{Face, Hypergraph, SimplicialComplex, VertexUniverse};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_face<R: Rng>(rng: &mut R, n: usize, p: f64) -> Face {
    Face::from_indices((0..n).filter(|_| rng.gen_bool(p)))
}

/// Complex on `1..=max_n` vertices generated by up to six random faces.
pub fn random_complex<R: Rng>(rng: &mut R, max_n: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_n);
    random_complex_on(rng, n)
}

pub fn random_complex_on<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let k = rng.gen_range(0..=6);
    let p = rng.gen_range(0.2..0.8);
    let facets = (0..k).map(|_| random_face(rng, n, p)).collect();
    SimplicialComplex::from_facets(VertexUniverse::new(n).unwrap(), facets).unwrap()
}

/// `d`-uniform hypergraph keeping each `d`-subset with a random probability.
pub fn random_uniform<R: Rng>(rng: &mut R, n: usize, d: usize) -> Hypergraph {
    let p = rng.gen_range(0.05..0.6);
    let edges = Face::full(n).subsets_of_size(d).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(VertexUniverse::new(n).unwrap(), edges).unwrap()
}

/// Hypergraph with edges of sizes 2 to 4.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let k = rng.gen_range(0..=8);
    let edges = (0..k)
        .map(|_| {
            let size = rng.gen_range(2..=4.min(n));
            let mut all = Face::full(n).subsets_of_size(size);
            all.swap_remove(rng.gen_range(0..all.len()))
        })
        .collect();
    Hypergraph::new(VertexUniverse::new(n).unwrap(), edges).unwrap()
}

/// Non-increasing partitions of `total` into parts of size at most `max_part`
/// with at most `max_parts` parts.
pub fn partitions(total: usize, max_part: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Every `a` with `1 ≤ aₛ ≤ nₛ`.
pub fn compositions_within(n: &[usize]) -> Vec<Vec<usize>> {
    n.iter().fold(vec![Vec::new()], |acc, &m| {
        acc.into_iter()
            .flat_map(|prefix| {
                (1..=m).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}
