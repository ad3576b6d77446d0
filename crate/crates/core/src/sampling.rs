//! Random embedded paths and cycles, and adjacent pairs placed next to them.

use crate::cube::Vertex;
use crate::embed::{CubeCycle, CubePath};
use rand::seq::SliceRandom;
use rand::Rng;

/// A self-avoiding walk with `k` vertices in `Q_n`; restarts when it gets stuck.
pub fn random_path<R: Rng>(rng: &mut R, n: u32, k: usize) -> CubePath {
    loop {
        let mut verts = vec![Vertex(rng.gen_range(0..1u32 << n))];
        while verts.len() < k {
            let last = *verts.last().unwrap();
            let free: Vec<Vertex> =
                (0..n).map(|i| last.flip(i)).filter(|w| !verts.contains(w)).collect();
            match free.choose(rng) {
                Some(&w) => verts.push(w),
                None => break,
            }
        }
        if verts.len() == k {
            return CubePath::new(n, verts).unwrap();
        }
    }
}

/// A `k`-cycle of `Q_n`, by rejection: a random `k`-vertex path whose ends are adjacent.
pub fn random_cycle<R: Rng>(rng: &mut R, n: u32, k: usize) -> CubeCycle {
    loop {
        let p = random_path(rng, n, k);
        if p.first().is_adjacent(p.last()) {
            return CubeCycle::new(n, p.verts).unwrap();
        }
    }
}

/// An adjacent pair outside `avoid`, biased to sit next to it so that the
/// neighbour count is usually nonzero. `None` if no such pair exists.
pub fn random_pair_near<R: Rng>(rng: &mut R, n: u32, avoid: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let outside = |v: &Vertex| !avoid.contains(v);
    for _ in 0..64 {
        let anchor = if rng.gen_bool(0.8) {
            let a = avoid[rng.gen_range(0..avoid.len())];
            a.flip(rng.gen_range(0..n))
        } else {
            Vertex(rng.gen_range(0..1u32 << n))
        };
        if !outside(&anchor) {
            continue;
        }
        let partners: Vec<Vertex> = (0..n).map(|i| anchor.flip(i)).filter(outside).collect();
        if let Some(&b) = partners.choose(rng) {
            return Some((anchor, b));
        }
    }
    None
}
