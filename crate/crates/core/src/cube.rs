//! The hypercube `Q_n`: labels, adjacency and the automorphism group.
//!
//! The graph is never materialised. A vertex is an `n`-bit label whose bit `i`
//! holds coordinate `x^i`, so the neighbour across coordinate `i` is a single
//! XOR with `1 << i`. Rendered strings print `x^0` first.

use std::fmt;

use crate::error::{Error, Result};

/// Largest dimension accepted anywhere in the crate.
pub const MAX_DIM: u32 = 30;

/// A vertex of `Q_n`, stored as its bit label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vertex(pub u32);

impl Vertex {
    pub const ZERO: Vertex = Vertex(0);

    /// The unit vector `e_i`, i.e. `(0…0)^i`.
    pub fn unit(i: u32) -> Vertex {
        Vertex(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Flips coordinate `i` without a range check.
    pub fn flip(self, i: u32) -> Vertex {
        Vertex(self.0 ^ (1 << i))
    }

    pub fn bit(self, i: u32) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn distance(self, other: Vertex) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        self.distance(other) == 1
    }

    /// The coordinate on which two adjacent vertices differ.
    pub fn edge_coordinate(self, other: Vertex) -> Option<u32> {
        self.is_adjacent(other)
            .then(|| (self.0 ^ other.0).trailing_zeros())
    }

    /// Renders as `x^0 x^1 … x^{n-1}`.
    pub fn render(self, n: u32) -> String {
        (0..n).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }
}

/// Number of coordinates in which `u` and `v` differ.
pub fn hamming_distance(u: Vertex, v: Vertex) -> u32 {
    u.distance(v)
}

/// The `n`-dimensional hypercube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    dim: u32,
}

impl Cube {
    pub fn new(dim: u32) -> Result<Cube> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Dimension(dim));
        }
        Ok(Cube { dim })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.dim
    }

    pub fn edge_count(&self) -> u64 {
        u64::from(self.dim) << (self.dim - 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        u64::from(v.0) < 1u64 << self.dim
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<Vertex> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::Vertex { label: v.0, dim: self.dim })
        }
    }

    pub fn check_coordinate(&self, i: u32) -> Result<u32> {
        if i < self.dim {
            Ok(i)
        } else {
            Err(Error::Coordinate { coord: i, dim: self.dim })
        }
    }

    pub fn check_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u.is_adjacent(v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u, v))
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..1u32 << self.dim).map(Vertex)
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            (0..self.dim)
                .map(move |i| (u, u.flip(i)))
                .filter(|(u, v)| u < v)
        })
    }

    /// `(v)^i`.
    pub fn neighbor(&self, v: Vertex, i: u32) -> Result<Vertex> {
        self.check_vertex(v)?;
        self.check_coordinate(i)?;
        Ok(v.flip(i))
    }

    /// `N(v)` in coordinate order. `v` must be a vertex of this cube.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        (0..self.dim).map(move |i| v.flip(i))
    }

    /// `N(u) ∩ N(v)`, sorted by label.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut out: Vec<Vertex> = match u.distance(v) {
            0 => self.neighbors(u).collect(),
            // the two mixed corners of the square spanned by u and v
            2 => {
                let diff = u.0 ^ v.0;
                let lo = diff & diff.wrapping_neg();
                vec![Vertex(u.0 ^ lo), Vertex(u.0 ^ (diff ^ lo))]
            }
            _ => Vec::new(),
        };
        out.sort_unstable();
        Ok(out)
    }

    /// Partitions the vertex set by coordinate `i`: `(x^i = 0, x^i = 1)`.
    pub fn split(&self, i: u32) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
        if self.dim < 2 {
            return Err(Error::Range(format!("split needs n >= 2, got {}", self.dim)));
        }
        self.check_coordinate(i)?;
        Ok(self.vertices().partition(|v| !v.bit(i)))
    }

    pub fn render(&self, v: Vertex) -> String {
        v.render(self.dim)
    }

    /// Parses an `x^0 … x^{n-1}` bit string of exactly `n` characters.
    pub fn parse(&self, s: &str) -> Result<Vertex> {
        if s.len() != self.dim as usize {
            return Err(Error::Range(format!(
                "vertex {s:?} must have exactly {} bits",
                self.dim
            )));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Range(format!("vertex {s:?} is not a bit string"))),
            }
        }
        Ok(Vertex(bits))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}", self.dim)
    }
}

/// An automorphism of `Q_n`: move coordinate `i` to position `perm[i]`, then
/// XOR with `mask`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    perm: Vec<u32>,
    mask: Vertex,
}

impl Automorphism {
    pub fn new(perm: Vec<u32>, mask: Vertex) -> Result<Automorphism> {
        let n = perm.len() as u32;
        let cube = Cube::new(n)?;
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::Permutation(format!("{perm:?}")));
            }
        }
        cube.check_vertex(mask)?;
        Ok(Automorphism { perm, mask })
    }

    pub fn identity(n: u32) -> Result<Automorphism> {
        Automorphism::new((0..n).collect(), Vertex::ZERO)
    }

    pub fn translation(n: u32, mask: Vertex) -> Result<Automorphism> {
        Automorphism::new((0..n).collect(), mask)
    }

    pub fn dim(&self) -> u32 {
        self.perm.len() as u32
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn mask(&self) -> Vertex {
        self.mask
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        let mut out = 0u32;
        for (i, &p) in self.perm.iter().enumerate() {
            out |= (v.0 >> i & 1) << p;
        }
        Vertex(out ^ self.mask.0)
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        let perm = self.perm.iter().map(|&p| other.perm[p as usize]).collect();
        let mask = Vertex(other.apply(self.mask).0);
        Automorphism { perm, mask }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        let inv_perm = Automorphism { perm, mask: Vertex::ZERO };
        let mask = inv_perm.apply(self.mask);
        Automorphism { perm: inv_perm.perm, mask }
    }

    /// All `n!·2^n` automorphisms. Only sensible for small `n`.
    pub fn all(n: u32) -> Result<Vec<Automorphism>> {
        if n > 6 {
            return Err(Error::Range(format!(
                "refusing to list the automorphism group of Q_{n}"
            )));
        }
        Cube::new(n)?;
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        let mut out = Vec::with_capacity(perms.len() << n);
        for perm in perms {
            for mask in 0..1u32 << n {
                out.push(Automorphism { perm: perm.clone(), mask: Vertex(mask) });
            }
        }
        Ok(out)
    }
}

fn permutations(items: &mut Vec<u32>, start: usize, out: &mut Vec<Vec<u32>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}

/// An automorphism sending the ordered edge `src` to the ordered edge `dst`.
///
/// The permutation is the transposition of the two edge coordinates (identity
/// when they agree) and the mask then moves `src.0` onto `dst.0`.
pub fn edge_mapping_automorphism(
    n: u32,
    src: (Vertex, Vertex),
    dst: (Vertex, Vertex),
) -> Result<Automorphism> {
    let cube = Cube::new(n)?;
    cube.check_edge(src.0, src.1)?;
    cube.check_edge(dst.0, dst.1)?;
    let from = src.0.edge_coordinate(src.1).expect("checked edge");
    let to = dst.0.edge_coordinate(dst.1).expect("checked edge");
    let mut perm: Vec<u32> = (0..n).collect();
    perm.swap(from as usize, to as usize);
    let moved = Automorphism { perm, mask: Vertex::ZERO };
    let mask = Vertex(moved.apply(src.0).0 ^ dst.0 .0);
    Ok(Automorphism { perm: moved.perm, mask })
}
