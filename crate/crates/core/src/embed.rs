//! Paths and cycles embedded in `Q_n`, and the constructive embeddings the cut
//! families are assembled from.

use std::collections::HashSet;
use std::fmt;

use crate::cube::{edge_mapping_automorphism, Automorphism, Cube, Vertex};
use crate::error::{Error, Result};

/// Why a vertex sequence fails to be a path or cycle of `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeDefect {
    Empty,
    BadDimension(u32),
    OutOfRange { index: usize },
    Repeated { index: usize },
    NotAdjacent { index: usize },
    CycleLength(usize),
    LeafNotAdjacent { index: usize },
}

impl fmt::Display for ShapeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeDefect::Empty => write!(f, "no vertices"),
            ShapeDefect::BadDimension(n) => write!(f, "unsupported dimension {n}"),
            ShapeDefect::OutOfRange { index } => write!(f, "vertex {index} is outside the cube"),
            ShapeDefect::Repeated { index } => write!(f, "vertex {index} repeats an earlier vertex"),
            ShapeDefect::NotAdjacent { index } => {
                write!(f, "vertices {index} and {} are not adjacent", index + 1)
            }
            ShapeDefect::CycleLength(l) => write!(f, "cycle length {l} is not even and >= 4"),
            ShapeDefect::LeafNotAdjacent { index } => {
                write!(f, "leaf {index} is not adjacent to the centre")
            }
        }
    }
}

impl From<ShapeDefect> for Error {
    fn from(d: ShapeDefect) -> Error {
        Error::Shape(d.to_string())
    }
}

pub(crate) fn check_distinct_in_cube(n: u32, verts: &[Vertex]) -> std::result::Result<(), ShapeDefect> {
    let cube = Cube::new(n).map_err(|_| ShapeDefect::BadDimension(n))?;
    if verts.is_empty() {
        return Err(ShapeDefect::Empty);
    }
    let mut seen = HashSet::with_capacity(verts.len());
    for (index, &v) in verts.iter().enumerate() {
        if !cube.contains(v) {
            return Err(ShapeDefect::OutOfRange { index });
        }
        if !seen.insert(v) {
            return Err(ShapeDefect::Repeated { index });
        }
    }
    Ok(())
}

/// A path `(v_0, …, v_{k-1})` of distinct, consecutively adjacent vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubePath {
    pub n: u32,
    pub verts: Vec<Vertex>,
}

impl CubePath {
    pub fn new(n: u32, verts: Vec<Vertex>) -> Result<CubePath> {
        let p = CubePath { n, verts };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> std::result::Result<(), ShapeDefect> {
        check_distinct_in_cube(self.n, &self.verts)?;
        match self.verts.windows(2).position(|w| !w[0].is_adjacent(w[1])) {
            Some(index) => Err(ShapeDefect::NotAdjacent { index }),
            None => Ok(()),
        }
    }

    /// Number of vertices (the `k` in `P_k`).
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.verts[0]
    }

    pub fn last(&self) -> Vertex {
        self.verts[self.verts.len() - 1]
    }

    /// Reversed if needed so the smaller endpoint comes first.
    pub fn canonical(mut self) -> CubePath {
        if self.last() < self.first() {
            self.verts.reverse();
        }
        self
    }
}

/// A cycle `(v_0, …, v_{l-1})`; the closing edge `v_{l-1} v_0` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeCycle {
    pub n: u32,
    pub verts: Vec<Vertex>,
}

impl CubeCycle {
    pub fn new(n: u32, verts: Vec<Vertex>) -> Result<CubeCycle> {
        let c = CubeCycle { n, verts };
        c.check()?;
        Ok(c)
    }

    pub fn check(&self) -> std::result::Result<(), ShapeDefect> {
        check_distinct_in_cube(self.n, &self.verts)?;
        let l = self.verts.len();
        if l < 4 || l % 2 == 1 {
            return Err(ShapeDefect::CycleLength(l));
        }
        match (0..l).find(|&i| !self.verts[i].is_adjacent(self.verts[(i + 1) % l])) {
            Some(index) => Err(ShapeDefect::NotAdjacent { index }),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Cycle edges in order, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let l = self.verts.len();
        (0..l).map(move |i| (self.verts[i], self.verts[(i + 1) % l]))
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Rotated and oriented so the smallest label comes first, followed by its
    /// smaller cycle neighbour.
    pub fn canonical(mut self) -> CubeCycle {
        let l = self.verts.len();
        if l == 0 {
            return self;
        }
        let start = (0..l).min_by_key(|&i| self.verts[i]).expect("non-empty");
        self.verts.rotate_left(start);
        if l > 2 && self.verts[l - 1] < self.verts[1] {
            self.verts[1..].reverse();
        }
        self
    }

    pub fn map(&self, a: &Automorphism) -> CubeCycle {
        CubeCycle { n: self.n, verts: self.verts.iter().map(|&v| a.apply(v)).collect() }
    }
}

/// The `i`-th reflected Gray code word.
pub fn gray_code(i: u32) -> u32 {
    i ^ (i >> 1)
}

/// Hamiltonian cycle of `Q_n` in reflected Gray code order.
pub fn gray_hamiltonian(n: u32) -> Result<CubeCycle> {
    if n < 2 {
        return Err(Error::Range(format!("a Hamiltonian cycle needs n >= 2, got {n}")));
    }
    Cube::new(n)?;
    let verts = (0..1u32 << n).map(|i| Vertex(gray_code(i))).collect();
    Ok(CubeCycle { n, verts })
}

/// A Hamiltonian cycle of `Q_n` that uses the edge `e`.
pub fn hamiltonian_through_edge(n: u32, e: (Vertex, Vertex)) -> Result<CubeCycle> {
    let gray = gray_hamiltonian(n)?;
    // (0, 1) is the first Gray step
    let a = edge_mapping_automorphism(n, (Vertex(0), Vertex(1)), e)?;
    Ok(gray.map(&a).canonical())
}

/// A cycle of length `l` in `Q_n` for even `4 <= l <= 2^n`.
///
/// Walks the first `l/2` Gray words of `Q_{n-1}` with `x^{n-1} = 0`, crosses,
/// and walks them back with `x^{n-1} = 1`.
pub fn embed_even_cycle(n: u32, l: usize) -> Result<CubeCycle> {
    let cube = Cube::new(n)?;
    if l % 2 == 1 || l < 4 || l > cube.vertex_count() {
        return Err(Error::Range(format!(
            "cycle length {l} must be even with 4 <= l <= 2^{n}"
        )));
    }
    let half = (l / 2) as u32;
    let top = 1u32 << (n - 1);
    let verts = (0..half)
        .map(|i| Vertex(gray_code(i)))
        .chain((0..half).rev().map(|i| Vertex(gray_code(i) | top)))
        .collect();
    Ok(CubeCycle { n, verts }.canonical())
}

/// A cycle of length `l` through the edge `e`.
pub fn cycle_through_edge(n: u32, l: usize, e: (Vertex, Vertex)) -> Result<CubeCycle> {
    let base = embed_even_cycle(n, l)?;
    // the Gray walk starts 0 -> 1, which canonical() keeps as the first edge
    debug_assert_eq!(&base.verts[..2], &[Vertex(0), Vertex(1)]);
    let a = edge_mapping_automorphism(n, (Vertex(0), Vertex(1)), e)?;
    Ok(base.map(&a).canonical())
}

/// A path of odd length `q` (so `q + 1` vertices) from `u` to its neighbour `v`.
///
/// For `q >= 3` this is a `(q+1)`-cycle through `uv` with that edge removed.
pub fn odd_path_between_adjacent(n: u32, u: Vertex, v: Vertex, q: usize) -> Result<CubePath> {
    let cube = Cube::new(n)?;
    cube.check_edge(u, v)?;
    if q % 2 == 0 || q == 0 || q >= cube.vertex_count() {
        return Err(Error::Range(format!(
            "path length {q} must be odd with 1 <= q <= 2^{n} - 1"
        )));
    }
    if q == 1 {
        return CubePath::new(n, vec![u, v]);
    }
    let cycle = cycle_through_edge(n, q + 1, (u, v))?;
    let mut verts = cycle.verts;
    let at = verts.iter().position(|&w| w == u).expect("edge endpoint on cycle");
    verts.rotate_left(at);
    // walk away from v so that v comes last
    if verts[1] == v {
        verts[1..].reverse();
    }
    debug_assert_eq!(verts[verts.len() - 1], v);
    CubePath::new(n, verts)
}

/// The subcube of `Q_n` obtained by fixing some coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcube {
    ambient: u32,
    fixed_mask: u32,
    fixed_bits: u32,
    free: Vec<u32>,
}

impl Subcube {
    pub fn new(ambient: u32, fixed: &[(u32, bool)]) -> Result<Subcube> {
        let cube = Cube::new(ambient)?;
        let mut fixed_mask = 0u32;
        let mut fixed_bits = 0u32;
        for &(coord, bit) in fixed {
            cube.check_coordinate(coord)?;
            if fixed_mask >> coord & 1 == 1 {
                return Err(Error::CoordinateCollision(coord));
            }
            fixed_mask |= 1 << coord;
            fixed_bits |= u32::from(bit) << coord;
        }
        let free = (0..ambient).filter(|c| fixed_mask >> c & 1 == 0).collect();
        Ok(Subcube { ambient, fixed_mask, fixed_bits, free })
    }

    pub fn inner_dim(&self) -> u32 {
        self.free.len() as u32
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.0 & self.fixed_mask == self.fixed_bits && u64::from(v.0) < 1u64 << self.ambient
    }

    /// Inner bit `j` becomes ambient coordinate `free[j]`.
    pub fn lift(&self, v: Vertex) -> Vertex {
        let mut out = self.fixed_bits;
        for (j, &c) in self.free.iter().enumerate() {
            out |= (v.0 >> j & 1) << c;
        }
        Vertex(out)
    }

    fn check_inner(&self, n: u32) -> Result<()> {
        if n == self.inner_dim() {
            Ok(())
        } else {
            Err(Error::Range(format!(
                "object lives in Q_{n} but the subcube has dimension {}",
                self.inner_dim()
            )))
        }
    }

    pub fn lift_path(&self, p: &CubePath) -> Result<CubePath> {
        self.check_inner(p.n)?;
        CubePath::new(self.ambient, p.verts.iter().map(|&v| self.lift(v)).collect())
    }

    pub fn lift_cycle(&self, c: &CubeCycle) -> Result<CubeCycle> {
        self.check_inner(c.n)?;
        CubeCycle::new(self.ambient, c.verts.iter().map(|&v| self.lift(v)).collect())
    }
}

/// Relabels `inner` into `Q_n` with the given coordinates held fixed.
pub fn restrict_to_subcube(n: u32, fixed: &[(u32, bool)], inner: &CubePath) -> Result<CubePath> {
    Subcube::new(n, fixed)?.lift_path(inner)
}
