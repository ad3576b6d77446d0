//! Vertex sets of small cubes (`n <= 6`) packed into one `u64`.
//!
//! Bit `v` of a mask is vertex `v`. Neighbourhoods and reachability are
//! computed word-parallel, one shift per coordinate.

use crate::cube::Vertex;

pub const MAX_BITSET_DIM: u32 = 6;

/// Vertices with `x^i = 0`, for each coordinate `i` of `Q_6`.
const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallCube {
    n: u32,
    all: u64,
}

impl SmallCube {
    pub fn new(n: u32) -> Option<SmallCube> {
        (1..=MAX_BITSET_DIM).contains(&n).then(|| SmallCube {
            n,
            all: if n == 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 },
        })
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn all(&self) -> u64 {
        self.all
    }

    pub fn mask_of(&self, verts: impl IntoIterator<Item = Vertex>) -> u64 {
        verts.into_iter().fold(0, |m, v| m | 1 << v.0)
    }

    pub fn vertices_of(&self, mask: u64) -> Vec<Vertex> {
        BitIter(mask).map(|b| Vertex(b as u32)).collect()
    }

    /// `N(S) ∪ S`.
    pub fn closed_neighborhood(&self, set: u64) -> u64 {
        let mut out = set;
        for (i, low) in LOW.iter().take(self.n as usize).enumerate() {
            let shift = 1u32 << i;
            out |= (set & low) << shift | (set & !low) >> shift;
        }
        out & self.all
    }

    /// Vertices of `alive` reachable from `seed` inside `alive`.
    pub fn reach(&self, seed: u64, alive: u64) -> u64 {
        let mut cur = seed & alive;
        loop {
            let next = self.closed_neighborhood(cur) & alive;
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Whether removing `removed` leaves at most one vertex or a disconnected graph.
    pub fn is_cut(&self, removed: u64) -> bool {
        let alive = self.all & !removed;
        if alive.count_ones() <= 1 {
            return true;
        }
        self.reach(alive & alive.wrapping_neg(), alive) != alive
    }

    /// Components of the induced subgraph on `alive`, ordered by smallest vertex.
    pub fn components(&self, alive: u64) -> Vec<u64> {
        let mut rest = alive & self.all;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }
}

/// Iterates the set bit positions of a mask in increasing order.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
