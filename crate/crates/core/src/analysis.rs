//! Connectivity of `Q_n - S`, cut validation, the neighbour-count bounds for a
//! pair of adjacent vertices, and brute-force `g`-extra connectivity.

use std::collections::VecDeque;

use crate::bitset::{SmallCube, MAX_BITSET_DIM};
use crate::cube::{Cube, Vertex};
use crate::error::{Error, Result};
use crate::family::{CutFamily, Element};

/// Components of `Q_n` after deleting a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementReport {
    /// Vertices left after the deletion.
    pub remaining: usize,
    pub component_count: usize,
    /// Component sizes, in order of each component's smallest vertex.
    pub component_sizes: Vec<usize>,
    /// A component of minimum size (earliest by smallest vertex), sorted.
    pub smallest_component: Vec<Vertex>,
    /// At most one vertex is left.
    pub is_trivial: bool,
}

impl ComplementReport {
    pub fn is_disconnected(&self) -> bool {
        self.component_count >= 2
    }

    /// The complement is trivial or disconnected, i.e. the deleted set is a cut.
    pub fn is_cut(&self) -> bool {
        self.is_trivial || self.is_disconnected()
    }
}

/// Breadth-first component labelling of `Q_n - removed`, by label arithmetic.
pub fn components_after_removal(n: u32, removed: &[Vertex]) -> Result<ComplementReport> {
    let cube = Cube::new(n)?;
    if n > 24 {
        return Err(Error::Range(format!("component search supports n <= 24, got {n}")));
    }
    let size = cube.vertex_count();
    let mut gone = vec![false; size];
    for &v in removed {
        gone[cube.check_vertex(v)?.0 as usize] = true;
    }
    let remaining = gone.iter().filter(|g| !**g).count();
    let mut comp = vec![usize::MAX; size];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..size {
        if gone[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[start] = id;
        queue.push_back(start);
        let mut count = 0;
        while let Some(x) = queue.pop_front() {
            count += 1;
            for i in 0..n {
                let y = x ^ (1 << i);
                if !gone[y] && comp[y] == usize::MAX {
                    comp[y] = id;
                    queue.push_back(y);
                }
            }
        }
        sizes.push(count);
    }
    let smallest_component = match (0..sizes.len()).min_by_key(|&c| sizes[c]) {
        Some(c) => (0..size).filter(|&x| comp[x] == c).map(|x| Vertex(x as u32)).collect(),
        None => Vec::new(),
    };
    Ok(ComplementReport {
        remaining,
        component_count: sizes.len(),
        component_sizes: sizes,
        smallest_component,
        is_trivial: remaining <= 1,
    })
}

/// Outcome of checking a candidate cut family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ValidCut,
    /// Every element is admissible but `Q_n - V(F)` is connected.
    NotACut,
    MalformedElement { index: usize, reason: String },
}

/// Checks every element against the family's kind and mode, then whether
/// deleting `V(F)` leaves `Q_n` trivial or disconnected.
pub fn validate_cut(f: &CutFamily) -> Verdict {
    for (index, el) in f.elements.iter().enumerate() {
        if el.dim() != f.n {
            return Verdict::MalformedElement {
                index,
                reason: format!("element lives in Q_{}, family in Q_{}", el.dim(), f.n),
            };
        }
        if let Err(reason) = el.fits(f.kind, f.mode) {
            return Verdict::MalformedElement { index, reason };
        }
    }
    match components_after_removal(f.n, &f.vertex_set()) {
        Ok(report) if report.is_cut() => Verdict::ValidCut,
        Ok(_) => Verdict::NotACut,
        Err(e) => Verdict::MalformedElement { index: 0, reason: e.to_string() },
    }
}

/// `2⌊k/3⌋ + (k mod 3)`: the most vertices of a `P_k` that can neighbour an
/// adjacent pair outside it.
pub fn path_neighbor_bound(k: u32) -> u32 {
    2 * (k / 3) + k % 3
}

/// `|N({u, v}) ∩ V(obstacle)|` for an adjacent pair outside the obstacle.
pub fn check_pair_neighbor_counts(n: u32, pair: (Vertex, Vertex), obstacle: &Element) -> Result<usize> {
    let cube = Cube::new(n)?;
    cube.check_edge(pair.0, pair.1)?;
    obstacle.check()?;
    let verts = obstacle.vertices();
    if verts.contains(&pair.0) || verts.contains(&pair.1) {
        return Err(Error::Range("the pair meets the obstacle".into()));
    }
    Ok(verts
        .iter()
        .filter(|w| w.is_adjacent(pair.0) || w.is_adjacent(pair.1))
        .count())
}

/// Largest dimension searched exhaustively by [`g_extra_connectivity`].
pub const G_EXTRA_CEILING: u32 = 4;

/// `κ_g(Q_n)` by exhaustive search, smallest vertex sets first.
///
/// Returns `None` when no deletion disconnects `Q_n` into components of at
/// least `g + 1` vertices.
pub fn g_extra_connectivity(n: u32, g: u32) -> Result<Option<u32>> {
    g_extra_connectivity_with_ceiling(n, g, G_EXTRA_CEILING)
}

pub fn g_extra_connectivity_with_ceiling(n: u32, g: u32, ceiling: u32) -> Result<Option<u32>> {
    Cube::new(n)?;
    if n > ceiling || ceiling > MAX_BITSET_DIM.min(5) {
        return Err(Error::Budget(format!(
            "exhaustive g-extra search is limited to n <= {}, got n = {n}",
            ceiling.min(5)
        )));
    }
    if g > n {
        return Err(Error::Range(format!("g must satisfy 0 <= g <= n, got g = {g}")));
    }
    let small = SmallCube::new(n).expect("n checked");
    let order = 1u32 << n;
    let need = g as usize + 1;
    for s in 0..order {
        let found = subsets_of_size(order, s).any(|removed| {
            let comps = small.components(small.all() & !removed);
            comps.len() >= 2 && comps.iter().all(|c| c.count_ones() as usize >= need)
        });
        if found {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// All `width`-bit masks with exactly `s` bits set, in increasing order
/// (Gosper's hack).
pub(crate) fn subsets_of_size(width: u32, s: u32) -> impl Iterator<Item = u64> {
    let limit = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    let first = if s == 0 { Some(0) } else if s > width { None } else { Some(limit >> (width - s)) };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next <= limit).then_some(next)
    })
}
