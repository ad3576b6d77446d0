//! Exhaustive minimum structure / substructure cuts for small cubes.
//!
//! Every embedded copy of `H` (or of its connected subgraphs) is enumerated and
//! reduced to its vertex set; whether a family is a cut only depends on the
//! union of those sets. Families are searched by increasing size. One member
//! of each family is pinned to an orbit representative under `Aut(Q_n)`,
//! which is sound because the image of a cut under an automorphism is a cut
//! of the same size.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::bitset::{SmallCube, MAX_BITSET_DIM};
use crate::cube::{Automorphism, Cube, Vertex};
use crate::embed::{CubeCycle, CubePath};
use crate::error::{Error, Result};
use crate::family::{CubeStar, CutFamily, CutMode, Element, StructureKind};

/// Dimension ceiling for unrestricted exhaustive search.
pub const DEFAULT_MAX_DIMENSION: u32 = 4;
/// No budget may exceed this dimension.
pub const HARD_MAX_DIMENSION: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_family_size: usize,
    pub max_dimension: u32,
    /// Stop enumerating copies after this many; the search is then no longer
    /// exhaustive.
    pub element_cap: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { max_family_size: 4, max_dimension: DEFAULT_MAX_DIMENSION, element_cap: None }
    }
}

impl SearchBudget {
    pub fn with_max_family_size(mut self, s: usize) -> SearchBudget {
        self.max_family_size = s;
        self
    }

    pub fn with_max_dimension(mut self, d: u32) -> Result<SearchBudget> {
        if d > HARD_MAX_DIMENSION {
            return Err(Error::Budget(format!(
                "oracle dimension ceiling {d} exceeds the hard limit {HARD_MAX_DIMENSION}"
            )));
        }
        self.max_dimension = d;
        Ok(self)
    }

    pub fn with_element_cap(mut self, cap: Option<usize>) -> SearchBudget {
        self.element_cap = cap;
        self
    }

    /// Dimension 5 is admitted under the default ceiling only for `C_4`, `C_8`
    /// and `P_k` with `k <= 4`, and only up to families of three.
    pub fn admits(&self, n: u32, kind: StructureKind) -> Result<()> {
        if n > HARD_MAX_DIMENSION {
            return Err(Error::Budget(format!("n = {n} exceeds the oracle limit {HARD_MAX_DIMENSION}")));
        }
        if n <= self.max_dimension {
            return Ok(());
        }
        let small_kind = matches!(
            kind,
            StructureKind::Cycle(4) | StructureKind::Cycle(8) | StructureKind::Path(1..=4)
        );
        if n == HARD_MAX_DIMENSION && small_kind && self.max_family_size <= 3 {
            return Ok(());
        }
        Err(Error::Budget(format!(
            "n = {n} with {kind} and families up to {} exceeds the oracle budget (ceiling {})",
            self.max_family_size, self.max_dimension
        )))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleValue {
    /// Minimum cut size, proven by exhaustive search.
    Exact(usize),
    /// A witness of this size exists; smaller sizes were not ruled out.
    AtMost(usize),
    /// No cut smaller than this exists.
    AtLeast(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub copies: usize,
    pub distinct_vertex_sets: usize,
    pub orbits: usize,
    pub families_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: OracleValue,
    pub witness: Option<CutFamily>,
    pub exhaustive: bool,
    pub stats: SearchStats,
}

/// All embedded copies of `kind` (structure mode) or of its connected
/// subgraphs (substructure mode) in `Q_n`, in canonical vertex order.
pub fn enumerate_copies(n: u32, kind: StructureKind, mode: CutMode) -> Result<Vec<Element>> {
    Ok(enumerate_capped(n, kind, mode, None)?.0)
}

fn enumerate_capped(
    n: u32,
    kind: StructureKind,
    mode: CutMode,
    cap: Option<usize>,
) -> Result<(Vec<Element>, bool)> {
    Cube::new(n)?;
    if n > MAX_BITSET_DIM {
        return Err(Error::Budget(format!("enumeration is limited to n <= {MAX_BITSET_DIM}")));
    }
    let kind = kind.validate()?;
    let sub = mode == CutMode::Substructure;
    let mut out = Emitter { items: Vec::new(), cap: cap.unwrap_or(usize::MAX), truncated: false };
    match kind {
        StructureKind::Vertex => paths(n, 1, &mut out),
        StructureKind::Edge => {
            if sub {
                paths(n, 1, &mut out);
            }
            paths(n, 2, &mut out);
        }
        StructureKind::Path(k) => {
            let lo = if sub { 1 } else { k };
            for len in lo..=k {
                paths(n, len, &mut out);
            }
        }
        StructureKind::Cycle(k) => {
            if sub {
                for len in 1..=k {
                    paths(n, len, &mut out);
                }
            }
            cycles(n, k, &mut out);
        }
        StructureKind::Star(r) => {
            let lo = if sub { 0 } else { r };
            for leaves in lo..=r {
                stars(n, leaves, &mut out);
            }
        }
    }
    Ok((out.items, out.truncated))
}

struct Emitter {
    items: Vec<Element>,
    cap: usize,
    truncated: bool,
}

impl Emitter {
    fn push(&mut self, e: Element) -> bool {
        if self.items.len() >= self.cap {
            self.truncated = true;
            return false;
        }
        self.items.push(e);
        true
    }
}

/// Paths on `k` vertices, each once with its smaller endpoint first.
fn paths(n: u32, k: u32, out: &mut Emitter) {
    fn extend(n: u32, k: usize, stack: &mut Vec<Vertex>, used: &mut u64, out: &mut Emitter) -> bool {
        if stack.len() == k {
            if k == 1 || stack[0] < stack[k - 1] {
                return out.push(Element::Path(CubePath { n, verts: stack.clone() }));
            }
            return true;
        }
        let last = stack[stack.len() - 1];
        for i in 0..n {
            let w = last.flip(i);
            if *used >> w.0 & 1 == 0 {
                *used |= 1 << w.0;
                stack.push(w);
                let go_on = extend(n, k, stack, used, out);
                stack.pop();
                *used &= !(1 << w.0);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if u64::from(k) > 1u64 << n {
        return;
    }
    for s in 0..1u32 << n {
        let mut stack = vec![Vertex(s)];
        let mut used = 1u64 << s;
        if !extend(n, k as usize, &mut stack, &mut used, out) {
            return;
        }
    }
}

/// Cycles of length `k`, rooted at their smallest vertex, each orientation once.
fn cycles(n: u32, k: u32, out: &mut Emitter) {
    fn extend(n: u32, k: usize, stack: &mut Vec<Vertex>, used: &mut u64, out: &mut Emitter) -> bool {
        let root = stack[0];
        let last = stack[stack.len() - 1];
        if stack.len() == k {
            if last.is_adjacent(root) && stack[1] < stack[k - 1] {
                return out.push(Element::Cycle(CubeCycle { n, verts: stack.clone() }));
            }
            return true;
        }
        for i in 0..n {
            let w = last.flip(i);
            if w > root && *used >> w.0 & 1 == 0 {
                // the walk must be able to return to the root in time
                if w.distance(root) as usize > k - stack.len() {
                    continue;
                }
                *used |= 1 << w.0;
                stack.push(w);
                let go_on = extend(n, k, stack, used, out);
                stack.pop();
                *used &= !(1 << w.0);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if k < 4 || k % 2 == 1 || u64::from(k) > 1u64 << n {
        return;
    }
    for s in 0..1u32 << n {
        let mut stack = vec![Vertex(s)];
        let mut used = 1u64 << s;
        if !extend(n, k as usize, &mut stack, &mut used, out) {
            return;
        }
    }
}

/// Stars with exactly `leaves` leaves (sorted by coordinate).
fn stars(n: u32, leaves: u32, out: &mut Emitter) {
    if leaves > n {
        return;
    }
    for c in 0..1u32 << n {
        for coords in 0u32..1 << n {
            if coords.count_ones() != leaves {
                continue;
            }
            let mut ls: Vec<Vertex> = (0..n).filter(|i| coords >> i & 1 == 1).map(|i| Vertex(c).flip(i)).collect();
            ls.sort_unstable();
            if !out.push(Element::Star(CubeStar { n, center: Vertex(c), leaves: ls })) {
                return;
            }
        }
    }
}

/// Precomputed search space for one `(n, kind, mode)`.
#[derive(Debug)]
pub struct Oracle {
    n: u32,
    kind: StructureKind,
    mode: CutMode,
    cube: SmallCube,
    /// One element per distinct vertex set, in enumeration order.
    elements: Vec<Element>,
    masks: Vec<u64>,
    /// Smallest index in each automorphism orbit, ascending.
    reps: Vec<usize>,
    is_rep: Vec<bool>,
    copies: usize,
    truncated: bool,
    pruning: bool,
    checked: AtomicU64,
}

impl Oracle {
    pub fn new(n: u32, kind: StructureKind, mode: CutMode, budget: &SearchBudget) -> Result<Oracle> {
        budget.admits(n, kind)?;
        let (raw, truncated) = enumerate_capped(n, kind, mode, budget.element_cap)?;
        let cube = SmallCube::new(n).expect("dimension admitted by budget");
        let copies = raw.len();
        let mut index: HashMap<u64, usize> = HashMap::new();
        let mut elements = Vec::new();
        let mut masks = Vec::new();
        for el in raw {
            let m = cube.mask_of(el.vertices());
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(m) {
                slot.insert(masks.len());
                masks.push(m);
                elements.push(el);
            }
        }
        let reps = if truncated {
            (0..masks.len()).collect()
        } else {
            orbit_representatives(n, &masks, &index)?
        };
        let mut is_rep = vec![false; masks.len()];
        for &r in &reps {
            is_rep[r] = true;
        }
        Ok(Oracle {
            n,
            kind,
            mode,
            cube,
            elements,
            masks,
            reps,
            is_rep,
            copies,
            truncated,
            pruning: !truncated,
            checked: AtomicU64::new(0),
        })
    }

    /// Disables orbit pruning; every element may serve as the pinned member.
    pub fn without_orbit_pruning(mut self) -> Oracle {
        self.pruning = false;
        self.reps = (0..self.masks.len()).collect();
        self.is_rep = vec![true; self.masks.len()];
        self
    }

    pub fn is_exhaustive(&self) -> bool {
        !self.truncated
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            copies: self.copies,
            distinct_vertex_sets: self.masks.len(),
            orbits: if self.pruning { self.reps.len() } else { 0 },
            families_checked: self.checked.load(Ordering::Relaxed),
        }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    fn family(&self, picks: &[usize]) -> CutFamily {
        CutFamily {
            n: self.n,
            kind: self.kind,
            mode: self.mode,
            elements: picks.iter().map(|&i| self.elements[i].clone()).collect(),
        }
    }

    /// A family of exactly `s` elements whose removal is a cut, if any.
    ///
    /// Only exhaustive over families of size `s`; callers deepen `s` upward.
    pub fn find_cut_of_size(&self, s: usize) -> Option<CutFamily> {
        if s == 0 || self.masks.is_empty() {
            return None;
        }
        self.seeded(s).or_else(|| self.general(s)).map(|picks| self.family(&picks))
    }

    /// Families that cut off vertex `0` or edge `{0, 1}` by covering its
    /// neighbourhood with exactly `s` elements.
    fn seeded(&self, s: usize) -> Option<Vec<usize>> {
        for seed in [1u64, 0b11] {
            let target = self.cube.closed_neighborhood(seed) & !seed;
            let usable: Vec<usize> = (0..self.masks.len()).filter(|&i| self.masks[i] & seed == 0).collect();
            let mut picks = Vec::with_capacity(s);
            if self.cover(target, 0, s, &usable, &mut picks) {
                return Some(picks);
            }
        }
        None
    }

    fn cover(&self, target: u64, union: u64, s: usize, usable: &[usize], picks: &mut Vec<usize>) -> bool {
        let missing = target & !union;
        if picks.len() == s {
            self.checked.fetch_add(1, Ordering::Relaxed);
            return missing == 0 && self.cube.is_cut(union);
        }
        if missing == 0 {
            // a smaller family already covers, so it was found at a lower size
            return false;
        }
        let t = missing & missing.wrapping_neg();
        for &i in usable {
            let m = self.masks[i];
            if m & t == 0 || picks.contains(&i) {
                continue;
            }
            picks.push(i);
            if self.cover(target, union | m, s, usable, picks) {
                return true;
            }
            picks.pop();
        }
        false
    }

    fn general(&self, s: usize) -> Option<Vec<usize>> {
        self.reps.par_iter().find_map_first(|&r| {
            // families holding an earlier representative were covered by its task
            let others: Vec<usize> = (0..self.masks.len())
                .filter(|&j| j != r && !(self.pruning && self.is_rep[j] && j < r))
                .collect();
            let mut memo = HashSet::new();
            let mut chosen = Vec::with_capacity(s - 1);
            self.combine(self.masks[r], &others, 0, s - 1, &mut chosen, &mut memo)
                .then(|| std::iter::once(r).chain(chosen.iter().map(|&c| others[c])).collect())
        })
    }

    fn combine(
        &self,
        union: u64,
        others: &[usize],
        from: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        memo: &mut HashSet<u64>,
    ) -> bool {
        if left == 0 {
            if !memo.insert(union) {
                return false;
            }
            self.checked.fetch_add(1, Ordering::Relaxed);
            return self.cube.is_cut(union);
        }
        if others.len() < left {
            return false;
        }
        for c in from..=others.len() - left {
            chosen.push(c);
            if self.combine(union | self.masks[others[c]], others, c + 1, left - 1, chosen, memo) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Deepens the family size from 1 to `max_size`.
    pub fn min_cut(&self, max_size: usize) -> OracleResult {
        for s in 1..=max_size {
            if let Some(w) = self.find_cut_of_size(s) {
                let value = if self.truncated { OracleValue::AtMost(s) } else { OracleValue::Exact(s) };
                return OracleResult {
                    value,
                    witness: Some(w),
                    exhaustive: !self.truncated,
                    stats: self.stats(),
                };
            }
        }
        let value = if self.truncated { OracleValue::AtLeast(1) } else { OracleValue::AtLeast(max_size + 1) };
        OracleResult { value, witness: None, exhaustive: !self.truncated, stats: self.stats() }
    }
}

/// Orbit representatives of the vertex sets under `Aut(Q_n)`, found by
/// union-find over the images under a generating set: the transposition
/// `(0 1)`, the cyclic shift of coordinates, and the translation by `e_0`.
fn orbit_representatives(n: u32, masks: &[u64], index: &HashMap<u64, usize>) -> Result<Vec<usize>> {
    let mut gens = vec![Automorphism::translation(n, Vertex(1))?];
    if n >= 2 {
        let mut swap: Vec<u32> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(Automorphism::new(swap, Vertex::ZERO)?);
        gens.push(Automorphism::new((0..n).map(|i| (i + 1) % n).collect(), Vertex::ZERO)?);
    }
    let tables: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| (0..1u32 << n).map(|v| g.apply(Vertex(v)).0).collect())
        .collect();
    let mut parent: Vec<usize> = (0..masks.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &m) in masks.iter().enumerate() {
        for table in &tables {
            let image = crate::bitset::BitIter(m).fold(0u64, |acc, v| acc | 1 << table[v]);
            let j = *index.get(&image).ok_or_else(|| {
                Error::Inconsistent("element set is not closed under automorphisms".into())
            })?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            // keep the smaller index as root so roots are orbit minima
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    Ok((0..masks.len()).filter(|&i| find(&mut parent, i) == i).collect())
}

/// Minimum `H`-structure / substructure cut of `Q_n` within the budget.
pub fn min_structure_cut(
    n: u32,
    kind: StructureKind,
    mode: CutMode,
    budget: &SearchBudget,
) -> Result<OracleResult> {
    let oracle = Oracle::new(n, kind, mode, budget)?;
    Ok(oracle.min_cut(budget.max_family_size))
}

/// Whether no family of fewer than `s` elements is a cut.
pub fn verify_no_smaller_cut(n: u32, kind: StructureKind, mode: CutMode, s: usize) -> Result<bool> {
    let budget = SearchBudget::default().with_max_family_size(s.saturating_sub(1));
    let oracle = Oracle::new(n, kind, mode, &budget)?;
    if !oracle.is_exhaustive() {
        return Err(Error::Budget("enumeration was truncated".into()));
    }
    Ok((1..s).all(|size| oracle.find_cut_of_size(size).is_none()))
}
