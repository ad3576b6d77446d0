//! Structures `H`, the elements of a cut, and cut families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cube::{Cube, Vertex};
use crate::embed::{check_distinct_in_cube, CubeCycle, CubePath, ShapeDefect};
use crate::error::{Error, Result};

/// The structure `H` a cut is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    /// `K_1`
    Vertex,
    /// `K_{1,1}`
    Edge,
    /// `K_{1,r}`
    Star(u32),
    /// `P_k`, a path on `k` vertices
    Path(u32),
    /// `C_k`
    Cycle(u32),
}

impl StructureKind {
    pub fn validate(self) -> Result<StructureKind> {
        match self {
            StructureKind::Star(0) => Err(Error::Range("a star needs r >= 1".into())),
            StructureKind::Path(0) => Err(Error::Range("a path needs k >= 1".into())),
            StructureKind::Cycle(k) if k < 4 || k % 2 == 1 => Err(Error::Range(format!(
                "cycle length {k} must be even and >= 4 to embed in a hypercube"
            ))),
            kind => Ok(kind),
        }
    }

    /// Vertex count of `H`.
    pub fn order(self) -> u32 {
        match self {
            StructureKind::Vertex => 1,
            StructureKind::Edge => 2,
            StructureKind::Star(r) => r + 1,
            StructureKind::Path(k) | StructureKind::Cycle(k) => k,
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Vertex => write!(f, "K_1"),
            StructureKind::Edge => write!(f, "K_{{1,1}}"),
            StructureKind::Star(r) => write!(f, "K_{{1,{r}}}"),
            StructureKind::Path(k) => write!(f, "P_{k}"),
            StructureKind::Cycle(k) => write!(f, "C_{k}"),
        }
    }
}

/// Whether elements must be copies of `H` or may be connected subgraphs of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutMode {
    Structure,
    Substructure,
}

impl CutMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CutMode::Structure => "structure",
            CutMode::Substructure => "substructure",
        }
    }
}

impl fmt::Display for CutMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CutMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CutMode> {
        match s {
            "structure" => Ok(CutMode::Structure),
            "substructure" => Ok(CutMode::Substructure),
            _ => Err(Error::Range(format!("unknown mode {s:?}"))),
        }
    }
}

/// A star `K_{1,r}`: a centre and `r` of its neighbours, leaves sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeStar {
    pub n: u32,
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl CubeStar {
    pub fn check(&self) -> std::result::Result<(), ShapeDefect> {
        let mut all = vec![self.center];
        all.extend(&self.leaves);
        check_distinct_in_cube(self.n, &all)?;
        match self.leaves.iter().position(|l| !l.is_adjacent(self.center)) {
            Some(index) => Err(ShapeDefect::LeafNotAdjacent { index }),
            None => Ok(()),
        }
    }
}

/// One member of a cut family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Path(CubePath),
    Cycle(CubeCycle),
    Star(CubeStar),
}

impl Element {
    pub fn dim(&self) -> u32 {
        match self {
            Element::Path(p) => p.n,
            Element::Cycle(c) => c.n,
            Element::Star(s) => s.n,
        }
    }

    /// Vertices in element order (star: centre first).
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Element::Path(p) => p.verts.clone(),
            Element::Cycle(c) => c.verts.clone(),
            Element::Star(s) => std::iter::once(s.center).chain(s.leaves.iter().copied()).collect(),
        }
    }

    pub fn check(&self) -> std::result::Result<(), ShapeDefect> {
        match self {
            Element::Path(p) => p.check(),
            Element::Cycle(c) => c.check(),
            Element::Star(s) => s.check(),
        }
    }

    /// Checks that this element is an admissible member of a `mode` cut for
    /// `kind`: a copy of `kind`, or in substructure mode a connected subgraph
    /// of it.
    pub fn fits(&self, kind: StructureKind, mode: CutMode) -> std::result::Result<(), String> {
        self.check().map_err(|d| d.to_string())?;
        let sub = mode == CutMode::Substructure;
        let ok = match (kind, self) {
            (StructureKind::Vertex, Element::Path(p)) => p.len() == 1,
            (StructureKind::Edge, Element::Path(p)) => p.len() == 2 || sub && p.len() == 1,
            (StructureKind::Star(r), Element::Star(s)) => {
                s.leaves.len() == r as usize || sub && s.leaves.len() < r as usize
            }
            (StructureKind::Star(r), Element::Path(p)) => {
                p.len() == r as usize + 1 && r <= 2 || sub && p.len() <= 3.min(r as usize + 1)
            }
            (StructureKind::Path(k), Element::Path(p)) => {
                p.len() == k as usize || sub && p.len() < k as usize
            }
            (StructureKind::Cycle(k), Element::Cycle(c)) => c.len() == k as usize,
            (StructureKind::Cycle(k), Element::Path(p)) => sub && p.len() <= k as usize,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{} is not a {} element for {kind}", describe(self), mode))
        }
    }
}

fn describe(e: &Element) -> String {
    match e {
        Element::Path(p) => format!("path on {} vertices", p.len()),
        Element::Cycle(c) => format!("cycle of length {}", c.len()),
        Element::Star(s) => format!("star with {} leaves", s.leaves.len()),
    }
}

/// A candidate `H`-structure or `H`-substructure cut. Elements may overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutFamily {
    pub n: u32,
    pub kind: StructureKind,
    pub mode: CutMode,
    pub elements: Vec<Element>,
}

impl CutFamily {
    pub fn new(n: u32, kind: StructureKind, mode: CutMode, elements: Vec<Element>) -> Result<CutFamily> {
        Cube::new(n)?;
        Ok(CutFamily { n, kind: kind.validate()?, mode, elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `V(F)`, sorted.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.elements.iter().flat_map(Element::vertices).collect();
        set.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32, v: &[u32]) -> Element {
        Element::Path(CubePath { n, verts: v.iter().map(|&x| Vertex(x)).collect() })
    }

    #[test]
    fn kind_validation() {
        assert!(StructureKind::Cycle(6).validate().is_ok());
        assert!(StructureKind::Cycle(5).validate().is_err());
        assert!(StructureKind::Cycle(2).validate().is_err());
        assert!(StructureKind::Path(0).validate().is_err());
        assert_eq!(StructureKind::Star(3).to_string(), "K_{1,3}");
    }

    #[test]
    fn element_fit_rules() {
        let p3 = path(3, &[0, 1, 3]);
        assert!(p3.fits(StructureKind::Path(3), CutMode::Structure).is_ok());
        assert!(p3.fits(StructureKind::Path(4), CutMode::Structure).is_err());
        assert!(p3.fits(StructureKind::Path(4), CutMode::Substructure).is_ok());
        assert!(p3.fits(StructureKind::Cycle(4), CutMode::Structure).is_err());
        assert!(p3.fits(StructureKind::Cycle(4), CutMode::Substructure).is_ok());
        assert!(p3.fits(StructureKind::Star(2), CutMode::Structure).is_ok());
        let c4 = Element::Cycle(CubeCycle { n: 3, verts: [0, 1, 3, 2].map(Vertex).to_vec() });
        assert!(c4.fits(StructureKind::Cycle(4), CutMode::Structure).is_ok());
        assert!(c4.fits(StructureKind::Cycle(6), CutMode::Substructure).is_err());
        let star = Element::Star(CubeStar { n: 3, center: Vertex(0), leaves: vec![Vertex(1), Vertex(2), Vertex(4)] });
        assert!(star.fits(StructureKind::Star(3), CutMode::Structure).is_ok());
        assert!(star.fits(StructureKind::Star(2), CutMode::Substructure).is_err());
        let broken = path(3, &[0, 1, 2]);
        assert!(broken.fits(StructureKind::Path(3), CutMode::Structure).is_err());
    }

    #[test]
    fn vertex_set_dedups_overlaps() {
        let f = CutFamily::new(
            3,
            StructureKind::Path(3),
            CutMode::Structure,
            vec![path(3, &[1, 3, 2]), path(3, &[2, 6, 4])],
        )
        .unwrap();
        assert_eq!(f.vertex_set(), [1, 2, 3, 4, 6].map(Vertex));
    }
}
