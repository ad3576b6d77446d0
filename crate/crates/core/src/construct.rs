//! Explicit `P_k`- and `C_k`-structure cuts of `Q_n`.
//!
//! Every family isolates `v = 0…0`: the union of its elements contains all of
//! `N(v)` and avoids `v`. The neighbours `(v)^j = e_j` are strung together
//! through the intermediates `((v)^j)^{j+1} = e_j + e_{j+1}`.

use crate::cube::Vertex;
use crate::embed::{hamiltonian_through_edge, odd_path_between_adjacent, CubeCycle, CubePath, Subcube};
use crate::error::{Error, Result};
use crate::family::{CutFamily, CutMode, Element, StructureKind};

fn e(i: u32) -> Vertex {
    Vertex::unit(i)
}

fn e2(i: u32, j: u32) -> Vertex {
    Vertex(1 << i | 1 << j)
}

/// `(v)^lo, ((v)^lo)^{lo+1}, (v)^{lo+1}, …, (v)^hi`: `2(hi-lo)+1` vertices.
fn zigzag(lo: u32, hi: u32) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(2 * (hi - lo) as usize + 1);
    for j in lo..hi {
        out.push(e(j));
        out.push(e2(j, j + 1));
    }
    out.push(e(hi));
    out
}

/// Start coordinates of the windows of `width` consecutive neighbours that
/// cover `0..n`; the last window is shifted back to end at `n - 1`.
fn windows(n: u32, width: u32) -> Vec<u32> {
    let count = n.div_ceil(width);
    (0..count)
        .map(|i| if i + 1 == count { n - width } else { i * width })
        .collect()
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// The single long path: the full zigzag through every neighbour of `v`,
/// continued along a Hamiltonian cycle of `Q_n^1` (the half with `x^{n-1}=1`).
fn long_path(n: u32, k: u32) -> Result<CubePath> {
    let mut verts = zigzag(0, n - 1);
    let extra = (k - (2 * n - 1)) as usize;
    if extra > 0 {
        // Q_n^1 is the (n-1)-cube on coordinates 0..n-2, lifted by x^{n-1} = 1
        let half = Subcube::new(n, &[(n - 1, true)])?;
        let inner = hamiltonian_through_edge(n - 1, (e(n - 2), Vertex::ZERO))?;
        let mut ring: Vec<Vertex> = inner.verts.iter().map(|&w| half.lift(w)).collect();
        let end = e(n - 1);
        let before_end = e2(n - 2, n - 1);
        let at = ring.iter().position(|&w| w == end).expect("cycle is Hamiltonian");
        ring.rotate_left(at);
        // walk away from ((v)^{n-2})^{n-1}
        if ring[1] == before_end {
            ring[1..].reverse();
        }
        debug_assert_eq!(ring[ring.len() - 1], before_end);
        verts.extend(ring[1..=extra].iter().copied());
    }
    CubePath::new(n, verts)
}

/// The `P_k`-structure cut of `Q_n` isolating `0…0`.
///
/// Has `⌈2n/(k+1)⌉` elements for odd `k` and `⌈2n/k⌉` for even `k`.
pub fn build_path_cut(n: u32, k: u32) -> Result<CutFamily> {
    if n < 3 {
        return Err(Error::Range(format!("path cuts need n >= 3, got n = {n}")));
    }
    if n > 24 {
        return Err(Error::Range(format!("path cuts support n <= 24, got n = {n}")));
    }
    if k < 3 || u64::from(k) > 1u64 << (n - 1) {
        return Err(Error::Range(format!(
            "path cuts need 3 <= k <= 2^(n-1) = {}, got k = {k}",
            1u64 << (n - 1)
        )));
    }
    let paths: Vec<CubePath> = if (k % 2 == 1 && k >= 2 * n - 1) || (k % 2 == 0 && k >= 2 * n) {
        vec![long_path(n, k)?]
    } else if k % 2 == 1 {
        let width = k.div_ceil(2);
        windows(n, width)
            .into_iter()
            .map(|lo| CubePath::new(n, zigzag(lo, lo + width - 1)))
            .collect::<Result<_>>()?
    } else {
        let width = k / 2;
        windows(n, width)
            .into_iter()
            .map(|lo| {
                let hi = lo + width - 1;
                let mut verts = zigzag(lo, hi);
                // trailing intermediate; the window ending at n-1 wraps to ((v)^{n-1})^0
                verts.push(e2(hi, (hi + 1) % n));
                CubePath::new(n, verts)
            })
            .collect::<Result<_>>()?
    };
    let expect = if k % 2 == 1 {
        ceil_div(2 * u64::from(n), u64::from(k) + 1)
    } else {
        ceil_div(2 * u64::from(n), u64::from(k))
    };
    debug_assert_eq!(paths.len() as u64, expect);
    CutFamily::new(
        n,
        StructureKind::Path(k),
        CutMode::Structure,
        paths.into_iter().map(Element::Path).collect(),
    )
}

/// The `C_k`-structure cut of `Q_n` isolating `0…0`, for `n >= 5` and even
/// `6 <= k <= 2^{n-2}`. Has `⌈2n/k⌉` elements.
pub fn build_cycle_cut(n: u32, k: u32) -> Result<CutFamily> {
    if n < 5 {
        return Err(Error::Range(format!("cycle cuts need n >= 5, got n = {n}")));
    }
    if n > 24 {
        return Err(Error::Range(format!("cycle cuts support n <= 24, got n = {n}")));
    }
    if k % 2 == 1 || k < 6 || u64::from(k) > 1u64 << (n - 2) {
        return Err(Error::Range(format!(
            "cycle cuts need even 6 <= k <= 2^(n-2) = {}, got k = {k}",
            1u64 << (n - 2)
        )));
    }
    let half = k / 2;
    let cycles: Vec<CubeCycle> = if half <= n {
        windows(n, half)
            .into_iter()
            .map(|lo| {
                let hi = lo + half - 1;
                let mut verts = zigzag(lo, hi);
                verts.push(e2(hi, lo));
                CubeCycle::new(n, verts)
            })
            .collect::<Result<_>>()?
    } else {
        // zigzag from (u)^0 to (u)^{n-1}, then an odd path back to ((u)^0)^{n-1}
        // inside the subcube x^{n-2} = 0, x^{n-1} = 1
        let mut verts = zigzag(0, n - 1);
        let sub = Subcube::new(n, &[(n - 2, false), (n - 1, true)])?;
        let q = (k - (2 * n - 1)) as usize;
        // in inner coordinates (u)^{n-1} is 0 and ((u)^0)^{n-1} is e_0
        let inner = odd_path_between_adjacent(n - 2, Vertex::ZERO, e(0), q)?;
        let lifted = sub.lift_path(&inner)?;
        verts.extend(lifted.verts[1..].iter().copied());
        vec![CubeCycle::new(n, verts)?]
    };
    debug_assert_eq!(cycles.len() as u64, ceil_div(2 * u64::from(n), u64::from(k)));
    CutFamily::new(
        n,
        StructureKind::Cycle(k),
        CutMode::Structure,
        cycles.into_iter().map(Element::Cycle).collect(),
    )
}

/// The vertex every constructed family cuts off.
pub fn canonical_isolating_vertex(_family: &CutFamily) -> Vertex {
    Vertex::ZERO
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Cube;

    fn render(f: &CutFamily) -> Vec<Vec<String>> {
        f.elements
            .iter()
            .map(|el| el.vertices().iter().map(|v| v.render(f.n)).collect())
            .collect()
    }

    #[test]
    fn path_cut_n5_k3() {
        let f = build_path_cut(5, 3).unwrap();
        assert_eq!(
            render(&f),
            vec![
                vec!["10000", "11000", "01000"],
                vec!["00100", "00110", "00010"],
                vec!["00010", "00011", "00001"],
            ]
        );
    }

    #[test]
    fn path_cut_n4_k7_is_one_path() {
        let f = build_path_cut(4, 7).unwrap();
        assert_eq!(f.len(), 1);
        let got = &render(&f)[0];
        assert_eq!(got, &["1000", "1100", "0100", "0110", "0010", "0011", "0001"]);
    }

    #[test]
    fn path_cut_n3_k4_wraps() {
        let f = build_path_cut(3, 4).unwrap();
        assert_eq!(
            render(&f),
            vec![vec!["100", "110", "010", "011"], vec!["010", "011", "001", "101"]]
        );
    }

    #[test]
    fn long_path_extends_along_upper_half() {
        let n = 5;
        let f = build_path_cut(n, 16).unwrap();
        let Element::Path(p) = &f.elements[0] else { panic!() };
        assert_eq!(p.len(), 16);
        for v in &p.verts[(2 * n - 1) as usize..] {
            assert!(v.bit(n - 1));
        }
        p.check().unwrap();
    }

    #[test]
    fn path_cut_range_errors() {
        assert!(build_path_cut(2, 2).is_err());
        assert!(build_path_cut(3, 2).is_err());
        assert!(build_path_cut(3, 5).is_err());
        assert!(build_path_cut(4, 8).is_ok());
    }

    #[test]
    fn cycle_cut_n6_k6() {
        let f = build_cycle_cut(6, 6).unwrap();
        assert_eq!(
            render(&f),
            vec![
                vec!["100000", "110000", "010000", "011000", "001000", "101000"],
                vec!["000100", "000110", "000010", "000011", "000001", "000101"],
            ]
        );
    }

    #[test]
    fn cycle_cut_n5_k6_shifts_last_window() {
        let f = build_cycle_cut(5, 6).unwrap();
        assert_eq!(
            render(&f),
            vec![
                vec!["10000", "11000", "01000", "01100", "00100", "10100"],
                vec!["00100", "00110", "00010", "00011", "00001", "00101"],
            ]
        );
    }

    #[test]
    fn cycle_cut_n6_k16_uses_subcube_path() {
        let n = 6;
        let f = build_cycle_cut(n, 16).unwrap();
        assert_eq!(f.len(), 1);
        let Element::Cycle(c) = &f.elements[0] else { panic!() };
        assert_eq!(c.len(), 16);
        c.check().unwrap();
        // interior of the odd path: after (u)^{n-1}, before ((u)^0)^{n-1}
        for v in &c.verts[(2 * n - 1) as usize..] {
            assert!(v.render(n).ends_with("01"));
        }
        assert_eq!(c.verts[15], Vertex(1 | 1 << 5));
    }

    #[test]
    fn cycle_cut_range_errors() {
        assert!(build_cycle_cut(4, 6).unwrap_err().to_string().contains("n >= 5"));
        assert!(build_cycle_cut(5, 4).is_err());
        assert!(build_cycle_cut(5, 10).is_err());
        assert!(build_cycle_cut(5, 7).is_err());
    }

    #[test]
    fn isolating_vertex_neighbourhood_covered() {
        for n in 3..=9 {
            let cube = Cube::new(n).unwrap();
            for k in 3..=(1u32 << (n - 1)).min(64) {
                let f = build_path_cut(n, k).unwrap();
                let v = canonical_isolating_vertex(&f);
                let set = f.vertex_set();
                assert!(!set.contains(&v));
                assert!(cube.neighbors(v).all(|w| set.contains(&w)), "n={n} k={k}");
            }
        }
    }
}
