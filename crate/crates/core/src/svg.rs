//! SVG pictures of regions and tilings.
//!
//! Lattice point `(u, v)` sits at `UNIT * (u + v/2, v * sqrt(3)/2)` with the
//! y axis flipped so that rows grow upward. Output depends only on the
//! input, so rendering the same region twice gives identical bytes.

use std::fmt::Write;

use crate::lattice::{Orient, Region, Tiling, TriRef};

/// Side length of a unit triangle in SVG units.
pub const UNIT: f64 = 40.0;
const MARGIN: f64 = 10.0;

/// Fill colours for the three lozenge orientations.
const LOZENGE_FILLS: [&str; 3] = ["#e8b04a", "#4a8ee8", "#9bd16b"];

struct Frame {
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn map(&self, (u, v): (i64, i64)) -> (f64, f64) {
        let x = UNIT * (u as f64 + v as f64 / 2.0);
        let y = UNIT * v as f64 * 3f64.sqrt() / 2.0;
        (x - self.min_x + MARGIN, self.max_y - y + MARGIN)
    }
}

fn raw(u: i64, v: i64) -> (f64, f64) {
    (UNIT * (u as f64 + v as f64 / 2.0), UNIT * v as f64 * 3f64.sqrt() / 2.0)
}

fn path(frame: &Frame, pts: &[(i64, i64)]) -> String {
    let mut d = String::new();
    for (k, &p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = write!(d, "{}{x:.2} {y:.2} ", if k == 0 { "M" } else { "L" });
    }
    d.push('Z');
    d
}

/// Which of the three lozenge shapes an adjacent (up, down) pair forms.
pub fn lozenge_kind(up: TriRef, down: TriRef) -> usize {
    let (u, d) = if up.orient == Orient::Up { (up, down) } else { (down, up) };
    if d.i == u.i && d.j == u.j {
        0
    } else if d.i == u.i - 1 {
        1
    } else {
        2
    }
}

/// Outline of a lozenge: the two unshared corners with the shared edge
/// between them.
fn lozenge_corners(a: TriRef, b: TriRef) -> [(i64, i64); 4] {
    let ca = a.corners();
    let cb = b.corners();
    let shared: Vec<(i64, i64)> = ca.iter().copied().filter(|p| cb.contains(p)).collect();
    let only_a = *ca.iter().find(|p| !cb.contains(p)).expect("adjacent triangles");
    let only_b = *cb.iter().find(|p| !ca.contains(p)).expect("adjacent triangles");
    [only_a, shared[0], only_b, shared[1]]
}

/// Renders the region's triangles, and the tiling's lozenges on top when given.
pub fn render_svg(region: &Region, tiling: Option<&Tiling>) -> String {
    let points: Vec<(f64, f64)> = region.iter().flat_map(|t| t.corners()).map(|(u, v)| raw(u, v)).collect();
    if points.is_empty() {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"></svg>\n"
            .to_string();
    }
    let min_x = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let frame = Frame { min_x, max_y };
    let width = max_x - min_x + 2.0 * MARGIN;
    let height = max_y - min_y + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(out, "<g class=\"cells\" stroke=\"#555\" stroke-width=\"1\">");
    for t in region.iter() {
        let fill = if t.orient == Orient::Up { "#f4f4f4" } else { "#dcdcdc" };
        let _ = writeln!(out, "<path class=\"{}\" fill=\"{fill}\" d=\"{}\"/>", t.orient.code(), path(&frame, &t.corners()));
    }
    out.push_str("</g>\n");
    if let Some(tiling) = tiling {
        let _ = writeln!(out, "<g class=\"lozenges\" stroke=\"#222\" stroke-width=\"1.5\">");
        let mut lozenges = tiling.lozenges.clone();
        lozenges.sort_unstable();
        for (a, b) in lozenges {
            let fill = LOZENGE_FILLS[lozenge_kind(a, b)];
            let _ = writeln!(out, "<path fill=\"{fill}\" d=\"{}\"/>", path(&frame, &lozenge_corners(a, b)));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_hexagon;
    use crate::oracle::find_one_tiling;

    #[test]
    fn empty_region_is_valid_svg() {
        let s = render_svg(&Region::empty(), None);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn one_path_per_cell() {
        let r = build_hexagon([2, 1, 3, 2, 1, 3]).unwrap();
        let s = render_svg(&r, None);
        assert_eq!(s.matches("<path").count(), r.len());
    }

    #[test]
    fn lozenge_overlay_uses_all_three_kinds() {
        let r = build_hexagon([2, 2, 2, 2, 2, 2]).unwrap();
        let t = find_one_tiling(&r).unwrap().unwrap();
        let s = render_svg(&r, Some(&t));
        assert_eq!(s.matches("<path").count(), r.len() + r.len() / 2);
        for fill in LOZENGE_FILLS {
            assert!(s.contains(fill));
        }
    }

    #[test]
    fn lozenge_kinds() {
        let u = TriRef::up(3, 4);
        let kinds: Vec<usize> = u.neighbors().iter().map(|&d| lozenge_kind(u, d)).collect();
        let mut sorted = kinds.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2]);
        assert_eq!(lozenge_kind(TriRef::down(3, 4), u), 0);
    }
}
