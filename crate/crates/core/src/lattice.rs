//! Triangular lattice geometry and the region families.
//!
//! Points use oblique integer coordinates `(i, j)` with basis vectors
//! `(1, 0)` and `(1/2, sqrt(3)/2)`. The three families of lattice lines are
//! `j = const` (horizontal), `i = const` (rising at 60 degrees) and
//! `i + j = const` (rising at 120 degrees), so every region built here is an
//! intersection of integer half-planes minus explicitly placed holes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// Orientation of a unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn code(self) -> &'static str {
        match self {
            Orient::Up => "U",
            Orient::Down => "D",
        }
    }
}

/// A unit triangle of the lattice.
///
/// `Up(i, j)` has corners `(i, j)`, `(i+1, j)`, `(i, j+1)`; `Down(i, j)` has
/// corners `(i+1, j)`, `(i, j+1)`, `(i+1, j+1)`. The derived ordering is the
/// lexicographic order on `(i, j, orient)` with `Up < Down`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriRef {
    pub i: i64,
    pub j: i64,
    pub orient: Orient,
}

impl TriRef {
    pub const fn up(i: i64, j: i64) -> Self {
        TriRef { i, j, orient: Orient::Up }
    }

    pub const fn down(i: i64, j: i64) -> Self {
        TriRef { i, j, orient: Orient::Down }
    }

    /// The three triangles sharing a full edge with this one.
    pub fn neighbors(self) -> [TriRef; 3] {
        let TriRef { i, j, orient } = self;
        match orient {
            Orient::Up => [TriRef::down(i, j), TriRef::down(i - 1, j), TriRef::down(i, j - 1)],
            Orient::Down => [TriRef::up(i, j), TriRef::up(i + 1, j), TriRef::up(i, j + 1)],
        }
    }

    pub fn is_adjacent(self, other: TriRef) -> bool {
        self.neighbors().contains(&other)
    }

    /// Corner points in oblique coordinates, counterclockwise.
    pub fn corners(self) -> [(i64, i64); 3] {
        let TriRef { i, j, orient } = self;
        match orient {
            Orient::Up => [(i, j), (i + 1, j), (i, j + 1)],
            Orient::Down => [(i + 1, j), (i + 1, j + 1), (i, j + 1)],
        }
    }

    /// Three times the centroid; exact integer coordinates for half-plane tests.
    fn centroid3(self) -> (i64, i64) {
        let off = match self.orient {
            Orient::Up => 1,
            Orient::Down => 2,
        };
        (3 * self.i + off, 3 * self.j + off)
    }

    fn translate(self, di: i64, dj: i64) -> TriRef {
        TriRef { i: self.i + di, j: self.j + dj, orient: self.orient }
    }
}

impl fmt::Display for TriRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.orient.code(), self.i, self.j)
    }
}

/// The region families that can be built by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hexagon,
    ShamrockHole,
    CoredHexagon,
    SCoredHexagon,
    MagnetBar,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Hexagon,
        Family::ShamrockHole,
        Family::CoredHexagon,
        Family::SCoredHexagon,
        Family::MagnetBar,
    ];

    /// Short name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Family::Hexagon => "hexagon",
            Family::ShamrockHole => "shamrock",
            Family::CoredHexagon => "cored",
            Family::SCoredHexagon => "sc",
            Family::MagnetBar => "magnet",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Hexagon => 6,
            Family::ShamrockHole => 4,
            Family::CoredHexagon => 4,
            Family::SCoredHexagon => 7,
            Family::MagnetBar => 6,
        }
    }

    /// Parameter names in the order they are passed.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Hexagon => &["s1", "s2", "s3", "s4", "s5", "s6"],
            Family::ShamrockHole => &["a", "b", "c", "m"],
            Family::CoredHexagon => &["x", "y", "z", "m"],
            Family::SCoredHexagon => &["x", "y", "z", "a", "b", "c", "m"],
            Family::MagnetBar => &["x", "y", "a", "b", "c", "m"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hexagon" | "hex" => Ok(Family::Hexagon),
            "shamrock" | "shamrock_hole" | "shamrock-hole" => Ok(Family::ShamrockHole),
            "cored" | "cored_hexagon" | "cored-hexagon" => Ok(Family::CoredHexagon),
            "sc" | "s_cored" | "s-cored" | "s_cored_hexagon" | "s-cored-hexagon" => {
                Ok(Family::SCoredHexagon)
            }
            "magnet" | "magnet_bar" | "magnet-bar" => Ok(Family::MagnetBar),
            _ => Err(GeometryError::UnknownFamily(s.to_string())),
        }
    }
}

/// A named family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegionSpec {
    pub family: Family,
    pub params: Vec<u32>,
}

impl RegionSpec {
    pub fn new(family: Family, params: Vec<u32>) -> Result<Self, GeometryError> {
        if params.len() != family.arity() {
            return Err(GeometryError::Arity {
                family: family.name(),
                expected: family.arity(),
                got: params.len(),
            });
        }
        Ok(RegionSpec { family, params })
    }

    /// Builds the region this spec names. Shamrock holes are anchored at the origin.
    pub fn build(&self) -> Result<Region, GeometryError> {
        let p = &self.params;
        match self.family {
            Family::Hexagon => build_hexagon([p[0], p[1], p[2], p[3], p[4], p[5]]),
            Family::ShamrockHole => {
                Ok(build_shamrock_hole(p[0], p[1], p[2], p[3], TriRef::up(0, 0)))
            }
            Family::CoredHexagon => build_cored_hexagon(p[0], p[1], p[2], p[3]),
            Family::SCoredHexagon => build_s_cored_hexagon(p[0], p[1], p[2], p[3], p[4], p[5], p[6]),
            Family::MagnetBar => Ok(build_magnet_bar(p[0], p[1], p[2], p[3], p[4], p[5])),
        }
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        for (k, v) in self.params.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A finite set of unit triangles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<TriRef>,
    spec: Option<RegionSpec>,
}

impl Region {
    pub fn new(cells: impl IntoIterator<Item = TriRef>) -> Self {
        Region { cells: cells.into_iter().collect(), spec: None }
    }

    pub fn empty() -> Self {
        Region::default()
    }

    pub fn with_spec(mut self, spec: RegionSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub fn spec(&self) -> Option<&RegionSpec> {
        self.spec.as_ref()
    }

    pub fn cells(&self) -> &BTreeSet<TriRef> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = TriRef> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, t: TriRef) -> bool {
        self.cells.contains(&t)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|t| t.orient == Orient::Up).count()
    }

    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.up_count() == self.len()
    }

    /// Translates so the lexicographically smallest cell sits at `(0, 0)`.
    pub fn canonical(&self) -> Region {
        let Some(first) = self.cells.first() else {
            return Region { cells: BTreeSet::new(), spec: self.spec.clone() };
        };
        let (di, dj) = (-first.i, -first.j);
        Region {
            cells: self.cells.iter().map(|t| t.translate(di, dj)).collect(),
            spec: self.spec.clone(),
        }
    }

    /// Cell-set equality up to translation.
    pub fn congruent_by_translation(&self, other: &Region) -> bool {
        self.canonical().cells == other.canonical().cells
    }

    pub fn difference(&self, other: &Region) -> Region {
        Region::new(self.cells.difference(&other.cells).copied())
    }

    /// Splits into edge-connected components, ordered by their smallest cell.
    pub fn components(&self) -> Vec<Region> {
        let mut seen: HashSet<TriRef> = HashSet::with_capacity(self.len());
        let mut out = Vec::new();
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                comp.insert(t);
                for n in t.neighbors() {
                    if self.contains(n) && seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            out.push(Region { cells: comp, spec: None });
        }
        out
    }

    /// Half-open ranges of `i` and `j` covered by the cells.
    pub fn bounding_box(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.cells.iter();
        let f = it.next()?;
        let (mut i0, mut i1, mut j0, mut j1) = (f.i, f.i, f.j, f.j);
        for t in it {
            i0 = i0.min(t.i);
            i1 = i1.max(t.i);
            j0 = j0.min(t.j);
            j1 = j1.max(t.j);
        }
        Some(((i0, i1 + 1), (j0, j1 + 1)))
    }
}

impl FromIterator<TriRef> for Region {
    fn from_iter<I: IntoIterator<Item = TriRef>>(iter: I) -> Self {
        Region::new(iter)
    }
}

/// Counts reported by [`region_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionStats {
    pub up_count: usize,
    pub down_count: usize,
    pub cell_count: usize,
    pub components: usize,
}

pub fn region_stats(region: &Region) -> RegionStats {
    let up = region.up_count();
    RegionStats {
        up_count: up,
        down_count: region.len() - up,
        cell_count: region.len(),
        components: region.components().len(),
    }
}

/// A set of lozenges, each an adjacent (up, down) pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tiling {
    pub lozenges: Vec<(TriRef, TriRef)>,
}

impl Tiling {
    /// True when every cell of `region` is covered exactly once by adjacent pairs.
    pub fn is_valid_for(&self, region: &Region) -> bool {
        let mut covered = HashSet::with_capacity(region.len());
        for &(u, d) in &self.lozenges {
            if u.orient != Orient::Up || d.orient != Orient::Down || !u.is_adjacent(d) {
                return false;
            }
            if !region.contains(u) || !region.contains(d) {
                return false;
            }
            if !covered.insert(u) || !covered.insert(d) {
                return false;
            }
        }
        covered.len() == region.len()
    }
}

// ---------------------------------------------------------------------------
// Half-plane construction
// ---------------------------------------------------------------------------

/// Open hexagon `jlo < j < jhi`, `ilo < i < ihi`, `slo < i + j < shi` in
/// point coordinates; a unit triangle is inside iff its centroid is.
#[derive(Debug, Clone, Copy)]
struct HalfPlanes {
    j: (i64, i64),
    i: (i64, i64),
    s: (i64, i64),
}

impl HalfPlanes {
    fn contains(&self, t: TriRef) -> bool {
        let (u, v) = t.centroid3();
        3 * self.j.0 < v
            && v < 3 * self.j.1
            && 3 * self.i.0 < u
            && u < 3 * self.i.1
            && 3 * self.s.0 < u + v
            && u + v < 3 * self.s.1
    }

    fn cells(&self) -> BTreeSet<TriRef> {
        let mut out = BTreeSet::new();
        for i in self.i.0 - 1..=self.i.1 {
            for j in self.j.0 - 1..=self.j.1 {
                for t in [TriRef::up(i, j), TriRef::down(i, j)] {
                    if self.contains(t) {
                        out.insert(t);
                    }
                }
            }
        }
        out
    }
}

/// Up-pointing triangle of side `m` with lower-left corner `(p, q)`.
fn up_triangle(p: i64, q: i64, m: u32) -> BTreeSet<TriRef> {
    let m = m as i64;
    let mut out = BTreeSet::new();
    for j in q..q + m {
        let row = q + m - j;
        for i in p..p + row {
            out.insert(TriRef::up(i, j));
            if i + 1 < p + row {
                out.insert(TriRef::down(i, j));
            }
        }
    }
    out
}

/// Down-pointing triangle of side `n` with upper-left corner `(p, q)`.
fn down_triangle(p: i64, q: i64, n: u32) -> BTreeSet<TriRef> {
    let n = n as i64;
    let mut out = BTreeSet::new();
    // Row j spans q - n <= j < q; width grows toward the top edge.
    for j in q - n..q {
        let width = n - (q - 1 - j);
        let start = p + (q - 1 - j);
        for i in start..start + width {
            out.insert(TriRef::down(i, j));
            if i > start {
                out.insert(TriRef::up(i, j));
            }
        }
    }
    out
}

/// Core triangle with lobes, lower-left core corner at `(p, q)`.
fn shamrock_cells(p: i64, q: i64, a: u32, b: u32, c: u32, m: u32) -> BTreeSet<TriRef> {
    let (ai, bi, mi) = (a as i64, b as i64, m as i64);
    let mut cells = up_triangle(p, q, m);
    // top lobe hangs from the apex (p, q + m)
    cells.extend(down_triangle(p - ai, q + mi + ai, a));
    // lower-left lobe meets the core at (p, q)
    cells.extend(down_triangle(p - bi, q, b));
    // lower-right lobe meets the core at (p + m, q)
    cells.extend(down_triangle(p + mi, q, c));
    cells
}

fn hexagon_planes(s: [u32; 6]) -> HalfPlanes {
    let [s1, s2, s3, _s4, s5, _s6] = s.map(i64::from);
    let h = s2 + s3;
    HalfPlanes { j: (0, h), i: (0, s1 + s2), s: (s5, s1 + h) }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Opposite sides of a lattice hexagon differ by the same amount in all three
/// directions; anything else does not close up.
pub fn check_hexagon_sides(sides: [u32; 6]) -> Result<(), GeometryError> {
    let [s1, s2, s3, s4, s5, s6] = sides.map(u64::from);
    if s1 + s2 != s4 + s5 || s2 + s3 != s5 + s6 || s3 + s4 != s6 + s1 {
        return Err(GeometryError::HexagonNotClosed(sides));
    }
    Ok(())
}

/// Lattice hexagon with sides `s1..s6` clockwise from the top side.
pub fn build_hexagon(sides: [u32; 6]) -> Result<Region, GeometryError> {
    check_hexagon_sides(sides)?;
    let spec = RegionSpec { family: Family::Hexagon, params: sides.to_vec() };
    Ok(Region { cells: hexagon_planes(sides).cells(), spec: Some(spec) }.canonical())
}

/// The shamrock itself: an up-pointing core of side `m` whose lower-left
/// corner is the lower-left corner `(anchor.i, anchor.j)` of the anchor cell,
/// with down-pointing lobes of sides `a`, `b`, `c` on its top, left and right
/// corners. The result is not re-anchored.
pub fn build_shamrock_hole(a: u32, b: u32, c: u32, m: u32, anchor: TriRef) -> Region {
    Region {
        cells: shamrock_cells(anchor.i, anchor.j, a, b, c, m),
        spec: Some(RegionSpec { family: Family::ShamrockHole, params: vec![a, b, c, m] }),
    }
}

/// Lower-left corner of the core of `C_{x,y,z}(m)` in the frame where the
/// cored hexagon's NW side lies on `i = 0` and its bottom side on `j = 0`.
///
/// With equal parities the core is exactly central. When `x` is the odd one
/// out it sits half a unit toward the `y` side along the top side's
/// direction; the `y`- and `z`-odd cases are the 120 degree rotations of that
/// rule.
fn core_anchor(x: u32, y: u32, z: u32) -> (i64, i64) {
    let (x, y, z) = (x as i64, y as i64, z as i64);
    let (px, py, pz) = (x & 1, y & 1, z & 1);
    if px == py && py == pz {
        ((x + y) / 2, (y + z) / 2)
    } else if py == pz {
        ((x + y - 1) / 2, (y + z) / 2)
    } else if px == pz {
        ((x + y + 1) / 2, (y + z - 1) / 2)
    } else {
        ((x + y) / 2, (y + z + 1) / 2)
    }
}

/// `C_{x,y,z}(m)`: hexagon `x, y+m, z, x+m, y, z+m` minus a central core of side `m`.
pub fn build_cored_hexagon(x: u32, y: u32, z: u32, m: u32) -> Result<Region, GeometryError> {
    let mut r = s_cored_cells(x, y, z, 0, 0, 0, m)?;
    r.spec = Some(RegionSpec { family: Family::CoredHexagon, params: vec![x, y, z, m] });
    Ok(r.canonical())
}

/// `SC_{x,y,z}(a,b,c,m)`.
pub fn build_s_cored_hexagon(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    m: u32,
) -> Result<Region, GeometryError> {
    let mut r = s_cored_cells(x, y, z, a, b, c, m)?;
    r.spec = Some(RegionSpec {
        family: Family::SCoredHexagon,
        params: vec![x, y, z, a, b, c, m],
    });
    Ok(r.canonical())
}

fn s_cored_cells(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    m: u32,
) -> Result<Region, GeometryError> {
    let base = hexagon_planes([x, y + m, z, x + m, y, z + m]);
    let (a6, b6, c6) = (a as i64, b as i64, c as i64);
    // Push the six sides out: top a, SW b, SE c, bottom b+c, NE a+c, NW a+b.
    let outer = HalfPlanes {
        j: (base.j.0 - (b6 + c6), base.j.1 + a6),
        i: (base.i.0 - (a6 + b6), base.i.1 + c6),
        s: (base.s.0 - b6, base.s.1 + a6 + c6),
    };
    let (p, q) = core_anchor(x, y, z);
    let hole = shamrock_cells(p, q, a, b, c, m);
    if let Some(bad) = hole.iter().find(|t| !outer.contains(**t)) {
        return Err(GeometryError::HoleOutside(bad.to_string()));
    }
    let cells = outer.cells().difference(&hole).copied().collect();
    Ok(Region { cells, spec: None })
}

/// `B_{x,y}(a,b,c,m)`: hexagon `x+c, y+m, a+b+c, x+m, y+c, a+b+m` minus an
/// up-pointing `m`-triangle resting on the NW side (with `a` of that side
/// above it and `b` below) and a down-pointing `c`-triangle hanging from the
/// `m`-triangle's lower-right corner.
pub fn build_magnet_bar(x: u32, y: u32, a: u32, b: u32, c: u32, m: u32) -> Region {
    let planes = hexagon_planes([x + c, y + m, a + b + c, x + m, y + c, a + b + m]);
    let q = (y + c + b) as i64;
    let mut hole = up_triangle(0, q, m);
    hole.extend(down_triangle(m as i64, q, c));
    debug_assert!(hole.iter().all(|t| planes.contains(*t)));
    let cells = planes.cells().difference(&hole).copied().collect();
    Region {
        cells,
        spec: Some(RegionSpec { family: Family::MagnetBar, params: vec![x, y, a, b, c, m] }),
    }
    .canonical()
}

// ---------------------------------------------------------------------------
// Isometries
// ---------------------------------------------------------------------------

/// Mirror image across a vertical line, re-anchored.
pub fn reflect_vertical(region: &Region) -> Region {
    // (u, v) -> (-u - v, v) on points.
    region
        .iter()
        .map(|t| match t.orient {
            Orient::Up => TriRef::up(-t.i - t.j - 1, t.j),
            Orient::Down => TriRef::down(-t.i - t.j - 2, t.j),
        })
        .collect::<Region>()
        .canonical()
}

/// Counterclockwise rotation by 120 degrees, re-anchored.
pub fn rotate_120(region: &Region) -> Region {
    // (u, v) -> (-u - v, u) on points.
    region
        .iter()
        .map(|t| match t.orient {
            Orient::Up => TriRef::up(-t.i - t.j - 1, t.i),
            Orient::Down => TriRef::down(-t.i - t.j - 2, t.i),
        })
        .collect::<Region>()
        .canonical()
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RegionJson {
    family: String,
    params: Vec<u32>,
    cells: Vec<(i64, i64, String)>,
}

impl Serialize for Region {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (family, params) = match &self.spec {
            Some(s) => (s.family.name().to_string(), s.params.clone()),
            None => ("custom".to_string(), Vec::new()),
        };
        RegionJson {
            family,
            params,
            cells: self.iter().map(|t| (t.i, t.j, t.orient.code().to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RegionJson::deserialize(deserializer)?;
        let mut cells = BTreeSet::new();
        for (i, j, o) in raw.cells {
            let orient = match o.as_str() {
                "U" => Orient::Up,
                "D" => Orient::Down,
                other => return Err(D::Error::custom(format!("bad orientation {other:?}"))),
            };
            if !cells.insert(TriRef { i, j, orient }) {
                return Err(D::Error::custom(format!("duplicate cell ({i},{j},{o})")));
            }
        }
        let spec = if raw.family == "custom" {
            None
        } else {
            let family: Family = raw.family.parse().map_err(D::Error::custom)?;
            Some(RegionSpec::new(family, raw.params).map_err(D::Error::custom)?)
        };
        Ok(Region { cells, spec })
    }
}
