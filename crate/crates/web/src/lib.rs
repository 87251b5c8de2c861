//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain strings and numbers so the same
//! functions can be unit tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use shamrock_core::arith::formula_for;
use shamrock_core::lattice::{region_stats, Family, RegionSpec};
use shamrock_core::oracle::{count_tilings_with, find_one_tiling_with, OracleConfig};
use shamrock_core::svg::render_svg;
use shamrock_core::verify::ratio_convergence;

/// Keeps a single click from freezing the tab.
const BROWSER_MAX_CELLS: usize = 800;

fn parse_spec(family: &str, params: &str) -> Result<RegionSpec, String> {
    let family: Family = family.parse().map_err(|e: shamrock_core::GeometryError| e.to_string())?;
    let params = params
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| format!("{p:?} is not a non-negative integer")))
        .collect::<Result<Vec<_>, _>>()?;
    RegionSpec::new(family, params).map_err(|e| e.to_string())
}

fn config() -> OracleConfig {
    OracleConfig::with_max_cells(BROWSER_MAX_CELLS)
}

/// SVG picture of a region, optionally with one tiling drawn on top.
#[wasm_bindgen]
pub fn render(family: &str, params: &str, with_tiling: bool) -> Result<String, String> {
    let region = parse_spec(family, params)?.build().map_err(|e| e.to_string())?;
    let tiling = if with_tiling {
        find_one_tiling_with(&region, &config()).map_err(|e| e.to_string())?
    } else {
        None
    };
    Ok(render_svg(&region, tiling.as_ref()))
}

#[derive(Serialize)]
struct Comparison {
    cells: usize,
    up: usize,
    down: usize,
    count: Option<String>,
    formula: Option<String>,
    agree: Option<bool>,
    note: Option<String>,
}

/// Counter and closed form side by side, as JSON.
#[wasm_bindgen]
pub fn compare(family: &str, params: &str) -> Result<String, String> {
    let spec = parse_spec(family, params)?;
    let region = spec.build().map_err(|e| e.to_string())?;
    let stats = region_stats(&region);
    let mut notes = Vec::new();
    let count = match count_tilings_with(&region, &config()) {
        Ok(c) => Some(c.to_string()),
        Err(e) => {
            notes.push(e.to_string());
            None
        }
    };
    let formula = match formula_for(&spec) {
        Ok(v) => Some(v.to_string()),
        Err(e) => {
            notes.push(e.to_string());
            None
        }
    };
    let agree = count.as_ref().zip(formula.as_ref()).map(|(c, f)| c == f);
    let out = Comparison {
        cells: stats.cell_count,
        up: stats.up_count,
        down: stats.down_count,
        count,
        formula,
        agree,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    };
    Ok(serde_json::to_string(&out).expect("plain struct"))
}

#[derive(Serialize)]
struct Curve {
    limit: f64,
    points: Vec<(u32, f64)>,
}

/// The finite shamrock ratio for `N = 1..=n_max` and its limit, as JSON.
#[wasm_bindgen]
pub fn convergence(a: u32, b: u32, c: u32, m: u32, n_max: u32) -> String {
    let ns: Vec<u32> = (1..=n_max.clamp(1, 2000)).collect();
    let pts = ratio_convergence(a, b, c, m, &ns);
    let curve = Curve {
        limit: pts.first().map_or(1.0, |p| p.limit),
        points: pts.iter().map(|p| (p.n, p.value)).collect(),
    };
    serde_json::to_string(&curve).expect("plain struct")
}
