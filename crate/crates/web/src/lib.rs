//! Browser bindings for the `neurocode` demo page.
//!
//! Every entry point returns a JSON string. On failure the object has a single
//! `error` field. The plain functions are usable natively; the `wasm_*`
//! wrappers are what the page calls.

use neurocode::{
    betti_default, canonical_form, circle_arc_cover, code_of_cover, code_to_polynomial,
    delta_complex, grid_box_cover, helly_lower_bound, nerve_equals_delta, parse_code,
    pi1_presentation, rf_relations, Code, Codeword, Cover, GridBox, SimplicialComplex,
};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest circle grid the page may request.
pub const MAX_CIRCLE_GRID: u32 = 3600;
/// Largest side of the planar grid.
pub const MAX_PLANE_SIDE: u32 = 64;

#[derive(Debug, Serialize)]
pub struct Topology {
    pub facets: Vec<Vec<usize>>,
    pub f_vector: Vec<usize>,
    pub betti: Vec<usize>,
    pub pi1_generators: usize,
    pub pi1_relations: usize,
    pub helly_lower_bound: usize,
}

#[derive(Debug, Serialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub word: String,
}

#[derive(Debug, Serialize)]
pub struct CircleReport {
    pub code: Vec<String>,
    pub segments: Vec<Segment>,
    pub nerve_equals_delta: bool,
    pub topology: Topology,
}

#[derive(Debug, Serialize)]
pub struct PlaneReport {
    pub width: usize,
    pub height: usize,
    /// Firing pattern of every grid point, row by row.
    pub patterns: Vec<String>,
    pub code: Vec<String>,
    pub nerve_equals_delta: bool,
    pub topology: Topology,
}

#[derive(Debug, Serialize)]
pub struct CodeReport {
    pub length: usize,
    pub code: Vec<String>,
    pub simplicial: bool,
    pub completion: Vec<String>,
    pub polynomial: String,
    pub canonical_form: Vec<String>,
    pub relations: Vec<String>,
    pub topology: Topology,
}

fn to_json<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn words(code: &Code) -> Vec<String> {
    code.words().iter().map(|w| w.to_string()).collect()
}

fn pattern_string(len: usize, mask: u64) -> Result<String, String> {
    Codeword::new(len, mask)
        .map(|w| w.to_string())
        .map_err(|e| e.to_string())
}

fn topology(k: &SimplicialComplex) -> Result<Topology, String> {
    let vertices = k.vertices();
    let (pi1_generators, pi1_relations) = match vertices.first() {
        Some(&v) if neurocode::connected_components(k).len() == 1 => {
            let p = pi1_presentation(k, v).map_err(|e| e.to_string())?;
            (p.generators.len(), p.relations.len())
        }
        _ => (0, 0),
    };
    Ok(Topology {
        facets: k.facet_lists(),
        f_vector: k.f_vector().counts().to_vec(),
        betti: betti_default(k).values().to_vec(),
        pi1_generators,
        pi1_relations,
        helly_lower_bound: helly_lower_bound(k),
    })
}

fn cover_summary(cover: &Cover) -> Result<(Code, bool, Topology), String> {
    let code = code_of_cover(cover).map_err(|e| e.to_string())?;
    let check = nerve_equals_delta(cover).map_err(|e| e.to_string())?;
    let topo = topology(&check.nerve)?;
    Ok((code, check.equal, topo))
}

/// Arcs on the cyclic grid `0..grid`, given as flat `(start, length)` pairs.
pub fn analyze_circle(grid: u32, arcs: &[u32]) -> String {
    to_json(circle_report(grid, arcs))
}

fn circle_report(grid: u32, arcs: &[u32]) -> Result<CircleReport, String> {
    if grid > MAX_CIRCLE_GRID {
        return Err(format!("grid {grid} exceeds {MAX_CIRCLE_GRID}"));
    }
    if !arcs.len().is_multiple_of(2) {
        return Err("arcs must be (start, length) pairs".into());
    }
    let pairs: Vec<(usize, usize)> = arcs
        .chunks(2)
        .map(|c| (c[0] as usize, c[1] as usize))
        .collect();
    let cover = circle_arc_cover(grid as usize, &pairs).map_err(|e| e.to_string())?;
    let (code, equal, topo) = cover_summary(&cover)?;

    let n = cover.set_count();
    let mut segments: Vec<Segment> = Vec::new();
    let mut current: Option<(usize, u64)> = None;
    for k in 0..=grid as usize {
        let pattern = (k < grid as usize).then(|| cover.pattern(k + 1));
        match (current, pattern) {
            (Some((_, m)), Some(p)) if m == p => {}
            (prev, next) => {
                if let Some((start, m)) = prev {
                    segments.push(Segment {
                        start,
                        end: k - 1,
                        word: pattern_string(n, m)?,
                    });
                }
                current = next.map(|p| (k, p));
            }
        }
    }

    Ok(CircleReport {
        code: words(&code),
        segments,
        nerve_equals_delta: equal,
        topology: topo,
    })
}

/// Rectangles on a `width × height` grid, given as flat `(x0, y0, x1, y1)`
/// quadruples with inclusive corners in either order.
pub fn analyze_boxes(width: u32, height: u32, boxes: &[i32]) -> String {
    to_json(plane_report(width, height, boxes))
}

fn plane_report(width: u32, height: u32, boxes: &[i32]) -> Result<PlaneReport, String> {
    if width == 0 || height == 0 || width > MAX_PLANE_SIDE || height > MAX_PLANE_SIDE {
        return Err(format!("grid sides must be between 1 and {MAX_PLANE_SIDE}"));
    }
    if !boxes.len().is_multiple_of(4) {
        return Err("boxes must be (x0, y0, x1, y1) quadruples".into());
    }
    // Rows first so that point numbering runs along x within each row.
    let boxes: Vec<GridBox> = boxes
        .chunks(4)
        .map(|b| {
            let (x0, x1) = (b[0].min(b[2]) as i64, b[0].max(b[2]) as i64);
            let (y0, y1) = (b[1].min(b[3]) as i64, b[1].max(b[3]) as i64);
            GridBox::new(vec![y0, x0], vec![y1, x1])
        })
        .collect();
    let extent = GridBox::new(vec![0, 0], vec![height as i64 - 1, width as i64 - 1]);
    let cover = grid_box_cover(2, &boxes, &extent).map_err(|e| e.to_string())?;
    let (code, equal, topo) = cover_summary(&cover)?;
    let patterns = (1..=cover.ground_size())
        .map(|p| pattern_string(cover.set_count(), cover.pattern(p)))
        .collect::<Result<_, _>>()?;
    Ok(PlaneReport {
        width: width as usize,
        height: height as usize,
        patterns,
        code: words(&code),
        nerve_equals_delta: equal,
        topology: topo,
    })
}

/// A code in the text format, one word per line.
pub fn analyze_code(text: &str) -> String {
    to_json(code_report(text))
}

fn code_report(text: &str) -> Result<CodeReport, String> {
    let code = parse_code(text).map_err(|e| e.to_string())?;
    let completion = code.simplicial_completion().map_err(|e| e.to_string())?;
    let polynomial = code_to_polynomial(&code).map_err(|e| e.to_string())?;
    let cf = canonical_form(&code).map_err(|e| e.to_string())?;
    let relations = rf_relations(&code).map_err(|e| e.to_string())?;
    let k = delta_complex(&code).map_err(|e| e.to_string())?;
    Ok(CodeReport {
        length: code.len(),
        code: words(&code),
        simplicial: code.is_simplicial(),
        completion: words(&completion),
        polynomial: polynomial.to_string(),
        canonical_form: cf.iter().map(|z| z.to_string()).collect(),
        relations: relations.iter().map(|r| r.to_string()).collect(),
        topology: topology(&k)?,
    })
}

#[wasm_bindgen(js_name = analyzeCircle)]
pub fn wasm_analyze_circle(grid: u32, arcs: &[u32]) -> String {
    analyze_circle(grid, arcs)
}

#[wasm_bindgen(js_name = analyzeBoxes)]
pub fn wasm_analyze_boxes(width: u32, height: u32, boxes: &[i32]) -> String {
    analyze_boxes(width, height, boxes)
}

#[wasm_bindgen(js_name = analyzeCode)]
pub fn wasm_analyze_code(text: &str) -> String {
    analyze_code(text)
}
