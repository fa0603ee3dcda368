//! Text and SVG renderers for lattice regions. The SVG output is
//! deterministic byte for byte for fixed inputs: fixed-precision coordinates
//! and no timestamps.

use fernhex::{Orient, TriRegion};

/// Character art: each unit triangle is two characters, `/\` for up cells
/// and `\/` for down cells, sharing columns with its horizontal neighbors so
/// a full row reads `/\\//\`. Rows run from the top of the region down.
pub fn ascii(region: &TriRegion) -> String {
    if region.is_empty() {
        return String::from("(empty region)\n");
    }
    // Column slot of a cell in its row: up cells at 2u+v, down at 2u+v+1.
    let slot = |u: i64, v: i64, orient: Orient| match orient {
        Orient::Up => 2 * u + v,
        Orient::Down => 2 * u + v + 1,
    };
    let mut v_min = i64::MAX;
    let mut v_max = i64::MIN;
    let mut s_min = i64::MAX;
    let mut s_max = i64::MIN;
    for c in region.iter() {
        let s = slot(c.u, c.v, c.orient);
        v_min = v_min.min(c.v);
        v_max = v_max.max(c.v);
        s_min = s_min.min(s);
        s_max = s_max.max(s);
    }
    let width = ((s_max - s_min + 1) * 2) as usize;
    let mut lines = vec![vec![b' '; width]; (v_max - v_min + 1) as usize];
    for c in region.iter() {
        let row = (v_max - c.v) as usize;
        let col = ((slot(c.u, c.v, c.orient) - s_min) * 2) as usize;
        let glyph: &[u8; 2] = match c.orient {
            Orient::Up => b"/\\",
            Orient::Down => b"\\/",
        };
        lines[row][col] = glyph[0];
        lines[row][col + 1] = glyph[1];
    }
    let mut out = String::new();
    for line in lines {
        let text = String::from_utf8(line).expect("ascii");
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

const SCALE: f64 = 40.0;

fn corner_points(cell: &fernhex::UnitTriangle) -> String {
    let mut pts = Vec::new();
    for corner in cell.corners() {
        let (x, y) = corner.to_cartesian();
        // Flip y so the lattice's "up" is up on screen.
        pts.push(format!("{:.3},{:.3}", x * SCALE, -y * SCALE));
    }
    pts.join(" ")
}

/// SVG drawing of the region; `hole` cells (the removed fern, when known)
/// are drawn hatched behind it.
pub fn svg(region: &TriRegion, hole: Option<&TriRegion>) -> String {
    let mut min_x = f64::MAX;
    let mut min_y = f64::MAX;
    let mut max_x = f64::MIN;
    let mut max_y = f64::MIN;
    let mut track = |r: &TriRegion| {
        for c in r.iter() {
            for corner in c.corners() {
                let (x, y) = corner.to_cartesian();
                min_x = min_x.min(x * SCALE);
                max_x = max_x.max(x * SCALE);
                min_y = min_y.min(-y * SCALE);
                max_y = max_y.max(-y * SCALE);
            }
        }
    };
    track(region);
    if let Some(h) = hole {
        track(h);
    }
    if region.is_empty() && hole.is_none_or(|h| h.is_empty()) {
        (min_x, min_y, max_x, max_y) = (0.0, 0.0, 1.0, 1.0);
    }
    let pad = 4.0;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">\n",
        min_x - pad,
        min_y - pad,
        max_x - min_x + 2.0 * pad,
        max_y - min_y + 2.0 * pad
    ));
    if let Some(h) = hole {
        for cell in h.iter() {
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"#f3c6c6\" stroke=\"#a05252\" stroke-width=\"0.8\"/>\n",
                corner_points(cell)
            ));
        }
    }
    for cell in region.iter() {
        let fill = match cell.orient {
            Orient::Up => "#cfe2f3",
            Orient::Down => "#9fc5e8",
        };
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"{}\" stroke=\"#2b5d8a\" stroke-width=\"0.8\"/>\n",
            corner_points(cell),
            fill
        ));
    }
    out.push_str("</svg>\n");
    out
}
