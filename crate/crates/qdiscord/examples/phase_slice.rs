//! Render a coarse phase diagram of one c3 section as ASCII art and count
//! the root-solved boundary polyline points that accompany a slice.

use qdiscord::{slice_scan, PhaseKind};

fn main() -> qdiscord::Result<()> {
    let c3 = 0.34;
    let grid = 41;
    let map = slice_scan(c3, grid, 81)?;

    println!("section c3 = {c3}: rows are c1 (top +), columns s1");
    for row in (0..grid).rev() {
        let mut line = String::new();
        for col in 0..grid {
            // points stored row-major with s1 outer, c1 inner
            let p = &map.points[col * grid + row];
            line.push(match p.label {
                PhaseKind::Q0 => '.',
                PhaseKind::QPi2 => '#',
                PhaseKind::QThetaStarMin => 'm',
                PhaseKind::QThetaStarMax => 'M',
                PhaseKind::Crossing => 'x',
            });
        }
        println!("  {line}");
    }

    let mut counts = std::collections::BTreeMap::new();
    for b in &map.boundaries {
        *counts.entry(format!("{}", b.kind)).or_insert(0usize) += 1;
    }
    println!();
    println!("boundary polyline points (per kind): {counts:?}");
    println!("the theta*-min layer is sub-pixel here; the polylines carry it");
    Ok(())
}
