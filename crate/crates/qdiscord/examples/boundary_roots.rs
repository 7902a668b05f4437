//! Solve the phase boundaries along the line c1 = 0.14 in the c3 = 0.34
//! section: the two branch crossings and the two bifurcation bands around
//! them.

use qdiscord::search::ScanOptions;
use qdiscord::{solve_bifurcation, solve_crossing, BoundaryKind, ScanLine};

fn main() -> qdiscord::Result<()> {
    let line = ScanLine::S1 { c3: 0.34, c1: 0.14 };
    let opts = ScanOptions::default();

    let crossings = solve_crossing(&line, Some((0.0, 0.67)), &opts)?;
    println!("Q0 = Qpi2 crossings along s1:");
    for r in &crossings.roots {
        println!("  s1 = {:.10}   (residual {:.1e})", r.x, r.residual);
    }

    for (kind, label) in [
        (BoundaryKind::D2AtZero, "S''(0) = 0 "),
        (BoundaryKind::D2AtPiHalf, "S''(pi/2)=0"),
    ] {
        let sol = solve_bifurcation(&line, kind, Some((0.0, 0.67)), &opts)?;
        let roots: Vec<String> = sol.roots.iter().map(|r| format!("{:.10}", r.x)).collect();
        println!("{label} roots: {}", roots.join(", "));
    }

    // the first pair brackets an interior-minimum band, the second an
    // interior-maximum band
    let d0 = solve_bifurcation(&line, BoundaryKind::D2AtZero, Some((0.4, 0.5)), &opts)?;
    let dp = solve_bifurcation(&line, BoundaryKind::D2AtPiHalf, Some((0.4, 0.5)), &opts)?;
    println!(
        "minimum band: [{:.10}, {:.10}], width {:.3e}",
        d0.roots[0].x,
        dp.roots[0].x,
        dp.roots[0].x - d0.roots[0].x
    );
    Ok(())
}
