//! Reproduce the side-state summary over c3 sections (the `table1` CLI
//! command) through library calls: boundary positions, endpoint entropy,
//! maximum excess and fidelity between the boundary states.

use qdiscord::optimizer::ExtremumKind;
use qdiscord::search::ScanOptions;
use qdiscord::{
    fidelity, find_interior_extremum, s_cond, solve_bifurcation, solve_crossing, BoundaryKind,
    ScanLine, XxzState,
};

fn main() -> qdiscord::Result<()> {
    println!("{:>7} {:>13} {:>13} {:>14} {:>9} {:>9}", "c3", "c1_cross", "c1_pi2", "S_end [bit]", "excess%", "fidelity");
    let opts = ScanOptions::default();
    for c3 in [-0.8, -0.5, -0.1, 0.0, 0.1, 1.0 / 3.0, 0.5] {
        let s1 = (1.0 + c3) / 2.0;
        let c_max = (1.0 - c3) / 2.0;
        let line = ScanLine::C1 { c3, s1 };
        let cx = solve_crossing(&line, Some((1e-6, c_max)), &opts)?.roots[0].x;
        let cp = solve_bifurcation(&line, BoundaryKind::D2AtPiHalf, Some((1e-6, c_max)), &opts)?
            .roots[0]
            .x;
        let state = XxzState::new(s1, cx, c3)?;
        let send = s_cond(0.0, &state).bits();
        let report = find_interior_extremum(&state)?;
        assert_eq!(report.kind, ExtremumKind::Maximum);
        let smax = report.value_at_star.unwrap().bits();
        let fid = fidelity(&state, &XxzState::new(s1, cp, c3)?);
        println!(
            "{c3:>7.4} {cx:>13.10} {cp:>13.10} {send:>14.10} {:>9.4} {fid:>9.5}",
            (smax - send) / send * 100.0
        );
    }
    Ok(())
}
