//! Bell-diagonal states: the closed-form discord, its nesting into the
//! endpoint branches at s1 = 0, and the region-volume split.

use qdiscord::phase::bell_region_ratio;
use qdiscord::{luo_discord, pseudo_discord, q0, q_pi2, BellDiagonalState, XxzState};

fn main() -> qdiscord::Result<()> {
    let bell = BellDiagonalState::new(0.3, 0.2, 0.1)?;
    let (q, branch) = luo_discord(&bell)?;
    println!("closed-form discord of (0.3, 0.2, 0.1): {:.10} bit, branch {branch}", q.bits());

    // with c2 = c1 the formula collapses onto min{Q0, Qpi2} at s1 = 0
    for (c1, c3) in [(0.3, 0.1), (0.2, -0.5), (0.05, 0.6)] {
        let (luo, _) = luo_discord(&BellDiagonalState::new(c1, c1, c3)?)?;
        let x = XxzState::new(0.0, c1, c3)?;
        let pq = pseudo_discord(&x);
        println!(
            "(c1, c3) = ({c1}, {c3}): luo {:.12}, min(Q0, Qpi2) {:.12}, Q0 {:.10}, Qpi2 {:.10}",
            luo.bits(),
            pq.q.bits(),
            q0(&x).bits(),
            q_pi2(&x).bits()
        );
    }

    let ratio = bell_region_ratio(400_000, 3)?;
    println!();
    println!("Q_pi/2 : Q_0 volume ratio of the Bell tetrahedron = {ratio:.3} (exact value 2)");
    Ok(())
}
