//! Measure how far the two bifurcation boundaries deviate from the branch
//! crossing across a section: the corridor that hosts the interior-minimum
//! phase.

use qdiscord::deviation_curve;

fn main() -> qdiscord::Result<()> {
    let c3 = 0.34;
    let samples: Vec<f64> = (0..=24).map(|i| 0.12 + (0.58 - 0.12) * i as f64 / 24.0).collect();
    let curve = deviation_curve(c3, &samples)?;

    println!("s1,c1_cross,delta_0,delta_pi2");
    for s in &curve {
        match (s.crossing, s.delta_0(), s.delta_pi2()) {
            (Some(cx), Some(d0), Some(dp)) => {
                println!("{:.4},{:.10},{:+.10},{:+.10}", s.s1, cx, d0, dp);
            }
            _ => println!("{:.4},absent,,", s.s1),
        }
    }

    let widest = curve
        .iter()
        .filter_map(|s| Some((s.s1, s.delta_pi2()? - s.delta_0()?)))
        .max_by(|a, b| a.1.total_cmp(&b.1));
    if let Some((s1, w)) = widest {
        println!();
        println!("widest corridor near s1 = {s1:.4}: {w:.3e} in the c1 direction");
    }
    Ok(())
}
