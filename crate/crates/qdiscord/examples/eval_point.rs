//! Evaluate the discord, its branch and the conditional-entropy shape type
//! at single states, including one inside the tiny θ*-band.

use qdiscord::{classify_shape, discord, q0, q_pi2, XxzState};

fn show(s1: f64, c1: f64, c3: f64) -> qdiscord::Result<()> {
    let state = XxzState::new(s1, c1, c3)?;
    let result = discord(&state)?;
    let shape = classify_shape(&state)?;
    println!("state (s1, c1, c3) = ({s1}, {c1}, {c3})");
    println!("  Q        = {:.10} bit  [branch {}]", result.q.bits(), result.branch);
    println!("  theta_opt = {:.10} rad", result.theta_opt);
    println!("  shape     = type {shape}");
    println!("  Q0 = {:.10} bit, Qpi2 = {:.10} bit, crossing = {}",
        q0(&state).bits(), q_pi2(&state).bits(), result.crossing);
    Ok(())
}

fn main() -> qdiscord::Result<()> {
    // maximally mixed: no correlations at all
    show(0.0, 0.0, 0.0)?;
    println!();
    // inside the interior-minimum band of the c3 = 0.34, c1 = 0.14 section:
    // the optimal measurement angle sits strictly between 0 and pi/2
    show(0.473267, 0.14, 0.34)?;
    println!();
    // just below and above the band the branch snaps to an endpoint
    show(0.46, 0.14, 0.34)?;
    println!();
    show(0.49, 0.14, 0.34)?;
    Ok(())
}
