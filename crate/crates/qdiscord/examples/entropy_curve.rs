//! Trace the conditional entropy S_cond(θ) for a state whose profile has a
//! pronounced interior maximum, and print the refined extremum.

use std::f64::consts::FRAC_PI_2;

use qdiscord::optimizer::ExtremumKind;
use qdiscord::{find_interior_extremum, s_cond, XxzState};

fn main() -> qdiscord::Result<()> {
    // crossing state of the c3 = -0.5, s1 = 0.25 section: the bell-shaped
    // profile whose maximum exceeds the endpoints by about 1%
    let state = XxzState::new(0.25, 0.6563909127, -0.5)?;

    println!("theta,s_cond_bit");
    let steps = 25;
    for i in 0..=steps {
        let theta = FRAC_PI_2 * i as f64 / steps as f64;
        println!("{theta:.6},{:.10}", s_cond(theta, &state).bits());
    }

    let report = find_interior_extremum(&state)?;
    assert_eq!(report.kind, ExtremumKind::Maximum);
    let (theta, value) = (report.theta_star.unwrap(), report.value_at_star.unwrap());
    println!();
    println!("interior maximum: S_cond = {:.10} bit at theta = {:.10}", value.bits(), theta);
    println!("endpoint value:   S_cond = {:.10} bit", report.value_at_0.bits());
    println!(
        "relative excess:  {:.4} %",
        (value.bits() - report.value_at_0.bits()) / report.value_at_0.bits() * 100.0
    );
    Ok(())
}
