//! Stress-test the unimodality of the one-variable entropy functions f1
//! (conditional entropy) and f2 (entropy after measurement) over random
//! valid X states — and evaluate the known f2 counterexample.

use qdiscord::unimodal::ExtremumDirection;
use qdiscord::{conjecture_trial, count_interior_extrema, AppendixFn, AppendixParams};

fn main() -> qdiscord::Result<()> {
    for which in [AppendixFn::F1, AppendixFn::F2] {
        let report = conjecture_trial(20_000, 7, which, 201)?;
        println!(
            "{which}: {} samples, {} verified violations, max interior extrema seen = {}",
            report.samples,
            report.violations.len(),
            report.max_count_seen
        );
        for v in &report.violations {
            println!(
                "  violation at p = ({:.12}, {:.12}, {:.12}, {:.12}, {:.12}) with {} extrema",
                v.params.p1, v.params.p2, v.params.p3, v.params.p4, v.params.p5, v.count
            );
        }
    }

    // f1 has never produced a verified violation; f2 does admit them.
    // This tuple is a valid X state whose f2 profile dips and then bumps:
    let p = AppendixParams::new(
        -0.5648730412774879,
        -0.4789710105999373,
        -0.7033868010467321,
        0.598213576840446,
        0.7581452988759478,
    )?;
    let out = count_interior_extrema(AppendixFn::F2, &p, 20_001)?;
    println!();
    println!("known f2 counterexample: {} interior extrema", out.count);
    for (x, kind) in out.locations.iter().zip(&out.kinds) {
        let k = match kind {
            ExtremumDirection::Minimum => "minimum",
            ExtremumDirection::Maximum => "maximum",
        };
        println!("  {k} at x = {x:.6}");
    }
    Ok(())
}
