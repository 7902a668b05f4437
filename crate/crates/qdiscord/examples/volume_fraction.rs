//! Monte Carlo estimate of how much of the state tetrahedron carries an
//! interior conditional-entropy minimum (the θ*-phase) or maximum.

use qdiscord::theta_star_volume;

fn main() -> qdiscord::Result<()> {
    let est = theta_star_volume(200_000, 42)?;
    println!("samples: {}", est.samples);
    println!(
        "type IV (interior minimum): {:6}  fraction {:.2e} +- {:.1e}",
        est.type_iv, est.fraction_iv, est.stderr_iv
    );
    println!(
        "type V  (interior maximum): {:6}  fraction {:.2e} +- {:.1e}",
        est.type_v, est.fraction_v, est.stderr_v
    );
    if let Some(min_c3) = est.iv_min_c3 {
        println!("smallest c3 among type-IV samples: {min_c3:.4} (the minimum layer needs c3 > 0)");
    }
    println!();
    println!("the maximum regions outnumber the minimum layer by an order of magnitude");
    Ok(())
}
