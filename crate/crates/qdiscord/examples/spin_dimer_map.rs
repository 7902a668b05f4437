//! Map states to thermal XXZ spin dimers and back, and express the
//! interior-minimum band in coupling-constant language.

use qdiscord::{dimer_to_state, state_to_dimer, DimerParams, XxzState};

fn main() -> qdiscord::Result<()> {
    // forward: a dimer in a field, at a temperature inside the window where
    // the conditional entropy develops its interior minimum
    let p = DimerParams::new(1.0, 1.02, 1.0, 0.8)?;
    let state = dimer_to_state(&p)?;
    println!(
        "dimer (J, Jz, B, T) = (1, 1.02, 1, 0.8) -> state ({:.6}, {:.6}, {:.6})",
        state.s1(),
        state.c1(),
        state.c3()
    );
    println!(
        "  shape type {}",
        qdiscord::classify_shape(&state)?
    );

    // inverse: the interior-minimum band endpoints in anisotropy language
    for s1 in [0.4731928814, 0.4733412570] {
        let st = XxzState::new(s1, 0.14, 0.34)?;
        let d = state_to_dimer(&st, 1.0)?;
        println!(
            "s1 = {s1:.10}: Delta = Jz/J = {:.10}, B/J = {:.10}, T/J = {:.10}",
            d.delta(),
            d.b_over_j(),
            1.0 / d.j
        );
    }

    // round trip accuracy
    let st = XxzState::new(0.25, 0.14, 0.34)?;
    let back = dimer_to_state(&state_to_dimer(&st, 2.5)?)?;
    println!(
        "round trip max deviation: {:.2e}",
        (back.s1() - st.s1())
            .abs()
            .max((back.c1() - st.c1()).abs())
            .max((back.c3() - st.c3()).abs())
    );
    Ok(())
}
