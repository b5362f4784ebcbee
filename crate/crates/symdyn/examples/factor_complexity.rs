//! Factor complexity profiles and the p(n) <= n periodicity certificate.
//!
//! Run with: cargo run --example factor_complexity

use symdyn::generate::{mechanical, named_sequence, MechanicalVariant, NamedSequence};
use symdyn::measures::{eventual_periodicity_test, morse_complexity_closed_form};
use symdyn::words::{complexity_profile, factors};

fn main() -> symdyn::Result<()> {
    let fib = named_sequence(&NamedSequence::Fibonacci, 2000)?;
    println!("fibonacci p(1..12) = {:?}   (always n+1)", complexity_profile(&fib, 12)?);

    let morse = named_sequence(&NamedSequence::Morse, 1 << 13)?;
    let profile = complexity_profile(&morse, 12)?;
    println!("morse     p(1..12) = {profile:?}");
    let closed: Vec<u64> = (1..=12).map(morse_complexity_closed_form).collect();
    println!("closed form        = {closed:?}");

    println!("morse 4-blocks: {}", factors(&morse, 4).iter().map(|w| w.to_text()).collect::<Vec<_>>().join(" "));

    // rational slopes are eventually periodic, and the certificate finds the
    // period; irrational slopes stay aperiodic
    let rational = mechanical(3.0 / 7.0, 0.0, 300, MechanicalVariant::Lower)?;
    println!("mechanical 3/7: {:?}", eventual_periodicity_test(&rational)?);
    println!("fibonacci     : {:?}", eventual_periodicity_test(&fib.prefix(500))?);
    Ok(())
}
