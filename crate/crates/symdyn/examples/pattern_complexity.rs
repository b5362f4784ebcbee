//! Nonrepetitive, window, arithmetic and maximal-pattern complexities.
//!
//! Run with: cargo run --release --example pattern_complexity

use symdyn::generate::{named_sequence, NamedSequence};
use symdyn::measures::{
    arithmetic_complexity, eulerian_entropy_estimate, maximal_pattern_complexity_lb,
    nonrepetitive_complexity, window_complexity,
};
use symdyn::words::factors;

fn main() -> symdyn::Result<()> {
    let fib = named_sequence(&NamedSequence::Fibonacci, 1200)?;
    let morse = named_sequence(&NamedSequence::Morse, 2048)?;

    println!("nonrepetitive complexity (largest initial run of distinct n-windows):");
    for n in 2..=8 {
        println!(
            "  n={n}: fibonacci P^N = {:>3} <= p(n) = {:<3}  morse P^N = {:>3}",
            nonrepetitive_complexity(&fib, n)?,
            factors(&fib, n).count(),
            nonrepetitive_complexity(&morse, n)?,
        );
    }

    let champ = named_sequence(&NamedSequence::ChampernowneBinary, 1 << 14)?;
    let est = eulerian_entropy_estimate(&champ, 2, 10)?;
    println!("champernowne P^N(2..10) = {:?}", est.per_n.iter().map(|&(_, v)| v).collect::<Vec<_>>());
    println!("eulerian entropy estimate = {:.4} (log 2 = {:.4})", est.estimate, 2f64.ln());

    println!("window / arithmetic / maximal-pattern at n = 4:");
    for (name, w) in [("fibonacci", &fib), ("morse", &morse)] {
        println!(
            "  {name}: window {} arith {} maxpat_lb {}",
            window_complexity(w, 4)?,
            arithmetic_complexity(w, 4, 10)?,
            maximal_pattern_complexity_lb(w, 4, 40)?.count,
        );
    }

    // the sturmian 2k law and the morse 2^k law emerge from the search
    for k in 1..=4usize {
        let s = maximal_pattern_complexity_lb(&fib, k, 40)?;
        let m = maximal_pattern_complexity_lb(&morse, k, 40)?;
        println!(
            "k={k}: sturmian sup {} = 2k via tau = {:?};  morse sup {} = 2^k",
            s.count, s.pattern, m.count
        );
    }
    Ok(())
}
