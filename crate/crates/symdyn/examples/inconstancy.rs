//! Inconstancy of binary sequences: the 2-block frequency formula against
//! the geometric definition (polyline length over hull perimeter).
//!
//! Run with: cargo run --example inconstancy

use symdyn::generate::{named_sequence, NamedSequence};
use symdyn::measures::{inconstancy, inconstancy_geometric};
use symdyn::words::Word;

fn main() -> symdyn::Result<()> {
    println!("periodic family (0^d 1)^inf, closed form (d-1+2*sqrt(2))/(d+1):");
    for d in 1..=6usize {
        let block = format!("{}1", "0".repeat(d));
        let w = Word::binary(&block.repeat(3000 / (d + 1)))?;
        let formula = inconstancy(&w, 1.0)?;
        let geometric = inconstancy_geometric(&w, 1.0)?;
        let exact = (d as f64 - 1.0 + 2.0 * 2f64.sqrt()) / (d as f64 + 1.0);
        println!("  d={d}: formula {formula:.4}  geometric {geometric:.4}  closed form {exact:.4}");
    }

    let morse = named_sequence(&NamedSequence::Morse, 1 << 14)?;
    println!(
        "morse: formula {:.4}  geometric {:.4}  (1+2*sqrt(2))/3 = {:.4}",
        inconstancy(&morse, 1.0)?,
        inconstancy_geometric(&morse, 1.0)?,
        (1.0 + 2.0 * 2f64.sqrt()) / 3.0
    );

    let fib = named_sequence(&NamedSequence::Fibonacci, 4000)?;
    println!(
        "fibonacci: formula {:.4}  geometric {:.4}",
        inconstancy(&fib, 1.0)?,
        inconstancy_geometric(&fib, 1.0)?
    );

    // the step height h scales the formula through sqrt(h^2+1)
    for h in [0.5, 1.0, 2.0] {
        println!("morse at h={h}: {:.4}", inconstancy(&morse, h)?);
    }
    Ok(())
}
