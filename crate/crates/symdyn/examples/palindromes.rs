//! Palindrome complexity, richness, palindromic closures and the
//! episturmian prefix test.
//!
//! Run with: cargo run --example palindromes

use symdyn::generate::{named_sequence, NamedSequence};
use symdyn::measures::{
    is_standard_episturmian_prefix, palindrome_complexity, palindrome_inequality_check,
    palindromic_closure, PalindromeInequality,
};
use symdyn::words::{is_rich, palindromic_factors, Word};

fn main() -> symdyn::Result<()> {
    let w = Word::binary("01101")?;
    let pals: Vec<String> = palindromic_factors(&w).iter().map(|p| p.to_text()).collect();
    println!("palindromic factors of {w}: {pals:?}");
    println!("rich: {} (count = |w|+1 = {})", is_rich(&w), w.len() + 1);

    for text in ["01", "0110", "001", "010011"] {
        let w = Word::binary(text)?;
        println!("closure({text}) = {}", palindromic_closure(&w));
    }

    let fib = named_sequence(&NamedSequence::Fibonacci, 2000)?;
    println!(
        "fibonacci Pal(1..10) = {:?}   (2 odd / 1 even)",
        palindrome_complexity(&fib, 10)?
    );
    println!(
        "fibonacci prefix of length 60 standard-episturmian: {}",
        is_standard_episturmian_prefix(&fib.prefix(60))
    );

    let morse = named_sequence(&NamedSequence::Morse, 1 << 12)?;
    println!("morse Pal(1..12)     = {:?}   (bounded)", palindrome_complexity(&morse, 12)?);

    match palindrome_inequality_check(&fib, 15)? {
        PalindromeInequality::Holds { slack } => {
            println!("palindrome inequality on fibonacci: holds, slack {slack:?}")
        }
        other => println!("palindrome inequality on fibonacci: {other:?}"),
    }
    Ok(())
}
