//! Generate the classical low-complexity sequences: substitution fixed
//! points, mechanical words from a slope, standard sequences from a
//! directive, and the named corpus.
//!
//! Run with: cargo run --example generate_words

use symdyn::generate::{
    characteristic_word, mechanical_cf, named_sequence, standard_sequence, DirectiveSequence,
    MechanicalVariant, NamedSequence, Substitution,
};
use symdyn::words::Alphabet;

fn main() -> symdyn::Result<()> {
    let fib = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "0")])?;
    println!("fibonacci fixed point : {}", fib.fixed_point('0', 34)?);
    println!("  primitive: {}", fib.is_primitive(4));

    let morse = Substitution::new(Alphabet::binary(), &[('0', "01"), ('1', "10")])?;
    println!("morse fixed point     : {}", morse.fixed_point('0', 32)?);

    // golden-ratio slope via its continued fraction [0; 2, 1, 1, 1, ...]
    let cf: Vec<u64> = [0, 2].into_iter().chain(std::iter::repeat(1).take(20)).collect();
    let lower = mechanical_cf(&cf, 0, 1, 20, MechanicalVariant::Lower)?;
    let upper = mechanical_cf(&cf, 0, 1, 20, MechanicalVariant::Upper)?;
    println!("lower mechanical      : {lower}");
    println!("upper mechanical      : {upper}");

    // the same sequence three ways
    let d = DirectiveSequence::new(vec![1, 1, 1, 1])?;
    println!("standard sequence s4  : {}", standard_sequence(&d));
    println!("characteristic word   : {}", characteristic_word(&cf, 20)?);

    for name in [
        NamedSequence::Kolakoski,
        NamedSequence::Chacon,
        NamedSequence::ChampernowneBinary,
        NamedSequence::Periodic("011".into()),
    ] {
        println!("{name:?}: {}", named_sequence(&name, 24)?);
    }
    Ok(())
}
