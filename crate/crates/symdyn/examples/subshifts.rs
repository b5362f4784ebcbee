//! Shifts of finite type: block counts, entropy, coordinate-pattern counts
//! N(S), and de Bruijn graphs.
//!
//! Run with: cargo run --example subshifts

use num_traits::ToPrimitive;
use symdyn::subshift::{is_irreducible, CoordinateSet, Sft};
use symdyn::words::{Alphabet, Word};

fn main() -> symdyn::Result<()> {
    let golden = Sft::from_forbidden_words(Alphabet::binary(), &[Word::binary("11")?])?;
    println!("golden mean SFT (no 11): matrix {:?}", golden.matrix());
    println!(
        "  |L_n| for n=1..8: {:?}",
        (1..=8).map(|n| golden.count_blocks(n).to_u64().unwrap()).collect::<Vec<_>>()
    );
    println!("  entropy = {:.6} (log golden ratio)", golden.entropy());

    // N(S) depends on the shape of S, not only its size
    for members in [vec![0, 1], vec![0, 2], vec![0, 2, 4]] {
        let horizon = members.last().unwrap() + 1;
        let s = CoordinateSet::new(horizon, members.clone())?;
        println!("  N({members:?}) = {}", golden.pattern_count(&s)?);
    }

    for name in ["full2", "period2", "figI", "figII"] {
        let sft = Sft::named(name)?;
        println!(
            "{name}: entropy {:.4}, M^2 > 0: {}, |L_5| = {}",
            sft.entropy(),
            sft.is_power_positive(2),
            sft.count_blocks(5)
        );
    }

    let g = golden.de_bruijn_graph(4)?;
    println!(
        "golden de Bruijn graph, order 4: {} vertices, {} edges, irreducible: {}",
        g.vertex_count(),
        g.edge_count(),
        is_irreducible(&g)
    );
    println!(
        "  vertices: {}",
        g.vertices.iter().map(|v| v.to_text()).collect::<Vec<_>>().join(" ")
    );
    Ok(())
}
