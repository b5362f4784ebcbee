//! Topological intricacy and average sample complexity: finite-n profiles,
//! the series limit for mixing SFTs, and two subshifts with identical block
//! counts that the profile tells apart.
//!
//! Run with: cargo run --release --example intricacy_profile

use symdyn::coeffs::CoefficientSystem;
use symdyn::intricacy::{asc_finite, asc_profile, asc_sft_series, int_finite};
use symdyn::subshift::Sft;

fn main() -> symdyn::Result<()> {
    let golden = Sft::named("golden")?;
    let uniform = CoefficientSystem::Uniform;

    // the worked finite-n value: Int(3) = (1/24) log(6^4 8^2 / 5^6)
    let int3 = int_finite(&golden, 3, &uniform)?;
    println!("golden mean Int(3) = {int3:.6}");

    let series = asc_sft_series(&golden)?;
    println!(
        "golden mean series limit: h {:.4}  Asc {:.4}  Int {:.4}  ({} terms, tail < {:.1e})",
        series.h, series.asc, series.int, series.terms, series.tail_bound
    );
    for r in 2..=4 {
        let s = asc_sft_series(&Sft::full_shift(r)?)?;
        println!("full {r}-shift: Asc = {:.6} = log({r})/2, Int = {:.1e}", s.asc, s.int);
    }

    // same complexity function, different Asc
    let fig1 = Sft::named("figI")?;
    let fig2 = Sft::named("figII")?;
    println!("\nfigI vs figII: |L_n| equal for n <= 10, profiles differ:");
    println!("  n   AscI    AscII   IntI    IntII");
    for point in asc_profile(&fig1, 10, &uniform)? {
        let n = point.n;
        let asc2 = asc_finite(&fig2, n, &uniform)?;
        let int2 = int_finite(&fig2, n, &uniform)?;
        println!(
            "  {n:>2}  {:.4}  {asc2:.4}  {:.4}  {int2:.4}",
            point.asc, point.int
        );
    }

    // non-uniform weights through the same machinery
    for cs in [CoefficientSystem::Neural, CoefficientSystem::p_symmetric(0.3)?] {
        println!(
            "golden mean Asc(10) with {} weights: {:.4}",
            cs.label(),
            asc_finite(&golden, 10, &cs)?
        );
    }

    // the ordered fixture: profile decays to zero, series is refused
    let period2 = Sft::named("period2")?;
    let tail = asc_profile(&period2, 20, &uniform)?;
    println!(
        "period2 Asc(20) = {:.4} (tends to 0); series: {:?}",
        tail.last().unwrap().asc,
        asc_sft_series(&period2).err().map(|e| e.to_string())
    );
    Ok(())
}
