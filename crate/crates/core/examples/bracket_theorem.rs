//! Pairings `⟨M_k, M_k'⟩` of twisted minors computed in the chart, next to
//! `(γ^k, γ^k') − (δ^k, δ^k')`.

use twisted_minors::chart;
use twisted_minors::rational::int;
use twisted_minors::report::all_pass;
use twisted_minors::{CartanData, DoubleWord};

fn main() -> twisted_minors::Result<()> {
    let a3 = CartanData::parse("A3")?;
    let dw = DoubleWord::parse(&a3, "1,2b,2,3b,3,2,1b")?;
    let aw = dw.anchor_weights(&a3);
    for k in 1..=dw.total() {
        let mono = chart::minor_exponents(&a3, &dw, k)?;
        println!(
            "M_{k}: γ = {}, δ = {}, a-exponent {}, t-exponents {:?}",
            aw.gamma(k),
            aw.delta(k),
            mono.torus_exp,
            mono.t_exp
        );
    }
    let rep = chart::verify_bracket_theorem(&a3, &dw);
    for e in rep.iter().filter(|e| e.lhs != int(0)).take(8) {
        println!("⟨M_{}, M_{}⟩ = {} = {}", e.k, e.k_prime, e.lhs, e.rhs);
    }
    println!("{} pairs, all equal: {}", rep.len(), all_pass(&rep));

    let g2 = CartanData::parse("G2")?;
    let dw = DoubleWord::parse(&g2, "2,1b,1,2b,2,1")?;
    println!("G2 [{dw}]: all equal: {}", all_pass(&chart::verify_bracket_theorem(&g2, &dw)));
    Ok(())
}
