//! The quadratic bracket on matrix entries, differentiated with exact jets,
//! checked against the chart pairing of twisted minors.

use twisted_minors::rational::int;
use twisted_minors::sklyanin;
use twisted_minors::{CartanData, DoubleWord};

fn main() -> twisted_minors::Result<()> {
    let cd = CartanData::sl(3)?;
    for word in ["1,1b", "1,2b,2,1b", "2b,1,2,1b,1"] {
        let dw = DoubleWord::parse(&cd, word)?;
        let rep = sklyanin::verify_oracle_vs_theorem(3, &dw, 3, 7)?;
        let pairs: usize = rep.samples.iter().map(|s| s.pairs.len() + s.coordinate_pairs.len()).sum();
        println!("SL_3 [{word}]: {pairs} brackets over {} points, all agree: {}", rep.samples.len(), rep.pass);
        if let Some(e) = rep.samples[0].pairs.iter().find(|e| e.lhs != int(0)) {
            println!("    e.g. {{M_{}, M_{}}}(x) = {}", e.k, e.k_prime, e.lhs);
        }
    }
    Ok(())
}
