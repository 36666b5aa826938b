//! The twist map on a chart point of `SL_4`, and the twisted minors as
//! Laurent monomials in the chart parameters.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_minors::chart;
use twisted_minors::rational::to_pq;
use twisted_minors::sln;
use twisted_minors::{CartanData, DoubleWord};

fn main() -> twisted_minors::Result<()> {
    let cd = CartanData::sl(4)?;
    let dw = DoubleWord::parse(&cd, "1,2b,2,3b,3,2,1b")?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (x, a, t) = sln::random_chart_point(4, &dw, &mut rng)?;
    println!("x  = {}", sln::matrix_to_json(&x));
    println!("x' = {}", sln::matrix_to_json(&sln::twist(dw.u(), dw.v(), &x)?));
    let chars = a.characters();
    for (k, val) in sln::twisted_minors(&dw, &x)?.iter().enumerate() {
        let mono = chart::minor_exponents(&cd, &dw, k + 1)?;
        println!(
            "M_{:<2} = {:>24}   a^{} t^{:?} = {}",
            k + 1,
            to_pq(val),
            mono.torus_exp,
            mono.t_exp,
            to_pq(&mono.evaluate(&chars, &t))
        );
    }
    Ok(())
}
