//! Cartan matrices, symmetrizers and the form on fundamental weights.
//!
//! Run with `cargo run --example cartan_forms`.

use twisted_minors::rational::to_pq;
use twisted_minors::CartanData;

fn main() -> twisted_minors::Result<()> {
    for tag in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let cd = CartanData::parse(tag)?;
        println!("{tag}: symmetrizer {:?}", cd.symmetrizer);
        for (i, row) in cd.cartan.iter().enumerate() {
            let form: Vec<String> = cd.form[i].iter().map(to_pq).collect();
            println!("  a_{} = {:?}   (ω_{}, ω_*) = [{}]", i + 1, row, i + 1, form.join(", "));
        }
    }
    Ok(())
}
