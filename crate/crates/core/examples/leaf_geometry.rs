//! Leaf dimension, component count and the monomial equations of `S^{u,v}`.

use twisted_minors::leaves::{self, LeafConstraint};
use twisted_minors::{CartanData, DoubleWord};

fn main() -> twisted_minors::Result<()> {
    let a3 = CartanData::parse("A3")?;
    for word in ["1,2b,2,3b,3,2,1b", "1b,3", ""] {
        let dw = DoubleWord::parse(&a3, word)?;
        let rep = leaves::leaf_report(&a3, dw.u(), dw.v(), Some(&dw))?;
        println!(
            "[{word}] u = ({}), v = ({}): dim H^(u,v) = {}, leaf dimension {}, {} component(s)",
            dw.u(),
            dw.v(),
            rep.lattice.dim,
            rep.dimension,
            rep.components
        );
        for c in &rep.constraints.as_ref().expect("word given").constraints {
            match c {
                LeafConstraint::Unit { index, .. } => println!("    M_{index} = 1"),
                LeafConstraint::Monomial { index, param, factors, .. } => {
                    let rhs: Vec<String> = factors.iter().map(|(k, e)| format!("M_{k}^{e}")).collect();
                    println!("    M_{index} = a'^{param} {}", rhs.join(" "));
                }
            }
        }
    }
    Ok(())
}
