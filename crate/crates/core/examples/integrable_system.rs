//! The functions `M_1, M_3, …, M_{2ℓ−1}` on `S^{u,u}` pairwise commute and
//! number half the leaf dimension.

use twisted_minors::chart;
use twisted_minors::weyl;
use twisted_minors::CartanData;

fn main() -> twisted_minors::Result<()> {
    for tag in ["A2", "A3", "B2", "C3", "G2"] {
        let cd = CartanData::parse(tag)?;
        let w0 = weyl::longest_element(&cd);
        let rep = chart::verify_commuting_family(&cd, &w0)?;
        println!(
            "{tag} j = ({}): {} functions, leaf dimension {}, exponent rank {}, commuting: {}",
            rep.word, rep.family_size, rep.leaf_dimension, rep.exponent_rank, rep.pass
        );
    }
    Ok(())
}
