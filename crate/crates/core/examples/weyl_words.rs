//! Weyl group words: lengths, reduced words of w_0 and braid-move invariance.

use twisted_minors::weyl;
use twisted_minors::{CartanData, WeylWord};

fn main() -> twisted_minors::Result<()> {
    let a2 = CartanData::parse("A2")?;
    let w0s: Vec<WeylWord> = weyl::reduced_words_of_length(&a2, 3);
    for w in &w0s {
        println!("A2 reduced word of w_0: ({w})");
    }
    println!("same element: {}", weyl::same_element(&a2, &w0s[0], &w0s[1])?);

    for tag in ["B2", "G2", "D4", "F4", "E6"] {
        let cd = CartanData::parse(tag)?;
        let w0 = weyl::longest_element(&cd);
        println!("{tag}: ℓ(w_0) = {}, w_0 = ({w0}), i ↦ i* = {:?}", w0.len(), weyl::star_involution(&cd));
    }

    let w: WeylWord = "1,2,1,2".parse()?;
    let (len, reduced) = weyl::length_and_reduced(&a2, &w)?;
    println!("A2 ({w}): length {len}, reduced {reduced}");
    Ok(())
}
