//! Points of the leaf `S^{w_0,w_0}` in `SL_3` and the twisted minors of the
//! doubled word of `(1,2,1)` written in matrix entries.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_minors::rational::to_pq;
use twisted_minors::sln::{self, minor_by_sets};
use twisted_minors::{CartanData, DoubleWord};

fn main() -> twisted_minors::Result<()> {
    let cd = CartanData::sl(3)?;
    let dw = DoubleWord::double_from_reduced(&cd, &"1,2,1".parse()?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let s = sln::leaf_sample(3, &dw, &mut rng)?;
    let x = &s.x;
    println!("x = {}", sln::matrix_to_json(x));
    let e = |i: usize, j: usize| x.get(i - 1, j - 1).clone();
    println!("x_31 = {}, Δ_[1,2],[2,3] = {}", to_pq(&e(3, 1)), to_pq(&minor_by_sets(x, &[1, 2], &[2, 3])));
    println!("x_13 = {}, Δ_[2,3],[1,2] = {}", to_pq(&e(1, 3)), to_pq(&minor_by_sets(x, &[2, 3], &[1, 2])));

    let ms = sln::twisted_minors(&dw, x)?;
    println!("M_1 = {}, 1/x_13 = {}", to_pq(&ms[0]), to_pq(&e(1, 3).recip()));
    println!("M_3 = {}, 1/x_31 = {}", to_pq(&ms[2]), to_pq(&e(3, 1).recip()));
    let m5 = (e(2, 3) * minor_by_sets(x, &[1, 3], &[1, 2]) - e(1, 3) * minor_by_sets(x, &[2, 3], &[1, 2]))
        / (e(1, 3) * e(3, 1));
    println!("M_5 = {}, from entries {}", to_pq(&ms[4]), to_pq(&m5));
    println!("membership: {:?}", sln::leaf_membership(dw.u(), dw.v(), x)?);
    Ok(())
}
