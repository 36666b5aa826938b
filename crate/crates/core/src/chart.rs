//! Laurent-monomial calculus in the factorization chart `(a; t_1, …, t_m)`.
//!
//! Every twisted minor is a single Laurent monomial in the chart, and the
//! chart coordinates pairwise quasi-commute, so the bracket of two twisted
//! minors is fixed by one rational coefficient computed from exponent
//! vectors: `{f, g} = ⟨f, g⟩ f g`.
//!
//! Generators are ordered `a^{ω_1}, …, a^{ω_r}, t_1, …, t_m`.

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{CartanData, Weight};
use crate::doubleword::DoubleWord;
use crate::error::{Error, Result};
use crate::leaves;
use crate::rational::{int, pow, Rational};
use crate::report::{all_pass, PairEntry};
use crate::weyl::{self, WeylWord};

/// `a^{torus_exp} · t_1^{t_exp[0]} ⋯ t_m^{t_exp[m-1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentMonomial {
    pub torus_exp: Weight,
    pub t_exp: Vec<i64>,
}

impl LaurentMonomial {
    pub fn unit(rank: usize, m: usize) -> Self {
        LaurentMonomial { torus_exp: Weight::zero(rank), t_exp: vec![0; m] }
    }

    pub fn torus(g: Weight, m: usize) -> Self {
        LaurentMonomial { torus_exp: g, t_exp: vec![0; m] }
    }

    /// The coordinate `t_k` (1-based).
    pub fn coordinate(rank: usize, m: usize, k: usize) -> Self {
        let mut x = LaurentMonomial::unit(rank, m);
        x.t_exp[k - 1] = 1;
        x
    }

    pub fn is_unit(&self) -> bool {
        self.torus_exp.is_zero() && self.t_exp.iter().all(|&e| e == 0)
    }

    fn same_chart(&self, o: &Self) -> bool {
        self.torus_exp.rank() == o.torus_exp.rank() && self.t_exp.len() == o.t_exp.len()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert!(self.same_chart(o), "monomials over different charts");
        LaurentMonomial {
            torus_exp: &self.torus_exp + &o.torus_exp,
            t_exp: self.t_exp.iter().zip(&o.t_exp).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        LaurentMonomial {
            torus_exp: self.torus_exp.scale(e),
            t_exp: self.t_exp.iter().map(|x| x * e).collect(),
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Exponents in generator order `(a^{ω_1..ω_r}, t_1..t_m)`.
    pub fn exponent_vector(&self) -> Vec<i64> {
        self.torus_exp.0.iter().chain(&self.t_exp).copied().collect()
    }

    pub fn from_exponent_vector(rank: usize, v: &[i64]) -> Self {
        LaurentMonomial { torus_exp: Weight(v[..rank].to_vec()), t_exp: v[rank..].to_vec() }
    }

    /// Evaluates at a chart point given the characters `a^{ω_i}` and the `t_k`.
    pub fn evaluate(&self, characters: &[Rational], t: &[Rational]) -> Rational {
        assert_eq!(characters.len(), self.torus_exp.rank());
        assert_eq!(t.len(), self.t_exp.len());
        let mut acc = int(1);
        for (x, &e) in characters.iter().zip(&self.torus_exp.0).chain(t.iter().zip(&self.t_exp)) {
            if e != 0 {
                acc *= pow(x, e);
            }
        }
        acc
    }
}

/// Skew-symmetric pairing on chart generators, extended bilinearly to
/// monomials through their exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPairing {
    pub rank: usize,
    pub m: usize,
    pub matrix: Vec<Vec<Rational>>,
}

impl SkewPairing {
    fn zeros(rank: usize, m: usize) -> Self {
        let n = rank + m;
        SkewPairing { rank, m, matrix: vec![vec![Rational::zero(); n]; n] }
    }

    fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.matrix[j][i] = -x.clone();
        self.matrix[i][j] = x;
    }

    /// Matrix index of `t_k`.
    fn t(&self, k: usize) -> usize {
        self.rank + k - 1
    }

    /// Matrix index of `a^{ω_j}`.
    fn a(&self, j: usize) -> usize {
        j - 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[i][j]
    }
}

/// The coordinate brackets of the chart:
/// `{t_k, t_k'} = ε(i_k)(α_{|i_k|}, α_{|i_k'|}) t_k t_k'` for `k < k'`,
/// `{t_k, a^γ} = (α_{|i_k|}, γ) t_k a^γ`, `{a^γ, a^γ'} = 0`.
pub fn pairing_matrix(cd: &CartanData, dw: &DoubleWord) -> SkewPairing {
    let m = dw.m();
    let mut p = SkewPairing::zeros(cd.rank, m);
    for k in 1..=m {
        let lk = dw.letter(k);
        let ak = cd.alpha(lk.index);
        for kp in (k + 1)..=m {
            let akp = cd.alpha(dw.letter(kp).index);
            let c = int(lk.sign()) * cd.form_unchecked(&ak, &akp);
            p.set(p.t(k), p.t(kp), c);
        }
        for j in 1..=cd.rank {
            let c = cd.form_unchecked(&ak, &cd.omega(j));
            p.set(p.t(k), p.a(j), c);
        }
    }
    p
}

/// The same pairing written in the generators `(a^{ω_j}, y_k)` where
/// `y_k = t_k` for unbarred and `y_k = a^{−α_{|i_k|}} t_k` for barred letters.
pub fn y_pairing_matrix(cd: &CartanData, dw: &DoubleWord) -> SkewPairing {
    let m = dw.m();
    let mut p = SkewPairing::zeros(cd.rank, m);
    for k in 1..=m {
        let lk = dw.letter(k);
        let ak = cd.alpha(lk.index);
        for kp in (k + 1)..=m {
            let lkp = dw.letter(kp);
            if lk.barred == lkp.barred {
                let c = int(lk.sign()) * cd.form_unchecked(&ak, &cd.alpha(lkp.index));
                p.set(p.t(k), p.t(kp), c);
            }
        }
        for j in 1..=cd.rank {
            p.set(p.t(k), p.a(j), cd.form_unchecked(&ak, &cd.omega(j)));
        }
    }
    p
}

/// `⟨M, M'⟩` for monomials over the pairing's chart.
pub fn bracket_coeff(p: &SkewPairing, x: &LaurentMonomial, y: &LaurentMonomial) -> Result<Rational> {
    for z in [x, y] {
        if z.torus_exp.rank() != p.rank || z.t_exp.len() != p.m {
            return Err(Error::input(format!(
                "monomial over a chart of shape ({}, {}), pairing has ({}, {})",
                z.torus_exp.rank(),
                z.t_exp.len(),
                p.rank,
                p.m
            )));
        }
    }
    let (ex, ey) = (x.exponent_vector(), y.exponent_vector());
    let mut acc = Rational::zero();
    for (i, &a) in ex.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in ey.iter().enumerate() {
            if b != 0 && !p.matrix[i][j].is_zero() {
                acc += &p.matrix[i][j] * int(a * b);
            }
        }
    }
    Ok(acc)
}

/// Exponents of `M_k` from the closed monomial formula.
pub fn minor_exponents(cd: &CartanData, dw: &DoubleWord, k: usize) -> Result<LaurentMonomial> {
    dw.check_position(k)?;
    let aw = dw.anchor_weights(cd);
    Ok(minor_exponents_with(cd, dw, &aw, k))
}

pub(crate) fn minor_exponents_with(
    cd: &CartanData,
    dw: &DoubleWord,
    aw: &crate::doubleword::AnchorWeights,
    k: usize,
) -> LaurentMonomial {
    let m = dw.m();
    let torus_exp = -&weyl::apply_unchecked(cd, dw.u(), aw.gamma(k));
    let mut t_exp = vec![0; m];
    for (l, e) in t_exp.iter_mut().enumerate().map(|(i, e)| (i + 1, e)) {
        let letter = dw.letter(l);
        if l < k && letter.barred {
            *e = aw.partial_gamma(cd, dw, k, l).coord(letter.index);
        } else if l >= k && !letter.barred {
            *e = aw.partial_delta(cd, dw, k, l).coord(letter.index);
        }
    }
    LaurentMonomial { torus_exp, t_exp }
}

/// All `M_1, …, M_{m+r}` as monomials.
pub fn all_minor_exponents(cd: &CartanData, dw: &DoubleWord) -> Vec<LaurentMonomial> {
    let aw = dw.anchor_weights(cd);
    (1..=dw.total()).map(|k| minor_exponents_with(cd, dw, &aw, k)).collect()
}

// solves diff = c · α_i
fn proportional(cd: &CartanData, diff: &Weight, i: usize) -> Option<i64> {
    let alpha = cd.alpha(i);
    let c = diff.coord(i);
    if c % 2 != 0 {
        return None;
    }
    let c = c / 2;
    (alpha.scale(c) == *diff).then_some(c)
}

/// Exponents of `M_k` recovered from consecutive partial weights:
/// `c^k_ℓ α_{|i_ℓ|} = γ^k_ℓ − γ^k_{ℓ+1}` (ℓ < k) and
/// `d^k_ℓ α_{|i_ℓ|} = δ^k_ℓ − δ^k_{ℓ−1}` (k ≤ ℓ ≤ m).
pub fn exponents_via_trail(cd: &CartanData, dw: &DoubleWord, k: usize) -> Result<LaurentMonomial> {
    dw.check_position(k)?;
    let aw = dw.anchor_weights(cd);
    let m = dw.m();
    let mut t_exp = vec![0; m];
    for l in 1..=m {
        let i = dw.letter(l).index;
        let diff = if l < k {
            &aw.partial_gamma(cd, dw, k, l) - &aw.partial_gamma(cd, dw, k, l + 1)
        } else {
            &aw.partial_delta(cd, dw, k, l) - &aw.partial_delta(cd, dw, k, l - 1)
        };
        t_exp[l - 1] = proportional(cd, &diff, i).ok_or_else(|| {
            Error::Invariant(format!(
                "partial-weight step {diff} at position {l} of M_{k} is not a multiple of α_{i}"
            ))
        })?;
    }
    let torus_exp = -&weyl::apply_unchecked(cd, dw.u(), aw.gamma(k));
    Ok(LaurentMonomial { torus_exp, t_exp })
}

/// Rewrites a monomial in the generators `(a; y)`.
pub fn to_y_basis(cd: &CartanData, dw: &DoubleWord, x: &LaurentMonomial) -> LaurentMonomial {
    // t_k = a^{α_{|i_k|}} y_k on barred positions
    let mut torus = x.torus_exp.clone();
    for (l, &e) in x.t_exp.iter().enumerate() {
        let letter = dw.letter(l + 1);
        if letter.barred && e != 0 {
            torus = &torus + &cd.alpha(letter.index).scale(e);
        }
    }
    LaurentMonomial { torus_exp: torus, t_exp: x.t_exp.clone() }
}

/// `(γ^k, γ^k') − (δ^k, δ^k')`.
pub fn theorem_coefficient(
    cd: &CartanData,
    aw: &crate::doubleword::AnchorWeights,
    k: usize,
    kp: usize,
) -> Rational {
    cd.form_unchecked(aw.gamma(k), aw.gamma(kp)) - cd.form_unchecked(aw.delta(k), aw.delta(kp))
}

/// Checks `⟨M_k, M_k'⟩ = (γ^k, γ^k') − (δ^k, δ^k')` for all `k < k'`.
pub fn verify_bracket_theorem(cd: &CartanData, dw: &DoubleWord) -> Vec<PairEntry> {
    let aw = dw.anchor_weights(cd);
    let p = pairing_matrix(cd, dw);
    let minors: Vec<LaurentMonomial> = (1..=dw.total())
        .map(|k| minor_exponents_with(cd, dw, &aw, k))
        .collect();
    let mut out = Vec::new();
    for k in 1..=dw.total() {
        for kp in (k + 1)..=dw.total() {
            let lhs = bracket_coeff(&p, &minors[k - 1], &minors[kp - 1]).expect("same chart");
            out.push(PairEntry::new(k, kp, lhs, theorem_coefficient(cd, &aw, k, kp)));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub word: WeylWord,
    pub double_word: String,
    /// `M_1, M_3, …, M_{2ℓ(u)−1}`.
    pub family: Vec<LaurentMonomial>,
    /// Pairs indexed by family position; `lhs` is the monomial pairing,
    /// `rhs` the coefficient `(γ,γ') − (δ,δ')`. Passing means both vanish.
    pub pairs: Vec<PairEntry>,
    pub family_size: usize,
    pub leaf_dimension: usize,
    /// Rank of the family's exponent vectors (functional independence).
    pub exponent_rank: usize,
    pub pass: bool,
}

/// Builds the doubled word of `j` and checks that `M_{2k−1}` pairwise
/// Poisson-commute and number half the dimension of `S^{u,u}`.
pub fn verify_commuting_family(cd: &CartanData, j: &WeylWord) -> Result<FamilyReport> {
    let dw = DoubleWord::double_from_reduced(cd, j)?;
    let aw = dw.anchor_weights(cd);
    let p = pairing_matrix(cd, &dw);
    let l = j.len();
    let family: Vec<LaurentMonomial> = (1..=l)
        .map(|k| minor_exponents_with(cd, &dw, &aw, 2 * k - 1))
        .collect();
    let mut pairs = Vec::new();
    for k in 1..=l {
        for kp in (k + 1)..=l {
            let lhs = bracket_coeff(&p, &family[k - 1], &family[kp - 1])?;
            let rhs = theorem_coefficient(cd, &aw, 2 * k - 1, 2 * kp - 1);
            let pass = lhs.is_zero() && rhs.is_zero();
            pairs.push(PairEntry { k, k_prime: kp, lhs, rhs, pass });
        }
    }
    let leaf_dimension = leaves::leaf_dimension(cd, dw.u(), dw.v())?;
    let vectors: Vec<Vec<i64>> = family.iter().map(|x| x.exponent_vector()).collect();
    let exponent_rank = crate::intlin::rank(&vectors);
    let pass = all_pass(&pairs) && 2 * l == leaf_dimension && exponent_rank == l;
    Ok(FamilyReport {
        word: j.clone(),
        double_word: dw.to_string(),
        family,
        pairs,
        family_size: l,
        leaf_dimension,
        exponent_rank,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(tag: &str, word: &str) -> (CartanData, DoubleWord) {
        let cd = CartanData::parse(tag).unwrap();
        let dw = DoubleWord::parse(&cd, word).unwrap();
        (cd, dw)
    }

    #[test]
    fn a1_pairing_by_hand() {
        let (cd, dw) = setup("A1", "1,1b");
        let p = pairing_matrix(&cd, &dw);
        // order: a^{ω_1}, t_1, t_2
        assert_eq!(p.entry(1, 2), &int(2));
        assert_eq!(p.entry(2, 1), &int(-2));
        assert_eq!(p.entry(1, 0), &int(1));
        assert_eq!(p.entry(0, 0), &int(0));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.entry(i, j), &-p.entry(j, i).clone());
            }
        }
    }

    #[test]
    fn torus_block_vanishes() {
        let (cd, dw) = setup("B3", "1,2b,3,3b,2");
        let p = pairing_matrix(&cd, &dw);
        for i in 0..3 {
            for j in 0..3 {
                assert!(p.entry(i, j).is_zero());
            }
        }
    }

    #[test]
    fn a1_minor_exponents_by_hand() {
        let (cd, dw) = setup("A1", "1,1b");
        let m1 = minor_exponents(&cd, &dw, 1).unwrap();
        assert_eq!(m1, LaurentMonomial { torus_exp: Weight(vec![-1]), t_exp: vec![-1, 0] });
        let m2 = minor_exponents(&cd, &dw, 2).unwrap();
        assert_eq!(m2, LaurentMonomial { torus_exp: Weight(vec![-1]), t_exp: vec![0, 0] });
        let m3 = minor_exponents(&cd, &dw, 3).unwrap();
        assert_eq!(m3, LaurentMonomial { torus_exp: Weight(vec![1]), t_exp: vec![0, -1] });
        assert!(minor_exponents(&cd, &dw, 4).is_err());
        for k in 1..=3 {
            assert_eq!(exponents_via_trail(&cd, &dw, k).unwrap(), minor_exponents(&cd, &dw, k).unwrap());
        }
    }

    #[test]
    fn identity_cell_minors_are_torus_characters() {
        let (cd, dw) = setup("A3", "");
        for j in 1..=3 {
            let mj = minor_exponents(&cd, &dw, j).unwrap();
            assert_eq!(mj, LaurentMonomial::torus(-&cd.omega(j), 0));
        }
        assert!(verify_bracket_theorem(&cd, &dw).iter().all(|e| e.pass && e.lhs.is_zero()));
    }

    #[test]
    fn trail_matches_closed_formula_on_doubled_a2() {
        let cd = CartanData::parse("A2").unwrap();
        let dw = DoubleWord::double_from_reduced(&cd, &"1,2,1".parse().unwrap()).unwrap();
        for k in 1..=dw.total() {
            assert_eq!(exponents_via_trail(&cd, &dw, k).unwrap(), minor_exponents(&cd, &dw, k).unwrap());
        }
    }

    #[test]
    fn y_basis() {
        let (cd, dw) = setup("A3", "1,2b,2,3b,3,2,1b");
        for k in 1..=dw.total() {
            let y = to_y_basis(&cd, &dw, &minor_exponents(&cd, &dw, k).unwrap());
            assert_eq!(y.torus_exp, -&cd.omega(dw.letter(k).index));
        }
        let plain = LaurentMonomial::coordinate(3, 7, 1).mul(&LaurentMonomial::coordinate(3, 7, 3));
        assert_eq!(to_y_basis(&cd, &dw, &plain), plain);

        let (cd1, dw1) = setup("A1", "1,1b");
        let py = y_pairing_matrix(&cd1, &dw1);
        assert!(py.entry(1, 2).is_zero());
    }

    #[test]
    fn bracket_coefficients() {
        let (cd, dw) = setup("A1", "1,1b");
        let p = pairing_matrix(&cd, &dw);
        let ms = all_minor_exponents(&cd, &dw);
        assert_eq!(bracket_coeff(&p, &ms[0], &ms[0]).unwrap(), int(0));
        assert_eq!(bracket_coeff(&p, &ms[0], &ms[1]).unwrap(), int(1));
        let lhs = bracket_coeff(&p, &ms[0].mul(&ms[1]), &ms[2]).unwrap();
        let rhs = bracket_coeff(&p, &ms[0], &ms[2]).unwrap() + bracket_coeff(&p, &ms[1], &ms[2]).unwrap();
        assert_eq!(lhs, rhs);
        assert!(bracket_coeff(&p, &LaurentMonomial::unit(1, 3), &ms[0]).is_err());
    }

    #[test]
    fn theorem_on_small_cases() {
        let (cd, dw) = setup("A1", "1,1b");
        let rep = verify_bracket_theorem(&cd, &dw);
        assert_eq!(rep.len(), 3);
        assert_eq!((rep[0].k, rep[0].k_prime), (1, 2));
        assert_eq!(rep[0].lhs, int(1));
        assert_eq!(rep[0].rhs, int(1));
        assert!(rep.iter().all(|e| e.pass));

        let (cd, dw) = setup("A3", "1,2b,2,3b,3,2,1b");
        let rep = verify_bracket_theorem(&cd, &dw);
        assert_eq!(rep.len(), 45);
        assert!(rep.iter().all(|e| e.pass), "{rep:?}");
    }

    #[test]
    fn theorem_for_non_simply_laced() {
        for (tag, word) in [("B2", "1b,2,1,2b,1b,2"), ("G2", "2,1b,1,2b,2,1"), ("C3", "3b,1,2,3,2b,1b")] {
            let (cd, dw) = setup(tag, word);
            let rep = verify_bracket_theorem(&cd, &dw);
            assert!(rep.iter().all(|e| e.pass), "{tag}: {rep:?}");
            assert!(rep.iter().any(|e| e.lhs != int(0)));
        }
    }

    #[test]
    fn commuting_family_examples() {
        let cd = CartanData::parse("A2").unwrap();
        let rep = verify_commuting_family(&cd, &"1,2,1".parse().unwrap()).unwrap();
        assert_eq!(rep.pairs.len(), 3);
        assert_eq!(rep.family_size, 3);
        assert_eq!(rep.leaf_dimension, 6);
        assert!(rep.pass);

        let a1 = CartanData::parse("A1").unwrap();
        let rep = verify_commuting_family(&a1, &"1".parse().unwrap()).unwrap();
        assert!(rep.pairs.is_empty() && rep.pass && rep.family_size == 1);

        let a3 = CartanData::parse("A3").unwrap();
        let rep = verify_commuting_family(&a3, &weyl::longest_element(&a3)).unwrap();
        assert_eq!(rep.pairs.len(), 15);
        assert_eq!(rep.family_size, 6);
        assert!(rep.pass);

        assert!(verify_commuting_family(&cd, &"1,1".parse().unwrap()).is_err());
    }
}
