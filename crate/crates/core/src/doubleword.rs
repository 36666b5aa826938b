//! Double reduced words of a pair `(u, v)` and the data attached to them.
//!
//! A double word is a shuffle of a reduced word of `u` (barred letters) and a
//! reduced word of `v` (unbarred letters). It always carries the appended
//! tail `i_{m+j} = j̄`, `j = 1..r`, so positions `1..=m+r` are uniform.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::weyl::{self, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub index: usize,
    pub barred: bool,
}

impl Letter {
    pub fn plain(index: usize) -> Self {
        Letter { index, barred: false }
    }

    pub fn bar(index: usize) -> Self {
        Letter { index, barred: true }
    }

    /// `ε(i) = +1` for unbarred, `−1` for barred letters.
    pub fn sign(&self) -> i64 {
        if self.barred {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}b", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// Parses `"1,2b,2,3b,3,2,1b"`; barred letters carry a trailing `b`.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (num, barred) = match tok.strip_suffix(['b', 'B']) {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            match num.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(Letter { index: i, barred }),
                _ => Err(Error::input(format!("bad double-word letter {tok:?}"))),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleWord {
    rank: usize,
    m: usize,
    /// `i_1..i_{m+r}` including the tail.
    letters: Vec<Letter>,
    u: WeylWord,
    v: WeylWord,
}

/// Splits a double word into its barred and unbarred subwords and checks
/// that both are reduced. Returns `(u, v)`.
pub fn validate_double_word(cd: &CartanData, letters: &[Letter]) -> Result<(WeylWord, WeylWord)> {
    for l in letters {
        cd.check_index(l.index)?;
    }
    let u = WeylWord(letters.iter().filter(|l| l.barred).map(|l| l.index).collect());
    let v = WeylWord(letters.iter().filter(|l| !l.barred).map(|l| l.index).collect());
    if !weyl::is_reduced(cd, &u)? {
        return Err(Error::Validation(format!("barred subword ({u}) is not reduced")));
    }
    if !weyl::is_reduced(cd, &v)? {
        return Err(Error::Validation(format!("unbarred subword ({v}) is not reduced")));
    }
    Ok((u, v))
}

impl DoubleWord {
    pub fn new(cd: &CartanData, word: &[Letter]) -> Result<Self> {
        let (u, v) = validate_double_word(cd, word)?;
        let mut letters = word.to_vec();
        letters.extend((1..=cd.rank).map(Letter::bar));
        Ok(DoubleWord { rank: cd.rank, m: word.len(), letters, u, v })
    }

    pub fn parse(cd: &CartanData, s: &str) -> Result<Self> {
        DoubleWord::new(cd, &parse_letters(s)?)
    }

    /// The doubled word `i_{2k−1} = j_k`, `i_{2k} = j̄_k` of `(u, u)`.
    pub fn double_from_reduced(cd: &CartanData, j: &WeylWord) -> Result<Self> {
        if !weyl::is_reduced(cd, j)? {
            return Err(Error::Validation(format!("word ({j}) is not reduced")));
        }
        let word: Vec<Letter> = j
            .letters()
            .iter()
            .flat_map(|&i| [Letter::plain(i), Letter::bar(i)])
            .collect();
        DoubleWord::new(cd, &word)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m = ℓ(u) + ℓ(v)`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `m + r`, the number of twisted minors.
    pub fn total(&self) -> usize {
        self.letters.len()
    }

    pub fn u(&self) -> &WeylWord {
        &self.u
    }

    pub fn v(&self) -> &WeylWord {
        &self.v
    }

    /// The word proper, without the tail.
    pub fn word(&self) -> &[Letter] {
        &self.letters[..self.m]
    }

    /// `i_k`, 1-based, `k` in `1..=m+r`.
    pub fn letter(&self, k: usize) -> Letter {
        self.letters[k - 1]
    }

    pub fn check_position(&self, k: usize) -> Result<()> {
        if (1..=self.total()).contains(&k) {
            Ok(())
        } else {
            Err(Error::input(format!("position {k} out of range 1..={}", self.total())))
        }
    }

    /// `u_{≥ℓ}` = product of `s_{|i_p|}` over barred `p`, `ℓ ≤ p ≤ m`,
    /// with `p` decreasing. Equals `e` for `ℓ > m`.
    pub(crate) fn u_ge(&self, l: usize) -> WeylWord {
        WeylWord(
            (l.max(1)..=self.m)
                .rev()
                .filter(|&p| self.letters[p - 1].barred)
                .map(|p| self.letters[p - 1].index)
                .collect(),
        )
    }

    /// `v_{<ℓ}` = product of `s_{|i_p|}` over unbarred `p < ℓ`, `p ≤ m`,
    /// with `p` increasing. Equals `v` for `ℓ > m`.
    pub(crate) fn v_lt(&self, l: usize) -> WeylWord {
        WeylWord(
            (1..l.min(self.m + 1))
                .filter(|&p| !self.letters[p - 1].barred)
                .map(|p| self.letters[p - 1].index)
                .collect(),
        )
    }

    /// `(u_{≥k}, v_{<k})` for `k` in `1..=m+r`.
    pub fn suffix_prefix(&self, k: usize) -> Result<(WeylWord, WeylWord)> {
        self.check_position(k)?;
        Ok((self.u_ge(k), self.v_lt(k)))
    }

    /// `γ^k = u_{≥k} ω_{|i_k|}` and `δ^k = v_{<k} ω_{|i_k|}` for every `k`.
    pub fn anchor_weights(&self, cd: &CartanData) -> AnchorWeights {
        let (gamma, delta) = (1..=self.total())
            .map(|k| {
                let w = cd.omega(self.letter(k).index);
                (
                    weyl::apply_unchecked(cd, &self.u_ge(k), &w),
                    weyl::apply_unchecked(cd, &self.v_lt(k), &w),
                )
            })
            .unzip();
        AnchorWeights { gamma, delta }
    }

    /// `I(u,v) = {i : uω_i = vω_i = ω_i}` and `k(j)`, the first position
    /// with `|i_k| = j` (both 1-based).
    pub fn fixed_set_and_first_occurrence(&self, cd: &CartanData) -> (Vec<usize>, Vec<usize>) {
        let fixed = fixed_set(cd, &self.u, &self.v);
        let first = (1..=self.rank)
            .map(|j| {
                (1..=self.total())
                    .find(|&k| self.letter(k).index == j)
                    .expect("tail contains every index")
            })
            .collect();
        (fixed, first)
    }
}

impl fmt::Display for DoubleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.word().iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// `I(u,v)`, computed from the action on fundamental weights.
pub fn fixed_set(cd: &CartanData, u: &WeylWord, v: &WeylWord) -> Vec<usize> {
    (1..=cd.rank)
        .filter(|&i| {
            let w = cd.omega(i);
            weyl::apply_unchecked(cd, u, &w) == w && weyl::apply_unchecked(cd, v, &w) == w
        })
        .collect()
}

/// The weights `γ^k`, `δ^k`, indexed from 1 through accessors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchorWeights {
    pub gamma: Vec<Weight>,
    pub delta: Vec<Weight>,
}

impl AnchorWeights {
    pub fn gamma(&self, k: usize) -> &Weight {
        &self.gamma[k - 1]
    }

    pub fn delta(&self, k: usize) -> &Weight {
        &self.delta[k - 1]
    }

    /// `γ^k_ℓ = u_{≥ℓ}^{-1} γ^k`.
    pub fn partial_gamma(&self, cd: &CartanData, dw: &DoubleWord, k: usize, l: usize) -> Weight {
        weyl::apply_unchecked(cd, &dw.u_ge(l).inverse(), self.gamma(k))
    }

    /// `δ^k_ℓ = v_{<ℓ+1}^{-1} δ^k`.
    pub fn partial_delta(&self, cd: &CartanData, dw: &DoubleWord, k: usize, l: usize) -> Weight {
        weyl::apply_unchecked(cd, &dw.v_lt(l + 1).inverse(), self.delta(k))
    }
}

/// Every double reduced word with at most `max_m` letters, shortest first.
pub fn all_double_words(cd: &CartanData, max_m: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    // (word, u, v) frontier
    let mut layer = vec![(Vec::new(), WeylWord::identity(), WeylWord::identity())];
    for _ in 0..max_m {
        let mut next = Vec::new();
        for (word, u, v) in &layer {
            for i in 1..=cd.rank {
                if weyl::extends(cd, v, i) {
                    let mut w: Vec<Letter> = word.clone();
                    w.push(Letter::plain(i));
                    next.push((w, u.clone(), v.concat(&WeylWord(vec![i]))));
                }
                if weyl::extends(cd, u, i) {
                    let mut w: Vec<Letter> = word.clone();
                    w.push(Letter::bar(i));
                    next.push((w, u.concat(&WeylWord(vec![i])), v.clone()));
                }
            }
        }
        out.extend(next.iter().map(|x| x.0.clone()));
        layer = next;
    }
    out
}

/// A random shuffle of random reduced words of `u` and `v`, `m ≤ max_m`.
pub fn random_double_word<R: Rng + ?Sized>(cd: &CartanData, max_m: usize, rng: &mut R) -> DoubleWord {
    let u = weyl::random_reduced(cd, max_m / 2, rng);
    let v = weyl::random_reduced(cd, max_m - u.len(), rng);
    let (mut pu, mut pv) = (u.letters().iter(), v.letters().iter());
    let (mut left_u, mut left_v) = (u.len(), v.len());
    let mut word = Vec::with_capacity(left_u + left_v);
    while left_u + left_v > 0 {
        if rng.gen_range(0..left_u + left_v) < left_u {
            word.push(Letter::bar(*pu.next().expect("u letters left")));
            left_u -= 1;
        } else {
            word.push(Letter::plain(*pv.next().expect("v letters left")));
            left_v -= 1;
        }
    }
    DoubleWord::new(cd, &word).expect("shuffle of reduced words")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(tag: &str) -> CartanData {
        CartanData::parse(tag).unwrap()
    }

    fn ww(s: &str) -> WeylWord {
        s.parse().unwrap()
    }

    #[test]
    fn running_example_in_a3() {
        let cd = a("A3");
        let dw = DoubleWord::parse(&cd, "1,2b,2,3b,3,2,1b").unwrap();
        assert_eq!(dw.u(), &ww("2,3,1"));
        assert_eq!(dw.v(), &ww("1,2,3,2"));
        assert_eq!(dw.m(), 7);
        assert_eq!(dw.total(), 10);
        let (u4, v4) = dw.suffix_prefix(4).unwrap();
        assert!(weyl::same_element(&cd, &u4, &ww("1,3")).unwrap());
        assert!(weyl::same_element(&cd, &v4, &ww("1,2")).unwrap());
        assert_eq!(dw.letter(8), Letter::bar(1));
        assert_eq!(dw.letter(10), Letter::bar(3));
        assert!(dw.suffix_prefix(11).is_err());
        assert!(dw.suffix_prefix(0).is_err());
    }

    #[test]
    fn degenerate_words() {
        let cd = a("A2");
        let dw = DoubleWord::parse(&cd, "").unwrap();
        assert!(dw.u().is_empty() && dw.v().is_empty());
        assert_eq!(dw.total(), 2);
        assert_eq!(dw.suffix_prefix(1).unwrap(), (WeylWord::identity(), WeylWord::identity()));
        let err = DoubleWord::parse(&a("A1"), "1,1").unwrap_err();
        assert!(matches!(err, Error::Validation(ref s) if s.contains("unbarred")));
        assert!(DoubleWord::parse(&a("A1"), "1b,1b").is_err());
        assert!(DoubleWord::parse(&a("A1"), "2").is_err());
        assert!(parse_letters("1,x").is_err());
    }

    #[test]
    fn tail_positions_use_e_and_v() {
        let cd = a("A3");
        let dw = DoubleWord::parse(&cd, "1,2b,2,3b,3,2,1b").unwrap();
        for k in dw.m() + 1..=dw.total() {
            let (uk, vk) = dw.suffix_prefix(k).unwrap();
            assert!(uk.is_empty());
            assert_eq!(&vk, dw.v());
        }
        let (u1, v1) = dw.suffix_prefix(1).unwrap();
        assert!(v1.is_empty());
        assert!(weyl::same_element(&cd, &u1, &dw.u().inverse()).unwrap());
    }

    #[test]
    fn anchor_weights_a1() {
        let cd = a("A1");
        let dw = DoubleWord::parse(&cd, "1,1b").unwrap();
        let aw = dw.anchor_weights(&cd);
        let w = cd.omega(1);
        assert_eq!(aw.gamma(1), &-&w);
        assert_eq!(aw.delta(1), &w);
        assert_eq!(aw.gamma(2), &-&w);
        assert_eq!(aw.delta(2), &-&w);
        assert_eq!(aw.gamma(3), &w);
        assert_eq!(aw.delta(3), &-&w);
    }

    #[test]
    fn partial_weights_boundary_values() {
        for (tag, word) in [("A3", "1,2b,2,3b,3,2,1b"), ("B2", "1b,2,1,2b,1b"), ("G2", "2,1b,1,2b,2")] {
            let cd = a(tag);
            let dw = DoubleWord::parse(&cd, word).unwrap();
            let aw = dw.anchor_weights(&cd);
            for k in 1..=dw.total() {
                let w = cd.omega(dw.letter(k).index);
                assert_eq!(aw.partial_gamma(&cd, &dw, k, k), w);
                assert_eq!(aw.partial_delta(&cd, &dw, k, k - 1), w);
                assert_eq!(
                    aw.partial_gamma(&cd, &dw, k, 1),
                    weyl::apply_unchecked(&cd, dw.u(), aw.gamma(k))
                );
                assert_eq!(
                    aw.partial_delta(&cd, &dw, k, dw.m()),
                    weyl::apply_unchecked(&cd, &dw.v().inverse(), aw.delta(k))
                );
            }
        }
    }

    #[test]
    fn fixed_sets() {
        let cd = a("A2");
        let w0 = weyl::longest_element(&cd);
        let dw = DoubleWord::double_from_reduced(&cd, &w0).unwrap();
        let (fixed, _) = dw.fixed_set_and_first_occurrence(&cd);
        assert!(fixed.is_empty());

        let dw = DoubleWord::parse(&cd, "").unwrap();
        let (fixed, first) = dw.fixed_set_and_first_occurrence(&cd);
        assert_eq!(fixed, vec![1, 2]);
        assert_eq!(first, vec![1, 2]);

        let cd1 = a("A1");
        let dw = DoubleWord::parse(&cd1, "1,1b").unwrap();
        assert_eq!(dw.fixed_set_and_first_occurrence(&cd1), (vec![], vec![1]));

        // k(j) = m + j exactly on I(u,v)
        let cd3 = a("A3");
        let dw = DoubleWord::parse(&cd3, "1,1b,2").unwrap();
        let (fixed, first) = dw.fixed_set_and_first_occurrence(&cd3);
        assert_eq!(fixed, vec![3]);
        for j in 1..=3 {
            assert_eq!(first[j - 1] == dw.m() + j, fixed.contains(&j));
        }
    }

    #[test]
    fn doubling() {
        let cd = a("A2");
        let dw = DoubleWord::double_from_reduced(&cd, &ww("1,2,1")).unwrap();
        assert_eq!(dw.to_string(), "1,1b,2,2b,1,1b");
        assert_eq!(dw.m(), 6);
        assert_eq!(dw.u(), dw.v());
        let empty = DoubleWord::double_from_reduced(&cd, &WeylWord::identity()).unwrap();
        assert_eq!(empty.m(), 0);
        let one = DoubleWord::double_from_reduced(&a("A1"), &ww("1")).unwrap();
        assert_eq!(one.to_string(), "1,1b");
        assert!(DoubleWord::double_from_reduced(&cd, &ww("1,1")).is_err());
    }

    #[test]
    fn doubled_words_pair_equally_on_odd_positions() {
        for tag in ["A3", "B3", "C3", "G2"] {
            let cd = a(tag);
            let w0 = weyl::longest_element(&cd);
            let dw = DoubleWord::double_from_reduced(&cd, &w0).unwrap();
            let aw = dw.anchor_weights(&cd);
            for k in 1..=w0.len() {
                for kp in (k + 1)..=w0.len() {
                    let (p, q) = (2 * k - 1, 2 * kp - 1);
                    assert_eq!(
                        cd.weight_form(aw.gamma(p), aw.gamma(q)).unwrap(),
                        cd.weight_form(aw.delta(p), aw.delta(q)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // A1: words over {1, 1̄} with each letter at most once
        assert_eq!(all_double_words(&a("A1"), 6).len(), 1 + 2 + 2);
        let a2 = a("A2");
        let all = all_double_words(&a2, 6);
        assert!(all.iter().all(|w| DoubleWord::new(&a2, w).is_ok()));
        // reduced words of S_3: 1 + 2 + 2 + 2 = 7; pairs shuffled by binomials
        let by_len = [1usize, 2, 2, 2];
        let mut want = 0;
        for lu in 0..4 {
            for lv in 0..4 {
                let binom = (1..=lu).fold(1, |acc, i| acc * (lv + i) / i);
                want += by_len[lu] * by_len[lv] * binom;
            }
        }
        assert_eq!(all.len(), want);
    }

    #[test]
    fn random_words_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for tag in ["A4", "B2", "C3", "D4", "G2"] {
            let c = a(tag);
            for _ in 0..10 {
                let dw = random_double_word(&c, 12, &mut rng);
                assert!(dw.m() <= 12);
                assert!(DoubleWord::new(&c, &dw.word()[..dw.m()]).is_ok());
            }
        }
    }
}
