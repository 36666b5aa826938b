//! Weyl group elements as words in simple reflections.
//!
//! Two words name the same element iff they act identically on the
//! fundamental weights; lengths come from the positivity criterion
//! `ℓ(w s_i) = ℓ(w) + 1 ⇔ w(α_i) > 0`, decided in simple-root coordinates.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};

/// A word `(i_1, …, i_m)` naming `s_{i_1} ⋯ s_{i_m}`; letters are 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// A word for the inverse element.
    pub fn inverse(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// Word for `self · other`.
    pub fn concat(&self, other: &WeylWord) -> Self {
        WeylWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn validate(&self, cd: &CartanData) -> Result<()> {
        for &i in &self.0 {
            cd.check_index(i)?;
        }
        Ok(())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    /// Parses `"1,2,1"`; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(WeylWord::identity());
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i),
                    _ => Err(Error::input(format!("bad Weyl letter {tok:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

/// `s_i(γ) = γ − ⟨α_i^∨, γ⟩ α_i`.
pub fn reflect(cd: &CartanData, i: usize, g: &Weight) -> Weight {
    let c = g.coord(i);
    if c == 0 {
        return g.clone();
    }
    Weight(
        g.0.iter()
            .enumerate()
            .map(|(j, &x)| x - c * cd.cartan[j][i - 1])
            .collect(),
    )
}

/// `w(γ)`; the rightmost letter acts first.
pub fn apply_word(cd: &CartanData, w: &WeylWord, g: &Weight) -> Result<Weight> {
    w.validate(cd)?;
    cd.check_weight(g)?;
    Ok(apply_unchecked(cd, w, g))
}

pub(crate) fn apply_unchecked(cd: &CartanData, w: &WeylWord, g: &Weight) -> Weight {
    w.0.iter().rev().fold(g.clone(), |acc, &i| reflect(cd, i, &acc))
}

// s_j on simple-root coordinates: β − ⟨α_j^∨, β⟩ α_j
fn reflect_root(cd: &CartanData, j: usize, beta: &mut [i64]) {
    let pairing: i64 = (0..cd.rank).map(|k| cd.cartan[j - 1][k] * beta[k]).sum();
    beta[j - 1] -= pairing;
}

/// `w(α_i)` in simple-root coordinates, where `w` is the given prefix.
fn image_of_simple_root(cd: &CartanData, prefix: &[usize], i: usize) -> Vec<i64> {
    let mut beta = vec![0; cd.rank];
    beta[i - 1] = 1;
    for &j in prefix.iter().rev() {
        reflect_root(cd, j, &mut beta);
    }
    beta
}

fn is_positive(beta: &[i64]) -> bool {
    // a root has all coordinates of one sign
    beta.iter().any(|&c| c > 0)
}

/// Returns `(ℓ(w), word is reduced)`.
pub fn length_and_reduced(cd: &CartanData, w: &WeylWord) -> Result<(usize, bool)> {
    w.validate(cd)?;
    let mut len: i64 = 0;
    for (pos, &i) in w.0.iter().enumerate() {
        if is_positive(&image_of_simple_root(cd, &w.0[..pos], i)) {
            len += 1;
        } else {
            len -= 1;
        }
    }
    let len = len as usize;
    Ok((len, len == w.len()))
}

pub fn length(cd: &CartanData, w: &WeylWord) -> Result<usize> {
    Ok(length_and_reduced(cd, w)?.0)
}

pub fn is_reduced(cd: &CartanData, w: &WeylWord) -> Result<bool> {
    Ok(length_and_reduced(cd, w)?.1)
}

/// Whether `w s_i` is longer than `w`.
pub fn extends(cd: &CartanData, w: &WeylWord, i: usize) -> bool {
    is_positive(&image_of_simple_root(cd, &w.0, i))
}

/// A reduced word of the longest element, built greedily with the lowest
/// admissible index at each step.
pub fn longest_element(cd: &CartanData) -> WeylWord {
    let mut w = WeylWord::identity();
    while let Some(i) = (1..=cd.rank).find(|&i| extends(cd, &w, i)) {
        w.0.push(i);
    }
    w
}

/// `(w(ω_1), …, w(ω_r))`: equal for two words iff they name the same element.
pub fn weyl_canonical(cd: &CartanData, w: &WeylWord) -> Result<Vec<Weight>> {
    w.validate(cd)?;
    Ok((1..=cd.rank)
        .map(|i| apply_unchecked(cd, w, &cd.omega(i)))
        .collect())
}

pub fn same_element(cd: &CartanData, a: &WeylWord, b: &WeylWord) -> Result<bool> {
    Ok(weyl_canonical(cd, a)? == weyl_canonical(cd, b)?)
}

/// The involution `i ↦ i*` with `w_0(ω_i) = −ω_{i*}`.
pub fn star_involution(cd: &CartanData) -> Vec<usize> {
    let w0 = longest_element(cd);
    (1..=cd.rank)
        .map(|i| {
            let img = apply_unchecked(cd, &w0, &cd.omega(i));
            (1..=cd.rank)
                .find(|&j| img == -&cd.omega(j))
                .expect("w_0 maps ω_i to some −ω_j")
        })
        .collect()
}

/// A random reduced word of length at most `max_len`, grown by appending
/// letters that increase the length.
pub fn random_reduced<R: Rng + ?Sized>(cd: &CartanData, max_len: usize, rng: &mut R) -> WeylWord {
    let target = rng.gen_range(0..=max_len);
    let mut w = WeylWord::identity();
    while w.len() < target {
        let ext: Vec<usize> = (1..=cd.rank).filter(|&i| extends(cd, &w, i)).collect();
        if ext.is_empty() {
            break;
        }
        w.0.push(ext[rng.gen_range(0..ext.len())]);
    }
    w
}

/// All reduced words of length exactly `len`.
pub fn reduced_words_of_length(cd: &CartanData, len: usize) -> Vec<WeylWord> {
    let mut layer = vec![WeylWord::identity()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 1..=cd.rank {
                if extends(cd, w, i) {
                    let mut x = w.clone();
                    x.0.push(i);
                    next.push(x);
                }
            }
        }
        layer = next;
    }
    layer
}
