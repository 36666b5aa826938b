//! Cartan data for the irreducible crystallographic types and the invariant
//! form on the weight lattice.
//!
//! Weights are stored in the basis of fundamental weights `ω_1..ω_r`, so the
//! coroot pairing `⟨α_i^∨, γ⟩` is the `i`-th coordinate and the simple root
//! `α_i` is the `i`-th column of the Cartan matrix. Numbering follows Bourbaki.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type tag such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanLabel {
    pub family: Family,
    pub rank: usize,
}

impl CartanLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanLabel { family, rank })
        } else {
            Err(Error::input(format!("no Cartan type {family:?}{rank}")))
        }
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::input("empty Cartan type"))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::input(format!("unknown Cartan family in {s:?}"))),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::input(format!("bad rank in Cartan type {s:?}")));
        }
        let rank = rest
            .parse()
            .map_err(|_| Error::input(format!("bad rank in Cartan type {s:?}")))?;
        CartanLabel::new(family, rank)
    }
}

impl Serialize for CartanLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, c: i64) -> Self {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub label: CartanLabel,
    pub rank: usize,
    /// `cartan[i][j] = a_{ij} = ⟨α_i^∨, α_j⟩`, 0-based storage.
    pub cartan: Vec<Vec<i64>>,
    /// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`.
    pub symmetrizer: Vec<i64>,
    /// Gram matrix `B_ij = (ω_i, ω_j) = (D A^{-1})_ij`.
    pub form: Vec<Vec<Rational>>,
    /// `A^{-1}`: converts ω-coordinates to simple-root coordinates.
    pub inverse_cartan: Vec<Vec<Rational>>,
}

fn dynkin_edges(label: CartanLabel) -> Vec<(usize, usize, i64, i64)> {
    // (i, j, a_ij, a_ji), 1-based
    let r = label.rank;
    let mut e = Vec::new();
    match label.family {
        Family::A => (1..r).for_each(|i| e.push((i, i + 1, -1, -1))),
        Family::B => {
            (1..r - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((r - 1, r, -1, -2));
        }
        Family::C => {
            (1..r - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((r - 1, r, -2, -1));
        }
        Family::D => {
            (1..r - 1).for_each(|i| e.push((i, i + 1, -1, -1)));
            e.push((r - 2, r, -1, -1));
        }
        Family::E => {
            e.push((1, 3, -1, -1));
            e.push((2, 4, -1, -1));
            (3..r).for_each(|i| e.push((i, i + 1, -1, -1)));
        }
        Family::F => {
            e.push((1, 2, -1, -1));
            e.push((2, 3, -1, -2));
            e.push((3, 4, -1, -1));
        }
        Family::G => e.push((1, 2, -3, -1)),
    }
    e
}

fn minimal_symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; r];
    d[0] = Some(int(1));
    // connected diagram: propagate d_j = d_i a_ij / a_ji
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r {
            for j in 0..r {
                if i != j && a[i][j] != 0 && d[i].is_some() && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * int(a[i][j]) / int(a[j][i]));
                    changed = true;
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm_den = d
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let ints: Vec<num_bigint::BigInt> = d
        .iter()
        .map(|x| (x * Rational::from_integer(lcm_den.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::from(0), |acc, x| num_integer::gcd(acc, x.clone()));
    ints.iter()
        .map(|x| i64::try_from(x / &g).expect("small symmetrizer"))
        .collect()
}

/// Builds the Cartan data of an irreducible type.
pub fn build_cartan(label: CartanLabel) -> CartanData {
    let r = label.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j, aij, aji) in dynkin_edges(label) {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    }
    let d = minimal_symmetrizer(&a);
    let am = Matrix::from_rows(
        a.iter()
            .map(|row| row.iter().map(|&x| int(x)).collect())
            .collect(),
    );
    let inv = am.inverse().expect("Cartan matrix is invertible");
    let inverse_cartan = inv.to_rows();
    let form = (0..r)
        .map(|i| (0..r).map(|j| int(d[i]) * &inverse_cartan[i][j]).collect())
        .collect();
    CartanData {
        label,
        rank: r,
        cartan: a,
        symmetrizer: d,
        form,
        inverse_cartan,
    }
}

impl CartanData {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(build_cartan(CartanLabel::new(family, rank)?))
    }

    pub fn parse(tag: &str) -> Result<Self> {
        Ok(build_cartan(tag.parse()?))
    }

    /// Type `A_{n-1}`, the Cartan data of `SL_n`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::input(format!("SL_{n} has no roots")));
        }
        CartanData::new(Family::A, n - 1)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "index {i} out of range 1..={} for {}",
                self.rank, self.label
            )))
        }
    }

    pub fn check_weight(&self, g: &Weight) -> Result<()> {
        if g.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::input(format!(
                "weight {g} has length {}, expected {}",
                g.rank(),
                self.rank
            )))
        }
    }

    pub fn omega(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    /// The simple root `α_i` in ω-coordinates (the `i`-th column of `A`).
    pub fn alpha(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|j| self.cartan[j][i - 1]).collect())
    }

    /// `(γ, γ') = γᵀ B γ'`.
    pub fn weight_form(&self, g: &Weight, h: &Weight) -> Result<Rational> {
        self.check_weight(g)?;
        self.check_weight(h)?;
        Ok(self.form_unchecked(g, h))
    }

    pub(crate) fn form_unchecked(&self, g: &Weight, h: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (i, &gi) in g.0.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.0.iter().enumerate() {
                if hj != 0 {
                    acc += &self.form[i][j] * int(gi * hj);
                }
            }
        }
        acc
    }

    /// `⟨α_i^∨, γ⟩`, the `i`-th coordinate.
    pub fn pair_coroot(&self, i: usize, g: &Weight) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(g)?;
        Ok(g.coord(i))
    }

    /// Simple-root coordinates `A^{-1} γ` (rational in general).
    pub fn root_coords(&self, g: &Weight) -> Vec<Rational> {
        (0..self.rank)
            .map(|i| {
                g.0.iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (j, &c)| acc + &self.inverse_cartan[i][j] * int(c))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn rows(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn a1_by_hand() {
        let cd = CartanData::parse("A1").unwrap();
        assert_eq!(cd.cartan, rows(&[&[2]]));
        assert_eq!(cd.symmetrizer, vec![1]);
        assert_eq!(cd.form, vec![vec![frac(1, 2)]]);
    }

    #[test]
    fn a2_by_hand() {
        let cd = CartanData::parse("a2").unwrap();
        assert_eq!(cd.cartan, rows(&[&[2, -1], &[-1, 2]]));
        assert_eq!(cd.symmetrizer, vec![1, 1]);
        assert_eq!(
            cd.form,
            vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]
        );
        assert_eq!(cd.weight_form(&cd.omega(1), &cd.omega(2)).unwrap(), frac(1, 3));
        assert_eq!(cd.pair_coroot(1, &cd.alpha(2)).unwrap(), -1);
        assert_eq!(cd.pair_coroot(1, &Weight(vec![-1, 1])).unwrap(), -1);
    }

    #[test]
    fn symmetrizers_of_non_simply_laced_types() {
        assert_eq!(CartanData::parse("G2").unwrap().symmetrizer, vec![1, 3]);
        assert_eq!(CartanData::parse("B3").unwrap().symmetrizer, vec![2, 2, 1]);
        assert_eq!(CartanData::parse("C3").unwrap().symmetrizer, vec![1, 1, 2]);
        assert_eq!(CartanData::parse("F4").unwrap().symmetrizer, vec![2, 2, 1, 1]);
    }

    #[test]
    fn rejects_bad_tags() {
        for tag in ["", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "A", "A-1", "Ax"] {
            assert!(tag.parse::<CartanLabel>().is_err(), "{tag}");
        }
        assert!(CartanData::parse("A1").unwrap().pair_coroot(2, &Weight(vec![0])).is_err());
        let cd = CartanData::parse("A2").unwrap();
        assert!(cd.weight_form(&Weight(vec![1]), &cd.omega(1)).is_err());
    }

    #[test]
    fn axioms_hold_for_every_type() {
        let tags = ["A1", "A4", "B2", "B4", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2"];
        for tag in tags {
            let cd = CartanData::parse(tag).unwrap();
            let r = cd.rank;
            for i in 0..r {
                assert_eq!(cd.cartan[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!(cd.cartan[i][j] <= 0);
                        assert_eq!(cd.cartan[i][j] == 0, cd.cartan[j][i] == 0);
                    }
                    assert_eq!(cd.symmetrizer[i] * cd.cartan[i][j], cd.symmetrizer[j] * cd.cartan[j][i]);
                    assert_eq!(cd.form[i][j], cd.form[j][i]);
                }
            }
            for i in 1..=r {
                for j in 1..=r {
                    // (α_i, ω_j) = d_i δ_ij and (α_i, α_j) = d_i a_ij
                    let expect = if i == j { int(cd.symmetrizer[i - 1]) } else { int(0) };
                    assert_eq!(cd.weight_form(&cd.alpha(i), &cd.omega(j)).unwrap(), expect);
                    assert_eq!(
                        cd.weight_form(&cd.alpha(i), &cd.alpha(j)).unwrap(),
                        int(cd.symmetrizer[i - 1] * cd.cartan[i - 1][j - 1])
                    );
                }
            }
            // positive definite: leading principal minors of B are positive
            let b = Matrix::from_rows(cd.form.clone());
            for k in 1..=r {
                assert!(b.leading_minor(k) > int(0), "{tag} minor {k}");
            }
        }
    }
}
