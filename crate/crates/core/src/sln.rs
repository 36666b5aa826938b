//! The type-A realization: `SL_n` matrices over exact rationals.
//!
//! Matrix routines are generic over [`Scalar`], so the same twist and minor
//! code evaluates on rationals and on first-order jets.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::cartan::{CartanData, Weight};
use crate::doubleword::{DoubleWord, Letter};
use crate::error::{Error, Result};
use crate::intlin;
use crate::leaves;
use crate::matrix::{Matrix, RationalMatrix, Scalar};
use crate::rational::{exact_root, pow, random_param, to_pq, Rational};
use crate::weyl::{self, WeylWord};

fn check_letter(n: usize, i: usize) -> Result<()> {
    if (1..n).contains(&i) {
        Ok(())
    } else {
        Err(Error::input(format!("letter {i} out of range 1..={} for SL_{n}", n - 1)))
    }
}

fn check_dw(n: usize, dw: &DoubleWord) -> Result<()> {
    if dw.rank() + 1 == n {
        Ok(())
    } else {
        Err(Error::input(format!("double word of rank {} does not live in SL_{n}", dw.rank())))
    }
}

/// `x_i(t)` (unbarred: `t` at `(i, i+1)`) or `x_ī(t)` (barred: `t` at `(i+1, i)`).
pub fn generator<S: Scalar>(n: usize, letter: Letter, t: S) -> Result<Matrix<S>> {
    check_letter(n, letter.index)?;
    let mut x = Matrix::identity(n);
    let i = letter.index - 1;
    if letter.barred {
        x.set(i + 1, i, t);
    } else {
        x.set(i, i + 1, t);
    }
    Ok(x)
}

/// `s̄_i`: the block `[[0, −1], [1, 0]]` in rows and columns `i, i+1`.
pub fn simple_rep(n: usize, i: usize) -> Result<RationalMatrix> {
    check_letter(n, i)?;
    let mut x = RationalMatrix::identity(n);
    let i = i - 1;
    x.set(i, i, Rational::zero());
    x.set(i + 1, i + 1, Rational::zero());
    x.set(i, i + 1, -Rational::one());
    x.set(i + 1, i, Rational::one());
    Ok(x)
}

/// `w̄ = s̄_{i_1} ⋯ s̄_{i_l}` along a reduced word.
pub fn weyl_rep(n: usize, w: &WeylWord) -> Result<RationalMatrix> {
    let cd = CartanData::sl(n)?;
    if !weyl::is_reduced(&cd, w)? {
        return Err(Error::Validation(format!("word {w} is not reduced")));
    }
    w.letters().iter().try_fold(RationalMatrix::identity(n), |acc, &i| Ok(acc.mul(&simple_rep(n, i)?)))
}

fn lift<S: Scalar>(x: &RationalMatrix) -> Matrix<S> {
    Matrix::from_rational(x)
}

/// `x ↦ d₀ (x^{-1})ᵀ d₀^{-1}` with `d₀ = diag(1, −1, 1, …)`.
pub fn theta<S: Scalar>(x: &Matrix<S>) -> Result<Matrix<S>> {
    let inv = x.inverse()?;
    let n = x.size();
    let mut out = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let e = inv.get(j, i).clone();
            out.set(i, j, if (i + j) % 2 == 0 { e } else { -e });
        }
    }
    Ok(out)
}

/// `Δ_{uω_i, vω_i}(x) = Δ_i(ū^{-1} x v̄)`.
pub fn gen_minor<S: Scalar>(u: &WeylWord, v: &WeylWord, i: usize, x: &Matrix<S>) -> Result<S> {
    let n = x.size();
    check_letter(n + 1, i)?;
    let ub = weyl_rep(n, u)?;
    let vb = weyl_rep(n, v)?;
    let y = lift::<S>(&ub.transpose()).mul(x).mul(&lift(&vb));
    Ok(y.leading_minor(i))
}

/// The permutation underlying `w`, as the image `w(j)` of each `j` (1-based).
pub fn permutation(n: usize, w: &WeylWord) -> Vec<usize> {
    (1..=n)
        .map(|j| {
            w.letters().iter().rev().fold(j, |p, &s| match p {
                p if p == s => s + 1,
                p if p == s + 1 => s,
                p => p,
            })
        })
        .collect()
}

/// `w([1, i])`, sorted, 1-based.
pub fn index_set(n: usize, w: &WeylWord, i: usize) -> Vec<usize> {
    let perm = permutation(n, w);
    let mut s: Vec<usize> = perm[..i].to_vec();
    s.sort_unstable();
    s
}

/// `Δ_{I,J}(x)` with 1-based index sets.
pub fn minor_by_sets<S: Scalar>(x: &Matrix<S>, rows: &[usize], cols: &[usize]) -> S {
    let r: Vec<usize> = rows.iter().map(|i| i - 1).collect();
    let c: Vec<usize> = cols.iter().map(|i| i - 1).collect();
    x.minor(&r, &c)
}

fn twist_err(e: Error, what: &str) -> Error {
    match e {
        Error::NotInG0 { index } => {
            Error::TwistUndefined(format!("{what} has vanishing leading principal minor {index}"))
        }
        other => other,
    }
}

/// `x' = θ([ū^{-1}x]_-^{-1} ū^{-1} x \overline{v^{-1}} [x \overline{v^{-1}}]_+^{-1})`.
pub fn twist<S: Scalar>(u: &WeylWord, v: &WeylWord, x: &Matrix<S>) -> Result<Matrix<S>> {
    let n = x.size();
    let ub_inv = lift::<S>(&weyl_rep(n, u)?.transpose());
    let vinv_b = lift::<S>(&weyl_rep(n, &v.inverse())?);
    let left = ub_inv.mul(x);
    let right = x.mul(&vinv_b);
    let l1 = left.gauss().map_err(|e| twist_err(e, "ū^{-1}x"))?.lower;
    let u2 = right.gauss().map_err(|e| twist_err(e, "x·(v^{-1})‾"))?.upper;
    let z = l1.unipotent_inverse().mul(&left).mul(&vinv_b).mul(&u2.unipotent_inverse());
    theta(&z)
}

/// Diagonal element of `SL_n` (any nonzero entries; `det = 1` is checked on
/// construction from the diagonal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    pub diag: Vec<Rational>,
}

impl TorusElement {
    pub fn identity(n: usize) -> Self {
        TorusElement { diag: vec![Rational::one(); n] }
    }

    pub fn new(diag: Vec<Rational>) -> Result<Self> {
        if diag.iter().any(Zero::is_zero) {
            return Err(Error::input("torus entries must be nonzero"));
        }
        if diag.iter().fold(Rational::one(), |acc, x| acc * x) != Rational::one() {
            return Err(Error::input("torus element must have determinant 1"));
        }
        Ok(TorusElement { diag })
    }

    /// From `a^{ω_1}, …, a^{ω_{n−1}}`.
    pub fn from_characters(chars: &[Rational]) -> Result<Self> {
        if chars.iter().any(Zero::is_zero) {
            return Err(Error::input("character values must be nonzero"));
        }
        let n = chars.len() + 1;
        let full = |i: usize| if i == 0 || i == n { Rational::one() } else { chars[i - 1].clone() };
        Ok(TorusElement { diag: (1..=n).map(|i| full(i) / full(i - 1)).collect() })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// `a^{ω_i} = a_1 ⋯ a_i` for `i = 1..n−1`.
    pub fn characters(&self) -> Vec<Rational> {
        let mut acc = Rational::one();
        self.diag[..self.n() - 1]
            .iter()
            .map(|x| {
                acc *= x;
                acc.clone()
            })
            .collect()
    }

    /// `a^γ` for a weight in ω-coordinates.
    pub fn character(&self, g: &Weight) -> Rational {
        self.characters()
            .iter()
            .zip(&g.0)
            .filter(|(_, &e)| e != 0)
            .fold(Rational::one(), |acc, (x, &e)| acc * pow(x, e))
    }

    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::diagonal(&self.diag)
    }

    pub fn mul(&self, o: &TorusElement) -> TorusElement {
        TorusElement { diag: self.diag.iter().zip(&o.diag).map(|(a, b)| a * b).collect() }
    }

    /// `a^w`: conjugation `w̄^{-1} a w̄`, i.e. `(a^w)^γ = a^{wγ}`.
    pub fn act(&self, w: &WeylWord) -> Result<TorusElement> {
        let wb = weyl_rep(self.n(), w)?;
        Ok(TorusElement { diag: wb.transpose().mul(&self.matrix()).mul(&wb).diag() })
    }
}

/// `x_i(a; t) = a · x_{i_1}(t_1) ⋯ x_{i_m}(t_m)`.
pub fn chart_point(n: usize, dw: &DoubleWord, a: &TorusElement, t: &[Rational]) -> Result<RationalMatrix> {
    check_dw(n, dw)?;
    if a.n() != n {
        return Err(Error::input(format!("torus element of size {} in SL_{n}", a.n())));
    }
    if t.len() != dw.m() {
        return Err(Error::input(format!("expected {} parameters, got {}", dw.m(), t.len())));
    }
    if let Some(k) = t.iter().position(Zero::is_zero) {
        return Err(Error::input(format!("parameter t_{} is zero", k + 1)));
    }
    (1..=dw.m()).try_fold(a.matrix(), |acc, k| Ok(acc.mul(&generator(n, dw.letter(k), t[k - 1].clone())?)))
}

/// All twisted minors `M_1, …, M_{m+r}` at `x`, sharing one twist.
pub fn twisted_minors<S: Scalar>(dw: &DoubleWord, x: &Matrix<S>) -> Result<Vec<S>> {
    let n = x.size();
    check_dw(n, dw)?;
    let xp = twist(dw.u(), dw.v(), x)?;
    (1..=dw.total())
        .map(|k| {
            let (uk, vk) = dw.suffix_prefix(k)?;
            gen_minor(&uk, &vk, dw.letter(k).index, &xp)
        })
        .collect()
}

/// `M_k(x) = Δ_{γ^k, δ^k}(x')`.
pub fn twisted_minor_eval<S: Scalar>(dw: &DoubleWord, k: usize, x: &Matrix<S>) -> Result<S> {
    dw.check_position(k)?;
    let n = x.size();
    check_dw(n, dw)?;
    let xp = twist(dw.u(), dw.v(), x)?;
    let (uk, vk) = dw.suffix_prefix(k)?;
    gen_minor(&uk, &vk, dw.letter(k).index, &xp)
}

/// `h(x) = [ū^{-1}x]_0` and `h'(x) = ([x \overline{v^{-1}}]_0)^v`.
pub fn h_pair(u: &WeylWord, v: &WeylWord, x: &RationalMatrix) -> Result<(TorusElement, TorusElement)> {
    let n = x.size();
    let left = weyl_rep(n, u)?.transpose().mul(x);
    let right = x.mul(&weyl_rep(n, &v.inverse())?);
    let h = TorusElement { diag: left.gauss()?.diag };
    let hp = TorusElement { diag: right.gauss()?.diag }.act(v)?;
    Ok((h, hp))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub in_tilde: bool,
    pub in_s: bool,
}

pub fn leaf_membership(u: &WeylWord, v: &WeylWord, x: &RationalMatrix) -> Result<Membership> {
    let n = x.size();
    let cd = CartanData::sl(n)?;
    let (h, hp) = h_pair(u, v, x)?;
    let lat = leaves::huv_lattice(&cd, u, v)?;
    let in_tilde = leaves::membership_huv(&lat, &h.mul(&hp).characters())?;
    let hc = h.characters();
    let fixed = crate::doubleword::fixed_set(&cd, u, v);
    let in_s = in_tilde && fixed.iter().all(|&j| hc[j - 1].is_one());
    Ok(Membership { in_tilde, in_s })
}

/// A rational point of `S^{u,v}` together with its chart coordinates.
#[derive(Debug, Clone)]
pub struct LeafSample {
    pub x: RationalMatrix,
    pub a: TorusElement,
    pub t: Vec<Rational>,
}

const SAMPLE_ATTEMPTS: usize = 8;

/// Samples `x = a · x_{i_1}(t_1) ⋯ x_{i_m}(t_m) ∈ S^{u,v}`: the `t_k` are random
/// `N`-th powers, `N` the lcm of the invariant factors of the torus equations,
/// so the multiplicative system for `a` always has exact rational roots.
pub fn leaf_sample<R: Rng + ?Sized>(n: usize, dw: &DoubleWord, rng: &mut R) -> Result<LeafSample> {
    check_dw(n, dw)?;
    let cd = CartanData::sl(n)?;
    let r = n - 1;
    let (u, v) = (dw.u(), dw.v());
    let lat = leaves::huv_lattice(&cd, u, v)?;
    let fixed = crate::doubleword::fixed_set(&cd, u, v);

    // rows: a^{row} = rhs
    let mut rows: Vec<Weight> = lat
        .annihilator
        .iter()
        .map(|mu| {
            (1..=r).fold(Weight::zero(r), |acc, j| {
                let w = cd.omega(j);
                let uv = &weyl::apply_unchecked(&cd, u, &w) + &weyl::apply_unchecked(&cd, v, &w);
                &acc + &uv.scale(mu.coord(j))
            })
        })
        .collect();
    rows.extend(fixed.iter().map(|&j| cd.omega(j)));
    let e: Vec<Vec<i64>> = rows.iter().map(|w| w.0.clone()).collect();
    let sm = intlin::smith(&e);
    let invariants = sm.invariants();
    let big_n = invariants.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d));

    let mut last = String::new();
    for _ in 0..SAMPLE_ATTEMPTS {
        let t: Vec<Rational> = (0..dw.m()).map(|_| pow(&random_param(rng), big_n)).collect();
        let x0 = chart_point(n, dw, &TorusElement::identity(n), &t)?;
        let (h0, hp0) = match h_pair(u, v, &x0) {
            Ok(p) => p,
            Err(err) => {
                last = err.to_string();
                continue;
            }
        };
        let b = h0.mul(&hp0);
        let mut rhs: Vec<Rational> =
            lat.annihilator.iter().map(|mu| b.character(mu).recip()).collect();
        rhs.extend(fixed.iter().map(|&j| h0.character(&cd.omega(j)).recip()));

        // S β = U·rhs, then a^{ω} = V β (all multiplicative)
        let urhs: Vec<Rational> = sm
            .u
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(Rational::one(), |acc, (&c, q)| acc * pow(q, c)))
            .collect();
        if let Some(i) = (sm.rank..urhs.len()).find(|&i| !urhs[i].is_one()) {
            last = format!("torus equations inconsistent in row {}", i + 1);
            continue;
        }
        let mut beta = Vec::with_capacity(r);
        let mut failed = None;
        for j in 0..r {
            if j < sm.rank {
                let d = sm.s[j][j];
                match exact_root(&urhs[j], d as u32) {
                    Some(q) => beta.push(q),
                    None => {
                        failed = Some(format!("{} is not a {d}-th power", to_pq(&urhs[j])));
                        break;
                    }
                }
            } else {
                beta.push(random_param(rng));
            }
        }
        if let Some(msg) = failed {
            last = msg;
            continue;
        }
        let chars: Vec<Rational> = (0..r)
            .map(|i| (0..r).fold(Rational::one(), |acc, j| acc * pow(&beta[j], sm.v[i][j])))
            .collect();
        let a = TorusElement::from_characters(&chars)?;
        let x = chart_point(n, dw, &a, &t)?;
        match leaf_membership(u, v, &x) {
            Ok(mem) if mem.in_s => return Ok(LeafSample { x, a, t }),
            Ok(_) => last = "sample failed the leaf equations".into(),
            Err(err) => last = err.to_string(),
        }
    }
    Err(Error::Sampling(format!("no point after {SAMPLE_ATTEMPTS} attempts: {last}")))
}

/// Random generic chart point `(a; t)` with `x` in the domain of the twist.
pub fn random_chart_point<R: Rng + ?Sized>(
    n: usize,
    dw: &DoubleWord,
    rng: &mut R,
) -> Result<(RationalMatrix, TorusElement, Vec<Rational>)> {
    for _ in 0..SAMPLE_ATTEMPTS {
        let chars: Vec<Rational> = (1..n).map(|_| random_param(rng)).collect();
        let a = TorusElement::from_characters(&chars)?;
        let t: Vec<Rational> = (0..dw.m()).map(|_| random_param(rng)).collect();
        let x = chart_point(n, dw, &a, &t)?;
        if twist(dw.u(), dw.v(), &x).is_ok() {
            return Ok((x, a, t));
        }
    }
    Err(Error::Sampling(format!("no generic chart point after {SAMPLE_ATTEMPTS} attempts")))
}

/// JSON form: an array of rows of `"p/q"` strings.
pub fn matrix_to_json(x: &RationalMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        x.to_rows()
            .iter()
            .map(|row| serde_json::Value::Array(row.iter().map(|q| to_pq(q).into()).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(text: &str) -> Result<RationalMatrix> {
    let rows: Vec<Vec<serde_json::Value>> =
        serde_json::from_str(text).map_err(|e| Error::input(format!("matrix file: {e}")))?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::input("matrix file must hold a nonempty square array"));
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => crate::rational::parse_pq(s),
                    serde_json::Value::Number(num) => crate::rational::parse_pq(&num.to_string()),
                    other => Err(Error::input(format!("bad matrix entry {other}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::from_rows(parsed))
}
