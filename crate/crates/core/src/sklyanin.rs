//! The standard quadratic bracket on matrix entries of `SL_n`, differentiated
//! exactly with first-order jets. Serves as a numerical oracle for the chart
//! pairing and the bracket theorem.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::CartanData;
use crate::chart::{self, LaurentMonomial};
use crate::doubleword::DoubleWord;
use crate::error::{Error, Result};
use crate::jet::{seed_matrix, Entry, Jet};
use crate::matrix::{Matrix, RationalMatrix, Scalar};
use crate::rational::{int, pq_vec, Rational};
use crate::report::{all_pass, PairEntry};
use crate::sln;

fn sgn(a: usize, b: usize) -> i64 {
    (b as i64 - a as i64).signum()
}

/// `{x_{ij}, x_{kl}} = −d (sgn(k−i) + sgn(l−j)) x_{il} x_{kj}` (0-based entries).
pub fn entry_bracket<S: Scalar>(d: i64, (i, j): Entry, (k, l): Entry, x: &Matrix<S>) -> S {
    let c = -d * (sgn(i, k) + sgn(j, l));
    if c == 0 {
        return S::zero();
    }
    S::from_rational(&int(c)) * x.get(i, l).clone() * x.get(k, j).clone()
}

/// `{f, g}(x)` from the jets of `f` and `g` at `x`.
pub fn bracket_of_jets(d: i64, f: &Jet, g: &Jet, x: &RationalMatrix) -> Rational {
    let mut acc = Rational::zero();
    for (&p, fp) in &f.partials {
        for (&q, gq) in &g.partials {
            let e = entry_bracket(d, p, q, x);
            if !e.is_zero() {
                acc += fp * gq * e;
            }
        }
    }
    acc
}

/// `{f, g}(x) = Σ ∂f/∂x_{ij} ∂g/∂x_{kl} {x_{ij}, x_{kl}}`.
pub fn function_bracket<F, G>(d: i64, f: F, g: G, x: &RationalMatrix) -> Result<Rational>
where
    F: Fn(&Matrix<Jet>) -> Result<Jet>,
    G: Fn(&Matrix<Jet>) -> Result<Jet>,
{
    let seeded = seed_matrix(x);
    Ok(bracket_of_jets(d, &f(&seeded)?, &g(&seeded)?, x))
}

/// Poisson–Lie property at `(x, y)`: `{(xy)_a, (xy)_b}` computed through
/// both factors equals the bracket at `xy` for every pair of entries.
pub fn multiplicativity_holds(d: i64, x: &RationalMatrix, y: &RationalMatrix) -> bool {
    let n = x.size();
    let xy = x.mul(y);
    let via_x = seed_matrix(x).mul(&Matrix::from_rational(y));
    let via_y = Matrix::<Jet>::from_rational(x).mul(&seed_matrix(y));
    let entries: Vec<Entry> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    entries.iter().all(|&a| {
        entries.iter().all(|&b| {
            let lhs = bracket_of_jets(d, via_x.get(a.0, a.1), via_x.get(b.0, b.1), x)
                + bracket_of_jets(d, via_y.get(a.0, a.1), via_y.get(b.0, b.1), y);
            lhs == entry_bracket(d, a, b, &xy)
        })
    })
}

/// Jacobi sum `{x_a, {x_b, x_c}} + {x_b, {x_c, x_a}} + {x_c, {x_a, x_b}}` at `x`.
pub fn jacobi_sum(d: i64, a: Entry, b: Entry, c: Entry, x: &RationalMatrix) -> Rational {
    let s = seed_matrix(x);
    let coord = |p: Entry| Jet::variable(x.get(p.0, p.1).clone(), p);
    [(a, b, c), (b, c, a), (c, a, b)]
        .into_iter()
        .map(|(p, q, r)| bracket_of_jets(d, &coord(p), &entry_bracket(d, q, r, &s), x))
        .fold(Rational::zero(), |acc, v| acc + v)
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSample {
    #[serde(with = "pq_vec")]
    pub a_characters: Vec<Rational>,
    #[serde(with = "pq_vec")]
    pub t: Vec<Rational>,
    pub point: serde_json::Value,
    /// `{M_k, M_k'}(x)` against `((γ^k,γ^k') − (δ^k,δ^k')) M_k(x) M_k'(x)`.
    pub pairs: Vec<PairEntry>,
    /// Brackets of chart coordinates (`a^{ω_1..ω_r}`, then `t_1..t_m`, numbered
    /// `1..r+m`) recovered from the `M_k`, against the chart pairing.
    pub coordinate_pairs: Vec<PairEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub double_word: String,
    pub samples: Vec<OracleSample>,
    pub pass: bool,
}

/// Integer matrix `C` with `generator_g = ∏_k M_k^{C[g][k]}`.
fn coordinates_from_minors(cd: &CartanData, dw: &DoubleWord) -> Result<Vec<Vec<i64>>> {
    let minors = chart::all_minor_exponents(cd, dw);
    let rows: Vec<Vec<Rational>> =
        minors.iter().map(|x| x.exponent_vector().into_iter().map(int).collect()).collect();
    // row k of E holds M_k's exponents, so log gen = E^{-1} log M
    let e = RationalMatrix::from_rows(rows);
    let inv = e.inverse().map_err(|_| Error::Invariant("twisted minors do not form a chart".into()))?;
    inv.to_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|q| {
                    if q.is_integer() {
                        i64::try_from(q.to_integer()).map_err(|_| Error::Invariant("exponent overflow".into()))
                    } else {
                        Err(Error::Invariant("chart is not unimodular in the twisted minors".into()))
                    }
                })
                .collect()
        })
        .collect()
}

/// Checks the bracket theorem with the entry-bracket oracle at random chart
/// points, and the chart pairing on coordinates recovered from the minors.
pub fn verify_oracle_vs_theorem(n: usize, dw: &DoubleWord, samples: usize, seed: u64) -> Result<OracleReport> {
    let cd = CartanData::sl(n)?;
    if dw.rank() != cd.rank {
        return Err(Error::input(format!("double word of rank {} does not live in SL_{n}", dw.rank())));
    }
    let d = 1;
    let aw = dw.anchor_weights(&cd);
    let pairing = chart::pairing_matrix(&cd, dw);
    let coords = coordinates_from_minors(&cd, dw)?;
    let total = dw.total();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let (x, a, t) = sln::random_chart_point(n, dw, &mut rng)?;
        let jets = sln::twisted_minors(dw, &seed_matrix(&x))?;
        let mut pairs = Vec::new();
        for k in 1..=total {
            for kp in (k + 1)..=total {
                let lhs = bracket_of_jets(d, &jets[k - 1], &jets[kp - 1], &x);
                let c = chart::theorem_coefficient(&cd, &aw, k, kp);
                let rhs = c * &jets[k - 1].value * &jets[kp - 1].value;
                pairs.push(PairEntry::new(k, kp, lhs, rhs));
            }
        }
        let gens: Vec<Jet> = coords
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&jets)
                    .filter(|(&e, _)| e != 0)
                    .fold(Jet::constant(int(1)), |acc, (&e, m)| acc * m.powi(e))
            })
            .collect();
        let mut coordinate_pairs = Vec::new();
        for g in 0..gens.len() {
            for h in (g + 1)..gens.len() {
                let lhs = bracket_of_jets(d, &gens[g], &gens[h], &x);
                let rhs = pairing.entry(g, h) * &gens[g].value * &gens[h].value;
                coordinate_pairs.push(PairEntry::new(g + 1, h + 1, lhs, rhs));
            }
        }
        out.push(OracleSample {
            a_characters: a.characters(),
            t,
            point: sln::matrix_to_json(&x),
            pairs,
            coordinate_pairs,
        });
    }
    let pass = out.iter().all(|s| all_pass(&s.pairs) && all_pass(&s.coordinate_pairs));
    Ok(OracleReport { n, double_word: dw.to_string(), samples: out, pass })
}

/// The coordinate functions of the chart as monomials in `M_1..M_{m+r}`.
pub fn chart_coordinates_in_minors(cd: &CartanData, dw: &DoubleWord) -> Result<Vec<LaurentMonomial>> {
    let minors = chart::all_minor_exponents(cd, dw);
    let coords = coordinates_from_minors(cd, dw)?;
    Ok(coords
        .iter()
        .map(|row| {
            row.iter().zip(&minors).fold(LaurentMonomial::unit(cd.rank, dw.m()), |acc, (&e, m)| acc.mul(&m.pow(e)))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::random_param;
    use rand::Rng;

    fn m(rows: Vec<Vec<i64>>) -> RationalMatrix {
        RationalMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
        RationalMatrix::from_rows((0..n).map(|_| (0..n).map(|_| random_param(rng)).collect()).collect())
    }

    #[test]
    fn sl2_examples() {
        let x = m(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(entry_bracket(1, (0, 1), (1, 0), &x), int(0));
        assert_eq!(entry_bracket(1, (1, 1), (0, 0), &x), int(2));
        assert_eq!(entry_bracket(1, (1, 0), (1, 0), &x), int(0));
        let f = |y: &Matrix<Jet>| Ok(y.get(0, 0).clone());
        let g = |y: &Matrix<Jet>| Ok(y.get(1, 1).clone());
        assert_eq!(function_bracket(1, f, g, &x).unwrap(), int(-2));
        assert_eq!(function_bracket(1, |y| Ok(y.det()), |y| Ok(y.det()), &x).unwrap(), int(0));
    }

    #[test]
    fn skew_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = random_matrix(4, &mut rng);
        for a in 0..16 {
            for b in 0..16 {
                let (p, q) = ((a / 4, a % 4), (b / 4, b % 4));
                assert_eq!(entry_bracket(3, p, q, &x), -entry_bracket(3, q, p, &x));
            }
        }
    }

    #[test]
    fn determinant_is_casimir() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = random_matrix(3, &mut rng);
        for i in 0..3 {
            for j in 0..3 {
                let b = function_bracket(1, |y| Ok(y.det()), |y| Ok(y.get(i, j).clone()), &x).unwrap();
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn jacobi_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [3, 4] {
            let x = random_matrix(n, &mut rng);
            for _ in 0..20 {
                let mut e = || (rng.gen_range(0..n), rng.gen_range(0..n));
                let (a, b, c) = (e(), e(), e());
                assert!(jacobi_sum(2, a, b, c, &x).is_zero());
            }
        }
    }

    #[test]
    fn poisson_lie() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..3 {
            let (x, y) = (random_matrix(3, &mut rng), random_matrix(3, &mut rng));
            assert!(multiplicativity_holds(1, &x, &y));
        }
        let (x, y) = (random_matrix(2, &mut rng), random_matrix(2, &mut rng));
        assert!(multiplicativity_holds(2, &x, &y));
    }

    #[test]
    fn phi_embedding_compatibility() {
        // SL_2 brackets with parameter d pushed through φ_i
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let x = random_matrix(4, &mut rng);
        for i in 0..3 {
            let (p, q) = (i, i + 1);
            let e = |a: usize, b: usize| x.get(a, b).clone();
            let table = [
                ((p, q), (p, p), e(p, p) * e(p, q)),
                ((q, p), (p, p), e(p, p) * e(q, p)),
                ((q, q), (p, q), e(p, q) * e(q, q)),
                ((q, q), (q, p), e(q, p) * e(q, q)),
                ((p, q), (q, p), int(0)),
                ((q, q), (p, p), int(2) * e(p, q) * e(q, p)),
            ];
            for (a, b, want) in table {
                assert_eq!(entry_bracket(1, a, b, &x), want);
            }
        }
        // entries in different rows and columns: only the crossing term survives
        assert_eq!(entry_bracket(1, (0, 3), (2, 1), &x), int(0));
        assert_eq!(entry_bracket(1, (0, 0), (2, 3), &x), int(-2) * x.get(0, 3).clone() * x.get(2, 0).clone());
    }

    #[test]
    fn oracle_small_cases() {
        let a1 = CartanData::sl(2).unwrap();
        let dw = DoubleWord::parse(&a1, "1,1b").unwrap();
        let rep = verify_oracle_vs_theorem(2, &dw, 3, 0).unwrap();
        assert!(rep.pass, "{rep:?}");
        let s = &rep.samples[0];
        assert_eq!((s.pairs[0].k, s.pairs[0].k_prime), (1, 2));
        assert_eq!(s.coordinate_pairs.len(), 3);

        let e = DoubleWord::parse(&a1, "").unwrap();
        let rep = verify_oracle_vs_theorem(2, &e, 2, 0).unwrap();
        assert!(rep.samples.iter().all(|s| s.pairs.iter().all(|p| p.lhs.is_zero())));

        let a2 = CartanData::sl(3).unwrap();
        let dw = DoubleWord::double_from_reduced(&a2, &"1,2,1".parse().unwrap()).unwrap();
        let rep = verify_oracle_vs_theorem(3, &dw, 1, 9).unwrap();
        assert_eq!(rep.samples[0].pairs.len(), 28);
        assert!(rep.pass);
        assert!(verify_oracle_vs_theorem(4, &dw, 1, 0).is_err());
    }

    #[test]
    fn coordinates_recovered_from_minors() {
        let a2 = CartanData::sl(3).unwrap();
        let dw = DoubleWord::parse(&a2, "1,2b,2,1b").unwrap();
        let coords = chart_coordinates_in_minors(&a2, &dw).unwrap();
        for (g, c) in coords.iter().enumerate() {
            let mut want = vec![0; 2 + dw.m()];
            want[g] = 1;
            assert_eq!(c.exponent_vector(), want);
        }
    }
}
