//! The subtorus `H^{u,v}`, leaf dimensions, component counts and the
//! monomial system cutting a leaf `S^{u,v}` out of the factorization chart.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cartan::{CartanData, Weight};
use crate::chart::{self, LaurentMonomial};
use crate::doubleword::{self, DoubleWord};
use crate::error::{Error, Result};
use crate::intlin;
use crate::rational::{pow, Rational};
use crate::weyl::{self, WeylWord};

/// The image of `a ↦ (a^u)^{-1} a^v`, described by its character lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubtorusLattice {
    /// Row-major `r × r`; column `j` is `vω_j − uω_j` in ω-coordinates.
    pub image_gens: Vec<Vec<i64>>,
    /// Saturated basis of `{μ : image_gens · μ = 0}`.
    pub annihilator: Vec<Weight>,
    pub dim: usize,
}

impl SubtorusLattice {
    pub fn rank(&self) -> usize {
        self.image_gens.len()
    }

    /// `(v − u)γ` for a weight `γ`, i.e. the character of `b` pulled back to `a`.
    pub fn image_of(&self, g: &Weight) -> Weight {
        Weight(intlin::mat_vec(&self.image_gens, &g.0))
    }
}

pub fn huv_lattice(cd: &CartanData, u: &WeylWord, v: &WeylWord) -> Result<SubtorusLattice> {
    u.validate(cd)?;
    v.validate(cd)?;
    let r = cd.rank;
    let cols: Vec<Weight> = (1..=r)
        .map(|j| {
            let w = cd.omega(j);
            &weyl::apply_unchecked(cd, v, &w) - &weyl::apply_unchecked(cd, u, &w)
        })
        .collect();
    let image_gens: Vec<Vec<i64>> = (0..r).map(|i| cols.iter().map(|c| c.0[i]).collect()).collect();
    let annihilator = intlin::kernel(&image_gens, r).into_iter().map(Weight).collect();
    let dim = intlin::rank(&image_gens);
    Ok(SubtorusLattice { image_gens, annihilator, dim })
}

fn character(values: &[Rational], mu: &Weight) -> Rational {
    values
        .iter()
        .zip(&mu.0)
        .filter(|(_, &e)| e != 0)
        .fold(Rational::one(), |acc, (x, &e)| acc * pow(x, e))
}

fn check_characters(values: &[Rational], rank: usize) -> Result<()> {
    if values.len() != rank {
        return Err(Error::input(format!("expected {rank} character values, got {}", values.len())));
    }
    if let Some(i) = values.iter().position(Zero::is_zero) {
        return Err(Error::input(format!("character value b^ω_{} is zero", i + 1)));
    }
    Ok(())
}

/// Whether the torus element with characters `b^{ω_1..ω_r}` lies in `H^{u,v}`.
pub fn membership_huv(lat: &SubtorusLattice, characters: &[Rational]) -> Result<bool> {
    check_characters(characters, lat.rank())?;
    Ok(lat.annihilator.iter().all(|mu| character(characters, mu).is_one()))
}

pub fn leaf_dimension(cd: &CartanData, u: &WeylWord, v: &WeylWord) -> Result<usize> {
    let lu = weyl::length(cd, u)?;
    let lv = weyl::length(cd, v)?;
    Ok(lu + lv + huv_lattice(cd, u, v)?.dim)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentData {
    pub count: u64,
    /// `I(u,v)`, 1-based.
    pub fixed: Vec<usize>,
    /// Values `σ^{ω_1..ω_r}` of coset representatives of `Σ/Σ^{u,v}`;
    /// entries outside `I(u,v)` are `1`.
    pub sigma_reps: Vec<Vec<i64>>,
}

pub fn component_data(cd: &CartanData, u: &WeylWord, v: &WeylWord) -> Result<ComponentData> {
    u.validate(cd)?;
    v.validate(cd)?;
    let fixed = doubleword::fixed_set(cd, u, v);
    let count = 1u64 << fixed.len();
    let sigma_reps = (0..count)
        .map(|mask| {
            let mut rep = vec![1; cd.rank];
            for (bit, &i) in fixed.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    rep[i - 1] = -1;
                }
            }
            rep
        })
        .collect();
    Ok(ComponentData { count, fixed, sigma_reps })
}

/// One defining equation of `S^{u,v}` in terms of twisted minors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LeafConstraint {
    /// `M_index = 1`.
    Unit { j: usize, index: usize },
    /// `M_index = a'^{param} · ∏ M_k^{e}` over `factors = [(k, e)]`, with
    /// `a'` ranging over `H^{u,v}`.
    Monomial { j: usize, index: usize, param: Weight, factors: Vec<(usize, i64)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafConstraintSystem {
    pub m: usize,
    pub fixed: Vec<usize>,
    /// `k(i)`: the first position whose letter is `i` or `ī`.
    pub first_occurrence: Vec<usize>,
    pub constraints: Vec<LeafConstraint>,
}

impl LeafConstraintSystem {
    /// Every `M_k` index mentioned by a constraint.
    pub fn referenced(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .constraints
            .iter()
            .flat_map(|c| match c {
                LeafConstraint::Unit { index, .. } => vec![*index],
                LeafConstraint::Monomial { index, factors, .. } => {
                    std::iter::once(*index).chain(factors.iter().map(|f| f.0)).collect()
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn leaf_constraints(cd: &CartanData, dw: &DoubleWord) -> LeafConstraintSystem {
    let m = dw.m();
    let (fixed, first) = dw.fixed_set_and_first_occurrence(cd);
    let constraints = (1..=cd.rank)
        .map(|j| {
            let index = m + j;
            if fixed.contains(&j) {
                return LeafConstraint::Unit { j, index };
            }
            let vw = weyl::apply_unchecked(cd, dw.v(), &cd.omega(j));
            let factors = (1..=cd.rank)
                .filter(|i| !fixed.contains(i) && vw.coord(*i) != 0)
                .map(|i| (first[i - 1], -vw.coord(i)))
                .collect();
            LeafConstraint::Monomial { j, index, param: -&cd.omega(j), factors }
        })
        .collect();
    LeafConstraintSystem { m, fixed, first_occurrence: first, constraints }
}

/// Result of substituting the chart monomials into the leaf equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartConsistency {
    /// `uγ^{k(i)} = ω_i` for every `i`.
    pub anchors_ok: bool,
    /// `M_{m+j}^{-1} ∏_i M_{k(i)}^{−⟨α_i^∨, vω_j⟩}` has torus part `(u+v)ω_j`.
    pub torus_parts_ok: bool,
    /// `r + m` minus the rank of the leaf equations in chart exponents.
    pub degrees_of_freedom: usize,
    pub leaf_dimension: usize,
}

impl ChartConsistency {
    pub fn pass(&self) -> bool {
        self.anchors_ok && self.torus_parts_ok && self.degrees_of_freedom == self.leaf_dimension
    }
}

/// `h(x)^{ω_j} h'(x)^{ω_j}` as chart monomials, `j = 1..r`.
pub fn hh_monomials(cd: &CartanData, dw: &DoubleWord) -> Vec<LaurentMonomial> {
    let minors = chart::all_minor_exponents(cd, dw);
    let (_, first) = dw.fixed_set_and_first_occurrence(cd);
    let m = dw.m();
    (1..=cd.rank)
        .map(|j| {
            let vw = weyl::apply_unchecked(cd, dw.v(), &cd.omega(j));
            (1..=cd.rank).fold(minors[m + j - 1].inv(), |acc, i| {
                acc.mul(&minors[first[i - 1] - 1].pow(-vw.coord(i)))
            })
        })
        .collect()
}

pub fn check_against_chart(cd: &CartanData, dw: &DoubleWord) -> Result<ChartConsistency> {
    let aw = dw.anchor_weights(cd);
    let (fixed, first) = dw.fixed_set_and_first_occurrence(cd);
    let anchors_ok = (1..=cd.rank)
        .all(|i| weyl::apply_unchecked(cd, dw.u(), aw.gamma(first[i - 1])) == cd.omega(i));
    let p = hh_monomials(cd, dw);
    let torus_parts_ok = (1..=cd.rank).all(|j| {
        let w = cd.omega(j);
        let target = &weyl::apply_unchecked(cd, dw.u(), &w) + &weyl::apply_unchecked(cd, dw.v(), &w);
        p[j - 1].torus_exp == target
    });
    let lat = huv_lattice(cd, dw.u(), dw.v())?;
    let minors = chart::all_minor_exponents(cd, dw);
    let mut rows: Vec<Vec<i64>> = lat
        .annihilator
        .iter()
        .map(|mu| {
            (1..=cd.rank)
                .fold(LaurentMonomial::unit(cd.rank, dw.m()), |acc, j| acc.mul(&p[j - 1].pow(mu.coord(j))))
                .exponent_vector()
        })
        .collect();
    rows.extend(fixed.iter().map(|&j| minors[dw.m() + j - 1].exponent_vector()));
    let degrees_of_freedom = cd.rank + dw.m() - intlin::rank(&rows);
    Ok(ChartConsistency {
        anchors_ok,
        torus_parts_ok,
        degrees_of_freedom,
        leaf_dimension: leaf_dimension(cd, dw.u(), dw.v())?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LeafReport {
    pub dimension: usize,
    pub components: u64,
    pub lattice: SubtorusLattice,
    pub component_data: ComponentData,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraints: Option<LeafConstraintSystem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart_consistency: Option<ChartConsistency>,
}

/// Everything the `leaf` command reports; the constraint system needs a
/// double word, so it is attached only when one is given.
pub fn leaf_report(
    cd: &CartanData,
    u: &WeylWord,
    v: &WeylWord,
    dw: Option<&DoubleWord>,
) -> Result<LeafReport> {
    let lattice = huv_lattice(cd, u, v)?;
    let component_data = component_data(cd, u, v)?;
    let (constraints, chart_consistency) = match dw {
        Some(dw) => (Some(leaf_constraints(cd, dw)), Some(check_against_chart(cd, dw)?)),
        None => (None, None),
    };
    Ok(LeafReport {
        dimension: leaf_dimension(cd, u, v)?,
        components: component_data.count,
        lattice,
        component_data,
        constraints,
        chart_consistency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn cd(tag: &str) -> CartanData {
        CartanData::parse(tag).unwrap()
    }

    fn w(s: &str) -> WeylWord {
        s.parse().unwrap()
    }

    #[test]
    fn lattice_examples() {
        let a1 = cd("A1");
        let lat = huv_lattice(&a1, &w(""), &w("1")).unwrap();
        assert_eq!(lat.image_gens, vec![vec![-2]]);
        assert_eq!(lat.dim, 1);
        assert!(lat.annihilator.is_empty());
        assert!(membership_huv(&lat, &[frac(7, 3)]).unwrap());

        let a3 = cd("A3");
        let w0 = weyl::longest_element(&a3);
        let lat = huv_lattice(&a3, &w0, &w0).unwrap();
        assert_eq!(lat.dim, 0);
        assert_eq!(lat.annihilator.len(), 3);
        assert!(membership_huv(&lat, &[int(1), int(1), int(1)]).unwrap());
        assert!(!membership_huv(&lat, &[int(1), int(-1), int(1)]).unwrap());
        assert!(membership_huv(&lat, &[int(1), int(0), int(1)]).is_err());
        assert!(membership_huv(&lat, &[int(1)]).is_err());
    }

    #[test]
    fn membership_is_invariant_under_the_image() {
        let b3 = cd("B3");
        let (u, v) = (w("1,2"), w("3,2,3"));
        let lat = huv_lattice(&b3, &u, &v).unwrap();
        assert_eq!(lat.dim + lat.annihilator.len(), 3);
        // b^{ω_j} = a^{(v−u)ω_j} for a with characters (2, 1/3, -5)
        let a = [int(2), frac(1, 3), int(-5)];
        let b: Vec<Rational> = (1..=3).map(|j| character(&a, &lat.image_of(&b3.omega(j)))).collect();
        assert!(membership_huv(&lat, &b).unwrap());
    }

    #[test]
    fn dimensions() {
        let a2 = cd("A2");
        let w0 = weyl::longest_element(&a2);
        assert_eq!(leaf_dimension(&a2, &w0, &w0).unwrap(), 6);
        for n in 2..=5 {
            let c = CartanData::sl(n).unwrap();
            let w0 = weyl::longest_element(&c);
            assert_eq!(leaf_dimension(&c, &w0, &w0).unwrap(), n * (n - 1));
        }
        assert_eq!(leaf_dimension(&a2, &w(""), &w("")).unwrap(), 0);
        assert_eq!(leaf_dimension(&cd("A1"), &w(""), &w("1")).unwrap(), 2);
    }

    #[test]
    fn components() {
        let a2 = cd("A2");
        let w0 = weyl::longest_element(&a2);
        assert_eq!(component_data(&a2, &w0, &w0).unwrap().count, 1);
        let c = component_data(&cd("A1"), &w(""), &w("")).unwrap();
        assert_eq!(c.count, 2);
        assert_eq!(c.sigma_reps, vec![vec![1], vec![-1]]);
        assert_eq!(component_data(&cd("A3"), &w(""), &w("")).unwrap().count, 8);
        let c = component_data(&cd("A3"), &w("1"), &w("3")).unwrap();
        assert_eq!(c.fixed, vec![2]);
        assert_eq!(c.count, 2);
    }

    #[test]
    fn constraint_examples() {
        let a2 = cd("A2");
        let dw = DoubleWord::parse(&a2, "").unwrap();
        let sys = leaf_constraints(&a2, &dw);
        assert_eq!(
            sys.constraints,
            vec![LeafConstraint::Unit { j: 1, index: 1 }, LeafConstraint::Unit { j: 2, index: 2 }]
        );

        let a1 = cd("A1");
        let dw = DoubleWord::parse(&a1, "1,1b").unwrap();
        let sys = leaf_constraints(&a1, &dw);
        assert_eq!(
            sys.constraints,
            vec![LeafConstraint::Monomial { j: 1, index: 3, param: Weight(vec![-1]), factors: vec![(1, 1)] }]
        );

        let dw = DoubleWord::double_from_reduced(&a2, &w("1,2,1")).unwrap();
        let sys = leaf_constraints(&a2, &dw);
        assert_eq!(sys.constraints.len(), 2);
        assert!(sys.constraints.iter().all(|c| matches!(c, LeafConstraint::Monomial { .. })));
        for k in sys.referenced() {
            assert!(k > sys.m || sys.first_occurrence.contains(&k));
        }
    }

    #[test]
    fn chart_consistency() {
        for (tag, word) in [
            ("A1", "1,1b"),
            ("A1", ""),
            ("A2", "1b,2,1"),
            ("A3", "1,2b,2,3b,3,2,1b"),
            ("B2", "1,2b"),
            ("C3", "3b,1,2,3,2b,1b"),
            ("G2", "2,1b,1,2b,2,1"),
            ("D4", "4,2b,1,3"),
        ] {
            let c = cd(tag);
            let dw = DoubleWord::parse(&c, word).unwrap();
            let rep = check_against_chart(&c, &dw).unwrap();
            assert!(rep.pass(), "{tag} {word}: {rep:?}");
        }
    }
}
