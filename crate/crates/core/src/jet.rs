//! First-order jets over exact rationals: a value plus sparse partial
//! derivatives with respect to the entries `x_ij` of a matrix.

use std::collections::BTreeMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::matrix::{Matrix, RationalMatrix, Scalar};
use crate::rational::Rational;

/// 0-based matrix position `(row, col)`.
pub type Entry = (usize, usize);

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    pub value: Rational,
    pub partials: BTreeMap<Entry, Rational>,
}

impl Jet {
    pub fn constant(value: Rational) -> Self {
        Jet { value, partials: BTreeMap::new() }
    }

    /// The coordinate function `x_pos` evaluated at `value`.
    pub fn variable(value: Rational, pos: Entry) -> Self {
        let mut partials = BTreeMap::new();
        partials.insert(pos, Rational::one());
        Jet { value, partials }
    }

    pub fn partial(&self, pos: Entry) -> Rational {
        self.partials.get(&pos).cloned().unwrap_or_else(Rational::zero)
    }

    fn scaled_partials(&self, c: &Rational) -> BTreeMap<Entry, Rational> {
        if c.is_zero() {
            return BTreeMap::new();
        }
        self.partials.iter().map(|(k, v)| (*k, v * c)).collect()
    }

    fn merge(mut a: BTreeMap<Entry, Rational>, b: BTreeMap<Entry, Rational>) -> BTreeMap<Entry, Rational> {
        for (k, v) in b {
            let e = a.entry(k).or_insert_with(Rational::zero);
            *e += v;
            if e.is_zero() {
                a.remove(&k);
            }
        }
        a
    }

    pub fn recip(&self) -> Jet {
        let inv = self.value.recip();
        let c = -(&inv * &inv);
        Jet { value: inv, partials: self.scaled_partials(&c) }
    }

    pub fn powi(&self, e: i64) -> Jet {
        let base = if e < 0 { self.recip() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Jet::one(), |acc, _| acc * base.clone())
    }
}

/// Seeds every entry of `x` as an independent variable.
pub fn seed_matrix(x: &RationalMatrix) -> Matrix<Jet> {
    let n = x.size();
    let mut out = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, Jet::variable(x.get(i, j).clone(), (i, j)));
        }
    }
    out
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet { value: self.value + o.value, partials: Jet::merge(self.partials, o.partials) }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            value: -self.value,
            partials: self.partials.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let p = Jet::merge(self.scaled_partials(&o.value), o.scaled_partials(&self.value));
        Jet { value: self.value * o.value, partials: p }
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

impl Zero for Jet {
    fn zero() -> Self {
        Jet::constant(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.partials.is_empty()
    }
}

impl One for Jet {
    fn one() -> Self {
        Jet::constant(Rational::one())
    }
}

impl Scalar for Jet {
    fn is_invertible(&self) -> bool {
        !self.value.is_zero()
    }

    fn from_rational(q: &Rational) -> Self {
        Jet::constant(q.clone())
    }
}
