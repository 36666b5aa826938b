//! Integer linear algebra: Smith normal form with unimodular transforms,
//! rank, and saturated kernels.

/// `U · A · V = S` with `U`, `V` unimodular and `S` diagonal, each nonzero
/// diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: Vec<Vec<i64>>,
    pub s: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub rank: usize,
}

impl Smith {
    pub fn invariants(&self) -> Vec<i64> {
        (0..self.rank).map(|i| self.s[i][i]).collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

// col_b -= q col_a
fn sub_col(m: &mut [Vec<i64>], a: usize, b: usize, q: i64) {
    for row in m.iter_mut() {
        row[b] -= q * row[a];
    }
}

fn sub_row(m: &mut [Vec<i64>], a: usize, b: usize, q: i64) {
    let ra = m[a].clone();
    for (x, y) in m[b].iter_mut().zip(ra) {
        *x -= q * y;
    }
}

fn negate_row(m: &mut [Vec<i64>], a: usize) {
    m[a].iter_mut().for_each(|x| *x = -*x);
}

/// Smith normal form of a `rows × cols` integer matrix.
pub fn smith(a: &[Vec<i64>]) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut s: Vec<Vec<i64>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| s[i][j] != 0)
            .min_by_key(|&(i, j)| s[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        s.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut s, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in (t + 1)..rows {
            let q = s[i][t].div_euclid(s[t][t]);
            sub_row(&mut s, t, i, q);
            sub_row(&mut u, t, i, q);
            clean &= s[i][t] == 0;
        }
        for j in (t + 1)..cols {
            let q = s[t][j].div_euclid(s[t][t]);
            sub_col(&mut s, t, j, q);
            sub_col(&mut v, t, j, q);
            clean &= s[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let d = s[t][t];
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| s[i][j] % d != 0));
        if let Some(i) = bad {
            // row t += row i, then redo this pivot
            sub_row(&mut s, i, t, -1);
            sub_row(&mut u, i, t, -1);
            continue;
        }
        if d < 0 {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    let rank = (0..rows.min(cols)).take_while(|&i| s[i][i] != 0).count();
    Smith { u, s, v, rank }
}

pub fn rank(a: &[Vec<i64>]) -> usize {
    if a.is_empty() {
        0
    } else {
        smith(a).rank
    }
}

/// A basis of `{x ∈ Z^cols : A x = 0}`; the basis is primitive, so the
/// lattice it spans is saturated.
pub fn kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    if a.is_empty() {
        return identity(cols);
    }
    let sm = smith(a);
    (sm.rank..cols).map(|j| sm.v.iter().map(|row| row[j]).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}
