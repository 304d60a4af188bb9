//! Smith normal form over the integers.
//!
//! Elimination runs on checked `i64` first; if any intermediate value would
//! overflow, the whole matrix is redone over `BigInt`. Only the diagonal is
//! kept (no transforms), which is all homology needs.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// `self * other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).checked_add(a.checked_mul(other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Rank and nonzero invariant factors `d_1 | d_2 | ... | d_r` (positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    /// `self - q * b`, `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn to_abs(&self) -> BigUint;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn to_abs(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn to_abs(&self) -> BigUint {
        self.magnitude().clone()
    }
}

struct Dense<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    fn at(&self, r: usize, c: usize) -> &T {
        &self.a[r * self.cols + c]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 != r2 {
            for c in 0..self.cols {
                self.a.swap(r1 * self.cols + c, r2 * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 != c2 {
            for r in 0..self.rows {
                self.a.swap(r * self.cols + c1, r * self.cols + c2);
            }
        }
    }

    /// row[target] -= q * row[src], starting at column `from`.
    fn row_op(&mut self, target: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for c in from..self.cols {
            let s = self.at(src, c).clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + c;
            self.a[idx] = self.a[idx].sub_mul(q, &s)?;
        }
        Some(())
    }

    /// col[target] -= q * col[src], starting at row `from`.
    fn col_op(&mut self, target: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for r in from..self.rows {
            let s = self.at(r, src).clone();
            if s.is_zero() {
                continue;
            }
            let idx = r * self.cols + target;
            self.a[idx] = self.a[idx].sub_mul(q, &s)?;
        }
        Some(())
    }

    /// Smallest nonzero magnitude in the trailing block; stops early on a unit.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                if v.is_unit() {
                    return Some((r, c));
                }
                if best.is_none_or(|(br, bc)| v.cmp_abs(self.at(br, bc)) == Ordering::Less) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    /// Diagonalizes in place and returns the nonzero diagonal entries.
    fn diagonalize(mut self) -> Option<Vec<T>> {
        let mut diag = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pr, pc)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                let p = self.at(t, t).clone();
                for r in t + 1..self.rows {
                    if !self.at(r, t).is_zero() {
                        let q = self.at(r, t).quot(&p);
                        self.row_op(r, t, &q, t)?;
                    }
                }
                for c in t + 1..self.cols {
                    if !self.at(t, c).is_zero() {
                        let q = self.at(t, c).quot(&p);
                        self.col_op(c, t, &q, t)?;
                    }
                }
                // Remainders smaller than the pivot may be left behind; promote the smallest.
                let mut smaller: Option<(usize, usize)> = None;
                for r in t + 1..self.rows {
                    if !self.at(r, t).is_zero()
                        && smaller.is_none_or(|(sr, sc)| self.at(r, t).cmp_abs(self.at(sr, sc)) == Ordering::Less)
                    {
                        smaller = Some((r, t));
                    }
                }
                for c in t + 1..self.cols {
                    if !self.at(t, c).is_zero()
                        && smaller.is_none_or(|(sr, sc)| self.at(t, c).cmp_abs(self.at(sr, sc)) == Ordering::Less)
                    {
                        smaller = Some((t, c));
                    }
                }
                match smaller {
                    None => break,
                    Some((r, c)) => {
                        self.swap_rows(t, r);
                        self.swap_cols(t, c);
                    }
                }
            }
            diag.push(self.at(t, t).clone());
            t += 1;
        }
        Some(diag)
    }
}

/// Turns any diagonal form into the invariant-factor chain.
fn normalize(mut d: Vec<BigUint>) -> Vec<BigUint> {
    let units = d.iter().filter(|x| x.is_one()).count();
    d.retain(|x| !x.is_one());
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    // gcd steps can create new units; the chain keeps them in front.
    let mut out = vec![BigUint::one(); units];
    out.extend(d);
    out
}

pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let small = Dense { rows: m.rows, cols: m.cols, a: m.data.clone() };
    let diag: Vec<BigUint> = match small.diagonalize() {
        Some(d) => d.iter().map(Scalar::to_abs).collect(),
        None => {
            let big = Dense {
                rows: m.rows,
                cols: m.cols,
                a: m.data.iter().map(|&x| BigInt::from(x)).collect(),
            };
            big.diagonalize()
                .expect("bigint elimination cannot overflow")
                .iter()
                .map(Scalar::to_abs)
                .collect()
        }
    };
    SmithForm { invariants: normalize(diag) }
}
